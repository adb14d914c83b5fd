//! Search for reductive `L` that could give a standard compact quotient
//! `Γ\G/H`: `L` must act properly, so its real and a-hyperbolic ranks fit in
//! what `H` leaves of `g`, its compact part embeds in that of `g`, and
//! `d(L) = d(G) - d(H)`.
//!
//! Writing `l = c_l + [l,l]`, the derived part is a sum of catalog forms and
//! the split center adds anything from `0` to the unused real rank to `d`.
//! Each candidate therefore covers an interval of `d` values. If no interval
//! contains the required value, `G/H` has no standard compact Clifford–Klein
//! form. Otherwise the answer is inconclusive: the engine never asserts that
//! a form exists, since it does not check that candidates embed in `g`.
//!
//! Compact factors of `l` are ignored. They add nothing to `d` or to the
//! ranks, so dropping them only enlarges the candidate set.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;

use crate::catalog::{self, derived_invariants, ReductiveDescriptor, SimpleRealForm};
use crate::error::{Error, Result};

/// Used amount and limit of one budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub used: usize,
    pub limit: usize,
}

impl Budget {
    fn fits(&self) -> bool {
        self.used <= self.limit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub ahyp: Budget,
    pub real_rank: Budget,
    pub rank_maxcompact: Budget,
    pub dim_p: Budget,
    pub dim_g: Budget,
}

impl Budgets {
    fn fits(&self) -> bool {
        [self.ahyp, self.real_rank, self.rank_maxcompact, self.dim_p, self.dim_g].iter().all(Budget::fits)
    }
}

/// A possible derived part `[l,l]` with the range of `d(L)` it allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateReport {
    pub derived_parts: Vec<SimpleRealForm>,
    /// `[dim p_0, dim p_0 + c_max]`.
    pub d_interval: (usize, usize),
    pub budgets: Budgets,
}

impl CandidateReport {
    pub fn contains(&self, d: i64) -> bool {
        let (lo, hi) = self.d_interval;
        lo as i64 <= d && d <= hi as i64
    }

    pub fn descriptor(&self) -> ReductiveDescriptor {
        ReductiveDescriptor { noncompact: self.derived_parts.clone(), ..ReductiveDescriptor::default() }
    }

    pub fn label(&self) -> String {
        self.descriptor().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoStandardForm,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoStandardForm => "NoStandardForm",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormVerdict {
    pub required_d: i64,
    pub verdict: Verdict,
    pub max_achievable: usize,
    /// Candidates whose interval contains `required_d`, by `hi` descending.
    pub witnesses: Vec<CandidateReport>,
    /// Every candidate, by `hi` descending.
    pub candidates: Vec<CandidateReport>,
}

/// Limits that `l` inherits from `g` and `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Limits {
    ahyp: usize,
    real_rank: usize,
    rank_maxcompact: usize,
    dim_p: usize,
    dim_g: usize,
}

fn limits(g: &SimpleRealForm, h: &ReductiveDescriptor) -> Result<Limits> {
    let gi = g.attributes();
    let hi = derived_invariants(h);
    let over = |what: &str, hv: usize, gv: usize| {
        Error::SpaceObstruction(format!("{what} of h ({hv}) exceeds that of g ({gv})"))
    };
    if hi.ahyp > gi.ahyp {
        return Err(over("a-hyperbolic rank", hi.ahyp, gi.ahyp));
    }
    if hi.real_rank > gi.real_rank {
        return Err(over("real rank", hi.real_rank, gi.real_rank));
    }
    if hi.d > gi.dim_p {
        return Err(over("d", hi.d, gi.dim_p));
    }
    Ok(Limits {
        ahyp: gi.ahyp - hi.ahyp,
        real_rank: gi.real_rank - hi.real_rank,
        rank_maxcompact: gi.rank_maxcompact,
        dim_p: gi.dim_p - hi.d,
        dim_g: gi.dim_g,
    })
}

fn simple_target(g: &ReductiveDescriptor) -> Result<&SimpleRealForm> {
    g.as_simple().ok_or_else(|| Error::NotSimple(g.to_string()))
}

/// Catalog forms that could be a simple part of `[l,l]`, in canonical order.
pub fn candidate_simple_parts(g: &ReductiveDescriptor, h: &ReductiveDescriptor) -> Result<Vec<SimpleRealForm>> {
    let g = simple_target(g)?;
    let lim = limits(g, h)?;
    Ok(simple_parts_within(&lim))
}

fn simple_parts_within(lim: &Limits) -> Vec<SimpleRealForm> {
    catalog::forms_with_maxcompact_rank_at_most(lim.rank_maxcompact)
        .into_iter()
        .filter(|s| {
            s.real_rank() <= lim.real_rank
                && s.dim_p() <= lim.dim_p
                && s.dim_g() <= lim.dim_g
                && s.ahyp() <= lim.ahyp
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Usage {
    ahyp: usize,
    real_rank: usize,
    rank_maxcompact: usize,
    dim_p: usize,
    dim_g: usize,
}

impl Usage {
    fn plus(&self, s: &SimpleRealForm) -> Self {
        Self {
            ahyp: self.ahyp + s.ahyp(),
            real_rank: self.real_rank + s.real_rank(),
            rank_maxcompact: self.rank_maxcompact + s.rank_maxcompact(),
            dim_p: self.dim_p + s.dim_p(),
            dim_g: self.dim_g + s.dim_g(),
        }
    }

    fn budgets(&self, lim: &Limits) -> Budgets {
        let b = |used, limit| Budget { used, limit };
        Budgets {
            ahyp: b(self.ahyp, lim.ahyp),
            real_rank: b(self.real_rank, lim.real_rank),
            rank_maxcompact: b(self.rank_maxcompact, lim.rank_maxcompact),
            dim_p: b(self.dim_p, lim.dim_p),
            dim_g: b(self.dim_g, lim.dim_g),
        }
    }
}

/// Every reachable combination of budget usages, each represented by the
/// first multiset of simple parts (in breadth-first order) that reaches it.
///
/// Multisets with equal usage are interchangeable for every test here, and
/// keeping one per usage keeps the search polynomial in the budgets.
pub fn candidate_combinations(g: &ReductiveDescriptor, h: &ReductiveDescriptor) -> Result<Vec<CandidateReport>> {
    let g = simple_target(g)?;
    let lim = limits(g, h)?;
    Ok(combinations_within(&lim))
}

fn combinations_within(lim: &Limits) -> Vec<CandidateReport> {
    let parts = simple_parts_within(lim);
    let zero = Usage { ahyp: 0, real_rank: 0, rank_maxcompact: 0, dim_p: 0, dim_g: 0 };
    let mut seen: HashMap<Usage, usize> = HashMap::new();
    let mut found: Vec<(Usage, Vec<usize>)> = vec![(zero, Vec::new())];
    seen.insert(zero, 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &at in &frontier {
            let (usage, members) = found[at].clone();
            for (i, part) in parts.iter().enumerate() {
                let grown = usage.plus(part);
                if !grown.budgets(lim).fits() || seen.contains_key(&grown) {
                    continue;
                }
                let mut multiset = members.clone();
                multiset.push(i);
                multiset.sort_unstable();
                seen.insert(grown, found.len());
                next.push(found.len());
                found.push((grown, multiset));
            }
        }
        frontier = next;
    }
    found
        .into_iter()
        .map(|(usage, members)| {
            let c_max = lim.real_rank - usage.real_rank;
            CandidateReport {
                derived_parts: members.iter().map(|&i| parts[i].clone()).collect(),
                d_interval: (usage.dim_p, usage.dim_p + c_max),
                budgets: usage.budgets(lim),
            }
        })
        .collect()
}

/// Decides whether `d(L) = d(G) - d(H)` is reachable by any candidate.
pub fn standard_form_verdict(g: &ReductiveDescriptor, h: &ReductiveDescriptor) -> Result<StandardFormVerdict> {
    let g_form = simple_target(g)?;
    let lim = limits(g_form, h)?;
    let required_d = g_form.dim_p() as i64 - derived_invariants(h).d as i64;
    let mut candidates = combinations_within(&lim);
    candidates.sort_by_key(|c| (Reverse(c.d_interval.1), Reverse(c.d_interval.0), c.derived_parts.len()));
    let max_achievable = candidates.iter().map(|c| c.d_interval.1).max().unwrap_or(0);
    let witnesses: Vec<CandidateReport> = candidates.iter().filter(|c| c.contains(required_d)).cloned().collect();
    let verdict = if witnesses.is_empty() { Verdict::NoStandardForm } else { Verdict::Inconclusive };
    Ok(StandardFormVerdict { required_d, verdict, max_achievable, witnesses, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_descriptor;

    fn desc(text: &str) -> ReductiveDescriptor {
        parse_descriptor(text).unwrap()
    }

    fn names(forms: &[SimpleRealForm]) -> Vec<String> {
        forms.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn simple_parts_for_so_family_k5() {
        let parts = candidate_simple_parts(&desc("sl(11,R)"), &desc("so(4,7)")).unwrap();
        assert!(parts.iter().all(|s| s.real_rank() <= 2));
        let names = names(&parts);
        assert!(names.contains(&"f4(-20)".to_string()));
        assert!(names.contains(&"e6(-26)".to_string()));
        assert!(!names.contains(&"so(5,5)".to_string()));
    }

    #[test]
    fn combination_intervals() {
        let combos = candidate_combinations(&desc("sl(11,R)"), &desc("so(4,7)")).unwrap();
        let interval = |label: &str| combos.iter().find(|c| c.label() == label).map(|c| c.d_interval);
        assert_eq!(interval("e6(-26)"), Some((26, 30)));
        assert_eq!(interval("sl(3,R)"), Some((5, 9)));
        assert_eq!(interval("0"), Some((0, 6)));
        assert!(combos.iter().all(|c| c.derived_parts.len() <= 1));
    }

    #[test]
    fn verdicts() {
        let v = standard_form_verdict(&desc("sl(11,R)"), &desc("so(4,7)")).unwrap();
        assert_eq!((v.verdict, v.required_d, v.max_achievable), (Verdict::NoStandardForm, 37, 30));
        assert!(v.witnesses.is_empty());

        let v = standard_form_verdict(&desc("sl(11,R)"), &desc("sp(4,R)")).unwrap();
        assert_eq!((v.verdict, v.required_d), (Verdict::NoStandardForm, 45));

        let v = standard_form_verdict(&desc("sl(9,R)"), &desc("so(3,6)")).unwrap();
        assert_eq!((v.verdict, v.required_d), (Verdict::Inconclusive, 26));
        let w = v.witnesses.iter().find(|c| c.label() == "e6(-26)").unwrap();
        assert_eq!(w.d_interval, (26, 29));
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            standard_form_verdict(&desc("sl(3,R)+sl(3,R)"), &desc("")),
            Err(Error::NotSimple(_))
        ));
        assert!(matches!(
            standard_form_verdict(&desc("sl(3,R)"), &desc("so(5,5)")),
            Err(Error::SpaceObstruction(_))
        ));
    }
}
