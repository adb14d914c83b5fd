//! Properness and cocompactness tests.
//!
//! Catalog-level tests compare real ranks, a-hyperbolic ranks and the
//! `d`-invariant of descriptors; they can only ever find obstructions. The
//! embedded test decides properness exactly for explicitly given split
//! subspaces `a_h, a_l ⊂ a` by checking `w·a_l ∩ a_h = {0}` for every `w` in
//! the Weyl group.
//!
//! The embedded test trusts its caller: `a_h` and `a_l` must already be the
//! maximally split abelian subspaces of the two subgroups, conjugated into
//! the common `a`. Nothing here can verify that.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::catalog::{derived_invariants, ReductiveDescriptor};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational, RationalVector};
use crate::rootspace::RootSystem;
use crate::weyl::{self, WeylElement};

/// Largest absolute entry accepted in the integer coweight coordinates of a
/// spanning vector. Orbit images stay within a small multiple of this, well
/// inside `i64`.
const MAX_COORDINATE: i64 = 1 << 40;

/// A subspace of `a` given by spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    spanning: Vec<RationalVector>,
    basis: Vec<RationalVector>,
}

impl Subspace {
    /// Validates every vector against `system` and caches a basis: the
    /// spanning vectors not in the span of earlier ones.
    pub fn new(system: &RootSystem, spanning: Vec<RationalVector>) -> Result<Self> {
        for v in &spanning {
            system.check_vector(v)?;
        }
        let basis = linalg::independent_subset(&spanning).into_iter().map(|i| spanning[i].clone()).collect();
        Ok(Self { ambient_dim: system.ambient_dim(), spanning, basis })
    }

    /// Parses the subspace file format: one vector per line; `#` starts a comment.
    pub fn parse(system: &RootSystem, text: &str) -> Result<Self> {
        let mut vectors = Vec::new();
        for (number, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v = RationalVector::parse(line)
                .map_err(|e| Error::Parse(format!("line {}: {e}", number + 1)))?;
            vectors.push(v);
        }
        Self::new(system, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn spanning_vectors(&self) -> &[RationalVector] {
        &self.spanning
    }

    pub fn basis(&self) -> &[RationalVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// One inequality or equality with exact sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overall {
    ObstructionFound,
    NoObstruction,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::ObstructionFound => "ObstructionFound",
            Overall::NoObstruction => "NoObstruction",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropernessReport {
    pub checks: Vec<Check>,
    pub overall: Overall,
}

impl PropernessReport {
    fn from_checks(checks: Vec<Check>) -> Self {
        let overall =
            if checks.iter().all(|c| c.passed) { Overall::NoObstruction } else { Overall::ObstructionFound };
        Self { checks, overall }
    }
}

fn at_most(name: &str, lhs: usize, rhs: usize) -> Check {
    Check { name: name.to_string(), lhs: lhs as i64, rhs: rhs as i64, passed: lhs <= rhs }
}

/// `rank_R(l) + rank_R(h) <= rank_R(g)` and the same for a-hyperbolic rank.
/// Passing both only means these tests find no obstruction.
pub fn necessary_conditions(
    g: &ReductiveDescriptor,
    h: &ReductiveDescriptor,
    l: &ReductiveDescriptor,
) -> PropernessReport {
    let (g, h, l) = (derived_invariants(g), derived_invariants(h), derived_invariants(l));
    PropernessReport::from_checks(vec![
        at_most("real_rank", l.real_rank + h.real_rank, g.real_rank),
        at_most("ahyp_rank", l.ahyp + h.ahyp, g.ahyp),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    pub d_g: usize,
    pub d_h: usize,
    pub d_l: usize,
    /// `d(g) - d(h)`, the value `d(l)` must take.
    pub required_d_l: i64,
    pub equal: bool,
}

impl DimensionCheck {
    pub fn as_check(&self) -> Check {
        Check {
            name: "d_equality".to_string(),
            lhs: (self.d_l + self.d_h) as i64,
            rhs: self.d_g as i64,
            passed: self.equal,
        }
    }
}

/// Whether `d(l) + d(h) = d(g)`, the compactness condition for `L\G/H` once
/// the action is known to be proper.
pub fn cocompact_dimension_check(
    g: &ReductiveDescriptor,
    h: &ReductiveDescriptor,
    l: &ReductiveDescriptor,
) -> DimensionCheck {
    let (d_g, d_h, d_l) = (derived_invariants(g).d, derived_invariants(h).d, derived_invariants(l).d);
    DimensionCheck { d_g, d_h, d_l, required_d_l: d_g as i64 - d_h as i64, equal: d_l + d_h == d_g }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddedVerdict {
    Proper,
    /// `element` is the first `w` in canonical order with `w·a_l ∩ a_h ≠ 0`;
    /// `witness` is a nonzero vector of that intersection.
    NotProper { w_index: u64, element: WeylElement, witness: RationalVector },
}

impl EmbeddedVerdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, EmbeddedVerdict::Proper)
    }
}

/// Integer coordinates `⟨v, α_i^∨⟩`, scaled to a primitive vector. A linear
/// isomorphism on the root span, so ranks are preserved.
fn coweight_coordinates(system: &RootSystem, v: &RationalVector) -> Result<Vec<i64>> {
    let pairing = RationalVector::new(system.coroot_pairings(v));
    pairing
        .primitive_integer()
        .iter()
        .map(|x: &BigInt| x.to_i64().filter(|x| x.abs() <= MAX_COORDINATE))
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| Error::Parse(format!("coordinates of {v} are too large")))
}

/// Applies `s_j` to a vector in coweight coordinates.
fn reflect_coordinates(cartan: &[Vec<i64>], y: &[i64], j: usize) -> Vec<i64> {
    let yj = y[j];
    y.iter().enumerate().map(|(i, &yi)| yi - yj * cartan[i][j]).collect()
}

/// Decides `w·a_l ∩ a_h = {0}` for all `w ∈ W` by exact rank tests.
///
/// Internally the walk carries `w⁻¹·a_h` in integer coordinates, using
/// `rank[a_h | w·a_l] = rank[w⁻¹·a_h | a_l]`. On the first failure the
/// witness is read off the kernel of `[basis(a_h) | w·basis(a_l)]`.
pub fn check_proper_embedded(
    system: &RootSystem,
    a_h: &Subspace,
    a_l: &Subspace,
    cap: u64,
) -> Result<EmbeddedVerdict> {
    for s in [a_h, a_l] {
        if s.ambient_dim() != system.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: system.ambient_dim(), found: s.ambient_dim() });
        }
    }
    let (p, q) = (a_h.dim(), a_l.dim());
    if p == 0 || q == 0 {
        return Ok(EmbeddedVerdict::Proper);
    }
    if p + q > system.rank() {
        // Too many dimensions for a trivial intersection; the identity fails.
        return Ok(offender(system, a_h, a_l, 0, &[]));
    }
    let order = system.weyl_order();
    if order > cap as u128 {
        return Err(Error::CapExceeded { order, cap });
    }
    let h_coords: Vec<Vec<i64>> =
        a_h.basis().iter().map(|v| coweight_coordinates(system, v)).collect::<Result<_>>()?;
    let l_coords: Vec<Vec<i64>> =
        a_l.basis().iter().map(|v| coweight_coordinates(system, v)).collect::<Result<_>>()?;
    let cartan = system.cartan_matrix();
    let found = weyl::walk(
        system,
        h_coords,
        |images, j| images.iter().map(|y| reflect_coordinates(cartan, y, j)).collect(),
        |index, word, images| {
            let rows: Vec<Vec<i64>> = images.iter().chain(l_coords.iter()).cloned().collect();
            if linalg::integer_rank(&rows) < p + q {
                ControlFlow::Break((index, word.to_vec()))
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    Ok(match found {
        None => EmbeddedVerdict::Proper,
        Some((index, word)) => offender(system, a_h, a_l, index, &word),
    })
}

fn offender(system: &RootSystem, a_h: &Subspace, a_l: &Subspace, w_index: u64, word: &[usize]) -> EmbeddedVerdict {
    let element = WeylElement::from_word(system, word);
    let p = a_h.dim();
    let moved: Vec<RationalVector> = a_l.basis().iter().map(|v| element.apply(v)).collect();
    let columns: Vec<RationalVector> = a_h.basis().iter().cloned().chain(moved.iter().cloned()).collect();
    let x = linalg::kernel(&columns).into_iter().next().expect("rank deficiency gives a kernel vector");
    let witness = moved
        .iter()
        .zip(&x[p..])
        .fold(RationalVector::zeros(system.ambient_dim()), |acc, (v, c): (&RationalVector, &Rational)| {
            acc.add_scaled(c, v)
        });
    EmbeddedVerdict::NotProper { w_index, element, witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodalReport {
    pub antipodal: bool,
    pub dominant_rep: RationalVector,
}

/// Whether the orbit through `x` is antipodal, with its dominant
/// representative as the orbit's name.
pub fn antipodal_orbit_check(system: &RootSystem, x: &RationalVector) -> Result<AntipodalReport> {
    let dominant_rep = weyl::dominant_representative(system, x)?;
    let antipodal = weyl::dominant_representative(system, &-x)? == dominant_rep;
    Ok(AntipodalReport { antipodal, dominant_rep })
}
