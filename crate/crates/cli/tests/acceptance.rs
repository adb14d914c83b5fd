//! Acceptance gate: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero if any criterion fails or overruns.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyprank::catalog::{
    forms_with_maxcompact_rank_at_most, rank_gap_exceptions, rank_gap_rows, RankGapFamily, SimpleRealForm,
};
use hyprank::criteria::{check_proper_embedded, necessary_conditions, EmbeddedVerdict, Overall, Subspace};
use hyprank::linalg::{is_nonnegative, rank, rational};
use hyprank::obstruction::{candidate_simple_parts, standard_form_verdict, Verdict};
use hyprank::weyl::{self, DEFAULT_CAP};
use hyprank::{
    build_root_system, parse_descriptor, CartanType, RationalVector, ReductiveDescriptor, RootSystem, TypeLetter,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn system(letter: TypeLetter, n: usize) -> RootSystem {
    build_root_system(letter, n).expect("supported system")
}

fn desc(text: &str) -> ReductiveDescriptor {
    parse_descriptor(text).expect("valid descriptor")
}

/// Tabulated `(ahyp, real rank)` for each rank-gap family.
fn tabulated(family: RankGapFamily, k: usize) -> (usize, usize) {
    match family {
        RankGapFamily::SlEven | RankGapFamily::SuStarEven => (k, 2 * k - 1),
        RankGapFamily::SlOdd | RankGapFamily::SuStarOdd => (k, 2 * k),
        RankGapFamily::SoOddSplit => (2 * k, 2 * k + 1),
        RankGapFamily::E6Split => (4, 6),
        RankGapFamily::E6Minus26 => (1, 2),
    }
}

fn criterion_1() -> Outcome {
    let rows = rank_gap_rows(8);
    for row in &rows {
        let got = (row.ahyp, row.real_rank);
        let want = tabulated(row.family, row.k.unwrap_or(0));
        ensure(got == want, || format!("{}: computed {got:?}, tabulated {want:?}", row.form))?;
    }
    let exceptions = rank_gap_exceptions(8);
    ensure(exceptions.is_empty(), || {
        format!("unlisted forms with ahyp != rank: {:?}", exceptions.iter().map(ToString::to_string).collect::<Vec<_>>())
    })?;
    Ok(format!("{} algebras match; no other non-complex form of real rank <= 8 differs", rows.len()))
}

fn rank_seven_systems() -> Vec<(TypeLetter, usize)> {
    use TypeLetter::*;
    let mut out = Vec::new();
    for n in 1..=7 {
        out.push((A, n));
        out.push((BC, n));
        if n >= 2 {
            out.push((B, n));
            out.push((C, n));
        }
        if n >= 3 {
            out.push((D, n));
        }
    }
    out.extend([(G, 2), (F, 4), (E, 6), (E, 7)]);
    out
}

fn criterion_2() -> Outcome {
    let systems = rank_seven_systems();
    for &(letter, n) in &systems {
        let s = system(letter, n);
        let w0 = weyl::longest_element(&s);
        ensure(w0.matrix().mul(w0.matrix()).is_identity(), || format!("{letter}{n}: w0^2 != 1"))?;
        let involution = weyl::minus_w0(&s);
        let simple: BTreeSet<String> = s.simple_roots().iter().map(ToString::to_string).collect();
        let images: BTreeSet<String> = s.simple_roots().iter().map(|a| involution.apply(a).to_string()).collect();
        ensure(simple == images, || format!("{letter}{n}: -w0 does not permute the simple roots"))?;
        let (by_kernel, by_orbits) = (weyl::ahyp_by_kernel(&s), weyl::ahyp_by_orbits(&s));
        ensure(by_kernel == by_orbits, || format!("{letter}{n}: kernel {by_kernel} vs orbits {by_orbits}"))?;
        let full = match letter {
            TypeLetter::B | TypeLetter::C | TypeLetter::BC | TypeLetter::G | TypeLetter::F => true,
            TypeLetter::D => n % 2 == 0,
            TypeLetter::E => n == 7,
            TypeLetter::A => false,
        };
        if full {
            ensure(by_kernel == n, || format!("{letter}{n}: ahyp {by_kernel} != rank"))?;
        }
    }
    Ok(format!("{} systems up to rank 7, E7 included", systems.len()))
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn criterion_3() -> Outcome {
    use TypeLetter::*;
    let mut suite = Vec::new();
    suite.extend((1..=7).map(|n| (A, n, factorial(n as u128 + 1))));
    suite.extend((2..=6).map(|n| (B, n, (1u128 << n) * factorial(n as u128))));
    suite.extend((2..=6).map(|n| (C, n, (1u128 << n) * factorial(n as u128))));
    suite.extend((3..=6).map(|n| (D, n, (1u128 << (n - 1)) * factorial(n as u128))));
    suite.extend((1..=5).map(|n| (BC, n, (1u128 << n) * factorial(n as u128))));
    suite.extend([(G, 2, 12), (F, 4, 1152), (E, 6, 51_840)]);
    for &(letter, n, order) in &suite {
        let s = system(letter, n);
        let counted = weyl::count_weyl(&s, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(counted as u128 == order, || format!("{letter}{n}: counted {counted}, expected {order}"))?;
    }
    for (letter, n) in [(A, 5), (B, 4), (D, 5), (F, 4)] {
        let s = system(letter, n);
        let words = || {
            let mut out = Vec::new();
            weyl::walk::<_, ()>(&s, (), |_, _| (), |_, w, _| {
                out.push(w.to_vec());
                std::ops::ControlFlow::Continue(())
            });
            out
        };
        ensure(words() == words(), || format!("{letter}{n}: canonical order differs between runs"))?;
    }
    Ok(format!("{} groups match closed formulas; order stable across runs", suite.len()))
}

fn is_dominant(s: &RootSystem, v: &RationalVector) -> bool {
    s.simple_roots().iter().all(|a| is_nonnegative(&v.dot(a)))
}

fn random_vector(s: &RootSystem, rng: &mut StdRng) -> RationalVector {
    s.simple_roots().iter().fold(RationalVector::zeros(s.ambient_dim()), |acc, a| {
        acc.add_scaled(&rational(rng.gen_range(-6..=6), rng.gen_range(1..=4)), a)
    })
}

fn criterion_4() -> Outcome {
    use TypeLetter::*;
    let mut rng = StdRng::seed_from_u64(4);
    let mut antipodal_count = 0;
    let mut total = 0;
    for (letter, n) in [(A, 2), (A, 3), (A, 4), (B, 3), (C, 3), (D, 4), (BC, 2)] {
        let s = system(letter, n);
        let group = weyl::enumerate_weyl(&s, 2000).map_err(|e| e.to_string())?;
        let cone = weyl::fixed_cone(&s);
        let w0 = weyl::longest_element(&s);
        for i in 0..200 {
            let mut v = random_vector(&s, &mut rng);
            if i % 2 == 1 {
                v = &v - &w0.apply(&v);
            }
            let rep = weyl::dominant_representative(&s, &v).map_err(|e| e.to_string())?;
            let antipodal = weyl::is_antipodal(&s, &v).map_err(|e| e.to_string())?;
            let in_cone = cone.contains(&rep).map_err(|e| e.to_string())?;
            ensure(antipodal == in_cone, || format!("{letter}{n}: {v} antipodal {antipodal}, in cone {in_cone}"))?;
            let brute: BTreeSet<String> =
                group.iter().map(|w| w.apply(&v)).filter(|x| is_dominant(&s, x)).map(|x| x.to_string()).collect();
            ensure(brute.len() == 1 && brute.contains(&rep.to_string()), || {
                format!("{letter}{n}: {v} has dominant points {brute:?}, representative {rep}")
            })?;
            antipodal_count += usize::from(antipodal);
            total += 1;
        }
    }
    Ok(format!("{total} vectors, {antipodal_count} antipodal; representatives confirmed by full orbits"))
}

fn span(s: &RootSystem, vectors: &[&[i64]]) -> Subspace {
    Subspace::new(s, vectors.iter().map(|c| RationalVector::from_ints(c)).collect()).expect("valid subspace")
}

fn random_subspace(s: &RootSystem, rng: &mut StdRng) -> Subspace {
    loop {
        let count = rng.gen_range(1..=2);
        let vectors: Vec<RationalVector> = (0..count)
            .map(|_| {
                s.simple_roots().iter().fold(RationalVector::zeros(s.ambient_dim()), |acc, a| {
                    acc.add_scaled(&rational(rng.gen_range(-2..=2), 1), a)
                })
            })
            .filter(|v| !v.is_zero())
            .collect();
        if !vectors.is_empty() {
            return Subspace::new(s, vectors).expect("in the root span");
        }
    }
}

fn respan(s: &RootSystem, sub: &Subspace, rng: &mut StdRng) -> Subspace {
    let basis = sub.basis();
    let mut out: Vec<RationalVector> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut v = b.scale(&rational(sign * rng.gen_range(1..=3), rng.gen_range(1..=3)));
        for later in &basis[i + 1..] {
            v = v.add_scaled(&rational(rng.gen_range(-3..=3), rng.gen_range(1..=3)), later);
        }
        out.push(v);
    }
    let extra = out.iter().fold(RationalVector::zeros(s.ambient_dim()), |acc, v| &acc + v);
    out.insert(0, extra);
    Subspace::new(s, out).expect("in the root span")
}

fn criterion_5() -> Outcome {
    let a4 = system(TypeLetter::A, 4);
    let h = span(&a4, &[&[1, 0, 0, 0, -1]]);
    let verdict = check_proper_embedded(&a4, &h, &span(&a4, &[&[0, 1, 0, -1, 0]]), DEFAULT_CAP).map_err(|e| e.to_string())?;
    match &verdict {
        EmbeddedVerdict::NotProper { witness, .. } if *witness == RationalVector::from_ints(&[1, 0, 0, 0, -1]) => {}
        other => return Err(format!("A4 meeting pair gave {other:?}")),
    }
    let proper = check_proper_embedded(&a4, &h, &span(&a4, &[&[1, 1, -1, -1, 0]]), DEFAULT_CAP);
    ensure(matches!(proper, Ok(EmbeddedVerdict::Proper)), || format!("A4 proper pair gave {proper:?}"))?;
    match check_proper_embedded(&a4, &h, &h, DEFAULT_CAP) {
        Ok(EmbeddedVerdict::NotProper { w_index: 0, witness, .. }) if witness == h.basis()[0] => {}
        other => return Err(format!("a_l = a_h gave {other:?}")),
    }
    let a1 = CartanType::new(TypeLetter::A, 1).expect("A1");
    let a1a1 = RootSystem::direct_sum(&[a1, a1]).expect("A1+A1");
    let toy = check_proper_embedded(&a1a1, &span(&a1a1, &[&[1, -1, 0, 0]]), &span(&a1a1, &[&[0, 0, 1, -1]]), DEFAULT_CAP);
    ensure(matches!(toy, Ok(EmbeddedVerdict::Proper)), || format!("A1+A1 gave {toy:?}"))?;

    let mut rng = StdRng::seed_from_u64(5);
    let mut not_proper = 0;
    for s in [a4, system(TypeLetter::B, 3)] {
        for _ in 0..50 {
            let (h, l) = (random_subspace(&s, &mut rng), random_subspace(&s, &mut rng));
            let run = |x: &Subspace, y: &Subspace| {
                check_proper_embedded(&s, x, y, DEFAULT_CAP).map(|v| v.is_proper()).map_err(|e| e.to_string())
            };
            let forward = run(&h, &l)?;
            ensure(forward == run(&l, &h)?, || format!("{s}: swap changed the verdict"))?;
            let (h2, l2) = (respan(&s, &h, &mut rng), respan(&s, &l, &mut rng));
            ensure(forward == run(&h2, &l2)?, || format!("{s}: re-spanning changed the verdict"))?;
            let brute = weyl::enumerate_weyl(&s, DEFAULT_CAP).map_err(|e| e.to_string())?.iter().all(|w| {
                let mut columns = h.basis().to_vec();
                columns.extend(l.basis().iter().map(|v| w.apply(v)));
                rank(&columns) == h.dim() + l.dim()
            });
            ensure(forward == brute, || format!("{s}: verdict disagrees with direct enumeration"))?;
            not_proper += usize::from(!forward);
        }
    }
    Ok(format!("4 fixtures as stated; 100 random pairs ({not_proper} not proper) stable under swap and re-spanning"))
}

fn standard_form_json(g: &str, h: &str) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hyprank"))
        .args(["--json", "standard-form", g, h])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("standard-form {g} {h} exited with {:?}", out.status.code()))?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn criterion_6() -> Outcome {
    for k in 5..=10usize {
        let g = format!("sl({},R)", 2 * k + 1);
        for (h, required) in [
            (format!("so({},{})", k - 1, k + 2), k * k + 2 * k + 2),
            (format!("sp({},R)", k - 1), k * k + 4 * k),
        ] {
            let v = standard_form_json(&g, &h)?;
            ensure(v["verdict"] == "NoStandardForm", || format!("{g}/{h}: {}", v["verdict"]))?;
            ensure(v["details"]["required_d"] == required, || {
                format!("{g}/{h}: required_d {} != {required}", v["details"]["required_d"])
            })?;
        }
    }
    let v = standard_form_json("sl(9,R)", "so(3,6)")?;
    ensure(v["verdict"] == "Inconclusive", || format!("k = 4: {}", v["verdict"]))?;
    let e6 = v["witnesses"].as_array().into_iter().flatten().any(|w| w["derived_parts"] == serde_json::json!(["e6(-26)"]));
    ensure(e6, || "k = 4: e6(-26) is not among the witnesses".to_string())?;
    Ok("k = 5..10 obstructed for both families with exact required d; k = 4 inconclusive via e6(-26)".to_string())
}

fn paper_families(k: usize) -> [(ReductiveDescriptor, ReductiveDescriptor); 2] {
    let g = format!("sl({},R)", 2 * k + 1);
    [(desc(&g), desc(&format!("so({},{})", k - 1, k + 2))), (desc(&g), desc(&format!("sp({},R)", k - 1)))]
}

fn criterion_7() -> Outcome {
    let allowed = ["sl(3,R)", "su*(6)", "e6(-26)", "sl(3,C)"];
    let mut seen_rank_two = BTreeSet::new();
    let mut checked = 0;
    for k in 5..=10 {
        for (g, h) in paper_families(k) {
            for part in candidate_simple_parts(&g, &h).map_err(|e| e.to_string())? {
                let name = part.to_string();
                match part.real_rank() {
                    1 => ensure(part.dim_p() < 4 * k, || format!("k = {k}: {name} has dim p {}", part.dim_p()))?,
                    2 => {
                        ensure(allowed.contains(&name.as_str()), || format!("k = {k}: unexpected rank-2 {name}"))?;
                        seen_rank_two.insert(name);
                    }
                    r => return Err(format!("k = {k}: {name} has real rank {r}")),
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} candidates; rank-2 ones: {}", seen_rank_two.into_iter().collect::<Vec<_>>().join(", ")))
}

fn criterion_8() -> Outcome {
    let forms: Vec<SimpleRealForm> = forms_with_maxcompact_rank_at_most(8);
    let mut rng = StdRng::seed_from_u64(8);
    let (mut pairs, mut rejected, mut obstructed, mut candidates) = (0, 0, 0, 0);
    while pairs < 100 {
        let g = &forms[rng.gen_range(0..forms.len())];
        let h = &forms[rng.gen_range(0..forms.len())];
        if h.ahyp() > g.ahyp() {
            continue;
        }
        pairs += 1;
        let (gd, hd) = (ReductiveDescriptor::simple(g.clone()), ReductiveDescriptor::simple(h.clone()));
        let v = match standard_form_verdict(&gd, &hd) {
            Ok(v) => v,
            Err(hyprank::Error::SpaceObstruction(_)) => {
                ensure(h.real_rank() > g.real_rank() || h.dim_p() > g.dim_p(), || format!("{g}/{h} rejected"))?;
                rejected += 1;
                continue;
            }
            Err(e) => return Err(format!("{g}/{h}: {e}")),
        };
        for c in &v.candidates {
            let report = necessary_conditions(&gd, &hd, &c.descriptor());
            ensure(report.overall == Overall::NoObstruction, || format!("{g}/{h}: {} fails rank tests", c.label()))?;
        }
        let reachable = v.candidates.iter().any(|c| c.contains(v.required_d));
        ensure((v.verdict == Verdict::NoStandardForm) == !reachable, || format!("{g}/{h}: verdict vs intervals"))?;
        candidates += v.candidates.len();
        obstructed += usize::from(v.verdict == Verdict::NoStandardForm);
    }
    Ok(format!(
        "{pairs} pairs ({rejected} inadmissible, {obstructed} obstructed), {candidates} candidates all pass the rank tests"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Table 1 reproduction and completeness", 5, criterion_1),
        ("w0 / -w0 suite up to rank 7", 30, criterion_2),
        ("Weyl group orders and canonical order", 60, criterion_3),
        ("antipodal orbits vs dominant representatives", 30, criterion_4),
        ("embedded properness checker", 60, criterion_5),
        ("standard-form verdicts for both families", 10, criterion_6),
        ("candidate ranks and dimensions", 10, criterion_7),
        ("engine soundness fuzz", 60, criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(detail), true) => ("PASS", detail.clone()),
            (Ok(detail), false) => ("FAIL", format!("too slow; {detail}")),
            (Err(reason), _) => ("FAIL", reason.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {} {name} ({:.2} s, limit {limit} s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
