use hyprank::catalog::{forms_with_maxcompact_rank_at_most, ReductiveDescriptor};
use hyprank::criteria::{necessary_conditions, Overall};
use hyprank::obstruction::{candidate_combinations, candidate_simple_parts, standard_form_verdict, Verdict};
use hyprank::parse_descriptor;
use proptest::prelude::*;

fn desc(text: &str) -> ReductiveDescriptor {
    parse_descriptor(text).unwrap()
}

fn so_family(k: usize) -> (ReductiveDescriptor, ReductiveDescriptor) {
    (desc(&format!("sl({},R)", 2 * k + 1)), desc(&format!("so({},{})", k - 1, k + 2)))
}

fn sp_family(k: usize) -> (ReductiveDescriptor, ReductiveDescriptor) {
    (desc(&format!("sl({},R)", 2 * k + 1)), desc(&format!("sp({},R)", k - 1)))
}

#[test]
fn so_family_required_gap() {
    for k in 2..=10 {
        let (g, h) = so_family(k);
        let v = standard_form_verdict(&g, &h).unwrap();
        assert_eq!(v.required_d, (k * k + 2 * k + 2) as i64, "k = {k}");
    }
}

#[test]
fn both_families_are_obstructed_from_k5() {
    for k in 5..=10 {
        for (label, (g, h)) in [("so", so_family(k)), ("sp", sp_family(k))] {
            let v = standard_form_verdict(&g, &h).unwrap();
            assert_eq!(v.verdict, Verdict::NoStandardForm, "{label} k = {k}");
            assert!(v.witnesses.is_empty());
            assert!((v.max_achievable as i64) < v.required_d, "{label} k = {k}");
            let expected = if label == "so" { k * k + 2 * k + 2 } else { k * k + 4 * k };
            assert_eq!(v.required_d, expected as i64, "{label} k = {k}");
        }
    }
}

#[test]
fn so_family_k4_is_inconclusive() {
    let (g, h) = so_family(4);
    let v = standard_form_verdict(&g, &h).unwrap();
    assert_eq!(v.verdict, Verdict::Inconclusive);
    assert!(v.witnesses.iter().any(|w| w.label() == "e6(-26)"));
}

#[test]
fn candidates_have_small_rank() {
    let rank_two = ["sl(3,R)", "su*(6)", "e6(-26)", "sl(3,C)"];
    for k in 5..=10 {
        for (g, h) in [so_family(k), sp_family(k)] {
            for part in candidate_simple_parts(&g, &h).unwrap() {
                match part.real_rank() {
                    1 => assert!(part.dim_p() < 4 * k, "{part} k = {k}"),
                    2 => {
                        assert!(rank_two.contains(&part.to_string().as_str()), "{part} k = {k}");
                        assert!(part.dim_p() < 27);
                    }
                    r => panic!("{part} has real rank {r} at k = {k}"),
                }
            }
            for c in candidate_combinations(&g, &h).unwrap() {
                assert!(c.derived_parts.len() <= 1);
            }
        }
    }
}

#[test]
fn simple_parts_match_a_direct_scan() {
    let (g, h) = so_family(5);
    let parts: Vec<String> = candidate_simple_parts(&g, &h).unwrap().iter().map(ToString::to_string).collect();
    // Limits: ahyp 5 - 4, real rank 10 - 4, compact rank 5, d 65 - 28, dim 120.
    let direct: Vec<String> = forms_with_maxcompact_rank_at_most(5)
        .into_iter()
        .filter(|s| s.ahyp() <= 1 && s.real_rank() <= 6 && s.dim_p() <= 37 && s.dim_g() <= 120)
        .map(|s| s.to_string())
        .collect();
    assert_eq!(parts, direct);
    assert!(parts.contains(&"f4(-20)".to_string()));
    assert!(!parts.contains(&"so(5,5)".to_string()));
}

fn noncompact_names() -> Vec<String> {
    forms_with_maxcompact_rank_at_most(6).iter().map(ToString::to_string).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn engine_is_internally_consistent(gi in 0usize..1000, hi in 0usize..1000, split in 0usize..2) {
        let names = noncompact_names();
        let g = desc(&names[gi % names.len()]);
        let mut h_text = names[hi % names.len()].clone();
        if split == 1 {
            h_text.push_str("+R^1");
        }
        let h = desc(&h_text);
        let Ok(v) = standard_form_verdict(&g, &h) else {
            // Only inadmissible pairs are rejected.
            let (gd, hd) = (g.invariants(), h.invariants());
            prop_assert!(hd.ahyp > gd.ahyp || hd.real_rank > gd.real_rank || hd.d > gd.d);
            return Ok(());
        };
        for c in &v.candidates {
            let report = necessary_conditions(&g, &h, &c.descriptor());
            prop_assert_eq!(report.overall, Overall::NoObstruction, "{} / {} with {}", g, h, c.label());
            prop_assert!(c.d_interval.0 <= c.d_interval.1);
        }
        let any_contains = v.candidates.iter().any(|c| c.contains(v.required_d));
        prop_assert_eq!(v.verdict == Verdict::NoStandardForm, !any_contains);
        if v.verdict == Verdict::NoStandardForm {
            prop_assert!((v.max_achievable as i64) < v.required_d);
        }
        for pair in v.witnesses.windows(2) {
            prop_assert!(pair[0].d_interval.1 >= pair[1].d_interval.1);
        }
    }
}
