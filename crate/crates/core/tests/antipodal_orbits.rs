use hyprank::linalg::rational;
use hyprank::weyl::{self, DEFAULT_CAP};
use hyprank::{build_root_system, RationalVector, RootSystem, TypeLetter};
use num_traits::Signed;
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    use TypeLetter::*;
    [(A, 2), (A, 3), (A, 4), (B, 3), (C, 3), (D, 4), (BC, 2)]
        .into_iter()
        .map(|(letter, n)| build_root_system(letter, n).unwrap())
        .collect()
}

/// A vector of the root span with rational coefficients on the simple roots.
fn combination(system: &RootSystem, coefficients: &[(i64, i64)]) -> RationalVector {
    system
        .simple_roots()
        .iter()
        .zip(coefficients)
        .fold(RationalVector::zeros(system.ambient_dim()), |acc, (a, &(p, q))| acc.add_scaled(&rational(p, q), a))
}

fn is_dominant(system: &RootSystem, v: &RationalVector) -> bool {
    system.simple_roots().iter().all(|a| !v.dot(a).is_negative())
}

/// The dominant points of the full orbit, found by applying every element.
fn brute_force_dominant(system: &RootSystem, v: &RationalVector) -> Vec<RationalVector> {
    let mut found: Vec<RationalVector> = weyl::enumerate_weyl(system, DEFAULT_CAP)
        .unwrap()
        .iter()
        .map(|w| w.apply(v))
        .filter(|x| is_dominant(system, x))
        .collect();
    found.sort_by_key(ToString::to_string);
    found.dedup();
    found
}

fn coefficients() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 4)
}

/// Vectors fixed by `-w0` are built as `x - w0 x`, so the antipodal side of
/// the equivalence is exercised as often as the other side.
fn sample(system: &RootSystem, coefficients: &[(i64, i64)], symmetrize: bool) -> RationalVector {
    let v = combination(system, coefficients);
    if symmetrize {
        let w0 = weyl::longest_element(system);
        &v - &w0.apply(&v)
    } else {
        v
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn antipodal_iff_dominant_rep_in_cone(coefficients in coefficients(), symmetrize in any::<bool>()) {
        for system in systems() {
            let v = sample(&system, &coefficients, symmetrize);
            let rep = weyl::dominant_representative(&system, &v).unwrap();
            let cone = weyl::fixed_cone(&system);
            prop_assert_eq!(
                weyl::is_antipodal(&system, &v).unwrap(),
                cone.contains(&rep).unwrap(),
                "{} {}", system, v
            );
            if symmetrize {
                prop_assert!(weyl::is_antipodal(&system, &v).unwrap());
            }

            let brute = brute_force_dominant(&system, &v);
            prop_assert_eq!(brute.len(), 1);
            prop_assert_eq!(&brute[0], &rep);
        }
    }

    #[test]
    fn fixed_cone_basis_spans_fixed_space(coefficients in coefficients()) {
        for system in systems() {
            let cone = weyl::fixed_cone(&system);
            prop_assert_eq!(cone.dim(), weyl::ahyp_dimension(&system));
            for b in cone.basis() {
                prop_assert!(cone.contains(b).unwrap());
            }
            let v = combination(&system, &coefficients);
            let fixed = &v + &cone.involution().apply(&v);
            let mut with = cone.basis().to_vec();
            with.push(fixed);
            prop_assert_eq!(hyprank::linalg::rank(&with), cone.dim());
        }
    }
}

#[test]
fn orbit_points_share_a_representative() {
    for system in systems() {
        let v = combination(&system, &[(3, 1), (-2, 3), (1, 2), (-5, 4)]);
        let rep = weyl::dominant_representative(&system, &v).unwrap();
        for w in weyl::enumerate_weyl(&system, DEFAULT_CAP).unwrap().iter().step_by(7) {
            assert_eq!(weyl::dominant_representative(&system, &w.apply(&v)).unwrap(), rep, "{system}");
        }
    }
}
