//! Weyl-group machinery: canonical enumeration, dominant representatives,
//! the longest element `w0`, the involution `-w0`, its fixed subspace `b`
//! (whose dimension is the a-hyperbolic rank) and the antipodal-orbit test.
//!
//! Enumeration is breadth-first by word length, ties broken lexicographically
//! by the lexicographically smallest reduced word, with the identity first.
//! The walk never materializes matrices on its own: elements are tracked by
//! the integer vector `⟨w⁻¹ρ, α_i^∨⟩` (ρ the sum of fundamental weights), and
//! `w·s_j` is longer than `w` exactly when its `j`-th entry is positive.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{self, RationalMatrix, RationalVector};
use crate::rootspace::RootSystem;

/// Default bound on `|W|` for full enumeration.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// An element of the Weyl group as an exact matrix on ambient coordinates,
/// together with a reduced word in the simple reflections (`word = [i, j, ..]`
/// means `s_i s_j ...`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    matrix: RationalMatrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(system: &RootSystem) -> Self {
        Self { matrix: RationalMatrix::identity(system.ambient_dim()), word: Vec::new() }
    }

    pub fn from_word(system: &RootSystem, word: &[usize]) -> Self {
        let matrix = word.iter().fold(RationalMatrix::identity(system.ambient_dim()), |m, &j| {
            m.mul_reflection(&system.simple_roots()[j])
        });
        Self { matrix, word: word.to_vec() }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        self.matrix.apply(v)
    }
}

struct Node<P> {
    key: Vec<i64>,
    word: Vec<usize>,
    payload: P,
}

/// Visits every element of `W` in canonical order.
///
/// Each element carries a payload: `seed` for the identity, and
/// `step(&payload(w), j)` for `w·s_j`. `visit` receives the canonical index,
/// the reduced word and the payload; breaking out of it stops the walk.
#[allow(clippy::needless_range_loop)]
pub fn walk<P, B>(
    system: &RootSystem,
    seed: P,
    mut step: impl FnMut(&P, usize) -> P,
    mut visit: impl FnMut(u64, &[usize], &P) -> ControlFlow<B>,
) -> Option<B> {
    let cartan = system.cartan_matrix();
    let rank = system.rank();
    let mut level = vec![Node { key: vec![1; rank], word: Vec::new(), payload: seed }];
    let mut index = 0u64;
    loop {
        for node in &level {
            if let ControlFlow::Break(b) = visit(index, &node.word, &node.payload) {
                return Some(b);
            }
            index += 1;
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut next = Vec::new();
        for node in &level {
            for j in 0..rank {
                let cj = node.key[j];
                if cj <= 0 {
                    continue;
                }
                let key: Vec<i64> = (0..rank).map(|i| node.key[i] - cj * cartan[i][j]).collect();
                if seen.contains(&key) {
                    continue;
                }
                seen.insert(key.clone());
                let mut word = node.word.clone();
                word.push(j);
                let payload = step(&node.payload, j);
                next.push(Node { key, word, payload });
            }
        }
        if next.is_empty() {
            return None;
        }
        level = next;
    }
}

fn check_cap(system: &RootSystem, cap: u64) -> Result<()> {
    let order = system.weyl_order();
    if order > cap as u128 {
        return Err(Error::CapExceeded { order, cap });
    }
    Ok(())
}

/// All elements of `W` as matrices, in canonical order.
pub fn enumerate_weyl(system: &RootSystem, cap: u64) -> Result<Vec<WeylElement>> {
    check_cap(system, cap)?;
    let mut out = Vec::new();
    let roots = system.simple_roots();
    walk::<_, ()>(
        system,
        RationalMatrix::identity(system.ambient_dim()),
        |m, j| m.mul_reflection(&roots[j]),
        |_, word, matrix| {
            out.push(WeylElement { matrix: matrix.clone(), word: word.to_vec() });
            ControlFlow::Continue(())
        },
    );
    Ok(out)
}

/// `|W|` counted by the canonical walk (no matrices).
pub fn count_weyl(system: &RootSystem, cap: u64) -> Result<u64> {
    check_cap(system, cap)?;
    let mut count = 0;
    walk::<_, ()>(system, (), |_, _| (), |_, _, _| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Dominant representative of `v` together with the simple reflections
/// applied, in order. Always reflects in the first simple root pairing
/// negatively with the current vector.
pub fn dominant_chain(system: &RootSystem, v: &RationalVector) -> Result<(RationalVector, Vec<usize>)> {
    system.check_vector(v)?;
    let mut current = v.clone();
    let mut chain = Vec::new();
    while let Some(j) = system.simple_roots().iter().position(|a| current.dot(a).is_negative()) {
        current = system.simple_reflect(j, &current);
        chain.push(j);
    }
    Ok((current, chain))
}

/// The unique dominant vector in the `W`-orbit of `v`.
pub fn dominant_representative(system: &RootSystem, v: &RationalVector) -> Result<RationalVector> {
    dominant_chain(system, v).map(|(d, _)| d)
}

/// Strictly dominant vector with `⟨ρ̌, α_i⟩ = 1` for every simple root.
pub fn rho_check(system: &RootSystem) -> RationalVector {
    system
        .fundamental_coweights()
        .iter()
        .fold(RationalVector::zeros(system.ambient_dim()), |acc, w| &acc + w)
}

/// The longest element, from the reflection chain that carries `-ρ̌` back to
/// the dominant chamber.
pub fn longest_element(system: &RootSystem) -> WeylElement {
    let (_, chain) = dominant_chain(system, &-rho_check(system)).expect("ρ̌ lies in the root span");
    let word: Vec<usize> = chain.into_iter().rev().collect();
    WeylElement::from_word(system, &word)
}

/// The matrix of `X ↦ -(w0·X)`.
pub fn minus_w0(system: &RootSystem) -> RationalMatrix {
    longest_element(system).matrix().neg()
}

/// The permutation `π` of simple roots with `-w0(α_i) = α_{π(i)}`.
pub fn simple_root_permutation(system: &RootSystem) -> Vec<usize> {
    let involution = minus_w0(system);
    system
        .simple_roots()
        .iter()
        .map(|a| {
            let image = involution.apply(a);
            system
                .simple_roots()
                .iter()
                .position(|b| *b == image)
                .expect("-w0 permutes the simple roots")
        })
        .collect()
}

fn orbits(permutation: &[usize]) -> Vec<Vec<usize>> {
    let mut visited = vec![false; permutation.len()];
    let mut out = Vec::new();
    for start in 0..permutation.len() {
        if visited[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            orbit.push(i);
            i = permutation[i];
        }
        out.push(orbit);
    }
    out
}

/// `dim ker(w0 + 1)` by exact elimination.
pub fn ahyp_by_kernel(system: &RootSystem) -> usize {
    let w0 = longest_element(system);
    let shifted = w0.matrix().add(&RationalMatrix::identity(system.ambient_dim()));
    let columns = shifted.transpose().row_vectors();
    linalg::kernel(&columns).len()
}

/// Number of orbits of `-w0` on the simple roots.
pub fn ahyp_by_orbits(system: &RootSystem) -> usize {
    orbits(&simple_root_permutation(system)).len()
}

/// The a-hyperbolic rank `dim Fix(-w0)`. Computed both ways; they must agree.
pub fn ahyp_dimension(system: &RootSystem) -> usize {
    let by_kernel = ahyp_by_kernel(system);
    let by_orbits = ahyp_by_orbits(system);
    assert_eq!(by_kernel, by_orbits, "a-hyperbolic rank routes disagree for {system}");
    by_kernel
}

/// The subspace `b = Fix(-w0)` with a basis drawn from the cone `b⁺`.
#[derive(Clone, Debug)]
pub struct FixedCone<'a> {
    system: &'a RootSystem,
    involution: RationalMatrix,
    basis: Vec<RationalVector>,
}

impl<'a> FixedCone<'a> {
    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn basis(&self) -> &[RationalVector] {
        &self.basis
    }

    /// The matrix of `-w0`.
    pub fn involution(&self) -> &RationalMatrix {
        &self.involution
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Membership in `b⁺`: fixed by `-w0` and dominant.
    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        Ok(self.system.is_dominant(v)? && self.involution.apply(v) == *v)
    }
}

/// One basis vector per `-w0` orbit on the simple roots: the sum of the
/// fundamental coweights over that orbit.
pub fn fixed_cone(system: &RootSystem) -> FixedCone<'_> {
    let coweights = system.fundamental_coweights();
    let basis = orbits(&simple_root_permutation(system))
        .into_iter()
        .map(|orbit| {
            orbit
                .iter()
                .fold(RationalVector::zeros(system.ambient_dim()), |acc, &i| &acc + &coweights[i])
        })
        .collect();
    FixedCone { system, involution: minus_w0(system), basis }
}

/// Whether the orbit of `v` contains `-v`.
pub fn is_antipodal(system: &RootSystem, v: &RationalVector) -> Result<bool> {
    Ok(dominant_representative(system, v)? == dominant_representative(system, &-v)?)
}
