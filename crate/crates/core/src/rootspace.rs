//! Exact realizations of (possibly non-reduced, possibly reducible) root
//! systems, and the chamber predicates built on them.
//!
//! Coordinate realizations are fixed per type:
//!
//! | type   | ambient | simple roots                                              |
//! |--------|---------|-----------------------------------------------------------|
//! | A_n    | n + 1   | e_i - e_{i+1}; vectors must have coordinate sum 0         |
//! | B_n    | n       | e_i - e_{i+1} (i < n), e_n                                |
//! | C_n    | n       | e_i - e_{i+1} (i < n), 2 e_n                              |
//! | D_n    | n       | e_i - e_{i+1} (i < n), e_{n-1} + e_n                      |
//! | BC_n   | n       | as B_n; the roots are those of B_n together with 2 e_i    |
//! | G_2    | 3       | e_1 - e_2, -2 e_1 + e_2 + e_3; coordinate sum 0           |
//! | F_4    | 4       | e_2 - e_3, e_3 - e_4, e_4, (e_1 - e_2 - e_3 - e_4) / 2    |
//! | E_6..8 | 8       | (e_1 + e_8 - e_2 - ... - e_7) / 2, e_1 + e_2, e_2 - e_1, |
//! |        |         | e_3 - e_2, ..., e_{n-1} - e_{n-2} (first n of these)      |
//!
//! Direct sums place the components in consecutive coordinate blocks.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, integer, rational, Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
            TypeLetter::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            "BC" => Ok(TypeLetter::BC),
            other => Err(Error::Parse(format!("unknown root system type {other:?}"))),
        }
    }
}

/// An irreducible type such as `A4` or `BC2`. Construction validates the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    letter: TypeLetter,
    rank: usize,
}

impl CartanType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let ok = match letter {
            TypeLetter::A | TypeLetter::BC => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        };
        if ok {
            Ok(Self { letter, rank })
        } else {
            Err(Error::UnsupportedSystem(format!("{letter}{rank}")))
        }
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        match self.letter {
            TypeLetter::A => self.rank + 1,
            TypeLetter::G => 3,
            TypeLetter::E => 8,
            _ => self.rank,
        }
    }

    /// `|W|` from the closed formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let factorial = |k: u128| (1..=k).product::<u128>();
        match self.letter {
            TypeLetter::A => factorial(n + 1),
            TypeLetter::B | TypeLetter::C | TypeLetter::BC => (1u128 << n) * factorial(n),
            TypeLetter::D => (1u128 << (n - 1)) * factorial(n),
            TypeLetter::G => 12,
            TypeLetter::F => 1152,
            TypeLetter::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
        }
    }

    /// Number of roots from the closed formulas.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            TypeLetter::A => n * (n + 1),
            TypeLetter::B | TypeLetter::C => 2 * n * n,
            TypeLetter::D => 2 * n * (n - 1),
            TypeLetter::BC => 2 * n * (n + 1),
            TypeLetter::G => 12,
            TypeLetter::F => 48,
            TypeLetter::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    fn simple_roots(&self) -> Vec<RationalVector> {
        let n = self.rank;
        let dim = self.ambient_dim();
        let e = |i: usize| RationalVector::unit(dim, i);
        let consecutive = |i: usize| &e(i) - &e(i + 1);
        match self.letter {
            TypeLetter::A => (0..n).map(consecutive).collect(),
            TypeLetter::B | TypeLetter::BC => {
                let mut s: Vec<_> = (0..n - 1).map(consecutive).collect();
                s.push(e(n - 1));
                s
            }
            TypeLetter::C => {
                let mut s: Vec<_> = (0..n - 1).map(consecutive).collect();
                s.push(e(n - 1).scale(&integer(2)));
                s
            }
            TypeLetter::D => {
                let mut s: Vec<_> = (0..n - 1).map(consecutive).collect();
                s.push(&e(n - 2) + &e(n - 1));
                s
            }
            TypeLetter::G => vec![
                RationalVector::from_ints(&[1, -1, 0]),
                RationalVector::from_ints(&[-2, 1, 1]),
            ],
            TypeLetter::F => {
                let half = rational(1, 2);
                vec![
                    RationalVector::from_ints(&[0, 1, -1, 0]),
                    RationalVector::from_ints(&[0, 0, 1, -1]),
                    RationalVector::from_ints(&[0, 0, 0, 1]),
                    RationalVector::from_ints(&[1, -1, -1, -1]).scale(&half),
                ]
            }
            TypeLetter::E => {
                let half = rational(1, 2);
                let mut s = vec![
                    RationalVector::from_ints(&[1, -1, -1, -1, -1, -1, -1, 1]).scale(&half),
                    &e(0) + &e(1),
                ];
                s.extend((0..n - 2).map(|i| &e(i + 1) - &e(i)));
                s
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A,4` or `A4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (letter, rank) = match s.split_once(',') {
            Some((l, r)) => (l.trim(), r.trim()),
            None => {
                let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
                (&s[..split], &s[split..])
            }
        };
        let letter: TypeLetter = letter.parse()?;
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in root system designation {s:?}")))?;
        Self::new(letter, rank)
    }
}

/// A root system realized in an ambient rational vector space.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<CartanType>,
    ambient_dim: usize,
    simple_roots: Vec<RationalVector>,
    positive_roots: Vec<RationalVector>,
    positive_coefficients: Vec<Vec<i64>>,
    roots: Vec<RationalVector>,
    cartan: Vec<Vec<i64>>,
    complement: Vec<RationalVector>,
}

/// Builds an irreducible root system in its standard realization.
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<RootSystem> {
    RootSystem::direct_sum(&[CartanType::new(letter, rank)?])
}

/// `v - 2<v,root>/<root,root> root`
pub fn reflect(v: &RationalVector, root: &RationalVector) -> Result<RationalVector> {
    if v.ambient_dim() != root.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: root.ambient_dim(), found: v.ambient_dim() });
    }
    if root.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let factor = -(integer(2) * v.dot(root) / root.norm_squared());
    Ok(v.add_scaled(&factor, root))
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        Self::direct_sum(&[cartan_type]).expect("single component is always valid")
    }

    /// Orthogonal direct sum, components in consecutive coordinate blocks.
    pub fn direct_sum(components: &[CartanType]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::UnsupportedSystem("empty direct sum".into()));
        }
        let ambient_dim: usize = components.iter().map(CartanType::ambient_dim).sum();
        let mut simple_roots = Vec::new();
        let mut component_of_simple = Vec::new();
        let mut offset = 0;
        for (index, component) in components.iter().enumerate() {
            for root in component.simple_roots() {
                let mut coords = vec![Rational::zero(); ambient_dim];
                for (i, c) in root.into_coords().into_iter().enumerate() {
                    coords[offset + i] = c;
                }
                simple_roots.push(RationalVector::new(coords));
                component_of_simple.push(index);
            }
            offset += component.ambient_dim();
        }

        let rank = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let value = integer(2) * simple_roots[j].dot(&simple_roots[i])
                            / simple_roots[i].norm_squared();
                        linalg::to_i64(&value).expect("Cartan integers are integral")
                    })
                    .collect()
            })
            .collect();

        // Positive roots of the reduced system, as simple-root coefficients.
        let mut positive: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut unit = vec![0; rank];
            unit[i] = 1;
            seen.insert(unit.clone(), ());
            queue.push_back(unit);
        }
        while let Some(beta) = queue.pop_front() {
            for j in 0..rank {
                let pairing: i64 = (0..rank).map(|k| beta[k] * cartan[j][k]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[j] -= pairing;
                if image.iter().all(|&c| c >= 0) && !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    queue.push_back(image);
                }
            }
            positive.push(beta);
        }

        let combine = |coefficients: &[i64]| {
            coefficients
                .iter()
                .zip(&simple_roots)
                .filter(|(c, _)| **c != 0)
                .fold(RationalVector::zeros(ambient_dim), |acc, (c, s)| acc.add_scaled(&integer(*c), s))
        };

        // Non-reduced components: add 2β for every short root β (norm 1) of a BC block.
        let doubled: Vec<Vec<i64>> = positive
            .iter()
            .filter(|beta| {
                let support = beta.iter().position(|&c| c != 0).expect("nonzero root");
                components[component_of_simple[support]].letter() == TypeLetter::BC
                    && combine(beta).norm_squared() == integer(1)
            })
            .map(|beta| beta.iter().map(|c| 2 * c).collect())
            .collect();
        positive.extend(doubled);
        positive.sort_by(|a, b| {
            let height = |v: &Vec<i64>| v.iter().sum::<i64>();
            height(a).cmp(&height(b)).then_with(|| b.cmp(a))
        });

        let positive_roots: Vec<RationalVector> = positive.iter().map(|c| combine(c)).collect();
        let mut roots = positive_roots.clone();
        roots.extend(positive_roots.iter().map(|r| -r));

        let columns: Vec<RationalVector> = (0..ambient_dim)
            .map(|j| RationalVector::new(simple_roots.iter().map(|s| s.coords()[j].clone()).collect()))
            .collect();
        let complement = linalg::kernel(&columns).into_iter().map(RationalVector::new).collect();

        Ok(Self {
            components: components.to_vec(),
            ambient_dim,
            simple_roots,
            positive_roots,
            positive_coefficients: positive,
            roots,
            cartan,
            complement,
        })
    }

    /// Parses `A,4`, `A4`, or a `+`-separated direct sum such as `A,1+A,1`.
    pub fn parse_designation(text: &str) -> Result<Self> {
        let components = text
            .split('+')
            .map(str::parse::<CartanType>)
            .collect::<Result<Vec<_>>>()?;
        Self::direct_sum(&components)
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    /// The single component, if irreducible.
    pub fn cartan_type(&self) -> Option<CartanType> {
        match self.components.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        &self.positive_roots
    }

    /// Coefficients of each positive root in the simple roots, aligned with
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.positive_coefficients
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    /// `cartan_matrix()[i][j] = 2<α_j, α_i>/<α_i, α_i>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `|W|` from the closed formulas (product over components).
    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(CartanType::weyl_order).product()
    }

    /// Validates dimension and membership in the root span.
    pub fn check_vector(&self, v: &RationalVector) -> Result<()> {
        if v.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.ambient_dim() });
        }
        if self.complement.iter().any(|c| !v.dot(c).is_zero()) {
            return Err(Error::NotInSpan(v.to_string()));
        }
        Ok(())
    }

    /// Builds a vector of the root span, rejecting anything outside it.
    pub fn vector(&self, coords: Vec<Rational>) -> Result<RationalVector> {
        let v = RationalVector::new(coords);
        self.check_vector(&v)?;
        Ok(v)
    }

    pub fn is_dominant(&self, v: &RationalVector) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.simple_roots.iter().all(|a| !v.dot(a).is_negative()))
    }

    pub fn is_root(&self, v: &RationalVector) -> bool {
        self.roots.contains(v)
    }

    pub fn simple_reflect(&self, index: usize, v: &RationalVector) -> RationalVector {
        reflect(v, &self.simple_roots[index]).expect("simple roots are nonzero")
    }

    /// `⟨v, α_i^∨⟩` for every simple root.
    pub fn coroot_pairings(&self, v: &RationalVector) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|a| integer(2) * v.dot(a) / a.norm_squared())
            .collect()
    }

    /// The vectors `ϖ_i` of the root span with `⟨ϖ_i, α_j⟩ = δ_ij`.
    pub fn fundamental_coweights(&self) -> Vec<RationalVector> {
        let r = self.rank();
        let gram = linalg::RationalMatrix::from_rows(
            &(0..r)
                .map(|i| RationalVector::new((0..r).map(|j| self.simple_roots[i].dot(&self.simple_roots[j])).collect()))
                .collect::<Vec<_>>(),
        );
        let inverse = gram.inverse().expect("simple roots are independent");
        (0..r)
            .map(|i| {
                (0..r).fold(RationalVector::zeros(self.ambient_dim), |acc, k| {
                    acc.add_scaled(inverse.get(k, i), &self.simple_roots[k])
                })
            })
            .collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
