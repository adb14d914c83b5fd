//! Classification data for noncompact real simple Lie algebras, reductive
//! descriptors such as `so(4,7)+sp(2,R)+R^1`, and the invariants derived from
//! them: real rank, a-hyperbolic rank, `d = dim p` and the rank of a maximal
//! compact subalgebra.
//!
//! Restricted root systems, `dim g`, `dim k`, `dim p` and the maximal compact
//! rank are transcribed from the standard classification tables. `dim k` and
//! `dim p` are entered independently so that `dim k + dim p = dim g` checks
//! the transcription. The a-hyperbolic rank is never transcribed: it is
//! computed from the restricted root system by [`weyl::ahyp_dimension`].
//!
//! Restricted systems of real rank one are recorded as `A1` regardless of
//! the family's generic letter (`B1`, `C1` and `A1` are the same system).
//! Descriptors are taken at face value: `so(3,3)` and `sl(4,R)` are distinct
//! entries with identical invariants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootspace::{CartanType, RootSystem, TypeLetter};
use crate::weyl;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    G2Split,
    F4Split,
    F4Minus20,
    E6Split,
    E6Plus2,
    E6Minus14,
    E6Minus26,
    E7Split,
    E7Minus5,
    E7Minus25,
    E8Split,
    E8Minus24,
    G2Complex,
    F4Complex,
    E6Complex,
    E7Complex,
    E8Complex,
}

struct ExceptionalData {
    name: &'static str,
    dim_g: usize,
    dim_k: usize,
    dim_p: usize,
    restricted: (TypeLetter, usize),
    rank_maxcompact: usize,
    complex: bool,
}

impl Exceptional {
    pub const ALL: [Exceptional; 17] = [
        Exceptional::G2Split,
        Exceptional::F4Split,
        Exceptional::F4Minus20,
        Exceptional::E6Split,
        Exceptional::E6Plus2,
        Exceptional::E6Minus14,
        Exceptional::E6Minus26,
        Exceptional::E7Split,
        Exceptional::E7Minus5,
        Exceptional::E7Minus25,
        Exceptional::E8Split,
        Exceptional::E8Minus24,
        Exceptional::G2Complex,
        Exceptional::F4Complex,
        Exceptional::E6Complex,
        Exceptional::E7Complex,
        Exceptional::E8Complex,
    ];

    fn data(self) -> ExceptionalData {
        use TypeLetter::*;
        let d = |name, dim_g, dim_k, dim_p, restricted, rank_maxcompact, complex| ExceptionalData {
            name,
            dim_g,
            dim_k,
            dim_p,
            restricted,
            rank_maxcompact,
            complex,
        };
        match self {
            // k = su(2)+su(2)
            Exceptional::G2Split => d("g2(2)", 14, 6, 8, (G, 2), 2, false),
            // k = sp(3)+su(2)
            Exceptional::F4Split => d("f4(4)", 52, 24, 28, (F, 4), 4, false),
            // k = so(9)
            Exceptional::F4Minus20 => d("f4(-20)", 52, 36, 16, (BC, 1), 4, false),
            // k = sp(4)
            Exceptional::E6Split => d("e6(6)", 78, 36, 42, (E, 6), 4, false),
            // k = su(6)+su(2)
            Exceptional::E6Plus2 => d("e6(2)", 78, 38, 40, (F, 4), 6, false),
            // k = so(10)+u(1)
            Exceptional::E6Minus14 => d("e6(-14)", 78, 46, 32, (BC, 2), 6, false),
            // k = f4
            Exceptional::E6Minus26 => d("e6(-26)", 78, 52, 26, (A, 2), 4, false),
            // k = su(8)
            Exceptional::E7Split => d("e7(7)", 133, 63, 70, (E, 7), 7, false),
            // k = so(12)+su(2)
            Exceptional::E7Minus5 => d("e7(-5)", 133, 69, 64, (F, 4), 7, false),
            // k = e6+u(1)
            Exceptional::E7Minus25 => d("e7(-25)", 133, 79, 54, (C, 3), 7, false),
            // k = so(16)
            Exceptional::E8Split => d("e8(8)", 248, 120, 128, (E, 8), 8, false),
            // k = e7+su(2)
            Exceptional::E8Minus24 => d("e8(-24)", 248, 136, 112, (F, 4), 8, false),
            Exceptional::G2Complex => d("g2(C)", 28, 14, 14, (G, 2), 2, true),
            Exceptional::F4Complex => d("f4(C)", 104, 52, 52, (F, 4), 4, true),
            Exceptional::E6Complex => d("e6(C)", 156, 78, 78, (E, 6), 6, true),
            Exceptional::E7Complex => d("e7(C)", 266, 133, 133, (E, 7), 7, true),
            Exceptional::E8Complex => d("e8(C)", 496, 248, 248, (E, 8), 8, true),
        }
    }

    pub fn name(self) -> &'static str {
        self.data().name
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "e6(I)" => return Some(Exceptional::E6Split),
            "e6(IV)" => return Some(Exceptional::E6Minus26),
            _ => {}
        }
        Self::ALL.into_iter().find(|e| e.name() == name)
    }
}

/// A noncompact real simple Lie algebra, by family and parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    /// `sl(n,R)`
    SlReal(usize),
    /// `sl(n,C)` viewed as a real algebra
    SlComplex(usize),
    /// `su*(2n)`, holding `n`
    SuStar(usize),
    /// `su(p,q)` with `1 <= p <= q`
    Su(usize, usize),
    /// `so(p,q)` with `1 <= p <= q`
    So(usize, usize),
    /// `so(n,C)`
    SoComplex(usize),
    /// `so*(2n)`, holding `n`
    SoStar(usize),
    /// `sp(n,R)`
    SpReal(usize),
    /// `sp(n,C)`
    SpComplex(usize),
    /// `sp(p,q)` with `1 <= p <= q`
    Sp(usize, usize),
    Exceptional(Exceptional),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormFamily {
    SlReal,
    SlComplex,
    SuStar,
    Su,
    So,
    SoComplex,
    SoStar,
    SpReal,
    SpComplex,
    Sp,
    ExceptionalReal,
    ExceptionalComplex,
}

impl fmt::Display for FormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormFamily::SlReal => "sl(n,R)",
            FormFamily::SlComplex => "sl(n,C)",
            FormFamily::SuStar => "su*(2n)",
            FormFamily::Su => "su(p,q)",
            FormFamily::So => "so(p,q)",
            FormFamily::SoComplex => "so(n,C)",
            FormFamily::SoStar => "so*(2n)",
            FormFamily::SpReal => "sp(n,R)",
            FormFamily::SpComplex => "sp(n,C)",
            FormFamily::Sp => "sp(p,q)",
            FormFamily::ExceptionalReal => "exceptional-real",
            FormFamily::ExceptionalComplex => "exceptional-complex",
        };
        f.write_str(s)
    }
}

/// Classification record of a noncompact real simple Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleRealForm {
    kind: FormKind,
    restricted: CartanType,
    dim_g: usize,
    dim_k: usize,
    dim_p: usize,
    rank_maxcompact: usize,
    complex_as_real: bool,
}

/// Invariants of a simple form, with the a-hyperbolic rank computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttributeRecord {
    pub restricted: CartanType,
    pub real_rank: usize,
    pub ahyp: usize,
    pub dim_g: usize,
    pub dim_k: usize,
    pub dim_p: usize,
    pub rank_maxcompact: usize,
}

fn restricted_type(letter: TypeLetter, rank: usize) -> CartanType {
    let letter = match (letter, rank) {
        (TypeLetter::B | TypeLetter::C | TypeLetter::D, 1) => TypeLetter::A,
        _ => letter,
    };
    CartanType::new(letter, rank).expect("catalog restricted types are supported")
}

fn not_semisimple(input: &str, suggestion: &str) -> Error {
    Error::NotSemisimple { input: input.to_string(), suggestion: suggestion.to_string() }
}

impl SimpleRealForm {
    /// Validates the parameters and fills in the classification data.
    pub fn new(kind: FormKind) -> Result<Self> {
        use TypeLetter::*;
        let zero = |what: &str| Error::Parse(format!("{what} is the zero algebra"));
        let (restricted, dim_g, dim_k, dim_p, rank_maxcompact, complex) = match kind {
            FormKind::SlReal(n) => {
                if n < 2 {
                    return Err(zero(&format!("sl({n},R)")));
                }
                (restricted_type(A, n - 1), n * n - 1, n * (n - 1) / 2, (n - 1) * (n + 2) / 2, n / 2, false)
            }
            FormKind::SlComplex(n) => {
                if n < 2 {
                    return Err(zero(&format!("sl({n},C)")));
                }
                (restricted_type(A, n - 1), 2 * (n * n - 1), n * n - 1, n * n - 1, n - 1, false)
            }
            FormKind::SuStar(n) => {
                if n < 2 {
                    return Err(Error::Parse(format!(
                        "su*({}) is compact (isomorphic to su(2)); enter it as su(2)",
                        2 * n
                    )));
                }
                (restricted_type(A, n - 1), 4 * n * n - 1, n * (2 * n + 1), (n - 1) * (2 * n + 1), n, false)
            }
            FormKind::Su(p, q) => {
                if p == 0 || p > q {
                    return Err(Error::Parse(format!("su({p},{q}) must satisfy 1 <= p <= q")));
                }
                let letter = if p == q { C } else { BC };
                let n = p + q;
                (restricted_type(letter, p), n * n - 1, p * p + q * q - 1, 2 * p * q, n - 1, false)
            }
            FormKind::So(p, q) => {
                if p == 0 || p > q {
                    return Err(Error::Parse(format!("so({p},{q}) must satisfy 1 <= p <= q")));
                }
                match (p, q) {
                    (1, 1) => return Err(not_semisimple("so(1,1)", "R^1")),
                    (2, 2) => return Err(not_semisimple("so(2,2)", "sl(2,R)+sl(2,R)")),
                    _ => {}
                }
                let letter = if p == q { D } else { B };
                let n = p + q;
                (
                    restricted_type(letter, p),
                    n * (n - 1) / 2,
                    p * (p.saturating_sub(1)) / 2 + q * (q - 1) / 2,
                    p * q,
                    p / 2 + q / 2,
                    false,
                )
            }
            FormKind::SoComplex(n) => {
                match n {
                    0 | 1 => return Err(zero(&format!("so({n},C)"))),
                    2 => return Err(not_semisimple("so(2,C)", "R^1+u(1)^1")),
                    4 => return Err(not_semisimple("so(4,C)", "sl(2,C)+sl(2,C)")),
                    _ => {}
                }
                let restricted = if n % 2 == 0 { restricted_type(D, n / 2) } else { restricted_type(B, n / 2) };
                (restricted, n * (n - 1), n * (n - 1) / 2, n * (n - 1) / 2, n / 2, false)
            }
            FormKind::SoStar(n) => {
                match n {
                    0 => return Err(zero("so*(0)")),
                    1 => return Err(not_semisimple("so*(2)", "u(1)^1")),
                    2 => return Err(not_semisimple("so*(4)", "su(2)+sl(2,R)")),
                    _ => {}
                }
                let restricted = if n % 2 == 0 { restricted_type(C, n / 2) } else { restricted_type(BC, n / 2) };
                (restricted, n * (2 * n - 1), n * n, n * (n - 1), n, false)
            }
            FormKind::SpReal(n) => {
                if n == 0 {
                    return Err(zero("sp(0,R)"));
                }
                (restricted_type(C, n), n * (2 * n + 1), n * n, n * (n + 1), n, false)
            }
            FormKind::SpComplex(n) => {
                if n == 0 {
                    return Err(zero("sp(0,C)"));
                }
                (restricted_type(C, n), 2 * n * (2 * n + 1), n * (2 * n + 1), n * (2 * n + 1), n, false)
            }
            FormKind::Sp(p, q) => {
                if p == 0 || p > q {
                    return Err(Error::Parse(format!("sp({p},{q}) must satisfy 1 <= p <= q")));
                }
                let letter = if p == q { C } else { BC };
                let n = p + q;
                (
                    restricted_type(letter, p),
                    n * (2 * n + 1),
                    p * (2 * p + 1) + q * (2 * q + 1),
                    4 * p * q,
                    n,
                    false,
                )
            }
            FormKind::Exceptional(e) => {
                let d = e.data();
                (
                    restricted_type(d.restricted.0, d.restricted.1),
                    d.dim_g,
                    d.dim_k,
                    d.dim_p,
                    d.rank_maxcompact,
                    d.complex,
                )
            }
        };
        let complex_as_real = complex
            || matches!(kind, FormKind::SlComplex(_) | FormKind::SoComplex(_) | FormKind::SpComplex(_));
        Ok(Self { kind, restricted, dim_g, dim_k, dim_p, rank_maxcompact, complex_as_real })
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn family(&self) -> FormFamily {
        match self.kind {
            FormKind::SlReal(_) => FormFamily::SlReal,
            FormKind::SlComplex(_) => FormFamily::SlComplex,
            FormKind::SuStar(_) => FormFamily::SuStar,
            FormKind::Su(..) => FormFamily::Su,
            FormKind::So(..) => FormFamily::So,
            FormKind::SoComplex(_) => FormFamily::SoComplex,
            FormKind::SoStar(_) => FormFamily::SoStar,
            FormKind::SpReal(_) => FormFamily::SpReal,
            FormKind::SpComplex(_) => FormFamily::SpComplex,
            FormKind::Sp(..) => FormFamily::Sp,
            FormKind::Exceptional(_) if self.complex_as_real => FormFamily::ExceptionalComplex,
            FormKind::Exceptional(_) => FormFamily::ExceptionalReal,
        }
    }

    /// Family parameters as written in the canonical name.
    pub fn params(&self) -> Vec<usize> {
        match self.kind {
            FormKind::SlReal(n)
            | FormKind::SlComplex(n)
            | FormKind::SoComplex(n)
            | FormKind::SpReal(n)
            | FormKind::SpComplex(n) => vec![n],
            FormKind::SuStar(n) | FormKind::SoStar(n) => vec![2 * n],
            FormKind::Su(p, q) | FormKind::So(p, q) | FormKind::Sp(p, q) => vec![p, q],
            FormKind::Exceptional(_) => Vec::new(),
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn restricted(&self) -> CartanType {
        self.restricted
    }

    pub fn real_rank(&self) -> usize {
        self.restricted.rank()
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_k(&self) -> usize {
        self.dim_k
    }

    pub fn dim_p(&self) -> usize {
        self.dim_p
    }

    pub fn rank_maxcompact(&self) -> usize {
        self.rank_maxcompact
    }

    pub fn is_complex_as_real(&self) -> bool {
        self.complex_as_real
    }

    /// a-hyperbolic rank of the restricted root system.
    pub fn ahyp(&self) -> usize {
        ahyp_of(self.restricted)
    }

    pub fn attributes(&self) -> AttributeRecord {
        AttributeRecord {
            restricted: self.restricted,
            real_rank: self.real_rank(),
            ahyp: self.ahyp(),
            dim_g: self.dim_g,
            dim_k: self.dim_k,
            dim_p: self.dim_p,
            rank_maxcompact: self.rank_maxcompact,
        }
    }
}

impl fmt::Display for SimpleRealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FormKind::SlReal(n) => write!(f, "sl({n},R)"),
            FormKind::SlComplex(n) => write!(f, "sl({n},C)"),
            FormKind::SuStar(n) => write!(f, "su*({})", 2 * n),
            FormKind::Su(p, q) => write!(f, "su({p},{q})"),
            FormKind::So(p, q) => write!(f, "so({p},{q})"),
            FormKind::SoComplex(n) => write!(f, "so({n},C)"),
            FormKind::SoStar(n) => write!(f, "so*({})", 2 * n),
            FormKind::SpReal(n) => write!(f, "sp({n},R)"),
            FormKind::SpComplex(n) => write!(f, "sp({n},C)"),
            FormKind::Sp(p, q) => write!(f, "sp({p},{q})"),
            FormKind::Exceptional(e) => f.write_str(e.name()),
        }
    }
}

/// Free-function form of [`SimpleRealForm::attributes`].
pub fn attributes(form: &SimpleRealForm) -> AttributeRecord {
    form.attributes()
}

/// a-hyperbolic rank of a restricted type, memoized.
pub fn ahyp_of(cartan_type: CartanType) -> usize {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, usize>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&hit) = cache.lock().expect("ahyp cache poisoned").get(&cartan_type) {
        return hit;
    }
    let value = weyl::ahyp_dimension(&RootSystem::new(cartan_type));
    cache.lock().expect("ahyp cache poisoned").insert(cartan_type, value);
    value
}

/// A compact simple (or compact semisimple) summand such as `so(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompactPart {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
}

impl CompactPart {
    fn classical(family: &str, n: usize) -> Result<Self> {
        let (dim, rank) = match family {
            "su" if n >= 2 => (n * n - 1, n - 1),
            "so" if n >= 3 => (n * (n - 1) / 2, n / 2),
            "sp" if n >= 1 => (n * (2 * n + 1), n),
            "so" if n == 2 => return Err(not_semisimple("so(2)", "u(1)^1")),
            _ => return Err(Error::Parse(format!("{family}({n}) is the zero algebra"))),
        };
        Ok(Self { name: format!("{family}({n})"), dim, rank })
    }

    fn exceptional(name: &str) -> Option<Self> {
        let (dim, rank) = match name {
            "g2" => (14, 2),
            "f4" => (52, 4),
            "e6" => (78, 6),
            "e7" => (133, 7),
            "e8" => (248, 8),
            _ => return None,
        };
        Some(Self { name: name.to_string(), dim, rank })
    }
}

/// `l = c_l + [l,l]` with `[l,l]` split into noncompact simple and compact
/// parts, and the center into split (`R^k`) and compact (`u(1)^k`) directions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReductiveDescriptor {
    pub noncompact: Vec<SimpleRealForm>,
    pub compact: Vec<CompactPart>,
    pub split_center_dim: usize,
    pub compact_center_dim: usize,
}

/// Sums of invariants over a reductive descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedInvariants {
    pub real_rank: usize,
    pub ahyp: usize,
    pub d: usize,
    pub rank_maxcompact: usize,
}

impl ReductiveDescriptor {
    pub fn simple(form: SimpleRealForm) -> Self {
        Self { noncompact: vec![form], ..Self::default() }
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::default()
    }

    /// The single noncompact simple part, when that is all there is.
    pub fn as_simple(&self) -> Option<&SimpleRealForm> {
        match self.noncompact.as_slice() {
            [only] if self.compact.is_empty() && self.split_center_dim == 0 && self.compact_center_dim == 0 => {
                Some(only)
            }
            _ => None,
        }
    }

    pub fn invariants(&self) -> DerivedInvariants {
        derived_invariants(self)
    }

    pub fn dim(&self) -> usize {
        self.noncompact.iter().map(SimpleRealForm::dim_g).sum::<usize>()
            + self.compact.iter().map(|c| c.dim).sum::<usize>()
            + self.split_center_dim
            + self.compact_center_dim
    }
}

pub fn derived_invariants(desc: &ReductiveDescriptor) -> DerivedInvariants {
    let parts = &desc.noncompact;
    DerivedInvariants {
        real_rank: parts.iter().map(SimpleRealForm::real_rank).sum::<usize>() + desc.split_center_dim,
        ahyp: parts.iter().map(SimpleRealForm::ahyp).sum(),
        d: parts.iter().map(SimpleRealForm::dim_p).sum::<usize>() + desc.split_center_dim,
        rank_maxcompact: parts.iter().map(SimpleRealForm::rank_maxcompact).sum::<usize>()
            + desc.compact.iter().map(|c| c.rank).sum::<usize>()
            + desc.compact_center_dim,
    }
}

impl fmt::Display for ReductiveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.noncompact.iter().map(ToString::to_string).collect();
        terms.extend(self.compact.iter().map(|c| c.name.clone()));
        if self.split_center_dim > 0 {
            terms.push(format!("R^{}", self.split_center_dim));
        }
        if self.compact_center_dim > 0 {
            terms.push(format!("u(1)^{}", self.compact_center_dim));
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

enum Term {
    Simple(SimpleRealForm),
    Compact(CompactPart),
    SplitCenter(usize),
    CompactCenter(usize),
}

fn parse_count(text: &str, term: &str) -> Result<usize> {
    text.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer in {term:?}, found {text:?}")))
}

fn parse_term(term: &str) -> Result<Term> {
    if let Some(k) = term.strip_prefix("R^") {
        return Ok(Term::SplitCenter(parse_count(k, term)?));
    }
    if let Some(k) = term.strip_prefix("u(1)^") {
        return Ok(Term::CompactCenter(parse_count(k, term)?));
    }
    if let Some(e) = Exceptional::from_name(term) {
        return Ok(Term::Simple(SimpleRealForm::new(FormKind::Exceptional(e))?));
    }
    if let Some(c) = CompactPart::exceptional(term) {
        return Ok(Term::Compact(c));
    }
    let (family, args) = term
        .strip_suffix(')')
        .and_then(|t| t.split_once('('))
        .ok_or_else(|| Error::Parse(format!("unrecognized term {term:?}")))?;
    let args: Vec<&str> = args.split(',').collect();
    let bad = || Error::Parse(format!("unrecognized term {term:?}"));
    let int = |s: &str| parse_count(s, term);
    let simple = |kind| SimpleRealForm::new(kind).map(Term::Simple);
    match (family, args.as_slice()) {
        ("sl", [n, "R"]) => simple(FormKind::SlReal(int(n)?)),
        ("sl", [n, "C"]) => simple(FormKind::SlComplex(int(n)?)),
        ("so", [n, "C"]) => simple(FormKind::SoComplex(int(n)?)),
        ("sp", [n, "R"]) => simple(FormKind::SpReal(int(n)?)),
        ("sp", [n, "C"]) => simple(FormKind::SpComplex(int(n)?)),
        ("su*", [m]) | ("so*", [m]) => {
            let m = int(m)?;
            if m % 2 != 0 {
                return Err(Error::Parse(format!("{family}(n) requires an even argument, found {m}")));
            }
            if family == "su*" {
                simple(FormKind::SuStar(m / 2))
            } else {
                simple(FormKind::SoStar(m / 2))
            }
        }
        ("su" | "so" | "sp", [p, q]) => {
            let (p, q) = (int(p)?, int(q)?);
            let (p, q) = (p.min(q), p.max(q));
            if p == 0 {
                return CompactPart::classical(family, q).map(Term::Compact);
            }
            match family {
                "su" => simple(FormKind::Su(p, q)),
                "so" => simple(FormKind::So(p, q)),
                _ => simple(FormKind::Sp(p, q)),
            }
        }
        ("su" | "so" | "sp", [n]) => CompactPart::classical(family, int(n)?).map(Term::Compact),
        _ => Err(bad()),
    }
}

/// Parses a reductive descriptor. The empty string and `0` denote the zero
/// algebra.
pub fn parse_descriptor(text: &str) -> Result<ReductiveDescriptor> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut desc = ReductiveDescriptor::default();
    if compact.is_empty() || compact == "0" {
        return Ok(desc);
    }
    for term in compact.split('+') {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {text:?}")));
        }
        match parse_term(term)? {
            Term::Simple(s) => desc.noncompact.push(s),
            Term::Compact(c) => desc.compact.push(c),
            Term::SplitCenter(k) => desc.split_center_dim += k,
            Term::CompactCenter(k) => desc.compact_center_dim += k,
        }
    }
    Ok(desc)
}

impl FromStr for ReductiveDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s)
    }
}

fn push_valid(out: &mut Vec<SimpleRealForm>, kind: FormKind) {
    if let Ok(form) = SimpleRealForm::new(kind) {
        out.push(form);
    }
}

/// Every catalog form whose maximal compact subalgebra has rank at most
/// `max_rank`, in canonical order (family, then parameters). The list is
/// finite because that rank grows without bound in every family parameter.
pub fn forms_with_maxcompact_rank_at_most(max_rank: usize) -> Vec<SimpleRealForm> {
    let mut out = Vec::new();
    let r = max_rank;
    for n in 2..=2 * r + 1 {
        push_valid(&mut out, FormKind::SlReal(n));
    }
    for n in 2..=r + 1 {
        push_valid(&mut out, FormKind::SlComplex(n));
    }
    for n in 2..=r {
        push_valid(&mut out, FormKind::SuStar(n));
    }
    for p in 1..=r {
        for q in p..=r + 1 - p {
            push_valid(&mut out, FormKind::Su(p, q));
        }
    }
    for p in 1..=2 * r + 1 {
        for q in p..=2 * r + 1 {
            if p / 2 + q / 2 <= r {
                push_valid(&mut out, FormKind::So(p, q));
            }
        }
    }
    for n in 3..=2 * r + 1 {
        push_valid(&mut out, FormKind::SoComplex(n));
    }
    for n in 3..=r {
        push_valid(&mut out, FormKind::SoStar(n));
    }
    for n in 1..=r {
        push_valid(&mut out, FormKind::SpReal(n));
    }
    for n in 1..=r {
        push_valid(&mut out, FormKind::SpComplex(n));
    }
    for p in 1..=r {
        for q in p..=r.saturating_sub(p) {
            push_valid(&mut out, FormKind::Sp(p, q));
        }
    }
    for e in Exceptional::ALL {
        push_valid(&mut out, FormKind::Exceptional(e));
    }
    out.retain(|f| f.rank_maxcompact() <= max_rank);
    out.sort_by_key(|f| (f.family(), f.params(), f.kind()));
    out
}

/// Every catalog form of real rank at most `max_real_rank` whose defining
/// size (`n`, or `p + q`) is at most `2 * max_real_rank + 2`, in canonical
/// order. The size bound keeps the indefinite families finite while still
/// covering both the `p = q` and `p < q` restricted types for each rank.
pub fn forms_with_real_rank_at_most(max_real_rank: usize) -> Vec<SimpleRealForm> {
    let r = max_real_rank;
    let size = 2 * r + 2;
    let mut out = Vec::new();
    for n in 2..=size {
        push_valid(&mut out, FormKind::SlReal(n));
        push_valid(&mut out, FormKind::SlComplex(n));
    }
    for n in 2..=size / 2 {
        push_valid(&mut out, FormKind::SuStar(n));
    }
    for p in 1..=size {
        for q in p..=size - p {
            push_valid(&mut out, FormKind::Su(p, q));
            push_valid(&mut out, FormKind::So(p, q));
            push_valid(&mut out, FormKind::Sp(p, q));
        }
    }
    for n in 3..=size {
        push_valid(&mut out, FormKind::SoComplex(n));
        push_valid(&mut out, FormKind::SoStar(n));
    }
    for n in 1..=size {
        push_valid(&mut out, FormKind::SpReal(n));
        push_valid(&mut out, FormKind::SpComplex(n));
    }
    for e in Exceptional::ALL {
        push_valid(&mut out, FormKind::Exceptional(e));
    }
    out.retain(|f| f.real_rank() <= r);
    out.sort_by_key(|f| (f.family(), f.params(), f.kind()));
    out
}

/// The families whose real rank and a-hyperbolic rank differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankGapFamily {
    /// `sl(2k,R)`, `k >= 2`
    SlEven,
    /// `sl(2k+1,R)`, `k >= 1`
    SlOdd,
    /// `su*(4k)`, `k >= 2`
    SuStarEven,
    /// `su*(4k+2)`, `k >= 1`
    SuStarOdd,
    /// `so(2k+1,2k+1)`, `k >= 2`
    SoOddSplit,
    E6Split,
    E6Minus26,
}

impl RankGapFamily {
    pub const ALL: [RankGapFamily; 7] = [
        RankGapFamily::SlEven,
        RankGapFamily::SlOdd,
        RankGapFamily::SuStarEven,
        RankGapFamily::SuStarOdd,
        RankGapFamily::SoOddSplit,
        RankGapFamily::E6Split,
        RankGapFamily::E6Minus26,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RankGapFamily::SlEven => "sl(2k,R)",
            RankGapFamily::SlOdd => "sl(2k+1,R)",
            RankGapFamily::SuStarEven => "su*(4k)",
            RankGapFamily::SuStarOdd => "su*(4k+2)",
            RankGapFamily::SoOddSplit => "so(2k+1,2k+1)",
            RankGapFamily::E6Split => "e6(I)",
            RankGapFamily::E6Minus26 => "e6(IV)",
        }
    }

    fn min_k(self) -> usize {
        match self {
            RankGapFamily::SlEven | RankGapFamily::SuStarEven | RankGapFamily::SoOddSplit => 2,
            _ => 1,
        }
    }

    /// The member with parameter `k` (ignored for the exceptional rows).
    pub fn member(self, k: usize) -> Option<SimpleRealForm> {
        if k < self.min_k() {
            return None;
        }
        let kind = match self {
            RankGapFamily::SlEven => FormKind::SlReal(2 * k),
            RankGapFamily::SlOdd => FormKind::SlReal(2 * k + 1),
            RankGapFamily::SuStarEven => FormKind::SuStar(2 * k),
            RankGapFamily::SuStarOdd => FormKind::SuStar(2 * k + 1),
            RankGapFamily::SoOddSplit => FormKind::So(2 * k + 1, 2 * k + 1),
            RankGapFamily::E6Split => FormKind::Exceptional(Exceptional::E6Split),
            RankGapFamily::E6Minus26 => FormKind::Exceptional(Exceptional::E6Minus26),
        };
        SimpleRealForm::new(kind).ok()
    }

    fn is_exceptional(self) -> bool {
        matches!(self, RankGapFamily::E6Split | RankGapFamily::E6Minus26)
    }
}

/// Which rank-gap family a form belongs to. `so(3,3)` is accepted as the
/// `k = 1` member of `so(2k+1,2k+1)`; it is isomorphic to `sl(4,R)`.
pub fn rank_gap_family(form: &SimpleRealForm) -> Option<RankGapFamily> {
    match form.kind() {
        FormKind::SlReal(n) if n >= 4 && n % 2 == 0 => Some(RankGapFamily::SlEven),
        FormKind::SlReal(n) if n >= 3 && n % 2 == 1 => Some(RankGapFamily::SlOdd),
        FormKind::SuStar(n) if n >= 4 && n % 2 == 0 => Some(RankGapFamily::SuStarEven),
        FormKind::SuStar(n) if n >= 3 && n % 2 == 1 => Some(RankGapFamily::SuStarOdd),
        FormKind::So(p, q) if p == q && p % 2 == 1 && p >= 3 => Some(RankGapFamily::SoOddSplit),
        FormKind::Exceptional(Exceptional::E6Split) => Some(RankGapFamily::E6Split),
        FormKind::Exceptional(Exceptional::E6Minus26) => Some(RankGapFamily::E6Minus26),
        _ => None,
    }
}

/// One computed row of the rank-gap table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankGapRow {
    pub family: RankGapFamily,
    pub k: Option<usize>,
    pub form: SimpleRealForm,
    pub ahyp: usize,
    pub real_rank: usize,
}

/// Computes the rank-gap table for `k <= k_max`.
pub fn rank_gap_rows(k_max: usize) -> Vec<RankGapRow> {
    let mut rows = Vec::new();
    for family in RankGapFamily::ALL {
        let ks: Vec<Option<usize>> =
            if family.is_exceptional() { vec![None] } else { (family.min_k()..=k_max).map(Some).collect() };
        for k in ks {
            let Some(form) = family.member(k.unwrap_or(1)) else { continue };
            rows.push(RankGapRow { family, k, ahyp: form.ahyp(), real_rank: form.real_rank(), form });
        }
    }
    rows
}

/// Non-complex forms with real rank at most `max_real_rank` whose
/// a-hyperbolic rank differs from the real rank but which lie outside every
/// rank-gap family. Empty when the table is complete in that range.
pub fn rank_gap_exceptions(max_real_rank: usize) -> Vec<SimpleRealForm> {
    forms_with_real_rank_at_most(max_real_rank)
        .into_iter()
        .filter(|f| !f.is_complex_as_real() && f.ahyp() != f.real_rank() && rank_gap_family(f).is_none())
        .collect()
}
