//! Exact computations over restricted root systems and Weyl groups for
//! proper actions of reductive subgroups on reductive homogeneous spaces
//! `G/H`: real and a-hyperbolic rank inequalities, the Weyl-orbit properness
//! criterion for explicitly embedded split subspaces, the `d`-invariant
//! cocompactness test, and an obstruction engine for standard compact
//! Clifford–Klein forms.
//!
//! All arithmetic is exact (big rationals or machine integers); nothing here
//! takes a tolerance.

pub mod catalog;
pub mod criteria;
pub mod error;
pub mod linalg;
pub mod obstruction;
pub mod rootspace;
pub mod weyl;

pub use catalog::{
    derived_invariants, parse_descriptor, AttributeRecord, DerivedInvariants, FormFamily, FormKind,
    ReductiveDescriptor, SimpleRealForm,
};
pub use criteria::{
    antipodal_orbit_check, check_proper_embedded, cocompact_dimension_check, necessary_conditions,
    EmbeddedVerdict, PropernessReport, Subspace,
};
pub use error::{Error, Result};
pub use linalg::{Rational, RationalMatrix, RationalVector};
pub use obstruction::{standard_form_verdict, CandidateReport, StandardFormVerdict, Verdict};
pub use rootspace::{build_root_system, reflect, CartanType, RootSystem, TypeLetter};
pub use weyl::{FixedCone, WeylElement};
