//! Combinatorics of symbol pairs: pairs of equal-length nondecreasing
//! sequences of naturals, the inequality-constrained families they form, and
//! the parametrizations of unipotent classes and nilpotent orbits for the
//! classical groups in characteristic 2 that these families describe.
//!
//! * [`seq`]: the value types, addition, padding, normalization.
//! * [`family`]: the nine families, enumeration, closure under addition.
//! * [`decomp`]: constructive splitting into family members plus a
//!   brute-force oracle.
//! * [`springer`]: orbit labels, fixed-point reconstruction, the map from
//!   group-side to algebra-side labels, counting tables.
//! * [`verify`]: exhaustive suites that check all of the above at small size.

pub mod decomp;
pub mod error;
pub mod family;
pub mod partition;
pub mod seq;
pub mod springer;
pub mod verify;

pub use decomp::{atomize, decompose_step, oracle_decompositions, Decomposition, Leaf, LeafRole, ProofCase, Series, Split};
pub use error::{Error, Result};
pub use family::{enumerate, member, verify_closure, ClosureReport, ClosureRule, Family, ENUMERATION_CAP};
pub use seq::{make_pair, BoundedSeq, SymbolPair};
pub use springer::{
    counts, exceptional_delta, springer_set, t2_fixed_point, tau, zeta_fiber, ClassicalType, CountRow, ExceptionalDelta,
    ExceptionalType, FiberMarker, GroupType, OrbitLabel, Side, SpringerSet, TauMap,
};
