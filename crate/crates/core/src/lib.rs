//! Integer expansions in a base `b ∉ {-1, 0, 1}`, numerical monoids, and the
//! digital semigroups that tie them together.
//!
//! * [`base`]: canonical digit expansions, lengths `ℓ_b`, the length bands
//!   `Δ_b(n)` and how lengths behave under multiplication.
//! * [`monoid`]: finitely generated submonoids of `(N, +)` with minimal
//!   generators, Frobenius number, gaps and factorization lengths.
//! * [`ld`]: the classes `L` and `L⁻` of length monoids, the closure
//!   algorithm computing the smallest class member containing given
//!   integers, and tree enumeration.
//! * [`digital`]: digital semigroups `θ_b(S)` and their complements.
//! * [`oracle`]: brute-force reference implementations for testing.
//!
//! ```
//! use sgdigit::{ld_closure, LdClass};
//!
//! let (s, _trace) = ld_closure(&[8], LdClass::LMinus, 1000).unwrap();
//! assert_eq!(s.gens(), &[8, 13, 15, 17, 18, 20, 22, 27]);
//! assert_eq!(s.frobenius().unwrap(), 19);
//! ```

pub mod base;
pub mod digital;
pub mod error;
pub mod ld;
pub mod monoid;
pub mod oracle;

pub use base::{Base, DigitString, LengthBand, LengthTable};
pub use digital::{
    lengths_of, no_exact_sum_length, smallest_digital_containing, ClosureCheck,
    ClosureCounterexample, DigitalSemigroup,
};
pub use error::{Error, Result};
pub use ld::{
    enumerate_by_genus, is_ld, is_ld_direct, is_ld_positive_criterion, ld_closure,
    remove_generator_ok, remove_generator_ok_tail, variety_children, ClosureTrace, LdClass,
    LdViolation,
};
pub use monoid::{MonoidJson, Submonoid};
pub use oracle::SweepReport;
