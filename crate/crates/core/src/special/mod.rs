//! Classical number and polynomial families, each with two independent
//! computation paths.

mod bernoulli;
mod highorder;
mod numbers;
mod stirling;
mod table;

pub use bernoulli::{bernoulli, bernoulli_numbers, bernoulli_numbers_recurrence};
pub use highorder::{
    apostol_bernoulli, apostol_bernoulli_at, apostol_bernoulli_formula, apostol_bernoulli_poly,
    apostol_bernoulli_series, bernoulli_high, euler_at_zero, euler_high, high_order_polynomial,
    HighOrderFamily, HighOrderPolynomial,
};
pub use numbers::{
    alt_harmonic, bernoulli_second_kind, daehee, daehee_via_stirling, derangement,
    derangement_recurrence, harmonic, harmonic_numbers, leibnitz, HarmonicKind, LeibnitzError,
    LeibnitzMethod,
};
pub use stirling::{
    stirling1, stirling1_row, stirling2, stirling2_recurrence, stirling2_row, StirlingMethod,
};
pub use table::{Family, NumberFamilyTable};
