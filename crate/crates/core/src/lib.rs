//! Exact computation of the finite-sum numbers
//!
//! ```text
//! y(n, λ) = Σ_{j=0}^{n} (-1)^n / ((j+1) λ^{j+1} (λ-1)^{n+1-j})
//! ```
//!
//! together with the number families, generating functions, zeta-type
//! values and p-adic integrals that surround them, and a catalog of
//! machine-checked identities.

pub mod exact;
pub mod genfun;
pub mod identities;
pub mod special;
pub mod volkenborn;
pub mod ynum;
pub mod zeta;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/y-numbers.md")]
    mod y_numbers {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/special-numbers.md")]
    mod special_numbers {}
    #[doc = include_str!("../../../book/src/zeta.md")]
    mod zeta {}
    #[doc = include_str!("../../../book/src/volkenborn.md")]
    mod volkenborn {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
