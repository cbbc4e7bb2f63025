//! Exact prime counting by counting odd composites.
//!
//! Odd composites are exactly the terms of the rows `(2n+1)^2, (2n+1)^2 +
//! 2(2n+1), ...` of the odd multiplication table. Summing the row lengths
//! over prime bases `2n+1 <= sqrt(N)` overcounts numbers with several such
//! factors; an inclusion-exclusion correction over the row intersections
//! removes the duplicates, and
//!
//! ```text
//! pi(N) = N - (N/2 - 1) - (odd composites <= N) - 1
//! ```
//!
//! All arithmetic is exact integer arithmetic. The [`oracle`] module holds an
//! independent sieve used to verify the result.
//!
//! ```
//! assert_eq!(oddpi::prime_pi(1000), 168);
//! let trace = oddpi::breakdown(100).unwrap();
//! assert_eq!((trace.raw_odd_sum, trace.lambda_c), (28, 3));
//! ```

pub mod ap_model;
pub mod error;
pub mod oracle;
pub mod overlap;
pub mod pi_engine;
pub mod ratio;
pub mod restricted_index;

pub use ap_model::{ap_count, ap_term, isqrt, n_max, ApSpec};
pub use error::{Error, Result};
pub use overlap::{
    common_difference, first_common, lambda_c, lambda_c_stats, lambda_c_truncated,
    multi_first_common, overlap_count, overlap_terms, pair_first_common, product_form_first_common,
    LambdaStats, OverlapTerm,
};
pub use pi_engine::{
    breakdown, even_composite_count, odd_composite_count, prime_pi, raw_odd_sum, PiBreakdown,
};
pub use ratio::{heaviside, ExactRatio, Heaviside};
pub use restricted_index::{
    is_ap_representable, sieve_restricted, wilson_is_prime, wilson_is_prime_capped,
    RestrictedIndexSet, WILSON_DEFAULT_CAP,
};
