//! Closed forms for elementary definite integrals, checked against a
//! quadrature oracle.
//!
//! ```
//! use gr_elementary::catalog::{evaluate_entry, integrand_of, Params};
//! use gr_elementary::harness::oracle;
//!
//! let p = Params::new().with("a", 2.0).with("b", 1.0);
//! let closed = evaluate_entry("4.222.1", &p)?;
//! let (f, domain) = integrand_of("4.222.1", &p)?;
//! let r = oracle(&f, &domain)?;
//! assert!((closed - r.value).abs() < 1e-8);
//! # Ok::<(), gr_elementary::error::Error>(())
//! ```

pub mod catalog;
pub mod error;
pub mod exact;
pub mod harness;
pub mod quadrature;
pub mod special;
