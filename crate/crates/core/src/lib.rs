//! Numerical toolkit for log-Gamma transcendents and the identities they
//! satisfy: special functions, endpoint-aware quadrature, accelerated
//! Dirichlet-type sums, closed forms of two sinh/cosh Mellin-type integrals,
//! and a catalog of identities each checked by two independent pipelines.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod quad;
pub mod registry;
pub mod sfcore;
pub mod sumacc;
pub mod transcendent;
