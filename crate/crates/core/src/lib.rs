//! Exact-arithmetic computation and verification for the Boros-Moll
//! coefficient triangle `d_l(m)`.
//!
//! The crate has three layers:
//!
//! - **Numbers** ([`arith`]): arbitrary-precision rationals and quadratic
//!   surds `p + q*sqrt(t)` with exact, float-free comparison.
//! - **Data** ([`coeffs`]): the coefficient triangle computed by three
//!   independent methods (direct sum, double sum, three-term recurrence)
//!   that are cross-validated entry-by-entry.
//! - **Claims** ([`inequalities`], [`poly`]): runtime verification of the
//!   inequality family on computed rows (log-concavity, higher-order Turán,
//!   ratio bounds with radical-valued bound functions, the Hou-Li criterion),
//!   and symbolic certification of the polynomial identities and positivity
//!   facts those inequalities rest on.
//!
//! Every verdict is decided in exact arithmetic; decimals appear only in
//! display columns of reports ([`report`]).

pub mod arith;
pub mod coeffs;
pub mod inequalities;
pub mod poly;
pub mod report;

pub use arith::{ArithError, QuadraticSurd, Rat};
pub use coeffs::{Triangle, TriangleMethod};
pub use inequalities::houli::{houli_d, houli_verify, make_bm_bounds, BoundFns};
pub use inequalities::row_checks::TuranBound;
pub use inequalities::{check_ids, find_checks, registry, run_sweep, InequalitiesError, RowCheck};
pub use poly::{MultiPoly, PolyError, Var};
pub use report::{CheckReport, Instance, Outcome, ReportLine, Value, Verdict};
