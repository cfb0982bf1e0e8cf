//! Computing with powers of m-primary monomial ideals.
//!
//! The crate works with monomial ideals through their exponent vectors:
//! exact arithmetic on minimal generating sets, the box geometry an
//! m-primary ideal induces on ℕⁿ, the good/bad classification under the
//! box decomposition principle, the Ratliff–Rush closure of good ideals
//! via axis stabilization, and the Freiman bound for equigenerated
//! ideals.
//!
//! Two independent routes exist for the expensive questions and are kept
//! deliberately separate: [`classify`] versus [`verify_box_decomposition`]
//! for goodness, and [`rr_closure`] versus [`oracle_closure`] for the
//! closure. The test suites cross-check them against each other.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is safe to call concurrently.

pub mod boxes;
pub mod closure;
pub mod error;
pub mod freiman;
pub mod goodness;
pub mod ideal;
pub mod monomial;

pub use boxes::{
    box_ideal, boxes_containing, cone_family, decompose_cone, is_corner, largest_box, BoxCoord,
    Cone, ConeEntry,
};
pub use closure::{
    axis_stabilize, axis_stabilize_unchecked, is_ratliff_rush, is_very_good, oracle_closure,
    rr_closure, rr_closure_unchecked, successive_quotient, AxisStabilization, OracleReport,
};
pub use error::{Error, Result};
pub use freiman::{freiman_check, is_equigenerated, FreimanReport, FreimanVerdict};
pub use goodness::{
    check_necessary, check_sufficient, classify, power_index, verify_box_decomposition,
    BadWitness, ClassificationReport, KBound, Rule, Verdict,
};
pub use ideal::{MPrimaryProfile, MonomialIdeal};
pub use monomial::Monomial;
