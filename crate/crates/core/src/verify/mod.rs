//! Verification suites over the two engines, with witness-carrying reports.

mod artinian;
mod catalog;
mod report;
mod semigroup;

pub use artinian::{
    check_product_traces, run_artinian_identity_suite, run_artinian_lp_suite, VERDICT_ALL_FAIL, VERDICT_ALL_HOLD,
};
pub use catalog::{catalog, run_catalog, CatalogEntry, CatalogRun};
pub use report::{emit_report, CheckResult, Format, Status, Summary, VerificationReport, ENGINE_VERSION};
pub use semigroup::{
    lp_counterexample, run_semigroup_identity_suite, run_semigroup_lp_suite, LP_MONOMIAL, VERDICT_COUNTEREXAMPLE,
    VERDICT_PASS,
};

use crate::caps::Caps;
use crate::spec::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lp,
    Identities,
    All,
}

impl Suite {
    pub fn includes_lp(self) -> bool {
        matches!(self, Suite::Lp | Suite::All)
    }

    pub fn includes_identities(self) -> bool {
        matches!(self, Suite::Identities | Suite::All)
    }
}

/// The selected suites for one ring, LP first.
pub fn run_suites(ring: &Ring, suite: Suite, caps: &Caps) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    match ring {
        Ring::Artinian(a) => {
            if suite.includes_lp() {
                out.push(run_artinian_lp_suite(a, caps));
            }
            if suite.includes_identities() {
                out.push(run_artinian_identity_suite(a, caps));
            }
        }
        Ring::Semigroup(s) => {
            if suite.includes_lp() {
                out.push(run_semigroup_lp_suite(s, caps));
            }
            if suite.includes_identities() {
                out.push(run_semigroup_identity_suite(s, caps));
            }
        }
    }
    out
}
