//! Modules over quantum tori: contraction modules `A / fA`, modules induced
//! from characters of the coefficient subalgebra, finite-dimensional modules
//! at roots of unity, and the checks run on them.

pub mod contraction;
pub mod finite;
pub mod growth;
pub mod hypotheses;
pub mod induced;

use serde::Serialize;

pub use contraction::{
    build_contraction, certify_simplicity_contraction, criticality_check, gk_certified,
    ContractionModule, CriticalityVerdict, SimplicityCertificate,
};
pub use finite::{certify_simplicity_finite, clock_shift_module, FiniteDimModule, FiniteVerdict};
pub use growth::{gk_growth_estimate, GrowthEstimate};
pub use hypotheses::{
    check_hypotheses, corollary_2_4_check, survey_conjecture, CorollaryVerdict, Hypotheses,
    SurveyEntry, SurveyOptions, SurveyReport,
};
pub use induced::{
    build_induced, induced_simplicity_verdict, Character, InducedModule, InducedVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorsionVerdict {
    Torsion,
    NotTorsion,
    Undetermined,
}

/// Torsion of the module over the subalgebra spanned by a coordinate subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupVerdict {
    /// 1-based generator indices.
    pub coordinates: Vec<usize>,
    pub rank: usize,
    pub verdict: TorsionVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GkReport {
    pub module: String,
    pub lower: usize,
    pub upper: usize,
    pub verdicts: Vec<SubgroupVerdict>,
    pub witnesses: Vec<String>,
    pub growth: Option<GrowthEstimate>,
    /// Set when the growth slope falls outside `[lower, upper]` by more than
    /// the tolerance.
    pub growth_flag: bool,
}

/// Allowed distance between the growth slope and the certified bounds.
pub const GROWTH_TOLERANCE: f64 = 0.15;

impl GkReport {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn attach_growth(&mut self, g: GrowthEstimate) {
        self.growth_flag = g.slope < self.lower as f64 - GROWTH_TOLERANCE
            || g.slope > self.upper as f64 + GROWTH_TOLERANCE;
        self.growth = Some(g);
    }
}
