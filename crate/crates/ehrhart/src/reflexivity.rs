//! Reflexive polytopes and the four equivalent characterizations.
//!
//! With primitive outward normals, the origin is interior exactly when all
//! facet offsets are positive, and the dual is a lattice polytope exactly
//! when they are all 1. The report also evaluates the counting identity,
//! the volume identity and delta-palindromy; when the origin is interior
//! their agreement is a theorem, so disagreement raises an error.

use serde::Serialize;

use crate::counting::EhrhartData;
use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::osequence::HSequence;
use crate::Rat;
use num_traits::One;

#[derive(Clone, Debug, Serialize)]
pub struct ReflexivityReport {
    #[serde(rename = "reflexive")]
    is_reflexive: bool,
    cond_ii: bool,
    cond_iii: bool,
    cond_iv: bool,
    origin_interior: bool,
}

impl ReflexivityReport {
    pub fn is_reflexive(&self) -> bool {
        self.is_reflexive
    }

    /// Counting identity `L_P(m) = L_∂P(m) + L_P(m-1)` for `1 <= m <= M`.
    pub fn counting_identity(&self) -> bool {
        self.cond_ii
    }

    /// Volume identity `d vol P = vol ∂P`, tested as `d c_d = 2 c_{d-1}`.
    pub fn volume_identity(&self) -> bool {
        self.cond_iii
    }

    /// Palindromy `delta_i = delta_{d-i}`.
    pub fn palindromic_delta(&self) -> bool {
        self.cond_iv
    }

    pub fn origin_interior(&self) -> bool {
        self.origin_interior
    }
}

/// True iff the origin is strictly interior and every primitive facet
/// inequality has offset exactly 1 (equivalently, the dual polytope is a
/// lattice polytope).
pub fn is_reflexive(polytope: &LatticePolytope) -> bool {
    polytope.facets().iter().all(|f| f.offset().is_one())
}

/// Checks all four characterizations up to dilation factor `M >= d + 1`.
pub fn reflexivity_report(polytope: &LatticePolytope, dilates: u32) -> Result<ReflexivityReport> {
    let data = EhrhartData::compute(polytope, dilates)?;
    reflexivity_report_with(polytope, &data)
}

/// Same as [`reflexivity_report`], reusing precomputed counting data.
pub fn reflexivity_report_with(
    polytope: &LatticePolytope,
    data: &EhrhartData,
) -> Result<ReflexivityReport> {
    let d = polytope.dim();
    let origin_interior = polytope
        .facets()
        .iter()
        .all(|f| f.offset() > &crate::Int::from(0));
    let cond_i = is_reflexive(polytope);

    // L_P(m) = L_∂P(m) + L_P(m-1)  <=>  L_{P°}(m) = L_P(m-1)
    let counts = data.counts();
    let interior = data.interior_counts();
    let cond_ii = (1..counts.len()).all(|m| interior[m - 1] == counts[m - 1]);

    let coeffs = data.coefficients();
    let cond_iii = Rat::from_integer(crate::Int::from(d as u64)) * &coeffs[d]
        == Rat::from_integer(crate::Int::from(2)) * &coeffs[d - 1];

    let cond_iv = HSequence::new(data.delta().to_vec())
        .expect("delta entries are nonnegative")
        .is_palindromic();

    if origin_interior && !(cond_i == cond_ii && cond_ii == cond_iii && cond_iii == cond_iv) {
        return Err(Error::EquivalenceViolation(format!(
            "origin is interior but the four reflexivity conditions disagree: \
             dual={cond_i} counting={cond_ii} volume={cond_iii} palindromy={cond_iv}"
        )));
    }

    Ok(ReflexivityReport {
        is_reflexive: cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        origin_interior,
    })
}
