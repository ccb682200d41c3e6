//! Executable verifiers for the volume bounds, delta-vector inequalities,
//! unimodality and related statements, each producing a
//! [`VerificationReport`] that separates "hypotheses met" from "conclusion
//! holds" so that vacuous truth is never counted as verification.

use serde::Serialize;
use serde_json::{json, Value};

use crate::counting::EhrhartData;
use crate::error::{Error, Result};
use crate::jsonnum::IntJson;
use crate::lattice::LatticePolytope;
use crate::linalg::{binomial, binomial_u};
use crate::normality::{is_unimodular_simplex, ClosureReport};
use crate::osequence::HSequence;
use crate::reflexivity::is_reflexive;
use crate::{Int, Rat};
use num_traits::{One, ToPrimitive, Zero};

/// The theorem identifiers accepted by the `verify` front end.
pub const THEOREM_IDS: [&str; 8] = [
    "volume_upper",
    "reflexive_upper",
    "partial_sums",
    "lower_bound",
    "hibi_lbt",
    "unimodality",
    "diff_o",
    "oda",
];

/// Structured outcome of one theorem check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    theorem_id: String,
    applicable: bool,
    holds: bool,
    #[serde(with = "crate::jsonnum::int")]
    lhs: Int,
    #[serde(with = "crate::jsonnum::int")]
    rhs: Int,
    equality: bool,
    detail: Value,
}

impl VerificationReport {
    fn not_applicable(id: &str, detail: Value) -> Self {
        Self {
            theorem_id: id.into(),
            applicable: false,
            holds: false,
            lhs: Int::zero(),
            rhs: Int::zero(),
            equality: false,
            detail,
        }
    }

    fn comparison(id: &str, lhs: Int, rhs: Int, detail: Value) -> Self {
        let holds = lhs <= rhs;
        let equality = lhs == rhs;
        Self {
            theorem_id: id.into(),
            applicable: true,
            holds,
            lhs,
            rhs,
            equality,
            detail,
        }
    }

    fn boolean(id: &str, holds: bool, detail: Value) -> Self {
        Self {
            theorem_id: id.into(),
            applicable: true,
            holds,
            lhs: Int::zero(),
            rhs: Int::zero(),
            equality: false,
            detail,
        }
    }

    pub fn theorem_id(&self) -> &str {
        &self.theorem_id
    }

    pub fn applicable(&self) -> bool {
        self.applicable
    }

    /// Meaningful only when [`applicable`](Self::applicable).
    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn lhs(&self) -> &Int {
        &self.lhs
    }

    pub fn rhs(&self) -> &Int {
        &self.rhs
    }

    pub fn equality(&self) -> bool {
        self.equality
    }

    pub fn detail(&self) -> &Value {
        &self.detail
    }

    /// Hypotheses met but conclusion false: the census quarantines these.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

fn int_value(x: &Int) -> Value {
    serde_json::to_value(IntJson(x.clone())).expect("integer serialization cannot fail")
}

/// Facet count of the cyclic d-polytope on n vertices,
/// `C(n - floor((d+1)/2), n-d) + C(n - floor((d+2)/2), n-d)`.
pub fn cyclic_facets(n: u64, d: u32) -> Result<Int> {
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "cyclic polytopes need dimension >= 2, got {d}"
        )));
    }
    if n < d as u64 + 1 {
        return Err(Error::InvalidInput(format!(
            "cyclic polytopes need n >= d + 1, got n = {n}, d = {d}"
        )));
    }
    let k = n - d as u64;
    let a = n - (d as u64 + 1) / 2;
    let b = n - (d as u64 + 2) / 2;
    Ok(binomial_u(a, k) + binomial_u(b, k))
}

/// Volume bound for integrally closed polytopes: `d! vol P <= C(n-1, d)`.
pub fn verify_volume_upper(
    polytope: &LatticePolytope,
    data: &EhrhartData,
    closure: &ClosureReport,
) -> VerificationReport {
    const ID: &str = "volume_upper";
    if !closure.is_closed() {
        return VerificationReport::not_applicable(ID, json!({"integrally_closed": false}));
    }
    let d = data.dim();
    let n = data.lattice_point_count();
    let lhs = data.normalized_volume();
    let rhs = binomial(&(n - Int::one()), d as u32);
    let class = schepers_classification(polytope, data, closure);
    VerificationReport::comparison(
        ID,
        lhs,
        rhs,
        json!({"n": int_value(n), "equality_class": class}),
    )
}

/// Volume bound for reflexive integrally closed polytopes:
/// `d! vol P <=` facet count of the cyclic d-polytope on n vertices.
pub fn verify_reflexive_upper(
    data: &EhrhartData,
    closure: &ClosureReport,
    reflexive: bool,
) -> VerificationReport {
    const ID: &str = "reflexive_upper";
    let d = data.dim();
    if !(reflexive && closure.is_closed()) {
        return VerificationReport::not_applicable(
            ID,
            json!({"reflexive": reflexive, "integrally_closed": closure.is_closed()}),
        );
    }
    if d < 2 {
        return VerificationReport::not_applicable(
            ID,
            json!({"note": "cyclic polytopes are defined for dimension >= 2"}),
        );
    }
    let n = data.lattice_point_count();
    let Some(n_u64) = n.to_u64() else {
        return VerificationReport::not_applicable(ID, json!({"note": "n out of range"}));
    };
    let lhs = data.normalized_volume();
    let rhs = cyclic_facets(n_u64, d as u32).expect("n >= d + 2 > d for a d-polytope");
    VerificationReport::comparison(ID, lhs, rhs, json!({"n": int_value(n)}))
}

/// Running-sum inequalities for the delta-vector of an integrally closed
/// polytope: `delta_1+..+delta_n <= delta_{m+1}+..+delta_{m+n}` for
/// `m >= 0`, `n >= 1`, `m + n < s`.
pub fn verify_partial_sums(data: &EhrhartData, closure: &ClosureReport) -> VerificationReport {
    const ID: &str = "partial_sums";
    if !closure.is_closed() {
        return VerificationReport::not_applicable(ID, json!({"integrally_closed": false}));
    }
    let seq = HSequence::new(data.delta().to_vec()).expect("delta entries are nonnegative");
    let violations = seq.partial_sum_violations();
    VerificationReport::boolean(ID, violations.is_empty(), json!({ "violations": violations }))
}

/// Lower volume bound `2 + (s-1) delta_1 <= d! vol P` with
/// `delta_1 = n - d - 1`, and its equality pattern `(1, delta_1, ..., delta_1, 1)`.
pub fn verify_lower_bound(data: &EhrhartData, closure: &ClosureReport) -> VerificationReport {
    const ID: &str = "lower_bound";
    let truncated = data.delta_truncated();
    let s = truncated.len() - 1;
    if !closure.is_closed() || s < 1 {
        return VerificationReport::not_applicable(
            ID,
            json!({"integrally_closed": closure.is_closed(), "s": s}),
        );
    }
    let d = data.dim();
    let delta_1 = data.lattice_point_count() - Int::from(d as u64 + 1);
    let lhs = Int::from(2) + Int::from(s as u64 - 1) * &delta_1;
    let rhs = data.normalized_volume();
    let pattern = truncated[0].is_one()
        && truncated[s].is_one()
        && truncated[1..s].iter().all(|x| *x == delta_1);
    VerificationReport::comparison(
        ID,
        lhs,
        rhs,
        json!({"s": s, "delta_1": int_value(&delta_1), "equality_pattern": pattern}),
    )
}

/// Lower Bound Theorem: `delta_1 <= delta_i` for `2 <= i <= d-1` whenever P
/// has an interior lattice point.
pub fn verify_hibi_lbt(data: &EhrhartData) -> VerificationReport {
    const ID: &str = "hibi_lbt";
    if data.interior_counts()[0].is_zero() {
        return VerificationReport::not_applicable(ID, json!({"interior_points": 0}));
    }
    let d = data.dim();
    let delta = data.delta();
    if d < 3 {
        return VerificationReport::boolean(ID, true, json!({"vacuous": true}));
    }
    let delta_1 = delta[1].clone();
    let min_mid = delta[2..d].iter().min().expect("range 2..d nonempty").clone();
    VerificationReport::comparison(ID, delta_1, min_mid, json!({"range": [2, d - 1]}))
}

/// Unimodality of the delta-vector for reflexive integrally closed
/// polytopes with few lattice points (`n <= d + 4`).
pub fn verify_unimodality(
    data: &EhrhartData,
    closure: &ClosureReport,
    reflexive: bool,
) -> VerificationReport {
    const ID: &str = "unimodality";
    let d = data.dim();
    let n = data.lattice_point_count();
    let few_points = *n <= Int::from(d as u64 + 4);
    if !(reflexive && closure.is_closed() && few_points) {
        return VerificationReport::not_applicable(
            ID,
            json!({
                "reflexive": reflexive,
                "integrally_closed": closure.is_closed(),
                "n": int_value(n),
                "bound": d + 4,
            }),
        );
    }
    let unimodal = HSequence::new(data.delta().to_vec())
        .expect("delta entries are nonnegative")
        .is_unimodal();
    VerificationReport::boolean(ID, unimodal, json!({"n": int_value(n)}))
}

/// The counting sequence and the boundary counting sequence (with the
/// degree-zero 1 prepended) of an integrally closed polytope are
/// differentiable O-sequences. Needs counts up to `M >= d + 2`.
pub fn verify_diff_o(data: &EhrhartData, closure: &ClosureReport) -> VerificationReport {
    const ID: &str = "diff_o";
    let d = data.dim();
    let available = data.counts().len() - 1;
    if !closure.is_closed() {
        return VerificationReport::not_applicable(ID, json!({"integrally_closed": false}));
    }
    if available < d + 2 {
        return VerificationReport::not_applicable(
            ID,
            json!({"note": "needs counts up to d + 2", "available": available}),
        );
    }
    let counts_ok = HSequence::new(data.counts().to_vec())
        .expect("counts are nonnegative")
        .is_differentiable_o_sequence();
    let mut boundary = vec![Int::one()];
    boundary.extend(data.boundary_counts());
    let boundary_ok = HSequence::new(boundary)
        .expect("boundary counts are nonnegative")
        .is_differentiable_o_sequence();
    VerificationReport::boolean(
        ID,
        counts_ok && boundary_ok,
        json!({"counts_ok": counts_ok, "boundary_ok": boundary_ok}),
    )
}

/// For smooth polytopes: integrally closed, and the volume bound
/// `d! vol P <= C(n-1, d)` holds. A smooth counterexample to either part
/// would be publishable; the census quarantines it verbatim.
pub fn verify_oda(
    polytope: &LatticePolytope,
    data: &EhrhartData,
    closure: &ClosureReport,
) -> VerificationReport {
    const ID: &str = "oda";
    if !crate::normality::is_smooth(polytope) {
        return VerificationReport::not_applicable(ID, json!({"smooth": false}));
    }
    let d = data.dim();
    let n = data.lattice_point_count();
    let lhs = data.normalized_volume();
    let rhs = binomial(&(n - Int::one()), d as u32);
    let mut report = VerificationReport::comparison(
        ID,
        lhs,
        rhs,
        json!({"integrally_closed": closure.is_closed(), "n": int_value(n)}),
    );
    report.holds = report.holds && closure.is_closed();
    report
}

/// Extremal classes of the volume upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchepersClass {
    #[serde(rename = "DIM_ONE")]
    DimOne,
    #[serde(rename = "UNIMODULAR_SIMPLEX")]
    UnimodularSimplex,
    #[serde(rename = "STANDARD_REFLEXIVE_SIMPLEX")]
    StandardReflexiveSimplex,
    #[serde(rename = "NONE")]
    None,
}

/// Classifies an integrally closed polytope against the known extremal
/// cases of the volume upper bound. Equality holds exactly for segments,
/// unimodular simplices, and lattice copies of
/// `conv{e_1, ..., e_d, -e_1-...-e_d}`.
pub fn schepers_classification(
    polytope: &LatticePolytope,
    data: &EhrhartData,
    closure: &ClosureReport,
) -> SchepersClass {
    if !closure.is_closed() {
        return SchepersClass::None;
    }
    let d = polytope.dim();
    if d == 1 {
        return SchepersClass::DimOne;
    }
    if is_unimodular_simplex(polytope) {
        return SchepersClass::UnimodularSimplex;
    }
    if is_standard_reflexive_simplex(polytope, data) {
        return SchepersClass::StandardReflexiveSimplex;
    }
    SchepersClass::None
}

/// Lattice-isomorphism test against `conv{e_1,...,e_d, -e_1-...-e_d}`:
/// a simplex with d+2 lattice points, normalized volume d+1, reflexive
/// after moving its unique interior point to the origin.
fn is_standard_reflexive_simplex(polytope: &LatticePolytope, data: &EhrhartData) -> bool {
    let d = polytope.dim();
    if polytope.n_vertices() != d + 1 {
        return false;
    }
    if *data.lattice_point_count() != Int::from(d as u64 + 2) {
        return false;
    }
    if data.normalized_volume() != Int::from(d as u64 + 1) {
        return false;
    }
    if !data.interior_counts()[0].is_one() {
        return false;
    }
    let Ok(points) = polytope.lattice_points(1) else {
        return false;
    };
    let center = points
        .iter()
        .find(|p| polytope.contains_lattice_point(p, true).unwrap_or(false))
        .expect("interior count is 1");
    let translated: Vec<crate::lattice::LatticePoint> = polytope
        .vertices()
        .iter()
        .map(|v| {
            crate::lattice::LatticePoint::new(
                v.coords()
                    .iter()
                    .zip(center.coords())
                    .map(|(a, b)| a - b)
                    .collect(),
            )
        })
        .collect();
    match LatticePolytope::from_points(translated, d) {
        Ok(p) => is_reflexive(&p),
        Err(_) => false,
    }
}

/// Evaluates `d c_d` and `2 c_{d-1}` agreement as rationals (used by tests
/// and the examples to restate the volume identity).
pub fn volume_identity_sides(data: &EhrhartData) -> (Rat, Rat) {
    let d = data.dim();
    let coeffs = data.coefficients();
    (
        Rat::from_integer(Int::from(d as u64)) * &coeffs[d],
        Rat::from_integer(Int::from(2)) * &coeffs[d - 1],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normality::{default_c_max, is_integrally_closed};

    fn poly(points: &[&[i64]], dim: usize) -> LatticePolytope {
        LatticePolytope::from_i64_points(points, dim).unwrap()
    }

    fn prepared(p: &LatticePolytope) -> (EhrhartData, ClosureReport, bool) {
        let data = EhrhartData::compute(p, p.dim() as u32 + 2).unwrap();
        let closure = is_integrally_closed(p, default_c_max(p.dim())).unwrap();
        let reflexive = is_reflexive(p);
        (data, closure, reflexive)
    }

    fn sym_square() -> LatticePolytope {
        poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2)
    }

    fn srs2() -> LatticePolytope {
        poly(&[&[1, 0], &[0, 1], &[-1, -1]], 2)
    }

    fn unit_square() -> LatticePolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2)
    }

    fn reeve2() -> LatticePolytope {
        poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], 3)
    }

    #[test]
    fn cyclic_facet_formula() {
        for n in 3..=12u64 {
            assert_eq!(cyclic_facets(n, 2).unwrap(), Int::from(n));
        }
        assert_eq!(cyclic_facets(5, 3).unwrap(), Int::from(6));
        assert_eq!(cyclic_facets(6, 3).unwrap(), Int::from(8));
        assert_eq!(cyclic_facets(6, 4).unwrap(), Int::from(9));
        for d in 2..=6u32 {
            assert_eq!(cyclic_facets(d as u64 + 1, d).unwrap(), Int::from(d + 1));
        }
        assert!(cyclic_facets(3, 1).is_err());
        assert!(cyclic_facets(3, 3).is_err());
    }

    #[test]
    fn cyclic_facets_match_moment_curve_hulls() {
        for (n, d) in [(5u64, 3usize), (6, 3), (6, 4)] {
            let pts: Vec<Vec<i64>> = (1..=n as i64)
                .map(|t| (1..=d as u32).map(|e| t.pow(e)).collect())
                .collect();
            let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
            let hull = poly(&refs, d);
            assert_eq!(
                Int::from(hull.facets().len()),
                cyclic_facets(n, d as u32).unwrap(),
                "n={n} d={d}"
            );
        }
    }

    #[test]
    fn volume_upper_examples() {
        let p = sym_square();
        let (data, closure, _) = prepared(&p);
        let r = verify_volume_upper(&p, &data, &closure);
        assert!(r.applicable() && r.holds() && !r.equality());
        assert_eq!(r.lhs(), &Int::from(8));
        assert_eq!(r.rhs(), &Int::from(28));

        let p = srs2();
        let (data, closure, _) = prepared(&p);
        let r = verify_volume_upper(&p, &data, &closure);
        assert!(r.equality());
        assert_eq!(r.lhs(), &Int::from(3));
        assert_eq!(r.detail()["equality_class"], "STANDARD_REFLEXIVE_SIMPLEX");

        let p = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        let (data, closure, _) = prepared(&p);
        let r = verify_volume_upper(&p, &data, &closure);
        assert!(r.equality());
        assert_eq!(r.detail()["equality_class"], "UNIMODULAR_SIMPLEX");

        let p = reeve2();
        let (data, closure, _) = prepared(&p);
        assert!(!verify_volume_upper(&p, &data, &closure).applicable());
    }

    #[test]
    fn reflexive_upper_examples() {
        let (data, closure, reflexive) = prepared(&sym_square());
        let r = verify_reflexive_upper(&data, &closure, reflexive);
        assert!(r.applicable() && r.holds());
        assert_eq!(r.lhs(), &Int::from(8));
        assert_eq!(r.rhs(), &Int::from(9));

        let (data, closure, reflexive) = prepared(&srs2());
        let r = verify_reflexive_upper(&data, &closure, reflexive);
        assert!(r.holds());
        assert_eq!(r.rhs(), &Int::from(4));

        let (data, closure, reflexive) = prepared(&unit_square());
        assert!(!reflexive);
        assert!(!verify_reflexive_upper(&data, &closure, reflexive).applicable());
    }

    #[test]
    fn partial_sums_examples() {
        let (data, closure, _) = prepared(&sym_square());
        assert!(verify_partial_sums(&data, &closure).holds());
        let (data, closure, _) = prepared(&reeve2());
        assert!(!verify_partial_sums(&data, &closure).applicable());
    }

    #[test]
    fn lower_bound_examples() {
        let (data, closure, _) = prepared(&srs2());
        let r = verify_lower_bound(&data, &closure);
        assert!(r.equality());
        assert_eq!(r.detail()["equality_pattern"], true);

        let (data, closure, _) = prepared(&sym_square());
        let r = verify_lower_bound(&data, &closure);
        assert!(r.equality());
        assert_eq!(r.lhs(), &Int::from(8));
        assert_eq!(r.detail()["equality_pattern"], true);

        // delta of the unimodular triangle truncates to (1): s = 0
        let (data, closure, _) = prepared(&poly(&[&[0, 0], &[1, 0], &[0, 1]], 2));
        assert!(!verify_lower_bound(&data, &closure).applicable());
    }

    #[test]
    fn hibi_lbt_examples() {
        let (data, _, _) = prepared(&sym_square());
        let r = verify_hibi_lbt(&data);
        assert!(r.applicable() && r.holds());
        assert_eq!(r.detail()["vacuous"], true);

        let cube3 = poly(
            &[
                &[-1, -1, -1], &[1, -1, -1], &[-1, 1, -1], &[1, 1, -1],
                &[-1, -1, 1], &[1, -1, 1], &[-1, 1, 1], &[1, 1, 1],
            ],
            3,
        );
        let (data, _, _) = prepared(&cube3);
        assert_eq!(data.delta(), &[Int::from(1), Int::from(23), Int::from(23), Int::from(1)]);
        let r = verify_hibi_lbt(&data);
        assert!(r.applicable() && r.holds() && r.equality());

        let (data, _, _) = prepared(&unit_square());
        assert!(!verify_hibi_lbt(&data).applicable());
    }

    #[test]
    fn unimodality_examples() {
        let (data, closure, reflexive) = prepared(&srs2());
        let r = verify_unimodality(&data, &closure, reflexive);
        assert!(r.applicable() && r.holds());

        let (data, closure, reflexive) = prepared(&sym_square());
        assert!(!verify_unimodality(&data, &closure, reflexive).applicable()); // n = 9 > 6

        let simplex = poly(&[&[0, 0], &[1, 0], &[0, 1]], 2);
        let (data, closure, reflexive) = prepared(&simplex);
        assert!(!verify_unimodality(&data, &closure, reflexive).applicable());
    }

    #[test]
    fn diff_o_examples() {
        let (data, closure, _) = prepared(&unit_square());
        let r = verify_diff_o(&data, &closure);
        assert!(r.applicable() && r.holds());

        let (data, closure, _) = prepared(&sym_square());
        assert!(verify_diff_o(&data, &closure).holds());

        let (data, closure, _) = prepared(&reeve2());
        assert!(!verify_diff_o(&data, &closure).applicable());

        // too-short count sequence is flagged, not guessed
        let p = unit_square();
        let short = EhrhartData::compute(&p, 3).unwrap();
        let closure = is_integrally_closed(&p, 2).unwrap();
        assert!(!verify_diff_o(&short, &closure).applicable());
    }

    #[test]
    fn oda_examples() {
        let p = unit_square();
        let (data, closure, _) = prepared(&p);
        let r = verify_oda(&p, &data, &closure);
        assert!(r.applicable() && r.holds());
        assert_eq!(r.lhs(), &Int::from(2));
        assert_eq!(r.rhs(), &Int::from(3));

        let cube3 = poly(
            &[
                &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0],
                &[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
            ],
            3,
        );
        let (data, closure, _) = prepared(&cube3);
        let r = verify_oda(&cube3, &data, &closure);
        assert!(r.holds());
        assert_eq!(r.lhs(), &Int::from(6));
        assert_eq!(r.rhs(), &Int::from(35));

        let p = srs2();
        let (data, closure, _) = prepared(&p);
        assert!(!verify_oda(&p, &data, &closure).applicable());
    }

    #[test]
    fn schepers_classes() {
        let seg = poly(&[&[0], &[2]], 1);
        let (data, closure, _) = prepared(&seg);
        assert_eq!(schepers_classification(&seg, &data, &closure), SchepersClass::DimOne);

        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]], 2);
        let (data, closure, _) = prepared(&tri);
        assert_eq!(
            schepers_classification(&tri, &data, &closure),
            SchepersClass::UnimodularSimplex
        );

        let p = srs2();
        let (data, closure, _) = prepared(&p);
        assert_eq!(
            schepers_classification(&p, &data, &closure),
            SchepersClass::StandardReflexiveSimplex
        );

        // translated copy is still recognized (lattice isomorphism)
        let shifted = poly(&[&[2, 1], &[1, 2], &[0, 0]], 2);
        let (data, closure, _) = prepared(&shifted);
        assert_eq!(
            schepers_classification(&shifted, &data, &closure),
            SchepersClass::StandardReflexiveSimplex
        );

        let sq = sym_square();
        let (data, closure, _) = prepared(&sq);
        assert_eq!(schepers_classification(&sq, &data, &closure), SchepersClass::None);
    }

    #[test]
    fn report_json_fields() {
        let p = sym_square();
        let (data, closure, _) = prepared(&p);
        let v = serde_json::to_value(verify_volume_upper(&p, &data, &closure)).unwrap();
        assert_eq!(v["theorem_id"], "volume_upper");
        assert_eq!(v["applicable"], true);
        assert_eq!(v["holds"], true);
        assert_eq!(v["lhs"], 8);
        assert_eq!(v["rhs"], 28);
        assert_eq!(v["equality"], false);
        assert!(v["detail"].is_object());
    }
}
