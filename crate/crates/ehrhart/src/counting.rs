//! Lattice-point counting and the Ehrhart polynomial.
//!
//! [`EhrhartData::compute`] enumerates the dilates `mP` for `m = 0..=M`,
//! interpolates the counting polynomial by exact finite differences over the
//! nodes `0..=d` (with `d+1` as a verification node), derives the
//! delta-vector by alternating sums, and counts strict-interior points with
//! the reciprocity identity `|mP° ∩ Z^d| = (-1)^d L_P(-m)` enforced as a
//! mandatory cross-check. Everything is exact; any disagreement between the
//! two routes is reported as an error rather than papered over.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{LatticePolytope, DEFAULT_POINT_BUDGET};
use crate::linalg::binomial_u;
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// Counting data of one polytope: `L_P(0..M)`, the polynomial coefficients
/// `c_0..c_d`, the delta-vector, and the interior counts `L_{P°}(1..M)`.
#[derive(Clone, Debug, Serialize)]
pub struct EhrhartData {
    #[serde(skip)]
    dim: usize,
    #[serde(with = "crate::jsonnum::int_vec")]
    counts: Vec<Int>,
    #[serde(with = "crate::jsonnum::rat_vec")]
    coeffs: Vec<Rat>,
    #[serde(with = "crate::jsonnum::int_vec")]
    delta: Vec<Int>,
    #[serde(rename = "interior", with = "crate::jsonnum::int_vec")]
    interior_counts: Vec<Int>,
}

impl EhrhartData {
    /// Computes all counting data up to dilation factor `M >= dim + 1`.
    pub fn compute(polytope: &LatticePolytope, dilates: u32) -> Result<Self> {
        Self::compute_with_budget(polytope, dilates, DEFAULT_POINT_BUDGET)
    }

    pub fn compute_with_budget(
        polytope: &LatticePolytope,
        dilates: u32,
        budget: u64,
    ) -> Result<Self> {
        let d = polytope.dim();
        if (dilates as usize) < d + 1 {
            return Err(Error::InvalidInput(format!(
                "need at least {} dilates for a {d}-dimensional polytope, got {dilates}",
                d + 1
            )));
        }

        let mut counts = Vec::with_capacity(dilates as usize + 1);
        let mut interior_counts = Vec::with_capacity(dilates as usize);
        for m in 0..=dilates {
            let (pts, strict) = polytope.dilate_scan(m, budget)?;
            counts.push(Int::from(pts.len()));
            if m >= 1 {
                interior_counts.push(Int::from(strict));
            }
        }

        let coeffs = interpolate(&counts[..=d]);
        // Verification node: the counting function is a polynomial, so a
        // mismatch at d+1 means the enumeration or interpolation is broken.
        let at_check = eval(&coeffs, (d + 1) as i64);
        let enumerated = &counts[d + 1];
        if at_check != Rat::from_integer(enumerated.clone()) {
            return Err(Error::InterpolationMismatch {
                at: (d + 1) as u32,
                polynomial: rat_floor(&at_check),
                enumerated: enumerated.clone(),
            });
        }

        let delta = delta_from_counts(&counts[..=d], d)?;

        // Reciprocity: strict enumeration must match the polynomial at -m.
        for m in 1..=dilates {
            let value = eval(&coeffs, -(m as i64));
            let signed = if d % 2 == 1 { -value } else { value };
            let expected = Rat::from_integer(interior_counts[(m - 1) as usize].clone());
            if signed != expected {
                return Err(Error::ReciprocityViolation {
                    m,
                    enumerated: interior_counts[(m - 1) as usize].clone(),
                    polynomial: rat_floor(&signed),
                });
            }
        }

        let data = Self {
            dim: d,
            counts,
            coeffs,
            delta,
            interior_counts,
        };
        data.assert_delta_identities();
        Ok(data)
    }

    /// Consistency of the computed data with the known coefficient and
    /// delta identities; all of these are theorems, so a failure is a bug.
    fn assert_delta_identities(&self) {
        let d = self.dim;
        assert!(self.counts[0].is_one(), "L_P(0) must be 1");
        assert!(self.coeffs[0].is_one(), "constant coefficient must be 1");
        assert!(self.coeffs[d].is_positive(), "leading coefficient must be positive");
        assert!(self.delta[0].is_one(), "delta_0 must be 1");
        assert_eq!(
            self.delta[1],
            &self.counts[1] - Int::from(d as u64 + 1),
            "delta_1 must equal n - d - 1"
        );
        assert_eq!(
            self.delta[d], self.interior_counts[0],
            "delta_d must equal the interior count of P"
        );
        let mut factorial = Int::one();
        for k in 2..=d {
            factorial *= Int::from(k as u64);
        }
        let normalized = &self.coeffs[d] * Rat::from_integer(factorial);
        assert!(normalized.is_integer());
        assert_eq!(
            normalized.to_integer(),
            self.normalized_volume(),
            "sum of delta entries must equal d! vol"
        );
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `L_P(0..=M)`.
    pub fn counts(&self) -> &[Int] {
        &self.counts
    }

    /// Polynomial coefficients `c_0..c_d`, exact rationals.
    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The delta-vector `(delta_0, ..., delta_d)`.
    pub fn delta(&self) -> &[Int] {
        &self.delta
    }

    /// `L_{P°}(1..=M)`.
    pub fn interior_counts(&self) -> &[Int] {
        &self.interior_counts
    }

    /// Number of lattice points of P itself, `n = L_P(1)`.
    pub fn lattice_point_count(&self) -> &Int {
        &self.counts[1]
    }

    /// `d! vol(P)`, the sum of the delta-vector.
    pub fn normalized_volume(&self) -> Int {
        self.delta.iter().sum()
    }

    /// Evaluates the counting polynomial at an integer (possibly negative).
    pub fn evaluate(&self, m: i64) -> Rat {
        eval(&self.coeffs, m)
    }

    /// `L_∂P(m) = L_P(m) - L_{P°}(m)` for `m = 1..=M`.
    pub fn boundary_counts(&self) -> Vec<Int> {
        (1..self.counts.len())
            .map(|m| &self.counts[m] - &self.interior_counts[m - 1])
            .collect()
    }

    /// Delta-vector with trailing zeros removed.
    pub fn delta_truncated(&self) -> &[Int] {
        let last = self.delta.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
        &self.delta[..=last]
    }
}

/// `L_P(m)` for `m = 0..=M` (requires `M >= dim + 1`).
pub fn count_sequence(polytope: &LatticePolytope, dilates: u32) -> Result<Vec<Int>> {
    Ok(EhrhartData::compute(polytope, dilates)?.counts)
}

/// The exact coefficients `c_0..c_d` of the counting polynomial.
pub fn ehrhart_polynomial(polytope: &LatticePolytope) -> Result<Vec<Rat>> {
    let m = polytope.dim() as u32 + 1;
    Ok(EhrhartData::compute(polytope, m)?.coeffs)
}

/// The delta-vector of a polytope.
pub fn delta_vector(polytope: &LatticePolytope) -> Result<Vec<Int>> {
    let m = polytope.dim() as u32 + 1;
    Ok(EhrhartData::compute(polytope, m)?.delta)
}

/// `|mP° ∩ Z^d|` by strict facet filtering, cross-checked against
/// `(-1)^d L_P(-m)`.
pub fn interior_count(polytope: &LatticePolytope, m: u32) -> Result<Int> {
    if m == 0 {
        return Err(Error::InvalidInput("interior count needs m >= 1".into()));
    }
    let dilates = m.max(polytope.dim() as u32 + 1);
    let data = EhrhartData::compute(polytope, dilates)?;
    Ok(data.interior_counts[(m - 1) as usize].clone())
}

/// `L_∂P(m)` for `m = 1..=M`.
pub fn boundary_count_sequence(polytope: &LatticePolytope, dilates: u32) -> Result<Vec<Int>> {
    if dilates == 0 {
        return Err(Error::InvalidInput("boundary sequence needs M >= 1".into()));
    }
    let needed = dilates.max(polytope.dim() as u32 + 1);
    let data = EhrhartData::compute(polytope, needed)?;
    Ok(data.boundary_counts()[..dilates as usize].to_vec())
}

/// Newton interpolation through `(m, values[m])`, `m = 0..=d`, by exact
/// forward differences; returns monomial coefficients low to high.
fn interpolate(values: &[Int]) -> Vec<Rat> {
    let d = values.len() - 1;
    let mut diffs = Vec::with_capacity(d + 1);
    let mut row: Vec<Int> = values.to_vec();
    diffs.push(row[0].clone());
    for _ in 1..=d {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        diffs.push(row[0].clone());
    }

    let mut coeffs = vec![Rat::zero(); d + 1];
    let mut falling: Vec<Int> = vec![Int::one()]; // m(m-1)...(m-k+1), low to high
    let mut factorial = Int::one();
    for (k, diff) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= Int::from(k as u64);
            let shift = Int::from(k as i64 - 1);
            let mut next = vec![Int::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        if diff.is_zero() {
            continue;
        }
        let scale = Rat::new(diff.clone(), factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i] += &scale * Rat::from_integer(c.clone());
            }
        }
    }
    coeffs
}

fn eval(coeffs: &[Rat], m: i64) -> Rat {
    let x = Rat::from_integer(Int::from(m));
    coeffs
        .iter()
        .rev()
        .fold(Rat::zero(), |acc, c| acc * &x + c)
}

fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// `delta_i = sum_j (-1)^j C(d+1, j) L_P(i-j)`; fails on a negative entry
/// (nonnegativity is a theorem).
fn delta_from_counts(counts: &[Int], d: usize) -> Result<Vec<Int>> {
    let mut delta = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut entry = Int::zero();
        for j in 0..=i {
            let term = binomial_u((d + 1) as u64, j as u64) * &counts[i - j];
            if j % 2 == 0 {
                entry += term;
            } else {
                entry -= term;
            }
        }
        if entry.is_negative() {
            return Err(Error::NegativeDelta {
                index: i,
                value: entry,
            });
        }
        delta.push(entry);
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[i64]], dim: usize) -> LatticePolytope {
        LatticePolytope::from_i64_points(points, dim).unwrap()
    }

    fn unit_square() -> LatticePolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2)
    }

    fn sym_square() -> LatticePolytope {
        poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2)
    }

    fn reeve2() -> LatticePolytope {
        poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], 3)
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn rats(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(p, q)| Rat::new(Int::from(p), Int::from(q))).collect()
    }

    #[test]
    fn count_sequences() {
        assert_eq!(count_sequence(&unit_square(), 3).unwrap(), ints(&[1, 4, 9, 16]));
        assert_eq!(count_sequence(&sym_square(), 3).unwrap(), ints(&[1, 9, 25, 49]));
        assert_eq!(count_sequence(&reeve2(), 4).unwrap(), ints(&[1, 4, 11, 24, 45]));
    }

    #[test]
    fn count_sequence_needs_enough_dilates() {
        assert!(matches!(
            count_sequence(&unit_square(), 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn polynomials() {
        assert_eq!(ehrhart_polynomial(&unit_square()).unwrap(), rats(&[(1, 1), (2, 1), (1, 1)]));
        // c_1 = (1/2) * boundary length 8
        assert_eq!(ehrhart_polynomial(&sym_square()).unwrap(), rats(&[(1, 1), (4, 1), (4, 1)]));
        // leading coefficient 1/3, so normalized volume 2
        let c = ehrhart_polynomial(&reeve2()).unwrap();
        assert_eq!(c[3], Rat::new(Int::from(1), Int::from(3)));
    }

    #[test]
    fn delta_vectors() {
        assert_eq!(delta_vector(&sym_square()).unwrap(), ints(&[1, 6, 1]));
        assert_eq!(delta_vector(&reeve2()).unwrap(), ints(&[1, 0, 1, 0]));
        let simplex3 = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(delta_vector(&simplex3).unwrap(), ints(&[1, 0, 0, 0]));
        assert_eq!(delta_vector(&unit_square()).unwrap(), ints(&[1, 1, 0]));
    }

    #[test]
    fn interior_counts() {
        assert_eq!(interior_count(&sym_square(), 1).unwrap(), Int::from(1));
        assert_eq!(interior_count(&unit_square(), 1).unwrap(), Int::zero());
        assert_eq!(interior_count(&unit_square(), 2).unwrap(), Int::one());
        assert_eq!(interior_count(&reeve2(), 1).unwrap(), Int::zero());
    }

    #[test]
    fn boundary_sequences() {
        assert_eq!(boundary_count_sequence(&sym_square(), 2).unwrap(), ints(&[8, 16]));
        assert_eq!(boundary_count_sequence(&unit_square(), 2).unwrap(), ints(&[4, 8]));
        let simplex2 = poly(&[&[0, 0], &[1, 0], &[0, 1]], 2);
        assert_eq!(boundary_count_sequence(&simplex2, 1).unwrap(), ints(&[3]));
    }

    // Independent route to the delta-vector: coefficients of
    // (sum_m L(m) t^m) (1-t)^{d+1} truncated at degree d.
    fn delta_by_series(counts: &[Int], d: usize) -> Vec<Int> {
        let mut kernel = vec![Int::zero(); d + 2]; // (1-t)^{d+1}
        for (j, k) in kernel.iter_mut().enumerate() {
            let b = binomial_u((d + 1) as u64, j as u64);
            *k = if j % 2 == 0 { b } else { -b };
        }
        (0..=d)
            .map(|i| {
                (0..=i)
                    .map(|j| &kernel[j] * &counts[i - j])
                    .sum()
            })
            .collect()
    }

    #[test]
    fn delta_agrees_with_series_route() {
        for (p, d) in [
            (unit_square(), 2),
            (sym_square(), 2),
            (reeve2(), 3),
            (poly(&[&[0, 0], &[3, 0], &[0, 3]], 2), 2),
        ] {
            let data = EhrhartData::compute(&p, d as u32 + 1).unwrap();
            assert_eq!(data.delta(), delta_by_series(data.counts(), d).as_slice());
        }
    }

    #[test]
    fn data_serializes_with_exact_fields() {
        let data = EhrhartData::compute(&sym_square(), 3).unwrap();
        let v = serde_json::to_value(&data).unwrap();
        assert_eq!(v["counts"], serde_json::json!([1, 9, 25, 49]));
        assert_eq!(v["coeffs"], serde_json::json!(["1/1", "4/1", "4/1"]));
        assert_eq!(v["delta"], serde_json::json!([1, 6, 1]));
        assert_eq!(v["interior"], serde_json::json!([1, 9, 25]));
    }
}
