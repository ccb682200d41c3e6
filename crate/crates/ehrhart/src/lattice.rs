//! Lattice polytopes in exact arithmetic.
//!
//! A [`LatticePolytope`] is the convex hull of finitely many integer points,
//! always full-dimensional in its ambient space. Construction canonicalizes
//! the input: duplicate and non-extreme points are dropped, vertices are
//! sorted lexicographically, and the facet description is derived by brute
//! force over point subsets spanning a hyperplane. All coordinates are
//! arbitrary-precision integers; membership tests for rational points use
//! exact rationals. No floating point is involved anywhere.
//!
//! Everything is immutable after construction and safe to share across
//! threads; the facet description is cached with compute-once semantics.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::{Int, Rat};

/// Default cap on bounding-box candidates for a single dilate scan.
pub const DEFAULT_POINT_BUDGET: u64 = 100_000_000;

/// A point of the integer lattice Z^d.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<Int>,
}

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| Int::from(c)).collect(),
        }
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![Int::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.coords
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::jsonnum::int_vec::serialize(&self.coords, s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::jsonnum::int_vec::deserialize(d).map(LatticePoint::new)
    }
}

/// A closed half-space `normal · x <= offset` with primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfSpace {
    #[serde(serialize_with = "crate::jsonnum::int_vec::serialize")]
    normal: Vec<Int>,
    #[serde(serialize_with = "crate::jsonnum::serialize_int")]
    offset: Int,
}

impl HalfSpace {
    pub(crate) fn new(normal: Vec<Int>, offset: Int) -> Self {
        debug_assert!(!normal.iter().all(Zero::is_zero));
        debug_assert!(linalg::vec_gcd(&normal).is_one());
        Self { normal, offset }
    }

    pub fn normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn offset(&self) -> &Int {
        &self.offset
    }

    /// `normal · p`, exact.
    pub fn eval(&self, p: &LatticePoint) -> Int {
        linalg::dot(&self.normal, p.coords())
    }

    pub fn is_tight_at(&self, p: &LatticePoint) -> bool {
        self.eval(p) == self.offset
    }
}

/// A full-dimensional convex lattice polytope given by its vertex list.
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: OnceLock<Vec<HalfSpace>>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        let facets = OnceLock::new();
        if let Some(f) = self.facets.get() {
            let _ = facets.set(f.clone());
        }
        Self {
            dim: self.dim,
            vertices: self.vertices.clone(),
            facets,
        }
    }
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticePolytope")
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .finish()
    }
}

impl LatticePolytope {
    /// Canonicalizes a point set into a polytope: deduplicates, drops
    /// non-extreme points, sorts vertices lexicographically.
    ///
    /// Fails with [`Error::NotFullDimensional`] when the points do not
    /// affinely span dimension `dim`, and [`Error::DimensionMismatch`] on
    /// ragged input.
    pub fn from_points(points: Vec<LatticePoint>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("no points given".into()));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        let mut pts: Vec<Vec<Int>> = points.into_iter().map(LatticePoint::into_coords).collect();
        pts.sort();
        pts.dedup();

        let rank = linalg::affine_rank(&pts);
        if rank < dim {
            return Err(Error::NotFullDimensional { dim, rank });
        }

        let facets = supporting_facets(&pts, dim);

        // A point of the hull is a vertex exactly when its active facet
        // normals span the whole space.
        let vertices: Vec<LatticePoint> = pts
            .into_iter()
            .map(LatticePoint::new)
            .filter(|p| {
                let active: Vec<Vec<Int>> = facets
                    .iter()
                    .filter(|f| f.is_tight_at(p))
                    .map(|f| f.normal.clone())
                    .collect();
                linalg::rank(&active) == dim
            })
            .collect();

        let cache = OnceLock::new();
        let _ = cache.set(facets);
        Ok(Self {
            dim,
            vertices,
            facets: cache,
        })
    }

    /// Convenience constructor from machine-integer coordinates.
    pub fn from_i64_points(points: &[&[i64]], dim: usize) -> Result<Self> {
        Self::from_points(points.iter().map(|p| LatticePoint::from_i64(p)).collect(), dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// The complete irredundant facet list, outward primitive normals,
    /// ordered lexicographically by (normal, offset). Computed once, cached.
    pub fn facets(&self) -> &[HalfSpace] {
        self.facets.get_or_init(|| {
            let pts: Vec<Vec<Int>> = self.vertices.iter().map(|v| v.coords().to_vec()).collect();
            supporting_facets(&pts, self.dim)
        })
    }

    /// Componentwise min and max of the vertex coordinates.
    pub fn bounding_box(&self) -> (Vec<Int>, Vec<Int>) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, c) in v.coords().iter().enumerate() {
                if *c < lo[i] {
                    lo[i] = c.clone();
                }
                if *c > hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        (lo, hi)
    }

    /// Exact membership test for a rational point; `strict` tests the
    /// topological interior.
    pub fn contains(&self, x: &[Rat], strict: bool) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(self.facets().iter().all(|f| {
            let lhs: Rat = f
                .normal
                .iter()
                .zip(x)
                .map(|(n, xi)| Rat::from_integer(n.clone()) * xi)
                .sum();
            let rhs = Rat::from_integer(f.offset.clone());
            if strict {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        }))
    }

    /// Integer fast path of [`contains`](Self::contains).
    pub fn contains_lattice_point(&self, p: &LatticePoint, strict: bool) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(self.facets().iter().all(|f| {
            let lhs = f.eval(p);
            if strict {
                lhs < f.offset
            } else {
                lhs <= f.offset
            }
        }))
    }

    /// All lattice points of the dilate `mP`, in lexicographic order.
    /// `m = 0` yields the origin.
    pub fn lattice_points(&self, m: u32) -> Result<Vec<LatticePoint>> {
        Ok(self.dilate_scan(m, DEFAULT_POINT_BUDGET)?.0)
    }

    /// Scans the integer bounding box of `mP` once, returning the lattice
    /// points of `mP` (lexicographic) together with the number of them in
    /// the strict interior. The scan aborts with [`Error::BudgetExceeded`]
    /// when the box holds more than `budget` candidates.
    pub(crate) fn dilate_scan(&self, m: u32, budget: u64) -> Result<(Vec<LatticePoint>, u64)> {
        if m == 0 {
            return Ok((vec![LatticePoint::origin(self.dim)], 0));
        }
        let mi = Int::from(m);
        let (lo, hi) = self.bounding_box();
        let bounds: Vec<(Int, Int)> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| (l * &mi, h * &mi))
            .collect();

        let mut volume = Int::one();
        for (l, h) in &bounds {
            volume *= h - l + 1;
        }
        if volume > Int::from(budget) {
            return Err(Error::BudgetExceeded {
                stage: format!("bounding-box scan of {m}P"),
                candidates: volume,
                budget,
            });
        }

        let facets = self.facets();
        let scaled_offsets: Vec<Int> = facets.iter().map(|f| &f.offset * &mi).collect();

        // suffix_min[level][f]: least possible contribution of coordinates
        // level.. to facet f's dot product within the box.
        let mut suffix_min = vec![vec![Int::zero(); facets.len()]; self.dim + 1];
        for level in (0..self.dim).rev() {
            for (fi, f) in facets.iter().enumerate() {
                let n = &f.normal[level];
                let contrib = if n.is_negative() {
                    n * &bounds[level].1
                } else {
                    n * &bounds[level].0
                };
                suffix_min[level][fi] = &suffix_min[level + 1][fi] + contrib;
            }
        }

        let scan = Scan {
            dim: self.dim,
            facets,
            bounds,
            scaled_offsets,
            suffix_min,
        };
        let mut out = Vec::new();
        let mut strict = 0u64;
        let zero_dots = vec![Int::zero(); facets.len()];
        let mut prefix = Vec::with_capacity(self.dim);
        scan.walk(0, &zero_dots, &mut prefix, &mut out, &mut strict);
        Ok((out, strict))
    }
}

struct Scan<'a> {
    dim: usize,
    facets: &'a [HalfSpace],
    bounds: Vec<(Int, Int)>,
    scaled_offsets: Vec<Int>,
    suffix_min: Vec<Vec<Int>>,
}

impl Scan<'_> {
    fn walk(
        &self,
        level: usize,
        dots: &[Int],
        prefix: &mut Vec<Int>,
        out: &mut Vec<LatticePoint>,
        strict: &mut u64,
    ) {
        if level == self.dim {
            let mut interior = true;
            for (d, b) in dots.iter().zip(&self.scaled_offsets) {
                match d.cmp(b) {
                    Ordering::Greater => return,
                    Ordering::Equal => interior = false,
                    Ordering::Less => {}
                }
            }
            out.push(LatticePoint::new(prefix.clone()));
            if interior {
                *strict += 1;
            }
            return;
        }
        // Prune: no completion of this prefix can satisfy a violated facet.
        for (fi, d) in dots.iter().enumerate() {
            if d + &self.suffix_min[level][fi] > self.scaled_offsets[fi] {
                return;
            }
        }
        let (lo, hi) = &self.bounds[level];
        let mut x = lo.clone();
        let mut cur: Vec<Int> = dots
            .iter()
            .enumerate()
            .map(|(fi, d)| d + &self.facets[fi].normal[level] * lo)
            .collect();
        while x <= *hi {
            prefix.push(x.clone());
            self.walk(level + 1, &cur, prefix, out, strict);
            prefix.pop();
            for (fi, c) in cur.iter_mut().enumerate() {
                *c += &self.facets[fi].normal[level];
            }
            x += 1;
        }
    }
}

/// Brute-force supporting-hyperplane enumeration over all `dim`-subsets of
/// the (deduplicated, sorted) point set. Returns the irredundant facet list
/// with outward primitive normals, sorted by (normal, offset).
fn supporting_facets(pts: &[Vec<Int>], dim: usize) -> Vec<HalfSpace> {
    let mut candidates: HashSet<(Vec<Int>, Int)> = HashSet::new();
    for_each_combination(pts.len(), dim, |subset| {
        let base = &pts[subset[0]];
        let edges: Vec<Vec<Int>> = subset[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let Some(mut normal) = linalg::hyperplane_normal(&edges, dim) else {
            return;
        };
        linalg::make_primitive(&mut normal);
        // Canonical sign so duplicates collide in the set.
        if normal
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(Signed::is_negative)
        {
            for c in &mut normal {
                *c = -std::mem::take(c);
            }
        }
        let offset = linalg::dot(&normal, base);
        candidates.insert((normal, offset));
    });

    let mut facets: Vec<HalfSpace> = Vec::new();
    for (normal, offset) in candidates {
        let dots: Vec<Int> = pts.iter().map(|p| linalg::dot(&normal, p)).collect();
        let mx = dots.iter().max().unwrap();
        let mn = dots.iter().min().unwrap();
        if *mx == offset && *mn < offset {
            facets.push(HalfSpace::new(normal, offset));
        } else if *mn == offset && *mx > offset {
            facets.push(HalfSpace::new(
                normal.into_iter().map(|c| -c).collect(),
                -offset,
            ));
        }
    }
    facets.sort();
    facets.dedup();
    facets
}

/// Calls `f` with every k-subset of 0..n, in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n || k == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolytopeWire {
    dim: usize,
    vertices: Vec<LatticePoint>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeWire {
            dim: self.dim,
            vertices: self.vertices.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PolytopeWire::deserialize(d)?;
        LatticePolytope::from_points(wire.vertices, wire.dim).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(points: &[&[i64]], dim: usize) -> LatticePolytope {
        LatticePolytope::from_i64_points(points, dim).unwrap()
    }

    fn coords(p: &LatticePolytope) -> Vec<Vec<i64>> {
        p.vertices()
            .iter()
            .map(|v| v.coords().iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect()
    }

    #[test]
    fn vertex_reduce_drops_midpoint() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1]], 2);
        assert_eq!(coords(&p), vec![vec![0, 0], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn vertex_reduce_keeps_minimal_set() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1]], 2);
        assert_eq!(coords(&p), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2);
        assert_eq!(sq.n_vertices(), 4);
    }

    #[test]
    fn vertex_reduce_rejects_degenerate_input() {
        let err = LatticePolytope::from_i64_points(&[&[0, 0], &[1, 1], &[2, 2]], 2).unwrap_err();
        assert!(matches!(err, Error::NotFullDimensional { dim: 2, rank: 1 }));
        let err = LatticePolytope::from_i64_points(&[&[0, 0], &[1]], 2).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn facets_of_unit_square() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2);
        let f: Vec<(Vec<i64>, i64)> = p
            .facets()
            .iter()
            .map(|h| {
                (
                    h.normal().iter().map(|c| i64::try_from(c).unwrap()).collect(),
                    i64::try_from(h.offset()).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            f,
            vec![
                (vec![-1, 0], 0),
                (vec![0, -1], 0),
                (vec![0, 1], 1),
                (vec![1, 0], 1),
            ]
        );
    }

    #[test]
    fn facets_of_symmetric_square_have_offset_one() {
        let p = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2);
        assert_eq!(p.facets().len(), 4);
        assert!(p.facets().iter().all(|f| f.offset() == &Int::one()));
    }

    #[test]
    fn reeve_simplex_has_four_facets() {
        let p = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], 3);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.n_vertices(), 4);
    }

    #[test]
    fn contains_center_and_boundary() {
        let p = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2);
        let rat = |a: i64, b: i64| Rat::new(Int::from(a), Int::from(b));
        assert!(p.contains(&[rat(0, 1), rat(0, 1)], true).unwrap());
        assert!(!p.contains(&[rat(1, 1), rat(0, 1)], true).unwrap());
        assert!(p.contains(&[rat(1, 1), rat(0, 1)], false).unwrap());
        assert!(matches!(
            p.contains(&[rat(0, 1)], false),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn contains_point_of_dilated_reeve_simplex() {
        // (1,1,1) sits in 2P; barycentric coordinates are all 1/4.
        let p = poly(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 4]], 3);
        assert!(p
            .contains_lattice_point(&LatticePoint::from_i64(&[1, 1, 1]), false)
            .unwrap());
    }

    #[test]
    fn lattice_points_of_dilates() {
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2);
        assert_eq!(unit.lattice_points(2).unwrap().len(), 9);
        let sym = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2);
        assert_eq!(sym.lattice_points(1).unwrap().len(), 9);
        let reeve = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], 3);
        let pts = reeve.lattice_points(1).unwrap();
        assert_eq!(pts, reeve.vertices().to_vec());
    }

    #[test]
    fn lattice_points_zero_dilate_is_origin() {
        let p = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2);
        assert_eq!(p.lattice_points(0).unwrap(), vec![LatticePoint::origin(2)]);
    }

    #[test]
    fn scan_budget_is_enforced() {
        let p = poly(&[&[0, 0], &[8, 0], &[0, 8], &[8, 8]], 2);
        assert!(matches!(
            p.dilate_scan(4, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn facet_normals_are_primitive_and_distinct() {
        for p in [
            poly(&[&[0, 0], &[3, 0], &[0, 3]], 2),
            poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], 3),
            poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], 2),
        ] {
            let facets = p.facets();
            for f in facets {
                assert!(linalg::vec_gcd(f.normal()).is_one());
            }
            for (i, a) in facets.iter().enumerate() {
                for b in &facets[i + 1..] {
                    // primitive normals: proportional means equal or negated
                    assert!(a.normal() != b.normal());
                    let neg: Vec<Int> = b.normal().iter().map(|c| -c).collect();
                    assert!(!(a.normal() == neg.as_slice() && *a.offset() == -b.offset()));
                }
            }
            // each facet tight at >= dim affinely independent vertices
            for f in facets {
                let tight: Vec<Vec<Int>> = p
                    .vertices()
                    .iter()
                    .filter(|v| f.is_tight_at(v))
                    .map(|v| v.coords().to_vec())
                    .collect();
                assert!(tight.len() >= p.dim());
                assert_eq!(linalg::affine_rank(&tight), p.dim() - 1);
            }
        }
    }

    #[test]
    fn one_dimensional_segment() {
        let p = poly(&[&[0], &[5], &[2]], 1);
        assert_eq!(coords(&p), vec![vec![0], vec![5]]);
        assert_eq!(p.facets().len(), 2);
        assert_eq!(p.lattice_points(1).unwrap().len(), 6);
    }

    #[test]
    fn polytope_json_roundtrip() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1]], 2);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"dim":2,"vertices":[[0,0],[0,2],[2,0]]}"#);
        let back: LatticePolytope = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<LatticePolytope>(r#"{"dim":2,"vertices":[[0,0],[1,1]]}"#).is_err());
    }

    proptest! {
        // Canonicalization is insensitive to input order and idempotent.
        #[test]
        fn vertex_reduce_canonical(mut pts in proptest::collection::vec((-4i64..=4, -4i64..=4), 3..9)) {
            let as_points = |v: &[(i64, i64)]| -> Vec<LatticePoint> {
                v.iter().map(|&(a, b)| LatticePoint::from_i64(&[a, b])).collect()
            };
            let first = LatticePolytope::from_points(as_points(&pts), 2);
            pts.reverse();
            let second = LatticePolytope::from_points(as_points(&pts), 2);
            match (first, second) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(&a, &b);
                    let again = LatticePolytope::from_points(a.vertices().to_vec(), 2).unwrap();
                    prop_assert_eq!(&again, &a);
                    // every vertex is among the dilate-1 lattice points
                    let pts1 = a.lattice_points(1).unwrap();
                    for v in a.vertices() {
                        prop_assert!(pts1.contains(v));
                    }
                }
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "order-dependent construction outcome"),
            }
        }
    }
}
