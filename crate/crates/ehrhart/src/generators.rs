//! Constructors for named polytope families, finite posets and their order
//! polytopes, seeded random polytopes, and the linear-extension descent
//! oracle used to cross-check order-polytope delta-vectors.

use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::Int;

/// `conv{0, e_1, ..., e_d}`.
pub fn unimodular_simplex(dim: usize) -> Result<LatticePolytope> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let mut pts = vec![vec![0i64; dim]];
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        pts.push(e);
    }
    from_rows(pts, dim)
}

/// The axis-aligned cube `[lo, hi]^d`.
pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<LatticePolytope> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidInput(format!("cube needs lo < hi, got [{lo}, {hi}]")));
    }
    let pts: Vec<Vec<i64>> = (0..1usize << dim)
        .map(|mask| {
            (0..dim)
                .map(|i| if mask >> i & 1 == 1 { hi } else { lo })
                .collect()
        })
        .collect();
    from_rows(pts, dim)
}

/// `conv{e_1, ..., e_d, -e_1-...-e_d}`, the reflexive simplex of
/// normalized volume d+1.
pub fn standard_reflexive_simplex(dim: usize) -> Result<LatticePolytope> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let mut pts = Vec::with_capacity(dim + 1);
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        pts.push(e);
    }
    pts.push(vec![-1; dim]);
    from_rows(pts, dim)
}

/// `conv{0, e_1, e_2, e_1+e_2+k e_3}`; for `k >= 2` the standard example of
/// a non-closed simplex whose only lattice points are its vertices.
pub fn reeve_simplex(k: i64) -> Result<LatticePolytope> {
    if k < 1 {
        return Err(Error::InvalidInput(format!("reeve simplex needs k >= 1, got {k}")));
    }
    from_rows(
        vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, k],
        ],
        3,
    )
}

/// The dilate `kP`, `k >= 1`.
pub fn dilate(polytope: &LatticePolytope, k: u32) -> Result<LatticePolytope> {
    if k == 0 {
        return Err(Error::InvalidInput("dilation factor must be positive".into()));
    }
    let ki = Int::from(k);
    let pts: Vec<LatticePoint> = polytope
        .vertices()
        .iter()
        .map(|v| LatticePoint::new(v.coords().iter().map(|c| c * &ki).collect()))
        .collect();
    LatticePolytope::from_points(pts, polytope.dim())
}

fn from_rows(rows: Vec<Vec<i64>>, dim: usize) -> Result<LatticePolytope> {
    LatticePolytope::from_points(
        rows.iter().map(|r| LatticePoint::from_i64(r)).collect(),
        dim,
    )
}

/// A finite poset on elements `0..size`, given by its cover relations.
/// Covers must be acyclic and irredundant; the strict order is the
/// transitive closure, computed at construction.
#[derive(Clone, Serialize)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    #[serde(skip)]
    less: Vec<bool>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from cover relations `(a, b)` meaning `a < b`.
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidInput("poset needs at least one element".into()));
        }
        let mut seen = HashSet::new();
        for &(a, b) in &covers {
            if a >= size || b >= size {
                return Err(Error::InvalidInput(format!(
                    "cover ({a}, {b}) out of range for {size} elements"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("cover ({a}, {a}) is reflexive")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidInput(format!("duplicate cover ({a}, {b})")));
            }
        }

        // transitive closure of the cover digraph
        let mut less = vec![false; size * size];
        for &(a, b) in &covers {
            less[a * size + b] = true;
        }
        for k in 0..size {
            for a in 0..size {
                if less[a * size + k] {
                    for b in 0..size {
                        if less[k * size + b] {
                            less[a * size + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..size {
            if less[a * size + a] {
                return Err(Error::InvalidInput("covers contain a cycle".into()));
            }
        }
        // a cover implied by transitivity is rejected, not silently dropped
        for &(a, b) in &covers {
            let implied = (0..size).any(|z| less[a * size + z] && less[z * size + b]);
            if implied {
                return Err(Error::InvalidInput(format!(
                    "cover ({a}, {b}) is implied by transitivity"
                )));
            }
        }

        Ok(Self { size, covers, less })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order `a < b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.size + b]
    }

    /// Down-sets as bitmasks of elements, ascending.
    fn ideal_masks(&self) -> Result<Vec<u32>> {
        if self.size > 20 {
            return Err(Error::BudgetExceeded {
                stage: "order ideal enumeration".into(),
                candidates: Int::from(1u64) << self.size,
                budget: 1 << 20,
            });
        }
        let mut out = Vec::new();
        'mask: for mask in 0u32..1 << self.size {
            for &(a, b) in &self.covers {
                if mask >> b & 1 == 1 && mask >> a & 1 == 0 {
                    continue 'mask;
                }
            }
            out.push(mask);
        }
        Ok(out)
    }
}

#[derive(Deserialize)]
struct PosetWire {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PosetWire::deserialize(d)?;
        Poset::new(wire.size, wire.covers).map_err(serde::de::Error::custom)
    }
}

/// The order polytope of a poset: convex hull of the characteristic vectors
/// of its order ideals, a full-dimensional 0/1 polytope in dimension
/// `|Q|`.
pub fn order_polytope(poset: &Poset) -> Result<LatticePolytope> {
    let n = poset.size();
    let pts: Vec<LatticePoint> = poset
        .ideal_masks()?
        .into_iter()
        .map(|mask| {
            LatticePoint::new(
                (0..n)
                    .map(|i| Int::from(mask >> i & 1))
                    .collect(),
            )
        })
        .collect();
    LatticePolytope::from_points(pts, n)
}

/// Number of order ideals (vertices of the order polytope).
pub fn order_ideal_count(poset: &Poset) -> Result<usize> {
    Ok(poset.ideal_masks()?.len())
}

/// Counts linear extensions by descent number, with respect to the
/// canonical natural labeling (the lexicographically smallest linear
/// extension, built greedily from smallest available minimal elements).
/// Entry `i` counts extensions with exactly `i` descents; the vector is
/// padded to length `n + 1`. Any natural labeling yields the same vector;
/// fixing one makes the oracle deterministic.
pub fn descent_delta_oracle(poset: &Poset) -> Result<Vec<Int>> {
    let n = poset.size();
    if n > 10 {
        return Err(Error::BudgetExceeded {
            stage: "linear extension enumeration".into(),
            candidates: (1..=n as u64).product::<u64>().into(),
            budget: 3_628_800, // 10!
        });
    }

    // canonical natural labeling
    let mut label = vec![usize::MAX; n];
    let mut placed = vec![false; n];
    for next_label in 0..n {
        let e = (0..n)
            .find(|&e| {
                !placed[e] && (0..n).all(|z| !poset.less(z, e) || placed[z])
            })
            .expect("an acyclic digraph always has a minimal element");
        placed[e] = true;
        label[e] = next_label;
    }

    let mut counts = vec![Int::from(0); n + 1];
    let full: u32 = (1 << n) - 1;

    fn walk(
        poset: &Poset,
        label: &[usize],
        counts: &mut [Int],
        mask: u32,
        prev_label: usize,
        descents: usize,
        full: u32,
    ) {
        if mask == full {
            counts[descents] += 1;
            return;
        }
        let n = poset.size();
        for e in 0..n {
            if mask >> e & 1 == 1 {
                continue;
            }
            if (0..n).any(|z| poset.less(z, e) && mask >> z & 1 == 0) {
                continue;
            }
            let l = label[e];
            let d = descents + usize::from(mask != 0 && l < prev_label);
            walk(poset, label, counts, mask | 1 << e, l, d, full);
        }
    }

    walk(poset, &label, &mut counts, 0, 0, 0, full);
    Ok(counts)
}

/// SplitMix64, a fixed 64-bit generator so results are identical on every
/// platform: the state advances by `0x9E3779B97F4A7C15` and the output is
/// the finalizer `z ^= z >> 30, z *= 0xBF58476D1CE4E5B9; z ^= z >> 27,
/// z *= 0x94D049BB133111EB; z ^= z >> 31` applied to it.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[-bound, bound]` by reduction modulo `2b + 1`.
    pub fn next_coord(&mut self, bound: i64) -> i64 {
        let range = 2 * bound as u64 + 1;
        (self.next_u64() % range) as i64 - bound
    }
}

const RANDOM_POLYTOPE_ATTEMPTS: u32 = 64;

/// A seeded random polytope: `n_points` draws from `[-b, b]^d`, reduced to
/// their convex hull, retried (bounded) until full-dimensional.
/// Bit-reproducible across platforms for a fixed seed.
pub fn random_polytope(
    dim: usize,
    coord_bound: i64,
    n_points: usize,
    seed: u64,
) -> Result<LatticePolytope> {
    if !(2..=4).contains(&dim) {
        return Err(Error::InvalidInput(format!(
            "random polytopes support dimensions 2..=4, got {dim}"
        )));
    }
    if !(1..=8).contains(&coord_bound) {
        return Err(Error::InvalidInput(format!(
            "coordinate bound must be in 1..=8, got {coord_bound}"
        )));
    }
    if n_points < dim + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} points in dimension {dim}, got {n_points}",
            dim + 1
        )));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..RANDOM_POLYTOPE_ATTEMPTS {
        let pts: Vec<LatticePoint> = (0..n_points)
            .map(|_| {
                LatticePoint::new(
                    (0..dim).map(|_| Int::from(rng.next_coord(coord_bound))).collect(),
                )
            })
            .collect();
        match LatticePolytope::from_points(pts, dim) {
            Ok(p) => return Ok(p),
            Err(Error::NotFullDimensional { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed {
        attempts: RANDOM_POLYTOPE_ATTEMPTS,
    })
}

/// All posets on `n <= 5` elements up to isomorphism, each in a canonical
/// labeling. Sizes 1..=5 give 1, 2, 5, 16, 63 classes.
pub fn posets_up_to_iso(n: usize) -> Result<Vec<Poset>> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidInput(format!(
            "poset catalog supports 1..=5 elements, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let n_pairs = pairs.len();
    let perms = permutations(n);

    let mut seen: HashSet<u32> = HashSet::new();
    let mut catalog = Vec::new();

    let mut states = vec![0u8; n_pairs];
    loop {
        if let Some(less) = relation_from_states(n, &pairs, &states) {
            let key = canonical_key(n, &less, &perms);
            if seen.insert(key) {
                let poset = poset_from_relation(n, &key_to_relation(n, key))
                    .expect("canonical covers are acyclic and irredundant");
                catalog.push(poset);
            }
        }
        // odometer over {0,1,2}^n_pairs
        let mut i = 0;
        loop {
            if i == n_pairs {
                catalog.sort_by_key(|p| (p.covers().len(), p.covers().to_vec()));
                return Ok(catalog);
            }
            if states[i] < 2 {
                states[i] += 1;
                break;
            }
            states[i] = 0;
            i += 1;
        }
    }
}

/// Builds the strict relation matrix for one orientation assignment, if it
/// is transitive.
fn relation_from_states(n: usize, pairs: &[(usize, usize)], states: &[u8]) -> Option<Vec<bool>> {
    let mut less = vec![false; n * n];
    for (&(i, j), &s) in pairs.iter().zip(states) {
        match s {
            1 => less[i * n + j] = true,
            2 => less[j * n + i] = true,
            _ => {}
        }
    }
    for a in 0..n {
        for b in 0..n {
            if less[a * n + b] {
                for c in 0..n {
                    if less[b * n + c] && !less[a * n + c] {
                        return None;
                    }
                }
            }
        }
    }
    Some(less)
}

fn canonical_key(n: usize, less: &[bool], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|perm| {
            let mut key = 0u32;
            for a in 0..n {
                for b in 0..n {
                    if less[perm[a] * n + perm[b]] {
                        key |= 1 << (a * n + b);
                    }
                }
            }
            key
        })
        .min()
        .expect("at least the identity permutation")
}

fn key_to_relation(n: usize, key: u32) -> Vec<bool> {
    (0..n * n).map(|i| key >> i & 1 == 1).collect()
}

fn poset_from_relation(n: usize, less: &[bool]) -> Result<Poset> {
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a * n + b] && !(0..n).any(|z| less[a * n + z] && less[z * n + b]) {
                covers.push((a, b));
            }
        }
    }
    Poset::new(n, covers)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(&mut current, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
