//! Integral closedness, unimodular simplices, and smooth polytopes.
//!
//! Closedness is semi-decided degree by degree: the set of c-fold sums of
//! lattice points of P is grown as a Minkowski-sum dynamic program and
//! compared against the full lattice-point set of cP. The first missing
//! point (lexicographically) is returned as a witness. The default test
//! bound is `max(2, d-1)`; the report records what was actually tested.

use std::collections::HashSet;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::linalg;
use crate::Int;

/// A dilation factor and a lattice point of `cP` that is not a sum of `c`
/// lattice points of `P`.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureWitness {
    pub c: u32,
    #[serde(rename = "z")]
    pub point: LatticePoint,
}

/// Outcome of the integral-closure test.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    closed_up_to: u32,
    is_closed: bool,
    witness: Option<ClosureWitness>,
}

impl ClosureReport {
    /// Highest dilation factor actually tested (the witness factor when the
    /// test failed early).
    pub fn closed_up_to(&self) -> u32 {
        self.closed_up_to
    }

    pub fn is_closed(&self) -> bool {
        self.is_closed
    }

    pub fn witness(&self) -> Option<&ClosureWitness> {
        self.witness.as_ref()
    }
}

/// Default closure test bound `max(2, d - 1)`.
pub fn default_c_max(dim: usize) -> u32 {
    (dim.saturating_sub(1)).max(2) as u32
}

/// Tests whether every lattice point of `cP` is a sum of `c` lattice points
/// of `P`, for `c = 2..=c_max`.
pub fn is_integrally_closed(polytope: &LatticePolytope, c_max: u32) -> Result<ClosureReport> {
    if c_max < 2 {
        return Err(Error::InvalidInput(format!(
            "closure test needs c_max >= 2, got {c_max}"
        )));
    }
    let generators = polytope.lattice_points(1)?;
    let mut reachable: HashSet<LatticePoint> = generators.iter().cloned().collect();

    for c in 2..=c_max {
        let expected = polytope.lattice_points(c)?;
        let mut sums: HashSet<LatticePoint> = HashSet::with_capacity(expected.len());
        for s in &reachable {
            for g in &generators {
                let coords: Vec<Int> = s
                    .coords()
                    .iter()
                    .zip(g.coords())
                    .map(|(a, b)| a + b)
                    .collect();
                sums.insert(LatticePoint::new(coords));
            }
        }
        // Convexity keeps every sum inside cP, so only omissions can occur.
        debug_assert!(sums.iter().all(|p| expected.binary_search(p).is_ok()));
        if sums.len() != expected.len() {
            let missing = expected
                .iter()
                .find(|p| !sums.contains(*p))
                .expect("a point of cP must be missing")
                .clone();
            return Ok(ClosureReport {
                closed_up_to: c,
                is_closed: false,
                witness: Some(ClosureWitness { c, point: missing }),
            });
        }
        reachable = sums;
    }

    Ok(ClosureReport {
        closed_up_to: c_max,
        is_closed: true,
        witness: None,
    })
}

/// True iff P is a simplex whose edge vectors at a vertex form a basis of
/// the lattice (determinant ±1).
pub fn is_unimodular_simplex(polytope: &LatticePolytope) -> bool {
    let d = polytope.dim();
    let vs = polytope.vertices();
    if vs.len() != d + 1 {
        return false;
    }
    let base = vs[0].coords();
    let edges: Vec<Vec<Int>> = vs[1..]
        .iter()
        .map(|v| v.coords().iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::determinant(edges).abs().is_one()
}

/// True iff every vertex is simple (exactly d edges) and its primitive edge
/// directions form a lattice basis.
pub fn is_smooth(polytope: &LatticePolytope) -> bool {
    let d = polytope.dim();
    let vs = polytope.vertices();
    let facets = polytope.facets();

    let active: Vec<Vec<usize>> = vs
        .iter()
        .map(|v| {
            facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.is_tight_at(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    for (vi, v) in vs.iter().enumerate() {
        let mut edges: Vec<Vec<Int>> = Vec::new();
        for (wi, w) in vs.iter().enumerate() {
            if wi == vi {
                continue;
            }
            // v and w span an edge iff their common active facets cut out a
            // one-dimensional face.
            let common: Vec<Vec<Int>> = active[vi]
                .iter()
                .filter(|i| active[wi].contains(i))
                .map(|&i| facets[i].normal().to_vec())
                .collect();
            if linalg::rank(&common) == d - 1 {
                let mut dir: Vec<Int> = w
                    .coords()
                    .iter()
                    .zip(v.coords())
                    .map(|(a, b)| a - b)
                    .collect();
                linalg::make_primitive(&mut dir);
                edges.push(dir);
            }
        }
        if edges.len() != d {
            return false;
        }
        if !linalg::determinant(edges).abs().is_one() {
            return false;
        }
    }
    true
}
