//! Shared fixtures for the integration suites: a fixed corpus of named
//! polytopes covering segments, cubes, simplices, reflexive families, the
//! Reeve simplices, an order polytope and a few seeded random instances.

use ehrhart::generators::{
    cube, order_polytope, random_polytope, reeve_simplex, standard_reflexive_simplex,
    unimodular_simplex, Poset,
};
use ehrhart::LatticePolytope;

pub struct Fixture {
    pub name: String,
    pub polytope: LatticePolytope,
}

pub fn corpus() -> Vec<Fixture> {
    let mut fixtures = vec![
        Fixture {
            name: "segment_unit".into(),
            polytope: unimodular_simplex(1).unwrap(),
        },
        Fixture {
            name: "segment_len3".into(),
            polytope: LatticePolytope::from_i64_points(&[&[0], &[3]], 1).unwrap(),
        },
        Fixture {
            name: "segment_sym".into(),
            polytope: cube(1, -1, 1).unwrap(),
        },
        Fixture {
            name: "unit_square".into(),
            polytope: cube(2, 0, 1).unwrap(),
        },
        Fixture {
            name: "sym_square".into(),
            polytope: cube(2, -1, 1).unwrap(),
        },
        Fixture {
            name: "unit_cube".into(),
            polytope: cube(3, 0, 1).unwrap(),
        },
        Fixture {
            name: "sym_cube".into(),
            polytope: cube(3, -1, 1).unwrap(),
        },
        Fixture {
            name: "unit_cube4".into(),
            polytope: cube(4, 0, 1).unwrap(),
        },
        Fixture {
            name: "usimplex2".into(),
            polytope: unimodular_simplex(2).unwrap(),
        },
        Fixture {
            name: "usimplex3".into(),
            polytope: unimodular_simplex(3).unwrap(),
        },
        Fixture {
            name: "usimplex4".into(),
            polytope: unimodular_simplex(4).unwrap(),
        },
        Fixture {
            name: "srs2".into(),
            polytope: standard_reflexive_simplex(2).unwrap(),
        },
        Fixture {
            name: "srs3".into(),
            polytope: standard_reflexive_simplex(3).unwrap(),
        },
        Fixture {
            name: "srs4".into(),
            polytope: standard_reflexive_simplex(4).unwrap(),
        },
        Fixture {
            name: "reeve2".into(),
            polytope: reeve_simplex(2).unwrap(),
        },
        Fixture {
            name: "reeve3".into(),
            polytope: reeve_simplex(3).unwrap(),
        },
        Fixture {
            name: "cross2".into(),
            polytope: LatticePolytope::from_i64_points(
                &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
                2,
            )
            .unwrap(),
        },
        Fixture {
            name: "order_v_poset".into(),
            polytope: order_polytope(&Poset::new(3, vec![(0, 1), (0, 2)]).unwrap()).unwrap(),
        },
    ];
    for (i, (dim, bound, points)) in [(2usize, 3i64, 6usize), (2, 2, 5), (3, 2, 6), (3, 3, 7)]
        .into_iter()
        .enumerate()
    {
        fixtures.push(Fixture {
            name: format!("random_{dim}d_{i}"),
            polytope: random_polytope(dim, bound, points, 1000 + i as u64).unwrap(),
        });
    }
    fixtures
}
