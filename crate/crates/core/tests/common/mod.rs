#![allow(dead_code)]

use latpoly_core::SimplePolytope;

pub struct Sample {
    pub name: &'static str,
    pub polytope: SimplePolytope,
}

fn sample(name: &'static str, dim: usize, vertices: &[&[i64]]) -> Sample {
    Sample {
        name,
        polytope: SimplePolytope::from_i64_vertices(dim, vertices)
            .unwrap_or_else(|e| panic!("{name}: {e}")),
    }
}

/// Desk-scale test polytopes in dimensions 1 to 3, coordinates at most 10.
pub fn corpus() -> Vec<Sample> {
    vec![
        sample("segment [0,5]", 1, &[&[0], &[5]]),
        sample("segment [-3,4]", 1, &[&[-3], &[4]]),
        sample("unit square", 2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]),
        sample(
            "triangle (0,0),(1,0),(1,2)",
            2,
            &[&[0, 0], &[1, 0], &[1, 2]],
        ),
        sample(
            "triangle (0,0),(2,0),(0,2)",
            2,
            &[&[0, 0], &[2, 0], &[0, 2]],
        ),
        sample(
            "triangle (0,0),(3,1),(1,3)",
            2,
            &[&[0, 0], &[3, 1], &[1, 3]],
        ),
        sample("parallelogram", 2, &[&[0, 0], &[2, 1], &[3, 3], &[1, 2]]),
        sample(
            "hexagon",
            2,
            &[&[1, 0], &[3, 0], &[4, 2], &[3, 4], &[1, 4], &[0, 2]],
        ),
        sample(
            "unit cube",
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[1, 1, 0],
                &[0, 0, 1],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        ),
        sample(
            "box [0,2]x[0,1]x[0,3]",
            3,
            &[
                &[0, 0, 0],
                &[2, 0, 0],
                &[0, 1, 0],
                &[2, 1, 0],
                &[0, 0, 3],
                &[2, 0, 3],
                &[0, 1, 3],
                &[2, 1, 3],
            ],
        ),
        sample(
            "simplex (0,0,0),(1,0,0),(0,1,0),(1,1,2)",
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]],
        ),
        sample(
            "simplex 2*standard",
            3,
            &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2]],
        ),
        sample(
            "prism (0,0),(3,0),(0,2) x [0,2]",
            3,
            &[
                &[0, 0, 0],
                &[3, 0, 0],
                &[0, 2, 0],
                &[0, 0, 2],
                &[3, 0, 2],
                &[0, 2, 2],
            ],
        ),
    ]
}
