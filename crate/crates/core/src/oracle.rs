//! Brute-force ground truth: lattice-point enumeration, planar area, Pick's formula.
//!
//! Nothing here touches cones or generating functions; the only shared code
//! is the polytope's facet list and integer arithmetic.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntVector, Rat};
use crate::polytope::{box_size, for_each_point, SimplePolytope};

/// Largest bounding box the enumerator will scan.
pub const SCAN_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    /// Lattice points of the polytope in lexicographic order.
    pub points: Vec<IntVector>,
    pub count: BigInt,
    pub boundary_count: BigInt,
    pub interior_count: BigInt,
}

pub fn enumerate_points(p: &SimplePolytope) -> Result<EnumerationReport> {
    let (lo, hi) = p.bounding_box();
    let size = box_size(&lo, &hi);
    if size > BigInt::from(SCAN_LIMIT) {
        return Err(Error::ScanTooLarge(size));
    }
    let mut points = Vec::new();
    let mut boundary = 0u64;
    for_each_point(&lo, &hi, |m| {
        let mut on_boundary = false;
        for f in p.facets() {
            let s = f.slack(m);
            if s.is_negative() {
                return;
            }
            on_boundary |= s.is_zero();
        }
        if on_boundary {
            boundary += 1;
        }
        points.push(m.clone());
    });
    let count = BigInt::from(points.len());
    let boundary_count = BigInt::from(boundary);
    Ok(EnumerationReport {
        interior_count: &count - &boundary_count,
        points,
        count,
        boundary_count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PickCheck {
    pub area: Rat,
    pub count: BigInt,
    pub boundary_count: BigInt,
    pub holds: bool,
}

/// Area of a convex polygon from its vertices, by the shoelace formula over
/// the angularly sorted vertex list.
pub fn shoelace_area(p: &SimplePolytope) -> Result<Rat> {
    if p.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: p.dim(),
        });
    }
    let ring = cyclic_order(p.vertices());
    let n = ring.len();
    let twice: BigInt = (0..n)
        .map(|i| {
            let (a, b) = (&ring[i], &ring[(i + 1) % n]);
            &a[0] * &b[1] - &a[1] * &b[0]
        })
        .sum();
    Ok(Rat::new(twice.abs(), BigInt::from(2)))
}

/// Pick's identity `#points = area + boundary/2 + 1` for a lattice polygon.
pub fn pick_check(p: &SimplePolytope) -> Result<PickCheck> {
    let area = shoelace_area(p)?;
    let report = enumerate_points(p)?;
    let rhs = &area
        + Rat::new(report.boundary_count.clone(), BigInt::from(2))
        + Rat::from_integer(BigInt::from(1));
    Ok(PickCheck {
        holds: rhs == Rat::from_integer(report.count.clone()),
        area,
        count: report.count,
        boundary_count: report.boundary_count,
    })
}

/// Vertices sorted counter-clockwise around the centroid, with exact integer
/// comparisons on `len · v - Σ v`.
fn cyclic_order(vertices: &[IntVector]) -> Vec<IntVector> {
    let len = BigInt::from(vertices.len());
    let sum = vertices.iter().fold(IntVector::zero(2), |acc, v| &acc + v);
    let mut keyed: Vec<(IntVector, IntVector)> = vertices
        .iter()
        .map(|v| (&v.scale(&len) - &sum, v.clone()))
        .collect();
    keyed.sort_by(|(a, _), (b, _)| angle_cmp(a, b));
    keyed.into_iter().map(|(_, v)| v).collect()
}

fn upper_half(d: &IntVector) -> bool {
    d[1].is_positive() || (d[1].is_zero() && d[0].is_positive())
}

fn angle_cmp(a: &IntVector, b: &IntVector) -> Ordering {
    match (upper_half(a), upper_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let cross = &a[0] * &b[1] - &a[1] * &b[0];
            // a before b when b is counter-clockwise of a
            BigInt::zero().cmp(&cross)
        }
    }
}
