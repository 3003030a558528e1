//! Simple lattice polytopes and their vertex tangent cones.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    determinant, inverse, orthogonal_complement, primitive, rank, IntMatrix, IntVector,
};

/// The half-space `⟨normal, x⟩ ≥ offset`, with `normal` primitive and inward.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVector,
    pub offset: BigInt,
}

impl Facet {
    pub fn new(normal: IntVector, offset: BigInt) -> Self {
        Facet { normal, offset }
    }

    /// `⟨normal, x⟩ - offset`; non-negative exactly on the half-space.
    pub fn slack(&self, x: &IntVector) -> BigInt {
        self.normal.dot(x) - &self.offset
    }
}

/// A validated, full-dimensional, simple lattice polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
    incidence: Vec<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
}

impl SimplePolytope {
    /// Validates the vertex list, computing facets when none are given
    /// (dimensions up to 3 only).
    pub fn new(dim: usize, vertices: Vec<IntVector>, facets: Option<Vec<Facet>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if vertices.is_empty() {
            return Err(Error::NoVertices);
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] == vertices[j] {
                    return Err(Error::DuplicateVertex {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let r = affine_rank(&vertices);
        if r != dim {
            return Err(Error::NotFullDimensional { rank: r, dim });
        }

        let facets = match facets {
            None => compute_facets(dim, &vertices)?,
            Some(given) => normalize_facets(dim, &vertices, given)?,
        };

        let mut incidence = Vec::with_capacity(vertices.len());
        for (vi, v) in vertices.iter().enumerate() {
            let tight: Vec<usize> = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.slack(v).is_zero())
                .map(|(fi, _)| fi)
                .collect();
            if tight.len() != dim {
                return Err(Error::NonSimpleVertex {
                    vertex: vi,
                    tight: tight.len(),
                    dim,
                });
            }
            let normals =
                IntMatrix::from_rows(tight.iter().map(|&f| facets[f].normal.clone()).collect())?;
            if rank(&normals) != dim {
                return Err(Error::NotExtreme { vertex: vi });
            }
            incidence.push(tight);
        }

        let mut adjacency = vec![Vec::new(); vertices.len()];
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let shared = incidence[i]
                    .iter()
                    .filter(|f| incidence[j].contains(f))
                    .count();
                if shared + 1 == dim {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for (vi, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.len() != dim {
                return Err(Error::WrongDegree {
                    vertex: vi,
                    found: nbrs.len(),
                    dim,
                });
            }
        }

        Ok(SimplePolytope {
            dim,
            vertices,
            facets,
            incidence,
            adjacency,
        })
    }

    pub fn from_i64_vertices(dim: usize, vertices: &[&[i64]]) -> Result<Self> {
        Self::new(
            dim,
            vertices.iter().map(|v| IntVector::from_i64s(v)).collect(),
            None,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the facets tight at each vertex.
    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// Sorted neighbour indices of each vertex.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Componentwise min and max over the vertices.
    pub fn bounding_box(&self) -> (IntVector, IntVector) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for k in 0..self.dim {
                if v[k] < lo[k] {
                    lo.0[k] = v[k].clone();
                }
                if v[k] > hi[k] {
                    hi.0[k] = v[k].clone();
                }
            }
        }
        (lo, hi)
    }

    /// The dilate `k · P` for `k ≥ 1`; combinatorics are unchanged.
    pub fn dilate(&self, k: u64) -> SimplePolytope {
        assert!(k >= 1, "dilation factor must be positive");
        let k = BigInt::from(k);
        SimplePolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scale(&k)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet::new(f.normal.clone(), &f.offset * &k))
                .collect(),
            incidence: self.incidence.clone(),
            adjacency: self.adjacency.clone(),
        }
    }

    pub fn translate(&self, m: &IntVector) -> SimplePolytope {
        SimplePolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + m).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet::new(f.normal.clone(), &f.offset + f.normal.dot(m)))
                .collect(),
            incidence: self.incidence.clone(),
            adjacency: self.adjacency.clone(),
        }
    }

    /// Primitive edge directions at `vertex`, one per neighbour in adjacency order.
    pub fn edges_at(&self, vertex: usize) -> Vec<IntVector> {
        let apex = &self.vertices[vertex];
        self.adjacency[vertex]
            .iter()
            .map(|&b| {
                primitive(&(&self.vertices[b] - apex))
                    .expect("distinct vertices")
                    .0
            })
            .collect()
    }

    /// Tangent cone data at a vertex.
    pub fn vertex_cone(&self, vertex: usize) -> Result<VertexCone> {
        if vertex >= self.vertices.len() {
            return Err(Error::VertexOutOfRange(vertex));
        }
        let edges = self.edges_at(vertex);
        let tight = &self.incidence[vertex];
        // The dual edge matched to edge i is the tight facet the neighbour leaves.
        let dual_edges = self.adjacency[vertex]
            .iter()
            .map(|&b| {
                let f = tight
                    .iter()
                    .find(|f| !self.incidence[b].contains(f))
                    .expect("adjacent vertices share n-1 facets");
                self.facets[*f].normal.clone()
            })
            .collect();
        let matrix = IntMatrix::from_rows(edges.clone())?;
        let index = determinant(&matrix)?.abs();
        let residues = parallelepiped_points(&matrix)?;
        Ok(VertexCone {
            vertex,
            apex: self.vertices[vertex].clone(),
            edges,
            dual_edges,
            index,
            residues,
        })
    }

    pub fn vertex_cones(&self) -> Result<Vec<VertexCone>> {
        (0..self.vertices.len())
            .map(|i| self.vertex_cone(i))
            .collect()
    }
}

/// Tangent cone of a polytope at one of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    /// Index of the apex in the owning polytope's vertex list.
    pub vertex: usize,
    pub apex: IntVector,
    pub edges: Vec<IntVector>,
    /// `dual_edges[j]` pairs to zero with every edge except `edges[j]`.
    pub dual_edges: Vec<IntVector>,
    /// `|det|` of the edge matrix, equal to the number of residues.
    pub index: BigInt,
    /// Lattice points of the half-open parallelepiped spanned by the edges.
    pub residues: Vec<IntVector>,
}

impl VertexCone {
    pub fn dim(&self) -> usize {
        self.apex.dim()
    }

    pub fn edge_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.edges.clone()).expect("edges share dimension")
    }

    pub fn dual_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.dual_edges.clone()).expect("duals share dimension")
    }

    pub fn is_basic(&self) -> bool {
        self.index.is_one()
    }

    /// Dual generators recomputed from the edges alone.
    pub fn dual_cone(&self) -> Result<Vec<IntVector>> {
        dual_cone(&self.edge_matrix())
    }
}

/// Lattice points `m = Σ a_i λ_i` with every `a_i ∈ [0, 1)`, where `λ_i` are
/// the rows of `edges`. Found by scanning the bounding box of the closed
/// parallelepiped. The output is sorted and starts with the origin.
pub fn parallelepiped_points(edges: &IntMatrix) -> Result<Vec<IntVector>> {
    if !edges.is_square() {
        return Err(Error::NotSquare {
            rows: edges.nrows(),
            cols: edges.ncols(),
        });
    }
    let inv = inverse(edges)?;
    let n = edges.ncols();
    let mut lo = IntVector::zero(n);
    let mut hi = IntVector::zero(n);
    for row in edges.rows() {
        for k in 0..n {
            if row[k].is_negative() {
                lo.0[k] += &row[k];
            } else {
                hi.0[k] += &row[k];
            }
        }
    }
    let one = crate::linalg::Rat::one();
    let mut out = Vec::new();
    for_each_point(&lo, &hi, |m| {
        let a = inv.left_apply(m);
        if a.0.iter().all(|x| !x.is_negative() && x < &one) {
            out.push(m.clone());
        }
    });
    out.sort();
    Ok(out)
}

/// Primitive generators of the dual cone: `σ_j` pairs to zero with every row
/// except row `j`, and positively with row `j`.
pub fn dual_cone(edges: &IntMatrix) -> Result<Vec<IntVector>> {
    let inv = inverse(edges)?;
    (0..edges.nrows())
        .map(|j| {
            let col = inv.column(j);
            let lcm = col.0.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let scaled = IntVector(
                col.0
                    .iter()
                    .map(|x| (x * crate::linalg::Rat::from_integer(lcm.clone())).to_integer())
                    .collect(),
            );
            Ok(primitive(&scaled)?.0)
        })
        .collect()
}

/// Facets of the convex hull by brute force over vertex n-subsets. Sorted.
pub fn compute_facets(dim: usize, vertices: &[IntVector]) -> Result<Vec<Facet>> {
    if dim > 3 {
        return Err(Error::FacetsRequired { dim });
    }
    let mut found = BTreeSet::new();
    for subset in Combinations::new(vertices.len(), dim) {
        let base = &vertices[subset[0]];
        let diffs: Vec<IntVector> = subset[1..].iter().map(|&i| &vertices[i] - base).collect();
        let normal = orthogonal_complement(&diffs, dim);
        if normal.is_zero() {
            continue;
        }
        let normal = primitive(&normal)?.0;
        let offset = normal.dot(base);
        let (mut above, mut below) = (false, false);
        for v in vertices {
            match normal.dot(v).cmp(&offset) {
                core::cmp::Ordering::Greater => above = true,
                core::cmp::Ordering::Less => below = true,
                core::cmp::Ordering::Equal => {}
            }
        }
        match (above, below) {
            (_, false) => {
                found.insert(Facet::new(normal, offset));
            }
            (false, true) => {
                found.insert(Facet::new(-&normal, -offset));
            }
            (true, true) => {}
        }
    }
    Ok(found.into_iter().collect())
}

fn normalize_facets(dim: usize, vertices: &[IntVector], given: Vec<Facet>) -> Result<Vec<Facet>> {
    let mut out = BTreeSet::new();
    for (fi, f) in given.into_iter().enumerate() {
        if f.normal.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: f.normal.dim(),
            });
        }
        if f.normal.is_zero() {
            return Err(Error::ZeroNormal { facet: fi });
        }
        let mut tight = Vec::new();
        for (vi, v) in vertices.iter().enumerate() {
            let s = f.slack(v);
            if s.is_negative() {
                return Err(Error::FacetViolated {
                    facet: fi,
                    vertex: vi,
                });
            }
            if s.is_zero() {
                tight.push(v.clone());
            }
        }
        if tight.len() < dim || affine_rank(&tight) + 1 != dim {
            return Err(Error::NotAFacet { facet: fi });
        }
        // A tight lattice point makes the offset divisible by the normal's gcd.
        let (normal, g) = primitive(&f.normal)?;
        out.insert(Facet::new(normal, f.offset / g));
    }
    Ok(out.into_iter().collect())
}

fn affine_rank(points: &[IntVector]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<IntVector> = points[1..].iter().map(|p| p - &points[0]).collect();
    rank(&IntMatrix::from_rows(diffs).expect("points share dimension"))
}

/// Calls `f` on every integer point of the box `[lo, hi]` in lexicographic order.
pub(crate) fn for_each_point(lo: &IntVector, hi: &IntVector, mut f: impl FnMut(&IntVector)) {
    let n = lo.dim();
    if (0..n).any(|k| lo[k] > hi[k]) {
        return;
    }
    let mut cur = lo.clone();
    loop {
        f(&cur);
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur.0[k] += 1;
                break;
            }
            cur.0[k] = lo[k].clone();
        }
    }
}

/// Number of integer points in the box `[lo, hi]`.
pub(crate) fn box_size(lo: &IntVector, hi: &IntVector) -> BigInt {
    lo.0.iter()
        .zip(&hi.0)
        .map(|(l, h)| if h < l { BigInt::zero() } else { h - l + 1 })
        .product()
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn facet(n: &[i64], b: i64) -> Facet {
        Facet::new(v(n), b.into())
    }

    fn square() -> SimplePolytope {
        SimplePolytope::from_i64_vertices(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    fn triangle() -> SimplePolytope {
        SimplePolytope::from_i64_vertices(2, &[&[0, 0], &[1, 0], &[1, 2]]).unwrap()
    }

    #[test]
    fn combinations_enumerate_subsets() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn unit_square_is_valid() {
        let p = square();
        assert_eq!(p.facets().len(), 4);
        assert!(p.adjacency().iter().all(|a| a.len() == 2));
    }

    #[test]
    fn square_pyramid_is_rejected() {
        let err = SimplePolytope::from_i64_vertices(
            3,
            &[&[0, 0, 0], &[2, 0, 0], &[2, 2, 0], &[0, 2, 0], &[1, 1, 1]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NonSimpleVertex {
                vertex: 4,
                tight: 4,
                dim: 3
            }
        );
    }

    #[test]
    fn triangle_facets() {
        let fs = compute_facets(2, triangle().vertices()).unwrap();
        let mut expected = vec![facet(&[0, 1], 0), facet(&[-1, 0], -1), facet(&[2, -1], 0)];
        expected.sort();
        assert_eq!(fs, expected);
    }

    #[test]
    fn segment_facets() {
        let fs = compute_facets(1, &[v(&[0]), v(&[5])]).unwrap();
        assert_eq!(fs, vec![facet(&[-1], -5), facet(&[1], 0)]);
    }

    #[test]
    fn square_facets_are_unit_normals() {
        let fs = compute_facets(2, square().vertices()).unwrap();
        let normals: Vec<_> = fs.iter().map(|f| f.normal.clone()).collect();
        for n in [v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])] {
            assert!(normals.contains(&n));
        }
    }

    #[test]
    fn facets_required_above_three() {
        let verts: Vec<_> = (0..5)
            .map(|i| {
                if i == 0 {
                    IntVector::zero(4)
                } else {
                    IntVector::unit(4, i - 1)
                }
            })
            .collect();
        assert_eq!(
            SimplePolytope::new(4, verts.clone(), None),
            Err(Error::FacetsRequired { dim: 4 })
        );
        let mut facets: Vec<_> = (0..4)
            .map(|i| Facet::new(IntVector::unit(4, i), 0.into()))
            .collect();
        facets.push(facet(&[-1, -1, -1, -1], -1));
        let p = SimplePolytope::new(4, verts, Some(facets)).unwrap();
        assert_eq!(p.facets().len(), 5);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            SimplePolytope::from_i64_vertices(2, &[&[0, 0], &[1, 0], &[0, 0]]),
            Err(Error::DuplicateVertex {
                first: 0,
                second: 2
            })
        );
        assert_eq!(
            SimplePolytope::from_i64_vertices(2, &[&[0, 0], &[1, 1], &[2, 2]]),
            Err(Error::NotFullDimensional { rank: 1, dim: 2 })
        );
        // (1,0) is not extreme
        assert!(matches!(
            SimplePolytope::from_i64_vertices(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 2]]),
            Err(Error::NonSimpleVertex {
                vertex: 1,
                tight: 1,
                ..
            })
        ));
        let verts = vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
        let bad = vec![facet(&[1, 0], 0), facet(&[0, 1], 0), facet(&[-1, -1], 0)];
        assert!(matches!(
            SimplePolytope::new(2, verts, Some(bad)),
            Err(Error::FacetViolated { facet: 2, .. })
        ));
    }

    #[test]
    fn supplied_facets_are_made_primitive() {
        let verts = vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2])];
        let fs = vec![facet(&[3, 0], 0), facet(&[0, 1], 0), facet(&[-2, -2], -4)];
        let p = SimplePolytope::new(2, verts, Some(fs)).unwrap();
        assert!(p.facets().contains(&facet(&[-1, -1], -2)));
        assert!(p.facets().contains(&facet(&[1, 0], 0)));
    }

    #[test]
    fn square_corner_cone() {
        let c = square().vertex_cone(0).unwrap();
        assert_eq!(c.edges, vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(c.index, BigInt::one());
        assert_eq!(c.residues, vec![v(&[0, 0])]);
    }

    #[test]
    fn triangle_origin_cone() {
        let c = triangle().vertex_cone(0).unwrap();
        assert_eq!(c.edges, vec![v(&[1, 0]), v(&[1, 2])]);
        assert_eq!(c.index, BigInt::from(2));
        assert_eq!(c.residues, vec![v(&[0, 0]), v(&[1, 1])]);
        assert_eq!(c.dual_edges, vec![v(&[2, -1]), v(&[0, 1])]);
    }

    #[test]
    fn segment_end_cone() {
        let p = SimplePolytope::from_i64_vertices(1, &[&[0], &[5]]).unwrap();
        let c = p.vertex_cone(1).unwrap();
        assert_eq!(c.edges, vec![v(&[-1])]);
        assert!(c.is_basic());
    }

    #[test]
    fn parallelepiped_examples() {
        assert_eq!(
            parallelepiped_points(&IntMatrix::identity(2)).unwrap(),
            vec![v(&[0, 0])]
        );
        let e = IntMatrix::from_i64_rows(&[&[1, 0], &[1, 2]]);
        assert_eq!(
            parallelepiped_points(&e).unwrap(),
            vec![v(&[0, 0]), v(&[1, 1])]
        );
        let e = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]);
        let pts = parallelepiped_points(&e).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.contains(&v(&[0, 0])) && pts.contains(&v(&[1, 1])));
        let s = IntMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(parallelepiped_points(&s), Err(Error::Singular));
    }

    #[test]
    fn dual_cone_examples() {
        assert_eq!(
            dual_cone(&IntMatrix::identity(2)).unwrap(),
            vec![v(&[1, 0]), v(&[0, 1])]
        );
        let e = IntMatrix::from_i64_rows(&[&[1, 0], &[1, 2]]);
        assert_eq!(dual_cone(&e).unwrap(), vec![v(&[2, -1]), v(&[0, 1])]);
        assert_eq!(
            dual_cone(&IntMatrix::from_i64_rows(&[&[1]])).unwrap(),
            vec![v(&[1])]
        );
    }
}
