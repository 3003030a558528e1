//! Characteristic series of lattice sets, rational generating functions of
//! cones, their Laurent expansions, and the signed cone decomposition of a
//! polytope's characteristic polynomial.
//!
//! Formal series over `M` are infinite; every series here is the
//! restriction of one to a finite axis-aligned [`Window`], and all identities
//! are checked coefficientwise on that window.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{inverse, row_coordinates, IntMatrix, IntVector, Rat, RatVector};
use crate::polytope::{box_size, for_each_point, SimplePolytope, VertexCone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_positive(positive: bool) -> Sign {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn product<'a>(signs: impl IntoIterator<Item = &'a Sign>) -> Sign {
        signs.into_iter().fold(Sign::Plus, |acc, &s| acc * s)
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_positive(self == rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// The integer box `lower ≤ m ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lower: IntVector,
    upper: IntVector,
}

impl Window {
    pub fn new(lower: IntVector, upper: IntVector) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(Error::DimensionMismatch {
                expected: lower.dim(),
                found: upper.dim(),
            });
        }
        if let Some(axis) = (0..lower.dim()).find(|&k| lower[k] > upper[k]) {
            return Err(Error::InvalidWindow { axis });
        }
        Ok(Window { lower, upper })
    }

    /// The cube `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(
            IntVector::from_i64s(&alloc::vec![lo; dim]),
            IntVector::from_i64s(&alloc::vec![hi; dim]),
        )
    }

    /// Bounding box of `p` grown by `pad` on every side.
    pub fn around(p: &SimplePolytope, pad: i64) -> Self {
        let (lo, hi) = p.bounding_box();
        let pad = BigInt::from(pad);
        Window {
            lower: IntVector(lo.0.iter().map(|c| c - &pad).collect()),
            upper: IntVector(hi.0.iter().map(|c| c + &pad).collect()),
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn lower(&self) -> &IntVector {
        &self.lower
    }

    pub fn upper(&self) -> &IntVector {
        &self.upper
    }

    pub fn contains(&self, m: &IntVector) -> bool {
        (0..self.dim()).all(|k| self.lower[k] <= m[k] && m[k] <= self.upper[k])
    }

    pub fn size(&self) -> BigInt {
        box_size(&self.lower, &self.upper)
    }

    pub fn for_each(&self, f: impl FnMut(&IntVector)) {
        for_each_point(&self.lower, &self.upper, f)
    }

    pub fn shift(&self, m: &IntVector) -> Window {
        Window {
            lower: &self.lower + m,
            upper: &self.upper + m,
        }
    }

    pub fn is_within(&self, outer: &Window) -> bool {
        outer.contains(&self.lower) && outer.contains(&self.upper)
    }
}

/// A formal series `Σ f(m) e(m)` truncated to a window; only nonzero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCharSeries {
    window: Window,
    coeffs: BTreeMap<IntVector, BigInt>,
}

impl TruncatedCharSeries {
    pub fn zero(window: Window) -> Self {
        TruncatedCharSeries {
            window,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn get(&self, m: &IntVector) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero coefficients in lexicographic order of their exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` to the coefficient of `m`; points outside the window are dropped.
    pub fn add_term(&mut self, m: &IntVector, c: &BigInt) {
        if c.is_zero() || !self.window.contains(m) {
            return;
        }
        let slot = self.coeffs.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(m);
        }
    }

    /// `self += sign · other`, pointwise on the shared window.
    pub fn add_signed(&mut self, other: &TruncatedCharSeries, sign: Sign) {
        let s = BigInt::from(sign.to_i64());
        for (m, c) in &other.coeffs {
            self.add_term(m, &(c * &s));
        }
    }

    pub fn sum_of_coefficients(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `e(m) · self`, with the window moved along.
    pub fn shift(&self, m: &IntVector) -> TruncatedCharSeries {
        TruncatedCharSeries {
            window: self.window.shift(m),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k + m, c.clone()))
                .collect(),
        }
    }

    pub fn restrict(&self, window: &Window) -> TruncatedCharSeries {
        TruncatedCharSeries {
            window: window.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| window.contains(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// `(1 - e(λ)) · self`, kept on the same window.
    pub fn mul_one_minus(&self, lambda: &IntVector) -> TruncatedCharSeries {
        let mut out = self.clone();
        for (m, c) in &self.coeffs {
            out.add_term(&(m + lambda), &-c);
        }
        out
    }
}

/// Characteristic series of a finite point set, truncated to `window`.
pub fn char_series(points: &[IntVector], window: &Window) -> TruncatedCharSeries {
    let mut s = TruncatedCharSeries::zero(window.clone());
    let one = BigInt::one();
    for p in points {
        s.add_term(p, &one);
    }
    s
}

/// The rational function `sign · Σ_j c_j e(n_j) / Π_i (1 - e(λ_i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    /// Exponents `n_j` with integer multiplicities `c_j`.
    pub numerator: Vec<(IntVector, BigInt)>,
    /// Nonzero exponents `λ_i`, one per factor `1 - e(λ_i)`.
    pub denominator: Vec<IntVector>,
    pub sign: Sign,
}

impl RationalGF {
    /// `e(α) · Σ_{c ∈ Q ∩ M} e(c) / Π (1 - e(λ_i))` for the tangent cone at `α`.
    pub fn of_cone(cone: &VertexCone) -> RationalGF {
        RationalGF {
            numerator: cone
                .residues
                .iter()
                .map(|c| (&cone.apex + c, BigInt::one()))
                .collect(),
            denominator: cone.edges.clone(),
            sign: Sign::Plus,
        }
    }

    /// Multiplication by `e(m)`.
    pub fn shift(&self, m: &IntVector) -> RationalGF {
        RationalGF {
            numerator: self
                .numerator
                .iter()
                .map(|(e, c)| (e + m, c.clone()))
                .collect(),
            denominator: self.denominator.clone(),
            sign: self.sign,
        }
    }

    /// Exact value at a point of the torus with rational coordinates.
    /// Fails with the index of the first vanishing factor.
    pub fn evaluate(&self, t: &RatVector) -> core::result::Result<Rat, usize> {
        let mut den = Rat::one();
        for (i, l) in self.denominator.iter().enumerate() {
            let f = Rat::one() - monomial(t, l);
            if f.is_zero() {
                return Err(i);
            }
            den *= f;
        }
        let num = self.numerator.iter().fold(Rat::zero(), |acc, (e, c)| {
            acc + monomial(t, e) * Rat::from_integer(c.clone())
        });
        let v = num / den;
        Ok(match self.sign {
            Sign::Plus => v,
            Sign::Minus => -v,
        })
    }

    /// Floating-point value at `t = exp(s ζ)`.
    pub fn evaluate_along(&self, zeta: &[f64], s: f64) -> f64 {
        let pair = |m: &IntVector| -> f64 {
            m.0.iter()
                .zip(zeta)
                .map(|(c, z)| c.to_f64().unwrap_or(f64::NAN) * z)
                .sum()
        };
        let num: f64 = self
            .numerator
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * Float::exp(s * pair(e)))
            .sum();
        let den: f64 = self
            .denominator
            .iter()
            .map(|l| 1.0 - Float::exp(s * pair(l)))
            .product();
        num / den * self.sign.to_i64() as f64
    }
}

/// `Π t_i^{m_i}` for integer exponents of either sign.
pub fn monomial(t: &RatVector, m: &IntVector) -> Rat {
    t.0.iter()
        .zip(&m.0)
        .fold(Rat::one(), |acc, (ti, e)| acc * rat_pow(ti, e))
}

fn rat_pow(base: &Rat, exp: &BigInt) -> Rat {
    let mut e = exp.abs().to_u64().expect("exponent fits in u64");
    let mut b = if exp.is_negative() {
        base.recip()
    } else {
        base.clone()
    };
    let mut out = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            out *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    out
}

/// The tangent-cone generating function of a vertex cone.
pub fn nu_of_cone(cone: &VertexCone) -> RationalGF {
    RationalGF::of_cone(cone)
}

/// Laurent expansion of `gf` in which factor `i` is expanded around
/// `e(λ_i) = 0` when `signs[i]` is `Plus` and around `∞` when `Minus`.
///
/// Returns `(ε, χ)` with `gf = ε · χ` on the window; `ε` is the product of
/// the signs. Factor `1/(1 - z)` becomes `1 + z + z² + …` or
/// `-(z⁻¹ + z⁻² + …)`, so a numerator term `e(n)` contributes the lattice
/// points `n + Σ a_i λ_i` with integer `a_i ≥ 0` (plus) or `a_i ≤ -1` (minus).
pub fn expand_nu(
    gf: &RationalGF,
    signs: &[Sign],
    window: &Window,
) -> Result<(Sign, TruncatedCharSeries)> {
    if signs.len() != gf.denominator.len() {
        return Err(Error::SignCount {
            expected: gf.denominator.len(),
            found: signs.len(),
        });
    }
    let denominators = IntMatrix::from_rows(gf.denominator.clone())?;
    let inv = inverse(&denominators)?;
    let mut out = TruncatedCharSeries::zero(window.clone());
    window.for_each(|m| {
        let mut c = BigInt::zero();
        for (n, mult) in &gf.numerator {
            let a = inv.left_apply(&(m - n));
            let inside = a.0.iter().zip(signs).all(|(x, s)| {
                x.is_integer()
                    && match s {
                        Sign::Plus => !x.is_negative(),
                        Sign::Minus => x.is_negative(),
                    }
            });
            if inside {
                c += mult;
            }
        }
        out.add_term(m, &c);
    });
    Ok((gf.sign * Sign::product(signs), out))
}

/// A direction for every polytope edge, recorded per vertex: `signs[α][i]`
/// is `Plus` when edge `i` at `α` points away from `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub signs: Vec<Vec<Sign>>,
}

impl Orientation {
    /// Vertices whose edges are all outgoing.
    pub fn base_vertices(&self) -> Vec<usize> {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().all(|&x| x == Sign::Plus))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Orients every edge from lower to higher value of `⟨ζ, ·⟩`.
pub fn orientation_from_functional(p: &SimplePolytope, zeta: &RatVector) -> Result<Orientation> {
    if zeta.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: zeta.dim(),
        });
    }
    let mut signs = Vec::with_capacity(p.vertices().len());
    for vertex in 0..p.vertices().len() {
        let mut at = Vec::with_capacity(p.dim());
        for (edge, l) in p.edges_at(vertex).iter().enumerate() {
            let v = l.pair(zeta);
            if v.is_zero() {
                return Err(Error::NonGenericZeta { vertex, edge });
            }
            at.push(Sign::from_positive(v.is_positive()));
        }
        signs.push(at);
    }
    Ok(Orientation { signs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationViolation {
    /// Sign vector of the wrong length at a vertex.
    Shape {
        vertex: usize,
    },
    /// An edge directed the same way from both of its endpoints.
    Inconsistent {
        vertex: usize,
        edge: usize,
        neighbour: usize,
    },
    NoBaseVertex,
    /// Edge `edge` at `other` lies in `±` the outgoing cone at `base` but is
    /// directed out of it.
    Condition {
        base: usize,
        other: usize,
        edge: usize,
    },
}

impl fmt::Display for OrientationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationViolation::Shape { vertex } => {
                write!(f, "vertex {vertex} carries the wrong number of signs")
            }
            OrientationViolation::Inconsistent { vertex, edge, neighbour } => write!(
                f,
                "edge {edge} at vertex {vertex} is directed the same way from vertex {neighbour}"
            ),
            OrientationViolation::NoBaseVertex => f.write_str("no vertex has all edges outgoing"),
            OrientationViolation::Condition { base, other, edge } => write!(
                f,
                "edge {edge} at vertex {other} is oriented out of the outgoing cone at vertex {base}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationCheck {
    pub valid: bool,
    pub violation: Option<OrientationViolation>,
}

impl OrientationCheck {
    fn fail(v: OrientationViolation) -> Self {
        OrientationCheck {
            valid: false,
            violation: Some(v),
        }
    }
}

/// Tests the expansion-consistency condition: whenever an edge at some
/// vertex lies in `±` the cone spanned by the outgoing edges at another
/// vertex, it must be directed into that cone. Any subset of outgoing edges
/// spans a face of the full outgoing cone, so testing the full cone covers
/// every subset.
pub fn check_orientation(p: &SimplePolytope, o: &Orientation) -> OrientationCheck {
    let n = p.dim();
    let nv = p.vertices().len();
    if o.signs.len() != nv {
        return OrientationCheck::fail(OrientationViolation::Shape {
            vertex: o.signs.len().min(nv),
        });
    }
    if let Some(vertex) = o.signs.iter().position(|s| s.len() != n) {
        return OrientationCheck::fail(OrientationViolation::Shape { vertex });
    }
    for (vertex, nbrs) in p.adjacency().iter().enumerate() {
        for (edge, &b) in nbrs.iter().enumerate() {
            let back = p.adjacency()[b]
                .iter()
                .position(|&x| x == vertex)
                .expect("adjacency is symmetric");
            if o.signs[vertex][edge] == o.signs[b][back] {
                return OrientationCheck::fail(OrientationViolation::Inconsistent {
                    vertex,
                    edge,
                    neighbour: b,
                });
            }
        }
    }
    if o.base_vertices().is_empty() {
        return OrientationCheck::fail(OrientationViolation::NoBaseVertex);
    }
    let edges: Vec<Vec<IntVector>> = (0..nv).map(|v| p.edges_at(v)).collect();
    for base in 0..nv {
        let basis = IntMatrix::from_rows(edges[base].clone()).expect("edges share dimension");
        let outgoing = &o.signs[base];
        if outgoing.iter().all(|&s| s == Sign::Minus) {
            continue;
        }
        for other in (0..nv).filter(|&b| b != base) {
            for (edge, l) in edges[other].iter().enumerate() {
                let a = row_coordinates(&basis, &l.to_rational()).expect("edges span");
                let off_cone =
                    a.0.iter()
                        .zip(outgoing)
                        .any(|(x, &s)| s == Sign::Minus && !x.is_zero());
                if off_cone {
                    continue;
                }
                let nonneg = a.0.iter().all(|x| !x.is_negative());
                let nonpos = a.0.iter().all(|x| !x.is_positive());
                let required = match (nonneg, nonpos) {
                    (true, false) => Sign::Plus,
                    (false, true) => Sign::Minus,
                    _ => continue,
                };
                if o.signs[other][edge] != required {
                    return OrientationCheck::fail(OrientationViolation::Condition {
                        base,
                        other,
                        edge,
                    });
                }
            }
        }
    }
    OrientationCheck {
        valid: true,
        violation: None,
    }
}

/// `Σ_α ± χ[C^s_α ∩ M]` over the vertices, truncated to `window`. For an
/// admissible orientation this is the characteristic polynomial of `P ∩ M`.
pub fn decompose_chi(
    p: &SimplePolytope,
    o: &Orientation,
    window: &Window,
) -> Result<TruncatedCharSeries> {
    if window.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: window.dim(),
        });
    }
    let check = check_orientation(p, o);
    if let Some(v) = check.violation {
        return Err(Error::InvalidOrientation(format!("{v}")));
    }
    let mut total = TruncatedCharSeries::zero(window.clone());
    for cone in p.vertex_cones()? {
        let (sign, part) = expand_nu(&nu_of_cone(&cone), &o.signs[cone.vertex], window)?;
        total.add_signed(&part, sign);
    }
    Ok(total)
}

/// Human-readable listing, one `point: coefficient` per line.
pub fn describe(series: &TruncatedCharSeries) -> String {
    let mut s = String::new();
    for (m, c) in series.terms() {
        s.push_str(&format!("{m}: {c}\n"));
    }
    s
}
