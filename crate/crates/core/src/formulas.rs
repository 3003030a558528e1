//! Vertex-sum formulas: Brion's identity at rational points, its cyclotomic
//! form along one-parameter subgroups, the Todd constant-term count, the
//! volume formula and the Ehrhart polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve, IntMatrix, IntVector, Rat, RatVector};
use crate::oracle::enumerate_points;
use crate::polytope::{parallelepiped_points, SimplePolytope, VertexCone};
use crate::power_series::{LaurentSeries1, PowerSeries1};
use crate::series::{monomial, nu_of_cone};

/// `⟨ζ, λ⟩` for one edge of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub vertex: usize,
    pub edge: usize,
    pub value: Rat,
}

/// A functional `ζ` that pairs nonzero with every edge of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDirection {
    pub zeta: RatVector,
    pub certificate: Vec<Pairing>,
}

impl GenericDirection {
    /// Checks `zeta` against every edge of `p`.
    pub fn certify(p: &SimplePolytope, zeta: RatVector) -> Result<Self> {
        if zeta.dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: zeta.dim(),
            });
        }
        let mut certificate = Vec::new();
        for vertex in 0..p.vertices().len() {
            for (edge, l) in p.edges_at(vertex).iter().enumerate() {
                let value = l.pair(&zeta);
                if value.is_zero() {
                    return Err(Error::NonGenericZeta { vertex, edge });
                }
                certificate.push(Pairing {
                    vertex,
                    edge,
                    value,
                });
            }
        }
        Ok(GenericDirection { zeta, certificate })
    }

    fn pairings(&self, cone: &VertexCone) -> Result<Vec<Rat>> {
        cone.edges
            .iter()
            .enumerate()
            .map(|(edge, l)| {
                let v = l.pair(&self.zeta);
                if v.is_zero() {
                    Err(Error::NonGenericZeta {
                        vertex: cone.vertex,
                        edge,
                    })
                } else {
                    Ok(v)
                }
            })
            .collect()
    }
}

/// `(1, t, t², …, t^{n-1})`.
fn moment_curve(dim: usize, t: u64) -> RatVector {
    let mut out = Vec::with_capacity(dim);
    let mut power = BigInt::one();
    for _ in 0..dim {
        out.push(Rat::from_integer(power.clone()));
        power *= t;
    }
    RatVector(out)
}

/// The first `count` generic points `ζ_t` on the moment curve, `t = 1, 2, …`.
/// Each edge rules out at most `n - 1` values of `t`, so the search ends.
pub fn generic_directions(p: &SimplePolytope, count: usize) -> Vec<GenericDirection> {
    let mut out = Vec::with_capacity(count);
    let mut t = 1u64;
    while out.len() < count {
        if let Ok(g) = GenericDirection::certify(p, moment_curve(p.dim(), t)) {
            out.push(g);
        }
        t += 1;
    }
    out
}

pub fn choose_generic_zeta(p: &SimplePolytope) -> GenericDirection {
    generic_directions(p, 1).remove(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrionEvaluation {
    /// `Σ_{m ∈ P ∩ M} t^m` from enumeration.
    pub lhs: Rat,
    /// `Σ_α ν_α(t)` over the vertex cones.
    pub rhs: Rat,
}

impl BrionEvaluation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of Brion's identity at a rational point of the torus.
pub fn evaluate_brion(p: &SimplePolytope, t: &RatVector) -> Result<BrionEvaluation> {
    if t.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: t.dim(),
        });
    }
    if t.0.iter().any(Zero::is_zero) {
        return Err(Error::ZeroCoordinate);
    }
    let mut rhs = Rat::zero();
    for cone in p.vertex_cones()? {
        rhs += nu_of_cone(&cone)
            .evaluate(t)
            .map_err(|edge| Error::VanishingDenominator {
                vertex: cone.vertex,
                edge,
            })?;
    }
    let lhs = enumerate_points(p)?
        .points
        .iter()
        .fold(Rat::zero(), |acc, m| acc + monomial(t, m));
    Ok(BrionEvaluation { lhs, rhs })
}

/// Deterministic rational evaluation points avoiding every pole of the
/// vertex terms. Coordinates are ratios of small primes.
pub fn brion_sample_points(p: &SimplePolytope, count: usize) -> Result<Vec<RatVector>> {
    const NUMS: [i64; 6] = [2, 3, 5, 7, 11, 13];
    const DENS: [i64; 5] = [1, 2, 3, 5, 7];
    let cones = p.vertex_cones()?;
    let mut out = Vec::with_capacity(count);
    let mut j = 0usize;
    while out.len() < count {
        let t = RatVector(
            (0..p.dim())
                .map(|i| {
                    let num = NUMS[(j + 2 * i) % NUMS.len()];
                    let den = DENS[(3 * j + i + 1) % DENS.len()];
                    let sign = if (j + i) % 3 == 2 { -1 } else { 1 };
                    Rat::new((sign * num).into(), den.into())
                })
                .collect(),
        );
        j += 1;
        if cones.iter().all(|c| nu_of_cone(c).evaluate(&t).is_ok()) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Index `|N / N'|` of the lattice spanned by the dual edges.
pub fn dual_lattice_index(cone: &VertexCone) -> Result<BigInt> {
    Ok(crate::linalg::determinant(&cone.dual_matrix())?.abs())
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The finite-group average
/// `(1/|K|) Σ_{k ∈ K} α(t) / Π_i (1 - e_k(λ'_i) λ'_i(t))` at `t = exp(s ζ)`.
///
/// `λ'_i = λ_i / ⟨λ_i, σ_i⟩` are the edge generators in the lattice dual to
/// the one spanned by the dual edges `σ_i`, and `K = N / N'` is enumerated by
/// the `N`-points of the half-open parallelepiped of the `σ_i`. Characters are
/// `e_k(λ'_i) = exp(2πi ⟨k, λ'_i⟩)`.
pub fn evaluate_nu_cyclotomic(
    cone: &VertexCone,
    zeta: &GenericDirection,
    s: f64,
) -> Result<Complex64> {
    let pairings = zeta.pairings(cone)?;
    let reps = parallelepiped_points(&cone.dual_matrix())?;
    let scales: Vec<BigInt> = cone
        .edges
        .iter()
        .zip(&cone.dual_edges)
        .map(|(l, sigma)| l.dot(sigma))
        .collect();
    let apex = Float::exp(s * rat_to_f64(&cone.apex.pair(&zeta.zeta)));
    let fractional: Vec<f64> = pairings
        .iter()
        .zip(&scales)
        .map(|(x, g)| Float::exp(s * rat_to_f64(&(x / Rat::from_integer(g.clone())))))
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for k in &reps {
        let mut den = Complex64::new(1.0, 0.0);
        for (i, ((l, g), lt)) in cone.edges.iter().zip(&scales).zip(&fractional).enumerate() {
            let phase = Rat::new(k.dot(l), g.clone()).fract();
            let character = Complex64::from_polar(1.0, 2.0 * PI * rat_to_f64(&phase));
            let factor = Complex64::new(1.0, 0.0) - character * lt;
            if factor.norm() == 0.0 {
                return Err(Error::VanishingDenominator {
                    vertex: cone.vertex,
                    edge: i,
                });
            }
            den *= factor;
        }
        total += Complex64::new(apex, 0.0) / den;
    }
    Ok(total / reps.len() as f64)
}

/// Coefficients `T_0 … T_order` of `Π_i s x_i / (1 - exp(-s x_i))`.
pub fn todd_series(x: &[Rat], order: usize) -> Result<PowerSeries1> {
    let mut product = PowerSeries1::one(order);
    for (index, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            return Err(Error::ZeroToddArgument { index });
        }
        // (1 - exp(-s x)) / s
        let e = PowerSeries1::exp_linear(&-xi, order + 1);
        let quotient =
            PowerSeries1::from_coeffs(e.coeffs()[1..].iter().map(|c| -c).collect(), order);
        let factor = PowerSeries1::constant(xi.clone(), order).div(&quotient)?;
        product = product.mul(&factor);
    }
    Ok(product)
}

/// Constant term of the vertex's Laurent series through the Todd polynomials:
/// `(1/Π x_i) Σ_j (-1)^j / j! Σ_q ⟨ζ, α + q⟩^j T_{n-j}(x)` with `x_i = ⟨ζ, λ_i⟩`.
pub fn constant_term_todd(cone: &VertexCone, zeta: &GenericDirection) -> Result<Rat> {
    let x = zeta.pairings(cone)?;
    let n = cone.dim();
    let todd = todd_series(&x, n)?;
    let heights: Vec<Rat> = cone
        .residues
        .iter()
        .map(|q| (&cone.apex + q).pair(&zeta.zeta))
        .collect();
    let mut total = Rat::zero();
    let mut factorial = Rat::one();
    for j in 0..=n {
        if j > 0 {
            factorial *= Rat::from_integer(j.into());
        }
        let power_sum = heights.iter().fold(Rat::zero(), |acc, a| acc + pow(a, j));
        let term = power_sum * todd.coeff(n - j) / &factorial;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let denom = x.iter().fold(Rat::one(), |acc, v| acc * v);
    Ok(total / denom)
}

fn pow(a: &Rat, j: usize) -> Rat {
    (0..j).fold(Rat::one(), |acc, _| acc * a)
}

/// Laurent series of `s ↦ ν_α(exp(s ζ))` through `s^extra`, by dividing the
/// numerator `Σ_q exp(s ⟨ζ, α + q⟩)` by the unit part of
/// `Π_i (1 - exp(s x_i)) = s^n · Π_i (-x_i - x_i² s / 2 - …)`.
pub fn vertex_laurent(
    cone: &VertexCone,
    zeta: &GenericDirection,
    extra: usize,
) -> Result<LaurentSeries1> {
    let x = zeta.pairings(cone)?;
    let n = cone.dim();
    let order = n + extra;
    let mut numerator = PowerSeries1::zero(order);
    for q in &cone.residues {
        let a = (&cone.apex + q).pair(&zeta.zeta);
        numerator = numerator.add(&PowerSeries1::exp_linear(&a, order));
    }
    let mut unit = PowerSeries1::one(order);
    for xi in &x {
        let e = PowerSeries1::exp_linear(xi, order + 1);
        let factor = PowerSeries1::from_coeffs(e.coeffs()[1..].iter().map(|c| -c).collect(), order);
        unit = unit.mul(&factor);
    }
    Ok(LaurentSeries1 {
        pole_order: n,
        series: numerator.div(&unit)?,
    })
}

/// Constant term of `ν_α(exp(s ζ))`, computed by the Todd formula and by
/// series division; the two must agree exactly.
pub fn vertex_constant_term(cone: &VertexCone, zeta: &GenericDirection) -> Result<Rat> {
    let todd = constant_term_todd(cone, zeta)?;
    let direct = vertex_laurent(cone, zeta, 1)?.coeff(0);
    if todd != direct {
        return Err(Error::RouteMismatch {
            vertex: cone.vertex,
        });
    }
    Ok(direct)
}

fn for_polytope<'a>(
    p: &SimplePolytope,
    zeta: &'a GenericDirection,
) -> Result<&'a GenericDirection> {
    GenericDirection::certify(p, zeta.zeta.clone())?;
    Ok(zeta)
}

/// Number of lattice points as the sum of the vertex constant terms.
pub fn count_lattice_points(p: &SimplePolytope, zeta: &GenericDirection) -> Result<BigInt> {
    let zeta = for_polytope(p, zeta)?;
    let mut total = Rat::zero();
    for cone in p.vertex_cones()? {
        total += vertex_constant_term(&cone, zeta)?;
    }
    if !total.is_integer() {
        return Err(Error::NonIntegralCount(alloc::format!("{total}")));
    }
    Ok(total.to_integer())
}

/// Sums over the vertices of the Laurent coefficients of `s^i` for
/// `i = -n, …, 1`, in that order.
pub fn laurent_vertex_sums(p: &SimplePolytope, zeta: &GenericDirection) -> Result<Vec<Rat>> {
    let zeta = for_polytope(p, zeta)?;
    let n = p.dim() as isize;
    let mut sums = vec![Rat::zero(); (n + 2) as usize];
    for cone in p.vertex_cones()? {
        let l = vertex_laurent(&cone, zeta, 1)?;
        for (slot, i) in sums.iter_mut().zip(-n..=1) {
            *slot += l.coeff(i);
        }
    }
    Ok(sums)
}

/// `(-1)^n / n! · Σ_α ⟨ζ, α⟩^n |K_α| / Π_i ⟨ζ, λ_α^i⟩`, with
/// `|K_α| = #(Q_α ∩ M)`.
pub fn volume(p: &SimplePolytope, zeta: &GenericDirection) -> Result<Rat> {
    let zeta = for_polytope(p, zeta)?;
    let n = p.dim();
    let mut total = Rat::zero();
    for cone in p.vertex_cones()? {
        let x = zeta.pairings(&cone)?;
        let height = cone.apex.pair(&zeta.zeta);
        let den = x.iter().fold(Rat::one(), |acc, v| acc * v);
        total += pow(&height, n) * Rat::from_integer(BigInt::from(cone.residues.len())) / den;
    }
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let v = total / Rat::from_integer(factorial);
    Ok(if n.is_multiple_of(2) { v } else { -v })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EhrhartMode {
    /// Counts from the vertex constant-term formula.
    Formula,
    /// Counts from brute-force enumeration.
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    /// `(k, #(M ∩ kP))` for `k = 1..=kmax`.
    pub counts: Vec<(u64, BigInt)>,
    /// Coefficients of `k^0, …, k^n`.
    pub polynomial: Vec<Rat>,
}

impl EhrhartResult {
    pub fn evaluate(&self, k: u64) -> Rat {
        let k = Rat::from_integer(k.into());
        self.polynomial
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * &k + c)
    }

    pub fn leading_coefficient(&self) -> &Rat {
        self.polynomial.last().expect("degree n >= 1")
    }
}

/// Counts the dilates `kP` for `k = 1..=kmax`, fits the degree-`n` polynomial
/// through `k = 1..=n+1`, checks it on the remaining samples, and checks its
/// leading coefficient against the volume formula.
pub fn ehrhart(p: &SimplePolytope, kmax: usize, mode: EhrhartMode) -> Result<EhrhartResult> {
    let n = p.dim();
    if kmax < n + 1 {
        return Err(Error::KmaxTooSmall {
            kmax,
            needed: n + 1,
        });
    }
    let zeta = choose_generic_zeta(p);
    let mut counts = Vec::with_capacity(kmax);
    for k in 1..=kmax as u64 {
        let dilate = p.dilate(k);
        let c = match mode {
            EhrhartMode::Formula => count_lattice_points(&dilate, &zeta)?,
            EhrhartMode::Oracle => enumerate_points(&dilate)?.count,
        };
        counts.push((k, c));
    }

    let vandermonde = IntMatrix::from_rows(
        (1..=n as u64 + 1)
            .map(|k| {
                let mut row = Vec::with_capacity(n + 1);
                let mut power = BigInt::one();
                for _ in 0..=n {
                    row.push(power.clone());
                    power *= k;
                }
                IntVector(row)
            })
            .collect(),
    )?;
    let rhs = RatVector(
        counts[..=n]
            .iter()
            .map(|(_, c)| Rat::from_integer(c.clone()))
            .collect(),
    );
    let result = EhrhartResult {
        polynomial: solve(&vandermonde, &rhs)?.0,
        counts,
    };
    for (k, c) in &result.counts[n + 1..] {
        if result.evaluate(*k) != Rat::from_integer(c.clone()) {
            return Err(Error::NotPolynomial { k: *k as usize });
        }
    }
    let vol = volume(p, &zeta)?;
    if result.leading_coefficient() != &vol {
        return Err(Error::VolumeMismatch {
            leading: alloc::format!("{}", result.leading_coefficient()),
            volume: alloc::format!("{vol}"),
        });
    }
    Ok(result)
}
