//! Truncated univariate power and Laurent series with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rat;

/// `c_0 + c_1 s + … + c_K s^K`, truncated at order `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries1 {
    coeffs: Vec<Rat>,
}

impl PowerSeries1 {
    pub fn zero(order: usize) -> Self {
        PowerSeries1 {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to the given order.
    pub fn from_coeffs(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        PowerSeries1 { coeffs }
    }

    /// `exp(x s)` to the given order.
    pub fn exp_linear(x: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rat::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * x / Rat::from_integer(k.into());
            coeffs.push(term.clone());
        }
        PowerSeries1 { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `s^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries1 {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries1 {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        PowerSeries1 {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries1 { coeffs: out }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let d0 = &other.coeffs[0];
        if d0.is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<Rat> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc -= &other.coeffs[j] * &q[k - j];
            }
            q.push(acc / d0);
        }
        Ok(PowerSeries1 { coeffs: q })
    }

    /// `exp(f)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let order = self.order();
        // g' = f' g, solved coefficientwise.
        let mut g = vec![Rat::zero(); order + 1];
        g[0] = Rat::one();
        for k in 1..=order {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += Rat::from_integer(j.into()) * &self.coeffs[j] * &g[k - j];
            }
            g[k] = acc / Rat::from_integer(k.into());
        }
        Ok(PowerSeries1 { coeffs: g })
    }
}

/// `s^{-p} · series`, a Laurent series with a pole of order at most `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries1 {
    pub pole_order: usize,
    pub series: PowerSeries1,
}

impl LaurentSeries1 {
    /// Coefficient of `s^i`; zero below the pole and for orders beyond the
    /// truncation.
    pub fn coeff(&self, i: isize) -> Rat {
        let shifted = i + self.pole_order as isize;
        if shifted < 0 {
            Rat::zero()
        } else {
            self.series.coeff(shifted as usize)
        }
    }

    /// Highest exponent that is still exact.
    pub fn max_exponent(&self) -> isize {
        self.series.order() as isize - self.pole_order as isize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn exp_linear_matches_factorials() {
        let e = PowerSeries1::exp_linear(&r(2, 1), 4);
        assert_eq!(e.coeffs(), &[r(1, 1), r(2, 1), r(2, 1), r(4, 3), r(2, 3)]);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PowerSeries1::from_coeffs(vec![r(1, 1), r(-3, 2), r(5, 7)], 5);
        let b = PowerSeries1::exp_linear(&r(-1, 3), 5);
        let q = a.mul(&b).div(&b).unwrap();
        assert_eq!(q, a);
        assert_eq!(a.div(&PowerSeries1::zero(5)), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn exp_of_linear_series() {
        let f = PowerSeries1::from_coeffs(vec![r(0, 1), r(3, 1)], 6);
        assert_eq!(f.exp().unwrap(), PowerSeries1::exp_linear(&r(3, 1), 6));
        let g = PowerSeries1::from_coeffs(vec![r(0, 1), r(1, 1), r(1, 2)], 6);
        // exp(s + s²/2) · exp(-s) = exp(s²/2)
        let prod = g
            .exp()
            .unwrap()
            .mul(&PowerSeries1::exp_linear(&r(-1, 1), 6));
        assert_eq!(
            prod.coeffs(),
            &[
                r(1, 1),
                r(0, 1),
                r(1, 2),
                r(0, 1),
                r(1, 8),
                r(0, 1),
                r(1, 48)
            ]
        );
    }

    #[test]
    fn laurent_indexing() {
        let l = LaurentSeries1 {
            pole_order: 2,
            series: PowerSeries1::from_coeffs(vec![r(1, 1), r(2, 1), r(3, 1), r(4, 1)], 3),
        };
        assert_eq!(l.coeff(-3), r(0, 1));
        assert_eq!(l.coeff(-2), r(1, 1));
        assert_eq!(l.coeff(0), r(3, 1));
        assert_eq!(l.max_exponent(), 1);
    }
}
