//! Rational functions over F₂ in lowest terms.

use crate::poly2::Poly2;
use crate::{Error, Result};

/// A reduced fraction `num/den` of F₂-polynomials.
///
/// Nonzero F₂-polynomials are monic, so `gcd(num, den) = 1` with `den ≠ 0`
/// pins down a unique representation; zero is stored as `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly2, den: Poly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return Self { num, den };
        }
        Self {
            num: num.div_rem(&g).0,
            den: den.div_rem(&g).0,
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly2::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly2::one())
    }

    pub fn from_poly(p: Poly2) -> Self {
        Self {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn num(&self) -> &Poly2 {
        &self.num
    }

    pub fn den(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduced(self.num.add(&other.num), self.den.clone());
        }
        Self::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Self {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// Squaring doubles every exponent; lowest terms are preserved.
    pub fn square(&self) -> Self {
        Self {
            num: self.num.square(),
            den: self.den.square(),
        }
    }

    /// Substitutes `u ↦ u^{2^k}`, i.e. applies Frobenius `k` times.
    pub fn spread(&self, k: u32) -> Self {
        Self {
            num: self.num.spread(k),
            den: self.den.spread(k),
        }
    }

    /// Whether numerator and denominator lie in `F₂[u²]`.
    pub fn is_square(&self) -> bool {
        self.num.is_square() && self.den.is_square()
    }

    /// Halves every exponent when [`RatFunc::is_square`] holds.
    pub fn sqrt(&self) -> Option<Self> {
        Some(Self {
            num: self.num.sqrt()?,
            den: self.den.sqrt()?,
        })
    }

    /// Largest degree among numerator and denominator.
    pub fn height_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}
