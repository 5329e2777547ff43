//! Polynomials over F₂ as packed bit vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A polynomial over F₂; bit `i` is the coefficient of `uⁱ`.
///
/// Limbs are little-endian and trimmed, so the representation is unique and
/// the zero polynomial has no limbs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    limbs: Vec<u64>,
}

impl core::fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "Poly2(0)");
        }
        write!(f, "Poly2(")?;
        for (i, e) in self.exponents_desc().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "u")?,
                _ => write!(f, "u^{e}")?,
            }
        }
        write!(f, ")")
    }
}

impl Poly2 {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn monomial(exp: usize) -> Self {
        let mut p = Self::zero();
        p.flip_bit(exp);
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Self { limbs };
        p.trim();
        p
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip_bit(e);
        }
        p
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// Low 64 coefficients; exact when `degree < 64`.
    pub fn low_u64(&self) -> u64 {
        self.limbs.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Toggles the coefficient of `uⁱ`.
    pub fn flip_bit(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.limbs.len() {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] ^= 1 << (i % 64);
        self.trim();
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(w, &limb)| {
            let mut rest = limb;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Exponents with nonzero coefficient, descending.
    pub fn exponents_desc(&self) -> impl Iterator<Item = usize> + '_ {
        let mut v: Vec<usize> = self.exponents().collect();
        v.reverse();
        v.into_iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (l, s) in limbs.iter_mut().zip(&short.limbs) {
            *l ^= s;
        }
        Self::from_limbs(limbs)
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (words, bits) = (k / 64, k % 64);
        let mut limbs = vec![0u64; self.limbs.len() + words + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            limbs[i + words] ^= l << bits;
            if bits > 0 {
                limbs[i + words + 1] ^= l >> (64 - bits);
            }
        }
        Self::from_limbs(limbs)
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = if self.limbs.len() <= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        if a.is_zero() {
            return Self::zero();
        }
        let mut acc = vec![0u64; a.limbs.len() + b.limbs.len() + 1];
        for e in a.exponents() {
            let (words, bits) = (e / 64, e % 64);
            for (i, &l) in b.limbs.iter().enumerate() {
                acc[i + words] ^= l << bits;
                if bits > 0 {
                    acc[i + words + 1] ^= l >> (64 - bits);
                }
            }
        }
        Self::from_limbs(acc)
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quo.flip_bit(shift);
            rem = rem.add(&divisor.shl(shift));
        }
        (quo, rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// `p(u)² = p(u²)`: every exponent doubles.
    pub fn square(&self) -> Self {
        Self::from_exponents(self.exponents().map(|e| 2 * e))
    }

    /// `p(u^{2^k})`.
    pub fn spread(&self, k: u32) -> Self {
        Self::from_exponents(self.exponents().map(|e| e << k))
    }

    /// True when every exponent is even, i.e. `p` lies in `F₂[u²]`.
    pub fn is_square(&self) -> bool {
        self.exponents().all(|e| e % 2 == 0)
    }

    /// Square root if every exponent is even.
    pub fn sqrt(&self) -> Option<Self> {
        self.is_square()
            .then(|| Self::from_exponents(self.exponents().map(|e| e / 2)))
    }
}

/// Orders polynomials as the integers their coefficient bits spell.
impl Ord for Poly2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Poly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
