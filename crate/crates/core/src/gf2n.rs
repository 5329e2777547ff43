//! Binary fields GF(2ⁿ) in a polynomial basis.
//!
//! An element is an unsigned integer below `2ⁿ` whose bit `i` is the
//! coefficient of `αⁱ`, where `α` is a root of the modulus. These are the
//! desk-scale perfect fields: Frobenius is a bijection and every element has
//! a unique square root.

use core::fmt;

use rand_core::RngCore;

use crate::field::{ArtinSchreier, Field, RandomElement, SquareRoots};
use crate::gf2lin;
use crate::poly2::Poly2;
use crate::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// An element of GF(2ⁿ), interpreted relative to a [`BinaryField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinElem(pub u32);

impl fmt::Display for BinElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A class in the two-element cokernel `k/P(k)` of a finite binary field,
/// stored by its canonical representative: `0`, or the field's witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AsClass(pub BinElem);

impl AsClass {
    pub fn is_zero(&self) -> bool {
        self.0 .0 == 0
    }

    /// `0` for the trivial class, `1` otherwise.
    pub fn bit(&self) -> u8 {
        u8::from(!self.is_zero())
    }
}

/// GF(2ⁿ) presented as `F₂[x]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryField {
    degree: u32,
    modulus: u32,
    witness: BinElem,
}

/// Carry-less product of two words.
fn clmul(a: u32, b: u32) -> u64 {
    let (a, mut b) = (u64::from(a), b);
    let mut acc = 0u64;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    acc
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= dm {
        a ^= m << (63 - a.leading_zeros() - dm);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(modulus: u32) -> bool {
    if modulus < 2 {
        return false;
    }
    let deg = 31 - modulus.leading_zeros();
    (2u64..(1u64 << (deg / 2 + 1))).all(|f| poly_rem(u64::from(modulus), f) != 0)
}

impl BinaryField {
    /// Builds GF(2ⁿ) from the modulus bit-vector (bit `n` set), rejecting
    /// reducible moduli.
    pub fn new(degree: u32, modulus: u32) -> Result<Self> {
        let field = Self::new_unchecked(degree, modulus)?;
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        Ok(field)
    }

    /// Like [`BinaryField::new`] but skips the irreducibility check. The
    /// result is a ring, not a field, when the modulus factors; only the
    /// self-test's negative control uses this.
    #[doc(hidden)]
    pub fn new_unchecked(degree: u32, modulus: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree { degree });
        }
        if modulus >> degree != 1 {
            return Err(Error::InvalidModulus { degree, modulus });
        }
        let mut field = Self {
            degree,
            modulus,
            witness: BinElem(0),
        };
        field.witness = field
            .elements()
            .find(|&a| field.trace(a) == 1)
            .unwrap_or(BinElem(0));
        Ok(field)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2ⁿ`.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    /// All elements in ascending encoding.
    pub fn elements(&self) -> impl Iterator<Item = BinElem> {
        (0..self.order()).map(BinElem)
    }

    /// The smallest-encoding element of trace 1, representing the nonzero
    /// cokernel class.
    pub fn class_witness(&self) -> BinElem {
        self.witness
    }

    pub fn elem(&self, bits: u32) -> Result<BinElem> {
        if bits < self.order() {
            Ok(BinElem(bits))
        } else {
            Err(Error::ElementOutOfRange)
        }
    }

    pub fn add(&self, a: BinElem, b: BinElem) -> BinElem {
        BinElem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: BinElem, b: BinElem) -> BinElem {
        BinElem(poly_rem(clmul(a.0, b.0), u64::from(self.modulus)) as u32)
    }

    pub fn pow(&self, a: BinElem, mut e: u64) -> BinElem {
        let (mut base, mut acc) = (a, BinElem(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^{2ⁿ−2}`.
    pub fn inv(&self, a: BinElem) -> Result<BinElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, u64::from(self.order()) - 2))
    }

    /// `a ↦ a²`.
    pub fn frobenius(&self, a: BinElem) -> BinElem {
        self.mul(a, a)
    }

    /// Inverse of Frobenius, `a^{2^{n−1}}`.
    pub fn sqrt(&self, a: BinElem) -> BinElem {
        (1..self.degree).fold(a, |r, _| self.frobenius(r))
    }

    /// `P(a) = a² + a`.
    pub fn artin_schreier(&self, a: BinElem) -> BinElem {
        self.add(self.frobenius(a), a)
    }

    /// `a + a² + a⁴ + ⋯ + a^{2^{n−1}}`, which is `0` or `1`.
    pub fn trace(&self, a: BinElem) -> u8 {
        let mut acc = a;
        let mut power = a;
        for _ in 1..self.degree {
            power = self.frobenius(power);
            acc = self.add(acc, power);
        }
        // In a genuine field the sum is 0 or 1; a corrupted modulus can
        // leave higher bits set, which we report as nonzero.
        u8::from(acc.0 != 0)
    }

    /// Solves `x² + x = a`. The two solutions differ by 1; the one with the
    /// smaller encoding is returned.
    pub fn as_solve(&self, a: BinElem) -> Option<BinElem> {
        // P is F₂-linear, so solve on coordinates: column i is P(αⁱ).
        let columns: alloc::vec::Vec<Poly2> = (0..self.degree)
            .map(|i| Poly2::from_u64(u64::from(self.artin_schreier(BinElem(1 << i)).0)))
            .collect();
        let x = gf2lin::solve_columns(&columns, &Poly2::from_u64(u64::from(a.0)))?;
        let x = x.low_u64() as u32;
        Some(BinElem(x.min(x ^ 1)))
    }

    /// Canonical representative of `[a] ∈ k/P(k)`.
    pub fn cokernel_rep(&self, a: BinElem) -> AsClass {
        if self.trace(a) == 0 {
            AsClass(BinElem(0))
        } else {
            AsClass(self.witness)
        }
    }

    pub fn class_add(&self, a: AsClass, b: AsClass) -> AsClass {
        if a == b {
            AsClass(BinElem(0))
        } else {
            AsClass(self.witness)
        }
    }
}

impl Field for BinaryField {
    type Elem = BinElem;

    fn zero(&self) -> BinElem {
        BinElem(0)
    }

    fn one(&self) -> BinElem {
        BinElem(1)
    }

    fn add(&self, a: &BinElem, b: &BinElem) -> BinElem {
        BinaryField::add(self, *a, *b)
    }

    fn mul(&self, a: &BinElem, b: &BinElem) -> BinElem {
        BinaryField::mul(self, *a, *b)
    }

    fn inv(&self, a: &BinElem) -> Result<BinElem> {
        BinaryField::inv(self, *a)
    }

    fn contains(&self, a: &BinElem) -> bool {
        a.0 < self.order()
    }

    fn is_zero(&self, a: &BinElem) -> bool {
        a.0 == 0
    }
}

impl ArtinSchreier for BinaryField {
    type Class = AsClass;

    fn as_solve(&self, a: &BinElem) -> Option<BinElem> {
        BinaryField::as_solve(self, *a)
    }

    fn class_of(&self, a: &BinElem) -> AsClass {
        self.cokernel_rep(*a)
    }

    fn class_eq(&self, a: &AsClass, b: &AsClass) -> bool {
        a == b
    }

    fn class_is_zero(&self, a: &AsClass) -> bool {
        a.is_zero()
    }
}

impl SquareRoots for BinaryField {
    fn sqrt(&self, a: &BinElem) -> Result<BinElem> {
        Ok(BinaryField::sqrt(self, *a))
    }
}

impl RandomElement for BinaryField {
    fn random_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> BinElem {
        BinElem(rng.next_u32() & (self.order() - 1))
    }
}
