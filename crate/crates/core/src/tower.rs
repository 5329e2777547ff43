//! The imperfect field `F₂(t)` and its perfect-closure tower.
//!
//! Level `m` of the tower is `K_m = F₂(t^{1/2^m})`. An element is stored as a
//! rational function in the level variable `u = t^{1/2^m}` together with the
//! level, and is always kept at the *minimal* level: whenever numerator and
//! denominator only involve even powers of `u`, the element already lives one
//! level down and is demoted. The stored level is therefore the height of
//! the element over `F₂(t)`, the least `m` with `x^{2^m} ∈ F₂(t)`.
//!
//! Over F₂ coefficients, squaring a rational function just doubles its
//! exponents, so `R(u_m)² = R(u_m²) = R(u_{m−1})`: Frobenius keeps the
//! representation and lowers the level, and the square root keeps the
//! representation and raises the level.

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::field::{ArtinSchreier, Field, RandomElement, SquareRoots};
use crate::gf2lin;
use crate::poly2::Poly2;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

/// Default cap on tower levels.
pub const DEFAULT_MAX_LEVEL: u32 = 8;

/// An element of the perfect closure of `F₂(t)`, at its minimal level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerElem {
    level: u32,
    value: RatFunc,
}

impl TowerElem {
    /// The element whose representation in `u = t^{1/2^level}` is `value`.
    pub fn new(mut level: u32, mut value: RatFunc) -> Self {
        while level > 0 {
            match value.sqrt() {
                Some(v) => {
                    value = v;
                    level -= 1;
                }
                None => break,
            }
        }
        Self { level, value }
    }

    /// An element of `F₂(t)` itself.
    pub fn base(value: RatFunc) -> Self {
        Self { level: 0, value }
    }

    pub fn zero() -> Self {
        Self::base(RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::base(RatFunc::one())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Representation at the element's own level.
    pub fn value(&self) -> &RatFunc {
        &self.value
    }

    /// The least `m` with `x^{2^m} ∈ F₂(t)`.
    pub fn height(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Representation in the variable of level `m`; `m` must not be below the
    /// element's level.
    pub fn at_level(&self, m: u32) -> RatFunc {
        assert!(m >= self.level, "cannot view a level-{} element at level {m}", self.level);
        self.value.spread(m - self.level)
    }

    fn lift_pair(&self, other: &Self) -> (u32, RatFunc, RatFunc) {
        let m = self.level.max(other.level);
        (m, self.at_level(m), other.at_level(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (m, a, b) = self.lift_pair(other);
        Self::new(m, a.add(&b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (m, a, b) = self.lift_pair(other);
        Self::new(m, a.mul(&b))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            level: self.level,
            value: self.value.inv()?,
        })
    }

    /// `x ↦ x²`; drops one level unless already in `F₂(t)`.
    pub fn frobenius(&self) -> Self {
        if self.level == 0 {
            Self::base(self.value.square())
        } else {
            Self {
                level: self.level - 1,
                value: self.value.clone(),
            }
        }
    }

    /// The unique square root in the perfect closure. Halves exponents in
    /// place when they are all even, otherwise rises one level.
    pub fn sqrt(&self) -> Self {
        Self::new(self.level + 1, self.value.clone())
    }

    /// `P(x) = x² + x`.
    pub fn artin_schreier(&self) -> Self {
        self.frobenius().add(self)
    }
}

/// Solves `c² + c = x` for `c` in `K_m`, using the representation of `x` at
/// level `m` (or at its own level if that is higher).
///
/// Write `x = U/V` in lowest terms. A solution `c = P/Q` in lowest terms
/// gives `c² + c = (P² + PQ)/Q²`, and `gcd(P² + PQ, Q²) = 1`, so `Q² = V` and
/// `P² + PQ = U`. Hence `V` must be a square and `P` solves an F₂-linear
/// system. Degree bound: if `deg P > deg Q` the leading term of `P²`
/// dominates and `deg U = 2 deg P`; if `deg P < deg Q` then `PQ` dominates and
/// `deg U = deg P + deg Q`; if they are equal `deg P = deg Q`. In all three
/// cases `deg P ≤ max(deg Q, deg U)`.
///
/// The two solutions are `c` and `c + 1`, numerators `P` and `P + Q`; the one
/// whose numerator is smaller as a bit string read from the top coefficient
/// is returned.
pub fn as_member_at(x: &TowerElem, m: u32) -> Option<TowerElem> {
    let m = m.max(x.level());
    let rep = x.at_level(m);
    let q = rep.den().sqrt()?;
    let u = rep.num();
    let dq = q.degree().unwrap_or(0);
    let bound = dq.max(u.degree().unwrap_or(0));
    let columns: Vec<Poly2> = (0..=bound)
        .map(|j| {
            let mono = Poly2::monomial(j);
            mono.square().add(&mono.mul(&q))
        })
        .collect();
    let p = gf2lin::solve_columns(&columns, u)?;
    let p = core::cmp::min(p.add(&q), p);
    let c = RatFunc::new(p, q).expect("denominator is a square root of a nonzero polynomial");
    Some(TowerElem::new(m, c))
}

/// [`as_member_at`] at the element's own level.
pub fn as_member(x: &TowerElem) -> Option<TowerElem> {
    as_member_at(x, x.level())
}

/// A class in `K_m / P(K_m)` for some ambient level `m`.
///
/// The representative is not canonical; compare classes with
/// [`class_eq`], never by representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsClassFF {
    rep: TowerElem,
    ambient: u32,
}

impl AsClassFF {
    pub fn new(rep: TowerElem, ambient: u32) -> Self {
        let ambient = ambient.max(rep.level());
        Self { rep, ambient }
    }

    pub fn rep(&self) -> &TowerElem {
        &self.rep
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    /// The representative written in the variable of the ambient level.
    pub fn rep_at_ambient(&self) -> RatFunc {
        self.rep.at_level(self.ambient)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.rep.add(&other.rep), self.ambient.max(other.ambient))
    }

    pub fn is_zero(&self) -> bool {
        as_member_at(&self.rep, self.ambient).is_some()
    }
}

/// `[a] = [b]` iff `a + b ∈ P(K)`, decided at the larger ambient level.
pub fn class_eq(a: &AsClassFF, b: &AsClassFF) -> bool {
    as_member_at(&a.rep.add(&b.rep), a.ambient.max(b.ambient)).is_some()
}

/// `y = x^{2^m}` in `F₂(t)` together with `w = x^{2^{m−1}} + ⋯ + x`, where
/// `m` is the height of `x`; telescoping gives `w² + w = y + x` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    pub y: RatFunc,
    pub witness: TowerElem,
}

pub fn lemma0_descend(x: &TowerElem) -> Descent {
    let mut witness = TowerElem::zero();
    let mut power = x.clone();
    for _ in 0..x.height() {
        witness = witness.add(&power);
        power = power.frobenius();
    }
    debug_assert_eq!(power.level(), 0);
    Descent {
        y: power.value,
        witness,
    }
}

/// The class of `x ∈ F₂(t)` in `K_m/P(K_m)`.
pub fn lemma0_forward(x: &RatFunc, m: u32) -> Result<AsClassFF> {
    Ok(TowerField::new(m)?.lemma0_forward(x))
}

/// The field `K_m = F₂(t^{1/2^m})`; level 0 is `F₂(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerField {
    level: u32,
    cap: u32,
}

impl TowerField {
    pub fn new(level: u32) -> Result<Self> {
        Self::with_cap(level, DEFAULT_MAX_LEVEL)
    }

    pub fn with_cap(level: u32, cap: u32) -> Result<Self> {
        if level > cap {
            return Err(Error::LevelCapExceeded { level, cap });
        }
        Ok(Self { level, cap })
    }

    /// `F₂(t)`.
    pub fn base() -> Self {
        Self {
            level: 0,
            cap: DEFAULT_MAX_LEVEL,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// `K_m` for another `m` under the same cap.
    pub fn at_level(&self, level: u32) -> Result<Self> {
        Self::with_cap(level, self.cap)
    }

    /// The inclusion `F₂(t)/P → K_m/P` on classes.
    pub fn lemma0_forward(&self, x: &RatFunc) -> AsClassFF {
        AsClassFF::new(TowerElem::base(x.clone()), self.level)
    }
}

impl Field for TowerField {
    type Elem = TowerElem;

    fn zero(&self) -> TowerElem {
        TowerElem::zero()
    }

    fn one(&self) -> TowerElem {
        TowerElem::one()
    }

    fn add(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        a.add(b)
    }

    fn mul(&self, a: &TowerElem, b: &TowerElem) -> TowerElem {
        a.mul(b)
    }

    fn inv(&self, a: &TowerElem) -> Result<TowerElem> {
        a.inv()
    }

    fn contains(&self, a: &TowerElem) -> bool {
        a.level() <= self.level
    }

    fn is_zero(&self, a: &TowerElem) -> bool {
        a.is_zero()
    }

    fn square(&self, a: &TowerElem) -> TowerElem {
        a.frobenius()
    }
}

impl ArtinSchreier for TowerField {
    type Class = AsClassFF;

    fn as_solve(&self, a: &TowerElem) -> Option<TowerElem> {
        as_member_at(a, self.level)
    }

    fn class_of(&self, a: &TowerElem) -> AsClassFF {
        AsClassFF::new(a.clone(), self.level)
    }

    fn class_eq(&self, a: &AsClassFF, b: &AsClassFF) -> bool {
        class_eq(a, b)
    }

    fn class_is_zero(&self, a: &AsClassFF) -> bool {
        a.is_zero()
    }
}

impl SquareRoots for TowerField {
    fn sqrt(&self, a: &TowerElem) -> Result<TowerElem> {
        let r = a.sqrt();
        if r.level() > self.level {
            return Err(Error::LevelCapExceeded {
                level: r.level(),
                cap: self.level,
            });
        }
        Ok(r)
    }
}

impl RandomElement for TowerField {
    /// A polynomial in `t` of degree at most 4.
    fn random_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> TowerElem {
        TowerElem::base(RatFunc::from_poly(Poly2::from_u64(u64::from(rng.next_u32() & 0x1f))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(bits: u64) -> Poly2 {
        Poly2::from_u64(bits)
    }

    fn poly_at(level: u32, bits: u64) -> TowerElem {
        TowerElem::new(level, RatFunc::from_poly(p(bits)))
    }

    fn frac_at(level: u32, n: u64, d: u64) -> TowerElem {
        TowerElem::new(level, RatFunc::new(p(n), p(d)).unwrap())
    }

    /// Every `P/Q` with `deg P ≤ 4`, `deg Q ≤ 2`, checked by direct
    /// evaluation of `c² + c` at level `m`.
    fn brute_force_member(x: &TowerElem, m: u32) -> bool {
        let target = x.at_level(m);
        (0u64..32).any(|pn| {
            (1u64..8).any(|qd| {
                let c = RatFunc::new(p(pn), p(qd)).unwrap();
                c.square().add(&c) == target
            })
        })
    }

    #[test]
    fn minimal_level_normalization() {
        // u² at level 1 is t
        assert_eq!(poly_at(1, 0b100), poly_at(0, 0b10));
        assert_eq!(poly_at(3, 1 << 8).level(), 0);
        assert_eq!(frac_at(2, 0b1000, 0b10).level(), 1);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(poly_at(1, 0b10).frobenius(), poly_at(0, 0b10));
        assert_eq!(poly_at(0, 0b11).frobenius(), poly_at(0, 0b101));
        let x = poly_at(2, 0b1000);
        assert_eq!(x.level(), 2);
        assert_eq!(x.frobenius(), poly_at(1, 0b1000));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(poly_at(0, 0b100).sqrt(), poly_at(0, 0b10));
        assert_eq!(poly_at(0, 0b10).sqrt(), poly_at(1, 0b10));
        let r = poly_at(0, 0b1010).sqrt();
        assert_eq!(r, poly_at(1, 0b1010));
        assert_eq!(r.frobenius(), poly_at(0, 0b1010));
        let k1 = TowerField::new(1).unwrap();
        assert_eq!(
            k1.sqrt(&poly_at(1, 0b10)),
            Err(Error::LevelCapExceeded { level: 2, cap: 1 })
        );
    }

    #[test]
    fn height_examples() {
        assert_eq!(poly_at(0, 0b11).height(), 0);
        assert_eq!(poly_at(1, 0b10).height(), 1);
        let x = poly_at(2, 0b1010);
        assert_eq!(x.height(), 2);
        assert_eq!(x.frobenius().level(), 1);
    }

    #[test]
    fn as_member_examples() {
        assert_eq!(as_member(&poly_at(0, 0b110)), Some(poly_at(0, 0b10)));
        assert_eq!(as_member(&poly_at(0, 0b10)), None);
        assert!(!brute_force_member(&poly_at(0, 0b10), 0));
        // 1/t² is not in P, but 1/t² + 1/t = P(1/t)
        let inv_t2 = frac_at(0, 1, 0b100);
        let inv_t = frac_at(0, 1, 0b10);
        assert_eq!(as_member(&inv_t2), None);
        assert_eq!(as_member(&inv_t2.add(&inv_t)), Some(inv_t.clone()));
        let k0 = TowerField::base();
        assert!(k0.class_eq(&k0.class_of(&inv_t2), &k0.class_of(&inv_t)));
    }

    #[test]
    fn class_eq_examples() {
        let k0 = TowerField::base();
        let t = poly_at(0, 0b10);
        let t2 = poly_at(0, 0b100);
        assert!(class_eq(&k0.class_of(&t2), &k0.class_of(&t)));
        assert!(!class_eq(&k0.class_of(&t), &k0.class_of(&TowerElem::zero())));
        assert!(class_eq(&k0.class_of(&t), &k0.class_of(&t)));
    }

    #[test]
    fn forward_examples() {
        let t = RatFunc::from_poly(p(0b10));
        let c1 = lemma0_forward(&t, 1).unwrap();
        assert_eq!(c1.rep_at_ambient(), RatFunc::from_poly(p(0b100)));
        let c2 = lemma0_forward(&t, 2).unwrap();
        assert_eq!(c2.rep_at_ambient(), RatFunc::from_poly(p(0b10000)));
        assert_eq!(
            lemma0_forward(&t, 9),
            Err(Error::LevelCapExceeded { level: 9, cap: 8 })
        );
        let f = RatFunc::new(p(0b1101), p(0b111)).unwrap();
        let pf = f.square().add(&f);
        for m in 0..4 {
            assert!(lemma0_forward(&pf, m).unwrap().is_zero());
        }
    }

    #[test]
    fn descend_examples() {
        let u = poly_at(1, 0b10);
        let d = lemma0_descend(&u);
        assert_eq!(d.y, RatFunc::from_poly(p(0b10)));
        assert_eq!(d.witness, u);
        // P(u) = t + u
        assert_eq!(u.artin_schreier(), poly_at(1, 0b110));

        let base = poly_at(0, 0b11);
        let d = lemma0_descend(&base);
        assert_eq!(d.y, RatFunc::from_poly(p(0b11)));
        assert!(d.witness.is_zero());

        let x = poly_at(1, 0b1010);
        let d = lemma0_descend(&x);
        assert_eq!(d.y, RatFunc::from_poly(p(0b1010)));
        assert_eq!(d.witness, x);
        // (u³+u)² + (u³+u) = t³ + t + u³ + u
        assert_eq!(x.artin_schreier(), poly_at(1, 0b1001110));
    }

    fn tower_elem() -> impl Strategy<Value = TowerElem> {
        (0u32..4, 0u64..512, 1u64..64).prop_map(|(m, n, d)| frac_at(m, n, d))
    }

    proptest! {
        #[test]
        fn sqrt_inverts_frobenius(x in tower_elem()) {
            prop_assert_eq!(x.sqrt().frobenius(), x.clone());
            prop_assert_eq!(x.frobenius().sqrt(), x);
        }

        #[test]
        fn descent_witness_identity(x in tower_elem()) {
            let d = lemma0_descend(&x);
            let lhs = d.witness.artin_schreier().add(&TowerElem::base(d.y.clone()));
            prop_assert_eq!(lhs, x.clone());
            let fwd = lemma0_forward(&d.y, x.height()).unwrap();
            prop_assert!(class_eq(&fwd, &AsClassFF::new(x.clone(), x.height())));
        }

        #[test]
        fn as_member_is_sound(x in tower_elem()) {
            if let Some(c) = as_member(&x) {
                prop_assert_eq!(c.artin_schreier(), x);
            }
        }

        #[test]
        fn as_member_finds_constructed_solutions(c in tower_elem()) {
            let x = c.artin_schreier();
            let found = as_member(&x);
            prop_assert!(found.is_some());
            let found = found.unwrap();
            prop_assert!(found == c || found == c.add(&TowerElem::one()));
        }

        #[test]
        fn as_member_agrees_with_brute_force(n in 0u64..512, d in 1u64..32) {
            let x = frac_at(0, n, d);
            prop_assert_eq!(as_member(&x).is_some(), brute_force_member(&x, 0));
        }

        #[test]
        fn injectivity_up_the_tower(n in 0u64..512, d in 1u64..512, m in 1u32..4) {
            let x = frac_at(0, n, d);
            prop_assert_eq!(as_member_at(&x, m).is_some(), as_member(&x).is_some());
        }
    }
}
