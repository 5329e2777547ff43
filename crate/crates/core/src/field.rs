//! Field abstractions shared by the binary fields and the F₂(t) tower.
//!
//! Everything here is characteristic 2: negation is the identity and
//! subtraction is addition.

use core::fmt::Debug;

use rand_core::RngCore;

use crate::Result;

/// A field of characteristic 2 given by a runtime context.
pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Whether `a` is a valid element of this field.
    fn contains(&self, a: &Self::Elem) -> bool;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Frobenius `a ↦ a²`.
    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }
}

/// Fields where the Artin–Schreier cokernel `k/P(k)` is decidable.
pub trait ArtinSchreier: Field {
    /// An element of `k/P(k)`.
    type Class: Clone + Debug;

    /// `P(a) = a² + a`.
    fn artin_schreier(&self, a: &Self::Elem) -> Self::Elem {
        self.add(&self.square(a), a)
    }

    /// A solution of `x² + x = a`, if one exists in this field.
    fn as_solve(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn class_of(&self, a: &Self::Elem) -> Self::Class;

    fn class_eq(&self, a: &Self::Class, b: &Self::Class) -> bool;

    /// Whether the class is the trivial one `[0]`.
    fn class_is_zero(&self, a: &Self::Class) -> bool;
}

/// Fields in which square roots can be extracted: perfect fields, or a
/// finite level of a perfect closure (where extraction may overflow the
/// level and fail).
pub trait SquareRoots: Field {
    fn sqrt(&self, a: &Self::Elem) -> Result<Self::Elem>;
}

/// Uniform-ish sampling of field elements for randomized constructions.
pub trait RandomElement: Field {
    fn random_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}
