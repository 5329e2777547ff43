//! Seeded random forms and Lagrangians for property checks.

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::arf::Lagrangian;
use crate::field::RandomElement;
use crate::linalg::{self, Matrix};
use crate::quadform::QuadForm;
use crate::Result;

/// A quadratic form with uniformly drawn upper-triangular Gram entries and
/// basis values; possibly degenerate.
pub fn random_form<F: RandomElement, R: RngCore + ?Sized>(
    field: &F,
    dim: usize,
    rng: &mut R,
) -> QuadForm<F> {
    let mut gram = Matrix::filled(dim, dim, field.zero());
    for i in 0..dim {
        for j in i + 1..dim {
            let x = field.random_element(rng);
            gram.set(i, j, x.clone());
            gram.set(j, i, x);
        }
    }
    let diag = (0..dim).map(|_| field.random_element(rng)).collect();
    QuadForm::new(field.clone(), gram, diag).expect("alternating by construction")
}

/// Rejection-samples [`random_form`] until the polar form is nondegenerate.
/// `dim` must be even.
pub fn random_nondegenerate_form<F: RandomElement, R: RngCore + ?Sized>(
    field: &F,
    dim: usize,
    rng: &mut R,
) -> QuadForm<F> {
    assert!(dim.is_multiple_of(2), "alternating forms of odd dimension are degenerate");
    loop {
        let q = random_form(field, dim, rng);
        if q.is_nondegenerate() {
            return q;
        }
    }
}

/// A Lagrangian of a nondegenerate `q`: the `e`-half of a symplectic basis
/// moved by a random symplectic map.
pub fn random_lagrangian<F: RandomElement, R: RngCore + ?Sized>(
    q: &QuadForm<F>,
    rng: &mut R,
) -> Result<Lagrangian<F::Elem>> {
    let s = q.symplectic_basis()?;
    let standard = q.base_change(s.matrix())?;
    let m = standard.random_symplectic_map(rng.next_u64());
    let sm = linalg::mat_mul(q.field(), s.matrix(), &m)?;
    let basis: Vec<_> = (0..q.dim() / 2).map(|i| sm.column(2 * i)).collect();
    Lagrangian::new(q, basis)
}
