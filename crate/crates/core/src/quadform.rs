//! Quadratic forms stored by their polar Gram matrix and basis values.
//!
//! For `x = Σ xᵢvᵢ`,
//! `q(x) = Σ xᵢ² q(vᵢ) + Σ_{i<j} xᵢxⱼ b(vᵢ, vⱼ)`, so `(gram, diag)` determines
//! `q` completely. The polar form of a quadratic form in characteristic 2 is
//! alternating: `b(x, x) = 2q(x) = 0`.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::field::{Field, RandomElement};
use crate::linalg::{self, Matrix};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadForm<F: Field> {
    field: F,
    gram: Matrix<F::Elem>,
    diag: Vec<F::Elem>,
}

/// Columns `e₁, f₁, …, e_n, f_n` with `b(eᵢ, fⱼ) = δᵢⱼ` and all other
/// pairings zero, written in the coordinates of the form's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticBasis<E> {
    matrix: Matrix<E>,
}

impl<E: Clone> SymplecticBasis<E> {
    pub fn matrix(&self) -> &Matrix<E> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<E> {
        self.matrix
    }

    /// Number of hyperbolic pairs `n`.
    pub fn pairs(&self) -> usize {
        self.matrix.cols() / 2
    }

    pub fn e(&self, i: usize) -> Vec<E> {
        self.matrix.column(2 * i)
    }

    pub fn f(&self, i: usize) -> Vec<E> {
        self.matrix.column(2 * i + 1)
    }
}

/// Block-diagonal `[[0, 1], [1, 0]]` Gram matrix of size `d`.
pub fn standard_symplectic_gram<F: Field>(field: &F, d: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(d, d, |i, j| {
        if i / 2 == j / 2 && i != j {
            field.one()
        } else {
            field.zero()
        }
    })
}

impl<F: Field> QuadForm<F> {
    /// Validates that `gram` is square, symmetric with zero diagonal, and that
    /// all entries belong to `field`.
    pub fn new(field: F, gram: Matrix<F::Elem>, diag: Vec<F::Elem>) -> Result<Self> {
        let d = diag.len();
        if gram.rows() != d || gram.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: if gram.rows() != d { gram.rows() } else { gram.cols() },
            });
        }
        for i in 0..d {
            if !field.is_zero(gram.get(i, i)) {
                return Err(Error::NotAlternating);
            }
            for j in 0..i {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(Error::NotAlternating);
                }
            }
        }
        let all_valid = diag.iter().all(|a| field.contains(a))
            && (0..d).all(|i| gram.row(i).iter().all(|a| field.contains(a)));
        if !all_valid {
            return Err(Error::ElementOutOfRange);
        }
        Ok(Self { field, gram, diag })
    }

    /// The zero-dimensional form.
    pub fn empty(field: F) -> Self {
        Self {
            field,
            gram: Matrix::from_rows(Vec::new()).expect("empty matrix"),
            diag: Vec::new(),
        }
    }

    /// `q(e) = q(f) = 0`, `b(e, f) = 1`.
    pub fn hyperbolic(field: F) -> Self {
        let gram = standard_symplectic_gram(&field, 2);
        let diag = linalg::zero_vec(&field, 2);
        Self { field, gram, diag }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn gram(&self) -> &Matrix<F::Elem> {
        &self.gram
    }

    pub fn diag(&self) -> &[F::Elem] {
        &self.diag
    }

    /// The same Gram matrix and basis values over another field containing
    /// all entries (used to extend scalars up the F₂(t) tower).
    pub fn with_field(&self, field: F) -> Result<Self> {
        Self::new(field, self.gram.clone(), self.diag.clone())
    }

    fn check_len(&self, x: &[F::Elem]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    pub fn eval(&self, x: &[F::Elem]) -> Result<F::Elem> {
        self.check_len(x)?;
        let k = &self.field;
        let mut acc = k.zero();
        for (i, xi) in x.iter().enumerate() {
            if k.is_zero(xi) {
                continue;
            }
            acc = k.add(&acc, &k.mul(&k.square(xi), &self.diag[i]));
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                if k.is_zero(xj) || k.is_zero(self.gram.get(i, j)) {
                    continue;
                }
                acc = k.add(&acc, &k.mul(&k.mul(xi, xj), self.gram.get(i, j)));
            }
        }
        Ok(acc)
    }

    /// `b(x, y) = xᵀ·gram·y`.
    pub fn polar(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<F::Elem> {
        self.check_len(x)?;
        self.check_len(y)?;
        let gy = linalg::mat_vec(&self.field, &self.gram, y)?;
        Ok(linalg::dot(&self.field, x, &gy))
    }

    /// `b(x, y) = q(x + y) − q(x) − q(y)`, computed from values only.
    pub fn polar_by_values(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<F::Elem> {
        self.check_len(y)?;
        let k = &self.field;
        let sum = linalg::vec_add(k, x, y);
        Ok(k.add(&k.add(&self.eval(&sum)?, &self.eval(x)?), &self.eval(y)?))
    }

    pub fn is_nondegenerate(&self) -> bool {
        linalg::is_invertible(&self.field, &self.gram)
    }

    /// `q₁ ⊕ q₂`: block-diagonal Gram matrix, concatenated basis values.
    pub fn orth_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        let (d1, d2) = (self.dim(), other.dim());
        let gram = Matrix::from_fn(d1 + d2, d1 + d2, |i, j| match (i < d1, j < d1) {
            (true, true) => self.gram.get(i, j).clone(),
            (false, false) => other.gram.get(i - d1, j - d1).clone(),
            _ => self.field.zero(),
        });
        let mut diag = self.diag.clone();
        diag.extend(other.diag.iter().cloned());
        Ok(Self {
            field: self.field.clone(),
            gram,
            diag,
        })
    }

    /// `q'(x) = q(M·x)`: basis values are `q` at the columns of `M`, Gram
    /// matrix `Mᵀ·gram·M`.
    pub fn base_change(&self, m: &Matrix<F::Elem>) -> Result<Self> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: m.rows(),
            });
        }
        if !linalg::is_invertible(&self.field, m) {
            return Err(Error::SingularMatrix);
        }
        Ok(self.restrict_unchecked(m))
    }

    /// The form restricted to the span of the columns of `m`, in that basis.
    fn restrict_unchecked(&self, m: &Matrix<F::Elem>) -> Self {
        let k = &self.field;
        let gm = linalg::mat_mul(k, &self.gram, m).expect("dimensions checked");
        let gram = linalg::mat_mul(k, &m.transpose(), &gm).expect("dimensions checked");
        let diag = (0..m.cols())
            .map(|j| self.eval(&m.column(j)).expect("dimensions checked"))
            .collect();
        Self {
            field: k.clone(),
            gram,
            diag,
        }
    }

    /// The form restricted to the span of independent `vectors`, written in
    /// that basis.
    pub fn restrict(&self, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        for v in vectors {
            self.check_len(v)?;
        }
        if !linalg::independent(&self.field, vectors) {
            return Err(Error::SingularMatrix);
        }
        if vectors.is_empty() {
            return Ok(Self::empty(self.field.clone()));
        }
        Ok(self.restrict_unchecked(&Matrix::from_columns(vectors)?))
    }

    /// Symplectic basis of the polar form.
    ///
    /// Takes the lowest-index remaining vector `v` and its lowest-index
    /// partner `w` with `b(v, w) ≠ 0`, sets `e = v`, `f = w / b(v, w)`, then
    /// replaces every other remaining `x` by `x + b(x, f)·e + b(x, e)·f`,
    /// which is orthogonal to both, and repeats.
    pub fn symplectic_basis(&self) -> Result<SymplecticBasis<F::Elem>> {
        let k = &self.field;
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        let d = self.dim();
        let mut remaining: Vec<Vec<F::Elem>> = (0..d).map(|i| linalg::unit_vec(k, d, i)).collect();
        let mut columns = Vec::with_capacity(d);
        while !remaining.is_empty() {
            let e = remaining.remove(0);
            let mut partner = None;
            for (idx, w) in remaining.iter().enumerate() {
                let bvw = self.polar(&e, w)?;
                if !k.is_zero(&bvw) {
                    partner = Some((idx, bvw));
                    break;
                }
            }
            let (idx, bvw) = partner.ok_or(Error::DegenerateForm)?;
            let w = remaining.remove(idx);
            let f = linalg::vec_scale(k, &k.inv(&bvw)?, &w);
            for x in remaining.iter_mut() {
                let bxf = self.polar(x, &f)?;
                let bxe = self.polar(x, &e)?;
                let shifted = linalg::vec_add(k, &linalg::vec_scale(k, &bxf, &e), &linalg::vec_scale(k, &bxe, &f));
                *x = linalg::vec_add(k, x, &shifted);
            }
            columns.push(e);
            columns.push(f);
        }
        Ok(SymplecticBasis {
            matrix: Matrix::from_columns(&columns)?,
        })
    }
}

impl<F: RandomElement> QuadForm<F> {
    /// A product of `count` random symplectic transvections
    /// `x ↦ x + λ·b(x, v)·v`, each of which preserves the polar form exactly.
    pub fn random_symplectic_map_with(&self, seed: u64, count: usize) -> Matrix<F::Elem> {
        let k = &self.field;
        let d = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut acc = Matrix::identity(k, d);
        for _ in 0..count {
            let v: Vec<F::Elem> = (0..d).map(|_| k.random_element(&mut rng)).collect();
            let lambda = k.random_element(&mut rng);
            let gv = linalg::mat_vec(k, &self.gram, &v).expect("square gram");
            let t = Matrix::from_fn(d, d, |i, j| {
                let delta = if i == j { k.one() } else { k.zero() };
                k.add(&delta, &k.mul(&lambda, &k.mul(&v[i], &gv[j])))
            });
            acc = linalg::mat_mul(k, &acc, &t).expect("square matrices");
        }
        acc
    }

    /// [`QuadForm::random_symplectic_map_with`] using `2·dim + 2`
    /// transvections.
    pub fn random_symplectic_map(&self, seed: u64) -> Matrix<F::Elem> {
        self.random_symplectic_map_with(seed, 2 * self.dim() + 2)
    }
}
