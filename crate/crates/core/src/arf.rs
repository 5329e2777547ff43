//! Wu vectors, the Arf invariant and Witt classes.
//!
//! Two routes compute the Arf class of a nondegenerate form `q`:
//!
//! - the *symplectic formula*: for a symplectic basis `e₁, f₁, …, e_n, f_n`,
//!   the class of `Σ q(eᵢ)·q(fᵢ)` in `k/P(k)`. No square roots are needed, so
//!   it works over the imperfect field `F₂(t)`;
//! - the *Wu route*, over a field with square roots: a Wu vector `ω` of a
//!   Lagrangian `L` satisfies `b(ω, l) = √q(l)` for all `l ∈ L` (the sign is
//!   irrelevant in characteristic 2), and the class of `q(ω)` is the answer.
//!   Moving `ω` along `L` changes `q(ω)` by `P(√q(l))` only.
//!
//! Over GF(2ⁿ) the Wu route is an isomorphism from the quadratic Witt group
//! onto the two-element cokernel; [`witt_decompose`] gives an exhaustive
//! isotropic-vector check of that statement.

use alloc::vec::Vec;

use crate::field::{ArtinSchreier, Field, SquareRoots};
use crate::gf2n::{AsClass, BinElem, BinaryField};
use crate::linalg::{self, Matrix};
use crate::quadform::{standard_symplectic_gram, QuadForm, SymplecticBasis};
use crate::tower::{class_eq, AsClassFF, TowerField};
use crate::{Error, Result};

/// Exhaustive isotropic-vector search is limited to `2^24` vectors.
pub const WITT_SEARCH_BUDGET_LOG2: u32 = 24;

/// A basis of a subspace equal to its own orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Lagrangian<E> {
    basis: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + core::fmt::Debug> Lagrangian<E> {
    /// Checks that `basis` has `dim/2` independent, pairwise orthogonal
    /// vectors; for a nondegenerate form that makes the span Lagrangian.
    pub fn new<F: Field<Elem = E>>(q: &QuadForm<F>, basis: Vec<Vec<E>>) -> Result<Self> {
        let d = q.dim();
        if !d.is_multiple_of(2) || basis.len() != d / 2 || basis.iter().any(|v| v.len() != d) {
            return Err(Error::NotALagrangian);
        }
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i..] {
                if !q.field().is_zero(&q.polar(x, y)?) {
                    return Err(Error::NotALagrangian);
                }
            }
        }
        if !linalg::independent(q.field(), &basis) {
            return Err(Error::NotALagrangian);
        }
        Ok(Self { basis })
    }

    /// `span(e₁, …, e_n)` of a symplectic basis.
    pub fn from_symplectic(s: &SymplecticBasis<E>) -> Self {
        Self {
            basis: (0..s.pairs()).map(|i| s.e(i)).collect(),
        }
    }

    /// `span(f₁, …, f_n)` of a symplectic basis.
    pub fn from_symplectic_dual(s: &SymplecticBasis<E>) -> Self {
        Self {
            basis: (0..s.pairs()).map(|i| s.f(i)).collect(),
        }
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ coeffs[i]·basis[i]`.
    pub fn combination<F: Field<Elem = E>>(&self, field: &F, coeffs: &[E]) -> Vec<E> {
        let d = self.basis.first().map_or(0, Vec::len);
        self.basis
            .iter()
            .zip(coeffs)
            .fold(linalg::zero_vec(field, d), |acc, (v, c)| {
                linalg::vec_add(field, &acc, &linalg::vec_scale(field, c, v))
            })
    }

    /// Whether `q` vanishes on the whole subspace.
    pub fn is_q_lagrangian<F: Field<Elem = E>>(&self, q: &QuadForm<F>) -> Result<bool> {
        // q is additive on L since b vanishes there, and q(λl) = λ²q(l).
        for v in &self.basis {
            if !q.field().is_zero(&q.eval(v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A vector `ω` with `b(ω, l) = √q(l)` for every `l` of a Lagrangian.
#[derive(Debug, Clone, PartialEq)]
pub struct WuVector<E>(pub Vec<E>);

impl<E> WuVector<E> {
    pub fn vector(&self) -> &[E] {
        &self.0
    }
}

/// Solves `b(ω, lᵢ) = √q(lᵢ)` on the basis of `l`, with free coordinates zero.
pub fn wu_vector<F: SquareRoots>(
    q: &QuadForm<F>,
    l: &Lagrangian<F::Elem>,
) -> Result<WuVector<F::Elem>> {
    let k = q.field();
    if !q.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    if l.dim() * 2 != q.dim() {
        return Err(Error::NotALagrangian);
    }
    let mut rows = Vec::with_capacity(l.dim());
    let mut rhs = Vec::with_capacity(l.dim());
    for v in l.basis() {
        rows.push(linalg::mat_vec(k, q.gram(), v)?);
        rhs.push(k.sqrt(&q.eval(v)?)?);
    }
    let a = Matrix::from_rows(rows)?;
    linalg::solve(k, &a, &rhs)
        .map(WuVector)
        .ok_or(Error::NotALagrangian)
}

pub fn is_wu_vector<F: SquareRoots>(
    q: &QuadForm<F>,
    l: &Lagrangian<F::Elem>,
    omega: &WuVector<F::Elem>,
) -> Result<bool> {
    let k = q.field();
    for v in l.basis() {
        if q.polar(omega.vector(), v)? != k.sqrt(&q.eval(v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The class of `q(ω)`; every `q(ω + l)` with `l ∈ L` lies in it.
pub fn lemma1_class<F: SquareRoots + ArtinSchreier>(
    q: &QuadForm<F>,
    l: &Lagrangian<F::Elem>,
    omega: &WuVector<F::Elem>,
) -> Result<F::Class> {
    if !is_wu_vector(q, l, omega)? {
        return Err(Error::NotAWuVector);
    }
    Ok(q.field().class_of(&q.eval(omega.vector())?))
}

/// Output of the Wu route on `span(e₁, …, e_n)`.
#[derive(Debug, Clone)]
pub struct WuRoute<F: ArtinSchreier> {
    pub basis: SymplecticBasis<F::Elem>,
    pub wu: WuVector<F::Elem>,
    /// `q(ω)`.
    pub value: F::Elem,
    pub class: F::Class,
}

pub fn wu_route<F: SquareRoots + ArtinSchreier>(q: &QuadForm<F>) -> Result<WuRoute<F>> {
    let basis = q.symplectic_basis()?;
    let l = Lagrangian::from_symplectic(&basis);
    let wu = wu_vector(q, &l)?;
    let value = q.eval(wu.vector())?;
    let class = q.field().class_of(&value);
    Ok(WuRoute {
        basis,
        wu,
        value,
        class,
    })
}

/// The Wu-route class of a form over a binary field.
pub fn parf(q: &QuadForm<BinaryField>) -> Result<AsClass> {
    Ok(wu_route(q)?.class)
}

/// Output of the symplectic formula.
#[derive(Debug, Clone)]
pub struct ArfComputation<F: ArtinSchreier> {
    pub basis: SymplecticBasis<F::Elem>,
    /// `Σ q(eᵢ)·q(fᵢ)`.
    pub sum: F::Elem,
    pub class: F::Class,
}

pub fn arf_computation<F: ArtinSchreier>(q: &QuadForm<F>) -> Result<ArfComputation<F>> {
    let k = q.field();
    let basis = q.symplectic_basis()?;
    let mut sum = k.zero();
    for i in 0..basis.pairs() {
        let term = k.mul(&q.eval(&basis.e(i))?, &q.eval(&basis.f(i))?);
        sum = k.add(&sum, &term);
    }
    let class = k.class_of(&sum);
    Ok(ArfComputation { basis, sum, class })
}

/// The class of `Σ q(eᵢ)·q(fᵢ)` in `k/P(k)`.
pub fn arf_invariant<F: ArtinSchreier>(q: &QuadForm<F>) -> Result<F::Class> {
    Ok(arf_computation(q)?.class)
}

/// Checks `ι(Arf(q)) = Wu-route class of q ⊗ K_m` for a form over the tower,
/// deciding equality in `K_m/P(K_m)`.
pub fn arf_diagram_check(q: &QuadForm<TowerField>, m: u32) -> Result<bool> {
    let arf = arf_invariant(q)?;
    let lifted = AsClassFF::new(arf.rep().clone(), m);
    let extended = q.with_field(q.field().at_level(m)?)?;
    let wu = wu_route(&extended)?;
    Ok(class_eq(&lifted, &wu.class))
}

/// A Wu vector shared by two Lagrangians.
///
/// With `ωᵢ` a Wu vector of `Lᵢ`, the difference `ω₁ + ω₂` is orthogonal to
/// `L₁ ∩ L₂`, hence lies in `L₁ + L₂`; writing it as `m₁ + m₂` with
/// `mᵢ ∈ Lᵢ`, the vector `ω₁ + m₁ = ω₂ + m₂` is a Wu vector of both.
pub fn common_wu_vector<F: SquareRoots>(
    q: &QuadForm<F>,
    l1: &Lagrangian<F::Elem>,
    l2: &Lagrangian<F::Elem>,
) -> Result<WuVector<F::Elem>> {
    let k = q.field();
    let w1 = wu_vector(q, l1)?;
    let w2 = wu_vector(q, l2)?;
    let diff = linalg::vec_add(k, w1.vector(), w2.vector());
    let columns: Vec<Vec<F::Elem>> = l1.basis().iter().chain(l2.basis()).cloned().collect();
    let a = Matrix::from_columns(&columns)?;
    let coeffs = linalg::solve(k, &a, &diff).ok_or(Error::DecompositionFailed)?;
    let m1 = l1.combination(k, &coeffs[..l1.dim()]);
    let omega = WuVector(linalg::vec_add(k, w1.vector(), &m1));
    if !is_wu_vector(q, l1, &omega)? || !is_wu_vector(q, l2, &omega)? {
        return Err(Error::DecompositionFailed);
    }
    Ok(omega)
}

/// `q_λ` on `span(e, f)`: `q(e) = 1`, `b(e, f) = 1`, `q(f) = λ`.
pub fn q_lambda<F: Field>(field: &F, lambda: F::Elem) -> QuadForm<F> {
    QuadForm::new(
        field.clone(),
        standard_symplectic_gram(field, 2),
        alloc::vec![field.one(), lambda],
    )
    .expect("standard gram is alternating")
}

/// Hyperbolic planes split off by [`witt_decompose`] and what is left.
#[derive(Debug, Clone, PartialEq)]
pub struct WittDecomposition {
    pub hyperbolic_count: usize,
    /// The anisotropic remainder, written in `anisotropic_basis`.
    pub anisotropic: QuadForm<BinaryField>,
    /// Basis of the remainder in the original coordinates.
    pub anisotropic_basis: Vec<Vec<BinElem>>,
}

impl WittDecomposition {
    pub fn is_neutral(&self) -> bool {
        self.anisotropic.dim() == 0
    }
}

/// First nonzero `v = Σ cᵢ·basisᵢ` with `q(v) = 0`, scanning the coefficient
/// encoding `Σ cᵢ·2^{n·i}` upwards.
fn first_isotropic(
    q: &QuadForm<BinaryField>,
    basis: &[Vec<BinElem>],
) -> Result<Option<Vec<BinElem>>> {
    let k = q.field();
    let n = k.degree();
    let mask = k.order() - 1;
    let total = 1u64 << (n as usize * basis.len());
    for code in 1..total {
        let mut v = linalg::zero_vec(k, q.dim());
        for (i, b) in basis.iter().enumerate() {
            let c = BinElem(((code >> (n as usize * i)) as u32) & mask);
            if c.0 != 0 {
                v = linalg::vec_add(k, &v, &linalg::vec_scale(k, &c, b));
            }
        }
        if q.eval(&v)?.0 == 0 {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Splits hyperbolic planes off `q` by exhaustive isotropic-vector search.
///
/// Each round finds the first isotropic `v`, a partner `w` with
/// `b(v, w) = 1`, replaces `w` by `w + q(w)·v` so that `q(w) = 0`, and
/// continues on the orthogonal complement of `span(v, w)`.
pub fn witt_decompose(q: &QuadForm<BinaryField>) -> Result<WittDecomposition> {
    let k = q.field();
    let required = k.degree() * q.dim() as u32;
    if required > WITT_SEARCH_BUDGET_LOG2 {
        return Err(Error::BudgetExceeded {
            required_log2: required,
            budget_log2: WITT_SEARCH_BUDGET_LOG2,
        });
    }
    if !q.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let d = q.dim();
    let mut current: Vec<Vec<BinElem>> = (0..d).map(|i| linalg::unit_vec(k, d, i)).collect();
    let mut hyperbolic_count = 0;
    while !current.is_empty() {
        let Some(v) = first_isotropic(q, &current)? else {
            break;
        };
        let mut partner = None;
        for x in &current {
            let bvx = q.polar(&v, x)?;
            if bvx.0 != 0 {
                partner = Some(linalg::vec_scale(k, &k.inv(bvx)?, x));
                break;
            }
        }
        let w = partner.ok_or(Error::DegenerateForm)?;
        let w = linalg::vec_add(k, &w, &linalg::vec_scale(k, &q.eval(&w)?, &v));
        let mut complement: Vec<Vec<BinElem>> = Vec::with_capacity(current.len() - 2);
        for x in &current {
            let shift = linalg::vec_add(
                k,
                &linalg::vec_scale(k, &q.polar(x, &w)?, &v),
                &linalg::vec_scale(k, &q.polar(x, &v)?, &w),
            );
            let y = linalg::vec_add(k, x, &shift);
            let mut candidate = complement.clone();
            candidate.push(y.clone());
            if linalg::independent(k, &candidate) {
                complement.push(y);
            }
        }
        if complement.len() + 2 != current.len() {
            return Err(Error::DegenerateForm);
        }
        current = complement;
        hyperbolic_count += 1;
    }
    Ok(WittDecomposition {
        hyperbolic_count,
        anisotropic: q.restrict(&current)?,
        anisotropic_basis: current,
    })
}

/// A Witt class over GF(2ⁿ): the Arf bit and the anisotropic dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WittClass {
    pub arf_bit: u8,
    pub anisotropic_dim: usize,
}

/// Sum in the Witt group, which is `Z/2` over a finite field.
impl core::ops::Add for WittClass {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        let bit = self.arf_bit ^ other.arf_bit;
        Self {
            arf_bit: bit,
            anisotropic_dim: 2 * bit as usize,
        }
    }
}

pub fn witt_class(q: &QuadForm<BinaryField>) -> Result<WittClass> {
    let arf_bit = arf_invariant(q)?.bit();
    let decomposition = witt_decompose(q)?;
    let anisotropic_dim = decomposition.anisotropic.dim();
    if (arf_bit == 0) != (anisotropic_dim == 0) {
        return Err(Error::InconsistentInvariant);
    }
    Ok(WittClass {
        arf_bit,
        anisotropic_dim,
    })
}
