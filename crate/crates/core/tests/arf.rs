use arf_core::arf::{
    arf_computation, arf_diagram_check, arf_invariant, common_wu_vector, is_wu_vector,
    lemma1_class, parf, q_lambda, witt_class, witt_decompose, wu_route, wu_vector, Lagrangian,
    WittClass, WuVector,
};
use arf_core::linalg::{self, Matrix};
use arf_core::quadform::standard_symplectic_gram;
use arf_core::tower::class_eq;
use arf_core::sample::{random_lagrangian, random_nondegenerate_form};
use arf_core::{
    AsClass, BinElem, BinaryField, Error, Poly2, QuadForm, RatFunc, TowerElem, TowerField,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn gf(n: u32) -> BinaryField {
    let modulus = [0, 0b11, 0b111, 0b1011, 0b10011][n as usize];
    BinaryField::new(n, modulus).unwrap()
}

fn b(v: &[u32]) -> Vec<BinElem> {
    v.iter().map(|&x| BinElem(x)).collect()
}

fn std_form(k: &BinaryField, diag: &[u32]) -> QuadForm<BinaryField> {
    QuadForm::new(k.clone(), standard_symplectic_gram(k, diag.len()), b(diag)).unwrap()
}

fn t_poly(bits: u64) -> TowerElem {
    TowerElem::base(RatFunc::from_poly(Poly2::from_u64(bits)))
}

fn tower_std_form(diag: Vec<TowerElem>) -> QuadForm<TowerField> {
    let k = TowerField::base();
    QuadForm::new(k.clone(), standard_symplectic_gram(&k, diag.len()), diag).unwrap()
}

/// Every vector of `F^d` over a small binary field.
fn all_vectors(k: &BinaryField, d: usize) -> impl Iterator<Item = Vec<BinElem>> + '_ {
    let n = k.degree() as usize;
    (0u64..1 << (n * d)).map(move |code| {
        (0..d)
            .map(|i| BinElem((code >> (n * i)) as u32 & (k.order() - 1)))
            .collect()
    })
}

#[test]
fn wu_vector_of_q_lambda_is_f() {
    let k = gf(2);
    let q = q_lambda(&k, BinElem(2));
    let l = Lagrangian::new(&q, vec![b(&[1, 0])]).unwrap();
    assert_eq!(wu_vector(&q, &l).unwrap(), WuVector(b(&[0, 1])));
}

#[test]
fn wu_vector_dim4_by_hand() {
    let k = gf(1);
    let q = std_form(&k, &[1, 0, 1, 0]);
    let l = Lagrangian::new(&q, vec![b(&[1, 0, 0, 0]), b(&[0, 0, 1, 0])]).unwrap();
    let w = wu_vector(&q, &l).unwrap();
    assert_eq!(w, WuVector(b(&[0, 1, 0, 1])));
    // the hand solution set: b(ω, e₁) = ω_f₁ = 1 and b(ω, e₂) = ω_f₂ = 1
    let solutions: Vec<_> = all_vectors(&k, 4)
        .filter(|v| is_wu_vector(&q, &l, &WuVector(v.clone())).unwrap())
        .collect();
    assert_eq!(solutions.len(), 4);
    assert!(solutions.iter().all(|v| v[1].0 == 1 && v[3].0 == 1));
}

#[test]
fn q_lagrangian_gives_trivial_class() {
    let k = gf(3);
    let q = std_form(&k, &[0, 5, 0, 3]);
    let l = Lagrangian::new(&q, vec![b(&[1, 0, 0, 0]), b(&[0, 0, 1, 0])]).unwrap();
    assert!(l.is_q_lagrangian(&q).unwrap());
    let w = wu_vector(&q, &l).unwrap();
    assert_eq!(q.eval(w.vector()).unwrap(), BinElem(0));
    assert!(lemma1_class(&q, &l, &w).unwrap().is_zero());
}

#[test]
fn lemma1_class_examples() {
    let k = gf(2);
    let q = q_lambda(&k, BinElem(2));
    let l = Lagrangian::new(&q, vec![b(&[1, 0])]).unwrap();
    let w = wu_vector(&q, &l).unwrap();
    assert_eq!(k.trace(BinElem(2)), 1);
    assert_eq!(lemma1_class(&q, &l, &w).unwrap(), k.cokernel_rep(BinElem(2)));

    let h = QuadForm::hyperbolic(k.clone());
    let lh = Lagrangian::new(&h, vec![b(&[1, 0])]).unwrap();
    assert!(lemma1_class(&h, &lh, &WuVector(b(&[0, 0]))).unwrap().is_zero());
    assert_eq!(
        lemma1_class(&h, &lh, &WuVector(b(&[0, 1]))),
        Err(Error::NotAWuVector)
    );
}

#[test]
fn parf_examples() {
    for n in 1..=4 {
        let k = gf(n);
        for lambda in k.elements() {
            assert_eq!(parf(&q_lambda(&k, lambda)).unwrap(), k.cokernel_rep(lambda));
        }
    }
    let k = gf(3);
    let h = QuadForm::hyperbolic(k.clone());
    assert!(parf(&h.orth_sum(&h).unwrap()).unwrap().is_zero());
    assert_eq!(parf(&std_form(&gf(1), &[1, 1])).unwrap(), AsClass(BinElem(1)));
}

#[test]
fn arf_invariant_examples() {
    let k = gf(1);
    let q = std_form(&k, &[1, 1, 1, 1]);
    let c = arf_computation(&q).unwrap();
    assert_eq!(c.sum, BinElem(0));
    assert!(c.class.is_zero());
    assert!(witt_decompose(&q).unwrap().is_neutral());

    let qt = tower_std_form(vec![TowerElem::one(), t_poly(0b10)]);
    let arf_t = arf_invariant(&qt).unwrap();
    assert!(!arf_t.is_zero());
    let qt2 = tower_std_form(vec![TowerElem::one(), t_poly(0b100)]);
    let arf_t2 = arf_invariant(&qt2).unwrap();
    assert!(!arf_t2.is_zero());
    assert!(class_eq(&arf_t, &arf_t2));
}

#[test]
fn degenerate_forms_are_rejected() {
    let k = gf(1);
    let q = QuadForm::new(k.clone(), Matrix::filled(2, 2, BinElem(0)), b(&[1, 0])).unwrap();
    assert_eq!(arf_invariant(&q).err(), Some(Error::DegenerateForm));
    assert_eq!(parf(&q), Err(Error::DegenerateForm));
    assert_eq!(witt_decompose(&q).err(), Some(Error::DegenerateForm));
}

#[test]
fn lagrangian_validation() {
    let k = gf(1);
    let q = std_form(&k, &[0, 0, 0, 0]);
    // e₁, f₁ pair nontrivially
    assert_eq!(
        Lagrangian::new(&q, vec![b(&[1, 0, 0, 0]), b(&[0, 1, 0, 0])]),
        Err(Error::NotALagrangian)
    );
    // dependent
    assert_eq!(
        Lagrangian::new(&q, vec![b(&[1, 0, 0, 0]), b(&[1, 0, 0, 0])]),
        Err(Error::NotALagrangian)
    );
    // too small
    assert_eq!(Lagrangian::new(&q, vec![b(&[1, 0, 0, 0])]), Err(Error::NotALagrangian));
}

#[test]
fn diagram_check_examples() {
    let qt = tower_std_form(vec![TowerElem::one(), t_poly(0b10)]);
    assert!(arf_diagram_check(&qt, 1).unwrap());
    let route = wu_route(&qt.with_field(TowerField::new(1).unwrap()).unwrap()).unwrap();
    assert_eq!(route.value, t_poly(0b10));

    let h = tower_std_form(vec![TowerElem::zero(), TowerElem::zero()]);
    let neutral = h.orth_sum(&h).unwrap();
    assert!(arf_diagram_check(&neutral, 2).unwrap());
    assert!(arf_invariant(&neutral).unwrap().is_zero());

    // √t is not in F₂(t): the Wu route needs level 1
    let swapped = tower_std_form(vec![t_poly(0b10), TowerElem::one()]);
    assert!(arf_diagram_check(&swapped, 1).unwrap());
    assert_eq!(
        arf_diagram_check(&swapped, 0),
        Err(Error::LevelCapExceeded { level: 1, cap: 0 })
    );

    let k = TowerField::base();
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..10 {
        let q = random_nondegenerate_form(&k, 4, &mut rng);
        assert!(arf_diagram_check(&q, 2).unwrap());
    }
}

#[test]
fn common_wu_vector_examples() {
    let k = gf(1);
    let h = QuadForm::hyperbolic(k.clone());
    let le = Lagrangian::new(&h, vec![b(&[1, 0])]).unwrap();
    let lf = Lagrangian::new(&h, vec![b(&[0, 1])]).unwrap();
    assert_eq!(common_wu_vector(&h, &le, &lf).unwrap(), WuVector(b(&[0, 0])));
    let same = common_wu_vector(&h, &le, &le).unwrap();
    assert!(is_wu_vector(&h, &le, &same).unwrap());

    // neutral dim-4 form over GF(2) with two transverse Lagrangians
    let q = std_form(&k, &[1, 1, 0, 0]);
    let l1 = Lagrangian::new(&q, vec![b(&[1, 0, 0, 0]), b(&[0, 0, 1, 0])]).unwrap();
    let l2 = Lagrangian::new(&q, vec![b(&[0, 1, 0, 0]), b(&[0, 0, 0, 1])]).unwrap();
    let w = common_wu_vector(&q, &l1, &l2).unwrap();
    let common: Vec<_> = all_vectors(&k, 4)
        .filter(|v| {
            let v = WuVector(v.clone());
            is_wu_vector(&q, &l1, &v).unwrap() && is_wu_vector(&q, &l2, &v).unwrap()
        })
        .collect();
    assert_eq!(common, vec![b(&[1, 1, 0, 0])]);
    assert_eq!(w.vector(), &common[0][..]);
}

#[test]
fn witt_decompose_examples() {
    let k = gf(1);
    let h = QuadForm::hyperbolic(k.clone());
    let d = witt_decompose(&h).unwrap();
    assert_eq!(d.hyperbolic_count, 1);
    assert_eq!(d.anisotropic.dim(), 0);

    let q1 = std_form(&k, &[1, 1]);
    let zeros: Vec<_> = all_vectors(&k, 2).filter(|v| q1.eval(v).unwrap().0 == 0).collect();
    assert_eq!(zeros, vec![b(&[0, 0])]);
    let d = witt_decompose(&q1).unwrap();
    assert_eq!(d.hyperbolic_count, 0);
    assert_eq!(d.anisotropic, q1);

    let d = witt_decompose(&std_form(&k, &[1, 1, 1, 1])).unwrap();
    assert_eq!((d.hyperbolic_count, d.anisotropic.dim()), (2, 0));

    let big = BinaryField::new(13, (1 << 13) | 0b11011).unwrap();
    assert_eq!(
        witt_decompose(&QuadForm::hyperbolic(big)),
        Err(Error::BudgetExceeded {
            required_log2: 26,
            budget_log2: 24
        })
    );
}

#[test]
fn witt_class_examples() {
    let k = gf(1);
    let h = QuadForm::hyperbolic(k.clone());
    assert_eq!(
        witt_class(&h).unwrap(),
        WittClass {
            arf_bit: 0,
            anisotropic_dim: 0
        }
    );
    let one_two = WittClass {
        arf_bit: 1,
        anisotropic_dim: 2,
    };
    assert_eq!(witt_class(&std_form(&k, &[1, 1])).unwrap(), one_two);
    assert_eq!(witt_class(&q_lambda(&gf(2), BinElem(2))).unwrap(), one_two);
    assert_eq!((one_two + one_two).anisotropic_dim, 0);
}

fn small_field() -> impl Strategy<Value = BinaryField> {
    (1u32..=3).prop_map(gf)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arf_is_basis_independent(k in small_field(), pairs in 1usize..=4, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_nondegenerate_form(&k, 2 * pairs, &mut rng);
        let s = q.symplectic_basis().unwrap();
        let standard = q.base_change(s.matrix()).unwrap();
        let m = standard.random_symplectic_map(seed);
        let moved = standard.base_change(&m).unwrap();
        prop_assert_eq!(arf_invariant(&moved).unwrap(), arf_invariant(&q).unwrap());
    }

    #[test]
    fn wu_route_matches_symplectic_formula(k in small_field(), pairs in 1usize..=3, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_nondegenerate_form(&k, 2 * pairs, &mut rng);
        let route = wu_route(&q).unwrap();
        // ω = Σ √q(eᵢ)·fᵢ is the Wu vector on span(eᵢ) and q(ω) = Σ q(eᵢ)q(fᵢ)
        let s = &route.basis;
        let omega = (0..s.pairs()).fold(vec![BinElem(0); q.dim()], |acc, i| {
            let c = k.sqrt(q.eval(&s.e(i)).unwrap());
            linalg::vec_add(&k, &acc, &linalg::vec_scale(&k, &c, &s.f(i)))
        });
        let l = Lagrangian::from_symplectic(s);
        prop_assert!(is_wu_vector(&q, &l, &WuVector(omega.clone())).unwrap());
        prop_assert_eq!(q.eval(&omega).unwrap(), arf_computation(&q).unwrap().sum);
        prop_assert_eq!(route.class, arf_invariant(&q).unwrap());
    }

    #[test]
    fn lemma1_coset_identity(k in small_field(), pairs in 1usize..=3, seed in any::<u64>(), coeffs in prop::collection::vec(0u32..8, 3)) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_nondegenerate_form(&k, 2 * pairs, &mut rng);
        let l = random_lagrangian(&q, &mut rng).unwrap();
        let w = wu_vector(&q, &l).unwrap();
        let c: Vec<BinElem> = coeffs[..pairs].iter().map(|&x| BinElem(x & (k.order() - 1))).collect();
        let v = l.combination(&k, &c);
        let lhs = q.eval(&linalg::vec_add(&k, w.vector(), &v)).unwrap();
        let rhs = k.add(q.eval(w.vector()).unwrap(), k.artin_schreier(k.sqrt(q.eval(&v).unwrap())));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(k.cokernel_rep(lhs), lemma1_class(&q, &l, &w).unwrap());
    }

    #[test]
    fn classes_agree_across_lagrangians(k in small_field(), pairs in 1usize..=3, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_nondegenerate_form(&k, 2 * pairs, &mut rng);
        let l1 = random_lagrangian(&q, &mut rng).unwrap();
        let l2 = random_lagrangian(&q, &mut rng).unwrap();
        let (w1, w2) = (wu_vector(&q, &l1).unwrap(), wu_vector(&q, &l2).unwrap());
        prop_assert_eq!(lemma1_class(&q, &l1, &w1).unwrap(), lemma1_class(&q, &l2, &w2).unwrap());
        let w = common_wu_vector(&q, &l1, &l2).unwrap();
        prop_assert!(is_wu_vector(&q, &l1, &w).unwrap() && is_wu_vector(&q, &l2, &w).unwrap());
    }

    #[test]
    fn arf_is_additive(seed in any::<u64>(), d1 in 1usize..=2, d2 in 1usize..=2) {
        let k = gf(2);
        let mut rng = StdRng::seed_from_u64(seed);
        let q1 = random_nondegenerate_form(&k, 2 * d1, &mut rng);
        let q2 = random_nondegenerate_form(&k, 2 * d2, &mut rng);
        let sum = arf_invariant(&q1.orth_sum(&q2).unwrap()).unwrap();
        prop_assert_eq!(sum, k.class_add(arf_invariant(&q1).unwrap(), arf_invariant(&q2).unwrap()));
    }

    #[test]
    fn arf_bit_detects_neutrality(k in small_field(), pairs in 1usize..=2, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let q = random_nondegenerate_form(&k, 2 * pairs, &mut rng);
        let wc = witt_class(&q).unwrap();
        prop_assert_eq!(wc.arf_bit == 0, witt_decompose(&q).unwrap().is_neutral());
    }
}
