//! Property and oracle checks of every lemma at desk scale.
//!
//! Each check returns a [`CriterionOutcome`]; the table is ordered by
//! criterion id and contains no timings, so a fixed seed gives a
//! byte-identical report.

use arf_core::arf::{
    arf_diagram_check, arf_invariant, lemma1_class, parf, q_lambda, witt_decompose, wu_vector,
};
use arf_core::linalg::{self, Matrix};
use arf_core::sample::{random_lagrangian, random_nondegenerate_form};
use arf_core::tower::{as_member, as_member_at, class_eq, lemma0_descend, lemma0_forward};
use arf_core::{
    AsClassFF, BinElem, BinaryField, Poly2, QuadForm, RatFunc, TowerElem, TowerField,
};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 0x00A7_F00D;

/// One irreducible modulus for each degree 1..=8.
const MODULI: [u32; 8] = [0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011011];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Replace the GF(4) modulus by the reducible `x² + 1` in the field
    /// suite. Negative control: the suite must fail.
    pub corrupt_modulus: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            corrupt_modulus: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

struct Tally {
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn finish(self, id: &'static str, suite: &'static str, description: &'static str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            suite,
            description,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ id.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn field(n: u32) -> BinaryField {
    BinaryField::new(n, MODULI[n as usize - 1]).expect("table moduli are irreducible")
}

fn random_poly<R: Rng>(rng: &mut R, max_degree: u32) -> Poly2 {
    Poly2::from_u64(rng.random::<u64>() & ((1u64 << (max_degree + 1)) - 1))
}

fn random_nonzero_poly<R: Rng>(rng: &mut R, max_degree: u32) -> Poly2 {
    loop {
        let p = random_poly(rng, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_ratfunc<R: Rng>(rng: &mut R, num_degree: u32, den_degree: u32) -> RatFunc {
    RatFunc::new(random_poly(rng, num_degree), random_nonzero_poly(rng, den_degree))
        .expect("nonzero denominator")
}

/// Field axioms, Frobenius/square-root inverse pair and the structure of
/// `P(k)`, exhaustively for n = 1..=8.
pub fn gf2n_axioms(config: &SelftestConfig) -> CriterionOutcome {
    let mut t = Tally::new();
    for n in 1..=8u32 {
        let k = if config.corrupt_modulus && n == 2 {
            BinaryField::new_unchecked(2, 0b101).expect("degree and leading bit are valid")
        } else {
            field(n)
        };
        let mut image = 0u32;
        let mut kernel = Vec::new();
        for a in k.elements() {
            if a.0 != 0 {
                let inverse_ok = k.inv(a).map(|b| k.mul(a, b) == BinElem(1)).unwrap_or(false);
                t.check(inverse_ok, || format!("n={n}: {a} has no inverse"));
            }
            t.check(k.sqrt(k.frobenius(a)) == a, || format!("n={n}: sqrt(a^2) != a for a={a}"));
            let sol = k.as_solve(a);
            t.check(sol.is_some() == (k.trace(a) == 0), || {
                format!("n={n}: solvability of P(x)={a} disagrees with trace")
            });
            if let Some(x) = sol {
                t.check(k.artin_schreier(x) == a, || format!("n={n}: P({x}) != {a}"));
                image += 1;
            }
            if k.artin_schreier(a) == BinElem(0) {
                kernel.push(a);
            }
        }
        t.check(image == 1 << (n - 1), || format!("n={n}: |P(k)| = {image}"));
        t.check(kernel == [BinElem(0), BinElem(1)], || format!("n={n}: ker P = {kernel:?}"));
    }
    t.finish("F", "gf2n", "field axioms, perfectness, |P(k)| = 2^(n-1), ker P = {0,1}")
}

/// The symplectic Arf formula is invariant under random symplectic base
/// changes over GF(2), GF(4), GF(8), dims 2..8, 200 per configuration.
pub fn arf_basis_independence(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 1);
    let mut t = Tally::new();
    for n in 1..=3 {
        let k = field(n);
        for d in [2, 4, 6, 8] {
            for i in 0..200 {
                let q = random_nondegenerate_form(&k, d, &mut rng);
                let before = arf_invariant(&q);
                let moved = q.symplectic_basis().and_then(|s| {
                    let standard = q.base_change(s.matrix())?;
                    let m = standard.random_symplectic_map(rng.next_u64());
                    standard.base_change(&m)
                });
                let after = moved.and_then(|m| arf_invariant(&m));
                t.check(before.is_ok() && before == after, || {
                    format!("GF(2^{n}) dim {d} case {i}: {before:?} vs {after:?}")
                });
            }
        }
    }
    t.finish("1", "Théorème de Arf", "Arf class unchanged by 200 symplectic base changes per (field, dim)")
}

/// `parf(q_λ) = [λ]` for every λ in GF(2^n), n = 1..=4.
pub fn parf_surjectivity() -> CriterionOutcome {
    let mut t = Tally::new();
    for n in 1..=4 {
        let k = field(n);
        for lambda in k.elements() {
            let got = parf(&q_lambda(&k, lambda));
            t.check(got == Ok(k.cokernel_rep(lambda)), || {
                format!("GF(2^{n}) λ={lambda}: parf gave {got:?}")
            });
        }
    }
    t.finish("2", "Proposition", "surjectivity: parf(q_λ) = [λ], exhaustive for n <= 4")
}

/// Every alternating Gram matrix of size `d` over GF(2), as upper-triangular
/// bit patterns, keeping the nondegenerate ones.
fn gf2_nondegenerate_grams(d: usize) -> Vec<Matrix<BinElem>> {
    let k = field(1);
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|bits| {
            let mut g = Matrix::filled(d, d, BinElem(0));
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                let v = BinElem((bits >> idx) as u32 & 1);
                g.set(i, j, v);
                g.set(j, i, v);
            }
            g
        })
        .filter(|g| linalg::is_invertible(&k, g))
        .collect()
}

fn gf2_forms(d: usize) -> impl Iterator<Item = QuadForm<BinaryField>> {
    let k = field(1);
    gf2_nondegenerate_grams(d).into_iter().flat_map(move |g| {
        let k = k.clone();
        (0u32..1 << d).map(move |bits| {
            let diag = (0..d).map(|i| BinElem(bits >> i & 1)).collect();
            QuadForm::new(k.clone(), g.clone(), diag).expect("alternating gram")
        })
    })
}

/// Arf bit 0 exactly when exhaustive isotropic search splits the form
/// completely: all forms over GF(2) in dims 2 and 4, then 500 random forms
/// over GF(4)/GF(8) in dims 2..6.
pub fn parf_injectivity(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 3);
    let mut t = Tally::new();
    let check = |t: &mut Tally, q: &QuadForm<BinaryField>, label: &dyn Fn() -> String| {
        let arf = arf_invariant(q);
        let split = witt_decompose(q);
        let ok = match (&arf, &split) {
            (Ok(c), Ok(w)) => c.is_zero() == w.is_neutral(),
            _ => false,
        };
        t.check(ok, || format!("{}: arf {arf:?}, decomposition {split:?}", label()));
    };
    for d in [2, 4] {
        for (i, q) in gf2_forms(d).enumerate() {
            check(&mut t, &q, &|| format!("GF(2) dim {d} form #{i}"));
        }
    }
    for i in 0..500 {
        let n = if i % 2 == 0 { 2 } else { 3 };
        let d = 2 + 2 * (i / 2 % 3);
        let q = random_nondegenerate_form(&field(n), d, &mut rng);
        check(&mut t, &q, &|| format!("GF(2^{n}) dim {d} random form #{i}"));
    }
    t.finish("3", "Proposition", "injectivity: Arf bit 0 <=> neutral (full GF(2) enumeration + 500 random)")
}

/// `q(ω + l) = q(ω) + P(√q(l))` for every `l` of random Lagrangians.
pub fn lemma1_coset(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 4);
    let mut t = Tally::new();
    for n in 1..=3u32 {
        let k = field(n);
        for pair in 0..100 {
            let d = 2 * rng.random_range(1..=4usize);
            let q = random_nondegenerate_form(&k, d, &mut rng);
            let prepared = random_lagrangian(&q, &mut rng).and_then(|l| {
                let w = wu_vector(&q, &l)?;
                let class = lemma1_class(&q, &l, &w)?;
                Ok((l, w, class))
            });
            let Ok((l, w, class)) = prepared else {
                t.check(false, || format!("GF(2^{n}) pair {pair}: {:?}", prepared.err()));
                continue;
            };
            let q_omega = q.eval(w.vector()).expect("dimension");
            let half = d / 2;
            let size = 1u64 << (n as usize * half);
            debug_assert!(size <= 1 << 12);
            for code in 0..size {
                let coeffs: Vec<BinElem> = (0..half)
                    .map(|i| BinElem((code >> (n as usize * i)) as u32 & (k.order() - 1)))
                    .collect();
                let v = l.combination(&k, &coeffs);
                let lhs = q.eval(&linalg::vec_add(&k, w.vector(), &v)).expect("dimension");
                let rhs = k.add(q_omega, k.artin_schreier(k.sqrt(q.eval(&v).expect("dimension"))));
                t.check(lhs == rhs && k.cokernel_rep(lhs) == class, || {
                    format!("GF(2^{n}) pair {pair} l-code {code}: {lhs} != {rhs}")
                });
            }
        }
    }
    t.finish("4", "Lemme 1", "q(ω+l) = q(ω) + P(√q(l)) for all l in L, 100 (q, L) per field")
}

/// Descent witness identity, injectivity up the tower, and the class round
/// trip.
pub fn lemma0_descent(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 5);
    let mut t = Tally::new();
    for i in 0..200 {
        let level = rng.random_range(0..=3u32);
        let x = TowerElem::new(level, random_ratfunc(&mut rng, 8, 8));
        let d = lemma0_descend(&x);
        let y = TowerElem::base(d.y.clone());
        t.check(d.witness.artin_schreier().add(&y) == x, || {
            format!("element #{i}: w^2 + w + y != x for {x:?}")
        });
        let round_trip = lemma0_forward(&d.y, x.height())
            .map(|fwd| class_eq(&fwd, &AsClassFF::new(x.clone(), x.height())));
        t.check(round_trip == Ok(true), || format!("element #{i}: round trip {round_trip:?}"));
    }
    for i in 0..200 {
        let f = TowerElem::base(random_ratfunc(&mut rng, 8, 8));
        let at_base = as_member(&f).is_some();
        for m in 1..=3 {
            let up = as_member_at(&f, m).is_some();
            t.check(up == at_base, || {
                format!("f #{i} = {f:?}: member at level 0 = {at_base}, at level {m} = {up}")
            });
        }
    }
    t.finish("5", "Lemme 0", "descent identity w^2+w+y = x, injectivity at levels 1-3, class round trip")
}

/// Symplectic Arf class pushed to `K_m` equals the Wu-route class over `K_m`.
pub fn diagram_commutes(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 6);
    let mut t = Tally::new();
    let k = TowerField::base();
    for d in [2, 4] {
        for i in 0..100u32 {
            let m = 1 + i % 2;
            let q = random_nondegenerate_form(&k, d, &mut rng);
            let ok = arf_diagram_check(&q, m);
            t.check(ok == Ok(true), || format!("dim {d} form #{i} level {m}: {ok:?}"));
        }
    }
    t.finish("6", "Diagramme", "ι(Arf(q)) = Parf(q ⊗ K_m) for 100 dim-2 and 100 dim-4 forms over F2(t)")
}

/// `Arf(q₁ ⊕ q₂) = Arf(q₁) + Arf(q₂)` over GF(4) and F₂(t).
pub fn arf_homomorphism(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 7);
    let mut t = Tally::new();
    let k = field(2);
    for i in 0..200 {
        let q1 = random_nondegenerate_form(&k, 2 * rng.random_range(1..=3usize), &mut rng);
        let q2 = random_nondegenerate_form(&k, 2 * rng.random_range(1..=3usize), &mut rng);
        let sum = q1.orth_sum(&q2).and_then(|q| arf_invariant(&q));
        let parts = arf_invariant(&q1).and_then(|a| Ok(k.class_add(a, arf_invariant(&q2)?)));
        t.check(sum.is_ok() && sum == parts, || format!("GF(4) pair #{i}: {sum:?} vs {parts:?}"));
    }
    let kt = TowerField::base();
    for i in 0..200 {
        let q1 = random_nondegenerate_form(&kt, 2 * rng.random_range(1..=2usize), &mut rng);
        let q2 = random_nondegenerate_form(&kt, 2 * rng.random_range(1..=2usize), &mut rng);
        let ok = q1.orth_sum(&q2).and_then(|q| {
            let sum = arf_invariant(&q)?;
            let parts = arf_invariant(&q1)?.add(&arf_invariant(&q2)?);
            Ok(class_eq(&sum, &parts))
        });
        t.check(ok == Ok(true), || format!("F2(t) pair #{i}: {ok:?}"));
    }
    t.finish("7", "Proposition", "Arf(q1 ⊕ q2) = Arf(q1) + Arf(q2), 200 pairs over GF(4) and over F2(t)")
}

/// Zeros of a GF(2) form by direct bit evaluation, independent of
/// [`QuadForm::eval`].
fn gf2_zero_count(q: &QuadForm<BinaryField>) -> u64 {
    let d = q.dim();
    let diag: u64 = (0..d).map(|i| u64::from(q.diag()[i].0) << i).sum();
    let upper: Vec<u64> = (0..d)
        .map(|i| (i + 1..d).map(|j| u64::from(q.gram().get(i, j).0) << j).sum())
        .collect();
    (0u64..1 << d)
        .filter(|&x| {
            let mut parity = (x & diag).count_ones();
            for (i, row) in upper.iter().enumerate() {
                if x >> i & 1 == 1 {
                    parity += (x & row).count_ones();
                }
            }
            parity.is_multiple_of(2)
        })
        .count() as u64
}

/// Over GF(2) in dim 2n the number of zeros is `2^{2n−1} ± 2^{n−1}`, with the
/// sign given by the Arf invariant; all forms in dims 2, 4, 6.
pub fn zero_count(_seed: u64) -> CriterionOutcome {
    let mut t = Tally::new();
    for d in [2usize, 4, 6] {
        let n = d / 2;
        let big = 1u64 << (2 * n - 1);
        let small = 1u64 << (n - 1);
        for (i, q) in gf2_forms(d).enumerate() {
            let zeros = gf2_zero_count(&q);
            let arf = arf_invariant(&q);
            let expected = arf.clone().map(|c| if c.is_zero() { big + small } else { big - small });
            t.check(expected == Ok(zeros), || {
                format!("dim {d} form #{i}: {zeros} zeros, arf {arf:?}")
            });
        }
    }
    t.finish("8", "Zero count", "#zeros = 2^(2n-1) ± 2^(n-1) by Arf class, all GF(2) forms in dims 2, 4, 6")
}

/// `as_member` against enumeration of every `P/Q` with `deg P ≤ 4`,
/// `deg Q ≤ 2`, on inputs whose solutions (if any) must lie in that range.
pub fn as_member_completeness(seed: u64) -> CriterionOutcome {
    let mut rng = rng_for(seed, 9);
    let mut t = Tally::new();
    let candidates: Vec<RatFunc> = (0u64..32)
        .flat_map(|p| (1u64..8).map(move |q| (p, q)))
        .map(|(p, q)| RatFunc::new(Poly2::from_u64(p), Poly2::from_u64(q)).expect("nonzero"))
        .collect();
    for i in 0..500 {
        // deg U ≤ 8, deg V ≤ 4 forces any solution to have deg P ≤ 4, deg Q ≤ 2
        let x = if i % 2 == 0 {
            random_ratfunc(&mut rng, 8, 4)
        } else {
            let c = random_ratfunc(&mut rng, 4, 2);
            c.square().add(&c)
        };
        let brute = candidates.iter().any(|c| c.square().add(c) == x);
        let xe = TowerElem::base(x.clone());
        let found = as_member(&xe);
        let sound = found.as_ref().is_none_or(|c| c.artin_schreier() == xe);
        t.check(found.is_some() == brute && sound, || {
            format!("input #{i} {x:?}: as_member {found:?}, brute force {brute}")
        });
    }
    t.finish("9", "Lemme 0", "as_member agrees with brute-force enumeration on 500 inputs")
}

/// All checks, ordered by criterion id.
pub fn run_all(config: &SelftestConfig) -> Vec<CriterionOutcome> {
    vec![
        gf2n_axioms(config),
        arf_basis_independence(config.seed),
        parf_surjectivity(),
        parf_injectivity(config.seed),
        lemma1_coset(config.seed),
        lemma0_descent(config.seed),
        diagram_commutes(config.seed),
        arf_homomorphism(config.seed),
        zero_count(config.seed),
        as_member_completeness(config.seed),
    ]
}

/// Fixed-width pass/fail table.
pub fn render_table(rows: &[CriterionOutcome]) -> String {
    let mut out = String::new();
    for r in rows {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "[{status}] {:>2} {:<16} {:>8} cases {:>4} failures  {}\n",
            r.id, r.suite, r.cases, r.failures, r.description
        ));
        if let Some(f) = &r.first_failure {
            out.push_str(&format!("       first failure: {f}\n"));
        }
    }
    out
}
