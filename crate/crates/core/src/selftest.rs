//! Randomized and exhaustive invariant suites, shared by the `selftest`
//! command and the acceptance tests. Every suite is exact; a "case" is one
//! independent identity checked.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classification::{self, condition_c, condition_d, simple_types_up_to, stabilizer_index_set};
use crate::cone::{build_example, verify_presentation, ConePresentation};
use crate::derivation::{Derivation, Nilpotency};
use crate::poly::{Polynomial, Ring};
use crate::root_system::{Family, RootSystem, SimpleType, Weight};

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Seed from `SELFTEST_SEED`, falling back to [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("SELFTEST_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult {
            name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Random polynomial with at most `terms` terms of degree at most `max_deg`.
pub fn random_polynomial<R: Rng>(rng: &mut R, ring: &Ring, terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.arity();
    let mut p = Polynomial::zero(ring);
    for _ in 0..rng.gen_range(0..=terms) {
        let mut e = vec![0u32; n];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        p = &p + &Polynomial::monomial(ring, e, small_rational(rng));
    }
    p
}

pub fn random_derivation<R: Rng>(rng: &mut R, ring: &Ring, terms: usize, max_deg: u32) -> Derivation {
    let images = (0..ring.arity())
        .map(|_| random_polynomial(rng, ring, terms, max_deg))
        .collect();
    Derivation::new(ring, images).expect("images built in ring")
}

/// Random triangular derivation: `D(x_i)` depends only on `x_0..x_{i-1}`,
/// hence locally nilpotent.
pub fn random_triangular<R: Rng>(rng: &mut R, ring: &Ring, max_deg: u32) -> Derivation {
    let n = ring.arity();
    let mut d = Derivation::zero(ring);
    for i in 0..n {
        let mut img = Polynomial::constant(ring, small_rational(rng));
        if i > 0 {
            for _ in 0..rng.gen_range(0..=2) {
                let mut e = vec![0u32; n];
                for _ in 0..rng.gen_range(1..=max_deg) {
                    e[rng.gen_range(0..i)] += 1;
                }
                img = &img + &Polynomial::monomial(ring, e, small_rational(rng));
            }
        }
        d.set_image(i, img).expect("same ring");
    }
    d
}

fn variables(n: usize) -> Ring {
    Ring::new((1..=n).map(|i| format!("x{i}")))
}

pub fn leibniz(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x11);
    let mut tally = Tally::default();
    for _ in 0..cases {
        let ring = variables(rng.gen_range(1..=4));
        let p = random_polynomial(&mut rng, &ring, 4, 3);
        let q = random_polynomial(&mut rng, &ring, 4, 3);
        let d = random_derivation(&mut rng, &ring, 3, 2);
        let lhs = d.apply(&(&p * &q)).expect("ring");
        let rhs = &(&d.apply(&p).expect("ring") * &q) + &(&p * &d.apply(&q).expect("ring"));
        tally.record(lhs == rhs, || format!("D(pq) != D(p)q + pD(q) for p = {p}, q = {q}"));
    }
    tally.finish("leibniz")
}

pub fn commutator_antisymmetry(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x22);
    let mut tally = Tally::default();
    for _ in 0..cases {
        let ring = variables(rng.gen_range(1..=4));
        let a = random_derivation(&mut rng, &ring, 3, 1);
        let b = random_derivation(&mut rng, &ring, 3, 1);
        let ab = a.commutator(&b).expect("ring");
        let ba = b.commutator(&a).expect("ring");
        let sum = ab.checked_add(&ba).expect("ring");
        tally.record(sum.is_zero(), || "[a,b] + [b,a] != 0".to_string());
    }
    tally.finish("commutator_antisymmetry")
}

/// `exp(tD) o exp(sD) = exp((t+s)D)` on each variable, for random triangular
/// derivations, in the ring extended by `s, t`.
pub fn exp_flow_composition(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x33);
    let mut tally = Tally::default();
    for _ in 0..cases {
        let n = rng.gen_range(1..=3);
        let ring = variables(n);
        let max_deg = if n <= 2 { 2 } else { rng.gen_range(1..=2) };
        let d = random_triangular(&mut rng, &ring, max_deg);
        let Nilpotency::Nilpotent { index } = d.nilpotency(64) else {
            tally.record(false, || "triangular derivation not nilpotent".into());
            continue;
        };
        let order = index.saturating_sub(1);
        let ext = ring.extended(["s", "t"]);
        let (s_idx, t_idx) = (n, n + 1);
        let flow_s = d.exp_flow(&ext, s_idx, order).expect("ring");
        let flow_t = d.exp_flow(&ext, t_idx, order).expect("ring");
        // exp(tD) acts on x and fixes s, t
        let mut subst_t = flow_t.clone();
        subst_t.push(Polynomial::var(&ext, s_idx));
        subst_t.push(Polynomial::var(&ext, t_idx));
        // t -> s + t
        let mut shift: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ext, i)).collect();
        shift.push(Polynomial::var(&ext, s_idx));
        shift.push(&Polynomial::var(&ext, s_idx) + &Polynomial::var(&ext, t_idx));
        let mut ok = true;
        for i in 0..n {
            let composed = flow_s[i].substitute(&subst_t).expect("arity");
            let joint = flow_t[i].substitute(&shift).expect("arity");
            ok &= composed == joint;
        }
        tally.record(ok, || {
            format!(
                "flow composition fails for images {:?}",
                d.images().iter().map(ToString::to_string).collect::<Vec<_>>()
            )
        });
    }
    tally.finish("exp_flow_composition")
}

fn example_pool() -> Vec<ConePresentation> {
    let mut v = Vec::new();
    for l in 3..=5 {
        v.push(build_example(Family::D, l).expect("D example"));
    }
    for l in 2..=4 {
        v.push(build_example(Family::B, l).expect("B example"));
    }
    v
}

/// The relation is fixed by `exp(tD)` for random integer combinations `D`
/// of the commuting derivations of an example.
pub fn flow_invariance(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x44);
    let pool = example_pool();
    let mut tally = Tally::default();
    for _ in 0..cases {
        let cp = &pool[rng.gen_range(0..pool.len())];
        let mut d = Derivation::zero(&cp.ring);
        for dj in &cp.derivations {
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(-3..=3)));
            d = d.checked_add(&dj.scale(&c)).expect("ring");
        }
        let bound = cp.ring.arity() as u32 + 1;
        let Nilpotency::Nilpotent { index } = d.nilpotency(bound) else {
            tally.record(false, || "combination of commuting nilpotents not nilpotent".into());
            continue;
        };
        let ext = cp.ring.extended(["t"]);
        let flow = d
            .exp_flow(&ext, cp.ring.arity(), index.saturating_sub(1))
            .expect("ring");
        let moved = cp.relation.substitute(&flow).expect("arity");
        let ok = moved == cp.relation.embed(&ext).expect("prefix");
        tally.record(ok, || format!("relation {} moved by a flow", cp.relation));
    }
    tally.finish("flow_invariance")
}

/// Flip the sign of every nonzero image of every derivation in turn; each
/// mutant must fail verification with a nonzero witness.
pub fn mutation_detection() -> SuiteResult {
    let mut tally = Tally::default();
    let mut pool: Vec<ConePresentation> = (3..=6).map(|l| build_example(Family::D, l).expect("D")).collect();
    pool.extend((2..=5).map(|l| build_example(Family::B, l).expect("B")));
    for cp in &pool {
        for (k, d) in cp.derivations.iter().enumerate() {
            for i in 0..cp.ring.arity() {
                if d.image(i).is_zero() {
                    continue;
                }
                let mut mutant = cp.clone();
                let flipped = -d.image(i);
                mutant.derivations[k].set_image(i, flipped).expect("ring");
                let rep = verify_presentation(&mutant);
                let witnessed = rep
                    .checks
                    .iter()
                    .any(|c| !c.passed && c.witness.as_deref().is_some_and(|w| w != "0" && !w.is_empty()));
                tally.record(!rep.all_passed && witnessed, || {
                    format!("sign flip of {}({}) undetected", cp.labels[k], cp.ring.names()[i])
                });
            }
        }
    }
    tally.finish("mutation_detection")
}

/// Random nonzero dominant weight with labels in `0..=max`.
pub fn random_dominant<R: Rng>(rng: &mut R, rank: usize, max: u32) -> Weight {
    loop {
        let density: f64 = rng.gen_range(0.1..0.9);
        let labels: Vec<u32> = (0..rank)
            .map(|_| {
                if rng.gen_bool(density) {
                    rng.gen_range(1..=max)
                } else {
                    0
                }
            })
            .collect();
        let w = Weight::new(labels);
        if !w.is_zero() {
            return w;
        }
    }
}

/// Condition (C) from roots against condition (D) from the table, over every
/// simple type up to `max_rank`: all fundamental weights plus
/// `random_per_type` random dominant weights.
pub fn condition_equivalence(seed: u64, max_rank: usize, random_per_type: usize) -> SuiteResult {
    let types = simple_types_up_to(max_rank);
    let results: Vec<Tally> = types
        .par_iter()
        .enumerate()
        .map(|(k, &t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x55 + k as u64));
            let rs = RootSystem::simple(t);
            let l = t.rank();
            let mut weights: Vec<Weight> = (0..l).map(|i| Weight::fundamental(l, i)).collect();
            weights.extend((0..random_per_type).map(|_| random_dominant(&mut rng, l, 3)));
            let mut tally = Tally::default();
            for w in &weights {
                let pd = stabilizer_index_set(&rs, w).expect("nonzero weight");
                let c = condition_c(&rs, &pd);
                let d = condition_d(rs.cartan_type(), w).expect("arity");
                tally.record(c == d, || format!("{t} {w}: (C) = {c}, (D) = {d}"));
            }
            tally
        })
        .collect();
    let mut total = Tally::default();
    for r in results {
        total.cases += r.cases;
        total.failures += r.failures;
        if total.first_failure.is_none() {
            total.first_failure = r.first_failure;
        }
    }
    total.finish("condition_c_equals_d")
}

/// Root counts, dual-representation symmetry and the root-count form of
/// `dim G = dim L_I + 2 dim U_I^-`.
pub fn root_data(max_rank: usize) -> SuiteResult {
    let mut tally = Tally::default();
    for t in simple_types_up_to(max_rank) {
        let rs = RootSystem::simple(t);
        let l = t.rank();
        tally.record(rs.positive_roots().len() == t.positive_root_count(), || {
            format!("{t}: {} positive roots", rs.positive_roots().len())
        });
        let rho = Weight::rho(l);
        tally.record(
            rs.positive_roots()
                .iter()
                .all(|a| rs.pairing(&rho, a).is_ok_and(|p| p >= 1)),
            || format!("{t}: <rho, a^vee> < 1"),
        );
        for i in 0..l {
            let pd = stabilizer_index_set(&rs, &Weight::fundamental(l, i)).expect("nonzero");
            let all = 2 * rs.positive_roots().len();
            let levi = 2 * pd.phi_i_positive.len();
            tally.record(all == levi + 2 * pd.u_minus_dim, || {
                format!("{t} node {}: root count split", i + 1)
            });
        }
        if t.family() == Family::A {
            let first = rs.irrep_dimension(&Weight::fundamental(l, 0)).expect("arity");
            let last = rs.irrep_dimension(&Weight::fundamental(l, l - 1)).expect("arity");
            tally.record(first == last, || format!("{t}: dual dimensions differ"));
        }
    }
    tally.finish("root_data")
}

/// For `D_l` and `B_l` with the first fundamental weight: dimension, cone
/// dimension, quadric count, and agreement of the derivation count with the
/// classification.
pub fn classical_examples(max_rank: usize) -> SuiteResult {
    let mut tally = Tally::default();
    for (family, lo) in [(Family::D, 3usize), (Family::B, 2)] {
        for l in lo..=max_rank {
            let t = SimpleType::new(family, l).expect("rank");
            let rep = classification::classify(&t.into(), &Weight::fundamental(l, 0)).expect("classify");
            let (dim, n) = match family {
                Family::D => (2 * l, 2 * l - 1),
                _ => (2 * l + 1, 2 * l),
            };
            tally.record(rep.dim_e == BigUint::from(dim) && rep.n == n, || {
                format!("{t}: dimE = {}, n = {}", rep.dim_e, rep.n)
            });
            tally.record(rep.quadric_count == BigUint::from(1u32), || {
                format!("{t}: {} quadrics", rep.quadric_count)
            });
            tally.record(rep.negative_answer, || format!("{t}: not a negative answer"));
            let cp = build_example(family, l).expect("example");
            let ver = verify_presentation(&cp);
            tally.record(ver.all_passed, || format!("{t}: verification failed\n{ver}"));
            tally.record(cp.derivations.len() + 1 == rep.n && cp.n() == rep.n, || {
                format!("{t}: {} derivations for n = {}", cp.derivations.len(), rep.n)
            });
            tally.record(ver.relation_gram_rank.is_some_and(|r| r >= 3), || {
                format!("{t}: relation reducible")
            });
        }
    }
    tally.finish("classical_examples")
}

/// Nonsingular cones are never negative answers, and E8, F4, G2 admit no
/// node.
pub fn exclusion_sweep(max_rank: usize) -> SuiteResult {
    let mut tally = Tally::default();
    match classification::enumerate_capped(max_rank, max_rank.max(1)) {
        Ok(reports) => {
            for r in &reports {
                if matches!(r.cartan_type.as_str(), "E8" | "F4" | "G2") {
                    tally.record(!r.condition_d, || format!("{} {:?} admitted", r.cartan_type, r.labels));
                }
                if r.dim_e == BigUint::from(r.n) {
                    tally.record(!r.negative_answer, || {
                        format!("{} {:?} nonsingular but negative", r.cartan_type, r.labels)
                    });
                }
                if r.negative_answer {
                    tally.record(r.quadric_count >= BigUint::from(1u32), || {
                        format!("{} {:?} has no quadric", r.cartan_type, r.labels)
                    });
                }
            }
        }
        Err(e) => tally.record(false, || e.to_string()),
    }
    tally.finish("exclusion_sweep")
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

pub const PROPERTY_CASES: usize = 1000;

pub fn run_all(seed: u64) -> SelftestReport {
    let cap = classification::DEFAULT_RANK_CAP;
    let suites = vec![
        root_data(cap),
        condition_equivalence(seed, cap, 100),
        classical_examples(cap),
        exclusion_sweep(cap),
        leibniz(seed, PROPERTY_CASES),
        commutator_antisymmetry(seed, PROPERTY_CASES),
        exp_flow_composition(seed, PROPERTY_CASES),
        flow_invariance(seed, PROPERTY_CASES),
        mutation_detection(),
    ];
    let passed = suites.iter().all(SuiteResult::passed);
    SelftestReport { seed, suites, passed }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for s in &self.suites {
            let mark = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "[{mark}] {:<24} {:>6} cases, {} failures",
                s.name, s.cases, s.failures
            )?;
            if let Some(msg) = &s.first_failure {
                writeln!(f, "       first failure: {msg}")?;
            }
        }
        write!(f, "selftest {}", if self.passed { "passed" } else { "FAILED" })
    }
}
