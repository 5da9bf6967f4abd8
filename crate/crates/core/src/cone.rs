//! Quadric cones of types B and D with their commuting locally nilpotent
//! derivations, and the symbolic checks run against them.
//!
//! For `D_l` (`l >= 3`) the ring has variables `x_1..x_l, x_{-l}..x_{-1}` and
//! the relation is `f = x_{-1}x_1 + ... + x_{-l}x_l`. For `B_l` (`l >= 2`)
//! the variable `x_0` sits between the two halves and the relation is
//! `h = x_0^2 + x_{-1}x_1 + ... + x_{-l}x_l`. The derivations `D_j` are
//! indexed by `j = 2..l, (0,) -l..-2`:
//!
//! ```text
//! D_j(x_i)    = x_1 if i = j, else 0      (i != -1)
//! D_j(x_{-1}) = -x_{-j}                   (j != 0)
//! D_0(x_{-1}) = 2 x_0,  D_0(x_0) = -x_1
//! ```
//!
//! The sign of `D_0(x_0)` is the one for which `D_0(h) = 0` when
//! `D_0(x_{-1}) = 2x_0`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::derivation::{Derivation, Nilpotency};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{display_name, Polynomial, Ring};
use crate::root_system::Family;

/// Machine name of the variable with signed index `i`: `x3`, `x0`, `xm3`.
pub fn var_name(i: i64) -> String {
    if i < 0 {
        format!("xm{}", -i)
    } else {
        format!("x{i}")
    }
}

fn derivation_label(j: i64) -> String {
    if j < 0 {
        format!("Dm{}", -j)
    } else {
        format!("D{j}")
    }
}

/// `k[x]/(relation)` together with derivations of the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConePresentation {
    pub family: Option<Family>,
    pub ell: Option<usize>,
    pub ring: Ring,
    pub relation: Polynomial,
    pub labels: Vec<String>,
    pub derivations: Vec<Derivation>,
    pub invariant_generator: String,
}

impl ConePresentation {
    /// Transcendence degree of the quotient by a single nonzero relation.
    pub fn n(&self) -> usize {
        self.ring.arity() - 1
    }

    pub fn derivation(&self, label: &str) -> Option<&Derivation> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.derivations[i])
    }
}

/// Minimal rank for which the explicit derivations are defined.
pub fn min_rank(family: Family) -> Result<usize> {
    match family {
        Family::D => Ok(3),
        Family::B => Ok(2),
        f => Err(Error::NoExplicitDerivations(f.letter())),
    }
}

pub fn build_example(family: Family, ell: usize) -> Result<ConePresentation> {
    let min = min_rank(family)?;
    if ell < min {
        return Err(Error::ExampleRank {
            family: family.letter(),
            ell,
            min,
        });
    }
    let l = ell as i64;
    let with_zero = family == Family::B;

    let mut indices: Vec<i64> = (1..=l).collect();
    if with_zero {
        indices.push(0);
    }
    indices.extend((1..=l).rev().map(|i| -i));
    let ring = Ring::new(indices.iter().map(|&i| var_name(i)));
    let pos = |i: i64| indices.iter().position(|&k| k == i).expect("index in ring");
    let x = |i: i64| Polynomial::var(&ring, pos(i));

    let mut relation = Polynomial::zero(&ring);
    if with_zero {
        relation = &relation + &x(0).pow(2);
    }
    for i in 1..=l {
        relation = &relation + &(&x(-i) * &x(i));
    }

    let mut js: Vec<i64> = (2..=l).collect();
    if with_zero {
        js.push(0);
    }
    js.extend((2..=l).rev().map(|j| -j));

    let two = BigRational::from_integer(BigInt::from(2));
    let derivations = js
        .iter()
        .map(|&j| {
            let mut d = Derivation::zero(&ring);
            if j == 0 {
                d.set_image(pos(0), -&x(1))?;
                d.set_image(pos(-1), x(0).scale(&two))?;
            } else {
                d.set_image(pos(j), x(1))?;
                d.set_image(pos(-1), -&x(-j))?;
            }
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ConePresentation {
        family: Some(family),
        ell: Some(ell),
        ring,
        relation,
        labels: js.iter().map(|&j| derivation_label(j)).collect(),
        derivations,
        invariant_generator: var_name(1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The identity that failed, e.g. `D2(relation)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failing: Option<String>,
    /// Nonzero polynomial (or value) witnessing the failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            failing: None,
            witness: None,
            detail,
        }
    }

    fn fail(name: &str, failing: String, witness: String, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed: false,
            failing: Some(failing),
            witness: Some(witness),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub variables: usize,
    pub n: usize,
    pub derivations: usize,
    pub checks: Vec<Check>,
    /// Rank of the Gram matrix of the relation; rank >= 3 means the quadric
    /// is irreducible over an algebraically closed field.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relation_gram_rank: Option<usize>,
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "annihilates_relation",
    "pairwise_commute",
    "locally_nilpotent",
    "independent_at_point",
    "invariant_in_kernel",
    "flow_invariance",
];

/// Rank of the Gram matrix of a quadratic form, `None` if not a form.
pub fn quadric_rank(p: &Polynomial) -> Option<usize> {
    p.gram_matrix().map(|g| linalg::rank(&g))
}

/// A quadratic form of rank at least 3 does not split into linear factors.
pub fn quadric_irreducible(p: &Polynomial) -> Option<bool> {
    quadric_rank(p).map(|r| r >= 3)
}

pub fn verify_presentation(cp: &ConePresentation) -> VerificationReport {
    let checks = vec![
        check_annihilates(cp),
        check_commute(cp),
        check_nilpotent(cp),
        check_independent(cp),
        check_kernel(cp),
        check_flow(cp),
    ];
    let all_passed = checks.iter().all(|c| c.passed);
    VerificationReport {
        variables: cp.ring.arity(),
        n: cp.n(),
        derivations: cp.derivations.len(),
        checks,
        relation_gram_rank: quadric_rank(&cp.relation),
        all_passed,
    }
}

fn check_annihilates(cp: &ConePresentation) -> Check {
    const NAME: &str = "annihilates_relation";
    for (label, d) in cp.labels.iter().zip(&cp.derivations) {
        let w = match d.apply(&cp.relation) {
            Ok(w) => w,
            Err(e) => return Check::fail(NAME, format!("{label}(relation)"), e.to_string(), String::new()),
        };
        if !w.is_zero() {
            return Check::fail(
                NAME,
                format!("{label}(relation) = 0"),
                w.to_string(),
                format!("{label} does not annihilate {}", cp.relation),
            );
        }
    }
    Check::pass(
        NAME,
        format!("{} derivations annihilate {}", cp.derivations.len(), cp.relation),
    )
}

fn check_commute(cp: &ConePresentation) -> Check {
    const NAME: &str = "pairwise_commute";
    let k = cp.derivations.len();
    for a in 0..k {
        for b in a + 1..k {
            let c = match cp.derivations[a].commutator(&cp.derivations[b]) {
                Ok(c) => c,
                Err(e) => {
                    return Check::fail(
                        NAME,
                        format!("[{},{}]", cp.labels[a], cp.labels[b]),
                        e.to_string(),
                        String::new(),
                    )
                }
            };
            if let Some(i) = c.images().iter().position(|p| !p.is_zero()) {
                let v = display_name(&cp.ring.names()[i]);
                return Check::fail(
                    NAME,
                    format!("[{},{}]({v}) = 0", cp.labels[a], cp.labels[b]),
                    c.image(i).to_string(),
                    format!("{} and {} do not commute", cp.labels[a], cp.labels[b]),
                );
            }
        }
    }
    Check::pass(NAME, format!("{} commutators vanish", k * k.saturating_sub(1) / 2))
}

fn check_nilpotent(cp: &ConePresentation) -> Check {
    const NAME: &str = "locally_nilpotent";
    let bound = cp.ring.arity() as u32;
    let mut max_index = 0;
    for (label, d) in cp.labels.iter().zip(&cp.derivations) {
        match d.nilpotency(bound) {
            Nilpotency::Nilpotent { index } => max_index = max_index.max(index),
            Nilpotency::Unverified { .. } => {
                let (i, survivor) = (0..cp.ring.arity())
                    .map(|i| (i, d.apply_n(&Polynomial::var(&cp.ring, i), bound).expect("same ring")))
                    .find(|(_, p)| !p.is_zero())
                    .expect("some variable survives");
                let v = display_name(&cp.ring.names()[i]);
                return Check::fail(
                    NAME,
                    format!("{label}^{bound}({v}) = 0"),
                    survivor.to_string(),
                    format!("{label} not nilpotent on generators within {bound} steps"),
                );
            }
        }
    }
    Check::pass(NAME, format!("nilpotency index <= {max_index}"))
}

/// The point with the invariant generator set to 1 and every other
/// coordinate 0.
fn base_point(cp: &ConePresentation) -> Option<Vec<BigRational>> {
    let i = cp.ring.index_of(&cp.invariant_generator)?;
    let mut p = vec![BigRational::zero(); cp.ring.arity()];
    p[i] = BigRational::one();
    Some(p)
}

fn check_independent(cp: &ConePresentation) -> Check {
    const NAME: &str = "independent_at_point";
    let expected = cp.n().saturating_sub(1);
    let Some(point) = base_point(cp) else {
        return Check::fail(
            NAME,
            "base point".into(),
            cp.invariant_generator.clone(),
            "unknown invariant generator".into(),
        );
    };
    let on_cone = cp.relation.eval(&point).expect("arity");
    if !on_cone.is_zero() {
        return Check::fail(
            NAME,
            "relation(e) = 0".into(),
            on_cone.to_string(),
            "base point is not on the cone".into(),
        );
    }
    let rows: Vec<Vec<BigRational>> = cp
        .derivations
        .iter()
        .map(|d| d.images().iter().map(|p| p.eval(&point).expect("arity")).collect())
        .collect();
    let rank = linalg::rank(&rows);
    if rank != expected || cp.derivations.len() != expected {
        return Check::fail(
            NAME,
            format!("rank = n-1 = {expected}"),
            format!("rank {rank} with {} derivations", cp.derivations.len()),
            "derivations not independent at the base point".into(),
        );
    }
    Check::pass(
        NAME,
        format!("rank {rank} = n-1 at e = {}", display_name(&cp.invariant_generator)),
    )
}

fn check_kernel(cp: &ConePresentation) -> Check {
    const NAME: &str = "invariant_in_kernel";
    let c = match Polynomial::var_named(&cp.ring, &cp.invariant_generator) {
        Ok(c) => c,
        Err(e) => return Check::fail(NAME, "invariant generator".into(), e.to_string(), String::new()),
    };
    let shown = display_name(&cp.invariant_generator);
    for (label, d) in cp.labels.iter().zip(&cp.derivations) {
        let w = d.apply(&c).expect("same ring");
        if !w.is_zero() {
            return Check::fail(
                NAME,
                format!("{label}({shown}) = 0"),
                w.to_string(),
                format!("{shown} is not a common constant"),
            );
        }
    }
    Check::pass(NAME, format!("k[{shown}] lies in the common kernel"))
}

fn check_flow(cp: &ConePresentation) -> Check {
    const NAME: &str = "flow_invariance";
    let ext = cp.ring.extended(["t"]);
    let t = cp.ring.arity();
    let lifted = cp.relation.embed(&ext).expect("prefix ring");
    for (label, d) in cp.labels.iter().zip(&cp.derivations) {
        for i in 0..cp.ring.arity() {
            let cube = d.apply_n(&Polynomial::var(&cp.ring, i), 3).expect("same ring");
            if !cube.is_zero() {
                let v = display_name(&cp.ring.names()[i]);
                return Check::fail(
                    NAME,
                    format!("{label}^3({v}) = 0"),
                    cube.to_string(),
                    "quadratic truncation of exp(tD) is not exact".into(),
                );
            }
        }
        let flow = d.exp_flow(&ext, t, 2).expect("same ring");
        let moved = cp.relation.substitute(&flow).expect("arity");
        let diff = &moved - &lifted;
        if !diff.is_zero() {
            return Check::fail(
                NAME,
                format!("exp(t {label})(relation) = relation"),
                diff.to_string(),
                format!("relation not invariant under the flow of {label}"),
            );
        }
    }
    Check::pass(NAME, "relation invariant under exp(t D_j) for every j".into())
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "variables {}, n = {}, derivations {}",
            self.variables, self.n, self.derivations
        )?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {:<22} {}", c.name, c.detail)?;
            if let (Some(what), Some(w)) = (&c.failing, &c.witness) {
                writeln!(f, "         failing {what}; witness {w}")?;
            }
        }
        if let Some(r) = self.relation_gram_rank {
            writeln!(f, "  relation Gram rank {r}")?;
        }
        write!(f, "all checks {}", if self.all_passed { "passed" } else { "FAILED" })
    }
}

impl fmt::Display for ConePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.ring.names().iter().map(|n| display_name(n)).collect();
        if let (Some(fam), Some(l)) = (self.family, self.ell) {
            writeln!(f, "type {fam}{l}, first fundamental weight")?;
        }
        writeln!(f, "ring k[{}]", vars.join(", "))?;
        writeln!(f, "relation {}", self.relation)?;
        writeln!(f, "invariant {}", display_name(&self.invariant_generator))?;
        for (label, d) in self.labels.iter().zip(&self.derivations) {
            let parts: Vec<String> = d
                .images()
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| format!("{} -> {p}", vars[i]))
                .collect();
            writeln!(f, "{label}: {}", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Wire format of a single term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationRecord {
    pub label: String,
    pub images: Vec<Vec<TermRecord>>,
}

pub const PRESENTATION_FORMAT: &str = "hwcone-presentation/1";

/// Machine-readable presentation export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
    pub variables: Vec<String>,
    pub relation: Vec<TermRecord>,
    pub invariant_generator: String,
    pub derivations: Vec<DerivationRecord>,
}

fn terms_of(p: &Polynomial) -> Vec<TermRecord> {
    p.to_term_list()
        .into_iter()
        .map(|(exp, num, den)| TermRecord {
            exp,
            num: num.to_string(),
            den: den.to_string(),
        })
        .collect()
}

fn poly_of(ring: &Ring, terms: &[TermRecord]) -> Result<Polynomial> {
    let parsed = terms
        .iter()
        .map(|t| {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Presentation(format!("bad numerator `{}`", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Presentation(format!("bad denominator `{}`", t.den)))?;
            if den.is_zero() {
                return Err(Error::Presentation("zero denominator".into()));
            }
            Ok((t.exp.clone(), BigRational::new(num, den)))
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms(ring, parsed)
}

impl ConePresentation {
    pub fn to_record(&self) -> PresentationRecord {
        PresentationRecord {
            format: PRESENTATION_FORMAT.to_string(),
            family: self.family.map(|f| f.letter().to_string()),
            ell: self.ell,
            variables: self.ring.names().to_vec(),
            relation: terms_of(&self.relation),
            invariant_generator: self.invariant_generator.clone(),
            derivations: self
                .labels
                .iter()
                .zip(&self.derivations)
                .map(|(label, d)| DerivationRecord {
                    label: label.clone(),
                    images: d.images().iter().map(terms_of).collect(),
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &PresentationRecord) -> Result<Self> {
        if rec.format != PRESENTATION_FORMAT {
            return Err(Error::Presentation(format!("unsupported format `{}`", rec.format)));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = rec.variables.iter().find(|v| !seen.insert(*v)) {
            return Err(Error::Presentation(format!("duplicate variable `{dup}`")));
        }
        if rec.variables.len() < 2 {
            return Err(Error::Presentation("at least two variables required".into()));
        }
        let ring = Ring::new(rec.variables.iter().cloned());
        if ring.index_of(&rec.invariant_generator).is_none() {
            return Err(Error::Presentation(format!(
                "invariant generator `{}` is not a variable",
                rec.invariant_generator
            )));
        }
        let relation = poly_of(&ring, &rec.relation)?;
        if relation.is_zero() {
            return Err(Error::Presentation("zero relation".into()));
        }
        let derivations = rec
            .derivations
            .iter()
            .map(|d| {
                let images = d.images.iter().map(|t| poly_of(&ring, t)).collect::<Result<Vec<_>>>()?;
                Derivation::new(&ring, images)
            })
            .collect::<Result<Vec<_>>>()?;
        let family = match rec.family.as_deref() {
            None => None,
            Some(s) => Some(
                s.chars()
                    .next()
                    .and_then(Family::from_letter)
                    .ok_or_else(|| Error::Presentation(format!("unknown family `{s}`")))?,
            ),
        };
        Ok(ConePresentation {
            family,
            ell: rec.ell,
            ring,
            relation,
            labels: rec.derivations.iter().map(|d| d.label.clone()).collect(),
            derivations,
            invariant_generator: rec.invariant_generator.clone(),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_record())?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: PresentationRecord = serde_json::from_str(s)?;
        ConePresentation::from_record(&rec)
    }
}
