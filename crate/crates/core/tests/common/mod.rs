//! Test-only oracles, independent of the library's root generation and
//! dimension formula.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap};

use hwcone::{Family, RootSystem, SimpleType, Weight};
use num_rational::Rational64;
use num_traits::Zero;

/// Euclidean realisation of a simple type: simple roots and the full root
/// set, in doubled coordinates so that half-integers stay integral.
pub struct Euclidean {
    pub simple: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `+-e_i +- e_j` for `i < j` (doubled).
fn pm_pairs(dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; dim];
                v[i] = 2 * si;
                v[j] = 2 * sj;
                out.push(v);
            }
        }
    }
    out
}

fn e8() -> Euclidean {
    let d = 8;
    let e = |i: usize| unit(d, i - 1, 2);
    let a1 = vec![1, -1, -1, -1, -1, -1, -1, 1];
    let mut simple = vec![a1, add(&e(1), &e(2))];
    for i in 1..=6 {
        simple.push(sub(&e(i + 1), &e(i)));
    }
    let mut roots = pm_pairs(d);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    Euclidean { simple, roots }
}

pub fn euclidean(t: SimpleType) -> Euclidean {
    let l = t.rank();
    match t.family() {
        Family::A => {
            let d = l + 1;
            let e = |i: usize| unit(d, i, 2);
            let simple = (0..l).map(|i| sub(&e(i), &e(i + 1))).collect();
            let mut roots = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.push(sub(&e(i), &e(j)));
                    }
                }
            }
            Euclidean { simple, roots }
        }
        Family::B | Family::C | Family::D => {
            let e = |i: usize| unit(l, i, 2);
            let mut simple: Vec<Vec<i64>> = (0..l - 1).map(|i| sub(&e(i), &e(i + 1))).collect();
            let mut roots = pm_pairs(l);
            match t.family() {
                Family::B => {
                    simple.push(e(l - 1));
                    for i in 0..l {
                        roots.push(e(i));
                        roots.push(neg(&e(i)));
                    }
                }
                Family::C => {
                    simple.push(unit(l, l - 1, 4));
                    for i in 0..l {
                        roots.push(unit(l, i, 4));
                        roots.push(unit(l, i, -4));
                    }
                }
                _ => simple.push(add(&e(l - 2), &e(l - 1))),
            }
            Euclidean { simple, roots }
        }
        Family::E => {
            let full = e8();
            if l == 8 {
                return full;
            }
            // E6, E7: roots of E8 supported on the first l simple roots
            let simple = full.simple[..l].to_vec();
            let roots = full
                .roots
                .iter()
                .filter(|r| {
                    let c = coordinates(&full.simple, r).expect("E8 root");
                    c[l..].iter().all(|&x| x == 0)
                })
                .cloned()
                .collect();
            Euclidean { simple, roots }
        }
        Family::F => {
            let e = |i: usize| unit(4, i - 1, 2);
            let simple = vec![sub(&e(2), &e(3)), sub(&e(3), &e(4)), e(4), vec![1, -1, -1, -1]];
            let mut roots = pm_pairs(4);
            for i in 1..=4 {
                roots.push(e(i));
                roots.push(neg(&e(i)));
            }
            for mask in 0u32..16 {
                roots.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            Euclidean { simple, roots }
        }
        Family::G => {
            let e = |i: usize| unit(3, i - 1, 2);
            let simple = vec![
                sub(&e(1), &e(2)),
                add(&add(&neg(&e(1)), &neg(&e(1))), &add(&e(2), &e(3))),
            ];
            let mut roots = Vec::new();
            for i in 1..=3 {
                for j in 1..=3 {
                    if i == j {
                        continue;
                    }
                    roots.push(sub(&e(i), &e(j)));
                    let k = 6 - i - j;
                    // 2e_i - e_j - e_k and its negative
                    let v = sub(&sub(&add(&e(i), &e(i)), &e(j)), &e(k));
                    if j < k {
                        roots.push(v.clone());
                        roots.push(neg(&v));
                    }
                }
            }
            Euclidean { simple, roots }
        }
    }
}

/// Coordinates of `v` in the basis `simple`, via the Gram system; `None`
/// if they are not integral.
pub fn coordinates(simple: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = simple.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational64> = (0..n)
                .map(|j| Rational64::from_integer(dot(&simple[i], &simple[j])))
                .collect();
            row.push(Rational64::from_integer(dot(&simple[i], v)));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col];
        for c in col..=n {
            m[col][c] /= pivot;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=n {
                    let delta = f * m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.iter()
        .map(|row| row[n].is_integer().then(|| row[n].to_integer()))
        .collect()
}

/// Positive roots of the Euclidean realisation in simple-root coordinates.
pub fn oracle_positive_roots(t: SimpleType) -> BTreeSet<Vec<i64>> {
    let eu = euclidean(t);
    eu.roots
        .iter()
        .map(|r| coordinates(&eu.simple, r).expect("integral coordinates"))
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect()
}

/// Cartan matrix `2 (a_i, a_j) / (a_i, a_i)` from the Euclidean simple roots.
pub fn oracle_cartan(t: SimpleType) -> Vec<Vec<i64>> {
    let eu = euclidean(t);
    let s = &eu.simple;
    (0..s.len())
        .map(|i| {
            (0..s.len())
                .map(|j| 2 * dot(&s[i], &s[j]) / dot(&s[i], &s[i]))
                .collect()
        })
        .collect()
}

/// Weight multiplicities by Freudenthal's recursion, keyed by `beta` where
/// the weight is `lambda - beta`. Uses only the positive roots and the
/// bilinear form, never the dimension formula.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> HashMap<Vec<i64>, u64> {
    let r = rs.rank();
    let simple: Vec<hwcone::Root> = (0..r).map(|i| hwcone::Root::simple(r, i)).collect();
    let half_len: Vec<i64> = simple.iter().map(|a| rs.form(a, a) / 2).collect();
    let form =
        |a: &[i64], b: &[i64]| -> i64 { rs.form(&hwcone::Root::new(a.to_vec()), &hwcone::Root::new(b.to_vec())) };
    // (lambda, beta) for beta in the root lattice
    let lam = |beta: &[i64]| -> i64 { (0..r).map(|j| lambda.labels()[j] as i64 * beta[j] * half_len[j]).sum() };
    let lam_rho = |beta: &[i64]| -> i64 {
        (0..r)
            .map(|j| (lambda.labels()[j] as i64 + 1) * beta[j] * half_len[j])
            .sum()
    };
    let positive: Vec<Vec<i64>> = rs.positive_roots().iter().map(|a| a.coords().to_vec()).collect();

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(vec![0; r], 1);
    let mut layer: Vec<Vec<i64>> = vec![vec![0; r]];
    loop {
        let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
        for b in &layer {
            for i in 0..r {
                let mut c = b.clone();
                c[i] += 1;
                candidates.insert(c);
            }
        }
        let mut next = Vec::new();
        for beta in candidates {
            let denom = 2 * lam_rho(&beta) - form(&beta, &beta);
            if denom == 0 {
                continue;
            }
            let mut num: i128 = 0;
            for alpha in &positive {
                let mut k = 1;
                loop {
                    let shifted: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&shifted) {
                        // (lambda - shifted, alpha)
                        let ip = lam(alpha) - form(&shifted, alpha);
                        num += m as i128 * ip as i128;
                    }
                    k += 1;
                }
            }
            num *= 2;
            assert_eq!(num % denom as i128, 0, "non-integral multiplicity");
            let m = num / denom as i128;
            assert!(m >= 0);
            if m > 0 {
                mult.insert(beta.clone(), m as u64);
                next.push(beta);
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    mult
}

pub fn freudenthal_dimension(rs: &RootSystem, lambda: &Weight) -> u64 {
    freudenthal(rs, lambda).values().sum()
}
