//! Classification of highest-weight cones `X(w)` for a dominant weight `w`.
//!
//! For a nonzero dominant weight the stabilizer of the highest-weight line is
//! the standard parabolic `P_I` with `I = { i : m_i = 0 }`. The opposite
//! unipotent radical `U_I^-` has dimension `|Phi+ \ Phi_I|`, and the cone has
//! dimension one more. Commutativity of `U_I^-` is decided twice: from the
//! roots, and from a table of admissible Dynkin nodes. The two answers are
//! required to agree.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, Family, Root, RootSystem, SimpleType, Weight};

/// Version tag of the admissible-node table used by [`condition_d`].
pub const TABLE_VERSION: &str = "abelian-radical-nodes/1";

/// Default cap on the rank accepted by [`enumerate`].
pub const DEFAULT_RANK_CAP: usize = 8;

/// Rank cap for enumeration, overridable through `MAX_RANK_CAP`.
pub fn rank_cap() -> usize {
    std::env::var("MAX_RANK_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(DEFAULT_RANK_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    /// 0-based indices of simple roots in `I`.
    pub index_set: Vec<usize>,
    pub phi_i_positive: Vec<Root>,
    pub complement: Vec<Root>,
    pub u_minus_dim: usize,
}

/// `I(w) = { alpha_i : <w, alpha_i^vee> = 0 }` together with the split of
/// the positive roots into `Phi_I^+` and its complement.
pub fn stabilizer_index_set(rs: &RootSystem, w: &Weight) -> Result<ParabolicData> {
    if w.rank() != rs.rank() {
        return Err(Error::LabelArity {
            cartan_type: rs.cartan_type().to_string(),
            expected: rs.rank(),
            got: w.rank(),
        });
    }
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let index_set: Vec<usize> = (0..rs.rank()).filter(|&i| w.labels()[i] == 0).collect();
    let (phi_i_positive, complement): (Vec<Root>, Vec<Root>) = rs
        .positive_roots()
        .iter()
        .cloned()
        .partition(|r| r.support().all(|i| w.labels()[i] == 0));
    let u_minus_dim = complement.len();
    Ok(ParabolicData {
        index_set,
        phi_i_positive,
        complement,
        u_minus_dim,
    })
}

/// `U_I^-` is commutative iff no two roots of `Phi+ \ Phi_I` sum to a root.
pub fn condition_c(rs: &RootSystem, pd: &ParabolicData) -> bool {
    let c = &pd.complement;
    for (i, a) in c.iter().enumerate() {
        for b in &c[i..] {
            if rs.is_root(&a.add(b)) {
                return false;
            }
        }
    }
    true
}

/// Nodes (1-based, Bourbaki numbering) at which a single nonzero label gives
/// a commutative unipotent radical.
pub fn admissible_nodes(t: SimpleType) -> Vec<usize> {
    let l = t.rank();
    match t.family() {
        Family::A => (1..=l).collect(),
        Family::B => vec![1],
        Family::C => vec![l],
        // the first node and both fork tips; for D3 the tips are nodes 2 and 3
        Family::D => vec![1, l - 1, l],
        Family::E => match l {
            6 => vec![1, 6],
            7 => vec![7],
            _ => vec![],
        },
        Family::F | Family::G => vec![],
    }
}

/// Table form of commutativity: each connected component carries at most one
/// nonzero label, placed on an admissible node. Label magnitude is irrelevant.
pub fn condition_d(t: &CartanType, w: &Weight) -> Result<bool> {
    if w.rank() != t.rank() {
        return Err(Error::LabelArity {
            cartan_type: t.to_string(),
            expected: t.rank(),
            got: w.rank(),
        });
    }
    for (c, range) in t.components().iter().zip(t.component_ranges()) {
        let nonzero: Vec<usize> = range
            .clone()
            .filter(|&i| w.labels()[i] != 0)
            .map(|i| i - range.start + 1)
            .collect();
        match nonzero.as_slice() {
            [] => {}
            [node] if admissible_nodes(*c).contains(node) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Number of independent quadrics cutting out `X(w)`:
/// `d(d+1)/2 - dim E(2w)` with `d = dim E(w)`.
pub fn quadric_count(rs: &RootSystem, w: &Weight) -> Result<BigUint> {
    let d = BigInt::from(rs.irrep_dimension(w)?);
    let top = BigInt::from(rs.irrep_dimension(&w.scaled(2))?);
    let count = &d * (&d + 1u32) / 2u32 - top;
    // E(2w) is a summand of S^2 E(w)
    Ok(count.to_biguint().expect("dim E(2w) exceeds dim S^2 E(w)"))
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All numeric verdicts for one `(type, weight)` pair. Field names are the
/// JSON wire names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub labels: Vec<u32>,
    /// 1-based node numbers of `I(w)`.
    #[serde(rename = "I_varpi")]
    pub i_varpi: Vec<usize>,
    pub u_minus_dim: usize,
    pub n: usize,
    #[serde(rename = "dimE", with = "decimal")]
    pub dim_e: BigUint,
    #[serde(rename = "condition_C")]
    pub condition_c: bool,
    #[serde(rename = "condition_D")]
    pub condition_d: bool,
    pub singular: bool,
    pub ufd: bool,
    /// Invertible elements of `A(w)` are the nonzero constants; holds for
    /// every nonzero `w` and is not computed.
    pub units_trivial: bool,
    #[serde(with = "decimal")]
    pub quadric_count: BigUint,
    pub negative_answer: bool,
    /// Every criterion holds but `n = 3`; that dimension is realised by the
    /// Koras-Russell threefold, not by this construction.
    pub n3_candidate: bool,
    pub table_version: String,
}

pub fn classify(t: &CartanType, w: &Weight) -> Result<ClassificationReport> {
    classify_in(&RootSystem::new(t), w)
}

pub fn classify_in(rs: &RootSystem, w: &Weight) -> Result<ClassificationReport> {
    let pd = stabilizer_index_set(rs, w)?;
    let from_roots = condition_c(rs, &pd);
    let from_table = condition_d(rs.cartan_type(), w)?;
    if from_roots != from_table {
        return Err(Error::ConditionMismatch {
            cartan_type: rs.cartan_type().to_string(),
            labels: w.to_string(),
            from_roots,
            from_table,
        });
    }
    let n = pd.u_minus_dim + 1;
    let dim_e = rs.irrep_dimension(w)?;
    let singular = dim_e > BigUint::from(n);
    let ufd = w.is_fundamental();
    let quadric_count = quadric_count(rs, w)?;
    let criteria = ufd && from_table && singular;
    Ok(ClassificationReport {
        cartan_type: rs.cartan_type().to_string(),
        labels: w.labels().to_vec(),
        i_varpi: pd.index_set.iter().map(|i| i + 1).collect(),
        u_minus_dim: pd.u_minus_dim,
        n,
        dim_e,
        condition_c: from_roots,
        condition_d: from_table,
        singular,
        ufd,
        units_trivial: true,
        quadric_count,
        negative_answer: criteria && n >= 4,
        n3_candidate: criteria && n == 3,
        table_version: TABLE_VERSION.to_string(),
    })
}

/// Every simple type of rank at most `max_rank`, in (family, rank) order.
pub fn simple_types_up_to(max_rank: usize) -> Vec<SimpleType> {
    Family::ALL
        .iter()
        .flat_map(|&f| (1..=max_rank).filter_map(move |r| SimpleType::new(f, r).ok()))
        .collect()
}

/// Classify every (simple type, fundamental weight) pair up to `max_rank`,
/// ordered by (family, rank, node).
pub fn enumerate(max_rank: usize) -> Result<Vec<ClassificationReport>> {
    enumerate_capped(max_rank, rank_cap())
}

pub fn enumerate_capped(max_rank: usize, cap: usize) -> Result<Vec<ClassificationReport>> {
    if max_rank == 0 || max_rank > cap {
        return Err(Error::RankCap {
            requested: max_rank,
            cap,
        });
    }
    let jobs: Vec<(RootSystem, usize)> = simple_types_up_to(max_rank)
        .into_iter()
        .flat_map(|t| {
            let rs = RootSystem::simple(t);
            (0..t.rank()).map(move |node| (rs.clone(), node))
        })
        .collect();
    jobs.par_iter()
        .map(|(rs, node)| classify_in(rs, &Weight::fundamental(rs.rank(), *node)))
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(u32::to_string).collect();
        let nodes: Vec<String> = self.i_varpi.iter().map(usize::to_string).collect();
        writeln!(f, "type            {}", self.cartan_type)?;
        writeln!(f, "labels          {}", labels.join(","))?;
        writeln!(f, "I(w)            {{{}}}", nodes.join(","))?;
        writeln!(f, "dim U-          {}", self.u_minus_dim)?;
        writeln!(f, "n = dim X(w)    {}", self.n)?;
        writeln!(f, "dim E(w)        {}", self.dim_e)?;
        writeln!(f, "condition (C)   {}", yes_no(self.condition_c))?;
        writeln!(f, "condition (D)   {}", yes_no(self.condition_d))?;
        writeln!(f, "singular        {}", yes_no(self.singular))?;
        writeln!(f, "UFD             {}", yes_no(self.ufd))?;
        writeln!(f, "units = k*      {}", yes_no(self.units_trivial))?;
        writeln!(f, "quadrics        {}", self.quadric_count)?;
        writeln!(f, "negative answer {}", yes_no(self.negative_answer))?;
        if self.n3_candidate {
            writeln!(
                f,
                "note            n = 3 candidate; not claimed (compare the Koras-Russell threefold)"
            )?;
        }
        write!(f, "table           {}", self.table_version)
    }
}
