//! JSON shapes for every command output. Field order is fixed by declaration,
//! so serialized output is byte-stable.

use modpart::character::SchurExpansion;
use modpart::{MullineuxSymbol, Node, Partition, SpecialVerdict};
use serde::{Deserialize, Serialize};

pub fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

fn nodes(ns: &[Node]) -> Vec<[usize; 2]> {
    ns.iter().map(|n| [n.row, n.col]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialVerdictJson {
    pub special: bool,
    pub rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(usize, Vec<usize>)>>,
}

impl SpecialVerdictJson {
    pub fn new(v: &SpecialVerdict, with_witness: bool) -> Self {
        let witness = if with_witness {
            Some(v.witness.iter().flatten().map(|(m, p)| (*m, parts(p))).collect())
        } else {
            None
        };
        SpecialVerdictJson { special: v.special, rule: v.rule.as_str().to_string(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub partition: Vec<usize>,
    pub coeff: i64,
}

/// Terms in descending lexicographic order of the partition.
pub fn schur_terms(s: &SchurExpansion) -> Vec<SchurTerm> {
    let mut out: Vec<SchurTerm> =
        s.terms().map(|(p, c)| SchurTerm { partition: parts(p), coeff: c }).collect();
    out.sort_by(|a, b| b.partition.cmp(&a.partition));
    out
}

pub fn symbol_pairs(s: &MullineuxSymbol) -> Vec<[usize; 2]> {
    s.rows.iter().map(|&(a, r)| [a, r]).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MullReport {
    pub partition: Vec<usize>,
    pub l: usize,
    pub symbol: Vec<[usize; 2]>,
    pub image: Vec<usize>,
    pub length: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoreReport {
    pub partition: Vec<usize>,
    pub l: usize,
    pub core: Vec<usize>,
    pub weight: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoodReport {
    pub partition: Vec<usize>,
    pub l: usize,
    pub m: usize,
    pub status: String,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InfoReport {
    pub partition: Vec<usize>,
    pub l: usize,
    pub degree: usize,
    pub transpose: Vec<usize>,
    pub regular: bool,
    pub restricted: bool,
    pub restricted_part: Vec<usize>,
    pub quotient: Vec<usize>,
    pub residue_content: Vec<usize>,
    pub addable: Vec<[usize; 2]>,
    pub removable: Vec<[usize; 2]>,
    pub suitable: Vec<[usize; 2]>,
    pub co_suitable: Vec<[usize; 2]>,
    pub core: Vec<usize>,
    pub edge_length: usize,
    pub e_l: usize,
    pub edge_connected: bool,
    pub components: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mullineux: Option<Vec<usize>>,
}

impl InfoReport {
    pub fn new(p: &Partition, l: usize) -> modpart::Result<Self> {
        let sets = p.node_sets(l);
        let (low, high) = p.restricted_decompose(l);
        let mullineux = if p.is_regular(l) { Some(parts(&modpart::mullineux(p, l)?)) } else { None };
        let components = if p.is_empty() {
            Vec::new()
        } else {
            modpart::mullineux_components(p, l).iter().map(parts).collect()
        };
        Ok(InfoReport {
            partition: parts(p),
            l,
            degree: p.degree(),
            transpose: parts(&p.transpose()),
            regular: p.is_regular(l),
            restricted: p.is_restricted(l),
            restricted_part: parts(&low),
            quotient: parts(&high),
            residue_content: p.residue_content(l),
            addable: nodes(&sets.addable),
            removable: nodes(&sets.removable),
            suitable: nodes(&sets.suitable),
            co_suitable: nodes(&sets.co_suitable),
            core: parts(&modpart::l_core(p, l)),
            edge_length: modpart::edge_length(p),
            e_l: modpart::l_edge(p, l).e_l,
            edge_connected: !p.is_empty() && modpart::is_edge_l_connected(p, l),
            components,
            mullineux,
        })
    }
}

/// Grid for a cross-check suite. Unused axes are left empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub l: Vec<usize>,
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub max_degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: SuiteParams,
    pub checked: u64,
    pub failures: Vec<Failure>,
    /// Wall time in milliseconds; only present when timing was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
