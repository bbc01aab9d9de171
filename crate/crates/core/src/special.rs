//! Distinguished partitions, the sets `Phi_m`, and the `m`-special / `m`-good
//! classifiers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::edge::mullineux_components;
use crate::enumerate::partitions_of;
use crate::error::{Error, Result};
use crate::llt::{nabla_multiplicity, DecompositionMatrix};
use crate::mullineux::mullineux_length;
use crate::partition::Partition;

/// A distinguished summand `(m_i, lambda(i))`.
pub type Summand = (usize, Partition);

/// Which rule decided an `m`-special verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialRule {
    /// `lambda` is restricted and the Mullineux length of its transpose decides.
    RestrictedMullLength,
    /// `lambda_1 > m(l-1)`.
    BoundViolation,
    /// Non-restricted `lambda` decided through its restricted part.
    SteinbergReduction,
}

impl SpecialRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpecialRule::RestrictedMullLength => "restricted-mull-length",
            SpecialRule::BoundViolation => "bound-violation",
            SpecialRule::SteinbergReduction => "steinberg-reduction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialVerdict {
    pub special: bool,
    pub rule: SpecialRule,
    pub witness: Option<Vec<Summand>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoodStatus {
    Yes,
    No,
    Unknown,
}

impl GoodStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GoodStatus::Yes => "yes",
            GoodStatus::No => "no",
            GoodStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodVerdict {
    pub status: GoodStatus,
    pub provenance: &'static str,
}

fn check_distinguished_range(m: usize, l: usize) -> Result<()> {
    if m == 0 || m >= l {
        return Err(Error::DistinguishedUndefined { m, l });
    }
    Ok(())
}

/// `lambda^0 = (l-m)^k a_1 .. a_m` with every `a_i < l-m` and `bar(lambda)_1 < m`.
pub fn is_distinguished(lambda: &Partition, m: usize, l: usize) -> Result<bool> {
    check_distinguished_range(m, l)?;
    let (low, high) = lambda.restricted_decompose(l);
    if high.first() >= m {
        return Ok(false);
    }
    let w = l - m;
    let parts = low.parts();
    let k = parts.iter().take_while(|&&p| p == w).count();
    let tail = &parts[k..];
    Ok(tail.len() <= m && tail.iter().all(|&p| p < w))
}

/// Membership in `Phi_m`: at most `m` parts and `lambda_1 - lambda_m <= l - m`.
pub fn phi_contains(lambda: &Partition, m: usize, l: usize) -> Result<bool> {
    check_distinguished_range(m, l)?;
    let direct = lambda.len() <= m && lambda.first() - lambda.row(m) <= l - m;
    debug_assert_eq!(direct, phi_contains_shifted(lambda, m, l));
    Ok(direct)
}

/// The same test in the form `lambda = r^m + alpha` with `alpha_1 <= l-m`, `len(alpha) < m`.
fn phi_contains_shifted(lambda: &Partition, m: usize, l: usize) -> bool {
    if lambda.len() > m {
        return false;
    }
    let r = lambda.row(m);
    let alpha: Vec<usize> = lambda.parts().iter().map(|p| p - r).collect();
    let alpha = Partition::new(alpha).expect("shift keeps order");
    alpha.first() <= l - m && alpha.len() < m
}

/// The pair (bound, Mullineux length of the restricted part) decides.
pub fn m_special(lambda: &Partition, m: usize, l: usize) -> bool {
    if m == 0 {
        return lambda.is_empty();
    }
    if lambda.first() > m * (l - 1) {
        return false;
    }
    let (low, _) = lambda.restricted_decompose(l);
    mullineux_length(&low.transpose(), l).expect("transpose of restricted is regular") <= m
}

pub fn is_m_special(lambda: &Partition, m: usize, l: usize) -> SpecialVerdict {
    let rule = if m == 0 && !lambda.is_empty() || lambda.first() > m * (l - 1) {
        SpecialRule::BoundViolation
    } else if lambda.is_restricted(l) {
        SpecialRule::RestrictedMullLength
    } else {
        SpecialRule::SteinbergReduction
    };
    let special = m_special(lambda, m, l);
    let witness = if special { distinguished_decomposition(lambda, m, l) } else { None };
    debug_assert_eq!(special, witness.is_some());
    SpecialVerdict { special, rule, witness }
}

/// Zero summands carrying `extra` in chunks of at most `l - 1`.
fn zero_padding(mut extra: usize, l: usize) -> Vec<Summand> {
    let mut out = Vec::new();
    while extra > 0 {
        let c = extra.min(l - 1);
        out.push((c, Partition::empty()));
        extra -= c;
    }
    out
}

/// A decomposition `lambda = sum lambda(i)` with `lambda(i)` `m_i`-distinguished
/// and `sum m_i = m`, if one exists.
pub fn distinguished_decomposition(lambda: &Partition, m: usize, l: usize) -> Option<Vec<Summand>> {
    if m == 0 {
        return lambda.is_empty().then(Vec::new);
    }
    if lambda.first() > m * (l - 1) {
        return None;
    }
    if lambda.is_restricted(l) {
        return restricted_witness(lambda, m, l);
    }
    DecompositionSearch::new(l).find(lambda, m)
}

/// Components of the transpose give the summands, each weighted by its
/// Mullineux length.
fn restricted_witness(lambda: &Partition, m: usize, l: usize) -> Option<Vec<Summand>> {
    let mu = lambda.transpose();
    let mut out = Vec::new();
    let mut used = 0;
    for comp in mullineux_components(&mu, l) {
        let mi = mullineux_length(&comp, l).expect("components of a regular partition are regular");
        used += mi;
        out.push((mi, comp.transpose()));
    }
    if used > m {
        return None;
    }
    out.extend(zero_padding(m - used, l));
    Some(out)
}

/// Memoized search over sums of nonzero distinguished partitions.
pub struct DecompositionSearch {
    l: usize,
    dmin: BTreeMap<Partition, Option<usize>>,
    cost: BTreeMap<(Partition, usize), Option<usize>>,
}

impl DecompositionSearch {
    pub fn new(l: usize) -> Self {
        DecompositionSearch { l, dmin: BTreeMap::new(), cost: BTreeMap::new() }
    }

    /// Least `m'` for which `nu` is `m'`-distinguished.
    fn dmin(&mut self, nu: &Partition) -> Option<usize> {
        if let Some(v) = self.dmin.get(nu) {
            return *v;
        }
        let l = self.l;
        let v = (1..l).find(|&m| is_distinguished(nu, m, l).expect("m in range"));
        self.dmin.insert(nu.clone(), v);
        v
    }

    /// Minimal total weight of a sum of exactly `p` nonzero distinguished partitions.
    fn cost(&mut self, rho: &Partition, p: usize) -> Option<usize> {
        if p == 0 {
            return rho.is_empty().then_some(0);
        }
        if rho.degree() < p {
            return None;
        }
        let key = (rho.clone(), p);
        if let Some(v) = self.cost.get(&key) {
            return *v;
        }
        let mut best: Option<usize> = None;
        for nu in summands(rho) {
            let Some(d) = self.dmin(&nu) else { continue };
            let rest = rho.difference(&nu).expect("summands leave a partition");
            if let Some(c) = self.cost(&rest, p - 1) {
                best = Some(best.map_or(d + c, |b: usize| b.min(d + c)));
            }
        }
        self.cost.insert(key, best);
        best
    }

    /// Fewest nonzero summands, lexicographically largest summand first.
    pub fn find(&mut self, lambda: &Partition, m: usize) -> Option<Vec<Summand>> {
        let p = (0..=lambda.degree()).find(|&p| self.cost(lambda, p).is_some_and(|c| c <= m))?;
        let mut out = Vec::new();
        let mut rho = lambda.clone();
        let mut budget = m;
        for left in (1..=p).rev() {
            let mut chosen = None;
            for nu in summands(&rho) {
                let Some(d) = self.dmin(&nu) else { continue };
                if d > budget {
                    continue;
                }
                let rest = rho.difference(&nu).expect("summands leave a partition");
                if self.cost(&rest, left - 1).is_some_and(|c| c + d <= budget) {
                    chosen = Some((d, nu, rest));
                    break;
                }
            }
            let (d, nu, rest) = chosen.expect("cost table guarantees a choice");
            out.push((d, nu));
            budget -= d;
            rho = rest;
        }
        out.extend(zero_padding(budget, self.l));
        Some(out)
    }
}

/// Nonzero `nu` with `nu` and `rho - nu` both partitions, lexicographically descending.
fn summands(rho: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(rho.len());
    summands_rec(rho, &mut nu, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn summands_rec(rho: &Partition, nu: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let i = nu.len();
    if i == rho.len() {
        if nu.iter().any(|&x| x > 0) {
            out.push(Partition::new(nu.clone()).expect("rows decrease"));
        }
        return;
    }
    let r = rho.part(i);
    let hi = if i == 0 { r } else { r.min(nu[i - 1]) };
    for x in 0..=hi {
        // rho - nu must also decrease: r - x <= rho_{i-1} - nu_{i-1}
        if i > 0 && r - x > rho.part(i - 1) - nu[i - 1] {
            continue;
        }
        nu.push(x);
        summands_rec(rho, nu, out);
        nu.pop();
    }
}

/// Checks a witness: every summand distinguished for its weight, weights sum to `m`,
/// summands sum to `lambda`.
pub fn verify_decomposition(lambda: &Partition, m: usize, l: usize, witness: &[Summand]) -> bool {
    let mut total = Partition::empty();
    let mut weight = 0;
    for (mi, nu) in witness {
        if !matches!(is_distinguished(nu, *mi, l), Ok(true)) {
            return false;
        }
        weight += mi;
        total = total.sum(nu);
    }
    weight == m && total == *lambda
}

/// Tri-state `m`-good classifier. With `oracle`, restricted inputs of the
/// matching degree are cross-checked against decomposition numbers.
pub fn is_m_good(
    lambda: &Partition,
    m: usize,
    l: usize,
    oracle: Option<&DecompositionMatrix>,
) -> Result<GoodVerdict> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    if m == 0 {
        let status = if lambda.is_empty() { GoodStatus::Yes } else { GoodStatus::No };
        return Ok(GoodVerdict { status, provenance: "zero-factors" });
    }
    if lambda.is_restricted(l) {
        let len = mullineux_length(&lambda.transpose(), l)?;
        let status = if len <= m { GoodStatus::Yes } else { GoodStatus::No };
        if let Some(matrix) = oracle.filter(|d| d.l == l && d.r == lambda.degree()) {
            let witnessed = matrix
                .rows
                .iter()
                .filter(|tau| tau.len() <= m)
                .map(|tau| nabla_multiplicity(matrix, tau, lambda))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .any(|&d| d > 0);
            if witnessed != (status == GoodStatus::Yes) {
                return Err(Error::Consistency("decomposition oracle disagrees with Mullineux length"));
            }
            return Ok(GoodVerdict { status, provenance: "restricted-mull-length+llt-oracle" });
        }
        return Ok(GoodVerdict { status, provenance: "restricted-mull-length" });
    }
    let (low, _) = lambda.restricted_decompose(l);
    if mullineux_length(&low.transpose(), l)? > m {
        return Ok(GoodVerdict { status: GoodStatus::No, provenance: "restricted-part-not-good" });
    }
    if lambda.first() <= m * (l - 1) {
        let status = if m_special(lambda, m, l) { GoodStatus::Yes } else { GoodStatus::No };
        return Ok(GoodVerdict { status, provenance: "special-equivalence" });
    }
    Ok(GoodVerdict { status: GoodStatus::Unknown, provenance: "requires full q-Schur data" })
}

/// All `m`-special partitions of `degree`, lexicographically descending.
pub fn enumerate_special(m: usize, l: usize, degree: usize, restricted_only: bool) -> Vec<Partition> {
    partitions_of(degree)
        .filter(|p| !restricted_only || p.is_restricted(l))
        .filter(|p| m_special(p, m, l))
        .collect()
}
