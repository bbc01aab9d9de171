//! Formal characters: polynomials in `n` variables, symmetric characters on
//! dominant exponents, Schur expansions, Kostka numbers and Pieri rules.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::enumerate::PartitionsOf;
use crate::error::{Error, Result};
use crate::partition::Partition;

type Exponent = Vec<usize>;

fn add_coeff<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let x = o.get().checked_add(c).expect("coefficient overflow");
            if x == 0 {
                o.remove();
            } else {
                *o.get_mut() = x;
            }
        }
    }
}

/// Integer polynomial in `x_1..x_n` keyed by full exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub n: usize,
    terms: BTreeMap<Exponent, i64>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(vec![0; n], 1);
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: i64) {
        assert_eq!(exp.len(), self.n, "exponent length must equal variable count");
        add_coeff(&mut self.terms, exp, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Product keeping only terms of total degree at most `max_degree`.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: usize) -> Polynomial {
        debug_assert_eq!(self.n, other.n);
        let mut out = Polynomial::zero(self.n);
        for (a, x) in self.terms() {
            let da: usize = a.iter().sum();
            for (b, y) in other.terms() {
                if da + b.iter().sum::<usize>() > max_degree {
                    continue;
                }
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x.checked_mul(y).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_truncated(other, usize::MAX)
    }

    /// Homogeneous component of degree `d`.
    pub fn slice(&self, d: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in self.terms().filter(|(e, _)| e.iter().sum::<usize>() == d) {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Compresses to dominant exponents; fails unless every permutation orbit is constant.
    pub fn to_monomial_char(&self) -> Result<MonomialChar> {
        let mut out = MonomialChar::zero(self.n);
        for (e, c) in self.terms() {
            let mut d = e.clone();
            d.sort_unstable_by(|a, b| b.cmp(a));
            if self.terms.get(&d).copied() != Some(c) {
                return Err(Error::NotSymmetric);
            }
            if *e == d {
                out.add_term(d, c);
            }
        }
        let back = out.to_polynomial();
        if back != *self {
            return Err(Error::NotSymmetric);
        }
        Ok(out)
    }
}

/// Symmetric polynomial stored as coefficients of monomial symmetric functions,
/// keyed by dominant (weakly decreasing, length `n`) exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialChar {
    pub n: usize,
    terms: BTreeMap<Exponent, i64>,
}

/// Distinct permutations of `v`.
fn orbit(v: &[usize]) -> Vec<Exponent> {
    let mut cur: Vec<usize> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

impl MonomialChar {
    pub fn zero(n: usize) -> Self {
        MonomialChar { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut m = MonomialChar::zero(n);
        m.add_term(vec![0; n], 1);
        m
    }

    /// Adds `c * m_exp`; `exp` must be dominant of length `n`.
    pub fn add_term(&mut self, exp: Exponent, c: i64) {
        assert_eq!(exp.len(), self.n, "exponent length must equal variable count");
        assert!(exp.windows(2).all(|w| w[0] >= w[1]), "exponent must be dominant");
        add_coeff(&mut self.terms, exp, c);
    }

    pub fn coeff(&self, exp: &[usize]) -> i64 {
        let mut d = exp.to_vec();
        d.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&d).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (e, c) in self.terms() {
            for x in orbit(e) {
                p.add_term(x, c);
            }
        }
        p
    }

    pub fn add(&self, other: &MonomialChar) -> MonomialChar {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &MonomialChar) -> MonomialChar {
        self.to_polynomial()
            .mul(&other.to_polynomial())
            .to_monomial_char()
            .expect("product of symmetric polynomials is symmetric")
    }

    pub fn slice(&self, d: usize) -> MonomialChar {
        let mut out = MonomialChar::zero(self.n);
        for (e, c) in self.terms().filter(|(e, _)| e.iter().sum::<usize>() == d) {
            out.add_term(e.clone(), c);
        }
        out
    }
}

/// Finitely supported integer combination of Schur polynomials in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(n: usize) -> Self {
        SchurExpansion { n, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        add_coeff(&mut self.coeffs, lambda, c);
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in lexicographically descending order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> Vec<Partition> {
        self.terms().map(|(p, _)| p.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_monomials(&self) -> Result<MonomialChar> {
        let mut out = MonomialChar::zero(self.n);
        for (lambda, c) in self.terms() {
            for (e, k) in schur_to_monomials(lambda, self.n)?.terms() {
                out.add_term(e.clone(), c * k);
            }
        }
        Ok(out)
    }
}

/// Kostka numbers with a memo table.
#[derive(Default)]
pub struct Kostka {
    memo: BTreeMap<(Partition, Exponent), u64>,
}

impl Kostka {
    pub fn new() -> Self {
        Kostka::default()
    }

    /// Number of semistandard tableaux of shape `lambda` and content `weight`.
    pub fn count(&mut self, lambda: &Partition, weight: &[usize]) -> u64 {
        let mut w = weight.to_vec();
        while w.last() == Some(&0) {
            w.pop();
        }
        self.count_trimmed(lambda, &w)
    }

    fn count_trimmed(&mut self, lambda: &Partition, weight: &[usize]) -> u64 {
        if lambda.degree() != weight.iter().sum::<usize>() {
            return 0;
        }
        let Some((&last, init)) = weight.split_last() else {
            return u64::from(lambda.is_empty());
        };
        if lambda.len() > weight.len() {
            return 0;
        }
        let key = (lambda.clone(), weight.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for nu in horizontal_strips_below(lambda, last) {
            total += self.count(&nu, init);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `nu` with `lambda / nu` a horizontal strip of size `k`.
fn horizontal_strips_below(lambda: &Partition, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(lambda.len());
    fn rec(lambda: &Partition, k: usize, nu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = nu.len();
        if i == lambda.len() {
            if k == 0 {
                out.push(Partition::new(nu.clone()).expect("interlacing rows decrease"));
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for x in lo..=hi {
            if hi - x > k {
                continue;
            }
            nu.push(x);
            rec(lambda, k - (hi - x), nu, out);
            nu.pop();
        }
    }
    rec(lambda, k, &mut nu, &mut out);
    out
}

/// `mu` with `mu / lambda` a horizontal strip of size `a` and at most `n` rows.
fn horizontal_strips_above(lambda: &Partition, a: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = (lambda.len() + 1).min(n);
    if lambda.len() > n {
        return out;
    }
    let mut mu = Vec::with_capacity(rows);
    fn rec(lambda: &Partition, rows: usize, a: usize, mu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = mu.len();
        if i == rows {
            if a == 0 {
                out.push(Partition::new(mu.clone()).expect("interlacing rows decrease"));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { lo + a } else { lambda.part(i - 1).min(lo + a) };
        for x in lo..=hi {
            mu.push(x);
            rec(lambda, rows, a - (x - lo), mu, out);
            mu.pop();
        }
    }
    rec(lambda, rows, a, &mut mu, &mut out);
    out
}

/// `s_lambda(x_1..x_n)` in the monomial basis; coefficients are Kostka numbers.
pub fn schur_to_monomials(lambda: &Partition, n: usize) -> Result<MonomialChar> {
    if lambda.len() > n {
        return Err(Error::TooManyParts { len: lambda.len(), max: n });
    }
    let mut kostka = Kostka::new();
    let mut out = MonomialChar::zero(n);
    for mu in PartitionsOf::new(lambda.degree(), Some(n), None) {
        let k = kostka.count(lambda, mu.parts());
        if k > 0 {
            out.add_term(mu.padded(n)?, k as i64);
        }
    }
    Ok(out)
}

/// Inverse Kostka solve, peeling the lexicographically largest exponent.
pub fn monomials_to_schur(chi: &MonomialChar) -> Result<SchurExpansion> {
    let mut rest = chi.clone();
    let mut out = SchurExpansion::zero(chi.n);
    loop {
        let Some((top, c)) = rest.terms().next_back().map(|(e, c)| (e.clone(), c)) else { break };
        let lambda = Partition::new(top)?;
        let s = schur_to_monomials(&lambda, chi.n)?;
        for (e, k) in s.terms() {
            rest.add_term(e.clone(), -c * k);
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// Schur expansion of an arbitrary polynomial, rejecting non-symmetric input.
pub fn polynomial_to_schur(p: &Polynomial) -> Result<SchurExpansion> {
    monomials_to_schur(&p.to_monomial_char()?)
}

/// `s_lambda * h_a` truncated to `n` rows.
pub fn pieri_h(lambda: &Partition, a: usize, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(n);
    for mu in horizontal_strips_above(lambda, a, n) {
        out.add_term(mu, 1);
    }
    out
}

/// `s_lambda * e_r` truncated to `n` rows.
pub fn pieri_e(lambda: &Partition, r: usize, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(n);
    if lambda.len() > n {
        return out;
    }
    let mut bumps = Vec::new();
    fn rec(lambda: &Partition, n: usize, r: usize, bumps: &mut Vec<usize>, out: &mut SchurExpansion) {
        let i = bumps.len();
        if i == n {
            if r == 0 {
                let parts: Vec<usize> = (0..n).map(|k| lambda.part(k) + bumps[k]).collect();
                if let Ok(mu) = Partition::new(parts) {
                    out.add_term(mu, 1);
                }
            }
            return;
        }
        for b in 0..=1usize.min(r) {
            bumps.push(b);
            rec(lambda, n, r - b, bumps, out);
            bumps.pop();
        }
    }
    rec(lambda, n, r, &mut bumps, &mut out);
    out
}

/// Monomials with every exponent at most `cap` and total degree `r`.
fn bounded_monomials(r: usize, n: usize, cap: Option<usize>) -> MonomialChar {
    let mut out = MonomialChar::zero(n);
    for mu in PartitionsOf::new(r, Some(n), cap) {
        out.add_term(mu.padded(n).expect("length bounded by n"), 1);
    }
    out
}

/// Character of the degree-`r` piece of the truncated symmetric algebra.
pub fn truncated_power_char(r: usize, n: usize, l: usize) -> MonomialChar {
    if r > 0 && l < 2 {
        return MonomialChar::zero(n);
    }
    bounded_monomials(r, n, Some(l - 1))
}

/// Complete homogeneous `h_r(x_1..x_n)`.
pub fn complete_char(r: usize, n: usize) -> MonomialChar {
    bounded_monomials(r, n, None)
}

/// Degree-`r` slice of the `m`-th power of `sum_s piece(s)`.
fn tensor_power_slice(m: usize, n: usize, r: usize, piece: impl Fn(usize) -> MonomialChar) -> MonomialChar {
    let mut factor = Polynomial::zero(n);
    for s in 0..=r {
        factor = factor.add(&piece(s).to_polynomial());
    }
    let mut acc = Polynomial::one(n);
    for _ in 0..m {
        acc = acc.mul_truncated(&factor, r);
    }
    acc.slice(r).to_monomial_char().expect("tensor power is symmetric")
}

/// Degree-`r` slice of the `m`-fold tensor power of the truncated symmetric algebra.
pub fn truncated_tensor_monomials(m: usize, n: usize, l: usize, r: usize) -> MonomialChar {
    tensor_power_slice(m, n, r, |s| truncated_power_char(s, n, l))
}

/// Degree-`r` slice of the `m`-fold tensor power of the full symmetric algebra.
pub fn full_tensor_monomials(m: usize, n: usize, r: usize) -> MonomialChar {
    tensor_power_slice(m, n, r, |s| complete_char(s, n))
}

/// Schur expansion of the truncated tensor character. Weight multiplicities are
/// nonnegative but Schur coefficients need not be: `m = 1, n = 3, l = 3, r = 3`
/// gives `s_(2,1) - s_(1,1,1)`.
pub fn truncated_tensor_char(m: usize, n: usize, l: usize, r: usize) -> SchurExpansion {
    let chi = truncated_tensor_monomials(m, n, l, r);
    let out = monomials_to_schur(&chi).expect("tensor characters are symmetric");
    debug_assert!(out.terms().all(|(p, _)| p.first() <= m * (l - 1)));
    out
}

/// Every exponent multiplied by `l`.
pub fn frobenius_stretch(chi: &MonomialChar, l: usize) -> MonomialChar {
    let mut out = MonomialChar::zero(chi.n);
    for (e, c) in chi.terms() {
        out.add_term(e.iter().map(|x| x * l).collect(), c);
    }
    out
}

/// `ch H_r = sum_{i + l j = r} ch Hbar_i * (ch Hdot_j)^F` for the `m`-fold tensor powers.
pub fn verify_graded_free_identity(m: usize, n: usize, l: usize, r: usize) -> bool {
    let lhs = full_tensor_monomials(m, n, r);
    let mut rhs = MonomialChar::zero(n);
    for j in 0..=r / l {
        let i = r - l * j;
        let trunc = truncated_tensor_monomials(m, n, l, i);
        let stretched = frobenius_stretch(&full_tensor_monomials(m, n, j), l);
        rhs = rhs.add(&trunc.mul(&stretched));
    }
    lhs == rhs
}
