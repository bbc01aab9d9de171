//! Canonical basis of the level-one Fock space and the decomposition numbers
//! it yields at `v = 1`.
//!
//! The action of `f_i` adds an `i`-node `A` with coefficient `v^N`, where `N`
//! counts addable minus removable `i`-nodes strictly above `A`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::enumerate::partitions_of;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mullineux::mullineux;
use crate::partition::Partition;

/// Finitely supported vector `sum c_lambda(v) |lambda>`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    entries: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(lambda, &LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self - c * other`.
    fn subtract_scaled(&mut self, c: &LaurentPoly, other: &FockVector) {
        for (lambda, p) in other.iter() {
            self.add_term(lambda.clone(), &-&(c * p));
        }
    }

    fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> Option<LaurentPoly>) -> Option<FockVector> {
        let mut out = FockVector::zero();
        for (lambda, p) in self.iter() {
            out.add_term(lambda.clone(), &f(p)?);
        }
        Some(out)
    }
}

/// `f_i` on a single basis vector.
fn f_basis(i: usize, lambda: &Partition, l: usize, out: &mut FockVector, scale: &LaurentPoly) {
    let addable = lambda.addable_nodes();
    let removable = lambda.removable_nodes();
    for a in addable.iter().filter(|a| a.residue(l) == i) {
        let above_add = addable.iter().filter(|b| b.row < a.row && b.residue(l) == i).count() as i32;
        let above_rem = removable.iter().filter(|b| b.row < a.row && b.residue(l) == i).count() as i32;
        let next = lambda.add_node(*a).expect("addable node");
        out.add_term(next, &scale.shift(above_add - above_rem));
    }
}

/// The divided power `f_i^{(k)}` applied to `x`.
pub fn f_apply(i: usize, k: u32, x: &FockVector, l: usize) -> Result<FockVector> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    if i >= l {
        return Err(Error::ResidueOutOfRange { residue: i, l });
    }
    let mut current = x.clone();
    for _ in 0..k {
        let mut next = FockVector::zero();
        for (lambda, c) in current.iter() {
            f_basis(i, lambda, l, &mut next, c);
        }
        current = next;
    }
    if k > 1 {
        let fact = LaurentPoly::quantum_factorial(k);
        current = current
            .map_coeffs(|p| p.div_exact(&fact))
            .ok_or(Error::Consistency("divided power is not exact"))?;
    }
    Ok(current)
}

/// Ladder index `(i-1) + (l-1)(j-1)` of the node `(i, j)`.
fn ladder(row: usize, col: usize, l: usize) -> usize {
    (row - 1) + (l - 1) * (col - 1)
}

/// The first approximation `A(mu)` built from ladder divided powers.
pub fn ladder_monomial(mu: &Partition, l: usize) -> Result<FockVector> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    if !mu.is_regular(l) {
        return Err(Error::NotRegular(mu.clone()));
    }
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for n in mu.nodes() {
        *counts.entry(ladder(n.row, n.col, l)).or_insert(0) += 1;
    }
    let mut x = FockVector::basis(Partition::empty());
    for (&k, &c) in &counts {
        let res = (l - k % l) % l;
        x = f_apply(res, c, &x, l)?;
    }
    if x.coeff(mu) != LaurentPoly::one() {
        return Err(Error::Consistency("ladder monomial leading coefficient is not 1"));
    }
    if x.iter().any(|(nu, _)| nu > mu) {
        return Err(Error::Consistency("ladder monomial has terms above its label"));
    }
    Ok(x)
}

/// Bar-symmetric `d` agreeing with `c` in degrees `<= 0`.
fn bar_symmetric_part(c: &LaurentPoly) -> LaurentPoly {
    let mut d = LaurentPoly::zero();
    for (e, k) in c.terms().filter(|&(e, _)| e <= 0) {
        d.add_term(e, k);
        if e < 0 {
            d.add_term(-e, k);
        }
    }
    d
}

/// `G(mu)` from `A(mu)`, given `G(nu)` for all regular `nu` below `mu`.
pub fn canonical_column(
    mu: &Partition,
    l: usize,
    prior: &BTreeMap<Partition, FockVector>,
) -> Result<FockVector> {
    let mut g = ladder_monomial(mu, l)?;
    let guard = 4 * (prior.len() + 1) * (g.len() + 1) + 64;
    for _ in 0..guard {
        let bad = g
            .iter()
            .rev()
            .find(|(nu, c)| *nu != mu && c.min_degree().is_some_and(|e| e <= 0))
            .map(|(nu, c)| (nu.clone(), c.clone()));
        let Some((nu, c)) = bad else {
            for (lambda, p) in g.iter() {
                if lambda != mu && p.terms().any(|(e, k)| e <= 0 || k < 0) {
                    return Err(Error::Consistency("canonical basis coefficient not in vN[v]"));
                }
            }
            return Ok(g);
        };
        let basis = prior.get(&nu).ok_or(Error::Consistency("missing canonical column"))?;
        let d = bar_symmetric_part(&c);
        g.subtract_scaled(&d, basis);
    }
    Err(Error::Consistency("canonical column did not terminate"))
}

/// All canonical basis vectors `G(mu)` for `l`-regular `mu` of degree `r`.
pub fn canonical_basis(r: usize, l: usize) -> Result<BTreeMap<Partition, FockVector>> {
    let mut cols: Vec<Partition> = partitions_of(r).filter(|p| p.is_regular(l)).collect();
    cols.reverse();
    let mut out = BTreeMap::new();
    for mu in cols {
        let g = canonical_column(&mu, l, &out)?;
        out.insert(mu, g);
    }
    Ok(out)
}

/// Decomposition numbers at `v = 1`: rows are all partitions of `r`, columns the
/// `l`-regular ones, both lexicographically descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub l: usize,
    pub r: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// Row-major, `rows.len() * cols.len()` entries.
    values: Vec<u64>,
    row_index: BTreeMap<Partition, usize>,
    col_index: BTreeMap<Partition, usize>,
}

impl DecompositionMatrix {
    /// Builds from explicit data; rows and columns must be the full index sets for `(l, r)`.
    pub fn from_entries(
        l: usize,
        r: usize,
        entries: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let rows: Vec<Partition> = partitions_of(r).collect();
        let cols: Vec<Partition> = rows.iter().filter(|p| p.is_regular(l)).cloned().collect();
        let mut values = vec![0; rows.len() * cols.len()];
        for (i, j, v) in entries {
            if i >= rows.len() || j >= cols.len() {
                return Err(Error::Consistency("matrix entry out of range"));
            }
            values[i * cols.len() + j] = v;
        }
        let row_index = rows.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let col_index = cols.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(DecompositionMatrix { l, r, rows, cols, values, row_index, col_index })
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<u64> {
        let i = *self.row_index.get(row)?;
        let j = *self.col_index.get(col)?;
        Some(self.values[i * self.cols.len() + j])
    }

    pub fn entry_at(&self, i: usize, j: usize) -> u64 {
        self.values[i * self.cols.len() + j]
    }

    /// Nonzero entries as `(row, col, value)`, row-major.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, u64)> {
        let w = self.cols.len();
        self.values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, &v)| (k / w, k % w, v)).collect()
    }

    /// Column values indexed like `rows`.
    pub fn column(&self, col: &Partition) -> Option<Vec<u64>> {
        let j = *self.col_index.get(col)?;
        Some((0..self.rows.len()).map(|i| self.entry_at(i, j)).collect())
    }

    /// Unit diagonal and support dominated by the column label.
    pub fn check_unitriangular(&self) -> Result<()> {
        for (j, mu) in self.cols.iter().enumerate() {
            for (i, lambda) in self.rows.iter().enumerate() {
                let v = self.entry_at(i, j);
                if lambda == mu && v != 1 {
                    return Err(Error::Consistency("diagonal entry is not 1"));
                }
                if v != 0 && !lambda.dominance_leq(mu)? {
                    return Err(Error::Consistency("entry outside the dominance range"));
                }
            }
        }
        Ok(())
    }
}

pub fn decomposition_matrix(r: usize, l: usize) -> Result<DecompositionMatrix> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    let basis = canonical_basis(r, l)?;
    let mut entries = Vec::new();
    let rows: Vec<Partition> = partitions_of(r).collect();
    let cols: Vec<&Partition> = rows.iter().filter(|p| p.is_regular(l)).collect();
    for (j, mu) in cols.iter().enumerate() {
        let g = &basis[*mu];
        for (i, lambda) in rows.iter().enumerate() {
            let v = g.coeff(lambda).at_one();
            if v < 0 {
                return Err(Error::Consistency("negative decomposition number"));
            }
            if v > 0 {
                entries.push((i, j, v as u64));
            }
        }
    }
    let matrix = DecompositionMatrix::from_entries(l, r, entries)?;
    matrix.check_unitriangular()?;
    Ok(matrix)
}

/// `[nabla(tau) : L(lambda)]` for restricted `lambda`, read from column `Mull(lambda')`.
pub fn nabla_multiplicity(matrix: &DecompositionMatrix, tau: &Partition, lambda: &Partition) -> Result<u64> {
    if !lambda.is_restricted(matrix.l) {
        return Err(Error::LabelNotRestricted(lambda.clone()));
    }
    let (left, right) = (tau.degree(), lambda.degree());
    if left != right || right != matrix.r {
        return Err(Error::IncomparableDegrees { left, right });
    }
    let col = mullineux(&lambda.transpose(), matrix.l)?;
    matrix.entry(tau, &col).ok_or(Error::Consistency("label missing from matrix"))
}
