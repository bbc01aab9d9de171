//! Partitions, nodes and the elementary combinatorics on Young diagrams.
//!
//! A [`Partition`] is stored as its nonzero parts in weakly decreasing order,
//! so the zero partition is the empty sequence and structural equality is
//! equality of partitions. Rows and columns of nodes are 1-based.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)` of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// `(col - row) mod l`, in `0..l`.
    pub fn residue(&self, l: usize) -> usize {
        let l = l as i64;
        (self.col as i64 - self.row as i64).rem_euclid(l) as usize
    }

    /// The node reflected in the main diagonal.
    pub fn transposed(&self) -> Node {
        Node::new(self.col, self.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Quantum characteristic `l` together with the optional tensor-factor count
/// `m` and padding length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularParams {
    pub l: usize,
    pub m: Option<usize>,
    pub n: Option<usize>,
}

impl ModularParams {
    pub fn new(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidModulus(l));
        }
        Ok(ModularParams { l, m: None, n: None })
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    /// `m(l-1)`, the largest first part of a composition factor of the
    /// `m`-fold truncated tensor power.
    pub fn bound(&self) -> Option<usize> {
        self.m.map(|m| m * (self.l - 1))
    }
}

/// Result of [`Partition::regularity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    pub restricted: bool,
}

/// Addable, removable, suitable and co-suitable nodes, each listed top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeSets {
    pub addable: Vec<Node>,
    pub removable: Vec<Node>,
    pub suitable: Vec<Node>,
    pub co_suitable: Vec<Node>,
}

fn checked_part(a: usize, b: usize) -> usize {
    a.checked_add(b).expect("partition part overflow")
}

impl Partition {
    /// Validates weak decrease and strips trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are weakly decreasing; zeros are stripped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `a^k`.
    pub fn rectangle(a: usize, k: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![a; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `lambda_{i+1}` for a 0-based index `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Part in 1-based row `row`.
    pub fn row(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.part(row - 1)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.row(node.row) >= node.col
    }

    /// Diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All nodes of the diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Node::new(i + 1, j)))
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.len() > n {
            return Err(Error::TooManyParts { len: self.len(), max: n });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn transpose(&self) -> Partition {
        let mut cols = vec![0; self.first()];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Dominance order `self ⊴ other`; both must have the same degree.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (left, right) = (self.degree(), other.degree());
        if left != right {
            return Err(Error::IncomparableDegrees { left, right });
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No nonzero part repeated `l` or more times.
    pub fn is_regular(&self, l: usize) -> bool {
        let mut run = 0;
        for i in 0..self.len() {
            if i > 0 && self.parts[i] == self.parts[i - 1] {
                run += 1;
            } else {
                run = 1;
            }
            if run >= l {
                return false;
            }
        }
        true
    }

    /// All consecutive differences, including the last part, below `l`.
    pub fn is_restricted(&self, l: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < l)
    }

    pub fn regularity(&self, l: usize) -> Regularity {
        let r = Regularity { regular: self.is_regular(l), restricted: self.is_restricted(l) };
        debug_assert_eq!(r.restricted, self.transpose().is_regular(l));
        r
    }

    /// The unique split `self = restricted + l * quotient` with `restricted`
    /// being `l`-restricted.
    pub fn restricted_decompose(&self, l: usize) -> (Partition, Partition) {
        let k = self.len();
        let mut low = vec![0; k];
        let mut high = vec![0; k];
        let (mut acc_low, mut acc_high) = (0, 0);
        for i in (0..k).rev() {
            let d = self.part(i) - self.part(i + 1);
            acc_low += d % l;
            acc_high += d / l;
            low[i] = acc_low;
            high[i] = acc_high;
        }
        let low = Partition::from_sorted(low);
        let high = Partition::from_sorted(high);
        debug_assert_eq!(low.sum(&high.scaled(l)), *self);
        (low, high)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        let parts = self.parts.iter().map(|&p| p.checked_mul(k).expect("partition part overflow")).collect();
        Partition::from_sorted(parts)
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i) < self.part(i - 1) {
                out.push(Node::new(i + 1, self.part(i) + 1));
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i + 1, self.part(i)))
            .collect()
    }

    /// Removable nodes whose residue differs from that of every addable node
    /// in a strictly lower row.
    pub fn suitable_nodes(&self, l: usize) -> Vec<Node> {
        let addable = self.addable_nodes();
        self.removable_nodes()
            .into_iter()
            .filter(|r| {
                let res = r.residue(l);
                addable.iter().filter(|a| a.row > r.row).all(|a| a.residue(l) != res)
            })
            .collect()
    }

    /// Removable `(i, lambda_i)` whose transposed node is suitable for the transpose.
    pub fn co_suitable_nodes(&self, l: usize) -> Vec<Node> {
        let suitable_t = self.transpose().suitable_nodes(l);
        self.removable_nodes().into_iter().filter(|r| suitable_t.contains(&r.transposed())).collect()
    }

    pub fn node_sets(&self, l: usize) -> NodeSets {
        NodeSets {
            addable: self.addable_nodes(),
            removable: self.removable_nodes(),
            suitable: self.suitable_nodes(l),
            co_suitable: self.co_suitable_nodes(l),
        }
    }

    /// Number of nodes of each residue `0..l`.
    pub fn residue_content(&self, l: usize) -> Vec<usize> {
        let mut out = vec![0; l];
        for node in self.nodes() {
            out[node.residue(l)] += 1;
        }
        out
    }

    pub fn remove_node(&self, node: Node) -> Result<Partition> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::NotRemovable(node));
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        Ok(Partition::from_sorted(parts))
    }

    pub fn add_node(&self, node: Node) -> Result<Partition> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::PreconditionViolated("node is not addable"));
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Ok(Partition::from_sorted(parts))
    }

    /// The reflection `(b - lambda_n, ..., b - lambda_1)` with `b = m(l-1)`,
    /// taken with respect to the padding length `n`.
    pub fn dagger(&self, m: usize, l: usize, n: usize) -> Result<Partition> {
        let bound = m * (l - 1);
        if self.first() > bound {
            return Err(Error::OutOfReciprocityRange);
        }
        let padded = self.padded(n)?;
        let parts = padded.iter().rev().map(|&p| bound - p).collect();
        Ok(Partition::from_sorted(parts))
    }

    /// Entrywise sum.
    pub fn sum(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition::from_sorted((0..k).map(|i| checked_part(self.part(i), other.part(i))).collect())
    }

    /// Entrywise difference, when it is again a partition.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        if !self.contains(other) {
            return None;
        }
        let parts: Vec<usize> = (0..self.len()).map(|i| self.part(i) - other.part(i)).collect();
        Partition::new(parts).ok()
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    /// `(self | rest)`, defined when `self` is nonzero and its last part is at least `rest_1`.
    pub fn concatenate(&self, rest: &Partition) -> Result<Partition> {
        match self.parts.last() {
            Some(&last) if last >= rest.first() => {
                let mut parts = self.parts.clone();
                parts.extend_from_slice(&rest.parts);
                Ok(Partition { parts })
            }
            _ => Err(Error::IncompatiblePair),
        }
    }

    /// Sorts arbitrary nonnegative values into a partition.
    pub fn q_arrange(values: &[usize]) -> Partition {
        let mut parts = values.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }

    /// Rows `range` (0-based, half-open) as a partition.
    pub fn rows(&self, start: usize, end: usize) -> Partition {
        let end = end.min(self.len());
        let start = start.min(end);
        Partition { parts: self.parts[start..end].to_vec() }
    }

    /// Comma-separated parts, empty string for the zero partition.
    pub fn text(&self) -> alloc::string::String {
        use alloc::string::ToString;
        let v: Vec<_> = self.parts.iter().map(|p| p.to_string()).collect();
        v.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the strict `a1,a2,...,ak` form; the empty string is the zero partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::NotAPartition);
            }
            let p: usize = tok.parse().map_err(|_| Error::Overflow)?;
            if p == 0 {
                return Err(Error::NotAPartition);
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(::alloc::vec![$($p),+]).expect("invalid partition literal")
    };
}
