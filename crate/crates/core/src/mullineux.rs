//! The Mullineux involution on `l`-regular partitions, its symbol, and the
//! constructive co-suitable and suitable node finders.

use alloc::vec::Vec;

use crate::edge::{is_edge_l_connected, l_edge, mullineux_components, remove_l_edge};
use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// Rows `(e_l, len)` of the successive `l`-edge removals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MullineuxSymbol {
    pub rows: Vec<(usize, usize)>,
}

fn require_regular(mu: &Partition, l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    if !mu.is_regular(l) {
        return Err(Error::NotRegular(mu.clone()));
    }
    Ok(())
}

pub fn mullineux_symbol(mu: &Partition, l: usize) -> Result<MullineuxSymbol> {
    require_regular(mu, l)?;
    let mut rows = Vec::new();
    let mut current = mu.clone();
    while !current.is_empty() {
        let e = l_edge(&current, l).e_l;
        rows.push((e, current.len()));
        current = remove_l_edge(&current, l);
    }
    Ok(MullineuxSymbol { rows })
}

/// Length of the stage produced by the Mullineux map from a symbol row.
fn flipped_length(a: usize, r: usize, l: usize) -> usize {
    a - r + usize::from(!a.is_multiple_of(l))
}

pub fn mullineux(mu: &Partition, l: usize) -> Result<Partition> {
    let symbol = mullineux_symbol(mu, l)?;
    let mut xi = Partition::empty();
    for &(a, r) in symbol.rows.iter().rev() {
        let s = flipped_length(a, r, l);
        let next = add_l_edge(&xi, a, s, l)?;
        if remove_l_edge(&next, l) != xi || l_edge(&next, l).e_l != a {
            return Err(Error::Consistency("edge round trip in mullineux reconstruction"));
        }
        xi = next;
    }
    Ok(xi)
}

/// Length of `Mull(mu)` from the top stage alone.
pub fn mullineux_length(mu: &Partition, l: usize) -> Result<usize> {
    require_regular(mu, l)?;
    if mu.is_empty() {
        return Ok(0);
    }
    let e = l_edge(mu, l).e_l;
    Ok(flipped_length(e, mu.len(), l))
}

/// The unique `l`-regular `xi` of length `r` with `e_l(xi) = a` and
/// `remove_l_edge(xi) = nu`.
pub fn add_l_edge(nu: &Partition, a: usize, r: usize, l: usize) -> Result<Partition> {
    if l < 2 {
        return Err(Error::InvalidModulus(l));
    }
    if r == 0 || a < r || nu.len() > r {
        return Err(Error::NoEdgeExtension);
    }
    let mut found = Vec::new();
    let mut xi = Vec::with_capacity(r);
    extend(nu, a, r, l, &mut xi, Slot::Start { cap: usize::MAX }, 0, &mut found);
    found.retain(|p: &Partition| p.is_regular(l));
    match found.len() {
        0 => Err(Error::NoEdgeExtension),
        1 => Ok(found.pop().expect("one candidate")),
        _ => Err(Error::AmbiguousExtension),
    }
}

/// Where the next row sits relative to the current `l`-segment.
#[derive(Clone, Copy)]
enum Slot {
    /// A new segment starts here; the row may not exceed `cap`.
    Start { cap: usize },
    /// `left` nodes of the current segment remain and the row is forced.
    Within { left: usize, forced: usize },
}

#[allow(clippy::too_many_arguments)]
fn extend(
    nu: &Partition,
    a: usize,
    r: usize,
    l: usize,
    xi: &mut Vec<usize>,
    slot: Slot,
    taken: usize,
    found: &mut Vec<Partition>,
) {
    let i = xi.len();
    if i == r {
        if taken == a {
            let p = Partition::new(xi.clone()).expect("rows are decreasing");
            debug_assert_eq!(remove_l_edge(&p, l), *nu);
            found.push(p);
        }
        return;
    }
    let rows_left = r - i;
    if taken + rows_left > a || taken + rows_left * l < a {
        return;
    }
    let base = nu.part(i);
    let last = i + 1 == r;
    let (choices, budget) = match slot {
        Slot::Start { cap } => {
            let hi = (base + l).min(cap);
            ((base + 1..=hi).collect::<Vec<_>>(), l)
        }
        Slot::Within { left, forced } => (Vec::from([forced]), left),
    };
    for x in choices {
        if x <= base {
            continue;
        }
        let d = x - base;
        if d > budget {
            continue;
        }
        xi.push(x);
        if d < budget {
            // The segment runs on into the next row.
            if !last || base == 0 {
                let next = Slot::Within { left: budget - d, forced: base + 1 };
                extend(nu, a, r, l, xi, next, taken + d, found);
            }
        } else {
            extend(nu, a, r, l, xi, Slot::Start { cap: base + 1 }, taken + d, found);
        }
        xi.pop();
    }
}

/// Number of rows above component `index`.
fn component_offset(comps: &[Partition], index: usize) -> usize {
    comps[..index].iter().map(Partition::len).sum()
}

/// A co-suitable node `R` of an edge `l`-disconnected `l`-regular `mu` with
/// `mu_R` regular and the same Mullineux length.
pub fn find_co_suitable_node(mu: &Partition, l: usize) -> Result<Node> {
    require_regular(mu, l).map_err(|_| Error::PreconditionViolated("input must be l-regular"))?;
    if is_edge_l_connected(mu, l) {
        return Err(Error::PreconditionViolated("input must be edge l-disconnected"));
    }
    let comps = mullineux_components(mu, l);
    let k = (0..comps.len() - 1)
        .find(|&i| comps[i].first() - comps[i + 1].first() + comps[i].len() > l)
        .ok_or(Error::Consistency("disconnected partition without a gap"))?;

    if let Some(s) = (0..=k).rev().find(|&i| comps[i].part(0) > comps[i].part(1)) {
        return Ok(Node::new(component_offset(&comps, s) + 1, comps[s].first()));
    }

    for t in 0..=k {
        let offset = component_offset(&comps, t);
        for node in comps[t].removable_nodes() {
            let r = Node::new(offset + node.row, node.col);
            if let Ok(reduced) = mu.remove_node(r) {
                if reduced.is_regular(l) {
                    return Ok(r);
                }
            }
        }
    }
    Err(Error::Consistency("no co-suitable node found"))
}

/// A suitable node `S = (i, lambda_i)` of a non-restricted `lambda` obtained by
/// transposing the co-suitable node of `(lambda^0)'`.
pub fn find_suitable_node_nonrestricted(lambda: &Partition, l: usize) -> Result<Node> {
    if lambda.is_restricted(l) {
        return Err(Error::PreconditionViolated("input must be non-restricted"));
    }
    let (low, high) = lambda.restricted_decompose(l);
    if high.len() > low.len() {
        return Err(Error::PreconditionViolated("quotient longer than restricted part"));
    }
    let mu = low.transpose();
    if is_edge_l_connected(&mu, l) {
        return Err(Error::PreconditionViolated("transpose of restricted part is edge l-connected"));
    }
    let r = find_co_suitable_node(&mu, l)?;
    let i = r.col;
    Ok(Node::new(i, lambda.row(i)))
}
