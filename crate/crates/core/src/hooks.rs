//! Rim hooks and `l`-cores.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// Hook length of the cell `(i, j)`.
pub fn hook_length(lambda: &Partition, node: Node) -> usize {
    let conj = lambda.transpose();
    lambda.row(node.row) - node.col + conj.row(node.col) - node.row + 1
}

/// The rim hook cut out by the hook of `(i, j)`, listed row by row, right to left.
pub fn rim_hook_of(lambda: &Partition, node: Node) -> Vec<Node> {
    debug_assert!(lambda.contains_node(node));
    let bottom = lambda.transpose().row(node.col);
    let mut cells = Vec::new();
    for r in node.row..=bottom {
        let left = if r < bottom { lambda.row(r + 1) } else { node.col };
        for c in (left..=lambda.row(r)).rev() {
            cells.push(Node::new(r, c));
        }
    }
    cells
}

/// All rim hooks of size `l`, indexed by the cell whose hook they come from.
pub fn rim_hooks(lambda: &Partition, l: usize) -> Vec<Vec<Node>> {
    let conj = lambda.transpose();
    lambda
        .nodes()
        .filter(|n| lambda.row(n.row) - n.col + conj.row(n.col) - n.row + 1 == l)
        .map(|n| rim_hook_of(lambda, n))
        .collect()
}

/// Removes a rim hook given as an arbitrary node set.
pub fn remove_rim_hook(lambda: &Partition, hook: &[Node]) -> Result<Partition> {
    let set: BTreeSet<Node> = hook.iter().copied().collect();
    if set.is_empty() || set.len() != hook.len() {
        return Err(Error::NotARimHook);
    }
    let top = set.iter().map(|n| n.row).min().unwrap_or(0);
    let left = set.iter().map(|n| n.col).min().unwrap_or(0);
    let corner = Node::new(top, left);
    if !lambda.contains_node(corner) {
        return Err(Error::NotARimHook);
    }
    let expected: BTreeSet<Node> = rim_hook_of(lambda, corner).into_iter().collect();
    if expected != set {
        return Err(Error::NotARimHook);
    }
    Ok(strip(lambda, &set))
}

fn strip(lambda: &Partition, cells: &BTreeSet<Node>) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for n in cells {
        parts[n.row - 1] -= 1;
    }
    Partition::new(parts).expect("rim hook removal leaves a partition")
}

/// The `l`-core, removing at each step the first available hook.
pub fn l_core(lambda: &Partition, l: usize) -> Partition {
    l_core_by(lambda, l, |_| 0)
}

/// The `l`-core with the hook at each step picked by `choose(count)`, which
/// must return an index below `count`.
pub fn l_core_by(lambda: &Partition, l: usize, mut choose: impl FnMut(usize) -> usize) -> Partition {
    debug_assert!(l >= 2);
    let mut current = lambda.clone();
    loop {
        let hooks = rim_hooks(&current, l);
        if hooks.is_empty() {
            return current;
        }
        let pick = choose(hooks.len());
        let cells = hooks[pick].iter().copied().collect();
        current = strip(&current, &cells);
    }
}

/// Number of `l`-hooks removed on the way to the core (the `l`-weight).
pub fn l_weight(lambda: &Partition, l: usize) -> usize {
    (lambda.degree() - l_core(lambda, l).degree()) / l
}
