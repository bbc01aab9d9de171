//! Rim, `l`-edge, `l`-segments and Mullineux components.

use alloc::vec::Vec;

use crate::partition::{Node, Partition};

/// The `l`-edge of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LEdge {
    /// Selected rim nodes in rim order.
    pub nodes: Vec<Node>,
    /// Number of selected nodes, `e_l`.
    pub e_l: usize,
    /// Row in which each `l`-segment ends.
    pub segment_ends: Vec<usize>,
}

/// Rim nodes from `(1, lambda_1)` down to `(len, 1)`.
pub fn rim(lambda: &Partition) -> Vec<Node> {
    let mut out = Vec::new();
    for i in 1..=lambda.len() {
        let left = lambda.row(i + 1).max(1);
        for c in (left..=lambda.row(i)).rev() {
            out.push(Node::new(i, c));
        }
    }
    out
}

/// Edge length `e(lambda) = lambda_1 + len - 1`, zero for the zero partition.
pub fn edge_length(lambda: &Partition) -> usize {
    if lambda.is_empty() {
        0
    } else {
        lambda.first() + lambda.len() - 1
    }
}

pub fn l_edge(lambda: &Partition, l: usize) -> LEdge {
    debug_assert!(l >= 2);
    let rim = rim(lambda);
    let mut nodes = Vec::new();
    let mut segment_ends = Vec::new();
    let mut pos = 0;
    while pos < rim.len() {
        let end = (pos + l).min(rim.len());
        nodes.extend_from_slice(&rim[pos..end]);
        let last_row = rim[end - 1].row;
        segment_ends.push(last_row);
        pos = end;
        while pos < rim.len() && rim[pos].row == last_row {
            pos += 1;
        }
    }
    let e_l = nodes.len();
    debug_assert_eq!(e_l, e_l_from_components(lambda, l));
    LEdge { nodes, e_l, segment_ends }
}

/// `e_l` via `l(t-1) + min(l, e(last component))`.
pub fn e_l_from_components(lambda: &Partition, l: usize) -> usize {
    let comps = mullineux_components(lambda, l);
    match comps.last() {
        None => 0,
        Some(last) => l * (comps.len() - 1) + l.min(edge_length(last)),
    }
}

pub fn remove_l_edge(lambda: &Partition, l: usize) -> Partition {
    let edge = l_edge(lambda, l);
    let mut parts = lambda.parts().to_vec();
    for n in &edge.nodes {
        parts[n.row - 1] -= 1;
    }
    Partition::new(parts).expect("l-edge removal leaves a partition")
}

/// Splits `lambda` into row blocks: the first block is rows `1..=h` with `h`
/// minimal such that `lambda_1 - lambda_{h+1} + h >= l`, or all rows if none.
pub fn mullineux_components(lambda: &Partition, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut start = 0;
    let parts = lambda.parts();
    while start < parts.len() {
        let first = parts[start];
        let remaining = parts.len() - start;
        let h = (1..remaining).find(|&h| first - parts[start + h] + h >= l).unwrap_or(remaining);
        out.push(lambda.rows(start, start + h));
        start += h;
    }
    out
}

/// Adjacent components satisfy `lambda^i_1 - lambda^{i+1}_1 + len(lambda^i) = l`.
pub fn is_edge_l_connected(lambda: &Partition, l: usize) -> bool {
    let comps = mullineux_components(lambda, l);
    comps.windows(2).all(|w| w[0].first() - w[1].first() + w[0].len() == l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use alloc::vec;

    #[test]
    fn rim_examples() {
        assert_eq!(rim(&part![2, 1]), vec![Node::new(1, 2), Node::new(1, 1), Node::new(2, 1)]);
        assert_eq!(
            rim(&part![3, 3]),
            vec![Node::new(1, 3), Node::new(2, 3), Node::new(2, 2), Node::new(2, 1)]
        );
        assert_eq!(rim(&part![1]), vec![Node::new(1, 1)]);
        assert!(rim(&Partition::empty()).is_empty());
    }

    #[test]
    fn l_edge_examples() {
        let e = l_edge(&part![2, 1], 2);
        assert_eq!(e.e_l, 3);
        assert_eq!(e.segment_ends, vec![1, 2]);
        assert_eq!(e.nodes[..2], [Node::new(1, 2), Node::new(1, 1)]);

        let e = l_edge(&part![4, 1], 3);
        assert_eq!(e.e_l, 4);
        assert_eq!(e.nodes, vec![Node::new(1, 4), Node::new(1, 3), Node::new(1, 2), Node::new(2, 1)]);
        assert_eq!(l_edge(&part![3, 3], 3).e_l, 3);
    }

    #[test]
    fn remove_l_edge_examples() {
        assert_eq!(remove_l_edge(&part![4, 1], 3), part![1]);
        assert_eq!(remove_l_edge(&part![4, 2], 5), part![1]);
        assert_eq!(remove_l_edge(&part![1], 2), Partition::empty());
    }

    #[test]
    fn component_examples() {
        assert_eq!(mullineux_components(&part![2, 2, 1, 1], 3), vec![part![2, 2], part![1, 1]]);
        assert_eq!(mullineux_components(&part![3, 3], 3), vec![part![3, 3]]);
        assert_eq!(mullineux_components(&part![4, 1], 3), vec![part![4], part![1]]);
    }

    #[test]
    fn connectedness_examples() {
        assert!(is_edge_l_connected(&part![3, 1], 3));
        assert!(!is_edge_l_connected(&part![4, 1], 3));
        assert!(is_edge_l_connected(&part![2], 2));
        assert!(is_edge_l_connected(&Partition::empty(), 2));
    }
}
