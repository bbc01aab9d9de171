use modpart::edge::edge_length;
use modpart::{
    add_l_edge, e_l_from_components, find_co_suitable_node, find_suitable_node_nonrestricted,
    is_edge_l_connected, l_core, l_edge, mullineux, mullineux_components, mullineux_length, mullineux_symbol,
    partitions_of, partitions_up_to, phi_contains, remove_l_edge, rim, rim_hooks, Node, Partition,
    PartitionsOf,
};

fn regular_up_to(d: usize, l: usize) -> impl Iterator<Item = Partition> {
    partitions_up_to(d).filter(move |p| p.is_regular(l))
}

/// Every `xi` of the right degree and length whose edge removal gives `nu`.
fn brute_extensions(nu: &Partition, a: usize, r: usize, l: usize) -> Vec<Partition> {
    PartitionsOf::new(nu.degree() + a, Some(r), None)
        .filter(|xi| xi.len() == r && xi.is_regular(l))
        .filter(|xi| l_edge(xi, l).e_l == a && remove_l_edge(xi, l) == *nu)
        .collect()
}

#[test]
fn rim_has_edge_length_nodes() {
    for p in partitions_up_to(12) {
        let nodes = rim(&p);
        assert_eq!(nodes.len(), edge_length(&p));
        for n in &nodes {
            assert!(!p.contains_node(Node::new(n.row + 1, n.col + 1)));
        }
        let count = p.nodes().filter(|n| !p.contains_node(Node::new(n.row + 1, n.col + 1))).count();
        assert_eq!(count, nodes.len(), "{p}");
    }
}

#[test]
fn edge_removal_is_a_partition_and_counts_agree() {
    for l in [2, 3, 5] {
        for p in partitions_up_to(14) {
            let e = l_edge(&p, l);
            let q = remove_l_edge(&p, l);
            assert_eq!(q.degree() + e.e_l, p.degree());
            assert_eq!(e.e_l, e_l_from_components(&p, l), "{p} l={l}");
        }
    }
}

#[test]
fn components_concatenate_back() {
    for l in [2, 3, 4] {
        for p in partitions_up_to(12).filter(|p| !p.is_empty()) {
            let comps = mullineux_components(&p, l);
            let mut joined: Vec<usize> = Vec::new();
            for c in &comps {
                joined.extend_from_slice(c.parts());
            }
            assert_eq!(joined, p.parts());
            for c in &comps[..comps.len() - 1] {
                // each non-final component is cut exactly where the first l-segment ends
                assert_eq!(l_edge(c, l).e_l, l, "{p} l={l}");
            }
        }
    }
}

#[test]
fn add_l_edge_matches_brute_force() {
    for l in [2, 3, 4] {
        for mu in regular_up_to(10, l).filter(|p| !p.is_empty()) {
            let symbol = mullineux_symbol(&mu, l).unwrap();
            let mut nu = Partition::empty();
            for &(a, r) in symbol.rows.iter().rev() {
                let s = a - r + usize::from(a % l != 0);
                let brute = brute_extensions(&nu, a, s, l);
                assert_eq!(brute.len(), 1, "nu={nu} a={a} s={s} l={l}");
                assert_eq!(add_l_edge(&nu, a, s, l).unwrap(), brute[0]);
                nu = brute[0].clone();
            }
        }
    }
}

#[test]
fn add_l_edge_inverts_removal() {
    for l in [2, 3, 5] {
        for xi in regular_up_to(11, l).filter(|p| !p.is_empty()) {
            let nu = remove_l_edge(&xi, l);
            let a = l_edge(&xi, l).e_l;
            assert_eq!(add_l_edge(&nu, a, xi.len(), l).unwrap(), xi);
        }
    }
}

#[test]
fn mullineux_is_an_involution() {
    for l in 2..=5 {
        for mu in regular_up_to(12, l) {
            let m = mullineux(&mu, l).unwrap();
            assert_eq!(m.degree(), mu.degree());
            assert!(m.is_regular(l));
            assert_eq!(mullineux(&m, l).unwrap(), mu, "l={l}");
            assert_eq!(mullineux_length(&mu, l).unwrap(), m.len());
            if edge_length(&mu) < l {
                assert_eq!(m, mu.transpose());
            }
        }
    }
}

#[test]
fn mullineux_length_is_additive_over_components() {
    for l in 2..=5 {
        for mu in regular_up_to(12, l).filter(|p| !p.is_empty()) {
            let total: usize =
                mullineux_components(&mu, l).iter().map(|c| mullineux_length(c, l).unwrap()).sum();
            assert_eq!(total, mullineux_length(&mu, l).unwrap(), "{mu} l={l}");
        }
    }
}

#[test]
fn phi_sets_edges_and_bijection() {
    for l in 2..=5 {
        for m in 1..l {
            for d in 0..=12 {
                let source: Vec<_> = partitions_of(d).filter(|p| phi_contains(p, m, l).unwrap()).collect();
                let mut image: Vec<_> = source.iter().map(|p| mullineux(p, l).unwrap()).collect();
                let mut target: Vec<_> =
                    partitions_of(d).filter(|p| phi_contains(p, l - m, l).unwrap()).collect();
                for p in &source {
                    assert!(p.is_regular(l));
                    assert!(l_edge(p, l).e_l <= l);
                    assert!(phi_contains(&remove_l_edge(p, l), m, l).unwrap());
                }
                image.sort();
                target.sort();
                assert_eq!(image, target, "m={m} l={l} d={d}");
            }
        }
    }
}

#[test]
fn connected_non_divisible_keeps_first_part_in_core() {
    for l in [2, 3] {
        for p in partitions_up_to(10).filter(|p| !p.is_empty()) {
            if !is_edge_l_connected(&p, l) || l_edge(&p, l).e_l.is_multiple_of(l) {
                continue;
            }
            assert_eq!(l_core(&p, l).first(), p.first(), "{p} l={l}");
            for hook in rim_hooks(&p, l) {
                let q = modpart::remove_rim_hook(&p, &hook).unwrap();
                assert!(is_edge_l_connected(&q, l), "{p} -> {q}");
                assert_ne!(l_edge(&q, l).e_l % l, 0);
                assert_eq!(q.first(), p.first());
            }
        }
    }
}

#[test]
fn first_column_removal_in_divisible_case() {
    for l in [2, 3] {
        for p in regular_up_to(10, l).filter(|p| !p.is_empty()) {
            if !is_edge_l_connected(&p, l) || !l_edge(&p, l).e_l.is_multiple_of(l) {
                continue;
            }
            let stripped = Partition::new(p.parts().iter().map(|x| x - 1).collect()).unwrap();
            assert_eq!(
                mullineux_length(&stripped, l).unwrap(),
                mullineux_length(&p, l).unwrap(),
                "{p} l={l}"
            );
        }
    }
}

#[test]
fn short_edge_complement_residues() {
    // nodes of the rectangle lambda_1 x len outside lambda avoid the residue of (1, lambda_1)
    for l in [2, 3, 4, 5] {
        for p in regular_up_to(12, l).filter(|p| !p.is_empty()) {
            if l_edge(&p, l).e_l > l {
                continue;
            }
            let forbidden = Node::new(1, p.first()).residue(l);
            for i in 1..=p.len() {
                for j in p.row(i) + 1..=p.first() {
                    assert_ne!(Node::new(i, j).residue(l), forbidden, "{p} l={l}");
                }
            }
        }
    }
}

#[test]
fn co_suitable_node_postconditions() {
    for l in [2, 3] {
        for mu in regular_up_to(10, l) {
            if mu.is_empty() || is_edge_l_connected(&mu, l) {
                continue;
            }
            let r = find_co_suitable_node(&mu, l).unwrap();
            assert!(mu.co_suitable_nodes(l).contains(&r), "{mu} {r} l={l}");
            let reduced = mu.remove_node(r).unwrap();
            assert!(reduced.is_regular(l));
            assert_eq!(mullineux_length(&reduced, l).unwrap(), mullineux_length(&mu, l).unwrap());
        }
    }
}

#[test]
fn suitable_node_postconditions() {
    let mut checked = 0;
    for l in [2, 3] {
        for lambda in partitions_up_to(12) {
            let (low, high) = lambda.restricted_decompose(l);
            let qualifies = !lambda.is_restricted(l)
                && high.len() <= low.len()
                && !is_edge_l_connected(&low.transpose(), l);
            let found = find_suitable_node_nonrestricted(&lambda, l);
            if !qualifies {
                assert!(found.is_err());
                continue;
            }
            let s = found.unwrap();
            let i = s.row;
            assert!(lambda.suitable_nodes(l).contains(&s), "{lambda} {s} l={l}");
            let s0 = Node::new(i, low.row(i));
            assert!(low.suitable_nodes(l).contains(&s0));
            assert!(low.remove_node(s0).unwrap().is_restricted(l));
            let mu = low.transpose();
            let r = s0.transposed();
            assert!(mu.co_suitable_nodes(l).contains(&r));
            let mu_r = mu.remove_node(r).unwrap();
            assert!(mu_r.is_regular(l));
            assert_eq!(mullineux_length(&mu_r, l).unwrap(), mullineux_length(&mu, l).unwrap());
            checked += 1;
        }
    }
    assert!(checked > 0);
}
