use modpart::{
    distinguished_decomposition, enumerate_special, is_distinguished, is_m_good, is_m_special, m_special,
    mullineux_length, partitions_of, partitions_up_to, phi_contains, verify_decomposition, GoodStatus,
    Partition, PartitionsOf,
};

/// Every `(nu, m')` with `nu` nonzero, contained in `lambda` and `m'`-distinguished.
fn distinguished_pieces(lambda: &Partition, l: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for d in 1..=lambda.degree() {
        for nu in PartitionsOf::new(d, Some(lambda.len()), Some(lambda.first())) {
            if !lambda.contains(&nu) {
                continue;
            }
            for m in 1..l {
                if is_distinguished(&nu, m, l).unwrap() {
                    out.push((nu.clone(), m));
                }
            }
        }
    }
    out
}

/// Brute-force existence: multisets of pieces with weight at most `m` summing to `lambda`.
fn brute_decomposable(lambda: &Partition, m: usize, l: usize) -> bool {
    let pieces = distinguished_pieces(lambda, l);
    let target: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    fn rec(pieces: &[(Partition, usize)], start: usize, rest: &mut Vec<i64>, budget: usize) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        for k in start..pieces.len() {
            let (nu, w) = &pieces[k];
            if *w > budget {
                continue;
            }
            if nu.parts().iter().enumerate().any(|(i, &x)| rest[i] < x as i64) {
                continue;
            }
            for (i, &x) in nu.parts().iter().enumerate() {
                rest[i] -= x as i64;
            }
            let ok = rec(pieces, k, rest, budget - w);
            for (i, &x) in nu.parts().iter().enumerate() {
                rest[i] += x as i64;
            }
            if ok {
                return true;
            }
        }
        false
    }
    let mut rest = target;
    rec(&pieces, 0, &mut rest, m)
}

#[test]
fn special_iff_brute_force_decomposition() {
    for l in [2, 3, 5] {
        for m in 1..=4 {
            for lambda in partitions_up_to(10) {
                let special = m_special(&lambda, m, l);
                assert_eq!(special, brute_decomposable(&lambda, m, l), "{lambda} m={m} l={l}");
                let witness = distinguished_decomposition(&lambda, m, l);
                assert_eq!(special, witness.is_some());
                if let Some(w) = witness {
                    assert!(verify_decomposition(&lambda, m, l, &w), "{lambda} {w:?}");
                    assert!(w.iter().all(|(mi, _)| 0 < *mi && *mi < l));
                }
            }
        }
    }
}

#[test]
fn restricted_witness_uses_mullineux_length() {
    for l in [2, 3, 5] {
        for lambda in partitions_up_to(10).filter(|p| p.is_restricted(l)) {
            let len = mullineux_length(&lambda.transpose(), l).unwrap();
            let Some(w) = distinguished_decomposition(&lambda, len.max(1), l) else {
                panic!("{lambda} has no witness at its own Mullineux length");
            };
            let nonzero: usize = w.iter().filter(|(_, p)| !p.is_empty()).map(|(m, _)| m).sum();
            assert_eq!(nonzero, len);
            assert!(w.iter().all(|(_, p)| p.is_restricted(l)));
        }
    }
}

#[test]
fn restricted_distinguished_are_special() {
    for l in 2..=5 {
        for m in 1..l {
            for lambda in partitions_up_to(10).filter(|p| p.is_restricted(l)) {
                let dist = is_distinguished(&lambda, m, l).unwrap();
                if dist {
                    assert!(m_special(&lambda, m, l), "{lambda} m={m} l={l}");
                }
                assert_eq!(dist, phi_contains(&lambda.transpose(), l - m, l).unwrap(), "{lambda}");
            }
        }
    }
}

#[test]
fn dagger_preserves_distinguished() {
    for l in 2..=5 {
        for m in 1..l {
            for lambda in partitions_up_to(10).filter(|p| !p.is_empty()) {
                if !is_distinguished(&lambda, m, l).unwrap() {
                    continue;
                }
                let n = lambda.len();
                let dag = lambda.dagger(m, l, n).unwrap();
                assert!(is_distinguished(&dag, m, l).unwrap(), "{lambda} -> {dag}");
                assert_eq!(dag.dagger(m, l, n).unwrap(), lambda);
            }
        }
    }
}

#[test]
fn additivity_and_monotonicity() {
    for l in [2, 3, 5] {
        let all: Vec<Partition> = partitions_up_to(8).collect();
        for m1 in 1..=2 {
            for m2 in 1..=2 {
                let left: Vec<_> = all.iter().filter(|p| m_special(p, m1, l)).collect();
                let right: Vec<_> = all.iter().filter(|p| m_special(p, m2, l)).collect();
                for a in &left {
                    for b in &right {
                        if a.degree() + b.degree() <= 8 {
                            assert!(m_special(&a.sum(b), m1 + m2, l), "{a}+{b}");
                        }
                    }
                }
            }
        }
        for lambda in &all {
            for m in 1..4 {
                if m_special(lambda, m, l) {
                    assert!(m_special(lambda, m + 1, l));
                }
            }
        }
    }
}

#[test]
fn reciprocity_and_row_removal() {
    for l in [2, 3, 5] {
        for m in 1..=3 {
            let bound = m * (l - 1);
            for lambda in partitions_up_to(8) {
                let special = m_special(&lambda, m, l);
                if lambda.first() <= bound {
                    for n in lambda.len().max(1)..=lambda.len() + 2 {
                        let dag = lambda.dagger(m, l, n).unwrap();
                        assert_eq!(special, m_special(&dag, m, l), "{lambda} n={n}");
                    }
                }
                if !lambda.is_empty() && lambda.first() == bound {
                    let tail = lambda.rows(1, lambda.len());
                    assert_eq!(special, m_special(&tail, m, l), "{lambda}");
                }
                if special && !lambda.is_empty() {
                    assert!(m_special(&lambda.rows(0, lambda.len() - 1), m, l));
                    assert!(m_special(&lambda.rows(1, lambda.len()), m, l));
                    for s in lambda.suitable_nodes(l) {
                        assert!(m_special(&lambda.remove_node(s).unwrap(), m, l), "{lambda} {s}");
                    }
                }
            }
        }
    }
}

#[test]
fn bound_equivalence_at_n_factors() {
    for l in [2, 3] {
        for n in 1..=3 {
            for lambda in partitions_up_to(10).filter(|p| p.len() <= n) {
                assert_eq!(
                    lambda.first() <= n * (l - 1),
                    distinguished_decomposition(&lambda, n, l).is_some(),
                    "{lambda} n={n} l={l}"
                );
            }
        }
    }
}

#[test]
fn good_classifier_never_unknown_below_bound() {
    for l in [2, 3, 5] {
        for m in 1..=3 {
            for lambda in partitions_up_to(9) {
                let v = is_m_good(&lambda, m, l, None).unwrap();
                if lambda.is_restricted(l) || lambda.first() <= m * (l - 1) {
                    assert_ne!(v.status, GoodStatus::Unknown, "{lambda}");
                }
                if lambda.first() <= m * (l - 1) {
                    assert_eq!(v.status == GoodStatus::Yes, m_special(&lambda, m, l));
                }
            }
        }
    }
}

#[test]
fn oracle_cross_check_on_restricted() {
    for l in [2, 3] {
        for r in 0..=7 {
            let d = modpart::decomposition_matrix(r, l).unwrap();
            for lambda in partitions_of(r).filter(|p| p.is_restricted(l)) {
                for m in 1..=3 {
                    let v = is_m_good(&lambda, m, l, Some(&d)).unwrap();
                    assert_eq!(v.provenance, "restricted-mull-length+llt-oracle");
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_filter() {
    for l in [2, 3] {
        for m in 1..=3 {
            for d in 0..=9 {
                let listed = enumerate_special(m, l, d, false);
                let filtered: Vec<_> = partitions_of(d).filter(|p| is_m_special(p, m, l).special).collect();
                assert_eq!(listed, filtered);
                assert!(listed.windows(2).all(|w| w[0] > w[1]));
                let restricted = enumerate_special(m, l, d, true);
                assert!(restricted.iter().all(|p| p.is_restricted(l) && listed.contains(p)));
            }
        }
    }
}
