use modpart::character::{
    complete_char, frobenius_stretch, monomials_to_schur, pieri_e, pieri_h, schur_to_monomials,
    truncated_power_char, truncated_tensor_char, truncated_tensor_monomials, verify_graded_free_identity,
    Kostka, MonomialChar, SchurExpansion,
};
use modpart::{partitions_of, Partition, PartitionsOf};

/// Counts semistandard tableaux of shape `lambda` and content `weight` by filling cells.
fn ssyt_count(lambda: &Partition, weight: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = lambda.nodes().map(|n| (n.row - 1, n.col - 1)).collect();
    let mut grid = vec![vec![0usize; lambda.first()]; lambda.len()];
    let mut left = weight.to_vec();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return u64::from(left.iter().all(|&x| x == 0));
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if j > 0 && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            left[v - 1] -= 1;
            total += rec(k + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

#[test]
fn kostka_matches_tableau_count() {
    let mut k = Kostka::new();
    for d in 0..=7 {
        for lambda in partitions_of(d) {
            for mu in partitions_of(d) {
                assert_eq!(k.count(&lambda, mu.parts()), ssyt_count(&lambda, mu.parts()), "{lambda} {mu}");
            }
            // content order does not matter
            let rev: Vec<usize> = lambda.parts().iter().rev().copied().collect();
            let sorted = lambda.parts().to_vec();
            assert_eq!(k.count(&lambda, &rev), k.count(&lambda, &sorted));
        }
    }
}

#[test]
fn kostka_unitriangular() {
    let mut k = Kostka::new();
    for d in 0..=8 {
        for lambda in partitions_of(d).filter(|p| p.len() <= 4) {
            assert_eq!(k.count(&lambda, lambda.parts()), 1);
            for mu in PartitionsOf::new(d, Some(4), None) {
                if k.count(&lambda, mu.parts()) != 0 {
                    assert!(mu.dominance_leq(&lambda).unwrap());
                }
            }
        }
    }
}

#[test]
fn schur_round_trip() {
    for n in 1..=4 {
        for d in 0..=8 {
            for lambda in PartitionsOf::new(d, Some(n), None) {
                let m = schur_to_monomials(&lambda, n).unwrap();
                let s = monomials_to_schur(&m).unwrap();
                assert_eq!(s.support(), vec![lambda.clone()]);
                assert_eq!(s.coeff(&lambda), 1);
                assert_eq!(s.to_monomials().unwrap(), m);
            }
        }
    }
}

#[test]
fn pieri_minimal_term_is_sorted_insertion() {
    for n in 2..=4 {
        for d in 0..=8 {
            for b in PartitionsOf::new(d, Some(n - 1), None) {
                for a in 0..=8 - d {
                    let expansion = pieri_h(&b, a, n);
                    let support = expansion.support();
                    let mut values = vec![a];
                    values.extend_from_slice(b.parts());
                    let q = Partition::q_arrange(&values);
                    assert!(support.contains(&q), "{b} + {a}");
                    for mu in &support {
                        assert!(q.dominance_leq(mu).unwrap(), "{q} not below {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn pieri_rules_match_products() {
    for n in 1..=3 {
        for d in 0..=5 {
            for lambda in PartitionsOf::new(d, Some(n), None) {
                let s = schur_to_monomials(&lambda, n).unwrap();
                for a in 0..=3 {
                    let h = complete_char(a, n);
                    let want = monomials_to_schur(&s.mul(&h)).unwrap();
                    assert_eq!(pieri_h(&lambda, a, n), want);
                    let e = schur_to_monomials(&Partition::rectangle(1, a), n);
                    if let Ok(e) = e {
                        let want = monomials_to_schur(&s.mul(&e)).unwrap();
                        assert_eq!(pieri_e(&lambda, a, n), want);
                    } else {
                        assert!(pieri_e(&lambda, a, n).support().iter().all(|p| p.len() <= n));
                    }
                }
            }
        }
    }
}

#[test]
fn graded_free_identity_on_grid() {
    for m in 1..=3 {
        for n in 1..=3 {
            for l in [2, 3] {
                for r in 0..=10 {
                    assert!(verify_graded_free_identity(m, n, l, r), "m={m} n={n} l={l} r={r}");
                }
            }
        }
    }
}

#[test]
fn generating_function_factorisation() {
    // prod 1/(1-x_k) = prod (1 + ... + x_k^{l-1}) * prod 1/(1-x_k^l), degree by degree
    for n in 1..=3 {
        for l in [2, 3] {
            for r in 0..=12 {
                let lhs = complete_char(r, n);
                let mut rhs = MonomialChar::zero(n);
                for j in 0..=r / l {
                    let t = truncated_power_char(r - l * j, n, l);
                    rhs = rhs.add(&t.mul(&frobenius_stretch(&complete_char(j, n), l)));
                }
                assert_eq!(lhs, rhs, "n={n} l={l} r={r}");
            }
        }
    }
}

#[test]
fn truncated_tensor_support_and_top_degree() {
    for m in 1..=3 {
        for n in 1..=3 {
            for l in [2, 3] {
                let top = m * n * (l - 1);
                for r in 0..=top.min(10) {
                    let s = truncated_tensor_char(m, n, l, r);
                    let weights = truncated_tensor_monomials(m, n, l, r);
                    assert!(weights.terms().all(|(_, c)| c > 0));
                    for (p, _) in s.terms() {
                        assert!(p.first() <= m * (l - 1));
                        assert!(p.len() <= n);
                    }
                }
                if top <= 10 {
                    let s = truncated_tensor_char(m, n, l, top);
                    let mut want = SchurExpansion::zero(n);
                    want.add_term(Partition::rectangle(m * (l - 1), n), 1);
                    assert_eq!(s, want);
                }
            }
        }
    }
}

#[test]
fn truncated_tensor_schur_coefficients_can_be_negative() {
    let s = truncated_tensor_char(1, 3, 3, 3);
    assert_eq!(s.coeff(&Partition::new(vec![2, 1]).unwrap()), 1);
    assert_eq!(s.coeff(&Partition::new(vec![1, 1, 1]).unwrap()), -1);
}

#[test]
fn stretch_is_multiplicative() {
    for n in 1..=3 {
        for a in 0..=3 {
            for b in 0..=3 {
                let x = complete_char(a, n);
                let y = truncated_power_char(b, n, 3);
                for l in [2, 3] {
                    assert_eq!(
                        frobenius_stretch(&x.mul(&y), l),
                        frobenius_stretch(&x, l).mul(&frobenius_stretch(&y, l))
                    );
                }
            }
        }
    }
}

#[test]
fn coefficients_stable_in_n() {
    for m in 1..=2 {
        for l in [2, 3] {
            for r in 0..=5 {
                let big = truncated_tensor_char(m, r.max(1), l, r);
                for n in r.max(1)..=r + 2 {
                    let s = truncated_tensor_char(m, n, l, r);
                    let a: Vec<_> = s.terms().map(|(p, c)| (p.clone(), c)).collect();
                    let b: Vec<_> = big.terms().map(|(p, c)| (p.clone(), c)).collect();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
