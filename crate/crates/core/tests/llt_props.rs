use modpart::llt::{canonical_basis, ladder_monomial};
use modpart::{
    decomposition_matrix, l_core, mullineux, mullineux_length, nabla_multiplicity, partitions_of,
    LaurentPoly, Partition,
};

fn grid() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for l in [2, 3] {
        for r in 0..=8 {
            out.push((l, r));
        }
    }
    for l in [4, 5] {
        for r in 0..=6 {
            out.push((l, r));
        }
    }
    out
}

#[test]
fn ladder_monomials_have_unit_leading_term() {
    for l in [2, 3] {
        for r in 0..=8 {
            for mu in partitions_of(r).filter(|p| p.is_regular(l)) {
                let a = ladder_monomial(&mu, l).unwrap();
                assert_eq!(a.coeff(&mu), LaurentPoly::one());
                for (nu, _) in a.iter() {
                    assert!(nu.dominance_leq(&mu).unwrap(), "{nu} in A({mu})");
                }
            }
        }
    }
}

#[test]
fn canonical_columns_are_positive_and_bar_invariant_shape() {
    for (l, r) in grid() {
        for (mu, g) in canonical_basis(r, l).unwrap() {
            for (lambda, c) in g.iter() {
                if *lambda == mu {
                    assert_eq!(*c, LaurentPoly::one());
                } else {
                    assert!(c.terms().all(|(e, k)| e > 0 && k > 0), "{lambda} in G({mu})");
                }
            }
        }
    }
}

#[test]
fn unitriangular_with_dominance_support() {
    for (l, r) in grid() {
        let d = decomposition_matrix(r, l).unwrap();
        d.check_unitriangular().unwrap();
        assert_eq!(d.cols.len(), d.rows.iter().filter(|p| p.is_regular(l)).count());
    }
}

#[test]
fn sign_twist_matches_mullineux() {
    for l in [2, 3] {
        for r in 0..=8 {
            let d = decomposition_matrix(r, l).unwrap();
            for lambda in &d.rows {
                for mu in &d.cols {
                    let twisted = mullineux(mu, l).unwrap();
                    assert_eq!(
                        d.entry(lambda, mu),
                        d.entry(&lambda.transpose(), &twisted),
                        "l={l} row {lambda} col {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn entries_respect_blocks() {
    for (l, r) in grid() {
        let d = decomposition_matrix(r, l).unwrap();
        for (i, j, _) in d.nonzero_entries() {
            assert_eq!(l_core(&d.rows[i], l), l_core(&d.cols[j], l));
        }
    }
}

#[test]
fn column_label_is_top_row_for_restricted_labels() {
    for l in [2, 3] {
        for r in 0..=8 {
            let d = decomposition_matrix(r, l).unwrap();
            for lambda in d.rows.iter().filter(|p| p.is_restricted(l)) {
                let col = mullineux(&lambda.transpose(), l).unwrap();
                let support: Vec<&Partition> =
                    d.rows.iter().filter(|t| d.entry(t, &col).unwrap() > 0).collect();
                let maximal: Vec<&&Partition> = support
                    .iter()
                    .filter(|t| support.iter().all(|u| u == *t || !t.dominance_leq(u).unwrap()))
                    .collect();
                assert_eq!(maximal, vec![&&col]);
            }
        }
    }
}

#[test]
fn mullineux_length_matches_oracle() {
    for l in [2, 3] {
        for r in 0..=8 {
            let d = decomposition_matrix(r, l).unwrap();
            for lambda in d.rows.iter().filter(|p| p.is_restricted(l)) {
                let len = mullineux_length(&lambda.transpose(), l).unwrap();
                for m in 0..=r {
                    let witnessed =
                        d.rows.iter().any(|t| t.len() <= m && nabla_multiplicity(&d, t, lambda).unwrap() > 0);
                    assert_eq!(len <= m, witnessed, "{lambda} m={m} l={l}");
                }
            }
        }
    }
}

#[test]
fn core_length_criterion() {
    for l in [2, 3] {
        for r in 1..=8 {
            let d = decomposition_matrix(r, l).unwrap();
            for lambda in d.rows.iter().filter(|p| p.is_restricted(l)) {
                let m = lambda.len();
                let shorter =
                    d.rows.iter().any(|t| t.len() < m && nabla_multiplicity(&d, t, lambda).unwrap() > 0);
                assert_eq!(shorter, l_core(lambda, l).len() < m, "{lambda} l={l}");
            }
        }
    }
}
