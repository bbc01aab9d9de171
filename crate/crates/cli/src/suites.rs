//! Exhaustive cross-check suites. Each suite enumerates a bounded grid,
//! checks inputs in parallel and returns failures sorted smallest first.

use std::fmt::Debug;

use modpart::character::{pieri_h, truncated_tensor_char, verify_graded_free_identity, Kostka};
use modpart::{
    distinguished_decomposition, edge_length, find_co_suitable_node, find_suitable_node_nonrestricted,
    is_distinguished, is_edge_l_connected, is_m_good, is_m_special, l_core, l_core_by, l_edge, m_special,
    mullineux, mullineux_length, nabla_multiplicity, partitions_of, partitions_up_to, phi_contains,
    remove_l_edge, remove_rim_hook, rim_hooks, verify_decomposition, DecompositionMatrix, GoodStatus, Node,
    Partition, PartitionsOf,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::cache::{degree_cap, MatrixStore};
use crate::error::{CliError, Result};
use crate::formats::{Failure, SuiteParams, SuiteReport};

/// Suite names with the acceptance criterion each one decides.
pub const SUITES: [(&str, &str); 9] = [
    ("mullineux-involution", "A1"),
    ("llt-mullineux-crosscheck", "A2"),
    ("phi-bijection", "A3"),
    ("special-decomposition", "A4"),
    ("restricted-good-oracle", "A5"),
    ("reciprocity-removal", "A6"),
    ("edge-structure", "A7"),
    ("characters", "A8"),
    ("l-core", "A9"),
];

/// Largest degree a combinatorial suite accepts without `--unsafe-large`.
pub const DEGREE_CAP: usize = 14;

/// The acceptance grid for `name`.
pub fn default_params(name: &str) -> Option<SuiteParams> {
    let p = |l: &[usize], m: &[usize], n: &[usize], max_degree| SuiteParams {
        l: l.to_vec(),
        m: m.to_vec(),
        n: n.to_vec(),
        max_degree,
        oracle_max_degree: None,
        orders: None,
        seed: None,
    };
    Some(match name {
        "mullineux-involution" => p(&[2, 3, 4, 5], &[], &[], 12),
        "llt-mullineux-crosscheck" => p(&[2, 3], &[], &[], 8),
        "phi-bijection" => p(&[2, 3, 4, 5], &[], &[], 12),
        "special-decomposition" => p(&[2, 3, 5], &[0, 1, 2, 3, 4], &[], 10),
        "restricted-good-oracle" => p(&[2, 3], &[], &[], 8),
        "reciprocity-removal" => p(&[2, 3, 5], &[1, 2, 3], &[], 8),
        "edge-structure" => SuiteParams { oracle_max_degree: Some(8), ..p(&[2, 3], &[], &[], 10) },
        "characters" => p(&[2, 3], &[1, 2, 3], &[1, 2, 3], 10),
        "l-core" => SuiteParams { orders: Some(20), seed: Some(0x5eed), ..p(&[2, 3], &[], &[], 8) },
        _ => return None,
    })
}

pub fn unknown_suite(name: &str) -> CliError {
    let known: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
    CliError::Usage(format!("unknown suite {name:?}; known: {}", known.join(", ")))
}

/// Rejects grids beyond the default caps unless `unsafe_large` is set.
pub fn check_caps(name: &str, params: &SuiteParams, unsafe_large: bool) -> Result<()> {
    if params.l.iter().any(|&l| l < 2) {
        return Err(CliError::Usage("every l must be at least 2".into()));
    }
    if unsafe_large {
        return Ok(());
    }
    let too_big = |what: &str, d: usize, cap: usize| {
        CliError::Usage(format!("{what} {d} exceeds the cap {cap}; pass --unsafe-large to override"))
    };
    if params.max_degree > DEGREE_CAP {
        return Err(too_big("degree", params.max_degree, DEGREE_CAP));
    }
    let oracle_degree = match name {
        "llt-mullineux-crosscheck" | "restricted-good-oracle" => Some(params.max_degree),
        "edge-structure" => params.oracle_max_degree,
        _ => None,
    };
    if let Some(d) = oracle_degree {
        for &l in &params.l {
            if d > degree_cap(l) {
                return Err(too_big(&format!("oracle degree at l={l}"), d, degree_cap(l)));
            }
        }
    }
    Ok(())
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<(usize, Failure)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    fn fail(&mut self, degree: usize, input: String, expected: String, actual: String) {
        self.failures.push((degree, Failure { input, expected, actual }));
    }

    fn expect<T: PartialEq + Debug>(
        &mut self,
        degree: usize,
        input: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.fail(degree, input(), format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    fn ok<T>(&mut self, degree: usize, input: impl FnOnce() -> String, r: modpart::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(degree, input(), "success".into(), format!("error: {e}"));
                None
            }
        }
    }
}

fn run_tasks<T: Sync>(tasks: Vec<T>, f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    tasks.par_iter().map(f).reduce(Tally::default, Tally::merge)
}

fn pairs(ls: &[usize], max_degree: usize) -> Vec<(usize, usize)> {
    ls.iter().flat_map(|&l| (0..=max_degree).map(move |d| (l, d))).collect()
}

/// Runs the named suite. `elapsed_ms` is left unset.
pub fn run_suite(name: &str, params: &SuiteParams, store: &MatrixStore) -> Result<SuiteReport> {
    let tally = match name {
        "mullineux-involution" => involution(params),
        "llt-mullineux-crosscheck" => llt_crosscheck(params, store)?,
        "phi-bijection" => phi_bijection(params),
        "special-decomposition" => special_decomposition(params),
        "restricted-good-oracle" => restricted_good(params, store)?,
        "reciprocity-removal" => reciprocity_removal(params),
        "edge-structure" => edge_structure(params, store)?,
        "characters" => characters(params),
        "l-core" => core_suite(params),
        _ => return Err(unknown_suite(name)),
    };
    let mut failures = tally.failures;
    failures.sort();
    Ok(SuiteReport {
        suite: name.to_string(),
        params: params.clone(),
        checked: tally.checked,
        failures: failures.into_iter().map(|(_, f)| f).collect(),
        elapsed_ms: None,
    })
}

fn involution(params: &SuiteParams) -> Tally {
    run_tasks(pairs(&params.l, params.max_degree), |&(l, d)| {
        let mut t = Tally::default();
        for mu in partitions_of(d).filter(|p| p.is_regular(l)) {
            t.checked += 1;
            let input = || format!("mu={mu} l={l}");
            let Some(image) = t.ok(d, input, mullineux(&mu, l)) else { continue };
            t.expect(d, || format!("{} degree", input()), d, image.degree());
            t.expect(d, || format!("{} regular image {image}", input()), true, image.is_regular(l));
            if let Some(back) = t.ok(d, input, mullineux(&image, l)) {
                t.expect(d, || format!("{} twice", input()), mu.clone(), back);
            }
            if edge_length(&mu) < l {
                t.expect(d, || format!("{} short edge", input()), mu.transpose(), image);
            }
        }
        t
    })
}

fn matrices(
    store: &MatrixStore,
    ls: &[usize],
    max_degree: usize,
) -> Result<Vec<std::sync::Arc<DecompositionMatrix>>> {
    pairs(ls, max_degree).into_par_iter().map(|(l, d)| store.get(l, d, false)).collect()
}

fn llt_crosscheck(params: &SuiteParams, store: &MatrixStore) -> Result<Tally> {
    let all = matrices(store, &params.l, params.max_degree)?;
    Ok(run_tasks(all, |matrix| {
        let (l, d) = (matrix.l, matrix.r);
        let mut t = Tally::default();
        t.ok(d, || format!("matrix l={l} r={d}"), matrix.check_unitriangular());
        for mu in &matrix.cols {
            let Some(twisted) = t.ok(d, || format!("mu={mu} l={l}"), mullineux(mu, l)) else { continue };
            for lambda in &matrix.rows {
                t.checked += 1;
                t.expect(
                    d,
                    || {
                        format!(
                            "row {lambda} col {mu} l={l} against row {} col {twisted}",
                            lambda.transpose()
                        )
                    },
                    matrix.entry(lambda, mu),
                    matrix.entry(&lambda.transpose(), &twisted),
                );
            }
        }
        for lambda in matrix.rows.iter().filter(|p| p.is_restricted(l)) {
            t.checked += 1;
            let Some(col) = t.ok(d, || format!("lambda={lambda} l={l}"), mullineux(&lambda.transpose(), l))
            else {
                continue;
            };
            let support: Vec<&Partition> =
                matrix.rows.iter().filter(|r| matrix.entry(r, &col).unwrap_or(0) > 0).collect();
            let maximal: Vec<Partition> = support
                .iter()
                .filter(|a| support.iter().all(|b| b == *a || !a.dominance_leq(b).unwrap_or(true)))
                .map(|p| (*p).clone())
                .collect();
            t.expect(
                d,
                || format!("maximal rows of column {col} for lambda={lambda} l={l}"),
                vec![col.clone()],
                maximal,
            );
        }
        t
    }))
}

fn phi_bijection(params: &SuiteParams) -> Tally {
    let tasks: Vec<(usize, usize, usize)> = params
        .l
        .iter()
        .flat_map(|&l| (1..l).flat_map(move |m| (0..=params.max_degree).map(move |d| (l, m, d))))
        .collect();
    run_tasks(tasks, |&(l, m, d)| {
        let mut t = Tally::default();
        let phi = |k: usize, p: &Partition| phi_contains(p, k, l).unwrap_or(false);
        let source: Vec<Partition> = partitions_of(d).filter(|p| phi(m, p)).collect();
        let mut target: Vec<Partition> = partitions_of(d).filter(|p| phi(l - m, p)).collect();
        let mut image = Vec::new();
        for p in &source {
            t.checked += 1;
            let input = || format!("{p} in Phi_{m} l={l}");
            t.expect(d, || format!("{} regular", input()), true, p.is_regular(l));
            let e = l_edge(p, l).e_l;
            t.expect(d, || format!("{} e_l={e} at most l", input()), true, e <= l);
            let rest = remove_l_edge(p, l);
            t.expect(d, || format!("{} edge removal {rest}", input()), true, phi(m, &rest));
            if let Some(q) = t.ok(d, input, mullineux(p, l)) {
                image.push(q);
            }
        }
        image.sort();
        target.sort();
        t.expect(d, || format!("Mull(Phi_{m}) at degree {d} l={l}"), target, image);
        t
    })
}

/// Every `(nu, k)` with `nu` nonzero, inside `lambda` and `k`-distinguished.
fn distinguished_pieces(lambda: &Partition, l: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for d in 1..=lambda.degree() {
        for nu in PartitionsOf::new(d, Some(lambda.len()), Some(lambda.first())) {
            if !lambda.contains(&nu) {
                continue;
            }
            for k in 1..l {
                if is_distinguished(&nu, k, l).unwrap_or(false) {
                    out.push((nu.clone(), k));
                }
            }
        }
    }
    out
}

/// Exhaustive search for a multiset of pieces of total weight at most `m` summing to `lambda`.
fn exhaustive_decomposable(lambda: &Partition, pieces: &[(Partition, usize)], m: usize) -> bool {
    fn rec(pieces: &[(Partition, usize)], start: usize, rest: &mut [usize], budget: usize) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        for k in start..pieces.len() {
            let (nu, w) = &pieces[k];
            if *w > budget || nu.parts().iter().zip(rest.iter()).any(|(&x, &r)| r < x) {
                continue;
            }
            for (i, &x) in nu.parts().iter().enumerate() {
                rest[i] -= x;
            }
            let found = rec(pieces, k, rest, budget - w);
            for (i, &x) in nu.parts().iter().enumerate() {
                rest[i] += x;
            }
            if found {
                return true;
            }
        }
        false
    }
    let mut rest = lambda.parts().to_vec();
    rec(pieces, 0, &mut rest, m)
}

fn special_decomposition(params: &SuiteParams) -> Tally {
    run_tasks(pairs(&params.l, params.max_degree), |&(l, d)| {
        let mut t = Tally::default();
        for lambda in partitions_of(d) {
            let pieces = distinguished_pieces(&lambda, l);
            for &m in &params.m {
                t.checked += 1;
                let input = || format!("lambda={lambda} m={m} l={l}");
                let special = m_special(&lambda, m, l);
                t.expect(
                    d,
                    || format!("{} exhaustive search", input()),
                    exhaustive_decomposable(&lambda, &pieces, m),
                    special,
                );
                let verdict = is_m_special(&lambda, m, l);
                t.expect(d, || format!("{} verdict", input()), special, verdict.special);
                match distinguished_decomposition(&lambda, m, l) {
                    Some(w) => {
                        let ok = special && verify_decomposition(&lambda, m, l, &w);
                        t.expect(d, || format!("{} witness {w:?}", input()), true, ok);
                    }
                    None => t.expect(d, || format!("{} witness", input()), false, special),
                }
                if lambda.is_restricted(l) && special {
                    // constructive witness: summands are restricted and their weight is the Mullineux length
                    let Some(len) = t.ok(d, input, mullineux_length(&lambda.transpose(), l)) else {
                        continue;
                    };
                    match distinguished_decomposition(&lambda, len.max(1), l) {
                        Some(w) => {
                            let weight: usize = w.iter().filter(|(_, p)| !p.is_empty()).map(|(k, _)| k).sum();
                            let ok = verify_decomposition(&lambda, len.max(1), l, &w)
                                && weight == len
                                && w.iter().all(|(_, p)| p.is_restricted(l));
                            t.expect(d, || format!("{} restricted witness {w:?}", input()), true, ok);
                        }
                        None => t.fail(d, input(), "restricted witness".into(), "none".into()),
                    }
                }
            }
        }
        t
    })
}

fn restricted_good(params: &SuiteParams, store: &MatrixStore) -> Result<Tally> {
    let all = matrices(store, &params.l, params.max_degree)?;
    Ok(run_tasks(all, |matrix| {
        let (l, d) = (matrix.l, matrix.r);
        let mut t = Tally::default();
        for lambda in matrix.rows.iter().filter(|p| p.is_restricted(l)) {
            let Some(len) =
                t.ok(d, || format!("lambda={lambda} l={l}"), mullineux_length(&lambda.transpose(), l))
            else {
                continue;
            };
            let mut shortest = None;
            for tau in &matrix.rows {
                let input = || format!("tau={tau} lambda={lambda} l={l}");
                if let Some(v) = t.ok(d, input, nabla_multiplicity(matrix, tau, lambda)) {
                    if v > 0 {
                        shortest = Some(shortest.map_or(tau.len(), |s: usize| s.min(tau.len())));
                    }
                }
            }
            for m in 0..=d {
                t.checked += 1;
                let witnessed = shortest.is_some_and(|s| s <= m);
                t.expect(d, || format!("lambda={lambda} m={m} l={l} Mull-length {len}"), len <= m, witnessed);
                if m > 0 {
                    let verdict = t.ok(
                        d,
                        || format!("is_m_good lambda={lambda} m={m} l={l}"),
                        is_m_good(lambda, m, l, Some(matrix)),
                    );
                    if let Some(v) = verdict {
                        t.expect(
                            d,
                            || format!("good verdict lambda={lambda} m={m} l={l}"),
                            witnessed,
                            v.status == GoodStatus::Yes,
                        );
                    }
                }
            }
        }
        t
    }))
}

fn reciprocity_removal(params: &SuiteParams) -> Tally {
    let mut tasks = Vec::new();
    for &l in &params.l {
        for &m in &params.m {
            for d in 0..=params.max_degree {
                tasks.push((l, m, d));
            }
        }
    }
    let per_input = run_tasks(tasks, |&(l, m, d)| {
        let mut t = Tally::default();
        let bound = m * (l - 1);
        for lambda in partitions_of(d) {
            t.checked += 1;
            let input = || format!("lambda={lambda} m={m} l={l}");
            let special = m_special(&lambda, m, l);
            if lambda.first() <= bound {
                for n in lambda.len().max(1)..=lambda.len() + 2 {
                    if let Some(dag) = t.ok(d, input, lambda.dagger(m, l, n)) {
                        t.expect(
                            d,
                            || format!("{} reflection n={n} -> {dag}", input()),
                            special,
                            m_special(&dag, m, l),
                        );
                    }
                }
            }
            if !lambda.is_empty() && lambda.first() == bound {
                let tail = lambda.rows(1, lambda.len());
                t.expect(d, || format!("{} tail {tail}", input()), special, m_special(&tail, m, l));
            }
            if special && !lambda.is_empty() {
                let top = lambda.rows(0, lambda.len() - 1);
                let bottom = lambda.rows(1, lambda.len());
                t.expect(d, || format!("{} drop last row {top}", input()), true, m_special(&top, m, l));
                t.expect(
                    d,
                    || format!("{} drop first row {bottom}", input()),
                    true,
                    m_special(&bottom, m, l),
                );
                for s in lambda.suitable_nodes(l) {
                    if let Some(q) = t.ok(d, input, lambda.remove_node(s)) {
                        t.expect(d, || format!("{} remove suitable {s}", input()), true, m_special(&q, m, l));
                    }
                }
            }
        }
        t
    });
    // additivity: (m1, m2)-special summands give an (m1 + m2)-special sum
    let mut tasks = Vec::new();
    for &l in &params.l {
        for &m1 in &params.m {
            for &m2 in &params.m {
                tasks.push((l, m1, m2));
            }
        }
    }
    let max = params.max_degree;
    let additive = run_tasks(tasks, |&(l, m1, m2)| {
        let mut t = Tally::default();
        let all: Vec<Partition> = partitions_up_to(max).collect();
        let left: Vec<&Partition> = all.iter().filter(|p| m_special(p, m1, l)).collect();
        let right: Vec<&Partition> = all.iter().filter(|p| m_special(p, m2, l)).collect();
        for a in &left {
            for b in right.iter().filter(|b| a.degree() + b.degree() <= max) {
                t.checked += 1;
                let s = a.sum(b);
                t.expect(
                    s.degree(),
                    || format!("{a} + {b} m={m1}+{m2} l={l}"),
                    true,
                    m_special(&s, m1 + m2, l),
                );
            }
        }
        t
    });
    per_input.merge(additive)
}

fn edge_structure(params: &SuiteParams, store: &MatrixStore) -> Result<Tally> {
    let combinatorial = run_tasks(pairs(&params.l, params.max_degree), |&(l, d)| {
        let mut t = Tally::default();
        for p in partitions_of(d).filter(|p| !p.is_empty()) {
            let connected = is_edge_l_connected(&p, l);
            let divisible = l_edge(&p, l).e_l.is_multiple_of(l);
            if connected && !divisible {
                // the core keeps the first part, and each hook removal stays in this case
                t.checked += 1;
                t.expect(d, || format!("core of {p} l={l}"), p.first(), l_core(&p, l).first());
                for hook in rim_hooks(&p, l) {
                    if let Some(q) = t.ok(d, || format!("{p} hook {hook:?}"), remove_rim_hook(&p, &hook)) {
                        let stays = is_edge_l_connected(&q, l)
                            && !l_edge(&q, l).e_l.is_multiple_of(l)
                            && q.first() == p.first();
                        t.expect(d, || format!("{p} -> {q} l={l}"), true, stays);
                    }
                }
            }
            if connected && divisible && p.is_regular(l) {
                t.checked += 1;
                let stripped = Partition::q_arrange(&p.parts().iter().map(|x| x - 1).collect::<Vec<_>>());
                let before = mullineux_length(&p, l);
                let after = mullineux_length(&stripped, l);
                if let (Some(a), Some(b)) =
                    (t.ok(d, || format!("{p} l={l}"), before), t.ok(d, || format!("{stripped} l={l}"), after))
                {
                    t.expect(d, || format!("first column of {p} l={l}"), a, b);
                }
            }
            if !connected && p.is_regular(l) {
                t.checked += 1;
                let input = || format!("co-suitable node of {p} l={l}");
                if let Some(r) = t.ok(d, input, find_co_suitable_node(&p, l)) {
                    co_suitable_post(&mut t, d, &p, r, l);
                }
            }
            suitable_post(&mut t, d, &p, l);
        }
        t
    });
    let oracle_degree = params.oracle_max_degree.unwrap_or(0).min(params.max_degree);
    let all = matrices(store, &params.l, oracle_degree)?;
    let oracle = run_tasks(all, |matrix| {
        let (l, d) = (matrix.l, matrix.r);
        let mut t = Tally::default();
        for lambda in matrix.rows.iter().filter(|p| p.is_restricted(l) && !p.is_empty()) {
            t.checked += 1;
            let m = lambda.len();
            let mut shorter = false;
            for tau in matrix.rows.iter().filter(|tau| tau.len() < m) {
                if let Some(v) =
                    t.ok(d, || format!("tau={tau} lambda={lambda}"), nabla_multiplicity(matrix, tau, lambda))
                {
                    shorter |= v > 0;
                }
            }
            let core_len = l_core(lambda, l).len();
            t.expect(
                d,
                || format!("core length of {lambda} l={l} (core length {core_len})"),
                core_len < m,
                shorter,
            );
        }
        t
    });
    Ok(combinatorial.merge(oracle))
}

fn co_suitable_post(t: &mut Tally, d: usize, mu: &Partition, r: Node, l: usize) {
    let input = || format!("co-suitable node {r} of {mu} l={l}");
    t.expect(d, || format!("{} is co-suitable", input()), true, mu.co_suitable_nodes(l).contains(&r));
    let Some(reduced) = t.ok(d, input, mu.remove_node(r)) else { return };
    t.expect(d, || format!("{} leaves {reduced} regular", input()), true, reduced.is_regular(l));
    if reduced.is_regular(l) {
        if let (Ok(a), Ok(b)) = (mullineux_length(&reduced, l), mullineux_length(mu, l)) {
            t.expect(d, || format!("{} keeps Mullineux length", input()), b, a);
        }
    }
}

fn suitable_post(t: &mut Tally, d: usize, lambda: &Partition, l: usize) {
    let (low, high) = lambda.restricted_decompose(l);
    let qualifies =
        !lambda.is_restricted(l) && high.len() <= low.len() && !is_edge_l_connected(&low.transpose(), l);
    if !qualifies {
        return;
    }
    t.checked += 1;
    let input = || format!("suitable node of {lambda} l={l}");
    let Some(s) = t.ok(d, input, find_suitable_node_nonrestricted(lambda, l)) else { return };
    t.expect(d, || format!("{} {s} is suitable", input()), true, lambda.suitable_nodes(l).contains(&s));
    let s0 = Node::new(s.row, low.row(s.row));
    t.expect(d, || format!("{} {s0} suitable in {low}", input()), true, low.suitable_nodes(l).contains(&s0));
    if let Some(rest) = t.ok(d, input, low.remove_node(s0)) {
        t.expect(d, || format!("{} {rest} restricted", input()), true, rest.is_restricted(l));
    }
    co_suitable_post(t, d, &low.transpose(), s0.transposed(), l);
}

fn characters(params: &SuiteParams) -> Tally {
    let max = params.max_degree;
    let max_n = params.n.iter().copied().max().unwrap_or(0);
    let mut t = Tally::default();
    // graded-free identity and support bound over (m, n, l, r)
    let mut grid = Vec::new();
    for &m in &params.m {
        for &n in &params.n {
            for &l in &params.l {
                for r in 0..=max {
                    grid.push((m, n, l, r));
                }
            }
        }
    }
    t = t.merge(run_tasks(grid, |&(m, n, l, r)| {
        let mut t = Tally::default();
        t.checked += 1;
        let input = || format!("m={m} n={n} l={l} r={r}");
        t.expect(
            r,
            || format!("graded-free identity {}", input()),
            true,
            verify_graded_free_identity(m, n, l, r),
        );
        let s = truncated_tensor_char(m, n, l, r);
        for (p, _) in s.terms() {
            t.expect(
                r,
                || format!("support {p} {}", input()),
                true,
                p.first() <= m * (l - 1) && p.len() <= n,
            );
        }
        t
    }));
    // Kostka unitriangularity and the Pieri minimal term, per degree
    let degrees: Vec<usize> = (0..=max.min(8)).collect();
    t = t.merge(run_tasks(degrees, |&d| {
        let mut t = Tally::default();
        let mut k = Kostka::new();
        let width = max_n.max(1) + 1;
        for lambda in PartitionsOf::new(d, Some(width), None) {
            t.checked += 1;
            t.expect(d, || format!("K({lambda},{lambda})"), 1, k.count(&lambda, lambda.parts()));
            for mu in PartitionsOf::new(d, Some(width), None) {
                if k.count(&lambda, mu.parts()) != 0 {
                    t.expect(
                        d,
                        || format!("K({lambda},{mu}) nonzero"),
                        true,
                        mu.dominance_leq(&lambda).unwrap_or(false),
                    );
                }
            }
        }
        for n in 2..=width {
            for b in PartitionsOf::new(d, Some(n - 1), None) {
                for a in 0..=max.min(8).saturating_sub(d) {
                    t.checked += 1;
                    let support = pieri_h(&b, a, n).support();
                    let mut values = vec![a];
                    values.extend_from_slice(b.parts());
                    let q = Partition::q_arrange(&values);
                    let minimal =
                        support.contains(&q) && support.iter().all(|mu| q.dominance_leq(mu).unwrap_or(false));
                    t.expect(d + a, || format!("h_{a} * s_{b} in {n} variables, minimal {q}"), true, minimal);
                }
            }
        }
        t
    }));
    // bound equivalence at n factors: lambda with at most n rows is n-special iff lambda_1 <= n(l-1)
    let pairs: Vec<(usize, usize)> =
        params.l.iter().flat_map(|&l| params.n.iter().map(move |&n| (l, n))).collect();
    t = t.merge(run_tasks(pairs, |&(l, n)| {
        let mut t = Tally::default();
        for lambda in partitions_up_to(max).filter(|p| p.len() <= n) {
            t.checked += 1;
            t.expect(
                lambda.degree(),
                || format!("lambda={lambda} n={n} l={l}"),
                lambda.first() <= n * (l - 1),
                distinguished_decomposition(&lambda, n, l).is_some(),
            );
        }
        t
    }));
    t
}

fn core_suite(params: &SuiteParams) -> Tally {
    let orders = params.orders.unwrap_or(20);
    let seed = params.seed.unwrap_or(0);
    run_tasks(pairs(&params.l, params.max_degree), |&(l, d)| {
        let mut t = Tally::default();
        // seeded per task so the result does not depend on scheduling
        let mut rng = StdRng::seed_from_u64(seed ^ ((l as u64) << 32) ^ d as u64);
        let all: Vec<Partition> = partitions_of(d).collect();
        let cores: Vec<Partition> = all.iter().map(|p| l_core(p, l)).collect();
        for (p, core) in all.iter().zip(&cores) {
            t.checked += 1;
            t.expect(d, || format!("core {core} of {p} l={l} has no hooks"), 0, rim_hooks(core, l).len());
            for k in 0..orders {
                let other = l_core_by(p, l, |n| rng.random_range(0..n));
                t.expect(d, || format!("{p} l={l} order {k}"), core, &other);
            }
        }
        for (a, ca) in all.iter().zip(&cores) {
            let ra = a.residue_content(l);
            for (b, cb) in all.iter().zip(&cores) {
                t.checked += 1;
                t.expect(d, || format!("{a} vs {b} l={l}"), ca == cb, ra == b.residue_content(l));
            }
        }
        t
    })
}
