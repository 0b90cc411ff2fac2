//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails or overruns its time limit.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, vertex_subsets, CorpusGraph, N, P};
use nzflow_core::abelian::{groups_of_order, groups_up_to, FiniteAbelianGroup};
use nzflow_core::engine::flow_polynomial;
use nzflow_core::lemma::double_sum_solutions;
use nzflow_core::num_bigint::{BigInt, BigUint};
use nzflow_core::oracle::{
    count_double_sum_solutions_oracle, count_group_flows, count_group_flows_oriented,
    count_integer_nflows,
};
use nzflow_core::{fit_quasipolynomial, Budget, SignedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn oracle(g: &SignedGraph, gamma: &FiniteAbelianGroup) -> Result<BigUint, String> {
    count_group_flows(g, gamma, Budget::default()).map_err(|e| format!("{e}"))
}

fn single_loop(sign: nzflow_core::Sign) -> SignedGraph {
    common::graph(1, &[(0, 0, sign)])
}

fn negative_loop_law() -> Check {
    let g = single_loop(N);
    let groups = groups_up_to(32);
    for gamma in &groups {
        let expected = BigUint::from((1u64 << gamma.epsilon2()) - 1);
        let got = oracle(&g, gamma)?;
        if got != expected {
            return Err(format!("{gamma}: counted {got}, expected {expected}"));
        }
    }
    Ok(format!("{} groups of order <= 32", groups.len()))
}

fn positive_loop_law() -> Check {
    let g = single_loop(P);
    let groups = groups_up_to(32);
    for gamma in &groups {
        let expected = BigUint::from(gamma.order() - 1);
        let got = oracle(&g, gamma)?;
        if got != expected {
            return Err(format!("{gamma}: counted {got}, expected {expected}"));
        }
    }
    Ok(format!("{} groups of order <= 32", groups.len()))
}

fn same_invariants_same_count(graphs: &[CorpusGraph]) -> Check {
    let z9 = FiniteAbelianGroup::new(vec![9]).unwrap();
    let z3z3 = FiniteAbelianGroup::new(vec![3, 3]).unwrap();
    let z8z2 = FiniteAbelianGroup::new(vec![8, 2]).unwrap();
    let z4z4 = FiniteAbelianGroup::new(vec![4, 4]).unwrap();
    let mut compared = 0;
    for cg in graphs {
        let g = &cg.graph;
        let (a, b) = (oracle(g, &z9)?, oracle(g, &z3z3)?);
        if a != b {
            return Err(format!("{}: Z9 gives {a}, Z3 x Z3 gives {b}", cg.name));
        }
        compared += 1;
        if g.num_edges() <= 3 {
            let (a, b) = (oracle(g, &z8z2)?, oracle(g, &z4z4)?);
            if a != b {
                return Err(format!("{}: Z8 x Z2 gives {a}, Z4 x Z4 gives {b}", cg.name));
            }
            compared += 1;
        }
    }
    Ok(format!("{} graphs, {compared} pair comparisons", graphs.len()))
}

fn polynomial_matches_oracle(graphs: &[CorpusGraph]) -> Check {
    let groups = groups_up_to(9);
    let mut checks = 0;
    for cg in graphs {
        let family: Vec<_> = (0..=3).map(|d| flow_polynomial(&cg.graph, d)).collect();
        for gamma in &groups {
            let predicted = family[gamma.epsilon2() as usize].eval(&BigInt::from(gamma.reduced_order()));
            let counted = BigInt::from(oracle(&cg.graph, gamma)?);
            if predicted != counted {
                return Err(format!(
                    "{} over {gamma}: polynomial gives {predicted}, oracle counts {counted}",
                    cg.name
                ));
            }
            checks += 1;
        }
    }
    Ok(format!("{} graphs x {} groups = {checks} checks", graphs.len(), groups.len()))
}

fn lemma_closed_form() -> Check {
    let z2 = FiniteAbelianGroup::new(vec![2]).unwrap();
    let boundary = double_sum_solutions(1, 1).eval(&BigInt::from(1));
    if boundary != BigInt::from(1) {
        return Err(format!("t = 1 over Z2 gives {boundary}, expected 1"));
    }
    let groups = groups_up_to(16);
    let mut checks = 0;
    for gamma in groups.iter().chain(std::iter::once(&z2)) {
        for t in 0..=4 {
            let counted = count_double_sum_solutions_oracle(t, gamma, Budget::default())
                .map_err(|e| format!("{e}"))?;
            let predicted =
                double_sum_solutions(t, gamma.epsilon2()).eval(&BigInt::from(gamma.reduced_order()));
            if predicted != BigInt::from(counted.clone()) {
                return Err(format!("t = {t} over {gamma}: closed form {predicted}, oracle {counted}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} (t, group) checks, boundary t=1/Z2 = 1"))
}

fn deletion_contraction_random() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f10e);
    let groups = groups_up_to(8);
    let small_budget = 2_000_000u64;
    let mut non_loop = 0;
    let mut loops = 0;
    let mut attempts = 0;
    while non_loop < 200 || loops < 200 {
        attempts += 1;
        if attempts > 100_000 {
            return Err("could not draw enough triples".into());
        }
        let mut g = common::random_graph(&mut rng, 4, 6);
        let gamma = &groups[rng.gen_range(0..groups.len())];
        if !within(gamma, g.num_edges() + 1, small_budget) {
            continue;
        }
        if non_loop < 200 {
            let candidates: Vec<_> = (0..g.num_edges()).filter(|&e| !g.edges()[e].is_loop()).collect();
            if !candidates.is_empty() {
                let e = candidates[rng.gen_range(0..candidates.len())];
                let g = g.make_edge_positive(e).unwrap();
                let whole = BigInt::from(oracle(&g, gamma)?);
                let contracted = BigInt::from(oracle(&g.contract_edge(e).unwrap(), gamma)?);
                let deleted = BigInt::from(oracle(&g.delete_edge(e).unwrap(), gamma)?);
                if whole != &contracted - &deleted {
                    return Err(format!("{g:?} edge {e} over {gamma}: {whole} != {contracted} - {deleted}"));
                }
                non_loop += 1;
                continue;
            }
        }
        if loops < 200 {
            let v = rng.gen_range(0..g.num_vertices());
            if !g.edges().iter().any(|e| e.is_loop() && e.sign.is_positive()) {
                g.add_edge(v, v, P).unwrap();
            }
            let candidates: Vec<_> = (0..g.num_edges())
                .filter(|&e| g.edges()[e].is_loop() && g.edges()[e].sign.is_positive())
                .collect();
            let e = candidates[rng.gen_range(0..candidates.len())];
            let whole = oracle(&g, gamma)?;
            let rest = oracle(&g.delete_edge(e).unwrap(), gamma)?;
            if whole != BigUint::from(gamma.order() - 1) * &rest {
                return Err(format!("{g:?} loop {e} over {gamma}: {whole} != (|G|-1) * {rest}"));
            }
            loops += 1;
        }
    }
    Ok(format!("{non_loop} non-loop triples, {loops} positive-loop triples"))
}

fn within(gamma: &FiniteAbelianGroup, edges: usize, budget: u64) -> bool {
    (gamma.order() - 1)
        .checked_pow(edges as u32)
        .is_some_and(|leaves| leaves <= budget)
}

fn invariance_suite(graphs: &[CorpusGraph]) -> Check {
    let groups = groups_up_to(6);
    let mut checks = 0;
    for cg in graphs {
        let g = &cg.graph;
        let base: Vec<_> = groups.iter().map(|gamma| oracle(g, gamma)).collect::<Result<_, _>>()?;
        for x in vertex_subsets(g.num_vertices()) {
            let h = g.switch(&x).unwrap();
            for (gamma, expected) in groups.iter().zip(&base) {
                if &oracle(&h, gamma)? != expected {
                    return Err(format!("{}: switching at {x:?} changes the {gamma} count", cg.name));
                }
                checks += 1;
            }
        }
        for e in 0..g.num_edges() {
            let mut tau = g.default_orientation();
            tau.reverse_edge(e).unwrap();
            for (gamma, expected) in groups.iter().zip(&base) {
                let got = count_group_flows_oriented(g, &tau, gamma, Budget::default())
                    .map_err(|e| format!("{e}"))?;
                if &got != expected {
                    return Err(format!("{}: reversing edge {e} changes the {gamma} count", cg.name));
                }
                checks += 1;
            }
        }
        let reversed = g.with_reversed_edge_order();
        for d in 0..=3 {
            let f = flow_polynomial(g, d);
            if flow_polynomial(&reversed, d) != f {
                return Err(format!("{}: f_{d} depends on edge order", cg.name));
            }
            for x in vertex_subsets(g.num_vertices()) {
                if flow_polynomial(&g.switch(&x).unwrap(), d) != f {
                    return Err(format!("{}: f_{d} changes under switching at {x:?}", cg.name));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} invariance checks"))
}

fn balanced_specialization(graphs: &[CorpusGraph]) -> Check {
    let mut checked = 0;
    for cg in graphs.iter().filter(|cg| cg.graph.is_all_positive()) {
        let f0 = flow_polynomial(&cg.graph, 0);
        for d in 1..=3u32 {
            let scaled = f0.compose_scaled(&(BigInt::from(1) << d));
            let fd = flow_polynomial(&cg.graph, d);
            if fd != scaled {
                return Err(format!("{}: f_{d} = {fd} but f_0(2^{d} n) = {scaled}", cg.name));
            }
        }
        checked += 1;
    }
    let k4 = common::k4(&[]);
    let f0 = flow_polynomial(&k4, 0);
    for n in 2..=7u64 {
        let zn = FiniteAbelianGroup::cyclic(n).unwrap();
        let counted = BigInt::from(oracle(&k4, &zn)?);
        let predicted = f0.eval(&BigInt::from(n));
        if counted != predicted {
            return Err(format!("K4 over Z{n}: f_0({n}) = {predicted}, oracle {counted}"));
        }
    }
    Ok(format!("{checked} all-positive graphs, K4 f_0 = {f0} checked at n = 2..7"))
}

fn integer_quasipolynomial(graphs: &[CorpusGraph]) -> Check {
    let mut fitted = 0;
    let mut split = 0;
    for cg in graphs.iter().filter(|cg| cg.graph.cyclomatic_number() <= 3) {
        let samples = (1..=10u64)
            .map(|n| {
                count_integer_nflows(&cg.graph, n, Budget::default())
                    .map(|c| (n, BigInt::from(c)))
                    .map_err(|e| format!("{e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let fit = fit_quasipolynomial(&samples).map_err(|e| format!("{e}"))?;
        if !fit.validated {
            return Err(format!(
                "{}: held-out counts not reproduced (p_even = {}, p_odd = {})",
                cg.name, fit.p_even, fit.p_odd
            ));
        }
        fitted += 1;
        if !fit.has_period_one() {
            split += 1;
        }
    }
    if fitted < 5 {
        return Err(format!("only {fitted} graphs with cyclomatic number <= 3"));
    }
    Ok(format!("{fitted} graphs validated, {split} with distinct even/odd parts"))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: Box<dyn Fn() -> Check>,
}

fn main() -> ExitCode {
    let graphs = std::rc::Rc::new(corpus());
    println!("corpus: {} signed graphs", graphs.len());
    assert!(graphs.len() >= 30);
    assert_eq!(groups_of_order(16).len(), 5);

    let g = |f: fn(&[CorpusGraph]) -> Check| {
        let graphs = graphs.clone();
        Box::new(move || f(&graphs)) as Box<dyn Fn() -> Check>
    };
    let secs = Duration::from_secs;
    let criteria = vec![
        Criterion { id: 1, title: "negative-loop law", limit: secs(1), run: Box::new(negative_loop_law) },
        Criterion { id: 2, title: "positive-loop law", limit: secs(1), run: Box::new(positive_loop_law) },
        Criterion { id: 3, title: "equal counts for equal (order, 2-rank)", limit: secs(300), run: g(same_invariants_same_count) },
        Criterion { id: 4, title: "f_d(n) matches oracle for all groups of order <= 9", limit: secs(300), run: g(polynomial_matches_oracle) },
        Criterion { id: 5, title: "closed form for 2x_1 + ... + 2x_t = 0", limit: secs(60), run: Box::new(lemma_closed_form) },
        Criterion { id: 6, title: "deletion-contraction on random triples", limit: secs(300), run: Box::new(deletion_contraction_random) },
        Criterion { id: 7, title: "switching / orientation / edge-order invariance", limit: secs(120), run: g(invariance_suite) },
        Criterion { id: 8, title: "balanced specialization f_d(n) = f_0(2^d n)", limit: secs(60), run: g(balanced_specialization) },
        Criterion { id: 9, title: "integer-flow quasipolynomial fit", limit: secs(300), run: g(integer_quasipolynomial) },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(detail) if elapsed < c.limit => (true, detail),
            Ok(detail) => (false, format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit)),
            Err(reason) => (false, reason),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {}: {} - {} ({elapsed:.2?}) - {detail}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
