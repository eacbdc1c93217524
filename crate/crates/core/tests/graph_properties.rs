use std::collections::BTreeSet;

use diminish_core::framework::{BranchingRule, Composition, Problem, Reduction};
use diminish_core::graph::{
    disjoint_union, exact_bandwidth, exact_cutwidth, exact_treewidth, max_degree, parse_graph,
    random_graph, random_graph_with, serialize_graph, AnnotatedGraph, AnnotationSpec, Guard,
};
use diminish_core::graph_dim::{
    mc_path_branch, mc_path_triplets, separated_by_terminals, BicliqueRule, CliqueRule,
    GraphInstance, GraphProblem, GraphProblemId, McPathRule, MotifRule, RootedPathComposition,
    RootedPathRule, SteinerToTst, TstComposition, TstRule, TstToSteiner, UnionComposition,
};
use diminish_core::rng::{seeded, trial_seed, Rng, SeededRng};
use proptest::prelude::*;

fn any_graph(rng: &mut SeededRng, max_n: usize, spec: &AnnotationSpec) -> AnnotatedGraph {
    let n = rng.gen_range(2..=max_n);
    let p = rng.gen_range(0.15..=0.85);
    random_graph_with(rng, n, p, spec).unwrap()
}

#[test]
fn neighbourhoods_have_smaller_width() {
    let spec = AnnotationSpec { guard: Guard::AtLeastOneEdge, ..Default::default() };
    let mut bandwidth_findings = Vec::new();
    for i in 0..500 {
        let g = any_graph(&mut seeded(trial_seed(60, i)), 8, &spec);
        let (cw, tw, bw, deg) = (
            exact_cutwidth(&g).unwrap(),
            exact_treewidth(&g).unwrap(),
            exact_bandwidth(&g).unwrap(),
            max_degree(&g),
        );
        for v in (0..g.n()).filter(|&v| g.degree(v) > 0) {
            let h = g.induced_subgraph(&g.neighborhood(v));
            assert!(exact_cutwidth(&h).unwrap() < cw, "cutwidth at {v}: {g:?}");
            assert!(exact_treewidth(&h).unwrap() < tw, "treewidth at {v}: {g:?}");
            assert!(max_degree(&h) < deg, "max degree at {v}: {g:?}");
            if exact_bandwidth(&h).unwrap() >= bw {
                bandwidth_findings.push((i, v));
            }
        }
    }
    assert!(
        bandwidth_findings.is_empty(),
        "bandwidth did not drop on G[N(v)] for (graph, vertex) {bandwidth_findings:?}"
    );
}

#[test]
fn cutwidth_of_a_union_is_the_largest_part() {
    for i in 0..300 {
        let mut rng = seeded(trial_seed(61, i));
        let parts: Vec<AnnotatedGraph> = (0..rng.gen_range(1..=3))
            .map(|_| any_graph(&mut rng, 4, &AnnotationSpec::default()))
            .collect();
        let u = disjoint_union(&parts).unwrap();
        let expected = parts.iter().map(|g| exact_cutwidth(g).unwrap()).max().unwrap();
        assert_eq!(exact_cutwidth(&u).unwrap(), expected);
    }
}

/// `count` instances of one problem sharing `k` (and the terminal count for
/// TST).
fn same_budget_batch(id: GraphProblemId, rng: &mut SeededRng) -> Vec<GraphInstance> {
    let count = rng.gen_range(1..=4);
    let k = rng.gen_range(1..=4u64);
    let spec = match id {
        GraphProblemId::RootedPath => AnnotationSpec { root: true, ..Default::default() },
        GraphProblemId::Biclique(_) => AnnotationSpec { sides: true, ..Default::default() },
        GraphProblemId::McPath | GraphProblemId::ColorfulMotif => {
            AnnotationSpec { colors: Some(k as u32), ..Default::default() }
        }
        GraphProblemId::Tst => AnnotationSpec {
            terminals: Some((3, 3)),
            guard: Guard::TerminalSteiner,
            ..Default::default()
        },
        _ => AnnotationSpec::default(),
    };
    (0..count)
        .map(|_| {
            let g = match id {
                GraphProblemId::Tst => {
                    let n = rng.gen_range(5..=7);
                    random_graph_with(rng, n, 0.5, &spec).unwrap()
                }
                _ => any_graph(rng, 6, &spec),
            };
            GraphInstance::new(g, k)
        })
        .collect()
}

fn measure<C: Composition<GraphProblem>>(id: GraphProblemId, comp: &C, seed: u64) {
    let p = GraphProblem::new(id);
    for i in 0..200 {
        let batch = same_budget_batch(id, &mut seeded(trial_seed(seed, i)));
        let k_in = batch.iter().map(|x| p.parameter(x).unwrap()).max().unwrap();
        let out = comp.compose(&p, batch).unwrap();
        let k_out = p.parameter(&out).unwrap();
        assert_eq!(k_out, k_in + comp.additive(), "{id} composition {}", comp.name());
    }
}

#[test]
fn composition_constants_are_exact() {
    measure(GraphProblemId::RootedPath, &RootedPathComposition, 62);
    for w in diminish_core::graph::WidthKind::ALL {
        measure(GraphProblemId::Clique(w), &UnionComposition::new("union"), 63);
        measure(GraphProblemId::Biclique(w), &UnionComposition::new("union"), 64);
    }
    measure(GraphProblemId::McPath, &UnionComposition::colored("union"), 65);
    measure(GraphProblemId::ColorfulMotif, &UnionComposition::colored("union"), 66);
    measure(GraphProblemId::Tst, &TstComposition, 67);
}

#[test]
fn tst_composition_keeps_inputs_apart() {
    for i in 0..200 {
        let batch = same_budget_batch(GraphProblemId::Tst, &mut seeded(trial_seed(68, i)));
        let (out, prov) = TstComposition.compose_with_provenance(&batch).unwrap();
        assert!(separated_by_terminals(&out.graph, &prov));
        assert_eq!(out.graph.terminal_count(), 3);
    }
}

fn generated(id: GraphProblemId, seed: u64, count: u64) -> Vec<GraphInstance> {
    let p = GraphProblem::new(id);
    (0..count)
        .map(|i| p.generate(&mut seeded(trial_seed(seed, i)), &Default::default()).unwrap())
        .collect()
}

#[test]
fn mc_path_branches_isolate_the_middle_vertex() {
    for inst in generated(GraphProblemId::McPath, 69, 300) {
        for (v1, v2, v3) in mc_path_triplets(&inst.graph) {
            let out = mc_path_branch(&inst, (v1, v2, v3)).unwrap();
            let g = &inst.graph;
            let gone: BTreeSet<usize> = (0..g.n())
                .filter(|&w| {
                    w != v2 && w != v3 && [v1, v2, v3].iter().any(|&x| g.color(x) == g.color(w))
                })
                .collect();
            let new2 = v2 - gone.iter().filter(|&&w| w < v2).count();
            let h = &out.graph;
            assert!(h.degree(new2) <= 1);
            let c2 = h.color(new2).unwrap();
            assert_eq!((0..h.n()).filter(|&w| h.color(w) == Some(c2)).count(), 1);
            assert_eq!(h.max_color() as u64, inst.k - 1);
        }
    }
}

#[test]
fn branch_counts_and_sizes() {
    let per_branch = 256;
    let check = |id: GraphProblemId, rule: &dyn BranchingRule<GraphProblem>, bound: &dyn Fn(&GraphInstance) -> usize| {
        let p = GraphProblem::new(id);
        for inst in generated(id, 70, 200) {
            let out = rule.branch(&p, &inst).unwrap();
            assert!(out.len() <= bound(&inst).max(1), "{id}: {} branches", out.len());
            let total: usize = out.iter().map(|o| p.size(o)).sum();
            assert!(total <= (p.size(&inst) + per_branch) * out.len(), "{id}: {total} bytes");
        }
    };
    check(GraphProblemId::RootedPath, &RootedPathRule, &|i| i.graph.degree(i.graph.root().unwrap()));
    check(GraphProblemId::Clique(diminish_core::graph::WidthKind::Cutwidth), &CliqueRule, &|i| i.graph.n());
    check(GraphProblemId::Biclique(diminish_core::graph::WidthKind::Cutwidth), &BicliqueRule, &|i| i.graph.edge_count());
    check(GraphProblemId::McPath, &McPathRule, &|i| i.graph.n().pow(3));
    check(GraphProblemId::ColorfulMotif, &MotifRule, &|i| i.graph.edge_count());
    check(GraphProblemId::Tst, &TstRule, &|i| {
        let t = i.graph.terminals().unwrap();
        i.graph.degree(*t.first().unwrap())
    });
}

#[test]
fn clique_rule_branches_once_per_vertex() {
    let p = GraphProblem::new(GraphProblemId::Clique(diminish_core::graph::WidthKind::Cutwidth));
    for inst in generated(p.id, 71, 200) {
        assert_eq!(CliqueRule.branch(&p, &inst).unwrap().len(), inst.graph.n());
    }
}

#[test]
fn tst_steiner_reductions() {
    let tst = GraphProblem::new(GraphProblemId::Tst);
    let st = GraphProblem::new(GraphProblemId::SteinerTree);
    for i in 0..200 {
        let mut rng = seeded(trial_seed(72, i));
        let n = rng.gen_range(2..=7);
        let spec = AnnotationSpec { terminals: Some((0, 4)), ..Default::default() };
        let density = rng.gen_range(0.2..=0.8);
        let g = random_graph_with(&mut rng, n, density, &spec).unwrap();
        let inst = GraphInstance::new(g, rng.gen_range(0..=2));
        let t = inst.graph.terminal_count() as u64;

        let fwd = TstToSteiner.reduce(&tst, &st, &inst).unwrap();
        assert_eq!(fwd.k, t * (2 * (inst.k + t)).saturating_sub(1) + inst.k);
        assert_eq!(st.decide(&fwd).unwrap(), tst.decide(&inst).unwrap(), "{}", inst.to_text());

        let back = SteinerToTst.reduce(&st, &tst, &inst).unwrap();
        assert_eq!(back.k, inst.k + t);
        assert_eq!(tst.decide(&back).unwrap(), st.decide(&inst).unwrap(), "{}", inst.to_text());
    }
}

#[test]
fn generators_are_deterministic_and_respect_the_tst_guard() {
    let spec = AnnotationSpec {
        terminals: Some((3, 4)),
        guard: Guard::TerminalSteiner,
        ..Default::default()
    };
    for i in 0..500 {
        let a = random_graph(i, 8, 0.5, &spec).unwrap();
        assert_eq!(a, random_graph(i, 8, 0.5, &spec).unwrap());
        let t = a.terminals().unwrap();
        assert!(t.len() >= 3);
        assert!(t.iter().all(|&x| a.neighbors(x).iter().any(|v| !t.contains(v))));
        assert!(a.non_terminals().iter().all(|&v| !t.iter().all(|&x| a.has_edge(v, x))));
    }
    let full = random_graph(0, 6, 1.0, &AnnotationSpec::default()).unwrap();
    assert_eq!(full.edge_count(), 15);
}

fn annotated() -> impl Strategy<Value = (AnnotatedGraph, Option<u64>)> {
    (1usize..=8, any::<u64>(), 0.0f64..=1.0, 0u8..4, proptest::option::of(0u64..10)).prop_map(
        |(n, seed, p, flavour, k)| {
            let spec = match flavour {
                0 => AnnotationSpec::default(),
                1 => AnnotationSpec { colors: Some(3), root: true, ..Default::default() },
                2 => AnnotationSpec { terminals: Some((0, n)), ..Default::default() },
                _ => AnnotationSpec { sides: true, root: true, ..Default::default() },
            };
            (random_graph(seed, n, p, &spec).unwrap(), k)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_text_round_trips((g, k) in annotated()) {
        let text = serialize_graph(&g, k);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back.graph, &g);
        prop_assert_eq!(back.k, k);
        prop_assert_eq!(serialize_graph(&back.graph, back.k), text);
    }

    #[test]
    fn clique_branches_lower_every_width(seed in any::<u64>()) {
        let spec = AnnotationSpec { guard: Guard::AtLeastOneEdge, ..Default::default() };
        let g = random_graph(seed, 7, 0.5, &spec).unwrap();
        for w in diminish_core::graph::WidthKind::ALL {
            let p = GraphProblem::new(GraphProblemId::Clique(w));
            let inst = GraphInstance::new(g.clone(), 3);
            let before = p.parameter(&inst).unwrap();
            for b in CliqueRule.branch(&p, &inst).unwrap() {
                prop_assert!(p.parameter(&b).unwrap() < before);
            }
        }
    }
}
