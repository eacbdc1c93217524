//! Every exact decider against a deliberately naive reimplementation.

use diminish_core::graph::oracle::{self, OracleLimits};
use diminish_core::graph::{
    exact_bandwidth, exact_cutwidth, exact_treewidth, random_graph_with, AnnotatedGraph,
    AnnotationSpec,
};
use diminish_core::rng::{seeded, trial_seed, Rng};
use diminish_core::setcover::oracle::{hitting_set, set_cover, SetLimits};
use diminish_core::setcover::SetSystem;
use diminish_core::tm::{accepts, random_machine, NtmInstance, TmLimits};

mod naive;

use naive::*;

const CASES: u64 = 1000;

fn graph_cases(spec: AnnotationSpec, seed: u64, mut check: impl FnMut(&AnnotatedGraph, u64)) {
    for i in 0..CASES {
        let mut rng = seeded(trial_seed(seed, i));
        let n = rng.gen_range(0..=6);
        let p = rng.gen_range(0.1..=0.9);
        let g = random_graph_with(&mut rng, n, p, &spec).unwrap();
        let k = rng.gen_range(0..=5);
        check(&g, k);
    }
}

#[test]
fn clique_twin() {
    let lim = OracleLimits::default();
    graph_cases(AnnotationSpec::default(), 1, |g, k| {
        assert_eq!(oracle::clique(g, k, &lim).unwrap(), naive_clique(g, k), "{g:?} {k}");
    });
}

#[test]
fn biclique_twin() {
    let lim = OracleLimits::default();
    let spec = AnnotationSpec { sides: true, ..Default::default() };
    graph_cases(spec, 2, |g, k| {
        let k = k.min(3);
        assert_eq!(oracle::biclique(g, k, &lim).unwrap(), naive_biclique(g, k), "{g:?} {k}");
    });
}

#[test]
fn rooted_path_twin() {
    let lim = OracleLimits::default();
    let spec = AnnotationSpec { root: true, ..Default::default() };
    graph_cases(spec, 3, |g, k| {
        assert_eq!(oracle::rooted_path(g, k, &lim).unwrap(), naive_rooted_path(g, k), "{g:?} {k}");
    });
}

#[test]
fn mc_path_twin() {
    let lim = OracleLimits::default();
    for colors in 1..=4 {
        let spec = AnnotationSpec { colors: Some(colors), ..Default::default() };
        graph_cases(spec, 4 + colors as u64, |g, k| {
            assert_eq!(oracle::mc_path(g, k, &lim).unwrap(), naive_mc_path(g, k), "{g:?} {k}");
        });
    }
}

#[test]
fn colorful_motif_twin() {
    let lim = OracleLimits::default();
    for colors in 1..=4 {
        let spec = AnnotationSpec { colors: Some(colors), ..Default::default() };
        graph_cases(spec, 10 + colors as u64, |g, k| {
            assert_eq!(oracle::colorful_motif(g, k, &lim).unwrap(), naive_motif(g, k), "{g:?} {k}");
        });
    }
}

#[test]
fn terminal_steiner_tree_twin() {
    let lim = OracleLimits::default();
    let spec = AnnotationSpec { terminals: Some((0, 4)), ..Default::default() };
    graph_cases(spec, 20, |g, k| {
        let k = k.min(3);
        assert_eq!(oracle::tst(g, k, &lim).unwrap(), naive_tree(g, k, true), "{g:?} {k}");
    });
}

#[test]
fn steiner_tree_twin() {
    let lim = OracleLimits::default();
    let spec = AnnotationSpec { terminals: Some((0, 4)), ..Default::default() };
    graph_cases(spec, 21, |g, k| {
        let k = k.min(3);
        assert_eq!(oracle::steiner_tree(g, k, &lim).unwrap(), naive_tree(g, k, false), "{g:?} {k}");
    });
}

#[test]
fn widths_match_permutation_search() {
    let all: Vec<Vec<Vec<usize>>> = (0..=7).map(permutations).collect();
    for i in 0..300 {
        let mut rng = seeded(trial_seed(30, i));
        let n = rng.gen_range(0..=7);
        let p = rng.gen_range(0.1..=0.9);
        let g = random_graph_with(&mut rng, n, p, &AnnotationSpec::default()).unwrap();
        let perms = &all[n];
        assert_eq!(exact_cutwidth(&g).unwrap(), perm_cutwidth(&g, perms), "{g:?}");
        assert_eq!(exact_bandwidth(&g).unwrap(), perm_bandwidth(&g, perms), "{g:?}");
        assert_eq!(exact_treewidth(&g).unwrap(), perm_treewidth(&g, perms), "{g:?}");
    }
}

#[test]
fn machine_acceptance_twin() {
    let lim = TmLimits::default();
    let mut compared = 0;
    for i in 0..CASES {
        let mut rng = seeded(trial_seed(40, i));
        let n_sym = rng.gen_range(1..=2);
        let alphabet = (0..n_sym).map(|s| format!("s{s}")).collect();
        let n_states = rng.gen_range(1..=3);
        let machine = random_machine(&mut rng, alphabet, n_states, 0.4);
        let input = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..n_sym)).collect();
        let inst = NtmInstance { machine, input, k: rng.gen_range(0..=8) };
        if let Some(expected) = naive_accepts(&inst, 100_000) {
            assert_eq!(accepts(&inst, &lim).unwrap(), expected, "{}", inst.to_text());
            compared += 1;
        }
    }
    assert!(compared >= CASES * 9 / 10, "only {compared} machines within the naive budget");
}

fn check_sets(s: &SetSystem) {
    let lim = SetLimits::default();
    assert_eq!(set_cover(s, &lim).unwrap(), naive_set_cover(s), "{s:?}");
    assert_eq!(hitting_set(s, &lim).unwrap(), naive_hitting_set(s), "{s:?}");
}

#[test]
fn set_oracles_on_every_small_system() {
    let mut checked = 0u64;
    for n in 0..=5usize {
        for m in 0..=5usize {
            if n * m > 12 {
                continue;
            }
            for mask in 0..1u64 << (n * m) {
                for k in 0..=n.max(m).min(4) as u64 {
                    check_sets(&system_from_mask(n, m, mask, k));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50_000);
}

#[test]
fn set_oracles_on_sampled_five_by_five_systems() {
    for i in 0..5000 {
        let mut rng = seeded(trial_seed(50, i));
        let (n, m) = (rng.gen_range(3..=5), rng.gen_range(3..=5));
        let mask = rng.gen_range(0..1u64 << (n * m));
        check_sets(&system_from_mask(n, m, mask, rng.gen_range(0..=5)));
    }
}