use diminish_core::framework::{verify_diminisher, Caps, Problem};
use diminish_core::graph_dim::{GraphProblem, GraphProblemId};

fn run(id: GraphProblemId, seed: u64) {
    let p = GraphProblem::new(id);
    let dim = p.diminisher().unwrap();
    let v = verify_diminisher(&p, dim.as_ref(), 500, seed, &Caps::default()).unwrap();
    if let Some(c) = &v.counterexample {
        panic!(
            "{id}: {} failures; minimized:\n{}\noutput:\n{}",
            v.failed(),
            c.minimized.to_text(),
            c.minimized_output.to_text()
        );
    }
    assert_eq!(v.reports.len(), 500);
    for r in &v.reports {
        assert!(r.equivalent && r.k_out < r.k_in, "{id}: {r:?}");
    }
    let _ = p.name();
}

#[test]
fn rooted_path() {
    run(GraphProblemId::RootedPath, 1);
}

#[test]
fn clique_all_widths() {
    for w in diminish_core::graph::WidthKind::ALL {
        run(GraphProblemId::Clique(w), 2);
    }
}

#[test]
fn biclique_all_widths() {
    for w in diminish_core::graph::WidthKind::ALL {
        run(GraphProblemId::Biclique(w), 3);
    }
}

#[test]
fn mc_path() {
    run(GraphProblemId::McPath, 4);
}

#[test]
fn colorful_motif() {
    run(GraphProblemId::ColorfulMotif, 5);
}

#[test]
fn tst() {
    run(GraphProblemId::Tst, 6);
}
