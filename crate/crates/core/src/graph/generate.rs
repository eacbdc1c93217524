//! Seeded random graphs with optional annotations and rejection-sampled
//! guards.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::AnnotatedGraph;
use crate::rng::{seeded, Rng, SeededRng};
use crate::{Error, Result};

/// Predicate a generated graph must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    #[default]
    None,
    AtLeastOneEdge,
    /// At least three terminals, every terminal has a non-terminal
    /// neighbour, and no non-terminal is adjacent to every terminal.
    TerminalSteiner,
}

impl Guard {
    pub fn holds(self, g: &AnnotatedGraph) -> bool {
        match self {
            Guard::None => true,
            Guard::AtLeastOneEdge => g.edge_count() > 0,
            Guard::TerminalSteiner => tst_guard(g),
        }
    }
}

pub(crate) fn tst_guard(g: &AnnotatedGraph) -> bool {
    let Some(t) = g.terminals() else { return false };
    t.len() >= 3
        && t.iter().all(|&x| g.neighbors(x).iter().any(|&v| !t.contains(&v)))
        && !g
            .non_terminals()
            .into_iter()
            .any(|v| t.iter().all(|x| g.has_edge(v, *x)))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnnotationSpec {
    /// Color every vertex from `1..=c`; when `n >= c` every color is used.
    pub colors: Option<u32>,
    /// Split vertices into sides 1 and 2 and only draw edges across.
    pub sides: bool,
    pub root: bool,
    /// Inclusive range for the number of terminals.
    pub terminals: Option<(usize, usize)>,
    pub guard: Guard,
}

const RETRIES: usize = 1000;

/// Random graph from a fresh seeded stream.
pub fn random_graph(seed: u64, n: usize, edge_prob: f64, spec: &AnnotationSpec) -> Result<AnnotatedGraph> {
    random_graph_with(&mut seeded(seed), n, edge_prob, spec)
}

pub fn random_graph_with(
    rng: &mut SeededRng,
    n: usize,
    edge_prob: f64,
    spec: &AnnotationSpec,
) -> Result<AnnotatedGraph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::invalid("edge probability must lie in [0, 1]"));
    }
    for _ in 0..RETRIES {
        let g = draw(rng, n, edge_prob, spec)?;
        if spec.guard.holds(&g) {
            return Ok(g);
        }
    }
    Err(Error::GeneratorExhausted {
        problem: "random graph",
        attempts: RETRIES,
    })
}

fn draw(rng: &mut SeededRng, n: usize, p: f64, spec: &AnnotationSpec) -> Result<AnnotatedGraph> {
    let sides: Option<Vec<u32>> = spec
        .sides
        .then(|| (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { 2 }).collect());
    let mut g = AnnotatedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let across = sides.as_ref().is_none_or(|s| s[u] != s[v]);
            if across && rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    if let Some(s) = sides {
        g.set_coloring(Some(s))?;
    } else if let Some(c) = spec.colors {
        let c = c.max(1);
        let mut col: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=c)).collect();
        if n >= c as usize {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            for (i, &v) in order.iter().take(c as usize).enumerate() {
                col[v] = i as u32 + 1;
            }
        }
        g.set_coloring(Some(col))?;
    }
    if spec.root && n > 0 {
        g.set_root(Some(rng.gen_range(0..n)))?;
    }
    if let Some((lo, hi)) = spec.terminals {
        let hi = hi.min(n);
        let count = if lo > hi { hi } else { rng.gen_range(lo..=hi) };
        let mut all: Vec<usize> = (0..n).collect();
        all.shuffle(rng);
        let t: BTreeSet<usize> = all.into_iter().take(count).collect();
        g.set_terminals(Some(t))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_reproducible() {
        let spec = AnnotationSpec {
            colors: Some(3),
            root: true,
            ..Default::default()
        };
        assert_eq!(
            random_graph(42, 7, 0.4, &spec).unwrap(),
            random_graph(42, 7, 0.4, &spec).unwrap()
        );
    }

    #[test]
    fn probability_one_gives_complete_graph() {
        let g = random_graph(1, 6, 1.0, &AnnotationSpec::default()).unwrap();
        assert_eq!(g, AnnotatedGraph::complete(6));
    }

    #[test]
    fn impossible_guard_gives_up() {
        let spec = AnnotationSpec {
            guard: Guard::AtLeastOneEdge,
            ..Default::default()
        };
        assert!(matches!(
            random_graph(3, 5, 0.0, &spec),
            Err(Error::GeneratorExhausted { .. })
        ));
    }
}
