use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{shared_budget, GraphInstance, GraphProblem};
use crate::framework::{BranchingRule, Composition, Problem};
use crate::graph::oracle::bipartition;
use crate::graph::disjoint_union;
use crate::{Error, Result};

fn canonical_yes(p: &GraphProblem) -> Result<GraphInstance> {
    p.canonical(true, 0)
        .ok_or_else(|| Error::invalid("no canonical yes-instance"))
}

/// `G` becomes `G[N(v)]` at `k - 1` for every vertex `v`. The same rule
/// serves every width parameterization; only the parameter evaluator
/// differs.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueRule;

impl BranchingRule<GraphProblem> for CliqueRule {
    fn name(&self) -> &str {
        "clique_neighborhoods"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let g = &inst.graph;
        if inst.k == 0 || g.n() == 0 {
            let answer = inst.k == 0;
            let out = p
                .canonical(answer, 0)
                .ok_or_else(|| Error::invalid("no canonical instance"))?;
            return Ok(alloc::vec![out]);
        }
        Ok((0..g.n())
            .map(|v| GraphInstance::new(g.induced_subgraph(&g.neighborhood(v)), inst.k - 1))
            .collect())
    }
}

/// Branch instance of the biclique rule for the edge `{a, b}` with `a` on
/// side 1 and `b` on side 2.
pub fn biclique_branch(inst: &GraphInstance, a: usize, b: usize) -> GraphInstance {
    let g = &inst.graph;
    let mut keep: BTreeSet<usize> = g.neighbors(b).iter().copied().filter(|&x| x != a).collect();
    keep.extend(g.neighbors(a).iter().copied().filter(|&x| x != b));
    GraphInstance::new(g.induced_subgraph(&keep), inst.k.saturating_sub(1))
}

/// For every edge `{a, b}` (`a` in side 1), keep the other common
/// candidates `N(b) - a` and `N(a) - b` at `k - 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BicliqueRule;

impl BranchingRule<GraphProblem> for BicliqueRule {
    fn name(&self) -> &str {
        "biclique_edge_neighborhoods"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let (side_a, _) = bipartition(&inst.graph)?;
        if inst.k == 0 {
            return Ok(alloc::vec![canonical_yes(p)?]);
        }
        let mut out = Vec::new();
        for &a in &side_a {
            for &b in inst.graph.neighbors(a) {
                out.push(biclique_branch(inst, a, b));
            }
        }
        if out.is_empty() {
            let no = p
                .canonical(false, 0)
                .ok_or_else(|| Error::invalid("no canonical no-instance"))?;
            out.push(no);
        }
        Ok(out)
    }
}

/// Disjoint union at the shared `k`; additive constant 0.
#[derive(Debug, Clone)]
pub struct UnionComposition {
    name: String,
    colored: bool,
}

impl UnionComposition {
    pub fn new(name: &str) -> Self {
        UnionComposition {
            name: name.into(),
            colored: false,
        }
    }

    /// Union of colored instances whose colors must lie in `1..=k`.
    pub fn colored(name: &str) -> Self {
        UnionComposition {
            name: name.into(),
            colored: true,
        }
    }
}

impl Composition<GraphProblem> for UnionComposition {
    fn name(&self) -> &str {
        &self.name
    }

    fn additive(&self) -> u64 {
        0
    }

    fn compose(&self, _: &GraphProblem, insts: Vec<GraphInstance>) -> Result<GraphInstance> {
        let k = shared_budget(&insts, &self.name)?;
        if self.colored {
            if let Some(bad) = insts.iter().find(|i| i.graph.max_color() as u64 > k) {
                return Err(Error::invalid(alloc::format!(
                    "{}: color {} outside 1..={k}",
                    self.name,
                    bad.graph.max_color()
                )));
            }
        }
        let graphs: Vec<_> = insts.into_iter().map(|i| i.graph).collect();
        Ok(GraphInstance::new(disjoint_union(&graphs)?, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::checked_apply;
    use crate::graph::{AnnotatedGraph, WidthKind};
    use crate::graph_dim::{biclique_diminisher, clique_diminisher, GraphProblemId};

    fn clique(w: WidthKind) -> GraphProblem {
        GraphProblem::new(GraphProblemId::Clique(w))
    }

    fn biclique() -> GraphProblem {
        GraphProblem::new(GraphProblemId::Biclique(WidthKind::Cutwidth))
    }

    #[test]
    fn triangle_becomes_three_edges() {
        let inst = GraphInstance::new(AnnotatedGraph::complete(3), 3);
        let out = checked_apply(&clique(WidthKind::Cutwidth), &clique_diminisher(), &inst).unwrap();
        assert_eq!(out.branches, 3);
        assert_eq!(out.instance.k, 2);
        assert_eq!(out.instance.graph.n(), 6);
        assert_eq!(out.instance.graph.edge_count(), 3);
        assert!(clique(WidthKind::Cutwidth).decide(&out.instance).unwrap());
    }

    #[test]
    fn triangle_free_stays_no() {
        // C5 has no triangle; its neighbourhoods are edgeless.
        let c5 = AnnotatedGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let inst = GraphInstance::new(c5, 3);
        for w in WidthKind::ALL {
            let out = checked_apply(&clique(w), &clique_diminisher(), &inst).unwrap();
            assert_eq!(out.instance.graph.edge_count(), 0);
            assert!(!clique(w).decide(&out.instance).unwrap());
        }
    }

    #[test]
    fn k22_and_matching() {
        let k22 = AnnotatedGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
            .unwrap()
            .with_coloring(alloc::vec![1, 1, 2, 2])
            .unwrap();
        let inst = GraphInstance::new(k22, 2);
        let out = BicliqueRule.branch(&biclique(), &inst).unwrap();
        assert!(out.iter().any(|b| b.graph.n() == 2 && b.graph.edge_count() == 1 && b.k == 1));
        let d = checked_apply(&biclique(), &biclique_diminisher(), &inst).unwrap();
        assert!(biclique().decide(&d.instance).unwrap());

        let m = AnnotatedGraph::from_edges(8, &[(0, 4), (1, 5), (2, 6), (3, 7)])
            .unwrap()
            .with_coloring(alloc::vec![1, 1, 1, 1, 2, 2, 2, 2])
            .unwrap();
        let d = checked_apply(&biclique(), &biclique_diminisher(), &GraphInstance::new(m, 2)).unwrap();
        assert!(!biclique().decide(&d.instance).unwrap());
    }

    #[test]
    fn non_bipartite_input_is_rejected() {
        let g = AnnotatedGraph::complete(2).with_coloring(alloc::vec![1, 1]).unwrap();
        assert!(BicliqueRule.branch(&biclique(), &GraphInstance::new(g, 1)).is_err());
    }
}
