use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{shared_budget, GraphInstance, GraphProblem};
use crate::framework::{BranchingRule, Composition, Problem};
use crate::graph::disjoint_union_with_offsets;
use crate::{Error, Result};

/// `(G, r, k)` becomes `(G - r, v, k - 1)` for every neighbour `v` of `r`.
#[derive(Debug, Clone, Copy, Default)]
pub struct RootedPathRule;

impl BranchingRule<GraphProblem> for RootedPathRule {
    fn name(&self) -> &str {
        "rooted_path_branch"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let k = inst
            .k
            .checked_sub(1)
            .ok_or_else(|| Error::invalid("rooted path branching needs k >= 1"))?;
        let g = &inst.graph;
        let no = || {
            p.canonical(false, k)
                .ok_or_else(|| Error::invalid("no canonical no-instance"))
        };
        let Some(r) = g.root() else {
            return Ok(alloc::vec![no()?]);
        };
        if g.degree(r) == 0 {
            return Ok(alloc::vec![no()?]);
        }
        let (rest, old) = g.remove_vertices(&BTreeSet::from([r]));
        g.neighbors(r)
            .iter()
            .map(|&v| {
                let mut h = rest.clone();
                let new_v = old.binary_search(&v).expect("neighbour survives");
                h.set_root(Some(new_v))?;
                Ok(GraphInstance::new(h, k))
            })
            .collect()
    }
}

/// Disjoint union plus a fresh root adjacent to every old root; `k + 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct RootedPathComposition;

impl Composition<GraphProblem> for RootedPathComposition {
    fn name(&self) -> &str {
        "rooted_path_new_root"
    }

    fn additive(&self) -> u64 {
        1
    }

    fn compose(&self, _: &GraphProblem, insts: Vec<GraphInstance>) -> Result<GraphInstance> {
        let k = shared_budget(&insts, self.name())?;
        let graphs: Vec<_> = insts.iter().map(|i| i.graph.clone()).collect();
        let (mut g, offsets) = disjoint_union_with_offsets(&graphs)?;
        let root = g.add_vertex(None);
        for (inst, off) in insts.iter().zip(offsets) {
            if let Some(r) = inst.graph.root() {
                g.add_edge(root, r + off)?;
            }
        }
        g.set_root(Some(root))?;
        Ok(GraphInstance::new(g, k.checked_add(1).ok_or(Error::Overflow)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{checked_apply, Diminisher};
    use crate::graph::AnnotatedGraph;
    use crate::graph_dim::{rooted_path_diminisher, GraphProblemId};

    fn problem() -> GraphProblem {
        GraphProblem::new(GraphProblemId::RootedPath)
    }

    #[test]
    fn star_branches_into_isolated_roots() {
        let star = AnnotatedGraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap().with_root(0).unwrap();
        let out = RootedPathRule.branch(&problem(), &GraphInstance::new(star, 2)).unwrap();
        assert_eq!(out.len(), 2);
        for b in &out {
            assert_eq!(b.k, 1);
            assert_eq!(b.graph.degree(b.graph.root().unwrap()), 0);
            assert!(!problem().decide(b).unwrap());
        }
    }

    #[test]
    fn path_branches_once() {
        let p = AnnotatedGraph::path(3).with_root(0).unwrap();
        let out = RootedPathRule.branch(&problem(), &GraphInstance::new(p, 2)).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].graph, AnnotatedGraph::path(2).with_root(0).unwrap());
        assert!(problem().decide(&out[0]).unwrap());
    }

    #[test]
    fn isolated_root_gives_canonical_no() {
        let g = AnnotatedGraph::new(1).with_root(0).unwrap();
        let out = RootedPathRule.branch(&problem(), &GraphInstance::new(g, 1)).unwrap();
        assert_eq!(out, alloc::vec![problem().canonical(false, 0).unwrap()]);
    }

    #[test]
    fn composition_adds_one() {
        let yes = problem().canonical(true, 1).unwrap();
        let no = problem().canonical(false, 1).unwrap();
        let c = RootedPathComposition.compose(&problem(), alloc::vec![yes.clone(), no.clone()]).unwrap();
        assert_eq!(c.k, 2);
        assert!(problem().decide(&c).unwrap());
        let c = RootedPathComposition.compose(&problem(), alloc::vec![no.clone(), no]).unwrap();
        assert!(!problem().decide(&c).unwrap());
        let c = RootedPathComposition.compose(&problem(), alloc::vec![yes]).unwrap();
        assert!(problem().decide(&c).unwrap());
    }

    #[test]
    fn diminisher_on_short_path() {
        let p = AnnotatedGraph::path(3).with_root(0).unwrap();
        let inst = GraphInstance::new(p, 2);
        let out = checked_apply(&problem(), &rooted_path_diminisher(), &inst).unwrap();
        assert_eq!(out.instance.k, 1);
        assert!(problem().decide(&out.instance).unwrap());
        assert_eq!(rooted_path_diminisher().name(), "rooted_path");
    }
}
