use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{GraphInstance, GraphProblem};
use crate::framework::{BranchingRule, Problem};
use crate::graph::AnnotatedGraph;
use crate::{Error, Result};

fn canonical(p: &GraphProblem, answer: bool, k: u64) -> Result<GraphInstance> {
    p.canonical(answer, k)
        .ok_or_else(|| Error::invalid("no canonical instance for this parameter"))
}

fn colors_of(g: &AnnotatedGraph) -> Result<&[u32]> {
    g.coloring()
        .ok_or_else(|| Error::invalid("colored instance without a coloring"))
}

/// Ordered triplets `(v1, v2, v3)` forming a path `v1 - v2 - v3` with three
/// distinct colors, in lexicographic order.
pub fn mc_path_triplets(g: &AnnotatedGraph) -> Vec<(usize, usize, usize)> {
    let Some(col) = g.coloring() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        for &v2 in g.neighbors(v1) {
            if col[v2] == col[v1] {
                continue;
            }
            for &v3 in g.neighbors(v2) {
                if v3 != v1 && col[v3] != col[v1] && col[v3] != col[v2] {
                    out.push((v1, v2, v3));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Branch instance for one triplet: drop every other vertex carrying one of
/// the three colors, cut `v2` down to the single edge `{v2, v3}` and compact
/// the colors.
pub fn mc_path_branch(inst: &GraphInstance, (v1, v2, v3): (usize, usize, usize)) -> Result<GraphInstance> {
    let g = &inst.graph;
    let col = colors_of(g)?;
    let used = [col[v1], col[v2], col[v3]];
    let drop: BTreeSet<usize> = (0..g.n())
        .filter(|&w| w != v2 && w != v3 && used.contains(&col[w]))
        .collect();
    let (mut h, old) = g.remove_vertices(&drop);
    let new2 = old.binary_search(&v2).expect("v2 kept");
    let new3 = old.binary_search(&v3).expect("v3 kept");
    for w in h.neighborhood(new2) {
        if w != new3 {
            h.remove_edge(new2, w);
        }
    }
    Ok(GraphInstance::new(h.compact_colors(), inst.k - 1))
}

/// Multicolored path: one branch per multicolored triplet, `k - 1` colors
/// each. For `k <= 2` the instance is decided directly.
#[derive(Debug, Clone, Copy, Default)]
pub struct McPathRule;

impl BranchingRule<GraphProblem> for McPathRule {
    fn name(&self) -> &str {
        "mc_path_triplets"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let k = inst.k;
        if k == 0 {
            return Err(Error::invalid("multicolored path branching needs k >= 1"));
        }
        if k <= 2 {
            return Ok(alloc::vec![canonical(p, p.decide(inst)?, k - 1)?]);
        }
        let triplets = mc_path_triplets(&inst.graph);
        if triplets.is_empty() {
            return Ok(alloc::vec![canonical(p, false, k - 1)?]);
        }
        triplets.into_iter().map(|t| mc_path_branch(inst, t)).collect()
    }
}

/// Colorful graph motif: one branch per bichromatic edge `{v, w}`, merging
/// both endpoints into a fresh vertex of `v`'s color.
#[derive(Debug, Clone, Copy, Default)]
pub struct MotifRule;

impl BranchingRule<GraphProblem> for MotifRule {
    fn name(&self) -> &str {
        "motif_edge_merge"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let k = inst.k;
        if k == 0 {
            return Err(Error::invalid("colorful motif branching needs k >= 1"));
        }
        let mut g = inst.graph.clone();
        let col = colors_of(&g)?.to_vec();
        // A motif has one vertex per color, so edges inside a color class
        // are never used.
        for (u, v) in g.edges() {
            if col[u] == col[v] {
                g.remove_edge(u, v);
            }
        }
        let edges = g.edges();
        if edges.is_empty() {
            let answer = k == 1 && p.decide(inst)?;
            return Ok(alloc::vec![canonical(p, answer, k - 1)?]);
        }
        let mut out = Vec::with_capacity(edges.len());
        for (v, w) in edges {
            let gone = [col[v], col[w]];
            let drop: BTreeSet<usize> = (0..g.n()).filter(|&x| gone.contains(&col[x])).collect();
            let (mut h, old) = g.remove_vertices(&drop);
            let star = h.add_vertex(Some(col[v]));
            let nb: BTreeSet<usize> = g.neighbors(v).union(g.neighbors(w)).copied().collect();
            for x in nb {
                if let Ok(i) = old.binary_search(&x) {
                    h.add_edge(star, i)?;
                }
            }
            out.push(GraphInstance::new(h.compact_colors(), k - 1));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::checked_apply;
    use crate::graph_dim::{mc_path_diminisher, motif_diminisher, GraphProblemId};

    fn mc() -> GraphProblem {
        GraphProblem::new(GraphProblemId::McPath)
    }

    fn motif() -> GraphProblem {
        GraphProblem::new(GraphProblemId::ColorfulMotif)
    }

    fn colored(n: usize, edges: &[(usize, usize)], col: &[u32]) -> AnnotatedGraph {
        AnnotatedGraph::from_edges(n, edges).unwrap().with_coloring(col.to_vec()).unwrap()
    }

    #[test]
    fn rainbow_path_has_two_triplets() {
        let inst = GraphInstance::new(colored(3, &[(0, 1), (1, 2)], &[1, 2, 3]), 3);
        let out = McPathRule.branch(&mc(), &inst).unwrap();
        assert_eq!(out.len(), 2);
        let first = &out[0];
        assert_eq!((first.graph.n(), first.graph.edge_count(), first.k), (2, 1, 2));
        assert!(mc().decide(first).unwrap());
    }

    #[test]
    fn rainbow_triangle_has_six_yes_branches() {
        let inst = GraphInstance::new(colored(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2, 3]), 3);
        let out = McPathRule.branch(&mc(), &inst).unwrap();
        assert_eq!(out.len(), 6);
        assert!(out.iter().all(|b| b.graph.edge_count() == 1 && mc().decide(b).unwrap()));
    }

    #[test]
    fn no_triplet_gives_canonical_no() {
        let inst = GraphInstance::new(colored(3, &[(0, 1)], &[1, 2, 3]), 3);
        let out = McPathRule.branch(&mc(), &inst).unwrap();
        assert_eq!(out, alloc::vec![mc().canonical(false, 2).unwrap()]);
        let d = checked_apply(&mc(), &mc_path_diminisher(), &inst).unwrap();
        assert!(!mc().decide(&d.instance).unwrap());
    }

    #[test]
    fn motif_merge_on_rainbow_triangle() {
        let inst = GraphInstance::new(colored(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2, 3]), 3);
        let out = MotifRule.branch(&motif(), &inst).unwrap();
        assert_eq!(out.len(), 3);
        // Branch {x, y}: z plus the merged vertex.
        assert_eq!((out[0].graph.n(), out[0].graph.edge_count()), (2, 1));
        assert!(motif().decide(&out[0]).unwrap());
        let d = checked_apply(&motif(), &motif_diminisher(), &inst).unwrap();
        assert_eq!(d.instance.k, 2);
    }

    #[test]
    fn motif_without_edges_is_no() {
        let inst = GraphInstance::new(colored(2, &[], &[1, 2]), 2);
        let out = MotifRule.branch(&motif(), &inst).unwrap();
        assert_eq!(out, alloc::vec![motif().canonical(false, 1).unwrap()]);
    }
}
