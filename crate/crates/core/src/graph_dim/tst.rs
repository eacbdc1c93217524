use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{shared_budget, GraphInstance, GraphProblem};
use crate::framework::{BranchingRule, Composition, Problem, Reduction};
use crate::graph::AnnotatedGraph;
use crate::{Error, Result};

fn terminals_of(g: &AnnotatedGraph) -> BTreeSet<usize> {
    g.terminals().cloned().unwrap_or_default()
}

fn canonical(p: &GraphProblem, answer: bool, below: u64) -> Result<GraphInstance> {
    p.trivial(answer, below)
        .ok_or_else(|| Error::invalid("no canonical terminal Steiner tree instance"))
}

/// Branch instance for the non-terminal `v`: delete `v` and turn its
/// neighbourhood into a clique, at `k - 1`.
pub fn tst_branch_instance(inst: &GraphInstance, v: usize) -> GraphInstance {
    let g = inst.graph.make_clique(&inst.graph.neighborhood(v));
    let (h, _) = g.remove_vertices(&BTreeSet::from([v]));
    GraphInstance::new(h, inst.k.saturating_sub(1))
}

/// Terminal Steiner tree branching on the neighbours of the lowest terminal.
///
/// Guard cases produce a single canonical instance: fewer than three
/// terminals (decided directly), a terminal without non-terminal neighbours
/// (no), `k = 0` (no), and a non-terminal adjacent to all terminals (yes).
#[derive(Debug, Clone, Copy, Default)]
pub struct TstRule;

impl BranchingRule<GraphProblem> for TstRule {
    fn name(&self) -> &str {
        "tst_contract_neighbor"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let g = &inst.graph;
        let t = terminals_of(g);
        let param = p.parameter(inst)?;
        if t.len() < 3 {
            return Ok(alloc::vec![canonical(p, p.decide(inst)?, param)?]);
        }
        let has_free_neighbor = |x: usize| g.neighbors(x).iter().any(|v| !t.contains(v));
        if !t.iter().all(|&x| has_free_neighbor(x)) || inst.k == 0 {
            return Ok(alloc::vec![canonical(p, false, param)?]);
        }
        if g.non_terminals().into_iter().any(|v| t.iter().all(|&x| g.has_edge(v, x))) {
            return Ok(alloc::vec![canonical(p, true, param)?]);
        }
        let t_star = *t.iter().next().expect("at least three terminals");
        Ok(g.neighbors(t_star)
            .iter()
            .filter(|v| !t.contains(v))
            .map(|&v| tst_branch_instance(inst, v))
            .collect())
    }
}

/// Disjoint union in which the `i`-th terminal of every input is the same
/// vertex. Terminals come first in the output, then the non-terminals of
/// each input in order.
#[derive(Debug, Clone, Copy, Default)]
pub struct TstComposition;

impl TstComposition {
    /// The composed instance and, per vertex, the input it came from
    /// (`None` for the shared terminals).
    pub fn compose_with_provenance(
        &self,
        insts: &[GraphInstance],
    ) -> Result<(GraphInstance, Vec<Option<usize>>)> {
        let k = shared_budget(insts, "tst_identify_terminals")?;
        let t_count = terminals_of(&insts[0].graph).len();
        if insts.iter().any(|i| terminals_of(&i.graph).len() != t_count) {
            return Err(Error::invalid("tst composition: inputs have different terminal counts"));
        }
        let mut g = AnnotatedGraph::new(t_count);
        let mut provenance = alloc::vec![None; t_count];
        for (idx, inst) in insts.iter().enumerate() {
            let src = &inst.graph;
            let terms = terminals_of(src);
            let mut map = BTreeMap::new();
            for (i, &x) in terms.iter().enumerate() {
                map.insert(x, i);
            }
            for v in src.non_terminals() {
                map.insert(v, g.add_vertex(None));
                provenance.push(Some(idx));
            }
            for (u, v) in src.edges() {
                g.add_edge(map[&u], map[&v])?;
            }
        }
        g.set_terminals(Some((0..t_count).collect()))?;
        Ok((GraphInstance::new(g, k), provenance))
    }
}

impl Composition<GraphProblem> for TstComposition {
    fn name(&self) -> &str {
        "tst_identify_terminals"
    }

    fn additive(&self) -> u64 {
        0
    }

    fn compose(&self, _: &GraphProblem, insts: Vec<GraphInstance>) -> Result<GraphInstance> {
        self.compose_with_provenance(&insts).map(|(g, _)| g)
    }
}

/// Whether every path between non-terminals from different inputs of a
/// composition passes through a terminal.
pub fn separated_by_terminals(g: &AnnotatedGraph, provenance: &[Option<usize>]) -> bool {
    let non_terminals: BTreeSet<usize> = g.non_terminals().into_iter().collect();
    let (h, old) = g.induced_with_map(&non_terminals);
    h.components().iter().all(|comp| {
        let origins: BTreeSet<_> = comp.iter().map(|&v| provenance[old[v]]).collect();
        origins.len() <= 1
    })
}

/// Terminal Steiner tree to Steiner tree: every edge at a terminal becomes a
/// path of length `2(k + |T|)`, and `k' = |T| (2(k + |T|) - 1) + k`.
///
/// With three or more terminals, edges between two terminals are dropped
/// first; no terminal Steiner tree can use them.
#[derive(Debug, Clone, Copy, Default)]
pub struct TstToSteiner;

impl TstToSteiner {
    pub fn new_budget(k: u64, terminals: u64) -> Result<u64> {
        let len = k
            .checked_add(terminals)
            .and_then(|x| x.checked_mul(2))
            .ok_or(Error::Overflow)?;
        // len is 0 only when k = |T| = 0, where the product vanishes anyway.
        terminals
            .checked_mul(len.saturating_sub(1))
            .and_then(|x| x.checked_add(k))
            .ok_or(Error::Overflow)
    }
}

impl Reduction<GraphProblem, GraphProblem> for TstToSteiner {
    fn name(&self) -> &str {
        "tst_to_steiner_paths"
    }

    fn parameter_non_increasing(&self) -> bool {
        false
    }

    fn reduce(&self, _: &GraphProblem, _: &GraphProblem, inst: &GraphInstance) -> Result<GraphInstance> {
        let mut g = inst.graph.clone();
        let t = terminals_of(&g);
        let tc = t.len() as u64;
        if t.len() >= 3 {
            for (u, v) in g.edges() {
                if t.contains(&u) && t.contains(&v) {
                    g.remove_edge(u, v);
                }
            }
        }
        let len = inst
            .k
            .checked_add(tc)
            .and_then(|x| x.checked_mul(2))
            .ok_or(Error::Overflow)?;
        let k2 = TstToSteiner::new_budget(inst.k, tc)?;
        let internal = usize::try_from(len.saturating_sub(1)).map_err(|_| Error::Overflow)?;
        for (u, v) in g.edges() {
            if !(t.contains(&u) || t.contains(&v)) {
                continue;
            }
            g.remove_edge(u, v);
            let mut prev = u;
            for _ in 0..internal {
                let x = g.add_vertex(None);
                g.add_edge(prev, x)?;
                prev = x;
            }
            g.add_edge(prev, v)?;
        }
        g.set_terminals((!t.is_empty()).then_some(t))?;
        Ok(GraphInstance::new(g, k2))
    }
}

/// Steiner tree to terminal Steiner tree: a pendant leaf per terminal. The
/// leaves become the terminal set, the old terminals ordinary vertices, and
/// `k' = k + |T|`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SteinerToTst;

impl Reduction<GraphProblem, GraphProblem> for SteinerToTst {
    fn name(&self) -> &str {
        "steiner_to_tst_pendant_leaves"
    }

    fn parameter_non_increasing(&self) -> bool {
        false
    }

    fn reduce(&self, _: &GraphProblem, _: &GraphProblem, inst: &GraphInstance) -> Result<GraphInstance> {
        let mut g = inst.graph.clone();
        let t = terminals_of(&g);
        let mut leaves = BTreeSet::new();
        for &x in &t {
            let leaf = g.add_vertex(None);
            g.add_edge(x, leaf)?;
            leaves.insert(leaf);
        }
        g.set_terminals((!leaves.is_empty()).then_some(leaves))?;
        let k2 = inst.k.checked_add(t.len() as u64).ok_or(Error::Overflow)?;
        Ok(GraphInstance::new(g, k2))
    }
}
