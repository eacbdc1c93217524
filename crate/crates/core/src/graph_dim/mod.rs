//! Branching rules, compositions and diminishers for the graph problems, and
//! the reductions between Terminal Steiner Tree and Steiner Tree.
//!
//! Every problem shares one instance type, [`GraphInstance`]: an annotated
//! graph plus the solution-size budget `k`. What differs is which
//! annotations are required and how the parameter is evaluated (see
//! [`GraphProblemId`]).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::framework::{Caps, Diminisher, Problem};
use crate::graph::oracle::{self, OracleLimits};
use crate::graph::{
    random_graph_with, serialize_graph, width, AnnotatedGraph, AnnotationSpec, Guard, WidthKind,
    DEFAULT_WIDTH_CAP,
};
use crate::rng::{Rng, SeededRng};
use crate::{Error, Result};

mod clique;
mod colored;
mod rooted_path;
mod tst;

pub use clique::{biclique_branch, BicliqueRule, CliqueRule, UnionComposition};
pub use colored::{mc_path_branch, mc_path_triplets, McPathRule, MotifRule};
pub use rooted_path::{RootedPathComposition, RootedPathRule};
pub use tst::{
    separated_by_terminals, tst_branch_instance, SteinerToTst, TstComposition, TstRule, TstToSteiner,
};

use crate::framework::BranchCompose;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphProblemId {
    RootedPath,
    Clique(WidthKind),
    Biclique(WidthKind),
    McPath,
    ColorfulMotif,
    Tst,
    SteinerTree,
}

impl GraphProblemId {
    /// Every problem that has a diminisher.
    pub fn diminishable() -> Vec<GraphProblemId> {
        let mut out = alloc::vec![GraphProblemId::RootedPath];
        out.extend(WidthKind::ALL.map(GraphProblemId::Clique));
        out.extend(WidthKind::ALL.map(GraphProblemId::Biclique));
        out.extend([
            GraphProblemId::McPath,
            GraphProblemId::ColorfulMotif,
            GraphProblemId::Tst,
        ]);
        out
    }

    pub fn name(self) -> String {
        match self {
            GraphProblemId::RootedPath => "rooted_path".into(),
            GraphProblemId::Clique(w) => format!("clique_{}", w.tag()),
            GraphProblemId::Biclique(w) => format!("biclique_{}", w.tag()),
            GraphProblemId::McPath => "mc_path".into(),
            GraphProblemId::ColorfulMotif => "colorful_motif".into(),
            GraphProblemId::Tst => "tst".into(),
            GraphProblemId::SteinerTree => "steiner_tree".into(),
        }
    }
}

impl fmt::Display for GraphProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for GraphProblemId {
    type Err = Error;

    /// Accepts the names produced by [`GraphProblemId::name`]; a bare
    /// `biclique` means `biclique_cw`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "biclique" {
            return Ok(GraphProblemId::Biclique(WidthKind::Cutwidth));
        }
        let mut all = GraphProblemId::diminishable();
        all.push(GraphProblemId::SteinerTree);
        all.into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown graph problem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    pub graph: AnnotatedGraph,
    pub k: u64,
}

impl GraphInstance {
    pub fn new(graph: AnnotatedGraph, k: u64) -> Self {
        GraphInstance { graph, k }
    }

    pub fn to_text(&self) -> String {
        serialize_graph(&self.graph, Some(self.k))
    }
}

/// Descriptor for one graph problem: parameter, oracle, canonical instances,
/// generator and the guard predicates its diminisher relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphProblem {
    pub id: GraphProblemId,
    pub limits: OracleLimits,
    pub width_cap: usize,
}

impl GraphProblem {
    pub fn new(id: GraphProblemId) -> Self {
        GraphProblem {
            id,
            limits: OracleLimits::default(),
            width_cap: DEFAULT_WIDTH_CAP,
        }
    }

    /// Check the annotations this problem requires.
    pub fn validate(&self, inst: &GraphInstance) -> Result<()> {
        let g = &inst.graph;
        g.validate()?;
        match self.id {
            GraphProblemId::Biclique(_) => oracle::bipartition(g).map(|_| ()),
            GraphProblemId::McPath | GraphProblemId::ColorfulMotif => {
                if g.n() > 0 && g.coloring().is_none() {
                    return Err(Error::invalid(format!("{} needs a vertex coloring", self.id)));
                }
                if g.max_color() as u64 > inst.k {
                    return Err(Error::invalid(format!(
                        "color {} exceeds the {} colors of the instance",
                        g.max_color(),
                        inst.k
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// The diminisher for this problem.
    pub fn diminisher(&self) -> Result<Box<dyn Diminisher<GraphProblem>>> {
        Ok(match self.id {
            GraphProblemId::RootedPath => Box::new(rooted_path_diminisher()),
            GraphProblemId::Clique(_) => Box::new(clique_diminisher()),
            GraphProblemId::Biclique(_) => Box::new(biclique_diminisher()),
            GraphProblemId::McPath => Box::new(mc_path_diminisher()),
            GraphProblemId::ColorfulMotif => Box::new(motif_diminisher()),
            GraphProblemId::Tst => Box::new(tst_diminisher()),
            GraphProblemId::SteinerTree => {
                return Err(Error::invalid("steiner_tree has no diminisher here"))
            }
        })
    }
}

pub fn rooted_path_diminisher() -> BranchCompose<RootedPathRule, RootedPathComposition> {
    BranchCompose::new("rooted_path", RootedPathRule, RootedPathComposition)
}

pub fn clique_diminisher() -> BranchCompose<CliqueRule, UnionComposition> {
    BranchCompose::new("clique", CliqueRule, UnionComposition::new("clique_union"))
}

pub fn biclique_diminisher() -> BranchCompose<BicliqueRule, UnionComposition> {
    BranchCompose::new("biclique", BicliqueRule, UnionComposition::new("biclique_union"))
}

pub fn mc_path_diminisher() -> BranchCompose<McPathRule, UnionComposition> {
    BranchCompose::new("mc_path", McPathRule, UnionComposition::colored("mc_path_union"))
        .with_size_exponent(4)
}

pub fn motif_diminisher() -> BranchCompose<MotifRule, UnionComposition> {
    BranchCompose::new("colorful_motif", MotifRule, UnionComposition::colored("motif_union"))
}

pub fn tst_diminisher() -> BranchCompose<TstRule, TstComposition> {
    BranchCompose::new("tst", TstRule, TstComposition)
}

fn path_instance(p: u64, colored: bool) -> GraphInstance {
    let mut g = AnnotatedGraph::path(p as usize);
    if colored {
        let col = (1..=p as u32).collect();
        g.set_coloring(Some(col)).expect("one color per vertex");
    }
    GraphInstance::new(g, p)
}

fn empty_colored() -> AnnotatedGraph {
    let mut g = AnnotatedGraph::new(0);
    g.set_coloring(Some(Vec::new())).expect("empty coloring");
    g
}

impl Problem for GraphProblem {
    type Instance = GraphInstance;

    fn name(&self) -> &'static str {
        match self.id {
            GraphProblemId::RootedPath => "rooted_path",
            GraphProblemId::Clique(WidthKind::Cutwidth) => "clique_cw",
            GraphProblemId::Clique(WidthKind::Treewidth) => "clique_tw",
            GraphProblemId::Clique(WidthKind::Bandwidth) => "clique_bw",
            GraphProblemId::Clique(WidthKind::MaxDegree) => "clique_maxdeg",
            GraphProblemId::Biclique(WidthKind::Cutwidth) => "biclique_cw",
            GraphProblemId::Biclique(WidthKind::Treewidth) => "biclique_tw",
            GraphProblemId::Biclique(WidthKind::Bandwidth) => "biclique_bw",
            GraphProblemId::Biclique(WidthKind::MaxDegree) => "biclique_maxdeg",
            GraphProblemId::McPath => "mc_path",
            GraphProblemId::ColorfulMotif => "colorful_motif",
            GraphProblemId::Tst => "tst",
            GraphProblemId::SteinerTree => "steiner_tree",
        }
    }

    fn parameter(&self, inst: &GraphInstance) -> Result<u64> {
        match self.id {
            GraphProblemId::RootedPath | GraphProblemId::McPath | GraphProblemId::ColorfulMotif => {
                Ok(inst.k)
            }
            GraphProblemId::Clique(w) | GraphProblemId::Biclique(w) => {
                width(&inst.graph, w, self.width_cap).map(|v| v.value)
            }
            GraphProblemId::Tst | GraphProblemId::SteinerTree => inst
                .k
                .checked_add(inst.graph.terminal_count() as u64)
                .ok_or(Error::Overflow),
        }
    }

    fn decide(&self, inst: &GraphInstance) -> Result<bool> {
        let (g, k, lim) = (&inst.graph, inst.k, &self.limits);
        match self.id {
            GraphProblemId::RootedPath => oracle::rooted_path(g, k, lim),
            GraphProblemId::Clique(_) => oracle::clique(g, k, lim),
            GraphProblemId::Biclique(_) => oracle::biclique(g, k, lim),
            GraphProblemId::McPath => oracle::mc_path(g, k, lim),
            GraphProblemId::ColorfulMotif => oracle::colorful_motif(g, k, lim),
            GraphProblemId::Tst => oracle::tst(g, k, lim),
            GraphProblemId::SteinerTree => oracle::steiner_tree(g, k, lim),
        }
    }

    fn size(&self, inst: &GraphInstance) -> usize {
        inst.to_text().len()
    }

    fn canonical(&self, answer: bool, p: u64) -> Option<GraphInstance> {
        let empty = |k| GraphInstance::new(AnnotatedGraph::new(0), k);
        match self.id {
            // No root means no path at all.
            GraphProblemId::RootedPath => Some(if answer {
                let g = AnnotatedGraph::path(p as usize + 1).with_root(0).ok()?;
                GraphInstance::new(g, p)
            } else {
                empty(p)
            }),
            GraphProblemId::Clique(_) => (p == 0).then(|| empty(if answer { 0 } else { 1 })),
            GraphProblemId::Biclique(_) => (p == 0).then(|| {
                GraphInstance::new(empty_colored(), if answer { 0 } else { 1 })
            }),
            GraphProblemId::McPath | GraphProblemId::ColorfulMotif => match (answer, p) {
                (true, p) => Some(path_instance(p, true)),
                (false, 0) => None,
                (false, p) => Some(GraphInstance::new(empty_colored(), p)),
            },
            // With at most one terminal every instance is a yes-instance.
            GraphProblemId::Tst | GraphProblemId::SteinerTree => match (answer, p) {
                (true, p) => Some(empty(p)),
                (false, p) if p >= 2 => {
                    let g = AnnotatedGraph::new(2).with_terminals([0, 1]).ok()?;
                    Some(GraphInstance::new(g, p - 2))
                }
                _ => None,
            },
        }
    }

    fn floor(&self) -> u64 {
        match self.id {
            GraphProblemId::McPath | GraphProblemId::ColorfulMotif => 1,
            GraphProblemId::Tst | GraphProblemId::SteinerTree => 2,
            _ => 0,
        }
    }

    fn generate(&self, rng: &mut SeededRng, caps: &Caps) -> Result<GraphInstance> {
        let max_n = caps.max_n.max(2);
        let max_k = caps.max_k.max(1);
        let p: f64 = rng.gen_range(0.2..=0.8);
        let mut spec = AnnotationSpec::default();
        let (n, k) = match self.id {
            GraphProblemId::RootedPath => {
                spec.root = true;
                (rng.gen_range(2..=max_n), rng.gen_range(1..=max_k))
            }
            GraphProblemId::Clique(_) => {
                spec.guard = Guard::AtLeastOneEdge;
                (rng.gen_range(2..=max_n), rng.gen_range(1..=max_k))
            }
            GraphProblemId::Biclique(_) => {
                spec.sides = true;
                spec.guard = Guard::AtLeastOneEdge;
                (rng.gen_range(2..=max_n), rng.gen_range(1..=max_k.min(3)))
            }
            GraphProblemId::McPath | GraphProblemId::ColorfulMotif => {
                let n = rng.gen_range(3.min(max_n)..=max_n);
                let k = rng.gen_range(2..=max_k.max(2).min(n as u64));
                spec.colors = Some(k as u32);
                let p = rng.gen_range(0.15..=0.75);
                let g = random_graph_with(rng, n, p, &spec)?;
                return Ok(GraphInstance::new(g, k));
            }
            GraphProblemId::Tst => {
                if max_n < 5 {
                    return Err(Error::invalid("tst generator needs max_n >= 5"));
                }
                let n = rng.gen_range(5..=max_n);
                spec.terminals = Some((3, 4.min(n - 2)));
                spec.guard = Guard::TerminalSteiner;
                (n, rng.gen_range(1..=max_k.min(3)))
            }
            GraphProblemId::SteinerTree => {
                spec.terminals = Some((0, 3));
                (rng.gen_range(2..=max_n), rng.gen_range(0..=max_k.min(2)))
            }
        };
        let g = random_graph_with(rng, n, p, &spec)?;
        Ok(GraphInstance::new(g, k))
    }

    fn admissible(&self, inst: &GraphInstance) -> bool {
        let g = &inst.graph;
        self.validate(inst).is_ok()
            && match self.id {
                GraphProblemId::RootedPath => g.root().is_some() && inst.k >= 1,
                GraphProblemId::Clique(_) | GraphProblemId::Biclique(_) => g.edge_count() > 0,
                GraphProblemId::McPath | GraphProblemId::ColorfulMotif => {
                    inst.k >= 2 && g.coloring().is_some()
                }
                GraphProblemId::Tst => crate::graph::tst_guard(g) && inst.k >= 1,
                GraphProblemId::SteinerTree => true,
            }
    }

    fn shrink(&self, inst: &GraphInstance) -> Vec<GraphInstance> {
        let g = &inst.graph;
        let mut out = Vec::new();
        for v in 0..g.n() {
            let (h, _) = g.remove_vertices(&BTreeSet::from([v]));
            out.push(GraphInstance::new(h, inst.k));
        }
        for (u, v) in g.edges() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            out.push(GraphInstance::new(h, inst.k));
        }
        if inst.k > 0 {
            out.push(GraphInstance::new(g.clone(), inst.k - 1));
        }
        out
    }
}

/// All branch instances must share one budget `k`.
fn shared_budget(insts: &[GraphInstance], who: &str) -> Result<u64> {
    let first = insts
        .first()
        .ok_or_else(|| Error::invalid(format!("{who}: nothing to compose")))?;
    if let Some(other) = insts.iter().find(|i| i.k != first.k) {
        return Err(Error::invalid(format!(
            "{who}: inputs disagree on k ({} vs {})",
            first.k, other.k
        )));
    }
    Ok(first.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in GraphProblemId::diminishable() {
            assert_eq!(id.name().parse::<GraphProblemId>().unwrap(), id);
            assert_eq!(GraphProblem::new(id).name(), id.name());
        }
        assert_eq!(
            "biclique".parse::<GraphProblemId>().unwrap(),
            GraphProblemId::Biclique(WidthKind::Cutwidth)
        );
    }

    #[test]
    fn canonical_instances_have_their_answer_and_parameter() {
        let mut ids = GraphProblemId::diminishable();
        ids.push(GraphProblemId::SteinerTree);
        for id in ids {
            let p = GraphProblem::new(id);
            for answer in [true, false] {
                for k in 0..4 {
                    if let Some(inst) = p.canonical(answer, k) {
                        assert_eq!(p.decide(&inst).unwrap(), answer, "{id} {answer} {k}");
                        assert_eq!(p.parameter(&inst).unwrap(), k, "{id} {answer} {k}");
                    }
                }
                assert!(p.trivial(answer, p.floor() + 1).is_some(), "{id} {answer}");
            }
        }
    }
}
