//! Deliberately broken diminishers. `verify` must reject each of them; they
//! exist so the verification harness itself can be tested.

use std::collections::BTreeSet;

use diminish_core::framework::{Applied, BranchCompose, BranchingRule, Diminisher, Problem};
use diminish_core::graph_dim::{mc_path_diminisher, GraphInstance, GraphProblem, TstComposition};
use diminish_core::tm::{NtmInstance, NtmProblem, SigmaCompression};
use diminish_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    /// Multicolored path diminisher whose output recolors every vertex of
    /// color 1 with color 2.
    McPathColorFlip,
    /// Terminal Steiner tree branching that deletes the neighbor without
    /// turning its neighborhood into a clique.
    TstNoCliqueCompletion,
    /// Alphabet-preserving machine compression that keeps the step budget
    /// at `k` instead of `k - 1`.
    NtmSigmaBudget,
}

impl Mutant {
    pub const ALL: [Mutant; 3] = [
        Mutant::McPathColorFlip,
        Mutant::TstNoCliqueCompletion,
        Mutant::NtmSigmaBudget,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutant::McPathColorFlip => "mutant_mc_path_color_flip",
            Mutant::TstNoCliqueCompletion => "mutant_tst_no_clique",
            Mutant::NtmSigmaBudget => "mutant_ntm_sigma_budget",
        }
    }

    pub fn from_name(s: &str) -> Option<Mutant> {
        Mutant::ALL.into_iter().find(|m| m.name() == s)
    }
}

pub struct ColorFlip;

impl Diminisher<GraphProblem> for ColorFlip {
    fn name(&self) -> &str {
        "mc_path_color_flip"
    }

    fn size_exponent(&self) -> u32 {
        4
    }

    fn apply(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Applied<GraphInstance>> {
        let mut applied = mc_path_diminisher().apply(p, inst)?;
        let out = &mut applied.instance;
        if applied.floor || out.k < 2 {
            return Ok(applied);
        }
        if let Some(colors) = out.graph.coloring() {
            let flipped = colors.iter().map(|&c| if c == 1 { 2 } else { c }).collect();
            out.graph.set_coloring(Some(flipped))?;
        }
        Ok(applied)
    }
}

pub struct NoCliqueRule;

impl BranchingRule<GraphProblem> for NoCliqueRule {
    fn name(&self) -> &str {
        "tst_delete_neighbor"
    }

    fn branch(&self, p: &GraphProblem, inst: &GraphInstance) -> Result<Vec<GraphInstance>> {
        let g = &inst.graph;
        let t: BTreeSet<usize> = g.terminals().cloned().unwrap_or_default();
        let param = p.parameter(inst)?;
        let canonical = |answer| {
            p.trivial(answer, param)
                .ok_or_else(|| Error::Invalid("no canonical instance".into()))
        };
        if t.len() < 3 {
            return Ok(vec![canonical(p.decide(inst)?)?]);
        }
        let has_free_neighbor = |x: usize| g.neighbors(x).iter().any(|v| !t.contains(v));
        if !t.iter().all(|&x| has_free_neighbor(x)) || inst.k == 0 {
            return Ok(vec![canonical(false)?]);
        }
        if g.non_terminals().into_iter().any(|v| t.iter().all(|&x| g.has_edge(v, x))) {
            return Ok(vec![canonical(true)?]);
        }
        let t_star = *t.iter().next().expect("at least three terminals");
        Ok(g.neighbors(t_star)
            .iter()
            .filter(|v| !t.contains(v))
            .map(|&v| {
                let (h, _) = g.remove_vertices(&BTreeSet::from([v]));
                GraphInstance::new(h, inst.k - 1)
            })
            .collect())
    }
}

pub fn tst_no_clique() -> BranchCompose<NoCliqueRule, TstComposition> {
    BranchCompose::new("tst_no_clique", NoCliqueRule, TstComposition)
}

pub struct BudgetOffByOne;

impl Diminisher<NtmProblem> for BudgetOffByOne {
    fn name(&self) -> &str {
        "ntm_sigma_budget_off_by_one"
    }

    fn size_exponent(&self) -> u32 {
        3
    }

    fn apply(&self, p: &NtmProblem, inst: &NtmInstance) -> Result<Applied<NtmInstance>> {
        let mut applied = SigmaCompression.apply(p, inst)?;
        if !applied.floor && inst.k >= 2 {
            applied.instance.k = inst.k;
        }
        Ok(applied)
    }
}
