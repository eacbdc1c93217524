//! Problem names accepted by `--problem` and, for each, how instances are
//! read, written and diminished.

use diminish_core::framework::unary::{DropOne, Halving, UnaryInstance, UnaryThreshold};
use diminish_core::framework::{Diminisher, Problem};
use diminish_core::graph::parse_graph;
use diminish_core::graph_dim::{GraphInstance, GraphProblem, GraphProblemId};
use diminish_core::setcover::{parse_set_system, serialize_set_system, SetProblem, SetProblemKind, SetSystem};
use diminish_core::tm::{parse_ntm, serialize_ntm, NtmInstance, NtmProblem, NtmVariant};
use diminish_core::{Error, Result};

use crate::mutants::{tst_no_clique, BudgetOffByOne, ColorFlip, Mutant};

pub type Inst<T> = <<T as Target>::P as Problem>::Instance;

/// Everything a command needs to know about one named problem.
pub trait Target {
    type P: Problem;

    fn problem(&self) -> &Self::P;

    fn load(&self, text: &str) -> Result<Inst<Self>>;

    fn render(&self, inst: &Inst<Self>) -> String;

    fn diminisher(&self) -> Result<Box<dyn Diminisher<Self::P>>>;

    /// The instance's own budget `k`, which for width- or terminal-based
    /// parameters differs from the parameter.
    fn budget(&self, inst: &Inst<Self>) -> u64;

    /// Instance dimension checked against `--max-n`.
    fn dimension(&self, inst: &Inst<Self>) -> (&'static str, usize);

    /// Strong diminisher and acceleration factor used by `accelerate`.
    fn strong_diminisher(&self) -> Option<Box<dyn Diminisher<Self::P>>> {
        None
    }

    fn acceleration(&self, _inst: &Inst<Self>) -> u64 {
        0
    }

    /// Extra values printed by `param` next to the parameter.
    fn extra_values(&self, _inst: &Inst<Self>) -> Vec<(String, f64)> {
        Vec::new()
    }
}

fn floor_log2(x: usize) -> u64 {
    if x == 0 {
        0
    } else {
        u64::from(usize::BITS - 1 - x.leading_zeros())
    }
}

pub struct GraphTarget {
    pub problem: GraphProblem,
    pub mutant: Option<Mutant>,
}

impl Target for GraphTarget {
    type P = GraphProblem;

    fn problem(&self) -> &GraphProblem {
        &self.problem
    }

    fn load(&self, text: &str) -> Result<GraphInstance> {
        let file = parse_graph(text)?;
        let k = file
            .k
            .ok_or_else(|| Error::Invalid(format!("{} needs a `k <budget>` line", self.problem.id)))?;
        let inst = GraphInstance::new(file.graph, k);
        self.problem.validate(&inst)?;
        Ok(inst)
    }

    fn render(&self, inst: &GraphInstance) -> String {
        inst.to_text()
    }

    fn diminisher(&self) -> Result<Box<dyn Diminisher<GraphProblem>>> {
        match self.mutant {
            Some(Mutant::McPathColorFlip) => Ok(Box::new(ColorFlip)),
            Some(Mutant::TstNoCliqueCompletion) => Ok(Box::new(tst_no_clique())),
            _ => self.problem.diminisher(),
        }
    }

    fn budget(&self, inst: &GraphInstance) -> u64 {
        inst.k
    }

    fn dimension(&self, inst: &GraphInstance) -> (&'static str, usize) {
        ("vertices", inst.graph.n())
    }
}

pub struct NtmTarget {
    pub problem: NtmProblem,
    pub mutant: Option<Mutant>,
}

impl Target for NtmTarget {
    type P = NtmProblem;

    fn problem(&self) -> &NtmProblem {
        &self.problem
    }

    fn load(&self, text: &str) -> Result<NtmInstance> {
        let inst = parse_ntm(text)?;
        inst.validate()?;
        if self.problem.variant == NtmVariant::Binary && inst.machine.alphabet.len() > 2 {
            return Err(Error::Invalid("ntm_binary needs at most two tape symbols".into()));
        }
        Ok(inst)
    }

    fn render(&self, inst: &NtmInstance) -> String {
        serialize_ntm(inst)
    }

    fn diminisher(&self) -> Result<Box<dyn Diminisher<NtmProblem>>> {
        Ok(match self.mutant {
            Some(Mutant::NtmSigmaBudget) => Box::new(BudgetOffByOne),
            _ => self.problem.diminisher(),
        })
    }

    fn budget(&self, inst: &NtmInstance) -> u64 {
        inst.k
    }

    fn dimension(&self, inst: &NtmInstance) -> (&'static str, usize) {
        ("input symbols", inst.input.len())
    }
}

pub struct SetTarget {
    pub problem: SetProblem,
}

impl Target for SetTarget {
    type P = SetProblem;

    fn problem(&self) -> &SetProblem {
        &self.problem
    }

    fn load(&self, text: &str) -> Result<SetSystem> {
        let file = parse_set_system(text)?;
        if let Some(kind) = file.kind {
            if kind != self.problem.kind {
                return Err(Error::Invalid(format!(
                    "file declares problem {} but {} was requested",
                    kind.tag(),
                    self.problem.kind.tag()
                )));
            }
        }
        Ok(file.system)
    }

    fn render(&self, inst: &SetSystem) -> String {
        serialize_set_system(inst, Some(self.problem.kind))
    }

    fn diminisher(&self) -> Result<Box<dyn Diminisher<SetProblem>>> {
        Ok(self.problem.diminisher())
    }

    fn budget(&self, inst: &SetSystem) -> u64 {
        inst.k
    }

    fn dimension(&self, inst: &SetSystem) -> (&'static str, usize) {
        ("universe elements or sets", inst.n.max(inst.m()))
    }

    /// `floor(log2 n)` with `n` the universe (Set Cover) or the family size
    /// (Hitting Set).
    fn acceleration(&self, inst: &SetSystem) -> u64 {
        floor_log2(self.problem.log_base(inst))
    }

    fn strong_diminisher(&self) -> Option<Box<dyn Diminisher<SetProblem>>> {
        Some(self.problem.diminisher())
    }

    fn extra_values(&self, inst: &SetSystem) -> Vec<(String, f64)> {
        let base = self.problem.log_base(inst).max(1) as f64;
        vec![("k_log2_n".into(), inst.k as f64 * base.log2())]
    }
}

/// `unary_threshold` files hold two lines, `x <bits>` and `k <budget>`.
pub fn parse_unary(text: &str) -> Result<UnaryInstance> {
    let mut bits: Option<String> = None;
    let mut k: Option<u64> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(key) = toks.next() else { continue };
        let value = toks.next().unwrap_or("");
        if toks.next().is_some() {
            return Err(Error::Parse {
                line,
                message: "trailing tokens".into(),
            });
        }
        match key {
            "x" => bits = Some(value.to_string()),
            "k" => {
                k = Some(value.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad budget {value:?}"),
                })?)
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    let k = k.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing `k` line".into(),
    })?;
    UnaryInstance::parse_bits(bits.as_deref().unwrap_or(""), k)
}

pub fn serialize_unary(inst: &UnaryInstance) -> String {
    format!("x {}\nk {}\n", inst.bit_string(), inst.k)
}

pub struct UnaryTarget {
    pub problem: UnaryThreshold,
}

impl Target for UnaryTarget {
    type P = UnaryThreshold;

    fn problem(&self) -> &UnaryThreshold {
        &self.problem
    }

    fn load(&self, text: &str) -> Result<UnaryInstance> {
        parse_unary(text)
    }

    fn render(&self, inst: &UnaryInstance) -> String {
        serialize_unary(inst)
    }

    fn diminisher(&self) -> Result<Box<dyn Diminisher<UnaryThreshold>>> {
        Ok(Box::new(DropOne))
    }

    fn budget(&self, inst: &UnaryInstance) -> u64 {
        inst.k
    }

    fn dimension(&self, inst: &UnaryInstance) -> (&'static str, usize) {
        ("bits", inst.bits.len())
    }

    /// `floor(log2(|x| + 1))`.
    fn acceleration(&self, inst: &UnaryInstance) -> u64 {
        floor_log2(inst.bits.len() + 1)
    }

    fn strong_diminisher(&self) -> Option<Box<dyn Diminisher<UnaryThreshold>>> {
        Some(Box::new(Halving))
    }
}

pub enum Registered {
    Graph(GraphTarget),
    Ntm(NtmTarget),
    Set(SetTarget),
    Unary(UnaryTarget),
}

impl Registered {
    pub fn lookup(name: &str) -> Result<Registered> {
        if name == "unary_threshold" {
            return Ok(Registered::Unary(UnaryTarget {
                problem: UnaryThreshold,
            }));
        }
        if let Some(m) = Mutant::from_name(name) {
            return Ok(match m {
                Mutant::McPathColorFlip => Registered::Graph(GraphTarget {
                    problem: GraphProblem::new(GraphProblemId::McPath),
                    mutant: Some(m),
                }),
                Mutant::TstNoCliqueCompletion => Registered::Graph(GraphTarget {
                    problem: GraphProblem::new(GraphProblemId::Tst),
                    mutant: Some(m),
                }),
                Mutant::NtmSigmaBudget => Registered::Ntm(NtmTarget {
                    problem: NtmProblem::new(NtmVariant::Sigma),
                    mutant: Some(m),
                }),
            });
        }
        if let Ok(kind) = name.parse::<SetProblemKind>() {
            return Ok(Registered::Set(SetTarget {
                problem: SetProblem::new(kind),
            }));
        }
        if let Ok(v) = name.parse::<NtmVariant>() {
            return Ok(Registered::Ntm(NtmTarget {
                problem: NtmProblem::new(v),
                mutant: None,
            }));
        }
        if let Ok(id) = name.parse::<GraphProblemId>() {
            return Ok(Registered::Graph(GraphTarget {
                problem: GraphProblem::new(id),
                mutant: None,
            }));
        }
        Err(Error::Invalid(format!(
            "unknown problem {name:?}; known problems: {}",
            known_problems().join(", ")
        )))
    }
}

pub fn known_problems() -> Vec<String> {
    let mut out: Vec<String> = GraphProblemId::diminishable()
        .into_iter()
        .map(|id| id.name())
        .collect();
    out.push("biclique".into());
    out.push(GraphProblemId::SteinerTree.name());
    out.extend(NtmVariant::ALL.map(|v| v.name().to_string()));
    for k in SetProblemKind::ALL {
        out.push(k.tag().into());
        out.push(k.name().into());
    }
    out.push("unary_threshold".into());
    out.extend(Mutant::ALL.map(|m| m.name().to_string()));
    out
}
