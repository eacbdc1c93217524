//! Budget reduction that keeps the alphabet: the new machine runs the first
//! `k - 2` steps unchanged and then performs the last two steps at once.
//!
//! To take two steps in one, the machine must know the symbol under the
//! head after step `k - 1` without visiting that cell. At the very first
//! step it guesses a cell `i` and carries that cell's current content in its
//! state; the merged step is only allowed when the head is about to land on
//! `i`. States are tuples `(q, c, i, j, t)`: simulated state, tracked content
//! of cell `i`, the guessed cell, the current head position and the number
//! of steps taken.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Action, Move, NtMachine, NtmInstance, NtmProblem, NtmVariant, State, Sym};
use crate::framework::{Applied, Diminisher, Problem};
use crate::{Error, Result};

/// Name of the rejecting sink state.
pub const SIGMA_REJECT: &str = "<reject>";
const SIGMA_INIT: &str = "<init>";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Init,
    Reject,
    Tuple {
        q: State,
        c: Option<Sym>,
        i: i64,
        j: i64,
        t: u64,
    },
}

struct Builder<'a> {
    src: &'a NtMachine,
    index: BTreeMap<Node, State>,
    nodes: Vec<Node>,
    queue: VecDeque<Node>,
    out: NtMachine,
}

impl<'a> Builder<'a> {
    fn state(&mut self, node: Node) -> State {
        if let Some(&s) = self.index.get(&node) {
            return s;
        }
        let s = self.nodes.len();
        self.nodes.push(node);
        self.index.insert(node, s);
        let name = match node {
            Node::Init => String::from(SIGMA_INIT),
            Node::Reject => String::from(SIGMA_REJECT),
            Node::Tuple { q, c, i, j, t } => format!(
                "<{},{},{i},{j},{t}>",
                self.src.states[q],
                self.src.symbol_name(c)
            ),
        };
        self.out.states.push(name);
        let accepting = match node {
            Node::Init => self.src.is_accepting(self.src.initial),
            Node::Reject => false,
            Node::Tuple { q, .. } => self.src.is_accepting(q),
        };
        if accepting {
            self.out.accepting.insert(s);
        }
        if matches!(node, Node::Tuple { .. }) {
            self.queue.push_back(node);
        }
        s
    }

    fn emit(&mut self, read: Option<Sym>, from: State, write: Sym, to: Node, mv: Move) {
        let to = self.state(to);
        self.out.add_transition(read, from, Action { write, to, mv });
    }

    /// The final step of `M'`: `a` is step `k - 1` of `M` taken at head
    /// position `j`, and the head must land on the guessed cell `i`.
    #[allow(clippy::too_many_arguments)]
    fn merged(&mut self, read: Option<Sym>, from: State, a: &Action, c: Option<Sym>, i: i64, j: i64, k: u64) {
        if j + a.mv.delta() != i {
            self.emit(read, from, a.write, Node::Reject, Move::Stay);
            return;
        }
        let read2 = if i == j { Some(a.write) } else { c };
        let second = self.src.actions(read2, a.to).to_vec();
        if second.is_empty() {
            self.emit(read, from, a.write, Node::Reject, Move::Stay);
        }
        for b in second {
            let fin = Node::Tuple {
                q: b.to,
                c: read2,
                i,
                j: i,
                t: k - 1,
            };
            self.emit(read, from, a.write, fin, Move::Stay);
        }
    }
}

/// Equivalent instance over the same alphabet with budget `k - 1`.
/// Requires `k >= 2`.
pub fn compress_last_steps(inst: &NtmInstance) -> Result<NtmInstance> {
    let k = inst.k;
    if k < 2 {
        return Err(Error::invalid("step compression needs k >= 2"));
    }
    let ki = i64::try_from(k).map_err(|_| Error::Overflow)?;
    let src = &inst.machine;
    let mut b = Builder {
        src,
        index: BTreeMap::new(),
        nodes: Vec::new(),
        queue: VecDeque::new(),
        out: NtMachine::new(src.alphabet.clone(), Vec::new(), 0),
    };
    let init = b.state(Node::Init);
    b.state(Node::Reject);

    let r0 = inst.initial_cell(0);
    for a in src.actions(r0, src.initial).to_vec() {
        if k == 2 {
            // The merged step starts right away; the landing cell still
            // holds its input symbol unless the head stayed put.
            let pos = a.mv.delta();
            let c = if pos == 0 { Some(a.write) } else { inst.initial_cell(pos) };
            b.merged(r0, init, &a, c, pos, 0, k);
            continue;
        }
        for i in -ki..=ki {
            let c = if i == 0 { Some(a.write) } else { inst.initial_cell(i) };
            let node = Node::Tuple {
                q: a.to,
                c,
                i,
                j: a.mv.delta(),
                t: 1,
            };
            b.emit(r0, init, a.write, node, a.mv);
        }
    }

    let reads: Vec<Option<Sym>> = core::iter::once(None)
        .chain((0..src.alphabet.len()).map(Some))
        .collect();
    while let Some(node) = b.queue.pop_front() {
        let Node::Tuple { q, c, i, j, t } = node else { unreachable!() };
        if t > k - 2 {
            continue;
        }
        let from = b.index[&node];
        for &r in &reads {
            for a in src.actions(r, q).to_vec() {
                if t == k - 2 {
                    b.merged(r, from, &a, c, i, j, k);
                } else {
                    let next = Node::Tuple {
                        q: a.to,
                        c: if i == j { Some(a.write) } else { c },
                        i,
                        j: j + a.mv.delta(),
                        t: t + 1,
                    };
                    b.emit(r, from, a.write, next, a.mv);
                }
            }
        }
    }

    let mut machine = b.out;
    machine.initial = init;
    let out = NtmInstance {
        machine,
        input: inst.input.clone(),
        k: k - 1,
    };
    out.validate()?;
    Ok(out)
}

/// `|Q| (|Σ| + 1) (2k + 1)^2 (k - 1) + 2`, the largest state count the
/// construction can produce.
pub fn sigma_state_bound(states: usize, symbols: usize, k: u64) -> u128 {
    let w = 2 * k as u128 + 1;
    states as u128 * (symbols as u128 + 1) * w * w * (k as u128).saturating_sub(1) + 2
}

/// Diminisher for the `k + |Σ|` and binary parameterizations.
#[derive(Debug, Clone, Copy, Default)]
pub struct SigmaCompression;

impl Diminisher<NtmProblem> for SigmaCompression {
    fn name(&self) -> &str {
        "ntm_sigma"
    }

    fn size_exponent(&self) -> u32 {
        3
    }

    fn apply(&self, p: &NtmProblem, inst: &NtmInstance) -> Result<Applied<NtmInstance>> {
        match inst.k {
            0 => match p.variant {
                NtmVariant::Binary => Ok(Applied::at_floor(inst.clone())),
                NtmVariant::Sigma if inst.machine.alphabet.is_empty() => {
                    Ok(Applied::at_floor(inst.clone()))
                }
                NtmVariant::Sigma => {
                    let answer = p.decide(inst)?;
                    let smaller = inst.machine.alphabet.len() as u64 - 1;
                    let out = p
                        .canonical(answer, smaller)
                        .ok_or_else(|| Error::invalid("no canonical machine"))?;
                    Ok(Applied::new(out, 0))
                }
                NtmVariant::States => Err(Error::invalid(
                    "alphabet-preserving compression does not shrink k + |Q|",
                )),
            },
            1 => Ok(Applied::new(decided_at_zero(p, inst, false)?, 0)),
            _ => Ok(Applied::new(compress_last_steps(inst)?, 1)),
        }
    }
}

/// Budget-zero instance with the same answer. Keeps the alphabet and the
/// input; with `keep_states` it also keeps the state set.
pub(crate) fn decided_at_zero(
    p: &NtmProblem,
    inst: &NtmInstance,
    keep_states: bool,
) -> Result<NtmInstance> {
    let answer = p.decide(inst)?;
    let src = &inst.machine;
    let mut machine = if keep_states {
        NtMachine::new(src.alphabet.clone(), src.states.clone(), src.initial)
    } else {
        NtMachine::new(src.alphabet.clone(), alloc::vec![src.states[src.initial].clone()], 0)
    };
    if answer {
        machine.accepting.insert(machine.initial);
    }
    Ok(NtmInstance {
        machine,
        input: inst.input.clone(),
        k: 0,
    })
}
