//! Budget reduction that keeps the state set: the first two steps are taken
//! at once by widening the alphabet.
//!
//! Cells `-1, 0, 1` of the original tape are packed into one symbol that
//! also records where the head is inside the block. The packed cell sits at
//! position 0 of the new tape and every other cell shifts one step away from
//! it. The head starts on the packed cell with a special start tag; reading
//! that tag triggers the double step.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;

use super::sigma::decided_at_zero;
use super::{Action, Move, NtMachine, NtmInstance, NtmProblem, State, Sym};
use crate::framework::{Applied, Diminisher, Problem};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Tag {
    /// Head inside the block at offset -1, 0 or 1.
    At(i64),
    Start,
}

type Block = [Option<Sym>; 3];

/// Display name of a packed symbol, e.g. `[_.a.b.S]`.
pub fn merged_symbol_name(m: &NtMachine, block: [Option<Sym>; 3], tag: Option<i64>) -> String {
    let tag = match tag {
        None => String::from("S"),
        Some(d) if d > 0 => format!("+{d}"),
        Some(d) => format!("{d}"),
    };
    format!(
        "[{}.{}.{}.{tag}]",
        m.symbol_name(block[0]),
        m.symbol_name(block[1]),
        m.symbol_name(block[2])
    )
}

struct Builder<'a> {
    src: &'a NtMachine,
    index: BTreeMap<(Block, Tag), Sym>,
    taken: BTreeSet<String>,
    queue: VecDeque<(Block, Tag)>,
    out: NtMachine,
}

impl Builder<'_> {
    fn symbol(&mut self, block: Block, tag: Tag) -> Sym {
        if let Some(&s) = self.index.get(&(block, tag)) {
            return s;
        }
        let t = match tag {
            Tag::At(d) => Some(d),
            Tag::Start => None,
        };
        let mut name = merged_symbol_name(self.src, block, t);
        while self.taken.contains(&name) {
            name.push('\'');
        }
        self.taken.insert(name.clone());
        let s = self.out.alphabet.len();
        self.out.alphabet.push(name);
        self.index.insert((block, tag), s);
        self.queue.push_back((block, tag));
        s
    }

    /// One original step inside the block from offset `p`: stays on the
    /// packed cell while the head remains inside, otherwise leaves it with
    /// the exit offset recorded so the way back in is known.
    fn step(&mut self, read: Sym, from: State, block: Block, p: i64, a: Action) {
        let mut next = block;
        next[(p + 1) as usize] = Some(a.write);
        let land = p + a.mv.delta();
        let (tag, mv) = if land.abs() <= 1 {
            (Tag::At(land), Move::Stay)
        } else {
            (Tag::At(p), a.mv)
        };
        let write = self.symbol(next, tag);
        self.out.add_transition(Some(read), from, Action { write, to: a.to, mv });
    }
}

/// Equivalent instance over the same state set with budget `k - 1`.
/// Requires `k >= 2`. Missing input cells inside the block are blanks.
pub fn compress_first_steps(inst: &NtmInstance) -> Result<NtmInstance> {
    if inst.k < 2 {
        return Err(Error::invalid("step compression needs k >= 2"));
    }
    let src = &inst.machine;
    let mut out = NtMachine::new(src.alphabet.clone(), src.states.clone(), src.initial);
    out.accepting = src.accepting.clone();
    out.delta = src.delta.clone();
    let mut b = Builder {
        src,
        index: BTreeMap::new(),
        taken: src.alphabet.iter().cloned().collect(),
        queue: VecDeque::new(),
        out,
    };
    let start_block = [None, inst.initial_cell(0), inst.initial_cell(1)];
    let start = b.symbol(start_block, Tag::Start);

    while let Some((block, tag)) = b.queue.pop_front() {
        let me = b.index[&(block, tag)];
        match tag {
            Tag::Start => {
                let q0 = src.initial;
                for a in src.actions(block[1], q0).to_vec() {
                    let mut mid = block;
                    mid[1] = Some(a.write);
                    let p = a.mv.delta();
                    for second in src.actions(mid[(p + 1) as usize], a.to).to_vec() {
                        b.step(me, q0, mid, p, second);
                    }
                }
            }
            Tag::At(p) => {
                for q in 0..src.states.len() {
                    for a in src.actions(block[(p + 1) as usize], q).to_vec() {
                        b.step(me, q, block, p, a);
                    }
                }
            }
        }
    }

    let mut input = alloc::vec![start];
    input.extend(inst.input.iter().skip(2));
    let out = NtmInstance {
        machine: b.out,
        input,
        k: inst.k - 1,
    };
    out.validate()?;
    Ok(out)
}

/// Diminisher for the `k + |Q|` parameterization.
#[derive(Debug, Clone, Copy, Default)]
pub struct StateCompression;

impl Diminisher<NtmProblem> for StateCompression {
    fn name(&self) -> &str {
        "ntm_states"
    }

    fn size_exponent(&self) -> u32 {
        3
    }

    fn apply(&self, p: &NtmProblem, inst: &NtmInstance) -> Result<Applied<NtmInstance>> {
        match inst.k {
            0 if inst.machine.states.len() <= 1 => Ok(Applied::at_floor(inst.clone())),
            0 => {
                let answer = p.decide(inst)?;
                let fewer = inst.machine.states.len() as u64 - 1;
                let out = p
                    .canonical(answer, fewer)
                    .ok_or_else(|| Error::invalid("no canonical machine"))?;
                Ok(Applied::new(out, 0))
            }
            1 => Ok(Applied::new(decided_at_zero(p, inst, true)?, 0)),
            _ => Ok(Applied::new(compress_first_steps(inst)?, 1)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::{accepts, parse_ntm, TmLimits};

    #[test]
    fn two_right_moves_collapse_into_one_step() {
        let inst = parse_ntm(
            "alphabet a b\nstates q0 q1 q2\ninitial q0\naccept q2\n\
             trans q0 a -> q1 a R\ntrans q1 b -> q2 b R\ninput a b\nsteps 2\n",
        )
        .unwrap();
        let out = compress_first_steps(&inst).unwrap();
        let lim = TmLimits::default();
        assert!(accepts(&inst, &lim).unwrap());
        assert_eq!(out.k, 1);
        assert_eq!(out.machine.states, inst.machine.states);
        assert!(accepts(&out, &lim).unwrap());
        assert_eq!(out.input.len(), 1);
        assert_eq!(out.machine.alphabet[out.input[0]], "[_.a.b.S]");
    }

    #[test]
    fn head_can_leave_and_reenter_the_block() {
        // Walk right three times, then come back left twice and accept.
        let base = "alphabet a\nstates q0 q1 q2 q3\ninitial q0\naccept q3\n\
                    trans q0 a -> q0 a R\ntrans q0 _ -> q1 a L\ntrans q1 a -> q2 a L\n\
                    trans q2 a -> q3 a S\ninput a a a\n";
        let lim = TmLimits::default();
        for k in 2..=7 {
            let inst = parse_ntm(&format!("{base}steps {k}\n")).unwrap();
            let out = compress_first_steps(&inst).unwrap();
            assert_eq!(
                accepts(&out, &lim).unwrap(),
                accepts(&inst, &lim).unwrap(),
                "k={k}"
            );
        }
    }
}
