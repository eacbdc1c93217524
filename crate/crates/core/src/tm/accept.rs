use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{NtmInstance, State, Sym};
use crate::{Error, Result};

/// Refusal thresholds for the acceptance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TmLimits {
    pub max_steps: u64,
    /// Bound on `|Q| * |Σ|`.
    pub max_table: u64,
    /// Bound on the number of distinct configurations over all depths.
    pub max_configs: u64,
}

impl Default for TmLimits {
    fn default() -> Self {
        TmLimits {
            max_steps: 8,
            max_table: 1 << 20,
            max_configs: 2_000_000,
        }
    }
}

type Config = (State, usize, Vec<Option<Sym>>);

/// Whether some run of the machine is in an accepting state after exactly
/// `k` steps. Breadth-first over configurations, deduplicated per depth.
pub fn accepts(inst: &NtmInstance, lim: &TmLimits) -> Result<bool> {
    let m = &inst.machine;
    let k = inst.k;
    if k > lim.max_steps {
        return Err(Error::CapExceeded {
            what: "Turing machine steps",
            limit: lim.max_steps,
            actual: k,
        });
    }
    let table = (m.states.len() as u64).saturating_mul(m.alphabet.len().max(1) as u64);
    if table > lim.max_table {
        return Err(Error::CapExceeded {
            what: "Turing machine table",
            limit: lim.max_table,
            actual: table,
        });
    }
    // Cells -k ..= k + |x| are the only ones the head can touch.
    let off = k as usize;
    let mut tape = vec![None; 2 * off + inst.input.len() + 1];
    for (i, &s) in inst.input.iter().enumerate() {
        tape[off + i] = Some(s);
    }
    let mut layer: BTreeSet<Config> = BTreeSet::from([(m.initial, off, tape)]);
    let mut seen = 1u64;
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for (q, head, tape) in &layer {
            for a in m.actions(tape[*head], *q) {
                let mut t = tape.clone();
                t[*head] = Some(a.write);
                let h = head
                    .checked_add_signed(a.mv.delta() as isize)
                    .expect("head stays inside the window");
                next.insert((a.to, h, t));
            }
        }
        seen += next.len() as u64;
        if seen > lim.max_configs {
            return Err(Error::CapExceeded {
                what: "Turing machine configurations",
                limit: lim.max_configs,
                actual: seen,
            });
        }
        if next.is_empty() {
            return Ok(false);
        }
        layer = next;
    }
    Ok(layer.iter().any(|(q, _, _)| m.is_accepting(*q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::parse_ntm;

    fn run(text: &str) -> bool {
        accepts(&parse_ntm(text).unwrap(), &TmLimits::default()).unwrap()
    }

    #[test]
    fn zero_steps_checks_the_initial_state() {
        assert!(run("alphabet a\nstates q0\ninitial q0\naccept q0\ninput a\nsteps 0\n"));
        assert!(!run("alphabet a\nstates q0\ninitial q0\naccept\ninput a\nsteps 0\n"));
    }

    #[test]
    fn no_applicable_transition_rejects() {
        let text = "alphabet a\nstates q0 q1\ninitial q0\naccept q1\n\
                    trans q0 _ -> q1 a R\ninput a\nsteps 1\n";
        assert!(!run(text));
    }

    #[test]
    fn two_right_moves_accept_after_exactly_two_steps() {
        let base = "alphabet a b\nstates q0 q1 q2\ninitial q0\naccept q2\n\
                    trans q0 a -> q1 b R\ntrans q1 b -> q2 a R\ninput a b\n";
        assert!(run(&alloc::format!("{base}steps 2\n")));
        assert!(!run(&alloc::format!("{base}steps 1\n")));
        assert!(!run(&alloc::format!("{base}steps 3\n")));
    }

    #[test]
    fn reads_back_what_was_written() {
        let text = "alphabet a b\nstates q0 q1 q2\ninitial q0\naccept q2\n\
                    trans q0 _ -> q1 b L\ntrans q1 _ -> q0 a R\ntrans q0 b -> q2 b S\n\
                    input\nsteps 3\n";
        assert!(run(text));
    }

    #[test]
    fn refuses_large_budgets() {
        let inst = parse_ntm("alphabet a\nstates q0\ninitial q0\ninput\nsteps 9\n").unwrap();
        assert!(accepts(&inst, &TmLimits::default()).unwrap_err().is_cap());
    }
}
