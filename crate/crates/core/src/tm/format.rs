//! Line-based machine format:
//!
//! ```text
//! alphabet a b
//! states q0 q1 q2
//! initial q0
//! accept q2
//! trans q0 a -> q1 b R
//! input a b
//! steps 2
//! ```
//!
//! `_` is the blank and is only accepted as the read symbol. Input symbols
//! are separated by spaces; a single token that is not a symbol name is
//! split into characters. `#` starts a comment.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Action, Move, NtMachine, NtmInstance, State, Sym};
use crate::{Error, Result};

pub fn parse_ntm(text: &str) -> Result<NtmInstance> {
    let mut alphabet: Option<Vec<String>> = None;
    let mut states: Option<Vec<String>> = None;
    let mut initial: Option<(usize, String)> = None;
    let mut accept: Option<(usize, Vec<String>)> = None;
    let mut trans: Vec<(usize, Vec<String>)> = Vec::new();
    let mut input: Option<(usize, Vec<String>)> = None;
    let mut steps: Option<u64> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<String> = tokens.map(ToString::to_string).collect();
        let dup = |what: &str| Error::parse(line, format!("second {what} line"));
        match head {
            "alphabet" => {
                if alphabet.replace(rest).is_some() {
                    return Err(dup("alphabet"));
                }
            }
            "states" => {
                if states.replace(rest).is_some() {
                    return Err(dup("states"));
                }
            }
            "initial" => {
                let [q] = <[String; 1]>::try_from(rest)
                    .map_err(|_| Error::parse(line, "initial takes one state"))?;
                if initial.replace((line, q)).is_some() {
                    return Err(dup("initial"));
                }
            }
            "accept" => {
                if accept.replace((line, rest)).is_some() {
                    return Err(dup("accept"));
                }
            }
            "trans" => trans.push((line, rest)),
            "input" => {
                if input.replace((line, rest)).is_some() {
                    return Err(dup("input"));
                }
            }
            "steps" => {
                let [k] = <[String; 1]>::try_from(rest)
                    .map_err(|_| Error::parse(line, "steps takes one number"))?;
                let k = k
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad step budget {k:?}")))?;
                if steps.replace(k).is_some() {
                    return Err(dup("steps"));
                }
            }
            other => return Err(Error::parse(line, format!("unknown directive {other:?}"))),
        }
    }

    let alphabet = alphabet.ok_or_else(|| Error::parse(0, "missing alphabet line"))?;
    let states = states.ok_or_else(|| Error::parse(0, "missing states line"))?;
    let (init_line, initial) = initial.ok_or_else(|| Error::parse(0, "missing initial line"))?;
    let k = steps.ok_or_else(|| Error::parse(0, "missing steps line"))?;

    let sym_index = index_of(&alphabet, "symbol")?;
    let state_index = index_of(&states, "state")?;
    let sym = |line, name: &str| {
        sym_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::parse(line, format!("unknown symbol {name:?}")))
    };
    let state = |line, name: &str| -> Result<State> {
        state_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::parse(line, format!("unknown state {name:?}")))
    };

    let mut m = NtMachine::new(alphabet.clone(), states.clone(), state(init_line, &initial)?);
    if let Some((line, acc)) = accept {
        for q in acc {
            if !m.accepting.insert(state(line, &q)?) {
                return Err(Error::parse(line, format!("state {q:?} listed twice")));
            }
        }
    }
    for (line, t) in trans {
        let [from, read, arrow, to, write, mv] = <[String; 6]>::try_from(t)
            .map_err(|_| Error::parse(line, "expected: trans <state> <read> -> <state> <write> <move>"))?;
        if arrow != "->" {
            return Err(Error::parse(line, "expected '->'"));
        }
        let read = if read == "_" { None } else { Some(sym(line, &read)?) };
        if write == "_" {
            return Err(Error::parse(line, "the blank cannot be written"));
        }
        let mv = match mv.as_str() {
            "L" => Move::Left,
            "S" => Move::Stay,
            "R" => Move::Right,
            _ => return Err(Error::parse(line, format!("bad move {mv:?}"))),
        };
        let action = Action {
            write: sym(line, &write)?,
            to: state(line, &to)?,
            mv,
        };
        m.add_transition(read, state(line, &from)?, action);
    }
    let input = match input {
        None => Vec::new(),
        Some((line, words)) => {
            let words = match words.as_slice() {
                [w] if !sym_index.contains_key(w.as_str()) => {
                    w.chars().map(|c| c.to_string()).collect()
                }
                _ => words,
            };
            words
                .iter()
                .map(|w| sym(line, w))
                .collect::<Result<Vec<Sym>>>()?
        }
    };
    let inst = NtmInstance {
        machine: m,
        input,
        k,
    };
    inst.validate()?;
    Ok(inst)
}

fn index_of<'a>(names: &'a [String], what: &str) -> Result<BTreeMap<&'a str, usize>> {
    let mut map = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if n == "_" {
            return Err(Error::parse(0, format!("'_' is reserved and cannot be a {what}")));
        }
        if map.insert(n.as_str(), i).is_some() {
            return Err(Error::parse(0, format!("duplicate {what} {n:?}")));
        }
    }
    Ok(map)
}

/// Canonical text: directives in a fixed order, transitions sorted by
/// source then action.
pub fn serialize_ntm(inst: &NtmInstance) -> String {
    let m = &inst.machine;
    let mut out = String::new();
    let join = |it: &mut dyn Iterator<Item = &str>| {
        let v: Vec<&str> = it.collect();
        v.join(" ")
    };
    line(&mut out, "alphabet", &join(&mut m.alphabet.iter().map(String::as_str)));
    line(&mut out, "states", &join(&mut m.states.iter().map(String::as_str)));
    let _ = writeln!(out, "initial {}", m.states[m.initial]);
    line(
        &mut out,
        "accept",
        &join(&mut m.accepting.iter().map(|&q| m.states[q].as_str())),
    );
    for (&(read, from), acts) in &m.delta {
        for a in acts {
            let _ = writeln!(
                out,
                "trans {} {} -> {} {} {}",
                m.states[from],
                m.symbol_name(read),
                m.states[a.to],
                m.alphabet[a.write],
                a.mv.letter()
            );
        }
    }
    line(
        &mut out,
        "input",
        &join(&mut inst.input.iter().map(|&s| m.alphabet[s].as_str())),
    );
    let _ = writeln!(out, "steps {}", inst.k);
    out
}

fn line(out: &mut String, head: &str, body: &str) {
    if body.is_empty() {
        let _ = writeln!(out, "{head}");
    } else {
        let _ = writeln!(out, "{head} {body}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "alphabet a b\nstates q0 q1 q2\ninitial q0\naccept q2\n\
                          trans q0 a -> q1 b R\ntrans q1 _ -> q2 a L\ninput a b\nsteps 2\n";

    #[test]
    fn round_trip_is_stable() {
        let inst = parse_ntm(SAMPLE).unwrap();
        assert_eq!(inst.machine.transition_count(), 2);
        let text = serialize_ntm(&inst);
        assert_eq!(parse_ntm(&text).unwrap(), inst);
        assert_eq!(serialize_ntm(&parse_ntm(&text).unwrap()), text);
    }

    #[test]
    fn compact_input_words_split_into_characters() {
        let inst = parse_ntm(&SAMPLE.replace("input a b", "input abba")).unwrap();
        assert_eq!(inst.input, [0, 1, 1, 0]);
    }

    #[test]
    fn rejects_blank_writes_and_unknown_names() {
        let bad = SAMPLE.replace("-> q1 b R", "-> q1 _ R");
        assert!(matches!(parse_ntm(&bad), Err(Error::Parse { line: 5, .. })));
        let bad = SAMPLE.replace("-> q1 b R", "-> q9 b R");
        assert!(matches!(parse_ntm(&bad), Err(Error::Parse { line: 5, .. })));
        let bad = SAMPLE.replace("b R", "b X");
        assert!(parse_ntm(&bad).is_err());
        assert!(parse_ntm(&SAMPLE.replace("alphabet a b", "alphabet a _")).is_err());
        assert!(parse_ntm(&SAMPLE.replace("steps 2\n", "")).is_err());
        assert!(parse_ntm(&SAMPLE.replace("input a b", "input a c")).is_err());
    }
}
