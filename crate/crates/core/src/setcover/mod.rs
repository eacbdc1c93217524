//! Set Cover and Hitting Set over explicit set systems.
//!
//! Set Cover asks for `k` sets of the family whose union is the universe;
//! Hitting Set asks for `k` universe elements meeting every set. Both are
//! parameterized here by the budget `k`; the `k log n` / `k log m` products
//! are evaluated exactly by [`KLogN`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::{Error, Result};

mod dim;
mod klogn;
pub mod oracle;

pub use dim::{
    halve_hitting_set, halve_set_cover, CoverToHitting, HittingSetHalving, HittingToCover,
    SetCoverHalving, SetProblem,
};
pub use klogn::{shrinks_by_root3_over_2, KLogN, KLOGN_FACTOR, ROOT3_LOWER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetProblemKind {
    SetCover,
    HittingSet,
}

impl SetProblemKind {
    pub const ALL: [SetProblemKind; 2] = [SetProblemKind::SetCover, SetProblemKind::HittingSet];

    /// Tag used in set-system files.
    pub fn tag(self) -> &'static str {
        match self {
            SetProblemKind::SetCover => "setcover",
            SetProblemKind::HittingSet => "hittingset",
        }
    }

    /// Problem name with the strong diminisher attached.
    pub fn name(self) -> &'static str {
        match self {
            SetProblemKind::SetCover => "setcover_strong",
            SetProblemKind::HittingSet => "hittingset_strong",
        }
    }
}

impl fmt::Display for SetProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetProblemKind::ALL
            .into_iter()
            .find(|p| p.tag() == s || p.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown set problem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    /// Universe `{0, ..., n - 1}`.
    pub n: usize,
    pub family: Vec<BTreeSet<usize>>,
    pub k: u64,
}

impl SetSystem {
    pub fn new(n: usize, family: Vec<BTreeSet<usize>>, k: u64) -> Result<Self> {
        let s = SetSystem { n, family, k };
        s.validate()?;
        Ok(s)
    }

    pub fn from_lists(n: usize, family: &[&[usize]], k: u64) -> Result<Self> {
        Self::new(
            n,
            family.iter().map(|f| f.iter().copied().collect()).collect(),
            k,
        )
    }

    pub fn m(&self) -> usize {
        self.family.len()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.family.iter().enumerate() {
            if let Some(&e) = f.iter().next_back().filter(|&&e| e >= self.n) {
                return Err(Error::invalid(format!("set {i} contains {e} outside the universe")));
            }
        }
        Ok(())
    }

    /// Element-set incidence transposed: set `i` becomes element `i`, element
    /// `u` becomes the set of indices of sets containing `u`.
    pub fn transpose(&self) -> SetSystem {
        let family = (0..self.n)
            .map(|u| {
                self.family
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(&u))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        SetSystem {
            n: self.m(),
            family,
            k: self.k,
        }
    }

    pub fn to_text(&self, kind: Option<SetProblemKind>) -> String {
        serialize_set_system(self, kind)
    }
}

/// Parsed set-system file; the `problem` line is optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystemFile {
    pub system: SetSystem,
    pub kind: Option<SetProblemKind>,
}

/// Format: `u <n>`, one `s <idx>: e1 e2 ...` line per set in index order,
/// `k <budget>` and optionally `problem setcover|hittingset`. `#` starts a
/// comment.
pub fn parse_set_system(text: &str) -> Result<SetSystemFile> {
    let mut n: Option<usize> = None;
    let mut k: Option<u64> = None;
    let mut kind: Option<SetProblemKind> = None;
    let mut family: Vec<BTreeSet<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let num = |tok: &str, what: &str| -> Result<u64> {
            tok.parse()
                .map_err(|_| Error::parse(line, format!("bad {what} {tok:?}")))
        };
        let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match head {
            "u" => {
                if n.is_some() {
                    return Err(Error::parse(line, "second u line"));
                }
                n = Some(num(rest, "universe size")? as usize);
            }
            "k" => {
                if k.is_some() {
                    return Err(Error::parse(line, "second k line"));
                }
                k = Some(num(rest, "budget")?);
            }
            "problem" => {
                if kind.is_some() {
                    return Err(Error::parse(line, "second problem line"));
                }
                kind = Some(rest.parse().map_err(|_| {
                    Error::parse(line, format!("unknown problem {rest:?}"))
                })?);
            }
            "s" => {
                let n = n.ok_or_else(|| Error::parse(line, "set before the u line"))?;
                let (label, elems) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::parse(line, "expected 's <idx>: elements'"))?;
                let label = num(label.trim(), "set index")?;
                if label != family.len() as u64 {
                    return Err(Error::parse(
                        line,
                        format!("set index {label} out of order, expected {}", family.len()),
                    ));
                }
                let mut set = BTreeSet::new();
                for tok in elems.split_whitespace() {
                    let e = num(tok, "element")? as usize;
                    if e >= n {
                        return Err(Error::parse(line, format!("element {e} outside universe of size {n}")));
                    }
                    if !set.insert(e) {
                        return Err(Error::parse(line, format!("element {e} repeated")));
                    }
                }
                family.push(set);
            }
            other => return Err(Error::parse(line, format!("unknown directive {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing u line"))?;
    let k = k.ok_or_else(|| Error::parse(0, "missing k line"))?;
    Ok(SetSystemFile {
        system: SetSystem::new(n, family, k)?,
        kind,
    })
}

pub fn serialize_set_system(s: &SetSystem, kind: Option<SetProblemKind>) -> String {
    let mut out = String::new();
    if let Some(kind) = kind {
        let _ = writeln!(out, "problem {}", kind.tag());
    }
    let _ = writeln!(out, "u {}", s.n);
    for (i, f) in s.family.iter().enumerate() {
        let _ = write!(out, "s {i}:");
        for e in f {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "k {}", s.k);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_round_trip() {
        let text = "problem setcover\nu 4\ns 0: 0 1\ns 1: 2 3\ns 2:\nk 2\n";
        let f = parse_set_system(text).unwrap();
        assert_eq!(f.kind, Some(SetProblemKind::SetCover));
        assert_eq!(f.system.m(), 3);
        assert!(f.system.family[2].is_empty());
        assert_eq!(serialize_set_system(&f.system, f.kind), text);
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let bad = |t: &str, l: usize| {
            assert!(
                matches!(parse_set_system(t), Err(Error::Parse { line, .. }) if line == l),
                "{t:?}"
            )
        };
        bad("u 3\ns 0: 0 3\nk 1\n", 2);
        bad("u 3\ns 1: 0\nk 1\n", 2);
        bad("u 3\ns 0: 0 0\nk 1\n", 2);
        bad("s 0: 0\nu 3\nk 1\n", 1);
        bad("u 3\nk 1\nk 2\n", 3);
        bad("u 3\nk 1\nproblem vertexcover\n", 3);
        assert!(parse_set_system("u 3\n").is_err());
    }

    #[test]
    fn transpose_swaps_roles() {
        let s = SetSystem::from_lists(3, &[&[0, 1], &[1, 2]], 1).unwrap();
        let t = s.transpose();
        assert_eq!(t.n, 2);
        assert_eq!(t.family.len(), 3);
        assert_eq!(t.family[1], BTreeSet::from([0, 1]));
        assert_eq!(t.transpose(), s);
    }
}
