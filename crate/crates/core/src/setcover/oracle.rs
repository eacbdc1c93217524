//! Exact deciders by bounded search trees.
//!
//! Set Cover branches on the sets containing the smallest uncovered element;
//! Hitting Set branches on the elements of the first set not yet hit. Both
//! prune a branch as soon as the remaining budget cannot possibly finish.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::SetSystem;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetLimits {
    /// Maximum number of search-tree nodes.
    pub budget: u64,
}

impl Default for SetLimits {
    fn default() -> Self {
        SetLimits { budget: 20_000_000 }
    }
}

struct Steps {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Steps {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::CapExceeded {
                what: self.what,
                limit: self.limit,
                actual: self.used,
            });
        }
        Ok(())
    }
}

pub fn set_cover(s: &SetSystem, lim: &SetLimits) -> Result<bool> {
    s.validate()?;
    let sets: Vec<BTreeSet<usize>> = s
        .family
        .iter()
        .filter(|f| !f.is_empty())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let largest = sets.iter().map(BTreeSet::len).max().unwrap_or(0);
    let uncovered: BTreeSet<usize> = (0..s.n).collect();
    let mut steps = Steps {
        used: 0,
        limit: lim.budget,
        what: "set cover search",
    };
    cover_rec(&sets, largest, &uncovered, s.k, &mut steps)
}

fn cover_rec(
    sets: &[BTreeSet<usize>],
    largest: usize,
    uncovered: &BTreeSet<usize>,
    k: u64,
    steps: &mut Steps,
) -> Result<bool> {
    steps.tick()?;
    let Some(&u) = uncovered.first() else {
        return Ok(true);
    };
    if (largest as u128) * (k as u128) < uncovered.len() as u128 {
        return Ok(false);
    }
    for f in sets.iter().filter(|f| f.contains(&u)) {
        let rest: BTreeSet<usize> = uncovered.difference(f).copied().collect();
        if cover_rec(sets, largest, &rest, k - 1, steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn hitting_set(s: &SetSystem, lim: &SetLimits) -> Result<bool> {
    s.validate()?;
    let sets: Vec<&BTreeSet<usize>> = s.family.iter().collect();
    let mut steps = Steps {
        used: 0,
        limit: lim.budget,
        what: "hitting set search",
    };
    hit_rec(&sets, s.k, &mut steps)
}

fn hit_rec(unhit: &[&BTreeSet<usize>], k: u64, steps: &mut Steps) -> Result<bool> {
    steps.tick()?;
    let Some(first) = unhit.first() else {
        return Ok(true);
    };
    if k == 0 {
        return Ok(false);
    }
    for e in first.iter() {
        let rest: Vec<&BTreeSet<usize>> = unhit.iter().copied().filter(|f| !f.contains(e)).collect();
        if hit_rec(&rest, k - 1, steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: usize, fam: &[&[usize]], k: u64) -> bool {
        set_cover(&SetSystem::from_lists(n, fam, k).unwrap(), &SetLimits::default()).unwrap()
    }

    fn hs(n: usize, fam: &[&[usize]], k: u64) -> bool {
        hitting_set(&SetSystem::from_lists(n, fam, k).unwrap(), &SetLimits::default()).unwrap()
    }

    #[test]
    fn set_cover_examples() {
        let fam: &[&[usize]] = &[&[0, 1], &[2, 3], &[0, 2]];
        assert!(sc(4, fam, 2));
        assert!(!sc(4, fam, 1));
        assert!(sc(0, &[], 0));
        assert!(!sc(1, &[], 5));
    }

    #[test]
    fn hitting_set_examples() {
        assert!(hs(2, &[&[0], &[1]], 2));
        assert!(!hs(2, &[&[0], &[1]], 1));
        assert!(!hs(6, &[&[0, 1], &[2, 3], &[4, 5]], 2));
        assert!(!hs(3, &[&[]], 3));
        assert!(hs(0, &[], 0));
    }

    #[test]
    fn refuses_when_the_budget_runs_out() {
        let s = SetSystem::from_lists(6, &[&[0], &[1], &[2], &[3], &[4], &[5]], 6).unwrap();
        let err = set_cover(&s, &SetLimits { budget: 3 }).unwrap_err();
        assert!(err.is_cap());
    }
}
