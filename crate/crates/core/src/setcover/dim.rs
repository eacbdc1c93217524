use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::oracle::{hitting_set, set_cover, SetLimits};
use super::{SetProblemKind, SetSystem};
use crate::framework::{Applied, Caps, Diminisher, DiminisherKind, Factor, Problem, Reduction};
use crate::rng::{Rng, SeededRng};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetProblem {
    pub kind: SetProblemKind,
    pub limits: SetLimits,
}

impl SetProblem {
    pub fn new(kind: SetProblemKind) -> Self {
        SetProblem {
            kind,
            limits: SetLimits::default(),
        }
    }

    pub fn diminisher(&self) -> alloc::boxed::Box<dyn Diminisher<SetProblem>> {
        match self.kind {
            SetProblemKind::SetCover => alloc::boxed::Box::new(SetCoverHalving),
            SetProblemKind::HittingSet => alloc::boxed::Box::new(HittingSetHalving),
        }
    }

    /// Smallest dimension the halving bound is stated for: the universe for
    /// Set Cover, the family for Hitting Set.
    pub fn log_base(&self, s: &SetSystem) -> usize {
        match self.kind {
            SetProblemKind::SetCover => s.n,
            SetProblemKind::HittingSet => s.m(),
        }
    }

    fn decide_canonical(&self, s: &SetSystem) -> Result<SetSystem> {
        let answer = self.decide(s)?;
        self.canonical(answer, s.k / 2)
            .ok_or_else(|| Error::invalid("no canonical set system"))
    }
}

impl Problem for SetProblem {
    type Instance = SetSystem;

    fn name(&self) -> &'static str {
        self.kind.name()
    }

    fn parameter(&self, s: &SetSystem) -> Result<u64> {
        Ok(s.k)
    }

    fn decide(&self, s: &SetSystem) -> Result<bool> {
        match self.kind {
            SetProblemKind::SetCover => set_cover(s, &self.limits),
            SetProblemKind::HittingSet => hitting_set(s, &self.limits),
        }
    }

    fn size(&self, s: &SetSystem) -> usize {
        s.to_text(None).len()
    }

    fn canonical(&self, answer: bool, p: u64) -> Option<SetSystem> {
        let (n, family) = match (self.kind, answer) {
            (_, true) => (0, Vec::new()),
            (SetProblemKind::SetCover, false) => (1, Vec::new()),
            (SetProblemKind::HittingSet, false) => (0, alloc::vec![BTreeSet::new()]),
        };
        Some(SetSystem { n, family, k: p })
    }

    fn generate(&self, rng: &mut SeededRng, caps: &Caps) -> Result<SetSystem> {
        let hi = caps.max_n.clamp(5, 6);
        let (n, m) = match self.kind {
            SetProblemKind::SetCover => (rng.gen_range(5..=hi), rng.gen_range(2..=hi)),
            SetProblemKind::HittingSet => (rng.gen_range(2..=hi), rng.gen_range(5..=hi)),
        };
        let density: f64 = rng.gen_range(0.2..=0.6);
        let family = (0..m)
            .map(|_| (0..n).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        Ok(SetSystem {
            n,
            family,
            k: rng.gen_range(2..=caps.max_k.max(2)),
        })
    }

    fn admissible(&self, s: &SetSystem) -> bool {
        s.validate().is_ok() && s.k >= 2 && s.m() >= 1 && self.log_base(s) >= 5
    }

    fn shrink(&self, s: &SetSystem) -> Vec<SetSystem> {
        let mut out = Vec::new();
        if s.k > 0 {
            out.push(SetSystem { k: s.k - 1, ..s.clone() });
        }
        for i in 0..s.m() {
            let mut t = s.clone();
            t.family.remove(i);
            out.push(t);
        }
        if s.n > 0 {
            let last = s.n - 1;
            let mut t = s.clone();
            t.n = last;
            for f in &mut t.family {
                f.remove(&last);
            }
            out.push(t);
        }
        for (i, f) in s.family.iter().enumerate() {
            for &e in f {
                let mut t = s.clone();
                t.family[i].remove(&e);
                out.push(t);
            }
        }
        out
    }
}

/// Pads odd budgets with a fresh element and its singleton set, then
/// replaces the family by all pairwise unions (deduplicated, first pair
/// wins) and halves the budget. Needs `k >= 2` and at least two sets.
pub fn halve_set_cover(s: &SetSystem) -> Result<SetSystem> {
    if s.k < 2 || s.m() < 2 {
        return Err(Error::invalid("set cover halving needs k >= 2 and two sets"));
    }
    let mut s = s.clone();
    if s.k % 2 == 1 {
        s.family.push(BTreeSet::from([s.n]));
        s.n += 1;
        s.k += 1;
    }
    let mut seen = BTreeSet::new();
    let mut family = Vec::new();
    for i in 0..s.m() {
        for j in i + 1..s.m() {
            let u: BTreeSet<usize> = s.family[i].union(&s.family[j]).copied().collect();
            if seen.insert(u.clone()) {
                family.push(u);
            }
        }
    }
    Ok(SetSystem {
        n: s.n,
        family,
        k: s.k / 2,
    })
}

/// Index of the unordered pair `{u, v}`, `u < v < n`, in lexicographic
/// order.
fn pair_index(u: usize, v: usize, n: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Dual of [`halve_set_cover`]: odd budgets get a fresh element and the set
/// holding only it; then the universe becomes all element pairs, each set
/// becomes the pairs meeting it, and the budget halves. Needs `k >= 2` and
/// at least two elements.
pub fn halve_hitting_set(s: &SetSystem) -> Result<SetSystem> {
    if s.k < 2 || s.n < 2 {
        return Err(Error::invalid("hitting set halving needs k >= 2 and two elements"));
    }
    let mut s = s.clone();
    if s.k % 2 == 1 {
        s.family.push(BTreeSet::from([s.n]));
        s.n += 1;
        s.k += 1;
    }
    let n = s.n;
    let family = s
        .family
        .iter()
        .map(|f| {
            let mut pairs = BTreeSet::new();
            for u in 0..n {
                for v in u + 1..n {
                    if f.contains(&u) || f.contains(&v) {
                        pairs.insert(pair_index(u, v, n));
                    }
                }
            }
            pairs
        })
        .collect();
    Ok(SetSystem {
        n: n * (n - 1) / 2,
        family,
        k: s.k / 2,
    })
}

const HALF: DiminisherKind = DiminisherKind::StrongFactor(Factor::integer(2));

#[derive(Debug, Clone, Copy, Default)]
pub struct SetCoverHalving;

impl Diminisher<SetProblem> for SetCoverHalving {
    fn name(&self) -> &str {
        "setcover_halving"
    }

    fn kind(&self) -> DiminisherKind {
        HALF
    }

    fn apply(&self, p: &SetProblem, s: &SetSystem) -> Result<Applied<SetSystem>> {
        Ok(match s.k {
            0 => Applied::at_floor(s.clone()),
            1 | 2 => Applied::new(p.decide_canonical(s)?, 0),
            _ if s.m() < 2 => Applied::new(p.decide_canonical(s)?, 0),
            _ => Applied::new(halve_set_cover(s)?, 1),
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HittingSetHalving;

impl Diminisher<SetProblem> for HittingSetHalving {
    fn name(&self) -> &str {
        "hittingset_halving"
    }

    fn kind(&self) -> DiminisherKind {
        HALF
    }

    fn size_exponent(&self) -> u32 {
        3
    }

    fn apply(&self, p: &SetProblem, s: &SetSystem) -> Result<Applied<SetSystem>> {
        Ok(match s.k {
            0 => Applied::at_floor(s.clone()),
            1 => Applied::new(p.decide_canonical(s)?, 0),
            _ if s.m() < 2 || s.n < 2 => Applied::new(p.decide_canonical(s)?, 0),
            _ => Applied::new(halve_hitting_set(s)?, 1),
        })
    }
}

/// Set Cover to Hitting Set by transposing the incidence; same budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct CoverToHitting;

/// Hitting Set to Set Cover by transposing the incidence; same budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct HittingToCover;

impl Reduction<SetProblem, SetProblem> for CoverToHitting {
    fn name(&self) -> &str {
        "cover_to_hitting"
    }

    fn parameter_non_increasing(&self) -> bool {
        true
    }

    fn reduce(&self, _: &SetProblem, _: &SetProblem, s: &SetSystem) -> Result<SetSystem> {
        Ok(s.transpose())
    }
}

impl Reduction<SetProblem, SetProblem> for HittingToCover {
    fn name(&self) -> &str {
        "hitting_to_cover"
    }

    fn parameter_non_increasing(&self) -> bool {
        true
    }

    fn reduce(&self, _: &SetProblem, _: &SetProblem, s: &SetSystem) -> Result<SetSystem> {
        Ok(s.transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::checked_apply;

    fn sys(n: usize, fam: &[&[usize]], k: u64) -> SetSystem {
        SetSystem::from_lists(n, fam, k).unwrap()
    }

    #[test]
    fn pair_indices_are_dense() {
        let n = 6;
        let mut all = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                all.push(pair_index(u, v, n));
            }
        }
        assert_eq!(all, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn budget_two_cover_is_decided_directly() {
        let p = SetProblem::new(SetProblemKind::SetCover);
        let s = sys(4, &[&[0, 1], &[2, 3], &[0, 2]], 2);
        let out = checked_apply(&p, &SetCoverHalving, &s).unwrap();
        assert_eq!(out.branches, 0);
        assert_eq!(out.instance.k, 1);
        assert!(p.decide(&out.instance).unwrap());
    }

    #[test]
    fn even_budget_pairs_the_family() {
        let p = SetProblem::new(SetProblemKind::SetCover);
        let s = sys(6, &[&[0, 1], &[2, 3], &[4], &[5]], 4);
        let out = halve_set_cover(&s).unwrap();
        assert_eq!(out.k, 2);
        assert_eq!(out.m(), 6);
        assert!(p.decide(&s).unwrap() && p.decide(&out).unwrap());
    }

    #[test]
    fn odd_budget_is_padded() {
        let s = sys(5, &[&[0, 1], &[2, 3], &[4]], 3);
        let out = halve_set_cover(&s).unwrap();
        assert_eq!((out.n, out.k, out.m()), (6, 2, 6));
        assert!(out.family.contains(&BTreeSet::from([4, 5])));
    }

    #[test]
    fn hitting_set_examples() {
        let p = SetProblem::new(SetProblemKind::HittingSet);
        let s = sys(2, &[&[0], &[1]], 2);
        let out = checked_apply(&p, &HittingSetHalving, &s).unwrap().instance;
        assert_eq!((out.n, out.k), (1, 1));
        assert!(p.decide(&out).unwrap());
        let s = sys(6, &[&[0, 1], &[2, 3], &[4, 5]], 2);
        let out = checked_apply(&p, &HittingSetHalving, &s).unwrap().instance;
        assert!(!p.decide(&s).unwrap());
        assert!(!p.decide(&out).unwrap());
    }
}
