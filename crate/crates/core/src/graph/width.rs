//! Exact width parameters for small graphs.
//!
//! Cutwidth and treewidth use dynamic programming over vertex subsets,
//! bandwidth a backtracking search over layouts. All three are computed per
//! connected component (each is the maximum over components) and refuse
//! components larger than the cap instead of approximating.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::AnnotatedGraph;
use crate::{Error, Result};

/// Largest component size handed to the exhaustive width computations by
/// default.
pub const DEFAULT_WIDTH_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WidthKind {
    MaxDegree,
    Cutwidth,
    Bandwidth,
    Treewidth,
}

impl WidthKind {
    pub const ALL: [WidthKind; 4] = [
        WidthKind::MaxDegree,
        WidthKind::Cutwidth,
        WidthKind::Bandwidth,
        WidthKind::Treewidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WidthKind::MaxDegree => "max_degree",
            WidthKind::Cutwidth => "cutwidth",
            WidthKind::Bandwidth => "bandwidth",
            WidthKind::Treewidth => "treewidth",
        }
    }

    /// Short tag used in problem names (`clique_cw`, ...).
    pub fn tag(self) -> &'static str {
        match self {
            WidthKind::MaxDegree => "maxdeg",
            WidthKind::Cutwidth => "cw",
            WidthKind::Bandwidth => "bw",
            WidthKind::Treewidth => "tw",
        }
    }
}

impl fmt::Display for WidthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WidthKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WidthKind::ALL
            .into_iter()
            .find(|w| w.name() == s || w.tag() == s)
            .ok_or_else(|| Error::invalid(alloc::format!("unknown width {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WidthValue {
    pub which: WidthKind,
    pub value: u64,
}

/// Compute `which` exactly, refusing components with more than `cap`
/// vertices (the cap does not apply to the maximum degree).
pub fn width(g: &AnnotatedGraph, which: WidthKind, cap: usize) -> Result<WidthValue> {
    let value = match which {
        WidthKind::MaxDegree => g.max_degree() as u64,
        _ => {
            // Bitmask state below is limited to 20 vertices per component.
            let cap = cap.min(20);
            let mut best = 0;
            for comp in g.components() {
                if comp.len() <= 1 {
                    continue;
                }
                if comp.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "width computation (component size)",
                        limit: cap as u64,
                        actual: comp.len() as u64,
                    });
                }
                let local = Local::new(g, &comp);
                let w = match which {
                    WidthKind::Cutwidth => local.cutwidth(),
                    WidthKind::Treewidth => local.treewidth(),
                    WidthKind::Bandwidth => local.bandwidth(),
                    WidthKind::MaxDegree => unreachable!(),
                };
                best = best.max(w);
            }
            best as u64
        }
    };
    Ok(WidthValue { which, value })
}

pub fn exact_cutwidth(g: &AnnotatedGraph) -> Result<u64> {
    width(g, WidthKind::Cutwidth, DEFAULT_WIDTH_CAP).map(|w| w.value)
}

pub fn exact_bandwidth(g: &AnnotatedGraph) -> Result<u64> {
    width(g, WidthKind::Bandwidth, DEFAULT_WIDTH_CAP).map(|w| w.value)
}

pub fn exact_treewidth(g: &AnnotatedGraph) -> Result<u64> {
    width(g, WidthKind::Treewidth, DEFAULT_WIDTH_CAP).map(|w| w.value)
}

pub fn max_degree(g: &AnnotatedGraph) -> u64 {
    g.max_degree() as u64
}

/// One connected component relabelled to `0..n` with bitmask adjacency.
struct Local {
    n: usize,
    adj: Vec<u32>,
}

impl Local {
    fn new(g: &AnnotatedGraph, comp: &[usize]) -> Self {
        let pos = |v: usize| comp.binary_search(&v).ok();
        let adj = comp
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|&w| pos(w))
                    .fold(0u32, |m, i| m | 1 << i)
            })
            .collect();
        Local { n: comp.len(), adj }
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    /// `f(S) = max(cut(S), min_{v in S} f(S - v))`: the best layout whose
    /// first `|S|` positions hold `S`.
    fn cutwidth(&self) -> usize {
        let full = self.full();
        let size = 1usize << self.n;
        let mut cut = alloc::vec![0u32; size];
        for s in 1..size {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let inside = (self.adj[v] & rest as u32).count_ones();
            let outside = (self.adj[v] & !(s as u32) & full).count_ones();
            cut[s] = cut[rest] - inside + outside;
        }
        let mut f = alloc::vec![0u32; size];
        for s in 1..size {
            let mut best = u32::MAX;
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                best = best.min(f[s & !(1 << v)]);
            }
            f[s] = best.max(cut[s]);
        }
        f[full as usize] as usize
    }

    /// Minimum over elimination orderings of the largest number of
    /// later-eliminated vertices reachable through already-eliminated ones.
    fn treewidth(&self) -> usize {
        let size = 1usize << self.n;
        let full = self.full();
        let mut tw = alloc::vec![usize::MAX; size];
        tw[0] = 0;
        for s in 0..size {
            if tw[s] == usize::MAX {
                continue;
            }
            let mut rest = full & !(s as u32);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let q = self.q(s as u32, v);
                let t = s | 1 << v;
                let cand = tw[s].max(q);
                if cand < tw[t] {
                    tw[t] = cand;
                }
            }
        }
        tw[full as usize]
    }

    /// Vertices outside `s + v` reachable from `v` via paths whose interior
    /// lies in `s`.
    fn q(&self, s: u32, v: usize) -> usize {
        let mut seen = 1u32 << v;
        let mut stack = alloc::vec![v];
        let mut reach = 0u32;
        while let Some(x) = stack.pop() {
            let mut nb = self.adj[x] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                if s & 1 << w != 0 {
                    stack.push(w);
                } else {
                    reach |= 1 << w;
                }
            }
        }
        reach.count_ones() as usize
    }

    fn bandwidth(&self) -> usize {
        let max_deg = self.adj.iter().map(|a| a.count_ones() as usize).max().unwrap_or(0);
        let mut b = max_deg.div_ceil(2).max(1);
        while !self.has_layout(b) {
            b += 1;
        }
        b
    }

    fn has_layout(&self, b: usize) -> bool {
        let mut order = Vec::with_capacity(self.n);
        let mut pos = alloc::vec![usize::MAX; self.n];
        self.place(b, 0, &mut order, &mut pos)
    }

    fn place(&self, b: usize, placed: u32, order: &mut Vec<usize>, pos: &mut [usize]) -> bool {
        let p = order.len();
        if p == self.n {
            return true;
        }
        // The vertex b positions back must have all its neighbours placed
        // once position p is filled.
        for v in 0..self.n {
            if placed & 1 << v != 0 {
                continue;
            }
            if self.adj[v] & placed != 0 {
                let earliest = self.adj[v] & placed;
                let ok = (0..self.n)
                    .filter(|&w| earliest & 1 << w != 0)
                    .all(|w| p - pos[w] <= b);
                if !ok {
                    continue;
                }
            }
            let now = placed | 1 << v;
            if p >= b {
                let old = order[p - b];
                if self.adj[old] & !now != 0 {
                    continue;
                }
            }
            order.push(v);
            pos[v] = p;
            if self.place(b, now, order, pos) {
                return true;
            }
            order.pop();
            pos[v] = usize::MAX;
        }
        false
    }
}
