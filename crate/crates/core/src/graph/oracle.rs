//! Exact deciders for the graph problems.
//!
//! These are the ground truth for every equivalence check, so they favour
//! plain exhaustive search over cleverness. Searches that are exponential in
//! the graph size refuse components above [`OracleLimits::max_component`];
//! every search also counts its steps against [`OracleLimits::budget`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::AnnotatedGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest connected component handed to the clique and biclique
    /// searches.
    pub max_component: usize,
    /// Step budget for any single oracle call.
    pub budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_component: 12,
            budget: 20_000_000,
        }
    }
}

struct Steps {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Steps {
    fn new(what: &'static str, lim: &OracleLimits) -> Self {
        Steps {
            what,
            used: 0,
            limit: lim.budget,
        }
    }

    fn tick(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
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

fn check_component(what: &'static str, size: usize, lim: &OracleLimits) -> Result<()> {
    if size > lim.max_component {
        return Err(Error::CapExceeded {
            what,
            limit: lim.max_component as u64,
            actual: size as u64,
        });
    }
    Ok(())
}

/// Does `g` contain a clique on `k` vertices?
pub fn clique(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    let k = k as usize;
    let mut steps = Steps::new("clique search", lim);
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        check_component("clique search (component size)", comp.len(), lim)?;
        if extend_clique(g, &comp, k, &mut steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn extend_clique(g: &AnnotatedGraph, cands: &[usize], need: usize, steps: &mut Steps) -> Result<bool> {
    if need == 0 {
        return Ok(true);
    }
    steps.tick(1)?;
    for (i, &v) in cands.iter().enumerate() {
        if cands.len() - i < need {
            break;
        }
        let next: Vec<usize> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        if extend_clique(g, &next, need - 1, steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Sides of a bipartite graph encoded as colors 1 (`A`) and 2 (`B`).
pub fn bipartition(g: &AnnotatedGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.n() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let col = g
        .coloring()
        .ok_or_else(|| Error::invalid("biclique instance needs sides (colors 1 and 2)"))?;
    if let Some(v) = col.iter().position(|&c| c != 1 && c != 2) {
        return Err(Error::invalid(alloc::format!("vertex {v} is on side {}; sides are 1 and 2", col[v])));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| col[u] == col[v]) {
        return Err(Error::invalid(alloc::format!("edge {u} {v} lies inside one side")));
    }
    let a = (0..g.n()).filter(|&v| col[v] == 1).collect();
    let b = (0..g.n()).filter(|&v| col[v] == 2).collect();
    Ok((a, b))
}

/// Does `g` contain `K_{k,k}` with `k` vertices on each side?
pub fn biclique(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let (side_a, _) = bipartition(g)?;
    if k == 0 {
        return Ok(true);
    }
    let k = k as usize;
    let mut steps = Steps::new("biclique search", lim);
    for comp in g.components() {
        if comp.len() < 2 * k {
            continue;
        }
        check_component("biclique search (component size)", comp.len(), lim)?;
        let a: Vec<usize> = comp.iter().copied().filter(|v| side_a.binary_search(v).is_ok()).collect();
        if choose_a(g, &a, k, k, None, &mut steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Choose `need` more vertices from `a`, tracking the common neighbourhood
/// of the chosen ones, which must keep at least `kb` vertices.
fn choose_a(
    g: &AnnotatedGraph,
    a: &[usize],
    need: usize,
    kb: usize,
    common: Option<BTreeSet<usize>>,
    steps: &mut Steps,
) -> Result<bool> {
    steps.tick(1)?;
    if need == 0 {
        return Ok(common.is_some_and(|c| c.len() >= kb));
    }
    for (i, &v) in a.iter().enumerate() {
        if a.len() - i < need {
            break;
        }
        let c: BTreeSet<usize> = match &common {
            None => g.neighbors(v).clone(),
            Some(c) => c.intersection(g.neighbors(v)).copied().collect(),
        };
        if c.len() < kb {
            continue;
        }
        if choose_a(g, &a[i + 1..], need - 1, kb, Some(c), steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Is there a simple path with `k` edges starting at the root? A graph
/// without a root is a no-instance.
pub fn rooted_path(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let Some(r) = g.root() else {
        return Ok(false);
    };
    let mut steps = Steps::new("rooted path search", lim);
    let mut on_path = alloc::vec![false; g.n()];
    on_path[r] = true;
    walk(g, r, k, &mut on_path, &mut steps)
}

fn walk(g: &AnnotatedGraph, v: usize, left: u64, on: &mut [bool], steps: &mut Steps) -> Result<bool> {
    if left == 0 {
        return Ok(true);
    }
    steps.tick(1)?;
    for &w in g.neighbors(v) {
        if on[w] {
            continue;
        }
        on[w] = true;
        let found = walk(g, w, left - 1, on, steps)?;
        on[w] = false;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn color_bit(g: &AnnotatedGraph, v: usize, k: usize) -> Option<usize> {
    let c = g.color(v)? as usize;
    (c >= 1 && c <= k).then(|| c - 1)
}

fn check_colors(what: &'static str, k: u64) -> Result<usize> {
    if k > 20 {
        return Err(Error::CapExceeded {
            what,
            limit: 20,
            actual: k,
        });
    }
    Ok(k as usize)
}

/// Is there a path on `k` vertices using each color `1..=k` exactly once?
/// Dynamic programming over (color set, end vertex); the colors make every
/// such walk a simple path.
pub fn mc_path(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let k = check_colors("multicolored path (colors)", k)?;
    if k == 0 {
        return Ok(true);
    }
    if g.coloring().is_none() && g.n() > 0 {
        return Err(Error::invalid("multicolored path instance needs a coloring"));
    }
    let mut steps = Steps::new("multicolored path search", lim);
    let size = 1usize << k;
    let bits: Vec<Option<usize>> = (0..g.n()).map(|v| color_bit(g, v, k)).collect();
    let mut reach = alloc::vec![alloc::vec![false; g.n()]; size];
    for v in 0..g.n() {
        if let Some(b) = bits[v] {
            reach[1 << b][v] = true;
        }
    }
    for s in 1..size {
        steps.tick((g.n() + 2 * g.edge_count()) as u64)?;
        for v in 0..g.n() {
            if !reach[s][v] {
                continue;
            }
            for &w in g.neighbors(v) {
                if let Some(b) = bits[w] {
                    if s & 1 << b == 0 {
                        reach[s | 1 << b][w] = true;
                    }
                }
            }
        }
    }
    Ok(reach[size - 1].iter().any(|&x| x))
}

/// Is there a connected vertex set containing exactly one vertex of each
/// color `1..=k`? Dynamic programming over colorful subtrees.
pub fn colorful_motif(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let k = check_colors("colorful motif (colors)", k)?;
    if k == 0 {
        return Ok(true);
    }
    if g.coloring().is_none() && g.n() > 0 {
        return Err(Error::invalid("colorful motif instance needs a coloring"));
    }
    let mut steps = Steps::new("colorful motif search", lim);
    let size = 1usize << k;
    let bits: Vec<Option<usize>> = (0..g.n()).map(|v| color_bit(g, v, k)).collect();
    // tree[s][v]: some colorful tree with color set s contains v.
    let mut tree = alloc::vec![alloc::vec![false; g.n()]; size];
    for v in 0..g.n() {
        if let Some(b) = bits[v] {
            tree[1 << b][v] = true;
        }
    }
    for s in 1..size {
        if s.count_ones() < 2 {
            continue;
        }
        for v in 0..g.n() {
            let Some(bv) = bits[v] else { continue };
            if s & 1 << bv == 0 {
                continue;
            }
            // Split s into s1 (holding v's color) and s2, joined by an edge
            // from v into the s2 part.
            let others = s & !(1 << bv);
            let mut s2 = others;
            while s2 != 0 {
                steps.tick(1 + g.degree(v) as u64)?;
                let s1 = s & !s2;
                if tree[s1][v] && g.neighbors(v).iter().any(|&u| tree[s2][u]) {
                    tree[s][v] = true;
                    break;
                }
                s2 = (s2 - 1) & others;
            }
        }
    }
    Ok(tree[size - 1].iter().any(|&x| x))
}

/// Terminal Steiner tree with at most `k + |T|` vertices: a tree containing
/// every terminal, with every terminal a leaf.
///
/// With at most one terminal the single-vertex (or empty) tree qualifies.
/// With two adjacent terminals the edge between them qualifies. Otherwise
/// the non-terminal part `S` of the tree is nonempty, `G[S]` is connected
/// and every terminal has a neighbour in `S`; conversely such an `S` with
/// `|S| <= k` yields a tree.
pub fn tst(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let terms: Vec<usize> = g.terminals().map(|t| t.iter().copied().collect()).unwrap_or_default();
    if terms.len() <= 1 {
        return Ok(true);
    }
    if terms.len() == 2 && g.has_edge(terms[0], terms[1]) {
        return Ok(true);
    }
    let mut steps = Steps::new("terminal Steiner tree search", lim);
    let cands = g.non_terminals();
    let max = (k as usize).min(cands.len());
    let mut chosen = Vec::new();
    subsets(&cands, max, &mut chosen, &mut steps, &mut |s| {
        if s.is_empty() {
            return false;
        }
        let set: BTreeSet<usize> = s.iter().copied().collect();
        g.is_connected_subset(&set)
            && terms
                .iter()
                .all(|&t| g.neighbors(t).iter().any(|v| set.contains(v)))
    })
}

/// Calls `accept` on every subset of `cands` with at most `max` elements,
/// stopping at the first accepted one.
fn subsets(
    cands: &[usize],
    max: usize,
    chosen: &mut Vec<usize>,
    steps: &mut Steps,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    steps.tick(1)?;
    if accept(chosen) {
        return Ok(true);
    }
    if chosen.len() == max {
        return Ok(false);
    }
    for (i, &v) in cands.iter().enumerate() {
        chosen.push(v);
        let found = subsets(&cands[i + 1..], max, chosen, steps, accept)?;
        chosen.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

const INF: u64 = u64::MAX / 4;

/// Steiner tree with at most `k + |T|` vertices, via the Dreyfus-Wagner
/// recursion with unit edge weights (a tree with `e` edges has `e + 1`
/// vertices).
pub fn steiner_tree(g: &AnnotatedGraph, k: u64, lim: &OracleLimits) -> Result<bool> {
    let terms: Vec<usize> = g.terminals().map(|t| t.iter().copied().collect()).unwrap_or_default();
    if terms.len() <= 1 {
        return Ok(true);
    }
    let t = terms.len() - 1;
    if t > 14 {
        return Err(Error::CapExceeded {
            what: "Steiner tree (terminals)",
            limit: 15,
            actual: terms.len() as u64,
        });
    }
    let n = g.n();
    let mut steps = Steps::new("Steiner tree search", lim);
    steps.tick((n * n) as u64)?;
    let dist: Vec<Vec<u64>> = (0..n).map(|s| bfs(g, s)).collect();
    let size = 1usize << t;
    let mut dp = alloc::vec![alloc::vec![INF; n]; size];
    for (i, &term) in terms[..t].iter().enumerate() {
        dp[1 << i] = dist[term].clone();
    }
    for d in 1..size {
        if d.count_ones() < 2 {
            continue;
        }
        steps.tick((n * n + (n << d.count_ones())) as u64)?;
        let mut merged = alloc::vec![INF; n];
        for (u, m) in merged.iter_mut().enumerate() {
            let mut e = (d - 1) & d;
            while e != 0 {
                let val = dp[e][u] + dp[d & !e][u];
                if val < *m {
                    *m = val;
                }
                e = (e - 1) & d;
            }
        }
        for v in 0..n {
            let best = (0..n).map(|u| dist[v][u] + merged[u]).min().unwrap_or(INF);
            dp[d][v] = best;
        }
    }
    let edges = dp[size - 1][terms[t]];
    Ok(edges < INF && edges < k + terms.len() as u64)
}

fn bfs(g: &AnnotatedGraph, s: usize) -> Vec<u64> {
    let mut dist = alloc::vec![INF; g.n()];
    dist[s] = 0;
    let mut queue = alloc::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn triangle_has_a_three_clique() {
        let k3 = AnnotatedGraph::complete(3);
        assert!(clique(&k3, 3, &lim()).unwrap());
        assert!(!clique(&k3, 4, &lim()).unwrap());
    }

    #[test]
    fn rainbow_path_and_its_middle_deleted() {
        let p = AnnotatedGraph::path(3).with_coloring(alloc::vec![1, 2, 3]).unwrap();
        assert!(mc_path(&p, 3, &lim()).unwrap());
        let (q, _) = p.remove_vertices(&BTreeSet::from([1]));
        assert!(!mc_path(&q, 3, &lim()).unwrap());
    }

    #[test]
    fn star_with_leaf_terminals() {
        let g = AnnotatedGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])
            .unwrap()
            .with_terminals([1, 2, 3])
            .unwrap();
        assert!(tst(&g, 1, &lim()).unwrap());
        assert!(!tst(&g, 0, &lim()).unwrap());
        assert!(steiner_tree(&g, 1, &lim()).unwrap());
    }

    #[test]
    fn rooted_path_needs_a_root() {
        let g = AnnotatedGraph::path(3);
        assert!(!rooted_path(&g, 0, &lim()).unwrap());
        let g = g.with_root(0).unwrap();
        assert!(rooted_path(&g, 2, &lim()).unwrap());
        assert!(!rooted_path(&g, 3, &lim()).unwrap());
    }

    #[test]
    fn biclique_on_k22_and_matching() {
        let k22 = AnnotatedGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
            .unwrap()
            .with_coloring(alloc::vec![1, 1, 2, 2])
            .unwrap();
        assert!(biclique(&k22, 2, &lim()).unwrap());
        let m = AnnotatedGraph::from_edges(8, &[(0, 4), (1, 5), (2, 6), (3, 7)])
            .unwrap()
            .with_coloring(alloc::vec![1, 1, 1, 1, 2, 2, 2, 2])
            .unwrap();
        assert!(!biclique(&m, 2, &lim()).unwrap());
        assert!(biclique(&m, 1, &lim()).unwrap());
    }

    #[test]
    fn motif_on_rainbow_triangle() {
        let g = AnnotatedGraph::complete(3).with_coloring(alloc::vec![1, 2, 3]).unwrap();
        assert!(colorful_motif(&g, 3, &lim()).unwrap());
        let two = AnnotatedGraph::new(2).with_coloring(alloc::vec![1, 2]).unwrap();
        assert!(!colorful_motif(&two, 2, &lim()).unwrap());
    }
}
