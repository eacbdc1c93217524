//! Annotated undirected graphs and the structural operations shared by the
//! graph diminishers.
//!
//! Vertices are `0..n`. Colors are 1-based. A graph may carry a vertex
//! coloring, a root vertex and a terminal set; which of these are required
//! depends on the problem.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

mod format;
mod generate;
pub mod oracle;
mod width;

pub use format::{normalize_graph_text, parse_graph, serialize_graph, GraphFile};
pub use generate::{random_graph, random_graph_with, AnnotationSpec, Guard};
pub(crate) use generate::tst_guard;
pub use width::{
    exact_bandwidth, exact_cutwidth, exact_treewidth, max_degree, width, WidthKind, WidthValue,
    DEFAULT_WIDTH_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnnotatedGraph {
    adj: Vec<BTreeSet<usize>>,
    coloring: Option<Vec<u32>>,
    root: Option<usize>,
    terminals: Option<BTreeSet<usize>>,
}

impl AnnotatedGraph {
    /// Edgeless graph on `n` vertices without annotations.
    pub fn new(n: usize) -> Self {
        AnnotatedGraph {
            adj: alloc::vec![BTreeSet::new(); n],
            ..Default::default()
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = AnnotatedGraph::new(n);
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::invalid(format!("duplicate edge {u} {v}")));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = AnnotatedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = AnnotatedGraph::new(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Adds `{u, v}`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("edge {u} {v} out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at {u}")));
        }
        Ok(self.insert_edge(u, v))
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        self.adj[v].insert(u);
        self.adj[u].insert(v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        self.adj[v].remove(&u);
        self.adj[u].remove(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|nb| nb.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Open neighborhood `N(v)` as an owned set.
    pub fn neighborhood(&self, v: usize) -> BTreeSet<usize> {
        self.adj[v].clone()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Appends a vertex (with `color` if the graph is colored).
    pub fn add_vertex(&mut self, color: Option<u32>) -> usize {
        self.adj.push(BTreeSet::new());
        if let Some(c) = self.coloring.as_mut() {
            c.push(color.unwrap_or(1));
        }
        self.adj.len() - 1
    }

    pub fn coloring(&self) -> Option<&[u32]> {
        self.coloring.as_deref()
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        self.coloring.as_ref().map(|c| c[v])
    }

    pub fn set_coloring(&mut self, coloring: Option<Vec<u32>>) -> Result<()> {
        if let Some(c) = &coloring {
            if c.len() != self.n() {
                return Err(Error::invalid(format!(
                    "coloring has {} entries for {} vertices",
                    c.len(),
                    self.n()
                )));
            }
            if let Some(v) = c.iter().position(|&x| x == 0) {
                return Err(Error::invalid(format!("vertex {v} has color 0; colors start at 1")));
            }
        }
        self.coloring = coloring;
        Ok(())
    }

    pub fn with_coloring(mut self, coloring: Vec<u32>) -> Result<Self> {
        self.set_coloring(Some(coloring))?;
        Ok(self)
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> usize {
        self.coloring
            .as_ref()
            .map_or(0, |c| c.iter().collect::<BTreeSet<_>>().len())
    }

    pub fn max_color(&self) -> u32 {
        self.coloring
            .as_ref()
            .and_then(|c| c.iter().copied().max())
            .unwrap_or(0)
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn set_root(&mut self, root: Option<usize>) -> Result<()> {
        if let Some(r) = root {
            if r >= self.n() {
                return Err(Error::invalid(format!("root {r} out of range")));
            }
        }
        self.root = root;
        Ok(())
    }

    pub fn with_root(mut self, root: usize) -> Result<Self> {
        self.set_root(Some(root))?;
        Ok(self)
    }

    pub fn terminals(&self) -> Option<&BTreeSet<usize>> {
        self.terminals.as_ref()
    }

    pub fn terminal_count(&self) -> usize {
        self.terminals.as_ref().map_or(0, BTreeSet::len)
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        self.terminals.as_ref().is_some_and(|t| t.contains(&v))
    }

    /// An empty terminal set is stored as no terminal set, matching what
    /// the text format can express.
    pub fn set_terminals(&mut self, terminals: Option<BTreeSet<usize>>) -> Result<()> {
        let terminals = terminals.filter(|t| !t.is_empty());
        if let Some(t) = &terminals {
            if let Some(&v) = t.iter().find(|&&v| v >= self.n()) {
                return Err(Error::invalid(format!("terminal {v} out of range")));
            }
        }
        self.terminals = terminals;
        Ok(())
    }

    pub fn with_terminals(mut self, terminals: impl IntoIterator<Item = usize>) -> Result<Self> {
        self.set_terminals(Some(terminals.into_iter().collect()))?;
        Ok(self)
    }

    /// Non-terminal vertices in increasing order (all vertices when no
    /// terminal set is present).
    pub fn non_terminals(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.is_terminal(v)).collect()
    }

    /// `G[S]` together with the map from new to old vertex ids. Annotations
    /// are restricted to `S`; the root survives only if it lies in `S`.
    pub fn induced_with_map(&self, keep: &BTreeSet<usize>) -> (AnnotatedGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().copied().filter(|&v| v < self.n()).collect();
        let new_id: BTreeMap<usize, usize> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|w| new_id.get(w).copied()).collect())
            .collect();
        let g = AnnotatedGraph {
            adj,
            coloring: self
                .coloring
                .as_ref()
                .map(|c| old.iter().map(|&v| c[v]).collect()),
            root: self.root.and_then(|r| new_id.get(&r).copied()),
            terminals: self
                .terminals
                .as_ref()
                .map(|t| t.iter().filter_map(|v| new_id.get(v).copied()).collect()),
        };
        (g, old)
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> AnnotatedGraph {
        self.induced_with_map(keep).0
    }

    /// `G - S`.
    pub fn remove_vertices(&self, drop: &BTreeSet<usize>) -> (AnnotatedGraph, Vec<usize>) {
        let keep = (0..self.n()).filter(|v| !drop.contains(v)).collect();
        self.induced_with_map(&keep)
    }

    /// Adds every missing edge inside `S`.
    pub fn make_clique(&self, s: &BTreeSet<usize>) -> AnnotatedGraph {
        let mut g = self.clone();
        let s: Vec<usize> = s.iter().copied().filter(|&v| v < g.n()).collect();
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Remaps colors order-preservingly onto `1..=#distinct`.
    pub fn compact_colors(&self) -> AnnotatedGraph {
        let mut g = self.clone();
        if let Some(c) = g.coloring.as_mut() {
            let rank: BTreeMap<u32, u32> = c
                .iter()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .zip(1..)
                .collect();
            for x in c.iter_mut() {
                *x = rank[x];
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn largest_component(&self) -> usize {
        self.components().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `G[S]` is connected (the empty set counts as connected).
    pub fn is_connected_subset(&self, s: &BTreeSet<usize>) -> bool {
        let Some(&start) = s.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if s.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = alloc::vec![v];
        while let Some(x) = stack.pop() {
            for &w in &self.adj[x] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Check the structural invariants (symmetric adjacency, no loops,
    /// annotations in range).
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if v >= n || v == u || !self.adj[v].contains(&u) {
                    return Err(Error::invalid(format!("bad adjacency entry {u} -> {v}")));
                }
            }
        }
        if let Some(c) = &self.coloring {
            if c.len() != n || c.contains(&0) {
                return Err(Error::invalid("coloring does not cover every vertex with a color >= 1"));
            }
        }
        if self.root.is_some_and(|r| r >= n) {
            return Err(Error::invalid("root out of range"));
        }
        if self.terminals.as_ref().is_some_and(|t| t.iter().any(|&v| v >= n)) {
            return Err(Error::invalid("terminal out of range"));
        }
        Ok(())
    }
}

/// Disjoint union with vertex ids shifted in list order. Returns the union
/// and the offset of each input.
///
/// Either every nonempty input is colored or none is. Roots are kept only for a single input; callers composing several
/// rooted graphs attach their own root.
pub fn disjoint_union_with_offsets(graphs: &[AnnotatedGraph]) -> Result<(AnnotatedGraph, Vec<usize>)> {
    let Some(first) = graphs.first() else {
        return Err(Error::invalid("disjoint union of an empty list"));
    };
    // An empty graph read back from text has lost its (empty) coloring, and
    // a missing terminal set means no terminals, so neither counts as a
    // mismatch.
    let colored = graphs.iter().any(|g| g.coloring.is_some());
    let with_terminals = graphs.iter().any(|g| g.terminals.is_some());
    if colored && graphs.iter().any(|g| g.coloring.is_none() && g.n() > 0) {
        return Err(Error::invalid("disjoint union of colored and uncolored graphs"));
    }
    let mut out = AnnotatedGraph {
        adj: Vec::new(),
        coloring: colored.then(Vec::new),
        root: None,
        terminals: with_terminals.then(BTreeSet::new),
    };
    let mut offsets = Vec::with_capacity(graphs.len());
    for g in graphs {
        let off = out.adj.len();
        offsets.push(off);
        out.adj
            .extend(g.adj.iter().map(|nb| nb.iter().map(|&v| v + off).collect::<BTreeSet<_>>()));
        if let (Some(dst), Some(src)) = (out.coloring.as_mut(), g.coloring.as_ref()) {
            dst.extend_from_slice(src);
        }
        if let (Some(dst), Some(src)) = (out.terminals.as_mut(), g.terminals.as_ref()) {
            dst.extend(src.iter().map(|&v| v + off));
        }
    }
    if graphs.len() == 1 {
        out.root = first.root;
    }
    Ok((out, offsets))
}

pub fn disjoint_union(graphs: &[AnnotatedGraph]) -> Result<AnnotatedGraph> {
    disjoint_union_with_offsets(graphs).map(|(g, _)| g)
}
