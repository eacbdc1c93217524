//! Deliberately naive reference implementations: plain enumeration with no
//! pruning, shared by the oracle cross-checks.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use diminish_core::graph::AnnotatedGraph;
use diminish_core::setcover::SetSystem;
use diminish_core::tm::NtmInstance;

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

pub fn sized(n: usize, k: u64) -> impl Iterator<Item = Vec<usize>> {
    subsets(n).filter(move |s| s.len() as u64 == k)
}

pub fn naive_clique(g: &AnnotatedGraph, k: u64) -> bool {
    sized(g.n(), k).any(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
}

pub fn naive_biclique(g: &AnnotatedGraph, k: u64) -> bool {
    let side = |c: u32| -> Vec<usize> { (0..g.n()).filter(|&v| g.color(v) == Some(c)).collect() };
    let (a, b) = (side(1), side(2));
    sized(a.len(), k).any(|sa| {
        sized(b.len(), k).any(|sb| sa.iter().all(|&i| sb.iter().all(|&j| g.has_edge(a[i], b[j]))))
    })
}

/// Injective vertex sequences of length `len` with consecutive vertices
/// adjacent, optionally starting at `start`.
pub fn walks(g: &AnnotatedGraph, len: usize, start: Option<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(g: &AnnotatedGraph, len: usize, seq: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if seq.len() == len {
            return f(seq);
        }
        for v in 0..g.n() {
            if seq.contains(&v) || seq.last().is_some_and(|&u| !g.has_edge(u, v)) {
                continue;
            }
            seq.push(v);
            let hit = rec(g, len, seq, f);
            seq.pop();
            if hit {
                return true;
            }
        }
        false
    }
    let mut seq = Vec::new();
    match start {
        Some(s) if len > 0 => {
            seq.push(s);
            rec(g, len, &mut seq, f)
        }
        _ => rec(g, len, &mut seq, f),
    }
}

pub fn naive_rooted_path(g: &AnnotatedGraph, k: u64) -> bool {
    let Some(r) = g.root() else { return false };
    walks(g, k as usize + 1, Some(r), &mut |_| true)
}

pub fn rainbow(g: &AnnotatedGraph, s: &[usize], k: u64) -> bool {
    let cols: BTreeSet<u32> = s.iter().map(|&v| g.color(v).unwrap()).collect();
    cols.len() == s.len() && cols == (1..=k as u32).collect()
}

pub fn naive_mc_path(g: &AnnotatedGraph, k: u64) -> bool {
    if k as usize > g.n() {
        return false;
    }
    walks(g, k as usize, None, &mut |s| rainbow(g, s, k))
}

pub fn naive_motif(g: &AnnotatedGraph, k: u64) -> bool {
    sized(g.n(), k).any(|s| rainbow(g, &s, k) && g.is_connected_subset(&s.iter().copied().collect()))
}

/// Edge subsets forming a tree through every terminal with at most
/// `k + |T|` vertices; `leaves` additionally asks terminals to be leaves.
pub fn naive_tree(g: &AnnotatedGraph, k: u64, leaves: bool) -> bool {
    let t: BTreeSet<usize> = g.terminals().cloned().unwrap_or_default();
    if t.len() <= 1 {
        return true;
    }
    let edges = g.edges();
    let limit = k as usize + t.len();
    subsets(edges.len()).any(|chosen| {
        if chosen.is_empty() || chosen.len() + 1 > limit {
            return false;
        }
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &e in &chosen {
            let (u, v) = edges[e];
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        let verts: BTreeSet<usize> = deg.keys().copied().collect();
        if verts.len() != chosen.len() + 1 || !t.is_subset(&verts) {
            return false;
        }
        if leaves && t.iter().any(|x| deg[x] != 1) {
            return false;
        }
        let sub = AnnotatedGraph::from_edges(
            g.n(),
            &chosen.iter().map(|&e| edges[e]).collect::<Vec<_>>(),
        )
        .unwrap();
        sub.is_connected_subset(&verts)
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub fn perm_cutwidth(g: &AnnotatedGraph, perms: &[Vec<usize>]) -> u64 {
    let edges = g.edges();
    perms
        .iter()
        .map(|order| {
            let mut pos = vec![0; g.n()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            (0..g.n().saturating_sub(1))
                .map(|gap| {
                    edges
                        .iter()
                        .filter(|&&(u, v)| pos[u].min(pos[v]) <= gap && pos[u].max(pos[v]) > gap)
                        .count() as u64
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}

pub fn perm_bandwidth(g: &AnnotatedGraph, perms: &[Vec<usize>]) -> u64 {
    let edges = g.edges();
    perms
        .iter()
        .map(|order| {
            let mut pos = vec![0i64; g.n()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i as i64;
            }
            edges.iter().map(|&(u, v)| (pos[u] - pos[v]).unsigned_abs()).max().unwrap_or(0)
        })
        .min()
        .unwrap_or(0)
}

/// Treewidth as the best elimination ordering.
pub fn perm_treewidth(g: &AnnotatedGraph, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|order| {
            let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
            let mut worst = 0;
            for &v in order {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                worst = worst.max(nb.len() as u64);
                for &a in &nb {
                    adj[a].remove(&v);
                    for &b in &nb {
                        if a != b {
                            adj[a].insert(b);
                        }
                    }
                }
                adj[v].clear();
            }
            worst
        })
        .min()
        .unwrap_or(0)
}

/// Plain recursion over runs, no deduplication. Gives up (returns `None`)
/// after `budget` nodes.
pub fn naive_accepts(inst: &NtmInstance, budget: u64) -> Option<bool> {
    fn rec(
        inst: &NtmInstance,
        tape: &mut BTreeMap<i64, usize>,
        head: i64,
        q: usize,
        left: u64,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let m = &inst.machine;
        if left == 0 {
            return Some(m.is_accepting(q));
        }
        let read = tape.get(&head).copied();
        for a in m.actions(read, q).to_vec() {
            let old = tape.insert(head, a.write);
            let hit = rec(inst, tape, head + a.mv.delta(), a.to, left - 1, nodes, budget);
            match old {
                Some(s) => tape.insert(head, s),
                None => tape.remove(&head),
            };
            if hit? {
                return Some(true);
            }
        }
        Some(false)
    }
    let mut tape: BTreeMap<i64, usize> = inst.input.iter().enumerate().map(|(i, &s)| (i as i64, s)).collect();
    let mut nodes = 0;
    rec(inst, &mut tape, 0, inst.machine.initial, inst.k, &mut nodes, budget)
}

pub fn naive_set_cover(s: &SetSystem) -> bool {
    subsets(s.m()).any(|c| {
        c.len() as u64 <= s.k
            && (0..s.n).all(|u| c.iter().any(|&i| s.family[i].contains(&u)))
    })
}

pub fn naive_hitting_set(s: &SetSystem) -> bool {
    subsets(s.n).any(|h| {
        h.len() as u64 <= s.k && s.family.iter().all(|f| h.iter().any(|e| f.contains(e)))
    })
}

pub fn system_from_mask(n: usize, m: usize, mask: u64, k: u64) -> SetSystem {
    let family = (0..m)
        .map(|i| (0..n).filter(|&u| mask >> (i * n + u) & 1 == 1).collect())
        .collect();
    SetSystem::new(n, family, k).unwrap()
}
