//! Folded Stallings graphs of finitely generated subgroups.

use std::collections::BTreeMap;

use crate::algebra::{Letter, Word};

/// The folded core graph of a subgroup. Vertex 0 is the base vertex.
///
/// Each vertex maps letter codes to targets; an edge `u --x--> v` is stored
/// as `x` at `u` and `x^-1` at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreGraph {
    adjacency: Vec<BTreeMap<u8, usize>>,
}

struct Folder {
    parent: Vec<usize>,
    out: Vec<BTreeMap<u8, usize>>,
}

impl Folder {
    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn add_vertex(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.out.push(BTreeMap::new());
        self.parent.len() - 1
    }

    /// Adds `u --a--> v` and folds everything this identifies.
    fn add_edge(&mut self, u: usize, a: u8, v: usize) {
        let mut queue = vec![(u, a, v)];
        let mut merges: Vec<(usize, usize)> = Vec::new();
        while !queue.is_empty() || !merges.is_empty() {
            if let Some((u, a, v)) = queue.pop() {
                let (u, v) = (self.find(u), self.find(v));
                match self.out[u].get(&a).copied() {
                    Some(w) => merges.push((v, w)),
                    None => {
                        self.out[u].insert(a, v);
                    }
                }
                match self.out[v].get(&(a ^ 1)).copied() {
                    Some(w) => merges.push((u, w)),
                    None => {
                        self.out[v].insert(a ^ 1, u);
                    }
                }
                continue;
            }
            let (a, b) = merges.pop().expect("nonempty");
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            // Keep the smaller index as root so the base vertex survives.
            let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[gone] = keep;
            let moved = std::mem::take(&mut self.out[gone]);
            for (label, t) in moved {
                match self.out[keep].get(&label).copied() {
                    Some(s) => merges.push((s, t)),
                    None => {
                        self.out[keep].insert(label, t);
                    }
                }
            }
        }
    }
}

impl CoreGraph {
    /// Folds the bouquet of generator loops at the base vertex and trims
    /// hanging trees.
    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(gens: I) -> CoreGraph {
        let mut f = Folder {
            parent: Vec::new(),
            out: Vec::new(),
        };
        let base = f.add_vertex();
        for w in gens {
            if w.is_identity() {
                continue;
            }
            let codes = w.codes();
            let mut cur = base;
            for (i, &c) in codes.iter().enumerate() {
                let next = if i + 1 == codes.len() {
                    base
                } else {
                    let cur_root = f.find(cur);
                    match f.out[cur_root].get(&c).copied() {
                        Some(t) => {
                            cur = t;
                            continue;
                        }
                        None => f.add_vertex(),
                    }
                };
                f.add_edge(cur, c, next);
                cur = next;
            }
        }
        // Canonical numbering by breadth-first search from the base.
        let n = f.parent.len();
        let mut out: Vec<BTreeMap<u8, usize>> = vec![BTreeMap::new(); n];
        for (v, slot) in out.iter_mut().enumerate() {
            if f.find(v) != v {
                continue;
            }
            let edges: Vec<(u8, usize)> = f.out[v].iter().map(|(&l, &t)| (l, t)).collect();
            for (l, t) in edges {
                slot.insert(l, f.find(t));
            }
        }
        let base = f.find(base);
        trim(&mut out, base);
        renumber(&out, base)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of positively labelled edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|m| m.keys().filter(|&&l| l & 1 == 0).count())
            .sum()
    }

    /// Rank of the subgroup, `E - V + 1`.
    pub fn rank(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    /// Follows `w` from the base; the word is in the subgroup iff the walk
    /// returns to the base.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut v = 0;
        for l in w.letters() {
            match self.adjacency[v].get(&l.0) {
                Some(&t) => v = t,
                None => return false,
            }
        }
        v == 0
    }

    /// Positive edges `(source, generator, target)`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, m) in self.adjacency.iter().enumerate() {
            for (&l, &v) in m {
                if l & 1 == 0 {
                    out.push((u, Letter(l).generator(), v));
                }
            }
        }
        out
    }

    /// Whether no vertex has two equally labelled outgoing edges and every
    /// non-base vertex has degree at least 2.
    pub fn is_folded_core(&self) -> bool {
        let labels_ok = self.adjacency.iter().enumerate().all(|(u, m)| {
            m.iter()
                .all(|(&l, &v)| self.adjacency[v].get(&(l ^ 1)) == Some(&u))
        });
        labels_ok && self.adjacency.iter().skip(1).all(|m| m.len() >= 2)
    }
}

fn trim(out: &mut [BTreeMap<u8, usize>], base: usize) {
    let mut stack: Vec<usize> = (0..out.len()).collect();
    while let Some(v) = stack.pop() {
        if v == base || out[v].len() != 1 {
            continue;
        }
        let (&l, &t) = out[v].iter().next().expect("one edge");
        if t == v {
            continue;
        }
        out[v].clear();
        out[t].remove(&(l ^ 1));
        stack.push(t);
    }
}

fn renumber(out: &[BTreeMap<u8, usize>], base: usize) -> CoreGraph {
    let mut index = vec![usize::MAX; out.len()];
    let mut order = vec![base];
    index[base] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &t in out[v].values() {
            if index[t] == usize::MAX {
                index[t] = order.len();
                order.push(t);
            }
        }
        i += 1;
    }
    let adjacency = order
        .iter()
        .map(|&v| out[v].iter().map(|(&l, &t)| (l, index[t])).collect())
        .collect();
    CoreGraph { adjacency }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[(usize, i8)]) -> Word {
        Word::from_signed(2, s).unwrap()
    }

    #[test]
    fn single_loop() {
        let g = CoreGraph::from_words(&[w(&[(1, 1)])]);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.rank(), 1);
        assert!(g.accepts(&w(&[(1, -1), (1, -1)])));
        assert!(!g.accepts(&w(&[(2, 1)])));
    }

    #[test]
    fn square_and_generator() {
        let g = CoreGraph::from_words(&[w(&[(1, 1), (1, 1)]), w(&[(2, 1)])]);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.rank(), 2);
        assert!(g.accepts(&w(&[(1, 1), (1, 1), (2, 1)])));
        assert!(!g.accepts(&w(&[(1, 1)])));
        assert!(g.is_folded_core());
    }

    #[test]
    fn folding_collapses_redundant_generators() {
        let g = CoreGraph::from_words(&[w(&[(1, 1), (2, 1)]), w(&[(2, 1)]), w(&[(1, 1)])]);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.rank(), 2);
        let t = CoreGraph::from_words(&[Word::identity()]);
        assert_eq!((t.vertex_count(), t.rank()), (1, 0));
    }

    #[test]
    fn conjugate_has_a_stem() {
        let g = CoreGraph::from_words(&[w(&[(2, 1), (1, 1), (2, -1)])]);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.rank(), 1);
        assert!(g.accepts(&w(&[(2, 1), (1, -1), (1, -1), (2, -1)])));
        assert!(!g.accepts(&w(&[(1, 1)])));
    }
}
