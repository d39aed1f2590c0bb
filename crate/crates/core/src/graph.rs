//! Simple graphs over bitset adjacency rows, plus the bipartite incidence
//! graphs built from cell families.
//!
//! Vertices are `0..n`. The bipartite builder places the group side first
//! (`0..n_gamma`) and the coset side after it; coset vertices are
//! deduplicated by their element sets and ordered lexicographically, so a
//! family always builds the same graph.

use crate::cells::{self, CellFamily, Validity};
use crate::group::{FiniteGroup, Side};
use crate::{Error, Result};

// ======================================================================
// SimpleGraph
// ======================================================================

/// Undirected loop-free graph with bitset rows and display labels.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<String>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            words,
            bits: vec![0; n * words],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let mut g = Self::new(labels.len());
        g.labels = labels;
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bitset row of a vertex (words of 64 neighbors each).
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (wi, &word) in self.row(v).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Two-coloring when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// Breadth-first search from every vertex; a non-tree edge seen from
    /// root `r` witnesses a closed walk of length `dist[u] + dist[v] + 1`
    /// through an edge used once, hence a cycle no longer than that. The
    /// minimum over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // No shorter cycle can be found once 2*dist exceeds it.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] && parent[v] != u {
                        let cand = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Graph with vertex `perm[v]` playing the role of old vertex `v`
    /// (`perm` maps old indices to new positions).
    pub fn relabeled(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SimpleGraph::new(self.n);
        for v in 0..self.n {
            g.labels[perm[v]] = self.labels[v].clone();
        }
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Upper-triangle adjacency bits packed row by row.
    pub fn packed_adjacency(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut acc = 0u8;
        let mut nbits = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                acc = (acc << 1) | u8::from(self.has_edge(u, v));
                nbits += 1;
                if nbits == 8 {
                    out.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(acc << (8 - nbits));
        }
        out
    }

    /// Whether `perm` (old → new) is an isomorphism onto `other`.
    pub fn is_isomorphism_to(&self, other: &SimpleGraph, perm: &[usize]) -> bool {
        if self.n != other.n || perm.len() != self.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        self.edges().iter().all(|&(u, v)| other.has_edge(perm[u], perm[v]))
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.is_isomorphism_to(self, perm)
    }

    /// Distance-two graph restricted to `side`: vertices are re-indexed in
    /// the order given, adjacent when they share a neighbor in the full
    /// graph.
    pub fn distance_two_graph(&self, side: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::with_labels(side.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in side.iter().enumerate() {
            for (j, &v) in side.iter().enumerate().skip(i + 1) {
                let share = self
                    .row(u)
                    .iter()
                    .zip(self.row(v))
                    .any(|(a, b)| a & b != 0);
                if share {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subdivision: every edge replaced by a path of length two. New
    /// vertices are appended after the original ones in edge order.
    pub fn subdivision(&self) -> SimpleGraph {
        let edges = self.edges();
        let mut labels = self.labels.clone();
        for &(u, v) in &edges {
            labels.push(format!("{}-{}", self.labels[u], self.labels[v]));
        }
        let mut g = SimpleGraph::with_labels(labels);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let mid = self.n + i;
            g.add_edge(u, mid);
            g.add_edge(mid, v);
        }
        g
    }

    /// Row-major adjacency matrix as floats (for the eigensolver).
    pub fn adjacency_f64(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }
}

// ======================================================================
// Bipartite incidence graphs
// ======================================================================

/// Bipartite graph of a cell family: group elements on one side, distinct
/// coset sets on the other, an edge whenever the element lies in the set.
#[derive(Debug, Clone)]
pub struct BipartiteIncidenceGraph {
    graph: SimpleGraph,
    n_gamma: usize,
    beta_sets: Vec<Vec<usize>>,
    /// `(ℓ, k)` when element vertices all have degree ℓ and coset vertices
    /// all have degree k.
    biregular: Option<(usize, usize)>,
}

impl BipartiteIncidenceGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n_gamma(&self) -> usize {
        self.n_gamma
    }

    pub fn n_beta(&self) -> usize {
        self.beta_sets.len()
    }

    pub fn beta_sets(&self) -> &[Vec<usize>] {
        &self.beta_sets
    }

    pub fn biregular(&self) -> Option<(usize, usize)> {
        self.biregular
    }

    /// Vertex index of coset `i`.
    pub fn beta_vertex(&self, i: usize) -> usize {
        self.n_gamma + i
    }

    /// 0 for the element side, 1 for the coset side.
    pub fn side_of(&self, v: usize) -> u8 {
        u8::from(v >= self.n_gamma)
    }

    /// Row-major γ×β biadjacency matrix.
    pub fn biadjacency(&self) -> Vec<i64> {
        let b = self.n_beta();
        let mut m = vec![0i64; self.n_gamma * b];
        for g in 0..self.n_gamma {
            for (i, _set) in self.beta_sets.iter().enumerate() {
                if self.graph.has_edge(g, self.n_gamma + i) {
                    m[g * b + i] = 1;
                }
            }
        }
        m
    }

    /// Number of cosets containing both elements.
    pub fn common_blocks(&self, u: usize, v: usize) -> usize {
        self.graph
            .row(u)
            .iter()
            .zip(self.graph.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Distance-two graphs on the element side and on the coset side.
    pub fn halved_graphs(&self) -> (SimpleGraph, SimpleGraph) {
        let gamma: Vec<usize> = (0..self.n_gamma).collect();
        let beta: Vec<usize> = (self.n_gamma..self.graph.n()).collect();
        (
            self.graph.distance_two_graph(&gamma),
            self.graph.distance_two_graph(&beta),
        )
    }
}

/// Builds the incidence graph of any family, valid or not: coset vertices
/// are the distinct translate sets `gC`, edges given by membership.
pub fn build_incidence_unchecked(family: &CellFamily) -> BipartiteIncidenceGraph {
    let group = family.group();
    let n = group.order();
    let mut beta_sets: Vec<Vec<usize>> = Vec::new();
    for cell in family.cells() {
        for g in 0..n {
            let set = group.translate_set(g, cell, Side::Left);
            if let Err(pos) = beta_sets.binary_search(&set) {
                beta_sets.insert(pos, set);
            }
        }
    }
    let total = n + beta_sets.len();
    let mut labels: Vec<String> = (0..n).map(|g| group.elem_name(g).to_string()).collect();
    labels.extend(beta_sets.iter().map(|s| cells::fmt_set(s)));
    let mut graph = SimpleGraph::with_labels(labels);
    debug_assert_eq!(graph.n(), total);
    for (i, set) in beta_sets.iter().enumerate() {
        for &g in set {
            graph.add_edge(g, n + i);
        }
    }
    let ell = graph.degree(0);
    let gamma_uniform = (0..n).all(|v| graph.degree(v) == ell);
    let k = beta_sets.first().map_or(0, |s| s.len());
    let beta_uniform = beta_sets.iter().all(|s| s.len() == k);
    let biregular = (gamma_uniform && beta_uniform).then_some((ell, k));
    BipartiteIncidenceGraph {
        graph,
        n_gamma: n,
        beta_sets,
        biregular,
    }
}

/// Builds the incidence graph of a fully valid family. The result is
/// `(ℓ, k)`-biregular with `|β| = nℓ/k`.
pub fn build_bcay(family: &CellFamily) -> Result<BipartiteIncidenceGraph> {
    family.require(Validity::BcayValid)?;
    let x = build_incidence_unchecked(family);
    let n = family.group().order();
    let ell = family.ell();
    let k = family.k().unwrap_or(0);
    debug_assert_eq!(x.biregular(), Some((ell, k)));
    debug_assert_eq!(x.n_beta() * k, n * ell);
    Ok(x)
}

/// Cayley graph on an inverse-closed connection set avoiding the identity.
pub fn build_cayley(group: &FiniteGroup, s: &[usize]) -> Result<SimpleGraph> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.contains(&0) {
        return Err(Error::BadArgument("connection set contains the identity".into()));
    }
    if let Some(&bad) = set.iter().find(|&&x| x >= group.order()) {
        return Err(Error::ElementOutOfRange(bad, group.order()));
    }
    if group.inverse_set(&set) != set {
        return Err(Error::BadArgument("connection set is not inverse-closed".into()));
    }
    let n = group.order();
    let labels = (0..n).map(|g| group.elem_name(g).to_string()).collect();
    let mut graph = SimpleGraph::with_labels(labels);
    for g in 0..n {
        for &x in &set {
            let h = group.mul(g, x);
            if g < h {
                graph.add_edge(g, h);
            }
        }
    }
    Ok(graph)
}

/// Underlying Cayley graph of a family: `Cay(G, S(π))`.
pub fn underlying_cayley(family: &CellFamily) -> Result<SimpleGraph> {
    build_cayley(family.group(), &cells::connection_set(family))
}

/// Verifies `N·Nᵀ = A + ℓI` entrywise over the integers, with `N` the
/// biadjacency matrix of the incidence graph and `A` the adjacency matrix
/// of the underlying Cayley graph. Holds exactly for fully valid families;
/// families forced through the builder with weaker validity expose
/// mismatched walk counts.
pub fn biadjacency_identity_check(family: &CellFamily) -> Result<bool> {
    family.require(Validity::TAxiom)?;
    let x = build_incidence_unchecked(family);
    let a = underlying_cayley(family)?;
    let n = family.group().order();
    let b = x.n_beta();
    let ell = x.graph().degree(0);
    let nmat = x.biadjacency();
    for u in 0..n {
        for v in 0..n {
            let walks: i64 = (0..b).map(|j| nmat[u * b + j] * nmat[v * b + j]).sum();
            let expected = i64::from(a.has_edge(u, v)) + if u == v { ell as i64 } else { 0 };
            if walks != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::validate_family;
    use crate::group::make_group;

    fn fano_graph() -> BipartiteIncidenceGraph {
        let z7 = make_group("Z7").unwrap();
        let f = validate_family(&z7, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap();
        build_bcay(&f).unwrap()
    }

    #[test]
    fn cayley_basics() {
        let z7 = make_group("Z7").unwrap();
        let k7 = build_cayley(&z7, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(k7.edge_count(), 21);
        assert_eq!(k7.girth(), Some(3));
        assert!(k7.is_connected());
        assert!(k7.bipartition().is_none());

        let z6 = make_group("Z6").unwrap();
        let c6 = build_cayley(&z6, &[1, 5]).unwrap();
        assert_eq!(c6.girth(), Some(6));
        assert!(c6.bipartition().is_some());

        assert!(build_cayley(&z7, &[0, 1]).is_err());
        assert!(build_cayley(&z7, &[1, 2]).is_err()); // not inverse-closed
    }

    #[test]
    fn incidence_graph_shape() {
        let x = fano_graph();
        assert_eq!(x.graph().n(), 14);
        assert_eq!(x.biregular(), Some((3, 3)));
        assert_eq!(x.n_beta(), 7);
        assert_eq!(x.graph().girth(), Some(6));
        assert!(x.graph().is_connected());
        let colors = x.graph().bipartition().unwrap();
        for v in 0..14 {
            assert_eq!(colors[v] == colors[0], x.side_of(v) == x.side_of(0));
        }
        // Both halved graphs of the plane are complete on 7 vertices.
        let (h_gamma, h_beta) = x.halved_graphs();
        assert_eq!(h_gamma.edge_count(), 21);
        assert_eq!(h_beta.edge_count(), 21);
    }

    #[test]
    fn subgroup_cell_gives_stars() {
        let z12 = make_group("Z12").unwrap();
        let f = validate_family(&z12, &[vec![0, 4, 8]]).unwrap();
        let x = build_bcay(&f).unwrap();
        assert_eq!(x.n_beta(), 4);
        assert_eq!(x.biregular(), Some((1, 3)));
        assert!(!x.graph().is_connected());
        assert_eq!(x.graph().girth(), None);
    }

    #[test]
    fn subdivision_matches_pair_family() {
        // A k=2 family subdivides the underlying Cayley graph.
        let z6 = make_group("Z6").unwrap();
        let f = validate_family(&z6, &[vec![0, 1], vec![0, 5]]).unwrap();
        let x = build_bcay(&f).unwrap();
        assert_eq!(x.biregular(), Some((2, 2)));
        assert_eq!(x.graph().n(), 12);
        assert_eq!(x.graph().girth(), Some(12));
        let sub = build_cayley(&z6, &[1, 5]).unwrap().subdivision();
        assert_eq!(sub.n(), 12);
        assert_eq!(sub.girth(), Some(12));
    }

    #[test]
    fn walk_count_identity() {
        let z7 = make_group("Z7").unwrap();
        let fano = validate_family(&z7, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap();
        assert!(biadjacency_identity_check(&fano).unwrap());

        // Translate-closed but overlapping cells are exposed by walk counts.
        let fat = validate_family(&z7, &[vec![0, 1, 2], vec![0, 1, 6], vec![0, 5, 6]]).unwrap();
        assert!(!biadjacency_identity_check(&fat).unwrap());
    }

    #[test]
    fn relabeling_round_trip() {
        let x = fano_graph();
        let g = x.graph();
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
        let h = g.relabeled(&perm);
        assert!(g.is_isomorphism_to(&h, &perm));
        assert_eq!(g.edge_count(), h.edge_count());
        assert_ne!(g.packed_adjacency(), h.packed_adjacency());
        let identity: Vec<usize> = (0..n).collect();
        assert!(g.is_automorphism(&identity));
    }

    #[test]
    fn girth_edge_cases() {
        // Path graph: no cycle.
        let mut p = SimpleGraph::new(4);
        p.add_edge(0, 1);
        p.add_edge(1, 2);
        p.add_edge(2, 3);
        assert_eq!(p.girth(), None);
        // Triangle with a tail.
        let mut t = SimpleGraph::new(4);
        t.add_edge(0, 1);
        t.add_edge(1, 2);
        t.add_edge(2, 0);
        t.add_edge(2, 3);
        assert_eq!(t.girth(), Some(3));
        // Two squares sharing a vertex.
        let mut s = SimpleGraph::new(7);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)] {
            s.add_edge(u, v);
        }
        assert_eq!(s.girth(), Some(4));
    }
}
