//! Canonical labeling, graph certificates and automorphism groups.
//!
//! The engine is a standard individualization–refinement search: starting
//! from the unit partition, cells are refined to an equitable partition
//! (every vertex in a cell has the same number of neighbours in every
//! cell), then a non-singleton cell is split by individualizing each of its
//! vertices in turn. Leaves of the search tree are discrete partitions,
//! i.e. candidate labelings; the canonical form is the lexicographic
//! minimum of (node-invariant sequence, packed adjacency) over all leaves.
//!
//! Two leaves with identical relabeled adjacency matrices differ by an
//! automorphism, so the search collects automorphism generators as it
//! runs and uses their orbits to prune sibling branches. Subtrees are also
//! pruned when their invariant prefix can neither beat the best leaf nor
//! match the first leaf (the first-path track is what guarantees the
//! collected generators generate the full automorphism group).

use std::cmp::Ordering;

use crate::graph::{BipartiteIncidenceGraph, SimpleGraph};
use crate::perm::{self, PermGroup};
use crate::{Error, Result};

/// Hard vertex-count cap for the canonical labeling search.
pub const MAX_CANON_VERTICES: usize = 128;

const NODE_BUDGET: u64 = 20_000_000;

/// Output of a canonical labeling run.
#[derive(Debug, Clone)]
pub struct CanonOutcome {
    /// Bytes identifying the graph up to isomorphism: vertex count followed
    /// by the packed upper-triangle adjacency of the canonical relabeling.
    pub certificate: Vec<u8>,
    /// Map old vertex -> canonical position.
    pub canonical_labeling: Vec<usize>,
    /// Automorphism generators on the original vertex labels.
    pub generators: Vec<Vec<usize>>,
    /// Order of the full automorphism group.
    pub aut_order: u128,
    /// Vertex orbits under the automorphism group, each sorted ascending.
    pub orbits: Vec<Vec<usize>>,
}

/// Automorphism data of a bipartite incidence graph.
#[derive(Debug, Clone)]
pub struct AutReport {
    pub order: u128,
    pub generators: Vec<Vec<usize>>,
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Index of the side-preserving subgroup: 1 if every automorphism fixes
    /// the two sides setwise, 2 if some automorphism exchanges them. `None`
    /// when the graph is disconnected (sides need not be preserved blockwise
    /// and the index is not defined).
    pub side_preserving_index: Option<usize>,
    /// Order of the side-preserving subgroup (when defined).
    pub side_preserving_order: Option<u128>,
}

#[derive(Clone)]
struct Leaf {
    invs: Vec<u64>,
    packed: Vec<u8>,
    labeling: Vec<usize>,
}

struct Search<'g> {
    graph: &'g SimpleGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    nodes: u64,
}

fn fnv_fold(acc: &mut u64, x: u64) {
    *acc ^= x;
    *acc = acc.wrapping_mul(0x0000_0100_0000_01b3);
}

fn cell_mask(n: usize, cell: &[usize]) -> Vec<u64> {
    let mut mask = vec![0u64; n.div_ceil(64)];
    for &v in cell {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

fn count_in(row: &[u64], mask: &[u64]) -> u32 {
    row.iter()
        .zip(mask)
        .map(|(a, b)| (a & b).count_ones())
        .sum()
}

/// Refine an ordered partition until it is equitable. Fragments of a split
/// cell are ordered by their neighbour-count signature, which is an
/// isomorphism-invariant choice.
fn refine(graph: &SimpleGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = graph.n();
    loop {
        let masks: Vec<Vec<u64>> = cells.iter().map(|c| cell_mask(n, c)).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig: Vec<u32> = masks.iter().map(|m| count_in(graph.row(v), m)).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    if i - start != cell.len() {
                        changed = true;
                    }
                    start = i;
                }
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Isomorphism-invariant hash of an equitable partition: cell sizes plus
/// the cell-to-cell neighbour-count matrix (well defined by equitability).
fn partition_invariant(graph: &SimpleGraph, cells: &[Vec<usize>], discrete: bool) -> u64 {
    let n = graph.n();
    let masks: Vec<Vec<u64>> = cells.iter().map(|c| cell_mask(n, c)).collect();
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    fnv_fold(&mut h, cells.len() as u64);
    fnv_fold(&mut h, discrete as u64);
    for cell in cells {
        fnv_fold(&mut h, cell.len() as u64);
        let rep = cell[0];
        for mask in &masks {
            fnv_fold(&mut h, count_in(graph.row(rep), mask) as u64);
        }
    }
    h
}

/// Compare a partial invariant sequence against a full leaf sequence,
/// looking only at the shared prefix.
fn prefix_cmp(partial: &[u64], full: &[u64]) -> Ordering {
    for (a, b) in partial.iter().zip(full) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    if partial.len() > full.len() {
        // Deeper than the reference leaf with an equal prefix: treat as
        // worse; the leaf-flag folded into the invariant makes this rare.
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

impl<'g> Search<'g> {
    fn run(graph: &'g SimpleGraph) -> Result<CanonOutcome> {
        let n = graph.n();
        if n > MAX_CANON_VERTICES {
            return Err(Error::GraphTooLarge(n));
        }
        let mut search = Search {
            graph,
            first: None,
            best: None,
            gens: Vec::new(),
            nodes: 0,
        };
        if n == 0 {
            return Ok(CanonOutcome {
                certificate: 0u64.to_le_bytes().to_vec(),
                canonical_labeling: Vec::new(),
                generators: Vec::new(),
                aut_order: 1,
                orbits: Vec::new(),
            });
        }
        let root = vec![(0..n).collect::<Vec<usize>>()];
        let mut path = Vec::new();
        search.recurse(root, Vec::new(), &mut path)?;
        let best = search.best.expect("search of a non-empty graph yields a leaf");
        let mut certificate = (n as u64).to_le_bytes().to_vec();
        certificate.extend_from_slice(&best.packed);
        let gens = search.gens;
        let aut = PermGroup::new(n, gens.clone());
        Ok(CanonOutcome {
            certificate,
            canonical_labeling: best.labeling,
            aut_order: aut.order(),
            orbits: aut.orbits(),
            generators: gens,
        })
    }

    fn recurse(
        &mut self,
        cells: Vec<Vec<usize>>,
        mut invs: Vec<u64>,
        path: &mut Vec<usize>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(Error::BadArgument(format!(
                "canonical labeling search exceeded {NODE_BUDGET} nodes"
            )));
        }
        let cells = refine(self.graph, cells);
        let discrete = cells.iter().all(|c| c.len() == 1);
        invs.push(partition_invariant(self.graph, &cells, discrete));

        let vs_best = match &self.best {
            None => Ordering::Less,
            Some(best) => prefix_cmp(&invs, &best.invs),
        };
        if vs_best == Ordering::Greater {
            let on_first_track = match &self.first {
                None => true,
                Some(first) => prefix_cmp(&invs, &first.invs) == Ordering::Equal,
            };
            if !on_first_track {
                return Ok(());
            }
        }

        if discrete {
            self.handle_leaf(&cells, invs);
            return Ok(());
        }

        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() {
                let fixing: Vec<Vec<usize>> = self
                    .gens
                    .iter()
                    .filter(|g| path.iter().all(|&p| g[p] == p))
                    .cloned()
                    .collect();
                if !fixing.is_empty() {
                    let orbit_ids = perm::point_orbits(self.graph.n(), &fixing);
                    if tried.iter().any(|&u| orbit_ids[u] == orbit_ids[v]) {
                        continue;
                    }
                }
            }
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            path.push(v);
            let result = self.recurse(child, invs.clone(), path);
            path.pop();
            result?;
            tried.push(v);
        }
        Ok(())
    }

    fn handle_leaf(&mut self, cells: &[Vec<usize>], invs: Vec<u64>) {
        let n = self.graph.n();
        let mut labeling = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let packed = self.graph.relabeled(&labeling).packed_adjacency();
        let leaf = Leaf {
            invs,
            packed,
            labeling,
        };
        if self.first.is_none() {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return;
        }
        let first = self.first.as_ref().unwrap();
        if leaf.invs == first.invs && leaf.packed == first.packed {
            let reference = first.labeling.clone();
            self.record_automorphism(&reference, &leaf.labeling);
        }
        let best = self.best.as_ref().unwrap();
        match leaf
            .invs
            .cmp(&best.invs)
            .then_with(|| leaf.packed.cmp(&best.packed))
        {
            Ordering::Less => self.best = Some(leaf),
            Ordering::Equal => {
                let reference = best.labeling.clone();
                self.record_automorphism(&reference, &leaf.labeling);
            }
            Ordering::Greater => {}
        }
    }

    /// Two labelings with identical images differ by the automorphism
    /// `u -> reference⁻¹(other(u))`.
    fn record_automorphism(&mut self, reference: &[usize], other: &[usize]) {
        let inv_ref = perm::invert(reference);
        let g: Vec<usize> = other.iter().map(|&pos| inv_ref[pos]).collect();
        if perm::is_identity(&g) || self.gens.contains(&g) {
            return;
        }
        debug_assert!(self.graph.is_automorphism(&g));
        self.gens.push(g);
    }
}

/// Canonical labeling, certificate and automorphism group of a graph.
pub fn canonical_form(graph: &SimpleGraph) -> Result<CanonOutcome> {
    Search::run(graph)
}

/// Isomorphism-class certificate of a graph.
pub fn certificate(graph: &SimpleGraph) -> Result<Vec<u8>> {
    Ok(Search::run(graph)?.certificate)
}

/// An explicit isomorphism `a -> b` when one exists.
pub fn isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let ca = Search::run(a)?;
    let cb = Search::run(b)?;
    if ca.certificate != cb.certificate {
        return Ok(None);
    }
    let inv_b = perm::invert(&cb.canonical_labeling);
    let map: Vec<usize> = ca.canonical_labeling.iter().map(|&pos| inv_b[pos]).collect();
    debug_assert!(a.is_isomorphism_to(b, &map));
    Ok(Some(map))
}

/// Automorphism report of a bipartite incidence graph, including whether
/// any automorphism exchanges the two sides.
pub fn incidence_automorphisms(x: &BipartiteIncidenceGraph) -> Result<AutReport> {
    let outcome = Search::run(x.graph())?;
    let connected = x.graph().is_connected();
    let (index, side_order) = if connected {
        let swaps = outcome
            .generators
            .iter()
            .any(|g| x.side_of(g[0]) != x.side_of(0));
        let idx = if swaps { 2 } else { 1 };
        (Some(idx), Some(outcome.aut_order / idx as u128))
    } else {
        (None, None)
    };
    Ok(AutReport {
        order: outcome.aut_order,
        generators: outcome.generators,
        vertex_orbits: outcome.orbits,
        side_preserving_index: index,
        side_preserving_order: side_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn lcg_perm(n: usize, seed: &mut u64) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = ((*seed >> 33) as usize) % (i + 1);
            p.swap(i, j);
        }
        p
    }

    #[test]
    fn small_automorphism_groups() {
        // Path on 3 vertices: swap the endpoints.
        let p3 = graph_from_edges(3, &[(0, 1), (1, 2)]);
        let out = canonical_form(&p3).unwrap();
        assert_eq!(out.aut_order, 2);
        assert_eq!(out.orbits, vec![vec![0, 2], vec![1]]);

        // Path on 4 vertices.
        let p4 = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(canonical_form(&p4).unwrap().aut_order, 2);

        // Complete graph: full symmetric group.
        let mut k4 = SimpleGraph::new(4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                k4.add_edge(u, v);
            }
        }
        assert_eq!(canonical_form(&k4).unwrap().aut_order, 24);

        // Star with three leaves.
        let star = graph_from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let out = canonical_form(&star).unwrap();
        assert_eq!(out.aut_order, 6);
        assert_eq!(out.orbits, vec![vec![0], vec![1, 2, 3]]);

        // 6-cycle: dihedral of order 12.
        let c6 = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let out = canonical_form(&c6).unwrap();
        assert_eq!(out.aut_order, 12);
        assert_eq!(out.orbits.len(), 1);
    }

    #[test]
    fn petersen_graph() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, 5 + i)); // spokes
        }
        let g = graph_from_edges(10, &edges);
        assert_eq!(g.girth(), Some(5));
        let out = canonical_form(&g).unwrap();
        assert_eq!(out.aut_order, 120);
        assert_eq!(out.orbits.len(), 1);
    }

    #[test]
    fn heawood_graph() {
        // Points 0..7, blocks 7..14; point i on block j iff j - 7 - i is a
        // quadratic-residue-style difference {0, 1, 3} mod 7.
        let mut g = SimpleGraph::new(14);
        for i in 0..7 {
            for d in [0usize, 1, 3] {
                g.add_edge(i, 7 + (i + d) % 7);
            }
        }
        assert_eq!(g.girth(), Some(6));
        let out = canonical_form(&g).unwrap();
        assert_eq!(out.aut_order, 336);
        assert_eq!(out.orbits.len(), 1);
    }

    #[test]
    fn certificates_separate_non_isomorphic_graphs() {
        let c6 = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_triangles = graph_from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(
            certificate(&c6).unwrap(),
            certificate(&two_triangles).unwrap()
        );
        assert!(isomorphism(&c6, &two_triangles).unwrap().is_none());

        // K(3,3) and the triangular prism: both cubic on 6 vertices.
        let mut k33 = SimpleGraph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v);
            }
        }
        let prism = graph_from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        );
        assert_ne!(certificate(&k33).unwrap(), certificate(&prism).unwrap());
        assert_eq!(canonical_form(&k33).unwrap().aut_order, 72);
        assert_eq!(canonical_form(&prism).unwrap().aut_order, 12);
    }

    #[test]
    fn certificates_invariant_under_relabeling() {
        let mut seed = 0x5eed_cafe_u64;
        let mut g = SimpleGraph::new(9);
        // An asymmetric-ish sparse graph plus a triangle.
        for &(u, v) in &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 6),
        ] {
            g.add_edge(u, v);
        }
        let cert = certificate(&g).unwrap();
        for _ in 0..12 {
            let p = lcg_perm(9, &mut seed);
            let h = g.relabeled(&p);
            assert_eq!(certificate(&h).unwrap(), cert);
            let map = isomorphism(&g, &h).unwrap().expect("isomorphic by construction");
            assert!(g.is_isomorphism_to(&h, &map));
        }
        // Removing one edge changes the class.
        let h = graph_from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7), (7, 8)],
        );
        assert_ne!(certificate(&g).unwrap(), certificate(&h).unwrap());
    }

    #[test]
    fn canonical_labeling_is_a_permutation_onto_certificate() {
        let g = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let out = canonical_form(&g).unwrap();
        let mut seen = vec![false; 5];
        for &pos in &out.canonical_labeling {
            assert!(!seen[pos]);
            seen[pos] = true;
        }
        let relabeled = g.relabeled(&out.canonical_labeling);
        let mut expect = (g.n() as u64).to_le_bytes().to_vec();
        expect.extend_from_slice(&relabeled.packed_adjacency());
        assert_eq!(out.certificate, expect);
        for gen in &out.generators {
            assert!(g.is_automorphism(gen));
        }
    }

    #[test]
    fn disconnected_orbit_structure() {
        // Two disjoint edges plus an isolated vertex.
        let g = graph_from_edges(5, &[(0, 1), (2, 3)]);
        let out = canonical_form(&g).unwrap();
        // Swap within each edge, swap the edges: order 2*2*2 = 8.
        assert_eq!(out.aut_order, 8);
        assert_eq!(out.orbits, vec![vec![0, 1, 2, 3], vec![4]]);
    }
}
