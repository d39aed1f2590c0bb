//! Classical constructions of cell families and conversions between graph
//! models.
//!
//! - Perfect difference sets and their development designs.
//! - Affine point/line incidence `AG(n, q)` over elementary abelian groups.
//! - Projective point/line incidence `PG(n-1, q)` over a cyclic (Singer)
//!   group, using discrete logarithms in GF(q^n).
//! - 2-design parameter checks for valid families.
//! - Structure of two-cell families: either both cells are subgroups, or
//!   both are `subgroup ∪ coset` pairs sharing a common coset
//!   representative.
//! - Conversions: bipartite Cayley graph -> incidence family over the
//!   bipartition kernel, and bi-Cayley graph -> incidence family.

use std::collections::BTreeSet;

use crate::canon;
use crate::cells::{self, CellFamily, Validity};
use crate::gf::FiniteFieldTable;
use crate::graph::{self, SimpleGraph};
use crate::group::FiniteGroup;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Difference sets
// ---------------------------------------------------------------------------

/// Difference-set analysis of a subset of a group.
#[derive(Debug, Clone)]
pub struct DiffsetReport {
    /// The set after normalization (right-translated to contain the
    /// identity), sorted.
    pub normalized: Vec<usize>,
    /// The element whose inverse was used for the right shift, when the
    /// input did not contain the identity.
    pub shifted_by: Option<usize>,
    /// The common count of representations `g = d1 * d2^{-1}` over
    /// non-identity `g`, when that count is constant.
    pub lambda: Option<usize>,
    /// True when every non-identity element has the same count.
    pub is_perfect: bool,
}

fn check_subset(group: &FiniteGroup, d: &[usize]) -> Result<Vec<usize>> {
    if d.is_empty() {
        return Err(Error::BadArgument("difference set must be non-empty".into()));
    }
    let mut sorted = d.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != d.len() {
        return Err(Error::BadArgument("difference set has repeated elements".into()));
    }
    if let Some(&bad) = sorted.iter().find(|&&g| g >= group.order()) {
        return Err(Error::ElementOutOfRange(bad, group.order()));
    }
    Ok(sorted)
}

/// Counts right-quotient representations and decides perfectness. Sets not
/// containing the identity are first right-translated by the inverse of
/// their least element (the counts are invariant under right translation).
pub fn difference_set_report(group: &FiniteGroup, d: &[usize]) -> Result<DiffsetReport> {
    let sorted = check_subset(group, d)?;
    let (normalized, shifted_by) = if sorted.contains(&0) {
        (sorted, None)
    } else {
        let least = sorted[0];
        let inv = group.inv(least);
        let mut shifted: Vec<usize> = sorted.iter().map(|&x| group.mul(x, inv)).collect();
        shifted.sort_unstable();
        (shifted, Some(least))
    };
    let n = group.order();
    let mut counts = vec![0usize; n];
    for &d1 in &normalized {
        for &d2 in &normalized {
            if d1 != d2 {
                counts[group.mul(d1, group.inv(d2))] += 1;
            }
        }
    }
    debug_assert_eq!(counts[0], 0);
    let lambda = counts[1..].iter().max().copied().unwrap_or(0);
    let is_perfect = counts[1..].iter().all(|&c| c == lambda);
    Ok(DiffsetReport {
        normalized,
        shifted_by,
        lambda: if is_perfect { Some(lambda) } else { None },
        is_perfect,
    })
}

/// The two families attached to a difference set, with a four-way
/// isomorphism check against the explicitly built development designs.
#[derive(Debug, Clone)]
pub struct DiffsetFamilies {
    pub report: DiffsetReport,
    /// Cells `d^{-1} D` for `d` in the normalized set `D`.
    pub family: CellFamily,
    /// Cells `d D^{-1}` for `d` in the normalized set `D`.
    pub family_inverse: CellFamily,
    /// When both families are fully valid: do the two incidence graphs and
    /// the two development-design graphs all share one certificate?
    pub four_way_isomorphic: Option<bool>,
}

/// Bipartite point/block graph of the development `{gD : g in G}`, built
/// directly from cosets (independently of the cell machinery).
pub fn development_graph(group: &FiniteGroup, d: &[usize]) -> Result<SimpleGraph> {
    let sorted = check_subset(group, d)?;
    let n = group.order();
    let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    for g in 0..n {
        let mut block: Vec<usize> = sorted.iter().map(|&x| group.mul(g, x)).collect();
        block.sort_unstable();
        blocks.insert(block);
    }
    let blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
    let mut graph = SimpleGraph::new(n + blocks.len());
    for (i, block) in blocks.iter().enumerate() {
        for &p in block {
            graph.add_edge(p, n + i);
        }
    }
    Ok(graph)
}

/// Builds the translate family and the inverse-translate family of a
/// (normalized) difference set and cross-checks the four graph models.
pub fn diffset_families(group: &FiniteGroup, d: &[usize]) -> Result<DiffsetFamilies> {
    let report = difference_set_report(group, d)?;
    let dd = &report.normalized;
    let mut cells_d: Vec<Vec<usize>> = dd
        .iter()
        .map(|&x| group.translate_set(group.inv(x), dd, crate::group::Side::Left))
        .collect();
    cells_d.sort();
    cells_d.dedup();
    let d_inv = group.inverse_set(dd);
    let mut cells_inv: Vec<Vec<usize>> = dd
        .iter()
        .map(|&x| group.translate_set(x, &d_inv, crate::group::Side::Left))
        .collect();
    cells_inv.sort();
    cells_inv.dedup();
    let family = cells::validate_family(group, &cells_d)?;
    let family_inverse = cells::validate_family(group, &cells_inv)?;
    let four_way_isomorphic = if family.is_valid() && family_inverse.is_valid() {
        let c1 = canon::certificate(graph::build_bcay(&family)?.graph())?;
        let c2 = canon::certificate(graph::build_bcay(&family_inverse)?.graph())?;
        let c3 = canon::certificate(&development_graph(group, dd)?)?;
        let c4 = canon::certificate(&development_graph(group, &d_inv)?)?;
        Some(c1 == c2 && c2 == c3 && c3 == c4)
    } else {
        None
    };
    Ok(DiffsetFamilies {
        report,
        family,
        family_inverse,
        four_way_isomorphic,
    })
}

// ---------------------------------------------------------------------------
// 2-design parameters
// ---------------------------------------------------------------------------

/// Parameters of the block system of a valid family, viewed as a candidate
/// 2-design on the group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub v: usize,
    pub k: usize,
    pub lambda: Option<usize>,
    pub r: usize,
    pub b: usize,
    pub is_two_design: bool,
    pub is_symmetric: bool,
}

pub fn two_design_check(family: &CellFamily) -> Result<DesignReport> {
    family.require(Validity::BcayValid)?;
    let x = graph::build_bcay(family)?;
    let v = family.group().order();
    let k = family.k().expect("valid family has a uniform size");
    let r = family.ell();
    let b = x.n_beta();
    let mut lambda: Option<usize> = None;
    let mut constant = true;
    for u in 0..v {
        for w in (u + 1)..v {
            let common = x.common_blocks(u, w);
            match lambda {
                None => lambda = Some(common),
                Some(l) if l != common => {
                    constant = false;
                }
                _ => {}
            }
        }
    }
    let is_two_design = constant && lambda.unwrap_or(0) >= 1 && v >= 2;
    if is_two_design {
        let l = lambda.unwrap();
        debug_assert_eq!(l * (v - 1), r * (k - 1));
        debug_assert_eq!(b * k, v * r);
    }
    Ok(DesignReport {
        v,
        k,
        lambda: if constant { lambda } else { None },
        r,
        b,
        is_two_design,
        is_symmetric: is_two_design && b == v,
    })
}

// ---------------------------------------------------------------------------
// Affine and projective incidence families
// ---------------------------------------------------------------------------

fn factor_prime_power(q: usize) -> Result<(usize, u32)> {
    if q < 2 {
        return Err(Error::BadArgument(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::BadArgument(format!("{q} is not a prime power")));
    }
    Ok((p, m))
}

/// Point/line incidence of the affine space AG(dim, q): the group is the
/// elementary abelian translation group F_q^dim, and the cells are the
/// lines through the origin (the one-dimensional subspaces).
pub fn ag_family(dim: usize, q: usize) -> Result<CellFamily> {
    if dim < 2 {
        return Err(Error::BadArgument(
            "affine construction needs dimension at least 2".into(),
        ));
    }
    let (p, m) = factor_prime_power(q)?;
    let field = FiniteFieldTable::new(p, m)?;
    // Elementary abelian group F_p^(m * dim); a vector (v_1, .., v_dim) of
    // field-element encodings maps to sum(v_i * q^(dim-1-i)).
    let mut group = FiniteGroup::cyclic(p)?;
    let factor = FiniteGroup::cyclic(p)?;
    for _ in 1..(m as usize * dim) {
        group = FiniteGroup::direct_product(&group, &factor)?;
    }
    let encode = |vector: &[usize]| -> usize {
        vector.iter().fold(0usize, |acc, &digit| acc * q + digit)
    };
    // Canonical representatives of the projective points: first nonzero
    // coordinate equals 1.
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let total = q.pow(dim as u32);
    for code in 1..total {
        let mut vector = vec![0usize; dim];
        let mut rest = code;
        for slot in vector.iter_mut().rev() {
            *slot = rest % q;
            rest /= q;
        }
        let first = vector.iter().copied().find(|&c| c != 0).unwrap();
        if first != 1 {
            continue;
        }
        let mut line: Vec<usize> = (0..q)
            .map(|lambda| {
                let scaled: Vec<usize> =
                    vector.iter().map(|&c| field.mul(lambda, c)).collect();
                encode(&scaled)
            })
            .collect();
        line.sort_unstable();
        cells.push(line);
    }
    cells.sort();
    debug_assert_eq!(cells.len(), (total - 1) / (q - 1));
    cells::validate_family(&group, &cells)
}

/// Point/line incidence of the projective space PG(n-1, q) presented over
/// the cyclic group Z_N, N = (q^n - 1)/(q - 1): points are powers of a
/// primitive element of GF(q^n) modulo scalars, and the cells are the
/// lines through the point 0, read off through discrete logarithms.
pub fn pg_family(n: usize, q: usize) -> Result<CellFamily> {
    if n < 3 {
        return Err(Error::BadArgument(
            "projective construction needs rank at least 3".into(),
        ));
    }
    let (p, m) = factor_prime_power(q)?;
    let extension = m
        .checked_mul(n as u32)
        .ok_or_else(|| Error::BadArgument("rank overflow".into()))?;
    let field = FiniteFieldTable::new(p, extension)?;
    let big_q = field.q();
    let points = (big_q - 1) / (q - 1);
    let group = FiniteGroup::cyclic(points)?;
    // The subfield F_q sits inside GF(q^n) as the powers alpha^(t * N).
    let mut subfield = vec![0usize];
    for t in 0..(q - 1) {
        subfield.push(field.pow_alpha(t * points));
    }
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for j in 1..points {
        let beta = field.pow_alpha(j);
        let mut line: BTreeSet<usize> = BTreeSet::new();
        for &a in &subfield {
            for &b in &subfield {
                if a == 0 && b == 0 {
                    continue;
                }
                let elem = field.add(a, field.mul(b, beta));
                debug_assert_ne!(elem, 0, "independent combination cannot vanish");
                line.insert(field.log(elem).unwrap() % points);
            }
        }
        debug_assert_eq!(line.len(), q + 1);
        lines.insert(line.into_iter().collect());
    }
    let cells: Vec<Vec<usize>> = lines.into_iter().collect();
    debug_assert_eq!(
        cells.len() * (q * q - 1),
        (big_q / q - 1) * (q + 1),
        "line count through a point"
    );
    cells::validate_family(&group, &cells)
}

// ---------------------------------------------------------------------------
// Two-cell structure
// ---------------------------------------------------------------------------

/// Structure of a valid two-cell family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoCellShape {
    /// Both cells are subgroups (each forms its own translate class).
    BothSubgroups,
    /// Single translate class: `C1 = S1 ∪ S1·x`, `C2 = S2 ∪ S2·x^{-1}`
    /// with `S2 = x^{-1} S1 x`.
    CosetPair {
        s1: Vec<usize>,
        s2: Vec<usize>,
        x: usize,
    },
}

/// Connected abelian two-cell incidence graphs fall into two shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianTwoCellKind {
    /// `k = 2`: the incidence graph is a cycle of this length.
    Cycle { length: usize },
    /// `k ≥ 3`: the incidence graph is the subdivision of K_{m,m}.
    SubdividedCompleteBipartite { m: usize },
}

#[derive(Debug, Clone)]
pub struct TwoCellReport {
    pub shape: TwoCellShape,
    /// Set for connected families over abelian groups.
    pub abelian_kind: Option<AbelianTwoCellKind>,
    /// Certificate-level confirmation of `abelian_kind`.
    pub abelian_kind_verified: Option<bool>,
}

/// Classifies a valid family with exactly two cells.
pub fn classify_two_cell(family: &CellFamily) -> Result<TwoCellReport> {
    family.require(Validity::BcayValid)?;
    if family.ell() != 2 {
        return Err(Error::BadArgument(format!(
            "two-cell classification needs exactly 2 cells, got {}",
            family.ell()
        )));
    }
    let g = family.group();
    let c1 = &family.cells()[0];
    let c2 = &family.cells()[1];
    let shape = if g.is_subgroup(c1) {
        debug_assert!(g.is_subgroup(c2), "cell classes come in matched shapes");
        TwoCellShape::BothSubgroups
    } else {
        let s1 = cells::stabilizer_formula(g, c1);
        let mut candidates: Vec<usize> = c1
            .iter()
            .copied()
            .filter(|x| s1.binary_search(x).is_err())
            .collect();
        candidates.sort_by_key(|&x| (g.element_order(x), x));
        let x = *candidates
            .first()
            .expect("non-subgroup cell exceeds its stabilizer");
        let mut s2: Vec<usize> = s1.iter().map(|&s| g.conj(s, x)).collect();
        s2.sort_unstable();
        // Confirm the decomposition C1 = S1 ∪ S1 x, C2 = S2 ∪ S2 x^{-1}.
        let mut rebuilt1 = s1.clone();
        rebuilt1.extend(s1.iter().map(|&s| g.mul(s, x)));
        rebuilt1.sort_unstable();
        debug_assert_eq!(&rebuilt1, c1);
        let mut rebuilt2 = s2.clone();
        rebuilt2.extend(s2.iter().map(|&s| g.mul(s, g.inv(x))));
        rebuilt2.sort_unstable();
        debug_assert_eq!(&rebuilt2, c2);
        TwoCellShape::CosetPair { s1, s2, x }
    };
    let (abelian_kind, abelian_kind_verified) = if g.is_abelian() && cells::is_connected(family) {
        let n = g.order();
        let k = family.k().unwrap();
        let x = graph::build_bcay(family)?;
        if k == 2 {
            let length = 2 * n;
            let mut cycle = SimpleGraph::new(length);
            for i in 0..length {
                cycle.add_edge(i, (i + 1) % length);
            }
            let ok = canon::certificate(x.graph())? == canon::certificate(&cycle)?;
            (Some(AbelianTwoCellKind::Cycle { length }), Some(ok))
        } else {
            let m = k;
            let ok = if n == m * m {
                let mut complete = SimpleGraph::new(2 * m);
                for u in 0..m {
                    for w in 0..m {
                        complete.add_edge(u, m + w);
                    }
                }
                let subdiv = complete.subdivision();
                canon::certificate(x.graph())? == canon::certificate(&subdiv)?
            } else {
                false
            };
            (
                Some(AbelianTwoCellKind::SubdividedCompleteBipartite { m }),
                Some(ok),
            )
        }
    } else {
        (None, None)
    };
    Ok(TwoCellReport {
        shape,
        abelian_kind,
        abelian_kind_verified,
    })
}

// ---------------------------------------------------------------------------
// Conversions from Cayley-type graphs
// ---------------------------------------------------------------------------

/// Result of converting a bipartite Cayley graph `Cay(G, S)` into an
/// incidence family over the bipartition kernel.
#[derive(Debug, Clone)]
pub struct BipartiteCayleyConversion {
    /// The index-2 subgroup avoiding `S`, as a standalone group.
    pub kernel: FiniteGroup,
    /// Indices of the kernel elements inside the original group.
    pub kernel_embedding: Vec<usize>,
    /// The derived family: cells `s_i^{-1} S` rewritten inside the kernel.
    pub family: CellFamily,
    pub girth: Option<usize>,
    pub is_valid: bool,
    /// When the family is valid: certificate equality between the original
    /// Cayley graph and the incidence graph of the family.
    pub certificate_match: Option<bool>,
}

pub fn bipartite_cayley_to_bcay(
    group: &FiniteGroup,
    s: &[usize],
) -> Result<BipartiteCayleyConversion> {
    let cayley = graph::build_cayley(group, s)?;
    let hom = group.bipartition_homomorphism(s).ok_or_else(|| {
        Error::BadArgument(
            "no index-2 subgroup separates the connection set; the Cayley graph \
             is not connected bipartite"
            .into(),
        )
    })?;
    let kernel_set: Vec<usize> = (0..group.order())
        .filter(|&g| hom.images[g] == 0)
        .collect();
    let (kernel, kernel_embedding) = group.subgroup_as_group(&kernel_set)?;
    let back: std::collections::HashMap<usize, usize> = kernel_embedding
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();
    let mut sorted_s = s.to_vec();
    sorted_s.sort_unstable();
    let mut cell_sets: Vec<Vec<usize>> = Vec::new();
    for &si in &sorted_s {
        let inv = group.inv(si);
        let mut cell: Vec<usize> = sorted_s
            .iter()
            .map(|&sj| {
                *back
                    .get(&group.mul(inv, sj))
                    .expect("products of two connection elements lie in the kernel")
            })
            .collect();
        cell.sort_unstable();
        cell_sets.push(cell);
    }
    cell_sets.sort();
    cell_sets.dedup();
    let family = cells::validate_family(&kernel, &cell_sets)?;
    let is_valid = family.is_valid();
    let certificate_match = if is_valid {
        let x = graph::build_bcay(&family)?;
        Some(canon::certificate(x.graph())? == canon::certificate(&cayley)?)
    } else {
        None
    };
    Ok(BipartiteCayleyConversion {
        kernel,
        kernel_embedding,
        family,
        girth: cayley.girth(),
        is_valid,
        certificate_match,
    })
}

/// Result of converting a bi-Cayley graph into an incidence family.
#[derive(Debug, Clone)]
pub struct BiCayleyConversion {
    /// Cells `s_i^{-1} S` over the original group.
    pub family: CellFamily,
    /// The explicit two-copy graph: `g` (left) adjacent to `h` (right) iff
    /// `g^{-1} h ∈ S`.
    pub bicay_graph: SimpleGraph,
    pub is_valid: bool,
    /// Whether the left cosets `gS` are pairwise distinct (needed for the
    /// two-copy graph to coincide with the incidence graph).
    pub blocks_distinct: bool,
    pub certificate_match: Option<bool>,
}

pub fn bicay_to_bcay(group: &FiniteGroup, s: &[usize]) -> Result<BiCayleyConversion> {
    let sorted = check_subset(group, s)?;
    let n = group.order();
    let mut bicay = SimpleGraph::new(2 * n);
    for g in 0..n {
        for &si in &sorted {
            bicay.add_edge(g, n + group.mul(g, si));
        }
    }
    let mut cell_sets: Vec<Vec<usize>> = sorted
        .iter()
        .map(|&si| {
            let mut cell: Vec<usize> = sorted
                .iter()
                .map(|&sj| group.mul(group.inv(si), sj))
                .collect();
            cell.sort_unstable();
            cell
        })
        .collect();
    cell_sets.sort();
    cell_sets.dedup();
    let family = cells::validate_family(group, &cell_sets)?;
    let is_valid = family.is_valid();
    let blocks: BTreeSet<Vec<usize>> = (0..n)
        .map(|g| {
            let mut block: Vec<usize> = sorted.iter().map(|&si| group.mul(g, si)).collect();
            block.sort_unstable();
            block
        })
        .collect();
    let blocks_distinct = blocks.len() == n;
    let certificate_match = if is_valid && blocks_distinct {
        let x = graph::build_bcay(&family)?;
        Some(canon::certificate(x.graph())? == canon::certificate(&bicay)?)
    } else {
        None
    };
    Ok(BiCayleyConversion {
        family,
        bicay_graph: bicay,
        is_valid,
        blocks_distinct,
        certificate_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn fano_difference_set() {
        let g = z(7);
        let report = difference_set_report(&g, &[0, 1, 3]).unwrap();
        assert!(report.is_perfect);
        assert_eq!(report.lambda, Some(1));
        assert_eq!(report.shifted_by, None);

        // {1, 2, 4} normalizes to {0, 1, 3} by shifting with 1.
        let shifted = difference_set_report(&g, &[1, 2, 4]).unwrap();
        assert!(shifted.is_perfect);
        assert_eq!(shifted.normalized, vec![0, 1, 3]);
        assert_eq!(shifted.shifted_by, Some(1));

        let families = diffset_families(&g, &[0, 1, 3]).unwrap();
        assert!(families.family.is_valid());
        assert!(families.family_inverse.is_valid());
        assert_eq!(families.four_way_isomorphic, Some(true));
        assert_eq!(
            families.family.cells(),
            &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]
        );
    }

    #[test]
    fn imperfect_set_still_yields_translation_closed_family() {
        let g = z(7);
        let report = difference_set_report(&g, &[0, 1, 2]).unwrap();
        assert!(!report.is_perfect);
        assert_eq!(report.lambda, None);
        let families = diffset_families(&g, &[0, 1, 2]).unwrap();
        assert_eq!(families.family.validity(), Validity::TAxiom);
        assert_eq!(families.four_way_isomorphic, None);
    }

    #[test]
    fn biplane_lambda_two() {
        // Quadratic residues {1,3,4,5,9} mod 11 form a (11,5,2) set.
        let g = z(11);
        let report = difference_set_report(&g, &[1, 3, 4, 5, 9]).unwrap();
        assert!(report.is_perfect);
        assert_eq!(report.lambda, Some(2));
        assert_eq!(report.shifted_by, Some(1));
        assert_eq!(report.normalized, vec![0, 2, 3, 4, 8]);
        // λ = 2 forces overlapping translates, so the family cannot be valid.
        let families = diffset_families(&g, &[1, 3, 4, 5, 9]).unwrap();
        assert_eq!(families.family.validity(), Validity::TAxiom);
    }

    #[test]
    fn fano_design_parameters() {
        let g = z(7);
        let family =
            cells::validate_family(&g, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap();
        let design = two_design_check(&family).unwrap();
        assert_eq!(
            design,
            DesignReport {
                v: 7,
                k: 3,
                lambda: Some(1),
                r: 3,
                b: 7,
                is_two_design: true,
                is_symmetric: true,
            }
        );
    }

    #[test]
    fn affine_plane_of_order_three() {
        let family = ag_family(2, 3).unwrap();
        assert!(family.is_valid());
        assert_eq!(family.group().order(), 9);
        assert_eq!(family.ell(), 4);
        assert_eq!(family.k(), Some(3));
        assert_eq!(
            family.cells(),
            &[
                vec![0, 1, 2],
                vec![0, 3, 6],
                vec![0, 4, 8],
                vec![0, 5, 7]
            ]
        );
        let design = two_design_check(&family).unwrap();
        assert_eq!(
            design,
            DesignReport {
                v: 9,
                k: 3,
                lambda: Some(1),
                r: 4,
                b: 12,
                is_two_design: true,
                is_symmetric: false,
            }
        );
    }

    #[test]
    fn affine_plane_order_four_uses_field_lines() {
        // Order 4 is the first case where F_q-lines differ from Z_p-lines;
        // the construction must still produce a valid affine plane.
        let family = ag_family(2, 4).unwrap();
        assert!(family.is_valid());
        assert_eq!(family.group().order(), 16);
        assert_eq!(family.ell(), 5);
        assert_eq!(family.k(), Some(4));
        let design = two_design_check(&family).unwrap();
        assert!(design.is_two_design);
        assert_eq!(design.lambda, Some(1));
        assert_eq!(design.b, 20);
    }

    #[test]
    fn projective_plane_of_order_two_matches_fano() {
        let family = pg_family(3, 2).unwrap();
        assert!(family.is_valid());
        assert_eq!(family.group().order(), 7);
        assert_eq!(
            family.cells(),
            &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]
        );
        let design = two_design_check(&family).unwrap();
        assert!(design.is_symmetric);
        assert_eq!((design.v, design.k, design.lambda), (7, 3, Some(1)));
    }

    #[test]
    fn projective_space_rank_four() {
        // PG(3, 2): 15 points, 35 lines, 7 lines through each point.
        let family = pg_family(4, 2).unwrap();
        assert!(family.is_valid());
        assert_eq!(family.group().order(), 15);
        assert_eq!(family.ell(), 7);
        assert_eq!(family.k(), Some(3));
        let design = two_design_check(&family).unwrap();
        assert_eq!(
            (design.v, design.k, design.lambda, design.r, design.b),
            (15, 3, Some(1), 7, 35)
        );
    }

    #[test]
    fn two_cell_subgroup_case() {
        let g = FiniteGroup::direct_product(&z(3), &z(3)).unwrap();
        let family =
            cells::validate_family(&g, &[vec![0, 1, 2], vec![0, 3, 6]]).unwrap();
        assert!(family.is_valid());
        let report = classify_two_cell(&family).unwrap();
        assert_eq!(report.shape, TwoCellShape::BothSubgroups);
        assert_eq!(
            report.abelian_kind,
            Some(AbelianTwoCellKind::SubdividedCompleteBipartite { m: 3 })
        );
        assert_eq!(report.abelian_kind_verified, Some(true));
    }

    #[test]
    fn two_cell_cycle_case() {
        let g = z(5);
        let family = cells::validate_family(&g, &[vec![0, 1], vec![0, 4]]).unwrap();
        assert!(family.is_valid());
        let report = classify_two_cell(&family).unwrap();
        assert_eq!(
            report.shape,
            TwoCellShape::CosetPair {
                s1: vec![0],
                s2: vec![0],
                x: 1,
            }
        );
        assert_eq!(report.abelian_kind, Some(AbelianTwoCellKind::Cycle { length: 10 }));
        assert_eq!(report.abelian_kind_verified, Some(true));
    }

    /// Lexicographic index of a one-line permutation (Lehmer code).
    fn perm_index(p: &[usize]) -> usize {
        let n = p.len();
        let mut idx = 0;
        for i in 0..n {
            let smaller = p[(i + 1)..].iter().filter(|&&x| x < p[i]).count();
            idx += smaller * (1..(n - i)).product::<usize>().max(1);
        }
        idx
    }

    #[test]
    fn two_cell_coset_pair_in_s4() {
        let g = FiniteGroup::symmetric(4).unwrap();
        // Seed cell {id, t} ∪ {id, t}·x with t = (0 1) and the 3-cycle
        // x = 0 -> 2 -> 3 -> 0; the partner cell is x^{-1} times it.
        let t = perm_index(&[1, 0, 2, 3]);
        let x = perm_index(&[2, 1, 3, 0]);
        assert_eq!(g.element_order(x), 3);
        let mut c1 = vec![0, t, x, g.mul(t, x)];
        c1.sort_unstable();
        let mut c2: Vec<usize> = c1.iter().map(|&c| g.mul(g.inv(x), c)).collect();
        c2.sort_unstable();
        let family = cells::validate_family(&g, &[c1.clone(), c2.clone()]).unwrap();
        assert!(family.is_valid(), "{:?}", family.violation());
        // The family is stored in lexicographic cell order; the classifier
        // decomposes from whichever cell comes first.
        let first = family.cells()[0].clone();
        let stab = cells::stabilizer_formula(&g, &first);
        let report = classify_two_cell(&family).unwrap();
        match report.shape {
            TwoCellShape::CosetPair { s1, s2, x: picked } => {
                assert_eq!(s1, stab);
                assert_eq!(s1.len(), 2);
                assert_eq!(
                    g.element_order(picked),
                    3,
                    "tie-break must prefer the order-3 element over the 4-cycle"
                );
                assert!(first.contains(&picked));
                let expected_s2: Vec<usize> = {
                    let mut v: Vec<usize> =
                        s1.iter().map(|&u| g.conj(u, picked)).collect();
                    v.sort_unstable();
                    v
                };
                assert_eq!(s2, expected_s2);
                // The other cell must be exactly S2 ∪ S2 * picked^{-1}.
                let mut rebuilt: Vec<usize> = s2
                    .iter()
                    .copied()
                    .chain(s2.iter().map(|&u| g.mul(u, g.inv(picked))))
                    .collect();
                rebuilt.sort_unstable();
                assert_eq!(rebuilt, family.cells()[1]);
            }
            other => panic!("expected a coset pair, got {other:?}"),
        }
        assert_eq!(report.abelian_kind, None);
    }

    #[test]
    fn dihedral_reflection_conversion() {
        let g = FiniteGroup::dihedral(7).unwrap();
        // Reflections b, ab, a^3 b at indices 7, 8, 10.
        let conv = bipartite_cayley_to_bcay(&g, &[7, 8, 10]).unwrap();
        assert_eq!(conv.kernel.order(), 7);
        assert!(conv.is_valid);
        assert_eq!(conv.girth, Some(6));
        assert_eq!(conv.certificate_match, Some(true));
        assert_eq!(
            conv.family.cells(),
            &[vec![0, 1, 5], vec![0, 2, 3], vec![0, 4, 6]]
        );
    }

    #[test]
    fn short_girth_blocks_conversion() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let conv = bipartite_cayley_to_bcay(&g, &[4, 5, 7]).unwrap();
        assert_eq!(conv.girth, Some(4));
        assert!(!conv.is_valid);
        assert_eq!(conv.certificate_match, None);
    }

    #[test]
    fn non_bipartite_cayley_is_rejected() {
        let g = z(5);
        assert!(bipartite_cayley_to_bcay(&g, &[1, 4]).is_err());
    }

    #[test]
    fn bicay_fano() {
        let g = z(7);
        let conv = bicay_to_bcay(&g, &[1, 2, 4]).unwrap();
        assert!(conv.is_valid);
        assert!(conv.blocks_distinct);
        assert_eq!(conv.certificate_match, Some(true));
        assert_eq!(
            conv.family.cells(),
            &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]
        );
    }

    #[test]
    fn bicay_with_identity_in_connection_set() {
        let g = z(5);
        let conv = bicay_to_bcay(&g, &[0, 1]).unwrap();
        assert!(conv.is_valid);
        assert!(conv.blocks_distinct);
        assert_eq!(conv.certificate_match, Some(true));
        assert_eq!(conv.family.cells(), &[vec![0, 1], vec![0, 4]]);
        // The two-copy graph is a 10-cycle.
        assert_eq!(conv.bicay_graph.girth(), Some(10));
    }
}
