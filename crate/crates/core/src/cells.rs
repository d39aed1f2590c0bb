//! Cell collections and their validity stages.
//!
//! A *cell family* is a set of subsets ("cells") of a finite group, each
//! containing the identity. Families are staged by how much structure they
//! carry:
//!
//! * `Generic` — distinct identity-containing cells, nothing more;
//! * `TAxiom` — closed under the translate axiom: `s ∈ C` implies `s⁻¹C`
//!   is also a cell of the family;
//! * `BcayValid` — additionally all cells share one size `k` and pairwise
//!   intersect exactly in the identity.
//!
//! Only `BcayValid` families define biregular incidence graphs; the earlier
//! stages are kept so a failing input can report exactly which axiom broke
//! and where.

use crate::group::{FiniteGroup, GroupMap, Side};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

// ======================================================================
// Validity staging
// ======================================================================

/// Highest structural stage a family reaches (ordered).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Validity {
    Generic,
    TAxiom,
    BcayValid,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validity::Generic => write!(f, "generic"),
            Validity::TAxiom => write!(f, "t_axiom"),
            Validity::BcayValid => write!(f, "bcay_valid"),
        }
    }
}

/// First axiom violation found while staging a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `s ∈ cell` but `s⁻¹·cell` is not a member of the family.
    MissingTranslate {
        cell: Vec<usize>,
        shift: usize,
        translate: Vec<usize>,
    },
    /// Cell sizes are not all equal.
    NonUniformSizes { sizes: Vec<usize> },
    /// Two cells share a non-identity element.
    FatIntersection {
        cell_a: Vec<usize>,
        cell_b: Vec<usize>,
        shared: Vec<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingTranslate { cell, shift, translate } => write!(
                f,
                "translate {}^-1*{} = {} is not a cell of the family",
                shift,
                fmt_set(cell),
                fmt_set(translate)
            ),
            Violation::NonUniformSizes { sizes } => {
                write!(f, "cell sizes are not uniform: {sizes:?}")
            }
            Violation::FatIntersection { cell_a, cell_b, shared } => write!(
                f,
                "cells {} and {} share {} beyond the identity",
                fmt_set(cell_a),
                fmt_set(cell_b),
                fmt_set(shared)
            ),
        }
    }
}

pub(crate) fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

// ======================================================================
// CellFamily
// ======================================================================

/// A validated, canonically ordered cell family over an owned group.
///
/// Canonical form: every cell sorted ascending, the cell list sorted
/// lexicographically, duplicates removed. All equality tests and golden
/// files rely on this form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFamily {
    group: FiniteGroup,
    cells: Vec<Vec<usize>>,
    validity: Validity,
    violation: Option<Violation>,
    uniform_k: Option<usize>,
}

impl CellFamily {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Number of cells ℓ.
    pub fn ell(&self) -> usize {
        self.cells.len()
    }

    /// Common cell size when uniform.
    pub fn k(&self) -> Option<usize> {
        self.uniform_k
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }

    pub fn is_valid(&self) -> bool {
        self.validity == Validity::BcayValid
    }

    /// Errors with the recorded witness unless the family reaches `required`.
    pub fn require(&self, required: Validity) -> Result<()> {
        if self.validity >= required {
            return Ok(());
        }
        Err(Error::FamilyNotValid {
            required,
            found: self.validity,
            witness: self
                .violation
                .as_ref()
                .map_or_else(|| "unknown".to_string(), |v| v.to_string()),
        })
    }
}

impl fmt::Display for CellFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.cells.iter().map(|c| fmt_set(c)).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// Sorts and deduplicates raw cells; errors on structural problems
/// (empty family, out-of-range element, cell missing the identity).
fn normalize_cells(group: &FiniteGroup, cells: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if cells.is_empty() {
        return Err(Error::BadArgument("family has no cells".into()));
    }
    let n = group.order();
    let mut norm: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
    for cell in cells {
        if let Some(&bad) = cell.iter().find(|&&x| x >= n) {
            return Err(Error::ElementOutOfRange(bad, n));
        }
        let mut c = cell.clone();
        c.sort_unstable();
        c.dedup();
        if c.first() != Some(&0) {
            return Err(Error::BadArgument(format!(
                "cell {} does not contain the identity",
                fmt_set(&c)
            )));
        }
        norm.push(c);
    }
    norm.sort();
    norm.dedup();
    Ok(norm)
}

/// Stages a family and returns it with the highest validity reached and,
/// if short of `BcayValid`, the first violation found.
pub fn validate_family(group: &FiniteGroup, cells: &[Vec<usize>]) -> Result<CellFamily> {
    let norm = normalize_cells(group, cells)?;
    let (validity, violation) = stage_cells(group, &norm);
    let uniform_k = norm
        .first()
        .map(|c| c.len())
        .filter(|&k| norm.iter().all(|c| c.len() == k));
    Ok(CellFamily {
        group: group.clone(),
        cells: norm,
        validity,
        violation,
        uniform_k,
    })
}

fn stage_cells(group: &FiniteGroup, cells: &[Vec<usize>]) -> (Validity, Option<Violation>) {
    // Translate axiom.
    for cell in cells {
        for &s in cell {
            let translate = group.translate_set(group.inv(s), cell, Side::Left);
            if cells.binary_search(&translate).is_err() {
                return (
                    Validity::Generic,
                    Some(Violation::MissingTranslate {
                        cell: cell.clone(),
                        shift: s,
                        translate,
                    }),
                );
            }
        }
    }
    // Uniform size.
    let k = cells[0].len();
    if cells.iter().any(|c| c.len() != k) {
        let sizes = cells.iter().map(|c| c.len()).collect();
        return (Validity::TAxiom, Some(Violation::NonUniformSizes { sizes }));
    }
    // Pairwise intersections exactly {identity}.
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            let shared = sorted_intersection_beyond_identity(a, b);
            if !shared.is_empty() {
                return (
                    Validity::TAxiom,
                    Some(Violation::FatIntersection {
                        cell_a: a.clone(),
                        cell_b: b.clone(),
                        shared,
                    }),
                );
            }
        }
    }
    (Validity::BcayValid, None)
}

/// Non-identity elements shared by two sorted sets.
pub(crate) fn sorted_intersection_beyond_identity(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i] != 0 {
                    out.push(a[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

// ======================================================================
// Connection set and connectivity
// ======================================================================

/// `S(π)`: the union of all cells minus the identity. Inverse-closed
/// whenever the family satisfies the translate axiom.
pub fn connection_set(family: &CellFamily) -> Vec<usize> {
    let mut s: Vec<usize> = family.cells.iter().flatten().copied().filter(|&x| x != 0).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// The incidence graph is connected exactly when the connection set
/// generates the whole group.
pub fn is_connected(family: &CellFamily) -> bool {
    let s = connection_set(family);
    family.group.generated_subgroup(&s).len() == family.group.order()
}

// ======================================================================
// Translate classes, stabilizers, orbit structure
// ======================================================================

/// The translate class `[C] = { s⁻¹C : s ∈ C }` of a representative cell.
/// Closed in a single pass: for `t ∈ s⁻¹C` one has `t⁻¹(s⁻¹C) = (st)⁻¹C`
/// with `st ∈ C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslateClass {
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

/// Computes the translate class of a sorted cell containing the identity.
pub fn translate_class(group: &FiniteGroup, cell: &[usize]) -> TranslateClass {
    let members = translate_class_raw(group, cell);
    TranslateClass {
        representative: cell.to_vec(),
        members,
    }
}

pub(crate) fn translate_class_raw(group: &FiniteGroup, cell: &[usize]) -> Vec<Vec<usize>> {
    let mut members: Vec<Vec<usize>> = cell
        .iter()
        .map(|&s| group.translate_set(group.inv(s), cell, Side::Left))
        .collect();
    members.sort();
    members.dedup();
    members
}

/// Orbit structure of the group acting on the coset side of the graph.
#[derive(Debug, Clone, Serialize)]
pub struct BetaReport {
    pub classes: Vec<TranslateClass>,
    pub beta_transitive: bool,
    /// Per-cell stabilizers, aligned with the family's cell order.
    pub stabilizers: Vec<Vec<usize>>,
    pub beta_regular: bool,
}

/// Partitions a valid family into translate classes and reports transitivity,
/// per-cell stabilizers (`C ∩ C⁻¹`), and regularity.
pub fn translate_classes(family: &CellFamily) -> Result<BetaReport> {
    family.require(Validity::BcayValid)?;
    let group = &family.group;
    let mut classes: Vec<TranslateClass> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for cell in &family.cells {
        if seen.binary_search(cell).is_ok() {
            continue;
        }
        let class = translate_class(group, cell);
        for m in &class.members {
            if let Err(pos) = seen.binary_search(m) {
                seen.insert(pos, m.clone());
            }
        }
        classes.push(class);
    }
    let stabilizers: Vec<Vec<usize>> = family
        .cells
        .iter()
        .map(|c| stabilizer_formula(group, c))
        .collect();
    let beta_transitive = classes.len() == 1;
    let beta_regular = beta_transitive && stabilizers.iter().all(|s| s == &[0]);
    Ok(BetaReport {
        classes,
        beta_transitive,
        stabilizers,
        beta_regular,
    })
}

/// All `x` with `xC = C`, by direct scan over the group (oracle route).
pub fn stabilizer_bruteforce(group: &FiniteGroup, cell: &[usize]) -> Vec<usize> {
    let mut sorted = cell.to_vec();
    sorted.sort_unstable();
    (0..group.order())
        .filter(|&x| group.translate_set(x, &sorted, Side::Left) == sorted)
        .collect()
}

/// Stabilizer via the closed form `C ∩ C⁻¹`, valid for cells of families
/// that reach `BcayValid`.
pub fn stabilizer_formula(group: &FiniteGroup, cell: &[usize]) -> Vec<usize> {
    let inv = group.inverse_set(cell);
    let mut out: Vec<usize> = cell.iter().copied().filter(|x| inv.binary_search(x).is_ok()).collect();
    out.sort_unstable();
    out
}

/// True when the family is a single translate class with trivial
/// stabilizers, i.e. the group acts regularly on the coset side.
pub fn is_beta_regular(family: &CellFamily) -> Result<bool> {
    Ok(translate_classes(family)?.beta_regular)
}

// ======================================================================
// Duals
// ======================================================================

/// Dual of a beta-regular family, built from its lexicographically least
/// cell: with base cell `C₁`, the dual cells are `g·C₁⁻¹` for `g ∈ C₁`.
pub fn dual_family(family: &CellFamily) -> Result<CellFamily> {
    dual_family_from(family, 0)
}

/// Dual built from the cell at `base_index` (family cell order).
///
/// The dual of the dual reproduces the original family when the second
/// application is based at the cell `C₁⁻¹` (always a member of the dual);
/// for abelian groups any base works.
pub fn dual_family_from(family: &CellFamily, base_index: usize) -> Result<CellFamily> {
    family.require(Validity::BcayValid)?;
    if !is_beta_regular(family)? {
        return Err(Error::BadArgument(
            "dual is defined for beta-regular families only".into(),
        ));
    }
    let group = &family.group;
    let base = family
        .cells
        .get(base_index)
        .ok_or_else(|| Error::BadArgument(format!("no cell at index {base_index}")))?;
    let base_inv = group.inverse_set(base);
    let cells: Vec<Vec<usize>> = base
        .iter()
        .map(|&g| group.translate_set(g, &base_inv, Side::Left))
        .collect();
    let dual = validate_family(group, &cells)?;
    dual.require(Validity::BcayValid)?;
    Ok(dual)
}

// ======================================================================
// Products and intersections
// ======================================================================

/// Combines two valid families of equal cell size into one on the direct
/// product group: cells of the first embed in the first coordinate, cells
/// of the second in the second coordinate.
pub fn product_family(f1: &CellFamily, f2: &CellFamily) -> Result<CellFamily> {
    f1.require(Validity::BcayValid)?;
    f2.require(Validity::BcayValid)?;
    let (k1, k2) = (f1.k().unwrap_or(0), f2.k().unwrap_or(0));
    if k1 != k2 {
        return Err(Error::BadArgument(format!(
            "product requires equal cell sizes, got {k1} and {k2}"
        )));
    }
    let product = FiniteGroup::direct_product(&f1.group, &f2.group)?;
    let n2 = f2.group.order();
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(f1.ell() + f2.ell());
    for c in &f1.cells {
        cells.push(c.iter().map(|&x| x * n2).collect());
    }
    for c in &f2.cells {
        cells.push(c.clone());
    }
    validate_family(&product, &cells)
}

/// All pairwise intersections of two translate-axiom families on the same
/// group, filtered to cells of size `r`. Returns `None` when no
/// intersection has that size. The result again satisfies the translate
/// axiom, and is fully valid when both inputs are.
pub fn intersect_families(
    f1: &CellFamily,
    f2: &CellFamily,
    r: usize,
) -> Result<Option<CellFamily>> {
    f1.require(Validity::TAxiom)?;
    f2.require(Validity::TAxiom)?;
    if f1.group.order() != f2.group.order() || !f1.group.same_table(&f2.group) {
        return Err(Error::BadArgument(
            "intersection requires families over the same group".into(),
        ));
    }
    if r == 0 {
        return Err(Error::BadArgument("intersection size must be positive".into()));
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for a in &f1.cells {
        for b in &f2.cells {
            let mut meet: Vec<usize> = vec![0];
            meet.extend(sorted_intersection_beyond_identity(a, b));
            if meet.len() == r {
                cells.push(meet);
            }
        }
    }
    if cells.is_empty() {
        return Ok(None);
    }
    Ok(Some(validate_family(&f1.group, &cells)?))
}

// ======================================================================
// Family automorphisms and side swaps
// ======================================================================

/// Group automorphisms that permute the cells of the family setwise.
pub fn family_automorphisms(family: &CellFamily) -> Vec<GroupMap> {
    let cells = &family.cells;
    family
        .group
        .group_automorphisms()
        .into_iter()
        .filter(|phi| {
            cells
                .iter()
                .all(|c| cells.binary_search(&phi.image_set(c)).is_ok())
        })
        .collect()
}

/// A group automorphism carrying the base cell onto a dual cell, which
/// induces a graph automorphism exchanging the two sides.
#[derive(Debug, Clone, Serialize)]
pub struct SwapReport {
    pub map: GroupMap,
    /// Index of the dual cell hit by the base cell, in dual-family order.
    pub dual_cell_index: usize,
    /// Order of the automorphism; order 2 upgrades the graph to a Cayley
    /// graph of the corresponding semidirect product.
    pub order: usize,
}

/// Searches the full automorphism group for a map sending the base cell
/// (lexicographically least) onto some cell of the dual family. Requires a
/// beta-regular family. Among the matches, an order-2 automorphism is
/// preferred; ties break by lexicographic image order.
pub fn swap_isomorphism(family: &CellFamily) -> Result<Option<SwapReport>> {
    let dual = dual_family(family)?;
    let base = &family.cells[0];
    let mut fallback: Option<SwapReport> = None;
    for phi in family.group.group_automorphisms() {
        let image = phi.image_set(base);
        if let Ok(idx) = dual.cells.binary_search(&image) {
            let order = phi.map_order();
            let report = SwapReport {
                map: phi,
                dual_cell_index: idx,
                order,
            };
            if order == 2 {
                return Ok(Some(report));
            }
            if fallback.is_none() {
                fallback = Some(report);
            }
        }
    }
    Ok(fallback)
}

// ======================================================================
// Power-cell families
// ======================================================================

/// Family of power cells `{e, s, s², …, s^{t−1}}` for each `s ∈ S`.
///
/// Cells collapse when an element's order is below `t`; with
/// `require_uniform` such elements are rejected instead. Validity is staged
/// as found — these families frequently stop at `Generic`.
pub fn t_cayley_family(
    group: &FiniteGroup,
    s: &[usize],
    t: usize,
    require_uniform: bool,
) -> Result<CellFamily> {
    if s.is_empty() {
        return Err(Error::BadArgument("power-cell family needs a non-empty set".into()));
    }
    if s.contains(&0) {
        return Err(Error::BadArgument(
            "power-cell family set must not contain the identity".into(),
        ));
    }
    let max_order = s.iter().map(|&x| group.element_order(x)).max().unwrap_or(1);
    if t < 2 || t > max_order {
        return Err(Error::BadArgument(format!(
            "power length must lie in 2..={max_order}, got {t}"
        )));
    }
    if require_uniform {
        if let Some(&small) = s.iter().find(|&&x| group.element_order(x) < t) {
            return Err(Error::BadArgument(format!(
                "element {small} has order {} below the requested length {t}",
                group.element_order(small)
            )));
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &x in s {
        let mut cell = Vec::with_capacity(t);
        let mut cur = 0usize;
        for _ in 0..t {
            cell.push(cur);
            cur = group.mul(cur, x);
        }
        cell.sort_unstable();
        cell.dedup();
        cells.push(cell);
    }
    validate_family(group, &cells)
}

/// If every non-identity group element lies in the same number λ of cells,
/// returns that λ.
pub fn constant_lambda(family: &CellFamily) -> Option<usize> {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for cell in &family.cells {
        for &x in cell.iter().filter(|&&x| x != 0) {
            *count.entry(x).or_insert(0) += 1;
        }
    }
    if count.len() != family.group.order() - 1 {
        // Some non-identity element is missing entirely; λ would be 0 for
        // it and nonzero elsewhere unless no element appears at all.
        return if count.is_empty() { Some(0) } else { None };
    }
    let lambda = *count.values().next().unwrap();
    count.values().all(|&v| v == lambda).then_some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn fano() -> CellFamily {
        let z7 = make_group("Z7").unwrap();
        validate_family(&z7, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap()
    }

    fn q8_family() -> CellFamily {
        // {1,i,-j}, {1,-i,k}, {1,j,-k} under the naming 0..7 = 1,i,-1,-i,j,k,-j,-k.
        let q8 = make_group("Q8").unwrap();
        validate_family(&q8, &[vec![0, 1, 6], vec![0, 3, 5], vec![0, 4, 7]]).unwrap()
    }

    #[test]
    fn staging_examples() {
        let f = fano();
        assert_eq!(f.validity(), Validity::BcayValid);
        assert_eq!((f.ell(), f.k()), (3, Some(3)));

        // Missing translate: 1^-1*{0,1,2} = {0,1,4} is absent.
        let z5 = make_group("Z5").unwrap();
        let f = validate_family(&z5, &[vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert_eq!(f.validity(), Validity::Generic);
        match f.violation().unwrap() {
            Violation::MissingTranslate { translate, .. } => {
                assert_eq!(translate, &vec![0, 1, 4]);
            }
            other => panic!("unexpected violation {other:?}"),
        }

        // Translate-closed but cells overlap beyond the identity.
        let z7 = make_group("Z7").unwrap();
        let f = validate_family(&z7, &[vec![0, 1, 2], vec![0, 1, 6], vec![0, 5, 6]]).unwrap();
        assert_eq!(f.validity(), Validity::TAxiom);
        match f.violation().unwrap() {
            Violation::FatIntersection { shared, .. } => assert_eq!(shared, &vec![1]),
            other => panic!("unexpected violation {other:?}"),
        }

        // Structural rejections.
        assert!(validate_family(&z7, &[]).is_err());
        assert!(validate_family(&z7, &[vec![1, 2]]).is_err());
        assert!(validate_family(&z7, &[vec![0, 9]]).is_err());
    }

    #[test]
    fn connection_and_connectivity() {
        let f = fano();
        assert_eq!(connection_set(&f), vec![1, 2, 3, 4, 5, 6]);
        assert!(is_connected(&f));

        let z12 = make_group("Z12").unwrap();
        let sub = validate_family(&z12, &[vec![0, 4, 8]]).unwrap();
        assert_eq!(sub.validity(), Validity::BcayValid);
        assert_eq!(connection_set(&sub), vec![4, 8]);
        assert!(!is_connected(&sub));
    }

    #[test]
    fn translate_classes_and_stabilizers() {
        let f = fano();
        let report = translate_classes(&f).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert!(report.beta_transitive);
        assert!(report.beta_regular);
        assert!(report.stabilizers.iter().all(|s| s == &vec![0]));

        let q8 = q8_family();
        let report = translate_classes(&q8).unwrap();
        assert!(report.beta_regular);

        // Two subgroup cells on Z3^2: two singleton classes, transitive fails.
        let z33 = make_group("Z3^2").unwrap();
        let f = validate_family(&z33, &[vec![0, 1, 2], vec![0, 3, 6]]).unwrap();
        assert_eq!(f.validity(), Validity::BcayValid);
        let report = translate_classes(&f).unwrap();
        assert_eq!(report.classes.len(), 2);
        assert!(!report.beta_transitive);
        assert!(!report.beta_regular);
        // Subgroup cells stabilize themselves.
        assert_eq!(report.stabilizers[0], vec![0, 1, 2]);
    }

    #[test]
    fn stabilizer_routes_agree() {
        let z7 = make_group("Z7").unwrap();
        assert_eq!(stabilizer_bruteforce(&z7, &[0, 1, 3]), vec![0]);
        let z12 = make_group("Z12").unwrap();
        // A subgroup is its own stabilizer.
        assert_eq!(stabilizer_bruteforce(&z12, &[0, 4, 8]), vec![0, 4, 8]);
        assert_eq!(stabilizer_formula(&z12, &[0, 4, 8]), vec![0, 4, 8]);
        // Formula agrees with the scan on cells of valid families.
        for f in [fano(), q8_family()] {
            for cell in f.cells() {
                assert_eq!(
                    stabilizer_bruteforce(f.group(), cell),
                    stabilizer_formula(f.group(), cell)
                );
            }
        }
    }

    #[test]
    fn dual_examples() {
        // Dual of the 7-point plane family: inverse of {0,1,3} translated
        // around — an equally valid family with the same connection set.
        let f = fano();
        let dual = dual_family(&f).unwrap();
        assert_eq!(
            dual.cells(),
            &[vec![0, 1, 5], vec![0, 2, 3], vec![0, 4, 6]]
        );
        assert_eq!(connection_set(&dual), connection_set(&f));
        // Abelian group: any base gives an involution.
        assert_eq!(dual_family(&dual).unwrap(), f);

        // Quaternion family: base cell {1,i,-j} has inverse {1,-i,j} and the
        // dual collects its left translates.
        let q8 = q8_family();
        let dual = dual_family(&q8).unwrap();
        assert_eq!(
            dual.cells(),
            &[vec![0, 1, 5], vec![0, 3, 4], vec![0, 6, 7]]
        );
        // Involution through the base cell's inverse.
        let base_inv = q8.group().inverse_set(&q8.cells()[0]);
        let idx = dual.cells().binary_search(&base_inv).unwrap();
        assert_eq!(dual_family_from(&dual, idx).unwrap(), q8);

        // Non-regular family is rejected.
        let z33 = make_group("Z3^2").unwrap();
        let two_subs = validate_family(&z33, &[vec![0, 1, 2], vec![0, 3, 6]]).unwrap();
        assert!(dual_family(&two_subs).is_err());
    }

    #[test]
    fn product_and_intersection() {
        let z3 = make_group("Z3").unwrap();
        let whole = validate_family(&z3, &[vec![0, 1, 2]]).unwrap();
        let prod = product_family(&whole, &whole).unwrap();
        assert_eq!(prod.group().order(), 9);
        assert_eq!(prod.cells(), &[vec![0, 1, 2], vec![0, 3, 6]]);
        assert!(prod.is_valid());

        // Mismatched cell sizes are rejected.
        let z2 = make_group("Z2").unwrap();
        let pair = validate_family(&z2, &[vec![0, 1]]).unwrap();
        assert!(product_family(&whole, &pair).is_err());

        // Intersections on Z15.
        let z15 = make_group("Z15").unwrap();
        let f1 = validate_family(
            &z15,
            &[vec![0, 1, 4, 6], vec![0, 2, 11, 12], vec![0, 3, 5, 14], vec![0, 9, 10, 13]],
        )
        .unwrap();
        let f2 = validate_family(
            &z15,
            &[vec![0, 1, 9, 13], vec![0, 2, 3, 11], vec![0, 4, 6, 7], vec![0, 8, 12, 14]],
        )
        .unwrap();
        assert!(f1.is_valid() && f2.is_valid());
        let meet = intersect_families(&f1, &f2, 3).unwrap().unwrap();
        assert_eq!(
            meet.cells(),
            &[vec![0, 2, 11], vec![0, 4, 6], vec![0, 9, 13]]
        );
        assert!(meet.is_valid());

        // Self-intersection at full size returns the family itself.
        let same = intersect_families(&f1, &f1, 4).unwrap().unwrap();
        assert_eq!(same.cells(), f1.cells());

        // No intersection of the requested size.
        assert!(intersect_families(&f1, &f2, 4).unwrap().is_none());
    }

    #[test]
    fn family_automorphism_examples() {
        let f = fano();
        let auts = family_automorphisms(&f);
        // Doubling permutes the cells: {0,1,3} -> {0,2,6} -> {0,4,5}.
        assert_eq!(auts.len(), 3);
        assert!(auts.iter().any(|m| m.images[1] == 2));
        assert!(auts.iter().any(|m| m.is_identity()));
    }

    #[test]
    fn swap_search() {
        // The quaternion family admits the order-2 swap i<->j, k -> -k.
        let q8 = q8_family();
        let swap = swap_isomorphism(&q8).unwrap().unwrap();
        assert_eq!(swap.order, 2);
        let dual = dual_family(&q8).unwrap();
        assert_eq!(
            swap.map.image_set(&q8.cells()[0]),
            dual.cells()[swap.dual_cell_index]
        );
        // The specific map from the worked example is among the valid swaps.
        let phi = GroupMap {
            domain_order: 8,
            codomain_order: 8,
            images: vec![0, 4, 2, 6, 1, 7, 3, 5],
            is_homomorphism: true,
        };
        assert_eq!(phi.map_order(), 2);
        assert!(dual.cells().binary_search(&phi.image_set(&q8.cells()[0])).is_ok());

        // Any abelian beta-regular family swaps via inversion.
        let f = fano();
        let swap = swap_isomorphism(&f).unwrap().unwrap();
        assert_eq!(swap.order, 2);
    }

    #[test]
    fn power_cell_families() {
        let z7 = make_group("Z7").unwrap();
        let f = t_cayley_family(&z7, &[1], 3, false).unwrap();
        assert_eq!(f.cells(), &[vec![0, 1, 2]]);
        assert_eq!(f.validity(), Validity::Generic);

        // Inverse-closed pair of length 2 is a valid subdivision family.
        let f = t_cayley_family(&z7, &[2, 5], 2, true).unwrap();
        assert_eq!(f.cells(), &[vec![0, 2], vec![0, 5]]);
        assert!(f.is_valid());

        // Powers collapsing to one subgroup cell.
        let z9 = make_group("Z9").unwrap();
        let f = t_cayley_family(&z9, &[3, 6], 3, true).unwrap();
        assert_eq!(f.cells(), &[vec![0, 3, 6]]);
        assert_eq!(f.ell(), 1);

        // Uniformity guard.
        let z12 = make_group("Z12").unwrap();
        assert!(t_cayley_family(&z12, &[6, 4], 3, true).is_err());
        assert!(t_cayley_family(&z12, &[6, 4], 3, false).is_ok());
        // Identity in the set, or deficient length, is rejected.
        assert!(t_cayley_family(&z7, &[0, 1], 3, false).is_err());
        assert!(t_cayley_family(&z7, &[1], 1, false).is_err());
    }

    #[test]
    fn lambda_detection() {
        assert_eq!(constant_lambda(&fano()), Some(1));
        let z7 = make_group("Z7").unwrap();
        let whole = validate_family(&z7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap();
        assert_eq!(constant_lambda(&whole), Some(1));
        let lopsided = validate_family(&z7, &[vec![0, 1, 2], vec![0, 1, 6], vec![0, 5, 6]]).unwrap();
        assert_eq!(constant_lambda(&lopsided), None);
    }
}
