//! Exhaustive enumeration of the bipartite incidence graphs of a finite
//! group, up to graph isomorphism.
//!
//! The search exploits the structure of valid families instead of iterating
//! over raw subset collections:
//!
//! * every valid family is a disjoint union of translate classes, so the
//!   generator walks classes, not individual cells;
//! * a class can participate in a valid family only if its own members
//!   pairwise share nothing but the identity ("internally clean");
//! * two classes are compatible exactly when their non-identity supports are
//!   disjoint, which reduces family generation to enumerating cliques in a
//!   small compatibility graph with bitmask tests.
//!
//! Each surviving family (at least two cells, cell size at least three,
//! connected incidence graph) is classified and the results are deduplicated
//! by canonical certificate.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon;
use crate::cayleyness;
use crate::cells::{self, CellFamily, Validity};
use crate::graph;
use crate::group::FiniteGroup;
use crate::spectrum;
use crate::{Error, Result};

/// Controls for [`enumerate_group`].
#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Wall-clock budget for one group; `None` means unlimited.
    pub budget: Option<Duration>,
    /// Number of classification worker threads (minimum 1). The output is
    /// identical for every worker count.
    pub workers: usize,
    /// Upper bound on the cell size `k`; `None` uses the structural bound
    /// `(n + 1) / 2` implied by two disjoint cells.
    pub max_k: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            budget: None,
            workers: 1,
            max_k: None,
        }
    }
}

/// Everything the toolkit knows about one incidence graph: the defining
/// family, regularity data, symmetry data, and a canonical certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub group_name: String,
    pub group_order: usize,
    /// Number of cells.
    pub ell: usize,
    /// Common cell size.
    pub k: usize,
    /// Representative family (first one found in enumeration order).
    pub cells: Vec<Vec<usize>>,
    pub n_gamma: usize,
    pub n_beta: usize,
    pub connected: bool,
    pub girth: Option<usize>,
    pub translate_class_count: usize,
    pub beta_transitive: bool,
    pub beta_regular: bool,
    pub is_cayley: bool,
    pub cayley_reason: String,
    pub aut_order: u128,
    /// Number of vertex orbits of the full automorphism group.
    pub orbit_count: usize,
    /// Eigenvalues with multiplicities, formatted like `3^1, sqrt(2)^6, ...`.
    pub spectrum: String,
    /// Canonical certificate of the incidence graph.
    #[serde(skip)]
    pub certificate: Vec<u8>,
}

impl ClassificationRecord {
    /// Hex rendering of the canonical certificate.
    pub fn certificate_hex(&self) -> String {
        let mut s = String::with_capacity(self.certificate.len() * 2);
        for b in &self.certificate {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

/// Result of exhaustively enumerating one group.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub group_name: String,
    pub group_order: usize,
    /// Valid connected families generated, before isomorphism reduction.
    pub families_considered: usize,
    /// One record per isomorphism class of incidence graph.
    pub records: Vec<ClassificationRecord>,
    /// False when the time budget interrupted the run; the records then
    /// cover only the families classified before the cutoff and must not
    /// be treated as the full classification.
    pub complete: bool,
    pub elapsed_ms: u128,
}

impl EnumerationReport {
    /// Number of isomorphism classes found.
    pub fn class_count(&self) -> usize {
        self.records.len()
    }
}

// ======================================================================
// Family generation
// ======================================================================

fn mask_of(cell: &[usize]) -> u64 {
    let mut m = 0u64;
    for &x in cell {
        if x != 0 {
            m |= 1u64 << x;
        }
    }
    m
}

/// All sorted `k`-subsets of `1..n` joined with the identity, visited in
/// lexicographic order.
fn for_each_identity_cell(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let picks = k - 1;
    if picks > n - 1 {
        return;
    }
    // idx[i] ranges over 1..n, strictly increasing.
    let mut idx: Vec<usize> = (1..=picks).collect();
    let mut cell = vec![0usize; k];
    loop {
        cell[0] = 0;
        cell[1..].copy_from_slice(&idx);
        f(&cell);
        // Advance to the next combination.
        let mut i = picks;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != n - picks + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..picks {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct ClassCandidate {
    /// Sorted member cells, each sorted and containing the identity.
    members: Vec<Vec<usize>>,
    /// Union of the members' non-identity elements.
    support: u64,
}

/// Partitions the size-`k` identity cells into translate classes and keeps
/// the internally clean ones.
fn clean_classes(group: &FiniteGroup, k: usize) -> Vec<ClassCandidate> {
    let n = group.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for_each_identity_cell(n, k, |cell| {
        if seen.contains(cell) {
            return;
        }
        let mut members = cells::translate_class(group, cell).members;
        members.sort();
        members.dedup();
        for m in &members {
            seen.insert(m.clone());
        }
        // Internally clean: no non-identity element appears in two members.
        let mut support = 0u64;
        let mut clean = true;
        for m in &members {
            let mm = mask_of(m);
            if support & mm != 0 {
                clean = false;
                break;
            }
            support |= mm;
        }
        if clean {
            out.push(ClassCandidate { members, support });
        }
    });
    out
}

/// Enumerates every union of pairwise-disjoint classes, in deterministic
/// order, and hands each union with at least two cells to `f`.
fn for_each_class_union(
    classes: &[ClassCandidate],
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    fn recurse(
        classes: &[ClassCandidate],
        start: usize,
        chosen: &mut Vec<usize>,
        support: u64,
        cell_count: usize,
        f: &mut impl FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        for i in start..classes.len() {
            let c = &classes[i];
            if c.support & support != 0 {
                continue;
            }
            chosen.push(i);
            let count = cell_count + c.members.len();
            if count >= 2 {
                f(chosen)?;
            }
            recurse(classes, i + 1, chosen, support | c.support, count, f)?;
            chosen.pop();
        }
        Ok(())
    }
    let mut chosen = Vec::new();
    recurse(classes, 0, &mut chosen, 0, 0, &mut f)
}

// ======================================================================
// Classification
// ======================================================================

/// Decides whether the incidence graph is a Cayley graph, preferring
/// constructive certificates over the generic regular-subgroup search.
fn cayley_decision(
    family: &CellFamily,
    x: &graph::BipartiteIncidenceGraph,
    connected: bool,
    beta_regular: bool,
    outcome: &canon::CanonOutcome,
) -> Result<(bool, String)> {
    if connected && x.n_gamma() != x.n_beta() {
        // A connected bipartite graph with unequal sides cannot be
        // vertex-transitive: automorphisms preserve the side partition.
        return Ok((
            false,
            format!(
                "sides have sizes {} and {}, so the graph is not vertex-transitive",
                x.n_gamma(),
                x.n_beta()
            ),
        ));
    }
    if family.group().is_abelian() && beta_regular {
        if let Some(cert) = cayleyness::generalized_dihedral_certificate(family)? {
            if cert.matches {
                return Ok((
                    true,
                    format!(
                        "isomorphic to a Cayley graph of {}",
                        cert.doubled_group.name()
                    ),
                ));
            }
        }
    }
    let search = cayleyness::regular_subgroup_from(x.graph(), outcome)?;
    Ok((search.subgroup.is_some(), search.reason))
}

/// Computes the full classification record of one valid family.
pub fn classify(family: &CellFamily) -> Result<ClassificationRecord> {
    family.require(Validity::BcayValid)?;
    let group = family.group();
    let k = family
        .k()
        .ok_or_else(|| Error::BadArgument("family has no uniform cell size".into()))?;
    let x = graph::build_bcay(family)?;
    let connected = x.graph().is_connected();
    let beta = cells::translate_classes(family)?;
    let outcome = canon::canonical_form(x.graph())?;
    let girth = x.graph().girth();
    let spec = spectrum::spectrum_direct(x.graph())?;
    let (is_cayley, cayley_reason) =
        cayley_decision(family, &x, connected, beta.beta_regular, &outcome)?;
    Ok(ClassificationRecord {
        group_name: group.name().to_string(),
        group_order: group.order(),
        ell: family.ell(),
        k,
        cells: family.cells().to_vec(),
        n_gamma: x.n_gamma(),
        n_beta: x.n_beta(),
        connected,
        girth,
        translate_class_count: beta.classes.len(),
        beta_transitive: beta.beta_transitive,
        beta_regular: beta.beta_regular,
        is_cayley,
        cayley_reason,
        aut_order: outcome.aut_order,
        orbit_count: outcome.orbits.len(),
        spectrum: spec.to_string(),
        certificate: outcome.certificate,
    })
}

// ======================================================================
// Driver
// ======================================================================

fn check_budget(start: Instant, budget: Option<Duration>, done: usize, total: usize) -> Result<()> {
    if let Some(b) = budget {
        if start.elapsed() > b {
            return Err(Error::BudgetExhausted(done, total));
        }
    }
    Ok(())
}

/// Generates every valid connected family of the group with at least two
/// cells of size at least three, in deterministic order.
pub fn generate_families(group: &FiniteGroup, opts: &EnumerateOptions) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = group.order();
    if n > 64 {
        return Err(Error::OrderTooLarge(n));
    }
    let start = Instant::now();
    let structural_max = (n + 1) / 2;
    let max_k = opts.max_k.unwrap_or(structural_max).min(structural_max);
    let mut families: Vec<Vec<Vec<usize>>> = Vec::new();
    for k in 3..=max_k {
        check_budget(start, opts.budget, k - 3, max_k.saturating_sub(2))?;
        let classes = clean_classes(group, k);
        for_each_class_union(&classes, |chosen| {
            let mut cells: Vec<Vec<usize>> = Vec::new();
            let mut support = 0u64;
            for &i in chosen {
                cells.extend(classes[i].members.iter().cloned());
                support |= classes[i].support;
            }
            // Connectivity of the incidence graph is equivalent to the
            // union of the cells generating the whole group.
            let s: Vec<usize> = (1..n).filter(|&x| support & (1u64 << x) != 0).collect();
            if group.generated_subgroup(&s).len() != n {
                return Ok(());
            }
            cells.sort();
            families.push(cells);
            Ok(())
        })?;
    }
    Ok(families)
}

/// Exhaustively enumerates the isomorphism classes of connected incidence
/// graphs of `group` with at least two cells of size at least three.
///
/// When the time budget runs out the report is returned with
/// `complete == false` and whatever records were classified before the
/// cutoff; a truncated run with several workers may keep a different
/// prefix than a single-worker run, but complete runs are byte-identical
/// for every worker count.
pub fn enumerate_group(group: &FiniteGroup, opts: &EnumerateOptions) -> Result<EnumerationReport> {
    let start = Instant::now();
    let (families, mut complete) = match generate_families(group, opts) {
        Ok(f) => (f, true),
        Err(Error::BudgetExhausted(_, _)) => (Vec::new(), false),
        Err(e) => return Err(e),
    };
    let total = families.len();
    let workers = opts.workers.max(1);

    // Classify families, optionally in parallel. Records are merged in the
    // original enumeration order, so the worker count never changes output.
    let mut indexed: Vec<(usize, ClassificationRecord)> = Vec::with_capacity(total);
    if workers == 1 || total < 2 {
        for (i, cells) in families.iter().enumerate() {
            if i % 32 == 0 && check_budget(start, opts.budget, i, total).is_err() {
                complete = false;
                break;
            }
            let family = cells::validate_family(group, cells)?;
            indexed.push((i, classify(&family)?));
        }
    } else {
        type WorkerOut = Result<(Vec<(usize, ClassificationRecord)>, bool)>;
        let results: Vec<WorkerOut> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers {
                let families = &families;
                let budget = opts.budget;
                handles.push(scope.spawn(move || {
                    let mut mine = Vec::new();
                    for i in (w..total).step_by(workers) {
                        if mine.len() % 32 == 0 && check_budget(start, budget, i, total).is_err()
                        {
                            return Ok((mine, false));
                        }
                        let family = cells::validate_family(group, &families[i])?;
                        mine.push((i, classify(&family)?));
                    }
                    Ok((mine, true))
                }));
            }
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for r in results {
            let (mine, worker_complete) = r?;
            complete &= worker_complete;
            indexed.extend(mine);
        }
        indexed.sort_by_key(|(i, _)| *i);
    }

    // Deduplicate by canonical certificate, keeping the first representative.
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut records: Vec<ClassificationRecord> = Vec::new();
    for (_, rec) in indexed {
        if seen.insert(rec.certificate.clone()) {
            records.push(rec);
        }
    }
    records.sort_by(|a, b| {
        (a.k, a.ell, &a.certificate).cmp(&(b.k, b.ell, &b.certificate))
    });

    Ok(EnumerationReport {
        group_name: group.name().to_string(),
        group_order: group.order(),
        families_considered: total,
        records,
        complete,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ======================================================================
// Table reproduction
// ======================================================================

/// Full classification of the catalog of groups up to `max_order`, grouped
/// for rendering in the reference layout: a count table plus per-class
/// listings split into cyclic, non-cyclic abelian, and nonabelian groups.
#[derive(Clone, Debug, Serialize)]
pub struct TableBundle {
    pub max_order: usize,
    /// One report per catalog group, in catalog order.
    pub reports: Vec<EnumerationReport>,
    /// False when any per-group run hit the time budget.
    pub complete: bool,
}

/// Which of the three per-class listings a group belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupCategory {
    Cyclic,
    Abelian,
    Nonabelian,
}

/// Category of a group for table layout purposes.
pub fn group_category(g: &FiniteGroup) -> GroupCategory {
    if !g.is_abelian() {
        GroupCategory::Nonabelian
    } else if (0..g.order()).any(|x| g.element_order(x) == g.order()) {
        GroupCategory::Cyclic
    } else {
        GroupCategory::Abelian
    }
}

/// Enumerates every catalog group of order 7 through `max_order` (capped
/// at 16, the range the catalog covers exhaustively) and bundles the
/// reports for table rendering and reference comparison.
pub fn reproduce_tables(max_order: usize, opts: &EnumerateOptions) -> Result<TableBundle> {
    if !(7..=16).contains(&max_order) {
        return Err(Error::BadArgument(format!(
            "table reproduction covers orders 7 through 16, got max order {max_order}"
        )));
    }
    let mut reports = Vec::new();
    let mut complete = true;
    for order in 7..=max_order {
        for g in crate::group::catalog_order(order)? {
            let report = enumerate_group(&g, opts)?;
            complete &= report.complete;
            reports.push(report);
        }
    }
    Ok(TableBundle { max_order, reports, complete })
}

/// Multiset difference `a \ b` (both assumed sorted), respecting
/// multiplicities.
fn multiset_minus<T: Clone + PartialEq>(a: &[T], b: &[T]) -> Vec<T> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        if let Some(pos) = rest.iter().position(|y| y == x) {
            rest.remove(pos);
        } else {
            out.push(x.clone());
        }
    }
    out
}

impl TableBundle {
    /// Human-readable discrepancy lines from comparing every report against
    /// the chosen reference layer; empty when everything matches.
    pub fn diff(&self, mode: crate::golden::ReferenceMode) -> Vec<String> {
        let mut lines = Vec::new();
        for report in &self.reports {
            let cmp = crate::golden::compare_records_in(mode, &report.group_name, &report.records);
            if cmp.count_ok == Some(false) {
                lines.push(format!(
                    "{}: {} classes found, reference says {}",
                    report.group_name,
                    cmp.found_count,
                    cmp.expected_count.expect("count_ok implies a count"),
                ));
            }
            if cmp.profiles_ok == Some(false) {
                for p in multiset_minus(&cmp.expected_profiles, &cmp.found_profiles) {
                    lines.push(format!("{}: reference row {:?} not found", report.group_name, p));
                }
                for p in multiset_minus(&cmp.found_profiles, &cmp.expected_profiles) {
                    lines.push(format!(
                        "{}: computed row {:?} not in the reference",
                        report.group_name, p
                    ));
                }
            }
        }
        lines
    }
}

// ======================================================================
// Tests
// ======================================================================
