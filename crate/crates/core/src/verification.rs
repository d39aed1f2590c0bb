//! Independent brute-force oracles and a named self-check suite.
//!
//! Everything here deliberately avoids the optimized code paths it is meant
//! to check: isomorphism and automorphism counting use plain backtracking
//! over vertex maps (no partition refinement), and the family generator
//! walks raw subset collections (no translate-class structure). The suite
//! compares both sides on desk-scale inputs.

use std::fmt::Write as _;

use crate::cayleyness;
use crate::cells::{self, Validity};
use crate::enumeration::{self, EnumerateOptions};
use crate::graph::{self, SimpleGraph};
use crate::group::{self, FiniteGroup};
use crate::spectrum;
use crate::{canon, Error, Result};

/// Largest graph the backtracking isomorphism oracles accept.
pub const BRUTE_GRAPH_LIMIT: usize = 40;
/// Largest group order the naive family generator accepts.  The search
/// walks every packing of identity cells with pairwise disjoint supports,
/// so the cost grows steeply with order; 16 stays within a few seconds
/// per group in release builds.
pub const NAIVE_ORDER_LIMIT: usize = 16;

// ======================================================================
// Deterministic pseudo-random numbers for sampling in tests
// ======================================================================

/// Small deterministic linear congruential generator.
#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    /// Uniform value in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            xs.swap(i, self.below(i + 1));
        }
    }
}

// ======================================================================
// Backtracking isomorphism and automorphism oracles
// ======================================================================

fn degree_sequences_match(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db
}

struct BruteSearch<'a> {
    a: &'a SimpleGraph,
    b: &'a SimpleGraph,
    map: Vec<usize>,
    used: Vec<bool>,
    count: u128,
    witness: Option<Vec<usize>>,
    count_all: bool,
}

impl BruteSearch<'_> {
    fn extend(&mut self, u: usize) {
        let n = self.a.n();
        if u == n {
            self.count += 1;
            if self.witness.is_none() {
                self.witness = Some(self.map.clone());
            }
            return;
        }
        'candidates: for v in 0..n {
            if self.used[v] || self.a.degree(u) != self.b.degree(v) {
                continue;
            }
            for w in 0..u {
                if self.a.has_edge(u, w) != self.b.has_edge(v, self.map[w]) {
                    continue 'candidates;
                }
            }
            self.map[u] = v;
            self.used[v] = true;
            self.extend(u + 1);
            self.used[v] = false;
            if !self.count_all && self.witness.is_some() {
                return;
            }
        }
    }
}

fn brute_search(a: &SimpleGraph, b: &SimpleGraph, count_all: bool) -> Result<(u128, Option<Vec<usize>>)> {
    if a.n() > BRUTE_GRAPH_LIMIT || b.n() > BRUTE_GRAPH_LIMIT {
        return Err(Error::GraphTooLarge(a.n().max(b.n())));
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() || !degree_sequences_match(a, b) {
        return Ok((0, None));
    }
    let mut s = BruteSearch {
        a,
        b,
        map: vec![0; a.n()],
        used: vec![false; a.n()],
        count: 0,
        witness: None,
        count_all,
    };
    s.extend(0);
    Ok((s.count, s.witness))
}

/// Finds one isomorphism from `a` to `b` by backtracking, or `None`.
pub fn brute_isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    let (_, witness) = brute_search(a, b, false)?;
    if let Some(w) = &witness {
        debug_assert!(a.is_isomorphism_to(b, w));
    }
    Ok(witness)
}

/// Counts all automorphisms of `graph` by backtracking.
pub fn brute_automorphism_count(graph: &SimpleGraph) -> Result<u128> {
    let (count, _) = brute_search(graph, graph, true)?;
    Ok(count)
}

/// Counts automorphisms by filtering every permutation of the vertex set.
/// Only for the tiniest graphs (`n <= 8`); exists as a cross-check on the
/// backtracking oracle itself.
pub fn exhaustive_automorphism_count(graph: &SimpleGraph) -> Result<u128> {
    let n = graph.n();
    if n > 8 {
        return Err(Error::GraphTooLarge(n));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u128;
    // Heap's algorithm, iterative.
    let mut c = vec![0usize; n];
    if graph.is_automorphism(&perm) {
        count += 1;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if graph.is_automorphism(&perm) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

// ======================================================================
// Naive family generation
// ======================================================================

fn identity_cells(n: usize, k: usize) -> Vec<Vec<usize>> {
    // All sorted k-subsets of 0..n containing 0, in lexicographic order.
    let mut out = Vec::new();
    let picks = k - 1;
    if picks == 0 || picks > n - 1 {
        return out;
    }
    let mut idx: Vec<usize> = (1..=picks).collect();
    loop {
        let mut cell = vec![0usize];
        cell.extend_from_slice(&idx);
        out.push(cell);
        let mut i = picks;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != n - picks + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..picks {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn family_is_t_closed(group: &FiniteGroup, family: &[Vec<usize>]) -> bool {
    for c in family {
        for &s in c {
            if s == 0 {
                continue;
            }
            let mut t = group.translate_set(group.inv(s), c, group::Side::Left);
            t.sort_unstable();
            if family.binary_search(&t).is_err() {
                return false;
            }
        }
    }
    true
}

/// Generates every valid connected family (at least two cells, cell size at
/// least three) by raw subset search: build all collections of identity
/// cells with pairwise identity-only intersections, then keep the
/// translate-closed connected ones. Independent of the class-based
/// generator; output is sorted.
pub fn naive_families(g: &FiniteGroup) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = g.order();
    if n > NAIVE_ORDER_LIMIT {
        return Err(Error::BadArgument(format!(
            "naive family generation is capped at order {NAIVE_ORDER_LIMIT}, got {n}"
        )));
    }
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for k in 3..=(n + 1) / 2 {
        let cells_list = identity_cells(n, k);
        let masks: Vec<u64> = cells_list
            .iter()
            .map(|c| c.iter().filter(|&&x| x != 0).fold(0u64, |m, &x| m | (1 << x)))
            .collect();
        // Depth-first search over collections with disjoint non-identity
        // supports (equivalent to pairwise identity-only intersections).
        fn dfs(
            g: &FiniteGroup,
            cells_list: &[Vec<usize>],
            masks: &[u64],
            start: usize,
            chosen: &mut Vec<usize>,
            support: u64,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if chosen.len() >= 2 {
                let family: Vec<Vec<usize>> =
                    chosen.iter().map(|&i| cells_list[i].clone()).collect();
                if family_is_t_closed(g, &family) {
                    let s: Vec<usize> = (1..g.order())
                        .filter(|&x| support & (1u64 << x) != 0)
                        .collect();
                    if g.generated_subgroup(&s).len() == g.order() {
                        out.push(family);
                    }
                }
            }
            for i in start..cells_list.len() {
                if masks[i] & support != 0 {
                    continue;
                }
                chosen.push(i);
                dfs(g, cells_list, masks, i + 1, chosen, support | masks[i], out);
                chosen.pop();
            }
        }
        let mut chosen = Vec::new();
        dfs(g, &cells_list, &masks, 0, &mut chosen, 0, &mut out);
    }
    out.sort();
    Ok(out)
}

// ======================================================================
// Named check suite
// ======================================================================

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Counts of what was examined, or the first failure.
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail,
        }
    }
}

fn all_catalog_families(
    max_order: usize,
) -> Result<Vec<(FiniteGroup, Vec<Vec<Vec<usize>>>)>> {
    let mut out = Vec::new();
    for order in 7..=max_order.min(16) {
        for g in group::catalog_order(order)? {
            let fams = enumeration::generate_families(&g, &EnumerateOptions::default())?;
            out.push((g, fams));
        }
    }
    Ok(out)
}

fn check_biadjacency_identity(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "biadjacency-identity";
    let mut checked = 0usize;
    for (g, fams) in data {
        for cells_list in fams {
            let fam = cells::validate_family(g, cells_list)?;
            if !graph::biadjacency_identity_check(&fam)? {
                return Ok(CheckResult::fail(
                    NAME,
                    format!("N*N^T != A + ell*I on {} {:?}", g.name(), cells_list),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} families")))
}

fn check_spectrum_routes(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "spectrum-two-routes";
    const TOL: f64 = 1e-6;
    let mut checked = 0usize;
    for (g, fams) in data {
        // Sample at most 12 families per group to keep the dense
        // eigensolver work bounded.
        let step = (fams.len() / 12).max(1);
        for cells_list in fams.iter().step_by(step) {
            let fam = cells::validate_family(g, cells_list)?;
            let x = graph::build_bcay(&fam)?;
            let direct = spectrum::spectrum_direct(x.graph())?;
            let formula = spectrum::spectrum_via_underlying(&fam)?;
            if !direct.matches(&formula, TOL) {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "spectra disagree on {} {:?}: [{}] vs [{}]",
                        g.name(),
                        cells_list,
                        direct,
                        formula
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} families")))
}

fn check_girth_law(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "girth-at-least-six";
    let mut checked = 0usize;
    for (g, fams) in data {
        for cells_list in fams {
            let fam = cells::validate_family(g, cells_list)?;
            let x = graph::build_bcay(&fam)?;
            match x.graph().girth() {
                Some(girth) if girth >= 6 => checked += 1,
                other => {
                    return Ok(CheckResult::fail(
                        NAME,
                        format!("girth {:?} on {} {:?}", other, g.name(), cells_list),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} families")))
}

fn check_stabilizers_and_class_sizes(
    data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)],
) -> Result<CheckResult> {
    const NAME: &str = "stabilizer-formula-and-class-size";
    let mut checked = 0usize;
    for (g, fams) in data {
        for cells_list in fams {
            for cell in cells_list {
                let brute = cells::stabilizer_bruteforce(g, cell);
                let formula = cells::stabilizer_formula(g, cell);
                if brute != formula {
                    return Ok(CheckResult::fail(
                        NAME,
                        format!("stabilizers disagree on {} {:?}", g.name(), cell),
                    ));
                }
                let class = cells::translate_class(g, cell);
                if class.members.len() * brute.len() != cell.len() {
                    return Ok(CheckResult::fail(
                        NAME,
                        format!(
                            "|class| * |stab| = {} * {} != k = {} on {} {:?}",
                            class.members.len(),
                            brute.len(),
                            cell.len(),
                            g.name(),
                            cell
                        ),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} cells")))
}

fn check_dual_involution(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "dual-involution";
    let mut checked = 0usize;
    for (g, fams) in data {
        for cells_list in fams {
            let fam = cells::validate_family(g, cells_list)?;
            if !cells::is_beta_regular(&fam)? {
                continue;
            }
            let dual = cells::dual_family(&fam)?;
            dual.require(Validity::BcayValid)?;
            // The incidence graphs of a family and its dual are isomorphic.
            let cx = canon::certificate(graph::build_bcay(&fam)?.graph())?;
            let cy = canon::certificate(graph::build_bcay(&dual)?.graph())?;
            if cx != cy {
                return Ok(CheckResult::fail(
                    NAME,
                    format!("dual changes the graph on {} {:?}", g.name(), cells_list),
                ));
            }
            // Taking the dual again, based at the inverse of the original
            // base cell, returns to the original family.
            let base_inv = g.inverse_set(&fam.cells()[0]);
            let back_index = dual
                .cells()
                .iter()
                .position(|c| *c == base_inv)
                .ok_or_else(|| Error::BadArgument("dual lost the base inverse".into()))?;
            let back = cells::dual_family_from(&dual, back_index)?;
            if back.cells() != fam.cells() {
                return Ok(CheckResult::fail(
                    NAME,
                    format!("double dual differs on {} {:?}", g.name(), cells_list),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} regular families")))
}

fn check_naive_enumerator(max_order: usize) -> Result<CheckResult> {
    const NAME: &str = "naive-enumerator-agrees";
    let mut checked_groups = 0usize;
    let mut checked_families = 0usize;
    for order in 7..=max_order.min(10) {
        for g in group::catalog_order(order)? {
            let naive = naive_families(&g)?;
            let mut fast = enumeration::generate_families(&g, &EnumerateOptions::default())?;
            fast.sort();
            if naive != fast {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "{}: naive found {} families, class-based found {}",
                        g.name(),
                        naive.len(),
                        fast.len()
                    ),
                ));
            }
            checked_groups += 1;
            checked_families += naive.len();
        }
    }
    Ok(CheckResult::pass(
        NAME,
        format!("{checked_groups} groups, {checked_families} families"),
    ))
}

fn check_brute_automorphisms(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "automorphism-count-vs-backtracking";
    let mut checked = 0usize;
    for (g, fams) in data {
        for cells_list in fams {
            let fam = cells::validate_family(g, cells_list)?;
            let x = graph::build_bcay(&fam)?;
            if x.graph().n() > BRUTE_GRAPH_LIMIT.min(30) {
                continue;
            }
            let fast = canon::canonical_form(x.graph())?.aut_order;
            let brute = brute_automorphism_count(x.graph())?;
            if fast != brute {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "aut orders disagree on {} {:?}: canonical {} vs brute {}",
                        g.name(),
                        cells_list,
                        fast,
                        brute
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} graphs")))
}

fn check_certificates_vs_brute_isomorphism(
    data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)],
) -> Result<CheckResult> {
    const NAME: &str = "certificate-vs-backtracking-isomorphism";
    // Gather a pool of small incidence graphs across groups, then compare
    // certificate equality with the backtracking oracle on all pairs.
    let mut pool: Vec<(String, SimpleGraph, Vec<u8>)> = Vec::new();
    for (g, fams) in data {
        for cells_list in fams.iter().take(3) {
            let fam = cells::validate_family(g, cells_list)?;
            let x = graph::build_bcay(&fam)?;
            if x.graph().n() > 26 {
                continue;
            }
            let cert = canon::certificate(x.graph())?;
            pool.push((g.name().to_string(), x.graph().clone(), cert));
            if pool.len() >= 14 {
                break;
            }
        }
        if pool.len() >= 14 {
            break;
        }
    }
    let mut pairs = 0usize;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let same_cert = pool[i].2 == pool[j].2;
            let brute = brute_isomorphism(&pool[i].1, &pool[j].1)?.is_some();
            if same_cert != brute {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "certificate equality ({same_cert}) and backtracking ({brute}) disagree on {} vs {}",
                        pool[i].0, pool[j].0
                    ),
                ));
            }
            pairs += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{pairs} pairs")))
}

fn check_normalizer_formula(data: &[(FiniteGroup, Vec<Vec<Vec<usize>>>)]) -> Result<CheckResult> {
    const NAME: &str = "normalizer-formula";
    let mut checked = 0usize;
    for (g, fams) in data {
        if g.order() > cayleyness::NORMALIZER_MAX_ORDER {
            continue;
        }
        for cells_list in fams {
            let fam = cells::validate_family(g, cells_list)?;
            let report = cayleyness::normalizer_orders(&fam)?;
            if report.side_preserving_normalizer_order != report.predicted_side_preserving {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "|N_AH(G)| = {} but |G|*|Aut(G,pi)| = {} on {} {:?}",
                        report.side_preserving_normalizer_order,
                        report.predicted_side_preserving,
                        g.name(),
                        cells_list
                    ),
                ));
            }
            if report.normalizer_swap_index != 1 && report.normalizer_swap_index != 2 {
                return Ok(CheckResult::fail(
                    NAME,
                    format!(
                        "swap index {} on {} {:?}",
                        report.normalizer_swap_index,
                        g.name(),
                        cells_list
                    ),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckResult::pass(NAME, format!("{checked} families")))
}

/// Runs every named check over the catalog groups of order `7..=max_order`
/// and returns one result per check.
pub fn run_suite(max_order: usize) -> Result<Vec<CheckResult>> {
    let data = all_catalog_families(max_order)?;
    Ok(vec![
        check_biadjacency_identity(&data)?,
        check_spectrum_routes(&data)?,
        check_girth_law(&data)?,
        check_stabilizers_and_class_sizes(&data)?,
        check_dual_involution(&data)?,
        check_naive_enumerator(max_order)?,
        check_brute_automorphisms(&data)?,
        check_certificates_vs_brute_isomorphism(&data)?,
        check_normalizer_formula(&data)?,
    ])
}

/// The four suites that pit optimized or closed-form computations against
/// independent brute-force oracles: stabilizers (all groups up to
/// `max_order`), canonical certificates vs backtracking isomorphism (small
/// graph pairs from the enumeration), the normalizer order formula (groups
/// of order at most [`cayleyness::NORMALIZER_MAX_ORDER`]), and the naive
/// packing enumerator vs the class-based generator (orders up to 10).
pub fn run_oracle_suite(max_order: usize) -> Result<Vec<CheckResult>> {
    let data = all_catalog_families(max_order)?;
    Ok(vec![
        check_stabilizers_and_class_sizes(&data)?,
        check_certificates_vs_brute_isomorphism(&data)?,
        check_normalizer_formula(&data)?,
        check_naive_enumerator(max_order)?,
    ])
}

/// Plain-text rendering of suite results, one line per check.
pub fn suite_to_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(
            out,
            "{} {} ({})",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    out
}
