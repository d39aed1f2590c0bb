//! Frozen reference data: the classification of all non-trivial incidence
//! graphs of groups of order 7 through 16, and helpers for comparing a fresh
//! enumeration against it.
//!
//! "Non-trivial" means at least two cells, every cell of size at least
//! three, and a connected incidence graph; graphs are counted up to graph
//! isomorphism.
//!
//! The data comes in two layers:
//!
//! * the listings as published ([`CLASS_COUNTS`] and the three profile
//!   tables), transcribed verbatim apart from one label fix: the source
//!   prints two nonabelian rows under the abelian label `Z8xZ2`; the
//!   abelian group has exactly one class, `(3,3)`, and the `(2,4)`/`(3,4)`
//!   rows belong to the nonabelian modular group `Z8:Z2` and are stored
//!   under that name (see [`REATTRIBUTED_PAIR`]; the per-group totals,
//!   1 and 2, are printed unambiguously);
//! * a short list of corrections ([`OMITTED_ROWS`], [`SPURIOUS_ROWS`])
//!   established here by two independent generators — the class-based
//!   enumerator and a naive packing search — and backed by structural
//!   proofs and explicit witness families.  Four valid classes are missing
//!   from the published listings (one for `A4`, three for `Z8:Z2`), and
//!   the two rows printed for `(Z4xZ2):Z2` cannot be realized: in that
//!   group every element squares into the centre, so every order-4 and
//!   every Klein four-subgroup contains the unique central involution,
//!   and no two-cell or larger family survives the axioms.
//!
//! [`ReferenceMode`] selects the layer: `Published` compares against the
//! verbatim listings, `Corrected` (the default everywhere in this crate)
//! applies the corrections first.

use crate::enumeration::ClassificationRecord;

/// Expected number of isomorphism classes for one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub order: usize,
    pub group: &'static str,
    pub count: usize,
}

/// Expected invariants of one isomorphism class. `girth` is recorded only
/// where the reference data pins it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub group: &'static str,
    pub ell: usize,
    pub k: usize,
    pub cayley: bool,
    pub aut_order: u128,
    pub orbits: usize,
    pub girth: Option<usize>,
}

/// The two group names whose profile rows are subject to the label
/// correction described in the module docs: `(printed label, actual group)`.
pub const REATTRIBUTED_PAIR: (&str, &str) = ("Z8xZ2", "Z8:Z2");

/// Class counts for every group of order 7 through 16.
pub const CLASS_COUNTS: &[CountRow] = &[
    CountRow { order: 7, group: "Z7", count: 1 },
    CountRow { order: 8, group: "Z8", count: 1 },
    CountRow { order: 8, group: "Z4xZ2", count: 0 },
    CountRow { order: 8, group: "Z2^3", count: 0 },
    CountRow { order: 8, group: "D4", count: 0 },
    CountRow { order: 8, group: "Q8", count: 1 },
    CountRow { order: 9, group: "Z9", count: 1 },
    CountRow { order: 9, group: "Z3^2", count: 3 },
    CountRow { order: 10, group: "Z10", count: 1 },
    CountRow { order: 10, group: "D5", count: 0 },
    CountRow { order: 11, group: "Z11", count: 1 },
    CountRow { order: 12, group: "Z12", count: 4 },
    CountRow { order: 12, group: "Z6xZ2", count: 2 },
    CountRow { order: 12, group: "D6", count: 0 },
    CountRow { order: 12, group: "Dic3", count: 3 },
    CountRow { order: 12, group: "A4", count: 3 },
    CountRow { order: 13, group: "Z13", count: 4 },
    CountRow { order: 14, group: "Z14", count: 3 },
    CountRow { order: 14, group: "D7", count: 0 },
    CountRow { order: 15, group: "Z15", count: 16 },
    CountRow { order: 16, group: "Z16", count: 8 },
    CountRow { order: 16, group: "Z4^2", count: 6 },
    CountRow { order: 16, group: "Z8xZ2", count: 1 },
    CountRow { order: 16, group: "Z4xZ2^2", count: 1 },
    CountRow { order: 16, group: "Z2^4", count: 4 },
    CountRow { order: 16, group: "D8", count: 0 },
    CountRow { order: 16, group: "Dic4", count: 5 },
    CountRow { order: 16, group: "Z4:Z4", count: 3 },
    CountRow { order: 16, group: "(Z2xZ2):Z4", count: 4 },
    CountRow { order: 16, group: "Z8:Z2", count: 2 },
    CountRow { order: 16, group: "QD8", count: 2 },
    CountRow { order: 16, group: "D4xZ2", count: 2 },
    CountRow { order: 16, group: "Q8xZ2", count: 2 },
    CountRow { order: 16, group: "(Z4xZ2):Z2", count: 2 },
];

macro_rules! profile {
    ($g:literal, $ell:literal, $k:literal, $cayley:literal, $aut:literal, $orbits:literal) => {
        ProfileRow {
            group: $g,
            ell: $ell,
            k: $k,
            cayley: $cayley,
            aut_order: $aut,
            orbits: $orbits,
            girth: None,
        }
    };
    ($g:literal, $ell:literal, $k:literal, $girth:literal, $cayley:literal, $aut:literal, $orbits:literal) => {
        ProfileRow {
            group: $g,
            ell: $ell,
            k: $k,
            cayley: $cayley,
            aut_order: $aut,
            orbits: $orbits,
            girth: Some($girth),
        }
    };
}

/// Per-class invariants for the cyclic groups of order 8 through 15.
pub const CYCLIC_PROFILES: &[ProfileRow] = &[
    profile!("Z8", 3, 3, true, 96, 1),
    profile!("Z9", 3, 3, true, 18, 1),
    profile!("Z10", 3, 3, true, 20, 1),
    profile!("Z11", 3, 3, true, 22, 1),
    profile!("Z12", 3, 3, true, 24, 1),
    profile!("Z12", 3, 3, true, 24, 1),
    profile!("Z12", 3, 3, true, 48, 1),
    profile!("Z12", 4, 3, false, 12, 3),
    profile!("Z13", 3, 3, true, 26, 1),
    profile!("Z13", 3, 3, true, 78, 1),
    profile!("Z13", 6, 3, false, 39, 3),
    profile!("Z13", 4, 4, true, 11232, 1),
    profile!("Z14", 3, 3, true, 28, 1),
    profile!("Z14", 3, 3, true, 28, 1),
    profile!("Z14", 4, 4, true, 672, 1),
    profile!("Z15", 3, 3, true, 30, 1),
    profile!("Z15", 3, 3, true, 30, 1),
    profile!("Z15", 3, 3, true, 60, 1),
    profile!("Z15", 3, 3, true, 60, 1),
    profile!("Z15", 4, 3, false, 15, 3),
    profile!("Z15", 4, 3, false, 30, 3),
    profile!("Z15", 6, 3, false, 15, 3),
    profile!("Z15", 6, 3, false, 15, 3),
    profile!("Z15", 6, 3, false, 15, 3),
    profile!("Z15", 6, 3, false, 360, 2),
    profile!("Z15", 6, 3, false, 60, 2),
    profile!("Z15", 4, 4, true, 30, 1),
    profile!("Z15", 4, 4, true, 60, 1),
    profile!("Z15", 4, 4, true, 720, 1),
    profile!("Z15", 7, 3, false, 60, 3),
    profile!("Z15", 7, 3, false, 20160, 2),
];

/// Per-class invariants for the non-cyclic abelian groups of order at
/// most 16.
pub const ABELIAN_PROFILES: &[ProfileRow] = &[
    profile!("Z3^2", 2, 3, false, 72, 2),
    profile!("Z3^2", 3, 3, true, 216, 1),
    profile!("Z3^2", 4, 3, false, 432, 2),
    profile!("Z6xZ2", 3, 3, true, 144, 1),
    profile!("Z6xZ2", 4, 3, false, 576, 2),
    profile!("Z4^2", 3, 3, true, 192, 1),
    profile!("Z4^2", 2, 4, false, 1152, 2),
    profile!("Z4^2", 3, 4, false, 192, 2),
    profile!("Z4^2", 6, 3, false, 96, 2),
    profile!("Z4^2", 4, 4, true, 2304, 1),
    profile!("Z4^2", 5, 4, false, 5760, 2),
    profile!("Z8xZ2", 3, 3, true, 64, 1),
    profile!("Z4xZ2^2", 2, 4, false, 1152, 2),
    profile!("Z2^4", 2, 4, false, 1152, 2),
    profile!("Z2^4", 3, 4, false, 576, 2),
    profile!("Z2^4", 4, 4, true, 2304, 1),
    profile!("Z2^4", 5, 4, false, 5760, 2),
];

/// Per-class invariants (including girth) for the nonabelian groups of
/// order at most 16, as published. The two `Z8:Z2` rows carry the label
/// correction described in the module docs; the two `(Z4xZ2):Z2` rows are
/// spurious (see [`SPURIOUS_ROWS`]) but kept here verbatim.
pub const NONABELIAN_PROFILES: &[ProfileRow] = &[
    profile!("Q8", 3, 3, 6, true, 96, 1),
    profile!("Dic3", 3, 3, 6, true, 48, 1),
    profile!("Dic3", 3, 3, 6, true, 144, 1),
    profile!("Dic3", 4, 3, 6, false, 576, 2),
    profile!("A4", 3, 3, 6, true, 144, 1),
    profile!("A4", 2, 4, 6, false, 48, 2),
    profile!("A4", 4, 3, 6, false, 576, 2),
    profile!("Dic4", 3, 3, 6, true, 64, 1),
    profile!("Dic4", 6, 3, 6, false, 32, 3),
    profile!("Dic4", 4, 4, 6, true, 2304, 1),
    profile!("Dic4", 4, 4, 6, true, 64, 1),
    profile!("Dic4", 5, 4, 6, false, 5760, 2),
    profile!("Z4:Z4", 3, 3, 6, true, 64, 1),
    profile!("Z4:Z4", 2, 4, 8, false, 1152, 2),
    profile!("Z4:Z4", 6, 3, 6, false, 96, 2),
    profile!("(Z2xZ2):Z4", 2, 4, 8, false, 1152, 2),
    profile!("(Z2xZ2):Z4", 3, 4, 6, false, 576, 2),
    profile!("(Z2xZ2):Z4", 4, 4, 6, true, 2304, 1),
    profile!("(Z2xZ2):Z4", 5, 4, 6, false, 5760, 2),
    profile!("Z8:Z2", 2, 4, 8, false, 1152, 2),
    profile!("Z8:Z2", 3, 4, 6, false, 192, 2),
    profile!("QD8", 2, 4, 8, false, 1152, 2),
    profile!("QD8", 3, 4, 6, false, 192, 2),
    profile!("D4xZ2", 2, 4, 8, false, 1152, 2),
    profile!("D4xZ2", 3, 4, 6, false, 192, 2),
    profile!("Q8xZ2", 4, 4, 6, true, 2304, 1),
    profile!("Q8xZ2", 5, 4, 6, false, 5760, 2),
    profile!("(Z4xZ2):Z2", 2, 4, 8, false, 1152, 2),
    profile!("(Z4xZ2):Z2", 3, 4, 6, false, 192, 2),
];

// ======================================================================
// Corrections to the published listings
// ======================================================================

/// Isomorphism classes missing from the published listings.  Each row was
/// produced by the class-based enumerator, reproduced by the independent
/// naive packing search, and is realized by the concrete witness family at
/// the same position of [`OMITTED_WITNESSES`].
pub const OMITTED_ROWS: &[ProfileRow] = &[
    profile!("A4", 2, 3, 8, false, 48, 2),
    profile!("Z8:Z2", 3, 3, 6, true, 192, 1),
    profile!("Z8:Z2", 4, 4, 6, true, 2304, 1),
    profile!("Z8:Z2", 5, 4, 6, false, 5760, 2),
];

/// Witness families realizing [`OMITTED_ROWS`], in the same order.  Cells
/// are lists of element indices of the named catalog group.
///
/// * `A4`: the two cyclic subgroups generated by the 3-cycles `(234)` and
///   `(123)`; they intersect trivially and together generate the group.
/// * `Z8:Z2` (presentation `a^8 = b^2 = e`, `b a b = a^5`; index `i` is
///   `a^i` for `i < 8` and `a^(i-8) b` otherwise): a `(3,3)` class of
///   translates of `{e, a, a^2 b}`; a `(4,4)` class of translates of
///   `{e, a, a^3, a^2 b}`; and that same class extended by the Klein cell
///   `{e, a^4, b, a^4 b}` to a `(5,4)` family.
pub const OMITTED_WITNESSES: &[&[&[usize]]] = &[
    &[&[0, 1, 2], &[0, 4, 6]],
    &[&[0, 1, 10], &[0, 7, 9], &[0, 11, 14]],
    &[&[0, 1, 3, 10], &[0, 2, 7, 9], &[0, 5, 6, 15], &[0, 11, 13, 14]],
    &[
        &[0, 1, 3, 10],
        &[0, 2, 7, 9],
        &[0, 4, 8, 12],
        &[0, 5, 6, 15],
        &[0, 11, 13, 14],
    ],
];

/// Published rows for which no valid family exists.  In `(Z4xZ2):Z2` every
/// element squares into `{e, c}` for the unique central involution `c`, so
/// every subgroup of order 4 contains `c` (ruling out two trivially
/// intersecting cell stabilizers) and for every involution `s` and every
/// order-4 element `x` the conjugate `s x s` is `x` or `x^(-1)` (ruling
/// out the twisted two-cell shape).  Exhaustive search over all cell
/// packings of the group confirms that no family of any shape is valid.
pub const SPURIOUS_ROWS: &[ProfileRow] = &[
    profile!("(Z4xZ2):Z2", 2, 4, 8, false, 1152, 2),
    profile!("(Z4xZ2):Z2", 3, 4, 6, false, 192, 2),
];

/// Which layer of the reference data a comparison runs against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReferenceMode {
    /// The listings exactly as published (label fix included).
    Published,
    /// The published listings with [`OMITTED_ROWS`] added and
    /// [`SPURIOUS_ROWS`] removed.
    #[default]
    Corrected,
}

/// Expected class count for a catalog group in the published listings, if
/// the group is covered.
pub fn expected_count(group_name: &str) -> Option<usize> {
    expected_count_in(ReferenceMode::Published, group_name)
}

/// Expected class count for a catalog group under `mode`.
pub fn expected_count_in(mode: ReferenceMode, group_name: &str) -> Option<usize> {
    let printed = CLASS_COUNTS
        .iter()
        .find(|r| r.group == group_name)
        .map(|r| r.count)?;
    Some(match mode {
        ReferenceMode::Published => printed,
        ReferenceMode::Corrected => {
            let added = OMITTED_ROWS.iter().filter(|r| r.group == group_name).count();
            let removed = SPURIOUS_ROWS.iter().filter(|r| r.group == group_name).count();
            printed + added - removed
        }
    })
}

/// All published profile rows for one group, across the three profile
/// tables. Empty for covered groups with zero classes and for `Z7`/`Z16`,
/// whose per-class invariants are not pinned.
pub fn expected_profiles(group_name: &str) -> Vec<&'static ProfileRow> {
    CYCLIC_PROFILES
        .iter()
        .chain(ABELIAN_PROFILES.iter())
        .chain(NONABELIAN_PROFILES.iter())
        .filter(|r| r.group == group_name)
        .collect()
}

/// Profile rows for one group under `mode`.
pub fn expected_profiles_in(mode: ReferenceMode, group_name: &str) -> Vec<&'static ProfileRow> {
    let mut rows = expected_profiles(group_name);
    if mode == ReferenceMode::Corrected {
        for spurious in SPURIOUS_ROWS.iter().filter(|r| r.group == group_name) {
            if let Some(pos) = rows.iter().position(|r| **r == *spurious) {
                rows.remove(pos);
            }
        }
        rows.extend(OMITTED_ROWS.iter().filter(|r| r.group == group_name));
    }
    rows
}

/// True when the group's per-class invariants are pinned by a profile table
/// (zero-count groups excluded: an empty enumeration is checked through the
/// count, not through profiles).
pub fn has_profiles(group_name: &str) -> bool {
    !expected_profiles(group_name).is_empty()
}

/// Comparable invariant tuple: `(ell, k, cayley, aut_order, orbits, girth)`.
pub type Profile = (usize, usize, bool, u128, usize, Option<usize>);

fn row_profile(row: &ProfileRow) -> Profile {
    (row.ell, row.k, row.cayley, row.aut_order, row.orbits, row.girth)
}

fn record_profile(rec: &ClassificationRecord, keep_girth: bool) -> Profile {
    (
        rec.ell,
        rec.k,
        rec.is_cayley,
        rec.aut_order,
        rec.orbit_count,
        if keep_girth { rec.girth } else { None },
    )
}

/// Outcome of checking one group's enumeration against the frozen data.
#[derive(Clone, Debug)]
pub struct GroupComparison {
    pub group: String,
    pub mode: ReferenceMode,
    pub expected_count: Option<usize>,
    pub found_count: usize,
    /// `None` when the group is not in the count table.
    pub count_ok: Option<bool>,
    pub expected_profiles: Vec<Profile>,
    pub found_profiles: Vec<Profile>,
    /// `None` when no profile rows are pinned for the group.
    pub profiles_ok: Option<bool>,
}

impl GroupComparison {
    /// True when nothing that is pinned disagrees.
    pub fn ok(&self) -> bool {
        self.count_ok != Some(false) && self.profiles_ok != Some(false)
    }
}

/// Compares enumeration records for `group_name` against the corrected
/// reference data. Girth participates in the comparison only on rows where
/// the frozen data pins it.
pub fn compare_records(group_name: &str, records: &[ClassificationRecord]) -> GroupComparison {
    compare_records_in(ReferenceMode::Corrected, group_name, records)
}

/// Compares enumeration records for `group_name` against the counts and
/// profiles of the chosen reference layer.
pub fn compare_records_in(
    mode: ReferenceMode,
    group_name: &str,
    records: &[ClassificationRecord],
) -> GroupComparison {
    let expected_count = expected_count_in(mode, group_name);
    let found_count = records.len();
    let count_ok = expected_count.map(|c| c == found_count);

    let expected_rows = expected_profiles_in(mode, group_name);
    let profiles_pinned = !expected_rows.is_empty()
        || (has_profiles(group_name) && expected_count == Some(0));
    let (expected_profiles_v, found_profiles_v, profiles_ok) = if !profiles_pinned {
        let found: Vec<Profile> = {
            let mut v: Vec<Profile> = records.iter().map(|r| record_profile(r, true)).collect();
            v.sort();
            v
        };
        (Vec::new(), found, None)
    } else {
        let keep_girth = expected_rows.iter().any(|r| r.girth.is_some());
        let mut expected: Vec<Profile> = expected_rows.iter().map(|r| row_profile(r)).collect();
        let mut found: Vec<Profile> = records
            .iter()
            .map(|r| record_profile(r, keep_girth))
            .collect();
        expected.sort();
        found.sort();
        let ok = expected == found;
        (expected, found, Some(ok))
    };

    GroupComparison {
        group: group_name.to_string(),
        mode,
        expected_count,
        found_count,
        count_ok,
        expected_profiles: expected_profiles_v,
        found_profiles: found_profiles_v,
        profiles_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;

    #[test]
    fn count_table_covers_the_whole_catalog() {
        let mut names = Vec::new();
        for order in 7..=16 {
            for g in group::catalog_order(order).unwrap() {
                names.push((order, g.name().to_string()));
            }
        }
        assert_eq!(names.len(), 34);
        assert_eq!(CLASS_COUNTS.len(), 34);
        for row in CLASS_COUNTS {
            assert!(
                names.iter().any(|(o, n)| *o == row.order && n == row.group),
                "count row for unknown group {}",
                row.group
            );
        }
    }

    #[test]
    fn profile_tables_sum_to_the_counts() {
        for row in CLASS_COUNTS {
            let profiles = expected_profiles(row.group);
            if profiles.is_empty() {
                // Groups without pinned profiles: the zero-count groups,
                // plus Z7 and Z16.
                assert!(
                    row.count == 0 || row.group == "Z7" || row.group == "Z16",
                    "{} has count {} but no profile rows",
                    row.group,
                    row.count
                );
            } else {
                assert_eq!(
                    profiles.len(),
                    row.count,
                    "{}: profile rows disagree with count",
                    row.group
                );
            }
        }
    }

    #[test]
    fn profile_group_names_resolve_in_the_catalog() {
        for row in CYCLIC_PROFILES
            .iter()
            .chain(ABELIAN_PROFILES.iter())
            .chain(NONABELIAN_PROFILES.iter())
        {
            let g = group::make_group(row.group).unwrap();
            assert_eq!(g.name(), row.group);
        }
    }

    #[test]
    fn reattributed_rows_live_under_the_modular_group() {
        let (printed, actual) = REATTRIBUTED_PAIR;
        assert_eq!(expected_profiles(printed).len(), 1);
        assert_eq!(expected_profiles(actual).len(), 2);
        assert_eq!(expected_count(printed), Some(1));
        assert_eq!(expected_count(actual), Some(2));
        // The abelian group keeps only its (3,3) class.
        let abelian = expected_profiles(printed);
        assert_eq!((abelian[0].ell, abelian[0].k), (3, 3));
    }

    #[test]
    fn corrected_layer_is_internally_consistent() {
        // Every spurious row must be present verbatim in the published
        // tables, and no omitted row may duplicate a published one.
        for spurious in SPURIOUS_ROWS {
            assert!(
                expected_profiles(spurious.group).iter().any(|r| **r == *spurious),
                "spurious row for {} not found in published tables",
                spurious.group
            );
        }
        for omitted in OMITTED_ROWS {
            assert!(
                !expected_profiles(omitted.group).iter().any(|r| **r == *omitted),
                "omitted row for {} already published",
                omitted.group
            );
        }
        // Counts and profile rows stay in step under both modes.
        for row in CLASS_COUNTS {
            for mode in [ReferenceMode::Published, ReferenceMode::Corrected] {
                let count = expected_count_in(mode, row.group).unwrap();
                let profiles = expected_profiles_in(mode, row.group);
                if !profiles.is_empty() || has_profiles(row.group) {
                    assert_eq!(
                        profiles.len(),
                        count,
                        "{}: {:?} profile rows disagree with count",
                        row.group,
                        mode
                    );
                }
            }
        }
        // Headline corrected counts.
        assert_eq!(expected_count_in(ReferenceMode::Corrected, "A4"), Some(4));
        assert_eq!(expected_count_in(ReferenceMode::Corrected, "Z8:Z2"), Some(5));
        assert_eq!(expected_count_in(ReferenceMode::Corrected, "(Z4xZ2):Z2"), Some(0));
    }

    #[test]
    fn omitted_rows_are_realized_by_their_witnesses() {
        use crate::{cells, enumeration};
        assert_eq!(OMITTED_ROWS.len(), OMITTED_WITNESSES.len());
        for (row, witness) in OMITTED_ROWS.iter().zip(OMITTED_WITNESSES) {
            let g = group::make_group(row.group).unwrap();
            let cells_list: Vec<Vec<usize>> = witness.iter().map(|c| c.to_vec()).collect();
            let fam = cells::validate_family(&g, &cells_list).unwrap();
            let rec = enumeration::classify(&fam).unwrap();
            assert!(rec.connected, "{} witness not connected", row.group);
            let found = (rec.ell, rec.k, rec.is_cayley, rec.aut_order, rec.orbit_count, rec.girth);
            let expected = (row.ell, row.k, row.cayley, row.aut_order, row.orbits, row.girth);
            assert_eq!(found, expected, "{} witness profile mismatch", row.group);
        }
    }

    #[test]
    fn spurious_group_squares_into_the_centre() {
        // The structural fact behind SPURIOUS_ROWS: in (Z4xZ2):Z2 the
        // squaring map lands in {e, c} for a unique central involution c.
        let g = group::make_group("(Z4xZ2):Z2").unwrap();
        let n = g.order();
        let central_involutions: Vec<usize> = (1..n)
            .filter(|&z| g.element_order(z) == 2 && (0..n).all(|x| g.mul(z, x) == g.mul(x, z)))
            .collect();
        assert_eq!(central_involutions.len(), 1);
        let c = central_involutions[0];
        for x in 0..n {
            let sq = g.mul(x, x);
            assert!(sq == 0 || sq == c, "element {x} squares outside {{e, c}}");
        }
    }

    #[test]
    fn girth_is_pinned_exactly_on_nonabelian_rows() {
        assert!(CYCLIC_PROFILES.iter().all(|r| r.girth.is_none()));
        assert!(ABELIAN_PROFILES.iter().all(|r| r.girth.is_none()));
        assert!(NONABELIAN_PROFILES.iter().all(|r| r.girth.is_some()));
    }
}
