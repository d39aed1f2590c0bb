//! Input and output formats: family JSON, Graphviz DOT, CSV summaries, and
//! plain-text rendering of classification records.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cells::{self, CellFamily};
use crate::enumeration::ClassificationRecord;
use crate::graph::BipartiteIncidenceGraph;
use crate::group;
use crate::{Error, Result};

// ======================================================================
// Family JSON
// ======================================================================

/// On-disk shape of a family: a group descriptor and the cells.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub group: String,
    pub cells: Vec<Vec<usize>>,
}

/// Parses `{"group": "...", "cells": [[...], ...]}` and stages the family.
/// Malformed JSON or an unusable document is reported as [`Error::FamilyJson`];
/// an unknown descriptor or out-of-range cell propagates its own error.
pub fn family_from_json(text: &str) -> Result<CellFamily> {
    let doc: FamilyDocument =
        serde_json::from_str(text).map_err(|e| Error::FamilyJson(e.to_string()))?;
    let g = group::make_group(&doc.group)?;
    cells::validate_family(&g, &doc.cells)
}

/// Renders a family as pretty-printed JSON with a reparseable descriptor.
pub fn family_to_json(family: &CellFamily) -> String {
    let doc = FamilyDocument {
        group: family.group().name().to_string(),
        cells: family.cells().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("family document serializes")
}

/// Reads a family from a JSON file.
pub fn load_family(path: &Path) -> Result<CellFamily> {
    let text = std::fs::read_to_string(path)?;
    family_from_json(&text)
}

/// Writes a family to a JSON file.
pub fn save_family(path: &Path, family: &CellFamily) -> Result<()> {
    std::fs::write(path, family_to_json(family) + "\n")?;
    Ok(())
}

// ======================================================================
// DOT export
// ======================================================================

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering of a bipartite incidence graph: element vertices as
/// ellipses on one rank, block vertices as boxes on the other.
pub fn incidence_to_dot(x: &BipartiteIncidenceGraph, name: &str) -> String {
    let g = x.graph();
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", dot_escape(name));
    let _ = writeln!(out, "  layout=dot; rankdir=TB;");
    let _ = write!(out, "  {{ rank=source;");
    for v in 0..x.n_gamma() {
        let _ = write!(out, " g{v};");
    }
    let _ = writeln!(out, " }}");
    let _ = write!(out, "  {{ rank=sink;");
    for b in 0..x.n_beta() {
        let _ = write!(out, " b{b};");
    }
    let _ = writeln!(out, " }}");
    for v in 0..x.n_gamma() {
        let _ = writeln!(
            out,
            "  g{v} [shape=ellipse, label=\"{}\"];",
            dot_escape(g.label(v))
        );
    }
    for b in 0..x.n_beta() {
        let _ = writeln!(
            out,
            "  b{b} [shape=box, label=\"{}\"];",
            dot_escape(g.label(x.beta_vertex(b)))
        );
    }
    for (u, w) in g.edges() {
        // Every edge joins an element vertex to a block vertex.
        let (e, b) = if u < x.n_gamma() { (u, w) } else { (w, u) };
        let _ = writeln!(out, "  g{e} -- b{};", b - x.n_gamma());
    }
    out.push_str("}\n");
    out
}

// ======================================================================
// CSV and text summaries
// ======================================================================

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub const RECORD_CSV_HEADER: &str =
    "group,order,ell,k,girth,beta_transitive,beta_regular,cayley,aut_order,orbits,spectrum,cells";

/// One CSV line per classification record, in the given order.
pub fn records_to_csv(records: &[ClassificationRecord]) -> String {
    let mut out = String::from(RECORD_CSV_HEADER);
    out.push('\n');
    for r in records {
        let girth = r
            .girth
            .map(|g| g.to_string())
            .unwrap_or_else(|| "inf".into());
        let cells = format_cells(&r.cells);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            csv_quote(&r.group_name),
            r.group_order,
            r.ell,
            r.k,
            girth,
            r.beta_transitive,
            r.beta_regular,
            if r.is_cayley { "yes" } else { "no" },
            r.aut_order,
            r.orbit_count,
            csv_quote(&r.spectrum),
            csv_quote(&cells),
        );
    }
    out
}

/// Compact `{0,1,3} {0,2,6} ...` rendering of a cell list.
pub fn format_cells(cells: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push('{');
        for (j, x) in c.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{x}");
        }
        out.push('}');
    }
    out
}

/// Renders a table bundle in the reference layout: a count table followed
/// by per-class listings for cyclic, non-cyclic abelian, and nonabelian
/// groups. Nonabelian rows carry the girth column.
pub fn tables_to_text(bundle: &crate::enumeration::TableBundle) -> Result<String> {
    use crate::enumeration::{group_category, GroupCategory};
    let mut out = String::new();
    let _ = writeln!(
        out,
        "== Non-trivial incidence graphs per group (orders 7..={}) ==",
        bundle.max_order
    );
    let _ = writeln!(out, "{:<6} {:<12} {}", "order", "group", "classes");
    for r in &bundle.reports {
        let flag = if r.complete { "" } else { "  (incomplete: budget hit)" };
        let _ = writeln!(
            out,
            "{:<6} {:<12} {}{}",
            r.group_order,
            r.group_name,
            r.class_count(),
            flag
        );
    }
    let sections: [(&str, GroupCategory, bool); 3] = [
        ("Cyclic groups", GroupCategory::Cyclic, false),
        ("Abelian non-cyclic groups", GroupCategory::Abelian, false),
        ("Nonabelian groups", GroupCategory::Nonabelian, true),
    ];
    for (title, category, with_girth) in sections {
        let _ = writeln!(out, "\n== {title} ==");
        if with_girth {
            let _ = writeln!(
                out,
                "{:<12} {:<4} {:<4} {:<6} {:<7} {:<10} {}",
                "group", "ell", "k", "girth", "cayley", "aut_order", "orbits"
            );
        } else {
            let _ = writeln!(
                out,
                "{:<12} {:<4} {:<4} {:<7} {:<10} {}",
                "group", "ell", "k", "cayley", "aut_order", "orbits"
            );
        }
        for r in &bundle.reports {
            let g = group::make_group(&r.group_name)?;
            if group_category(&g) != category {
                continue;
            }
            for rec in &r.records {
                let cayley = if rec.is_cayley { "yes" } else { "no" };
                if with_girth {
                    let girth = rec
                        .girth
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "inf".into());
                    let _ = writeln!(
                        out,
                        "{:<12} {:<4} {:<4} {:<6} {:<7} {:<10} {}",
                        r.group_name, rec.ell, rec.k, girth, cayley, rec.aut_order, rec.orbit_count
                    );
                } else {
                    let _ = writeln!(
                        out,
                        "{:<12} {:<4} {:<4} {:<7} {:<10} {}",
                        r.group_name, rec.ell, rec.k, cayley, rec.aut_order, rec.orbit_count
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Multi-line human-readable rendering of one record.
pub fn record_to_text(r: &ClassificationRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group:             {} (order {})", r.group_name, r.group_order);
    let _ = writeln!(out, "cells:             {}", format_cells(&r.cells));
    let _ = writeln!(out, "(ell, k):          ({}, {})", r.ell, r.k);
    let _ = writeln!(out, "vertices:          {} + {}", r.n_gamma, r.n_beta);
    let _ = writeln!(out, "connected:         {}", r.connected);
    let _ = writeln!(
        out,
        "girth:             {}",
        r.girth.map(|g| g.to_string()).unwrap_or_else(|| "infinite".into())
    );
    let _ = writeln!(out, "translate classes: {}", r.translate_class_count);
    let _ = writeln!(out, "beta-transitive:   {}", r.beta_transitive);
    let _ = writeln!(out, "beta-regular:      {}", r.beta_regular);
    let _ = writeln!(out, "Cayley graph:      {}", if r.is_cayley { "yes" } else { "no" });
    let _ = writeln!(out, "  reason:          {}", r.cayley_reason);
    let _ = writeln!(out, "|Aut|:             {}", r.aut_order);
    let _ = writeln!(out, "vertex orbits:     {}", r.orbit_count);
    let _ = writeln!(out, "spectrum:          {}", r.spectrum);
    let _ = writeln!(out, "certificate:       {}", r.certificate_hex());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{self, EnumerateOptions};
    use crate::graph;

    fn fano() -> CellFamily {
        let g = group::make_group("Z7").unwrap();
        cells::validate_family(&g, &[vec![0, 1, 3], vec![0, 2, 6], vec![0, 4, 5]]).unwrap()
    }

    #[test]
    fn family_json_round_trip() {
        let fam = fano();
        let text = family_to_json(&fam);
        let back = family_from_json(&text).unwrap();
        assert_eq!(back.group().name(), "Z7");
        assert_eq!(back.cells(), fam.cells());
        assert!(back.is_valid());
    }

    #[test]
    fn family_json_accepts_unsorted_input() {
        let fam = family_from_json(r#"{"group":"Z7","cells":[[3,0,1],[6,2,0],[0,5,4]]}"#).unwrap();
        assert_eq!(fam.cells(), fano().cells());
    }

    #[test]
    fn malformed_json_is_reported_as_such() {
        let err = family_from_json("{\"group\": \"Z7\"").unwrap_err();
        assert!(matches!(err, Error::FamilyJson(_)));
        let err = family_from_json("{\"cells\": [[0]]}").unwrap_err();
        assert!(matches!(err, Error::FamilyJson(_)));
    }

    #[test]
    fn unknown_group_keeps_its_own_error() {
        let err = family_from_json(r#"{"group":"Banana","cells":[[0,1]]}"#).unwrap_err();
        assert!(matches!(err, Error::UnknownDescriptor(_)));
    }

    #[test]
    fn dot_output_mentions_every_vertex_and_edge() {
        let fam = fano();
        let x = graph::build_bcay(&fam).unwrap();
        let dot = incidence_to_dot(&x, "fano");
        assert!(dot.starts_with("graph \"fano\" {"));
        for v in 0..7 {
            assert!(dot.contains(&format!("g{v} [shape=ellipse")));
        }
        for b in 0..7 {
            assert!(dot.contains(&format!("b{b} [shape=box")));
        }
        assert_eq!(dot.matches(" -- ").count(), 21);
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn csv_has_one_line_per_record_and_quotes_commas() {
        let g = group::make_group("Z7").unwrap();
        let report = enumeration::enumerate_group(&g, &EnumerateOptions::default()).unwrap();
        let csv = records_to_csv(&report.records);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], RECORD_CSV_HEADER);
        assert_eq!(lines.len(), 1 + report.records.len());
        // The spectrum contains commas, so the field must be quoted.
        assert!(lines[1].contains("\"3^1, sqrt(2)^6, -sqrt(2)^6, -3^1\""));
    }

    #[test]
    fn record_text_mentions_the_headline_facts() {
        let g = group::make_group("Z7").unwrap();
        let report = enumeration::enumerate_group(&g, &EnumerateOptions::default()).unwrap();
        let text = record_to_text(&report.records[0]);
        assert!(text.contains("group:             Z7 (order 7)"));
        assert!(text.contains("Cayley graph:      yes"));
        assert!(text.contains("girth:             6"));
    }

    #[test]
    fn table_text_has_all_sections_and_rows() {
        let bundle = enumeration::reproduce_tables(9, &EnumerateOptions::default()).unwrap();
        let text = tables_to_text(&bundle).unwrap();
        assert!(text.contains("orders 7..=9"));
        assert!(text.contains("== Cyclic groups =="));
        assert!(text.contains("== Abelian non-cyclic groups =="));
        assert!(text.contains("== Nonabelian groups =="));
        // Count line for Z3^2 and one of its profile rows.
        assert!(text.lines().any(|l| l.starts_with("9      Z3^2") && l.ends_with('3')));
        assert!(text.lines().any(|l| l.starts_with("Z3^2") && l.contains("216")));
        // Q8's single class carries its girth in the nonabelian section.
        assert!(text.lines().any(|l| l.starts_with("Q8") && l.contains('6')));
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join("cayley-incidence-serialize-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("fano.json");
        let fam = fano();
        save_family(&path, &fam).unwrap();
        let back = load_family(&path).unwrap();
        assert_eq!(back.cells(), fam.cells());
        std::fs::remove_file(&path).ok();
    }
}
