//! Tab-separated and JSON emission of catalog rows and level summaries.

use distset_core::atlas::{AtlasEntry, AtlasSummary};
use serde::Serialize;

pub const ROW_COLUMNS: [&str; 12] = [
    "n",
    "code",
    "mode",
    "a_star",
    "b_star",
    "psd",
    "rank",
    "orientation",
    "spherical_flag",
    "jspherical",
    "self_complementary",
    "set_count",
];

/// One solution of one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub code: String,
    pub mode: String,
    pub a_star: String,
    pub b_star: String,
    pub psd: bool,
    pub rank: usize,
    pub orientation: String,
    pub spherical_flag: Option<bool>,
    pub jspherical: Option<bool>,
    pub self_complementary: bool,
    pub set_count: usize,
}

/// Rows for every solution of every surviving entry, by decreasing `n`
/// and then code.
pub fn rows(entries: &[AtlasEntry]) -> Vec<TableRow> {
    let mut out: Vec<TableRow> = entries
        .iter()
        .filter(|e| e.survived)
        .flat_map(|e| {
            e.solutions.iter().map(move |s| TableRow {
                n: e.n,
                code: e.class_key.to_string(),
                mode: e.mode.as_str().to_string(),
                a_star: s.a.clone(),
                b_star: s.b.clone(),
                psd: s.psd,
                rank: s.rank,
                orientation: s.orientation.as_str().to_string(),
                spherical_flag: s.spherical,
                jspherical: s.jspherical,
                self_complementary: e.self_complementary,
                set_count: e.set_count,
            })
        })
        .collect();
    out.sort_by(|x, y| y.n.cmp(&x.n).then_with(|| x.code.cmp(&y.code)).then_with(|| x.mode.cmp(&y.mode)));
    out
}

fn flag(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

pub fn rows_tsv(rows: &[TableRow]) -> String {
    let mut s = ROW_COLUMNS.join("\t");
    s.push('\n');
    for r in rows {
        let fields = [
            r.n.to_string(),
            r.code.clone(),
            r.mode.clone(),
            r.a_star.clone(),
            r.b_star.clone(),
            r.psd.to_string(),
            r.rank.to_string(),
            r.orientation.clone(),
            flag(r.spherical_flag).to_string(),
            flag(r.jspherical).to_string(),
            r.self_complementary.to_string(),
            r.set_count.to_string(),
        ];
        s.push_str(&fields.join("\t"));
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub n: usize,
    pub general_candidates: usize,
    pub spherical_candidates: usize,
    pub surviving_general: usize,
    pub surviving_spherical: usize,
    pub spherical_sets: usize,
    pub nonspherical_sets: usize,
    pub low_rank_spherical_sets: usize,
    pub indefinite_spherical: usize,
}

pub fn summary_rows(s: &AtlasSummary) -> Vec<SummaryRow> {
    s.levels
        .iter()
        .map(|(&n, c)| SummaryRow {
            n,
            general_candidates: c.general_candidates,
            spherical_candidates: c.spherical_candidates,
            surviving_general: c.surviving_general,
            surviving_spherical: c.surviving_spherical,
            spherical_sets: c.spherical_sets,
            nonspherical_sets: c.nonspherical_sets,
            low_rank_spherical_sets: c.low_rank_spherical_sets,
            indefinite_spherical: c.indefinite_spherical,
        })
        .collect()
}

/// The summary laid out like the published grid: one column per order.
pub fn summary_tsv(s: &AtlasSummary) -> String {
    let rows = summary_rows(s);
    let mut out = String::from("n");
    for r in &rows {
        out.push_str(&format!("\t{}", r.n));
    }
    out.push('\n');
    let lines: [(&str, fn(&SummaryRow) -> usize); 8] = [
        ("general_candidates", |r| r.general_candidates),
        ("spherical_candidates", |r| r.spherical_candidates),
        ("surviving_general", |r| r.surviving_general),
        ("surviving_spherical", |r| r.surviving_spherical),
        ("spherical_sets", |r| r.spherical_sets),
        ("nonspherical_sets", |r| r.nonspherical_sets),
        ("low_rank_spherical_sets", |r| r.low_rank_spherical_sets),
        ("indefinite_spherical", |r| r.indefinite_spherical),
    ];
    for (name, get) in lines {
        out.push_str(name);
        for r in &rows {
            out.push_str(&format!("\t{}", get(r)));
        }
        out.push('\n');
    }
    out
}
