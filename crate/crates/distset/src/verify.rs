//! Independent re-certification of table rows and of catalog entries.

use distset_core::atlas::{mydim_or_simplex, AtlasEntry};
use distset_core::dissolve::{verify_alg_point, verify_point, Orientation, ValidityReport};
use distset_core::exact::literal::{parse, render};
use distset_core::Error;

use crate::fixtures::FixtureRow;

#[derive(Clone, Debug)]
pub struct PointReport {
    pub a: String,
    pub b: String,
    pub report: ValidityReport,
    pub valid: bool,
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub table: u8,
    pub label: String,
    pub points: Vec<PointReport>,
    /// Orientation, flag and remark observations; they never fail a row.
    pub notes: Vec<String>,
}

impl RowReport {
    pub fn pass(&self) -> bool {
        !self.points.is_empty() && self.points.iter().all(|p| p.valid)
    }
}

/// Certify every point of a row in dimension `d`. With `check_mydim` the
/// remark's `mydim` value is recomputed and compared.
pub fn verify_row(row: &FixtureRow, d: usize, check_mydim: bool) -> Result<RowReport, Error> {
    let g = row.graph()?;
    let mode = row.mode()?;
    let mut notes = Vec::new();
    let mut points = Vec::new();
    for p in row.alg_points()? {
        let report = verify_alg_point(&g, &p, d, mode);
        let (a, b) = (render(&p.a_real()), render(&p.b_real()));
        if report.orientation == Some(Orientation::Complement) {
            notes.push(format!("({a}, {b}) is printed in the complement orientation"));
        }
        points.push(PointReport { valid: report.valid(d), a, b, report });
    }
    let any_j = points.iter().any(|p| p.report.jspherical == Some(true));
    if row.jspherical_remark && !any_j {
        notes.push("remark says J-spherical but no point has inner product 0 at the shorter distance".into());
    }
    if !row.jspherical_remark && any_j {
        notes.push("a point is J-spherical but the remark does not say so".into());
    }
    if let Some(claim) = &row.mydim {
        let bar = if claim.complement { "~" } else { "" };
        if claim.label != row.label {
            notes.push(format!("remark names {bar}{} on row {}; checked against this row's graph", claim.label, row.label));
        }
        if check_mydim {
            let h = if claim.complement { g.complement() } else { g };
            let m = mydim_or_simplex(&h)?;
            if m == claim.value {
                notes.push(format!("mydim({bar}{}) = {m} as stated", row.label));
            } else {
                notes.push(format!("mydim({bar}{}) = {m}, remark states {}", row.label, claim.value));
            }
        }
    }
    Ok(RowReport { table: row.table, label: row.label.clone(), points, notes })
}

/// Re-verify every solution of an entry from its printed literals:
/// admissible ones must be valid with the recorded rank and orientation,
/// rejected ones must solve the rank system and fail PSD.
pub fn recertify(e: &AtlasEntry, d: usize) -> Result<(), String> {
    let g = e.graph();
    for s in &e.solutions {
        let here = || format!("n={} {} {} ({}, {})", e.n, e.class_key, e.mode.as_str(), s.a, s.b);
        let a = parse(&s.a).map_err(|err| format!("{}: {err}", here()))?;
        let b = parse(&s.b).map_err(|err| format!("{}: {err}", here()))?;
        let r = verify_point(&g, &a, &b, d, e.mode);
        let ok = if s.psd {
            r.valid(d) && r.rank == s.rank && r.orientation == Some(s.orientation)
        } else {
            r.minors_vanish && !r.psd
        };
        if !ok {
            return Err(format!("{}: {r:?}", here()));
        }
    }
    Ok(())
}
