//! Report document rendering: a flat JSON object with fixed keys (unknowns
//! as null plus a reason note), and a TSV mirror of the same keys for
//! spreadsheet diffing. Output is byte-deterministic for fixed inputs.

use serde::Serialize;

use hullcode::code::{CodeReport, DistanceInfo, GriesmerReport, ReportFlags};
use hullcode::constructions::Recipe;

#[derive(Serialize)]
pub struct ReportDoc<'a> {
    /// [q, n, k, d]; d is null when unknown.
    pub params: (u32, usize, usize, Option<usize>),
    pub distance_mode: &'static str,
    /// Reason when the distance is unknown.
    pub distance_note: Option<&'a str>,
    pub hull_e: usize,
    pub hull_h: Option<usize>,
    pub flags: &'a ReportFlags,
    pub griesmer: Option<&'a GriesmerReport>,
    pub recipe: Option<&'a Recipe>,
}

impl<'a> ReportDoc<'a> {
    pub fn new(report: &'a CodeReport, recipe: Option<&'a Recipe>) -> ReportDoc<'a> {
        let (mode, note) = match &report.distance {
            DistanceInfo::ExactEnumerated(_) => ("exact-enumerated", None),
            DistanceInfo::DesignValue(_) => ("design-value", None),
            DistanceInfo::Unknown(reason) => ("unknown", Some(reason.as_str())),
        };
        ReportDoc {
            params: (report.q, report.n, report.k, report.distance.known()),
            distance_mode: mode,
            distance_note: note,
            hull_e: report.hull_e,
            hull_h: report.hull_h,
            flags: &report.flags,
            griesmer: report.griesmer.as_ref(),
            recipe,
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "null".to_string(), |x| x.to_string())
}

pub fn render_report(doc: &ReportDoc, tsv: bool) -> String {
    if !tsv {
        return serde_json::to_string_pretty(doc).expect("report serialization");
    }
    let header = [
        "q",
        "n",
        "k",
        "d",
        "distance_mode",
        "hull_e",
        "hull_h",
        "lcd_e",
        "so_e",
        "sd_e",
        "almost_so_e",
        "almost_sd_e",
        "lcd_h",
        "so_h",
        "sd_h",
        "fsd_e",
        "fsd_h",
        "even_like",
        "odd_like",
        "griesmer_bound",
        "griesmer_meets",
    ]
    .join("\t");
    let f = doc.flags;
    let row = [
        doc.params.0.to_string(),
        doc.params.1.to_string(),
        doc.params.2.to_string(),
        opt(doc.params.3),
        doc.distance_mode.to_string(),
        doc.hull_e.to_string(),
        opt(doc.hull_h),
        f.lcd_e.to_string(),
        f.so_e.to_string(),
        f.sd_e.to_string(),
        f.almost_so_e.to_string(),
        f.almost_sd_e.to_string(),
        opt(f.lcd_h),
        opt(f.so_h),
        opt(f.sd_h),
        opt(f.fsd_e),
        opt(f.fsd_h),
        opt(f.even_like),
        opt(f.odd_like),
        opt(doc.griesmer.map(|g| g.bound)),
        opt(doc.griesmer.and_then(|g| g.meets)),
    ]
    .join("\t");
    format!("{}\n{}", header, row)
}
