//! Bundled reproduction tables: expected parameter rows for the propagation
//! rules on the quaternary example pair, the binary (almost) self-dual and
//! self-orthogonal families, the self-orthogonal GRS tables, and the LCD
//! parameter improvements. Every entry is embedded as data keyed to its row
//! so a reproduction failure localizes precisely.

use crate::code::{classify, CodeReport, DistanceInfo, Flavor, LinearCode};
use crate::constructions::{
    classify_constructed, direct_sum, family_binary_almost_so_simplex, family_binary_sd,
    family_binary_so_rm, family_binary_so_tower, lcd_bound_combine_params, u_uv,
};
use crate::field::{Field, FieldRef};
use crate::grs::{
    extended_nested_subcode, grs_dual_euclidean, grs_dual_hermitian, grs_so_euclidean,
    grs_so_hermitian, grs_so_hermitian_extended,
};
use crate::matrix::Matrix;

/// Deterministic seed for the one search-based table slot.
const SUBCODE_SEARCH_SEED: u64 = 0x5eed_7ab1e;
const SUBCODE_SEARCH_BUDGET: u64 = 60_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    Table1,
    Table2,
    Table3,
    Table4,
    Table5,
    Table6,
    ExRm,
    ExSimplex,
}

impl TableId {
    pub fn parse(s: &str) -> Option<TableId> {
        match s {
            "1" | "table1" => Some(TableId::Table1),
            "2" | "table2" => Some(TableId::Table2),
            "3" | "table3" => Some(TableId::Table3),
            "4" | "table4" => Some(TableId::Table4),
            "5" | "table5" => Some(TableId::Table5),
            "6" | "table6" => Some(TableId::Table6),
            "ex-rm" => Some(TableId::ExRm),
            "ex-simplex" => Some(TableId::ExSimplex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::Table3 => "table3",
            TableId::Table4 => "table4",
            TableId::Table5 => "table5",
            TableId::Table6 => "table6",
            TableId::ExRm => "ex-rm",
            TableId::ExSimplex => "ex-simplex",
        }
    }

    pub const ALL: [TableId; 8] = [
        TableId::Table1,
        TableId::Table2,
        TableId::Table3,
        TableId::Table4,
        TableId::Table5,
        TableId::Table6,
        TableId::ExRm,
        TableId::ExSimplex,
    ];
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    pub label: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct TableCheck {
    pub name: &'static str,
    pub rows: Vec<RowOutcome>,
}

impl TableCheck {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
    pub fn passed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }
}

pub fn reproduce(id: TableId, cap: u64) -> TableCheck {
    match id {
        TableId::Table1 => table1(cap),
        TableId::Table2 => table2(cap),
        TableId::Table3 => table3(cap),
        TableId::Table4 => table4(cap),
        TableId::Table5 => table5(cap),
        TableId::Table6 => table6(),
        TableId::ExRm => ex_rm(cap),
        TableId::ExSimplex => ex_simplex(cap),
    }
}

fn gf(q: u32) -> FieldRef {
    Field::of_order(q, None).expect("pinned field")
}

/// The quaternary pair driving table 1: C is a [6,2,3]_4 Hermitian LCD code,
/// D a [6,2,4]_4 Hermitian self-orthogonal code.
pub fn quaternary_example_generators() -> (Matrix, Matrix) {
    let f = gf(4);
    (
        Matrix::from_rows(&f, &[vec![1, 0, 2, 0, 1, 2], vec![0, 1, 0, 3, 0, 2]]),
        Matrix::from_rows(&f, &[vec![1, 0, 1, 0, 2, 2], vec![0, 1, 0, 1, 2, 2]]),
    )
}

#[derive(Clone, Copy)]
enum Rule {
    DirectSum,
    Uuv,
}

#[derive(Clone, Copy, PartialEq)]
enum HullFlag {
    None,
    LcdH,
    SoH,
    SdH,
}

fn row_outcome(
    label: String,
    expected: String,
    result: Result<String, String>,
) -> RowOutcome {
    match result {
        Ok(got) => RowOutcome {
            pass: got == expected,
            label,
            expected,
            got,
        },
        Err(e) => RowOutcome {
            pass: false,
            label,
            expected,
            got: format!("error: {}", e),
        },
    }
}

fn table1(cap: u64) -> TableCheck {
    const ROWS: [(&str, &str, Rule, (usize, usize, usize), usize, HullFlag); 11] = [
        ("C", "C", Rule::DirectSum, (12, 4, 3), 0, HullFlag::LcdH),
        ("C", "Cd", Rule::DirectSum, (12, 6, 2), 0, HullFlag::LcdH),
        ("C", "Dd", Rule::DirectSum, (12, 6, 2), 2, HullFlag::None),
        ("Cd", "Cd", Rule::DirectSum, (12, 8, 2), 0, HullFlag::LcdH),
        ("Cd", "Dd", Rule::DirectSum, (12, 8, 2), 2, HullFlag::None),
        ("D", "Dd", Rule::DirectSum, (12, 6, 2), 4, HullFlag::None),
        ("Dd", "Dd", Rule::DirectSum, (12, 8, 2), 4, HullFlag::None),
        ("C", "D", Rule::Uuv, (12, 4, 4), 0, HullFlag::LcdH),
        ("Cd", "D", Rule::Uuv, (12, 6, 4), 2, HullFlag::None),
        ("D", "D", Rule::Uuv, (12, 4, 4), 4, HullFlag::SoH),
        ("Dd", "D", Rule::Uuv, (12, 6, 4), 6, HullFlag::SdH),
    ];
    let (g1, g2) = quaternary_example_generators();
    let c = LinearCode::from_generator(&g1);
    let d = LinearCode::from_generator(&g2);
    let lookup = |name: &str| -> Result<LinearCode, String> {
        Ok(match name {
            "C" => c.clone(),
            "D" => d.clone(),
            "Cd" => c.dual_hermitian().map_err(|e| e.to_string())?,
            "Dd" => d.dual_hermitian().map_err(|e| e.to_string())?,
            _ => unreachable!(),
        })
    };
    let mut rows = Vec::new();
    for (a, b, rule, (n, k, dist), hull, flag) in ROWS {
        let label = match rule {
            Rule::DirectSum => format!("direct_sum({}, {})", a, b),
            Rule::Uuv => format!("u_uv({}, {})", a, b),
        };
        let expected = format!(
            "[{},{},{}]_4 hull_h={}{}",
            n,
            k,
            dist,
            hull,
            match flag {
                HullFlag::None => "",
                HullFlag::LcdH => " lcd",
                HullFlag::SoH => " so",
                HullFlag::SdH => " sd",
            }
        );
        let result = (|| -> Result<String, String> {
            let c1 = lookup(a)?;
            let c2 = lookup(b)?;
            let built = match rule {
                Rule::DirectSum => direct_sum(&c1, &c2),
                Rule::Uuv => u_uv(&c1, &c2),
            }
            .map_err(|e| e.to_string())?;
            let report = classify(&built, cap).map_err(|e| e.to_string())?;
            let got_d = report
                .distance
                .exact()
                .ok_or("distance not enumerated".to_string())?;
            let hull_h = report.hull_h.ok_or("no hermitian hull".to_string())?;
            let flag_str = if report.flags.sd_h == Some(true) {
                " sd"
            } else if report.flags.so_h == Some(true) {
                " so"
            } else if report.flags.lcd_h == Some(true) {
                " lcd"
            } else {
                ""
            };
            Ok(format!(
                "[{},{},{}]_{} hull_h={}{}",
                report.n, report.k, got_d, report.q, hull_h, flag_str
            ))
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table1",
        rows,
    }
}

fn table2(cap: u64) -> TableCheck {
    const ROWS: [(usize, usize, bool, &str); 9] = [
        (2, 2, true, "optimal"),
        (3, 3, false, "optimal"),
        (4, 4, true, "optimal"),
        (5, 4, false, "optimal"),
        (6, 4, true, "optimal"),
        (7, 4, false, "optimal"),
        (8, 4, true, "almost-optimal"),
        (9, 4, false, "-"),
        (10, 4, true, "-"),
    ];
    let mut rows = Vec::new();
    for (n, d, self_dual, _annotation) in ROWS {
        let label = format!("binary-sd n={}", n);
        let expected = format!(
            "[{},{},{}]_2 {}",
            2 * n,
            n,
            d,
            if self_dual { "sd" } else { "almost-sd" }
        );
        let result = (|| -> Result<String, String> {
            let code = family_binary_sd(n, cap).map_err(|e| e.to_string())?;
            let report = classify(&code, cap).map_err(|e| e.to_string())?;
            let got_d = report
                .distance
                .exact()
                .ok_or("distance not enumerated".to_string())?;
            let flag = if report.flags.sd_e {
                "sd"
            } else if report.flags.almost_sd_e {
                "almost-sd"
            } else {
                "neither"
            };
            Ok(format!("[{},{},{}]_2 {}", report.n, report.k, got_d, flag))
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table2",
        rows,
    }
}

fn table3(cap: u64) -> TableCheck {
    const ROWS: [(u32, usize, (usize, usize, usize)); 18] = [
        (0, 4, (8, 4, 4)),
        (0, 6, (12, 6, 4)),
        (1, 4, (16, 5, 8)),
        (0, 8, (16, 8, 4)),
        (1, 6, (24, 7, 8)),
        (2, 4, (32, 6, 16)),
        (1, 8, (32, 9, 8)),
        (2, 6, (48, 8, 16)),
        (3, 4, (64, 7, 32)),
        (2, 8, (64, 10, 16)),
        (3, 6, (96, 9, 32)),
        (4, 4, (128, 8, 64)),
        (3, 8, (128, 11, 32)),
        (4, 6, (192, 10, 64)),
        (5, 4, (256, 9, 128)),
        (4, 8, (256, 12, 64)),
        (5, 6, (384, 11, 128)),
        (5, 8, (512, 13, 128)),
    ];
    let mut rows = Vec::new();
    for (t, n, (len, dim, dist)) in ROWS {
        let label = format!("binary-so-tower t={} n={}", t, n);
        let expected = format!("[{},{},{}]_2 even-like so", len, dim, dist);
        let result = (|| -> Result<String, String> {
            let code = family_binary_so_tower(n, t, cap).map_err(|e| e.to_string())?;
            let report = classify(&code, cap).map_err(|e| e.to_string())?;
            let got_d = report
                .distance
                .exact()
                .ok_or("distance not enumerated".to_string())?;
            let even = report.flags.even_like == Some(true);
            let so = report.flags.so_e;
            Ok(format!(
                "[{},{},{}]_2{}{}",
                report.n,
                report.k,
                got_d,
                if even { " even-like" } else { " odd-like" },
                if so { " so" } else { "" }
            ))
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table3",
        rows,
    }
}

fn ex_rm(cap: u64) -> TableCheck {
    let mut rows = Vec::new();
    for t in 1..=7u32 {
        let label = format!("binary-so-rm t={}", t);
        let expected = format!("[{},{},{}]_2 even-like so", 1usize << (t + 1), t + 1, 1usize << t);
        let result = (|| -> Result<String, String> {
            let code = family_binary_so_rm(t, cap).map_err(|e| e.to_string())?;
            let report = classify(&code, cap).map_err(|e| e.to_string())?;
            let got_d = report
                .distance
                .exact()
                .ok_or("distance not enumerated".to_string())?;
            let even = report.flags.even_like == Some(true);
            Ok(format!(
                "[{},{},{}]_2{}{}",
                report.n,
                report.k,
                got_d,
                if even { " even-like" } else { " odd-like" },
                if report.flags.so_e { " so" } else { "" }
            ))
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "ex-rm",
        rows,
    }
}

fn ex_simplex(cap: u64) -> TableCheck {
    let mut rows = Vec::new();
    for t in 1..=10u32 {
        let label = format!("binary-almost-so-simplex t={}", t);
        let expected = format!(
            "[{},{},{}]_2 griesmer-met",
            (1usize << (t + 1)) - 2,
            t + 1,
            (1usize << t) - 1
        );
        let result = (|| -> Result<String, String> {
            let code = family_binary_almost_so_simplex(t, cap).map_err(|e| e.to_string())?;
            let report = classify(&code, cap).map_err(|e| e.to_string())?;
            let got_d = report
                .distance
                .exact()
                .ok_or("distance not enumerated".to_string())?;
            let met = report
                .griesmer
                .as_ref()
                .and_then(|g| g.meets)
                .unwrap_or(false);
            Ok(format!(
                "[{},{},{}]_2{}",
                report.n,
                report.k,
                got_d,
                if met { " griesmer-met" } else { " griesmer-open" }
            ))
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "ex-simplex",
        rows,
    }
}

struct SoRowOutcome {
    report: CodeReport,
    c1_params: (usize, usize, usize),
    c2_params: (usize, usize, usize),
}

fn format_so_row(out: &SoRowOutcome, hermitian: bool) -> Result<String, String> {
    let r = &out.report;
    let d = match &r.distance {
        DistanceInfo::ExactEnumerated(d) => format!("{}", d),
        DistanceInfo::DesignValue(d) => format!("{}(design)", d),
        DistanceInfo::Unknown(msg) => return Err(format!("distance unknown: {}", msg)),
    };
    let (so, sd, hull) = if hermitian {
        (
            r.flags.so_h == Some(true),
            r.flags.sd_h == Some(true),
            r.hull_h.ok_or("missing hermitian hull")?,
        )
    } else {
        (r.flags.so_e, r.flags.sd_e, r.hull_e)
    };
    if !so {
        return Err("constructed code is not self-orthogonal".into());
    }
    if hull != r.k {
        return Err(format!("hull {} != k {}", hull, r.k));
    }
    Ok(format!(
        "C1=[{},{},{}] C2=[{},{},{}] -> [{},{},{}]_{}{}",
        out.c1_params.0,
        out.c1_params.1,
        out.c1_params.2,
        out.c2_params.0,
        out.c2_params.1,
        out.c2_params.2,
        r.n,
        r.k,
        d,
        r.q,
        if sd { " sd" } else { " so" }
    ))
}

fn expected_so_row(
    q: u32,
    c1: (usize, usize, usize),
    c2: (usize, usize, usize),
    out: (usize, usize, usize),
    exact_distance: bool,
) -> String {
    let d = if exact_distance {
        format!("{}", out.2)
    } else {
        format!("{}(design)", out.2)
    };
    format!(
        "C1=[{},{},{}] C2=[{},{},{}] -> [{},{},{}]_{}{}",
        c1.0, c1.1, c1.2, c2.0, c2.1, c2.2, out.0, out.1, d, q,
        if out.0 == 2 * out.1 { " sd" } else { " so" }
    )
}

fn affordable(q: u32, k: usize, cap: u64) -> bool {
    let mut total: u128 = 1;
    for _ in 0..k {
        total *= q as u128;
        if total > cap as u128 {
            return false;
        }
    }
    true
}

fn table4(cap: u64) -> TableCheck {
    const ROWS: [(u32, (usize, usize, usize), (usize, usize, usize), (usize, usize, usize)); 17] = [
        (4, (4, 1, 4), (4, 1, 4), (8, 2, 4)),
        (4, (4, 2, 3), (4, 1, 4), (8, 3, 4)),
        (4, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
        (8, (4, 2, 3), (4, 1, 4), (8, 3, 4)),
        (8, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
        (8, (5, 3, 3), (5, 1, 5), (10, 4, 5)),
        (8, (5, 3, 3), (5, 2, 4), (10, 5, 4)),
        (8, (6, 3, 4), (6, 1, 6), (12, 4, 6)),
        (8, (6, 4, 3), (6, 1, 6), (12, 5, 6)),
        (8, (6, 4, 3), (6, 2, 5), (12, 6, 5)),
        (8, (7, 4, 4), (7, 1, 7), (14, 5, 7)),
        (8, (7, 5, 3), (7, 1, 7), (14, 6, 6)),
        (8, (7, 5, 3), (7, 2, 6), (14, 7, 6)),
        (8, (8, 4, 5), (8, 1, 8), (16, 5, 8)),
        (8, (8, 5, 4), (8, 1, 8), (16, 6, 8)),
        (8, (8, 6, 3), (8, 1, 8), (16, 7, 6)),
        (8, (8, 6, 3), (8, 2, 7), (16, 8, 6)),
    ];
    let mut rows = Vec::new();
    for (q, c1p, c2p, outp) in ROWS {
        let label = format!("q={} C2=[{},{},{}] k1={}", q, c2p.0, c2p.1, c2p.2, c1p.1);
        let expected = expected_so_row(q, c1p, c2p, outp, true);
        let result = (|| -> Result<String, String> {
            let field = gf(q);
            let c2_spec = grs_so_euclidean(&field, c2p.0, c2p.1).map_err(|e| e.to_string())?;
            let c2 = c2_spec.code().map_err(|e| e.to_string())?;
            if c2.min_distance(cap).map_err(|e| e.to_string())? != c2p.2 {
                return Err("C2 distance mismatch".into());
            }
            let dual = grs_dual_euclidean(&c2_spec).map_err(|e| e.to_string())?;
            let c1_spec = dual.with_k(c1p.1).map_err(|e| e.to_string())?;
            let c1 = c1_spec.code().map_err(|e| e.to_string())?;
            if c1.min_distance(cap).map_err(|e| e.to_string())? != c1p.2 {
                return Err("C1 distance mismatch".into());
            }
            if !c1
                .gram_with(&c2, Flavor::Euclidean)
                .map_err(|e| e.to_string())?
                .is_zero()
            {
                return Err("C1 not orthogonal to C2".into());
            }
            let built = u_uv(&c1, &c2).map_err(|e| e.to_string())?;
            let design = (2 * c1p.2).min(c2p.2);
            let report =
                classify_constructed(&built, Some(design), cap).map_err(|e| e.to_string())?;
            format_so_row(
                &SoRowOutcome {
                    report,
                    c1_params: c1p,
                    c2_params: c2p,
                },
                false,
            )
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table4",
        rows,
    }
}

fn table5(cap: u64) -> TableCheck {
    const ROWS: [(u32, (usize, usize, usize), (usize, usize, usize), (usize, usize, usize)); 23] = [
        (16, (2, 1, 2), (2, 1, 2), (4, 2, 2)),
        (16, (3, 2, 2), (3, 1, 3), (6, 3, 3)),
        (16, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
        (16, (17, 11, 7), (17, 4, 14), (34, 15, 14)),
        (16, (17, 12, 6), (17, 4, 14), (34, 16, 12)),
        (16, (17, 13, 5), (17, 4, 14), (34, 17, 10)),
        (64, (2, 1, 2), (2, 1, 2), (4, 2, 2)),
        (64, (3, 2, 2), (3, 1, 3), (6, 3, 3)),
        (64, (4, 3, 2), (4, 1, 4), (8, 4, 4)),
        (64, (5, 3, 3), (5, 1, 5), (10, 4, 5)),
        (64, (5, 3, 3), (5, 2, 4), (10, 5, 4)),
        (64, (6, 4, 3), (6, 1, 6), (12, 5, 6)),
        (64, (6, 4, 3), (6, 2, 5), (12, 6, 5)),
        (64, (7, 4, 4), (7, 1, 7), (14, 5, 7)),
        (64, (7, 5, 3), (7, 2, 6), (14, 7, 6)),
        (64, (8, 5, 4), (8, 1, 8), (16, 6, 8)),
        (64, (8, 5, 4), (8, 2, 7), (16, 7, 7)),
        (64, (8, 6, 3), (8, 2, 7), (16, 8, 6)),
        (64, (65, 37, 29), (65, 8, 58), (130, 45, 58)),
        (64, (65, 42, 24), (65, 8, 58), (130, 50, 48)),
        (64, (65, 47, 19), (65, 8, 58), (130, 55, 38)),
        (64, (65, 52, 14), (65, 8, 58), (130, 60, 28)),
        (64, (65, 57, 9), (65, 8, 58), (130, 65, 18)),
    ];
    let mut rows = Vec::new();
    for (q, c1p, c2p, outp) in ROWS {
        let label = format!("q={} C2=[{},{},{}] k1={}", q, c2p.0, c2p.1, c2p.2, c1p.1);
        let exact = affordable(q, outp.1, cap);
        let expected = expected_so_row(q, c1p, c2p, outp, exact);
        let result = (|| -> Result<String, String> {
            let field = gf(q);
            let extended = c2p.0 == q as usize + 1;
            let (c1, c2, d1) = if extended {
                let c2_spec = grs_so_hermitian_extended(&field).map_err(|e| e.to_string())?;
                let c2 = c2_spec.code().map_err(|e| e.to_string())?;
                let (c1, d1) = extended_nested_subcode(
                    &field,
                    c1p.1,
                    SUBCODE_SEARCH_SEED,
                    SUBCODE_SEARCH_BUDGET,
                )
                .map_err(|e| e.to_string())?;
                (c1, c2, d1)
            } else {
                let c2_spec =
                    grs_so_hermitian(&field, c2p.0, c2p.1).map_err(|e| e.to_string())?;
                let c2 = c2_spec.code().map_err(|e| e.to_string())?;
                let dual = grs_dual_hermitian(&c2_spec).map_err(|e| e.to_string())?;
                let c1_spec = dual.with_k(c1p.1).map_err(|e| e.to_string())?;
                let c1 = c1_spec.code().map_err(|e| e.to_string())?;
                (c1, c2, c1_spec.design_distance())
            };
            if d1 != c1p.2 {
                return Err(format!("C1 design distance {} != expected {}", d1, c1p.2));
            }
            if affordable(q, c1p.1, cap)
                && c1.min_distance(cap).map_err(|e| e.to_string())? != c1p.2
            {
                return Err("C1 enumerated distance mismatch".into());
            }
            if affordable(q, c2p.1, cap)
                && c2.min_distance(cap).map_err(|e| e.to_string())? != c2p.2
            {
                return Err("C2 enumerated distance mismatch".into());
            }
            if !c2
                .gram(Flavor::Hermitian)
                .map_err(|e| e.to_string())?
                .is_zero()
            {
                return Err("C2 is not Hermitian self-orthogonal".into());
            }
            if !c1
                .gram_with(&c2, Flavor::Hermitian)
                .map_err(|e| e.to_string())?
                .is_zero()
            {
                return Err("C1 not contained in the Hermitian dual of C2".into());
            }
            let built = u_uv(&c1, &c2).map_err(|e| e.to_string())?;
            let design = (2 * c1p.2).min(c2p.2);
            let report =
                classify_constructed(&built, Some(design), cap).map_err(|e| e.to_string())?;
            format_so_row(
                &SoRowOutcome {
                    report,
                    c1_params: c1p,
                    c2_params: c2p,
                },
                true,
            )
        })();
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table5",
        rows,
    }
}

fn table6() -> TableCheck {
    const ROWS: [((usize, usize, usize), (usize, usize, usize), (usize, usize, usize), usize); 5] = [
        ((16, 8, 5), (22, 13, 5), (38, 21, 5), 4),
        ((19, 10, 5), (20, 11, 5), (39, 21, 5), 4),
        ((17, 9, 5), (22, 13, 5), (39, 22, 5), 4),
        ((17, 9, 5), (23, 12, 6), (40, 21, 5), 4),
        ((20, 11, 5), (20, 11, 5), (40, 22, 5), 4),
    ];
    let mut rows = Vec::new();
    for (p1, p2, outp, cited) in ROWS {
        let label = format!(
            "[{},{},{}] + [{},{},{}]",
            p1.0, p1.1, p1.2, p2.0, p2.1, p2.2
        );
        let expected = format!(
            "[{},{},{}]_2 improves {}",
            outp.0, outp.1, outp.2, cited
        );
        let got = lcd_bound_combine_params(p1, p2);
        let result = if got == outp && got.2 > cited {
            Ok(format!("[{},{},{}]_2 improves {}", got.0, got.1, got.2, cited))
        } else {
            Ok(format!("[{},{},{}]_2", got.0, got.1, got.2))
        };
        rows.push(row_outcome(label, expected, result));
    }
    TableCheck {
        name: "table6",
        rows,
    }
}
