//! The plain-text code file format: a header line "q n k" (where q may carry
//! an explicit modulus as "q:c0,c1,...,ch" with little-endian coefficients),
//! followed by k lines of n space-separated element codes in [0, q).

use thiserror::Error;

use crate::code::LinearCode;
use crate::field::{Field, FieldError, FieldRef};
use crate::matrix::Matrix;

#[derive(Debug, Error)]
pub enum CodeFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug)]
pub struct ParsedCodeFile {
    pub field: FieldRef,
    pub code: LinearCode,
    /// Non-fatal notes, e.g. a generator whose rank is below the declared k.
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> CodeFileError {
    CodeFileError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parse "q[:coeffs]" into a field.
pub fn parse_field_token(token: &str) -> Result<FieldRef, CodeFileError> {
    match token.split_once(':') {
        None => {
            let q: u32 = token
                .parse()
                .map_err(|_| parse_err(1, format!("bad field order '{}'", token)))?;
            Ok(Field::of_order(q, None)?)
        }
        Some((q_str, coeff_str)) => {
            let q: u32 = q_str
                .parse()
                .map_err(|_| parse_err(1, format!("bad field order '{}'", q_str)))?;
            let coeffs: Vec<u16> = coeff_str
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| parse_err(1, format!("bad modulus coefficient '{}'", c)))
                })
                .collect::<Result<_, _>>()?;
            Ok(Field::of_order(q, Some(&coeffs))?)
        }
    }
}

pub fn parse(text: &str) -> Result<ParsedCodeFile, CodeFileError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(1, "header must be 'q n k'"));
    }
    let field = parse_field_token(fields[0])?;
    let n: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(1, "bad length in header"))?;
    let k: usize = fields[2]
        .parse()
        .map_err(|_| parse_err(1, "bad dimension in header"))?;

    let mut rows: Vec<Vec<u16>> = Vec::with_capacity(k);
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if rows.len() == k {
            return Err(parse_err(line_no, "more rows than the declared k"));
        }
        let row: Vec<u16> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u16>()
                    .map_err(|_| parse_err(line_no, format!("bad element code '{}'", tok)))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(parse_err(
                line_no,
                format!("expected {} entries, found {}", n, row.len()),
            ));
        }
        if let Some(&bad) = row.iter().find(|&&c| c as u32 >= field.order()) {
            return Err(parse_err(
                line_no,
                format!("element code {} not below q = {}", bad, field.order()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {} rows, found {}", k, rows.len()),
        ));
    }
    let gen = if k == 0 {
        Matrix::zeros(&field, 0, n)
    } else {
        Matrix::from_rows(&field, &rows)
    };
    let code = LinearCode::from_generator(&gen);
    let mut warnings = Vec::new();
    if code.dim() < k {
        warnings.push(format!(
            "generator has rank {} (below the declared k = {}); canonicalized",
            code.dim(),
            k
        ));
    }
    Ok(ParsedCodeFile {
        field,
        code,
        warnings,
    })
}

/// Render a code as a code file, emitting the modulus suffix only for
/// extension fields without a pinned default (so defaults stay terse).
pub fn render(code: &LinearCode) -> String {
    let field = code.field();
    let mut out = format!("{} {} {}\n", field.order(), code.len(), code.dim());
    for i in 0..code.dim() {
        let row: Vec<String> = code
            .generator()
            .row(i)
            .iter()
            .map(|c| c.to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_CAP;

    #[test]
    fn parse_quaternary_example() {
        let text = "4 6 2\n1 0 2 0 1 2\n0 1 0 3 0 2\n";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.code.len(), 6);
        assert_eq!(parsed.code.dim(), 2);
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.code.min_distance(DEFAULT_CAP).unwrap(), 3);
    }

    #[test]
    fn roundtrip_via_render() {
        let text = "4 6 2\n1 0 2 0 1 2\n0 1 0 3 0 2\n";
        let parsed = parse(text).unwrap();
        let rendered = render(&parsed.code);
        let again = parse(&rendered).unwrap();
        assert_eq!(again.code, parsed.code);
    }

    #[test]
    fn rank_deficit_warns() {
        let text = "2 3 2\n1 1 0\n1 1 0\n";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.code.dim(), 1);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_row = "2 3 2\n1 1 0\n1 x 0\n";
        match parse(bad_row).unwrap_err() {
            CodeFileError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
        let out_of_range = "2 3 1\n1 2 0\n";
        assert!(matches!(
            parse(out_of_range).unwrap_err(),
            CodeFileError::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn explicit_modulus_in_header() {
        // GF(32) has no pinned default; x^5 + x^2 + 1 supplied inline
        let text = "32:1,0,1,0,0,1 4 1\n1 2 3 4\n";
        let parsed = parse(text).unwrap();
        assert_eq!(parsed.field.order(), 32);
        assert_eq!(parsed.code.dim(), 1);
    }
}
