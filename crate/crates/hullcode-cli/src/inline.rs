//! Tiny inline construction expressions for `construct --inline`, e.g.
//!
//!   u_uv(file(c.code), file(d.code))
//!   uuv_repetition(even_weight(4))
//!   grs_so_hermitian_extended(q=4)
//!
//! Each expression lowers to checked construction calls (so every theorem
//! assertion embedded in the constructors runs) plus a recipe tree.

use hullcode::constructions::{
    direct_sum, even_weight, repetition, simplex, u_uv, uuv_repetition_binary,
    ConstructionError, Recipe,
};
use hullcode::field::Field;
use hullcode::grs::{grs_so_euclidean, grs_so_hermitian, grs_so_hermitian_extended};
use hullcode::LinearCode;

#[derive(Debug)]
enum Arg {
    Node(Ast),
    Value(String),
}

#[derive(Debug)]
struct Ast {
    name: String,
    args: Vec<Arg>,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn token(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && !b"(),".contains(&self.text[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos])
            .trim()
            .to_string()
    }

    fn expect(&mut self, ch: u8) -> Result<(), ConstructionError> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ConstructionError::Recipe(format!(
                "expected '{}' at offset {}",
                ch as char, self.pos
            )))
        }
    }

    fn parse_expr(&mut self) -> Result<Ast, ConstructionError> {
        let name = self.token();
        if name.is_empty() {
            return Err(ConstructionError::Recipe("expected a construction name".into()));
        }
        self.expect(b'(')?;
        let mut args = Vec::new();
        if self.peek() != Some(b')') {
            loop {
                let save = self.pos;
                let tok = self.token();
                if self.peek() == Some(b'(') {
                    self.pos = save;
                    args.push(Arg::Node(self.parse_expr()?));
                } else {
                    args.push(Arg::Value(tok));
                }
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
        }
        self.expect(b')')?;
        Ok(Ast { name, args })
    }
}

fn int_arg(ast: &Ast, idx: usize, name: &str) -> Result<u64, ConstructionError> {
    let raw = match ast.args.get(idx) {
        Some(Arg::Value(v)) => v,
        _ => {
            return Err(ConstructionError::Recipe(format!(
                "{} needs argument {} ({})",
                ast.name, idx, name
            )))
        }
    };
    let digits = match raw.split_once('=') {
        Some((key, v)) if key.trim() == name => v,
        Some(_) | None if raw.contains('=') => {
            return Err(ConstructionError::Recipe(format!(
                "{}: expected {}=<int>, found '{}'",
                ast.name, name, raw
            )))
        }
        _ => raw.as_str(),
    };
    digits
        .trim()
        .parse::<u64>()
        .map_err(|_| ConstructionError::Recipe(format!("{}: bad integer '{}'", ast.name, raw)))
}

fn node_arg<'a>(ast: &'a Ast, idx: usize) -> Result<&'a Ast, ConstructionError> {
    match ast.args.get(idx) {
        Some(Arg::Node(n)) => Ok(n),
        _ => Err(ConstructionError::Recipe(format!(
            "{} needs a construction as argument {}",
            ast.name, idx
        ))),
    }
}

pub fn build(expr: &str, cap: u64) -> Result<(LinearCode, Recipe), ConstructionError> {
    let mut p = Parser::new(expr);
    let ast = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(ConstructionError::Recipe(format!(
            "trailing input at offset {}",
            p.pos
        )));
    }
    lower(&ast, cap)
}

fn lower(ast: &Ast, cap: u64) -> Result<(LinearCode, Recipe), ConstructionError> {
    match ast.name.as_str() {
        "file" => {
            let path = match ast.args.first() {
                Some(Arg::Value(v)) if !v.is_empty() => v.clone(),
                _ => return Err(ConstructionError::Recipe("file() needs a path".into())),
            };
            let code = crate::load_code_file(&path)?;
            Ok((code, Recipe::File { path }))
        }
        "direct_sum" => {
            let (a, ra) = lower(node_arg(ast, 0)?, cap)?;
            let (b, rb) = lower(node_arg(ast, 1)?, cap)?;
            Ok((
                direct_sum(&a, &b)?,
                Recipe::DirectSum {
                    children: vec![ra, rb],
                },
            ))
        }
        "u_uv" => {
            let (a, ra) = lower(node_arg(ast, 0)?, cap)?;
            let (b, rb) = lower(node_arg(ast, 1)?, cap)?;
            Ok((
                u_uv(&a, &b)?,
                Recipe::UUv {
                    children: vec![ra, rb],
                },
            ))
        }
        "uuv_repetition" => {
            let (a, ra) = lower(node_arg(ast, 0)?, cap)?;
            let n = a.len();
            let (code, _hull) = uuv_repetition_binary(&a)?;
            Ok((
                code,
                Recipe::UUv {
                    children: vec![ra, Recipe::Repetition { q: 2, n }],
                },
            ))
        }
        "repetition" => {
            let q = int_arg(ast, 0, "q")? as u32;
            let n = int_arg(ast, 1, "n")? as usize;
            let field = Field::of_order(q, None)?;
            Ok((repetition(&field, n)?, Recipe::Repetition { q, n }))
        }
        "even_weight" => {
            let n = int_arg(ast, 0, "n")? as usize;
            Ok((even_weight(n)?, Recipe::EvenWeight { n }))
        }
        "simplex" => {
            let t = int_arg(ast, 0, "t")? as u32;
            Ok((simplex(t)?, Recipe::Simplex { t }))
        }
        "grs_so_euclidean" => {
            let q = int_arg(ast, 0, "q")? as u32;
            let n = int_arg(ast, 1, "n")? as usize;
            let k = int_arg(ast, 2, "k")? as usize;
            let field = Field::of_order(q, None)?;
            let spec = grs_so_euclidean(&field, n, k)?;
            Ok((spec.code()?, Recipe::Grs { spec }))
        }
        "grs_so_hermitian" => {
            let q = int_arg(ast, 0, "q")? as u32;
            let n = int_arg(ast, 1, "n")? as usize;
            let k = int_arg(ast, 2, "k")? as usize;
            let field = Field::of_order(q, None)?;
            let spec = grs_so_hermitian(&field, n, k)?;
            Ok((spec.code()?, Recipe::Grs { spec }))
        }
        "grs_so_hermitian_extended" => {
            // accepts the base subfield order: q=4 means GF(16) codes
            let q0 = int_arg(ast, 0, "q")? as u32;
            let field = Field::of_order(q0 * q0, None)?;
            let spec = grs_so_hermitian_extended(&field)?;
            Ok((spec.code()?, Recipe::Grs { spec }))
        }
        other => Err(ConstructionError::Recipe(format!(
            "unknown construction '{}'",
            other
        ))),
    }
}
