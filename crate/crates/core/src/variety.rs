//! Line-oriented variety files:
//!
//! ```text
//! # comment
//! field p=<int> e=<int> [modulus=<c0,c1,...,1>]
//! vars m=<int>
//! poly <expr>
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::poly::Polynomial;

#[derive(Clone, Debug)]
pub struct VarietyFile {
    pub field: FieldSpec,
    pub m: usize,
    pub polys: Vec<Polynomial>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::VarietyFile { line, msg: msg.into() }
}

fn key_values(line: usize, rest: &str) -> Result<Vec<(&str, &str)>> {
    rest.split_whitespace()
        .map(|kv| kv.split_once('=').ok_or_else(|| err(line, format!("expected key=value, got `{kv}`"))))
        .collect()
}

fn parse_int<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| err(line, format!("invalid integer for {key}: `{v}`")))
}

impl VarietyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut field: Option<FieldSpec> = None;
        let mut m: Option<usize> = None;
        let mut polys = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            match head {
                "field" => {
                    if field.is_some() {
                        return Err(err(line, "duplicate field header"));
                    }
                    let (mut p, mut e, mut modulus) = (None, None, None);
                    for (k, v) in key_values(line, rest)? {
                        match k {
                            "p" => p = Some(parse_int::<u32>(line, k, v)?),
                            "e" => e = Some(parse_int::<u32>(line, k, v)?),
                            "modulus" => {
                                modulus = Some(
                                    v.split(',').map(|c| parse_int::<u32>(line, k, c.trim())).collect::<Result<Vec<_>>>()?,
                                )
                            }
                            other => return Err(err(line, format!("unknown field key `{other}`"))),
                        }
                    }
                    let p = p.ok_or_else(|| err(line, "field header needs p="))?;
                    let e = e.unwrap_or(1);
                    let f = FieldSpec::new(p, e, modulus.as_deref()).map_err(|x| err(line, x.to_string()))?;
                    field = Some(f);
                }
                "vars" => {
                    if m.is_some() {
                        return Err(err(line, "duplicate vars header"));
                    }
                    let kv = key_values(line, rest)?;
                    match kv.as_slice() {
                        [("m", v)] => m = Some(parse_int(line, "m", v)?),
                        _ => return Err(err(line, "expected `vars m=<int>`")),
                    }
                }
                "poly" => {
                    let f = field.as_ref().ok_or_else(|| err(line, "poly before field header"))?;
                    let m = m.ok_or_else(|| err(line, "poly before vars header"))?;
                    let p = Polynomial::parse(rest, m, f).map_err(|x| err(line, x.to_string()))?;
                    if !p.is_homogeneous() {
                        return Err(err(line, "polynomial is not homogeneous"));
                    }
                    polys.push(p);
                }
                other => return Err(err(line, format!("unknown directive `{other}`"))),
            }
        }

        let field = field.ok_or_else(|| err(0, "missing field header"))?;
        let m = m.ok_or_else(|| err(0, "missing vars header"))?;
        Ok(Self { field, m, polys })
    }
}

impl fmt::Display for VarietyFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.field)?;
        writeln!(f, "vars m={}", self.m)?;
        for p in &self.polys {
            writeln!(f, "poly {p}")?;
        }
        Ok(())
    }
}
