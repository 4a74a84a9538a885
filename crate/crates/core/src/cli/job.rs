//! Line-oriented job files.
//!
//! ```text
//! # the conic fixture
//! [vars]
//! x, y
//! [map]
//! x^2
//! x*(x*y + 1)
//! (x*y + 1)^2
//! [ambient]
//! z1 z2 z3
//! [cone]
//! z1*z3 - z2^2
//! ```
//!
//! Everything after `#` on a line is a comment. Each expression section
//! holds one entry per line.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial, RationalFunction, VarSet};

use super::parse::{parse_polynomial_at, parse_rational, parse_rational_function_at};

pub const SECTIONS: &[&str] = &[
    "vars",
    "map",
    "h",
    "ideal",
    "check",
    "ambient",
    "cone",
    "dim",
    "points",
    "preimages",
    "pi-vars",
    "pi",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub number: usize,
    pub text: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobFile {
    sections: BTreeMap<String, Vec<Line>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        column: 1,
        message: message.into(),
    }
}

impl JobFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut sections: BTreeMap<String, Vec<Line>> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let number = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Some(name) = body.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                let name = name.trim().to_ascii_lowercase();
                if !SECTIONS.contains(&name.as_str()) {
                    return Err(parse_err(number, format!("unknown section [{name}]")));
                }
                if sections.contains_key(&name) {
                    return Err(parse_err(number, format!("section [{name}] appears twice")));
                }
                sections.insert(name.clone(), Vec::new());
                current = Some(name);
                continue;
            }
            let Some(section) = &current else {
                return Err(parse_err(number, "content before the first section header"));
            };
            sections.get_mut(section).expect("inserted").push(Line {
                number,
                text: body.to_string(),
            });
        }
        Ok(JobFile { sections })
    }

    pub fn has(&self, section: &str) -> bool {
        self.sections.contains_key(section)
    }

    pub fn lines(&self, section: &str) -> Option<&[Line]> {
        self.sections.get(section).map(Vec::as_slice)
    }

    /// Variable names from a names section (comma or whitespace separated).
    pub fn names(&self, section: &str) -> Result<Option<VarSet>> {
        let Some(lines) = self.lines(section) else {
            return Ok(None);
        };
        let line = lines.first().map_or(0, |l| l.number);
        let names: Vec<String> = lines
            .iter()
            .flat_map(|l| l.text.split(|c: char| c == ',' || c.is_whitespace()))
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        for n in &names {
            let mut chars = n.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(parse_err(
                    line,
                    format!("`{n}` is not a valid variable name"),
                ));
            }
        }
        VarSet::new(names)
            .map(Some)
            .map_err(|e| parse_err(line, e.to_string()))
    }

    pub fn vars(&self) -> Result<VarSet> {
        self.names("vars")?
            .ok_or_else(|| parse_err(0, "missing [vars] section"))
    }

    pub fn polynomials(&self, section: &str, vars: &VarSet) -> Result<Option<Vec<Polynomial>>> {
        self.lines(section)
            .map(|lines| {
                lines
                    .iter()
                    .map(|l| parse_polynomial_at(&l.text, vars, l.number))
                    .collect()
            })
            .transpose()
    }

    pub fn rational_functions(
        &self,
        section: &str,
        vars: &VarSet,
    ) -> Result<Option<Vec<RationalFunction>>> {
        self.lines(section)
            .map(|lines| {
                lines
                    .iter()
                    .map(|l| parse_rational_function_at(&l.text, vars, l.number))
                    .collect()
            })
            .transpose()
    }

    /// Rows of comma-separated rational literals.
    pub fn points(&self, section: &str) -> Result<Option<Vec<Vec<Coeff>>>> {
        self.lines(section)
            .map(|lines| {
                lines
                    .iter()
                    .map(|l| {
                        l.text
                            .split(',')
                            .map(|s| parse_rational(s, l.number))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect()
            })
            .transpose()
    }

    pub fn dim(&self) -> Result<Option<usize>> {
        let Some(lines) = self.lines("dim") else {
            return Ok(None);
        };
        match lines {
            [l] => l
                .text
                .parse()
                .map(Some)
                .map_err(|_| parse_err(l.number, format!("`{}` is not a dimension", l.text))),
            _ => Err(parse_err(
                lines.first().map_or(0, |l| l.number),
                "[dim] takes exactly one integer",
            )),
        }
    }
}
