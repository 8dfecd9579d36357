//! The line-oriented corpus format.
//!
//! ```text
//! # comment
//! group s4 p=2 gens=(0 1 2 3);(0 1)
//! normal gens=(0 1 2);(0 1)(2 3)
//! X=(0 1)(2 3)
//! K=aut
//! ```
//!
//! `X=` and `K=` lines are optional and repeatable. `K` is one of `aut`,
//! `inn`, `id` or `gens:<cycles;...>`. Points are 0-based; the degree of an
//! entry is one more than the largest point in its `group` line.

use std::collections::BTreeSet;

use plocal_core::verify::{EntrySpec, KSpec};
use plocal_core::{FiniteGroup, Limits, Perm};

pub type CorpusEntry = EntrySpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("entry `{entry}`: the declared subgroup is not normal")]
    Normality { entry: String },
    #[error("entry `{entry}`: {message}")]
    Group { entry: String, message: String },
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column: offset + 1,
            message: message.into(),
        }
    }

    fn offset_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize
    }
}

type RawPerm = Vec<Vec<u32>>;

/// Parses `(0 1 2)(3 4)`; `()` is the identity.
fn parse_cycles(line: &Line, s: &str) -> Result<RawPerm, ParseError> {
    let base = line.offset_of(s);
    let bytes = s.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(line.err(base, "empty permutation"));
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(line.err(base + i, "expected `(`"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n = s[start..i]
                        .parse::<u32>()
                        .map_err(|_| line.err(base + start, "point out of range"))?;
                    if cycle.contains(&n) || cycles.iter().any(|c: &Vec<u32>| c.contains(&n)) {
                        return Err(line.err(base + start, format!("point {n} repeated")));
                    }
                    cycle.push(n);
                }
                Some(_) => return Err(line.err(base + i, "expected a point or `)`")),
                None => return Err(line.err(base + i, "unclosed cycle")),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Ok(cycles)
}

fn parse_list(line: &Line, s: &str) -> Result<Vec<(usize, RawPerm)>, ParseError> {
    if s.trim().is_empty() {
        return Err(line.err(line.offset_of(s), "empty generator list"));
    }
    s.split(';')
        .map(|part| Ok((line.offset_of(part), parse_cycles(line, part)?)))
        .collect()
}

fn to_perm(line: &Line, at: usize, raw: &RawPerm, degree: usize) -> Result<Perm, ParseError> {
    if let Some(&p) = raw.iter().flatten().find(|&&p| p as usize >= degree) {
        return Err(line.err(at, format!("point {p} exceeds the group's degree {degree}")));
    }
    Perm::from_cycles(degree, raw).map_err(|e| line.err(at, e.to_string()))
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `key=value` with the value running to the end of the line.
fn expect_key<'a>(line: &Line<'a>, rest: &'a str, key: &str) -> Result<&'a str, ParseError> {
    let trimmed = rest.trim_start();
    trimmed
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| line.err(line.offset_of(trimmed), format!("expected `{key}=`")))
}

struct Pending {
    spec: EntrySpec,
    degree: usize,
    has_normal: bool,
}

/// Parses the corpus text without group-theoretic validation.
pub fn parse_syntax(text: &str) -> Result<Vec<CorpusEntry>, ParseError> {
    let mut out: Vec<CorpusEntry> = Vec::new();
    let mut current: Option<Pending> = None;
    let mut names = BTreeSet::new();
    let finish = |p: Pending, out: &mut Vec<CorpusEntry>, line: &Line| {
        if !p.has_normal {
            return Err(line.err(0, format!("entry `{}` has no `normal` line", p.spec.name)));
        }
        out.push(p.spec);
        Ok(())
    };
    for (i, text) in text.lines().enumerate() {
        let line = Line {
            number: i + 1,
            text,
        };
        let body = text.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed
            .strip_prefix("group")
            .filter(|r| r.starts_with(char::is_whitespace))
        {
            if let Some(p) = current.take() {
                finish(p, &mut out, &line)?;
            }
            let rest = rest.trim_start();
            let name_end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            let name = &rest[..name_end];
            if name.contains('=') {
                return Err(line.err(line.offset_of(rest), "expected an entry name"));
            }
            if !names.insert(name.to_string()) {
                return Err(line.err(line.offset_of(rest), format!("duplicate entry `{name}`")));
            }
            let rest = expect_key(&line, &rest[name_end..], "p")?;
            let p_end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            let p = rest[..p_end]
                .parse::<u32>()
                .ok()
                .filter(|&p| is_prime(p))
                .ok_or_else(|| line.err(line.offset_of(rest), "p must be a prime"))?;
            let gens = parse_list(&line, expect_key(&line, &rest[p_end..], "gens")?)?;
            let degree = gens
                .iter()
                .flat_map(|(_, r)| r.iter().flatten())
                .max()
                .map_or(1, |&m| m as usize + 1);
            let generators = gens
                .iter()
                .map(|(at, r)| to_perm(&line, *at, r, degree))
                .collect::<Result<_, _>>()?;
            current = Some(Pending {
                spec: EntrySpec {
                    name: name.to_string(),
                    p,
                    generators,
                    ..Default::default()
                },
                degree,
                has_normal: false,
            });
            continue;
        }
        let Some(entry) = current.as_mut() else {
            return Err(line.err(line.offset_of(trimmed), "expected a `group` line"));
        };
        let degree = entry.degree;
        if let Some(rest) = trimmed.strip_prefix("normal") {
            if entry.has_normal {
                return Err(line.err(line.offset_of(trimmed), "second `normal` line"));
            }
            let gens = parse_list(&line, expect_key(&line, rest, "gens")?)?;
            entry.spec.normal = gens
                .iter()
                .map(|(at, r)| to_perm(&line, *at, r, degree))
                .collect::<Result<_, _>>()?;
            entry.has_normal = true;
        } else if let Some(rest) = trimmed.strip_prefix("X=") {
            let gens = parse_list(&line, rest)?;
            let x = gens
                .iter()
                .map(|(at, r)| to_perm(&line, *at, r, degree))
                .collect::<Result<_, _>>()?;
            entry.spec.xs.push(x);
        } else if let Some(rest) = trimmed.strip_prefix("K=") {
            let k = match rest.trim() {
                "aut" => KSpec::Aut,
                "inn" => KSpec::Inn,
                "id" => KSpec::Id,
                other => match other.strip_prefix("gens:") {
                    Some(list) => {
                        let gens = parse_list(&line, list)?;
                        KSpec::Gens(
                            gens.iter()
                                .map(|(at, r)| to_perm(&line, *at, r, degree))
                                .collect::<Result<_, _>>()?,
                        )
                    }
                    None => {
                        return Err(line.err(
                            line.offset_of(rest),
                            "expected `aut`, `inn`, `id` or `gens:`",
                        ))
                    }
                },
            };
            entry.spec.ks.push(k);
        } else {
            return Err(line.err(line.offset_of(trimmed), "unknown directive"));
        }
    }
    let last = Line {
        number: text.lines().count().max(1),
        text: "",
    };
    if let Some(p) = current.take() {
        finish(p, &mut out, &last)?;
    }
    Ok(out)
}

/// Parses and checks that every declared subgroup is normal.
pub fn parse_corpus(text: &str, limits: Limits) -> Result<Vec<CorpusEntry>, CorpusError> {
    let entries = parse_syntax(text)?;
    for e in &entries {
        let group_err = |err: plocal_core::Error| CorpusError::Group {
            entry: e.name.clone(),
            message: err.to_string(),
        };
        let g = FiniteGroup::generate(&e.generators, limits).map_err(group_err)?;
        let h = g.subgroup_generated_by(&e.normal).map_err(group_err)?;
        if !g.is_normal(&h, &g.whole()) {
            return Err(CorpusError::Normality {
                entry: e.name.clone(),
            });
        }
    }
    Ok(entries)
}
