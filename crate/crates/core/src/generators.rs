//! Parsing of generator spec strings into metagroups and groups.
//!
//! Accepted forms:
//! - `cd:level=N[,f=s1,s2,...]` and the shorthand `cdN` (all scalars `+1`)
//! - `cyclicN`, `symN`, `klein`, `trivial`, optionally prefixed by `group:`
//! - `prod:<metagroup>,<group>[,center=<label>]`

use crate::cayley_dickson::{generator_metagroup, product_with_group, CdParams};
use crate::error::{Error, Result};
use crate::finite_group::FiniteGroup;
use crate::metagroup::MetagroupTable;

fn bad(spec: &str, why: &str) -> Error {
    Error::BadInput(format!("generator spec `{spec}`: {why}"))
}

fn parse_sign(s: &str, spec: &str) -> Result<i8> {
    match s.trim() {
        "+1" | "1" => Ok(1),
        "-1" | "\u{2212}1" => Ok(-1),
        _ => Err(bad(spec, &format!("doubling scalar `{s}` must be +1 or -1"))),
    }
}

fn parse_cd(body: &str, spec: &str) -> Result<CdParams> {
    let mut level = None;
    let mut scalars = Vec::new();
    let mut in_f = false;
    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(v) = tok.strip_prefix("level=") {
            level = Some(v.parse::<usize>().map_err(|_| bad(spec, "level must be an integer"))?);
            in_f = false;
        } else if let Some(v) = tok.strip_prefix("f=") {
            scalars.push(parse_sign(v, spec)?);
            in_f = true;
        } else if in_f {
            scalars.push(parse_sign(tok, spec)?);
        } else {
            return Err(bad(spec, &format!("unknown key `{tok}`")));
        }
    }
    let level = level.ok_or_else(|| bad(spec, "missing level"))?;
    if scalars.is_empty() {
        scalars = vec![1; level];
    }
    if scalars.len() != level {
        return Err(bad(spec, "number of doubling scalars differs from level"));
    }
    Ok(CdParams { level, scalars })
}

fn numbered(spec: &str, prefix: &str) -> Option<Result<usize>> {
    spec.strip_prefix(prefix)
        .filter(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
        .map(|rest| rest.parse::<usize>().map_err(|_| bad(spec, "number out of range")))
}

/// Parses a finite group spec.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let s = spec.trim();
    let s = s.strip_prefix("group:").unwrap_or(s);
    if s == "klein" {
        return Ok(FiniteGroup::klein());
    }
    if s == "trivial" {
        return Ok(FiniteGroup::trivial());
    }
    if let Some(n) = numbered(s, "cyclic") {
        let n = n?;
        if n == 0 || n > 64 {
            return Err(bad(spec, "cyclic order must be in 1..=64"));
        }
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(n) = numbered(s, "sym") {
        let n = n?;
        if n == 0 {
            return Err(bad(spec, "symmetric degree must be positive"));
        }
        return FiniteGroup::symmetric(n);
    }
    Err(bad(spec, "unknown group"))
}

/// Parses a metagroup spec.
pub fn parse_metagroup(spec: &str) -> Result<MetagroupTable> {
    let s = spec.trim();
    if let Some(body) = s.strip_prefix("cd:") {
        return generator_metagroup(&parse_cd(body, spec)?);
    }
    if let Some(level) = numbered(s, "cd") {
        let level = level?;
        if level > crate::cayley_dickson::MAX_LEVEL {
            return Err(Error::CapExceeded(format!("doubling level {level} above the cap")));
        }
        return generator_metagroup(&CdParams::real(level));
    }
    if let Some(body) = s.strip_prefix("prod:") {
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        let (center, rest): (Vec<&str>, Vec<&str>) = parts.iter().partition(|p| p.starts_with("center="));
        if rest.len() != 2 || center.len() > 1 {
            return Err(bad(spec, "expected prod:<metagroup>,<group>[,center=<label>]"));
        }
        let g = parse_metagroup(rest[0])?;
        let h = parse_group(rest[1])?;
        let z = match center.first() {
            None => None,
            Some(c) => {
                let label = &c["center=".len()..];
                Some(
                    h.index_of(label)
                        .ok_or_else(|| bad(spec, &format!("no group element `{label}`")))?,
                )
            }
        };
        return product_with_group(&g, &h, z);
    }
    parse_group(s).map(|h| h.to_metagroup())
}
