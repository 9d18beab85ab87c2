//! Text forms for sequences, approximation types and valuations.
//!
//! ```text
//! pcs:artin_schreier | pcs:powergap:e=<expr in i> | pcs:list:<c0>,<c1>,.. |
//! pcs:file:<path> | pcs:picked(<at>)       followed by ;flag flags
//! at:trivial:c=<c> | at:empty | at:value:b=<b>,cut=<3/2R> |
//! at:residue:b=<b>,delta=<d> | at:immediate:<pcs>
//! gauss | monomial:b=<b>,alpha=<d> | monomial:b=<b>,cut=<q><L|R> | limit:<at>
//! ```

use crate::approx_type::ApproxType;
use crate::error::{Error, Result};
use crate::extension::{Alpha, ExtensionValuation};
use crate::ordered_group::{Cut, GroupValue};
use crate::pcs::{ExponentFn, PcsGenerator};
use crate::valued_field::ValuedField;

fn bad(s: &str) -> Error {
    Error::Parse(format!("cannot parse {s:?}"))
}

/// Splits at `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn key_values<'a>(s: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let parts = split_top(s, ',');
    if parts.len() != keys.len() {
        return Err(bad(s));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(p, k)| {
            p.trim()
                .strip_prefix(k)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| bad(s))
        })
        .collect()
}

pub fn parse_pcs(s: &str, field: &ValuedField) -> Result<PcsGenerator> {
    let mut parts = split_top(s.trim(), ';').into_iter();
    let head = parts.next().unwrap_or_default().trim();
    let body = head.strip_prefix("pcs:").ok_or_else(|| bad(s))?;
    let mut g = if body == "artin_schreier" {
        PcsGenerator::artin_schreier(*field)?
    } else if let Some(e) = body.strip_prefix("powergap:e=") {
        PcsGenerator::power_gap(*field, ExponentFn::parse(e)?)
    } else if let Some(list) = body.strip_prefix("list:") {
        let terms = split_top(list, ',')
            .into_iter()
            .map(|t| field.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        PcsGenerator::explicit(*field, terms)
    } else if let Some(path) = body.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        let terms = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| field.parse_element(l))
            .collect::<Result<Vec<_>>>()?;
        PcsGenerator::explicit(*field, terms)
    } else if let Some(inner) = body.strip_prefix("picked(").and_then(|r| r.strip_suffix(')')) {
        PcsGenerator::from_approx_type(&parse_at(inner, field)?)?
    } else {
        return Err(bad(s));
    };
    for flag in parts {
        g = match flag.trim() {
            "limitless" => g.declare_limitless(true),
            "limit" => g.declare_limitless(false),
            "cofinal" => g.declare_cofinal(true),
            "not-cofinal" => g.declare_cofinal(false),
            "transcendental" => g.declare_transcendental(true),
            other => return Err(Error::Parse(format!("unknown flag {other:?}"))),
        };
    }
    Ok(g)
}

pub fn parse_cut(s: &str) -> Result<Cut> {
    Ok(Cut::parse_spec(s.trim())?)
}

pub fn parse_at(s: &str, field: &ValuedField) -> Result<ApproxType> {
    let s = s.trim();
    let body = s.strip_prefix("at:").ok_or_else(|| bad(s))?;
    if body == "empty" {
        return Ok(ApproxType::empty(*field));
    }
    if let Some(c) = body.strip_prefix("trivial:c=") {
        return Ok(ApproxType::trivial(*field, field.parse_element(c)?));
    }
    if let Some(rest) = body.strip_prefix("value:") {
        let kv = key_values(rest, &["b", "cut"])?;
        return Ok(ApproxType::value_extending(*field, field.parse_element(kv[0])?, parse_cut(kv[1])?));
    }
    if let Some(rest) = body.strip_prefix("residue:") {
        let kv = key_values(rest, &["b", "delta"])?;
        let delta: GroupValue = kv[1].trim().parse()?;
        return ApproxType::residue_extending(*field, field.parse_element(kv[0])?, delta);
    }
    if let Some(rest) = body.strip_prefix("immediate:") {
        return ApproxType::immediate(parse_pcs(rest, field)?);
    }
    Err(bad(s))
}

pub fn parse_valuation(s: &str, field: &ValuedField) -> Result<ExtensionValuation> {
    let s = s.trim();
    if s == "gauss" {
        return Ok(ExtensionValuation::gauss(*field));
    }
    if let Some(rest) = s.strip_prefix("monomial:") {
        let parts = split_top(rest, ',');
        let is_cut = parts.get(1).is_some_and(|p| p.trim().starts_with("cut="));
        let kv = key_values(rest, &["b", if is_cut { "cut" } else { "alpha" }])?;
        let b = field.parse_element(kv[0])?;
        let alpha = if is_cut {
            Alpha::Transcendental(parse_cut(kv[1])?)
        } else {
            Alpha::Value(kv[1].trim().parse()?)
        };
        return ExtensionValuation::monomial(*field, b, alpha);
    }
    if let Some(rest) = s.strip_prefix("limit:") {
        return ExtensionValuation::limit(parse_at(rest, field)?);
    }
    Err(bad(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let f2 = ValuedField::fp_rational_functions(2).unwrap();
        for s in [
            "pcs:artin_schreier",
            "pcs:powergap:e=i^2",
            "pcs:list:0,t,t^3+t;limitless",
            "pcs:artin_schreier;transcendental",
            "pcs:picked(at:immediate:pcs:artin_schreier)",
        ] {
            assert_eq!(parse_pcs(s, &f2).unwrap().to_string(), s);
        }
        let q2 = ValuedField::padic(2).unwrap();
        for s in ["at:empty", "at:trivial:c=3/4", "at:value:b=1,cut=3/2R", "at:residue:b=-1,delta=2"] {
            assert_eq!(parse_at(s, &q2).unwrap().to_string(), s);
        }
        for s in ["monomial:b=2,alpha=1", "monomial:b=0,cut=1/2L"] {
            assert_eq!(parse_valuation(s, &q2).unwrap().to_string(), s);
        }
        assert_eq!(parse_valuation("gauss", &q2).unwrap().to_string(), "monomial:b=0,alpha=0");
        let lim = parse_valuation("limit:at:immediate:pcs:artin_schreier", &f2).unwrap();
        assert_eq!(lim.to_string(), "limit:at:immediate:pcs:artin_schreier");
        assert!(matches!(parse_pcs("pcs:nope", &f2), Err(Error::Parse(_))));
        assert!(matches!(parse_pcs("pcs:artin_schreier;shiny", &f2), Err(Error::Parse(_))));
    }
}
