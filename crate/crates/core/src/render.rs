//! Text syntax for field elements: polynomials in a generator symbol such as
//! `a^5+a^4+a^2+1`, `2*a^2+a+2` or a pure power `a^7`.

use crate::error::{Error, Result};
use crate::field::{Elem, Gf};

/// Integer coefficients `c_i` of `sum c_i sym^i`, indexed by exponent.
pub fn parse_terms(text: &str, symbol: char) -> Result<Vec<i64>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(Error::Parse(format!("expected `+` or `-` in `{text}`"))),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (c, e) = parse_term(term, symbol).map_err(|e| Error::Parse(format!("{e} in `{text}`")))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += sign * c;
    }
    Ok(coeffs)
}

fn parse_term(term: &str, symbol: char) -> std::result::Result<(i64, usize), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let Some(pos) = term.find(symbol) else {
        return term.parse::<i64>().map(|c| (c, 0)).map_err(|_| format!("bad term `{term}`"));
    };
    let coeff = term[..pos].trim_end_matches('*');
    let c = if coeff.is_empty() {
        1
    } else {
        coeff.parse::<i64>().map_err(|_| format!("bad coefficient `{coeff}`"))?
    };
    let power = &term[pos + symbol.len_utf8()..];
    let e = if power.is_empty() {
        1
    } else {
        power
            .strip_prefix('^')
            .and_then(|p| p.parse::<usize>().ok())
            .ok_or_else(|| format!("bad exponent in `{term}`"))?
    };
    Ok((c, e))
}

/// Parses an element of `f` written in the generator symbol `symbol`.
pub fn parse_elem(f: &Gf, text: &str, symbol: char) -> Result<Elem> {
    let terms = parse_terms(text, symbol)?;
    let g = f.generator();
    Ok(f.sum(
        terms
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| f.mul(f.from_int(c), f.pow(g, i as u64))),
    ))
}

/// A modulus such as `x^6+x^4+x^3+x+1`, coefficients low to high reduced mod `p`.
pub fn parse_modulus(text: &str, p: u32) -> Result<Vec<u32>> {
    let terms = parse_terms(text, 'x')?;
    Ok(terms.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect())
}

/// Comma-separated coefficients `a_0, ..., a_{m-1}` of a q-polynomial.
pub fn parse_coeff_list(f: &Gf, text: &str, symbol: char) -> Result<Vec<Elem>> {
    text.split(',').map(|t| parse_elem(f, t, symbol)).collect()
}
