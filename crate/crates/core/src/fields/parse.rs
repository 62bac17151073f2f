//! Literal grammars for fields and field elements.
//!
//! ```text
//! field    ::= "Q" | "Q(sqrt D)" | "GF(P)" | "GF(P^K; m(x))"
//! rational ::= int | int "/" posint
//! quad     ::= rational | rational ("+"|"-") rational "*sqrt(" int ")"
//! prime    ::= int
//! ext      ::= polynomial in t with integer coefficients, e.g. t^2+t+1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::descriptor::{Field, FieldDescriptor, DEFAULT_MAX_FIELD_SIZE};
use super::element::FieldElement;
use crate::error::{Error, Result};

fn syntax(msg: impl Into<String>) -> Error {
    Error::Syntax(msg.into())
}

pub fn parse_field(text: &str) -> Result<FieldDescriptor> {
    parse_field_capped(text, DEFAULT_MAX_FIELD_SIZE)
}

/// Parses the field grammar, enforcing `cap` on finite field sizes.
pub fn parse_field_capped(text: &str, cap: u64) -> Result<FieldDescriptor> {
    let s = text.trim();
    if s == "Q" {
        return Ok(FieldDescriptor::Rational);
    }
    if let Some(inner) = s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        if inner.matches("sqrt").count() > 1 || inner.contains(',') {
            return Err(Error::UnsupportedField(format!(
                "{s}: only single quadratic extensions of Q are supported"
            )));
        }
        let body = inner
            .trim()
            .strip_prefix("sqrt")
            .ok_or_else(|| syntax(format!("expected sqrt in {s}")))?
            .trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        let d: i64 = body
            .parse()
            .map_err(|_| syntax(format!("bad radicand in {s}")))?;
        return FieldDescriptor::quad_ext(d);
    }
    if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let (size, modulus) = match inner.split_once(';') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (inner.trim(), None),
        };
        let (p, k) = match size.split_once('^') {
            Some((p, k)) => (p.trim(), Some(k.trim())),
            None => (size, None),
        };
        let p: u64 = p.parse().map_err(|_| syntax(format!("bad characteristic in {s}")))?;
        let k: u32 = match k {
            Some(k) => k.parse().map_err(|_| syntax(format!("bad exponent in {s}")))?,
            None => 1,
        };
        return match (k, modulus) {
            (1, None) => FieldDescriptor::prime_field_capped(p, cap),
            (1, Some(_)) => Err(syntax(format!("{s}: prime fields take no modulus"))),
            (_, None) => Err(syntax(format!("{s}: extension fields need an explicit modulus"))),
            (k, Some(m)) => {
                let coeffs = parse_int_poly(m, 'x')?;
                let nonneg: Vec<u64> = coeffs
                    .iter()
                    .map(|c| c.rem_euclid(p.max(1) as i64) as u64)
                    .collect();
                let desc = FieldDescriptor::ext_field_capped(p, nonneg, cap)?;
                if desc.degree() != k as usize {
                    return Err(syntax(format!("{s}: modulus degree differs from K = {k}")));
                }
                Ok(desc)
            }
        };
    }
    Err(syntax(format!("unrecognized field literal {s:?}")))
}

/// Splits `text` into signed terms at top-level `+`/`-`, skipping signs
/// inside parentheses and a leading sign.
pub(crate) fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(syntax(format!("unbalanced parentheses in {text:?}")));
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.is_empty() {
                    if terms.is_empty() && ch == '-' {
                        negative = !negative;
                        continue;
                    }
                    if terms.is_empty() && ch == '+' {
                        continue;
                    }
                    return Err(syntax(format!("dangling sign in {text:?}")));
                }
                // a sign right after '/' or '*' belongs to the operand
                if current.ends_with('/') || current.ends_with('*') || current.ends_with('^') {
                    return Err(syntax(format!("misplaced sign in {text:?}")));
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(syntax(format!("unbalanced parentheses in {text:?}")));
    }
    if current.is_empty() {
        return Err(syntax(format!("empty term in {text:?}")));
    }
    terms.push((negative, current));
    Ok(terms)
}

/// Splits a term `c*v^k`, `c*v`, `v^k`, `v`, or `c` into its coefficient
/// text (empty when implicit) and exponent.
pub(crate) fn split_monomial(term: &str, var: char) -> Result<(String, usize)> {
    let bytes: Vec<char> = term.chars().collect();
    // locate a top-level occurrence of the variable
    let mut depth = 0;
    let mut var_pos = None;
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == var && depth == 0 => var_pos = Some(i),
            _ => {}
        }
    }
    let Some(pos) = var_pos else {
        return Ok((term.to_string(), 0));
    };
    let tail: String = bytes[pos + 1..].iter().collect();
    let degree = if tail.is_empty() {
        1
    } else if let Some(e) = tail.strip_prefix('^') {
        e.parse::<usize>()
            .map_err(|_| syntax(format!("bad exponent in term {term:?}")))?
    } else {
        return Err(syntax(format!("unexpected text after {var} in {term:?}")));
    };
    let mut coef: String = bytes[..pos].iter().collect();
    if let Some(stripped) = coef.strip_suffix('*') {
        coef = stripped.to_string();
        if coef.is_empty() {
            return Err(syntax(format!("missing coefficient in {term:?}")));
        }
    }
    if coef.starts_with('(') && coef.ends_with(')') {
        coef = coef[1..coef.len() - 1].to_string();
    }
    Ok((coef, degree))
}

/// Parses a polynomial with integer coefficients, lowest degree first.
pub(crate) fn parse_int_poly(text: &str, var: char) -> Result<Vec<i64>> {
    let mut out: Vec<i64> = Vec::new();
    for (neg, term) in split_signed_terms(text)? {
        let (coef, deg) = split_monomial(&term, var)?;
        let c: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .map_err(|_| syntax(format!("bad integer coefficient {coef:?}")))?
        };
        if out.len() <= deg {
            out.resize(deg + 1, 0);
        }
        out[deg] += if neg { -c } else { c };
    }
    Ok(out)
}

fn parse_int(s: &str) -> Result<BigInt> {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(format!("bad integer {s:?}")));
    }
    s.parse().map_err(|_| syntax(format!("bad integer {s:?}")))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            if d.starts_with('-') {
                return Err(syntax(format!("denominator must be positive in {s:?}")));
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::NotInField(format!("{s}: zero denominator")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn parse_quad(s: &str, d: i64) -> Result<(BigRational, BigRational)> {
    let Some(idx) = s.find("sqrt(") else {
        return Ok((parse_rational(s)?, BigRational::zero()));
    };
    let radicand = s[idx + 5..]
        .strip_suffix(')')
        .ok_or_else(|| syntax(format!("unterminated sqrt in {s:?}")))?;
    let r: i64 = radicand
        .parse()
        .map_err(|_| syntax(format!("bad radicand in {s:?}")))?;
    if r != d {
        return Err(Error::NotInField(format!("sqrt({r}) is not in Q(sqrt {d})")));
    }
    let head = &s[..idx];
    let head = head.strip_suffix('*').unwrap_or(head);
    // split "a+b" / "a-b" at the last sign that is not leading
    let split = head
        .char_indices()
        .rfind(|&(i, c)| i > 0 && (c == '+' || c == '-'));
    let (a, b_text) = match split {
        Some((i, _)) => (parse_rational(&head[..i])?, &head[i..]),
        None => (BigRational::zero(), head),
    };
    let b_text = b_text.strip_prefix('+').unwrap_or(b_text);
    let b = match b_text {
        "" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t)?,
    };
    Ok((a, b))
}

/// Parses an element literal into the given field, normalizing it.
pub fn parse_element(text: &str, field: &Field) -> Result<FieldElement> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(syntax("empty element literal"));
    }
    match &**field {
        FieldDescriptor::Rational => Ok(field.from_rational(&parse_rational(&s)?)?),
        FieldDescriptor::QuadExt { d } => {
            let (a, b) = parse_quad(&s, *d)?;
            field.quad(a, b)
        }
        FieldDescriptor::PrimeField { .. } => Ok(field.from_bigint(&parse_int(&s)?)),
        FieldDescriptor::ExtField { .. } => field.ext_element(&parse_int_poly(&s, 't')?),
    }
}
