//! Text form of potentials: sums of `c*x^k` and `a*cos(b*pi*x)` terms with
//! decimal-string coefficients.

use super::PotentialSpec;
use crate::error::{Result, VismError};
use crate::numeric::PrecisionContext;

pub(crate) fn parse_potential(text: &str, ctx: &PrecisionContext) -> Result<PotentialSpec> {
    let mut pot = PotentialSpec::zero();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(VismError::PotentialParse("empty potential string".into()));
    }
    for (sign, term) in split_terms(trimmed)? {
        parse_term(sign, &term, &mut pot, ctx)?;
    }
    pot.sort_terms();
    Ok(pot)
}

/// Split on top-level + and −, keeping the sign of each term. Signs that
/// belong to exponents of numbers (as in `1e-3`) do not split.
fn split_terms(text: &str) -> Result<Vec<(i32, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = 1;
    let mut prev_non_space: Option<char> = None;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(VismError::PotentialParse("unbalanced parentheses".into()));
                }
            }
            '+' | '-' if depth == 0 => {
                // a sign right after e/E is an exponent, not a term break
                let exp_marker = matches!(prev_non_space, Some('e') | Some('E'));
                if !exp_marker {
                    if !cur.trim().is_empty() {
                        out.push((sign, cur.trim().to_string()));
                        cur.clear();
                        sign = if ch == '-' { -1 } else { 1 };
                    } else if prev_non_space.is_none() {
                        // leading sign of the first term
                        sign = if ch == '-' { -sign } else { sign };
                    } else {
                        return Err(VismError::PotentialParse(format!(
                            "dangling sign in '{text}'"
                        )));
                    }
                    prev_non_space = Some(ch);
                    continue;
                }
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            prev_non_space = Some(ch);
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(VismError::PotentialParse("unbalanced parentheses".into()));
    }
    if cur.trim().is_empty() {
        return Err(VismError::PotentialParse(format!(
            "trailing operator in '{text}'"
        )));
    }
    out.push((sign, cur.trim().to_string()));
    Ok(out)
}

enum Shape {
    Constant,
    Power(u32),
    Cosine { freq: String },
}

fn parse_term(sign: i32, term: &str, pot: &mut PotentialSpec, ctx: &PrecisionContext) -> Result<()> {
    let mut coeff_text: Option<String> = None;
    let mut shape = Shape::Constant;
    for factor in split_factors(term)? {
        let f = factor.trim();
        if f.is_empty() {
            return Err(VismError::PotentialParse(format!("empty factor in '{term}'")));
        }
        if f == "x" || f.starts_with("x^") {
            if !matches!(shape, Shape::Constant) {
                return Err(VismError::PotentialParse(format!(
                    "more than one x or cos factor in '{term}'"
                )));
            }
            let k = if f == "x" {
                1
            } else {
                f[2..].trim().parse::<u32>().map_err(|_| {
                    VismError::PotentialParse(format!("bad exponent in '{f}'"))
                })?
            };
            shape = Shape::Power(k);
        } else if let Some(rest) = f.strip_prefix("cos") {
            let inner = rest.trim();
            if !(inner.starts_with('(') && inner.ends_with(')')) {
                return Err(VismError::PotentialParse(format!(
                    "cos factor must look like cos(b*pi*x), got '{f}'"
                )));
            }
            if !matches!(shape, Shape::Constant) {
                return Err(VismError::PotentialParse(format!(
                    "more than one x or cos factor in '{term}'"
                )));
            }
            let freq = parse_cos_argument(&inner[1..inner.len() - 1])?;
            shape = Shape::Cosine { freq };
        } else if let Some(norm) = normalize_decimal(f) {
            let combined = match coeff_text {
                None => norm,
                Some(prev) => {
                    // numeric factors multiply; fold at working precision
                    let product = &ctx.from_str(&prev)? * &ctx.from_str(&norm)?;
                    product.to_decimal_string(ctx.digits())
                }
            };
            coeff_text = Some(combined);
        } else {
            return Err(VismError::PotentialParse(format!(
                "cannot understand factor '{f}'"
            )));
        }
    }
    let mut coeff = coeff_text.unwrap_or_else(|| "1".to_string());
    if sign < 0 {
        coeff = if let Some(stripped) = coeff.strip_prefix('-') {
            stripped.to_string()
        } else {
            format!("-{coeff}")
        };
    }
    match shape {
        Shape::Constant => {
            let v = ctx.from_str(&coeff)?;
            if !v.is_zero() {
                pot.push_monomial(0, &coeff, ctx)?;
            }
        }
        Shape::Power(k) => pot.push_monomial(k, &coeff, ctx)?,
        Shape::Cosine { freq } => pot.push_cosine(&coeff, &freq, ctx)?,
    }
    Ok(())
}

/// Split a term on top-level '*'.
fn split_factors(term: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in term.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(cur.clone());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    Ok(out)
}

/// Argument of cos(...): `b*pi*x`, `pi*x`, or `b pi x` with * separators.
fn parse_cos_argument(arg: &str) -> Result<String> {
    let factors: Vec<String> = split_factors(arg)?
        .into_iter()
        .map(|f| f.trim().to_string())
        .collect();
    let mut freq: Option<String> = None;
    let mut saw_pi = false;
    let mut saw_x = false;
    for f in &factors {
        if f == "pi" {
            if saw_pi {
                return Err(VismError::PotentialParse("repeated pi in cos".into()));
            }
            saw_pi = true;
        } else if f == "x" {
            if saw_x {
                return Err(VismError::PotentialParse("repeated x in cos".into()));
            }
            saw_x = true;
        } else if let Some(norm) = normalize_decimal(f) {
            if freq.is_some() {
                return Err(VismError::PotentialParse(
                    "more than one numeric factor in cos".into(),
                ));
            }
            freq = Some(norm);
        } else {
            return Err(VismError::PotentialParse(format!(
                "cannot understand cos factor '{f}'"
            )));
        }
    }
    if !(saw_pi && saw_x) {
        return Err(VismError::PotentialParse(
            "cos argument must be of the form b*pi*x".into(),
        ));
    }
    Ok(freq.unwrap_or_else(|| "1".to_string()))
}

pub(crate) fn strip_sign(s: &str) -> &str {
    s.strip_prefix('-').unwrap_or(s)
}

/// Lexical normalization of a decimal string: strips redundant zeros and
/// signs, resolves exponent notation into positional form when the result
/// stays short, otherwise canonical scientific form. Returns None when the
/// text is not a plain decimal number.
pub(crate) fn normalize_decimal(text: &str) -> Option<String> {
    let s = text.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa, exp_part) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], &s[i + 1..]),
        None => (s, ""),
    };
    let exp10: i64 = if exp_part.is_empty() {
        0
    } else {
        exp_part.parse().ok()?
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    // digits with the point removed; point sits after `point` digits
    let digits: String = format!("{int_part}{frac_part}");
    let mut point = int_part.len() as i64 + exp10;
    // strip leading zeros
    let lead = digits.len() - digits.trim_start_matches('0').len();
    let digits = &digits[lead..];
    point -= lead as i64;
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        return Some("0".to_string());
    }
    let n = digits.len() as i64;
    let sign = if neg { "-" } else { "" };
    let body = if (0..=16).contains(&point) && point >= n {
        // integer with trailing zeros
        format!("{digits}{}", "0".repeat((point - n) as usize))
    } else if point >= 1 && point <= n.max(0) {
        if point == n {
            digits.to_string()
        } else {
            format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
        }
    } else if (-6..=0).contains(&point) {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else {
        // canonical scientific: d.ddd e (point-1)
        let head = &digits[..1];
        let tail = &digits[1..];
        if tail.is_empty() {
            format!("{head}e{}", point - 1)
        } else {
            format!("{head}.{tail}e{}", point - 1)
        }
    };
    Some(format!("{sign}{body}"))
}
