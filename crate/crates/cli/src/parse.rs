//! Text forms accepted on the command line: the `a^e` polynomial syntax
//! and comma-separated number lists.

use constacyclic::{Fp, PolyFp};

/// Parse a polynomial in the variable `a` over F_p.
///
/// Terms are `[coef]`, `[coef]a`, or `[coef]a^exp`, joined by `+`/`-`;
/// whitespace is ignored and integer coefficients of either sign are
/// canonicalized mod p.  Examples: `a^7-1`, `a^3+a+1`, `2a^2-3a`, `17`.
pub fn parse_poly(fp: Fp, text: &str) -> Result<PolyFp, String> {
    let src: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err("empty polynomial".to_string());
    }
    let bytes = src.as_bytes();
    let mut i = 0usize;
    let mut terms: Vec<(i64, usize)> = Vec::new();
    while i < bytes.len() {
        let mut sign = 1i64;
        let mut saw_sign = false;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            saw_sign = true;
            i += 1;
        }
        if i >= bytes.len() {
            return Err("dangling sign at the end of the polynomial".to_string());
        }
        if !terms.is_empty() && !saw_sign {
            return Err(format!(
                "missing + or - before {:?}",
                &src[i..i + 1]
            ));
        }
        let digits_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i64> = if i > digits_start {
            Some(
                src[digits_start..i]
                    .parse::<i64>()
                    .map_err(|_| format!("coefficient too large: {}", &src[digits_start..i]))?,
            )
        } else {
            None
        };
        let exp: usize;
        if i < bytes.len() && bytes[i] == b'a' {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let exp_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == exp_start {
                    return Err("missing exponent after ^".to_string());
                }
                exp = src[exp_start..i]
                    .parse::<usize>()
                    .ok()
                    .filter(|&e| e <= 10_000)
                    .ok_or_else(|| format!("exponent too large: {}", &src[exp_start..i]))?;
            } else {
                exp = 1;
            }
        } else if coef.is_some() {
            exp = 0;
        } else {
            return Err(format!(
                "unexpected character {:?} in polynomial",
                src[i..].chars().next().expect("checked in-bounds")
            ));
        }
        terms.push((sign * coef.unwrap_or(1), exp));
    }
    let deg = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let mut acc = vec![0i64; deg + 1];
    for (c, e) in terms {
        acc[e] = acc[e]
            .checked_add(c)
            .ok_or_else(|| "coefficient overflow".to_string())?;
    }
    Ok(PolyFp::from_signed(fp, &acc))
}

/// Parse a comma-separated list of nonnegative integers; an empty string
/// is an empty list.
pub fn parse_list(text: &str) -> Result<Vec<u32>, String> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| format!("not a number: {:?}", s.trim()))
        })
        .collect()
}
