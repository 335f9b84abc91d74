use std::str::FromStr;

use super::{AlgebraError, Field, Poly};

/// Integer coefficient list of a polynomial as written, lowest degree first,
/// before reduction into a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyText {
    pub coeffs: Vec<i64>,
}

impl PolyText {
    /// Maps each integer to a field code; negative integers become negated codes.
    pub fn reduce<F: Field + ?Sized>(&self, field: &F) -> Result<Poly, AlgebraError> {
        let q = field.order();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let v = c.unsigned_abs();
                if v >= q {
                    return Err(AlgebraError::BadCoefficient(c, q));
                }
                Ok(if c < 0 { field.neg(v) } else { v })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

fn parse_err(text: &str, reason: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

impl FromStr for PolyText {
    type Err = AlgebraError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(parse_err(text, "empty input"));
        }
        if s.contains(',') || s.chars().all(|c| c.is_ascii_digit() || c == '-') {
            let coeffs = s
                .split(',')
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|e| parse_err(text, e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Self { coeffs });
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with('^') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(parse_err(text, "dangling sign"));
            }
            let (coef, power) = match body.find(['t', 'x']) {
                None => (body, 0usize),
                Some(pos) => {
                    let exp = &body[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .ok_or_else(|| parse_err(text, format!("bad term {term:?}")))?
                            .parse::<usize>()
                            .map_err(|e| parse_err(text, e.to_string()))?
                    };
                    (body[..pos].trim_end_matches('*'), power)
                }
            };
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse::<i64>()
                    .map_err(|e| parse_err(text, format!("{term:?}: {e}")))?
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] += sign * c;
        }
        Ok(Self { coeffs })
    }
}

/// Parses `"1,1,1"` or `"t^2+t+1"` into a polynomial over `field`.
pub fn parse_poly<F: Field + ?Sized>(text: &str, field: &F) -> Result<Poly, AlgebraError> {
    text.parse::<PolyText>()?.reduce(field)
}

/// Human form, highest degree first, coefficients as field codes.
pub fn format_poly(g: &Poly, var: char) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, &c) in g.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    parts.join("+")
}
