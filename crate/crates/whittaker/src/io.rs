//! Text and JSON formats for polynomials, fillings, tableaux and patterns.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use thiserror::Error;
use whittaker_core::{Filling, GtPattern, LaurentPoly, Partition, Ssyt};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad polynomial record: {0}")]
    Schema(String),
    #[error("line {line}: {token:?} is not a positive integer")]
    Token { line: usize, token: String },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Core(#[from] whittaker_core::Error),
}

pub fn poly_to_value(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let coef = Number::from_str(&c.to_string()).expect("integer literal");
            json!({ "coef": coef, "t": e.t_exp(), "x": e.x_exps() })
        })
        .collect();
    json!({ "rank": p.rank(), "terms": terms })
}

/// `{"rank": n, "terms": [{"coef", "t", "x"}]}`, terms in canonical order.
pub fn poly_to_json(p: &LaurentPoly) -> String {
    poly_to_value(p).to_string()
}

fn int_field(v: &Value, key: &str) -> Result<i64, ParseError> {
    v.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| ParseError::Schema(format!("missing integer {key:?}")))
}

pub fn poly_from_value(v: &Value) -> Result<LaurentPoly, ParseError> {
    let rank = usize::try_from(int_field(v, "rank")?)
        .map_err(|_| ParseError::Schema("negative rank".into()))?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::Schema("missing \"terms\" array".into()))?;
    let mut out = LaurentPoly::zero(rank);
    for term in terms {
        let coef = match term.get("coef") {
            Some(Value::Number(n)) => BigInt::from_str(&n.to_string())
                .map_err(|_| ParseError::Schema(format!("non-integer coefficient {n}")))?,
            _ => return Err(ParseError::Schema("missing \"coef\"".into())),
        };
        let t = i32::try_from(int_field(term, "t")?)
            .map_err(|_| ParseError::Schema("t out of range".into()))?;
        let x: Vec<i32> = term
            .get("x")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::Schema("missing \"x\" array".into()))?
            .iter()
            .map(|e| e.as_i64().and_then(|e| i32::try_from(e).ok()))
            .collect::<Option<_>>()
            .ok_or_else(|| ParseError::Schema("bad x exponent".into()))?;
        if x.len() != rank {
            return Err(ParseError::Schema(format!(
                "x has {} entries, rank is {rank}",
                x.len()
            )));
        }
        out.try_add_assign(&LaurentPoly::term(coef, t, &x))?;
    }
    Ok(out)
}

pub fn poly_from_json(text: &str) -> Result<LaurentPoly, ParseError> {
    poly_from_value(&serde_json::from_str(text)?)
}

/// Rows of whitespace-separated positive integers, top row first. Blank
/// lines and `#` comments are ignored. The one-line compact form printed
/// for fillings and tableaux, such as `122334,2334,355,4`, is also accepted,
/// with one digit per entry.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, raw)| (k + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let compact =
        matches!(lines.as_slice(), [(_, l)] if l.contains(',') && !l.contains(char::is_whitespace));
    let rows: Vec<(usize, Vec<String>)> = if compact {
        let (k, line) = lines[0];
        line.split(',')
            .map(|r| (k, r.chars().map(String::from).collect()))
            .collect()
    } else {
        lines
            .iter()
            .map(|&(k, l)| (k, l.split_whitespace().map(str::to_owned).collect()))
            .collect()
    };
    let mut out = Vec::with_capacity(rows.len());
    for (line, tokens) in rows {
        let row = tokens
            .into_iter()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(ParseError::Token { line, token: tok }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.is_empty() {
            return Err(ParseError::Token {
                line,
                token: String::new(),
            });
        }
        out.push(row);
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

pub fn format_rows(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .map(|r| r + "\n")
        .collect()
}

pub fn parse_filling(text: &str) -> Result<Filling, ParseError> {
    Ok(Filling::from_rows(&parse_rows(text)?)?)
}

pub fn parse_ssyt(text: &str) -> Result<Ssyt, ParseError> {
    Ok(Ssyt::new(parse_rows(text)?)?)
}

/// Pattern rows may contain zeros, so every row is read token by token.
pub fn parse_gt(text: &str) -> Result<GtPattern, ParseError> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| ParseError::Token {
                    line: k + 1,
                    token: tok.into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(GtPattern::new(rows)?)
}

/// Comma-separated parts; the empty string is the zero partition.
pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    Ok(Partition::new(parse_list(text)?)?)
}

/// Comma- or space-separated positive integers.
pub fn parse_list(text: &str) -> Result<Vec<usize>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| ParseError::Token {
                line: 1,
                token: tok.into(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_monomial() {
        assert_eq!(
            poly_to_json(&LaurentPoly::zero(3)),
            r#"{"rank":3,"terms":[]}"#
        );
        let p = LaurentPoly::term(-1, 3, &[2, 0]);
        assert_eq!(
            poly_to_json(&p),
            r#"{"rank":2,"terms":[{"coef":-1,"t":3,"x":[2,0]}]}"#
        );
    }

    #[test]
    fn big_coefficients_survive() {
        let big = BigInt::from(7).pow(40);
        let p = LaurentPoly::term(big, 1, &[]);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn malformed() {
        assert!(poly_from_json("{").is_err());
        assert!(poly_from_json(r#"{"rank":1,"terms":[{"coef":1,"t":0,"x":[]}]}"#).is_err());
        assert!(parse_rows("1 x").is_err());
        assert!(parse_rows("").is_err());
    }

    #[test]
    fn rows() {
        assert_eq!(
            parse_rows("1 2 2\n# c\n\n3").unwrap(),
            vec![vec![1, 2, 2], vec![3]]
        );
        assert_eq!(
            parse_rows("122334,2334,355,4").unwrap()[1],
            vec![2, 3, 3, 4]
        );
        assert_eq!(parse_rows("12").unwrap(), vec![vec![12]]);
        assert!(parse_rows("12,,3").is_err());
        assert_eq!(parse_rows("1 10\n2").unwrap(), vec![vec![1, 10], vec![2]]);
        assert_eq!(
            parse_partition("").unwrap(),
            Partition::new(vec![]).unwrap()
        );
        assert_eq!(parse_partition("2,1").unwrap().parts(), &[2, 1]);
        assert_eq!(parse_gt("2 1 0\n2 1\n1").unwrap().rows().len(), 3);
    }
}
