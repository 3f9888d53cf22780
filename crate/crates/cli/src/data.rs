//! Factorization-pattern files for the factor-count check: one line per
//! shift value, `shift: deg^mult, deg^mult, ...`, where `shift` is a rational
//! or the word `generic`. Blank lines and lines starting with `#` are skipped.

use closedpoly::family::{DecompositionData, ShiftEntry};
use closedpoly::Rational;

use crate::parse::ParseError;

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a rational like `-3/2`, with surrounding whitespace allowed.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim_start()),
    };
    let valid = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let r = match body.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (n.trim(), d.trim());
            if !valid(n) || !valid(d) || d.bytes().all(|b| b == b'0') {
                return None;
            }
            Rational::new(n.parse().ok()?, d.parse().ok()?)
        }
        None if valid(body) => Rational::from_integer(body.parse().ok()?),
        None => return None,
    };
    Some(if neg { -r } else { r })
}

pub fn parse_stein_data(text: &str, d: Option<u32>) -> Result<DecompositionData, ParseError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((shift, rest)) = raw.split_once(':') else {
            return Err(at(line_no, 1, "expected `shift: deg^mult, ...`"));
        };
        let shift = if shift.trim() == "generic" {
            None
        } else {
            Some(
                parse_rational(shift)
                    .ok_or_else(|| at(line_no, 1, format!("bad shift {:?}", shift.trim())))?,
            )
        };
        let mut factors = Vec::new();
        // byte offset of the current item within the raw line
        let mut offset = raw.len() - rest.len();
        for item in rest.split(',') {
            let item_t = item.trim();
            let column = offset + (item.len() - item.trim_start().len()) + 1;
            offset += item.len() + 1;
            let (deg, mult) = match item_t.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (item_t, "1"),
            };
            match (deg.parse::<u32>(), mult.parse::<u32>()) {
                (Ok(dg), Ok(m)) => factors.push((dg, m)),
                _ => return Err(at(line_no, column, format!("bad factor {item_t:?}"))),
            }
        }
        entries.push(ShiftEntry { shift, factors });
    }
    Ok(DecompositionData { entries, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/2"), Some(q(-3, 2)));
        assert_eq!(parse_rational(" 4 "), Some(q(4, 1)));
        assert_eq!(parse_rational("+0"), Some(q(0, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("--1"), None);
    }

    #[test]
    fn data_file() {
        let text = "# shifts\n0: 1^2, 2^1\n-1: 3\n\ngeneric: 3^1\n";
        let data = parse_stein_data(text, Some(3)).unwrap();
        assert_eq!(data.entries.len(), 3);
        assert_eq!(data.entries[0].shift, Some(q(0, 1)));
        assert_eq!(data.entries[0].factors, vec![(1, 2), (2, 1)]);
        assert_eq!(data.entries[1].factors, vec![(3, 1)]);
        assert_eq!(data.entries[2].shift, None);
        assert_eq!(data.d, Some(3));
    }

    #[test]
    fn data_errors() {
        let e = parse_stein_data("0: 1^2\n1 2^1\n", None).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_stein_data("0: 1^2, a^1", None).unwrap_err();
        assert_eq!((e.line, e.column), (1, 9));
        assert!(parse_stein_data("q: 1", None).is_err());
    }
}
