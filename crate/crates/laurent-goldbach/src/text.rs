//! The textual polynomial grammar and its canonical formatter.
//!
//! ```text
//! poly := term ('+' term)*
//! term := nat | nat? 'x' ('^' int)?
//! nat  := [1-9][0-9]*
//! int  := '-'? nat | '0'
//! ```
//!
//! Whitespace between tokens is ignored. An omitted coefficient is 1, an
//! omitted exponent on `x` is 1, and a bare number is a constant term.
//! Duplicate exponents merge by addition. There is no `-`: the semiring has
//! no subtraction, and zero coefficients are not writable.
//!
//! `format_poly` renders the unique canonical form (descending exponents),
//! and `parse_poly(format_poly(f)) == f` holds for every nonzero `f`.

use std::fmt;

use crate::poly::LaurentPoly;

/// A grammar violation, with the byte position and what was expected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// A grammar-valid expression: the source text together with its term list
/// as written, before duplicate exponents merge. Every coefficient is ≥ 1
/// at this level; merging happens when the polynomial is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub terms: Vec<(i64, i64)>,
}

impl PolyExpr {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let terms = Parser::new(text).parse_terms()?;
        Ok(PolyExpr { source: text.to_string(), terms })
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().copied())
            .expect("grammar-level coefficients are positive")
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(b) => format!("'{}'", b as char),
            None => "end of input".to_string(),
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found: self.found(),
        }
    }

    /// nat := [1-9][0-9]*
    fn parse_nat(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(b'1'..=b'9') => {}
            Some(b'0') => return Err(self.error("a nonzero number (zero coefficients are not representable)")),
            _ => return Err(self.error("a digit 1-9")),
        }
        let mut value: i64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(b - b'0')))
                .ok_or_else(|| self.error("a smaller number"))?;
            self.pos += 1;
        }
        Ok(value)
    }

    /// int := '-'? nat | '0'
    fn parse_int(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.parse_nat()?)
            }
            Some(b'0') => {
                self.pos += 1;
                if matches!(self.peek(), Some(b'0'..=b'9')) {
                    return Err(self.error("no digit after a leading zero"));
                }
                Ok(0)
            }
            _ => self.parse_nat(),
        }
    }

    /// term := nat | nat? 'x' ('^' int)?
    fn parse_term(&mut self) -> Result<(i64, i64), ParseError> {
        let coefficient = match self.peek() {
            Some(b'0'..=b'9') => Some(self.parse_nat()?),
            Some(b'x') => None,
            _ => return Err(self.error("a coefficient or 'x'")),
        };
        if self.peek() != Some(b'x') {
            // a bare number is a constant term
            return match coefficient {
                Some(c) => Ok((0, c)),
                None => Err(self.error("a coefficient or 'x'")),
            };
        }
        self.pos += 1; // consume 'x'
        let exponent = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.parse_int()?
        } else {
            1
        };
        Ok((exponent, coefficient.unwrap_or(1)))
    }

    fn parse_terms(&mut self) -> Result<Vec<(i64, i64)>, ParseError> {
        let mut pairs = Vec::new();
        self.skip_ws();
        pairs.push(self.parse_term()?);
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    pairs.push(self.parse_term()?);
                }
                _ => return Err(self.error("'+' or end of input")),
            }
        }
        Ok(pairs)
    }
}

/// Parses the grammar above into a polynomial.
pub fn parse_poly(text: &str) -> Result<LaurentPoly, ParseError> {
    Ok(PolyExpr::parse(text)?.to_poly())
}

/// Canonical rendering: descending exponents, `+` separators, coefficient 1
/// and exponent 1 omitted. The zero polynomial renders as `0`.
pub fn format_poly(f: &LaurentPoly) -> String {
    f.to_string()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            if i > 0 {
                write!(out, "+")?;
            }
            let coefficient_is_one = t.coefficient == 1u32.into();
            if t.exponent == 0 {
                write!(out, "{}", t.coefficient)?;
            } else {
                if !coefficient_is_one {
                    write!(out, "{}", t.coefficient)?;
                }
                if t.exponent == 1 {
                    write!(out, "x")?;
                } else {
                    write!(out, "x^{}", t.exponent)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn parses_the_worked_example() {
        let f = parse_poly("6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6").unwrap();
        assert_eq!(
            f,
            poly(&[(7, 6), (4, 3), (3, 4), (1, 7), (-1, 5), (-4, 3), (-6, 8)])
        );
    }

    #[test]
    fn parses_bare_and_implicit_forms() {
        assert_eq!(parse_poly("x").unwrap(), poly(&[(1, 1)]));
        assert_eq!(parse_poly("7").unwrap(), poly(&[(0, 7)]));
        assert_eq!(parse_poly("x^0").unwrap(), poly(&[(0, 1)]));
        assert_eq!(parse_poly("3x^-2").unwrap(), poly(&[(-2, 3)]));
        assert_eq!(parse_poly("  2x^3 + x ").unwrap(), poly(&[(3, 2), (1, 1)]));
    }

    #[test]
    fn merges_duplicate_exponents() {
        assert_eq!(parse_poly("2x^-3 + x^-3").unwrap(), poly(&[(-3, 3)]));
        // the expression keeps the pre-merge terms as written
        let expr = PolyExpr::parse("2x^-3 + x^-3").unwrap();
        assert_eq!(expr.terms, vec![(-3, 2), (-3, 1)]);
        assert_eq!(expr.to_poly(), poly(&[(-3, 3)]));
    }

    #[test]
    fn rejects_subtraction() {
        let err = parse_poly("x - 1").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.expected.contains("'+'"), "{err}");
    }

    #[test]
    fn rejects_zero_coefficients() {
        assert!(parse_poly("0").is_err());
        assert!(parse_poly("0x^2").is_err());
        assert!(parse_poly("x + 0").is_err());
    }

    #[test]
    fn rejects_malformed_exponents() {
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("x^+2").is_err());
        assert!(parse_poly("x^01").is_err());
        assert!(parse_poly("x^-0").is_err());
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_poly("2x^3 4").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("+x").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_poly(&poly(&[(0, 2)])), "2");
        assert_eq!(format_poly(&poly(&[(7, 4), (2, 3), (1, 1)])), "4x^7+3x^2+x");
        assert_eq!(format_poly(&poly(&[(0, 1), (-2, 1)])), "1+x^-2");
        assert_eq!(format_poly(&LaurentPoly::zero()), "0");
    }

    #[test]
    fn round_trips_the_worked_example() {
        let text = "6x^7+3x^4+4x^3+7x+5x^-1+3x^-4+8x^-6";
        let f = parse_poly(text).unwrap();
        assert_eq!(format_poly(&f), text);
        assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f);
    }
}
