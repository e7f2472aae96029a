//! Inline grammars: zeta strings such as `(3t^2+8t^3)/((1+2t)^3)`, integer lists
//! `2,3,4`, and generator lists `7,0;5,1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_poly::{IntPoly, LinearFactorProduct, RationalSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse {:?} at offset {}: {}",
            self.input, self.offset, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    original: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            original: input,
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.original.to_string(),
            offset: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn small_int(&mut self, what: &str) -> Result<u64, ParseError> {
        let digits = self
            .digits()
            .ok_or_else(|| self.error(format!("expected {what}")))?;
        digits
            .parse()
            .map_err(|_| self.error(format!("{what} out of range")))
    }
}

/// Parses `POLY` or `POLY / ( FACTORS )`; whitespace is ignored.
///
/// `POLY` is a sum of terms `c`, `ct`, `ct^k` (optionally `c*t^k`), itself
/// optionally parenthesized. `FACTORS` is a product of `(1+Kt)` and
/// `(1+Kt)^E`; the outer parentheses around a product may be omitted.
pub fn parse_zeta(input: &str) -> Result<RationalSeries, ParseError> {
    let mut cur = Cursor::new(input);
    let numerator = parse_poly(&mut cur)?;
    let denominator = if cur.eat('/') {
        parse_denominator(&mut cur)?
    } else {
        LinearFactorProduct::one()
    };
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(RationalSeries::new(numerator, denominator))
}

fn parse_poly(cur: &mut Cursor) -> Result<IntPoly, ParseError> {
    if cur.peek() == Some('(') {
        cur.pos += 1;
        let p = parse_sum(cur)?;
        cur.expect(')')?;
        Ok(p)
    } else {
        parse_sum(cur)
    }
}

fn parse_sum(cur: &mut Cursor) -> Result<IntPoly, ParseError> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let (c, k) = parse_term(cur)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        if negative {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
        if !matches!(cur.peek(), Some('+' | '-')) {
            break;
        }
    }
    Ok(IntPoly::new(coeffs))
}

fn parse_term(cur: &mut Cursor) -> Result<(BigInt, usize), ParseError> {
    let coeff = cur.digits();
    let has_coeff = coeff.is_some();
    if has_coeff {
        cur.eat('*');
    }
    let c = coeff
        .map(|d| d.parse::<BigInt>().expect("ascii digits"))
        .unwrap_or_else(|| BigInt::from(1));
    if cur.eat('t') {
        let k = if cur.eat('^') {
            cur.small_int("exponent")? as usize
        } else {
            1
        };
        Ok((c, k))
    } else if has_coeff {
        Ok((c, 0))
    } else {
        Err(cur.error("expected a coefficient or 't'"))
    }
}

fn parse_denominator(cur: &mut Cursor) -> Result<LinearFactorProduct, ParseError> {
    if cur.peek() == Some('1') && cur.peek_at(1).is_none() {
        cur.pos += 1;
        return Ok(LinearFactorProduct::one());
    }
    let wrapped = cur.peek() == Some('(') && cur.peek_at(1) == Some('(');
    if wrapped {
        cur.pos += 1;
    }
    let mut factors = Vec::new();
    while cur.peek() == Some('(') {
        let start = cur.pos;
        cur.pos += 1;
        cur.expect('1')?;
        cur.expect('+')?;
        let d = if cur.peek() == Some('t') {
            1
        } else {
            let d = cur.small_int("linear coefficient")?;
            cur.eat('*');
            d
        };
        cur.expect('t')?;
        cur.expect(')')?;
        let e = if cur.eat('^') {
            cur.small_int("exponent")?
        } else {
            1
        };
        if d == 0 {
            cur.pos = start;
            return Err(cur.error("factor (1+0t) is not allowed"));
        }
        factors.extend(std::iter::repeat_n(d, e as usize));
    }
    if wrapped {
        cur.expect(')')?;
    }
    if factors.is_empty() {
        return Err(cur.error("expected a factor (1+Kt)"));
    }
    Ok(LinearFactorProduct::new(factors).expect("factors are positive"))
}

/// Comma-separated signed integers.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>, ParseError> {
    split_list(input, ',')
        .map(|(offset, item)| {
            item.parse::<i64>().map_err(|_| ParseError {
                input: input.to_string(),
                offset,
                message: format!("{item:?} is not an integer"),
            })
        })
        .collect()
}

/// Comma-separated arbitrary-precision integers.
pub fn parse_bigint_list(input: &str) -> Result<Vec<BigInt>, ParseError> {
    split_list(input, ',')
        .map(|(offset, item)| {
            item.parse::<BigInt>().map_err(|_| ParseError {
                input: input.to_string(),
                offset,
                message: format!("{item:?} is not an integer"),
            })
        })
        .collect()
}

/// `a,b;a,b;…` exponent pairs.
pub fn parse_generators(input: &str) -> Result<Vec<(u64, u64)>, ParseError> {
    split_list(input, ';')
        .map(|(offset, item)| {
            let err = |message: String| ParseError {
                input: input.to_string(),
                offset,
                message,
            };
            let parts: Vec<&str> = item.split(',').map(str::trim).collect();
            match parts.as_slice() {
                [a, b] => {
                    let a = a.parse().map_err(|_| err(format!("{a:?} is not a nonnegative integer")))?;
                    let b = b.parse().map_err(|_| err(format!("{b:?} is not a nonnegative integer")))?;
                    Ok((a, b))
                }
                _ => Err(err(format!("{item:?} is not an exponent pair a,b"))),
            }
        })
        .collect()
}

fn split_list(input: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    input
        .split(sep)
        .map(move |item| {
            let at = offset;
            offset += item.len() + sep.len_utf8();
            (at, item.trim())
        })
        .filter(|(_, item)| !item.is_empty())
}
