use num_traits::ToPrimitive;

use super::{MultiPoly, VanEstError};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, VanEstError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start + 1, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start + 1, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i + 1, Tok::Op(c)));
            i += 1;
        } else {
            return Err(VanEstError::Parse { column: i + 1, message: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Fn(&str) -> Option<usize>> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    nvars: usize,
    resolve: &'a F,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, VanEstError> {
        Err(VanEstError::Parse { column: self.column(), message: message.into() })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, VanEstError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, VanEstError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let col = self.column();
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                if rhs.degree() > 0 || rhs.is_zero() {
                    return Err(VanEstError::Parse { column: col, message: "division by a non-constant or zero".into() });
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / rhs.constant_term()));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, VanEstError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, VanEstError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((_, Tok::Num(n))) => {
                    let Some(k) = n.to_u32().filter(|&k| k <= 64) else {
                        return self.err("exponent too large");
                    };
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, VanEstError> {
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.nvars, Rational::from_integer(n)))
            }
            Tok::Ident(name) => match (self.resolve)(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(MultiPoly::var(self.nvars, i))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => self.err(format!("unexpected '{c}'")),
        }
    }
}

/// Parses a polynomial over the variables accepted by `resolve`, which maps
/// a name to its index in `0..nvars`. Columns in errors are 1-based.
pub fn parse_poly_with(s: &str, nvars: usize, resolve: &impl Fn(&str) -> Option<usize>) -> Result<MultiPoly, VanEstError> {
    let toks = lex(s)?;
    let end = s.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end, nvars, resolve };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Variables `x1..xd` (and `y1..yd` when `with_y`), indexed `x` first.
pub fn parse_poly(s: &str, d: usize, with_y: bool) -> Result<MultiPoly, VanEstError> {
    let nvars = if with_y { 2 * d } else { d };
    let resolve = |name: &str| {
        let (head, idx) = name.split_at(1);
        let i: usize = idx.parse().ok()?;
        if i == 0 || i > d || idx.starts_with('0') {
            return None;
        }
        match head {
            "x" => Some(i - 1),
            "y" if with_y => Some(d + i - 1),
            _ => None,
        }
    };
    parse_poly_with(s, nvars, &resolve)
}

pub(crate) fn variable_names(d: usize, with_y: bool) -> Vec<String> {
    let mut names: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    if with_y {
        names.extend((1..=d).map(|i| format!("y{i}")));
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::vanest::Monomial;

    #[test]
    fn parses_heisenberg_law() {
        let p = parse_poly("x3 + y3 + x1*y2", 3, true).unwrap();
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![1, 0, 0, 0, 1, 0])), rat(1));
        assert_eq!(p.to_string_with(&variable_names(3, true)), "x1*y2 + x3 + y3");
    }

    #[test]
    fn parses_rationals_and_powers() {
        let p = parse_poly("-1/2*(x1 - 2)^2 + 3", 1, false).unwrap();
        assert_eq!(p.constant_term(), rat(1));
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![2])), Rational::new(rat(-1).to_integer(), 2.into()));
    }

    #[test]
    fn reports_columns() {
        assert_eq!(
            parse_poly("x1 + z2", 2, false),
            Err(VanEstError::Parse { column: 6, message: "unknown variable 'z2'".into() })
        );
        assert!(matches!(parse_poly("x1 / x1", 1, false), Err(VanEstError::Parse { column: 6, .. })));
        assert!(matches!(parse_poly("(x1 + 1", 1, false), Err(VanEstError::Parse { column: 8, .. })));
        assert!(matches!(parse_poly("x1 $", 1, false), Err(VanEstError::Parse { column: 4, .. })));
        assert!(parse_poly("y1", 1, false).is_err());
        assert!(parse_poly("x3", 2, true).is_err());
    }
}
