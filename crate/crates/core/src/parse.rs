//! Polynomial input syntax.
//!
//! Two forms are accepted:
//!
//! * an expression in `x` built from integer literals, `+ - * ^` and
//!   parentheses, e.g. `x^3 - 2`, `3x^2 + x`, `(x+1)*(x^2+2)`;
//! * an ascending comma-separated coefficient list, e.g. `2,2,1,1`.
//!
//! Whitespace is ignored everywhere. A missing coefficient means 1 and a
//! missing exponent means 1; juxtaposition (`2x`, `(x+1)(x-1)`) multiplies.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::PolyError;
use crate::poly::IntPoly;

pub fn parse_polynomial(text: &str, degree_cap: usize) -> Result<IntPoly, PolyError> {
    if text.contains(',') {
        return parse_list(text);
    }
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        degree_cap,
    };
    let poly = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(syntax(tok.pos, format!("unexpected {}", tok.kind.describe())));
    }
    Ok(poly)
}

fn parse_list(text: &str) -> Result<IntPoly, PolyError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        let trimmed: String = field.chars().filter(|c| !c.is_whitespace()).collect();
        let lead_ws = field.len() - field.trim_start().len();
        if trimmed.is_empty() {
            return Err(syntax(offset + lead_ws, "empty coefficient".into()));
        }
        let value: BigInt = trimmed
            .parse()
            .map_err(|_| syntax(offset + lead_ws, format!("invalid integer '{trimmed}'")))?;
        coeffs.push(value);
        offset += field.len() + 1;
    }
    Ok(IntPoly::new(coeffs))
}

fn syntax(position: usize, message: String) -> PolyError {
    PolyError::Syntax { position, message }
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Int(v) => format!("integer {v}"),
            Kind::X => "'x'".into(),
            Kind::Plus => "'+'".into(),
            Kind::Minus => "'-'".into(),
            Kind::Star => "'*'".into(),
            Kind::Caret => "'^'".into(),
            Kind::LParen => "'('".into(),
            Kind::RParen => "')'".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("ascii digits");
                out.push(Token {
                    kind: Kind::Int(v),
                    pos: start,
                });
                continue;
            }
            b'x' | b'X' => Kind::X,
            b'+' => Kind::Plus,
            b'-' => Kind::Minus,
            b'*' => Kind::Star,
            b'^' => Kind::Caret,
            b'(' => Kind::LParen,
            b')' => Kind::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push(Token { kind, pos: i });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
    degree_cap: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn check_degree(&self, p: &IntPoly, at: usize) -> Result<(), PolyError> {
        match p.degree() {
            Some(d) if d > self.degree_cap => Err(PolyError::DegreeCap {
                position: at,
                cap: self.degree_cap,
            }),
            _ => Ok(()),
        }
    }

    // expr := ('+'|'-')? term (('+'|'-') term)*
    fn expr(&mut self) -> Result<IntPoly, PolyError> {
        let negate = if self.eat(&Kind::Minus) {
            true
        } else {
            self.eat(&Kind::Plus);
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat(&Kind::Plus) {
                acc = add(&acc, &self.term()?);
            } else if self.eat(&Kind::Minus) {
                acc = add(&acc, &-&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    // term := power (('*')? power)*
    fn term(&mut self) -> Result<IntPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            let at = self.here();
            let explicit = self.eat(&Kind::Star);
            let starts_factor = matches!(
                self.peek().map(|t| &t.kind),
                Some(Kind::Int(_) | Kind::X | Kind::LParen)
            );
            if !explicit && !starts_factor {
                return Ok(acc);
            }
            let rhs = self.power()?;
            acc = &acc * &rhs;
            self.check_degree(&acc, at)?;
        }
    }

    // power := atom ('^' uint)?
    fn power(&mut self) -> Result<IntPoly, PolyError> {
        let base = self.atom()?;
        if !self.eat(&Kind::Caret) {
            return Ok(base);
        }
        let at = self.here();
        let exp = match self.peek().map(|t| t.kind.clone()) {
            Some(Kind::Int(v)) => {
                self.pos += 1;
                v
            }
            _ => return Err(syntax(at, "expected exponent".into())),
        };
        let cap = BigInt::from(self.degree_cap);
        if exp > cap {
            return Err(PolyError::DegreeCap {
                position: at,
                cap: self.degree_cap,
            });
        }
        let e: usize = exp.try_into().expect("bounded by cap");
        let base_deg = base.degree().unwrap_or(0);
        if base_deg.saturating_mul(e) > self.degree_cap {
            return Err(PolyError::DegreeCap {
                position: at,
                cap: self.degree_cap,
            });
        }
        Ok(base.pow(e))
    }

    // atom := int | 'x' | '(' expr ')'
    fn atom(&mut self) -> Result<IntPoly, PolyError> {
        let at = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(at, "unexpected end of input".into()));
        };
        self.pos += 1;
        match tok.kind {
            Kind::Int(v) => Ok(IntPoly::constant(v)),
            Kind::X => Ok(IntPoly::monomial(1)),
            Kind::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Kind::RParen) {
                    return Err(syntax(self.here(), "expected ')'".into()));
                }
                Ok(inner)
            }
            other => Err(syntax(tok.pos, format!("unexpected {}", other.describe()))),
        }
    }
}

fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let coeffs = (0..n)
        .map(|i| {
            let mut c = a.coeffs().get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = b.coeffs().get(i) {
                c += d;
            }
            c
        })
        .collect();
    IntPoly::new(coeffs)
}
