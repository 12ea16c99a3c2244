//! Text syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' ['-'] int)?
//! atom   := int | q | a | b | x0..x3 | c0..c3 | x | y | qint '(' ['-'] int ')'
//!         | '(' expr ')' | '[' word '|' word '|' central ']'
//! word   := '-' | gen ('.' gen)*
//! central:= '-' | ci ('^' ['-'] int)? ('.' ci ('^' ['-'] int)?)*
//! ```
//!
//! Multiplication is always explicit. Negative exponents are accepted on
//! q, a, b and cᵢ only. The bracket atom is a normal-form monomial exactly
//! as printed by [`BoxElem`]'s `Display`, which makes printed output
//! parseable.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::boxtilde::{BoxAlgebra, BoxElem, CentralMono, Gen, NormalMono};
use crate::error::{Error, Result};
use crate::freealg::{FreeElem, FreeWord, Letter};
use crate::qcoeff::{qint, LaurentPoly, Ring};

/// Which atoms are legal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Generators x0..x3, c0..c3 and bracket monomials.
    Box,
    /// Letters x, y of the free algebra.
    Free,
    /// Scalars only.
    Scalar,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Box => "box",
            Mode::Free => "free",
            Mode::Scalar => "scalar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Symbol(String),
    Gen(Gen),
    Central(usize),
    Letter(Letter),
    QInt(i64),
    Mono(NormalMono),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

impl Lexer {
    fn new(input: &str) -> Result<Lexer> {
        let bytes = input.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                toks.push((Tok::Ident(input[start..i].to_string()), start));
            } else if b"+-*^()[]|.".contains(&c) {
                toks.push((Tok::Sym(c as char), i));
                i += 1;
            } else {
                let ch = input[i..].chars().next().expect("in bounds");
                return Err(parse_err(i, format!("unexpected character {ch:?}")));
            }
        }
        toks.push((Tok::End, input.len()));
        Ok(Lexer { toks })
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(self.offset(), format!("expected '{c}'")))
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let off = self.offset();
        match self.bump() {
            (Tok::Int(n), _) => {
                let n = if neg { -n } else { n };
                n.to_i64().ok_or_else(|| parse_err(off, "integer out of range"))
            }
            _ => Err(parse_err(off, "expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let first = self.term_with_sign()?;
        terms.push(first);
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(Expr::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term_with_sign(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.term()?)))
        } else {
            self.term()
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if !self.eat('^') {
            return Ok(atom);
        }
        let off = self.offset();
        let k = self.signed_int()?;
        if k < 0 && !matches!(atom, Expr::Symbol(_) | Expr::Central(_)) {
            return Err(parse_err(off, "negative exponents are only allowed on q, a, b and c0..c3"));
        }
        Ok(Expr::Power(Box::new(atom), k))
    }

    fn check_mode(&self, off: usize, name: &str, ok: bool) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Mode { offset: off, name: name.to_string(), mode: self.mode.name() })
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let off = self.offset();
        match self.bump() {
            (Tok::Int(n), _) => Ok(Expr::Int(n)),
            (Tok::Sym('('), _) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            (Tok::Sym('['), _) => {
                self.check_mode(off, "[", self.mode == Mode::Box)?;
                self.bracket(off)
            }
            (Tok::Ident(name), _) => self.ident(off, &name),
            (Tok::End, _) => Err(parse_err(off, "unexpected end of input")),
            (Tok::Sym(c), _) => Err(parse_err(off, format!("unexpected '{c}'"))),
        }
    }

    fn ident(&mut self, off: usize, name: &str) -> Result<Expr> {
        match name {
            "q" | "a" | "b" => Ok(Expr::Symbol(name.to_string())),
            "x" | "y" => {
                self.check_mode(off, name, self.mode == Mode::Free)?;
                Ok(Expr::Letter(if name == "x" { Letter::X } else { Letter::Y }))
            }
            "qint" => {
                self.expect('(')?;
                let n = self.signed_int()?;
                self.expect(')')?;
                Ok(Expr::QInt(n))
            }
            _ => {
                if let Some(i) = indexed(name, 'x') {
                    self.check_mode(off, name, self.mode == Mode::Box)?;
                    Ok(Expr::Gen(Gen::from_index(i as i64)))
                } else if let Some(i) = indexed(name, 'c') {
                    self.check_mode(off, name, self.mode == Mode::Box)?;
                    Ok(Expr::Central(i))
                } else {
                    Err(parse_err(off, format!("unknown identifier `{name}`")))
                }
            }
        }
    }

    fn word(&mut self) -> Result<Vec<Gen>> {
        if self.eat('-') {
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        loop {
            let off = self.offset();
            match self.bump() {
                (Tok::Ident(name), _) => match indexed(&name, 'x') {
                    Some(i) => w.push(Gen::from_index(i as i64)),
                    None => return Err(parse_err(off, "expected a generator x0..x3")),
                },
                _ => return Err(parse_err(off, "expected a generator x0..x3 or '-'")),
            }
            if !self.eat('.') {
                return Ok(w);
            }
        }
    }

    fn central(&mut self) -> Result<CentralMono> {
        let mut c = CentralMono::one();
        if self.eat('-') {
            return Ok(c);
        }
        loop {
            let off = self.offset();
            let i = match self.bump() {
                (Tok::Ident(name), _) => {
                    indexed(&name, 'c').ok_or_else(|| parse_err(off, "expected a central generator c0..c3"))?
                }
                _ => return Err(parse_err(off, "expected a central generator c0..c3 or '-'")),
            };
            let k = if self.eat('^') { self.signed_int()? } else { 1 };
            c = c.mul(&CentralMono::c(i, k))?;
            if !self.eat('.') {
                return Ok(c);
            }
        }
    }

    fn bracket(&mut self, off: usize) -> Result<Expr> {
        let even = self.word()?;
        self.expect('|')?;
        let odd = self.word()?;
        self.expect('|')?;
        let central = self.central()?;
        self.expect(']')?;
        let m = NormalMono::new(even, odd, central).map_err(|e| parse_err(off, e.to_string()))?;
        Ok(Expr::Mono(m))
    }
}

/// `name` is `prefix` followed by a single digit 0..3.
fn indexed(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    match rest {
        "0" => Some(0),
        "1" => Some(1),
        "2" => Some(2),
        "3" => Some(3),
        _ => None,
    }
}

pub fn parse(input: &str, mode: Mode) -> Result<Expr> {
    let lx = Lexer::new(input)?;
    let mut p = Parser { toks: lx.toks, pos: 0, mode };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(parse_err(p.offset(), "unexpected trailing input")),
    }
}

fn symbol(ring: &Ring, name: &str) -> Result<LaurentPoly> {
    ring.symbol(name).ok_or_else(|| Error::Config(format!("ring has no symbol `{name}`")))
}

fn exponent(k: i64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::Config(format!("exponent {k} out of range")))
}

/// Evaluate a scalar expression (no generators).
pub fn eval_scalar(ring: &Ring, e: &Expr) -> Result<LaurentPoly> {
    Ok(match e {
        Expr::Int(n) => ring.int(n.clone()),
        Expr::Symbol(s) => symbol(ring, s)?,
        Expr::QInt(n) => qint(ring, *n),
        Expr::Neg(a) => -eval_scalar(ring, a)?,
        Expr::Sum(ts) => {
            let mut acc = ring.zero();
            for t in ts {
                acc += eval_scalar(ring, t)?;
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = ring.one();
            for f in fs {
                acc = &acc * &eval_scalar(ring, f)?;
            }
            acc
        }
        Expr::Power(a, k) => eval_scalar(ring, a)?.pow(*k)?,
        Expr::Gen(_) | Expr::Central(_) | Expr::Letter(_) | Expr::Mono(_) => {
            return Err(Error::Config("generator in a scalar expression".into()))
        }
    })
}

/// Evaluate to a normal form.
pub fn eval_box(alg: &BoxAlgebra, e: &Expr) -> Result<BoxElem> {
    let ring = alg.ring();
    Ok(match e {
        Expr::Int(_) | Expr::Symbol(_) | Expr::QInt(_) => alg.scalar(eval_scalar(ring, e)?),
        Expr::Gen(g) => alg.x(g.index() as i64),
        Expr::Central(i) => alg.c(*i as i64, 1),
        Expr::Mono(m) => BoxElem::term(m.clone(), ring.one()),
        Expr::Letter(_) => return Err(Error::Config("free letter in a box expression".into())),
        Expr::Neg(a) => -eval_box(alg, a)?,
        Expr::Sum(ts) => {
            let mut acc = BoxElem::zero();
            for t in ts {
                acc += &eval_box(alg, t)?;
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = alg.one();
            for f in fs {
                acc = alg.mul(&acc, &eval_box(alg, f)?)?;
            }
            acc
        }
        Expr::Power(a, k) => match (a.as_ref(), *k) {
            (Expr::Central(i), k) => alg.c(*i as i64, k),
            (Expr::Symbol(_), _) => alg.scalar(eval_scalar(ring, e)?),
            (a, k) => alg.pow(&eval_box(alg, a)?, exponent(k)?)?,
        },
    })
}

/// Evaluate in the free algebra.
pub fn eval_free(ring: &Ring, e: &Expr) -> Result<FreeElem> {
    Ok(match e {
        Expr::Int(_) | Expr::Symbol(_) | Expr::QInt(_) => FreeElem::scalar(eval_scalar(ring, e)?),
        Expr::Letter(l) => FreeElem::letter(ring, *l),
        Expr::Gen(_) | Expr::Central(_) | Expr::Mono(_) => {
            return Err(Error::Config("box generator in a free expression".into()))
        }
        Expr::Neg(a) => -&eval_free(ring, a)?,
        Expr::Sum(ts) => {
            let mut acc = FreeElem::zero();
            for t in ts {
                acc = &acc + &eval_free(ring, t)?;
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = FreeElem::scalar(ring.one());
            for f in fs {
                acc = &acc * &eval_free(ring, f)?;
            }
            acc
        }
        Expr::Power(a, k) => match a.as_ref() {
            Expr::Symbol(_) => FreeElem::scalar(eval_scalar(ring, e)?),
            a => eval_free(ring, a)?.pow(ring, exponent(*k)?),
        },
    })
}

pub fn parse_box(alg: &BoxAlgebra, input: &str) -> Result<BoxElem> {
    eval_box(alg, &parse(input, Mode::Box)?)
}

pub fn parse_free(ring: &Ring, input: &str) -> Result<FreeElem> {
    eval_free(ring, &parse(input, Mode::Free)?)
}

pub fn parse_scalar(ring: &Ring, input: &str) -> Result<LaurentPoly> {
    eval_scalar(ring, &parse(input, Mode::Scalar)?)
}

/// Free word from a string such as `xyyx`.
pub fn free_word(s: &str) -> Option<FreeWord> {
    s.chars()
        .map(|c| match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(FreeWord)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> BoxAlgebra {
        BoxAlgebra::standard()
    }

    #[test]
    fn reduction_rule_rendering() {
        let a = alg();
        let e = parse_box(&a, "x1*x0").unwrap();
        assert_eq!(e.to_string(), "q^2 * [x0 | x1 | -] + (1 - q^2) * [- | - | c0]");
        assert_eq!(e, parse_box(&a, "q^2*x0*x1 + (1-q^2)*c0").unwrap());
    }

    #[test]
    fn serre_element() {
        let a = alg();
        let e = parse_box(&a, "x0^3*x2 - qint(3)*x0^2*x2*x0 + qint(3)*x0*x2*x0^2 - x2*x0^3").unwrap();
        assert_eq!(e, a.s_element(0).unwrap());
    }

    #[test]
    fn scalars() {
        let ring = Ring::standard();
        assert_eq!(parse_scalar(&ring, "qint(3)").unwrap().to_string(), "q^2 + 1 + q^-2");
        assert_eq!(parse_scalar(&ring, "-q^2").unwrap(), -ring.q_pow(2));
        assert_eq!(parse_scalar(&ring, "qint(-2)").unwrap(), -qint(&ring, 2));
        assert!(parse_box(&alg(), "0").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_offsets() {
        let a = alg();
        assert_eq!(
            parse("x0 *", Mode::Box).unwrap_err(),
            Error::Parse { offset: 4, message: "unexpected end of input".into() }
        );
        assert!(matches!(parse("x0 x1", Mode::Box), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse("q + x", Mode::Box), Err(Error::Mode { offset: 4, mode: "box", .. })));
        assert!(matches!(parse("x0", Mode::Free), Err(Error::Mode { offset: 0, .. })));
        assert!(matches!(parse("x0^-1", Mode::Box), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse("2 # 3", Mode::Box), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("[x1 | - | -]", Mode::Box), Err(Error::Parse { offset: 0, .. })));
        assert!(parse_box(&a, "c0^-3*x1").is_ok());
    }

    #[test]
    fn bracket_round_trip() {
        let a = alg();
        let e = parse_box(&a, "x3*x1*x2*c0^-1 + a*x1*x0*x0 - b^-2*qint(2)*x2").unwrap();
        let printed = e.to_string();
        assert_eq!(parse_box(&a, &printed).unwrap(), e, "{printed}");
    }

    #[test]
    fn free_mode() {
        let ring = Ring::standard();
        let e = parse_free(&ring, "x*y - q^2*y*x + 3").unwrap();
        assert_eq!(e.to_string(), "3 + x*y - q^2 * y*x");
        assert_eq!(parse_free(&ring, &e.to_string()).unwrap(), e);
        assert_eq!(free_word("xyx").unwrap().to_string(), "x*y*x");
    }
}
