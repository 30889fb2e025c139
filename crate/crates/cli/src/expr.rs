//! Expression grammar for superring elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit. Identifier parities are declared out of
//! band in a [`Context`], which assigns generator ids in lexicographic order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use superimmanant::superring::{Generator, Parity, SuperPoly};
use superimmanant::Q;

use crate::error::CliError;

/// Generator ids handed out to declared names stay below the library's reserved ranges.
pub const MAX_DECLARED: usize = 1_000_000;

/// Declared generator names and their parities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    by_name: BTreeMap<String, Generator>,
    by_gen: BTreeMap<Generator, String>,
}

impl Context {
    pub fn new<'a, I: IntoIterator<Item = (&'a str, Parity)>>(decls: I) -> Result<Self, CliError> {
        let mut sorted: BTreeMap<String, Parity> = BTreeMap::new();
        for (name, p) in decls {
            if !is_identifier(name) {
                return Err(CliError::Input(format!("{name:?} is not a valid generator name")));
            }
            if sorted.insert(name.to_string(), p).is_some_and(|q| q != p) {
                return Err(CliError::Input(format!("generator {name} declared with two parities")));
            }
        }
        if sorted.len() > MAX_DECLARED {
            return Err(CliError::Input(format!("at most {MAX_DECLARED} generators may be declared")));
        }
        let mut ctx = Context::default();
        for (k, (name, p)) in sorted.into_iter().enumerate() {
            let g = Generator::new(k as u32, p);
            ctx.by_gen.insert(g, name.clone());
            ctx.by_name.insert(name, g);
        }
        Ok(ctx)
    }

    /// Library generators (e.g. the entries of the generic matrix) under their default names.
    pub fn builtin<I: IntoIterator<Item = Generator>>(gens: I) -> Self {
        let mut ctx = Context::default();
        for g in gens {
            ctx.by_name.insert(g.default_name(), g);
            ctx.by_gen.insert(g, g.default_name());
        }
        ctx
    }

    /// The generic matrix entries x_ij of size (m|n).
    pub fn generic_matrix(m: usize, n: usize) -> Self {
        let d = m + n;
        Context::builtin((1..=d).flat_map(|i| (1..=d).map(move |j| Generator::matrix(i, j, m))))
    }

    /// The supersymmetric variables x_1..x_m, y_1..y_n.
    pub fn symmetric(m: usize, n: usize) -> Self {
        Context::builtin((1..=m).map(Generator::sym_x).chain((1..=n).map(Generator::sym_y)))
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.by_name.get(name).copied()
    }

    /// The declared name, or the library's default name for built-in generators.
    pub fn name(&self, g: Generator) -> String {
        self.by_gen.get(&g).cloned().unwrap_or_else(|| g.default_name())
    }

    pub fn len(&self) -> usize {
        self.by_name.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_name.is_empty()
    }

    pub fn display(&self, p: &SuperPoly) -> String {
        p.display_with(|g| self.name(g))
    }

    pub fn parse(&self, src: &str) -> Result<SuperPoly, CliError> {
        let tokens = tokenize(src)?;
        let mut p = Parser { src, tokens, pos: 0, ctx: self };
        let v = p.expr()?;
        match p.peek() {
            None => Ok(v),
            Some(t) => Err(p.error_at(t.at, "expected an operator or end of input")),
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(h) if h.is_ascii_alphabetic() || h == '_') && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    at: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>, CliError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(at, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                it.next();
            }
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), at });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_') {
                s.push(d);
                it.next();
            }
            out.push(Token { tok: Tok::Ident(s), at });
        } else if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), at });
            it.next();
        } else {
            return Err(CliError::Parse { src: src.to_string(), at, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn at(&self) -> usize {
        self.peek().map_or(self.src.len(), |t| t.at)
    }

    fn error_at(&self, at: usize, msg: &str) -> CliError {
        CliError::Parse { src: self.src.to_string(), at, msg: msg.to_string() }
    }

    fn eat(&mut self, op: char) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Op(c), .. }) if *c == op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, CliError> {
        match self.peek().cloned() {
            Some(Token { tok: Tok::Int(v), .. }) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error_at(self.at(), "expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<SuperPoly, CliError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SuperPoly, CliError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let at = self.at();
            let rhs = self.unary()?;
            acc = acc.checked_mul(&rhs).map_err(|e| self.error_at(at, &e.to_string()))?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SuperPoly, CliError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<SuperPoly, CliError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.at();
        let e = self.integer()?.to_u32().ok_or_else(|| self.error_at(at, "exponent too large"))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<SuperPoly, CliError> {
        let start = self.at();
        match self.peek().cloned() {
            Some(Token { tok: Tok::Int(p), .. }) => {
                self.pos += 1;
                if !self.eat('/') {
                    return Ok(SuperPoly::constant(Q::from_integer(p)));
                }
                let at = self.at();
                let q = self.integer()?;
                if q.is_zero() {
                    return Err(self.error_at(at, "zero denominator"));
                }
                Ok(SuperPoly::constant(Q::new(p, q)))
            }
            Some(Token { tok: Tok::Ident(name), .. }) => {
                self.pos += 1;
                let g = self.ctx.generator(&name).ok_or_else(|| self.error_at(start, &format!("undeclared generator {name}")))?;
                Ok(SuperPoly::gen(g))
            }
            Some(Token { tok: Tok::Op('('), .. }) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error_at(self.at(), "expected ')'"));
                }
                Ok(v)
            }
            _ => Err(self.error_at(start, "expected a number, generator or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::new([("a", Parity::Even), ("b", Parity::Even), ("p", Parity::Odd), ("q", Parity::Odd)]).unwrap()
    }

    fn g(c: &Context, n: &str) -> SuperPoly {
        SuperPoly::gen(c.generator(n).unwrap())
    }

    #[test]
    fn ids_follow_lexicographic_order() {
        let c = Context::new([("z", Parity::Even), ("b", Parity::Odd), ("a1", Parity::Even)]).unwrap();
        assert_eq!(c.generator("a1").unwrap(), Generator::new(0, Parity::Even));
        assert_eq!(c.generator("b").unwrap(), Generator::new(1, Parity::Odd));
        assert_eq!(c.generator("z").unwrap(), Generator::new(2, Parity::Even));
    }

    #[test]
    fn arithmetic() {
        let c = ctx();
        let (a, b, p, q) = (g(&c, "a"), g(&c, "b"), g(&c, "p"), g(&c, "q"));
        assert_eq!(c.parse("2*a - 3/4*b").unwrap(), &(SuperPoly::int(2) * a.clone()) - &b.scale(&Q::new(3.into(), 4.into())));
        assert_eq!(c.parse("(a + b)^2").unwrap(), &(&a + &b) * &(&a + &b));
        assert_eq!(c.parse("p*q + q*p").unwrap(), SuperPoly::zero());
        assert_eq!(c.parse("q*p").unwrap(), -(&p * &q));
        assert_eq!(c.parse("p^2").unwrap(), SuperPoly::zero());
        assert_eq!(c.parse("--a").unwrap(), a);
        assert_eq!(c.parse("6/4").unwrap(), SuperPoly::constant(Q::new(3.into(), 2.into())));
    }

    #[test]
    fn display_round_trips() {
        let c = ctx();
        for s in ["0", "1", "-a + 2*b^3*p*q - 5/7", "a*p - b*q", "(a - b)*(a + p*q)"] {
            let v = c.parse(s).unwrap();
            assert_eq!(c.parse(&c.display(&v)).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn errors() {
        let c = ctx();
        for (s, at) in [("a b", 2), ("2 a", 2), ("a +", 3), ("(a", 2), ("x", 0), ("1/0", 2), ("a / b", 2), ("a $ b", 2), ("", 0)] {
            match c.parse(s) {
                Err(CliError::Parse { at: got, .. }) => assert_eq!(got, at, "{s}"),
                other => panic!("{s}: {other:?}"),
            }
        }
        assert!(Context::new([("a", Parity::Even), ("a", Parity::Odd)]).is_err());
        assert!(Context::new([("1a", Parity::Even)]).is_err());
    }

    #[test]
    fn builtin_names() {
        let c = Context::generic_matrix(1, 1);
        assert_eq!(c.parse("x12").unwrap(), SuperPoly::gen(Generator::matrix(1, 2, 1)));
        assert_eq!(c.parse("x12*x21 + x21*x12").unwrap(), SuperPoly::zero());
        assert_eq!(Context::symmetric(1, 1).parse("x_1 - y_1").unwrap().len(), 2);
    }
}
