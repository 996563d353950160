//! The textual expression language for scalars and forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' INT)?
//! atom   := '(' expr ')' | FUNC '(' expr ')' | GEN | 'm' | 'mb' | 'i' | INT
//! FUNC   := d | del | delbar | conj | star | astar
//! GEN    := s1 | s2 | dm | sb1 | sb2 | dmb | dz1 | dz2 | dzb1 | dzb2
//! ```
//!
//! `*` is scalar multiplication or wedge depending on the operands. `^`
//! binds tighter than unary minus, so `-m^2` is `-(m^2)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exterior::{DzForm, DzGenerator, Form, Generator, Monomial};
use crate::hodge::HermitianMetric;
use crate::scalar::{GaussianRational, RationalFunction, Var};

/// Byte range `[start, end)` in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span { start: self.start.min(other.start), end: self.end.max(other.end) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Type,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{} error at {}..{}: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Type => "type" }, .span.start, .span.end)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
    pub message: String,
}

impl ParseError {
    fn syntax(span: Span, message: impl Into<String>) -> Self {
        Self { kind: ParseErrorKind::Syntax, span, message: message.into() }
    }

    fn typing(span: Span, message: impl Into<String>) -> Self {
        Self { kind: ParseErrorKind::Type, span, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    D,
    Del,
    Delbar,
    Conj,
    Star,
    Astar,
}

impl Func {
    pub const ALL: [Func; 6] = [Func::D, Func::Del, Func::Delbar, Func::Conj, Func::Star, Func::Astar];

    pub fn name(self) -> &'static str {
        match self {
            Func::D => "d",
            Func::Del => "del",
            Func::Delbar => "delbar",
            Func::Conj => "conj",
            Func::Star => "star",
            Func::Astar => "astar",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Sigma(Generator),
    Dz(DzGenerator),
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::Sigma(g) => g.name(),
            Gen::Dz(g) => g.name(),
        }
    }

    pub fn from_name(name: &str) -> Option<Gen> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .map(Gen::Sigma)
            .or_else(|| DzGenerator::ALL.into_iter().filter(|g| g.index() < 4).find(|g| g.name() == name).map(Gen::Dz))
    }

    pub fn value(self) -> Form {
        match self {
            Gen::Sigma(g) => Form::gen(g),
            Gen::Dz(g) => DzForm::gen(g).to_sigma(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    I,
    Var(Var),
    Gen(Gen),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Apply(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

/// Whether a subexpression is a function or may be a form of positive degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Scalar,
    Form,
}

impl Expr {
    fn new(kind: ExprKind, span: Span) -> Self {
        Self { kind, span }
    }

    /// Builds an expression with an empty span, for programmatic construction.
    pub fn synthetic(kind: ExprKind) -> Self {
        Self::new(kind, Span { start: 0, end: 0 })
    }

    pub fn grade(&self) -> Grade {
        use ExprKind::*;
        match &self.kind {
            Int(_) | I | Var(_) => Grade::Scalar,
            Gen(_) => Grade::Form,
            Neg(a) | Pow(a, _) => a.grade(),
            Apply(Func::Conj, a) => a.grade(),
            Apply(_, _) => Grade::Form,
            Add(a, b) | Sub(a, b) | Mul(a, b) => {
                if a.grade() == Grade::Form || b.grade() == Grade::Form {
                    Grade::Form
                } else {
                    Grade::Scalar
                }
            }
            Div(a, _) => a.grade(),
        }
    }

    /// Rejects powers of forms and forms in denominators.
    pub fn typecheck(&self) -> std::result::Result<(), ParseError> {
        use ExprKind::*;
        match &self.kind {
            Int(_) | I | Var(_) | Gen(_) => Ok(()),
            Neg(a) | Apply(_, a) => a.typecheck(),
            Pow(a, _) => {
                a.typecheck()?;
                if a.grade() == Grade::Form {
                    return Err(ParseError::typing(self.span, "power of a form"));
                }
                Ok(())
            }
            Div(a, b) => {
                a.typecheck()?;
                b.typecheck()?;
                if b.grade() == Grade::Form {
                    return Err(ParseError::typing(b.span, "form in denominator"));
                }
                Ok(())
            }
            Add(a, b) | Sub(a, b) | Mul(a, b) => {
                a.typecheck()?;
                b.typecheck()
            }
        }
    }

    fn precedence(&self) -> u8 {
        use ExprKind::*;
        match &self.kind {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match &self.kind {
            Int(n) => write!(f, "{n}"),
            I => f.write_str("i"),
            Var(crate::scalar::Var::M) => f.write_str("m"),
            Var(crate::scalar::Var::Mb) => f.write_str("mb"),
            Gen(g) => f.write_str(g.name()),
            Apply(func, a) => write!(f, "{}({a})", func.name()),
            Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Pow(a, n) => {
                wrap(f, a, 5)?;
                write!(f, "^{n}")
            }
            Add(a, b) | Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(if matches!(self.kind, Add(..)) { " + " } else { " - " })?;
                wrap(f, b, 2)
            }
            Mul(a, b) | Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str(if matches!(self.kind, Mul(..)) { "*" } else { "/" })?;
                wrap(f, b, 3)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer;

impl Lexer {
    fn tokens(text: &str) -> std::result::Result<Vec<(Tok, Span)>, ParseError> {
        let bytes = text.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), Span { start, end: i }));
            } else if c.is_ascii_alphabetic() {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), Span { start, end: i }));
            } else if b"+-*/^()".contains(&c) {
                i += 1;
                out.push((Tok::Sym(c as char), Span { start, end: i }));
            } else {
                let ch = text[start..].chars().next().expect("nonempty");
                return Err(ParseError::syntax(
                    Span { start, end: start + ch.len_utf8() },
                    format!("unexpected character `{ch}`"),
                ));
            }
        }
        out.push((Tok::End, Span { start: text.len(), end: text.len() }));
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
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

    fn expect(&mut self, c: char) -> std::result::Result<Span, ParseError> {
        if *self.peek() == Tok::Sym(c) {
            Ok(self.bump().1)
        } else {
            Err(ParseError::syntax(self.span(), format!("expected `{c}`, found {}", describe(self.peek()))))
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => ExprKind::Add as fn(Box<Expr>, Box<Expr>) -> ExprKind,
                Tok::Sym('-') => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(op(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => ExprKind::Mul as fn(Box<Expr>, Box<Expr>) -> ExprKind,
                Tok::Sym('/') => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(op(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn factor(&mut self) -> std::result::Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            let start = self.bump().1;
            let inner = self.factor()?;
            let span = start.join(inner.span);
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> std::result::Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.bump() {
            (Tok::Int(n), span) => {
                let e = n.to_u32().ok_or_else(|| ParseError::syntax(span, "exponent too large"))?;
                let span = base.span.join(span);
                Ok(Expr::new(ExprKind::Pow(Box::new(base), e), span))
            }
            (tok, span) => Err(ParseError::syntax(span, format!("expected integer exponent, found {}", describe(&tok)))),
        }
    }

    fn atom(&mut self) -> std::result::Result<Expr, ParseError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Expr::new(ExprKind::Int(n), span)),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                let close = self.expect(')')?;
                Ok(Expr { span: span.join(close), ..inner })
            }
            Tok::Ident(name) => {
                if let Some(func) = Func::from_name(&name) {
                    self.expect('(')?;
                    let arg = self.expr()?;
                    let close = self.expect(')')?;
                    return Ok(Expr::new(ExprKind::Apply(func, Box::new(arg)), span.join(close)));
                }
                let kind = match name.as_str() {
                    "m" => ExprKind::Var(Var::M),
                    "mb" => ExprKind::Var(Var::Mb),
                    "i" => ExprKind::I,
                    other => match Gen::from_name(other) {
                        Some(g) => ExprKind::Gen(g),
                        None => return Err(ParseError::syntax(span, format!("unknown identifier `{other}`"))),
                    },
                };
                Ok(Expr::new(kind, span))
            }
            other => Err(ParseError::syntax(span, format!("expected an operand, found {}", describe(&other)))),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

/// Parses and type-checks an expression.
pub fn parse(text: &str) -> std::result::Result<Expr, ParseError> {
    let mut p = Parser { tokens: Lexer::tokens(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::syntax(p.span(), format!("unexpected {}", describe(p.peek()))));
    }
    e.typecheck()?;
    Ok(e)
}

fn as_scalar(f: &Form) -> Option<RationalFunction> {
    if f.terms().all(|(m, _)| *m == Monomial::ONE) {
        Some(f.coefficient(Monomial::ONE))
    } else {
        None
    }
}

/// Evaluates to a form; scalars are forms of degree 0. `star` and `astar`
/// need a metric.
pub fn evaluate(e: &Expr, metric: Option<&HermitianMetric>) -> Result<Form> {
    use ExprKind::*;
    let scalar_operand = |f: Form, span: Span, what: &str| -> Result<RationalFunction> {
        as_scalar(&f).ok_or_else(|| Error::Parse(ParseError::typing(span, format!("{what} of a form"))))
    };
    Ok(match &e.kind {
        Int(n) => Form::scalar(RationalFunction::constant(GaussianRational::from(n.clone()))),
        I => Form::scalar(RationalFunction::i()),
        Var(v) => Form::scalar(RationalFunction::var(*v)),
        Gen(g) => g.value(),
        Neg(a) => -&evaluate(a, metric)?,
        Add(a, b) => &evaluate(a, metric)? + &evaluate(b, metric)?,
        Sub(a, b) => &evaluate(a, metric)? - &evaluate(b, metric)?,
        Mul(a, b) => evaluate(a, metric)?.wedge(&evaluate(b, metric)?),
        Div(a, b) => {
            let den = scalar_operand(evaluate(b, metric)?, b.span, "division by")?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            evaluate(a, metric)?.scale(&RationalFunction::one().checked_div(&den)?)
        }
        Pow(a, n) => Form::scalar(scalar_operand(evaluate(a, metric)?, a.span, "power")?.pow(*n)),
        Apply(func, a) => {
            let x = evaluate(a, metric)?;
            match func {
                Func::D => x.d(),
                Func::Del => x.del()?,
                Func::Delbar => x.delbar()?,
                Func::Conj => x.conjugate(),
                Func::Star => metric.ok_or(Error::MetricRequired("star"))?.star(&x)?,
                Func::Astar => metric.ok_or(Error::MetricRequired("astar"))?.antilinear_star(&x)?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, metric: Option<&HermitianMetric>) -> Result<Form> {
    evaluate(&parse(text)?, metric)
}

/// Canonical text of an evaluated form; parses back to the same form.
pub fn print(f: &Form) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(text: &str) -> Form {
        eval_str(text, None).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("a").unwrap_err().kind, ParseErrorKind::Syntax);
        assert_eq!(parse("m + mb * m").unwrap().to_string(), "m + mb*m");
        assert!(matches!(parse("-m^2").unwrap().kind, ExprKind::Neg(_)));
        assert_eq!(ev("-m^2"), Form::scalar(-RationalFunction::m().pow(2)));
        assert_eq!(ev("2^3"), Form::scalar(RationalFunction::integer(8)));
        assert_eq!(ev("1 - 2 - 3"), Form::scalar(RationalFunction::integer(-4)));
        assert_eq!(ev("8/2/2"), Form::scalar(RationalFunction::integer(2)));
    }

    #[test]
    fn sigma_bar_from_flat_frame() {
        assert_eq!(ev("(mb*dzb1 - dz2)/(1+m*mb)"), Form::gen(Generator::Sb1));
        assert_eq!(ev("(mb*dzb2 + dz1)/(1+m*mb)"), Form::gen(Generator::Sb2));
    }

    #[test]
    fn type_errors() {
        let e = parse("s1^2").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Type);
        assert!(e.to_string().contains("power of a form"));
        let e = parse("m/(1 + s1)").unwrap_err();
        assert_eq!((e.kind, e.span), (ParseErrorKind::Type, Span { start: 2, end: 10 }));
        assert!(e.to_string().contains("form in denominator"));
        assert!(matches!(eval_str("star(s1)", None), Err(Error::MetricRequired("star"))));
        assert!(matches!(eval_str("1/(m - m)", None), Err(Error::DivisionByZero)));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse("m + * s1").unwrap_err();
        assert_eq!((e.kind, e.span.start), (ParseErrorKind::Syntax, 4));
        assert_eq!(parse("(m").unwrap_err().span.start, 2);
        assert_eq!(parse("m $").unwrap_err().span.start, 2);
        assert_eq!(parse("d s1").unwrap_err().span.start, 2);
    }

    #[test]
    fn leibniz_example() {
        let lhs = ev("d(m*sb1)");
        let rhs = &ev("dm*sb1") + &ev("m*d(sb1)");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn printing() {
        assert_eq!(print(&ev("m^2*sb1*sb2")), "m^2 * sb1*sb2");
        assert_eq!(print(&ev("sb1*s1")), "-1 * s1*sb1");
        for text in ["0", "dm", "mb/(1+m*mb) * s1 - i*sb2", "(1+2*i)/3 * s1*dm + m", "-(m + 1)/m^2 * dmb"] {
            let f = ev(text);
            assert_eq!(ev(&print(&f)), f, "{text} -> {}", print(&f));
        }
        assert_eq!(print(&ev("d(dm)")), "0");
    }
}
