use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::polynomial::{Polynomial, Var};
use crate::error::{Error, Result};

/// An element of `Q(i)(m, mb)` in canonical form.
///
/// The numerator and denominator are coprime and the denominator is monic
/// under graded-lex order with `m > mb`, so two equal functions always have
/// identical representations and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.inv().expect("nonzero denominator");
            return Self { num: num.scale(&inv), den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lc = den.leading_term().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Assumes `num` and `den` are coprime; only rescales the denominator.
    fn monic_den(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading_term().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(n.into())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn var(v: Var) -> Self {
        Self::from_polynomial(Polynomial::var(v))
    }

    pub fn m() -> Self {
        Self::var(Var::M)
    }

    pub fn mb() -> Self {
        Self::var(Var::Mb)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Wirtinger-style partial derivative, treating `m` and `mb` as independent.
    pub fn partial(&self, v: Var) -> Self {
        let dn = self.num.partial(v);
        if self.den.is_one() {
            return Self::from_polynomial(dn);
        }
        // With g = gcd(b, b'), (a/b)' = (a' (b/g) - a (b'/g)) / (b (b/g)).
        let dd = self.den.partial(v);
        let g = self.den.gcd(&dd);
        let h = self.den.exact_div(&g).expect("gcd divides");
        let dd = dd.exact_div(&g).expect("gcd divides");
        let num = &(&dn * &h) - &(&self.num * &dd);
        Self::normalize(num, &self.den * &h)
    }

    /// Complex conjugation: swaps `m <-> mb` and conjugates coefficients.
    pub fn conjugate(&self) -> Self {
        let num = self.num.conjugate();
        let den = self.den.conjugate();
        // coprimality survives the automorphism; only the monic scaling moves
        let lc = den.leading_term().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Self { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Substitutes `m := point`, `mb := conj(point)`.
    pub fn evaluate(&self, point: &GaussianRational) -> Result<GaussianRational> {
        let conj = point.conj();
        let d = self.den.evaluate(point, &conj);
        if d.is_zero() {
            return Err(Error::Pole { denominator: self.den.to_string() });
        }
        let n = self.num.evaluate(point, &conj);
        Ok(n.checked_div(&d).unwrap())
    }

    /// True when the printed form should carry a leading minus sign.
    pub fn is_negative_like(&self) -> bool {
        self.num
            .sorted_terms()
            .first()
            .map_or(false, |(_, c)| c.is_negative_like())
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<GaussianRational> for RationalFunction {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_polynomial(&self.num + &rhs.num);
            }
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        // Both operands are reduced, so any common factor of the sum's
        // numerator and denominator divides gcd(b, d).
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            return RationalFunction::monic_den(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.exact_div(&h).expect("gcd divides"), g.exact_div(&h).expect("gcd divides"))
        };
        RationalFunction::monic_den(num, &(&b * &d) * &g)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_polynomial(&self.num * &rhs.num);
        }
        // Cross-cancel so the product of reduced fractions stays reduced.
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RationalFunction::monic_den(&a * &c, &b * &d)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, rhs: &RationalFunction) {
        *self = &*self + rhs;
    }
}

fn cancel(p: &Polynomial, q: &Polynomial) -> (Polynomial, Polynomial) {
    if q.is_one() || p.as_constant().is_some() {
        return (p.clone(), q.clone());
    }
    let g = p.gcd(q);
    if g.is_one() {
        (p.clone(), q.clone())
    } else {
        (p.exact_div(&g).expect("gcd divides"), q.exact_div(&g).expect("gcd divides"))
    }
}

fn needs_parens(p: &Polynomial) -> bool {
    p.len() > 1
}

/// Parser-compatible text; a non-trivial denominator is always parenthesized.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
