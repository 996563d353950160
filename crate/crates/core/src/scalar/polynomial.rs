use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;

/// Exponent pair `(deg_m, deg_mb)`.
pub type Exponent = (u32, u32);

/// The two fiber variables `m` (= mu) and `mb` (= conj(mu)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    M,
    Mb,
}

impl Var {
    pub fn conj(self) -> Var {
        match self {
            Var::M => Var::Mb,
            Var::Mb => Var::M,
        }
    }
}

/// Sparse polynomial in `m`, `mb` over `Q(i)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, GaussianRational>,
}

/// Graded-lex key with `m > mb`.
fn grlex(e: &Exponent) -> (u32, u32) {
    (e.0 + e.1, e.0)
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: GaussianRational, deg_m: u32, deg_mb: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_m, deg_mb), c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::M => Self::monomial(GaussianRational::one(), 1, 0),
            Var::Mb => Self::monomial(GaussianRational::one(), 0, 1),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, GaussianRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    fn add_term(&mut self, e: Exponent, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(GaussianRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Leading exponent and coefficient under graded-lex order with `m > mb`.
    pub fn leading_term(&self) -> Option<(Exponent, &GaussianRational)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex(e))
            .map(|(e, c)| (*e, c))
    }

    /// Terms in descending graded-lex order (the printing order).
    pub fn sorted_terms(&self) -> Vec<(Exponent, &GaussianRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse(grlex(e)));
        v
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            match v {
                Var::M if a > 0 => out.add_term((a - 1, b), &(c * &GaussianRational::integer(a as i64))),
                Var::Mb if b > 0 => out.add_term((a, b - 1), &(c * &GaussianRational::integer(b as i64))),
                _ => {}
            }
        }
        out
    }

    /// Swaps `m <-> mb` and conjugates every coefficient.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.conj())).collect(),
        }
    }

    pub fn evaluate(&self, m: &GaussianRational, mb: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += &(&(c * &m.pow(a)) * &mb.pow(b));
        }
        acc
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b)| if v == Var::M { a } else { b })
            .max()
            .unwrap_or(0)
    }

    /// Greatest common divisor, normalized monic under graded-lex order.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() || self == other {
            return self.monic();
        }
        if self.as_constant().is_some() || other.as_constant().is_some() || rec::coprime(self, other) {
            return Self::one();
        }
        // Recurse on the variable of lower degree to keep the remainder sequence short.
        let deg = |v| self.degree(v).max(other.degree(v));
        if deg(Var::M) > deg(Var::Mb) {
            let g = rec::gcd(&rec::to_rec(&self.swapped()), &rec::to_rec(&other.swapped()));
            rec::from_rec(&g).swapped().monic()
        } else {
            let g = rec::gcd(&rec::to_rec(self), &rec::to_rec(other));
            rec::from_rec(&g).monic()
        }
    }

    fn swapped(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.inv()?));
        }
        rec::exact_div(&rec::to_rec(self), &rec::to_rec(divisor)).map(|q| rec::from_rec(&q))
    }

    /// Divides by the graded-lex leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, lc)) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

fn fmt_monomial(a: u32, b: u32) -> String {
    let pow = |name: &str, k: u32| match k {
        0 => None,
        1 => Some(name.to_string()),
        k => Some(format!("{name}^{k}")),
    };
    [pow("m", a), pow("mb", b)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Descending graded-lex order, e.g. `m^2*mb - 3*m + i`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((a, b), c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, c) = if c.is_negative_like() { (true, -c) } else { (false, c.clone()) };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(a, b);
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Recursive dense representation `K[mb][m]` used by gcd and exact division.
mod rec {
    use super::*;

    /// Dense univariate polynomial in `mb`, index = degree.
    pub type Uni = Vec<GaussianRational>;
    /// Dense polynomial in `m` with `Uni` coefficients, index = degree in `m`.
    pub type Bi = Vec<Uni>;

    pub fn to_rec(p: &Polynomial) -> Bi {
        let mut out: Bi = vec![Vec::new(); p.degree(Var::M) as usize + 1];
        for (&(a, b), c) in &p.terms {
            let row = &mut out[a as usize];
            if row.len() <= b as usize {
                row.resize(b as usize + 1, GaussianRational::zero());
            }
            row[b as usize] = c.clone();
        }
        bi_trim(out)
    }

    pub fn from_rec(p: &Bi) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (a, row) in p.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((a as u32, b as u32), c.clone());
                }
            }
        }
        Polynomial { terms }
    }

    fn uni_trim(mut u: Uni) -> Uni {
        while u.last().map_or(false, |c| c.is_zero()) {
            u.pop();
        }
        u
    }

    fn bi_trim(p: Bi) -> Bi {
        let mut p: Bi = p.into_iter().map(uni_trim).collect();
        while p.last().map_or(false, |u| u.is_empty()) {
            p.pop();
        }
        p
    }

    fn uni_add(a: &Uni, b: &Uni) -> Uni {
        let n = a.len().max(b.len());
        let zero = GaussianRational::zero();
        uni_trim((0..n).map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero)).collect())
    }

    fn uni_neg(a: &Uni) -> Uni {
        a.iter().map(|c| -c).collect()
    }

    fn uni_mul(a: &Uni, b: &Uni) -> Uni {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        uni_trim(out)
    }

    /// Division with remainder over the field `Q(i)`.
    fn uni_divrem(a: &Uni, b: &Uni) -> (Uni, Uni) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let lc_inv = b.last().unwrap().inv().unwrap();
        let mut r = a.clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![GaussianRational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let coef = r.last().unwrap() * &lc_inv;
            for (k, bc) in b.iter().enumerate() {
                r[shift + k] -= &(&coef * bc);
            }
            q[shift] = coef;
            r = uni_trim(r);
        }
        (uni_trim(q), r)
    }

    fn uni_monic(a: Uni) -> Uni {
        match a.last() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv().unwrap();
                a.iter().map(|c| c * &inv).collect()
            }
            _ => a,
        }
    }

    fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let (_, r) = uni_divrem(&x, &y);
            x = y;
            y = uni_monic(r);
        }
        uni_monic(x)
    }

    fn uni_exact_div(a: &Uni, b: &Uni) -> Option<Uni> {
        let (q, r) = uni_divrem(a, b);
        r.is_empty().then_some(q)
    }

    fn content(p: &Bi) -> Uni {
        let mut g: Uni = Vec::new();
        for c in p {
            if c.is_empty() {
                continue;
            }
            g = if g.is_empty() { uni_monic(c.clone()) } else { uni_gcd(&g, c) };
            if g.len() == 1 {
                break;
            }
        }
        g
    }

    fn div_by_uni(p: &Bi, c: &Uni) -> Bi {
        p.iter()
            .map(|u| if u.is_empty() { Vec::new() } else { uni_exact_div(u, c).expect("content divides") })
            .collect()
    }

    fn primitive_part(p: &Bi) -> Bi {
        let c = content(p);
        div_by_uni(p, &c)
    }

    /// Pseudo-remainder of `a` by `b` in `K[mb][m]`.
    fn prem(a: &Bi, b: &Bi) -> Bi {
        let db = b.len() - 1;
        let lb = b.last().unwrap();
        let mut r = a.clone();
        while r.len() > db && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            let mut next: Bi = r.iter().map(|u| uni_mul(u, lb)).collect();
            for (k, bc) in b.iter().enumerate() {
                let sub = uni_mul(&lr, bc);
                next[shift + k] = uni_add(&next[shift + k], &uni_neg(&sub));
            }
            r = bi_trim(next);
        }
        r
    }

    pub fn gcd(a: &Bi, b: &Bi) -> Bi {
        if a.is_empty() {
            return b.clone();
        }
        if b.is_empty() {
            return a.clone();
        }
        let c = uni_gcd(&content(a), &content(b));
        let (mut x, mut y) = (primitive_part(a), primitive_part(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        let g = loop {
            if y.len() == 1 {
                // primitive and constant in m
                break vec![vec![GaussianRational::one()]];
            }
            let r = prem(&x, &y);
            if r.is_empty() {
                break y;
            }
            x = y;
            y = primitive_part(&r);
        };
        g.iter().map(|u| uni_mul(u, &c)).collect()
    }

    /// Sufficient test for `gcd(p, q) = 1`. For each variable, the other one is
    /// fixed at a small integer and the coefficients are reduced modulo a prime
    /// `P = 1 mod 4` (with `i` sent to a square root of `-1`). When both leading
    /// coefficients survive and the univariate images are coprime, the gcd has
    /// degree zero in that variable.
    pub fn coprime(p: &Polynomial, q: &Polynomial) -> bool {
        [Var::M, Var::Mb].into_iter().all(|v| {
            let (dp, dq) = (p.degree(v) as usize, q.degree(v) as usize);
            if dp == 0 || dq == 0 {
                return true;
            }
            let (Some(pm), Some(qm)) = (modp::reduce(p), modp::reduce(q)) else {
                return false;
            };
            (2..12)
                .map(|c| (modp::specialize(&pm, v, c), modp::specialize(&qm, v, c)))
                .filter(|(a, b)| a.len() == dp + 1 && b.len() == dq + 1)
                .take(2)
                .any(|(a, b)| modp::gcd_degree(a, b) == 0)
        })
    }

    pub fn exact_div(a: &Bi, b: &Bi) -> Option<Bi> {
        let db = b.len() - 1;
        let lb = b.last().unwrap();
        let mut r = a.clone();
        let mut q: Bi = vec![Vec::new(); a.len().saturating_sub(db).max(1)];
        while !r.is_empty() {
            if r.len() <= db {
                return None;
            }
            let shift = r.len() - 1 - db;
            let coef = uni_exact_div(r.last().unwrap(), lb)?;
            for (k, bc) in b.iter().enumerate() {
                let sub = uni_mul(&coef, bc);
                r[shift + k] = uni_add(&r[shift + k], &uni_neg(&sub));
            }
            q[shift] = coef;
            r = bi_trim(r);
        }
        Some(bi_trim(q))
    }
}

/// Arithmetic in `F_P` for fast coprimality certificates.
mod modp {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    use super::{Exponent, GaussianRational, Polynomial, Var};

    const P: u64 = 998_244_353;

    fn mul(a: u64, b: u64) -> u64 {
        a * b % P
    }

    fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn rational(r: &BigRational) -> Option<u64> {
        let p = BigInt::from(P);
        let n = r.numer().mod_floor(&p).to_u64()?;
        let d = r.denom().mod_floor(&p).to_u64()?;
        (d != 0).then(|| mul(n, inv(d)))
    }

    fn gaussian(c: &GaussianRational) -> Option<u64> {
        // 3 generates the multiplicative group, so 3^((P-1)/4) squares to -1.
        let i = pow(3, (P - 1) / 4);
        Some((rational(c.re())? + mul(i, rational(c.im())?)) % P)
    }

    pub fn reduce(p: &Polynomial) -> Option<Vec<(Exponent, u64)>> {
        p.terms.iter().map(|(e, c)| Some((*e, gaussian(c)?))).collect()
    }

    pub fn specialize(p: &[(Exponent, u64)], v: Var, c: u64) -> Vec<u64> {
        let mut out = Vec::new();
        for &((a, b), k) in p {
            let (d, e) = if v == Var::M { (a, b) } else { (b, a) };
            if out.len() <= d as usize {
                out.resize(d as usize + 1, 0);
            }
            out[d as usize] = (out[d as usize] + mul(k, pow(c, e as u64))) % P;
        }
        trim(out)
    }

    fn trim(mut u: Vec<u64>) -> Vec<u64> {
        while u.last() == Some(&0) {
            u.pop();
        }
        u
    }

    /// Degree of the gcd of two nonzero univariate polynomials over `F_P`.
    pub fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        while !b.is_empty() {
            let lc = inv(*b.last().unwrap());
            while a.len() >= b.len() {
                let shift = a.len() - b.len();
                let coef = mul(*a.last().unwrap(), lc);
                for (k, &bc) in b.iter().enumerate() {
                    a[shift + k] = (a[shift + k] + P - mul(coef, bc)) % P;
                }
                a = trim(a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> Polynomial {
        Polynomial::var(Var::M)
    }
    fn mb() -> Polynomial {
        Polynomial::var(Var::Mb)
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::constant(n.into())
    }

    #[test]
    fn leading_term_is_graded_lex_with_m_first() {
        let p = &(&(&m() * &mb()) + &(&mb() * &mb())) + &c(3);
        assert_eq!(p.leading_term().unwrap().0, (1, 1));
        let q = &mb() + &m();
        assert_eq!(q.leading_term().unwrap().0, (1, 0));
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = &c(1) + &(&m() * &mb()); // 1 + m*mb
        let g = &(&m() * &m()) + &c(1); // m^2 + 1
        let h = &mb() - &c(2);
        let a = &(&f * &f) * &h;
        let b = &(&f * &g) * &m();
        assert_eq!(a.gcd(&b), f.monic());
        assert_eq!(g.gcd(&h), Polynomial::one());
        assert_eq!(Polynomial::zero().gcd(&h), h.monic());
    }

    #[test]
    fn gcd_with_gaussian_factor() {
        // (m - i) divides both m^2 + 1 and m*mb - i*mb
        let i = Polynomial::constant(GaussianRational::i());
        let a = &(&m() * &m()) + &c(1);
        let b = &(&m() * &mb()) - &(&i * &mb());
        assert_eq!(a.gcd(&b), &m() - &i);
    }

    #[test]
    fn exact_division() {
        let f = &c(1) + &(&m() * &mb());
        let prod = &f * &(&m() - &mb());
        assert_eq!(prod.exact_div(&f).unwrap(), &m() - &mb());
        assert!(f.exact_div(&m()).is_none());
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let p = &(&(&m() * &m()) * &mb()) - &(&c(3) * &m());
        assert_eq!(p.to_string(), "m^2*mb - 3*m");
    }
}
