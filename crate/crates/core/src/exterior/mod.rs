//! Graded exterior algebra on six generators over the scalar field.
//!
//! An [`ExteriorForm`] is parameterized by a [`Frame`], which names the six
//! generators and fixes how conjugation permutes them. The twistor frame
//! [`Sigma`] (`s1, s2, dm ; sb1, sb2, dmb`) carries the structure equations;
//! the [`Dz`] frame (`dz1, dz2, dzb1, dzb2, dm, dmb`) has closed generators and
//! serves as an independent route for `d`.

mod frames;
mod sigma;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::RationalFunction;

pub use frames::{Dz, DzGenerator, Generator, Sigma};
pub use sigma::{del_delbar, exterior_derivative, d_oracle, DzForm, Form};

/// Names the generators of a frame and how conjugation permutes them.
pub trait Frame: Copy + Clone + fmt::Debug + PartialEq + Eq + Hash + Default + Send + Sync + 'static {
    const NAMES: [&'static str; 6];
    /// Index of the conjugate of each generator.
    const CONJUGATE: [usize; 6];
}

/// A frame whose generators have pure bidegree.
pub trait Bigraded: Frame {
    /// Bitmask of the `(1,0)` generators; the remaining three are `(0,1)`.
    const HOLOMORPHIC_MASK: u8;
}

/// A wedge product of distinct generators, stored as a bitmask in canonical
/// (ascending index) order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);
    pub const FULL: Monomial = Monomial(0b11_1111);

    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 64, "six generators");
        Monomial(bits)
    }

    pub fn generator(index: usize) -> Self {
        Monomial(1 << index)
    }

    /// Builds the monomial from generator indices in any order, returning the
    /// sign of the sorting permutation, or `None` on a repeated generator.
    pub fn from_indices(indices: &[usize]) -> Option<(i8, Monomial)> {
        let mut acc = Monomial::ONE;
        let mut sign = 1;
        for &i in indices {
            let (s, m) = acc.wedge(Monomial::generator(i))?;
            sign *= s;
            acc = m;
        }
        Some((sign, acc))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..6).filter(move |i| self.0 & (1 << i) != 0)
    }

    pub fn complement(self) -> Monomial {
        Monomial(!self.0 & 0b11_1111)
    }

    pub fn all() -> impl Iterator<Item = Monomial> {
        (0u8..64).map(Monomial)
    }

    /// `self ^ other` as a signed canonical monomial, `None` if they share a generator.
    pub fn wedge(self, other: Monomial) -> Option<(i8, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // count inversions: generators of `self` sitting above a generator of `other`
        let inversions: u32 = other
            .indices()
            .map(|j| (self.0 >> (j + 1)).count_ones())
            .sum();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial(self.0 | other.0)))
    }

    pub fn bidegree<F: Bigraded>(self) -> (usize, usize) {
        let p = (self.0 & F::HOLOMORPHIC_MASK).count_ones() as usize;
        (p, self.degree() - p)
    }

    fn sort_key(self) -> (usize, [u8; 6]) {
        let mut key = [u8::MAX; 6];
        for (slot, i) in key.iter_mut().zip(self.indices()) {
            *slot = i as u8;
        }
        (self.degree(), key)
    }

    pub fn display<F: Frame>(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        self.indices().map(|i| F::NAMES[i]).collect::<Vec<_>>().join("*")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By degree, then lexicographically on the generator sequence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:06b})", self.0)
    }
}

/// Result of a bidegree query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bidegree {
    Zero,
    Pure(usize, usize),
    Mixed,
}

/// Finite sum of monomials with nonzero rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExteriorForm<F: Frame> {
    terms: BTreeMap<Monomial, RationalFunction>,
    frame: PhantomData<F>,
}

impl<F: Frame> Default for ExteriorForm<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Frame> ExteriorForm<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), frame: PhantomData }
    }

    pub fn scalar(f: RationalFunction) -> Self {
        Self::term(f, Monomial::ONE)
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunction::one())
    }

    pub fn term(coef: RationalFunction, mono: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(mono, &coef);
        out
    }

    pub fn generator(index: usize) -> Self {
        Self::term(RationalFunction::one(), Monomial::generator(index))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, RationalFunction)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RationalFunction)> {
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

    pub fn coefficient(&self, mono: Monomial) -> RationalFunction {
        self.terms.get(&mono).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coef: &RationalFunction) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot = &*slot + coef;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coef.clone());
            }
        }
    }

    /// Degree of a homogeneous form; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        if f.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * f)).collect(),
            frame: PhantomData,
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((sign, m)) = ma.wedge(*mb) {
                    let c = ca * cb;
                    out.add_term(m, &if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Complex conjugation: generators follow `F::CONJUGATE`, coefficients are
    /// conjugated, and the image is re-sorted into canonical order.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let images: Vec<usize> = mono.indices().map(|i| F::CONJUGATE[i]).collect();
            let (sign, m) = Monomial::from_indices(&images).expect("conjugation is a permutation");
            let c = c.conjugate();
            out.add_term(m, &if sign < 0 { -c } else { c });
        }
        out
    }

    /// Applies the algebra homomorphism sending generator `k` to `images[k]`.
    pub fn substitute<G: Frame>(&self, images: &[ExteriorForm<G>; 6]) -> ExteriorForm<G> {
        let mut out = ExteriorForm::<G>::zero();
        for (mono, c) in &self.terms {
            let mut acc = ExteriorForm::<G>::scalar(c.clone());
            for i in mono.indices() {
                acc = acc.wedge(&images[i]);
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// Applies a precomputed homomorphism, see [`MonomialMap`].
    pub fn apply<G: Frame>(&self, map: &MonomialMap<G>) -> ExteriorForm<G> {
        let mut out = ExteriorForm::<G>::zero();
        for (mono, c) in &self.terms {
            for (image, d) in &map.images[mono.bits() as usize].terms {
                out.add_term(*image, &(c * d));
            }
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

/// An algebra homomorphism tabulated on all 64 monomials, so that applying it
/// costs one multiplication per output term.
#[derive(Clone)]
pub struct MonomialMap<G: Frame> {
    images: Vec<ExteriorForm<G>>,
}

impl<G: Frame> MonomialMap<G> {
    /// The homomorphism sending generator `k` to `generators[k]`.
    pub fn new<F: Frame>(generators: &[ExteriorForm<G>; 6]) -> Self {
        let images = (0..64u8)
            .map(|bits| ExteriorForm::<F>::term(RationalFunction::one(), Monomial::from_bits(bits)).substitute(generators))
            .collect();
        Self { images }
    }

    pub fn image(&self, mono: Monomial) -> &ExteriorForm<G> {
        &self.images[mono.bits() as usize]
    }
}

impl<F: Bigraded> ExteriorForm<F> {
    pub fn bidegree(&self) -> Bidegree {
        let mut it = self.terms.keys().map(|m| m.bidegree::<F>());
        let Some(first) = it.next() else {
            return Bidegree::Zero;
        };
        if it.all(|b| b == first) {
            Bidegree::Pure(first.0, first.1)
        } else {
            Bidegree::Mixed
        }
    }

    /// The `(p, q)` component.
    pub fn project(&self, p: usize, q: usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.bidegree::<F>() == (p, q))
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// All nonzero bidegree components, keyed by `(p, q)`.
    pub fn components(&self) -> BTreeMap<(usize, usize), Self> {
        let mut out: BTreeMap<(usize, usize), Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree::<F>()).or_default().add_term(*m, c);
        }
        out
    }
}

impl<'a, F: Frame> Add<&'a ExteriorForm<F>> for &'a ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn add(self, rhs: &ExteriorForm<F>) -> ExteriorForm<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a, F: Frame> Sub<&'a ExteriorForm<F>> for &'a ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn sub(self, rhs: &ExteriorForm<F>) -> ExteriorForm<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<F: Frame> Neg for &ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn neg(self) -> ExteriorForm<F> {
        ExteriorForm {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            frame: PhantomData,
        }
    }
}

impl<'a, F: Frame> Mul<&'a ExteriorForm<F>> for &'a ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn mul(self, rhs: &ExteriorForm<F>) -> ExteriorForm<F> {
        self.wedge(rhs)
    }
}

impl<F: Frame> Add for ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Frame> Sub for ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Frame> Neg for ExteriorForm<F> {
    type Output = ExteriorForm<F>;
    fn neg(self) -> Self {
        -&self
    }
}

/// Coefficient text for use in front of ` * monomial` or as a summand.
pub(crate) fn coefficient_text(c: &RationalFunction) -> String {
    if c.is_polynomial() && c.numerator().len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Canonical, parser-compatible text, e.g. `m^2 * sb1*sb2 - s1*sb1`.
impl<F: Frame> fmt::Display for ExteriorForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_like();
            let abs = if neg { -c } else { c.clone() };
            let body = if *mono == Monomial::ONE {
                coefficient_text(&abs)
            } else if abs.is_one() {
                if idx == 0 && neg {
                    // keep the sign visibly attached to a coefficient
                    format!("1 * {}", mono.display::<F>())
                } else {
                    mono.display::<F>()
                }
            } else {
                format!("{} * {}", coefficient_text(&abs), mono.display::<F>())
            };
            match (idx, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<F: Frame> fmt::Debug for ExteriorForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_wedge_signs() {
        let a = Monomial::generator(3);
        let b = Monomial::generator(0);
        assert_eq!(a.wedge(b), Some((-1, Monomial::from_bits(0b1001))));
        assert_eq!(b.wedge(a), Some((1, Monomial::from_bits(0b1001))));
        assert_eq!(a.wedge(a), None);
        let (s, m) = Monomial::from_indices(&[2, 0, 1]).unwrap();
        assert_eq!((s, m), (1, Monomial::from_bits(0b111)));
        let (s, _) = Monomial::from_indices(&[1, 0]).unwrap();
        assert_eq!(s, -1);
    }

    #[test]
    fn monomial_order_is_graded() {
        let mut all: Vec<Monomial> = Monomial::all().collect();
        all.sort();
        assert_eq!(all[0], Monomial::ONE);
        assert_eq!(all[1], Monomial::generator(0));
        assert_eq!(*all.last().unwrap(), Monomial::FULL);
        assert!(Monomial::from_bits(0b000011) < Monomial::from_bits(0b000101));
    }
}
