//! Seeded generators of random scalars and forms for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Form, Monomial};
use crate::scalar::{GaussianRational, Polynomial, RationalFunction};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_gaussian<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let c = GaussianRational::from_ints(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
        if !num_traits::Zero::is_zero(&c) {
            return c;
        }
    }
}

pub fn polynomial<R: Rng>(rng: &mut R) -> Polynomial {
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms((0..terms).map(|_| ((rng.gen_range(0..=2), rng.gen_range(0..=2)), small_gaussian(rng))))
}

/// A nonzero rational function, sometimes with the denominator `1 + m mb`.
pub fn rational_function<R: Rng>(rng: &mut R) -> RationalFunction {
    loop {
        let num = polynomial(rng);
        if num.is_zero() {
            continue;
        }
        let den = match rng.gen_range(0..4) {
            0 => Polynomial::from_terms([((0, 0), GaussianRational::integer(1)), ((1, 1), GaussianRational::integer(1))]),
            1 => Polynomial::from_terms([((0, 0), GaussianRational::integer(2)), ((1, 0), GaussianRational::integer(1))]),
            _ => Polynomial::one(),
        };
        return RationalFunction::new(num, den).expect("nonzero denominator");
    }
}

fn form_from<R: Rng>(rng: &mut R, candidates: &[Monomial]) -> Form {
    let terms = rng.gen_range(1..=3);
    loop {
        let f = Form::from_terms(
            (0..terms).map(|_| (candidates[rng.gen_range(0..candidates.len())], rational_function(rng))),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

/// A nonzero form of bidegree `(p, q)`.
pub fn form_of_bidegree<R: Rng>(rng: &mut R, p: usize, q: usize) -> Form {
    let candidates: Vec<Monomial> = Monomial::all().filter(|m| m.bidegree::<crate::exterior::Sigma>() == (p, q)).collect();
    form_from(rng, &candidates)
}

/// A random bidegree `(p, q)` with `0 <= p, q <= 3`.
pub fn bidegree<R: Rng>(rng: &mut R) -> (usize, usize) {
    (rng.gen_range(0..=3), rng.gen_range(0..=3))
}

/// A nonzero form with terms of arbitrary degrees.
pub fn form<R: Rng>(rng: &mut R) -> Form {
    let candidates: Vec<Monomial> = Monomial::all().collect();
    form_from(rng, &candidates)
}
