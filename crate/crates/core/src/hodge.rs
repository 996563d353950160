//! Hermitian metrics given by orthogonal `(1,0)`-coframes, the induced inner
//! product on forms, the volume form, the Hodge stars, and harmonicity tests.
//!
//! A metric is declared by three `(1,0)`-forms `phi_a` and their norms squared
//! `nu_a`. The coframe `phi_1, phi_2, phi_3, conj(phi_1), conj(phi_2),
//! conj(phi_3)` is orthogonal, so every coframe monomial is an eigenvector of
//! the inner product and the antilinear star sends it to a multiple of its
//! complementary monomial. All work happens over the rational function field;
//! identities proven here hold away from the zero locus of the coframe
//! determinant.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exterior::{Bidegree, Bigraded, ExteriorForm, Form, Frame, Monomial, MonomialMap, Sigma};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{GaussianRational, RationalFunction};

/// The orthogonal coframe `phi1, phi2, phi3 ; phib1, phib2, phib3` of a metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coframe;

impl Frame for Coframe {
    const NAMES: [&'static str; 6] = ["phi1", "phi2", "phi3", "phib1", "phib2", "phib3"];
    const CONJUGATE: [usize; 6] = [3, 4, 5, 0, 1, 2];
}

impl Bigraded for Coframe {
    const HOLOMORPHIC_MASK: u8 = 0b000_111;
}

pub type CoframeForm = ExteriorForm<Coframe>;

#[derive(Clone)]
pub struct HermitianMetric {
    coframe: [Form; 3],
    norms: [RationalFunction; 3],
    to_coframe: MonomialMap<Coframe>,
    from_coframe: MonomialMap<Sigma>,
    volume: Form,
    /// Coefficient of the volume form on `phi1*phi2*phi3*phib1*phib2*phib3`.
    volume_density: RationalFunction,
}

impl fmt::Debug for HermitianMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HermitianMetric")
            .field("coframe", &self.coframe)
            .field("norms", &self.norms)
            .finish()
    }
}

impl HermitianMetric {
    pub fn new(coframe: [Form; 3], norms: [RationalFunction; 3]) -> Result<Self> {
        for (a, phi) in coframe.iter().enumerate() {
            if phi.bidegree() != Bidegree::Pure(1, 0) {
                return Err(Error::InvalidMetric(format!("coframe element {} is not a (1,0)-form: {phi}", a + 1)));
            }
        }
        for (a, nu) in norms.iter().enumerate() {
            if nu.is_zero() || !nu.is_real() {
                return Err(Error::InvalidMetric(format!("norm {} must be real and nonzero, got {nu}", a + 1)));
            }
        }
        let top = coframe[0].wedge(&coframe[1]).wedge(&coframe[2]);
        if top.is_zero() {
            return Err(Error::DegenerateCoframe);
        }

        // phi_a = sum_j A[a][j] e_j over the (1,0) generators e_j of the twistor frame
        let matrix: Vec<Vec<RationalFunction>> = coframe
            .iter()
            .map(|phi| (0..3).map(|j| phi.coefficient(Monomial::generator(j))).collect())
            .collect();
        let inverse = linalg::invert(&matrix).ok_or(Error::DegenerateCoframe)?;

        let mut to_coframe: [CoframeForm; 6] = Default::default();
        for j in 0..3 {
            let mut holo = CoframeForm::zero();
            let mut anti = CoframeForm::zero();
            for a in 0..3 {
                holo = &holo + &CoframeForm::generator(a).scale(&inverse[j][a]);
                anti = &anti + &CoframeForm::generator(a + 3).scale(&inverse[j][a].conjugate());
            }
            to_coframe[j] = holo;
            to_coframe[j + 3] = anti;
        }
        let mut from_coframe: [Form; 6] = Default::default();
        for a in 0..3 {
            from_coframe[a] = coframe[a].clone();
            from_coframe[a + 3] = coframe[a].conjugate();
        }

        let mut metric = Self {
            coframe,
            norms,
            to_coframe: MonomialMap::new::<Sigma>(&to_coframe),
            from_coframe: MonomialMap::new::<Coframe>(&from_coframe),
            volume: Form::zero(),
            volume_density: RationalFunction::zero(),
        };
        let omega = metric.fundamental_form();
        let volume = omega
            .wedge(&omega)
            .wedge(&omega)
            .scale(&RationalFunction::constant(GaussianRational::from_fractions((1, 6), (0, 1))));
        if volume.is_zero() {
            return Err(Error::DegenerateCoframe);
        }
        metric.volume_density = metric.to_coframe(&volume).coefficient(Monomial::FULL);
        metric.volume = volume;
        Ok(metric)
    }

    pub fn coframe(&self) -> &[Form; 3] {
        &self.coframe
    }

    pub fn norms(&self) -> &[RationalFunction; 3] {
        &self.norms
    }

    /// `omega = i * sum_a (1/nu_a) phi_a ^ conj(phi_a)`.
    pub fn fundamental_form(&self) -> Form {
        let mut omega = Form::zero();
        for (phi, nu) in self.coframe.iter().zip(&self.norms) {
            let weight = RationalFunction::i().checked_div(nu).expect("norms are nonzero");
            omega = &omega + &phi.wedge(&phi.conjugate()).scale(&weight);
        }
        omega
    }

    /// `omega^3 / 3!`.
    pub fn volume_form(&self) -> &Form {
        &self.volume
    }

    pub fn to_coframe(&self, a: &Form) -> CoframeForm {
        a.apply(&self.to_coframe)
    }

    pub fn from_coframe(&self, a: &CoframeForm) -> Form {
        a.apply(&self.from_coframe)
    }

    /// `<phi_A ^ phib_B, phi_A ^ phib_B>`: the product of the norms involved.
    pub fn basis_norm(&self, mono: Monomial) -> RationalFunction {
        mono.indices()
            .fold(RationalFunction::one(), |acc, i| &acc * &self.norms[i % 3])
    }

    /// The diagonal of the induced inner product on coframe monomials.
    pub fn inner_product_table(&self) -> BTreeMap<(Monomial, Monomial), RationalFunction> {
        Monomial::all().map(|m| ((m, m), self.basis_norm(m))).collect()
    }

    /// Pointwise Hermitian product, linear in `a` and antilinear in `b`.
    pub fn inner_product(&self, a: &Form, b: &Form) -> RationalFunction {
        self.inner_product_coframe(&self.to_coframe(a), &self.to_coframe(b))
    }

    /// [`Self::inner_product`] for forms already expressed in the coframe.
    pub fn inner_product_coframe(&self, ca: &CoframeForm, cb: &CoframeForm) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (mono, fa) in ca.terms() {
            let fb = cb.coefficient(*mono);
            if !fb.is_zero() {
                acc += &(&(fa * &fb.conjugate()) * &self.basis_norm(*mono));
            }
        }
        acc
    }

    /// The conjugate-linear star: `alpha ^ astar(beta) = <alpha, beta> vol`,
    /// sending `(p, q)` to `(3 - p, 3 - q)`.
    pub fn antilinear_star(&self, a: &Form) -> Result<Form> {
        if a.bidegree() == Bidegree::Mixed {
            return Err(Error::NonHomogeneous { form: a.to_string() });
        }
        let mut out = CoframeForm::zero();
        for (mono, f) in self.to_coframe(a).terms() {
            let complement = mono.complement();
            let (sign, _) = mono.wedge(complement).expect("complementary monomials");
            let mut c = &(&f.conjugate() * &self.basis_norm(*mono)) * &self.volume_density;
            if sign < 0 {
                c = -c;
            }
            out.add_term(complement, &c);
        }
        Ok(self.from_coframe(&out))
    }

    /// The complex-linear star `astar . conj`, sending `(p, q)` to `(3 - q, 3 - p)`.
    pub fn star(&self, a: &Form) -> Result<Form> {
        self.antilinear_star(&a.conjugate())
    }
}

pub fn volume_form(g: &HermitianMetric) -> &Form {
    g.volume_form()
}

pub fn antilinear_star(a: &Form, g: &HermitianMetric) -> Result<Form> {
    g.antilinear_star(a)
}

pub fn linear_star(a: &Form, g: &HermitianMetric) -> Result<Form> {
    g.star(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `delbar a = 0` and `delbar(astar a) = 0`.
    Delbar,
    /// `del a = 0` and `del(astar a) = 0`.
    Del,
    /// `d a = 0` and `del delbar(astar a) = 0`.
    BottChern,
    /// `del delbar a = 0` and `d(astar a) = 0`.
    Aeppli,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Delbar, Flavor::Del, Flavor::BottChern, Flavor::Aeppli];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Delbar => "delbar",
            Flavor::Del => "del",
            Flavor::BottChern => "bc",
            Flavor::Aeppli => "aeppli",
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "delbar" => Ok(Flavor::Delbar),
            "del" => Ok(Flavor::Del),
            "bc" => Ok(Flavor::BottChern),
            "aeppli" => Ok(Flavor::Aeppli),
            other => Err(format!("unknown flavor `{other}`")),
        }
    }
}

/// Which star enters the dual condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarKind {
    Antilinear,
    Linear,
}

/// A nonzero form that violates one of the defining conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub condition: &'static str,
    pub form: Form,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Harmonicity {
    pub flavor: Flavor,
    pub harmonic: bool,
    pub witness: Option<Witness>,
}

fn ddbar(a: &Form) -> Result<Form> {
    a.delbar()?.del()
}

pub fn harmonicity(a: &Form, g: &HermitianMetric, flavor: Flavor) -> Result<Harmonicity> {
    harmonicity_with(a, g, flavor, StarKind::Antilinear)
}

pub fn harmonicity_with(a: &Form, g: &HermitianMetric, flavor: Flavor, star: StarKind) -> Result<Harmonicity> {
    let dual = match star {
        StarKind::Antilinear => g.antilinear_star(a)?,
        StarKind::Linear => g.star(a)?,
    };
    let conditions: [(&'static str, Form); 2] = match flavor {
        Flavor::Delbar => [("delbar(a)", a.delbar()?), ("delbar(star(a))", dual.delbar()?)],
        Flavor::Del => [("del(a)", a.del()?), ("del(star(a))", dual.del()?)],
        Flavor::BottChern => [("d(a)", a.d()), ("del(delbar(star(a)))", ddbar(&dual)?)],
        Flavor::Aeppli => [("del(delbar(a))", ddbar(a)?), ("d(star(a))", dual.d())],
    };
    let witness = conditions
        .into_iter()
        .find(|(_, f)| !f.is_zero())
        .map(|(condition, form)| Witness { condition, form });
    Ok(Harmonicity { flavor, harmonic: witness.is_none(), witness })
}

/// Rejects points on `m^2 + 1 = 0`, where the standard metric's coframe degenerates.
pub fn check_sample_point(point: &GaussianRational) -> Result<()> {
    let sq = &(point * point) + &GaussianRational::one();
    if sq.is_zero() {
        return Err(Error::DegeneratePoint { point: point.to_string() });
    }
    Ok(())
}

/// Rank over `Q(i)` of the coefficient vectors of `forms` evaluated at every
/// sample point, i.e. linear independence over constants.
pub fn independence_rank(forms: &[Form], sample_points: &[GaussianRational]) -> Result<usize> {
    for p in sample_points {
        check_sample_point(p)?;
    }
    let monomials: Vec<Monomial> = Monomial::all().collect();
    let mut rows = Vec::with_capacity(forms.len());
    for form in forms {
        let mut row = Vec::with_capacity(sample_points.len() * monomials.len());
        for p in sample_points {
            for mono in &monomials {
                let c = form.coefficient(*mono);
                row.push(if c.is_zero() { GaussianRational::zero() } else { c.evaluate(p)? });
            }
        }
        rows.push(row);
    }
    Ok(linalg::rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Generator;

    fn s(g: Generator) -> Form {
        Form::gen(g)
    }

    fn flat_metric() -> HermitianMetric {
        HermitianMetric::new(
            [s(Generator::S1), s(Generator::S2), s(Generator::Dm)],
            [RationalFunction::integer(2), RationalFunction::integer(2), RationalFunction::integer(2)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_metrics() {
        let two = RationalFunction::integer(2);
        let degenerate = HermitianMetric::new(
            [s(Generator::S1), s(Generator::S1).scale(&RationalFunction::m()), s(Generator::Dm)],
            [two.clone(), two.clone(), two.clone()],
        );
        assert!(matches!(degenerate, Err(Error::DegenerateCoframe)));
        let wrong_type = HermitianMetric::new(
            [s(Generator::Sb1), s(Generator::S2), s(Generator::Dm)],
            [two.clone(), two.clone(), two.clone()],
        );
        assert!(matches!(wrong_type, Err(Error::InvalidMetric(_))));
        let complex_norm = HermitianMetric::new(
            [s(Generator::S1), s(Generator::S2), s(Generator::Dm)],
            [RationalFunction::m(), two.clone(), two],
        );
        assert!(matches!(complex_norm, Err(Error::InvalidMetric(_))));
    }

    #[test]
    fn star_of_one_is_the_volume_form() {
        let g = flat_metric();
        assert_eq!(g.antilinear_star(&Form::one()).unwrap(), *g.volume_form());
        let omega = g.fundamental_form();
        assert_eq!(omega.wedge(&omega).wedge(&omega), g.volume_form().scale(&RationalFunction::integer(6)));
    }

    #[test]
    fn star_maps_bidegrees() {
        let g = flat_metric();
        let a = s(Generator::S1).wedge(&s(Generator::Sb2));
        assert_eq!(g.antilinear_star(&a).unwrap().bidegree(), Bidegree::Pure(2, 2));
        let b = s(Generator::Sb1).wedge(&s(Generator::Sb2));
        assert_eq!(g.antilinear_star(&b).unwrap().bidegree(), Bidegree::Pure(3, 1));
        assert_eq!(g.star(&b).unwrap().bidegree(), Bidegree::Pure(1, 3));
        assert!(g.antilinear_star(&(&s(Generator::S1) + &s(Generator::Sb1))).is_err());
    }

    #[test]
    fn linear_star_squares_to_sign() {
        let g = flat_metric();
        let a = s(Generator::S1);
        assert_eq!(g.star(&g.star(&a).unwrap()).unwrap(), -&a);
    }

    #[test]
    fn antilinearity() {
        let g = flat_metric();
        let a = s(Generator::Sb1).scale(&RationalFunction::i());
        let lhs = g.antilinear_star(&a).unwrap();
        let rhs = g.antilinear_star(&s(Generator::Sb1)).unwrap().scale(&-RationalFunction::i());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn independence_rank_examples() {
        let m = RationalFunction::m();
        let forms = [
            s(Generator::Sb1).scale(&m),
            s(Generator::Sb2).scale(&m),
            s(Generator::Sb1),
            s(Generator::Sb2),
        ];
        let pts = |v: &[i64]| v.iter().map(|&n| GaussianRational::integer(n)).collect::<Vec<_>>();
        assert_eq!(independence_rank(&forms, &pts(&[0])).unwrap(), 2);
        assert_eq!(independence_rank(&forms, &pts(&[0, 1])).unwrap(), 4);
        assert_eq!(independence_rank(&[s(Generator::Sb1), s(Generator::Sb1)], &pts(&[0, 1, 2])).unwrap(), 1);
        let err = independence_rank(&forms, &[GaussianRational::i()]);
        assert!(matches!(err, Err(Error::DegeneratePoint { .. })));
        let pole = Form::scalar(RationalFunction::one().checked_div(&m).unwrap());
        assert!(matches!(independence_rank(&[pole], &pts(&[0])), Err(Error::Pole { .. })));
    }
}
