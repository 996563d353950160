//! The structure equations of the twistor coframe, the flat `dz` frame, and
//! the two independent routes for the exterior derivative.

use std::sync::OnceLock;

use num_traits::One;

use super::frames::{Dz, DzGenerator, Generator, Sigma};
use super::{Bidegree, ExteriorForm, Frame, Monomial, MonomialMap};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{RationalFunction, Var};

/// A form in the twistor frame `s1, s2, dm, sb1, sb2, dmb`.
pub type Form = ExteriorForm<Sigma>;
/// A form in the flat frame `dz1, dz2, dzb1, dzb2, dm, dmb`.
pub type DzForm = ExteriorForm<Dz>;

fn one_plus_mmb() -> RationalFunction {
    &RationalFunction::one() + &(&RationalFunction::m() * &RationalFunction::mb())
}

fn inv_one_plus_mmb() -> RationalFunction {
    one_plus_mmb().inv().expect("1 + m*mb is nonzero")
}

/// `df = (df/dm) dm + (df/dmb) dmb` in a frame whose generators `dm_index`,
/// `dmb_index` are the fiber differentials.
fn scalar_differential<F: Frame>(f: &RationalFunction, dm_index: usize, dmb_index: usize) -> ExteriorForm<F> {
    ExteriorForm::from_terms([
        (Monomial::generator(dm_index), f.partial(Var::M)),
        (Monomial::generator(dmb_index), f.partial(Var::Mb)),
    ])
}

impl Form {
    pub fn gen(g: Generator) -> Form {
        Form::generator(g.index())
    }

    pub fn d(&self) -> Form {
        exterior_derivative(self)
    }

    /// The `(p+1, q)` part of `d` on a form of pure bidegree `(p, q)`.
    pub fn del(&self) -> Result<Form> {
        del_delbar(self).map(|(del, _)| del)
    }

    /// The `(p, q+1)` part of `d` on a form of pure bidegree `(p, q)`.
    pub fn delbar(&self) -> Result<Form> {
        del_delbar(self).map(|(_, delbar)| delbar)
    }

    pub fn to_dz(&self) -> DzForm {
        static MAP: OnceLock<MonomialMap<Dz>> = OnceLock::new();
        self.apply(MAP.get_or_init(|| MonomialMap::new::<Sigma>(sigma_to_dz())))
    }
}

impl DzForm {
    pub fn gen(g: DzGenerator) -> DzForm {
        DzForm::generator(g.index())
    }

    /// In the flat frame every generator is closed, so `d` only touches coefficients.
    pub fn d(&self) -> DzForm {
        let mut out = DzForm::zero();
        for (mono, c) in self.terms() {
            let df = scalar_differential::<Dz>(c, DzGenerator::Dm.index(), DzGenerator::Dmb.index());
            out = &out + &df.wedge(&DzForm::term(RationalFunction::one(), *mono));
        }
        out
    }

    pub fn to_sigma(&self) -> Form {
        static MAP: OnceLock<MonomialMap<Sigma>> = OnceLock::new();
        self.apply(MAP.get_or_init(|| MonomialMap::new::<Dz>(dz_to_sigma())))
    }
}

/// Images of the twistor generators in the flat frame:
/// `sb1 = (mb dzb1 - dz2)/(1 + m mb)`, `sb2 = (mb dzb2 + dz1)/(1 + m mb)`,
/// with `s1`, `s2` their conjugates.
fn sigma_to_dz() -> &'static [DzForm; 6] {
    static CELL: OnceLock<[DzForm; 6]> = OnceLock::new();
    CELL.get_or_init(|| {
        let k = inv_one_plus_mmb();
        let mb = RationalFunction::mb();
        let g = DzForm::gen;
        let sb1 = (&g(DzGenerator::Dzb1).scale(&mb) - &g(DzGenerator::Dz2)).scale(&k);
        let sb2 = (&g(DzGenerator::Dzb2).scale(&mb) + &g(DzGenerator::Dz1)).scale(&k);
        let s1 = sb1.conjugate();
        let s2 = sb2.conjugate();
        [s1, s2, g(DzGenerator::Dm), sb1, sb2, g(DzGenerator::Dmb)]
    })
}

/// Inverse images, obtained by inverting the 4x4 coefficient matrix of
/// `sigma_to_dz` over the scalar field.
fn dz_to_sigma() -> &'static [Form; 6] {
    static CELL: OnceLock<[Form; 6]> = OnceLock::new();
    CELL.get_or_init(|| {
        let sigma_idx = [Generator::S1, Generator::S2, Generator::Sb1, Generator::Sb2];
        let dz_idx = [DzGenerator::Dz1, DzGenerator::Dz2, DzGenerator::Dzb1, DzGenerator::Dzb2];
        let images = sigma_to_dz();
        let matrix: Vec<Vec<RationalFunction>> = sigma_idx
            .iter()
            .map(|s| {
                dz_idx
                    .iter()
                    .map(|z| images[s.index()].coefficient(Monomial::generator(z.index())))
                    .collect()
            })
            .collect();
        let inverse = linalg::invert(&matrix).expect("the flat and twistor frames are related by an invertible matrix");
        let mut out: [Form; 6] = Default::default();
        for (row, z) in dz_idx.iter().enumerate() {
            let mut acc = Form::zero();
            for (col, s) in sigma_idx.iter().enumerate() {
                acc = &acc + &Form::gen(*s).scale(&inverse[row][col]);
            }
            out[z.index()] = acc;
        }
        out[DzGenerator::Dm.index()] = Form::gen(Generator::Dm);
        out[DzGenerator::Dmb.index()] = Form::gen(Generator::Dmb);
        out
    })
}

/// Structure equations
/// `d sb1 = (dmb ^ s2 - mb dm ^ sb1) / (1 + m mb)`,
/// `d sb2 = (-mb dm ^ sb2 - dmb ^ s1) / (1 + m mb)`,
/// `d s1`, `d s2` by conjugation, `d(dm) = d(dmb) = 0`.
pub(crate) fn generator_differentials() -> &'static [Form; 6] {
    static CELL: OnceLock<[Form; 6]> = OnceLock::new();
    CELL.get_or_init(|| {
        let k = inv_one_plus_mmb();
        let mb = RationalFunction::mb();
        let g = Form::gen;
        let d_sb1 = (&g(Generator::Dmb).wedge(&g(Generator::S2))
            - &g(Generator::Dm).wedge(&g(Generator::Sb1)).scale(&mb))
            .scale(&k);
        let d_sb2 = (&(-&g(Generator::Dm).wedge(&g(Generator::Sb2)).scale(&mb))
            - &g(Generator::Dmb).wedge(&g(Generator::S1)))
            .scale(&k);
        let d_s1 = d_sb1.conjugate();
        let d_s2 = d_sb2.conjugate();
        [d_s1, d_s2, Form::zero(), d_sb1, d_sb2, Form::zero()]
    })
}

/// `d` of every canonical monomial, expanded by the graded Leibniz rule.
fn monomial_differentials() -> &'static [Form] {
    static CELL: OnceLock<Vec<Form>> = OnceLock::new();
    CELL.get_or_init(|| {
        let dg = generator_differentials();
        (0u8..64)
            .map(|bits| {
                let gens: Vec<usize> = Monomial::from_bits(bits).indices().collect();
                let mut total = Form::zero();
                for (pos, &j) in gens.iter().enumerate() {
                    let mut acc = Form::one();
                    for (other_pos, &k) in gens.iter().enumerate() {
                        let factor = if other_pos == pos { dg[j].clone() } else { Form::generator(k) };
                        acc = acc.wedge(&factor);
                    }
                    total = if pos % 2 == 0 { &total + &acc } else { &total - &acc };
                }
                total
            })
            .collect()
    })
}

/// The exterior derivative in the twistor frame, driven by the structure equations.
pub fn exterior_derivative(a: &Form) -> Form {
    let dm = monomial_differentials();
    let mut out = Form::zero();
    for (mono, c) in a.terms() {
        let df = scalar_differential::<Sigma>(c, Generator::Dm.index(), Generator::Dmb.index());
        out = &out + &df.wedge(&Form::term(RationalFunction::one(), *mono));
        let dmono = &dm[mono.bits() as usize];
        if !dmono.is_zero() {
            out = &out + &dmono.scale(c);
        }
    }
    out
}

/// Independent route for `d`: convert to the flat frame, differentiate the
/// coefficients only, and convert back.
pub fn d_oracle(a: &Form) -> Form {
    a.to_dz().d().to_sigma()
}

/// Splits `da` into its `(p+1, q)` and `(p, q+1)` parts for `a` of pure bidegree `(p, q)`.
///
/// Non-homogeneous input is rejected. Any component of `da` outside those two
/// bidegrees is reported as a failure of integrability.
pub fn del_delbar(a: &Form) -> Result<(Form, Form)> {
    let (p, q) = match a.bidegree() {
        Bidegree::Zero => return Ok((Form::zero(), Form::zero())),
        Bidegree::Pure(p, q) => (p, q),
        Bidegree::Mixed => return Err(Error::NonHomogeneous { form: a.to_string() }),
    };
    let da = a.d();
    let del = da.project(p + 1, q);
    let delbar = da.project(p, q + 1);
    let stray = &(&da - &del) - &delbar;
    if !stray.is_zero() {
        return Err(Error::NonIntegrable { stray: stray.to_string() });
    }
    Ok((del, delbar))
}
