//! Named forms on the twistor space of the flat 4-torus, written in the affine
//! chart `lambda2 != 0` with fibre coordinate `m = lambda1 / lambda2`.
//!
//! Homogeneous expressions in `lambda1, lambda2` are stored after the chart
//! substitution `lambda1 -> m, lambda2 -> 1, conj(lambda1) -> mb,
//! conj(lambda2) -> 1`. Catalog values are written directly in the sigma
//! frame; the [`lambda`] module rebuilds the same objects from the flat
//! coordinate 1-forms so that every identity can be checked two ways.

use num_traits::One;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::exterior::{Form, Generator};
use crate::hodge::HermitianMetric;
use crate::scalar::RationalFunction;

/// Predicates a catalog entry is expected to satisfy under [`paper_metric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    DelbarClosed,
    DelbarHarmonic,
    DClosed,
    DdbarClosed,
    BottChernHarmonic,
    AeppliHarmonic,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::DelbarClosed,
        Predicate::DelbarHarmonic,
        Predicate::DClosed,
        Predicate::DdbarClosed,
        Predicate::BottChernHarmonic,
        Predicate::AeppliHarmonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::DelbarClosed => "delbar_closed",
            Predicate::DelbarHarmonic => "delbar_harmonic",
            Predicate::DClosed => "d_closed",
            Predicate::DdbarClosed => "ddbar_closed",
            Predicate::BottChernHarmonic => "bc_harmonic",
            Predicate::AeppliHarmonic => "aeppli_harmonic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Display form of the object in homogeneous coordinates.
    pub display: &'static str,
    pub location: &'static str,
    pub value: Form,
    pub bidegree: (usize, usize),
    pub expected_properties: Vec<(Predicate, bool)>,
}

fn sb1() -> Form {
    Form::gen(Generator::Sb1)
}
fn sb2() -> Form {
    Form::gen(Generator::Sb2)
}
fn s1() -> Form {
    Form::gen(Generator::S1)
}
fn s2() -> Form {
    Form::gen(Generator::S2)
}
fn m() -> RationalFunction {
    RationalFunction::m()
}
fn norm() -> RationalFunction {
    &(&RationalFunction::m() * &RationalFunction::mb()) + &RationalFunction::one()
}

/// `dm ^ dmb / (1 + m mb)^2`, the Fubini-Study form of the fibre.
pub fn fubini_study() -> Form {
    let w = RationalFunction::integer(1).checked_div(&norm().pow(2)).expect("nonzero");
    Form::gen(Generator::Dm).wedge(&Form::gen(Generator::Dmb)).scale(&w)
}

const DOLBEAULT: &[(Predicate, bool)] = &[(Predicate::DelbarClosed, true), (Predicate::DelbarHarmonic, true)];

fn entry(
    name: &'static str,
    display: &'static str,
    location: &'static str,
    value: Form,
    bidegree: (usize, usize),
    expected: &[(Predicate, bool)],
) -> CatalogEntry {
    CatalogEntry { name, display, location, value, bidegree, expected_properties: expected.to_vec() }
}

fn build() -> Vec<CatalogEntry> {
    let n = norm();
    let holo_rep_1_0 = "H^{0,1} representatives lambda_i Omegabar_j";
    let rep_0_2 = "H^{0,2} representatives lambda_i Omegabar_1 ^ lambda_j Omegabar_2";
    let twisted = "twisted (0,2)-forms lambda1^(2-l) lambda2^l Omegabar_1 ^ Omegabar_2 spanning H^2(Z,O)";
    let rep_1_1 = "H^{1,1} representatives";
    let rep_1_2 = "H^{1,2} representatives";
    let omegas = "H^1(Z,O) spanned by the omegabar_k";
    let fs = [(Predicate::DelbarClosed, true), (Predicate::DelbarHarmonic, true), (Predicate::DClosed, true)];
    let bc = [
        (Predicate::DelbarClosed, true),
        (Predicate::DelbarHarmonic, true),
        (Predicate::DClosed, true),
        (Predicate::BottChernHarmonic, true),
        (Predicate::AeppliHarmonic, true),
    ];
    let aeppli_12 = [
        (Predicate::DelbarClosed, true),
        (Predicate::DelbarHarmonic, true),
        (Predicate::DdbarClosed, true),
        (Predicate::AeppliHarmonic, true),
    ];
    let s1sb1 = s1().wedge(&sb1());
    let s2sb2 = s2().wedge(&sb2());
    let mm = &m() * &RationalFunction::mb();
    let i = RationalFunction::i();

    vec![
        entry("sigma_bar_1", "sigmabar_1 = (mb dzb1 - dz2)/(1+|m|^2)", "holomorphic (0,1)-forms sigmabar_i", sb1(), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("sigma_bar_2", "sigmabar_2 = (mb dzb2 + dz1)/(1+|m|^2)", "holomorphic (0,1)-forms sigmabar_i", sb2(), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("omega_bar_0", "omegabar_0 = m sigmabar_1 + sigmabar_2", omegas, &sb1().scale(&m()) + &sb2(), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("omega_bar_1", "omegabar_1 = i(m sigmabar_1 - sigmabar_2)", omegas, (&sb1().scale(&m()) - &sb2()).scale(&i), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("omega_bar_2", "omegabar_2 = m sigmabar_2 - sigmabar_1", omegas, &sb2().scale(&m()) - &sb1(), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("omega_bar_3", "omegabar_3 = i(sigmabar_1 + m sigmabar_2)", omegas, (&sb1() + &sb2().scale(&m())).scale(&i), (0, 1), &[(Predicate::DelbarClosed, true)]),
        entry("h01_rep_l1o1", "lambda1 Omegabar_1", holo_rep_1_0, sb1().scale(&m()), (0, 1), DOLBEAULT),
        entry("h01_rep_l1o2", "lambda1 Omegabar_2", holo_rep_1_0, sb2().scale(&m()), (0, 1), DOLBEAULT),
        entry("h01_rep_l2o1", "lambda2 Omegabar_1", holo_rep_1_0, sb1(), (0, 1), DOLBEAULT),
        entry("h01_rep_l2o2", "lambda2 Omegabar_2", holo_rep_1_0, sb2(), (0, 1), DOLBEAULT),
        entry("h02_rep_l1l1", "lambda1 Omegabar_1 ^ lambda1 Omegabar_2", rep_0_2, sb1().wedge(&sb2()).scale(&m().pow(2)), (0, 2), DOLBEAULT),
        entry("h02_rep_l2l2", "lambda2 Omegabar_1 ^ lambda2 Omegabar_2", rep_0_2, sb1().wedge(&sb2()), (0, 2), DOLBEAULT),
        entry("h02_rep_l1l2", "lambda1 Omegabar_1 ^ lambda2 Omegabar_2", rep_0_2, sb1().wedge(&sb2()).scale(&m()), (0, 2), DOLBEAULT),
        entry("h02_twisted_0", "lambda1^2 Omegabar_1 ^ Omegabar_2", twisted, sb1().wedge(&sb2()).scale(&m().pow(2)), (0, 2), &[(Predicate::DelbarClosed, true)]),
        entry("h02_twisted_1", "lambda1 lambda2 Omegabar_1 ^ Omegabar_2", twisted, sb1().wedge(&sb2()).scale(&m()), (0, 2), &[(Predicate::DelbarClosed, true)]),
        entry("h02_twisted_2", "lambda2^2 Omegabar_1 ^ Omegabar_2", twisted, sb1().wedge(&sb2()), (0, 2), &[(Predicate::DelbarClosed, true)]),
        entry("h11_rep_fs", "dm ^ dmb / (1+|m|^2)^2", rep_1_1, fubini_study(), (1, 1), &fs),
        entry("h11_rep_eta1", "eta_1 = (|lambda1|^2+|lambda2|^2) Omega_1 ^ Omegabar_2", rep_1_1, s1().wedge(&sb2()).scale(&n), (1, 1), &bc),
        entry("h11_rep_eta2", "eta_2 = (|lambda1|^2+|lambda2|^2) Omega_2 ^ Omegabar_1", rep_1_1, s2().wedge(&sb1()).scale(&n), (1, 1), &bc),
        entry("h11_rep_eta3", "eta_3 = (|lambda1|^2+|lambda2|^2) (Omega_1 ^ Omegabar_1 - Omega_2 ^ Omegabar_2)", rep_1_1, (&s1sb1 - &s2sb2).scale(&n), (1, 1), &bc),
        entry("h12_rep_l1o1", "(|lambda1|^2+|lambda2|^2) lambda1 Omega_1 ^ Omegabar_1 ^ Omegabar_2", rep_1_2, s1sb1.wedge(&sb2()).scale(&(&n * &m())), (1, 2), &aeppli_12),
        entry("h12_rep_l2o1", "(|lambda1|^2+|lambda2|^2) lambda2 Omega_1 ^ Omegabar_1 ^ Omegabar_2", rep_1_2, s1sb1.wedge(&sb2()).scale(&n), (1, 2), &aeppli_12),
        entry("h12_rep_l1o2", "(|lambda1|^2+|lambda2|^2) lambda1 Omega_2 ^ Omegabar_1 ^ Omegabar_2", rep_1_2, s2().wedge(&sb1()).wedge(&sb2()).scale(&(&n * &m())), (1, 2), &aeppli_12),
        entry("h12_rep_l2o2", "(|lambda1|^2+|lambda2|^2) lambda2 Omega_2 ^ Omegabar_1 ^ Omegabar_2", rep_1_2, s2().wedge(&sb1()).wedge(&sb2()).scale(&n), (1, 2), &aeppli_12),
        entry("beta", "beta = (|lambda1|^2+|lambda2|^2)^2 Omega_1 ^ Omegabar_1 ^ Omega_2 ^ Omegabar_2", "harmonic (2,2)-form dual to the Fubini-Study class", s1sb1.wedge(&s2sb2).scale(&n.pow(2)), (2, 2), DOLBEAULT),
        entry("aeppli_extra_1", "conj(lambda1) Omega_1 ^ lambda1 Omegabar_1 - conj(lambda2) Omega_2 ^ lambda2 Omegabar_2", "additional ddbar-closed (1,1)-forms for Aeppli cohomology", &s1sb1.scale(&mm) - &s2sb2, (1, 1), &[(Predicate::DdbarClosed, true)]),
        entry("aeppli_extra_2", "conj(lambda2) Omega_1 ^ lambda2 Omegabar_1 - conj(lambda1) Omega_2 ^ lambda1 Omegabar_2", "additional ddbar-closed (1,1)-forms for Aeppli cohomology", &s1sb1 - &s2sb2.scale(&mm), (1, 1), &[(Predicate::DdbarClosed, true)]),
    ]
}

static CATALOG: Lazy<Vec<CatalogEntry>> = Lazy::new(build);

pub fn entries() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        registered: names().join(", "),
    })
}

pub fn value(name: &str) -> Result<Form> {
    lookup(name).map(|e| e.value.clone())
}

/// Values of a group of named entries, in the given order.
pub fn values(names: &[&str]) -> Vec<Form> {
    names.iter().map(|n| value(n).expect("registered name")).collect()
}

pub const H01_REPS: [&str; 4] = ["h01_rep_l1o1", "h01_rep_l1o2", "h01_rep_l2o1", "h01_rep_l2o2"];
pub const H02_REPS: [&str; 3] = ["h02_rep_l1l1", "h02_rep_l2l2", "h02_rep_l1l2"];
pub const H02_TWISTED: [&str; 3] = ["h02_twisted_0", "h02_twisted_1", "h02_twisted_2"];
pub const H11_REPS: [&str; 4] = ["h11_rep_fs", "h11_rep_eta1", "h11_rep_eta2", "h11_rep_eta3"];
pub const H12_REPS: [&str; 4] = ["h12_rep_l1o1", "h12_rep_l2o1", "h12_rep_l1o2", "h12_rep_l2o2"];
pub const ETAS: [&str; 3] = ["h11_rep_eta1", "h11_rep_eta2", "h11_rep_eta3"];
pub const AEPPLI_EXTRA: [&str; 2] = ["aeppli_extra_1", "aeppli_extra_2"];
pub const OMEGA_BARS: [&str; 4] = ["omega_bar_0", "omega_bar_1", "omega_bar_2", "omega_bar_3"];

/// Coframe `(omega_0, omega_2, dm / (1 + m mb))`, every norm squared equal to 2.
pub fn paper_metric() -> HermitianMetric {
    static METRIC: Lazy<HermitianMetric> = Lazy::new(|| {
        let mb = RationalFunction::mb();
        let phi1 = &s1().scale(&mb) + &s2();
        let phi2 = &s2().scale(&mb) - &s1();
        let phi3 = Form::gen(Generator::Dm).scale(&RationalFunction::integer(1).checked_div(&norm()).expect("nonzero"));
        let two = RationalFunction::integer(2);
        HermitianMetric::new([phi1, phi2, phi3], [two.clone(), two.clone(), two]).expect("nondegenerate metric")
    });
    METRIC.clone()
}

/// `(i/2)(omega_0 ^ omegabar_0 + omega_2 ^ omegabar_2 + dm ^ dmb / (1 + m mb)^2)`.
pub fn displayed_fundamental_form() -> Form {
    let w0 = value("omega_bar_0").expect("registered").conjugate();
    let w2 = value("omega_bar_2").expect("registered").conjugate();
    let sum = &(&w0.wedge(&w0.conjugate()) + &w2.wedge(&w2.conjugate())) + &fubini_study();
    sum.scale(&RationalFunction::i().checked_div(&RationalFunction::integer(2)).expect("nonzero"))
}

/// A pair of expressions that must agree as forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub label: &'static str,
    pub lhs: Form,
    pub rhs: Form,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Each `omegabar_k` written via `sigmabar_i` and via `lambda_i Omegabar_j`.
pub fn eq7_identity_pairs() -> Vec<(Form, Form)> {
    omega_bar_identities().into_iter().map(|id| (id.lhs, id.rhs)).collect()
}

pub fn omega_bar_identities() -> Vec<Identity> {
    use lambda::{l1, l2, omega_bar};
    let i = RationalFunction::i();
    let lo = |l: &RationalFunction, j: usize| omega_bar(j).scale(l);
    let rhs = [
        &lo(&l1(), 1) + &lo(&l2(), 2),
        (&lo(&l1(), 1) - &lo(&l2(), 2)).scale(&i),
        &lo(&l1(), 2) - &lo(&l2(), 1),
        (&lo(&l1(), 2) + &lo(&l2(), 1)).scale(&i),
    ];
    OMEGA_BARS
        .iter()
        .zip(rhs)
        .map(|(name, rhs)| Identity { label: name, lhs: value(name).expect("registered"), rhs })
        .collect()
}

/// The chart reductions `lambda_i Omegabar_j`, the twisted forms, and the
/// relation `lambda1 Omegabar_2 ^ lambda2 Omegabar_1 = -m sigmabar_1 ^ sigmabar_2`.
pub fn h0_reduction_identities() -> Vec<Identity> {
    use lambda::{l1, l2, omega_bar};
    let lo = |l: &RationalFunction, j: usize| omega_bar(j).scale(l);
    let mut out = vec![
        Identity { label: "h01_rep_l1o1", lhs: value("h01_rep_l1o1").unwrap(), rhs: lo(&l1(), 1) },
        Identity { label: "h01_rep_l1o2", lhs: value("h01_rep_l1o2").unwrap(), rhs: lo(&l1(), 2) },
        Identity { label: "h01_rep_l2o1", lhs: value("h01_rep_l2o1").unwrap(), rhs: lo(&l2(), 1) },
        Identity { label: "h01_rep_l2o2", lhs: value("h01_rep_l2o2").unwrap(), rhs: lo(&l2(), 2) },
        Identity { label: "h02_rep_l1l1", lhs: value("h02_rep_l1l1").unwrap(), rhs: lo(&l1(), 1).wedge(&lo(&l1(), 2)) },
        Identity { label: "h02_rep_l2l2", lhs: value("h02_rep_l2l2").unwrap(), rhs: lo(&l2(), 1).wedge(&lo(&l2(), 2)) },
        Identity { label: "h02_rep_l1l2", lhs: value("h02_rep_l1l2").unwrap(), rhs: lo(&l1(), 1).wedge(&lo(&l2(), 2)) },
    ];
    let ob12 = omega_bar(1).wedge(&omega_bar(2));
    for (l, name) in H02_TWISTED.iter().enumerate() {
        let weight = &l1().pow(2 - l as u32) * &l2().pow(l as u32);
        out.push(Identity { label: name, lhs: value(name).unwrap(), rhs: ob12.scale(&weight) });
    }
    out.push(Identity {
        label: "lambda1 Omegabar_2 ^ lambda2 Omegabar_1 = -m sigmabar_1 ^ sigmabar_2",
        lhs: lo(&l1(), 2).wedge(&lo(&l2(), 1)),
        rhs: -&value("h02_rep_l1l2").unwrap(),
    });
    out
}

/// The three expansions of the non-Fubini-Study `H^{1,1}` representatives, each
/// compared with the catalog value and with the product formula.
pub fn h11_expansion_identities() -> Vec<Identity> {
    use lambda::{l1, l2, lb1, lb2, norm, omega, omega_bar};
    let term = |lb: &RationalFunction, a: usize, l: &RationalFunction, b: usize| {
        omega(a).scale(lb).wedge(&omega_bar(b).scale(l))
    };
    let expansions = [
        &term(&lb1(), 1, &l1(), 2) + &term(&lb2(), 1, &l2(), 2),
        &term(&lb1(), 2, &l1(), 1) + &term(&lb2(), 2, &l2(), 1),
        &(&term(&lb1(), 1, &l1(), 1) + &term(&lb2(), 1, &l2(), 1))
            - &(&term(&lb2(), 2, &l2(), 2) + &term(&lb1(), 2, &l1(), 2)),
    ];
    let products = [
        omega(1).wedge(&omega_bar(2)).scale(&norm()),
        omega(2).wedge(&omega_bar(1)).scale(&norm()),
        (&omega(1).wedge(&omega_bar(1)) - &omega(2).wedge(&omega_bar(2))).scale(&norm()),
    ];
    let mut out = Vec::new();
    for ((name, expansion), product) in ETAS.iter().zip(expansions).zip(products) {
        out.push(Identity { label: name, lhs: product.clone(), rhs: expansion });
        out.push(Identity { label: name, lhs: value(name).unwrap(), rhs: product });
    }
    out
}

/// The four expansions of the `H^{1,2}` representatives.
pub fn h12_expansion_identities() -> Vec<Identity> {
    use lambda::{l1, l2, lb1, lb2, norm, omega, omega_bar};
    let lo = |l: &RationalFunction, j: usize| omega_bar(j).scale(l);
    let hol = |lb: &RationalFunction, a: usize| omega(a).scale(lb);
    let ob = omega_bar(1).wedge(&omega_bar(2));
    let mut out = Vec::new();
    for (k, name) in H12_REPS.iter().enumerate() {
        let a = if k < 2 { 1 } else { 2 };
        let outer = if k % 2 == 0 { l1() } else { l2() };
        // outer lambda distributed over the two Omegabar factors
        let (x1, y1, x2, y2) = if k % 2 == 0 { (l1(), l1(), l1(), l2()) } else { (l1(), l2(), l2(), l2()) };
        let expansion = &hol(&lb1(), a).wedge(&lo(&x1, 1)).wedge(&lo(&y1, 2))
            + &hol(&lb2(), a).wedge(&lo(&x2, 1)).wedge(&lo(&y2, 2));
        let product = omega(a).wedge(&ob).scale(&(&norm() * &outer));
        out.push(Identity { label: name, lhs: product.clone(), rhs: expansion });
        out.push(Identity { label: name, lhs: value(name).unwrap(), rhs: product });
    }
    out
}

/// `beta` from its definition, and as `-eta_1 ^ eta_2`.
pub fn beta_identities() -> Vec<Identity> {
    use lambda::{norm, omega, omega_bar};
    let beta = value("beta").unwrap();
    let defined = omega(1).wedge(&omega_bar(1)).wedge(&omega(2)).wedge(&omega_bar(2)).scale(&norm().pow(2));
    let product = -&value("h11_rep_eta1").unwrap().wedge(&value("h11_rep_eta2").unwrap());
    vec![
        Identity { label: "beta", lhs: beta.clone(), rhs: defined },
        Identity { label: "beta = -eta_1 ^ eta_2", lhs: beta, rhs: product },
    ]
}

/// The extra Aeppli forms from their homogeneous definitions.
pub fn aeppli_extra_identities() -> Vec<Identity> {
    use lambda::{l1, l2, lb1, lb2, omega, omega_bar};
    let term = |lb: &RationalFunction, a: usize, l: &RationalFunction, b: usize| {
        omega(a).scale(lb).wedge(&omega_bar(b).scale(l))
    };
    vec![
        Identity {
            label: "aeppli_extra_1",
            lhs: value("aeppli_extra_1").unwrap(),
            rhs: &term(&lb1(), 1, &l1(), 1) - &term(&lb2(), 2, &l2(), 2),
        },
        Identity {
            label: "aeppli_extra_2",
            lhs: value("aeppli_extra_2").unwrap(),
            rhs: &term(&lb2(), 1, &l2(), 1) - &term(&lb1(), 2, &l1(), 2),
        },
    ]
}

/// Homogeneous coordinates on the fibre and the forms `Omega_j`, built from the
/// flat coordinate 1-forms and then reduced to the chart.
pub mod lambda {
    use crate::exterior::{DzForm, DzGenerator, Form};
    use crate::scalar::RationalFunction;

    pub fn l1() -> RationalFunction {
        RationalFunction::m()
    }
    pub fn l2() -> RationalFunction {
        RationalFunction::integer(1)
    }
    pub fn lb1() -> RationalFunction {
        l1().conjugate()
    }
    pub fn lb2() -> RationalFunction {
        l2().conjugate()
    }
    /// `|lambda1|^2 + |lambda2|^2`.
    pub fn norm() -> RationalFunction {
        &(&lb1() * &l1()) + &(&lb2() * &l2())
    }

    /// `Omegabar_j` for `j = 1, 2`.
    pub fn omega_bar(j: usize) -> Form {
        let g = DzForm::gen;
        let raw = match j {
            1 => &g(DzGenerator::Dzb1).scale(&lb1()) - &g(DzGenerator::Dz2).scale(&lb2()),
            2 => &g(DzGenerator::Dzb2).scale(&lb1()) + &g(DzGenerator::Dz1).scale(&lb2()),
            _ => panic!("Omegabar index must be 1 or 2"),
        };
        raw.scale(&RationalFunction::integer(1).checked_div(&norm()).expect("nonzero")).to_sigma()
    }

    /// `Omega_j = conj(Omegabar_j)`.
    pub fn omega(j: usize) -> Form {
        omega_bar(j).conjugate()
    }
}
