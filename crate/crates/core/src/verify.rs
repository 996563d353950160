//! Named checks that re-verify the cohomological claims about the twistor
//! space of the flat torus. Every check is deterministic and exact.

use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, Identity, Predicate};
use crate::diamond::{self, CohomologyNumbers, DiamondKind, Entry, FrolicherOutcome, TopologicalInput};
use crate::error::{Error, Result};
use crate::exterior::{d_oracle, del_delbar, exterior_derivative, Form, Generator, Monomial};
use crate::hodge::{harmonicity, CoframeForm, Flavor, HermitianMetric};
use crate::random;
use crate::scalar::{GaussianRational, RationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub title: &'static str,
    #[serde(rename = "paper")]
    pub location: &'static str,
    pub status: Status,
    /// Offending form or arithmetic trace; always present on failure.
    pub witness: Option<String>,
    /// Informational findings that do not affect the status.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Outcome of a check body: a failure carries its witness.
type Outcome = std::result::Result<Report, String>;

#[derive(Default)]
struct Report {
    witness: Option<String>,
    notes: Vec<String>,
}

pub struct CheckSpec {
    pub name: &'static str,
    pub title: &'static str,
    pub location: &'static str,
    /// Catalog predicates this check evaluates: `(entries, predicates)`.
    pub covers: &'static [(&'static [&'static str], &'static [Predicate])],
    run: fn() -> Outcome,
}

use Predicate::*;

const DOLBEAULT: &[Predicate] = &[DelbarClosed, DelbarHarmonic];

pub static CHECKS: &[CheckSpec] = &[
    CheckSpec {
        name: "C1",
        title: "structure-equations-oracle",
        location: "structure equations of the sigma coframe: dsigmabar_i are of type (1,1)",
        covers: &[(&["sigma_bar_1", "sigma_bar_2"], &[DelbarClosed])],
        run: c1,
    },
    CheckSpec {
        name: "C2",
        title: "eq7-identities",
        location: "H^1(Z,O) spanned by omegabar_k: the two expressions of each omegabar_k",
        covers: &[(&catalog::OMEGA_BARS, &[DelbarClosed])],
        run: c2,
    },
    CheckSpec {
        name: "C3",
        title: "h01-reps",
        location: "Dolbeault cohomology of the torus twistor space, H^{0,1} representatives",
        covers: &[(&catalog::H01_REPS, DOLBEAULT)],
        run: c3,
    },
    CheckSpec {
        name: "C4",
        title: "h02-reps",
        location: "Dolbeault cohomology of the torus twistor space, H^{0,2} representatives; twisted 2-forms spanning H^2(Z,O)",
        covers: &[(&catalog::H02_REPS, DOLBEAULT), (&catalog::H02_TWISTED, &[DelbarClosed])],
        run: c4,
    },
    CheckSpec {
        name: "C5",
        title: "h11-reps",
        location: "Dolbeault cohomology of the torus twistor space, H^{1,1} representatives",
        covers: &[(&catalog::H11_REPS, DOLBEAULT)],
        run: c5,
    },
    CheckSpec {
        name: "C6",
        title: "h12-reps",
        location: "Dolbeault cohomology of the torus twistor space, H^{1,2} representatives",
        covers: &[(&catalog::H12_REPS, DOLBEAULT)],
        run: c6,
    },
    CheckSpec {
        name: "C7",
        title: "beta",
        location: "the (2,2)-form beta is the harmonic representative dual to the Fubini-Study class",
        covers: &[(&["beta"], DOLBEAULT)],
        run: c7,
    },
    CheckSpec {
        name: "C8",
        title: "prop13",
        location: "lower bounds on Bott-Chern and Aeppli numbers of the torus twistor space: eta_i are d-closed and BC-harmonic, two extra ddbar-closed (1,1)-forms, H^{1,2} representatives are Aeppli-harmonic",
        covers: &[
            (&catalog::ETAS, &[DClosed, BottChernHarmonic, AeppliHarmonic]),
            (&["h11_rep_fs"], &[DClosed]),
            (&catalog::AEPPLI_EXTRA, &[DdbarClosed]),
            (&catalog::H12_REPS, &[DdbarClosed, AeppliHarmonic]),
        ],
        run: c8,
    },
    CheckSpec {
        name: "C9",
        title: "bidegree-integrability",
        location: "sigmabar_i are holomorphic: d preserves the (p+1,q)+(p,q+1) splitting",
        covers: &[],
        run: c9,
    },
    CheckSpec {
        name: "C10",
        title: "diamond-torus",
        location: "Hodge diamond of the torus twistor space; Delta^2 >= 4+5-8 = 1 > 0",
        covers: &[],
        run: c10,
    },
    CheckSpec {
        name: "C11",
        title: "fpp-contradiction",
        location: "fake projective planes: the Frolicher spectral sequence does not degenerate at E_1",
        covers: &[],
        run: c11,
    },
    CheckSpec {
        name: "C12",
        title: "star-axioms",
        location: "C-antilinear Hodge star of the fixed Hermitian metric",
        covers: &[],
        run: c12,
    },
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

fn find(name: &str) -> Result<&'static CheckSpec> {
    CHECKS
        .iter()
        .find(|c| c.name == name || c.title == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

pub fn run_check(name: &str) -> Result<CheckResult> {
    Ok(execute(find(name)?))
}

fn execute(spec: &CheckSpec) -> CheckResult {
    let start = Instant::now();
    let outcome = (spec.run)();
    let runtime_ms = start.elapsed().as_millis();
    let (status, witness, notes) = match outcome {
        Ok(r) => (Status::Pass, r.witness, r.notes),
        Err(w) => (Status::Fail, Some(if w.is_empty() { "failed".to_string() } else { w }), Vec::new()),
    };
    CheckResult { name: spec.name, title: spec.title, location: spec.location, status, witness, notes, runtime_ms }
}

/// All registered checks, run in parallel, reported in registry order.
pub fn run_all() -> Vec<CheckResult> {
    CHECKS.par_iter().map(execute).collect()
}

// --- shared helpers -------------------------------------------------------

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn identities(ids: &[Identity]) -> std::result::Result<(), String> {
    for id in ids {
        ensure(id.holds(), || format!("{}: {} - ({}) = {}", id.label, id.lhs, id.rhs, &id.lhs - &id.rhs))?;
    }
    Ok(())
}

/// Evaluates a catalog predicate, returning a witness form when it fails.
pub fn evaluate_predicate(form: &Form, predicate: Predicate, g: &HermitianMetric) -> Result<(bool, Option<Form>)> {
    let zero = |f: Form| -> (bool, Option<Form>) {
        if f.is_zero() {
            (true, None)
        } else {
            (false, Some(f))
        }
    };
    let flavor = |fl: Flavor| -> Result<(bool, Option<Form>)> {
        let h = harmonicity(form, g, fl)?;
        Ok((h.harmonic, h.witness.map(|w| w.form)))
    };
    match predicate {
        DelbarClosed => Ok(zero(form.delbar()?)),
        DClosed => Ok(zero(form.d())),
        DdbarClosed => Ok(zero(form.delbar()?.del()?)),
        DelbarHarmonic => flavor(Flavor::Delbar),
        BottChernHarmonic => flavor(Flavor::BottChern),
        AeppliHarmonic => flavor(Flavor::Aeppli),
    }
}

/// Compares every covered predicate with the catalog's expectation.
fn expected_properties(spec_name: &str) -> std::result::Result<(), String> {
    let spec = lift(find(spec_name))?;
    let g = catalog::paper_metric();
    for (names, predicates) in spec.covers {
        for name in *names {
            let entry = lift(catalog::lookup(name))?;
            for p in *predicates {
                let expected = entry
                    .expected_properties
                    .iter()
                    .find(|(q, _)| q == p)
                    .map(|(_, v)| *v)
                    .ok_or_else(|| format!("{name}: no expectation recorded for {}", p.name()))?;
                let (actual, witness) = lift(evaluate_predicate(&entry.value, *p, &g))?;
                ensure(actual == expected, || match witness {
                    Some(w) => format!("{name}: {} is {actual}, witness {w}", p.name()),
                    None => format!("{name}: {} is {actual}, expected {expected}", p.name()),
                })?;
            }
        }
    }
    Ok(())
}

fn sample_points() -> Vec<GaussianRational> {
    (0..3).map(GaussianRational::integer).collect()
}

fn rank_is(names: &[&str], expected: usize) -> std::result::Result<(), String> {
    let forms = catalog::values(names);
    let rank = lift(crate::hodge::independence_rank(&forms, &sample_points()))?;
    ensure(rank == expected, || format!("independence rank of {names:?} at m in {{0,1,2}} is {rank}, expected {expected}"))
}

fn sigma_generators() -> Vec<Form> {
    Generator::ALL.iter().map(|g| Form::gen(*g)).collect()
}

// --- checks ----------------------------------------------------------------

fn c1() -> Outcome {
    let mut forms = sigma_generators();
    let mut rng = random::rng(0xC1);
    forms.extend((0..50).map(|_| random::form(&mut rng)));
    for f in &forms {
        let (a, b) = (d_oracle(f), exterior_derivative(f));
        ensure(a == b, || format!("d({f}): oracle - structure equations = {}", &a - &b))?;
    }
    expected_properties("C1")?;
    Ok(Report::default())
}

fn c2() -> Outcome {
    identities(&catalog::omega_bar_identities())?;
    expected_properties("C2")?;
    Ok(Report::default())
}

fn c3() -> Outcome {
    identities(&catalog::h0_reduction_identities()[..4])?;
    expected_properties("C3")?;
    rank_is(&catalog::H01_REPS, 4)?;
    Ok(Report::default())
}

fn c4() -> Outcome {
    identities(&catalog::h0_reduction_identities()[4..])?;
    expected_properties("C4")?;
    rank_is(&catalog::H02_REPS, 3)?;
    // the twisted forms lie in the span of the representatives
    let mut all = catalog::H02_REPS.to_vec();
    all.extend(catalog::H02_TWISTED);
    rank_is(&all, 3)?;
    let star = lift(catalog::paper_metric().antilinear_star(&catalog::value("h02_rep_l1l1").unwrap()))?;
    let shape = Monomial::from_indices(&[0, 1, 2, 5]).expect("distinct").1;
    ensure(star.len() == 1 && !star.coefficient(shape).is_zero(), || {
        format!("astar(h02_rep_l1l1) is not a multiple of s1*s2*dm*dmb: {star}")
    })?;
    Ok(Report::default())
}

fn c5() -> Outcome {
    identities(&catalog::h11_expansion_identities())?;
    expected_properties("C5")?;
    rank_is(&catalog::H11_REPS, 4)?;
    Ok(Report::default())
}

fn c6() -> Outcome {
    identities(&catalog::h12_expansion_identities())?;
    expected_properties("C6")?;
    rank_is(&catalog::H12_REPS, 4)?;
    Ok(Report::default())
}

fn c7() -> Outcome {
    identities(&catalog::beta_identities())?;
    expected_properties("C7")?;
    let g = catalog::paper_metric();
    let beta = catalog::value("beta").unwrap();
    let star = lift(g.antilinear_star(&beta))?;
    let fs = catalog::fubini_study();
    let dm_dmb = Monomial::from_indices(&[2, 5]).expect("distinct").1;
    ensure(star.len() == 1 && !star.coefficient(dm_dmb).is_zero(), || format!("astar(beta) = {star}"))?;
    let factor = lift(star.coefficient(dm_dmb).checked_div(&fs.coefficient(dm_dmb)))?;
    ensure(star == fs.scale(&factor), || format!("astar(beta) = {star}"))?;
    let d = lift(star.delbar())?;
    ensure(d.is_zero(), || format!("delbar(astar(beta)) = {d}"))?;
    Ok(Report { witness: None, notes: vec![format!("astar(beta) = ({factor}) * dm*dmb/(1+m*mb)^2")] })
}

fn c8() -> Outcome {
    identities(&catalog::aeppli_extra_identities())?;
    expected_properties("C8")?;
    let g = catalog::paper_metric();
    let mut notes = Vec::new();
    for name in catalog::H11_REPS.iter().chain(&catalog::AEPPLI_EXTRA) {
        let h = lift(harmonicity(&catalog::value(name).unwrap(), &g, Flavor::Aeppli))?;
        notes.push(match h.witness {
            None => format!("{name}: Aeppli-harmonic"),
            Some(w) => format!("{name}: not Aeppli-harmonic for this metric ({} = {})", w.condition, w.form),
        });
    }
    let n = CohomologyNumbers { h11_bc: Some(4), h11_a: Some(5), ..Default::default() };
    let d2 = lift(diamond::delta(2, &TopologicalInput::torus(), &n))?.value;
    ensure(d2 == 1, || format!("Δ² = 4+5-8 evaluated to {d2}"))?;
    notes.push("Δ² ≥ 4+5-8 = 1 > 0".to_string());
    Ok(Report { witness: None, notes })
}

fn c9() -> Outcome {
    let mut forms = sigma_generators();
    let mut rng = random::rng(0xC9);
    for _ in 0..100 {
        let (p, q) = random::bidegree(&mut rng);
        forms.push(random::form_of_bidegree(&mut rng, p, q));
    }
    for f in &forms {
        lift(del_delbar(f))?;
    }
    Ok(Report::default())
}

fn c10() -> Outcome {
    let t = TopologicalInput::torus();
    let numbers = CohomologyNumbers { h11_dolbeault: Some(4), h12_dolbeault: Some(4), ..Default::default() };
    let hodge = diamond::diamond(&t, DiamondKind::Hodge, Some(&numbers));
    // (p, q, value) as displayed for the flat torus
    let displayed: [(usize, usize, u64); 16] = [
        (0, 0, 1), (1, 0, 0), (0, 1, 4), (2, 0, 0), (1, 1, 4), (0, 2, 3), (3, 0, 0), (2, 1, 4),
        (1, 2, 4), (0, 3, 0), (3, 1, 3), (2, 2, 4), (1, 3, 0), (3, 2, 4), (2, 3, 0), (3, 3, 1),
    ];
    for (p, q, v) in displayed {
        ensure(hodge.get(p, q) == Some(&Entry::Known(v)), || format!("h^{{{p},{q}}} = {:?}, expected {v}", hodge.get(p, q)))?;
    }
    let betti = diamond::betti_z(&t);
    ensure(betti == [1, 4, 7, 8, 7, 4, 1], || format!("betti numbers {betti:?}"))?;
    let n = CohomologyNumbers { h11_bc: Some(4), h11_a: Some(5), h12_bc: Some(4), ..Default::default() };
    let closed = lift(diamond::delta(2, &t, &n))?.value;
    let summed = lift(diamond::delta_from_diamonds(2, &t, &n))?.value;
    ensure(closed == 1 && summed == 1, || format!("Δ² closed form {closed}, diamond sum {summed}, expected 1"))?;
    Ok(Report { witness: None, notes: vec!["Δ² = 4+5-2(3+1) = 1".to_string()] })
}

fn c11() -> Outcome {
    match diamond::frolicher_e1_check(&TopologicalInput::new(0, 1, 0), true) {
        FrolicherOutcome::Contradiction(trace) => Ok(Report { witness: trace.last().cloned(), notes: trace }),
        FrolicherOutcome::Consistent(h) => Err(format!("no contradiction: {h:?}")),
    }
}

fn c12() -> Outcome {
    let g = catalog::paper_metric();
    check_star_axioms(&g)
}

/// `a ^ astar(b) = <a, b> vol` on basis pairs of equal degree, and
/// `star(star(a)) = astar(astar(a)) = (-1)^k a` on every basis monomial.
fn check_star_axioms(g: &HermitianMetric) -> Outcome {
    let basis: Vec<(Monomial, Form)> = Monomial::all().map(|m| (m, Form::term(RationalFunction::integer(1), m))).collect();
    let stars: Vec<Form> = basis.iter().map(|(_, f)| g.antilinear_star(f)).collect::<Result<_>>().map_err(|e| e.to_string())?;
    let coframe: Vec<CoframeForm> = basis.iter().map(|(_, f)| g.to_coframe(f)).collect();
    let vol = g.volume_form();
    let mut pairs = 0usize;
    for (i, (mi, a)) in basis.iter().enumerate() {
        for (j, (mj, _)) in basis.iter().enumerate() {
            if mi.degree() != mj.degree() {
                continue;
            }
            pairs += 1;
            let lhs = a.wedge(&stars[j]);
            let rhs = vol.scale(&g.inner_product_coframe(&coframe[i], &coframe[j]));
            ensure(lhs == rhs, || format!("{a} ^ astar({}) - <.,.> vol = {}", basis[j].1, &lhs - &rhs))?;
        }
    }
    for (k, ((m, a), star)) in basis.iter().zip(&stars).enumerate() {
        let expected = if m.degree() % 2 == 0 { a.clone() } else { -a };
        let anti = lift(g.antilinear_star(star))?;
        ensure(anti == expected, || format!("astar(astar({a})) = {anti}"))?;
        let lin = lift(g.star(&lift(g.star(&basis[k].1))?))?;
        ensure(lin == expected, || format!("star(star({a})) = {lin}"))?;
    }
    Ok(Report { witness: None, notes: vec![format!("defining relation on {pairs} basis pairs; star^2 on 64 monomials")] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_errors() {
        assert_eq!(check_names().len(), 12);
        assert!(matches!(run_check("C99"), Err(Error::UnknownCheck(_))));
        assert_eq!(run_check("structure-equations-oracle").unwrap().name, "C1");
    }

    #[test]
    fn fast_checks_pass() {
        for name in ["C1", "C2", "C9", "C10", "C11"] {
            let r = run_check(name).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.witness);
        }
        let c11 = run_check("C11").unwrap();
        assert_eq!(c11.witness.as_deref(), Some("h21=0 ⇒ kernel dim must be 2, but equals b₋+1=1"));
    }

    #[test]
    fn failure_carries_witness() {
        let spec = CheckSpec { name: "X", title: "x", location: "", covers: &[], run: || Err(String::new()) };
        let r = execute(&spec);
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some_and(|w| !w.is_empty()));
    }

    #[test]
    fn star_axioms_for_flat_metric() {
        let two = RationalFunction::integer(2);
        let g = HermitianMetric::new(
            [Form::gen(Generator::S1), Form::gen(Generator::S2), Form::gen(Generator::Dm)],
            [two.clone(), two.clone(), two],
        )
        .unwrap();
        assert!(check_star_axioms(&g).is_ok());
    }

    /// Every expected property of every catalog entry is evaluated by some check.
    #[test]
    fn coverage_audit() {
        let mut covered = std::collections::BTreeSet::new();
        for spec in CHECKS {
            for (names, predicates) in spec.covers {
                for n in *names {
                    for p in *predicates {
                        covered.insert((*n, *p));
                    }
                }
            }
        }
        for entry in catalog::entries() {
            for (p, _) in &entry.expected_properties {
                assert!(covered.contains(&(entry.name, *p)), "{} {} uncovered", entry.name, p.name());
            }
        }
        for (n, p) in &covered {
            let entry = catalog::lookup(n).unwrap();
            assert!(entry.expected_properties.iter().any(|(q, _)| q == p), "{n} {} has no expectation", p.name());
        }
    }
}
