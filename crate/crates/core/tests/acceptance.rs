//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so that the report is always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::Rng;
use twistor_core::catalog::{self, Predicate};
use twistor_core::diamond::{
    self, betti_z, CohomologyNumbers, DecisionMode, DiamondKind, Entry, FrolicherHodgeNumbers, FrolicherOutcome,
    TopologicalInput,
};
use twistor_core::exterior::{d_oracle, del_delbar, exterior_derivative, Bidegree, Form, Generator, Monomial};
use twistor_core::hodge::{harmonicity, independence_rank, Flavor};
use twistor_core::parser::{self, eval_str, parse, print};
use twistor_core::random;
use twistor_core::scalar::{GaussianRational, RationalFunction};
use twistor_core::verify::evaluate_predicate;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_points() -> Vec<GaussianRational> {
    (0..3).map(GaussianRational::integer).collect()
}

fn gen(g: Generator) -> Form {
    Form::gen(g)
}

fn structure_equation_oracle() -> Outcome {
    let mut forms: Vec<Form> = [Generator::S1, Generator::S2, Generator::Sb1, Generator::Sb2].map(gen).to_vec();
    let mut rng = random::rng(0xACC1);
    forms.extend((0..200).map(|_| random::form(&mut rng)));
    for f in &forms {
        let (a, b) = (d_oracle(f), exterior_derivative(f));
        ensure(a == b, || format!("d({f}) differs by {}", &a - &b))?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn omega_bar_identities() -> Outcome {
    let pairs = catalog::eq7_identity_pairs();
    ensure(pairs.len() == 4, || format!("{} identities", pairs.len()))?;
    for (k, (lhs, rhs)) in pairs.iter().enumerate() {
        ensure(lhs == rhs, || format!("omega_bar_{k}: {lhs} != {rhs}"))?;
    }
    Ok("4 identities".into())
}

fn dolbeault_representatives() -> Outcome {
    let g = catalog::paper_metric();
    let groups: [(&[&str], usize); 4] = [
        (&catalog::H01_REPS, 4),
        (&catalog::H02_REPS, 3),
        (&catalog::H11_REPS, 4),
        (&catalog::H12_REPS, 4),
    ];
    let mut failures = Vec::new();
    for (names, rank) in groups {
        for name in names {
            let f = catalog::value(name).map_err(|e| e.to_string())?;
            ensure(f.delbar().map_err(|e| e.to_string())?.is_zero(), || format!("{name} is not delbar-closed"))?;
            let h = harmonicity(&f, &g, Flavor::Delbar).map_err(|e| e.to_string())?;
            if let Some(w) = h.witness {
                failures.push(format!("{name} is not delbar-harmonic: {} = {}", w.condition, w.form));
            }
        }
        let r = independence_rank(&catalog::values(names), &sample_points()).map_err(|e| e.to_string())?;
        ensure(r == rank, || format!("rank of {names:?} is {r}, expected {rank}"))?;
    }
    if failures.is_empty() {
        Ok("15 representatives, ranks 4, 3, 4, 4".into())
    } else {
        Err(failures.join("; "))
    }
}

fn beta_star_representative() -> Outcome {
    let g = catalog::paper_metric();
    let beta = catalog::value("beta").map_err(|e| e.to_string())?;
    ensure(beta.delbar().map_err(|e| e.to_string())?.is_zero(), || "delbar(beta) != 0".into())?;
    let star = g.antilinear_star(&beta).map_err(|e| e.to_string())?;
    let fs = catalog::fubini_study();
    let dm_dmb = gen(Generator::Dm).wedge(&gen(Generator::Dmb));
    let shape = *dm_dmb.terms().next().unwrap().0;
    ensure(star.len() == 1 && !star.coefficient(shape).is_zero(), || format!("astar(beta) = {star}"))?;
    let factor = star.coefficient(shape).checked_div(&fs.coefficient(shape)).map_err(|e| e.to_string())?;
    ensure(star == fs.scale(&factor), || format!("astar(beta) = {star}"))?;
    let d = star.delbar().map_err(|e| e.to_string())?;
    ensure(d.is_zero(), || format!("delbar(astar(beta)) = {d}"))?;
    Ok(format!("astar(beta) = ({factor}) * FS"))
}

fn bott_chern_aeppli_bounds() -> Outcome {
    let g = catalog::paper_metric();
    let holds = |name: &str, p: Predicate| -> Result<(), String> {
        let f = catalog::value(name).map_err(|e| e.to_string())?;
        let (ok, w) = evaluate_predicate(&f, p, &g).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{name}: {} fails, witness {}", p.name(), w.map(|w| w.to_string()).unwrap_or_default()))
    };
    for name in catalog::ETAS {
        holds(name, Predicate::DClosed)?;
        holds(name, Predicate::BottChernHarmonic)?;
    }
    for name in catalog::AEPPLI_EXTRA {
        holds(name, Predicate::DdbarClosed)?;
    }
    for name in catalog::H12_REPS {
        holds(name, Predicate::AeppliHarmonic)?;
    }
    let n = CohomologyNumbers::bc(4, 5, 4);
    let d2 = diamond::delta(2, &TopologicalInput::torus(), &n).map_err(|e| e.to_string())?.value;
    // 4 + 5 - 2 (b+ + 1) with b+ = 3
    ensure(d2 == 4 + 5 - 8 && d2 > 0, || format!("Δ² = {d2}"))?;
    Ok("Δ² = 1".into())
}

fn diamond_arithmetic() -> Outcome {
    let torus = TopologicalInput::torus();
    ensure(betti_z(&torus) == [1, 4, 7, 8, 7, 4, 1], || format!("betti {:?}", betti_z(&torus)))?;
    let numbers = CohomologyNumbers { h11_dolbeault: Some(4), h12_dolbeault: Some(4), ..Default::default() };
    let hodge = diamond::diamond(&torus, DiamondKind::Hodge, Some(&numbers));
    let displayed = [
        [1, 4, 3, 0],
        [0, 4, 4, 0],
        [0, 4, 4, 0],
        [0, 3, 4, 1],
    ];
    for (p, row) in displayed.iter().enumerate() {
        for (q, &v) in row.iter().enumerate() {
            ensure(hodge.value(p, q) == Some(v), || format!("hodge ({p},{q}) = {:?}, expected {v}", hodge.get(p, q)))?;
        }
    }
    let bc = diamond::diamond(&torus, DiamondKind::BottChern, None);
    let bc_known = [((0, 0), 1), ((1, 0), 0), ((0, 1), 0), ((2, 0), 0), ((0, 2), 0), ((3, 0), 0), ((0, 3), 0), ((3, 1), 3), ((1, 3), 3), ((3, 2), 4), ((2, 3), 4), ((3, 3), 1)];
    for ((p, q), v) in bc_known {
        ensure(bc.value(p, q) == Some(v), || format!("bc ({p},{q}) = {:?}, expected {v}", bc.get(p, q)))?;
    }
    ensure(bc.unknowns() == ["h11", "h12", "h21", "h22"], || format!("bc unknowns {:?}", bc.unknowns()))?;
    let a = diamond::diamond(&torus, DiamondKind::Aeppli, None);
    let a_known = [((0, 0), 1), ((1, 0), 4), ((0, 1), 4), ((2, 0), 3), ((0, 2), 3), ((3, 0), 0), ((0, 3), 0), ((3, 1), 0), ((1, 3), 0), ((3, 2), 0), ((2, 3), 0), ((3, 3), 1)];
    for ((p, q), v) in a_known {
        ensure(a.value(p, q) == Some(v), || format!("aeppli ({p},{q}) = {:?}, expected {v}", a.get(p, q)))?;
    }
    let mut rng = random::rng(0xD1A);
    for _ in 0..1000 {
        let t = TopologicalInput::new(rng.gen_range(0..20), rng.gen_range(0..20), rng.gen_range(0..20));
        let n = rng.gen_bool(0.5).then(|| CohomologyNumbers::bc(rng.gen_range(0..30), rng.gen_range(0..30), rng.gen_range(0..30)));
        let bc = diamond::diamond(&t, DiamondKind::BottChern, n.as_ref());
        let a = diamond::diamond(&t, DiamondKind::Aeppli, n.as_ref());
        for p in 0..4 {
            for q in 0..4 {
                let (x, y) = (a.get(p, q), bc.get(3 - p, 3 - q));
                let same = match (x, y) {
                    (Some(Entry::Known(u)), Some(Entry::Known(v))) => u == v,
                    (Some(Entry::Unknown(_)), Some(Entry::Unknown(_))) => true,
                    _ => false,
                };
                ensure(same, || format!("{t:?} {n:?}: aeppli ({p},{q}) = {x:?}, bc ({},{}) = {y:?}", 3 - p, 3 - q))?;
            }
        }
    }
    Ok("torus diamonds and 1000-case duality sweep".into())
}

fn ddbar_decisions() -> Outcome {
    let decide = |t: TopologicalInput, n: CohomologyNumbers, mode| diamond::ddbar_decision(&t, &n, mode).map_err(|e| e.to_string());
    for mode in [DecisionMode::A, DecisionMode::B] {
        let d = decide(TopologicalInput::sphere(), CohomologyNumbers::bc(1, 1, 0), mode)?;
        ensure(d.holds && !d.non_realizable, || format!("sphere, mode {mode:?}: {d:?}"))?;
        let bc = d.bc_diamond.ok_or("missing forced BC diamond")?;
        ensure(bc.value(1, 1) == Some(1), || format!("forced h11_bc = {:?}", bc.get(1, 1)))?;
    }
    let d = decide(TopologicalInput::torus(), CohomologyNumbers { h11_bc: Some(4), h11_a: Some(5), ..Default::default() }, DecisionMode::A)?;
    ensure(!d.holds && d.reason == "Δ²=1", || format!("torus: {d:?}"))?;
    match diamond::frolicher_e1_check(&TopologicalInput::new(0, 1, 0), true) {
        FrolicherOutcome::Contradiction(_) => {}
        other => return Err(format!("fake projective plane: {other:?}")),
    }
    let expected = FrolicherHodgeNumbers { h01: 1, h02: 0, h11: 1, h21: 1 };
    match diamond::frolicher_e1_check(&TopologicalInput::new(1, 0, 0), false) {
        FrolicherOutcome::Consistent(h) if h == expected => {}
        other => return Err(format!("S1xS3: {other:?}")),
    }
    Ok("sphere yes, torus no, fake projective plane contradiction, S1xS3 consistent".into())
}

fn operator_properties() -> Outcome {
    let mut rng = random::rng(0xACC8);
    for _ in 0..200 {
        let (p, q) = random::bidegree(&mut rng);
        let a = random::form_of_bidegree(&mut rng, p, q);
        let (r, s) = random::bidegree(&mut rng);
        let b = random::form_of_bidegree(&mut rng, r, s);
        let da = a.d();
        ensure(da.d().is_zero(), || format!("d(d({a})) != 0"))?;
        let sign = RationalFunction::integer(if (p + q) % 2 == 0 { 1 } else { -1 });
        let lhs = a.wedge(&b).d();
        let rhs = &da.wedge(&b) + &a.wedge(&b.d()).scale(&sign);
        ensure(lhs == rhs, || format!("Leibniz fails for {a} and {b}"))?;
        let (del, delbar) = del_delbar(&a).map_err(|e| e.to_string())?;
        ensure(&del + &delbar == da, || format!("d({a}) has parts outside ({},{q}) and ({p},{})", p + 1, q + 1))?;
        for (part, bideg) in [(&del, (p + 1, q)), (&delbar, (p, q + 1))] {
            ensure(matches!(part.bidegree(), Bidegree::Zero) || part.bidegree() == Bidegree::Pure(bideg.0, bideg.1), || {
                format!("part of d({a}) is not of bidegree {bideg:?}")
            })?;
        }
        let conj_del = del.conjugate();
        let delbar_conj = a.conjugate().delbar().map_err(|e| e.to_string())?;
        ensure(conj_del == delbar_conj, || format!("conj(del({a})) != delbar(conj({a}))"))?;
    }
    let g = catalog::paper_metric();
    let basis: Vec<Form> = Monomial::all().map(|m| Form::term(RationalFunction::integer(1), m)).collect();
    let vol = g.volume_form().clone();
    let mut pairs = 0;
    for a in &basis {
        for b in &basis {
            if a.degree() != b.degree() {
                continue;
            }
            pairs += 1;
            let lhs = a.wedge(&g.antilinear_star(b).map_err(|e| e.to_string())?);
            ensure(lhs == vol.scale(&g.inner_product(a, b)), || format!("{a} ^ astar({b}) != <{a},{b}> vol"))?;
        }
        let k = a.degree().unwrap_or(0);
        let expected = if k % 2 == 0 { a.clone() } else { -a };
        let twice = g.star(&g.star(a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(twice == expected, || format!("star(star({a})) = {twice}"))?;
        let twice = g.antilinear_star(&g.antilinear_star(a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(twice == expected, || format!("astar(astar({a})) = {twice}"))?;
    }
    ensure(pairs == 924, || format!("{pairs} basis pairs"))?;
    Ok("200 random cases, 924 basis pairs, 64 monomials".into())
}

fn random_expression<R: Rng>(rng: &mut R, depth: u32, form: bool) -> String {
    const SCALAR_ATOMS: [&str; 6] = ["m", "mb", "i", "2", "3", "1"];
    const FORM_ATOMS: [&str; 10] = ["s1", "s2", "dm", "sb1", "sb2", "dmb", "dz1", "dz2", "dzb1", "dzb2"];
    if depth == 0 {
        return if form {
            FORM_ATOMS[rng.gen_range(0..FORM_ATOMS.len())].to_string()
        } else {
            SCALAR_ATOMS[rng.gen_range(0..SCALAR_ATOMS.len())].to_string()
        };
    }
    let sub = |rng: &mut R, form| random_expression(rng, depth - 1, form);
    match (form, rng.gen_range(0..6)) {
        (_, 0) => format!("{} + {}", sub(rng, form), sub(rng, form)),
        (_, 1) => format!("{} - {}", sub(rng, form), sub(rng, form)),
        (_, 2) => format!("-{}", sub(rng, form)),
        (false, 3) => format!("({})^{}", sub(rng, false), rng.gen_range(0..3)),
        (false, 4) => format!("({})/(1 + m*mb)", sub(rng, false)),
        (false, _) => format!("({})*({})", sub(rng, false), sub(rng, false)),
        (true, 3) => format!("({})*({})", sub(rng, false), sub(rng, true)),
        (true, 4) => format!("d({})", sub(rng, true)),
        (true, _) => format!("conj({})*({})", sub(rng, true), sub(rng, true)),
    }
}

fn parser_round_trip() -> Outcome {
    let round_trip = |f: &Form| -> Result<(), String> {
        let text = print(f);
        let back = eval_str(&text, None).map_err(|e| format!("{text}: {e}"))?;
        ensure(&back == f && print(&back) == text, || format!("{text} reparses as {}", print(&back)))
    };
    for entry in catalog::entries() {
        round_trip(&entry.value)?;
    }
    let mut rng = random::rng(0xACC9);
    let mut done = 0;
    while done < 200 {
        let form = rng.gen_bool(0.7);
        let text = random_expression(&mut rng, 3, form);
        let expr = parse(&text).map_err(|e| format!("{text}: {e}"))?;
        let shown = expr.to_string();
        let reparsed = parse(&shown).map_err(|e| format!("{shown}: {e}"))?;
        ensure(reparsed.to_string() == shown, || format!("{text} prints as {shown}, then as {reparsed}"))?;
        // division by a vanishing scalar is rejected; draw another expression
        let Ok(value) = parser::evaluate(&expr, None) else { continue };
        ensure(parser::evaluate(&reparsed, None).ok().as_ref() == Some(&value), || format!("{text} and {shown} differ"))?;
        round_trip(&value)?;
        done += 1;
    }
    let cases = [
        ("(mb*dzb1 - dz2)/(1+m*mb)", "sb1"),
        ("(mb*dzb2 + dz1)/(1+m*mb)", "sb2"),
        ("d(sb1)", "-1/(m*mb + 1) * s2*dmb - mb/(m*mb + 1) * dm*sb1"),
    ];
    for (input, expected) in cases {
        let shown = print(&eval_str(input, None).map_err(|e| e.to_string())?);
        ensure(shown == expected, || format!("{input} prints as {shown}, expected {expected}"))?;
    }
    let d_sb1 = eval_str("(dmb*s2 - mb*dm*sb1)/(1+m*mb)", None).map_err(|e| e.to_string())?;
    ensure(d_sb1 == gen(Generator::Sb1).d(), || "d(sb1) disagrees with its hand-expanded structure equation".into())?;
    Ok(format!("{} catalog entries, 200 random expressions", catalog::entries().len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 9] = [
        ("structure-equation oracle", structure_equation_oracle, Some(Duration::from_secs(5))),
        ("omega-bar identities", omega_bar_identities, Some(Duration::from_secs(1))),
        ("Dolbeault representatives", dolbeault_representatives, Some(Duration::from_secs(30))),
        ("beta star representative", beta_star_representative, None),
        ("Bott-Chern/Aeppli bounds", bott_chern_aeppli_bounds, None),
        ("diamond arithmetic", diamond_arithmetic, None),
        ("ddbar-lemma decisions", ddbar_decisions, None),
        ("operator properties", operator_properties, Some(Duration::from_secs(60))),
        ("parser round trip", parser_round_trip, None),
    ];
    let mut failed = 0;
    for (k, (title, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > *limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title} ({} ms): {detail}", k + 1, elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({} ms): {why}", k + 1, elapsed.as_millis());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
