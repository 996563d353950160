//! Integer bookkeeping for twistor spaces of compact self-dual 4-manifolds:
//! Betti numbers, Hodge / Bott-Chern / Aeppli diamonds, the defects
//! `Delta^k`, decision procedures for the ddbar-lemma, and a consistency
//! check for degeneration of the Frolicher spectral sequence at `E_1`.
//!
//! Inputs are raw integers; nothing here claims that a manifold with the
//! given numbers exists.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `b1`, `b+` and `b-` of the base 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TopologicalInput {
    pub b1: u64,
    pub b_plus: u64,
    pub b_minus: u64,
}

impl TopologicalInput {
    pub const fn new(b1: u64, b_plus: u64, b_minus: u64) -> Self {
        Self { b1, b_plus, b_minus }
    }

    pub const fn torus() -> Self {
        Self::new(4, 3, 3)
    }

    pub const fn sphere() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn b2(&self) -> u64 {
        self.b_plus + self.b_minus
    }
}

/// Candidate cohomology numbers of the twistor space, each optional.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyNumbers {
    pub h11_bc: Option<u64>,
    pub h11_a: Option<u64>,
    pub h12_bc: Option<u64>,
    /// Dolbeault `h^{1,1}`; fills the middle of the Hodge diamond.
    pub h11_dolbeault: Option<u64>,
    /// Dolbeault `h^{1,2}`.
    pub h12_dolbeault: Option<u64>,
}

impl CohomologyNumbers {
    pub fn bc(h11_bc: u64, h11_a: u64, h12_bc: u64) -> Self {
        Self { h11_bc: Some(h11_bc), h11_a: Some(h11_a), h12_bc: Some(h12_bc), ..Self::default() }
    }

    fn require(value: Option<u64>, name: &'static str) -> Result<u64> {
        value.ok_or(Error::MissingNumber(name))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondKind {
    Hodge,
    BottChern,
    Aeppli,
    Betti,
}

impl DiamondKind {
    pub fn name(self) -> &'static str {
        match self {
            DiamondKind::Hodge => "hodge",
            DiamondKind::BottChern => "bott_chern",
            DiamondKind::Aeppli => "aeppli",
            DiamondKind::Betti => "betti",
        }
    }

    /// Superscript label used when rendering entries.
    fn label(self) -> &'static str {
        match self {
            DiamondKind::Hodge => "delbar",
            DiamondKind::BottChern => "BC",
            DiamondKind::Aeppli => "A",
            DiamondKind::Betti => "b",
        }
    }
}

impl std::str::FromStr for DiamondKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "hodge" => Ok(DiamondKind::Hodge),
            "bc" | "bott_chern" => Ok(DiamondKind::BottChern),
            "aeppli" => Ok(DiamondKind::Aeppli),
            "betti" => Ok(DiamondKind::Betti),
            other => Err(format!("unknown diamond kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Entry {
    Known(u64),
    Unknown(&'static str),
}

impl Entry {
    pub fn value(&self) -> Option<u64> {
        match self {
            Entry::Known(v) => Some(*v),
            Entry::Unknown(_) => None,
        }
    }

    fn from_option(value: Option<u64>, symbol: &'static str) -> Self {
        value.map_or(Entry::Unknown(symbol), Entry::Known)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Known(v) => write!(f, "{v}"),
            Entry::Unknown(s) => f.write_str(s),
        }
    }
}

/// Entries indexed by `(p, q)`. Betti "diamonds" store `b_k` at `(k, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diamond {
    pub kind: DiamondKind,
    pub entries: BTreeMap<(usize, usize), Entry>,
    pub warnings: Vec<String>,
}

impl Diamond {
    pub fn get(&self, p: usize, q: usize) -> Option<&Entry> {
        self.entries.get(&(p, q))
    }

    pub fn value(&self, p: usize, q: usize) -> Option<u64> {
        self.get(p, q).and_then(Entry::value)
    }

    /// Symbols of the entries that are not determined by the inputs.
    pub fn unknowns(&self) -> Vec<&'static str> {
        let mut out: Vec<_> = self
            .entries
            .values()
            .filter_map(|e| match e {
                Entry::Unknown(s) => Some(*s),
                Entry::Known(_) => None,
            })
            .collect();
        out.dedup();
        out
    }

    /// Triangular layout: row `k` lists `h^{p,q}` with `p + q = k`, `p` decreasing.
    pub fn render(&self) -> String {
        if self.kind == DiamondKind::Betti {
            let values: Vec<String> = (0..=6).map(|k| self.entries[&(k, 0)].to_string()).collect();
            return values.join(", ");
        }
        let rows: Vec<Vec<String>> = (0..=6)
            .map(|k| {
                (0..=3)
                    .rev()
                    .filter(|&p| k >= p && k - p <= 3)
                    .map(|p| format!("h^{{{},{}}}_{}={}", p, k - p, self.kind.label(), self.entries[&(p, k - p)]))
                    .collect()
            })
            .collect();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for row in rows {
            let indent = (4 - row.len()) * (width + 2) / 2;
            let cells: Vec<String> = row.iter().map(|c| format!("{c:^width$}")).collect();
            out.push_str(&" ".repeat(indent));
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `b_0, ..., b_6` of the twistor space.
pub fn betti_z(t: &TopologicalInput) -> [u64; 7] {
    let (b1, b2, b3) = (t.b1, t.b2() + 1, 2 * t.b1);
    [1, b1, b2, b3, b2, b1, 1]
}

fn consistency_warnings(t: &TopologicalInput, n: &CohomologyNumbers) -> Vec<String> {
    let mut out = Vec::new();
    if let (Some(bc), Some(a)) = (n.h11_bc, n.h11_a) {
        if bc + a < 2 * (t.b_plus + 1) {
            out.push(format!(
                "h11_bc + h11_a = {} < 2(b+ + 1) = {}: not realizable by a twistor space",
                bc + a,
                2 * (t.b_plus + 1)
            ));
        }
    }
    if let Some(h12) = n.h12_bc {
        if h12 < t.b1 {
            out.push(format!("h12_bc = {h12} < b1 = {}: not realizable by a twistor space", t.b1));
        }
    }
    out
}

/// Symbol naming an undetermined middle slot.
fn slot(p: usize, q: usize) -> &'static str {
    match (p, q) {
        (1, 1) => "h11",
        (1, 2) => "h12",
        (2, 1) => "h21",
        (2, 2) => "h22",
        _ => unreachable!("only middle slots can be unknown"),
    }
}

fn bott_chern_entries(t: &TopologicalInput, n: &CohomologyNumbers) -> BTreeMap<(usize, usize), Entry> {
    let mut e = BTreeMap::new();
    for p in 0..=3 {
        for q in 0..=3 {
            e.insert((p, q), Entry::Known(0));
        }
    }
    e.insert((0, 0), Entry::Known(1));
    e.insert((3, 3), Entry::Known(1));
    e.insert((3, 1), Entry::Known(t.b_minus));
    e.insert((1, 3), Entry::Known(t.b_minus));
    e.insert((3, 2), Entry::Known(t.b1));
    e.insert((2, 3), Entry::Known(t.b1));
    e.insert((1, 1), Entry::from_option(n.h11_bc, "h11"));
    e.insert((2, 1), Entry::from_option(n.h12_bc, "h21"));
    e.insert((1, 2), Entry::from_option(n.h12_bc, "h12"));
    // h^{2,2}_BC = h^{1,1}_A by duality
    e.insert((2, 2), Entry::from_option(n.h11_a, "h22"));
    e
}

fn hodge_entries(t: &TopologicalInput, n: &CohomologyNumbers) -> BTreeMap<(usize, usize), Entry> {
    let mut e = BTreeMap::new();
    for p in 0..=3 {
        for q in 0..=3 {
            e.insert((p, q), Entry::Known(0));
        }
    }
    e.insert((0, 0), Entry::Known(1));
    e.insert((3, 3), Entry::Known(1));
    e.insert((0, 1), Entry::Known(t.b1));
    e.insert((3, 2), Entry::Known(t.b1));
    e.insert((0, 2), Entry::Known(t.b_minus));
    e.insert((3, 1), Entry::Known(t.b_minus));
    e.insert((1, 1), Entry::from_option(n.h11_dolbeault, "h11"));
    e.insert((2, 2), Entry::from_option(n.h11_dolbeault, "h22"));
    e.insert((1, 2), Entry::from_option(n.h12_dolbeault, "h12"));
    e.insert((2, 1), Entry::from_option(n.h12_dolbeault, "h21"));
    e
}

pub fn diamond(t: &TopologicalInput, kind: DiamondKind, numbers: Option<&CohomologyNumbers>) -> Diamond {
    let empty = CohomologyNumbers::default();
    let n = numbers.unwrap_or(&empty);
    let entries = match kind {
        DiamondKind::Hodge => hodge_entries(t, n),
        DiamondKind::BottChern => bott_chern_entries(t, n),
        DiamondKind::Aeppli => {
            let bc = bott_chern_entries(t, n);
            bc.iter()
                .map(|(&(p, q), e)| {
                    let (p, q) = (3 - p, 3 - q);
                    let e = match e {
                        Entry::Unknown(_) => Entry::Unknown(slot(p, q)),
                        known => known.clone(),
                    };
                    ((p, q), e)
                })
                .collect()
        }
        DiamondKind::Betti => betti_z(t).iter().enumerate().map(|(k, &b)| ((k, 0), Entry::Known(b))).collect(),
    };
    let warnings = if kind == DiamondKind::Betti { Vec::new() } else { consistency_warnings(t, n) };
    Diamond { kind, entries, warnings }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub k: usize,
    pub value: i64,
}

fn check_degree(k: i64) -> Result<usize> {
    if (0..=6).contains(&k) {
        Ok(k as usize)
    } else {
        Err(Error::DegreeOutOfRange(k))
    }
}

/// Closed-form `Delta^k`; degrees above 3 use `Delta^k = Delta^{6-k}`.
pub fn delta(k: i64, t: &TopologicalInput, numbers: &CohomologyNumbers) -> Result<DeltaReport> {
    let k = check_degree(k)?;
    let value = match k.min(6 - k) {
        0 | 1 => 0,
        2 => {
            let bc = CohomologyNumbers::require(numbers.h11_bc, "h11_bc")? as i64;
            let a = CohomologyNumbers::require(numbers.h11_a, "h11_a")? as i64;
            bc + a - 2 * (t.b_plus as i64 + 1)
        }
        _ => {
            let h12 = CohomologyNumbers::require(numbers.h12_bc, "h12_bc")? as i64;
            4 * (h12 - t.b1 as i64)
        }
    };
    Ok(DeltaReport { k, value })
}

/// `Delta^k` summed directly over the Bott-Chern and Aeppli diamonds.
pub fn delta_from_diamonds(k: i64, t: &TopologicalInput, numbers: &CohomologyNumbers) -> Result<DeltaReport> {
    let k = check_degree(k)?;
    let bc = diamond(t, DiamondKind::BottChern, Some(numbers));
    let a = diamond(t, DiamondKind::Aeppli, Some(numbers));
    let mut sum = 0i64;
    for p in 0..=k.min(3) {
        let q = k - p;
        if q > 3 {
            continue;
        }
        for d in [&bc, &a] {
            sum += match d.get(p, q).expect("full diamond") {
                Entry::Known(v) => *v as i64,
                Entry::Unknown(s) => return Err(Error::MissingNumber(missing_name(d.kind, s))),
            };
        }
    }
    Ok(DeltaReport { k, value: sum - 2 * betti_z(t)[k] as i64 })
}

fn missing_name(kind: DiamondKind, symbol: &str) -> &'static str {
    match (kind, symbol) {
        (DiamondKind::BottChern, "h11") | (DiamondKind::Aeppli, "h22") => "h11_bc",
        (DiamondKind::BottChern, "h22") | (DiamondKind::Aeppli, "h11") => "h11_a",
        _ => "h12_bc",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DecisionMode {
    /// `Delta^2 = 0` and `Delta^3 = 0`.
    A,
    /// `h^{1,0}_A = h^{2,0}_A = 0` and `h^{1,1}_BC = h^{1,1}_A = b+ + 1`.
    B,
}

impl std::str::FromStr for DecisionMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(DecisionMode::A),
            "B" | "b" => Ok(DecisionMode::B),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdbarDecision {
    pub mode: DecisionMode,
    pub holds: bool,
    /// Short justification, e.g. `Δ²=1`.
    pub reason: String,
    /// `(b1(Z), b2(Z), b3(Z))` forced by the lemma.
    pub betti_profile: Option<(u64, u64, u64)>,
    pub bc_diamond: Option<Diamond>,
    /// Verdict of the other mode, when its inputs are available.
    pub other_mode: Option<bool>,
    /// The two modes disagree, so no twistor space has these numbers.
    pub non_realizable: bool,
    pub warnings: Vec<String>,
}

fn decide(mode: DecisionMode, t: &TopologicalInput, n: &CohomologyNumbers) -> Result<(bool, String)> {
    match mode {
        DecisionMode::A => {
            let d2 = delta(2, t, n)?.value;
            if d2 != 0 {
                return Ok((false, format!("Δ²={d2}")));
            }
            let d3 = delta(3, t, n)?.value;
            if d3 != 0 {
                Ok((false, format!("Δ³={d3}")))
            } else {
                Ok((true, "Δ²=0 and Δ³=0".to_string()))
            }
        }
        DecisionMode::B => {
            let bc = CohomologyNumbers::require(n.h11_bc, "h11_bc")?;
            let a = CohomologyNumbers::require(n.h11_a, "h11_a")?;
            let target = t.b_plus + 1;
            let mut failures = Vec::new();
            if t.b1 != 0 {
                failures.push(format!("h10_A=b1={}", t.b1));
            }
            if t.b_minus != 0 {
                failures.push(format!("h20_A=b-={}", t.b_minus));
            }
            if bc != target {
                failures.push(format!("h11_bc={bc}≠b++1={target}"));
            }
            if a != target {
                failures.push(format!("h11_a={a}≠b++1={target}"));
            }
            if failures.is_empty() {
                Ok((true, format!("h10_A=h20_A=0 and h11_bc=h11_a=b++1={target}")))
            } else {
                Ok((false, failures.join(", ")))
            }
        }
    }
}

/// The Bott-Chern diamond forced by the ddbar-lemma.
pub fn ddbar_bc_diamond(t: &TopologicalInput) -> Diamond {
    let h = t.b_plus + 1;
    let forced = TopologicalInput::new(0, t.b_plus, 0);
    let numbers = CohomologyNumbers { h11_bc: Some(h), h11_a: Some(h), h12_bc: Some(0), ..Default::default() };
    diamond(&forced, DiamondKind::BottChern, Some(&numbers))
}

pub fn ddbar_decision(t: &TopologicalInput, numbers: &CohomologyNumbers, mode: DecisionMode) -> Result<DdbarDecision> {
    let (holds, reason) = decide(mode, t, numbers)?;
    let other = match mode {
        DecisionMode::A => DecisionMode::B,
        DecisionMode::B => DecisionMode::A,
    };
    let other_mode = decide(other, t, numbers).ok().map(|(v, _)| v);
    let non_realizable = other_mode.is_some_and(|v| v != holds);
    let mut warnings = consistency_warnings(t, numbers);
    if non_realizable {
        warnings.push("modes A and B disagree: no twistor space has these numbers".to_string());
    }
    Ok(DdbarDecision {
        mode,
        holds,
        reason,
        betti_profile: holds.then(|| (0, t.b2() + 1, 0)),
        bc_diamond: holds.then(|| ddbar_bc_diamond(t)),
        other_mode,
        non_realizable,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrolicherHodgeNumbers {
    pub h01: u64,
    pub h02: u64,
    pub h11: u64,
    pub h21: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrolicherOutcome {
    Consistent(FrolicherHodgeNumbers),
    Contradiction(Vec<String>),
}

/// Assumes `E_1 = E_inf` and derives the Hodge numbers; reports a
/// contradiction if they clash with the kernel of `H^{1,1} -> H^{2,1}`
/// (dimension `b- + 1`) or, for regular metrics, with the exact sequence
/// `0 -> H^2_+ -> H^{1,1} -> C -> 0`.
pub fn frolicher_e1_check(t: &TopologicalInput, regular: bool) -> FrolicherOutcome {
    let betti = betti_z(t);
    let (h01, h02) = (t.b1, t.b_minus);
    let mut trace = vec![format!("b3(Z)={} = 2·h21 ⇒ h21={}", betti[3], betti[3] / 2)];
    let h21 = betti[3] / 2;
    // b2(Z) = h20 + h11 + h02 with h20 = 0
    let h11 = betti[2] - h02;
    trace.push(format!("b2(Z)={} = h11 + b₋ ⇒ h11={}", betti[2], h11));
    if regular {
        let exact = t.b_plus + 1;
        trace.push(format!("regular: 0→H²₊→H¹¹→ℂ→0 ⇒ h11=b₊+1={exact}"));
        if exact != h11 {
            trace.push(format!("h11={h11} contradicts exact sequence value {exact}"));
            return FrolicherOutcome::Contradiction(trace);
        }
    }
    let kernel = t.b_minus + 1;
    if kernel > h11 {
        trace.push(format!("kernel dim b₋+1={kernel} exceeds h11={h11}"));
        return FrolicherOutcome::Contradiction(trace);
    }
    if h21 == 0 && kernel != h11 {
        trace.push(format!("h21=0 ⇒ kernel dim must be {h11}, but equals b₋+1={kernel}"));
        return FrolicherOutcome::Contradiction(trace);
    }
    FrolicherOutcome::Consistent(FrolicherHodgeNumbers { h01, h02, h11, h21 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_examples() {
        assert_eq!(betti_z(&TopologicalInput::torus()), [1, 4, 7, 8, 7, 4, 1]);
        assert_eq!(betti_z(&TopologicalInput::sphere()), [1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(betti_z(&TopologicalInput::new(0, 1, 0)), [1, 0, 2, 0, 2, 0, 1]);
    }

    #[test]
    fn bott_chern_and_aeppli_examples() {
        let t = TopologicalInput::torus();
        let bc = diamond(&t, DiamondKind::BottChern, None);
        assert_eq!(bc.value(3, 1), Some(3));
        assert_eq!(bc.value(3, 2), Some(4));
        assert_eq!(bc.value(1, 0), Some(0));
        assert_eq!(bc.unknowns(), vec!["h11", "h12", "h21", "h22"]);
        let a = diamond(&t, DiamondKind::Aeppli, None);
        assert_eq!(a.value(1, 0), Some(4));
        assert_eq!(a.value(2, 0), Some(3));
        assert_eq!(a.value(3, 0), Some(0));
        assert_eq!(a.get(1, 1), Some(&Entry::Unknown("h11")));
    }

    #[test]
    fn hodge_template() {
        let t = TopologicalInput::torus();
        let numbers = CohomologyNumbers { h11_dolbeault: Some(4), h12_dolbeault: Some(4), ..Default::default() };
        let h = diamond(&t, DiamondKind::Hodge, Some(&numbers));
        assert_eq!((h.value(1, 1), h.value(1, 2), h.value(0, 2), h.value(0, 1)), (Some(4), Some(4), Some(3), Some(4)));
        let template = diamond(&TopologicalInput::new(1, 0, 0), DiamondKind::Hodge, None);
        assert_eq!((template.value(0, 1), template.value(0, 2)), (Some(1), Some(0)));
        assert_eq!(template.unknowns(), vec!["h11", "h12", "h21", "h22"]);
    }

    #[test]
    fn delta_examples() {
        let t = TopologicalInput::torus();
        let n = CohomologyNumbers { h11_bc: Some(4), h11_a: Some(5), h12_bc: Some(4), ..Default::default() };
        assert_eq!(delta(1, &t, &CohomologyNumbers::default()).unwrap().value, 0);
        assert_eq!(delta(2, &t, &n).unwrap().value, 1);
        assert_eq!(delta(3, &t, &n).unwrap().value, 0);
        assert_eq!(delta(4, &t, &n).unwrap().value, 1);
        assert!(matches!(delta(2, &t, &CohomologyNumbers::default()), Err(Error::MissingNumber("h11_bc"))));
        assert!(matches!(delta(7, &t, &n), Err(Error::DegreeOutOfRange(7))));
        for k in 0..=6 {
            assert_eq!(delta(k, &t, &n).unwrap(), delta_from_diamonds(k, &t, &n).unwrap());
        }
    }

    #[test]
    fn decision_examples() {
        let torus = TopologicalInput::torus();
        let n = CohomologyNumbers { h11_bc: Some(4), h11_a: Some(5), ..Default::default() };
        let d = ddbar_decision(&torus, &n, DecisionMode::A).unwrap();
        assert!(!d.holds);
        assert_eq!(d.reason, "Δ²=1");

        let s4 = ddbar_decision(&TopologicalInput::sphere(), &CohomologyNumbers::bc(1, 1, 0), DecisionMode::B).unwrap();
        assert!(s4.holds && s4.other_mode == Some(true) && !s4.non_realizable);
        assert_eq!(s4.betti_profile, Some((0, 1, 0)));
        assert_eq!(s4.bc_diamond.unwrap().value(1, 1), Some(1));

        let cp2 = ddbar_decision(&TopologicalInput::new(0, 1, 0), &CohomologyNumbers::bc(2, 2, 0), DecisionMode::B).unwrap();
        assert!(cp2.holds);
        let bc = cp2.bc_diamond.unwrap();
        assert_eq!((bc.value(1, 1), bc.value(2, 2), bc.value(1, 2)), (Some(2), Some(2), Some(0)));

        let probe = ddbar_decision(&TopologicalInput::sphere(), &CohomologyNumbers::bc(0, 2, 0), DecisionMode::A).unwrap();
        assert!(probe.holds && probe.non_realizable);
        assert!(!probe.warnings.is_empty());

        let missing = ddbar_decision(&torus, &CohomologyNumbers::default(), DecisionMode::B);
        assert!(matches!(missing, Err(Error::MissingNumber("h11_bc"))));
    }

    #[test]
    fn frolicher_examples() {
        match frolicher_e1_check(&TopologicalInput::new(0, 1, 0), true) {
            FrolicherOutcome::Contradiction(trace) => {
                assert_eq!(trace.last().unwrap(), "h21=0 ⇒ kernel dim must be 2, but equals b₋+1=1")
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            frolicher_e1_check(&TopologicalInput::new(1, 0, 0), false),
            FrolicherOutcome::Consistent(FrolicherHodgeNumbers { h01: 1, h02: 0, h11: 1, h21: 1 })
        );
        match frolicher_e1_check(&TopologicalInput::torus(), true) {
            FrolicherOutcome::Consistent(h) => assert_eq!((h.h11, h.h21), (4, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn render_layout() {
        let text = diamond(&TopologicalInput::torus(), DiamondKind::BottChern, None).render();
        assert_eq!(text.lines().count(), 7);
        assert!(text.contains("h^{3,1}_BC=3"));
        assert_eq!(diamond(&TopologicalInput::sphere(), DiamondKind::Betti, None).render(), "1, 0, 1, 0, 1, 0, 1");
    }
}
