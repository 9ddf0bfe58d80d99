#![allow(dead_code)]

use std::process::{Command, Output};

use strata_lab::pbw::Presentation;
use strata_lab_cli::dsl::{self, Family, ZooCall};

pub const NON_CONFLUENT: &str = "\
algebra skewed
params q
generators a b c
rules
b*a = q*a*b
c*a = a*c
c*b = b*c + a
";

pub const BAD_SYNTAX: &str = "\
algebra broken
params q
generators x y
rules
y*x = q*
";

pub fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata-lab"))
        .args(args)
        .env_remove("STRATA_LAB_FUEL")
        .output()
        .expect("binary runs")
}

/// Every constructor the DSL can name, at small sizes.
pub fn zoo_calls() -> Vec<ZooCall> {
    let mut out = Vec::new();
    let call = |family, n, m: Option<usize>, single: Option<&str>| ZooCall { family, n, m, single: single.map(String::from) };
    for n in 0..=4 {
        out.push(call(Family::QuantumAffine, n, None, None));
        out.push(call(Family::QuantumTorus, n, None, None));
    }
    out.push(call(Family::QuantumAffine, 3, None, Some("q")));
    out.push(call(Family::QuantumTorus, 3, None, Some("q")));
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        out.push(call(Family::QuantumMatrices, n, Some(m), None));
    }
    out.push(call(Family::QuantumMatrices, 2, None, Some("q")));
    for n in 1..=3 {
        out.push(call(Family::QuantizedWeyl, n, None, None));
        out.push(call(Family::QuantumSymplectic, n, None, None));
    }
    for n in 2..=5 {
        out.push(call(Family::QuantumEuclidean, n, None, None));
    }
    out
}

/// Equal names, generators, parameters, rules and weights.
pub fn same_presentation(a: &Presentation, b: &Presentation) -> bool {
    a.name() == b.name()
        && a.generators() == b.generators()
        && a.kinds() == b.kinds()
        && a.context().symbols() == b.context().symbols()
        && a.weights() == b.weights()
        && a.rules().zip(b.rules()).all(|(x, y)| x == y)
        && a.rules().count() == b.rules().count()
}

/// `parse(print(p))` rebuilds `p`, and printing is a fixed point.
pub fn round_trips(p: &Presentation) -> Result<(), String> {
    let text = dsl::print(p);
    let back = dsl::parse(&text).and_then(|s| s.build()).map_err(|e| format!("{}: {e}\n{text}", p.name()))?;
    if !same_presentation(p, &back.presentation) {
        return Err(format!("{}: reparsed presentation differs\n{text}", p.name()));
    }
    if dsl::print(&back.presentation) != text {
        return Err(format!("{}: printing is not stable", p.name()));
    }
    Ok(())
}
