//! The `strata-lab` command line: parses an algebra, runs one computation,
//! and prints a deterministic JSON report (or DOT for `poset --dot`).

pub mod dsl;
mod report;

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use strata_lab::grading::{homogeneous_components, inhomogeneous_rules, is_homogeneous, scalar_normality_check};
use strata_lab::lattice::lattice_contains;
use strata_lab::pbw::{diamond_check, hilbert_count, Presentation, DEFAULT_FUEL};
use strata_lab::qdet::{quantum_determinant, sl_common_value, verify_det_normality};
use strata_lab::strat::{brute_force_central_monomials, stratification_axioms_check, HPrime, Stratification};
use strata_lab::{Assignment, Error};

use dsl::{format_element, format_monomial, Algebra};
pub use report::{Report, Status};

pub const FUEL_ENV: &str = "STRATA_LAB_FUEL";

#[derive(Parser, Debug)]
#[command(name = "strata-lab", version, about = "Exact computations in quantized coordinate rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// A presentation file, or inline source such as `use quantum_affine(n=2)`.
    algebra: String,
    /// Rewrite budget per call (overrides the STRATA_LAB_FUEL variable).
    #[arg(long, global = true)]
    fuel: Option<u64>,
    /// Rational values for parameters, e.g. `q=2,t=3/5`.
    #[arg(long, global = true)]
    specialize: Option<String>,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every overlap of the rewriting rules.
    Verify(Common),
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Counts of PBW monomials by degree against the commutative count.
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
    /// The quantum determinant of square quantum matrices.
    Qdet(Common),
    /// Check the determinant's normality identities.
    QdetVerify(Common),
    /// The centrality criterion for the determinant.
    SlCheck(Common),
    /// Generator weights and rule homogeneity.
    Weights(Common),
    /// Homogeneity and torus eigenvalue of an element.
    Eigencheck {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Scalar normality of an element.
    Normalcheck {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Torus-invariant primes of a quantum affine space.
    Hspec(Common),
    /// Every stratum with its center.
    Strata(Common),
    /// One stratum's center, optionally checked by brute force.
    Center {
        #[command(flatten)]
        common: Common,
        /// Indices (1-based, comma separated) generating the H-prime.
        #[arg(long, default_value = "")]
        w: String,
        /// Search box for the brute-force check.
        #[arg(long = "box")]
        bound: Option<i32>,
    },
    /// A normal element separating two nested H-primes.
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// The H-prime poset and the stratification checks.
    Poset {
        #[command(flatten)]
        common: Common,
        /// Emit a DOT digraph instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify(_) => "verify",
            Command::Nf { .. } => "nf",
            Command::Hilbert { .. } => "hilbert",
            Command::Qdet(_) => "qdet",
            Command::QdetVerify(_) => "qdet-verify",
            Command::SlCheck(_) => "sl-check",
            Command::Weights(_) => "weights",
            Command::Eigencheck { .. } => "eigencheck",
            Command::Normalcheck { .. } => "normalcheck",
            Command::Hspec(_) => "hspec",
            Command::Strata(_) => "strata",
            Command::Center { .. } => "center",
            Command::Witness { .. } => "witness",
            Command::Poset { .. } => "poset",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Verify(c)
            | Command::Qdet(c)
            | Command::QdetVerify(c)
            | Command::SlCheck(c)
            | Command::Weights(c)
            | Command::Hspec(c)
            | Command::Strata(c) => c,
            Command::Nf { common, .. }
            | Command::Hilbert { common, .. }
            | Command::Eigencheck { common, .. }
            | Command::Normalcheck { common, .. }
            | Command::Center { common, .. }
            | Command::Witness { common, .. }
            | Command::Poset { common, .. } => common,
        }
    }
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Errors caused by the input rather than by a failed check.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::UnknownSymbol(_)
            | Error::UnknownGenerator(_)
            | Error::MissingRulePair(..)
            | Error::NonUnitSwap(..)
            | Error::InvalidPresentation(_)
            | Error::BadMatrix(_)
            | Error::BadContext(_)
            | Error::DegenerateLambda
            | Error::Precondition(_)
            | Error::NegativeExponent(_)
            | Error::ZeroElement
            | Error::ZeroAssignment(_)
            | Error::UnassignedSymbol(_)
    )
}

fn read_source(arg: &str) -> Result<String, String> {
    let path = Path::new(arg);
    if !arg.contains('\n') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {arg}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn resolve_fuel(flag: Option<u64>, env: Option<&str>) -> Result<u64, String> {
    let fuel = match (flag, env) {
        (Some(f), _) => f,
        (None, Some(v)) => v.trim().parse().map_err(|_| format!("{FUEL_ENV} must be a positive integer, got `{v}`"))?,
        (None, None) => DEFAULT_FUEL,
    };
    if fuel == 0 {
        return Err("fuel must be positive".into());
    }
    Ok(fuel)
}

fn parse_indices(n: usize, text: &str) -> Result<HPrime, Error> {
    let mut w = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let k: usize = part
            .parse()
            .ok()
            .filter(|&k| k >= 1 && k <= n)
            .ok_or_else(|| Error::Precondition(format!("`{part}` is not an index in 1..={n}")))?;
        w.push(k - 1);
    }
    HPrime::new(n, w)
}

/// Runs the command line given by `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let command = cli.command;
    let common = command.common().clone();
    let source = match read_source(&common.algebra) {
        Ok(s) => s,
        Err(msg) => return Outcome { stdout: String::new(), stderr: msg + "\n", code: 2 },
    };
    let mut report = Report::new(command.name(), &source, &command_inputs(&command));
    let fuel = match resolve_fuel(common.fuel, std::env::var(FUEL_ENV).ok().as_deref()) {
        Ok(f) => f,
        Err(msg) => return report.error(&msg, 2),
    };
    let algebra = match dsl::parse(&source).and_then(|s| s.build()) {
        Ok(mut a) => {
            a.presentation = a.presentation.with_fuel(fuel);
            a
        }
        Err(e) => return report.error(&e.to_string(), 2),
    };
    let specialization = match common.specialize.as_deref().map(Assignment::parse).transpose() {
        Ok(s) => s,
        Err(e) => return report.error(&e.to_string(), 2),
    };
    match execute(&command, &algebra, specialization.as_ref(), &mut report) {
        Ok(Some(dot)) => Outcome { stdout: dot, stderr: String::new(), code: report.status.code() },
        Ok(None) => report.finish(),
        Err(e) => {
            let code = if is_usage_error(&e) { 2 } else { 1 };
            report.error(&e.to_string(), code)
        }
    }
}

fn command_inputs(command: &Command) -> Vec<String> {
    let c = command.common();
    let mut v = vec![format!("specialize={}", c.specialize.clone().unwrap_or_default())];
    match command {
        Command::Nf { expr, .. } | Command::Eigencheck { expr, .. } | Command::Normalcheck { expr, .. } => {
            v.push(format!("expr={expr}"))
        }
        Command::Hilbert { max_degree, .. } => v.push(format!("max_degree={max_degree}")),
        Command::Center { w, bound, .. } => v.push(format!("w={w};box={bound:?}")),
        Command::Witness { from, to, .. } => v.push(format!("from={from};to={to}")),
        Command::Poset { dot, .. } => v.push(format!("dot={dot}")),
        _ => {}
    }
    v
}

fn element_json(p: &Presentation, a: &strata_lab::Element) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .map(|(m, c)| json!({ "monomial": m, "coeff": p.context().display(c).to_string() }))
        .collect();
    json!({ "terms": terms, "text": format_element(p, a) })
}

fn stratifier(algebra: &Algebra, spec: Option<&Assignment>) -> Result<Stratification, Error> {
    Stratification::new(&algebra.presentation, spec)
}

/// Lexicographic points of `[-b, b]^n`.
pub fn box_points(n: usize, b: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n).map(|_| -b..=b).multi_cartesian_product().collect()
}

fn int_json(x: &num_bigint::BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn stratum_json(s: &strata_lab::strat::StratumReport) -> Value {
    let basis: Vec<Vec<Value>> = s.center_basis.iter().map(|v| v.iter().map(int_json).collect()).collect();
    json!({
        "hprime": s.hprime.one_based(),
        "center_rank": s.center_rank,
        "center_basis": basis,
        "torus_size": s.torus_size(),
        "citations": report::STRATUM_CITATIONS,
    })
}

fn matrix_params(algebra: &Algebra) -> Result<&strata_lab::zoo::MatrixParams, Error> {
    let p = &algebra.presentation;
    match &algebra.matrix_params {
        Some(m) if p.ngens() == m.size() * m.size() => Ok(m),
        _ => Err(Error::Precondition("expected square quantum matrices, e.g. `use quantum_matrices(n=2)`".into())),
    }
}

fn execute(
    command: &Command,
    algebra: &Algebra,
    spec: Option<&Assignment>,
    report: &mut Report,
) -> Result<Option<String>, Error> {
    let p = &algebra.presentation;
    let name = |g: usize| p.generators()[g].clone();
    report.set_algebra(p);
    match command {
        Command::Verify(_) => {
            report.cite("overlap resolution of the defining relations (PBW basis)");
            let reports = diamond_check(p);
            let failures: Vec<Value> = reports
                .iter()
                .filter(|r| !r.resolved)
                .map(|r| {
                    let (k, j, i) = r.triple;
                    json!({
                        "triple": [name(k), name(j), name(i)],
                        "discrepancy": format_element(p, &r.discrepancy),
                        "error": r.failure.as_ref().map(|e| e.to_string()),
                    })
                })
                .collect();
            let resolved = reports.len() - failures.len();
            if !failures.is_empty() {
                report.fail();
            }
            report.results(json!({ "triples": reports.len(), "resolved": resolved, "failures": failures }));
        }
        Command::Nf { expr, .. } => {
            report.cite("ordered monomials form a basis (PBW normal form)");
            let a = dsl::parse_element(p, expr)?;
            report.results(json!({ "input": expr, "normal_form": element_json(p, &a) }));
        }
        Command::Hilbert { max_degree, .. } => {
            report.cite("same Hilbert series as a commutative polynomial algebra");
            let g = p.ngens() as u64;
            let mut rows = Vec::new();
            for d in 0..=*max_degree {
                let count = hilbert_count(p, d)?;
                let commutative = commutative_count(g, d as u64);
                if count != commutative {
                    report.fail();
                }
                rows.push(json!({ "degree": d, "count": count, "commutative": commutative }));
            }
            report.results(json!({ "degrees": rows }));
        }
        Command::Qdet(_) => {
            report.cite("quantum determinant as a signed sum over permutations");
            let params = matrix_params(algebra)?;
            let d = quantum_determinant(p, params)?;
            report.results(json!({ "n": params.size(), "determinant": element_json(p, &d) }));
        }
        Command::QdetVerify(_) => {
            report.cite("the quantum determinant is a normal element");
            let params = matrix_params(algebra)?;
            let r = verify_det_normality(p, params)?;
            let ids: Vec<Value> = r
                .identities
                .iter()
                .map(|d| {
                    json!({
                        "i": d.i + 1,
                        "j": d.j + 1,
                        "scalar": p.context().display(&d.scalar).to_string(),
                        "holds": d.holds(),
                        "discrepancy": format_element(p, &d.discrepancy),
                    })
                })
                .collect();
            if !r.passed() {
                report.fail();
            }
            report.results(json!({ "determinant": element_json(p, &r.determinant), "identities": ids }));
        }
        Command::SlCheck(_) => {
            report.cite("centrality criterion for the quantum determinant");
            let params = matrix_params(algebra)?;
            let common = sl_common_value(params)?;
            report.results(json!({
                "central": common.is_some(),
                "common_value": common.map(|c| p.context().display(&c).to_string()),
            }));
        }
        Command::Weights(_) => {
            report.cite("rational torus actions correspond to gradings by the character lattice");
            let weights: serde_json::Map<String, Value> =
                (0..p.ngens()).map(|g| (name(g), json!(p.weights()[g]))).collect();
            let bad: Vec<Value> = inhomogeneous_rules(p)
                .into_iter()
                .map(|(j, i, m)| json!({ "rule": [name(j), name(i)], "monomial": format_monomial(p, &m) }))
                .collect();
            if !bad.is_empty() {
                report.fail();
            }
            report.results(json!({ "rank": p.rank(), "weights": weights, "inhomogeneous_rules": bad }));
        }
        Command::Eigencheck { expr, .. } => {
            report.cite("homogeneous elements are the torus eigenvectors");
            let a = dsl::parse_element(p, expr)?;
            let comps: Vec<Value> = homogeneous_components(p, &a)
                .into_iter()
                .map(|(w, c)| json!({ "weight": w.0, "eigenvalue": w.character(), "component": format_element(p, &c) }))
                .collect();
            let w = is_homogeneous(p, &a);
            report.results(json!({
                "element": format_element(p, &a),
                "homogeneous": w.is_some(),
                "weight": w.as_ref().map(|w| w.0.clone()),
                "eigenvalue": w.as_ref().map(|w| w.character()),
                "components": comps,
            }));
        }
        Command::Normalcheck { expr, .. } => {
            report.cite("normal element: c R = R c");
            let a = dsl::parse_element(p, expr)?;
            let cert = scalar_normality_check(p, &a)?;
            let scalars = cert.as_ref().map(|c| {
                (0..p.ngens())
                    .map(|g| (name(g), json!(p.context().display(&c.scalars[g]).to_string())))
                    .collect::<serde_json::Map<_, _>>()
            });
            report.results(json!({
                "element": format_element(p, &a),
                "normal": cert.is_some(),
                "central": cert.as_ref().map(|c| c.is_central()),
                "scalars": scalars,
            }));
        }
        Command::Hspec(_) => {
            report.cite(report::HSPEC_CITATION);
            let s = stratifier(algebra, spec)?;
            let primes = s.hspec()?;
            let ones: Vec<Vec<usize>> = primes.iter().map(HPrime::one_based).collect();
            report.results(json!({ "count": primes.len(), "hprimes": ones, "order": "inclusion" }));
        }
        Command::Strata(_) => {
            report.cite(report::HSPEC_CITATION);
            for c in report::STRATUM_CITATIONS {
                report.cite(c);
            }
            let s = stratifier(algebra, spec)?;
            let strata: Vec<Value> = s.strata()?.iter().map(stratum_json).collect();
            report.results(json!({ "strata": strata }));
        }
        Command::Center { w, bound, .. } => {
            for c in report::STRATUM_CITATIONS {
                report.cite(c);
            }
            let s = stratifier(algebra, spec)?;
            let h = parse_indices(s.n(), w)?;
            let st = s.stratum(&h)?;
            let mut results = json!({ "stratum": stratum_json(&st), "torus": st.torus.generators() });
            if let Some(b) = bound {
                if spec.is_some() {
                    return Err(Error::Precondition("--box compares symbolic centers; drop --specialize".into()));
                }
                let found = brute_force_central_monomials(&st.torus, *b)?;
                let expected: Vec<Vec<i32>> = box_points(st.torus_size(), *b)
                    .into_iter()
                    .filter(|a| {
                        let big: Vec<_> = a.iter().map(|&x| num_bigint::BigInt::from(x)).collect();
                        lattice_contains(&st.center_basis, &big)
                    })
                    .collect();
                let agrees = found == expected;
                if !agrees {
                    report.fail();
                }
                results["brute_force"] = json!({ "box": b, "points": found, "agrees": agrees });
            }
            report.results(results);
        }
        Command::Witness { from, to, .. } => {
            report.cite("normal separation of nested torus-invariant primes");
            let s = stratifier(algebra, spec)?;
            let w = parse_indices(s.n(), from)?;
            let w2 = parse_indices(s.n(), to)?;
            let wit = s.witness(&w, &w2)?;
            let q = &wit.quotient;
            let scalars: serde_json::Map<String, Value> = (0..q.ngens())
                .map(|g| (q.generators()[g].clone(), json!(q.context().display(&wit.certificate.scalars[g]).to_string())))
                .collect();
            let verified = wit.certificate.verify(q)?;
            if !verified {
                report.fail();
            }
            report.results(json!({
                "from": w.one_based(),
                "to": w2.one_based(),
                "generator": name(wit.generator),
                "scalars": scalars,
                "verified": verified,
            }));
        }
        Command::Poset { dot, .. } => {
            report.cite(report::HSPEC_CITATION);
            report.cite("each stratum is locally closed and closures are unions of strata");
            let s = stratifier(algebra, spec)?;
            let primes = s.hspec()?;
            let ranks: Vec<usize> = primes.iter().map(|h| s.stratum(h).map(|r| r.center_rank)).collect::<Result<_, _>>()?;
            let axioms = stratification_axioms_check(&primes);
            if !axioms.passed() {
                report.fail();
            }
            let edges: Vec<(usize, usize)> = (0..primes.len())
                .flat_map(|a| (0..primes.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| primes[a].is_subset(&primes[b]) && primes[b].height() == primes[a].height() + 1)
                .collect();
            if *dot {
                return Ok(Some(report::emit_dot(&primes, &ranks, &edges)));
            }
            let nodes: Vec<Value> = primes
                .iter()
                .zip(&ranks)
                .map(|(h, r)| json!({ "hprime": h.one_based(), "center_rank": r }))
                .collect();
            let closures: Vec<Value> = axioms
                .local_closure
                .iter()
                .map(|l| json!({ "hprime": l.hprime.one_based(), "j_prime": l.j_prime.to_string(), "strict": l.strict }))
                .collect();
            let edge_list: Vec<Value> = edges
                .iter()
                .map(|&(a, b)| json!([primes[a].one_based(), primes[b].one_based()]))
                .collect();
            report.results(json!({
                "nodes": nodes,
                "edges": edge_list,
                "axioms": {
                    "passed": axioms.passed(),
                    "local_closure": closures,
                    "closure_is_union": axioms.closure_is_union,
                    "open_by_height": axioms.open_by_height,
                },
            }));
        }
    }
    Ok(None)
}

/// `C(g + d - 1, d)`, the number of commutative monomials of degree `d` in `g` variables.
fn commutative_count(g: u64, d: u64) -> u64 {
    if g == 0 {
        return (d == 0) as u64;
    }
    (0..d).fold(1u64, |acc, i| acc * (g + d - 1 - i) / (i + 1))
}
