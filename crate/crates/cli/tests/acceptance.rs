mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strata_lab::grading::{is_central, is_homogeneous, weight_of};
use strata_lab::lattice::lattice_contains;
use strata_lab::pbw::{diamond_check, hilbert_count, leading_term, multiply, Element, Presentation};
use strata_lab::qdet::{quantum_determinant, sl_condition, verify_det_normality};
use strata_lab::strat::{
    brute_force_central_monomials, hspec_quantum_affine, monomial_prime_oracle, normal_separation_witness,
    stratification_axioms_check, subsets, Stratification,
};
use strata_lab::zoo::*;
use strata_lab_cli::box_points;

use common::*;

const CONFLUENCE_BUDGET: Duration = Duration::from_secs(60);
const DET_BUDGET: Duration = Duration::from_secs(30);
const CENTER_BUDGET: Duration = Duration::from_secs(60);
const HILBERT_MAX_DEGREE: u32 = 4;
const CENTER_BOX: i32 = 3;
const TRIALS: usize = 1000;
const SEED: u64 = 0x5eed_2024;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn suite() -> Vec<Presentation> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(quantum_affine(&AffineParams::generic(n)).unwrap());
    }
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        out.push(quantum_matrices(m, n, &MatrixParams::generic(m.max(n))).unwrap());
    }
    for n in 1..=3 {
        out.push(quantized_weyl(&WeylParams::generic(n)).unwrap());
        out.push(quantum_symplectic(n).unwrap());
    }
    for n in 2..=5 {
        out.push(quantum_euclidean(n).unwrap());
    }
    out
}

fn confluence() -> Result<String, String> {
    let mut triples = 0;
    let algebras = suite();
    for p in &algebras {
        let reports = diamond_check(p);
        triples += reports.len();
        if let Some(bad) = reports.iter().find(|r| !r.resolved) {
            return Err(format!("{}: triple {:?} unresolved", p.name(), bad.triple));
        }
    }
    Ok(format!("{} algebras, {triples} overlaps resolved", algebras.len()))
}

fn hilbert() -> Result<String, String> {
    for p in suite() {
        let g = p.ngens() as u64;
        for d in 0..=HILBERT_MAX_DEGREE {
            let got = hilbert_count(&p, d).map_err(|e| e.to_string())?;
            let want = binom(g + d as u64 - 1, d as u64);
            ensure(got == want, || format!("{} d={d}: {got} != {want}", p.name()))?;
        }
    }
    let m3 = quantum_matrices(3, 3, &MatrixParams::generic(3)).unwrap();
    let d4 = hilbert_count(&m3, 4).map_err(|e| e.to_string())?;
    ensure(d4 == 495, || format!("O(M_3) d=4 gave {d4}"))?;
    Ok("commutative counts for d <= 4; O(M_3) d=4 -> 495".into())
}

fn det_normality() -> Result<String, String> {
    for n in 2..=3 {
        let params = MatrixParams::generic(n);
        let p = quantum_matrices(n, n, &params).unwrap();
        let report = verify_det_normality(&p, &params).map_err(|e| e.to_string())?;
        ensure(report.identities.len() == n * n, || format!("n={n}: {} identities", report.identities.len()))?;
        if let Some(f) = report.failures().next() {
            return Err(format!("n={n}: identity ({}, {}) fails", f.i + 1, f.j + 1));
        };
    }
    Ok("all D X_ij identities exact for n = 2, 3".into())
}

fn centrality() -> Result<String, String> {
    for n in 2..=3 {
        let params = MatrixParams::single(n, "q").unwrap();
        let p = quantum_matrices(n, n, &params).unwrap();
        let d = quantum_determinant(&p, &params).map_err(|e| e.to_string())?;
        ensure(is_central(&p, &d).map_err(|e| e.to_string())?, || format!("D_q not central for n={n}"))?;
        ensure(sl_condition(&params).map_err(|e| e.to_string())?, || format!("sl_condition false for single n={n}"))?;
    }
    ensure(!sl_condition(&MatrixParams::generic(2)).unwrap(), || "sl_condition true for generic 2x2".into())?;
    Ok("D_q central for n = 2, 3; criterion true/false as expected".into())
}

fn hspec() -> Result<String, String> {
    for n in 0..=5 {
        let p = quantum_affine(&AffineParams::generic(n)).unwrap();
        let primes = hspec_quantum_affine(&p).map_err(|e| e.to_string())?;
        ensure(primes.len() == 1 << n, || format!("n={n}: {} H-primes", primes.len()))?;
        let got: BTreeSet<Vec<usize>> = primes.iter().map(|h| h.one_based()).collect();
        let want: BTreeSet<Vec<usize>> = subsets(n).iter().map(|h| h.one_based()).collect();
        ensure(got == want, || format!("n={n}: H-primes are not the variable subsets"))?;
        for a in &primes {
            for b in &primes {
                ensure(a.ideal().is_subset(&b.ideal()) == a.is_subset(b), || format!("n={n}: {a} vs {b} order mismatch"))?;
            }
        }
        if n <= 3 {
            let (candidates, oracle) = monomial_prime_oracle(n, 2);
            let from_oracle: BTreeSet<String> = oracle.iter().map(|i| i.to_string()).collect();
            let from_hspec: BTreeSet<String> = primes.iter().map(|h| h.ideal().to_string()).collect();
            ensure(from_oracle == from_hspec, || format!("n={n}: oracle found {from_oracle:?} among {candidates} candidates"))?;
        }
    }
    Ok("2^n Boolean lattice for n <= 5; oracle agrees for n <= 3".into())
}

fn centers_for(params: &AffineParams, single: bool) -> Result<Vec<usize>, String> {
    let n = params.size();
    let p = quantum_affine(params).unwrap();
    let strat = Stratification::new(&p, None).map_err(|e| e.to_string())?;
    let mut ranks = Vec::new();
    for s in strat.strata().map_err(|e| e.to_string())? {
        let t = s.torus_size();
        let brute = brute_force_central_monomials(&s.torus, CENTER_BOX).map_err(|e| e.to_string())?;
        let from_lattice: Vec<Vec<i32>> = box_points(t, CENTER_BOX)
            .into_iter()
            .filter(|v| lattice_contains(&s.center_basis, &v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()))
            .collect();
        ensure(brute == from_lattice, || format!("n={n} w={}: lattice and brute force disagree", s.hprime))?;
        ensure(s.center_rank <= n, || format!("n={n} w={}: rank {} exceeds {n}", s.hprime, s.center_rank))?;
        ensure(!single || s.center_rank % 2 == t % 2, || format!("n={n} w={}: parity law fails", s.hprime))?;
        ranks.push(s.center_rank);
    }
    Ok(ranks)
}

fn centers() -> Result<String, String> {
    for n in 0..=4 {
        let ranks = centers_for(&AffineParams::generic(n), false)?;
        if n == 2 {
            ensure(ranks == [0, 1, 1, 0], || format!("n=2 generic ranks {ranks:?}"))?;
        }
        centers_for(&AffineParams::single(n, "q").unwrap(), true)?;
    }
    let p = quantum_affine(&AffineParams::single(3, "q").unwrap()).unwrap();
    let s = Stratification::new(&p, None).and_then(|st| st.stratum(&subsets(3)[0])).map_err(|e| e.to_string())?;
    let basis: Vec<Vec<i64>> = s.center_basis.iter().map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    ensure(
        s.center_rank == 1 && (basis == [vec![1, -1, 1]] || basis == [vec![-1, 1, -1]]),
        || format!("n=3 single w={{}}: rank {} basis {basis:?}", s.center_rank),
    )?;
    Ok(format!("kernel = brute force in [-{CENTER_BOX},{CENTER_BOX}]^t for n <= 4; reference ranks match"))
}

fn witnesses() -> Result<String, String> {
    let mut pairs = 0;
    for n in 0..=5 {
        let p = quantum_affine(&AffineParams::generic(n)).unwrap();
        let all = subsets(n);
        for w in &all {
            for w2 in all.iter().filter(|w2| w.is_subset(w2) && w != *w2) {
                let wit = normal_separation_witness(&p, w, w2).map_err(|e| format!("{w} < {w2}: {e}"))?;
                let ok = wit.certificate.verify(&wit.quotient).map_err(|e| e.to_string())?;
                ensure(ok && w2.one_based().contains(&(wit.generator + 1)) && !w.one_based().contains(&(wit.generator + 1)), || {
                    format!("{w} < {w2}: certificate does not re-verify")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} comparable pairs certified"))
}

fn axioms() -> Result<String, String> {
    for n in 0..=5 {
        let p = quantum_affine(&AffineParams::generic(n)).unwrap();
        let poset = hspec_quantum_affine(&p).map_err(|e| e.to_string())?;
        let report = stratification_axioms_check(&poset);
        ensure(report.passed(), || format!("n={n}: {report:?}"))?;
        for lc in &report.local_closure {
            if lc.hprime.height() == n {
                ensure(lc.j_prime.is_whole(), || format!("n={n}: maximal {} has J' = {}", lc.hprime, lc.j_prime))?;
            }
        }
    }
    Ok("local closure, closures and height cuts hold for n <= 5".into())
}

fn random_element(p: &Presentation, rng: &mut ChaCha8Rng) -> Element {
    let ctx = p.context();
    let mut a = Element::zero();
    while a.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let mut m = vec![0; p.ngens()];
            for _ in 0..rng.gen_range(0..=2) {
                m[rng.gen_range(0..p.ngens())] += 1;
            }
            let mut c = ctx.constant(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
            if !ctx.is_empty() && rng.gen() {
                let s = ctx.symbol(&ctx.symbols()[rng.gen_range(0..ctx.len())]).unwrap();
                c = &c * &s.pow(if rng.gen() { 1 } else { -1 }).unwrap();
            }
            a.add_term(m, c);
        }
    }
    a
}

fn random_monomial(p: &Presentation, rng: &mut ChaCha8Rng) -> Vec<i32> {
    (0..p.ngens()).map(|_| rng.gen_range(0..=2)).collect()
}

fn engine_laws() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mul = |p: &Presentation, a: &Element, b: &Element| multiply(p, a, b).map_err(|e| format!("{}: {e}", p.name()));
    let algebras = suite();
    for p in &algebras {
        for _ in 0..TRIALS {
            let (a, b, c) = (random_element(p, &mut rng), random_element(p, &mut rng), random_element(p, &mut rng));
            let ab = mul(p, &a, &b)?;
            ensure(mul(p, &ab, &c)? == mul(p, &a, &mul(p, &b, &c)?)?, || format!("{}: associativity", p.name()))?;
            ensure(mul(p, &a, &b.add(&c))? == ab.add(&mul(p, &a, &c)?), || format!("{}: left distributivity", p.name()))?;
            ensure(mul(p, &a.add(&b), &c)? == mul(p, &a, &c)?.add(&mul(p, &b, &c)?), || format!("{}: right distributivity", p.name()))?;

            let (ma, mb) = (random_monomial(p, &mut rng), random_monomial(p, &mut rng));
            let prod = mul(p, &p.monomial(ma.clone()), &p.monomial(mb.clone()))?;
            ensure(is_homogeneous(p, &prod) == Some(weight_of(p, &ma).add(&weight_of(p, &mb))), || {
                format!("{}: grading not additive on {ma:?} {mb:?}", p.name())
            })?;

            let (la, lb) = (leading_term(p, &a).unwrap().0, leading_term(p, &b).unwrap().0);
            let lab = leading_term(p, &ab).map_err(|e| format!("{}: zero product: {e}", p.name()))?.0;
            let sum: Vec<i32> = la.iter().zip(&lb).map(|(x, y)| x + y).collect();
            ensure(lab == sum, || format!("{}: leading exponent {lab:?} != {sum:?}", p.name()))?;
        }
    }
    Ok(format!("{TRIALS} trials on each of {} algebras", algebras.len()))
}

fn cli_contract() -> Result<String, String> {
    let calls = zoo_calls();
    for call in &calls {
        round_trips(&call.build().map_err(|e| e.to_string())?.presentation)?;
    }
    for args in [
        vec!["verify", "use quantum_matrices(n=3)"],
        vec!["strata", "use quantum_affine(n=4)"],
        vec!["qdet-verify", "use quantum_matrices(n=2)"],
        vec!["poset", "--dot", "use quantum_affine(n=3)"],
    ] {
        let (a, b) = (cli(&args), cli(&args));
        ensure(a.status.success() && a.stdout == b.stdout, || format!("{args:?}: not reproducible"))?;
    }
    for (args, code) in [
        (vec!["verify", NON_CONFLUENT], 1),
        (vec!["verify", BAD_SYNTAX], 2),
        (vec!["verify", "--frobnicate", "use quantum_affine(n=2)"], 2),
    ] {
        let got = cli(&args).status.code();
        ensure(got == Some(code), || format!("{:?}: exit {got:?}, expected {code}", args[..2].to_vec()))?;
    }
    Ok(format!("{} presentations round-trip; JSON reproducible; exit codes 1, 2, 2", calls.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Option<Duration>); 10] = [
        ("confluence suite", confluence, Some(CONFLUENCE_BUDGET)),
        ("Hilbert counts", hilbert, None),
        ("determinant normality", det_normality, Some(DET_BUDGET)),
        ("determinant centrality", centrality, None),
        ("H-spectrum", hspec, None),
        ("stratum centers", centers, Some(CENTER_BUDGET)),
        ("separation witnesses", witnesses, None),
        ("stratification axioms", axioms, None),
        ("engine laws", engine_laws, None),
        ("CLI contract", cli_contract, None),
    ];
    let mut failed = 0;
    for (k, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, budget) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, budget {limit:?}"));
            }
        }
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", k + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
