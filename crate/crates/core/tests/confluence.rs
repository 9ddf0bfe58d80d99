use strata_lab::pbw::{diamond_check, hilbert_count, Presentation};
use strata_lab::zoo::*;

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

#[test]
fn every_suite_algebra_is_confluent() {
    for p in suite() {
        let bad: Vec<_> = diamond_check(&p).into_iter().filter(|r| !r.resolved).collect();
        assert!(bad.is_empty(), "{} ({} gens): {:?}", p.name(), p.ngens(), bad.first());
    }
}

#[test]
fn hilbert_series_is_commutative() {
    for p in suite() {
        let g = p.ngens() as u64;
        for d in 0..=4u32 {
            assert_eq!(hilbert_count(&p, d).unwrap(), binom(g + d as u64 - 1 + (g == 0) as u64, d as u64), "{} d={d}", p.name());
        }
    }
}

#[test]
fn overlap_counts() {
    let m2 = quantum_matrices(2, 2, &MatrixParams::generic(2)).unwrap();
    assert_eq!(diamond_check(&m2).len(), 4);
    let m3 = quantum_matrices(3, 3, &MatrixParams::generic(3)).unwrap();
    assert_eq!(diamond_check(&m3).len(), 84);
}

#[test]
fn corrupted_swap_is_caught() {
    use strata_lab::pbw::Rule;
    let m2 = quantum_matrices(2, 2, &MatrixParams::generic(2)).unwrap();
    // The X22 X11 tail is only consistent with the X22 X12 swap scalar it
    // was built with; squaring that scalar must break the X22 X12 X11 overlap.
    let rule = m2.rule(3, 1).clone();
    let bad = m2.with_rule(3, 1, Rule { swap: rule.swap.mul(&rule.swap), tail: rule.tail }).unwrap();
    let failed: Vec<_> = diamond_check(&bad).into_iter().filter(|r| !r.resolved).map(|r| r.triple).collect();
    assert!(failed.contains(&(3, 1, 0)), "{failed:?}");
    assert!(diamond_check(&m2).iter().all(|r| r.resolved));
}
