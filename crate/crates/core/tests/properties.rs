use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strata_lab::grading::{homogeneous_components, inhomogeneous_rules, is_central, is_homogeneous, scalar_normality_check, weight_of, Weight};
use strata_lab::pbw::{leading_term, multiply, normal_form, Element, Letter, Presentation, Word};
use strata_lab::qdet::{det_commutation_scalar, quantum_determinant, sl_condition};
use strata_lab::zoo::*;
use strata_lab::{Coefficient, ParamContext};

fn small_zoo() -> Vec<Presentation> {
    vec![
        quantum_affine(&AffineParams::generic(3)).unwrap(),
        quantum_torus(&AffineParams::single(3, "q").unwrap()).unwrap(),
        quantum_matrices(2, 2, &MatrixParams::generic(2)).unwrap(),
        quantized_weyl(&WeylParams::generic(2)).unwrap(),
        quantum_symplectic(2).unwrap(),
        quantum_euclidean(3).unwrap(),
    ]
}

fn random_word(p: &Presentation, rng: &mut ChaCha8Rng, len: usize) -> Word {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(0..p.ngens());
            if p.kind(g) == strata_lab::GeneratorKind::Invertible && rng.gen() {
                Letter::inverse(g)
            } else {
                Letter::new(g)
            }
        })
        .collect();
    Word { scalar: p.context().constant(rng.gen_range(1..=4)), letters }
}

fn random_element(p: &Presentation, rng: &mut ChaCha8Rng, terms: usize) -> Element {
    let mut a = Element::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=3);
        a = a.add(&normal_form(p, &random_word(p, rng, len)).unwrap());
    }
    if a.is_zero() {
        p.one()
    } else {
        a
    }
}

fn word_of(m: &[i32]) -> Vec<Letter> {
    m.iter()
        .enumerate()
        .flat_map(|(g, &e)| {
            let l = if e < 0 { Letter::inverse(g) } else { Letter::new(g) };
            std::iter::repeat_n(l, e.unsigned_abs() as usize)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(k in 0..6usize, seed in any::<u64>()) {
        let p = &small_zoo()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = normal_form(p, &random_word(p, &mut rng, 5)).unwrap();
        let mut again = Element::zero();
        for (m, c) in e.terms() {
            again = again.add(&normal_form(p, &Word { scalar: c.clone(), letters: word_of(m) }).unwrap());
        }
        prop_assert_eq!(again, e);
    }

    #[test]
    fn multiplication_is_associative(k in 0..6usize, seed in any::<u64>()) {
        let p = &small_zoo()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(p, &mut rng, 5);
        let b = random_element(p, &mut rng, 5);
        let c = random_element(p, &mut rng, 5);
        let left = multiply(p, &multiply(p, &a, &b).unwrap(), &c).unwrap();
        let right = multiply(p, &a, &multiply(p, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn leading_terms_multiply(k in 0..6usize, seed in any::<u64>()) {
        let p = &small_zoo()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(p, &mut rng, 4);
        let b = random_element(p, &mut rng, 4);
        let (ma, ca) = leading_term(p, &a).unwrap();
        let (mb, cb) = leading_term(p, &b).unwrap();
        let (mab, cab) = leading_term(p, &multiply(p, &a, &b).unwrap()).unwrap();
        let sum: Vec<i32> = ma.iter().zip(&mb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(mab, sum);
        // Multiplying by a signed monomial shifts every exponent equally, so
        // the first terms determine the only candidate unit.
        let prod = &ca * &cb;
        let ((e1, k1), (e2, k2)) = (cab.terms().next().unwrap(), prod.terms().next().unwrap());
        prop_assert!(k1 == k2 || *k1 == -k2);
        let shift: Vec<i32> = e1.iter().zip(e2).map(|(x, y)| x - y).collect();
        let unit = Coefficient::monomial(if k1 == k2 { 1.into() } else { (-1).into() }, shift);
        prop_assert_eq!(cab, &prod * &unit);
    }

    #[test]
    fn products_of_homogeneous_elements_are_homogeneous(k in 0..6usize, seed in any::<u64>()) {
        let p = &small_zoo()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick = |a: Element, rng: &mut ChaCha8Rng| {
            let comps: Vec<(Weight, Element)> = homogeneous_components(p, &a).into_iter().collect();
            comps[rng.gen_range(0..comps.len())].clone()
        };
        let (u, a) = pick(random_element(p, &mut rng, 4), &mut rng);
        let (v, b) = pick(random_element(p, &mut rng, 4), &mut rng);
        prop_assert_eq!(is_homogeneous(p, &multiply(p, &a, &b).unwrap()), Some(u.add(&v)));
    }

    #[test]
    fn monomial_weights_add(k in 0..6usize, seed in any::<u64>()) {
        let p = &small_zoo()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m1: Vec<i32> = (0..p.ngens()).map(|_| rng.gen_range(0..=2)).collect();
        let m2: Vec<i32> = (0..p.ngens()).map(|_| rng.gen_range(0..=2)).collect();
        let prod = multiply(p, &p.monomial(m1.clone()), &p.monomial(m2.clone())).unwrap();
        let (lead, _) = leading_term(p, &prod).unwrap();
        prop_assert_eq!(weight_of(p, &lead), weight_of(p, &m1).add(&weight_of(p, &m2)));
    }

    #[test]
    fn normality_is_multiplicative(k in 0..2usize, seed in any::<u64>()) {
        let p = [quantum_affine(&AffineParams::generic(3)).unwrap(), quantum_matrices(2, 2, &MatrixParams::generic(2)).unwrap()][k].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m1: Vec<i32> = (0..p.ngens()).map(|_| rng.gen_range(0..=2)).collect();
        let m2: Vec<i32> = (0..p.ngens()).map(|_| rng.gen_range(0..=2)).collect();
        let (c1, c2) = (p.monomial(m1), p.monomial(m2));
        if let (Some(a), Some(b)) = (scalar_normality_check(&p, &c1).unwrap(), scalar_normality_check(&p, &c2).unwrap()) {
            prop_assert!(a.verify(&p).unwrap() && b.verify(&p).unwrap());
            let ab = scalar_normality_check(&p, &multiply(&p, &c1, &c2).unwrap()).unwrap();
            prop_assert!(ab.is_some());
            let ab = ab.unwrap();
            prop_assert!(ab.verify(&p).unwrap());
            for g in 0..p.ngens() {
                prop_assert_eq!(&ab.scalars[g], &(&a.scalars[g] * &b.scalars[g]));
            }
        }
    }

    #[test]
    fn rectangular_matrices_embed(shape in 0..4usize, seed in any::<u64>()) {
        let (m, n) = [(1, 2), (2, 1), (2, 3), (3, 2)][shape];
        let params = MatrixParams::generic(m.max(n));
        let small = quantum_matrices(m, n, &params).unwrap();
        let big = quantum_matrices(m.max(n), m.max(n), &params).unwrap();
        let to_big: Vec<usize> = small.generators().iter().map(|g| big.generator_index(g).unwrap()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&small, &mut rng, 6);
        let lifted = Word { scalar: w.scalar.clone(), letters: w.letters.iter().map(|l| Letter::new(to_big[l.generator])).collect() };
        let mut expected = Element::zero();
        for (mono, c) in normal_form(&small, &w).unwrap().terms() {
            let mut wide = vec![0; big.ngens()];
            for (g, &e) in mono.iter().enumerate() {
                wide[to_big[g]] = e;
            }
            expected.add_term(wide, c.clone());
        }
        prop_assert_eq!(normal_form(&big, &lifted).unwrap(), expected);
    }
}

#[test]
fn zoo_rules_are_homogeneous() {
    let mut all = small_zoo();
    for n in 1..=4 {
        all.push(quantum_affine(&AffineParams::single(n, "q").unwrap()).unwrap());
        all.push(quantum_matrices(n, n, &MatrixParams::generic(n)).unwrap());
    }
    all.push(quantum_matrices(2, 3, &MatrixParams::generic(3)).unwrap());
    all.push(quantized_weyl(&WeylParams::generic(3)).unwrap());
    all.push(quantum_symplectic(3).unwrap());
    all.extend((2..=5).map(|n| quantum_euclidean(n).unwrap()));
    for p in all {
        assert!(inhomogeneous_rules(&p).is_empty(), "{}", p.name());
        assert!(p.weights().iter().all(|w| w.len() == p.rank()), "{}", p.name());
    }
}

#[test]
fn determinant_has_unit_weight() {
    for n in 1..=3 {
        let params = MatrixParams::generic(n);
        let p = quantum_matrices(n, n, &params).unwrap();
        let d = quantum_determinant(&p, &params).unwrap();
        assert_eq!(is_homogeneous(&p, &d), Some(Weight(vec![1; 2 * n])));
    }
}

/// All-integer exponent choices `p_ij = q^e`, `lambda = q^d`: the row-product
/// criterion, the commutation scalars and actual centrality must agree.
#[test]
fn centrality_criterion_both_ways() {
    let ctx = Arc::new(ParamContext::new(["q"]).unwrap());
    let q = ctx.symbol("q").unwrap();
    let mut seen = [0usize; 2];
    let mut check = |lambda: i64, lower: &[i64], n: usize| {
        let mut k = 0;
        let p = AntisymmetricMatrix::from_lower(1, n, |_, _| {
            k += 1;
            q.pow(lower[k - 1]).unwrap()
        })
        .unwrap();
        let params = MatrixParams::custom(ctx.clone(), q.pow(lambda).unwrap(), p).unwrap();
        let alg = quantum_matrices(n, n, &params).unwrap();
        let criterion = sl_condition(&params).unwrap();
        let scalars_one = (0..n).all(|i| (0..n).all(|j| det_commutation_scalar(&params, i, j).unwrap().is_one()));
        let central = is_central(&alg, &quantum_determinant(&alg, &params).unwrap()).unwrap();
        assert_eq!(criterion, scalars_one, "lambda=q^{lambda} p={lower:?}");
        assert_eq!(criterion, central, "lambda=q^{lambda} p={lower:?}");
        seen[criterion as usize] += 1;
    };
    for d in -3..=3 {
        for a in -3..=3 {
            check(d, &[a], 2);
        }
    }
    for d in -1..=1 {
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    check(d, &[a, b, c], 3);
                }
            }
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
