//! The multiparameter quantum determinant and its normality scalars.

use itertools::Itertools;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::pbw::{multiply, multiply_all, Element, Presentation};
use crate::zoo::MatrixParams;

/// Number of pairs `i < j` with `perm[i] > perm[j]`.
pub fn inversions(perm: &[usize]) -> usize {
    perm.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

/// One summand of the determinant: `coefficient * X_{1,perm(1)} ... X_{n,perm(n)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTerm {
    pub perm: Vec<usize>,
    pub coefficient: Coefficient,
}

/// The `n!` summands, permutations in lexicographic order (0-based).
pub fn perm_terms(params: &MatrixParams) -> Vec<PermTerm> {
    let n = params.size();
    let one = params.context.one();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut c = one.clone();
            for (i, j) in (0..n).tuple_combinations() {
                if perm[i] > perm[j] {
                    c = &c * &-params.p(perm[i], perm[j]);
                }
            }
            PermTerm { perm, coefficient: c }
        })
        .collect()
}

fn check_square(p: &Presentation, params: &MatrixParams) -> Result<usize> {
    let n = params.size();
    if p.ngens() != n * n || p.context().as_ref() != params.context.as_ref() {
        return Err(Error::Precondition(format!(
            "{} is not the {n}x{n} quantum matrix algebra of these parameters",
            p.name()
        )));
    }
    Ok(n)
}

/// `D = sum_pi prod_{i<j, pi(i)>pi(j)} (-p_{pi(i) pi(j)}) X_{1 pi(1)} ... X_{n pi(n)}`,
/// each word normalized by the engine.
pub fn quantum_determinant(p: &Presentation, params: &MatrixParams) -> Result<Element> {
    let n = check_square(p, params)?;
    let gens: Vec<Element> = (0..n * n).map(|g| p.generator(g)).collect();
    let mut d = Element::zero();
    for term in perm_terms(params) {
        let word = multiply_all(p, term.perm.iter().enumerate().map(|(i, &j)| &gens[i * n + j]))?;
        d = d.add(&word.scale(&term.coefficient));
    }
    Ok(d)
}

/// `lambda^{j-i} prod_l p_jl p_li` (0-based `i`, `j`).
pub fn det_commutation_scalar(params: &MatrixParams, i: usize, j: usize) -> Result<Coefficient> {
    let mut c = params.lambda.pow(j as i64 - i as i64)?;
    for l in 0..params.size() {
        c = &c * &(&params.p(j, l) * &params.p(l, i));
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentity {
    pub i: usize,
    pub j: usize,
    pub scalar: Coefficient,
    /// `D X_ij - scalar X_ij D`, zero when the identity holds.
    pub discrepancy: Element,
}

impl DetIdentity {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetNormalityReport {
    pub determinant: Element,
    pub identities: Vec<DetIdentity>,
}

impl DetNormalityReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(DetIdentity::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DetIdentity> {
        self.identities.iter().filter(|d| !d.holds())
    }
}

/// Checks `D X_ij = scalar(i, j) X_ij D` for all `i, j` against any scalar table.
pub fn check_det_identities<F>(p: &Presentation, params: &MatrixParams, scalar: F) -> Result<DetNormalityReport>
where
    F: Fn(usize, usize) -> Result<Coefficient>,
{
    let n = check_square(p, params)?;
    let d = quantum_determinant(p, params)?;
    let mut identities = Vec::with_capacity(n * n);
    for (i, j) in (0..n).cartesian_product(0..n) {
        let x = p.generator(i * n + j);
        let s = scalar(i, j)?;
        let discrepancy = multiply(p, &d, &x)?.sub(&multiply(p, &x, &d)?.scale(&s));
        identities.push(DetIdentity { i, j, scalar: s, discrepancy });
    }
    Ok(DetNormalityReport { determinant: d, identities })
}

pub fn verify_det_normality(p: &Presentation, params: &MatrixParams) -> Result<DetNormalityReport> {
    check_det_identities(p, params, |i, j| det_commutation_scalar(params, i, j))
}

/// The common value of `lambda^i prod_l p_il` over all rows, if there is one.
pub fn sl_common_value(params: &MatrixParams) -> Result<Option<Coefficient>> {
    let mut values = (0..params.size()).map(|i| {
        let mut c = params.lambda.pow(i as i64 + 1)?;
        for l in 0..params.size() {
            c = &c * &params.p(i, l);
        }
        Ok::<_, Error>(c)
    });
    let Some(first) = values.next().transpose()? else {
        return Ok(Some(params.context.one()));
    };
    for v in values {
        if v? != first {
            return Ok(None);
        }
    }
    Ok(Some(first))
}

/// Whether `D` is central, by the row-product criterion.
pub fn sl_condition(params: &MatrixParams) -> Result<bool> {
    Ok(sl_common_value(params)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{is_central, is_homogeneous};
    use crate::zoo::{quantum_matrices, AntisymmetricMatrix};
    use crate::ParamContext;
    use std::sync::Arc;

    fn setup(params: &MatrixParams) -> Presentation {
        let n = params.size();
        quantum_matrices(n, n, params).unwrap()
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[0, 1, 2]), 0);
        assert_eq!(inversions(&[1, 0]), 1);
        assert_eq!(inversions(&[3, 2, 1, 0]), 6);
    }

    #[test]
    fn small_determinants() {
        let params = MatrixParams::generic(1);
        let p = setup(&params);
        assert_eq!(quantum_determinant(&p, &params).unwrap(), p.generator(0));

        let params = MatrixParams::generic(2);
        let p = setup(&params);
        let d = quantum_determinant(&p, &params).unwrap();
        let p21 = p.context().symbol("p_2_1").unwrap();
        let mut expected = p.monomial(vec![1, 0, 0, 1]);
        expected.add_term(vec![0, 1, 1, 0], -&p21);
        assert_eq!(d, expected);
        assert!(is_homogeneous(&p, &d).is_some());
        assert_eq!(crate::pbw::leading_term(&p, &d).unwrap(), (vec![1, 0, 0, 1], p.context().one()));
    }

    #[test]
    fn single_parameter_terms_are_powers_of_minus_q() {
        for n in 1..=4 {
            let params = MatrixParams::single(n, "q").unwrap();
            let minus_q = -&params.context.symbol("q").unwrap();
            for t in perm_terms(&params) {
                assert_eq!(t.coefficient, minus_q.pow(inversions(&t.perm) as i64).unwrap());
            }
        }
    }

    #[test]
    fn commutation_scalars() {
        let params = MatrixParams::generic(2);
        let ctx = &params.context;
        assert!(det_commutation_scalar(&params, 0, 0).unwrap().is_one());
        let p21 = ctx.symbol("p_2_1").unwrap();
        let lam = ctx.symbol("lambda").unwrap();
        assert_eq!(det_commutation_scalar(&params, 0, 1).unwrap(), &lam * &(&p21 * &p21));
        let single = MatrixParams::single(3, "q").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(det_commutation_scalar(&single, i, j).unwrap().is_one());
            }
        }
    }

    #[test]
    fn normality_holds_and_corruption_is_caught() {
        let params = MatrixParams::generic(2);
        let p = setup(&params);
        let report = verify_det_normality(&p, &params).unwrap();
        assert_eq!(report.identities.len(), 4);
        assert!(report.passed());
        // Drop the lambda^{j-i} factor.
        let corrupted = check_det_identities(&p, &params, |i, j| {
            let full = det_commutation_scalar(&params, i, j)?;
            Ok(&full * &params.lambda.pow(i as i64 - j as i64)?)
        })
        .unwrap();
        let failed: Vec<_> = corrupted.failures().map(|d| (d.i, d.j)).collect();
        assert!(failed.contains(&(0, 1)));
    }

    #[test]
    fn single_parameter_determinant_is_central() {
        let params = MatrixParams::single(2, "q").unwrap();
        let p = setup(&params);
        let d = quantum_determinant(&p, &params).unwrap();
        assert!(is_central(&p, &d).unwrap());
    }

    #[test]
    fn sl_examples() {
        let single = MatrixParams::single(3, "q").unwrap();
        let q = single.context.symbol("q").unwrap();
        assert_eq!(sl_common_value(&single).unwrap(), Some(q.pow(-4).unwrap()));
        let ctx = Arc::new(ParamContext::new(["t"]).unwrap());
        let trivial = MatrixParams::custom(ctx.clone(), ctx.one(), AntisymmetricMatrix::trivial(1, 2)).unwrap();
        assert!(sl_condition(&trivial).unwrap());
        let t = ctx.symbol("t").unwrap();
        let p = AntisymmetricMatrix::from_lower(1, 2, |_, _| t.clone()).unwrap();
        let generic = MatrixParams::custom(ctx.clone(), ctx.one(), p).unwrap();
        assert!(!sl_condition(&generic).unwrap());
        assert!(!sl_condition(&MatrixParams::generic(2)).unwrap());
    }

    #[test]
    fn wrong_presentation_is_rejected() {
        let params = MatrixParams::generic(2);
        let p = quantum_matrices(3, 3, &MatrixParams::generic(3)).unwrap();
        assert!(matches!(quantum_determinant(&p, &params), Err(Error::Precondition(_))));
    }
}
