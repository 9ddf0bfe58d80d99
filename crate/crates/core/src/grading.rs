//! `Z^r`-gradings, read as rational torus actions: a homogeneous element of
//! weight `w` is an eigenvector on which `(a_1..a_r)` acts by `prod a_t^{w_t}`.

use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::pbw::{multiply, Element, Monomial, Presentation};

/// A character of the torus, i.e. an element of `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The eigenvalue as a formal product, e.g. `a1*a3^-1`.
    pub fn character(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .map(|(t, &w)| if w == 1 { format!("a{}", t + 1) } else { format!("a{}^{}", t + 1, w) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

pub fn weight_of(p: &Presentation, m: &[i32]) -> Weight {
    let mut w = vec![0i64; p.rank()];
    for (g, &e) in m.iter().enumerate() {
        for (acc, gw) in w.iter_mut().zip(&p.weights()[g]) {
            *acc += e as i64 * gw;
        }
    }
    Weight(w)
}

/// The common weight of all terms, or `None` if they differ or `a` is zero.
pub fn is_homogeneous(p: &Presentation, a: &Element) -> Option<Weight> {
    let mut weights = a.terms().map(|(m, _)| weight_of(p, m));
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}

pub fn homogeneous_components(p: &Presentation, a: &Element) -> BTreeMap<Weight, Element> {
    let mut out: BTreeMap<Weight, Element> = BTreeMap::new();
    for (m, c) in a.terms() {
        out.entry(weight_of(p, m)).or_default().add_term(m.clone(), c.clone());
    }
    out
}

/// Rules whose two sides carry different weights, as `(j, i, offending tail monomial)`.
pub fn inhomogeneous_rules(p: &Presentation) -> Vec<(usize, usize, Monomial)> {
    let mut bad = Vec::new();
    for (j, i, rule) in p.rules() {
        let mut lhs = vec![0; p.ngens()];
        lhs[j] += 1;
        lhs[i] += 1;
        let w = weight_of(p, &lhs);
        for (m, _) in rule.tail.terms() {
            if weight_of(p, m) != w {
                bad.push((j, i, m.clone()));
            }
        }
    }
    bad
}

/// `c * g = mu_g * g * c` for every generator `g`, each `mu_g` a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityCertificate {
    pub element: Element,
    pub scalars: Vec<Coefficient>,
}

impl NormalityCertificate {
    /// Recomputes every identity from scratch.
    pub fn verify(&self, p: &Presentation) -> Result<bool> {
        if self.scalars.len() != p.ngens() {
            return Ok(false);
        }
        for (g, mu) in self.scalars.iter().enumerate() {
            let gen = p.generator(g);
            let lhs = multiply(p, &self.element, &gen)?;
            let rhs = multiply(p, &gen, &self.element)?.scale(mu);
            if !lhs.sub(&rhs).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_central(&self) -> bool {
        self.scalars.iter().all(Coefficient::is_one)
    }
}

/// Finds the unit `mu` with `lhs = mu * rhs`, if there is one.
///
/// `Ok(None)` means the two sides are not proportional; `NonUnitDivision`
/// means they might be, but only through a non-unit ratio.
pub fn proportionality(lhs: &Element, rhs: &Element) -> Result<Option<Coefficient>> {
    if rhs.is_zero() {
        return Ok(None);
    }
    if lhs.len() != rhs.len() || lhs.terms().zip(rhs.terms()).any(|((a, _), (b, _))| a != b) {
        return Ok(None);
    }
    // Divide on a term whose right-hand coefficient is a unit.
    let pivot = rhs.terms().find_map(|(m, c)| c.invert_unit().ok().map(|inv| (m, inv)));
    let Some((m, inv)) = pivot else {
        return Err(Error::NonUnitDivision);
    };
    let mu = lhs.coefficient(m).expect("supports match") * &inv;
    if lhs != &rhs.scale(&mu) {
        return Ok(None);
    }
    if !mu.is_unit() {
        return Err(Error::NonUnitDivision);
    }
    Ok(Some(mu))
}

/// Detects scalar normality of `c`; the certificate is re-verified before return.
/// A proportionality ratio that exists but is not a unit is logged and
/// treated as no certificate.
pub fn scalar_normality_check(p: &Presentation, c: &Element) -> Result<Option<NormalityCertificate>> {
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut scalars = Vec::with_capacity(p.ngens());
    for g in 0..p.ngens() {
        let gen = p.generator(g);
        let lhs = multiply(p, c, &gen)?;
        let rhs = multiply(p, &gen, c)?;
        match proportionality(&lhs, &rhs) {
            Ok(Some(mu)) => scalars.push(mu),
            Ok(None) => return Ok(None),
            Err(Error::NonUnitDivision) => {
                log::warn!("non-unit normality ratio against {}", p.generators()[g]);
                return Ok(None);
            }
            Err(e) => return Err(e),
        }
    }
    let cert = NormalityCertificate { element: c.clone(), scalars };
    debug_assert!(cert.verify(p).unwrap_or(false));
    Ok(Some(cert))
}

/// Whether `a` commutes with every generator (and so, for tori, with their inverses).
pub fn is_central(p: &Presentation, a: &Element) -> Result<bool> {
    for g in 0..p.ngens() {
        let gen = p.generator(g);
        if multiply(p, a, &gen)? != multiply(p, &gen, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}
