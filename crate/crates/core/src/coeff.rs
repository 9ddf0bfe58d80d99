//! Exact coefficients: Laurent polynomials with big-integer coefficients in a
//! fixed, ordered list of parameter symbols.
//!
//! Every scalar appearing in the supported relation families (the `q_ij`,
//! `lambda * p`, `(lambda - 1) * p`, `(1 - q^2) * q^k`, `q_l - 1`) lives in this
//! ring, so the only division ever needed is by a unit monomial `±x^e`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ordered list of parameter symbols of a session.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamContext {
    symbols: Vec<String>,
}

impl ParamContext {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if !is_identifier(s) {
                return Err(Error::BadContext(format!("`{s}` is not a valid symbol name")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::BadContext(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(ParamContext { symbols })
    }

    pub fn empty() -> Self {
        ParamContext::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    /// The coefficient consisting of the single symbol `name`.
    pub fn symbol(&self, name: &str) -> Result<Coefficient> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Ok(Coefficient::symbol(self.len(), idx))
    }

    pub fn one(&self) -> Coefficient {
        Coefficient::one(self.len())
    }

    pub fn constant(&self, c: i64) -> Coefficient {
        Coefficient::constant(self.len(), BigInt::from(c))
    }

    /// Renders `c` in the textual coefficient syntax.
    pub fn display<'a>(&'a self, c: &'a Coefficient) -> CoefficientDisplay<'a> {
        CoefficientDisplay { ctx: self, coeff: c }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A signed monomial `±x^e`; the units of the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitMonomial {
    pub negative: bool,
    pub exponents: Vec<i32>,
}

impl UnitMonomial {
    pub fn one(nvars: usize) -> Self {
        UnitMonomial { negative: false, exponents: vec![0; nvars] }
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.exponents.iter().all(|&e| e == 0)
    }

    pub fn inverse(&self) -> Self {
        UnitMonomial {
            negative: self.negative,
            exponents: self.exponents.iter().map(|e| -e).collect(),
        }
    }

    pub fn mul(&self, other: &UnitMonomial) -> Self {
        debug_assert_eq!(self.exponents.len(), other.exponents.len());
        UnitMonomial {
            negative: self.negative ^ other.negative,
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        UnitMonomial {
            negative: self.negative && k % 2 != 0,
            exponents: self.exponents.iter().map(|&e| (e as i64 * k) as i32).collect(),
        }
    }

    pub fn to_coefficient(&self) -> Coefficient {
        let c = if self.negative { -BigInt::one() } else { BigInt::one() };
        Coefficient::monomial(c, self.exponents.clone())
    }
}

/// A Laurent polynomial with integer coefficients. The zero coefficient is the
/// empty map; no stored value is ever zero, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Coefficient {
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one(nvars: usize) -> Self {
        Coefficient::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Coefficient::monomial(c, vec![0; nvars])
    }

    pub fn symbol(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Coefficient::monomial(BigInt::one(), e)
    }

    pub fn monomial(c: BigInt, exponents: Vec<i32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Coefficient { terms }
    }

    /// Builds a canonical coefficient from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i32>, BigInt)>>(iter: I) -> Result<Self> {
        let mut out = Coefficient::zero();
        for (e, c) in iter {
            out = out.try_add(&Coefficient::monomial(c, e))?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of symbols, when it can be read off a stored term.
    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(Vec::len)
    }

    fn check_compatible(&self, other: &Coefficient) -> Result<()> {
        match (self.nvars(), other.nvars()) {
            (Some(a), Some(b)) if a != b => Err(Error::ContextMismatch(a, b)),
            _ => Ok(()),
        }
    }

    pub fn try_add(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e, c.clone());
        }
        Ok(Coefficient { terms })
    }

    pub fn try_sub(&self, other: &Coefficient) -> Result<Coefficient> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check_compatible(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                accumulate(&mut terms, &e, ca * cb);
            }
        }
        Ok(Coefficient { terms })
    }

    /// Multiplies by a unit monomial; a relabelling of terms, never a collision.
    pub fn mul_unit(&self, u: &UnitMonomial) -> Coefficient {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e: Vec<i32> = e.iter().zip(&u.exponents).map(|(a, b)| a + b).collect();
                (e, if u.negative { -c } else { c.clone() })
            })
            .collect();
        Coefficient { terms }
    }

    pub fn as_unit(&self) -> Option<UnitMonomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(UnitMonomial { negative: c.is_negative(), exponents: e.clone() })
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    pub fn invert_unit(&self) -> Result<Coefficient> {
        self.as_unit()
            .map(|u| u.inverse().to_coefficient())
            .ok_or(Error::NonUnitDivision)
    }

    /// Integer power; negative exponents are allowed for units only.
    pub fn pow(&self, k: i64) -> Result<Coefficient> {
        if k < 0 {
            return self.invert_unit()?.pow(-k);
        }
        let Some(nvars) = self.nvars() else {
            return if k == 0 { Err(Error::ZeroElement) } else { Ok(Coefficient::zero()) };
        };
        let mut acc = Coefficient::one(nvars);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluates at a rational point. Symbols with nonzero exponent must be assigned.
    pub fn specialize(&self, ctx: &ParamContext, assignment: &Assignment) -> Result<BigRational> {
        let values = assignment.resolve(ctx)?;
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (idx, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values[idx]
                    .as_ref()
                    .ok_or_else(|| Error::UnassignedSymbol(ctx.symbols[idx].clone()))?;
                term *= num_traits::pow::Pow::pow(v, k);
            }
            total += term;
        }
        Ok(total)
    }
}

fn accumulate(terms: &mut BTreeMap<Vec<i32>, BigInt>, e: &[i32], c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.to_vec(), c);
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

// Operator forms are for values already known to share a context (for example,
// everything inside one presentation); mixing contexts is a programming error.
impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.try_add(rhs).expect("coefficients from different contexts")
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.try_sub(rhs).expect("coefficients from different contexts")
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.try_mul(rhs).expect("coefficients from different contexts")
    }
}

/// A map from symbol names to nonzero rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<String, BigRational>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(&mut self, symbol: impl Into<String>, value: BigRational) -> &mut Self {
        self.values.insert(symbol.into(), value);
        self
    }

    pub fn with(mut self, symbol: impl Into<String>, value: BigRational) -> Self {
        self.set(symbol, value);
        self
    }

    pub fn get(&self, symbol: &str) -> Option<&BigRational> {
        self.values.get(symbol)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BigRational)> {
        self.values.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Parses `sym=rat,sym=rat` where each value is an integer or `a/b`.
    /// Composite right-hand sides such as `q^-2` are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Assignment::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (sym, val) = part.split_once('=').ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("expected `symbol=value`, got `{part}`"),
            })?;
            let sym = sym.trim();
            if !is_identifier(sym) {
                return Err(Error::UnknownSymbol(sym.to_string()));
            }
            let value = parse_rational(val.trim()).ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("`{}` is not an exact rational", val.trim()),
            })?;
            out.set(sym, value);
        }
        Ok(out)
    }

    /// Values indexed by context position; rejects unknown symbols and zeros.
    pub(crate) fn resolve(&self, ctx: &ParamContext) -> Result<Vec<Option<BigRational>>> {
        let mut out = vec![None; ctx.len()];
        for (name, v) in &self.values {
            let idx = ctx.index_of(name).ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
            if v.is_zero() {
                return Err(Error::ZeroAssignment(name.clone()));
            }
            out[idx] = Some(v.clone());
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let parse_int = |t: &str| -> Option<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(parse_int(n)?, d))
        }
        None => Some(BigRational::from_integer(parse_int(s)?)),
    }
}

pub struct CoefficientDisplay<'a> {
    ctx: &'a ParamContext,
    coeff: &'a Coefficient,
}

impl fmt::Display for CoefficientDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "0");
        }
        // Highest total degree first reads most naturally.
        let mut terms: Vec<_> = self.coeff.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().map(|&x| x as i64).sum();
            let db: i64 = eb.iter().map(|&x| x as i64).sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (idx, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(self.ctx.symbols[idx].clone()),
                    _ => factors.push(format!("{}^{}", self.ctx.symbols[idx], p)),
                }
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
