//! The rewriting engine.
//!
//! A [`Presentation`] lists generators `g_0 < g_1 < ... < g_{N-1}` and, for every
//! descending pair `j > i`, a rule `g_j g_i -> c_ji g_i g_j + tail_ji` whose swap
//! coefficient is a unit and whose tail is already PBW-normal. Elements are
//! stored as linear combinations of ordered monomials `g_0^{a_0} ... g_{N-1}^{a_{N-1}}`.
//!
//! Products are computed by pushing one letter at a time into a PBW monomial:
//! the highest out-of-order block is peeled off and the matching rule applied.
//! Results of `monomial * letter` and `monomial * monomial` are memoised per
//! presentation, and every rule application draws on a per-call fuel budget.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use itertools::Itertools;

use crate::coeff::{Coefficient, ParamContext, UnitMonomial};
use crate::error::{Error, Result};

pub type Monomial = Vec<i32>;

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Nesting bound for the recursive product; reaching it means the rules are
/// not terminating along the current path.
const MAX_DEPTH: u32 = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Exponents range over the nonnegative integers.
    Polynomial,
    /// Exponents range over all integers (quantum torus generators).
    Invertible,
}

/// A finite linear combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn monomial(m: Monomial, c: Coefficient) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    /// The scalar `c` in an algebra with `ngens` generators.
    pub fn scalar(ngens: usize, c: Coefficient) -> Self {
        Element::monomial(vec![0; ngens], c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[i32]) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Coefficient) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn scale_unit(&self, u: &UnitMonomial) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul_unit(u))).collect() }
    }

    /// Total degree of the highest-degree term (`None` for zero).
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }
}

pub fn total_degree(m: &[i32]) -> i64 {
    m.iter().map(|&x| x as i64).sum()
}

/// The engine's monomial order: total degree first, then exponents compared
/// from the highest-index generator downwards.
pub fn monomial_cmp(a: &[i32], b: &[i32]) -> Ordering {
    total_degree(a)
        .cmp(&total_degree(b))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// One rewrite rule `g_j g_i -> swap * g_i g_j + tail` for `j > i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub swap: UnitMonomial,
    pub tail: Element,
}

#[derive(Default)]
struct Memo {
    letter: Mutex<HashMap<(Monomial, usize, i8), Element>>,
    mono: Mutex<HashMap<(Monomial, Monomial), Element>>,
}

impl std::fmt::Debug for Memo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Memo")
    }
}

/// An iterated-Ore-extension style presentation.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    context: Arc<ParamContext>,
    generators: Vec<String>,
    kinds: Vec<GeneratorKind>,
    rules: Vec<Rule>,
    rank: usize,
    weights: Vec<Vec<i64>>,
    fuel: u64,
    memo: Arc<Memo>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.context == other.context
            && self.generators == other.generators
            && self.kinds == other.kinds
            && self.rules == other.rules
            && self.rank == other.rank
            && self.weights == other.weights
    }
}

fn rule_index(j: usize, i: usize) -> usize {
    debug_assert!(j > i);
    j * (j - 1) / 2 + i
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn context(&self) -> &Arc<ParamContext> {
        &self.context
    }

    pub fn nvars(&self) -> usize {
        self.context.len()
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn kinds(&self) -> &[GeneratorKind] {
        &self.kinds
    }

    pub fn kind(&self, g: usize) -> GeneratorKind {
        self.kinds[g]
    }

    /// The rule for the descending pair `(j, i)`, `j > i`.
    pub fn rule(&self, j: usize, i: usize) -> &Rule {
        &self.rules[rule_index(j, i)]
    }

    /// All rules as `(j, i, rule)` with `j > i`, ordered by `(j, i)`.
    pub fn rules(&self) -> impl Iterator<Item = (usize, usize, &Rule)> {
        (1..self.ngens()).flat_map(move |j| (0..j).map(move |i| (j, i, self.rule(j, i))))
    }

    /// Rank `r` of the grading group `Z^r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    /// A copy with a different per-call rewrite budget (the memo is shared).
    pub fn with_fuel(&self, fuel: u64) -> Presentation {
        Presentation { fuel, ..self.clone() }
    }

    /// A copy with one rule replaced. The memo is not shared.
    pub fn with_rule(&self, j: usize, i: usize, rule: Rule) -> Result<Presentation> {
        let mut b = PresentationBuilder::from_presentation(self);
        b.set_rule(j, i, rule.swap, rule.tail)?;
        Ok(b.build()?.with_fuel(self.fuel))
    }

    pub fn with_name(&self, name: impl Into<String>) -> Presentation {
        Presentation { name: name.into(), ..self.clone() }
    }

    pub fn one(&self) -> Element {
        Element::scalar(self.ngens(), self.context.one())
    }

    pub fn scalar(&self, c: Coefficient) -> Element {
        Element::scalar(self.ngens(), c)
    }

    /// The generator `g` as an element.
    pub fn generator(&self, g: usize) -> Element {
        let mut m = vec![0; self.ngens()];
        m[g] = 1;
        Element::monomial(m, self.context.one())
    }

    /// The PBW monomial with exponent vector `m` and coefficient one.
    pub fn monomial(&self, m: Monomial) -> Element {
        Element::monomial(m, self.context.one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.kinds.iter().all(|k| *k == GeneratorKind::Polynomial)
    }

    /// Whether every rule has an empty tail (a quantum affine space or torus).
    pub fn is_skew_commutative(&self) -> bool {
        self.rules.iter().all(|r| r.tail.is_zero())
    }

    pub fn check_monomial(&self, m: &[i32]) -> Result<()> {
        if m.len() != self.ngens() {
            return Err(Error::InvalidPresentation(format!(
                "monomial of length {} in an algebra with {} generators",
                m.len(),
                self.ngens()
            )));
        }
        for (g, &e) in m.iter().enumerate() {
            if e < 0 && self.kinds[g] == GeneratorKind::Polynomial {
                return Err(Error::NegativeExponent(self.generators[g].clone()));
            }
        }
        Ok(())
    }

    pub fn check_element(&self, a: &Element) -> Result<()> {
        for (m, c) in a.terms() {
            self.check_monomial(m)?;
            if let Some(n) = c.nvars() {
                if n != self.nvars() {
                    return Err(Error::ContextMismatch(n, self.nvars()));
                }
            }
        }
        Ok(())
    }
}

/// Incremental construction of a [`Presentation`] with validation on `build`.
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    name: String,
    context: Arc<ParamContext>,
    generators: Vec<String>,
    kinds: Vec<GeneratorKind>,
    rules: BTreeMap<(usize, usize), Rule>,
    rank: usize,
    weights: Option<Vec<Vec<i64>>>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>, context: Arc<ParamContext>) -> Self {
        PresentationBuilder {
            name: name.into(),
            context,
            generators: Vec::new(),
            kinds: Vec::new(),
            rules: BTreeMap::new(),
            rank: 0,
            weights: None,
        }
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationBuilder {
            name: p.name.clone(),
            context: p.context.clone(),
            generators: p.generators.clone(),
            kinds: p.kinds.clone(),
            rules: p.rules().map(|(j, i, r)| ((j, i), r.clone())).collect(),
            rank: p.rank,
            weights: Some(p.weights.clone()),
        }
    }

    pub fn context(&self) -> &Arc<ParamContext> {
        &self.context
    }

    pub fn generator(&mut self, name: impl Into<String>, kind: GeneratorKind) -> Result<usize> {
        let name = name.into();
        if !crate::coeff::is_identifier(&name) {
            return Err(Error::InvalidPresentation(format!("bad generator name `{name}`")));
        }
        if self.generators.contains(&name) || self.context.index_of(&name).is_some() {
            return Err(Error::InvalidPresentation(format!("name `{name}` declared twice")));
        }
        self.generators.push(name);
        self.kinds.push(kind);
        Ok(self.generators.len() - 1)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn set_rule(&mut self, j: usize, i: usize, swap: UnitMonomial, tail: Element) -> Result<()> {
        if j <= i || j >= self.generators.len() {
            return Err(Error::InvalidPresentation(format!("rule pair ({j}, {i}) is not descending")));
        }
        self.rules.insert((j, i), Rule { swap, tail });
        Ok(())
    }

    /// Convenience form taking the swap as a coefficient.
    pub fn set_rule_coeff(&mut self, j: usize, i: usize, swap: &Coefficient, tail: Element) -> Result<()> {
        let unit = swap.as_unit().ok_or_else(|| {
            Error::NonUnitSwap(self.generators[j].clone(), self.generators[i].clone())
        })?;
        self.set_rule(j, i, unit, tail)
    }

    pub fn has_rule(&self, j: usize, i: usize) -> bool {
        self.rules.contains_key(&(j, i))
    }

    pub fn weights(&mut self, rank: usize, weights: Vec<Vec<i64>>) -> &mut Self {
        self.rank = rank;
        self.weights = Some(weights);
        self
    }

    pub fn build(self) -> Result<Presentation> {
        let n = self.generators.len();
        let nvars = self.context.len();
        let mut rules = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                let rule = self.rules.get(&(j, i)).ok_or_else(|| {
                    Error::MissingRulePair(self.generators[j].clone(), self.generators[i].clone())
                })?;
                if rule.swap.exponents.len() != nvars {
                    return Err(Error::ContextMismatch(rule.swap.exponents.len(), nvars));
                }
                if !rule.tail.is_zero()
                    && (self.kinds[j] == GeneratorKind::Invertible
                        || self.kinds[i] == GeneratorKind::Invertible)
                {
                    return Err(Error::InvalidPresentation(format!(
                        "invertible generator in rule ({}, {}) must have an empty tail",
                        self.generators[j], self.generators[i]
                    )));
                }
                rules.push(rule.clone());
            }
        }
        let weights = self.weights.unwrap_or_else(|| vec![Vec::new(); n]);
        if weights.len() != n || weights.iter().any(|w| w.len() != self.rank) {
            return Err(Error::InvalidPresentation(format!(
                "expected {n} weight vectors of length {}",
                self.rank
            )));
        }
        let p = Presentation {
            name: self.name,
            context: self.context,
            generators: self.generators,
            kinds: self.kinds,
            rules,
            rank: self.rank,
            weights,
            fuel: DEFAULT_FUEL,
            memo: Arc::new(Memo::default()),
        };
        for (j, i, r) in p.rules() {
            p.check_element(&r.tail)?;
            if r.tail.terms().any(|(m, _)| total_degree(m) > 2) {
                log::debug!("rule ({j}, {i}) of {} has a tail above degree two", p.name);
            }
        }
        Ok(p)
    }
}

/// A single letter `g^{±1}` of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inverse(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    fn sign(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A scalar times a product of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub scalar: Coefficient,
    pub letters: Vec<Letter>,
}

struct Budget {
    limit: u64,
    remaining: u64,
    depth: u32,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, remaining: limit, depth: 0 }
    }

    fn spend(&mut self, steps: u64) -> Result<()> {
        if self.remaining < steps {
            self.remaining = 0;
            return Err(Error::FuelExhausted(self.limit));
        }
        self.remaining -= steps;
        Ok(())
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::FuelExhausted(self.limit));
        }
        Ok(())
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }
}

struct Engine<'a> {
    p: &'a Presentation,
    budget: Budget,
}

impl<'a> Engine<'a> {
    fn new(p: &'a Presentation) -> Self {
        Engine { p, budget: Budget::new(p.fuel) }
    }

    fn mono_times_letter(&mut self, m: &[i32], g: usize, sign: i8) -> Result<Element> {
        let key = (m.to_vec(), g, sign);
        if let Some(hit) = self.p.memo.letter.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        self.budget.enter()?;
        let out = self.mono_times_letter_uncached(m, g, sign);
        self.budget.leave();
        let out = out?;
        self.p.memo.letter.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn mono_times_letter_uncached(&mut self, m: &[i32], g: usize, sign: i8) -> Result<Element> {
        let p = self.p;
        let top = (g + 1..m.len()).rev().find(|&k| m[k] != 0);
        let Some(k) = top else {
            let mut e = m.to_vec();
            e[g] += sign as i32;
            if e[g] < 0 && p.kinds[g] == GeneratorKind::Polynomial {
                return Err(Error::NegativeExponent(p.generators[g].clone()));
            }
            return Ok(p.monomial(e));
        };
        let rule = p.rule(k, g);
        if rule.tail.is_zero() {
            // g_k^a g^s = c^{a s} g^s g_k^a for a q-commuting pair; charged
            // as the |a| single swaps it stands for.
            self.budget.spend(m[k].unsigned_abs() as u64)?;
            let c = rule.swap.pow(m[k] as i64 * sign as i64);
            let mut u = m.to_vec();
            u[k] = 0;
            let left = self.mono_times_letter(&u, g, sign)?;
            let mut out = self.times_power(&left, k, m[k])?;
            out = out.scale_unit(&c);
            Ok(out)
        } else {
            // Only polynomial generators carry tails, so m[k] > 0 and sign = +1.
            debug_assert!(m[k] > 0 && sign == 1);
            self.budget.spend(1)?;
            let mut u = m.to_vec();
            u[k] -= 1;
            let left = self.mono_times_letter(&u, g, 1)?;
            let swapped = self.element_times_letter(&left, k, 1)?.scale_unit(&rule.swap);
            let tail = self.element_times_element(&p.monomial(u), &rule.tail)?;
            Ok(swapped.add(&tail))
        }
    }

    fn element_times_letter(&mut self, a: &Element, g: usize, sign: i8) -> Result<Element> {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            let prod = self.mono_times_letter(m, g, sign)?;
            for (pm, pc) in prod.terms {
                out.add_term(pm, &pc * c);
            }
        }
        Ok(out)
    }

    fn times_power(&mut self, a: &Element, g: usize, power: i32) -> Result<Element> {
        let sign = if power < 0 { -1 } else { 1 };
        let mut acc = a.clone();
        for _ in 0..power.unsigned_abs() {
            acc = self.element_times_letter(&acc, g, sign)?;
        }
        Ok(acc)
    }

    fn mono_times_mono(&mut self, a: &[i32], b: &[i32]) -> Result<Element> {
        let key = (a.to_vec(), b.to_vec());
        if let Some(hit) = self.p.memo.mono.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut acc = self.p.monomial(a.to_vec());
        for (g, &e) in b.iter().enumerate() {
            if e != 0 {
                acc = self.times_power(&acc, g, e)?;
            }
        }
        self.p.memo.mono.lock().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    fn element_times_element(&mut self, a: &Element, b: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let scalar = ca * cb;
                let prod = self.mono_times_mono(ma, mb)?;
                for (pm, pc) in prod.terms {
                    out.add_term(pm, &pc * &scalar);
                }
            }
        }
        Ok(out)
    }
}

/// The PBW normal form of a word.
pub fn normal_form(p: &Presentation, word: &Word) -> Result<Element> {
    for l in &word.letters {
        if l.generator >= p.ngens() {
            return Err(Error::UnknownGenerator(l.generator));
        }
        if l.inverse && p.kind(l.generator) == GeneratorKind::Polynomial {
            return Err(Error::NegativeExponent(p.generators[l.generator].clone()));
        }
    }
    let mut engine = Engine::new(p);
    let mut acc = p.scalar(word.scalar.clone());
    for l in &word.letters {
        acc = engine.element_times_letter(&acc, l.generator, l.sign())?;
    }
    Ok(acc)
}

/// The PBW-normal product `a * b`.
pub fn multiply(p: &Presentation, a: &Element, b: &Element) -> Result<Element> {
    p.check_element(a)?;
    p.check_element(b)?;
    Engine::new(p).element_times_element(a, b)
}

/// Product of several elements, left to right.
pub fn multiply_all<'e, I>(p: &Presentation, factors: I) -> Result<Element>
where
    I: IntoIterator<Item = &'e Element>,
{
    let mut acc = p.one();
    for f in factors {
        acc = multiply(p, &acc, f)?;
    }
    Ok(acc)
}

/// The commutator-style difference `a*b - b*a`.
pub fn commutator(p: &Presentation, a: &Element, b: &Element) -> Result<Element> {
    Ok(multiply(p, a, b)?.sub(&multiply(p, b, a)?))
}

/// Result of resolving one overlap `g_k g_j g_i` with `k > j > i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapReport {
    pub triple: (usize, usize, usize),
    pub resolved: bool,
    pub discrepancy: Element,
    /// Set when either side could not be reduced (for example, fuel ran out).
    pub failure: Option<Error>,
}

fn resolve_overlap(p: &Presentation, k: usize, j: usize, i: usize) -> Result<Element> {
    let mut engine = Engine::new(p);
    let rule_kj = p.rule(k, j);
    let rule_ji = p.rule(j, i);
    // (g_k g_j) g_i with g_k g_j rewritten first.
    let first = p.generator(j).scale_unit(&rule_kj.swap);
    let first = engine.element_times_element(&first, &p.generator(k))?.add(&rule_kj.tail);
    let left = engine.element_times_letter(&first, i, 1)?;
    // g_k (g_j g_i) with g_j g_i rewritten first.
    let second = engine
        .element_times_element(&p.generator(i), &p.generator(j))?
        .scale_unit(&rule_ji.swap)
        .add(&rule_ji.tail);
    let right = engine.element_times_element(&p.generator(k), &second)?;
    Ok(left.sub(&right))
}

/// Reduces every overlap `g_k g_j g_i` (`k > j > i`) along both critical
/// orders and reports the difference. Sorted by `(k, j, i)`.
pub fn diamond_check(p: &Presentation) -> Vec<OverlapReport> {
    let n = p.ngens();
    (0..n)
        .tuple_combinations::<(_, _, _)>()
        .map(|(i, j, k)| (k, j, i))
        .sorted()
        .map(|(k, j, i)| match resolve_overlap(p, k, j, i) {
            Ok(d) => OverlapReport { triple: (k, j, i), resolved: d.is_zero(), discrepancy: d, failure: None },
            Err(e) => OverlapReport {
                triple: (k, j, i),
                resolved: false,
                discrepancy: Element::zero(),
                failure: Some(e),
            },
        })
        .collect()
}

/// Enumerates exponent vectors in `N^n` of total degree `d` in increasing lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d as i32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a as i32);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Number of PBW monomials of total degree `d`. Each one is re-reduced from its
/// ordered word to confirm the engine treats it as irreducible.
pub fn hilbert_count(p: &Presentation, d: u32) -> Result<u64> {
    if !p.is_polynomial() {
        return Err(Error::Precondition("hilbert_count needs polynomial generators".into()));
    }
    let mut count = 0u64;
    for m in monomials_of_degree(p.ngens(), d) {
        let letters = m
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(Letter::new(g), e as usize))
            .collect();
        let nf = normal_form(p, &Word { scalar: p.context.one(), letters })?;
        if nf != p.monomial(m.clone()) {
            return Err(Error::InvalidPresentation(format!(
                "ordered monomial {m:?} is not irreducible"
            )));
        }
        count += 1;
    }
    Ok(count)
}

/// The maximal term of `a` under [`monomial_cmp`].
pub fn leading_term(p: &Presentation, a: &Element) -> Result<(Monomial, Coefficient)> {
    p.check_element(a)?;
    a.terms()
        .max_by(|(x, _), (y, _)| monomial_cmp(x, y))
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or(Error::ZeroElement)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quantum_plane() -> Presentation {
        let ctx = Arc::new(ParamContext::new(["q"]).unwrap());
        let mut b = PresentationBuilder::new("plane", ctx.clone());
        b.generator("x1", GeneratorKind::Polynomial).unwrap();
        b.generator("x2", GeneratorKind::Polynomial).unwrap();
        let qinv = ctx.symbol("q").unwrap().invert_unit().unwrap();
        b.set_rule_coeff(1, 0, &qinv, Element::zero()).unwrap();
        b.build().unwrap()
    }

    fn word(p: &Presentation, gens: &[usize]) -> Word {
        Word { scalar: p.context().one(), letters: gens.iter().map(|&g| Letter::new(g)).collect() }
    }

    #[test]
    fn plane_swap() {
        let p = quantum_plane();
        let nf = normal_form(&p, &word(&p, &[1, 0])).unwrap();
        let qinv = p.context().symbol("q").unwrap().invert_unit().unwrap();
        assert_eq!(nf, Element::monomial(vec![1, 1], qinv));
        assert_eq!(normal_form(&p, &word(&p, &[0, 1])).unwrap(), p.monomial(vec![1, 1]));
    }

    #[test]
    fn identity_and_zero() {
        let p = quantum_plane();
        let a = p.generator(0).add(&p.monomial(vec![2, 1]));
        assert_eq!(multiply(&p, &a, &p.one()).unwrap(), a);
        assert_eq!(multiply(&p, &p.one(), &a).unwrap(), a);
        assert!(multiply(&p, &a, &Element::zero()).unwrap().is_zero());
    }

    #[test]
    fn missing_rule_is_rejected() {
        let ctx = Arc::new(ParamContext::empty());
        let mut b = PresentationBuilder::new("bad", ctx);
        b.generator("a", GeneratorKind::Polynomial).unwrap();
        b.generator("b", GeneratorKind::Polynomial).unwrap();
        assert_eq!(b.build().unwrap_err(), Error::MissingRulePair("b".into(), "a".into()));
    }

    #[test]
    fn inverse_of_polynomial_generator_is_rejected() {
        let p = quantum_plane();
        let w = Word { scalar: p.context().one(), letters: vec![Letter::inverse(0)] };
        assert_eq!(normal_form(&p, &w), Err(Error::NegativeExponent("x1".into())));
    }

    #[test]
    fn small_budget_exhausts_fuel() {
        let p = quantum_plane().with_fuel(3);
        let w = word(&p, &[1, 1, 1, 0, 0, 0]);
        assert_eq!(normal_form(&p, &w), Err(Error::FuelExhausted(3)));
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomial_cmp(&[1, 0], &[1, 1]), Ordering::Less);
        assert_eq!(monomial_cmp(&[2, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(monomial_cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(monomial_cmp(&[2, 0, 0], &[0, 2, 0]), Ordering::Less);
    }

    #[test]
    fn leading_term_examples() {
        let p = quantum_plane();
        let a = p.generator(0).add(&p.monomial(vec![1, 1]));
        assert_eq!(leading_term(&p, &a).unwrap(), (vec![1, 1], p.context().one()));
        let single = p.monomial(vec![3, 2]);
        assert_eq!(leading_term(&p, &single).unwrap().0, vec![3, 2]);
        assert_eq!(leading_term(&p, &Element::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn monomials_of_degree_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 1).len(), 0);
    }
}
