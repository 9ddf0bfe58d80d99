//! Torus-invariant primes of quantum affine spaces and their strata.
//!
//! For `A = O_q(k^n)` under `H = (k^x)^n` the H-primes are the ideals
//! `I_w = <x_i : i in w>`. The stratum of `I_w` localizes to the quantum torus
//! on the surviving generators, whose center is spanned by the monomials in
//! an integer lattice computed from the exponents of the `q_ij`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeff::{Assignment, Coefficient};
use crate::error::{Error, Result};
use crate::grading::{is_central, is_homogeneous, scalar_normality_check, NormalityCertificate};
use crate::lattice::{kernel_basis, lattice_basis, rank, IntMatrix};
use crate::pbw::{leading_term, multiply, Element, GeneratorKind, Presentation};
use crate::zoo::{quantum_affine_named, quantum_torus_named, AffineParams};

/// `I_w`, the ideal generated by `x_i` for `i` in `w` (0-based, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPrime {
    pub n: usize,
    pub w: Vec<usize>,
}

impl HPrime {
    pub fn new(n: usize, mut w: Vec<usize>) -> Result<Self> {
        w.sort_unstable();
        w.dedup();
        if w.iter().any(|&i| i >= n) {
            return Err(Error::Precondition(format!("index out of range for n = {n}")));
        }
        Ok(HPrime { n, w })
    }

    pub fn height(&self) -> usize {
        self.w.len()
    }

    pub fn complement(&self) -> Vec<usize> {
        (0..self.n).filter(|i| !self.w.contains(i)).collect()
    }

    pub fn is_subset(&self, other: &HPrime) -> bool {
        self.w.iter().all(|i| other.w.contains(i))
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.w.iter().map(|i| i + 1).collect()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.w.iter().map(|&i| (0..self.n).map(|t| (t == i) as u32).collect()).collect(),
        )
    }
}

impl fmt::Display for HPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.one_based().iter().join(","))
    }
}

/// All subsets of `{0..n}`, by size and then lexicographically.
pub fn subsets(n: usize) -> Vec<HPrime> {
    (0..=n)
        .flat_map(|k| (0..n).combinations(k))
        .map(|w| HPrime { n, w })
        .collect()
}

/// An ideal spanned by the monomials divisible by one of its generators.
/// The whole ring is the ideal generated by the zero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Reduces the generators (drops multiples, sorts).
    pub fn new(n: usize, gens: Vec<Vec<u32>>) -> Self {
        let mut gens: Vec<Vec<u32>> = gens.into_iter().sorted().dedup().collect();
        let snapshot = gens.clone();
        gens.retain(|g| !snapshot.iter().any(|h| h != g && divides(h, g)));
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn whole(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![vec![0; n]] }
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_whole(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| *x.max(y)).collect())
            .collect();
        MonomialIdeal::new(self.n, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole() {
            return write!(f, "A");
        }
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        let mono = |g: &Vec<u32>| {
            g.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .join("*")
        };
        write!(f, "<{}>", self.gens.iter().map(mono).join(", "))
    }
}

/// Exponent data of the `q_ij` over a free set of atoms (unassigned symbols,
/// or primes after specialization), plus a sign bit each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterData {
    pub atoms: Vec<String>,
    n: usize,
    exps: Vec<Vec<BigInt>>,
    negative: Vec<bool>,
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Prime factorization of `|x|` by trial division; `None` if a cofactor
/// beyond the trial range cannot be shown prime.
fn factor(x: &BigInt) -> Option<BTreeMap<BigInt, i64>> {
    let mut rest = x.abs();
    let mut out = BTreeMap::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(TRIAL_LIMIT);
    while &d * &d <= rest && d <= limit {
        while rest.is_multiple_of(&d) {
            rest /= &d;
            *out.entry(d.clone()).or_insert(0) += 1;
        }
        d += 1;
    }
    if !rest.is_one() {
        if &d * &d <= rest {
            return None;
        }
        *out.entry(rest).or_insert(0) += 1;
    }
    Some(out)
}

impl ParameterData {
    pub fn symbolic(params: &AffineParams) -> Self {
        let n = params.size();
        let mut exps = Vec::with_capacity(n * n);
        let mut negative = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let u = params.q.get(i, j);
                exps.push(u.exponents.iter().map(|&e| BigInt::from(e)).collect());
                negative.push(u.negative);
            }
        }
        ParameterData { atoms: params.context.symbols().to_vec(), n, exps, negative }
    }

    /// Substitutes rational values for some symbols, factoring them into primes.
    pub fn specialized(params: &AffineParams, assignment: &Assignment) -> Result<Self> {
        let ctx = &params.context;
        let values = assignment.resolve(ctx)?;
        // Per symbol: sign and exponents over named atoms.
        let mut per_symbol: Vec<(bool, BTreeMap<String, BigInt>)> = Vec::new();
        for (t, v) in values.iter().enumerate() {
            let mut atoms = BTreeMap::new();
            let negative = match v {
                None => {
                    atoms.insert(ctx.symbols()[t].clone(), BigInt::one());
                    false
                }
                Some(r) => {
                    let unverified = || {
                        Error::GenericityUnverified(format!(
                            "could not factor the value of `{}`",
                            ctx.symbols()[t]
                        ))
                    };
                    for (prime, e) in factor(r.numer()).ok_or_else(unverified)? {
                        *atoms.entry(prime.to_string()).or_insert_with(BigInt::zero) += e;
                    }
                    for (prime, e) in factor(r.denom()).ok_or_else(unverified)? {
                        *atoms.entry(prime.to_string()).or_insert_with(BigInt::zero) -= e;
                    }
                    r.is_negative()
                }
            };
            per_symbol.push((negative, atoms));
        }
        let names: Vec<String> = per_symbol
            .iter()
            .flat_map(|(_, a)| a.keys().cloned())
            .sorted()
            .dedup()
            .collect();
        let n = params.size();
        let mut exps = Vec::with_capacity(n * n);
        let mut negative = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let u = params.q.get(i, j);
                let mut e = vec![BigInt::zero(); names.len()];
                let mut neg = u.negative;
                for (t, &k) in u.exponents.iter().enumerate() {
                    let (sym_neg, atoms) = &per_symbol[t];
                    neg ^= *sym_neg && k % 2 != 0;
                    for (name, x) in atoms {
                        let pos = names.binary_search(name).expect("collected above");
                        e[pos] += x * k;
                    }
                }
                exps.push(e);
                negative.push(neg);
            }
        }
        Ok(ParameterData { atoms: names, n, exps, negative })
    }

    fn exponent(&self, i: usize, j: usize) -> &[BigInt] {
        &self.exps[i * self.n + j]
    }

    fn is_negative(&self, i: usize, j: usize) -> bool {
        self.negative[i * self.n + j]
    }

    /// Whether the group generated by the `q_ij` is torsionfree, i.e. no
    /// product of them equals `-1`.
    pub fn torsion_free(&self) -> bool {
        let pairs: Vec<(usize, usize)> = (0..self.n).tuple_combinations().collect();
        if pairs.is_empty() {
            return true;
        }
        let rows: Vec<Vec<BigInt>> = (0..self.atoms.len())
            .map(|t| pairs.iter().map(|&(i, j)| self.exponent(i, j)[t].clone()).collect())
            .collect();
        let m = IntMatrix::from_rows(pairs.len(), &rows);
        kernel_basis(&m).iter().all(|k| {
            let parity: BigInt = pairs.iter().zip(k).filter(|((i, j), _)| self.is_negative(*i, *j)).map(|(_, c)| c).sum();
            parity.is_even()
        })
    }

    /// Rows `(i, atom)` over `keep x keep`: the exponent of the atom in `q_ij`.
    pub fn exponent_matrix(&self, keep: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = keep
            .iter()
            .flat_map(|&i| {
                (0..self.atoms.len()).map(move |t| keep.iter().map(|&j| self.exponent(i, j)[t].clone()).collect())
            })
            .collect();
        IntMatrix::from_rows(keep.len(), &rows)
    }

    /// Exponents `a` with `prod_j q_ij^{a_j} = 1` for all `i` in `keep`:
    /// the exponent rows vanish and the signs multiply to `+1`.
    pub fn center_lattice(&self, keep: &[usize]) -> Vec<Vec<BigInt>> {
        let m = keep.len();
        if m == 0 {
            return Vec::new();
        }
        let e = self.exponent_matrix(keep);
        let mut block = IntMatrix::zeros(e.rows() + m, 2 * m);
        for r in 0..e.rows() {
            for c in 0..m {
                block[(r, c)] = e[(r, c)].clone();
            }
        }
        for (r, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate() {
                if self.is_negative(i, j) {
                    block[(e.rows() + r, c)] = BigInt::one();
                }
            }
            block[(e.rows() + r, m + r)] = BigInt::from(2);
        }
        let projected: Vec<Vec<BigInt>> = kernel_basis(&block).into_iter().map(|v| v[..m].to_vec()).collect();
        lattice_basis(m, &projected)
    }
}

/// A quantum affine space with verified genericity, ready for stratification.
#[derive(Clone, Debug)]
pub struct Stratification {
    presentation: Presentation,
    params: AffineParams,
    data: ParameterData,
    specialization: Option<Assignment>,
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub hprime: HPrime,
    pub torus: Presentation,
    /// Product of the surviving generators in the original algebra.
    pub ore_set_generator_product: Element,
    pub exponent_matrix: IntMatrix,
    pub center_rank: usize,
    /// Exponents over the torus generators of a basis of central monomials.
    pub center_basis: Vec<Vec<BigInt>>,
    /// Distinct torus monomials carry distinct weights.
    pub graded_simple: bool,
    pub coefficient_field_note: &'static str,
}

impl StratumReport {
    pub fn torus_size(&self) -> usize {
        self.torus.ngens()
    }
}

#[derive(Clone, Debug)]
pub struct SeparationWitness {
    /// Index in the original algebra.
    pub generator: usize,
    /// The quantum affine space `A / I_w` in which the certificate lives.
    pub quotient: Presentation,
    pub certificate: NormalityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalClosure {
    pub hprime: HPrime,
    /// Intersection of the H-primes properly containing this one.
    pub j_prime: MonomialIdeal,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomsReport {
    pub local_closure: Vec<LocalClosure>,
    pub closure_is_union: bool,
    /// One entry per height bound `d`.
    pub open_by_height: Vec<bool>,
}

impl AxiomsReport {
    pub fn passed(&self) -> bool {
        self.local_closure.iter().all(|l| l.strict) && self.closure_is_union && self.open_by_height.iter().all(|&b| b)
    }
}

fn exponents_i32(v: &[BigInt]) -> Result<Vec<i32>> {
    v.iter()
        .map(|x| x.to_i32().ok_or_else(|| Error::Precondition("exponent out of range".into())))
        .collect()
}

impl Stratification {
    /// Requires a quantum affine space; with a specialization, the values are
    /// factored and torsionfreeness is re-checked on the specialized data.
    pub fn new(p: &Presentation, specialization: Option<&Assignment>) -> Result<Self> {
        if !p.is_skew_commutative() || p.kinds().iter().any(|k| *k != GeneratorKind::Polynomial) {
            return Err(Error::Precondition(format!("`{}` is not a quantum affine space", p.name())));
        }
        let params = AffineParams::from_presentation(p)?;
        let data = match specialization {
            Some(a) if !a.is_empty() => ParameterData::specialized(&params, a)?,
            _ => ParameterData::symbolic(&params),
        };
        if !data.torsion_free() {
            return Err(Error::GenericityUnverified(
                "the parameters generate a group with torsion (-1 is a product of them)".into(),
            ));
        }
        Ok(Stratification {
            presentation: p.clone(),
            params,
            data,
            specialization: specialization.filter(|a| !a.is_empty()).cloned(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn n(&self) -> usize {
        self.params.size()
    }

    pub fn data(&self) -> &ParameterData {
        &self.data
    }

    fn names(&self, keep: &[usize]) -> Vec<String> {
        keep.iter().map(|&i| self.presentation.generators()[i].clone()).collect()
    }

    /// `A / I_w` as the quantum affine space on the complement of `w`.
    pub fn quotient(&self, h: &HPrime) -> Result<Presentation> {
        let keep = h.complement();
        let name = format!("{}/I{}", self.presentation.name(), h);
        quantum_affine_named(name, &self.params.restrict(&keep), &self.names(&keep))
    }

    /// The localization of `A / I_w` at its generators.
    pub fn torus(&self, h: &HPrime) -> Result<Presentation> {
        let keep = h.complement();
        let name = format!("{}/I{}[inv]", self.presentation.name(), h);
        quantum_torus_named(name, &self.params.restrict(&keep), &self.names(&keep))
    }

    /// All `2^n` H-primes, by height then lexicographically. Each quotient
    /// is checked to multiply leading exponents additively on generators.
    pub fn hspec(&self) -> Result<Vec<HPrime>> {
        let n = self.n();
        let all = subsets(n);
        for h in &all {
            for g in 0..n {
                if is_homogeneous(&self.presentation, &self.presentation.generator(g)).is_none() {
                    return Err(Error::VerificationFailed(format!("x{} is not homogeneous", g + 1)));
                }
            }
            let q = self.quotient(h)?;
            for (a, b) in (0..q.ngens()).tuple_combinations() {
                let prod = multiply(&q, &q.generator(b), &q.generator(a))?;
                let (lead, _) = leading_term(&q, &prod)?;
                if lead.iter().sum::<i32>() != 2 || lead[a] != 1 || lead[b] != 1 {
                    return Err(Error::VerificationFailed(format!("quotient by I{h} is not a domain")));
                }
            }
        }
        Ok(all)
    }

    fn mu_is_one(&self, mu: &Coefficient) -> Result<bool> {
        match &self.specialization {
            None => Ok(mu.is_one()),
            Some(a) => {
                // Unassigned symbols stay symbolic: require them to cancel.
                let assigned_only = mu
                    .terms()
                    .all(|(e, _)| e.iter().enumerate().all(|(t, &k)| k == 0 || a.get(&self.params.context.symbols()[t]).is_some()));
                if !assigned_only {
                    return Ok(mu.is_one());
                }
                Ok(mu.specialize(&self.params.context, a)?.is_one())
            }
        }
    }

    pub fn stratum(&self, h: &HPrime) -> Result<StratumReport> {
        let keep = h.complement();
        let torus = self.torus(h)?;
        let exponent_matrix = self.data.exponent_matrix(&keep);
        let center_basis = self.data.center_lattice(&keep);
        let center_rank = center_basis.len();
        let kernel_rank = keep.len() - rank(&exponent_matrix);
        if center_rank != kernel_rank {
            return Err(Error::VerificationFailed(format!(
                "center rank {center_rank} differs from kernel rank {kernel_rank} at I{h}"
            )));
        }
        for a in &center_basis {
            let z = torus.monomial(exponents_i32(a)?);
            let cert = scalar_normality_check(&torus, &z)?
                .ok_or_else(|| Error::VerificationFailed(format!("basis monomial {a:?} is not normal")))?;
            for mu in &cert.scalars {
                if !self.mu_is_one(mu)? {
                    return Err(Error::VerificationFailed(format!("basis monomial {a:?} is not central")));
                }
            }
        }
        let mut e = vec![0; self.n()];
        for &i in &keep {
            e[i] = 1;
        }
        let weights: Vec<Vec<i64>> = keep.iter().map(|&i| self.presentation.weights()[i].clone()).collect();
        let graded_simple = weights.is_empty() || rank(&IntMatrix::from_rows(self.presentation.rank(), &weights)) == keep.len();
        Ok(StratumReport {
            hprime: h.clone(),
            ore_set_generator_product: self.presentation.monomial(e),
            torus,
            exponent_matrix,
            center_rank,
            center_basis,
            graded_simple,
            coefficient_field_note: "base field (generic parameters)",
        })
    }

    pub fn strata(&self) -> Result<Vec<StratumReport>> {
        subsets(self.n()).iter().map(|h| self.stratum(h)).collect()
    }

    /// For `w` strictly inside `w'`: the smallest index of `w' \ w`, certified
    /// normal and homogeneous in `A / I_w`.
    pub fn witness(&self, w: &HPrime, w2: &HPrime) -> Result<SeparationWitness> {
        if !w.is_subset(w2) || w == w2 {
            return Err(Error::Precondition(format!("{w} is not strictly contained in {w2}")));
        }
        let i = *w2.w.iter().find(|i| !w.w.contains(i)).expect("strict containment");
        let quotient = self.quotient(w)?;
        let pos = w.complement().iter().position(|&k| k == i).expect("i survives in the quotient");
        let x = quotient.generator(pos);
        if is_homogeneous(&quotient, &x).is_none() {
            return Err(Error::VerificationFailed(format!("x{} is not homogeneous", i + 1)));
        }
        let certificate = scalar_normality_check(&quotient, &x)?
            .ok_or_else(|| Error::VerificationFailed(format!("x{} is not normal modulo I{w}", i + 1)))?;
        Ok(SeparationWitness { generator: i, quotient, certificate })
    }
}

pub fn hspec_quantum_affine(p: &Presentation) -> Result<Vec<HPrime>> {
    Stratification::new(p, None)?.hspec()
}

pub fn stratum_report(p: &Presentation, w: &HPrime) -> Result<StratumReport> {
    Stratification::new(p, None)?.stratum(w)
}

pub fn normal_separation_witness(p: &Presentation, w: &HPrime, w2: &HPrime) -> Result<SeparationWitness> {
    Stratification::new(p, None)?.witness(w, w2)
}

/// All `a` in `[-b, b]^n` whose torus monomial commutes with every generator,
/// decided by the engine alone.
pub fn brute_force_central_monomials(torus: &Presentation, b: i32) -> Result<Vec<Vec<i32>>> {
    let n = torus.ngens();
    let points: Vec<Vec<i32>> = if n == 0 {
        vec![Vec::new()]
    } else {
        (0..n).map(|_| -b..=b).multi_cartesian_product().collect()
    };
    let mut out = Vec::new();
    for a in points {
        if is_central(torus, &torus.monomial(a.clone()))? {
            out.push(a);
        }
    }
    Ok(out)
}

/// Whether `f h` is central exactly when `h` is, for a nonzero central `f`.
pub fn central_multiplier_check(torus: &Presentation, f: &Element, h: &Element) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !is_central(torus, f)? {
        return Err(Error::Precondition("multiplier is not central".into()));
    }
    Ok(is_central(torus, &multiply(torus, f, h)?)? == is_central(torus, h)?)
}

/// Checks, on monomial ideals, that each H-prime `J` is cut out of its
/// closure by `J' = intersection of the H-primes above it` with `J' > J`;
/// that closures are unions of strata; and that bounding the height gives
/// open unions.
pub fn stratification_axioms_check(poset: &[HPrime]) -> AxiomsReport {
    let n = poset.first().map_or(0, |h| h.n);
    let ideals: Vec<MonomialIdeal> = poset.iter().map(HPrime::ideal).collect();
    let contains = |a: usize, b: usize| ideals[a].is_subset(&ideals[b]);

    let local_closure = (0..poset.len())
        .map(|j| {
            let j_prime = (0..poset.len())
                .filter(|&k| k != j && contains(j, k) && ideals[k] != ideals[j])
                .fold(MonomialIdeal::whole(n), |acc, k| acc.intersect(&ideals[k]));
            let strict = ideals[j].is_subset(&j_prime) && ideals[j] != j_prime;
            LocalClosure { hprime: poset[j].clone(), j_prime, strict }
        })
        .collect();

    // The closure of a stratum is the set of primes containing J; it must be
    // an up-set and agree with containment of index sets.
    let closure_is_union = (0..poset.len()).all(|j| {
        let up: Vec<usize> = (0..poset.len()).filter(|&k| contains(j, k)).collect();
        let upward_closed = up.iter().all(|&k| (0..poset.len()).all(|l| !contains(k, l) || up.contains(&l)));
        let agrees = (0..poset.len()).all(|k| contains(j, k) == poset[j].is_subset(&poset[k]));
        upward_closed && agrees
    });

    let max_height = poset.iter().map(HPrime::height).max().unwrap_or(0);
    let open_by_height = (0..=max_height)
        .map(|d| {
            let low: Vec<usize> = (0..poset.len()).filter(|&k| poset[k].height() <= d).collect();
            let high: Vec<usize> = (0..poset.len()).filter(|&k| poset[k].height() > d).collect();
            let down_closed = low.iter().all(|&k| (0..poset.len()).all(|l| !contains(l, k) || low.contains(&l)));
            let cut = high.iter().fold(MonomialIdeal::whole(n), |acc, &k| acc.intersect(&ideals[k]));
            // V(cut) holds every high prime and misses every low one.
            let separates = high.iter().all(|&k| cut.is_subset(&ideals[k])) && low.iter().all(|&k| !cut.is_subset(&ideals[k]));
            down_closed && separates
        })
        .collect();

    AxiomsReport { local_closure, closure_is_union, open_by_height }
}

/// Every proper monomial ideal generated inside `[0, b]^n` whose complement
/// is closed under multiplication, together with the number of candidates.
/// For monomial ideals of a quantum affine space this is exactly the
/// H-prime condition, since `x^a A x^c` lies in the ideal iff `x^{a+c}` does.
pub fn monomial_prime_oracle(n: usize, b: u32) -> (usize, Vec<MonomialIdeal>) {
    let points: Vec<Vec<u32>> = (0..n)
        .map(|_| 0..=b)
        .multi_cartesian_product()
        .sorted_by_key(|p| std::cmp::Reverse(p.iter().sum::<u32>()))
        .collect();
    let index: BTreeMap<Vec<u32>, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let succ: Vec<Vec<usize>> = points
        .iter()
        .map(|p| {
            (0..n)
                .filter(|&t| p[t] < b)
                .map(|t| {
                    let mut q = p.clone();
                    q[t] += 1;
                    index[&q]
                })
                .collect()
        })
        .collect();

    fn rec(k: usize, succ: &[Vec<usize>], chosen: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == succ.len() {
            out.push(chosen.clone());
            return;
        }
        chosen[k] = false;
        rec(k + 1, succ, chosen, out);
        if succ[k].iter().all(|&s| chosen[s]) {
            chosen[k] = true;
            rec(k + 1, succ, chosen, out);
            chosen[k] = false;
        }
    }
    let mut upsets = Vec::new();
    if n > 0 {
        rec(0, &succ, &mut vec![false; points.len()], &mut upsets);
    } else {
        upsets.push(vec![false]);
    }

    let clip = |p: Vec<u32>| -> Vec<u32> { p.into_iter().map(|e| e.min(b)).collect() };
    let mut primes = Vec::new();
    for up in &upsets {
        let ideal = MonomialIdeal::new(n, points.iter().zip(up).filter(|(_, &c)| c).map(|(p, _)| p.clone()).collect());
        if ideal.is_whole() {
            continue;
        }
        let outside: Vec<&Vec<u32>> = points.iter().filter(|p| !ideal.contains(p)).collect();
        let closed = outside.iter().all(|a| {
            outside
                .iter()
                .all(|c| !ideal.contains(&clip(a.iter().zip(c.iter()).map(|(x, y)| x + y).collect())))
        });
        if closed {
            primes.push(ideal);
        }
    }
    (upsets.len(), primes)
}
