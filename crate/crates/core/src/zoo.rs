//! Constructors for the supported algebra families, each with its torus grading.
//!
//! Generator orders:
//! - quantum affine spaces and tori: `x1 < ... < xn`;
//! - quantum matrices: row-major `X11 < X12 < ... < Xmn`;
//! - quantized Weyl algebras: `y1 < x1 < y2 < x2 < ...`;
//! - quantum symplectic space: `x1 < x1' < x2 < x2' < ...` (named `x1, x{2n}, x2, x{2n-1}, ...`);
//! - quantum Euclidean space: `x1 < ... < xn`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::{Coefficient, ParamContext, UnitMonomial};
use crate::error::{Error, Result};
use crate::pbw::{Element, GeneratorKind, Presentation, PresentationBuilder};

/// A multiplicatively antisymmetric matrix of unit coefficients:
/// `q_ii = 1` and `q_ji = q_ij^{-1}` by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymmetricMatrix {
    n: usize,
    entries: Vec<UnitMonomial>,
}

impl AntisymmetricMatrix {
    /// Builds from the strictly-upper entries `f(i, j)`, `i < j` (0-based).
    pub fn from_upper<F>(nvars: usize, n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Coefficient,
    {
        let mut m = AntisymmetricMatrix::trivial(nvars, n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, &f(i, j))?;
            }
        }
        Ok(m)
    }

    /// Builds from the strictly-lower entries `f(i, j)`, `i > j` (0-based).
    pub fn from_lower<F>(nvars: usize, n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Coefficient,
    {
        let mut m = AntisymmetricMatrix::trivial(nvars, n);
        for i in 0..n {
            for j in 0..i {
                m.set(i, j, &f(i, j))?;
            }
        }
        Ok(m)
    }

    fn set(&mut self, i: usize, j: usize, c: &Coefficient) -> Result<()> {
        let u = c.as_unit().ok_or_else(|| {
            Error::BadMatrix(format!("entry ({}, {}) is not a unit monomial", i + 1, j + 1))
        })?;
        let nvars = self.entries[0].exponents.len();
        if u.exponents.len() != nvars {
            return Err(Error::ContextMismatch(u.exponents.len(), nvars));
        }
        self.entries[j * self.n + i] = u.inverse();
        self.entries[i * self.n + j] = u;
        Ok(())
    }

    /// Every entry equal to one (the commutative case).
    pub fn trivial(nvars: usize, n: usize) -> Self {
        AntisymmetricMatrix { n, entries: vec![UnitMonomial::one(nvars); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &UnitMonomial {
        &self.entries[i * self.n + j]
    }

    pub fn coeff(&self, i: usize, j: usize) -> Coefficient {
        self.get(i, j).to_coefficient()
    }

    /// The principal submatrix on `keep` (indices in increasing order).
    pub fn restrict(&self, keep: &[usize]) -> AntisymmetricMatrix {
        let n = keep.len();
        let mut entries = Vec::with_capacity(n * n);
        for &a in keep {
            for &b in keep {
                entries.push(self.get(a, b).clone());
            }
        }
        AntisymmetricMatrix { n, entries }
    }
}

/// `q_ij = q^{s_ij}` for a single symbol and an antisymmetric integer matrix `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleParamSpec {
    pub symbol: String,
    pub exponents: Vec<Vec<i32>>,
}

impl SingleParamSpec {
    /// The standard choice `s_ij = 1` for `i < j`.
    pub fn standard(symbol: impl Into<String>, n: usize) -> Self {
        let exponents = (0..n)
            .map(|i| (0..n).map(|j| (j as i32 - i as i32).signum()).collect())
            .collect();
        SingleParamSpec { symbol: symbol.into(), exponents }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.exponents.len();
        for (i, row) in self.exponents.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadMatrix("exponent matrix is not square".into()));
            }
            if row[i] != 0 {
                return Err(Error::BadMatrix(format!("diagonal entry {} is nonzero", i + 1)));
            }
            for (j, &e) in row.iter().enumerate() {
                if self.exponents[j][i] != -e {
                    return Err(Error::BadMatrix(format!(
                        "exponents ({}, {}) and ({}, {}) are not opposite",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Parameters of a quantum affine space or quantum torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParams {
    pub context: Arc<ParamContext>,
    pub q: AntisymmetricMatrix,
}

impl AffineParams {
    /// Independent symbols `q_i_j` for `i < j` (1-based names).
    pub fn generic(n: usize) -> Self {
        let names: Vec<String> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| format!("q_{i}_{j}")))
            .collect();
        let context = Arc::new(ParamContext::new(names).expect("generated names are valid"));
        let nv = context.len();
        let q = AntisymmetricMatrix::from_upper(nv, n, |i, j| {
            context.symbol(&format!("q_{}_{}", i + 1, j + 1)).unwrap()
        })
        .expect("symbols are units");
        AffineParams { context, q }
    }

    /// All `q_ij = q` for `i < j`.
    pub fn single(n: usize, symbol: &str) -> Result<Self> {
        AffineParams::from_single(&SingleParamSpec::standard(symbol, n))
    }

    pub fn from_single(spec: &SingleParamSpec) -> Result<Self> {
        spec.validate()?;
        let context = Arc::new(ParamContext::new([spec.symbol.clone()])?);
        let n = spec.exponents.len();
        let q = AntisymmetricMatrix::from_upper(1, n, |i, j| {
            Coefficient::monomial(BigInt::from(1), vec![spec.exponents[i][j]])
        })?;
        Ok(AffineParams { context, q })
    }

    pub fn custom(context: Arc<ParamContext>, q: AntisymmetricMatrix) -> Result<Self> {
        if q.entries.iter().any(|u| u.exponents.len() != context.len()) {
            return Err(Error::BadMatrix("entries do not match the parameter context".into()));
        }
        Ok(AffineParams { context, q })
    }

    pub fn size(&self) -> usize {
        self.q.size()
    }

    /// Reads the parameters back from a presentation whose rules are all
    /// scalar swaps between polynomial or invertible generators.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        if !p.is_skew_commutative() {
            return Err(Error::Precondition(format!(
                "`{}` is not a quantum affine space: some rule has a tail",
                p.name()
            )));
        }
        let n = p.ngens();
        // x_j x_i = c_ji x_i x_j, so q_ij = c_ji^{-1}.
        let q = AntisymmetricMatrix::from_upper(p.nvars(), n, |i, j| {
            p.rule(j, i).swap.inverse().to_coefficient()
        })?;
        Ok(AffineParams { context: p.context().clone(), q })
    }

    pub fn restrict(&self, keep: &[usize]) -> AffineParams {
        AffineParams { context: self.context.clone(), q: self.q.restrict(keep) }
    }
}

fn standard_weights(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|t| (t == i) as i64).collect()).collect()
}

fn skew_presentation(name: String, params: &AffineParams, kind: GeneratorKind, names: &[String]) -> Result<Presentation> {
    let n = params.size();
    let mut b = PresentationBuilder::new(name, params.context.clone());
    for g in names {
        b.generator(g.clone(), kind)?;
    }
    for j in 0..n {
        for i in 0..j {
            b.set_rule(j, i, params.q.get(j, i).clone(), Element::zero())?;
        }
    }
    b.weights(n, standard_weights(n));
    b.build()
}

/// `k<x1..xn>` modulo `x_i x_j = q_ij x_j x_i`, graded by `x_i -> e_i`.
pub fn quantum_affine(params: &AffineParams) -> Result<Presentation> {
    let n = params.size();
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    skew_presentation(format!("quantum_affine_{n}"), params, GeneratorKind::Polynomial, &names)
}

/// The quantum torus: same relations with every generator invertible.
pub fn quantum_torus(params: &AffineParams) -> Result<Presentation> {
    let n = params.size();
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    skew_presentation(format!("quantum_torus_{n}"), params, GeneratorKind::Invertible, &names)
}

/// Quantum torus on named generators (used for stratum localizations).
pub fn quantum_torus_named(name: impl Into<String>, params: &AffineParams, names: &[String]) -> Result<Presentation> {
    if names.len() != params.size() {
        return Err(Error::Precondition("one name per generator required".into()));
    }
    skew_presentation(name.into(), params, GeneratorKind::Invertible, names)
}

/// Quantum affine space on named generators.
pub fn quantum_affine_named(name: impl Into<String>, params: &AffineParams, names: &[String]) -> Result<Presentation> {
    if names.len() != params.size() {
        return Err(Error::Precondition("one name per generator required".into()));
    }
    skew_presentation(name.into(), params, GeneratorKind::Polynomial, names)
}

/// Parameters `lambda` and `p` of multiparameter quantum matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixParams {
    pub context: Arc<ParamContext>,
    pub lambda: Coefficient,
    pub p: AntisymmetricMatrix,
}

impl MatrixParams {
    /// Symbols `lambda` and `p_i_j` for `i > j`.
    pub fn generic(n: usize) -> Self {
        let mut names = vec!["lambda".to_string()];
        for i in 1..=n {
            for j in 1..i {
                names.push(format!("p_{i}_{j}"));
            }
        }
        let context = Arc::new(ParamContext::new(names).expect("generated names are valid"));
        let nv = context.len();
        let p = AntisymmetricMatrix::from_lower(nv, n, |i, j| {
            context.symbol(&format!("p_{}_{}", i + 1, j + 1)).unwrap()
        })
        .expect("symbols are units");
        let lambda = context.symbol("lambda").unwrap();
        MatrixParams { context, lambda, p }
    }

    /// The standard one-parameter choice: `p_ij = q` for `i > j`, `lambda = q^-2`.
    pub fn single(n: usize, symbol: &str) -> Result<Self> {
        let context = Arc::new(ParamContext::new([symbol])?);
        let q = context.symbol(symbol)?;
        let p = AntisymmetricMatrix::from_lower(1, n, |_, _| q.clone())?;
        let lambda = q.pow(-2)?;
        Ok(MatrixParams { context, lambda, p })
    }

    pub fn custom(context: Arc<ParamContext>, lambda: Coefficient, p: AntisymmetricMatrix) -> Result<Self> {
        Ok(MatrixParams { context, lambda, p })
    }

    pub fn size(&self) -> usize {
        self.p.size()
    }

    pub fn p(&self, i: usize, j: usize) -> Coefficient {
        self.p.coeff(i, j)
    }
}

pub fn matrix_generator_name(i: usize, j: usize, big: bool) -> String {
    if big {
        format!("X_{i}_{j}")
    } else {
        format!("X{i}{j}")
    }
}

/// Multiparameter quantum `m x n` matrices, generators `X_ij` row-major, graded
/// by `X_ij -> (e_i, f_j)` in `Z^m x Z^n`. `params.p` must have size `max(m, n)`.
pub fn quantum_matrices(m: usize, n: usize, params: &MatrixParams) -> Result<Presentation> {
    let size = m.max(n);
    if params.size() != size {
        return Err(Error::BadMatrix(format!(
            "p has size {} but max(m, n) = {size}",
            params.size()
        )));
    }
    if params.lambda.is_zero() {
        return Err(Error::DegenerateLambda);
    }
    let lambda = params
        .lambda
        .as_unit()
        .ok_or_else(|| Error::BadMatrix("lambda must be a unit monomial".into()))?;
    if lambda.negative && lambda.exponents.iter().all(|&e| e == 0) {
        log::warn!("lambda = -1: the Hilbert series is expected to degenerate");
    }
    let ctx = params.context.clone();
    let nv = ctx.len();
    let big = m > 9 || n > 9;
    let mut b = PresentationBuilder::new(format!("quantum_matrices_{m}x{n}"), ctx.clone());
    for i in 1..=m {
        for j in 1..=n {
            b.generator(matrix_generator_name(i, j, big), GeneratorKind::Polynomial)?;
        }
    }
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let p = |a: usize, c: usize| params.p.get(a - 1, c - 1).clone();
    let one = Coefficient::one(nv);
    let lambda_minus_one = &params.lambda - &one;
    for l in 1..=m {
        for mm in 1..=n {
            for i in 1..=l {
                for j in 1..=n {
                    if idx(l, mm) <= idx(i, j) {
                        continue;
                    }
                    // X_lm X_ij rewritten for the descending pair (lm, ij).
                    let (swap, tail) = if l > i && mm > j {
                        let swap = p(l, i).mul(&p(j, mm));
                        let mut mono = vec![0; m * n];
                        mono[idx(i, mm)] += 1;
                        mono[idx(l, j)] += 1;
                        let c = lambda_minus_one.mul_unit(&p(l, i));
                        (swap, Element::monomial(mono, c))
                    } else if l > i {
                        (lambda.mul(&p(l, i)).mul(&p(j, mm)), Element::zero())
                    } else {
                        (p(j, mm), Element::zero())
                    };
                    b.set_rule(idx(l, mm), idx(i, j), swap, tail)?;
                }
            }
        }
    }
    let weights = (1..=m)
        .flat_map(|i| {
            (1..=n).map(move |j| {
                let mut w = vec![0i64; m + n];
                w[i - 1] = 1;
                w[m + j - 1] = 1;
                w
            })
        })
        .collect();
    b.weights(m + n, weights);
    b.build()
}

/// Parameters `Q = (q_1..q_n)` and `Gamma` of a quantized Weyl algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylParams {
    pub context: Arc<ParamContext>,
    pub q: Vec<Coefficient>,
    pub gamma: AntisymmetricMatrix,
}

impl WeylParams {
    /// Symbols `q_i` and `gamma_i_j` (`i < j`).
    pub fn generic(n: usize) -> Self {
        let mut names: Vec<String> = (1..=n).map(|i| format!("q_{i}")).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                names.push(format!("gamma_{i}_{j}"));
            }
        }
        let context = Arc::new(ParamContext::new(names).expect("generated names are valid"));
        let nv = context.len();
        let q = (1..=n).map(|i| context.symbol(&format!("q_{i}")).unwrap()).collect();
        let gamma = AntisymmetricMatrix::from_upper(nv, n, |i, j| {
            context.symbol(&format!("gamma_{}_{}", i + 1, j + 1)).unwrap()
        })
        .expect("symbols are units");
        WeylParams { context, q, gamma }
    }

    pub fn size(&self) -> usize {
        self.q.len()
    }
}

/// The multiparameter quantized Weyl algebra of degree `n`, generators ordered
/// `y1 < x1 < y2 < x2 < ...`, graded by `x_i -> e_i`, `y_i -> -e_i`.
pub fn quantized_weyl(params: &WeylParams) -> Result<Presentation> {
    let n = params.size();
    if params.gamma.size() != n {
        return Err(Error::BadMatrix("Gamma must be n x n".into()));
    }
    let mut qs = Vec::with_capacity(n);
    for (i, q) in params.q.iter().enumerate() {
        qs.push(q.as_unit().ok_or_else(|| Error::BadMatrix(format!("q_{} is not a unit", i + 1)))?);
    }
    let ctx = params.context.clone();
    let nv = ctx.len();
    let one = Coefficient::one(nv);
    let y = |i: usize| 2 * i;
    let x = |i: usize| 2 * i + 1;
    let g = |i: usize, j: usize| params.gamma.get(i, j).clone();
    let mut b = PresentationBuilder::new(format!("quantized_weyl_{n}"), ctx.clone());
    for i in 1..=n {
        b.generator(format!("y{i}"), GeneratorKind::Polynomial)?;
        b.generator(format!("x{i}"), GeneratorKind::Polynomial)?;
    }
    for a in 0..n {
        for c in 0..a {
            // y_a y_c = gamma_ac y_c y_a
            b.set_rule(y(a), y(c), g(a, c), Element::zero())?;
            // x_c x_a = q_c gamma_ca x_a x_c  =>  x_a x_c = (q_c gamma_ca)^{-1} x_c x_a
            b.set_rule(x(a), x(c), qs[c].mul(&g(c, a)).inverse(), Element::zero())?;
            // x_c y_a = gamma_ac y_a x_c (c < a)  =>  y_a x_c = gamma_ac^{-1} x_c y_a
            b.set_rule(y(a), x(c), g(a, c).inverse(), Element::zero())?;
            // x_a y_c = q_c gamma_ca y_c x_a (a > c)
            b.set_rule(x(a), y(c), qs[c].mul(&g(c, a)), Element::zero())?;
        }
        // x_a y_a = 1 + q_a y_a x_a + sum_{l<a} (q_l - 1) y_l x_l
        let mut tail = Element::scalar(2 * n, one.clone());
        for l in 0..a {
            let mut mono = vec![0; 2 * n];
            mono[y(l)] = 1;
            mono[x(l)] = 1;
            tail.add_term(mono, &params.q[l] - &one);
        }
        b.set_rule(x(a), y(a), qs[a].clone(), tail)?;
    }
    let mut weights = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut w = vec![0i64; n];
        w[i] = -1;
        weights.push(w.clone());
        w[i] = 1;
        weights.push(w);
    }
    b.weights(n, weights);
    b.build()
}

/// One-parameter quantum symplectic `2n`-space (Musson's relations).
///
/// Generators are named `x1..x{2n}` with `i' = 2n + 1 - i`, ordered
/// `x1 < x1' < x2 < x2' < ... < xn < xn'`, graded by `x_i -> e_i`, `x_i' -> -e_i`.
pub fn quantum_symplectic(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::Precondition("quantum symplectic space needs n >= 1".into()));
    }
    let ctx = Arc::new(ParamContext::new(["q"])?);
    let two_n = 2 * n;
    let prime = |i: usize| two_n + 1 - i;
    // Position of the 1-based original index in the generator order.
    let pos = |i: usize| if i <= n { 2 * (i - 1) } else { 2 * (prime(i) - 1) + 1 };
    let mut order = vec![0usize; two_n];
    for i in 1..=two_n {
        order[pos(i)] = i;
    }
    let mut b = PresentationBuilder::new(format!("quantum_symplectic_{two_n}"), ctx.clone());
    for &orig in &order {
        b.generator(format!("x{orig}"), GeneratorKind::Polynomial)?;
    }
    let q = |k: i32| UnitMonomial { negative: false, exponents: vec![k] };
    for hi in 0..two_n {
        for lo in 0..hi {
            let (a, c) = (order[hi], order[lo]);
            if a == prime(c) {
                // x_c x_c' = q^2 x_c' x_c + (q^2 - 1) sum_{l<c} q^{l-c} x_l x_l'  (c <= n)
                // rewritten as x_c' x_c = q^-2 x_c x_c' + sum_{l<c} (q^{l-c-2} - q^{l-c}) x_l x_l'
                let mut tail = Element::zero();
                for l in 1..c {
                    let mut mono = vec![0; two_n];
                    mono[pos(l)] = 1;
                    mono[pos(prime(l))] = 1;
                    let lc = l as i32 - c as i32;
                    let coeff = &q(lc - 2).to_coefficient() - &q(lc).to_coefficient();
                    tail.add_term(mono, coeff);
                }
                b.set_rule(hi, lo, q(-2), tail)?;
            } else if c < a {
                // x_c x_a = q x_a x_c  =>  x_a x_c = q^-1 x_c x_a
                b.set_rule(hi, lo, q(-1), Element::zero())?;
            } else {
                b.set_rule(hi, lo, q(1), Element::zero())?;
            }
        }
    }
    let weights = order
        .iter()
        .map(|&i| {
            let mut w = vec![0i64; n];
            if i <= n {
                w[i - 1] = 1;
            } else {
                w[prime(i) - 1] = -1;
            }
            w
        })
        .collect();
    b.weights(n, weights);
    b.build()
}

/// One-parameter quantum Euclidean `n`-space (Musson's relations), `n >= 2`.
///
/// Generators `x1 < ... < xn` with `i' = n + 1 - i`. For odd `n` the parameter
/// context is the single symbol `v` with `q = v^2`; otherwise it is `q`.
pub fn quantum_euclidean(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Precondition("quantum Euclidean space needs n >= 2".into()));
    }
    let odd = n % 2 == 1;
    let m = n / 2;
    let ctx = Arc::new(ParamContext::new([if odd { "v" } else { "q" }])?);
    // Exponent of the context symbol representing q^k.
    let qexp = |k: i32| if odd { 2 * k } else { k };
    let unit = |e: i32| UnitMonomial { negative: false, exponents: vec![e] };
    let prime = |i: usize| n + 1 - i;
    let mut b = PresentationBuilder::new(format!("quantum_euclidean_{n}"), ctx.clone());
    for i in 1..=n {
        b.generator(format!("x{i}"), GeneratorKind::Polynomial)?;
    }
    for hi in 1..=n {
        for lo in 1..hi {
            if hi == prime(lo) {
                // x_i x_i' = x_i' x_i + (1-q^2) sum_{l=i+1}^m q^{l-i-2} x_l x_l'
                //            [+ (1-q) q^{m-i-1/2} x_{m+1}^2 for odd n]
                // so x_i' x_i = x_i x_i' - (same correction).
                let i = lo;
                let mut tail = Element::zero();
                for l in i + 1..=m {
                    let mut mono = vec![0; n];
                    mono[l - 1] = 1;
                    mono[prime(l) - 1] = 1;
                    let k = l as i32 - i as i32 - 2;
                    // -(1 - q^2) q^k = q^{k+2} - q^k
                    let c = &unit(qexp(k + 2)).to_coefficient() - &unit(qexp(k)).to_coefficient();
                    tail.add_term(mono, c);
                }
                if odd {
                    let mut mono = vec![0; n];
                    mono[m] = 2;
                    // -(1 - v^2) v^{2(m-i)-1} = v^{2(m-i)+1} - v^{2(m-i)-1}
                    let e = 2 * (m as i32 - i as i32) - 1;
                    let c = &unit(e + 2).to_coefficient() - &unit(e).to_coefficient();
                    tail.add_term(mono, c);
                }
                b.set_rule(hi - 1, lo - 1, unit(0), tail)?;
            } else {
                // x_lo x_hi = q x_hi x_lo  =>  x_hi x_lo = q^-1 x_lo x_hi
                b.set_rule(hi - 1, lo - 1, unit(qexp(-1)), Element::zero())?;
            }
        }
    }
    let weights = (1..=n)
        .map(|i| {
            let mut w = vec![0i64; m];
            if i <= m {
                w[i - 1] = 1;
            } else if prime(i) <= m {
                w[prime(i) - 1] = -1;
            }
            w
        })
        .collect();
    b.weights(m, weights);
    b.build()
}
