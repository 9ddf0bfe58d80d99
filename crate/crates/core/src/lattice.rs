//! Exact integer linear algebra: Hermite and Smith normal forms, kernels, ranks.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense `rows x cols` matrix of big integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// From row vectors; `cols` is needed when there are no rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, v) in row.iter().enumerate() {
                m[(r, c)] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * &other[(k, c)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self[(src, c)] * k;
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, src)] * k;
            self[(r, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    /// Determinant of a square matrix (fraction-free elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U * A = H`, `U` unimodular,
/// pivots positive and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0;
    for c in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        loop {
            // Smallest nonzero magnitude at or below the pivot row.
            let best = (pivot_row..a.rows)
                .filter(|&r| !h[(r, c)].is_zero())
                .min_by(|&x, &y| h[(x, c)].abs().cmp(&h[(y, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..a.rows {
                if h[(r, c)].is_zero() {
                    continue;
                }
                let k = -h[(r, c)].div_floor(&h[(pivot_row, c)]);
                h.add_row(r, pivot_row, &k);
                u.add_row(r, pivot_row, &k);
                if !h[(r, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, c)].is_zero() {
            continue;
        }
        if h[(pivot_row, c)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let k = -h[(r, c)].div_floor(&h[(pivot_row, c)]);
            if !k.is_zero() {
                h.add_row(r, pivot_row, &k);
                u.add_row(r, pivot_row, &k);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Number of nonzero rows of the Hermite form.
pub fn rank(a: &IntMatrix) -> usize {
    let (h, _) = hnf(a);
    (0..h.rows).filter(|&r| h.row(r).iter().any(|x| !x.is_zero())).count()
}

/// Smith normal form: returns `(U, S, V)` with `S = U * A * V` diagonal,
/// nonnegative, each diagonal entry dividing the next.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let diag = a.rows.min(a.cols);
    for t in 0..diag {
        loop {
            let pivot = (t..a.rows)
                .flat_map(|r| (t..a.cols).map(move |c| (r, c)))
                .filter(|&(r, c)| !s[(r, c)].is_zero())
                .min_by(|&x, &y| s[x].abs().cmp(&s[y].abs()));
            let Some((pr, pc)) = pivot else { return finish_snf(u, s, v) };
            s.swap_rows(t, pr);
            u.swap_rows(t, pr);
            s.swap_cols(t, pc);
            v.swap_cols(t, pc);
            let mut clean = true;
            for r in t + 1..a.rows {
                let k = -s[(r, t)].div_floor(&s[(t, t)]);
                if !k.is_zero() {
                    s.add_row(r, t, &k);
                    u.add_row(r, t, &k);
                }
                clean &= s[(r, t)].is_zero();
            }
            for c in t + 1..a.cols {
                let k = -s[(t, c)].div_floor(&s[(t, t)]);
                if !k.is_zero() {
                    s.add_col(c, t, &k);
                    v.add_col(c, t, &k);
                }
                clean &= s[(t, c)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any offending row into row t and repeat.
            let offending = (t + 1..a.rows)
                .find(|&r| (t + 1..a.cols).any(|c| !s[(r, c)].is_multiple_of(&s[(t, t)])));
            match offending {
                Some(r) => {
                    s.add_row(t, r, &BigInt::one());
                    u.add_row(t, r, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish_snf(u, s, v)
}

fn finish_snf(u: IntMatrix, mut s: IntMatrix, mut v: IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    for t in 0..s.rows.min(s.cols) {
        if s[(t, t)].is_negative() {
            s.negate_col(t);
            v.negate_col(t);
        }
    }
    (u, s, v)
}

/// A canonical Z-basis of `{v : A v = 0}`, in Hermite form (first nonzero
/// entry of each vector positive). Empty iff `A` has trivial kernel.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (h, u) = hnf(&a.transpose());
    let kernel: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&r| h.row(r).iter().all(Zero::is_zero))
        .map(|r| u.row(r).to_vec())
        .collect();
    lattice_basis(a.cols, &kernel)
}

/// A canonical basis (nonzero Hermite rows) of the lattice spanned by `gens`.
pub fn lattice_basis(dim: usize, gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let (h, _) = hnf(&IntMatrix::from_rows(dim, gens));
    (0..h.rows)
        .map(|r| h.row(r).to_vec())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Membership in the lattice spanned by a Hermite-form basis.
pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut rest = v.to_vec();
    for row in basis {
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else { continue };
        let (q, r) = rest[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return false;
        }
        for (x, b) in rest.iter_mut().zip(row) {
            *x -= &q * b;
        }
    }
    rest.iter().all(Zero::is_zero)
}
