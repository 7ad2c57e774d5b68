//! Exact integer linear algebra: Hermite and Smith normal forms with
//! transformation matrices, congruence solving, and an incremental
//! echelon lattice.
//!
//! Orientation: the Hermite form is computed with *row* operations, i.e.
//! `U * A = H` where `H` is in row echelon form with positive pivots and
//! every entry above a pivot reduced into `[0, pivot)`. Lattices are row
//! spans throughout the crate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self[(source, j)].clone();
            if !s.is_zero() {
                self[(target, j)] += factor * s;
            }
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self[(i, source)].clone();
            if !s.is_zero() {
                self[(i, target)] += factor * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// Replaces rows (a, b) by (s*a + t*b, u*a + v*b).
    fn combine_rows(&mut self, a: usize, b: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self[(a, j)] = s * &x + t * &y;
            self[(b, j)] = u * &x + v * &y;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for i in 0..self.rows {
            let x = self[(i, a)].clone();
            let y = self[(i, b)].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self[(i, a)] = s * &x + t * &y;
            self[(i, b)] = u * &x + v * &y;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Extended gcd with non-negative gcd: returns (g, s, t) with s*a + t*b = g.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U * A = H`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // fold every lower row into the pivot row by gcd steps
        for r in pivot_row + 1..h.rows {
            if h[(r, col)].is_zero() {
                continue;
            }
            let x = h[(pivot_row, col)].clone();
            let y = h[(r, col)].clone();
            let (g, s, t) = xgcd(&x, &y);
            let xu = &x / &g;
            let yu = &y / &g;
            // [s t; -y/g x/g] has determinant 1
            h.combine_rows(pivot_row, r, &s, &t, &-&yu, &xu);
            u.combine_rows(pivot_row, r, &s, &t, &-&yu, &xu);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let piv = h[(pivot_row, col)].clone();
        for r in 0..pivot_row {
            let q = h[(r, col)].div_floor(&piv);
            if !q.is_zero() {
                h.add_row_multiple(r, pivot_row, &-&q);
                u.add_row_multiple(r, pivot_row, &-&q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form: `U * A * V = S`, S diagonal with d_1 | d_2 | ... >= 0.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);
    for k in 0..n {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in k..s.rows {
            for j in k..s.cols {
                let x = &s[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        s.swap_rows(k, bi);
        u.swap_rows(k, bi);
        s.swap_cols(k, bj);
        v.swap_cols(k, bj);
        loop {
            let mut changed = false;
            for i in k + 1..s.rows {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let x = s[(k, k)].clone();
                let y = s[(i, k)].clone();
                if y.is_multiple_of(&x) {
                    let q = -(&y / &x);
                    s.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                } else {
                    let (g, a1, b1) = xgcd(&x, &y);
                    let xu = &x / &g;
                    let yu = &y / &g;
                    s.combine_rows(k, i, &a1, &b1, &-&yu, &xu);
                    u.combine_rows(k, i, &a1, &b1, &-&yu, &xu);
                    changed = true;
                }
            }
            for j in k + 1..s.cols {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let x = s[(k, k)].clone();
                let y = s[(k, j)].clone();
                if y.is_multiple_of(&x) {
                    let q = -(&y / &x);
                    s.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                } else {
                    let (g, a1, b1) = xgcd(&x, &y);
                    let xu = &x / &g;
                    let yu = &y / &g;
                    s.combine_cols(k, j, &a1, &b1, &-&yu, &xu);
                    v.combine_cols(k, j, &a1, &b1, &-&yu, &xu);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let piv = s[(k, k)].clone();
            let bad = (k + 1..s.rows)
                .flat_map(|i| (k + 1..s.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&piv));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { s, u, v }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub particular: Vec<BigInt>,
    /// Basis (as rows) of the solution module of the homogeneous system.
    pub kernel: Vec<Vec<BigInt>>,
}

/// Solves `A x ≡ b (mod m)`; `m = 0` solves over the integers.
/// Returns `None` when the system has no solution.
pub fn solve_congruence(a: &IntMatrix, b: &[BigInt], m: &BigInt) -> Option<CongruenceSolution> {
    assert_eq!(a.rows, b.len(), "right-hand side length mismatch");
    assert!(!m.is_negative(), "modulus must be non-negative");
    let n = a.cols;
    // A x + m z = b over the integers
    let aug = if m.is_zero() {
        a.clone()
    } else {
        let mut aug = IntMatrix::zeros(a.rows, n + a.rows);
        for i in 0..a.rows {
            for j in 0..n {
                aug[(i, j)] = a[(i, j)].clone();
            }
            aug[(i, n + i)] = m.clone();
        }
        aug
    };
    let snf = smith_normal_form(&aug);
    let ub = snf.u.apply(b);
    let mut y = vec![BigInt::zero(); aug.cols];
    for (i, ubi) in ub.iter().enumerate() {
        let d = if i < aug.cols { snf.s[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !ubi.is_zero() {
                return None;
            }
        } else {
            if !ubi.is_multiple_of(&d) {
                return None;
            }
            y[i] = ubi / &d;
        }
    }
    let x_full = snf.v.apply(&y);
    let rank = snf.rank();
    let mut kernel_rows: Vec<Vec<BigInt>> = (rank..aug.cols)
        .map(|j| (0..n).map(|i| snf.v[(i, j)].clone()).collect())
        .collect();
    if !m.is_zero() {
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = m.clone();
            kernel_rows.push(e);
        }
    }
    let mut lattice = Lattice::new(n);
    for r in &kernel_rows {
        lattice.insert(r.clone());
    }
    let particular = lattice.reduce(&x_full[..n]);
    Some(CongruenceSolution { particular, kernel: lattice.basis() })
}

/// An integer row lattice kept in echelon form, supporting incremental
/// insertion, membership and canonical reduction of vectors modulo it.
///
/// Once the lattice has full rank, all stored rows are reduced modulo its
/// index `D` (valid because `D * Z^n` lies in the lattice), which keeps the
/// entries bounded.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Option<Vec<BigInt>>>,
    modulus: Option<BigInt>,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice { dim, rows: vec![None; dim], modulus: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().filter(|r| r.is_some()).count()
    }

    pub fn pivot(&self, col: usize) -> Option<&BigInt> {
        self.rows[col].as_ref().map(|r| &r[col])
    }

    pub fn pivot_row(&self, col: usize) -> Option<&[BigInt]> {
        self.rows[col].as_deref()
    }

    /// Index of the lattice in Z^dim, `None` if the rank is deficient.
    pub fn index(&self) -> Option<BigInt> {
        let mut d = BigInt::one();
        for c in 0..self.dim {
            d *= self.pivot(c)?;
        }
        Some(d)
    }

    fn reduce_mod(&self, v: &mut [BigInt], from: usize) {
        if let Some(m) = &self.modulus {
            for x in v[from..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mod_floor(m);
                }
            }
        }
    }

    /// Adds a vector to the generating set. Returns true if the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce_mod(&mut v, 0);
        let mut grew = false;
        for col in 0..self.dim {
            if v[col].is_zero() {
                continue;
            }
            match self.rows[col].take() {
                None => {
                    if v[col].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.rows[col] = Some(v);
                    grew = true;
                    break;
                }
                Some(mut row) => {
                    if v[col].is_multiple_of(&row[col]) {
                        let q = &v[col] / &row[col];
                        for j in col..self.dim {
                            if !row[j].is_zero() {
                                v[j] -= &q * &row[j];
                            }
                        }
                    } else {
                        let x = row[col].clone();
                        let y = v[col].clone();
                        let (g, s, t) = xgcd(&x, &y);
                        let xu = &x / &g;
                        let yu = &y / &g;
                        for j in col..self.dim {
                            let rj = row[j].clone();
                            let vj = v[j].clone();
                            row[j] = &s * &rj + &t * &vj;
                            v[j] = &xu * &vj - &yu * &rj;
                        }
                        grew = true;
                    }
                    // pivot entries are never reduced: the triangular shape
                    // with unchanged pivots keeps the span intact
                    self.reduce_mod(&mut row, col + 1);
                    self.reduce_mod(&mut v, 0);
                    self.rows[col] = Some(row);
                }
            }
        }
        if grew {
            if let Some(d) = self.index() {
                self.modulus = Some(d);
                let mut rows = std::mem::take(&mut self.rows);
                for (c, r) in rows.iter_mut().enumerate() {
                    if let Some(r) = r {
                        self.reduce_mod(r, c + 1);
                    }
                }
                self.rows = rows;
            }
        }
        grew
    }

    /// Canonical representative of `v` modulo the lattice: every coordinate
    /// with a pivot lies in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for col in 0..self.dim {
            if let Some(row) = &self.rows[col] {
                let q = v[col].div_floor(&row[col]);
                if !q.is_zero() {
                    for j in col..self.dim {
                        if !row[j].is_zero() {
                            v[j] -= &q * &row[j];
                        }
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Echelon basis (rows in pivot order).
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }
}

/// An integer lattice known to contain `m * Z^dim`, for a modulus `m`
/// below 2^62. All entries are kept reduced modulo `m` in machine words,
/// which makes insertion cheap for the large sparse systems of the
/// nilpotent quotient. Semantics match [`Lattice`].
#[derive(Clone, Debug)]
pub struct ModLattice {
    dim: usize,
    m: u64,
    /// Row `c` has its pivot in column `c`; the pivot divides `m`.
    rows: Vec<Vec<u64>>,
}

fn xgcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

impl ModLattice {
    pub fn new(dim: usize, m: u64) -> Self {
        assert!((1..1 << 62).contains(&m), "modulus out of range");
        let rows = (0..dim)
            .map(|c| {
                let mut r = vec![0; dim];
                r[c] = m;
                r
            })
            .collect();
        ModLattice { dim, m, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn pivot(&self, col: usize) -> u64 {
        self.rows[col][col]
    }

    fn lift(&self, v: &[BigInt]) -> Vec<u64> {
        let m = BigInt::from(self.m);
        v.iter().map(|x| if x.is_zero() { 0 } else { u64::try_from(x.mod_floor(&m)).unwrap() }).collect()
    }

    /// Adds a vector; returns true if the lattice grew.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let v = self.lift(v);
        self.insert_reduced(v)
    }

    /// Adds a sparse vector given as (column, value) pairs.
    pub fn insert_sparse<'a>(&mut self, entries: impl IntoIterator<Item = (usize, &'a BigInt)>) -> bool {
        let m = BigInt::from(self.m);
        let mut v = vec![0u64; self.dim];
        for (c, x) in entries {
            v[c] = u64::try_from(x.mod_floor(&m)).unwrap();
        }
        self.insert_reduced(v)
    }

    fn insert_reduced(&mut self, mut v: Vec<u64>) -> bool {
        let m = self.m as i128;
        let md = |x: i128| x.rem_euclid(m) as u64;
        let mut grew = false;
        for col in 0..self.dim {
            if v[col] == 0 {
                continue;
            }
            let row = &mut self.rows[col];
            let a = row[col] as i128;
            let b = v[col] as i128;
            if b % a == 0 {
                let q = b / a;
                v[col] = 0;
                for j in col + 1..self.dim {
                    if row[j] != 0 {
                        v[j] = md(v[j] as i128 - q * row[j] as i128);
                    }
                }
            } else {
                let (g, s, t) = xgcd_i128(a, b);
                let (au, bu) = (a / g, b / g);
                let (s, t) = (s.rem_euclid(m), t.rem_euclid(m));
                for j in col + 1..self.dim {
                    let (rj, vj) = (row[j] as i128, v[j] as i128);
                    if rj == 0 && vj == 0 {
                        continue;
                    }
                    row[j] = md((s * rj % m) + (t * vj % m));
                    v[j] = md((au * vj % m) - (bu * rj % m));
                }
                row[col] = g as u64;
                v[col] = 0;
                grew = true;
            }
        }
        grew
    }

    pub fn index(&self) -> BigInt {
        (0..self.dim).map(|c| BigInt::from(self.pivot(c))).product()
    }

    /// Canonical representative with every coordinate in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let m = self.m as i128;
        let mut v = self.lift(v);
        for col in 0..self.dim {
            let row = &self.rows[col];
            let q = (v[col] / row[col]) as i128;
            if q != 0 {
                for j in col..self.dim {
                    if row[j] != 0 {
                        v[j] = (v[j] as i128 - q * row[j] as i128).rem_euclid(m) as u64;
                    }
                }
                v[col] %= row[col];
            }
        }
        v.into_iter().map(BigInt::from).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// The echelon rows as an ordinary lattice.
    pub fn to_lattice(&self) -> Lattice {
        let mut l = Lattice::new(self.dim);
        for c in (0..self.dim).rev() {
            l.insert(self.rows[c].iter().map(|&x| BigInt::from(x)).collect());
        }
        l
    }

    /// Echelon rows; row `c` has its pivot in column `c`.
    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_small() {
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, m(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(u.mul(&a), h);
        assert!(u.is_unimodular());
    }

    #[test]
    fn hnf_zero() {
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn snf_examples() {
        let snf = smith_normal_form(&m(&[vec![4, 0], vec![0, 6]]));
        assert_eq!(snf.diagonal(), bi(&[2, 12]));
        let snf = smith_normal_form(&IntMatrix::zeros(2, 2));
        assert!(snf.s.is_zero());
        let snf = smith_normal_form(&m(&[vec![-5]]));
        assert_eq!(snf.diagonal(), bi(&[5]));
    }

    #[test]
    fn congruence_examples() {
        let a = m(&[vec![2]]);
        let sol = solve_congruence(&a, &bi(&[4]), &BigInt::zero()).unwrap();
        assert_eq!(sol.particular, bi(&[2]));
        assert!(sol.kernel.is_empty());
        assert!(solve_congruence(&a, &bi(&[1]), &BigInt::zero()).is_none());
        let sol = solve_congruence(&a, &bi(&[1]), &BigInt::from(3)).unwrap();
        assert_eq!(sol.particular, bi(&[2]));
        assert_eq!(sol.kernel, vec![bi(&[3])]);
    }

    #[test]
    fn congruence_kernel_over_integers() {
        // x + y = 3 : kernel spanned by (1,-1)
        let a = m(&[vec![1, 1]]);
        let sol = solve_congruence(&a, &bi(&[3]), &BigInt::zero()).unwrap();
        assert_eq!(a.apply(&sol.particular), bi(&[3]));
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(a.apply(&sol.kernel[0]), bi(&[0]));
    }

    #[test]
    fn lattice_membership_and_index() {
        let mut l = Lattice::new(2);
        l.insert(bi(&[2, 4]));
        l.insert(bi(&[6, 8]));
        assert_eq!(l.index(), Some(BigInt::from(8)));
        assert!(l.contains(&bi(&[2, 0])));
        assert!(l.contains(&bi(&[0, 4])));
        assert!(!l.contains(&bi(&[0, 2])));
        assert_eq!(l.reduce(&bi(&[3, 5])), bi(&[1, 1]));
    }

    #[test]
    fn modular_lattice_matches_integer_lattice() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let dim = rng.gen_range(1..6);
            let m = 2u64.pow(rng.gen_range(1..8));
            let mut big = Lattice::new(dim);
            for c in 0..dim {
                let mut e = vec![BigInt::zero(); dim];
                e[c] = BigInt::from(m);
                big.insert(e);
            }
            let mut small = ModLattice::new(dim, m);
            for _ in 0..rng.gen_range(0..6) {
                let v: Vec<BigInt> = (0..dim).map(|_| BigInt::from(rng.gen_range(-40i64..40))).collect();
                big.insert(v.clone());
                small.insert(&v);
            }
            assert_eq!(big.index(), Some(small.index()));
            for _ in 0..10 {
                let v: Vec<BigInt> = (0..dim).map(|_| BigInt::from(rng.gen_range(-100i64..100))).collect();
                assert_eq!(big.contains(&v), small.contains(&v));
                assert_eq!(big.reduce(&v).iter().zip(&small.reduce(&v)).filter(|(a, b)| a != b).count(), 0);
            }
        }
    }
}
