//! Dense matrices over an exact field (or over Complex64 for the numeric
//! orthonormalization pathway), with deterministic leftmost-pivot
//! elimination so that every basis choice downstream is reproducible.

use crate::scalars::Scalar;
use crate::{Error, Result};
use num_complex::Complex64;

/// Field-element operations needed by the linear algebra. `zero`/`one`
/// construct identities in the same field as `self`.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// The image of an integer in the field of `self`.
    fn from_int(&self, n: i64) -> Self;
    /// Equality up to the coefficient type's working precision.
    fn approx_eq(&self, o: &Self) -> bool {
        self == o
    }
}

impl Coeff for Scalar {
    fn zero(&self) -> Self {
        Scalar::zero(self.field())
    }
    fn one(&self) -> Self {
        Scalar::one(self.field())
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self)
    }
    fn conj(&self) -> Self {
        Scalar::conjugate(self)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn from_int(&self, n: i64) -> Self {
        Scalar::from_integer(self.field(), n)
    }
}

impl Coeff for Complex64 {
    fn zero(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.finv())
        }
    }
    fn conj(&self) -> Self {
        Complex64::new(self.re, -self.im)
    }
    fn is_zero(&self) -> bool {
        self.norm() < 1e-10
    }
    fn from_int(&self, n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn approx_eq(&self, o: &Self) -> bool {
        (self - o).norm() <= 1e-8 * (1.0 + self.norm().max(o.norm()))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T: Coeff> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
    /// an element of the field, kept so empty matrices can still mint 0 and 1
    proto: T,
}

pub type SMat = Mat<Scalar>;
pub type CMat = Mat<Complex64>;

impl<T: Coeff> Mat<T> {
    pub fn zeros(rows: usize, cols: usize, proto: T) -> Self {
        let z = proto.zero();
        Mat {
            rows,
            cols,
            data: vec![z; rows * cols],
            proto,
        }
    }

    pub fn identity(n: usize, proto: T) -> Self {
        let mut m = Mat::zeros(n, n, proto);
        for i in 0..n {
            let one = m.proto.one();
            m[(i, i)] = one;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>, proto: T) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            proto,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, proto: T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            data,
            proto,
        }
    }

    pub fn proto(&self) -> &T {
        &self.proto
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, self.proto.clone(), |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn conj_transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, self.proto.clone(), |i, j| {
            self[(j, i)].conj()
        })
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&f).collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
            proto: self.proto.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix dimension mismatch");
        let mut out = Mat::zeros(self.rows, o.cols, self.proto.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let t = a.mul(&o[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&t);
                }
            }
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Mat::from_fn(self.rows, idx.len(), self.proto.clone(), |i, j| {
            self[(i, idx[j])].clone()
        })
    }

    /// Horizontal concatenation of column blocks (all with self.rows rows).
    pub fn hstack(blocks: &[&Self], rows: usize, proto: T) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols, proto);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&Self], cols: usize, proto: T) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zeros(rows, cols, proto);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for i in 0..b.rows {
                for j in 0..cols {
                    out[(off + i, j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        out
    }

    /// Write `block` into self at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Determinant by Gaussian elimination with deterministic pivoting
    /// (first nonzero entry in the column).
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return self.proto.one();
        }
        let mut a = self.clone();
        let mut det = self.proto.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero());
            let pr = match pivot {
                Some(pr) => pr,
                None => return self.proto.zero(),
            };
            if pr != col {
                a.swap_rows(pr, col);
                det = det.neg();
            }
            let p = a[(col, col)].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].mul(&pinv);
                for c in col..n {
                    let t = factor.mul(&a[(col, c)]);
                    a[(r, c)] = a[(r, c)].sub(&t);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let pr = (row..a.rows).find(|&r| !a[(r, col)].is_zero());
            let pr = match pr {
                Some(pr) => pr,
                None => continue,
            };
            a.swap_rows(pr, row);
            let pinv = a[(row, col)].inv().expect("nonzero pivot");
            for c in col..a.cols {
                a[(row, c)] = a[(row, c)].mul(&pinv);
            }
            for r in 0..a.rows {
                if r != row && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for c in col..a.cols {
                        let t = f.mul(&a[(row, c)]);
                        a[(r, c)] = a[(r, c)].sub(&t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Deterministic kernel basis: one column per free column, with -1 in
    /// the standard back-substitution form.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.cols, free.len(), self.proto.clone());
        for (k, &fc) in free.iter().enumerate() {
            out[(fc, k)] = self.proto.one();
            for (prow, &pc) in pivots.iter().enumerate() {
                out[(pc, k)] = r[(prow, fc)].neg();
            }
        }
        out
    }

    /// Solve self * X = B; error if inconsistent or rank-deficient columns
    /// make the solution non-unique in the used pivots (least-pivot solution
    /// is returned for consistent underdetermined systems).
    pub fn solve(&self, b: &Self) -> Result<Self> {
        assert_eq!(self.rows, b.rows);
        let aug = Mat::hstack(&[self, b], self.rows, self.proto.clone());
        let (r, pivots) = aug.rref();
        // consistency: no pivot beyond self.cols
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::precondition("inconsistent linear system"));
        }
        let mut x = Mat::zeros(self.cols, b.cols, self.proto.clone());
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = r[(prow, self.cols + j)].clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let id = Mat::identity(self.rows, self.proto.clone());
        let inv = self.solve(&id)?;
        let check = self.mul(&inv);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !check[(i, j)].approx_eq(&id[(i, j)]) {
                    return Err(Error::precondition("singular matrix"));
                }
            }
        }
        Ok(inv)
    }
}

impl<T: Coeff> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T: Coeff> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl SMat {
    /// Numeric image under the designated embedding.
    pub fn embed(&self) -> Result<CMat> {
        let mut out = CMat::zeros(self.rows, self.cols, Complex64::new(0.0, 0.0));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].embed()?;
            }
        }
        Ok(out)
    }
}

/// Eigen-decomposition of a hermitian Complex64 matrix by cyclic Jacobi
/// rotations: returns (eigenvalues ascending, unitary U with A = U D U^*).
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, CMat) {
    let n = a.rows;
    assert_eq!(n, a.cols);
    let mut m = a.clone();
    let mut u = CMat::identity(n, Complex64::new(0.0, 0.0));
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += m[(p, q)].norm_sqr();
            }
        }
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.norm() < 1e-18 {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                // unitary 2x2: diagonalize [[app, apq], [conj(apq), aqq]]
                let phase = apq / apq.norm();
                let theta = 0.5 * (2.0 * apq.norm()).atan2(aqq - app);
                let c = theta.cos();
                let s = theta.sin();
                // columns p, q of the rotation: [c, s*phase; -s*conj(phase), c]
                let (cp, sp) = (Complex64::new(c, 0.0), phase * s);
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * cp - mkq * sp.conj();
                    m[(k, q)] = mkp * sp + mkq * cp;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = mpk * cp - mqk * sp;
                    m[(q, k)] = mpk * sp.conj() + mqk * cp;
                }
                for k in 0..n {
                    let ukp = u[(k, p)];
                    let ukq = u[(k, q)];
                    u[(k, p)] = ukp * cp - ukq * sp.conj();
                    u[(k, q)] = ukp * sp + ukq * cp;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (m[(i, i)].re, i)).collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let eigs: Vec<f64> = pairs.iter().map(|(v, _)| *v).collect();
    let mut usorted = CMat::zeros(n, n, Complex64::new(0.0, 0.0));
    for (newc, (_, oldc)) in pairs.iter().enumerate() {
        for r in 0..n {
            usorted[(r, newc)] = u[(r, *oldc)];
        }
    }
    (eigs, usorted)
}
