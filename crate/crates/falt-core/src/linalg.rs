//! Minimal complex arithmetic and dense matrices at working precision, plus
//! LU decomposition with partial pivoting for determinants. Matrices here
//! are tiny (at most 2g x 2g with g <= 15), so nothing beyond partial
//! pivoting is needed.

use rug::Float;

use crate::ctx::Ctx;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn zero(wp: u32) -> Self {
        Complex {
            re: Float::new(wp),
            im: Float::new(wp),
        }
    }

    pub fn from_polar(modulus: &Float, angle: &Float) -> Self {
        let wp = modulus.prec();
        let (sin, cos) = angle.clone().sin_cos(Float::new(wp));
        Complex {
            re: Float::with_val(wp, modulus * &cos),
            im: Float::with_val(wp, modulus * &sin),
        }
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn add(&self, other: &Complex) -> Complex {
        let wp = self.re.prec();
        Complex {
            re: Float::with_val(wp, &self.re + &other.re),
            im: Float::with_val(wp, &self.im + &other.im),
        }
    }

    pub fn sub(&self, other: &Complex) -> Complex {
        let wp = self.re.prec();
        Complex {
            re: Float::with_val(wp, &self.re - &other.re),
            im: Float::with_val(wp, &self.im - &other.im),
        }
    }

    pub fn mul(&self, other: &Complex) -> Complex {
        let wp = self.re.prec();
        let mut re = Float::with_val(wp, &self.re * &other.re);
        re -= Float::with_val(wp, &self.im * &other.im);
        let mut im = Float::with_val(wp, &self.re * &other.im);
        im += Float::with_val(wp, &self.im * &other.re);
        Complex { re, im }
    }

    pub fn div(&self, other: &Complex) -> Complex {
        let wp = self.re.prec();
        let d = other.abs2();
        let num = self.mul(&other.conj());
        Complex {
            re: Float::with_val(wp, &num.re / &d),
            im: Float::with_val(wp, &num.im / &d),
        }
    }

    pub fn scale(&self, f: &Float) -> Complex {
        let wp = self.re.prec();
        Complex {
            re: Float::with_val(wp, &self.re * f),
            im: Float::with_val(wp, &self.im * f),
        }
    }

    pub fn neg(&self) -> Complex {
        let wp = self.re.prec();
        Complex {
            re: Float::with_val(wp, -&self.re),
            im: Float::with_val(wp, -&self.im),
        }
    }

    /// |z|^2, cheap pivot metric.
    pub fn abs2(&self) -> Float {
        let wp = self.re.prec();
        let mut r = self.re.clone().square();
        r += Float::with_val(wp, self.im.clone().square());
        r
    }

    pub fn abs(&self) -> Float {
        self.abs2().sqrt()
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zero(rows: usize, cols: usize, wp: u32) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex::zero(wp); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Complex {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex) {
        self.data[r * self.cols + c] = v;
    }

    /// self * other^H (conjugate transpose of `other`).
    pub fn mul_conj_transpose(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, other.cols);
        let wp = self.data[0].re.prec();
        let mut out = ComplexMatrix::zero(self.rows, other.rows, wp);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let mut acc = Complex::zero(wp);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&other.at(j, k).conj()));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// self * other^T (plain transpose).
    pub fn mul_transpose(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, other.cols);
        let wp = self.data[0].re.prec();
        let mut out = ComplexMatrix::zero(self.rows, other.rows, wp);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let mut acc = Complex::zero(wp);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(j, k)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let wp = self.data[0].re.prec();
        let mut out = ComplexMatrix::zero(self.rows, self.cols, wp);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).sub(other.at(i, j)));
            }
        }
        out
    }

    /// Leading principal submatrix of size k.
    pub fn leading(&self, k: usize) -> ComplexMatrix {
        assert!(k <= self.rows && k <= self.cols);
        let wp = self.data[0].re.prec();
        let mut out = ComplexMatrix::zero(k, k, wp);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.at(i, j).clone());
            }
        }
        out
    }

    /// log |det| via LU with partial pivoting. Errors on an exactly-zero
    /// pivot, which for the matrices in this crate signals a bug upstream.
    pub fn log_abs_det(&self, _ctx: &Ctx) -> Result<Float> {
        let (d, _) = self.lu_det()?;
        Ok(d)
    }

    /// The full complex determinant (pivot product with swap parity),
    /// for sign-sensitive uses like principal minors.
    pub fn det(&self) -> Result<Complex> {
        let (_, det) = self.lu_det()?;
        Ok(det)
    }

    fn lu_det(&self) -> Result<(Float, Complex)> {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let wp = self.data[0].re.prec();
        let mut m = self.data.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut log_abs = Float::new(wp);
        let mut det = Complex::new(Float::with_val(wp, 1u32), Float::new(wp));
        let mut swaps = 0usize;
        for col in 0..n {
            let mut pivot_row = col;
            let mut best = m[idx(col, col)].abs2();
            for r in col + 1..n {
                let cand = m[idx(r, col)].abs2();
                if cand > best {
                    best = cand;
                    pivot_row = r;
                }
            }
            if best.is_zero() {
                return Err(Error::SingularMatrix);
            }
            if pivot_row != col {
                for c in 0..n {
                    m.swap(idx(col, c), idx(pivot_row, c));
                }
                swaps += 1;
            }
            let pivot = m[idx(col, col)].clone();
            log_abs += Float::with_val(wp, best.ln() / &Float::with_val(wp, 2u32));
            det = det.mul(&pivot);
            for r in col + 1..n {
                let factor = m[idx(r, col)].div(&pivot);
                for c in col + 1..n {
                    let delta = factor.mul(&m[idx(col, c)]);
                    m[idx(r, c)] = m[idx(r, c)].sub(&delta);
                }
            }
        }
        if swaps % 2 == 1 {
            det = det.neg();
        }
        Ok((log_abs, det))
    }
}
