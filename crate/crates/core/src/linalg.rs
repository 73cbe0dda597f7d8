//! Dense complex square matrices and the numerical kernels built on them.
//!
//! Matrices here are tiny (at most 8×8 for the SU(3) adjoint), so everything
//! is stored row-major in a flat `Vec` and computed with straightforward
//! loops. All values are immutable once built; every kernel is a pure
//! function.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex scalar in double precision.
pub type CScalar = Complex64;

/// `i`, the imaginary unit.
pub const I: CScalar = Complex64::new(0.0, 1.0);

/// Shorthand for a real-valued [`CScalar`].
pub fn re(x: f64) -> CScalar {
    Complex64::new(x, 0.0)
}

/// Shorthand for a [`CScalar`] from its real and imaginary parts.
pub fn c(re: f64, im: f64) -> CScalar {
    Complex64::new(re, im)
}

/// Residual thresholds used by the checks.
///
/// `abs_eps` applies to identities that are exact in complex arithmetic,
/// `exp_eps` to anything that passes through a matrix exponential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub exp_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS: f64 = 1e-12;
    pub const DEFAULT_EXP: f64 = 1e-10;

    pub fn new(abs_eps: f64, exp_eps: f64) -> Result<Self> {
        if !(abs_eps > 0.0 && abs_eps <= exp_eps && exp_eps < 1.0) {
            return Err(Error::Param(format!(
                "tolerance requires 0 < abs_eps <= exp_eps < 1, got abs_eps={abs_eps:e}, exp_eps={exp_eps:e}"
            )));
        }
        Ok(Self { abs_eps, exp_eps })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: Self::DEFAULT_ABS,
            exp_eps: Self::DEFAULT_EXP,
        }
    }
}

/// Dense square complex matrix with finite entries.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixLiteral", into = "MatrixLiteral")]
pub struct CMatrix {
    dim: usize,
    data: Vec<CScalar>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![CScalar::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.data[k * dim + k] = re(1.0);
        }
        m
    }

    /// Builds a matrix from row vectors. Rows must form a square array.
    pub fn from_rows(rows: Vec<Vec<CScalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Literal("matrix must have at least one row".into()));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Dim {
                    expected: dim,
                    found: row.len(),
                });
            }
            for (col, z) in row.into_iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(Error::NonFinite { row: r, col });
                }
                data.push(z);
            }
        }
        Ok(Self { dim, data })
    }

    /// Builds a real matrix from a row-major slice of `dim * dim` values.
    pub fn from_real(dim: usize, values: &[f64]) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::Dim {
                expected: dim * dim,
                found: values.len(),
            });
        }
        let rows = values
            .chunks(dim)
            .map(|row| row.iter().map(|&x| re(x)).collect())
            .collect();
        Self::from_rows(rows)
    }

    /// Builds a matrix entry by entry. Panics if `f` yields a non-finite value.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> CScalar) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for col in 0..dim {
                let z = f(r, col);
                assert!(z.re.is_finite() && z.im.is_finite(), "non-finite entry");
                m.data[r * dim + col] = z;
            }
        }
        m
    }

    pub fn diag(values: &[CScalar]) -> Self {
        let mut m = Self::zeros(values.len());
        for (k, &z) in values.iter().enumerate() {
            m.data[k * values.len() + k] = z;
        }
        m
    }

    /// Assembles `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn from_blocks(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> Result<Self> {
        let n = a.dim;
        for blk in [b, c, d] {
            if blk.dim != n {
                return Err(Error::Dim {
                    expected: n,
                    found: blk.dim,
                });
            }
        }
        Ok(Self::from_fn(2 * n, |r, col| {
            let src = match (r < n, col < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            src[(r % n, col % n)]
        }))
    }

    /// Square sub-block of size `size` starting at (`row0`, `col0`).
    pub fn block(&self, row0: usize, col0: usize, size: usize) -> CMatrix {
        assert!(row0 + size <= self.dim && col0 + size <= self.dim);
        CMatrix::from_fn(size, |r, col| self[(row0 + r, col0 + col)])
    }

    /// Copy of `self` embedded in the upper-left corner of a `dim`×`dim` zero matrix.
    pub fn embed(&self, dim: usize) -> CMatrix {
        assert!(dim >= self.dim);
        CMatrix::from_fn(dim, |r, col| {
            if r < self.dim && col < self.dim {
                self[(r, col)]
            } else {
                re(0.0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[CScalar] {
        &self.data
    }

    /// Copy with `delta` added to one entry. Used for negative controls.
    pub fn perturbed(&self, row: usize, col: usize, delta: CScalar) -> CMatrix {
        let mut m = self.clone();
        m.data[row * self.dim + col] += delta;
        m
    }

    pub fn scale(&self, z: CScalar) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn trace(&self) -> CScalar {
        (0..self.dim).map(|k| self[(k, k)]).sum()
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |r, col| self[(col, r)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.dim, |r, col| self[(col, r)].conj())
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.dim)
            .map(|col| (0..self.dim).map(|r| self[(r, col)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, eps: f64) -> bool {
        frobenius_distance(self, &self.adjoint()).is_ok_and(|d| d <= eps)
    }

    pub fn try_mul(&self, other: &CMatrix) -> Result<CMatrix> {
        same_dim(self, other)?;
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == re(0.0) {
                    continue;
                }
                for col in 0..n {
                    out.data[r * n + col] += a * other.data[k * n + col];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[CScalar]) -> Result<Vec<CScalar>> {
        if v.len() != self.dim {
            return Err(Error::Dim {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| (0..self.dim).map(|k| self[(r, k)] * v[k]).sum())
            .collect())
    }

    fn zip_with(
        &self,
        other: &CMatrix,
        f: impl Fn(CScalar, CScalar) -> CScalar,
    ) -> Result<CMatrix> {
        same_dim(self, other)?;
        Ok(CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

fn same_dim(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::Dim {
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(())
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = CScalar;

    fn index(&self, (r, col): (usize, usize)) -> &CScalar {
        assert!(r < self.dim && col < self.dim, "matrix index out of range");
        &self.data[r * self.dim + col]
    }
}

// Operator forms panic on dimension mismatch; the fallible kernels below
// report it as `Error::Dim`.
impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        self.zip_with(rhs, |a, b| a + b)
            .expect("dimension mismatch in add")
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        self.zip_with(rhs, |a, b| a - b)
            .expect("dimension mismatch in sub")
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.try_mul(rhs).expect("dimension mismatch in mul")
    }
}

impl Mul<CScalar> for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: CScalar) -> CMatrix {
        self.scale(rhs)
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.scale(re(-1.0))
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{})", self.dim, self.dim)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            write!(f, "[")?;
            for col in 0..self.dim {
                let z = self[(r, col)];
                if col > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_scalar(z))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Compact rendering of a scalar: `0`, `1.5`, `-i`, `0.5+0.5i`.
pub fn format_scalar(z: CScalar) -> String {
    let clean = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
    let (a, b) = (clean(z.re), clean(z.im));
    let fmt_num = |x: f64| {
        let s = format!("{x:.6}");
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    };
    let imag = |x: f64| match fmt_num(x).as_str() {
        "1" => "i".to_string(),
        "-1" => "-i".to_string(),
        s => format!("{s}i"),
    };
    match (a == 0.0, b == 0.0) {
        (true, true) => "0".into(),
        (false, true) => fmt_num(a),
        (true, false) => imag(b),
        (false, false) => {
            let im = imag(b);
            if im.starts_with('-') {
                format!("{}{}", fmt_num(a), im)
            } else {
                format!("{}+{}", fmt_num(a), im)
            }
        }
    }
}

/// JSON exchange form: `{"dim": n, "entries": [[[re, im], ...], ...]}`, row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixLiteral {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl From<CMatrix> for MatrixLiteral {
    fn from(m: CMatrix) -> Self {
        let entries = (0..m.dim)
            .map(|r| {
                (0..m.dim)
                    .map(|col| [m[(r, col)].re, m[(r, col)].im])
                    .collect()
            })
            .collect();
        MatrixLiteral {
            dim: m.dim,
            entries,
        }
    }
}

impl TryFrom<MatrixLiteral> for CMatrix {
    type Error = Error;

    fn try_from(lit: MatrixLiteral) -> Result<Self> {
        if lit.entries.len() != lit.dim {
            return Err(Error::Literal(format!(
                "dim is {} but {} rows given",
                lit.dim,
                lit.entries.len()
            )));
        }
        let rows = lit
            .entries
            .into_iter()
            .map(|row| row.into_iter().map(|[a, b]| c(a, b)).collect())
            .collect();
        CMatrix::from_rows(rows)
    }
}

/// `AB − BA`.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    Ok(&a.try_mul(b)? - &b.try_mul(a)?)
}

/// `AB + BA`.
pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    Ok(&a.try_mul(b)? + &b.try_mul(a)?)
}

/// `‖A − B‖_F`.
pub fn frobenius_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    Ok(a.zip_with(b, |x, y| x - y)?.norm_fro())
}

/// Scaling-and-squaring point: the scaled matrix has 1-norm at most this.
const EXP_SCALE_TARGET: f64 = 0.5;
const EXP_MAX_TERMS: usize = 64;

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
///
/// The series is summed until the next term no longer changes the partial
/// sum at double precision. Nilpotent inputs terminate after the last
/// nonvanishing power, so `exp` of a strictly triangular matrix is exact.
pub fn mat_exp(a: &CMatrix) -> CMatrix {
    let norm = a.norm_one();
    let squarings = if norm > EXP_SCALE_TARGET {
        (norm / EXP_SCALE_TARGET).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a.scale(re(2f64.powi(-squarings)));

    let mut sum = CMatrix::identity(a.dim);
    let mut term = CMatrix::identity(a.dim);
    for k in 1..=EXP_MAX_TERMS {
        term = (&term * &scaled).scale(re(1.0 / k as f64));
        let size = term.max_abs();
        if size == 0.0 {
            break;
        }
        sum = &sum + &term;
        if size <= f64::EPSILON * sum.max_abs() * 0.5 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Determinant by LU factorisation with partial pivoting.
pub fn det(a: &CMatrix) -> CScalar {
    let n = a.dim;
    let mut lu = a.data.clone();
    let mut result = re(1.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&x, &y| lu[x * n + k].norm().total_cmp(&lu[y * n + k].norm()))
            .unwrap();
        if lu[pivot * n + k] == re(0.0) {
            return re(0.0);
        }
        if pivot != k {
            for col in 0..n {
                lu.swap(k * n + col, pivot * n + col);
            }
            result = -result;
        }
        let p = lu[k * n + k];
        result *= p;
        for r in k + 1..n {
            let factor = lu[r * n + k] / p;
            if factor == re(0.0) {
                continue;
            }
            for col in k..n {
                let sub = factor * lu[k * n + col];
                lu[r * n + col] -= sub;
            }
        }
    }
    result
}

/// Result of [`decompose_in_basis`].
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub coeffs: Vec<CScalar>,
    /// `‖M − Σ c_ν B_ν‖_F` at the least-squares optimum.
    pub residual: f64,
}

/// Relative pivot threshold below which a basis counts as linearly dependent.
const RANK_RTOL: f64 = 1e-10;

/// Least-squares complex coefficients of `m` in `basis`.
///
/// Solved through the normal equations on the real vector space of
/// dimension `2·d²` (real and imaginary parts of every entry). The Gram
/// matrix is Cholesky-factored; a pivot that collapses relative to the
/// largest diagonal entry reports the basis as rank deficient.
pub fn decompose_in_basis(m: &CMatrix, basis: &[CMatrix]) -> Result<Decomposition> {
    if basis.is_empty() {
        return Err(Error::Basis("empty basis".into()));
    }
    for b in basis {
        same_dim(m, b)?;
    }
    let flatten = |z: &CMatrix| -> Vec<f64> {
        z.data
            .iter()
            .map(|x| x.re)
            .chain(z.data.iter().map(|x| x.im))
            .collect()
    };
    // Columns: B_ν and i·B_ν for each basis element.
    let columns: Vec<Vec<f64>> = basis
        .iter()
        .flat_map(|b| [flatten(b), flatten(&b.scale(I))])
        .collect();
    let target = flatten(m);
    let dot = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();

    let k = columns.len();
    let mut gram = vec![0.0; k * k];
    for r in 0..k {
        for col in 0..=r {
            let g = dot(&columns[r], &columns[col]);
            gram[r * k + col] = g;
            gram[col * k + r] = g;
        }
    }
    let rhs: Vec<f64> = columns.iter().map(|col| dot(col, &target)).collect();
    let x = cholesky_solve(&mut gram, k, &rhs).ok_or_else(|| {
        Error::Basis(format!(
            "{} basis matrices are linearly dependent",
            basis.len()
        ))
    })?;

    let coeffs: Vec<CScalar> = x.chunks(2).map(|p| c(p[0], p[1])).collect();
    let fitted = basis
        .iter()
        .zip(&coeffs)
        .fold(CMatrix::zeros(m.dim), |acc, (b, &z)| &acc + &b.scale(z));
    let residual = frobenius_distance(m, &fitted)?;
    Ok(Decomposition { coeffs, residual })
}

/// Solves `G x = b` for symmetric positive definite `G`; `None` when a pivot
/// collapses below [`RANK_RTOL`] times the largest diagonal entry.
fn cholesky_solve(g: &mut [f64], k: usize, b: &[f64]) -> Option<Vec<f64>> {
    let scale = (0..k).map(|d| g[d * k + d]).fold(0.0, f64::max);
    if scale <= 0.0 {
        return None;
    }
    for j in 0..k {
        let mut diag = g[j * k + j];
        for p in 0..j {
            diag -= g[j * k + p] * g[j * k + p];
        }
        if diag <= RANK_RTOL * scale {
            return None;
        }
        let l_jj = diag.sqrt();
        g[j * k + j] = l_jj;
        for r in j + 1..k {
            let mut v = g[r * k + j];
            for p in 0..j {
                v -= g[r * k + p] * g[j * k + p];
            }
            g[r * k + j] = v / l_jj;
        }
    }
    let mut y = vec![0.0; k];
    for r in 0..k {
        let s: f64 = (0..r).map(|p| g[r * k + p] * y[p]).sum();
        y[r] = (b[r] - s) / g[r * k + r];
    }
    let mut x = vec![0.0; k];
    for r in (0..k).rev() {
        let s: f64 = (r + 1..k).map(|p| g[p * k + r] * x[p]).sum();
        x[r] = (y[r] - s) / g[r * k + r];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(k: usize) -> CMatrix {
        match k {
            1 => CMatrix::from_real(2, &[0., 1., 1., 0.]).unwrap(),
            2 => {
                CMatrix::from_rows(vec![vec![re(0.), c(0., -1.)], vec![c(0., 1.), re(0.)]]).unwrap()
            }
            3 => CMatrix::from_real(2, &[1., 0., 0., -1.]).unwrap(),
            _ => CMatrix::identity(2),
        }
    }

    #[test]
    fn commutator_of_pauli_pair() {
        let got = commutator(&sigma(1), &sigma(2)).unwrap();
        let want = sigma(3).scale(c(0., 2.));
        assert!(frobenius_distance(&got, &want).unwrap() < 1e-15);
    }

    #[test]
    fn commutator_dimension_mismatch() {
        let err = commutator(&CMatrix::identity(2), &CMatrix::identity(3)).unwrap_err();
        assert!(matches!(
            err,
            Error::Dim {
                expected: 2,
                found: 3
            }
        ));
        assert!(anticommutator(&CMatrix::identity(3), &CMatrix::identity(2)).is_err());
        assert!(frobenius_distance(&CMatrix::identity(3), &CMatrix::identity(2)).is_err());
    }

    #[test]
    fn anticommutator_with_zero() {
        let z = CMatrix::zeros(2);
        assert_eq!(anticommutator(&sigma(2), &z).unwrap(), z);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_distance(&sigma(1), &sigma(1)).unwrap(), 0.0);
        let d = frobenius_distance(&CMatrix::identity(2), &CMatrix::zeros(2)).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        // |1-i|^2 + |1+i|^2 = 4
        let d = frobenius_distance(&sigma(1), &sigma(2)).unwrap();
        assert!((d - 2.0).abs() < 1e-15);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det(&CMatrix::identity(2)), re(1.0));
        let m = &sigma(1) + &sigma(4).scale(re(2.0));
        assert!((det(&m) - re(3.0)).norm() < 1e-15);
        assert!((det(&sigma(3)) - re(-1.0)).norm() < 1e-15);
        assert_eq!(det(&CMatrix::zeros(3)), re(0.0));
    }

    #[test]
    fn determinant_needs_pivoting() {
        // Leading zero forces a row swap.
        let m = CMatrix::from_real(3, &[0., 2., 0., 1., 0., 0., 0., 0., 3.]).unwrap();
        assert!((det(&m) - re(-6.0)).norm() < 1e-14);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(mat_exp(&CMatrix::zeros(3)), CMatrix::identity(3));
    }

    #[test]
    fn exp_of_full_turn_diagonal() {
        // i·2π·σ³/2 = diag(iπ, −iπ)
        let a = sigma(3).scale(c(0.0, std::f64::consts::PI));
        let e = mat_exp(&a);
        assert!(frobenius_distance(&e, &CMatrix::identity(2).scale(re(-1.0))).unwrap() < 1e-13);
    }

    #[test]
    fn exp_of_nilpotent_is_exact() {
        let n = CMatrix::from_real(3, &[0., 5., 7., 0., 0., 11., 0., 0., 0.]).unwrap();
        let e = mat_exp(&n);
        let want = CMatrix::from_real(3, &[1., 5., 7. + 27.5, 0., 1., 11., 0., 0., 1.]).unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn decompose_basis_member() {
        let basis: Vec<_> = (1..=4).map(sigma).collect();
        let d = decompose_in_basis(&sigma(3), &basis).unwrap();
        let want = [re(0.), re(0.), re(1.), re(0.)];
        for (got, w) in d.coeffs.iter().zip(want) {
            assert!((got - w).norm() < 1e-15);
        }
        assert!(d.residual < 1e-15);
    }

    #[test]
    fn decompose_round_trip() {
        let basis: Vec<_> = (1..=4).map(sigma).collect();
        let m = &sigma(1).scale(re(2.)) + &sigma(4).scale(c(0., 3.));
        let d = decompose_in_basis(&m, &basis).unwrap();
        let want = [re(2.), re(0.), re(0.), c(0., 3.)];
        for (got, w) in d.coeffs.iter().zip(want) {
            assert!((got - w).norm() < 1e-14);
        }
        assert!(d.residual < 1e-14);
    }

    #[test]
    fn decompose_outside_span() {
        let d = decompose_in_basis(&sigma(2), &[CMatrix::identity(2)]).unwrap();
        assert!(d.residual > 1.0);
    }

    #[test]
    fn decompose_rejects_dependent_basis() {
        let basis = vec![sigma(1), sigma(1).scale(c(0., 2.))];
        assert!(matches!(
            decompose_in_basis(&sigma(1), &basis),
            Err(Error::Basis(_))
        ));
        assert!(matches!(
            decompose_in_basis(&sigma(1), &[CMatrix::zeros(2)]),
            Err(Error::Basis(_))
        ));
    }

    #[test]
    fn literal_round_trip_and_validation() {
        let m = sigma(2);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"entries":[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]}"#
        );
        let back: CMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);

        assert!(serde_json::from_str::<CMatrix>(r#"{"dim":2,"entries":[[[1,0],[0,0]]]}"#).is_err());
        assert!(serde_json::from_str::<CMatrix>(r#"{"dim":1,"entries":[[[1,0],[0,0]]]}"#).is_err());
    }

    #[test]
    fn rejects_non_finite() {
        let err = CMatrix::from_rows(vec![vec![re(f64::NAN)]]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { row: 0, col: 0 }));
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(1e-12, 1e-10).is_ok());
        assert!(Tolerance::new(1e-9, 1e-10).is_err());
        assert!(Tolerance::new(0.0, 1e-10).is_err());
        assert!(Tolerance::new(1e-12, 1.0).is_err());
    }

    #[test]
    fn scalar_formatting() {
        assert_eq!(format_scalar(c(0., -1.)), "-i");
        assert_eq!(format_scalar(c(0.5, 0.)), "0.5");
        assert_eq!(format_scalar(c(0.5, -0.5)), "0.5-0.5i");
        assert_eq!(format_scalar(c(-0.0, 0.0)), "0");
    }
}
