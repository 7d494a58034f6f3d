//! Dense complex matrices and the Hermitian eigensolver.
//!
//! Storage is column-major so matrices hand straight to LAPACK. The
//! eigensolver is the `zheev_`/`cheev_` pair from the system OpenBLAS,
//! reached through a two-function FFI; everything else here is plain Rust.

use std::os::raw::c_char;

use num_complex::{Complex32, Complex64};

use crate::error::{Error, Result};
use crate::scalar::{c_zero, Real, C};

/// Column-major square complex matrix.
#[derive(Clone, Debug)]
pub struct DenseMatrix<T: Real> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> DenseMatrix<T> {
        DenseMatrix {
            dim,
            data: vec![c_zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C<T> {
        self.data[col * self.dim + row]
    }

    pub fn set(&mut self, row: usize, col: usize, v: C<T>) {
        self.data[col * self.dim + row] = v;
    }

    pub fn add(&mut self, row: usize, col: usize, v: C<T>) {
        self.data[col * self.dim + row] += v;
    }

    pub fn scaled_add(&mut self, other: &DenseMatrix<T>, factor: C<T>) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += *b * factor;
        }
    }

    /// Max elementwise |self - other|.
    pub fn max_abs_diff(&self, other: &DenseMatrix<T>) -> T {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn matmul(&self, other: &DenseMatrix<T>) -> DenseMatrix<T> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for col in 0..n {
            for k in 0..n {
                let b = other.data[col * n + k];
                if b == c_zero() {
                    continue;
                }
                for row in 0..n {
                    out.data[col * n + row] += self.data[k * n + row] * b;
                }
            }
        }
        out
    }

    /// Max |A B - B A| entry; zero iff the matrices commute.
    pub fn commutator_norm(&self, other: &DenseMatrix<T>) -> T {
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        ab.max_abs_diff(&ba)
    }

    /// Hermiticity defect: max |A - A^dagger| entry.
    pub fn hermiticity_defect(&self) -> T {
        let n = self.dim;
        let mut worst = T::zero();
        for col in 0..n {
            for row in 0..=col {
                let d = (self.get(row, col) - self.get(col, row).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Ascending eigenvalues of a Hermitian matrix.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<T>>
    where
        T: EighScalar,
    {
        T::heev_values(self.dim, self.data.clone())
    }
}

extern "C" {
    fn zheev_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut Complex64,
        lda: *const i32,
        w: *mut f64,
        work: *mut Complex64,
        lwork: *const i32,
        rwork: *mut f64,
        info: *mut i32,
    );
    fn cheev_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const i32,
        a: *mut Complex32,
        lda: *const i32,
        w: *mut f32,
        work: *mut Complex32,
        lwork: *const i32,
        rwork: *mut f32,
        info: *mut i32,
    );
}

/// Scalars with a LAPACK Hermitian eigensolver.
pub trait EighScalar: Real {
    /// Eigenvalues (ascending) of the column-major Hermitian matrix `data`.
    fn heev_values(dim: usize, data: Vec<C<Self>>) -> Result<Vec<Self>>;
}

macro_rules! impl_eigh {
    ($t:ty, $cplx:ty, $heev:ident) => {
        impl EighScalar for $t {
            fn heev_values(dim: usize, mut data: Vec<C<Self>>) -> Result<Vec<Self>> {
                assert_eq!(data.len(), dim * dim);
                if dim == 0 {
                    return Ok(Vec::new());
                }
                let n = i32::try_from(dim)
                    .map_err(|_| Error::InvalidInput("matrix too large for LAPACK".into()))?;
                let jobz = b'N' as c_char;
                let uplo = b'L' as c_char;
                let mut w = vec![0 as $t; dim];
                let mut rwork = vec![0 as $t; (3 * dim).max(1)];
                let mut info: i32 = 0;
                unsafe {
                    let query: i32 = -1;
                    let mut probe = [<$cplx>::new(0.0, 0.0)];
                    $heev(
                        &jobz,
                        &uplo,
                        &n,
                        data.as_mut_ptr() as *mut $cplx,
                        &n,
                        w.as_mut_ptr(),
                        probe.as_mut_ptr(),
                        &query,
                        rwork.as_mut_ptr(),
                        &mut info,
                    );
                    if info != 0 {
                        return Err(Error::EigFailed(info));
                    }
                    let lwork = (probe[0].re as i32).max(1);
                    let mut work = vec![<$cplx>::new(0.0, 0.0); lwork as usize];
                    $heev(
                        &jobz,
                        &uplo,
                        &n,
                        data.as_mut_ptr() as *mut $cplx,
                        &n,
                        w.as_mut_ptr(),
                        work.as_mut_ptr(),
                        &lwork,
                        rwork.as_mut_ptr(),
                        &mut info,
                    );
                }
                if info != 0 {
                    return Err(Error::EigFailed(info));
                }
                Ok(w)
            }
        }
    };
}

impl_eigh!(f64, Complex64, zheev_);
impl_eigh!(f32, Complex32, cheev_);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_pauli_y_like_matrix() {
        // [[1, -i], [i, -1]] has eigenvalues +-sqrt(2)
        let mut m = DenseMatrix::<f64>::zeros(2);
        m.set(0, 0, C::new(1.0, 0.0));
        m.set(1, 0, C::new(0.0, 1.0));
        m.set(0, 1, C::new(0.0, -1.0));
        m.set(1, 1, C::new(-1.0, 0.0));
        let w = m.hermitian_eigenvalues().unwrap();
        assert!((w[0] + 2f64.sqrt()).abs() < 1e-12);
        assert!((w[1] - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_f32_backend() {
        let mut m = DenseMatrix::<f32>::zeros(2);
        m.set(0, 0, C::new(2.0, 0.0));
        m.set(1, 1, C::new(-3.0, 0.0));
        let w = m.hermitian_eigenvalues().unwrap();
        assert!((w[0] + 3.0).abs() < 1e-5);
        assert!((w[1] - 2.0).abs() < 1e-5);
    }

    #[test]
    fn commutator_norm_detects_noncommuting() {
        // X and Z anticommute
        let mut x = DenseMatrix::<f64>::zeros(2);
        x.set(0, 1, C::new(1.0, 0.0));
        x.set(1, 0, C::new(1.0, 0.0));
        let mut z = DenseMatrix::<f64>::zeros(2);
        z.set(0, 0, C::new(1.0, 0.0));
        z.set(1, 1, C::new(-1.0, 0.0));
        assert!(x.commutator_norm(&z) > 1.0);
        assert!(x.commutator_norm(&x) < 1e-15);
    }
}
