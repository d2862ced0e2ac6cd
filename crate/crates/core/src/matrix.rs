//! Entrywise (Schur) and Kronecker products of dense matrices.

use std::ops::Mul;

use nalgebra::{DMatrix, Scalar};

use crate::error::{Error, Result};

pub fn schur_product<T>(x: &DMatrix<T>, y: &DMatrix<T>) -> Result<DMatrix<T>>
where
    T: Scalar + Copy + Mul<Output = T>,
{
    if x.shape() != y.shape() {
        return Err(Error::ShapeMismatch(x.shape(), y.shape()));
    }
    Ok(x.zip_map(y, |a, b| a * b))
}

/// Block matrix whose `(i, j)` block is `x[(i, j)] * y`.
pub fn kronecker_product<T>(x: &DMatrix<T>, y: &DMatrix<T>) -> DMatrix<T>
where
    T: Scalar + Copy + Mul<Output = T>,
{
    let (xr, xc) = x.shape();
    let (yr, yc) = y.shape();
    DMatrix::from_fn(xr * yr, xc * yc, |r, c| x[(r / yr, c / yc)] * y[(r % yr, c % yc)])
}
