//! Exact dense linear algebra over the rationals.
//!
//! Everything downstream reduces to the operations in this module: kernels,
//! linear solving, Kronecker products and subspace arithmetic, all over
//! arbitrary-precision rationals.  No floating point appears anywhere, so
//! every equality test in the crate is exact.
//!
//! Tensor index convention, fixed once for the whole crate: for spaces of
//! dimensions `a` and `b`, the basis vector `e_i ⊗ e_j` of the tensor
//! product sits at index `i * b + j`.  [`Mat::kron`] realizes linear maps on
//! tensor products in this convention, and all higher modules cite it
//! rather than choosing their own.

mod mat;
mod subspace;

pub use mat::{Mat, Rref};
pub use subspace::Subspace;

pub(crate) use mat::RrefAccum;

/// Incremental span accumulator over row vectors of the given length.
pub(crate) fn span_accum(cols: usize) -> RrefAccum {
    RrefAccum::new(cols)
}

use num_rational::BigRational;

/// Element of the base field ℚ.  `BigRational` keeps every value in
/// canonical reduced form (positive denominator, gcd 1) after each
/// operation.
pub type Scalar = BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn q(num: i64, den: i64) -> Scalar {
    Scalar::new(num.into(), den.into())
}

/// Rational from an integer.
pub fn qi(num: i64) -> Scalar {
    Scalar::from_integer(num.into())
}

/// Zero scalar.
pub fn zero() -> Scalar {
    num_traits::Zero::zero()
}

/// One scalar.
pub fn one() -> Scalar {
    num_traits::One::one()
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = zero();
    for (x, y) in a.iter().zip(b.iter()) {
        if !num_traits::Zero::is_zero(x) && !num_traits::Zero::is_zero(y) {
            acc += x * y;
        }
    }
    acc
}

/// Kronecker product of coordinate vectors in the crate-wide index
/// convention: `(v ⊗ w)[i * len(w) + j] = v[i] * w[j]`.
pub fn kron_vec(v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(v.len() * w.len());
    for x in v {
        for y in w {
            out.push(x * y);
        }
    }
    out
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}
