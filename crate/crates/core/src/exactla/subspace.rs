use num_traits::Zero;

use super::mat::RrefAccum;
use super::{Mat, Scalar};
use crate::Error;

/// Linear subspace of ℚ^ambient, stored by a basis matrix whose columns are
/// the basis vectors.
///
/// `from_spanning` reduces any spanning set to the canonical
/// reduced-row-echelon basis, so two equal subspaces built from different
/// spanning sets compare equal structurally.  Certificates rely on this
/// determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// ambient × dim, columns linearly independent.
    basis: Mat,
}

impl Subspace {
    pub fn zero_space(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zero(ambient, 0),
        }
    }

    pub fn full_space(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Canonical subspace spanned by the given vectors (need not be
    /// independent).
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut acc = RrefAccum::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "from_spanning: wrong vector length");
            acc.insert(v.clone());
        }
        let rref = acc.finish();
        Subspace {
            ambient,
            basis: if rref.rows.is_empty() {
                Mat::zero(ambient, 0)
            } else {
                Mat::from_rows(rref.rows).transpose()
            },
        }
    }

    /// Construct from vectors already known independent (e.g. kernel basis
    /// output); skips re-reduction.
    pub(crate) fn from_basis_unchecked(ambient: usize, basis: Vec<Vec<Scalar>>) -> Self {
        Subspace {
            ambient,
            basis: if basis.is_empty() {
                Mat::zero(ambient, 0)
            } else {
                Mat::from_rows(basis).transpose()
            },
        }
    }

    /// Canonical subspace spanned by the columns of `m`.
    pub fn from_columns(m: &Mat) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| m.col(j)).collect();
        Subspace::from_spanning(m.rows(), &cols)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Basis matrix, columns are basis vectors.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|j| self.basis.col(j)).collect()
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "coordinates_of: wrong length");
        if self.dim() == 0 {
            return if v.iter().all(|x| x.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        self.basis.solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        (0..other.dim()).all(|j| self.contains(&other.basis.col(j)))
    }

    /// Subspace equality as sets of vectors.
    pub fn same_space(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Intersection with another subspace of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero_space(self.ambient));
        }
        // v = A x = B y  ⇔  (x, y) ∈ ker [A | -B]
        let neg_b = other.basis.scale(&-super::one());
        let stacked = Mat::hstack(&[&self.basis, &neg_b]);
        let ker = stacked.kernel_basis();
        let da = self.dim();
        let mut vectors = Vec::with_capacity(ker.dim());
        for k in 0..ker.dim() {
            let xy = ker.basis.col(k);
            let v = self.basis.apply(&xy[..da]);
            vectors.push(v);
        }
        Ok(Subspace::from_spanning(self.ambient, &vectors))
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::from_spanning(self.ambient, &vs))
    }
}
