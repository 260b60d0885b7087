//! Finite-dimensional unital associative algebras over ℚ, given by
//! structure constants, plus algebra morphisms and the standard instance
//! constructors used throughout the test corpus.
//!
//! Multiplication is stored as one `dim × dim²` matrix in the crate-wide
//! Kronecker index convention: column `i·dim + j` holds the coordinates of
//! `b_i · b_j`.  This shape composes directly with [`Mat::kron`], so the
//! associativity and morphism laws become single matrix identities.


use crate::exactla::{one, qi, unit_vec, zero, Mat, Scalar};
use crate::{CheckReport, Error};

/// Finite-dimensional unital associative algebra via structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDAlgebra {
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// `dim × dim²`; column `i·dim + j` is the coordinate vector of `b_i b_j`.
    pub mul: Mat,
    /// Coordinates of the unit element.
    pub unit: Vec<Scalar>,
}

impl FDAlgebra {
    /// Build and validate.  Fails with the full axiom report when the table
    /// is not an associative unital algebra.
    pub fn new(
        basis_names: Vec<String>,
        mul: Mat,
        unit: Vec<Scalar>,
    ) -> Result<FDAlgebra, Error> {
        let alg = FDAlgebra {
            dim: basis_names.len(),
            basis_names,
            mul,
            unit,
        };
        alg.validate().into_result()?;
        Ok(alg)
    }

    /// Axiom check: shapes, associativity on all basis triples, two-sided
    /// unit law.  Lists every violated instance.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new("algebra axioms");
        let n = self.dim;
        if self.basis_names.len() != n {
            report.fail("basis name count differs from dim");
        }
        if self.mul.rows() != n || self.mul.cols() != n * n {
            report.fail(format!(
                "multiplication table is {}x{}, expected {}x{}",
                self.mul.rows(),
                self.mul.cols(),
                n,
                n * n
            ));
            return report;
        }
        if self.unit.len() != n {
            report.fail("unit vector has wrong length");
            return report;
        }
        if n == 0 {
            report.fail("zero-dimensional algebra is not unital");
            return report;
        }
        // associativity: mul ∘ (mul ⊗ I) = mul ∘ (I ⊗ mul) on H⊗H⊗H
        let id = Mat::identity(n);
        let lhs = self.mul.mul(&self.mul.kron(&id));
        let rhs = self.mul.mul(&id.kron(&self.mul));
        if lhs != rhs {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let col = (i * n + j) * n + k;
                        if lhs.col(col) != rhs.col(col) {
                            report.fail(format!(
                                "associativity fails on ({}, {}, {})",
                                self.name(i),
                                self.name(j),
                                self.name(k)
                            ));
                        }
                    }
                }
            }
        }
        // unit law on every basis vector
        let lu = self.l_mult(&self.unit);
        let ru = self.r_mult(&self.unit);
        for i in 0..n {
            let ei = unit_vec(n, i);
            if lu.apply(&ei) != ei {
                report.fail(format!("unit·{} ≠ {}", self.name(i), self.name(i)));
            }
            if ru.apply(&ei) != ei {
                report.fail(format!("{}·unit ≠ {}", self.name(i), self.name(i)));
            }
        }
        report
    }

    fn name(&self, i: usize) -> &str {
        self.basis_names
            .get(i)
            .map(|s| s.as_str())
            .unwrap_or("<?>")
    }

    /// Structural equality, ignoring basis names.  Operations that require
    /// "the same algebra" on both sides compare with this.
    pub fn same_structure(&self, other: &FDAlgebra) -> bool {
        self.dim == other.dim && self.mul == other.mul && self.unit == other.unit
    }

    /// Product of two elements given by coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mul.apply(&crate::exactla::kron_vec(a, b))
    }

    /// Matrix of left multiplication by the element `a`.
    pub fn l_mult(&self, a: &[Scalar]) -> Mat {
        self.mul.mul(&Mat::col_vec(a).kron(&Mat::identity(self.dim)))
    }

    /// Matrix of right multiplication by the element `a`.
    pub fn r_mult(&self, a: &[Scalar]) -> Mat {
        self.mul.mul(&Mat::identity(self.dim).kron(&Mat::col_vec(a)))
    }

    pub fn l_mult_basis(&self, i: usize) -> Mat {
        self.l_mult(&unit_vec(self.dim, i))
    }

    pub fn r_mult_basis(&self, i: usize) -> Mat {
        self.r_mult(&unit_vec(self.dim, i))
    }

    /// The base field ℚ as a one-dimensional algebra.
    pub fn rationals() -> FDAlgebra {
        FDAlgebra::new(
            vec!["1".into()],
            Mat::from_rows(vec![vec![one()]]),
            vec![one()],
        )
        .expect("Q is an algebra")
    }

    /// Full matrix algebra M_n(ℚ), basis `e_{ij}` in row-major order
    /// (`e11, e12, …, e1n, e21, …`), products `e_ij e_kl = δ_jk e_il`.
    pub fn matrix_algebra(n: usize) -> Result<FDAlgebra, Error> {
        if n < 1 {
            return Err(Error::invalid("matrix algebra needs n ≥ 1"));
        }
        let dim = n * n;
        let mut mul = Mat::zero(dim, dim * dim);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if j == k {
                            let a = i * n + j;
                            let b = k * n + l;
                            mul.set(i * n + l, a * dim + b, one());
                        }
                    }
                }
            }
        }
        let mut unit = vec![zero(); dim];
        for i in 0..n {
            unit[i * n + i] = one();
        }
        let names = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
            .collect();
        FDAlgebra::new(names, mul, unit)
    }

    /// Group algebra ℚ[C_n] of the cyclic group of order n, basis
    /// `g^0, …, g^(n-1)` in that order.
    pub fn cyclic_group_algebra(n: usize) -> Result<FDAlgebra, Error> {
        if n < 1 {
            return Err(Error::invalid("cyclic group algebra needs n ≥ 1"));
        }
        let mut mul = Mat::zero(n, n * n);
        for i in 0..n {
            for j in 0..n {
                mul.set((i + j) % n, i * n + j, one());
            }
        }
        let names = (0..n)
            .map(|i| {
                if i == 0 {
                    "e".to_string()
                } else if i == 1 {
                    "g".to_string()
                } else {
                    format!("g{}", i)
                }
            })
            .collect();
        FDAlgebra::new(names, mul, unit_vec(n, 0))
    }

    /// Upper triangular matrices T_n(ℚ), basis `e_ij` with `i ≤ j` in
    /// lexicographic order (`e11, e12, …, e1n, e22, …`).
    pub fn upper_triangular(n: usize) -> Result<FDAlgebra, Error> {
        if n < 1 {
            return Err(Error::invalid("upper triangular algebra needs n ≥ 1"));
        }
        let mut index = Vec::new();
        for i in 0..n {
            for j in i..n {
                index.push((i, j));
            }
        }
        let dim = index.len();
        let pos = |i: usize, j: usize| index.iter().position(|&p| p == (i, j));
        let mut mul = Mat::zero(dim, dim * dim);
        for (a, &(i, j)) in index.iter().enumerate() {
            for (b, &(k, l)) in index.iter().enumerate() {
                if j == k {
                    let t = pos(i, l).expect("i ≤ j = k ≤ l");
                    mul.set(t, a * dim + b, one());
                }
            }
        }
        let mut unit = vec![zero(); dim];
        for i in 0..n {
            unit[pos(i, i).unwrap()] = one();
        }
        let names = index
            .iter()
            .map(|&(i, j)| format!("e{}{}", i + 1, j + 1))
            .collect();
        FDAlgebra::new(names, mul, unit)
    }

    /// Direct product A × B with basis of A first.
    pub fn product(a: &FDAlgebra, b: &FDAlgebra) -> Result<FDAlgebra, Error> {
        let dim = a.dim + b.dim;
        let mut mul = Mat::zero(dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let col = i * dim + j;
                if i < a.dim && j < a.dim {
                    let prod = a.mul.col(i * a.dim + j);
                    for (k, v) in prod.into_iter().enumerate() {
                        mul.set(k, col, v);
                    }
                } else if i >= a.dim && j >= a.dim {
                    let prod = b.mul.col((i - a.dim) * b.dim + (j - a.dim));
                    for (k, v) in prod.into_iter().enumerate() {
                        mul.set(a.dim + k, col, v);
                    }
                }
            }
        }
        let mut unit = a.unit.clone();
        unit.extend(b.unit.clone());
        let mut names: Vec<String> = a.basis_names.iter().map(|s| format!("l_{}", s)).collect();
        names.extend(b.basis_names.iter().map(|s| format!("r_{}", s)));
        FDAlgebra::new(names, mul, unit)
    }

    /// Opposite algebra: same space, `a ·_op b = b · a`.
    pub fn opposite(&self) -> FDAlgebra {
        let n = self.dim;
        let mut mul = Mat::zero(n, n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul.col(j * n + i);
                for (k, v) in prod.into_iter().enumerate() {
                    mul.set(k, i * n + j, v);
                }
            }
        }
        FDAlgebra::new(self.basis_names.clone(), mul, self.unit.clone())
            .expect("opposite of an algebra is an algebra")
    }

    /// Canonical text form used for instance hashing: dimension and all
    /// structure constants in a fixed order.
    pub fn canonical_text(&self, out: &mut String) {
        use std::fmt::Write;
        write!(out, "algebra dim={}", self.dim).unwrap();
        write!(out, " unit=").unwrap();
        for v in &self.unit {
            write!(out, "{},", v).unwrap();
        }
        write!(out, " mul=").unwrap();
        for e in self.mul.entries() {
            write!(out, "{},", e).unwrap();
        }
        out.push('\n');
    }
}

/// Named standard constructor dispatch, mirroring the definition-file
/// `standard = …` entries.
pub fn build_standard(spec: &StandardAlgebra) -> Result<FDAlgebra, Error> {
    match spec {
        StandardAlgebra::Matrix(n) => FDAlgebra::matrix_algebra(*n),
        StandardAlgebra::CyclicGroup(n) => FDAlgebra::cyclic_group_algebra(*n),
        StandardAlgebra::UpperTriangular(n) => FDAlgebra::upper_triangular(*n),
        StandardAlgebra::Product(a, b) => FDAlgebra::product(a, b),
        StandardAlgebra::Opposite(a) => Ok(a.opposite()),
    }
}

#[derive(Debug, Clone)]
pub enum StandardAlgebra {
    Matrix(usize),
    CyclicGroup(usize),
    UpperTriangular(usize),
    Product(Box<FDAlgebra>, Box<FDAlgebra>),
    Opposite(Box<FDAlgebra>),
}

/// Algebra morphism, stored as the `dim_target × dim_source` matrix of a
/// linear map that preserves unit and multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    pub source: FDAlgebra,
    pub target: FDAlgebra,
    pub matrix: Mat,
}

impl AlgebraMap {
    pub fn new(source: FDAlgebra, target: FDAlgebra, matrix: Mat) -> Result<AlgebraMap, Error> {
        let map = AlgebraMap {
            source,
            target,
            matrix,
        };
        map.validate().into_result()?;
        Ok(map)
    }

    pub fn identity(alg: &FDAlgebra) -> AlgebraMap {
        AlgebraMap {
            source: alg.clone(),
            target: alg.clone(),
            matrix: Mat::identity(alg.dim),
        }
    }

    /// Unit embedding ℚ → A.
    pub fn unit_embedding(target: &FDAlgebra) -> AlgebraMap {
        AlgebraMap {
            source: FDAlgebra::rationals(),
            target: target.clone(),
            matrix: Mat::col_vec(&target.unit),
        }
    }

    /// Multiplicativity and unitality on all basis pairs.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new("algebra map axioms");
        let (ns, nt) = (self.source.dim, self.target.dim);
        if self.matrix.rows() != nt || self.matrix.cols() != ns {
            report.fail(format!(
                "matrix is {}x{}, expected {}x{}",
                self.matrix.rows(),
                self.matrix.cols(),
                nt,
                ns
            ));
            return report;
        }
        if self.matrix.apply(&self.source.unit) != self.target.unit {
            report.fail("unit is not preserved");
        }
        // f ∘ mul_S = mul_T ∘ (f ⊗ f)
        let lhs = self.matrix.mul(&self.source.mul);
        let rhs = self.target.mul.mul(&self.matrix.kron(&self.matrix));
        if lhs != rhs {
            for i in 0..ns {
                for j in 0..ns {
                    if lhs.col(i * ns + j) != rhs.col(i * ns + j) {
                        report.fail(format!(
                            "multiplicativity fails on ({}, {})",
                            self.source.name(i),
                            self.source.name(j)
                        ));
                    }
                }
            }
        }
        report
    }

    /// True when source and target coincide structurally and the matrix is
    /// invertible.
    pub fn is_automorphism(&self) -> bool {
        self.source.same_structure(&self.target) && self.matrix.inverse().is_some()
    }

    pub fn inverse(&self) -> Result<AlgebraMap, Error> {
        let inv = self
            .matrix
            .inverse()
            .ok_or_else(|| Error::NotInvertible("algebra map".into()))?;
        Ok(AlgebraMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: inv,
        })
    }

    pub fn compose(&self, inner: &AlgebraMap) -> Result<AlgebraMap, Error> {
        if !inner.target.same_structure(&self.source) {
            return Err(Error::AlgebraMismatch(
                "compose: inner target differs from outer source".into(),
            ));
        }
        Ok(AlgebraMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        })
    }
}

/// Negation character of a cyclic group algebra of even order: `g ↦ -g`
/// extended multiplicatively; for ℚ[C₂] this is the sign automorphism.
pub fn cyclic_sign_automorphism(alg: &FDAlgebra) -> Result<AlgebraMap, Error> {
    let n = alg.dim;
    if n % 2 != 0 {
        return Err(Error::invalid(
            "sign automorphism needs even cyclic group order",
        ));
    }
    let mut m = Mat::zero(n, n);
    for i in 0..n {
        m.set(i, i, if i % 2 == 0 { one() } else { qi(-1) });
    }
    AlgebraMap::new(alg.clone(), alg.clone(), m)
}

/// Inner automorphism `a ↦ u⁻¹ a u` of `alg` for an invertible element `u`.
pub fn inner_automorphism(alg: &FDAlgebra, u: &[Scalar]) -> Result<AlgebraMap, Error> {
    let lu = alg.l_mult(u);
    let lu_inv = lu
        .inverse()
        .ok_or_else(|| Error::NotInvertible("element is not invertible".into()))?;
    let u_inv = lu_inv.apply(&alg.unit);
    let m = alg.l_mult(&u_inv).mul(&alg.r_mult(u));
    AlgebraMap::new(alg.clone(), alg.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use num_traits::Zero;

    #[test]
    fn rationals_pass() {
        assert!(FDAlgebra::rationals().validate().is_pass());
    }

    #[test]
    fn unit_violation_reported() {
        // 1-dim table with e·e = 0 but unit = e
        let alg = FDAlgebra {
            dim: 1,
            basis_names: vec!["e".into()],
            mul: Mat::zero(1, 1),
            unit: vec![one()],
        };
        let rep = alg.validate();
        assert!(!rep.is_pass());
        assert!(rep.failures.iter().any(|f| f.contains("unit")));
    }

    #[test]
    fn matrix_algebra_passes() {
        let m2 = FDAlgebra::matrix_algebra(2).unwrap();
        assert_eq!(m2.dim, 4);
        assert!(m2.validate().is_pass());
        // e12 · e21 = e11
        let e12 = unit_vec(4, 1);
        let e21 = unit_vec(4, 2);
        assert_eq!(m2.multiply(&e12, &e21), unit_vec(4, 0));
        // e12 · e12 = 0
        assert!(m2.multiply(&e12, &e12).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn upper_triangular_basis_order() {
        let t2 = FDAlgebra::upper_triangular(2).unwrap();
        assert_eq!(t2.dim, 3);
        assert_eq!(t2.basis_names, vec!["e11", "e12", "e22"]);
        assert!(t2.validate().is_pass());
    }

    #[test]
    fn cyclic_group_invertible_basis() {
        for n in 1..=4 {
            let a = FDAlgebra::cyclic_group_algebra(n).unwrap();
            assert!(a.validate().is_pass());
            for i in 0..n {
                assert!(
                    a.l_mult_basis(i).inverse().is_some(),
                    "group element must be invertible"
                );
            }
        }
    }

    #[test]
    fn opposite_involution() {
        let t2 = FDAlgebra::upper_triangular(2).unwrap();
        let opp = t2.opposite();
        assert!(opp.validate().is_pass());
        assert_eq!(opp.opposite().mul, t2.mul);
        assert_ne!(opp.mul, t2.mul, "T2 is not commutative");
    }

    #[test]
    fn product_algebra() {
        let a = FDAlgebra::rationals();
        let b = FDAlgebra::cyclic_group_algebra(2).unwrap();
        let p = FDAlgebra::product(&a, &b).unwrap();
        assert_eq!(p.dim, 3);
        assert!(p.validate().is_pass());
    }

    #[test]
    fn invalid_spec_rejected() {
        assert!(FDAlgebra::matrix_algebra(0).is_err());
        assert!(FDAlgebra::cyclic_group_algebra(0).is_err());
        assert!(FDAlgebra::upper_triangular(0).is_err());
    }

    #[test]
    fn identity_map_passes() {
        let m2 = FDAlgebra::matrix_algebra(2).unwrap();
        assert!(AlgebraMap::identity(&m2).validate().is_pass());
    }

    #[test]
    fn unit_embedding_passes() {
        let m2 = FDAlgebra::matrix_algebra(2).unwrap();
        let i = AlgebraMap::unit_embedding(&m2);
        assert!(i.validate().is_pass());
        assert_eq!(i.matrix.apply(&[one()]), m2.unit);
    }

    #[test]
    fn sign_automorphism_of_c2() {
        let c2 = FDAlgebra::cyclic_group_algebra(2).unwrap();
        let s = cyclic_sign_automorphism(&c2).unwrap();
        assert!(s.validate().is_pass());
        assert!(s.is_automorphism());
        // (-g)² = g² = 1 is what makes it multiplicative
        assert_eq!(s.matrix.at(1, 1), &q(-1, 1));
    }

    #[test]
    fn non_multiplicative_map_fails() {
        let c2 = FDAlgebra::cyclic_group_algebra(2).unwrap();
        // g ↦ 2g is unital? no: fails multiplicativity (2g)(2g)=4 ≠ 1
        let mut m = Mat::identity(2);
        m.set(1, 1, qi(2));
        let map = AlgebraMap {
            source: c2.clone(),
            target: c2,
            matrix: m,
        };
        assert!(!map.validate().is_pass());
    }

    #[test]
    fn inner_automorphism_of_m2() {
        let m2 = FDAlgebra::matrix_algebra(2).unwrap();
        // u = e11 + 2 e22 is invertible
        let mut u = vec![zero(); 4];
        u[0] = one();
        u[3] = qi(2);
        let phi = inner_automorphism(&m2, &u).unwrap();
        assert!(phi.validate().is_pass());
        assert!(phi.is_automorphism());
        // conjugation fixes the unit and acts nontrivially on e12
        assert_eq!(phi.matrix.apply(&m2.unit), m2.unit);
        let e12 = unit_vec(4, 1);
        assert_ne!(phi.matrix.apply(&e12), e12);
    }
}
