use num_traits::Zero;

use super::Bimodule;
use crate::exactla::{Mat, Subspace};
use crate::Error;

/// Balanced tensor product `M ⊗_S N` realized as an explicit quotient of
/// `M ⊗_k N` with a stored projection and section.
///
/// The quotient coordinates are chosen deterministically: the complement of
/// the relation span is built greedily from standard basis vectors in index
/// order.  Elements of `M ⊗_S N` therefore have canonical coordinates, and
/// every certificate that mentions a tensor element serializes identically
/// across runs.
#[derive(Debug, Clone)]
pub struct TensorOver {
    /// The quotient as an (R,T)-bimodule with the induced actions.
    pub bim: Bimodule,
    /// Surjection `M ⊗_k N → M ⊗_S N` in coordinates (`dim × m·n`).
    pub proj: Mat,
    /// Section of `proj` (`m·n × dim`); `proj · sect = I`.
    pub sect: Mat,
    /// The balancing relation span `⟨ms ⊗ n − m ⊗ sn⟩` inside `M ⊗_k N`.
    pub relations: Subspace,
}

impl TensorOver {
    /// Canonical coordinates of the class of an ambient tensor.
    pub fn project(&self, ambient: &[crate::Scalar]) -> Vec<crate::Scalar> {
        self.proj.apply(ambient)
    }

    /// Chosen ambient representative of a quotient element.
    pub fn lift(&self, class: &[crate::Scalar]) -> Vec<crate::Scalar> {
        self.sect.apply(class)
    }
}

/// `m ⊗_S n` for `m ∈ (R,S)`, `n ∈ (S,T)`; errors when the middle algebras
/// differ.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<TensorOver, Error> {
    if !m.right_alg.same_structure(&n.left_alg) {
        return Err(Error::AlgebraMismatch(
            "tensor_over: right algebra of the first factor differs from left algebra of the second"
                .into(),
        ));
    }
    let s = &m.right_alg;
    let ambient = m.dim * n.dim;
    let id_m = Mat::identity(m.dim);
    let id_n = Mat::identity(n.dim);

    // relation span: columns of  σ_m(s_j) ⊗ I  −  I ⊗ ρ_n(s_j)  over all j
    let mut rel_vectors: Vec<Vec<crate::Scalar>> = Vec::new();
    for j in 0..s.dim {
        let d = m.right_action[j]
            .kron(&id_n)
            .sub(&id_m.kron(&n.left_action[j]));
        for c in 0..ambient {
            let col = d.col(c);
            if col.iter().any(|x| !x.is_zero()) {
                rel_vectors.push(col);
            }
        }
    }
    let relations = Subspace::from_spanning(ambient, &rel_vectors);
    let k = relations.dim();
    let q = ambient - k;

    // extend the relation basis to a basis of the ambient space by standard
    // basis vectors, picked greedily in index order
    let mut acc = crate::exactla::span_accum(ambient);
    for v in relations.basis_vectors() {
        acc.insert(v);
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(q);
    for i in 0..ambient {
        if chosen.len() == q {
            break;
        }
        if acc.insert(crate::exactla::unit_vec(ambient, i)) {
            chosen.push(i);
        }
    }
    debug_assert_eq!(chosen.len(), q);

    let mut sect = Mat::zero(ambient, q);
    for (c, &i) in chosen.iter().enumerate() {
        sect.set(i, c, crate::exactla::one());
    }
    // B = [relation basis | chosen unit columns]; quotient coordinates are
    // the last q coordinates of B⁻¹
    let b = Mat::hstack(&[relations.basis(), &sect]);
    let b_inv = b.inverse().expect("relation basis extended to a full basis");
    let proj = Mat::from_fn(q, ambient, |i, j| b_inv.at(k + i, j).clone());

    // induced actions descend because the relation span is stable
    let left_action: Vec<Mat> = (0..m.left_alg.dim)
        .map(|i| proj.mul(&m.left_action[i].kron(&id_n)).mul(&sect))
        .collect();
    let right_action: Vec<Mat> = (0..n.right_alg.dim)
        .map(|j| proj.mul(&id_m.kron(&n.right_action[j])).mul(&sect))
        .collect();

    let bim = Bimodule {
        left_alg: m.left_alg.clone(),
        right_alg: n.right_alg.clone(),
        dim: q,
        left_action,
        right_action,
    };
    Ok(TensorOver {
        bim,
        proj,
        sect,
        relations,
    })
}
