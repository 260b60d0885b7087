use num_traits::Zero;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space_matrices, Bimodule};
use crate::exactla::{qi, Mat, Scalar};
use crate::verdict::{IsoWitness, SearchParams};
use crate::{Error, Verdict};

/// Grid enumeration is abandoned above this many evaluation points; the
/// search then falls back to the randomized phase instead of silently
/// taking minutes.
const GRID_POINT_CAP: u64 = 200_000;

/// Certified bimodule isomorphism search.
///
/// Protocol: (1) dimension check; (2) hom-space computation — a zero hom
/// space certifies nonexistence; (3) for hom-space dimension up to
/// `params.grid_threshold`, a deterministic polynomial-identity test of the
/// generic determinant on the integer grid `{0..dim}^h` (side `dim + 1`
/// bounds the determinant degree, so an all-zero sweep proves the
/// determinant identically zero); any nonzero point yields a verified
/// isomorphism instead; (4) otherwise up to `params.max_random_tries`
/// seeded random integer combinations with entries in `[-dim, dim]`.
/// Exhaustion of the randomized phase is reported as `Inconclusive`
/// together with the hom-space dimension.
pub fn iso_search(
    m: &Bimodule,
    n: &Bimodule,
    seed: u64,
    params: &SearchParams,
) -> Result<Verdict<IsoWitness>, Error> {
    if !m.same_algebra_pair(n) {
        return Err(Error::AlgebraMismatch(
            "iso_search needs matching algebra pairs".into(),
        ));
    }
    if m.dim != n.dim {
        return Ok(Verdict::no(format!(
            "dimension mismatch: {} vs {}",
            m.dim, n.dim
        )));
    }
    if m.dim == 0 {
        let w = IsoWitness {
            map: Mat::zero(0, 0),
            inverse: Mat::zero(0, 0),
        };
        return Ok(Verdict::yes(w, "zero modules"));
    }
    let basis = hom_space_matrices(m, n)?;
    let h = basis.len();
    if h == 0 {
        return Ok(Verdict::no("hom space is zero-dimensional"));
    }

    if h <= params.grid_threshold {
        let side = (m.dim + 1) as u64;
        let points = side.checked_pow(h as u32);
        if let Some(points) = points.filter(|&p| p <= GRID_POINT_CAP) {
            let mut coeffs = vec![0i64; h];
            for _ in 0..points {
                if coeffs.iter().any(|&c| c != 0) {
                    if let Some(w) = try_combination(m, n, &basis, &coeffs) {
                        return Ok(Verdict::yes(
                            w,
                            format!("invertible combination found on grid (hom dim {})", h),
                        ));
                    }
                }
                // odometer step
                let mut i = 0;
                while i < h {
                    coeffs[i] += 1;
                    if coeffs[i] < side as i64 {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
            }
            return Ok(Verdict::no(format!(
                "hom-space determinant identically zero: all {} grid points of side {} are singular (hom dim {})",
                points, side, h
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = m.dim as i64;
    for _ in 0..params.max_random_tries {
        let coeffs: Vec<i64> = (0..h).map(|_| rng.gen_range(-bound..=bound)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        if let Some(w) = try_combination(m, n, &basis, &coeffs) {
            return Ok(Verdict::yes(
                w,
                format!("invertible combination found by randomized search (hom dim {})", h),
            ));
        }
    }
    Ok(Verdict::inconclusive(format!(
        "randomized search exhausted after {} tries (hom dim {})",
        params.max_random_tries, h
    )))
}

fn try_combination(
    m: &Bimodule,
    n: &Bimodule,
    basis: &[Mat],
    coeffs: &[i64],
) -> Option<IsoWitness> {
    let mut f = Mat::zero(n.dim, m.dim);
    for (c, b) in coeffs.iter().zip(basis.iter()) {
        if *c != 0 {
            f = f.add(&b.scale(&qi(*c)));
        }
    }
    let inverse = f.inverse()?;
    debug_assert!(verify_iso(m, n, &f));
    Some(IsoWitness { map: f, inverse })
}

/// Exact re-verification of an isomorphism witness: intertwines both
/// actions and the stored inverse really is a two-sided inverse.
pub fn verify_iso_witness(m: &Bimodule, n: &Bimodule, w: &IsoWitness) -> bool {
    verify_iso(m, n, &w.map)
        && w.map.mul(&w.inverse).is_identity()
        && w.inverse.mul(&w.map).is_identity()
}

fn verify_iso(m: &Bimodule, n: &Bimodule, f: &Mat) -> bool {
    for i in 0..m.left_alg.dim {
        if f.mul(&m.left_action[i]) != n.left_action[i].mul(f) {
            return false;
        }
    }
    for j in 0..m.right_alg.dim {
        if f.mul(&m.right_action[j]) != n.right_action[j].mul(f) {
            return false;
        }
    }
    true
}

/// Scalar-combination helper shared with other search loops.
pub(crate) fn combine_matrices(basis: &[Mat], coeffs: &[Scalar], rows: usize, cols: usize) -> Mat {
    let mut f = Mat::zero(rows, cols);
    for (c, b) in coeffs.iter().zip(basis.iter()) {
        if !c.is_zero() {
            f = f.add(&b.scale(c));
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_sign_automorphism, AlgebraMap, FDAlgebra};
    use crate::bimodule::twist;

    #[test]
    fn identical_modules_yes() {
        let reg = Bimodule::regular(&FDAlgebra::matrix_algebra(2).unwrap());
        let v = iso_search(&reg, &reg, 0, &SearchParams::default()).unwrap();
        assert!(v.is_yes());
        let w = v.certificate().unwrap();
        assert!(verify_iso_witness(&reg, &reg, w));
    }

    #[test]
    fn dim_mismatch_no() {
        let a = Bimodule::vector_space(2);
        let b = Bimodule::vector_space(3);
        let v = iso_search(&a, &b, 0, &SearchParams::default()).unwrap();
        assert!(v.is_no());
        assert!(v.reason().contains("dimension"));
    }

    #[test]
    fn sign_twist_not_isomorphic_to_regular() {
        let alg = FDAlgebra::cyclic_group_algebra(2).unwrap();
        let reg = Bimodule::regular(&alg);
        let sign = cyclic_sign_automorphism(&alg).unwrap();
        let id = AlgebraMap::identity(&alg);
        let tw = twist(&reg, &sign, &id).unwrap();
        let v = iso_search(&tw, &reg, 0, &SearchParams::default()).unwrap();
        assert!(v.is_no());
        assert!(v.reason().contains("zero-dimensional"));
    }

    #[test]
    fn symmetric_outcomes() {
        let alg = FDAlgebra::cyclic_group_algebra(2).unwrap();
        let reg = Bimodule::regular(&alg);
        let sign = cyclic_sign_automorphism(&alg).unwrap();
        let id = AlgebraMap::identity(&alg);
        let tw = twist(&reg, &sign, &id).unwrap();
        let p = SearchParams::default();
        for (a, b) in [(&reg, &reg), (&tw, &reg), (&reg, &tw), (&tw, &tw)] {
            let ab = iso_search(a, b, 0, &p).unwrap();
            let ba = iso_search(b, a, 0, &p).unwrap();
            assert_eq!(ab.is_yes(), ba.is_yes());
            assert_eq!(ab.is_no(), ba.is_no());
        }
    }

    #[test]
    fn grid_certifies_yes_for_small_hom() {
        // two copies of the regular C2 bimodule twisted by identity: the
        // hom space has dim 2 (= centralizer of C2), grid path fires
        let alg = FDAlgebra::cyclic_group_algebra(2).unwrap();
        let reg = Bimodule::regular(&alg);
        let params = SearchParams {
            max_random_tries: 0,
            grid_threshold: 6,
        };
        let v = iso_search(&reg, &reg, 7, &params).unwrap();
        assert!(v.is_yes());
    }
}
