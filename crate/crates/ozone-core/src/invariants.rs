//! Combinatorial invariants of a ring: the per-variable gcd vector `f`, the
//! exponent words built from it, generator orders, and the fixed subring
//! under the diagonal reflection subgroup.
//!
//! `f[j]` is the gcd of the `j`-th coordinates over the central lattice; it
//! is the least positive exponent of `x_j` appearing in a central monomial,
//! and the reflections `diag(1, .., xi^(ell/f_j), .., 1)` generate a subgroup
//! of order `prod f_j` inside the diagonal automorphism group.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{GroupWord, SkewParams};
use crate::zlinalg::kernel_lattice;

/// The invariant vectors and group orders of a ring.
///
/// * `f`: per-coordinate gcd of the central lattice; each entry divides `ell`.
/// * `oj`: exponent word `(f_1 - 1, ..., f_n - 1)`.
/// * `oa`: indicator word with 1 exactly where `f_i > 1`.
/// * `od`: `oj + oa`, i.e. `f_i` where `f_i > 1` and 0 elsewhere.
/// * `pg`: the all-ones word.
/// * `o_phi`: orders of the diagonal generators, `ell / gcd(column_i, ell)`.
/// * `order_o`: order of the full diagonal automorphism group.
/// * `order_h`: order of the reflection subgroup, `prod f_i`; divides `order_o`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub f: Vec<i64>,
    pub oj: Vec<i64>,
    pub oa: Vec<i64>,
    pub od: Vec<i64>,
    pub pg: Vec<i64>,
    pub o_phi: Vec<i64>,
    pub order_o: u128,
    pub order_h: u128,
}

/// Computes the full invariant profile from the central lattice.
pub fn exponent_invariants(p: &SkewParams) -> Result<InvariantProfile> {
    let lat = kernel_lattice(p)?;
    let f = lat.coordinate_gcds();
    let oj: Vec<i64> = f.iter().map(|&v| v - 1).collect();
    let oa: Vec<i64> = f.iter().map(|&v| i64::from(v > 1)).collect();
    let od: Vec<i64> = f.iter().map(|&v| if v > 1 { v } else { 0 }).collect();
    let pg = vec![1i64; p.n()];
    let o_phi = (0..p.n())
        .map(|i| {
            let g = p.col(i).iter().fold(p.ell(), |acc, &v| acc.gcd(&v));
            p.ell() / g
        })
        .collect();
    let order_h = f
        .iter()
        .try_fold(1u128, |acc, &v| acc.checked_mul(v as u128))
        .ok_or(Error::Overflow("reflection subgroup order overflowed"))?;
    debug_assert_eq!(lat.index() % order_h, 0, "order_h must divide order_o");
    Ok(InvariantProfile {
        f,
        oj,
        oa,
        od,
        pg,
        o_phi,
        order_o: lat.index(),
        order_h,
    })
}

/// Closed form of the `f` vector in rank 3:
/// `(gcd(b_23, ell), gcd(b_13, ell), gcd(b_12, ell))`.
pub fn f_closed_form_n3(p: &SkewParams) -> Result<Vec<i64>> {
    if p.n() != 3 {
        return Err(Error::WrongDimension { expected: 3, found: p.n() });
    }
    let ell = p.ell();
    Ok(vec![
        ell.gcd(&p.entry(1, 2)),
        ell.gcd(&p.entry(0, 2)),
        ell.gcd(&p.entry(0, 1)),
    ])
}

/// Exponent of the homological determinant of the group element
/// `phi_1^(u_1) ... phi_n^(u_n)`: the sum of all entries of `u^T B`, i.e.
/// `sum_i u_i * rowsum_i(B) mod ell`. The element acts trivially on the
/// top local cohomology exactly when this vanishes.
pub fn hdet_exponent(p: &SkewParams, u: &GroupWord) -> Result<i64> {
    let n = p.n();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    let ell = p.ell() as i128;
    let sums = p.row_sums_mod_ell();
    let mut acc = 0i128;
    for i in 0..n {
        acc = acc
            .checked_add((u[i] as i128) * (sums[i] as i128))
            .ok_or(Error::Overflow("hdet accumulation overflowed"))?;
    }
    Ok(acc.rem_euclid(ell) as i64)
}

/// Whether every generator (equivalently, every element of the diagonal
/// automorphism group) has trivial homological determinant; this holds
/// exactly when all row sums of `B` vanish mod `ell`.
pub fn has_trivial_hdet(p: &SkewParams) -> bool {
    p.row_sums_mod_ell().iter().all(|&s| s == 0)
}

/// The subring fixed by the reflection subgroup. It is generated by the
/// powers `x_i^(f_i)` and is itself a skew polynomial ring whose exponent
/// matrix is `(f_i * f_j * b_ij) mod ell`, renormalized to its own minimal
/// modulus; `ring` is `None` when that matrix vanishes, i.e. the fixed
/// subring is a commutative polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedSubring {
    pub generator_powers: Vec<i64>,
    pub ring: Option<SkewParams>,
}

/// Computes the fixed subring under the reflection subgroup.
pub fn fixed_subring(p: &SkewParams) -> Result<FixedSubring> {
    let f = exponent_invariants(p)?.f;
    let n = p.n();
    let ell = p.ell();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let scaled = (p.entry(i, j) as i128) * (f[i] as i128) * (f[j] as i128);
            let v = scaled.rem_euclid(ell as i128) as i64;
            b[i][j] = v;
            b[j][i] = (ell - v).rem_euclid(ell);
        }
    }
    let ring = match SkewParams::new(ell, b) {
        Ok(ring) => Some(ring),
        Err(Error::CommutativeRing { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(FixedSubring { generator_powers: f, ring })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_ring() -> SkewParams {
        SkewParams::new(
            6,
            vec![
                vec![0, 1, 1, 3],
                vec![-1, 0, 1, 3],
                vec![-1, -1, 0, 3],
                vec![-3, -3, -3, 0],
            ],
        )
        .unwrap()
    }

    fn hypersurface_ring(ell: i64) -> SkewParams {
        SkewParams::new(ell, vec![vec![0, 0, 1], vec![0, 0, -1], vec![-1, 1, 0]]).unwrap()
    }

    #[test]
    fn profile_of_example_ring() {
        let inv = exponent_invariants(&example_ring()).unwrap();
        assert_eq!(inv.f, vec![2, 2, 2, 2]);
        assert_eq!(inv.oj, vec![1, 1, 1, 1]);
        assert_eq!(inv.oa, vec![1, 1, 1, 1]);
        assert_eq!(inv.od, vec![2, 2, 2, 2]);
        assert_eq!(inv.pg, vec![1, 1, 1, 1]);
        assert_eq!(inv.o_phi, vec![6, 6, 6, 2]);
        assert_eq!(inv.order_o, 144);
        assert_eq!(inv.order_h, 16);
    }

    #[test]
    fn profile_of_hypersurface_ring() {
        let inv = exponent_invariants(&hypersurface_ring(5)).unwrap();
        assert_eq!(inv.f, vec![1, 1, 5]);
        assert_eq!(inv.oj, vec![0, 0, 4]);
        assert_eq!(inv.oa, vec![0, 0, 1]);
        assert_eq!(inv.od, vec![0, 0, 5]);
        assert_eq!(inv.o_phi, vec![5, 5, 5]);
        assert_eq!(inv.order_o, 25);
        assert_eq!(inv.order_h, 5);
    }

    #[test]
    fn profile_of_ell24_rings() {
        for k in [3i64, 9] {
            let p = SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, k], vec![-6, -k, 0]])
                .unwrap();
            let inv = exponent_invariants(&p).unwrap();
            assert_eq!(inv.f, vec![3, 6, 4], "k = {k}");
            assert_eq!(inv.o_phi, vec![12, 24, 8], "k = {k}");
            assert_eq!(inv.order_o, 576);
            assert_eq!(inv.order_h, 72);
        }
    }

    #[test]
    fn closed_form_matches_lattice_in_rank_three() {
        for (ell, b) in [
            (5i64, vec![vec![0, 0, 1], vec![0, 0, -1], vec![-1, 1, 0]]),
            (24, vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]]),
            (30, vec![vec![0, 15, 10], vec![-15, 0, 6], vec![-10, -6, 0]]),
            (12, vec![vec![0, 2, 3], vec![-2, 0, 4], vec![-3, -4, 0]]),
        ] {
            let p = SkewParams::new(ell, b).unwrap();
            assert_eq!(
                f_closed_form_n3(&p).unwrap(),
                exponent_invariants(&p).unwrap().f
            );
        }
        assert!(matches!(
            f_closed_form_n3(&example_ring()),
            Err(Error::WrongDimension { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn hdet_of_single_generators() {
        let p = example_ring();
        assert_eq!(hdet_exponent(&p, &vec![0, 0, 0, 1]).unwrap(), 3);
        assert_eq!(hdet_exponent(&p, &vec![1, 0, 0, 0]).unwrap(), 5);
        // The word (3,3,3,0) is the cube of phi_1 phi_2 phi_3.
        assert_eq!(hdet_exponent(&p, &vec![3, 3, 3, 0]).unwrap(), 3);
        assert!(!has_trivial_hdet(&p));
    }

    #[test]
    fn trivial_hdet_detects_unimodular_rings() {
        let cy = SkewParams::new(3, vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap();
        assert!(has_trivial_hdet(&cy));
        assert_eq!(hdet_exponent(&cy, &vec![1, 1, 1]).unwrap(), 0);
        assert_eq!(hdet_exponent(&cy, &vec![2, 0, 1]).unwrap(), 0);
    }

    #[test]
    fn fixed_subring_of_example_ring_normalizes() {
        // Powers (2,2,2,2); scaled entries 4*b_ij mod 6 are 4 or 0, and the
        // common factor 2 with ell = 6 drops the modulus to 3.
        let fs = fixed_subring(&example_ring()).unwrap();
        assert_eq!(fs.generator_powers, vec![2, 2, 2, 2]);
        let ring = fs.ring.unwrap();
        assert_eq!(ring.ell(), 3);
        assert_eq!(
            ring.b(),
            &[
                vec![0, 2, 2, 0],
                vec![1, 0, 2, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn fixed_subring_commutative_marker() {
        // f = (6,10,15) at ell = 30: every scaled entry vanishes mod 30.
        let p = SkewParams::new(30, vec![vec![0, 15, 10], vec![-15, 0, 6], vec![-10, -6, 0]])
            .unwrap();
        let fs = fixed_subring(&p).unwrap();
        assert_eq!(fs.generator_powers, vec![6, 10, 15]);
        assert!(fs.ring.is_none());
    }

    #[test]
    fn hdet_length_mismatch_is_reported() {
        assert!(matches!(
            hdet_exponent(&example_ring(), &vec![1, 2]),
            Err(Error::DimensionMismatch { expected: 4, found: 2 })
        ));
    }
}
