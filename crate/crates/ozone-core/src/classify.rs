//! Classification of a ring: smallness of the diagonal automorphism group,
//! regularity / Gorensteinness / Calabi-Yau-ness of the center, a concrete
//! reflection witness when one exists, and independent low-rank crosschecks.
//!
//! All predicates are congruence conditions on the exponent matrix `B` and
//! the invariant vector `f`:
//! * small (no reflections)        <=>  every `f_i = 1`;
//! * center regular                <=>  `f_i * column_i(B) = 0 mod ell` for all `i`;
//! * center Gorenstein             <=>  `B f = 0 mod ell`;
//! * center Calabi-Yau (for `S`)   <=>  every row sum of `B` is `0 mod ell`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{exponent_invariants, has_trivial_hdet, InvariantProfile};
use crate::params::SkewParams;
use crate::zlinalg::{pfaffian, smith_normal_form, PFAFFIAN_MAX_N};

/// A diagonal automorphism acting as a reflection: it scales `x_axis` by
/// `xi^lambda` (`1`-based `axis`, `lambda != 0`) and fixes every other
/// generator. `y` solves `B y = lambda * e_axis mod ell`, so the group word
/// `-y mod ell` realizes the reflection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionWitness {
    pub axis: usize,
    pub lambda: i64,
    pub y: Vec<i64>,
}

/// Outcome of comparing a low-rank shortcut against the general path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agrees,
    Disagrees,
    /// The check is an implication whose hypothesis fails here, so it
    /// constrains nothing.
    Vacuous,
}

/// One low-rank crosscheck: `value` is the shortcut's prediction for the
/// property it covers (for vacuous implications, the general path's value is
/// echoed), and `agreement` compares it against the general path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    pub name: String,
    pub value: bool,
    pub agreement: Agreement,
}

/// Geometry note for the center: a regular center is smooth, and a
/// non-regular one never has isolated singularities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityNote {
    RegularCenter,
    NeverIsolated,
}

/// The four classification booleans plus the witness and geometry note.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// The invariant theory of the diagonal group behaves as for a group
    /// without reflections; equivalent to smallness.
    pub auslander: bool,
    pub regular: bool,
    pub gorenstein: bool,
    pub calabi_yau: bool,
    pub reflection_witness: Option<ReflectionWitness>,
    pub isolated_singularities: SingularityNote,
}

/// Full per-ring report: parameters, invariants, classification, crosschecks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub params: SkewParams,
    pub invariants: InvariantProfile,
    pub classification: Classification,
    pub crosschecks: Vec<Crosscheck>,
}

/// Whether the diagonal automorphism group contains no reflection,
/// equivalently whether every `f_i = 1`.
pub fn is_small(p: &SkewParams) -> Result<bool> {
    Ok(exponent_invariants(p)?.f.iter().all(|&v| v == 1))
}

/// Whether the center is a (commutative) polynomial ring, equivalently
/// `f_i * column_i(B) = 0 mod ell` for every `i`.
pub fn is_regular(p: &SkewParams) -> Result<bool> {
    let f = exponent_invariants(p)?.f;
    Ok(regular_given_f(p, &f))
}

fn regular_given_f(p: &SkewParams, f: &[i64]) -> bool {
    let ell = p.ell() as i128;
    (0..p.n()).all(|i| {
        p.col(i)
            .iter()
            .all(|&v| ((v as i128) * (f[i] as i128)).rem_euclid(ell) == 0)
    })
}

/// Whether the center is Gorenstein, equivalently `B f = 0 mod ell`,
/// i.e. the monomial `x^f` is central.
pub fn is_gorenstein(p: &SkewParams) -> Result<bool> {
    let f = exponent_invariants(p)?.f;
    Ok(gorenstein_given_f(p, &f))
}

fn gorenstein_given_f(p: &SkewParams, f: &[i64]) -> bool {
    let ell = p.ell() as i128;
    (0..p.n()).all(|i| {
        let acc: i128 = (0..p.n()).map(|j| (p.entry(i, j) as i128) * (f[j] as i128)).sum();
        acc.rem_euclid(ell) == 0
    })
}

/// Whether the ring is Calabi-Yau over its center, equivalently the product
/// of all generators is central, equivalently every diagonal automorphism in
/// the group has trivial homological determinant.
pub fn is_calabi_yau(p: &SkewParams) -> bool {
    has_trivial_hdet(p)
}

/// Searches for a reflection witness: the first pair `(axis, lambda)`, axes
/// scanned from `n` down to `1` and `lambda` ascending in `[1, ell)`, such
/// that `B y = lambda * e_axis mod ell` is solvable. The congruence is
/// solved in the Smith coordinates of `B`, taking the minimal nonnegative
/// solution per coordinate, so the result is deterministic. Returns `None`
/// exactly when the ring is small.
pub fn reflection_witness(p: &SkewParams) -> Result<Option<ReflectionWitness>> {
    let n = p.n();
    let ell = p.ell();
    let snf = smith_normal_form(&p.signed_matrix())?;
    for axis in (0..n).rev() {
        for lambda in 1..ell {
            // In Smith coordinates the system splits: d_k z_k = c_k mod ell
            // with c = lambda * (column `axis` of L).
            let mut z = Vec::with_capacity(n);
            let mut solvable = true;
            for k in 0..n {
                let c = ((lambda as i128) * snf.l.get(k, axis)).rem_euclid(ell as i128) as i64;
                match solve_scaled_congruence(snf.d[k], c, ell) {
                    Some(zk) => z.push(zk),
                    None => {
                        solvable = false;
                        break;
                    }
                }
            }
            if !solvable {
                continue;
            }
            let mut y = vec![0i64; n];
            for (i, slot) in y.iter_mut().enumerate() {
                let mut acc = 0i128;
                for k in 0..n {
                    acc += snf.r.get(i, k) * (z[k] as i128);
                }
                *slot = acc.rem_euclid(ell as i128) as i64;
            }
            debug_assert!(witness_valid(p, axis, lambda, &y));
            return Ok(Some(ReflectionWitness { axis: axis + 1, lambda, y }));
        }
    }
    Ok(None)
}

fn witness_valid(p: &SkewParams, axis: usize, lambda: i64, y: &[i64]) -> bool {
    let ell = p.ell() as i128;
    let m = p.signed_matrix();
    (0..p.n()).all(|i| {
        let acc: i128 = (0..p.n()).map(|j| m.get(i, j) * (y[j] as i128)).sum();
        let expect = if i == axis { lambda as i128 } else { 0 };
        acc.rem_euclid(ell) == expect
    })
}

/// Minimal nonnegative solution `z` of `d * z = c mod ell`, if any.
fn solve_scaled_congruence(d: i128, c: i64, ell: i64) -> Option<i64> {
    let g = d.gcd(&(ell as i128)) as i64;
    if c % g != 0 {
        return None;
    }
    let modulus = ell / g;
    if modulus == 1 {
        return Some(0);
    }
    let a = (d / g as i128).rem_euclid(modulus as i128) as i64;
    let inv = mod_inverse(a, modulus).expect("d/g is a unit mod ell/g");
    Some(((c / g) as i128 * inv as i128).rem_euclid(modulus as i128) as i64)
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Low-rank shortcut criteria evaluated against the general path. Rank 2 has
/// unconditional answers; rank 3 and 4 have entry-level criteria for
/// smallness, regularity, and Gorensteinness; and two implications hold in
/// any rank. Implication rows report [`Agreement::Vacuous`] when their
/// hypothesis fails.
pub fn crosscheck_low_n(p: &SkewParams) -> Result<Vec<Crosscheck>> {
    let inv = exponent_invariants(p)?;
    let small = inv.f.iter().all(|&v| v == 1);
    let regular = regular_given_f(p, &inv.f);
    let gorenstein = gorenstein_given_f(p, &inv.f);
    let ell = p.ell();
    let n = p.n();
    let mut out = Vec::new();

    let mut equivalence = |name: &str, predicted: bool, general: bool| {
        out.push(Crosscheck {
            name: name.to_string(),
            value: predicted,
            agreement: if predicted == general { Agreement::Agrees } else { Agreement::Disagrees },
        });
    };

    match n {
        2 => {
            equivalence("rank2_never_small", false, small);
            equivalence("rank2_always_regular", true, regular);
            equivalence("rank2_always_gorenstein", true, gorenstein);
        }
        3 => {
            let pair_gcds: Vec<i64> = p.upper_triangle().iter().map(|v| v.gcd(&ell)).collect();
            equivalence(
                "rank3_small_iff_pair_gcds_trivial",
                pair_gcds.iter().all(|&g| g == 1),
                small,
            );
            let orders: Vec<i64> = pair_gcds.iter().map(|g| ell / g).collect();
            equivalence(
                "rank3_regular_iff_pair_orders_coprime",
                pairwise_coprime(&orders),
                regular,
            );
            // The gcd vector (gcd(b_23, ell), gcd(b_13, ell), gcd(b_12, ell))
            // is the rank-3 closed form of f; Gorenstein <=> it is central.
            let v = vec![pair_gcds[2], pair_gcds[1], pair_gcds[0]];
            equivalence(
                "rank3_gorenstein_iff_gcd_vector_central",
                crate::zlinalg::is_central(p, &v)?,
                gorenstein,
            );
        }
        4 => {
            let pf = pfaffian(&p.signed_matrix())?;
            let pf_vanishes = pf.rem_euclid(ell as i128) == 0;
            equivalence(
                "rank4_small_iff_pfaffian_divisible_and_no_generator_power_reflects",
                pf_vanishes && !some_generator_power_reflects(p),
                small,
            );
            let rho = pf.gcd(&(ell as i128)) as i64;
            let orders: Vec<i64> = p.upper_triangle().iter().map(|v| rho / v.gcd(&rho)).collect();
            equivalence(
                "rank4_regular_iff_reduced_pair_orders_coprime",
                pairwise_coprime(&orders),
                regular,
            );
            // v_i = gcd(ell, entries avoiding index i), scaled by ell/rho.
            let scale = (ell / rho) as i128;
            let v: Vec<i64> = (0..4)
                .map(|i| {
                    let mut g = ell;
                    for j in 0..4 {
                        for k in (j + 1)..4 {
                            if j != i && k != i {
                                g = g.gcd(&p.entry(j, k));
                            }
                        }
                    }
                    (g as i128 * scale).rem_euclid(ell as i128) as i64
                })
                .collect();
            equivalence(
                "rank4_gorenstein_iff_scaled_gcd_vector_central",
                crate::zlinalg::is_central(p, &v)?,
                gorenstein,
            );
        }
        _ => {}
    }

    // In any rank: pairwise coprime generator-pair orders force regularity.
    let pair_orders: Vec<i64> = p.upper_triangle().iter().map(|v| ell / v.gcd(&ell)).collect();
    if pairwise_coprime(&pair_orders) {
        out.push(Crosscheck {
            name: "coprime_pair_orders_imply_regular".into(),
            value: true,
            agreement: if regular { Agreement::Agrees } else { Agreement::Disagrees },
        });
    } else {
        out.push(Crosscheck {
            name: "coprime_pair_orders_imply_regular".into(),
            value: regular,
            agreement: Agreement::Vacuous,
        });
    }

    // In even rank: a pfaffian nonzero mod ell forces a reflection.
    if n % 2 == 0 && n <= PFAFFIAN_MAX_N {
        let pf = pfaffian(&p.signed_matrix())?;
        if pf.rem_euclid(ell as i128) != 0 {
            out.push(Crosscheck {
                name: "nonvanishing_pfaffian_implies_reflection".into(),
                value: true,
                agreement: if small { Agreement::Disagrees } else { Agreement::Agrees },
            });
        } else {
            out.push(Crosscheck {
                name: "nonvanishing_pfaffian_implies_reflection".into(),
                value: !small,
                agreement: Agreement::Vacuous,
            });
        }
    }

    Ok(out)
}

fn pairwise_coprime(values: &[i64]) -> bool {
    for (idx, &a) in values.iter().enumerate() {
        for &b in &values[idx + 1..] {
            if a.gcd(&b) != 1 {
                return false;
            }
        }
    }
    true
}

/// Whether some power `phi_j^k` (`1 <= k < ell`) of a single generator acts
/// as a reflection, i.e. `k * row_j(B) mod ell` has exactly one nonzero
/// entry.
fn some_generator_power_reflects(p: &SkewParams) -> bool {
    let ell = p.ell();
    (0..p.n()).any(|j| {
        (1..ell).any(|k| {
            let nonzero = p
                .row(j)
                .iter()
                .filter(|&&v| ((v as i128) * (k as i128)).rem_euclid(ell as i128) != 0)
                .count();
            nonzero == 1
        })
    })
}

/// Builds the aggregate report for one ring.
pub fn classification_report(p: &SkewParams) -> Result<ClassificationReport> {
    let invariants = exponent_invariants(p)?;
    let small = invariants.f.iter().all(|&v| v == 1);
    let regular = regular_given_f(p, &invariants.f);
    let classification = Classification {
        auslander: small,
        regular,
        gorenstein: gorenstein_given_f(p, &invariants.f),
        calabi_yau: is_calabi_yau(p),
        reflection_witness: reflection_witness(p)?,
        isolated_singularities: if regular {
            SingularityNote::RegularCenter
        } else {
            SingularityNote::NeverIsolated
        },
    };
    let crosschecks = crosscheck_low_n(p)?;
    Ok(ClassificationReport { params: p.clone(), invariants, classification, crosschecks })
}
