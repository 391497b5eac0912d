//! Brute-force reference implementations used to cross-check the lattice
//! routines, plus a battery of structural law checks.
//!
//! Everything in this module that recomputes an invariant does so by direct
//! enumeration over `(Z/ell)^n` — group closure by breadth-first search,
//! centrality by testing every vector against every relation row — without
//! touching the Smith-normal-form machinery. `verify_equivalences` is the
//! bridge that compares the two routes and checks the structural laws tying
//! the invariants together.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::center::{center_presentation, expand_series};
use crate::classify::{
    crosscheck_low_n, is_calabi_yau, is_gorenstein, is_regular, is_small, reflection_witness,
    Agreement,
};
use crate::error::{Error, Result};
use crate::invariants::{exponent_invariants, f_closed_form_n3};
use crate::params::{ExponentWord, SkewParams};

/// Default step budget for the exhaustive routines.
pub const DEFAULT_ORACLE_BUDGET: u128 = 1_000_000;

/// One verified structural law: its stable name, whether it held, and a
/// short description of the discrepancy when it did not.
#[derive(Debug, Clone, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub holds: bool,
    pub detail: Option<String>,
}

impl LawCheck {
    fn pass(law: &'static str) -> Self {
        LawCheck { law, holds: true, detail: None }
    }

    fn check(law: &'static str, holds: bool, detail: impl FnOnce() -> String) -> Self {
        if holds {
            Self::pass(law)
        } else {
            LawCheck { law, holds: false, detail: Some(detail()) }
        }
    }
}

/// Does the relation-exponent matrix kill `u` mod `ell`? Direct row-by-row
/// test, independent of any lattice decomposition.
fn residue_is_central(p: &SkewParams, u: &[i64]) -> bool {
    let ell = p.ell() as i128;
    (0..p.n()).all(|i| {
        let dot: i128 = (0..p.n())
            .map(|j| p.entry(i, j) as i128 * u[j] as i128)
            .sum();
        dot.rem_euclid(ell) == 0
    })
}

/// Advances `u` through `[0, radix)^n` in ascending lexicographic order with
/// the MOST significant coordinate first. Returns `false` after the last
/// tuple.
fn odometer(u: &mut [i64], radix: i64) -> bool {
    for slot in u.iter_mut().rev() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Closure of the rows of the relation-exponent matrix under addition in
/// `(Z/ell)^n`, by breadth-first search from zero.
pub fn group_closure(p: &SkewParams, budget: u128) -> Result<BTreeSet<Vec<i64>>> {
    let n = p.n();
    let ell = p.ell();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| p.row(i).to_vec()).collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(vec![0; n]);
    let mut frontier = vec![vec![0i64; n]];
    while let Some(v) = frontier.pop() {
        for row in &rows {
            let next: Vec<i64> = v.iter().zip(row).map(|(a, b)| (a + b) % ell).collect();
            if !seen.contains(&next) {
                let needed = seen.len() as u128 + 1;
                if needed > budget {
                    return Err(Error::BudgetExceeded { task: "group closure", needed, budget });
                }
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(seen)
}

/// Elements of the closure with exactly one nonzero coordinate: the
/// diagonal group elements that fix a hyperplane pointwise.
pub fn oracle_reflections(p: &SkewParams, budget: u128) -> Result<Vec<Vec<i64>>> {
    Ok(group_closure(p, budget)?
        .into_iter()
        .filter(|v| v.iter().filter(|&&c| c != 0).count() == 1)
        .collect())
}

/// All central residues found by scanning every vector in `[0, ell)^n`.
pub fn oracle_central_residues(p: &SkewParams, budget: u128) -> Result<Vec<ExponentWord>> {
    let n = p.n();
    let ell = p.ell();
    let total = (ell as u128)
        .checked_pow(n as u32)
        .ok_or(Error::Overflow("residue scan size overflowed"))?;
    if total > budget {
        return Err(Error::BudgetExceeded { task: "exhaustive residue scan", needed: total, budget });
    }
    let mut out = Vec::new();
    let mut u = vec![0i64; n];
    loop {
        if residue_is_central(p, &u) {
            out.push(u.clone());
        }
        if !odometer(&mut u, ell) {
            break;
        }
    }
    Ok(out)
}

/// The per-generator exponent gcds, computed by two independent definitions
/// over the exhaustive residue list: the gcd of each coordinate (together
/// with `ell`), and the least positive value of each coordinate (defaulting
/// to `ell`). Errors with `DefinitionMismatch` if the routes disagree.
pub fn oracle_f(p: &SkewParams, budget: u128) -> Result<Vec<i64>> {
    use num_integer::Integer;
    let residues = oracle_central_residues(p, budget)?;
    let n = p.n();
    let ell = p.ell();
    let by_gcd: Vec<i64> = (0..n)
        .map(|j| residues.iter().fold(ell, |acc, r| acc.gcd(&r[j])))
        .collect();
    let by_min: Vec<i64> = (0..n)
        .map(|j| {
            residues
                .iter()
                .map(|r| r[j])
                .filter(|&c| c > 0)
                .min()
                .unwrap_or(ell)
                .min(ell)
        })
        .collect();
    if by_gcd != by_min {
        return Err(Error::DefinitionMismatch(format!(
            "coordinate gcd route gives {:?} but least-positive-coordinate route gives {:?}",
            by_gcd, by_min
        )));
    }
    Ok(by_gcd)
}

fn prime_power_factorization(mut v: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v % p == 0 {
            let mut q = 1;
            while v % p == 0 {
                v /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if v > 1 {
        out.push((v, v));
    }
    out
}

/// The per-generator exponent gcds assembled one prime at a time: for each
/// prime power `q` exactly dividing `ell`, scan the kernel of the matrix
/// mod `q` and take coordinate gcds there; the answer is the product over
/// primes. A third route, independent of `oracle_f`.
pub fn oracle_f_per_prime(p: &SkewParams, budget: u128) -> Result<Vec<i64>> {
    use num_integer::Integer;
    let n = p.n();
    let ell = p.ell();
    let mut f = vec![1i64; n];
    for (_, q) in prime_power_factorization(ell) {
        let total = (q as u128)
            .checked_pow(n as u32)
            .ok_or(Error::Overflow("residue scan size overflowed"))?;
        if total > budget {
            return Err(Error::BudgetExceeded {
                task: "per-prime residue scan",
                needed: total,
                budget,
            });
        }
        let mut part = vec![q; n];
        let mut u = vec![0i64; n];
        loop {
            let central_mod_q = (0..n).all(|i| {
                let dot: i128 = (0..n).map(|j| p.entry(i, j) as i128 * u[j] as i128).sum();
                dot.rem_euclid(q as i128) == 0
            });
            if central_mod_q {
                for j in 0..n {
                    part[j] = part[j].gcd(&u[j]);
                }
            }
            if !odometer(&mut u, q) {
                break;
            }
        }
        for j in 0..n {
            f[j] *= part[j];
        }
    }
    Ok(f)
}

/// Number of central monomials of each total degree `0..=bound`, by
/// exhaustive enumeration of exponent vectors.
pub fn oracle_degree_counts(p: &SkewParams, bound: usize, budget: u128) -> Result<Vec<i64>> {
    let n = p.n();
    let total = (bound as u128 + 1)
        .checked_pow(n as u32)
        .ok_or(Error::Overflow("degree scan size overflowed"))?;
    if total > budget {
        return Err(Error::BudgetExceeded { task: "degree count scan", needed: total, budget });
    }
    let mut counts = vec![0i64; bound + 1];
    let mut u = vec![0i64; n];
    loop {
        let degree: i64 = u.iter().sum();
        if degree <= bound as i64 && residue_is_central(p, &u) {
            counts[degree as usize] += 1;
        }
        if !odometer(&mut u, bound as i64 + 1) {
            break;
        }
    }
    Ok(counts)
}

/// A deterministic generator for randomized law checking.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid parameter set with `2 <= n <= 4` and `2 <= ell <= 12`,
/// redrawing whenever the sampled matrix presents a commutative ring.
pub fn random_params(rng: &mut impl Rng) -> SkewParams {
    loop {
        let n = rng.gen_range(2..=4usize);
        let ell = rng.gen_range(2..=12i64);
        let upper: Vec<i64> = (0..n * (n - 1) / 2).map(|_| rng.gen_range(0..ell)).collect();
        if let Ok(p) = SkewParams::from_upper(ell, n, &upper) {
            return p;
        }
    }
}

/// Checks every structural law relating the fast lattice route to the
/// exhaustive one on a single parameter set. Returns one entry per law;
/// propagates `BudgetExceeded` if the instance is too large to verify.
pub fn verify_equivalences(p: &SkewParams, budget: u128) -> Result<Vec<LawCheck>> {
    let n = p.n();
    let ell = p.ell();
    let inv = exponent_invariants(p)?;
    let closure = group_closure(p, budget)?;
    let reflections = oracle_reflections(p, budget)?;
    let residues = oracle_central_residues(p, budget)?;
    let lattice_residues = crate::zlinalg::kernel_lattice(p)?.residues(budget)?;
    let brute_f = oracle_f(p, budget)?;
    let per_prime_f = oracle_f_per_prime(p, budget)?;
    let small = is_small(p)?;
    let regular = is_regular(p)?;
    let gorenstein = is_gorenstein(p)?;
    let cy = is_calabi_yau(p);
    let witness = reflection_witness(p)?;
    let presentation = center_presentation(p, budget)?;
    let degree_counts = oracle_degree_counts(p, ell as usize, budget)?;
    let expansion = expand_series(&presentation.series, ell as usize)?;

    let mut laws = Vec::new();

    laws.push(LawCheck::check(
        "order_matches_closure",
        inv.order_o == closure.len() as u128,
        || format!("lattice index {} vs closure size {}", inv.order_o, closure.len()),
    ));
    laws.push(LawCheck::check(
        "residues_match_exhaustive_scan",
        lattice_residues == residues,
        || format!("{} lattice residues vs {} scanned", lattice_residues.len(), residues.len()),
    ));
    laws.push(LawCheck::check(
        "f_matches_brute_force",
        inv.f == brute_f,
        || format!("lattice f {:?} vs brute-force {:?}", inv.f, brute_f),
    ));
    laws.push(LawCheck::check(
        "f_matches_per_prime_assembly",
        inv.f == per_prime_f,
        || format!("lattice f {:?} vs per-prime {:?}", inv.f, per_prime_f),
    ));
    if n == 3 {
        let closed = f_closed_form_n3(p)?;
        laws.push(LawCheck::check(
            "f_matches_rank3_closed_form",
            inv.f == closed,
            || format!("lattice f {:?} vs closed form {:?}", inv.f, closed),
        ));
    } else {
        laws.push(LawCheck::pass("f_matches_rank3_closed_form"));
    }
    laws.push(LawCheck::check(
        "order_times_residue_count_is_ell_pow_n",
        closure.len() as u128 * residues.len() as u128 == (ell as u128).pow(n as u32),
        || format!("{} * {} != {}^{}", closure.len(), residues.len(), ell, n),
    ));
    laws.push(LawCheck::check(
        "small_iff_no_reflection",
        small == reflections.is_empty(),
        || format!("small={} but {} reflections found", small, reflections.len()),
    ));
    laws.push(LawCheck::check(
        "witness_iff_not_small",
        witness.is_some() != small,
        || format!("small={} but witness {:?}", small, witness),
    ));
    if let Some(w) = &witness {
        let image: Vec<i64> = (0..n)
            .map(|i| {
                let dot: i128 = (0..n).map(|j| p.entry(i, j) as i128 * w.y[j] as i128).sum();
                dot.rem_euclid(ell as i128) as i64
            })
            .collect();
        let expected: Vec<i64> =
            (0..n).map(|i| if i + 1 == w.axis { w.lambda } else { 0 }).collect();
        laws.push(LawCheck::check(
            "witness_solves_reflection_equation",
            image == expected && w.lambda >= 1 && w.lambda < ell,
            || format!("B*y = {:?}, expected {:?}", image, expected),
        ));
        laws.push(LawCheck::check(
            "witness_image_is_oracle_reflection",
            reflections.contains(&image),
            || format!("{:?} not among scanned reflections", image),
        ));
    } else {
        laws.push(LawCheck::pass("witness_solves_reflection_equation"));
        laws.push(LawCheck::pass("witness_image_is_oracle_reflection"));
    }
    let f_product: u128 = inv.f.iter().map(|&v| v as u128).product();
    let phi_product: u128 = inv.o_phi.iter().map(|&v| v as u128).product();
    laws.push(LawCheck::check(
        "regular_iff_order_is_product_of_f",
        regular == (inv.order_o == f_product),
        || format!("regular={} but |O|={} and prod f={}", regular, inv.order_o, f_product),
    ));
    laws.push(LawCheck::check(
        "regular_iff_order_is_product_of_generator_orders",
        regular == (inv.order_o == phi_product),
        || format!("regular={} but |O|={} and prod o_phi={}", regular, inv.order_o, phi_product),
    ));
    let f_axes: Vec<ExponentWord> = {
        let mut axes: Vec<ExponentWord> = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = inv.f[i];
                v
            })
            .collect();
        axes.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        axes
    };
    laws.push(LawCheck::check(
        "regular_iff_center_is_polynomial_on_f_powers",
        regular == (presentation.generators == f_axes),
        || format!("regular={} but generators {:?}", regular, presentation.generators),
    ));
    let f_central = residue_is_central(p, &inv.f);
    laws.push(LawCheck::check(
        "gorenstein_iff_f_word_is_central",
        gorenstein == f_central,
        || format!("gorenstein={} but direct centrality of f is {}", gorenstein, f_central),
    ));
    let unit_central = residue_is_central(p, &vec![1; n]);
    laws.push(LawCheck::check(
        "calabi_yau_iff_unit_word_is_central",
        cy == unit_central,
        || format!("cy={} but direct centrality of (1,..,1) is {}", cy, unit_central),
    ));
    let f_axes_central = (0..n).all(|i| {
        let mut axis = vec![0i64; n];
        axis[i] = inv.f[i];
        residue_is_central(p, &axis)
    });
    laws.push(LawCheck::check(
        "regular_iff_f_axis_words_central",
        regular == f_axes_central,
        || format!("regular={} but f-power axis centrality is {}", regular, f_axes_central),
    ));
    let hdet_trivial_on_closure =
        closure.iter().all(|g| g.iter().sum::<i64>() % ell == 0);
    laws.push(LawCheck::check(
        "hdet_trivial_on_generators_iff_on_closure",
        cy == hdet_trivial_on_closure,
        || {
            format!(
                "row sums vanish = {} but exponent trace vanishes on closure = {}",
                cy, hdet_trivial_on_closure
            )
        },
    ));
    let crosschecks = crosscheck_low_n(p)?;
    laws.push(LawCheck::check(
        "low_rank_crosschecks_agree",
        crosschecks.iter().all(|c| c.agreement != Agreement::Disagrees),
        || {
            let bad: Vec<&str> = crosschecks
                .iter()
                .filter(|c| c.agreement == Agreement::Disagrees)
                .map(|c| c.name.as_str())
                .collect();
            format!("disagreeing crosschecks: {}", bad.join(", "))
        },
    ));
    laws.push(LawCheck::check(
        "calabi_yau_iff_gorenstein_and_small",
        cy == (gorenstein && small),
        || format!("cy={} gorenstein={} small={}", cy, gorenstein, small),
    ));
    laws.push(LawCheck::check(
        "calabi_yau_excludes_regular",
        !(cy && regular),
        || "ring flagged both Calabi-Yau and regular".to_string(),
    ));
    laws.push(LawCheck::check(
        "regular_implies_gorenstein",
        !regular || gorenstein,
        || "ring flagged regular but not Gorenstein".to_string(),
    ));
    laws.push(LawCheck::check(
        "group_exponent_order_divides_image_order",
        inv.order_o % inv.order_h == 0,
        || format!("|O|={} not divisible by |H|={}", inv.order_o, inv.order_h),
    ));
    laws.push(LawCheck::check(
        "series_expansion_matches_degree_scan",
        expansion == degree_counts,
        || format!("series expansion {:?} vs scan {:?}", expansion, degree_counts),
    ));
    let generators_central =
        presentation.generators.iter().all(|g| residue_is_central(p, g));
    laws.push(LawCheck::check(
        "generators_are_central",
        generators_central,
        || "some listed generator fails the direct centrality test".to_string(),
    ));
    let residues_covered = residues
        .iter()
        .filter(|r| r.iter().any(|&c| c != 0))
        .all(|r| {
            presentation
                .generators
                .iter()
                .any(|g| g.iter().zip(r.iter()).all(|(a, b)| a <= b))
        });
    laws.push(LawCheck::check(
        "every_residue_dominated_by_generator",
        residues_covered,
        || "some nonzero central residue dominates no generator".to_string(),
    ));
    Ok(laws)
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
    fn closure_size_of_example_ring() {
        assert_eq!(group_closure(&example_ring(), 10_000).unwrap().len(), 144);
    }

    #[test]
    fn closure_budget_is_reported() {
        let err = group_closure(&example_ring(), 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { task: "group closure", .. }));
    }

    #[test]
    fn reflections_of_hypersurface_ring() {
        let refl = oracle_reflections(&hypersurface_ring(5), 10_000).unwrap();
        // The image is generated by (0,0,1), (0,0,4), (4,1,0): the single
        // nonzero-coordinate elements are the powers of (0,0,1).
        assert_eq!(refl.len(), 4);
        assert!(refl.iter().all(|v| v[0] == 0 && v[1] == 0 && v[2] != 0));
    }

    #[test]
    fn no_reflections_in_cy_ring() {
        let p = SkewParams::new(3, vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap();
        assert!(oracle_reflections(&p, 10_000).unwrap().is_empty());
    }

    #[test]
    fn exhaustive_residues_match_lattice_route() {
        for p in [example_ring(), hypersurface_ring(5)] {
            let scanned = oracle_central_residues(&p, 100_000).unwrap();
            let lattice = crate::zlinalg::kernel_lattice(&p).unwrap().residues(1000).unwrap();
            assert_eq!(scanned, lattice);
        }
    }

    #[test]
    fn brute_force_f_of_example_ring() {
        assert_eq!(oracle_f(&example_ring(), 100_000).unwrap(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn per_prime_f_assembly() {
        let p =
            SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]]).unwrap();
        assert_eq!(oracle_f_per_prime(&p, 100_000).unwrap(), vec![3, 6, 4]);
        assert_eq!(oracle_f(&p, 100_000).unwrap(), vec![3, 6, 4]);
    }

    #[test]
    fn degree_counts_of_hypersurface_ring() {
        let counts = oracle_degree_counts(&hypersurface_ring(5), 5, 100_000).unwrap();
        assert_eq!(counts, vec![1, 0, 1, 0, 1, 3]);
    }

    #[test]
    fn factorization_helper() {
        assert_eq!(prime_power_factorization(24), vec![(2, 8), (3, 3)]);
        assert_eq!(prime_power_factorization(7), vec![(7, 7)]);
        assert_eq!(prime_power_factorization(360), vec![(2, 8), (3, 9), (5, 5)]);
    }

    #[test]
    fn all_laws_hold_on_pinned_rings() {
        let rings = vec![
            example_ring(),
            hypersurface_ring(2),
            hypersurface_ring(5),
            SkewParams::new(3, vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap(),
            SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]]).unwrap(),
            SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, 3], vec![-6, -3, 0]]).unwrap(),
            SkewParams::new(30, vec![vec![0, 15, 10], vec![-15, 0, 6], vec![-10, -6, 0]])
                .unwrap(),
            SkewParams::new(4, vec![vec![0, 1], vec![-1, 0]]).unwrap(),
        ];
        for p in rings {
            let laws = verify_equivalences(&p, 2_000_000).unwrap();
            assert!(laws.len() >= 15);
            for law in &laws {
                assert!(law.holds, "law {} failed: {:?}", law.law, law.detail);
            }
        }
    }

    #[test]
    fn random_instances_satisfy_all_laws() {
        let mut rng = seeded_rng(0xBA5E);
        for _ in 0..40 {
            let p = random_params(&mut rng);
            let laws = verify_equivalences(&p, DEFAULT_ORACLE_BUDGET).unwrap();
            for law in &laws {
                assert!(
                    law.holds,
                    "law {} failed on ell={} b={:?}: {:?}",
                    law.law,
                    p.ell(),
                    p.b(),
                    law.detail
                );
            }
        }
    }

    #[test]
    fn random_params_are_deterministic_per_seed() {
        let a: Vec<(i64, Vec<Vec<i64>>)> = {
            let mut rng = seeded_rng(42);
            (0..5).map(|_| random_params(&mut rng)).map(|p| (p.ell(), p.b().to_vec())).collect()
        };
        let b: Vec<(i64, Vec<Vec<i64>>)> = {
            let mut rng = seeded_rng(42);
            (0..5).map(|_| random_params(&mut rng)).map(|p| (p.ell(), p.b().to_vec())).collect()
        };
        assert_eq!(a, b);
    }
}
