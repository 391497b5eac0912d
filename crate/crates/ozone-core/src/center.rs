//! The center of a ring: its minimal monomial generators (a Hilbert basis of
//! the central lattice intersected with the nonnegative orthant) and its
//! exact Hilbert series as a rational function.
//!
//! Every central monomial decomposes uniquely as a residue lift in
//! `[0, ell)^n` plus an `ell`-multiple of each axis, which gives the raw
//! series `sum_r t^|r| / (1 - t^ell)^n` directly from the residue
//! enumeration. The reduced form cancels the polynomial gcd of numerator
//! and expanded denominator; since the denominator factors into cyclotomic
//! polynomials `Phi_d` with `d | ell`, the cancellation runs over those
//! factors with exact integer division only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{ExponentWord, SkewParams};
use crate::zlinalg::kernel_lattice;

/// Default step budget for residue enumeration and series expansion.
pub const DEFAULT_CENTER_BUDGET: u128 = 100_000;

/// Hilbert series of the center as a rational function in one variable.
///
/// The raw form is `numerator / prod_k (1 - t^(denominator_exponents[k]))`
/// with the numerator listed by ascending degree. `reduced` is the same
/// function in lowest terms with an expanded denominator, normalized so both
/// constant terms are `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    pub numerator: Vec<i64>,
    pub denominator_exponents: Vec<i64>,
    pub reduced: ReducedSeries,
}

/// A rational function in lowest terms, both polynomials by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedSeries {
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

/// Minimal generators plus the Hilbert series of the center.
///
/// `numerator_is_cyclotomic` applies [`is_cyclotomic_product`] to the
/// reduced numerator: it is `true` exactly when the numerator factors into
/// cyclotomic polynomials whose indices do not exceed the numerator degree
/// (see that function for why the bound matters).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterPresentation {
    pub generators: Vec<ExponentWord>,
    pub series: RationalSeries,
    pub numerator_is_cyclotomic: bool,
}

/// Minimal monomial generators of the center, sorted by total degree and
/// then lexicographically.
///
/// Candidates are the nonzero kernel residue lifts together with
/// `ell * e_i`; a candidate is a generator exactly when no other candidate
/// is componentwise below it, because the difference of two lattice points
/// is again a lattice point.
pub fn center_generators(p: &SkewParams, budget: u128) -> Result<Vec<ExponentWord>> {
    let residues = kernel_lattice(p)?.residues(budget)?;
    Ok(generators_from_residues(p, &residues))
}

fn generators_from_residues(p: &SkewParams, residues: &[ExponentWord]) -> Vec<ExponentWord> {
    let n = p.n();
    let ell = p.ell();
    let mut candidates: Vec<ExponentWord> = residues
        .iter()
        .filter(|r| r.iter().any(|&v| v != 0))
        .cloned()
        .collect();
    for i in 0..n {
        let mut axis = vec![0i64; n];
        axis[i] = ell;
        candidates.push(axis);
    }
    candidates.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

    // Scanning by ascending degree keeps `minimal` an antichain: a dominator
    // has strictly smaller total degree, so it is already in the list.
    let mut minimal: Vec<ExponentWord> = Vec::new();
    'next: for c in candidates {
        for m in &minimal {
            if m.iter().zip(&c).all(|(a, b)| a <= b) {
                continue 'next;
            }
        }
        minimal.push(c);
    }
    minimal
}

/// Exact Hilbert series of the center. `budget` bounds both the residue
/// enumeration and the degree of the expanded reduced denominator.
pub fn hilbert_series(p: &SkewParams, budget: u128) -> Result<RationalSeries> {
    let residues = kernel_lattice(p)?.residues(budget)?;
    series_from_residues(p, &residues, budget)
}

fn series_from_residues(
    p: &SkewParams,
    residues: &[ExponentWord],
    budget: u128,
) -> Result<RationalSeries> {
    let n = p.n();
    let ell = p.ell();
    let den_len = (n as u128) * (ell as u128) + 1;
    if den_len > budget {
        return Err(Error::BudgetExceeded {
            task: "series denominator expansion",
            needed: den_len,
            budget,
        });
    }
    let max_deg = residues
        .iter()
        .map(|r| r.iter().sum::<i64>() as usize)
        .max()
        .unwrap_or(0);
    let mut numerator = vec![0i64; max_deg + 1];
    for r in residues {
        numerator[r.iter().sum::<i64>() as usize] += 1;
    }
    let (rnum, rden) = reduce_over_power_denominator(&numerator, ell, n)?;
    Ok(RationalSeries {
        numerator,
        denominator_exponents: vec![ell; n],
        reduced: ReducedSeries { numerator: rnum, denominator: rden },
    })
}

/// Cancels `gcd(num, (1 - t^ell)^n)` and returns the reduced pair with both
/// constant terms normalized to `+1`. The denominator factors as
/// `(-1)^n * prod_{d | ell} Phi_d^n`, so the gcd is found by dividing out
/// each cyclotomic factor as often as it divides the numerator (capped at
/// `n`), entirely in integer arithmetic.
fn reduce_over_power_denominator(num: &[i64], ell: i64, n: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let mut num = trim(num.to_vec());
    let mut den = vec![1i64];
    for d in divisors(ell) {
        let phi = cyclotomic_polynomial(d)?;
        let mut remaining = n;
        while remaining > 0 {
            match div_exact(&num, &phi)? {
                Some(q) => {
                    num = q;
                    remaining -= 1;
                }
                None => break,
            }
        }
        for _ in 0..remaining {
            den = poly_mul(&den, &phi)?;
        }
    }
    if n % 2 == 1 {
        for c in &mut den {
            *c = -*c;
        }
    }
    debug_assert!(den[0] == 1 || den[0] == -1);
    if den[0] == -1 {
        for c in &mut den {
            *c = -*c;
        }
        for c in &mut num {
            *c = -*c;
        }
    }
    Ok((num, den))
}

/// Minimal generators and series from a single residue enumeration.
pub fn center_presentation(p: &SkewParams, budget: u128) -> Result<CenterPresentation> {
    let residues = kernel_lattice(p)?.residues(budget)?;
    let generators = generators_from_residues(p, &residues);
    let series = series_from_residues(p, &residues, budget)?;
    let numerator_is_cyclotomic = is_cyclotomic_product(&series.reduced.numerator)?;
    Ok(CenterPresentation { generators, series, numerator_is_cyclotomic })
}

/// Coefficients `[c_0, ..., c_bound]` of the series expansion of the raw
/// form. The recurrence divides by the (truncated) expanded denominator, so
/// the cost is `O(bound^2)` regardless of `ell`.
pub fn expand_series(series: &RationalSeries, bound: usize) -> Result<Vec<i64>> {
    let mut den = vec![1i64];
    for &d in &series.denominator_exponents {
        let mut factor = vec![0i64; (d as usize + 1).min(bound + 2)];
        factor[0] = 1;
        if (d as usize) <= bound {
            factor[d as usize] = -1;
        }
        den = poly_mul_trunc(&den, &factor, bound)?;
    }
    let mut h = vec![0i64; bound + 1];
    for k in 0..=bound {
        let mut acc = *series.numerator.get(k).unwrap_or(&0) as i128;
        for j in 1..=k.min(den.len() - 1) {
            acc -= den[j] as i128 * h[k - j] as i128;
        }
        h[k] = i64::try_from(acc).map_err(|_| Error::Overflow("series coefficient overflowed"))?;
    }
    Ok(h)
}

/// Searches for a factorization of `p` into cyclotomic polynomials `Phi_d`
/// with index `d` at most the degree of `p`, by repeated exact division with
/// `d` ascending. The constant polynomial `1` counts as the empty product.
///
/// A `true` result is a verified factorization. A `false` result means no
/// factorization exists within that index bound; factors whose index
/// exceeds the input degree — such as `Phi_10` as the entire input — are
/// deliberately outside the search, so `false` does not rule out a
/// factorization with large indices. The bound makes the predicate a sharp
/// test for numerators built from many small factors while rejecting those
/// that only factor through high-order roots of unity.
pub fn is_cyclotomic_product(p: &[i64]) -> Result<bool> {
    let mut p = trim(p.to_vec());
    if p.is_empty() || *p.last().unwrap() != 1 {
        return Ok(false);
    }
    let d_cap = p.len() - 1;
    let mut d = 1usize;
    while p.len() > 1 {
        if d > d_cap {
            return Ok(false);
        }
        let phi = cyclotomic_polynomial(d as i64)?;
        match div_exact(&p, &phi)? {
            Some(q) => p = q,
            None => d += 1,
        }
    }
    Ok(p == vec![1])
}

/// The `d`-th cyclotomic polynomial, by ascending degree: computed as
/// `(t^d - 1) / prod_{e | d, e < d} Phi_e` with exact integer division.
pub fn cyclotomic_polynomial(d: i64) -> Result<Vec<i64>> {
    debug_assert!(d >= 1);
    let mut table: Vec<(i64, Vec<i64>)> = Vec::new();
    for e in divisors(d) {
        let mut poly = vec![0i64; e as usize + 1];
        poly[0] = -1;
        poly[e as usize] = 1;
        for (f, phi) in &table {
            if e % f == 0 {
                poly = div_exact(&poly, phi)?
                    .expect("t^e - 1 is divisible by Phi_f for every f | e");
            }
        }
        table.push((e, poly));
    }
    Ok(table.pop().expect("d divides d").1)
}

/// Expanded `prod_k (1 - t^(exps[k]))`, used to compare rational forms.
pub fn product_of_one_minus_powers(exps: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![1i64];
    for &d in exps {
        let mut factor = vec![0i64; d as usize + 1];
        factor[0] = 1;
        factor[d as usize] = -1;
        out = poly_mul(&out, &factor)?;
    }
    Ok(out)
}

/// Whether `num_a / den_a == num_b / den_b` as rational functions, decided
/// by exact cross-multiplication. Denominators are expanded polynomials.
pub fn series_equal(num_a: &[i64], den_a: &[i64], num_b: &[i64], den_b: &[i64]) -> Result<bool> {
    let left = poly_mul_wide(num_a, den_b)?;
    let right = poly_mul_wide(num_b, den_a)?;
    Ok(trim(left) == trim(right))
}

fn trim<T: Copy + PartialEq + From<u8>>(mut v: Vec<T>) -> Vec<T> {
    while v.last() == Some(&T::from(0u8)) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    poly_mul_wide(a, b)?
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("polynomial coefficient overflowed")))
        .collect()
}

fn poly_mul_wide(a: &[i64], b: &[i64]) -> Result<Vec<i128>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let term = (x as i128)
                .checked_mul(y as i128)
                .ok_or(Error::Overflow("polynomial coefficient overflowed"))?;
            out[i + j] = out[i + j]
                .checked_add(term)
                .ok_or(Error::Overflow("polynomial coefficient overflowed"))?;
        }
    }
    Ok(out)
}

fn poly_mul_trunc(a: &[i64], b: &[i64], bound: usize) -> Result<Vec<i64>> {
    let mut out = vec![0i128; bound + 1];
    for (i, &x) in a.iter().enumerate().take(bound + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(bound + 1 - i) {
            let term = (x as i128)
                .checked_mul(y as i128)
                .ok_or(Error::Overflow("polynomial coefficient overflowed"))?;
            out[i + j] = out[i + j]
                .checked_add(term)
                .ok_or(Error::Overflow("polynomial coefficient overflowed"))?;
        }
    }
    out.into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("polynomial coefficient overflowed")))
        .collect()
}

/// Exact polynomial division by a monic divisor. Returns `Ok(None)` when the
/// division leaves a remainder.
fn div_exact(num: &[i64], div: &[i64]) -> Result<Option<Vec<i64>>> {
    let num = trim(num.to_vec());
    let div = trim(div.to_vec());
    assert!(div.last() == Some(&1), "divisor must be monic");
    if num.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if num.len() < div.len() {
        return Ok(None);
    }
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let q_len = num.len() - div.len() + 1;
    let mut q = vec![0i128; q_len];
    for k in (0..q_len).rev() {
        let c = rem[k + div.len() - 1];
        if c == 0 {
            continue;
        }
        q[k] = c;
        for (i, &dv) in div.iter().enumerate() {
            let term = c
                .checked_mul(dv as i128)
                .ok_or(Error::Overflow("polynomial division overflowed"))?;
            rem[k + i] = rem[k + i]
                .checked_sub(term)
                .ok_or(Error::Overflow("polynomial division overflowed"))?;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Ok(None);
    }
    q.into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("polynomial division overflowed")))
        .collect::<std::result::Result<Vec<i64>, Error>>()
        .map(Some)
}

fn divisors(v: i64) -> Vec<i64> {
    let mut out: Vec<i64> = (1..=v).filter(|d| v % d == 0).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn hypersurface_ring(ell: i64) -> SkewParams {
        SkewParams::new(ell, vec![vec![0, 0, 1], vec![0, 0, -1], vec![-1, 1, 0]]).unwrap()
    }

    fn cy_ring() -> SkewParams {
        SkewParams::new(3, vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).unwrap()
    }

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

    #[test]
    fn generators_of_rank2_ring() {
        let p = SkewParams::new(4, vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(
            center_generators(&p, 100).unwrap(),
            vec![vec![0, 4], vec![4, 0]]
        );
    }

    #[test]
    fn generators_of_cy_ring() {
        assert_eq!(
            center_generators(&cy_ring(), 100).unwrap(),
            vec![vec![0, 0, 3], vec![0, 3, 0], vec![1, 1, 1], vec![3, 0, 0]]
        );
    }

    #[test]
    fn generators_of_hypersurface_ring() {
        assert_eq!(
            center_generators(&hypersurface_ring(5), 100).unwrap(),
            vec![vec![1, 1, 0], vec![0, 0, 5], vec![0, 5, 0], vec![5, 0, 0]]
        );
    }

    #[test]
    fn generators_of_example_ring() {
        assert_eq!(
            center_generators(&example_ring(), 100).unwrap(),
            vec![
                vec![0, 0, 0, 2],
                vec![0, 0, 6, 0],
                vec![0, 6, 0, 0],
                vec![6, 0, 0, 0],
                vec![2, 4, 2, 0],
                vec![4, 2, 4, 0],
            ]
        );
    }

    #[test]
    fn generator_budget_is_enforced() {
        assert!(matches!(
            center_generators(&hypersurface_ring(7), 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn series_of_hypersurface_ring() {
        let s = hilbert_series(&hypersurface_ring(5), 1000).unwrap();
        assert_eq!(s.numerator, vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(s.denominator_exponents, vec![5, 5, 5]);
        // Same rational function as (1 - t^10) / ((1 - t^2)(1 - t^5)^3).
        let target_num = product_of_one_minus_powers(&[10]).unwrap();
        let target_den = product_of_one_minus_powers(&[2, 5, 5, 5]).unwrap();
        let raw_den = product_of_one_minus_powers(&[5, 5, 5]).unwrap();
        assert!(series_equal(&s.numerator, &raw_den, &target_num, &target_den).unwrap());
        assert!(series_equal(
            &s.reduced.numerator,
            &s.reduced.denominator,
            &target_num,
            &target_den
        )
        .unwrap());
        // Reduced numerator is Phi_10; its index exceeds its degree, so the
        // cyclotomic search does not certify it.
        assert_eq!(s.reduced.numerator, vec![1, -1, 1, -1, 1]);
        assert_eq!(s.reduced.numerator[0], 1);
        assert_eq!(s.reduced.denominator[0], 1);
        assert!(!is_cyclotomic_product(&s.reduced.numerator).unwrap());
    }

    #[test]
    fn series_expansion_counts_central_monomials() {
        let s = hilbert_series(&hypersurface_ring(5), 1000).unwrap();
        assert_eq!(expand_series(&s, 5).unwrap(), vec![1, 0, 1, 0, 1, 3]);
        let geom = RationalSeries {
            numerator: vec![1],
            denominator_exponents: vec![1, 1],
            reduced: ReducedSeries { numerator: vec![1], denominator: vec![1, -2, 1] },
        };
        assert_eq!(expand_series(&geom, 3).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn presentation_of_regular_ring_is_polynomial() {
        let p = SkewParams::new(4, vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let c = center_presentation(&p, 1000).unwrap();
        assert_eq!(c.generators, vec![vec![0, 4], vec![4, 0]]);
        assert_eq!(c.series.numerator, vec![1]);
        assert_eq!(c.series.reduced.numerator, vec![1]);
        assert!(c.numerator_is_cyclotomic);
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of magnitude 2.
        let phi105 = cyclotomic_polynomial(105).unwrap();
        assert_eq!(phi105.len(), 49);
        assert!(phi105.iter().any(|&c| c == -2));
    }

    #[test]
    fn cyclotomic_product_detection() {
        // The empty product and factorizations into small-index factors.
        assert!(is_cyclotomic_product(&[1]).unwrap());
        assert!(is_cyclotomic_product(&[-1, 1]).unwrap()); // Phi_1
        assert!(is_cyclotomic_product(&[-1, 0, 1]).unwrap()); // Phi_1 Phi_2
        assert!(is_cyclotomic_product(&[1, 2, 1]).unwrap()); // Phi_2^2
        let t4_minus_1 = product_of_one_minus_powers(&[4])
            .unwrap()
            .iter()
            .map(|c| -c)
            .collect::<Vec<i64>>();
        assert!(is_cyclotomic_product(&t4_minus_1).unwrap()); // Phi_1 Phi_2 Phi_4

        // Factors whose index exceeds the degree are outside the search.
        assert!(!is_cyclotomic_product(&cyclotomic_polynomial(10).unwrap()).unwrap());
        assert!(!is_cyclotomic_product(&[1, 1, 1, 1, 1]).unwrap()); // Phi_5 alone
        let phi5_phi10 = poly_mul(
            &cyclotomic_polynomial(5).unwrap(),
            &cyclotomic_polynomial(10).unwrap(),
        )
        .unwrap();
        assert!(!is_cyclotomic_product(&phi5_phi10).unwrap()); // needs Phi_10 > deg 8

        // Not cyclotomic at all.
        assert!(!is_cyclotomic_product(&[1, 1, 0, 1]).unwrap());
        assert!(!is_cyclotomic_product(&[2, 1]).unwrap());
        assert!(!is_cyclotomic_product(&[1, 2, 1, 1]).unwrap());
        // (1 + t^13)(1 + t^18): the tail factors Phi_26 and Phi_36 exceed
        // the degree bound after the small factors divide out.
        let mut quadrinomial = vec![0i64; 32];
        for d in [0usize, 13, 18, 31] {
            quadrinomial[d] = 1;
        }
        assert!(!is_cyclotomic_product(&quadrinomial).unwrap());
    }

    #[test]
    fn expansion_of_example_ring_matches_degrees_of_residues() {
        let s = hilbert_series(&example_ring(), 1000).unwrap();
        // Nine residues at degrees 0, 2, 4, 8, 10, 10, 12, 12, 14.
        assert_eq!(s.numerator.iter().sum::<i64>(), 9);
        assert_eq!(s.numerator[10], 2);
        let h = expand_series(&s, 8).unwrap();
        assert_eq!(h[0], 1);
        assert_eq!(h[2], 1); // the degree-2 residue alone
        assert_eq!(h[6], 4); // zero residue shifted by 6 along each axis
        assert_eq!(h[8], 5); // degree-2 residue shifted four ways, plus the degree-8 residue
    }

    // Independent reduction route: polynomial gcd over Q by the Euclidean
    // algorithm, then primitive integer normalization.
    fn rational_gcd_reduction(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        type Q = BigRational;
        fn to_q(p: &[i64]) -> Vec<Q> {
            p.iter().map(|&c| Q::from(BigInt::from(c))).collect()
        }
        fn trim_q(mut p: Vec<Q>) -> Vec<Q> {
            while p.last().map_or(false, Zero::is_zero) {
                p.pop();
            }
            p
        }
        fn rem_q(a: &[Q], b: &[Q]) -> Vec<Q> {
            let mut r = a.to_vec();
            while r.len() >= b.len() && !r.is_empty() {
                let scale = r.last().unwrap() / b.last().unwrap();
                let shift = r.len() - b.len();
                for (i, c) in b.iter().enumerate() {
                    let v = r[shift + i].clone() - c * scale.clone();
                    r[shift + i] = v;
                }
                r = trim_q(r);
                if r.len() < b.len() {
                    break;
                }
            }
            r
        }
        fn div_q(a: &[Q], b: &[Q]) -> Vec<Q> {
            let mut r = a.to_vec();
            let mut q = vec![Q::zero(); a.len() - b.len() + 1];
            for k in (0..q.len()).rev() {
                let c = r[k + b.len() - 1].clone() / b.last().unwrap();
                q[k] = c.clone();
                for (i, d) in b.iter().enumerate() {
                    let v = r[k + i].clone() - d * c.clone();
                    r[k + i] = v;
                }
            }
            assert!(r.iter().all(Zero::is_zero));
            q
        }
        let (mut r0, mut r1) = (trim_q(to_q(num)), trim_q(to_q(den)));
        while !r1.is_empty() {
            let r = rem_q(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        // Normalize the gcd to a primitive integer polynomial.
        let lcm = r0
            .iter()
            .fold(BigInt::one(), |acc, c| &acc / acc.gcd(c.denom()) * c.denom());
        let ints: Vec<BigInt> = r0.iter().map(|c| (c * &lcm).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut g: Vec<Q> = ints.iter().map(|c| Q::from(c / &content)).collect();
        if g.last().unwrap() < &Q::zero() {
            for c in &mut g {
                *c = -c.clone();
            }
        }
        let to_i64 = |p: Vec<Q>| -> Vec<i64> {
            p.iter()
                .map(|c| {
                    assert!(c.denom().is_one());
                    let v: BigInt = c.to_integer();
                    i64::try_from(&v).unwrap()
                })
                .collect()
        };
        let mut rnum = to_i64(div_q(&trim_q(to_q(num)), &g));
        let mut rden = to_i64(div_q(&trim_q(to_q(den)), &g));
        if rden[0] < 0 {
            for c in rnum.iter_mut().chain(rden.iter_mut()) {
                *c = -*c;
            }
        }
        (rnum, rden)
    }

    #[test]
    fn reduction_matches_rational_gcd_route() {
        for p in [
            hypersurface_ring(5),
            hypersurface_ring(3),
            cy_ring(),
            example_ring(),
            SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]]).unwrap(),
            SkewParams::new(4, vec![vec![0, 1], vec![-1, 0]]).unwrap(),
        ] {
            let s = hilbert_series(&p, 100_000).unwrap();
            let den = product_of_one_minus_powers(&s.denominator_exponents).unwrap();
            let (rnum, rden) = rational_gcd_reduction(&s.numerator, &den);
            assert_eq!(s.reduced.numerator, rnum);
            assert_eq!(s.reduced.denominator, rden);
        }
    }
}
