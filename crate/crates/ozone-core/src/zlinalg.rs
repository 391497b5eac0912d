//! Exact integer linear algebra over `Z` and `Z/ell`.
//!
//! Provides the Smith normal form with unimodular transforms, pfaffians with
//! their adjugate, and the central lattice `K = {u : B u = 0 mod ell}` of a
//! ring, from which every downstream invariant is read off. All arithmetic
//! uses 128-bit signed integers with explicit overflow checks; there is no
//! floating point anywhere.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::params::{ExponentWord, SkewParams};

/// Hard cap on the rank accepted by the pfaffian routines; the subset
/// memoization table is indexed by a 16-bit mask.
pub const PFAFFIAN_MAX_N: usize = 12;

fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("integer addition overflowed"))
}

fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("integer multiplication overflowed"))
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::BadDimension("matrix must be nonempty".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadDimension("ragged matrix".into()));
        }
        Ok(IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = cadd(out.get(i, j), cmul(a, other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Determinant by the Bareiss fraction-free elimination. Every division
    /// in the scheme is exact, so the result is the exact integer value.
    pub fn determinant(&self) -> Result<i128> {
        if self.rows != self.cols {
            return Err(Error::BadDimension("determinant needs a square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n.saturating_sub(1) {
            if m.get(k, k) == 0 {
                match (k + 1..n).find(|&i| m.get(i, k) != 0) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = cmul(m.get(k, k), m.get(i, j))?
                        .checked_sub(cmul(m.get(i, k), m.get(k, j))?)
                        .ok_or(Error::Overflow("integer subtraction overflowed"))?;
                    m.set(i, j, num / prev);
                }
            }
            for i in (k + 1)..n {
                m.set(i, k, 0);
            }
            prev = m.get(k, k);
        }
        Ok(sign * m.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            self.set(r, j, -v);
        }
    }

    /// Rows `(r1, r2) <- (a*r1 + b*r2, c*r1 + d*r2)`. The caller keeps
    /// `a*d - b*c = ±1` so the operation is unimodular.
    fn row_combine(&mut self, r1: usize, r2: usize, a: i128, b: i128, c: i128, d: i128) -> Result<()> {
        for j in 0..self.cols {
            let x = self.get(r1, j);
            let y = self.get(r2, j);
            self.set(r1, j, cadd(cmul(a, x)?, cmul(b, y)?)?);
            self.set(r2, j, cadd(cmul(c, x)?, cmul(d, y)?)?);
        }
        Ok(())
    }

    /// Columns `(c1, c2) <- (a*c1 + b*c2, c*c1 + d*c2)`.
    fn col_combine(&mut self, c1: usize, c2: usize, a: i128, b: i128, c: i128, d: i128) -> Result<()> {
        for i in 0..self.rows {
            let x = self.get(i, c1);
            let y = self.get(i, c2);
            self.set(i, c1, cadd(cmul(a, x)?, cmul(b, y)?)?);
            self.set(i, c2, cadd(cmul(c, x)?, cmul(d, y)?)?);
        }
        Ok(())
    }
}

/// Smith normal form `L * M * R = diag(d)` with unimodular `L`, `R`,
/// nonnegative `d`, and the divisibility chain `d[k] | d[k+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: Vec<i128>,
    pub l: IntMat,
    pub r: IntMat,
}

/// Computes the Smith normal form by repeated gcd pivoting: the pivot is the
/// entry of minimal nonzero absolute value in the trailing submatrix, with
/// ties broken by the lowest `(row, col)` pair, which makes the decomposition
/// deterministic. Bezout row/column steps clear the pivot cross, and a final
/// sweep folds non-divisible trailing entries into the pivot so the chain
/// condition holds by construction.
pub fn smith_normal_form(m: &IntMat) -> Result<SmithDecomposition> {
    let rows = m.rows();
    let cols = m.cols();
    let t = rows.min(cols);
    let mut a = m.clone();
    let mut l = IntMat::identity(rows);
    let mut r = IntMat::identity(cols);

    'diag: for k in 0..t {
        loop {
            let Some((pi, pj)) = min_abs_pivot(&a, k) else {
                break 'diag;
            };
            a.swap_rows(k, pi);
            l.swap_rows(k, pi);
            a.swap_cols(k, pj);
            r.swap_cols(k, pj);

            for i in (k + 1)..rows {
                let v = a.get(i, k);
                if v == 0 {
                    continue;
                }
                let p = a.get(k, k);
                if v % p == 0 {
                    let q = v / p;
                    a.row_combine(k, i, 1, 0, -q, 1)?;
                    l.row_combine(k, i, 1, 0, -q, 1)?;
                } else {
                    let e = p.extended_gcd(&v);
                    a.row_combine(k, i, e.x, e.y, -(v / e.gcd), p / e.gcd)?;
                    l.row_combine(k, i, e.x, e.y, -(v / e.gcd), p / e.gcd)?;
                }
            }
            for j in (k + 1)..cols {
                let v = a.get(k, j);
                if v == 0 {
                    continue;
                }
                let p = a.get(k, k);
                if v % p == 0 {
                    let q = v / p;
                    a.col_combine(k, j, 1, 0, -q, 1)?;
                    r.col_combine(k, j, 1, 0, -q, 1)?;
                } else {
                    let e = p.extended_gcd(&v);
                    a.col_combine(k, j, e.x, e.y, -(v / e.gcd), p / e.gcd)?;
                    r.col_combine(k, j, e.x, e.y, -(v / e.gcd), p / e.gcd)?;
                }
            }

            let cross_clean = (k + 1..rows).all(|i| a.get(i, k) == 0)
                && (k + 1..cols).all(|j| a.get(k, j) == 0);
            if !cross_clean {
                continue;
            }

            let p = a.get(k, k);
            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| a.get(i, j) % p != 0));
            match offender {
                Some(i) => {
                    // Folding the offending row into the pivot row lets the
                    // next gcd pass shrink the pivot to a common divisor.
                    a.row_combine(k, i, 1, 1, 0, 1)?;
                    l.row_combine(k, i, 1, 1, 0, 1)?;
                }
                None => break,
            }
        }
    }

    for k in 0..t {
        if a.get(k, k) < 0 {
            a.negate_row(k);
            l.negate_row(k);
        }
    }

    let d: Vec<i128> = (0..t).map(|k| a.get(k, k)).collect();
    debug_assert!(chain_ok(&d), "divisibility chain violated: {d:?}");
    Ok(SmithDecomposition { d, l, r })
}

fn chain_ok(d: &[i128]) -> bool {
    d.windows(2).all(|w| (w[0] == 0 && w[1] == 0) || (w[0] != 0 && w[1] % w[0] == 0))
}

fn min_abs_pivot(a: &IntMat, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = a.get(i, j).abs();
            if v != 0 && best.map_or(true, |(bv, _, _)| v < bv) {
                best = Some((v, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn check_integer_skew(m: &IntMat) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::BadDimension("pfaffian needs a square matrix".into()));
    }
    for i in 0..m.rows() {
        if m.get(i, i) != 0 {
            return Err(Error::NonzeroDiagonal(format!(
                "m[{i}][{i}] = {} must be 0 for a skew-symmetric matrix",
                m.get(i, i)
            )));
        }
        for j in (i + 1)..m.cols() {
            if m.get(j, i) != -m.get(i, j) {
                return Err(Error::NotSkewSymmetric(format!(
                    "m[{j}][{i}] = {} but -m[{i}][{j}] = {}",
                    m.get(j, i),
                    -m.get(i, j)
                )));
            }
        }
    }
    Ok(())
}

/// Pfaffian of an integer skew-symmetric matrix, by expansion along the
/// lowest retained index with memoization over index subsets. Zero in odd
/// rank; `pf(M)^2 = det(M)` in even rank.
pub fn pfaffian(m: &IntMat) -> Result<i128> {
    check_integer_skew(m)?;
    let n = m.rows();
    if n > PFAFFIAN_MAX_N {
        return Err(Error::BadDimension(format!(
            "pfaffian is capped at n = {PFAFFIAN_MAX_N}, got {n}"
        )));
    }
    let mut memo = HashMap::new();
    pf_subset(m, ((1u32 << n) - 1) as u16, &mut memo)
}

fn pf_subset(m: &IntMat, mask: u16, memo: &mut HashMap<u16, i128>) -> Result<i128> {
    if mask == 0 {
        return Ok(1);
    }
    if let Some(&v) = memo.get(&mask) {
        return Ok(v);
    }
    let i0 = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i0);
    let mut acc = 0i128;
    let mut sign = 1i128;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let c = m.get(i0, j);
        if c != 0 {
            let sub = pf_subset(m, rest & !(1 << j), memo)?;
            acc = cadd(acc, cmul(sign, cmul(c, sub)?)?)?;
        }
        sign = -sign;
    }
    memo.insert(mask, acc);
    Ok(acc)
}

/// Pfaffian adjugate `P` of an even-rank skew-symmetric matrix, satisfying
/// `P * M = M * P = pf(M) * I`. Entries are signed pfaffians of the
/// submatrices with rows/columns `i` and `j` deleted; the contract is checked
/// (and the sign convention repaired per column if it ever failed) before
/// returning.
pub fn pfaffian_adjugate(m: &IntMat) -> Result<IntMat> {
    check_integer_skew(m)?;
    let n = m.rows();
    if n % 2 != 0 {
        return Err(Error::OddDimension(format!(
            "pfaffian adjugate needs even rank, got {n}"
        )));
    }
    if n > PFAFFIAN_MAX_N {
        return Err(Error::BadDimension(format!(
            "pfaffian adjugate is capped at n = {PFAFFIAN_MAX_N}, got {n}"
        )));
    }
    let full = ((1u32 << n) - 1) as u16;
    let mut memo = HashMap::new();
    let pf = pf_subset(m, full, &mut memo)?;
    let mut p = IntMat::zero(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let sub = pf_subset(m, full & !(1 << i) & !(1 << j), &mut memo)?;
            let v = if (i + j) % 2 == 0 { sub } else { -sub };
            p.set(i, j, v);
            p.set(j, i, -v);
        }
    }

    let prod = m.mul(&p)?;
    for j in 0..n {
        let column_ok = (0..n).all(|i| prod.get(i, j) == if i == j { pf } else { 0 });
        if !column_ok {
            for i in 0..n {
                let v = p.get(i, j);
                p.set(i, j, -v);
            }
        }
    }
    let left = m.mul(&p)?;
    let right = p.mul(m)?;
    let scaled_identity_ok = |q: &IntMat| {
        (0..n).all(|i| (0..n).all(|j| q.get(i, j) == if i == j { pf } else { 0 }))
    };
    assert!(
        scaled_identity_ok(&left) && scaled_identity_ok(&right),
        "pfaffian adjugate contract violated"
    );
    Ok(p)
}

/// The lattice `K = {u in Z^n : B u = 0 mod ell}` of central exponent
/// words, presented by a basis, its index in `Z^n`, and enumerable residues
/// mod `ell`.
///
/// Writing `D = L B R` for the Smith form of the signed representative and
/// `m_k = ell / gcd(d_k, ell)`, a basis of `K` is `R * diag(m_1..m_n)`:
/// substituting `u = R z` turns `B u = 0 mod ell` into the independent
/// congruences `d_k z_k = 0 mod ell`. The index `[Z^n : K] = prod m_k`
/// equals the order of the diagonal automorphism group generated by the
/// rows, and `index * residue_count = ell^n`.
#[derive(Debug, Clone)]
pub struct CentralLattice {
    ell: i64,
    basis: IntMat,
    index: u128,
    snf: SmithDecomposition,
    residue_gs: Vec<i64>,
}

impl CentralLattice {
    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// Basis of the lattice; column `k` is the `k`-th generator.
    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    /// `[Z^n : K]`, the order of the group of diagonal automorphisms.
    pub fn index(&self) -> u128 {
        self.index
    }

    /// Smith decomposition of the signed representative of `B`.
    pub fn snf(&self) -> &SmithDecomposition {
        &self.snf
    }

    /// Number of residues of `K / ell*Z^n`, i.e. `ell^n / index`.
    pub fn residue_count(&self) -> u128 {
        self.residue_gs.iter().map(|&g| g as u128).product()
    }

    /// Canonical lifts in `[0, ell)^n` of `K / ell*Z^n`, sorted
    /// lexicographically. Costs `residue_count` steps, guarded by `budget`.
    pub fn residues(&self, budget: u128) -> Result<Vec<ExponentWord>> {
        let count = self.residue_count();
        if count > budget {
            return Err(Error::BudgetExceeded {
                task: "kernel residue enumeration",
                needed: count,
                budget,
            });
        }
        let n = self.residue_gs.len();
        let ell = self.ell as i128;
        let m: Vec<i128> = self.residue_gs.iter().map(|&g| ell / g as i128).collect();
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0i64; n];
        loop {
            let mut u = vec![0i64; n];
            for (i, slot) in u.iter_mut().enumerate() {
                let mut acc = 0i128;
                for k in 0..n {
                    let z = m[k] * digits[k] as i128;
                    acc = cadd(acc, cmul(self.snf.r.get(i, k), z)?)?;
                }
                *slot = acc.rem_euclid(ell) as i64;
            }
            out.push(u);
            let mut k = n;
            loop {
                if k == 0 {
                    out.sort_unstable();
                    debug_assert_eq!(out.len() as u128, count);
                    return Ok(out);
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < self.residue_gs[k] {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    /// Per-coordinate gcd of the lattice: entry `j` is the gcd of the `j`-th
    /// coordinates of all lattice vectors. Always positive and a divisor of
    /// `ell` because `ell * e_j` lies in the lattice.
    pub fn coordinate_gcds(&self) -> Vec<i64> {
        let n = self.basis.rows();
        (0..n)
            .map(|j| {
                let mut g: i128 = 0;
                for k in 0..n {
                    g = g.gcd(&self.basis.get(j, k));
                }
                debug_assert!(g > 0 && self.ell as i128 % g == 0);
                g as i64
            })
            .collect()
    }
}

/// Computes the central lattice of a ring. See [`CentralLattice`].
pub fn kernel_lattice(p: &SkewParams) -> Result<CentralLattice> {
    let n = p.n();
    let ell = p.ell() as i128;
    let snf = smith_normal_form(&p.signed_matrix())?;
    let mut diag = IntMat::zero(n, n);
    let mut gs = Vec::with_capacity(n);
    let mut index: u128 = 1;
    for k in 0..n {
        let g = snf.d[k].gcd(&ell);
        let m = ell / g;
        gs.push(g as i64);
        index = index
            .checked_mul(m as u128)
            .ok_or(Error::Overflow("lattice index overflowed"))?;
        diag.set(k, k, m);
    }
    let basis = snf.r.mul(&diag)?;
    Ok(CentralLattice { ell: p.ell(), basis, index, snf, residue_gs: gs })
}

/// Order of the group of diagonal automorphisms generated by the matrix
/// rows, `ell^n / |K / ell*Z^n|`.
pub fn image_order(p: &SkewParams) -> Result<u128> {
    Ok(kernel_lattice(p)?.index())
}

/// Whether `x^u` is central, i.e. `B u = 0 mod ell` coordinate-wise. Defined
/// for any integer word; a monomial additionally needs `u` nonnegative.
pub fn is_central(p: &SkewParams, u: &[i64]) -> Result<bool> {
    let n = p.n();
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.len() });
    }
    let ell = p.ell() as i128;
    for i in 0..n {
        let mut acc = 0i128;
        for j in 0..n {
            acc = cadd(acc, cmul(p.entry(i, j) as i128, u[j] as i128)?)?;
        }
        if acc.rem_euclid(ell) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
