//! Ring parameters: validation, normalization, and input parsing.
//!
//! A ring is encoded by a modulus `ell` and an `n x n` integer matrix `b` of
//! skew exponents: the generator relations read `x_j x_i = p_ij x_i x_j` with
//! `p_ij = xi^(b_ij)` for a fixed primitive `ell`-th root of unity `xi`.
//! All arithmetic happens on exponents mod `ell`; no root of unity is ever
//! materialized, so every computation downstream is exact.

use num_integer::Integer;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::zlinalg::IntMat;

/// Monomial exponent word in `N^n`.
pub type ExponentWord = Vec<i64>;

/// Exponent word of a group element `phi_1^(u_1) ... phi_n^(u_n)`, in `Z^n`.
pub type GroupWord = Vec<i64>;

/// Exclusive cap on `ell` and on the absolute value of raw matrix entries.
pub const INPUT_CAP: i64 = 1 << 31;

/// Validated parameters of a skew polynomial ring at a root of unity.
///
/// Invariants, maintained by construction:
/// * `n >= 2` and `ell >= 2`;
/// * entries lie in `[0, ell)`, the diagonal is zero, and
///   `b[j][i] == (ell - b[i][j]) % ell`;
/// * `gcd({b[i][j]}, ell) == 1`, i.e. `ell` is minimal for this matrix.
///
/// Construction goes through [`validate_and_normalize`], which reduces
/// entries mod `ell` and divides out a common factor of all entries and
/// `ell`, so two encodings of the same ring land on the same value.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct SkewParams {
    n: usize,
    ell: i64,
    b: Vec<Vec<i64>>,
}

/// Loose mirror of [`SkewParams`] used for deserialization and file input.
/// `n` is optional; when present it must match the matrix dimension.
#[derive(Debug, Clone, Deserialize)]
struct RawParams {
    #[serde(default)]
    n: Option<usize>,
    ell: i64,
    b: Vec<Vec<i64>>,
}

impl TryFrom<RawParams> for SkewParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        if let Some(n) = raw.n {
            if n != raw.b.len() {
                return Err(Error::BadDimension(format!(
                    "declared n = {n} but the matrix has {} rows",
                    raw.b.len()
                )));
            }
        }
        validate_and_normalize(raw.ell, raw.b)
    }
}

impl Serialize for SkewParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Canon<'a> {
            n: usize,
            ell: i64,
            b: &'a [Vec<i64>],
        }
        Canon { n: self.n, ell: self.ell, b: &self.b }.serialize(serializer)
    }
}

/// Checks skew-symmetry mod `ell` and the zero diagonal, reduces entries to
/// `[0, ell)`, and divides out `g = gcd({b_ij}, ell)` so that the returned
/// modulus is minimal. Idempotent: feeding the result back returns it
/// unchanged.
pub fn validate_and_normalize(ell: i64, b: Vec<Vec<i64>>) -> Result<SkewParams> {
    let n = b.len();
    if n < 2 {
        return Err(Error::BadDimension(format!("need n >= 2 generators, got {n}")));
    }
    for (i, row) in b.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadDimension(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }
    if ell < 1 {
        return Err(Error::BadDimension(format!("ell must be positive, got {ell}")));
    }
    if ell == 1 {
        return Err(Error::CommutativeRing { ell });
    }
    if ell >= INPUT_CAP {
        return Err(Error::Overflow("ell exceeds the 2^31 input cap"));
    }
    if b.iter().flatten().any(|&v| v.abs() >= INPUT_CAP) {
        return Err(Error::Overflow("a matrix entry exceeds the 2^31 input cap"));
    }

    // Reduce to [0, ell) before the structural checks so that any integer
    // representative of the same residue matrix is accepted.
    let reduced: Vec<Vec<i64>> = b
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(ell)).collect())
        .collect();

    for i in 0..n {
        if reduced[i][i] != 0 {
            return Err(Error::NonzeroDiagonal(format!(
                "b[{i}][{i}] = {} is not 0 mod {ell}",
                b[i][i]
            )));
        }
        for j in (i + 1)..n {
            let expected = (ell - reduced[i][j]).rem_euclid(ell);
            if reduced[j][i] != expected {
                return Err(Error::NotSkewSymmetric(format!(
                    "b[{j}][{i}] = {} but -b[{i}][{j}] = {expected} mod {ell}",
                    b[j][i]
                )));
            }
        }
    }

    let mut g = ell;
    for row in &reduced {
        for &v in row {
            g = g.gcd(&v);
        }
    }
    if g == ell {
        return Err(Error::CommutativeRing { ell });
    }

    let (ell, b) = if g > 1 {
        let ell = ell / g;
        let b = reduced
            .iter()
            .map(|row| row.iter().map(|&v| v / g).collect())
            .collect();
        (ell, b)
    } else {
        (ell, reduced)
    };

    Ok(SkewParams { n, ell, b })
}

impl SkewParams {
    /// Shorthand for [`validate_and_normalize`].
    pub fn new(ell: i64, b: Vec<Vec<i64>>) -> Result<Self> {
        validate_and_normalize(ell, b)
    }

    /// Builds a ring from the strict upper triangle in row-major order
    /// `(b_12, b_13, ..., b_1n, b_23, ...)`; the lower triangle is mirrored
    /// with the opposite sign.
    pub fn from_upper(ell: i64, n: usize, upper: &[i64]) -> Result<Self> {
        let need = n * n.saturating_sub(1) / 2;
        if upper.len() != need {
            return Err(Error::DimensionMismatch { expected: need, found: upper.len() });
        }
        let mut b = vec![vec![0i64; n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = *it.next().expect("length checked");
                b[i][j] = v;
                b[j][i] = -v;
            }
        }
        validate_and_normalize(ell, b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// Canonical matrix with entries in `[0, ell)`.
    pub fn b(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.b[i]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        self.b.iter().map(|row| row[j]).collect()
    }

    /// Strict upper triangle in row-major order.
    pub fn upper_triangle(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                out.push(self.b[i][j]);
            }
        }
        out
    }

    /// The signed integer representative with `m[i][j] = b_ij` for `i < j`,
    /// `m[j][i] = -b_ij`, and zero diagonal. This is the matrix fed to the
    /// integer linear algebra; it agrees with the canonical form mod `ell`.
    pub fn signed_matrix(&self) -> IntMat {
        let mut m = IntMat::zero(self.n, self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                m.set(i, j, self.b[i][j] as i128);
                m.set(j, i, -(self.b[i][j] as i128));
            }
        }
        m
    }

    /// Row sums mod `ell`, one per generator.
    pub fn row_sums_mod_ell(&self) -> Vec<i64> {
        self.b
            .iter()
            .map(|row| row.iter().fold(0i64, |acc, &v| (acc + v).rem_euclid(self.ell)))
            .collect()
    }
}

/// Parses ring parameters from either supported text form:
///
/// * JSON: `{"ell": 6, "b": [[0, 1], [-1, 0]]}` (an optional `"n"` field is
///   checked against the matrix);
/// * plain text: a line `ell=<int>` followed by `n` whitespace-separated
///   matrix rows. Blank lines and lines starting with `#` are ignored.
pub fn parse_input(text: &str) -> Result<SkewParams> {
    if text.trim_start().starts_with('{') {
        let raw: RawParams = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("invalid JSON input: {e}")))?;
        return SkewParams::try_from(raw);
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let ell = head
        .strip_prefix("ell")
        .and_then(|rest| rest.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected a leading `ell=<int>` line, got `{head}`")))?
        .trim()
        .parse::<i64>()
        .map_err(|e| Error::Parse(format!("invalid ell value in `{head}`: {e}")))?;
    let b = lines
        .map(|line| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|e| Error::Parse(format!("invalid matrix entry `{tok}`: {e}")))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    validate_and_normalize(ell, b)
}

/// Parses an inline matrix: rows separated by `;`, entries by `,` or spaces.
pub fn parse_inline_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|e| Error::Parse(format!("invalid matrix entry `{tok}`: {e}")))
                })
                .collect()
        })
        .collect()
}
