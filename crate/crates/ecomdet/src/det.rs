//! Determinants of polynomial matrices.
//!
//! Three engines with different tradeoffs:
//! - `laplace`: memoized cofactor expansion over column subsets; exact, and very
//!   fast on the sparse matrices multiplication tables produce.
//! - `bareiss`: fraction-free elimination with exact polynomial division;
//!   exact, better on dense matrices.
//! - `probe`: Schwartz-Zippel nonzero testing by evaluation at random residues
//!   modulo a 62-bit prime; the only engine that scales past symbolic size.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::{mul_mod, sub_mod, Poly};

/// Modulus for probe evaluation: 2^62 - 57, prime.
pub const PROBE_PRIME: u64 = 4611686018427387847;
/// Number of independent probe trials; false-zero probability is at most
/// (d/PROBE_PRIME)^PROBE_TRIALS for a degree-d determinant.
pub const PROBE_TRIALS: u32 = 20;
/// Largest dimension the default policy resolves symbolically.
pub const EXACT_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}

/// Rectangular matrix of polynomials with element-id row/column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub row_ids: Vec<usize>,
    pub col_ids: Vec<usize>,
    entries: Vec<Poly>,
    nvars: usize,
}

impl PolyMatrix {
    /// Infers the variable universe from the first entry; an empty matrix
    /// gets universe 0, use `with_nvars` when that matters.
    pub fn new(row_ids: Vec<usize>, col_ids: Vec<usize>, entries: Vec<Poly>) -> Self {
        let nvars = entries.first().map(|p| p.nvars()).unwrap_or(0);
        Self::with_nvars(nvars, row_ids, col_ids, entries)
    }

    pub fn with_nvars(
        nvars: usize,
        row_ids: Vec<usize>,
        col_ids: Vec<usize>,
        entries: Vec<Poly>,
    ) -> Self {
        assert_eq!(entries.len(), row_ids.len() * col_ids.len());
        debug_assert!(entries.iter().all(|p| p.nvars() == nvars));
        PolyMatrix { row_ids, col_ids, entries, nvars }
    }

    pub fn rows(&self) -> usize {
        self.row_ids.len()
    }

    pub fn cols(&self) -> usize {
        self.col_ids.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols() + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Submatrix by row/column positions, keeping their labels.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix::with_nvars(
            self.nvars,
            rows.iter().map(|&r| self.row_ids[r]).collect(),
            cols.iter().map(|&c| self.col_ids[c]).collect(),
            entries,
        )
    }

    fn require_square(&self) -> Result<usize, DetError> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(DetError::NotSquare { rows: self.rows(), cols: self.cols() })
        }
    }

    fn nvars(&self) -> usize {
        self.nvars
    }
}

/// Memoized cofactor expansion. Rows are pre-sorted by sparsity (tracking the
/// permutation parity) so zero entries prune the recursion early; subproblems
/// are keyed by the set of unused columns.
pub fn laplace(m: &PolyMatrix) -> Result<Poly, DetError> {
    Ok(laplace_within(m, usize::MAX)?.expect("unlimited budget never trips"))
}

/// Cofactor expansion with a recursion budget: None when the pruned search
/// exceeds `nodes` calls, so callers can fall back to elimination instead of
/// expanding a dense matrix.
pub fn laplace_within(m: &PolyMatrix, nodes: usize) -> Result<Option<Poly>, DetError> {
    let n = m.require_square()?;
    let nvars = m.nvars();
    if n == 0 {
        return Ok(Some(Poly::constant(nvars, 1)));
    }
    assert!(n <= 64, "laplace supports up to 64 rows");

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&r| (0..n).filter(|&c| !m.get(r, c).is_zero()).count());
    let row_sign = permutation_sign(&order);

    let full_mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Poly> = HashMap::new();

    fn go(
        m: &PolyMatrix,
        order: &[usize],
        depth: usize,
        mask: u64,
        nvars: usize,
        memo: &mut HashMap<u64, Poly>,
        budget: &mut usize,
    ) -> Option<Poly> {
        if depth == order.len() {
            return Some(Poly::constant(nvars, 1));
        }
        if let Some(hit) = memo.get(&mask) {
            return Some(hit.clone());
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let row = order[depth];
        let mut acc = Poly::zero(nvars);
        let mut sign_pos = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let col = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = m.get(row, col);
            if !entry.is_zero() {
                let sub = go(m, order, depth + 1, mask & !(1u64 << col), nvars, memo, budget)?;
                let contrib = entry.mul(&sub);
                acc = if sign_pos % 2 == 0 { acc.add(&contrib) } else { acc.sub(&contrib) };
            }
            sign_pos += 1;
        }
        memo.insert(mask, acc.clone());
        Some(acc)
    }

    let mut budget = nodes;
    let det = go(m, &order, 0, full_mask, nvars, &mut memo, &mut budget);
    Ok(det.map(|d| if row_sign < 0 { d.neg() } else { d }))
}

/// Fraction-free elimination. Every division is exact by construction; a
/// failed division would mean corrupted arithmetic, hence the hard panic.
pub fn bareiss(m: &PolyMatrix) -> Result<Poly, DetError> {
    let n = m.require_square()?;
    let nvars = m.nvars();
    if n == 0 {
        return Ok(Poly::constant(nvars, 1));
    }
    let mut a: Vec<Vec<Poly>> =
        (0..n).map(|r| (0..n).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut sign = 1i8;
    let mut prev = Poly::constant(nvars, 1);
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => r,
            None => return Ok(Poly::zero(nvars)),
        };
        if pivot_row != k {
            a.swap(pivot_row, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
        }
        for i in k + 1..n {
            a[i][k] = Poly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

/// Nonzero verdict by repeated random evaluation. Entries are evaluated at
/// uniform residues and the numeric determinant is taken mod `PROBE_PRIME`;
/// any nonzero evaluation proves the determinant nonzero.
pub fn probe_nonzero(m: &PolyMatrix, seed: u64) -> Result<bool, DetError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(true);
    }
    let nvars = m.nvars();
    let p = PROBE_PRIME;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PROBE_TRIALS {
        let xs: Vec<u64> = (0..nvars).map(|_| rng.gen_range(0..p)).collect();
        let mut num: Vec<Vec<u64>> =
            (0..n).map(|r| (0..n).map(|c| m.get(r, c).eval_mod(&xs, p)).collect()).collect();
        if det_mod(&mut num, p) != 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn det_mod(a: &mut [Vec<u64>], p: u64) -> u64 {
    let n = a.len();
    let mut det: u64 = 1;
    for k in 0..n {
        let pivot = match (k..n).find(|&r| a[r][k] != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot != k {
            a.swap(pivot, k);
            det = p - det;
        }
        let inv = inv_mod(a[k][k], p);
        det = mul_mod(det, a[k][k], p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            for j in k..n {
                let s = mul_mod(f, a[k][j], p);
                a[i][j] = sub_mod(a[i][j], s, p);
            }
        }
    }
    det % p
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::poly::pow_mod(a, p - 2, p)
}

pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Laplace,
    Bareiss,
    Probe,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Laplace => "laplace",
            Method::Bareiss => "bareiss",
            Method::Probe => "probe",
        }
    }
}

/// Default zero test: exact expansion up to `EXACT_LIMIT` rows, probing beyond.
pub fn is_zero_det(m: &PolyMatrix, seed: u64) -> Result<(bool, Method), DetError> {
    if m.rows() <= EXACT_LIMIT {
        Ok((laplace(m)?.is_zero(), Method::Laplace))
    } else {
        Ok((!probe_nonzero(m, seed)?, Method::Probe))
    }
}

/// Integer determinant of a small integer matrix (used for unimodularity
/// checks on transform matrices).
pub fn int_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let entries: Vec<Poly> =
        rows.iter().flat_map(|r| r.iter().map(|&v| Poly::constant(0, v))).collect();
    let m = PolyMatrix::new((0..n).collect(), (0..n).collect(), entries);
    let d = bareiss(&m).expect("square by construction");
    if d.is_zero() {
        BigInt::zero()
    } else {
        d.eval(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn matrix2(a: Poly, b: Poly, c: Poly, d: Poly) -> PolyMatrix {
        PolyMatrix::new(vec![0, 1], vec![0, 1], vec![a, b, c, d])
    }

    #[test]
    fn two_chain_cayley_det() {
        // [[x_e, x_e], [x_e, x_f]] -> x_e*x_f - x_e^2
        let e = x(2, 0);
        let f = x(2, 1);
        let m = matrix2(e.clone(), e.clone(), e.clone(), f.clone());
        let expect = e.mul(&f).sub(&e.mul(&e));
        assert_eq!(laplace(&m).unwrap(), expect);
        assert_eq!(bareiss(&m).unwrap(), expect);
        assert!(probe_nonzero(&m, 7).unwrap());
    }

    #[test]
    fn order_two_group_det() {
        let a = x(2, 0);
        let b = x(2, 1);
        let m = matrix2(a.clone(), b.clone(), b.clone(), a.clone());
        let expect = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(laplace(&m).unwrap(), expect);
        assert_eq!(bareiss(&m).unwrap(), expect);
    }

    #[test]
    fn singular_matrix_detected_by_all_engines() {
        let a = x(1, 0);
        let m = matrix2(a.clone(), a.clone(), a.clone(), a.clone());
        assert!(laplace(&m).unwrap().is_zero());
        assert!(bareiss(&m).unwrap().is_zero());
        assert!(!probe_nonzero(&m, 1).unwrap());
        let (z, method) = is_zero_det(&m, 1).unwrap();
        assert!(z);
        assert_eq!(method, Method::Laplace);
    }

    #[test]
    fn engines_agree_on_dense_4x4() {
        // Deterministic "random" integer-coefficient matrix over 3 variables.
        let n = 4;
        let mut entries = Vec::new();
        let mut state: i64 = 17;
        for _ in 0..n * n {
            state = state.wrapping_mul(31).wrapping_add(7) % 23;
            let v = (0..3).fold(Poly::constant(3, state), |acc, i| {
                state = state.wrapping_mul(37).wrapping_add(11) % 19;
                acc.add(&x(3, i).scale(&BigInt::from(state)))
            });
            entries.push(v);
        }
        let m = PolyMatrix::new((0..n).collect(), (0..n).collect(), entries);
        let l = laplace(&m).unwrap();
        let b = bareiss(&m).unwrap();
        assert_eq!(l, b);
        assert_eq!(probe_nonzero(&m, 3).unwrap(), !l.is_zero());
    }

    #[test]
    fn not_square_reported() {
        let m = PolyMatrix::new(vec![0], vec![0, 1], vec![x(1, 0), x(1, 0)]);
        assert_eq!(laplace(&m).unwrap_err(), DetError::NotSquare { rows: 1, cols: 2 });
    }

    #[test]
    fn empty_matrix_has_unit_det() {
        let m = PolyMatrix::new(vec![], vec![], vec![]);
        assert_eq!(laplace(&m).unwrap(), Poly::constant(0, 1));
        assert_eq!(bareiss(&m).unwrap(), Poly::constant(0, 1));
    }

    #[test]
    fn int_det_unimodular_example() {
        // Upper triangular with unit diagonal.
        let d = int_det(&[vec![1, 5, 7], vec![0, 1, 9], vec![0, 0, 1]]);
        assert_eq!(d, BigInt::one());
    }

    #[test]
    fn permutation_sign_basics() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
