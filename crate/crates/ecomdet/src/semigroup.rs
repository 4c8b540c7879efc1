//! Finite semigroups as validated multiplication tables.
//!
//! Elements are ids 0..n-1 in ingestion order; that order is the canonical
//! basis order for every matrix and determinant downstream, and the labels
//! become polynomial variable names.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("table must have between 1 and {MAX_ELEMENTS} elements, got {0}")]
    BadSize(usize),
    #[error("row {row}, column {col}: entry {val} out of range for {n} elements")]
    OutOfRange { row: usize, col: usize, val: usize, n: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("expected {n} labels, got {got}")]
    BadLabels { n: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    n: usize,
    labels: Vec<String>,
    prod: Vec<usize>,
    zero: Option<usize>,
}

impl MulTable {
    /// Validate entries and associativity; the zero element, if any, is
    /// auto-detected rather than declared.
    pub fn new(labels: Vec<String>, rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 || n > MAX_ELEMENTS {
            return Err(TableError::BadSize(n));
        }
        if labels.len() != n {
            return Err(TableError::BadLabels { n, got: labels.len() });
        }
        let mut prod = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::BadSize(row.len()));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(TableError::OutOfRange { row: r, col: c, val: v, n });
                }
                prod.push(v);
            }
        }
        let t = MulTable { n, labels, prod, zero: None };
        for a in 0..n {
            for b in 0..n {
                let ab = t.mul(a, b);
                for c in 0..n {
                    if t.mul(ab, c) != t.mul(a, t.mul(b, c)) {
                        return Err(TableError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let zero = (0..n).find(|&z| (0..n).all(|s| t.mul(z, s) == z && t.mul(s, z) == z));
        Ok(MulTable { zero, ..t })
    }

    /// Table with default labels e0..e(n-1).
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let labels = (0..rows.len()).map(|i| format!("e{i}")).collect();
        MulTable::new(labels, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn id_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.prod[a * self.n + b]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// The unique absorbing element, if one exists.
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// Idempotents in ingestion order; never empty for a finite semigroup.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// Do all idempotents commute? When they do, the idempotents form a meet
    /// semilattice under e <= f iff ef = e, and products of idempotents are
    /// idempotent again.
    pub fn is_ecom(&self) -> bool {
        let es = self.idempotents();
        for &e in &es {
            for &f in &es {
                if self.mul(e, f) != self.mul(f, e) {
                    return false;
                }
            }
        }
        // Commuting idempotents multiply to idempotents: (ef)(ef) = e(fe)f = ef.
        debug_assert!(es.iter().all(|&e| es.iter().all(|&f| {
            let p = self.mul(e, f);
            self.mul(p, p) == p
        })));
        true
    }

    /// Does every element occur as a product (S*S = S)?
    pub fn product_surjective(&self) -> bool {
        let mut seen = vec![false; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                seen[self.mul(a, b)] = true;
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Does every element fix equally many elements by left and by right
    /// multiplication?
    pub fn fixed_point_balanced(&self) -> bool {
        (0..self.n).all(|s| {
            let left = (0..self.n).filter(|&t| self.mul(s, t) == t).count();
            let right = (0..self.n).filter(|&t| self.mul(t, s) == t).count();
            left == right
        })
    }

    /// Exact rational coefficients c with (sum c_u u) acting as a two-sided
    /// identity of the linearized multiplication, if such a vector exists.
    pub fn algebra_identity(&self) -> Option<Vec<BigRational>> {
        let n = self.n;
        // Unknowns c_0..c_{n-1}; equations over all (s, target):
        //   sum_{u: u*s = target} c_u = [s == target]   (left identity)
        //   sum_{u: s*u = target} c_u = [s == target]   (right identity)
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(2 * n * n);
        for s in 0..n {
            for target in 0..n {
                let mut left = vec![BigRational::zero(); n + 1];
                let mut right = vec![BigRational::zero(); n + 1];
                for u in 0..n {
                    if self.mul(u, s) == target {
                        left[u] += BigRational::one();
                    }
                    if self.mul(s, u) == target {
                        right[u] += BigRational::one();
                    }
                }
                if s == target {
                    left[n] = BigRational::one();
                    right[n] = BigRational::one();
                }
                rows.push(left);
                rows.push(right);
            }
        }
        let solution = solve_exact(&mut rows, n)?;
        // Any solution of the full system is an identity; verify anyway so a
        // solver bug cannot smuggle in a bogus vector.
        for s in 0..n {
            for target in 0..n {
                let want =
                    if s == target { BigRational::one() } else { BigRational::zero() };
                let mut l = BigRational::zero();
                let mut r = BigRational::zero();
                for u in 0..n {
                    if self.mul(u, s) == target {
                        l += &solution[u];
                    }
                    if self.mul(s, u) == target {
                        r += &solution[u];
                    }
                }
                if l != want || r != want {
                    return None;
                }
            }
        }
        Some(solution)
    }

    /// The three precondition checks bundled.
    pub fn preconditions(&self) -> Preconditions {
        Preconditions {
            surjective: self.product_surjective(),
            balanced: self.fixed_point_balanced(),
            unital: self.algebra_identity().is_some(),
        }
    }

    /// Green's relations and per-element regularity.
    pub fn green(&self) -> GreenData {
        let n = self.n;
        let right_set = |a: usize| -> u64 {
            let mut m = 1u64 << a;
            for s in 0..n {
                m |= 1u64 << self.mul(a, s);
            }
            m
        };
        let left_set = |a: usize| -> u64 {
            let mut m = 1u64 << a;
            for s in 0..n {
                m |= 1u64 << self.mul(s, a);
            }
            m
        };
        let two_set = |a: usize| -> u64 {
            let mut m = 1u64 << a;
            for s in 0..n {
                m |= 1u64 << self.mul(a, s);
                m |= 1u64 << self.mul(s, a);
                for t in 0..n {
                    m |= 1u64 << self.mul3(s, a, t);
                }
            }
            m
        };
        let rs: Vec<u64> = (0..n).map(right_set).collect();
        let ls: Vec<u64> = (0..n).map(left_set).collect();
        let js: Vec<u64> = (0..n).map(two_set).collect();
        let label_by = |key: &dyn Fn(usize) -> (u64, u64)| -> Vec<usize> {
            (0..n)
                .map(|a| (0..n).find(|&b| key(b) == key(a)).unwrap())
                .collect()
        };
        let r_class = label_by(&|a| (rs[a], 0));
        let l_class = label_by(&|a| (ls[a], 0));
        let h_class = label_by(&|a| (rs[a], ls[a]));
        let j_class = label_by(&|a| (js[a], 0));
        let regular =
            (0..n).map(|s| (0..n).any(|t| self.mul3(s, t, s) == s)).collect();
        GreenData { r_class, l_class, h_class, j_class, regular }
    }

    /// Elements of e*S*e in ingestion order.
    pub fn local_submonoid(&self, e: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            seen[self.mul3(e, s, e)] = true;
        }
        (0..self.n).filter(|&s| seen[s]).collect()
    }
}

/// Per-element preconditions for the determinant factorization machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Preconditions {
    /// S*S = S.
    pub surjective: bool,
    /// Left and right fixed-point counts agree for every element.
    pub balanced: bool,
    /// The linearized multiplication has a two-sided identity.
    pub unital: bool,
}

impl Preconditions {
    pub fn all(&self) -> bool {
        self.surjective && self.balanced && self.unital
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenData {
    /// Class label per element: the smallest member id of its class.
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub regular: Vec<bool>,
}

impl GreenData {
    pub fn class_of(labels: &[usize], a: usize) -> Vec<usize> {
        labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == labels[a])
            .map(|(i, _)| i)
            .collect()
    }
}

/// Gaussian elimination over the rationals on an augmented system; returns the
/// particular solution with free variables at zero, or None if inconsistent.
fn solve_exact(rows: &mut [Vec<BigRational>], unknowns: usize) -> Option<Vec<BigRational>> {
    let mut pivot_row = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..unknowns {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && !rows[r2][col].is_zero() {
                let f = rows[r2][col].clone();
                for c2 in 0..=unknowns {
                    let delta = &f * &rows[pivot_row][c2];
                    rows[r2][c2] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    for r in rows[pivot_row..].iter() {
        if !r[unknowns].is_zero() {
            return None;
        }
    }
    let mut sol = vec![BigRational::zero(); unknowns];
    for (i, &col) in pivot_cols.iter().enumerate() {
        sol[col] = rows[i][unknowns].clone();
    }
    Some(sol)
}

/// Convenience for tests and fixtures: rational vector from integers.
pub fn rationals(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[usize]]) -> MulTable {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        MulTable::from_rows(&rows).unwrap()
    }

    #[test]
    fn trivial_semigroup() {
        let t = table(&[&[0]]);
        assert_eq!(t.zero(), Some(0));
        assert_eq!(t.idempotents(), vec![0]);
        assert!(t.is_ecom());
        assert!(t.preconditions().all());
        let g = t.green();
        assert_eq!(g.r_class, vec![0]);
        assert!(g.regular[0]);
    }

    #[test]
    fn rejects_out_of_range_and_non_associative() {
        let err = MulTable::from_rows(&[vec![0, 1], vec![1, 5]]).unwrap_err();
        assert_eq!(err, TableError::OutOfRange { row: 1, col: 1, val: 5, n: 2 });
        // (0*0)*1 = 0 but 0*(0*1) = 1.
        let err = MulTable::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, TableError::NotAssociative { .. }));
    }

    #[test]
    fn left_zero_semigroup_is_not_ecom() {
        // ab = a, ba = b; both elements idempotent and non-commuting.
        let t = table(&[&[0, 0], &[1, 1]]);
        assert_eq!(t.idempotents(), vec![0, 1]);
        assert!(!t.is_ecom());
        assert!(!t.fixed_point_balanced());
        assert!(t.zero().is_none());
    }

    #[test]
    fn null_semigroup_fails_surjectivity_and_identity() {
        // All products equal 0.
        let t = table(&[&[0, 0], &[0, 0]]);
        assert!(!t.product_surjective());
        assert!(t.fixed_point_balanced());
        assert!(t.algebra_identity().is_none());
        let p = t.preconditions();
        assert_eq!((p.surjective, p.balanced, p.unital), (false, true, false));
    }

    #[test]
    fn monoid_identity_is_the_indicator_vector() {
        // Order-2 group.
        let t = table(&[&[0, 1], &[1, 0]]);
        assert_eq!(t.algebra_identity().unwrap(), rationals(&[1, 0]));
        assert!(t.zero().is_none());
    }

    #[test]
    fn commutative_tables_are_ecom_and_balanced() {
        // 2-chain semilattice.
        let t = table(&[&[0, 0], &[0, 1]]);
        assert!(t.is_ecom());
        assert!(t.fixed_point_balanced());
        assert_eq!(t.zero(), Some(0));
        assert!(t.preconditions().all());
    }

    #[test]
    fn green_classes_on_a_group_are_single() {
        let t = table(&[&[0, 1], &[1, 0]]);
        let g = t.green();
        assert_eq!(g.r_class, vec![0, 0]);
        assert_eq!(g.l_class, vec![0, 0]);
        assert_eq!(g.h_class, vec![0, 0]);
        assert_eq!(g.j_class, vec![0, 0]);
    }

    #[test]
    fn local_submonoid_collects_ese() {
        let t = table(&[&[0, 0], &[0, 1]]);
        assert_eq!(t.local_submonoid(1), vec![0, 1]);
        assert_eq!(t.local_submonoid(0), vec![0]);
    }
}
