//! Finite posets on ids 0..m-1 with bitset rows, plus the Moebius function.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
}

/// Partial order on 0..m-1. `le[a]` is the bitset of b with a <= b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    m: usize,
    le: Vec<u64>,
}

impl Poset {
    /// Check the order axioms and report a concrete witness on failure.
    pub fn from_relation(m: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        assert!(m <= 64, "poset limited to 64 elements");
        let mut rows = vec![0u64; m];
        for a in 0..m {
            for b in 0..m {
                if le(a, b) {
                    rows[a] |= 1u64 << b;
                }
            }
        }
        for a in 0..m {
            if rows[a] & (1 << a) == 0 {
                return Err(PosetError::NotReflexive(a));
            }
        }
        for a in 0..m {
            for b in (a + 1)..m {
                if rows[a] & (1 << b) != 0 && rows[b] & (1 << a) != 0 {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                if rows[a] & (1 << b) != 0 && rows[b] & !rows[a] != 0 {
                    let c = (rows[b] & !rows[a]).trailing_zeros() as usize;
                    return Err(PosetError::NotTransitive(a, b, c));
                }
            }
        }
        Ok(Poset { m, le: rows })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a] & (1 << b) != 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// Ids ordered so that a <= b implies a comes no later than b.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.m).collect();
        // Down-set size is monotone along the order, so sorting by it (with id
        // as tiebreak) is a valid topological order.
        let below: Vec<u32> =
            (0..self.m).map(|b| (0..self.m).filter(|&a| self.le(a, b)).count() as u32).collect();
        order.sort_by_key(|&b| (below[b], b));
        order
    }

    /// The unique global minimum, if the poset has one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.m).find(|&a| self.le[a].count_ones() as usize == self.m)
    }

    /// Greatest lower bound of a set of ids, if it exists.
    pub fn meet(&self, xs: &[usize]) -> Option<usize> {
        let full = if self.m == 64 { !0u64 } else { (1u64 << self.m) - 1 };
        let mut lower = full;
        for &x in xs {
            let mut below_x = 0u64;
            for a in 0..self.m {
                if self.le(a, x) {
                    below_x |= 1 << a;
                }
            }
            lower &= below_x;
        }
        let mut best: Option<usize> = None;
        for a in 0..self.m {
            if lower & (1 << a) != 0 {
                match best {
                    None => best = Some(a),
                    Some(b) if self.le(b, a) => best = Some(a),
                    _ => {}
                }
            }
        }
        // Greatest only if every common lower bound sits below it.
        let g = best?;
        for a in 0..self.m {
            if lower & (1 << a) != 0 && !self.le(a, g) {
                return None;
            }
        }
        Some(g)
    }

    /// Moebius function as a dense matrix: mu[a][b] != 0 only when a <= b.
    /// Satisfies sum_{a <= c <= b} mu(a, c) = delta(a, b), and the same with
    /// mu on the right; both convolutions are checked before returning.
    pub fn moebius(&self) -> Vec<Vec<i64>> {
        let m = self.m;
        let order = self.linear_extension();
        let mut mu = vec![vec![0i64; m]; m];
        for (ia, &a) in order.iter().enumerate() {
            mu[a][a] = 1;
            // mu(a, b) = -sum_{a <= c < b} mu(a, c), filled upward from a.
            for &b in &order[ia + 1..] {
                if !self.le(a, b) {
                    continue;
                }
                let mut acc = 0i64;
                for c in 0..m {
                    if c != b && self.le(a, c) && self.le(c, b) {
                        acc += mu[a][c];
                    }
                }
                mu[a][b] = -acc;
            }
        }
        for a in 0..m {
            for b in 0..m {
                let want = i64::from(a == b);
                let mut left = 0i64;
                let mut right = 0i64;
                for c in 0..m {
                    if self.le(a, c) && self.le(c, b) {
                        left += mu[a][c];
                        right += mu[c][b];
                    }
                }
                assert_eq!(left, want, "moebius left convolution failed at ({a},{b})");
                assert_eq!(right, want, "moebius right convolution failed at ({a},{b})");
            }
        }
        mu
    }
}
