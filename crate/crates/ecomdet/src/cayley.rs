//! Cayley tables as polynomial matrices, their determinants, and the variant
//! built from the star product.

use crate::det::{self, laplace, probe_nonzero, Method, PolyMatrix, EXACT_LIMIT};
use crate::poly::Poly;
use crate::semigroup::MulTable;
use crate::star::StarTable;
use thiserror::Error;

/// Largest matrix the exact symbolic determinant path accepts.
pub const SYMBOLIC_LIMIT: usize = 20;

/// Expansion-node budget for sparse matrices above the dense laplace limit.
const PRUNE_BUDGET: usize = 50_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CayleyError {
    #[error("semigroup has no absorbing element, contracted table undefined")]
    NoZeroElement,
    #[error("matrix of size {n} exceeds the exact symbolic determinant limit")]
    TooLarge { n: usize },
}

/// Full multiplication table with x_(s*t) at entry (s, t).
pub fn cayley(table: &MulTable) -> PolyMatrix {
    let n = table.n();
    let ids: Vec<usize> = (0..n).collect();
    let entries = (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .map(|(s, t)| Poly::var(n, table.mul(s, t)))
        .collect();
    PolyMatrix::new(ids.clone(), ids, entries)
}

/// Table over the nonzero elements with products hitting the absorbing
/// element replaced by 0.
pub fn contracted_cayley(table: &MulTable) -> Result<PolyMatrix, CayleyError> {
    let zero = table.zero().ok_or(CayleyError::NoZeroElement)?;
    let n = table.n();
    let ids: Vec<usize> = (0..n).filter(|&s| s != zero).collect();
    let mut entries = Vec::with_capacity(ids.len() * ids.len());
    for &s in &ids {
        for &t in &ids {
            let p = table.mul(s, t);
            entries.push(if p == zero { Poly::zero(n) } else { Poly::var(n, p) });
        }
    }
    Ok(PolyMatrix::with_nvars(n, ids.clone(), ids, entries))
}

/// Multiplication table of the star product: entry (s, t) collects the
/// structure constants as a linear polynomial.
pub fn star_cayley(star: &StarTable) -> PolyMatrix {
    let n = star.len();
    let ids: Vec<usize> = (0..n).collect();
    let mut entries = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            let mut p = Poly::zero(n);
            for (u, c) in star.get(s, t).iter() {
                p = p.add(&Poly::var(n, u).scale(&c.into()));
            }
            entries.push(p);
        }
    }
    PolyMatrix::new(ids.clone(), ids, entries)
}

/// Exact symbolic determinant: cofactor expansion while the matrix is small,
/// fraction-free elimination up to the symbolic limit.
pub fn exact_det(m: &PolyMatrix) -> Result<Poly, CayleyError> {
    let n = m.rows();
    if n > SYMBOLIC_LIMIT {
        return Err(CayleyError::TooLarge { n });
    }
    let result = if n <= EXACT_LIMIT {
        laplace(m)
    } else {
        // Pruned expansion handles the sparse tables that dominate this size
        // range; a dense matrix trips the budget and goes to elimination.
        match det::laplace_within(m, PRUNE_BUDGET) {
            Ok(Some(d)) => Ok(d),
            Ok(None) => det::bareiss(m),
            Err(e) => Err(e),
        }
    };
    Ok(result.expect("square by construction"))
}

/// Determinant of the full Cayley table. With an absorbing element the full
/// determinant equals x_zero times the contracted one taken at x_s - x_zero,
/// so only the contracted table is ever expanded.
pub fn theta(table: &MulTable) -> Result<Poly, CayleyError> {
    let Some(zero) = table.zero() else {
        return exact_det(&cayley(table));
    };
    let n = table.n();
    let tilde = theta_tilde(table)?;
    let t = Poly::var(n, zero).mul(&tilde.substitute(&shifted_vars(n, zero)));
    if n <= EXACT_LIMIT {
        debug_assert_eq!(t, exact_det(&cayley(table))?);
    }
    Ok(t)
}

/// Determinant of the contracted Cayley table.
pub fn theta_tilde(table: &MulTable) -> Result<Poly, CayleyError> {
    exact_det(&contracted_cayley(table)?)
}

/// The full determinant splits off the absorbing element: theta equals
/// x_zero times the contracted determinant taken at x_s - x_zero.
pub fn zero_factor_identity_holds(table: &MulTable, full: &Poly, tilde: &Poly) -> bool {
    let Some(zero) = table.zero() else {
        return false;
    };
    let n = table.n();
    let rhs = Poly::var(n, zero).mul(&tilde.substitute(&shifted_vars(n, zero)));
    *full == rhs
}

/// The substitution x_s -> x_s - x_zero, leaving x_zero in place.
fn shifted_vars(n: usize, zero: usize) -> Vec<Poly> {
    (0..n)
        .map(|s| {
            if s == zero {
                Poly::var(n, s)
            } else {
                Poly::var(n, s).sub(&Poly::var(n, zero))
            }
        })
        .collect()
}

/// Nonzero verdict for the full determinant: exact expansion on small
/// tables, random evaluation beyond.
pub fn theta_verdict(table: &MulTable, seed: u64) -> (bool, Method) {
    let m = cayley(table);
    if table.n() <= EXACT_LIMIT {
        let d = laplace(&m).expect("square by construction");
        (!d.is_zero(), Method::Laplace)
    } else {
        (probe_nonzero(&m, seed).expect("square by construction"), Method::Probe)
    }
}
