//! Structure theory for semigroups with commuting idempotents: the stabilizer
//! sets, the right/left unit maps, tilde classes, the sandwich order, unit
//! slices, and the unit-swap permutation search.

use std::collections::BTreeMap;
use std::fmt;

use crate::poset::{Poset, PosetError};
use crate::semigroup::MulTable;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("idempotents do not commute")]
    NotEcom,
    #[error("no idempotent stabilizes element {s} on the {side} side")]
    EmptyPhi { s: usize, side: Side },
    #[error("meet of the {side} stabilizers of element {s} is not itself a stabilizer")]
    MeetOutsidePhi { s: usize, side: Side },
    #[error("sandwich relation is not a partial order: {0}")]
    OrderNotPoset(PosetError),
}

/// Idempotents stabilizing s on one side: right means s*e = s, left e*s = s.
pub fn phi(table: &MulTable, s: usize, side: Side) -> Vec<usize> {
    table
        .idempotents()
        .into_iter()
        .filter(|&e| match side {
            Side::Right => table.mul(s, e) == s,
            Side::Left => table.mul(e, s) == s,
        })
        .collect()
}

/// Per-element unit data for a semigroup with commuting idempotents.
///
/// For each s the right unit `plus_r(s)` is the minimum idempotent with
/// s*e = s, and dually for `plus_l`; minima are taken in the semilattice
/// order e <= f iff ef = e. The sandwich order s <= t iff
/// s = plus_l(s)*t*plus_r(s) is validated as a poset on all of S.
#[derive(Debug, Clone)]
pub struct EcomProfile {
    e_ids: Vec<usize>,
    e_index: Vec<Option<usize>>,
    e_order: Poset,
    plus_r: Vec<usize>,
    plus_l: Vec<usize>,
    sandwich: Poset,
}

impl EcomProfile {
    pub fn build(table: &MulTable) -> Result<Self, ProfileError> {
        if !table.is_ecom() {
            return Err(ProfileError::NotEcom);
        }
        let n = table.n();
        let e_ids = table.idempotents();
        let mut e_index = vec![None; n];
        for (i, &e) in e_ids.iter().enumerate() {
            e_index[e] = Some(i);
        }
        let e_order = Poset::from_relation(e_ids.len(), |i, j| {
            table.mul(e_ids[i], e_ids[j]) == e_ids[i]
        })
        .expect("commuting idempotents form a semilattice");

        let mut plus_r = Vec::with_capacity(n);
        let mut plus_l = Vec::with_capacity(n);
        for s in 0..n {
            plus_r.push(side_minimum(table, s, Side::Right)?);
            plus_l.push(side_minimum(table, s, Side::Left)?);
        }

        let sandwich =
            Poset::from_relation(n, |s, t| table.mul3(plus_l[s], t, plus_r[s]) == s)
                .map_err(ProfileError::OrderNotPoset)?;
        let profile = EcomProfile { e_ids, e_index, e_order, plus_r, plus_l, sandwich };

        // Each unit map fixes every idempotent, so the unit is the unique
        // idempotent inside its own tilde class.
        debug_assert!(profile.e_ids.iter().all(|&e| {
            profile.plus_r[e] == e && profile.plus_l[e] == e
        }));
        debug_assert!((0..n).all(|s| {
            profile.is_idempotent_id(profile.plus_r[s])
                && profile.is_idempotent_id(profile.plus_l[s])
        }));
        // Units are monotone along the sandwich order.
        debug_assert!((0..n).all(|s| {
            (0..n).all(|t| {
                !profile.sandwich.le(s, t)
                    || (profile.le_e(profile.plus_r[s], profile.plus_r[t])
                        && profile.le_e(profile.plus_l[s], profile.plus_l[t]))
            })
        }));
        Ok(profile)
    }

    fn is_idempotent_id(&self, s: usize) -> bool {
        self.e_index[s].is_some()
    }

    /// Idempotent ids in ingestion order.
    pub fn idempotents(&self) -> &[usize] {
        &self.e_ids
    }

    /// Semilattice order on idempotent element ids: e <= f iff ef = e.
    pub fn le_e(&self, e: usize, f: usize) -> bool {
        match (self.e_index[e], self.e_index[f]) {
            (Some(i), Some(j)) => self.e_order.le(i, j),
            _ => panic!("le_e called on non-idempotent"),
        }
    }

    pub fn lt_e(&self, e: usize, f: usize) -> bool {
        e != f && self.le_e(e, f)
    }

    /// The idempotent semilattice as a poset on indices into `idempotents()`.
    pub fn e_order(&self) -> &Poset {
        &self.e_order
    }

    pub fn plus_r(&self, s: usize) -> usize {
        self.plus_r[s]
    }

    pub fn plus_l(&self, s: usize) -> usize {
        self.plus_l[s]
    }

    pub fn plus(&self, s: usize, side: Side) -> usize {
        match side {
            Side::Right => self.plus_r[s],
            Side::Left => self.plus_l[s],
        }
    }

    /// Members of the right-unit class of e: {s : plus_r(s) = e}.
    pub fn tilde_l_of(&self, e: usize) -> Vec<usize> {
        (0..self.plus_r.len()).filter(|&s| self.plus_r[s] == e).collect()
    }

    /// Members of the left-unit class of e: {s : plus_l(s) = e}.
    pub fn tilde_r_of(&self, e: usize) -> Vec<usize> {
        (0..self.plus_l.len()).filter(|&s| self.plus_l[s] == e).collect()
    }

    /// Partition of S by the pair of units, classes in ingestion order.
    pub fn tilde_h_classes(&self) -> Vec<Vec<usize>> {
        let n = self.plus_r.len();
        let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            let key = (self.plus_r[s], self.plus_l[s]);
            let idx = *seen.entry(key).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(s);
        }
        classes
    }

    /// s <= t in the right divisibility order: s = t * plus_r(s).
    pub fn le_r(&self, table: &MulTable, s: usize, t: usize) -> bool {
        table.mul(t, self.plus_r[s]) == s
    }

    /// s <= t in the left divisibility order: s = plus_l(s) * t.
    pub fn le_l(&self, table: &MulTable, s: usize, t: usize) -> bool {
        table.mul(self.plus_l[s], t) == s
    }

    /// Sandwich comparison: s = plus_l(s) * t * plus_r(s).
    pub fn ll(&self, table: &MulTable, s: usize, t: usize) -> bool {
        table.mul3(self.plus_l[s], t, self.plus_r[s]) == s
    }

    /// The sandwich order validated as a poset on all element ids.
    pub fn sandwich_order(&self) -> &Poset {
        &self.sandwich
    }

    /// Unit slice below e: `{s : plus(s, side) < e}` strictly. The right
    /// slice is a left ideal and the left slice a right ideal.
    pub fn i_slice(&self, e: usize, side: Side) -> Vec<usize> {
        (0..self.plus_r.len()).filter(|&s| self.lt_e(self.plus(s, side), e)).collect()
    }

    /// Elements whose two units differ, in ingestion order.
    pub fn split_elements(&self) -> Vec<usize> {
        (0..self.plus_r.len()).filter(|&s| self.plus_r[s] != self.plus_l[s]).collect()
    }

    /// Search for a permutation of the split elements matching each left
    /// unit with an equal right unit. Counting argument: such a permutation
    /// exists iff, for every idempotent e, equally many split elements have
    /// left unit e as have right unit e; pairing is by ingestion order.
    pub fn sigma_search(&self) -> Option<Sigma> {
        let domain = self.split_elements();
        let mut by_l: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut by_r: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (pos, &s) in domain.iter().enumerate() {
            by_l.entry(self.plus_l[s]).or_default().push(pos);
            by_r.entry(self.plus_r[s]).or_default().push(pos);
        }
        if by_l.len() != by_r.len() {
            return None;
        }
        let mut map = vec![usize::MAX; domain.len()];
        for (e, ls) in &by_l {
            let rs = by_r.get(e)?;
            if ls.len() != rs.len() {
                return None;
            }
            for (&i, &j) in ls.iter().zip(rs) {
                map[i] = j;
            }
        }
        debug_assert!(map.iter().enumerate().all(|(i, &j)| {
            self.plus_l[domain[i]] == self.plus_r[domain[j]]
        }));
        // The inverse pairing is the same condition read backwards.
        debug_assert!(map.iter().enumerate().all(|(i, &j)| {
            self.plus_r[domain[j]] == self.plus_l[domain[i]]
        }));
        Some(Sigma { domain, map })
    }
}

fn side_minimum(table: &MulTable, s: usize, side: Side) -> Result<usize, ProfileError> {
    let set = phi(table, s, side);
    let Some((&first, rest)) = set.split_first() else {
        return Err(ProfileError::EmptyPhi { s, side });
    };
    // In a semilattice the meet of a finite set is the product of its members.
    let meet = rest.iter().fold(first, |acc, &e| table.mul(acc, e));
    if !set.contains(&meet) {
        return Err(ProfileError::MeetOutsidePhi { s, side });
    }
    debug_assert!(set.iter().all(|&e| table.mul(meet, e) == meet));
    Ok(meet)
}

/// A permutation of the split elements pairing left units with right units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sigma {
    /// Element ids in ingestion order.
    pub domain: Vec<usize>,
    /// Position i maps to position map[i].
    pub map: Vec<usize>,
}

impl fmt::Display for Sigma {
    /// Cycle notation over 1-based positions, fixed points omitted; the
    /// identity prints as "id".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.map[cur];
            }
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}
