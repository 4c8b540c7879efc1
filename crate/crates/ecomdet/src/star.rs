//! The transformed product on the semigroup algebra: pair stabilization, the
//! guarded (sharp) product, the zeta change of basis, the star multiplication
//! it induces, and the orthogonality condition on split pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::det::int_det;
use crate::ecom::EcomProfile;
use crate::semigroup::MulTable;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("stabilization of ({s}, {t}) did not settle within the idempotent bound")]
    NonTermination { s: usize, t: usize },
    #[error("star product of zeta images of ({s}, {t}) differs from the zeta image of their product")]
    StarMismatch { s: usize, t: usize },
    #[error("star product is not associative on basis triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// Integer vector in the semigroup algebra; zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgVec {
    coeffs: BTreeMap<usize, i64>,
}

impl AlgVec {
    pub fn zero() -> Self {
        AlgVec::default()
    }

    pub fn basis(s: usize) -> Self {
        let mut v = AlgVec::default();
        v.add_term(s, 1);
        v
    }

    pub fn add_term(&mut self, s: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(s).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&s);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgVec, c: i64) {
        for (&s, &d) in &other.coeffs {
            self.add_term(s, c * d);
        }
    }

    pub fn coeff(&self, s: usize) -> i64 {
        self.coeffs.get(&s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&s, &c)| (s, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    /// Linearized semigroup product.
    pub fn mul_in(table: &MulTable, a: &AlgVec, b: &AlgVec) -> AlgVec {
        let mut out = AlgVec::zero();
        for (s, c) in a.iter() {
            for (t, d) in b.iter() {
                out.add_term(table.mul(s, t), c * d);
            }
        }
        out
    }

    /// Render with element labels, e.g. "u + t + w", "-z", "0".
    pub fn display(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (s, c)) in self.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != 1 {
                let _ = write!(out, "{mag}*");
            }
            out.push_str(&labels[s]);
        }
        out
    }
}

/// One stabilization run: the settled idempotent, the number of update steps,
/// and the full pair trace starting at the input pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerRun {
    pub eps: usize,
    pub steps: usize,
    pub trace: Vec<(usize, usize)>,
}

/// Iterate (s, t) -> (s * plus_l(t), plus_r(s) * t) until the inner units
/// agree; the agreed idempotent stabilizes the pair. Unit descent bounds the
/// run by the number of idempotents.
pub fn stabilize(
    table: &MulTable,
    profile: &EcomProfile,
    s: usize,
    t: usize,
) -> Result<StabilizerRun, StarError> {
    let cap = profile.idempotents().len() + 1;
    let (s0, t0) = (s, t);
    let (mut sn, mut tn) = (s, t);
    let mut trace = vec![(sn, tn)];
    let mut steps = 0usize;
    while profile.plus_l(tn) != profile.plus_r(sn) {
        if steps == cap {
            return Err(StarError::NonTermination { s: s0, t: t0 });
        }
        let next_s = table.mul(sn, profile.plus_l(tn));
        let next_t = table.mul(profile.plus_r(sn), tn);
        // Closed forms: each step multiplies the original pair directly.
        debug_assert_eq!(next_s, table.mul(s0, profile.plus_l(tn)));
        debug_assert_eq!(next_t, table.mul(profile.plus_r(sn), t0));
        // Units never increase along the run.
        debug_assert!(profile.le_e(profile.plus_r(next_s), profile.plus_r(sn)));
        debug_assert!(profile.le_e(profile.plus_l(next_t), profile.plus_l(tn)));
        sn = next_s;
        tn = next_t;
        trace.push((sn, tn));
        steps += 1;
        // The pair keeps the same product, even with an idempotent wedged in.
        debug_assert_eq!(table.mul(sn, tn), table.mul(s0, t0));
        debug_assert!(profile
            .idempotents()
            .iter()
            .all(|&e| table.mul3(sn, e, tn) == table.mul3(s0, e, t0)));
    }
    let eps = profile.plus_r(sn);
    debug_assert_eq!(profile.plus_r(table.mul(s0, eps)), eps);
    debug_assert_eq!(profile.plus_l(table.mul(eps, t0)), eps);
    debug_assert_eq!(table.mul3(s0, eps, t0), table.mul(s0, t0));
    Ok(StabilizerRun { eps, steps, trace })
}

/// Settled idempotents for every pair.
#[derive(Debug, Clone)]
pub struct StabilizerTable {
    n: usize,
    eps: Vec<usize>,
    steps: Vec<usize>,
}

impl StabilizerTable {
    pub fn build(table: &MulTable, profile: &EcomProfile) -> Result<Self, StarError> {
        let n = table.n();
        let mut eps = Vec::with_capacity(n * n);
        let mut steps = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let run = stabilize(table, profile, s, t)?;
                eps.push(run.eps);
                steps.push(run.steps);
            }
        }
        Ok(StabilizerTable { n, eps, steps })
    }

    pub fn eps(&self, s: usize, t: usize) -> usize {
        self.eps[s * self.n + t]
    }

    pub fn steps(&self, s: usize, t: usize) -> usize {
        self.steps[s * self.n + t]
    }
}

/// Guarded product: s # t = st when both outer units survive into the product
/// and the inner units agree; otherwise the algebra zero.
pub fn sharp_id(table: &MulTable, profile: &EcomProfile, s: usize, t: usize) -> Option<usize> {
    let st = table.mul(s, t);
    let ok = profile.plus_l(s) == profile.plus_l(st)
        && profile.plus_r(t) == profile.plus_r(st)
        && profile.plus_r(s) == profile.plus_l(t);
    ok.then_some(st)
}

pub fn sharp(table: &MulTable, profile: &EcomProfile, s: usize, t: usize) -> AlgVec {
    sharp_id(table, profile, s, t).map_or_else(AlgVec::zero, AlgVec::basis)
}

/// Guarded product pinned at an idempotent: additionally requires the inner
/// units to equal e.
pub fn sharp_pinned(
    table: &MulTable,
    profile: &EcomProfile,
    s: usize,
    t: usize,
    e: usize,
) -> Option<usize> {
    if profile.plus_r(s) != e || profile.plus_l(t) != e {
        return None;
    }
    sharp_id(table, profile, s, t)
}

/// Idempotents that can be wedged into the product: {e : s*e*t = s*t}.
pub fn interpolants(table: &MulTable, s: usize, t: usize) -> Vec<usize> {
    let st = table.mul(s, t);
    table
        .idempotents()
        .into_iter()
        .filter(|&e| table.mul3(s, e, t) == st)
        .collect()
}

/// Interpolants with no other interpolant strictly below them.
pub fn minimal_interpolants(
    table: &MulTable,
    profile: &EcomProfile,
    s: usize,
    t: usize,
) -> Vec<usize> {
    let set = interpolants(table, s, t);
    set.iter()
        .copied()
        .filter(|&e| !set.iter().any(|&f| profile.lt_e(f, e)))
        .collect()
}

/// Triples (s, t, e) where an interpolant sits strictly below the right unit
/// of s even though the guarded product of (s, t) survives.
pub fn strict_interpolant_witnesses(
    table: &MulTable,
    profile: &EcomProfile,
) -> Vec<(usize, usize, usize)> {
    let n = table.n();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if sharp_id(table, profile, s, t).is_none() {
                continue;
            }
            let st = table.mul(s, t);
            for &e in &table.idempotents() {
                if table.mul3(s, e, t) == st && profile.lt_e(e, profile.plus_r(s)) {
                    out.push((s, t, e));
                }
            }
        }
    }
    out
}

/// Zeta change of basis for the sandwich order: the column of s is the
/// indicator of its down-set, the inverse holds the Moebius values. Both
/// directions are checked against each other, and the transform is verified
/// unimodular.
#[derive(Debug, Clone)]
pub struct ZetaTransform {
    n: usize,
    z: Vec<Vec<i64>>,
    z_inv: Vec<Vec<i64>>,
}

impl ZetaTransform {
    pub fn build(profile: &EcomProfile) -> Self {
        let order = profile.sandwich_order();
        let n = order.len();
        let mut z = vec![vec![0i64; n]; n];
        for c in 0..n {
            for r in 0..n {
                if order.le(r, c) {
                    z[r][c] = 1;
                }
            }
        }
        let z_inv = order.moebius();
        for a in 0..n {
            for b in 0..n {
                let mut acc = 0i64;
                for c in 0..n {
                    acc += z[a][c] * z_inv[c][b];
                }
                assert_eq!(acc, i64::from(a == b), "zeta and moebius are not mutually inverse");
            }
        }
        let rows: Vec<Vec<i64>> = z.clone();
        assert!(
            int_det(&rows).abs() == num_bigint::BigInt::from(1),
            "zeta transform must be unimodular"
        );
        ZetaTransform { n, z, z_inv }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Down-set indicator of s as an algebra vector.
    pub fn column(&self, s: usize) -> AlgVec {
        let mut v = AlgVec::zero();
        for r in 0..self.n {
            v.add_term(r, self.z[r][s]);
        }
        v
    }

    pub fn mu(&self, t: usize, s: usize) -> i64 {
        self.z_inv[t][s]
    }

    pub fn apply(&self, v: &AlgVec) -> AlgVec {
        let mut out = AlgVec::zero();
        for (s, c) in v.iter() {
            for r in 0..self.n {
                out.add_term(r, c * self.z[r][s]);
            }
        }
        out
    }

    pub fn apply_inverse(&self, v: &AlgVec) -> AlgVec {
        let mut out = AlgVec::zero();
        for (s, c) in v.iter() {
            for r in 0..self.n {
                out.add_term(r, c * self.z_inv[r][s]);
            }
        }
        out
    }
}

/// Star product of two zeta columns, evaluated from the defining double sum
/// over the down-sets with the stabilizer of the outer products as pin. The
/// result must be the zeta column of the plain product.
pub fn star_on_z(
    table: &MulTable,
    profile: &EcomProfile,
    stab: &StabilizerTable,
    zeta: &ZetaTransform,
    s: usize,
    t: usize,
) -> Result<AlgVec, StarError> {
    let order = profile.sandwich_order();
    let mut acc = AlgVec::zero();
    for sp in 0..table.n() {
        if !order.le(sp, s) {
            continue;
        }
        for tp in 0..table.n() {
            if !order.le(tp, t) {
                continue;
            }
            let a = table.mul(profile.plus_l(sp), s);
            let b = table.mul(t, profile.plus_r(tp));
            let e = stab.eps(a, b);
            if let Some(p) = sharp_pinned(table, profile, sp, tp, e) {
                acc.add_term(p, 1);
            }
        }
    }
    if acc != zeta.column(table.mul(s, t)) {
        return Err(StarError::StarMismatch { s, t });
    }
    Ok(acc)
}

/// Structure constants of the star product on the standard basis: the zeta
/// conjugate of the ordinary product. Building the table verifies the double
/// sum identity on every pair and associativity on every basis triple.
#[derive(Debug, Clone)]
pub struct StarTable {
    n: usize,
    entries: Vec<AlgVec>,
}

impl StarTable {
    pub fn build(table: &MulTable, profile: &EcomProfile) -> Result<Self, StarError> {
        let n = table.n();
        let stab = StabilizerTable::build(table, profile)?;
        let zeta = ZetaTransform::build(profile);
        for s in 0..n {
            for t in 0..n {
                star_on_z(table, profile, &stab, &zeta, s, t)?;
            }
        }
        let inv_basis: Vec<AlgVec> =
            (0..n).map(|s| zeta.apply_inverse(&AlgVec::basis(s))).collect();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let prod = AlgVec::mul_in(table, &inv_basis[s], &inv_basis[t]);
                entries.push(zeta.apply(&prod));
            }
        }
        let star = StarTable { n, entries };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = star.mul_vec(star.get(a, b), &AlgVec::basis(c));
                    let right = star.mul_vec(&AlgVec::basis(a), star.get(b, c));
                    if left != right {
                        return Err(StarError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(star)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: usize, t: usize) -> &AlgVec {
        &self.entries[s * self.n + t]
    }

    /// Bilinear extension of the star product.
    pub fn mul_vec(&self, a: &AlgVec, b: &AlgVec) -> AlgVec {
        let mut out = AlgVec::zero();
        for (s, c) in a.iter() {
            for (t, d) in b.iter() {
                out.add_scaled(self.get(s, t), c * d);
            }
        }
        out
    }
}

/// Orthogonality of split pairs: whenever the right unit of u differs from
/// the left unit of u', their star product should vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn check_orthogonality(star: &StarTable, profile: &EcomProfile) -> OrthogonalityReport {
    for u in 0..star.len() {
        for up in 0..star.len() {
            if profile.plus_r(u) != profile.plus_l(up) && !star.get(u, up).is_zero() {
                return OrthogonalityReport { holds: false, witness: Some((u, up)) };
            }
        }
    }
    OrthogonalityReport { holds: true, witness: None }
}

/// Verdict of the orthogonality scan combined with the determinant check: a
/// counterexample needs a non-orthogonal split pair and a nonzero
/// determinant at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Counterexample,
    Skipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

pub fn orthogonality_verdict(
    star: &StarTable,
    profile: &EcomProfile,
    theta_nonzero: bool,
) -> Verdict {
    if theta_nonzero && !check_orthogonality(star, profile).holds {
        Verdict::Counterexample
    } else {
        Verdict::Consistent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::reference_table;
    use crate::ecom::EcomProfile;

    fn setup(id: &str) -> (MulTable, EcomProfile) {
        let t = reference_table(id);
        let p = EcomProfile::build(&t).unwrap();
        (t, p)
    }

    fn id(t: &MulTable, l: &str) -> usize {
        t.id_of_label(l).unwrap()
    }

    #[test]
    fn stabilize_stops_immediately_when_units_agree() {
        let (t, p) = setup("S9");
        let (u, tt, q, w) = (id(&t, "u"), id(&t, "t"), id(&t, "q"), id(&t, "w"));
        let run = stabilize(&t, &p, u, tt).unwrap();
        assert_eq!((run.eps, run.steps), (q, 0));
        assert_eq!(run.trace, vec![(u, tt)]);
        let run = stabilize(&t, &p, w, w).unwrap();
        assert_eq!((run.eps, run.steps), (q, 0));
    }

    #[test]
    fn stabilize_descends_to_the_bottom_on_s1() {
        let (t, p) = setup("S1");
        let y = id(&t, "y");
        let zero = id(&t, "0");
        let run = stabilize(&t, &p, y, y).unwrap();
        assert_eq!(run.eps, zero);
        assert_eq!(run.steps, 2);
        assert_eq!(run.trace, vec![(y, y), (zero, y), (zero, zero)]);
    }

    #[test]
    fn stabilizer_lands_in_the_interpolants() {
        let (t, p) = setup("S1");
        let stab = StabilizerTable::build(&t, &p).unwrap();
        for s in 0..t.n() {
            for x in 0..t.n() {
                let e = stab.eps(s, x);
                assert!(interpolants(&t, s, x).contains(&e));
                assert!(p.le_e(e, p.plus_r(s)));
                assert!(p.le_e(e, p.plus_l(x)));
            }
        }
    }

    #[test]
    fn two_minimal_interpolants_on_s7() {
        let (t, p) = setup("S7");
        let (s, tt) = (id(&t, "s"), id(&t, "t"));
        let run = stabilize(&t, &p, s, tt).unwrap();
        assert_eq!(run.eps, id(&t, "ef"));
        assert_eq!(run.steps, 1);
        assert_eq!(run.trace, vec![(s, tt), (id(&t, "sf"), id(&t, "et"))]);
        let all = interpolants(&t, s, tt);
        let want: Vec<usize> =
            ["e", "f", "g", "h", "1", "ef"].iter().map(|l| id(&t, l)).collect();
        let mut sorted = want.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        let mut minimal = minimal_interpolants(&t, &p, s, tt);
        minimal.sort();
        assert_eq!(minimal, vec![id(&t, "g"), id(&t, "h")]);
    }

    #[test]
    fn guarded_product_table_on_s9() {
        let (t, p) = setup("S9");
        // Expected nonzero entries, everything else vanishes.
        let expect = [
            ("0", "0", "0"),
            ("y", "v", "y"),
            ("z", "q", "z"),
            ("u", "t", "y"),
            ("u", "q", "u"),
            ("t", "u", "z"),
            ("t", "v", "t"),
            ("w", "q", "w"),
            ("v", "y", "y"),
            ("v", "u", "u"),
            ("v", "v", "v"),
            ("q", "z", "z"),
            ("q", "t", "t"),
            ("q", "w", "w"),
            ("q", "q", "q"),
        ];
        let mut table_got = std::collections::BTreeMap::new();
        for s in 0..t.n() {
            for x in 0..t.n() {
                if let Some(r) = sharp_id(&t, &p, s, x) {
                    table_got.insert((s, x), r);
                }
            }
        }
        let want: std::collections::BTreeMap<(usize, usize), usize> = expect
            .iter()
            .map(|(a, b, c)| ((id(&t, a), id(&t, b)), id(&t, c)))
            .collect();
        assert_eq!(table_got, want);
    }

    #[test]
    fn guarded_product_is_not_associative_on_s8() {
        let (t, p) = setup("S8");
        let (u, tt, w) = (id(&t, "u"), id(&t, "t"), id(&t, "w"));
        assert_eq!(sharp_id(&t, &p, u, tt), None);
        let tw = sharp_id(&t, &p, tt, w).unwrap();
        assert_eq!(tw, id(&t, "y"));
        assert_eq!(sharp_id(&t, &p, u, tw), Some(id(&t, "z")));
    }

    #[test]
    fn zeta_columns_on_s9() {
        let (t, p) = setup("S9");
        let zeta = ZetaTransform::build(&p);
        let zero = id(&t, "0");
        for l in ["y", "z", "u", "t", "v"] {
            let s = id(&t, l);
            assert_eq!(zeta.column(s).support(), vec![zero, s], "column {l}");
        }
        let mut w_support = vec![zero, id(&t, "u"), id(&t, "t"), id(&t, "w")];
        w_support.sort();
        assert_eq!(zeta.column(id(&t, "w")).support(), w_support);
        let mut q_support = vec![zero, id(&t, "v"), id(&t, "q")];
        q_support.sort();
        assert_eq!(zeta.column(id(&t, "q")).support(), q_support);
        assert_eq!(zeta.column(zero).support(), vec![zero]);
    }

    #[test]
    fn moebius_values_on_s9() {
        let (t, p) = setup("S9");
        let zeta = ZetaTransform::build(&p);
        let zero = id(&t, "0");
        assert_eq!(zeta.mu(zero, id(&t, "w")), 1);
        assert_eq!(zeta.mu(zero, id(&t, "q")), 0);
        assert_eq!(zeta.mu(id(&t, "t"), id(&t, "w")), -1);
        assert_eq!(zeta.mu(id(&t, "u"), id(&t, "w")), -1);
        assert_eq!(zeta.mu(id(&t, "v"), id(&t, "q")), -1);
        for l in ["y", "z", "u", "t", "v"] {
            assert_eq!(zeta.mu(zero, id(&t, l)), -1, "mu(0, {l})");
        }
    }

    #[test]
    fn star_on_z_reproduces_product_columns() {
        let (t, p) = setup("S9");
        let stab = StabilizerTable::build(&t, &p).unwrap();
        let zeta = ZetaTransform::build(&p);
        let q = id(&t, "q");
        let w = id(&t, "w");
        let qq = star_on_z(&t, &p, &stab, &zeta, q, q).unwrap();
        assert_eq!(qq, zeta.column(q));
        let ww = star_on_z(&t, &p, &stab, &zeta, w, w).unwrap();
        assert_eq!(ww, zeta.column(id(&t, "y")));
    }

    #[test]
    fn star_table_on_s9_matches_frozen_entries() {
        let (t, p) = setup("S9");
        let star = StarTable::build(&t, &p).unwrap();
        let zero = id(&t, "0");
        let nonzero: [(&str, &str, i64, &str); 15] = [
            ("y", "v", 1, "y"),
            ("z", "q", 1, "z"),
            ("u", "t", 1, "y"),
            ("u", "q", 1, "u"),
            ("t", "u", 1, "z"),
            ("t", "v", 1, "t"),
            ("w", "w", -1, "z"),
            ("w", "q", 1, "w"),
            ("v", "y", 1, "y"),
            ("v", "u", 1, "u"),
            ("v", "v", 1, "v"),
            ("q", "z", 1, "z"),
            ("q", "t", 1, "t"),
            ("q", "w", 1, "w"),
            ("q", "q", 1, "q"),
        ];
        let want: std::collections::BTreeMap<(usize, usize), (i64, usize)> = nonzero
            .iter()
            .map(|(a, b, c, r)| ((id(&t, a), id(&t, b)), (*c, id(&t, r))))
            .collect();
        for s in 0..t.n() {
            for x in 0..t.n() {
                let got = star.get(s, x);
                if s == zero && x == zero {
                    assert_eq!(got, &AlgVec::basis(zero));
                } else if let Some(&(c, r)) = want.get(&(s, x)) {
                    let mut v = AlgVec::zero();
                    v.add_term(r, c);
                    assert_eq!(got, &v, "star({}, {})", t.label(s), t.label(x));
                } else {
                    assert!(got.is_zero(), "star({}, {})", t.label(s), t.label(x));
                }
            }
        }
    }

    #[test]
    fn orthogonality_holds_on_s9() {
        let (t, p) = setup("S9");
        let star = StarTable::build(&t, &p).unwrap();
        let report = check_orthogonality(&star, &p);
        assert!(report.holds);
        assert_eq!(report.witness, None);
        assert_eq!(orthogonality_verdict(&star, &p, true), Verdict::Consistent);
    }

    #[test]
    fn strict_witnesses_across_the_reference_family() {
        let expect = [
            ("S1", 0),
            ("S2", 0),
            ("S3", 0),
            ("S4", 0),
            ("S5", 0),
            ("S6", 0),
            ("S7", 2),
            ("S8", 1),
            ("S9", 0),
        ];
        for (name, count) in expect {
            let (t, p) = setup(name);
            let got = strict_interpolant_witnesses(&t, &p);
            assert_eq!(got.len(), count, "{name}");
        }
        let (t, p) = setup("S7");
        let got = strict_interpolant_witnesses(&t, &p);
        let sf = id(&t, "sf");
        let et = id(&t, "et");
        assert_eq!(got, vec![(sf, et, id(&t, "g")), (sf, et, id(&t, "h"))]);
        let (t, p) = setup("S8");
        let got = strict_interpolant_witnesses(&t, &p);
        assert_eq!(got, vec![(id(&t, "t"), id(&t, "w"), id(&t, "v"))]);
    }

    #[test]
    fn algebra_vector_display() {
        let labels: Vec<String> = ["0", "y", "z"].iter().map(|s| s.to_string()).collect();
        let mut v = AlgVec::zero();
        assert_eq!(v.display(&labels), "0");
        v.add_term(1, 1);
        v.add_term(2, -2);
        assert_eq!(v.display(&labels), "y - 2*z");
        let mut w = AlgVec::zero();
        w.add_term(2, -1);
        assert_eq!(w.display(&labels), "-z");
    }
}
