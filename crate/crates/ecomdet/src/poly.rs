//! Sparse multivariate polynomials with unbounded integer coefficients.
//!
//! Variables are indexed 0..nvars and correspond to semigroup elements; display
//! names come from the table's element labels. Terms live in a map from
//! exponent vector to coefficient with no zero coefficients stored, so
//! structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector, one slot per variable.
pub type Expt = Vec<u16>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Expt, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, e: Expt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable universes differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable universes differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable universes differ");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Expt = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.insert_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    /// Replace every variable `i` by `map[i]`; all images must share one
    /// variable universe, which becomes the universe of the result.
    pub fn substitute(&self, map: &[Poly]) -> Poly {
        assert_eq!(map.len(), self.nvars, "substitution must cover every variable");
        let out_vars = map.first().map(|p| p.nvars).unwrap_or(0);
        debug_assert!(map.iter().all(|p| p.nvars == out_vars));
        let mut out = Poly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(out_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&map[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact evaluation at integer points.
    pub fn eval(&self, xs: &[BigInt]) -> BigInt {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &xs[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluation at residues modulo an odd prime below 2^63.
    pub fn eval_mod(&self, xs: &[u64], p: u64) -> u64 {
        assert_eq!(xs.len(), self.nvars);
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut t = rem_bigint(c, p);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = mul_mod(t, pow_mod(xs[i], k as u64, p), p);
                }
            }
            acc = add_mod(acc, t, p);
        }
        acc
    }

    /// Leading term under graded lexicographic order, if any.
    fn leading(&self) -> Option<(&Expt, &BigInt)> {
        self.terms.iter().max_by(|(ea, _), (eb, _)| grlex(ea, eb))
    }

    /// Exact division: returns `q` with `self = q * divisor`, or `None` when
    /// the division does not come out exact.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(self.nvars, divisor.nvars, "variable universes differ");
        let (dlead_e, dlead_c) = divisor.leading()?;
        let dlead_e = dlead_e.clone();
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((rl_e, rl_c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let mut e = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                let (a, b) = (rl_e[i], dlead_e[i]);
                if a < b {
                    return None;
                }
                e[i] = a - b;
            }
            if !(&rl_c % &dlead_c).is_zero() {
                return None;
            }
            let c = &rl_c / &dlead_c;
            let mut mono = Poly::zero(self.nvars);
            mono.terms.insert(e, c);
            rem = rem.sub(&mono.mul(divisor));
            q = q.add(&mono);
        }
        Some(q)
    }

    /// Render using the fixed fixture format: terms sorted by total degree then
    /// lexicographic exponent order (descending), variables printed as
    /// `<letter>_<label>` with `^k` powers and `*` between factors.
    pub fn display(&self, labels: &[String], letter: &str) -> String {
        assert_eq!(labels.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Expt, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| grlex(eb, ea));
        let mut out = String::new();
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&k| k == 0) {
                factors.push(mag.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("{letter}_{}", labels[i])),
                    _ => factors.push(format!("{letter}_{}^{k}", labels[i])),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

fn grlex(a: &Expt, b: &Expt) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Least non-negative residue of a signed big integer.
pub fn rem_bigint(c: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let m = c % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let prod = a.sub(&b).mul(&a.add(&b));
        let expect = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(prod, expect);
    }

    #[test]
    fn eval_symmetry_kills_difference_of_squares() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let p = a.mul(&a).sub(&b.mul(&b));
        let at = p.eval(&[BigInt::from(7), BigInt::from(7)]);
        assert!(at.is_zero());
    }

    #[test]
    fn display_format() {
        let l = labels(&["0", "y", "z"]);
        let y = Poly::var(3, 1);
        let z = Poly::var(3, 2);
        let m = y.mul(&y).mul(&z).mul(&z).neg();
        assert_eq!(m.display(&l, "x"), "-x_y^2*x_z^2");
        let p = y.mul(&y).sub(&z.scale(&BigInt::from(3)));
        assert_eq!(p.display(&l, "x"), "x_y^2 - 3*x_z");
        assert_eq!(Poly::zero(3).display(&l, "x"), "0");
        assert_eq!(Poly::constant(3, -5).display(&l, "x"), "-5");
        let lin = y.sub(&z);
        assert_eq!(lin.display(&l, "y"), "y_y - y_z");
    }

    #[test]
    fn display_orders_by_degree_then_lex() {
        let l = labels(&["a", "b"]);
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        // a^2 + a*b + b^2 + a + 1
        let p = a
            .mul(&a)
            .add(&a.mul(&b))
            .add(&b.mul(&b))
            .add(&a)
            .add(&Poly::constant(2, 1));
        assert_eq!(p.display(&l, "x"), "x_a^2 + x_a*x_b + x_b^2 + x_a + 1");
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let p = a.sub(&b).mul(&a.add(&b)).mul(&a.add(&Poly::constant(2, 3)));
        let d = a.add(&b);
        let q = p.div_exact(&d).expect("divides");
        assert_eq!(q.mul(&d), p);
        assert!(a.add(&Poly::constant(2, 1)).div_exact(&b).is_none());
    }

    #[test]
    fn substitution_shifts_variables() {
        let n = 2;
        let a = Poly::var(n, 0);
        let b = Poly::var(n, 1);
        let p = a.mul(&a).sub(&b);
        // a -> a - b, b -> b
        let img = p.substitute(&[a.sub(&b), b.clone()]);
        let expect = a.sub(&b).mul(&a.sub(&b)).sub(&b);
        assert_eq!(img, expect);
    }

    #[test]
    fn modular_eval_matches_exact() {
        let p_mod: u64 = 4611686018427387847;
        let a = Poly::var(3, 0);
        let b = Poly::var(3, 1);
        let c = Poly::var(3, 2);
        let p = a.mul(&b).sub(&c.mul(&c)).add(&Poly::constant(3, -11));
        let xs = [5u64, 9, 2];
        let exact = p.eval(&[BigInt::from(5), BigInt::from(9), BigInt::from(2)]);
        assert_eq!(p.eval_mod(&xs, p_mod), rem_bigint(&exact, p_mod));
    }
}
