//! Release gates: the regression and property checks that must hold before
//! shipping. Reachable from the integration tests and the `selftest`
//! subcommand; each gate reports one pass/fail line.

use crate::analyze::{per_record_seed, scan, summarize, write_jsonl};
use crate::cayley::{cayley, contracted_cayley, star_cayley, theta, theta_tilde,
    zero_factor_identity_holds};
use crate::corpus::{reference_table, CorpusRecord};
use crate::det::{bareiss, int_det, laplace, probe_nonzero, PolyMatrix};
use crate::ecom::{EcomProfile, Side};
use crate::factor::{factor_central_idempotent, factor_main_theorem, FactorError};
use crate::poly::Poly;
use crate::semigroup::{GreenData, MulTable};
use crate::star::{stabilize, star_on_z, AlgVec, StabilizerTable, StarTable, ZetaTransform};
use crate::DEFAULT_SEED;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{} {} ({} ms) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.millis,
            self.detail
        )
    }
}

fn finish(
    name: &'static str,
    started: Instant,
    budget_ms: Option<u128>,
    mut fails: Vec<String>,
    ok_detail: String,
) -> CriterionReport {
    let millis = started.elapsed().as_millis();
    if let Some(budget) = budget_ms {
        if millis >= budget {
            fails.push(format!("took {millis} ms, budget {budget} ms"));
        }
    }
    CriterionReport {
        name,
        passed: fails.is_empty(),
        detail: if fails.is_empty() { ok_detail } else { fails.join("; ") },
        millis,
    }
}

fn var(t: &MulTable, label: &str) -> Poly {
    let id = t.id_of_label(label).unwrap_or_else(|| panic!("no element labeled {label}"));
    Poly::var(t.n(), id)
}

/// Exact determinants of the nine reference tables.
pub fn criterion_reference_determinants() -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let mut check = |id: &str, contracted: bool, expected: Option<Poly>| {
        let t = reference_table(id);
        let computed = if contracted { theta_tilde(&t) } else { theta(&t) };
        match (computed, expected) {
            (Ok(p), Some(e)) => {
                if p != e {
                    fails.push(format!(
                        "{id}: got {}, want {}",
                        p.display(t.labels(), "x"),
                        e.display(t.labels(), "x")
                    ));
                }
            }
            (Ok(p), None) => {
                if p.is_zero() {
                    fails.push(format!("{id}: expected a nonzero determinant"));
                }
            }
            (Err(e), _) => fails.push(format!("{id}: {e}")),
        }
    };

    {
        let t = reference_table("S1");
        let (y, z) = (var(&t, "y"), var(&t, "z"));
        check("S1", true, Some(y.mul(&y).mul(&z).mul(&z).neg()));
    }
    {
        let t = reference_table("S2");
        let (y, z) = (var(&t, "y"), var(&t, "z"));
        check("S2", true, Some(y.mul(&y).mul(&y).mul(&z).mul(&z).mul(&z).mul(&z)));
    }
    check("S3", false, Some(Poly::zero(9)));
    {
        let t = reference_table("S4");
        let (y, z, u) = (var(&t, "y"), var(&t, "z"), var(&t, "u"));
        check("S4", true, Some(y.mul(&y).mul(&z).mul(&z).mul(&u).mul(&u).neg()));
    }
    {
        // The reference table gives -x_y^3*x_z^3 here; displays of this value
        // that multiply the diagonal blocks out of place drop the
        // row-permutation sign, so the sign is checked deliberately.
        let t = reference_table("S5");
        let (y, z) = (var(&t, "y"), var(&t, "z"));
        check("S5", true, Some(y.mul(&y).mul(&y).mul(&z).mul(&z).mul(&z).neg()));
    }
    {
        let t = reference_table("S6");
        let (y, z, u, tt) = (var(&t, "y"), var(&t, "z"), var(&t, "u"), var(&t, "t"));
        let d = u.sub(&tt);
        let inner = tt.mul(&z).mul(&d).sub(&d.mul(&z).mul(&u));
        check("S6", true, Some(y.mul(&y).mul(&z).mul(&inner)));
    }
    check("S7", false, Some(Poly::zero(16)));
    check("S8", false, Some(Poly::zero(8)));
    check("S9", false, None);

    finish(
        "reference-determinants",
        started,
        Some(1000),
        fails,
        "9 determinants match exactly (S5 = -x_y^3*x_z^3, sign included)".to_string(),
    )
}

/// The S9 star-algebra pipeline: star table entries, diagonal blocks, and
/// verdict agreement between the factored and direct determinants.
pub fn criterion_star_pipeline() -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let t = reference_table("S9");
    let name = "star-pipeline-s9";

    let profile = match EcomProfile::build(&t) {
        Ok(p) => p,
        Err(e) => {
            return finish(name, started, Some(1000), vec![format!("profile: {e}")], String::new())
        }
    };
    let star = match StarTable::build(&t, &profile) {
        Ok(s) => s,
        Err(e) => {
            return finish(name, started, Some(1000), vec![format!("star: {e}")], String::new())
        }
    };

    // Expected table: label pairs with nonzero products; everything else is 0.
    let id = |l: &str| t.id_of_label(l).unwrap();
    let entries: &[(&str, &str, &[(&str, i64)])] = &[
        ("0", "0", &[("0", 1)]),
        ("y", "v", &[("y", 1)]),
        ("z", "q", &[("z", 1)]),
        ("u", "t", &[("y", 1)]),
        ("u", "q", &[("u", 1)]),
        ("t", "u", &[("z", 1)]),
        ("t", "v", &[("t", 1)]),
        ("w", "w", &[("z", -1)]),
        ("w", "q", &[("w", 1)]),
        ("v", "y", &[("y", 1)]),
        ("v", "u", &[("u", 1)]),
        ("v", "v", &[("v", 1)]),
        ("q", "z", &[("z", 1)]),
        ("q", "t", &[("t", 1)]),
        ("q", "w", &[("w", 1)]),
        ("q", "q", &[("q", 1)]),
    ];
    let mut expected = vec![vec![AlgVec::zero(); t.n()]; t.n()];
    for &(a, b, terms) in entries {
        let mut v = AlgVec::zero();
        for &(l, c) in terms {
            v.add_term(id(l), c);
        }
        expected[id(a)][id(b)] = v;
    }
    for a in 0..t.n() {
        for b in 0..t.n() {
            if *star.get(a, b) != expected[a][b] {
                fails.push(format!(
                    "{}*{}: got {}, want {}",
                    t.label(a),
                    t.label(b),
                    star.get(a, b).display(t.labels()),
                    expected[a][b].display(t.labels())
                ));
            }
        }
    }

    match factor_main_theorem(&t, DEFAULT_SEED) {
        Ok(report) => {
            let (y, z) = (var(&t, "y"), var(&t, "z"));
            let want_v = y.mul(&z).mul(&y);
            let want_q = z.mul(&y).mul(&z).mul(&z);
            let mut seen = 0;
            for b in &report.blocks {
                let e = t.label(b.e).to_string();
                if e == "v" || e == "q" {
                    let want = if e == "v" { &want_v } else { &want_q };
                    if b.det_x != *want && b.det_x != want.neg() {
                        fails.push(format!(
                            "block {e}: det {} differs from the expected product up to sign",
                            b.det_x.display(t.labels(), "x")
                        ));
                    }
                    seen += 1;
                }
            }
            if seen != 2 {
                fails.push(format!("expected blocks at v and q, saw {seen}"));
            }
            if report.overall_nonzero != Some(true) {
                fails.push("factored verdict is not NONZERO".to_string());
            }
            let full = cayley(&t);
            match laplace(&full) {
                Ok(p) if !p.is_zero() => {}
                Ok(_) => fails.push("laplace finds a zero determinant".to_string()),
                Err(e) => fails.push(format!("laplace: {e}")),
            }
            match probe_nonzero(&full, DEFAULT_SEED) {
                Ok(true) => {}
                Ok(false) => fails.push("probe finds a zero determinant".to_string()),
                Err(e) => fails.push(format!("probe: {e}")),
            }
        }
        Err(e) => fails.push(format!("factorization: {e}")),
    }

    finish(
        name,
        started,
        Some(1000),
        fails,
        "star table matches entry-for-entry (w*w = -z); blocks and verdicts agree".to_string(),
    )
}

fn has_star_gate(table: &MulTable) -> bool {
    let pre = table.preconditions();
    table.is_ecom() && pre.surjective && pre.balanced && pre.unital
}

fn set_of(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// All structural invariants for one table. Returns human-readable failure
/// descriptions, empty when everything holds.
pub fn property_failures(id: &str, table: &MulTable) -> Vec<String> {
    let mut fails = Vec::new();
    let mut fail = |msg: String| fails.push(format!("{id}: {msg}"));
    let profile = match EcomProfile::build(table) {
        Ok(p) => p,
        Err(e) => return vec![format!("{id}: profile failed: {e}")],
    };
    let n = table.n();
    let es: Vec<usize> = profile.idempotents().to_vec();

    // Unit orders: closed forms match the two-sided existential definitions.
    for s in 0..n {
        for t in 0..n {
            let right_exists = es.iter().any(|&e| table.mul(t, e) == s);
            if right_exists != profile.le_r(table, s, t) {
                fail(format!("right order mismatch at ({s}, {t})"));
            }
            let left_exists = es.iter().any(|&e| table.mul(e, t) == s);
            if left_exists != profile.le_l(table, s, t) {
                fail(format!("left order mismatch at ({s}, {t})"));
            }
            let two_step = es
                .iter()
                .any(|&e| es.iter().any(|&f| table.mul(table.mul(e, t), f) == s));
            if two_step != profile.ll(table, s, t) {
                fail(format!("sandwich order mismatch at ({s}, {t})"));
            }
        }
    }

    // Unit maps are monotone along all three orders.
    for s in 0..n {
        for t in 0..n {
            if profile.le_r(table, s, t)
                && !profile.le_e(profile.plus_r(s), profile.plus_r(t))
            {
                fail(format!("right unit not monotone at ({s}, {t})"));
            }
            if profile.le_l(table, s, t)
                && !profile.le_e(profile.plus_l(s), profile.plus_l(t))
            {
                fail(format!("left unit not monotone at ({s}, {t})"));
            }
            if profile.ll(table, s, t)
                && !(profile.le_e(profile.plus_r(s), profile.plus_r(t))
                    && profile.le_e(profile.plus_l(s), profile.plus_l(t)))
            {
                fail(format!("units not monotone along sandwich order at ({s}, {t})"));
            }
        }
    }

    // The sandwich order restricted to idempotents is the semilattice order.
    for &e in &es {
        for &f in &es {
            if profile.ll(table, e, f) != profile.le_e(e, f) {
                fail(format!("sandwich order disagrees with the semilattice at ({e}, {f})"));
            }
        }
    }

    // Slice ideals, emptiness duality, and the class decompositions.
    let green = table.green();
    for &e in &es {
        let ir = profile.i_slice(e, Side::Right);
        let il = profile.i_slice(e, Side::Left);
        let ir_set = set_of(&ir);
        let il_set = set_of(&il);
        for &x in &ir {
            for s in 0..n {
                if !ir_set.contains(&table.mul(s, x)) {
                    fail(format!("right slice of {e} is not a left ideal (s = {s}, x = {x})"));
                }
            }
        }
        for &x in &il {
            for s in 0..n {
                if !il_set.contains(&table.mul(x, s)) {
                    fail(format!("left slice of {e} is not a right ideal (s = {s}, x = {x})"));
                }
            }
        }
        if ir.is_empty() != il.is_empty() {
            fail(format!("slice emptiness differs between sides at {e}"));
        }

        let se: BTreeSet<usize> = (0..n).map(|s| table.mul(s, e)).collect();
        let es_: BTreeSet<usize> = (0..n).map(|s| table.mul(e, s)).collect();
        let lt = set_of(&profile.tilde_l_of(e));
        let rt = set_of(&profile.tilde_r_of(e));

        // Se splits into the strict slice and the unit class, disjointly.
        if !ir_set.is_disjoint(&lt) || se != ir_set.union(&lt).copied().collect() {
            fail(format!("Se does not split at {e}"));
        }
        if !il_set.is_disjoint(&rt) || es_ != il_set.union(&rt).copied().collect() {
            fail(format!("eS does not split at {e}"));
        }
        // The strict slice splits into whole unit classes of its idempotents.
        let ir_units: BTreeSet<usize> = ir
            .iter()
            .flat_map(|&f| if es.contains(&f) { profile.tilde_l_of(f) } else { vec![] })
            .collect();
        if !ir.is_empty() && ir_set != ir_units {
            fail(format!("right slice of {e} is not a union of unit classes"));
        }
        // Empty slice exactly when Se collapses to the Green and unit class.
        let le = set_of(&GreenData::class_of(&green.l_class, e));
        let re = set_of(&GreenData::class_of(&green.r_class, e));
        if ir.is_empty() != (se == lt) {
            fail(format!("slice emptiness vs Se collapse differs at {e}"));
        }
        if ir.is_empty() && (se != le || le != lt) {
            fail(format!("Se, the L-class, and the unit class differ at {e}"));
        }
        if il.is_empty() != (es_ == rt) {
            fail(format!("slice emptiness vs eS collapse differs at {e}"));
        }
        if il.is_empty() && (es_ != re || re != rt) {
            fail(format!("eS, the R-class, and the unit class differ at {e}"));
        }
        // Cardinalities and idempotent sets agree across sides.
        let e_ir: BTreeSet<usize> = ir.iter().copied().filter(|x| es.contains(x)).collect();
        let e_il: BTreeSet<usize> = il.iter().copied().filter(|x| es.contains(x)).collect();
        if e_ir != e_il {
            fail(format!("slice idempotents differ between sides at {e}"));
        }
        if ir.len() != il.len() {
            fail(format!("slice sizes differ between sides at {e}"));
        }
        if lt.len() != rt.len() {
            fail(format!("unit class sizes differ between sides at {e}"));
        }
    }

    // Stabilizer runs: closed forms, product preservation, and the unit
    // properties of the stabilizing idempotent.
    for s in 0..n {
        for t in 0..n {
            let run = match stabilize(table, &profile, s, t) {
                Ok(r) => r,
                Err(e) => {
                    fail(format!("stabilize({s}, {t}): {e}"));
                    continue;
                }
            };
            let st = table.mul(s, t);
            for k in 0..run.trace.len() {
                let (sk, tk) = run.trace[k];
                if table.mul(sk, tk) != st {
                    fail(format!("stabilize({s}, {t}): product drifts at step {k}"));
                }
                for &e in &es {
                    if table.mul3(sk, e, tk) != table.mul3(s, e, t) {
                        fail(format!("stabilize({s}, {t}): wedge drifts at step {k}"));
                    }
                }
                if k + 1 < run.trace.len() {
                    let (s1, t1) = run.trace[k + 1];
                    if s1 != table.mul(s, profile.plus_l(tk)) || t1 != table.mul(profile.plus_r(sk), t)
                    {
                        fail(format!("stabilize({s}, {t}): closed form breaks at step {k}"));
                    }
                }
            }
            let eps = run.eps;
            if !table.is_idempotent(eps)
                || table.mul3(s, eps, t) != st
                || profile.plus_r(table.mul(s, eps)) != eps
                || profile.plus_l(table.mul(eps, t)) != eps
                || !profile.le_e(eps, profile.plus_r(s))
                || !profile.le_e(eps, profile.plus_l(t))
            {
                fail(format!("stabilize({s}, {t}): bad stabilizer {eps}"));
            }
        }
    }

    // Zeta and Moebius are mutually inverse, unimodular, and reproduce the
    // star products of all pairs.
    let zeta = ZetaTransform::build(&profile);
    let z: Vec<Vec<i64>> =
        (0..n).map(|r| (0..n).map(|c| zeta.column(c).coeff(r)).collect()).collect();
    let zi: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| zeta.mu(r, c)).collect()).collect();
    for r in 0..n {
        for c in 0..n {
            let forward: i64 = (0..n).map(|k| z[r][k] * zi[k][c]).sum();
            let backward: i64 = (0..n).map(|k| zi[r][k] * z[k][c]).sum();
            let want = i64::from(r == c);
            if forward != want || backward != want {
                fail(format!("zeta and moebius do not invert at ({r}, {c})"));
            }
        }
    }
    if int_det(&z) != BigInt::one() {
        fail("zeta matrix is not unimodular".to_string());
    }

    let stab = match StabilizerTable::build(table, &profile) {
        Ok(s) => s,
        Err(e) => {
            fails.push(format!("{id}: stabilizer table: {e}"));
            return fails;
        }
    };
    for s in 0..n {
        for t in 0..n {
            if let Err(e) = star_on_z(table, &profile, &stab, &zeta, s, t) {
                fails.push(format!("{id}: {e}"));
            }
        }
    }

    let star = match StarTable::build(table, &profile) {
        Ok(s) => s,
        Err(e) => {
            fails.push(format!("{id}: star table: {e}"));
            return fails;
        }
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = star.mul_vec(star.get(a, b), &AlgVec::basis(c));
                let right = star.mul_vec(&AlgVec::basis(a), star.get(b, c));
                if left != right {
                    fails.push(format!("{id}: star product not associative at ({a}, {b}, {c})"));
                }
            }
        }
    }

    if table.zero().is_some() {
        match (theta(table), theta_tilde(table)) {
            (Ok(full), Ok(tilde)) => {
                if !zero_factor_identity_holds(table, &full, &tilde) {
                    fails.push(format!("{id}: zero-variable factor identity fails"));
                }
            }
            (Err(e), _) | (_, Err(e)) => fails.push(format!("{id}: determinant: {e}")),
        }
    }

    fails
}

/// Structural invariants over every corpus member passing the star gate.
pub fn criterion_property_suite(corpus: &[CorpusRecord]) -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let mut checked = 0;
    for rec in corpus {
        if !has_star_gate(&rec.table) {
            continue;
        }
        checked += 1;
        let f = property_failures(&rec.id, &rec.table);
        if fails.len() < 10 {
            fails.extend(f.into_iter().take(10 - fails.len()));
        }
    }
    finish(
        "property-suite",
        started,
        Some(60_000),
        fails,
        format!("{checked} gated members, all invariants hold"),
    )
}

/// Conjecture scan over the whole corpus plus the frozen split permutations.
pub fn criterion_conjecture_scan(corpus: &[CorpusRecord]) -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let results = scan(corpus, 1, DEFAULT_SEED);
    let summary = summarize(&results);
    if !summary.counterexamples.is_empty() {
        fails.push(format!("counterexamples: {:?}", summary.counterexamples));
    }
    for (id, want) in [("S5", "(1,2)"), ("S6", "(1,2,3)")] {
        match results.iter().find(|r| r.id == id) {
            Some(r) if r.sigma.as_deref() == Some(want) => {}
            Some(r) => fails.push(format!("{id}: sigma {:?}, want {want}", r.sigma)),
            None => fails.push(format!("{id} missing from scan")),
        }
    }
    finish(
        "conjecture-scan",
        started,
        None,
        fails,
        format!("{} records scanned, 0 counterexamples", summary.total),
    )
}

fn cross_check_matrix(
    fails: &mut Vec<String>,
    matrices: &mut usize,
    id: &str,
    seed: u64,
    m: &PolyMatrix,
    what: &str,
) {
    if m.rows() > 10 || m.rows() == 0 {
        return;
    }
    *matrices += 1;
    match (laplace(m), bareiss(m), probe_nonzero(m, seed)) {
        (Ok(a), Ok(b), Ok(p)) => {
            if a != b {
                fails.push(format!("{id}: {what}: laplace and bareiss differ"));
            }
            if p != !a.is_zero() {
                fails.push(format!("{id}: {what}: probe verdict disagrees"));
            }
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            fails.push(format!("{id}: {what}: {e}"))
        }
    }
}

/// Determinant engines agree on every matrix up to 10x10, and the
/// central-idempotent product formula matches the direct determinant.
pub fn criterion_engine_agreement(corpus: &[CorpusRecord]) -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let mut matrices = 0;
    let mut central = 0;
    let mut central_skipped = 0;

    for (idx, rec) in corpus.iter().enumerate() {
        let table = &rec.table;
        let seed = per_record_seed(DEFAULT_SEED, idx);

        cross_check_matrix(&mut fails, &mut matrices, &rec.id, seed, &cayley(table), "full");
        if table.zero().is_some() {
            match contracted_cayley(table) {
                Ok(m) => cross_check_matrix(&mut fails, &mut matrices, &rec.id, seed, &m, "contracted"),
                Err(e) => fails.push(format!("{}: contracted: {e}", rec.id)),
            }
        }
        if has_star_gate(table) {
            if let Ok(profile) = EcomProfile::build(table) {
                if let Ok(star) = StarTable::build(table, &profile) {
                    cross_check_matrix(
                        &mut fails,
                        &mut matrices,
                        &rec.id,
                        seed,
                        &star_cayley(&star),
                        "star",
                    );
                }
            }
        }

        let es = table.idempotents();
        let all_central = es
            .iter()
            .all(|&e| (0..table.n()).all(|s| table.mul(e, s) == table.mul(s, e)));
        if all_central {
            match factor_central_idempotent(table) {
                Ok(_) => central += 1,
                Err(FactorError::Profile(_)) => central_skipped += 1,
                Err(e) => fails.push(format!("{}: central product: {e}", rec.id)),
            }
        }
        if fails.len() >= 10 {
            break;
        }
    }

    finish(
        "engine-agreement",
        started,
        None,
        fails,
        format!(
            "{matrices} matrices cross-checked; central product verified on {central} members \
             ({central_skipped} with partial unit maps skipped)"
        ),
    )
}

/// Scan output is byte-identical across parallelism levels.
pub fn criterion_scan_determinism(corpus: &[CorpusRecord]) -> CriterionReport {
    let started = Instant::now();
    let mut fails = Vec::new();
    let serial = scan(corpus, 1, DEFAULT_SEED);
    let parallel = scan(corpus, 8, DEFAULT_SEED);
    let mut a = Vec::new();
    let mut b = Vec::new();
    if let Err(e) = write_jsonl(&serial, &mut a) {
        fails.push(format!("serialize: {e}"));
    }
    if let Err(e) = write_jsonl(&parallel, &mut b) {
        fails.push(format!("serialize: {e}"));
    }
    if a != b {
        fails.push("outputs differ between 1 and 8 workers".to_string());
    }
    let dir = std::env::temp_dir();
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos())
        .unwrap_or(0);
    let pa = dir.join(format!("scan-j1-{stamp}.jsonl"));
    let pb = dir.join(format!("scan-j8-{stamp}.jsonl"));
    let file_check = std::fs::write(&pa, &a)
        .and_then(|_| std::fs::write(&pb, &b))
        .and_then(|_| Ok(std::fs::read(&pa)? == std::fs::read(&pb)?));
    match file_check {
        Ok(true) => {}
        Ok(false) => fails.push("files differ after round-trip".to_string()),
        Err(e) => fails.push(format!("file io: {e}")),
    }
    let _ = std::fs::remove_file(&pa);
    let _ = std::fs::remove_file(&pb);

    finish(
        "scan-determinism",
        started,
        None,
        fails,
        format!("{} records, byte-identical output at 1 and 8 workers", serial.len()),
    )
}

/// Run every gate in order with a shared corpus.
pub fn run_acceptance() -> Vec<CriterionReport> {
    let corpus = crate::gen::full_corpus(DEFAULT_SEED);
    vec![
        criterion_reference_determinants(),
        criterion_star_pipeline(),
        criterion_property_suite(&corpus),
        criterion_conjecture_scan(&corpus),
        criterion_engine_agreement(&corpus),
        criterion_scan_determinism(&corpus),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_checks_accept_a_clean_member() {
        let table = reference_table("S9");
        assert_eq!(property_failures("S9", &table), Vec::<String>::new());
    }

    #[test]
    fn property_checks_accept_s1_through_s6() {
        for id in ["S1", "S2", "S3", "S4", "S5", "S6", "S8"] {
            let table = reference_table(id);
            assert_eq!(property_failures(id, &table), Vec::<String>::new(), "member {id}");
        }
    }

    #[test]
    fn report_lines_have_a_fixed_shape() {
        let r = CriterionReport {
            name: "demo",
            passed: true,
            detail: "fine".to_string(),
            millis: 3,
        };
        assert_eq!(r.line(), "PASS demo (3 ms) fine");
    }
}
