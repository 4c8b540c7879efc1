//! Randomized properties of the exact arithmetic layers: polynomial ring
//! axioms, modular evaluation, determinant engine agreement, the Moebius
//! convolution, and invariance of the analysis under relabeling.

use num_bigint::BigInt;
use proptest::prelude::*;

use ecomdet::analyze::analyze;
use ecomdet::corpus::{parse_corpus, reference, write_corpus, CorpusRecord};
use ecomdet::det::{bareiss, laplace, probe_nonzero, PolyMatrix, PROBE_PRIME};
use ecomdet::gen::random_table;
use ecomdet::poly::{add_mod, mul_mod, Poly};
use ecomdet::poset::Poset;
use ecomdet::semigroup::MulTable;

const NVARS: usize = 3;

/// Sparse polynomials in NVARS variables with small exponents and
/// coefficients, biased to include zero.
fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0u16..3, NVARS), -9i64..10),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = Poly::zero(NVARS);
        for (expt, c) in terms {
            let mut mono = Poly::constant(NVARS, c);
            for (i, &k) in expt.iter().enumerate() {
                for _ in 0..k {
                    mono = mono.mul(&Poly::var(NVARS, i));
                }
            }
            p = p.add(&mono);
        }
        p
    })
}

fn arb_point() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..PROBE_PRIME, NVARS)
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_commutes_and_associates(
        a in arb_poly(), b in arb_poly(), c in arb_poly()
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn subtraction_cancels(a in arb_poly(), b in arb_poly()) {
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.sub(&b), a.add(&b.neg()));
    }

    #[test]
    fn modular_evaluation_is_a_ring_map(
        a in arb_poly(), b in arb_poly(), xs in arb_point()
    ) {
        let p = PROBE_PRIME;
        prop_assert_eq!(
            a.add(&b).eval_mod(&xs, p),
            add_mod(a.eval_mod(&xs, p), b.eval_mod(&xs, p), p)
        );
        prop_assert_eq!(
            a.mul(&b).eval_mod(&xs, p),
            mul_mod(a.eval_mod(&xs, p), b.eval_mod(&xs, p), p)
        );
    }

    #[test]
    fn modular_evaluation_matches_exact(a in arb_poly(), xs in arb_point()) {
        let p = PROBE_PRIME;
        let big: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
        let exact = a.eval(&big);
        let reduced = ((exact % p) + p) % p;
        prop_assert_eq!(BigInt::from(a.eval_mod(&xs, p)), reduced);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }
}

/// Square matrices of sparse polynomials, sizes 1..=4.
fn arb_matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(arb_poly(), n * n).prop_map(move |entries| {
            PolyMatrix::with_nvars(NVARS, (0..n).collect(), (0..n).collect(), entries)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_engines_agree(m in arb_matrix(), seed in any::<u64>()) {
        let a = laplace(&m).unwrap();
        let b = bareiss(&m).unwrap();
        prop_assert_eq!(&a, &b);
        // At twenty trials of a degree <= 8 polynomial modulo a 62-bit prime,
        // a missed nonzero value is beyond reach.
        prop_assert_eq!(probe_nonzero(&m, seed).unwrap(), !a.is_zero());
    }
}

/// Random poset on 3..=8 points: upward edges closed under transitivity.
fn arb_poset() -> impl Strategy<Value = Poset> {
    (3usize..=8).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), m * m).prop_map(move |edges| {
            let mut le = vec![0u64; m];
            for a in 0..m {
                le[a] |= 1 << a;
                for b in (a + 1)..m {
                    if edges[a * m + b] {
                        le[a] |= 1 << b;
                    }
                }
            }
            // Transitive closure; edges only go up, so antisymmetry is free.
            for k in 0..m {
                for a in 0..m {
                    if le[a] & (1 << k) != 0 {
                        le[a] |= le[k];
                    }
                }
            }
            Poset::from_relation(m, |a, b| le[a] & (1 << b) != 0).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn moebius_convolves_to_delta(poset in arb_poset()) {
        let m = poset.len();
        let mu = poset.moebius();
        for a in 0..m {
            for b in 0..m {
                let lhs: i64 = (0..m)
                    .filter(|&c| poset.le(a, c) && poset.le(c, b))
                    .map(|c| mu[a][c])
                    .sum();
                prop_assert_eq!(lhs, i64::from(a == b), "at ({}, {})", a, b);
            }
        }
    }
}

/// A table conjugated by a relabeling permutation.
fn permuted(table: &MulTable, perm: &[usize]) -> MulTable {
    let n = table.n();
    let mut inv = vec![0; n];
    for (a, &pa) in perm.iter().enumerate() {
        inv[pa] = a;
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| perm[table.mul(inv[a], inv[b])]).collect())
        .collect();
    MulTable::from_rows(&rows).unwrap()
}

fn arb_reference_relabeling() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..9).prop_flat_map(|i| {
        let n = reference()[i].table.n();
        (Just(i), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn analysis_flags_ignore_labels((i, perm) in arb_reference_relabeling(), seed in any::<u64>()) {
        let base = reference().swap_remove(i);
        let relabeled = CorpusRecord {
            id: base.id.clone(),
            table: permuted(&base.table, &perm),
            origin: String::new(),
        };
        let a = analyze(&base, seed);
        let b = analyze(&relabeled, seed);
        prop_assert_eq!(a.flags, b.flags);
        prop_assert_eq!(a.theta_nonzero, b.theta_nonzero);
        prop_assert_eq!(a.conjecture, b.conjecture);
    }

    #[test]
    fn generated_tables_associate(n in 1usize..=5, seed in any::<u64>()) {
        let t = random_table(n, seed);
        prop_assert_eq!(t.n(), n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    prop_assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn corpus_roundtrips_through_text(
        seeds in prop::collection::vec(any::<u64>(), 1..6),
        sizes in prop::collection::vec(2usize..=5, 1..6)
    ) {
        let records: Vec<CorpusRecord> = seeds
            .iter()
            .zip(&sizes)
            .enumerate()
            .map(|(i, (&seed, &n))| CorpusRecord {
                id: format!("t{i}"),
                table: random_table(n, seed),
                origin: String::new(),
            })
            .collect();
        let text = write_corpus(&records);
        let back = parse_corpus(&text).unwrap();
        prop_assert_eq!(back.len(), records.len());
        for (x, y) in records.iter().zip(&back) {
            prop_assert_eq!(&x.id, &y.id);
            prop_assert_eq!(x.table.n(), y.table.n());
            for a in 0..x.table.n() {
                for b in 0..x.table.n() {
                    prop_assert_eq!(x.table.mul(a, b), y.table.mul(a, b));
                }
            }
        }
    }
}
