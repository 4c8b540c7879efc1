//! Table generators for the scan corpus: the exhaustive order-3 sweep and
//! seeded random associative tables.

use crate::corpus::CorpusRecord;
use crate::semigroup::MulTable;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Mixing constant for per-index seeds (golden-ratio increment).
pub const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// All associative 3x3 tables over a fixed ordered carrier, in row-major
/// lexicographic order of the table entries.
pub fn sweep_order3() -> Vec<MulTable> {
    let mut out = Vec::new();
    let mut cells = [0usize; 9];
    'next: loop {
        let rows: Vec<Vec<usize>> =
            (0..3).map(|r| cells[3 * r..3 * r + 3].to_vec()).collect();
        if let Ok(t) = MulTable::from_rows(&rows) {
            out.push(t);
        }
        for k in (0..9).rev() {
            if cells[k] < 2 {
                cells[k] += 1;
                cells[k + 1..].fill(0);
                continue 'next;
            }
        }
        return out;
    }
}

/// Partial-table associativity filter: with cell (a, b) just placed, every
/// triple whose inner products are all filled must already associate.
fn consistent(prod: &[Vec<Option<usize>>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = prod[a][b] else { continue };
            for c in 0..n {
                let (Some(bc), Some(ab_c)) = (prod[b][c], prod[ab][c]) else { continue };
                let Some(a_bc) = prod[a][bc] else { continue };
                if ab_c != a_bc {
                    return false;
                }
            }
        }
    }
    true
}

/// Node budget per backtracking attempt; a prefix that cannot be refuted
/// within it is abandoned for a fresh shuffle instead of an exponential proof.
const NODE_BUDGET: usize = 20_000;

/// Distinct from SEED_STRIDE so restart seeds never collide with table seeds.
const RESTART_STRIDE: u64 = 0xD1B5_4A32_D192_ED03;

fn fill(
    prod: &mut Vec<Vec<Option<usize>>>,
    n: usize,
    k: usize,
    rng: &mut ChaCha8Rng,
    budget: &mut usize,
) -> bool {
    if k == n * n {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let (a, b) = (k / n, k % n);
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.shuffle(rng);
    for v in candidates {
        prod[a][b] = Some(v);
        if consistent(prod, n) && fill(prod, n, k + 1, rng, budget) {
            return true;
        }
        if *budget == 0 {
            break;
        }
    }
    prod[a][b] = None;
    false
}

/// One random associative table of order n: cells are filled in row-major
/// order with shuffled candidates, rejecting prefixes that already break
/// associativity and backtracking on dead ends. Attempts that exhaust the
/// node budget restart with a reshuffled order, so the search never stalls
/// on a hard prefix. Deterministic in the seed.
pub fn random_table(n: usize, seed: u64) -> MulTable {
    for attempt in 0u64.. {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(RESTART_STRIDE)));
        let mut prod: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
        let mut budget = NODE_BUDGET;
        if fill(&mut prod, n, 0, &mut rng, &mut budget) {
            let rows: Vec<Vec<usize>> =
                prod.iter().map(|r| r.iter().map(|c| c.unwrap()).collect()).collect();
            return MulTable::from_rows(&rows).expect("generator output re-validates");
        }
    }
    unreachable!("the constant table completes some shuffle");
}

/// `count` random associative tables with orders cycling 2..=6.
pub fn random_tables(count: usize, seed: u64) -> Vec<MulTable> {
    (0..count)
        .map(|i| {
            let n = 2 + (i % 5);
            random_table(n, seed ^ (i as u64).wrapping_mul(SEED_STRIDE))
        })
        .collect()
}

/// The full scan corpus: bundled reference tables, the order-3 sweep, and
/// 200 seeded random tables.
pub fn full_corpus(seed: u64) -> Vec<CorpusRecord> {
    let mut records = crate::corpus::reference();
    for (i, table) in sweep_order3().into_iter().enumerate() {
        records.push(CorpusRecord {
            id: format!("T3-{i:03}"),
            table,
            origin: "order-3 exhaustive sweep".to_string(),
        });
    }
    for (i, table) in random_tables(200, seed).into_iter().enumerate() {
        records.push(CorpusRecord {
            id: format!("R-{i:03}"),
            table,
            origin: format!("seeded random table, base seed {seed:#x}"),
        });
    }
    records
}
