//! Brute-force cycle oracles and the census of 5-vertex subtournaments.
//!
//! There are twelve isomorphism classes of 5-vertex tournaments. A class is
//! identified by its canonical form, the lexicographically smallest
//! `<bits>` serialization over all 120 relabelings, and classes are numbered
//! by `(hamiltonian 5-cycles, canonical form)` ascending.
//!
//! The fourteen [`RQuantities`] are each a linear combination of the census
//! counts. [`recover_matrix`] reads the coefficients off the twelve class
//! representatives, which gives an integer 14×12 [`RelationMatrix`]. Its
//! rows satisfy `8·R14 = −2·(R1+…+R8) + 2·(R9+…+R12) + 6·R13`, which is
//! the closed-form 5-cycle count in [`crate::edge_scores`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::edge_scores::{c5_exact_with, EdgeScore};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rational::choose;
use crate::subsets::{permutations, sum_over_subsets};
use crate::tournament::{pair_index, Tournament};

pub const CLASS_COUNT: usize = 12;

/// Largest `n` for which the full 5-subset census is considered practical.
pub const CENSUS_MAX_N: usize = 100;

/// Largest `n` for which [`r_quantities`] uses the brute-force 5-cycle count.
pub const BRUTE_C5_MAX_N: usize = 12;

/// Directed Hamiltonian cycles of the subtournament on `verts`, each cycle
/// counted once (rooted at `verts[0]`).
pub fn hamiltonian_cycles(t: &Tournament, verts: &[usize]) -> u64 {
    fn extend(t: &Tournament, verts: &[usize], last: usize, remaining: u32) -> u64 {
        if remaining == 0 {
            return t.beats(last, verts[0]) as u64;
        }
        let mut total = 0;
        let mut rest = remaining;
        while rest != 0 {
            let pos = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = verts[pos];
            if t.beats(last, next) {
                total += extend(t, verts, next, remaining & !(1 << pos));
            }
        }
        total
    }
    let k = verts.len();
    if k < 3 {
        return 0;
    }
    assert!(k <= 32, "hamiltonian cycle search limited to 32 vertices");
    let all_but_root = ((1u64 << k) - 2) as u32;
    extend(t, verts, verts[0], all_but_root)
}

/// Number of directed cycles of length exactly `k`, by enumerating every
/// `k`-subset and counting its Hamiltonian cycles. Zero unless `3 ≤ k ≤ n`.
pub fn count_k_cycles_bruteforce(t: &Tournament, k: usize) -> u64 {
    count_k_cycles_bruteforce_with(t, k, Exec::default())
}

pub fn count_k_cycles_bruteforce_with(t: &Tournament, k: usize, exec: Exec) -> u64 {
    if k < 3 || k > t.n() {
        return 0;
    }
    sum_over_subsets(t.n(), k, exec, |s| hamiltonian_cycles(t, s) as i128) as u64
}

/// 10-bit orientation pattern of a 5-vertex tournament: bit `p` is set when
/// the `p`-th pair (lexicographic) points from lower to higher index.
fn pattern_of(t: &Tournament, verts: [usize; 5]) -> usize {
    let mut p = 0;
    let mut bit = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            p |= (t.beats(verts[i], verts[j]) as usize) << bit;
            bit += 1;
        }
    }
    p
}

fn from_pattern(p: usize) -> Tournament {
    Tournament::from_fn(5, |i, j| p >> pair_index(5, i, j) & 1 == 1)
}

/// Orders patterns like their `<bits>` strings: pair 0 is most significant.
fn lex_key(p: usize) -> usize {
    (0..10).fold(0, |acc, bit| acc << 1 | (p >> bit & 1))
}

/// The twelve isomorphism classes of 5-vertex tournaments.
#[derive(Debug, Clone)]
pub struct ClassTable {
    /// Representative of each class: the tournament whose serialization is
    /// the canonical form.
    pub reps: Vec<Tournament>,
    /// Canonical serialization → class index.
    pub canon_index: BTreeMap<String, usize>,
    /// Hamiltonian 5-cycles in each class.
    pub ham_counts: Vec<u64>,
    /// Labeled tournaments on `0..5` falling in each class.
    pub sizes: Vec<u64>,
    class_of_pattern: Vec<u8>,
}

impl ClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    #[inline]
    pub fn class_of_pattern(&self, pattern: usize) -> usize {
        self.class_of_pattern[pattern] as usize
    }

    pub fn canonical(&self, class: usize) -> String {
        self.reps[class].serialize()
    }
}

/// Enumerates all 1024 labeled 5-vertex tournaments and partitions them by
/// canonical form.
pub fn build_class_table() -> ClassTable {
    let perms = permutations(5);
    let canonical_key: Vec<usize> = (0..1024)
        .map(|p| {
            let t = from_pattern(p);
            perms
                .iter()
                .map(|s| lex_key(pattern_of(&t, [s[0], s[1], s[2], s[3], s[4]])))
                .min()
                .unwrap()
        })
        .collect();

    let mut classes: Vec<(u64, String, usize)> = Vec::new();
    let mut keys: Vec<usize> = canonical_key.clone();
    keys.sort_unstable();
    keys.dedup();
    for key in keys {
        // the pattern whose lex key equals the canonical key is the representative
        let rep = (0..1024).find(|&p| lex_key(p) == key).unwrap();
        let t = from_pattern(rep);
        classes.push((hamiltonian_cycles(&t, &[0, 1, 2, 3, 4]), t.serialize(), rep));
    }
    classes.sort();

    let index_of_key: BTreeMap<usize, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, &(_, _, rep))| (lex_key(rep), i))
        .collect();
    let class_of_pattern: Vec<u8> = canonical_key
        .iter()
        .map(|k| index_of_key[k] as u8)
        .collect();
    let mut sizes = vec![0u64; classes.len()];
    for &c in &class_of_pattern {
        sizes[c as usize] += 1;
    }
    ClassTable {
        reps: classes
            .iter()
            .map(|&(_, _, rep)| from_pattern(rep))
            .collect(),
        canon_index: classes
            .iter()
            .enumerate()
            .map(|(i, (_, s, _))| (s.clone(), i))
            .collect(),
        ham_counts: classes.iter().map(|&(h, _, _)| h).collect(),
        sizes,
        class_of_pattern,
    }
}

/// Process-wide class table, built on first use.
pub fn class_table() -> &'static ClassTable {
    static TABLE: OnceLock<ClassTable> = OnceLock::new();
    TABLE.get_or_init(build_class_table)
}

pub fn classify5(t: &Tournament) -> Result<usize> {
    if t.n() != 5 {
        return Err(Error::WrongOrder(t.n()));
    }
    Ok(class_table().class_of_pattern(pattern_of(t, [0, 1, 2, 3, 4])))
}

/// Number of 5-subsets inducing each class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Census5 {
    pub counts: [u64; CLASS_COUNT],
}

impl Census5 {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Σ_j ham_counts[j]·counts[j], i.e. the number of directed 5-cycles.
    pub fn five_cycles(&self, table: &ClassTable) -> u64 {
        self.counts
            .iter()
            .zip(&table.ham_counts)
            .map(|(c, h)| c * h)
            .sum()
    }
}

/// Census of all 5-subsets. All zero when `n < 5`.
pub fn census5(t: &Tournament) -> Census5 {
    census5_with(t, Exec::default())
}

pub fn census5_with(t: &Tournament, exec: Exec) -> Census5 {
    let n = t.n();
    let table = class_table();
    let counts = exec.map_reduce(
        0..n,
        || [0u64; CLASS_COUNT],
        |a| {
            let mut local = [0u64; CLASS_COUNT];
            for b in a + 1..n {
                let p_ab = t.beats(a, b) as usize;
                for c in b + 1..n {
                    let p_c = p_ab | (t.beats(a, c) as usize) << 1 | (t.beats(b, c) as usize) << 4;
                    for d in c + 1..n {
                        let p_d = p_c
                            | (t.beats(a, d) as usize) << 2
                            | (t.beats(b, d) as usize) << 5
                            | (t.beats(c, d) as usize) << 7;
                        for e in d + 1..n {
                            let p = p_d
                                | (t.beats(a, e) as usize) << 3
                                | (t.beats(b, e) as usize) << 6
                                | (t.beats(c, e) as usize) << 8
                                | (t.beats(d, e) as usize) << 9;
                            local[table.class_of_pattern(p)] += 1;
                        }
                    }
                }
            }
            local
        },
        |mut x, y| {
            for (a, b) in x.iter_mut().zip(y) {
                *a += b;
            }
            x
        },
    );
    Census5 { counts }
}

/// The fourteen edge-sum quantities; `values[i - 1]` is quantity `i`:
///
/// | i | quantity            | i  | quantity        |
/// |---|---------------------|----|-----------------|
/// | 1 | Σ C(a,2)·c          | 8  | Σ C(d,2)·b      |
/// | 2 | Σ C(a,2)·d          | 9  | Σ a·b·c         |
/// | 3 | Σ C(b,2)·c          | 10 | Σ a·b·d         |
/// | 4 | Σ C(b,2)·d          | 11 | Σ a·c·d         |
/// | 5 | Σ C(c,2)·a          | 12 | Σ b·c·d         |
/// | 6 | Σ C(c,2)·b          | 13 | C(n,5)          |
/// | 7 | Σ C(d,2)·a          | 14 | 5-cycle count   |
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RQuantities {
    pub values: [i128; 14],
}

impl RQuantities {
    /// Quantity `i`, 1-based.
    pub fn get(&self, i: usize) -> i128 {
        self.values[i - 1]
    }

    pub fn row_relation_holds(&self) -> bool {
        row_relation(|i| self.get(i))
    }
}

fn row_relation(r: impl Fn(usize) -> i128) -> bool {
    let low: i128 = (1..=8).map(&r).sum();
    let high: i128 = (9..=12).map(&r).sum();
    8 * r(14) == -2 * low + 2 * high + 6 * r(13)
}

fn edge_terms(e: EdgeScore) -> [i128; 12] {
    let (a, b, c, d) = (e.a as i128, e.b as i128, e.c as i128, e.d as i128);
    let c2 = |x: i128| x * (x - 1) / 2;
    [
        c2(a) * c,
        c2(a) * d,
        c2(b) * c,
        c2(b) * d,
        c2(c) * a,
        c2(c) * b,
        c2(d) * a,
        c2(d) * b,
        a * b * c,
        a * b * d,
        a * c * d,
        b * c * d,
    ]
}

pub fn r_quantities(t: &Tournament) -> RQuantities {
    r_quantities_with(t, Exec::default())
}

pub fn r_quantities_with(t: &Tournament, exec: Exec) -> RQuantities {
    let n = t.n();
    let sums = exec.map_reduce(
        0..n,
        || [0i128; 12],
        |u| {
            let mut acc = [0i128; 12];
            for v in t.out_neighbors(u) {
                let e = crate::edge_scores::edge_score(t, u, v).expect("arc");
                for (a, x) in acc.iter_mut().zip(edge_terms(e)) {
                    *a += x;
                }
            }
            acc
        },
        |mut x, y| {
            for (a, b) in x.iter_mut().zip(y) {
                *a += b;
            }
            x
        },
    );
    let c5 = if n <= BRUTE_C5_MAX_N {
        count_k_cycles_bruteforce_with(t, 5, exec) as i128
    } else {
        c5_exact_with(t, exec).c5
    };
    let mut values = [0i128; 14];
    values[..12].copy_from_slice(&sums);
    values[12] = choose(n as u64, 5);
    values[13] = c5;
    RQuantities { values }
}

/// `m[i][j]` is quantity `i + 1` evaluated on class representative `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMatrix {
    pub m: [[i128; CLASS_COUNT]; 14],
}

impl RelationMatrix {
    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &[i128; CLASS_COUNT] {
        &self.m[i - 1]
    }

    pub fn column(&self, j: usize) -> [i128; 14] {
        std::array::from_fn(|i| self.m[i][j])
    }

    /// `8·R14 = −2·ΣR1..8 + 2·ΣR9..12 + 6·R13` in every column.
    pub fn row_relation_holds(&self) -> bool {
        (0..CLASS_COUNT).all(|j| row_relation(|i| self.m[i - 1][j]))
    }

    /// The quantities a tournament with this census must have.
    pub fn predict(&self, census: &Census5) -> [i128; 14] {
        std::array::from_fn(|i| {
            self.m[i]
                .iter()
                .zip(&census.counts)
                .map(|(&m, &c)| m * c as i128)
                .sum()
        })
    }
}

pub fn recover_matrix() -> RelationMatrix {
    let table = class_table();
    let mut m = [[0i128; CLASS_COUNT]; 14];
    for (j, rep) in table.reps.iter().enumerate() {
        let r = r_quantities_with(rep, Exec::Sequential);
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = r.values[i];
        }
    }
    RelationMatrix { m }
}
