//! Tournament representation, generators and the `<n>:<bits>` text format.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Seed for the deterministic generators.
///
/// Streams come from ChaCha8 (`rand_chacha`), whose output is specified
/// independently of platform and word size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    /// Seed of the `index`-th instance in a batch rooted at `self`
    /// (SplitMix64 finaliser over seed and index).
    pub fn derive(self, index: u64) -> Seed {
        let mut z = self
            .0
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// A complete oriented graph on vertices `0..n`.
///
/// Each vertex keeps an out-row and an in-row bitset of `ceil(n/64)` words,
/// so adjacency tests are O(1) and neighbourhood intersections are word-wise
/// popcounts. Memory is O(n²) bits; the practical ceiling is n ≤ 4096.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from an orientation rule on pairs `i < j`:
    /// `forward(i, j)` decides whether `i → j`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let words = n.div_ceil(64);
        let mut t = Tournament {
            n,
            words,
            out: vec![0; n * words],
            inn: vec![0; n * words],
        };
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    t.set_arc(i, j);
                } else {
                    t.set_arc(j, i);
                }
            }
        }
        t
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u * self.words + v / 64] |= 1 << (v % 64);
        self.inn[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut oriented: Vec<Option<bool>> = vec![None; n * n.saturating_sub(1) / 2];
        for &(u, v) in arcs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::BadVertex { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (lo, hi) = (u.min(v), u.max(v));
            let slot = &mut oriented[pair_index(n, lo, hi)];
            if slot.is_some() {
                return Err(Error::ConflictingArc { u: lo, v: hi });
            }
            *slot = Some(u < v);
        }
        for i in 0..n {
            for j in i + 1..n {
                if oriented[pair_index(n, i, j)].is_none() {
                    return Err(Error::IncompleteTournament { u: i, v: j });
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| {
            oriented[pair_index(n, i, j)] == Some(true)
        }))
    }

    /// Each pair `i < j` is oriented `i → j` independently with probability `p`.
    pub fn random(n: usize, p: f64, seed: Seed) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::BadParameter(format!(
                "arc probability {p} outside [0, 1]"
            )));
        }
        let mut rng = seed.rng();
        Ok(Self::from_fn(n, |_, _| rng.gen_bool(p)))
    }

    /// `i → j` iff `i < j`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// `i → j` iff `(j - i) mod n` is in `offsets`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self> {
        let mut member = vec![false; n];
        for &d in offsets {
            if d == 0 || d >= n {
                return Err(Error::BadParameter(format!("offset {d} outside 1..{n}")));
            }
            member[d] = true;
        }
        for d in 1..n {
            if member[d] == member[n - d] {
                return Err(Error::NotATournament { n, offset: d });
            }
        }
        Ok(Self::from_fn(n, |i, j| member[j - i]))
    }

    /// Paley tournament: `i → j` iff `j - i` is a nonzero square mod `q`.
    pub fn quadratic_residue(q: usize) -> Result<Self> {
        if !is_prime(q) || q % 4 != 3 {
            return Err(Error::BadParameter(format!(
                "{q} is not a prime congruent to 3 mod 4"
            )));
        }
        let mut residue = vec![false; q];
        for x in 1..q {
            residue[x * x % q] = true;
        }
        Ok(Self::from_fn(q, |i, j| residue[j - i]))
    }

    pub fn reverse(&self) -> Self {
        Tournament {
            n: self.n,
            words: self.words,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::BadPermutation(n));
        }
        let mut inverse = vec![usize::MAX; n];
        for (v, &image) in perm.iter().enumerate() {
            if image >= n || inverse[image] != usize::MAX {
                return Err(Error::BadPermutation(n));
            }
            inverse[image] = v;
        }
        Ok(Self::from_fn(n, |i, j| self.beats(inverse[i], inverse[j])))
    }

    /// Subtournament induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |i, j| self.beats(vertices[i], vertices[j]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Whether `u → v`. False on the diagonal.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn out_row(&self, u: usize) -> &[u64] {
        &self.out[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn in_row(&self, u: usize) -> &[u64] {
        &self.inn[u * self.words..(u + 1) * self.words]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_row(u)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.in_row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.out_degree(u)).collect()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.out_row(u))
    }

    /// All `n(n-1)/2` arcs, grouped by tail.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// Checks completeness, antisymmetry, loop-freeness and in/out row
    /// consistency over every pair.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for u in 0..n {
            if self.beats(u, u) {
                return Err(Error::SelfLoop(u));
            }
            for v in u + 1..n {
                let fwd = self.beats(u, v);
                let back = self.beats(v, u);
                if fwd && back {
                    return Err(Error::ConflictingArc { u, v });
                }
                if !fwd && !back {
                    return Err(Error::IncompleteTournament { u, v });
                }
            }
            let row_in: Vec<usize> = bits(self.in_row(u)).collect();
            let expected: Vec<usize> = (0..n).filter(|&w| self.beats(w, u)).collect();
            if row_in != expected {
                return Err(Error::BadFormat(format!("in-row of {u} is inconsistent")));
            }
        }
        // stray bits past n would break popcounts
        for row in self
            .out
            .chunks(self.words.max(1))
            .chain(self.inn.chunks(self.words.max(1)))
        {
            if bits(row).any(|b| b >= n) {
                return Err(Error::BadFormat("bits set beyond vertex range".into()));
            }
        }
        Ok(())
    }

    /// Canonical `<n>:<bits>` record.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses one `<n>:<bits>` record. Blank lines and lines starting with
    /// `#` are skipped; exactly one record must remain.
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'));
        let record = records
            .next()
            .ok_or_else(|| Error::BadFormat("no tournament record".into()))?;
        if records.next().is_some() {
            return Err(Error::BadFormat("more than one tournament record".into()));
        }
        let (head, body) = record
            .split_once(':')
            .ok_or_else(|| Error::BadFormat(format!("missing ':' in {record:?}")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::BadFormat(format!("bad vertex count {head:?}")))?;
        let body = body.trim();
        if let Some(c) = body.chars().find(|c| *c != '0' && *c != '1') {
            return Err(Error::BadFormat(format!("illegal character {c:?}")));
        }
        let expected = n
            .checked_mul(n.saturating_sub(1))
            .map(|x| x / 2)
            .ok_or_else(|| Error::BadFormat(format!("vertex count {n} too large")))?;
        if body.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: body.len(),
            });
        }
        let bits = body.as_bytes();
        Ok(Self::from_fn(n, |i, j| bits[pair_index(n, i, j)] == b'1'))
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for i in 0..self.n {
            for j in i + 1..self.n {
                f.write_str(if self.beats(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({self})")
    }
}

impl FromStr for Tournament {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Position of pair `(i, j)`, `i < j`, in lexicographic pair order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Indices of the set bits of a row, ascending.
pub fn bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// Popcount of the intersection of two rows.
#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}
