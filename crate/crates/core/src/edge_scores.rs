//! Edge score sequences and the closed-form 5-cycle count.
//!
//! For an arc `u → v` every other vertex `w` falls in exactly one of four
//! classes: common out-neighbour (`a`), common in-neighbour (`b`), on a path
//! `u → w → v` (`c`), or closing a 3-cycle `v → w → u` (`d`). The number of
//! directed 5-cycles is a fixed polynomial in these counts summed over arcs:
//!
//! ```text
//! 8·c5 = 6·C(n,5) − Σ[(c+d)(a−b)² + (a+b)(c−d)²] + 2·Σ(a+b)(c+d)
//! ```
//!
//! Everything here is integer or exact-rational arithmetic.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rational::{choose, int, ratio, Rational};
use crate::tournament::{and_count, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeScore {
    /// Common out-neighbours.
    pub a: u32,
    /// Common in-neighbours.
    pub b: u32,
    /// Vertices `w` with `u → w → v`.
    pub c: u32,
    /// Vertices `w` with `v → w → u`: the 3-cycles through the arc.
    pub d: u32,
}

impl EdgeScore {
    pub fn total(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    /// Contribution `(c+d)(a−b)² + (a+b)(c−d)²` of this arc.
    pub fn imbalance(&self) -> i128 {
        let (a, b, c, d) = self.signed();
        (c + d) * (a - b).pow(2) + (a + b) * (c - d).pow(2)
    }

    /// Contribution `(a+b)(c+d)` of this arc.
    pub fn cross(&self) -> i128 {
        let (a, b, c, d) = self.signed();
        (a + b) * (c + d)
    }

    fn signed(&self) -> (i128, i128, i128, i128) {
        (
            self.a as i128,
            self.b as i128,
            self.c as i128,
            self.d as i128,
        )
    }
}

/// Score of arc `u → v` from its endpoints' bit rows.
#[inline]
fn score_unchecked(t: &Tournament, u: usize, v: usize) -> EdgeScore {
    EdgeScore {
        a: and_count(t.out_row(u), t.out_row(v)),
        b: and_count(t.in_row(u), t.in_row(v)),
        c: and_count(t.out_row(u), t.in_row(v)),
        d: and_count(t.in_row(u), t.out_row(v)),
    }
}

pub fn edge_score(t: &Tournament, u: usize, v: usize) -> Result<EdgeScore> {
    let n = t.n();
    if u >= n || v >= n || !t.beats(u, v) {
        return Err(Error::NotAnArc { u, v });
    }
    Ok(score_unchecked(t, u, v))
}

/// Scores of every arc, in [`Tournament::arcs`] order.
pub fn edge_scores(t: &Tournament) -> Vec<((usize, usize), EdgeScore)> {
    t.arcs()
        .map(|(u, v)| ((u, v), score_unchecked(t, u, v)))
        .collect()
}

/// Sums `f` over every arc, parallelised over tails.
pub(crate) fn sum_over_arcs(
    t: &Tournament,
    exec: Exec,
    f: impl Fn(usize, usize, EdgeScore) -> i128 + Sync + Send,
) -> i128 {
    exec.sum(0..t.n(), |u| {
        t.out_neighbors(u)
            .map(|v| f(u, v, score_unchecked(t, u, v)))
            .sum()
    })
}

/// The pieces of the closed-form 5-cycle count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C5Breakdown {
    /// `(3/4)·C(n,5)`.
    pub base: Rational,
    /// `Σ (c+d)(a−b)² + (a+b)(c−d)²` over arcs.
    pub s1: i128,
    /// `Σ (a+b)(c+d)` over arcs.
    pub s2: i128,
    pub c5: i128,
}

impl C5Breakdown {
    /// Re-checks `8·c5 = 6·C(n,5) − s1 + 2·s2`.
    pub fn identity_holds(&self, n: usize) -> bool {
        8 * self.c5 == 6 * choose(n as u64, 5) - self.s1 + 2 * self.s2
    }
}

pub fn c5_exact(t: &Tournament) -> C5Breakdown {
    c5_exact_with(t, Exec::default())
}

pub fn c5_exact_with(t: &Tournament, exec: Exec) -> C5Breakdown {
    let n = t.n() as u64;
    let (s1, s2) = exec.map_reduce(
        0..t.n(),
        || (0i128, 0i128),
        |u| {
            t.out_neighbors(u).fold((0, 0), |(s1, s2), v| {
                let e = score_unchecked(t, u, v);
                (s1 + e.imbalance(), s2 + e.cross())
            })
        },
        |x, y| (x.0 + y.0, x.1 + y.1),
    );
    let numerator = 6 * choose(n, 5) - s1 + 2 * s2;
    assert!(
        numerator % 8 == 0 && numerator >= 0,
        "5-cycle identity produced {numerator}/8"
    );
    C5Breakdown {
        base: expected_c5(t.n()),
        s1,
        s2,
        c5: numerator / 8,
    }
}

/// Number of directed 3-cycles, `C(n,3) − Σ_v C(od(v),2)`.
pub fn c3_closed(t: &Tournament) -> i128 {
    let transitive: i128 = t
        .out_degrees()
        .into_iter()
        .map(|d| choose(d as u64, 2))
        .sum();
    choose(t.n() as u64, 3) - transitive
}

/// `(3/4)·C(n,5)`, the mean 5-cycle count of a uniformly random tournament.
pub fn expected_c5(n: usize) -> Rational {
    ratio(3 * choose(n as u64, 5), 4)
}

/// `(3/4)·C(n,5) + (1/4)·C(n,2)·((n−2)/2)²`.
pub fn upper_bound_c5(n: usize) -> Rational {
    let n = n as i128;
    let half_rest = ratio(n - 2, 2);
    expected_c5(n as usize) + ratio(choose(n as u64, 2), 4) * &half_rest * &half_rest
}

/// `Σ_w (od(w) − (n−1)/2)²`.
pub fn score_variance(t: &Tournament) -> Rational {
    // (od − (n−1)/2)² = (2·od − n + 1)² / 4
    let n = t.n() as i128;
    let sum: i128 = t
        .out_degrees()
        .into_iter()
        .map(|d| (2 * d as i128 - n + 1).pow(2))
        .sum();
    ratio(sum, 4)
}

/// `(3/4)·C(n,5) − (1/2)·C(n−2,2)·Σ_w (od(w) − (n−1)/2)² − (3/8)·C(n,3)`.
///
/// The last term is subtracted: the sum removed in the exact count is at
/// most `4·C(n−2,2)·Σ(...)² + 3·C(n,3)`, and dividing that by 8 gives this
/// bound. Adding `(3/8)·C(n,3)` instead would exceed the true count of the
/// regular 5-tournament (4.5 > 2).
pub fn lower_bound_c5(t: &Tournament) -> Rational {
    let n = t.n() as u64;
    expected_c5(t.n())
        - ratio(choose(n.saturating_sub(2), 2), 2) * score_variance(t)
        - ratio(3 * choose(n, 3), 8)
}

/// The three stages of the bound on the subtracted sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractedSumChain {
    /// The subtracted sum itself.
    pub s1: i128,
    /// `(n−2)·Σ_arcs [(od(v)−id(u))² + (od(u)−od(v)−1)²]`.
    pub mid: i128,
    /// `4·C(n−2,2)·Σ_w (od(w)−(n−1)/2)² + 3·C(n,3)`.
    pub vertex_form: Rational,
}

impl SubtractedSumChain {
    pub fn holds(&self) -> bool {
        self.s1 <= self.mid && int(self.mid) == self.vertex_form
    }
}

pub fn subtracted_sum_chain(t: &Tournament) -> SubtractedSumChain {
    let n = t.n();
    let od = t.out_degrees();
    let id: Vec<i128> = od.iter().map(|&d| (n - 1 - d) as i128).collect();
    let od: Vec<i128> = od.into_iter().map(|d| d as i128).collect();
    let s1 = sum_over_arcs(t, Exec::default(), |_, _, e| e.imbalance());
    let per_arc: i128 = t
        .arcs()
        .map(|(u, v)| (od[v] - id[u]).pow(2) + (od[u] - od[v] - 1).pow(2))
        .sum();
    let mid = (n as i128 - 2) * per_arc;
    let vertex_form = int(4 * choose(n.saturating_sub(2) as u64, 2)) * score_variance(t)
        + int(3 * choose(n as u64, 3));
    SubtractedSumChain {
        s1,
        mid,
        vertex_form,
    }
}

/// Largest possible number of 3-cycles on `n` vertices.
pub fn max_c3(n: usize) -> Rational {
    let n = n as i128;
    if n % 2 == 1 {
        ratio(n * (n + 1) * (n - 1), 24)
    } else {
        ratio(n * (n + 2) * (n - 2), 24)
    }
}

/// Largest possible number of 4-cycles on `n` vertices.
pub fn max_c4(n: usize) -> Rational {
    let n = n as i128;
    if n % 2 == 1 {
        ratio(n * (n + 1) * (n - 1) * (n - 3), 48)
    } else {
        ratio(n * (n + 2) * (n - 2) * (n - 3), 48)
    }
}
