//! Monte-Carlo sampling of uniformly random tournaments.

use crate::census::{count_k_cycles_bruteforce_with, BRUTE_C5_MAX_N};
use crate::edge_scores::{
    c3_closed, c5_exact_with, lower_bound_c5, score_variance, upper_bound_c5,
};
use crate::exec::Exec;
use crate::rational::{fmt_decimal, Rational};
use crate::tournament::{Seed, Tournament};

/// One sampled tournament. `c4` is only computed for `n ≤ 12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub seed: u64,
    pub n: usize,
    pub c3: i128,
    pub c4: Option<u64>,
    pub c5: i128,
    pub s1: i128,
    pub s2: i128,
    pub lower_bound: Rational,
    pub upper_bound: Rational,
    pub score_variance: Rational,
}

impl ScanRecord {
    pub const HEADER: [&'static str; 10] = [
        "seed",
        "n",
        "c3",
        "c4",
        "c5",
        "s1",
        "s2",
        "lower_bound",
        "upper_bound",
        "score_variance",
    ];

    pub fn measure(t: &Tournament, seed: Seed) -> Self {
        let n = t.n();
        let b = c5_exact_with(t, Exec::Sequential);
        ScanRecord {
            seed: seed.0,
            n,
            c3: c3_closed(t),
            c4: (n <= BRUTE_C5_MAX_N)
                .then(|| count_k_cycles_bruteforce_with(t, 4, Exec::Sequential)),
            c5: b.c5,
            s1: b.s1,
            s2: b.s2,
            lower_bound: lower_bound_c5(t),
            upper_bound: upper_bound_c5(n),
            score_variance: score_variance(t),
        }
    }

    pub fn bounds_hold(&self) -> bool {
        let c5 = crate::rational::int(self.c5);
        self.lower_bound <= c5 && c5 <= self.upper_bound
    }

    /// Row cells in [`Self::HEADER`] order. Rational columns are exact
    /// decimals (all denominators here are powers of two).
    pub fn fields(&self) -> [String; 10] {
        [
            self.seed.to_string(),
            self.n.to_string(),
            self.c3.to_string(),
            self.c4.map(|c| c.to_string()).unwrap_or_default(),
            self.c5.to_string(),
            self.s1.to_string(),
            self.s2.to_string(),
            fmt_decimal(&self.lower_bound),
            fmt_decimal(&self.upper_bound),
            fmt_decimal(&self.score_variance),
        ]
    }
}

/// Samples `samples` tournaments on `n` vertices with `p = 1/2`; sample `i`
/// uses `Seed(seed).derive(i)`. Output order is sample order regardless of
/// how the work was scheduled.
pub fn scan(n: usize, samples: usize, seed: u64, exec: Exec) -> Vec<ScanRecord> {
    exec.map(0..samples, |i| {
        let s = Seed(seed).derive(i as u64);
        let t = Tournament::random(n, 0.5, s).expect("p = 1/2 is valid");
        ScanRecord::measure(&t, s)
    })
}

/// Arithmetic mean of the `c5` column.
pub fn mean_c5(records: &[ScanRecord]) -> f64 {
    if records.is_empty() {
        return f64::NAN;
    }
    records.iter().map(|r| r.c5 as f64).sum::<f64>() / records.len() as f64
}
