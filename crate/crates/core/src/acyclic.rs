//! Acyclic (transitive) subtournament counts and their bounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exec::Exec;
use crate::rational::{int, Rational};
use crate::subsets::sum_over_subsets;
use crate::tournament::Tournament;

/// Whether the subtournament on `verts` has no directed cycle, i.e. its
/// out-degrees are exactly `0..k`.
pub fn is_acyclic(t: &Tournament, verts: &[usize]) -> bool {
    let k = verts.len();
    let mut seen = vec![false; k];
    for &u in verts {
        let od = verts.iter().filter(|&&v| t.beats(u, v)).count();
        if seen[od] {
            return false;
        }
        seen[od] = true;
    }
    true
}

/// Number of `k`-subsets inducing an acyclic subtournament, by enumeration.
pub fn count_acyclic(t: &Tournament, k: usize) -> u64 {
    count_acyclic_with(t, k, Exec::default())
}

pub fn count_acyclic_with(t: &Tournament, k: usize, exec: Exec) -> u64 {
    if k > t.n() {
        return 0;
    }
    sum_over_subsets(t.n(), k, exec, |s| is_acyclic(t, s) as i128) as u64
}

/// Same count via the source decomposition: every acyclic `k`-set has a
/// unique vertex beating the other `k − 1`, which form an acyclic set inside
/// its out-neighbourhood.
pub fn count_acyclic_recursive(t: &Tournament, k: usize) -> u64 {
    match k {
        0 => 1,
        1 => t.n() as u64,
        _ => (0..t.n())
            .map(|v| {
                let out: Vec<usize> = t.out_neighbors(v).collect();
                if out.len() + 1 < k {
                    0
                } else {
                    count_acyclic_recursive(&t.induced(&out), k - 1)
                }
            })
            .sum(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicBounds {
    /// Guaranteed minimum over all `n`-tournaments.
    pub f: Rational,
    /// Mean over uniformly random `n`-tournaments.
    pub g: Rational,
}

pub fn acyclic_bounds(n: u64, k: u32) -> AcyclicBounds {
    AcyclicBounds {
        f: f_lower(n, k),
        g: g_expected(n, k),
    }
}

/// `Π_{i<k} (n − 2^i + 1) / 2^C(k,2)` when `n > 2^(k−1) − 1`, else 0.
pub fn f_lower(n: u64, k: u32) -> Rational {
    f_lower_at(&int(n as i128), k)
}

/// [`f_lower`] evaluated at an arbitrary rational argument, as used for the
/// averaged out-degree `(n − 1)/2`.
pub fn f_lower_at(x: &Rational, k: u32) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let threshold = int(pow2(k - 1) - 1);
    if *x <= threshold {
        return Rational::zero();
    }
    let mut num = Rational::one();
    for i in 0..k {
        num *= x - int(pow2(i)) + Rational::one();
    }
    num / Rational::from_integer(BigInt::one() << choose2(k))
}

/// `n(n−1)…(n−k+1) / 2^C(k,2)`.
pub fn g_expected(n: u64, k: u32) -> Rational {
    let mut num = BigInt::one();
    for i in 0..k as u64 {
        if i >= n {
            return Rational::zero();
        }
        num *= BigInt::from(n - i);
    }
    let r = Rational::new(num, BigInt::one() << choose2(k));
    debug_assert!(!r.is_negative());
    r
}

fn pow2(i: u32) -> i128 {
    assert!(i < 126, "2^{i} overflows");
    1i128 << i
}

fn choose2(k: u32) -> usize {
    (k as usize) * (k as usize).saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::count_k_cycles_bruteforce;
    use crate::rational::{choose, ratio};
    use crate::Seed;

    #[test]
    fn transitive_counts_every_subset() {
        for n in 0..9 {
            let t = Tournament::transitive(n);
            for k in 0..=n {
                assert_eq!(count_acyclic(&t, k) as i128, choose(n as u64, k as u64));
            }
        }
        assert_eq!(count_acyclic_recursive(&Tournament::transitive(6), 4), 15);
        assert_eq!(count_acyclic(&Tournament::transitive(7), 3), 35);
    }

    #[test]
    fn small_examples() {
        let r5 = Tournament::circulant(5, &[1, 2]).unwrap();
        assert_eq!(count_acyclic(&r5, 3), 5);
        assert_eq!(count_acyclic_recursive(&r5, 3), 5);
        let c3 = Tournament::circulant(3, &[1]).unwrap();
        assert_eq!(count_acyclic(&c3, 3), 0);
        assert_eq!(count_acyclic_recursive(&c3, 3), 0);
        assert_eq!(count_acyclic(&c3, 4), 0);
    }

    #[test]
    fn pairs_are_always_acyclic() {
        for seed in 0..10 {
            let t = Tournament::random(8, 0.5, Seed(seed)).unwrap();
            assert_eq!(count_acyclic_recursive(&t, 2), 28);
            assert_eq!(count_acyclic(&t, 2), 28);
        }
    }

    #[test]
    fn triples_split_into_transitive_and_cyclic() {
        let t = Tournament::random(11, 0.5, Seed(4)).unwrap();
        let total = count_acyclic(&t, 3) + count_k_cycles_bruteforce(&t, 3);
        assert_eq!(total as i128, choose(11, 3));
    }

    #[test]
    fn f_values() {
        assert_eq!(f_lower(5, 3), int(5));
        assert_eq!(f_lower(3, 3), int(0));
        assert_eq!(f_lower(4, 3), ratio(4 * 3, 8));
        for n in 0..20u64 {
            assert_eq!(
                f_lower(n, 2),
                ratio((n * n.saturating_sub(1) / 2) as i128, 1)
            );
            assert_eq!(f_lower(n, 1), int(n as i128));
        }
        assert_eq!(f_lower(7, 4), int(0));
        assert_eq!(f_lower(8, 4), ratio(8 * 7 * 5, 64));
    }

    #[test]
    fn g_values() {
        assert_eq!(g_expected(5, 3), ratio(15, 2));
        assert_eq!(g_expected(9, 1), int(9));
        assert_eq!(g_expected(3, 4), int(0));
        assert_eq!(f_lower(100, 3) / g_expected(100, 3), ratio(97, 98));
    }

    #[test]
    fn f_at_half_degrees() {
        // n·f((n−1)/2, k−1) = f(n, k)
        for n in 1..40u64 {
            for k in 2..5u32 {
                let half = ratio(n as i128 - 1, 2);
                assert_eq!(
                    int(n as i128) * f_lower_at(&half, k - 1),
                    f_lower(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }
}
