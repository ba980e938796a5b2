use crate::exec::Exec;

/// Calls `f` on every `k`-subset of `0..n` (ascending vectors) whose minimum
/// is `first`.
pub(crate) fn for_each_with_min(n: usize, k: usize, first: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 || first + k > n {
        return;
    }
    let mut buf: Vec<usize> = (first..first + k).collect();
    loop {
        f(&buf);
        // advance positions 1..k as a (k-1)-combination of first+1..n
        let Some(i) = (1..k).rev().find(|&i| buf[i] < n - (k - i)) else {
            return;
        };
        buf[i] += 1;
        for j in i + 1..k {
            buf[j] = buf[j - 1] + 1;
        }
    }
}

/// `Σ f(S)` over all `k`-subsets `S` of `0..n`, split across workers by
/// minimum element.
pub(crate) fn sum_over_subsets(
    n: usize,
    k: usize,
    exec: Exec,
    f: impl Fn(&[usize]) -> i128 + Sync + Send,
) -> i128 {
    if k == 0 {
        return f(&[]);
    }
    exec.sum(0..n, |first| {
        let mut acc = 0;
        for_each_with_min(n, k, first, |s| acc += f(s));
        acc
    })
}

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::choose;

    #[test]
    fn subset_counts_match_binomials() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let total = sum_over_subsets(n, k, Exec::Sequential, |_| 1);
                assert_eq!(total, choose(n as u64, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subsets_are_sorted_and_distinct() {
        let mut seen = std::collections::BTreeSet::new();
        for first in 0..6 {
            for_each_with_min(6, 3, first, |s| {
                assert!(s.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(s[0], first);
                assert!(seen.insert(s.to_vec()));
            });
        }
        assert_eq!(seen.len(), 20);
    }

    #[test]
    fn permutation_count() {
        let p = permutations(5);
        assert_eq!(p.len(), 120);
        let set: std::collections::BTreeSet<_> = p.into_iter().collect();
        assert_eq!(set.len(), 120);
        assert_eq!(permutations(0).len(), 1);
    }
}
