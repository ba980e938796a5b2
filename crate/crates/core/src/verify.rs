//! Property suites run by `tourney verify`.
//!
//! Each suite draws deterministic random cases from a root seed, checks a
//! list of properties on every case and reports, per property, the first
//! failing case in case order. Case `i` is `Tournament::random(n, 1/2, s)`
//! with `s = Seed(seed).derive(i)`, so a reported counterexample can be
//! regenerated from its seed alone.

use std::fmt;

use rand::seq::SliceRandom;

use crate::acyclic::{count_acyclic_recursive, count_acyclic_with, f_lower, g_expected};
use crate::census::{
    build_class_table, census5_with, class_table, count_k_cycles_bruteforce_with,
    r_quantities_with, recover_matrix, RelationMatrix,
};
use crate::edge_scores::{
    c3_closed, c5_exact_with, edge_score, edge_scores, lower_bound_c5, max_c3, max_c4,
    subtracted_sum_chain, upper_bound_c5,
};
use crate::exec::Exec;
use crate::rational::{choose, int};
use crate::tournament::{Seed, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Matrix,
    Acyclic,
    All,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Identities, Suite::Matrix, Suite::Acyclic],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Matrix => "matrix",
            Suite::Acyclic => "acyclic",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub case: usize,
    pub tournament: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: usize,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.counterexample.is_none())
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        self.properties
            .iter()
            .find_map(|p| p.counterexample.as_ref().map(|c| (p.name, c)))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {} cases", self.suite, self.cases)?;
        for p in &self.properties {
            match &p.counterexample {
                None => writeln!(f, "  ok    {} ({} checked)", p.name, p.checked)?,
                Some(c) => {
                    writeln!(f, "  FAIL  {} (case {}): {}", p.name, c.case, c.detail)?;
                    writeln!(f, "  counterexample: {}", c.tournament)?;
                }
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "suite {}: {verdict}", self.suite)
    }
}

type Check = fn(&Case) -> Result<(), String>;

struct Case {
    t: Tournament,
    perm: Vec<usize>,
}

fn cases(seed: u64, count: usize, n_lo: usize, n_hi: usize, exec: Exec) -> Vec<Case> {
    exec.map(0..count, |i| {
        let s = Seed(seed).derive(i as u64);
        let n = n_lo + (s.0 % (n_hi - n_lo + 1) as u64) as usize;
        let t = Tournament::random(n, 0.5, s).expect("p = 1/2 is valid");
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut s.derive(u64::MAX).rng());
        Case { t, perm }
    })
}

fn run_checks(cases: &[Case], checks: &[(&'static str, Check)], exec: Exec) -> Vec<PropertyReport> {
    checks
        .iter()
        .map(|&(name, check)| {
            let outcomes = exec.map(0..cases.len(), |i| check(&cases[i]).err());
            let counterexample = outcomes.into_iter().enumerate().find_map(|(i, e)| {
                e.map(|detail| Counterexample {
                    case: i,
                    tournament: cases[i].t.serialize(),
                    detail,
                })
            });
            PropertyReport {
                name,
                checked: cases.len(),
                counterexample,
            }
        })
        .collect()
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn global(name: &'static str, result: Result<(), String>) -> PropertyReport {
    PropertyReport {
        name,
        checked: 1,
        counterexample: result.err().map(|detail| Counterexample {
            case: 0,
            tournament: "-".into(),
            detail,
        }),
    }
}

const SEQ: Exec = Exec::Sequential;

fn identity_checks() -> Vec<(&'static str, Check)> {
    vec![
        ("tournament_invariant", |c| {
            c.t.validate().map_err(|e| e.to_string())?;
            let n = c.t.n();
            let od: usize = c.t.out_degrees().iter().sum();
            let id: usize = (0..n).map(|v| c.t.in_degree(v)).sum();
            ensure(od == n * n.saturating_sub(1) / 2 && id == od, || {
                format!("degree sums {od}/{id}")
            })
        }),
        ("text_round_trip", |c| {
            let back = Tournament::parse(&c.t.serialize()).map_err(|e| e.to_string())?;
            ensure(back == c.t, || "parse(serialize(T)) != T".into())
        }),
        ("edge_score_degree_identities", |c| {
            let n = c.t.n() as u32;
            let od: Vec<u32> = c.t.out_degrees().into_iter().map(|d| d as u32).collect();
            for ((u, v), e) in edge_scores(&c.t) {
                let id = |w: usize| n - 1 - od[w];
                let ok = e.total() == n - 2
                    && od[u] == 1 + e.a + e.c
                    && id(u) == e.b + e.d
                    && od[v] == e.a + e.d
                    && id(v) == 1 + e.b + e.c;
                ensure(ok, || format!("arc ({u},{v}) score {e:?}"))?;
            }
            Ok(())
        }),
        ("c5_formula_matches_bruteforce", |c| {
            let b = c5_exact_with(&c.t, SEQ);
            let brute = count_k_cycles_bruteforce_with(&c.t, 5, SEQ) as i128;
            ensure(b.c5 == brute && b.identity_holds(c.t.n()), || {
                format!("formula {} brute {brute} (s1 {}, s2 {})", b.c5, b.s1, b.s2)
            })
        }),
        ("c3_closed_matches_bruteforce", |c| {
            let closed = c3_closed(&c.t);
            let brute = count_k_cycles_bruteforce_with(&c.t, 3, SEQ) as i128;
            let d_sum: i128 = edge_scores(&c.t).iter().map(|(_, e)| e.d as i128).sum();
            ensure(closed == brute && d_sum == 3 * closed, || {
                format!("closed {closed} brute {brute} sum d {d_sum}")
            })
        }),
        ("arc_sum_to_vertex_sum", |c| {
            let n = c.t.n() as i128;
            let od: Vec<i128> = c.t.out_degrees().into_iter().map(|d| d as i128).collect();
            let by_arcs: i128 = c.t.arcs().map(|(_, v)| od[v]).sum();
            let by_vertices: i128 = od.iter().map(|&d| (n - 1 - d) * d).sum();
            ensure(by_arcs == by_vertices, || {
                format!("{by_arcs} != {by_vertices}")
            })
        }),
        ("bound_sandwich", |c| {
            let n = c.t.n();
            let c5 = int(c5_exact_with(&c.t, SEQ).c5);
            let lower = lower_bound_c5(&c.t);
            let upper = upper_bound_c5(n);
            ensure(lower <= c5 && c5 <= upper, || {
                format!("{lower} <= {c5} <= {upper} violated")
            })?;
            let c3 = int(c3_closed(&c.t));
            let c4 = int(count_k_cycles_bruteforce_with(&c.t, 4, SEQ) as i128);
            ensure(c3 <= max_c3(n) && c4 <= max_c4(n), || {
                format!("c3 {c3} / c4 {c4} above reference maxima")
            })
        }),
        ("subtracted_sum_chain", |c| {
            if c.t.n() < 3 {
                return Ok(());
            }
            let chain = subtracted_sum_chain(&c.t);
            ensure(chain.holds(), || format!("{chain:?}"))
        }),
        ("reversal_invariance", |c| {
            let r = c.t.reverse();
            for ((u, v), e) in edge_scores(&c.t) {
                let f = edge_score(&r, v, u).map_err(|e| e.to_string())?;
                ensure((f.a, f.b, f.c, f.d) == (e.b, e.a, e.c, e.d), || {
                    format!("arc ({u},{v}): {e:?} reversed to {f:?}")
                })?;
            }
            let (x, y) = (c5_exact_with(&c.t, SEQ).c5, c5_exact_with(&r, SEQ).c5);
            ensure(x == y, || format!("c5 {x} vs reversed {y}"))
        }),
        ("relabel_invariance", |c| {
            let p = c.t.relabel(&c.perm).map_err(|e| e.to_string())?;
            for k in 3..=5 {
                let (x, y) = (
                    count_k_cycles_bruteforce_with(&c.t, k, SEQ),
                    count_k_cycles_bruteforce_with(&p, k, SEQ),
                );
                ensure(x == y, || format!("c{k} {x} vs relabelled {y}"))?;
            }
            ensure(
                c5_exact_with(&p, SEQ) == c5_exact_with(&c.t, SEQ)
                    && lower_bound_c5(&p) == lower_bound_c5(&c.t),
                || "formula or bound changed under relabelling".into(),
            )
        }),
    ]
}

fn check_matrix(m: &RelationMatrix) -> Result<(), String> {
    ensure(m.row(13).iter().all(|&x| x == 1), || {
        format!("row 13 = {:?}", m.row(13))
    })?;
    let mut last = m.row(14).to_vec();
    last.sort_unstable();
    ensure(last == [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3], || {
        format!("row 14 = {:?}", m.row(14))
    })?;
    ensure(m.row_relation_holds(), || {
        "8·R14 = −2·ΣR1..8 + 2·ΣR9..12 + 6·R13 fails".into()
    })
}

fn matrix_checks() -> Vec<(&'static str, Check)> {
    vec![
        ("census_linearity", |c| {
            let m = recover_matrix_cached();
            let r = r_quantities_with(&c.t, SEQ);
            let predicted = m.predict(&census5_with(&c.t, SEQ));
            ensure(r.values == predicted, || {
                format!("quantities {:?} predicted {predicted:?}", r.values)
            })
        }),
        ("census_five_cycles", |c| {
            let census = census5_with(&c.t, SEQ);
            let via_census = census.five_cycles(class_table());
            let brute = count_k_cycles_bruteforce_with(&c.t, 5, SEQ);
            ensure(
                via_census == brute && census.total() as i128 == choose(c.t.n() as u64, 5),
                || format!("census gives {via_census}, brute force {brute}"),
            )
        }),
        ("row_relation_on_quantities", |c| {
            let r = r_quantities_with(&c.t, SEQ);
            ensure(r.row_relation_holds(), || format!("{:?}", r.values))
        }),
    ]
}

fn recover_matrix_cached() -> &'static RelationMatrix {
    static M: std::sync::OnceLock<RelationMatrix> = std::sync::OnceLock::new();
    M.get_or_init(recover_matrix)
}

fn acyclic_checks() -> Vec<(&'static str, Check)> {
    vec![
        ("acyclic_at_least_f", |c| {
            let n = c.t.n();
            for k in 1..=5u32 {
                let count = count_acyclic_with(&c.t, k as usize, SEQ);
                let f = f_lower(n as u64, k);
                ensure(int(count as i128) >= f, || {
                    format!("k={k}: {count} < f = {f}")
                })?;
            }
            Ok(())
        }),
        ("acyclic_recursive_agrees", |c| {
            for k in 1..=5 {
                let (a, b) = (
                    count_acyclic_with(&c.t, k, SEQ),
                    count_acyclic_recursive(&c.t, k),
                );
                ensure(a == b, || format!("k={k}: enumeration {a}, recursion {b}"))?;
            }
            Ok(())
        }),
        ("triples_transitive_or_cyclic", |c| {
            let n = c.t.n() as u64;
            let acyclic = count_acyclic_with(&c.t, 3, SEQ) as i128;
            let cyclic = count_k_cycles_bruteforce_with(&c.t, 3, SEQ) as i128;
            ensure(acyclic + cyclic == choose(n, 3), || {
                format!("{acyclic} + {cyclic}")
            })
        }),
        ("acyclic_reversal_invariance", |c| {
            let r = c.t.reverse();
            for k in 1..=5 {
                let (a, b) = (
                    count_acyclic_with(&c.t, k, SEQ),
                    count_acyclic_with(&r, k, SEQ),
                );
                ensure(a == b, || format!("k={k}: {a} vs reversed {b}"))?;
            }
            Ok(())
        }),
    ]
}

/// Runs `suite` on `cases` random cases derived from `seed`.
pub fn run_suite(suite: Suite, cases_per_suite: usize, seed: u64) -> Vec<SuiteReport> {
    run_suite_with(suite, cases_per_suite, seed, Exec::default())
}

pub fn run_suite_with(suite: Suite, count: usize, seed: u64, exec: Exec) -> Vec<SuiteReport> {
    suite
        .parts()
        .into_iter()
        .map(|part| {
            let mut properties = Vec::new();
            match part {
                Suite::Identities => {
                    let cs = cases(seed, count, 3, 12, exec);
                    properties.extend(run_checks(&cs, &identity_checks(), exec));
                }
                Suite::Matrix => {
                    let table = build_class_table();
                    let mut hams = table.ham_counts.clone();
                    hams.sort_unstable();
                    properties.push(global(
                        "class_table",
                        ensure(
                            table.len() == 12
                                && table.sizes.iter().sum::<u64>() == 1024
                                && hams == [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3],
                            || format!("{} classes, hamiltonian counts {hams:?}", table.len()),
                        ),
                    ));
                    properties.push(global(
                        "row_relation_identity",
                        check_matrix(recover_matrix_cached()),
                    ));
                    let cs = cases(seed, count, 5, 10, exec);
                    properties.extend(run_checks(&cs, &matrix_checks(), exec));
                }
                Suite::Acyclic => {
                    properties.push(global("f_at_most_g", f_at_most_g()));
                    let cs = cases(seed, count, 1, 12, exec);
                    properties.extend(run_checks(&cs, &acyclic_checks(), exec));
                }
                Suite::All => unreachable!("expanded by parts()"),
            }
            SuiteReport {
                suite: part.name(),
                cases: count,
                properties,
            }
        })
        .collect()
}

fn f_at_most_g() -> Result<(), String> {
    for n in 1..=64u64 {
        for k in 1..=6u32 {
            if n >= k as u64 {
                let (f, g) = (f_lower(n, k), g_expected(n, k));
                ensure(f <= g, || format!("f({n},{k}) = {f} > g = {g}"))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_a_small_batch() {
        for report in run_suite(Suite::All, 15, 1) {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite_with(Suite::Identities, 10, 9, Exec::Parallel);
        let b = run_suite_with(Suite::Identities, 10, 9, Exec::Sequential);
        assert_eq!(a, b);
    }

    #[test]
    fn failing_property_reports_first_case() {
        let cs = cases(3, 6, 4, 4, Exec::Sequential);
        let checks: Vec<(&'static str, Check)> =
            vec![("always_fails", |c| Err(format!("n={}", c.t.n())))];
        let report = run_checks(&cs, &checks, Exec::Parallel);
        let ce = report[0].counterexample.as_ref().unwrap();
        assert_eq!(ce.case, 0);
        assert_eq!(ce.tournament, cs[0].t.serialize());
    }
}
