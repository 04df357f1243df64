//! Acceptance run: one PASS/FAIL/SKIP line per criterion.
//!
//! Runs without the libtest harness so the verdict lines always print.
//! Dataset rows read edge lists from `$WEAKCLOSE_DATA` (default `<repo>/data`).

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use weakclose::biclique::{
    enumerate_maximal_non_induced_bicliques, solve_induced_biclique_2closed, solve_induced_biclique_cclosed,
    solve_induced_kk_biclique, solve_max_edge_non_induced_biclique, solve_non_induced_biclique,
};
use weakclose::cliques::enumerate_maximal_cliques;
use weakclose::dense::{
    clique_cover_of_defective, enumerate_maximal_defective_cliques, enumerate_maximal_splexes,
    solve_defective_clique, solve_defective_clique_via_cover, solve_splex, EnumFamily,
};
use weakclose::domination::{solve_dominating_clique, solve_ids};
use weakclose::generators::{disjoint_cliques, universal_with_triangles};
use weakclose::kernel::{
    apply_rule1, solve_independent_set, solve_monotone_subgraph, solve_sparsest_k_subgraph, MonotoneClass,
};
use weakclose::oracle::{oracle_decide, oracle_enumerate_maximal, Problem, Property};
use weakclose::predicates::{is_clique, is_independent};
use weakclose::{c_closure, graph_stats, weak_closure, Graph, ProblemAnswer, VertexSet};

use common::{atlas, describe, random_graphs};

/// Per-dataset wall-clock limit for the stats row.
const DATASET_TIME_LIMIT: Duration = Duration::from_secs(120);
/// Total wall-clock limit for the enumeration equivalence run.
const ENUMERATION_TIME_LIMIT: Duration = Duration::from_secs(600);
/// Number of seeded random graphs and their maximum order.
const RANDOM_COUNT: usize = 300;
const RANDOM_MAX_N: usize = 14;
const RANDOM_SEED: u64 = 2024;
/// Parameter ranges for the decision equivalence run.
const MAX_K: usize = 3;
const MAX_S: usize = 2;
const MAX_T: usize = 3;
/// At most this many failure details are printed per criterion.
const DETAIL_LIMIT: usize = 5;

/// (name, n, m, max degree, c, d, gamma).
const TABLE: [(&str, usize, usize, usize, usize, usize, usize); 5] = [
    ("adjnoun-adjacency", 112, 425, 49, 14, 6, 6),
    ("ca-netscience", 379, 914, 34, 5, 8, 3),
    ("bio-celegans", 453, 2025, 237, 26, 10, 9),
    ("bio-yeast", 1458, 1948, 56, 8, 5, 4),
    ("ca-CSphd", 1882, 1740, 46, 3, 2, 3),
];

/// Dataset name, its stats row when the file exists, and the time taken.
type DatasetRow = (&'static str, Option<Result<[usize; 6], String>>, Duration);

enum Verdict {
    Pass(String),
    Fail(Vec<String>),
    Skip(String),
}

/// Collects failure messages for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    checked: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn verdict(self, summary: impl FnOnce(usize) -> String) -> Verdict {
        if self.failures.is_empty() {
            Verdict::Pass(summary(self.checked))
        } else {
            Verdict::Fail(self.failures)
        }
    }
}

fn data_dir() -> PathBuf {
    std::env::var_os("WEAKCLOSE_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
            crate_dir.ancestors().nth(2).unwrap_or(crate_dir).join("data")
        })
}

/// Dataset stats computed through the command-line binary.
fn dataset_rows() -> Vec<DatasetRow> {
    let dir = data_dir();
    TABLE
        .iter()
        .map(|&(name, ..)| {
            let path = dir.join(format!("{name}.txt"));
            if !path.is_file() {
                return (name, None, Duration::ZERO);
            }
            let start = Instant::now();
            let out = Command::new(env!("CARGO_BIN_EXE_weakclose"))
                .arg("stats")
                .arg(&path)
                .output()
                .expect("binary runs");
            let elapsed = start.elapsed();
            let row = if out.status.success() {
                let text = String::from_utf8_lossy(&out.stdout);
                let cols: Vec<usize> = text.split_whitespace().filter_map(|t| t.parse().ok()).collect();
                cols.try_into().map_err(|c: Vec<usize>| format!("unexpected row {c:?}"))
            } else {
                Err(String::from_utf8_lossy(&out.stderr).trim().to_string())
            };
            (name, Some(row), elapsed)
        })
        .collect()
}

fn criterion_1(rows: &[DatasetRow]) -> Verdict {
    let dir = data_dir();
    let mut failures = Vec::new();
    let mut passed = 0;
    for ((name, row, elapsed), &(_, n, m, dmax, c, d, gamma)) in rows.iter().zip(&TABLE) {
        match row {
            None => println!("  1/{name}: SKIP (no {}/{name}.txt)", dir.display()),
            Some(Err(e)) => failures.push(format!("{name}: {e}")),
            Some(Ok(got)) if got[0] != n || got[1] != m => println!(
                "  1/{name}: WARN file has n={} m={}, table has n={n} m={m}; got (Δ,c,d,γ)=({},{},{},{})",
                got[0], got[1], got[2], got[3], got[4], got[5]
            ),
            Some(Ok(got)) => {
                let want = [n, m, dmax, c, d, gamma];
                if *got != want {
                    failures.push(format!("{name}: got {got:?}, want {want:?}"));
                } else if *elapsed > DATASET_TIME_LIMIT {
                    failures.push(format!("{name}: took {elapsed:?}"));
                } else {
                    passed += 1;
                    println!("  1/{name}: PASS {want:?} in {elapsed:.2?}");
                }
            }
        }
    }
    if !failures.is_empty() {
        Verdict::Fail(failures)
    } else if passed == 0 {
        Verdict::Skip(format!("no dataset matched the table; looked in {}", dir.display()))
    } else {
        Verdict::Pass(format!("{passed} dataset row(s) exact"))
    }
}

fn has_induced_c4_or_p4(g: &Graph) -> bool {
    let n = g.n();
    let e = |a: usize, b: usize| g.has_edge(a, b);
    (0..n).any(|a| {
        (0..n).any(|b| {
            (0..n).any(|c| {
                (0..n).any(|d| {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    distinct && e(a, b) && e(b, c) && e(c, d) && !e(a, c) && !e(b, d)
                })
            })
        })
    })
}

fn criterion_2(suite: &[Graph], rows: &[DatasetRow]) -> Verdict {
    let mut checks = Checks::default();
    for g in suite {
        let s = graph_stats(g);
        checks.check(s.gamma <= s.c && s.gamma <= s.d + 1, || format!("{s:?} on {}", describe(g)));
    }
    for (name, row, _) in rows {
        if let Some(Ok([_, _, _, c, d, gamma])) = row {
            checks.check(gamma <= c && *gamma <= d + 1, || format!("{name}: c={c} d={d} γ={gamma}"));
        }
    }
    for g in suite.iter().filter(|g| g.n() <= 7) {
        checks.check(weak_closure(g) == 1 || has_induced_c4_or_p4(g), || format!("γ>1 but no C4/P4: {}", describe(g)));
        checks.check(weak_closure(g) != 1 || !has_induced_c4_or_p4(g), || format!("γ=1 with C4/P4: {}", describe(g)));
    }
    checks.verdict(|n| format!("{n} checks"))
}

/// Enumerated families for one graph, shared by criteria 3, 7 and 8.
struct Families {
    splex: Vec<(usize, EnumFamily)>,
    defective: Vec<(usize, EnumFamily)>,
}

fn criterion_3(suite: &[Graph], families: &mut Vec<Families>) -> Verdict {
    let start = Instant::now();
    let mut checks = Checks::default();
    for g in suite {
        let want = oracle_enumerate_maximal(g, Property::Clique).unwrap();
        checks.check(enumerate_maximal_cliques(g) == want, || format!("cliques on {}", describe(g)));
        let mut fam = Families {
            splex: Vec::new(),
            defective: Vec::new(),
        };
        for s in [2, 3] {
            let got = enumerate_maximal_splexes(g, s).unwrap();
            let want = oracle_enumerate_maximal(g, Property::SPlex(s)).unwrap();
            checks.check(got.sets == want, || format!("{s}-plexes on {}", describe(g)));
            fam.splex.push((s, got));
        }
        for s in [1, 2, 3] {
            let got = enumerate_maximal_defective_cliques(g, s).unwrap();
            let want = oracle_enumerate_maximal(g, Property::Defective(s)).unwrap();
            checks.check(got.sets == want, || format!("{s}-defective on {}", describe(g)));
            fam.defective.push((s, got));
        }
        let got = enumerate_maximal_non_induced_bicliques(g).unwrap();
        let want = oracle_enumerate_maximal(g, Property::NonInducedBiclique).unwrap();
        checks.check(got == want, || format!("bicliques on {}", describe(g)));
        families.push(fam);
    }
    let elapsed = start.elapsed();
    checks.check(elapsed <= ENUMERATION_TIME_LIMIT, || format!("took {elapsed:?}"));
    checks.verdict(|n| format!("{n} family comparisons on {} graphs in {elapsed:.1?}", suite.len()))
}

fn criterion_4(atlas: &[Graph]) -> Verdict {
    let mut checks = Checks::default();
    let mut agree = |g: &Graph, problem: Problem, got: &ProblemAnswer, what: &str| {
        let want = oracle_decide(problem, g).unwrap();
        let witness_ok = got.witness.is_some() == got.decision;
        checks.check(got.decision == want.decision && witness_ok, || {
            format!("{what} {problem:?}: got {} on {}", got.decision, describe(g))
        });
    };
    let mut classes = vec![MonotoneClass::Edgeless, MonotoneClass::Acyclic, MonotoneClass::Bipartite];
    classes.extend((0..=2).map(MonotoneClass::MaxDegree));
    classes.extend((0..=MAX_T).map(MonotoneClass::MaxEdges));
    for g in atlas {
        let c = c_closure(g);
        for k in 0..=MAX_K {
            agree(g, Problem::IndependentSet { k }, &solve_independent_set(g, k).unwrap(), "is");
            for &class in &classes {
                let ans = solve_monotone_subgraph(g, k, class).unwrap();
                agree(g, Problem::MonotoneSubgraph { class, k }, &ans, "monotone");
            }
            for t in 0..=MAX_T {
                let ans = solve_sparsest_k_subgraph(g, k, t).unwrap();
                agree(g, Problem::SparsestK { k, t }, &ans, "sparsest");
            }
            for s in 1..=MAX_S {
                agree(g, Problem::SPlex { s, k }, &solve_splex(g, s, k).unwrap(), "splex");
            }
            for s in 0..=MAX_S {
                let ans = solve_defective_clique(g, s, k).unwrap();
                agree(g, Problem::DefectiveClique { s, k }, &ans, "defective");
                if s >= 1 && k >= 1 {
                    let ans = solve_defective_clique_via_cover(g, s, k).unwrap();
                    agree(g, Problem::DefectiveClique { s, k }, &ans, "defective-cover");
                }
            }
            agree(g, Problem::InducedBiclique { k1: k, k2: k }, &solve_induced_kk_biclique(g, k).unwrap(), "ind-kk");
            agree(g, Problem::IndependentDominatingSet { k }, &solve_ids(g, k), "ids");
            agree(g, Problem::DominatingClique { k }, &solve_dominating_clique(g, k), "dc");
            if k >= 1 {
                let ans = solve_max_edge_non_induced_biclique(g, k).unwrap();
                agree(g, Problem::NonInducedMaxEdge { k }, &ans, "ni-maxedge");
            }
        }
        for k1 in 0..=MAX_K {
            for k2 in 0..=MAX_K {
                let problem = Problem::InducedBiclique { k1, k2 };
                if k1 >= 1 && k2 >= 1 {
                    let ans = solve_non_induced_biclique(g, k1, k2).unwrap();
                    agree(g, Problem::NonInducedBiclique { k1, k2 }, &ans, "ni-biclique");
                }
                if k1 >= 2 && k2 >= 2 {
                    agree(g, problem, &solve_induced_biclique_cclosed(g, k1, k2).unwrap(), "ind-cclosed");
                }
                if c <= 2 {
                    agree(g, problem, &solve_induced_biclique_2closed(g, k1, k2).unwrap(), "ind-2closed");
                }
            }
        }
    }
    checks.verdict(|n| format!("{n} decisions on {} graphs", atlas.len()))
}

fn criterion_5() -> Verdict {
    let mut checks = Checks::default();
    for r in [3, 4, 5] {
        let g = disjoint_cliques(&[r, r]);
        let want = r * r + 2;
        let plexes = enumerate_maximal_splexes(&g, 2).unwrap().len();
        let oracle_plexes = oracle_enumerate_maximal(&g, Property::SPlex(2)).unwrap().len();
        checks.check(plexes == want && oracle_plexes == want, || {
            format!("2K_{r}: {plexes} 2-plexes, oracle {oracle_plexes}, want {want}")
        });
        let defective = enumerate_maximal_defective_cliques(&g, 1).unwrap().len();
        let oracle_defective = oracle_enumerate_maximal(&g, Property::Defective(1)).unwrap().len();
        checks.check(defective == want && oracle_defective == want, || {
            format!("2K_{r}: {defective} 1-defective, oracle {oracle_defective}, want {want}")
        });
        // (n/2)^(2s-2) with s = 2 and (n/2)^(s+1) with s = 1 both equal r^2.
        checks.check(plexes >= r * r && defective >= r * r, || format!("2K_{r}: below r^2"));
    }
    for t in [2u32, 3] {
        let g = universal_with_triangles(t as usize);
        let u = 0;
        let nbrs = VertexSet::from_sorted(g.neighbors(u).to_vec());
        let (sub, map) = g.induced_subgraph(&nbrs).unwrap();
        let sides = oracle_enumerate_maximal(&sub, Property::Independent).unwrap();
        let valid = sides.iter().all(|side| {
            let side = VertexSet::from_sorted(side.iter().map(|v| map[v]).collect());
            is_independent(&g, &side) && side.iter().all(|v| g.has_edge(u, v))
        });
        checks.check(valid && sides.len() == 3usize.pow(t), || {
            format!("t={t}: {} induced bicliques with side {{u}}, want {}", sides.len(), 3usize.pow(t))
        });
    }
    checks.verdict(|n| format!("{n} counts"))
}

fn criterion_6(atlas: &[Graph], suite: &[Graph]) -> Verdict {
    let mut checks = Checks::default();
    for g in suite {
        for k in 1..=4 {
            let kernel = apply_rule1(g, k).unwrap();
            let bound = kernel.gamma_used * k * k;
            checks.check(kernel.shortcut || kernel.graph.n() < bound, || {
                format!("k={k}: kernel has {} >= {bound} vertices on {}", kernel.graph.n(), describe(g))
            });
        }
    }
    for g in atlas {
        for k in 0..=5 {
            let got = solve_independent_set(g, k).unwrap().decision;
            let want = oracle_decide(Problem::IndependentSet { k }, g).unwrap().decision;
            checks.check(got == want, || format!("IS k={k}: got {got} on {}", describe(g)));
        }
    }
    checks.verdict(|n| format!("{n} kernel checks"))
}

fn criterion_7(suite: &[Graph], families: &[Families]) -> Verdict {
    let mut checks = Checks::default();
    for (g, fam) in suite.iter().zip(families) {
        let gamma = weak_closure(g);
        let n = g.n() as u128;
        for (s, f) in &fam.splex {
            let bound = (1u128 << gamma) * n.pow(2 * *s as u32 - 1) + 1;
            checks.check(f.len() as u128 <= bound, || format!("{s}-plex family {} > {bound}", f.len()));
        }
        for (s, f) in &fam.defective {
            let bound = (1u128 << gamma) * n.pow(*s as u32 + 1) + 1;
            checks.check(f.len() as u128 <= bound, || format!("{s}-defective family {} > {bound}", f.len()));
        }
    }
    checks.verdict(|n| format!("{n} families within bound"))
}

fn criterion_8(suite: &[Graph], families: &[Families]) -> Verdict {
    let mut checks = Checks::default();
    for (g, fam) in suite.iter().zip(families) {
        let c = c_closure(g);
        for (s, f) in &fam.defective {
            let limit = ((2.0 * *s as f64 + 0.25).sqrt() + 0.5).floor() as usize;
            for set in &f.sets {
                let cover = clique_cover_of_defective(g, set, *s).unwrap();
                let mut union = VertexSet::new();
                let mut disjoint = true;
                for class in &cover {
                    disjoint &= union.is_disjoint(class);
                    union = union.union(class);
                }
                let cliques = cover.iter().all(|class| is_clique(g, class));
                checks.check(cover.len() <= limit && cliques && disjoint && union == *set, || {
                    format!("s={s} cover of {set} has {} classes (limit {limit})", cover.len())
                });
                if !is_clique(g, set) {
                    checks.check(set.len() <= c + s, || format!("s={s} {set} exceeds c+s={}", c + s));
                }
            }
        }
    }
    checks.verdict(|n| format!("{n} defective cliques covered"))
}

fn main() -> ExitCode {
    let atlas = atlas();
    let mut suite = atlas.clone();
    suite.extend(random_graphs(RANDOM_COUNT, RANDOM_MAX_N, RANDOM_SEED));

    let rows = dataset_rows();
    let mut families = Vec::new();
    let mut any_failed = false;
    let mut report = |id: usize, title: &str, verdict: Verdict| match verdict {
        Verdict::Pass(detail) => println!("criterion {id} ({title}): PASS {detail}"),
        Verdict::Skip(reason) => println!("criterion {id} ({title}): SKIP {reason}"),
        Verdict::Fail(failures) => {
            any_failed = true;
            println!("criterion {id} ({title}): FAIL {} problem(s)", failures.len());
            for f in failures.iter().take(DETAIL_LIMIT) {
                println!("  {f}");
            }
        }
    };

    report(1, "dataset table", criterion_1(&rows));
    report(2, "parameter inequalities", criterion_2(&suite, &rows));
    report(3, "enumeration equals oracle", criterion_3(&suite, &mut families));
    report(4, "decisions equal oracle", criterion_4(&atlas));
    report(5, "count constructions", criterion_5());
    report(6, "kernel guarantees", criterion_6(&atlas, &suite));
    report(7, "family-size bounds", criterion_7(&suite, &families));
    report(8, "clique cover size", criterion_8(&suite, &families));

    if any_failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
