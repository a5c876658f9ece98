//! Acceptance criteria, one result line each. Runs under `cargo test` with a
//! custom harness so the lines are printed even when every criterion passes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clique_lab::dynamics::{classify_behavior, Budgets, Verdict};
use clique_lab::generator::{enumerate_connected_bounded, CorpusSpec};
use clique_lab::graph::{
    hajos_sun, inner_pair_sharing_edge, inner_pair_sharing_vertex, octahedron,
};
use clique_lab::helly::{hajos_compatible, is_clique_helly, is_hereditary_helly_definitional};
use clique_lab::lemmas::{check, evaluate, run_all, LemmaId, LemmaVerdict};
use clique_lab::structure::K2Structure;
use clique_lab::{clique_graph, is_isomorphic, iterate, maximal_cliques, to_graph6, Graph};
use clique_lab_cli::run_captured;
use clique_lab_oracle as oracle;

const BUDGETS: Budgets = Budgets {
    max_iterations: 30,
    vertex_budget: 200_000,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn low_degree(n_max: usize) -> Vec<Graph> {
    enumerate_connected_bounded(&CorpusSpec::low_degree(1, n_max)).unwrap()
}

fn all_graphs(n_min: usize, n_max: usize) -> Vec<Graph> {
    enumerate_connected_bounded(&CorpusSpec {
        n_min,
        n_max,
        delta_max: n_max.saturating_sub(1).max(1),
        exclude_octahedron: false,
        connected_only: false,
    })
    .unwrap()
}

fn matrix(g: &Graph) -> oracle::Matrix {
    let edges: Vec<_> = g.edges().collect();
    oracle::matrix_from_edges(g.order(), &edges)
}

fn id(g: &Graph) -> String {
    to_graph6(g).unwrap()
}

fn convergence_sweep() -> Outcome {
    let corpus = low_degree(8);
    let mut exceeded = Vec::new();
    for g in &corpus {
        let b = classify_behavior(g, BUDGETS).map_err(|e| format!("{}: {e}", id(g)))?;
        if !b.is_convergent() {
            exceeded.push(id(g));
        }
    }
    if exceeded.is_empty() {
        Ok(format!(
            "{} connected graphs with max degree 4 and n <= 8, all convergent",
            corpus.len()
        ))
    } else {
        Err(format!(
            "{} budget-exceeded records, first {}",
            exceeded.len(),
            exceeded[0]
        ))
    }
}

fn hereditary_helly_route() -> Outcome {
    let corpus = low_degree(9);
    let mut compared = 0;
    for g in &corpus {
        let report = check(LemmaId::MainTheoremConfig, g).map_err(|e| format!("{}: {e}", id(g)))?;
        if report.verdict != LemmaVerdict::Pass {
            return Err(format!("{}: {:?}", id(g), report.verdict));
        }
        if g.order() <= 7 {
            let s = K2Structure::new(g).unwrap();
            let definitional =
                is_hereditary_helly_definitional(s.k2()).map_err(|e| e.to_string())?;
            if definitional != hajos_compatible(s.k2()) {
                return Err(format!(
                    "{}: hajos test and definition disagree on K2",
                    id(g)
                ));
            }
            compared += 1;
        }
    }
    Ok(format!(
        "K2 Hajos-compatible on {} graphs (n <= 9); agrees with the definition on {compared} (n <= 7)",
        corpus.len()
    ))
}

fn octahedron_contrast() -> Outcome {
    let oct = octahedron(3).unwrap();
    let it = iterate(&oct, 30, BUDGETS.vertex_budget).map_err(|e| e.to_string())?;
    let orders = it.orders();
    if orders != [6, 8, 16, 256] {
        return Err(format!("orders {orders:?}"));
    }
    let t = it.truncation.ok_or("no truncation")?;
    if t.step != 4 || t.projected_order_at_least <= BUDGETS.vertex_budget {
        return Err(format!("truncation {t:?}"));
    }
    if !it.graphs.iter().all(Graph::is_octahedron) {
        return Err("an iterate is not an octahedron".into());
    }
    if !is_isomorphic(&it.graphs[1], &octahedron(4).unwrap())
        || !is_isomorphic(&it.graphs[2], &octahedron(8).unwrap())
    {
        return Err("iterates are not O4 and O8".into());
    }
    let (k1, _) = clique_graph(&oct).unwrap();
    let (k2, _) = clique_graph(&k1).unwrap();
    if hajos_compatible(&k2) {
        return Err("K2 of the octahedron is Hajos-compatible".into());
    }
    Ok(format!(
        "orders {orders:?}, next projected >= {}, every iterate an octahedron, K2 not Hajos-compatible",
        t.projected_order_at_least
    ))
}

fn lemma_suite() -> Outcome {
    let corpus = low_degree(9);
    let (mut pass, mut vacuous) = (0, 0);
    for g in &corpus {
        let s = K2Structure::new(g).unwrap();
        let behavior = classify_behavior(g, BUDGETS).unwrap();
        for (lemma, report) in run_all(&s, Some(&behavior), &id(g)) {
            match report
                .map_err(|e| format!("{} {lemma}: {e}", id(g)))?
                .verdict
            {
                LemmaVerdict::Pass => pass += 1,
                LemmaVerdict::Vacuous => vacuous += 1,
                LemmaVerdict::Fail { witness } => {
                    return Err(format!("{} {lemma}: {witness:?}", id(g)))
                }
            }
        }
    }
    let fixtures = [
        ("hajos_sun", hajos_sun()),
        ("inner_pair_vertex", inner_pair_sharing_vertex()),
        ("inner_pair_edge", inner_pair_sharing_edge()),
    ];
    for (name, g) in &fixtures {
        let s = K2Structure::new(g).unwrap();
        for (lemma, report) in run_all(&s, None, name) {
            let verdict = report.map_err(|e| format!("{name} {lemma}: {e}"))?.verdict;
            if verdict.is_fail() {
                return Err(format!("{name} {lemma}: {verdict:?}"));
            }
        }
    }
    let expected_pass = [
        (LemmaId::MainTheoremConfig, &fixtures[0].1),
        (LemmaId::NecktieCharacterization, &fixtures[0].1),
        (LemmaId::IntersectingInnerOne, &fixtures[1].1),
        (LemmaId::IntersectingInnerTwo, &fixtures[2].1),
    ];
    for (lemma, g) in expected_pass {
        let s = K2Structure::new(g).unwrap();
        if evaluate(lemma, &s).unwrap() != LemmaVerdict::Pass {
            return Err(format!("{lemma} does not pass on its fixture"));
        }
    }
    Ok(format!(
        "{} graphs x {} checks: {pass} pass, {vacuous} vacuous, 0 fail; fixtures pass",
        corpus.len(),
        LemmaId::ALL.len()
    ))
}

fn oracle_equivalences() -> Outcome {
    let graphs = all_graphs(1, 8);
    for g in &graphs {
        let ours: Vec<Vec<usize>> = maximal_cliques(g)
            .unwrap()
            .iter()
            .map(|c| c.to_vec())
            .collect();
        if ours != oracle::maximal_cliques(&matrix(g)) {
            return Err(format!("cliques differ on {}", id(g)));
        }
    }
    let mut helly_checked = 0;
    for g in graphs.iter().filter(|g| g.order() <= 7) {
        if is_clique_helly(g) != oracle::is_clique_helly(&matrix(g)) {
            return Err(format!("clique-Helly differs on {}", id(g)));
        }
        helly_checked += 1;
    }
    let mut counts = Vec::new();
    for n in 1..=6 {
        let canon = oracle::Canonizer::new(n);
        let emitted: Vec<_> = enumerate_connected_bounded(&CorpusSpec {
            exclude_octahedron: false,
            ..CorpusSpec::low_degree(n, n)
        })
        .unwrap()
        .iter()
        .map(|g| canon.canonical(&matrix(g)))
        .collect();
        let set: BTreeSet<_> = emitted.iter().cloned().collect();
        if set.len() != emitted.len() || set != oracle::graph_classes(n, 4, true) {
            return Err(format!(
                "generator differs from matrix enumeration at n = {n}"
            ));
        }
        counts.push(emitted.len());
    }
    if counts[2..5] != [2, 6, 21] {
        return Err(format!("counts {counts:?}"));
    }
    Ok(format!(
        "cliques on {} graphs (n <= 8), Helly on {helly_checked} (n <= 7), generator counts {counts:?} (n = 1..6)",
        graphs.len()
    ))
}

fn helly_implies_convergent() -> Outcome {
    let mut helly = 0;
    for g in low_degree(8).iter().filter(|g| is_clique_helly(g)) {
        helly += 1;
        let b = classify_behavior(g, Budgets::default()).unwrap();
        if !matches!(b.verdict, Verdict::Convergent { .. }) {
            return Err(format!("{} is clique-Helly but {:?}", id(g), b.verdict));
        }
    }
    Ok(format!(
        "{helly} clique-Helly graphs (n <= 8), all convergent"
    ))
}

fn determinism() -> Outcome {
    let run = || run_captured(["clique-lab", "verify", "--n-max", "8"]);
    let (first, code_a) = run();
    let (second, code_b) = run();
    if code_a != 0 || code_b != 0 {
        return Err(format!("exit codes {code_a} and {code_b}"));
    }
    let bodies = |out: &[u8]| -> Vec<String> {
        String::from_utf8_lossy(out)
            .lines()
            .filter(|l| !l.contains("\"record\":\"header\""))
            .map(str::to_string)
            .collect()
    };
    let (a, b) = (bodies(&first), bodies(&second));
    if a != b {
        return Err("record bodies differ".into());
    }
    Ok(format!("{} identical record lines", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("low-degree convergence sweep", convergence_sweep),
        ("hereditary Helly route", hereditary_helly_route),
        ("octahedron contrast", octahedron_contrast),
        ("lemma suite", lemma_suite),
        ("oracle equivalences", oracle_equivalences),
        ("Helly implies convergent", helly_implies_convergent),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("acceptance {} {name}: PASS ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {} {name}: FAIL ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
