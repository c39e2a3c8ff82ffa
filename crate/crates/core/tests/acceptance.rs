//! End-to-end acceptance gate: one test per shipped guarantee, each printing
//! a pass/fail line per check (visible with `--nocapture`). Every sweep uses
//! a fixed seed so reruns are bit-for-bit comparable.

use convexdiff_core::scenario::{builtin, run_scenario};
use convexdiff_core::suites::{self, all_pass, Check};

fn jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn report(name: &str, checks: &[Check]) {
    for c in checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        match c.gap {
            Some(g) => println!("[{name}] {status}: {} (gap {g:.3e})", c.name),
            None => println!("[{name}] {status}: {}", c.name),
        }
    }
    assert!(all_pass(checks), "{name} failed: {checks:?}");
}

#[test]
fn criterion_01_selector_gap_convergence() {
    let (checks, max_gaps) =
        suites::theorem3_convergence(11, 20, 32, &[16, 64, 256], jobs()).unwrap();
    println!("[support-gap] max gap per grid: {max_gaps:?}");
    report("support-gap", &checks);
}

#[test]
fn criterion_02_lemma_suite_exact() {
    report("lemma-suite", &suites::lemma_suite(7, 100, 100).unwrap());
}

#[test]
fn criterion_03_containment_and_norm_bracket() {
    report("containment", &suites::containment_validation(13, 50).unwrap());
}

#[test]
fn criterion_04_norm_identities() {
    report("norm-identities", &suites::norm_identities(17, 50).unwrap());
}

#[test]
fn criterion_05_mp_difference_properties() {
    let (checks, witness) = suites::mp_properties(3, 100).unwrap();
    let w = witness.expect("sign-discrepancy witness");
    println!(
        "[mp-properties] sign-discrepancy witness: X = {:?}, Y = {:?}",
        w.x.vertices(),
        w.y.vertices()
    );
    println!(
        "[mp-properties] definitional = {:?}, flipped = {:?}",
        w.definitional.as_ref().map(|p| p.vertices()),
        w.flipped.as_ref().map(|p| p.vertices())
    );
    report("mp-properties", &checks);
}

#[test]
fn criterion_06_eps_subdiff_closed_form() {
    report("eps-subdiff", &suites::eps_closed_form().unwrap());
}

#[test]
fn criterion_07_lipschitz_probe() {
    report("lipschitz", &suites::lipschitz_suite(23, 10, 200).unwrap());
}

#[test]
fn criterion_08_graph_convexity() {
    report("graph-convexity", &suites::graph_convexity_suite(29, 500).unwrap());
}

#[test]
fn criterion_09_figure_reproduction() {
    let sc = builtin::fig1();
    let out = run_scenario(&sc, jobs()).unwrap();
    let elems = out.report.results["minimal_elements"].as_array().unwrap();
    let mut distinct: Vec<&serde_json::Value> = Vec::new();
    let mut all_segments = true;
    let mut all_feasible = true;
    for e in elems {
        let verts = e["element"]["vertices"].as_array().unwrap();
        all_segments &= verts.len() == 2;
        all_feasible &= e["certified_feasible"].as_bool().unwrap();
        if !distinct.contains(&&e["element"]["vertices"]) {
            distinct.push(&e["element"]["vertices"]);
        }
    }
    let svg_a = out.svg.clone().expect("svg");
    let svg_b = run_scenario(&sc, jobs()).unwrap().svg.expect("svg");
    let checks = vec![
        Check::with_gap(
            "at_least_5_distinct_minimal_elements",
            distinct.len() >= 5,
            distinct.len() as f64,
        ),
        Check::new("every_element_is_a_segment", all_segments),
        Check::new("every_element_certified_feasible", all_feasible),
        Check::new("svg_deterministic", svg_a == svg_b),
    ];
    report("figure", &checks);
}

#[test]
fn criterion_10_demo_determinism() {
    let mut checks = Vec::new();
    for (name, sc) in builtin::all() {
        let a = run_scenario(&sc, jobs()).unwrap();
        let b = run_scenario(&sc, 1).unwrap();
        checks.push(Check::new(
            format!("{name}_report_byte_identical_excluding_timing"),
            a.report.to_json_without_timing() == b.report.to_json_without_timing(),
        ));
        checks.push(Check::new(format!("{name}_svg_byte_identical"), a.svg == b.svg));
        checks.push(Check::new(
            format!("{name}_all_checks_pass"),
            suites::all_pass(&a.report.checks),
        ));
    }
    report("determinism", &checks);
}
