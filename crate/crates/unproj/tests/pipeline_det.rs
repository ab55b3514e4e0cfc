use unproj::pipeline::{run_determinantal_with_retry, run_determinantal_example};

#[test]
fn determinantal_pipeline_passes_with_retry() {
    let t0 = std::time::Instant::now();
    let report = run_determinantal_with_retry(1, 5);
    println!("{}", report.render_text());
    println!("elapsed: {:?}", t0.elapsed());
    assert!(report.passed(), "determinantal pipeline failed");
}

#[test]
fn determinantal_deterministic() {
    let a = run_determinantal_example(3).render_kv();
    let b = run_determinantal_example(3).render_kv();
    assert_eq!(a, b);
}
