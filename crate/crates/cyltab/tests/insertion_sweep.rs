//! Exhaustive checks of forward and reverse multi-insertion on every
//! tableau with at most 4 boxes and letters at most 3, every admissible
//! horizontal strip of at most 3 boxes, `k ≤ 3` and `n - k ≤ 3`.

mod common;

#[test]
fn insertion_properties_hold_exhaustively() {
    let mut total = (0, 0);
    for (k, n) in common::sweep_params() {
        let (f, r) = common::checks::insertion_sweep(k, n, common::checks::ALL).unwrap_or_else(|e| panic!("{e}"));
        assert!(f > 0 && r > 0);
        total = (total.0 + f, total.1 + r);
    }
    let shared = common::checks::SHARED_ROW_COMPARISONS.load(std::sync::atomic::Ordering::Relaxed);
    assert!(shared > 1000, "only {shared} shared-row comparisons");
    eprintln!("{shared} shared-row route comparisons");
    eprintln!("checked {} forward and {} reverse instances", total.0, total.1);
}
