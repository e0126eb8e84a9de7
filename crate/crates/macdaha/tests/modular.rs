use std::sync::Arc;

use macdaha::modular::ModularData;
use macdaha::RootSystem;

fn run(label: &str, n: i64, k: &[i64]) -> ModularData {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let md = ModularData::build(rs, n, k).unwrap();
    let checks = md.verify(7).unwrap();
    for c in &checks {
        println!("{label} N={n} k={k:?} {:<22} {} {}", c.id, if c.pass { "pass" } else { "FAIL" }, c.detail);
    }
    assert!(checks.iter().all(|c| c.pass || !c.gating), "{label} N={n} k={k:?}");
    md
}

#[test]
fn a1_n5_k1() {
    let md = run("A1", 5, &[1]);
    assert_eq!(md.btilde, vec![vec![0], vec![-1], vec![-2], vec![-3]]);
}

#[test]
fn a1_grid() {
    for (n, k) in [(3, 1), (5, 2), (8, 1), (8, 2)] {
        let md = run("A1", n, &[k]);
        assert_eq!(md.size() as i64, n - 2 * k + 1, "N={n} k={k}");
    }
}

#[test]
fn degenerate_request_is_refused() {
    let rs = Arc::new(RootSystem::from_label("A1").unwrap());
    assert!(ModularData::build(rs, 3, &[2]).is_err());
}

#[test]
fn a2_grid() {
    for n in [4, 5] {
        run("A2", n, &[1]);
    }
}

#[test]
fn b2() {
    // 2(x+y) < 6 leaves only the origin
    assert_eq!(run("B2", 6, &[1, 1]).size(), 1);
    assert_eq!(run("B2", 10, &[1, 1]).size(), 6);
}

