mod support;

use support::oracle::{catalogue, compare};

#[test]
fn every_small_group_matches_brute_force() {
    let mut total = 0;
    let groups = catalogue();
    for (name, g) in &groups {
        assert!(g.order() <= 24);
        total += compare(name, g);
    }
    eprintln!("{} groups, {total} comparisons", groups.len());
    assert!(groups.len() > 150);
    assert!(total > 10_000);
}
