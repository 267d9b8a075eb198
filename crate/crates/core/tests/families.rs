use pebbling_core::graph::{make_family, Family};
use pebbling_core::parameters::Analysis;
use pebbling_core::DyadicWeight;

#[test]
fn cycle_seven_row_and_flags() {
    let c7 = make_family(Family::Cycle(7)).unwrap();
    let mut a = Analysis::new(&c7);
    let r = a.full_report().unwrap();
    assert_eq!(r.table_row(), [11, 10, 10, 8, 7, 7, 5]);
    assert!(!r.is_greedy);
    assert!(!r.is_thrifty);
    // no critical distribution reaches 11 pebbles for any root
    for root in 0..7 {
        assert!(a.critical_distributions(root).unwrap().iter().all(|d| d.size() <= 10));
    }
    // the antipodal (4, 6) distribution is among the ceilings
    let crit = a.critical_distributions(0).unwrap();
    assert!(crit.iter().any(|d| d.counts() == [0, 0, 0, 4, 6, 0, 0]));
}

#[test]
fn stars() {
    for n in 4..=7 {
        let g = make_family(Family::Star(n)).unwrap();
        let mut a = Analysis::new(&g);
        assert_eq!(a.pebbling_number().unwrap().0, n as u64 + 2, "K_1,{n}");
        assert_eq!(a.r_critical_number().unwrap().0, 4, "K_1,{n}");
    }
}

#[test]
fn fans() {
    for k in 4..=8usize {
        let g = make_family(Family::Fan(k)).unwrap();
        let mut a = Analysis::new(&g);
        assert_eq!(a.pebbling_number().unwrap().0, k as u64 + 1, "F_{k}");
        assert_eq!(a.r_critical_number().unwrap().0, k as u64, "F_{k}");
        let w = a.graph_weight().unwrap().0;
        assert_eq!(w, DyadicWeight::new(k as u128 + 1, 2), "F_{k}");
        assert!(!a.is_thrifty_graph().unwrap().0, "F_{k}");
    }
}

#[test]
fn fan_three_has_no_critical_number_three() {
    // c_r = k for fans needs k >= 4; c_r = 3 never occurs
    let g = make_family(Family::Fan(3)).unwrap();
    assert_ne!(Analysis::new(&g).r_critical_number().unwrap().0, 3);
}
