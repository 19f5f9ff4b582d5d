use congruent::exact::{int, is_square, isqrt, parse_int, rat};
use congruent::fermat::*;
use congruent::triples::euclid;
use congruent::Exec;
use num_traits::Signed;

#[test]
fn depth_two_contains_first_pair() {
    let t = enumerate(2).unwrap();
    let n1 = t.label("N1").unwrap();
    assert_eq!(n1.x, rat(-7, 17));
    let n2 = t.label("N2").unwrap();
    assert_eq!(n2.x, rat(1673, 1361));
    assert_eq!((n2.a.clone(), n2.b.clone(), n2.c.clone()), (int(2276953), int(-473304), int(2325625)));
    let p1 = t.smallest_sum().unwrap();
    assert_eq!(p1.x, rat(1904113, 2397697));
    assert_eq!(p1.a, parse_int("4565486027761").unwrap());
}

#[test]
fn p1_witnesses_and_euclid() {
    let t = enumerate(2).unwrap();
    let p1 = t.label("P1").unwrap();
    let sum = &p1.a + &p1.b;
    assert_eq!(isqrt(&sum).unwrap(), int(2372159));
    assert_eq!(is_square(&p1.c), Some(int(2165017)));
    assert_ne!(parse_int("23721592").unwrap().pow(2), sum);
    assert_ne!(parse_int("21650172").unwrap().pow(2), p1.c);
    let e = euclid(&int(2150905), &int(246792)).unwrap();
    assert_eq!((e.a, e.b, e.c), (p1.a.clone(), p1.b.clone(), p1.c.clone()));
}

#[test]
fn full_table_at_depth_three() {
    let t = enumerate(3).unwrap();
    let checks = table_check(&t);
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
    let p2 = t.label("P2").unwrap();
    assert_eq!(p2.a.to_string().len(), 45);
}

#[test]
fn invariants_hold_to_depth_six() {
    let t = enumerate(6).unwrap();
    assert!(t.nodes.len() > 20);
    let bad: Vec<_> = t.verify(Exec::default()).into_iter().filter(|c| !c.pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(t.nodes.iter().all(|n| n.x.denom().is_positive()));
    assert_eq!(t.smallest_sum().unwrap().c, parse_int("4687298610289").unwrap());
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate(4).unwrap(), enumerate(4).unwrap());
    assert_eq!(enumerate(4).unwrap().verify(Exec::Sequential), enumerate(4).unwrap().verify(Exec::Parallel));
}

#[test]
fn shallow_tree_misses_p2() {
    let t = enumerate(2).unwrap();
    let checks = table_check(&t);
    assert!(!checks.iter().find(|c| c.name.starts_with("P2")).unwrap().pass);
}
