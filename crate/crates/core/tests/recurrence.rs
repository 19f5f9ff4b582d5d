use congruent::exact::{int, rat};
use congruent::recurrence::*;
use congruent::{Exec, Int, RatTriangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tri(a: &str, b: &str, c: &str) -> RatTriangle {
    RatTriangle::parse(a, b, c).unwrap()
}

fn path(s: &str) -> WalkPath {
    s.parse().unwrap()
}

#[test]
fn all_table_cells_reproduce() {
    let cells = table_cells();
    assert_eq!(cells.len(), 28);
    let checks = table_check(Exec::default());
    let bad: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.to_string()).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn walks_from_the_text() {
    let t6 = RatTriangle::new(rat(3, 1), rat(4, 1), rat(5, 1));
    let w = walk(&t6, &int(6), &path("ab")).unwrap();
    assert_eq!(w[0], (int(15), tri("15/2", "4", "17/2")));
    assert_eq!(w[1], (int(34), tri("136/15", "15/2", "353/30")));

    let t34 = tri("15/2", "136/15", "353/30");
    let ns: Vec<Int> = walk(&t34, &int(34), &path("aa")).unwrap().into_iter().map(|x| x.0).collect();
    assert_eq!(ns, vec![int(353), int(30928801)]);

    let t7 = tri("24/5", "35/12", "337/60");
    let ns: Vec<Int> = walk(&t7, &int(7), &path("bb")).unwrap().into_iter().map(|x| x.0).collect();
    assert_eq!(ns, vec![int(2359), int(144194)]);
}

#[test]
fn walks_are_deterministic_and_valid() {
    let t = RatTriangle::new(rat(3, 1), rat(4, 1), rat(5, 1));
    let a = walk(&t, &int(6), &path("abba")).unwrap();
    assert_eq!(a, walk(&t, &int(6), &path("abba")).unwrap());
    for (n, t) in &a {
        assert!(t.check(&congruent::Rat::from_integer(n.clone())));
    }
    assert!(walk(&t, &int(6), &WalkPath(vec![Side::A; MAX_WALK + 1])).is_err());
}

#[test]
fn bb_closed_form_at_2_1() {
    let want = tri("3280/9", "9", "3281/9");
    assert_eq!(closed_form(&int(2), &int(1), ClosedForm::BB).unwrap(), want);
    assert!(closed_form_check(&int(2), &int(1), ClosedForm::BB).unwrap().pass);
}

#[test]
fn closed_forms_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 20 {
        let m: i64 = rng.gen_range(2..40);
        let n: i64 = rng.gen_range(1..m);
        let (m, n) = (int(m), int(n));
        if !is_primitive_pair(&m, &n) {
            continue;
        }
        for which in [ClosedForm::APow(1), ClosedForm::APow(2), ClosedForm::APow(3), ClosedForm::AB, ClosedForm::BB] {
            let c = closed_form_check(&m, &n, which).unwrap();
            assert!(c.pass, "{c}");
        }
        done += 1;
    }
}

#[test]
fn printed_labels_differ_from_literal_walks() {
    let (m, n) = (int(2), int(1));
    let t = RatTriangle::new(rat(3, 1), rat(4, 1), rat(5, 1));
    let ab = walk(&t, &int(6), &path("ab")).unwrap().pop().unwrap().1;
    assert_ne!(ab, closed_form(&m, &n, ClosedForm::AB).unwrap());
    let bb = walk(&t, &int(6), &path("bb")).unwrap().pop().unwrap().1;
    assert_ne!(bb, closed_form(&m, &n, ClosedForm::BB).unwrap());
}
