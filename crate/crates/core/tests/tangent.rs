use congruent::exact::{factorize, int, parse_int, parse_rat, rat, DEFAULT_BUDGET};
use congruent::tangent::*;
use congruent::{Curve, Int, Point, Rat, RatTriangle};
use num_traits::Signed;

fn pi(s: &str) -> Int {
    parse_int(s).unwrap()
}

fn pr(s: &str) -> Rat {
    parse_rat(s).unwrap()
}

fn n5_start() -> RatTriangle {
    RatTriangle::new(rat(3, 2), rat(20, 3), rat(41, 6))
}

fn divisors(n: &Int) -> Vec<Int> {
    let mut ds = vec![int(1)];
    for p in factorize(n, DEFAULT_BUDGET).unwrap() {
        let mut more: Vec<Int> = ds.iter().map(|d| d * &p).collect();
        ds.append(&mut more);
    }
    ds.sort();
    ds.dedup();
    ds
}

/// Brute force over f2 | c1.
fn solve_by_divisors(c1: &Int, c2: &Rat, n: &Int) -> Vec<(Int, Int)> {
    let nq = Rat::from_integer(n.clone());
    divisors(c1)
        .into_iter()
        .filter_map(|f2| {
            let f1 = c1 / &f2;
            let v = (&nq * Rat::from_integer(&f1 * &f1) - Rat::from_integer(&f2 * &f2)).abs() / rat(2, 1);
            (&v == c2).then_some((f1, f2))
        })
        .collect()
}

#[test]
fn n5_chain_s1_to_s4() {
    let ch = tangent_chain(&n5_start(), &int(5), 4).unwrap();
    let want = [
        ("3", "2"),
        ("372", "2009"),
        ("169317668184", "15811196552161"),
        (
            "1336220772668316930638357029463135419039997035301712",
            "62496947695267799013412096545625364258488963961427841",
        ),
    ];
    for (e, (f1, f2)) in ch.entries.iter().zip(want) {
        assert_eq!((e.f1.clone(), e.f2.clone()), (pi(f1), pi(f2)));
    }
    assert!(ch.checks().unwrap().iter().all(|c| c.pass));
}

#[test]
fn n79_chain_from_adjoined_triangle() {
    let t =
        RatTriangle::parse("233126551/167973000", "335946000/2950969", "56434050774922081/495683115837000").unwrap();
    let ch = tangent_chain(&t, &int(79), 2).unwrap();
    assert_eq!((ch.entries[0].f1.clone(), ch.entries[0].f2.clone()), (int(2080281), int(238277000)));
    assert_eq!(
        (ch.entries[1].f1.clone(), ch.entries[1].f2.clone()),
        (pi("55260645511189879706636193594000"), pi("3223389202505003051748398476629439"))
    );
    assert!(ch.checks().unwrap().iter().all(|c| c.pass));
}

#[test]
fn figure_points_on_e5() {
    let e = Curve::congruent_int(5).unwrap();
    let p1 = Point::ints(-4, 6);
    let ch = tangent_chain(&n5_start(), &int(5), 2).unwrap();
    let hs = ch.doubling_points();
    let p2 = Point::new(rat(1681, 144), rat(62279, 1728));
    assert!(hs[0].eq_up_to_sign(&p2));
    assert!(e.double(&p1).unwrap().eq_up_to_sign(&p2));
    let p3 = Point::new(pr("11183412793921/2234116132416"), pr("1791076534232245919/3339324446657665536"));
    assert!(hs[1].eq_up_to_sign(&p3));
    assert!(e.on_curve(&p3));
}

#[test]
fn closed_form_agrees_with_divisor_oracle() {
    let ch = tangent_chain(&n5_start(), &int(5), 3).unwrap();
    let mut tri = n5_start();
    for en in &ch.entries {
        let (c1, c2) = hypotenuse_pair(&tri.c);
        let found = solve_by_divisors(&c1, &c2, &int(5));
        assert!(found.contains(&(en.f1.clone(), en.f2.clone())), "{found:?}");
        tri = en.triangle.clone();
    }
}

#[test]
fn point_triangle_round_trip() {
    let n = rat(5, 1);
    let p = triangle_to_point(&n5_start(), &n).unwrap();
    assert!(Curve::congruent_int(5).unwrap().on_curve(&p));
    let back = point_to_triangle(&p, &n).unwrap();
    assert!(back.check(&n));
}
