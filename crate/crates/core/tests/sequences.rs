use congruent::exact::{int, parse_rat, rat, DEFAULT_BUDGET};
use congruent::sequences::*;
use congruent::{Curve, Point, RatTriangle};

fn all_pass(checks: &[congruent::Check]) -> bool {
    let bad: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    true
}

#[test]
fn fibonacci_lucas_identity_to_60() {
    for n in 0..=60 {
        assert!(fib_identity(n), "n={n}");
    }
}

#[test]
fn even_family_historic_example() {
    let f = fib_even_family(3).unwrap();
    assert_eq!(f.n, int(180));
    let (d, t) = f.reduced(DEFAULT_BUDGET).unwrap();
    assert_eq!(d, int(5));
    assert_eq!(t, RatTriangle::new(rat(20, 3), rat(3, 2), rat(41, 6)));
}

#[test]
fn even_family_points() {
    let f = fib_even_family(2).unwrap();
    assert_eq!(f.n, int(70));
    assert_eq!(f.p0, Some(Point::ints(-20, 300)));
    assert!(Curve::congruent_int(70).unwrap().on_curve(&Point::ints(-20, 300)));
    for n in 1..=12 {
        let f = fib_even_family(n).unwrap();
        assert!(all_pass(&f.checks().unwrap()));
        assert!(fib_even_line_identity(n));
    }
}

#[test]
fn odd_family() {
    let f = fib_odd_family(2).unwrap();
    assert_eq!(f.triangle, RatTriangle::new(rat(117, 1), rat(44, 1), rat(125, 1)));
    for n in 1..=12 {
        let f = fib_odd_family(n).unwrap();
        assert!(f.triangle.is_right());
        assert!(all_pass(&f.checks().unwrap()));
    }
}

#[test]
fn chebyshev_example() {
    let f = cheb_family(3, &int(2)).unwrap();
    assert_eq!(f.n, int(78));
    assert_eq!(f.triangle, RatTriangle::parse("45", "52/15", "677/15").unwrap());
    assert_eq!(f.p0, Some(Point::ints(-3, 135)));
    assert_eq!(f.p1, Point::ints(2028, 91260));
    assert_eq!(f.p2, Point::new(parse_rat("458329/900").unwrap(), parse_rat("306627517/27000").unwrap()));
    assert!(all_pass(&f.checks().unwrap()));
}

#[test]
fn chebyshev_grid() {
    for m in 1..=6 {
        for x in 2..=6 {
            let f = cheb_family(m, &int(x)).unwrap();
            assert!(all_pass(&f.checks().unwrap()), "m={m} n={x}");
        }
    }
    let base = cheb_family(1, &int(5)).unwrap();
    assert_eq!(base.triangle, RatTriangle::new(rat(24, 1), rat(10, 1), rat(26, 1)));
}

#[test]
fn pell_identity_to_12() {
    assert!(all_pass(&pell_identity_symbolic(12)));
}

#[test]
fn brahmagupta_k3() {
    let b = brahmagupta(3).unwrap();
    assert_eq!(b.sides, [int(51), int(52), int(53)]);
    assert_eq!((b.area.clone(), b.perimeter_half.clone()), (int(1170), int(78)));
    assert_eq!(
        b.q,
        [Point::ints(0, 140556), Point::ints(-2704, 52), Point::ints(-2650, 106), Point::ints(-2754, 102),]
    );
    assert!(all_pass(&b.checks().unwrap()));
}

#[test]
fn brahmagupta_small_and_torsion() {
    let b = brahmagupta(1).unwrap();
    assert_eq!(b.sides, [int(3), int(4), int(5)]);
    assert_eq!((b.area.clone(), b.perimeter_half.clone()), (int(6), int(6)));
    assert!(all_pass(&b.checks().unwrap()));
    let z = brahmagupta(0).unwrap();
    assert_eq!(z.sides, [int(1), int(2), int(3)]);
    assert_eq!(z.curve, Curve::new(rat(11, 1), rat(36, 1), rat(36, 1)).unwrap());
    assert!(all_pass(&z.checks().unwrap()));
    for k in 2..=5 {
        assert!(all_pass(&brahmagupta(k).unwrap().checks().unwrap()), "k={k}");
    }
}
