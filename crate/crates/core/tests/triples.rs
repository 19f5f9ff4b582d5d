use congruent::exact::{int, rat};
use congruent::triples::*;
use congruent::{Int, Point, RatTriangle};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tri(a: &str, b: &str, c: &str) -> RatTriangle {
    RatTriangle::parse(a, b, c).unwrap()
}

#[test]
fn fixture_2_1() {
    let (m, n) = (int(2), int(1));
    let d = derived_triples(&m, &n).unwrap();
    assert_eq!(d.ac, tri("15/2", "136/15", "353/30"));
    assert_eq!(d.bc, tri("40/3", "123/20", "881/60"));
    assert_eq!(d.ba, tri("24/5", "35/12", "337/60"));

    let id = area_identity_check(&m, &n).unwrap();
    let q = &id.quad;
    assert_eq!((q.n.clone(), q.n_ac.clone(), q.n_bc.clone(), q.n_ba.clone()), (int(6), int(34), int(41), int(7)));
    assert!(id.holds());
    assert_eq!(id.lhs, int(2886));

    let c = connecting_points(&m, &n).unwrap();
    let want = [Point::ints(-16, 120), Point::ints(-9, 120), Point::ints(25, 120)];
    for ((curve, p), w) in c.all().into_iter().zip(want) {
        assert_eq!(p, &w);
        assert!(curve.on_curve(p));
    }

    let s = concordant_solutions(&m, &n).unwrap();
    let row = |c: &Concordant| [c.x.clone(), c.y.clone(), c.z.clone(), c.t.clone(), c.n.clone()];
    let ints = |v: [i64; 5]| v.map(Int::from);
    assert_eq!(row(&s[0]), ints([706, 120, 994, 94, 34]));
    assert_eq!(row(&s[1]), ints([881, 120, 1169, 431, 41]));
    assert_eq!(row(&s[2]), ints([337, 120, 463, 113, 7]));
    for c in &s {
        assert!(c.holds());
    }

    let r = distance_identity(&m, &n).unwrap();
    assert!(r.holds());
    assert_eq!(r.l, rat(193, 30));
    assert_eq!(r.quad, [rat(24, 5), rat(56, 15), rat(21, 10)]);
    let sum: congruent::Rat = r.quad.iter().map(|x| x * x).sum();
    assert_eq!(sum, &r.l * &r.l);
}

#[test]
fn named_pairs() {
    let f = euclid(&int(2150905), &int(246792)).unwrap();
    assert_eq!(f.a.to_string(), "4565486027761");
    for (m, n) in [(3, 2), (10, 7), (4, 1)] {
        let (m, n) = (int(m), int(n));
        assert!(area_identity_check(&m, &n).unwrap().holds());
        assert!(distance_identity(&m, &n).unwrap().holds());
        for (e, p) in connecting_points(&m, &n).unwrap().all() {
            assert!(e.on_curve(p));
        }
    }
}

fn check_pair(m: &Int, n: &Int) {
    let t = euclid(m, n).unwrap();
    assert!(t.is_valid());
    let d = derived_from(&t);
    let q = area_quad(&t);
    let want = [&q.n_ac, &q.n_bc, &q.n_ba];
    for (tr, nn) in d.as_array().into_iter().zip(want) {
        assert!(tr.is_right(), "({m}, {n})");
        assert_eq!(tr.area(), congruent::Rat::from_integer(nn.clone()));
    }
    assert!(area_identity_check(m, n).unwrap().holds());
    let s = concordant_solutions(m, n).unwrap();
    assert!(s.iter().all(|c| c.holds() && c.y == s[0].y));
    assert!(distance_identity(m, n).unwrap().products_square);
}

#[test]
fn property_suite_200_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut done = 0;
    while done < 200 {
        let m: i64 = rng.gen_range(2..500);
        let n: i64 = rng.gen_range(1..m);
        if num_integer::gcd(m, n) != 1 || (m - n) % 2 == 0 {
            continue;
        }
        check_pair(&int(m), &int(n));
        done += 1;
    }
}

proptest! {
    #[test]
    fn identities_hold_without_coprimality(m in 2i64..2000, k in 1i64..2000) {
        let n = 1 + k % (m - 1);
        check_pair(&int(m), &int(n));
    }
}
