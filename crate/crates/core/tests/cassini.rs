use congruent::cassini::*;
use congruent::conics::Adjoin;
use congruent::exact::{int, parse_rat, rat};
use congruent::RatTriangle;
use num_traits::Zero;

fn pr(s: &str) -> congruent::Rat {
    parse_rat(s).unwrap()
}

fn residuals_vanish(h: &Heegner) {
    for x2 in &h.axis.x_sq {
        assert!(h.oval.residual(x2, &rat(0, 1)).is_zero());
    }
    for y2 in &h.axis.y_sq {
        assert!(h.oval.residual(&rat(0, 1), y2).is_zero());
    }
}

#[test]
fn two_system_n29() {
    let h = heegner_two(&int(29), &int(1), &Adjoin::None.square(&int(-13), &int(29))).unwrap();
    assert_eq!(h.quad.c1(), Some(rat(13, 1)));
    assert_eq!(h.quad.c2, rat(70, 1));
    assert_eq!(h.quad.c3(), Some(rat(1, 1)));
    assert_eq!(h.quad.c4(), Some(rat(99, 1)));
    assert_eq!(h.triangle, RatTriangle::parse("99/910", "52780/99", "48029801/90090").unwrap());
    assert_eq!(h.oval.a2, rat(4900, 1));
    assert_eq!(h.oval.b4, rat(28561 * 841, 1));
    assert_eq!(h.axis.x_sq, vec![rat(9801, 1)]);
    assert_eq!(h.axis.y_sq, vec![rat(1, 1)]);
    assert_eq!(h.axis.form, LoopForm::One);
    residuals_vanish(&h);
}

#[test]
fn two_system_n79_adjoined() {
    let n = int(79);
    let h = heegner_two(&n, &int(125), &Adjoin::SqrtN.square(&int(52), &n)).unwrap();
    assert_eq!(h.quad.c4(), Some(pr("1447991/2")));
    assert_eq!(h.quad.c2, pr("1020759/2"));
    assert!(h.triangle.check(&rat(79, 1)));
    residuals_vanish(&h);
}

#[test]
fn two_system_n62_adjoined() {
    let n = int(62);
    let h = heegner_two(&n, &int(20), &Adjoin::Sqrt2N.square(&int(7), &n)).unwrap();
    assert_eq!(h.quad.c2, rat(9362, 1));
    assert_eq!(h.quad.c4(), Some(rat(15438, 1)));
    assert_eq!(h.triangle.a, pr("177537/21140"));
    assert_eq!(h.triangle.b, pr("84560/5727"));
    assert!(h.triangle.check(&rat(62, 1)));
    residuals_vanish(&h);
}

#[test]
fn four_system_n79() {
    let h = heegner_four(&int(79), &int(125), &rat(2704, 1)).unwrap();
    assert_eq!(h.quad.c2, rat(18329, 1));
    assert_eq!(h.quad.c1sq, rat(25921, 1));
    assert_eq!(h.axis.x_sq, vec![rat(12921 * 12921, 1), rat(13000 * 13000, 1)]);
    assert_eq!(h.axis.form, LoopForm::Two);
    assert!(h.triangle.check(&rat(79, 1)));
    residuals_vanish(&h);
    let two = heegner_two(&int(79), &int(125), &rat(2704 * 79, 1)).unwrap();
    assert_eq!(two.triangle.area(), h.triangle.area());
}

#[test]
fn four_system_n62() {
    let n = int(62);
    let h = heegner_four(&n, &int(20), &Adjoin::Sqrt2.square(&int(7), &n)).unwrap();
    assert_eq!(h.quad.c3sq, rat(302 * 302, 1));
    assert_eq!(h.quad.c4sq, rat(156800, 1));
    assert_eq!(h.quad.c4(), None);
    assert_eq!(h.axis.x_sq, vec![rat(302 * 302, 1), rat(156800, 1)]);
    assert!(h.triangle.check(&rat(62, 1)));
    residuals_vanish(&h);
}

#[test]
fn four_system_rejects_flat_quad() {
    assert!(heegner_four(&int(5), &int(10), &rat(1, 1)).is_err());
}

#[test]
fn two_system_random_inputs_give_area_n() {
    let mut built = 0;
    for n in [5i64, 6, 7, 13, 14, 15, 21, 29, 30, 34] {
        for f1 in 1..20i64 {
            for f2 in 1..40i64 {
                let Ok(h) = heegner_two(&int(n), &int(f1), &rat(f2 * f2, 1)) else { continue };
                assert!(h.triangle.check(&rat(n, 1)), "N={n} f1={f1} f2={f2}");
                residuals_vanish(&h);
                built += 1;
            }
        }
    }
    assert!(built > 0);
}
