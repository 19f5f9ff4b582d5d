use congruent::exact::int;
use congruent::trinity::*;
use congruent::Exec;

fn failing(checks: &[congruent::Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.pass).map(|c| c.to_string()).collect()
}

#[test]
fn all_identities_to_order_four() {
    let (checks, circles) = verify(4, 32, Exec::default());
    assert!(checks.len() > 100);
    assert!(failing(&checks).is_empty(), "{:#?}", failing(&checks));
    for c in circles {
        assert!(c.pass(), "{c:?}");
        assert_eq!(c.samples, 32);
    }
}

#[test]
fn angle_ratios_are_exact() {
    let checks = verify_vector_relations();
    for name in ["(a.c)^2 / (|a|^2 |c|^2) = 2/3", "((a x b).c)^2 / (|a x b|^2 |c|^2) = 1/3"] {
        assert!(checks.iter().any(|c| c.name == name && c.pass), "{name}");
    }
}

#[test]
fn sequential_matches_parallel() {
    assert_eq!(
        verify_derivative_identities(3, 3, Exec::Sequential),
        verify_derivative_identities(3, 3, Exec::Parallel)
    );
}

#[test]
fn caption_circle_fails_but_plotted_passes() {
    let caption = (0..32)
        .map(|k| {
            let t = k as f64 * std::f64::consts::PI / 16.0;
            circle_residual(Circle::C3, [1.0, 1.0, 1.0], Circle::caption_c3(t))
        })
        .fold(0.0, f64::max);
    assert!(caption > 1e-3);
    assert!(circle_check(Circle::C3, 32).pass());
}

#[test]
fn triple_sums_on_pairs() {
    for (m, n) in [(2, 1), (3, 2), (5, 2), (7, 4)] {
        assert!(triple_sum_identity(&int(m), &int(n)).unwrap());
    }
}
