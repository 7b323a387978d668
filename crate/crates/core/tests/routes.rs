use levy_shuffle::matchings::{coefficient_by_block_matchings, coefficient_even_word};
use levy_shuffle::moments::{moment_scaled, unbalanced_doubled_survivors, MomentReport, TimeScale, DEFAULT_MAX_N};
use levy_shuffle::shuffle_algebra::rational::{integer, pow, rational};
use levy_shuffle::shuffle_algebra::Word;

#[test]
fn all_routes_agree_through_the_default_limit() {
    for n in 0..=DEFAULT_MAX_N {
        let report = MomentReport::compute(n, DEFAULT_MAX_N);
        assert!(report.agreement, "n = {n}");
        assert!(report.routes.contraction.is_some());
        if n % 2 == 1 {
            assert_eq!(report.value, integer(0));
        }
    }
    assert_eq!(MomentReport::compute(8, DEFAULT_MAX_N).value, rational(1385, 256));
}

#[test]
fn odd_orders_have_no_unbalanced_survivors() {
    for n in [1, 3, 5, 7] {
        assert!(unbalanced_doubled_survivors(n, DEFAULT_MAX_N).unwrap().is_empty());
    }
}

#[test]
fn xy_and_block_matching_coefficients_agree() {
    for pairs in [0, 2, 4, 6, 8] {
        for w in Word::even_words(pairs) {
            assert_eq!(
                coefficient_even_word(w).unwrap(),
                coefficient_by_block_matchings(w).unwrap(),
                "{w}"
            );
        }
    }
}

#[test]
fn scaling_law() {
    for text in ["1/3", "5", "2pi", "3/2pi"] {
        let t: TimeScale = text.parse().unwrap();
        for n in 0..=8 {
            let scaled = moment_scaled(n, &t);
            let base = moment_scaled(n, &TimeScale::unit());
            assert_eq!(scaled.coefficient, pow(&t.factor, n as u32) * base.coefficient);
            assert_eq!(scaled.pi_power, t.pi_power * n as u32);
        }
    }
    let report = MomentReport::compute(4, DEFAULT_MAX_N).scaled(&"2pi".parse().unwrap());
    assert_eq!((report.value, report.pi_power), (integer(5), 4));
}
