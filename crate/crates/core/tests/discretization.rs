//! The polygonal area with `K` Gaussian steps is a quadratic form
//! `A = Σ Q_ab g_a g_b` in `2K` independent `N(0, 1/K)` increments. Its
//! even moments follow from Isserlis' theorem, evaluated here by brute force
//! over all index tuples and all perfect pairings.

use levy_shuffle::brownian_sim::{estimate_moments, McConfig};
use levy_shuffle::shuffle_algebra::rational::{integer, pow, rational, Rational};

/// `4Q` as an integer matrix; coordinates `0..K` are ΔX, `K..2K` are ΔY.
fn quadruple_form(steps: usize) -> Vec<Vec<i64>> {
    let dim = 2 * steps;
    let mut q = vec![vec![0i64; dim]; dim];
    for i in 0..steps {
        for j in 0..i {
            // ½(ΔX_j ΔY_i − ΔY_j ΔX_i), symmetrised
            q[j][steps + i] += 1;
            q[steps + i][j] += 1;
            q[steps + j][i] -= 1;
            q[i][steps + j] -= 1;
        }
    }
    q
}

fn pairings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
        for mut tail in pairings(&remaining) {
            tail.push((first, partner));
            out.push(tail);
        }
    }
    out
}

/// `E[A^power]` exactly, for standard Gaussian increments of variance `1/K`.
fn isserlis_moment(steps: usize, power: usize) -> Rational {
    let q = quadruple_form(steps);
    let dim = 2 * steps;
    let slots: Vec<usize> = (0..2 * power).collect();
    let all_pairings = pairings(&slots);
    let mut index = vec![0usize; 2 * power];
    let mut total: i64 = 0;
    loop {
        let weight: i64 = (0..power).map(|f| q[index[2 * f]][index[2 * f + 1]]).product();
        if weight != 0 {
            let wick = all_pairings
                .iter()
                .filter(|p| p.iter().all(|&(a, b)| index[a] == index[b]))
                .count() as i64;
            total += weight * wick;
        }
        // next tuple
        let mut pos = 0;
        loop {
            if pos == index.len() {
                let scale = pow(&rational(1, 4), power as u32) * pow(&rational(1, steps as i64), power as u32);
                return integer(total) * scale;
            }
            index[pos] += 1;
            if index[pos] < dim {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

fn second_moment(steps: usize) -> Rational {
    rational(1, 4) * (integer(1) - rational(1, steps as i64))
}

#[test]
fn isserlis_reproduces_a_hand_computation() {
    // K = 2: A = ½(ΔX_1ΔY_2 − ΔY_1ΔX_2) with variance-½ increments, so
    // E[A^4] = (1/16)(1/2)^4·E[(ab − cd)^4] = (1/256)·24.
    assert_eq!(isserlis_moment(2, 4), rational(3, 32));
    assert_eq!(isserlis_moment(1, 2), integer(0));
    assert_eq!(isserlis_moment(2, 3), integer(0));
}

#[test]
fn exact_second_moment_at_small_step_counts() {
    for steps in [1, 2, 4] {
        assert_eq!(isserlis_moment(steps, 2), second_moment(steps), "K = {steps}");
    }
}

#[test]
fn monte_carlo_second_moment_approaches_one_quarter() {
    let exact: Vec<f64> = [16, 64, 256]
        .iter()
        .map(|&k| num_traits::ToPrimitive::to_f64(&second_moment(k)).unwrap())
        .collect();
    assert!(exact.windows(2).all(|w| w[0] < w[1] && w[1] < 0.25));
    for (steps, want) in [16, 64, 256].into_iter().zip(exact) {
        let config = McConfig::new(200_000, steps, 99).with_workers(4);
        let est = &estimate_moments(&[2], &config).unwrap()[0];
        let gap = (est.estimate - want).abs();
        assert!(gap <= 4.0 * est.std_error, "K = {steps}: {} vs {want} (SE {})", est.estimate, est.std_error);
    }
}

#[test]
fn moment_estimates_scale_with_time() {
    let config = McConfig::new(200_000, 128, 5).with_time(4.0).with_workers(4);
    let est = &estimate_moments(&[2], &config).unwrap()[0];
    assert_eq!(est.reference_value, Some(4.0));
    // discretisation bias is 4·(1/4)/128
    assert!((est.estimate - 4.0).abs() <= 4.0 * est.std_error + 4.0 * 0.25 / 128.0, "{est:?}");
}
