use std::panic::{self, AssertUnwindSafe};

use serde::Serialize;
use serde_json::json;

use levy_shuffle::matchings::{
    coefficient_by_block_matchings, coefficient_by_xy, coefficient_even_word, count_with_negativity,
    u_by_block_matchings, u_by_xy,
};
use levy_shuffle::moments::{moment_by_contraction_limited, moment_closed_form, unbalanced_doubled_survivors};
use levy_shuffle::shuffle_algebra::rational::{factorial, integer};
use levy_shuffle::shuffle_algebra::{
    area_tensor, shuffle, shuffle_by_permutations, shuffle_poly, shuffle_power, TensorPoly, Word,
};
use levy_shuffle::special_numbers::{
    alternating_eulerian_sum, c2r_bruteforce, c2r_by_descents, euler_number, single_cycle_exponential,
    tangent_number, u_from_exponential_formula, Series,
};

use crate::args::{Suite, VerifyArgs};
use crate::output::{emit, Format, Table};
use crate::{Failure, Limits};

#[derive(Debug, Serialize)]
struct Check {
    suite: &'static str,
    name: String,
    passed: bool,
    detail: String,
}

/// Runs `body`, turning a panic into a failed check.
fn guarded(suite: &'static str, name: String, body: impl FnOnce() -> Result<String, String>) -> Check {
    let outcome = panic::catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into());
        Err(msg)
    });
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        suite,
        name,
        passed,
        detail,
    }
}

fn words_up_to(len: usize) -> impl Iterator<Item = Word> {
    (0..=len).flat_map(Word::all_of_length)
}

fn shuffle_checks(m: usize, limits: &Limits, out: &mut Vec<Check>) {
    let suite = "shuffle";
    let total = (2 * m + 2).min(10);
    out.push(guarded(suite, format!("DP shuffle = permutation oracle, |u| + |v| <= {total}"), || {
        let mut pairs = 0;
        for u in words_up_to(total) {
            for v in words_up_to(total - u.len()) {
                pairs += 1;
                if shuffle(u, v) != shuffle_by_permutations(u, v) {
                    return Err(format!("{u} ⧢ {v}"));
                }
            }
        }
        Ok(format!("{pairs} pairs"))
    }));
    let len = (m + 1).min(3);
    out.push(guarded(suite, format!("commutativity and associativity, words of length <= {len}"), || {
        let words: Vec<TensorPoly> = words_up_to(len).map(TensorPoly::word).collect();
        for a in &words {
            for b in &words {
                let ab = shuffle_poly(a, b);
                if ab != shuffle_poly(b, a) {
                    return Err("commutativity".into());
                }
                for c in &words {
                    if shuffle_poly(&ab, c) != shuffle_poly(a, &shuffle_poly(b, c)) {
                        return Err("associativity".into());
                    }
                }
            }
        }
        Ok(format!("{} words", words.len()))
    }));
    let n_max = 2 * m;
    out.push(guarded(suite, format!("contraction = closed form, n <= {n_max}"), || {
        for n in 0..=n_max {
            let c = moment_by_contraction_limited(n, limits.max_n).map_err(|e| e.to_string())?;
            if c != moment_closed_form(n) {
                return Err(format!("n = {n}: {c} vs {}", moment_closed_form(n)));
            }
        }
        Ok("exact".into())
    }));
    out.push(guarded(suite, format!("only balanced doubled words survive, n <= {n_max}"), || {
        for n in 0..=n_max {
            let survivors = unbalanced_doubled_survivors(n, limits.max_n).map_err(|e| e.to_string())?;
            if let Some(w) = survivors.first() {
                return Err(format!("{w} has a nonzero coefficient"));
            }
        }
        Ok("none".into())
    }));
}

fn matching_checks(m: usize, out: &mut Vec<Check>) {
    let suite = "matchings";
    let max_len = 4 * m;
    out.push(guarded(suite, format!("route equivalence on even words of length <= {max_len}"), || {
        let mut words = 0;
        for pairs in (0..=2 * m).step_by(2) {
            let full = shuffle_power(&area_tensor(), pairs);
            let xy = TensorPoly::word("xy".parse().unwrap());
            let yx = TensorPoly::word("yx".parse().unwrap());
            let split: Vec<TensorPoly> = (0..=pairs)
                .map(|t| shuffle_poly(&shuffle_power(&xy, pairs - t), &shuffle_power(&yx, t)))
                .collect();
            for w in Word::even_words(pairs) {
                words += 1;
                let by_xy = coefficient_even_word(w).map_err(|e| e.to_string())?;
                let by_block = coefficient_by_block_matchings(w).map_err(|e| e.to_string())?;
                if integer(by_xy.clone()) != full.coeff(&w) || by_block != by_xy {
                    return Err(format!("{w}: xy {by_xy}, XY {by_block}, shuffle {}", full.coeff(&w)));
                }
                for (t, product) in split.iter().enumerate() {
                    let c = coefficient_by_xy(w, pairs - t, t).map_err(|e| e.to_string())?;
                    if integer(c.clone()) != product.coeff(&w) {
                        return Err(format!("{w}, t = {t}: {c} vs {}", product.coeff(&w)));
                    }
                }
            }
        }
        Ok(format!("{words} words"))
    }));
    out.push(guarded(suite, format!("u_2k by xy, XY and exponential routes, k <= {m}"), || {
        for k in 1..=m {
            let a = u_by_xy(2 * k);
            let b = u_by_block_matchings(k);
            let c = u_from_exponential_formula(k);
            if a != b || b != c {
                return Err(format!("k = {k}: {a}, {b}, {c}"));
            }
        }
        Ok("exact".into())
    }));
    if m >= 2 {
        out.push(guarded(suite, "N_1(xxyyxxyy) = 16".into(), || {
            let n = count_with_negativity("xxyyxxyy".parse().unwrap(), 1).map_err(|e| e.to_string())?;
            if n == 16 {
                Ok("16".into())
            } else {
                Err(n.to_string())
            }
        }));
    }
}

fn number_checks(m: usize, out: &mut Vec<Check>) {
    let suite = "numbers";
    let r_max = (2 * m).max(1);
    out.push(guarded(suite, format!("alternating Eulerian sums, r <= {r_max}"), || {
        for r in 1..=r_max {
            let t = tangent_number(r);
            let expected = if r % 2 == 1 { t } else { -t };
            if alternating_eulerian_sum(r) != expected {
                return Err(format!("r = {r}"));
            }
        }
        Ok("exact".into())
    }));
    let brute = m.min(4);
    out.push(guarded(suite, format!("c_2r = 2 T_r by enumeration, r <= {brute}"), || {
        for r in 1..=brute {
            let c = c2r_bruteforce(r).total;
            if c != tangent_number(r) * 2 {
                return Err(format!("r = {r}: {c}"));
            }
        }
        Ok("exact".into())
    }));
    let by_descents = m.min(5);
    out.push(guarded(suite, format!("c_2r = 2 T_r by descents, r <= {by_descents}"), || {
        for r in 1..=by_descents {
            let c = c2r_by_descents(r);
            if c != tangent_number(r) * 2 {
                return Err(format!("r = {r}: {c}"));
            }
        }
        Ok("exact".into())
    }));
    let degree = 4 * m;
    out.push(guarded(suite, format!("exp(sum T_r z^2r/(2r)!) = sec z through z^{degree}"), || {
        if single_cycle_exponential(degree + 1) == Series::cos(degree + 1).reciprocal() {
            Ok("exact".into())
        } else {
            Err("series differ".into())
        }
    }));
    out.push(guarded(suite, format!("u_2k = 2^2k (2k)! E_2k, k <= {m}"), || {
        for k in 1..=m {
            let closed = (factorial(2 * k as u32) << (2 * k)) * euler_number(2 * k);
            if u_from_exponential_formula(k) != closed {
                return Err(format!("k = {k}"));
            }
        }
        Ok("exact".into())
    }));
}

pub fn run(args: &VerifyArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    let m = args.m_max;
    if 2 * m > limits.max_n {
        return Err(Failure::Usage(format!(
            "--m-max {m} needs moment order {} but the limit is {}; raise it with --max-n",
            2 * m,
            limits.max_n
        )));
    }
    let mut checks = Vec::new();
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Shuffle {
        shuffle_checks(m, limits, &mut checks);
    }
    if all || args.suite == Suite::Matchings {
        matching_checks(m, &mut checks);
    }
    if all || args.suite == Suite::Numbers {
        number_checks(m, &mut checks);
    }

    let mut table = Table::new(["result", "suite", "check", "detail"]);
    for c in &checks {
        table.push(vec![
            if c.passed { "PASS" } else { "FAIL" }.into(),
            c.suite.into(),
            c.name.clone(),
            c.detail.clone(),
        ]);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    emit(format, &table, &json!({ "passed": failed == 0, "checks": checks }));
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} of {} checks failed", checks.len())))
    }
}
