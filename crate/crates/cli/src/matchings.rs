use serde_json::json;

use levy_shuffle::matchings::{
    enumerate_xy_matchings, for_each_block_matching_on, negativity_distribution, parse_block_word, perm,
    BlockMatching,
};
use levy_shuffle::shuffle_algebra::{Letter, Word};

use crate::args::MatchingsArgs;
use crate::output::{emit, Format, Table};
use crate::{Failure, Limits};

pub fn run(args: &MatchingsArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    if args.word.contains(['X', 'Y']) {
        block(args, limits, format)
    } else {
        xy(args, limits, format)
    }
}

fn check_size(len: usize, limits: &Limits) -> Result<(), Failure> {
    if len / 2 > limits.max_n {
        return Err(Failure::Usage(format!(
            "word of length {len} exceeds the limit of {} letter pairs; raise it with --max-n",
            limits.max_n
        )));
    }
    Ok(())
}

fn print_count(format: Format, word: &str, negativity: Option<usize>, count: usize) {
    match format {
        Format::Json => println!("{}", json!({ "word": word, "negativity": negativity, "count": count })),
        Format::Csv => println!("count\n{count}"),
        Format::Table => println!("{count}"),
    }
}

fn xy(args: &MatchingsArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    let word: Word = args.word.parse()?;
    check_size(word.len(), limits)?;
    let distribution = negativity_distribution(word)?;
    let keep = |t: usize| args.negativity.is_none_or(|want| want == t);
    if args.count_only {
        let count: u64 = distribution.iter().enumerate().filter(|&(t, _)| keep(t)).map(|(_, &c)| c).sum();
        print_count(format, &args.word, args.negativity, count as usize);
        return Ok(());
    }

    let matchings: Vec<_> = enumerate_xy_matchings(word)?
        .into_iter()
        .filter(|d| keep(d.negativity()))
        .collect();
    let mut table = Table::new(["word", "sigma", "negativity", "sign"]);
    for d in &matchings {
        table.push(vec![
            word.to_string(),
            perm::cycle_notation(d.sigma()),
            d.negativity().to_string(),
            d.sign().to_string(),
        ]);
    }
    match format {
        Format::Json => {
            let listed: Vec<_> = matchings
                .iter()
                .map(|d| {
                    json!({
                        "sigma": perm::to_one_indexed(d.sigma()),
                        "cycles": perm::cycle_notation(d.sigma()),
                        "negativity": d.negativity(),
                        "sign": d.sign(),
                    })
                })
                .collect();
            let body = json!({
                "word": word.to_string(),
                "kind": "xy",
                "count": matchings.len(),
                "negativity_distribution": distribution,
                "matchings": listed,
            });
            emit(format, &table, &body);
        }
        _ => {
            emit(format, &table, &());
            if format == Format::Table {
                let mut summary = Table::new(["negativity", "N_t"]);
                for (t, c) in distribution.iter().enumerate() {
                    summary.push(vec![t.to_string(), c.to_string()]);
                }
                println!("\n{}\ntotal {}", summary.render(), matchings.len());
            }
        }
    }
    Ok(())
}

fn block(args: &MatchingsArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    let word = parse_block_word(&args.word)?;
    if word.count(Letter::X) != word.count(Letter::Y) {
        return Err(Failure::Usage(format!("{} has unequal numbers of X and Y", args.word)));
    }
    check_size(2 * word.len(), limits)?;
    let mut found: Vec<BlockMatching> = Vec::new();
    for_each_block_matching_on(word, &mut |d| {
        if args.negativity.is_none_or(|t| t == d.negativity()) {
            found.push(d.clone());
        }
    });
    if args.count_only {
        print_count(format, &args.word, args.negativity, found.len());
        return Ok(());
    }
    let mut table = Table::new(["word", "sigma", "negativity", "sign", "cycles", "expansion"]);
    for d in &found {
        table.push(vec![
            args.word.clone(),
            perm::cycle_notation(d.sigma()),
            d.negativity().to_string(),
            d.sign().to_string(),
            d.cycle_count().to_string(),
            d.expand().to_string(),
        ]);
    }
    let listed: Vec<_> = found
        .iter()
        .map(|d| {
            json!({
                "sigma": perm::to_one_indexed(d.sigma()),
                "cycles": perm::cycle_notation(d.sigma()),
                "negativity": d.negativity(),
                "sign": d.sign(),
                "cycle_count": d.cycle_count(),
                "expansion": d.expand().to_string(),
            })
        })
        .collect();
    let body = json!({ "word": args.word, "kind": "XY", "count": found.len(), "matchings": listed });
    emit(format, &table, &body);
    if format == Format::Table {
        println!("\ntotal {}", found.len());
    }
    Ok(())
}
