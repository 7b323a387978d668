use serde_json::json;

use levy_shuffle::special_numbers::{euler_numbers, eulerian_numbers, tangent_numbers, IntegerSequence};

use crate::args::NumbersArgs;
use crate::output::{emit, Format, Table};
use crate::Failure;

const MAX_COUNT: usize = 500;

pub fn run(args: &NumbersArgs, format: Format) -> Result<(), Failure> {
    let which = &args.sequence;
    let size = which.eulerian.unwrap_or(args.count);
    if size > MAX_COUNT {
        return Err(Failure::Usage(format!("at most {MAX_COUNT} entries, got {size}")));
    }
    let (name, sequence) = if which.euler {
        ("euler", euler_numbers(args.count))
    } else if which.tangent {
        ("tangent", tangent_numbers(args.count))
    } else {
        let t = which.eulerian.expect("clap requires one sequence");
        (
            "eulerian",
            IntegerSequence {
                first_index: 0,
                values: eulerian_numbers(t),
            },
        )
    };

    let mut table = Table::new(["index", "value"]);
    for (i, v) in sequence.to_strings().into_iter().enumerate() {
        table.push(vec![(sequence.first_index + i).to_string(), v]);
    }
    let mut body = json!({
        "sequence": name,
        "first_index": sequence.first_index,
        "values": sequence,
    });
    if let Some(t) = which.eulerian {
        body["row"] = json!(t);
    }
    emit(format, &table, &body);
    Ok(())
}
