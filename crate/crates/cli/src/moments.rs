use levy_shuffle::moments::MomentReport;
use levy_shuffle::shuffle_algebra::rational::to_ratio_string;

use crate::args::MomentsArgs;
use crate::output::{emit, Format, Table};
use crate::{Failure, Limits};

pub fn run(args: &MomentsArgs, limits: &Limits, format: Format) -> Result<(), Failure> {
    if args.n_max > limits.max_n {
        return Err(Failure::Usage(format!(
            "--n-max {} exceeds the limit {}; raise it with --max-n or LEVY_SHUFFLE_MAX_N",
            args.n_max, limits.max_n
        )));
    }
    let reports: Vec<MomentReport> = (0..=args.n_max)
        .map(|n| MomentReport::compute(n, limits.max_n).scaled(&args.time))
        .collect();

    let mut table = Table::new([
        "n",
        "exact",
        "pi_power",
        "contraction",
        "xy_matching",
        "XY_exponential",
        "closed_form",
        "agreement",
    ]);
    let optional = |r: &Option<_>| r.as_ref().map(to_ratio_string).unwrap_or_else(|| "-".into());
    for r in &reports {
        table.push(vec![
            r.n.to_string(),
            to_ratio_string(&r.value),
            r.pi_power.to_string(),
            optional(&r.routes.contraction),
            optional(&r.routes.xy_matching),
            to_ratio_string(&r.routes.xy_exponential),
            to_ratio_string(&r.routes.closed_form),
            r.agreement.to_string(),
        ]);
    }
    emit(format, &table, &reports);

    let disagreeing: Vec<String> = reports.iter().filter(|r| !r.agreement).map(|r| r.n.to_string()).collect();
    if disagreeing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("routes disagree at n = {}", disagreeing.join(", "))))
    }
}
