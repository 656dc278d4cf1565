use std::fmt::Write;
use std::time::Instant;

use clap::Args;

use dicut::generate::{edge_family, vertex_family, Family};
use dicut::{approx_global_ec, approx_global_vc, approx_rooted_ec, approx_rooted_vc, DriverConfig, OpCounts, SeedStream};

use crate::Variant;

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Instance family: random, planted or layered.
    #[arg(long, default_value = "random")]
    family: Family,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = Variant::EcRooted)]
    variant: Variant,
}

/// One line per size with counters averaged over the trials.
pub fn run(args: &BenchArgs, cfg: &DriverConfig, timing: bool) -> anyhow::Result<String> {
    let names: Vec<&str> = OpCounts::default().fields().iter().map(|f| f.0).collect();
    let mut out = format!("# variant={} family={} seed={} eps={}\n", args.variant.name(), family_name(args.family), cfg.seed, cfg.eps);
    write!(out, "n trials mean_weight candidates {}", names.join(" "))?;
    out.push_str(if timing { " ms\n" } else { "\n" });
    let stream = SeedStream::new(cfg.seed);
    for &n in &args.sizes {
        let mut total = OpCounts::default();
        let (mut weight, mut candidates) = (0.0, 0u64);
        let start = Instant::now();
        for trial in 0..args.trials {
            let s = stream.path(&[n as u64, trial]);
            let run_cfg = DriverConfig { seed: s.child(1).seed(), ..*cfg };
            let mut rng = s.child(0).rng();
            let report = match args.variant {
                Variant::EcRooted | Variant::EcGlobal => {
                    let g = edge_family(args.family, n, &mut rng);
                    if args.variant == Variant::EcRooted {
                        approx_rooted_ec(&g, 0, &run_cfg)?
                    } else {
                        approx_global_ec(&g, &run_cfg)?
                    }
                }
                Variant::VcRooted | Variant::VcGlobal => {
                    let g = vertex_family(args.family, n, &mut rng);
                    if args.variant == Variant::VcRooted {
                        approx_rooted_vc(&g, 0, &run_cfg)?
                    } else {
                        approx_global_vc(&g, &run_cfg)?
                    }
                }
            };
            total += report.counts;
            candidates += report.candidates_examined;
            if let Some(c) = report.best.cut() {
                weight += c.weight_units as f64 / c.denominator as f64;
            }
        }
        let t = args.trials.max(1);
        write!(out, "{n} {} {:.3} {}", args.trials, weight / t as f64, candidates / t)?;
        for (_, v) in total.fields() {
            write!(out, " {}", v / t)?;
        }
        if timing {
            write!(out, " {}", start.elapsed().as_millis() / t as u128)?;
        }
        out.push('\n');
    }
    Ok(out)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Random => "random",
        Family::Planted => "planted",
        Family::Layered => "layered",
    }
}
