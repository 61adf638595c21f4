// Seeded Monte Carlo estimates next to the exact mean and variance.

use littlewood::closedform::{mean_formula, variance_formula};
use littlewood::moments::monte_carlo_moments;
use littlewood::{ClassKind, ClassSpec};

pub fn run_example() -> littlewood::Result<()> {
    let seed = 42;
    for (kind, n) in [
        (ClassKind::All, 101),
        (ClassKind::SkewSymmetric, 101),
        (ClassKind::Reciprocal, 100),
        (ClassKind::NegativeReciprocal, 100),
    ] {
        let spec = ClassSpec::new(kind, n)?;
        let r = monte_carlo_moments(spec, 20_000, seed)?;
        let mean = mean_formula(spec).to_f64();
        let var = variance_formula(spec).to_f64();
        let se = r.mean.std_err().unwrap_or(0.0);
        println!(
            "{spec}: mean {:.1} +- {se:.1} (exact {mean}, z = {:+.2}), variance {:.4e} (exact {var:.4e})",
            r.mean.to_f64(),
            (r.mean.to_f64() - mean) / se,
            r.variance.to_f64(),
        );
    }
    let record = monte_carlo_moments(ClassSpec::new(ClassKind::All, 31)?, 5_000, seed)?.record(false);
    println!("{}", serde_json::to_string(&record)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
