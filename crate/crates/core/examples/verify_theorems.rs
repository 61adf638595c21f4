// Compare exhaustive moments with the closed-form mean and variance.

use littlewood::closedform::{mean_formula, variance_formula};
use littlewood::moments::exact_moments;
use littlewood::{ClassKind, ClassSpec};

pub fn run_example() -> littlewood::Result<()> {
    println!("{:<20} {:>3} {:>8} {:>12}  ok", "class", "n", "mean", "variance");
    for kind in ClassKind::EVERY {
        for n in (2..=18).filter(|&n| kind.admits(n)) {
            let spec = ClassSpec::new(kind, n)?;
            let exact = exact_moments(spec)?;
            let (mean, var) = (mean_formula(spec), variance_formula(spec));
            let ok = exact.mean.value() == mean && exact.variance.value() == var;
            println!("{:<20} {n:>3} {mean:>8} {var:>12}  {ok}", kind.name());
            if !ok {
                return Err(littlewood::Error::Inconsistent(format!("{spec} disagrees")));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
