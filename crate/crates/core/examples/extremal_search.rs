// Exhaustive minimum of the L4 norm per class, with canonical witnesses.

use littlewood::extremal::min_search;
use littlewood::{ClassKind, ClassSpec};

pub fn run_example() -> littlewood::Result<()> {
    for n in 3..=21 {
        for kind in ClassKind::EVERY.into_iter().filter(|k| k.admits(n)) {
            let r = min_search(ClassSpec::new(kind, n)?)?;
            let merit = r.max_merit_factor.map_or(f64::INFINITY, |f| f.to_f64());
            let first = r.witnesses.first().map(|w| w.to_string()).unwrap_or_default();
            println!(
                "{:<20} n={n:<3} min={:<5} F={merit:<7.3} minimizers={:<4} {first}",
                kind.name(),
                r.min_norm4_fourth,
                r.witness_count,
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
