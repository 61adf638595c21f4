// Normalized norm statistics for growing n, written as CSV.

use littlewood::closedform::formula_limit_constants;
use littlewood::moments::{convergence_scan, write_scan_csv};
use littlewood::ClassKind;

pub fn run_example() -> littlewood::Result<()> {
    let lengths = [25, 50, 100, 200, 400];
    for kind in [ClassKind::All, ClassKind::Reciprocal] {
        let limit = formula_limit_constants(kind);
        println!("# {}: ||f||_4^4 / n^2 -> {}", kind.name(), limit.c);
        let rows = convergence_scan(kind, &lengths, 4_000, 7)?;
        let mut csv = Vec::new();
        write_scan_csv(&mut csv, &rows)?;
        print!("{}", String::from_utf8_lossy(&csv));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
