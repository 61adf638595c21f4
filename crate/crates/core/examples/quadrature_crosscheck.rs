// Exact L4 norm against FFT quadrature on the unit circle.

use littlewood::norms::{l4_by_quadrature, l4_report, quadrature_crosscheck};
use littlewood::{ClassKind, ClassSpec};

pub fn run_example() -> littlewood::Result<()> {
    let barker: littlewood::BinarySequence = "+++++--++-+-+".parse()?;
    println!(
        "barker 13: exact {} quadrature {:.9}",
        l4_report(&barker).norm4_fourth,
        l4_by_quadrature(&barker)?
    );
    for n in [16, 64, 256, 1024] {
        let s = quadrature_crosscheck(ClassSpec::new(ClassKind::All, n)?, 50, 7)?;
        println!(
            "n={n:<5} count={} max rel err L4 {:.2e} L2 {:.2e} pass={}",
            s.count, s.max_rel_err_l4, s.max_rel_err_l2, s.pass
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
