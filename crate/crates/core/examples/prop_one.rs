// The intermediate quantities behind the variance: E[C_u^2], E and V.

use littlewood::moments::prop1_quantities;
use littlewood::{ClassKind, ClassSpec};

pub fn run_example() -> littlewood::Result<()> {
    for (kind, n) in [
        (ClassKind::All, 9),
        (ClassKind::SkewSymmetric, 11),
        (ClassKind::Reciprocal, 12),
        (ClassKind::NegativeReciprocal, 12),
    ] {
        let q = prop1_quantities(ClassSpec::new(kind, n)?)?;
        let e_c: Vec<String> = q.expected_c_sq.iter().map(|x| x.to_string()).collect();
        println!("{} n={n}", kind.name());
        println!("  E[C_u^2] = [{}]", e_c.join(", "));
        println!("  E = {}  V = {}", q.e, q.v);
        println!("  mean = {}  variance = {}", q.mean, q.variance);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
