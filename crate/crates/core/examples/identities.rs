// Check the floor-function summation identities used by the closed forms.

use littlewood::closedform::{
    check_floor_product_identity, check_identity, identity_needs_odd, identity_sides,
    IDENTITY_COUNT,
};

pub fn run_example() -> littlewood::Result<()> {
    let max_n = 200;
    for id in 1..=IDENTITY_COUNT {
        let step = if identity_needs_odd(id) { 2 } else { 1 };
        let start = if identity_needs_odd(id) { 3 } else { 2 };
        let mut checked = 0;
        for n in (start..=max_n).step_by(step) {
            if !check_identity(id, n)? {
                let (lhs, rhs) = identity_sides(id, n)?;
                return Err(littlewood::Error::Inconsistent(format!(
                    "identity {id} fails at n={n}: {lhs} != {rhs}"
                )));
            }
            checked += 1;
        }
        let (lhs, rhs) = identity_sides(id, max_n - 1)?;
        println!("identity {id:>2}: {checked} lengths ok (n={}: {lhs} = {rhs})", max_n - 1);
    }
    let ok = (1..=10_000).all(check_floor_product_identity);
    println!("floor product identity for u <= 10000: {ok}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
