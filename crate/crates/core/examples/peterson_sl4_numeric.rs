//! Floating-point Newton samples of the SL4 Peterson cell.

use cartan_toric::peterson::numeric::{kostant_error, numeric_check, sample_sl4_cell};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for s in sample_sl4_cell(3, 9)? {
        println!(
            "sub {:?} -> x {:?}, residual {:.1e}, Kostant error {:?}",
            s.sub,
            s.x,
            s.residual,
            kostant_error(&s.matrix())
        );
    }
    let r = numeric_check(100, 9)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
