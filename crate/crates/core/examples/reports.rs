//! The JSON reports behind the command-line tool.

use cartan_toric::report::{coh_run, fan_run, peterson_run};
use cartan_toric::CartanMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = CartanMatrix::parse("A2")?;
    let fan = fan_run(&c, 7, 500)?;
    println!("{}", serde_json::to_string_pretty(&fan.structure)?);
    let coh = coh_run(&c)?;
    println!("coh dims {:?} pass {}", coh.dims, coh.pass);
    let pet = peterson_run(1, 20, 3)?;
    println!("peterson SL2 pass {}, worked example {:?}", pet.pass, pet.worked_example);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
