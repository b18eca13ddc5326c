//! SVG pictures of the rank-two fans.

use cartan_toric::fan::{fan_svg, FanSigma};
use cartan_toric::CartanMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("cartan-toric-plots");
    std::fs::create_dir_all(&dir)?;
    for t in ["A2", "B2", "G2"] {
        let svg = fan_svg(&FanSigma::new(&CartanMatrix::parse(t)?))?;
        let path = dir.join(format!("{t}.svg"));
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
