//! Wall relations of A2 and the ampleness check on several types.

use cartan_toric::fan::FanSigma;
use cartan_toric::wall::{intersection_sign, kleiman_ample_check, wall_relation};
use cartan_toric::CartanMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FanSigma::new(&CartanMatrix::parse("A2")?);
    for w in f.walls() {
        let rel = wall_relation(&f, &w)?;
        let signs: Vec<_> = (0..2).map(|i| intersection_sign(&rel, i)).collect();
        println!(
            "J={} K={} l={}: x_l={} x={:?} y={:?} signs {:?}",
            w.j,
            w.k,
            w.ell + 1,
            rel.x_ell,
            rel.x.values().map(ToString::to_string).collect::<Vec<_>>(),
            rel.y.values().map(ToString::to_string).collect::<Vec<_>>(),
            signs
        );
    }
    for t in ["B3", "G2", "F4"] {
        let r = kleiman_ample_check(&FanSigma::new(&CartanMatrix::parse(t)?))?;
        println!("{t}: {} walls, ample {}", r.walls, r.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
