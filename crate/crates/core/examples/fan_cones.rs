//! The fan of A2: cones, face numbers, an oracle-checked intersection and
//! the completeness test.

use cartan_toric::fan::{cone, intersect, intersect_oracle, FanSigma};
use cartan_toric::{CartanMatrix, IndexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = CartanMatrix::parse("A2")?;
    let f = FanSigma::new(&c);
    for r in f.rays() {
        println!("{:14} {:?}", r.name(), r.vector(&c).iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    println!("f = {:?}, h = {:?}", f.f_vector(), f.h_vector());

    let s = |v: &[usize]| IndexSet::from_indices(v.iter().copied());
    let a = cone(&c, s(&[0]), s(&[1]))?;
    let b = cone(&c, s(&[0, 1]), IndexSet::EMPTY)?;
    let formula = intersect(&c, &a, &b);
    println!(
        "sigma_{{1}},{{2}} ∩ sigma_{{1,2}},{{}} = sigma_{},{}; oracle rays {:?}",
        formula.j,
        formula.k,
        intersect_oracle(&a, &b)?
    );

    let report = f.is_complete(2000, 7);
    println!("complete: {} ({} walls, {} samples)", report.pass, report.walls, report.samples);
    println!("primitive collections: {}", f.primitive_collections()?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
