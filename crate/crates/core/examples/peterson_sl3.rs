//! The Peterson cell of SL3: exact samples, Ψ, Kostant's formula, the
//! Jacobian witness and the images of the fixed points.

use cartan_toric::linalg::q;
use cartan_toric::peterson::{
    equivariance_check, fixed_point_image_check, jacobian_rank_check, kostant_check, psi,
    sample_peterson_cell,
};
use cartan_toric::IndexSet;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for s in sample_peterson_cell(2, 5, 42)? {
        let p = psi(&s.point)?;
        let k = kostant_check(&s.point);
        println!(
            "(a, c) = ({}, {}): Psi = [{}, {}; {}, {}], Kostant {}",
            s.params[0],
            s.params[1],
            p.x[0],
            p.x[1],
            p.y[0],
            p.y[1],
            if k.skipped { "skipped" } else if k.pass { "ok" } else { "FAILED" }
        );
        let e = equivariance_check(&q(3), &s.point)?;
        assert!(e.pass);
    }
    let j = jacobian_rank_check(2, 10, 1)?;
    println!("Jacobian rank {} at {:?}", j.rank, j.witness);
    for set in IndexSet::all_subsets(2) {
        let r = fixed_point_image_check(2, set)?;
        println!("Psi(w_{set}) has the pattern of p_{set}: {}", r.pattern_ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
