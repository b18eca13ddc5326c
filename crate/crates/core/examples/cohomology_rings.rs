//! Both presentations of the cohomology ring, their graded dimensions and the
//! degree-two dictionary.

use cartan_toric::cohomology::{
    degree2_dictionary, eliminate_y, poincare_polynomial, presentation_x, presentation_xy,
    solve_mn_constants,
};
use cartan_toric::fan::FanSigma;
use cartan_toric::CartanMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = CartanMatrix::parse("B3")?;
    let rxy = presentation_xy(&c);
    let rx = presentation_x(&c);
    println!("relations in X:");
    for r in &rx.relations {
        println!("  {}", rx.show(r));
    }
    let p = poincare_polynomial(&rx, 3);
    println!("dims {:?}, routes agree {}", &p.linear[..4], p.routes_agree);
    println!("eliminating Y: {:?}", eliminate_y(&c, &rxy, &rx).pass);

    let f = FanSigma::new(&c);
    for i in 0..3 {
        let (m, n) = solve_mn_constants(&f, i)?;
        println!("i={}: (m, n) = ({m}, {n})", i + 1);
    }
    for d in degree2_dictionary(&c, &rxy)? {
        println!("{} = {:?} over X  (agrees: {})", d.y_aliases.join(" = "), d.toric, d.agree);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
