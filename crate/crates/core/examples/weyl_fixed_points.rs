//! Weyl groups, longest elements of parabolic subgroups and the partition
//! of fixed points by the zero loci of the sections.

use cartan_toric::weyl::{generate_weyl_group, longest_element, star_involution, zero_locus_partition};
use cartan_toric::{CartanMatrix, IndexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for t in ["A2", "B2", "G2", "A3", "B3", "D4"] {
        let c = CartanMatrix::parse(t)?;
        println!("|W({t})| = {}", generate_weyl_group(&c)?.len());
    }
    let c = CartanMatrix::parse("A3")?;
    for j in IndexSet::all_subsets(3) {
        let w = longest_element(&c, j);
        println!("w_{j}: length {}, word {:?}", w.length, w.word_one_based());
    }
    println!("i -> i*: {:?}", star_involution(&c));
    let p = zero_locus_partition(&c, 1)?;
    println!("i=2: setA {:?}\n     setB {:?}", p.set_a, p.set_b);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
