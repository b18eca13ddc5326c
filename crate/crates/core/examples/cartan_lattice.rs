//! Cartan matrices, dual pairings and the Cox exact sequence.

use cartan_toric::cartan::verify_cox_sequence;
use cartan_toric::{Basis, CartanMatrix, IndexSet, LatticeVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g2 = CartanMatrix::parse("G2")?;
    println!("G2 = {:?}, det {}", g2.entries(), g2.det());

    let (inv, nonneg) = CartanMatrix::parse("B2")?.inverse_nonneg()?;
    println!("B2^-1 = {inv:?} (nonnegative: {nonneg})");

    let a3 = CartanMatrix::parse("A3")?;
    let sub = a3.subdiagram(IndexSet::from_indices([0, 2]));
    println!("A3 restricted to {{1,3}} = {:?}", sub.entries());

    // <alpha_1, alpha_2^vee> through the basis conversions
    let a2 = CartanMatrix::parse("A2")?;
    let alpha1 = LatticeVector::unit(2, 0, Basis::SimpleRoot);
    let coroot2 = LatticeVector::unit(2, 1, Basis::SimpleCoroot);
    println!("<alpha1, alpha2^vee> = {}", a2.pair(&alpha1, &coroot2)?);
    let v = a2.coroot_in_coweight_coords(0)?;
    println!("alpha1^vee in coweights = {:?}", v.coords.iter().map(ToString::to_string).collect::<Vec<_>>());

    for t in ["A1", "A1,A1", "B3", "D4", "E6"] {
        let r = verify_cox_sequence(&CartanMatrix::parse(t)?);
        println!("{t:6} Cox sequence exact: {} divisors {:?}", r.pass, r.divisors_first);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
