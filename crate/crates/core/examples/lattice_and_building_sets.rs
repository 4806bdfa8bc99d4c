// Builds the partition lattice of a four-element set and lists its
// building sets.

use std::error::Error;

use lattice_chow::building::{all_building_sets, is_building_set};
use lattice_chow::catalog::partition_lattice;
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = partition_lattice(4)?;
    println!("{} elements, {} atoms", l.len(), l.atoms().len());

    let x = l.index_of("12|34")?;
    let y = l.index_of("123")?;
    println!("12|34 v 123 = {}", l.label(l.join(x, y)));
    println!("12|34 ^ 123 = {}", l.label(l.meet(x, y)));
    println!("d(0, U) = {}", l.atom_distance(l.bottom(), l.top())?);

    let minimal = BuildingSet::minimal(&l)?;
    println!("minimal building set: {}", minimal.labels().join(", "));
    let factors = minimal.factors(x)?;
    println!("factors of 12|34: {}", l.labels_of(&factors).join(", "));

    let without_top: Vec<usize> = minimal.members().iter().copied().filter(|&m| m != l.top()).collect();
    assert!(!is_building_set(&l, &without_top)?);

    let b3 = lattice_chow::catalog::boolean_lattice(3)?;
    let sets = all_building_sets(&b3)?;
    println!("the boolean lattice B3 has {} building sets", sets.len());
    assert_eq!(sets.len(), 12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
