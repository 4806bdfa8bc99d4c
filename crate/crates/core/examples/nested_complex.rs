// The nested set complex of the minimal building set of the partition
// lattice of a four-element set.

use std::error::Error;

use lattice_chow::catalog::partition_lattice;
use lattice_chow::nested::{is_nested, minimal_non_nested, NestedComplex};
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = partition_lattice(4)?;
    let g = BuildingSet::minimal(&l)?;
    let complex = NestedComplex::new(&g);
    println!("face counts by size: {:?}", complex.face_counts());
    println!("dimension {}", complex.dimension());

    let ids = |labels: &[&str]| -> Result<Vec<usize>, lattice_chow::Error> {
        labels.iter().map(|s| l.index_of(s)).collect()
    };
    assert!(is_nested(&g, &ids(&["12", "34"])?)?);
    assert!(!is_nested(&g, &ids(&["12", "13"])?)?);

    for facet in complex.facets().iter().take(3) {
        println!("facet {{{}}}", l.labels_of(facet).join(", "));
    }
    let obstructions = minimal_non_nested(&g);
    println!("{} minimal non-nested sets", obstructions.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
