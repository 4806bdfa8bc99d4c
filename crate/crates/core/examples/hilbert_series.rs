// Hilbert series by enumeration and by closed formulas.

use std::error::Error;

use lattice_chow::algebra::hilbert_series_enumerated;
use lattice_chow::catalog::{fy_example_lattice, generic_arrangement_lattice, partition_lattice};
use lattice_chow::hilbert::{hilbert_generic_closed, hilbert_maximal_closed, hilbert_partition_closed};
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 2..=5 {
        let l = partition_lattice(n)?;
        let enumerated = hilbert_series_enumerated(&BuildingSet::maximal(&l)?)?;
        let closed = hilbert_partition_closed(n)?;
        println!("Pi_{n}: {closed}");
        assert_eq!(enumerated, closed);
    }

    let l = generic_arrangement_lattice(5, 3)?;
    let closed = hilbert_generic_closed(5, 3)?;
    assert_eq!(closed, hilbert_series_enumerated(&BuildingSet::maximal(&l)?)?);
    println!("generic (5,3): {closed}");

    // Here the atom distance from bottom to top is smaller than the rank,
    // and the rank-based formula overcounts.
    let fy = fy_example_lattice();
    let enumerated = hilbert_series_enumerated(&BuildingSet::maximal(&fy)?)?;
    let closed = hilbert_maximal_closed(&fy)?;
    println!("fy: enumerated {enumerated}, rank formula {closed}");
    assert_ne!(enumerated, closed);

    let minimal = hilbert_series_enumerated(&BuildingSet::minimal(&partition_lattice(4)?)?)?;
    println!("Pi_4 minimal: {minimal}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
