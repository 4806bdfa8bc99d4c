// Linear relations of the toric Chow ring, checked inside D(L,G).

use std::error::Error;

use lattice_chow::algebra::GroebnerBasis;
use lattice_chow::catalog::boolean_lattice;
use lattice_chow::chow::{chow_relations, verify_chow_iso_with};
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = boolean_lattice(3)?;
    let g = BuildingSet::maximal(&l)?;
    let gb = GroebnerBasis::new(&g)?;
    let order = gb.order();

    let base = [l.index_of("1")?];
    for relation in chow_relations(&g, &base, order)? {
        let reduced = gb.normal_form(&relation.polynomial);
        println!("dual {:?}: {} reduces to {}", relation.dual, order.render(&relation.polynomial), order.render(&reduced));
        assert!(reduced.is_zero());
    }
    assert!(verify_chow_iso_with(&g, &gb)?);
    println!("every relation vanishes");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
