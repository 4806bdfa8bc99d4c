// Gröbner basis, normal forms and the monomial basis of D(L,G).

use std::error::Error;

use lattice_chow::algebra::{defining_generators, is_groebner, monomial_basis, GroebnerBasis};
use lattice_chow::catalog::partition_lattice;
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = partition_lattice(4)?;
    let g = BuildingSet::minimal(&l)?;
    let gb = GroebnerBasis::new(&g)?;
    let order = gb.order();
    println!("{} Gröbner generators", gb.len());
    assert!(gb.is_groebner());

    // The defining presentation generates the same ideal but is not itself
    // a Gröbner basis.
    let defining = defining_generators(&g, order)?;
    assert!(!is_groebner(&defining)?);

    let p = order.parse("x[123]^2 + 2*x[12]*x[U]")?;
    let nf = gb.normal_form(&p);
    println!("NF({}) = {}", order.render(&p), order.render(&nf));

    let basis = monomial_basis(&g, order)?;
    let rendered: Vec<String> = basis.iter().map(|m| order.render_monomial(m)).collect();
    println!("basis: {}", rendered.join(", "));
    assert_eq!(basis.len(), 7);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
