// The fan of nested sets, built directly and by stellar subdivision.

use std::error::Error;

use lattice_chow::catalog::partition_lattice;
use lattice_chow::fan::{
    check_fan, default_theta_order, fans_equal, is_unimodular, sigma_fan, theta_fan_steps,
};
use lattice_chow::BuildingSet;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let l = partition_lattice(4)?;
    let g = BuildingSet::minimal(&l)?;

    let sigma = sigma_fan(&g)?;
    println!("direct: {} maximal cones in dimension {}", sigma.maximal_cones().len(), sigma.dim());
    assert!(is_unimodular(&sigma));

    let order = default_theta_order(&g);
    println!("subdivision order: {}", l.labels_of(&order).join(", "));
    let steps = theta_fan_steps(&g, &order)?;
    for (i, step) in steps.iter().enumerate() {
        println!("stage {i}: {} maximal cones", step.maximal_cones().len());
    }
    let theta = steps.last().ok_or("no stages")?;
    assert!(check_fan(theta));
    assert!(fans_equal(theta, &sigma));

    println!("{}", serde_json::to_string(&sigma.to_record())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
