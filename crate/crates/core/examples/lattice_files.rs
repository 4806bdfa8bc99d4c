// Reading and writing lattice files.

use std::error::Error;

use lattice_chow::catalog::{parse_lattice, serialize_lattice, BuildingSetSpec, LatticeFile};
use lattice_chow::BuildingSet;

const FY: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/fy.json"));

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let file = parse_lattice(FY)?;
    let lattice = file.lattice()?;
    let members = file.building_set.as_ref().ok_or("no building set")?.resolve(&lattice)?;
    let g = BuildingSet::new(&lattice, members)?;
    println!("{}: {} elements, building set {}", file.name, lattice.len(), g.labels().join(", "));

    let copy = LatticeFile::from_lattice("fy-maximal", &lattice, Some(BuildingSetSpec::Maximal));
    let text = serialize_lattice(&copy);
    assert_eq!(parse_lattice(&text)?, copy);
    print!("{text}");

    match parse_lattice(r#"{"name": "bad", "elements": ["0", "a"], "covers": [["0", "b"]]}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("accepted an unknown label".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
