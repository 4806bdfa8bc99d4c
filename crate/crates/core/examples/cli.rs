// Drives the command line interface in process.

use std::error::Error;

use lattice_chow::cli::run;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for args in [
        vec!["validate", "pi:4"],
        vec!["hilbert", "pi:4", "--building-set", "maximal"],
        vec!["hilbert", "generic:5,3", "-b", "maximal", "--method", "closed"],
        vec!["normal-form", "pi:4", "x[123]^2"],
        vec!["fan", "pi:3", "-b", "maximal", "--equal"],
        vec!["chow", "bool:3", "-b", "maximal", "--verify"],
    ] {
        let out = run(std::iter::once("lattice-chow").chain(args.iter().copied()));
        println!("$ lattice-chow {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        if out.code != 0 {
            return Err(format!("exit code {}", out.code).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
