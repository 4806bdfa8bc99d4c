//! The `lattice-chow` command line.
//!
//! [`run`] parses arguments and returns the exit code with both output
//! streams, so the binary is a thin wrapper and tests can call it directly.
//! Exit codes: 0 success, 1 a verification reported failure, 2 bad input or
//! usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    defining_generators, hilbert_series_enumerated, is_groebner, monomial_basis, GroebnerBasis,
    Origin,
};
use crate::building::{all_building_sets, BuildingSet};
use crate::catalog::{catalog_lattice, parse_lattice, BuildingSetSpec};
use crate::chow::{chow_relations, verify_chow_iso_with};
use crate::error::{Error, Result};
use crate::fan::{
    default_theta_order, fans_equal, is_unimodular, sigma_fan, theta_fan, Fan,
};
use crate::hilbert::{hilbert_generic_closed, hilbert_maximal_closed, hilbert_partition_closed};
use crate::lattice::Lattice;
use crate::nested::NestedComplex;
use crate::poly::VariableOrder;

#[derive(Debug, Parser)]
#[command(
    name = "lattice-chow",
    version,
    about = "Nested set complexes, the algebra D(L,G) and toric fans of atomic lattices"
)]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Lattice file, or a catalog spec: pi:N, bool:N, generic:N,L, fy.
    pub input: String,
    /// minimal, maximal, file, or a comma-separated label list. Defaults to
    /// the file's choice, else minimal.
    #[arg(long, short = 'b')]
    pub building_set: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Direct,
    Stellar,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the lattice and the building set.
    Validate(Common),
    /// List every building set.
    BuildingSets(Common),
    /// Faces of the nested set complex.
    Nested(Common),
    /// The monomial basis of D(L,G).
    Basis(Common),
    /// The Hilbert series of D(L,G).
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Enum)]
        method: Method,
    },
    /// The Gröbner basis of D(L,G).
    Groebner {
        #[command(flatten)]
        common: Common,
        /// Verify Buchberger's criterion.
        #[arg(long)]
        check: bool,
        /// Print the generators (the default without --check).
        #[arg(long)]
        show: bool,
        /// Use the defining presentation instead of the Gröbner generators.
        #[arg(long)]
        defining: bool,
    },
    /// Reduce a polynomial such as "x[12]*x[U] + 2*x[U]^2".
    NormalForm {
        #[command(flatten)]
        common: Common,
        polynomial: String,
    },
    /// The fan of nested sets.
    Fan {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Construction::Direct)]
        construction: Construction,
        /// Subdivision order for the stellar construction, comma-separated.
        #[arg(long)]
        order: Option<String>,
        /// Check that every cone is unimodular.
        #[arg(long)]
        unimodular: bool,
        /// Compare the direct and stellar constructions.
        #[arg(long)]
        equal: bool,
    },
    /// Linear relations of the toric Chow ring.
    Chow {
        #[command(flatten)]
        common: Common,
        /// Check that every relation vanishes in D(L,G).
        #[arg(long)]
        verify: bool,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Validate(c) | Command::BuildingSets(c) | Command::Nested(c) | Command::Basis(c) => c,
            Command::Hilbert { common, .. }
            | Command::Groebner { common, .. }
            | Command::NormalForm { common, .. }
            | Command::Fan { common, .. }
            | Command::Chow { common, .. } => common,
        }
    }
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(request) => execute(&request),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Executes an already parsed request.
pub fn execute(request: &CommandRequest) -> Outcome {
    match dispatch(&request.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Input {
    name: String,
    lattice: Lattice,
    file_choice: Option<BuildingSetSpec>,
    family: Family,
}

enum Family {
    Partition(usize),
    Generic(usize, usize),
    Other,
}

fn load(input: &str) -> Result<Input> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::Validation(format!("cannot read `{input}`: {e}")))?;
        let file = parse_lattice(&text)?;
        let lattice = file.lattice()?;
        return Ok(Input {
            name: file.name,
            lattice,
            file_choice: file.building_set,
            family: Family::Other,
        });
    }
    let (name, lattice) = catalog_lattice(input).map_err(|e| match e {
        Error::InvalidParameters(_) if !input.contains(':') && input != "fy" => {
            Error::Validation(format!("`{input}` is neither a file nor a catalog spec"))
        }
        other => other,
    })?;
    let family = match input.split_once(':') {
        Some(("pi", n)) => Family::Partition(n.trim().parse().unwrap_or(0)),
        Some(("generic", args)) => {
            let (n, l) = args.split_once(',').unwrap_or(("0", "0"));
            Family::Generic(n.trim().parse().unwrap_or(0), l.trim().parse().unwrap_or(0))
        }
        _ => Family::Other,
    };
    Ok(Input {
        name,
        lattice,
        file_choice: None,
        family,
    })
}

fn selector(common: &Common, input: &Input) -> Result<BuildingSetSpec> {
    match common.building_set.as_deref() {
        None => Ok(input.file_choice.clone().unwrap_or(BuildingSetSpec::Minimal)),
        Some("file") => input.file_choice.clone().ok_or_else(|| {
            Error::Validation(format!("`{}` does not choose a building set", input.name))
        }),
        Some(s) => s.parse().map_err(Error::Validation),
    }
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn machine<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn verdict(format: Format, key: &str, ok: bool, yes: &str, no: &str) -> (i32, String) {
    let code = if ok { 0 } else { 1 };
    match format {
        Format::Text => (code, format!("{}\n", if ok { yes } else { no })),
        Format::Machine => (code, machine(&json!({ key: ok }))),
    }
}

fn fan_text(fan: &Fan) -> String {
    let mut out = String::from("rays:\n");
    let mut rays: Vec<_> = fan.rays().iter().collect();
    rays.sort_by(|a, b| a.label.cmp(&b.label));
    for r in rays {
        let coords: Vec<String> = r.vector.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "  {} ({})", r.label, coords.join(","));
    }
    out.push_str("maximal cones:\n");
    for c in fan.maximal_cone_labels() {
        let _ = writeln!(out, "  {}", braces(&c));
    }
    out
}

fn parse_order(building: &BuildingSet<'_>, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|l| building.lattice().index_of(l.trim()))
        .collect()
}

fn dispatch(command: &Command) -> Result<(i32, String)> {
    let common = command.common();
    let format = common.format;
    let input = load(&common.input)?;
    let lattice = &input.lattice;

    if let Command::BuildingSets(_) = command {
        let sets = all_building_sets(lattice)?;
        let labelled: Vec<Vec<String>> = sets.iter().map(|s| lattice.labels_of(s)).collect();
        return Ok(match format {
            Format::Text => (
                0,
                labelled.iter().map(|s| braces(s) + "\n").collect::<String>(),
            ),
            Format::Machine => (0, machine(&labelled)),
        });
    }

    lattice.require_atomic()?;
    let spec = selector(common, &input)?;
    let building = spec.building_set(lattice)?;

    match command {
        Command::Validate(_) => {
            let members = building.labels();
            Ok(match format {
                Format::Text => (
                    0,
                    format!(
                        "lattice {}: {} elements, {} atoms, atomic\nbuilding set: {}\nOK\n",
                        input.name,
                        lattice.len(),
                        lattice.atoms().len(),
                        braces(&members)
                    ),
                ),
                Format::Machine => (
                    0,
                    machine(&json!({
                        "name": input.name,
                        "elements": lattice.len(),
                        "atoms": lattice.labels_of(lattice.atoms()),
                        "building_set": members,
                        "valid": true,
                    })),
                ),
            })
        }
        Command::BuildingSets(_) => unreachable!("handled above"),
        Command::Nested(_) => {
            let complex = NestedComplex::new(&building);
            let faces: Vec<Vec<String>> =
                complex.faces().iter().map(|f| lattice.labels_of(f)).collect();
            let facets: Vec<Vec<String>> =
                complex.facets().iter().map(|f| lattice.labels_of(f)).collect();
            Ok(match format {
                Format::Text => {
                    let counts: Vec<String> =
                        complex.face_counts().iter().map(usize::to_string).collect();
                    let mut out = format!("face counts by size: {}\n", counts.join(" "));
                    for f in &faces {
                        let _ = writeln!(out, "{}", braces(f));
                    }
                    (0, out)
                }
                Format::Machine => (
                    0,
                    machine(&json!({
                        "face_counts": complex.face_counts(),
                        "faces": faces,
                        "facets": facets,
                    })),
                ),
            })
        }
        Command::Basis(_) => {
            let order = VariableOrder::new(&building);
            let basis = monomial_basis(&building, &order)?;
            Ok(match format {
                Format::Text => (
                    0,
                    basis
                        .iter()
                        .map(|m| order.render_monomial(m) + "\n")
                        .collect(),
                ),
                Format::Machine => (
                    0,
                    machine(&basis.iter().map(|m| order.monomial_to_machine(m)).collect::<Vec<_>>()),
                ),
            })
        }
        Command::Hilbert { method, .. } => {
            let series = match method {
                Method::Enum => hilbert_series_enumerated(&building)?,
                Method::Closed => {
                    if building.len() + 1 != lattice.len() {
                        return Err(Error::InvalidParameters(
                            "the closed form needs the maximal building set".into(),
                        ));
                    }
                    match input.family {
                        Family::Partition(n) => hilbert_partition_closed(n)?,
                        Family::Generic(n, l) => hilbert_generic_closed(n, l)?,
                        Family::Other => hilbert_maximal_closed(lattice)?,
                    }
                }
            };
            Ok(match format {
                Format::Text => (0, format!("{series}\n")),
                Format::Machine => (0, machine(&series)),
            })
        }
        Command::Groebner {
            check,
            show,
            defining,
            ..
        } => {
            let gb = GroebnerBasis::new(&building)?;
            let order = gb.order();
            let polys = if *defining {
                defining_generators(&building, order)?
            } else {
                gb.polynomials()
            };
            let mut out = String::new();
            let mut code = 0;
            if *show || !*check {
                match format {
                    Format::Text => {
                        for p in &polys {
                            let _ = writeln!(out, "{}", order.render(p));
                        }
                    }
                    Format::Machine => {
                        let entries: Vec<Value> = if *defining {
                            polys.iter().map(|p| json!({ "polynomial": order.to_machine(p) })).collect()
                        } else {
                            gb.elements()
                                .iter()
                                .map(|e| {
                                    json!({
                                        "polynomial": order.to_machine(&e.polynomial),
                                        "origin": origin_json(lattice, &e.origin),
                                    })
                                })
                                .collect()
                        };
                        out.push_str(&machine(&entries));
                    }
                }
            }
            if *check {
                let ok = is_groebner(&polys)?;
                let (c, text) = verdict(format, "groebner", ok, "GROEBNER", "NOT GROEBNER");
                code = c;
                out.push_str(&text);
            }
            Ok((code, out))
        }
        Command::NormalForm { polynomial, .. } => {
            let gb = GroebnerBasis::new(&building)?;
            let order = gb.order();
            let p = match format {
                Format::Text => order.parse(polynomial)?,
                Format::Machine => {
                    let value: Value = serde_json::from_str(polynomial).map_err(|e| Error::Syntax {
                        line: e.line(),
                        column: e.column(),
                        message: e.to_string(),
                    })?;
                    order.from_machine(&value)?
                }
            };
            let nf = gb.normal_form(&p);
            Ok(match format {
                Format::Text => (0, format!("{}\n", order.render(&nf))),
                Format::Machine => (0, machine(&order.to_machine(&nf))),
            })
        }
        Command::Fan {
            construction,
            order,
            unimodular,
            equal,
            ..
        } => {
            let theta_order = match order {
                Some(text) => parse_order(&building, text)?,
                None => default_theta_order(&building),
            };
            if *equal {
                let direct = sigma_fan(&building)?;
                let stellar = theta_fan(&building, &theta_order)?;
                let ok = fans_equal(&direct, &stellar);
                return Ok(verdict(format, "equal", ok, "EQUAL", "NOT EQUAL"));
            }
            let fan = match construction {
                Construction::Direct => sigma_fan(&building)?,
                Construction::Stellar => theta_fan(&building, &theta_order)?,
            };
            if *unimodular {
                let ok = is_unimodular(&fan);
                return Ok(verdict(format, "unimodular", ok, "UNIMODULAR", "NOT UNIMODULAR"));
            }
            Ok(match format {
                Format::Text => (0, fan_text(&fan)),
                Format::Machine => (0, machine(&fan.to_record())),
            })
        }
        Command::Chow { verify, .. } => {
            let gb = GroebnerBasis::new(&building)?;
            if *verify {
                let ok = verify_chow_iso_with(&building, &gb)?;
                return Ok(verdict(format, "verified", ok, "VERIFIED", "FAILED"));
            }
            let order = gb.order();
            let complex = NestedComplex::new(&building);
            let mut text = String::new();
            let mut entries = Vec::new();
            for face in complex.faces() {
                for r in chow_relations(&building, face, order)? {
                    let base = lattice.labels_of(&r.base);
                    let _ = writeln!(
                        text,
                        "{} {:?}: {}",
                        braces(&base),
                        r.dual,
                        order.render(&r.polynomial)
                    );
                    entries.push(json!({
                        "base": base,
                        "dual": r.dual,
                        "polynomial": order.to_machine(&r.polynomial),
                    }));
                }
            }
            Ok(match format {
                Format::Text => (0, text),
                Format::Machine => (0, machine(&entries)),
            })
        }
    }
}

fn origin_json(lattice: &Lattice, origin: &Origin) -> Value {
    match origin {
        Origin::NonNested { set } => json!({ "non_nested": lattice.labels_of(set) }),
        Origin::Linear {
            antichain,
            upper,
            exponent,
        } => json!({
            "antichain": lattice.labels_of(antichain),
            "upper": lattice.label(*upper),
            "exponent": exponent,
        }),
    }
}
