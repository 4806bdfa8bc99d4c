//! Standard lattice families and the JSON lattice file format.
//!
//! A lattice file looks like
//!
//! ```json
//! {
//!   "name": "pi3",
//!   "elements": ["0", "12", "13", "23", "U"],
//!   "covers": [["0", "12"], ["0", "13"], ["0", "23"],
//!              ["12", "U"], ["13", "U"], ["23", "U"]],
//!   "building_set": "maximal"
//! }
//! ```
//!
//! The first element must be the least one. Element order fixes the atom
//! order and so the coordinates of ray vectors. `building_set` is optional
//! and is either a label list or one of `"minimal"`, `"maximal"`.

use serde::{Deserialize, Serialize};

use crate::building::{minimal_building_set, BuildingSet};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub const MAX_PARTITION_N: usize = 7;
pub const MAX_BOOLEAN_N: usize = 10;
pub const MAX_GENERIC_N: usize = 10;

fn digit(i: usize) -> char {
    char::from_digit(i as u32 + 1, 36).expect("small index")
}

fn subset_label(set: &[usize]) -> String {
    if set.is_empty() {
        "0".to_string()
    } else {
        set.iter().map(|&i| digit(i)).collect()
    }
}

/// The lattice of set partitions of `{1..n}` ordered by coarsening.
///
/// Labels list the non-singleton blocks, e.g. `12|34`; the finest partition
/// is `0` and, for `n >= 3`, the coarsest is `U`.
pub fn partition_lattice(n: usize) -> Result<Lattice> {
    if !(2..=MAX_PARTITION_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "partition lattice needs 2 <= n <= {MAX_PARTITION_N}, got {n}"
        )));
    }
    // Restricted growth strings: block[i] is the block of i.
    let mut partitions: Vec<Vec<usize>> = Vec::new();
    fn grow(current: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let next = current.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            current.push(b);
            grow(current, n, out);
            current.pop();
        }
    }
    grow(&mut Vec::new(), n, &mut partitions);

    let blocks_of = |p: &[usize]| -> Vec<Vec<usize>> {
        let count = p.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in p.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks
    };
    let label_of = |blocks: &[Vec<usize>]| -> String {
        if blocks.len() == 1 && n >= 3 {
            return "U".to_string();
        }
        let parts: Vec<String> = blocks
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| subset_label(b))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("|")
        }
    };

    let mut entries: Vec<(usize, String, Vec<Vec<usize>>)> = partitions
        .iter()
        .map(|p| {
            let blocks = blocks_of(p);
            (n - blocks.len(), label_of(&blocks), blocks)
        })
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

    let labels: Vec<String> = entries.iter().map(|e| e.1.clone()).collect();
    let mut covers = Vec::new();
    for (_, label, blocks) in &entries {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let mut merged: Vec<Vec<usize>> = blocks
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, b)| b.clone())
                    .collect();
                let mut union = blocks[i].clone();
                union.extend(&blocks[j]);
                union.sort_unstable();
                merged.push(union);
                merged.sort();
                covers.push((label.clone(), label_of(&merged)));
            }
        }
    }
    Lattice::from_covers(&labels, &covers)
}

/// Subsets of `{1..n}` ordered by inclusion. Labels are digit strings
/// (`a` stands for 10) and `0` for the empty set.
pub fn boolean_lattice(n: usize) -> Result<Lattice> {
    if !(1..=MAX_BOOLEAN_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "boolean lattice needs 1 <= n <= {MAX_BOOLEAN_N}, got {n}"
        )));
    }
    let subsets = subsets_by_size(n, n);
    let labels: Vec<String> = subsets.iter().map(|s| subset_label(s)).collect();
    let mut covers = Vec::new();
    for s in &subsets {
        for i in (0..n).filter(|i| !s.contains(i)) {
            let mut t = s.clone();
            t.push(i);
            t.sort_unstable();
            covers.push((subset_label(s), subset_label(&t)));
        }
    }
    Lattice::from_covers(&labels, &covers)
}

/// Subsets of `{0..n}` of size at most `max_size`, by size then
/// lexicographically.
fn subsets_by_size(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|s: &Vec<usize>| s.len() <= max_size)
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

/// The intersection lattice of `n` generic hyperplanes in an
/// `l`-dimensional space: subsets of size below `l` and a top element `U`.
pub fn generic_arrangement_lattice(n: usize, l: usize) -> Result<Lattice> {
    if !(2 <= l && l <= n && n <= MAX_GENERIC_N) {
        return Err(Error::InvalidParameters(format!(
            "generic arrangement needs 2 <= l <= n <= {MAX_GENERIC_N}, got n = {n}, l = {l}"
        )));
    }
    let subsets = subsets_by_size(n, l - 1);
    let mut labels: Vec<String> = subsets.iter().map(|s| subset_label(s)).collect();
    labels.push("U".to_string());
    let mut covers = Vec::new();
    for s in &subsets {
        if s.len() + 1 == l {
            covers.push((subset_label(s), "U".to_string()));
            continue;
        }
        for i in (0..n).filter(|i| !s.contains(i)) {
            let mut t = s.clone();
            t.push(i);
            t.sort_unstable();
            covers.push((subset_label(s), subset_label(&t)));
        }
    }
    Lattice::from_covers(&labels, &covers)
}

/// A seven-element lattice with atoms `A1, A2, A3`, `Y1 = A1 ∨ A2`,
/// `Y2 = A2 ∨ A3` and top `U = A1 ∨ A3`. It is graded but not geometric.
pub fn fy_example_lattice() -> Lattice {
    Lattice::from_covers(
        &["0", "A1", "A2", "A3", "Y1", "Y2", "U"],
        &[
            ("0", "A1"),
            ("0", "A2"),
            ("0", "A3"),
            ("A1", "Y1"),
            ("A2", "Y1"),
            ("A2", "Y2"),
            ("A3", "Y2"),
            ("Y1", "U"),
            ("Y2", "U"),
        ],
    )
    .expect("fixed example is a lattice")
}

/// Resolves a catalog spec: `pi:N`, `bool:N`, `generic:N,L` or `fy`.
/// Returns a name for the lattice alongside it.
pub fn catalog_lattice(spec: &str) -> Result<(String, Lattice)> {
    let bad = || Error::InvalidParameters(format!("unknown catalog spec `{spec}`"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (family, args) = spec.split_once(':').unwrap_or((spec, ""));
    let lattice = match family {
        "pi" => partition_lattice(number(args)?)?,
        "bool" => boolean_lattice(number(args)?)?,
        "generic" => {
            let (n, l) = args.split_once(',').ok_or_else(bad)?;
            generic_arrangement_lattice(number(n)?, number(l)?)?
        }
        "fy" if args.is_empty() => fy_example_lattice(),
        _ => return Err(bad()),
    };
    Ok((spec.replace([':', ','], "_"), lattice))
}

/// Building set choice stored in a lattice file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSelector", into = "RawSelector")]
pub enum BuildingSetSpec {
    Minimal,
    Maximal,
    Explicit(Vec<String>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawSelector {
    Keyword(String),
    List(Vec<String>),
}

impl TryFrom<RawSelector> for BuildingSetSpec {
    type Error = String;

    fn try_from(raw: RawSelector) -> std::result::Result<Self, String> {
        match raw {
            RawSelector::Keyword(k) => match k.as_str() {
                "minimal" => Ok(BuildingSetSpec::Minimal),
                "maximal" => Ok(BuildingSetSpec::Maximal),
                _ => Err(format!("unknown building set keyword `{k}`")),
            },
            RawSelector::List(labels) => Ok(BuildingSetSpec::Explicit(labels)),
        }
    }
}

impl From<BuildingSetSpec> for RawSelector {
    fn from(spec: BuildingSetSpec) -> Self {
        match spec {
            BuildingSetSpec::Minimal => RawSelector::Keyword("minimal".into()),
            BuildingSetSpec::Maximal => RawSelector::Keyword("maximal".into()),
            BuildingSetSpec::Explicit(labels) => RawSelector::List(labels),
        }
    }
}

impl std::str::FromStr for BuildingSetSpec {
    type Err = String;

    /// `minimal`, `maximal`, or a comma-separated label list.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minimal" => Ok(BuildingSetSpec::Minimal),
            "maximal" => Ok(BuildingSetSpec::Maximal),
            "" => Err("building set must be `minimal`, `maximal` or a label list".into()),
            _ => Ok(BuildingSetSpec::Explicit(
                s.split(',').map(|l| l.trim().to_string()).collect(),
            )),
        }
    }
}

impl BuildingSetSpec {
    /// Member indices in `lattice`, validated.
    pub fn resolve(&self, lattice: &Lattice) -> Result<Vec<usize>> {
        let building = match self {
            BuildingSetSpec::Minimal => return minimal_building_set(lattice),
            BuildingSetSpec::Maximal => BuildingSet::maximal(lattice)?,
            BuildingSetSpec::Explicit(labels) => BuildingSet::from_labels(lattice, labels)?,
        };
        Ok(building.members().to_vec())
    }

    pub fn building_set<'a>(&self, lattice: &'a Lattice) -> Result<BuildingSet<'a>> {
        BuildingSet::new(lattice, self.resolve(lattice)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub building_set: Option<BuildingSetSpec>,
}

impl LatticeFile {
    /// Describes `lattice` by its cover relation, bottom first.
    pub fn from_lattice(
        name: impl Into<String>,
        lattice: &Lattice,
        building_set: Option<BuildingSetSpec>,
    ) -> LatticeFile {
        let bottom = lattice.bottom();
        let elements = std::iter::once(bottom)
            .chain(lattice.elements().filter(|&x| x != bottom))
            .map(|x| lattice.label(x).to_string())
            .collect();
        let covers = lattice
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| (lattice.label(a).to_string(), lattice.label(b).to_string()))
            .collect();
        LatticeFile {
            name: name.into(),
            elements,
            covers,
            building_set,
        }
    }

    pub fn lattice(&self) -> Result<Lattice> {
        let lattice = Lattice::from_covers(&self.elements, &self.covers)?;
        if lattice.bottom() != 0 {
            return Err(Error::Validation(format!(
                "first element `{}` is not the least element `{}`",
                self.elements[0],
                lattice.label(lattice.bottom())
            )));
        }
        Ok(lattice)
    }

    /// Checks the lattice and, if present, the building set.
    pub fn validate(&self) -> Result<Lattice> {
        let lattice = self.lattice()?;
        if let Some(spec) = &self.building_set {
            spec.resolve(&lattice)?;
        }
        Ok(lattice)
    }
}

/// Parses and validates a lattice file.
pub fn parse_lattice(text: &str) -> Result<LatticeFile> {
    let file: LatticeFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()?;
    Ok(file)
}

pub fn serialize_lattice(file: &LatticeFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("plain data serializes");
    text.push('\n');
    text
}
