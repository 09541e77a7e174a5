//! JSON file formats for lattices, preorders and rules.
//!
//! ```text
//! lattice   {"names": ["0","x","y","1"], "covers": [["0","x"], ...]}
//! preorder  [["x"], ["1"], ["0","y"]]
//! rule      {"kind": "committee", "n": 3, "terms": [{"coalition": [1,2], "constant": "1"}, ...]}
//!           {"kind": "explicit", "ballot_spaces": [["0","1"], ...], "table": ["0", ...]}
//!           {"kind": "tree", "n": 2, "corners": ["0","y","x","1"]}
//! ```
//!
//! Voters in committee coalitions are numbered from 1. Tables are row-major
//! with voter 1 most significant. Tree rules are stored by their corner values
//! and read back as the canonical nested median.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::FormatError;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::TotalPreorder;
use crate::rules::{CommitteeRule, ExplicitRule, MedianTree, Rule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub names: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coalition: Vec<usize>,
    pub constant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RuleFile {
    Committee { n: usize, terms: Vec<TermFile> },
    Explicit { ballot_spaces: Vec<Vec<String>>, table: Vec<String> },
    Tree { n: usize, corners: Vec<String> },
}

/// Names in canonical order, covers sorted by that order.
pub fn lattice_file(l: &Lattice) -> LatticeFile {
    let order = l.canonical_order();
    let mut pos = vec![0; l.size()];
    for (i, x) in order.iter().enumerate() {
        pos[x.index()] = i;
    }
    let mut covers = l.covers().to_vec();
    covers.sort_by_key(|&(a, b)| (pos[a.index()], pos[b.index()]));
    LatticeFile {
        names: order.iter().map(|&x| l.name(x).to_string()).collect(),
        covers: covers.iter().map(|&(a, b)| (l.name(a).to_string(), l.name(b).to_string())).collect(),
    }
}

/// Element ids follow the order of `names`.
pub fn lattice_from_file(f: &LatticeFile) -> Result<Lattice, FormatError> {
    Ok(Lattice::from_covers(&f.names, &f.covers)?)
}

/// One cover per line.
pub fn lattice_to_json(l: &Lattice) -> String {
    let f = lattice_file(l);
    let line = |v: Value| v.to_string();
    let covers: Vec<String> = f.covers.iter().map(|(a, b)| format!("    {}", line(serde_json::json!([a, b])))).collect();
    format!("{{\n  \"names\": {},\n  \"covers\": [\n{}\n  ]\n}}\n", line(serde_json::json!(f.names)), covers.join(",\n"))
}

pub fn parse_lattice(s: &str) -> Result<Lattice, FormatError> {
    lattice_from_file(&serde_json::from_str(s)?)
}

fn element(l: &Lattice, field: &str, name: &str) -> Result<ElementId, FormatError> {
    l.id(name).ok_or_else(|| FormatError::field(field, format!("unknown element `{name}`")))
}

pub fn preorder_to_value(l: &Lattice, p: &TotalPreorder) -> Value {
    serde_json::to_value(p.named_classes(l)).expect("plain data")
}

pub fn parse_preorder(s: &str, l: &Lattice) -> Result<TotalPreorder, FormatError> {
    let classes: Vec<Vec<String>> = serde_json::from_str(s)?;
    Ok(TotalPreorder::from_named_classes(&classes, l)?)
}

/// A single preorder or a list of them, one per voter.
pub fn parse_preorders(s: &str, l: &Lattice) -> Result<Vec<TotalPreorder>, FormatError> {
    let v: Value = serde_json::from_str(s)?;
    let nested = v
        .as_array()
        .and_then(|a| a.first())
        .and_then(|c| c.as_array())
        .and_then(|c| c.first())
        .is_some_and(|x| x.is_array());
    if nested {
        let all: Vec<Vec<Vec<String>>> = serde_json::from_value(v)?;
        all.iter()
            .map(|c| Ok(TotalPreorder::from_named_classes(c, l)?))
            .collect()
    } else {
        let one: Vec<Vec<String>> = serde_json::from_value(v)?;
        Ok(vec![TotalPreorder::from_named_classes(&one, l)?])
    }
}

pub fn rule_file(l: &Lattice, rule: &Rule) -> Result<RuleFile, FormatError> {
    let name = |x: ElementId| l.name(x).to_string();
    Ok(match rule {
        Rule::Committee(c) => RuleFile::Committee {
            n: c.voters(),
            terms: c
                .terms()
                .iter()
                .map(|&(s, y)| TermFile {
                    coalition: (0..c.voters()).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect(),
                    constant: name(y),
                })
                .collect(),
        },
        Rule::Explicit(e) => RuleFile::Explicit {
            ballot_spaces: e.spaces().iter().map(|s| s.iter().map(|&x| name(x)).collect()).collect(),
            table: e.table().iter().map(|&x| name(x)).collect(),
        },
        Rule::Tree(t) => RuleFile::Tree { n: t.voters(), corners: t.corners(l)?.into_iter().map(name).collect() },
    })
}

pub fn rule_from_file(l: &Lattice, f: &RuleFile) -> Result<Rule, FormatError> {
    Ok(match f {
        RuleFile::Committee { n, terms } => {
            let mut out = Vec::with_capacity(terms.len());
            for (k, t) in terms.iter().enumerate() {
                let mut s = 0u64;
                for &v in &t.coalition {
                    if v == 0 {
                        return Err(FormatError::field(format!("terms[{k}].coalition"), "voters are numbered from 1"));
                    }
                    if v > 63 {
                        return Err(crate::error::RuleError::ArityMismatch { expected: *n, got: v }.into());
                    }
                    s |= 1 << (v - 1);
                }
                out.push((s, element(l, &format!("terms[{k}].constant"), &t.constant)?));
            }
            Rule::Committee(CommitteeRule::new(*n, out)?)
        }
        RuleFile::Explicit { ballot_spaces, table } => {
            let spaces = ballot_spaces
                .iter()
                .enumerate()
                .map(|(i, s)| s.iter().map(|x| element(l, &format!("ballot_spaces[{i}]"), x)).collect())
                .collect::<Result<Vec<Vec<_>>, _>>()?;
            let table = table
                .iter()
                .enumerate()
                .map(|(k, x)| element(l, &format!("table[{k}]"), x))
                .collect::<Result<Vec<_>, _>>()?;
            Rule::Explicit(ExplicitRule::new(l, spaces, table)?)
        }
        RuleFile::Tree { n, corners } => {
            if *n > 20 || corners.len() != 1 << n {
                return Err(FormatError::field("corners", format!("expected 2^{n} values, got {}", corners.len())));
            }
            let c = corners
                .iter()
                .enumerate()
                .map(|(k, x)| element(l, &format!("corners[{k}]"), x))
                .collect::<Result<Vec<_>, _>>()?;
            Rule::Tree(MedianTree::canonical(&c, *n))
        }
    })
}

pub fn rule_to_json(l: &Lattice, rule: &Rule) -> Result<String, FormatError> {
    Ok(serde_json::to_string_pretty(&rule_file(l, rule)?)?)
}

pub fn parse_rule(s: &str, l: &Lattice) -> Result<Rule, FormatError> {
    rule_from_file(l, &serde_json::from_str(s)?)
}

/// Comma-separated element names.
pub fn parse_ballots(s: &str, l: &Lattice) -> Result<Vec<ElementId>, FormatError> {
    s.split(',')
        .enumerate()
        .map(|(i, x)| element(l, &format!("ballots[{i}]"), x.trim()))
        .collect()
}
