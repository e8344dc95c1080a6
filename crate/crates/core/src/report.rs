//! Structured, serializable outcomes of checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::derlog::{FieldModule, VectorField};
use crate::ideal::Ideal;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A piece of evidence. Ideals are given by their reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Poly(String),
    Ideal(Vec<String>),
    Field(String),
    Module(Vec<String>),
    Integer(i64),
    Bool(bool),
    Text(String),
    Indices(Vec<usize>),
    Flags(BTreeMap<String, bool>),
    /// Reduced Gröbner basis elements found on only one side.
    Diff { left_only: Vec<String>, right_only: Vec<String> },
}

impl Evidence {
    pub fn ideal(i: &Ideal) -> Evidence {
        Evidence::Ideal(i.canonical_gens().iter().map(ToString::to_string).collect())
    }

    pub fn module(m: &FieldModule) -> Evidence {
        Evidence::Module(m.gens().iter().map(ToString::to_string).collect())
    }

    pub fn poly(p: &Poly) -> Evidence {
        Evidence::Poly(p.to_string())
    }

    /// Difference of the reduced Gröbner bases of two ideals.
    pub fn diff(left: &Ideal, right: &Ideal) -> Evidence {
        let a: Vec<String> = left.canonical_gens().iter().map(ToString::to_string).collect();
        let b: Vec<String> = right.canonical_gens().iter().map(ToString::to_string).collect();
        Evidence::Diff {
            left_only: a.iter().filter(|g| !b.contains(g)).cloned().collect(),
            right_only: b.iter().filter(|g| !a.contains(g)).cloned().collect(),
        }
    }

    pub fn field(v: &VectorField) -> Evidence {
        Evidence::Field(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub name: String,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub caveats: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Inconclusive,
            witnesses: Vec::new(),
            caveats: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn add(&mut self, name: &str, evidence: Evidence) -> &mut Self {
        self.witnesses.push(Witness { name: name.to_string(), evidence });
        self
    }

    pub fn caveat(&mut self, text: impl Into<String>) -> &mut Self {
        let text = text.into();
        if !self.caveats.contains(&text) {
            self.caveats.push(text);
        }
        self
    }

    pub fn witness(&self, name: &str) -> Option<&Evidence> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| &w.evidence)
    }

    pub fn set_verdict(&mut self, pass: bool) -> &mut Self {
        self.verdict = if pass { Verdict::Pass } else { Verdict::Fail };
        self
    }

    /// Merges another report's witnesses (prefixed) and caveats.
    pub fn absorb(&mut self, prefix: &str, other: &CheckReport) {
        for w in &other.witnesses {
            self.add(&format!("{prefix}.{}", w.name), w.evidence.clone());
        }
        for c in &other.caveats {
            self.caveat(c.clone());
        }
    }

    /// JSON with sorted object keys.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.check, self.verdict)?;
        for w in &self.witnesses {
            write!(f, "  {}:", w.name)?;
            if !matches!(w.evidence, Evidence::Module(_)) {
                write!(f, " ")?;
            }
            match &w.evidence {
                Evidence::Poly(s) | Evidence::Field(s) | Evidence::Text(s) => writeln!(f, "{s}")?,
                Evidence::Ideal(g) => writeln!(f, "({})", g.join(", "))?,
                Evidence::Module(g) => {
                    writeln!(f)?;
                    for x in g {
                        writeln!(f, "    {x}")?;
                    }
                }
                Evidence::Integer(i) => writeln!(f, "{i}")?,
                Evidence::Bool(b) => writeln!(f, "{b}")?,
                Evidence::Indices(v) => writeln!(f, "{v:?}")?,
                Evidence::Diff { left_only, right_only } => {
                    writeln!(f, "only left ({}), only right ({})", left_only.join(", "), right_only.join(", "))?
                }
                Evidence::Flags(m) => {
                    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(f, "{}", parts.join(" "))?
                }
            }
        }
        for c in &self.caveats {
            writeln!(f, "  caveat: {c}")?;
        }
        Ok(())
    }
}
