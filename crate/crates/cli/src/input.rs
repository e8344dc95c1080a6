//! Plain-text input documents.
//!
//! ```text
//! ring x, y, z, w
//! poly f = x*w - y*z
//! field e = x*d/dx + y*d/dy + z*d/dz + w*d/dw
//! ideal I = x, y
//! module L = e, y*d/dy
//! component X3 = x*w - y*z, dim 3
//! ```

use std::collections::HashMap;

use derlog_core::{parse_poly, ComponentSpec, Ideal, Poly, Ring, VectorField};

use crate::error::CliError;

#[derive(Clone, Debug, Default)]
pub struct InputDoc {
    pub ring: Option<Ring>,
    pub polys: Vec<(String, Poly)>,
    pub fields: Vec<(String, VectorField)>,
    pub ideals: Vec<(String, Ideal)>,
    pub modules: Vec<(String, Vec<VectorField>)>,
    pub components: Vec<ComponentSpec>,
}

fn err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Input { line, msg: msg.into() }
}

/// `<name> = <rest>`.
fn split_def(line: usize, text: &str) -> Result<(String, String), CliError> {
    let (name, rest) = text.split_once('=').ok_or_else(|| err(line, "expected `<name> = ...`"))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || "_-()',".contains(c)) {
        return Err(err(line, format!("invalid name `{name}`")));
    }
    Ok((name.to_string(), rest.trim().to_string()))
}

/// Splits `<ideal generators>, dim <d>`.
pub fn split_component(text: &str) -> Option<(&str, usize)> {
    let (gens, dim) = text.rsplit_once(',')?;
    let d = dim.trim().strip_prefix("dim")?.trim().parse().ok()?;
    Some((gens.trim(), d))
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<InputDoc, CliError> {
        let mut doc = InputDoc::default();
        let mut names: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (kw, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            if kw == "ring" {
                if doc.ring.is_some() {
                    return Err(err(line, "ring declared twice"));
                }
                doc.ring = Some(Ring::parse(rest).map_err(|e| err(line, e.to_string()))?);
                continue;
            }
            let ring = doc.ring.clone().ok_or_else(|| err(line, "the ring must be declared first"))?;
            let (name, body) = split_def(line, rest)?;
            if let Some(prev) = names.insert(name.clone(), line) {
                return Err(err(line, format!("`{name}` already defined on line {prev}")));
            }
            let core = |e: derlog_core::Error| err(line, e.to_string());
            match kw {
                "poly" => doc.polys.push((name, parse_poly(&body, &ring).map_err(core)?)),
                "field" => doc.fields.push((name, VectorField::parse(&body, &ring).map_err(core)?)),
                "ideal" => doc.ideals.push((name, Ideal::parse(&body, &ring).map_err(core)?)),
                "module" => {
                    let mut gens = Vec::new();
                    for part in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        match doc.field(part) {
                            Some(v) => gens.push(v.clone()),
                            None => gens.push(VectorField::parse(part, &ring).map_err(core)?),
                        }
                    }
                    doc.modules.push((name, gens));
                }
                "component" => {
                    let (gens, dim) = split_component(&body)
                        .ok_or_else(|| err(line, "expected `<generators>, dim <d>`"))?;
                    let ideal = Ideal::parse(gens, &ring).map_err(core)?;
                    doc.components.push(ComponentSpec::new(&name, ideal, dim).map_err(core)?);
                }
                other => return Err(err(line, format!("unknown keyword `{other}`"))),
            }
        }
        Ok(doc)
    }

    pub fn poly(&self, name: &str) -> Option<&Poly> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn field(&self, name: &str) -> Option<&VectorField> {
        self.fields.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn module(&self, name: &str) -> Option<&[VectorField]> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m.as_slice())
    }
}
