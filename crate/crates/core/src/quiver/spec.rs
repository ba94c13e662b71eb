//! The JSON description of a quiver with a current sequence.
//!
//! ```json
//! {"vertices":["0","1"],
//!  "arrows":[{"id":"t_01","tail":"0","head":"1"}],
//!  "steps":[{"vertex":"0","a":2,"mu":[4,2]}]}
//! ```

use serde_json::Value;

use crate::algebra::DominantWeight;
use crate::error::{Error, Result};

use super::{CurrentSequence, Quiver, Step};

fn err(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { pointer: pointer.into(), message: message.into() }
}

fn field<'a>(obj: &'a Value, key: &str, at: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(at, format!("missing field '{key}'")))
}

fn string(v: &Value, at: &str) -> Result<String> {
    v.as_str().map(str::to_string).ok_or_else(|| err(at, "expected a string"))
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(at, "expected an array"))
}

/// Parses and validates a spec document.
pub fn parse_spec(text: &str) -> Result<CurrentSequence> {
    let doc: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
    if !doc.is_object() {
        return Err(err("", "expected an object"));
    }
    let vertices = array(field(&doc, "vertices", "")?, "/vertices")?
        .iter()
        .enumerate()
        .map(|(n, v)| string(v, &format!("/vertices/{n}")))
        .collect::<Result<Vec<_>>>()?;
    let mut arrows = Vec::new();
    if let Some(list) = doc.get("arrows") {
        for (n, a) in array(list, "/arrows")?.iter().enumerate() {
            let at = format!("/arrows/{n}");
            arrows.push((
                string(field(a, "id", &at)?, &format!("{at}/id"))?,
                string(field(a, "tail", &at)?, &format!("{at}/tail"))?,
                string(field(a, "head", &at)?, &format!("{at}/head"))?,
            ));
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut steps = Vec::new();
    for (n, s) in array(field(&doc, "steps", "")?, "/steps")?.iter().enumerate() {
        let at = format!("/steps/{n}");
        let name = string(field(s, "vertex", &at)?, &format!("{at}/vertex"))?;
        let vertex = quiver
            .vertex_index(&name)
            .ok_or_else(|| err(format!("{at}/vertex"), format!("unknown vertex '{name}'")))?;
        let a = field(s, "a", &at)?
            .as_u64()
            .filter(|&a| a > 0)
            .ok_or_else(|| err(format!("{at}/a"), "expected a positive integer"))? as usize;
        let mu = array(field(s, "mu", &at)?, &format!("{at}/mu"))?
            .iter()
            .enumerate()
            .map(|(j, x)| x.as_i64().ok_or_else(|| err(format!("{at}/mu/{j}"), "expected an integer")))
            .collect::<Result<Vec<_>>>()?;
        if mu.len() != a {
            return Err(err(format!("{at}/mu"), format!("length {} does not match a = {a}", mu.len())));
        }
        let weight = DominantWeight::new(mu).ok_or_else(|| err(format!("{at}/mu"), "mu must be weakly decreasing"))?;
        steps.push(Step::new(vertex, weight));
    }
    CurrentSequence::new(quiver, steps)
}

/// Renders a current sequence back into the spec format.
pub fn to_spec_json(cs: &CurrentSequence) -> Value {
    let q = cs.quiver();
    serde_json::json!({
        "vertices": q.vertices(),
        "arrows": q.arrows().iter().map(|a| serde_json::json!({
            "id": a.id,
            "tail": q.vertices()[a.tail],
            "head": q.vertices()[a.head],
        })).collect::<Vec<_>>(),
        "steps": cs.steps().iter().map(|s| serde_json::json!({
            "vertex": q.vertices()[s.vertex],
            "a": s.width(),
            "mu": s.weight.parts(),
        })).collect::<Vec<_>>(),
    })
}
