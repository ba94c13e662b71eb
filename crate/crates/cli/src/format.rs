//! Shape keys and JSON rendering.
//!
//! A shape tuple is written one partition per vertex, parts separated by
//! commas and vertices by `/`, with `-` for the empty partition:
//! `6,3,3,1,1/-`.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use quiver_hl::algebra::{LaurentPoly, Partition, VarId};
use serde_json::{Map, Value};

pub fn parse_shape(text: &str, vertices: usize) -> Result<Vec<Partition>, String> {
    let pieces: Vec<&str> = text.split('/').collect();
    if pieces.len() != vertices {
        return Err(format!("--lambda: expected {vertices} partitions separated by '/', got {}", pieces.len()));
    }
    pieces
        .iter()
        .map(|p| {
            let p = p.trim();
            if p.is_empty() || p == "-" {
                return Ok(Partition::empty());
            }
            let parts = p
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| format!("--lambda: '{x}' is not a non-negative integer")))
                .collect::<Result<Vec<_>, _>>()?;
            Partition::new(parts).ok_or_else(|| format!("--lambda: parts of '{p}' must be weakly decreasing"))
        })
        .collect()
}

pub fn shape_key(lambda: &[Partition]) -> String {
    lambda
        .iter()
        .map(|p| {
            if p.is_empty() {
                "-".to_string()
            } else {
                p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            }
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// The variables of all polynomials, in the fixed variable order.
pub fn variables<'a>(polys: impl IntoIterator<Item = &'a LaurentPoly>) -> Vec<VarId> {
    let mut set = BTreeSet::new();
    for p in polys {
        set.extend(p.variables());
    }
    set.into_iter().collect()
}

pub fn variable_names(vars: &[VarId]) -> Value {
    Value::Array(vars.iter().map(|v| Value::String(v.to_string())).collect())
}

/// `{"[e1,e2,..]": coefficient}` with exponents listed in the order of `vars`.
/// Coefficients beyond 64 bits are written as decimal strings.
pub fn poly_json(p: &LaurentPoly, vars: &[VarId]) -> Value {
    let mut out = Map::new();
    for (m, c) in p.terms().rev() {
        let exps: Vec<String> = vars.iter().map(|v| m.exponent(v).to_string()).collect();
        let value = match c.to_i64() {
            Some(n) => Value::from(n),
            None => Value::String(c.to_string()),
        };
        out.insert(format!("[{}]", exps.join(",")), value);
    }
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        let lambda = parse_shape("6,3,3,1,1/-", 2).unwrap();
        assert_eq!(lambda[0].parts(), &[6, 3, 3, 1, 1]);
        assert!(lambda[1].is_empty());
        assert_eq!(shape_key(&lambda), "6,3,3,1,1/-");
        assert_eq!(shape_key(&parse_shape("2,1,0/", 2).unwrap()), "2,1/-");
    }

    #[test]
    fn bad_shapes() {
        assert!(parse_shape("1,2", 1).is_err());
        assert!(parse_shape("1/1", 1).is_err());
        assert!(parse_shape("a", 1).is_err());
    }

    #[test]
    fn json_exponents_follow_the_variable_list() {
        let p: LaurentPoly = "2*t_01^6*t_10^6 + t_01^-1".parse().unwrap();
        let vars = variables([&p]);
        let j = poly_json(&p, &vars);
        assert_eq!(j["[6,6]"], 2);
        assert_eq!(j["[-1,0]"], 1);
    }
}
