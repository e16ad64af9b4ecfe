//! The complex file format: `{"n": 4, "facets": [[1, 2], [2, 3]]}` with
//! 1-indexed vertices. A file may also carry a stored `λ` input under
//! `"lambda_witness"`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use momentangle_core::cluster::{Rational, SmashPoint, SuspensionPoint};
use momentangle_core::{SimplicialComplex, VertexSet};
use serde::Deserialize;

use crate::Failure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    n: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default)]
    lambda_witness: Option<WitnessFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessFile {
    #[serde(rename = "I")]
    i: Vec<usize>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    t: Vec<String>,
    x: Vec<String>,
}

pub struct StoredWitness {
    pub i: VertexSet,
    pub j: VertexSet,
    pub point: SuspensionPoint,
}

pub struct Input {
    pub complex: SimplicialComplex,
    pub witness: Option<StoredWitness>,
}

pub fn read_complex(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_complex(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn parse_complex(text: &str) -> Result<Input, String> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| format!("parse error: {e}"))?;
    let complex = SimplicialComplex::new(file.n, &file.facets).map_err(|e| format!("invalid complex: {e}"))?;
    let witness = match file.lambda_witness {
        None => None,
        Some(w) => Some(parse_witness(file.n, w).map_err(|e| format!("invalid lambda_witness: {e}"))?),
    };
    Ok(Input { complex, witness })
}

fn parse_witness(n: usize, w: WitnessFile) -> Result<StoredWitness, String> {
    let i = VertexSet::from_vertices(w.i, n).map_err(|e| e.to_string())?;
    let j = VertexSet::from_vertices(w.j, n).map_err(|e| e.to_string())?;
    let t = w.t.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    let x = w.x.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    let x = SmashPoint::new(x).map_err(|e| e.to_string())?;
    let point = SuspensionPoint::new(t, x).map_err(|e| e.to_string())?;
    Ok(StoredWitness { i, j, point })
}

/// Accepts `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let r: Rational = s.trim().parse().map_err(|_| format!("'{s}' is not a rational of the form p/q"))?;
    Ok(r)
}

pub fn render_complex(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    write!(out, "{{\"n\": {}, \"facets\": [", k.n()).unwrap();
    for (idx, f) in k.facets().iter().filter(|f| !f.is_empty()).enumerate() {
        if idx > 0 {
            out.push_str(", ");
        }
        let vs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        write!(out, "[{}]", vs.join(", ")).unwrap();
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let input = parse_complex(r#"{"n": 4, "facets": [[3, 4], [1, 2], [2, 3], [1, 4]]}"#).unwrap();
        let text = render_complex(&input.complex);
        assert_eq!(text, "{\"n\": 4, \"facets\": [[1, 2], [2, 3], [1, 4], [3, 4]]}\n");
        assert_eq!(parse_complex(&text).unwrap().complex, input.complex);
        let empty = parse_complex(r#"{"n": 2, "facets": []}"#).unwrap();
        assert_eq!(render_complex(&empty.complex), "{\"n\": 2, \"facets\": []}\n");
    }

    #[test]
    fn diagnostics() {
        let e = parse_complex("{\"n\": 4,\n \"facets\": [[1, 2]").err().unwrap();
        assert!(e.contains("line 2"), "{e}");
        assert!(parse_complex(r#"{"n": 3, "facets": [[4]]}"#).err().unwrap().contains("vertex 4"));
        assert!(parse_complex(r#"{"n": 3, "facets": [], "extra": 1}"#).is_err());
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("0.5").is_err());
    }
}
