//! Text formats: quiver files, dimension vectors and their JSON forms.
//!
//! A quiver file is `{"vertices": ["v","w"], "arrows": [["a1","v","w"]]}`.
//! A dimension vector is either a JSON object `{"v": 2, "w": 3}`, a
//! `v=2,w=3` string, or a positional `2,3` string.

use serde_json::{Map, Value};

use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::quiver::Quiver;

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("bad quiver file: {e}")))
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    serde_json::to_value(q).expect("quiver serializes")
}

/// Parses `v=2,w=1` (missing vertices are zero) or `2,1` (all vertices, in
/// declaration order).
pub fn parse_dim(q: &Quiver, text: &str) -> Result<DimVec> {
    let text = text.trim();
    if text.starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::input(format!("bad dimension vector: {e}")))?;
        return dim_from_json(q, &v);
    }
    let parts: Vec<&str> = if text.is_empty() { Vec::new() } else { text.split(',').map(str::trim).collect() };
    let number = |s: &str| -> Result<i64> {
        let x: i64 = s.parse().map_err(|_| Error::input(format!("`{s}` is not an integer")))?;
        ensure!(x >= 0, Error::input(format!("negative dimension {x}")));
        Ok(x)
    };
    if parts.iter().any(|p| p.contains('=')) {
        let mut e = vec![0; q.vertex_count()];
        let mut seen = vec![false; q.vertex_count()];
        for part in parts {
            let (name, val) = part
                .split_once('=')
                .ok_or_else(|| Error::input(format!("`{part}` is not of the form vertex=dimension")))?;
            let v =
                q.vertex_index(name.trim()).ok_or_else(|| Error::input(format!("unknown vertex `{}`", name.trim())))?;
            ensure!(!seen[v], Error::input(format!("vertex `{}` given twice", name.trim())));
            seen[v] = true;
            e[v] = number(val.trim())?;
        }
        return Ok(DimVec::new(e));
    }
    ensure!(
        parts.len() == q.vertex_count(),
        Error::input(format!("expected {} entries, got {}", q.vertex_count(), parts.len()))
    );
    Ok(DimVec::new(parts.into_iter().map(number).collect::<Result<_>>()?))
}

/// Parses a positional pair `a,b` without a quiver.
pub fn parse_pair(text: &str) -> Result<DimVec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    ensure!(parts.len() == 2, Error::input(format!("expected `a,b`, got `{text}`")));
    let mut e = Vec::with_capacity(2);
    for s in parts {
        let x: i64 = s.parse().map_err(|_| Error::input(format!("`{s}` is not an integer")))?;
        ensure!(x >= 0, Error::input(format!("negative dimension {x}")));
        e.push(x);
    }
    Ok(DimVec::new(e))
}

pub fn dim_from_json(q: &Quiver, v: &Value) -> Result<DimVec> {
    let obj = v.as_object().ok_or_else(|| Error::input("dimension vector must be a JSON object"))?;
    let mut e = vec![0; q.vertex_count()];
    for (name, val) in obj {
        let i = q.vertex_index(name).ok_or_else(|| Error::input(format!("unknown vertex `{name}`")))?;
        let x = val
            .as_i64()
            .filter(|&x| x >= 0)
            .ok_or_else(|| Error::input(format!("dimension at `{name}` must be a non-negative integer, got {val}")))?;
        e[i] = x;
    }
    Ok(DimVec::new(e))
}

pub fn dim_to_json(q: &Quiver, alpha: &DimVec) -> Value {
    let mut m = Map::new();
    for (name, x) in q.vertices().iter().zip(alpha.entries()) {
        m.insert(name.clone(), Value::from(*x));
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn quiver_file_round_trip() {
        let text = r#"{"vertices": ["v","w"], "arrows": [["a1","v","w"], ["a2","v","w"]]}"#;
        let q = parse_quiver(text).unwrap();
        assert_eq!(q.kronecker_shape(), Some((0, 1, 2)));
        assert_eq!(parse_quiver(&quiver_to_json(&q).to_string()).unwrap(), q);
        assert!(parse_quiver(r#"{"vertices": ["v"], "arrows": [["a","v","x"]]}"#).is_err());
    }

    #[test]
    fn dimension_syntaxes() {
        let q = corpus::a2();
        assert_eq!(parse_dim(&q, "v=2,w=1").unwrap(), DimVec::from([2, 1]));
        assert_eq!(parse_dim(&q, "w=3").unwrap(), DimVec::from([0, 3]));
        assert_eq!(parse_dim(&q, "2,1").unwrap(), DimVec::from([2, 1]));
        assert_eq!(parse_dim(&q, r#"{"v": 2, "w": 3}"#).unwrap(), DimVec::from([2, 3]));
        assert!(parse_dim(&q, "2").is_err());
        assert!(parse_dim(&q, "x=1").is_err());
        assert!(parse_dim(&q, "v=-1").is_err());
        assert_eq!(dim_to_json(&q, &DimVec::from([2, 3])).to_string(), r#"{"v":2,"w":3}"#);
    }
}
