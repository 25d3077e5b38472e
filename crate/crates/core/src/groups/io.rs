//! Group input files (JSON).
//!
//! Either `{"name": "S3", "perm_degree": 3, "perms": ["(1,2)", "(1,2,3)"]}`
//! with 1-indexed cycle notation, or `{"name": "Z2", "table": [[0,1],[1,0]]}`
//! with 0-indexed element indices.

use serde::Deserialize;

use super::perm::{from_permutation_generators, parse_cycles};
use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: Option<String>,
    perm_degree: Option<usize>,
    perms: Option<Vec<String>>,
    table: Option<Vec<Vec<usize>>>,
}

/// Parse a group description from JSON text.
pub fn parse_group_json(text: &str, max_order: usize) -> Result<FiniteGroup> {
    let f: GroupFile = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    let name = f.name.unwrap_or_else(|| "G".to_string());
    match (f.perm_degree, f.perms, f.table) {
        (Some(deg), Some(perms), None) => {
            if deg == 0 {
                return Err(Error::parse("perm_degree must be positive"));
            }
            let ps = perms
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    parse_cycles(s, deg).map_err(|e| Error::parse(format!("perms[{i}]: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            from_permutation_generators(&name, deg, &ps, max_order)
        }
        (None, None, Some(table)) => FiniteGroup::from_table(&name, &table, max_order),
        _ => Err(Error::parse(
            "expected either {perm_degree, perms} or {table}",
        )),
    }
}

/// Read and parse a group file.
pub fn load_group(path: &std::path::Path, max_order: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("{}: {e}", path.display())))?;
    parse_group_json(&text, max_order)
        .map_err(|e| match e {
            Error::Parse(m) => Error::parse(format!("{}: {m}", path.display())),
            other => other,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_formats() {
        let s3 = parse_group_json(
            r#"{"name":"S3","perm_degree":3,"perms":["(1,2)","(1,2,3)"]}"#,
            512,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.name(), "S3");
        let z2 = parse_group_json(r#"{"table":[[0,1],[1,0]]}"#, 512).unwrap();
        assert_eq!(z2.order(), 2);
    }

    #[test]
    fn reports_locations() {
        let e = parse_group_json("{\"table\": [[0,1],[1,", 512).unwrap_err();
        assert!(matches!(e, Error::Parse(ref m) if m.contains("line 1")));
        let e = parse_group_json(r#"{"perm_degree":3,"perms":["(1,5)"]}"#, 512).unwrap_err();
        assert!(matches!(e, Error::Parse(ref m) if m.contains("perms[0]")));
        let e = parse_group_json(r#"{"table":[[0,1],[1,1]]}"#, 512).unwrap_err();
        assert!(matches!(e, Error::Parse(_)));
    }
}
