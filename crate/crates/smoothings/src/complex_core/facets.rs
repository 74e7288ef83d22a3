use std::fmt::Write as _;
use std::path::Path;

use super::{build_complex, ComplexError, SimplicialComplex};

/// Parses a facet file: one facet per line, whitespace-separated vertex
/// ids, `#` to end of line is a comment, blank lines are skipped.
pub fn parse_facets(text: &str) -> Result<Vec<Vec<u32>>, ComplexError> {
    let mut facets = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|e| ComplexError::Parse {
                    line: i + 1,
                    message: format!("bad vertex id {tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        facets.push(facet);
    }
    Ok(facets)
}

pub fn read_facet_file(path: &Path) -> Result<SimplicialComplex, ComplexError> {
    let text = std::fs::read_to_string(path).map_err(|e| ComplexError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    build_complex(&parse_facets(&text)?)
}

/// Writes the complex's facets in the facet-file format.
pub fn write_facets(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in k.facets() {
        let line: Vec<String> = f.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_core::rp2_six_vertex;

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_facets("# header\n0 1 2\n\n  1 2 3 # trailing\n").unwrap();
        assert_eq!(f, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn parse_error_line() {
        let e = parse_facets("0 1\n0 x\n").unwrap_err();
        assert!(matches!(e, ComplexError::Parse { line: 2, .. }));
        assert!(parse_facets("0 -1\n").is_err());
    }

    #[test]
    fn round_trip() {
        let k = rp2_six_vertex();
        let again = build_complex(&parse_facets(&write_facets(&k)).unwrap()).unwrap();
        assert_eq!(again, k);
    }
}
