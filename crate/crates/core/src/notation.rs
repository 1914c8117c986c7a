//! Grouped vector notation: the centre, then one group per leg, separated by
//! `|`. Entries within a group are separated by commas or whitespace and a
//! run may be written `v^n`, so `(0 | -1 -1 -2 | 0 1 -2 | 0^68)` and
//! `0|-1,-1,-2|0,1,-2|0^68` are the same vector.

use crate::error::{Error, Result};
use crate::plumbing::PlumbingGraph;

fn parse_entry(tok: &str, out: &mut Vec<i64>) -> Result<()> {
    let bad = || Error::Parse(format!("bad vector entry {tok:?}"));
    let (value, count) = match tok.split_once('^') {
        Some((v, n)) => (v, n.parse::<usize>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let value: i64 = value.parse().map_err(|_| bad())?;
    out.extend(std::iter::repeat(value).take(count));
    Ok(())
}

fn normalise(s: &str) -> String {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .replace('\u{2212}', "-")
}

/// Splits into groups without checking them against a graph.
pub fn parse_groups(s: &str) -> Result<Vec<Vec<i64>>> {
    let s = normalise(s);
    if s.trim().is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    s.split('|')
        .map(|group| {
            let mut out = Vec::new();
            for tok in group
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                parse_entry(tok, &mut out)?;
            }
            Ok(out)
        })
        .collect()
}

/// Parses grouped or flat notation into coordinates on `g`. Grouped input
/// must match the leg lengths; flat input only the vertex count.
pub fn parse_vector(s: &str, g: &PlumbingGraph) -> Result<Vec<i64>> {
    let groups = parse_groups(s)?;
    let flat: Vec<i64> = groups.iter().flatten().copied().collect();
    if flat.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: flat.len(),
        });
    }
    if groups.len() > 1 {
        let expected: Vec<usize> = std::iter::once(1)
            .chain(g.legs().iter().map(Vec::len))
            .collect();
        let got: Vec<usize> = groups.iter().map(Vec::len).collect();
        if expected != got {
            return Err(Error::Parse(format!(
                "group sizes {got:?} do not match the graph {expected:?}"
            )));
        }
    }
    Ok(flat)
}

fn format_run(out: &mut Vec<String>, group: &[i64]) {
    let mut i = 0;
    while i < group.len() {
        let v = group[i];
        let run = group[i..].iter().take_while(|&&x| x == v).count();
        if run >= 4 {
            out.push(format!("{v}^{run}"));
        } else {
            out.extend(std::iter::repeat(v.to_string()).take(run));
        }
        i += run;
    }
}

/// `(c | a b | ...)`, with runs of four or more equal entries compressed.
pub fn format_grouped(coords: &[i64], g: &PlumbingGraph) -> String {
    let mut groups = vec![format_group(&coords[..1])];
    for leg in 0..g.legs().len() {
        groups.push(format_group(&coords[g.leg_range(leg)]));
    }
    format!("({})", groups.join(" | "))
}

fn format_group(group: &[i64]) -> String {
    let mut parts = Vec::new();
    format_run(&mut parts, group);
    parts.join(" ")
}

/// Comma-separated coordinates, uncompressed.
pub fn format_flat(coords: &[i64]) -> String {
    coords
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> PlumbingGraph {
        PlumbingGraph::new(-2, vec![vec![-2, -2, -2], vec![-2, -3, -3], vec![-2; 6]])
    }

    #[test]
    fn grouped_and_flat() {
        let g = g();
        let a = parse_vector("0|-1,-1,-2|0,1,-2|0^6", &g).unwrap();
        let b = parse_vector("(0 | −1 −1 −2 | 0 1 −2 | 0 0 0 0 0 0)", &g).unwrap();
        let c = parse_vector("0,-1,-1,-2,0,1,-2,0,0,0,0,0,0", &g).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(format_grouped(&a, &g), "(0 | -1 -1 -2 | 0 1 -2 | 0^6)");
        assert_eq!(parse_vector(&format_grouped(&a, &g), &g).unwrap(), a);
        assert_eq!(format_flat(&a[..3]), "0,-1,-1");
    }

    #[test]
    fn rejects() {
        let g = g();
        assert!(matches!(parse_vector("1|2", &g), Err(Error::LengthMismatch { .. })));
        assert!(matches!(
            parse_vector("0,-1|-1,-2,0|1,-2|0^6", &g),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_vector("0|x", &g), Err(Error::Parse(_))));
        assert!(matches!(parse_vector("", &g), Err(Error::Parse(_))));
    }
}
