//! Plain-text edge lists.
//!
//! ```text
//! # ktree k=<k> n=<n> seed=<seed>
//! u v
//! ...
//! ```
//!
//! One edge per line with `u < v`, lines in ascending lexicographic order.
//! Partial k-trees append ` b=<b>` to the header.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::generator::{KTree, PartialKTree, ProcessParams};
use crate::graph::Adjacency;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeListHeader {
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    pub b: Option<f64>,
}

impl EdgeListHeader {
    pub fn from_params(params: &ProcessParams) -> Self {
        Self {
            k: params.k,
            n: params.n,
            seed: params.seed,
            b: None,
        }
    }

    fn line(&self) -> String {
        let mut s = format!("# ktree k={} n={} seed={}", self.k, self.n, self.seed);
        if let Some(b) = self.b {
            s.push_str(&format!(" b={b}"));
        }
        s
    }
}

pub fn write_edge_list<W: Write>(
    mut w: W,
    header: &EdgeListHeader,
    graph: &Adjacency,
) -> Result<()> {
    writeln!(w, "{}", header.line())?;
    for (u, v) in graph.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_ktree<W: Write>(w: W, tree: &KTree) -> Result<()> {
    write_edge_list(
        w,
        &EdgeListHeader::from_params(tree.params()),
        tree.adjacency(),
    )
}

pub fn write_partial<W: Write>(w: W, partial: &PartialKTree) -> Result<()> {
    let header = EdgeListHeader {
        b: Some(partial.b),
        ..EdgeListHeader::from_params(&partial.params)
    };
    write_edge_list(w, &header, &partial.adjacency)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeList {
    pub header: Option<EdgeListHeader>,
    pub adjacency: Adjacency,
}

fn parse_header(line: &str, line_no: usize) -> Result<Option<EdgeListHeader>> {
    let mut fields = line.trim_start_matches('#').split_whitespace();
    if fields.next() != Some("ktree") {
        return Ok(None);
    }
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let (mut k, mut n, mut seed, mut b) = (None, None, None, None);
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(format!("malformed header field `{field}`")))?;
        let bad = |_| err(format!("bad value for `{key}`: `{value}`"));
        match key {
            "k" => k = Some(value.parse().map_err(bad)?),
            "n" => n = Some(value.parse().map_err(bad)?),
            "seed" => seed = Some(value.parse().map_err(bad)?),
            "b" => {
                b = Some(
                    value
                        .parse()
                        .map_err(|_| err(format!("bad value for `b`: `{value}`")))?,
                )
            }
            _ => return Err(err(format!("unknown header field `{key}`"))),
        }
    }
    match (k, n, seed) {
        (Some(k), Some(n), Some(seed)) => Ok(Some(EdgeListHeader { k, n, seed, b })),
        _ => Err(err("header needs k, n and seed".into())),
    }
}

/// Reads an edge list. The `# ktree` header is optional; other `#` lines
/// and blank lines are skipped. Without a header, `n` is one more than the
/// largest vertex id.
pub fn read_edge_list<R: BufRead>(r: R) -> Result<EdgeList> {
    let mut header = None;
    let mut edges = Vec::new();
    let mut max_id: Option<u32> = None;
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if header.is_none() && edges.is_empty() {
                header = parse_header(line, line_no)?;
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut id = || -> Result<u32> {
            let tok = parts.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two vertex ids".into(),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex id `{tok}`"),
            })
        };
        let (u, v) = (id()?, id()?);
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: "trailing tokens after edge".into(),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop on vertex {u}"),
            });
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = match (&header, max_id) {
        (Some(h), Some(m)) if m as usize >= h.n => {
            return Err(Error::Parse {
                line: 1,
                message: format!("vertex id {m} out of range for n={}", h.n),
            })
        }
        (Some(h), _) => h.n,
        (None, m) => m.map_or(0, |m| m as usize + 1),
    };
    let adjacency = Adjacency::from_edges(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    Ok(EdgeList { header, adjacency })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::generate;

    #[test]
    fn format_of_small_tree() {
        let tree = generate(ProcessParams::new(2, 4, 1).unwrap()).unwrap();
        let mut out = Vec::new();
        write_ktree(&mut out, &tree).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# ktree k=2 n=4 seed=1");
        assert_eq!(lines.len(), 1 + 5);
        let pairs: Vec<(u32, u32)> = lines[1..]
            .iter()
            .map(|l| {
                let (u, v) = l.split_once(' ').unwrap();
                (u.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        assert!(pairs.iter().all(|&(u, v)| u < v));
        assert!(pairs.contains(&(0, 1)) && pairs.contains(&(0, 2)) && pairs.contains(&(1, 2)));
    }

    #[test]
    fn round_trip() {
        let tree = generate(ProcessParams::new(3, 300, 4).unwrap()).unwrap();
        let mut out = Vec::new();
        write_ktree(&mut out, &tree).unwrap();
        let parsed = read_edge_list(out.as_slice()).unwrap();
        assert_eq!(
            parsed.header,
            Some(EdgeListHeader::from_params(tree.params()))
        );
        assert_eq!(&parsed.adjacency, tree.adjacency());
    }

    #[test]
    fn headerless_input() {
        let parsed = read_edge_list("0 1\n\n1 2\n# note\n2 0\n".as_bytes()).unwrap();
        assert_eq!(parsed.header, None);
        assert_eq!(parsed.adjacency.vertex_count(), 3);
        assert_eq!(parsed.adjacency.edge_count(), 3);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("# ktree k=2 n=4 seed=1\n0 1\n0 x\n", 3),
            ("0 1\n2\n", 2),
            ("0 1 2\n", 1),
            ("# ktree k=2 n=four seed=1\n", 1),
            ("3 3\n", 1),
        ];
        for (text, line) in cases {
            match read_edge_list(text.as_bytes()) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn partial_header() {
        let partial =
            crate::generator::generate_partial(ProcessParams::new(4, 20, 2).unwrap(), 0.5).unwrap();
        let mut out = Vec::new();
        write_partial(&mut out, &partial).unwrap();
        let parsed = read_edge_list(out.as_slice()).unwrap();
        assert_eq!(parsed.header.unwrap().b, Some(0.5));
        assert_eq!(parsed.adjacency, partial.adjacency);
    }
}
