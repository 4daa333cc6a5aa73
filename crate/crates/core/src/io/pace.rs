//! Tree decompositions in the PACE 2017 `.td` format.
//!
//! ```text
//! s td <bags> <max bag size> <vertices>
//! b <bag id> <v> <v> ...
//! <bag id> <bag id>
//! ```
//!
//! Bag ids and vertex ids are 1-based.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::generator::TreeDecomposition;

pub fn write_pace_td<W: Write>(mut w: W, td: &TreeDecomposition, n: usize) -> Result<()> {
    writeln!(w, "s td {} {} {}", td.bag_count(), td.max_bag_size(), n)?;
    for (i, bag) in td.bags().enumerate() {
        write!(w, "b {}", i + 1)?;
        for &v in bag {
            write!(w, " {}", v + 1)?;
        }
        writeln!(w)?;
    }
    for &(a, b) in td.tree_edges() {
        writeln!(w, "{} {}", a + 1, b + 1)?;
    }
    w.flush()?;
    Ok(())
}

/// Parsed `.td` file: the decomposition and the declared vertex count.
pub fn read_pace_td<R: BufRead>(r: R) -> Result<(TreeDecomposition, usize)> {
    let mut declared: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<u32>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let num = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| err(format!("invalid number `{tok}`")))
        };
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("s") => {
                if tokens.len() != 5 || tokens[1] != "td" {
                    return Err(err("expected `s td <bags> <width+1> <n>`".into()));
                }
                let count = num(tokens[2])?;
                bags = vec![None; count];
                declared = Some((count, num(tokens[4])?));
            }
            Some("b") => {
                let (count, n) = declared.ok_or_else(|| err("bag before solution line".into()))?;
                let id = num(tokens.get(1).ok_or_else(|| err("missing bag id".into()))?)?;
                if id == 0 || id > count {
                    return Err(err(format!("bag id {id} out of range")));
                }
                let mut bag = Vec::with_capacity(tokens.len() - 2);
                for tok in &tokens[2..] {
                    let v = num(tok)?;
                    if v == 0 || v > n {
                        return Err(err(format!("vertex {v} out of range")));
                    }
                    bag.push(v as u32 - 1);
                }
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                let (count, _) = declared.ok_or_else(|| err("edge before solution line".into()))?;
                if tokens.len() != 2 {
                    return Err(err("expected a bag edge `<a> <b>`".into()));
                }
                let (a, b) = (num(tokens[0])?, num(tokens[1])?);
                if a == 0 || b == 0 || a > count || b > count {
                    return Err(err(format!("bag edge ({a}, {b}) out of range")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, n) = declared.ok_or(Error::Parse {
        line: 0,
        message: "missing solution line".into(),
    })?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or(Error::Parse {
                line: 0,
                message: format!("bag {} never defined", i + 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((TreeDecomposition::new(bags, edges), n))
}
