//! Line-oriented poset files:
//!
//! ```text
//! # comment
//! poset 4
//! cover 1 2
//! cover 1 3
//! partition o 1 2
//! partition c 1 3
//! ```
//!
//! Without `partition` lines every cover is in the order part.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::EdgePartition;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetFile {
    pub source: String,
    pub poset: Poset,
    /// `Some` exactly when the file contains `partition` lines.
    pub partition: Option<EdgePartition>,
}

impl PosetFile {
    /// The explicit partition, or the one with every cover in the order part.
    pub fn effective_partition(&self) -> EdgePartition {
        self.partition.clone().unwrap_or_else(|| EdgePartition::all_order(&self.poset))
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| parse_error(line, format!("`{token}` is not a non-negative integer")))
}

fn expect_end<'a>(mut tokens: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match tokens.next() {
        Some(extra) => Err(parse_error(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

pub fn parse_poset_file(text: &str) -> Result<PosetFile> {
    let mut d: Option<usize> = None;
    let mut covers = Vec::new();
    // cover -> in order part
    let mut assignment: BTreeMap<(usize, usize), bool> = BTreeMap::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        if keyword != "poset" && d.is_none() {
            return Err(parse_error(line, "the first directive must be `poset <d>`"));
        }
        match keyword {
            "poset" => {
                if d.is_some() {
                    return Err(parse_error(line, "`poset` given twice"));
                }
                d = Some(parse_index(tokens.next(), line, "ground set size")?);
                expect_end(tokens, line)?;
            }
            "cover" => {
                let i = parse_index(tokens.next(), line, "lower element")?;
                let j = parse_index(tokens.next(), line, "upper element")?;
                expect_end(tokens, line)?;
                covers.push((i, j));
            }
            "partition" => {
                let side = match tokens.next() {
                    Some("o") => true,
                    Some("c") => false,
                    Some(other) => return Err(parse_error(line, format!("partition side `{other}` is not `o` or `c`"))),
                    None => return Err(parse_error(line, "missing partition side")),
                };
                let i = parse_index(tokens.next(), line, "lower element")?;
                let j = parse_index(tokens.next(), line, "upper element")?;
                expect_end(tokens, line)?;
                if assignment.insert((i, j), side).is_some() {
                    return Err(Error::ConflictingAssignment(i, j));
                }
            }
            other => return Err(parse_error(line, format!("unknown directive `{other}`"))),
        }
    }

    let d = d.ok_or_else(|| parse_error(text.lines().count().max(1), "missing `poset <d>`"))?;
    let poset = Poset::new(d, &covers)?;
    let partition = if assignment.is_empty() {
        None
    } else {
        if let Some((&(i, j), _)) = assignment.iter().find(|(e, _)| !poset.covers().contains(e)) {
            return Err(Error::UnknownEdge(i, j));
        }
        if let Some(&(i, j)) = poset.covers().iter().find(|e| !assignment.contains_key(e)) {
            return Err(Error::PartialPartition(i, j));
        }
        let order: Vec<(usize, usize)> = assignment.iter().filter(|(_, &o)| o).map(|(&e, _)| e).collect();
        Some(EdgePartition::new(&poset, &order)?)
    };
    Ok(PosetFile { source: text.to_string(), poset, partition })
}

/// Renders `l` in the file grammar; [`parse_poset_file`] inverts it.
pub fn format_poset_file(l: &EdgePartition) -> String {
    let p = l.base();
    let mut out = format!("poset {}\n", p.d());
    for (i, j) in p.covers() {
        out.push_str(&format!("cover {i} {j}\n"));
    }
    for (i, j) in l.order_edges() {
        out.push_str(&format!("partition o {i} {j}\n"));
    }
    for (i, j) in l.chain_edges() {
        out.push_str(&format!("partition c {i} {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_without_partition() {
        let f = parse_poset_file("poset 2\ncover 1 2").unwrap();
        assert_eq!(f.poset, Poset::chain(2).unwrap());
        assert!(f.partition.is_none());
        assert_eq!(f.effective_partition(), EdgePartition::all_order(&f.poset));
    }

    #[test]
    fn seven_chain_file() {
        let mut text = String::from("# seven-element chain\nposet 7\n");
        for i in 1..7 {
            text.push_str(&format!("cover {i} {}\n", i + 1));
        }
        text.push_str("partition o 1 2\npartition o 4 5\npartition o 5 6\n");
        text.push_str("partition c 2 3\npartition c 3 4\npartition c 6 7\n");
        let f = parse_poset_file(&text).unwrap();
        assert_eq!(f.partition.unwrap().order_edges(), vec![(1, 2), (4, 5), (5, 6)]);
    }

    #[test]
    fn errors() {
        let conflict = "poset 3\ncover 1 2\ncover 2 3\npartition o 2 3\npartition c 2 3\npartition o 1 2";
        assert_eq!(parse_poset_file(conflict), Err(Error::ConflictingAssignment(2, 3)));
        let partial = "poset 3\ncover 1 2\ncover 2 3\npartition o 1 2";
        assert_eq!(parse_poset_file(partial), Err(Error::PartialPartition(2, 3)));
        assert!(matches!(parse_poset_file("poset 2\ncover 1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poset_file("cover 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poset_file("poset 2\nedge 1 2"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_poset_file("poset 2\ncover 1 3"), Err(Error::IndexOutOfRange { element: 3, d: 2 }));
        assert_eq!(
            parse_poset_file("poset 2\ncover 1 2\npartition o 2 1"),
            Err(Error::UnknownEdge(2, 1))
        );
    }

    #[test]
    fn round_trip() {
        let text = "poset 4\ncover 1 2\ncover 1 3\ncover 3 4\npartition o 1 2\npartition o 1 3\npartition c 3 4\n";
        let f = parse_poset_file(text).unwrap();
        assert_eq!(format_poset_file(&f.partition.unwrap()), text);
    }
}
