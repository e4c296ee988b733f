//! Line-oriented text formats: block files and single-value inputs.
//!
//! A block file is a header line `{"e":…,"bs":[…],"n":…,"residues":[…]}`
//! followed by one multipartition per line, in canonical order.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abacus::{AbacusConfig, EtaDecomposition, MultiAbacus};
use crate::blocks::{Block, ResidueMultiset};
use crate::error::{Error, Result};
use crate::scopes::EquivalenceChain;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockHeader {
    pub e: usize,
    pub bs: Vec<i64>,
    pub n: usize,
    pub residues: ResidueMultiset,
}

impl BlockHeader {
    pub fn of(b: &Block) -> Self {
        BlockHeader {
            e: b.e(),
            bs: b.charges().to_vec(),
            n: b.n(),
            residues: b.residues().clone(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data always serializes")
}

/// The block file text, newline-terminated.
pub fn write_block(b: &Block) -> String {
    let mut out = to_json(&BlockHeader::of(b));
    out.push('\n');
    for m in b.members() {
        out.push_str(&to_json(m));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {e}"))
}

/// Reads a block file, checking the header against the members.
pub fn read_block(text: &str) -> Result<Block> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty block file".into()))?;
    let header: BlockHeader = serde_json::from_str(head).map_err(|e| parse_err(1, e))?;
    let members = lines
        .map(|(i, l)| serde_json::from_str::<MultiAbacus>(l).map_err(|e| parse_err(i + 1, e)))
        .collect::<Result<Vec<_>>>()?;
    let block = Block::from_members(header.e, members)?;
    if BlockHeader::of(&block) != header {
        return Err(Error::Parse("header does not describe the members".into()));
    }
    Ok(block)
}

/// Any value the command-line tools accept as input.
#[derive(Clone, Debug)]
pub enum Input {
    Config(AbacusConfig),
    Multi(MultiAbacus),
    Eta(EtaDecomposition),
    Block(Block),
    Chain(EquivalenceChain),
}

/// Recognizes the value by the keys of its first JSON line.
pub fn read_input(text: &str) -> Result<Input> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let value: Value = serde_json::from_str(first).map_err(|e| parse_err(1, e))?;
    let has = |k: &str| value.get(k).is_some();
    if has("residues") {
        return read_block(text).map(Input::Block);
    }
    let decoded = if has("steps") {
        serde_json::from_value(value).map(Input::Chain)
    } else if has("quotient") {
        serde_json::from_value(value).map(Input::Eta)
    } else if has("components") {
        serde_json::from_value(value).map(Input::Multi)
    } else if has("partition") {
        serde_json::from_value(value).map(Input::Config)
    } else {
        return Err(Error::Parse("unrecognized input value".into()));
    };
    decoded.map_err(|e| parse_err(1, e))
}

impl Input {
    /// The value as a charged multipartition; blocks give their first member.
    pub fn into_multi(self) -> Result<MultiAbacus> {
        match self {
            Input::Config(c) => Ok(c.into()),
            Input::Multi(m) => Ok(m),
            Input::Eta(d) => Ok(d.to_multi()),
            Input::Block(b) => Ok(b.members()[0].clone()),
            Input::Chain(_) => Err(Error::Parse(
                "expected a multipartition, found a chain".into(),
            )),
        }
    }
}
