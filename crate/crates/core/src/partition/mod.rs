//! Bicolored partitions, compositions and set partitions.
//!
//! Every block or part carries a [`Color`]. Set partitions are kept in a
//! canonical form (elements ascending inside a block, blocks ordered by their
//! minimum), so structural equality is equality of the underlying objects.

mod generate;
mod stirling;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use generate::{
    all_bicolored_set_partitions, count_f, count_g, f_table, g_table, generate_s, is_member_s,
    stream_s, SStream,
};
pub use stirling::{r_stirling, stirling_first_unsigned};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn index(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }

    pub fn from_index(i: u64) -> Option<Color> {
        match i {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            _ => None,
        }
    }

    pub const BOTH: [Color; 2] = [Color::One, Color::Two];
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let i = u64::deserialize(d)?;
        Color::from_index(i).ok_or_else(|| serde::de::Error::custom(format!("bad color {i}")))
    }
}

/// A colored part: `(size, color)`.
pub type Part = (u32, Color);

fn fmt_parts(f: &mut fmt::Formatter<'_>, parts: &[Part]) -> fmt::Result {
    for (i, (s, c)) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "({s},{c})")?;
    }
    Ok(())
}

/// Multiset of colored parts, sorted by size then color.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicoloredPartition {
    parts: Vec<Part>,
}

impl BicoloredPartition {
    pub fn new(mut parts: Vec<Part>) -> Self {
        parts.sort_unstable();
        Self { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Self::new(parts)
    }
}

impl fmt::Display for BicoloredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        fmt_parts(f, &self.parts)?;
        write!(f, "}}")
    }
}

/// Ordered sequence of colored parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicoloredComposition {
    parts: Vec<Part>,
}

impl BicoloredComposition {
    pub fn new(parts: Vec<Part>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    /// Forgets the order.
    pub fn to_partition(&self) -> BicoloredPartition {
        BicoloredPartition::new(self.parts.clone())
    }
}

impl fmt::Display for BicoloredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        fmt_parts(f, &self.parts)?;
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct PartsWire {
    parts: Vec<(u32, Color)>,
}

fn check_parts(parts: &[Part]) -> std::result::Result<(), String> {
    match parts.iter().find(|p| p.0 == 0) {
        Some(_) => Err("parts must be positive".to_string()),
        None => Ok(()),
    }
}

impl Serialize for BicoloredPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartsWire { parts: self.parts.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BicoloredPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PartsWire::deserialize(d)?;
        check_parts(&w.parts).map_err(serde::de::Error::custom)?;
        Ok(Self::new(w.parts))
    }
}

impl Serialize for BicoloredComposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartsWire { parts: self.parts.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BicoloredComposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PartsWire::deserialize(d)?;
        check_parts(&w.parts).map_err(serde::de::Error::custom)?;
        Ok(Self::new(w.parts))
    }
}

/// One colored block; elements ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub elems: Vec<u32>,
    pub color: Color,
}

impl Block {
    pub fn new(mut elems: Vec<u32>, color: Color) -> Self {
        elems.sort_unstable();
        Self { elems, color }
    }

    pub fn least(&self) -> u32 {
        self.elems[0]
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// A set partition of `{1..n}` whose blocks are colored 1 or 2.
///
/// Blocks are stored in increasing order of their minima.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicoloredSetPartition {
    n: u32,
    blocks: Vec<Block>,
}

impl BicoloredSetPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates and canonicalizes raw colored blocks covering `{1..n}`.
    pub fn canonicalize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Color)>,
    {
        let blocks = validated_blocks(raw)?;
        let n = blocks.iter().map(|b| b.elems.len() as u32).sum::<u32>();
        // disjoint with n elements in total: covers {1..n} iff nothing exceeds n
        if blocks.iter().any(|b| b.elems.last().is_some_and(|&e| e > n)) {
            let present: BTreeSet<u32> =
                blocks.iter().flat_map(|b| b.elems.iter().copied()).collect();
            let missing = (1..=n).find(|i| !present.contains(i)).unwrap_or(n);
            return Err(Error::GapInGroundSet { n, missing });
        }
        Ok(Self { n, blocks })
    }

    /// Relabels an arbitrary disjoint family order-isomorphically onto `{1..m}`.
    pub fn standardize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Color)>,
    {
        let blocks = validated_blocks(raw)?;
        let mut all: Vec<u32> = blocks.iter().flat_map(|b| b.elems.iter().copied()).collect();
        all.sort_unstable();
        let rank: BTreeMap<u32, u32> = all.iter().enumerate().map(|(i, &e)| (e, i as u32 + 1)).collect();
        let relabeled = blocks
            .into_iter()
            .map(|b| Block { elems: b.elems.iter().map(|e| rank[e]).collect(), color: b.color })
            .collect::<Vec<_>>();
        Ok(Self { n: all.len() as u32, blocks: relabeled })
    }

    /// Builds from blocks already known to be canonical.
    pub(crate) fn from_canonical(n: u32, blocks: Vec<Block>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].least() < w[1].least()));
        Self { n, blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Ground-set size ω(π).
    pub fn weight(&self) -> u32 {
        self.n
    }

    /// Number of blocks ℓ(π).
    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `c(π)`: sizes and colors read in block order.
    pub fn shape_c(&self) -> BicoloredComposition {
        BicoloredComposition::new(self.blocks.iter().map(|b| (b.len() as u32, b.color)).collect())
    }

    /// `λ(π)`: the multiset of sizes and colors.
    pub fn shape_lambda(&self) -> BicoloredPartition {
        BicoloredPartition::new(self.blocks.iter().map(|b| (b.len() as u32, b.color)).collect())
    }

    /// Shifts `other` by ω(self) and takes the union.
    pub fn shifted_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().map(|b| Block {
            elems: b.elems.iter().map(|e| e + shift).collect(),
            color: b.color,
        }));
        Self { n: self.n + other.n, blocks }
    }

    /// Adds `{n+1}` as a new block of the given color.
    pub fn push_singleton(&self, color: Color) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.push(Block { elems: vec![self.n + 1], color });
        Self { n: self.n + 1, blocks }
    }

    /// Inserts `n+1` into block `j`; canonical order is unchanged since `n+1` is maximal.
    pub fn insert_into(&self, j: usize) -> Self {
        let mut blocks = self.blocks.clone();
        blocks[j].elems.push(self.n + 1);
        Self { n: self.n + 1, blocks }
    }

    pub fn recolor(&self, f: impl Fn(Color) -> Color) -> Self {
        Self {
            n: self.n,
            blocks: self.blocks.iter().map(|b| Block { elems: b.elems.clone(), color: f(b.color) }).collect(),
        }
    }

    /// The sub-collection selected by the bit mask, standardized.
    pub fn standardized_subset(&self, mask: u64) -> Self {
        let raw = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, b)| (b.elems.clone(), b.color));
        Self::standardize(raw).expect("sub-collection of a partition is disjoint")
    }
}

fn validated_blocks<I>(raw: I) -> Result<Vec<Block>>
where
    I: IntoIterator<Item = (Vec<u32>, Color)>,
{
    let mut blocks = Vec::new();
    let mut seen = BTreeSet::new();
    for (elems, color) in raw {
        if elems.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let block = Block::new(elems, color);
        for &e in &block.elems {
            if e == 0 {
                return Err(Error::ZeroElement);
            }
            if !seen.insert(e) {
                return Err(Error::OverlappingBlocks(e));
            }
        }
        blocks.push(block);
    }
    blocks.sort_by_key(Block::least);
    Ok(blocks)
}

impl fmt::Display for BicoloredSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({{")?;
            for (j, e) in b.elems.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}},{})", b.color)?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct SetPartitionWire {
    n: u32,
    blocks: Vec<Block>,
}

impl Serialize for BicoloredSetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SetPartitionWire { n: self.n, blocks: self.blocks.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BicoloredSetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SetPartitionWire::deserialize(d)?;
        let p = Self::canonicalize(w.blocks.into_iter().map(|b| (b.elems, b.color)))
            .map_err(serde::de::Error::custom)?;
        if p.n != w.n {
            return Err(serde::de::Error::custom(format!("declared n={} but blocks cover {}", w.n, p.n)));
        }
        Ok(p)
    }
}
