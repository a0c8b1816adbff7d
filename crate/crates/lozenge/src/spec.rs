//! Declarative region descriptions and their JSON wire format.
//!
//! One JSON object per spec, discriminated by `"type"`; index sets are sorted
//! arrays of positive integers, ferns are `{"lengths": [...], "first": "up"}`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::region::BuildError;

/// Strictly increasing positive integers: positions of dents or barriers
/// along the axis.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn new(elems: Vec<u32>) -> Result<IndexSet, BuildError> {
        if elems.first().is_some_and(|&e| e == 0)
            || elems.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(BuildError::BadIndexSet(elems));
        }
        Ok(IndexSet(elems))
    }

    pub fn empty() -> IndexSet {
        IndexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Set union (both inputs are strictly increasing, so this is a merge).
    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let set: BTreeSet<u32> = self.iter().chain(other.iter()).collect();
        IndexSet(set.into_iter().collect())
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// The image `{n1 - w : w in self}`, re-sorted.
    pub fn mirrored(&self, n1: u32) -> IndexSet {
        let mut v: Vec<u32> = self.iter().map(|w| n1 - w).collect();
        v.reverse();
        IndexSet(v)
    }

    /// All elements shifted one position to the left. Requires `1 ∉ self`.
    pub fn shifted_left(&self) -> Result<IndexSet, BuildError> {
        if self.contains(1) {
            return Err(BuildError::BadIndexSet(self.0.clone()));
        }
        Ok(IndexSet(self.iter().map(|v| v - 1).collect()))
    }

    /// Insert one element (no-op if already present).
    pub fn with(&self, v: u32) -> IndexSet {
        let mut set: BTreeSet<u32> = self.iter().collect();
        set.insert(v);
        IndexSet(set.into_iter().collect())
    }

    pub fn without(&self, v: u32) -> IndexSet {
        IndexSet(self.iter().filter(|&w| w != v).collect())
    }
}

impl TryFrom<Vec<u32>> for IndexSet {
    type Error = BuildError;
    fn try_from(v: Vec<u32>) -> Result<IndexSet, BuildError> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<u32> {
    fn from(s: IndexSet) -> Vec<u32> {
        s.0
    }
}

impl FromIterator<u32> for IndexSet {
    /// Collects from any iterator, sorting and deduplicating.
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> IndexSet {
        let set: BTreeSet<u32> = iter.into_iter().collect();
        IndexSet(set.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// A chain of triangular holes of alternating orientation along the axis.
/// Zero side-lengths are allowed; they occupy no positions but still flip
/// the alternation, which is how parities get padded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fern {
    pub lengths: Vec<u32>,
    pub first: Orientation,
}

impl Fern {
    pub fn new(lengths: Vec<u32>, first: Orientation) -> Fern {
        Fern { lengths, first }
    }

    pub fn empty() -> Fern {
        Fern {
            lengths: Vec::new(),
            first: Orientation::Up,
        }
    }

    /// Orientation of the i-th triangle (0-based).
    pub fn orientation(&self, i: usize) -> Orientation {
        if i % 2 == 0 {
            self.first
        } else {
            self.first.flipped()
        }
    }

    pub fn total(&self) -> u32 {
        self.lengths.iter().sum()
    }

    pub fn up_total(&self) -> u32 {
        self.oriented_total(Orientation::Up)
    }

    pub fn down_total(&self) -> u32 {
        self.oriented_total(Orientation::Down)
    }

    fn oriented_total(&self, o: Orientation) -> u32 {
        self.lengths
            .iter()
            .enumerate()
            .filter(|(i, _)| self.orientation(*i) == o)
            .map(|(_, &l)| l)
            .sum()
    }

    /// The fern reflected through a 180-degree rotation: order reversed and
    /// every orientation flipped.
    pub fn reflected(&self) -> Fern {
        let first = if self.lengths.is_empty() {
            self.first
        } else {
            self.orientation(self.lengths.len() - 1).flipped()
        };
        Fern {
            lengths: self.lengths.iter().rev().copied().collect(),
            first,
        }
    }

    /// Concatenation `self ++ tail`; the alternation must continue across
    /// the seam.
    pub fn joined(&self, tail: &Fern) -> Result<Fern, BuildError> {
        if self.lengths.is_empty() {
            return Ok(tail.clone());
        }
        if tail.lengths.is_empty() {
            return Ok(self.clone());
        }
        let last = self.orientation(self.lengths.len() - 1);
        if tail.first != last.flipped() {
            return Err(BuildError::FernAlternation);
        }
        let mut lengths = self.lengths.clone();
        lengths.extend_from_slice(&tail.lengths);
        Ok(Fern {
            lengths,
            first: self.first,
        })
    }
}

/// Declarative description of one region family instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum RegionSpec {
    Hex {
        a: u32,
        b: u32,
        c: u32,
    },
    T {
        a: u32,
        b: u32,
        dents: IndexSet,
    },
    S {
        seq: Vec<u32>,
    },
    H {
        x: u32,
        y: u32,
        u: IndexSet,
        d: IndexSet,
        b: IndexSet,
    },
    Cs {
        x: u32,
        y: u32,
        u: IndexSet,
        d: IndexSet,
        b: IndexSet,
    },
    R {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        gaps: Vec<u32>,
    },
    E {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        gaps: Vec<u32>,
    },
    Eprime {
        x: u32,
        y: u32,
        ferns: Vec<Fern>,
        gaps: Vec<u32>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_set_rejects_non_increasing_and_zero() {
        assert!(IndexSet::new(vec![1, 3, 4]).is_ok());
        assert!(IndexSet::new(vec![3, 1]).is_err());
        assert!(IndexSet::new(vec![2, 2]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
    }

    #[test]
    fn mirrored_set_stays_increasing() {
        let s = IndexSet::new(vec![1, 2, 6, 9]).unwrap();
        assert_eq!(s.mirrored(13).as_slice(), &[4, 7, 11, 12]);
    }

    #[test]
    fn fern_reflection_flips_and_reverses() {
        let f = Fern::new(vec![2, 0, 1], Orientation::Up);
        // orientations: up, down, up -> reflected: down, up, down
        let r = f.reflected();
        assert_eq!(r.lengths, vec![1, 0, 2]);
        assert_eq!(r.first, Orientation::Down);
        assert_eq!(f.up_total(), 3);
        assert_eq!(f.down_total(), 0);
        assert_eq!(r.down_total(), 3);
    }

    #[test]
    fn spec_json_shape() {
        let spec = RegionSpec::Cs {
            x: 2,
            y: 2,
            u: IndexSet::new(vec![1]).unwrap(),
            d: IndexSet::empty(),
            b: IndexSet::empty(),
        };
        let js = serde_json::to_string(&spec).unwrap();
        assert_eq!(js, r#"{"type":"cs","x":2,"y":2,"u":[1],"d":[],"b":[]}"#);
        let back: RegionSpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back, spec);

        let fern: Fern = serde_json::from_str(r#"{"lengths":[1,2],"first":"down"}"#).unwrap();
        assert_eq!(fern.first, Orientation::Down);
    }
}
