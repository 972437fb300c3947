//! Vertex subsets of the ground set `[m]` as fixed-width bitmasks.
//!
//! Every set of vertices handled by this crate (faces, minimal non-faces,
//! full-subcomplex indices, filling members) is a [`VertexSet`]. Vertices are
//! 0-based internally and 1-based in files and printed output.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the ground-set size. Full-subcomplex enumeration is `2^m`,
/// so one machine word is plenty; the cap is enforced at parse time.
pub const MAX_VERTICES: u32 = 24;

/// A subset of the ground set `[m]`, `m <= 24`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, 1, ..., m-1}`.
    pub fn full(m: u32) -> VertexSet {
        debug_assert!(m <= MAX_VERTICES);
        if m == 0 {
            VertexSet(0)
        } else {
            VertexSet((1u32 << m) - 1)
        }
    }

    pub fn singleton(v: u32) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u32) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_vertices<I: IntoIterator<Item = u32>>(vs: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in vs {
            s = s.with(v);
        }
        s
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: u32) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: u32) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: VertexSet) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement within an explicit ground set.
    pub fn complement_in(self, ground: VertexSet) -> VertexSet {
        debug_assert!(self.is_subset_of(ground));
        VertexSet(ground.0 & !self.0)
    }

    pub fn min_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self`, the empty set first, `self` last.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut sub: u32 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = VertexSet(sub);
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(cur)
        })
    }

    /// All subsets of `self` of cardinality `k`, in canonical order.
    pub fn subsets_of_size(self, k: u32) -> Vec<VertexSet> {
        let verts: Vec<u32> = self.iter().collect();
        let n = verts.len();
        let k = k as usize;
        if k > n {
            return Vec::new();
        }
        if k == 0 {
            return vec![VertexSet::EMPTY];
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VertexSet::from_vertices(idx.iter().map(|&i| verts[i])));
            let mut i = k as isize - 1;
            while i >= 0 && idx[i as usize] == i as usize + n - k {
                i -= 1;
            }
            if i < 0 {
                break;
            }
            let i = i as usize;
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out.sort();
        out
    }

    /// Lexicographic order on the ascending vertex lists: the set owning the
    /// smallest vertex of the symmetric difference comes first. With equal
    /// cardinalities this is the dictionary order `{1,2} < {1,3} < {2,3}`.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let v = diff.trailing_zeros();
        if self.0 & (1 << v) != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }

    /// `(cardinality, lex)` order used for minimal non-faces and filling
    /// search enumeration.
    pub fn card_lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then(self.lex_cmp(other))
    }
}

/// Canonical order: cardinality first, then numeric bitmask value. All stored
/// facet lists use this order so outputs are byte-for-byte reproducible.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the ascending list of 1-based vertices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for v in self.iter() {
            seq.serialize_element(&(v + 1))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = VertexSet;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of 1-based vertex indices")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<VertexSet, A::Error> {
                let mut s = VertexSet::EMPTY;
                while let Some(v) = seq.next_element::<u32>()? {
                    if v == 0 || v > MAX_VERTICES {
                        return Err(serde::de::Error::custom(format!(
                            "vertex {} out of range 1..={}",
                            v, MAX_VERTICES
                        )));
                    }
                    s = s.with(v - 1);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// Parse a 1-based vertex list into a set, validating the range.
pub fn vertex_set_from_one_based(vs: &[u32]) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for &v in vs {
        if v == 0 || v > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex {} out of range 1..={} (vertex cap exceeded)",
                v, MAX_VERTICES
            )));
        }
        s = s.with(v - 1);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_cardinality_then_bits() {
        let a = VertexSet::from_vertices([0, 1]); // {1,2}
        let b = VertexSet::from_vertices([2]); // {3}
        assert!(b < a);
        // same cardinality: {2,3} (bits 6) before {1,4} (bits 9)
        let c = VertexSet::from_vertices([1, 2]);
        let d = VertexSet::from_vertices([0, 3]);
        assert!(c < d);
    }

    #[test]
    fn lex_order_differs_from_canonical() {
        // {1,4} < {2,3} in lex, but the other way round numerically
        let c = VertexSet::from_vertices([1, 2]);
        let d = VertexSet::from_vertices([0, 3]);
        assert_eq!(d.lex_cmp(c), std::cmp::Ordering::Less);
        assert!(c < d);
    }

    #[test]
    fn subsets_enumeration() {
        let s = VertexSet::from_vertices([0, 2]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert_eq!(subs[3], s);
    }

    #[test]
    fn subsets_of_size() {
        let s = VertexSet::full(4);
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(s.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5), vec![]);
    }

    #[test]
    fn display_one_based() {
        let s = VertexSet::from_vertices([0, 2]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "∅");
    }

    #[test]
    fn serde_round_trip() {
        let s = VertexSet::from_vertices([0, 3, 5]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, "[1,4,6]");
        let back: VertexSet = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }
}
