use std::cmp::Ordering;
use std::fmt;

/// Vertex label. Labels are 1-based and never exceed [`MAX_VERTEX`].
pub type Vertex = u32;

/// Largest supported vertex label. Everything here is sized for desk-scale
/// instances, so vertex sets fit in a single 32-bit mask.
pub const MAX_VERTEX: Vertex = 30;

/// Set of vertex labels packed into a bitmask (bit `v - 1` holds label `v`).
///
/// Ordering is lexicographic on the ascending list of members, *not* numeric
/// on the mask: `{1,3} < {2}` because `[1,3] < [2]`. Edge lists and witness
/// sets throughout the crate rely on this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Panics if `v` is outside `1..=MAX_VERTEX`; label hygiene is enforced
    /// at parse/construction boundaries, so this is a programmer error.
    fn bit(v: Vertex) -> u32 {
        assert!(
            (1..=MAX_VERTEX).contains(&v),
            "vertex label {v} outside 1..={MAX_VERTEX}"
        );
        1 << (v - 1)
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        VertexSet(Self::bit(v))
    }

    /// `{1, …, n}`.
    pub fn full(n: Vertex) -> VertexSet {
        assert!(n <= MAX_VERTEX, "vertex count {n} exceeds {MAX_VERTEX}");
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    pub fn from_vertices(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & Self::bit(v) != 0
    }

    pub fn with(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 | Self::bit(v))
    }

    pub fn without(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 & !Self::bit(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Members strictly greater than `v`.
    pub fn above(self, v: Vertex) -> VertexSet {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        VertexSet(self.0 & !(u32::MAX >> (32 - v)))
    }

    pub fn min_vertex(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_vertex(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros())
        }
    }

    /// Ascending member iterator.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Members joined by single spaces: `"1 2 3"`. Used by the text formats.
    pub fn spaced(self) -> String {
        let labels: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        labels.join(" ")
    }
}

pub struct Iter(u32);

impl Iterator for Iter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() + 1;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &VertexSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = VertexSet::from_vertices(&[3, 1, 2]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![1, 2, 3]);
        assert!(s.contains(2));
        assert!(!s.contains(4));
        assert_eq!(s.without(2).to_vec(), vec![1, 3]);
        assert_eq!(s.min_vertex(), Some(1));
        assert_eq!(s.max_vertex(), Some(3));
        assert_eq!(VertexSet::EMPTY.min_vertex(), None);
        assert_eq!(VertexSet::full(4).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(30).len(), 30);
    }

    #[test]
    fn above_keeps_strictly_greater_members() {
        let s = VertexSet::from_vertices(&[1, 4, 5, 9]);
        assert_eq!(s.above(4).to_vec(), vec![5, 9]);
        assert_eq!(s.above(9), VertexSet::EMPTY);
        assert_eq!(s.above(1).to_vec(), vec![4, 5, 9]);
    }

    // The order is on ascending member lists, so {1,3} < {2} and a prefix
    // sorts before its extensions.
    #[test]
    fn order_is_lexicographic_on_member_lists() {
        let s = |vs: &[Vertex]| VertexSet::from_vertices(vs);
        assert!(s(&[1, 3]) < s(&[2]));
        assert!(s(&[2, 5, 7]) < s(&[3, 4, 5]));
        assert!(s(&[1]) < s(&[1, 2]));
        assert!(s(&[1, 2, 9]) < s(&[1, 3]));
        assert!(VertexSet::EMPTY < s(&[1]));
        assert!(s(&[2, 3]) < s(&[2, 4]));
    }

    #[test]
    fn display_and_spaced() {
        let s = VertexSet::from_vertices(&[7, 2, 30]);
        assert_eq!(format!("{s}"), "{2,7,30}");
        assert_eq!(s.spaced(), "2 7 30");
        assert_eq!(VertexSet::EMPTY.spaced(), "");
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn rejects_label_zero() {
        VertexSet::singleton(0);
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn rejects_label_beyond_cap() {
        VertexSet::singleton(31);
    }
}
