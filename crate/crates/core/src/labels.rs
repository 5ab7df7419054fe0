//! Edge labellings of the tetrahedron.
//!
//! A sextuple `(a, b, c, d, e, f)` labels the six edges so that the four
//! faces carry the triples `(a,b,c)`, `(c,d,e)`, `(e,f,a)`, `(f,d,b)` and the
//! opposite edge pairs are `(a,d)`, `(b,e)`, `(c,f)`. Label `n` stands for
//! the `(n+1)`-dimensional irreducible.

use std::fmt;

/// Slot indices of the four face triples inside a sextuple.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [2, 3, 4], [4, 5, 0], [5, 3, 1]];

/// Slot indices of the three opposite edge pairs; each pair shares no face.
pub const OPPOSITE_PAIRS: [[usize; 2]; 3] = [[0, 3], [1, 4], [2, 5]];

/// Six natural numbers labelling the edges of a tetrahedron.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelSextuple(pub [u32; 6]);

/// Triangle inequalities plus even-sum parity for one vertex/face triple.
pub fn is_admissible_triple(a: u32, b: u32, c: u32) -> bool {
    a <= b + c && b <= c + a && c <= a + b && (a + b + c) % 2 == 0
}

/// True iff all four face triples of the sextuple are admissible.
pub fn is_admissible_sextuple(labels: &LabelSextuple) -> bool {
    labels.is_admissible()
}

/// Componentwise scaling `(a, …, f) ↦ (ka, …, kf)`; preserves admissibility.
pub fn scale_labels(labels: &LabelSextuple, k: u32) -> LabelSextuple {
    labels.scale(k)
}

impl LabelSextuple {
    pub fn new(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Self {
        LabelSextuple([a, b, c, d, e, f])
    }

    pub fn a(&self) -> u32 {
        self.0[0]
    }
    pub fn b(&self) -> u32 {
        self.0[1]
    }
    pub fn c(&self) -> u32 {
        self.0[2]
    }
    pub fn d(&self) -> u32 {
        self.0[3]
    }
    pub fn e(&self) -> u32 {
        self.0[4]
    }
    pub fn f(&self) -> u32 {
        self.0[5]
    }

    /// The four face triples `(a,b,c)`, `(c,d,e)`, `(e,f,a)`, `(f,d,b)`.
    pub fn faces(&self) -> [[u32; 3]; 4] {
        FACES.map(|[i, j, k]| [self.0[i], self.0[j], self.0[k]])
    }

    pub fn is_admissible(&self) -> bool {
        self.faces().iter().all(|&[a, b, c]| is_admissible_triple(a, b, c))
    }

    pub fn scale(&self, k: u32) -> LabelSextuple {
        LabelSextuple(self.0.map(|x| x * k))
    }

    /// Sum of the six labels; constant over every Regge orbit.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl From<[u32; 6]> for LabelSextuple {
    fn from(v: [u32; 6]) -> Self {
        LabelSextuple(v)
    }
}

impl fmt::Display for LabelSextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, ff] = self.0;
        write!(f, "{},{},{},{},{},{}", a, b, c, d, e, ff)
    }
}

impl fmt::Debug for LabelSextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_admissibility() {
        assert!(is_admissible_triple(2, 2, 2));
        // parity failure
        assert!(!is_admissible_triple(1, 1, 1));
        // triangle failure
        assert!(!is_admissible_triple(1, 2, 5));
        assert!(is_admissible_triple(0, 0, 0));
        // degenerate triangle is allowed
        assert!(is_admissible_triple(2, 4, 2));
    }

    #[test]
    fn sextuple_admissibility() {
        assert!(LabelSextuple::new(2, 2, 2, 2, 2, 2).is_admissible());
        assert!(LabelSextuple::new(10, 6, 6, 10, 6, 6).is_admissible());
        // face (e,f,a) = (2,6,2) violates the triangle inequality
        assert!(!LabelSextuple::new(2, 2, 2, 2, 2, 6).is_admissible());
    }

    #[test]
    fn scaling() {
        let l = LabelSextuple::new(2, 2, 2, 2, 2, 2);
        assert_eq!(scale_labels(&l, 3), LabelSextuple::new(6, 6, 6, 6, 6, 6));
        let m = LabelSextuple::new(10, 6, 6, 10, 6, 6);
        assert_eq!(m.scale(1), m);
        assert_eq!(
            LabelSextuple::new(4, 6, 8, 10, 6, 8).scale(2),
            LabelSextuple::new(8, 12, 16, 20, 12, 16)
        );
    }

    #[test]
    fn faces_and_pairs_are_consistent() {
        // every opposite pair is disjoint from some face containing each end
        for [i, j] in OPPOSITE_PAIRS {
            for face in FACES {
                assert!(!(face.contains(&i) && face.contains(&j)));
            }
        }
        // each slot appears in exactly two faces
        for slot in 0..6 {
            let n = FACES.iter().filter(|f| f.contains(&slot)).count();
            assert_eq!(n, 2);
        }
    }
}
