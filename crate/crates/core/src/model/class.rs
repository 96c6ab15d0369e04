use super::{gap_sequence, GapSequence, Params, Vertex};

/// A rotation orbit of vertices.
///
/// `necklace` is the least rotation of the members' gap words, `period_d` the
/// number of times its primitive block repeats, `order = n / period_d` the
/// orbit size, and `base_vertex` the lexicographically least member (the
/// necklace anchored at element 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassInfo {
    pub necklace: GapSequence,
    pub period_d: u32,
    pub order: u32,
    pub base_vertex: Vertex,
}

/// The rotation class of `v`.
pub fn canonical_class(v: &Vertex, p: &Params) -> ClassInfo {
    ClassInfo::from_necklace(gap_sequence(v, p).canonical(), p)
}

/// Orbit size `n / d` of the class with gap word `g`.
pub fn class_order(g: &GapSequence, p: &Params) -> u32 {
    p.n / g.repetitions() as u32
}

impl ClassInfo {
    /// Class of an arbitrary rotation of a gap word.
    pub fn from_gaps(gaps: &GapSequence, p: &Params) -> ClassInfo {
        ClassInfo::from_necklace(gaps.canonical(), p)
    }

    /// `necklace` must already be in least rotation.
    pub(crate) fn from_necklace(necklace: GapSequence, p: &Params) -> ClassInfo {
        let d = necklace.repetitions() as u32;
        let base_vertex = necklace.realize(1, p);
        ClassInfo {
            period_d: d,
            order: p.n / d,
            base_vertex,
            necklace,
        }
    }

    /// `base_vertex + t`.
    pub fn member(&self, t: i64, p: &Params) -> Vertex {
        self.base_vertex.rotate(t, p)
    }

    pub fn contains(&self, v: &Vertex, p: &Params) -> bool {
        gap_sequence(v, p).canonical() == self.necklace
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit_size(v: &Vertex, p: &Params) -> u32 {
        (1..=p.n).find(|&t| v.rotate(t as i64, p) == *v).unwrap()
    }

    #[test]
    fn small_classes() {
        let p = Params::new(9, 3, 2).unwrap();
        let v = Vertex::from_elements(&[1, 3, 5], &p).unwrap();
        let c = canonical_class(&v, &p);
        assert_eq!(c.necklace.to_string(), "(1,1,4)");
        assert_eq!(c.order, 9);
        assert_eq!(orbit_size(&v, &p), 9);

        let flat = Vertex::from_elements(&[2, 5, 8], &p).unwrap();
        let c = canonical_class(&flat, &p);
        assert_eq!((c.order, c.period_d), (3, 3));
        assert_eq!(c.base_vertex.to_string(), "{1,4,7}");
    }

    #[test]
    fn table_orders() {
        let p = Params::new(36, 6, 3).unwrap();
        for (gaps, order) in [
            (vec![2, 2, 2, 2, 11, 11], 36),
            (vec![2, 2, 11, 2, 2, 11], 18),
            (vec![2, 8, 2, 8, 2, 8], 12),
            (vec![5; 6], 6),
        ] {
            let g = GapSequence::validated(gaps, &p).unwrap();
            assert_eq!(class_order(&g, &p), order);
            // any member, e.g. the word anchored at 7
            let v = g.realize(7, &p);
            assert_eq!(canonical_class(&v, &p).order, order);
            assert_eq!(orbit_size(&v, &p), order);
        }
    }

    #[test]
    fn uniform_word_must_sum_to_the_blank_count() {
        // 36 - 6 = 30 blanks, so the fully periodic class is (5)^6; (6)^6 is not a gap word here
        let p = Params::new(36, 6, 3).unwrap();
        assert!(GapSequence::validated(vec![6; 6], &p).is_err());
        assert_eq!(class_order(&GapSequence::new(vec![5; 6]), &p), 6);
    }

    #[test]
    fn rotations_of_a_word_share_a_class() {
        let p = Params::new(9, 3, 2).unwrap();
        let a = ClassInfo::from_gaps(&GapSequence::new(vec![1, 2, 3]), &p);
        let b = ClassInfo::from_gaps(&GapSequence::new(vec![2, 3, 1]), &p);
        let c = ClassInfo::from_gaps(&GapSequence::new(vec![3, 1, 2]), &p);
        let other = ClassInfo::from_gaps(&GapSequence::new(vec![1, 3, 2]), &p);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_ne!(a, other);
        assert_eq!(class_order(&GapSequence::new(vec![1, 2, 3]), &p), 9);
        assert_eq!(a.base_vertex.to_string(), "{1,3,6}");
    }
}
