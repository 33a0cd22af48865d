use crate::error::{Error, Result};

use super::{CrossingKind, Diagram, Node, Semiarc};

impl Diagram {
    /// Inserts `count` positive kinks on the lowest-numbered semiarc of
    /// `component`.
    pub fn insert_kink(&self, component: usize, count: usize) -> Result<Diagram> {
        let site = self
            .components()
            .get(component)
            .ok_or(Error::BadComponent {
                index: component,
                count: self.component_count(),
            })?[0];
        Ok((0..count).fold(self.clone(), |d, _| d.kink_at(site)))
    }

    /// Inserts one positive kink `X+ s e e f` on semiarc `s`, with fresh
    /// `e, f`; the strand enters over and leaves under.
    pub fn kink_at(&self, s: Semiarc) -> Diagram {
        let m = self.max_semiarc();
        let (e, f) = (m + 1, m + 2);
        self.splice(
            s,
            vec![Node::crossing(CrossingKind::Positive, s.0, e, e, f)],
            Semiarc(f),
        )
    }

    /// Applies a framing vector: `w_i` kinks on component `i`.
    pub fn with_framing(&self, w: &FramingVector) -> Result<Diagram> {
        if w.values.len() != self.component_count() {
            return Err(Error::BadComponent {
                index: w.values.len(),
                count: self.component_count(),
            });
        }
        w.values
            .iter()
            .enumerate()
            .try_fold(self.clone(), |d, (i, &k)| d.insert_kink(i, k))
    }
}

/// Kink counts per component, each reduced mod `N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FramingVector {
    values: Vec<usize>,
    modulus: usize,
}

impl FramingVector {
    pub fn new(values: Vec<usize>, modulus: usize) -> Self {
        assert!(modulus >= 1, "framing modulus must be positive");
        let values = values.into_iter().map(|w| w % modulus).collect();
        FramingVector { values, modulus }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Every vector in `(Z_N)^c`, lexicographic.
    pub fn all(components: usize, modulus: usize) -> Vec<FramingVector> {
        let mut out = vec![FramingVector::new(vec![0; components], modulus)];
        for i in 0..components {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..modulus).map(move |k| {
                        let mut v = w.values.clone();
                        v[i] = k;
                        FramingVector::new(v, modulus)
                    })
                })
                .collect();
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin;

    #[test]
    fn zero_kinks_is_identity() {
        let d = builtin("vH0").unwrap();
        assert_eq!(d.insert_kink(0, 0).unwrap(), d);
    }

    #[test]
    fn one_kink_adds_node_and_two_semiarcs() {
        let d = builtin("unknot-kink+").unwrap().insert_kink(0, 1).unwrap();
        assert_eq!(d.nodes().len(), 2);
        assert_eq!(d.semiarc_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.serialize(), "X+ 4 2 2 1\nX+ 1 3 3 4\n");
    }

    #[test]
    fn kink_on_loop_replaces_it() {
        let d = crate::diagram::parse("O 1\n").unwrap().kink_at(Semiarc(1));
        assert_eq!(d.serialize(), "X+ 1 2 2 1\n");
    }

    #[test]
    fn bad_component() {
        let d = builtin("vH0").unwrap();
        assert_eq!(
            d.insert_kink(2, 1),
            Err(Error::BadComponent { index: 2, count: 2 })
        );
    }

    #[test]
    fn framing_vectors() {
        let all = FramingVector::all(2, 3);
        assert_eq!(all.len(), 9);
        assert_eq!(all[5].values(), &[1, 2]);
        assert_eq!(FramingVector::new(vec![7], 3).values(), &[1]);
        let d = builtin("vH0").unwrap().with_framing(&all[5]).unwrap();
        assert_eq!(d.semiarc_count(), 4 + 6);
        assert_eq!(d.component_count(), 2);
    }
}
