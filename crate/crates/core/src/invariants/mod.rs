//! Birack labelings of diagrams and the counting invariants built from them.
//!
//! # Labeling rules
//!
//! A labeling assigns an element to every semiarc so that each node relates
//! its labels as follows (`B(x, y) = (B_1(x, y), B_2(x, y))`, likewise `V`):
//!
//! ```text
//! X+ a b c d    (d, c) = B(a, b)     under-out, over-out from over-in, under-in
//! X- a b c d    (b, a) = B(c, d)     the same rule read from the outgoing side
//! V  a b c d    (d, c) = V(a, b)
//! T  a b        b = T(a)
//! O  a          no constraint
//! ```
//!
//! With these rules the positive kink `X+ s e e f` sends its entry label `x`
//! to `f = π(x)`, where `π` is the kink map, and the negative kink
//! `X- g f h g` undoes it.

mod enhance;
mod solver;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::birack::TwistedVirtualBirack;
use crate::diagram::{Diagram, FramingVector, Semiarc};

pub use enhance::{
    enhanced, invariant_json, phi_image, phi_polynomial, phi_writhe, EnhancedValue, Enhancement,
};

/// A total assignment of 0-based elements to semiarcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: BTreeMap<Semiarc, usize>,
}

impl Labeling {
    pub fn label(&self, s: Semiarc) -> Option<usize> {
        self.labels.get(&s).copied()
    }

    pub fn labels(&self) -> &BTreeMap<Semiarc, usize> {
        &self.labels
    }

    /// Elements used by this labeling.
    pub fn used(&self) -> std::collections::BTreeSet<usize> {
        self.labels.values().copied().collect()
    }
}

/// Number of labelings of `d` by `x`.
pub fn count_labelings(d: &Diagram, x: &TwistedVirtualBirack) -> u64 {
    let mut count = 0;
    solver::Solver::new(d, x).run(&mut |_| count += 1);
    count
}

/// Calls `f` once for every labeling of `d` by `x`.
pub fn for_each_labeling(d: &Diagram, x: &TwistedVirtualBirack, mut f: impl FnMut(&Labeling)) {
    let solver = solver::Solver::new(d, x);
    let arcs = solver.semiarcs().to_vec();
    solver.run(&mut |vals| {
        let labels = arcs.iter().copied().zip(vals.iter().copied()).collect();
        f(&Labeling { labels })
    });
}

/// All labelings of `d` by `x`.
pub fn labelings(d: &Diagram, x: &TwistedVirtualBirack) -> Vec<Labeling> {
    let mut out = Vec::new();
    for_each_labeling(d, x, |l| out.push(l.clone()));
    out
}

/// Every framing vector in `(Z_N)^c` with its framed diagram, `N` the rank.
pub fn framed_diagrams(d: &Diagram, x: &TwistedVirtualBirack) -> Vec<(FramingVector, Diagram)> {
    FramingVector::all(d.component_count(), x.rank())
        .into_iter()
        .map(|w| {
            let framed = d
                .with_framing(&w)
                .expect("framing has one entry per component");
            (w, framed)
        })
        .collect()
}

/// The integral counting invariant: labeling counts summed over one period
/// of framings per component.
pub fn phi_integral(d: &Diagram, x: &TwistedVirtualBirack) -> u64 {
    framed_diagrams(d, x)
        .par_iter()
        .map(|(_, framed)| count_labelings(framed, x))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin, parse};

    fn trivial() -> TwistedVirtualBirack {
        TwistedVirtualBirack::from_matrix(&[[1; 5]]).unwrap()
    }

    fn x1() -> TwistedVirtualBirack {
        TwistedVirtualBirack::from_matrix(&[[2; 9], [1; 9]]).unwrap()
    }

    #[test]
    fn trivial_structure_counts_one() {
        let x = trivial();
        for name in crate::diagram::BUILTIN_NAMES {
            let d = builtin(name).unwrap();
            assert_eq!(count_labelings(&d, &x), 1, "{name}");
            assert_eq!(phi_integral(&d, &x), 1, "{name}");
        }
    }

    #[test]
    fn free_circle_takes_any_label() {
        let d = parse("O 1\n").unwrap();
        assert_eq!(count_labelings(&d, &x1()), 2);
    }

    #[test]
    fn twice_barred_unknot_counts_elements() {
        let d = builtin("unknot").unwrap();
        assert_eq!(count_labelings(&d, &x1()), 2);
    }

    #[test]
    fn labelings_respect_bars() {
        let d = builtin("vH1a").unwrap();
        let x = x1();
        for l in labelings(&d, &x) {
            let a = l.label(Semiarc(2)).unwrap();
            assert_eq!(l.label(Semiarc(3)), Some(x.t(a)));
        }
    }
}
