//! Twisted virtual biracks on a finite set `X = {x_1, ..., x_n}`.
//!
//! A structure consists of two invertible maps `B, V : X×X → X×X` (classical
//! and virtual crossings) and an involution `T : X → X` (twist bars). The
//! standard encoding is the `n × (4n+1)` block matrix `[U | L | vU | vL | T]`
//! where
//!
//! ```text
//! B(x_i, x_j) = (x_{U[j][i]}, x_{L[i][j]})
//! V(x_i, x_j) = (x_{vU[j][i]}, x_{vL[i][j]})
//! T(x_i)      =  x_{T[i]}
//! ```
//!
//! Note the transposed indexing of the upper blocks.

mod derive;
pub mod format;
mod sub;
mod tsr;
mod validate;

use std::ops::Deref;

use crate::error::{Error, Result};

pub use derive::{DerivedMaps, Flags};
pub use sub::{closure, is_homomorphism, subbirack_polynomial, SubbirackPolynomial};
pub use tsr::tsr_construct;
pub use validate::{Check, ValidationReport, Verdict};

pub(crate) use validate::{check_verdict, sideways_map, Tables};

/// Raw, unvalidated maps `B`, `V`, `T` on `n` elements (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Structure {
    n: usize,
    b: Vec<(usize, usize)>,
    v: Vec<(usize, usize)>,
    t: Vec<usize>,
}

impl Structure {
    /// Builds a structure from closures over 0-based elements.
    ///
    /// Returns an error if any produced value is out of range.
    pub fn from_fns(
        n: usize,
        b: impl Fn(usize, usize) -> (usize, usize),
        v: impl Fn(usize, usize) -> (usize, usize),
        t: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyEnumeration);
        }
        let mut bt = Vec::with_capacity(n * n);
        let mut vt = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                bt.push(b(x, y));
                vt.push(v(x, y));
            }
        }
        let tt: Vec<usize> = (0..n).map(t).collect();
        let bad = bt
            .iter()
            .chain(vt.iter())
            .flat_map(|&(p, q)| [p, q])
            .chain(tt.iter().copied())
            .find(|&e| e >= n);
        if let Some(e) = bad {
            return Err(Error::ElementOutOfRange(e + 1));
        }
        Ok(Structure {
            n,
            b: bt,
            v: vt,
            t: tt,
        })
    }

    /// Decodes the block matrix `[U|L|vU|vL|T]` with 1-based entries.
    pub fn from_matrix<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedMatrix {
                row: 0,
                col: 0,
                reason: "matrix has no rows".into(),
            });
        }
        let width = 4 * n + 1;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::MalformedMatrix {
                    row: i + 1,
                    col: row.len().min(width) + 1,
                    reason: format!("expected {width} entries, found {}", row.len()),
                });
            }
            if let Some(col) = row.iter().position(|&e| e == 0 || e > n) {
                return Err(Error::MalformedMatrix {
                    row: i + 1,
                    col: col + 1,
                    reason: format!("entry {} outside 1..={n}", row[col]),
                });
            }
        }
        let m = |i: usize, c: usize| rows[i].as_ref()[c] - 1;
        Structure::from_fns(
            n,
            |x, y| (m(y, x), m(x, n + y)),
            |x, y| (m(y, 2 * n + x), m(x, 3 * n + y)),
            |x| m(x, 4 * n),
        )
    }

    /// Encodes as the 1-based block matrix; exact inverse of [`Structure::from_matrix`].
    pub fn to_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut rows = vec![vec![0; 4 * n + 1]; n];
        for x in 0..n {
            for y in 0..n {
                let (b1, b2) = self.b(x, y);
                let (v1, v2) = self.v(x, y);
                rows[y][x] = b1 + 1;
                rows[x][n + y] = b2 + 1;
                rows[y][2 * n + x] = v1 + 1;
                rows[x][3 * n + y] = v2 + 1;
            }
            rows[x][4 * n] = self.t(x) + 1;
        }
        rows
    }

    /// The matrix flattened row-major; the sort key for enumeration output.
    pub fn flat_matrix(&self) -> Vec<usize> {
        self.to_matrix().concat()
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn b(&self, x: usize, y: usize) -> (usize, usize) {
        self.b[x * self.n + y]
    }

    #[inline]
    pub fn v(&self, x: usize, y: usize) -> (usize, usize) {
        self.v[x * self.n + y]
    }

    #[inline]
    pub fn t(&self, x: usize) -> usize {
        self.t[x]
    }

    /// The twist column as 0-based images.
    pub fn twist(&self) -> &[usize] {
        &self.t
    }

    /// Same `B` and `V`, different twist map.
    pub fn with_twist(&self, t: Vec<usize>) -> Result<Self> {
        if t.len() != self.n {
            return Err(Error::MalformedMatrix {
                row: t.len().min(self.n) + 1,
                col: 4 * self.n + 1,
                reason: format!("twist column has {} entries, expected {}", t.len(), self.n),
            });
        }
        if let Some(&e) = t.iter().find(|&&e| e >= self.n) {
            return Err(Error::ElementOutOfRange(e + 1));
        }
        Ok(Structure { t, ..self.clone() })
    }

    /// Runs every axiom check and reports each outcome.
    pub fn validate(&self) -> ValidationReport {
        ValidationReport::of(self)
    }

    /// Inverse table of `B` if it is a bijection.
    pub fn b_inverse(&self) -> Option<Vec<(usize, usize)>> {
        invert_pairs(self.n, &self.b)
    }

    /// Inverse table of `V` if it is a bijection.
    pub fn v_inverse(&self) -> Option<Vec<(usize, usize)>> {
        invert_pairs(self.n, &self.v)
    }
}

/// Inverts a table of pairs indexed by `x*n + y`.
pub(crate) fn invert_pairs(n: usize, map: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let mut inv = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            let (p, q) = map[x * n + y];
            let slot = &mut inv[p * n + q];
            if slot.is_some() {
                return None;
            }
            *slot = Some((x, y));
        }
    }
    inv.into_iter().collect()
}

impl Tables for Structure {
    fn order(&self) -> usize {
        self.n
    }
    fn bp(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        Some(self.b(x, y))
    }
    fn b1(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.b(x, y).0)
    }
    fn b2(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.b(x, y).1)
    }
    fn vp(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        Some(self.v(x, y))
    }
    fn v1(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.v(x, y).0)
    }
    fn v2(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.v(x, y).1)
    }
    fn tw(&self, x: usize) -> Option<usize> {
        Some(self.t(x))
    }
}

/// A structure that has passed every axiom check, together with its derived maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedVirtualBirack {
    structure: Structure,
    derived: DerivedMaps,
}

impl TwistedVirtualBirack {
    /// Validates `structure`; fails with the names of every failed check.
    pub fn new(structure: Structure) -> Result<Self> {
        let report = structure.validate();
        if !report.is_valid() {
            return Err(Error::AxiomFailure {
                failed: report
                    .failures()
                    .iter()
                    .map(|c| c.name().to_string())
                    .collect(),
            });
        }
        let derived = DerivedMaps::of(&structure)
            .expect("sideways maps exist for a structure that passed validation");
        Ok(TwistedVirtualBirack { structure, derived })
    }

    /// Decodes and validates a 1-based block matrix.
    pub fn from_matrix<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        Self::new(Structure::from_matrix(rows)?)
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn derived(&self) -> &DerivedMaps {
        &self.derived
    }

    /// Birack rank: the order of the kink permutation.
    pub fn rank(&self) -> usize {
        self.derived.rank
    }

    /// Name of the structure following the quandle/rack/biquandle/birack table.
    pub fn classify(&self) -> String {
        self.derived.classify()
    }

    pub fn into_structure(self) -> Structure {
        self.structure
    }
}

impl Deref for TwistedVirtualBirack {
    type Target = Structure;

    fn deref(&self) -> &Structure {
        &self.structure
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap(x: usize) -> usize {
        1 - x
    }

    #[test]
    fn decode_second_listed_matrix() {
        let s = Structure::from_matrix(&[[2; 9], [1; 9]]).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(s.b(x, y), (swap(y), swap(x)));
                assert_eq!(s.v(x, y), (swap(y), swap(x)));
            }
            assert_eq!(s.t(x), swap(x));
        }
    }

    #[test]
    fn decode_singleton() {
        let s = Structure::from_matrix(&[[1; 5]]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.b(0, 0), (0, 0));
        assert_eq!(s.v(0, 0), (0, 0));
        assert_eq!(s.t(0), 0);
    }

    #[test]
    fn decode_rejects_out_of_range_entry() {
        let mut rows = [[1usize; 9], [2; 9]];
        rows[1][6] = 3;
        match Structure::from_matrix(&rows) {
            Err(Error::MalformedMatrix { row, col, .. }) => assert_eq!((row, col), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn decode_rejects_ragged_rows() {
        let rows = vec![vec![1usize; 9], vec![1; 8]];
        assert!(matches!(
            Structure::from_matrix(&rows),
            Err(Error::MalformedMatrix { row: 2, .. })
        ));
    }

    #[test]
    fn matrix_round_trip_on_transposed_blocks() {
        let rows = vec![
            vec![2, 2, 1, 2, 2, 1, 1, 1, 1, 1, 1, 1, 2],
            vec![1, 1, 2, 1, 1, 2, 2, 2, 2, 2, 2, 2, 1],
            vec![3; 13],
        ];
        let s = Structure::from_matrix(&rows).unwrap();
        assert_eq!(s.to_matrix(), rows);
        // U[1][3] = 1 means B_1(x_3, x_1) = x_1
        assert_eq!(s.b(2, 0).0, 0);
    }

    #[test]
    fn with_twist_checks_length() {
        let s = Structure::from_matrix(&[[1; 5]]).unwrap();
        assert!(s.with_twist(vec![0, 0]).is_err());
        assert!(s.with_twist(vec![1]).is_err());
        assert_eq!(s.with_twist(vec![0]).unwrap(), s);
    }
}
