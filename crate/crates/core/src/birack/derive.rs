use serde::Serialize;

use super::{invert_pairs, sideways_map, Structure};

/// Classification flags read off a structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// `(S∘Δ)_1 = (S∘Δ)_2`.
    pub is_biquandle: bool,
    /// `B_2(x,y) = x` for all `x, y`.
    pub is_rack: bool,
    /// `B∘B = Id`.
    pub b_involutory: bool,
    /// `V(x,y) = (y,x)`.
    pub v_trivial: bool,
    /// `T = Id`.
    pub t_trivial: bool,
}

/// Sideways maps, kink permutation and rank of a structure.
///
/// Pair tables are indexed by `x*n + y` and hold 0-based elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedMaps {
    pub s: Vec<(usize, usize)>,
    pub s_inv: Vec<(usize, usize)>,
    pub vs: Vec<(usize, usize)>,
    pub vs_inv: Vec<(usize, usize)>,
    /// Kink map `π = (S⁻¹∘Δ)_1 ∘ (S⁻¹∘Δ)_2⁻¹`.
    pub kink: Vec<usize>,
    /// Order of `π`.
    pub rank: usize,
    pub flags: Flags,
}

impl DerivedMaps {
    /// Derives everything from `s`; `None` if the sideways maps do not exist
    /// or the diagonal compositions are not bijections.
    pub fn of(s: &Structure) -> Option<Self> {
        let n = s.order();
        let b: Vec<_> = (0..n * n).map(|i| s.b(i / n, i % n)).collect();
        let v: Vec<_> = (0..n * n).map(|i| s.v(i / n, i % n)).collect();
        let sm = sideways_map(n, &b)?;
        let s_inv = invert_pairs(n, &sm)?;
        let vs = sideways_map(n, &v)?;
        let vs_inv = invert_pairs(n, &vs)?;

        let first: Vec<usize> = (0..n).map(|x| s_inv[x * n + x].0).collect();
        let second: Vec<usize> = (0..n).map(|x| s_inv[x * n + x].1).collect();
        let second_inv = invert_perm(&second)?;
        invert_perm(&first)?;
        let kink: Vec<usize> = (0..n).map(|x| first[second_inv[x]]).collect();
        let rank = perm_order(&kink);

        let flags = Flags {
            is_biquandle: (0..n).all(|x| sm[x * n + x].0 == sm[x * n + x].1),
            is_rack: (0..n * n).all(|i| b[i].1 == i / n),
            b_involutory: (0..n * n).all(|i| {
                let (p, q) = b[i];
                b[p * n + q] == (i / n, i % n)
            }),
            v_trivial: (0..n * n).all(|i| v[i] == (i % n, i / n)),
            t_trivial: (0..n).all(|x| s.t(x) == x),
        };

        Some(DerivedMaps {
            s: sm,
            s_inv,
            vs,
            vs_inv,
            kink,
            rank,
            flags,
        })
    }

    /// Structure name assembled from the rank, the second component of `B`,
    /// involutivity of `B`, and triviality of `V` and `T`.
    pub fn classify(&self) -> String {
        let rank_one = self.rank == 1;
        let base = match (rank_one, self.flags.is_rack) {
            (true, true) => "quandle",
            (false, true) => "rack",
            (true, false) => "biquandle",
            (false, false) => "birack",
        };
        let base = if self.flags.b_involutory {
            base.replacen("bi", "semi", 1)
        } else {
            base.to_string()
        };
        let mut name = String::new();
        if !self.flags.t_trivial {
            name.push_str("twisted ");
        }
        if !self.flags.v_trivial {
            name.push_str("virtual ");
        }
        name.push_str(&base);
        name
    }
}

fn invert_perm(p: &[usize]) -> Option<Vec<usize>> {
    let mut inv = vec![usize::MAX; p.len()];
    for (i, &x) in p.iter().enumerate() {
        if inv[x] != usize::MAX {
            return None;
        }
        inv[x] = i;
    }
    Some(inv)
}

/// Least `k ≥ 1` with `p^k = Id`.
pub(crate) fn perm_order(p: &[usize]) -> usize {
    let mut current: Vec<usize> = p.to_vec();
    let mut k = 1;
    while current.iter().enumerate().any(|(i, &x)| i != x) {
        current = current.iter().map(|&x| p[x]).collect();
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_structure_has_identity_kink() {
        let s = Structure::from_matrix(&[[2; 9], [1; 9]]).unwrap();
        let d = DerivedMaps::of(&s).unwrap();
        assert_eq!(d.kink, vec![0, 1]);
        assert_eq!(d.rank, 1);
    }

    #[test]
    fn singleton_is_a_quandle() {
        let s = Structure::from_matrix(&[[1; 5]]).unwrap();
        let d = DerivedMaps::of(&s).unwrap();
        assert_eq!(d.rank, 1);
        assert_eq!(d.classify(), "quandle");
    }

    #[test]
    fn linear_birack_rank_is_order_of_tr() {
        // B(x,y) = (2y, 3x) mod 7: π(x) = 6x, order 2
        let s =
            Structure::from_fns(7, |x, y| (2 * y % 7, 3 * x % 7), |x, y| (y, x), |x| x).unwrap();
        let d = DerivedMaps::of(&s).unwrap();
        assert_eq!(d.kink, (0..7).map(|x| 6 * x % 7).collect::<Vec<_>>());
        assert_eq!(d.rank, 2);
        assert_eq!(d.classify(), "birack");
    }

    #[test]
    fn perm_order_of_cycles() {
        assert_eq!(perm_order(&[0, 1, 2]), 1);
        assert_eq!(perm_order(&[1, 0, 2]), 2);
        assert_eq!(perm_order(&[1, 2, 0, 4, 3]), 6);
    }

    #[test]
    fn semi_substitution_only_touches_bi() {
        let mut d = DerivedMaps::of(&Structure::from_matrix(&[[1; 5]]).unwrap()).unwrap();
        d.flags.is_rack = false;
        assert_eq!(d.classify(), "semiquandle");
        d.rank = 2;
        assert_eq!(d.classify(), "semirack");
        d.flags.is_rack = true;
        assert_eq!(d.classify(), "rack");
        d.flags.t_trivial = false;
        d.flags.v_trivial = false;
        assert_eq!(d.classify(), "twisted virtual rack");
    }
}
