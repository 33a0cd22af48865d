use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

use super::Structure;

/// Least superset of `seed` closed under `B_1, B_2, V_1, V_2` and `T`.
pub fn closure(x: &Structure, seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    if seed.is_empty() {
        return Err(Error::EmptySeed);
    }
    if let Some(&e) = seed.iter().find(|&&e| e >= x.order()) {
        return Err(Error::ElementOutOfRange(e + 1));
    }
    let mut set = seed.clone();
    loop {
        let mut grown = set.clone();
        for &a in &set {
            grown.insert(x.t(a));
            for &b in &set {
                let (b1, b2) = x.b(a, b);
                let (v1, v2) = x.v(a, b);
                grown.extend([b1, b2, v1, v2]);
            }
        }
        if grown.len() == set.len() {
            return Ok(set);
        }
        set = grown;
    }
}

/// Number of formal variables `t_1, s_1, ..., t_5, s_5`.
const VARS: usize = 10;

/// A formal sum of monomials `t_1^{a_1} s_1^{b_1} ··· t_5^{a_5} s_5^{b_5}` with
/// positive integer coefficients, kept in canonical (sorted) form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubbirackPolynomial {
    terms: BTreeMap<[u32; VARS], u64>,
}

impl SubbirackPolynomial {
    /// Exponent vectors `(t_1, s_1, ..., t_5, s_5)` with their coefficients.
    pub fn terms(&self) -> &BTreeMap<[u32; VARS], u64> {
        &self.terms
    }

    /// Sum of coefficients, i.e. the number of elements contributing.
    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    fn add(&mut self, monomial: [u32; VARS]) {
        *self.terms.entry(monomial).or_insert(0) += 1;
    }
}

impl fmt::Display for SubbirackPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, &coeff)| {
                let mut factors: Vec<String> = Vec::new();
                if coeff != 1 {
                    factors.push(coeff.to_string());
                }
                for (k, &e) in exps.iter().enumerate() {
                    let var = format!("{}{}", if k % 2 == 0 { 't' } else { 's' }, k / 2 + 1);
                    match e {
                        0 => {}
                        1 => factors.push(var),
                        _ => factors.push(format!("{var}^{e}")),
                    }
                }
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

/// `p_{Y⊂X} = Σ_{x∈Y} Σ_i t_i^{c_i(x)} s_i^{r_i(x)}`.
///
/// For the four square blocks `M_i` of the matrix, `c_i(x_k)` counts rows `j`
/// with `M_i[j][k] = j` and `r_i(x_k)` counts columns `j` with `M_i[k][j] = k`,
/// over all of `X`. The twist column contributes `c_5 = r_5 = 1` exactly when
/// `x_k` is a fixed point of `T`.
pub fn subbirack_polynomial(x: &Structure, y: &BTreeSet<usize>) -> Result<SubbirackPolynomial> {
    if closure(x, y)? != *y {
        return Err(Error::NotClosed);
    }
    let n = x.order();
    let m = x.to_matrix();
    let entry = |block: usize, row: usize, col: usize| m[row][block * n + col] - 1;
    let mut poly = SubbirackPolynomial::default();
    for &k in y {
        let mut exps = [0u32; VARS];
        for block in 0..4 {
            exps[2 * block] = (0..n).filter(|&j| entry(block, j, k) == j).count() as u32;
            exps[2 * block + 1] = (0..n).filter(|&j| entry(block, k, j) == k).count() as u32;
        }
        let fixed = u32::from(x.t(k) == k);
        exps[8] = fixed;
        exps[9] = fixed;
        poly.add(exps);
    }
    Ok(poly)
}

/// Whether `f` (0-based images) intertwines `B`, `V` and `T` of `src` and `dst`.
pub fn is_homomorphism(f: &[usize], src: &Structure, dst: &Structure) -> bool {
    if f.len() != src.order() || f.iter().any(|&e| e >= dst.order()) {
        return false;
    }
    let n = src.order();
    (0..n).all(|a| dst.t(f[a]) == f[src.t(a)])
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let (p, q) = src.b(a, b);
                let (r, s) = src.v(a, b);
                dst.b(f[a], f[b]) == (f[p], f[q]) && dst.v(f[a], f[b]) == (f[r], f[s])
            })
        })
}
