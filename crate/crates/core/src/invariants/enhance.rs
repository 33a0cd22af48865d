use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::birack::{closure, subbirack_polynomial, TwistedVirtualBirack};
use crate::diagram::Diagram;

use super::{for_each_labeling, framed_diagrams, phi_integral, Labeling};

/// Which refinement of the counting invariant to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enhancement {
    Image,
    Writhe,
    Polynomial,
}

impl FromStr for Enhancement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "image" => Ok(Enhancement::Image),
            "writhe" => Ok(Enhancement::Writhe),
            "poly" | "polynomial" => Ok(Enhancement::Polynomial),
            _ => Err(format!(
                "unknown enhancement `{s}` (expected image, writhe or poly)"
            )),
        }
    }
}

/// An invariant value in canonical form; equal values have equal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnhancedValue {
    Integer(u64),
    /// Exponent of `u` to coefficient.
    UPolynomial(BTreeMap<usize, u64>),
    /// Exponent vector of `q_1, ..., q_c` to coefficient.
    QMultivariate(BTreeMap<Vec<usize>, u64>),
    /// Subbirack polynomial string to multiplicity.
    PolynomialMultiset(BTreeMap<String, u64>),
}

impl EnhancedValue {
    pub fn kind(&self) -> &'static str {
        match self {
            EnhancedValue::Integer(_) => "integer",
            EnhancedValue::UPolynomial(_) => "u-polynomial",
            EnhancedValue::QMultivariate(_) => "q-multivariate",
            EnhancedValue::PolynomialMultiset(_) => "polynomial-multiset",
        }
    }

    /// Value with every formal variable set to 1.
    pub fn at_one(&self) -> u64 {
        match self {
            EnhancedValue::Integer(k) => *k,
            EnhancedValue::UPolynomial(m) => m.values().sum(),
            EnhancedValue::QMultivariate(m) => m.values().sum(),
            EnhancedValue::PolynomialMultiset(m) => m.values().sum(),
        }
    }

    pub fn to_json(&self) -> Value {
        let value = match self {
            EnhancedValue::Integer(k) => json!(k),
            EnhancedValue::PolynomialMultiset(m) => json!(m),
            _ => json!(self.to_string()),
        };
        json!({ "kind": self.kind(), "value": value })
    }
}

fn term(coeff: u64, factors: Vec<String>) -> String {
    match (coeff, factors.is_empty()) {
        (c, true) => c.to_string(),
        (1, false) => factors.join("*"),
        (c, false) => format!("{c}*{}", factors.join("*")),
    }
}

fn power(var: &str, e: usize) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for EnhancedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = match self {
            EnhancedValue::Integer(k) => vec![k.to_string()],
            // highest degree first
            EnhancedValue::UPolynomial(m) => m
                .iter()
                .rev()
                .map(|(&e, &c)| term(c, power("u", e).into_iter().collect()))
                .collect(),
            EnhancedValue::QMultivariate(m) => m
                .iter()
                .map(|(w, &c)| {
                    let factors = w
                        .iter()
                        .enumerate()
                        .filter_map(|(i, &e)| power(&format!("q{}", i + 1), e))
                        .collect();
                    term(c, factors)
                })
                .collect(),
            EnhancedValue::PolynomialMultiset(m) => {
                return write!(
                    f,
                    "{{{}}}",
                    m.iter()
                        .map(|(p, c)| format!("{p}: {c}"))
                        .collect::<Vec<_>>()
                        .join("; ")
                );
            }
        };
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Folds a per-labeling key over all labelings of all framed diagrams.
fn tally<K: Ord + Send>(
    d: &Diagram,
    x: &TwistedVirtualBirack,
    key: impl Fn(&[usize], &Labeling) -> K + Sync,
) -> BTreeMap<K, u64> {
    framed_diagrams(d, x)
        .par_iter()
        .map(|(w, framed)| {
            let mut m = BTreeMap::new();
            for_each_labeling(framed, x, |l| {
                *m.entry(key(w.values(), l)).or_insert(0) += 1
            });
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        })
}

/// `Σ_w Σ_f u^{|Im f|}`, where `Im f` is the sub-structure generated by the
/// labels of `f`.
pub fn phi_image(d: &Diagram, x: &TwistedVirtualBirack) -> EnhancedValue {
    EnhancedValue::UPolynomial(tally(d, x, |_, l| {
        closure(x, &l.used()).expect("labels are in range").len()
    }))
}

/// `Σ_w (number of labelings of the w-framed diagram) q^w`.
pub fn phi_writhe(d: &Diagram, x: &TwistedVirtualBirack) -> EnhancedValue {
    EnhancedValue::QMultivariate(tally(d, x, |w, _| w.to_vec()))
}

/// Multiset of subbirack polynomials of the images of all labelings.
pub fn phi_polynomial(d: &Diagram, x: &TwistedVirtualBirack) -> EnhancedValue {
    EnhancedValue::PolynomialMultiset(tally(d, x, |_, l| {
        let image = closure(x, &l.used()).expect("labels are in range");
        subbirack_polynomial(x, &image)
            .expect("a closure is closed")
            .to_string()
    }))
}

/// Computes the requested enhancement, or the plain invariant.
pub fn enhanced(
    d: &Diagram,
    x: &TwistedVirtualBirack,
    which: Option<Enhancement>,
) -> EnhancedValue {
    match which {
        None => EnhancedValue::Integer(phi_integral(d, x)),
        Some(Enhancement::Image) => phi_image(d, x),
        Some(Enhancement::Writhe) => phi_writhe(d, x),
        Some(Enhancement::Polynomial) => phi_polynomial(d, x),
    }
}

/// `{"phi": Φ}` or `{"phi": Φ, "enhancement": {"kind": ..., "value": ...}}`.
pub fn invariant_json(d: &Diagram, x: &TwistedVirtualBirack, which: Option<Enhancement>) -> Value {
    let phi = phi_integral(d, x);
    match which {
        None => json!({ "phi": phi }),
        Some(_) => json!({ "phi": phi, "enhancement": enhanced(d, x, which).to_json() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{builtin, BUILTIN_NAMES};

    fn trivial() -> TwistedVirtualBirack {
        TwistedVirtualBirack::from_matrix(&[[1; 5]]).unwrap()
    }

    #[test]
    fn trivial_structure_values() {
        let x = trivial();
        let d = builtin("vH0").unwrap();
        assert_eq!(phi_image(&d, &x).to_string(), "u");
        assert_eq!(phi_writhe(&d, &x).to_string(), "1");
        let p = phi_polynomial(&d, &x);
        assert_eq!(p.at_one(), 1);
        match p {
            EnhancedValue::PolynomialMultiset(m) => assert_eq!(m.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_strings() {
        let u = EnhancedValue::UPolynomial(BTreeMap::from([(1, 2), (2, 3)]));
        assert_eq!(u.to_string(), "3*u^2 + 2*u");
        let q = EnhancedValue::QMultivariate(BTreeMap::from([(vec![0, 0], 4), (vec![1, 2], 1)]));
        assert_eq!(q.to_string(), "4 + q1*q2^2");
        assert_eq!(q.at_one(), 5);
        assert_eq!(EnhancedValue::UPolynomial(BTreeMap::new()).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = trivial();
        let d = builtin("unknot").unwrap();
        assert_eq!(invariant_json(&d, &x, None), json!({"phi": 1}));
        let v = invariant_json(&d, &x, Some(Enhancement::Image));
        assert_eq!(v["enhancement"]["kind"], "u-polynomial");
        assert_eq!(v["enhancement"]["value"], "u");
    }

    #[test]
    fn specializations_match_on_trivial_structure() {
        let x = trivial();
        for name in BUILTIN_NAMES {
            let d = builtin(name).unwrap();
            for e in [
                Enhancement::Image,
                Enhancement::Writhe,
                Enhancement::Polynomial,
            ] {
                assert_eq!(enhanced(&d, &x, Some(e)).at_one(), 1);
            }
        }
    }
}
