//! Axiom checks.
//!
//! Every check is written against [`Tables`], whose lookups may be unknown.
//! On a complete structure each check yields `Holds` or `Fails`; on a partial
//! assignment (used by the enumerator) a check only reports `Fails` when a
//! fully evaluated counterexample exists.

use std::fmt;

use serde::Serialize;

/// Lookups into possibly partial `B`, `V`, `T` tables (0-based).
pub(crate) trait Tables {
    fn order(&self) -> usize;
    fn bp(&self, x: usize, y: usize) -> Option<(usize, usize)>;
    fn b1(&self, x: usize, y: usize) -> Option<usize>;
    fn b2(&self, x: usize, y: usize) -> Option<usize>;
    fn vp(&self, x: usize, y: usize) -> Option<(usize, usize)>;
    fn v1(&self, x: usize, y: usize) -> Option<usize>;
    fn v2(&self, x: usize, y: usize) -> Option<usize>;
    fn tw(&self, x: usize) -> Option<usize>;
}

/// One named axiom check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Check {
    /// `B` is a bijection of `X×X`.
    BBijective,
    /// `V` is a bijection of `X×X`.
    VBijective,
    /// `T∘T = Id`.
    TInvolution,
    /// The sideways maps `S` and `vS` exist and are bijections.
    Sideways,
    /// `(S^{±1}∘Δ)_k` and `(vS^{±1}∘Δ)_k` are bijections for `k = 1, 2`.
    Diagonal,
    /// `(vS∘Δ)_1 = (vS∘Δ)_2`.
    VirtualKink,
    /// Set-theoretic Yang-Baxter equation for `B`.
    YangBaxterB,
    /// Set-theoretic Yang-Baxter equation for `V`.
    YangBaxterV,
    /// `(B×Id)(Id×V)(V×Id) = (Id×V)(V×Id)(Id×B)`.
    YangBaxterMixed,
    /// `(T×Id)V = V(Id×T)` and `(Id×T)V = V(T×Id)`.
    BarSlide,
    /// `(T×T)B(T×T) = VBV`.
    TwistCrossing,
    /// `V∘V = Id`.
    VInvolution,
    /// `(S∘Δ)_1 = (S∘Δ)_2`; optional, marks a biquandle.
    Biquandle,
}

impl Check {
    /// Checks that must hold for a twisted virtual birack, in report order.
    pub const REQUIRED: [Check; 12] = [
        Check::BBijective,
        Check::VBijective,
        Check::TInvolution,
        Check::Sideways,
        Check::Diagonal,
        Check::VirtualKink,
        Check::YangBaxterB,
        Check::YangBaxterV,
        Check::YangBaxterMixed,
        Check::BarSlide,
        Check::TwistCrossing,
        Check::VInvolution,
    ];

    /// Required checks that do not involve `T`.
    pub const TWIST_FREE: [Check; 9] = [
        Check::BBijective,
        Check::VBijective,
        Check::Sideways,
        Check::Diagonal,
        Check::VirtualKink,
        Check::YangBaxterB,
        Check::YangBaxterV,
        Check::YangBaxterMixed,
        Check::VInvolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::BBijective => "b-bijective",
            Check::VBijective => "v-bijective",
            Check::TInvolution => "t-involution",
            Check::Sideways => "sideways",
            Check::Diagonal => "diagonal",
            Check::VirtualKink => "virtual-kink",
            Check::YangBaxterB => "yang-baxter-b",
            Check::YangBaxterV => "yang-baxter-v",
            Check::YangBaxterMixed => "yang-baxter-mixed",
            Check::BarSlide => "bar-slide",
            Check::TwistCrossing => "twist-crossing",
            Check::VInvolution => "v-involution",
            Check::Biquandle => "biquandle",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Check::BBijective => "B is a bijection of X×X",
            Check::VBijective => "V is a bijection of X×X",
            Check::TInvolution => "T∘T = Id",
            Check::Sideways => "sideways maps S and vS exist and are bijective",
            Check::Diagonal => "(S^±1∘Δ)_k and (vS^±1∘Δ)_k are bijections",
            Check::VirtualKink => "(vS∘Δ)_1 = (vS∘Δ)_2",
            Check::YangBaxterB => "Yang-Baxter equation for B",
            Check::YangBaxterV => "Yang-Baxter equation for V",
            Check::YangBaxterMixed => "(B×I)(I×V)(V×I) = (I×V)(V×I)(I×B)",
            Check::BarSlide => "(T×I)V = V(I×T) and (I×T)V = V(T×I)",
            Check::TwistCrossing => "(T×T)B(T×T) = VBV",
            Check::VInvolution => "V∘V = Id",
            Check::Biquandle => "(S∘Δ)_1 = (S∘Δ)_2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a check on possibly partial tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl Verdict {
    fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::Holds,
        }
    }
}

/// Per-check pass/fail outcome for a complete structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    results: Vec<(Check, bool)>,
}

impl ValidationReport {
    pub(crate) fn of<S: Tables>(s: &S) -> Self {
        let results = Check::REQUIRED
            .iter()
            .chain(std::iter::once(&Check::Biquandle))
            .map(|&c| (c, check_verdict(c, s) == Verdict::Holds))
            .collect();
        ValidationReport { results }
    }

    /// True when every required check passes.
    pub fn is_valid(&self) -> bool {
        self.results
            .iter()
            .all(|&(c, ok)| ok || c == Check::Biquandle)
    }

    /// Required checks that failed, in report order.
    pub fn failures(&self) -> Vec<Check> {
        self.results
            .iter()
            .filter(|&&(c, ok)| !ok && c != Check::Biquandle)
            .map(|&(c, _)| c)
            .collect()
    }

    pub fn passed(&self, check: Check) -> bool {
        self.results
            .iter()
            .find(|(c, _)| *c == check)
            .is_some_and(|&(_, ok)| ok)
    }

    pub fn is_biquandle(&self) -> bool {
        self.passed(Check::Biquandle)
    }

    pub fn results(&self) -> &[(Check, bool)] {
        &self.results
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(c, ok) in &self.results {
            let tag = match (c, ok) {
                (Check::Biquandle, true) => "yes ",
                (Check::Biquandle, false) => "no  ",
                (_, true) => "PASS",
                (_, false) => "FAIL",
            };
            writeln!(f, "{tag} {:<18} {}", c.name(), c.description())?;
        }
        write!(
            f,
            "{}",
            if self.is_valid() {
                "valid twisted virtual birack"
            } else {
                "not a twisted virtual birack"
            }
        )
    }
}

pub(crate) fn check_verdict<S: Tables>(check: Check, s: &S) -> Verdict {
    match check {
        Check::BBijective => bijective(s.order(), |x, y| s.bp(x, y)),
        Check::VBijective => bijective(s.order(), |x, y| s.vp(x, y)),
        Check::TInvolution => pointwise(s.order(), |x| {
            let tx = s.tw(x)?;
            Some(s.tw(tx)? == x)
        }),
        Check::Sideways => columns_injective(s.order(), |x, y| s.b1(x, y), |x, y| s.b2(x, y)).and(
            columns_injective(s.order(), |x, y| s.v1(x, y), |x, y| s.v2(x, y)),
        ),
        Check::Diagonal => {
            diagonal(s.order(), |x, y| s.bp(x, y)).and(diagonal(s.order(), |x, y| s.vp(x, y)))
        }
        Check::VirtualKink => match complete_sideways(s.order(), |x, y| s.vp(x, y)) {
            Err(v) => v,
            Ok(vs) => {
                let n = s.order();
                if (0..n).all(|x| {
                    let (p, q) = vs[x * n + x];
                    p == q
                }) {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            }
        },
        Check::Biquandle => match complete_sideways(s.order(), |x, y| s.bp(x, y)) {
            Err(v) => v,
            Ok(sm) => {
                let n = s.order();
                if (0..n).all(|x| {
                    let (p, q) = sm[x * n + x];
                    p == q
                }) {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            }
        },
        Check::YangBaxterB => {
            let b = |x, y| s.bp(x, y);
            yang_baxter(s.order(), (b, b, b), (b, b, b))
        }
        Check::YangBaxterV => {
            let v = |x, y| s.vp(x, y);
            yang_baxter(s.order(), (v, v, v), (v, v, v))
        }
        Check::YangBaxterMixed => {
            let b = |x, y| s.bp(x, y);
            let v = |x, y| s.vp(x, y);
            yang_baxter(s.order(), (b, v, v), (v, v, b))
        }
        Check::BarSlide => pairwise(s.order(), |x, y| {
            let (v1, v2) = s.vp(x, y)?;
            let lhs = (s.tw(v1)?, v2);
            let rhs = s.vp(x, s.tw(y)?)?;
            Some(lhs == rhs)
        })
        .and(pairwise(s.order(), |x, y| {
            let (v1, v2) = s.vp(x, y)?;
            let lhs = (v1, s.tw(v2)?);
            let rhs = s.vp(s.tw(x)?, y)?;
            Some(lhs == rhs)
        })),
        Check::TwistCrossing => pairwise(s.order(), |x, y| {
            let (p, q) = s.bp(s.tw(x)?, s.tw(y)?)?;
            let lhs = (s.tw(p)?, s.tw(q)?);
            let (a, b) = s.vp(x, y)?;
            let (c, d) = s.bp(a, b)?;
            let rhs = s.vp(c, d)?;
            Some(lhs == rhs)
        }),
        Check::VInvolution => pairwise(s.order(), |x, y| {
            let (p, q) = s.vp(x, y)?;
            Some(s.vp(p, q)? == (x, y))
        }),
    }
}

fn pointwise(n: usize, pred: impl Fn(usize) -> Option<bool>) -> Verdict {
    let mut verdict = Verdict::Holds;
    for x in 0..n {
        match pred(x) {
            Some(false) => return Verdict::Fails,
            None => verdict = Verdict::Unknown,
            Some(true) => {}
        }
    }
    verdict
}

fn pairwise(n: usize, pred: impl Fn(usize, usize) -> Option<bool>) -> Verdict {
    pointwise(n * n, |i| pred(i / n, i % n))
}

fn bijective(n: usize, f: impl Fn(usize, usize) -> Option<(usize, usize)>) -> Verdict {
    let mut seen = vec![false; n * n];
    let mut verdict = Verdict::Holds;
    for x in 0..n {
        for y in 0..n {
            match f(x, y) {
                Some((p, q)) => {
                    if std::mem::replace(&mut seen[p * n + q], true) {
                        return Verdict::Fails;
                    }
                }
                None => verdict = Verdict::Unknown,
            }
        }
    }
    verdict
}

/// `(x,y) ↦ (F_1(x,y), x)` is bijective iff every `F_1(x,·)` is a permutation;
/// likewise `(x,y) ↦ (F_2(x,y), y)` and `F_2(·,y)`.
fn columns_injective(
    n: usize,
    first: impl Fn(usize, usize) -> Option<usize>,
    second: impl Fn(usize, usize) -> Option<usize>,
) -> Verdict {
    let mut verdict = Verdict::Holds;
    for a in 0..n {
        let mut seen1 = vec![false; n];
        let mut seen2 = vec![false; n];
        for b in 0..n {
            match first(a, b) {
                Some(p) if std::mem::replace(&mut seen1[p], true) => return Verdict::Fails,
                Some(_) => {}
                None => verdict = Verdict::Unknown,
            }
            match second(b, a) {
                Some(q) if std::mem::replace(&mut seen2[q], true) => return Verdict::Fails,
                Some(_) => {}
                None => verdict = Verdict::Unknown,
            }
        }
    }
    verdict
}

/// The sideways map of `F`, `S(F_1(x,y), x) = (F_2(x,y), y)`, as a table indexed
/// by `u*n + x`; `None` when `F` is not sideways invertible.
pub(crate) fn sideways_map(n: usize, f: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let mut s = vec![None; n * n];
    let mut hit = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (f1, f2) = f[x * n + y];
            let slot = &mut s[f1 * n + x];
            if slot.is_some() || std::mem::replace(&mut hit[f2 * n + y], true) {
                return None;
            }
            *slot = Some((f2, y));
        }
    }
    s.into_iter().collect()
}

/// Sideways map of a fully known `F`, or the verdict to report instead.
fn complete_sideways(
    n: usize,
    f: impl Fn(usize, usize) -> Option<(usize, usize)>,
) -> Result<Vec<(usize, usize)>, Verdict> {
    let table: Option<Vec<_>> = (0..n * n).map(|i| f(i / n, i % n)).collect();
    let table = table.ok_or(Verdict::Unknown)?;
    sideways_map(n, &table).ok_or(Verdict::Fails)
}

fn is_permutation(n: usize, mut values: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; n];
    values.all(|v| !std::mem::replace(&mut seen[v], true))
}

fn diagonal(n: usize, f: impl Fn(usize, usize) -> Option<(usize, usize)>) -> Verdict {
    let s = match complete_sideways(n, f) {
        Ok(s) => s,
        Err(v) => return v,
    };
    let s_inv = super::invert_pairs(n, &s).expect("sideways map is a bijection");
    let ok = [&s, &s_inv].iter().all(|m| {
        is_permutation(n, (0..n).map(|x| m[x * n + x].0))
            && is_permutation(n, (0..n).map(|x| m[x * n + x].1))
    });
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// `(F×I)(I×G)(H×I) = (I×P)(Q×I)(I×R)` on every triple, maps applied right to left.
fn yang_baxter<F, G, H, P, Q, R>(n: usize, lhs: (F, G, H), rhs: (P, Q, R)) -> Verdict
where
    F: Fn(usize, usize) -> Option<(usize, usize)>,
    G: Fn(usize, usize) -> Option<(usize, usize)>,
    H: Fn(usize, usize) -> Option<(usize, usize)>,
    P: Fn(usize, usize) -> Option<(usize, usize)>,
    Q: Fn(usize, usize) -> Option<(usize, usize)>,
    R: Fn(usize, usize) -> Option<(usize, usize)>,
{
    let (f, g, h) = lhs;
    let (p, q, r) = rhs;
    pointwise(n * n * n, |i| {
        let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
        let left = {
            let (a, b) = h(x, y)?;
            let (c, d) = g(b, z)?;
            let (e, f2) = f(a, c)?;
            (e, f2, d)
        };
        let right = {
            let (a, b) = r(y, z)?;
            let (c, d) = q(x, a)?;
            let (e, f2) = p(d, b)?;
            (c, e, f2)
        };
        Some(left == right)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birack::Structure;

    #[test]
    fn singleton_passes_everything() {
        let s = Structure::from_matrix(&[[1; 5]]).unwrap();
        let r = s.validate();
        assert!(r.is_valid());
        assert!(r.is_biquandle());
        assert!(r.failures().is_empty());
    }

    #[test]
    fn trivial_v_and_t_force_equal_components() {
        // B(x,y) = (y, 2x) over Z_3, V(x,y) = (y,x), T = Id
        let s = Structure::from_fns(3, |x, y| (y, 2 * x % 3), |x, y| (y, x), |x| x).unwrap();
        let r = s.validate();
        assert_eq!(r.failures(), vec![Check::TwistCrossing]);
    }

    #[test]
    fn non_bijective_b_is_reported_with_dependents() {
        let s = Structure::from_fns(2, |_, _| (0, 0), |x, y| (y, x), |x| x).unwrap();
        let failed = s.validate().failures();
        assert!(failed.contains(&Check::BBijective));
        assert!(failed.contains(&Check::Sideways));
        assert!(failed.contains(&Check::Diagonal));
        assert!(!failed.contains(&Check::VBijective));
    }

    #[test]
    fn non_involutive_v_is_caught() {
        // V(x,y) = (y+1, x+1) over Z_3 is bijective but V∘V ≠ Id
        let s = Structure::from_fns(3, |x, y| (y, x), |x, y| ((y + 1) % 3, (x + 1) % 3), |x| x)
            .unwrap();
        assert!(s.validate().failures().contains(&Check::VInvolution));
    }

    #[test]
    fn sideways_map_relation() {
        let s = Structure::from_fns(3, |x, y| (2 * y % 3, x), |x, y| (y, x), |x| x).unwrap();
        let table: Vec<_> = (0..9).map(|i| s.b(i / 3, i % 3)).collect();
        let sm = sideways_map(3, &table).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let (b1, b2) = s.b(x, y);
                assert_eq!(sm[b1 * 3 + x], (b2, y));
            }
        }
    }

    #[test]
    fn partial_tables_report_unknown() {
        struct Empty;
        impl Tables for Empty {
            fn order(&self) -> usize {
                2
            }
            fn bp(&self, _: usize, _: usize) -> Option<(usize, usize)> {
                None
            }
            fn b1(&self, _: usize, _: usize) -> Option<usize> {
                None
            }
            fn b2(&self, _: usize, _: usize) -> Option<usize> {
                None
            }
            fn vp(&self, _: usize, _: usize) -> Option<(usize, usize)> {
                None
            }
            fn v1(&self, _: usize, _: usize) -> Option<usize> {
                None
            }
            fn v2(&self, _: usize, _: usize) -> Option<usize> {
                None
            }
            fn tw(&self, _: usize) -> Option<usize> {
                None
            }
        }
        for c in Check::REQUIRED {
            assert_eq!(check_verdict(c, &Empty), Verdict::Unknown, "{c}");
        }
    }
}
