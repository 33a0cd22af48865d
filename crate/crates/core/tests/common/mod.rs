//! Test fixtures and brute-force oracles written directly from the
//! definitions, sharing no code with the library's checks or solver.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use twisted_birack::birack::{format::parse_birack_stream, tsr_construct};
use twisted_birack::diagram::{builtin, CrossingKind, BUILTIN_NAMES};
use twisted_birack::{Diagram, Node, Structure, TwistedVirtualBirack};

pub fn x1() -> TwistedVirtualBirack {
    load(include_str!("../../data/x1.tvb"))
}

pub fn x2() -> TwistedVirtualBirack {
    load(include_str!("../../data/x2.tvb"))
}

fn load(text: &str) -> TwistedVirtualBirack {
    let mut all = parse_birack_stream(text).unwrap();
    TwistedVirtualBirack::new(all.remove(0)).unwrap()
}

/// The eight printed two-element structures, in printed order.
pub fn printed_pairs() -> Vec<Structure> {
    parse_birack_stream(include_str!("../../data/structures2.tvb")).unwrap()
}

pub fn trivial() -> TwistedVirtualBirack {
    TwistedVirtualBirack::from_matrix(&[[1; 5]]).unwrap()
}

/// Every `(m, t, r, v, T)` with `2 ≤ m ≤ max_m` satisfying the parameter
/// conditions, found by direct search.
pub fn tsr_tuples(max_m: u64) -> Vec<(u64, u64, u64, u64, u64)> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        let unit = |a: u64| (1..m).any(|b| a * b % m == 1);
        for t in (0..m).filter(|&a| unit(a)) {
            for r in (0..m).filter(|&a| unit(a)) {
                for v in (0..m).filter(|&a| unit(a)) {
                    if v * v % m * r % m != t {
                        continue;
                    }
                    for tc in (0..m).filter(|&a| a * a % m == 1) {
                        out.push((m, t, r, v, tc));
                    }
                }
            }
        }
    }
    out
}

/// Structures used by the invariant suites: trivial, the eight pairs, the
/// three-element example, three linear ones and one of rank 3.
pub fn test_structures() -> Vec<(String, TwistedVirtualBirack)> {
    let mut out = vec![("trivial".to_string(), trivial())];
    for (i, s) in printed_pairs().into_iter().enumerate() {
        out.push((
            format!("pair{}", i + 1),
            TwistedVirtualBirack::new(s).unwrap(),
        ));
    }
    out.push(("x2".into(), x2()));
    for (m, t, r, v, tc) in [(3, 1, 1, 1, 2), (3, 2, 2, 1, 2), (3, 1, 1, 2, 1)] {
        let x = tsr_construct(m, t, r, v, tc).unwrap();
        out.push((format!("tsr{m}-{t}-{r}-{v}-{tc}"), x));
    }
    // a rank-3 structure found by enumeration
    let cyclic = TwistedVirtualBirack::from_matrix(&[
        [1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 1],
        [2, 2, 2, 3, 3, 3, 3, 3, 3, 1, 1, 1, 2],
        [3, 3, 3, 1, 1, 1, 1, 1, 1, 2, 2, 2, 3],
    ])
    .unwrap();
    out.push(("cyclic3".into(), cyclic));
    out
}

/// [`test_structures`] plus a larger linear structure of rank 2.
pub fn move_structures() -> Vec<(String, TwistedVirtualBirack)> {
    let mut out = test_structures();
    out.push(("tsr5-4-1-2-1".into(), tsr_construct(5, 4, 1, 2, 1).unwrap()));
    out
}

pub fn builtins() -> Vec<(&'static str, Diagram)> {
    BUILTIN_NAMES
        .iter()
        .map(|&n| (n, builtin(n).unwrap()))
        .collect()
}

// ---------------------------------------------------------------------------
// axiom oracle

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn is_bijection(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> bool {
    all_pairs(n)
        .map(|(x, y)| f(x, y))
        .collect::<HashSet<_>>()
        .len()
        == n * n
}

/// The unique `S` with `S(F_1(x,y), x) = (F_2(x,y), y)`, if it exists as a
/// bijection.
fn sideways(
    n: usize,
    f: &dyn Fn(usize, usize) -> (usize, usize),
) -> Option<HashMap<(usize, usize), (usize, usize)>> {
    let mut s = HashMap::new();
    for (x, y) in all_pairs(n) {
        let (a, b) = f(x, y);
        if s.insert((a, x), (b, y)).is_some() {
            return None;
        }
    }
    let image: HashSet<_> = s.values().copied().collect();
    (s.len() == n * n && image.len() == n * n).then_some(s)
}

fn invert(m: &HashMap<(usize, usize), (usize, usize)>) -> HashMap<(usize, usize), (usize, usize)> {
    m.iter().map(|(&k, &v)| (v, k)).collect()
}

fn perm(n: usize, f: impl Fn(usize) -> usize) -> bool {
    (0..n).map(f).collect::<HashSet<_>>().len() == n
}

fn diagonal_ok(n: usize, s: &HashMap<(usize, usize), (usize, usize)>) -> bool {
    let si = invert(s);
    [s, &si]
        .iter()
        .all(|m| perm(n, |x| m[&(x, x)].0) && perm(n, |x| m[&(x, x)].1))
}

/// Yang-Baxter type identity `(P×I)(I×Q)(R×I) = (I×R')(Q'×I)(I×P')` on all triples.
fn braid(
    n: usize,
    lhs: [&dyn Fn(usize, usize) -> (usize, usize); 3],
    rhs: [&dyn Fn(usize, usize) -> (usize, usize); 3],
) -> bool {
    let left = |x: usize, y: usize, z: usize| {
        // apply right to left: lhs[2] on (1,2), lhs[1] on (2,3), lhs[0] on (1,2)
        let (a, b) = lhs[2](x, y);
        let (c, d) = lhs[1](b, z);
        let (e, f) = lhs[0](a, c);
        (e, f, d)
    };
    let right = |x: usize, y: usize, z: usize| {
        let (a, b) = rhs[2](y, z);
        let (c, d) = rhs[1](x, a);
        let (e, f) = rhs[0](d, b);
        (c, e, f)
    };
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| left(x, y, z) == right(x, y, z))))
}

/// Names of failed axioms, computed from the definitions.
pub fn oracle_failures(s: &Structure) -> Vec<&'static str> {
    let n = s.order();
    let b = |x, y| s.b(x, y);
    let v = |x, y| s.v(x, y);
    let t = |x| s.t(x);
    let mut failed = Vec::new();
    let mut need = |ok: bool, name: &'static str| {
        if !ok {
            failed.push(name)
        }
    };
    need(is_bijection(n, b), "b-bijective");
    need(is_bijection(n, v), "v-bijective");
    need((0..n).all(|x| t(t(x)) == x), "t-involution");
    let sb = sideways(n, &b);
    let sv = sideways(n, &v);
    need(sb.is_some() && sv.is_some(), "sideways");
    need(
        matches!((&sb, &sv), (Some(p), Some(q)) if diagonal_ok(n, p) && diagonal_ok(n, q)),
        "diagonal",
    );
    need(
        matches!(&sv, Some(q) if (0..n).all(|x| q[&(x, x)].0 == q[&(x, x)].1)),
        "virtual-kink",
    );
    need(braid(n, [&b, &b, &b], [&b, &b, &b]), "yang-baxter-b");
    need(braid(n, [&v, &v, &v], [&v, &v, &v]), "yang-baxter-v");
    need(braid(n, [&b, &v, &v], [&v, &v, &b]), "yang-baxter-mixed");
    need(
        all_pairs(n).all(|(x, y)| {
            let (p, q) = v(x, y);
            (t(p), q) == v(x, t(y)) && (p, t(q)) == v(t(x), y)
        }),
        "bar-slide",
    );
    need(
        all_pairs(n).all(|(x, y)| {
            let (p, q) = b(t(x), t(y));
            let (a, c) = v(x, y);
            let (d, e) = b(a, c);
            (t(p), t(q)) == v(d, e)
        }),
        "twist-crossing",
    );
    need(
        all_pairs(n).all(|(x, y)| {
            let (p, q) = v(x, y);
            v(p, q) == (x, y)
        }),
        "v-involution",
    );
    failed
}

/// Kink permutation read off a positive kink: `π(x) = B_1(x, e)` where
/// `B_2(x, e) = e`.
pub fn oracle_kink(s: &Structure) -> Vec<usize> {
    let n = s.order();
    (0..n)
        .map(|x| {
            let e = (0..n).find(|&e| s.b(x, e).1 == e).expect("kink closes");
            s.b(x, e).0
        })
        .collect()
}

pub fn order_of(p: &[usize]) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = cur.iter().map(|&i| p[i]).collect();
        k += 1;
    }
    k
}

// ---------------------------------------------------------------------------
// labeling oracle

/// Whether `labels` (indexed by semiarc id) satisfies every node of `d`.
fn satisfies(d: &Diagram, s: &Structure, labels: &BTreeMap<u32, usize>) -> bool {
    d.nodes().iter().all(|node| match node {
        Node::Crossing {
            kind,
            inputs,
            outputs,
        } => {
            let [a, b] = inputs.map(|x| labels[&x.0]);
            let [c, e] = outputs.map(|x| labels[&x.0]);
            match kind {
                CrossingKind::Positive => s.b(a, b) == (e, c),
                CrossingKind::Negative => s.b(c, e) == (b, a),
                CrossingKind::Virtual => s.v(a, b) == (e, c),
            }
        }
        Node::Bar { input, output } => s.t(labels[&input.0]) == labels[&output.0],
        Node::Loop { .. } => true,
    })
}

/// Labeling count by trying all `n^{#semiarcs}` assignments.
pub fn brute_force_count(d: &Diagram, s: &Structure) -> u64 {
    let arcs: Vec<u32> = d.semiarcs().iter().map(|a| a.0).collect();
    let n = s.order();
    let total = n.pow(arcs.len() as u32);
    let mut count = 0;
    for mut code in 0..total {
        let mut labels = BTreeMap::new();
        for &a in &arcs {
            labels.insert(a, code % n);
            code /= n;
        }
        if satisfies(d, s, &labels) {
            count += 1;
        }
    }
    count
}
