//! Depth-first labeling search with propagation through node rules.
//!
//! Every node rule is a bijection from in-labels to out-labels, so a node
//! with all inputs (or all outputs) known fixes the rest. The search assigns
//! the first unlabeled semiarc in traversal order, propagates, and
//! backtracks on conflict.

use crate::birack::TwistedVirtualBirack;
use crate::diagram::{CrossingKind, Diagram, Node, Semiarc};

const UNSET: usize = usize::MAX;

struct Gate {
    arity: usize,
    ins: [usize; 2],
    outs: [usize; 2],
    /// Indexed by `in0 * n + in1` (or `in0` for arity 1).
    forward: Vec<(usize, usize)>,
    backward: Vec<(usize, usize)>,
}

pub(super) struct Solver {
    n: usize,
    arcs: Vec<Semiarc>,
    gates: Vec<Gate>,
    /// Gates touching each semiarc index.
    touching: Vec<Vec<usize>>,
}

impl Solver {
    pub fn new(d: &Diagram, x: &TwistedVirtualBirack) -> Self {
        let n = x.order();
        let arcs: Vec<Semiarc> = d.components().iter().flatten().copied().collect();
        let index = |s: Semiarc| {
            arcs.iter()
                .position(|&a| a == s)
                .expect("semiarc of diagram")
        };

        let bt: Vec<_> = (0..n * n).map(|i| x.b(i / n, i % n)).collect();
        let vt: Vec<_> = (0..n * n).map(|i| x.v(i / n, i % n)).collect();
        let b_inv = x.b_inverse().expect("validated B is invertible");
        let v_inv = x.v_inverse().expect("validated V is invertible");
        let swap = |p: (usize, usize)| (p.1, p.0);
        let at = |t: &[(usize, usize)], p: usize, q: usize| t[p * n + q];

        let pairs = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<(usize, usize)> {
            (0..n * n).map(|i| f(i / n, i % n)).collect()
        };

        let mut gates = Vec::new();
        for node in d.nodes() {
            let gate = match node {
                Node::Crossing {
                    kind,
                    inputs,
                    outputs,
                } => {
                    let (forward, backward) = match kind {
                        // (c, d) = swap B(a, b)
                        CrossingKind::Positive => (
                            pairs(&|a, b| swap(at(&bt, a, b))),
                            pairs(&|c, d| at(&b_inv, d, c)),
                        ),
                        // B(c, d) = (b, a)
                        CrossingKind::Negative => (
                            pairs(&|a, b| at(&b_inv, b, a)),
                            pairs(&|c, d| swap(at(&bt, c, d))),
                        ),
                        CrossingKind::Virtual => (
                            pairs(&|a, b| swap(at(&vt, a, b))),
                            pairs(&|c, d| at(&v_inv, d, c)),
                        ),
                    };
                    Gate {
                        arity: 2,
                        ins: [index(inputs[0]), index(inputs[1])],
                        outs: [index(outputs[0]), index(outputs[1])],
                        forward,
                        backward,
                    }
                }
                Node::Bar { input, output } => {
                    let mut t_inv = vec![0; n];
                    for e in 0..n {
                        t_inv[x.t(e)] = e;
                    }
                    Gate {
                        arity: 1,
                        ins: [index(*input), 0],
                        outs: [index(*output), 0],
                        forward: (0..n).map(|e| (x.t(e), 0)).collect(),
                        backward: t_inv.into_iter().map(|e| (e, 0)).collect(),
                    }
                }
                Node::Loop { arc } => Gate {
                    arity: 1,
                    ins: [index(*arc), 0],
                    outs: [index(*arc), 0],
                    forward: (0..n).map(|e| (e, 0)).collect(),
                    backward: (0..n).map(|e| (e, 0)).collect(),
                },
            };
            gates.push(gate);
        }

        let mut touching = vec![Vec::new(); arcs.len()];
        for (g, gate) in gates.iter().enumerate() {
            for &a in gate.ins[..gate.arity]
                .iter()
                .chain(&gate.outs[..gate.arity])
            {
                if !touching[a].contains(&g) {
                    touching[a].push(g);
                }
            }
        }
        Solver {
            n,
            arcs,
            gates,
            touching,
        }
    }

    /// Semiarcs in the order labels are reported.
    pub fn semiarcs(&self) -> &[Semiarc] {
        &self.arcs
    }

    /// Calls `f` with the labels (in [`Self::semiarcs`] order) of every labeling.
    pub fn run(&self, f: &mut dyn FnMut(&[usize])) {
        let mut vals = vec![UNSET; self.arcs.len()];
        let mut trail = Vec::new();
        self.search(0, &mut vals, &mut trail, f);
    }

    fn search(
        &self,
        from: usize,
        vals: &mut [usize],
        trail: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        let Some(next) = (from..vals.len()).find(|&i| vals[i] == UNSET) else {
            f(vals);
            return;
        };
        for e in 0..self.n {
            let mark = trail.len();
            vals[next] = e;
            trail.push(next);
            if self.propagate(next, vals, trail) {
                self.search(next + 1, vals, trail, f);
            }
            for i in trail.drain(mark..) {
                vals[i] = UNSET;
            }
        }
    }

    /// Pushes consequences of assigning `start`; false on conflict.
    fn propagate(&self, start: usize, vals: &mut [usize], trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![start];
        while let Some(a) = queue.pop() {
            for &g in &self.touching[a] {
                let gate = &self.gates[g];
                let k = gate.arity;
                let key = |ports: &[usize; 2], vals: &[usize]| -> Option<usize> {
                    let xs = &ports[..k];
                    if xs.iter().any(|&p| vals[p] == UNSET) {
                        return None;
                    }
                    Some(xs.iter().fold(0, |acc, &p| acc * self.n + vals[p]))
                };
                let (targets, image) = if let Some(i) = key(&gate.ins, vals) {
                    (&gate.outs, gate.forward[i])
                } else if let Some(i) = key(&gate.outs, vals) {
                    (&gate.ins, gate.backward[i])
                } else {
                    continue;
                };
                for (&p, want) in targets[..k].iter().zip([image.0, image.1]) {
                    if vals[p] == UNSET {
                        vals[p] = want;
                        trail.push(p);
                        queue.push(p);
                    } else if vals[p] != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}
