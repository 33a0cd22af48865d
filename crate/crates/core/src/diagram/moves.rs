//! Local rewrites, each addressed by a semiarc.
//!
//! | kind                | forward (site `s`)                                      | inverse (site `s`)                        |
//! |---------------------|---------------------------------------------------------|-------------------------------------------|
//! | `bar-cancel`        | `s` joins two bars; both are removed                    | insert a pair of bars on `s`              |
//! | `bar-slide-virtual` | `s` runs from a bar into a virtual crossing; the bar moves to the far side | `s` runs from a virtual crossing into a bar; the bar moves back |
//! | `twist-conjugate`   | `s` enters a classical crossing whose four ends carry bars; becomes virtual, classical, virtual | `s` enters a classical crossing between two virtual crossings; becomes barred crossing |
//! | `kink-pair-cancel`  | `s` enters a positive kink followed by a negative kink (or the reverse); both are removed | insert a positive then negative kink on `s` |
//! | `kink-bar-swap`     | `s` runs from a bar into a kink; the bar moves past the kink | `s` runs from a kink into a bar; the bar moves back |
//!
//! Semiarcs not involved in a rewrite keep their ids; new ids are allocated
//! above the current maximum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{BoxPorts, CrossingKind, Diagram, Node, Semiarc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    BarCancel,
    BarSlideVirtual,
    TwistConjugate,
    KinkPairCancel,
    KinkBarSwap,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::BarCancel,
        MoveKind::BarSlideVirtual,
        MoveKind::TwistConjugate,
        MoveKind::KinkPairCancel,
        MoveKind::KinkBarSwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::BarCancel => "bar-cancel",
            MoveKind::BarSlideVirtual => "bar-slide-virtual",
            MoveKind::TwistConjugate => "twist-conjugate",
            MoveKind::KinkPairCancel => "kink-pair-cancel",
            MoveKind::KinkBarSwap => "kink-bar-swap",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown move `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub direction: Direction,
}

impl Move {
    pub fn forward(kind: MoveKind) -> Move {
        Move {
            kind,
            direction: Direction::Forward,
        }
    }

    pub fn inverse(kind: MoveKind) -> Move {
        Move {
            kind,
            direction: Direction::Inverse,
        }
    }

    /// Both directions of every kind.
    pub fn all() -> Vec<Move> {
        MoveKind::ALL
            .into_iter()
            .flat_map(|k| [Move::forward(k), Move::inverse(k)])
            .collect()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Forward => write!(f, "{}", self.kind),
            Direction::Inverse => write!(f, "{} (inverse)", self.kind),
        }
    }
}

impl Diagram {
    /// Applies `mv` at semiarc `site`.
    pub fn apply_move(&self, mv: Move, site: Semiarc) -> Result<Diagram> {
        let no_match = || Error::NoMatch {
            kind: mv.to_string(),
            site: site.0,
        };
        if self.consumer(site).is_none() {
            return Err(no_match());
        }
        let out = match (mv.kind, mv.direction) {
            (MoveKind::BarCancel, Direction::Forward) => self.bar_cancel(site),
            (MoveKind::BarCancel, Direction::Inverse) => Some(self.bar_insert(site)),
            (MoveKind::BarSlideVirtual, Direction::Forward) => self.bar_slide_forward(site),
            (MoveKind::BarSlideVirtual, Direction::Inverse) => self.bar_slide_back(site),
            (MoveKind::TwistConjugate, Direction::Forward) => self.twist_conjugate(site),
            (MoveKind::TwistConjugate, Direction::Inverse) => self.twist_unconjugate(site),
            (MoveKind::KinkPairCancel, Direction::Forward) => self.kink_pair_cancel(site),
            (MoveKind::KinkPairCancel, Direction::Inverse) => Some(self.kink_pair_insert(site)),
            (MoveKind::KinkBarSwap, Direction::Forward) => self.kink_bar_forward(site),
            (MoveKind::KinkBarSwap, Direction::Inverse) => self.kink_bar_back(site),
        };
        out.ok_or_else(no_match)
    }

    /// Semiarcs at which `mv` applies.
    pub fn applicable_sites(&self, mv: Move) -> Vec<Semiarc> {
        self.semiarcs()
            .into_iter()
            .filter(|&s| self.apply_move(mv, s).is_ok())
            .collect()
    }

    fn bar_cancel(&self, s: Semiarc) -> Option<Diagram> {
        let p = self.producer(s)?;
        let c = self.consumer(s)?;
        if p.node == c.node {
            return None;
        }
        let (Node::Bar { input: a, .. }, Node::Bar { output: b, .. }) =
            (&self.nodes[p.node], &self.nodes[c.node])
        else {
            return None;
        };
        // two bars forming a whole component leave a loop on the site
        let (head, tail) = if a == b { (s, s) } else { (*a, *b) };
        Some(self.excise(&[p.node, c.node], Vec::new(), head, tail))
    }

    fn bar_insert(&self, s: Semiarc) -> Diagram {
        let m = self.max_semiarc();
        let (e, f) = (m + 1, m + 2);
        self.splice(s, vec![Node::bar(s.0, e), Node::bar(e, f)], Semiarc(f))
    }

    fn bar_slide_forward(&self, s: Semiarc) -> Option<Diagram> {
        let p = self.producer(s)?;
        let c = self.consumer(s)?;
        let Node::Bar { input: a, .. } = self.nodes[p.node] else {
            return None;
        };
        let Node::Crossing {
            kind: CrossingKind::Virtual,
            mut inputs,
            mut outputs,
        } = self.nodes[c.node]
        else {
            return None;
        };
        let k = c.slot;
        let far = outputs[k];
        inputs[k] = a;
        outputs[k] = s;
        let v = Node::Crossing {
            kind: CrossingKind::Virtual,
            inputs,
            outputs,
        };
        self.rebuild(
            &[p.node, c.node],
            vec![
                v,
                Node::Bar {
                    input: s,
                    output: far,
                },
            ],
        )
        .ok()
    }

    fn bar_slide_back(&self, s: Semiarc) -> Option<Diagram> {
        let p = self.producer(s)?;
        let c = self.consumer(s)?;
        let Node::Bar { output: far, .. } = self.nodes[c.node] else {
            return None;
        };
        let Node::Crossing {
            kind: CrossingKind::Virtual,
            mut inputs,
            mut outputs,
        } = self.nodes[p.node]
        else {
            return None;
        };
        let k = p.slot;
        let a = inputs[k];
        inputs[k] = s;
        outputs[k] = far;
        let v = Node::Crossing {
            kind: CrossingKind::Virtual,
            inputs,
            outputs,
        };
        self.rebuild(
            &[p.node, c.node],
            vec![
                Node::Bar {
                    input: a,
                    output: s,
                },
                v,
            ],
        )
        .ok()
    }

    /// Crossing at which `s` enters on strand 1.
    fn classical_entered_by(&self, s: Semiarc) -> Option<(usize, CrossingKind, BoxPorts)> {
        let c = self.consumer(s)?;
        if c.slot != 0 {
            return None;
        }
        match self.nodes[c.node].box_ports()? {
            (kind, ports) if kind.is_classical() => Some((c.node, kind, ports)),
            _ => None,
        }
    }

    fn twist_conjugate(&self, s: Semiarc) -> Option<Diagram> {
        let (x, kind, old) = self.classical_entered_by(s)?;
        let bar_before = |a: Semiarc| match self.producer(a) {
            Some(p) => match self.nodes[p.node] {
                Node::Bar { input, .. } => Some((p.node, input)),
                _ => None,
            },
            None => None,
        };
        let bar_after = |a: Semiarc| match self.consumer(a) {
            Some(c) => match self.nodes[c.node] {
                Node::Bar { output, .. } => Some((c.node, output)),
                _ => None,
            },
            None => None,
        };
        let (b_sw, p) = bar_before(old.sw)?;
        let (b_se, q) = bar_before(old.se)?;
        let (b_nw, s_out) = bar_after(old.nw)?;
        let (b_ne, r) = bar_after(old.ne)?;
        let mut bars = [b_sw, b_se, b_nw, b_ne];
        bars.sort();
        if bars.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let (e, f, g, h) = (old.sw, old.se, old.ne, old.nw);
        let v1 = Node::from_box(
            CrossingKind::Virtual,
            BoxPorts {
                sw: p,
                se: q,
                nw: f,
                ne: e,
            },
        );
        let cross = Node::from_box(
            kind,
            BoxPorts {
                sw: f,
                se: e,
                nw: h,
                ne: g,
            },
        );
        let v2 = Node::from_box(
            CrossingKind::Virtual,
            BoxPorts {
                sw: h,
                se: g,
                nw: s_out,
                ne: r,
            },
        );
        self.rebuild(&[x, b_sw, b_se, b_nw, b_ne], vec![v1, cross, v2])
            .ok()
    }

    fn twist_unconjugate(&self, s: Semiarc) -> Option<Diagram> {
        let (x, kind, mid) = self.classical_entered_by(s)?;
        let virt = |i: usize| match self.nodes[i].box_ports() {
            Some((CrossingKind::Virtual, ports)) => Some(ports),
            _ => None,
        };
        let pf = self.producer(mid.sw)?;
        let pe = self.producer(mid.se)?;
        let ch = self.consumer(mid.nw)?;
        let cg = self.consumer(mid.ne)?;
        if pf.node != pe.node || ch.node != cg.node || pf.node == ch.node {
            return None;
        }
        let v1 = virt(pf.node)?;
        let v2 = virt(ch.node)?;
        if v1.nw != mid.sw || v1.ne != mid.se || v2.sw != mid.nw || v2.se != mid.ne {
            return None;
        }
        let (a_sw, a_se, a_ne, a_nw) = (mid.se, mid.sw, mid.ne, mid.nw);
        let cross = Node::from_box(
            kind,
            BoxPorts {
                sw: a_sw,
                se: a_se,
                nw: a_nw,
                ne: a_ne,
            },
        );
        let add = vec![
            Node::Bar {
                input: v1.sw,
                output: a_sw,
            },
            Node::Bar {
                input: v1.se,
                output: a_se,
            },
            cross,
            Node::Bar {
                input: a_nw,
                output: v2.nw,
            },
            Node::Bar {
                input: a_ne,
                output: v2.ne,
            },
        ];
        self.rebuild(&[x, pf.node, ch.node], add).ok()
    }

    /// A classical kink entered by `s`: node index, sign and exit semiarc.
    fn kink_entered_by(&self, s: Semiarc) -> Option<(usize, CrossingKind, Semiarc)> {
        let c = self.consumer(s)?;
        let node = &self.nodes[c.node];
        let (entry, exit) = node.kink_ends()?;
        match node {
            Node::Crossing { kind, .. } if entry == s => Some((c.node, *kind, exit)),
            _ => None,
        }
    }

    fn kink_pair_cancel(&self, s: Semiarc) -> Option<Diagram> {
        let (k1, sign1, mid) = self.kink_entered_by(s)?;
        let (k2, sign2, exit) = self.kink_entered_by(mid)?;
        if k1 == k2 || sign1 == sign2 {
            return None;
        }
        // only the canonical shapes: positive enters over, negative enters under
        let canonical = |i: usize| match self.nodes[i] {
            Node::Crossing {
                kind: CrossingKind::Positive,
                inputs,
                outputs,
            } => outputs[0] == inputs[1],
            Node::Crossing {
                kind: CrossingKind::Negative,
                inputs,
                outputs,
            } => outputs[1] == inputs[0],
            _ => false,
        };
        if !canonical(k1) || !canonical(k2) {
            return None;
        }
        Some(self.excise(&[k1, k2], Vec::new(), s, exit))
    }

    fn kink_pair_insert(&self, s: Semiarc) -> Diagram {
        let m = self.max_semiarc();
        let (e, f, g, h) = (m + 1, m + 2, m + 3, m + 4);
        self.splice(
            s,
            vec![
                Node::crossing(CrossingKind::Positive, s.0, e, e, f),
                Node::crossing(CrossingKind::Negative, g, f, h, g),
            ],
            Semiarc(h),
        )
    }

    fn kink_bar_forward(&self, s: Semiarc) -> Option<Diagram> {
        let p = self.producer(s)?;
        let Node::Bar { input: a, .. } = self.nodes[p.node] else {
            return None;
        };
        let (k, _, exit) = self.kink_entered_by(s)?;
        let mut kink = self.nodes[k].clone();
        for slot in kink.inputs_mut() {
            if *slot == s {
                *slot = a;
            }
        }
        for slot in kink.outputs_mut() {
            if *slot == exit {
                *slot = s;
            }
        }
        self.rebuild(
            &[p.node, k],
            vec![
                kink,
                Node::Bar {
                    input: s,
                    output: exit,
                },
            ],
        )
        .ok()
    }

    fn kink_bar_back(&self, s: Semiarc) -> Option<Diagram> {
        let c = self.consumer(s)?;
        let Node::Bar { output: far, .. } = self.nodes[c.node] else {
            return None;
        };
        let p = self.producer(s)?;
        let (entry, exit) = self.nodes[p.node].kink_ends()?;
        if exit != s {
            return None;
        }
        let mut kink = self.nodes[p.node].clone();
        for slot in kink.inputs_mut() {
            if *slot == entry {
                *slot = s;
            }
        }
        for slot in kink.outputs_mut() {
            if *slot == s {
                *slot = far;
            }
        }
        self.rebuild(
            &[p.node, c.node],
            vec![
                Node::Bar {
                    input: entry,
                    output: s,
                },
                kink,
            ],
        )
        .ok()
    }
}
