//! Oriented twisted virtual link diagrams as port graphs.
//!
//! Every node has numbered in-ports and out-ports; a semiarc is an edge from
//! one out-port to one in-port. Crossings carry two strands, strand 1 being
//! the over-strand at classical crossings:
//!
//! ```text
//! X+ a b c d    positive classical crossing  (over-in a, under-in b, over-out c, under-out d)
//! X- a b c d    negative classical crossing  (same port order)
//! V  a b c d    virtual crossing             (strand 1: a -> c, strand 2: b -> d)
//! T  a b        twist bar                    (a -> b)
//! O  a          crossing-free circle on semiarc a
//! ```

mod builtin;
mod framing;
mod moves;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub use builtin::{builtin, BUILTIN_NAMES};
pub use framing::FramingVector;
pub use moves::{Direction, Move, MoveKind};
pub use parse::parse;

/// Semiarc identifier; positive in every text format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Semiarc(pub u32);

impl fmt::Display for Semiarc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    Virtual,
}

impl CrossingKind {
    pub fn is_classical(self) -> bool {
        self != CrossingKind::Virtual
    }

    fn token(self) -> &'static str {
        match self {
            CrossingKind::Positive => "X+",
            CrossingKind::Negative => "X-",
            CrossingKind::Virtual => "V",
        }
    }
}

/// A node of the port graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    /// Index 0 is strand 1 (over at classical crossings), index 1 is strand 2.
    Crossing {
        kind: CrossingKind,
        inputs: [Semiarc; 2],
        outputs: [Semiarc; 2],
    },
    Bar {
        input: Semiarc,
        output: Semiarc,
    },
    /// A component without any crossings or bars.
    Loop {
        arc: Semiarc,
    },
}

/// Semiarcs around a crossing read as a box with both strands entering at
/// the bottom: `(sw, se)` enter, `(nw, ne)` leave.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BoxPorts {
    pub sw: Semiarc,
    pub se: Semiarc,
    pub nw: Semiarc,
    pub ne: Semiarc,
}

impl Node {
    pub fn crossing(kind: CrossingKind, a: u32, b: u32, c: u32, d: u32) -> Node {
        Node::Crossing {
            kind,
            inputs: [Semiarc(a), Semiarc(b)],
            outputs: [Semiarc(c), Semiarc(d)],
        }
    }

    pub fn bar(a: u32, b: u32) -> Node {
        Node::Bar {
            input: Semiarc(a),
            output: Semiarc(b),
        }
    }

    pub fn inputs(&self) -> &[Semiarc] {
        match self {
            Node::Crossing { inputs, .. } => inputs,
            Node::Bar { input, .. } => std::slice::from_ref(input),
            Node::Loop { arc } => std::slice::from_ref(arc),
        }
    }

    pub fn outputs(&self) -> &[Semiarc] {
        match self {
            Node::Crossing { outputs, .. } => outputs,
            Node::Bar { output, .. } => std::slice::from_ref(output),
            Node::Loop { arc } => std::slice::from_ref(arc),
        }
    }

    pub(crate) fn inputs_mut(&mut self) -> &mut [Semiarc] {
        match self {
            Node::Crossing { inputs, .. } => inputs,
            Node::Bar { input, .. } => std::slice::from_mut(input),
            Node::Loop { arc } => std::slice::from_mut(arc),
        }
    }

    pub(crate) fn outputs_mut(&mut self) -> &mut [Semiarc] {
        match self {
            Node::Crossing { outputs, .. } => outputs,
            Node::Bar { output, .. } => std::slice::from_mut(output),
            Node::Loop { arc } => std::slice::from_mut(arc),
        }
    }

    /// Positions of the four semiarcs of a crossing in the upward box picture.
    pub(crate) fn box_ports(&self) -> Option<(CrossingKind, BoxPorts)> {
        match *self {
            Node::Crossing {
                kind: kind @ (CrossingKind::Positive | CrossingKind::Virtual),
                inputs,
                outputs,
            } => Some((
                kind,
                BoxPorts {
                    sw: inputs[0],
                    se: inputs[1],
                    nw: outputs[1],
                    ne: outputs[0],
                },
            )),
            Node::Crossing {
                kind: CrossingKind::Negative,
                inputs,
                outputs,
            } => Some((
                CrossingKind::Negative,
                BoxPorts {
                    sw: inputs[1],
                    se: inputs[0],
                    nw: outputs[0],
                    ne: outputs[1],
                },
            )),
            _ => None,
        }
    }

    pub(crate) fn from_box(kind: CrossingKind, p: BoxPorts) -> Node {
        match kind {
            CrossingKind::Negative => Node::Crossing {
                kind,
                inputs: [p.se, p.sw],
                outputs: [p.nw, p.ne],
            },
            _ => Node::Crossing {
                kind,
                inputs: [p.sw, p.se],
                outputs: [p.ne, p.nw],
            },
        }
    }

    /// For a classical crossing whose out-port feeds its own other in-port,
    /// the strand's entry and exit semiarcs.
    pub(crate) fn kink_ends(&self) -> Option<(Semiarc, Semiarc)> {
        match *self {
            Node::Crossing {
                kind,
                inputs,
                outputs,
            } if kind.is_classical() => (0..2)
                .find(|&k| outputs[k] == inputs[1 - k] && inputs[k] != outputs[1 - k])
                .map(|k| (inputs[k], outputs[1 - k])),
            _ => None,
        }
    }

    fn sort_key(&self) -> Semiarc {
        self.inputs()[0]
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Crossing {
                kind,
                inputs,
                outputs,
            } => write!(
                f,
                "{} {} {} {} {}",
                kind.token(),
                inputs[0],
                inputs[1],
                outputs[0],
                outputs[1]
            ),
            Node::Bar { input, output } => write!(f, "T {input} {output}"),
            Node::Loop { arc } => write!(f, "O {arc}"),
        }
    }
}

/// A closed, oriented diagram. Immutable; rewrites return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    nodes: Vec<Node>,
    components: Vec<Vec<Semiarc>>,
}

/// Where a semiarc ends: node index and in-port slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Port {
    pub node: usize,
    pub slot: usize,
}

impl Diagram {
    /// Checks port conservation and computes the components.
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidDiagram("diagram has no nodes".into()));
        }
        let mut ins: BTreeMap<Semiarc, usize> = BTreeMap::new();
        let mut outs: BTreeMap<Semiarc, usize> = BTreeMap::new();
        for node in &nodes {
            if let Node::Loop { arc } = node {
                if arc.0 == 0 {
                    return Err(Error::InvalidDiagram("semiarc ids must be positive".into()));
                }
            }
            for &a in node.inputs() {
                *ins.entry(a).or_insert(0) += 1;
            }
            for &a in node.outputs() {
                *outs.entry(a).or_insert(0) += 1;
            }
        }
        let all: BTreeSet<Semiarc> = ins.keys().chain(outs.keys()).copied().collect();
        for a in &all {
            if a.0 == 0 {
                return Err(Error::InvalidDiagram("semiarc ids must be positive".into()));
            }
            let (i, o) = (
                ins.get(a).copied().unwrap_or(0),
                outs.get(a).copied().unwrap_or(0),
            );
            if i != 1 || o != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "semiarc {a} is used {i} times as input and {o} times as output"
                )));
            }
        }
        let mut d = Diagram {
            nodes,
            components: Vec::new(),
        };
        d.components = d.compute_components();
        Ok(d)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Components as semiarc cycles, each starting at its lowest id, ordered
    /// by that id.
    pub fn components(&self) -> &[Vec<Semiarc>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn semiarcs(&self) -> Vec<Semiarc> {
        let mut v: Vec<Semiarc> = self
            .nodes
            .iter()
            .flat_map(|n| n.outputs().iter().copied())
            .collect();
        v.sort();
        v
    }

    pub fn semiarc_count(&self) -> usize {
        self.nodes.iter().map(|n| n.outputs().len()).sum()
    }

    pub fn max_semiarc(&self) -> u32 {
        self.semiarcs().last().map_or(0, |a| a.0)
    }

    /// Index of the component containing `s`.
    pub fn component_of(&self, s: Semiarc) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&s))
    }

    pub fn count_nodes(&self, pred: impl Fn(&Node) -> bool) -> usize {
        self.nodes.iter().filter(|n| pred(n)).count()
    }

    pub(crate) fn consumer(&self, s: Semiarc) -> Option<Port> {
        self.nodes.iter().enumerate().find_map(|(i, n)| {
            n.inputs()
                .iter()
                .position(|&a| a == s)
                .map(|slot| Port { node: i, slot })
        })
    }

    pub(crate) fn producer(&self, s: Semiarc) -> Option<Port> {
        self.nodes.iter().enumerate().find_map(|(i, n)| {
            n.outputs()
                .iter()
                .position(|&a| a == s)
                .map(|slot| Port { node: i, slot })
        })
    }

    /// The next semiarc along the strand.
    pub fn successor(&self, s: Semiarc) -> Option<Semiarc> {
        let p = self.consumer(s)?;
        Some(self.nodes[p.node].outputs()[p.slot])
    }

    fn compute_components(&self) -> Vec<Vec<Semiarc>> {
        let mut next: BTreeMap<Semiarc, Semiarc> = BTreeMap::new();
        for n in &self.nodes {
            for (&i, &o) in n.inputs().iter().zip(n.outputs()) {
                next.insert(i, o);
            }
        }
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in next.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut cur = next[&start];
            while cur != start {
                seen.insert(cur);
                cycle.push(cur);
                cur = next[&cur];
            }
            comps.push(cycle);
        }
        comps
    }

    /// Renumbers semiarcs 1, 2, ... in traversal order (components in order
    /// of lowest id, each from its lowest id) and sorts nodes by first input.
    pub fn canonicalize(&self) -> Diagram {
        let mut rename: BTreeMap<Semiarc, Semiarc> = BTreeMap::new();
        for a in self.components.iter().flatten() {
            let fresh = Semiarc(rename.len() as u32 + 1);
            rename.insert(*a, fresh);
        }
        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| {
                // a loop's input and output are one field, so read old ids first
                let (ins, outs) = (n.inputs().to_vec(), n.outputs().to_vec());
                let mut n = n.clone();
                for (a, old) in n.inputs_mut().iter_mut().zip(&ins) {
                    *a = rename[old];
                }
                for (a, old) in n.outputs_mut().iter_mut().zip(&outs) {
                    *a = rename[old];
                }
                n
            })
            .collect();
        nodes.sort_by_key(Node::sort_key);
        Diagram::new(nodes).expect("renaming preserves validity")
    }

    /// Text form, one node per line in stored order.
    pub fn serialize(&self) -> String {
        self.nodes.iter().map(|n| format!("{n}\n")).collect()
    }

    /// Text form of the canonical renumbering.
    pub fn to_canonical_text(&self) -> String {
        self.canonicalize().serialize()
    }

    /// Equality up to semiarc renumbering and node order.
    pub fn equivalent_to(&self, other: &Diagram) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Cuts semiarc `s` and threads it through `new_nodes`, which must consume
    /// `s` and produce `tail`; the former consumer of `s` then consumes `tail`.
    pub(crate) fn splice(&self, s: Semiarc, mut new_nodes: Vec<Node>, tail: Semiarc) -> Diagram {
        let port = self.consumer(s).expect("semiarc has a consumer");
        let mut nodes = self.nodes.clone();
        if let Node::Loop { .. } = nodes[port.node] {
            nodes.remove(port.node);
            for n in &mut new_nodes {
                for a in n.outputs_mut() {
                    if *a == tail {
                        *a = s;
                    }
                }
            }
        } else {
            nodes[port.node].inputs_mut()[port.slot] = tail;
        }
        nodes.extend(new_nodes);
        Diagram::new(nodes).expect("splice preserves port conservation")
    }

    /// Removes the nodes in `remove`, adds `add`, then reconnects: the
    /// consumer of `tail` consumes `head` instead. With every node of a
    /// component removed (`head == tail`), the component becomes a loop.
    pub(crate) fn excise(
        &self,
        remove: &[usize],
        add: Vec<Node>,
        head: Semiarc,
        tail: Semiarc,
    ) -> Diagram {
        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        nodes.extend(add);
        if head == tail {
            nodes.push(Node::Loop { arc: head });
        } else {
            let slot = nodes
                .iter_mut()
                .flat_map(|n| n.inputs_mut().iter_mut())
                .find(|a| **a == tail)
                .expect("tail is consumed outside the excised chain");
            *slot = head;
        }
        Diagram::new(nodes).expect("excision preserves port conservation")
    }

    /// Rebuilds with some nodes removed and others added.
    pub(crate) fn rebuild(&self, remove: &[usize], add: Vec<Node>) -> Result<Diagram> {
        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        nodes.extend(add);
        Diagram::new(nodes)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
