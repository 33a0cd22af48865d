use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{CrossingKind, Diagram, Node, Semiarc};

/// Parses the diagram text format; `#` starts a comment line.
pub fn parse(text: &str) -> Result<Diagram> {
    let mut nodes = Vec::new();
    let mut first_in: BTreeMap<Semiarc, usize> = BTreeMap::new();
    let mut first_out: BTreeMap<Semiarc, usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::DiagramParse { line, reason };
        let mut tokens = content.split_whitespace();
        let kind = tokens.next().expect("non-empty line has a token");
        let ids: Vec<u32> = tokens
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(err(format!("`{t}` is not a positive semiarc id"))),
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| {
            if ids.len() == k {
                Ok(())
            } else {
                Err(err(format!(
                    "`{kind}` takes {k} semiarcs, found {}",
                    ids.len()
                )))
            }
        };
        let node = match kind {
            "X+" | "X-" | "V" => {
                arity(4)?;
                let ck = match kind {
                    "X+" => CrossingKind::Positive,
                    "X-" => CrossingKind::Negative,
                    _ => CrossingKind::Virtual,
                };
                Node::crossing(ck, ids[0], ids[1], ids[2], ids[3])
            }
            "T" => {
                arity(2)?;
                Node::bar(ids[0], ids[1])
            }
            "O" => {
                arity(1)?;
                Node::Loop {
                    arc: Semiarc(ids[0]),
                }
            }
            other => return Err(err(format!("unknown node kind `{other}`"))),
        };
        for &a in node.inputs() {
            if first_in.insert(a, line).is_some() {
                return Err(err(format!("semiarc {a} used twice as an input")));
            }
        }
        for &a in node.outputs() {
            if first_out.insert(a, line).is_some() {
                return Err(err(format!("semiarc {a} used twice as an output")));
            }
        }
        nodes.push(node);
    }

    for (a, &line) in &first_out {
        if !first_in.contains_key(a) {
            return Err(Error::DiagramParse {
                line,
                reason: format!("semiarc {a} is never consumed"),
            });
        }
    }
    for (a, &line) in &first_in {
        if !first_out.contains_key(a) {
            return Err(Error::DiagramParse {
                line,
                reason: format!("semiarc {a} is never produced"),
            });
        }
    }
    if nodes.is_empty() {
        return Err(Error::DiagramParse {
            line: 1,
            reason: "diagram has no nodes".into(),
        });
    }
    Diagram::new(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virtual_hopf() {
        let d = parse("# virtual Hopf link\nX+ 1 3 2 4\nV 2 4 1 3\n").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.semiarc_count(), 4);
        assert_eq!(
            d.count_nodes(|n| matches!(
                n,
                Node::Crossing {
                    kind: CrossingKind::Positive,
                    ..
                }
            )),
            1
        );
        assert_eq!(
            d.count_nodes(|n| matches!(
                n,
                Node::Crossing {
                    kind: CrossingKind::Virtual,
                    ..
                }
            )),
            1
        );
    }

    #[test]
    fn twice_barred_unknot() {
        let d = parse("T 1 2\nT 2 1\n").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.semiarc_count(), 2);
    }

    #[test]
    fn errors() {
        let line_of = |t: &str| match parse(t) {
            Err(Error::DiagramParse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        // semiarc 3 never consumed
        assert_eq!(line_of("X+ 1 2 3 4\nT 4 1\nT 5 2\n"), 1);
        assert_eq!(line_of("T 1 2\nQ 2 1\n"), 2);
        assert_eq!(line_of("T 1 2\nT 1 2\n"), 2);
        assert_eq!(line_of("T 1 2 3\n"), 1);
        assert_eq!(line_of("T 0 0\n"), 1);
        assert_eq!(line_of("# nothing\n"), 1);
        assert_eq!(line_of("T 1 2\nT 3 1\n"), 1);
    }

    #[test]
    fn loops() {
        let d = parse("O 1\n").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.serialize(), "O 1\n");
    }
}
