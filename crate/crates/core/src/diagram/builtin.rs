use crate::error::{Error, Result};

use super::{parse, Diagram};

pub const BUILTIN_NAMES: [&str; 7] = [
    "unknot",
    "unknot-kink+",
    "hopf-classical",
    "vH0",
    "vH1a",
    "vH1b",
    "vH2",
];

fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        // a crossing-free circle drawn with a cancelling pair of bars
        "unknot" => "T 1 2\nT 2 1\n",
        "unknot-kink+" => "X+ 1 2 2 1\n",
        "hopf-classical" => "X+ 1 3 2 4\nX+ 4 2 3 1\n",
        // virtual Hopf link: component 1 = {1,2}, component 2 = {3,4}
        "vH0" => "X+ 1 3 2 4\nV 2 4 1 3\n",
        // one bar on the first component's arc through the virtual crossing
        "vH1a" => "X+ 1 4 2 5\nT 2 3\nV 3 5 1 4\n",
        // one bar on the second component's arc through the virtual crossing
        "vH1b" => "X+ 1 3 2 4\nV 2 5 1 3\nT 4 5\n",
        "vH2" => "X+ 1 4 2 5\nT 2 3\nV 3 6 1 4\nT 5 6\n",
        _ => return None,
    })
}

/// One of the [`BUILTIN_NAMES`] diagrams.
pub fn builtin(name: &str) -> Result<Diagram> {
    let t = text(name).ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
    Ok(parse(t).expect("builtin diagrams are well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<(usize, usize, usize)> = BUILTIN_NAMES
            .iter()
            .map(|n| {
                let d = builtin(n).unwrap();
                (d.nodes().len(), d.semiarc_count(), d.component_count())
            })
            .collect();
        assert_eq!(
            sizes,
            vec![
                (2, 2, 1),
                (1, 2, 1),
                (2, 4, 2),
                (2, 4, 2),
                (3, 5, 2),
                (3, 5, 2),
                (4, 6, 2)
            ]
        );
    }

    #[test]
    fn builtins_are_canonical() {
        for name in BUILTIN_NAMES {
            let d = builtin(name).unwrap();
            assert_eq!(d.to_canonical_text(), text(name).unwrap(), "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            builtin("trefoil"),
            Err(Error::UnknownBuiltin("trefoil".into()))
        );
    }
}
