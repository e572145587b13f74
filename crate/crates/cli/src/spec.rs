//! Textual graph selectors: `C:<n>`, `P:<n>`, `L:<n>:<l>`,
//! `CP:<n>:<l>:<a0,a1,...>` and `g6:<string>`.

use std::fmt;
use std::str::FromStr;

use energy_core::{make_cycle, make_cycle_with_pendants, make_lollipop, make_path, parse_graph6, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Path(usize),
    Lollipop(usize, usize),
    CycleWithPendants(usize, usize, Vec<usize>),
    Graph6(String),
    /// `g6:-`: one graph6 string per line on stdin.
    Graph6Stdin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub input: String,
    pub token: String,
    pub reason: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse graph spec '{}': {} (at '{}')", self.input, self.reason, self.token)
    }
}

impl std::error::Error for SpecError {}

fn err(input: &str, token: &str, reason: impl Into<String>) -> SpecError {
    SpecError { input: input.into(), token: token.into(), reason: reason.into() }
}

fn number(input: &str, token: &str) -> Result<usize, SpecError> {
    token.parse().map_err(|_| err(input, token, "expected a nonnegative integer"))
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| err(s, s, "expected <kind>:<args>"))?;
        if kind == "g6" {
            return Ok(match rest {
                "-" => GraphSpec::Graph6Stdin,
                "" => return Err(err(s, rest, "empty graph6 string")),
                g6 => GraphSpec::Graph6(g6.to_string()),
            });
        }
        let parts: Vec<&str> = rest.split(':').collect();
        let arity = |k: usize| {
            if parts.len() == k {
                Ok(())
            } else {
                Err(err(s, rest, format!("{kind} takes {k} field(s), got {}", parts.len())))
            }
        };
        match kind {
            "C" => {
                arity(1)?;
                Ok(GraphSpec::Cycle(number(s, parts[0])?))
            }
            "P" => {
                arity(1)?;
                Ok(GraphSpec::Path(number(s, parts[0])?))
            }
            "L" => {
                arity(2)?;
                Ok(GraphSpec::Lollipop(number(s, parts[0])?, number(s, parts[1])?))
            }
            "CP" => {
                arity(3)?;
                let att = parts[2].split(',').map(|a| number(s, a)).collect::<Result<Vec<_>, _>>()?;
                Ok(GraphSpec::CycleWithPendants(number(s, parts[0])?, number(s, parts[1])?, att))
            }
            _ => Err(err(s, kind, "unknown kind; expected C, P, L, CP or g6")),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle(n) => write!(f, "C:{n}"),
            GraphSpec::Path(n) => write!(f, "P:{n}"),
            GraphSpec::Lollipop(n, l) => write!(f, "L:{n}:{l}"),
            GraphSpec::CycleWithPendants(n, l, a) => {
                let a: Vec<String> = a.iter().map(usize::to_string).collect();
                write!(f, "CP:{n}:{l}:{}", a.join(","))
            }
            GraphSpec::Graph6(g) => write!(f, "g6:{g}"),
            GraphSpec::Graph6Stdin => write!(f, "g6:-"),
        }
    }
}

impl GraphSpec {
    /// Builds the graph; `g6:-` has to be expanded by the caller first.
    pub fn build(&self) -> energy_core::Result<Graph> {
        match self {
            GraphSpec::Cycle(n) => make_cycle(*n),
            GraphSpec::Path(n) => make_path(*n),
            GraphSpec::Lollipop(n, l) => make_lollipop(*n, *l),
            GraphSpec::CycleWithPendants(n, l, a) => make_cycle_with_pendants(*n, *l, a),
            GraphSpec::Graph6(g) => parse_graph6(g),
            GraphSpec::Graph6Stdin => Err(energy_core::Error::InvalidParameters(
                "g6:- reads graphs from stdin and cannot be built directly".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        assert_eq!("C:5".parse::<GraphSpec>().unwrap(), GraphSpec::Cycle(5));
        assert_eq!("P:1".parse::<GraphSpec>().unwrap(), GraphSpec::Path(1));
        assert_eq!("L:7:6".parse::<GraphSpec>().unwrap(), GraphSpec::Lollipop(7, 6));
        assert_eq!(
            "CP:6:4:2,0,0,0".parse::<GraphSpec>().unwrap(),
            GraphSpec::CycleWithPendants(6, 4, vec![2, 0, 0, 0])
        );
        assert_eq!("g6:Dhc".parse::<GraphSpec>().unwrap(), GraphSpec::Graph6("Dhc".into()));
        assert_eq!("g6:-".parse::<GraphSpec>().unwrap(), GraphSpec::Graph6Stdin);
    }

    #[test]
    fn display_round_trips() {
        for s in ["C:5", "P:3", "L:9:6", "CP:5:3:1,1,0", "g6:Dhc", "g6:-"] {
            assert_eq!(s.parse::<GraphSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn errors_name_the_token() {
        let e = "L:7:x".parse::<GraphSpec>().unwrap_err();
        assert_eq!(e.token, "x");
        assert_eq!("Q:3".parse::<GraphSpec>().unwrap_err().token, "Q");
        assert!("C".parse::<GraphSpec>().is_err());
        assert!("L:7".parse::<GraphSpec>().is_err());
        assert!("CP:5:3:1,,0".parse::<GraphSpec>().is_err());
    }

    #[test]
    fn builds() {
        assert_eq!(GraphSpec::Lollipop(7, 6).build().unwrap().size(), 7);
        assert!(GraphSpec::CycleWithPendants(5, 4, vec![1, 1, 0, 0]).build().is_err());
        assert!(GraphSpec::Cycle(2).build().is_err());
    }
}
