use std::fmt;
use std::str::FromStr;

use crate::error::CliError;

/// Largest strand count accepted from the command line.
pub const MAX_CLI_STRANDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidKind {
    Braid,
    Klein,
    Nk,
    Cyclic,
}

/// A parsed `--monoid` selector: `braid:<n>`, `klein`, `nk:<k>` or `cyclic:<n>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoidSpec {
    pub kind: MonoidKind,
    pub parameter: Option<u32>,
}

impl MonoidSpec {
    pub fn klein() -> Self {
        MonoidSpec {
            kind: MonoidKind::Klein,
            parameter: None,
        }
    }
}

impl FromStr for MonoidSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "klein" {
            return Ok(MonoidSpec::klein());
        }
        let (kind, param) = s.split_once(':').ok_or_else(|| {
            CliError::usage(format!(
                "unknown monoid `{s}`; expected braid:<n>, klein, nk:<k> or cyclic:<n>"
            ))
        })?;
        let kind = match kind {
            "braid" => MonoidKind::Braid,
            "nk" => MonoidKind::Nk,
            "cyclic" => MonoidKind::Cyclic,
            "klein" => return Err(CliError::usage("klein takes no parameter")),
            other => return Err(CliError::usage(format!("unknown monoid kind `{other}`"))),
        };
        let n: u32 = param
            .parse()
            .map_err(|_| CliError::usage(format!("`{param}` is not a natural number")))?;
        let ok = match kind {
            MonoidKind::Braid => (2..=MAX_CLI_STRANDS as u32).contains(&n),
            _ => n >= 1,
        };
        if !ok {
            return Err(CliError::usage(match kind {
                MonoidKind::Braid => format!("braid needs 2 <= n <= {MAX_CLI_STRANDS}, got {n}"),
                MonoidKind::Nk => String::from("nk needs k >= 1"),
                _ => String::from("cyclic needs n >= 1"),
            }));
        }
        Ok(MonoidSpec {
            kind,
            parameter: Some(n),
        })
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.parameter.unwrap_or(0);
        match self.kind {
            MonoidKind::Braid => write!(f, "braid:{p}"),
            MonoidKind::Klein => f.write_str("klein"),
            MonoidKind::Nk => write!(f, "nk:{p}"),
            MonoidKind::Cyclic => write!(f, "cyclic:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        for s in [
            "braid:2",
            "braid:8",
            "klein",
            "nk:1",
            "nk:5",
            "cyclic:1",
            "cyclic:12",
        ] {
            assert_eq!(s.parse::<MonoidSpec>().unwrap().to_string(), s);
        }
        for s in [
            "braid:1", "braid:9", "nk:0", "cyclic:0", "klein:2", "free:2", "braid", "braid:x", "",
        ] {
            assert!(s.parse::<MonoidSpec>().is_err(), "{s}");
        }
    }
}
