//! Per-instance token names, text rendering and JSON encoding.

use lcm_core::braid::{BraidElement, PositiveBraids, Simple};
use lcm_core::klein::{KleinElement, KleinLetter, KleinMonoid, Tail};
use lcm_core::toy::{Cyclic, CyclicElement, FreeAbelian, VecElement};
use lcm_core::LcmMonoid;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::spec::{MonoidKind, MonoidSpec};

pub trait Frontend: LcmMonoid {
    fn spec(&self) -> MonoidSpec;

    /// The positive word a generator name stands for.
    fn expand(&self, name: &str) -> Option<Vec<usize>>;

    /// Canonical form, as printed by `nf`.
    fn show(&self, e: &Self::Element) -> String;

    /// Form used inside certificates, fractions and witnesses.
    fn show_word(&self, e: &Self::Element) -> String {
        self.show(e)
    }

    fn encode(&self, e: &Self::Element) -> Value;

    fn decode(&self, v: &Value) -> Result<Self::Element, CliError>;
}

fn malformed(what: &str, v: &Value) -> CliError {
    CliError::usage(format!("expected {what}, found {v}"))
}

fn index_after(name: &str, prefix: char, count: usize) -> Option<Vec<usize>> {
    let digits = name.strip_prefix(prefix)?;
    if digits.starts_with('0') || digits.starts_with('+') {
        return None;
    }
    let i: usize = digits.parse().ok()?;
    (1..=count).contains(&i).then(|| vec![i - 1])
}

fn naturals(v: &Value, what: &str) -> Result<Vec<u64>, CliError> {
    v.as_array()
        .ok_or_else(|| malformed(what, v))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| malformed(what, v)))
        .collect()
}

impl Frontend for PositiveBraids {
    fn spec(&self) -> MonoidSpec {
        MonoidSpec {
            kind: MonoidKind::Braid,
            parameter: Some(self.strands() as u32),
        }
    }

    fn expand(&self, name: &str) -> Option<Vec<usize>> {
        index_after(name, 's', self.strands() - 1)
    }

    /// Factors in one-line notation, `[3,2,1] [1,3,2]`.
    fn show(&self, e: &BraidElement) -> String {
        if e.is_identity() {
            return String::from("1");
        }
        e.factors()
            .iter()
            .map(|f| {
                let values: Vec<String> = f.one_line().iter().map(u8::to_string).collect();
                format!("[{}]", values.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn show_word(&self, e: &BraidElement) -> String {
        if e.is_identity() {
            return String::from("1");
        }
        e.word()
            .iter()
            .map(|g| format!("s{}", g + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn encode(&self, e: &BraidElement) -> Value {
        let factors: Vec<Vec<u8>> = e.factors().iter().map(Simple::one_line).collect();
        json!({ "strands": e.strands(), "factors": factors })
    }

    fn decode(&self, v: &Value) -> Result<BraidElement, CliError> {
        let what = "a braid {\"strands\", \"factors\"}";
        let strands = v
            .get("strands")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed(what, v))?;
        if strands != self.strands() as u64 {
            return Err(CliError::usage(format!(
                "braid on {strands} strands given to {}",
                self.spec()
            )));
        }
        let factors = v
            .get("factors")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed(what, v))?
            .iter()
            .map(|f| {
                let values = naturals(f, "a permutation")?
                    .into_iter()
                    .map(|x| u8::try_from(x).map_err(|_| malformed("a permutation", f)))
                    .collect::<Result<Vec<u8>, _>>()?;
                Simple::from_one_line(&values).ok_or_else(|| malformed("a permutation", f))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.from_factors(factors)?)
    }
}

impl Frontend for KleinMonoid {
    fn spec(&self) -> MonoidSpec {
        MonoidSpec::klein()
    }

    fn expand(&self, name: &str) -> Option<Vec<usize>> {
        match name {
            "x" => Some(vec![0]),
            "y" => Some(vec![1]),
            "D" => Some(vec![0, 0]),
            _ => None,
        }
    }

    fn show(&self, e: &KleinElement) -> String {
        e.to_string()
    }

    fn encode(&self, e: &KleinElement) -> Value {
        let tail: String = e
            .tail()
            .letters()
            .map(|l| match l {
                KleinLetter::X => 'x',
                KleinLetter::Y => 'y',
            })
            .collect();
        json!({ "delta": e.delta_power(), "tail": tail })
    }

    fn decode(&self, v: &Value) -> Result<KleinElement, CliError> {
        let what = "a Klein element {\"delta\", \"tail\"}";
        let delta = v
            .get("delta")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed(what, v))?;
        let text = v
            .get("tail")
            .and_then(Value::as_str)
            .ok_or_else(|| malformed(what, v))?;
        let letters = text
            .chars()
            .map(|c| match c {
                'x' => Ok(KleinLetter::X),
                'y' => Ok(KleinLetter::Y),
                _ => Err(malformed("a tail of x and y letters", v)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if letters.windows(2).any(|p| p[0] == p[1]) {
            return Err(CliError::usage(format!("tail `{text}` is not alternating")));
        }
        let tail = letters
            .first()
            .map_or(Tail::EMPTY, |&s| Tail::new(s, letters.len()));
        Ok(self.element(delta, tail))
    }
}

impl Frontend for FreeAbelian {
    fn spec(&self) -> MonoidSpec {
        MonoidSpec {
            kind: MonoidKind::Nk,
            parameter: Some(self.dimension() as u32),
        }
    }

    fn expand(&self, name: &str) -> Option<Vec<usize>> {
        index_after(name, 'e', self.dimension())
    }

    fn show(&self, e: &VecElement) -> String {
        let coords: Vec<String> = e.coords().iter().map(u64::to_string).collect();
        format!("({})", coords.join(","))
    }

    fn encode(&self, e: &VecElement) -> Value {
        json!({ "coords": e.coords() })
    }

    fn decode(&self, v: &Value) -> Result<VecElement, CliError> {
        let coords = v
            .get("coords")
            .ok_or_else(|| malformed("an element {\"coords\"}", v))?;
        Ok(self.element(&naturals(coords, "a list of naturals")?)?)
    }
}

impl Frontend for Cyclic {
    fn spec(&self) -> MonoidSpec {
        MonoidSpec {
            kind: MonoidKind::Cyclic,
            parameter: Some(self.modulus()),
        }
    }

    fn expand(&self, name: &str) -> Option<Vec<usize>> {
        index_after(name, 'e', 1)
    }

    /// `e1^r` for the residue `r`, `1` for zero.
    fn show(&self, e: &CyclicElement) -> String {
        match e.residue() {
            0 => String::from("1"),
            1 => String::from("e1"),
            r => format!("e1^{r}"),
        }
    }

    fn encode(&self, e: &CyclicElement) -> Value {
        json!({ "modulus": e.modulus(), "residue": e.residue() })
    }

    fn decode(&self, v: &Value) -> Result<CyclicElement, CliError> {
        let what = "an element {\"modulus\", \"residue\"}";
        let modulus = v
            .get("modulus")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed(what, v))?;
        if modulus != self.modulus() as u64 {
            return Err(CliError::usage(format!(
                "residue mod {modulus} given to {}",
                self.spec()
            )));
        }
        let residue = v
            .get("residue")
            .and_then(Value::as_u64)
            .ok_or_else(|| malformed(what, v))?;
        let residue = u32::try_from(residue).map_err(|_| malformed(what, v))?;
        Ok(self.element(residue)?)
    }
}
