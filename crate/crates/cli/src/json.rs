//! JSON codecs for the composite values printed with `--json`.
//!
//! Every `encode_*` has a matching `decode_*` with
//! `decode(encode(v)) == v`; decoders validate what they read.

use lcm_core::klein::{AbelianImage, ConjugacyCertificate};
use lcm_core::torsion::{TorsionVerdict, TorsionWitness};
use lcm_core::{Fraction, LcmCertificate};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::frontend::Frontend;

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value, CliError> {
    v.get(name)
        .ok_or_else(|| CliError::usage(format!("missing field `{name}` in {v}")))
}

fn natural(v: &Value, name: &str) -> Result<u64, CliError> {
    field(v, name)?
        .as_u64()
        .ok_or_else(|| CliError::usage(format!("field `{name}` must be a natural number")))
}

fn text<'v>(v: &'v Value, name: &str) -> Result<&'v str, CliError> {
    field(v, name)?
        .as_str()
        .ok_or_else(|| CliError::usage(format!("field `{name}` must be a string")))
}

pub fn encode_certificate<F: Frontend + ?Sized>(m: &F, c: &LcmCertificate<F::Element>) -> Value {
    json!({
        "left": m.encode(&c.left),
        "right": m.encode(&c.right),
        "join": m.encode(&c.join),
        "leftComplement": m.encode(&c.left_comp),
        "rightComplement": m.encode(&c.right_comp),
    })
}

/// Rejects certificates whose products do not agree.
pub fn decode_certificate<F: Frontend + ?Sized>(
    m: &F,
    v: &Value,
) -> Result<LcmCertificate<F::Element>, CliError> {
    let cert = LcmCertificate {
        left: m.decode(field(v, "left")?)?,
        right: m.decode(field(v, "right")?)?,
        join: m.decode(field(v, "join")?)?,
        left_comp: m.decode(field(v, "leftComplement")?)?,
        right_comp: m.decode(field(v, "rightComplement")?)?,
    };
    if !cert.is_sound(m)? {
        return Err(CliError::usage("certificate products do not match its join"));
    }
    Ok(cert)
}

pub fn encode_fraction<F: Frontend + ?Sized>(m: &F, f: &Fraction<F::Element>) -> Value {
    json!({ "num": m.encode(&f.num), "den": m.encode(&f.den) })
}

pub fn decode_fraction<F: Frontend + ?Sized>(m: &F, v: &Value) -> Result<Fraction<F::Element>, CliError> {
    Ok(Fraction::new(
        m.decode(field(v, "num")?)?,
        m.decode(field(v, "den")?)?,
    ))
}

pub fn encode_verdict<F: Frontend + ?Sized>(m: &F, v: &TorsionVerdict<F::Element>) -> Value {
    match v {
        TorsionVerdict::NoTorsionUpTo(p) => json!({ "verdict": "none", "pMax": p }),
        TorsionVerdict::Witness(w) => json!({
            "verdict": "witness",
            "order": w.order,
            "conjugator": m.encode(&w.conjugator),
            "torsion": m.encode(&w.torsion),
        }),
    }
}

pub fn decode_verdict<F: Frontend + ?Sized>(
    m: &F,
    v: &Value,
) -> Result<TorsionVerdict<F::Element>, CliError> {
    match text(v, "verdict")? {
        "none" => Ok(TorsionVerdict::NoTorsionUpTo(natural(v, "pMax")? as usize)),
        "witness" => Ok(TorsionVerdict::Witness(TorsionWitness {
            order: natural(v, "order")? as usize,
            conjugator: m.decode(field(v, "conjugator")?)?,
            torsion: m.decode(field(v, "torsion")?)?,
        })),
        other => Err(CliError::usage(format!("unknown verdict `{other}`"))),
    }
}

fn encode_image(a: &AbelianImage) -> Value {
    json!({ "degree": a.degree, "parity": a.parity })
}

fn decode_image(v: &Value) -> Result<AbelianImage, CliError> {
    let degree = field(v, "degree")?
        .as_i64()
        .ok_or_else(|| CliError::usage("field `degree` must be an integer"))?;
    let parity = natural(v, "parity")?;
    if parity > 1 {
        return Err(CliError::usage("field `parity` must be 0 or 1"));
    }
    Ok(AbelianImage {
        degree,
        parity: parity as u8,
    })
}

pub fn encode_conjugacy(c: &ConjugacyCertificate) -> Value {
    match c {
        ConjugacyCertificate::NonConjugate { left, right } => json!({
            "verdict": "nonconjugate",
            "left": encode_image(left),
            "right": encode_image(right),
        }),
        ConjugacyCertificate::Inconclusive => json!({ "verdict": "inconclusive" }),
    }
}

pub fn decode_conjugacy(v: &Value) -> Result<ConjugacyCertificate, CliError> {
    match text(v, "verdict")? {
        "nonconjugate" => {
            let (left, right) = (
                decode_image(field(v, "left")?)?,
                decode_image(field(v, "right")?)?,
            );
            if left == right {
                return Err(CliError::usage("equal images cannot certify non-conjugacy"));
            }
            Ok(ConjugacyCertificate::NonConjugate { left, right })
        }
        "inconclusive" => Ok(ConjugacyCertificate::Inconclusive),
        other => Err(CliError::usage(format!("unknown verdict `{other}`"))),
    }
}

pub fn parse(input: &str) -> Result<Value, CliError> {
    Ok(serde_json::from_str(input)?)
}
