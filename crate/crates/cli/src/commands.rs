//! One function per subcommand. Each returns the text to print and the
//! process exit code, or a [`CliError`].

use lcm_core::braid::PositiveBraids;
use lcm_core::klein::{ConjugacyCertificate, KleinMonoid};
use lcm_core::torsion::{build_pairs, torsion_check, TorsionVerdict};
use lcm_core::toy::{Cyclic, FreeAbelian};
use lcm_core::{Fraction, FractionGroup};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::frontend::Frontend;
use crate::json;
use crate::spec::{MonoidKind, MonoidSpec};
use crate::syntax::{parse_positive, parse_signed, DEFAULT_MAX_WORD_LEN};
use crate::verify::{run_verify, Suite, VerifyConfig};

pub const DEFAULT_PMAX: usize = 6;
/// Largest `|k|` accepted by `frac pow`.
pub const MAX_POWER: i64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
    pub max_word_len: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            max_word_len: DEFAULT_MAX_WORD_LEN,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FracOp {
    Eval(String),
    Eq(String, String),
    Mul(String, String),
    Inv(String),
    Pow(String, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Nf(String),
    Lcm(String, String),
    Torsion { word: String, pmax: usize },
    Verify { suite: Suite, config: VerifyConfig },
    Conjcheck(String, String),
    Frac(FracOp),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn emit(opts: &Options, text: String, value: Value) -> String {
    if opts.json {
        format!("{value}\n")
    } else {
        format!("{text}\n")
    }
}

pub fn run(spec: MonoidSpec, cmd: &Command, opts: &Options) -> Result<Output, CliError> {
    if let Command::Conjcheck(a, b) = cmd {
        if spec.kind != MonoidKind::Klein {
            return Err(CliError::usage(format!(
                "conjcheck supports only klein, not {spec}"
            )));
        }
        return conjcheck(&KleinMonoid::new(), a, b, opts);
    }
    let p = spec.parameter.unwrap_or(0);
    match spec.kind {
        MonoidKind::Braid => dispatch(&PositiveBraids::new(p as usize)?, cmd, opts),
        MonoidKind::Klein => dispatch(&KleinMonoid::new(), cmd, opts),
        MonoidKind::Nk => dispatch(&FreeAbelian::new(p as usize)?, cmd, opts),
        MonoidKind::Cyclic => dispatch(&Cyclic::new(p)?, cmd, opts),
    }
}

fn dispatch<F: Frontend>(m: &F, cmd: &Command, opts: &Options) -> Result<Output, CliError> {
    match cmd {
        Command::Nf(w) => nf(m, w, opts).map(Output::ok),
        Command::Lcm(a, b) => lcm(m, a, b, opts).map(Output::ok),
        Command::Torsion { word, pmax } => torsion(m, word, *pmax, opts).map(Output::ok),
        Command::Verify { suite, config } => {
            let report = run_verify(m, *suite, *config)?;
            let stdout = if opts.json {
                format!("{}\n", report.to_json())
            } else {
                report.render()
            };
            Ok(Output {
                stdout,
                code: if report.passed() { 0 } else { 2 },
            })
        }
        Command::Frac(op) => frac(m, op, opts).map(Output::ok),
        Command::Conjcheck(..) => unreachable!("handled before dispatch"),
    }
}

fn element<F: Frontend>(m: &F, word: &str, opts: &Options) -> Result<F::Element, CliError> {
    Ok(m.word(&parse_positive(m, word, opts.max_word_len)?)?)
}

pub fn nf<F: Frontend>(m: &F, word: &str, opts: &Options) -> Result<String, CliError> {
    let e = element(m, word, opts)?;
    Ok(emit(opts, m.show(&e), m.encode(&e)))
}

pub fn lcm<F: Frontend>(m: &F, a: &str, b: &str, opts: &Options) -> Result<String, CliError> {
    let cert = m.right_lcm(&element(m, a, opts)?, &element(m, b, opts)?)?;
    let text = format!(
        "join: {}\nleft complement: {}\nright complement: {}",
        m.show_word(&cert.join),
        m.show_word(&cert.left_comp),
        m.show_word(&cert.right_comp)
    );
    Ok(emit(opts, text, json::encode_certificate(m, &cert)))
}

fn fraction<F: Frontend>(m: &F, word: &str, opts: &Options) -> Result<Fraction<F::Element>, CliError> {
    let signed = parse_signed(m, word, opts.max_word_len)?;
    Ok(FractionGroup::new(m).eval_signed_word(&signed)?)
}

fn show_fraction<F: Frontend>(m: &F, f: &Fraction<F::Element>) -> String {
    format!("{} / {}", m.show_word(&f.num), m.show_word(&f.den))
}

pub fn torsion<F: Frontend>(m: &F, word: &str, pmax: usize, opts: &Options) -> Result<String, CliError> {
    if pmax == 0 {
        return Err(CliError::usage("--pmax must be at least 1"));
    }
    let z = fraction(m, word, opts)?;
    let verdict = match torsion_check(m, &z, pmax) {
        Ok(v) => v,
        Err(e) => {
            return Err(match CliError::from(e) {
                CliError::Internal(msg) => CliError::Internal(diagnostic(m, word, &z, pmax, &msg)),
                other => other,
            })
        }
    };
    let text = match &verdict {
        TorsionVerdict::NoTorsionUpTo(p) => format!("no torsion up to {p}"),
        TorsionVerdict::Witness(w) => format!(
            "witness order {}\nconjugator: {}\ntorsion: {}",
            w.order,
            m.show_word(&w.conjugator),
            m.show_word(&w.torsion)
        ),
    };
    Ok(emit(opts, text, json::encode_verdict(m, &verdict)))
}

fn diagnostic<F: Frontend>(m: &F, word: &str, z: &Fraction<F::Element>, pmax: usize, msg: &str) -> String {
    let mut out = format!(
        "{msg}\nmonoid: {}\ninput: {word}\nz: {}\npmax: {pmax}",
        m.spec(),
        show_fraction(m, z)
    );
    if let Ok(seq) = build_pairs(m, z, pmax + 1) {
        for (i, (x, y)) in seq.pairs().iter().enumerate() {
            out.push_str(&format!(
                "\npair {}: {} | {}",
                i + 1,
                m.show_word(x),
                m.show_word(y)
            ));
        }
    }
    out
}

pub fn conjcheck(k: &KleinMonoid, a: &str, b: &str, opts: &Options) -> Result<Output, CliError> {
    let wa = parse_signed(k, a, opts.max_word_len)?;
    let wb = parse_signed(k, b, opts.max_word_len)?;
    let cert = k.certify_nonconjugate(&wa, &wb)?;
    let text = match cert {
        ConjugacyCertificate::NonConjugate { left, right } => format!(
            "NonConjugate: abelian images ({},{}) vs ({},{})",
            left.degree, left.parity, right.degree, right.parity
        ),
        ConjugacyCertificate::Inconclusive => String::from("Inconclusive"),
    };
    Ok(Output::ok(emit(opts, text, json::encode_conjugacy(&cert))))
}

pub fn frac<F: Frontend>(m: &F, op: &FracOp, opts: &Options) -> Result<String, CliError> {
    let g = FractionGroup::new(m);
    let result = match op {
        FracOp::Eq(a, b) => {
            let equal = g.fraction_eq(&fraction(m, a, opts)?, &fraction(m, b, opts)?)?;
            return Ok(emit(opts, equal.to_string(), json!({ "equal": equal })));
        }
        FracOp::Eval(a) => fraction(m, a, opts)?,
        FracOp::Mul(a, b) => g.fraction_mul(&fraction(m, a, opts)?, &fraction(m, b, opts)?)?,
        FracOp::Inv(a) => g.fraction_inv(&fraction(m, a, opts)?),
        FracOp::Pow(a, k) => {
            if k.abs() > MAX_POWER {
                return Err(CliError::usage(format!(
                    "exponent must satisfy |k| <= {MAX_POWER}"
                )));
            }
            let f = fraction(m, a, opts)?;
            let base = if *k < 0 { g.fraction_inv(&f) } else { f };
            g.fraction_pow_direct(&base, k.unsigned_abs() as usize)?
        }
    };
    let f = g.normalize(&result)?;
    Ok(emit(opts, show_fraction(m, &f), json::encode_fraction(m, &f)))
}

/// Splits `args` of `frac` into an operation.
pub fn parse_frac(op: &str, args: &[String]) -> Result<FracOp, CliError> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(CliError::usage(format!(
                "frac {op} takes {n} argument(s), got {}",
                args.len()
            )))
        }
    };
    match op {
        "eval" => arity(1).map(|_| FracOp::Eval(args[0].clone())),
        "inv" => arity(1).map(|_| FracOp::Inv(args[0].clone())),
        "eq" => arity(2).map(|_| FracOp::Eq(args[0].clone(), args[1].clone())),
        "mul" => arity(2).map(|_| FracOp::Mul(args[0].clone(), args[1].clone())),
        "pow" => {
            arity(2)?;
            let k = args[1]
                .parse()
                .map_err(|_| CliError::usage(format!("`{}` is not an integer exponent", args[1])))?;
            Ok(FracOp::Pow(args[0].clone(), k))
        }
        _ => Err(CliError::usage(format!(
            "unknown frac operation `{op}`; expected eval, eq, mul, inv or pow"
        ))),
    }
}
