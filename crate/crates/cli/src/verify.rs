//! Property suites behind `lcm verify`.
//!
//! * `uniq`: the enumerated lcm set of a pair is `{ join u : u unit }`.
//! * `rlcm`: gluing `lcm(x, y1)` and `lcm(x', y2)` gives `lcm(x, y1 y2)`.
//! * `eq123`: the chain identities for a fraction `z`.
//!
//! Finite instances are checked exhaustively for `uniq`; everything else
//! draws `trials` seeded samples. The first failing sample stops its suite
//! and is reported with a command that reproduces it.

use std::fmt::Write;
use std::str::FromStr;

use lcm_core::monoid::{composed_lcm, equal_up_to_right_units};
use lcm_core::oracle::{lcm_set_matches_units, BfsOracle, DEFAULT_BFS_BOUND};
use lcm_core::torsion::{build_pairs, check_eq1, check_eq2, check_eq3};
use lcm_core::FractionGroup;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::frontend::Frontend;
use crate::sampler::Sampler;

/// Longest sampled word for `uniq`, kept short so the oracle stays cheap.
pub const UNIQ_WORD_LEN: usize = 3;
/// Common multiples up to this many letters past the shortest one must all
/// be multiples of the join.
pub const UNIQ_WINDOW: usize = 4;
pub const RLCM_WORD_LEN: usize = 5;
pub const EQ_WORD_LEN: usize = 3;
pub const EQ_MAX_KL: usize = 3;
pub const EQ3_MAX_K: usize = 6;

pub const DEFAULT_TRIALS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Uniq,
    Rlcm,
    Eq123,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Uniq => "uniq",
            Suite::Rlcm => "rlcm",
            Suite::Eq123 => "eq123",
            Suite::All => "all",
        }
    }

    fn members(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Uniq, Suite::Rlcm, Suite::Eq123],
            Suite::Uniq => &[Suite::Uniq],
            Suite::Rlcm => &[Suite::Rlcm],
            Suite::Eq123 => &[Suite::Eq123],
        }
    }

    fn stream(self) -> u64 {
        match self {
            Suite::Uniq => 1,
            Suite::Rlcm => 2,
            Suite::Eq123 => 3,
            Suite::All => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "uniq" => Ok(Suite::Uniq),
            "rlcm" => Ok(Suite::Rlcm),
            "eq123" => Ok(Suite::Eq123),
            "all" => Ok(Suite::All),
            _ => Err(CliError::usage(format!(
                "unknown suite `{s}`; expected uniq, rlcm, eq123 or all"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub bfs_bound: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            trials: DEFAULT_TRIALS,
            bfs_bound: DEFAULT_BFS_BOUND,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// One-based index of the failing sample, `None` in exhaustive runs.
    pub trial: Option<usize>,
    pub message: String,
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    /// Inputs examined (pairs, triples or fractions).
    pub inputs: usize,
    /// Individual identities or comparisons that held.
    pub checks: usize,
    pub note: String,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub monoid: String,
    pub suite: Suite,
    pub config: VerifyConfig,
    pub outcomes: Vec<SuiteOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failure.is_none())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "verify {} suite={} seed={} trials={} bfs-bound={}",
            self.monoid,
            self.suite.name(),
            c.seed,
            c.trials,
            c.bfs_bound
        );
        for o in &self.outcomes {
            match &o.failure {
                None => {
                    let _ = writeln!(out, "{}: pass ({}, {} checks)", o.suite.name(), o.note, o.checks);
                }
                Some(f) => {
                    let at = f.trial.map(|t| format!(" at trial {t}")).unwrap_or_default();
                    let _ = writeln!(out, "{}: FAIL{at}: {}", o.suite.name(), f.message);
                    let _ = writeln!(out, "reproduce: {}", f.reproduce);
                }
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "pass" } else { "FAIL" });
        out
    }

    pub fn to_json(&self) -> Value {
        let outcomes: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "suite": o.suite.name(),
                    "status": if o.failure.is_none() { "pass" } else { "fail" },
                    "inputs": o.inputs,
                    "checks": o.checks,
                    "note": o.note,
                    "failure": o.failure.as_ref().map(|f| json!({
                        "trial": f.trial,
                        "message": f.message,
                        "reproduce": f.reproduce,
                    })),
                })
            })
            .collect();
        json!({
            "monoid": self.monoid,
            "suite": self.suite.name(),
            "seed": self.config.seed,
            "trials": self.config.trials,
            "bfsBound": self.config.bfs_bound,
            "passed": self.passed(),
            "outcomes": outcomes,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CliError> {
        let bad = |what: &str| CliError::usage(format!("report: bad or missing `{what}`"));
        let s = |v: &Value, k: &str| {
            v.get(k)
                .and_then(Value::as_str)
                .map(String::from)
                .ok_or_else(|| bad(k))
        };
        let n = |v: &Value, k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| bad(k));
        let outcomes = v
            .get("outcomes")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("outcomes"))?
            .iter()
            .map(|o| {
                let failure = match o.get("failure") {
                    None | Some(Value::Null) => None,
                    Some(f) => Some(Failure {
                        trial: match f.get("trial") {
                            None | Some(Value::Null) => None,
                            Some(t) => Some(t.as_u64().ok_or_else(|| bad("trial"))? as usize),
                        },
                        message: s(f, "message")?,
                        reproduce: s(f, "reproduce")?,
                    }),
                };
                Ok(SuiteOutcome {
                    suite: s(o, "suite")?.parse()?,
                    inputs: n(o, "inputs")? as usize,
                    checks: n(o, "checks")? as usize,
                    note: s(o, "note")?,
                    failure,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Report {
            monoid: s(v, "monoid")?,
            suite: s(v, "suite")?.parse()?,
            config: VerifyConfig {
                seed: n(v, "seed")?,
                trials: n(v, "trials")? as usize,
                bfs_bound: n(v, "bfsBound")? as usize,
            },
            outcomes,
        })
    }
}

struct Run<'a, F: ?Sized> {
    monoid: &'a F,
    config: VerifyConfig,
}

impl<F: Frontend + ?Sized> Run<'_, F> {
    fn reproduce(&self, suite: Suite, trials: Option<usize>) -> String {
        let mut line = format!(
            "lcm verify --monoid {} --suite {}",
            self.monoid.spec(),
            suite.name()
        );
        if let Some(t) = trials {
            let _ = write!(line, " --seed {} --trials {t}", self.config.seed);
        }
        if self.config.bfs_bound != DEFAULT_BFS_BOUND {
            let _ = write!(line, " --bfs-bound {}", self.config.bfs_bound);
        }
        line
    }

    fn fail(
        &self,
        suite: Suite,
        inputs: usize,
        checks: usize,
        trial: Option<usize>,
        message: String,
    ) -> SuiteOutcome {
        SuiteOutcome {
            suite,
            inputs,
            checks,
            note: String::new(),
            failure: Some(Failure {
                trial,
                message,
                reproduce: self.reproduce(suite, trial),
            }),
        }
    }

    fn show(&self, e: &F::Element) -> String {
        self.monoid.show_word(e)
    }

    fn uniq(&self) -> Result<SuiteOutcome, CliError> {
        let m = self.monoid;
        let oracle = BfsOracle::new(m, self.config.bfs_bound).with_window(UNIQ_WINDOW);
        let units = m
            .units()
            .ok_or_else(|| CliError::usage(format!("units of {} are not enumerable", m.spec())))?
            .len();
        let exhaustive = m.element_count().is_some();
        let pairs: Vec<(F::Element, F::Element)> = if exhaustive {
            let all = oracle.ball(0)?;
            all.iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        } else {
            let mut rng = Sampler::new(self.config.seed, Suite::Uniq.stream());
            (0..self.config.trials)
                .map(|_| Ok((rng.element(m, UNIQ_WORD_LEN)?, rng.element(m, UNIQ_WORD_LEN)?)))
                .collect::<Result<_, CliError>>()?
        };
        let mut checks = 0;
        for (i, (a, b)) in pairs.iter().enumerate() {
            let cert = m.right_lcm(a, b)?;
            if !cert.is_sound(m)? {
                let trial = (!exhaustive).then_some(i + 1);
                let msg = format!(
                    "certificate for ({}, {}) is not sound",
                    self.show(a),
                    self.show(b)
                );
                return Ok(self.fail(Suite::Uniq, i + 1, checks, trial, msg));
            }
            checks += 1;
            if !lcm_set_matches_units(&oracle, a, b)? {
                let found = oracle.lcm_set(a, b)?;
                let trial = (!exhaustive).then_some(i + 1);
                let msg = format!(
                    "lcm set of ({}, {}) has {} elements, expected join {} times {units} units",
                    self.show(a),
                    self.show(b),
                    found.len(),
                    self.show(&cert.join)
                );
                return Ok(self.fail(Suite::Uniq, i + 1, checks, trial, msg));
            }
            checks += 1;
        }
        let note = if exhaustive {
            format!("{} exhaustive pairs, lcm-set size {units}", pairs.len())
        } else {
            format!(
                "{} sampled pairs, lcm-set size {units}, window {UNIQ_WINDOW}",
                pairs.len()
            )
        };
        Ok(SuiteOutcome {
            suite: Suite::Uniq,
            inputs: pairs.len(),
            checks,
            note,
            failure: None,
        })
    }

    fn rlcm(&self) -> Result<SuiteOutcome, CliError> {
        let m = self.monoid;
        let mut rng = Sampler::new(self.config.seed, Suite::Rlcm.stream());
        let mut checks = 0;
        for t in 1..=self.config.trials {
            let x = rng.element(m, RLCM_WORD_LEN)?;
            let y1 = rng.element(m, RLCM_WORD_LEN)?;
            let y2 = rng.element(m, RLCM_WORD_LEN)?;
            let y = m.mul(&y1, &y2)?;
            let glued = composed_lcm(m, &x, &y1, &y2)?;
            let direct = m.right_lcm(&x, &y)?;
            let describe = || {
                format!(
                    "x = {}, y1 = {}, y2 = {}",
                    self.show(&x),
                    self.show(&y1),
                    self.show(&y2)
                )
            };
            if glued.left != x || glued.right != y || !glued.is_sound(m)? {
                let msg = format!(
                    "composed certificate is not a certificate for (x, y1 y2) with {}",
                    describe()
                );
                return Ok(self.fail(Suite::Rlcm, t, checks, Some(t), msg));
            }
            checks += 1;
            if !equal_up_to_right_units(m, &glued.join, &direct.join)? {
                let msg = format!(
                    "composed join {} differs from direct join {} beyond a unit, {}",
                    self.show(&glued.join),
                    self.show(&direct.join),
                    describe()
                );
                return Ok(self.fail(Suite::Rlcm, t, checks, Some(t), msg));
            }
            checks += 1;
        }
        Ok(SuiteOutcome {
            suite: Suite::Rlcm,
            inputs: self.config.trials,
            checks,
            note: format!("{} triples", self.config.trials),
            failure: None,
        })
    }

    fn eq123(&self) -> Result<SuiteOutcome, CliError> {
        let m = self.monoid;
        let group = FractionGroup::new(m);
        let mut rng = Sampler::new(self.config.seed, Suite::Eq123.stream());
        let pairs_needed = (2 * EQ_MAX_KL).max(EQ3_MAX_K).max(EQ_MAX_KL + 1);
        let mut checks = 0;
        for t in 1..=self.config.trials {
            let z = rng.fraction(m, EQ_WORD_LEN)?;
            let seq = build_pairs(m, &z, pairs_needed)?;
            let z_text = format!("z = {} / {}", self.show(&z.num), self.show(&z.den));
            let mut failed = None;
            if !seq.is_sound(m)? {
                failed = Some(String::from("pair chain certificates are not sound"));
            }
            for k in 0..=EQ_MAX_KL {
                for l in 0..=EQ_MAX_KL {
                    if failed.is_none() && !check_eq1(m, &seq, k, l)? {
                        failed = Some(format!("identity 1 fails for k = {k}, l = {l}"));
                    }
                    checks += 1;
                }
                if failed.is_none() && !check_eq2(&group, &seq, &z, k)? {
                    failed = Some(format!("identity 2 fails for k = {k}"));
                }
                checks += 1;
            }
            for k in 1..=EQ3_MAX_K {
                if failed.is_none() && !check_eq3(&group, &seq, &z, k)? {
                    failed = Some(format!("identity 3 fails for k = {k}"));
                }
                checks += 1;
            }
            if let Some(msg) = failed {
                return Ok(self.fail(Suite::Eq123, t, checks, Some(t), format!("{msg} with {z_text}")));
            }
        }
        Ok(SuiteOutcome {
            suite: Suite::Eq123,
            inputs: self.config.trials,
            checks,
            note: format!("{} fractions", self.config.trials),
            failure: None,
        })
    }
}

pub fn run_verify<F: Frontend + ?Sized>(
    monoid: &F,
    suite: Suite,
    config: VerifyConfig,
) -> Result<Report, CliError> {
    let run = Run { monoid, config };
    let outcomes = suite
        .members()
        .iter()
        .map(|s| match s {
            Suite::Uniq => run.uniq(),
            Suite::Rlcm => run.rlcm(),
            _ => run.eq123(),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        monoid: monoid.spec().to_string(),
        suite,
        config,
        outcomes,
    })
}
