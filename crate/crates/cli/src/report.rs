//! Machine-readable report shapes. Field order is declaration order and
//! every collection is canonically sorted upstream, so identical inputs
//! produce byte-identical JSON.

use monobox::{ClassificationReport, MonomialIdeal, Rule, Verdict};
use serde::Serialize;

use crate::parse::IdealSpec;

#[derive(Serialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub generators: Vec<Vec<u64>>,
}

impl IdealJson {
    pub fn from_spec(spec: &IdealSpec) -> Self {
        IdealJson {
            vars: spec.variables.clone(),
            generators: spec.generators.clone(),
        }
    }

    pub fn from_ideal(spec: &IdealSpec, ideal: &MonomialIdeal) -> Self {
        IdealJson {
            vars: spec.variables.clone(),
            generators: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }
}

/// Envelope around every command's result.
#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    pub version: &'static str,
    pub input: IdealJson,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, spec: &IdealSpec, result: T) -> Self {
        Report {
            command,
            version: env!("CARGO_PKG_VERSION"),
            input: IdealJson::from_spec(spec),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub monomial: Vec<u64>,
    pub power: u64,
    pub box_sum: u64,
}

#[derive(Serialize)]
pub struct KBoundJson {
    pub generator: Vec<u64>,
    pub power_index: u64,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub verdict: &'static str,
    pub rule: &'static str,
    pub witness: Option<WitnessJson>,
    pub k_bounds: Vec<KBoundJson>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Good => "good",
        Verdict::Bad => "bad",
    }
}

pub fn rule_str(r: Rule) -> &'static str {
    match r {
        Rule::NecessaryFailed => "necessary-failed",
        Rule::SufficientPassed => "sufficient-passed",
        Rule::Exhaustive => "exhaustive",
    }
}

impl ClassifyJson {
    pub fn from_report(report: &ClassificationReport) -> Self {
        ClassifyJson {
            verdict: verdict_str(report.verdict),
            rule: rule_str(report.rule),
            witness: report.witness.as_ref().map(|w| WitnessJson {
                monomial: w.monomial.exponents().to_vec(),
                power: w.power,
                box_sum: w.box_sum,
            }),
            k_bounds: report
                .k_bounds
                .iter()
                .map(|kb| KBoundJson {
                    generator: kb.generator.exponents().to_vec(),
                    power_index: kb.power_index,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct AxisJson {
    pub axis: String,
    pub q: u64,
    /// New monomials per productive round.
    pub rounds: Vec<Vec<Vec<u64>>>,
    pub ideal: IdealJson,
}

#[derive(Serialize)]
pub struct ClosureJson {
    pub closure: IdealJson,
    /// Generators of the closure that are not in the input ideal.
    pub added: Vec<Vec<u64>>,
    pub axes: Vec<AxisJson>,
}

#[derive(Serialize)]
pub struct StabilizeJson {
    pub axes: Vec<AxisJson>,
}

#[derive(Serialize)]
pub struct BoxIdealJson {
    pub coords: Vec<u64>,
    pub ideal: IdealJson,
}

#[derive(Serialize)]
pub struct PowerJson {
    pub exponent: u64,
    pub ideal: IdealJson,
}

#[derive(Serialize)]
pub struct ColonJson {
    pub power: u64,
    pub by: Vec<Vec<u64>>,
    pub ideal: IdealJson,
}

#[derive(Serialize)]
pub struct OracleJson {
    pub k_max: u64,
    pub window: u64,
    pub counts: Vec<usize>,
    pub quotients: Vec<Vec<Vec<u64>>>,
    pub union: IdealJson,
    pub stabilized: bool,
}

#[derive(Serialize)]
pub struct FreimanJson {
    pub equigenerated: bool,
    pub degree: Option<u64>,
    pub num_vars: usize,
    pub g1: usize,
    pub g2: usize,
    pub bound: Option<u64>,
    pub very_good: Option<bool>,
    pub verdict: &'static str,
}

#[derive(Serialize)]
pub struct VeryGoodJson {
    pub very_good: bool,
}
