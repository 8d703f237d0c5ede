//! Named algebraic laws checked over exhaustive and seeded random instances.
//!
//! A law is a pair of value builders and a comparison. Laws over the same
//! kind of instance form a [`Suite`]; each suite is run on every instance its
//! generator can produce at the largest carrier bound that fits the
//! exhaustive budget, then on seeded random instances.

mod constructions;
mod derivation;
mod kernel;
mod summation;

use std::fmt;

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::Result;
use crate::random::{exhaust, Seeded, Source};
use crate::relation::{Relation, Subset};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_SIZE: usize = 5;

#[derive(Clone, PartialEq, Eq)]
pub enum Value {
    Rel(Relation),
    Set(Subset),
    Bool(bool),
    Count(usize),
    /// A set of subsets; order and repetition are ignored.
    Family(Vec<BitSet>),
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rel(r) => write!(f, "{r:?}"),
            Value::Set(s) => write!(f, "{s:?}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Count(n) => write!(f, "{n}"),
            Value::Family(v) => f.debug_set().entries(normalized(v)).finish(),
        }
    }
}

fn normalized(v: &[BitSet]) -> Vec<BitSet> {
    let mut v = v.to_vec();
    v.sort_by(|a, b| a.lex_cmp(b));
    v.dedup();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Equal,
    /// Inclusion, order, implication or `≤`, by value kind.
    Within,
}

pub struct Law<T> {
    pub name: &'static str,
    pub lhs: fn(&T) -> Result<Value>,
    pub rhs: fn(&T) -> Result<Value>,
    pub cmp: Cmp,
}

impl<T> Law<T> {
    pub fn eq(name: &'static str, lhs: fn(&T) -> Result<Value>, rhs: fn(&T) -> Result<Value>) -> Self {
        Law { name, lhs, rhs, cmp: Cmp::Equal }
    }

    pub fn within(name: &'static str, lhs: fn(&T) -> Result<Value>, rhs: fn(&T) -> Result<Value>) -> Self {
        Law { name, lhs, rhs, cmp: Cmp::Within }
    }

    /// Checks a single instance; `Err` carries a description of the failure.
    pub fn check(&self, t: &T) -> std::result::Result<(), String> {
        let (l, r) = match ((self.lhs)(t), (self.rhs)(t)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => return Err(format!("error: {e}")),
        };
        let holds = match (self.cmp, &l, &r) {
            (Cmp::Equal, Value::Family(a), Value::Family(b)) => normalized(a) == normalized(b),
            (Cmp::Equal, a, b) => a == b,
            (Cmp::Within, Value::Rel(a), Value::Rel(b)) => a.leq(b).unwrap_or(false),
            (Cmp::Within, Value::Set(a), Value::Set(b)) => a.is_subset(b).unwrap_or(false),
            (Cmp::Within, Value::Bool(a), Value::Bool(b)) => !a || *b,
            (Cmp::Within, Value::Count(a), Value::Count(b)) => a <= b,
            (Cmp::Within, Value::Family(a), Value::Family(b)) => a.iter().all(|x| b.contains(x)),
            _ => false,
        };
        if holds {
            Ok(())
        } else {
            Err(format!("lhs {l:?}, rhs {r:?}"))
        }
    }
}

pub struct Suite<T> {
    pub domain: &'static str,
    pub generate: fn(&mut dyn Source, usize) -> Option<T>,
    pub laws: Vec<Law<T>>,
}

#[derive(Debug, Clone)]
pub struct LawConfig {
    pub seed: u64,
    /// Largest carrier size for random instances.
    pub size: usize,
    pub random_cases: usize,
    /// Largest carrier size tried for exhaustive instances.
    pub exhaustive_bound: usize,
    /// Most choice sequences replayed per suite in the exhaustive phase.
    pub exhaustive_budget: usize,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { seed: DEFAULT_SEED, size: DEFAULT_SIZE, random_cases: 200, exhaustive_bound: 3, exhaustive_budget: 4096 }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: String,
    pub domain: String,
    /// Carrier bound of the exhaustive phase.
    pub exhaustive_bound: usize,
    pub exhaustive_cases: usize,
    pub random_cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl LawOutcome {
    pub fn holds(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LawReport {
    pub seed: u64,
    pub size: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    fn new(cfg: &LawConfig, mut laws: Vec<LawOutcome>) -> Self {
        laws.sort_by(|a, b| a.name.cmp(&b.name));
        LawReport { seed: cfg.seed, size: cfg.size, laws }
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(LawOutcome::holds)
    }

    pub fn failures(&self) -> Vec<&LawOutcome> {
        self.laws.iter().filter(|l| !l.holds()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.name == name)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.laws {
            let status = if l.holds() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {} [{}; exhaustive k≤{}: {}, random: {}]",
                l.name, l.domain, l.exhaustive_bound, l.exhaustive_cases, l.random_cases
            )?;
            if let Some(c) = &l.counterexample {
                writeln!(f, "     counterexample: {c}")?;
            }
        }
        let failed = self.failures().len();
        write!(f, "{} laws, {} failed (seed {}, size {})", self.laws.len(), failed, self.seed, self.size)
    }
}

fn domain_seed(seed: u64, domain: &str) -> u64 {
    // FNV-1a, so each suite draws an independent stream from one seed.
    domain.bytes().fold(0xcbf2_9ce4_8422_2325 ^ seed, |h, b| (h ^ u64::from(b)).wrapping_mul(0x1000_0000_01b3))
}

const COUNTEREXAMPLE_LIMIT: usize = 600;

pub fn run_suite<T: fmt::Debug>(suite: &Suite<T>, cfg: &LawConfig) -> Vec<LawOutcome> {
    let (bound, exhaustive) = (0..=cfg.exhaustive_bound)
        .rev()
        .find_map(|k| exhaust(|s| (suite.generate)(s, k), cfg.exhaustive_budget).map(|v| (k, v)))
        .unwrap_or((0, Vec::new()));
    let mut rng = Seeded::new(domain_seed(cfg.seed, suite.domain));
    let mut random = Vec::with_capacity(cfg.random_cases);
    for _ in 0..cfg.random_cases * 50 {
        if random.len() == cfg.random_cases {
            break;
        }
        if let Some(t) = (suite.generate)(&mut rng, cfg.size) {
            random.push(t);
        }
    }
    suite
        .laws
        .iter()
        .map(|law| {
            let mut out = LawOutcome {
                name: law.name.to_string(),
                domain: suite.domain.to_string(),
                exhaustive_bound: bound,
                exhaustive_cases: exhaustive.len(),
                random_cases: random.len(),
                passed: 0,
                failed: 0,
                counterexample: None,
            };
            for t in exhaustive.iter().chain(&random) {
                match law.check(t) {
                    Ok(()) => out.passed += 1,
                    Err(why) => {
                        out.failed += 1;
                        if out.counterexample.is_none() {
                            let mut s = format!("{t:?}: {why}");
                            if s.len() > COUNTEREXAMPLE_LIMIT {
                                let cut = (0..=COUNTEREXAMPLE_LIMIT).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
                                s.truncate(cut);
                                s.push('…');
                            }
                            out.counterexample = Some(s);
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// The derivation laws: subset and relation continuity, generators,
/// identity, graphs, inverse image, negation, pairing and copairing, the
/// special inequalities and the special-relations cases.
pub fn check_derivation_laws(cfg: &LawConfig) -> LawReport {
    let mut out = derivation::run(cfg);
    out.extend(summation::run_derivation(cfg));
    LawReport::new(cfg, out)
}

/// Concept lattices of top, surjective inverse image, product and apposition.
pub fn check_cl_constructions(cfg: &LawConfig) -> LawReport {
    LawReport::new(cfg, constructions::run(cfg))
}

/// Every suite: kernel, order, negation, derivation, summation, constructions
/// and the equivalence checks.
pub fn run_all_laws(cfg: &LawConfig) -> LawReport {
    let mut out = kernel::run(cfg);
    out.extend(derivation::run(cfg));
    out.extend(summation::run_derivation(cfg));
    out.extend(summation::run(cfg));
    out.extend(constructions::run(cfg));
    LawReport::new(cfg, out)
}

fn set(s: Subset) -> Result<Value> {
    Ok(Value::Set(s))
}

fn rel(r: Relation) -> Result<Value> {
    Ok(Value::Rel(r))
}

fn truth(b: bool) -> Result<Value> {
    Ok(Value::Bool(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Carrier;

    #[test]
    fn families_ignore_order_and_repeats() {
        let law: Law<()> = Law::eq(
            "f",
            |_| Ok(Value::Family(vec![BitSet::from_indices(2, [0]), BitSet::from_indices(2, [1])])),
            |_| Ok(Value::Family(vec![BitSet::from_indices(2, [1]), BitSet::from_indices(2, [0]), BitSet::from_indices(2, [1])])),
        );
        assert!(law.check(&()).is_ok());
    }

    #[test]
    fn within_means_inclusion() {
        let law: Law<Carrier> = Law::within("w", |c| set(Subset::empty(c)), |c| set(Subset::full(c)));
        let c = Carrier::new("C", ["x"]).unwrap();
        assert!(law.check(&c).is_ok());
        let back: Law<Carrier> = Law::within("w", |c| set(Subset::full(c)), |c| set(Subset::empty(c)));
        assert!(back.check(&c).unwrap_err().starts_with("lhs"));
    }

    #[test]
    fn suites_report_both_phases() {
        let suite = Suite {
            domain: "bits",
            generate: |s, k| {
                let c = crate::random::carrier(s, "C", "c", k);
                Some(crate::random::subset(s, &c))
            },
            laws: vec![Law::within("subset of full", |s: &Subset| set(s.clone()), |s| set(Subset::full(s.carrier())))],
        };
        let out = run_suite(&suite, &LawConfig::default());
        assert_eq!(out[0].exhaustive_bound, 3);
        assert_eq!(out[0].exhaustive_cases, 1 + 2 + 4 + 8);
        assert_eq!(out[0].random_cases, 200);
        assert!(out[0].holds());
    }
}
