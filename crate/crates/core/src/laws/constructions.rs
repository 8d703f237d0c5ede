//! Concept lattices of constructed relations.

use super::derivation::{gen_pulled, Pulled};
use super::{run_suite, Law, LawConfig, LawOutcome, Suite, Value};
use crate::bits::BitSet;
use crate::classic::{enumerate_concepts, ClassicContext};
use crate::error::Result;
use crate::random::{carrier, relation, Source};
use crate::relation::{Relation, Subset};
use crate::sum::sum_carrier;

fn extents(r: &Relation) -> Result<Vec<BitSet>> {
    Ok(enumerate_concepts(&ClassicContext::new(r.clone()))?.concepts().iter().map(|c| c.extent.bits().clone()).collect())
}

/// Extents with their intents, as bit sets.
fn concepts(r: &Relation) -> Result<Vec<(BitSet, BitSet)>> {
    Ok(enumerate_concepts(&ClassicContext::new(r.clone()))?
        .concepts()
        .iter()
        .map(|c| (c.extent.bits().clone(), c.intent.bits().clone()))
        .collect())
}

fn family(v: Vec<BitSet>) -> Result<Value> {
    Ok(Value::Family(v))
}

fn product_set(a: &BitSet, b: &BitSet) -> BitSet {
    let m = b.len();
    BitSet::from_indices(a.len() * m, a.iter().flat_map(|i| b.iter().map(move |j| i * m + j)))
}

/// `μ : X₀→X₁` and `ν : Y₀→Y₁` for products; `μ` and `κ : X₀→Z` for
/// apposition.
#[derive(Debug)]
pub(super) struct Pair {
    mu: Relation,
    nu: Relation,
    kappa: Relation,
}

impl Pair {
    /// `(μ,κ) : X₀ → X₁+Z` over the discrete sum of the targets.
    fn apposition(&self) -> Relation {
        let (t, z) = (self.mu.target(), self.kappa.target());
        let n = t.len();
        Relation::from_fn(self.mu.source(), &sum_carrier(t, z), |i, j| if j < n { self.mu.get(i, j) } else { self.kappa.get(i, j - n) })
    }
}

fn gen_pair(src: &mut dyn Source, k: usize) -> Option<Pair> {
    let x0 = carrier(src, "X0", "a", k);
    let x1 = carrier(src, "X1", "p", k);
    let y0 = carrier(src, "Y0", "b", k);
    let y1 = carrier(src, "Y1", "q", k);
    let z = carrier(src, "Z", "z", k);
    Some(Pair { mu: relation(src, &x0, &x1), nu: relation(src, &y0, &y1), kappa: relation(src, &x0, &z) })
}

fn pair_suite() -> Suite<Pair> {
    Suite {
        domain: "two relations",
        generate: gen_pair,
        laws: vec![
            Law::eq(
                "construction/top: one concept (X₀, X₁)",
                |t| family(extents(&Relation::top(t.mu.source(), t.mu.target()))?),
                |t| family(vec![BitSet::full(t.mu.source().len())]),
            ),
            Law::eq(
                "construction/product: extents are products of extents",
                |t| family(extents(&t.mu.product(&t.nu)?)?),
                |t| {
                    let (a, b) = (extents(&t.mu)?, extents(&t.nu)?);
                    family(a.iter().flat_map(|x| b.iter().map(move |y| product_set(x, y))).collect())
                },
            ),
            Law::eq(
                "construction/product: concept count multiplies",
                |t| Ok(Value::Count(extents(&t.mu.product(&t.nu)?)?.len())),
                |t| Ok(Value::Count(extents(&t.mu)?.len() * extents(&t.nu)?.len())),
            ),
            Law::eq(
                "construction/product: extents are products of extents with nonempty intents, or everything",
                |t| family(extents(&t.mu.product(&t.nu)?)?),
                |t| {
                    let keep = |v: Vec<(BitSet, BitSet)>| v.into_iter().filter(|(_, i)| !i.is_empty()).map(|(e, _)| e).collect::<Vec<_>>();
                    let (a, b) = (keep(concepts(&t.mu)?), keep(concepts(&t.nu)?));
                    let mut out: Vec<BitSet> = a.iter().flat_map(|x| b.iter().map(move |y| product_set(x, y))).collect();
                    out.push(BitSet::full(t.mu.source().len() * t.nu.source().len()));
                    family(out)
                },
            ),
            Law::eq(
                "construction/apposition: extents are meets of extents",
                |t| family(extents(&t.apposition())?),
                |t| {
                    let (a, b) = (extents(&t.mu)?, extents(&t.kappa)?);
                    family(a.iter().flat_map(|x| b.iter().map(move |y| x.intersection(y))).collect())
                },
            ),
        ],
    }
}

fn gen_surjective(src: &mut dyn Source, k: usize) -> Option<Pulled> {
    gen_pulled(src, k).filter(|p| p.f0.is_surjective() && p.f1.is_surjective())
}

fn surjective_suite() -> Suite<Pulled> {
    Suite {
        domain: "surjective inverse image",
        generate: gen_surjective,
        laws: vec![Law::eq(
            "construction/inverse image: extents are inverse ideal images of extents",
            |t| family(extents(&t.pulled()?)?),
            |t| {
                let f0 = t.f0.direct_graph();
                let mut out = Vec::new();
                for e in extents(&t.mu)? {
                    let ideal = Subset::from_bits(t.mu.source(), e).as_ideal_relation();
                    out.push(Subset::from_ideal_relation(&crate::relation::compose(&f0, &ideal)?)?.into_bits());
                }
                family(out)
            },
        )],
    }
}

pub(super) fn run(cfg: &LawConfig) -> Vec<LawOutcome> {
    let mut out = run_suite(&pair_suite(), cfg);
    out.extend(run_suite(&surjective_suite(), cfg));
    out
}
