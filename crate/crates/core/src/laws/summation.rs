//! Sums of contexts, relative pairing and copairing, and the equivalence
//! between concept lattices and completions of sums.

use super::{rel, run_suite, set, truth, Law, LawConfig, LawOutcome, Suite, Value};
use crate::bits::BitSet;
use crate::classic::{enumerate_concepts_with, ClassicContext, Enumerator};
use crate::dm::{cut_oracle, dm_complete, dm_of_sum, quad_generators, validate_quad};
use crate::enriched::{contextual_closure, maximality_check, validate_context, ContextMap, EnrichedContext};
use crate::equivalence::{closure_identities, verify_equivalence};
use crate::error::Result;
use crate::order::{enumerate_ideals, Preorder};
use crate::random::{carrier, classic_context, closed_relation, context, ordered, relation, subset, Source};
use crate::relation::{compose, residuate_source, residuate_target, Relation, Subset};
use crate::sum::{
    copair_by_implication, copair_components, fibrate, pair_by_implication, pair_components, relative_copair, relative_pair,
    sum, sum_map, verify_sum_equations, SumOrder,
};

fn gen_context(src: &mut dyn Source, k: usize) -> Option<EnrichedContext> {
    context(src, k)
}

fn constrained_ideal_pairs(ctx: &EnrichedContext) -> Result<usize> {
    let (x0, x1) = (ctx.source_order(), ctx.target_order());
    let mut n = 0;
    for d0 in enumerate_ideals(x0)? {
        for d1 in enumerate_ideals(x1)? {
            let a = compose(ctx.forward(), &d1.members().as_ideal_relation())?.leq(&d0.members().as_ideal_relation())?;
            let b = compose(ctx.backward(), &d0.members().as_ideal_relation())?.leq(&d1.members().as_ideal_relation())?;
            n += usize::from(a && b);
        }
    }
    Ok(n)
}

fn context_suite() -> Suite<EnrichedContext> {
    Suite {
        domain: "enriched context",
        generate: gen_context,
        laws: vec![
            Law::eq("sum/fibrate∘sum = id", |c| truth(&fibrate(&sum(c)?)? == c), |_| truth(true)),
            Law::eq("sum/sum∘fibrate = id", |c| { let s = sum(c)?; truth(sum(&fibrate(&s)?)? == s) }, |_| truth(true)),
            Law::eq("sum/disjointness and covering equations", |c| truth(verify_sum_equations(&sum(c)?).is_valid()), |_| truth(true)),
            Law::eq(
                "sum/tag factors through the sum of the terminal context",
                |c| {
                    let s = sum(c)?;
                    let t = sum(&EnrichedContext::terminal())?;
                    let via = sum_map(&ContextMap::to_terminal(c)?, &s, &t)?.then(t.tag())?;
                    truth(via.assignment() == s.tag().assignment())
                },
                |_| truth(true),
            ),
            Law::eq(
                "sum/ideals of the sum are constrained ideal pairs",
                |c| Ok(Value::Count(enumerate_ideals(sum(c)?.order())?.len())),
                |c| Ok(Value::Count(constrained_ideal_pairs(c)?)),
            ),
            Law::eq(
                "enriched/contexts lie inside the closure of their forward relation",
                |c| truth(maximality_check(&contextual_closure(c.forward()), c)?),
                |_| truth(true),
            ),
            Law::eq("enriched/opposite is an involution", |c| truth(&c.opposite().opposite() == c), |_| truth(true)),
        ],
    }
}

/// A context, its sum, and relations into and out of the sum through the
/// discrete carriers `W` and `Z`.
#[derive(Debug)]
pub(super) struct Summed {
    s: SumOrder,
    /// `W → ⊕𝒳`, right-closed; `pair_w2` likewise.
    pair_w: Relation,
    pair_w2: Relation,
    /// `Z → ⊕𝒳`.
    pair_z: Relation,
    /// `⊕𝒳 → Z`, left-closed; `copair_z2` likewise.
    copair_z: Relation,
    copair_z2: Relation,
    /// `⊕𝒳 → W`.
    copair_w: Relation,
    /// `W → Z`.
    plain: Relation,
    on_sum: Subset,
    on_w: Subset,
    on_z: Subset,
}

fn gen_summed(src: &mut dyn Source, k: usize) -> Option<Summed> {
    let ctx = context(src, k)?;
    let s = sum(&ctx).ok()?;
    let w = Preorder::discrete(&carrier(src, "W", "w", k));
    let z = Preorder::discrete(&carrier(src, "Z", "z", k));
    let o = s.order().clone();
    Some(Summed {
        pair_w: closed_relation(src, &w, &o)?,
        pair_w2: closed_relation(src, &w, &o)?,
        pair_z: closed_relation(src, &z, &o)?,
        copair_z: closed_relation(src, &o, &z)?,
        copair_z2: closed_relation(src, &o, &z)?,
        copair_w: closed_relation(src, &o, &w)?,
        plain: relation(src, w.carrier(), z.carrier()),
        on_sum: subset(src, o.carrier()),
        on_w: subset(src, w.carrier()),
        on_z: subset(src, z.carrier()),
        s,
    })
}

impl Summed {
    fn split(&self, sub: &Subset) -> (Subset, Subset) {
        let ctx = self.s.context();
        let (c0, c1) = (ctx.source_order().carrier(), ctx.target_order().carrier());
        let n0 = c0.len();
        let b = sub.bits();
        (
            Subset::from_bits(c0, BitSet::from_indices(n0, b.iter().filter(|&i| i < n0))),
            Subset::from_bits(c1, BitSet::from_indices(c1.len(), b.iter().filter(|&i| i >= n0).map(|i| i - n0))),
        )
    }

    fn join(&self, a: &Subset, b: &Subset) -> Subset {
        let n0 = a.carrier().len();
        Subset::from_bits(self.s.carrier(), BitSet::from_indices(self.s.carrier().len(), a.bits().iter().chain(b.bits().iter().map(|i| i + n0))))
    }

    fn pair(&self, r: &Relation) -> Result<(Relation, Relation)> {
        pair_components(r, &self.s)
    }

    fn copair(&self, r: &Relation) -> Result<(Relation, Relation)> {
        copair_components(r, &self.s)
    }
}

fn intent(r: &Relation, s: &Subset) -> Result<Subset> {
    ClassicContext::new(r.clone()).derive_intent(s)
}

fn extent(r: &Relation, s: &Subset) -> Result<Subset> {
    ClassicContext::new(r.clone()).derive_extent(s)
}

fn pairing_suite() -> Suite<Summed> {
    Suite {
        domain: "relations through a sum",
        generate: gen_summed,
        laws: vec![
            Law::eq(
                "implication/pairing: z⇐(x,y) = (z⇐x, z⇐y)",
                |t| rel(residuate_source(&t.plain, &t.pair_w)?),
                |t| {
                    let (x, y) = t.pair(&t.pair_w)?;
                    rel(relative_pair(&residuate_source(&t.plain, &x)?, &residuate_source(&t.plain, &y)?, &t.s)?)
                },
            ),
            Law::eq(
                "implication/pairing: (x′,y′)⤙(x,y) = (x′⤙x) ∧ (y′⤙y)",
                |t| rel(residuate_target(&t.pair_w, &t.pair_z)?),
                |t| {
                    let ((x1, y1), (x, y)) = (t.pair(&t.pair_w)?, t.pair(&t.pair_z)?);
                    rel(residuate_target(&x1, &x)?.meet(&residuate_target(&y1, &y)?)?)
                },
            ),
            Law::eq(
                "implication/copairing: [x,y]⇐[x′,y′] = (x⇐x′) ∧ (y⇐y′)",
                |t| rel(residuate_source(&t.copair_z, &t.copair_w)?),
                |t| {
                    let ((x, y), (x1, y1)) = (t.copair(&t.copair_z)?, t.copair(&t.copair_w)?);
                    rel(residuate_source(&x, &x1)?.meet(&residuate_source(&y, &y1)?)?)
                },
            ),
            Law::eq(
                "implication/copairing: [x,y]⤙z = [x⤙z, y⤙z]",
                |t| rel(residuate_target(&t.copair_z, &t.plain)?),
                |t| {
                    let (x, y) = t.copair(&t.copair_z)?;
                    rel(relative_copair(&residuate_target(&x, &t.plain)?, &residuate_target(&y, &t.plain)?, &t.s)?)
                },
            ),
            Law::eq(
                "derivation/pairing (intent): pair of intents",
                |t| set(intent(&t.pair_w, &t.on_w)?),
                |t| {
                    let (x, y) = t.pair(&t.pair_w)?;
                    set(t.join(&intent(&x, &t.on_w)?, &intent(&y, &t.on_w)?))
                },
            ),
            Law::eq(
                "derivation/pairing (extent): meet of extents",
                |t| set(extent(&t.pair_w, &t.on_sum)?),
                |t| {
                    let ((x, y), (a, b)) = (t.pair(&t.pair_w)?, t.split(&t.on_sum));
                    set(extent(&x, &a)?.intersection(&extent(&y, &b)?)?)
                },
            ),
            Law::eq(
                "derivation/copairing (intent): meet of intents",
                |t| set(intent(&t.copair_z, &t.on_sum)?),
                |t| {
                    let ((x, y), (a, b)) = (t.copair(&t.copair_z)?, t.split(&t.on_sum));
                    set(intent(&x, &a)?.intersection(&intent(&y, &b)?)?)
                },
            ),
            Law::eq(
                "derivation/copairing (extent): copair of extents",
                |t| set(extent(&t.copair_z, &t.on_z)?),
                |t| {
                    let (x, y) = t.copair(&t.copair_z)?;
                    set(t.join(&extent(&x, &t.on_z)?, &extent(&y, &t.on_z)?))
                },
            ),
        ],
    }
}

fn summation_suite() -> Suite<Summed> {
    Suite {
        domain: "pairing and copairing",
        generate: gen_summed,
        laws: vec![
            Law::eq(
                "sum/copair of components is the identity",
                |t| {
                    let (a, b) = t.copair(&t.copair_z)?;
                    rel(relative_copair(&a, &b, &t.s)?)
                },
                |t| rel(t.copair_z.clone()),
            ),
            Law::eq(
                "sum/pair of components is the identity",
                |t| {
                    let (a, b) = t.pair(&t.pair_w)?;
                    rel(relative_pair(&a, &b, &t.s)?)
                },
                |t| rel(t.pair_w.clone()),
            ),
            Law::eq(
                "sum/copair is an order isomorphism",
                |t| truth(t.copair_z.leq(&t.copair_z2)?),
                |t| {
                    let ((a, b), (c, d)) = (t.copair(&t.copair_z)?, t.copair(&t.copair_z2)?);
                    truth(a.leq(&c)? && b.leq(&d)?)
                },
            ),
            Law::eq(
                "sum/pair is an order isomorphism",
                |t| truth(t.pair_w.leq(&t.pair_w2)?),
                |t| {
                    let ((a, b), (c, d)) = (t.pair(&t.pair_w)?, t.pair(&t.pair_w2)?);
                    truth(a.leq(&c)? && b.leq(&d)?)
                },
            ),
            Law::eq(
                "sum/copair join form = implication form",
                |t| {
                    let (a, b) = t.copair(&t.copair_z)?;
                    rel(relative_copair(&a, &b, &t.s)?)
                },
                |t| {
                    let (a, b) = t.copair(&t.copair_z)?;
                    rel(copair_by_implication(&a, &b, &t.s)?)
                },
            ),
            Law::eq(
                "sum/pair join form = implication form",
                |t| {
                    let (a, b) = t.pair(&t.pair_w)?;
                    rel(relative_pair(&a, &b, &t.s)?)
                },
                |t| {
                    let (a, b) = t.pair(&t.pair_w)?;
                    rel(pair_by_implication(&a, &b, &t.s)?)
                },
            ),
            Law::eq(
                "sum/[ρ₀,ρ₁]∘σ = [ρ₀∘σ, ρ₁∘σ]",
                |t| rel(compose(&t.copair_z, &t.plain.opposite())?),
                |t| {
                    let (a, b) = t.copair(&t.copair_z)?;
                    let r = t.plain.opposite();
                    rel(relative_copair(&compose(&a, &r)?, &compose(&b, &r)?, &t.s)?)
                },
            ),
            Law::eq(
                "sum/ρ∘(σ₀,σ₁) = (ρ∘σ₀, ρ∘σ₁)",
                |t| rel(compose(&t.plain.opposite(), &t.pair_w)?),
                |t| {
                    let (a, b) = t.pair(&t.pair_w)?;
                    let r = t.plain.opposite();
                    rel(relative_pair(&compose(&r, &a)?, &compose(&r, &b)?, &t.s)?)
                },
            ),
            Law::eq(
                "sum/copair distributes over meets",
                |t| rel(t.copair_z.meet(&t.copair_z2)?),
                |t| {
                    let ((a, b), (c, d)) = (t.copair(&t.copair_z)?, t.copair(&t.copair_z2)?);
                    rel(relative_copair(&a.meet(&c)?, &b.meet(&d)?, &t.s)?)
                },
            ),
            Law::eq(
                "sum/pair distributes over meets",
                |t| rel(t.pair_w.meet(&t.pair_w2)?),
                |t| {
                    let ((a, b), (c, d)) = (t.pair(&t.pair_w)?, t.pair(&t.pair_w2)?);
                    rel(relative_pair(&a.meet(&c)?, &b.meet(&d)?, &t.s)?)
                },
            ),
        ],
    }
}

fn gen_incidence(src: &mut dyn Source, k: usize) -> Option<ClassicContext> {
    Some(classic_context(src, k))
}

fn equivalence_suite() -> Suite<ClassicContext> {
    Suite {
        domain: "incidence relation",
        generate: gen_incidence,
        laws: vec![
            Law::eq(
                "equivalence/concept lattice ≅ completion of the sum",
                |c| truth(verify_equivalence(c.incidence())?.is_isomorphic()),
                |_| truth(true),
            ),
            Law::eq(
                "equivalence/closure identities hold for every concept",
                |c| {
                    let l = enumerate_concepts_with(c, Enumerator::NextClosure)?;
                    let mut ok = true;
                    for concept in l.concepts() {
                        ok &= closure_identities(concept, c)?.is_empty();
                    }
                    truth(ok)
                },
                |_| truth(true),
            ),
            Law::eq(
                "completion/quadruples satisfy the ideal, filter, extent and intent conditions",
                |c| {
                    let ctx = contextual_closure(c.incidence());
                    let mut ok = true;
                    for q in dm_of_sum(&ctx)?.quads() {
                        ok &= validate_quad(&ctx, q)?.is_empty();
                    }
                    truth(ok)
                },
                |_| truth(true),
            ),
            Law::eq(
                "completion/generator quadruples are cuts of the sum",
                |c| {
                    let ctx = contextual_closure(c.incidence());
                    let l = dm_of_sum(&ctx)?;
                    let g = quad_generators(&ctx)?;
                    truth(g.entity.iter().chain(&g.attribute).all(|q| l.index_of(q).is_some()))
                },
                |_| truth(true),
            ),
            Law::eq(
                "enumeration/next closure = power set",
                |c| truth(enumerate_concepts_with(c, Enumerator::NextClosure)?.concepts() == enumerate_concepts_with(c, Enumerator::PowerSet)?.concepts()),
                |_| truth(true),
            ),
            Law::eq(
                "enriched/contextual closure is a valid context",
                |c| {
                    let k = contextual_closure(c.incidence());
                    truth(validate_context(k.source_order(), k.target_order(), k.forward(), k.backward()).is_valid())
                },
                |_| truth(true),
            ),
        ],
    }
}

fn gen_preorder(src: &mut dyn Source, k: usize) -> Option<Preorder> {
    ordered(src, "X", "x", k)
}

fn completion_suite() -> Suite<Preorder> {
    Suite {
        domain: "preorder",
        generate: gen_preorder,
        laws: vec![
            Law::eq("completion/cuts = cut oracle", |p| truth(dm_complete(p)?.cuts() == cut_oracle(p)?), |_| truth(true)),
            Law::eq(
                "completion/embedding reflects the order",
                |p| {
                    let dm = dm_complete(p)?;
                    let names = p.carrier().elements();
                    let mut ok = true;
                    for (i, a) in names.iter().enumerate() {
                        for (j, b) in names.iter().enumerate() {
                            ok &= p.le(i, j) == dm.leq(dm.embed(a)?, dm.embed(b)?);
                        }
                    }
                    truth(ok)
                },
                |_| truth(true),
            ),
        ],
    }
}

/// Pairing and copairing derivation and implication laws.
pub(super) fn run_derivation(cfg: &LawConfig) -> Vec<LawOutcome> {
    run_suite(&pairing_suite(), cfg)
}

pub(super) fn run(cfg: &LawConfig) -> Vec<LawOutcome> {
    let mut out = run_suite(&context_suite(), cfg);
    out.extend(run_suite(&summation_suite(), cfg));
    out.extend(run_suite(&equivalence_suite(), cfg));
    out.extend(run_suite(&completion_suite(), cfg));
    out
}
