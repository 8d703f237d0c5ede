//! Dedekind–MacNeille completion by cuts, and its quadruple presentation
//! for sums of contexts.

use std::fmt;

use crate::bits::BitSet;
use crate::classic::{enumerate_concepts_with, ClassicContext, ConceptLattice, Enumerator};
use crate::enriched::{contextual_closure, EnrichedContext};
use crate::error::{Error, Result};
use crate::order::{lower_bounds, oracle_bound, principal_filter, principal_ideal, upper_bounds, Filter, Ideal, Preorder};
use crate::relation::{compose, residuate_source, residuate_target, Relation, Subset};
use crate::sum::{sum, SumOrder};

/// A pair `(A, B)` with `B` the upper bounds of `A` and `A` the lower bounds of `B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cut {
    pub ideal: Ideal,
    pub filter: Filter,
}

#[derive(Clone, Debug)]
pub struct DmLattice {
    order: Preorder,
    cuts: Vec<Cut>,
    lattice: ConceptLattice,
}

impl DmLattice {
    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// Ideal inclusion between cuts `i` and `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice.leq(i, j)
    }

    /// The cuts as a concept lattice of `(X, X, ≤)`.
    pub fn as_concept_lattice(&self) -> &ConceptLattice {
        &self.lattice
    }

    /// Index of the principal cut `(↓x, ↑x)`.
    pub fn embed(&self, x: &str) -> Result<usize> {
        let down = principal_ideal(&self.order, x)?;
        self.lattice.index_of_extent(down.members().bits()).ok_or(Error::ForeignConcept)
    }
}

/// Cuts of `p`, computed as the concepts of `(X, X, ≤)`.
pub fn dm_complete(p: &Preorder) -> Result<DmLattice> {
    dm_complete_with(p, Enumerator::NextClosure)
}

pub fn dm_complete_with(p: &Preorder, how: Enumerator) -> Result<DmLattice> {
    let lattice = enumerate_concepts_with(&ClassicContext::new(p.relation().clone()), how)?;
    let cuts = lattice
        .concepts()
        .iter()
        .map(|c| Cut {
            ideal: Ideal::new(p, c.extent.clone()).expect("extents are ideals"),
            filter: Filter::new(p, c.intent.clone()).expect("intents are filters"),
        })
        .collect();
    Ok(DmLattice { order: p.clone(), cuts, lattice })
}

/// Brute-force cuts: every subset `A` whose upper bounds have `A` as lower bounds.
pub fn cut_oracle(p: &Preorder) -> Result<Vec<Cut>> {
    let n = p.len();
    let bound = oracle_bound().min(30);
    if n > bound {
        return Err(Error::Capacity { what: "cut oracle carrier", size: n, bound });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let a: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&y| a.iter().all(|&x| p.le(x, y))).collect();
        let lb: Vec<usize> = (0..n).filter(|&x| b.iter().all(|&y| p.le(x, y))).collect();
        if lb == a {
            let c = p.carrier();
            out.push(Cut {
                ideal: Ideal::new(p, Subset::from_bits(c, BitSet::from_indices(n, a)))?,
                filter: Filter::new(p, Subset::from_bits(c, BitSet::from_indices(n, b)))?,
            });
        }
    }
    out.sort_by(|x, y| {
        let (a, b) = (x.ideal.members().bits(), y.ideal.members().bits());
        b.count().cmp(&a.count()).then_with(|| a.lex_cmp(b))
    });
    Ok(out)
}

/// `⟨[φ₀,φ₁],(ψ₀,ψ₁)⟩`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadConcept {
    pub phi0: Subset,
    pub phi1: Subset,
    pub psi0: Subset,
    pub psi1: Subset,
}

impl fmt::Debug for QuadConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨[{:?},{:?}],({:?},{:?})⟩", self.phi0, self.phi1, self.psi0, self.psi1)
    }
}

/// Names of the failed assertions and constraints; empty when all eight hold.
pub fn validate_quad(ctx: &EnrichedContext, q: &QuadConcept) -> Result<Vec<&'static str>> {
    let (x0, x1) = (ctx.source_order(), ctx.target_order());
    let (m01, m10) = (ctx.forward(), ctx.backward());
    let (f0, f1) = (q.phi0.as_ideal_relation(), q.phi1.as_ideal_relation());
    let (g0, g1) = (q.psi0.as_filter_relation(), q.psi1.as_filter_relation());
    let lower = |s: &Subset, p: &Preorder| lower_bounds(s, p).map(Ideal::into_subset);
    let upper = |s: &Subset, p: &Preorder| upper_bounds(s, p).map(Filter::into_subset);
    let ext = |r: &Relation, g: &Relation| residuate_target(r, g).and_then(|x| Subset::from_ideal_relation(&x));
    let int = |f: &Relation, r: &Relation| residuate_source(f, r).and_then(|x| Subset::from_filter_relation(&x));
    let checks: [(&'static str, bool); 8] = [
        ("μ₀₁∘φ₁ ≤ φ₀", compose(m01, &f1)?.leq(&f0)?),
        ("μ₁₀∘φ₀ ≤ φ₁", compose(m10, &f0)?.leq(&f1)?),
        ("ψ₀∘μ₀₁ ≤ ψ₁", compose(&g0, m01)?.leq(&g1)?),
        ("ψ₁∘μ₁₀ ≤ ψ₀", compose(&g1, m10)?.leq(&g0)?),
        ("φ₀ = lower(ψ₀) ∧ μ₀₁⤙ψ₁", q.phi0 == lower(&q.psi0, x0)?.intersection(&ext(m01, &g1)?)?),
        ("φ₁ = μ₁₀⤙ψ₀ ∧ lower(ψ₁)", q.phi1 == ext(m10, &g0)?.intersection(&lower(&q.psi1, x1)?)?),
        ("ψ₀ = upper(φ₀) ∧ φ₁⇐μ₁₀", q.psi0 == upper(&q.phi0, x0)?.intersection(&int(&f1, m10)?)?),
        ("ψ₁ = φ₀⇐μ₀₁ ∧ upper(φ₁)", q.psi1 == int(&f0, m01)?.intersection(&upper(&q.phi1, x1)?)?),
    ];
    Ok(checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect())
}

#[derive(Clone, Debug)]
pub struct QuadLattice {
    context: EnrichedContext,
    sum: SumOrder,
    quads: Vec<QuadConcept>,
    dm: DmLattice,
}

impl QuadLattice {
    pub fn context(&self) -> &EnrichedContext {
        &self.context
    }

    pub fn sum(&self) -> &SumOrder {
        &self.sum
    }

    pub fn quads(&self) -> &[QuadConcept] {
        &self.quads
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    /// Componentwise extent inclusion.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.quads[i], &self.quads[j]);
        a.phi0.bits().is_subset(b.phi0.bits()) && a.phi1.bits().is_subset(b.phi1.bits())
    }

    pub fn index_of(&self, q: &QuadConcept) -> Option<usize> {
        self.quads.iter().position(|x| x == q)
    }

    pub fn dm(&self) -> &DmLattice {
        &self.dm
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.dm.lattice.covers()
    }
}

fn split(s: &SumOrder, ideal: &BitSet, filter: &BitSet) -> QuadConcept {
    let ctx = s.context();
    let (c0, c1) = (ctx.source_order().carrier(), ctx.target_order().carrier());
    let n0 = c0.len();
    let part = |b: &BitSet, lo: usize, len: usize| BitSet::from_indices(len, b.iter().filter(|&i| i >= lo && i < lo + len).map(|i| i - lo));
    QuadConcept {
        phi0: Subset::from_bits(c0, part(ideal, 0, n0)),
        phi1: Subset::from_bits(c1, part(ideal, n0, c1.len())),
        psi0: Subset::from_bits(c0, part(filter, 0, n0)),
        psi1: Subset::from_bits(c1, part(filter, n0, c1.len())),
    }
}

/// Completion of `⊕𝒳` with each cut split by tag.
pub fn dm_of_sum(ctx: &EnrichedContext) -> Result<QuadLattice> {
    dm_of_sum_with(ctx, Enumerator::NextClosure)
}

pub fn dm_of_sum_with(ctx: &EnrichedContext, how: Enumerator) -> Result<QuadLattice> {
    let s = sum(ctx)?;
    let dm = dm_complete_with(s.order(), how)?;
    let quads = dm.cuts().iter().map(|c| split(&s, c.ideal.members().bits(), c.filter.members().bits())).collect();
    Ok(QuadLattice { context: ctx.clone(), sum: s, quads, dm })
}

#[derive(Clone, Debug)]
pub struct QuadGenerators {
    pub entity: Vec<QuadConcept>,
    pub attribute: Vec<QuadConcept>,
}

/// Generator quadruples from the displayed element table; `ctx` must be a
/// contextual closure.
pub fn quad_generators(ctx: &EnrichedContext) -> Result<QuadGenerators> {
    if &contextual_closure(ctx.forward()) != ctx {
        return Err(Error::Invalid("generator quadruples need the contextual closure of the forward relation".into()));
    }
    let classic = ctx.classic();
    let (x0, x1) = (ctx.source_order(), ctx.target_order());
    let mu = ctx.forward();
    let lower = |s: &Subset, p: &Preorder| lower_bounds(s, p).map(Ideal::into_subset);
    let upper = |s: &Subset, p: &Preorder| upper_bounds(s, p).map(Filter::into_subset);
    let mut entity = Vec::new();
    for (i, x) in x0.carrier().elements().iter().enumerate() {
        let row = Subset::from_bits(x1.carrier(), mu.row(i));
        let cl = classic.close_extent(&Subset::singleton(x0.carrier(), x)?)?;
        entity.push(QuadConcept {
            phi0: principal_ideal(x0, x)?.into_subset().intersection(&cl)?,
            phi1: lower(&row, x1)?,
            psi0: principal_filter(x0, x)?.into_subset(),
            psi1: row,
        });
    }
    let mut attribute = Vec::new();
    for (j, y) in x1.carrier().elements().iter().enumerate() {
        let col = Subset::from_bits(x0.carrier(), mu.column(j));
        let cl = classic.close_intent(&Subset::singleton(x1.carrier(), y)?)?;
        attribute.push(QuadConcept {
            phi0: col.clone(),
            phi1: principal_ideal(x1, y)?.into_subset(),
            psi0: upper(&col, x0)?,
            psi1: principal_filter(x1, y)?.into_subset().intersection(&cl)?,
        });
    }
    Ok(QuadGenerators { entity, attribute })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Carrier;

    fn names(s: &Subset) -> Vec<&str> {
        s.names()
    }

    #[test]
    fn two_chain_has_two_cuts() {
        let p = Preorder::chain(&Carrier::new("C", ["0", "1"]).unwrap());
        let dm = dm_complete(&p).unwrap();
        let got: Vec<(Vec<&str>, Vec<&str>)> =
            dm.cuts().iter().map(|c| (names(c.ideal.members()), names(c.filter.members()))).collect();
        assert_eq!(got, vec![(vec!["0", "1"], vec!["1"]), (vec!["0"], vec!["0", "1"])]);
        assert_eq!(cut_oracle(&p).unwrap(), dm.cuts());
    }

    #[test]
    fn antichain_completes_to_a_diamond() {
        let p = Preorder::discrete(&Carrier::new("A", ["a", "b"]).unwrap());
        let dm = dm_complete(&p).unwrap();
        let got: Vec<(Vec<&str>, Vec<&str>)> =
            dm.cuts().iter().map(|c| (names(c.ideal.members()), names(c.filter.members()))).collect();
        assert_eq!(
            got,
            vec![(vec!["a", "b"], vec![]), (vec!["a"], vec!["a"]), (vec!["b"], vec!["b"]), (vec![], vec!["a", "b"])]
        );
        assert_eq!(cut_oracle(&p).unwrap(), dm.cuts());
        assert_eq!(dm.as_concept_lattice().covers().len(), 4);
    }

    #[test]
    fn t2_quads() {
        let x0 = Carrier::new("X0", ["a", "b"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        let mu = Relation::from_pairs(&x0, &x1, [("a", "p"), ("a", "q"), ("b", "q")]).unwrap();
        let ctx = contextual_closure(&mu);
        let ql = dm_of_sum(&ctx).unwrap();
        let got: Vec<[Vec<&str>; 4]> =
            ql.quads().iter().map(|q| [names(&q.phi0), names(&q.phi1), names(&q.psi0), names(&q.psi1)]).collect();
        assert_eq!(
            got,
            vec![
                [vec!["a", "b"], vec!["p", "q"], vec!["b"], vec!["q"]],
                [vec!["a"], vec!["p"], vec!["a", "b"], vec!["p", "q"]],
            ]
        );
        for q in ql.quads() {
            assert!(validate_quad(&ctx, q).unwrap().is_empty());
        }
        let g = quad_generators(&ctx).unwrap();
        assert_eq!(g.entity[0], ql.quads()[1]);
        assert_eq!(g.attribute[1], ql.quads()[0]);
    }

    #[test]
    fn embedding_reflects_order() {
        let c = Carrier::new("C", ["a", "b", "c", "d"]).unwrap();
        let p = Preorder::generated_by(&Relation::from_pairs(&c, &c, [("a", "c"), ("b", "c"), ("b", "d")]).unwrap()).unwrap();
        let dm = dm_complete(&p).unwrap();
        for x in c.elements() {
            for y in c.elements() {
                assert_eq!(p.leq(x, y).unwrap(), dm.leq(dm.embed(x).unwrap(), dm.embed(y).unwrap()));
            }
        }
    }

    #[test]
    fn generators_need_a_closure() {
        let c = Carrier::new("C", ["a"]).unwrap();
        let d = Preorder::discrete(&c);
        let ctx = EnrichedContext::new(d.clone(), d, Relation::bottom(&c, &c), Relation::bottom(&c, &c)).unwrap();
        assert!(quad_generators(&ctx).is_err());
    }
}
