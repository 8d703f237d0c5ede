//! Classical formal contexts and their concept lattices.

use std::collections::HashMap;
use std::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::order::{hasse_covers, oracle_bound, Preorder};
use crate::relation::{residuate_source, residuate_target, Carrier, Relation, Subset};

/// Default carrier limit for the NextClosure enumerator.
pub const ENUMERATION_BOUND: usize = 64;

/// Entities, attributes and an incidence relation between them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassicContext {
    incidence: Relation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    Intent,
    Extent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Enumerator {
    #[default]
    NextClosure,
    /// Brute force over every attribute subset.
    PowerSet,
}

impl ClassicContext {
    pub fn new(incidence: Relation) -> Self {
        ClassicContext { incidence }
    }

    pub fn entities(&self) -> &Carrier {
        self.incidence.source()
    }

    pub fn attributes(&self) -> &Carrier {
        self.incidence.target()
    }

    pub fn incidence(&self) -> &Relation {
        &self.incidence
    }

    /// Attributes shared by every entity in `s`.
    pub fn derive_intent(&self, s: &Subset) -> Result<Subset> {
        self.entities().check(s.carrier(), "derive_intent")?;
        Ok(Subset::from_bits(self.attributes(), self.intent_bits(s.bits())))
    }

    /// Entities having every attribute in `s`.
    pub fn derive_extent(&self, s: &Subset) -> Result<Subset> {
        self.attributes().check(s.carrier(), "derive_extent")?;
        Ok(Subset::from_bits(self.entities(), self.extent_bits(s.bits())))
    }

    pub fn derive(&self, direction: Derivation, s: &Subset) -> Result<Subset> {
        match direction {
            Derivation::Intent => self.derive_intent(s),
            Derivation::Extent => self.derive_extent(s),
        }
    }

    pub(crate) fn intent_bits(&self, s: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.attributes().len());
        for x in s.iter() {
            out.intersect_with(&self.incidence.row(x));
        }
        out
    }

    pub(crate) fn extent_bits(&self, s: &BitSet) -> BitSet {
        let n = self.entities().len();
        BitSet::from_indices(n, (0..n).filter(|&x| s.is_subset(&self.incidence.row(x))))
    }

    pub fn close_extent(&self, s: &Subset) -> Result<Subset> {
        self.derive_extent(&self.derive_intent(s)?)
    }

    pub fn close_intent(&self, s: &Subset) -> Result<Subset> {
        self.derive_intent(&self.derive_extent(s)?)
    }

    /// The concept generated by an extent-side subset.
    pub fn concept_of_extent(&self, s: &Subset) -> Result<Concept> {
        let intent = self.derive_intent(s)?;
        let extent = self.derive_extent(&intent)?;
        Ok(Concept { extent, intent })
    }

    /// The concept generated by an intent-side subset.
    pub fn concept_of_intent(&self, s: &Subset) -> Result<Concept> {
        let extent = self.derive_extent(s)?;
        let intent = self.derive_intent(&extent)?;
        Ok(Concept { extent, intent })
    }

    pub fn is_concept(&self, c: &Concept) -> Result<bool> {
        Ok(self.derive_intent(&c.extent)? == c.intent && self.derive_extent(&c.intent)? == c.extent)
    }

    /// `ı̂₀(x₀) = (cl(x₀), x₀μ)`.
    pub fn entity_concept(&self, x0: &str) -> Result<Concept> {
        self.concept_of_extent(&Subset::singleton(self.entities(), x0)?)
    }

    /// `ı̂₁(x₁) = (μx₁, cl(x₁))`.
    pub fn attribute_concept(&self, x1: &str) -> Result<Concept> {
        self.concept_of_intent(&Subset::singleton(self.attributes(), x1)?)
    }
}

/// Source order `μ ⤙ μ` and target order `μ ⇐ μ`.
pub fn induced_orders(c: &ClassicContext) -> (Preorder, Preorder) {
    let mu = c.incidence();
    let source = residuate_target(mu, mu).expect("parallel");
    let target = residuate_source(mu, mu).expect("parallel");
    (Preorder::new_unchecked(source), Preorder::new_unchecked(target))
}

/// An extent-intent pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Concept {
    pub extent: Subset,
    pub intent: Subset,
}

impl Concept {
    pub fn new(ctx: &ClassicContext, extent: Subset, intent: Subset) -> Result<Self> {
        let c = Concept { extent, intent };
        if ctx.is_concept(&c)? {
            Ok(c)
        } else {
            Err(Error::NotAConcept)
        }
    }
}

impl fmt::Debug for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.extent, self.intent)
    }
}

fn canonical_cmp(a: &BitSet, b: &BitSet) -> std::cmp::Ordering {
    b.count().cmp(&a.count()).then_with(|| a.lex_cmp(b))
}

fn next_closure(ctx: &ClassicContext) -> Vec<BitSet> {
    let m = ctx.attributes().len();
    let close = |b: &BitSet| ctx.intent_bits(&ctx.extent_bits(b));
    let mut out = Vec::new();
    let mut a = close(&BitSet::empty(m));
    'outer: loop {
        out.push(a.clone());
        for i in (0..m).rev() {
            if a.contains(i) {
                continue;
            }
            let mut prefix = a.clone();
            for j in i..m {
                prefix.remove(j);
            }
            let mut seed = prefix.clone();
            seed.insert(i);
            let b = close(&seed);
            if (0..i).all(|j| b.contains(j) == prefix.contains(j)) {
                a = b;
                continue 'outer;
            }
        }
        break;
    }
    out
}

fn power_set(ctx: &ClassicContext) -> Vec<BitSet> {
    let m = ctx.attributes().len();
    let mu = ctx.incidence();
    let n = ctx.entities().len();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let ext: Vec<usize> = (0..n).filter(|&x| (0..m).all(|y| mask >> y & 1 == 0 || mu.get(x, y))).collect();
        let int = BitSet::from_indices(m, (0..m).filter(|&y| ext.iter().all(|&x| mu.get(x, y))));
        if seen.insert(int.clone()) {
            out.push(int);
        }
    }
    out
}

pub fn enumerate_concepts(ctx: &ClassicContext) -> Result<ConceptLattice> {
    enumerate_concepts_with(ctx, Enumerator::NextClosure)
}

pub fn enumerate_concepts_with(ctx: &ClassicContext, how: Enumerator) -> Result<ConceptLattice> {
    let (n, m) = (ctx.entities().len(), ctx.attributes().len());
    let intents = match how {
        Enumerator::NextClosure => {
            for (what, size) in [("entity carrier", n), ("attribute carrier", m)] {
                if size > ENUMERATION_BOUND {
                    return Err(Error::Capacity { what, size, bound: ENUMERATION_BOUND });
                }
            }
            next_closure(ctx)
        }
        Enumerator::PowerSet => {
            let bound = oracle_bound().min(30);
            if m > bound {
                return Err(Error::Capacity { what: "power-set oracle attribute carrier", size: m, bound });
            }
            power_set(ctx)
        }
    };
    let concepts = intents
        .into_iter()
        .map(|int| Concept {
            extent: Subset::from_bits(ctx.entities(), ctx.extent_bits(&int)),
            intent: Subset::from_bits(ctx.attributes(), int),
        })
        .collect();
    Ok(ConceptLattice::from_parts(ctx.clone(), concepts))
}

/// A list of concepts in canonical order with the extent-inclusion order.
#[derive(Clone, Debug)]
pub struct ConceptLattice {
    context: ClassicContext,
    concepts: Vec<Concept>,
    order: Relation,
    index: HashMap<BitSet, usize>,
}

impl ConceptLattice {
    /// Sorts `concepts` canonically and builds the order; no completeness check.
    pub fn from_parts(context: ClassicContext, mut concepts: Vec<Concept>) -> Self {
        concepts.sort_by(|a, b| canonical_cmp(a.extent.bits(), b.extent.bits()));
        let carrier = Carrier::new("concepts", (0..concepts.len()).map(|i| format!("c{i}"))).expect("distinct");
        let order =
            Relation::from_fn(&carrier, &carrier, |i, j| concepts[i].extent.bits().is_subset(concepts[j].extent.bits()));
        let index = concepts.iter().enumerate().map(|(i, c)| (c.extent.bits().clone(), i)).collect();
        ConceptLattice { context, concepts, order, index }
    }

    pub fn context(&self) -> &ClassicContext {
        &self.context
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn order(&self) -> &Relation {
        &self.order
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    pub fn index_of(&self, c: &Concept) -> Option<usize> {
        if c.extent.carrier() != self.context.entities() {
            return None;
        }
        self.index.get(c.extent.bits()).copied().filter(|&i| self.concepts[i] == *c)
    }

    pub(crate) fn index_of_extent(&self, ext: &BitSet) -> Option<usize> {
        self.index.get(ext).copied()
    }

    fn members<'a>(&self, family: &[&'a Concept]) -> Result<()> {
        for c in family {
            if self.index_of(c).is_none() {
                return Err(Error::ForeignConcept);
            }
        }
        Ok(())
    }

    /// `(⋂ φₖ, cl(⋃ ψₖ))`.
    pub fn meet(&self, family: &[&Concept]) -> Result<Concept> {
        self.members(family)?;
        let ctx = &self.context;
        let mut ext = BitSet::full(ctx.entities().len());
        for c in family {
            ext.intersect_with(c.extent.bits());
        }
        ctx.concept_of_extent(&Subset::from_bits(ctx.entities(), ext))
    }

    /// `(cl(⋃ φₖ), ⋂ ψₖ)`.
    pub fn join(&self, family: &[&Concept]) -> Result<Concept> {
        self.members(family)?;
        let ctx = &self.context;
        let mut int = BitSet::full(ctx.attributes().len());
        for c in family {
            int.intersect_with(c.intent.bits());
        }
        ctx.concept_of_intent(&Subset::from_bits(ctx.attributes(), int))
    }

    pub fn entity_generator(&self, x0: &str) -> Result<usize> {
        let c = self.context.entity_concept(x0)?;
        self.index_of(&c).ok_or(Error::ForeignConcept)
    }

    pub fn attribute_generator(&self, x1: &str) -> Result<usize> {
        let c = self.context.attribute_concept(x1)?;
        self.index_of(&c).ok_or(Error::ForeignConcept)
    }

    /// Generator images as concept indices, one per entity and attribute.
    pub fn generators(&self) -> Result<Generators> {
        let entity = self.context.entities().elements().iter().map(|x| self.entity_generator(x)).collect::<Result<_>>()?;
        let attribute =
            self.context.attributes().elements().iter().map(|x| self.attribute_generator(x)).collect::<Result<_>>()?;
        Ok(Generators { entity, attribute })
    }

    /// Hasse covers `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        hasse_covers(&self.order)
    }

    /// Reduced labeling: each entity and attribute at its generator concept.
    pub fn labels(&self) -> Vec<ConceptLabel> {
        let mut out = vec![ConceptLabel::default(); self.len()];
        for x in self.context.entities().elements() {
            if let Ok(i) = self.entity_generator(x) {
                out[i].entities.push(x.clone());
            }
        }
        for y in self.context.attributes().elements() {
            if let Ok(i) = self.attribute_generator(y) {
                out[i].attributes.push(y.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    pub entity: Vec<usize>,
    pub attribute: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConceptLabel {
    pub entities: Vec<String>,
    pub attributes: Vec<String>,
}

/// Findings of the four Basic Theorem checks; each list is empty when its check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BasicTheoremReport {
    pub completeness: Vec<String>,
    pub join_dense: Vec<String>,
    pub meet_dense: Vec<String>,
    pub incidence: Vec<String>,
}

impl BasicTheoremReport {
    pub fn is_valid(&self) -> bool {
        self.completeness.is_empty() && self.join_dense.is_empty() && self.meet_dense.is_empty() && self.incidence.is_empty()
    }
}

pub fn verify_basic_theorem(l: &ConceptLattice) -> BasicTheoremReport {
    let mut rep = BasicTheoremReport::default();
    let ctx = l.context();
    let n = l.len();
    for (i, c) in l.concepts().iter().enumerate() {
        if !ctx.is_concept(c).unwrap_or(false) {
            rep.completeness.push(format!("entry {i} {c:?} is not a concept"));
        }
    }
    let present = |c: &Concept| l.index_of_extent(c.extent.bits()).is_some_and(|i| l.concepts()[i] == *c);
    let all: Vec<&Concept> = l.concepts().iter().collect();
    let top = ctx.concept_of_extent(&Subset::full(ctx.entities())).expect("own carrier");
    let bottom = ctx.concept_of_intent(&Subset::full(ctx.attributes())).expect("own carrier");
    for (what, c) in [("greatest", &top), ("least", &bottom)] {
        if !present(c) {
            rep.completeness.push(format!("{what} concept {c:?} missing"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let pair = [all[i], all[j]];
            for (what, r) in [("meet", l.meet(&pair)), ("join", l.join(&pair))] {
                match r {
                    Ok(c) if present(&c) => {}
                    Ok(c) => rep.completeness.push(format!("{what} of entries {i} and {j} is {c:?}, not listed")),
                    Err(e) => rep.completeness.push(format!("{what} of entries {i} and {j}: {e}")),
                }
            }
        }
    }
    let gen0: Vec<Option<usize>> = ctx.entities().elements().iter().map(|x| l.entity_generator(x).ok()).collect();
    let gen1: Vec<Option<usize>> = ctx.attributes().elements().iter().map(|x| l.attribute_generator(x).ok()).collect();
    for (x, g) in gen0.iter().enumerate() {
        if g.is_none() {
            rep.join_dense.push(format!("generator of entity {} missing", ctx.entities().element(x)));
        }
    }
    for (y, g) in gen1.iter().enumerate() {
        if g.is_none() {
            rep.meet_dense.push(format!("generator of attribute {} missing", ctx.attributes().element(y)));
        }
    }
    // c must be the least upper bound of the entity generators below it,
    // and the greatest lower bound of the attribute generators above it.
    for c in 0..n {
        let below: Vec<usize> = gen0.iter().flatten().copied().filter(|&g| l.leq(g, c)).collect();
        let ubs: Vec<usize> = (0..n).filter(|&u| below.iter().all(|&g| l.leq(g, u))).collect();
        if !ubs.iter().all(|&u| l.leq(c, u)) {
            rep.join_dense.push(format!("entry {c} is not the join of the entity generators below it"));
        }
        let above: Vec<usize> = gen1.iter().flatten().copied().filter(|&g| l.leq(c, g)).collect();
        let lbs: Vec<usize> = (0..n).filter(|&u| above.iter().all(|&g| l.leq(u, g))).collect();
        if !lbs.iter().all(|&u| l.leq(u, c)) {
            rep.meet_dense.push(format!("entry {c} is not the meet of the attribute generators above it"));
        }
    }
    let mu = ctx.incidence();
    for (x, g0) in gen0.iter().enumerate() {
        for (y, g1) in gen1.iter().enumerate() {
            if let (Some(a), Some(b)) = (g0, g1) {
                if mu.get(x, y) != l.leq(*a, *b) {
                    rep.incidence.push(format!(
                        "{} μ {} is {} but generator order says {}",
                        ctx.entities().element(x),
                        ctx.attributes().element(y),
                        mu.get(x, y),
                        l.leq(*a, *b)
                    ));
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> ClassicContext {
        let x0 = Carrier::new("X0", ["a", "b"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        ClassicContext::new(Relation::from_pairs(&x0, &x1, [("a", "p"), ("a", "q"), ("b", "q")]).unwrap())
    }

    fn names(s: &Subset) -> Vec<&str> {
        s.names()
    }

    #[test]
    fn t2_concepts() {
        let ctx = t2();
        for how in [Enumerator::NextClosure, Enumerator::PowerSet] {
            let l = enumerate_concepts_with(&ctx, how).unwrap();
            let got: Vec<(Vec<&str>, Vec<&str>)> =
                l.concepts().iter().map(|c| (names(&c.extent), names(&c.intent))).collect();
            assert_eq!(got, vec![(vec!["a", "b"], vec!["q"]), (vec!["a"], vec!["p", "q"])]);
            assert!(verify_basic_theorem(&l).is_valid());
            assert_eq!(l.covers(), vec![(1, 0)]);
        }
    }

    #[test]
    fn t2_generator_order_recovers_incidence() {
        let l = enumerate_concepts(&t2()).unwrap();
        let a = l.entity_generator("a").unwrap();
        let b = l.entity_generator("b").unwrap();
        let p = l.attribute_generator("p").unwrap();
        assert!(l.leq(a, p));
        assert!(!l.leq(b, p));
    }

    #[test]
    fn t2_induced_orders() {
        let ctx = t2();
        let (s, t) = induced_orders(&ctx);
        assert_eq!(s.relation().pairs(), vec![("a", "a"), ("a", "b"), ("b", "b")]);
        assert_eq!(t.relation().pairs(), vec![("p", "p"), ("p", "q"), ("q", "q")]);
    }

    #[test]
    fn top_incidence() {
        let x0 = Carrier::new("X0", ["a", "b", "c"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        let ctx = ClassicContext::new(Relation::top(&x0, &x1));
        let l = enumerate_concepts(&ctx).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.concepts()[0].extent.bits().is_full() && l.concepts()[0].intent.bits().is_full());
        let (s, t) = induced_orders(&ctx);
        assert_eq!(s.relation().count(), 9);
        assert_eq!(t.relation().count(), 4);
    }

    #[test]
    fn empty_context_has_one_concept() {
        let e = Carrier::new("e", Vec::<String>::new()).unwrap();
        let ctx = ClassicContext::new(Relation::bottom(&e, &e));
        for how in [Enumerator::NextClosure, Enumerator::PowerSet] {
            let l = enumerate_concepts_with(&ctx, how).unwrap();
            assert_eq!(l.len(), 1);
            assert!(verify_basic_theorem(&l).is_valid());
        }
    }

    #[test]
    fn meet_and_join_of_empty_family() {
        let l = enumerate_concepts(&t2()).unwrap();
        assert_eq!(l.meet(&[]).unwrap(), l.concepts()[0]);
        assert_eq!(l.join(&[]).unwrap(), l.concepts()[1]);
    }

    #[test]
    fn foreign_concepts_rejected() {
        let l = enumerate_concepts(&t2()).unwrap();
        let other = ClassicContext::new(l.context().incidence().complement());
        let lo = enumerate_concepts(&other).unwrap();
        assert_eq!(l.meet(&[&lo.concepts()[0]]).unwrap_err(), Error::ForeignConcept);
    }

    #[test]
    fn derive_empty_is_full() {
        let ctx = t2();
        assert!(ctx.derive_intent(&Subset::empty(ctx.entities())).unwrap().bits().is_full());
        assert!(ctx.derive(Derivation::Extent, &Subset::empty(ctx.attributes())).unwrap().bits().is_full());
    }

    #[test]
    fn capacity_error() {
        let big = Carrier::new("big", (0..65).map(|i| i.to_string())).unwrap();
        let one = Carrier::unit();
        let ctx = ClassicContext::new(Relation::bottom(&big, &one));
        assert!(matches!(enumerate_concepts(&ctx), Err(Error::Capacity { .. })));
    }

    #[test]
    fn sabotaged_lattice_fails_completeness() {
        let x0 = Carrier::new("X0", ["a", "b", "c"]).unwrap();
        let ctx = ClassicContext::new(Relation::identity(&x0));
        let l = enumerate_concepts(&ctx).unwrap();
        assert_eq!(l.len(), 5);
        let mut cs = l.concepts().to_vec();
        cs.remove(0);
        let broken = ConceptLattice::from_parts(ctx, cs);
        assert!(!verify_basic_theorem(&broken).completeness.is_empty());
    }
}
