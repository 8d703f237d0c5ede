//! The isomorphism between the concept lattice of a relation and the
//! completion of the sum of its contextual closure.

use crate::classic::{enumerate_concepts_with, induced_orders, ClassicContext, Concept, Enumerator};
use crate::dm::{dm_of_sum_with, validate_quad, QuadConcept};
use crate::enriched::contextual_closure;
use crate::error::{Error, Result};
use crate::order::{lower_bounds, upper_bounds};
use crate::relation::{residuate_source, residuate_target, Relation, Subset};

/// `⟨φ,ψ⟩ ↦ ⟨[φ, μ⇐φ], (ψ⤙μ, ψ)⟩`.
pub fn cl_to_dm(c: &Concept, ctx: &ClassicContext) -> Result<QuadConcept> {
    if !ctx.is_concept(c)? {
        return Err(Error::NotAConcept);
    }
    let mu = ctx.incidence();
    let phi1 = Subset::from_ideal_relation(&residuate_source(mu, &c.extent.as_ideal_relation())?)?;
    let psi0 = Subset::from_filter_relation(&residuate_target(&c.intent.as_filter_relation(), mu)?)?;
    Ok(QuadConcept { phi0: c.extent.clone(), phi1, psi0, psi1: c.intent.clone() })
}

/// The four closure identities of the isomorphism; returns the failed ones.
pub fn closure_identities(c: &Concept, ctx: &ClassicContext) -> Result<Vec<&'static str>> {
    let q = cl_to_dm(c, ctx)?;
    let (s, t) = induced_orders(ctx);
    let checks = [
        ("φ = extent(ψ)", c.extent == ctx.derive_extent(&c.intent)?),
        ("μ⇐φ = lower(ψ)", q.phi1 == lower_bounds(&c.intent, &t)?.into_subset()),
        ("ψ⤙μ = upper(φ)", q.psi0 == upper_bounds(&c.extent, &s)?.into_subset()),
        ("ψ = intent(φ)", c.intent == ctx.derive_intent(&c.extent)?),
    ];
    Ok(checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect())
}

/// Mutually inverse index maps between concepts and quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub concepts: usize,
    pub quads: usize,
    pub witness: Option<IsoWitness>,
    pub counterexamples: Vec<String>,
}

impl EquivalenceReport {
    pub fn is_isomorphic(&self) -> bool {
        self.witness.is_some() && self.counterexamples.is_empty()
    }
}

pub fn verify_equivalence(mu: &Relation) -> Result<EquivalenceReport> {
    verify_equivalence_with(mu, Enumerator::NextClosure)
}

pub fn verify_equivalence_with(mu: &Relation, how: Enumerator) -> Result<EquivalenceReport> {
    let ctx = ClassicContext::new(mu.clone());
    let cl = enumerate_concepts_with(&ctx, how)?;
    let closure = contextual_closure(mu);
    let dm = dm_of_sum_with(&closure, how)?;
    let mut bad = Vec::new();
    let mut forward = Vec::with_capacity(cl.len());
    for (i, c) in cl.concepts().iter().enumerate() {
        let q = cl_to_dm(c, &ctx)?;
        let failed = validate_quad(&closure, &q)?;
        if !failed.is_empty() {
            bad.push(format!("image of concept {i} violates {failed:?}"));
        }
        let failed = closure_identities(c, &ctx)?;
        if !failed.is_empty() {
            bad.push(format!("concept {i} violates {failed:?}"));
        }
        match dm.index_of(&q) {
            Some(j) => forward.push(j),
            None => bad.push(format!("image of concept {i} {q:?} is not a cut of the sum")),
        }
    }
    for (j, q) in dm.quads().iter().enumerate() {
        let failed = validate_quad(&closure, q)?;
        if !failed.is_empty() {
            bad.push(format!("quadruple {j} violates {failed:?}"));
        }
    }
    let mut witness = None;
    if bad.is_empty() {
        let mut backward = vec![usize::MAX; dm.len()];
        for (i, &j) in forward.iter().enumerate() {
            if backward[j] != usize::MAX {
                bad.push(format!("concepts {} and {i} share an image", backward[j]));
            }
            backward[j] = i;
        }
        for (j, q) in dm.quads().iter().enumerate() {
            let projected = Concept { extent: q.phi0.clone(), intent: q.psi1.clone() };
            match cl.index_of(&projected) {
                Some(i) if backward[j] == i => {}
                _ => bad.push(format!("quadruple {j} does not project to its preimage")),
            }
        }
        for i in 0..cl.len() {
            for k in 0..cl.len() {
                if cl.leq(i, k) != dm.leq(forward[i], forward[k]) {
                    bad.push(format!("order between concepts {i} and {k} is not preserved"));
                }
            }
        }
        if bad.is_empty() {
            witness = Some(IsoWitness { forward, backward });
        }
    }
    Ok(EquivalenceReport { concepts: cl.len(), quads: dm.len(), witness, counterexamples: bad })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Carrier;

    fn t2() -> Relation {
        let x0 = Carrier::new("X0", ["a", "b"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        Relation::from_pairs(&x0, &x1, [("a", "p"), ("a", "q"), ("b", "q")]).unwrap()
    }

    #[test]
    fn t2_top_concept_image() {
        let ctx = ClassicContext::new(t2());
        let top = ctx.concept_of_extent(&Subset::full(ctx.entities())).unwrap();
        let q = cl_to_dm(&top, &ctx).unwrap();
        assert_eq!(q.phi1.names(), vec!["p", "q"]);
        assert_eq!(q.psi0.names(), vec!["b"]);
        assert!(closure_identities(&top, &ctx).unwrap().is_empty());
    }

    #[test]
    fn non_concepts_rejected() {
        let ctx = ClassicContext::new(t2());
        let c = Concept { extent: Subset::full(ctx.entities()), intent: Subset::full(ctx.attributes()) };
        assert_eq!(cl_to_dm(&c, &ctx).unwrap_err(), Error::NotAConcept);
    }

    #[test]
    fn t2_and_top_are_isomorphic() {
        let r = verify_equivalence(&t2()).unwrap();
        assert!(r.is_isomorphic(), "{:?}", r.counterexamples);
        assert_eq!((r.concepts, r.quads), (2, 2));
        let x0 = Carrier::new("X0", ["a", "b", "c"]).unwrap();
        let x1 = Carrier::new("X1", ["p"]).unwrap();
        let r = verify_equivalence(&Relation::top(&x0, &x1)).unwrap();
        assert!(r.is_isomorphic());
        assert_eq!((r.concepts, r.quads), (1, 1));
    }
}
