//! Four-quadrant formal contexts `(𝒳₀, μ₀₁; μ₁₀, 𝒳₁)`.

use std::fmt;

use crate::classic::{induced_orders, ClassicContext};
use crate::error::{Error, Result};
use crate::order::{is_left_closed, is_right_closed, MonotoneMap, Preorder};
use crate::relation::{compose, residuate_source, residuate_target, Relation};

/// Two preorders with a pair of oppositely directed closed relations
/// satisfying both orthogonality constraints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnrichedContext {
    source_order: Preorder,
    target_order: Preorder,
    forward: Relation,
    backward: Relation,
}

/// Outcome of [`validate_context`]; empty `violations` means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContextReport {
    pub violations: Vec<String>,
}

impl ContextReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ContextReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            write!(f, "{}", self.violations.join("; "))
        }
    }
}

pub fn validate_context(
    source_order: &Preorder,
    target_order: &Preorder,
    forward: &Relation,
    backward: &Relation,
) -> ContextReport {
    let mut v = Vec::new();
    let (x0, x1) = (source_order.carrier(), target_order.carrier());
    if forward.source() != x0 || forward.target() != x1 {
        v.push("forward relation carriers do not match the orders".to_string());
    }
    if backward.source() != x1 || backward.target() != x0 {
        v.push("backward relation carriers do not match the orders".to_string());
    }
    if !v.is_empty() {
        return ContextReport { violations: v };
    }
    let checks = [
        ("forward not closed on the left", is_left_closed(forward, source_order)),
        ("forward not closed on the right", is_right_closed(forward, target_order)),
        ("backward not closed on the left", is_left_closed(backward, target_order)),
        ("backward not closed on the right", is_right_closed(backward, source_order)),
        (
            "orthogonality μ₀₁∘μ₁₀ ≤ 𝒳₀ fails",
            compose(forward, backward).and_then(|r| r.leq(source_order.relation())),
        ),
        (
            "orthogonality μ₁₀∘μ₀₁ ≤ 𝒳₁ fails",
            compose(backward, forward).and_then(|r| r.leq(target_order.relation())),
        ),
    ];
    for (msg, ok) in checks {
        if !ok.unwrap_or(false) {
            v.push(msg.to_string());
        }
    }
    ContextReport { violations: v }
}

impl EnrichedContext {
    pub fn new(source_order: Preorder, target_order: Preorder, forward: Relation, backward: Relation) -> Result<Self> {
        let report = validate_context(&source_order, &target_order, &forward, &backward);
        if !report.is_valid() {
            return Err(Error::InvalidContext(report.to_string()));
        }
        Ok(EnrichedContext { source_order, target_order, forward, backward })
    }

    pub fn source_order(&self) -> &Preorder {
        &self.source_order
    }

    pub fn target_order(&self) -> &Preorder {
        &self.target_order
    }

    /// `μ₀₁`.
    pub fn forward(&self) -> &Relation {
        &self.forward
    }

    /// `μ₁₀`.
    pub fn backward(&self) -> &Relation {
        &self.backward
    }

    pub fn classic(&self) -> ClassicContext {
        ClassicContext::new(self.forward.clone())
    }

    /// `(𝒳₁ᵒᵖ, μ₀₁ᵒᵖ; μ₁₀ᵒᵖ, 𝒳₀ᵒᵖ)`.
    pub fn opposite(&self) -> EnrichedContext {
        EnrichedContext {
            source_order: self.target_order.opposite(),
            target_order: self.source_order.opposite(),
            forward: self.forward.opposite(),
            backward: self.backward.opposite(),
        }
    }

    /// The context with one entity and one attribute, each related to the other.
    pub fn terminal() -> EnrichedContext {
        let one = Preorder::unit();
        let r = one.relation().clone();
        EnrichedContext { source_order: one.clone(), target_order: one, forward: r.clone(), backward: r }
    }

    /// `(𝒴₀, f₀▷∘μ₀₁∘f₁◁; f₁▷∘μ₁₀∘f₀◁, 𝒴₁)`.
    pub fn inverse_image(&self, f0: &MonotoneMap, f1: &MonotoneMap) -> Result<EnrichedContext> {
        if f0.target() != &self.source_order || f1.target() != &self.target_order {
            return Err(Error::Invalid("inverse image maps must land in the context's orders".into()));
        }
        let forward = compose(&compose(&f0.direct_graph(), &self.forward)?, &f1.inverse_graph())?;
        let backward = compose(&compose(&f1.direct_graph(), &self.backward)?, &f0.inverse_graph())?;
        EnrichedContext::new(f0.source().clone(), f1.source().clone(), forward, backward)
    }

    /// Componentwise product.
    pub fn product(&self, other: &EnrichedContext) -> Result<EnrichedContext> {
        let s = Preorder::new(self.source_order.relation().product(other.source_order.relation())?)?;
        let t = Preorder::new(self.target_order.relation().product(other.target_order.relation())?)?;
        EnrichedContext::new(s, t, self.forward.product(&other.forward)?, self.backward.product(&other.backward)?)
    }

    /// Componentwise meet over the same carriers.
    pub fn meet(&self, other: &EnrichedContext) -> Result<EnrichedContext> {
        let s = Preorder::new(self.source_order.relation().meet(other.source_order.relation())?)?;
        let t = Preorder::new(self.target_order.relation().meet(other.target_order.relation())?)?;
        EnrichedContext::new(s, t, self.forward.meet(&other.forward)?, self.backward.meet(&other.backward)?)
    }
}

/// `μ ⇐ 𝒳₀ : X₁ → X₀`, the pairs with `μx₁ ⊆ ↓x₀`.
pub fn source_negation(mu: &Relation, source: &Preorder) -> Result<Relation> {
    residuate_source(mu, source.relation())
}

/// `𝒳₁ ⤙ μ : X₁ → X₀`, the pairs with `x₀μ ⊆ ↑x₁`.
pub fn target_negation(mu: &Relation, target: &Preorder) -> Result<Relation> {
    residuate_target(target.relation(), mu)
}

/// `¬μ = (μ ⇐ 𝒳₀) ∧ (𝒳₁ ⤙ μ)` for a closed `μ`.
pub fn negation(mu: &Relation, source: &Preorder, target: &Preorder) -> Result<Relation> {
    if !is_left_closed(mu, source)? || !is_right_closed(mu, target)? {
        return Err(Error::NotClosed("negation needs a relation closed for the given orders".into()));
    }
    source_negation(mu, source)?.meet(&target_negation(mu, target)?)
}

/// Negation with respect to the induced orders.
pub fn negation_induced(mu: &Relation) -> Relation {
    let (s, t) = induced_orders(&ClassicContext::new(mu.clone()));
    negation(mu, &s, &t).expect("μ is closed for its induced orders")
}

/// `(μ⤙μ, μ; ¬μ, μ⇐μ)`, the largest context containing `μ`.
pub fn contextual_closure(mu: &Relation) -> EnrichedContext {
    let (s, t) = induced_orders(&ClassicContext::new(mu.clone()));
    let neg = negation(mu, &s, &t).expect("μ is closed for its induced orders");
    EnrichedContext::new(s, t, mu.clone(), neg).expect("contextual closure is a valid context")
}

/// True iff `candidate` sits inside the contextual closure of its forward relation.
pub fn maximality_check(closure: &EnrichedContext, candidate: &EnrichedContext) -> Result<bool> {
    if closure.forward() != candidate.forward() {
        return Err(Error::Invalid("candidate must share the closure's forward relation".into()));
    }
    Ok(candidate.source_order().relation().leq(closure.source_order().relation())?
        && candidate.target_order().relation().leq(closure.target_order().relation())?
        && candidate.backward().leq(closure.backward())?)
}

/// Per-condition outcome of [`check_context_map`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContextMapCheck {
    /// `ν₀₁ ≤ f₀▷∘μ₀₁∘f₁◁`.
    pub forward: bool,
    /// `ν₁₀ ≤ f₁▷∘μ₁₀∘f₀◁`.
    pub backward: bool,
    /// `y₀ν₀₁y₁ ⇒ f₀(y₀) μ₀₁ f₁(y₁)`, a consequence of `forward`.
    pub preserves_has: bool,
}

impl ContextMapCheck {
    pub fn is_map(&self) -> bool {
        self.forward && self.backward
    }
}

pub fn check_context_map(
    f0: &MonotoneMap,
    f1: &MonotoneMap,
    from: &EnrichedContext,
    to: &EnrichedContext,
) -> Result<ContextMapCheck> {
    if f0.source() != from.source_order()
        || f1.source() != from.target_order()
        || f0.target() != to.source_order()
        || f1.target() != to.target_order()
    {
        return Err(Error::Invalid("context map components do not match the contexts' orders".into()));
    }
    let pulled_fwd = compose(&compose(&f0.direct_graph(), to.forward())?, &f1.inverse_graph())?;
    let pulled_bwd = compose(&compose(&f1.direct_graph(), to.backward())?, &f0.inverse_graph())?;
    let preserves_has = from.forward().pair_indices().into_iter().all(|(y0, y1)| to.forward().get(f0.image(y0), f1.image(y1)));
    Ok(ContextMapCheck {
        forward: from.forward().leq(&pulled_fwd)?,
        backward: from.backward().leq(&pulled_bwd)?,
        preserves_has,
    })
}

pub fn is_context_map(f0: &MonotoneMap, f1: &MonotoneMap, from: &EnrichedContext, to: &EnrichedContext) -> bool {
    check_context_map(f0, f1, from, to).map(|c| c.is_map()).unwrap_or(false)
}

/// A validated pair of monotone maps between contexts.
#[derive(Clone, Debug)]
pub struct ContextMap {
    pub from: EnrichedContext,
    pub to: EnrichedContext,
    pub f0: MonotoneMap,
    pub f1: MonotoneMap,
}

impl ContextMap {
    pub fn new(from: EnrichedContext, to: EnrichedContext, f0: MonotoneMap, f1: MonotoneMap) -> Result<Self> {
        if !check_context_map(&f0, &f1, &from, &to)?.is_map() {
            return Err(Error::Invalid("pair of maps is not a map of contexts".into()));
        }
        Ok(ContextMap { from, to, f0, f1 })
    }

    /// The unique map into the terminal context.
    pub fn to_terminal(ctx: &EnrichedContext) -> Result<Self> {
        let t = EnrichedContext::terminal();
        let f0 = MonotoneMap::constant(ctx.source_order(), t.source_order(), "*")?;
        let f1 = MonotoneMap::constant(ctx.target_order(), t.target_order(), "*")?;
        ContextMap::new(ctx.clone(), t, f0, f1)
    }
}

/// Splits a preorder along a monotone map into `2̄`.
pub fn t_partition(order: &Preorder, t: &MonotoneMap) -> Result<EnrichedContext> {
    if t.source() != order || t.target().len() != 2 || t.target().relation().count() != 4 {
        return Err(Error::Invalid("t must be a monotone map from the order into 2̄".into()));
    }
    let c = order.carrier();
    let fiber = |k: usize| -> Vec<usize> { (0..c.len()).filter(|&i| t.image(i) == k).collect() };
    let (i0, i1) = (fiber(0), fiber(1));
    let sub = |idx: &[usize], tag: &str| {
        crate::relation::Carrier::new(format!("{}/{tag}", c.name()), idx.iter().map(|&i| c.element(i).to_string()))
    };
    let (c0, c1) = (sub(&i0, "0")?, sub(&i1, "1")?);
    let r = order.relation();
    let x0 = Preorder::new(r.restrict(&c0, &i0, &c0, &i0))?;
    let x1 = Preorder::new(r.restrict(&c1, &i1, &c1, &i1))?;
    let fwd = r.restrict(&c0, &i0, &c1, &i1);
    let bwd = r.restrict(&c1, &i1, &c0, &i0);
    EnrichedContext::new(x0, x1, fwd, bwd)
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
    fn t2_negation() {
        assert_eq!(negation_induced(&t2()).pairs(), vec![("p", "a"), ("p", "b"), ("q", "b")]);
    }

    #[test]
    fn t2_closure_is_valid() {
        let ctx = contextual_closure(&t2());
        assert_eq!(ctx.source_order().relation().pairs(), vec![("a", "a"), ("a", "b"), ("b", "b")]);
        assert_eq!(ctx.target_order().relation().pairs(), vec![("p", "p"), ("p", "q"), ("q", "q")]);
        assert_eq!(ctx.opposite().opposite(), ctx);
        assert!(maximality_check(&ctx, &ctx).unwrap());
    }

    #[test]
    fn bottom_on_singletons() {
        let a = Carrier::new("X0", ["a"]).unwrap();
        let p = Carrier::new("X1", ["p"]).unwrap();
        let ctx = contextual_closure(&Relation::bottom(&a, &p));
        assert_eq!(ctx.source_order().relation().count(), 1);
        assert_eq!(ctx.target_order().relation().count(), 1);
        assert_eq!(ctx.backward(), &Relation::top(&p, &a));
    }

    #[test]
    fn full_relations_on_discrete_orders_are_not_orthogonal() {
        let a = Carrier::new("X0", ["a", "b"]).unwrap();
        let p = Carrier::new("X1", ["p", "q"]).unwrap();
        let rep = validate_context(
            &Preorder::discrete(&a),
            &Preorder::discrete(&p),
            &Relation::top(&a, &p),
            &Relation::top(&p, &a),
        );
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.contains("orthogonality")));
    }

    #[test]
    fn terminal_is_valid_and_maps_exist() {
        let t = EnrichedContext::terminal();
        assert!(validate_context(t.source_order(), t.target_order(), t.forward(), t.backward()).is_valid());
        let ctx = contextual_closure(&t2());
        assert!(ContextMap::to_terminal(&ctx).is_ok());
    }

    #[test]
    fn negation_requires_closed_relation() {
        let c = Carrier::new("X", ["a", "b"]).unwrap();
        let chain = Preorder::chain(&c);
        let r = Relation::from_pairs(&c, &c, [("b", "a")]).unwrap();
        assert!(matches!(negation(&r, &chain, &chain), Err(Error::NotClosed(_))));
    }

    #[test]
    fn identity_negation() {
        let c = Carrier::new("X", ["a", "b", "c"]).unwrap();
        let p = Preorder::generated_by(&Relation::from_pairs(&c, &c, [("a", "b")]).unwrap()).unwrap();
        assert_eq!(&negation(p.relation(), &p, &p).unwrap(), p.relation());
    }

    #[test]
    fn two_chain_partition() {
        let c = Carrier::new("C", ["u", "v"]).unwrap();
        let p = Preorder::chain(&c);
        let t = MonotoneMap::new(&p, &Preorder::binary(), [("u", "0"), ("v", "1")]).unwrap();
        let ctx = t_partition(&p, &t).unwrap();
        assert_eq!(ctx.forward().pairs(), vec![("u", "v")]);
        assert!(ctx.backward().is_empty());
    }

    #[test]
    fn constant_partition_has_an_empty_fiber() {
        let c = Carrier::new("C", ["u", "v"]).unwrap();
        let p = Preorder::chain(&c);
        let t = MonotoneMap::constant(&p, &Preorder::binary(), "0").unwrap();
        let ctx = t_partition(&p, &t).unwrap();
        assert_eq!(ctx.source_order().relation().pairs(), p.relation().pairs());
        assert!(ctx.target_order().is_empty());
        assert_eq!(ctx.forward().source().len(), 2);
        assert_eq!(ctx.forward().target().len(), 0);
    }

    #[test]
    fn identity_inverse_image() {
        let ctx = contextual_closure(&t2());
        let f0 = MonotoneMap::identity(ctx.source_order());
        let f1 = MonotoneMap::identity(ctx.target_order());
        assert_eq!(ctx.inverse_image(&f0, &f1).unwrap(), ctx);
        assert!(is_context_map(&f0, &f1, &ctx, &ctx));
    }

    #[test]
    fn inverse_image_along_a_collapse_can_break_orthogonality() {
        let y = Preorder::discrete(&Carrier::new("Y", ["y", "z"]).unwrap());
        let t = EnrichedContext::terminal();
        let f0 = MonotoneMap::constant(&y, t.source_order(), "*").unwrap();
        let f1 = MonotoneMap::identity(t.target_order());
        assert!(matches!(t.inverse_image(&f0, &f1), Err(Error::InvalidContext(_))));
    }
}
