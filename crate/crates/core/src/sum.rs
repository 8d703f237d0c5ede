//! Sum orders `⊕𝒳` on `X₀ + X₁`, fibration back into contexts, and relative
//! pairing and copairing.

use crate::enriched::{ContextMap, EnrichedContext};
use crate::error::{Error, Result};
use crate::order::{is_left_closed, is_right_closed, validate_preorder, MonotoneMap, Preorder};
use crate::relation::{compose, residuate_source, residuate_target, Carrier, Relation};

pub const TAG0: &str = "0:";
pub const TAG1: &str = "1:";

/// The tagged preorder of a context together with its tag and injections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumOrder {
    context: EnrichedContext,
    order: Preorder,
    tag: MonotoneMap,
    inj0: MonotoneMap,
    inj1: MonotoneMap,
}

/// Carrier `X₀ + X₁` with elements `0:x₀` then `1:x₁`.
pub fn sum_carrier(x0: &Carrier, x1: &Carrier) -> Carrier {
    let names = x0.elements().iter().map(|e| format!("{TAG0}{e}")).chain(x1.elements().iter().map(|e| format!("{TAG1}{e}")));
    Carrier::new(format!("{}+{}", x0.name(), x1.name()), names).expect("tag prefixes keep names distinct")
}

/// Builds `⊕𝒳` from the four-case table.
pub fn sum(ctx: &EnrichedContext) -> Result<SumOrder> {
    let (x0, x1) = (ctx.source_order(), ctx.target_order());
    let n0 = x0.len();
    let carrier = sum_carrier(x0.carrier(), x1.carrier());
    let leq = Relation::from_fn(&carrier, &carrier, |i, j| match (i < n0, j < n0) {
        (true, true) => x0.le(i, j),
        (true, false) => ctx.forward().get(i, j - n0),
        (false, true) => ctx.backward().get(i - n0, j),
        (false, false) => x1.le(i - n0, j - n0),
    });
    let report = validate_preorder(&leq);
    if !report.is_valid() {
        return Err(Error::InvalidContext(format!("sum is not a preorder: {report}")));
    }
    SumOrder::assemble(ctx.clone(), Preorder::new_unchecked(leq))
}

impl SumOrder {
    /// Pairs a context with an order on its sum carrier; the sum equations
    /// are not checked here (see [`verify_sum_equations`]).
    pub fn assemble(context: EnrichedContext, order: Preorder) -> Result<Self> {
        let (x0, x1) = (context.source_order(), context.target_order());
        let carrier = sum_carrier(x0.carrier(), x1.carrier());
        carrier.check(order.carrier(), "sum order")?;
        let n0 = x0.len();
        let tag = MonotoneMap::from_indices(&order, &Preorder::binary(), (0..order.len()).map(|i| usize::from(i >= n0)).collect())?;
        let inj0 = MonotoneMap::from_indices(x0, &order, (0..n0).collect())?;
        let inj1 = MonotoneMap::from_indices(x1, &order, (n0..order.len()).collect())?;
        Ok(SumOrder { context, order, tag, inj0, inj1 })
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn tag(&self) -> &MonotoneMap {
        &self.tag
    }

    pub fn injections(&self) -> (&MonotoneMap, &MonotoneMap) {
        (&self.inj0, &self.inj1)
    }

    /// The context the sum was built from.
    pub fn context(&self) -> &EnrichedContext {
        &self.context
    }

    pub fn carrier(&self) -> &Carrier {
        self.order.carrier()
    }

    fn split(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.order.len();
        ((0..n).filter(|&i| self.tag.image(i) == 0).collect(), (0..n).filter(|&i| self.tag.image(i) == 1).collect())
    }
}

/// Recovers the context as the four preimages under the tag.
pub fn fibrate(s: &SumOrder) -> Result<EnrichedContext> {
    let (i0, i1) = s.split();
    let (c0, c1) = (s.inj0.source().carrier(), s.inj1.source().carrier());
    if i0 != s.inj0.assignment() || i1 != s.inj1.assignment() {
        return Err(Error::Invalid("tag fibers disagree with the injections".into()));
    }
    let r = s.order.relation();
    let x0 = Preorder::new(r.restrict(c0, &i0, c0, &i0))?;
    let x1 = Preorder::new(r.restrict(c1, &i1, c1, &i1))?;
    EnrichedContext::new(x0, x1, r.restrict(c0, &i0, c1, &i1), r.restrict(c1, &i1, c0, &i0))
}

/// `Inc(𝒫) = (𝒫, 𝒫; 𝒫, 𝒫)`.
pub fn inclusion_context(p: &Preorder) -> EnrichedContext {
    let r = p.relation().clone();
    EnrichedContext::new(p.clone(), p.clone(), r.clone(), r).expect("an order is orthogonal to itself")
}

/// The injection pair as a map of contexts `𝒳 → Inc(⊕𝒳)`.
pub fn sum_unit(s: &SumOrder) -> Result<ContextMap> {
    ContextMap::new(s.context.clone(), inclusion_context(&s.order), s.inj0.clone(), s.inj1.clone())
}

/// `⊕f : ⊕𝒴 → ⊕𝒳` for a map of contexts `f : 𝒴 → 𝒳`.
pub fn sum_map(f: &ContextMap, from: &SumOrder, to: &SumOrder) -> Result<MonotoneMap> {
    if from.context != f.from || to.context != f.to {
        return Err(Error::Invalid("sum orders do not belong to the map's contexts".into()));
    }
    let n0 = f.from.source_order().len();
    let m0 = f.to.source_order().len();
    let assignment = (0..from.order.len())
        .map(|i| if i < n0 { f.f0.image(i) } else { m0 + f.f1.image(i - n0) })
        .collect();
    MonotoneMap::from_indices(&from.order, &to.order, assignment)
}

fn require(ok: bool, what: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ConstraintViolated(what))
    }
}

fn check_copair_inputs(rho0: &Relation, rho1: &Relation, s: &SumOrder) -> Result<()> {
    let ctx = &s.context;
    ctx.source_order().carrier().check(rho0.source(), "copair ρ₀")?;
    ctx.target_order().carrier().check(rho1.source(), "copair ρ₁")?;
    rho0.target().check(rho1.target(), "copair targets")?;
    require(is_left_closed(rho0, ctx.source_order())?, "𝒳₀∘ρ₀ ≤ ρ₀")?;
    require(is_left_closed(rho1, ctx.target_order())?, "𝒳₁∘ρ₁ ≤ ρ₁")?;
    require(compose(ctx.forward(), rho1)?.leq(rho0)?, "μ₀₁∘ρ₁ ≤ ρ₀")?;
    require(compose(ctx.backward(), rho0)?.leq(rho1)?, "μ₁₀∘ρ₀ ≤ ρ₁")
}

fn check_pair_inputs(sigma0: &Relation, sigma1: &Relation, s: &SumOrder) -> Result<()> {
    let ctx = &s.context;
    ctx.source_order().carrier().check(sigma0.target(), "pair σ₀")?;
    ctx.target_order().carrier().check(sigma1.target(), "pair σ₁")?;
    sigma0.source().check(sigma1.source(), "pair sources")?;
    require(is_right_closed(sigma0, ctx.source_order())?, "σ₀∘𝒳₀ ≤ σ₀")?;
    require(is_right_closed(sigma1, ctx.target_order())?, "σ₁∘𝒳₁ ≤ σ₁")?;
    require(compose(sigma0, ctx.forward())?.leq(sigma1)?, "σ₀∘μ₀₁ ≤ σ₁")?;
    require(compose(sigma1, ctx.backward())?.leq(sigma0)?, "σ₁∘μ₁₀ ≤ σ₀")
}

/// `[ρ₀,ρ₁] = (i₀◁∘ρ₀) ∨ (i₁◁∘ρ₁) : ⊕𝒳 → 𝒴`.
pub fn relative_copair(rho0: &Relation, rho1: &Relation, s: &SumOrder) -> Result<Relation> {
    check_copair_inputs(rho0, rho1, s)?;
    compose(&s.inj0.inverse_graph(), rho0)?.join(&compose(&s.inj1.inverse_graph(), rho1)?)
}

/// `(i₀▷ ⇐ ρ₀) ∧ (i₁▷ ⇐ ρ₁)`, the implication form of the copair.
pub fn copair_by_implication(rho0: &Relation, rho1: &Relation, s: &SumOrder) -> Result<Relation> {
    check_copair_inputs(rho0, rho1, s)?;
    residuate_source(&s.inj0.direct_graph(), rho0)?.meet(&residuate_source(&s.inj1.direct_graph(), rho1)?)
}

/// `(σ₀,σ₁) = (σ₀∘i₀▷) ∨ (σ₁∘i₁▷) : 𝒲 → ⊕𝒳`.
pub fn relative_pair(sigma0: &Relation, sigma1: &Relation, s: &SumOrder) -> Result<Relation> {
    check_pair_inputs(sigma0, sigma1, s)?;
    compose(sigma0, &s.inj0.direct_graph())?.join(&compose(sigma1, &s.inj1.direct_graph())?)
}

/// `(σ₀ ⤙ i₀◁) ∧ (σ₁ ⤙ i₁◁)`, the implication form of the pair.
pub fn pair_by_implication(sigma0: &Relation, sigma1: &Relation, s: &SumOrder) -> Result<Relation> {
    check_pair_inputs(sigma0, sigma1, s)?;
    residuate_target(sigma0, &s.inj0.inverse_graph())?.meet(&residuate_target(sigma1, &s.inj1.inverse_graph())?)
}

/// Splits a relation out of the sum into its two components `i₀▷∘ρ`, `i₁▷∘ρ`.
pub fn copair_components(rho: &Relation, s: &SumOrder) -> Result<(Relation, Relation)> {
    Ok((compose(&s.inj0.direct_graph(), rho)?, compose(&s.inj1.direct_graph(), rho)?))
}

/// Splits a relation into the sum into `σ∘i₀◁`, `σ∘i₁◁`.
pub fn pair_components(sigma: &Relation, s: &SumOrder) -> Result<(Relation, Relation)> {
    Ok((compose(sigma, &s.inj0.inverse_graph())?, compose(sigma, &s.inj1.inverse_graph())?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumEquation {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumEquationReport {
    pub equations: Vec<SumEquation>,
}

impl SumEquationReport {
    pub fn is_valid(&self) -> bool {
        self.equations.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.equations.iter().filter(|e| !e.holds).map(|e| e.name).collect()
    }
}

pub fn verify_sum_equations(s: &SumOrder) -> SumEquationReport {
    let ctx = &s.context;
    let (d0, v0) = s.inj0.graphs();
    let (d1, v1) = s.inj1.graphs();
    let eq = |a: Result<Relation>, b: &Relation| a.map(|r| &r == b).unwrap_or(false);
    let covering = compose(&v0, &d0).and_then(|a| a.join(&compose(&v1, &d1)?));
    let tag_is_sum_of_terminal = ContextMap::to_terminal(ctx)
        .and_then(|t| {
            let target = sum(&t.to)?;
            Ok(sum_map(&t, s, &target)?.assignment() == s.tag.assignment())
        })
        .unwrap_or(false);
    let equations = vec![
        SumEquation { name: "i₀▷∘i₀◁ = 𝒳₀", holds: eq(compose(&d0, &v0), ctx.source_order().relation()) },
        SumEquation { name: "i₀▷∘i₁◁ = μ₀₁", holds: eq(compose(&d0, &v1), ctx.forward()) },
        SumEquation { name: "i₁▷∘i₀◁ = μ₁₀", holds: eq(compose(&d1, &v0), ctx.backward()) },
        SumEquation { name: "i₁▷∘i₁◁ = 𝒳₁", holds: eq(compose(&d1, &v1), ctx.target_order().relation()) },
        SumEquation { name: "(i₀◁∘i₀▷) ∨ (i₁◁∘i₁▷) = ⊕𝒳", holds: eq(covering, s.order.relation()) },
        SumEquation { name: "τ = ⊕⊤", holds: tag_is_sum_of_terminal },
    ];
    SumEquationReport { equations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::contextual_closure;

    fn t2() -> EnrichedContext {
        let x0 = Carrier::new("X0", ["a", "b"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        contextual_closure(&Relation::from_pairs(&x0, &x1, [("a", "p"), ("a", "q"), ("b", "q")]).unwrap())
    }

    #[test]
    fn t2_sum_has_two_classes() {
        let ctx = t2();
        let s = sum(&ctx).unwrap();
        let r = s.order().relation();
        for (x, y) in [("0:a", "1:p"), ("1:p", "0:a"), ("0:b", "1:q"), ("1:q", "0:b"), ("0:a", "0:b")] {
            assert!(r.contains(x, y).unwrap(), "{x} ≤ {y}");
        }
        assert!(!r.contains("0:b", "0:a").unwrap());
        assert_eq!(r.count(), 12);
        assert_eq!(fibrate(&s).unwrap(), ctx);
        assert!(verify_sum_equations(&s).is_valid());
    }

    #[test]
    fn terminal_sums_to_binary_order() {
        let s = sum(&EnrichedContext::terminal()).unwrap();
        assert_eq!(s.order().relation().count(), 4);
        assert_eq!(s.tag().assignment(), &[0, 1]);
        assert!(verify_sum_equations(&s).is_valid());
        assert_eq!(fibrate(&s).unwrap(), EnrichedContext::terminal());
    }

    #[test]
    fn deleted_pair_breaks_a_disjointness_equation() {
        let ctx = t2();
        let s = sum(&ctx).unwrap();
        let sabotaged = s.order().relation().with_pair("0:b", "1:q", false).unwrap();
        let s2 = SumOrder::assemble(ctx, Preorder::new(sabotaged).unwrap()).unwrap();
        assert_eq!(verify_sum_equations(&s2).failures(), vec!["i₀▷∘i₁◁ = μ₀₁"]);
    }

    #[test]
    fn copair_bottoms() {
        let ctx = t2();
        let s = sum(&ctx).unwrap();
        let one = Carrier::unit();
        let r0 = Relation::bottom(ctx.source_order().carrier(), &one);
        let r1 = Relation::bottom(ctx.target_order().carrier(), &one);
        assert!(relative_copair(&r0, &r1, &s).unwrap().is_empty());
    }

    #[test]
    fn copair_constraint_is_named() {
        let ctx = t2();
        let s = sum(&ctx).unwrap();
        let one = Carrier::unit();
        let r0 = Relation::bottom(ctx.source_order().carrier(), &one);
        let r1 = Relation::top(ctx.target_order().carrier(), &one);
        assert_eq!(relative_copair(&r0, &r1, &s).unwrap_err(), Error::ConstraintViolated("μ₀₁∘ρ₁ ≤ ρ₀"));
    }

    #[test]
    fn unit_is_a_context_map() {
        let s = sum(&t2()).unwrap();
        assert!(sum_unit(&s).is_ok());
    }
}
