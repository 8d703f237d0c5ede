//! Derivation along closed relations, bounds in preorders and negation.

use super::{rel, run_suite, set, truth, Law, LawConfig, LawOutcome, Suite};
use crate::bits::BitSet;
use crate::classic::{induced_orders, ClassicContext};
use crate::enriched::{negation, negation_induced, source_negation, target_negation};
use crate::error::Result;
use crate::order::{down_closure, lower_bounds, up_closure, upper_bounds, MonotoneMap, Preorder};
use crate::random::{closed_relation, monotone_map, ordered, subset, Source};
use crate::relation::{compose, residuate_source, residuate_target, Carrier, Relation, Subset};

fn upper(s: &Subset, p: &Preorder) -> Result<Subset> {
    upper_bounds(s, p).map(|f| f.into_subset())
}

fn lower(s: &Subset, p: &Preorder) -> Result<Subset> {
    lower_bounds(s, p).map(|i| i.into_subset())
}

fn intent(r: &Relation, s: &Subset) -> Result<Subset> {
    ClassicContext::new(r.clone()).derive_intent(s)
}

fn extent(r: &Relation, s: &Subset) -> Result<Subset> {
    ClassicContext::new(r.clone()).derive_extent(s)
}

/// `r ∘ s`, reading `s` as an ideal relation into `𝟏`.
fn exists(r: &Relation, s: &Subset) -> Result<Subset> {
    Subset::from_ideal_relation(&compose(r, &s.as_ideal_relation())?)
}

/// `s ∘ r`, reading `s` as a filter relation out of `𝟏`.
fn image(s: &Subset, r: &Relation) -> Result<Subset> {
    Subset::from_filter_relation(&compose(&s.as_filter_relation(), r)?)
}

/// `r ⇐ s` for an ideal `s`: the targets whose column lies inside `s`.
fn forall_ideal(r: &Relation, s: &Subset) -> Result<Subset> {
    Subset::from_ideal_relation(&residuate_source(r, &s.as_ideal_relation())?)
}

/// `s ⤙ r` for a filter `s`: the sources whose row lies inside `s`.
fn forall_filter(s: &Subset, r: &Relation) -> Result<Subset> {
    Subset::from_filter_relation(&residuate_target(&s.as_filter_relation(), r)?)
}

/// A preorder with two subsets.
#[derive(Debug)]
pub(super) struct Ordered {
    p: Preorder,
    phi: Subset,
    psi: Subset,
}

impl Ordered {
    fn discrete(&self) -> Relation {
        Relation::identity(self.p.carrier())
    }

    fn not_geq(&self) -> Relation {
        let p = &self.p;
        Relation::from_fn(p.carrier(), p.carrier(), |a, b| !p.le(b, a))
    }
}

fn gen_ordered(src: &mut dyn Source, k: usize) -> Option<Ordered> {
    let p = ordered(src, "X", "x", k)?;
    let phi = subset(src, p.carrier());
    let psi = subset(src, p.carrier());
    Some(Ordered { p, phi, psi })
}

/// Derivation along equality: `X` for the empty set, the set itself for a
/// singleton, empty otherwise.
fn equality_cases(s: &Subset) -> Subset {
    match s.len() {
        0 => Subset::full(s.carrier()),
        1 => s.clone(),
        _ => Subset::empty(s.carrier()),
    }
}

fn bottom_test(s: &Subset, target: &Carrier) -> Subset {
    if s.is_empty() {
        Subset::full(target)
    } else {
        Subset::empty(target)
    }
}

fn ordered_suite() -> Suite<Ordered> {
    Suite {
        domain: "preorder with subsets",
        generate: gen_ordered,
        laws: vec![
            Law::within("order/galois: φ ⊆ lower(upper(φ))", |t| set(t.phi.clone()), |t| set(lower(&upper(&t.phi, &t.p)?, &t.p)?)),
            Law::within("order/galois: ψ ⊆ upper(lower(ψ))", |t| set(t.psi.clone()), |t| set(upper(&lower(&t.psi, &t.p)?, &t.p)?)),
            Law::eq(
                "order/upper∘lower∘upper = upper",
                |t| set(upper(&lower(&upper(&t.phi, &t.p)?, &t.p)?, &t.p)?),
                |t| set(upper(&t.phi, &t.p)?),
            ),
            Law::eq(
                "order/lower∘upper∘lower = lower",
                |t| set(lower(&upper(&lower(&t.psi, &t.p)?, &t.p)?, &t.p)?),
                |t| set(lower(&t.psi, &t.p)?),
            ),
            Law::eq(
                "order/upper ignores down-closure",
                |t| set(upper(&t.phi, &t.p)?),
                |t| set(upper(down_closure(&t.phi, &t.p)?.members(), &t.p)?),
            ),
            Law::eq(
                "order/lower ignores up-closure",
                |t| set(lower(&t.psi, &t.p)?),
                |t| set(lower(up_closure(&t.psi, &t.p)?.members(), &t.p)?),
            ),
            Law::eq(
                "order/upper = φ⇐𝒳",
                |t| set(upper(&t.phi, &t.p)?),
                |t| set(Subset::from_filter_relation(&residuate_source(&t.phi.as_ideal_relation(), t.p.relation())?)?),
            ),
            Law::eq(
                "order/lower = 𝒳⤙ψ",
                |t| set(lower(&t.psi, &t.p)?),
                |t| set(Subset::from_ideal_relation(&residuate_target(t.p.relation(), &t.psi.as_filter_relation())?)?),
            ),
            Law::eq("derivation/identity: intent along 𝒳 = upper", |t| set(intent(t.p.relation(), &t.phi)?), |t| set(upper(&t.phi, &t.p)?)),
            Law::eq("derivation/identity: extent along 𝒳 = lower", |t| set(extent(t.p.relation(), &t.psi)?), |t| set(lower(&t.psi, &t.p)?)),
            Law::eq(
                "negation/ideal: ¬φ = upper(φ)",
                |t| {
                    let phi = down_closure(&t.phi, &t.p)?.into_subset();
                    set(Subset::from_filter_relation(&negation(&phi.as_ideal_relation(), &t.p, &Preorder::unit())?)?)
                },
                |t| set(upper(&t.phi, &t.p)?),
            ),
            Law::eq(
                "negation/filter: ¬ψ = lower(ψ)",
                |t| {
                    let psi = up_closure(&t.psi, &t.p)?.into_subset();
                    set(Subset::from_ideal_relation(&negation(&psi.as_filter_relation(), &Preorder::unit(), &t.p)?)?)
                },
                |t| set(lower(&t.psi, &t.p)?),
            ),
            Law::eq("negation/identity: ¬𝒳 = 𝒳", |t| rel(negation(t.p.relation(), &t.p, &t.p)?), |t| rel(t.p.relation().clone())),
            Law::eq(
                "negation/complement: ¬≱ = {(x,x′) | X = ↑x ∪ ↓x′}",
                |t| rel(negation(&t.not_geq(), &t.p, &t.p)?),
                |t| {
                    let n = t.p.len();
                    rel(Relation::from_fn(t.p.carrier(), t.p.carrier(), |x, x2| (0..n).all(|y| t.p.le(x, y) || t.p.le(y, x2))))
                },
            ),
            Law::eq("special/equality: intent by cases", |t| set(intent(&t.discrete(), &t.phi)?), |t| set(equality_cases(&t.phi))),
            Law::eq("special/equality: extent by cases", |t| set(extent(&t.discrete(), &t.psi)?), |t| set(equality_cases(&t.psi))),
            Law::eq(
                "special/bottom: intent is the nonbottom test",
                |t| set(intent(&Relation::bottom(t.p.carrier(), t.p.carrier()), &t.phi)?),
                |t| set(bottom_test(&t.phi, t.p.carrier())),
            ),
            Law::eq(
                "special/bottom: extent is the top test",
                |t| set(extent(&Relation::bottom(t.p.carrier(), t.p.carrier()), &t.psi)?),
                |t| set(bottom_test(&t.psi, t.p.carrier())),
            ),
            Law::eq(
                "special/complement on a discrete order: intent is set complement",
                |t| set(intent(&t.discrete().complement(), &t.phi)?),
                |t| set(t.phi.complement()),
            ),
            Law::eq(
                "special/complement on a discrete order: extent is set complement",
                |t| set(extent(&t.discrete().complement(), &t.psi)?),
                |t| set(t.psi.complement()),
            ),
        ],
    }
}

/// Two closed relations `μ, ν : 𝒳₀ → 𝒳₁` with subsets on both sides.
#[derive(Debug)]
pub(super) struct Derivable {
    x0: Preorder,
    x1: Preorder,
    mu: Relation,
    nu: Relation,
    phi1: Subset,
    phi2: Subset,
    psi1: Subset,
    psi2: Subset,
}

impl Derivable {
    fn ctx(&self) -> ClassicContext {
        ClassicContext::new(self.mu.clone())
    }

    fn meet(&self) -> Result<Relation> {
        self.mu.meet(&self.nu)
    }

    /// `φ₁` closed down in the source order induced by `μ`.
    fn induced_ideal(&self) -> Result<(Preorder, Preorder, Subset)> {
        let (s, t) = induced_orders(&self.ctx());
        let phi = down_closure(&self.phi1, &s)?.into_subset();
        Ok((s, t, phi))
    }

    /// `ψ₁` closed up in the target order induced by `μ`.
    fn induced_filter(&self) -> Result<(Preorder, Preorder, Subset)> {
        let (s, t) = induced_orders(&self.ctx());
        let psi = up_closure(&self.psi1, &t)?.into_subset();
        Ok((s, t, psi))
    }
}

fn gen_derivable(src: &mut dyn Source, k: usize) -> Option<Derivable> {
    let x0 = ordered(src, "X0", "a", k)?;
    let x1 = ordered(src, "X1", "p", k)?;
    let mu = closed_relation(src, &x0, &x1)?;
    let nu = closed_relation(src, &x0, &x1)?;
    let (c0, c1) = (x0.carrier().clone(), x1.carrier().clone());
    Some(Derivable {
        phi1: subset(src, &c0),
        phi2: subset(src, &c0),
        psi1: subset(src, &c1),
        psi2: subset(src, &c1),
        x0,
        x1,
        mu,
        nu,
    })
}

fn intersect_rows(r: &Relation, s: &BitSet, width: usize, by_column: bool) -> BitSet {
    let mut acc = BitSet::full(width);
    for i in s.iter() {
        acc.intersect_with(&if by_column { r.column(i) } else { r.row(i) });
    }
    acc
}

fn derivable_suite() -> Suite<Derivable> {
    Suite {
        domain: "closed relations with subsets",
        generate: gen_derivable,
        laws: vec![
            Law::within(
                "derivation/contravariant in the subset (intent)",
                |t| truth(t.phi1.is_subset(&t.phi2)?),
                |t| truth(t.ctx().derive_intent(&t.phi2)?.is_subset(&t.ctx().derive_intent(&t.phi1)?)?),
            ),
            Law::within(
                "derivation/contravariant in the subset (extent)",
                |t| truth(t.psi1.is_subset(&t.psi2)?),
                |t| truth(t.ctx().derive_extent(&t.psi2)?.is_subset(&t.ctx().derive_extent(&t.psi1)?)?),
            ),
            Law::eq(
                "derivation/continuous in the subset (intent)",
                |t| set(t.ctx().derive_intent(&t.phi1.union(&t.phi2)?)?),
                |t| set(t.ctx().derive_intent(&t.phi1)?.intersection(&t.ctx().derive_intent(&t.phi2)?)?),
            ),
            Law::eq(
                "derivation/continuous in the subset (extent)",
                |t| set(t.ctx().derive_extent(&t.psi1.union(&t.psi2)?)?),
                |t| set(t.ctx().derive_extent(&t.psi1)?.intersection(&t.ctx().derive_extent(&t.psi2)?)?),
            ),
            Law::eq(
                "derivation/empty subset (intent)",
                |t| set(t.ctx().derive_intent(&Subset::empty(t.x0.carrier()))?),
                |t| set(Subset::full(t.x1.carrier())),
            ),
            Law::eq(
                "derivation/empty subset (extent)",
                |t| set(t.ctx().derive_extent(&Subset::empty(t.x1.carrier()))?),
                |t| set(Subset::full(t.x0.carrier())),
            ),
            Law::within(
                "derivation/covariant in the relation (intent)",
                |t| set(intent(&t.meet()?, &t.phi1)?),
                |t| set(intent(&t.mu, &t.phi1)?),
            ),
            Law::within(
                "derivation/covariant in the relation (extent)",
                |t| set(extent(&t.meet()?, &t.psi1)?),
                |t| set(extent(&t.mu, &t.psi1)?),
            ),
            Law::eq(
                "derivation/continuous in the relation (intent)",
                |t| set(intent(&t.meet()?, &t.phi1)?),
                |t| set(intent(&t.mu, &t.phi1)?.intersection(&intent(&t.nu, &t.phi1)?)?),
            ),
            Law::eq(
                "derivation/continuous in the relation (extent)",
                |t| set(extent(&t.meet()?, &t.psi1)?),
                |t| set(extent(&t.mu, &t.psi1)?.intersection(&extent(&t.nu, &t.psi1)?)?),
            ),
            Law::eq(
                "derivation/top relation (intent)",
                |t| set(intent(&Relation::top(t.x0.carrier(), t.x1.carrier()), &t.phi1)?),
                |t| set(Subset::full(t.x1.carrier())),
            ),
            Law::eq(
                "derivation/top relation (extent)",
                |t| set(extent(&Relation::top(t.x0.carrier(), t.x1.carrier()), &t.psi1)?),
                |t| set(Subset::full(t.x0.carrier())),
            ),
            Law::eq(
                "derivation/generators (intent)",
                |t| set(t.ctx().derive_intent(&t.phi1)?),
                |t| set(Subset::from_bits(t.x1.carrier(), intersect_rows(&t.mu, t.phi1.bits(), t.x1.len(), false))),
            ),
            Law::eq(
                "derivation/generators (extent)",
                |t| set(t.ctx().derive_extent(&t.psi1)?),
                |t| set(Subset::from_bits(t.x0.carrier(), intersect_rows(&t.mu, t.psi1.bits(), t.x0.len(), true))),
            ),
            Law::within("closure/extensive (extent)", |t| set(t.phi1.clone()), |t| set(t.ctx().close_extent(&t.phi1)?)),
            Law::within("closure/extensive (intent)", |t| set(t.psi1.clone()), |t| set(t.ctx().close_intent(&t.psi1)?)),
            Law::eq(
                "closure/idempotent (extent)",
                |t| set(t.ctx().close_extent(&t.ctx().close_extent(&t.phi1)?)?),
                |t| set(t.ctx().close_extent(&t.phi1)?),
            ),
            Law::eq(
                "closure/idempotent (intent)",
                |t| set(t.ctx().close_intent(&t.ctx().close_intent(&t.psi1)?)?),
                |t| set(t.ctx().close_intent(&t.psi1)?),
            ),
            Law::within(
                "closure/monotone (extent)",
                |t| truth(t.phi1.is_subset(&t.phi2)?),
                |t| truth(t.ctx().close_extent(&t.phi1)?.is_subset(&t.ctx().close_extent(&t.phi2)?)?),
            ),
            Law::within(
                "derivation/special: intent within upper of μ⇐φ",
                |t| set(t.ctx().derive_intent(&t.induced_ideal()?.2)?),
                |t| {
                    let (_, x1, phi) = t.induced_ideal()?;
                    set(upper(&forall_ideal(&t.mu, &phi)?, &x1)?)
                },
            ),
            Law::within(
                "derivation/special: extent within lower of ψ⤙μ",
                |t| set(t.ctx().derive_extent(&t.induced_filter()?.2)?),
                |t| {
                    let (x0, _, psi) = t.induced_filter()?;
                    set(lower(&forall_filter(&psi, &t.mu)?, &x0)?)
                },
            ),
            Law::within(
                "derivation/special: upper within negation intent of μ⇐φ",
                |t| {
                    let (x0, _, phi) = t.induced_ideal()?;
                    set(upper(&phi, &x0)?)
                },
                |t| {
                    let (_, _, phi) = t.induced_ideal()?;
                    set(intent(&negation_induced(&t.mu), &forall_ideal(&t.mu, &phi)?)?)
                },
            ),
            Law::within(
                "derivation/special: lower within negation extent of ψ⤙μ",
                |t| {
                    let (_, x1, psi) = t.induced_filter()?;
                    set(lower(&psi, &x1)?)
                },
                |t| {
                    let (_, _, psi) = t.induced_filter()?;
                    set(extent(&negation_induced(&t.mu), &forall_filter(&psi, &t.mu)?)?)
                },
            ),
            Law::eq(
                "derivation/source negation (intent): upper(μ∘φ)",
                |t| set(intent(&source_negation(&t.mu, &t.x0)?, &t.psi1)?),
                |t| set(upper(&exists(&t.mu, &t.psi1)?, &t.x0)?),
            ),
            Law::eq(
                "derivation/source negation (extent): μ⇐lower(ψ)",
                |t| set(extent(&source_negation(&t.mu, &t.x0)?, &t.phi1)?),
                |t| set(forall_ideal(&t.mu, &lower(&t.phi1, &t.x0)?)?),
            ),
            Law::eq(
                "derivation/target negation (intent): upper(φ)⤙μ",
                |t| set(intent(&target_negation(&t.mu, &t.x1)?, &t.psi1)?),
                |t| set(forall_filter(&upper(&t.psi1, &t.x1)?, &t.mu)?),
            ),
            Law::eq(
                "derivation/target negation (extent): lower(ψ∘μ)",
                |t| set(extent(&target_negation(&t.mu, &t.x1)?, &t.phi1)?),
                |t| set(lower(&image(&t.phi1, &t.mu)?, &t.x1)?),
            ),
            Law::eq(
                "derivation/negation (intent): meet of both negations",
                |t| set(intent(&negation(&t.mu, &t.x0, &t.x1)?, &t.psi1)?),
                |t| set(upper(&exists(&t.mu, &t.psi1)?, &t.x0)?.intersection(&forall_filter(&upper(&t.psi1, &t.x1)?, &t.mu)?)?),
            ),
            Law::eq(
                "derivation/negation (extent): meet of both negations",
                |t| set(extent(&negation(&t.mu, &t.x0, &t.x1)?, &t.phi1)?),
                |t| set(forall_ideal(&t.mu, &lower(&t.phi1, &t.x0)?)?.intersection(&lower(&image(&t.phi1, &t.mu)?, &t.x1)?)?),
            ),
            Law::eq(
                "negation/join: ¬(μ∨ν) = ¬μ ∧ ¬ν",
                |t| rel(negation(&t.mu.join(&t.nu)?, &t.x0, &t.x1)?),
                |t| rel(negation(&t.mu, &t.x0, &t.x1)?.meet(&negation(&t.nu, &t.x0, &t.x1)?)?),
            ),
            Law::eq(
                "negation/bottom: ¬⊥ = ⊤",
                |t| rel(negation(&Relation::bottom(t.x0.carrier(), t.x1.carrier()), &t.x0, &t.x1)?),
                |t| rel(Relation::top(t.x1.carrier(), t.x0.carrier())),
            ),
            Law::eq(
                "negation/induced: ¬μ = μ⇐𝒳₀",
                |t| rel(negation_induced(&t.mu)),
                |t| rel(source_negation(&t.mu, &induced_orders(&t.ctx()).0)?),
            ),
            Law::eq(
                "negation/induced: ¬μ = 𝒳₁⤙μ",
                |t| rel(negation_induced(&t.mu)),
                |t| rel(target_negation(&t.mu, &induced_orders(&t.ctx()).1)?),
            ),
        ],
    }
}

/// A monotone map `f : 𝒴 → 𝒳` with closed relations on either side of it.
#[derive(Debug)]
pub(super) struct Mapped {
    f: MonotoneMap,
    /// `Y → W`.
    sigma: Relation,
    /// `X → Z`, left-closed.
    rho: Relation,
    /// `Z → W`.
    sigma2: Relation,
    /// `Z → X`, right-closed.
    rho2: Relation,
    on_y: Subset,
    on_x: Subset,
}

fn gen_mapped(src: &mut dyn Source, k: usize) -> Option<Mapped> {
    let x = ordered(src, "X", "x", k)?;
    let f = monotone_map(src, "Y", "y", k, &x)?;
    let w = Preorder::discrete(&crate::random::carrier(src, "W", "w", k));
    let z = Preorder::discrete(&crate::random::carrier(src, "Z", "z", k));
    Some(Mapped {
        sigma: closed_relation(src, f.source(), &w)?,
        rho: closed_relation(src, &x, &z)?,
        sigma2: closed_relation(src, &z, &w)?,
        rho2: closed_relation(src, &z, &x)?,
        on_y: subset(src, f.source().carrier()),
        on_x: subset(src, x.carrier()),
        f,
    })
}

fn mapped_suite() -> Suite<Mapped> {
    Suite {
        domain: "monotone map with relations",
        generate: gen_mapped,
        laws: vec![
            Law::eq(
                "implication/inverse image: σ⇐(f▷∘ρ) = (f◁∘σ)⇐ρ",
                |t| rel(residuate_source(&t.sigma, &compose(&t.f.direct_graph(), &t.rho)?)?),
                |t| rel(residuate_source(&compose(&t.f.inverse_graph(), &t.sigma)?, &t.rho)?),
            ),
            Law::eq(
                "implication/inverse image: σ⇐(ρ∘f◁) = (σ⇐ρ)∘f◁",
                |t| rel(residuate_source(&t.sigma2, &compose(&t.rho2, &t.f.inverse_graph())?)?),
                |t| rel(compose(&residuate_source(&t.sigma2, &t.rho2)?, &t.f.inverse_graph())?),
            ),
            Law::eq(
                "derivation/direct graph (intent): upper of the direct ideal image",
                |t| set(intent(&t.f.direct_graph(), &t.on_y)?),
                |t| set(upper(&exists(&t.f.inverse_graph(), &t.on_y)?, t.f.target())?),
            ),
            Law::eq(
                "derivation/direct graph (extent): inverse ideal image of the lower bounds",
                |t| set(extent(&t.f.direct_graph(), &t.on_x)?),
                |t| set(exists(&t.f.direct_graph(), &lower(&t.on_x, t.f.target())?)?),
            ),
            Law::eq(
                "derivation/inverse graph (intent): inverse filter image of the upper bounds",
                |t| set(intent(&t.f.inverse_graph(), &t.on_x)?),
                |t| set(image(&upper(&t.on_x, t.f.target())?, &t.f.inverse_graph())?),
            ),
            Law::eq(
                "derivation/inverse graph (extent): lower bounds of the direct filter image",
                |t| set(extent(&t.f.inverse_graph(), &t.on_y)?),
                |t| set(lower(&image(&t.on_y, &t.f.direct_graph())?, t.f.target())?),
            ),
        ],
    }
}

/// Maps `f₀ : 𝒴₀ → 𝒳₀`, `f₁ : 𝒴₁ → 𝒳₁` and a closed `μ : 𝒳₀ → 𝒳₁`.
#[derive(Debug)]
pub(super) struct Pulled {
    pub(super) mu: Relation,
    pub(super) f0: MonotoneMap,
    pub(super) f1: MonotoneMap,
    psi0: Subset,
    psi1: Subset,
}

impl Pulled {
    pub(super) fn pulled(&self) -> Result<Relation> {
        compose(&compose(&self.f0.direct_graph(), &self.mu)?, &self.f1.inverse_graph())
    }
}

pub(super) fn gen_pulled(src: &mut dyn Source, k: usize) -> Option<Pulled> {
    let x0 = ordered(src, "X0", "a", k)?;
    let x1 = ordered(src, "X1", "p", k)?;
    let mu = closed_relation(src, &x0, &x1)?;
    let f0 = monotone_map(src, "Y0", "b", k, &x0)?;
    let f1 = monotone_map(src, "Y1", "q", k, &x1)?;
    let psi0 = subset(src, f0.source().carrier());
    let psi1 = subset(src, f1.source().carrier());
    Some(Pulled { mu, f0, f1, psi0, psi1 })
}

fn pulled_suite() -> Suite<Pulled> {
    Suite {
        domain: "inverse image",
        generate: gen_pulled,
        laws: vec![
            Law::eq(
                "derivation/inverse image (intent)",
                |t| set(intent(&t.pulled()?, &t.psi0)?),
                |t| set(image(&intent(&t.mu, &exists(&t.f0.inverse_graph(), &t.psi0)?)?, &t.f1.inverse_graph())?),
            ),
            Law::eq(
                "derivation/inverse image (extent)",
                |t| set(extent(&t.pulled()?, &t.psi1)?),
                |t| set(exists(&t.f0.direct_graph(), &extent(&t.mu, &image(&t.psi1, &t.f1.direct_graph())?)?)?),
            ),
        ],
    }
}

pub(super) fn run(cfg: &LawConfig) -> Vec<LawOutcome> {
    let mut out = run_suite(&ordered_suite(), cfg);
    out.extend(run_suite(&derivable_suite(), cfg));
    out.extend(run_suite(&mapped_suite(), cfg));
    out.extend(run_suite(&pulled_suite(), cfg));
    out
}
