//! Composition, opposite and the two residuals on plain relations.

use super::{rel, run_suite, truth, Law, LawConfig, LawOutcome, Suite};
use crate::random::{carrier, relation, Source};
use crate::relation::{compose, residuate_source, residuate_target, Relation};

/// `α : X→Y`, `β, β₂ : X→Z`, `γ, γ₂ : Z→Y`.
#[derive(Debug)]
pub(super) struct Triple {
    alpha: Relation,
    beta: Relation,
    beta2: Relation,
    gamma: Relation,
    gamma2: Relation,
}

fn generate(src: &mut dyn Source, k: usize) -> Option<Triple> {
    let x = carrier(src, "X", "x", k);
    let y = carrier(src, "Y", "y", k);
    let z = carrier(src, "Z", "z", k);
    Some(Triple {
        alpha: relation(src, &x, &y),
        beta: relation(src, &x, &z),
        beta2: relation(src, &x, &z),
        gamma: relation(src, &z, &y),
        gamma2: relation(src, &z, &y),
    })
}

fn suite() -> Suite<Triple> {
    Suite {
        domain: "relations",
        generate,
        laws: vec![
            Law::eq(
                "kernel/adjoint: γ ≤ β⇐α iff β∘γ ≤ α",
                |t| truth(t.gamma.leq(&residuate_source(&t.beta, &t.alpha)?)?),
                |t| truth(compose(&t.beta, &t.gamma)?.leq(&t.alpha)?),
            ),
            Law::eq(
                "kernel/adjoint: β∘γ ≤ α iff β ≤ α⤙γ",
                |t| truth(compose(&t.beta, &t.gamma)?.leq(&t.alpha)?),
                |t| truth(t.beta.leq(&residuate_target(&t.alpha, &t.gamma)?)?),
            ),
            Law::within(
                "kernel/counit: β∘(β⇐α) ≤ α",
                |t| rel(compose(&t.beta, &residuate_source(&t.beta, &t.alpha)?)?),
                |t| rel(t.alpha.clone()),
            ),
            Law::within(
                "kernel/counit: (α⤙γ)∘γ ≤ α",
                |t| rel(compose(&residuate_target(&t.alpha, &t.gamma)?, &t.gamma)?),
                |t| rel(t.alpha.clone()),
            ),
            Law::eq(
                "kernel/composition is associative",
                |t| rel(compose(&compose(&t.beta, &t.gamma)?, &t.alpha.opposite())?),
                |t| rel(compose(&t.beta, &compose(&t.gamma, &t.alpha.opposite())?)?),
            ),
            Law::within(
                "kernel/composition is monotone on the left",
                |t| rel(compose(&t.beta.meet(&t.beta2)?, &t.gamma)?),
                |t| rel(compose(&t.beta, &t.gamma)?),
            ),
            Law::within(
                "kernel/composition is monotone on the right",
                |t| rel(compose(&t.beta, &t.gamma.meet(&t.gamma2)?)?),
                |t| rel(compose(&t.beta, &t.gamma)?),
            ),
            Law::eq("kernel/opposite is an involution", |t| rel(t.alpha.opposite().opposite()), |t| rel(t.alpha.clone())),
            Law::eq(
                "kernel/opposite reverses composition",
                |t| rel(compose(&t.beta, &t.gamma)?.opposite()),
                |t| rel(compose(&t.gamma.opposite(), &t.beta.opposite())?),
            ),
            Law::eq(
                "kernel/residuals are dual under opposite",
                |t| rel(residuate_target(&t.alpha, &t.gamma)?),
                |t| rel(residuate_source(&t.gamma.opposite(), &t.alpha.opposite())?.opposite()),
            ),
            Law::eq(
                "kernel/source residual turns joins into meets",
                |t| rel(residuate_source(&t.beta.join(&t.beta2)?, &t.alpha)?),
                |t| rel(residuate_source(&t.beta, &t.alpha)?.meet(&residuate_source(&t.beta2, &t.alpha)?)?),
            ),
            Law::eq(
                "kernel/target residual turns joins into meets",
                |t| rel(residuate_target(&t.alpha, &t.gamma.join(&t.gamma2)?)?),
                |t| rel(residuate_target(&t.alpha, &t.gamma)?.meet(&residuate_target(&t.alpha, &t.gamma2)?)?),
            ),
        ],
    }
}

pub(super) fn run(cfg: &LawConfig) -> Vec<LawOutcome> {
    run_suite(&suite(), cfg)
}
