//! JSON views of results. Field order is fixed by declaration order, and
//! every collection is a list, so output is deterministic.

use serde::Serialize;

use crate::classic::ConceptLattice;
use crate::dm::{QuadConcept, QuadLattice};
use crate::enriched::EnrichedContext;
use crate::equivalence::EquivalenceReport;
use crate::relation::{Relation, Subset};

pub fn emit_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("views serialize infallibly");
    s.push('\n');
    s
}

fn names(s: &Subset) -> Vec<String> {
    s.names().into_iter().map(str::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct ConceptJson {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct LatticeJson {
    pub context: String,
    pub concepts: Vec<ConceptJson>,
    /// Hasse covers as `[lower, upper]` concept indices.
    pub covers: Vec<[usize; 2]>,
}

impl LatticeJson {
    pub fn new(name: &str, l: &ConceptLattice) -> Self {
        LatticeJson {
            context: name.to_string(),
            concepts: l.concepts().iter().map(|c| ConceptJson { extent: names(&c.extent), intent: names(&c.intent) }).collect(),
            covers: l.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RelationJson {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

impl From<&Relation> for RelationJson {
    fn from(r: &Relation) -> Self {
        RelationJson {
            source: r.source().elements().to_vec(),
            target: r.target().elements().to_vec(),
            pairs: r.pairs().into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClosureJson {
    pub context: String,
    pub source_order: RelationJson,
    pub forward: RelationJson,
    pub backward: RelationJson,
    pub target_order: RelationJson,
}

impl ClosureJson {
    pub fn new(name: &str, c: &EnrichedContext) -> Self {
        ClosureJson {
            context: name.to_string(),
            source_order: c.source_order().relation().into(),
            forward: c.forward().into(),
            backward: c.backward().into(),
            target_order: c.target_order().relation().into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct QuadJson {
    pub phi0: Vec<String>,
    pub phi1: Vec<String>,
    pub psi0: Vec<String>,
    pub psi1: Vec<String>,
}

impl From<&QuadConcept> for QuadJson {
    fn from(q: &QuadConcept) -> Self {
        QuadJson { phi0: names(&q.phi0), phi1: names(&q.phi1), psi0: names(&q.psi0), psi1: names(&q.psi1) }
    }
}

#[derive(Debug, Serialize)]
pub struct CompletionJson {
    pub context: String,
    pub quads: Vec<QuadJson>,
    pub covers: Vec<[usize; 2]>,
}

impl CompletionJson {
    pub fn new(name: &str, l: &QuadLattice) -> Self {
        CompletionJson {
            context: name.to_string(),
            quads: l.quads().iter().map(QuadJson::from).collect(),
            covers: l.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub context: String,
    pub isomorphic: bool,
    pub concepts: usize,
    pub quads: usize,
    /// Index of the image of each concept.
    pub forward: Option<Vec<usize>>,
    pub counterexamples: Vec<String>,
}

impl VerifyJson {
    pub fn new(name: &str, r: &EquivalenceReport) -> Self {
        VerifyJson {
            context: name.to_string(),
            isomorphic: r.is_isomorphic(),
            concepts: r.concepts,
            quads: r.quads,
            forward: r.witness.as_ref().map(|w| w.forward.clone()),
            counterexamples: r.counterexamples.clone(),
        }
    }
}
