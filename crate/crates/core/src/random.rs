//! Instance generation for property checks.
//!
//! Generators draw from a [`Source`]. A [`Seeded`] source gives random
//! instances; [`exhaust`] replays a generator over every choice sequence, so
//! the same generator also enumerates all small instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::classic::ClassicContext;
use crate::enriched::{negation, EnrichedContext};
use crate::order::{close, is_closed, validate_preorder, MonotoneMap, Preorder};
use crate::relation::{Carrier, Relation, Subset};

pub trait Source {
    /// A value in `0..n`; `n` must be positive.
    fn below(&mut self, n: usize) -> usize;

    /// A biased coin. Exhaustive sources treat it as a plain binary choice.
    fn chance(&mut self, num: u32, den: u32) -> bool;

    fn exhaustive(&self) -> bool;

    fn flip(&mut self) -> bool {
        self.chance(1, 2)
    }
}

pub struct Seeded(ChaCha8Rng);

impl Seeded {
    pub fn new(seed: u64) -> Self {
        Seeded(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl Source for Seeded {
    fn below(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }

    fn chance(&mut self, num: u32, den: u32) -> bool {
        self.0.gen_ratio(num, den)
    }

    fn exhaustive(&self) -> bool {
        false
    }
}

struct Replay {
    choices: Vec<(usize, usize)>,
    pos: usize,
}

impl Source for Replay {
    fn below(&mut self, n: usize) -> usize {
        if self.pos == self.choices.len() {
            self.choices.push((0, n));
        }
        let v = self.choices[self.pos].0;
        self.pos += 1;
        v
    }

    fn chance(&mut self, _: u32, _: u32) -> bool {
        self.below(2) == 1
    }

    fn exhaustive(&self) -> bool {
        true
    }
}

/// Every instance `gen` can produce, or `None` once more than `budget`
/// choice sequences have been tried. Rejected sequences count too.
pub fn exhaust<T>(mut gen: impl FnMut(&mut dyn Source) -> Option<T>, budget: usize) -> Option<Vec<T>> {
    let mut src = Replay { choices: Vec::new(), pos: 0 };
    let mut out = Vec::new();
    for _ in 0..budget {
        src.pos = 0;
        if let Some(t) = gen(&mut src) {
            out.push(t);
        }
        src.choices.truncate(src.pos);
        while let Some(&(v, n)) = src.choices.last() {
            if v + 1 < n {
                src.choices.last_mut().unwrap().0 += 1;
                break;
            }
            src.choices.pop();
        }
        if src.choices.is_empty() {
            return Some(out);
        }
    }
    None
}

/// Carrier of `0..=k` elements named `{prefix}{i}`.
pub fn carrier(src: &mut dyn Source, name: &str, prefix: &str, k: usize) -> Carrier {
    let n = src.below(k + 1);
    Carrier::new(name, (0..n).map(|i| format!("{prefix}{i}"))).expect("distinct names")
}

pub fn subset(src: &mut dyn Source, c: &Carrier) -> Subset {
    let bits = BitSet::from_indices(c.len(), (0..c.len()).filter(|_| src.flip()));
    Subset::from_bits(c, bits)
}

pub fn relation(src: &mut dyn Source, s: &Carrier, t: &Carrier) -> Relation {
    Relation::from_fn(s, t, |_, _| src.flip())
}

/// A preorder on `c`. Exhaustive sources reject non-transitive draws; random
/// ones take the transitive closure of a sparse draw.
pub fn preorder(src: &mut dyn Source, c: &Carrier) -> Option<Preorder> {
    let r = Relation::from_fn(c, c, |i, j| i == j || src.chance(1, 4));
    if src.exhaustive() {
        validate_preorder(&r).is_valid().then(|| Preorder::new(r).expect("validated"))
    } else {
        Some(Preorder::generated_by(&r).expect("square relation"))
    }
}

pub fn ordered(src: &mut dyn Source, name: &str, prefix: &str, k: usize) -> Option<Preorder> {
    let c = carrier(src, name, prefix, k);
    preorder(src, &c)
}

/// A relation closed for the two orders: rejected or closed, as for preorders.
pub fn closed_relation(src: &mut dyn Source, s: &Preorder, t: &Preorder) -> Option<Relation> {
    let r = relation(src, s.carrier(), t.carrier());
    if src.exhaustive() {
        is_closed(&r, s, t).expect("matching carriers").then_some(r)
    } else {
        Some(close(&r, s, t).expect("matching carriers"))
    }
}

/// A closed sub-relation of `within`, choosing only among its pairs.
fn closed_below(src: &mut dyn Source, within: &Relation, s: &Preorder, t: &Preorder) -> Option<Relation> {
    let mut r = Relation::bottom(within.source(), within.target());
    for (i, j) in within.pair_indices() {
        if src.flip() {
            r.insert(i, j);
        }
    }
    if src.exhaustive() {
        is_closed(&r, s, t).expect("matching carriers").then_some(r)
    } else {
        Some(close(&r, s, t).expect("matching carriers"))
    }
}

/// A valid enriched context with carriers of at most `k` elements. The
/// backward relation is a closed part of the negation of the forward one.
pub fn context(src: &mut dyn Source, k: usize) -> Option<EnrichedContext> {
    let x0 = ordered(src, "X0", "a", k)?;
    let x1 = ordered(src, "X1", "p", k)?;
    let mu = closed_relation(src, &x0, &x1)?;
    let neg = negation(&mu, &x0, &x1).expect("closed");
    let back = closed_below(src, &neg, &x1, &x0)?;
    Some(EnrichedContext::new(x0, x1, mu, back).expect("orthogonal by construction"))
}

/// A classical context with at most `k` entities and attributes.
pub fn classic_context(src: &mut dyn Source, k: usize) -> ClassicContext {
    let x0 = carrier(src, "X0", "a", k);
    let x1 = carrier(src, "X1", "p", k);
    ClassicContext::new(relation(src, &x0, &x1))
}

/// A source order on a fresh carrier and a monotone map from it into `target`.
/// Random sources meet a drawn order with the pullback of `target`, which
/// always makes the map monotone.
pub fn monotone_map(src: &mut dyn Source, name: &str, prefix: &str, k: usize, target: &Preorder) -> Option<MonotoneMap> {
    let c = carrier(src, name, prefix, k);
    if target.is_empty() && !c.is_empty() {
        return None;
    }
    let assignment: Vec<usize> = (0..c.len()).map(|_| src.below(target.len())).collect();
    let drawn = preorder(src, &c)?;
    let order = if src.exhaustive() {
        drawn
    } else {
        let pullback = Relation::from_fn(&c, &c, |i, j| target.le(assignment[i], assignment[j]));
        Preorder::new(drawn.relation().meet(&pullback).expect("same carrier")).expect("meet of preorders")
    };
    MonotoneMap::from_indices(&order, target, assignment).ok()
}
