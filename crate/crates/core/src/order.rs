//! Finite preorders, ideals and filters, bound operators and monotone maps.

use std::fmt;

use crate::bits::BitSet;
use crate::error::{mismatch, Error, Result};
use crate::relation::{compose, Carrier, Relation, Subset};

/// Default size limit for brute-force enumerators.
pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// Oracle size limit, overridable through `CONCEPTKIT_ORACLE_BOUND`.
pub fn oracle_bound() -> usize {
    std::env::var("CONCEPTKIT_ORACLE_BOUND")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

/// Reflexivity and transitivity violations of a candidate order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreorderReport {
    pub missing_reflexive: Vec<String>,
    /// `(x, z, y)`: `x ≤ y ≤ z` holds but `x ≤ z` does not.
    pub missing_transitive: Vec<(String, String, String)>,
    pub carrier_mismatch: bool,
}

impl PreorderReport {
    pub fn is_valid(&self) -> bool {
        self.missing_reflexive.is_empty() && self.missing_transitive.is_empty() && !self.carrier_mismatch
    }
}

impl fmt::Display for PreorderReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.carrier_mismatch {
            return write!(f, "source and target carriers differ");
        }
        let mut parts = Vec::new();
        if !self.missing_reflexive.is_empty() {
            parts.push(format!("missing reflexive pairs for {:?}", self.missing_reflexive));
        }
        for (x, z, y) in self.missing_transitive.iter().take(3) {
            parts.push(format!("{x} ≤ {y} ≤ {z} but not {x} ≤ {z}"));
        }
        if parts.is_empty() {
            write!(f, "valid")
        } else {
            write!(f, "{}", parts.join("; "))
        }
    }
}

pub fn validate_preorder(leq: &Relation) -> PreorderReport {
    let mut report = PreorderReport::default();
    if leq.source() != leq.target() {
        report.carrier_mismatch = true;
        return report;
    }
    let c = leq.source();
    for i in 0..c.len() {
        if !leq.get(i, i) {
            report.missing_reflexive.push(c.element(i).to_string());
        }
    }
    for x in 0..c.len() {
        for y in leq.row(x).iter() {
            for z in leq.row(y).iter() {
                if !leq.get(x, z) {
                    report.missing_transitive.push((
                        c.element(x).to_string(),
                        c.element(z).to_string(),
                        c.element(y).to_string(),
                    ));
                }
            }
        }
    }
    report.missing_transitive.sort();
    report.missing_transitive.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    report
}

/// A reflexive, transitive relation on a carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Preorder {
    leq: Relation,
}

impl Preorder {
    pub fn new(leq: Relation) -> Result<Self> {
        let report = validate_preorder(&leq);
        if report.is_valid() {
            Ok(Preorder { leq })
        } else {
            Err(Error::NotPreorder(report.to_string()))
        }
    }

    pub(crate) fn new_unchecked(leq: Relation) -> Self {
        debug_assert!(validate_preorder(&leq).is_valid());
        Preorder { leq }
    }

    /// Reflexive-transitive closure of an arbitrary endorelation.
    pub fn generated_by(r: &Relation) -> Result<Self> {
        r.source().check(r.target(), "generated_by")?;
        let n = r.source().len();
        let mut rows: Vec<BitSet> = (0..n)
            .map(|i| {
                let mut row = r.row(i);
                row.insert(i);
                row
            })
            .collect();
        for k in 0..n {
            let rk = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&rk);
                }
            }
        }
        Ok(Preorder { leq: Relation::from_rows(r.source(), r.source(), rows) })
    }

    pub fn discrete(carrier: &Carrier) -> Self {
        Preorder { leq: Relation::identity(carrier) }
    }

    pub fn indiscrete(carrier: &Carrier) -> Self {
        Preorder { leq: Relation::top(carrier, carrier) }
    }

    /// Elements ordered by position.
    pub fn chain(carrier: &Carrier) -> Self {
        Preorder { leq: Relation::from_fn(carrier, carrier, |i, j| i <= j) }
    }

    /// The one-element order `𝟏`.
    pub fn unit() -> Self {
        Preorder::discrete(&Carrier::unit())
    }

    /// The binary order `2̄`: two elements, each below the other.
    pub fn binary() -> Self {
        Preorder::indiscrete(&Carrier::new("2̄", ["0", "1"]).expect("binary carrier"))
    }

    /// The Boolean order `𝟐`: `0 ≤ 1`.
    pub fn boolean() -> Self {
        Preorder::chain(&Carrier::new("2", ["0", "1"]).expect("boolean carrier"))
    }

    pub fn carrier(&self) -> &Carrier {
        self.leq.source()
    }

    pub fn relation(&self) -> &Relation {
        &self.leq
    }

    pub fn len(&self) -> usize {
        self.carrier().len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier().is_empty()
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool> {
        self.leq.contains(a, b)
    }

    pub fn opposite(&self) -> Preorder {
        Preorder { leq: self.leq.opposite() }
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| i == j || !(self.le(i, j) && self.le(j, i))))
    }

    /// `down` is the set of elements below `i`, `up` those above.
    pub(crate) fn down_bits(&self, i: usize) -> BitSet {
        self.leq.column(i)
    }

    pub(crate) fn up_bits(&self, i: usize) -> BitSet {
        self.leq.row(i)
    }

    fn own(&self, s: &Subset) -> Result<()> {
        self.carrier().check(s.carrier(), "order subset")
    }

    pub fn is_down_closed(&self, s: &Subset) -> Result<bool> {
        self.own(s)?;
        Ok(s.bits().iter().all(|i| self.down_bits(i).is_subset(s.bits())))
    }

    pub fn is_up_closed(&self, s: &Subset) -> Result<bool> {
        self.own(s)?;
        Ok(s.bits().iter().all(|i| self.up_bits(i).is_subset(s.bits())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Down,
    Up,
}

/// A down-closed subset.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal(Subset);

/// An up-closed subset.
#[derive(Clone, PartialEq, Eq)]
pub struct Filter(Subset);

impl Ideal {
    pub fn new(order: &Preorder, members: Subset) -> Result<Self> {
        if order.is_down_closed(&members)? {
            Ok(Ideal(members))
        } else {
            Err(Error::NotClosedSubset { kind: "down", carrier: order.carrier().name().to_string() })
        }
    }

    pub fn members(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }

    /// The same members read as a filter of the opposite order.
    pub fn as_opposite_filter(&self) -> Filter {
        Filter(self.0.clone())
    }
}

impl Filter {
    pub fn new(order: &Preorder, members: Subset) -> Result<Self> {
        if order.is_up_closed(&members)? {
            Ok(Filter(members))
        } else {
            Err(Error::NotClosedSubset { kind: "up", carrier: order.carrier().name().to_string() })
        }
    }

    pub fn members(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }

    pub fn as_opposite_ideal(&self) -> Ideal {
        Ideal(self.0.clone())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.0)
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filter{:?}", self.0)
    }
}

/// `⋂_{x∈φ} ↑x`.
pub fn upper_bounds(phi: &Subset, p: &Preorder) -> Result<Filter> {
    p.own(phi)?;
    let mut out = BitSet::full(p.len());
    for x in phi.bits().iter() {
        out.intersect_with(&p.up_bits(x));
    }
    Ok(Filter(Subset::from_bits(p.carrier(), out)))
}

/// `⋂_{y∈ψ} ↓y`.
pub fn lower_bounds(psi: &Subset, p: &Preorder) -> Result<Ideal> {
    p.own(psi)?;
    let mut out = BitSet::full(p.len());
    for y in psi.bits().iter() {
        out.intersect_with(&p.down_bits(y));
    }
    Ok(Ideal(Subset::from_bits(p.carrier(), out)))
}

pub fn order_closure(direction: Direction, s: &Subset, p: &Preorder) -> Result<Subset> {
    p.own(s)?;
    let mut out = BitSet::empty(p.len());
    for x in s.bits().iter() {
        match direction {
            Direction::Down => out.union_with(&p.down_bits(x)),
            Direction::Up => out.union_with(&p.up_bits(x)),
        }
    }
    Ok(Subset::from_bits(p.carrier(), out))
}

pub fn down_closure(s: &Subset, p: &Preorder) -> Result<Ideal> {
    order_closure(Direction::Down, s, p).map(Ideal)
}

pub fn up_closure(s: &Subset, p: &Preorder) -> Result<Filter> {
    order_closure(Direction::Up, s, p).map(Filter)
}

pub fn principal_ideal(p: &Preorder, x: &str) -> Result<Ideal> {
    Ok(Ideal(Subset::from_bits(p.carrier(), p.down_bits(p.carrier().index_of(x)?))))
}

pub fn principal_filter(p: &Preorder, x: &str) -> Result<Filter> {
    Ok(Filter(Subset::from_bits(p.carrier(), p.up_bits(p.carrier().index_of(x)?))))
}

fn closed_subsets(p: &Preorder, bound: usize, direction: Direction) -> Result<Vec<Subset>> {
    let n = p.len();
    if n > bound || n > 30 {
        return Err(Error::Capacity { what: "ideal enumeration carrier", size: n, bound: bound.min(30) });
    }
    let need: Vec<u64> = (0..n)
        .map(|i| {
            let b = match direction {
                Direction::Down => p.down_bits(i),
                Direction::Up => p.up_bits(i),
            };
            b.iter().fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if (0..n).all(|i| mask >> i & 1 == 0 || need[i] & !mask == 0) {
            let bits = BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
            out.push(Subset::from_bits(p.carrier(), bits));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.bits().lex_cmp(b.bits())));
    Ok(out)
}

/// All ideals, by ascending size then member list.
pub fn enumerate_ideals(p: &Preorder) -> Result<Vec<Ideal>> {
    enumerate_ideals_bounded(p, oracle_bound())
}

pub fn enumerate_ideals_bounded(p: &Preorder, bound: usize) -> Result<Vec<Ideal>> {
    Ok(closed_subsets(p, bound, Direction::Down)?.into_iter().map(Ideal).collect())
}

pub fn enumerate_filters(p: &Preorder) -> Result<Vec<Filter>> {
    enumerate_filters_bounded(p, oracle_bound())
}

pub fn enumerate_filters_bounded(p: &Preorder, bound: usize) -> Result<Vec<Filter>> {
    Ok(closed_subsets(p, bound, Direction::Up)?.into_iter().map(Filter).collect())
}

/// An order-preserving function between preorders.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Preorder,
    target: Preorder,
    assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn from_indices(source: &Preorder, target: &Preorder, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::Invalid(format!(
                "map assigns {} of {} elements of `{}`",
                assignment.len(),
                source.len(),
                source.carrier().name()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::Invalid(format!("image index {bad} outside `{}`", target.carrier().name())));
        }
        for (x, x2) in source.relation().pair_indices() {
            if !target.le(assignment[x], assignment[x2]) {
                let (s, t) = (source.carrier(), target.carrier());
                return Err(Error::NotMonotone(format!(
                    "{} ≤ {} but {} ≰ {}",
                    s.element(x),
                    s.element(x2),
                    t.element(assignment[x]),
                    t.element(assignment[x2])
                )));
            }
        }
        Ok(MonotoneMap { source: source.clone(), target: target.clone(), assignment })
    }

    pub fn new<A: AsRef<str>, B: AsRef<str>>(
        source: &Preorder,
        target: &Preorder,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let mut assignment = vec![None; source.len()];
        for (a, b) in pairs {
            let i = source.carrier().index_of(a.as_ref())?;
            let j = target.carrier().index_of(b.as_ref())?;
            if assignment[i].replace(j).is_some() {
                return Err(Error::Invalid(format!("`{}` assigned twice", a.as_ref())));
            }
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Invalid(format!("`{}` unassigned", source.carrier().element(i)))))
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::from_indices(source, target, assignment)
    }

    pub fn identity(p: &Preorder) -> Self {
        MonotoneMap { source: p.clone(), target: p.clone(), assignment: (0..p.len()).collect() }
    }

    pub fn constant(source: &Preorder, target: &Preorder, value: &str) -> Result<Self> {
        let j = target.carrier().index_of(value)?;
        MonotoneMap::from_indices(source, target, vec![j; source.len()])
    }

    pub fn source(&self) -> &Preorder {
        &self.source
    }

    pub fn target(&self) -> &Preorder {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn apply(&self, x: &str) -> Result<&str> {
        Ok(self.target.carrier().element(self.assignment[self.source.carrier().index_of(x)?]))
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &MonotoneMap) -> Result<MonotoneMap> {
        if self.target != next.source {
            return Err(mismatch("map composition", self.target.carrier().name(), next.source.carrier().name()));
        }
        let assignment = self.assignment.iter().map(|&y| next.assignment[y]).collect();
        Ok(MonotoneMap { source: self.source.clone(), target: next.target.clone(), assignment })
    }

    /// `f▷ = {(y,x) | f(y) ≤ x}`.
    pub fn direct_graph(&self) -> Relation {
        Relation::from_fn(self.source.carrier(), self.target.carrier(), |y, x| self.target.le(self.assignment[y], x))
    }

    /// `f◁ = {(x,y) | x ≤ f(y)}`.
    pub fn inverse_graph(&self) -> Relation {
        Relation::from_fn(self.target.carrier(), self.source.carrier(), |x, y| self.target.le(x, self.assignment[y]))
    }

    pub fn graphs(&self) -> (Relation, Relation) {
        (self.direct_graph(), self.inverse_graph())
    }

    pub fn preimage(&self, s: &Subset) -> Result<Subset> {
        self.target.carrier().check(s.carrier(), "preimage")?;
        let bits = BitSet::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&i| s.bits().contains(self.assignment[i])),
        );
        Ok(Subset::from_bits(self.source.carrier(), bits))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = BitSet::empty(self.target.len());
        for &y in &self.assignment {
            hit.insert(y);
        }
        hit.is_full()
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.source.carrier();
        let t = self.target.carrier();
        f.debug_map()
            .entries(self.assignment.iter().enumerate().map(|(i, &j)| (s.element(i), t.element(j))))
            .finish()
    }
}

/// Hasse covers `(lower, upper)` of the strict part of an order relation.
pub fn hasse_covers(leq: &Relation) -> Vec<(usize, usize)> {
    let n = leq.source().len();
    let strict: Vec<BitSet> = (0..n)
        .map(|i| {
            let mut row = leq.row(i);
            for j in row.clone().iter() {
                if leq.get(j, i) {
                    row.remove(j);
                }
            }
            row
        })
        .collect();
    let below: Vec<BitSet> =
        (0..n).map(|j| BitSet::from_indices(n, (0..n).filter(|&i| strict[i].contains(j)))).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in strict[i].iter() {
            if !strict[i].intersects(&below[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Left-closed: `𝒳₀ ∘ r ≤ r`.
pub fn is_left_closed(r: &Relation, source: &Preorder) -> Result<bool> {
    compose(source.relation(), r)?.leq(r)
}

/// Right-closed: `r ∘ 𝒳₁ ≤ r`.
pub fn is_right_closed(r: &Relation, target: &Preorder) -> Result<bool> {
    compose(r, target.relation())?.leq(r)
}

pub fn is_closed(r: &Relation, source: &Preorder, target: &Preorder) -> Result<bool> {
    Ok(is_left_closed(r, source)? && is_right_closed(r, target)?)
}

/// Smallest closed relation containing `r`: `𝒳₀ ∘ r ∘ 𝒳₁`.
pub fn close(r: &Relation, source: &Preorder, target: &Preorder) -> Result<Relation> {
    compose(&compose(source.relation(), r)?, target.relation())
}
