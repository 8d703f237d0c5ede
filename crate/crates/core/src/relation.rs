//! Named carriers, subsets and boolean relations with composition and
//! the two residuals.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bits::{words_for, BitSet};
use crate::error::{mismatch, Error, Result};

struct CarrierData {
    name: String,
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

/// A named, ordered set of element names. Equality is by value.
#[derive(Clone)]
pub struct Carrier(Arc<CarrierData>);

impl Carrier {
    pub fn new<S: Into<String>>(name: impl Into<String>, elements: impl IntoIterator<Item = S>) -> Result<Self> {
        let name = name.into();
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement { carrier: name, element: e.clone() });
            }
        }
        Ok(Carrier(Arc::new(CarrierData { name, elements, index })))
    }

    /// The one-element carrier used for relations into and out of `𝟏`.
    pub fn unit() -> Self {
        Carrier::new("1", ["*"]).expect("unit carrier")
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn elements(&self) -> &[String] {
        &self.0.elements
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &str {
        &self.0.elements[i]
    }

    pub fn index_of(&self, element: &str) -> Result<usize> {
        self.0.index.get(element).copied().ok_or_else(|| Error::UnknownElement {
            carrier: self.0.name.clone(),
            element: element.to_string(),
        })
    }

    /// Cartesian product with elements named `(a,b)`.
    pub fn product(&self, other: &Carrier) -> Result<Carrier> {
        let mut names = Vec::with_capacity(self.len() * other.len());
        for a in self.elements() {
            for b in other.elements() {
                names.push(format!("({a},{b})"));
            }
        }
        Carrier::new(format!("{}×{}", self.name(), other.name()), names)
    }

    pub(crate) fn same(&self, other: &Carrier) -> bool {
        self == other
    }

    pub(crate) fn check(&self, other: &Carrier, op: &'static str) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(mismatch(op, self.name(), other.name()))
        }
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.name == other.0.name && self.0.elements == other.0.elements)
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.name(), self.elements())
    }
}

/// A subset of a carrier.
#[derive(Clone, PartialEq, Eq)]
pub struct Subset {
    carrier: Carrier,
    bits: BitSet,
}

impl Subset {
    pub fn new<S: AsRef<str>>(carrier: &Carrier, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut bits = BitSet::empty(carrier.len());
        for n in names {
            bits.insert(carrier.index_of(n.as_ref())?);
        }
        Ok(Subset { carrier: carrier.clone(), bits })
    }

    pub fn from_bits(carrier: &Carrier, bits: BitSet) -> Self {
        assert_eq!(bits.len(), carrier.len(), "bitset length does not match carrier");
        Subset { carrier: carrier.clone(), bits }
    }

    pub fn empty(carrier: &Carrier) -> Self {
        Subset { carrier: carrier.clone(), bits: BitSet::empty(carrier.len()) }
    }

    pub fn full(carrier: &Carrier) -> Self {
        Subset { carrier: carrier.clone(), bits: BitSet::full(carrier.len()) }
    }

    pub fn singleton(carrier: &Carrier, element: &str) -> Result<Self> {
        Subset::new(carrier, [element])
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn into_bits(self) -> BitSet {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, element: &str) -> Result<bool> {
        Ok(self.bits.contains(self.carrier.index_of(element)?))
    }

    pub fn names(&self) -> Vec<&str> {
        self.bits.iter().map(|i| self.carrier.element(i)).collect()
    }

    pub fn is_subset(&self, other: &Subset) -> Result<bool> {
        self.carrier.check(&other.carrier, "subset inclusion")?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.carrier.check(&other.carrier, "union")?;
        Ok(Subset { carrier: self.carrier.clone(), bits: self.bits.union(&other.bits) })
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.carrier.check(&other.carrier, "intersection")?;
        Ok(Subset { carrier: self.carrier.clone(), bits: self.bits.intersection(&other.bits) })
    }

    pub fn complement(&self) -> Subset {
        Subset { carrier: self.carrier.clone(), bits: self.bits.complement() }
    }

    /// The subset as a relation `X → 𝟏`.
    pub fn as_ideal_relation(&self) -> Relation {
        Relation::from_fn(&self.carrier, &Carrier::unit(), |i, _| self.bits.contains(i))
    }

    /// The subset as a relation `𝟏 → X`.
    pub fn as_filter_relation(&self) -> Relation {
        Relation::from_rows(&Carrier::unit(), &self.carrier, vec![self.bits.clone()])
    }

    /// Reads back a relation `X → 𝟏`.
    pub fn from_ideal_relation(r: &Relation) -> Result<Subset> {
        if r.target().len() != 1 {
            return Err(mismatch("ideal relation", r.target().name(), "1"));
        }
        Ok(Subset { carrier: r.source().clone(), bits: r.column(0) })
    }

    /// Reads back a relation `𝟏 → X`.
    pub fn from_filter_relation(r: &Relation) -> Result<Subset> {
        if r.source().len() != 1 {
            return Err(mismatch("filter relation", r.source().name(), "1"));
        }
        Ok(Subset { carrier: r.target().clone(), bits: r.row(0) })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.names()).finish()
    }
}

/// A boolean relation `source → target` stored as a row-major bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    source: Carrier,
    target: Carrier,
    stride: usize,
    data: Vec<u64>,
}

impl Relation {
    pub fn bottom(source: &Carrier, target: &Carrier) -> Self {
        let stride = words_for(target.len());
        Relation { source: source.clone(), target: target.clone(), stride, data: vec![0; stride * source.len()] }
    }

    pub fn top(source: &Carrier, target: &Carrier) -> Self {
        let full = BitSet::full(target.len());
        Relation::from_rows(source, target, vec![full; source.len()])
    }

    /// The equality relation on a carrier.
    pub fn identity(carrier: &Carrier) -> Self {
        Relation::from_fn(carrier, carrier, |i, j| i == j)
    }

    pub fn from_fn(source: &Carrier, target: &Carrier, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Relation::bottom(source, target);
        for i in 0..source.len() {
            for j in 0..target.len() {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    pub fn from_rows(source: &Carrier, target: &Carrier, rows: Vec<BitSet>) -> Self {
        assert_eq!(rows.len(), source.len(), "row count does not match source");
        let stride = words_for(target.len());
        let mut data = Vec::with_capacity(stride * rows.len());
        for row in &rows {
            assert_eq!(row.len(), target.len(), "row length does not match target");
            data.extend_from_slice(row.words());
        }
        Relation { source: source.clone(), target: target.clone(), stride, data }
    }

    pub fn from_pairs<A: AsRef<str>, B: AsRef<str>>(
        source: &Carrier,
        target: &Carrier,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let mut r = Relation::bottom(source, target);
        for (a, b) in pairs {
            let i = source.index_of(a.as_ref())?;
            let j = target.index_of(b.as_ref())?;
            r.insert(i, j);
        }
        Ok(r)
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row_words(i)[j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        self.row_words_mut(i)[j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub(crate) fn remove(&mut self, i: usize, j: usize) {
        self.row_words_mut(i)[j / 64] &= !(1 << (j % 64));
    }

    /// Returns a copy with the pair `(a, b)` added or removed.
    pub fn with_pair(&self, a: &str, b: &str, present: bool) -> Result<Relation> {
        let i = self.source.index_of(a)?;
        let j = self.target.index_of(b)?;
        let mut r = self.clone();
        if present {
            r.insert(i, j);
        } else {
            r.remove(i, j);
        }
        Ok(r)
    }

    pub fn contains(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.get(self.source.index_of(a)?, self.target.index_of(b)?))
    }

    /// Successor set of source element `i`.
    pub fn row(&self, i: usize) -> BitSet {
        BitSet::from_words(self.target.len(), self.row_words(i).to_vec())
    }

    /// Predecessor set of target element `j`.
    pub fn column(&self, j: usize) -> BitSet {
        BitSet::from_indices(self.source.len(), (0..self.source.len()).filter(|&i| self.get(i, j)))
    }

    pub fn count(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn pair_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.source.len() {
            for j in self.row(i).iter() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn pairs(&self) -> Vec<(&str, &str)> {
        self.pair_indices().into_iter().map(|(i, j)| (self.source.element(i), self.target.element(j))).collect()
    }

    fn check_parallel(&self, other: &Relation, op: &'static str) -> Result<()> {
        self.source.check(&other.source, op)?;
        self.target.check(&other.target, op)
    }

    pub fn meet(&self, other: &Relation) -> Result<Relation> {
        self.check_parallel(other, "meet")?;
        let mut r = self.clone();
        for (a, b) in r.data.iter_mut().zip(&other.data) {
            *a &= b;
        }
        Ok(r)
    }

    pub fn join(&self, other: &Relation) -> Result<Relation> {
        self.check_parallel(other, "join")?;
        let mut r = self.clone();
        for (a, b) in r.data.iter_mut().zip(&other.data) {
            *a |= b;
        }
        Ok(r)
    }

    /// Homset order: pair-set inclusion.
    pub fn leq(&self, other: &Relation) -> Result<bool> {
        self.check_parallel(other, "leq")?;
        Ok(self.data.iter().zip(&other.data).all(|(a, b)| a & !b == 0))
    }

    /// Pointwise complement within `source × target`.
    pub fn complement(&self) -> Relation {
        let rows = (0..self.source.len()).map(|i| self.row(i).complement()).collect();
        Relation::from_rows(&self.source, &self.target, rows)
    }

    /// Transpose.
    pub fn opposite(&self) -> Relation {
        let mut r = Relation::bottom(&self.target, &self.source);
        for (i, j) in self.pair_indices() {
            r.insert(j, i);
        }
        r
    }

    /// Diagrammatic composition: first `self`, then `next`.
    pub fn then(&self, next: &Relation) -> Result<Relation> {
        compose(self, next)
    }

    /// Componentwise product `(a,c) ≤ (b,d)` iff `a self b` and `c other d`.
    pub fn product(&self, other: &Relation) -> Result<Relation> {
        let s = self.source.product(&other.source)?;
        let t = self.target.product(&other.target)?;
        let (m, n) = (other.source.len(), other.target.len());
        Ok(Relation::from_fn(&s, &t, |p, q| self.get(p / m, q / n) && other.get(p % m, q % n)))
    }

    /// Relabels carriers of identical size, keeping the matrix.
    pub fn relabel(&self, source: &Carrier, target: &Carrier) -> Result<Relation> {
        if source.len() != self.source.len() || target.len() != self.target.len() {
            return Err(mismatch("relabel", self.source.name(), source.name()));
        }
        Ok(Relation { source: source.clone(), target: target.clone(), stride: self.stride, data: self.data.clone() })
    }

    /// Restricts to the given source and target index lists.
    pub fn restrict(&self, source: &Carrier, rows: &[usize], target: &Carrier, cols: &[usize]) -> Relation {
        Relation::from_fn(source, target, |i, j| self.get(rows[i], cols[j]))
    }
}

/// `(x,z)` is present iff some `y` has `x α y` and `y β z`.
pub fn compose(alpha: &Relation, beta: &Relation) -> Result<Relation> {
    alpha.target.check(&beta.source, "compose")?;
    let mut r = Relation::bottom(&alpha.source, &beta.target);
    for x in 0..alpha.source.len() {
        for y in 0..alpha.target.len() {
            if alpha.get(x, y) {
                let stride = r.stride;
                let src = &beta.data[y * stride..(y + 1) * stride];
                for (a, b) in r.row_words_mut(x).iter_mut().zip(src) {
                    *a |= b;
                }
            }
        }
    }
    Ok(r)
}

/// `β ⇐ α = {(z,y) | ∀x: x β z ⇒ x α y}` for `β: X→Z`, `α: X→Y`.
pub fn residuate_source(beta: &Relation, alpha: &Relation) -> Result<Relation> {
    beta.source.check(&alpha.source, "residuate_source")?;
    let mut r = Relation::top(&beta.target, &alpha.target);
    for x in 0..beta.source.len() {
        for z in 0..beta.target.len() {
            if beta.get(x, z) {
                let stride = r.stride;
                let src = &alpha.data[x * stride..(x + 1) * stride];
                for (a, b) in r.row_words_mut(z).iter_mut().zip(src) {
                    *a &= b;
                }
            }
        }
    }
    Ok(r)
}

/// `α ⤙ γ = {(x,z) | ∀y: z γ y ⇒ x α y}` for `α: X→Y`, `γ: Z→Y`.
pub fn residuate_target(alpha: &Relation, gamma: &Relation) -> Result<Relation> {
    alpha.target.check(&gamma.target, "residuate_target")?;
    let mut r = Relation::bottom(&alpha.source, &gamma.source);
    for x in 0..alpha.source.len() {
        let ax = alpha.row_words(x);
        for z in 0..gamma.source.len() {
            if gamma.row_words(z).iter().zip(ax).all(|(g, a)| g & !a == 0) {
                r.insert(x, z);
            }
        }
    }
    Ok(r)
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.source.name(), self.target.name())?;
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl fmt::Display for Relation {
    /// Cross table with `X` for present pairs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.source.elements().iter().map(|e| e.chars().count()).max().unwrap_or(0);
        write!(f, "{:w$}", "")?;
        for t in self.target.elements() {
            write!(f, " {t}")?;
        }
        writeln!(f)?;
        for i in 0..self.source.len() {
            write!(f, "{:w$}", self.source.element(i))?;
            for (j, t) in self.target.elements().iter().enumerate() {
                let cell = if self.get(i, j) { "X" } else { "." };
                write!(f, " {cell:>width$}", width = t.chars().count())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> (Carrier, Carrier, Relation) {
        let x0 = Carrier::new("X0", ["a", "b"]).unwrap();
        let x1 = Carrier::new("X1", ["p", "q"]).unwrap();
        let mu = Relation::from_pairs(&x0, &x1, [("a", "p"), ("a", "q"), ("b", "q")]).unwrap();
        (x0, x1, mu)
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(Carrier::new("c", ["a", "a"]), Err(Error::DuplicateElement { .. })));
    }

    #[test]
    fn carrier_equality_is_structural() {
        let a = Carrier::new("c", ["x", "y"]).unwrap();
        let b = Carrier::new("c", ["x", "y"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Carrier::new("c", ["y", "x"]).unwrap());
        assert_ne!(a, Carrier::new("d", ["x", "y"]).unwrap());
    }

    #[test]
    fn t2_compose_with_opposite() {
        let (x0, _, mu) = t2();
        let r = compose(&mu, &mu.opposite()).unwrap();
        assert_eq!(r, Relation::top(&x0, &x0));
    }

    #[test]
    fn t2_residuals() {
        let (x0, x1, mu) = t2();
        let src = residuate_source(&mu, &mu).unwrap();
        assert_eq!(src, Relation::from_pairs(&x1, &x1, [("p", "p"), ("p", "q"), ("q", "q")]).unwrap());
        let tgt = residuate_target(&mu, &mu).unwrap();
        assert_eq!(tgt, Relation::from_pairs(&x0, &x0, [("a", "a"), ("a", "b"), ("b", "b")]).unwrap());
    }

    #[test]
    fn t2_opposite() {
        let (x0, x1, mu) = t2();
        let op = mu.opposite();
        assert_eq!(op, Relation::from_pairs(&x1, &x0, [("p", "a"), ("q", "a"), ("q", "b")]).unwrap());
        assert_eq!(op.opposite(), mu);
    }

    #[test]
    fn vacuous_residuals_are_top() {
        let (x0, x1, mu) = t2();
        let z = Carrier::new("Z", ["u", "v", "w"]).unwrap();
        let bot = Relation::bottom(&x0, &z);
        assert_eq!(residuate_source(&bot, &mu).unwrap(), Relation::top(&z, &x1));
        let bot = Relation::bottom(&z, &x1);
        assert_eq!(residuate_target(&mu, &bot).unwrap(), Relation::top(&x0, &z));
    }

    #[test]
    fn bottom_annihilates() {
        let (x0, x1, mu) = t2();
        let bot = Relation::bottom(&x0, &x0);
        assert_eq!(compose(&bot, &mu).unwrap(), Relation::bottom(&x0, &x1));
    }

    #[test]
    fn boolean_identities() {
        let (x0, x1, mu) = t2();
        assert_eq!(mu.meet(&Relation::top(&x0, &x1)).unwrap(), mu);
        assert_eq!(Relation::bottom(&x0, &x1).join(&mu).unwrap(), mu);
        assert!(Relation::bottom(&x0, &x1).leq(&mu).unwrap());
        assert_eq!(Relation::bottom(&x0, &x1).opposite(), Relation::bottom(&x1, &x0));
    }

    #[test]
    fn mismatched_carriers_are_errors() {
        let (x0, x1, mu) = t2();
        assert!(matches!(compose(&mu, &mu), Err(Error::CarrierMismatch { .. })));
        assert!(mu.leq(&Relation::bottom(&x1, &x0)).is_err());
    }

    #[test]
    fn wide_rows_compose() {
        let big = Carrier::new("B", (0..130).map(|i| i.to_string())).unwrap();
        let one = Carrier::unit();
        let f = Relation::from_fn(&one, &big, |_, j| j % 2 == 1);
        let shift = Relation::from_fn(&big, &big, |i, j| j == (i + 1) % 130);
        let g = compose(&f, &shift).unwrap();
        assert_eq!(g.row(0).iter().next(), Some(0));
        assert_eq!(g.count(), 65);
    }

    #[test]
    fn subset_relation_round_trip() {
        let (x0, _, _) = t2();
        let s = Subset::new(&x0, ["b"]).unwrap();
        assert_eq!(Subset::from_ideal_relation(&s.as_ideal_relation()).unwrap(), s);
        assert_eq!(Subset::from_filter_relation(&s.as_filter_relation()).unwrap(), s);
        assert!(s.contains("b").unwrap());
        assert!(s.contains("z").is_err());
    }

    #[test]
    fn product_relation() {
        let (_, _, mu) = t2();
        let sq = mu.product(&mu).unwrap();
        assert_eq!(sq.count(), 9);
        assert!(sq.contains("(a,b)", "(p,q)").unwrap());
        assert!(!sq.contains("(b,a)", "(p,q)").unwrap());
    }
}
