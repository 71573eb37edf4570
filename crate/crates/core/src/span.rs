//! The span category of finite G-sets.
//!
//! A morphism `X → Y` is an element of the Burnside group of G-sets over
//! `Y × X`: an integer combination of isomorphism classes of transitive spans
//! `X ← Z → Y`. Composition pulls back over the middle object.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::SubgroupId;
use crate::gset::{pullback, GMap, GSet};

/// Canonical isomorphism class of a transitive span `X ← G/S → Y`.
///
/// `S` is the representative of its subgroup class and `(tgt_point,
/// src_point)` is the least image of a base point with stabilizer exactly `S`.
/// Two transitive spans over `Y × X` are isomorphic iff their classes are
/// equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpanClass {
    #[serde(rename = "mid_subgroup_class")]
    pub mid_class: usize,
    pub tgt_point: usize,
    pub src_point: usize,
}

/// Canonical class of the orbit of `(y, x) ∈ Y × X` whose stabilizer is `s`.
pub fn canonical_from_point(
    src: &GSet,
    tgt: &GSet,
    s: SubgroupId,
    tgt_point: usize,
    src_point: usize,
) -> SpanClass {
    let group = src.group();
    let g = group.to_class_rep(s);
    let class = group.subgroup(s).class_id;
    let rep = group.class_rep(class);
    let (y0, x0) = (tgt.act(g, tgt_point), src.act(g, src_point));
    let (mut best_y, mut best_x) = (y0, x0);
    for &n in &group.subgroup(group.normalizer(rep)).elements {
        let cand = (tgt.act(n, y0), src.act(n, x0));
        if cand < (best_y, best_x) {
            (best_y, best_x) = cand;
        }
    }
    SpanClass { mid_class: class, tgt_point: best_y, src_point: best_x }
}

/// Canonical class of the transitive span `X ←a− Z −b→ Y`, by minimizing over
/// every base point of `Z` whose stabilizer is the class representative.
pub fn canonical_class(z: &GSet, a: &GMap, b: &GMap) -> Result<SpanClass> {
    if !z.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if *a.source != *z || *b.source != *z {
        return Err(Error::Mismatch("span legs do not start at the middle object".into()));
    }
    let group = z.group();
    let class = z.orbits()[0].class_id;
    let rep = group.class_rep(class);
    let best = (0..z.size())
        .filter(|&p| z.stabilizer(p) == rep)
        .map(|p| (b.apply(p), a.apply(p)))
        .min()
        .expect("some point has the representative stabilizer");
    Ok(SpanClass { mid_class: class, tgt_point: best.0, src_point: best.1 })
}

/// Transitive classes of spans `X ← Z → Y`, sorted.
pub fn hom_basis(src: &GSet, tgt: &GSet) -> Vec<SpanClass> {
    let group = src.group();
    let mut out = BTreeSet::new();
    for class in group.subgroup_classes() {
        let fy = tgt.fixed_points(class.rep);
        if fy.is_empty() {
            continue;
        }
        let fx = src.fixed_points(class.rep);
        for &y in &fy {
            for &x in &fx {
                out.insert(canonical_from_point(src, tgt, class.rep, y, x));
            }
        }
    }
    out.into_iter().collect()
}

/// The transitive span of a class, materialized as `(G/S, src leg, tgt leg)`.
pub fn span_of_class(src: &Arc<GSet>, tgt: &Arc<GSet>, class: &SpanClass) -> (Arc<GSet>, GMap, GMap) {
    let group = src.group();
    let rep = group.class_rep(class.mid_class);
    let z = Arc::new(GSet::transitive(group, rep));
    let mut a = vec![0; z.size()];
    let mut b = vec![0; z.size()];
    for p in 0..z.size() {
        let g = z.transporter(0, p).expect("transitive");
        a[p] = src.act(g, class.src_point);
        b[p] = tgt.act(g, class.tgt_point);
    }
    (
        z.clone(),
        GMap::new_unchecked(z.clone(), src.clone(), a),
        GMap::new_unchecked(z, tgt.clone(), b),
    )
}

/// A morphism `src → tgt` of the span category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    pub src: Arc<GSet>,
    pub tgt: Arc<GSet>,
    terms: BTreeMap<SpanClass, i64>,
}

impl BurnsideElement {
    pub fn zero(src: &Arc<GSet>, tgt: &Arc<GSet>) -> Self {
        BurnsideElement { src: src.clone(), tgt: tgt.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(src: &Arc<GSet>, tgt: &Arc<GSet>, class: SpanClass) -> Self {
        let mut e = Self::zero(src, tgt);
        e.add_term(class, 1);
        e
    }

    /// Class of an arbitrary span, decomposed over the orbits of its middle.
    pub fn from_span(z: &GSet, a: &GMap, b: &GMap) -> Self {
        let mut e = Self::zero(&a.target, &b.target);
        for orbit in z.orbits() {
            let p = orbit.base;
            e.add_term(
                canonical_from_point(&a.target, &b.target, orbit.stabilizer, b.apply(p), a.apply(p)),
                1,
            );
        }
        e
    }

    /// The span `X ←id− X −f→ Y` of a G-map.
    pub fn from_map(f: &GMap) -> Self {
        Self::from_span(&f.source, &GMap::identity(&f.source), f)
    }

    pub fn add_term(&mut self, class: SpanClass, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(class).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&class);
        }
    }

    pub fn coefficient(&self, class: &SpanClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SpanClass, &i64)> {
        self.terms.iter()
    }

    /// Number of basis classes with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_objects(&self, other: &Self) -> bool {
        *self.src == *other.src && *self.tgt == *other.tgt
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_objects(other) {
            return Err(Error::Mismatch("adding morphisms between different objects".into()));
        }
        let mut out = self.clone();
        for (c, &k) in &other.terms {
            out.add_term(*c, k);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(&self.src, &self.tgt);
        for (c, &v) in &self.terms {
            out.add_term(*c, v * k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    /// Swaps the two legs, giving a morphism `tgt → src`.
    pub fn transpose(&self) -> Self {
        let group = self.src.group();
        let mut out = Self::zero(&self.tgt, &self.src);
        for (c, &k) in &self.terms {
            let rep = group.class_rep(c.mid_class);
            out.add_term(canonical_from_point(&self.tgt, &self.src, rep, c.src_point, c.tgt_point), k);
        }
        out
    }
}

/// Identity morphism: one diagonal span per orbit.
pub fn identity(x: &Arc<GSet>) -> BurnsideElement {
    let mut e = BurnsideElement::zero(x, x);
    for orbit in x.orbits() {
        e.add_term(canonical_from_point(x, x, orbit.stabilizer, orbit.base, orbit.base), 1);
    }
    e
}

/// Composition of transitive spans by pullback over the shared object.
pub fn compose_classes(
    x: &Arc<GSet>,
    y: &Arc<GSet>,
    w: &Arc<GSet>,
    second: &SpanClass,
    first: &SpanClass,
) -> BurnsideElement {
    let (_, a1, b1) = span_of_class(x, y, first);
    let (_, a2, b2) = span_of_class(y, w, second);
    compose_materialized(x, w, (&a1, &b1), (&a2, &b2))
}

pub(crate) fn compose_materialized(
    x: &Arc<GSet>,
    w: &Arc<GSet>,
    (a1, b1): (&GMap, &GMap),
    (a2, b2): (&GMap, &GMap),
) -> BurnsideElement {
    let (p_set, p, q) = pullback(b1, a2).expect("legs meet in the shared object");
    let mut e = BurnsideElement::zero(x, w);
    for orbit in p_set.orbits() {
        let base = orbit.base;
        let src_pt = a1.apply(p.apply(base));
        let tgt_pt = b2.apply(q.apply(base));
        e.add_term(canonical_from_point(x, w, orbit.stabilizer, tgt_pt, src_pt), 1);
    }
    e
}

/// `second ∘ first`.
pub fn compose(second: &BurnsideElement, first: &BurnsideElement) -> Result<BurnsideElement> {
    if *first.tgt != *second.src {
        return Err(Error::Mismatch("target of the first morphism is not the source of the second".into()));
    }
    let (x, y, w) = (&first.src, &first.tgt, &second.tgt);
    let firsts: Vec<_> = first.terms().map(|(c, &k)| (span_of_class(x, y, c), k)).collect();
    let seconds: Vec<_> = second.terms().map(|(c, &k)| (span_of_class(y, w, c), k)).collect();
    let mut out = BurnsideElement::zero(x, w);
    for ((_, a2, b2), k2) in &seconds {
        for ((_, a1, b1), k1) in &firsts {
            let part = compose_materialized(x, w, (a1, b1), (a2, b2));
            for (c, &k) in part.terms() {
                out.add_term(*c, k * k1 * k2);
            }
        }
    }
    Ok(out)
}
