//! The fused category: G-maps up to twists by maps into the conjugation
//! G-set, spans of fused G-sets, and the quotient hom groups
//! `B(Y × X) / K(Y, X)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Elem;
use crate::gset::{maps_between, pullback, GMap, GSet};
use crate::span::{self, canonical_from_point, hom_basis, BurnsideElement, SpanClass};
use crate::zlattice::{quotient_by_columns, IntMatrix, QuotientPresentation};

/// A span class canonicalized also over centralizer twists of its target leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FusedSpanClass(pub SpanClass);

impl FusedSpanClass {
    pub fn class(&self) -> &SpanClass {
        &self.0
    }
}

fn check_parallel(a: &GMap, b: &GMap) -> Result<()> {
    if *a.source != *b.source || *a.target != *b.target {
        return Err(Error::Mismatch("maps must share source and target".into()));
    }
    Ok(())
}

/// Whether `b = u * a` for some `u: Z → G^c`, decided orbit by orbit.
pub fn fused_equal(a: &GMap, b: &GMap) -> Result<bool> {
    check_parallel(a, b)?;
    let (z, y) = (&a.source, &a.target);
    let group = z.group();
    Ok(z.orbits().iter().all(|o| {
        let (ya, yb) = (a.apply(o.base), b.apply(o.base));
        group.subgroup(group.centralizer(o.stabilizer)).elements.iter().any(|&c| y.act(c, ya) == yb)
    }))
}

/// Whether `(a, b): Z → Y × Y` factors through `p: Y × G^c → Y × Y`,
/// `p(y, g) = (y, g·y)`, by exhaustive search over maps `Z → Y × G^c`.
pub fn fused_equal_via_path_object(a: &GMap, b: &GMap) -> Result<bool> {
    check_parallel(a, b)?;
    let (z, y) = (&a.source, &a.target);
    let gc = Arc::new(GSet::conjugation(z.group()));
    let (path, p1, p2) = GSet::product(y, &gc)?;
    Ok(maps_between(z, &path).iter().any(|h| {
        (0..z.size()).all(|w| {
            let pt = h.apply(w);
            let (yy, g) = (p1.apply(pt), p2.apply(pt));
            yy == a.apply(w) && y.act(g, yy) == b.apply(w)
        })
    }))
}

/// Whether `Λ(Id, a) − Λ(Id, b)` lies in the twist-difference lattice
/// `K(Y, Z)`.
pub fn fused_equal_via_lattice(a: &GMap, b: &GMap) -> Result<bool> {
    check_parallel(a, b)?;
    let (z, y) = (&a.source, &a.target);
    lattice_contains_difference(&fused_hom(z, y), a, b)
}

/// The lattice test against a precomputed `fused_hom(Z, Y)`.
pub fn lattice_contains_difference(hom: &FusedHom, a: &GMap, b: &GMap) -> Result<bool> {
    check_parallel(a, b)?;
    let z = &a.source;
    let id = GMap::identity(z);
    let diff = BurnsideElement::from_span(z, &id, a).sub(&BurnsideElement::from_span(z, &id, b))?;
    Ok(hom.quotient.contains_i64(&hom.coordinates(&diff)))
}

/// Weak pullback of `X −a→ Z ←b− Y`: the ordinary pullback of the given lifts.
pub fn weak_pullback(a: &GMap, b: &GMap) -> Result<(Arc<GSet>, GMap, GMap)> {
    pullback(a, b)
}

/// The isomorphism `(x, y) ↦ (v(x)·x, w(y)·y)` from the pullback of the
/// twisted lifts `v * a`, `w * b` to the pullback of `a`, `b`.
pub fn twisted_pullback_iso(
    twisted: (&Arc<GSet>, &GMap, &GMap),
    plain: (&Arc<GSet>, &GMap, &GMap),
    v: &GMap,
    w: &GMap,
) -> Result<GMap> {
    let (p_tw, p1, q1) = twisted;
    let (p_plain, p0, q0) = plain;
    let (x, y) = (&p0.target, &q0.target);
    let mut index = BTreeMap::new();
    for pt in 0..p_plain.size() {
        index.insert((p0.apply(pt), q0.apply(pt)), pt);
    }
    let images = (0..p_tw.size())
        .map(|pt| {
            let (xx, yy) = (p1.apply(pt), q1.apply(pt));
            let key = (x.act(v.apply(xx), xx), y.act(w.apply(yy), yy));
            index.get(&key).copied().ok_or_else(|| Error::Mismatch("twisted pullback point has no image".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    GMap::new(p_tw.clone(), p_plain.clone(), images)
}

/// The class obtained by twisting the target leg of `s` by `c ∈ C_G(S)`.
pub fn twist_class(src: &GSet, tgt: &GSet, s: &SpanClass, c: Elem) -> Result<SpanClass> {
    let group = src.group();
    let rep = group.class_rep(s.mid_class);
    if !group.subgroup(group.centralizer(rep)).contains(c) {
        return Err(Error::NotCentralizing { elem: c, class: s.mid_class });
    }
    Ok(canonical_from_point(src, tgt, rep, tgt.act(c, s.tgt_point), s.src_point))
}

/// Fused canonical form of a span class.
pub fn fuse_class(src: &GSet, tgt: &GSet, s: &SpanClass) -> FusedSpanClass {
    let group = src.group();
    let rep = group.class_rep(s.mid_class);
    let best = group
        .subgroup(group.centralizer(rep))
        .elements
        .iter()
        .map(|&c| canonical_from_point(src, tgt, rep, tgt.act(c, s.tgt_point), s.src_point))
        .min()
        .expect("centralizer is nonempty");
    FusedSpanClass(best)
}

/// Fused form computed by twisting the source leg instead.
pub fn fuse_class_via_source(src: &GSet, tgt: &GSet, s: &SpanClass) -> FusedSpanClass {
    let group = src.group();
    let rep = group.class_rep(s.mid_class);
    group
        .subgroup(group.centralizer(rep))
        .elements
        .iter()
        .map(|&c| {
            let t = canonical_from_point(src, tgt, rep, s.tgt_point, src.act(c, s.src_point));
            fuse_class(src, tgt, &t)
        })
        .min()
        .expect("centralizer is nonempty")
}

/// `Hom(X, Y)` in the fused category, with its lattice presentation.
#[derive(Debug, Clone)]
pub struct FusedHom {
    pub unfused: Vec<SpanClass>,
    pub basis: Vec<FusedSpanClass>,
    /// Index into `basis` of the fused class of each unfused class.
    pub fused_of: Vec<usize>,
    /// Generators of `K(Y, X)` as pairs `(i, j)` meaning `e_i − e_j`.
    pub generators: Vec<(usize, usize)>,
    pub quotient: QuotientPresentation,
}

impl FusedHom {
    pub fn unfused_rank(&self) -> usize {
        self.unfused.len()
    }

    pub fn fused_rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism in the unfused basis.
    pub fn coordinates(&self, e: &BurnsideElement) -> Vec<i64> {
        let mut v = vec![0; self.unfused.len()];
        for (c, &k) in e.terms() {
            let i = self.unfused.binary_search(c).expect("class belongs to the hom basis");
            v[i] = k;
        }
        v
    }

    /// Pairs `(i, j)`, `i ≠ j`, of unfused classes identified by fusion, each
    /// class paired with the least member of its fused class.
    pub fn collapsed_pairs(&self) -> Vec<(usize, usize)> {
        let mut first = vec![usize::MAX; self.basis.len()];
        let mut out = Vec::new();
        for (i, &f) in self.fused_of.iter().enumerate() {
            if first[f] == usize::MAX {
                first[f] = i;
            } else {
                out.push((first[f], i));
            }
        }
        out
    }

    /// The SNF quotient is free of rank equal to the fused class count.
    pub fn is_consistent(&self) -> bool {
        self.quotient.is_torsion_free() && self.quotient.free_rank == self.basis.len()
    }
}

/// Generators of `K(Y, X)` from twists of transitive spans, as index pairs
/// into `hom_basis(src, tgt)`.
pub fn k_generators(src: &GSet, tgt: &GSet, basis: &[SpanClass]) -> Vec<(usize, usize)> {
    let group = src.group();
    let mut out = BTreeSet::new();
    for (i, s) in basis.iter().enumerate() {
        let rep = group.class_rep(s.mid_class);
        for &c in &group.subgroup(group.centralizer(rep)).elements {
            let t = canonical_from_point(src, tgt, rep, tgt.act(c, s.tgt_point), s.src_point);
            if t != *s {
                let j = basis.binary_search(&t).expect("twisted class is in the basis");
                out.insert((i.min(j), i.max(j)));
            }
        }
    }
    out.into_iter().collect()
}

pub fn fused_hom(src: &GSet, tgt: &GSet) -> FusedHom {
    let unfused = hom_basis(src, tgt);
    let fused: Vec<FusedSpanClass> = unfused.iter().map(|s| fuse_class(src, tgt, s)).collect();
    let basis: Vec<FusedSpanClass> = fused.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let fused_of = fused.iter().map(|f| basis.binary_search(f).expect("present")).collect();
    let generators = k_generators(src, tgt, &unfused);
    let columns: Vec<Vec<i64>> = generators
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![0; unfused.len()];
            v[i] = 1;
            v[j] = -1;
            v
        })
        .collect();
    let quotient = quotient_by_columns(unfused.len(), &IntMatrix::from_columns(unfused.len(), &columns));
    let hom = FusedHom { unfused, basis, fused_of, generators, quotient };
    debug_assert!(hom.is_consistent());
    hom
}

/// A morphism of the fused span category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusedElement {
    pub src: Arc<GSet>,
    pub tgt: Arc<GSet>,
    terms: BTreeMap<FusedSpanClass, i64>,
}

impl FusedElement {
    pub fn zero(src: &Arc<GSet>, tgt: &Arc<GSet>) -> Self {
        FusedElement { src: src.clone(), tgt: tgt.clone(), terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, class: FusedSpanClass, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(class).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&class);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FusedSpanClass, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: &FusedSpanClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lift through canonical representatives.
    pub fn lift(&self) -> BurnsideElement {
        let mut e = BurnsideElement::zero(&self.src, &self.tgt);
        for (c, &k) in &self.terms {
            e.add_term(c.0, k);
        }
        e
    }
}

/// Image of a span-category morphism in the fused category.
pub fn fuse(e: &BurnsideElement) -> FusedElement {
    let mut out = FusedElement::zero(&e.src, &e.tgt);
    for (c, &k) in e.terms() {
        out.add_term(fuse_class(&e.src, &e.tgt, c), k);
    }
    out
}

pub fn fused_identity(x: &Arc<GSet>) -> FusedElement {
    fuse(&span::identity(x))
}

/// `second ∘ first`, via lifts composed in the span category.
pub fn fused_compose(second: &FusedElement, first: &FusedElement) -> Result<FusedElement> {
    Ok(fuse(&span::compose(&second.lift(), &first.lift())?))
}

/// Whether a G-map is invertible in the fused category, by searching for a
/// fused inverse.
pub fn is_fused_invertible(f: &GMap) -> bool {
    let (z, y) = (&f.source, &f.target);
    let (id_z, id_y) = (GMap::identity(z), GMap::identity(y));
    maps_between(y, z).iter().any(|g| {
        let gf = g.after(f).expect("composable");
        let fg = f.after(g).expect("composable");
        fused_equal(&gf, &id_z).unwrap_or(false) && fused_equal(&fg, &id_y).unwrap_or(false)
    })
}

/// A commutative square over a weak pullback admitting two mediating maps
/// that are not fused-equal.
#[derive(Debug, Clone)]
pub struct MediatorWitness {
    pub a: GMap,
    pub b: GMap,
    pub c: GMap,
    pub d: GMap,
    pub first: GMap,
    pub second: GMap,
}

/// Searches transitive `X, Y, Z, T` for a fused-commutative square
/// `a∘c ~ b∘d` whose mediators into the weak pullback are not unique.
pub fn mediator_nonuniqueness_witness(group: &Arc<crate::group::FiniteGroup>) -> Option<MediatorWitness> {
    let sets: Vec<Arc<GSet>> =
        group.subgroup_classes().iter().map(|cl| Arc::new(GSet::transitive(group, cl.rep))).collect();
    for x in &sets {
        for y in &sets {
            for zs in &sets {
                for a in maps_between(x, zs) {
                    for b in maps_between(y, zs) {
                        let (p_set, p, q) = pullback(&a, &b).expect("shared target");
                        for t in &sets {
                            let candidates = maps_between(t, &p_set);
                            for c in maps_between(t, x) {
                                for d in maps_between(t, y) {
                                    let ac = a.after(&c).expect("composable");
                                    let bd = b.after(&d).expect("composable");
                                    if !fused_equal(&ac, &bd).expect("parallel") {
                                        continue;
                                    }
                                    let mediators: Vec<&GMap> = candidates
                                        .iter()
                                        .filter(|e| {
                                            fused_equal(&p.after(e).expect("composable"), &c).expect("parallel")
                                                && fused_equal(&q.after(e).expect("composable"), &d).expect("parallel")
                                        })
                                        .collect();
                                    for (i, e1) in mediators.iter().enumerate() {
                                        for e2 in &mediators[i + 1..] {
                                            if !fused_equal(e1, e2).expect("parallel") {
                                                return Some(MediatorWitness {
                                                    a,
                                                    b,
                                                    c,
                                                    d,
                                                    first: (*e1).clone(),
                                                    second: (*e2).clone(),
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::gset::{star, Omega};
    use crate::span::compose;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    fn transitives(g: &Arc<FiniteGroup>) -> Vec<Arc<GSet>> {
        g.subgroup_classes().iter().map(|c| Arc::new(GSet::transitive(g, c.rep))).collect()
    }

    #[test]
    fn fused_equal_examples() {
        let c2 = group("C2");
        let free = Arc::new(GSet::transitive(&c2, 0));
        let id = GMap::identity(&free);
        let swap = GMap::new(free.clone(), free.clone(), vec![1, 0]).unwrap();
        assert!(fused_equal(&id, &id).unwrap());
        assert!(fused_equal(&id, &swap).unwrap());
        assert!(fused_equal_via_path_object(&id, &swap).unwrap());
        assert!(fused_equal_via_lattice(&id, &swap).unwrap());

        let s3 = group("S3");
        let c3 = s3.subgroup_classes().iter().find(|c| s3.subgroup(c.rep).order() == 3).unwrap().rep;
        let z = Arc::new(GSet::transitive(&s3, c3));
        let maps = maps_between(&z, &z);
        assert_eq!(maps.len(), 2);
        let id = GMap::identity(&z);
        let other = maps.iter().find(|m| **m != id).unwrap();
        assert!(!fused_equal(&id, other).unwrap());
        assert!(!fused_equal_via_path_object(&id, other).unwrap());
        assert!(!fused_equal_via_lattice(&id, other).unwrap());

        let empty = Arc::new(GSet::empty(&s3));
        let e = GMap::identity(&empty);
        assert!(fused_equal_via_path_object(&e, &e).unwrap());
    }

    #[test]
    fn equality_tests_agree_on_small_groups() {
        for name in ["C2", "C3", "S3", "V4"] {
            let g = group(name);
            let sets = transitives(&g);
            for z in &sets {
                for y in &sets {
                    let maps = maps_between(z, y);
                    for a in &maps {
                        for b in &maps {
                            let v = fused_equal(a, b).unwrap();
                            assert_eq!(v, fused_equal_via_path_object(a, b).unwrap());
                            assert_eq!(v, fused_equal_via_lattice(a, b).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fused_equal_matches_star_action() {
        let g = group("S3");
        let gc = Arc::new(GSet::conjugation(&g));
        let omega = Omega::new(&g);
        for z in transitives(&g) {
            let twists = maps_between(&z, &gc);
            for a in maps_between(&z, &omega.set) {
                let orbit: BTreeSet<Vec<usize>> = twists.iter().map(|u| star(u, &a).unwrap().images).collect();
                for b in maps_between(&z, &omega.set) {
                    assert_eq!(fused_equal(&a, &b).unwrap(), orbit.contains(&b.images));
                }
            }
        }
    }

    #[test]
    fn fuse_class_examples() {
        let c2 = group("C2");
        let free = Arc::new(GSet::transitive(&c2, 0));
        let basis = hom_basis(&free, &free);
        assert_eq!(basis.len(), 2);
        let f: BTreeSet<_> = basis.iter().map(|s| fuse_class(&free, &free, s)).collect();
        assert_eq!(f.len(), 1);

        for name in ["C2", "S3", "Q8"] {
            let g = group(name);
            let pt = Arc::new(GSet::point(&g));
            for s in hom_basis(&pt, &pt) {
                assert_eq!(fuse_class(&pt, &pt, &s).0, s);
            }
            let omega = Omega::new(&g);
            let top = g.subgroup_classes().len() - 1;
            for s in hom_basis(&omega.set, &omega.set) {
                let f = fuse_class(&omega.set, &omega.set, &s);
                assert_eq!(fuse_class(&omega.set, &omega.set, &f.0), f);
                if s.mid_class == top {
                    assert_eq!(f.0, s);
                }
            }
        }
    }

    #[test]
    fn leg_twist_symmetry() {
        for name in ["C2", "C4", "S3", "V4", "D4", "Q8"] {
            let g = group(name);
            let omega = Omega::new(&g);
            for s in hom_basis(&omega.set, &omega.set) {
                assert_eq!(
                    fuse_class(&omega.set, &omega.set, &s),
                    fuse_class_via_source(&omega.set, &omega.set, &s),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn fused_hom_examples() {
        let c2 = group("C2");
        let pt = Arc::new(GSet::point(&c2));
        let h = fused_hom(&pt, &pt);
        assert_eq!((h.unfused_rank(), h.fused_rank()), (2, 2));
        assert!(h.generators.is_empty());

        let free = Arc::new(GSet::transitive(&c2, 0));
        let h = fused_hom(&free, &free);
        assert_eq!((h.unfused_rank(), h.fused_rank()), (2, 1));
        assert_eq!(h.quotient.free_rank, 1);
        assert_eq!(h.collapsed_pairs(), vec![(0, 1)]);

        let omega = Omega::new(&c2);
        let h = fused_hom(&free, &omega.set);
        assert_eq!(h.fused_rank(), 2);
        assert!(h.is_consistent());
    }

    #[test]
    fn fused_hom_quotient_identifies_exactly_fused_classes() {
        for name in ["C3", "S3", "V4"] {
            let g = group(name);
            let omega = Omega::new(&g);
            let h = fused_hom(&omega.set, &omega.set);
            assert!(h.is_consistent());
            let n = h.unfused_rank();
            for i in 0..n {
                for j in 0..n {
                    let mut v = vec![0; n];
                    v[i] += 1;
                    v[j] -= 1;
                    assert_eq!(h.quotient.contains_i64(&v), h.fused_of[i] == h.fused_of[j]);
                }
            }
        }
    }

    #[test]
    fn transitive_generators_span_non_transitive_differences() {
        for name in ["C2", "C3", "S3"] {
            let g = group(name);
            let gc = Arc::new(GSet::conjugation(&g));
            let sets = transitives(&g);
            let omega = Omega::new(&g);
            let x = &omega.set;
            let h = fused_hom(x, x);
            for z1 in &sets {
                for z2 in &sets {
                    let z = GSet::sum(&g, &[z1.clone(), z2.clone()]).unwrap();
                    let maps = maps_between(&z, x);
                    let twists = maps_between(&z, &gc);
                    for a in maps.iter().step_by(3) {
                        for b in maps.iter().step_by(5) {
                            let base = BurnsideElement::from_span(&z, a, b);
                            for u in &twists {
                                let tw = BurnsideElement::from_span(&z, a, &star(u, b).unwrap());
                                let d = base.sub(&tw).unwrap();
                                assert!(h.quotient.contains_i64(&h.coordinates(&d)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fused_composition_is_functorial() {
        let c2 = group("C2");
        let omega = Omega::new(&c2);
        let x = &omega.set;
        let basis = hom_basis(x, x);
        for s in &basis {
            for t in &basis {
                let (es, et) = (BurnsideElement::basis(x, x, *s), BurnsideElement::basis(x, x, *t));
                let direct = fuse(&compose(&es, &et).unwrap());
                let via = fused_compose(&fuse(&es), &fuse(&et)).unwrap();
                assert_eq!(direct, via);
            }
            let fs = fuse(&BurnsideElement::basis(x, x, *s));
            assert_eq!(fused_compose(&fused_identity(x), &fs).unwrap(), fs);
            assert_eq!(fused_compose(&fs, &fused_identity(x)).unwrap(), fs);
        }
    }

    #[test]
    fn fused_compose_is_lift_independent() {
        for name in ["C2", "C4", "S3"] {
            let g = group(name);
            let omega = Omega::new(&g);
            let x = &omega.set;
            let basis = hom_basis(x, x);
            for s in &basis {
                for t in &basis {
                    let expected = fused_compose(
                        &fuse(&BurnsideElement::basis(x, x, *s)),
                        &fuse(&BurnsideElement::basis(x, x, *t)),
                    )
                    .unwrap();
                    let (rs, rt) = (g.class_rep(s.mid_class), g.class_rep(t.mid_class));
                    for &c in &g.subgroup(g.centralizer(rs)).elements {
                        for &d in &g.subgroup(g.centralizer(rt)).elements {
                            let ls = BurnsideElement::basis(x, x, twist_class(x, x, s, c).unwrap());
                            let lt = BurnsideElement::basis(x, x, twist_class(x, x, t, d).unwrap());
                            assert_eq!(fuse(&compose(&ls, &lt).unwrap()), expected);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twist_class_rejects_non_centralizing() {
        let s3 = group("S3");
        let pt = Arc::new(GSet::point(&s3));
        let top = s3.subgroup_classes().len() - 1;
        let s = SpanClass { mid_class: top, tgt_point: 0, src_point: 0 };
        let outside = s3.elements().find(|&c| !s3.subgroup(s3.centralizer(s3.whole_group())).contains(c)).unwrap();
        assert!(twist_class(&pt, &pt, &s, outside).is_err());
    }

    #[test]
    fn weak_pullback_is_lift_independent() {
        let c2 = group("C2");
        let free = Arc::new(GSet::transitive(&c2, 0));
        let pt = Arc::new(GSet::point(&c2));
        let gc = Arc::new(GSet::conjugation(&c2));
        let a = GMap::new(free.clone(), pt.clone(), vec![0, 0]).unwrap();
        let (p_set, p, q) = weak_pullback(&a, &a).unwrap();
        let (plain, _, _) = pullback(&a, &a).unwrap();
        assert_eq!(*p_set, *plain);
        assert_eq!(p_set.orbits().len(), 2);
        let twists = maps_between(&free, &gc);
        for v in &twists {
            let a_tw = star(v, &a).unwrap();
            let (pt_tw, p1, q1) = weak_pullback(&a_tw, &a).unwrap();
            assert_eq!(pt_tw.orbits().len(), 2);
            let w = crate::gset::trivial_twist(&free, &gc);
            let f = twisted_pullback_iso((&pt_tw, &p1, &q1), (&p_set, &p, &q), v, &w).unwrap();
            assert!(f.is_bijective());
            assert_eq!(p.after(&f).unwrap(), star(v, &GMap::identity(&free)).unwrap().after(&p1).unwrap());
            assert_eq!(q.after(&f).unwrap(), q1);
        }
    }

    #[test]
    fn fused_invertibility_matches_lift_invertibility() {
        for name in ["C2", "C4", "S3", "V4"] {
            let g = group(name);
            let sets = transitives(&g);
            let omega = Omega::new(&g);
            let mut all = sets.clone();
            all.push(omega.set.clone());
            for z in &all {
                for y in &all {
                    for f in maps_between(z, y) {
                        assert_eq!(is_fused_invertible(&f), f.is_bijective(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn mediators_are_not_unique() {
        let c2 = group("C2");
        let w = mediator_nonuniqueness_witness(&c2).expect("witness for C2");
        assert!(!fused_equal(&w.first, &w.second).unwrap());
        assert!(mediator_nonuniqueness_witness(&group("C1")).is_none());
    }
}
