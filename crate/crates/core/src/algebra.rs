//! The Mackey algebra as the endomorphism ring of `Ω` in the span category,
//! with the basis of 4-tuples `(H, L, g, K)` and exact structure constants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, SubgroupId};
use crate::gset::{GSet, Omega};
use crate::span::{canonical_from_point, compose_materialized, hom_basis, span_of_class, SpanClass};

/// Basis index `t^H_K c_{g,K} r^L_{K^g}` of the Mackey algebra.
///
/// `H` and `L` are the representatives of their subgroup classes and
/// `K ≤ H ∩ gLg⁻¹`. The tuple is the least of its class under
/// `(g, K) ↦ (hgl, hKh⁻¹)`, `h ∈ H`, `l ∈ L`, ordered by `(g, K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TWIndex {
    pub h_class: usize,
    pub l_class: usize,
    pub g: Elem,
    pub k: SubgroupId,
}

fn validate_tuple(group: &FiniteGroup, h_class: usize, l_class: usize, g: Elem, k: SubgroupId) -> Result<()> {
    let n = group.subgroup_classes().len();
    if h_class >= n || l_class >= n || g >= group.order() || k >= group.subgroups().len() {
        return Err(Error::InvalidTuple("index out of range".into()));
    }
    let (h, l) = (group.class_rep(h_class), group.class_rep(l_class));
    let gl = group.conjugate_subgroup(g, l);
    let ks = group.subgroup(k);
    if !ks.is_subgroup_of(group.subgroup(h)) || !ks.is_subgroup_of(group.subgroup(gl)) {
        return Err(Error::InvalidTuple(format!("K is not contained in H ∩ gLg⁻¹ for (H={h}, L={l}, g={g}, K={k})")));
    }
    Ok(())
}

/// Canonical representative of the class of `(H, L, g, K)`.
pub fn canonical_tuple(group: &FiniteGroup, h_class: usize, l_class: usize, g: Elem, k: SubgroupId) -> Result<TWIndex> {
    validate_tuple(group, h_class, l_class, g, k)?;
    Ok(canonical_unchecked(group, h_class, l_class, g, k, None))
}

/// Least `(h x g l, hKh⁻¹)`; `x` ranges over the subgroup `twist` when given.
pub(crate) fn canonical_unchecked(
    group: &FiniteGroup,
    h_class: usize,
    l_class: usize,
    g: Elem,
    k: SubgroupId,
    twist: Option<SubgroupId>,
) -> TWIndex {
    let hs = &group.subgroup(group.class_rep(h_class)).elements;
    let ls = &group.subgroup(group.class_rep(l_class)).elements;
    let xs: &[Elem] = match twist {
        Some(c) => &group.subgroup(c).elements,
        None => &[0],
    };
    let mut best = (g, k);
    for &h in hs {
        let kh = group.conjugate_subgroup(h, k);
        for &x in xs {
            let hxg = group.mul(group.mul(h, x), g);
            for &l in ls {
                let cand = (group.mul(hxg, l), kh);
                if cand < best {
                    best = cand;
                }
            }
        }
    }
    TWIndex { h_class, l_class, g: best.0, k: best.1 }
}

/// All tuple classes, sorted.
pub fn tw_basis(group: &FiniteGroup) -> Vec<TWIndex> {
    let n = group.subgroup_classes().len();
    let mut out = BTreeSet::new();
    for hc in 0..n {
        for lc in 0..n {
            let (h, l) = (group.class_rep(hc), group.class_rep(lc));
            for g in group.double_cosets(h, l) {
                let meet = group.intersection(h, group.conjugate_subgroup(g, l));
                for k in group.subgroups_of(meet) {
                    out.insert(canonical_unchecked(group, hc, lc, g, k.id, None));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn check_class_omega(group: &FiniteGroup, omega: &Omega) -> Result<()> {
    let ok = omega.components.len() == group.subgroup_classes().len()
        && omega.components.iter().enumerate().all(|(c, &h)| group.class_rep(c) == h);
    if ok {
        Ok(())
    } else {
        Err(Error::Mismatch("Ω must have one component per subgroup class".into()))
    }
}

/// The span `G/K → G/H × G/L`, `K ↦ (H, gL)`.
pub fn span_of_tuple(omega: &Omega, t: &TWIndex) -> Result<SpanClass> {
    let group = omega.set.group();
    check_class_omega(group, omega)?;
    validate_tuple(group, t.h_class, t.l_class, t.g, t.k)?;
    let tgt = omega.offsets[t.h_class];
    let src = omega.coset_point(t.l_class, t.g);
    Ok(canonical_from_point(&omega.set, &omega.set, t.k, tgt, src))
}

/// Inverse of [`span_of_tuple`].
pub fn tuple_of_span(omega: &Omega, s: &SpanClass) -> Result<TWIndex> {
    let group = omega.set.group();
    check_class_omega(group, omega)?;
    let set = &omega.set;
    if s.tgt_point >= set.size() || s.src_point >= set.size() || s.mid_class >= group.subgroup_classes().len() {
        return Err(Error::InvalidTuple("span class out of range".into()));
    }
    let (hc, lc) = (omega.component_of(s.tgt_point), omega.component_of(s.src_point));
    let a = set.transporter(omega.offsets[hc], s.tgt_point).expect("same orbit");
    let ai = group.inv(a);
    let k = group.conjugate_subgroup(ai, group.class_rep(s.mid_class));
    let x = set.act(ai, s.src_point);
    let g = set.transporter(omega.offsets[lc], x).expect("same orbit");
    canonical_tuple(group, hc, lc, g, k)
}

/// Finitely supported integer combination of basis indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, i64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(i, 1);
        e
    }

    pub fn add_term(&mut self, i: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (i, c) in self.terms() {
            out.add_term(i, c * k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }
}

/// Sparse structure constants `e_i e_j = Σ_k c_ijk e_k` with an identity.
#[derive(Debug, Clone)]
pub struct Table {
    rank: usize,
    products: Vec<Vec<(usize, i64)>>,
    identity: AlgebraElement,
}

impl Table {
    pub(crate) fn new(rank: usize, products: Vec<Vec<(usize, i64)>>, identity: AlgebraElement) -> Self {
        debug_assert_eq!(products.len(), rank * rank);
        Table { rank, products, identity }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.products[i * self.rank + j]
    }

    pub fn product_element(&self, i: usize, j: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for &(k, c) in self.product(i, j) {
            e.add_term(k, c);
        }
        e
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                for &(k, c) in self.product(i, j) {
                    out.add_term(k, a * b * c);
                }
            }
        }
        out
    }

    pub fn identity(&self) -> &AlgebraElement {
        &self.identity
    }

    /// All `(i, j, k, c)` with `c ≠ 0`, in order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in 0..self.rank {
                out.extend(self.product(i, j).iter().map(|&(k, c)| (i, j, k, c)));
            }
        }
        out
    }

    /// Basis triples `(i, j, k)` with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.rank;
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in 0..n {
                    let ij = self.product_element(i, j);
                    for k in 0..n {
                        let left = self.mul(&ij, &AlgebraElement::basis(k));
                        let right = self.mul(&AlgebraElement::basis(i), &self.product_element(j, k));
                        if left != right {
                            bad.push((i, j, k));
                        }
                    }
                }
                bad
            })
            .collect()
    }

    /// Whether the stored identity is a two-sided unit on every basis element.
    pub fn identity_holds(&self) -> bool {
        (0..self.rank).all(|i| {
            let e = AlgebraElement::basis(i);
            self.mul(&self.identity, &e) == e && self.mul(&e, &self.identity) == e
        })
    }
}

/// Structure constants of `End(X)` on a list of span classes closed under
/// composition.
pub(crate) fn span_table(set: &Arc<GSet>, spans: &[SpanClass]) -> Vec<Vec<(usize, i64)>> {
    let n = spans.len();
    let index: HashMap<SpanClass, usize> = spans.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let middles: Vec<_> = spans.iter().map(|s| span_of_class(set, set, s)).collect();
    let src_orbit: Vec<usize> = spans.iter().map(|s| set.orbit_of(s.src_point)).collect();
    let tgt_orbit: Vec<usize> = spans.iter().map(|s| set.orbit_of(s.tgt_point)).collect();
    (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            if src_orbit[i] != tgt_orbit[j] {
                return Vec::new();
            }
            let (_, a2, b2) = &middles[i];
            let (_, a1, b1) = &middles[j];
            let e = compose_materialized(set, set, (a1, b1), (a2, b2));
            e.terms().map(|(c, &k)| (index[c], k)).collect()
        })
        .collect()
}

/// The Mackey algebra of a group with its tuple basis.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub group: Arc<FiniteGroup>,
    pub omega: Omega,
    pub basis: Vec<TWIndex>,
    /// `spans[i]` is the span class of `basis[i]`.
    pub spans: Vec<SpanClass>,
    /// Basis index of the identity summand of each subgroup class.
    pub idempotents: Vec<usize>,
    pub table: Table,
}

impl AlgebraData {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, t: &TWIndex) -> Option<usize> {
        self.basis.binary_search(t).ok()
    }

    pub fn index_of_span(&self, s: &SpanClass) -> Option<usize> {
        tuple_of_span(&self.omega, s).ok().and_then(|t| self.index_of(&t))
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.table.mul(x, y)
    }

    pub fn identity(&self) -> &AlgebraElement {
        self.table.identity()
    }

    /// Basis index of the canonical form of `(H, L, g, K)`.
    pub fn index_of_tuple(&self, h_class: usize, l_class: usize, g: Elem, k: SubgroupId) -> Result<usize> {
        let t = canonical_tuple(&self.group, h_class, l_class, g, k)?;
        Ok(self.index_of(&t).expect("canonical tuples are basis elements"))
    }

    /// Index of the leg-swapped basis element.
    pub fn transpose_index(&self, i: usize) -> usize {
        let s = &self.spans[i];
        let rep = self.group.class_rep(s.mid_class);
        let t = canonical_from_point(&self.omega.set, &self.omega.set, rep, s.src_point, s.tgt_point);
        self.index_of_span(&t).expect("transposed span is a basis element")
    }

    pub fn transpose(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, c) in x.terms() {
            out.add_term(self.transpose_index(i), c);
        }
        out
    }

    /// `c_{g,H}` on the component of the subgroup class `h_class`.
    pub fn conjugation_index(&self, h_class: usize, c: Elem) -> Result<usize> {
        let h = self.group.class_rep(h_class);
        if !self.group.subgroup(self.group.normalizer(h)).contains(c) {
            return Err(Error::NotCentralizing { elem: c, class: h_class });
        }
        self.index_of_tuple(h_class, h_class, c, h)
    }

    /// Whether the basis element is `c_{g,H} r^L_{H^g}` (restriction type).
    pub fn is_restriction(&self, t: &TWIndex) -> bool {
        t.k == self.group.class_rep(t.h_class)
    }

    /// Whether the basis element is `t^H_K c_{g,L}` with `K = gLg⁻¹`.
    pub fn is_transfer(&self, t: &TWIndex) -> bool {
        t.k == self.group.conjugate_subgroup(t.g, self.group.class_rep(t.l_class))
    }

    /// Pairs `(i, j)` of a restriction-type and a transfer-type basis element
    /// meeting in a common component.
    pub fn restriction_transfer_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.basis.iter().enumerate() {
            if !self.is_restriction(r) {
                continue;
            }
            for (j, t) in self.basis.iter().enumerate() {
                if self.is_transfer(t) && r.l_class == t.h_class {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn build_algebra(group: &Arc<FiniteGroup>) -> AlgebraData {
    let omega = Omega::new(group);
    let basis = tw_basis(group);
    let spans: Vec<SpanClass> =
        basis.iter().map(|t| span_of_tuple(&omega, t).expect("basis tuples are valid")).collect();
    let products = span_table(&omega.set, &spans);
    let idempotents: Vec<usize> = (0..group.subgroup_classes().len())
        .map(|c| {
            let t = canonical_unchecked(group, c, c, 0, group.class_rep(c), None);
            basis.binary_search(&t).expect("identity tuple is a basis element")
        })
        .collect();
    let mut identity = AlgebraElement::zero();
    for &i in &idempotents {
        identity.add_term(i, 1);
    }
    let table = Table::new(basis.len(), products, identity);
    AlgebraData { group: group.clone(), omega, basis, spans, idempotents, table }
}

/// `r · t` by the double coset formula, for `r = c_{g1} r^H_{A^{g1}}` and
/// `t = t^H_{L'} c_{g2}` with `L' = g2 L g2⁻¹`:
/// `Σ_{x ∈ A'\H/L'} (A, L, g1 x g2, A ∩ (g1xg2) L (g1xg2)⁻¹)` with
/// `A' = g1⁻¹ A g1`.
pub fn mackey_formula_product(alg: &AlgebraData, r: &TWIndex, t: &TWIndex) -> Result<AlgebraElement> {
    let group = &alg.group;
    if !alg.is_restriction(r) || !alg.is_transfer(t) {
        return Err(Error::InvalidTuple("expected a restriction and a transfer generator".into()));
    }
    if r.l_class != t.h_class {
        return Err(Error::Mismatch("generators meet in different components".into()));
    }
    let a = group.class_rep(r.h_class);
    let h = group.class_rep(r.l_class);
    let l = group.class_rep(t.l_class);
    let a_prime = group.conjugate_subgroup(group.inv(r.g), a);
    let l_prime = group.conjugate_subgroup(t.g, l);
    let mut out = AlgebraElement::zero();
    for x in group.double_cosets_in(&group.subgroup(h).elements, a_prime, l_prime) {
        let g = group.mul(group.mul(r.g, x), t.g);
        let k = group.intersection(a, group.conjugate_subgroup(g, l));
        out.add_term(alg.index_of_tuple(r.h_class, t.l_class, g, k)?, 1);
    }
    Ok(out)
}

/// Compares the algebra over class representatives with the corner of the
/// algebra over all subgroups cut out by the representative components.
/// Returns `(corner rank, full rank)` when the structure constants agree.
pub fn all_subgroups_corner(alg: &AlgebraData) -> Result<(usize, usize)> {
    let group = &alg.group;
    let full = Omega::all_subgroups(group);
    let spans = hom_basis(&full.set, &full.set);
    let index: HashMap<SpanClass, usize> = spans.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let products = span_table(&full.set, &spans);
    let embed_point = |p: usize| {
        let c = alg.omega.component_of(p);
        let g = alg.omega.set.transporter(alg.omega.offsets[c], p).expect("same orbit");
        full.coset_point(alg.omega.components[c], g)
    };
    let embedded: Vec<usize> = alg
        .spans
        .iter()
        .map(|s| {
            let rep = group.class_rep(s.mid_class);
            let t = canonical_from_point(&full.set, &full.set, rep, embed_point(s.tgt_point), embed_point(s.src_point));
            index[&t]
        })
        .collect();
    let reps: BTreeSet<usize> = alg.omega.components.iter().copied().collect();
    let corner = spans
        .iter()
        .filter(|s| {
            reps.contains(&full.components[full.component_of(s.src_point)])
                && reps.contains(&full.components[full.component_of(s.tgt_point)])
        })
        .count();
    let n = spans.len();
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            let mut want: Vec<(usize, i64)> =
                alg.table.product(i, j).iter().map(|&(k, c)| (embedded[k], c)).collect();
            want.sort_unstable();
            let mut got = products[embedded[i] * n + embedded[j]].clone();
            got.sort_unstable();
            if want != got {
                return Err(Error::Mismatch(format!("corner product ({i}, {j}) differs")));
            }
        }
    }
    Ok((corner, n))
}

/// Rank of `B(X × X)` as the sum over orbits of `X × X` of the number of
/// conjugacy classes of subgroups of the orbit stabilizer, conjugated inside
/// the stabilizer.
pub fn rank_by_orbit_stabilizers(x: &Arc<GSet>) -> Result<usize> {
    let group = x.group();
    let (square, _, _) = GSet::product(x, x)?;
    let mut total = 0;
    for orbit in square.orbits() {
        let t = group.subgroup(orbit.stabilizer);
        let mut seen = BTreeSet::new();
        for k in group.subgroups_of(orbit.stabilizer) {
            let class: BTreeSet<SubgroupId> =
                t.elements.iter().map(|&a| group.conjugate_subgroup(a, k.id)).collect();
            seen.insert(class.into_iter().next().expect("nonempty"));
        }
        total += seen.len();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    fn class_of_order(g: &FiniteGroup, order: usize) -> usize {
        g.subgroup_classes().iter().position(|c| g.subgroup(c.rep).order() == order).unwrap()
    }

    #[test]
    fn basis_counts() {
        assert_eq!(tw_basis(&group("C1")).len(), 1);
        assert_eq!(tw_basis(&group("C2")).len(), 6);
        for name in ["S3", "C4", "V4", "D4", "Q8"] {
            let g = group(name);
            let omega = Omega::new(&g);
            assert_eq!(tw_basis(&g).len(), hom_basis(&omega.set, &omega.set).len(), "{name}");
        }
    }

    #[test]
    fn rank_routes_agree() {
        for name in ["C1", "C2", "C3", "S3", "C4", "V4", "D4", "Q8"] {
            let g = group(name);
            let omega = Omega::new(&g);
            assert_eq!(rank_by_orbit_stabilizers(&omega.set).unwrap(), tw_basis(&g).len(), "{name}");
        }
    }

    #[test]
    fn tuple_span_round_trip() {
        for name in ["C1", "C2", "S3", "C6", "D4", "Q8"] {
            let g = group(name);
            let omega = Omega::new(&g);
            let basis = tw_basis(&g);
            let spans: BTreeSet<SpanClass> = basis.iter().map(|t| span_of_tuple(&omega, t).unwrap()).collect();
            assert_eq!(spans.len(), basis.len());
            for t in &basis {
                assert_eq!(tuple_of_span(&omega, &span_of_tuple(&omega, t).unwrap()).unwrap(), *t);
            }
            for s in hom_basis(&omega.set, &omega.set) {
                assert_eq!(span_of_tuple(&omega, &tuple_of_span(&omega, &s).unwrap()).unwrap(), s);
            }
        }
    }

    #[test]
    fn tuple_examples() {
        let c2 = group("C2");
        let omega = Omega::new(&c2);
        let top = 1;
        let diag = span_of_tuple(&omega, &TWIndex { h_class: top, l_class: top, g: 0, k: c2.whole_group() }).unwrap();
        assert_eq!(diag, SpanClass { mid_class: top, tgt_point: omega.offsets[top], src_point: omega.offsets[top] });
        let tr = span_of_tuple(&omega, &TWIndex { h_class: top, l_class: top, g: 0, k: 0 }).unwrap();
        assert_eq!(tr, SpanClass { mid_class: 0, tgt_point: omega.offsets[top], src_point: omega.offsets[top] });
        assert!(canonical_tuple(&c2, 0, 0, 0, c2.whole_group()).is_err());
    }

    #[test]
    fn c2_algebra() {
        let c2 = group("C2");
        let alg = build_algebra(&c2);
        assert_eq!(alg.rank(), 6);
        assert!(alg.table.identity_holds());
        let (bottom, top) = (0, 1);
        let sigma = 1;
        // t^{C2}_1 r^{C2}_1 is the (C2, C2, e, 1) element
        let t = alg.index_of_tuple(top, bottom, 0, 0).unwrap();
        let r = alg.index_of_tuple(bottom, top, 0, 0).unwrap();
        let tr = alg.table.product_element(t, r);
        assert_eq!(tr, AlgebraElement::basis(alg.index_of_tuple(top, top, 0, 0).unwrap()));
        // r^{C2}_1 t^{C2}_1 = c_{e,1} + c_{σ,1}
        let rt = alg.table.product_element(r, t);
        let mut want = AlgebraElement::basis(alg.index_of_tuple(bottom, bottom, 0, 0).unwrap());
        want.add_term(alg.index_of_tuple(bottom, bottom, sigma, 0).unwrap(), 1);
        assert_eq!(rt, want);
        assert_eq!(mackey_formula_product(&alg, &alg.basis[r], &alg.basis[t]).unwrap(), want);
    }

    #[test]
    fn trivial_group_algebra() {
        let alg = build_algebra(&group("C1"));
        assert_eq!(alg.rank(), 1);
        assert_eq!(alg.table.product_element(0, 0), AlgebraElement::basis(0));
        assert_eq!(*alg.identity(), AlgebraElement::basis(0));
    }

    #[test]
    fn mackey_formula_matches_composition() {
        for name in ["C2", "C3", "S3", "C4", "V4", "D4", "Q8"] {
            let alg = build_algebra(&group(name));
            let pairs = alg.restriction_transfer_pairs();
            assert!(!pairs.is_empty());
            for (i, j) in pairs {
                let oracle = mackey_formula_product(&alg, &alg.basis[i], &alg.basis[j]).unwrap();
                assert_eq!(alg.table.product_element(i, j), oracle, "{name} ({i}, {j})");
            }
        }
    }

    #[test]
    fn s3_restriction_transfer_at_c2() {
        let s3 = group("S3");
        let alg = build_algebra(&s3);
        let (c2, top) = (class_of_order(&s3, 2), class_of_order(&s3, 6));
        let r = alg.index_of_tuple(c2, top, 0, s3.class_rep(c2)).unwrap();
        let t = alg.index_of_tuple(top, c2, 0, s3.class_rep(c2)).unwrap();
        let prod = alg.table.product_element(r, t);
        assert_eq!(prod.terms().count(), 2);
        assert!(prod.coefficient(alg.idempotents[c2]) == 1);
        assert_eq!(prod, mackey_formula_product(&alg, &alg.basis[r], &alg.basis[t]).unwrap());
        assert_eq!(s3.double_cosets(s3.class_rep(c2), s3.class_rep(c2)).len(), 2);
    }

    #[test]
    fn formula_rejects_bad_arguments() {
        let alg = build_algebra(&group("C2"));
        let r = alg.basis[alg.index_of_tuple(0, 1, 0, 0).unwrap()];
        let t = alg.basis[alg.index_of_tuple(1, 0, 0, 0).unwrap()];
        assert!(mackey_formula_product(&alg, &t, &t).is_err());
        assert!(mackey_formula_product(&alg, &r, &r).is_err());
    }

    #[test]
    fn associativity_and_transposition() {
        for name in ["C2", "S3", "V4", "C4"] {
            let alg = build_algebra(&group(name));
            assert!(alg.table.associativity_failures().is_empty(), "{name}");
            assert!(alg.table.identity_holds());
            let n = alg.rank();
            for i in 0..n {
                assert_eq!(alg.transpose_index(alg.transpose_index(i)), i);
                for j in 0..n {
                    let lhs = alg.transpose(&alg.table.product_element(i, j));
                    let rhs = alg.table.product_element(alg.transpose_index(j), alg.transpose_index(i));
                    assert_eq!(lhs, rhs);
                }
            }
            assert_eq!(alg.transpose(alg.identity()), *alg.identity());
        }
    }

    #[test]
    fn all_subgroups_corner_agrees() {
        for name in ["C2", "S3", "V4", "C6"] {
            let alg = build_algebra(&group(name));
            let (corner, full) = all_subgroups_corner(&alg).unwrap();
            assert_eq!(corner, alg.rank());
            assert!(full >= corner);
        }
    }
}
