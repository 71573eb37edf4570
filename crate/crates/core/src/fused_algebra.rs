//! The fused Mackey algebra as a quotient of the Mackey algebra.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{canonical_unchecked, AlgebraData, AlgebraElement, TWIndex, Table};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A tuple canonical for the coarser relation that also allows
/// `g ↦ x g`, `x ∈ C_G(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FusedTWIndex(pub TWIndex);

pub fn fuse_index(group: &FiniteGroup, t: &TWIndex) -> FusedTWIndex {
    FusedTWIndex(canonical_unchecked(group, t.h_class, t.l_class, t.g, t.k, Some(group.centralizer(t.k))))
}

#[derive(Debug, Clone)]
pub struct FusedAlgebraData {
    pub group: Arc<FiniteGroup>,
    pub basis: Vec<FusedTWIndex>,
    /// Fused index of each basis element of the unfused algebra.
    pub fused_of: Vec<usize>,
    /// Least unfused preimage of each fused basis element.
    pub representatives: Vec<usize>,
    pub table: Table,
}

impl FusedAlgebraData {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The projection collapsing basis elements with equal fused index.
    pub fn quotient_hom(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, c) in x.terms() {
            out.add_term(self.fused_of[i], c);
        }
        out
    }

    /// One difference `e_j − e_rep` per collapsed basis element.
    pub fn kernel_basis(&self) -> Vec<AlgebraElement> {
        self.fused_of
            .iter()
            .enumerate()
            .filter(|&(i, &f)| self.representatives[f] != i)
            .map(|(i, &f)| AlgebraElement::basis(i).sub(&AlgebraElement::basis(self.representatives[f])))
            .collect()
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.table.mul(x, y)
    }

    pub fn identity(&self) -> &AlgebraElement {
        self.table.identity()
    }
}

/// Pairs `(i, j)` of unfused basis elements whose product does not project
/// onto the product of the projections.
pub fn well_definedness_failures(alg: &AlgebraData, fused: &FusedAlgebraData) -> Vec<(usize, usize)> {
    let n = alg.rank();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = fused.quotient_hom(&alg.table.product_element(i, j));
            let rhs = fused.table.product_element(fused.fused_of[i], fused.fused_of[j]);
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Projects the structure constants of the Mackey algebra onto the fused
/// basis, checking that the projection is well defined.
pub fn build_fused(alg: &AlgebraData) -> Result<FusedAlgebraData> {
    let group = &alg.group;
    let fused: Vec<FusedTWIndex> = alg.basis.iter().map(|t| fuse_index(group, t)).collect();
    let basis: Vec<FusedTWIndex> = fused.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let fused_of: Vec<usize> = fused.iter().map(|f| basis.binary_search(f).expect("present")).collect();
    let mut representatives = vec![usize::MAX; basis.len()];
    for (i, &f) in fused_of.iter().enumerate().rev() {
        representatives[f] = i;
    }
    let m = basis.len();
    let mut products = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let mut e = AlgebraElement::zero();
            for &(k, c) in alg.table.product(representatives[a], representatives[b]) {
                e.add_term(fused_of[k], c);
            }
            products.push(e.terms().collect::<Vec<_>>());
        }
    }
    let mut identity = AlgebraElement::zero();
    for (i, c) in alg.identity().terms() {
        identity.add_term(fused_of[i], c);
    }
    let out = FusedAlgebraData {
        group: group.clone(),
        basis,
        fused_of,
        representatives,
        table: Table::new(m, products, identity),
    };
    let bad = well_definedness_failures(alg, &out);
    if let Some(&(i, j)) = bad.first() {
        return Err(Error::Mismatch(format!("fused product of ({i}, {j}) depends on the preimages")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::fused::{fuse_class, fused_hom};
    use crate::algebra::{span_of_tuple, tuple_of_span};
    use crate::span::hom_basis;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    #[test]
    fn c2_ranks() {
        let alg = build_algebra(&group("C2"));
        let f = build_fused(&alg).unwrap();
        assert_eq!(f.rank(), 5);
        assert_eq!(f.kernel_basis().len(), 1);
        let collapsed: Vec<&TWIndex> =
            f.kernel_basis()[0].terms().map(|(i, _)| &alg.basis[i]).collect();
        assert!(collapsed.iter().all(|t| t.h_class == 0 && t.l_class == 0 && t.k == 0));
        // c_{σ,1} and c_{e,1} share a fused index
        let e = alg.index_of_tuple(0, 0, 0, 0).unwrap();
        let s = alg.index_of_tuple(0, 0, 1, 0).unwrap();
        assert_eq!(f.fused_of[e], f.fused_of[s]);
    }

    #[test]
    fn trivial_group_is_unchanged() {
        let alg = build_algebra(&group("C1"));
        let f = build_fused(&alg).unwrap();
        assert_eq!(f.rank(), 1);
        assert!(f.kernel_basis().is_empty());
    }

    #[test]
    fn top_tuples_are_fixed() {
        for name in ["S3", "D4", "Q8"] {
            let g = group(name);
            let top = g.subgroup_classes().len() - 1;
            let t = TWIndex { h_class: top, l_class: top, g: 0, k: g.whole_group() };
            assert_eq!(fuse_index(&g, &t).0, t);
        }
    }

    #[test]
    fn quotient_is_a_ring_map() {
        for name in ["C2", "C3", "S3", "V4", "C4", "D4", "Q8"] {
            let alg = build_algebra(&group(name));
            let f = build_fused(&alg).unwrap();
            assert_eq!(f.quotient_hom(alg.identity()), *f.identity());
            assert_eq!(alg.rank(), f.rank() + f.kernel_basis().len());
            assert!(f.table.associativity_failures().is_empty());
            assert!(f.table.identity_holds());
            for k in f.kernel_basis() {
                assert!(f.quotient_hom(&k).is_zero());
            }
        }
    }

    #[test]
    fn fuse_index_matches_span_fusion() {
        for name in ["C2", "C4", "S3", "V4", "D4", "Q8", "C6"] {
            let g = group(name);
            let alg = build_algebra(&g);
            let set = &alg.omega.set;
            let hom = fused_hom(set, set);
            assert_eq!(build_fused(&alg).unwrap().rank(), hom.fused_rank(), "{name}");
            for s in hom_basis(set, set) {
                let via_tuple = fuse_index(&g, &tuple_of_span(&alg.omega, &s).unwrap());
                let via_span = fuse_class(set, set, &s);
                let back = fuse_index(&g, &tuple_of_span(&alg.omega, &via_span.0).unwrap());
                assert_eq!(via_tuple, back, "{name}");
                let rep = span_of_tuple(&alg.omega, &via_tuple.0).unwrap();
                assert_eq!(fuse_class(set, set, &rep), via_span);
            }
        }
    }
}
