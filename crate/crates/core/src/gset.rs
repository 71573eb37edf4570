//! Finite G-sets, equivariant maps, the conjugation G-set and the star action.

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, SubgroupId};

/// One orbit of a [`GSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted point ids.
    pub points: Vec<usize>,
    /// Least point of the orbit.
    pub base: usize,
    /// Stabilizer of `base`.
    pub stabilizer: SubgroupId,
    /// Conjugacy class of the stabilizer.
    pub class_id: usize,
}

/// A finite set with a left action of a finite group.
#[derive(Clone)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    // action[g * size + x] = g·x
    action: Vec<u32>,
    orbits: Vec<Orbit>,
    orbit_of: Vec<usize>,
    conjugation: bool,
}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSet")
            .field("size", &self.size)
            .field("orbits", &self.orbits)
            .finish()
    }
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.size == other.size && self.action == other.action
    }
}

impl Eq for GSet {}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.order() == b.order() && (0..a.order()).all(|x| (0..a.order()).all(|y| a.mul(x, y) == b.mul(x, y))))
}

impl GSet {
    /// Builds a G-set from an action table `action[g][x]`, checking that it is a
    /// homomorphism into the permutations of `0..size`.
    pub fn from_action(group: Arc<FiniteGroup>, size: usize, action: &[Vec<usize>]) -> Result<Self> {
        let n = group.order();
        if action.len() != n {
            return Err(Error::InvalidGSet(format!("expected {n} permutations")));
        }
        let mut flat = Vec::with_capacity(n * size);
        for perm in action {
            if perm.len() != size {
                return Err(Error::InvalidGSet("permutation of wrong length".into()));
            }
            let mut seen = BitSet::new(size);
            for &x in perm {
                if x >= size || seen.contains(x) {
                    return Err(Error::InvalidGSet("not a permutation".into()));
                }
                seen.insert(x);
            }
            flat.extend(perm.iter().map(|&x| x as u32));
        }
        let act = |g: usize, x: usize| flat[g * size + x] as usize;
        if (0..size).any(|x| act(0, x) != x) {
            return Err(Error::InvalidGSet("identity does not act trivially".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if (0..size).any(|x| act(ab, x) != act(a, act(b, x))) {
                    return Err(Error::InvalidGSet("action is not a homomorphism".into()));
                }
            }
        }
        Ok(Self::from_flat(group, size, flat))
    }

    pub(crate) fn from_flat(group: Arc<FiniteGroup>, size: usize, action: Vec<u32>) -> Self {
        let n = group.order();
        let mut orbit_of = vec![usize::MAX; size];
        let mut orbits = Vec::new();
        for x in 0..size {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let oid = orbits.len();
            let mut points = Vec::new();
            let mut stab = Vec::new();
            for g in 0..n {
                let y = action[g * size + x] as usize;
                if y == x {
                    stab.push(g);
                }
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = oid;
                    points.push(y);
                }
            }
            points.sort_unstable();
            let stabilizer = group.find_subgroup(&stab).expect("stabilizer is a subgroup");
            let class_id = group.subgroup(stabilizer).class_id;
            orbits.push(Orbit { points, base: x, stabilizer, class_id });
        }
        GSet { group, size, action, orbits, orbit_of, conjugation: false }
    }

    /// The empty G-set.
    pub fn empty(group: &Arc<FiniteGroup>) -> Self {
        Self::from_flat(group.clone(), 0, Vec::new())
    }

    /// The one-point G-set `G/G`.
    pub fn point(group: &Arc<FiniteGroup>) -> Self {
        Self::from_flat(group.clone(), 1, vec![0; group.order()])
    }

    /// The coset space `G/H` under left translation. Points are ordered by
    /// least coset member, so point 0 is the coset `H` itself.
    pub fn transitive(group: &Arc<FiniteGroup>, h: SubgroupId) -> Self {
        let n = group.order();
        let hs = &group.subgroup(h).elements;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &x in hs {
                coset_of[group.mul(g, x)] = reps.len();
            }
            reps.push(g);
        }
        let size = reps.len();
        let mut action = vec![0u32; n * size];
        for g in 0..n {
            for (p, &r) in reps.iter().enumerate() {
                action[g * size + p] = coset_of[group.mul(g, r)] as u32;
            }
        }
        Self::from_flat(group.clone(), size, action)
    }

    /// The conjugation G-set `G^c`: the set `G` with `g·x = g x g⁻¹`.
    pub fn conjugation(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let mut action = vec![0u32; n * n];
        for g in 0..n {
            for x in 0..n {
                action[g * n + x] = group.conj(g, x) as u32;
            }
        }
        let mut set = Self::from_flat(group.clone(), n, action);
        set.conjugation = true;
        set
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, g: Elem, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Whether this is the conjugation G-set.
    pub fn is_conjugation(&self) -> bool {
        self.conjugation
            || (self.size == self.group.order()
                && self.group.elements().all(|g| {
                    self.group.elements().all(|x| self.act(g, x) == self.group.conj(g, x))
                }))
    }

    /// Stabilizer of a point.
    pub fn stabilizer(&self, x: usize) -> SubgroupId {
        let stab: Vec<Elem> = self.group.elements().filter(|&g| self.act(g, x) == x).collect();
        self.group.find_subgroup(&stab).expect("stabilizer is a subgroup")
    }

    /// Points fixed by every element of `s`.
    pub fn fixed_points(&self, s: SubgroupId) -> Vec<usize> {
        let elems = &self.group.subgroup(s).elements;
        (0..self.size).filter(|&x| elems.iter().all(|&g| self.act(g, x) == x)).collect()
    }

    /// Some `g` with `g·x = y`.
    pub fn transporter(&self, x: usize, y: usize) -> Option<Elem> {
        self.group.elements().find(|&g| self.act(g, x) == y)
    }

    /// For every point `p` of the orbit of `x`, some `g` with `g·x = p`.
    fn transporters_from(&self, x: usize) -> Vec<(usize, Elem)> {
        let mut out = Vec::new();
        let mut seen = BitSet::new(self.size);
        for g in self.group.elements() {
            let y = self.act(g, x);
            if !seen.contains(y) {
                seen.insert(y);
                out.push((y, g));
            }
        }
        out
    }

    /// Disjoint union: points of `x` first, then points of `y`.
    pub fn disjoint_union(x: &Arc<GSet>, y: &Arc<GSet>) -> Result<(Arc<GSet>, GMap, GMap)> {
        if !same_group(&x.group, &y.group) {
            return Err(Error::GroupMismatch);
        }
        let n = x.group.order();
        let size = x.size + y.size;
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            action.extend_from_slice(&x.action[g * x.size..(g + 1) * x.size]);
            action.extend(y.action[g * y.size..(g + 1) * y.size].iter().map(|&p| p + x.size as u32));
        }
        let u = Arc::new(Self::from_flat(x.group.clone(), size, action));
        let ix = GMap::new_unchecked(x.clone(), u.clone(), (0..x.size).collect());
        let iy = GMap::new_unchecked(y.clone(), u.clone(), (x.size..size).collect());
        Ok((u, ix, iy))
    }

    /// Disjoint union of many G-sets.
    pub fn sum(group: &Arc<FiniteGroup>, parts: &[Arc<GSet>]) -> Result<Arc<GSet>> {
        let mut acc = Arc::new(GSet::empty(group));
        for p in parts {
            acc = GSet::disjoint_union(&acc, p)?.0;
        }
        Ok(acc)
    }

    /// Cartesian product with the diagonal action; points `(x, y)` in
    /// lexicographic order.
    pub fn product(x: &Arc<GSet>, y: &Arc<GSet>) -> Result<(Arc<GSet>, GMap, GMap)> {
        let pt = Arc::new(GSet::point(&x.group));
        let a = GMap::new_unchecked(x.clone(), pt.clone(), vec![0; x.size]);
        let b = GMap::new_unchecked(y.clone(), pt, vec![0; y.size]);
        pullback(&a, &b)
    }
}

/// The G-set `Ω = ⊔ G/H` over a chosen list of subgroups, with its
/// component bookkeeping.
#[derive(Debug, Clone)]
pub struct Omega {
    pub set: Arc<GSet>,
    /// Subgroup of each component, in order.
    pub components: Vec<SubgroupId>,
    /// First point of each component.
    pub offsets: Vec<usize>,
}

impl Omega {
    /// One coset space per conjugacy class of subgroups.
    pub fn new(group: &Arc<FiniteGroup>) -> Self {
        let comps = group.subgroup_classes().iter().map(|c| c.rep).collect();
        Self::over(group, comps)
    }

    /// One coset space per subgroup.
    pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Self {
        Self::over(group, (0..group.subgroups().len()).collect())
    }

    pub fn over(group: &Arc<FiniteGroup>, components: Vec<SubgroupId>) -> Self {
        let parts: Vec<Arc<GSet>> =
            components.iter().map(|&h| Arc::new(GSet::transitive(group, h))).collect();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.size();
        }
        let set = GSet::sum(group, &parts).expect("same group");
        Omega { set, components, offsets }
    }

    /// Component containing a point.
    pub fn component_of(&self, x: usize) -> usize {
        self.set.orbit_of(x)
    }

    /// The point `gH` in component `c` (`H` its subgroup).
    pub fn coset_point(&self, c: usize, g: Elem) -> usize {
        self.set.act(g, self.offsets[c])
    }
}

/// An equivariant map between G-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMap {
    pub source: Arc<GSet>,
    pub target: Arc<GSet>,
    pub images: Vec<usize>,
}

impl GMap {
    /// Checks equivariance exhaustively.
    pub fn new(source: Arc<GSet>, target: Arc<GSet>, images: Vec<usize>) -> Result<Self> {
        if !same_group(&source.group, &target.group) {
            return Err(Error::GroupMismatch);
        }
        if images.len() != source.size || images.iter().any(|&y| y >= target.size) {
            return Err(Error::NotEquivariant("image list does not fit source and target".into()));
        }
        for g in source.group.elements() {
            for z in 0..source.size {
                if images[source.act(g, z)] != target.act(g, images[z]) {
                    return Err(Error::NotEquivariant(format!("fails at element {g}, point {z}")));
                }
            }
        }
        Ok(GMap { source, target, images })
    }

    pub(crate) fn new_unchecked(source: Arc<GSet>, target: Arc<GSet>, images: Vec<usize>) -> Self {
        GMap { source, target, images }
    }

    pub fn identity(x: &Arc<GSet>) -> Self {
        GMap::new_unchecked(x.clone(), x.clone(), (0..x.size).collect())
    }

    #[inline]
    pub fn apply(&self, z: usize) -> usize {
        self.images[z]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &GMap) -> Result<GMap> {
        if *other.target != *self.source {
            return Err(Error::Mismatch("map composition over different G-sets".into()));
        }
        Ok(GMap::new_unchecked(
            other.source.clone(),
            self.target.clone(),
            other.images.iter().map(|&z| self.images[z]).collect(),
        ))
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size != self.target.size {
            return false;
        }
        let mut seen = BitSet::new(self.target.size);
        self.images.iter().all(|&y| {
            let fresh = !seen.contains(y);
            seen.insert(y);
            fresh
        })
    }

    pub fn is_equivariant(&self) -> bool {
        GMap::new(self.source.clone(), self.target.clone(), self.images.clone()).is_ok()
    }
}

/// The star action `(u * f)(z) = u(z)·f(z)` for `u: Z → G^c` and `f: Z → Y`.
pub fn star(u: &GMap, f: &GMap) -> Result<GMap> {
    if !u.target.is_conjugation() {
        return Err(Error::Mismatch("twist must take values in the conjugation G-set".into()));
    }
    if *u.source != *f.source {
        return Err(Error::Mismatch("twist and map have different sources".into()));
    }
    let y = &f.target;
    Ok(GMap::new_unchecked(
        f.source.clone(),
        y.clone(),
        (0..f.source.size).map(|z| y.act(u.images[z], f.images[z])).collect(),
    ))
}

/// The group law on twists: `(u * v)(z) = u(z) v(z)`.
pub fn twist_mul(u: &GMap, v: &GMap) -> Result<GMap> {
    if !u.target.is_conjugation() || !v.target.is_conjugation() {
        return Err(Error::Mismatch("twists must take values in the conjugation G-set".into()));
    }
    if *u.source != *v.source {
        return Err(Error::Mismatch("twists have different sources".into()));
    }
    let g = &u.source.group;
    Ok(GMap::new_unchecked(
        u.source.clone(),
        u.target.clone(),
        u.images.iter().zip(&v.images).map(|(&a, &b)| g.mul(a, b)).collect(),
    ))
}

/// The pointwise inverse `ū(z) = u(z)⁻¹` of a twist.
pub fn twist_inverse(u: &GMap) -> GMap {
    let g = &u.source.group;
    GMap::new_unchecked(u.source.clone(), u.target.clone(), u.images.iter().map(|&c| g.inv(c)).collect())
}

/// The constant twist at the identity element.
pub fn trivial_twist(z: &Arc<GSet>, gc: &Arc<GSet>) -> GMap {
    GMap::new_unchecked(z.clone(), gc.clone(), vec![0; z.size])
}

/// All equivariant maps `Z → X`, chosen orbit by orbit among fixed points of
/// the orbit's base stabilizer. The order is lexicographic in the image of
/// the orbit bases.
pub fn maps_between(z: &Arc<GSet>, x: &Arc<GSet>) -> Vec<GMap> {
    let per_orbit: Vec<_> = z
        .orbits
        .iter()
        .map(|o| (z.transporters_from(o.base), x.fixed_points(o.stabilizer)))
        .collect();
    if per_orbit.iter().any(|(_, fixed)| fixed.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_orbit.len()];
    loop {
        let mut images = vec![0usize; z.size];
        for ((trans, fixed), &c) in per_orbit.iter().zip(&choice) {
            for &(p, g) in trans {
                images[p] = x.act(g, fixed[c]);
            }
        }
        out.push(GMap::new_unchecked(z.clone(), x.clone(), images));
        // odometer, last orbit fastest
        let mut k = per_orbit.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < per_orbit[k].1.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// The pullback `{(x, y) : a(x) = b(y)}` with the diagonal action and the two
/// coordinate projections. Points are in lexicographic order.
pub fn pullback(a: &GMap, b: &GMap) -> Result<(Arc<GSet>, GMap, GMap)> {
    if *a.target != *b.target {
        return Err(Error::Mismatch("pullback legs have different targets".into()));
    }
    let (xs, ys) = (&a.source, &b.source);
    let mut id = vec![u32::MAX; xs.size * ys.size];
    let mut pairs = Vec::new();
    for x in 0..xs.size {
        for y in 0..ys.size {
            if a.images[x] == b.images[y] {
                id[x * ys.size + y] = pairs.len() as u32;
                pairs.push((x, y));
            }
        }
    }
    let group = xs.group.clone();
    let size = pairs.len();
    let mut action = vec![0u32; group.order() * size];
    for g in group.elements() {
        for (k, &(x, y)) in pairs.iter().enumerate() {
            action[g * size + k] = id[xs.act(g, x) * ys.size + ys.act(g, y)];
        }
    }
    let p_set = Arc::new(GSet::from_flat(group, size, action));
    let p = GMap::new_unchecked(p_set.clone(), xs.clone(), pairs.iter().map(|&(x, _)| x).collect());
    let q = GMap::new_unchecked(p_set.clone(), ys.clone(), pairs.iter().map(|&(_, y)| y).collect());
    Ok((p_set, p, q))
}

/// Table of marks: entry `(i, j)` is the number of points of `G/K_j` fixed
/// by `K_i`, over the subgroup class representatives.
pub fn table_of_marks(group: &Arc<FiniteGroup>) -> Vec<Vec<usize>> {
    let classes = group.subgroup_classes();
    let sets: Vec<GSet> = classes.iter().map(|c| GSet::transitive(group, c.rep)).collect();
    classes.iter().map(|h| sets.iter().map(|x| x.fixed_points(h.rep).len()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin(name).unwrap())
    }

    fn raw_maps(z: &Arc<GSet>, x: &Arc<GSet>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = x.size().pow(z.size() as u32);
        for mut code in 0..total {
            let mut images = Vec::with_capacity(z.size());
            for _ in 0..z.size() {
                images.push(code % x.size());
                code /= x.size();
            }
            if GMap::new(z.clone(), x.clone(), images.clone()).is_ok() {
                out.push(images);
            }
        }
        if z.size() == 0 {
            out = vec![vec![]];
        }
        out.sort();
        out
    }

    #[test]
    fn transitive_examples() {
        let s3 = group("S3");
        assert_eq!(GSet::transitive(&s3, s3.whole_group()).size(), 1);
        let regular = GSet::transitive(&s3, 0);
        assert_eq!(regular.size(), 6);
        assert_eq!(regular.orbits().len(), 1);
        assert_eq!(regular.orbits()[0].stabilizer, 0);
        let c2 = s3.class_rep(1);
        let x = GSet::transitive(&s3, c2);
        assert_eq!(x.size(), 3);
        assert_eq!(x.stabilizer(0), c2);
    }

    #[test]
    fn union_examples() {
        let c2 = group("C2");
        let free = Arc::new(GSet::transitive(&c2, 0));
        let pt = Arc::new(GSet::point(&c2));
        let empty = Arc::new(GSet::empty(&c2));
        let (u, _, _) = GSet::disjoint_union(&free, &empty).unwrap();
        assert_eq!(*u, *free);
        let (u, ix, iy) = GSet::disjoint_union(&free, &pt).unwrap();
        assert_eq!((u.size(), u.orbits().len()), (3, 2));
        assert!(ix.is_equivariant() && iy.is_equivariant());
        assert_eq!(Omega::new(&c2).set.size(), 3);
    }

    #[test]
    fn pullback_examples() {
        let c2 = group("C2");
        let free = Arc::new(GSet::transitive(&c2, 0));
        let (p, _, _) = GSet::product(&free, &free).unwrap();
        assert_eq!((p.size(), p.orbits().len()), (4, 2));

        let id = GMap::identity(&free);
        let (p, pr, _) = pullback(&id, &id).unwrap();
        assert_eq!(p.size(), 2);
        assert!(pr.is_bijective());

        let s3 = group("S3");
        let x = Arc::new(GSet::transitive(&s3, s3.class_rep(1)));
        let y = Arc::new(GSet::transitive(&s3, s3.class_rep(2)));
        let (p, a, b) = GSet::product(&x, &y).unwrap();
        assert_eq!(p.size(), 6);
        assert!(a.is_equivariant() && b.is_equivariant());
        // G/C2 x G/C3 is a single free orbit
        assert_eq!(p.orbits().len(), 1);
        let (p, _, _) = GSet::product(&x, &x).unwrap();
        let mut stabs: Vec<usize> =
            p.orbits().iter().map(|o| s3.subgroup(o.stabilizer).order()).collect();
        stabs.sort_unstable();
        assert_eq!((p.size(), stabs), (9, vec![1, 2]));
    }

    #[test]
    fn star_examples() {
        let c2 = group("C2");
        let z = Arc::new(GSet::transitive(&c2, 0));
        let gc = Arc::new(GSet::conjugation(&c2));
        let id = GMap::identity(&z);
        let one = trivial_twist(&z, &gc);
        assert_eq!(star(&one, &id).unwrap(), id);
        let us = maps_between(&z, &gc);
        assert_eq!(us.len(), 2);
        let swap = star(&us[1], &id).unwrap();
        assert_eq!(swap.images, vec![1, 0]);
        assert!(swap.is_equivariant());
        let back = star(&twist_inverse(&us[1]), &swap).unwrap();
        assert_eq!(back, id);
        assert!(star(&id, &id).is_err());
    }

    #[test]
    fn star_is_compatible_with_composition() {
        for name in ["C2", "C3", "S3"] {
            let g = group(name);
            let gc = Arc::new(GSet::conjugation(&g));
            let sets: Vec<Arc<GSet>> =
                g.subgroup_classes().iter().map(|c| Arc::new(GSet::transitive(&g, c.rep))).collect();
            for z in &sets {
                for y in &sets {
                    for x in &sets {
                        for f in maps_between(z, y) {
                            for gm in maps_between(y, x) {
                                let gf = gm.after(&f).unwrap();
                                for u in maps_between(z, &gc) {
                                    for v in maps_between(y, &gc) {
                                        let lhs = star(&v, &gm).unwrap().after(&star(&u, &f).unwrap()).unwrap();
                                        let uv = twist_mul(&u, &v.after(&f).unwrap()).unwrap();
                                        assert_eq!(lhs, star(&uv, &gf).unwrap());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twists_form_a_group_acting_antihomomorphically() {
        let g = group("S3");
        let gc = Arc::new(GSet::conjugation(&g));
        for c in g.subgroup_classes() {
            let z = Arc::new(GSet::transitive(&g, c.rep));
            let id = GMap::identity(&z);
            let twists = maps_between(&z, &gc);
            let one = trivial_twist(&z, &gc);
            for u in &twists {
                assert_eq!(twist_mul(u, &twist_inverse(u)).unwrap(), one);
                assert!(star(u, &id).unwrap().is_bijective());
                for v in &twists {
                    let uv = twist_mul(u, v).unwrap();
                    assert!(uv.is_equivariant());
                    let lhs = star(&uv, &id).unwrap();
                    let rhs = star(v, &id).unwrap().after(&star(u, &id).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn maps_between_examples() {
        let s3 = group("S3");
        let pt = Arc::new(GSet::point(&s3));
        let x = Arc::new(GSet::transitive(&s3, s3.class_rep(1)));
        let (u, _, _) = GSet::disjoint_union(&x, &pt).unwrap();
        assert_eq!(maps_between(&pt, &u).len(), 1);
        let empty = Arc::new(GSet::empty(&s3));
        let m = maps_between(&empty, &x);
        assert_eq!(m.len(), 1);
        assert!(m[0].images.is_empty());
        let c2 = group("C2");
        let z = Arc::new(GSet::transitive(&c2, 0));
        assert_eq!(maps_between(&z, &Arc::new(GSet::conjugation(&c2))).len(), 2);
    }

    #[test]
    fn maps_between_matches_raw_search() {
        for name in ["C2", "C3", "S3"] {
            let g = group(name);
            let sets: Vec<Arc<GSet>> = g
                .subgroup_classes()
                .iter()
                .map(|c| Arc::new(GSet::transitive(&g, c.rep)))
                .filter(|s| s.size() <= 3)
                .collect();
            for z in &sets {
                for x in &sets {
                    let (zz, _, _) = GSet::disjoint_union(z, &Arc::new(GSet::point(&g))).unwrap();
                    for src in [z, &zz] {
                        let mut fast: Vec<Vec<usize>> =
                            maps_between(src, x).into_iter().map(|m| m.images).collect();
                        fast.sort();
                        assert_eq!(fast, raw_maps(src, x), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn from_action_validates() {
        let c2 = group("C2");
        assert!(GSet::from_action(c2.clone(), 2, &[vec![0, 1], vec![1, 0]]).is_ok());
        assert!(GSet::from_action(c2.clone(), 2, &[vec![1, 0], vec![1, 0]]).is_err());
        assert!(GSet::from_action(c2, 2, &[vec![0, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn gmap_rejects_non_equivariant() {
        let c2 = group("C2");
        let z = Arc::new(GSet::transitive(&c2, 0));
        let pt = Arc::new(GSet::point(&c2));
        assert!(GMap::new(pt, z, vec![0]).is_err());
    }

    #[test]
    fn marks_of_s3() {
        let g = Arc::new(FiniteGroup::builtin("S3").unwrap());
        let m = table_of_marks(&g);
        assert_eq!(m, vec![vec![6, 3, 2, 1], vec![0, 1, 0, 1], vec![0, 0, 2, 1], vec![0, 0, 0, 1]]);
    }
}
