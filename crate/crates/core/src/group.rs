//! Finite groups stored as full multiplication tables.
//!
//! Element ids run over `0..order` and id `0` is always the identity. Every
//! group carries its complete subgroup lattice, enumerated once at
//! construction: subgroups are grouped into conjugacy classes, classes are
//! sorted by `(order, lexicographic representative)` and that ordering is the
//! global subgroup indexing used by every other module.

use std::collections::{HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Element id inside a [`FiniteGroup`].
pub type Elem = usize;

/// Index of a subgroup in [`FiniteGroup::subgroups`].
pub type SubgroupId = usize;

/// Largest group accepted by default.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Largest permutation degree accepted.
pub const MAX_DEGREE: usize = 1 << 16;

/// A subgroup of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub id: SubgroupId,
    /// Index of the conjugacy class in [`FiniteGroup::subgroup_classes`].
    pub class_id: usize,
    /// Sorted element ids.
    pub elements: Vec<Elem>,
    mask: BitSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.mask.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }
}

/// A conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub id: usize,
    /// Lexicographically least member.
    pub rep: SubgroupId,
    /// All members, representative first.
    pub members: Vec<SubgroupId>,
}

#[derive(Debug, Clone)]
struct Lattice {
    subgroups: Vec<Subgroup>,
    classes: Vec<SubgroupClass>,
    index: HashMap<Vec<Elem>, SubgroupId>,
    // conj[g * n + s] = id of g s g^-1
    conj: Vec<u32>,
    to_rep: Vec<Elem>,
    centralizer: Vec<SubgroupId>,
    normalizer: Vec<SubgroupId>,
}

/// A finite group given by its Cayley table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    name: Option<String>,
    degree: Option<usize>,
    perms: Vec<Vec<u32>>,
    lattice: Lattice,
}

/// Composition `(p ∘ q)(i) = p(q(i))`.
fn compose_perm(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&i| p[i as usize]).collect()
}

impl FiniteGroup {
    /// Closure of a set of permutations, given in 1-indexed one-line image form.
    pub fn from_generators(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_generators_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidGroup(format!("degree must lie in 1..={MAX_DEGREE}")));
        }
        let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidGroup(format!(
                    "generator {k} has {} images, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            let mut perm = Vec::with_capacity(degree);
            for &img in g {
                if img == 0 || img > degree || seen[img - 1] {
                    return Err(Error::InvalidGroup(format!(
                        "generator {k} is not a permutation of 1..{degree}"
                    )));
                }
                seen[img - 1] = true;
                perm.push((img - 1) as u32);
            }
            gens.push(perm);
        }

        // breadth-first closure; element ids in discovery order
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut perms = vec![identity.clone()];
        let mut ids: HashMap<Vec<u32>, usize> = HashMap::new();
        ids.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for gen in &gens {
                let y = compose_perm(&perms[x], gen);
                if !ids.contains_key(&y) {
                    if perms.len() >= cap {
                        return Err(Error::OrderCap { cap });
                    }
                    ids.insert(y.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(y);
                }
            }
        }

        let n = perms.len();
        let mut cayley = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                cayley[a * n + b] = ids[&compose_perm(&perms[a], &perms[b])] as u32;
            }
        }
        let mut group = Self::assemble(cayley, n, None, false)?;
        group.degree = Some(degree);
        group.perms = perms;
        Ok(group)
    }

    /// Builds a group from an explicit table, checking the group axioms.
    pub fn from_table(table: &[Vec<usize>], name: Option<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut cayley = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup("table is not square over 0..order".into()));
            }
            cayley.extend(row.iter().map(|&x| x as u32));
        }
        Self::assemble(cayley, n, name, true)
    }

    fn assemble(cayley: Vec<u32>, n: usize, name: Option<String>, check: bool) -> Result<Self> {
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if cayley[a * n + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
            if inverse[a] == u32::MAX {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        let mut group = FiniteGroup {
            order: n,
            cayley,
            inverse,
            name,
            degree: None,
            perms: Vec::new(),
            lattice: Lattice {
                subgroups: Vec::new(),
                classes: Vec::new(),
                index: HashMap::new(),
                conj: Vec::new(),
                to_rep: Vec::new(),
                centralizer: Vec::new(),
                normalizer: Vec::new(),
            },
        };
        if check {
            group.check_axioms()?;
        }
        group.lattice = group.build_lattice();
        Ok(group)
    }

    /// Exhaustive check of identity, inverses and associativity.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidGroup("0 is not a two-sided identity".into()));
            }
            let ai = self.inv(a);
            if self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Err(Error::InvalidGroup(format!("bad inverse for {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.cayley[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Permutation degree when the group came from generators.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    /// 0-indexed permutation of an element, when known.
    pub fn permutation(&self, g: Elem) -> Option<&[u32]> {
        self.perms.get(g).map(|p| p.as_slice())
    }

    // ---- subgroup lattice ----

    fn closure(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut mask = BitSet::new(self.order);
        mask.insert(0);
        let mut found = vec![0];
        let mut i = 0;
        while i < found.len() {
            let x = found[i];
            for &s in seed {
                let y = self.mul(x, s);
                if !mask.contains(y) {
                    mask.insert(y);
                    found.push(y);
                }
            }
            i += 1;
        }
        found.sort_unstable();
        found
    }

    fn build_lattice(&self) -> Lattice {
        let n = self.order;
        // layered closure: extend every known subgroup by one element
        let mut found: Vec<(Vec<Elem>, Vec<Elem>)> = vec![(vec![0], vec![])];
        let mut seen: HashMap<Vec<Elem>, ()> = HashMap::new();
        seen.insert(vec![0], ());
        let mut i = 0;
        while i < found.len() {
            let (elems, gens) = found[i].clone();
            let mut mask = BitSet::new(n);
            for &e in &elems {
                mask.insert(e);
            }
            for g in 1..n {
                if mask.contains(g) {
                    continue;
                }
                let mut seed = gens.clone();
                seed.push(g);
                let sub = self.closure(&seed);
                if !seen.contains_key(&sub) {
                    seen.insert(sub.clone(), ());
                    found.push((sub, seed));
                }
            }
            i += 1;
        }
        let all: Vec<Vec<Elem>> = found.into_iter().map(|(e, _)| e).collect();

        // conjugacy classes
        let raw_index: HashMap<&[Elem], usize> =
            all.iter().enumerate().map(|(k, e)| (e.as_slice(), k)).collect();
        let mut class_of = vec![usize::MAX; all.len()];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for s in 0..all.len() {
            if class_of[s] != usize::MAX {
                continue;
            }
            let cid = raw_classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let mut c: Vec<Elem> = all[s].iter().map(|&x| self.conj(g, x)).collect();
                c.sort_unstable();
                let k = raw_index[c.as_slice()];
                if class_of[k] == usize::MAX {
                    class_of[k] = cid;
                    members.push(k);
                }
            }
            members.sort_by(|&a, &b| all[a].cmp(&all[b]));
            raw_classes.push(members);
        }
        raw_classes.sort_by(|a, b| {
            let (ra, rb) = (&all[a[0]], &all[b[0]]);
            ra.len().cmp(&rb.len()).then_with(|| ra.cmp(rb))
        });

        let mut subgroups = Vec::with_capacity(all.len());
        let mut classes = Vec::with_capacity(raw_classes.len());
        let mut index = HashMap::with_capacity(all.len());
        for (cid, members) in raw_classes.iter().enumerate() {
            let mut ids = Vec::with_capacity(members.len());
            for &m in members {
                let id = subgroups.len();
                let mut mask = BitSet::new(n);
                for &e in &all[m] {
                    mask.insert(e);
                }
                index.insert(all[m].clone(), id);
                subgroups.push(Subgroup { id, class_id: cid, elements: all[m].clone(), mask });
                ids.push(id);
            }
            classes.push(SubgroupClass { id: cid, rep: ids[0], members: ids });
        }

        let ns = subgroups.len();
        let mut conj = vec![0u32; n * ns];
        for g in 0..n {
            for s in &subgroups {
                let mut c: Vec<Elem> = s.elements.iter().map(|&x| self.conj(g, x)).collect();
                c.sort_unstable();
                conj[g * ns + s.id] = index[&c] as u32;
            }
        }
        let mut to_rep = vec![usize::MAX; ns];
        for s in &subgroups {
            let rep = classes[s.class_id].rep;
            to_rep[s.id] = (0..n).find(|&g| conj[g * ns + s.id] as usize == rep).unwrap();
        }
        let mut centralizer = Vec::with_capacity(ns);
        let mut normalizer = Vec::with_capacity(ns);
        for s in &subgroups {
            let c: Vec<Elem> = (0..n)
                .filter(|&g| s.elements.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
                .collect();
            centralizer.push(index[&c]);
            let nm: Vec<Elem> = (0..n).filter(|&g| conj[g * ns + s.id] as usize == s.id).collect();
            normalizer.push(index[&nm]);
        }
        Lattice { subgroups, classes, index, conj, to_rep, centralizer, normalizer }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.lattice.subgroups
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.lattice.subgroups[id]
    }

    /// Conjugacy classes of subgroups in canonical order.
    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        &self.lattice.classes
    }

    pub fn class_rep(&self, class_id: usize) -> SubgroupId {
        self.lattice.classes[class_id].rep
    }

    pub fn trivial_subgroup(&self) -> SubgroupId {
        0
    }

    pub fn whole_group(&self) -> SubgroupId {
        self.lattice.subgroups.len() - 1
    }

    /// Looks up a subgroup from its element set (any order).
    pub fn find_subgroup(&self, elements: &[Elem]) -> Option<SubgroupId> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        self.lattice.index.get(&e).copied()
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[Elem]) -> SubgroupId {
        self.lattice.index[&self.closure(gens)]
    }

    /// `g S g⁻¹`.
    #[inline]
    pub fn conjugate_subgroup(&self, g: Elem, s: SubgroupId) -> SubgroupId {
        self.lattice.conj[g * self.lattice.subgroups.len() + s] as SubgroupId
    }

    /// Some `g` with `g S g⁻¹` equal to the class representative of `S`.
    pub fn to_class_rep(&self, s: SubgroupId) -> Elem {
        self.lattice.to_rep[s]
    }

    pub fn centralizer(&self, s: SubgroupId) -> SubgroupId {
        self.lattice.centralizer[s]
    }

    pub fn normalizer(&self, s: SubgroupId) -> SubgroupId {
        self.lattice.normalizer[s]
    }

    pub fn intersection(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let sb = self.subgroup(b);
        let e: Vec<Elem> =
            self.subgroup(a).elements.iter().copied().filter(|&x| sb.contains(x)).collect();
        self.lattice.index[&e]
    }

    /// Subgroups contained in `s`, in global order.
    pub fn subgroups_of(&self, s: SubgroupId) -> impl Iterator<Item = &Subgroup> + '_ {
        let outer = self.subgroup(s);
        self.lattice.subgroups.iter().filter(move |t| t.is_subgroup_of(outer))
    }

    /// Double coset representatives of `H \ G / L`, least element of each coset, sorted.
    pub fn double_cosets(&self, h: SubgroupId, l: SubgroupId) -> Vec<Elem> {
        let all: Vec<Elem> = self.elements().collect();
        self.double_cosets_in(&all, h, l)
    }

    /// Double coset representatives of `H \ A / L` where `A` is a union of
    /// `(H, L)` double cosets (typically a subgroup containing both).
    pub fn double_cosets_in(&self, ambient: &[Elem], h: SubgroupId, l: SubgroupId) -> Vec<Elem> {
        let (hs, ls) = (&self.subgroup(h).elements, &self.subgroup(l).elements);
        let mut taken = BitSet::new(self.order);
        let mut sorted = ambient.to_vec();
        sorted.sort_unstable();
        let mut reps = Vec::new();
        for g in sorted {
            if taken.contains(g) {
                continue;
            }
            reps.push(g);
            for &x in hs {
                let xg = self.mul(x, g);
                for &y in ls {
                    taken.insert(self.mul(xg, y));
                }
            }
        }
        reps
    }

    /// Size of the double coset `H g L`.
    pub fn double_coset_size(&self, h: SubgroupId, g: Elem, l: SubgroupId) -> usize {
        let (hs, ls) = (&self.subgroup(h).elements, &self.subgroup(l).elements);
        let mut taken = BitSet::new(self.order);
        for &x in hs {
            let xg = self.mul(x, g);
            for &y in ls {
                taken.insert(self.mul(xg, y));
            }
        }
        taken.count()
    }

    /// Builtin group by name: `Cn`, `Dn` (order `2n`), `Sn`, `An`, `V4`, `Q8`.
    pub fn builtin(name: &str) -> Result<Self> {
        let (degree, gens) = builtin_presentation(name)?;
        Ok(Self::from_generators(degree, &gens)?.with_name(name))
    }
}

/// The permutation presentation behind [`FiniteGroup::builtin`].
///
/// | name | degree | generators |
/// |------|--------|------------|
/// | `Cn` | n | the n-cycle `(1 2 … n)` |
/// | `D1` | 2 | `(1 2)` |
/// | `D2` | 4 | `(1 2)(3 4)`, `(1 3)(2 4)` |
/// | `Dn`, n ≥ 3 | n | rotation `(1 2 … n)`, reflection `i ↦ n + 1 − i` |
/// | `Sn` | n | `(1 2)`, `(1 2 … n)` |
/// | `An` | n | `(1 2 k)` for `k = 3..n` |
/// | `V4` | 4 | `(1 2)(3 4)`, `(1 3)(2 4)` |
/// | `Q8` | 8 | left multiplication by `i` and `j` on `1, −1, i, −i, j, −j, k, −k` |
pub fn builtin_presentation(name: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let unknown = || Error::UnknownGroup(name.to_string());
    match name {
        "V4" => return Ok((4, vec![vec![2, 1, 4, 3], vec![3, 4, 1, 2]])),
        "Q8" => {
            return Ok((8, vec![vec![3, 4, 2, 1, 7, 8, 6, 5], vec![5, 6, 8, 7, 2, 1, 3, 4]]))
        }
        _ => {}
    }
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0')
    {
        return Err(unknown());
    }
    let n: usize = digits.parse().map_err(|_| unknown())?;
    let too_big = || Error::OrderCap { cap: DEFAULT_ORDER_CAP };
    let cycle = |n: usize| -> Vec<usize> { (0..n).map(|i| (i + 1) % n + 1).collect() };
    let gens = match family {
        'C' => {
            if n > DEFAULT_ORDER_CAP {
                return Err(too_big());
            }
            if n == 1 {
                vec![]
            } else {
                vec![cycle(n)]
            }
        }
        'D' if 2 * n > DEFAULT_ORDER_CAP => return Err(too_big()),
        'D' => match n {
            1 => return Ok((2, vec![vec![2, 1]])),
            2 => return Ok((4, vec![vec![2, 1, 4, 3], vec![3, 4, 1, 2]])),
            _ => vec![cycle(n), (0..n).map(|i| n - i).collect()],
        },
        'S' => {
            if n > 7 {
                return Err(too_big());
            }
            match n {
                1 => vec![],
                2 => vec![vec![2, 1]],
                _ => {
                    let mut t: Vec<usize> = (1..=n).collect();
                    t.swap(0, 1);
                    vec![t, cycle(n)]
                }
            }
        }
        'A' => {
            if n > 7 {
                return Err(too_big());
            }
            (3..=n)
                .map(|k| {
                    let mut p: Vec<usize> = (1..=n).collect();
                    p[0] = 2;
                    p[1] = k;
                    p[k - 1] = 1;
                    p
                })
                .collect()
        }
        _ => return Err(unknown()),
    };
    Ok((n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_subgroup_count(g: &FiniteGroup) -> usize {
        // all subsets closed under multiplication, for order <= 8
        let n = g.order();
        (0u32..(1 << n))
            .filter(|&m| {
                m & 1 == 1
                    && (0..n).all(|a| {
                        m >> a & 1 == 0 || (0..n).all(|b| m >> b & 1 == 0 || m >> g.mul(a, b) & 1 == 1)
                    })
            })
            .count()
    }

    #[test]
    fn generators_closure_orders() {
        assert_eq!(FiniteGroup::from_generators(2, &[vec![2, 1]]).unwrap().order(), 2);
        let s3 = FiniteGroup::from_generators(3, &[vec![2, 1, 3], vec![2, 3, 1]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(FiniteGroup::from_generators(1, &[]).unwrap().order(), 1);
        s3.check_axioms().unwrap();
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(FiniteGroup::from_generators(3, &[vec![1, 1, 2]]).is_err());
        assert!(FiniteGroup::from_generators(3, &[vec![1, 2]]).is_err());
        assert!(FiniteGroup::from_generators(2, &[vec![0, 1]]).is_err());
        assert!(matches!(
            FiniteGroup::from_generators_capped(4, &[vec![2, 1, 3, 4], vec![2, 3, 4, 1]], 10),
            Err(Error::OrderCap { cap: 10 })
        ));
    }

    #[test]
    fn builtin_orders() {
        for (name, order) in [
            ("C1", 1),
            ("C2", 2),
            ("C6", 6),
            ("D1", 2),
            ("D2", 4),
            ("D4", 8),
            ("D5", 10),
            ("S3", 6),
            ("S4", 24),
            ("A4", 12),
            ("A5", 60),
            ("V4", 4),
            ("Q8", 8),
        ] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            g.check_axioms().unwrap();
        }
        for bad in ["", "X3", "C", "C0", "C03", "Q7", "S9", "c3"] {
            assert!(FiniteGroup::builtin(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn q8_has_single_involution() {
        let q8 = FiniteGroup::builtin("Q8").unwrap();
        let involutions = q8.elements().filter(|&g| g != 0 && q8.mul(g, g) == 0).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn subgroup_class_counts() {
        for (name, classes) in [("C1", 1), ("C2", 2), ("S3", 4), ("Q8", 6), ("D4", 8), ("S4", 11)] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!(g.subgroup_classes().len(), classes, "{name}");
        }
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        for name in ["C2", "C4", "V4", "S3", "C6", "D4", "Q8", "C8"] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!(g.subgroups().len(), brute_subgroup_count(&g), "{name}");
        }
    }

    #[test]
    fn classes_sorted_and_reps_least() {
        let g = FiniteGroup::builtin("S4").unwrap();
        let classes = g.subgroup_classes();
        for w in classes.windows(2) {
            let (a, b) = (g.subgroup(w[0].rep), g.subgroup(w[1].rep));
            assert!((a.order(), &a.elements) < (b.order(), &b.elements));
        }
        for c in classes {
            for &m in &c.members {
                assert!(g.subgroup(c.rep).elements <= g.subgroup(m).elements);
                assert_eq!(g.conjugate_subgroup(g.to_class_rep(m), m), c.rep);
            }
        }
        assert_eq!(g.subgroup(0).elements, vec![0]);
        assert_eq!(g.subgroup(g.whole_group()).order(), 24);
    }

    #[test]
    fn centralizer_examples() {
        let s3 = FiniteGroup::builtin("S3").unwrap();
        assert_eq!(s3.centralizer(0), s3.whole_group());
        let c3 = s3.subgroups().iter().find(|s| s.order() == 3).unwrap().id;
        assert_eq!(s3.subgroup(s3.centralizer(c3)).order(), 3);

        let q8 = FiniteGroup::builtin("Q8").unwrap();
        let minus_one = q8.elements().find(|&g| g != 0 && q8.mul(g, g) == 0).unwrap();
        let z = q8.generated(&[minus_one]);
        assert_eq!(q8.subgroup(q8.centralizer(z)).order(), 8);
    }

    #[test]
    fn double_coset_examples() {
        let s3 = FiniteGroup::builtin("S3").unwrap();
        let g = s3.whole_group();
        assert_eq!(s3.double_cosets(g, g), vec![0]);
        assert_eq!(s3.double_cosets(0, 0), (0..6).collect::<Vec<_>>());
        let c2 = s3.class_rep(1);
        assert_eq!(s3.subgroup(c2).order(), 2);
        let reps = s3.double_cosets(c2, c2);
        assert_eq!(reps.len(), 2);
        let mut sizes: Vec<usize> = reps.iter().map(|&r| s3.double_coset_size(c2, r, c2)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn from_table_checks_axioms() {
        let c3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert_eq!(FiniteGroup::from_table(&c3, None).unwrap().order(), 3);
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(FiniteGroup::from_table(&bad, None).is_err());
    }
}
