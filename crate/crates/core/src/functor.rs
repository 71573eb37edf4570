//! Mackey functors as modules over the Mackey algebra, Yoneda modules, and
//! the fusion quotient `M ↦ M / I·M`.

use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::fused::{fuse, fuse_class, FusedSpanClass};
use crate::fused_algebra::FusedAlgebraData;
use crate::group::Elem;
use crate::gset::GSet;
use crate::span::{compose_materialized, hom_basis, span_of_class, BurnsideElement, SpanClass};
use crate::zlattice::{quotient_by_columns, IntMatrix, QuotientPresentation};

/// Dense integer matrix with overflow-checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

fn overflow() -> Error {
    Error::InvalidModule("integer overflow in module arithmetic".into())
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidModule("ragged matrix".into()));
        }
        Ok(Mat { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.checked_mul(other.get(k, j)).ok_or_else(overflow)?;
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = cell.checked_add(p).ok_or_else(overflow)?;
                }
            }
        }
        Ok(out)
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Mat, k: i64) -> Result<()> {
        for (x, &y) in self.data.iter_mut().zip(&other.data) {
            *x = y.checked_mul(k).and_then(|p| x.checked_add(p)).ok_or_else(overflow)?;
        }
        Ok(())
    }

    /// The block with the given row and column ranges.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, i) in rows.enumerate() {
            for (b, j) in cols.clone().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.to_rows())
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Result<Mat> {
        let mut out = Mat::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, m.get(i, j).to_i64().ok_or_else(overflow)?);
            }
        }
        Ok(out)
    }
}

/// A module over the Mackey algebra, graded by the components of `Ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MackeyModule {
    pub total_rank: usize,
    /// Index range of `M(G/H)` for each subgroup class `H`.
    pub component_ranges: Vec<Range<usize>>,
    /// Action matrix of each basis element of the algebra.
    pub action: Vec<Mat>,
    /// Invariant factors of the torsion of each component, for quotients.
    pub torsion: Option<Vec<Vec<BigInt>>>,
}

impl MackeyModule {
    pub fn zero(alg: &AlgebraData) -> Self {
        let n = alg.group.subgroup_classes().len();
        MackeyModule {
            total_rank: 0,
            component_ranges: vec![0..0; n],
            action: vec![Mat::zeros(0, 0); alg.rank()],
            torsion: None,
        }
    }

    pub fn component_ranks(&self) -> Vec<usize> {
        self.component_ranges.iter().map(|r| r.len()).collect()
    }

    fn from_ranks(ranks: &[usize]) -> (usize, Vec<Range<usize>>) {
        let mut acc = 0;
        let ranges = ranks
            .iter()
            .map(|&r| {
                acc += r;
                acc - r..acc
            })
            .collect();
        (acc, ranges)
    }

    /// Checks the structure constants, the identity and the component
    /// idempotents against the action matrices.
    pub fn check(&self, alg: &AlgebraData) -> Result<()> {
        let n = self.total_rank;
        if self.action.len() != alg.rank() {
            return Err(Error::InvalidModule(format!("expected {} action matrices", alg.rank())));
        }
        if self.component_ranges.len() != alg.group.subgroup_classes().len()
            || self.component_ranges.iter().map(|r| r.len()).sum::<usize>() != n
        {
            return Err(Error::InvalidModule("component ranges do not tile the module".into()));
        }
        if self.action.iter().any(|a| a.rows() != n || a.cols() != n) {
            return Err(Error::InvalidModule("action matrix has the wrong shape".into()));
        }
        for (c, &e) in alg.idempotents.iter().enumerate() {
            let mut proj = Mat::zeros(n, n);
            for i in self.component_ranges[c].clone() {
                proj.set(i, i, 1);
            }
            if self.action[e] != proj {
                return Err(Error::InvalidModule(format!("idempotent of class {c} is not the block projection")));
            }
        }
        for i in 0..alg.rank() {
            for j in 0..alg.rank() {
                let lhs = self.action[i].mul(&self.action[j])?;
                let mut rhs = Mat::zeros(n, n);
                for &(k, c) in alg.table.product(i, j) {
                    rhs.add_scaled(&self.action[k], c)?;
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!("action violates the product of basis elements {i} and {j}")));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(alg: &AlgebraData, parts: &[MackeyModule]) -> Self {
        let classes = alg.group.subgroup_classes().len();
        let ranks: Vec<usize> =
            (0..classes).map(|c| parts.iter().map(|m| m.component_ranges[c].len()).sum()).collect();
        let (total, ranges) = Self::from_ranks(&ranks);
        // position of each part's component block in the sum
        let mut offsets = vec![vec![0; classes]; parts.len()];
        for c in 0..classes {
            let mut at = ranges[c].start;
            for (p, m) in parts.iter().enumerate() {
                offsets[p][c] = at;
                at += m.component_ranges[c].len();
            }
        }
        let place = |p: usize, i: usize| {
            let m = &parts[p];
            let c = m.component_ranges.iter().position(|r| r.contains(&i)).expect("tiled");
            offsets[p][c] + i - m.component_ranges[c].start
        };
        let action = (0..alg.rank())
            .map(|b| {
                let mut a = Mat::zeros(total, total);
                for (p, m) in parts.iter().enumerate() {
                    for i in 0..m.total_rank {
                        for j in 0..m.total_rank {
                            let v = m.action[b].get(i, j);
                            if v != 0 {
                                a.set(place(p, i), place(p, j), v);
                            }
                        }
                    }
                }
                a
            })
            .collect();
        MackeyModule { total_rank: total, component_ranges: ranges, action, torsion: None }
    }
}

/// `Hom(X, Ω)` with its basis of span classes, sorted by target component and
/// then by class.
#[derive(Debug, Clone)]
pub struct YonedaModule {
    pub module: MackeyModule,
    pub basis: Vec<SpanClass>,
}

fn component_sorted<T: Ord + Copy>(alg: &AlgebraData, items: Vec<T>, tgt: impl Fn(&T) -> usize) -> (Vec<T>, Vec<usize>) {
    let mut keyed: Vec<(usize, T)> = items.into_iter().map(|s| (alg.omega.component_of(tgt(&s)), s)).collect();
    keyed.sort();
    let mut ranks = vec![0; alg.omega.components.len()];
    for (c, _) in &keyed {
        ranks[*c] += 1;
    }
    (keyed.into_iter().map(|(_, s)| s).collect(), ranks)
}

/// The represented functor `Hom(X, −)` evaluated on `Ω`, acted on by left
/// composition. `X = pt` gives the Burnside functor.
pub fn yoneda_module(alg: &AlgebraData, x: &Arc<GSet>) -> YonedaModule {
    let omega = &alg.omega.set;
    let (basis, ranks) = component_sorted(alg, hom_basis(x, omega), |s| s.tgt_point);
    let (total, ranges) = MackeyModule::from_ranks(&ranks);
    let index = |s: &SpanClass| {
        let c = alg.omega.component_of(s.tgt_point);
        ranges[c].start + basis[ranges[c].clone()].binary_search(s).expect("class in the Yoneda basis")
    };
    let middles: Vec<_> = basis.iter().map(|s| span_of_class(x, omega, s)).collect();
    let action = alg
        .spans
        .iter()
        .map(|s| {
            let (_, a2, b2) = span_of_class(omega, omega, s);
            let src = alg.omega.component_of(s.src_point);
            let mut m = Mat::zeros(total, total);
            for col in ranges[src].clone() {
                let (_, a1, b1) = &middles[col];
                let e = compose_materialized(x, omega, (a1, b1), (&a2, &b2));
                for (c, &k) in e.terms() {
                    m.set(index(c), col, k);
                }
            }
            m
        })
        .collect();
    YonedaModule { module: MackeyModule { total_rank: total, component_ranges: ranges, action, torsion: None }, basis }
}

/// `Hom(X, Ω)` in the fused category, as a module through the quotient map.
#[derive(Debug, Clone)]
pub struct FusedYonedaModule {
    pub module: MackeyModule,
    pub basis: Vec<FusedSpanClass>,
}

pub fn fused_yoneda_module(alg: &AlgebraData, x: &Arc<GSet>) -> FusedYonedaModule {
    let omega = &alg.omega.set;
    let fused: std::collections::BTreeSet<FusedSpanClass> =
        hom_basis(x, omega).iter().map(|s| fuse_class(x, omega, s)).collect();
    let (basis, ranks) = component_sorted(alg, fused.into_iter().collect(), |f| f.0.tgt_point);
    let (total, ranges) = MackeyModule::from_ranks(&ranks);
    let index = |f: &FusedSpanClass| {
        let c = alg.omega.component_of(f.0.tgt_point);
        ranges[c].start + basis[ranges[c].clone()].binary_search(f).expect("class in the fused Yoneda basis")
    };
    let action = alg
        .spans
        .iter()
        .map(|s| {
            let e = BurnsideElement::basis(omega, omega, *s);
            let src = alg.omega.component_of(s.src_point);
            let mut m = Mat::zeros(total, total);
            for col in ranges[src].clone() {
                let lift = BurnsideElement::basis(x, omega, basis[col].0);
                let image = fuse(&crate::span::compose(&e, &lift).expect("composable"));
                for (c, &k) in image.terms() {
                    m.set(index(c), col, k);
                }
            }
            m
        })
        .collect();
    FusedYonedaModule {
        module: MackeyModule { total_rank: total, component_ranges: ranges, action, torsion: None },
        basis,
    }
}

/// Per-component presentations of `M / I·M`, where `I` is the kernel of the
/// quotient onto the fused algebra.
pub fn fusion_presentations(fused: &FusedAlgebraData, m: &MackeyModule) -> Vec<QuotientPresentation> {
    let kernel = fused.kernel_basis();
    m.component_ranges
        .iter()
        .map(|range| {
            let mut gens: Vec<Vec<i64>> = Vec::new();
            for d in &kernel {
                let mut a = Mat::zeros(m.total_rank, m.total_rank);
                for (i, c) in d.terms() {
                    a.add_scaled(&m.action[i], c).expect("kernel differences are small");
                }
                let block = a.block(range.clone(), 0..m.total_rank);
                for j in 0..m.total_rank {
                    let col: Vec<i64> = (0..block.rows()).map(|i| block.get(i, j)).collect();
                    if col.iter().any(|&v| v != 0) {
                        gens.push(col);
                    }
                }
            }
            gens.sort();
            gens.dedup();
            quotient_by_columns(range.len(), &IntMatrix::from_columns(range.len(), &gens))
        })
        .collect()
}

/// A fusion quotient with the data of its projection.
#[derive(Debug, Clone)]
pub struct Fusion {
    pub module: MackeyModule,
    pub presentations: Vec<QuotientPresentation>,
}

impl Fusion {
    /// Block-diagonal matrix of the projection `M → M / I·M`.
    pub fn unit(&self, source: &MackeyModule) -> Result<Mat> {
        let mut out = Mat::zeros(self.module.total_rank, source.total_rank);
        for (c, p) in self.presentations.iter().enumerate() {
            let proj = Mat::from_int_matrix(&p.projection)?;
            let (rows, cols) = (self.module.component_ranges[c].clone(), source.component_ranges[c].clone());
            for (a, i) in rows.enumerate() {
                for (b, j) in cols.clone().enumerate() {
                    out.set(i, j, proj.get(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal matrix of the chosen section `M / I·M → M`.
    pub fn section(&self, source: &MackeyModule) -> Result<Mat> {
        let mut out = Mat::zeros(source.total_rank, self.module.total_rank);
        for (c, p) in self.presentations.iter().enumerate() {
            let sec = Mat::from_int_matrix(&p.section)?;
            let (rows, cols) = (source.component_ranges[c].clone(), self.module.component_ranges[c].clone());
            for (a, i) in rows.enumerate() {
                for (b, j) in cols.clone().enumerate() {
                    out.set(i, j, sec.get(a, b));
                }
            }
        }
        Ok(out)
    }
}

/// `M / I·M` with the induced action. Fails with the invariant factors when a
/// component has torsion.
pub fn fuse_module(fused: &FusedAlgebraData, m: &MackeyModule) -> Result<Fusion> {
    let presentations = fusion_presentations(fused, m);
    for (c, p) in presentations.iter().enumerate() {
        if !p.is_torsion_free() {
            return Err(Error::Torsion { component: c, factors: p.torsion.iter().map(|f| f.to_string()).collect() });
        }
    }
    let ranks: Vec<usize> = presentations.iter().map(|p| p.free_rank).collect();
    let (total, ranges) = MackeyModule::from_ranks(&ranks);
    let mut fusion = Fusion {
        module: MackeyModule {
            total_rank: total,
            component_ranges: ranges,
            action: Vec::new(),
            torsion: Some(presentations.iter().map(|p| p.torsion.clone()).collect()),
        },
        presentations,
    };
    let unit = fusion.unit(m)?;
    let section = fusion.section(m)?;
    fusion.module.action =
        m.action.iter().map(|a| unit.mul(a)?.mul(&section)).collect::<Result<Vec<_>>>()?;
    Ok(fusion)
}

/// Whether every centralizer acts trivially on its component; failing
/// `(class, element)` pairs are returned as witnesses.
pub fn is_fused(alg: &AlgebraData, m: &MackeyModule) -> (bool, Vec<(usize, Elem)>) {
    let group = &alg.group;
    let mut witnesses = Vec::new();
    for (c, class) in group.subgroup_classes().iter().enumerate() {
        let id = Mat::identity(m.component_ranges[c].len());
        for &x in &group.subgroup(group.centralizer(class.rep)).elements {
            let a = centralizer_action(alg, m, c, x).expect("element centralizes");
            if a != id {
                witnesses.push((c, x));
            }
        }
    }
    (witnesses.is_empty(), witnesses)
}

/// Action of `c ∈ C_G(H)` on the block `M(G/H)`.
pub fn centralizer_action(alg: &AlgebraData, m: &MackeyModule, h_class: usize, c: Elem) -> Result<Mat> {
    let group = &alg.group;
    let h = group.class_rep(h_class);
    if !group.subgroup(group.centralizer(h)).contains(c) {
        return Err(Error::NotCentralizing { elem: c, class: h_class });
    }
    let i = alg.conjugation_index(h_class, c)?;
    let block = m.component_ranges[h_class].clone();
    Ok(m.action[i].block(block.clone(), block))
}

/// Serialized form of a module for import and export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub component_ranks: Vec<usize>,
    /// One square matrix per algebra basis element, as rows.
    pub action: Vec<Vec<Vec<i64>>>,
}

impl ModuleJson {
    pub fn from_module(m: &MackeyModule) -> Self {
        ModuleJson { component_ranks: m.component_ranks(), action: m.action.iter().map(Mat::to_rows).collect() }
    }

    /// Builds and checks the module against the algebra.
    pub fn into_module(self, alg: &AlgebraData) -> Result<MackeyModule> {
        if self.component_ranks.iter().try_fold(0usize, |a, &r| a.checked_add(r)).is_none() {
            return Err(Error::InvalidModule("component ranks overflow".into()));
        }
        let (total, ranges) = MackeyModule::from_ranks(&self.component_ranks);
        let action = self
            .action
            .iter()
            .map(|rows| {
                if rows.len() != total {
                    return Err(Error::InvalidModule("action matrix has the wrong number of rows".into()));
                }
                Mat::from_rows(rows, total)
            })
            .collect::<Result<Vec<_>>>()?;
        let m = MackeyModule { total_rank: total, component_ranges: ranges, action, torsion: None };
        m.check(alg)?;
        Ok(m)
    }
}

/// Whether `ψ = φ·S` identifies a fusion quotient with a directly built
/// module, where `φ` maps each basis element of the unfused Yoneda module to
/// its fused class and `S` is the section of the quotient. Requires `ψ`
/// unimodular and intertwining the actions.
pub fn matches_fused_yoneda(
    yoneda: &YonedaModule,
    fusion: &Fusion,
    direct: &FusedYonedaModule,
    x: &GSet,
    omega: &GSet,
) -> Result<bool> {
    let (m, f, d) = (&yoneda.module, &fusion.module, &direct.module);
    if f.component_ranks() != d.component_ranks() {
        return Ok(false);
    }
    let mut phi = Mat::zeros(d.total_rank, m.total_rank);
    for (j, s) in yoneda.basis.iter().enumerate() {
        let target = fuse_class(x, omega, s);
        let i = direct.basis.iter().position(|b| *b == target).expect("fused class present");
        phi.set(i, j, 1);
    }
    let psi = phi.mul(&fusion.section(m)?)?;
    let det = psi.to_int_matrix().det();
    if det != BigInt::from(1) && det != BigInt::from(-1) {
        return Ok(false);
    }
    for (a_f, a_d) in f.action.iter().zip(&d.action) {
        if psi.mul(a_f)? != a_d.mul(&psi)? {
            return Ok(false);
        }
    }
    Ok(true)
}
