//! Bounded complexes of projectives and their homotopy category.
//!
//! Terms are direct sums of vertex projectives; a differential component
//! `P_i -> P_j` is an algebra element of `e_i A e_j` acting by right
//! multiplication. Because every object here is a bounded complex of
//! projectives, chain maps modulo null-homotopy compute derived-category
//! Hom groups on the nose; no fibrant/cofibrant bookkeeping is needed.
//! Modules enter as stalk complexes in degree zero.
//!
//! Hom spaces are solved over the path basis: one unknown per residue path
//! per matrix cell, chain-map commutation as linear equations, and the
//! null-homotopic subspace quotiented out through the canonical-complement
//! reduction from `matrix::Subspace`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::field::Scalar;
use crate::matrix::{vec_is_zero, Matrix, Subspace};
use crate::rep::{cokernel, kernel, ModMorphism, Representation};
use crate::resolution::{ProjResolution, RealizedProj};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("differential entry at degree {degree}, row {row}, col {col} has a path outside e_i A e_j")]
    BadEntrySupport { degree: i32, row: usize, col: usize },
    #[error("differential shape mismatch at degree {0}")]
    BadShape(i32),
    #[error("d ∘ d is nonzero between degrees {0} and {1}")]
    SquareNonzero(i32, i32),
    #[error("complex is not concentrated in degrees -1 and 0")]
    OutsideTwoTerm,
    #[error("chain map does not commute with the differentials at degree {0}")]
    NotChainMap(i32),
}

/// A matrix of algebra elements; entry `(r, c)` is a map from the `c`-th
/// source summand to the `r`-th target summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<AlgebraElement>,
}

impl AlgMatrix {
    pub fn zero(rows: usize, cols: usize) -> AlgMatrix {
        AlgMatrix { rows, cols, entries: vec![AlgebraElement::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: AlgebraElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }

    pub fn add(&self, other: &AlgMatrix) -> AlgMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        AlgMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> AlgMatrix {
        AlgMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(AlgebraElement::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgMatrix {
        AlgMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// Composite `second ∘ self`, with the first map's entries multiplied on
    /// the left (right-multiplication actions compose by concatenation).
    pub fn then(&self, alg: &BoundQuiverAlgebra, second: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.rows, second.cols, "composition shape");
        let mut out = AlgMatrix::zero(second.rows, self.cols);
        for r in 0..second.rows {
            for c in 0..self.cols {
                let mut acc = AlgebraElement::zero();
                for j in 0..self.rows {
                    let first = self.get(j, c);
                    let snd = second.get(r, j);
                    if first.is_zero() || snd.is_zero() {
                        continue;
                    }
                    acc = acc.add(&alg.mul_elements(first, snd));
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// A bounded complex of projectives. Only nonzero degrees are stored;
/// `terms[k]` lists summand vertices and `diffs[k]` maps degree `k` to `k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjComplex {
    pub terms: BTreeMap<i32, Vec<usize>>,
    pub diffs: BTreeMap<i32, AlgMatrix>,
}

impl ProjComplex {
    pub fn empty() -> ProjComplex {
        ProjComplex { terms: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// The stalk complex of `P_v` in a given degree.
    pub fn stalk_projective(v: usize, degree: i32) -> ProjComplex {
        let mut terms = BTreeMap::new();
        terms.insert(degree, vec![v]);
        ProjComplex { terms, diffs: BTreeMap::new() }
    }

    /// A two-term complex `P(neg) -> P(zero)` in degrees -1 and 0.
    pub fn two_term(
        neg: Vec<usize>,
        zero: Vec<usize>,
        d: AlgMatrix,
    ) -> ProjComplex {
        let mut terms = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        if !neg.is_empty() && !zero.is_empty() {
            diffs.insert(-1, d);
        }
        if !neg.is_empty() {
            terms.insert(-1, neg);
        }
        if !zero.is_empty() {
            terms.insert(0, zero);
        }
        ProjComplex { terms, diffs }
    }

    pub fn summands(&self, degree: i32) -> &[usize] {
        self.terms.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn diff(&self, degree: i32) -> Option<&AlgMatrix> {
        self.diffs.get(&degree)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero_object(&self) -> bool {
        self.terms.values().all(Vec::is_empty)
    }

    pub fn is_two_term(&self) -> bool {
        self.degrees().into_iter().all(|d| d == -1 || d == 0)
    }

    pub fn validate(&self, alg: &BoundQuiverAlgebra) -> Result<(), ComplexError> {
        let q = alg.quiver();
        for (&k, d) in &self.diffs {
            let (src, tgt) = (self.summands(k), self.summands(k + 1));
            if d.cols != src.len() || d.rows != tgt.len() {
                return Err(ComplexError::BadShape(k));
            }
            for r in 0..d.rows {
                for c in 0..d.cols {
                    let e = d.get(r, c);
                    for (idx, _) in &e.terms {
                        let p = &alg.basis()[*idx];
                        if p.source != tgt[r] || p.target(q) != src[c] {
                            return Err(ComplexError::BadEntrySupport {
                                degree: k,
                                row: r,
                                col: c,
                            });
                        }
                    }
                }
            }
        }
        for (&k, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(k + 1)) {
                if !d.then(alg, next).is_zero() {
                    return Err(ComplexError::SquareNonzero(k, k + 1));
                }
            }
        }
        Ok(())
    }

    /// Shift: `(Σ^i X)^k = X^{k+i}` with differentials scaled by `(-1)^i`.
    pub fn shift(&self, alg: &BoundQuiverAlgebra, i: i32) -> ProjComplex {
        let sign = if i.rem_euclid(2) == 0 {
            alg.field().one()
        } else {
            alg.field().one().neg()
        };
        let terms = self.terms.iter().map(|(&k, v)| (k - i, v.clone())).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&k, d)| (k - i, d.scale(&sign)))
            .collect();
        ProjComplex { terms, diffs }
    }

    /// Total dimension of the underlying representation at a degree.
    pub fn realize_term(&self, alg: &BoundQuiverAlgebra, degree: i32) -> RealizedProj {
        RealizedProj::new(alg, self.summands(degree).to_vec())
    }
}

/// A chain map between complexes of projectives, one `AlgMatrix` per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub components: BTreeMap<i32, AlgMatrix>,
}

impl ChainMap {
    pub fn component(&self, degree: i32) -> AlgMatrix {
        self.components.get(&degree).cloned().unwrap_or_else(|| {
            AlgMatrix::zero(
                self.target.summands(degree).len(),
                self.source.summands(degree).len(),
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(AlgMatrix::is_zero)
    }

    pub fn validate(&self, alg: &BoundQuiverAlgebra) -> Result<(), ComplexError> {
        let mut degrees: Vec<i32> = self.source.degrees();
        degrees.extend(self.target.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        for &k in &degrees {
            let lhs = match self.source.diff(k) {
                Some(d) => d.then(alg, &self.component(k + 1)),
                None => AlgMatrix::zero(
                    self.target.summands(k + 1).len(),
                    self.source.summands(k).len(),
                ),
            };
            let rhs = match self.target.diff(k) {
                Some(d) => self.component(k).then(alg, d),
                None => AlgMatrix::zero(
                    self.target.summands(k + 1).len(),
                    self.source.summands(k).len(),
                ),
            };
            if lhs.add(&rhs.neg()).is_zero() {
                continue;
            }
            return Err(ComplexError::NotChainMap(k));
        }
        Ok(())
    }

    /// Identity chain map of a complex.
    pub fn identity(alg: &BoundQuiverAlgebra, x: &ProjComplex) -> ChainMap {
        let mut components = BTreeMap::new();
        for (&k, summands) in &x.terms {
            let mut m = AlgMatrix::zero(summands.len(), summands.len());
            for (i, &v) in summands.iter().enumerate() {
                m.set(i, i, AlgebraElement::basis_element(alg, alg.trivial_path(v)));
            }
            components.insert(k, m);
        }
        ChainMap { source: x.clone(), target: x.clone(), components }
    }

    /// `second ∘ self` degreewise.
    pub fn then(&self, alg: &BoundQuiverAlgebra, second: &ChainMap) -> ChainMap {
        let mut components = BTreeMap::new();
        let mut degrees: Vec<i32> = self.source.degrees();
        degrees.extend(second.target.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        for &k in &degrees {
            let m = self.component(k).then(alg, &second.component(k));
            if !m.is_zero() {
                components.insert(k, m);
            }
        }
        ChainMap { source: self.source.clone(), target: second.target.clone(), components }
    }
}

/// Mapping cone: `C^k = X^{k+1} ⊕ Y^k` with the standard block differential.
pub fn cone(alg: &BoundQuiverAlgebra, f: &ChainMap) -> ProjComplex {
    let x = &f.source;
    let y = &f.target;
    let mut degrees: Vec<i32> = x.degrees().iter().map(|&k| k - 1).collect();
    degrees.extend(y.degrees());
    degrees.sort_unstable();
    degrees.dedup();
    let mut terms = BTreeMap::new();
    for &k in &degrees {
        let mut s = x.summands(k + 1).to_vec();
        s.extend_from_slice(y.summands(k));
        if !s.is_empty() {
            terms.insert(k, s);
        }
    }
    let minus_one = alg.field().one().neg();
    let mut diffs = BTreeMap::new();
    for &k in &degrees {
        let (xr, yr) = (x.summands(k + 2).len(), y.summands(k + 1).len());
        let (xc, yc) = (x.summands(k + 1).len(), y.summands(k).len());
        if xr + yr == 0 || xc + yc == 0 {
            continue;
        }
        let mut d = AlgMatrix::zero(xr + yr, xc + yc);
        if let Some(dx) = x.diff(k + 1) {
            for r in 0..xr {
                for c in 0..xc {
                    d.set(r, c, dx.get(r, c).scale(&minus_one));
                }
            }
        }
        let fk = f.component(k + 1);
        for r in 0..yr {
            for c in 0..xc {
                d.set(xr + r, c, fk.get(r, c).clone());
            }
        }
        if let Some(dy) = y.diff(k) {
            for r in 0..yr {
                for c in 0..yc {
                    d.set(xr + r, xc + c, dy.get(r, c).clone());
                }
            }
        }
        if !d.is_zero() {
            diffs.insert(k, d);
        }
    }
    let c = ProjComplex { terms, diffs };
    debug_assert!(c.validate(alg).is_ok());
    c
}

/// Realizes a differential as a module morphism between realized terms.
pub fn alg_matrix_to_morphism(
    alg: &BoundQuiverAlgebra,
    from: &RealizedProj,
    to: &RealizedProj,
    m: &AlgMatrix,
) -> ModMorphism {
    let gens: Vec<Vec<Scalar>> = (0..from.summands.len())
        .map(|c| {
            let v = from.summands[c];
            let layout = to.basis_layout(alg, v);
            let mut img = vec![alg.field().zero(); to.rep.dims[v]];
            for r in 0..to.summands.len() {
                let entry = m.get(r, c);
                for (idx, coeff) in &entry.terms {
                    let word = &alg.basis()[*idx].arrows;
                    let pos = layout
                        .iter()
                        .position(|(s, w)| *s == r && w == word)
                        .expect("entry path in layout");
                    img[pos] = img[pos].add(coeff);
                }
            }
            img
        })
        .collect();
    from.hom_from_generators(alg, &to.rep, &gens)
}

/// Extracts the algebra-entry matrix of a morphism between realized
/// projectives (inverse of `alg_matrix_to_morphism`).
pub fn morphism_to_alg_matrix(
    alg: &BoundQuiverAlgebra,
    from: &RealizedProj,
    to: &RealizedProj,
    f: &ModMorphism,
) -> AlgMatrix {
    let mut m = AlgMatrix::zero(to.summands.len(), from.summands.len());
    for c in 0..from.summands.len() {
        let v = from.summands[c];
        let col = f.blocks[v].col(from.generator_index(alg, c));
        for (pos, (r, word)) in to.basis_layout(alg, v).iter().enumerate() {
            if col[pos].is_zero() {
                continue;
            }
            let idx = alg
                .path_index(to.summands[*r], word)
                .expect("layout path in basis");
            let add = AlgebraElement { terms: vec![(idx, col[pos].clone())] };
            m.set(*r, c, m.get(*r, c).add(&add));
        }
    }
    m
}

/// Cohomology of the realized complex at degree `n`.
pub fn complex_cohomology(
    alg: &BoundQuiverAlgebra,
    x: &ProjComplex,
    n: i32,
) -> Representation {
    let term = x.realize_term(alg, n);
    if term.is_zero() {
        return Representation::zero(alg);
    }
    let next = x.realize_term(alg, n + 1);
    let d_out = match x.diff(n) {
        Some(d) => alg_matrix_to_morphism(alg, &term, &next, d),
        None => ModMorphism::zero(alg, &term.rep, &next.rep),
    };
    let (ker, kincl) = kernel(alg, &d_out);
    let prev = x.realize_term(alg, n - 1);
    let d_in = match x.diff(n - 1) {
        Some(d) => alg_matrix_to_morphism(alg, &prev, &term, d),
        None => ModMorphism::zero(alg, &prev.rep, &term.rep),
    };
    // factor d_in through the kernel, then take the cokernel
    let factor_blocks: Vec<Matrix> = kincl
        .blocks
        .iter()
        .zip(&d_in.blocks)
        .map(|(k, din)| k.solve(din).expect("shape").expect("image in kernel"))
        .collect();
    let factored = ModMorphism { source: prev.rep.clone(), target: ker.clone(), blocks: factor_blocks };
    let (h, _) = cokernel(alg, &factored);
    h
}

/// Hom classes between complexes of projectives: `Hom_K(x, Σ^i y)` with a
/// canonical basis of chain-map representatives.
pub struct HomClasses {
    pub dim: usize,
    pub basis: Vec<ChainMap>,
    /// canonical coordinates of each basis class
    pub basis_coords: Vec<Vec<Scalar>>,
    layout: VarLayout,
    homotopies: Subspace,
    shifted_target: ProjComplex,
    source: ProjComplex,
}

/// Enumeration of unknowns: `(degree, row summand, col summand, path basis
/// index)` in deterministic order.
struct VarLayout {
    vars: Vec<(i32, usize, usize, usize)>,
}

impl VarLayout {
    fn build(alg: &BoundQuiverAlgebra, x: &ProjComplex, z: &ProjComplex) -> VarLayout {
        let mut vars = Vec::new();
        let mut degrees: Vec<i32> = x.degrees();
        degrees.sort_unstable();
        for &k in &degrees {
            let cols = x.summands(k);
            let rows = z.summands(k);
            for (r, &rv) in rows.iter().enumerate() {
                for (c, &cv) in cols.iter().enumerate() {
                    for idx in alg.paths_between(rv, cv) {
                        vars.push((k, r, c, idx));
                    }
                }
            }
        }
        VarLayout { vars }
    }

    fn len(&self) -> usize {
        self.vars.len()
    }

    fn to_components(
        &self,
        alg: &BoundQuiverAlgebra,
        x: &ProjComplex,
        z: &ProjComplex,
        coords: &[Scalar],
    ) -> BTreeMap<i32, AlgMatrix> {
        let mut components: BTreeMap<i32, AlgMatrix> = BTreeMap::new();
        for ((k, r, c, idx), coeff) in self.vars.iter().zip(coords) {
            if coeff.is_zero() {
                continue;
            }
            let m = components.entry(*k).or_insert_with(|| {
                AlgMatrix::zero(z.summands(*k).len(), x.summands(*k).len())
            });
            let add = AlgebraElement { terms: vec![(*idx, coeff.clone())] };
            m.set(*r, *c, m.get(*r, *c).add(&add));
        }
        let _ = alg;
        components
    }

    fn components_to_coords(
        &self,
        alg: &BoundQuiverAlgebra,
        components: &BTreeMap<i32, AlgMatrix>,
    ) -> Vec<Scalar> {
        self.vars
            .iter()
            .map(|(k, r, c, idx)| {
                components
                    .get(k)
                    .and_then(|m| {
                        m.get(*r, *c).terms.iter().find(|(i, _)| i == idx).map(|(_, s)| s.clone())
                    })
                    .unwrap_or_else(|| alg.field().zero())
            })
            .collect()
    }
}

/// The defect `f ∘ d_x - d_z ∘ f` flattened over the equation layout.
fn chain_defect(
    alg: &BoundQuiverAlgebra,
    x: &ProjComplex,
    z: &ProjComplex,
    components: &BTreeMap<i32, AlgMatrix>,
    eq_layout: &VarLayoutEq,
) -> Vec<Scalar> {
    let mut cells: BTreeMap<i32, AlgMatrix> = BTreeMap::new();
    let degrees: Vec<i32> = eq_layout.degrees.clone();
    for &k in &degrees {
        let rows = z.summands(k + 1).len();
        let cols = x.summands(k).len();
        let mut defect = AlgMatrix::zero(rows, cols);
        if let Some(dx) = x.diff(k) {
            let fk1 = components.get(&(k + 1)).cloned().unwrap_or_else(|| {
                AlgMatrix::zero(z.summands(k + 1).len(), x.summands(k + 1).len())
            });
            defect = defect.add(&dx.then(alg, &fk1));
        }
        if let Some(dz) = z.diff(k) {
            let fk = components.get(&k).cloned().unwrap_or_else(|| {
                AlgMatrix::zero(z.summands(k).len(), x.summands(k).len())
            });
            defect = defect.add(&fk.then(alg, dz).neg());
        }
        cells.insert(k, defect);
    }
    eq_layout.flatten(alg, &cells)
}

/// Equation coordinates: cells `(degree k, row in z^{k+1}, col in x^k)`
/// expanded over the path basis of each cell.
struct VarLayoutEq {
    degrees: Vec<i32>,
    coords: Vec<(i32, usize, usize, usize)>,
}

impl VarLayoutEq {
    fn build(alg: &BoundQuiverAlgebra, x: &ProjComplex, z: &ProjComplex) -> VarLayoutEq {
        let mut degrees: Vec<i32> = x.degrees();
        for k in z.degrees() {
            degrees.push(k - 1);
        }
        degrees.sort_unstable();
        degrees.dedup();
        let mut coords = Vec::new();
        for &k in &degrees {
            for (r, &rv) in z.summands(k + 1).iter().enumerate() {
                for (c, &cv) in x.summands(k).iter().enumerate() {
                    for idx in alg.paths_between(rv, cv) {
                        coords.push((k, r, c, idx));
                    }
                }
            }
        }
        VarLayoutEq { degrees, coords }
    }

    fn flatten(&self, alg: &BoundQuiverAlgebra, cells: &BTreeMap<i32, AlgMatrix>) -> Vec<Scalar> {
        self.coords
            .iter()
            .map(|(k, r, c, idx)| {
                cells
                    .get(k)
                    .and_then(|m| {
                        m.get(*r, *c).terms.iter().find(|(i, _)| i == idx).map(|(_, s)| s.clone())
                    })
                    .unwrap_or_else(|| alg.field().zero())
            })
            .collect()
    }
}

/// `Hom_K(x, Σ^i y)` between complexes of projectives.
pub fn hom_upto_homotopy(
    alg: &BoundQuiverAlgebra,
    x: &ProjComplex,
    y: &ProjComplex,
    shift: i32,
) -> HomClasses {
    let field = alg.field();
    let z = y.shift(alg, shift);
    let layout = VarLayout::build(alg, x, &z);
    let eq_layout = VarLayoutEq::build(alg, x, &z);
    let nvars = layout.len();
    // chain-map solution space
    let mut defect_cols: Vec<Vec<Scalar>> = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let mut coords = vec![field.zero(); nvars];
        coords[i] = field.one();
        let comps = layout.to_components(alg, x, &z, &coords);
        defect_cols.push(chain_defect(alg, x, &z, &comps, &eq_layout));
    }
    let eq_rows = eq_layout.coords.len();
    let mut system = Matrix::zero(field, eq_rows, nvars);
    for (c, col) in defect_cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            system.set(r, c, v.clone());
        }
    }
    let solutions = system.kernel_basis();
    // null-homotopic subspace: d_z ∘ h + h ∘ d_x over homotopy unknowns
    let hz = z.shift(alg, -1); // h_k : x^k -> z^{k-1} is a degree-(-1) map
    let h_layout = VarLayout::build(alg, x, &hz);
    let mut homotopies = Subspace::zero(field, nvars);
    for i in 0..h_layout.len() {
        let mut coords = vec![field.zero(); h_layout.len()];
        coords[i] = field.one();
        let h_comps = h_layout.to_components(alg, x, &hz, &coords);
        // boundary(h)_k = d_z^{k-1} ∘ h_k + h_{k+1} ∘ d_x^k
        let mut boundary: BTreeMap<i32, AlgMatrix> = BTreeMap::new();
        for &k in &x.degrees() {
            let rows = z.summands(k).len();
            let cols = x.summands(k).len();
            if rows == 0 || cols == 0 {
                continue;
            }
            let mut b = AlgMatrix::zero(rows, cols);
            if let Some(hk) = h_comps.get(&k) {
                if let Some(dz) = z.diff(k - 1) {
                    b = b.add(&hk.then(alg, dz));
                }
            }
            if let Some(dx) = x.diff(k) {
                if let Some(hk1) = h_comps.get(&(k + 1)) {
                    b = b.add(&dx.then(alg, hk1));
                }
            }
            if !b.is_zero() {
                boundary.insert(k, b);
            }
        }
        let flat = layout.components_to_coords(alg, &boundary);
        if !vec_is_zero(&flat) {
            homotopies.insert(&flat);
        }
    }
    // classes: solution columns modulo homotopies, canonical representatives
    let mut span = homotopies.clone();
    let mut basis = Vec::new();
    let mut basis_coords = Vec::new();
    for c in 0..solutions.cols {
        let col = solutions.col(c);
        let reduced = homotopies.reduce(&col);
        if span.insert(&reduced) {
            let comps = layout.to_components(alg, x, &z, &reduced);
            basis.push(ChainMap { source: x.clone(), target: z.clone(), components: comps });
            basis_coords.push(reduced);
        }
    }
    HomClasses {
        dim: basis.len(),
        basis,
        basis_coords,
        layout,
        homotopies,
        shifted_target: z,
        source: x.clone(),
    }
}

impl HomClasses {
    /// Canonical coordinates of an arbitrary chain map `source -> shifted
    /// target` modulo homotopy.
    pub fn reduce(&self, alg: &BoundQuiverAlgebra, f: &ChainMap) -> Vec<Scalar> {
        let flat = self.layout.components_to_coords(alg, &f.components);
        self.homotopies.reduce(&flat)
    }

    /// Expresses canonical coordinates in the class basis.
    pub fn in_basis(&self, alg: &BoundQuiverAlgebra, reduced: &[Scalar]) -> Vec<Scalar> {
        let field = alg.field();
        if self.basis_coords.is_empty() {
            assert!(vec_is_zero(reduced), "nonzero class outside the basis span");
            return Vec::new();
        }
        let n = reduced.len();
        let mut m = Matrix::zero(field, n, self.basis_coords.len());
        for (c, b) in self.basis_coords.iter().enumerate() {
            for (r, v) in b.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        let rhs = Matrix::from_rows(field, reduced.iter().map(|v| vec![v.clone()]).collect());
        let sol = m.solve(&rhs).expect("shape").expect("class lies in the span");
        sol.col(0)
    }

    pub fn shifted_target(&self) -> &ProjComplex {
        &self.shifted_target
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }
}

/// A realized complex of arbitrary representations (targets of Hom
/// computations from complexes of projectives).
pub struct RealizedComplex {
    pub terms: BTreeMap<i32, Representation>,
    pub diffs: BTreeMap<i32, ModMorphism>,
}

impl RealizedComplex {
    pub fn stalk(alg: &BoundQuiverAlgebra, m: &Representation, degree: i32) -> RealizedComplex {
        let _ = alg;
        let mut terms = BTreeMap::new();
        terms.insert(degree, m.clone());
        RealizedComplex { terms, diffs: BTreeMap::new() }
    }

    fn term(&self, alg: &BoundQuiverAlgebra, k: i32) -> Representation {
        self.terms.get(&k).cloned().unwrap_or_else(|| Representation::zero(alg))
    }

    /// Shift by `i`, negating differentials per unit.
    pub fn shift(&self, alg: &BoundQuiverAlgebra, i: i32) -> RealizedComplex {
        let sign = if i.rem_euclid(2) == 0 {
            alg.field().one()
        } else {
            alg.field().one().neg()
        };
        let terms = self.terms.iter().map(|(&k, v)| (k - i, v.clone())).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&k, d)| (k - i, d.scale(&sign)))
            .collect();
        RealizedComplex { terms, diffs }
    }
}

/// `dim Hom_D(x, Σ^shift y)` for a complex of projectives against a realized
/// complex, together with a basis in flattened generator coordinates.
pub fn hom_into_realized(
    alg: &BoundQuiverAlgebra,
    x: &ProjComplex,
    y: &RealizedComplex,
    shift: i32,
) -> (usize, Vec<Vec<Scalar>>) {
    let field = alg.field();
    let z = y.shift(alg, shift);
    // realize source terms once
    let degrees = x.degrees();
    let realized: BTreeMap<i32, RealizedProj> =
        degrees.iter().map(|&k| (k, x.realize_term(alg, k))).collect();
    // unknowns: generator coordinates of f_k per degree
    let mut var_offsets: BTreeMap<i32, usize> = BTreeMap::new();
    let mut total = 0usize;
    for &k in &degrees {
        var_offsets.insert(k, total);
        total += realized[&k].hom_dim(&z.term(alg, k));
    }
    // defect of a candidate: for each degree k, the generator coordinates of
    // d_z ∘ f_k - f_{k+1} ∘ d_x  in Hom(x^k, z^{k+1})
    let build = |coords: &[Scalar]| -> Vec<Scalar> {
        let mut maps: BTreeMap<i32, ModMorphism> = BTreeMap::new();
        for &k in &degrees {
            let rp = &realized[&k];
            let target = z.term(alg, k);
            let dimk = rp.hom_dim(&target);
            let off = var_offsets[&k];
            let gens = rp.split_coords(&target, &coords[off..off + dimk]);
            maps.insert(k, rp.hom_from_generators(alg, &target, &gens));
        }
        let mut defect = Vec::new();
        for &k in &degrees {
            let rp = &realized[&k];
            let next_target = z.term(alg, k + 1);
            let mut acc = ModMorphism::zero(alg, &rp.rep, &next_target);
            if let Some(dz) = z.diffs.get(&k) {
                acc = acc.add(&ModMorphism::compose(dz, &maps[&k]));
            }
            if let Some(fk1) = maps.get(&(k + 1)) {
                if let Some(dx) = x.diff(k) {
                    let next_rp = &realized[&(k + 1)];
                    let dx_m = alg_matrix_to_morphism(alg, rp, next_rp, dx);
                    acc = acc.add(&ModMorphism::compose(fk1, &dx_m).neg());
                }
            }
            defect.extend(rp.flatten_coords(&rp.generator_coords(alg, &acc)));
        }
        defect
    };
    let mut system_cols = Vec::with_capacity(total);
    for i in 0..total {
        let mut coords = vec![field.zero(); total];
        coords[i] = field.one();
        system_cols.push(build(&coords));
    }
    let eq_rows = system_cols.first().map_or(0, Vec::len);
    let mut system = Matrix::zero(field, eq_rows, total);
    for (c, col) in system_cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            system.set(r, c, v.clone());
        }
    }
    let solutions = system.kernel_basis();
    // homotopies h_k : x^k -> z^{k-1}
    let mut homotopies = Subspace::zero(field, total);
    for &k in &degrees {
        let rp = &realized[&k];
        let h_target = z.term(alg, k - 1);
        let hdim = rp.hom_dim(&h_target);
        for i in 0..hdim {
            let mut hco = vec![field.zero(); hdim];
            hco[i] = field.one();
            let gens = rp.split_coords(&h_target, &hco);
            let h = rp.hom_from_generators(alg, &h_target, &gens);
            // boundary contributes d_z ∘ h at degree k and h ∘ d_x at k-1
            let mut flat = vec![field.zero(); total];
            if let Some(dz) = z.diffs.get(&(k - 1)) {
                let part = ModMorphism::compose(dz, &h);
                let off = var_offsets[&k];
                let coords = rp.flatten_coords(&rp.generator_coords(alg, &part));
                for (j, v) in coords.into_iter().enumerate() {
                    flat[off + j] = flat[off + j].add(&v);
                }
            }
            if let Some(&off) = var_offsets.get(&(k - 1)) {
                if let Some(dx) = x.diff(k - 1) {
                    let prev_rp = &realized[&(k - 1)];
                    let dx_m = alg_matrix_to_morphism(alg, prev_rp, rp, dx);
                    let part = ModMorphism::compose(&h, &dx_m);
                    let coords =
                        prev_rp.flatten_coords(&prev_rp.generator_coords(alg, &part));
                    for (j, v) in coords.into_iter().enumerate() {
                        flat[off + j] = flat[off + j].add(&v);
                    }
                }
            }
            if !vec_is_zero(&flat) {
                homotopies.insert(&flat);
            }
        }
    }
    let mut span = homotopies.clone();
    let mut basis = Vec::new();
    for c in 0..solutions.cols {
        let col = solutions.col(c);
        let reduced = homotopies.reduce(&col);
        if span.insert(&reduced) {
            basis.push(reduced);
        }
    }
    (basis.len(), basis)
}

pub fn hom_to_module_dim(
    alg: &BoundQuiverAlgebra,
    x: &ProjComplex,
    m: &Representation,
    shift: i32,
) -> usize {
    hom_into_realized(alg, x, &RealizedComplex::stalk(alg, m, 0), shift).0
}

/// Converts a stabilized minimal resolution into a bounded complex of
/// projectives quasi-isomorphic to the module (degrees `-len..0`).
pub fn resolution_to_complex(
    alg: &BoundQuiverAlgebra,
    res: &ProjResolution,
) -> Option<ProjComplex> {
    if !res.stabilized {
        return None;
    }
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for (k, term) in res.terms.iter().enumerate() {
        if !term.summands.is_empty() {
            terms.insert(-(k as i32), term.summands.clone());
        }
    }
    for (k, d) in res.diffs.iter().enumerate() {
        // d : terms[k+1] -> terms[k] lives in degree -(k+1) -> -k
        let m = morphism_to_alg_matrix(alg, &res.terms[k + 1], &res.terms[k], d);
        if !m.is_zero() {
            diffs.insert(-(k as i32 + 1), m);
        }
    }
    Some(ProjComplex { terms, diffs })
}

/// Report of the two-term silting checks for a finite list of complexes.
#[derive(Debug, Clone)]
pub struct SiltingReport {
    pub two_term: bool,
    pub presilting: bool,
    pub generating: bool,
    /// `i -> dim Hom(P, Σ^i P)` for negative shifts (only `-1` can be nonzero)
    pub neg_self_homs: BTreeMap<i32, usize>,
    /// positive self-Hom dimensions actually computed (1 through 3)
    pub pos_self_homs: BTreeMap<i32, usize>,
    /// per-simple Hom dimensions at shifts 0 and 1, in vertex order
    pub generating_table: Vec<(String, usize, usize)>,
    pub failures: Vec<String>,
    pub caveats: Vec<String>,
}

impl SiltingReport {
    pub fn is_silting(&self) -> bool {
        self.two_term && self.presilting && self.generating
    }
}

/// Checks the two-term silting conditions for the additive hull of the given
/// complexes: degree support, vanishing against shifted simples outside
/// {0, 1}, positive self-Hom vanishing, and generation checked on simples.
pub fn silting_check(
    alg: &BoundQuiverAlgebra,
    p: &[ProjComplex],
) -> Result<SiltingReport, ComplexError> {
    for c in p {
        c.validate(alg)?;
        if !c.is_two_term() {
            return Err(ComplexError::OutsideTwoTerm);
        }
    }
    let mut failures = Vec::new();
    let caveats = vec![
        String::from("contravariant finiteness holds automatically for a finite summand list"),
        String::from("generation is checked on simple modules (devissage reduction)"),
        String::from(
            "self-Hom vanishing for |shift| >= 3 holds by degree support and is asserted by the computed shift-3 row",
        ),
    ];
    let nv = alg.vertex_count();
    // two-term: Hom(P, Σ^i S) = 0 for shifts outside {0, 1}; beyond the
    // computed window both sides of any component miss each other in degree
    let mut two_term = true;
    for v in 0..nv {
        let s = Representation::simple(alg, v);
        for i in [-2, -1, 2, 3] {
            let d: usize = p.iter().map(|c| hom_to_module_dim(alg, c, &s, i)).sum();
            if d != 0 {
                two_term = false;
                failures.push(format!(
                    "Hom(P, Σ^{} S_{}) has dimension {}",
                    i,
                    alg.quiver().vertex_name(v),
                    d
                ));
            }
        }
    }
    // presilting: positive self-Homs vanish
    let mut pos_self_homs = BTreeMap::new();
    for i in 1..=3 {
        let mut d = 0usize;
        for a in p {
            for b in p {
                d += hom_upto_homotopy(alg, a, b, i).dim;
            }
        }
        pos_self_homs.insert(i, d);
        if d != 0 {
            failures.push(format!("Hom(P, Σ^{i} P) has dimension {d}"));
        }
    }
    let presilting = (1..=3).all(|i| pos_self_homs[&i] == 0);
    // generating on simples: some shift in {0, 1} sees the simple
    let mut generating = true;
    let mut generating_table = Vec::new();
    for v in 0..nv {
        let s = Representation::simple(alg, v);
        let d0: usize = p.iter().map(|c| hom_to_module_dim(alg, c, &s, 0)).sum();
        let d1: usize = p.iter().map(|c| hom_to_module_dim(alg, c, &s, 1)).sum();
        generating_table.push((String::from(alg.quiver().vertex_name(v)), d0, d1));
        if d0 == 0 && d1 == 0 {
            generating = false;
            failures.push(format!(
                "no shift of S_{} receives a nonzero map from P",
                alg.quiver().vertex_name(v)
            ));
        }
    }
    let mut neg_self_homs = BTreeMap::new();
    for i in [-2, -1] {
        let mut d = 0usize;
        for a in p {
            for b in p {
                d += hom_upto_homotopy(alg, a, b, i).dim;
            }
        }
        neg_self_homs.insert(i, d);
    }
    Ok(SiltingReport {
        two_term,
        presilting,
        generating,
        neg_self_homs,
        pos_self_homs,
        generating_table,
        failures,
        caveats,
    })
}

/// The endomorphism algebra of `⊕ p` in the homotopy category: a basis of
/// Hom classes between summands with composition structure constants.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    pub dim: usize,
    /// `(from summand, to summand, class index)` per basis element
    pub basis_labels: Vec<(usize, usize, usize)>,
    /// structure constants: `table[i][j]` expands `basis[i] · basis[j]`
    /// (apply `j` first)
    pub table: Vec<Vec<Vec<(usize, Scalar)>>>,
    /// identity element in basis coordinates
    pub identity: Vec<(usize, Scalar)>,
}

pub fn endo_algebra(alg: &BoundQuiverAlgebra, p: &[ProjComplex]) -> EndoAlgebra {
    let n = p.len();
    let mut hom: BTreeMap<(usize, usize), HomClasses> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            hom.insert((i, j), hom_upto_homotopy(alg, &p[i], &p[j], 0));
        }
    }
    let mut basis_labels = Vec::new();
    let mut offsets: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            offsets.insert((i, j), basis_labels.len());
            for k in 0..hom[&(i, j)].dim {
                basis_labels.push((i, j, k));
            }
        }
    }
    let dim = basis_labels.len();
    // identity = sum of identity classes of the diagonal cells
    let mut identity = Vec::new();
    for i in 0..n {
        let cell = &hom[&(i, i)];
        let id = ChainMap::identity(alg, &p[i]);
        let reduced = cell.reduce(alg, &id);
        for (k, c) in cell.in_basis(alg, &reduced).into_iter().enumerate() {
            if !c.is_zero() {
                identity.push((offsets[&(i, i)] + k, c));
            }
        }
    }
    // structure constants
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (xi, &(j1, k1, a1)) in basis_labels.iter().enumerate() {
        for (yi, &(j2, k2, a2)) in basis_labels.iter().enumerate() {
            // x: j1 -> k1, y: j2 -> k2; x·y applies y first, needs k2 == j1
            if k2 != j1 {
                continue;
            }
            let f = &hom[&(j2, k2)].basis[a2];
            let g = &hom[&(j1, k1)].basis[a1];
            let comp = f.then(alg, g);
            let cell = &hom[&(j2, k1)];
            let reduced = cell.reduce(alg, &comp);
            let coords = cell.in_basis(alg, &reduced);
            let off = offsets[&(j2, k1)];
            table[xi][yi] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (off + k, c))
                .collect();
        }
    }
    EndoAlgebra { dim, basis_labels, table, identity }
}

impl EndoAlgebra {
    /// `x · 1 = x` and `1 · x = x` for every basis element.
    pub fn identity_law_holds(&self, alg: &BoundQuiverAlgebra) -> bool {
        let field = alg.field();
        for x in 0..self.dim {
            for (side, _) in [(0, ()), (1, ())] {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (e, c) in &self.identity {
                    let prod = if side == 0 { &self.table[x][*e] } else { &self.table[*e][x] };
                    for (k, s) in prod {
                        let v = acc.entry(*k).or_insert_with(|| field.zero());
                        *v = v.add(&c.mul(s));
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                let expected: BTreeMap<usize, Scalar> =
                    BTreeMap::from([(x, field.one())]);
                if acc != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Bilinear associativity over all compatible basis triples.
    pub fn is_associative(&self, alg: &BoundQuiverAlgebra) -> bool {
        let field = alg.field();
        let mul = |a: &[(usize, Scalar)], b: &[(usize, Scalar)]| -> BTreeMap<usize, Scalar> {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, ci) in a {
                for (j, cj) in b {
                    for (k, s) in &self.table[*i][*j] {
                        let v = acc.entry(*k).or_insert_with(|| field.zero());
                        *v = v.add(&ci.mul(cj).mul(s));
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc
        };
        for x in 0..self.dim {
            for y in 0..self.dim {
                for z in 0..self.dim {
                    let xy = self.table[x][y].clone();
                    let yz = self.table[y][z].clone();
                    let left = mul(&xy, &[(z, field.one())]);
                    let right = mul(&[(x, field.one())], &yz);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::ext_dim;
    use crate::field::Field;
    use crate::resolution::minimal_resolution;
    use crate::testutil::{a2, a2_silting, interval, nakayama6, nakayama6_silting};

    #[test]
    fn shift_round_trip() {
        let alg = nakayama6(Field::Rationals);
        for c in nakayama6_silting(&alg) {
            let back = c.shift(&alg, 1).shift(&alg, -1);
            assert_eq!(back, c);
        }
    }

    #[test]
    fn fixture_complexes_validate() {
        let alg = nakayama6(Field::Rationals);
        for c in nakayama6_silting(&alg) {
            c.validate(&alg).unwrap();
        }
        // a bad entry: P_2 -> P_1 labelled with a path of the wrong support
        let idx = alg.path_index(1, &[1]).unwrap(); // path b out of vertex 2
        let mut m = AlgMatrix::zero(1, 1);
        m.set(0, 0, AlgebraElement::basis_element(&alg, idx));
        let bad = ProjComplex::two_term(vec![1], vec![0], m);
        assert!(matches!(
            bad.validate(&alg),
            Err(ComplexError::BadEntrySupport { .. })
        ));
    }

    #[test]
    fn self_hom_of_stalk_projective() {
        // endomorphisms of P_1 in degree 0 = paths from vertex 1 to itself
        let alg = a2(Field::Rationals);
        let p1 = ProjComplex::stalk_projective(0, 0);
        assert_eq!(hom_upto_homotopy(&alg, &p1, &p1, 0).dim, 1);
        // disjoint supports after shifting
        assert_eq!(hom_upto_homotopy(&alg, &p1, &p1, 5).dim, 0);
        assert_eq!(hom_upto_homotopy(&alg, &p1, &p1, -1).dim, 0);
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let alg = a2(Field::Rationals);
        let c2 = a2_silting(&alg).pop().unwrap();
        let id = ChainMap::identity(&alg, &c2);
        let cn = cone(&alg, &id);
        // contractible in every shift, against itself and against others
        for i in -2..=2 {
            assert_eq!(hom_upto_homotopy(&alg, &cn, &cn, i).dim, 0);
            assert_eq!(hom_upto_homotopy(&alg, &cn, &c2, i).dim, 0);
            assert_eq!(hom_upto_homotopy(&alg, &c2, &cn, i).dim, 0);
        }
    }

    #[test]
    fn cone_computes_cohomology() {
        // cone of the stalk map P_2 -> P_1 has H^{-1} = 0 and H^0 = S_1
        let alg = a2(Field::Rationals);
        let p2 = ProjComplex::stalk_projective(1, 0);
        let p1 = ProjComplex::stalk_projective(0, 0);
        let mut comp = BTreeMap::new();
        let mut m = AlgMatrix::zero(1, 1);
        m.set(0, 0, AlgebraElement::basis_element(&alg, alg.path_index(0, &[0]).unwrap()));
        comp.insert(0, m);
        let f = ChainMap { source: p2, target: p1, components: comp };
        f.validate(&alg).unwrap();
        let cn = cone(&alg, &f);
        assert!(complex_cohomology(&alg, &cn, -1).is_zero());
        let h0 = complex_cohomology(&alg, &cn, 0);
        assert_eq!(h0.dims, vec![1, 0]);
        assert!(complex_cohomology(&alg, &cn, 1).is_zero());
    }

    #[test]
    fn fixture_summand_cohomology() {
        // (P_2 -> P_1) over the Nakayama algebra: cba = 0 puts cb and dcb in
        // the kernel, so H^{-1} is the interval [4,5]; the cokernel is the
        // simple at vertex 1
        let alg = nakayama6(Field::Rationals);
        let c2 = nakayama6_silting(&alg)[1].clone();
        let hm1 = complex_cohomology(&alg, &c2, -1);
        assert_eq!(hm1.dims, vec![0, 0, 0, 1, 1, 0]);
        let h0 = complex_cohomology(&alg, &c2, 0);
        assert_eq!(h0.dims, vec![1, 0, 0, 0, 0, 0]);
        let zero = ProjComplex::empty();
        assert!(complex_cohomology(&alg, &zero, 0).is_zero());
        let stalk = ProjComplex::stalk_projective(0, 0);
        assert_eq!(complex_cohomology(&alg, &stalk, 0).dims, alg.projective(0).dims);
    }

    #[test]
    fn negative_self_hom_of_silting_fixture() {
        // the four maps P_4 -> P_3 (c), P_4 -> P_2 (cb), P_5 -> P_3 (dc),
        // P_5 -> P_2 (dcb) kill both differentials thanks to cba = edc = 0
        let alg = nakayama6(Field::Rationals);
        let p = nakayama6_silting(&alg);
        let mut total = 0usize;
        for a in &p {
            for b in &p {
                total += hom_upto_homotopy(&alg, a, b, -1).dim;
            }
        }
        assert_eq!(total, 4);
    }

    #[test]
    fn silting_check_fixture() {
        let alg = nakayama6(Field::Rationals);
        let p = nakayama6_silting(&alg);
        let report = silting_check(&alg, &p).unwrap();
        assert!(report.two_term);
        assert!(report.presilting);
        assert!(report.generating);
        assert!(report.is_silting());
        assert_eq!(report.neg_self_homs[&-1], 4);
        assert_eq!(report.neg_self_homs[&-2], 0);
    }

    #[test]
    fn silting_check_stalk_projectives() {
        let alg = nakayama6(Field::Rationals);
        let p: Vec<ProjComplex> =
            (0..6).map(|v| ProjComplex::stalk_projective(v, 0)).collect();
        let report = silting_check(&alg, &p).unwrap();
        assert!(report.is_silting());
        assert_eq!(report.neg_self_homs[&-1], 0);
    }

    #[test]
    fn lone_shifted_projective_does_not_generate() {
        let alg = nakayama6(Field::Rationals);
        let p = vec![ProjComplex::stalk_projective(5, -1)];
        let report = silting_check(&alg, &p).unwrap();
        assert!(!report.generating);
        assert!(report.presilting);
    }

    #[test]
    fn endo_of_stalk_projectives_recovers_algebra_dim() {
        let alg = nakayama6(Field::Rationals);
        let p: Vec<ProjComplex> =
            (0..6).map(|v| ProjComplex::stalk_projective(v, 0)).collect();
        let endo = endo_algebra(&alg, &p);
        assert_eq!(endo.dim, 16);
        assert!(endo.identity_law_holds(&alg));
        assert!(endo.is_associative(&alg));
    }

    #[test]
    fn endo_of_single_stalk_over_a2() {
        let alg = a2(Field::Rationals);
        let p = vec![ProjComplex::stalk_projective(0, 0)];
        let endo = endo_algebra(&alg, &p);
        assert_eq!(endo.dim, 1);
        assert!(endo.identity_law_holds(&alg));
    }

    #[test]
    fn silting_fixture_pipeline_over_f2() {
        // the fixture algebra is monomial, so every dimension in the
        // pipeline agrees with the rational computation
        let alg = nakayama6(Field::prime(2).unwrap());
        let p = nakayama6_silting(&alg);
        let report = silting_check(&alg, &p).unwrap();
        assert!(report.is_silting());
        assert_eq!(report.neg_self_homs[&-1], 4);
        let endo = endo_algebra(&alg, &p);
        assert!(endo.identity_law_holds(&alg));
        assert!(endo.is_associative(&alg));
    }

    #[test]
    fn derived_hom_matches_ext_on_a2() {
        let alg = a2(Field::Rationals);
        let mods = [
            interval(&alg, 0, 0),
            interval(&alg, 1, 1),
            interval(&alg, 0, 1),
        ];
        for x in &mods {
            for y in &mods {
                let rx = resolution_to_complex(&alg, &minimal_resolution(&alg, x, 8)).unwrap();
                let ry = resolution_to_complex(&alg, &minimal_resolution(&alg, y, 8)).unwrap();
                for n in 0..=2i32 {
                    assert_eq!(
                        hom_upto_homotopy(&alg, &rx, &ry, n).dim,
                        ext_dim(&alg, x, y, n as usize),
                        "mismatch at degree {n}"
                    );
                }
                assert_eq!(hom_upto_homotopy(&alg, &rx, &ry, -1).dim, 0);
            }
        }
    }

    #[test]
    fn hom_to_stalk_matches_module_homs() {
        let alg = nakayama6(Field::Rationals);
        let x = interval(&alg, 1, 3); // [2,3,4]
        let res = minimal_resolution(&alg, &x, 8);
        let rx = resolution_to_complex(&alg, &res).unwrap();
        for y in [interval(&alg, 1, 2), interval(&alg, 3, 5), interval(&alg, 0, 2)] {
            assert_eq!(
                hom_to_module_dim(&alg, &rx, &y, 0),
                crate::rep::hom_dim(&alg, &x, &y)
            );
            assert_eq!(
                hom_to_module_dim(&alg, &rx, &y, 1),
                ext_dim(&alg, &x, &y, 1)
            );
        }
    }
}
