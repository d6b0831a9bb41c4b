//! Finite dimensional left modules over a bound quiver algebra, presented as
//! covariant representations: one matrix per arrow.
//!
//! A subobject is always carried around as a pair (representation, inclusion
//! morphism), never as a raw subspace, so downstream computations stay
//! basis-independent. Kernels, images and cokernels are computed vertexwise
//! and their arrow maps are recovered by solving against the inclusion or
//! projection, which exists and is unique by the universal property.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::algebra::BoundQuiverAlgebra;
use crate::field::Scalar;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("expected {expected} dimension entries / arrow maps, got {got}")]
    WrongShape { expected: usize, got: usize },
    #[error("arrow `{arrow}` map has shape {rows}x{cols}, expected {want_rows}x{want_cols}")]
    BadMapShape {
        arrow: String,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("relation {0} does not vanish on the representation")]
    RelationViolated(usize),
    #[error("morphism blocks do not intertwine the arrow maps at arrow `{0}`")]
    NotAMorphism(String),
}

/// A representation: `dims[v]` per vertex and a `dims[target] x dims[source]`
/// matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn zero(alg: &BoundQuiverAlgebra) -> Representation {
        let dims = vec![0; alg.vertex_count()];
        let maps = (0..alg.quiver().arrow_count())
            .map(|_| Matrix::zero(alg.field(), 0, 0))
            .collect();
        Representation { dims, maps }
    }

    /// The simple module concentrated at one vertex.
    pub fn simple(alg: &BoundQuiverAlgebra, v: usize) -> Representation {
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        let q = alg.quiver();
        let maps = (0..q.arrow_count())
            .map(|a| Matrix::zero(alg.field(), dims[q.target(a)], dims[q.source(a)]))
            .collect();
        Representation { dims, maps }
    }

    pub fn new(
        alg: &BoundQuiverAlgebra,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation, RepError> {
        if dims.len() != alg.vertex_count() {
            return Err(RepError::WrongShape { expected: alg.vertex_count(), got: dims.len() });
        }
        if maps.len() != alg.quiver().arrow_count() {
            return Err(RepError::WrongShape {
                expected: alg.quiver().arrow_count(),
                got: maps.len(),
            });
        }
        let rep = Representation { dims, maps };
        rep.validate(alg)?;
        Ok(rep)
    }

    pub fn validate(&self, alg: &BoundQuiverAlgebra) -> Result<(), RepError> {
        let q = alg.quiver();
        for a in 0..q.arrow_count() {
            let m = &self.maps[a];
            let (wr, wc) = (self.dims[q.target(a)], self.dims[q.source(a)]);
            if m.rows != wr || m.cols != wc {
                return Err(RepError::BadMapShape {
                    arrow: q.arrow_name(a).into(),
                    rows: m.rows,
                    cols: m.cols,
                    want_rows: wr,
                    want_cols: wc,
                });
            }
        }
        for (i, rel) in alg.relations().iter().enumerate() {
            let src = q_word_source(alg, &rel.terms[0].1);
            let tgt = q_word_target(alg, &rel.terms[0].1);
            let mut acc = Matrix::zero(alg.field(), self.dims[tgt], self.dims[src]);
            for (c, word) in &rel.terms {
                acc = acc.add(&self.path_action(alg, src, word).scale(c));
            }
            if !acc.is_zero() {
                return Err(RepError::RelationViolated(i));
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Composite arrow action along a word (application order) out of `source`.
    pub fn path_action(&self, alg: &BoundQuiverAlgebra, source: usize, word: &[usize]) -> Matrix {
        let mut m = Matrix::identity(alg.field(), self.dims[source]);
        for &a in word {
            m = self.maps[a].mul(&m);
        }
        m
    }
}

fn q_word_source(alg: &BoundQuiverAlgebra, word: &[usize]) -> usize {
    alg.quiver().source(word[0])
}

fn q_word_target(alg: &BoundQuiverAlgebra, word: &[usize]) -> usize {
    alg.quiver().target(*word.last().unwrap())
}

impl BoundQuiverAlgebra {
    /// The indecomposable projective at a vertex: paths out of `v` with the
    /// arrows acting by composition.
    pub fn projective(&self, v: usize) -> Representation {
        let q = self.quiver();
        let per_vertex: Vec<Vec<usize>> =
            (0..q.vertex_count()).map(|j| self.paths_between(v, j)).collect();
        let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for a in 0..q.arrow_count() {
            let (i, j) = (q.source(a), q.target(a));
            let mut m = Matrix::zero(self.field(), dims[j], dims[i]);
            for (col, &p_idx) in per_vertex[i].iter().enumerate() {
                let path = &self.basis()[p_idx];
                let mut word = path.arrows.clone();
                word.push(a);
                let product = self.reduce_word(v, &word);
                for (k, coeff) in &product.terms {
                    let row = per_vertex[j]
                        .iter()
                        .position(|idx| idx == k)
                        .expect("reduced path stays in the source-v basis");
                    m.set(row, col, coeff.clone());
                }
            }
            maps.push(m);
        }
        Representation { dims, maps }
    }
}

/// A module homomorphism: one block per vertex intertwining the arrow maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMorphism {
    pub source: Representation,
    pub target: Representation,
    pub blocks: Vec<Matrix>,
}

impl ModMorphism {
    pub fn new(
        alg: &BoundQuiverAlgebra,
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<ModMorphism, RepError> {
        let f = ModMorphism { source, target, blocks };
        f.validate(alg)?;
        Ok(f)
    }

    pub fn validate(&self, alg: &BoundQuiverAlgebra) -> Result<(), RepError> {
        let q = alg.quiver();
        for a in 0..q.arrow_count() {
            let (i, j) = (q.source(a), q.target(a));
            let lhs = self.blocks[j].mul(&self.source.maps[a]);
            let rhs = self.target.maps[a].mul(&self.blocks[i]);
            if lhs != rhs {
                return Err(RepError::NotAMorphism(q.arrow_name(a).into()));
            }
        }
        Ok(())
    }

    pub fn identity(alg: &BoundQuiverAlgebra, x: &Representation) -> ModMorphism {
        let blocks = x.dims.iter().map(|&d| Matrix::identity(alg.field(), d)).collect();
        ModMorphism { source: x.clone(), target: x.clone(), blocks }
    }

    pub fn zero(alg: &BoundQuiverAlgebra, x: &Representation, y: &Representation) -> ModMorphism {
        let blocks = x
            .dims
            .iter()
            .zip(&y.dims)
            .map(|(&sx, &sy)| Matrix::zero(alg.field(), sy, sx))
            .collect();
        ModMorphism { source: x.clone(), target: y.clone(), blocks }
    }

    /// `after ∘ before`.
    pub fn compose(after: &ModMorphism, before: &ModMorphism) -> ModMorphism {
        debug_assert_eq!(before.target.dims, after.source.dims);
        let blocks = after
            .blocks
            .iter()
            .zip(&before.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        ModMorphism { source: before.source.clone(), target: after.target.clone(), blocks }
    }

    pub fn add(&self, other: &ModMorphism) -> ModMorphism {
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModMorphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, s: &Scalar) -> ModMorphism {
        let blocks = self.blocks.iter().map(|b| b.scale(s)).collect();
        ModMorphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn neg(&self) -> ModMorphism {
        let blocks = self.blocks.iter().map(Matrix::neg).collect();
        ModMorphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.blocks.iter().enumerate().all(|(v, b)| b.rank() == self.source.dims[v])
    }

    pub fn is_epi(&self) -> bool {
        self.blocks.iter().enumerate().all(|(v, b)| b.rank() == self.target.dims[v])
    }

    pub fn is_invertible(&self) -> bool {
        self.source.dims == self.target.dims && self.is_mono() && self.is_epi()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.blocks[v].rank()
    }
}

/// A basis of the space of module homomorphisms `x -> y`, obtained as the
/// kernel of the intertwining system. Deterministic: unknowns are ordered by
/// (vertex, row, column) and the kernel basis follows free-column order.
pub fn hom_space(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
) -> Vec<ModMorphism> {
    let field = alg.field();
    let q = alg.quiver();
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0usize;
    for v in 0..nv {
        offsets.push(total);
        total += y.dims[v] * x.dims[v];
    }
    let mut eq_rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..q.arrow_count() {
        let (i, j) = (q.source(a), q.target(a));
        // f_j * X_a - Y_a * f_i = 0, one scalar equation per (r, c)
        for r in 0..y.dims[j] {
            for c in 0..x.dims[i] {
                let mut row = vec![field.zero(); total];
                for k in 0..x.dims[j] {
                    let coeff = x.maps[a].get(k, c);
                    if !coeff.is_zero() {
                        let idx = offsets[j] + r * x.dims[j] + k;
                        row[idx] = row[idx].add(coeff);
                    }
                }
                for k in 0..y.dims[i] {
                    let coeff = y.maps[a].get(r, k);
                    if !coeff.is_zero() {
                        let idx = offsets[i] + k * x.dims[i] + c;
                        row[idx] = row[idx].sub(coeff);
                    }
                }
                eq_rows.push(row);
            }
        }
    }
    let system = if eq_rows.is_empty() {
        Matrix::zero(field, 0, total)
    } else {
        Matrix::from_rows(field, eq_rows)
    };
    let kernel = system.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.cols);
    for c in 0..kernel.cols {
        let flat = kernel.col(c);
        let mut blocks = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut b = Matrix::zero(field, y.dims[v], x.dims[v]);
            for r in 0..y.dims[v] {
                for cc in 0..x.dims[v] {
                    b.set(r, cc, flat[offsets[v] + r * x.dims[v] + cc].clone());
                }
            }
            blocks.push(b);
        }
        basis.push(ModMorphism { source: x.clone(), target: y.clone(), blocks });
    }
    basis
}

pub fn hom_dim(alg: &BoundQuiverAlgebra, x: &Representation, y: &Representation) -> usize {
    hom_space(alg, x, y).len()
}

fn induced_maps_through_mono(
    alg: &BoundQuiverAlgebra,
    incl_blocks: &[Matrix],
    dims: &[usize],
    ambient: &Representation,
) -> Representation {
    let q = alg.quiver();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in 0..q.arrow_count() {
        let (i, j) = (q.source(a), q.target(a));
        let rhs = ambient.maps[a].mul(&incl_blocks[i]);
        let m = incl_blocks[j]
            .solve(&rhs)
            .expect("shape")
            .expect("subspace is arrow-stable");
        maps.push(m);
    }
    Representation { dims: dims.to_vec(), maps }
}

/// Kernel with its canonical inclusion.
pub fn kernel(alg: &BoundQuiverAlgebra, f: &ModMorphism) -> (Representation, ModMorphism) {
    let incl_blocks: Vec<Matrix> = f.blocks.iter().map(Matrix::kernel_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(|b| b.cols).collect();
    let rep = induced_maps_through_mono(alg, &incl_blocks, &dims, &f.source);
    let incl = ModMorphism { source: rep.clone(), target: f.source.clone(), blocks: incl_blocks };
    (rep, incl)
}

/// Image with its inclusion into the target and the epi from the source.
pub fn image(
    alg: &BoundQuiverAlgebra,
    f: &ModMorphism,
) -> (Representation, ModMorphism, ModMorphism) {
    let incl_blocks: Vec<Matrix> = f.blocks.iter().map(Matrix::column_space_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(|b| b.cols).collect();
    let rep = induced_maps_through_mono(alg, &incl_blocks, &dims, &f.target);
    let epi_blocks: Vec<Matrix> = incl_blocks
        .iter()
        .zip(&f.blocks)
        .map(|(b, fb)| b.solve(fb).expect("shape").expect("image columns span"))
        .collect();
    let incl =
        ModMorphism { source: rep.clone(), target: f.target.clone(), blocks: incl_blocks };
    let epi = ModMorphism { source: f.source.clone(), target: rep.clone(), blocks: epi_blocks };
    (rep, incl, epi)
}

/// Cokernel with its canonical projection.
pub fn cokernel(alg: &BoundQuiverAlgebra, f: &ModMorphism) -> (Representation, ModMorphism) {
    let q = alg.quiver();
    // rows spanning the left null space of each block
    let proj_blocks: Vec<Matrix> =
        f.blocks.iter().map(|b| b.transpose().kernel_basis().transpose()).collect();
    let dims: Vec<usize> = proj_blocks.iter().map(|p| p.rows).collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in 0..q.arrow_count() {
        let (i, j) = (q.source(a), q.target(a));
        // c_a * proj_i = proj_j * Y_a, solved through the right-invertible proj_i
        let rhs = proj_blocks[j].mul(&f.target.maps[a]);
        let m = proj_blocks[i]
            .transpose()
            .solve(&rhs.transpose())
            .expect("shape")
            .expect("cokernel maps exist")
            .transpose();
        maps.push(m);
    }
    let rep = Representation { dims, maps };
    let proj = ModMorphism { source: f.target.clone(), target: rep.clone(), blocks: proj_blocks };
    (rep, proj)
}

/// Direct sum with injections and projections; dims add blockwise.
pub fn direct_sum(
    alg: &BoundQuiverAlgebra,
    xs: &[&Representation],
) -> (Representation, Vec<ModMorphism>, Vec<ModMorphism>) {
    let field = alg.field();
    let nv = alg.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| xs.iter().map(|x| x.dims[v]).sum()).collect();
    let q = alg.quiver();
    let maps: Vec<Matrix> = (0..q.arrow_count())
        .map(|a| {
            let blocks: Vec<&Matrix> = xs.iter().map(|x| &x.maps[a]).collect();
            if blocks.is_empty() {
                Matrix::zero(field, dims[q.target(a)], dims[q.source(a)])
            } else {
                Matrix::block_diag(field, &blocks)
            }
        })
        .collect();
    let sum = Representation { dims, maps };
    let mut injections = Vec::with_capacity(xs.len());
    let mut projections = Vec::with_capacity(xs.len());
    for (k, x) in xs.iter().enumerate() {
        let mut inj_blocks = Vec::with_capacity(nv);
        let mut proj_blocks = Vec::with_capacity(nv);
        for v in 0..nv {
            let before: usize = xs[..k].iter().map(|z| z.dims[v]).sum();
            let mut inj = Matrix::zero(field, sum.dims[v], x.dims[v]);
            let mut proj = Matrix::zero(field, x.dims[v], sum.dims[v]);
            for r in 0..x.dims[v] {
                inj.set(before + r, r, field.one());
                proj.set(r, before + r, field.one());
            }
            inj_blocks.push(inj);
            proj_blocks.push(proj);
        }
        injections.push(ModMorphism {
            source: (*x).clone(),
            target: sum.clone(),
            blocks: inj_blocks,
        });
        projections.push(ModMorphism {
            source: sum.clone(),
            target: (*x).clone(),
            blocks: proj_blocks,
        });
    }
    (sum, injections, projections)
}

/// `(f_1, ..., f_k): X -> Y_1 ⊕ ... ⊕ Y_k` for morphisms out of a common source.
pub fn tuple_morphism(alg: &BoundQuiverAlgebra, fs: &[&ModMorphism]) -> ModMorphism {
    assert!(!fs.is_empty());
    let targets: Vec<&Representation> = fs.iter().map(|f| &f.target).collect();
    let (sum, injections, _) = direct_sum(alg, &targets);
    let mut acc = ModMorphism::zero(alg, &fs[0].source, &sum);
    for (f, inj) in fs.iter().zip(&injections) {
        acc = acc.add(&ModMorphism::compose(inj, f));
    }
    acc
}

/// `[f_1, ..., f_k]: X_1 ⊕ ... ⊕ X_k -> Y` for morphisms into a common target.
pub fn cotuple_morphism(alg: &BoundQuiverAlgebra, fs: &[&ModMorphism]) -> ModMorphism {
    assert!(!fs.is_empty());
    let sources: Vec<&Representation> = fs.iter().map(|f| &f.source).collect();
    let (sum, _, projections) = direct_sum(alg, &sources);
    let mut acc = ModMorphism::zero(alg, &sum, &fs[0].target);
    for (f, proj) in fs.iter().zip(&projections) {
        acc = acc.add(&ModMorphism::compose(f, proj));
    }
    acc
}

/// Trace of a class in `x`: the subobject generated by the images of all
/// morphisms from members of `cls` into `x`, returned with its inclusion.
pub fn trace_of_class(
    alg: &BoundQuiverAlgebra,
    cls: &[&Representation],
    x: &Representation,
) -> (Representation, ModMorphism) {
    let field = alg.field();
    let nv = alg.vertex_count();
    let mut columns: Vec<Matrix> =
        (0..nv).map(|v| Matrix::zero(field, x.dims[v], 0)).collect();
    for u in cls {
        for f in hom_space(alg, u, x) {
            for v in 0..nv {
                columns[v] = columns[v].hstack(&f.blocks[v]);
            }
        }
    }
    let incl_blocks: Vec<Matrix> = columns.iter().map(Matrix::column_space_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(|b| b.cols).collect();
    let rep = induced_maps_through_mono(alg, &incl_blocks, &dims, x);
    let incl = ModMorphism { source: rep.clone(), target: x.clone(), blocks: incl_blocks };
    (rep, incl)
}

/// The joint kernel of every morphism from `x` into members of `cls`
/// (the reject of the class), with its inclusion into `x`.
/// It vanishes exactly when `x` embeds into a finite sum of class members.
pub fn reject_of_class(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    cls: &[&Representation],
) -> (Representation, ModMorphism) {
    let field = alg.field();
    let nv = alg.vertex_count();
    let mut stacked: Vec<Matrix> =
        (0..nv).map(|v| Matrix::zero(field, 0, x.dims[v])).collect();
    for u in cls {
        for f in hom_space(alg, x, u) {
            for v in 0..nv {
                stacked[v] = stacked[v].vstack(&f.blocks[v]);
            }
        }
    }
    let incl_blocks: Vec<Matrix> = stacked.iter().map(Matrix::kernel_basis).collect();
    let dims: Vec<usize> = incl_blocks.iter().map(|b| b.cols).collect();
    let rep = induced_maps_through_mono(alg, &incl_blocks, &dims, x);
    let incl = ModMorphism { source: rep.clone(), target: x.clone(), blocks: incl_blocks };
    (rep, incl)
}

/// Solves `r ∘ mono = id` over the Hom space; `None` when the mono does not
/// split. Exact linear decision, no search.
pub fn find_retraction(alg: &BoundQuiverAlgebra, mono: &ModMorphism) -> Option<ModMorphism> {
    let field = alg.field();
    let basis = hom_space(alg, &mono.target, &mono.source);
    if basis.is_empty() {
        return mono.source.is_zero().then(|| ModMorphism::zero(alg, &mono.target, &mono.source));
    }
    let columns: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|r| flatten_morphism(&ModMorphism::compose(r, mono)))
        .collect();
    let target = flatten_morphism(&ModMorphism::identity(alg, &mono.source));
    let mut m = Matrix::zero(field, target.len(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m.set(r, c, v.clone());
        }
    }
    let rhs = Matrix::from_rows(field, target.into_iter().map(|v| vec![v]).collect());
    let sol = m.solve(&rhs).ok()??;
    let mut acc = ModMorphism::zero(alg, &mono.target, &mono.source);
    for (i, f) in basis.iter().enumerate() {
        let c = sol.get(i, 0);
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    Some(acc)
}

/// Solves `epi ∘ s = id`; `None` when the epi does not split.
pub fn find_section(alg: &BoundQuiverAlgebra, epi: &ModMorphism) -> Option<ModMorphism> {
    let field = alg.field();
    let basis = hom_space(alg, &epi.target, &epi.source);
    if basis.is_empty() {
        return epi.target.is_zero().then(|| ModMorphism::zero(alg, &epi.target, &epi.source));
    }
    let columns: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|s| flatten_morphism(&ModMorphism::compose(epi, s)))
        .collect();
    let target = flatten_morphism(&ModMorphism::identity(alg, &epi.target));
    let mut m = Matrix::zero(field, target.len(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            m.set(r, c, v.clone());
        }
    }
    let rhs = Matrix::from_rows(field, target.into_iter().map(|v| vec![v]).collect());
    let sol = m.solve(&rhs).ok()??;
    let mut acc = ModMorphism::zero(alg, &epi.target, &epi.source);
    for (i, f) in basis.iter().enumerate() {
        let c = sol.get(i, 0);
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    Some(acc)
}

fn flatten_morphism(f: &ModMorphism) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in &f.blocks {
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.push(b.get(r, c).clone());
            }
        }
    }
    out
}

/// Outcome of the bounded isomorphism test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic,
    NotIsomorphic,
    /// The bounded search found no invertible morphism but cannot certify
    /// non-isomorphism for this algebra class.
    Unknown,
}

/// Searches `Hom(x, y)` for an invertible element: every basis element, all
/// pairwise sums, then seeded random combinations up to the iteration bound.
/// Callers on a supported enumeration class should prefer the certified
/// decomposition route in `indec`.
pub fn isomorphism_search(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    seed: u64,
    iterations: usize,
) -> IsoOutcome {
    if x.dims != y.dims {
        return IsoOutcome::NotIsomorphic;
    }
    if x.total_dim() == 0 {
        return IsoOutcome::Isomorphic;
    }
    let basis = hom_space(alg, x, y);
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic;
    }
    for f in &basis {
        if f.is_invertible() {
            return IsoOutcome::Isomorphic;
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].add(&basis[j]).is_invertible() {
                return IsoOutcome::Isomorphic;
            }
        }
    }
    let mut rng = SmallRng::seed_from_u64(seed);
    for _ in 0..iterations {
        let mut acc = ModMorphism::zero(alg, x, y);
        for f in &basis {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                acc = acc.add(&f.scale(&alg.field().from_i64(c)));
            }
        }
        if acc.is_invertible() {
            return IsoOutcome::Isomorphic;
        }
    }
    IsoOutcome::Unknown
}
