//! Minimal projective resolutions.
//!
//! A finitely generated projective is realized as a direct sum of vertex
//! projectives together with the list of summand vertices. Morphisms out of
//! such a module are handled in generator coordinates: a map `P_v -> M` is
//! the same as a vector in `M_v`, and the whole calculus of lifting and
//! comparing chain maps reduces to small vertexwise linear systems.
//!
//! Resolutions are built from projective covers of radical quotients, so the
//! differentials land in the radical and stabilization (a zero kernel)
//! detects finite projective dimension.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::BoundQuiverAlgebra;
use crate::field::Scalar;
use crate::matrix::{Matrix, Subspace};
use crate::rep::{direct_sum, ModMorphism, Representation};

/// A direct sum of vertex projectives, with its realization.
#[derive(Debug, Clone)]
pub struct RealizedProj {
    /// vertex of each summand, in order
    pub summands: Vec<usize>,
    pub rep: Representation,
}

impl RealizedProj {
    pub fn new(alg: &BoundQuiverAlgebra, summands: Vec<usize>) -> RealizedProj {
        let projectives: Vec<Representation> =
            summands.iter().map(|&v| alg.projective(v)).collect();
        let refs: Vec<&Representation> = projectives.iter().collect();
        let (rep, _, _) = direct_sum(alg, &refs);
        RealizedProj { summands, rep }
    }

    pub fn zero(alg: &BoundQuiverAlgebra) -> RealizedProj {
        RealizedProj::new(alg, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Multiplicity of each vertex projective.
    pub fn multiplicities(&self, alg: &BoundQuiverAlgebra) -> Vec<usize> {
        let mut m = vec![0usize; alg.vertex_count()];
        for &v in &self.summands {
            m[v] += 1;
        }
        m
    }

    /// The basis of the realization at vertex `u`: for each summand in order,
    /// the residue paths from its vertex to `u` in basis order.
    pub fn basis_layout(&self, alg: &BoundQuiverAlgebra, u: usize) -> Vec<(usize, Vec<usize>)> {
        let mut layout = Vec::new();
        for (s, &v) in self.summands.iter().enumerate() {
            for idx in alg.paths_between(v, u) {
                layout.push((s, alg.basis()[idx].arrows.clone()));
            }
        }
        layout
    }

    /// Row/column index of the generator of summand `s` inside the vertex
    /// block of its own vertex.
    pub fn generator_index(&self, alg: &BoundQuiverAlgebra, s: usize) -> usize {
        let v = self.summands[s];
        let mut offset = 0usize;
        for (t, &w) in self.summands.iter().enumerate().take(s) {
            let _ = t;
            offset += alg.paths_between(w, v).len();
        }
        let within = alg
            .paths_between(v, v)
            .iter()
            .position(|&idx| alg.basis()[idx].is_trivial())
            .expect("trivial path present");
        offset + within
    }

    /// Dimension of `Hom(self, Y)` in generator coordinates.
    pub fn hom_dim(&self, y: &Representation) -> usize {
        self.summands.iter().map(|&v| y.dims[v]).sum()
    }

    /// Builds the morphism determined by one generator image per summand.
    pub fn hom_from_generators(
        &self,
        alg: &BoundQuiverAlgebra,
        y: &Representation,
        gens: &[Vec<Scalar>],
    ) -> ModMorphism {
        assert_eq!(gens.len(), self.summands.len());
        let field = alg.field();
        let nv = alg.vertex_count();
        let mut blocks = Vec::with_capacity(nv);
        for u in 0..nv {
            let layout = self.basis_layout(alg, u);
            let mut b = Matrix::zero(field, y.dims[u], layout.len());
            for (col, (s, word)) in layout.iter().enumerate() {
                let act = y.path_action(alg, self.summands[*s], word);
                let image = act.mul_vec(&gens[*s]);
                for (r, val) in image.into_iter().enumerate() {
                    b.set(r, col, val);
                }
            }
            blocks.push(b);
        }
        ModMorphism { source: self.rep.clone(), target: y.clone(), blocks }
    }

    /// Generator coordinates of a morphism out of this projective.
    pub fn generator_coords(
        &self,
        alg: &BoundQuiverAlgebra,
        f: &ModMorphism,
    ) -> Vec<Vec<Scalar>> {
        self.summands
            .iter()
            .enumerate()
            .map(|(s, &v)| f.blocks[v].col(self.generator_index(alg, s)))
            .collect()
    }

    /// Flattens generator coordinates into a single vector in the
    /// deterministic summand order.
    pub fn flatten_coords(&self, gens: &[Vec<Scalar>]) -> Vec<Scalar> {
        gens.iter().flat_map(|g| g.iter().cloned()).collect()
    }

    pub fn split_coords(&self, y: &Representation, flat: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.summands.len());
        let mut at = 0usize;
        for &v in &self.summands {
            out.push(flat[at..at + y.dims[v]].to_vec());
            at += y.dims[v];
        }
        out
    }

    /// The matrix of `Hom(-, y)` applied to `d: from.rep -> self.rep`,
    /// mapping generator coordinates of `Hom(self, y)` to those of
    /// `Hom(from, y)`.
    pub fn hom_functor_matrix(
        &self,
        alg: &BoundQuiverAlgebra,
        from: &RealizedProj,
        d: &ModMorphism,
        y: &Representation,
    ) -> Matrix {
        let field = alg.field();
        let rows = from.hom_dim(y);
        let cols = self.hom_dim(y);
        let mut m = Matrix::zero(field, rows, cols);
        // column offsets of self's summands inside the flat coordinates
        let mut col_off = Vec::with_capacity(self.summands.len());
        let mut acc = 0usize;
        for &v in &self.summands {
            col_off.push(acc);
            acc += y.dims[v];
        }
        let mut row_off = Vec::with_capacity(from.summands.len());
        acc = 0;
        for &w in &from.summands {
            row_off.push(acc);
            acc += y.dims[w];
        }
        for (sp, &w) in from.summands.iter().enumerate() {
            let gen_col = from.generator_index(alg, sp);
            let d_col = d.blocks[w].col(gen_col);
            // expand d(gen) over self's basis at vertex w
            for (pos, (s, word)) in self.basis_layout(alg, w).iter().enumerate() {
                let coeff = &d_col[pos];
                if coeff.is_zero() {
                    continue;
                }
                let act = y.path_action(alg, self.summands[*s], word);
                for r in 0..y.dims[w] {
                    for c in 0..y.dims[self.summands[*s]] {
                        let v = act.get(r, c).mul(coeff);
                        if !v.is_zero() {
                            let rr = row_off[sp] + r;
                            let cc = col_off[*s] + c;
                            m.set(rr, cc, m.get(rr, cc).add(&v));
                        }
                    }
                }
            }
        }
        m
    }
}

/// Radical subspace of `m` at every vertex: the span of all incoming arrow
/// images.
pub fn radical_subspaces(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<Subspace> {
    let q = alg.quiver();
    let field = alg.field();
    (0..alg.vertex_count())
        .map(|u| {
            let mut cols = Matrix::zero(field, m.dims[u], 0);
            for a in 0..q.arrow_count() {
                if q.target(a) == u {
                    cols = cols.hstack(&m.maps[a]);
                }
            }
            Subspace::from_columns(&cols)
        })
        .collect()
}

/// Projective cover: the realized cover and the epimorphism onto `m`.
pub fn projective_cover(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> (RealizedProj, ModMorphism) {
    let field = alg.field();
    let rad = radical_subspaces(alg, m);
    let mut summands = Vec::new();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for u in 0..alg.vertex_count() {
        // standard basis vectors at non-pivot coordinates lift a basis of top
        for c in rad[u].complement_coords() {
            summands.push(u);
            let mut g = vec![field.zero(); m.dims[u]];
            g[c] = field.one();
            gens.push(g);
        }
    }
    let rp = RealizedProj::new(alg, summands);
    let cover = rp.hom_from_generators(alg, m, &gens);
    debug_assert!(cover.is_epi(), "projective cover must be epi");
    (rp, cover)
}

/// A minimal projective resolution `... -> Q^{-1} -> Q^0 -> module -> 0`.
#[derive(Debug, Clone)]
pub struct ProjResolution {
    pub module: Representation,
    /// `terms[k]` realizes `Q^{-k}`
    pub terms: Vec<RealizedProj>,
    /// `diffs[k]: terms[k+1].rep -> terms[k].rep`
    pub diffs: Vec<ModMorphism>,
    pub augmentation: ModMorphism,
    /// true when the resolution reached a zero syzygy within the requested
    /// length, i.e. the projective dimension is `terms.len() - 1`
    pub stabilized: bool,
}

impl ProjResolution {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, k: usize) -> Option<&RealizedProj> {
        self.terms.get(k)
    }

    /// Projective dimension when it stabilized within the computed window.
    pub fn proj_dim(&self) -> Option<usize> {
        self.stabilized.then(|| self.terms.len().saturating_sub(1))
    }
}

/// Resolves `x` minimally to the requested length (inclusive), stopping
/// early when a syzygy vanishes.
pub fn minimal_resolution(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    length: usize,
) -> ProjResolution {
    if x.is_zero() {
        return ProjResolution {
            module: x.clone(),
            terms: Vec::new(),
            diffs: Vec::new(),
            augmentation: ModMorphism::zero(alg, &Representation::zero(alg), x),
            stabilized: true,
        };
    }
    let (q0, augmentation) = projective_cover(alg, x);
    let mut terms = vec![q0];
    let mut diffs = Vec::new();
    let (mut syzygy, mut incl) = crate::rep::kernel(alg, &augmentation);
    let mut stabilized = syzygy.is_zero();
    for _ in 0..length {
        if syzygy.is_zero() {
            stabilized = true;
            break;
        }
        let (q, cover) = projective_cover(alg, &syzygy);
        diffs.push(ModMorphism::compose(&incl, &cover));
        let (next, next_incl) = crate::rep::kernel(alg, &cover);
        terms.push(q);
        syzygy = next;
        incl = next_incl;
        if syzygy.is_zero() {
            stabilized = true;
        }
    }
    ProjResolution { module: x.clone(), terms, diffs, augmentation, stabilized }
}
