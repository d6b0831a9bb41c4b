//! Extension groups, characteristic classes and Yoneda products.
//!
//! `Ext^n(X, Y)` is the degree-`n` cohomology of `Hom(Q^•, Y)` for the
//! minimal resolution `Q^•` of `X`. Every class is normalized against a
//! fixed complement of the coboundary space (pivoting in the deterministic
//! generator-coordinate order), so equality of classes is literal equality
//! of representatives and "is zero" is decidable on the nose.
//!
//! The characteristic class of a short exact sequence is computed by lifting
//! the augmentation along the epi; conversely a degree-1 class is realized
//! as the pushout of its cocycle against the first differential, and the two
//! constructions are mutually inverse on canonical representatives.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::BoundQuiverAlgebra;
use crate::field::Scalar;
use crate::matrix::{vec_is_zero, Matrix, Subspace};
use crate::rep::{
    cokernel, direct_sum, image, kernel, tuple_morphism, ModMorphism, Representation,
};
use crate::resolution::{minimal_resolution, ProjResolution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtError {
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("morphism endpoints do not match the sequence")]
    EndpointMismatch,
    #[error("classes are not composable: middle objects differ")]
    MiddleMismatch,
    #[error("expected a degree-{expected} class, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
}

/// A short exact sequence `0 -> Y -> E -> X -> 0`, certified on construction
/// by vertexwise ranks.
#[derive(Debug, Clone)]
pub struct ShortExact {
    pub incl: ModMorphism,
    pub proj: ModMorphism,
}

impl ShortExact {
    pub fn new(
        alg: &BoundQuiverAlgebra,
        incl: ModMorphism,
        proj: ModMorphism,
    ) -> Result<ShortExact, ExtError> {
        let _ = alg;
        if incl.target.dims != proj.source.dims {
            return Err(ExtError::EndpointMismatch);
        }
        if !incl.is_mono() {
            return Err(ExtError::NotExact("inclusion is not mono".into()));
        }
        if !proj.is_epi() {
            return Err(ExtError::NotExact("projection is not epi".into()));
        }
        if !ModMorphism::compose(&proj, &incl).is_zero() {
            return Err(ExtError::NotExact("composite is nonzero".into()));
        }
        for v in 0..incl.target.dims.len() {
            if incl.rank(v) + proj.rank(v) != incl.target.dims[v] {
                return Err(ExtError::NotExact(format!(
                    "rank certificate fails at vertex {v}"
                )));
            }
        }
        Ok(ShortExact { incl, proj })
    }

    pub fn sub(&self) -> &Representation {
        &self.incl.source
    }

    pub fn middle(&self) -> &Representation {
        &self.incl.target
    }

    pub fn quotient(&self) -> &Representation {
        &self.proj.target
    }

    /// The split sequence `0 -> Y -> Y ⊕ X -> X -> 0`.
    pub fn split(
        alg: &BoundQuiverAlgebra,
        y: &Representation,
        x: &Representation,
    ) -> ShortExact {
        let (_, inj, proj) = direct_sum(alg, &[y, x]);
        ShortExact { incl: inj[0].clone(), proj: proj[1].clone() }
    }
}

/// An element of `Ext^degree(source, target)` as a canonical cocycle in
/// generator coordinates on the minimal resolution of `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtClass {
    pub source: Representation,
    pub target: Representation,
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

impl ExtClass {
    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coords)
    }
}

/// The cochain-level context for `Ext^n(x, y)`: the resolution of `x`, the
/// cocycle space and the coboundary normalizer at degree `n`.
pub struct ExtContext<'a> {
    alg: &'a BoundQuiverAlgebra,
    pub x: Representation,
    pub y: Representation,
    pub degree: usize,
    pub resolution: ProjResolution,
    /// kernel of delta^n, columns = a basis of cocycles
    cocycles: Matrix,
    /// image of delta^{n-1}
    coboundaries: Subspace,
}

impl<'a> ExtContext<'a> {
    pub fn new(
        alg: &'a BoundQuiverAlgebra,
        x: &Representation,
        y: &Representation,
        degree: usize,
    ) -> ExtContext<'a> {
        let resolution = minimal_resolution(alg, x, degree + 1);
        let field = alg.field();
        let dim_n = resolution.term(degree).map_or(0, |t| t.hom_dim(y));
        // delta^n : C^n -> C^{n+1}
        let delta_n = match (resolution.term(degree), resolution.term(degree + 1)) {
            (Some(tn), Some(tn1)) => {
                tn.hom_functor_matrix(alg, tn1, &resolution.diffs[degree], y)
            }
            _ => Matrix::zero(field, 0, dim_n),
        };
        let cocycles = delta_n.kernel_basis();
        let coboundaries = if degree == 0 {
            Subspace::zero(field, dim_n)
        } else {
            match (resolution.term(degree - 1), resolution.term(degree)) {
                (Some(tp), Some(tn)) => {
                    let delta_prev =
                        tp.hom_functor_matrix(alg, tn, &resolution.diffs[degree - 1], y);
                    Subspace::from_columns(&delta_prev)
                }
                _ => Subspace::zero(field, dim_n),
            }
        };
        ExtContext {
            alg,
            x: x.clone(),
            y: y.clone(),
            degree,
            resolution,
            cocycles,
            coboundaries,
        }
    }

    pub fn coord_dim(&self) -> usize {
        self.cocycles.rows
    }

    /// Canonical representative of a cocycle modulo coboundaries.
    pub fn canonicalize(&self, cocycle: &[Scalar]) -> Vec<Scalar> {
        self.coboundaries.reduce(cocycle)
    }

    pub fn class_from_cocycle(&self, cocycle: &[Scalar]) -> ExtClass {
        ExtClass {
            source: self.x.clone(),
            target: self.y.clone(),
            degree: self.degree,
            coords: self.canonicalize(cocycle),
        }
    }

    pub fn zero_class(&self) -> ExtClass {
        ExtClass {
            source: self.x.clone(),
            target: self.y.clone(),
            degree: self.degree,
            coords: vec![self.alg.field().zero(); self.coord_dim()],
        }
    }

    /// Dimension of the cohomology and a canonical basis.
    pub fn group(&self) -> (usize, Vec<ExtClass>) {
        let mut span = Subspace::zero(self.alg.field(), self.coord_dim());
        for row in self.coboundaries.row_basis() {
            span.insert(row);
        }
        let base = span.dim();
        let mut basis = Vec::new();
        for c in 0..self.cocycles.cols {
            let col = self.cocycles.col(c);
            if span.insert(&col) {
                basis.push(self.class_from_cocycle(&col));
            }
        }
        let dim = span.dim() - base;
        (dim, basis)
    }

    /// Realizes cocycle coordinates as a morphism `Q^{-n} -> y`.
    pub fn cocycle_morphism(&self, coords: &[Scalar]) -> ModMorphism {
        let term = self
            .resolution
            .term(self.degree)
            .expect("degree within resolution");
        let gens = term.split_coords(&self.y, coords);
        term.hom_from_generators(self.alg, &self.y, &gens)
    }

    /// Whether coordinates satisfy the cocycle condition.
    pub fn is_cocycle(&self, coords: &[Scalar]) -> bool {
        if self.resolution.term(self.degree).is_none() {
            return true;
        }
        match (
            self.resolution.term(self.degree),
            self.resolution.term(self.degree + 1),
        ) {
            (Some(tn), Some(tn1)) => {
                let delta = tn.hom_functor_matrix(
                    self.alg,
                    tn1,
                    &self.resolution.diffs[self.degree],
                    &self.y,
                );
                vec_is_zero(&delta.mul_vec(coords))
            }
            _ => true,
        }
    }
}

/// The degree-0 class of a genuine morphism: its cocycle is the composite
/// with the augmentation.
pub fn ext0_class(alg: &BoundQuiverAlgebra, f: &ModMorphism) -> ExtClass {
    let ctx = ExtContext::new(alg, &f.source, &f.target, 0);
    match ctx.resolution.term(0) {
        Some(q0) => {
            let composite = ModMorphism::compose(f, &ctx.resolution.augmentation);
            let coords = q0.flatten_coords(&q0.generator_coords(alg, &composite));
            ctx.class_from_cocycle(&coords)
        }
        None => ctx.zero_class(),
    }
}

/// `(dimension, canonical basis)` of `Ext^n(x, y)`.
pub fn ext_group(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    n: usize,
) -> (usize, Vec<ExtClass>) {
    ExtContext::new(alg, x, y, n).group()
}

pub fn ext_dim(
    alg: &BoundQuiverAlgebra,
    x: &Representation,
    y: &Representation,
    n: usize,
) -> usize {
    ext_group(alg, x, y, n).0
}

/// Generator images of a lift of `target_gen_images` through the epi `e`,
/// for a realized projective with the given summand vertices.
fn lift_through_epi(
    alg: &BoundQuiverAlgebra,
    summands: &[usize],
    gen_images: &[Vec<Scalar>],
    e: &ModMorphism,
) -> Vec<Vec<Scalar>> {
    summands
        .iter()
        .zip(gen_images)
        .map(|(&v, img)| {
            let rhs = Matrix::from_rows(
                alg.field(),
                img.iter().map(|s| vec![s.clone()]).collect(),
            );
            let sol = e.blocks[v]
                .solve(&rhs)
                .expect("shape")
                .expect("epi is vertexwise surjective");
            sol.col(0)
        })
        .collect()
}

/// The characteristic class of a short exact sequence: lift the augmentation
/// of the resolution of the quotient through the middle term; the first
/// differential then factors through the sub, and that factorization is the
/// degree-1 cocycle.
pub fn chi1(alg: &BoundQuiverAlgebra, xi: &ShortExact) -> ExtClass {
    let x = xi.quotient().clone();
    let y = xi.sub().clone();
    let ctx = ExtContext::new(alg, &x, &y, 1);
    let Some(q0) = ctx.resolution.term(0) else {
        return ctx.zero_class();
    };
    let Some(q1) = ctx.resolution.term(1) else {
        return ctx.zero_class();
    };
    // lambda: Q^0 -> E with proj ∘ lambda = augmentation
    let aug_gens = q0.generator_coords(alg, &ctx.resolution.augmentation);
    let lambda_gens = lift_through_epi(alg, &q0.summands, &aug_gens, &xi.proj);
    let lambda = q0.hom_from_generators(alg, xi.middle(), &lambda_gens);
    // lambda ∘ d^{-1} factors through Y
    let composite = ModMorphism::compose(&lambda, &ctx.resolution.diffs[0]);
    let comp_gens = q1.generator_coords(alg, &composite);
    let cocycle_gens: Vec<Vec<Scalar>> = q1
        .summands
        .iter()
        .zip(&comp_gens)
        .map(|(&v, img)| {
            let rhs = Matrix::from_rows(
                alg.field(),
                img.iter().map(|s| vec![s.clone()]).collect(),
            );
            let sol = xi.incl.blocks[v]
                .solve(&rhs)
                .expect("shape")
                .expect("image lies in the sub");
            sol.col(0)
        })
        .collect();
    let flat = q1.flatten_coords(&cocycle_gens);
    ctx.class_from_cocycle(&flat)
}

/// Realizes a degree-1 class as a short exact sequence: the middle term is
/// the cokernel of `(cocycle, -d^{-1}) : Q^{-1} -> Y ⊕ Q^0`.
pub fn realize_ext1(alg: &BoundQuiverAlgebra, c: &ExtClass) -> Result<ShortExact, ExtError> {
    if c.degree != 1 {
        return Err(ExtError::DegreeMismatch { expected: 1, got: c.degree });
    }
    let ctx = ExtContext::new(alg, &c.source, &c.target, 1);
    let (Some(_q0), Some(_q1)) = (ctx.resolution.term(0), ctx.resolution.term(1)) else {
        // projective (or zero) source: only the split sequence exists
        return Ok(ShortExact::split(alg, &c.target, &c.source));
    };
    let phi = ctx.cocycle_morphism(&c.coords);
    let d = &ctx.resolution.diffs[0];
    let glue = tuple_morphism(alg, &[&phi, &d.neg()]);
    let (_e, pc) = cokernel(alg, &glue);
    // Y -> E
    let (_, injections, _) = direct_sum(alg, &[&c.target, &ctx.resolution.terms[0].rep]);
    let incl = ModMorphism::compose(&pc, &injections[0]);
    // E -> X induced by [0, augmentation]
    let zero_part = ModMorphism::zero(alg, &c.target, &c.source);
    let h = crate::rep::cotuple_morphism(alg, &[&zero_part, &ctx.resolution.augmentation]);
    let proj_blocks: Vec<Matrix> = pc
        .blocks
        .iter()
        .zip(&h.blocks)
        .map(|(p, hb)| {
            p.transpose()
                .solve(&hb.transpose())
                .expect("shape")
                .expect("factors through the cokernel")
                .transpose()
        })
        .collect();
    let proj =
        ModMorphism { source: pc.target.clone(), target: c.source.clone(), blocks: proj_blocks };
    ShortExact::new(alg, incl, proj)
}

/// Pullback of `xi` along `t`: the induced sequence over the new quotient.
pub fn ext_pullback(
    alg: &BoundQuiverAlgebra,
    xi: &ShortExact,
    t: &ModMorphism,
) -> Result<ShortExact, ExtError> {
    if t.target.dims != xi.quotient().dims {
        return Err(ExtError::EndpointMismatch);
    }
    // E' = ker(E ⊕ X' -> X), map (g, -t)
    let h = crate::rep::cotuple_morphism(alg, &[&xi.proj, &t.neg()]);
    let (eprime, incl_k) = kernel(alg, &h);
    let (_, _, projections) = direct_sum(alg, &[xi.middle(), &t.source]);
    let proj = ModMorphism::compose(&projections[1], &incl_k);
    // Y -> E' is (f, 0) factored through the kernel
    let zero_part = ModMorphism::zero(alg, xi.sub(), &t.source);
    let glue = tuple_morphism(alg, &[&xi.incl, &zero_part]);
    let incl_blocks: Vec<Matrix> = incl_k
        .blocks
        .iter()
        .zip(&glue.blocks)
        .map(|(k, g)| k.solve(g).expect("shape").expect("factors through kernel"))
        .collect();
    let incl =
        ModMorphism { source: xi.sub().clone(), target: eprime, blocks: incl_blocks };
    ShortExact::new(alg, incl, proj)
}

/// Pushout of `xi` along `s`: the induced sequence under the new sub.
pub fn ext_pushout(
    alg: &BoundQuiverAlgebra,
    xi: &ShortExact,
    s: &ModMorphism,
) -> Result<ShortExact, ExtError> {
    if s.source.dims != xi.sub().dims {
        return Err(ExtError::EndpointMismatch);
    }
    // E' = coker(Y -> E ⊕ Y'), map (f, -s)
    let glue = tuple_morphism(alg, &[&xi.incl, &s.neg()]);
    let (_eprime, pc) = cokernel(alg, &glue);
    let (_, injections, _) = direct_sum(alg, &[xi.middle(), &s.target]);
    let incl = ModMorphism::compose(&pc, &injections[1]);
    // E' -> X induced by [g, 0]
    let zero_part = ModMorphism::zero(alg, &s.target, xi.quotient());
    let h = crate::rep::cotuple_morphism(alg, &[&xi.proj, &zero_part]);
    let proj_blocks: Vec<Matrix> = pc
        .blocks
        .iter()
        .zip(&h.blocks)
        .map(|(p, hb)| {
            p.transpose()
                .solve(&hb.transpose())
                .expect("shape")
                .expect("factors through the cokernel")
                .transpose()
        })
        .collect();
    let proj = ModMorphism {
        source: pc.target.clone(),
        target: xi.quotient().clone(),
        blocks: proj_blocks,
    };
    ShortExact::new(alg, incl, proj)
}

/// Yoneda product: `a` of degree `m` on `(Y, Z)` composed with `b` of degree
/// `n` on `(X, Y)` gives a degree `m+n` class on `(X, Z)`, by lifting `b`'s
/// cocycle to a chain map into the resolution of `Y` and postcomposing with
/// `a`'s cocycle.
pub fn yoneda_product(
    alg: &BoundQuiverAlgebra,
    a: &ExtClass,
    b: &ExtClass,
) -> Result<ExtClass, ExtError> {
    if a.source.dims != b.target.dims {
        return Err(ExtError::MiddleMismatch);
    }
    let (m, n) = (a.degree, b.degree);
    let out_ctx = ExtContext::new(alg, &b.source, &a.target, m + n);
    if out_ctx.coord_dim() == 0 {
        return Ok(out_ctx.zero_class());
    }
    // resolution of X, long enough for degree n+m; prefix-stable with b's own
    let rx = &out_ctx.resolution;
    let ry = minimal_resolution(alg, &a.source, m + 1);
    let (Some(rx_n), Some(ry_0)) = (rx.term(n), ry.term(0)) else {
        return Ok(out_ctx.zero_class());
    };
    // phi_b as a morphism Q_X^{-n} -> Y (b's coords are valid for rx since
    // minimal resolutions are deterministic and prefix-stable)
    let gens_b = rx_n.split_coords(&b.target, &b.coords);
    let phi_b = rx_n.hom_from_generators(alg, &b.target, &gens_b);
    // Lambda^0 : Q_X^{-n} -> Q_Y^0 lifting phi_b through the augmentation
    let gens0 = lift_through_epi(
        alg,
        &rx_n.summands,
        &rx_n.generator_coords(alg, &phi_b),
        &ry.augmentation,
    );
    let mut lambda = rx_n.hom_from_generators(alg, &ry_0.rep, &gens0);
    for k in 1..=m {
        let (Some(rx_nk), Some(ry_k)) = (rx.term(n + k), ry.term(k)) else {
            return Ok(out_ctx.zero_class());
        };
        // solve d_Y ∘ Lambda^{-k} = Lambda^{-(k-1)} ∘ d_X at generators
        let rhs = ModMorphism::compose(&lambda, &rx.diffs[n + k - 1]);
        let rhs_gens = rx_nk.generator_coords(alg, &rhs);
        let d_y = &ry.diffs[k - 1];
        let gens: Vec<Vec<Scalar>> = rx_nk
            .summands
            .iter()
            .zip(&rhs_gens)
            .map(|(&v, img)| {
                let rhs_m = Matrix::from_rows(
                    alg.field(),
                    img.iter().map(|s| vec![s.clone()]).collect(),
                );
                let sol = d_y.blocks[v]
                    .solve(&rhs_m)
                    .expect("shape")
                    .expect("lift exists by exactness");
                sol.col(0)
            })
            .collect();
        lambda = rx_nk.hom_from_generators(alg, &ry_k.rep, &gens);
    }
    // postcompose with a's cocycle
    let ry_m = ry.term(m).expect("resolution long enough");
    let gens_a = ry_m.split_coords(&a.target, &a.coords);
    let phi_a = ry_m.hom_from_generators(alg, &a.target, &gens_a);
    let product = ModMorphism::compose(&phi_a, &lambda);
    let rx_nm = rx.term(n + m).expect("resolution long enough");
    let flat = rx_nm.flatten_coords(&rx_nm.generator_coords(alg, &product));
    Ok(out_ctx.class_from_cocycle(&flat))
}

/// A six-term exact sequence `0 -> F0 -> F1 -> A -> T0 -> T1 -> 0` given by
/// its four morphisms.
#[derive(Debug, Clone)]
pub struct Witness {
    /// `F0 -> F1`
    pub u: ModMorphism,
    /// `F1 -> A`
    pub v: ModMorphism,
    /// `A -> T0`
    pub w: ModMorphism,
    /// `T0 -> T1`
    pub z: ModMorphism,
}

impl Witness {
    pub fn f0(&self) -> &Representation {
        &self.u.source
    }

    pub fn f1(&self) -> &Representation {
        &self.u.target
    }

    pub fn middle(&self) -> &Representation {
        &self.v.target
    }

    pub fn t0(&self) -> &Representation {
        &self.w.target
    }

    pub fn t1(&self) -> &Representation {
        &self.z.target
    }

    /// Exactness of the whole six-term sequence, by composite vanishing and
    /// vertexwise rank certificates.
    pub fn check_exact(&self) -> Result<(), ExtError> {
        if self.u.target.dims != self.v.source.dims
            || self.v.target.dims != self.w.source.dims
            || self.w.target.dims != self.z.source.dims
        {
            return Err(ExtError::EndpointMismatch);
        }
        if !self.u.is_mono() {
            return Err(ExtError::NotExact("F0 -> F1 is not mono".into()));
        }
        if !self.z.is_epi() {
            return Err(ExtError::NotExact("T0 -> T1 is not epi".into()));
        }
        for (name, first, second) in [
            ("F0->F1->A", &self.u, &self.v),
            ("F1->A->T0", &self.v, &self.w),
            ("A->T0->T1", &self.w, &self.z),
        ] {
            if !ModMorphism::compose(second, first).is_zero() {
                return Err(ExtError::NotExact(format!("composite {name} is nonzero")));
            }
        }
        let nv = self.u.source.dims.len();
        for v in 0..nv {
            if self.u.rank(v) + self.v.rank(v) != self.v.source.dims[v] {
                return Err(ExtError::NotExact(format!("exactness fails at F1, vertex {v}")));
            }
            if self.v.rank(v) + self.w.rank(v) != self.w.source.dims[v] {
                return Err(ExtError::NotExact(format!("exactness fails at A, vertex {v}")));
            }
            if self.w.rank(v) + self.z.rank(v) != self.z.source.dims[v] {
                return Err(ExtError::NotExact(format!("exactness fails at T0, vertex {v}")));
            }
        }
        Ok(())
    }

    /// Breaks the sequence into three short exact pieces through the images
    /// of the middle maps.
    pub fn factor(
        &self,
        alg: &BoundQuiverAlgebra,
    ) -> Result<(ShortExact, ShortExact, ShortExact), ExtError> {
        self.check_exact()?;
        let (_x, x_incl, x_epi) = image(alg, &self.v);
        let (_y, y_incl, y_epi) = image(alg, &self.w);
        let rho3 = ShortExact::new(alg, self.u.clone(), x_epi)?;
        let rho2 = ShortExact::new(alg, x_incl, y_epi)?;
        let rho1 = ShortExact::new(alg, y_incl, self.z.clone())?;
        Ok((rho3, rho2, rho1))
    }
}

/// The obstruction class of a witness sequence: the triple Yoneda product of
/// the characteristic classes of its three short exact pieces, an element of
/// `Ext^3(T1, F0)`.
pub fn witness_class(alg: &BoundQuiverAlgebra, w: &Witness) -> Result<ExtClass, ExtError> {
    let (rho3, rho2, rho1) = w.factor(alg)?;
    let c3 = chi1(alg, &rho3);
    let c2 = chi1(alg, &rho2);
    let c1 = chi1(alg, &rho1);
    let inner = yoneda_product(alg, &c2, &c1)?;
    yoneda_product(alg, &c3, &inner)
}
