//! Bound quiver algebras: a quiver, admissible relations and the finite
//! basis of residue paths.
//!
//! Paths compose right-to-left like functions: the product `x * y` applies
//! `y` first, so the token `c*b*a` denotes the path that follows `a`, then
//! `b`, then `c`. Internally a path is stored as its arrow sequence in
//! application order (`[a, b, c]` for the example above).
//!
//! Relations (each term a path of length at least two, all terms parallel)
//! are turned into a rewriting system ordered by degree-then-lex. Overlap
//! completion makes the system confluent; the residue-path basis is the set
//! of irreducible words, and the multiplication table reduces concatenations
//! against the completed system. Associativity of the resulting table is
//! checked rather than assumed.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};

/// Hard ceiling on path length during basis closure.
pub const DEFAULT_PATH_CAP: usize = 64;
const BASIS_CAP: usize = 65_536;
const RULE_CAP: usize = 1_024;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation {0}: term `{1}` has length < 2")]
    RelationTermTooShort(usize, String),
    #[error("relation {0}: consecutive arrows in `{1}` do not compose")]
    RelationTermNotComposable(usize, String),
    #[error("relation {0}: terms are not parallel paths")]
    RelationTermsNotParallel(usize),
    #[error("path enumeration exceeded length cap {0}; the algebra is infinite dimensional or the cap is too small")]
    PathCapExceeded(usize),
    #[error("path basis exceeded {0} elements")]
    BasisTooLarge(usize),
    #[error("relation rewriting did not complete within bounds")]
    CompletionDiverged,
    #[error("multiplication table failed the associativity check")]
    NotAssociative,
}

/// A finite quiver with named vertices and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrow_names: Vec<String>,
    arrow_source: Vec<usize>,
    arrow_target: Vec<usize>,
}

impl Quiver {
    /// `arrows` are `(name, source vertex name, target vertex name)`.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Quiver, AlgebraError> {
        let mut vertex_names = Vec::new();
        for v in vertices {
            if vertex_names.contains(&v) {
                return Err(AlgebraError::DuplicateVertex(v));
            }
            vertex_names.push(v);
        }
        let mut q = Quiver {
            vertex_names,
            arrow_names: Vec::new(),
            arrow_source: Vec::new(),
            arrow_target: Vec::new(),
        };
        for (name, src, tgt) in arrows {
            if q.arrow_names.contains(&name) {
                return Err(AlgebraError::DuplicateArrow(name));
            }
            let s = q.vertex_index(&src).ok_or(AlgebraError::UnknownVertex(src))?;
            let t = q.vertex_index(&tgt).ok_or(AlgebraError::UnknownVertex(tgt))?;
            q.arrow_names.push(name);
            q.arrow_source.push(s);
            q.arrow_target.push(t);
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrow_names[a]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrow_names.iter().position(|n| n == name)
    }

    pub fn source(&self, arrow: usize) -> usize {
        self.arrow_source[arrow]
    }

    pub fn target(&self, arrow: usize) -> usize {
        self.arrow_target[arrow]
    }

    /// Source of a word in application order, `None` for the empty word.
    fn word_source(&self, word: &[usize]) -> Option<usize> {
        word.first().map(|&a| self.source(a))
    }

    fn word_target(&self, word: &[usize]) -> Option<usize> {
        word.last().map(|&a| self.target(a))
    }

    fn word_composable(&self, word: &[usize]) -> bool {
        word.windows(2).all(|w| self.target(w[0]) == self.source(w[1]))
    }
}

/// One admissible relation: a linear combination of parallel paths of
/// length at least two, equated to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// `(coefficient, arrow indices in application order)`
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

/// A residue path of the bound quiver algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    /// Arrow indices in application order; empty for a trivial path.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, arrows: Vec::new() }
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        quiver.word_target(&self.arrows).unwrap_or(self.source)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Token form: `e<v>` for a trivial path, otherwise arrow names joined
    /// with `*` in composition order (latest arrow first).
    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", quiver.vertex_name(self.source))
        } else {
            let names: Vec<&str> =
                self.arrows.iter().rev().map(|&a| quiver.arrow_name(a)).collect();
            names.join("*")
        }
    }
}

#[derive(Debug, Clone)]
struct Rule {
    lhs: Vec<usize>,
    rhs: Vec<(Scalar, Vec<usize>)>,
}

/// degree-then-lexicographic word order, compatible with concatenation
fn deglex(a: &[usize], b: &[usize]) -> core::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The path algebra of a quiver modulo an admissible relation ideal,
/// presented by its finite basis of residue paths.
#[derive(Debug, Clone)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    field: Field,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    basis_index: BTreeMap<(usize, Vec<usize>), usize>,
    /// basis indices of trivial paths, one per vertex
    trivial: Vec<usize>,
    /// basis indices grouped by path source, in basis order
    by_source: Vec<Vec<usize>>,
    /// structure constants: `mult[i][j]` holds `basis[i] * basis[j]`
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    rules: Vec<Rule>,
}

impl BoundQuiverAlgebra {
    pub fn new(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
    ) -> Result<BoundQuiverAlgebra, AlgebraError> {
        Self::with_path_cap(quiver, relations, field, DEFAULT_PATH_CAP)
    }

    pub fn with_path_cap(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        path_cap: usize,
    ) -> Result<BoundQuiverAlgebra, AlgebraError> {
        for (idx, rel) in relations.iter().enumerate() {
            let mut endpoints: Option<(usize, usize)> = None;
            for (_, word) in &rel.terms {
                if word.len() < 2 {
                    return Err(AlgebraError::RelationTermTooShort(
                        idx,
                        format!("{word:?}"),
                    ));
                }
                if !quiver.word_composable(word) {
                    return Err(AlgebraError::RelationTermNotComposable(
                        idx,
                        format!("{word:?}"),
                    ));
                }
                let ends =
                    (quiver.word_source(word).unwrap(), quiver.word_target(word).unwrap());
                match endpoints {
                    None => endpoints = Some(ends),
                    Some(e) if e != ends => {
                        return Err(AlgebraError::RelationTermsNotParallel(idx))
                    }
                    _ => {}
                }
            }
        }

        let seed_rules: Vec<Rule> = relations
            .iter()
            .filter_map(|rel| make_rule(rel.terms.clone()))
            .collect();
        let rules = complete(seed_rules)?;

        let basis = enumerate_basis(&quiver, &rules, path_cap)?;
        let mut basis_index = BTreeMap::new();
        for (i, p) in basis.iter().enumerate() {
            basis_index.insert((p.source, p.arrows.clone()), i);
        }
        let trivial: Vec<usize> = (0..quiver.vertex_count())
            .map(|v| basis_index[&(v, Vec::new())])
            .collect();
        let mut by_source = vec![Vec::new(); quiver.vertex_count()];
        for (i, p) in basis.iter().enumerate() {
            by_source[p.source].push(i);
        }

        let mut alg = BoundQuiverAlgebra {
            quiver,
            field,
            relations,
            basis,
            basis_index,
            trivial,
            by_source,
            mult: Vec::new(),
            rules,
        };
        alg.build_mult_table();
        alg.check_relations_vanish()?;
        alg.check_associativity()?;
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Dimension of the algebra = number of residue paths.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Basis index of the trivial path at `v`.
    pub fn trivial_path(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Basis indices of paths with the given source, in basis order.
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    /// Basis indices of paths from `src` to `tgt`, in basis order.
    pub fn paths_between(&self, src: usize, tgt: usize) -> Vec<usize> {
        self.by_source[src]
            .iter()
            .copied()
            .filter(|&i| self.basis[i].target(&self.quiver) == tgt)
            .collect()
    }

    pub fn path_index(&self, source: usize, word: &[usize]) -> Option<usize> {
        self.basis_index.get(&(source, word.to_vec())).copied()
    }

    /// Reduces an arbitrary composable word to basis coordinates.
    pub fn reduce_word(&self, source: usize, word: &[usize]) -> AlgebraElement {
        if word.is_empty() {
            return AlgebraElement::basis_element(self, self.trivial[source]);
        }
        debug_assert_eq!(self.quiver.word_source(word), Some(source));
        let reduced =
            reduce_terms(&self.rules, vec![(self.field.one(), word.to_vec())]);
        let mut terms = Vec::new();
        for (word, coeff) in reduced {
            let idx = self.basis_index[&(source, word)];
            terms.push((idx, coeff));
        }
        terms.sort_by_key(|(i, _)| *i);
        AlgebraElement { terms }
    }

    /// Structure constants of `basis[i] * basis[j]` (apply `j` first).
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    fn build_mult_table(&mut self) {
        let n = self.basis.len();
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            let x = &self.basis[i];
            for j in 0..n {
                let y = &self.basis[j];
                // x * y applies y first; need target(y) = source(x)
                if y.target(&self.quiver) != x.source {
                    row.push(Vec::new());
                    continue;
                }
                let mut word = y.arrows.clone();
                word.extend_from_slice(&x.arrows);
                let elt = self.reduce_word(y.source, &word);
                row.push(elt.terms);
            }
            table.push(row);
        }
        self.mult = table;
    }

    fn check_relations_vanish(&self) -> Result<(), AlgebraError> {
        for rel in &self.relations {
            let mut acc = AlgebraElement::zero();
            for (c, word) in &rel.terms {
                let src = self.quiver.word_source(word).unwrap();
                acc = acc.add(&self.reduce_word(src, word).scale(c));
            }
            if !acc.is_zero() {
                return Err(AlgebraError::CompletionDiverged);
            }
        }
        Ok(())
    }

    /// Associativity of the table certifies confluence of the completed
    /// rewriting system. Exhaustive for small algebras; for larger ones
    /// every (generator, basis, generator) triple is still covered.
    fn check_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.basis.len();
        let exhaustive = n <= 96;
        let short: Vec<usize> =
            (0..n).filter(|&i| self.basis[i].len() <= 1).collect();
        let firsts: Vec<usize> = if exhaustive { (0..n).collect() } else { short.clone() };
        let lasts = firsts.clone();
        for &i in &firsts {
            for j in 0..n {
                for &k in &lasts {
                    let left = self.mul_elements(
                        &self.mul_elements(
                            &AlgebraElement::basis_element(self, i),
                            &AlgebraElement::basis_element(self, j),
                        ),
                        &AlgebraElement::basis_element(self, k),
                    );
                    let right = self.mul_elements(
                        &AlgebraElement::basis_element(self, i),
                        &self.mul_elements(
                            &AlgebraElement::basis_element(self, j),
                            &AlgebraElement::basis_element(self, k),
                        ),
                    );
                    if left != right {
                        return Err(AlgebraError::NotAssociative);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn mul_elements(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let c = a.mul(b);
                for (k, s) in self.mul_basis(*i, *j) {
                    let v = acc.entry(*k).or_insert_with(|| self.field.zero());
                    *v = v.add(&c.mul(s));
                }
            }
        }
        AlgebraElement {
            terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        }
    }

    /// Identity element, the sum of all trivial paths.
    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.trivial.iter().map(|&i| (i, self.field.one())).collect(),
        }
    }
}

/// An element of the algebra in residue-path coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    /// `(basis index, coefficient)` sorted by index, zero coefficients dropped
    pub terms: Vec<(usize, Scalar)>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement { terms: Vec::new() }
    }

    pub fn basis_element(alg: &BoundQuiverAlgebra, i: usize) -> AlgebraElement {
        AlgebraElement { terms: vec![(i, alg.field().one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut acc: BTreeMap<usize, Scalar> = self.terms.iter().cloned().collect();
        for (i, c) in &other.terms {
            match acc.get_mut(i) {
                Some(v) => *v = v.add(c),
                None => {
                    acc.insert(*i, c.clone());
                }
            }
        }
        AlgebraElement { terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(i, c)| (*i, c.mul(s))).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement { terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }

    pub fn display(&self, alg: &BoundQuiverAlgebra) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| {
                let p = alg.basis()[*i].display(alg.quiver());
                if c.is_one() {
                    p
                } else {
                    format!("{} {}", c.literal(), p)
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn make_rule(terms: Vec<(Scalar, Vec<usize>)>) -> Option<Rule> {
    let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (c, w) in terms {
        match acc.get_mut(&w) {
            Some(v) => *v = v.add(&c),
            None => {
                acc.insert(w, c);
            }
        }
    }
    let mut combined: Vec<(Vec<usize>, Scalar)> =
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if combined.is_empty() {
        return None;
    }
    let lead_at = combined
        .iter()
        .enumerate()
        .max_by(|(_, (wa, _)), (_, (wb, _))| deglex(wa, wb))
        .map(|(i, _)| i)
        .unwrap();
    let (lead_word, lead_coeff) = combined.remove(lead_at);
    let inv = lead_coeff.inverse().expect("leading coefficient nonzero");
    let rhs: Vec<(Scalar, Vec<usize>)> = combined
        .into_iter()
        .map(|(w, c)| (c.mul(&inv).neg(), w))
        .collect();
    Some(Rule { lhs: lead_word, rhs })
}

/// Fully reduces a linear combination of words against the rule system.
/// Returns irreducible words with combined coefficients, sorted.
fn reduce_terms(
    rules: &[Rule],
    start: Vec<(Scalar, Vec<usize>)>,
) -> BTreeMap<Vec<usize>, Scalar> {
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let mut work: Vec<(Scalar, Vec<usize>)> = start;
    while let Some((c, w)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        match first_match(rules, &w) {
            Some((ri, pos)) => {
                let rule = &rules[ri];
                for (rc, rw) in &rule.rhs {
                    let mut new_word = Vec::with_capacity(w.len() - rule.lhs.len() + rw.len());
                    new_word.extend_from_slice(&w[..pos]);
                    new_word.extend_from_slice(rw);
                    new_word.extend_from_slice(&w[pos + rule.lhs.len()..]);
                    work.push((c.mul(rc), new_word));
                }
            }
            None => match out.get_mut(&w) {
                Some(v) => *v = v.add(&c),
                None => {
                    out.insert(w, c);
                }
            },
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn first_match(rules: &[Rule], word: &[usize]) -> Option<(usize, usize)> {
    for pos in 0..word.len() {
        for (ri, rule) in rules.iter().enumerate() {
            let l = rule.lhs.len();
            if pos + l <= word.len() && word[pos..pos + l] == rule.lhs[..] {
                return Some((ri, pos));
            }
        }
    }
    None
}

fn is_irreducible(rules: &[Rule], word: &[usize]) -> bool {
    first_match(rules, word).is_none()
}

/// Overlap completion. Processes critical pairs until every superposition
/// reduces to zero both ways.
fn complete(mut rules: Vec<Rule>) -> Result<Vec<Rule>, AlgebraError> {
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..rules.len() {
        for j in 0..rules.len() {
            queue.push_back((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = queue.pop_front() {
        processed += 1;
        if processed > 100_000 {
            return Err(AlgebraError::CompletionDiverged);
        }
        let (len1, len2) = (rules[i].lhs.len(), rules[j].lhs.len());
        for offset in 0..len1 {
            if offset == 0 && i == j {
                continue;
            }
            let superword: Vec<usize> = if offset + len2 <= len1 {
                // rules[j].lhs contained in rules[i].lhs
                if rules[i].lhs[offset..offset + len2] != rules[j].lhs[..] {
                    continue;
                }
                rules[i].lhs.clone()
            } else {
                // proper overlap: suffix of lhs_i = prefix of lhs_j
                let l = len1 - offset;
                if rules[i].lhs[offset..] != rules[j].lhs[..l] {
                    continue;
                }
                let mut w = rules[i].lhs.clone();
                w.extend_from_slice(&rules[j].lhs[l..]);
                w
            };
            let a = rewrite_once(&rules, &superword, i, 0);
            let b = rewrite_once(&rules, &superword, j, offset);
            let mut diff: Vec<(Scalar, Vec<usize>)> = a;
            diff.extend(b.into_iter().map(|(c, w)| (c.neg(), w)));
            let reduced = reduce_terms(&rules, diff);
            let terms: Vec<(Scalar, Vec<usize>)> =
                reduced.into_iter().map(|(w, c)| (c, w)).collect();
            if let Some(rule) = make_rule(terms) {
                let new_idx = rules.len();
                rules.push(rule);
                if rules.len() > RULE_CAP {
                    return Err(AlgebraError::CompletionDiverged);
                }
                for k in 0..=new_idx {
                    queue.push_back((k, new_idx));
                    queue.push_back((new_idx, k));
                }
            }
        }
    }
    Ok(rules)
}

fn rewrite_once(
    rules: &[Rule],
    word: &[usize],
    rule_idx: usize,
    pos: usize,
) -> Vec<(Scalar, Vec<usize>)> {
    let rule = &rules[rule_idx];
    let mut out = Vec::new();
    for (rc, rw) in &rule.rhs {
        let mut new_word = Vec::new();
        new_word.extend_from_slice(&word[..pos]);
        new_word.extend_from_slice(rw);
        new_word.extend_from_slice(&word[pos + rule.lhs.len()..]);
        out.push((rc.clone(), new_word));
    }
    out
}

/// All irreducible words up to the cap, sorted by
/// (source, length, lexicographic arrow names).
fn enumerate_basis(
    quiver: &Quiver,
    rules: &[Rule],
    path_cap: usize,
) -> Result<Vec<Path>, AlgebraError> {
    let mut basis: Vec<Path> = Vec::new();
    for v in 0..quiver.vertex_count() {
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        basis.push(Path::trivial(v));
        let mut len = 0usize;
        while !frontier.is_empty() {
            len += 1;
            if len > path_cap {
                return Err(AlgebraError::PathCapExceeded(path_cap));
            }
            let mut next = Vec::new();
            for word in &frontier {
                let tip = quiver.word_target(word).unwrap_or(v);
                for a in 0..quiver.arrow_count() {
                    if quiver.source(a) != tip {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(a);
                    if is_irreducible(rules, &w) {
                        basis.push(Path { source: v, arrows: w.clone() });
                        if basis.len() > BASIS_CAP {
                            return Err(AlgebraError::BasisTooLarge(BASIS_CAP));
                        }
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }
    basis.sort_by(|p, q| {
        p.source
            .cmp(&q.source)
            .then(p.len().cmp(&q.len()))
            .then_with(|| {
                let pn: Vec<&str> = p.arrows.iter().map(|&a| quiver.arrow_name(a)).collect();
                let qn: Vec<&str> = q.arrows.iter().map(|&a| quiver.arrow_name(a)).collect();
                pn.cmp(&qn)
            })
    });
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{a2, nakayama6};

    #[test]
    fn a2_basis() {
        // hand enumeration: e1, e2 and the single arrow
        let alg = a2(Field::Rationals);
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.paths_from(0).len(), 2);
        assert_eq!(alg.paths_from(1).len(), 1);
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::new(vec!["1".into()], vec![]).unwrap();
        let alg = BoundQuiverAlgebra::new(q, vec![], Field::Rationals).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(alg.basis()[0].is_trivial());
    }

    #[test]
    fn nakayama6_dimension() {
        // killing any path containing cba or edc leaves
        // 6 trivial + 5 arrows + 4 length-2 + 1 length-3 paths
        let alg = nakayama6(Field::Rationals);
        assert_eq!(alg.dim(), 16);
        assert_eq!(alg.paths_from(0).len(), 3); // dim P_1
        assert_eq!(alg.paths_from(1).len(), 4); // dim P_2
        assert_eq!(alg.paths_from(2).len(), 3);
        assert_eq!(alg.paths_from(3).len(), 3);
        assert_eq!(alg.paths_from(4).len(), 2);
        assert_eq!(alg.paths_from(5).len(), 1);
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let alg = nakayama6(Field::Rationals);
        for i in 0..6 {
            for j in 0..6 {
                let ei = AlgebraElement::basis_element(&alg, alg.trivial_path(i));
                let ej = AlgebraElement::basis_element(&alg, alg.trivial_path(j));
                let prod = alg.mul_elements(&ei, &ej);
                if i == j {
                    assert_eq!(prod, ei);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn products_modulo_relations() {
        let alg = nakayama6(Field::Rationals);
        let arrow = |name: &str| {
            let a = alg.quiver().arrow_index(name).unwrap();
            let src = alg.quiver().source(a);
            alg.reduce_word(src, &[a])
        };
        let ba = alg.mul_elements(&arrow("b"), &arrow("a"));
        assert!(!ba.is_zero());
        assert_eq!(ba.terms.len(), 1);
        let cba = alg.mul_elements(&arrow("c"), &ba);
        assert!(cba.is_zero());
        let dcb = alg.mul_elements(&arrow("d"), &alg.mul_elements(&arrow("c"), &arrow("b")));
        assert!(!dcb.is_zero());
        let edc = alg.mul_elements(&arrow("e"), &alg.mul_elements(&arrow("d"), &arrow("c")));
        assert!(edc.is_zero());
    }

    #[test]
    fn unit_acts_as_identity() {
        let alg = a2(Field::Rationals);
        let a = alg.quiver().arrow_index("a").unwrap();
        let x = alg.reduce_word(0, &[a]);
        assert_eq!(alg.mul_elements(&x, &alg.unit()), x);
        assert_eq!(alg.mul_elements(&alg.unit(), &x), x);
        // e2 * a = a and a * e1 = a with right-to-left composition
        let e1 = AlgebraElement::basis_element(&alg, alg.trivial_path(0));
        let e2 = AlgebraElement::basis_element(&alg, alg.trivial_path(1));
        assert_eq!(alg.mul_elements(&x, &e1), x);
        assert_eq!(alg.mul_elements(&e2, &x), x);
    }

    #[test]
    fn infinite_dimensional_detected() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let err = BoundQuiverAlgebra::new(q, vec![], Field::Rationals).unwrap_err();
        assert!(matches!(err, AlgebraError::PathCapExceeded(_)));
    }

    #[test]
    fn loop_with_nilpotency_is_finite() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let rel = Relation {
            terms: vec![(Field::Rationals.one(), vec![0, 0, 0])],
        };
        let alg = BoundQuiverAlgebra::new(q, vec![rel], Field::Rationals).unwrap();
        assert_eq!(alg.dim(), 3); // e, x, x^2
    }

    #[test]
    fn commutativity_square_relation() {
        // two paths from 1 to 4 identified: b*a = d*c
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "4".into()),
                ("c".into(), "1".into(), "3".into()),
                ("d".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let one = Field::Rationals.one();
        let rel = Relation {
            terms: vec![(one.clone(), vec![0, 1]), (one.neg(), vec![2, 3])],
        };
        let alg = BoundQuiverAlgebra::new(q, vec![rel], Field::Rationals).unwrap();
        // e1..e4, four arrows, one diagonal path
        assert_eq!(alg.dim(), 9);
        let ba = alg.reduce_word(0, &[0, 1]);
        let dc = alg.reduce_word(0, &[2, 3]);
        assert_eq!(ba, dc);
    }

    #[test]
    fn mixed_linear_and_monomial_relations() {
        // square 1 -> {2,3} -> 4 with tail 4 -e-> 5; identify the two
        // diagonals and kill the composite through the tail
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into(), "5".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "4".into()),
                ("c".into(), "1".into(), "3".into()),
                ("d".into(), "3".into(), "4".into()),
                ("e".into(), "4".into(), "5".into()),
            ],
        )
        .unwrap();
        let one = Field::Rationals.one();
        let rels = vec![
            Relation { terms: vec![(one.clone(), vec![0, 1]), (one.neg(), vec![2, 3])] },
            Relation { terms: vec![(one, vec![0, 1, 4])] },
        ];
        let alg = BoundQuiverAlgebra::new(q, rels, Field::Rationals).unwrap();
        // hand enumeration: 5 trivial + 5 arrows + {b*a, e*b, e*d}, with d*c
        // rewritten to b*a and both length-3 paths reduced to zero
        assert_eq!(alg.dim(), 13);
        let dc = alg.reduce_word(0, &[2, 3]);
        let ba = alg.reduce_word(0, &[0, 1]);
        assert_eq!(dc, ba);
        assert!(alg.reduce_word(0, &[2, 3, 4]).is_zero());
        assert!(alg.reduce_word(0, &[0, 1, 4]).is_zero());
    }

    #[test]
    fn completion_generates_consequence_rules() {
        // parallel arrows b, d: 2 -> 3, with c*d = c*b and d*a = 0. The
        // overlap of the two leading words forces c*b*a = 0, which only
        // appears through completion; without it the word would be wrongly
        // counted as a basis path and associativity would fail.
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
                ("c".into(), "3".into(), "4".into()),
                ("d".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let one = Field::Rationals.one();
        let rels = vec![
            Relation { terms: vec![(one.clone(), vec![3, 2]), (one.neg(), vec![1, 2])] },
            Relation { terms: vec![(one, vec![0, 3])] },
        ];
        let alg = BoundQuiverAlgebra::new(q, rels, Field::Rationals).unwrap();
        // basis: 4 trivial + 4 arrows + {b*a, c*b}
        assert_eq!(alg.dim(), 10);
        assert!(alg.reduce_word(0, &[0, 1, 2]).is_zero()); // c*b*a
        assert!(alg.reduce_word(0, &[0, 3, 2]).is_zero()); // c*d*a
        let cd = alg.reduce_word(1, &[3, 2]);
        let cb = alg.reduce_word(1, &[1, 2]);
        assert_eq!(cd, cb);
    }

    #[test]
    fn relation_validation_errors() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        let one = Field::Rationals.one();
        let short = Relation { terms: vec![(one.clone(), vec![0])] };
        assert!(matches!(
            BoundQuiverAlgebra::new(q.clone(), vec![short], Field::Rationals),
            Err(AlgebraError::RelationTermTooShort(..))
        ));
        let bad = Relation { terms: vec![(one, vec![0, 0])] };
        assert!(matches!(
            BoundQuiverAlgebra::new(q, vec![bad], Field::Rationals),
            Err(AlgebraError::RelationTermNotComposable(..))
        ));
    }

    #[test]
    fn quiver_validation_errors() {
        assert!(matches!(
            Quiver::new(vec!["1".into(), "1".into()], vec![]),
            Err(AlgebraError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Quiver::new(
                vec!["1".into()],
                vec![("a".into(), "1".into(), "9".into())]
            ),
            Err(AlgebraError::UnknownVertex(_))
        ));
    }
}
