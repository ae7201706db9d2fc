//! Path algebras of quivers modulo admissible relations.
//!
//! Paths are arrow lists in traversal order; `[a, b]` means "first `a`,
//! then `b`". The product `p q` is "`p` after `q`", so `p q` is the path
//! `q` followed by `p`, and `A e_i` is the projective at vertex `i`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, Subspace};

/// Default maximal path length explored before giving up.
pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

/// Linear combination of parallel paths.
pub type Relation<F> = Vec<(<F as Field>::Elem, Vec<usize>)>;

/// A path with its start vertex, so that trivial paths are representable.
pub(super) type PathKey = (usize, Vec<usize>);

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Self {
        Quiver { vertices, arrows }
    }

    /// Start and end vertex of a nonempty path, if its arrows compose.
    pub fn endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    pub(super) fn end_of(&self, key: &PathKey) -> usize {
        key.1.last().map_or(key.0, |&a| self.arrows[a].target)
    }

    /// All paths of length at most `n`, grouped by length.
    fn paths_up_to(&self, n: usize) -> Vec<Vec<PathKey>> {
        let mut by_len: Vec<Vec<PathKey>> = vec![(0..self.vertices).map(|v| (v, vec![])).collect()];
        for _ in 0..n {
            let mut next = Vec::new();
            for key in by_len.last().unwrap() {
                let end = self.end_of(key);
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == end {
                        let mut p = key.1.clone();
                        p.push(ai);
                        next.push((key.0, p));
                    }
                }
            }
            by_len.push(next);
        }
        by_len
    }

    pub fn path_label(&self, start: usize, path: &[usize]) -> String {
        if path.is_empty() {
            format!("e{}", start + 1)
        } else {
            path.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

/// The algebra `kQ / I` with its path basis.
#[derive(Clone, Debug)]
pub struct PathQuotient<F: Field> {
    algebra: Algebra<F>,
    quiver: Quiver,
    basis: Vec<PathKey>,
    coords: HashMap<PathKey, Vec<F::Elem>>,
    nilpotency: usize,
}

impl<F: Field> PathQuotient<F> {
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Basis paths as `(start vertex, arrows)`, in basis order.
    pub fn basis_paths(&self) -> &[(usize, Vec<usize>)] {
        &self.basis
    }

    /// Every path of at least this length vanishes.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// Coordinates of a path; zero if it does not compose or is too long.
    pub fn path_element(&self, start: usize, path: &[usize]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let zero = vec![f.zero(); self.algebra.dim()];
        if !path.is_empty() {
            match self.quiver.endpoints(path) {
                Some((s, _)) if s == start => {}
                _ => return zero,
            }
        }
        self.coords.get(&(start, path.to_vec())).cloned().unwrap_or(zero)
    }

    pub fn arrow_element(&self, a: usize) -> Vec<F::Elem> {
        self.path_element(self.quiver.arrows[a].source, &[a])
    }

    pub fn vertex_element(&self, v: usize) -> Vec<F::Elem> {
        self.path_element(v, &[])
    }

    /// Coordinates of a relation-style combination of paths.
    pub fn combination(&self, terms: &[(F::Elem, Vec<usize>)]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let mut out = vec![f.zero(); self.algebra.dim()];
        for (c, p) in terms {
            let start = match self.quiver.endpoints(p) {
                Some((s, _)) => s,
                None => continue,
            };
            crate::linalg::matrix::axpy(f, &mut out, c, &self.path_element(start, p));
        }
        out
    }
}

fn check_relations<F: Field>(quiver: &Quiver, relations: &[Relation<F>]) -> Result<()> {
    for (idx, rel) in relations.iter().enumerate() {
        let mut ends = None;
        for (_, p) in rel {
            if p.len() < 2 {
                return Err(Error::InadmissibleRelation(idx));
            }
            let e = quiver.endpoints(p).ok_or(Error::InadmissibleRelation(idx))?;
            if *ends.get_or_insert(e) != e {
                return Err(Error::InadmissibleRelation(idx));
            }
        }
    }
    Ok(())
}

/// Truncated path arithmetic on the span of paths of length at most `n`.
pub(super) struct Truncated<'a, F: Field> {
    field: &'a F,
    quiver: &'a Quiver,
    pub(super) paths: Vec<PathKey>,
    index: HashMap<PathKey, usize>,
}

impl<'a, F: Field> Truncated<'a, F> {
    pub(super) fn new(field: &'a F, quiver: &'a Quiver, n: usize) -> Self {
        // Longest paths first, so elimination pivots on long paths and the
        // quotient basis consists of short ones.
        let paths: Vec<PathKey> = quiver.paths_up_to(n).into_iter().rev().flatten().collect();
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Truncated { field, quiver, paths, index }
    }

    pub(super) fn len(&self) -> usize {
        self.paths.len()
    }

    pub(super) fn vector(&self, terms: &[(F::Elem, Vec<usize>)]) -> Vec<F::Elem> {
        let f = self.field;
        let mut v = vec![f.zero(); self.len()];
        for (c, p) in terms {
            let start = self.quiver.endpoints(p).map_or(0, |e| e.0);
            if let Some(&i) = self.index.get(&(start, p.clone())) {
                v[i] = f.add(&v[i], c);
            }
        }
        v
    }

    /// `arrow * x` when `left`, else `x * arrow`.
    fn times_arrow(&self, x: &[F::Elem], a: usize, left: bool) -> Vec<F::Elem> {
        let f = self.field;
        let arrow = &self.quiver.arrows[a];
        let mut out = vec![f.zero(); self.len()];
        for (i, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let (start, p) = &self.paths[i];
            let key = if left {
                if self.quiver.end_of(&self.paths[i]) != arrow.source {
                    continue;
                }
                let mut q = p.clone();
                q.push(a);
                (*start, q)
            } else {
                if *start != arrow.target {
                    continue;
                }
                let mut q = vec![a];
                q.extend_from_slice(p);
                (arrow.source, q)
            };
            if let Some(&j) = self.index.get(&key) {
                out[j] = f.add(&out[j], c);
            }
        }
        out
    }

    /// `e_left x e_right`
    fn vertex_sandwich(&self, x: &[F::Elem], left: usize, right: usize) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = x.to_vec();
        for (i, c) in out.iter_mut().enumerate() {
            let key = &self.paths[i];
            if key.0 != right || self.quiver.end_of(key) != left {
                *c = f.zero();
            }
        }
        out
    }

    /// Two-sided ideal generated by the relations, modulo longer paths.
    pub(super) fn ideal(&self, relations: &[Relation<F>]) -> Subspace<F> {
        let mut ech = Echelon::new(self.field, self.len());
        let mut queue = Vec::new();
        for rel in relations {
            let v = self.vector(rel);
            for i in 0..self.quiver.vertices {
                for j in 0..self.quiver.vertices {
                    queue.push(self.vertex_sandwich(&v, i, j));
                }
            }
        }
        while let Some(x) = queue.pop() {
            if !ech.insert(x.clone()) {
                continue;
            }
            for a in 0..self.quiver.arrows.len() {
                queue.push(self.times_arrow(&x, a, true));
                queue.push(self.times_arrow(&x, a, false));
            }
        }
        ech.into_subspace()
    }
}

/// Builds `kQ / (relations)`, increasing the truncation degree `N` until
/// every path of length `N` lies in the ideal modulo longer paths.
pub fn path_algebra_mod_relations<F: Field>(
    field: &F,
    quiver: &Quiver,
    relations: &[Relation<F>],
    degree_cap: usize,
) -> Result<PathQuotient<F>> {
    check_relations::<F>(quiver, relations)?;
    for n in 1..=degree_cap.max(1) {
        let t = Truncated::new(field, quiver, n);
        let ideal = t.ideal(relations);
        let top_dead = t
            .paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.1.len() == n)
            .all(|(i, _)| ideal.contains(&crate::linalg::matrix::unit_vec(field, t.len(), i)));
        if !top_dead {
            continue;
        }
        return Ok(build(field, quiver, &t, &ideal, n));
    }
    Err(Error::NotFiniteDimensional(degree_cap))
}

fn build<F: Field>(field: &F, quiver: &Quiver, t: &Truncated<'_, F>, ideal: &Subspace<F>, n: usize) -> PathQuotient<F> {
    let free = ideal.free_columns();
    let mut basis: Vec<PathKey> = free.iter().map(|&c| t.paths[c].clone()).collect();
    basis.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)).then(a.0.cmp(&b.0)));
    // quotient_coords follow the free-column order; permute to basis order
    let free_pos: HashMap<PathKey, usize> = free.iter().enumerate().map(|(k, &c)| (t.paths[c].clone(), k)).collect();
    let perm: Vec<usize> = basis.iter().map(|p| free_pos[p]).collect();
    let d = basis.len();
    let mut coords = HashMap::new();
    for (i, p) in t.paths.iter().enumerate() {
        let q = ideal.quotient_coords(&crate::linalg::matrix::unit_vec(field, t.len(), i));
        let v: Vec<F::Elem> = perm.iter().map(|&k| q[k].clone()).collect();
        coords.insert(p.clone(), v);
    }
    let zero = vec![field.zero(); d];
    let product = |p: &PathKey, q: &PathKey| -> Vec<F::Elem> {
        // p after q
        if quiver.end_of(q) != p.0 {
            return zero.clone();
        }
        let mut arrows = q.1.clone();
        arrows.extend_from_slice(&p.1);
        coords.get(&(q.0, arrows)).cloned().unwrap_or_else(|| zero.clone())
    };
    let mut table = Vec::with_capacity(d * d);
    for p in &basis {
        for q in &basis {
            table.push(product(p, q));
        }
    }
    let idempotents: Vec<Vec<F::Elem>> = (0..quiver.vertices).map(|v| coords[&(v, vec![])].clone()).collect();
    let mut unit = zero.clone();
    for e in &idempotents {
        crate::linalg::matrix::axpy(field, &mut unit, &field.one(), e);
    }
    let labels = basis.iter().map(|(s, p)| quiver.path_label(*s, p)).collect();
    let vertex_labels = (1..=quiver.vertices).map(|v| format!("e{v}")).collect();
    let algebra =
        Algebra::new(field, labels, table, unit, idempotents, vertex_labels).expect("path quotient is associative");
    PathQuotient { algebra, quiver: quiver.clone(), basis, coords, nilpotency: n }
}
