//! Quivers, their bilinear forms, reflections and derived quivers.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite directed multigraph. Parallel arrows and oriented cycles
/// (including 1-cycles) are allowed.
///
/// Serializes as `{"vertices": [..], "arrows": [[name, source, target], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverDoc", into = "QuiverDoc")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct QuiverDoc {
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
}

impl TryFrom<QuiverDoc> for Quiver {
    type Error = Error;

    fn try_from(doc: QuiverDoc) -> Result<Quiver> {
        Quiver::new(&doc.vertices, &doc.arrows)
    }
}

impl From<Quiver> for QuiverDoc {
    fn from(q: Quiver) -> QuiverDoc {
        let arrows = q
            .arrows
            .iter()
            .map(|a| (a.name.clone(), q.vertices[a.source].clone(), q.vertices[a.target].clone()))
            .collect();
        QuiverDoc { vertices: q.vertices, arrows }
    }
}

/// Orientation of a reflection step: `Plus` at a source, `Minus` at a sink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Bookkeeping for the double of a quiver: vertex `(v, i)` sits at index
/// `i * n + v` where `n` is the vertex count of the original quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleMap {
    pub base_vertices: usize,
    pub base_arrows: usize,
}

impl DoubleMap {
    pub fn vertex(&self, v: usize, layer: usize) -> usize {
        layer * self.base_vertices + v
    }

    /// Index of the connector arrow `(v, 0) -> (v, 1)`.
    pub fn connector(&self, v: usize) -> usize {
        v
    }

    /// Index of the lifted arrow `(ia, 0) -> (ta, 1)`.
    pub fn lifted_arrow(&self, a: usize) -> usize {
        self.base_vertices + a
    }
}

impl Quiver {
    /// Builds a quiver from vertex names and `(arrow, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let index = |name: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::input(format!("arrow endpoint `{name}` is not a vertex")))
        };
        let mut built = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            built.push(Arrow {
                name: name.as_ref().to_string(),
                source: index(s.as_ref())?,
                target: index(t.as_ref())?,
            });
        }
        Quiver::from_parts(vertices, built)
    }

    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            ensure!(seen.insert(v.as_str()), Error::input(format!("duplicate vertex `{v}`")));
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            ensure!(
                a.source < vertices.len() && a.target < vertices.len(),
                Error::input(format!("arrow `{}` has an endpoint out of range", a.name))
            );
            ensure!(seen.insert(a.name.as_str()), Error::input(format!("duplicate arrow `{}`", a.name)));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// `n` vertices named `v0..` and arrows given by index pairs, named `a0..`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (0..n).map(|i| format!("v{i}")).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| Arrow { name: format!("a{k}"), source: s, target: t })
            .collect();
        Quiver::from_parts(vertices, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn zero(&self) -> DimVec {
        DimVec::zero(self.vertex_count())
    }

    pub fn unit(&self, v: usize) -> DimVec {
        DimVec::unit(self.vertex_count(), v)
    }

    /// Number of 1-cycles at `v`.
    pub fn loops_at(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v && a.target == v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    /// Sinks in declaration order.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_source(v)).collect()
    }

    /// True iff there is no oriented cycle of any length, 1-cycles included.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        removed == n
    }

    /// Connectivity of the underlying undirected graph. The empty quiver is
    /// not connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.components_of(&(0..n).collect::<Vec<_>>()).len() == 1
    }

    /// Connected components of the full subquiver on `subset`, each sorted.
    pub fn components_of(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let inside: HashSet<usize> = subset.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut comps = Vec::new();
        for &start in subset {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for a in &self.arrows {
                    let other = if a.source == v {
                        a.target
                    } else if a.target == v {
                        a.source
                    } else {
                        continue;
                    };
                    if inside.contains(&other) && seen.insert(other) {
                        comp.push(other);
                        stack.push(other);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The full subquiver on `subset` (kept in declaration order).
    pub fn restrict(&self, subset: &[usize]) -> Quiver {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos = |v: usize| keep.iter().position(|&k| k == v);
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| Some(Arrow { name: a.name.clone(), source: pos(a.source)?, target: pos(a.target)? }))
            .collect();
        Quiver { vertices, arrows }
    }

    /// Support of `alpha` as a subquiver, plus the original index of each of
    /// its vertices.
    pub fn support(&self, alpha: &DimVec) -> Result<(Quiver, Vec<usize>)> {
        self.check_dim(alpha)?;
        alpha.check_nonneg()?;
        let verts = alpha.support();
        Ok((self.restrict(&verts), verts))
    }

    pub(crate) fn check_dim(&self, alpha: &DimVec) -> Result<()> {
        alpha.check_len(self.vertex_count())
    }

    /// Euler form without key checks; callers guarantee matching lengths.
    pub(crate) fn euler(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let off: i64 = self.arrows.iter().map(|ar| a[ar.source] * b[ar.target]).sum();
        diag - off
    }

    /// `<a, b> = sum_v a(v) b(v) - sum_arrows a(source) b(target)`.
    pub fn euler_form(&self, a: &DimVec, b: &DimVec) -> Result<i64> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.euler(a.entries(), b.entries()))
    }

    /// Symmetrised Euler form `(a, b) = <a, b> + <b, a>`.
    pub fn kac_form(&self, a: &DimVec, b: &DimVec) -> Result<i64> {
        Ok(self.euler_form(a, b)? + self.euler_form(b, a)?)
    }

    pub(crate) fn kac_with_unit(&self, a: &[i64], v: usize) -> i64 {
        let mut s = 2 * a[v];
        for ar in &self.arrows {
            if ar.source == v {
                s -= a[ar.target];
            }
            if ar.target == v {
                s -= a[ar.source];
            }
        }
        s
    }

    fn check_loop_free_vertex(&self, v: usize) -> Result<()> {
        ensure!(v < self.vertex_count(), Error::input(format!("vertex index {v} out of range")));
        ensure!(self.loops_at(v) == 0, Error::UnsupportedVertex(self.vertices[v].clone()));
        Ok(())
    }

    /// Reflection `r_v(a) = a - (a, e_v) e_v`.
    pub fn reflect(&self, v: usize, alpha: &DimVec) -> Result<DimVec> {
        self.check_loop_free_vertex(v)?;
        self.check_dim(alpha)?;
        let mut out = alpha.clone().into_entries();
        out[v] -= self.kac_with_unit(alpha.entries(), v);
        Ok(DimVec::new(out))
    }

    /// True iff `(alpha, e_v) <= 0` at every vertex. Defined only for quivers
    /// without 1-cycles.
    pub fn is_fundamental(&self, alpha: &DimVec) -> Result<bool> {
        self.check_dim(alpha)?;
        alpha.check_nonneg()?;
        for v in 0..self.vertex_count() {
            self.check_loop_free_vertex(v)?;
        }
        Ok((0..self.vertex_count()).all(|v| self.kac_with_unit(alpha.entries(), v) <= 0))
    }

    /// Connected support on which `alpha` is radical for the Kac form.
    /// Meant for vectors already known to lie in the fundamental region.
    pub fn is_null_dimvec(&self, alpha: &DimVec) -> Result<bool> {
        self.check_dim(alpha)?;
        alpha.check_nonneg()?;
        if alpha.is_zero() {
            return Ok(false);
        }
        let (sup, verts) = self.support(alpha)?;
        if !sup.is_connected() {
            return Ok(false);
        }
        Ok(verts.iter().all(|&v| self.kac_with_unit(alpha.entries(), v) == 0))
    }

    /// Reverses every arrow.
    pub fn dual(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// The bipartite double: vertices `(v,0)` then `(v,1)`; connector arrows
    /// `(v,0) -> (v,1)` followed by lifted arrows `(ia,0) -> (ta,1)`.
    pub fn double(&self) -> (Quiver, DoubleMap) {
        let n = self.vertex_count();
        let mut vertices = Vec::with_capacity(2 * n);
        for layer in 0..2 {
            for v in &self.vertices {
                vertices.push(format!("{v}_{layer}"));
            }
        }
        let mut arrows = Vec::with_capacity(n + self.arrow_count());
        for (v, name) in self.vertices.iter().enumerate() {
            arrows.push(Arrow { name: format!("{name}_2"), source: v, target: n + v });
        }
        for a in &self.arrows {
            arrows.push(Arrow { name: format!("{}_0", a.name), source: a.source, target: n + a.target });
        }
        (Quiver { vertices, arrows }, DoubleMap { base_vertices: n, base_arrows: self.arrow_count() })
    }

    /// `alpha'(v,0) = alpha'(v,1) = alpha(v)`.
    pub fn lift_dimvec(&self, alpha: &DimVec) -> Result<DimVec> {
        self.check_dim(alpha)?;
        let mut e = alpha.entries().to_vec();
        e.extend_from_slice(alpha.entries());
        Ok(DimVec::new(e))
    }

    /// Inverse of [`lift_dimvec`](Self::lift_dimvec); fails unless both
    /// layers agree.
    pub fn pull_back_dimvec(&self, lifted: &DimVec) -> Result<DimVec> {
        let n = self.vertex_count();
        ensure!(lifted.len() == 2 * n, Error::input("vector is not on the double of this quiver"));
        let (lo, hi) = lifted.entries().split_at(n);
        ensure!(lo == hi, Error::internal(format!("{lifted:?} is not a lifted dimension vector")));
        Ok(DimVec::new(lo.to_vec()))
    }

    /// Reverses every arrow incident to `v` (the quiver `Q_v^+` or `Q_v^-`).
    pub fn reflected_at(&self, v: usize) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    if a.source == v || a.target == v {
                        Arrow { name: a.name.clone(), source: a.target, target: a.source }
                    } else {
                        a.clone()
                    }
                })
                .collect(),
        }
    }

    /// Exchanges the roles of vertex positions `i` and `j` in every arrow.
    /// Vertex names stay with their positions.
    pub fn transpose_vertices(&self, i: usize, j: usize) -> Quiver {
        let sw = |x: usize| {
            if x == i {
                j
            } else if x == j {
                i
            } else {
                x
            }
        };
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: sw(a.source), target: sw(a.target) })
                .collect(),
        }
    }

    /// For a two-vertex quiver without 1-cycles whose arrows all point the
    /// same way, returns `(source, target, arrow count)`.
    pub fn kronecker_shape(&self) -> Option<(usize, usize, usize)> {
        if self.vertex_count() != 2 || self.has_loops() {
            return None;
        }
        let forward = self.arrows.iter().filter(|a| a.source == 0).count();
        let n = self.arrow_count();
        if forward == n {
            Some((0, 1, n))
        } else if forward == 0 {
            Some((1, 0, n))
        } else {
            None
        }
    }
}

/// Greatest common divisor of a non-zero, non-negative dimension vector.
pub fn greatest_divisor(alpha: &DimVec) -> Result<u64> {
    alpha.check_nonneg()?;
    ensure!(!alpha.is_zero(), Error::input("greatest divisor of the zero vector"));
    Ok(alpha.gcd())
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver[{}; ", self.vertices.join(","))?;
        for (k, a) in self.arrows.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}->{}", a.name, self.vertices[a.source], self.vertices[a.target])?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn euler_examples() {
        let k3 = corpus::kronecker(3);
        assert_eq!(k3.euler_form(&[1, 1].into(), &[1, 1].into()).unwrap(), -1);
        let a2 = corpus::a2();
        assert_eq!(a2.euler_form(&[1, 0].into(), &[0, 1].into()).unwrap(), -1);
        for v in 0..2 {
            assert_eq!(a2.euler_form(&a2.unit(v), &a2.unit(v)).unwrap(), 1);
        }
    }

    #[test]
    fn key_mismatch_is_input_error() {
        let k3 = corpus::kronecker(3);
        let err = k3.euler_form(&[1, 1, 1].into(), &[1, 1].into()).unwrap_err();
        assert_eq!(err.reason(), "input");
    }

    #[test]
    fn kac_examples() {
        assert_eq!(corpus::kronecker(2).kac_form(&[1, 1].into(), &[1, 1].into()).unwrap(), 0);
        assert_eq!(corpus::kronecker(3).kac_form(&[1, 1].into(), &[1, 1].into()).unwrap(), -2);
    }

    #[test]
    fn reflect_examples() {
        let k3 = corpus::kronecker(3);
        assert_eq!(k3.reflect(0, &[2, 2].into()).unwrap(), DimVec::from([4, 2]));
        let k2 = corpus::kronecker(2);
        assert_eq!(k2.reflect(1, &[3, 5].into()).unwrap(), DimVec::from([3, 1]));
        let err = corpus::loops(1).reflect(0, &[2].into()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedVertex(_)));
    }

    #[test]
    fn fundamental_examples() {
        assert!(corpus::kronecker(2).is_fundamental(&[1, 1].into()).unwrap());
        assert!(corpus::kronecker(3).is_fundamental(&[2, 3].into()).unwrap());
        assert!(!corpus::a2().is_fundamental(&[1, 1].into()).unwrap());
        assert!(corpus::loops(1).is_fundamental(&[1].into()).is_err());
    }

    #[test]
    fn structural_predicates() {
        let a2 = corpus::a2();
        let (sup, verts) = a2.support(&[1, 0].into()).unwrap();
        assert_eq!((sup.vertex_count(), sup.arrow_count()), (1, 0));
        assert_eq!(verts, vec![0]);
        assert!(sup.is_connected());
        assert!(!corpus::loops(1).is_acyclic());
        let tri = corpus::triangle();
        assert!(!tri.is_acyclic());
        assert!(tri.sinks().is_empty());
        assert!(a2.is_acyclic());
        assert_eq!(a2.sinks(), vec![1]);
    }

    #[test]
    fn greatest_divisor_examples() {
        assert_eq!(greatest_divisor(&[2, 2].into()).unwrap(), 2);
        assert_eq!(greatest_divisor(&[3, 5].into()).unwrap(), 1);
        assert_eq!(greatest_divisor(&[6, 9, 15].into()).unwrap(), 3);
        assert!(greatest_divisor(&[0, 0].into()).is_err());
    }

    #[test]
    fn double_of_one_loop_is_kronecker_two() {
        let (d, _) = corpus::loops(1).double();
        assert_eq!(d.kronecker_shape(), Some((0, 1, 2)));
        assert_eq!(corpus::loops(1).lift_dimvec(&[3].into()).unwrap(), DimVec::from([3, 3]));
        assert!(d.is_acyclic());
    }

    #[test]
    fn null_examples() {
        let k2 = corpus::kronecker(2);
        assert!(k2.is_null_dimvec(&[1, 1].into()).unwrap());
        assert!(k2.is_null_dimvec(&[2, 2].into()).unwrap());
        assert!(!corpus::kronecker(3).is_null_dimvec(&[2, 2].into()).unwrap());
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new(&["v", "v"], &[]).is_err());
        assert!(Quiver::new(&["v"], &[("a", "v", "w")]).is_err());
        assert!(Quiver::new(&["v", "w"], &[("a", "v", "w"), ("a", "w", "v")]).is_err());
    }
}
