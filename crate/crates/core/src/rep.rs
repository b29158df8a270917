//! Explicit representations over an exact field.
//!
//! An arrow `a: i -> t` acts by left multiplication on column vectors, so its
//! matrix has shape `dims(t) x dims(i)`. A morphism `phi: R -> S` is a matrix
//! `phi(v)` of shape `dims_S(v) x dims_R(v)` per vertex with
//! `phi(t) R(a) = S(a) phi(i)` for every arrow.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::field::{Field, FieldDesc};
use crate::matrix::Matrix;
use crate::quiver::{Quiver, Sign};
use crate::word::{find_word_for_real_root, ReflectionWord, WordStep};

#[derive(Clone, Debug, PartialEq)]
pub struct Rep<F: Field> {
    quiver: Quiver,
    field: F,
    dims: DimVec,
    maps: Vec<Matrix<F::Elem>>,
}

/// Per-vertex matrices of a morphism between two representations.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMap<E> {
    pub maps: Vec<Matrix<E>>,
}

fn dim(d: &DimVec, v: usize) -> usize {
    d[v] as usize
}

impl<F: Field> Rep<F> {
    pub fn new(quiver: Quiver, field: F, dims: DimVec, maps: Vec<Matrix<F::Elem>>) -> Result<Rep<F>> {
        quiver.check_dim(&dims)?;
        dims.check_nonneg()?;
        ensure!(maps.len() == quiver.arrow_count(), Error::input("one matrix per arrow is required"));
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            ensure!(
                m.shape() == (dim(&dims, a.target), dim(&dims, a.source)),
                Error::input(format!(
                    "matrix for `{}` is {:?}, expected {}x{}",
                    a.name,
                    m.shape(),
                    dims[a.target],
                    dims[a.source]
                ))
            );
        }
        Ok(Rep { quiver, field, dims, maps })
    }

    pub fn zero(quiver: &Quiver, field: &F) -> Rep<F> {
        Rep::with_fn(quiver, field, &quiver.zero(), |_, r, c| Matrix::zeros(field, r, c))
    }

    /// The simple representation at `v`.
    pub fn simple(quiver: &Quiver, field: &F, v: usize) -> Result<Rep<F>> {
        ensure!(v < quiver.vertex_count(), Error::input("vertex out of range"));
        ensure!(quiver.loops_at(v) == 0, Error::UnsupportedVertex(quiver.vertex_name(v).to_string()));
        Ok(Rep::with_fn(quiver, field, &quiver.unit(v), |_, r, c| Matrix::zeros(field, r, c)))
    }

    fn with_fn(
        quiver: &Quiver,
        field: &F,
        dims: &DimVec,
        mut g: impl FnMut(usize, usize, usize) -> Matrix<F::Elem>,
    ) -> Rep<F> {
        let maps =
            quiver.arrows().iter().enumerate().map(|(k, a)| g(k, dim(dims, a.target), dim(dims, a.source))).collect();
        Rep { quiver: quiver.clone(), field: field.clone(), dims: dims.clone(), maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &DimVec {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        dim(&self.dims, v)
    }

    pub fn maps(&self) -> &[Matrix<F::Elem>] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F::Elem> {
        &self.maps[arrow]
    }

    pub(crate) fn compatible(&self, other: &Rep<F>) -> Result<()> {
        ensure!(
            self.field.descriptor() == other.field.descriptor(),
            Error::FieldMismatch(format!("{:?} vs {:?}", self.field.descriptor(), other.field.descriptor()))
        );
        ensure!(self.quiver == other.quiver, Error::input("representations of different quivers"));
        Ok(())
    }

    pub fn direct_sum(&self, other: &Rep<F>) -> Result<Rep<F>> {
        self.compatible(other)?;
        let f = &self.field;
        let dims = &self.dims + &other.dims;
        Ok(Rep::with_fn(&self.quiver, f, &dims, |k, r, c| {
            let mut m = Matrix::zeros(f, r, c);
            m.paste(0, 0, &self.maps[k]);
            m.paste(self.maps[k].rows(), self.maps[k].cols(), &other.maps[k]);
            m
        }))
    }

    /// The representation of the dual quiver given by transposed matrices.
    pub fn dual(&self) -> Rep<F> {
        Rep {
            quiver: self.quiver.dual(),
            field: self.field.clone(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Relabels vertex positions `i` and `j` (see [`Quiver::transpose_vertices`]).
    pub fn transpose_vertices(&self, i: usize, j: usize) -> Rep<F> {
        let mut e = self.dims.entries().to_vec();
        e.swap(i, j);
        Rep {
            quiver: self.quiver.transpose_vertices(i, j),
            field: self.field.clone(),
            dims: DimVec::new(e),
            maps: self.maps.clone(),
        }
    }

    /// Reflection functor at a sink (`Minus`) or source (`Plus`). Fails with
    /// an obstruction when the representation has a simple summand there.
    pub fn reflect(&self, v: usize, sign: Sign) -> Result<Rep<F>> {
        let q = &self.quiver;
        let f = &self.field;
        ensure!(v < q.vertex_count(), Error::input("vertex out of range"));
        ensure!(q.loops_at(v) == 0, Error::UnsupportedVertex(q.vertex_name(v).to_string()));
        let incident: Vec<usize> =
            (0..q.arrow_count()).filter(|&k| q.arrows()[k].source == v || q.arrows()[k].target == v).collect();
        let new_q = q.reflected_at(v);
        let mut maps = self.maps.clone();
        let new_dim;
        match sign {
            Sign::Minus => {
                ensure!(q.is_sink(v), Error::input(format!("`{}` is not a sink", q.vertex_name(v))));
                let blocks: Vec<&Matrix<F::Elem>> = incident.iter().map(|&k| &self.maps[k]).collect();
                let total: usize = blocks.iter().map(|b| b.cols()).sum();
                let phi = Matrix::hstack(self.dim_at(v), &blocks, f.zero());
                ensure!(
                    phi.rank(f) == self.dim_at(v),
                    Error::Obstruction(format!("simple summand at sink `{}`", q.vertex_name(v)))
                );
                let kernel = phi.kernel(f);
                new_dim = kernel.cols();
                let mut r0 = 0;
                for (&k, b) in incident.iter().zip(blocks.iter().map(|b| b.cols())) {
                    maps[k] = kernel.submatrix(r0, b, 0, new_dim);
                    r0 += b;
                }
                debug_assert_eq!(r0, total);
            }
            Sign::Plus => {
                ensure!(q.is_source(v), Error::input(format!("`{}` is not a source", q.vertex_name(v))));
                let blocks: Vec<&Matrix<F::Elem>> = incident.iter().map(|&k| &self.maps[k]).collect();
                let psi = Matrix::vstack(self.dim_at(v), &blocks, f.zero());
                ensure!(
                    psi.rank(f) == self.dim_at(v),
                    Error::Obstruction(format!("simple summand at source `{}`", q.vertex_name(v)))
                );
                let coker = psi.left_kernel(f);
                new_dim = coker.rows();
                let mut c0 = 0;
                for (&k, b) in incident.iter().zip(blocks.iter().map(|b| b.rows())) {
                    maps[k] = coker.submatrix(0, new_dim, c0, b);
                    c0 += b;
                }
            }
        }
        let mut dims = self.dims.clone().into_entries();
        dims[v] = new_dim as i64;
        let out = Rep::new(new_q, f.clone(), DimVec::new(dims), maps)?;
        ensure!(
            out.dims == q.reflect(v, &self.dims)?,
            Error::internal("reflection functor disagrees with the reflection of dimensions")
        );
        Ok(out)
    }

    fn apply_step(&self, step: &WordStep, inverse: bool) -> Result<Rep<F>> {
        match *step {
            WordStep::Reflect { vertex, sign } => self.reflect(vertex, if inverse { sign.flip() } else { sign }),
            WordStep::Transpose(i, j) => Ok(self.transpose_vertices(i, j)),
        }
    }

    /// Applies a reflection word forwards.
    pub fn apply_word(&self, word: &ReflectionWord) -> Result<Rep<F>> {
        let mut cur = if word.dualize { self.dual() } else { self.clone() };
        for step in &word.steps {
            cur = cur.apply_step(step, false)?;
        }
        Ok(cur)
    }

    /// Applies the inverse of a reflection word, starting from a
    /// representation of the quiver the word ends at.
    pub fn unapply_word(&self, word: &ReflectionWord) -> Result<Rep<F>> {
        let mut cur = self.clone();
        for step in word.steps.iter().rev() {
            cur = cur.apply_step(step, true)?;
        }
        Ok(if word.dualize { cur.dual() } else { cur })
    }

    /// The same representation on the double quiver, with identity connectors.
    pub fn to_double(&self) -> Rep<F> {
        let (dq, map) = self.quiver.double();
        let f = &self.field;
        let dims = self.quiver.lift_dimvec(&self.dims).expect("dims match the quiver");
        Rep::with_fn(&dq, f, &dims, |k, r, _| {
            if k < map.base_vertices {
                Matrix::identity(f, r)
            } else {
                self.maps[k - map.base_vertices].clone()
            }
        })
    }

    /// Transports a representation of the double of `base` back to `base`;
    /// every connector must be invertible.
    pub fn from_double(&self, base: &Quiver) -> Result<Rep<F>> {
        let (dq, map) = base.double();
        ensure!(self.quiver == dq, Error::input("not a representation of the double quiver"));
        let f = &self.field;
        let n = base.vertex_count();
        let mut inv = Vec::with_capacity(n);
        for v in 0..n {
            let c = &self.maps[map.connector(v)];
            let ci = c
                .inverse(f)
                .ok_or_else(|| Error::Obstruction(format!("connector at `{}` is singular", base.vertex_name(v))))?;
            inv.push(ci);
        }
        let dims = DimVec::new(self.dims.entries()[..n].to_vec());
        let maps = base
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| inv[a.target].mul(f, &self.maps[map.lifted_arrow(k)]))
            .collect();
        Rep::new(base.clone(), f.clone(), dims, maps)
    }

    pub fn identity_map(&self) -> RepMap<F::Elem> {
        RepMap {
            maps: (0..self.quiver.vertex_count()).map(|v| Matrix::identity(&self.field, self.dim_at(v))).collect(),
        }
    }

    /// Checks shapes and the intertwining identity of `phi: self -> target`.
    pub fn check_map(&self, target: &Rep<F>, phi: &RepMap<F::Elem>) -> Result<()> {
        self.compatible(target)?;
        let f = &self.field;
        ensure!(phi.maps.len() == self.quiver.vertex_count(), Error::input("one matrix per vertex is required"));
        for v in 0..self.quiver.vertex_count() {
            ensure!(
                phi.maps[v].shape() == (target.dim_at(v), self.dim_at(v)),
                Error::input("morphism matrix has the wrong shape")
            );
        }
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            let lhs = phi.maps[a.target].mul(f, &self.maps[k]);
            let rhs = target.maps[k].mul(f, &phi.maps[a.source]);
            ensure!(lhs == rhs, Error::internal(format!("map does not intertwine `{}`", a.name)));
        }
        Ok(())
    }

    /// Kernel of `phi: self -> target` with its inclusion.
    pub fn kernel_of(&self, target: &Rep<F>, phi: &RepMap<F::Elem>) -> Result<(Rep<F>, RepMap<F::Elem>)> {
        self.check_map(target, phi)?;
        let f = &self.field;
        let incl: Vec<Matrix<F::Elem>> = phi.maps.iter().map(|m| m.kernel(f)).collect();
        let dims = DimVec::new(incl.iter().map(|m| m.cols() as i64).collect());
        let mut maps = Vec::with_capacity(self.maps.len());
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            let image = self.maps[k].mul(f, &incl[a.source]);
            let m =
                incl[a.target].solve(f, &image).ok_or_else(|| Error::internal("kernel is not a subrepresentation"))?;
            maps.push(m);
        }
        Ok((Rep::new(self.quiver.clone(), f.clone(), dims, maps)?, RepMap { maps: incl }))
    }

    /// Cokernel of `phi: self -> target` with its projection.
    pub fn cokernel_of(&self, target: &Rep<F>, phi: &RepMap<F::Elem>) -> Result<(Rep<F>, RepMap<F::Elem>)> {
        self.check_map(target, phi)?;
        let f = &self.field;
        let proj: Vec<Matrix<F::Elem>> = phi.maps.iter().map(|m| m.left_kernel(f)).collect();
        let dims = DimVec::new(proj.iter().map(|m| m.rows() as i64).collect());
        let mut maps = Vec::with_capacity(self.maps.len());
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            let section = proj[a.source]
                .right_inverse(f)
                .ok_or_else(|| Error::internal("cokernel projection is not surjective"))?;
            maps.push(proj[a.target].mul(f, &target.maps[k]).mul(f, &section));
        }
        Ok((Rep::new(self.quiver.clone(), f.clone(), dims, maps)?, RepMap { maps: proj }))
    }

    /// Pushout of `left: self -> a` and `right: self -> b`, returned with the
    /// two maps into it.
    pub fn pushout(
        &self,
        a: &Rep<F>,
        left: &RepMap<F::Elem>,
        b: &Rep<F>,
        right: &RepMap<F::Elem>,
    ) -> Result<(Rep<F>, RepMap<F::Elem>, RepMap<F::Elem>)> {
        self.check_map(a, left)?;
        self.check_map(b, right)?;
        let f = &self.field;
        let sum = a.direct_sum(b)?;
        let h = RepMap {
            maps: (0..self.quiver.vertex_count())
                .map(|v| Matrix::vstack(self.dim_at(v), &[&left.maps[v], &right.maps[v].neg(f)], f.zero()))
                .collect(),
        };
        let (p, proj) = self.cokernel_of(&sum, &h)?;
        let (mut to_a, mut to_b) = (Vec::new(), Vec::new());
        for (v, m) in proj.maps.iter().enumerate() {
            to_a.push(m.submatrix(0, m.rows(), 0, a.dim_at(v)));
            to_b.push(m.submatrix(0, m.rows(), a.dim_at(v), b.dim_at(v)));
        }
        Ok((p, RepMap { maps: to_a }, RepMap { maps: to_b }))
    }

    pub fn to_json(&self) -> Value {
        let q = &self.quiver;
        let mut dims = Map::new();
        for (v, name) in q.vertices().iter().enumerate() {
            dims.insert(name.clone(), Value::from(self.dims[v]));
        }
        let mut mats = Map::new();
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            let rows: Vec<Value> = (0..m.rows())
                .map(|i| Value::Array(m.row(i).iter().map(|x| self.field.elem_to_json(x)).collect()))
                .collect();
            mats.insert(a.name.clone(), Value::Array(rows));
        }
        let mut out = Map::new();
        out.insert("field".into(), serde_json::to_value(self.field.descriptor()).expect("serializable"));
        out.insert("dims".into(), Value::Object(dims));
        out.insert("matrices".into(), Value::Object(mats));
        Value::Object(out)
    }

    pub fn from_json(quiver: &Quiver, field: &F, doc: &Value) -> Result<Rep<F>> {
        let desc: FieldDesc = serde_json::from_value(doc.get("field").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::input(format!("bad field descriptor: {e}")))?;
        ensure!(
            desc == field.descriptor(),
            Error::FieldMismatch(format!("dump is over {desc:?}, expected {:?}", field.descriptor()))
        );
        let dims_doc = doc.get("dims").and_then(Value::as_object).ok_or_else(|| Error::input("missing `dims`"))?;
        let mut dims = Vec::new();
        for name in quiver.vertices() {
            let d = dims_doc
                .get(name)
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::input(format!("missing dimension for `{name}`")))?;
            dims.push(d);
        }
        ensure!(dims_doc.len() == quiver.vertex_count(), Error::input("unknown vertex in `dims`"));
        let dims = DimVec::new(dims);
        let mats = doc.get("matrices").and_then(Value::as_object).ok_or_else(|| Error::input("missing `matrices`"))?;
        let mut maps = Vec::new();
        for a in quiver.arrows() {
            let (r, c) = (dims[a.target].max(0) as usize, dims[a.source].max(0) as usize);
            let rows = match mats.get(&a.name) {
                Some(Value::Array(rows)) => rows,
                _ => return Err(Error::input(format!("missing matrix for `{}`", a.name))),
            };
            let mut parsed = Vec::with_capacity(r);
            for row in rows {
                let row = row.as_array().ok_or_else(|| Error::input("matrix rows must be arrays"))?;
                parsed.push(row.iter().map(|x| field.elem_from_json(x)).collect::<Result<Vec<_>>>()?);
            }
            let m = if parsed.is_empty() { Matrix::zeros(field, r, c) } else { Matrix::from_rows(parsed, c)? };
            maps.push(m);
        }
        Rep::new(quiver.clone(), field.clone(), dims, maps)
    }
}

impl<E: Clone + PartialEq> RepMap<E> {
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, first: &RepMap<E>) -> RepMap<E> {
        RepMap { maps: self.maps.iter().zip(&first.maps).map(|(a, b)| a.mul(f, b)).collect() }
    }

    /// `sum_i coeffs[i] * maps[i]`; `basis` must be non-empty.
    pub fn combination<F: Field<Elem = E>>(f: &F, basis: &[RepMap<E>], coeffs: &[E]) -> RepMap<E> {
        let mut out: Vec<Matrix<E>> = basis[0].maps.iter().map(|m| Matrix::zeros(f, m.rows(), m.cols())).collect();
        for (phi, c) in basis.iter().zip(coeffs) {
            for (o, m) in out.iter_mut().zip(&phi.maps) {
                *o = o.add(f, &m.scale(f, c));
            }
        }
        RepMap { maps: out }
    }

    pub fn is_injective<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.maps.iter().all(|m| m.rank(f) == m.cols())
    }

    pub fn is_surjective<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.maps.iter().all(|m| m.rank(f) == m.rows())
    }

    pub fn is_invertible<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && m.rank(f) == m.rows())
    }
}

/// Seeded sample of a representation of dimension `alpha`.
pub fn random_rep<F: Field>(quiver: &Quiver, alpha: &DimVec, seed: u64, field: &F) -> Result<Rep<F>> {
    quiver.check_dim(alpha)?;
    alpha.check_nonneg()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Rep::with_fn(quiver, field, alpha, |_, r, c| Matrix::from_fn(r, c, |_, _| field.random(&mut rng))))
}

/// The two-term complex computing `Hom(R, S)` and `Ext(R, S)`.
pub struct HomComplex<F: Field> {
    field: F,
    d: Matrix<F::Elem>,
    var_offsets: Vec<usize>,
    eq_offsets: Vec<usize>,
    r_dims: DimVec,
    s_dims: DimVec,
    rank: usize,
}

impl<F: Field> HomComplex<F> {
    pub fn new(r: &Rep<F>, s: &Rep<F>) -> Result<HomComplex<F>> {
        r.compatible(s)?;
        let q = &r.quiver;
        let f = &r.field;
        let mut var_offsets = Vec::with_capacity(q.vertex_count());
        let mut n_vars = 0;
        for v in 0..q.vertex_count() {
            var_offsets.push(n_vars);
            n_vars += s.dim_at(v) * r.dim_at(v);
        }
        let mut eq_offsets = Vec::with_capacity(q.arrow_count());
        let mut n_eqs = 0;
        for a in q.arrows() {
            eq_offsets.push(n_eqs);
            n_eqs += s.dim_at(a.target) * r.dim_at(a.source);
        }
        let mut d = Matrix::zeros(f, n_eqs, n_vars);
        for (k, a) in q.arrows().iter().enumerate() {
            let (ia, ta) = (a.source, a.target);
            let (sa, ra) = (&s.maps[k], &r.maps[k]);
            let ri = r.dim_at(ia);
            for i in 0..s.dim_at(ta) {
                for j in 0..ri {
                    let row = eq_offsets[k] + i * ri + j;
                    // S(a) phi(ia)
                    for kk in 0..s.dim_at(ia) {
                        let col = var_offsets[ia] + kk * ri + j;
                        let cur = f.add(d.get(row, col), sa.get(i, kk));
                        d.set(row, col, cur);
                    }
                    // - phi(ta) R(a)
                    let rt = r.dim_at(ta);
                    for kk in 0..rt {
                        let col = var_offsets[ta] + i * rt + kk;
                        let cur = f.sub(d.get(row, col), ra.get(kk, j));
                        d.set(row, col, cur);
                    }
                }
            }
        }
        let rank = d.rank(f);
        let complex = HomComplex {
            field: f.clone(),
            d,
            var_offsets,
            eq_offsets,
            r_dims: r.dims.clone(),
            s_dims: s.dims.clone(),
            rank,
        };
        let euler = q.euler_form(&r.dims, &s.dims)?;
        ensure!(
            complex.hom_dim() as i64 - complex.ext_dim() as i64 == euler,
            Error::internal("hom - ext differs from the Euler form")
        );
        Ok(complex)
    }

    pub fn hom_dim(&self) -> usize {
        self.d.cols() - self.rank
    }

    pub fn ext_dim(&self) -> usize {
        self.d.rows() - self.rank
    }

    /// Basis of `Hom(R, S)`.
    pub fn hom_basis(&self) -> Vec<RepMap<F::Elem>> {
        let k = self.d.kernel(&self.field);
        (0..k.cols()).map(|c| self.unflatten(&k.column(c))).collect()
    }

    fn unflatten(&self, x: &[F::Elem]) -> RepMap<F::Elem> {
        let maps = (0..self.var_offsets.len())
            .map(|v| {
                let (rows, cols) = (dim(&self.s_dims, v), dim(&self.r_dims, v));
                Matrix::from_fn(rows, cols, |i, j| x[self.var_offsets[v] + i * cols + j].clone())
            })
            .collect();
        RepMap { maps }
    }

    /// Flattens one `dims_S(t) x dims_R(i)` matrix per arrow into the target
    /// space of the complex.
    pub fn flatten_cochain(&self, per_arrow: &[Matrix<F::Elem>]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.d.rows()];
        for (k, m) in per_arrow.iter().enumerate() {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out[self.eq_offsets[k] + i * m.cols() + j] = m.get(i, j).clone();
                }
            }
        }
        out
    }

    /// Rows span the functionals vanishing on coboundaries; applying this
    /// matrix to a flattened cochain gives its class in `Ext(R, S)`.
    pub fn ext_projection(&self) -> Matrix<F::Elem> {
        self.d.left_kernel(&self.field)
    }
}

pub fn hom_space<F: Field>(r: &Rep<F>, s: &Rep<F>) -> Result<Vec<RepMap<F::Elem>>> {
    Ok(HomComplex::new(r, s)?.hom_basis())
}

pub fn hom_dim<F: Field>(r: &Rep<F>, s: &Rep<F>) -> Result<usize> {
    Ok(HomComplex::new(r, s)?.hom_dim())
}

pub fn ext_dim<F: Field>(r: &Rep<F>, s: &Rep<F>) -> Result<usize> {
    Ok(HomComplex::new(r, s)?.ext_dim())
}

pub fn end_dim<F: Field>(r: &Rep<F>) -> Result<usize> {
    hom_dim(r, r)
}

const ISO_TRIALS: usize = 8;
const ISO_SEARCH_LIMIT: u64 = 10_000;

/// Semidecision of `R ~ S`: necessary dimension conditions, then random
/// combinations of a basis of `Hom(R, S)`, then exhaustive search when the
/// space is small enough.
pub fn is_isomorphic<F: Field>(r: &Rep<F>, s: &Rep<F>) -> Result<bool> {
    r.compatible(s)?;
    if r.dims != s.dims {
        return Ok(false);
    }
    if r.dims.is_zero() {
        return Ok(true);
    }
    let f = &r.field;
    let rs = HomComplex::new(r, s)?;
    let k = rs.hom_dim();
    if k == 0 || k != hom_dim(s, r)? || k != hom_dim(r, r)? || k != hom_dim(s, s)? {
        return Ok(false);
    }
    let basis = rs.hom_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1503);
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<F::Elem> = (0..k).map(|_| f.random(&mut rng)).collect();
        if RepMap::combination(f, &basis, &coeffs).is_invertible(f) {
            return Ok(true);
        }
    }
    let Some(order) = f.order() else {
        return Err(Error::Undecided("no invertible map found over an infinite field".into()));
    };
    let space = (order as f64).powi(k as i32);
    if space > ISO_SEARCH_LIMIT as f64 {
        return Err(Error::Undecided(format!("{order}^{k} candidate maps exceed the search limit")));
    }
    let mut digits = vec![0u64; k];
    loop {
        let coeffs: Vec<F::Elem> = digits.iter().map(|&x| f.from_i64(x as i64)).collect();
        if RepMap::combination(f, &basis, &coeffs).is_invertible(f) {
            return Ok(true);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(false);
            }
            digits[pos] += 1;
            if digits[pos] < order {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// The indecomposable representation of a real Schur root, obtained by
/// applying inverse reflection functors to a simple representation. When no
/// word is supplied a greedy one is searched for.
pub fn build_real_schur_rep<F: Field>(
    quiver: &Quiver,
    alpha: &DimVec,
    word: Option<&ReflectionWord>,
    field: &F,
) -> Result<Rep<F>> {
    let word = match word {
        Some(w) => w.clone(),
        None => find_word_for_real_root(quiver, alpha)?.0,
    };
    let (end, e) = word.reduce(quiver, alpha)?;
    let sup = e.support();
    ensure!(
        sup.len() == 1 && e[sup[0]] == 1,
        Error::input(format!("the word takes {alpha:?} to {e:?}, not a coordinate vector"))
    );
    let rep = Rep::simple(&end, field, sup[0])?.unapply_word(&word)?;
    ensure!(rep.dims() == alpha, Error::internal("reflected simple has the wrong dimension vector"));
    ensure!(end_dim(&rep)? == 1, Error::internal(format!("built representation of {alpha:?} is not Schur")));
    ensure!(ext_dim(&rep, &rep)? == 0, Error::internal(format!("built representation of {alpha:?} is not rigid")));
    Ok(rep)
}
