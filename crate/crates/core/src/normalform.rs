//! Reduction of Schur roots to tuples of square matrices up to simultaneous
//! conjugacy: the tilting pair `(S, T)` on a Kronecker quiver, the
//! equivalence with representations of dimension `(h, h)` on the
//! `(1+p)`-arrow Kronecker quiver, moduli reports and reduction towers.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::candecomp::Decomposer;
use crate::corpus;
use crate::decomp::RootClass;
use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::field::Field;
use crate::kronecker::{classify, KroneckerClass};
use crate::matrix::Matrix;
use crate::quiver::Quiver;
use crate::rep::{is_isomorphic, random_rep, HomComplex, Rep, RepMap};
use crate::word::ReflectionWord;

/// Resampling budget for the tilting construction.
pub const TILTING_RETRIES: usize = 5;

fn check_fundamental_pair(n: u64, ab: &DimVec) -> Result<(i64, i64)> {
    ensure!(n >= 1, Error::input("the Kronecker quiver needs at least one arrow"));
    ab.check_len(2)?;
    ab.check_nonneg()?;
    let (a, b) = (ab[0], ab[1]);
    let ni = n as i64;
    ensure!(ab.gcd() == 1, Error::input(format!("{ab:?} is not indivisible")));
    ensure!(a <= b, Error::input(format!("{ab:?} needs a <= b; dualize first")));
    ensure!(
        2 * a <= ni * b && 2 * b <= ni * a,
        Error::input(format!("{ab:?} is not in the fundamental region of Q({n})"))
    );
    Ok((a, b))
}

/// The unique `(c, d)` with `<(c,d),(a,b)> = 1` and `a < c <= a + b`.
pub fn perp_pair(n: u64, ab: &DimVec) -> Result<DimVec> {
    let (a, b) = check_fundamental_pair(n, ab)?;
    let slope = n as i64 * b - a;
    for c in a + 1..=a + b {
        let num = 1 + c * slope;
        if num % b == 0 {
            return Ok(DimVec::from([c, num / b]));
        }
    }
    Err(Error::internal(format!("no perpendicular partner for {ab:?} on Q({n})")))
}

/// `S` of dimension `(c, d)`, the sampled `R` of dimension `(a, b)`, the
/// kernel `K` of the unique map `S -> R`, and the pushout `T`.
#[derive(Clone, Debug)]
pub struct TiltingPair<F: Field> {
    pub n: u64,
    pub ab: DimVec,
    pub cd: DimVec,
    pub p: usize,
    pub s: Rep<F>,
    pub r: Rep<F>,
    pub k: Rep<F>,
    pub t: Rep<F>,
    /// Basis of `Hom(S, T)`, of size `1 + p`.
    pub hom_st: Vec<RepMap<F::Elem>>,
    /// Number of samples drawn, including the successful one.
    pub attempts: usize,
    /// One diagnostic per failed sample.
    pub failures: Vec<String>,
}

fn power<F: Field>(rep: &Rep<F>, k: usize) -> Result<Rep<F>> {
    let mut out = Rep::zero(rep.quiver(), rep.field());
    for _ in 0..k {
        out = out.direct_sum(rep)?;
    }
    Ok(out)
}

fn genericity(msg: impl Into<String>) -> Error {
    Error::Genericity(msg.into())
}

/// Builds the tilting pair, resampling on genericity failures up to
/// [`TILTING_RETRIES`] times.
pub fn build_tilting_pair<F: Field>(n: u64, ab: &DimVec, seed: u64, field: &F) -> Result<TiltingPair<F>> {
    let cd = perp_pair(n, ab)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for attempt in 1..=TILTING_RETRIES {
        let (s_seed, r_seed) = (rng.next_u64(), rng.next_u64());
        match try_tilting(n, ab, &cd, s_seed, r_seed, field) {
            Ok(mut tp) => {
                tp.attempts = attempt;
                tp.failures = failures;
                return Ok(tp);
            }
            Err(Error::Genericity(msg)) => failures.push(msg),
            Err(e) => return Err(e),
        }
    }
    Err(genericity(format!(
        "tilting pair for {ab:?} on Q({n}) failed {TILTING_RETRIES} samples: {}",
        failures.join("; ")
    )))
}

fn try_tilting<F: Field>(
    n: u64,
    ab: &DimVec,
    cd: &DimVec,
    s_seed: u64,
    r_seed: u64,
    field: &F,
) -> Result<TiltingPair<F>> {
    let f = field;
    let q = corpus::kronecker(n as usize);
    let s = random_rep(&q, cd, s_seed, f)?;
    let r = random_rep(&q, ab, r_seed, f)?;
    let sr = HomComplex::new(&s, &r)?;
    ensure!(
        sr.hom_dim() == 1 && sr.ext_dim() == 0,
        genericity(format!("hom(S,R) = {}, ext(S,R) = {}", sr.hom_dim(), sr.ext_dim()))
    );
    let onto = sr.hom_basis().remove(0);
    ensure!(onto.is_surjective(f), genericity("the map S -> R is not surjective"));
    let (k, incl) = s.kernel_of(&r, &onto)?;
    let kk = HomComplex::new(&k, &k)?;
    ensure!(kk.ext_dim() == 0, genericity(format!("ext(K,K) = {}", kk.ext_dim())));
    match classify(n, k.dims())? {
        KroneckerClass::Preprojective { .. } => {}
        other => return Err(Error::internal(format!("kernel {:?} is not preprojective: {other:?}", k.dims()))),
    }

    // Cocycle of 0 -> K -> S -> R -> 0 from a vertexwise section of S -> R.
    let section: Vec<Matrix<F::Elem>> = onto
        .maps
        .iter()
        .map(|m| m.right_inverse(f).ok_or_else(|| genericity("no section of S -> R")))
        .collect::<Result<_>>()?;
    let mut cocycle = Vec::with_capacity(q.arrow_count());
    for (a_idx, a) in q.arrows().iter().enumerate() {
        let defect = s.map(a_idx).mul(f, &section[a.source]).sub(f, &section[a.target].mul(f, r.map(a_idx)));
        let c = incl.maps[a.target]
            .solve(f, &defect)
            .ok_or_else(|| Error::internal("section defect does not land in K"))?;
        cocycle.push(c);
    }

    // Hom(K,S) -> Hom(K,R) -> Ext(R,R).
    let ks = HomComplex::new(&k, &s)?.hom_basis();
    let rr = HomComplex::new(&r, &r)?;
    let p = rr.ext_dim();
    let expected_p = 1 - q.euler_form(ab, ab)?;
    ensure!(p as i64 == expected_p, genericity(format!("ext(R,R) = {p}, expected {expected_p}")));
    let proj = rr.ext_projection();
    let mut images = Vec::with_capacity(ks.len());
    for u in &ks {
        let fu = onto.compose(f, u);
        let pushed: Vec<Matrix<F::Elem>> =
            q.arrows().iter().zip(&cocycle).map(|(a, c)| fu.maps[a.target].mul(f, c)).collect();
        images.push(proj.mul_vec(f, &rr.flatten_cochain(&pushed)));
    }
    let delta = Matrix::from_columns(p, &images, f.zero());
    let pivots = delta.rref(f).pivots;
    ensure!(pivots.len() == p, genericity(format!("Hom(K,S) -> Ext(R,R) has rank {} < {p}", pivots.len())));
    let w: Vec<&RepMap<F::Elem>> = pivots.iter().map(|&i| &ks[i]).collect();

    // T = pushout of S^p <- K -> S.
    let sp = power(&s, p)?;
    let to_sp = RepMap {
        maps: (0..q.vertex_count())
            .map(|v| {
                let blocks: Vec<&Matrix<F::Elem>> = w.iter().map(|u| &u.maps[v]).collect();
                Matrix::vstack(k.dim_at(v), &blocks, f.zero())
            })
            .collect(),
    };
    let (t, _, _) = k.pushout(&sp, &to_sp, &s, &incl)?;
    let expected_t = &cd.scale(p as i64) + ab;
    ensure!(t.dims() == &expected_t, Error::internal(format!("dim T = {:?}, expected {expected_t:?}", t.dims())));
    let st = HomComplex::new(&s, &t)?;
    ensure!(st.hom_dim() == 1 + p, genericity(format!("hom(S,T) = {}, expected {}", st.hom_dim(), 1 + p)));
    let tr = HomComplex::new(&t, &r)?;
    ensure!(
        tr.hom_dim() == 1 && tr.ext_dim() == 0,
        genericity(format!("hom(T,R) = {}, ext(T,R) = {}", tr.hom_dim(), tr.ext_dim()))
    );
    ensure!(tr.hom_basis()[0].is_surjective(f), genericity("the map T -> R is not surjective"));
    Ok(TiltingPair {
        n,
        ab: ab.clone(),
        cd: cd.clone(),
        p,
        s,
        r,
        k,
        t,
        hom_st: st.hom_basis(),
        attempts: 0,
        failures: Vec::new(),
    })
}

fn flatten<E: Clone>(phi: &RepMap<E>) -> Vec<E> {
    phi.maps.iter().flat_map(|m| m.row_vecs().into_iter().flatten()).collect()
}

/// Multiplier `h` with `dims = h * ab`.
fn multiple_of(dims: &DimVec, ab: &DimVec) -> Result<usize> {
    let h = if ab[0] > 0 { dims[0] / ab[0] } else { dims[1] / ab[1] };
    ensure!(h >= 1 && &ab.scale(h) == dims, Error::input(format!("{dims:?} is not a positive multiple of {ab:?}")));
    Ok(h as usize)
}

/// The representation `Hom(S + T, R')` of the `(1+p)`-arrow Kronecker quiver:
/// `Hom(T, R')` at the source, `Hom(S, R')` at the sink, arrow `i` given by
/// precomposition with the `i`-th basis element of `Hom(S, T)`.
pub fn reduce_to_kronecker<F: Field>(tp: &TiltingPair<F>, target: &Rep<F>) -> Result<Rep<F>> {
    let f = tp.s.field();
    let h = multiple_of(target.dims(), &tp.ab)?;
    let tc = HomComplex::new(&tp.t, target)?;
    let sc = HomComplex::new(&tp.s, target)?;
    ensure!(
        tc.ext_dim() == 0 && sc.ext_dim() == 0 && tc.hom_dim() == h && sc.hom_dim() == h,
        genericity(format!(
            "hom(T,R') = {}, hom(S,R') = {}, ext(T,R') = {}, ext(S,R') = {} for h = {h}; resample R'",
            tc.hom_dim(),
            sc.hom_dim(),
            tc.ext_dim(),
            sc.ext_dim()
        ))
    );
    let from_t = tc.hom_basis();
    let from_s = sc.hom_basis();
    let s_coords =
        Matrix::from_columns(flatten(&from_s[0]).len(), &from_s.iter().map(flatten).collect::<Vec<_>>(), f.zero());
    let q = corpus::kronecker(1 + tp.p);
    let mut maps = Vec::with_capacity(1 + tp.p);
    for theta in &tp.hom_st {
        let cols: Vec<Vec<F::Elem>> = from_t.iter().map(|u| flatten(&u.compose(f, theta))).collect();
        let rhs = Matrix::from_columns(s_coords.rows(), &cols, f.zero());
        let m = s_coords.solve(f, &rhs).ok_or_else(|| Error::internal("composite is not in the span of Hom(S,R')"))?;
        maps.push(m);
    }
    Rep::new(q, f.clone(), DimVec::from([h as i64, h as i64]), maps)
}

/// Inverse of [`reduce_to_kronecker`]: the cokernel of `W (x) S -> k^h (x) T`
/// where `W` is the kernel of evaluation `k^h (x) Hom(S,T) -> k^h`.
pub fn inverse_from_kronecker<F: Field>(tp: &TiltingPair<F>, m: &Rep<F>) -> Result<Rep<F>> {
    let f = tp.s.field();
    ensure!(
        m.quiver().kronecker_shape() == Some((0, 1, 1 + tp.p)),
        Error::input(format!("expected a representation of Q({})", 1 + tp.p))
    );
    let h = m.dim_at(0);
    ensure!(m.dim_at(1) == h, Error::input("expected dimension vector (h,h)"));
    let cols: Vec<Vec<F::Elem>> = (0..=tp.p).flat_map(|i| (0..h).map(move |j| m.map(i).column(j))).collect();
    let eval = Matrix::from_columns(h, &cols, f.zero());
    let w = eval.kernel(f);
    ensure!(
        w.cols() == h * tp.p,
        genericity(format!("evaluation kernel has dimension {}, expected {}", w.cols(), h * tp.p))
    );
    let q = tp.s.quiver();
    let source = power(&tp.s, w.cols())?;
    let target = power(&tp.t, h)?;
    let mut maps = Vec::with_capacity(q.vertex_count());
    for v in 0..q.vertex_count() {
        let (sv, tv) = (tp.s.dim_at(v), tp.t.dim_at(v));
        let mut big = Matrix::zeros(f, h * tv, w.cols() * sv);
        for col in 0..w.cols() {
            for j in 0..h {
                let mut block = Matrix::zeros(f, tv, sv);
                for (i, theta) in tp.hom_st.iter().enumerate() {
                    block = block.add(f, &theta.maps[v].scale(f, w.get(i * h + j, col)));
                }
                big.paste(j * tv, col * sv, &block);
            }
        }
        maps.push(big);
    }
    let phi = RepMap { maps };
    ensure!(phi.is_injective(f), genericity("W (x) S -> k^h (x) T is not injective"));
    let (out, _) = source.cokernel_of(&target, &phi)?;
    ensure!(out.dims() == &tp.ab.scale(h as i64), Error::internal(format!("inverse produced {:?}", out.dims())));
    Ok(out)
}

/// `M(a_0)^{-1} M(a_i)` for `i = 1..`.
pub fn matrices_normal_form<F: Field>(m: &Rep<F>) -> Result<Vec<Matrix<F::Elem>>> {
    ensure!(
        matches!(m.quiver().kronecker_shape(), Some((0, 1, k)) if k >= 1),
        Error::input("normal form needs a Kronecker representation with at least one arrow")
    );
    ensure!(m.dim_at(0) == m.dim_at(1), Error::input("normal form needs dimension vector (h,h)"));
    let f = m.field();
    let inv = m
        .map(0)
        .inverse(f)
        .ok_or_else(|| Error::Obstruction("first arrow matrix is singular; permute arrows or resample".into()))?;
    Ok((1..m.quiver().arrow_count()).map(|i| inv.mul(f, m.map(i))).collect())
}

/// An invertible `P` with `P^{-1} A_i P = B_i` for all `i`, if one is found.
pub fn simultaneous_conjugator<F: Field>(
    f: &F,
    a: &[Matrix<F::Elem>],
    b: &[Matrix<F::Elem>],
) -> Result<Option<Matrix<F::Elem>>> {
    ensure!(a.len() == b.len(), Error::input("tuples of different lengths"));
    let Some(first) = a.first() else {
        return Ok(Some(Matrix::identity(f, 0)));
    };
    let h = first.rows();
    let q = corpus::loops(a.len());
    let ra = Rep::new(q.clone(), f.clone(), DimVec::from([h as i64]), a.to_vec())?;
    let rb = Rep::new(q, f.clone(), DimVec::from([h as i64]), b.to_vec())?;
    // A morphism rb -> ra is P with P B_i = A_i P.
    let basis = HomComplex::new(&rb, &ra)?.hom_basis();
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_4a7e);
    for _ in 0..8 {
        let coeffs: Vec<F::Elem> = (0..basis.len()).map(|_| f.random(&mut rng)).collect();
        let phi = RepMap::combination(f, &basis, &coeffs);
        if phi.is_invertible(f) {
            return Ok(Some(phi.maps[0].clone()));
        }
    }
    Ok(None)
}

/// Outcome of a batch of reduce/inverse round trips.
#[derive(Clone, Debug)]
pub struct RoundTrip<E> {
    pub trials: usize,
    pub successes: usize,
    pub normal_forms: Vec<Vec<Matrix<E>>>,
    pub failures: Vec<String>,
}

/// Samples `trials` general representations of dimension `h (a,b)`, sends
/// each to the Kronecker side and back, and counts isomorphic returns.
pub fn roundtrip_trials<F: Field>(
    tp: &TiltingPair<F>,
    h: usize,
    seed: u64,
    trials: usize,
) -> Result<RoundTrip<F::Elem>> {
    let f = tp.s.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7215_0000);
    let mut out = RoundTrip { trials, successes: 0, normal_forms: Vec::new(), failures: Vec::new() };
    let dims = tp.ab.scale(h as i64);
    for trial in 0..trials {
        let rp = random_rep(tp.s.quiver(), &dims, rng.next_u64(), f)?;
        let step = (|| -> Result<bool> {
            let m = reduce_to_kronecker(tp, &rp)?;
            out.normal_forms.push(matrices_normal_form(&m)?);
            let back = inverse_from_kronecker(tp, &m)?;
            is_isomorphic(&rp, &back)
        })();
        match step {
            Ok(true) => out.successes += 1,
            Ok(false) => out.failures.push(format!("trial {trial}: not isomorphic")),
            Err(e @ (Error::Genericity(_) | Error::Obstruction(_) | Error::Undecided(_))) => {
                out.failures.push(format!("trial {trial}: {e}"))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rationality {
    Rational,
    StablyRational,
    RetractRational,
    Unknown,
}

fn is_squarefree(mut h: u64) -> bool {
    let mut d = 2;
    while d * d <= h {
        if h.is_multiple_of(d * d) {
            return false;
        }
        if h.is_multiple_of(d) {
            h /= d;
        }
        d += 1;
    }
    true
}

/// Verdicts by the greatest divisor `h` alone.
pub fn rationality_flags(h: u64) -> Vec<Rationality> {
    if h <= 4 {
        return vec![Rationality::Rational, Rationality::StablyRational, Rationality::RetractRational];
    }
    let mut flags = Vec::new();
    if 420 % h == 0 {
        flags.push(Rationality::StablyRational);
    }
    if is_squarefree(h) {
        flags.push(Rationality::RetractRational);
    }
    if flags.is_empty() {
        flags.push(Rationality::Unknown);
    }
    flags
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliReport {
    pub h: u64,
    pub p: i64,
    pub model: String,
    pub flags: Vec<Rationality>,
}

fn parameters(q: &Quiver, alpha: &DimVec) -> Result<(u64, i64)> {
    let h = alpha.gcd();
    let root = alpha.div_exact(h as i64).expect("divisible by its gcd");
    Ok((h, 1 - q.euler_form(&root, &root)?))
}

pub fn moduli_report(dec: &Decomposer, alpha: &DimVec) -> Result<ModuliReport> {
    ensure!(dec.is_schur(alpha)?, Error::input(format!("{alpha:?} is not a Schur root")));
    let (h, p) = parameters(dec.quiver(), alpha)?;
    Ok(ModuliReport {
        h,
        p,
        model: format!("{p} matrices of size {h}x{h} up to simultaneous conjugacy"),
        flags: rationality_flags(h),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafKind {
    RealRoot,
    SingleVertex,
    Kronecker,
    TwoVertexWithLoops,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TowerStep {
    Leaf {
        kind: LeafKind,
    },
    /// Cyclic support: continue on the double quiver.
    DoubleLift {
        child: Box<TowerNode>,
    },
    /// `dim = m * quotient_root + n * sub_root`; the reduced problem lives on
    /// the two-vertex quiver with `p(quotient_root)` loops, `t` arrows and
    /// `p(sub_root)` loops.
    Split {
        sub: DimVec,
        quotient: DimVec,
        m: u64,
        n: u64,
        t: u64,
        reduced: Box<TowerNode>,
        quotient_root: Box<TowerNode>,
        sub_root: Box<TowerNode>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerNode {
    pub quiver: Quiver,
    pub dim: DimVec,
    pub h: u64,
    pub p: i64,
    pub flags: Vec<Rationality>,
    /// On Kronecker supports: the word carrying the root into the
    /// fundamental region.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflection_word: Option<ReflectionWord>,
    #[serde(flatten)]
    pub step: TowerStep,
}

fn is_two_vertex_one_way(q: &Quiver) -> bool {
    let mut dirs = q.arrows().iter().filter(|a| a.source != a.target).map(|a| a.source);
    match dirs.next() {
        Some(first) => q.vertex_count() == 2 && dirs.all(|s| s == first),
        None => false,
    }
}

/// Recursively splits a Schur root into smaller reduction problems.
pub fn reduction_tower(dec: &Decomposer, alpha: &DimVec) -> Result<TowerNode> {
    ensure!(dec.is_schur(alpha)?, Error::input(format!("{alpha:?} is not a Schur root")));
    tower_node(dec.quiver(), alpha, true)
}

/// Kronecker supports are leaves except at the root of the tower, where the
/// split is still shown.
fn tower_node(q: &Quiver, alpha: &DimVec, top: bool) -> Result<TowerNode> {
    let (h, p) = parameters(q, alpha)?;
    let (sup, verts) = q.support(alpha)?;
    let local = DimVec::new(verts.iter().map(|&v| alpha[v]).collect());
    let reflection_word = match sup.kronecker_shape() {
        Some((s, t, n)) => match classify(n as u64, &DimVec::from([local[s], local[t]]))? {
            KroneckerClass::SchurRoot { word, .. } => Some(word),
            _ => None,
        },
        None => None,
    };
    let node = |step| TowerNode {
        quiver: q.clone(),
        dim: alpha.clone(),
        h,
        p,
        flags: rationality_flags(h),
        reflection_word: reflection_word.clone(),
        step,
    };
    if RootClass::of(q, alpha)? == RootClass::Real {
        return Ok(node(TowerStep::Leaf { kind: LeafKind::RealRoot }));
    }
    if sup.vertex_count() == 1 {
        return Ok(node(TowerStep::Leaf { kind: LeafKind::SingleVertex }));
    }
    if !top && sup.kronecker_shape().is_some() {
        return Ok(node(TowerStep::Leaf { kind: LeafKind::Kronecker }));
    }
    if !top && is_two_vertex_one_way(&sup) {
        return Ok(node(TowerStep::Leaf { kind: LeafKind::TwoVertexWithLoops }));
    }
    if !sup.is_acyclic() {
        let (dq, _) = sup.double();
        let child = tower_node(&dq, &sup.lift_dimvec(&local)?, top)?;
        ensure!(child.h == h && child.p == p, Error::internal("double lift changed the reduction parameters"));
        return Ok(node(TowerStep::DoubleLift { child: Box::new(child) }));
    }
    let dec = Decomposer::new(sup.clone());
    let (sub, quot) = dec.rigid_split(&local)?;
    let (n, m) = (sub.vector.gcd(), quot.vector.gcd());
    let gamma = sub.vector.div_exact(n as i64).expect("divisible by its gcd");
    let beta = quot.vector.div_exact(m as i64).expect("divisible by its gcd");
    let t = dec.generic().ext(&beta, &gamma)?;
    let p_beta = 1 - sup.euler_form(&beta, &beta)?;
    let p_gamma = 1 - sup.euler_form(&gamma, &gamma)?;
    ensure!(p_beta >= 0 && p_gamma >= 0, Error::internal("split roots have negative parameter numbers"));
    let reduced_q = corpus::q_ptq(p_beta as usize, t as usize, p_gamma as usize);
    let reduced_dim = DimVec::from([m as i64, n as i64]);
    let reduced_dec = Decomposer::new(reduced_q.clone());
    ensure!(
        reduced_dec.is_schur(&reduced_dim)?,
        Error::internal(format!("reduced problem {reduced_dim:?} on {reduced_q} is not Schur"))
    );
    let reduced = tower_node(&reduced_q, &reduced_dim, false)?;
    ensure!(
        reduced.h == h && reduced.p == p,
        Error::internal(format!("reduction changed (h, p) from ({h}, {p}) to ({}, {})", reduced.h, reduced.p))
    );
    let embed = |x: &DimVec| {
        let mut e = q.zero().into_entries();
        for (i, &v) in verts.iter().enumerate() {
            e[v] = x[i];
        }
        DimVec::new(e)
    };
    let quotient_root = tower_node(&sup, &beta, false)?;
    let sub_root = tower_node(&sup, &gamma, false)?;
    Ok(node(TowerStep::Split {
        sub: embed(&sub.vector),
        quotient: embed(&quot.vector),
        m,
        n,
        t: t as u64,
        reduced: Box::new(reduced),
        quotient_root: Box::new(quotient_root),
        sub_root: Box::new(sub_root),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn dv<const N: usize>(x: [i64; N]) -> DimVec {
        x.into()
    }

    #[test]
    fn perp_pair_examples() {
        assert_eq!(perp_pair(3, &dv([1, 1])).unwrap(), dv([2, 5]));
        assert_eq!(perp_pair(3, &dv([2, 3])).unwrap(), dv([5, 12]));
        let k3 = corpus::kronecker(3);
        assert_eq!(k3.euler_form(&dv([2, 5]), &dv([1, 1])).unwrap(), 1);
        assert!(perp_pair(3, &dv([2, 2])).is_err());
        assert!(perp_pair(3, &dv([3, 2])).is_err());
    }

    #[test]
    fn tilting_pair_on_q3() {
        let tp = build_tilting_pair(3, &dv([1, 1]), 0, &PrimeField::default()).unwrap();
        assert_eq!(tp.p, 2);
        assert_eq!(tp.t.dims(), &dv([5, 11]));
        assert_eq!(tp.hom_st.len(), 3);
    }

    #[test]
    fn round_trip_h2() {
        let tp = build_tilting_pair(3, &dv([1, 1]), 1, &PrimeField::default()).unwrap();
        let rt = roundtrip_trials(&tp, 2, 9, 3).unwrap();
        assert_eq!(rt.successes, 3, "{:?}", rt.failures);
        assert_eq!(rt.normal_forms[0].len(), 2);
    }

    #[test]
    fn normal_form_of_identity_first_arrow() {
        let f = PrimeField::default();
        let q = corpus::kronecker(3);
        let m1 = Matrix::from_fn(2, 2, |i, j| f.from_i64((i * 2 + j) as i64 + 1));
        let m2 = Matrix::from_fn(2, 2, |i, j| f.from_i64((i + 3 * j) as i64));
        let rep = Rep::new(q, f, dv([2, 2]), vec![Matrix::identity(&f, 2), m1.clone(), m2.clone()]).unwrap();
        assert_eq!(matrices_normal_form(&rep).unwrap(), vec![m1, m2]);
    }

    #[test]
    fn flag_table() {
        use Rationality::*;
        assert_eq!(rationality_flags(4), vec![Rational, StablyRational, RetractRational]);
        assert_eq!(rationality_flags(5), vec![StablyRational, RetractRational]);
        assert_eq!(rationality_flags(8), vec![Unknown]);
        assert_eq!(rationality_flags(9), vec![Unknown]);
        assert_eq!(rationality_flags(12), vec![StablyRational]);
        assert_eq!(rationality_flags(11), vec![RetractRational]);
    }

    #[test]
    fn moduli_examples() {
        let dec = Decomposer::new(corpus::kronecker(3));
        let r = moduli_report(&dec, &dv([2, 2])).unwrap();
        assert_eq!((r.h, r.p), (2, 2));
        assert_eq!(r.flags[0], Rationality::Rational);
        let r = moduli_report(&dec, &dv([5, 5])).unwrap();
        assert_eq!(r.flags, vec![Rationality::StablyRational, Rationality::RetractRational]);
        assert!(moduli_report(&Decomposer::new(corpus::kronecker(2)), &dv([2, 2])).is_err());
    }

    #[test]
    fn tower_examples() {
        let dec = Decomposer::new(corpus::kronecker(3));
        let t = reduction_tower(&dec, &dv([2, 2])).unwrap();
        assert_eq!((t.h, t.p), (2, 2));
        let TowerStep::Split { sub, quotient, m, n, t: arrows, reduced, .. } = &t.step else {
            panic!("expected a split")
        };
        assert_eq!((sub, quotient, *m, *n, *arrows), (&dv([0, 2]), &dv([2, 0]), 2, 2, 3));
        assert_eq!(reduced.quiver, corpus::q_ptq(0, 3, 0));
        assert_eq!((reduced.h, reduced.p), (2, 2));
        assert_eq!(reduced.step, TowerStep::Leaf { kind: LeafKind::Kronecker });

        let chain = Quiver::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        let t = reduction_tower(&Decomposer::new(chain), &dv([1, 1, 1])).unwrap();
        assert_eq!((t.h, t.p), (1, 2));
        let TowerStep::Split { reduced, .. } = &t.step else { panic!("expected a split") };
        assert_eq!((reduced.h, reduced.p), (1, 2));

        let tri = reduction_tower(&Decomposer::new(corpus::triangle()), &dv([1, 1, 1])).unwrap();
        assert_eq!((tri.h, tri.p), (1, 1));
        assert!(matches!(tri.step, TowerStep::DoubleLift { .. }));

        let real = reduction_tower(&dec, &dv([1, 3])).unwrap();
        assert_eq!((real.h, real.p), (1, 0));
        let deep = reduction_tower(&dec, &dv([3, 7])).unwrap();
        assert!(!deep.reflection_word.as_ref().unwrap().is_empty());
        let loops = reduction_tower(&Decomposer::new(corpus::loops(1)), &dv([1])).unwrap();
        assert_eq!((loops.h, loops.p), (1, 1));
        assert!(reduction_tower(&Decomposer::new(corpus::loops(1)), &dv([2])).is_err());
    }
}
