//! Sequences of reflections, vertex transpositions and dualization that
//! carry a dimension vector (and later a representation) between quivers.

use serde::{Deserialize, Serialize};

use crate::dimvec::DimVec;
use crate::error::{ensure, Error, Result};
use crate::quiver::{Quiver, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordStep {
    /// Reflection functor at a sink (`Minus`) or source (`Plus`).
    Reflect { vertex: usize, sign: Sign },
    /// Relabel vertex positions `i` and `j`, permuting dimensions with them.
    Transpose(usize, usize),
}

/// `dualize` is applied before the steps; the inverse undoes the steps in
/// reverse order and dualizes last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReflectionWord {
    pub dualize: bool,
    pub steps: Vec<WordStep>,
}

impl WordStep {
    fn inverse(&self) -> WordStep {
        match *self {
            WordStep::Reflect { vertex, sign } => WordStep::Reflect { vertex, sign: sign.flip() },
            WordStep::Transpose(i, j) => WordStep::Transpose(i, j),
        }
    }

    /// Applies the step to a quiver and vector, checking that the vertex
    /// has the orientation the sign requires.
    pub fn apply(&self, q: &Quiver, alpha: &DimVec) -> Result<(Quiver, DimVec)> {
        match *self {
            WordStep::Reflect { vertex, sign } => {
                ensure!(vertex < q.vertex_count(), Error::input(format!("vertex {vertex} out of range")));
                let ok = match sign {
                    Sign::Plus => q.is_source(vertex),
                    Sign::Minus => q.is_sink(vertex),
                };
                ensure!(
                    ok,
                    Error::input(format!(
                        "vertex `{}` is not a {} here",
                        q.vertex_name(vertex),
                        if sign == Sign::Plus { "source" } else { "sink" }
                    ))
                );
                Ok((q.reflected_at(vertex), q.reflect(vertex, alpha)?))
            }
            WordStep::Transpose(i, j) => {
                ensure!(i < q.vertex_count() && j < q.vertex_count(), Error::input("transposition out of range"));
                let mut e = alpha.entries().to_vec();
                e.swap(i, j);
                Ok((q.transpose_vertices(i, j), DimVec::new(e)))
            }
        }
    }
}

impl ReflectionWord {
    pub fn is_empty(&self) -> bool {
        !self.dualize && self.steps.is_empty()
    }

    /// Runs the word forwards, returning the final quiver and vector.
    pub fn reduce(&self, q: &Quiver, alpha: &DimVec) -> Result<(Quiver, DimVec)> {
        q.check_dim(alpha)?;
        let mut cur = if self.dualize { q.dual() } else { q.clone() };
        let mut v = alpha.clone();
        for step in &self.steps {
            let (nq, nv) = step.apply(&cur, &v)?;
            cur = nq;
            v = nv;
        }
        Ok((cur, v))
    }

    /// Runs the inverse word starting from the quiver the forward word ends at.
    pub fn expand(&self, end: &Quiver, beta: &DimVec) -> Result<(Quiver, DimVec)> {
        end.check_dim(beta)?;
        let mut cur = end.clone();
        let mut v = beta.clone();
        for step in self.steps.iter().rev() {
            let (nq, nv) = step.inverse().apply(&cur, &v)?;
            cur = nq;
            v = nv;
        }
        if self.dualize {
            cur = cur.dual();
        }
        Ok((cur, v))
    }

    /// The quiver reached after the full word.
    pub fn end_quiver(&self, q: &Quiver) -> Result<Quiver> {
        Ok(self.reduce(q, &q.zero())?.0)
    }
}

/// Greedily reflects a real root down to a coordinate vector, using only
/// sinks and sources whose reflection lowers the vector. Returns the word
/// and the vertex of the final coordinate vector.
pub fn find_word_for_real_root(q: &Quiver, alpha: &DimVec) -> Result<(ReflectionWord, usize)> {
    q.check_dim(alpha)?;
    alpha.check_nonneg()?;
    ensure!(!alpha.is_zero(), Error::input("the zero vector is not a root"));
    ensure!(q.euler_form(alpha, alpha)? == 1, Error::input(format!("{alpha:?} is not a real root")));
    let mut word = ReflectionWord::default();
    let mut cur = q.clone();
    let mut v = alpha.clone();
    loop {
        let sup = v.support();
        if sup.len() == 1 && v[sup[0]] == 1 {
            return Ok((word, sup[0]));
        }
        let pick = (0..cur.vertex_count()).find_map(|x| {
            if cur.loops_at(x) > 0 || cur.kac_with_unit(v.entries(), x) <= 0 {
                return None;
            }
            if cur.is_sink(x) {
                Some(WordStep::Reflect { vertex: x, sign: Sign::Minus })
            } else if cur.is_source(x) {
                Some(WordStep::Reflect { vertex: x, sign: Sign::Plus })
            } else {
                None
            }
        });
        let Some(step) = pick else {
            return Err(Error::Obstruction(format!(
                "no admissible sink or source lowers {v:?}; supply a reflection word explicitly"
            )));
        };
        let (nq, nv) = step.apply(&cur, &v)?;
        ensure!(nv.is_nonneg(), Error::internal(format!("reflection left the positive cone at {nv:?}")));
        word.steps.push(step);
        cur = nq;
        v = nv;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn expand_inverts_reduce() {
        let k3 = corpus::kronecker(3);
        let word = ReflectionWord {
            dualize: true,
            steps: vec![
                WordStep::Transpose(0, 1),
                WordStep::Reflect { vertex: 1, sign: Sign::Minus },
                WordStep::Transpose(0, 1),
            ],
        };
        let alpha = DimVec::from([8, 3]);
        let (end, beta) = word.reduce(&k3, &alpha).unwrap();
        assert_eq!(beta, DimVec::from([1, 3]));
        let (back, again) = word.expand(&end, &beta).unwrap();
        assert_eq!(again, alpha);
        assert_eq!(back, k3);
    }

    #[test]
    fn wrong_orientation_rejected() {
        let step = WordStep::Reflect { vertex: 0, sign: Sign::Minus };
        assert!(step.apply(&corpus::a2(), &[1, 1].into()).is_err());
    }

    #[test]
    fn greedy_word_on_real_roots() {
        let k3 = corpus::kronecker(3);
        let (word, v) = find_word_for_real_root(&k3, &[3, 8].into()).unwrap();
        let (end, e) = word.reduce(&k3, &[3, 8].into()).unwrap();
        assert_eq!(e, end.unit(v));
        let a3 = corpus::a3();
        let (word, v) = find_word_for_real_root(&a3, &[1, 1, 1].into()).unwrap();
        assert_eq!(word.reduce(&a3, &[1, 1, 1].into()).unwrap().1, a3.unit(v));
    }
}
