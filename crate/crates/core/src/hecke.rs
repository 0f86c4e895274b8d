//! The Hecke algebra H_n acting on seminormal bases, braid-word
//! evaluation, and the universal annular trace.
//!
//! Convention: T_i has eigenvalues {q, -q^{-1}} with the trivial
//! representation sending every generator to q; Jucys-Murphy elements
//! then act with eigenvalue q^{2·content}.

use crate::error::{Error, Result};
use crate::exact::{Field, LaurentPoly, Matrix, RatFunc, Ring};
use crate::shapes::{standard_tableaux_bounded, Partition, StandardTableau};
use crate::symfunc::{Basis, SymFunc};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Default cap on strand count.
pub const DEFAULT_STRAND_BOUND: usize = 7;

/// Word in the braid group on `strands` strands; letter i > 0 is the
/// positive crossing σ_i, i < 0 its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Self {
        assert!(strands >= 1);
        assert!(
            letters.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= strands - 1),
            "letter out of range for {} strands: {:?}",
            strands,
            letters
        );
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, vec![])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, rhs: &BraidWord) -> Self {
        assert_eq!(self.strands, rhs.strands);
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().chain(rhs.letters.iter()).copied().collect(),
        }
    }

    /// γ β γ^{-1}.
    pub fn conjugate_by(&self, gamma: &BraidWord) -> Self {
        gamma.concat(self).concat(&gamma.inverse())
    }

    /// Same letters viewed on a larger strand count.
    pub fn embed(&self, strands: usize) -> Self {
        assert!(strands >= self.strands);
        BraidWord {
            strands,
            letters: self.letters.clone(),
        }
    }

    /// The Jucys-Murphy braid 𝓛_i = σ_{i-1}⋯σ_1·σ_1⋯σ_{i-1}.
    pub fn jucys_murphy(strands: usize, i: usize) -> Self {
        assert!(1 <= i && i <= strands);
        let mut letters: Vec<i32> = (1..i as i32).rev().collect();
        letters.extend(1..i as i32);
        Self::new(strands, letters)
    }

    /// Parse "n=3: 1 2 -1"; the letter list may be empty.
    pub fn parse(s: &str) -> Result<BraidWord> {
        let s = s.trim();
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("braid word must start with n=: {:?}", s)))?;
        let (n_str, letters_str) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse("missing ':' in braid word".into()))?;
        let strands: usize = n_str
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {:?}", n_str)))?;
        if strands == 0 {
            return Err(Error::Parse("strand count must be positive".into()));
        }
        let letters: Vec<i32> = letters_str
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter {:?}", t)))
            })
            .collect::<Result<_>>()?;
        if letters
            .iter()
            .any(|&l| l == 0 || l.unsigned_abs() as usize > strands - 1)
        {
            return Err(Error::Parse(format!(
                "letter out of range for {} strands",
                strands
            )));
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Irreducible H_n-representation on the standard tableaux of a shape,
/// with generator matrices over ℚ(q). All defining relations are
/// verified exactly at construction.
pub struct SeminormalRep {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    /// gens[i] is the matrix of T_{i+1}, columns = images of basis vectors.
    gens: Vec<Matrix<RatFunc>>,
}

fn qq(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

/// q - q^{-1}
fn delta() -> RatFunc {
    qq(1).sub(&qq(-1))
}

impl SeminormalRep {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn generator(&self, i: usize) -> &Matrix<RatFunc> {
        assert!(1 <= i && i < self.shape.size(), "generator index {}", i);
        &self.gens[i - 1]
    }

    fn build(shape: &Partition) -> Result<SeminormalRep> {
        let n = shape.size();
        let tableaux = standard_tableaux_bounded(shape, DEFAULT_STRAND_BOUND)?;
        let dim = tableaux.len();
        let index: HashMap<_, _> = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.rows().to_vec(), i))
            .collect();
        let mut gens = vec![];
        for i in 1..n {
            let mut m = Matrix::zero(dim, dim);
            for (ti, t) in tableaux.iter().enumerate() {
                let contents = t.contents();
                let d = contents[i] - contents[i - 1]; // c_{i+1}(t) - c_i(t)
                match t.apply_transposition(i) {
                    None => {
                        // same row (d = 1) → q; same column (d = -1) → -q^{-1}
                        let diag = if d > 0 { qq(1) } else { qq(-1).neg() };
                        m.set(ti, ti, diag);
                    }
                    Some(t2) => {
                        let tj = index[&t2.rows().to_vec()];
                        if d > 0 {
                            // T·v_t = u₊ v_t + v_{t'}
                            let u_plus = delta().div(&RatFunc::one().sub(&qq(-2 * d)));
                            m.set(ti, ti, u_plus);
                            m.set(tj, ti, RatFunc::one());
                        } else {
                            let dpos = -d;
                            // this is the t' of the pair with axial distance dpos
                            let u_plus = delta().div(&RatFunc::one().sub(&qq(-2 * dpos)));
                            let u_minus = delta().div(&RatFunc::one().sub(&qq(2 * dpos)));
                            m.set(ti, ti, u_minus.clone());
                            m.set(tj, ti, u_plus.mul(&u_minus).add(&RatFunc::one()));
                        }
                    }
                }
            }
            gens.push(m);
        }
        let rep = SeminormalRep {
            shape: shape.clone(),
            tableaux,
            gens,
        };
        rep.verify()?;
        Ok(rep)
    }

    /// Quadratic, braid, far-commutation, and Jucys-Murphy diagonality
    /// relations, all exact.
    fn verify(&self) -> Result<()> {
        let n = self.shape.size();
        let dim = self.dim();
        let id = Matrix::<RatFunc>::identity(dim);
        let fail = |what: String| Err(Error::Internal(format!("seminormal {:?}: {}", self.shape, what)));
        for (i, t) in self.gens.iter().enumerate() {
            let lhs = t.mul(t);
            let rhs = t.scale(&delta()).add(&id);
            if lhs != rhs {
                return fail(format!("quadratic relation fails for T_{}", i + 1));
            }
        }
        for i in 0..self.gens.len().saturating_sub(1) {
            let a = &self.gens[i];
            let b = &self.gens[i + 1];
            if a.mul(b).mul(a) != b.mul(a).mul(b) {
                return fail(format!("braid relation fails at {}", i + 1));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 2..self.gens.len() {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                if a.mul(b) != b.mul(a) {
                    return fail(format!("far commutation fails at ({},{})", i + 1, j + 1));
                }
            }
        }
        for i in 1..=n {
            let jm = self.action(&BraidWord::jucys_murphy(n, i));
            for (ti, t) in self.tableaux.iter().enumerate() {
                let expected = qq(2 * t.contents()[i - 1]);
                for tj in 0..dim {
                    let want = if ti == tj { expected.clone() } else { RatFunc::zero() };
                    if *jm.get(tj, ti) != want {
                        return fail(format!("JM element {} not diagonal with content eigenvalues", i));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of a braid word; inverse letters use T^{-1} = T - (q - q^{-1}).
    pub fn action(&self, beta: &BraidWord) -> Matrix<RatFunc> {
        assert_eq!(beta.strands(), self.shape.size(), "strand mismatch");
        let dim = self.dim();
        let id = Matrix::identity(dim);
        let mut acc = id.clone();
        for &l in beta.letters() {
            let t = self.generator(l.unsigned_abs() as usize);
            let step = if l > 0 {
                t.clone()
            } else {
                t.sub(&id.scale(&delta()))
            };
            acc = step.mul(&acc);
        }
        acc
    }
}

static REP_CACHE: Lazy<Mutex<HashMap<Partition, Arc<SeminormalRep>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn seminormal_rep(shape: &Partition) -> Result<Arc<SeminormalRep>> {
    if let Some(r) = REP_CACHE.lock().unwrap().get(shape) {
        return Ok(r.clone());
    }
    let rep = Arc::new(SeminormalRep::build(shape)?);
    REP_CACHE
        .lock()
        .unwrap()
        .entry(shape.clone())
        .or_insert(rep.clone());
    Ok(rep)
}

pub fn braid_action(beta: &BraidWord, shape: &Partition) -> Result<Matrix<RatFunc>> {
    Ok(seminormal_rep(shape)?.action(beta))
}

/// Universal annular trace Tr(β) = Σ_λ Tr(β, V_λ)·s_λ. Every
/// coefficient must clear to a genuine Laurent polynomial.
pub fn annular_trace(beta: &BraidWord) -> Result<SymFunc> {
    let n = beta.strands();
    let mut out = SymFunc::zero(Basis::S);
    for lam in Partition::all(n) {
        let tr = braid_action(beta, &lam)?.trace();
        if tr.is_zero() {
            continue;
        }
        let coeff = tr.to_laurent().ok_or_else(|| {
            Error::Internal(format!(
                "trace denominator failed to clear for {:?} on {}",
                lam, beta
            ))
        })?;
        out.add_term(lam, coeff);
    }
    Ok(out)
}

/// 𝔰𝔩_N invariant of the closure: principal specialization of the trace.
pub fn sln_invariant(beta: &BraidWord, n_color: u32) -> Result<LaurentPoly> {
    annular_trace(beta)?.principal_spec(n_color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn braid_word_parse_and_display() {
        let b = BraidWord::parse("n=3: 1 2 -1").unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[1, 2, -1]);
        assert_eq!(b.to_string(), "n=3: 1 2 -1");
        assert_eq!(BraidWord::parse("n=2:").unwrap(), BraidWord::identity(2));
        assert!(BraidWord::parse("n=2: 2").is_err());
        assert!(BraidWord::parse("3: 1").is_err());
    }

    #[test]
    fn one_dimensional_reps() {
        let triv = seminormal_rep(&p(&[2])).unwrap();
        assert_eq!(*triv.generator(1).get(0, 0), RatFunc::q_pow(1));
        let sign = seminormal_rep(&p(&[1, 1])).unwrap();
        assert_eq!(*sign.generator(1).get(0, 0), RatFunc::q_pow(-1).neg());
    }

    #[test]
    fn construction_verifies_relations() {
        // verify() runs inside; reaching here means all relations hold
        for n in 2..=5 {
            for lam in Partition::all(n) {
                seminormal_rep(&lam).unwrap();
            }
        }
    }

    #[test]
    fn group_relations_in_action() {
        let rep = seminormal_rep(&p(&[2, 1])).unwrap();
        let id = rep.action(&BraidWord::identity(3));
        assert_eq!(id, Matrix::identity(2));
        let cancel = rep.action(&BraidWord::new(3, vec![1, -1]));
        assert_eq!(cancel, Matrix::identity(2));
    }

    #[test]
    fn small_traces() {
        // identity on n strands → Σ f^λ s_λ = s_1^n
        let tr = annular_trace(&BraidWord::identity(3)).unwrap();
        assert_eq!(tr, SymFunc::h(1).pow(3).unwrap());
        // σ_1 on 2 strands
        let tr1 = annular_trace(&BraidWord::new(2, vec![1])).unwrap();
        assert_eq!(tr1.coeff(&p(&[2])), lp(&[(1, 1)]));
        assert_eq!(tr1.coeff(&p(&[1, 1])), lp(&[(-1, -1)]));
        // σ_1²
        let tr2 = annular_trace(&BraidWord::new(2, vec![1, 1])).unwrap();
        assert_eq!(tr2.coeff(&p(&[2])), lp(&[(2, 1)]));
        assert_eq!(tr2.coeff(&p(&[1, 1])), lp(&[(-2, 1)]));
    }

    #[test]
    fn sln_examples() {
        assert_eq!(
            sln_invariant(&BraidWord::identity(1), 3).unwrap(),
            LaurentPoly::quantum_int(3)
        );
        assert_eq!(
            sln_invariant(&BraidWord::new(2, vec![1]), 1).unwrap(),
            lp(&[(1, 1)])
        );
        assert_eq!(
            sln_invariant(&BraidWord::new(2, vec![1, 1]), 2).unwrap(),
            lp(&[(4, 1), (2, 1), (0, 1), (-2, 1)])
        );
    }

    #[test]
    fn markov_stabilization() {
        // embedding into n+1 strands multiplies the trace by s_1
        for beta in [
            BraidWord::new(2, vec![1]),
            BraidWord::new(3, vec![1, 2, 1]),
            BraidWord::new(3, vec![-1, 2]),
        ] {
            let t = annular_trace(&beta).unwrap();
            let t_up = annular_trace(&beta.embed(beta.strands() + 1)).unwrap();
            assert_eq!(t_up, t.multiply(&SymFunc::schur(p(&[1]))).unwrap());
        }
    }

    #[test]
    fn jm_elements_commute() {
        for lam in Partition::all(4) {
            let rep = seminormal_rep(&lam).unwrap();
            let jms: Vec<_> = (1..=4)
                .map(|i| rep.action(&BraidWord::jucys_murphy(4, i)))
                .collect();
            for a in &jms {
                for b in &jms {
                    assert_eq!(a.mul(b), b.mul(a));
                }
            }
        }
    }
}
