use super::Perm;
use crate::exact::{rat, Matrix, Rational};
use crate::shapes::{standard_tableaux_bounded, Partition, StandardTableau};
use crate::{Error, Result};

/// Seminormal irreducible representation of S_n over ℚ, with basis the
/// standard tableaux of the given shape. Columns of each generator
/// matrix are images of basis vectors.
pub struct RatRep {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    gens: Vec<Matrix<Rational>>,
}

impl RatRep {
    pub fn new(shape: &Partition) -> Result<Self> {
        let n = shape.size();
        let tableaux = standard_tableaux_bounded(shape, n.max(1))?;
        let f = tableaux.len();
        let find = |t: &StandardTableau| tableaux.iter().position(|u| u == t).unwrap();
        let mut gens = vec![];
        for i in 1..n {
            let mut m = Matrix::zero(f, f);
            for (col, t) in tableaux.iter().enumerate() {
                let c = t.contents();
                // axial distance between i and i+1
                let d = rat(c[i] - c[i - 1]);
                m.set(col, col, rat(1) / d.clone());
                if let Some(t2) = t.apply_transposition(i) {
                    let row = find(&t2);
                    let coeff = if c[i] - c[i - 1] > 0 {
                        rat(1)
                    } else {
                        rat(1) - rat(1) / (d.clone() * d)
                    };
                    m.set(row, col, coeff);
                }
            }
            gens.push(m);
        }
        Ok(RatRep {
            shape: shape.clone(),
            tableaux,
            gens,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Generator matrix of the adjacent transposition (i, i+1), 1-based.
    pub fn gen(&self, i: usize) -> &Matrix<Rational> {
        &self.gens[i - 1]
    }

    /// Matrix of an arbitrary permutation, via a reduced word.
    pub fn matrix(&self, p: &Perm) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.dim());
        for i in p.reduced_word() {
            m = self.gen(i).mul(&m);
        }
        m
    }

    /// Check s_i² = 1, the braid relation, and far commutation.
    pub fn verify(&self) -> Result<()> {
        let f = self.dim();
        let id = Matrix::identity(f);
        let k = self.gens.len();
        for i in 0..k {
            if self.gens[i].mul(&self.gens[i]) != id {
                return Err(Error::Internal(format!(
                    "involution fails at generator {} of {:?}",
                    i + 1,
                    self.shape
                )));
            }
        }
        for i in 0..k.saturating_sub(1) {
            let (a, b) = (&self.gens[i], &self.gens[i + 1]);
            if a.mul(&b.mul(a)) != b.mul(&a.mul(b)) {
                return Err(Error::Internal(format!(
                    "braid relation fails at {} of {:?}",
                    i + 1,
                    self.shape
                )));
            }
        }
        for i in 0..k {
            for j in i + 2..k {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                if a.mul(b) != b.mul(a) {
                    return Err(Error::Internal(format!(
                        "far commutation fails at ({}, {}) of {:?}",
                        i + 1,
                        j + 1,
                        self.shape
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::character;

    #[test]
    fn relations_hold_up_to_n5() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let rep = RatRep::new(&lam).unwrap();
                assert_eq!(rep.dim(), lam.num_standard_tableaux());
                rep.verify().unwrap();
            }
        }
    }

    #[test]
    fn traces_match_characters() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let rep = RatRep::new(&lam).unwrap();
                for mu in Partition::all(n) {
                    let g = Perm::from_cycle_type(&mu);
                    assert_eq!(
                        rep.matrix(&g).trace(),
                        rat(character(&lam, &mu)),
                        "character mismatch at λ={:?}, μ={:?}",
                        lam,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn sign_rep_is_sign() {
        let rep = RatRep::new(&Partition::new(vec![1, 1, 1])).unwrap();
        for i in 1..3 {
            assert_eq!(*rep.gen(i), Matrix::identity(1).scale(&rat(-1)));
        }
    }
}
