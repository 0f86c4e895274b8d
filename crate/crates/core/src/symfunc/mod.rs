//! The ring of symmetric functions with Laurent-polynomial
//! coefficients: basis conversions, products, skew Schur functions,
//! ribbon functions, plethystic transforms, and specializations.

mod convert;

pub use convert::{character, kostka, z_factor};

use crate::error::{Error, Result};
use crate::exact::{rat, BiLaurent, Field, LaurentPoly, Ring};
use crate::shapes::{composition_to_ribbon, Composition, Partition, SkewShape};
use convert::IntMap;
use std::collections::BTreeMap;
use std::fmt;

/// Default per-term degree cap, overridable via SKEIN_MAX_DEGREE.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

pub fn degree_bound() -> usize {
    std::env::var("SKEIN_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DEGREE_BOUND)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    E,
    H,
    P,
    M,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Result<Basis> {
        Ok(match c {
            'e' => Basis::E,
            'h' => Basis::H,
            'p' => Basis::P,
            'm' => Basis::M,
            's' => Basis::S,
            _ => return Err(Error::Parse(format!("unknown basis {:?}", c))),
        })
    }
}

/// Finite linear combination of partitions in a tagged basis, with
/// LaurentPoly coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::single(basis, Partition::empty(), LaurentPoly::one())
    }

    pub fn single(basis: Basis, lam: Partition, coeff: LaurentPoly) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lam, coeff);
        f
    }

    pub fn schur(lam: Partition) -> Self {
        Self::single(Basis::S, lam, LaurentPoly::one())
    }

    pub fn h(k: usize) -> Self {
        Self::single(Basis::H, Partition::new(vec![k]), LaurentPoly::one())
    }

    pub fn e(k: usize) -> Self {
        Self::single(Basis::E, Partition::new(vec![k]), LaurentPoly::one())
    }

    pub fn p(k: usize) -> Self {
        Self::single(Basis::P, Partition::new(vec![k]), LaurentPoly::one())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> LaurentPoly {
        self.terms.get(lam).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, lam: Partition, coeff: LaurentPoly) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &coeff;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, rhs.basis, "basis mismatch in add");
        let mut out = self.clone();
        for (l, c) in rhs.terms.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SymFunc) -> SymFunc {
        self.add(&rhs.scale(&LaurentPoly::int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (l, v) in self.terms.iter() {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    fn check_degree(&self) -> Result<()> {
        let bound = degree_bound();
        for lam in self.terms.keys() {
            if lam.size() > bound {
                return Err(Error::BoundExceeded {
                    what: "symmetric function degree",
                    value: lam.size(),
                    limit: bound,
                });
            }
        }
        Ok(())
    }

    fn from_int_map(basis: Basis, map: &IntMap, scale: &LaurentPoly) -> SymFunc {
        let mut out = SymFunc::zero(basis);
        for (l, &c) in map {
            out.add_term(l.clone(), scale.scale(&rat(c)));
        }
        out
    }

    /// Convert to the Schur basis.
    pub fn to_s(&self) -> Result<SymFunc> {
        self.check_degree()?;
        if self.basis == Basis::S {
            return Ok(self.clone());
        }
        let mut out = SymFunc::zero(Basis::S);
        for (lam, coeff) in self.terms.iter() {
            match self.basis {
                Basis::H | Basis::E | Basis::P => {
                    let mut acc = IntMap::from([(Partition::empty(), 1i64)]);
                    for &k in lam.parts() {
                        acc = match self.basis {
                            Basis::H => convert::pieri_h(&acc, k),
                            Basis::E => convert::pieri_e(&acc, k),
                            Basis::P => convert::mn_p(&acc, k),
                            _ => unreachable!(),
                        };
                    }
                    for (key, c) in acc {
                        out.add_term(key, coeff.scale(&rat(c)));
                    }
                }
                Basis::M => {
                    for (key, c) in convert::monomial_to_s(lam) {
                        out.add_term(key, coeff.scale(&c));
                    }
                }
                Basis::S => unreachable!(),
            }
        }
        Ok(out)
    }

    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let s = self.to_s()?;
        if target == Basis::S {
            return Ok(s);
        }
        let mut out = SymFunc::zero(target);
        for (lam, coeff) in s.terms.iter() {
            match target {
                Basis::H => {
                    for (key, c) in convert::jacobi_trudi_h_terms(lam, &Partition::empty()) {
                        out.add_term(key, coeff.scale(&rat(c)));
                    }
                }
                Basis::E => {
                    // dual Jacobi-Trudi: s_λ = det(e_{λ'_i - i + j})
                    for (key, c) in
                        convert::jacobi_trudi_h_terms(&lam.conjugate(), &Partition::empty())
                    {
                        out.add_term(key, coeff.scale(&rat(c)));
                    }
                }
                Basis::P => {
                    for mu in Partition::all(lam.size()) {
                        let chi = convert::character(lam, &mu);
                        if chi != 0 {
                            let c = rat(chi) / convert::z_factor(&mu);
                            out.add_term(mu, coeff.scale(&c));
                        }
                    }
                }
                Basis::M => {
                    for mu in Partition::all(lam.size()) {
                        let k = convert::kostka(lam, &mu);
                        if k != 0 {
                            out.add_term(mu, coeff.scale(&rat(k)));
                        }
                    }
                }
                Basis::S => unreachable!(),
            }
        }
        Ok(out)
    }

    /// Product via Littlewood-Richardson on Schur expansions.
    pub fn multiply(&self, rhs: &SymFunc) -> Result<SymFunc> {
        let f = self.to_s()?;
        let g = rhs.to_s()?;
        let bound = degree_bound();
        let mut out = SymFunc::zero(Basis::S);
        for (lam, a) in f.terms.iter() {
            for (mu, b) in g.terms.iter() {
                if lam.size() + mu.size() > bound {
                    return Err(Error::BoundExceeded {
                        what: "product degree",
                        value: lam.size() + mu.size(),
                        limit: bound,
                    });
                }
                let coeff = a * b;
                for (key, c) in convert::lr_product(lam, mu) {
                    out.add_term(key, coeff.scale(&rat(c)));
                }
            }
        }
        Ok(out)
    }

    /// Product through the power-sum basis (independent route, used as
    /// a cross-check on `multiply`).
    pub fn multiply_via_p(&self, rhs: &SymFunc) -> Result<SymFunc> {
        let f = self.convert(Basis::P)?;
        let g = rhs.convert(Basis::P)?;
        let mut out = SymFunc::zero(Basis::P);
        for (lam, a) in f.terms.iter() {
            for (mu, b) in g.terms.iter() {
                let mut parts: Vec<usize> = lam.parts().iter().chain(mu.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.add_term(Partition::new(parts), a * b);
            }
        }
        out.to_s()
    }

    pub fn pow(&self, n: usize) -> Result<SymFunc> {
        let mut acc = SymFunc::one(Basis::S);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Skew Schur function s_{λ/μ} in the Schur basis.
    pub fn skew_schur(sh: &SkewShape) -> SymFunc {
        Self::from_int_map(
            Basis::S,
            &convert::skew_schur_s(&sh.outer, &sh.inner),
            &LaurentPoly::one(),
        )
    }

    /// Plethystic transform: p_k ↦ (q^{-k} - q^k)·p_k (minus) or
    /// p_k ↦ (q^k - q^{-k})·p_k (plus).
    pub fn pleth_transform(&self, direction: PlethDirection) -> Result<SymFunc> {
        let f = self.convert(Basis::P)?;
        let mut out = SymFunc::zero(Basis::P);
        for (lam, coeff) in f.terms.iter() {
            let mut factor = LaurentPoly::one();
            for &k in lam.parts() {
                let k = k as i64;
                let term = match direction {
                    PlethDirection::Minus => &LaurentPoly::q_pow(-k) - &LaurentPoly::q_pow(k),
                    PlethDirection::Plus => &LaurentPoly::q_pow(k) - &LaurentPoly::q_pow(-k),
                };
                factor = &factor * &term;
            }
            out.add_term(lam.clone(), coeff * &factor);
        }
        out.to_s()
    }

    /// Principal specialization at q^{N-1}, q^{N-3}, …, q^{1-N}.
    pub fn principal_spec(&self, n: u32) -> Result<LaurentPoly> {
        let f = self.convert(Basis::P)?;
        let mut out = LaurentPoly::zero();
        for (lam, coeff) in f.terms.iter() {
            let mut factor = LaurentPoly::one();
            for &k in lam.parts() {
                // p_k at the principal alphabet = [N] with q ↦ q^k
                factor = &factor * &LaurentPoly::quantum_int(n).subst_q_pow(k as i64);
            }
            out = &out + &(coeff * &factor);
        }
        Ok(out)
    }

    /// Evaluate at finitely many Laurent-monomial points (all other
    /// variables zero).
    pub fn spec_at_points(&self, points: &[LaurentPoly]) -> Result<LaurentPoly> {
        let f = self.convert(Basis::P)?;
        let mut out = LaurentPoly::zero();
        for (lam, coeff) in f.terms.iter() {
            let mut factor = LaurentPoly::one();
            for &k in lam.parts() {
                let mut pk = LaurentPoly::zero();
                for pt in points {
                    let mut pw = LaurentPoly::one();
                    for _ in 0..k {
                        pw = &pw * pt;
                    }
                    pk = &pk + &pw;
                }
                factor = &factor * &pk;
            }
            out = &out + &(coeff * &factor);
        }
        Ok(out)
    }

    /// HOMFLY evaluation: p_k ↦ (a^k - a^{-k})/(q^k - q^{-k}).
    /// Specializing a = q^N recovers principal_spec.
    pub fn homfly_eval(&self) -> Result<BiLaurent> {
        let f = self.convert(Basis::P)?;
        let mut out = BiLaurent::zero();
        for (lam, coeff) in f.terms.iter() {
            let mut factor = BiLaurent::from_laurent(coeff);
            for &k in lam.parts() {
                let k = k as i64;
                let num = BiLaurent::a_pow(k).sub(&BiLaurent::a_pow(-k));
                let den = BiLaurent::q_pow(k).sub(&BiLaurent::q_pow(-k));
                factor = factor.mul(&num.div(&den));
            }
            out = out.add(&factor);
        }
        Ok(out)
    }

    /// Apply a map to every coefficient (e.g. mirror_substitute).
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (l, c) in self.terms.iter() {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// JSON form: {"basis":"s","terms":[{"partition":[3,1],"coeff":"q"}]}
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.letter().to_string(),
            "terms": self.terms.iter().map(|(l, c)| serde_json::json!({
                "partition": l.parts(),
                "coeff": c.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlethDirection {
    /// f ↦ f[X(q^{-1} - q)]
    Minus,
    /// f ↦ f[X(q - q^{-1})]
    Plus,
}

/// The ribbon function Ψ(a), computed by three independent routes
/// (coarsening inclusion-exclusion, determinant, skew Schur of the
/// ribbon shape) which must agree exactly.
pub fn psi(a: &Composition) -> Result<SymFunc> {
    let r1 = psi_by_coarsening(a)?;
    let r2 = psi_by_determinant(a)?;
    let r3 = SymFunc::skew_schur(&composition_to_ribbon(a));
    if r1 != r2 || r2 != r3 {
        return Err(Error::Internal(format!(
            "psi routes disagree for {:?}:\n coarsening: {}\n determinant: {}\n ribbon: {}",
            a, r1, r2, r3
        )));
    }
    Ok(r3)
}

/// Ψ(a) = Σ_{b ⪰ a} (-1)^{l(a)-l(b)} h_b over coarsenings b of a.
fn psi_by_coarsening(a: &Composition) -> Result<SymFunc> {
    let l = a.len();
    assert!(l >= 1);
    let mut out = SymFunc::zero(Basis::H);
    for mask in 0..(1u32 << (l - 1)) {
        // kept boundaries split a into the coarsening b
        let mut parts = vec![];
        let mut run = 0;
        for (i, &p) in a.parts().iter().enumerate() {
            run += p;
            let boundary = i + 1 == l || mask & (1 << i) != 0;
            if boundary {
                parts.push(run);
                run = 0;
            }
        }
        let sign = if (l - parts.len()) % 2 == 0 { 1 } else { -1 };
        parts.sort_unstable_by(|x, y| y.cmp(x));
        out.add_term(Partition::new(parts), LaurentPoly::int(sign));
    }
    out.to_s()
}

/// Ψ(a) = det M(a) with M_ij = h_{a_i+…+a_j} for i ≤ j, 1 on the
/// subdiagonal, 0 below.
fn psi_by_determinant(a: &Composition) -> Result<SymFunc> {
    let s = a.len();
    let mut out = SymFunc::zero(Basis::H);
    let mut perm: Vec<usize> = (0..s).collect();
    fn visit(a: &Composition, perm: &[usize], out: &mut SymFunc) {
        let s = a.len();
        let inv = (0..s)
            .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut parts = vec![];
        for (i, &j) in perm.iter().enumerate() {
            if j + 1 == i {
                continue; // subdiagonal entry 1
            }
            if j < i {
                return; // zero entry below the subdiagonal
            }
            parts.push(a.parts()[i..=j].iter().sum::<usize>());
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        out.add_term(Partition::new(parts), LaurentPoly::int(sign));
    }
    fn rec(a: &Composition, perm: &mut Vec<usize>, i: usize, out: &mut SymFunc) {
        if i == perm.len() {
            visit(a, perm, out);
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            rec(a, perm, i + 1, out);
            perm.swap(i, j);
        }
    }
    rec(a, &mut perm, 0, &mut out);
    out.to_s()
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let b = self.basis.letter();
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let sym = format!("{}[{}]", b, l);
                if c.is_one() {
                    sym
                } else if (&LaurentPoly::zero() - c).is_one() {
                    format!("-{}", sym)
                } else if c.terms().count() == 1 {
                    format!("{}*{}", c, sym)
                } else {
                    format!("({})*{}", c, sym)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(part(parts))
    }

    #[test]
    fn basic_conversions() {
        assert_eq!(SymFunc::h(2).to_s().unwrap(), s(&[2]));
        assert_eq!(SymFunc::e(2).to_s().unwrap(), s(&[1, 1]));
        assert_eq!(SymFunc::p(2).to_s().unwrap(), s(&[2]).sub(&s(&[1, 1])));
        // p_n = Σ_k (-1)^k s_{k+1, 1^{n-k-1}}
        let p4 = SymFunc::p(4).to_s().unwrap();
        assert_eq!(
            p4,
            s(&[4])
                .sub(&s(&[3, 1]))
                .add(&s(&[2, 1, 1]))
                .sub(&s(&[1, 1, 1, 1]))
        );
    }

    #[test]
    fn conversion_roundtrips() {
        for target in [Basis::E, Basis::H, Basis::P, Basis::M] {
            for lam in Partition::all(5) {
                let f = SymFunc::schur(lam.clone());
                let g = f.convert(target).unwrap().to_s().unwrap();
                assert_eq!(g, f, "roundtrip via {:?} failed for {:?}", target, lam);
            }
        }
    }

    #[test]
    fn multiplication() {
        assert_eq!(
            s(&[1]).multiply(&s(&[1])).unwrap(),
            s(&[2]).add(&s(&[1, 1]))
        );
        assert_eq!(
            s(&[1]).multiply(&s(&[2, 1])).unwrap(),
            s(&[3, 1]).add(&s(&[2, 2])).add(&s(&[2, 1, 1]))
        );
        // h_1^n coefficient of s_λ = f^λ
        let h1_4 = SymFunc::h(1).pow(4).unwrap();
        for lam in Partition::all(4) {
            assert_eq!(
                h1_4.coeff(&lam),
                LaurentPoly::int(lam.num_standard_tableaux() as i64)
            );
        }
    }

    #[test]
    fn multiply_routes_agree() {
        let pairs = [
            (s(&[2, 1]), s(&[2])),
            (s(&[3, 1]), s(&[2, 2])),
            (SymFunc::e(3).to_s().unwrap(), SymFunc::p(3).to_s().unwrap()),
        ];
        for (f, g) in pairs {
            assert_eq!(
                f.multiply(&g).unwrap(),
                f.multiply_via_p(&g).unwrap(),
                "LR and p-basis products disagree"
            );
        }
    }

    #[test]
    fn psi_examples() {
        let psi_3212 = psi(&Composition::new(vec![3, 2, 1, 2])).unwrap();
        let expected = s(&[3, 2, 2, 1])
            .add(&s(&[3, 3, 1, 1]))
            .add(&s(&[4, 2, 1, 1]).scale(&LaurentPoly::int(2)))
            .add(&s(&[4, 2, 2]))
            .add(&s(&[4, 3, 1]))
            .add(&s(&[5, 1, 1, 1]))
            .add(&s(&[5, 2, 1]));
        assert_eq!(psi_3212, expected);
        assert_eq!(psi(&Composition::new(vec![2, 2])).unwrap(), s(&[2, 2]).add(&s(&[3, 1])));
        // hooks: Ψ(k+1, 1^{n-k-1}) = s_{k+1,1^{n-k-1}}
        for n in 2..=6usize {
            for k in 0..n {
                let mut parts = vec![k + 1];
                parts.extend(std::iter::repeat(1).take(n - k - 1));
                let a = Composition::new(parts.clone());
                assert_eq!(psi(&a).unwrap(), s(&parts));
            }
        }
    }

    #[test]
    fn psi_sums_to_h1_power() {
        for n in 1..=6 {
            let mut total = SymFunc::zero(Basis::S);
            for a in Composition::all(n) {
                total = total.add(&psi(&a).unwrap());
            }
            assert_eq!(total, SymFunc::h(1).pow(n).unwrap());
        }
    }

    #[test]
    fn pleth_examples() {
        // p_1 ↦ (q^{-1} - q) p_1
        let t = SymFunc::p(1).pleth_transform(PlethDirection::Minus).unwrap();
        let qm = &LaurentPoly::q_pow(-1) - &LaurentPoly::q_pow(1);
        assert_eq!(t, s(&[1]).scale(&qm));
        // e_2[X(q^{-1}-q)] = (q^{-1}-q)(-q s_2 + q^{-1} s_11)
        let t2 = SymFunc::e(2).pleth_transform(PlethDirection::Minus).unwrap();
        let expected = s(&[2])
            .scale(&LaurentPoly::monomial(rat(-1), 1))
            .add(&s(&[1, 1]).scale(&LaurentPoly::q_pow(-1)))
            .scale(&qm);
        assert_eq!(t2, expected);
        assert_eq!(
            SymFunc::one(Basis::S).pleth_transform(PlethDirection::Minus).unwrap(),
            SymFunc::one(Basis::S)
        );
    }

    #[test]
    fn specializations() {
        assert_eq!(s(&[1]).principal_spec(2).unwrap(), LaurentPoly::quantum_int(2));
        assert_eq!(
            s(&[2]).principal_spec(2).unwrap(),
            LaurentPoly::from_terms([(2, rat(1)), (0, rat(1)), (-2, rat(1))])
        );
        // p_k principal spec = (q^{kN} - q^{-kN})/(q^k - q^{-k})
        for n in 1..=4u32 {
            for k in 1..=4usize {
                let lhs = SymFunc::p(k).principal_spec(n).unwrap();
                let num = &LaurentPoly::q_pow((k as i64) * n as i64)
                    - &LaurentPoly::q_pow(-(k as i64) * n as i64);
                let den = &LaurentPoly::q_pow(k as i64) - &LaurentPoly::q_pow(-(k as i64));
                assert_eq!(lhs, num.div_exact(&den).unwrap());
            }
        }
        // spec_at_points
        let pts = [LaurentPoly::q(), LaurentPoly::q_pow(-1)];
        assert_eq!(s(&[1]).spec_at_points(&pts).unwrap(), LaurentPoly::quantum_int(2));
        assert_eq!(
            s(&[1, 1]).spec_at_points(&[LaurentPoly::q()]).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            SymFunc::e(2).spec_at_points(&pts).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn homfly_specializes_to_principal() {
        for n in 1..=3i64 {
            for f in [s(&[2, 1]), SymFunc::e(2).to_s().unwrap(), s(&[3])] {
                let h = f.homfly_eval().unwrap();
                assert_eq!(
                    h.subst_a(n).to_laurent().unwrap(),
                    f.principal_spec(n as u32).unwrap()
                );
            }
        }
    }

    #[test]
    fn display_and_json() {
        let f = s(&[2, 2]).scale(&LaurentPoly::monomial(rat(2), 2)).add(&s(&[3, 1]));
        assert_eq!(f.to_string(), "2*q^2*s[2,2] + s[3,1]");
        let j = f.to_json();
        assert_eq!(j["basis"], "s");
        assert_eq!(j["terms"][0]["partition"][0], 2);
    }

    #[test]
    fn degree_bound_enforced() {
        let big = SymFunc::h(13);
        assert!(matches!(big.to_s(), Err(Error::BoundExceeded { .. })));
    }
}
