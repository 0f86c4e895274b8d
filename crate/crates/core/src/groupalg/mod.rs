//! The rational group algebra of the symmetric group: Young idempotents,
//! descent-symmetrizer ideals, their orthogonal projectors, and Frobenius
//! characters of stable subspaces.

mod snrep;
pub use snrep::RatRep;

use crate::exact::{rat, ColumnSpace, LaurentPoly, Matrix, Rational};
use crate::shapes::{Partition, SignSequence};
use crate::symfunc::{z_factor, Basis, SymFunc};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Largest strand count for group-algebra-wide computations.
pub const GROUP_BOUND: usize = 6;

/// Permutation of {0..n-1} in one-line notation; composition is
/// "right acts first": (p·q)(i) = p(q(i)).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!(v < n && !seen[v], "not a bijection");
            seen[v] = true;
        }
        Perm(images)
    }

    /// The adjacent transposition s_i swapping i and i+1 (1-based, i < n).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n());
        Perm(rhs.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.0[cur];
            }
            out.push(cyc);
        }
        out
    }

    pub fn sign(&self) -> i64 {
        if (self.n() - self.cycles().len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens)
    }

    /// Canonical representative with the given cycle type: disjoint
    /// cycles on consecutive blocks.
    pub fn from_cycle_type(mu: &Partition) -> Perm {
        let n = mu.size();
        let mut v: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &part in mu.parts() {
            for i in start..start + part - 1 {
                v[i] = i + 1;
            }
            v[start + part - 1] = start;
            start += part;
        }
        Perm(v)
    }

    /// Word [i_1, …, i_k] with self = s_{i_k} ∘ … ∘ s_{i_1}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = vec![];
        loop {
            let Some(j) = (1..w.len()).find(|&j| w[j - 1] > w[j]) else {
                break;
            };
            w.swap(j - 1, j);
            word.push(j);
        }
        word
    }

    /// All n! permutations in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        use itertools::Itertools;
        if n == 0 {
            return vec![Perm(vec![])];
        }
        (0..n).permutations(n).map(Perm).collect()
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cyc in nontrivial {
            let labels: Vec<String> = cyc.iter().map(|&i| (i + 1).to_string()).collect();
            write!(f, "({})", labels.join(" "))?;
        }
        Ok(())
    }
}

/// Enumerated S_n with constant-time index lookup.
pub struct PermIndex {
    perms: Vec<Perm>,
    map: HashMap<Perm, usize>,
}

impl PermIndex {
    pub fn new(n: usize) -> Self {
        let perms = Perm::all(n);
        let map = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermIndex { perms, map }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perm(&self, i: usize) -> &Perm {
        &self.perms[i]
    }

    pub fn index(&self, p: &Perm) -> usize {
        self.map[p]
    }
}

/// Element of ℚ[S_n].
#[derive(Clone, PartialEq)]
pub struct GroupAlgElem {
    n: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl GroupAlgElem {
    pub fn zero(n: usize) -> Self {
        GroupAlgElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::single(Perm::identity(n), rat(1))
    }

    pub fn single(p: Perm, c: Rational) -> Self {
        let mut x = Self::zero(p.n());
        x.add_term(p, c);
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Perm) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: Perm, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (p, c) in rhs.terms.iter() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (a, ca) in self.terms.iter() {
            for (b, cb) in rhs.terms.iter() {
                out.add_term(a.compose(b), ca * cb);
            }
        }
        out
    }

    pub fn conjugate_by(&self, g: &Perm) -> Self {
        let ginv = g.inverse();
        let mut out = Self::zero(self.n);
        for (p, c) in self.terms.iter() {
            out.add_term(g.compose(p).compose(&ginv), c.clone());
        }
        out
    }

    pub fn to_vector(&self, idx: &PermIndex) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); idx.len()];
        for (p, c) in self.terms.iter() {
            v[idx.index(p)] = c.clone();
        }
        v
    }

    pub fn from_vector(idx: &PermIndex, v: &[Rational], n: usize) -> Self {
        let mut out = Self::zero(n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(idx.perm(i).clone(), c.clone());
            }
        }
        out
    }
}

impl std::fmt::Display for GroupAlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if num_traits::One::is_one(c) {
                write!(f, "{}", p)?;
            } else {
                write!(f, "{}*{}", c, p)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

/// All elements of the parabolic subgroup generated by the listed
/// adjacent transpositions (1-based indices).
pub fn parabolic_subgroup(n: usize, gens: &[usize]) -> Vec<Perm> {
    let gen_perms: Vec<Perm> = gens.iter().map(|&i| Perm::transposition(n, i)).collect();
    let mut seen = std::collections::HashSet::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    let mut out = vec![];
    while let Some(g) = queue.pop_front() {
        for s in &gen_perms {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out
}

/// (s_ε, s̄_ε): the normalized symmetrizer over the ε = +1 generators and
/// the normalized antisymmetrizer over the ε = −1 generators.
pub fn sign_symmetrizers(eps: &SignSequence) -> (GroupAlgElem, GroupAlgElem) {
    let n = eps.strands();
    let plus: Vec<usize> = eps
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let minus: Vec<usize> = eps
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == -1)
        .map(|(i, _)| i + 1)
        .collect();
    let build = |gens: &[usize], signed: bool| {
        let members = parabolic_subgroup(n, gens);
        let norm = rat(1) / rat(members.len() as i64);
        let mut x = GroupAlgElem::zero(n);
        for w in members {
            let c = if signed { rat(w.sign()) * &norm } else { norm.clone() };
            x.add_term(w, c);
        }
        x
    };
    (build(&plus, false), build(&minus, true))
}

/// All permutations preserving each of the given disjoint label sets
/// (1-based labels), as full permutations of {0..n-1}.
fn set_stabilizer(n: usize, sets: &[&[usize]]) -> Vec<Perm> {
    use itertools::Itertools;
    let mut out = vec![Perm::identity(n)];
    for set in sets {
        let mut next = vec![];
        for images in set.iter().permutations(set.len()) {
            for p in &out {
                let mut v = p.0.clone();
                for (src, dst) in set.iter().zip(images.iter()) {
                    v[*src - 1] = **dst - 1;
                }
                next.push(Perm(v));
            }
        }
        out = next;
    }
    out
}

/// Primitive idempotent e_λ of ℚ[S_n] built from the row-reading tableau:
/// (f^λ/n!) · (row symmetrizer) · (signed column symmetrizer).
pub fn young_idempotent(lam: &Partition) -> Result<GroupAlgElem> {
    let n = lam.size();
    if n > GROUP_BOUND {
        return Err(Error::BoundExceeded {
            what: "young idempotent strand count",
            value: n,
            limit: GROUP_BOUND,
        });
    }
    let tab = crate::shapes::StandardTableau::row_reading(lam);
    let rows: Vec<&[usize]> = tab.rows().iter().map(|r| r.as_slice()).collect();
    let ncols = lam.part(0);
    let cols: Vec<Vec<usize>> = (0..ncols)
        .map(|c| {
            tab.rows()
                .iter()
                .filter(|r| c < r.len())
                .map(|r| r[c])
                .collect()
        })
        .collect();
    let col_refs: Vec<&[usize]> = cols.iter().map(|c| c.as_slice()).collect();
    let mut a = GroupAlgElem::zero(n);
    for w in set_stabilizer(n, &rows) {
        a.add_term(w, rat(1));
    }
    let mut b = GroupAlgElem::zero(n);
    for w in set_stabilizer(n, &col_refs) {
        let s = w.sign();
        b.add_term(w, rat(s));
    }
    let f = lam.num_standard_tableaux() as i64;
    let nfact: i64 = (1..=n as i64).product();
    let e = a.mul(&b).scale(&(rat(f) / rat(nfact)));
    if e.mul(&e) != e {
        return Err(Error::Internal(format!(
            "young symmetrizer of {:?} failed to be idempotent",
            lam
        )));
    }
    Ok(e)
}

/// Echelonized basis of the left ideal ℚ[S_n]·s_ε·s̄_ε, computed as the
/// column space of right multiplication by s_ε s̄_ε in the regular
/// representation. Columns for g and gu, u in the plus-parabolic,
/// coincide, so only one column per coset is inserted.
pub fn solomon_ideal_basis(eps: &SignSequence) -> Result<Vec<GroupAlgElem>> {
    let n = eps.strands();
    if n > GROUP_BOUND {
        return Err(Error::BoundExceeded {
            what: "solomon ideal strand count",
            value: n,
            limit: GROUP_BOUND,
        });
    }
    let idx = PermIndex::new(n);
    let (s, sbar) = sign_symmetrizers(eps);
    let x = s.mul(&sbar);
    let plus: Vec<usize> = eps
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let wplus = parabolic_subgroup(n, &plus);
    let mut visited = vec![false; idx.len()];
    let mut cs = ColumnSpace::new(idx.len());
    for gi in 0..idx.len() {
        if visited[gi] {
            continue;
        }
        let g = idx.perm(gi).clone();
        for u in &wplus {
            visited[idx.index(&g.compose(u))] = true;
        }
        let mut v = vec![Rational::zero(); idx.len()];
        for (h, c) in x.terms() {
            v[idx.index(&g.compose(h))] += c;
        }
        cs.insert(v);
    }
    Ok(cs
        .basis()
        .iter()
        .map(|v| GroupAlgElem::from_vector(&idx, v, n))
        .collect())
}

/// Echelonized basis of the left ideal ℚ[S_n]·x, by closure under left
/// multiplication by the adjacent transpositions.
pub fn left_ideal_basis(x: &GroupAlgElem) -> Vec<GroupAlgElem> {
    let n = x.n();
    let idx = PermIndex::new(n);
    let tables = left_mult_tables(&idx, n);
    let mut cs = ColumnSpace::new(idx.len());
    let seed = x.to_vector(&idx);
    let mut work = vec![seed.clone()];
    cs.insert(seed);
    while let Some(v) = work.pop() {
        for table in &tables {
            let w: Vec<Rational> = table.iter().map(|&j| v[j].clone()).collect();
            if cs.insert(w.clone()) {
                work.push(w);
            }
        }
    }
    cs.basis()
        .iter()
        .map(|v| GroupAlgElem::from_vector(&idx, v, n))
        .collect()
}

/// Index tables for left multiplication by each adjacent transposition:
/// (s_i · x)[j] = x[table_i[j]].
fn left_mult_tables(idx: &PermIndex, n: usize) -> Vec<Vec<usize>> {
    (1..n)
        .map(|i| {
            let s = Perm::transposition(n, i);
            (0..idx.len())
                .map(|j| idx.index(&s.compose(idx.perm(j))))
                .collect()
        })
        .collect()
}

/// Character of the left S_n-action on the span of `basis`, expanded in
/// Schur functions: Σ_λ m_λ s_λ with nonnegative integer multiplicities.
pub fn frobenius_character(basis: &[GroupAlgElem]) -> Result<SymFunc> {
    let Some(first) = basis.first() else {
        return Ok(SymFunc::zero(Basis::S));
    };
    let n = first.n();
    assert!(basis.iter().all(|x| x.n() == n), "mixed strand counts");
    let idx = PermIndex::new(n);
    let mut cs = ColumnSpace::new(idx.len());
    for x in basis {
        cs.insert(x.to_vector(&idx));
    }
    for table in left_mult_tables(&idx, n) {
        for b in cs.basis() {
            let w: Vec<Rational> = table.iter().map(|&j| b[j].clone()).collect();
            if !cs.contains(&w) {
                return Err(Error::Internal(
                    "subspace is not stable under left multiplication".into(),
                ));
            }
        }
    }
    let mut ch = SymFunc::zero(Basis::P);
    for mu in Partition::all(n) {
        let cinv = Perm::from_cycle_type(&mu).inverse();
        let mut tr = Rational::zero();
        for (b, &p) in cs.basis().iter().zip(cs.pivots()) {
            tr += &b[idx.index(&cinv.compose(idx.perm(p)))];
        }
        ch.add_term(mu.clone(), LaurentPoly::constant(tr / z_factor(&mu)));
    }
    let s = ch.to_s()?;
    for (lam, c) in s.terms() {
        let ok = c.is_constant()
            && c.constant_term().is_integer()
            && !c.constant_term().is_negative();
        if !ok {
            return Err(Error::Internal(format!(
                "character has non-multiplicity coefficient {} at {:?}",
                c, lam
            )));
        }
    }
    Ok(s)
}

/// The orthogonal idempotents p_ε with ℚ[S_n] = ⊕_ε ℚ[S_n]·s_ε·s̄_ε and
/// right multiplication by p_ε projecting onto the ε summand.
///
/// Computed blockwise: in each irreducible, the ε summand is the set of
/// matrices whose row space lies in the row space of the image of
/// s_ε s̄_ε; stacking those row spaces gives a change of basis B with
/// ρ_λ(p_ε) = B⁻¹ D_ε B, and the group-algebra coefficients are then
/// recovered by Fourier inversion over the irreducible characters.
pub fn solomon_projectors(n: usize) -> Result<Vec<(SignSequence, GroupAlgElem)>> {
    if n == 0 || n > GROUP_BOUND {
        return Err(Error::BoundExceeded {
            what: "solomon projector strand count",
            value: n,
            limit: GROUP_BOUND,
        });
    }
    let idx = PermIndex::new(n);
    let nfact = idx.len();
    let eps_list = SignSequence::all(n);
    let shapes = Partition::all(n);
    let mut blocks: Vec<Vec<Matrix<Rational>>> = vec![vec![]; eps_list.len()];
    let mut dims = vec![];
    for lam in &shapes {
        let rep = RatRep::new(lam)?;
        let f = rep.dim();
        dims.push(f);
        let mats = all_rep_matrices(&rep, &idx);
        // row-space bases of the images of s_ε s̄_ε, stacked into B
        let mut b = Matrix::zero(f, f);
        let mut segments = vec![];
        let mut row = 0;
        for eps in &eps_list {
            let m = symmetrizer_image(eps, &idx, &mats, f);
            let (rr, pivots) = m.rref();
            segments.push((row, pivots.len()));
            for r in 0..pivots.len() {
                if row == f {
                    return Err(Error::Internal("ideal sum is not direct".into()));
                }
                for j in 0..f {
                    b.set(row, j, rr.get(r, j).clone());
                }
                row += 1;
            }
        }
        if row != f {
            return Err(Error::Internal("ideal sum is not direct".into()));
        }
        let binv = b
            .inverse()
            .ok_or_else(|| Error::Internal("ideal sum is not direct".into()))?;
        for (ei, &(start, len)) in segments.iter().enumerate() {
            let mut selected = Matrix::zero(f, f);
            for r in start..start + len {
                for j in 0..f {
                    selected.set(r, j, b.get(r, j).clone());
                }
            }
            blocks[ei].push(binv.mul(&selected));
        }
        // orthogonality and completeness, verified per block
        let mut total = Matrix::zero(f, f);
        for ei in 0..eps_list.len() {
            total = total.add(&blocks[ei][dims.len() - 1]);
            for ej in 0..eps_list.len() {
                let prod = blocks[ei][dims.len() - 1].mul(&blocks[ej][dims.len() - 1]);
                let expect = if ei == ej {
                    blocks[ei][dims.len() - 1].clone()
                } else {
                    Matrix::zero(f, f)
                };
                if prod != expect {
                    return Err(Error::Internal(format!(
                        "projector blocks not orthogonal at {:?}",
                        lam
                    )));
                }
            }
        }
        if total != Matrix::identity(f) {
            return Err(Error::Internal(format!(
                "projector blocks not complete at {:?}",
                lam
            )));
        }
    }
    // Fourier inversion needs ρ_λ(g⁻¹) for every g; rebuild tables once
    // per λ to keep peak memory at one table.
    let mut coeffs: Vec<Vec<Rational>> = vec![vec![Rational::zero(); nfact]; eps_list.len()];
    for (li, lam) in shapes.iter().enumerate() {
        let rep = RatRep::new(lam)?;
        let mats = all_rep_matrices(&rep, &idx);
        let flam = rat(dims[li] as i64);
        let inv_of: Vec<usize> = (0..nfact)
            .map(|g| idx.index(&idx.perm(g).inverse()))
            .collect();
        for (ei, block) in blocks.iter().enumerate() {
            let p = &block[li];
            for g in 0..nfact {
                let t = trace_product(&mats[inv_of[g]], p);
                if !t.is_zero() {
                    coeffs[ei][g] += t * &flam;
                }
            }
        }
    }
    let norm = rat(1) / rat(nfact as i64);
    let mut out = vec![];
    let mut total = GroupAlgElem::zero(n);
    for (ei, eps) in eps_list.iter().enumerate() {
        let mut p = GroupAlgElem::zero(n);
        for g in 0..nfact {
            p.add_term(idx.perm(g).clone(), &coeffs[ei][g] * &norm);
        }
        total = total.add(&p);
        out.push((eps.clone(), p));
    }
    if total != GroupAlgElem::one(n) {
        return Err(Error::Internal("projectors do not sum to 1".into()));
    }
    Ok(out)
}

/// ρ(g) for every g, indexed like `idx`, by breadth-first products.
fn all_rep_matrices(rep: &RatRep, idx: &PermIndex) -> Vec<Matrix<Rational>> {
    let n = idx.perm(0).n();
    let mut mats: Vec<Option<Matrix<Rational>>> = vec![None; idx.len()];
    let id = Perm::identity(n);
    mats[idx.index(&id)] = Some(Matrix::identity(rep.dim()));
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        let gm = mats[idx.index(&g)].clone().unwrap();
        for i in 1..n {
            let h = Perm::transposition(n, i).compose(&g);
            let hi = idx.index(&h);
            if mats[hi].is_none() {
                mats[hi] = Some(rep.gen(i).mul(&gm));
                queue.push_back(h);
            }
        }
    }
    mats.into_iter().map(|m| m.unwrap()).collect()
}

/// ρ(s_ε)·ρ(s̄_ε) from the per-permutation matrix table.
fn symmetrizer_image(
    eps: &SignSequence,
    idx: &PermIndex,
    mats: &[Matrix<Rational>],
    f: usize,
) -> Matrix<Rational> {
    let n = eps.strands();
    let group_sum = |gens: &[usize], signed: bool| {
        let members = parabolic_subgroup(n, gens);
        let norm = rat(1) / rat(members.len() as i64);
        let mut m = Matrix::zero(f, f);
        for w in &members {
            let c = if signed { rat(w.sign()) * &norm } else { norm.clone() };
            m = m.add(&mats[idx.index(w)].scale(&c));
        }
        m
    };
    let plus: Vec<usize> = eps
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let minus: Vec<usize> = eps
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == -1)
        .map(|(i, _)| i + 1)
        .collect();
    group_sum(&plus, false).mul(&group_sum(&minus, true))
}

fn trace_product(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Rational {
    let f = a.rows();
    let mut acc = Rational::zero();
    for i in 0..f {
        for j in 0..f {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let y = b.get(j, i);
            if !y.is_zero() {
                acc += x * y;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{epsilon_to_composition, Composition};
    use crate::symfunc::psi;

    fn sym(lam: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::new(lam.to_vec()))
    }

    #[test]
    fn composition_is_right_acts_first() {
        let s1 = Perm::transposition(3, 1);
        let s2 = Perm::transposition(3, 2);
        // (s1∘s2)(0) = s1(s2(0)) = s1(0) = 1, etc.
        let p = s1.compose(&s2);
        assert_eq!(p, Perm::from_images(vec![1, 2, 0]));
        assert!(p.compose(&p).compose(&p).is_identity());
        // full multiplication table of S_3 is associative and closed
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
                assert!(a.compose(&a.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn perm_word_and_cycles() {
        for p in Perm::all(4) {
            let mut q = Perm::identity(4);
            for i in p.reduced_word() {
                q = Perm::transposition(4, i).compose(&q);
            }
            assert_eq!(q, p);
            assert_eq!(p.sign(), if p.reduced_word().len() % 2 == 0 { 1 } else { -1 });
            assert_eq!(
                Perm::from_cycle_type(&p.cycle_type()).cycle_type(),
                p.cycle_type()
            );
        }
    }

    fn right_regular_rank(x: &GroupAlgElem) -> usize {
        let idx = PermIndex::new(x.n());
        let mut cs = ColumnSpace::new(idx.len());
        for g in 0..idx.len() {
            let col = GroupAlgElem::single(idx.perm(g).clone(), rat(1)).mul(x);
            cs.insert(col.to_vector(&idx));
        }
        cs.rank()
    }

    #[test]
    fn young_idempotent_extremes() {
        for n in 1..=4 {
            let nfact: i64 = (1..=n as i64).product();
            let mut full = GroupAlgElem::zero(n);
            let mut sign = GroupAlgElem::zero(n);
            for g in Perm::all(n) {
                let s = g.sign();
                full.add_term(g.clone(), rat(1) / rat(nfact));
                sign.add_term(g, rat(s) / rat(nfact));
            }
            assert_eq!(young_idempotent(&Partition::new(vec![n])).unwrap(), full);
            assert_eq!(young_idempotent(&Partition::new(vec![1; n])).unwrap(), sign);
        }
    }

    #[test]
    fn young_idempotent_ranks_and_orthogonality() {
        for n in 1..=4 {
            let shapes = Partition::all(n);
            let es: Vec<GroupAlgElem> =
                shapes.iter().map(|l| young_idempotent(l).unwrap()).collect();
            for (lam, e) in shapes.iter().zip(es.iter()) {
                assert_eq!(right_regular_rank(e), lam.num_standard_tableaux());
            }
            for i in 0..es.len() {
                for j in 0..es.len() {
                    if i == j {
                        continue;
                    }
                    let prod = es[i].mul(&es[j]);
                    // conjugation-orbit average of the cross product vanishes
                    let mut avg = GroupAlgElem::zero(n);
                    for g in Perm::all(n) {
                        avg = avg.add(&prod.conjugate_by(&g));
                    }
                    assert!(avg.is_zero());
                    assert_eq!(right_regular_rank(&prod), 0);
                }
            }
        }
    }

    #[test]
    fn solomon_ideals_small() {
        let plus = SignSequence::new(vec![1]);
        let minus = SignSequence::new(vec![-1]);
        let b1 = solomon_ideal_basis(&plus).unwrap();
        assert_eq!(b1.len(), 1);
        let s = Perm::transposition(2, 1);
        assert_eq!(
            b1[0].scale(&(rat(1) / b1[0].coeff(&Perm::identity(2)))),
            GroupAlgElem::one(2).add(&GroupAlgElem::single(s.clone(), rat(1)))
        );
        let b2 = solomon_ideal_basis(&minus).unwrap();
        assert_eq!(b2.len(), 1);
        assert_eq!(
            b2[0].scale(&(rat(1) / b2[0].coeff(&Perm::identity(2)))),
            GroupAlgElem::one(2).sub(&GroupAlgElem::single(s, rat(1)))
        );
        let dims: Vec<usize> = SignSequence::all(3)
            .iter()
            .map(|e| solomon_ideal_basis(e).unwrap().len())
            .collect();
        let mut sorted = dims.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 2, 2]);
        assert_eq!(dims.iter().sum::<usize>(), 6);
    }

    #[test]
    fn solomon_decomposition_is_direct() {
        for n in 2..=4 {
            let idx = PermIndex::new(n);
            let mut cs = ColumnSpace::new(idx.len());
            let mut total = 0;
            for eps in SignSequence::all(n) {
                for b in solomon_ideal_basis(&eps).unwrap() {
                    assert!(cs.insert(b.to_vector(&idx)));
                    total += 1;
                }
            }
            assert_eq!(total, idx.len());
        }
    }

    #[test]
    fn frobenius_of_regular_representation() {
        for n in 1..=4 {
            let basis: Vec<GroupAlgElem> = Perm::all(n)
                .into_iter()
                .map(|p| GroupAlgElem::single(p, rat(1)))
                .collect();
            let ch = frobenius_character(&basis).unwrap();
            let mut expect = SymFunc::zero(Basis::S);
            for lam in Partition::all(n) {
                expect.add_term(
                    lam.clone(),
                    LaurentPoly::int(lam.num_standard_tableaux() as i64),
                );
            }
            assert_eq!(ch, expect);
        }
    }

    #[test]
    fn frobenius_of_solomon_ideals_is_ribbon() {
        // pinned rows first
        let e21 = crate::shapes::composition_to_epsilon(&Composition::new(vec![2, 1]));
        assert_eq!(
            frobenius_character(&solomon_ideal_basis(&e21).unwrap()).unwrap(),
            sym(&[2, 1])
        );
        let e22 = crate::shapes::composition_to_epsilon(&Composition::new(vec![2, 2]));
        assert_eq!(
            frobenius_character(&solomon_ideal_basis(&e22).unwrap()).unwrap(),
            sym(&[2, 2]).add(&sym(&[3, 1]))
        );
        for n in 1..=4 {
            for eps in SignSequence::all(n) {
                let ch = frobenius_character(&solomon_ideal_basis(&eps).unwrap()).unwrap();
                let a = epsilon_to_composition(&eps);
                assert_eq!(ch, psi(&a).unwrap(), "ε = {:?}", eps);
            }
        }
    }

    #[test]
    fn frobenius_rejects_unstable_subspace() {
        let x = GroupAlgElem::one(3);
        assert!(frobenius_character(&[x]).is_err());
    }

    #[test]
    fn frobenius_of_young_images_is_schur() {
        for n in 1..=4 {
            for lam in Partition::all(n) {
                let e = young_idempotent(&lam).unwrap();
                let basis = left_ideal_basis(&e);
                assert_eq!(basis.len(), lam.num_standard_tableaux());
                assert_eq!(
                    frobenius_character(&basis).unwrap(),
                    SymFunc::schur(lam.clone())
                );
            }
        }
    }

    #[test]
    fn projectors_small() {
        let ps = solomon_projectors(2).unwrap();
        let s = Perm::transposition(2, 1);
        let half = rat(1) / rat(2);
        let plus_proj = GroupAlgElem::one(2)
            .scale(&half)
            .add(&GroupAlgElem::single(s.clone(), half.clone()));
        let minus_proj = GroupAlgElem::one(2)
            .scale(&half)
            .sub(&GroupAlgElem::single(s, half));
        for (eps, p) in &ps {
            if eps.entries() == [1] {
                assert_eq!(*p, plus_proj);
            } else {
                assert_eq!(*p, minus_proj);
            }
        }
    }

    #[test]
    fn projectors_project_onto_ideals() {
        for n in 2..=4 {
            let nfact: i64 = (1..=n as i64).product();
            let idx = PermIndex::new(n);
            let ps = solomon_projectors(n).unwrap();
            let mut total = GroupAlgElem::zero(n);
            for (i, (_, p)) in ps.iter().enumerate() {
                assert_eq!(p.mul(p), *p);
                for (j, (_, q)) in ps.iter().enumerate() {
                    if i != j {
                        assert!(p.mul(q).is_zero());
                    }
                }
                total = total.add(p);
            }
            assert_eq!(total, GroupAlgElem::one(n));
            // image of right multiplication by p_ε is the ideal
            for (eps, p) in &ps {
                let ideal = solomon_ideal_basis(eps).unwrap();
                let mut cs = ColumnSpace::new(idx.len());
                for b in &ideal {
                    cs.insert(b.to_vector(&idx));
                }
                let mut rank = 0;
                for g in Perm::all(n) {
                    let col = GroupAlgElem::single(g, rat(1)).mul(p);
                    assert!(cs.contains(&col.to_vector(&idx)));
                    if !col.is_zero() {
                        rank += 1;
                    }
                }
                assert!(rank > 0 || ideal.is_empty());
                assert_eq!(right_regular_rank(p), ideal.len());
            }
            // the all-plus projector fixes the trivial isotypic line
            let full = young_idempotent(&Partition::new(vec![n])).unwrap();
            let all_plus = ps
                .iter()
                .find(|(e, _)| e.entries().iter().all(|&x| x == 1))
                .unwrap();
            assert_eq!(full.mul(&all_plus.1), full);
            let _ = nfact;
        }
    }
}
