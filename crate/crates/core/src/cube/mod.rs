//! The evaluated Koszul cube: a complex with chain groups ∧^i(U_n) ⊗ E^{⊗n}
//! for a finite-dimensional space E with endomorphism X in Jordan form,
//! differential contracting against x_i − x_{i+1}, and a strand-permuting
//! S_n action. Idempotent projections, graded homology, and dimension
//! oracles live here; the Hom-complex layer is in `end`.

mod end;
pub use end::{end_complex_dims, hom_schur_positivity, EndMode};

use crate::exact::{rat, LaurentPoly, Matrix, Rational};
use crate::groupalg::{solomon_projectors, young_idempotent, GroupAlgElem, Perm};
use crate::shapes::{Partition, SignSequence};
use crate::symfunc::{character, z_factor};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Largest dim(E)^n handled when building an evaluated cube.
pub const TENSOR_BUDGET: usize = 10_000;

/// Finite-dimensional evaluation target: a vector space with an
/// endomorphism X in Jordan form. Graded only when X is nilpotent, in
/// which case a size-N block carries the balanced q-string with basis
/// vector X^k·(cyclic vector) at q-degree 2k − (N−1), X of q-degree 2.
#[derive(Clone, PartialEq, Debug)]
pub struct EvalObject {
    blocks: Vec<(Rational, usize)>,
    graded: bool,
}

impl EvalObject {
    pub fn new(blocks: Vec<(Rational, usize)>) -> Self {
        assert!(!blocks.is_empty() && blocks.iter().all(|&(_, s)| s > 0));
        let graded = blocks.iter().all(|(ev, _)| ev.is_zero());
        EvalObject { blocks, graded }
    }

    /// One nilpotent block of each given size.
    pub fn nilpotent(sizes: &[usize]) -> Self {
        Self::new(sizes.iter().map(|&s| (Rational::zero(), s)).collect())
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|&(_, s)| s).sum()
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    /// X in the block basis: X e_k = λ e_k + e_{k+1} within each block.
    pub fn x_mat(&self) -> Matrix<Rational> {
        let d = self.dim();
        let mut m = Matrix::zero(d, d);
        let mut off = 0;
        for (ev, s) in &self.blocks {
            for k in 0..*s {
                m.set(off + k, off + k, ev.clone());
                if k + 1 < *s {
                    m.set(off + k + 1, off + k, rat(1));
                }
            }
            off += s;
        }
        m
    }

    /// q-degree of each basis vector, when graded.
    pub fn q_degrees(&self) -> Option<Vec<i64>> {
        if !self.graded {
            return None;
        }
        let mut out = vec![];
        for &(_, s) in &self.blocks {
            for k in 0..s {
                out.push(2 * k as i64 - (s as i64 - 1));
            }
        }
        Some(out)
    }
}

/// Finitely supported dimensions keyed by (q-exponent, homological
/// degree); ungraded data is stored at q = 0.
#[derive(Clone, PartialEq, Debug)]
pub struct BigradedDims {
    graded: bool,
    dims: BTreeMap<(i64, usize), usize>,
}

impl BigradedDims {
    pub fn new(graded: bool) -> Self {
        BigradedDims {
            graded,
            dims: BTreeMap::new(),
        }
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn add(&mut self, q: i64, hom: usize, dim: usize) {
        if dim > 0 {
            *self.dims.entry((q, hom)).or_insert(0) += dim;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, usize), &usize)> {
        self.dims.iter()
    }

    pub fn dim_at(&self, q: i64, hom: usize) -> usize {
        self.dims.get(&(q, hom)).copied().unwrap_or(0)
    }

    pub fn hom_dim(&self, hom: usize) -> usize {
        self.dims
            .iter()
            .filter(|((_, h), _)| *h == hom)
            .map(|(_, d)| d)
            .sum()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Σ (−1)^i dim q^d.
    pub fn euler(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(q, hom), &d) in self.dims.iter() {
            let sign = if hom % 2 == 0 { 1 } else { -1 };
            out.add_term(q, rat(sign * d as i64));
        }
        out
    }
}

/// Evaluated Koszul complex. Chain group i has basis pairs (S, m) with
/// S a size-i subset of the u-generators (lexicographic) and m a tensor
/// multi-index; its q-shift is 2i+1−n. d_i: C_i → C_{i−1} contracts one
/// u_j against x_j − x_{j+1}, so homological degree 0 is the rightmost
/// (pure tensor) term.
pub struct CubeComplex {
    n: usize,
    dims: Vec<usize>,
    degrees: Option<Vec<Vec<i64>>>,
    /// diffs[i-1]: C_i → C_{i-1}
    diffs: Vec<Matrix<Rational>>,
    /// gens[k-1][i]: action of s_k on C_i; empty after projection
    gens: Vec<Vec<Matrix<Rational>>>,
}

impl CubeComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_chain_groups(&self) -> usize {
        self.dims.len()
    }

    pub fn chain_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn graded(&self) -> bool {
        self.degrees.is_some()
    }

    pub fn diff(&self, i: usize) -> &Matrix<Rational> {
        &self.diffs[i - 1]
    }

    fn has_gens(&self) -> bool {
        !self.gens.is_empty() || self.n == 1
    }

    /// Matrix of a permutation on chain group i, from the generator
    /// matrices via a reduced word.
    pub fn perm_action(&self, p: &Perm, i: usize) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.dims[i]);
        for k in p.reduced_word() {
            m = self.gens[k - 1][i].mul(&m);
        }
        m
    }

    /// Matrix of a group algebra element on chain group i.
    pub fn elem_action(&self, x: &GroupAlgElem, i: usize) -> Matrix<Rational> {
        let mut m = Matrix::zero(self.dims[i], self.dims[i]);
        for (p, c) in x.terms() {
            m = m.add(&self.perm_action(p, i).scale(c));
        }
        m
    }
}

/// Size-i subsets of {1..n-1} in lexicographic order, as sorted lists.
pub(crate) fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    if i == 0 {
        return vec![vec![]];
    }
    (1..n).combinations(i).collect()
}

/// s_k acting on the single generator u_j of the reflection
/// representation, as a list of (index, coefficient).
fn reflect_gen(k: usize, j: usize) -> Vec<(usize, i64)> {
    if j == k {
        vec![(k, -1)]
    } else if j + 1 == k {
        vec![(j, 1), (k, 1)]
    } else if j == k + 1 {
        vec![(k, 1), (j, 1)]
    } else {
        vec![(j, 1)]
    }
}

/// s_k acting on the wedge u_S, expanded over sorted subsets with
/// Koszul reordering signs.
pub(crate) fn exterior_action(k: usize, s: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut terms: Vec<(Vec<usize>, i64)> = vec![(vec![], 1)];
    for &j in s {
        let mut next = vec![];
        for (img, c) in reflect_gen(k, j) {
            'outer: for (word, wc) in &terms {
                // insertion sort with sign; repeated index kills the term
                let mut w = word.clone();
                let mut sign = 1i64;
                let mut pos = w.len();
                for (t, &existing) in w.iter().enumerate() {
                    if existing == img {
                        continue 'outer;
                    }
                    if existing > img {
                        pos = t;
                        break;
                    }
                }
                sign *= if (w.len() - pos) % 2 == 0 { 1 } else { -1 };
                w.insert(pos, img);
                next.push((w, c * wc * sign));
            }
        }
        terms = next;
    }
    // merge duplicates
    let mut merged: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (w, c) in terms {
        *merged.entry(w).or_insert(0) += c;
    }
    merged.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Evaluated Koszul cube on E^{⊗n}. Verifies d² = 0, S_n-equivariance
/// of every differential, and that d is q-degree 0 when E is graded.
pub fn build_cube(n: usize, e: &EvalObject) -> Result<CubeComplex> {
    assert!(n >= 1);
    let de = e.dim();
    let tensor_dim = de.checked_pow(n as u32).filter(|&t| t <= TENSOR_BUDGET);
    let Some(tensor_dim) = tensor_dim else {
        return Err(Error::BoundExceeded {
            what: "tensor dimension",
            value: de.pow(n.min(8) as u32),
            limit: TENSOR_BUDGET,
        });
    };
    let x = e.x_mat();
    let subs: Vec<Vec<Vec<usize>>> = (0..n).map(|i| subsets(n, i)).collect();
    let sub_rank: Vec<BTreeMap<Vec<usize>, usize>> = subs
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(r, s)| (s.clone(), r))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = subs.iter().map(|s| s.len() * tensor_dim).collect();
    let digit = |m: usize, t: usize| (m / de.pow(t as u32)) % de;
    let with_digit = |m: usize, t: usize, v: usize| {
        let base = de.pow(t as u32);
        m - digit(m, t) * base + v * base
    };

    // degrees
    let degrees = e.q_degrees().map(|qd| {
        (0..n)
            .map(|i| {
                let shift = 2 * i as i64 + 1 - n as i64;
                let mut out = vec![];
                for _ in 0..subs[i].len() {
                    for m in 0..tensor_dim {
                        let t_deg: i64 = (0..n).map(|t| qd[digit(m, t)]).sum();
                        out.push(t_deg + shift);
                    }
                }
                out
            })
            .collect::<Vec<_>>()
    });

    // differentials: d(u_S ⊗ v) = Σ_pos (−1)^pos u_{S∖j} ⊗ (x_j − x_{j+1})v
    let mut diffs = vec![];
    for i in 1..n {
        let mut d = Matrix::zero(dims[i - 1], dims[i]);
        for (sr, s) in subs[i].iter().enumerate() {
            for m in 0..tensor_dim {
                let col = sr * tensor_dim + m;
                for (pos, &j) in s.iter().enumerate() {
                    let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let tr = sub_rank[i - 1][&rest];
                    // x_j acts on tensor factor j-1, x_{j+1} on factor j
                    for (factor, fsign) in [(j - 1, 1i64), (j, -1)] {
                        let cur = digit(m, factor);
                        for r in 0..de {
                            let xe = x.get(r, cur);
                            if xe.is_zero() {
                                continue;
                            }
                            let row = tr * tensor_dim + with_digit(m, factor, r);
                            d.add_to(row, col, &(&sign * rat(fsign) * xe));
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }

    // generator actions: permute tensor factors and act on ∧•U
    let mut gens = vec![];
    for k in 1..n {
        let mut per_degree = vec![];
        for i in 0..n {
            let mut g = Matrix::zero(dims[i], dims[i]);
            for (sr, s) in subs[i].iter().enumerate() {
                let ext = exterior_action(k, s);
                for m in 0..tensor_dim {
                    let a = digit(m, k - 1);
                    let b = digit(m, k);
                    let pm = with_digit(with_digit(m, k - 1, b), k, a);
                    let col = sr * tensor_dim + m;
                    for (w, c) in &ext {
                        let row = sub_rank[i][w] * tensor_dim + pm;
                        g.add_to(row, col, &rat(*c));
                    }
                }
            }
            per_degree.push(g);
        }
        gens.push(per_degree);
    }

    // invariants
    for i in 2..n {
        if !diffs[i - 2].mul(&diffs[i - 1]).is_zero() {
            return Err(Error::Internal(format!("d² ≠ 0 at degree {}", i)));
        }
    }
    for (k, per_degree) in gens.iter().enumerate() {
        for i in 1..n {
            let lhs = diffs[i - 1].mul(&per_degree[i]);
            let rhs = per_degree[i - 1].mul(&diffs[i - 1]);
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "s_{} does not commute with d at degree {}",
                    k + 1,
                    i
                )));
            }
        }
    }
    if let Some(deg) = &degrees {
        for i in 1..n {
            let d = &diffs[i - 1];
            for r in 0..dims[i - 1] {
                for c in 0..dims[i] {
                    if !d.get(r, c).is_zero() && deg[i - 1][r] != deg[i][c] {
                        return Err(Error::Internal("differential is not q-degree 0".into()));
                    }
                }
            }
        }
    }

    Ok(CubeComplex {
        n,
        dims,
        degrees,
        diffs,
        gens,
    })
}

/// Subcomplex cut out by an idempotent of ℚ[S_n]: chain groups are the
/// images of its action, with the differential restricted exactly.
pub fn project(c: &CubeComplex, p: &GroupAlgElem) -> Result<CubeComplex> {
    assert_eq!(p.n(), c.n, "strand count mismatch");
    if !c.has_gens() {
        return Err(Error::Internal("cannot project an already-projected complex".into()));
    }
    if p.mul(p) != *p {
        return Err(Error::Internal("projection by a non-idempotent element".into()));
    }
    let n = c.n;
    let mut spaces = vec![];
    for i in 0..n {
        let m = c.elem_action(p, i);
        if m.mul(&m) != m {
            return Err(Error::Internal("idempotent action failed".into()));
        }
        spaces.push(m.column_space());
    }
    let dims: Vec<usize> = spaces.iter().map(|s| s.rank()).collect();
    let degrees = match &c.degrees {
        None => None,
        Some(deg) => {
            // echelon image vectors are homogeneous because the
            // projector is q-degree 0
            let mut out = vec![];
            for (i, cs) in spaces.iter().enumerate() {
                let mut ds = vec![];
                for (b, &piv) in cs.basis().iter().zip(cs.pivots()) {
                    let d = deg[i][piv];
                    for (r, v) in b.iter().enumerate() {
                        if !v.is_zero() && deg[i][r] != d {
                            return Err(Error::Internal(
                                "projected basis vector is not homogeneous".into(),
                            ));
                        }
                    }
                    ds.push(d);
                }
                out.push(ds);
            }
            Some(out)
        }
    };
    let mut diffs = vec![];
    for i in 1..n {
        let mut d = Matrix::zero(dims[i - 1], dims[i]);
        for (col, b) in spaces[i].basis().iter().enumerate() {
            let w = c.diffs[i - 1].mul_vec(b);
            let coords = spaces[i - 1].coords(&w).ok_or_else(|| {
                Error::Internal("differential does not preserve the projected subspace".into())
            })?;
            for (row, v) in coords.into_iter().enumerate() {
                d.set(row, col, v);
            }
        }
        diffs.push(d);
    }
    Ok(CubeComplex {
        n,
        dims,
        degrees,
        diffs,
        gens: vec![],
    })
}

/// Graded homology dimensions: blockwise by q-degree when graded,
/// total dimensions otherwise. Verifies that the Euler characteristic
/// matches the chain-level one.
pub fn homology(c: &CubeComplex) -> BigradedDims {
    let n = c.n;
    let mut out = BigradedDims::new(c.graded());
    match &c.degrees {
        None => {
            let ranks: Vec<usize> = c.diffs.iter().map(|d| d.rank()).collect();
            for i in 0..n {
                let rin = if i + 1 < n { ranks[i] } else { 0 };
                let rout = if i > 0 { ranks[i - 1] } else { 0 };
                out.add(0, i, c.dims[i] - rin - rout);
            }
        }
        Some(deg) => {
            let all_degs: std::collections::BTreeSet<i64> =
                deg.iter().flatten().copied().collect();
            for &d in &all_degs {
                let idx: Vec<Vec<usize>> = (0..n)
                    .map(|i| {
                        (0..c.dims[i])
                            .filter(|&b| deg[i][b] == d)
                            .collect::<Vec<usize>>()
                    })
                    .collect();
                let ranks: Vec<usize> = (1..n)
                    .map(|i| {
                        let sub = Matrix::from_fn(idx[i - 1].len(), idx[i].len(), |r, cc| {
                            c.diffs[i - 1].get(idx[i - 1][r], idx[i][cc]).clone()
                        });
                        sub.rank()
                    })
                    .collect();
                for i in 0..n {
                    let rin = if i + 1 < n { ranks[i] } else { 0 };
                    let rout = if i > 0 { ranks[i - 1] } else { 0 };
                    out.add(d, i, idx[i].len() - rin - rout);
                }
            }
        }
    }
    // Euler characteristic is preserved by taking homology
    let mut chain_euler = LaurentPoly::zero();
    match &c.degrees {
        None => {
            for (i, &d) in c.dims.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                chain_euler.add_term(0, rat(sign * d as i64));
            }
        }
        Some(deg) => {
            for (i, ds) in deg.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for &d in ds {
                    chain_euler.add_term(d, rat(sign));
                }
            }
        }
    }
    assert_eq!(out.euler(), chain_euler, "Euler characteristic not preserved");
    out
}

/// Homology of the p_ε-projected evaluated cube.
pub fn coxeter_cube_homology(eps: &SignSequence, e: &EvalObject) -> Result<BigradedDims> {
    let n = eps.strands();
    let cube = build_cube(n, e)?;
    let projectors = solomon_projectors(n)?;
    let p = projectors
        .into_iter()
        .find(|(s, _)| s == eps)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::Internal("missing projector".into()))?;
    Ok(homology(&project(&cube, &p)?))
}

/// Chain dimensions and homology of the e_λ-projected cube. Each chain
/// dimension is checked against the character-pairing prediction
/// ⟨χ(∧^iU ⊗ E^{⊗n}), χ_λ⟩ computed from traces of the S_n action.
pub fn schur_cube_dims(lam: &Partition, e: &EvalObject) -> Result<(Vec<usize>, BigradedDims)> {
    let n = lam.size();
    let cube = build_cube(n, e)?;
    let proj = project(&cube, &young_idempotent(lam)?)?;
    for i in 0..n {
        let mut expect = Rational::zero();
        for mu in Partition::all(n) {
            let tr = cube.perm_action(&Perm::from_cycle_type(&mu), i).trace();
            expect += tr * rat(character(lam, &mu)) / z_factor(&mu);
        }
        if expect != rat(proj.chain_dims()[i] as i64) {
            return Err(Error::Internal(format!(
                "chain dimension {} at degree {} disagrees with character pairing {}",
                proj.chain_dims()[i],
                i,
                expect
            )));
        }
    }
    let h = homology(&proj);
    Ok((proj.chain_dims().to_vec(), h))
}

/// Ungraded homology dimensions of the symmetric projection for X with
/// two nilpotent Jordan blocks, checked against
/// (k₁+k₂+(n−1)·min, (n−1)·min, 0, …).
pub fn jordan_pushforward_check(k1: usize, k2: usize, n: usize) -> Result<Vec<usize>> {
    let e = EvalObject::nilpotent(&[k1, k2]);
    let cube = build_cube(n, &e)?;
    let proj = project(&cube, &young_idempotent(&Partition::new(vec![n]))?)?;
    let h = homology(&proj);
    let dims: Vec<usize> = (0..n).map(|i| h.hom_dim(i)).collect();
    let m = k1.min(k2);
    let mut expect = vec![0; n];
    expect[0] = k1 + k2 + (n - 1) * m;
    if n > 1 {
        expect[1] = (n - 1) * m;
    }
    if dims != expect {
        return Err(Error::Internal(format!(
            "pushforward dims {:?} disagree with {:?}",
            dims, expect
        )));
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annular::coxeter_invariant_formula;

    #[test]
    fn single_strand_cube_is_the_balanced_string() {
        for size in 1..=4usize {
            let c = build_cube(1, &EvalObject::nilpotent(&[size])).unwrap();
            assert_eq!(c.chain_dims(), &[size]);
            let h = homology(&c);
            assert_eq!(h.total_dim(), size);
            for k in 0..size {
                assert_eq!(h.dim_at(2 * k as i64 - (size as i64 - 1), 0), 1);
            }
        }
    }

    #[test]
    fn exterior_action_on_generators() {
        assert_eq!(exterior_action(1, &[1]), vec![(vec![1], -1)]);
        assert_eq!(exterior_action(1, &[2]), vec![(vec![1], 1), (vec![2], 1)]);
        // s_1(u_1 ∧ u_2) = (−u_1) ∧ (u_1 + u_2) = −u_1 ∧ u_2
        assert_eq!(exterior_action(1, &[1, 2]), vec![(vec![1, 2], -1)]);
        assert_eq!(exterior_action(3, &[1]), vec![(vec![1], 1)]);
    }

    #[test]
    fn two_strands_zero_endomorphism() {
        let c = build_cube(2, &EvalObject::nilpotent(&[1])).unwrap();
        assert_eq!(c.chain_dims(), &[1, 1]);
        assert!(c.diff(1).is_zero());
        let h = homology(&c);
        assert_eq!(h.dim_at(-1, 0), 1);
        assert_eq!(h.dim_at(1, 1), 1);
    }

    #[test]
    fn two_strands_regular_block() {
        let c = build_cube(2, &EvalObject::nilpotent(&[2])).unwrap();
        assert_eq!(c.chain_dims(), &[4, 4]);
        assert_eq!(c.diff(1).rank(), 2);
        let h = homology(&c);
        assert_eq!(h.hom_dim(0), 2);
        assert_eq!(h.hom_dim(1), 2);
    }

    #[test]
    fn tensor_budget_is_enforced() {
        let e = EvalObject::nilpotent(&[8]);
        assert!(matches!(
            build_cube(5, &e),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn project_rejects_non_idempotents() {
        let c = build_cube(2, &EvalObject::nilpotent(&[1])).unwrap();
        let s = GroupAlgElem::single(Perm::transposition(2, 1), rat(1));
        assert!(project(&c, &s).is_err());
    }

    #[test]
    fn isotypic_chain_dimensions_sum_to_the_whole() {
        for (n, sizes) in [(2usize, vec![2usize]), (3, vec![2]), (4, vec![1, 1])] {
            let e = EvalObject::nilpotent(&sizes);
            let cube = build_cube(n, &e).unwrap();
            let mut total = vec![0usize; n];
            for lam in Partition::all(n) {
                let (dims, _) = schur_cube_dims(&lam, &e).unwrap();
                let f = lam.num_standard_tableaux();
                for i in 0..n {
                    total[i] += f * dims[i];
                }
            }
            assert_eq!(total, cube.chain_dims());
        }
    }

    #[test]
    fn schur_projections_small() {
        // sign on two strands: ∧²E, then sign ⊗ E^{⊗2} trivial part = Sym²E
        let (dims, _) =
            schur_cube_dims(&Partition::new(vec![1, 1]), &EvalObject::nilpotent(&[2])).unwrap();
        assert_eq!(dims, vec![1, 3]);
        // trivial on three strands over a regular block
        let (dims, h) =
            schur_cube_dims(&Partition::new(vec![3]), &EvalObject::nilpotent(&[2])).unwrap();
        assert_eq!(dims, vec![4, 2, 0]);
        assert!(h.total_dim() >= 2);
    }

    #[test]
    fn jordan_pushforwards() {
        assert_eq!(jordan_pushforward_check(1, 1, 2).unwrap(), vec![3, 1]);
        assert_eq!(jordan_pushforward_check(2, 1, 2).unwrap(), vec![4, 1]);
        assert_eq!(jordan_pushforward_check(2, 2, 3).unwrap(), vec![8, 4, 0]);
        jordan_pushforward_check(3, 1, 3).unwrap();
    }

    #[test]
    fn coxeter_homology_euler_matches_the_formula_invariant() {
        for n in 2..=3usize {
            for eps in SignSequence::all(n) {
                for n_color in 1..=3u32 {
                    let e = EvalObject::nilpotent(&[n_color as usize]);
                    let h = coxeter_cube_homology(&eps, &e).unwrap();
                    let sign = if eps.num_plus() % 2 == 0 { 1 } else { -1 };
                    let inv = coxeter_invariant_formula(&eps)
                        .unwrap()
                        .principal_spec(n_color)
                        .unwrap()
                        .scale(&rat(sign));
                    assert_eq!(h.euler(), inv, "ε = {:?}, colors = {}", eps, n_color);
                    if eps.num_plus() == 0 || eps.num_plus() == eps.len() {
                        // extreme sequences have homology of total dimension N
                        assert_eq!(h.total_dim(), n_color as usize, "ε = {:?}", eps);
                    }
                }
            }
        }
        // four-strand spot check
        let eps = SignSequence::new(vec![1, 1, -1]);
        let h = coxeter_cube_homology(&eps, &EvalObject::nilpotent(&[2])).unwrap();
        let sign = rat(1);
        let inv = coxeter_invariant_formula(&eps)
            .unwrap()
            .principal_spec(2)
            .unwrap()
            .scale(&sign);
        assert_eq!(h.euler(), inv);
    }
}
