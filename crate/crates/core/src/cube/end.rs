//! Endomorphism complexes of the Koszul cube over the polynomial base.
//!
//! A morphism of homological degree h = j − i is a twisted R-linear map
//! f: ∧^iU⊗R → ∧^jU⊗R with f(r·v) = σ(r)·f(v) for a permutation σ of
//! the variables. Basis elements are tuples (σ, i, ω_i ↦ ω_j·x^α); the
//! q-degree 2|α| + 2(j−i) is preserved by the differential
//! D(f) = d∘f − (−1)^h f∘d, so each q-slice is a finite exact complex
//! and no truncation error enters below the reported window edge.

use super::{exterior_action, subsets, BigradedDims};
use crate::exact::{rat, ColumnSpace, Matrix, Rational};
use crate::groupalg::{young_idempotent, GroupAlgElem, PermIndex};
use crate::shapes::Partition;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::HashMap;

/// Largest strand count for Hom-complex computations.
pub const END_STRAND_BOUND: usize = 3;
/// Largest q-degree window.
pub const END_QCUTOFF_BOUND: i64 = 8;
/// A class is trusted only this far below the window edge.
pub const WINDOW_MARGIN: i64 = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EndMode {
    /// End(Cube_n): expected ∧(ε_1..ε_{n−1}) ⊗ ℂ[x] ⋊ ℂ[S_n] with ε_i at
    /// (hom −1, q −2) and x at (0, 2).
    Full,
    /// End of the symmetric summand: expected ℂ[x] in degree (0, even
    /// q ≥ 0). The candidate odd classes ξ_i = Σ_j ε_j·∂p_{i+1}/∂(x_j−x_{j+1})
    /// are invariant cycles but bound: each coefficient vanishes on the
    /// diagonal, so ξ_i = D(Σ_{jk} c_{jk} h_k ε_j) for an invariant choice
    /// of c_{jk} (for i = 1, explicitly D(Σ_j h_j ε_j) = ξ_1). Equivalently,
    /// (∧•U_n)^{S_n} = ℂ forces e·H(End Cube_n)·e = ℂ[x]·e.
    Symmetric,
}

/// Basis element (σ, i, ω_i, ω_j, x^α) of the degree-(h, q) morphism
/// slice, with j = i + h and 2|α| + 2h = q.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Elt {
    sigma: usize,
    i: usize,
    wi: usize,
    wj: usize,
    alpha: Vec<u8>,
}

struct Block {
    elems: Vec<Elt>,
    index: HashMap<Elt, usize>,
}

impl Block {
    fn dim(&self) -> usize {
        self.elems.len()
    }
}

fn monomials(n: usize, deg: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = vec![];
    for first in 0..=deg {
        for rest in monomials(n - 1, deg - first) {
            let mut m = vec![first as u8];
            m.extend(rest);
            out.push(m);
        }
    }
    out
}

/// Shared tables for one Hom-complex computation.
struct EndCtx {
    n: usize,
    idx: PermIndex,
    /// subsets[i]: basis of ∧^iU
    subs: Vec<Vec<Vec<usize>>>,
    sub_rank: Vec<HashMap<Vec<usize>, usize>>,
    /// ext[g][i]: exterior action of permutation g on ∧^iU
    ext: Vec<Vec<Matrix<Rational>>>,
}

impl EndCtx {
    fn new(n: usize) -> Self {
        let idx = PermIndex::new(n);
        let subs: Vec<Vec<Vec<usize>>> = (0..n).map(|i| subsets(n, i)).collect();
        let sub_rank: Vec<HashMap<Vec<usize>, usize>> = subs
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(r, s)| (s.clone(), r))
                    .collect()
            })
            .collect();
        // generator matrices on each ∧^iU, then words
        let gen_mats: Vec<Vec<Matrix<Rational>>> = (1..n)
            .map(|k| {
                subs.iter()
                    .map(|list| {
                        let mut m = Matrix::zero(list.len(), list.len());
                        for (col, s) in list.iter().enumerate() {
                            for (w, c) in exterior_action(k, s) {
                                let row = sub_rank[s.len()][&w];
                                m.add_to(row, col, &rat(c));
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let ext: Vec<Vec<Matrix<Rational>>> = (0..idx.len())
            .map(|g| {
                let word = idx.perm(g).reduced_word();
                (0..n)
                    .map(|i| {
                        let mut m = Matrix::identity(subs[i].len());
                        for &k in &word {
                            m = gen_mats[k - 1][i].mul(&m);
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        EndCtx {
            n,
            idx,
            subs,
            sub_rank,
            ext,
        }
    }

    fn block(&self, h: i64, q: i64) -> Block {
        let mut elems = vec![];
        if q % 2 == 0 && q >= 2 * h {
            let deg = ((q - 2 * h) / 2) as usize;
            for alpha in monomials(self.n, deg) {
                for sigma in 0..self.idx.len() {
                    for i in 0..self.n {
                        let j = i as i64 + h;
                        if j < 0 || j >= self.n as i64 {
                            continue;
                        }
                        for wi in 0..self.subs[i].len() {
                            for wj in 0..self.subs[j as usize].len() {
                                elems.push(Elt {
                                    sigma,
                                    i,
                                    wi,
                                    wj,
                                    alpha: alpha.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        let index = elems
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        Block { elems, index }
    }

    /// D(f) = d∘f − (−1)^h f∘d as a vector in the (h−1, q) block.
    fn apply_d(&self, h: i64, f: &Elt, target: &Block) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); target.dim()];
        let mut add = |e: Elt, c: Rational| {
            let k = target.index[&e];
            out[k] += c;
        };
        let j = (f.i as i64 + h) as usize;
        // d ∘ f: contract the target wedge, multiply by x_ℓ − x_{ℓ+1}
        if j >= 1 {
            let s = &self.subs[j][f.wj];
            for (pos, &l) in s.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let mut rest = s.clone();
                rest.remove(pos);
                let wj_new = self.sub_rank[j - 1][&rest];
                for (var, vs) in [(l - 1, 1i64), (l, -1)] {
                    let mut alpha = f.alpha.clone();
                    alpha[var] += 1;
                    add(
                        Elt {
                            sigma: f.sigma,
                            i: f.i,
                            wi: f.wi,
                            wj: wj_new,
                            alpha,
                        },
                        rat(sign * vs),
                    );
                }
            }
        }
        // f ∘ d: precompose, twisting the multiplier by σ
        if f.i + 1 < self.n {
            let outer_sign = if h.rem_euclid(2) == 0 { -1 } else { 1 };
            let sigma = self.idx.perm(f.sigma);
            for (wsrc, s) in self.subs[f.i + 1].iter().enumerate() {
                for (pos, &l) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    if self.sub_rank[f.i][&rest] != f.wi {
                        continue;
                    }
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    for (var, vs) in [(l - 1, 1i64), (l, -1)] {
                        let mut alpha = f.alpha.clone();
                        alpha[sigma.apply(var)] += 1;
                        add(
                            Elt {
                                sigma: f.sigma,
                                i: f.i + 1,
                                wi: wsrc,
                                wj: f.wj,
                                alpha,
                            },
                            rat(outer_sign * sign * vs),
                        );
                    }
                }
            }
        }
        out
    }

    /// ρ(a) ∘ f ∘ ρ(b) as a vector in f's own block.
    fn sandwich(&self, a: &GroupAlgElem, b: &GroupAlgElem, h: i64, f: &Elt, block: &Block) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); block.dim()];
        let j = (f.i as i64 + h) as usize;
        for (tau, ca) in a.terms() {
            let ti = self.idx.index(tau);
            // permute the monomial variables by τ
            let mut alpha = vec![0u8; self.n];
            for (t, &e) in f.alpha.iter().enumerate() {
                alpha[tau.apply(t)] = e;
            }
            for (taup, cb) in b.terms() {
                let tpi = self.idx.index(taup);
                let sigma_new = self
                    .idx
                    .index(&tau.compose(self.idx.perm(f.sigma)).compose(taup));
                let c0 = ca * cb;
                for wi_new in 0..self.subs[f.i].len() {
                    let e1 = self.ext[tpi][f.i].get(f.wi, wi_new);
                    if e1.is_zero() {
                        continue;
                    }
                    for wj_new in 0..self.subs[j].len() {
                        let e2 = self.ext[ti][j].get(wj_new, f.wj);
                        if e2.is_zero() {
                            continue;
                        }
                        let k = block.index[&Elt {
                            sigma: sigma_new,
                            i: f.i,
                            wi: wi_new,
                            wj: wj_new,
                            alpha: alpha.clone(),
                        }];
                        out[k] += &c0 * e1 * e2;
                    }
                }
            }
        }
        out
    }

    /// Rank of D: (h, q)-block → (h−1, q)-block, split by the preserved
    /// σ-component to keep eliminations small.
    fn rank_d(&self, h: i64, q: i64) -> usize {
        let src = self.block(h, q);
        let tgt = self.block(h - 1, q);
        if src.dim() == 0 || tgt.dim() == 0 {
            return 0;
        }
        let mut rank = 0;
        for sigma in 0..self.idx.len() {
            let tgt_pos: Vec<usize> = (0..tgt.dim())
                .filter(|&k| tgt.elems[k].sigma == sigma)
                .collect();
            let remap: HashMap<usize, usize> = tgt_pos
                .iter()
                .enumerate()
                .map(|(a, &b)| (b, a))
                .collect();
            let mut cs = ColumnSpace::new(tgt_pos.len());
            for f in src.elems.iter().filter(|f| f.sigma == sigma) {
                let full = self.apply_d(h, f, &tgt);
                let mut v = vec![Rational::zero(); tgt_pos.len()];
                for (k, val) in full.into_iter().enumerate() {
                    if !val.is_zero() {
                        v[remap[&k]] = val;
                    }
                }
                cs.insert(v);
            }
            rank += cs.rank();
        }
        rank
    }

    /// Homology dimension at (h, q) of the sandwiched subcomplex
    /// ρ(a)∘Hom∘ρ(b); `None` for the full complex.
    fn projected_homology(
        &self,
        proj: Option<(&GroupAlgElem, &GroupAlgElem)>,
        h: i64,
        q: i64,
    ) -> usize {
        let Some((a, b)) = proj else {
            let blk = self.block(h, q);
            return blk.dim() - self.rank_d(h, q) - self.rank_d(h + 1, q);
        };
        let image = |hh: i64| {
            let blk = self.block(hh, q);
            let mut cs = ColumnSpace::new(blk.dim());
            for f in &blk.elems {
                cs.insert(self.sandwich(a, b, hh, f, &blk));
            }
            (blk, cs)
        };
        let (blk, cs) = image(h);
        let (tgt, tgt_cs) = image(h - 1);
        let (src, src_cs) = image(h + 1);
        let restricted_rank = |from: &Block,
                               from_cs: &ColumnSpace<Rational>,
                               hh: i64,
                               to: &Block,
                               to_cs: &ColumnSpace<Rational>| {
            let mut rank_cs = ColumnSpace::new(to_cs.rank());
            for v in from_cs.basis() {
                let mut w = vec![Rational::zero(); to_cs.dim()];
                for (k, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, val) in self.apply_d(hh, &from.elems[k], to).into_iter().enumerate() {
                        if !val.is_zero() {
                            w[t] += c * val;
                        }
                    }
                }
                let coords = to_cs
                    .coords(&w)
                    .expect("differential must preserve the sandwiched subcomplex");
                rank_cs.insert(coords);
            }
            rank_cs.rank()
        };
        let r_out = restricted_rank(&blk, &cs, h, &tgt, &tgt_cs);
        let r_in = restricted_rank(&src, &src_cs, h + 1, &blk, &cs);
        cs.rank() - r_out - r_in
    }
}

fn check_bounds(n: usize, qcutoff: i64) -> Result<()> {
    if n == 0 || n > END_STRAND_BOUND {
        return Err(Error::BoundExceeded {
            what: "hom-complex strand count",
            value: n,
            limit: END_STRAND_BOUND,
        });
    }
    if qcutoff > END_QCUTOFF_BOUND {
        return Err(Error::BoundExceeded {
            what: "hom-complex q-cutoff",
            value: qcutoff as usize,
            limit: END_QCUTOFF_BOUND as usize,
        });
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Truncated graded dimensions of the Hom-complex homology of the cube
/// (mode Full) or of its symmetric summand (mode Symmetric), verified
/// against the Hilbert series of the expected algebra on every trusted
/// (hom, q) slot.
pub fn end_complex_dims(n: usize, mode: EndMode, qcutoff: i64) -> Result<BigradedDims> {
    check_bounds(n, qcutoff)?;
    let trusted = qcutoff - WINDOW_MARGIN;
    // the polynomial generator x at q-degree 2 must be visible
    let needed = 2i64;
    if trusted < needed.max(0) {
        return Err(Error::BoundExceeded {
            what: "hom-complex truncation window",
            value: qcutoff as usize,
            limit: (needed.max(0) + WINDOW_MARGIN) as usize,
        });
    }
    let ctx = EndCtx::new(n);
    let sym = match mode {
        EndMode::Full => None,
        EndMode::Symmetric => Some(young_idempotent(&Partition::new(vec![n]))?),
    };
    let nfact: usize = (1..=n).product();
    let mut out = BigradedDims::new(true);
    for h in -(n as i64 - 1)..=(n as i64 - 1) {
        let mut q = 2 * h.min(0);
        while q <= trusted {
            let dim = ctx.projected_homology(sym.as_ref().map(|e| (e, e)), h, q);
            let expect = match mode {
                EndMode::Full => {
                    if h <= 0 && q >= 2 * h {
                        nfact * binom(n - 1, (-h) as usize)
                    } else {
                        0
                    }
                }
                EndMode::Symmetric => usize::from(h == 0 && q >= 0),
            };
            if dim != expect {
                return Err(Error::Internal(format!(
                    "hom-complex homology dim {} at (hom {}, q {}) disagrees with Hilbert series value {}",
                    dim, h, q, expect
                )));
            }
            // hom index stored with offset n−1 so the key stays unsigned
            out.add(q, (h + n as i64 - 1) as usize, dim);
            q += 2;
        }
    }
    Ok(out)
}

/// Whether the truncated graded dimensions of Hom(Cube^λ, Cube^μ) in the
/// homotopy category lie in δ_{λμ} + q²ℕ[q] within the trusted window.
pub fn hom_schur_positivity(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    qcutoff: i64,
) -> Result<bool> {
    check_bounds(n, qcutoff)?;
    assert_eq!(lam.size(), n);
    assert_eq!(mu.size(), n);
    let trusted = qcutoff - WINDOW_MARGIN;
    if trusted < 2 {
        return Err(Error::BoundExceeded {
            what: "hom-complex truncation window",
            value: qcutoff as usize,
            limit: (2 + WINDOW_MARGIN) as usize,
        });
    }
    let ctx = EndCtx::new(n);
    let left = young_idempotent(mu)?;
    let right = young_idempotent(lam)?;
    let mut q = -2 * (n as i64 - 1);
    while q <= trusted {
        let dim = ctx.projected_homology(Some((&left, &right)), 0, q);
        let ok = match q.cmp(&0) {
            std::cmp::Ordering::Less => dim == 0,
            std::cmp::Ordering::Equal => dim == usize::from(lam == mu),
            std::cmp::Ordering::Greater => true,
        };
        if !ok {
            return Ok(false);
        }
        q += 2;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differential_squares_to_zero() {
        for n in 2..=3usize {
            let ctx = EndCtx::new(n);
            for h in -(n as i64 - 1) + 2..=(n as i64 - 1) {
                for q in [0, 2, 4] {
                    let src = ctx.block(h, q);
                    let mid = ctx.block(h - 1, q);
                    let tgt = ctx.block(h - 2, q);
                    for f in &src.elems {
                        let v = ctx.apply_d(h, f, &mid);
                        let mut w = vec![Rational::zero(); tgt.dim()];
                        for (k, c) in v.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (t, val) in
                                ctx.apply_d(h - 1, &mid.elems[k], &tgt).into_iter().enumerate()
                            {
                                w[t] += c * val;
                            }
                        }
                        assert!(w.iter().all(|c| c.is_zero()), "D² ≠ 0 at (h {}, q {})", h, q);
                    }
                }
            }
        }
    }

    #[test]
    fn full_endomorphism_hilbert_series() {
        // dimensions are verified against the Hilbert series internally
        for n in 1..=3usize {
            let dims = end_complex_dims(n, EndMode::Full, 6).unwrap();
            let nfact: usize = (1..=n).product();
            assert_eq!(dims.dim_at(0, n - 1), nfact);
            if n > 1 {
                assert_eq!(dims.dim_at(-2, n - 2), nfact * (n - 1));
            }
        }
    }

    #[test]
    fn symmetric_summand_hilbert_series() {
        for n in 1..=3usize {
            let dims = end_complex_dims(n, EndMode::Symmetric, 6).unwrap();
            assert_eq!(dims.dim_at(0, n - 1), 1);
            assert_eq!(dims.dim_at(-2, n - 1), 0);
        }
    }

    #[test]
    fn truncation_window_must_see_the_generators() {
        assert!(matches!(
            end_complex_dims(3, EndMode::Symmetric, 3),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            end_complex_dims(4, EndMode::Full, 6),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            end_complex_dims(2, EndMode::Full, 10),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn schur_summands_pair_orthogonally() {
        for n in 2..=3usize {
            let lams = Partition::all(n);
            for a in &lams {
                for b in &lams {
                    assert!(
                        hom_schur_positivity(a, b, n, 6).unwrap(),
                        "failed at λ = {:?}, μ = {:?}",
                        a,
                        b
                    );
                }
            }
        }
    }
}
