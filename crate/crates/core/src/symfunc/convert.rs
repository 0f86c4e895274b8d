//! Basis-conversion machinery on the Schur side: Pieri rules, border
//! strips via beta-sets, Jacobi-Trudi determinants, Kostka matrices,
//! and Murnaghan-Nakayama characters. All caches are process-global
//! and internally synchronized.

use crate::exact::{rat, Rational};
use crate::shapes::Partition;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// Integer linear combination of partitions (one fixed basis).
pub type IntMap = BTreeMap<Partition, i64>;

/// Partitions λ ⊇ μ with λ/μ a horizontal strip of k cells.
pub fn add_horizontal_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    // row i (0-indexed) gets λ_i with μ_i ≤ λ_i ≤ μ_{i-1} (λ_0 unbounded)
    let rows = mu.len() + 1;
    let mut out = vec![];
    fn rec(mu: &Partition, row: usize, rows: usize, left: usize, prev: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(acc.iter().copied().filter(|&p| p > 0).collect()));
            }
            return;
        }
        let lo = mu.part(row);
        let hi = if row == 0 { lo + left } else { mu.part(row - 1).min(prev) };
        for v in lo..=hi.min(lo + left) {
            if v > prev {
                continue;
            }
            acc.push(v);
            rec(mu, row + 1, rows, left - (v - lo), v, acc, out);
            acc.pop();
        }
    }
    rec(mu, 0, rows, k, usize::MAX, &mut vec![], &mut out);
    out
}

/// Partitions λ ⊇ μ with λ/μ a vertical strip of k cells.
pub fn add_vertical_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    add_horizontal_strips(&mu.conjugate(), k)
        .into_iter()
        .map(|l| l.conjugate())
        .collect()
}

/// Beta-set of μ padded to `len` rows: strictly decreasing.
fn beta_set(mu: &Partition, len: usize) -> Vec<i64> {
    (0..len)
        .map(|j| mu.part(j) as i64 + (len - 1 - j) as i64)
        .collect()
}

fn partition_from_beta(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::new(
        beta.iter()
            .enumerate()
            .map(|(j, &b)| (b - (len - 1 - j) as i64) as usize)
            .filter(|&p| p > 0)
            .collect(),
    )
}

/// All (λ, height) with λ/μ a border strip of k cells.
pub fn add_border_strips(mu: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = mu.len() + k;
    let beta = beta_set(mu, len);
    let mut out = vec![];
    for (i, &b) in beta.iter().enumerate() {
        let target = b + k as i64;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b && c < target).count();
        let mut nb = beta.clone();
        nb[i] = target;
        out.push((partition_from_beta(nb), height));
    }
    out
}

/// All (μ, height) with λ/μ a border strip of k cells.
pub fn remove_border_strips(lam: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = lam.len().max(1);
    let beta = beta_set(lam, len);
    let mut out = vec![];
    for (i, &b) in beta.iter().enumerate() {
        let target = b - k as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        out.push((partition_from_beta(nb), height));
    }
    out
}

/// s_μ · h_k in the Schur basis.
pub fn pieri_h(f: &IntMap, k: usize) -> IntMap {
    let mut out = IntMap::new();
    for (mu, &c) in f {
        for lam in add_horizontal_strips(mu, k) {
            *out.entry(lam).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// s_μ · e_k in the Schur basis.
pub fn pieri_e(f: &IntMap, k: usize) -> IntMap {
    let mut out = IntMap::new();
    for (mu, &c) in f {
        for lam in add_vertical_strips(mu, k) {
            *out.entry(lam).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// s_μ · p_k in the Schur basis (Murnaghan-Nakayama expansion).
pub fn mn_p(f: &IntMap, k: usize) -> IntMap {
    let mut out = IntMap::new();
    for (mu, &c) in f {
        for (lam, height) in add_border_strips(mu, k) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            *out.entry(lam).or_insert(0) += c * sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Signed h-products in the Jacobi-Trudi determinant of s_{λ/μ}:
/// det(h_{λ_i - μ_j - i + j}), returned as multiset-of-parts → coefficient.
pub fn jacobi_trudi_h_terms(lam: &Partition, mu: &Partition) -> IntMap {
    let n = lam.len();
    let mut out = IntMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_terms(&mut perm, 0, &mut |perm, sign| {
        let mut parts: Vec<usize> = vec![];
        for (i, &j) in perm.iter().enumerate() {
            let d = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            if d < 0 {
                return;
            }
            if d > 0 {
                parts.push(d as usize);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let e = out.entry(Partition::new(parts)).or_insert(0);
        *e += sign;
    });
    out.retain(|_, c| *c != 0);
    out
}

fn permute_terms(perm: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize], i64)) {
    let n = perm.len();
    if i == n {
        // sign from inversion count
        let inv = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        visit(perm, if inv % 2 == 0 { 1 } else { -1 });
        return;
    }
    for j in i..n {
        perm.swap(i, j);
        permute_terms(perm, i + 1, visit);
        perm.swap(i, j);
    }
}

/// s_{λ/μ} in the Schur basis, via Jacobi-Trudi + iterated Pieri.
pub fn skew_schur_s(lam: &Partition, mu: &Partition) -> IntMap {
    let mut out = IntMap::new();
    for (hparts, c) in jacobi_trudi_h_terms(lam, mu) {
        let mut acc = IntMap::from([(Partition::empty(), 1i64)]);
        for &k in hparts.parts() {
            acc = pieri_h(&acc, k);
        }
        for (key, v) in acc {
            *out.entry(key).or_insert(0) += c * v;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

static CHAR_CACHE: Lazy<Mutex<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Irreducible character value χ^λ(μ) by Murnaghan-Nakayama.
pub fn character(lam: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lam.size(), mu.size());
    if lam.is_empty() {
        return 1;
    }
    let key = (lam.clone(), mu.clone());
    if let Some(&v) = CHAR_CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let k = mu.part(0);
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let mut total = 0;
    for (nu, height) in remove_border_strips(lam, k) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&nu, &rest);
    }
    CHAR_CACHE.lock().unwrap().insert(key, total);
    total
}

/// z_μ = ∏ k^{m_k} · m_k!
pub fn z_factor(mu: &Partition) -> Rational {
    let mut z = rat(1);
    let mut run = 0i64;
    let mut prev = 0usize;
    for &p in mu.parts() {
        if p == prev {
            run += 1;
        } else {
            prev = p;
            run = 1;
        }
        z *= rat(p as i64) * rat(run);
    }
    z
}

static KOSTKA_CACHE: Lazy<Mutex<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Kostka number K_{λμ}: chains of horizontal strips of sizes μ_i
/// ending at λ.
pub fn kostka(lam: &Partition, mu: &Partition) -> i64 {
    fn rec(lam: &Partition, mu_parts: &[usize]) -> i64 {
        if mu_parts.is_empty() {
            return if lam.is_empty() { 1 } else { 0 };
        }
        let key = (lam.clone(), Partition::new({
            let mut v = mu_parts.to_vec();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        }));
        // content order within a chain is fixed, so cache on the sorted
        // key only when the remaining parts are already sorted
        let sorted = mu_parts.windows(2).all(|w| w[0] >= w[1]);
        if sorted {
            if let Some(&v) = KOSTKA_CACHE.lock().unwrap().get(&key) {
                return v;
            }
        }
        let (&last, head) = mu_parts.split_last().unwrap();
        // strip of size `last` was added last
        let mut total = 0;
        for nu in shrink_horizontal_strips(lam, last) {
            total += rec(&nu, head);
        }
        if sorted {
            KOSTKA_CACHE.lock().unwrap().insert(key, total);
        }
        total
    }
    if lam.size() != mu.size() {
        return 0;
    }
    rec(lam, mu.parts())
}

/// Partitions ν ⊆ λ with λ/ν a horizontal strip of k cells.
fn shrink_horizontal_strips(lam: &Partition, k: usize) -> Vec<Partition> {
    // ν_i with λ_{i+1} ≤ ν_i ≤ λ_i and Σ(λ_i - ν_i) = k
    let rows = lam.len();
    let mut out = vec![];
    fn rec(lam: &Partition, row: usize, rows: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(acc.iter().copied().filter(|&p| p > 0).collect()));
            }
            return;
        }
        let hi = lam.part(row);
        let lo = lam.part(row + 1);
        for v in lo..=hi {
            let removed = hi - v;
            if removed > left {
                continue;
            }
            acc.push(v);
            rec(lam, row + 1, rows, left - removed, acc, out);
            acc.pop();
        }
    }
    rec(lam, 0, rows, k, &mut vec![], &mut out);
    out
}

type DegreeTable = (Vec<Partition>, Vec<Vec<Rational>>);
static M_TO_S_CACHE: Lazy<Mutex<HashMap<usize, DegreeTable>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// m_μ in the Schur basis: row μ of the inverse Kostka matrix.
pub fn monomial_to_s(mu: &Partition) -> BTreeMap<Partition, Rational> {
    let n = mu.size();
    let mut cache = M_TO_S_CACHE.lock().unwrap();
    let (parts, inv) = cache.entry(n).or_insert_with(|| {
        let parts = Partition::all(n);
        let d = parts.len();
        // s_λ = Σ_μ K_{λμ} m_μ  ⇒  m = K^{-1} s
        let k = crate::exact::Matrix::from_fn(d, d, |i, j| rat(kostka(&parts[i], &parts[j])));
        let kinv = k.inverse().expect("Kostka matrix is unitriangular");
        // rows[μ][λ] = coefficient of s_λ in m_μ, the μ-row of K^{-1}
        let rows = (0..d)
            .map(|i| (0..d).map(|j| kinv.get(i, j).clone()).collect())
            .collect();
        (parts, rows)
    });
    let mi = parts.iter().position(|p| p == mu).unwrap();
    parts
        .iter()
        .zip(inv[mi].iter())
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect()
}

static LR_CACHE: Lazy<Mutex<HashMap<(Partition, Partition), IntMap>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// s_λ · s_μ in the Schur basis (Littlewood-Richardson coefficients),
/// computed by expanding s_μ in h's and applying Pieri from s_λ.
pub fn lr_product(lam: &Partition, mu: &Partition) -> IntMap {
    let (a, b) = if (lam.size(), lam) <= (mu.size(), mu) {
        (lam, mu)
    } else {
        (mu, lam)
    };
    // expand the smaller factor
    let (big, small) = (b, a);
    let key = (big.clone(), small.clone());
    if let Some(v) = LR_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = IntMap::new();
    for (hparts, c) in jacobi_trudi_h_terms(small, &Partition::empty()) {
        let mut acc = IntMap::from([(big.clone(), 1i64)]);
        for &k in hparts.parts() {
            acc = pieri_h(&acc, k);
        }
        for (keyp, v) in acc {
            *out.entry(keyp).or_insert(0) += c * v;
        }
    }
    out.retain(|_, c| *c != 0);
    LR_CACHE.lock().unwrap().insert(key, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pieri_basics() {
        let s1 = IntMap::from([(p(&[1]), 1)]);
        let sq = pieri_h(&s1, 1);
        assert_eq!(sq, IntMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        let s21 = IntMap::from([(p(&[2, 1]), 1)]);
        assert_eq!(
            pieri_h(&s21, 1),
            IntMap::from([(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)])
        );
    }

    #[test]
    fn mn_expansions() {
        // p_2 = s_2 - s_11
        let one = IntMap::from([(Partition::empty(), 1)]);
        assert_eq!(mn_p(&one, 2), IntMap::from([(p(&[2]), 1), (p(&[1, 1]), -1)]));
        // p_n = Σ_k (-1)^k s_{k+1,1^{n-k-1}}
        for n in 1..=6 {
            let pn = mn_p(&one, n);
            let expected: IntMap = (0..n)
                .map(|k| {
                    let mut parts = vec![n - k];
                    parts.extend(std::iter::repeat(1).take(k));
                    (p(&parts), if k % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            assert_eq!(pn, expected);
        }
    }

    #[test]
    fn characters_match_known_table() {
        // S_3 character table
        assert_eq!(character(&p(&[3]), &p(&[1, 1, 1])), 1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        // column orthogonality at n=4, classes (2,1,1) vs itself: Σ χ² = z
        let z = z_factor(&p(&[2, 1, 1]));
        let sum: i64 = Partition::all(4)
            .iter()
            .map(|l| character(l, &p(&[2, 1, 1])).pow(2))
            .sum();
        assert_eq!(rat(sum), z);
    }

    #[test]
    fn skew_schur_examples() {
        // s_{22/1} = s_21
        assert_eq!(
            skew_schur_s(&p(&[2, 2]), &p(&[1])),
            IntMap::from([(p(&[2, 1]), 1)])
        );
        // s_{λ/∅} = s_λ
        assert_eq!(
            skew_schur_s(&p(&[3, 1]), &Partition::empty()),
            IntMap::from([(p(&[3, 1]), 1)])
        );
    }

    #[test]
    fn lr_small() {
        assert_eq!(
            lr_product(&p(&[1]), &p(&[2, 1])),
            IntMap::from([(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)])
        );
        // s_21 · s_21 contains s_{42} with multiplicity 1 and s_{321} with 2
        let sq = lr_product(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(sq.get(&p(&[4, 2])), Some(&1));
        assert_eq!(sq.get(&p(&[3, 2, 1])), Some(&2));
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(kostka(&p(&[3]), &p(&[1, 1, 1])), 1);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])), 0);
    }

    #[test]
    fn monomial_inverse_roundtrip() {
        // m_11 = s_11, m_2 = s_2 - s_11
        let m2 = monomial_to_s(&p(&[2]));
        assert_eq!(m2.get(&p(&[2])), Some(&rat(1)));
        assert_eq!(m2.get(&p(&[1, 1])), Some(&rat(-1)));
        let m11 = monomial_to_s(&p(&[1, 1]));
        assert_eq!(m11.get(&p(&[1, 1])), Some(&rat(1)));
        assert_eq!(m11.len(), 1);
    }
}
