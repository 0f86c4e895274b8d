//! Partitions, compositions, sign sequences, skew/ribbon shapes, and
//! standard Young tableaux.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on |λ| for tableau enumeration.
pub const DEFAULT_SIZE_BOUND: usize = 8;

/// Weakly decreasing sequence of positive integers. The empty
/// partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "not a partition: {:?}",
            parts
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let rows = self.part(0);
        Partition((0..rows).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| self.part(i) >= inner.part(i))
    }

    /// Cells as (row, col), 0-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook_length(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c - 1;
        let leg = self.0.iter().skip(r + 1).filter(|&&p| p > c).count();
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook-length formula.
    pub fn num_standard_tableaux(&self) -> usize {
        let n = self.size();
        let mut num: u128 = 1;
        for k in 1..=n {
            num *= k as u128;
        }
        let mut den: u128 = 1;
        for (r, c) in self.cells() {
            den *= self.hook_length(r, c) as u128;
        }
        (num / den) as usize
    }

    /// Is `μ ⊆ λ` with `λ/μ` a horizontal strip (≤ 1 cell per column)?
    pub fn horizontal_strip_over(&self, inner: &Partition) -> bool {
        if !self.contains(inner) {
            return false;
        }
        (0..self.len()).all(|i| i == 0 || inner.part(i - 1) >= self.part(i))
    }

    /// All partitions of n, lexicographically decreasing.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        rec(n, n, &mut vec![], &mut out);
        out
    }

    /// Parse "3,2,1"; empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?}", p)))
            })
            .collect::<Result<_>>()?;
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("not weakly decreasing positive: {:?}", parts)));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Sequence of positive integers, order significant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions of n, by subset of split points.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(vec![])];
        }
        let mut out = vec![];
        for mask in 0..(1u32 << (n - 1)) {
            let mut parts = vec![];
            let mut run = 1;
            for i in 0..n - 1 {
                if mask & (1 << i) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            out.push(Composition(parts));
        }
        out
    }

    /// Parse "3.2.1.2".
    pub fn parse(s: &str) -> Result<Composition> {
        let parts: Vec<usize> = s
            .trim()
            .split('.')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {:?}", p)))
            })
            .collect::<Result<_>>()?;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
        )
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Sequence over {+1, -1} of length n-1, indexing a Coxeter braid on n
/// strands.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignSequence(Vec<i8>);

impl SignSequence {
    pub fn new(entries: Vec<i8>) -> Self {
        assert!(entries.iter().all(|&e| e == 1 || e == -1));
        SignSequence(entries)
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Strand count n = len + 1.
    pub fn strands(&self) -> usize {
        self.0.len() + 1
    }

    pub fn num_plus(&self) -> usize {
        self.0.iter().filter(|&&e| e == 1).count()
    }

    pub fn all(strands: usize) -> Vec<SignSequence> {
        assert!(strands >= 1);
        let k = strands - 1;
        (0..(1u32 << k))
            .map(|mask| {
                SignSequence((0..k).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect())
            })
            .collect()
    }

    /// Parse "++-+--+"; empty string allowed (one strand).
    pub fn parse(s: &str) -> Result<SignSequence> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(format!("bad sign {:?}", c))),
            })
            .collect::<Result<Vec<i8>>>()
            .map(SignSequence)
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.0 {
            write!(f, "{}", if e == 1 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// ε ↔ a bijection: minus signs sit exactly at the partial sums
/// a_1, a_1+a_2, … (the last partial sum n falls outside the range).
pub fn epsilon_to_composition(eps: &SignSequence) -> Composition {
    let mut parts = vec![];
    let mut run = 1;
    for &e in eps.entries() {
        if e == -1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::new(parts)
}

pub fn composition_to_epsilon(a: &Composition) -> SignSequence {
    let n = a.size();
    assert!(n >= 1);
    let mut entries = vec![1i8; n - 1];
    let mut acc = 0;
    for &p in &a.parts()[..a.len() - 1] {
        acc += p;
        entries[acc - 1] = -1;
    }
    SignSequence(entries)
}

/// A pair of nested partitions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(outer.contains(&inner), "inner not contained in outer");
        SkewShape { outer, inner }
    }

    pub fn from_partition(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.outer
            .cells()
            .filter(|&(r, c)| c >= self.inner.part(r))
            .collect()
    }

    /// Connected and containing no 2x2 block.
    pub fn is_ribbon(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let has = |r: usize, c: usize| cells.contains(&(r, c));
        let no_square = cells.iter().all(|&(r, c)| !(has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)));
        // connectivity by flood fill through edge-adjacency
        let mut seen = vec![cells[0]];
        let mut frontier = vec![cells[0]];
        while let Some((r, c)) = frontier.pop() {
            let mut neighbors = vec![(r + 1, c), (r, c + 1)];
            if r > 0 {
                neighbors.push((r - 1, c));
            }
            if c > 0 {
                neighbors.push((r, c - 1));
            }
            for nb in neighbors {
                if cells.contains(&nb) && !seen.contains(&nb) {
                    seen.push(nb);
                    frontier.push(nb);
                }
            }
        }
        no_square && seen.len() == cells.len()
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

/// Connected ribbon with row lengths a_1, …, a_s read bottom-to-top:
/// λ = (Σa − s + 1, …, a_1 + a_2 − 1, a_1), μ_i = λ_{i+1} − 1.
pub fn composition_to_ribbon(a: &Composition) -> SkewShape {
    assert!(!a.is_empty());
    let s = a.len();
    let outer: Vec<usize> = (1..=s)
        .map(|i| a.parts()[..s + 1 - i].iter().sum::<usize>() - (s - i))
        .collect();
    let inner: Vec<usize> = (1..s).map(|i| outer[i] - 1).filter(|&p| p > 0).collect();
    SkewShape::new(Partition::new(outer), Partition::new(inner))
}

/// Standard Young tableau: rows hold the labels 1..n, strictly
/// increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect());
        let t = StandardTableau { shape, rows };
        assert!(t.is_standard(), "not standard: {:?}", t.rows);
        t
    }

    fn is_standard(&self) -> bool {
        let n = self.shape.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if c + 1 < row.len() && row[c + 1] <= v {
                    return false;
                }
                if r + 1 < self.rows.len() && self.rows[r + 1].len() > c && self.rows[r + 1][c] <= v {
                    return false;
                }
            }
        }
        true
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// (row, col) of a label, 0-indexed.
    pub fn position(&self, label: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == label) {
                return (r, c);
            }
        }
        panic!("label {} not in tableau", label)
    }

    /// Content col - row of the cell holding each of 1..n, in order.
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size())
            .map(|v| {
                let (r, c) = self.position(v);
                c as i64 - r as i64
            })
            .collect()
    }

    /// Swap labels i and i+1; None when the result is not standard
    /// (i.e. they share a row or column).
    pub fn apply_transposition(&self, i: usize) -> Option<StandardTableau> {
        let (r1, c1) = self.position(i);
        let (r2, c2) = self.position(i + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1][c1] = i + 1;
        rows[r2][c2] = i;
        Some(StandardTableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// Row-reading tableau: 1..λ_1 in the first row, continuing left to
    /// right down the rows (the superstandard filling).
    pub fn row_reading(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau::new(rows)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join(" / ")
        )
    }
}

/// All standard tableaux of the shape, built by recursively placing
/// n, n-1, … at removable corners.
pub fn standard_tableaux(shape: &Partition) -> Result<Vec<StandardTableau>> {
    standard_tableaux_bounded(shape, DEFAULT_SIZE_BOUND)
}

pub fn standard_tableaux_bounded(shape: &Partition, bound: usize) -> Result<Vec<StandardTableau>> {
    if shape.size() > bound {
        return Err(Error::BoundExceeded {
            what: "tableau shape size",
            value: shape.size(),
            limit: bound,
        });
    }
    fn rec(parts: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<(usize, usize)>>, path: &mut Vec<(usize, usize)>) {
        if n == 0 {
            out.push(path.iter().rev().cloned().collect());
            return;
        }
        for r in 0..parts.len() {
            let len = parts[r];
            if len == 0 {
                continue;
            }
            let removable = r + 1 == parts.len() || parts[r + 1] < len;
            if removable {
                parts[r] -= 1;
                path.push((r, len - 1));
                rec(parts, n - 1, out, path);
                path.pop();
                parts[r] += 1;
            }
        }
    }
    let mut placements = vec![];
    let mut parts = shape.parts().to_vec();
    rec(&mut parts, shape.size(), &mut placements, &mut vec![]);
    Ok(placements
        .into_iter()
        .map(|cells| {
            let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
            for (label, (r, c)) in cells.iter().enumerate() {
                rows[*r][*c] = label + 1;
            }
            StandardTableau::new(rows)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_involution_and_hooks() {
        let lam = p(&[4, 3, 3, 2]);
        assert_eq!(lam.conjugate(), p(&[4, 4, 3, 1]));
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(p(&[2, 1]).num_standard_tableaux(), 2);
        assert_eq!(p(&[3, 2]).num_standard_tableaux(), 5);
    }

    #[test]
    fn epsilon_composition_bijection() {
        let eps = SignSequence::parse("++-+--+").unwrap();
        let a = epsilon_to_composition(&eps);
        assert_eq!(a, Composition::new(vec![3, 2, 1, 2]));
        assert_eq!(composition_to_epsilon(&a), eps);
        for n in 1..=8 {
            for eps in SignSequence::all(n) {
                let a = epsilon_to_composition(&eps);
                assert_eq!(a.size(), n);
                assert_eq!(composition_to_epsilon(&a), eps);
            }
        }
        assert_eq!(
            epsilon_to_composition(&SignSequence::parse("+++").unwrap()),
            Composition::new(vec![4])
        );
        assert_eq!(
            epsilon_to_composition(&SignSequence::parse("---").unwrap()),
            Composition::new(vec![1, 1, 1, 1])
        );
    }

    #[test]
    fn ribbon_shapes() {
        let sh = composition_to_ribbon(&Composition::new(vec![3, 2, 1, 2]));
        assert_eq!(sh.outer, p(&[5, 4, 4, 3]));
        assert_eq!(sh.inner, p(&[3, 3, 2]));
        assert!(sh.is_ribbon());
        let row = composition_to_ribbon(&Composition::new(vec![4]));
        assert_eq!(row.outer, p(&[4]));
        assert!(row.inner.is_empty());
        let col = composition_to_ribbon(&Composition::new(vec![1, 1, 1, 1]));
        assert_eq!(col.outer, p(&[1, 1, 1, 1]));
        assert!(col.inner.is_empty());
        for n in 1..=7 {
            for a in Composition::all(n) {
                let sh = composition_to_ribbon(&a);
                assert_eq!(sh.size(), n);
                assert!(sh.is_ribbon(), "not a ribbon: {:?}", a);
            }
        }
    }

    #[test]
    fn tableau_contents_conventions() {
        let row = StandardTableau::row_reading(&p(&[4]));
        assert_eq!(row.contents(), vec![0, 1, 2, 3]);
        let col = StandardTableau::row_reading(&p(&[1, 1, 1]));
        assert_eq!(col.contents(), vec![0, -1, -2]);
        let t = StandardTableau::row_reading(&p(&[4, 3, 3, 2]));
        let contents = t.contents();
        assert_eq!(contents.iter().filter(|&&c| c == 3).count(), 1);
        assert_eq!(contents.iter().filter(|&&c| c == -3).count(), 1);
    }

    #[test]
    fn tableau_enumeration_matches_hook_formula() {
        for n in 1..=7 {
            for lam in Partition::all(n) {
                let ts = standard_tableaux(&lam).unwrap();
                assert_eq!(ts.len(), lam.num_standard_tableaux(), "shape {:?}", lam);
                let mut sorted: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), ts.len());
            }
        }
        assert!(standard_tableaux(&p(&[5, 4])).is_err());
    }

    #[test]
    fn transposition_moves() {
        let t = StandardTableau::new(vec![vec![1, 2], vec![3]]);
        assert!(t.apply_transposition(1).is_none()); // same row
        let t2 = t.apply_transposition(2).unwrap();
        assert_eq!(t2.rows(), &[vec![1, 3], vec![2]]);
        assert!(t2.apply_transposition(1).is_none()); // same column
    }

    #[test]
    fn parsing() {
        assert_eq!(Partition::parse("3,2,1").unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(
            Composition::parse("3.2.1.2").unwrap(),
            Composition::new(vec![3, 2, 1, 2])
        );
        assert!(Composition::parse("3.0").is_err());
        assert_eq!(SignSequence::parse("+-").unwrap(), SignSequence::new(vec![1, -1]));
        assert!(SignSequence::parse("+x").is_err());
    }
}
