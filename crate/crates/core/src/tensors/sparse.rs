//! Sparse exact tensors and an `einsum`-style contraction engine.
//!
//! Index tuples are packed into a `u64`, five bits per index with the first
//! index most significant, so sorting keys sorts tuples lexicographically.
//! Every dimension must be below 32 and the rank at most 12.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::rational::Rational;
use crate::scalar::{ExactScalar, Ring};

const BITS: u32 = 5;
const MASK: u64 = (1 << BITS) - 1;
pub const MAX_RANK: usize = 12;
pub const MAX_DIM: usize = 1 << BITS;

/// Entries above this count are contracted in parallel.
const PAR_ENTRIES: usize = 2048;

pub fn pack(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |k, &i| (k << BITS) | i as u64)
}

pub fn unpack(key: u64, rank: usize) -> Vec<usize> {
    (0..rank).map(|p| digit(key, p, rank)).collect()
}

#[inline]
fn digit(key: u64, pos: usize, rank: usize) -> usize {
    ((key >> (BITS as usize * (rank - 1 - pos))) & MASK) as usize
}

/// Nonzero entries sorted by packed index.
#[derive(Clone, PartialEq, Debug)]
pub struct Sparse {
    dims: Vec<usize>,
    entries: Vec<(u64, ExactScalar)>,
}

impl Sparse {
    pub fn zeros(dims: &[usize]) -> Self {
        assert!(dims.len() <= MAX_RANK, "rank {} exceeds {MAX_RANK}", dims.len());
        assert!(
            dims.iter().all(|&d| d > 0 && d <= MAX_DIM),
            "dimension out of range: {dims:?}"
        );
        Self {
            dims: dims.to_vec(),
            entries: Vec::new(),
        }
    }

    /// Builds from unsorted `(key, value)` pairs, summing duplicates.
    pub fn from_entries(dims: &[usize], entries: impl IntoIterator<Item = (u64, ExactScalar)>) -> Self {
        let mut map: HashMap<u64, ExactScalar> = HashMap::new();
        for (k, v) in entries {
            if !v.is_zero() {
                *map.entry(k).or_default() += &v;
            }
        }
        Self::from_map(dims, map)
    }

    fn from_map(dims: &[usize], map: HashMap<u64, ExactScalar>) -> Self {
        let mut out = Self::zeros(dims);
        out.entries = map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.entries.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Evaluates `f` on every index tuple.
    pub fn from_fn(dims: &[usize], f: impl Fn(&[usize]) -> ExactScalar + Sync) -> Self {
        let total: usize = dims.iter().product();
        let entries: Vec<(u64, ExactScalar)> = (0..total)
            .into_par_iter()
            .filter_map(|flat| {
                let idx = unflatten(flat, dims);
                let v = f(&idx);
                (!v.is_zero()).then(|| (pack(&idx), v))
            })
            .collect();
        let mut out = Self::zeros(dims);
        out.entries = entries;
        out.entries.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Kronecker delta on `n`.
    pub fn delta(n: usize) -> Self {
        Self::from_entries(&[n, n], (0..n).map(|i| (pack(&[i, i]), ExactScalar::one())))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &ExactScalar)> {
        let r = self.rank();
        self.entries.iter().map(move |(k, v)| (unpack(*k, r), v))
    }

    pub fn get(&self, idx: &[usize]) -> ExactScalar {
        let key = pack(idx);
        match self.entries.binary_search_by_key(&key, |e| e.0) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => ExactScalar::zero(),
        }
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        let mut out = Self::zeros(&self.dims);
        if k.is_zero() {
            return out;
        }
        out.entries = self
            .entries
            .iter()
            .map(|(key, v)| (*key, v * k))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.scale(&ExactScalar::from_rational(k.clone()))
    }

    /// `self + k·other`.
    pub fn add_scaled(&self, k: &ExactScalar, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims, "add: shape mismatch");
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let ka = self.entries.get(i).map(|e| e.0);
            let kb = other.entries.get(j).map(|e| e.0);
            match (ka, kb) {
                (Some(a), Some(b)) if a == b => {
                    let mut v = self.entries[i].1.clone();
                    v.add_product(k, &other.entries[j].1);
                    if !v.is_zero() {
                        out.push((a, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), b) if b.is_none_or(|b| a < b) => {
                    out.push(self.entries[i].clone());
                    i += 1;
                }
                _ => {
                    let v = &other.entries[j].1 * k;
                    if !v.is_zero() {
                        out.push((other.entries[j].0, v));
                    }
                    j += 1;
                }
            }
        }
        Self {
            dims: self.dims.clone(),
            entries: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&ExactScalar::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&ExactScalar::from_integer(-1), other)
    }

    /// Reorders axes: output axis `p` is input axis `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let r = self.rank();
        assert_eq!(perm.len(), r);
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Self::zeros(&dims);
        out.entries = self
            .entries
            .iter()
            .map(|(k, v)| {
                let key = perm.iter().fold(0u64, |acc, &p| (acc << BITS) | digit(*k, p, r) as u64);
                (key, v.clone())
            })
            .collect();
        out.entries.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Unit-weight symmetrization over the listed axes.
    pub fn symmetrize(&self, axes: &[usize]) -> Self {
        self.permutation_average(axes, false)
    }

    /// Unit-weight antisymmetrization over the listed axes.
    pub fn antisymmetrize(&self, axes: &[usize]) -> Self {
        self.permutation_average(axes, true)
    }

    fn permutation_average(&self, axes: &[usize], signed: bool) -> Self {
        let perms = permutations(axes.len());
        let mut acc = Self::zeros(&self.dims);
        for (p, sign) in &perms {
            let mut full: Vec<usize> = (0..self.rank()).collect();
            for (slot, &src) in axes.iter().zip(p) {
                full[*slot] = axes[src];
            }
            let k = if signed { *sign } else { 1 };
            acc = acc.add_scaled(&ExactScalar::from_integer(k), &self.permute(&full));
        }
        acc.scale_rational(&Rational::new(1, perms.len() as i64).expect("nonzero"))
    }

    /// First index tuple (lexicographic) where the two tensors differ,
    /// with both values.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<usize>, ExactScalar, ExactScalar)> {
        assert_eq!(self.dims, other.dims, "compare: shape mismatch");
        let (mut i, mut j) = (0, 0);
        let r = self.rank();
        loop {
            let a = self.entries.get(i);
            let b = other.entries.get(j);
            match (a, b) {
                (None, None) => return None,
                (Some((ka, va)), Some((kb, vb))) if ka == kb => {
                    if va != vb {
                        return Some((unpack(*ka, r), va.clone(), vb.clone()));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ka, va)), b) if b.is_none_or(|(kb, _)| ka < kb) => {
                    return Some((unpack(*ka, r), va.clone(), ExactScalar::zero()));
                }
                (_, Some((kb, vb))) => return Some((unpack(*kb, r), ExactScalar::zero(), vb.clone())),
                (Some(_), None) => unreachable!(),
            }
        }
    }

    /// `Some(k)` when `self = k·other` (with `other` nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<ExactScalar> {
        let (key, v) = other.entries.first()?;
        let k = &self.get(&unpack(*key, self.rank())) * &v.invert().ok()?;
        (self.first_difference(&other.scale(&k)).is_none()).then_some(k)
    }
}

fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for p in (0..dims.len()).rev() {
        idx[p] = flat % dims[p];
        flat /= dims[p];
    }
    idx
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == p.len() {
            out.push((p.clone(), sign));
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, if i == k { sign } else { -sign }, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, 1, &mut out);
    out
}

/// Parsed term: one label per axis.
struct Term {
    labels: Vec<char>,
}

fn parse_spec(spec: &str, n_operands: usize) -> (Vec<Term>, Vec<char>) {
    let (lhs, rhs) = spec
        .split_once("->")
        .unwrap_or_else(|| panic!("einsum spec {spec:?} lacks '->'"));
    let terms: Vec<Term> = lhs
        .split(',')
        .map(|t| Term {
            labels: t.trim().chars().collect(),
        })
        .collect();
    assert_eq!(terms.len(), n_operands, "einsum {spec:?}: operand count mismatch");
    (terms, rhs.trim().chars().collect())
}

/// Collapses repeated labels inside one operand (taking the diagonal) and
/// sums labels not listed in `keep`.
fn reduce(t: &Sparse, labels: &[char], keep: &[char]) -> Sparse {
    let r = t.rank();
    let pos_of = |l: char| labels.iter().position(|&x| x == l).expect("label");
    let keep_pos: Vec<usize> = keep.iter().map(|&l| pos_of(l)).collect();
    let dims: Vec<usize> = keep_pos.iter().map(|&p| t.dims[p]).collect();
    let mut map: HashMap<u64, ExactScalar> = HashMap::new();
    'entries: for (k, v) in &t.entries {
        for a in 0..r {
            for b in a + 1..r {
                if labels[a] == labels[b] && digit(*k, a, r) != digit(*k, b, r) {
                    continue 'entries;
                }
            }
        }
        let key = keep_pos
            .iter()
            .fold(0u64, |acc, &p| (acc << BITS) | digit(*k, p, r) as u64);
        *map.entry(key).or_default() += v;
    }
    Sparse::from_map(&dims, map)
}

fn unique(labels: &[char]) -> Vec<char> {
    let mut out = Vec::new();
    for &l in labels {
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// Contracts two operands whose labels are each distinct, keeping `keep`.
fn contract_pair(a: &Sparse, la: &[char], b: &Sparse, lb: &[char], keep: &[char]) -> Sparse {
    let (ra, rb) = (a.rank(), b.rank());
    let shared: Vec<char> = la.iter().copied().filter(|l| lb.contains(l)).collect();
    let sa: Vec<usize> = shared.iter().map(|l| la.iter().position(|x| x == l).unwrap()).collect();
    let sb: Vec<usize> = shared.iter().map(|l| lb.iter().position(|x| x == l).unwrap()).collect();
    // each kept label comes from a (true) or b (false) at a position
    let sources: Vec<(bool, usize)> = keep
        .iter()
        .map(|l| match la.iter().position(|x| x == l) {
            Some(p) => (true, p),
            None => (false, lb.iter().position(|x| x == l).expect("kept label present")),
        })
        .collect();
    let dims: Vec<usize> = sources
        .iter()
        .map(|&(from_a, p)| if from_a { a.dims[p] } else { b.dims[p] })
        .collect();
    let key_of =
        |k: u64, pos: &[usize], r: usize| pos.iter().fold(0u64, |acc, &p| (acc << BITS) | digit(k, p, r) as u64);
    let mut index: HashMap<u64, Vec<usize>> = HashMap::new();
    for (n, (k, _)) in b.entries.iter().enumerate() {
        index.entry(key_of(*k, &sb, rb)).or_default().push(n);
    }
    let accumulate = |mut map: HashMap<u64, ExactScalar>, (ka, va): &(u64, ExactScalar)| {
        if let Some(matches) = index.get(&key_of(*ka, &sa, ra)) {
            for &n in matches {
                let (kb, vb) = &b.entries[n];
                let key = sources.iter().fold(0u64, |acc, &(from_a, p)| {
                    let d = if from_a { digit(*ka, p, ra) } else { digit(*kb, p, rb) };
                    (acc << BITS) | d as u64
                });
                map.entry(key).or_default().add_product(va, vb);
            }
        }
        map
    };
    let map = if a.entries.len() >= PAR_ENTRIES {
        a.entries
            .par_iter()
            .fold(HashMap::new, accumulate)
            .reduce(HashMap::new, |mut x, y| {
                for (k, v) in y {
                    *x.entry(k).or_default() += &v;
                }
                x
            })
    } else {
        a.entries.iter().fold(HashMap::new(), accumulate)
    };
    Sparse::from_map(&dims, map)
}

/// Einstein-summation contraction, e.g. `einsum("ijk,ijl->kl", &[&c, &c])`.
/// Operands are contracted left to right; a label is summed once no later
/// operand or the output needs it. Order the operands to keep the
/// intermediates small.
pub fn einsum(spec: &str, operands: &[&Sparse]) -> Sparse {
    let (terms, out) = parse_spec(spec, operands.len());
    for (t, op) in terms.iter().zip(operands) {
        assert_eq!(t.labels.len(), op.rank(), "einsum {spec:?}: rank mismatch");
    }
    let needed_after = |k: usize| -> Vec<char> {
        let mut v: Vec<char> = out.clone();
        for t in &terms[k + 1..] {
            v.extend(&t.labels);
        }
        v
    };
    let first_labels = unique(&terms[0].labels);
    let mut acc = reduce(operands[0], &terms[0].labels, &first_labels);
    let mut acc_labels = first_labels;
    for k in 1..operands.len() {
        let lb = unique(&terms[k].labels);
        let b = reduce(operands[k], &terms[k].labels, &lb);
        let later = needed_after(k);
        let keep: Vec<char> = unique(&acc_labels.iter().chain(&lb).copied().collect::<Vec<_>>())
            .into_iter()
            .filter(|l| later.contains(l))
            .collect();
        acc = contract_pair(&acc, &acc_labels, &b, &lb, &keep);
        acc_labels = keep;
    }
    // sum leftover labels, then order as requested
    let kept: Vec<char> = acc_labels.iter().copied().filter(|l| out.contains(l)).collect();
    if kept.len() != acc_labels.len() {
        acc = reduce(&acc, &acc_labels, &kept);
        acc_labels = kept;
    }
    assert_eq!(
        acc_labels.len(),
        out.len(),
        "einsum {spec:?}: output label missing from inputs"
    );
    if acc_labels == out {
        return acc;
    }
    let perm: Vec<usize> = out
        .iter()
        .map(|l| acc_labels.iter().position(|x| x == l).expect("output label"))
        .collect();
    acc.permute(&perm)
}

/// A full contraction to a scalar.
pub fn einsum_scalar(spec: &str, operands: &[&Sparse]) -> ExactScalar {
    let spec = if spec.ends_with("->") {
        spec.to_string()
    } else {
        format!("{spec}->")
    };
    let t = einsum(&spec, operands);
    t.entries.first().map(|e| e.1.clone()).unwrap_or_default()
}

impl Sparse {
    /// Rank-0 tensors store their value under key 0.
    pub fn scalar_value(&self) -> ExactScalar {
        assert_eq!(self.rank(), 0);
        self.entries.first().map(|e| e.1.clone()).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn dense(dims: &[usize], vals: &[i64]) -> Sparse {
        Sparse::from_fn(dims, |idx| {
            let flat = idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i);
            rat(vals[flat], 1)
        })
    }

    #[test]
    fn matrix_product_and_trace() {
        let a = dense(&[2, 2], &[1, 2, 3, 4]);
        let b = dense(&[2, 2], &[0, 1, 1, 0]);
        let ab = einsum("ij,jk->ik", &[&a, &b]);
        assert_eq!(ab, dense(&[2, 2], &[2, 1, 4, 3]));
        assert_eq!(einsum_scalar("ii", &[&a]), rat(5, 1));
        assert_eq!(einsum("ij->ji", &[&a]), dense(&[2, 2], &[1, 3, 2, 4]));
        assert_eq!(einsum_scalar("ij,ji", &[&a, &b]), rat(5, 1));
    }

    #[test]
    fn outer_products_and_deltas() {
        let d = Sparse::delta(3);
        let dd = einsum("ij,kl->ijkl", &[&d, &d]);
        assert_eq!(dd.nnz(), 9);
        assert_eq!(einsum("ijkk->ij", &[&dd]), d.scale(&rat(3, 1)));
        // symmetrize δ_ij δ_kl over all four indices, at i=j=k=l
        let s = dd.symmetrize(&[0, 1, 2, 3]);
        assert_eq!(s.get(&[1, 1, 1, 1]), rat(1, 1));
        assert_eq!(s.get(&[0, 0, 1, 1]), rat(1, 3));
        assert_eq!(s.get(&[0, 1, 0, 1]), rat(1, 3));
    }

    #[test]
    fn antisymmetrize_and_compare() {
        let a = dense(&[2, 2], &[1, 2, 3, 4]);
        let anti = a.antisymmetrize(&[0, 1]);
        assert_eq!(anti, dense(&[2, 2], &[0, -1, 1, 0]).scale(&rat(1, 2)));
        let b = a.add(&dense(&[2, 2], &[0, 0, 1, 0]));
        let (idx, x, y) = a.first_difference(&b).unwrap();
        assert_eq!((idx, x, y), (vec![1, 0], rat(3, 1), rat(4, 1)));
        assert!(a.first_difference(&a).is_none());
        assert_eq!(a.scale(&rat(-2, 3)).ratio_to(&a), Some(rat(-2, 3)));
        assert_eq!(b.ratio_to(&a), None);
    }

    #[test]
    fn three_operand_chain_matches_naive() {
        let vals: Vec<i64> = (0..27).map(|k| (k * 7 % 5) - 2).collect();
        let t = dense(&[3, 3, 3], &vals);
        let got = einsum("abq,bcr,cas->qrs", &[&t, &t, &t]);
        let naive = Sparse::from_fn(&[3, 3, 3], |idx| {
            let mut acc = rat(0, 1);
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        acc += &(&(&t.get(&[a, b, idx[0]]) * &t.get(&[b, c, idx[1]])) * &t.get(&[c, a, idx[2]]));
                    }
                }
            }
            acc
        });
        assert_eq!(got, naive);
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        assert!(p.contains(&(vec![1, 0, 2], -1)));
        assert!(p.contains(&(vec![1, 2, 0], 1)));
    }
}
