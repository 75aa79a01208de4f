use crate::scalar::{rat, ExactScalar, Ring};
use crate::tensors::{einsum, Sparse, SparseStore};
use crate::verify::{compare_tensors, delta_product, Check};

/// An adjoint vector `A_i` and the vectors and scalars built from it with
/// the d-tensors. Generic over the coefficient ring so the same code runs
/// on rational samples and on slice polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointVectorBundle<R> {
    pub a: Vec<R>,
    /// `B_α = d_ijα A_i A_j`
    pub b: Vec<R>,
    /// `D_α = d_αβγ B_β B_γ`
    pub d: Vec<R>,
    /// `C_i = d_ijα A_j D_α`, the quintic adjoint vector.
    pub c: Vec<R>,
    /// `A·A`
    pub c2: R,
    /// `A·C`
    pub c6: R,
    pub bb: R,
    pub bd: R,
    pub cc: R,
    pub dd: R,
}

fn dot<R: Ring>(u: &[R], v: &[R]) -> R {
    let mut acc = R::zero();
    for (x, y) in u.iter().zip(v) {
        acc.add_product(x, y);
    }
    acc
}

/// `out[idx[out_axis]] += t · Π v[idx[axis]]` over the entries of a rank-3 tensor.
fn contract3<R: Ring>(t: &Sparse, out_axis: usize, out_len: usize, inputs: [(usize, &[R]); 2]) -> Vec<R> {
    let mut out = vec![R::zero(); out_len];
    for (idx, v) in t.entries() {
        let mut term = R::from_exact(v);
        for (axis, vec) in inputs {
            let x = &vec[idx[axis]];
            if x.is_zero() {
                term = R::zero();
                break;
            }
            term = term.mul(x);
        }
        if !term.is_zero() {
            out[idx[out_axis]] = out[idx[out_axis]].add(&term);
        }
    }
    out
}

impl<R: Ring> AdjointVectorBundle<R> {
    pub fn new(a: Vec<R>, s: &SparseStore) -> Self {
        assert_eq!(a.len(), 14, "adjoint vectors have 14 components");
        let b = contract3(&s.d_ij, 2, 27, [(0, &a), (1, &a)]);
        let d = contract3(&s.d_yyy, 0, 27, [(1, &b), (2, &b)]);
        let c = contract3(&s.d_ij, 0, 14, [(1, &a), (2, &d)]);
        Self {
            c2: dot(&a, &a),
            c6: dot(&a, &c),
            bb: dot(&b, &b),
            bd: dot(&b, &d),
            cc: dot(&c, &c),
            dd: dot(&d, &d),
            a,
            b,
            d,
            c,
        }
    }

    /// `d_ijα d_klα A_j A_k A_l`, which should equal `6/7 (A·A) A_i`.
    pub fn cubic_vector(&self, s: &SparseStore) -> Vec<R> {
        contract3(&s.d_ij, 0, 14, [(1, &self.a), (2, &self.b)])
    }
}

/// The 15 ways to split six slots into three unordered pairs.
pub fn pairings6() -> Vec<[(usize, usize); 3]> {
    let mut out = Vec::with_capacity(15);
    for p in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != p).collect();
        for q in 1..4 {
            let r: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[q]).collect();
            out.push([(0, p), (rest[0], rest[q]), (r[0], r[1])]);
        }
    }
    out
}

/// `T_iiklpq` with `T_ijklpq = d_αβγ d_(ij^α d_kl^β d_pq)^γ`, materialized by
/// summing the 15 pairings of the slot labels `i i k l p q`.
pub fn six_tensor_trace(s: &SparseStore) -> Sparse {
    let labels = ['i', 'i', 'k', 'l', 'p', 'q'];
    let mut acc = Sparse::zeros(&[14; 4]);
    for mut pairing in pairings6() {
        // pairs carrying the traced index first keep the intermediates small
        pairing.sort_by_key(|&(a, _)| a >= 2);
        let pair = |k: usize| -> String { [labels[pairing[k].0], labels[pairing[k].1]].iter().collect() };
        let spec = format!("{}a,abg,{}b,{}g->klpq", pair(0), pair(1), pair(2));
        let d = &s.d_ij;
        acc = acc.add(&einsum(&spec, &[d, &s.d_yyy, d, d]));
    }
    acc.scale(&rat(1, 15))
}

/// `δ_(ij δ_kl δ_pq)` traced on its first two slots, by the same pairing sum.
pub fn delta3_trace() -> Sparse {
    let mut acc = Sparse::zeros(&[14; 4]);
    for pairing in pairings6() {
        // slot 0 and 1 are the traced pair, both labelled by an extra axis
        let t = delta_product(&[14; 5], &remap(&pairing));
        let traced = einsum("iklpq->klpq", &[&t]);
        acc = acc.add(&traced);
    }
    acc.scale(&rat(1, 15))
}

/// Maps slot pairs of `i i k l p q` onto the axes of `(i, k, l, p, q)`.
fn remap(pairing: &[(usize, usize); 3]) -> Vec<(usize, usize)> {
    let axis = |slot: usize| if slot < 2 { 0 } else { slot - 1 };
    pairing.iter().map(|&(a, b)| (axis(a), axis(b))).collect()
}

/// `δ_(kl δ_pq)` of unit weight on four slots.
pub fn delta2_sym() -> Sparse {
    let n = [14; 4];
    delta_product(&n, &[(0, 1), (2, 3)])
        .add(&delta_product(&n, &[(0, 2), (1, 3)]))
        .add(&delta_product(&n, &[(0, 3), (1, 2)]))
        .scale(&rat(1, 3))
}

/// `T_iiklpq = (4/5)(22/21)(6/7) δ_(kl δ_pq)` and the traceless part
/// `S = T − 88/441 δδδ` has vanishing trace.
pub fn six_tensor_check(s: &SparseStore) -> (Check, Check) {
    let t = six_tensor_trace(s);
    let k = &(&rat(4, 5) * &rat(22, 21)) * &rat(6, 7);
    let c_t = compare_tensors(&t, &delta2_sym().scale(&k)).detail(format!("constant={}", ExactScalar::to_string(&k)));
    let sx = t.add_scaled(&rat(-88, 441), &delta3_trace());
    let c_s = compare_tensors(&sx, &Sparse::zeros(&[14; 4]));
    (c_t, c_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn fifteen_distinct_pairings() {
        let all = pairings6();
        assert_eq!(all.len(), 15);
        let set: BTreeSet<Vec<(usize, usize)>> = all
            .iter()
            .map(|p| {
                let mut v = p.to_vec();
                v.sort();
                v
            })
            .collect();
        assert_eq!(set.len(), 15);
        for p in &all {
            let mut slots: Vec<usize> = p.iter().flat_map(|&(a, b)| [a, b]).collect();
            slots.sort();
            assert_eq!(slots, vec![0, 1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn delta3_trace_closed_form() {
        // 3 pairings keep (i i) together and give 14·δδ; the other 12 give δδ.
        let want = delta2_sym().scale(&rat(18, 5));
        assert!(delta3_trace().first_difference(&want).is_none());
    }
}
