//! Invariant-polynomial relations, checked as exact polynomial identities on
//! the Cartan slice and at seeded random rational adjoint vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{char_poly, BivariatePoly, Matrix, RepMatrix};
use crate::model::Model;
use crate::rational::{q, Rational};
use crate::scalar::{rat, ComplexScalar, ExactScalar, Ring};
use crate::verify::{render_scalar, Check, IdentityCase, Witness};

use super::adjoint::{six_tensor_check, AdjointVectorBundle};
use super::slice::Slice;

pub const SAMPLE_SEED: u64 = 0x6732_0007;
pub const SAMPLE_COUNT: usize = 20;

/// Traces, characteristic coefficients and adjoint-vector data for one
/// adjoint vector `A`, over slice polynomials or exact scalars.
#[derive(Clone, Debug)]
pub struct InvariantData<R> {
    /// `tr A^k`, `k = 0..=10`.
    pub tr_a: Vec<R>,
    /// `tr B^k`, `k = 0..=10`.
    pub tr_b: Vec<R>,
    /// Coefficients of `det(t − A)` from `t⁰` to `t⁷`.
    pub chi: Vec<R>,
    /// `d_ijα d_klα A_j A_k A_l`.
    pub cubic: Vec<R>,
    pub bundle: AdjointVectorBundle<R>,
}

fn traces<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let mut p = Matrix::identity(a.n());
    let mut out = Vec::with_capacity(11);
    for _ in 0..=10 {
        out.push(p.trace());
        p = &p * a;
    }
    out
}

impl InvariantData<BivariatePoly> {
    pub fn slice(m: &Model) -> Result<(Self, Slice)> {
        let s = Slice::new(m)?;
        let chi = char_poly(&s.a_matrix);
        let data = Self {
            tr_a: traces(&s.a_matrix),
            tr_b: (0..=10).map(|k| s.tr_b(k)).collect::<Result<_>>()?,
            chi: (0..=7).map(|k| chi.coeff(k)).collect(),
            cubic: s.bundle.cubic_vector(&m.sparse),
            bundle: s.bundle.clone(),
        };
        Ok((data, s))
    }
}

fn real_all(v: Vec<ComplexScalar>, what: &str) -> Result<Vec<ExactScalar>> {
    v.into_iter().map(|x| x.into_real(what)).collect()
}

impl InvariantData<ExactScalar> {
    /// Data for `A = Σ a_i x_i` with `B = Σ a_i ad_i`.
    pub fn at(m: &Model, a: &[Rational]) -> Result<Self> {
        let mut am = RepMatrix::zeros(7);
        let mut bm = RepMatrix::zeros(14);
        for ((ai, x), ad) in a.iter().zip(&m.catalog.x).zip(&m.derived.ad) {
            let k = ComplexScalar::from_rational(ai.clone());
            am.add_scaled(&k, x);
            bm.add_scaled(&k, ad);
        }
        let chi = char_poly(&am).to_real()?;
        let comps: Vec<ExactScalar> = a.iter().map(|x| ExactScalar::from_rational(x.clone())).collect();
        let bundle = AdjointVectorBundle::new(comps, &m.sparse);
        Ok(Self {
            tr_a: real_all(traces(&am), "tr A^k")?,
            tr_b: real_all(traces(&bm), "tr B^k")?,
            chi: (0..=7).map(|k| chi.coeff(k)).collect(),
            cubic: bundle.cubic_vector(&m.sparse),
            bundle,
        })
    }
}

/// Seeded rational vectors with components `p/q`, `p ∈ [−5, 5]`, `q ∈ [1, 4]`.
pub fn random_vectors(count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..14)
                .map(|_| q(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
                .collect()
        })
        .collect()
}

fn samples(m: &Model) -> Result<Vec<InvariantData<ExactScalar>>> {
    random_vectors(SAMPLE_COUNT, SAMPLE_SEED)
        .iter()
        .map(|a| InvariantData::at(m, a))
        .collect()
}

fn k<R: Ring>(n: i64, d: i64) -> R {
    R::from_exact(&rat(n, d))
}

fn pw<R: Ring>(x: &R, e: u32) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc.mul(x);
    }
    acc
}

/// `Σ k_n · Π factors_n`.
fn sum<R: Ring>(terms: &[(R, &[&R])]) -> R {
    let mut acc = R::zero();
    for (c, fs) in terms {
        let mut t = c.clone();
        for f in *fs {
            t = t.mul(f);
        }
        acc = acc.add(&t);
    }
    acc
}

type Relation<R> = fn(&InvariantData<R>) -> (Vec<R>, Vec<R>);
type SliceRelation = fn(&InvariantData<BivariatePoly>, &Slice) -> (Vec<BivariatePoly>, Vec<BivariatePoly>);

fn first_monomial_difference(l: &BivariatePoly, r: &BivariatePoly) -> Option<((u32, u32), ExactScalar, ExactScalar)> {
    let mut keys: Vec<(u32, u32)> = l.terms().chain(r.terms()).map(|(k, _)| *k).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().find_map(|(da, db)| {
        let (x, y) = (l.coeff(da, db), r.coeff(da, db));
        (x != y).then_some(((da, db), x, y))
    })
}

fn compare_polys(lhs: &[BivariatePoly], rhs: &[BivariatePoly]) -> Check {
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if let Some(((da, db), x, y)) = first_monomial_difference(l, r) {
            let tuple: &[usize] = if lhs.len() > 1 { &[i] } else { &[] };
            return Check::fail(Some(Witness::real(tuple, &x, &y))).detail(format!("monomial=a^{da}b^{db}"));
        }
    }
    Check::pass()
}

fn compare_samples(samples: &[InvariantData<ExactScalar>], rel: Relation<ExactScalar>) -> Check {
    for (s, data) in samples.iter().enumerate() {
        let (lhs, rhs) = rel(data);
        for (i, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
            if l != r {
                let tuple = if lhs.len() > 1 { vec![s, i] } else { vec![s] };
                return Check::fail(Some(Witness::real(&tuple, l, r))).detail("sample");
            }
        }
    }
    Check::pass().detail(format!("samples={}", samples.len()))
}

/// A relation checked on the slice and, when `sampled`, at the random vectors.
fn relation(
    id: &'static str,
    description: &'static str,
    on_slice: Relation<BivariatePoly>,
    on_samples: Option<Relation<ExactScalar>>,
) -> IdentityCase {
    let ranges = if on_samples.is_some() {
        "slice polynomials and seeded rational vectors"
    } else {
        "slice polynomials"
    };
    IdentityCase::new(id, description, ranges, move |m| {
        let (data, _) = InvariantData::slice(m)?;
        let (l, r) = on_slice(&data);
        let check = compare_polys(&l, &r);
        match on_samples {
            Some(rel) if check.status.is_pass() => Ok(check.and(compare_samples(&samples(m)?, rel))),
            _ => Ok(check),
        }
    })
}

/// A slice-only statement that also uses the slice variables directly.
fn slice_relation(id: &'static str, description: &'static str, f: SliceRelation) -> IdentityCase {
    IdentityCase::new(id, description, "slice polynomials", move |m| {
        let (data, s) = InvariantData::slice(m)?;
        let (l, r) = f(&data, &s);
        Ok(compare_polys(&l, &r))
    })
}

fn a() -> BivariatePoly {
    BivariatePoly::var_a()
}

fn b() -> BivariatePoly {
    BivariatePoly::var_b()
}

/// `Σ c·a^i b^j` with rational `c`.
fn poly(terms: &[(u32, u32, i64, i64)]) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for &(da, db, n, d) in terms {
        p = &p + &BivariatePoly::monomial(da, db, rat(n, d));
    }
    p
}

fn r40_1<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let c = v.bundle.c2.mul(&k(6, 7));
    (v.cubic.clone(), v.bundle.a.iter().map(|x| c.mul(x)).collect())
}

fn r40_8<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let b = &v.bundle;
    (
        vec![b.bd.clone(), b.bb.clone()],
        vec![b.c6.clone(), pw(&b.c2, 2).mul(&k(6, 7))],
    )
}

fn r41_7<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let b = &v.bundle;
    let c4 = pw(&b.c2, 4);
    (
        vec![b.dd.clone()],
        vec![sum(&[(k(16, 21), &[&b.c2, &b.c6]), (k(88, 343), &[&c4])])],
    )
}

fn r41_9<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let b = &v.bundle;
    let c3 = pw(&b.c2, 3);
    let inner = sum(&[(k(11, 3), &[&b.c6]), (k(71, 49), &[&c3])]);
    (vec![b.cc.clone()], vec![pw(&b.c2, 2).mul(&inner).mul(&k(16, 147))])
}

fn r47_1<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    (vec![v.tr_a[4].clone()], vec![pw(&v.tr_a[2], 2).mul(&k(1, 4))])
}

fn r47_2<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let t23 = pw(t2, 3);
    let linear = sum(&[(k(1, 96), &[&t23]), (k(-1, 6), &[t6])]);
    let want = vec![
        R::zero(),
        linear,
        R::zero(),
        pw(t2, 2).mul(&k(1, 16)),
        R::zero(),
        t2.mul(&k(-1, 2)),
        R::zero(),
        R::one(),
    ];
    (v.chi.clone(), want)
}

fn r47_3a<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let t24 = pw(t2, 4);
    (
        vec![v.tr_a[8].clone()],
        vec![sum(&[(k(-5, 192), &[&t24]), (k(2, 3), &[t2, t6])])],
    )
}

fn r47_3b<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let (t25, t22) = (pw(t2, 5), pw(t2, 2));
    (
        vec![v.tr_a[10].clone()],
        vec![sum(&[(k(-1, 64), &[&t25]), (k(5, 16), &[&t22, t6])])],
    )
}

fn r47_8<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let b = &v.bundle;
    let c3 = pw(&b.c2, 3);
    (
        vec![v.tr_a[6].clone()],
        vec![sum(&[(k(26, 49), &[&c3]), (k(1, 8), &[&b.c6])])],
    )
}

fn r47_9<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    (vec![v.tr_b[2].clone()], vec![v.tr_a[2].mul(&k(4, 1))])
}

fn r47_10<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    (vec![v.tr_b[4].clone()], vec![pw(&v.tr_a[2], 2).mul(&k(5, 2))])
}

fn r47_11<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let t23 = pw(t2, 3);
    (
        vec![v.tr_b[6].clone()],
        vec![sum(&[(k(15, 4), &[&t23]), (k(-26, 1), &[t6])])],
    )
}

fn r47_12<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let t24 = pw(t2, 4);
    (
        vec![v.tr_b[8].clone()],
        vec![sum(&[(k(515, 96), &[&t24]), (k(-160, 3), &[t2, t6])])],
    )
}

fn r47_13<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let (t2, t6) = (&v.tr_a[2], &v.tr_a[6]);
    let (t25, t22) = (pw(t2, 5), pw(t2, 2));
    (
        vec![v.tr_b[10].clone()],
        vec![sum(&[(k(431, 64), &[&t25]), (k(-605, 8), &[&t22, t6])])],
    )
}

fn r47_14<R: Ring>(v: &InvariantData<R>) -> (Vec<R>, Vec<R>) {
    let b = &v.bundle;
    let c3 = pw(&b.c2, 3);
    (
        vec![v.tr_b[6].clone()],
        vec![sum(&[(k(794, 49), &[&c3]), (k(-13, 4), &[&b.c6])])],
    )
}

fn printed_components() -> (Vec<BivariatePoly>, Vec<BivariatePoly>) {
    let s23 = ExactScalar::sqrt_of(2, 3);
    let mut bv = vec![BivariatePoly::zero(); 27];
    bv[0] = poly(&[(2, 0, 1, 1), (0, 2, -1, 1)]).scale_exact(&s23);
    bv[1] = poly(&[(1, 1, 2, 1)]).scale_exact(&s23);
    bv[2] = poly(&[(2, 0, 1, 1), (0, 2, 1, 1)]).scale_exact(&ExactScalar::sqrt_of(4, 21));
    let mut dv = vec![BivariatePoly::zero(); 27];
    dv[0] = poly(&[(4, 0, 22, 21), (2, 2, -4, 1), (0, 4, 2, 7)]).scale_exact(&s23);
    dv[1] = poly(&[(3, 1, -40, 21), (1, 3, 24, 7)]).scale_exact(&s23);
    let c2 = poly(&[(2, 0, 1, 1), (0, 2, 1, 1)]);
    dv[2] = c2.pow(2).scale_exact(&(&rat(-4, 7) * &ExactScalar::sqrt_of(1, 21)));
    (bv, dv)
}

pub fn six_tensor_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "40.11",
            "T_iiklpq = (4/5)(22/21)(6/7) δ₍kl δpq₎",
            "k,l,p,q ∈ 1..14",
            |m| Ok(six_tensor_check(&m.sparse).0),
        ),
        IdentityCase::new("40.10", "S_iiklpq = 0", "k,l,p,q ∈ 1..14", |m| {
            Ok(six_tensor_check(&m.sparse).1)
        }),
        relation("47.8", "tr A⁶ = 26/49 (A·A)³ + 1/8 A·C", r47_8, Some(r47_8)),
    ]
}

pub fn invariant_relation_cases() -> Vec<IdentityCase> {
    vec![
        relation("40.1", "d_ijα d_klα A_j A_k A_l = 6/7 (A·A) A_i", r40_1, Some(r40_1)),
        relation("40.8", "B·D = A·C and B·B = 6/7 (A·A)²", r40_8, Some(r40_8)),
        slice_relation("41.2", "A·A = a² + b² and tr A² = 2 A·A", |v, _| {
            let c2 = poly(&[(2, 0, 1, 1), (0, 2, 1, 1)]);
            (
                vec![v.bundle.c2.clone(), v.tr_a[2].clone()],
                vec![c2.clone(), c2.scale(&q(2, 1))],
            )
        }),
        IdentityCase::new("41.3", "slice components of B_α and D_α", "α ∈ 1..27", |m| {
            let (data, _) = InvariantData::slice(m)?;
            let (bv, dv) = printed_components();
            let mut got = data.bundle.b.clone();
            got.extend(data.bundle.d.iter().cloned());
            let mut want = bv;
            want.extend(dv);
            Ok(compare_polys(&got, &want).detail("components=B1..B27,D1..D27"))
        }),
        slice_relation(
            "41.4",
            "C⁽⁶⁾ = 88/441 (C⁽²⁾)³ + 4/9 (a²−b²)(a⁴ − 14a²b² + b⁴)",
            |v, _| {
                let diff = &(&a() * &a()) - &(&b() * &b());
                let quartic = poly(&[(4, 0, 1, 1), (2, 2, -14, 1), (0, 4, 1, 1)]);
                let rhs = &v.bundle.c2.pow(3).scale(&q(88, 441)) + &(&diff * &quartic).scale(&q(4, 9));
                (vec![v.bundle.c6.clone()], vec![rhs])
            },
        ),
        slice_relation(
            "41.6",
            "C̃⁽⁶⁾ = 4/9 (a²−b²)(a²−4ab+b²)(a²+4ab+b²)",
            |_, s| {
                let diff = poly(&[(2, 0, 1, 1), (0, 2, -1, 1)]);
                let minus = poly(&[(2, 0, 1, 1), (1, 1, -4, 1), (0, 2, 1, 1)]);
                let plus = poly(&[(2, 0, 1, 1), (1, 1, 4, 1), (0, 2, 1, 1)]);
                (vec![s.c6_tilde()], vec![(&(&diff * &minus) * &plus).scale(&q(4, 9))])
            },
        ),
        relation("41.7", "D·D = 16/21 C⁽²⁾C⁽⁶⁾ + 88/343 (C⁽²⁾)⁴", r41_7, Some(r41_7)),
        relation(
            "41.9",
            "C·C = 16/147 (C⁽²⁾)² (11/3 C⁽⁶⁾ + 71/49 (C⁽²⁾)³)",
            r41_9,
            Some(r41_9),
        ),
        relation("28.3", "tr A⁴ = 1/4 (tr A²)²", r47_1, Some(r47_1)),
        relation("47.1", "tr A⁴ = 1/4 (tr A²)²", r47_1, Some(r47_1)),
        relation(
            "47.2",
            "det(t − A) = t⁷ − 1/2 t₂ t⁵ + 1/16 t₂² t³ + (1/96 t₂³ − 1/6 t₆) t",
            r47_2,
            Some(r47_2),
        ),
        relation("47.3A", "tr A⁸ = −5/192 t₂⁴ + 2/3 t₂ t₆", r47_3a, Some(r47_3a)),
        relation("47.3B", "tr A¹⁰ = −1/64 t₂⁵ + 5/16 t₂² t₆", r47_3b, Some(r47_3b)),
        relation("47.9", "tr B² = 4 t₂", r47_9, Some(r47_9)),
        relation("47.10", "tr B⁴ = 5/2 t₂²", r47_10, Some(r47_10)),
        relation("47.11", "tr B⁶ = 15/4 t₂³ − 26 t₆", r47_11, Some(r47_11)),
        relation("47.12", "tr B⁸ = 515/96 t₂⁴ − 160/3 t₂ t₆", r47_12, Some(r47_12)),
        relation("47.13", "tr B¹⁰ = 431/64 t₂⁵ − 605/8 t₂² t₆", r47_13, Some(r47_13)),
        relation("47.14", "tr B⁶ = 794/49 (C⁽²⁾)³ − 13/4 C⁽⁶⁾", r47_14, Some(r47_14)),
        IdentityCase::new("slice(1,0)", "values at (a,b) = (1,0)", "one point", |m| {
            let (data, _) = InvariantData::slice(m)?;
            let (one, zero) = (Rational::one(), Rational::zero());
            let at = |p: &BivariatePoly| p.eval(&one, &zero);
            let got = [
                at(&data.tr_a[6]),
                at(&data.bundle.c6),
                at(&data.tr_b[2]),
                at(&data.tr_b[6]),
            ];
            let want = [rat(11, 18), rat(284, 441), rat(8, 1), rat(127, 9)];
            let shown: Vec<String> = got.iter().map(render_scalar).collect();
            for (i, (g, w)) in got.iter().zip(&want).enumerate() {
                if g != w {
                    return Ok(Check::fail(Some(Witness::real(&[i], g, w))));
                }
            }
            Ok(Check::pass().detail(format!("trA6,C6,trB2,trB6={}", shown.join(","))))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_vectors_are_reproducible() {
        let x = random_vectors(3, 7);
        assert_eq!(x, random_vectors(3, 7));
        assert_ne!(x, random_vectors(3, 8));
        assert!(x.iter().flatten().all(|r| r.abs() <= q(5, 1)));
    }
}
