//! Values obtained by a second, independent route: naive loops over dense
//! entries, closed forms, or decomposition sums, compared exactly against
//! what the library computes.

use std::sync::OnceLock;

use g2kit::casimir::{c2, casimir_matrix, dim, quartic_casimir, slice_value, QuarticRep, SliceQuantity};
use g2kit::linalg::{char_poly, Matrix};
use g2kit::model::Model;
use g2kit::rational::{q, Rational};
use g2kit::scalar::{rat, ExactScalar};
use g2kit::tensors::{einsum, render_tensor, Tensor};

fn model() -> &'static Model {
    static M: OnceLock<Model> = OnceLock::new();
    M.get_or_init(|| Model::build().unwrap())
}

fn s(n: i64, d: i64) -> ExactScalar {
    rat(n, d)
}

fn sqrt(n: i64, d: i64) -> ExactScalar {
    ExactScalar::sqrt_of(n, d)
}

/// Plain coefficient-list product, lowest degree first.
fn poly_mul(a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
    let mut out = vec![ExactScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `tr K^p` for a real square matrix given as rows.
fn trace_power(k: &[Vec<ExactScalar>], p: u32) -> ExactScalar {
    let n = k.len();
    let mut acc: Vec<Vec<ExactScalar>> = k.to_vec();
    for _ in 1..p {
        let mut next = vec![vec![ExactScalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = ExactScalar::zero();
                for l in 0..n {
                    v = &v + &(&acc[i][l] * &k[l][j]);
                }
                next[i][j] = v;
            }
        }
        acc = next;
    }
    (0..n).fold(ExactScalar::zero(), |t, i| &t + &acc[i][i])
}

fn count_nonzero(t: &Tensor) -> usize {
    let d = t.dims();
    let mut n = 0;
    for i in 0..d[0] {
        for j in 0..d[1] {
            for k in 0..d[2] {
                if !t.get(&[i, j, k]).is_zero() {
                    n += 1;
                }
            }
        }
    }
    n
}

#[test]
fn inverse_multiplies_back_to_one() {
    let x = &(&ExactScalar::one() + &sqrt(2, 1)) + &sqrt(3, 1);
    let inv = x.invert().unwrap();
    assert_eq!(&x * &inv, ExactScalar::one());

    // Successive conjugates: (1+√2+√3)(1+√2−√3) = 2√2, so 1/x = (1+√2−√3)·√2/4.
    let conj = &(&ExactScalar::one() + &sqrt(2, 1)) - &sqrt(3, 1);
    let by_hand = &(&conj * &sqrt(2, 1)) * &s(1, 4);
    assert_eq!(inv, by_hand);
}

#[test]
fn char_poly_of_h1_diagonal_matches_product_of_factors() {
    let (a, b) = (sqrt(2, 3), sqrt(1, 6));
    let zero = ExactScalar::zero();
    let roots = [a.clone(), b.clone(), b.clone(), zero, -&b, -&b, -&a];

    let mut expanded = vec![ExactScalar::one()];
    for r in &roots {
        expanded = poly_mul(&expanded, &[-r, ExactScalar::one()]);
    }
    let closed = [
        s(0, 1),
        s(-1, 54),
        s(0, 1),
        s(1, 4),
        s(0, 1),
        s(-1, 1),
        s(0, 1),
        s(1, 1),
    ];
    assert_eq!(expanded, closed);

    let p = char_poly(&Matrix::diagonal(roots.to_vec()));
    assert_eq!(p.coeffs(), &closed[..]);
}

#[test]
fn h1_diagonal_is_the_slice_generator() {
    let h1 = &model().catalog.x[0];
    let want = [
        sqrt(2, 3),
        sqrt(1, 6),
        sqrt(1, 6),
        ExactScalar::zero(),
        -&sqrt(1, 6),
        -&sqrt(1, 6),
        -&sqrt(2, 3),
    ];
    for (k, w) in want.iter().enumerate() {
        assert_eq!(h1.get(k, k).clone().into_real("diagonal").unwrap(), *w);
    }
}

#[test]
fn contraction_order_does_not_matter() {
    let sp = &model().sparse;
    let (d, dy) = (&sp.d_ij, &sp.d_yyy);
    let direct = einsum("ija,jkb,abg->ikg", &[d, d, dy]);
    let first = einsum("ija,abg->ijbg", &[d, dy]);
    let staged = einsum("ijbg,jkb->ikg", &[&first, d]);
    assert_eq!(direct.first_difference(&staged), None);
    assert!(!direct.is_zero());
}

#[test]
fn z_gram_matrix_is_twice_identity() {
    let z = &model().catalog.z;
    for (a, za) in z.iter().enumerate() {
        for (b, zb) in z.iter().enumerate() {
            let mut t = g2kit::scalar::ComplexScalar::zero();
            for r in 0..7 {
                for c in 0..7 {
                    t = &t + &(za.get(r, c) * zb.get(c, r));
                }
            }
            let want = if a == b { 2 } else { 0 };
            assert_eq!(t, g2kit::scalar::ComplexScalar::from_integer(want), "({a},{b})");
        }
    }
}

#[test]
fn structure_constant_counts() {
    let c = &model().store.c_ijk;
    assert_eq!(count_nonzero(c), 180);
    assert_eq!(c.nnz(), 180);
    let mut independent = 0;
    for i in 0..14 {
        for j in i + 1..14 {
            for k in j + 1..14 {
                if !c.get(&[i, j, k]).is_zero() {
                    independent += 1;
                }
            }
        }
    }
    assert_eq!(independent * 6, 180);
}

#[test]
fn psi_file_has_42_entries() {
    let text = render_tensor(&model().store.psi_abc);
    let entries = text.lines().skip(2).filter(|l| !l.is_empty()).count();
    assert_eq!(entries, 42);
    assert_eq!(count_nonzero(&model().store.psi_abc), 42);
}

#[test]
fn d_ia_companion_constants() {
    let d = &model().store.d_ia_alpha;
    let (mut ij, mut ab) = (
        vec![vec![ExactScalar::zero(); 14]; 14],
        vec![vec![ExactScalar::zero(); 7]; 7],
    );
    for i in 0..14 {
        for a in 0..7 {
            for x in 0..27 {
                let v = d.get(&[i, a, x]);
                if v.is_zero() {
                    continue;
                }
                for j in 0..14 {
                    ij[i][j] = &ij[i][j] + &(v * d.get(&[j, a, x]));
                }
                for b in 0..7 {
                    ab[a][b] = &ab[a][b] + &(v * d.get(&[i, b, x]));
                }
            }
        }
    }
    for (m, k) in [(&ij, 6), (&ab, 12)] {
        for (r, row) in m.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(*v, s(if r == c { k } else { 0 }, 1), "({r},{c})");
            }
        }
    }
}

#[test]
fn dimensions_fill_tensor_products() {
    let d = |l, m| dim(l, m).to_string().parse::<u64>().unwrap();
    assert_eq!(d(0, 1), model().catalog.x[0].n() as u64);
    assert_eq!(d(1, 0), model().derived.ad[0].n() as u64);
    assert_eq!(d(0, 2), model().derived.phi[0].n() as u64);
    assert_eq!(1 + d(0, 2) + d(0, 1) + d(1, 0), 7 * 7);
    assert_eq!(d(0, 1) + d(0, 2) + d(1, 1), 7 * 14);
    assert_eq!(1 + d(0, 2) + d(2, 0) + d(1, 0) + d(0, 3), 14 * 14);
}

/// On `V⊗V` the Casimir of the sum generator traces to `2·dim(V)²·c₂(V)`
/// because the generators are traceless; the irreducible pieces must add up.
#[test]
fn casimir_values_fill_tensor_products() {
    let weighted = |pieces: &[(u64, u64)]| {
        pieces.iter().fold(Rational::zero(), |acc, &(l, m)| {
            let d: i64 = dim(l, m).to_string().parse().unwrap();
            &acc + &c2(l, m).mul_int(d)
        })
    };
    assert_eq!(weighted(&[(0, 0), (0, 2), (0, 1), (1, 0)]), c2(0, 1).mul_int(2 * 49));
    assert_eq!(
        weighted(&[(0, 0), (0, 2), (2, 0), (1, 0), (0, 3)]),
        c2(1, 0).mul_int(2 * 196)
    );
}

#[test]
fn casimir_values_match_matrix_sums() {
    let m = model();
    for (family, l, mu) in [(&m.catalog.x, 0, 1), (&m.derived.ad, 1, 0), (&m.derived.phi, 0, 2)] {
        let sum = casimir_matrix(family);
        let want = g2kit::scalar::ComplexScalar::from_rational(c2(l, mu));
        for k in 0..sum.n() {
            assert_eq!(*sum.get(k, k), want);
        }
    }
}

#[test]
fn quartic_scalars() {
    for (rep, literal) in [
        (QuarticRep::Seven, q(160, 3)),
        (QuarticRep::Fourteen, q(416, 3)),
        (QuarticRep::TwentySeven, q(1568, 9)),
    ] {
        let (l, mu) = rep.weight();
        let c = c2(l, mu);
        assert_eq!(&(&c * &c) + &(&q(28, 3) * &c), literal);
        assert_eq!(
            quartic_casimir(model(), rep).unwrap(),
            ExactScalar::from_rational(literal)
        );
    }
}

#[test]
fn slice_values_at_one_zero() {
    let m = model();
    let (one, zero) = (q(1, 1), q(0, 1));
    let at = |qty| slice_value(m, &one, &zero, qty).unwrap();

    let h1 = [
        sqrt(2, 3),
        sqrt(1, 6),
        sqrt(1, 6),
        ExactScalar::zero(),
        sqrt(1, 6),
        sqrt(1, 6),
        sqrt(2, 3),
    ];
    let tr_a6 = h1.iter().fold(ExactScalar::zero(), |t, x| &t + &x.pow(6));
    assert_eq!(tr_a6, s(11, 18));
    assert_eq!(at(SliceQuantity::TrA(6)), tr_a6);

    let c6 = at(SliceQuantity::C6);
    assert_eq!(c6, s(284, 441));
    assert_eq!(&s(26, 49) + &(&c6 * &s(1, 8)), tr_a6);

    // B = −i K with K_jk = c_1jk, so tr B^p = (−i)^p tr K^p.
    let c = &m.store.c_ijk;
    let k: Vec<Vec<ExactScalar>> = (0..14)
        .map(|j| (0..14).map(|l| c.get(&[0, j, l]).clone()).collect())
        .collect();
    let tr_b2 = -&trace_power(&k, 2);
    let tr_b6 = -&trace_power(&k, 6);
    assert_eq!(tr_b2, s(8, 1));
    assert_eq!(tr_b6, s(127, 9));
    assert_eq!(tr_b6, &(&s(15, 4) * &s(8, 1)) - &(&s(26, 1) * &s(11, 18)));
    assert_eq!(at(SliceQuantity::TrB(2)), tr_b2);
    assert_eq!(at(SliceQuantity::TrB(6)), tr_b6);
}

#[test]
fn zero_vector_gives_zero_invariants() {
    let zero = q(0, 1);
    for qty in [
        SliceQuantity::C2,
        SliceQuantity::C6,
        SliceQuantity::BB,
        SliceQuantity::DD,
        SliceQuantity::TrB(4),
    ] {
        assert!(slice_value(model(), &zero, &zero, qty).unwrap().is_zero());
    }
}
