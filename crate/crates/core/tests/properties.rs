use std::sync::OnceLock;

use num_integer::Integer;
use proptest::prelude::*;

use g2kit::casimir::{slice_value, AdjointVectorBundle, SliceQuantity};
use g2kit::cli;
use g2kit::linalg::{char_poly, Matrix};
use g2kit::model::Model;
use g2kit::rational::{q, Rational};
use g2kit::scalar::{ComplexScalar, ExactScalar};
use g2kit::tensors::{parse_tensor, render_tensor, Tensor};

fn model() -> &'static Model {
    static M: OnceLock<Model> = OnceLock::new();
    M.get_or_init(|| Model::build().unwrap())
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| q(n, d))
}

fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
    proptest::collection::vec(arb_rational(), 8).prop_map(|v| ExactScalar::from_coeffs(v.try_into().unwrap()))
}

fn arb_vector(n: usize) -> impl Strategy<Value = Vec<ExactScalar>> {
    proptest::collection::vec(arb_rational().prop_map(ExactScalar::from_rational), n)
}

fn ex(n: i64, d: i64) -> ExactScalar {
    ExactScalar::from_rational(q(n, d))
}

fn lowest_terms(x: &ExactScalar) -> bool {
    x.coeffs()
        .iter()
        .all(|c| c.denom() > 0.into() && c.numer().gcd(&c.denom()) == 1.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficients_stay_in_lowest_terms(x in arb_scalar(), y in arb_scalar()) {
        prop_assert!(lowest_terms(&(&x * &y)));
        prop_assert!(lowest_terms(&(&x + &y)));
        if !y.is_zero() {
            let quotient = &x * &y.invert().unwrap();
            prop_assert!(lowest_terms(&quotient));
            prop_assert_eq!(&quotient * &y, x);
        }
    }

    #[test]
    fn conjugation_and_norm(re in arb_scalar(), im in arb_scalar()) {
        let z = ComplexScalar::new(re.clone(), im.clone());
        let zc = z.conj();
        prop_assert_eq!(&zc + &z, ComplexScalar::real(&re + &re));
        prop_assert_eq!(&z - &zc, ComplexScalar::imag(&im + &im));
        let n = z.norm_sqr();
        prop_assert_eq!(&n, &(&(&re * &re) + &(&im * &im)));
        prop_assert_eq!(n.is_zero(), z.is_zero());
        prop_assert_eq!(&z * &zc, ComplexScalar::real(n));
    }

    #[test]
    fn char_poly_of_triangular_matrix(diag in arb_vector(5), upper in arb_vector(10)) {
        let mut above = upper.into_iter();
        let m = Matrix::from_fn(5, |r, c| match r.cmp(&c) {
            std::cmp::Ordering::Equal => diag[r].clone(),
            std::cmp::Ordering::Less => above.next().unwrap(),
            std::cmp::Ordering::Greater => ExactScalar::zero(),
        });
        let p = char_poly(&m);
        prop_assert_eq!(p.degree(), Some(5));
        prop_assert!(!p.coeffs().last().unwrap().is_zero());
        for root in &diag {
            prop_assert!(p.eval(root).is_zero());
        }
        prop_assert_eq!(p.coeff(4), -&diag.iter().fold(ExactScalar::zero(), |s, x| &s + x));
    }

    #[test]
    fn tensor_text_round_trip(entries in proptest::collection::vec(((0usize..3, 0usize..4, 0usize..2), arb_scalar()), 0..10)) {
        let mut t = Tensor::zeros("sample", &[3, 4, 2]);
        for ((i, j, k), v) in entries {
            t.set(&[i, j, k], v);
        }
        let back = parse_tensor(&render_tensor(&t)).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn generic_combinations_are_hermitian_and_traceless(r in arb_vector(14), s in arb_vector(14)) {
        let x = &model().catalog.x;
        let combine = |v: &[ExactScalar]| {
            let mut acc = g2kit::linalg::RepMatrix::zeros(7);
            for (k, m) in v.iter().zip(x) {
                acc.add_scaled(&ComplexScalar::real(k.clone()), m);
            }
            acc
        };
        let (a, b) = (combine(&r), combine(&s));
        prop_assert!(a.is_hermitian());
        prop_assert!(a.trace().is_zero());
        let dot = r.iter().zip(&s).fold(ExactScalar::zero(), |t, (p, q)| &t + &(p * q));
        prop_assert_eq!(a.trace_product(&b), ComplexScalar::real(&dot + &dot));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// `B·D = A·C`, `B·B = 6/7 (A·A)²` and the cubic identity for arbitrary
    /// rational adjoint vectors.
    #[test]
    fn adjoint_bundle_relations(a in arb_vector(14)) {
        let s = &model().sparse;
        let bundle = AdjointVectorBundle::new(a.clone(), s);
        prop_assert_eq!(&bundle.bd, &bundle.c6);
        prop_assert_eq!(&bundle.bb, &(&ex(6, 7) * &(&bundle.c2 * &bundle.c2)));
        let k = &ex(6, 7) * &bundle.c2;
        let want: Vec<ExactScalar> = a.iter().map(|x| &k * x).collect();
        prop_assert_eq!(bundle.cubic_vector(s), want);
    }

    /// The slice polynomials agree with the full-vector bundle at `A = (a, b, 0, ...)`.
    #[test]
    fn slice_matches_full_vector(a in arb_rational(), b in arb_rational()) {
        let mut v = vec![ExactScalar::zero(); 14];
        v[0] = ExactScalar::from_rational(a.clone());
        v[1] = ExactScalar::from_rational(b.clone());
        let bundle = AdjointVectorBundle::new(v, &model().sparse);
        let at = |qty| slice_value(model(), &a, &b, qty).unwrap();
        prop_assert_eq!(at(SliceQuantity::C2), bundle.c2.clone());
        prop_assert_eq!(at(SliceQuantity::C6), bundle.c6.clone());
        prop_assert_eq!(at(SliceQuantity::DD), bundle.dd.clone());

        let (ea, eb) = (ExactScalar::from_rational(a.clone()), ExactScalar::from_rational(b.clone()));
        let (a2, b2, ab) = (&ea * &ea, &eb * &eb, &ea * &eb);
        prop_assert_eq!(&bundle.c2, &(&a2 + &b2));
        let f1 = &a2 - &b2;
        let f2 = &(&a2 + &b2) - &(&ex(4, 1) * &ab);
        let f3 = &(&a2 + &b2) + &(&ex(4, 1) * &ab);
        prop_assert_eq!(at(SliceQuantity::C6Tilde), &ex(4, 9) * &(&f1 * &(&f2 * &f3)));
    }

    #[test]
    fn cli_reads_exact_fractions(a in arb_rational(), b in arb_rational()) {
        let (sa, sb) = (a.to_string(), b.to_string());
        let mut out = Vec::new();
        let code = cli::run(
            ["g2kit", "slice", "--a", &sa, "--b", &sb, "--quantity", "C2"],
            &mut out,
            &mut Vec::new(),
        );
        prop_assert_eq!(code, cli::EXIT_OK);
        let want = &(&a * &a) + &(&b * &b);
        let text = String::from_utf8(out).unwrap();
        prop_assert_eq!(text.trim(), want.to_string());
    }
}
