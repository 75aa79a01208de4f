//! Defining 7×7 representations of b3 and g2 and the complementary
//! matrices z_a (b3 minus g2) and y_α (su(7) minus b3).
//!
//! Each lowering operator is given as a placement table of its lower
//! triangle; the raising operator is its transpose and the hermitian pair
//! `u = (e₊ + e₋)/√2`, `v = (e₊ − e₋)/(i√2)` enters the basis.

use crate::error::{Error, Result};
use crate::linalg::RepMatrix;
use crate::rational::{q, Rational};
use crate::scalar::{ComplexScalar, ExactScalar};

/// 1-based `(row, col, value)` entries.
type Placement = Vec<(usize, usize, ExactScalar)>;

pub const B3_ROOTS: [&str; 9] = ["1", "2", "3", "12", "23", "123", "233", "1233", "12233"];
pub const G2_ROOTS: [&str; 6] = ["1", "2", "12", "112", "1112", "11122"];

/// A positive root with its expansion in simple roots.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub label: &'static str,
    pub components: Vec<ExactScalar>,
    /// Multiplicity of each simple root.
    pub expansion: Vec<u32>,
    pub long: bool,
}

impl Root {
    pub fn height(&self) -> u32 {
        self.expansion.iter().sum()
    }

    pub fn norm_sqr(&self) -> ExactScalar {
        self.components.iter().map(|c| c * c).sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub name: &'static str,
    pub simple: Vec<Vec<ExactScalar>>,
    pub positive: Vec<Root>,
}

impl RootSystemData {
    fn from_expansions(
        name: &'static str,
        simple: Vec<Vec<ExactScalar>>,
        labels: &[&'static str],
        long_norm: ExactScalar,
    ) -> Self {
        let positive = labels
            .iter()
            .map(|&label| {
                // the label digits name the simple roots summed
                let mut expansion = vec![0u32; simple.len()];
                for ch in label.chars() {
                    expansion[ch.to_digit(10).expect("digit label") as usize - 1] += 1;
                }
                let mut components = vec![ExactScalar::zero(); simple[0].len()];
                for (k, &m) in expansion.iter().enumerate() {
                    for (c, s) in components.iter_mut().zip(&simple[k]) {
                        *c += &s.scale(&Rational::from_integer(m as i64));
                    }
                }
                let norm: ExactScalar = components.iter().map(|c| c * c).sum();
                Root {
                    label,
                    long: norm == long_norm,
                    components,
                    expansion,
                }
            })
            .collect();
        Self { name, simple, positive }
    }

    pub fn b3() -> Self {
        let v = |a: i64, b: i64, c: i64| {
            vec![
                ExactScalar::from_integer(a),
                ExactScalar::from_integer(b),
                ExactScalar::from_integer(c),
            ]
        };
        Self::from_expansions(
            "b3",
            vec![v(1, -1, 0), v(0, 1, -1), v(0, 0, 1)],
            &B3_ROOTS,
            ExactScalar::from_integer(2),
        )
    }

    pub fn g2() -> Self {
        Self::from_expansions(
            "g2",
            vec![
                vec![ExactScalar::sqrt_of(1, 6), -ExactScalar::sqrt_of(1, 2)],
                vec![ExactScalar::zero(), ExactScalar::sqrt_of(2, 1)],
            ],
            &G2_ROOTS,
            ExactScalar::from_integer(2),
        )
    }

    pub fn root(&self, label: &str) -> &Root {
        self.positive
            .iter()
            .find(|r| r.label == label)
            .unwrap_or_else(|| panic!("no root {label} in {}", self.name))
    }
}

fn real(x: ExactScalar) -> ComplexScalar {
    ComplexScalar::real(x)
}

fn place(entries: &Placement) -> RepMatrix {
    let mut m = RepMatrix::zeros(7);
    for (r, c, v) in entries {
        m.set(r - 1, c - 1, real(v.clone()));
    }
    m
}

fn diag(entries: [ExactScalar; 7]) -> RepMatrix {
    RepMatrix::diagonal(entries.into_iter().map(real).collect())
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(n)
}

/// `(u, v)` from a lowering operator with real entries.
pub fn hermitian_pair(lowering: &RepMatrix) -> (RepMatrix, RepMatrix) {
    let raising = lowering.transpose();
    let inv_sqrt2 = real(ExactScalar::sqrt_of(1, 2));
    let u = (&raising + lowering).scale(&inv_sqrt2);
    let v = (&raising - lowering).scale(&inv_sqrt2).mul_neg_i();
    (u, v)
}

/// Lowering operator tables: first entry `+1`, second `−1`.
fn b3_lowering_table(root: &str) -> Placement {
    let (a, b) = match root {
        "1" => ((2, 1), (7, 6)),
        "2" => ((3, 2), (6, 5)),
        "3" => ((4, 3), (5, 4)),
        "12" => ((3, 1), (7, 5)),
        "23" => ((4, 2), (6, 4)),
        "123" => ((4, 1), (7, 4)),
        "233" => ((5, 2), (6, 3)),
        "1233" => ((5, 1), (7, 3)),
        "12233" => ((6, 1), (7, 2)),
        _ => unreachable!("unknown b3 root {root}"),
    };
    vec![(a.0, a.1, int(1)), (b.0, b.1, int(-1))]
}

fn g2_lowering_table(root: &str) -> Placement {
    let c = ExactScalar::sqrt_of(2, 3);
    let s = ExactScalar::sqrt_of(1, 3);
    let one = int(1);
    match root {
        "1" => vec![(2, 1, s.clone()), (4, 3, c.clone()), (5, 4, -&c), (7, 6, -&s)],
        "2" => vec![(3, 2, one.clone()), (6, 5, -&one)],
        "12" => vec![(3, 1, s.clone()), (4, 2, -&c), (6, 4, c.clone()), (7, 5, -&s)],
        "112" => vec![(4, 1, c.clone()), (5, 2, s.clone()), (6, 3, -&s), (7, 4, -&c)],
        "1112" => vec![(5, 1, one.clone()), (7, 3, -&one)],
        "11122" => vec![(6, 1, one.clone()), (7, 2, -&one)],
        _ => unreachable!("unknown g2 root {root}"),
    }
}

/// The lowering parts `e'_{−n}` of the z matrices.
fn z_lowering_table(n: usize) -> Placement {
    let c = ExactScalar::sqrt_of(2, 3);
    let s = ExactScalar::sqrt_of(1, 3);
    match n {
        1 => vec![(2, 1, -&c), (4, 3, s.clone()), (5, 4, -&s), (7, 6, c.clone())],
        2 => vec![(3, 1, c.clone()), (4, 2, s.clone()), (6, 4, -&s), (7, 5, -&c)],
        3 => vec![(4, 1, s.clone()), (5, 2, -&c), (6, 3, c.clone()), (7, 4, -&s)],
        _ => unreachable!(),
    }
}

/// The lowering parts `ρ_{−n}` of the y matrices.
fn y_lowering_table(n: usize) -> Placement {
    let one = int(1);
    let r2 = ExactScalar::sqrt_of(2, 1);
    let pair = |a: (usize, usize), b: (usize, usize)| vec![(a.0, a.1, one.clone()), (b.0, b.1, one.clone())];
    match n {
        1 => pair((2, 1), (7, 6)),
        2 => pair((3, 2), (6, 5)),
        3 => pair((4, 3), (5, 4)),
        4 => pair((3, 1), (7, 5)),
        5 => pair((4, 2), (6, 4)),
        6 => pair((4, 1), (7, 4)),
        7 => pair((5, 2), (6, 3)),
        8 => pair((5, 1), (7, 3)),
        9 => pair((6, 1), (7, 2)),
        10 => vec![(7, 1, r2)],
        11 => vec![(6, 2, r2)],
        12 => vec![(5, 3, r2)],
        _ => unreachable!(),
    }
}

/// Cartan subalgebra, lowering operators and hermitian basis of one algebra.
#[derive(Clone, Debug)]
pub struct CartanWeyl {
    pub roots: RootSystemData,
    pub cartan: Vec<RepMatrix>,
    /// Lowering operators in root order.
    pub lowering: Vec<RepMatrix>,
}

impl CartanWeyl {
    pub fn lowering_op(&self, label: &str) -> &RepMatrix {
        let k = self
            .roots
            .positive
            .iter()
            .position(|r| r.label == label)
            .expect("root label");
        &self.lowering[k]
    }

    pub fn raising_op(&self, label: &str) -> RepMatrix {
        self.lowering_op(label).transpose()
    }

    /// Cartan first, then every `u`, then every `v`.
    pub fn hermitian_basis(&self) -> Vec<RepMatrix> {
        let pairs: Vec<_> = self.lowering.iter().map(hermitian_pair).collect();
        let mut out = self.cartan.clone();
        out.extend(pairs.iter().map(|p| p.0.clone()));
        out.extend(pairs.iter().map(|p| p.1.clone()));
        out
    }

    /// `Σ_q coeffs[q]·cartan[q]`.
    fn cartan_combination(&self, coeffs: &[ExactScalar]) -> RepMatrix {
        let mut out = RepMatrix::zeros(7);
        for (h, c) in self.cartan.iter().zip(coeffs) {
            out.add_scaled(&real(c.clone()), h);
        }
        out
    }

    /// Checks `[h_q, e₋α] = −α_q e₋α` and `[e₊α, e₋α] = α·h` for every
    /// positive root.
    pub fn check_cartan_weyl(&self) -> Result<()> {
        for (root, low) in self.roots.positive.iter().zip(&self.lowering) {
            for (q, h) in self.cartan.iter().enumerate() {
                let expected = low.scale(&real(-&root.components[q]));
                if h.commutator(low) != expected {
                    return Err(Error::consistency(format!(
                        "{}: [h{}, e-{}] is not -R·h e-{}",
                        self.roots.name,
                        q + 1,
                        root.label,
                        root.label
                    )));
                }
            }
            let up = low.transpose();
            if up.commutator(low) != self.cartan_combination(&root.components) {
                return Err(Error::consistency(format!(
                    "{}: [e{}, e-{}] is not R·h",
                    self.roots.name, root.label, root.label
                )));
            }
        }
        Ok(())
    }
}

pub fn build_b3_cartan_weyl() -> CartanWeyl {
    CartanWeyl {
        roots: RootSystemData::b3(),
        cartan: vec![
            diag([int(1), int(0), int(0), int(0), int(0), int(0), int(-1)]),
            diag([int(0), int(1), int(0), int(0), int(0), int(-1), int(0)]),
            diag([int(0), int(0), int(1), int(0), int(-1), int(0), int(0)]),
        ],
        lowering: B3_ROOTS.iter().map(|r| place(&b3_lowering_table(r))).collect(),
    }
}

pub fn build_g2_cartan_weyl() -> CartanWeyl {
    let c = ExactScalar::sqrt_of(2, 3);
    let j = ExactScalar::sqrt_of(1, 6);
    let k = ExactScalar::sqrt_of(1, 2);
    let z = ExactScalar::zero();
    CartanWeyl {
        roots: RootSystemData::g2(),
        cartan: vec![
            diag([c.clone(), j.clone(), j.clone(), z.clone(), -&j, -&j, -&c]),
            diag([z.clone(), k.clone(), -&k, z.clone(), k.clone(), -&k, z]),
        ],
        lowering: G2_ROOTS.iter().map(|r| place(&g2_lowering_table(r))).collect(),
    }
}

/// The 21 matrices `x_μ` of b3: `k₁..k₃`, nine `u`, nine `v`.
pub fn build_b3_defining() -> Vec<RepMatrix> {
    build_b3_cartan_weyl().hermitian_basis()
}

/// The five brackets of g2 beyond the generic Cartan–Weyl relations.
pub fn check_g2_extra_brackets(g2: &CartanWeyl) -> Result<()> {
    let e = |l: &str| g2.raising_op(l);
    let two_over_sqrt3 = ExactScalar::sqrt_of(4, 3);
    let cases: [(&str, &str, &str, ExactScalar); 5] = [
        ("1", "2", "12", int(1)),
        ("12", "1", "112", two_over_sqrt3),
        ("1", "112", "1112", int(1)),
        ("2", "1112", "11122", int(1)),
        ("112", "12", "11122", int(1)),
    ];
    for (a, b, out, k) in cases {
        if e(a).commutator(&e(b)) != e(out).scale(&real(k.clone())) {
            return Err(Error::consistency(format!("g2: [E{a}, E{b}] is not {k} E{out}")));
        }
    }
    Ok(())
}

/// g2 generators as combinations of b3 generators.
pub fn check_embedding(g2: &CartanWeyl, b3: &CartanWeyl) -> Result<()> {
    let c = ExactScalar::sqrt_of(2, 3);
    let s = ExactScalar::sqrt_of(1, 3);
    let combo = |terms: &[(ExactScalar, RepMatrix)]| {
        let mut m = RepMatrix::zeros(7);
        for (k, t) in terms {
            m.add_scaled(&real(k.clone()), t);
        }
        m
    };
    let k = &b3.cartan;
    let eb = |l: &str| b3.raising_op(l);
    let h1 = ExactScalar::sqrt_of(1, 6);
    let h2 = ExactScalar::sqrt_of(1, 2);
    let checks: Vec<(&str, RepMatrix, RepMatrix)> = vec![
        (
            "H1",
            g2.cartan[0].clone(),
            combo(&[
                (h1.scale(&q(2, 1)), k[0].clone()),
                (h1.clone(), k[1].clone()),
                (h1, k[2].clone()),
            ]),
        ),
        (
            "H2",
            g2.cartan[1].clone(),
            combo(&[(h2.clone(), k[1].clone()), (-&h2, k[2].clone())]),
        ),
        (
            "E1",
            g2.raising_op("1"),
            combo(&[(s.clone(), eb("1")), (c.clone(), eb("3"))]),
        ),
        ("E2", g2.raising_op("2"), eb("2")),
        (
            "E12",
            g2.raising_op("12"),
            combo(&[(s.clone(), eb("12")), (-&c, eb("23"))]),
        ),
        ("E112", g2.raising_op("112"), combo(&[(c, eb("123")), (s, eb("233"))])),
        ("E1112", g2.raising_op("1112"), eb("1233")),
        ("E11122", g2.raising_op("11122"), eb("12233")),
    ];
    for (name, lhs, rhs) in checks {
        if lhs != rhs {
            return Err(Error::consistency(format!(
                "g2 embedding: {name} is not the stated b3 combination"
            )));
        }
    }
    Ok(())
}

/// The 14 matrices `x_i` of g2: `h₁, h₂`, six `u`, six `v`. The Cartan–Weyl
/// relations, the extra brackets and the embedding in b3 are checked before
/// returning.
pub fn build_g2_defining() -> Result<Vec<RepMatrix>> {
    let g2 = build_g2_cartan_weyl();
    let b3 = build_b3_cartan_weyl();
    g2.check_cartan_weyl()?;
    check_g2_extra_brackets(&g2)?;
    check_embedding(&g2, &b3)?;
    Ok(g2.hermitian_basis())
}

/// The 7 matrices `z_a`.
pub fn build_z() -> Vec<RepMatrix> {
    let s = ExactScalar::sqrt_of(1, 3);
    let mut z: Vec<Option<RepMatrix>> = vec![None; 7];
    z[3] = Some(diag(
        [int(1), int(-1), int(-1), int(0), int(1), int(1), int(-1)].map(|v| &v * &s),
    ));
    // (n, slot of u, slot of v), 1-based
    for (n, u_slot, v_slot) in [(1, 7, 1), (2, 6, 2), (3, 5, 3)] {
        let (u, v) = hermitian_pair(&place(&z_lowering_table(n)));
        z[u_slot - 1] = Some(u);
        z[v_slot - 1] = Some(v);
    }
    z.into_iter().map(|m| m.expect("every slot filled")).collect()
}

/// The 27 matrices `y_α`: three diagonals, then `u, v` for each of the
/// twelve `ρ_{−n}`.
pub fn build_y() -> Vec<RepMatrix> {
    let scaled = |entries: [i64; 7], k: ExactScalar| diag(entries.map(|v| &int(v) * &k));
    let mut y = vec![
        scaled([2, -1, -1, 0, -1, -1, 2], ExactScalar::sqrt_of(1, 6)),
        scaled([0, 1, -1, 0, -1, 1, 0], ExactScalar::sqrt_of(1, 2)),
        scaled([1, 1, 1, -6, 1, 1, 1], ExactScalar::sqrt_of(1, 21)),
    ];
    for n in 1..=12 {
        let (u, v) = hermitian_pair(&place(&y_lowering_table(n)));
        y.push(u);
        y.push(v);
    }
    y
}

/// The reversal matrix: ones on the main antidiagonal.
pub fn reversal_matrix() -> RepMatrix {
    RepMatrix::from_fn(7, |r, c| {
        if r + c == 6 {
            ComplexScalar::one()
        } else {
            ComplexScalar::zero()
        }
    })
}

/// Every matrix family with fixed index conventions (0-based in code).
#[derive(Clone, Debug)]
pub struct BasisCatalog {
    pub b3: Vec<RepMatrix>,
    pub x: Vec<RepMatrix>,
    pub z: Vec<RepMatrix>,
    pub y: Vec<RepMatrix>,
    pub m: RepMatrix,
    /// `√(2/3)`
    pub c: ExactScalar,
    /// `√(1/3)`
    pub s: ExactScalar,
}

impl BasisCatalog {
    pub fn build() -> Result<Self> {
        Ok(Self {
            b3: build_b3_defining(),
            x: build_g2_defining()?,
            z: build_z(),
            y: build_y(),
            m: reversal_matrix(),
            c: ExactScalar::sqrt_of(2, 3),
            s: ExactScalar::sqrt_of(1, 3),
        })
    }

    /// `x`, then `z`, then `y`: 48 matrices spanning traceless 7×7 matrices.
    pub fn all48(&self) -> Vec<&RepMatrix> {
        self.x.iter().chain(&self.z).chain(&self.y).collect()
    }

    /// Coefficients of a traceless matrix against the 48-element basis,
    /// using `tr(λ_A λ_B) = 2δ_AB`; also returns the exact residual.
    pub fn decompose(&self, m: &RepMatrix) -> (Vec<ComplexScalar>, RepMatrix) {
        let half = q(1, 2);
        let mut residual = m.clone();
        let coeffs: Vec<ComplexScalar> = self
            .all48()
            .into_iter()
            .map(|b| {
                let k = m.trace_product(b).scale(&half);
                residual.add_scaled(&-&k, b);
                k
            })
            .collect();
        (coeffs, residual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram_is_2delta(ms: &[&RepMatrix]) -> bool {
        let two = ComplexScalar::from_integer(2);
        ms.iter().enumerate().all(|(i, a)| {
            ms.iter().enumerate().all(|(j, b)| {
                let t = a.trace_product(b);
                if i == j {
                    t == two
                } else {
                    t.is_zero()
                }
            })
        })
    }

    #[test]
    fn root_data() {
        let b3 = RootSystemData::b3();
        let short: Vec<_> = b3.positive.iter().filter(|r| !r.long).map(|r| r.label).collect();
        assert_eq!(short, ["3", "23", "123"]);
        assert_eq!(b3.root("12233").components, vec![int(1), int(1), int(0)]);
        assert_eq!(b3.root("1233").height(), 4);
        let g2 = RootSystemData::g2();
        for r in &g2.positive {
            let expected = if ["1", "12", "112"].contains(&r.label) {
                ExactScalar::from_rational(q(2, 3))
            } else {
                int(2)
            };
            assert_eq!(r.norm_sqr(), expected, "{}", r.label);
            assert_eq!(r.long, expected == int(2));
        }
    }

    #[test]
    fn b3_basis() {
        let b3 = build_b3_cartan_weyl();
        b3.check_cartan_weyl().unwrap();
        let x = b3.hermitian_basis();
        assert_eq!(x.len(), 21);
        assert!(gram_is_2delta(&x.iter().collect::<Vec<_>>()));
        let m = reversal_matrix();
        for a in &x {
            assert!(a.is_hermitian());
            assert_eq!(a.transpose(), (&(&m * a) * &m).neg());
        }
    }

    #[test]
    fn g2_basis() {
        let x = build_g2_defining().unwrap();
        assert_eq!(x.len(), 14);
        let d = ExactScalar::sqrt_of(1, 6);
        let h1_diag: Vec<_> = (0..7).map(|i| x[0].get(i, i).re.clone()).collect();
        assert_eq!(h1_diag[0], ExactScalar::radical(3, q(1, 3)));
        assert_eq!(h1_diag[1], d);
        assert_eq!(h1_diag[6], -ExactScalar::radical(3, q(1, 3)));
        // the g2 span sits inside the b3 span
        let b3 = build_b3_defining();
        for a in &x {
            let mut r = a.clone();
            for b in &b3 {
                let k = a.trace_product(b).scale(&q(1, 2));
                r.add_scaled(&-&k, b);
            }
            assert!(r.is_zero());
        }
    }

    #[test]
    fn forty_eight_matrices() {
        let cat = BasisCatalog::build().unwrap();
        let all = cat.all48();
        assert_eq!(all.len(), 48);
        assert!(gram_is_2delta(&all));
        for a in &all {
            assert!(a.is_hermitian());
            assert!(a.trace().is_zero());
        }
        let z4 = &cat.z[3];
        assert_eq!(z4.get(0, 0).re, ExactScalar::sqrt_of(1, 3));
        assert_eq!(z4.get(1, 1).re, -ExactScalar::sqrt_of(1, 3));
        let y3 = &cat.y[2];
        assert_eq!(y3.get(3, 3).re, ExactScalar::sqrt_of(1, 21).scale(&q(-6, 1)));
        let m = &cat.m;
        for a in &cat.y {
            assert_eq!(a.transpose(), &(m * a) * m);
        }
        for a in cat.x.iter().chain(&cat.z) {
            assert_eq!(a.transpose(), (&(m * a) * m).neg());
        }
    }
}
