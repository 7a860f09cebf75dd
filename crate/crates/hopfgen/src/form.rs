//! Linear and bilinear forms on a Hopf algebra, with the convolution product.
//!
//! Convolution of linear forms is `(f * g)(x) = f(x_1) g(x_2)`; for bilinear
//! forms it is `(f * g)(x, y) = f(x_1, y_1) g(x_2, y_2)`. The unit is the
//! counit (resp. `eps (x) eps`). Inverses are found by one exact linear solve
//! on the basis and then verified on both sides. On top of convolution sit
//! the two-cocycle condition, laziness, and the cohomology-style transform of
//! a cocycle by an invertible linear form.

use num::traits::Zero;

use crate::error::Error;
use crate::hopf::HopfAlgebra;
use crate::linalg;
use crate::scalar::{self, Scalar};
use crate::tensor::Vect;

/// A linear form, stored as its values on the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    pub values: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(values: Vec<Scalar>) -> Self {
        LinearForm { values }
    }

    /// The counit of `h`, the unit of convolution.
    pub fn counit(h: &HopfAlgebra) -> Self {
        LinearForm::new(h.counit_row().to_vec())
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn apply(&self, v: &Vect) -> Scalar {
        v.pair(&self.values)
    }
}

/// A bilinear form, stored as the matrix of its values on basis pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    pub values: Vec<Vec<Scalar>>,
}

impl BilinearForm {
    pub fn new(values: Vec<Vec<Scalar>>) -> Self {
        BilinearForm { values }
    }

    /// The trivial cocycle `eps (x) eps`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let eps = h.counit_row();
        BilinearForm::new(
            eps.iter()
                .map(|a| eps.iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i][j]
    }

    pub fn apply(&self, v: &Vect, w: &Vect) -> Scalar {
        let mut s = Scalar::zero();
        for (i, a) in v.support() {
            for (j, b) in w.support() {
                s += a * b * &self.values[i][j];
            }
        }
        s
    }
}

/// Convolution product of linear forms on `h`.
pub fn convolve_linear(h: &HopfAlgebra, f: &LinearForm, g: &LinearForm) -> LinearForm {
    let n = h.dim();
    let values = (0..n)
        .map(|i| {
            let mut s = Scalar::zero();
            for (idx, c) in &h.comult_basis(i).terms {
                s += c * &f.values[idx[0]] * &g.values[idx[1]];
            }
            s
        })
        .collect();
    LinearForm::new(values)
}

/// Convolution product of bilinear forms on `h`.
pub fn convolve_bilinear(h: &HopfAlgebra, f: &BilinearForm, g: &BilinearForm) -> BilinearForm {
    let n = h.dim();
    let values = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Scalar::zero();
                    for (di, ci) in &h.comult_basis(i).terms {
                        for (dj, cj) in &h.comult_basis(j).terms {
                            s += ci * cj * &f.values[di[0]][dj[0]] * &g.values[di[1]][dj[1]];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    BilinearForm::new(values)
}

/// Convolution inverse of a linear form, solving the exact `n x n` system and
/// verifying both sides.
pub fn invert_linear(h: &HopfAlgebra, f: &LinearForm) -> Result<LinearForm, Error> {
    let n = h.dim();
    // unknown g: sum over Delta(x_i) of f(x_a) g(x_b) = eps(x_i)
    let mut a = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for (idx, c) in &h.comult_basis(i).terms {
            let coeff = c * &f.values[idx[0]];
            a[i][idx[1]] += coeff;
        }
    }
    let rhs = h.counit_row().to_vec();
    let g = linalg::solve(&a, &rhs)
        .map(LinearForm::new)
        .ok_or_else(|| Error::NotInvertible("linear form".to_string()))?;
    let eps = LinearForm::counit(h);
    if convolve_linear(h, f, &g) != eps || convolve_linear(h, &g, f) != eps {
        return Err(Error::NotInvertible(
            "one-sided convolution inverse only".to_string(),
        ));
    }
    Ok(g)
}

/// Convolution inverse of a bilinear form (one exact solve of size `n^2`,
/// verified two-sided).
pub fn invert_bilinear(h: &HopfAlgebra, f: &BilinearForm) -> Result<BilinearForm, Error> {
    let n = h.dim();
    let flat = |i: usize, j: usize| i * n + j;
    let mut a = vec![vec![Scalar::zero(); n * n]; n * n];
    let mut rhs = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            for (di, ci) in &h.comult_basis(i).terms {
                for (dj, cj) in &h.comult_basis(j).terms {
                    let coeff = ci * cj * &f.values[di[0]][dj[0]];
                    a[flat(i, j)][flat(di[1], dj[1])] += coeff;
                }
            }
            rhs[flat(i, j)] = &h.counit_row()[i] * &h.counit_row()[j];
        }
    }
    let sol = linalg::solve(&a, &rhs)
        .ok_or_else(|| Error::NotInvertible("bilinear form".to_string()))?;
    let g = BilinearForm::new(
        (0..n)
            .map(|i| (0..n).map(|j| sol[flat(i, j)].clone()).collect())
            .collect(),
    );
    let eps2 = BilinearForm::trivial(h);
    if convolve_bilinear(h, f, &g) != eps2 || convolve_bilinear(h, &g, f) != eps2 {
        return Err(Error::NotInvertible(
            "one-sided convolution inverse only".to_string(),
        ));
    }
    Ok(g)
}

/// Outcome of an identity checked over all basis tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Holds,
    /// The identity fails; carries the offending basis tuple and both sides.
    Fails {
        location: String,
        lhs: String,
        rhs: String,
    },
    /// The check does not apply (its precondition fails); carries the reason.
    Skipped(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn summary(&self) -> String {
        match self {
            Verdict::Holds => "holds".to_string(),
            Verdict::Fails { location, lhs, rhs } => {
                format!("fails at {location}: {lhs} != {rhs}")
            }
            Verdict::Skipped(reason) => format!("skipped: {reason}"),
        }
    }
}

/// Checks the two-cocycle identity
/// `alpha(x_1, y_1) alpha(x_2 y_2, z) = alpha(y_1, z_1) alpha(x, y_2 z_2)`
/// on all basis triples.
pub fn is_two_cocycle(h: &HopfAlgebra, alpha: &BilinearForm) -> Verdict {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let zk = Vect::basis(n, k);
                let xi = Vect::basis(n, i);
                let mut lhs = Scalar::zero();
                for (di, ci) in &h.comult_basis(i).terms {
                    for (dj, cj) in &h.comult_basis(j).terms {
                        let prod = h.mul_basis(di[1], dj[1]);
                        lhs += ci * cj * alpha.at(di[0], dj[0]) * alpha.apply(prod, &zk);
                    }
                }
                let mut rhs = Scalar::zero();
                for (dj, cj) in &h.comult_basis(j).terms {
                    for (dk, ck) in &h.comult_basis(k).terms {
                        let prod = h.mul_basis(dj[1], dk[1]);
                        rhs += cj * ck * alpha.at(dj[0], dk[0]) * alpha.apply(&xi, prod);
                    }
                }
                if lhs != rhs {
                    return Verdict::Fails {
                        location: format!(
                            "({}, {}, {})",
                            h.basis_name(i),
                            h.basis_name(j),
                            h.basis_name(k)
                        ),
                        lhs: scalar::render(&lhs),
                        rhs: scalar::render(&rhs),
                    };
                }
            }
        }
    }
    Verdict::Holds
}

/// Checks laziness: `alpha(x_1, y_1) x_2 y_2 = alpha(x_2, y_2) x_1 y_1` on all
/// basis pairs.
pub fn is_lazy(h: &HopfAlgebra, alpha: &BilinearForm) -> Verdict {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Vect::zero(n);
            let mut rhs = Vect::zero(n);
            for (di, ci) in &h.comult_basis(i).terms {
                for (dj, cj) in &h.comult_basis(j).terms {
                    let c = ci * cj;
                    lhs.add_scaled(
                        h.mul_basis(di[1], dj[1]),
                        &(&c * alpha.at(di[0], dj[0])),
                    );
                    rhs.add_scaled(
                        h.mul_basis(di[0], dj[0]),
                        &(&c * alpha.at(di[1], dj[1])),
                    );
                }
            }
            if lhs != rhs {
                return Verdict::Fails {
                    location: format!("({}, {})", h.basis_name(i), h.basis_name(j)),
                    lhs: h.render_vect(&lhs),
                    rhs: h.render_vect(&rhs),
                };
            }
        }
    }
    Verdict::Holds
}

/// The transform `beta(x, y) = lam(x_1) lam(y_1) alpha(x_2, y_2) lam^{-1}(x_3 y_3)`
/// of a cocycle by a convolution-invertible linear form. When `alpha` is a
/// two-cocycle, so is the result (re-checked by callers that need it).
pub fn cohomologous_transform(
    h: &HopfAlgebra,
    alpha: &BilinearForm,
    lam: &LinearForm,
) -> Result<BilinearForm, Error> {
    let lam_inv = invert_linear(h, lam)?;
    let n = h.dim();
    let values = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Scalar::zero();
                    for (ti, ci) in h.sweedler_terms(&Vect::basis(n, i), 3) {
                        for (tj, cj) in h.sweedler_terms(&Vect::basis(n, j), 3) {
                            let tail = h.mul_basis(ti[2], tj[2]);
                            s += &ci * &cj
                                * &lam.values[ti[0]]
                                * &lam.values[tj[0]]
                                * alpha.at(ti[1], tj[1])
                                * lam_inv.apply(tail);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    Ok(BilinearForm::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{int, ratio};

    #[test]
    fn trivial_cocycle_is_idempotent_under_convolution() {
        for name in catalog::FIXTURE_NAMES {
            let h = catalog::fixture(name).unwrap();
            let eps2 = BilinearForm::trivial(&h);
            assert_eq!(convolve_bilinear(&h, &eps2, &eps2), eps2, "{name}");
            assert_eq!(invert_bilinear(&h, &eps2).unwrap(), eps2, "{name}");
        }
    }

    #[test]
    fn klein_sign_cocycle_is_self_inverse() {
        let h = catalog::klein_four();
        let alpha = catalog::klein_sign_cocycle();
        assert!(is_two_cocycle(&h, &alpha).holds());
        assert_eq!(invert_bilinear(&h, &alpha).unwrap(), alpha);
    }

    #[test]
    fn klein_sign_cocycle_matches_group_cocycle_identity() {
        // brute force over group elements, straight from the Cayley table
        let cayley = catalog::klein_cayley();
        let h = catalog::klein_four();
        let alpha = catalog::klein_sign_cocycle();
        for g in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let lhs = alpha.at(g, k) * alpha.at(cayley.mul(g, k), l);
                    let rhs = alpha.at(k, l) * alpha.at(g, cayley.mul(k, l));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(is_two_cocycle(&h, &alpha).holds());
    }

    #[test]
    fn corrupted_klein_form_fails_with_triple() {
        let h = catalog::klein_four();
        let mut alpha = catalog::klein_sign_cocycle();
        // (0,1) is index 2 ("b"), (1,0) is index 1 ("a")
        alpha.values[2][1] = int(2);
        match is_two_cocycle(&h, &alpha) {
            Verdict::Fails { location, .. } => {
                assert!(!location.is_empty());
            }
            v => panic!("expected failure, got {v:?}"),
        }
    }

    #[test]
    fn pointwise_inverse_on_grouplikes() {
        let h = catalog::group_z(2);
        let lam = LinearForm::new(vec![int(1), int(3)]);
        let inv = invert_linear(&h, &lam).unwrap();
        assert_eq!(inv.values, vec![int(1), ratio(1, 3)]);
    }

    #[test]
    fn group_algebra_cocycles_are_lazy() {
        let h = catalog::klein_four();
        assert!(is_lazy(&h, &catalog::klein_sign_cocycle()).holds());
        let s3 = catalog::s3();
        assert!(is_lazy(&s3, &catalog::s3_coboundary_cocycle()).holds());
    }

    #[test]
    fn trivial_cocycle_is_lazy_on_sweedler() {
        let h = catalog::sweedler_h4();
        assert!(is_lazy(&h, &BilinearForm::trivial(&h)).holds());
    }

    #[test]
    fn nonlazy_form_on_sweedler_fails_at_x_g() {
        let h = catalog::sweedler_h4();
        match is_lazy(&h, &catalog::h4_nonlazy_form()) {
            Verdict::Fails { location, .. } => assert_eq!(location, "(x, g)"),
            v => panic!("expected failure, got {v:?}"),
        }
    }

    #[test]
    fn coboundary_on_s3_is_a_cocycle() {
        let h = catalog::s3();
        let alpha = catalog::s3_coboundary_cocycle();
        assert!(is_two_cocycle(&h, &alpha).holds());
        invert_bilinear(&h, &alpha).unwrap();
    }

    #[test]
    fn transform_by_counit_is_identity() {
        let h = catalog::sweedler_h4();
        let alpha = BilinearForm::trivial(&h);
        let beta = cohomologous_transform(&h, &alpha, &LinearForm::counit(&h)).unwrap();
        assert_eq!(beta, alpha);
    }

    #[test]
    fn transform_on_z2_squares_the_lambda_value() {
        let h = catalog::group_z(2);
        let alpha = BilinearForm::trivial(&h);
        let c = int(5);
        let lam = LinearForm::new(vec![int(1), c.clone()]);
        let beta = cohomologous_transform(&h, &alpha, &lam).unwrap();
        assert_eq!(beta.at(1, 1), &(&c * &c));
        assert_eq!(beta.at(0, 0), &int(1));
        assert_eq!(beta.at(0, 1), &int(1));
        assert_eq!(beta.at(1, 0), &int(1));
    }

    #[test]
    fn transform_round_trips_through_the_inverse_form() {
        let h = catalog::sweedler_h4();
        let alpha = BilinearForm::trivial(&h);
        let lam = LinearForm::new(vec![int(1), int(2), int(3), ratio(1, 2)]);
        let lam_inv = invert_linear(&h, &lam).unwrap();
        let beta = cohomologous_transform(&h, &alpha, &lam).unwrap();
        let back = cohomologous_transform(&h, &beta, &lam_inv).unwrap();
        assert_eq!(back, alpha);
    }
}
