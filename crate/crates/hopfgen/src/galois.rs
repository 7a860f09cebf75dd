//! The generic extension built over the base subalgebra: elements of
//! `(base subalgebra) (x) H` with the product
//! `(b (x) x)(c (x) y) = b c sigma(x_1, y_1) (x) x_2 y_2`, its central
//! specializations along invertible linear forms, and the reduction of a
//! nontrivial cocycle to the trivial one over the cocycle deformation.

use crate::error::Error;
use crate::form::{invert_linear, BilinearForm, LinearForm, Verdict};
use crate::hopf::HopfAlgebra;
use crate::poly::Poly;
use crate::presented::{PresentedRing, RingElement};
use crate::scalar::Scalar;
use crate::sigma::{generic_sigma_for, specialize, GenericCocycle};
use crate::tensor::Vect;
use crate::twist::{twist_algebra, TwistedAlgebra};

/// An element `sum_i legs[i] (x) x_i` of the generic extension; ring legs in
/// normal form, zero legs simply zero polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtElement {
    pub legs: Vec<RingElement>,
}

impl ExtElement {
    pub fn zero(n: usize) -> Self {
        ExtElement {
            legs: vec![Poly::zero(); n],
        }
    }

    /// `1 (x) v`.
    pub fn from_h(ring: &PresentedRing, v: &Vect) -> Self {
        let mut out = ExtElement::zero(v.dim());
        for (i, c) in v.support() {
            out.legs[i] = ring.constant(c.clone());
        }
        out
    }

    /// `b (x) v`.
    pub fn pure(ring: &PresentedRing, b: &RingElement, v: &Vect) -> Self {
        let mut out = ExtElement::zero(v.dim());
        for (i, c) in v.support() {
            out.legs[i] = ring.scale(b, c);
        }
        out
    }

    /// The unit of the extension product: `sigma^{-1}(1, 1) (x) 1`. Note
    /// `sigma(1, 1) = t_1` is not the ring unit, so `1 (x) 1` is not the
    /// algebra unit; it only becomes one after specializing along a linear
    /// form (where `t_1` evaluates to an invertible scalar).
    pub fn unit(ring: &PresentedRing, gc: &GenericCocycle) -> Self {
        let h = ring.hopf();
        let si11 = gc.sigma_inv_at(ring, h.unit(), h.unit());
        ExtElement::pure(ring, &si11, h.unit())
    }

    pub fn add(&self, ring: &PresentedRing, other: &ExtElement) -> ExtElement {
        ExtElement {
            legs: self
                .legs
                .iter()
                .zip(&other.legs)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.legs.iter().all(|l| l.is_zero())
    }

    pub fn render(&self, ring: &PresentedRing) -> String {
        let h = ring.hopf();
        let parts: Vec<String> = self
            .legs
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_zero())
            .map(|(i, l)| format!("({}) ⊗ {}", ring.render(l), h.basis_name(i)))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The extension product
/// `(b (x) x)(c (x) y) = b c sigma(x_1, y_1) (x) x_2 y_2`, extended
/// bilinearly and normalized.
pub fn ext_multiply(
    ring: &PresentedRing,
    gc: &GenericCocycle,
    u: &ExtElement,
    v: &ExtElement,
) -> ExtElement {
    ext_multiply_with(ring, gc, ring.hopf(), u, v)
}

/// As [`ext_multiply`], with the `H`-leg product taken in `mult_source`
/// (sharing the coalgebra); used for extensions over a cocycle deformation.
pub fn ext_multiply_with(
    ring: &PresentedRing,
    gc: &GenericCocycle,
    mult_source: &HopfAlgebra,
    u: &ExtElement,
    v: &ExtElement,
) -> ExtElement {
    let h = ring.hopf();
    let n = h.dim();
    let pr = ring.poly_ring();
    let mut acc: Vec<Vec<(crate::poly::Monomial, Scalar)>> = vec![Vec::new(); n];
    for (i, b) in u.legs.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        for (j, c) in v.legs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let bc = pr.mul(b, c);
            for (di, ci) in &h.comult_basis(i).terms {
                for (dj, cj) in &h.comult_basis(j).terms {
                    let coeff = ci * cj;
                    let s = &gc.sigma[di[0]][dj[0]];
                    let ring_part = pr.mul(&bc, s);
                    for (k, ck) in mult_source.mul_basis(di[1], dj[1]).support() {
                        acc[k].extend(
                            ring_part
                                .terms
                                .iter()
                                .map(|(m, x)| (m.clone(), x * &coeff * ck)),
                        );
                    }
                }
            }
        }
    }
    ExtElement {
        legs: acc
            .into_iter()
            .map(|terms| ring.nf(&pr.from_terms(terms)))
            .collect(),
    }
}

/// Specializes the extension along `lam`: the ring legs of the product rule
/// evaluate through `T_i -> lam(x_i)`, `U_i -> lam^{-1}(x_i)`, leaving the
/// twisted comodule algebra of the specialized cocycle. For `lam = eps` this
/// is exactly the twist of `H` by `alpha`, and the table equality is checked
/// here.
pub fn specialize_extension(
    ring: &PresentedRing,
    gc: &GenericCocycle,
    lam: &LinearForm,
) -> Result<TwistedAlgebra, Error> {
    let h = ring.hopf();
    let beta = specialize(ring, gc, lam)?;
    let lam_inv = invert_linear(h, lam)?;
    let n = h.dim();
    // evaluate the product rule (1 (x) x_i)(1 (x) x_j) leg-wise
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let prod = ext_multiply(
                ring,
                gc,
                &ExtElement::from_h(ring, &Vect::basis(n, i)),
                &ExtElement::from_h(ring, &Vect::basis(n, j)),
            );
            let mut v = Vect::zero(n);
            for (k, leg) in prod.legs.iter().enumerate() {
                v.coeffs[k] = ring.eval_lambda(leg, lam, &lam_inv);
            }
            row.push(v);
        }
        table.push(row);
    }
    let twisted = twist_algebra(h, &beta);
    if table != twisted.table {
        return Err(Error::Mismatch(
            "specialized extension table differs from the direct twist".to_string(),
        ));
    }
    // the coaction leg is untouched by specialization: both algebras carry
    // the comodule structure of H itself, which twist_algebra reuses
    Ok(twisted)
}

/// The reduction of a nontrivial cocycle to the trivial one. Builds the
/// cocycle deformation `L`, the generic cocycle of the trivial cocycle over
/// `L` (in the same presented ring, since the coalgebra is unchanged), and
/// checks, for all basis pairs:
///
/// ```text
/// sigma_alpha(x, y)      = sigma_eps^L(x_1, y_1) alpha(x_2, y_2)
/// sigma_alpha^{-1}(x, y) = alpha^{-1}(x_1, y_1) sigma_eps^{L,-1}(x_2, y_2)
/// ```
///
/// and on the extension level that the product of the `alpha`-extension
/// agrees with the `alpha`-twist of the trivial extension over `L`. For a
/// Hopf algebra with grouplike basis additionally checks that each
/// `sigma_alpha` value is the scalar `alpha(x, y)` times the `sigma_eps`
/// value.
pub fn verify_reduction(
    ring: &PresentedRing,
    alpha: &BilinearForm,
) -> Result<Verdict, Error> {
    let h = ring.hopf();
    let n = h.dim();
    let pr = ring.poly_ring();
    let deformed = crate::twist::deform_hopf(h, alpha)?;
    let gc_alpha = generic_sigma_for(ring, h, alpha)?;
    let trivial = BilinearForm::trivial(h);
    let gc_eps_l = generic_sigma_for(ring, &deformed, &trivial)?;

    for i in 0..n {
        for j in 0..n {
            let mut expected = pr.zero();
            let mut expected_inv = pr.zero();
            for (di, ci) in &h.comult_basis(i).terms {
                for (dj, cj) in &h.comult_basis(j).terms {
                    let c = ci * cj;
                    expected = pr.add(
                        &expected,
                        &pr.scale(
                            &gc_eps_l.sigma[di[0]][dj[0]],
                            &(&c * alpha.at(di[1], dj[1])),
                        ),
                    );
                    expected_inv = pr.add(
                        &expected_inv,
                        &pr.scale(
                            &gc_eps_l.sigma_inv[di[1]][dj[1]],
                            &(&c * gc_alpha.alpha_inv.at(di[0], dj[0])),
                        ),
                    );
                }
            }
            if gc_alpha.sigma[i][j] != ring.nf(&expected)
                || gc_alpha.sigma_inv[i][j] != ring.nf(&expected_inv)
            {
                return Ok(Verdict::Fails {
                    location: format!(
                        "sigma reduction at ({}, {})",
                        h.basis_name(i),
                        h.basis_name(j)
                    ),
                    lhs: ring.render(&gc_alpha.sigma[i][j]),
                    rhs: ring.render(&ring.nf(&expected)),
                });
            }
        }
    }

    // extension level: (1 (x) x_i)(1 (x) x_j) agree
    for i in 0..n {
        for j in 0..n {
            let lhs = ext_multiply(
                ring,
                &gc_alpha,
                &ExtElement::from_h(ring, &Vect::basis(n, i)),
                &ExtElement::from_h(ring, &Vect::basis(n, j)),
            );
            // the alpha-twist of the trivial extension over L:
            // sum sigma_eps^L(x_1, y_1) (x) (x_2 *_L y_2) alpha(x_3, y_3)
            let mut rhs = ExtElement::zero(n);
            for (ti, ci) in h.sweedler_terms(&Vect::basis(n, i), 3) {
                for (tj, cj) in h.sweedler_terms(&Vect::basis(n, j), 3) {
                    let c = &ci * &cj * alpha.at(ti[2], tj[2]);
                    let s = &gc_eps_l.sigma[ti[0]][tj[0]];
                    let prod = deformed.mul_basis(ti[1], tj[1]);
                    rhs = rhs.add(ring, &ExtElement::pure(ring, &ring.scale(s, &c), prod));
                }
            }
            let rhs = ExtElement {
                legs: rhs.legs.iter().map(|l| ring.nf(l)).collect(),
            };
            if lhs != rhs {
                return Ok(Verdict::Fails {
                    location: format!(
                        "extension reduction at ({}, {})",
                        h.basis_name(i),
                        h.basis_name(j)
                    ),
                    lhs: lhs.render(ring),
                    rhs: rhs.render(ring),
                });
            }
        }
    }

    // scalar-multiple comparison on a grouplike basis
    if h.has_grouplike_basis() {
        for i in 0..n {
            for j in 0..n {
                let scaled = ring.scale(&gc_eps_l.sigma[i][j], alpha.at(i, j));
                if gc_alpha.sigma[i][j] != scaled {
                    return Ok(Verdict::Fails {
                        location: format!(
                            "scalar comparison at ({}, {})",
                            h.basis_name(i),
                            h.basis_name(j)
                        ),
                        lhs: ring.render(&gc_alpha.sigma[i][j]),
                        rhs: ring.render(&scaled),
                    });
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::int;
    use crate::sigma::generic_sigma;

    fn setup(name: &str, alpha: Option<BilinearForm>) -> (PresentedRing, GenericCocycle) {
        let h = catalog::fixture(name).unwrap();
        let ring = PresentedRing::build(&h);
        let alpha = alpha.unwrap_or_else(|| BilinearForm::trivial(&h));
        let gc = generic_sigma(&ring, &alpha).unwrap();
        (ring, gc)
    }

    #[test]
    fn unit_is_two_sided_for_the_extension_product() {
        let (ring, gc) = setup("sweedler", None);
        let one = ExtElement::unit(&ring, &gc);
        // the unit is t^{-1}_1 (x) 1
        assert_eq!(one.render(&ring), "(U_1) ⊗ 1");
        for i in 0..4 {
            let e = ExtElement::from_h(&ring, &Vect::basis(4, i));
            assert_eq!(ext_multiply(&ring, &gc, &one, &e), e);
            assert_eq!(ext_multiply(&ring, &gc, &e, &one), e);
        }
        // after specializing along the counit the unit leg evaluates to 1
        let lam = LinearForm::counit(ring.hopf());
        let lam_inv = invert_linear(ring.hopf(), &lam).unwrap();
        assert_eq!(ring.eval_lambda(&one.legs[0], &lam, &lam_inv), int(1));
    }

    #[test]
    fn z2_squares_to_the_sigma_value() {
        let (ring, gc) = setup("z2", None);
        let g = ExtElement::from_h(&ring, &Vect::basis(2, 1));
        let sq = ext_multiply(&ring, &gc, &g, &g);
        // (1 (x) g)^2 = sigma(g, g) (x) e = T_g^2 U_e (x) e
        assert_eq!(sq.legs[1], Poly::zero());
        assert_eq!(ring.render(&sq.legs[0]), "T_g^2*U_e");
    }

    #[test]
    fn extension_product_is_associative_on_basis_triples() {
        for (name, alpha) in [
            ("sweedler", None),
            ("klein4", Some(catalog::klein_sign_cocycle())),
        ] {
            let (ring, gc) = setup(name, alpha);
            let n = ring.hopf().dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let a = ExtElement::from_h(&ring, &Vect::basis(n, i));
                        let b = ExtElement::from_h(&ring, &Vect::basis(n, j));
                        let c = ExtElement::from_h(&ring, &Vect::basis(n, k));
                        let lhs =
                            ext_multiply(&ring, &gc, &ext_multiply(&ring, &gc, &a, &b), &c);
                        let rhs =
                            ext_multiply(&ring, &gc, &a, &ext_multiply(&ring, &gc, &b, &c));
                        assert_eq!(lhs, rhs, "{name} at ({i}, {j}, {k})");
                    }
                }
            }
        }
    }

    #[test]
    fn specializing_at_the_counit_recovers_the_twist() {
        let h = catalog::klein_four();
        let ring = PresentedRing::build(&h);
        let alpha = catalog::klein_sign_cocycle();
        let gc = generic_sigma(&ring, &alpha).unwrap();
        let specialized = specialize_extension(&ring, &gc, &LinearForm::counit(&h)).unwrap();
        let direct = twist_algebra(&h, &alpha);
        assert_eq!(specialized.table, direct.table);
    }

    #[test]
    fn z2_specialization_with_scaling_lambda() {
        let (ring, gc) = setup("z2", None);
        let lam = LinearForm::new(vec![int(1), int(2)]);
        let twisted = specialize_extension(&ring, &gc, &lam).unwrap();
        // beta(g, g) = 4, so g * g = 4 e
        assert_eq!(
            twisted.table[1][1],
            Vect::basis(2, 0).scale(&int(4))
        );
    }

    #[test]
    fn reduction_holds_for_the_klein_sign_cocycle() {
        let h = catalog::klein_four();
        let ring = PresentedRing::build(&h);
        let v = verify_reduction(&ring, &catalog::klein_sign_cocycle()).unwrap();
        assert!(v.holds(), "{}", v.summary());
    }

    #[test]
    fn reduction_is_trivial_for_the_trivial_cocycle() {
        let h = catalog::sweedler_h4();
        let ring = PresentedRing::build(&h);
        let v = verify_reduction(&ring, &BilinearForm::trivial(&h)).unwrap();
        assert!(v.holds(), "{}", v.summary());
    }
}
