//! Finite-dimensional Hopf algebras over the rationals, given by structure
//! constants: a multiplication tensor, unit vector, comultiplication tensor,
//! counit covector, and antipode matrix. Every axiom is checked exactly and a
//! failing axiom reports a concrete basis tuple.
//!
//! Coproducts are handled in Heyneman–Sweedler style: `sweedler_expand`
//! produces the iterated coproduct of an element as a sparse tensor, and the
//! leg-wise operations on [`Tensor`] implement the usual index contractions.

use std::fmt;

use num::traits::One;

use crate::error::Error;
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor, Vect};

/// A Hopf algebra axiom, used to label validation results.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    MultAssociative,
    Unital,
    Coassociative,
    Counital,
    ComultIsAlgebraMorphism,
    CounitIsAlgebraMorphism,
    AntipodeLeft,
    AntipodeRight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::MultAssociative => "associativity of multiplication",
            Axiom::Unital => "two-sided unit",
            Axiom::Coassociative => "coassociativity of comultiplication",
            Axiom::Counital => "counit law",
            Axiom::ComultIsAlgebraMorphism => "comultiplication is an algebra morphism",
            Axiom::CounitIsAlgebraMorphism => "counit is an algebra morphism",
            Axiom::AntipodeLeft => "left antipode identity",
            Axiom::AntipodeRight => "right antipode identity",
        };
        f.write_str(s)
    }
}

/// A concrete counterexample: the basis tuple where an axiom fails and the
/// two sides of the identity there.
#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub failure: Option<AxiomFailure>,
}

impl AxiomCheck {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(AxiomCheck::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.ok())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "pass  {}", c.axiom)?,
                Some(fail) => writeln!(
                    f,
                    "FAIL  {} at {}: {} != {}",
                    c.axiom, fail.at, fail.lhs, fail.rhs
                )?,
            }
        }
        Ok(())
    }
}

/// Finite-dimensional Hopf algebra given by structure constants over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfAlgebra {
    basis: Vec<String>,
    mult: Vec<Vec<Vect>>,
    unit: Vect,
    comult: Vec<Tensor>,
    counit: Vec<Scalar>,
    antipode: Vec<Vect>,
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra from structure constants, enforcing only
    /// dimensional consistency. Axioms are checked by [`HopfAlgebra::validate`].
    pub fn from_parts(
        basis: Vec<String>,
        mult: Vec<Vec<Vect>>,
        unit: Vect,
        comult: Vec<Tensor>,
        counit: Vec<Scalar>,
        antipode: Vec<Vect>,
    ) -> Result<Self, Error> {
        let n = basis.len();
        let bad = |what: &str| Err(Error::DimensionMismatch(format!("{what} (dim {n})")));
        if n == 0 {
            return bad("empty basis");
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            return bad("multiplication tensor is not n x n");
        }
        if mult.iter().flatten().any(|v| v.dim() != n) {
            return bad("multiplication tensor entry of wrong length");
        }
        if unit.dim() != n {
            return bad("unit vector of wrong length");
        }
        if comult.len() != n || comult.iter().any(|t| t.dims != vec![n, n]) {
            return bad("comultiplication tensor is not n -> n x n");
        }
        if counit.len() != n {
            return bad("counit covector of wrong length");
        }
        if antipode.len() != n || antipode.iter().any(|v| v.dim() != n) {
            return bad("antipode matrix is not n x n");
        }
        Ok(HopfAlgebra {
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn unit(&self) -> &Vect {
        &self.unit
    }

    pub fn counit_row(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vect {
        &self.mult[i][j]
    }

    pub fn antipode_basis(&self, i: usize) -> &Vect {
        &self.antipode[i]
    }

    pub fn antipode_images(&self) -> &[Vect] {
        &self.antipode
    }

    pub fn comult_basis(&self, i: usize) -> &Tensor {
        &self.comult[i]
    }

    pub fn mul(&self, a: &Vect, b: &Vect) -> Vect {
        let mut out = Vect::zero(self.dim());
        for (i, ca) in a.support() {
            for (j, cb) in b.support() {
                out.add_scaled(&self.mult[i][j], &(ca * cb));
            }
        }
        out
    }

    pub fn counit(&self, v: &Vect) -> Scalar {
        v.pair(&self.counit)
    }

    pub fn antipode(&self, v: &Vect) -> Vect {
        let mut out = Vect::zero(self.dim());
        for (i, c) in v.support() {
            out.add_scaled(&self.antipode[i], c);
        }
        out
    }

    pub fn comult(&self, v: &Vect) -> Tensor {
        let mut out = Tensor::zero(vec![self.dim(), self.dim()]);
        for (i, c) in v.support() {
            out = out.add(&self.comult[i].scale(c));
        }
        out
    }

    /// Replaces leg `leg` of `t` by its coproduct, adding one leg.
    pub fn comult_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let n = self.dim();
        let mut dims = t.dims.clone();
        dims.insert(leg + 1, n);
        let mut out = Tensor::zero(dims);
        for (idx, c) in &t.terms {
            for (pair, cc) in &self.comult[idx[leg]].terms {
                let mut nidx = idx.clone();
                nidx[leg] = pair[0];
                nidx.insert(leg + 1, pair[1]);
                out.add_term(nidx, c * cc);
            }
        }
        out
    }

    /// Multiplies legs `leg` and `leg+1` of `t` into a single leg.
    pub fn mul_legs(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut dims = t.dims.clone();
        dims.remove(leg + 1);
        let mut out = Tensor::zero(dims);
        for (idx, c) in &t.terms {
            let prod = &self.mult[idx[leg]][idx[leg + 1]];
            for (k, ck) in prod.support() {
                let mut nidx = idx.clone();
                nidx[leg] = k;
                nidx.remove(leg + 1);
                out.add_term(nidx, c * ck);
            }
        }
        out
    }

    /// Leg-wise algebra product of two tensors of equal degree over this algebra.
    pub fn mul_pointwise(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.dims, b.dims);
        let mut out = Tensor::zero(a.dims.clone());
        for (ia, ca) in &a.terms {
            for (ib, cb) in &b.terms {
                // expand the product of basis vectors leg by leg
                let mut partial = Tensor::zero(vec![]);
                partial.add_term(vec![], ca * cb);
                for leg in 0..a.legs() {
                    partial = partial.product(&Tensor::from_vect(&self.mult[ia[leg]][ib[leg]]));
                }
                out = out.add(&partial);
            }
        }
        out
    }

    /// The iterated coproduct of `v` in `H^{⊗d}`; `d = 1` returns `v` itself.
    /// Expansion proceeds on the last leg, which by coassociativity agrees
    /// with any other bracketing for a valid Hopf algebra.
    pub fn sweedler_expand(&self, v: &Vect, d: usize) -> Tensor {
        assert!(d >= 1, "sweedler_expand needs d >= 1");
        let mut t = Tensor::from_vect(v);
        for k in 1..d {
            t = self.comult_leg(&t, k - 1);
        }
        t
    }

    /// Terms of the iterated coproduct, as `(leg indices, coefficient)` pairs.
    pub fn sweedler_terms(&self, v: &Vect, d: usize) -> Vec<(Vec<usize>, Scalar)> {
        self.sweedler_expand(v, d)
            .terms
            .into_iter()
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult
            .iter()
            .all(|t| t.swap_legs(0, 1) == *t)
    }

    /// True when every basis element is grouplike (so the algebra is a group
    /// algebra presented on its group basis).
    pub fn has_grouplike_basis(&self) -> bool {
        (0..self.dim()).all(|i| {
            self.counit[i].is_one() && {
                let mut expected = Tensor::zero(vec![self.dim(), self.dim()]);
                expected.add_term(vec![i, i], scalar::one());
                self.comult[i] == expected
            }
        })
    }

    fn eps_unit(&self, i: usize) -> Vect {
        self.unit.scale(&self.counit[i])
    }

    /// Runs the full axiom suite; each failure carries the basis tuple where
    /// the axiom breaks and both sides of the identity there.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut checks = Vec::new();
        let name = |i: usize| self.basis[i].clone();
        let ok = |axiom: Axiom| AxiomCheck {
            axiom,
            failure: None,
        };
        let failed = |axiom: Axiom, at: String, lhs: String, rhs: String| AxiomCheck {
            axiom,
            failure: Some(AxiomFailure { at, lhs, rhs }),
        };

        // associativity
        let mut assoc = ok(Axiom::MultAssociative);
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&self.mult[i][j], &Vect::basis(n, k));
                    let rhs = self.mul(&Vect::basis(n, i), &self.mult[j][k]);
                    if lhs != rhs {
                        assoc = failed(
                            Axiom::MultAssociative,
                            format!("({}, {}, {})", name(i), name(j), name(k)),
                            self.render_vect(&lhs),
                            self.render_vect(&rhs),
                        );
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(assoc);

        // unit
        let mut unital = ok(Axiom::Unital);
        for i in 0..n {
            let e = Vect::basis(n, i);
            let l = self.mul(&self.unit, &e);
            let r = self.mul(&e, &self.unit);
            if l != e || r != e {
                let bad = if l != e { l } else { r };
                unital = failed(
                    Axiom::Unital,
                    name(i),
                    self.render_vect(&bad),
                    self.render_vect(&e),
                );
                break;
            }
        }
        checks.push(unital);

        // coassociativity
        let mut coassoc = ok(Axiom::Coassociative);
        for i in 0..n {
            let left = self.comult_leg(&self.comult[i], 0);
            let right = self.comult_leg(&self.comult[i], 1);
            if left != right {
                coassoc = failed(
                    Axiom::Coassociative,
                    name(i),
                    self.render_tensor(&left),
                    self.render_tensor(&right),
                );
                break;
            }
        }
        checks.push(coassoc);

        // counit law
        let mut counital = ok(Axiom::Counital);
        for i in 0..n {
            let e = Tensor::from_vect(&Vect::basis(n, i));
            let l = self.comult[i].contract_leg(0, &self.counit);
            let r = self.comult[i].contract_leg(1, &self.counit);
            if l != e || r != e {
                let bad = if l != e { l } else { r };
                counital = failed(
                    Axiom::Counital,
                    name(i),
                    self.render_tensor(&bad),
                    self.render_tensor(&e),
                );
                break;
            }
        }
        checks.push(counital);

        // comult is an algebra morphism
        let mut bialg = ok(Axiom::ComultIsAlgebraMorphism);
        let unit_tensor = Tensor::from_vect(&self.unit).product(&Tensor::from_vect(&self.unit));
        if self.comult(&self.unit) != unit_tensor {
            bialg = failed(
                Axiom::ComultIsAlgebraMorphism,
                "unit".to_string(),
                self.render_tensor(&self.comult(&self.unit)),
                self.render_tensor(&unit_tensor),
            );
        } else {
            'bialg: for i in 0..n {
                for j in 0..n {
                    let lhs = self.comult(&self.mult[i][j]);
                    let rhs = self.mul_pointwise(&self.comult[i], &self.comult[j]);
                    if lhs != rhs {
                        bialg = failed(
                            Axiom::ComultIsAlgebraMorphism,
                            format!("({}, {})", name(i), name(j)),
                            self.render_tensor(&lhs),
                            self.render_tensor(&rhs),
                        );
                        break 'bialg;
                    }
                }
            }
        }
        checks.push(bialg);

        // counit is an algebra morphism
        let mut eps_morph = ok(Axiom::CounitIsAlgebraMorphism);
        if !self.counit(&self.unit).is_one() {
            eps_morph = failed(
                Axiom::CounitIsAlgebraMorphism,
                "unit".to_string(),
                scalar::render(&self.counit(&self.unit)),
                "1".to_string(),
            );
        } else {
            'eps: for i in 0..n {
                for j in 0..n {
                    let lhs = self.counit(&self.mult[i][j]);
                    let rhs = &self.counit[i] * &self.counit[j];
                    if lhs != rhs {
                        eps_morph = failed(
                            Axiom::CounitIsAlgebraMorphism,
                            format!("({}, {})", name(i), name(j)),
                            scalar::render(&lhs),
                            scalar::render(&rhs),
                        );
                        break 'eps;
                    }
                }
            }
        }
        checks.push(eps_morph);

        // antipode identities
        let mut left = ok(Axiom::AntipodeLeft);
        let mut right = ok(Axiom::AntipodeRight);
        for i in 0..n {
            let s_first = self.comult[i].map_leg(0, &self.antipode, n);
            let lhs = self.mul_legs(&s_first, 0).to_vect();
            if lhs != self.eps_unit(i) && left.ok() {
                left = failed(
                    Axiom::AntipodeLeft,
                    name(i),
                    self.render_vect(&lhs),
                    self.render_vect(&self.eps_unit(i)),
                );
            }
            let s_second = self.comult[i].map_leg(1, &self.antipode, n);
            let rhs = self.mul_legs(&s_second, 0).to_vect();
            if rhs != self.eps_unit(i) && right.ok() {
                right = failed(
                    Axiom::AntipodeRight,
                    name(i),
                    self.render_vect(&rhs),
                    self.render_vect(&self.eps_unit(i)),
                );
            }
        }
        checks.push(left);
        checks.push(right);

        ValidationReport { checks }
    }

    /// Renders a tensor over the basis, e.g. `x⊗1 + g⊗x`.
    pub fn render_tensor(&self, t: &Tensor) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        t.terms
            .iter()
            .map(|(idx, c)| {
                let legs = idx
                    .iter()
                    .map(|&i| self.basis[i].as_str())
                    .collect::<Vec<_>>()
                    .join("⊗");
                if c.is_one() {
                    legs
                } else {
                    format!("{}*{legs}", scalar::render(c))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Renders an element over the basis, e.g. `x + 2*gx`.
    pub fn render_vect(&self, v: &Vect) -> String {
        let mut out = String::new();
        for (i, c) in v.support() {
            let mon = &self.basis[i];
            if out.is_empty() {
                if c.is_one() {
                    out.push_str(mon);
                } else if *c == -scalar::one() {
                    out.push_str(&format!("-{mon}"));
                } else {
                    out.push_str(&format!("{}*{mon}", scalar::render(c)));
                }
            } else if crate::scalar::is_negative(c) {
                let a = -c.clone();
                if a.is_one() {
                    out.push_str(&format!(" - {mon}"));
                } else {
                    out.push_str(&format!(" - {}*{mon}", scalar::render(&a)));
                }
            } else if c.is_one() {
                out.push_str(&format!(" + {mon}"));
            } else {
                out.push_str(&format!(" + {}*{mon}", scalar::render(c)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
