//! Test-only support code: an independent Laurent-polynomial implementation
//! used as an oracle against the presented ring on group algebras. It knows
//! nothing about Gröbner bases; monomials are integer exponent vectors
//! indexed by group elements.

use std::collections::BTreeMap;

use hopfgen::group::CayleyTable;
use hopfgen::poly::Poly;
use hopfgen::scalar::{self, Scalar};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    pub terms: BTreeMap<Vec<i64>, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(vec![0; n], c);
        p
    }

    pub fn monomial(exps: Vec<i64>, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exps, c);
        p
    }

    /// `t_g` (positive) or `t^{-1}_g` (negative power).
    pub fn var(n: usize, g: usize, power: i64) -> Self {
        let mut exps = vec![0; n];
        exps[g] = power;
        LaurentPoly::monomial(exps, scalar::one())
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Scalar) {
        if scalar::is_zero(&c) {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(scalar::zero);
        *e += c;
        if scalar::is_zero(e) {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| scalar::is_zero(v))
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }


    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }
}

/// Interprets a polynomial of the presented ring of a group algebra (first
/// `n` variables `T_g`, then `n` variables `U_g`) in the Laurent ring, with
/// `U_g` mapped to the inverse monomial of `T_g`.
pub fn laurent_of_presented(n: usize, p: &Poly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (m, c) in &p.terms {
        let exps = (0..n)
            .map(|g| m.exps[g] as i64 - m.exps[n + g] as i64)
            .collect();
        out.add_term(exps, c.clone());
    }
    out
}

/// The generic cocycle value `sigma(g, h) = t_g t_h t^{-1}_{gh}` as a Laurent
/// monomial, straight from the Cayley table.
pub fn laurent_sigma(cayley: &CayleyTable, g: usize, h: usize) -> LaurentPoly {
    let n = cayley.order();
    let mut exps = vec![0i64; n];
    exps[g] += 1;
    exps[h] += 1;
    exps[cayley.mul(g, h)] -= 1;
    LaurentPoly::monomial(exps, scalar::one())
}

/// The inverse value `sigma^{-1}(g, h) = t_{gh} t^{-1}_g t^{-1}_h`.
pub fn laurent_sigma_inv(cayley: &CayleyTable, g: usize, h: usize) -> LaurentPoly {
    let n = cayley.order();
    let mut exps = vec![0i64; n];
    exps[g] -= 1;
    exps[h] -= 1;
    exps[cayley.mul(g, h)] += 1;
    LaurentPoly::monomial(exps, scalar::one())
}
