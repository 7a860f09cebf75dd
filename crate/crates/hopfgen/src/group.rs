//! Finite groups by Cayley table, and the two Hopf algebras they generate:
//! the group algebra `kG` (grouplike basis) and its dual `O(G)` (the function
//! algebra on `G`, with basis the indicator functions `d<g>`).

use crate::error::Error;
use crate::hopf::HopfAlgebra;
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor, Vect};

/// Multiplication table of a finite magma; `table[i][j]` is the index of
/// `g_i * g_j`. [`CayleyTable::group_data`] checks the group axioms.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

pub struct GroupData {
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl CayleyTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        CayleyTable { names, table }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Verifies the group axioms; a failure names the offending elements.
    pub fn group_data(&self) -> Result<GroupData, Error> {
        let n = self.order();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table is not n x n".to_string()));
        }
        if self.table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::NotAGroup("entry out of range".to_string()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".to_string()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| self.mul(a, b) == identity && self.mul(b, a) == identity)
                .ok_or_else(|| {
                    Error::NotAGroup(format!("no inverse for {}", self.names[a]))
                })?;
            inverse.push(inv);
        }
        Ok(GroupData { identity, inverse })
    }
}

/// The group algebra `kG`: basis indexed by group elements, every basis
/// element grouplike, `S(g) = g^{-1}`.
pub fn build_group_algebra(cayley: &CayleyTable) -> Result<HopfAlgebra, Error> {
    let data = cayley.group_data()?;
    let n = cayley.order();
    let mult: Vec<Vec<Vect>> = (0..n)
        .map(|i| (0..n).map(|j| Vect::basis(n, cayley.mul(i, j))).collect())
        .collect();
    let comult: Vec<Tensor> = (0..n)
        .map(|i| {
            let mut t = Tensor::zero(vec![n, n]);
            t.add_term(vec![i, i], scalar::one());
            t
        })
        .collect();
    let counit = vec![scalar::one(); n];
    let antipode: Vec<Vect> = (0..n).map(|i| Vect::basis(n, data.inverse[i])).collect();
    HopfAlgebra::from_parts(
        cayley.names.clone(),
        mult,
        Vect::basis(n, data.identity),
        comult,
        counit,
        antipode,
    )
}

/// The dual Hopf algebra `O(G)` of `kG`: basis of indicator functions
/// `d<g>` with pointwise product, coproduct summing over factorizations,
/// `eps(d<g>) = [g = e]`, and `S(d<g>) = d<g^{-1}>`.
pub fn build_dual_group_algebra(cayley: &CayleyTable) -> Result<HopfAlgebra, Error> {
    let data = cayley.group_data()?;
    let n = cayley.order();
    let names: Vec<String> = cayley.names.iter().map(|g| format!("d{g}")).collect();
    let mult: Vec<Vec<Vect>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Vect::basis(n, i)
                    } else {
                        Vect::zero(n)
                    }
                })
                .collect()
        })
        .collect();
    let mut unit = Vect::zero(n);
    for i in 0..n {
        unit.coeffs[i] = scalar::one();
    }
    let comult: Vec<Tensor> = (0..n)
        .map(|g| {
            let mut t = Tensor::zero(vec![n, n]);
            for u in 0..n {
                for v in 0..n {
                    if cayley.mul(u, v) == g {
                        t.add_term(vec![u, v], scalar::one());
                    }
                }
            }
            t
        })
        .collect();
    let counit: Vec<Scalar> = (0..n)
        .map(|g| {
            if g == data.identity {
                scalar::one()
            } else {
                scalar::zero()
            }
        })
        .collect();
    let antipode: Vec<Vect> = (0..n).map(|g| Vect::basis(n, data.inverse[g])).collect();
    HopfAlgebra::from_parts(names, mult, unit, comult, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z2_group_algebra_is_cocommutative() {
        let h = build_group_algebra(&catalog::cyclic_cayley(2)).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.validate().passes());
        assert!(h.is_cocommutative());
        assert!(h.is_commutative());
    }

    #[test]
    fn s3_group_algebra_is_noncommutative() {
        let h = build_group_algebra(&catalog::s3_cayley()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(h.validate().passes());
        assert!(h.is_cocommutative());
        assert!(!h.is_commutative());
    }

    #[test]
    fn broken_associativity_names_the_triple() {
        let mut cayley = catalog::cyclic_cayley(3);
        cayley.table[1][2] = 1; // g * g2 should be e
        let err = build_group_algebra(&cayley).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("associativity fails"), "{msg}");
    }

    #[test]
    fn dual_of_z3_sums_over_factorizations() {
        let h = build_dual_group_algebra(&catalog::cyclic_cayley(3)).unwrap();
        assert!(h.validate().passes());
        // delta(d_g) = sum over uv = g of d_u (x) d_v: three terms
        let idx = h.basis_index("dg").unwrap();
        assert_eq!(h.comult_basis(idx).terms.len(), 3);
        assert!(h.is_commutative());
        // Z/3 is abelian, so its dual is still cocommutative
        assert!(h.is_cocommutative());
        let os3 = build_dual_group_algebra(&catalog::s3_cayley()).unwrap();
        assert!(!os3.is_cocommutative());
    }

    #[test]
    fn dual_of_s3_passes_axioms() {
        let h = build_dual_group_algebra(&catalog::s3_cayley()).unwrap();
        assert!(h.validate().passes());
    }
}
