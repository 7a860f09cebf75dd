//! Fraction-free determinants of polynomial matrices (Bareiss elimination)
//! and the group determinant: the determinant of the matrix with entry
//! `T_{g h^{-1}}` at position `(g, h)`.


use crate::group::CayleyTable;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::scalar::Scalar;

/// Exact division `p / q` in the polynomial ring; `None` when `q` does not
/// divide `p`.
pub fn exact_div(ring: &PolyRing, p: &Poly, q: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let (qm, qc) = q.lead()?;
    let mut rest = p.clone();
    let mut quotient: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((rm, rc)) = rest.lead().cloned() {
        if !qm.divides(&rm) {
            return None;
        }
        let m = rm.div(qm);
        let c = &rc / qc;
        rest = ring.sub(&rest, &ring.mul_term(q, &m, &c));
        quotient.push((m, c));
    }
    Some(ring.from_terms(quotient))
}

/// Determinant by fraction-free Bareiss elimination: every intermediate
/// division is exact, which controls coefficient and term growth.
pub fn determinant(ring: &PolyRing, matrix: &[Vec<Poly>]) -> Poly {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return ring.one();
    }
    let mut m: Vec<Vec<Poly>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = ring.mul(&m[k][k], &m[i][j]);
                let b = ring.mul(&m[i][k], &m[k][j]);
                let num = ring.sub(&a, &b);
                m[i][j] = exact_div(ring, &num, &prev)
                    .expect("Bareiss division is exact by construction");
            }
        }
        for i in k + 1..n {
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        ring.neg(&det)
    } else {
        det
    }
}

/// The group determinant of a finite group: variables `T_<g>`, entry
/// `(g, h) -> T_{g h^{-1}}`, expanded exactly over the rationals.
pub fn group_determinant(cayley: &CayleyTable) -> Result<(PolyRing, Poly), crate::error::Error> {
    let data = cayley.group_data()?;
    let n = cayley.order();
    let ring = PolyRing::new(
        cayley.names.iter().map(|g| format!("T_{g}")).collect(),
        MonomialOrder::DegRevLex,
    );
    let matrix: Vec<Vec<Poly>> = (0..n)
        .map(|g| {
            (0..n)
                .map(|h| ring.var(cayley.mul(g, data.inverse[h])))
                .collect()
        })
        .collect();
    let det = determinant(&ring, &matrix);
    Ok((ring, det))
}
