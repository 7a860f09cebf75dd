//! Two-sided ideals, quotient Hopf structures, and the abelianization: the
//! quotient of `H` by the ideal generated by all commutators, which is its
//! largest commutative quotient.

use num::traits::Zero;

use crate::hopf::HopfAlgebra;
use crate::linalg;
use crate::scalar::Scalar;
use crate::tensor::{Tensor, Vect};

/// A subspace kept in reduced row echelon form; pivot order is first-seen,
/// which makes projections reproducible.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: Vec<Vect>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vect] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the rows; the result has zeros in all pivot columns.
    pub fn reduce(&self, v: &Vect) -> Vect {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v.coeffs[p].is_zero() {
                let c = v.coeffs[p].clone();
                v.add_scaled(row, &(-c));
            }
        }
        v
    }

    pub fn contains(&self, v: &Vect) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns true when the span grew.
    pub fn insert(&mut self, v: &Vect) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.coeffs.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = crate::scalar::one() / &v.coeffs[p];
        v = v.scale(&inv);
        // keep earlier rows fully reduced
        for row in self.rows.iter_mut() {
            if !row.coeffs[p].is_zero() {
                let c = row.coeffs[p].clone();
                row.add_scaled(&v, &(-c));
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Closes a spanning set under left and right multiplication by all basis
/// elements. Terminates because dimensions are bounded by `dim H`.
pub fn two_sided_ideal_closure(h: &HopfAlgebra, seed: &[Vect]) -> RowSpace {
    let n = h.dim();
    let mut space = RowSpace::new();
    for v in seed {
        space.insert(v);
    }
    loop {
        let mut grew = false;
        let current: Vec<Vect> = space.rows().to_vec();
        for v in &current {
            for i in 0..n {
                let e = Vect::basis(n, i);
                grew |= space.insert(&h.mul(&e, v));
                grew |= space.insert(&h.mul(v, &e));
            }
        }
        if !grew {
            return space;
        }
    }
}

/// The quotient of `H` by a two-sided ideal, with the induced Hopf structure
/// when the ideal is a Hopf ideal.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub parent: HopfAlgebra,
    pub ideal: RowSpace,
    /// Indices of parent basis elements whose classes form the quotient basis.
    pub complement: Vec<usize>,
    /// `projection[q][j]` is the `complement[q]`-coordinate of the class of `x_j`.
    pub projection: Vec<Vec<Scalar>>,
    pub is_hopf_ideal: bool,
    pub induced: Option<HopfAlgebra>,
}

impl QuotientAlgebra {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of the class of `v` over the quotient basis.
    pub fn project(&self, v: &Vect) -> Vect {
        let reduced = self.ideal.reduce(v);
        Vect {
            coeffs: self
                .complement
                .iter()
                .map(|&c| reduced.coeffs[c].clone())
                .collect(),
        }
    }
}

fn hopf_ideal_checks(h: &HopfAlgebra, ideal: &RowSpace) -> bool {
    let n = h.dim();
    // eps(I) = 0 and S(I) ⊆ I
    for v in ideal.rows() {
        if !h.counit(v).is_zero() {
            return false;
        }
        if !ideal.contains(&h.antipode(v)) {
            return false;
        }
    }
    // Delta(I) ⊆ I (x) H + H (x) I, checked as membership in the row space
    // spanned by b (x) e_j and e_i (x) b over all ideal rows b
    let mut span: Vec<Vec<Scalar>> = Vec::new();
    for b in ideal.rows() {
        for j in 0..n {
            let mut flat = vec![Scalar::zero(); n * n];
            for (i, c) in b.support() {
                flat[i * n + j] = c.clone();
            }
            span.push(flat);
            let mut flat2 = vec![Scalar::zero(); n * n];
            for (i, c) in b.support() {
                flat2[j * n + i] = c.clone();
            }
            span.push(flat2);
        }
    }
    let mut space = RowSpace::new();
    for row in span {
        space.insert(&Vect { coeffs: row });
    }
    for v in ideal.rows() {
        let delta = h.comult(v);
        let mut flat = vec![Scalar::zero(); n * n];
        for (idx, c) in &delta.terms {
            flat[idx[0] * n + idx[1]] = c.clone();
        }
        if !space.contains(&Vect { coeffs: flat }) {
            return false;
        }
    }
    true
}

/// Builds the quotient by the span of `ideal` (assumed closed under two-sided
/// multiplication) and installs the induced Hopf structure when the ideal is
/// a Hopf ideal.
pub fn quotient_by_ideal(h: &HopfAlgebra, ideal: RowSpace) -> QuotientAlgebra {
    let n = h.dim();
    let complement: Vec<usize> = (0..n).filter(|i| !ideal.pivots().contains(i)).collect();
    let m = complement.len();
    let projection: Vec<Vec<Scalar>> = {
        let mut rows = vec![vec![Scalar::zero(); n]; m];
        for j in 0..n {
            let reduced = ideal.reduce(&Vect::basis(n, j));
            for (q, &c) in complement.iter().enumerate() {
                rows[q][j] = reduced.coeffs[c].clone();
            }
        }
        rows
    };
    let is_hopf_ideal = hopf_ideal_checks(h, &ideal);
    let induced = if is_hopf_ideal && m > 0 {
        let project = |v: &Vect| -> Vect {
            let reduced = ideal.reduce(v);
            Vect {
                coeffs: complement.iter().map(|&c| reduced.coeffs[c].clone()).collect(),
            }
        };
        let rep = |q: usize| Vect::basis(n, complement[q]);
        let mult = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| project(&h.mul(&rep(a), &rep(b))))
                    .collect()
            })
            .collect();
        let unit = project(h.unit());
        let comult = (0..m)
            .map(|a| {
                let t = h.comult(&rep(a));
                let mut out = Tensor::zero(vec![m, m]);
                for (idx, c) in &t.terms {
                    let left = project(&Vect::basis(n, idx[0]));
                    let right = project(&Vect::basis(n, idx[1]));
                    for (i, ci) in left.support() {
                        for (j, cj) in right.support() {
                            out.add_term(vec![i, j], c * ci * cj);
                        }
                    }
                }
                out
            })
            .collect();
        let counit = (0..m).map(|a| h.counit(&rep(a))).collect();
        let antipode = (0..m).map(|a| project(&h.antipode(&rep(a)))).collect();
        let names = complement
            .iter()
            .map(|&c| h.basis_name(c).to_string())
            .collect();
        HopfAlgebra::from_parts(names, mult, unit, comult, counit, antipode).ok()
    } else {
        None
    };
    QuotientAlgebra {
        parent: h.clone(),
        ideal,
        complement,
        projection,
        is_hopf_ideal,
        induced,
    }
}

/// The largest commutative quotient: `H` modulo the two-sided ideal generated
/// by all commutators of basis elements.
pub fn abelianization(h: &HopfAlgebra) -> QuotientAlgebra {
    let n = h.dim();
    let mut seed = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let c = h.mul_basis(i, j).sub(h.mul_basis(j, i));
            if !c.is_zero() {
                seed.push(c);
            }
        }
    }
    let ideal = two_sided_ideal_closure(h, &seed);
    quotient_by_ideal(h, ideal)
}

/// Rank of the linear map sending quotient basis classes to their images, used
/// to certify bijectivity of candidate isomorphisms.
pub fn map_rank(images: &[Vect]) -> usize {
    let mat: Vec<Vec<Scalar>> = images.iter().map(|v| v.coeffs.clone()).collect();
    linalg::rank(mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn abelianization_of_s3_is_two_dimensional() {
        let h = catalog::s3();
        let q = abelianization(&h);
        assert_eq!(q.dim(), 2);
        assert!(q.is_hopf_ideal);
        let induced = q.induced.as_ref().unwrap();
        assert!(induced.validate().passes());
        assert!(induced.is_commutative());
        // the quotient is a group algebra of Z/2: classes of e and s
        assert!(induced.has_grouplike_basis());
    }

    #[test]
    fn abelianization_of_sweedler_is_span_of_one_and_g() {
        let h = catalog::sweedler_h4();
        let q = abelianization(&h);
        assert_eq!(q.dim(), 2);
        assert!(q.is_hopf_ideal);
        assert_eq!(q.complement, vec![0, 1]); // classes of 1 and g
        let induced = q.induced.as_ref().unwrap();
        assert!(induced.validate().passes());
        assert!(induced.is_commutative());
        // x and gx lie in the commutator ideal
        assert!(q.project(&Vect::basis(4, 2)).is_zero());
        assert!(q.project(&Vect::basis(4, 3)).is_zero());
    }

    #[test]
    fn commutative_algebras_have_zero_commutator_ideal() {
        for name in ["z2", "z3", "klein4", "oz2", "os3"] {
            let h = catalog::fixture(name).unwrap();
            let q = abelianization(&h);
            assert_eq!(q.dim(), h.dim(), "{name}");
            assert_eq!(q.ideal.dim(), 0, "{name}");
            assert_eq!(q.induced.as_ref().unwrap(), &h, "{name}");
        }
    }
}
