//! Builtin algebras and cocycles used throughout the tests, the book, and the
//! CLI fixtures: the cyclic group algebras, the Klein four-group with its sign
//! cocycle, `S_3`, the duals `O(Z/2)` and `O(S_3)`, and the four-dimensional
//! Sweedler algebra.
//!
//! The ground field is `Q` everywhere. One catalog note on characteristic:
//! some quotient computations (for instance the commutator closure of the
//! Sweedler algebra, where `xg - gx = -2gx` is only useful because `2` is
//! invertible) would come out differently over fields of characteristic 2;
//! over `Q` no such degeneration occurs.

use crate::error::Error;
use crate::form::BilinearForm;
use crate::group::{build_dual_group_algebra, build_group_algebra, CayleyTable};
use crate::hopf::HopfAlgebra;
use crate::scalar::{self, int};
use crate::tensor::{Tensor, Vect};

/// Cayley table of `Z/n` with names `e, g, g2, ...`.
pub fn cyclic_cayley(n: usize) -> CayleyTable {
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    CayleyTable::new(names, table)
}

/// Cayley table of `Z/2 x Z/2` with names `e, a, b, ab`.
pub fn klein_cayley() -> CayleyTable {
    let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
    // encode (i, j) as i + 2j: e=(0,0), a=(1,0), b=(0,1), ab=(1,1)
    let table = (0..4usize)
        .map(|x| {
            (0..4usize)
                .map(|y| {
                    let (x1, x2) = (x & 1, x >> 1);
                    let (y1, y2) = (y & 1, y >> 1);
                    (x1 ^ y1) + 2 * (x2 ^ y2)
                })
                .collect()
        })
        .collect();
    CayleyTable::new(names, table)
}

/// Cayley table of `S_3` as permutations of three points, with the rotation
/// `r` and reflection `s`; names `e, r, r2, s, rs, r2s`.
pub fn s3_cayley() -> CayleyTable {
    // composition p*q acts as "apply q, then p"; rs denotes r composed with s
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2], // e
        [1, 2, 0], // r
        [2, 0, 1], // r2
        [1, 0, 2], // s
        [2, 1, 0], // rs
        [0, 2, 1], // r2s
    ];
    let names = ["e", "r", "r2", "s", "rs", "r2s"].map(String::from).to_vec();
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap()
                })
                .collect()
        })
        .collect();
    CayleyTable::new(names, table)
}

pub fn group_z(n: usize) -> HopfAlgebra {
    build_group_algebra(&cyclic_cayley(n)).expect("cyclic group")
}

pub fn klein_four() -> HopfAlgebra {
    build_group_algebra(&klein_cayley()).expect("Klein four-group")
}

pub fn s3() -> HopfAlgebra {
    build_group_algebra(&s3_cayley()).expect("S3")
}

pub fn dual_z2() -> HopfAlgebra {
    build_dual_group_algebra(&cyclic_cayley(2)).expect("O(Z/2)")
}

pub fn dual_s3() -> HopfAlgebra {
    build_dual_group_algebra(&s3_cayley()).expect("O(S3)")
}

/// The four-dimensional Sweedler algebra: basis `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Delta(g) = g (x) g`,
/// `Delta(x) = x (x) 1 + g (x) x`, `S(x) = -gx`.
pub fn sweedler_h4() -> HopfAlgebra {
    let names = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let n = 4;
    let (one, g, x, gx) = (0usize, 1usize, 2usize, 3usize);
    let b = |i: usize| Vect::basis(n, i);
    let neg = |v: Vect| v.scale(&int(-1));
    let zero = Vect::zero(n);
    // rows: left factor, columns: right factor
    let mult: Vec<Vec<Vect>> = vec![
        vec![b(one), b(g), b(x), b(gx)],
        vec![b(g), b(one), b(gx), b(x)],
        vec![b(x), neg(b(gx)), zero.clone(), zero.clone()],
        vec![b(gx), neg(b(x)), zero.clone(), zero.clone()],
    ];
    let mut comult = Vec::new();
    for i in 0..n {
        let mut t = Tensor::zero(vec![n, n]);
        match i {
            0 => t.add_term(vec![one, one], scalar::one()),
            1 => t.add_term(vec![g, g], scalar::one()),
            2 => {
                t.add_term(vec![x, one], scalar::one());
                t.add_term(vec![g, x], scalar::one());
            }
            _ => {
                // Delta(gx) = Delta(g) Delta(x) = gx (x) g + 1 (x) gx
                t.add_term(vec![gx, g], scalar::one());
                t.add_term(vec![one, gx], scalar::one());
            }
        }
        comult.push(t);
    }
    let counit = vec![int(1), int(1), int(0), int(0)];
    let antipode = vec![b(one), b(g), neg(b(gx)), b(x)];
    HopfAlgebra::from_parts(names, mult, b(one), comult, counit, antipode)
        .expect("Sweedler algebra structure constants")
}

/// The sign bicharacter on the Klein four-group: writing elements as pairs
/// `(i, j)` over `Z/2`, the form is `alpha((i, j), (k, l)) = (-1)^{j k}`.
pub fn klein_sign_cocycle() -> BilinearForm {
    let vals = (0..4usize)
        .map(|u| {
            (0..4usize)
                .map(|v| {
                    let j = u >> 1;
                    let k = v & 1;
                    if j * k == 1 {
                        int(-1)
                    } else {
                        int(1)
                    }
                })
                .collect()
        })
        .collect();
    BilinearForm::new(vals)
}

/// A coboundary cocycle on `kS_3`: `alpha(g, h) = c(g) c(h) / c(gh)` for a
/// fixed nonvanishing function `c` on the group. Convolution-invertible, and
/// cohomologous to the trivial cocycle by construction.
pub fn s3_coboundary_cocycle() -> BilinearForm {
    let cayley = s3_cayley();
    let c = [int(1), int(2), int(3), int(5), int(7), int(11)];
    let vals = (0..6usize)
        .map(|g| {
            (0..6usize)
                .map(|h| &(&c[g] * &c[h]) / &c[cayley.mul(g, h)])
                .collect()
        })
        .collect();
    BilinearForm::new(vals)
}

/// A bilinear form on the Sweedler algebra that is not lazy: the trivial
/// cocycle with the single entry `alpha(x, g)` bumped to 1. The lazy identity
/// fails at the pair `(x, g)`.
pub fn h4_nonlazy_form() -> BilinearForm {
    let h = sweedler_h4();
    let n = h.dim();
    let mut vals: Vec<Vec<_>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &h.counit_row()[i] * &h.counit_row()[j])
                .collect()
        })
        .collect();
    let x = h.basis_index("x").unwrap();
    let g = h.basis_index("g").unwrap();
    vals[x][g] = int(1);
    BilinearForm::new(vals)
}

/// Names of the builtin algebras, as accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 7] = ["z2", "z3", "klein4", "s3", "oz2", "os3", "sweedler"];

/// Looks up a builtin algebra by its fixture name.
pub fn fixture(name: &str) -> Result<HopfAlgebra, Error> {
    match name {
        "z2" => Ok(group_z(2)),
        "z3" => Ok(group_z(3)),
        "klein4" => Ok(klein_four()),
        "s3" => Ok(s3()),
        "oz2" => Ok(dual_z2()),
        "os3" => Ok(dual_s3()),
        "sweedler" => Ok(sweedler_h4()),
        other => Err(Error::Parse(format!("unknown fixture `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes_validation() {
        for name in FIXTURE_NAMES {
            let h = fixture(name).unwrap();
            let report = h.validate();
            assert!(report.passes(), "{name}:\n{report}");
        }
    }

    #[test]
    fn sweedler_products_match_defining_relations() {
        let h = sweedler_h4();
        let (g, x) = (1, 2);
        // xg = -gx
        let xg = h.mul(&Vect::basis(4, x), &Vect::basis(4, g));
        let gx = h.mul(&Vect::basis(4, g), &Vect::basis(4, x));
        assert_eq!(xg, gx.scale(&int(-1)));
        // x^2 = 0
        assert!(h.mul(&Vect::basis(4, x), &Vect::basis(4, x)).is_zero());
    }

    #[test]
    fn corrupted_sweedler_antipode_fails_at_x() {
        let h = sweedler_h4();
        // flip the sign of S(x)
        let mut antipode: Vec<Vect> = (0..4).map(|i| h.antipode_basis(i).clone()).collect();
        antipode[2] = antipode[2].scale(&int(-1));
        let bad = HopfAlgebra::from_parts(
            h.basis_names().to_vec(),
            (0..4)
                .map(|i| (0..4).map(|j| h.mul_basis(i, j).clone()).collect())
                .collect(),
            h.unit().clone(),
            (0..4).map(|i| h.comult_basis(i).clone()).collect(),
            h.counit_row().to_vec(),
            antipode,
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.passes());
        let failing: Vec<_> = report.failures().collect();
        assert!(
            failing
                .iter()
                .all(|c| c.failure.as_ref().unwrap().at == "x"),
            "{report}"
        );
    }

    #[test]
    fn sweedler_expansion_examples() {
        let h = sweedler_h4();
        let x = Vect::basis(4, 2);
        // d = 2: x (x) 1 + g (x) x
        let t2 = h.sweedler_expand(&x, 2);
        assert_eq!(t2.terms.len(), 2);
        assert_eq!(t2.terms.get(&vec![2, 0]), Some(&int(1)));
        assert_eq!(t2.terms.get(&vec![1, 2]), Some(&int(1)));
        // d = 3: x(x)1(x)1 + g(x)x(x)1 + g(x)g(x)x
        let t3 = h.sweedler_expand(&x, 3);
        assert_eq!(t3.terms.len(), 3);
        assert_eq!(t3.terms.get(&vec![2, 0, 0]), Some(&int(1)));
        assert_eq!(t3.terms.get(&vec![1, 2, 0]), Some(&int(1)));
        assert_eq!(t3.terms.get(&vec![1, 1, 2]), Some(&int(1)));
        // grouplike, d = 3
        let g = Vect::basis(4, 1);
        let tg = h.sweedler_expand(&g, 3);
        assert_eq!(tg.terms.len(), 1);
        assert_eq!(tg.terms.get(&vec![1, 1, 1]), Some(&int(1)));
    }

    #[test]
    fn coassociativity_bracketings_agree_up_to_degree_four() {
        for name in FIXTURE_NAMES {
            let h = fixture(name).unwrap();
            for i in 0..h.dim() {
                let v = Vect::basis(h.dim(), i);
                for d in 2..=4usize {
                    let base = h.sweedler_expand(&v, d - 1);
                    // expand once more at every possible leg
                    let mut variants = (0..d - 1).map(|leg| h.comult_leg(&base, leg));
                    let first = variants.next().unwrap();
                    assert!(
                        variants.all(|t| t == first),
                        "{name}: bracketing mismatch at basis {i}, degree {d}"
                    );
                }
            }
        }
    }
}
