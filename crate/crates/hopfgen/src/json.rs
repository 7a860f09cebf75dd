//! JSON wire formats. Rational entries are always strings (`"p"` or
//! `"p/q"`); the multiplication tensor, unit, counit, and antipode are dense,
//! the comultiplication is a sparse triplet list `[j, k, "c"]` per basis
//! element.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::form::{BilinearForm, LinearForm};
use crate::hopf::HopfAlgebra;
use crate::scalar;
use crate::tensor::{Tensor, Vect};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    /// `mult[i][j]` is the coefficient vector of `x_i x_j`.
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    /// `comult[i]` lists triplets `[j, k, c]` with `Delta(x_i) = sum c x_j (x) x_k`.
    pub comult: Vec<Vec<(usize, usize, String)>>,
    pub counit: Vec<String>,
    /// `antipode[i]` is the coefficient vector of `S(x_i)`.
    pub antipode: Vec<Vec<String>>,
}

impl AlgebraJson {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        AlgebraJson {
            dim: n,
            basis: h.basis_names().to_vec(),
            mult: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            h.mul_basis(i, j)
                                .coeffs
                                .iter()
                                .map(scalar::render)
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            unit: h.unit().coeffs.iter().map(scalar::render).collect(),
            comult: (0..n)
                .map(|i| {
                    h.comult_basis(i)
                        .terms
                        .iter()
                        .map(|(idx, c)| (idx[0], idx[1], scalar::render(c)))
                        .collect()
                })
                .collect(),
            counit: h.counit_row().iter().map(scalar::render).collect(),
            antipode: (0..n)
                .map(|i| {
                    h.antipode_basis(i)
                        .coeffs
                        .iter()
                        .map(scalar::render)
                        .collect()
                })
                .collect(),
        }
    }

    pub fn into_algebra(self) -> Result<HopfAlgebra, Error> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "dim is {n} but basis has {} names",
                self.basis.len()
            )));
        }
        let parse_vect = |v: &[String]| -> Result<Vect, Error> {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a dimension-{n} algebra",
                    v.len()
                )));
            }
            Ok(Vect {
                coeffs: v
                    .iter()
                    .map(|s| scalar::parse(s))
                    .collect::<Result<_, _>>()?,
            })
        };
        let shape = |ok: bool, what: &str| -> Result<(), Error> {
            if ok {
                Ok(())
            } else {
                Err(Error::DimensionMismatch(what.to_string()))
            }
        };
        shape(self.mult.len() == n, "mult tensor must have n rows")?;
        shape(
            self.mult.iter().all(|r| r.len() == n),
            "mult tensor rows must have n entries",
        )?;
        shape(self.comult.len() == n, "comult must have n entries")?;
        shape(self.counit.len() == n, "counit must have n entries")?;
        shape(self.antipode.len() == n, "antipode must have n rows")?;
        let mult = self
            .mult
            .iter()
            .map(|row| row.iter().map(|v| parse_vect(v)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let unit = parse_vect(&self.unit)?;
        let mut comult = Vec::with_capacity(n);
        for triplets in &self.comult {
            let mut t = Tensor::zero(vec![n, n]);
            for (j, k, c) in triplets {
                if *j >= n || *k >= n {
                    return Err(Error::DimensionMismatch(format!(
                        "comult index ({j}, {k}) out of range"
                    )));
                }
                t.add_term(vec![*j, *k], scalar::parse(c)?);
            }
            comult.push(t);
        }
        let counit = self
            .counit
            .iter()
            .map(|s| scalar::parse(s))
            .collect::<Result<_, _>>()?;
        let antipode = self
            .antipode
            .iter()
            .map(|v| parse_vect(v))
            .collect::<Result<_, _>>()?;
        HopfAlgebra::from_parts(self.basis, mult, unit, comult, counit, antipode)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BilinearJson {
    pub dim: usize,
    pub matrix: Vec<Vec<String>>,
}

impl BilinearJson {
    pub fn from_form(f: &BilinearForm) -> Self {
        BilinearJson {
            dim: f.dim(),
            matrix: f
                .values
                .iter()
                .map(|row| row.iter().map(scalar::render).collect())
                .collect(),
        }
    }

    pub fn into_form(self) -> Result<BilinearForm, Error> {
        if self.matrix.len() != self.dim || self.matrix.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch(
                "bilinear form matrix must be dim x dim".to_string(),
            ));
        }
        Ok(BilinearForm::new(
            self.matrix
                .iter()
                .map(|row| row.iter().map(|s| scalar::parse(s)).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?,
        ))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LinearJson {
    pub dim: usize,
    pub vector: Vec<String>,
}

impl LinearJson {
    pub fn from_form(f: &LinearForm) -> Self {
        LinearJson {
            dim: f.dim(),
            vector: f.values.iter().map(scalar::render).collect(),
        }
    }

    pub fn into_form(self) -> Result<LinearForm, Error> {
        if self.vector.len() != self.dim {
            return Err(Error::DimensionMismatch(
                "linear form vector must have dim entries".to_string(),
            ));
        }
        Ok(LinearForm::new(
            self.vector
                .iter()
                .map(|s| scalar::parse(s))
                .collect::<Result<_, _>>()?,
        ))
    }
}

pub fn read_algebra(text: &str) -> Result<HopfAlgebra, Error> {
    let parsed: AlgebraJson = serde_json::from_str(text)?;
    parsed.into_algebra()
}

pub fn write_algebra(h: &HopfAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_algebra(h)).expect("serialization")
}

pub fn read_bilinear(text: &str) -> Result<BilinearForm, Error> {
    let parsed: BilinearJson = serde_json::from_str(text)?;
    parsed.into_form()
}

pub fn write_bilinear(f: &BilinearForm) -> String {
    serde_json::to_string_pretty(&BilinearJson::from_form(f)).expect("serialization")
}

pub fn read_linear(text: &str) -> Result<LinearForm, Error> {
    let parsed: LinearJson = serde_json::from_str(text)?;
    parsed.into_form()
}

pub fn write_linear(f: &LinearForm) -> String {
    serde_json::to_string_pretty(&LinearJson::from_form(f)).expect("serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebras_round_trip_through_json() {
        for name in catalog::FIXTURE_NAMES {
            let h = catalog::fixture(name).unwrap();
            let text = write_algebra(&h);
            let back = read_algebra(&text).unwrap();
            assert_eq!(back, h, "{name}");
        }
    }

    #[test]
    fn forms_round_trip_through_json() {
        let alpha = catalog::klein_sign_cocycle();
        let back = read_bilinear(&write_bilinear(&alpha)).unwrap();
        assert_eq!(back, alpha);
        let lam = LinearForm::new(vec![crate::scalar::int(1), crate::scalar::ratio(2, 3)]);
        let back = read_linear(&write_linear(&lam)).unwrap();
        assert_eq!(back, lam);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(read_algebra("{}").is_err());
        let mut j = AlgebraJson::from_algebra(&catalog::group_z(2));
        j.unit.pop();
        let text = serde_json::to_string(&j).unwrap();
        assert!(read_algebra(&text).is_err());
    }
}
