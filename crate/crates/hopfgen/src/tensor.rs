//! Dense basis vectors and sparse tensors.
//!
//! `Vect` is an element of an n-dimensional space written over a fixed basis.
//! `Tensor` is an element of a tensor product of such spaces, stored sparsely
//! as a map from index tuples to coefficients; the per-leg dimensions are kept
//! so legs of different spaces (say an algebra leg and a Hopf-algebra leg) can
//! coexist. Structural contractions that need multiplication or comultiplication
//! live on `HopfAlgebra`; here are only the coefficient-level operations.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::scalar::Scalar;

/// Element of an `n`-dimensional space, dense over the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vect {
    pub coeffs: Vec<Scalar>,
}

impl Vect {
    pub fn zero(n: usize) -> Self {
        Vect {
            coeffs: vec![Scalar::zero(); n],
        }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Vect::zero(n);
        v.coeffs[i] = crate::scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vect) -> Vect {
        assert_eq!(self.dim(), other.dim());
        Vect {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vect) -> Vect {
        assert_eq!(self.dim(), other.dim());
        Vect {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vect {
        Vect {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Vect, c: &Scalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    /// Nonzero entries as `(index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    /// Pairing with a covector of the same length.
    pub fn pair(&self, covector: &[Scalar]) -> Scalar {
        assert_eq!(self.dim(), covector.len());
        let mut s = Scalar::zero();
        for (a, b) in self.coeffs.iter().zip(covector) {
            s += a * b;
        }
        s
    }
}

/// Sparse element of a tensor product of spaces with the given dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    pub dims: Vec<usize>,
    pub terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(dims: Vec<usize>) -> Self {
        Tensor {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn legs(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        debug_assert_eq!(idx.len(), self.dims.len());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            // re-look-up to remove; cheap at these sizes
            let key: Vec<usize> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn from_vect(v: &Vect) -> Self {
        let mut t = Tensor::zero(vec![v.dim()]);
        for (i, c) in v.support() {
            t.add_term(vec![i], c.clone());
        }
        t
    }

    /// The unique leg of a degree-1 tensor, as a vector.
    pub fn to_vect(&self) -> Vect {
        assert_eq!(self.legs(), 1, "to_vect needs a degree-1 tensor");
        let mut v = Vect::zero(self.dims[0]);
        for (idx, c) in &self.terms {
            v.coeffs[idx[0]] = c.clone();
        }
        v
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims);
        let mut t = self.clone();
        for (idx, c) in &other.terms {
            t.add_term(idx.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-crate::scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.dims.clone());
        }
        Tensor {
            dims: self.dims.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Tensor product: legs of `other` appended after the legs of `self`.
    pub fn product(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut t = Tensor::zero(dims);
        for (i1, c1) in &self.terms {
            for (i2, c2) in &other.terms {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                t.add_term(idx, c1 * c2);
            }
        }
        t
    }

    /// Swaps two legs (they must have equal dimension).
    pub fn swap_legs(&self, a: usize, b: usize) -> Tensor {
        assert_eq!(self.dims[a], self.dims[b]);
        let mut t = Tensor::zero(self.dims.clone());
        for (idx, c) in &self.terms {
            let mut j = idx.clone();
            j.swap(a, b);
            t.add_term(j, c.clone());
        }
        t
    }

    /// Applies a linear map to one leg; `images[i]` is the image of the i-th
    /// basis vector of that leg.
    pub fn map_leg(&self, leg: usize, images: &[Vect], new_dim: usize) -> Tensor {
        let mut dims = self.dims.clone();
        dims[leg] = new_dim;
        let mut t = Tensor::zero(dims);
        for (idx, c) in &self.terms {
            for (j, cj) in images[idx[leg]].support() {
                let mut nidx = idx.clone();
                nidx[leg] = j;
                t.add_term(nidx, c * cj);
            }
        }
        t
    }

    /// Contracts one leg against a covector, dropping the leg.
    pub fn contract_leg(&self, leg: usize, covector: &[Scalar]) -> Tensor {
        let mut dims = self.dims.clone();
        dims.remove(leg);
        let mut t = Tensor::zero(dims);
        for (idx, c) in &self.terms {
            let w = &covector[idx[leg]];
            if w.is_zero() {
                continue;
            }
            let mut nidx = idx.clone();
            nidx.remove(leg);
            t.add_term(nidx, c * w);
        }
        t
    }

    /// Coefficient of a degree-0 tensor.
    pub fn scalar_value(&self) -> Scalar {
        assert_eq!(self.legs(), 0);
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn product_and_swap() {
        let a = Tensor::from_vect(&Vect::basis(2, 0));
        let b = Tensor::from_vect(&Vect::basis(2, 1));
        let ab = a.product(&b);
        assert_eq!(ab.terms.len(), 1);
        assert_eq!(ab.terms.get(&vec![0, 1]), Some(&int(1)));
        let ba = ab.swap_legs(0, 1);
        assert_eq!(ba.terms.get(&vec![1, 0]), Some(&int(1)));
    }

    #[test]
    fn cancellation_prunes_terms() {
        let mut t = Tensor::zero(vec![3]);
        t.add_term(vec![1], int(2));
        t.add_term(vec![1], int(-2));
        assert!(t.is_zero());
    }

    #[test]
    fn contract_drops_leg() {
        let mut t = Tensor::zero(vec![2, 2]);
        t.add_term(vec![0, 1], int(3));
        let c = t.contract_leg(1, &[int(0), int(5)]);
        assert_eq!(c.dims, vec![2]);
        assert_eq!(c.terms.get(&vec![0]), Some(&int(15)));
    }
}
