//! The tensor algebra on the underlying space of a Hopf algebra: free
//! noncommutative words in letters `X[x]`, one letter per basis element, with
//! the two comodule-algebra coactions and the distinguished coinvariant
//! elements built from the antipode.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::traits::{One, Zero};

use crate::form::Verdict;
use crate::hopf::HopfAlgebra;
use crate::scalar::{self, Scalar};
use crate::tensor::Vect;

/// A formal linear combination of words over the basis alphabet; the empty
/// word is the unit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeWord {
    pub terms: BTreeMap<Vec<usize>, Scalar>,
}

impl FreeWord {
    pub fn zero() -> Self {
        FreeWord::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), scalar::one());
        FreeWord { terms }
    }

    pub fn letter(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![i], scalar::one());
        FreeWord { terms }
    }

    /// The letter with a vector subscript, extended linearly.
    pub fn letter_of(v: &Vect) -> Self {
        let mut w = FreeWord::zero();
        for (i, c) in v.support() {
            w.add_term(vec![i], c.clone());
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(word).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FreeWord {
        if c.is_zero() {
            return FreeWord::zero();
        }
        FreeWord {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k * c))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = FreeWord::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Renders over an algebra's basis names, e.g. `X[g]·X[x]`.
    pub fn render(&self, h: &HopfAlgebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (word, c)) in self.terms.iter().enumerate() {
            let neg = crate::scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || word.is_empty() {
                factors.push(scalar::render(&abs));
            }
            for &l in word {
                factors.push(format!("X[{}]", h.basis_name(l)));
            }
            let _ = write!(out, "{}", factors.join("·"));
        }
        out
    }
}

/// Which side a coaction acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Right,
    Left,
}

/// An element of `T(X_H) (x) H` (right) or `H (x) T(X_H)` (left), stored as a
/// map from words to their `H`-legs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoactedWord {
    pub side: Side,
    pub dim: usize,
    pub terms: BTreeMap<Vec<usize>, Vect>,
}

impl CoactedWord {
    pub fn zero(side: Side, dim: usize) -> Self {
        CoactedWord {
            side,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, word: Vec<usize>, leg: &Vect, c: &Scalar) {
        if c.is_zero() || leg.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(word)
            .or_insert_with(|| Vect::zero(self.dim));
        e.add_scaled(leg, c);
        if e.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    /// `w (x) 1` (right) or `1 (x) w` (left).
    pub fn coinvariant_image(h: &HopfAlgebra, side: Side, w: &FreeWord) -> Self {
        let mut out = CoactedWord::zero(side, h.dim());
        for (word, c) in &w.terms {
            out.add_term(word.clone(), h.unit(), c);
        }
        out
    }
}

/// The right coaction `X_x -> X_{x_1} (x) x_2`, extended as an algebra
/// morphism (word legs concatenate, `H`-legs multiply).
pub fn coact_right(h: &HopfAlgebra, w: &FreeWord) -> CoactedWord {
    let n = h.dim();
    let mut out = CoactedWord::zero(Side::Right, n);
    for (word, c) in &w.terms {
        // states: (word built so far, accumulated H-leg, coefficient)
        let mut states: Vec<(Vec<usize>, Vect, Scalar)> =
            vec![(Vec::new(), h.unit().clone(), c.clone())];
        for &l in word {
            let mut next = Vec::new();
            for (w_acc, leg, coeff) in &states {
                for (pair, cc) in &h.comult_basis(l).terms {
                    let mut nw = w_acc.clone();
                    nw.push(pair[0]);
                    let nleg = h.mul(leg, &Vect::basis(n, pair[1]));
                    if !nleg.is_zero() {
                        next.push((nw, nleg, coeff * cc));
                    }
                }
            }
            states = next;
        }
        for (word, leg, coeff) in states {
            out.add_term(word, &leg, &coeff);
        }
    }
    out
}

/// The left coaction `X_x -> x_1 (x) X_{x_2}`, extended as an algebra morphism.
pub fn coact_left(h: &HopfAlgebra, w: &FreeWord) -> CoactedWord {
    let n = h.dim();
    let mut out = CoactedWord::zero(Side::Left, n);
    for (word, c) in &w.terms {
        let mut states: Vec<(Vec<usize>, Vect, Scalar)> =
            vec![(Vec::new(), h.unit().clone(), c.clone())];
        for &l in word {
            let mut next = Vec::new();
            for (w_acc, leg, coeff) in &states {
                for (pair, cc) in &h.comult_basis(l).terms {
                    let mut nw = w_acc.clone();
                    nw.push(pair[1]);
                    let nleg = h.mul(leg, &Vect::basis(n, pair[0]));
                    if !nleg.is_zero() {
                        next.push((nw, nleg, coeff * cc));
                    }
                }
            }
            states = next;
        }
        for (word, leg, coeff) in states {
            out.add_term(word, &leg, &coeff);
        }
    }
    out
}

/// The four distinguished words attached to basis vectors `x` (and `y`):
/// `P_x = X_{x_1} X_{S(x_2)}`, `P'_x = X_{S(x_1)} X_{x_2}`,
/// `Q_{x,y} = X_{x_1} X_{y_1} X_{S(x_2 y_2)}`,
/// `Q'_{x,y} = X_{S(x_1 y_1)} X_{x_2} X_{y_2}`.
pub struct PqWords {
    pub p: FreeWord,
    pub p_prime: FreeWord,
    pub q: FreeWord,
    pub q_prime: FreeWord,
}

pub fn build_p(h: &HopfAlgebra, x: &Vect) -> FreeWord {
    let mut out = FreeWord::zero();
    for (pair, c) in h.sweedler_terms(x, 2) {
        let head = FreeWord::letter(pair[0]);
        let tail = FreeWord::letter_of(h.antipode_basis(pair[1]));
        out = out.add(&head.mul(&tail).scale(&c));
    }
    out
}

pub fn build_p_prime(h: &HopfAlgebra, x: &Vect) -> FreeWord {
    let mut out = FreeWord::zero();
    for (pair, c) in h.sweedler_terms(x, 2) {
        let head = FreeWord::letter_of(h.antipode_basis(pair[0]));
        let tail = FreeWord::letter(pair[1]);
        out = out.add(&head.mul(&tail).scale(&c));
    }
    out
}

pub fn build_q(h: &HopfAlgebra, x: &Vect, y: &Vect) -> FreeWord {
    let mut out = FreeWord::zero();
    for (tx, cx) in h.sweedler_terms(x, 2) {
        for (ty, cy) in h.sweedler_terms(y, 2) {
            let head = FreeWord::letter(tx[0]).mul(&FreeWord::letter(ty[0]));
            let prod = h.mul_basis(tx[1], ty[1]);
            let tail = FreeWord::letter_of(&h.antipode(prod));
            out = out.add(&head.mul(&tail).scale(&(&cx * &cy)));
        }
    }
    out
}

pub fn build_q_prime(h: &HopfAlgebra, x: &Vect, y: &Vect) -> FreeWord {
    let mut out = FreeWord::zero();
    for (tx, cx) in h.sweedler_terms(x, 2) {
        for (ty, cy) in h.sweedler_terms(y, 2) {
            let prod = h.mul_basis(tx[0], ty[0]);
            let head = FreeWord::letter_of(&h.antipode(prod));
            let tail = FreeWord::letter(tx[1]).mul(&FreeWord::letter(ty[1]));
            out = out.add(&head.mul(&tail).scale(&(&cx * &cy)));
        }
    }
    out
}

pub fn build_pq(h: &HopfAlgebra, x: &Vect, y: &Vect) -> PqWords {
    PqWords {
        p: build_p(h, x),
        p_prime: build_p_prime(h, x),
        q: build_q(h, x, y),
        q_prime: build_q_prime(h, x, y),
    }
}

/// Checks that `w` is coinvariant for the chosen side:
/// `coact(w) = w (x) 1` (right) or `= 1 (x) w` (left).
pub fn check_coinvariance(h: &HopfAlgebra, w: &FreeWord, side: Side) -> Verdict {
    let image = match side {
        Side::Right => coact_right(h, w),
        Side::Left => coact_left(h, w),
    };
    let expected = CoactedWord::coinvariant_image(h, side, w);
    if image == expected {
        Verdict::Holds
    } else {
        Verdict::Fails {
            location: format!("{side:?} coaction of {}", w.render(h)),
            lhs: format!("{} terms", image.terms.len()),
            rhs: "w (x) 1".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::int;

    #[test]
    fn coaction_of_letters_matches_comultiplication() {
        let h = catalog::sweedler_h4();
        let x = h.basis_index("x").unwrap();
        let img = coact_right(&h, &FreeWord::letter(x));
        // X[x] (x) 1 + X[g] (x) x
        assert_eq!(img.terms.len(), 2);
        assert_eq!(img.terms.get(&vec![x]), Some(&Vect::basis(4, 0)));
        assert_eq!(img.terms.get(&vec![1]), Some(&Vect::basis(4, 2)));
        // grouplike letter
        let img_g = coact_right(&h, &FreeWord::letter(1));
        assert_eq!(img_g.terms.get(&vec![1]), Some(&Vect::basis(4, 1)));
    }

    #[test]
    fn coaction_is_multiplicative_on_a_product_word() {
        let h = catalog::sweedler_h4();
        let (g, x) = (1, 2);
        let w = FreeWord::letter(g).mul(&FreeWord::letter(x));
        let img = coact_right(&h, &w);
        // (X_g (x) g)(X_x (x) 1 + X_g (x) x) = X_gX_x (x) g + X_gX_g (x) gx
        assert_eq!(img.terms.len(), 2);
        assert_eq!(img.terms.get(&vec![g, x]), Some(&Vect::basis(4, 1)));
        assert_eq!(img.terms.get(&vec![g, g]), Some(&Vect::basis(4, 3)));
    }

    #[test]
    fn sweedler_p_x_is_the_signed_two_letter_word() {
        let h = catalog::sweedler_h4();
        let p = build_p(&h, &Vect::basis(4, 2));
        // P_x = X[x]·X[1] - X[g]·X[gx]
        assert_eq!(p.terms.len(), 2);
        assert_eq!(p.terms.get(&vec![2, 0]), Some(&int(1)));
        assert_eq!(p.terms.get(&vec![1, 3]), Some(&int(-1)));
        assert_eq!(p.render(&h), "-X[g]·X[gx] + X[x]·X[1]");
    }

    #[test]
    fn grouplike_pq_words() {
        let h = catalog::group_z(3);
        let g = Vect::basis(3, 1);
        let p = build_p(&h, &g);
        assert_eq!(p.terms.get(&vec![1, 2]), Some(&int(1))); // X[g]·X[g2]
        let q = build_q(&h, &g, &g);
        assert_eq!(q.terms.get(&vec![1, 1, 1]), Some(&int(1))); // X[g]^3, since (g g)^{-1} = g
    }

    #[test]
    fn pq_words_are_coinvariant_and_letters_are_not() {
        for name in catalog::FIXTURE_NAMES {
            let h = catalog::fixture(name).unwrap();
            let n = h.dim();
            for i in 0..n {
                let x = Vect::basis(n, i);
                assert!(check_coinvariance(&h, &build_p(&h, &x), Side::Right).holds());
                assert!(check_coinvariance(&h, &build_p_prime(&h, &x), Side::Left).holds());
                for j in 0..n {
                    let y = Vect::basis(n, j);
                    assert!(check_coinvariance(&h, &build_q(&h, &x, &y), Side::Right).holds());
                    assert!(
                        check_coinvariance(&h, &build_q_prime(&h, &x, &y), Side::Left).holds()
                    );
                }
            }
        }
        // negative control: a bare letter with a nontrivial coproduct
        let h = catalog::sweedler_h4();
        let x = h.basis_index("x").unwrap();
        assert!(!check_coinvariance(&h, &FreeWord::letter(x), Side::Right).holds());
    }
}
