//! The algebra morphism `mu : T(X_H) -> S(t_H) (x) H`, its convolution
//! inverse `mu'`, and the ring elements `p`, `p'`, `q`, `q'` they produce from
//! the coinvariant words. Each element is computed along two independent
//! routes (through the word maps and through the closed formulas) and the
//! routes are required to agree.


use crate::error::Error;
use crate::form::Verdict;
use crate::freeword::FreeWord;
use crate::poly::{Monomial, Poly};
use crate::presented::{PresentedRing, RingElement};
use crate::scalar::Scalar;
use crate::tensor::Vect;

/// An element of `(presented ring) (x) H`, stored as one ring leg per basis
/// element of `H`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingTensorH {
    pub legs: Vec<Poly>,
}

impl RingTensorH {
    pub fn zero(n: usize) -> Self {
        RingTensorH {
            legs: vec![Poly::zero(); n],
        }
    }

    pub fn unit(ring: &PresentedRing) -> Self {
        let h = ring.hopf();
        let mut out = RingTensorH::zero(h.dim());
        for (i, c) in h.unit().support() {
            out.legs[i] = ring.constant(c.clone());
        }
        out
    }

    pub fn add(&self, ring: &PresentedRing, other: &RingTensorH) -> RingTensorH {
        RingTensorH {
            legs: self
                .legs
                .iter()
                .zip(&other.legs)
                .map(|(a, b)| ring.poly_ring().add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &PresentedRing, c: &Scalar) -> RingTensorH {
        RingTensorH {
            legs: self.legs.iter().map(|l| ring.poly_ring().scale(l, c)).collect(),
        }
    }

    /// Componentwise product `(p (x) h)(q (x) k) = pq (x) hk`.
    pub fn mul(&self, ring: &PresentedRing, other: &RingTensorH) -> RingTensorH {
        let h = ring.hopf();
        let n = h.dim();
        let pr = ring.poly_ring();
        let mut acc: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); n];
        for (i, a) in self.legs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.legs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = pr.mul(a, b);
                for (k, c) in h.mul_basis(i, j).support() {
                    acc[k].extend(prod.terms.iter().map(|(m, x)| (m.clone(), x * c)));
                }
            }
        }
        RingTensorH {
            legs: acc
                .into_iter()
                .map(|terms| ring.nf(&pr.from_terms(terms)))
                .collect(),
        }
    }

    pub fn nf(&self, ring: &PresentedRing) -> RingTensorH {
        RingTensorH {
            legs: self.legs.iter().map(|l| ring.nf(l)).collect(),
        }
    }

    /// When the `H`-leg is a scalar multiple of the unit, returns that ring
    /// coefficient, i.e. `r` with `self = r (x) 1`.
    pub fn scalar_leg(&self, ring: &PresentedRing) -> Result<RingElement, Error> {
        let h = ring.hopf();
        let pr = ring.poly_ring();
        let (i0, c0) = h
            .unit()
            .support()
            .next()
            .expect("the unit vector is nonzero");
        let r = pr.scale(&self.legs[i0], &(crate::scalar::one() / c0));
        for i in 0..h.dim() {
            let expected = pr.scale(&r, &h.unit().coeffs[i]);
            if self.legs[i] != expected {
                return Err(Error::Mismatch(format!(
                    "H-leg is not a multiple of the unit at basis {}",
                    h.basis_name(i)
                )));
            }
        }
        Ok(ring.nf(&r))
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

/// `mu(X_x) = t_{x_1} (x) x_2` on a single letter.
fn mu_letter(ring: &PresentedRing, letter: usize) -> RingTensorH {
    let h = ring.hopf();
    let mut out = RingTensorH::zero(h.dim());
    let pr = ring.poly_ring();
    for (pair, c) in &h.comult_basis(letter).terms {
        out.legs[pair[1]] = pr.add(&out.legs[pair[1]], &pr.scale(&pr.var(pair[0]), c));
    }
    out
}

/// `mu'(X_x) = t^{-1}_{x_2} (x) S(x_1)` on a single letter.
fn mu_prime_letter(ring: &PresentedRing, letter: usize) -> RingTensorH {
    let h = ring.hopf();
    let n = h.dim();
    let mut out = RingTensorH::zero(n);
    let pr = ring.poly_ring();
    for (pair, c) in &h.comult_basis(letter).terms {
        let u = pr.var(n + pair[1]);
        for (m, s) in h.antipode_basis(pair[0]).support() {
            out.legs[m] = pr.add(&out.legs[m], &pr.scale(&u, &(c * s)));
        }
    }
    out
}

/// The algebra morphism `mu`, extended multiplicatively over words.
pub fn mu(ring: &PresentedRing, w: &FreeWord) -> RingTensorH {
    let h = ring.hopf();
    let mut out = RingTensorH::zero(h.dim());
    for (word, c) in &w.terms {
        let mut acc = RingTensorH::unit(ring);
        for &l in word {
            acc = acc.mul(ring, &mu_letter(ring, l));
        }
        out = out.add(ring, &acc.scale(ring, c));
    }
    out.nf(ring)
}

/// The anti-algebra morphism `mu'`: letters map through [`mu_prime_letter`]
/// and words multiply in reverse order.
pub fn mu_prime(ring: &PresentedRing, w: &FreeWord) -> RingTensorH {
    let h = ring.hopf();
    let mut out = RingTensorH::zero(h.dim());
    for (word, c) in &w.terms {
        let mut acc = RingTensorH::unit(ring);
        for &l in word.iter().rev() {
            acc = acc.mul(ring, &mu_prime_letter(ring, l));
        }
        out = out.add(ring, &acc.scale(ring, c));
    }
    out.nf(ring)
}

/// Checks that `mu'` is the convolution inverse of `mu` on all generators:
/// `sum mu(X_{x_1}) mu'(X_{x_2}) = eps(x) (1 (x) 1)` and symmetrically.
pub fn mu_convolution_check(ring: &PresentedRing) -> Verdict {
    let h = ring.hopf();
    let n = h.dim();
    for i in 0..n {
        let mut left = RingTensorH::zero(n);
        let mut right = RingTensorH::zero(n);
        for (pair, c) in &h.comult_basis(i).terms {
            let a = mu_letter(ring, pair[0]);
            let b = mu_prime_letter(ring, pair[1]);
            left = left.add(ring, &a.mul(ring, &b).scale(ring, c));
            let a2 = mu_prime_letter(ring, pair[0]);
            let b2 = mu_letter(ring, pair[1]);
            right = right.add(ring, &a2.mul(ring, &b2).scale(ring, c));
        }
        let want = RingTensorH::unit(ring).scale(ring, &h.counit_row()[i]).nf(ring);
        if left.nf(ring) != want || right.nf(ring) != want {
            return Verdict::Fails {
                location: format!("basis element {}", h.basis_name(i)),
                lhs: left.render(ring),
                rhs: want.render(ring),
            };
        }
    }
    Verdict::Holds
}

/// The elements `p_x, p'_x, q_{x,y}, q'_{x,y}` of the presented ring.
#[derive(Clone, Debug)]
pub struct PqElements {
    pub p: RingElement,
    pub p_prime: RingElement,
    pub q: RingElement,
    pub q_prime: RingElement,
}

/// Computes the four elements for vectors `x`, `y` along both routes — the
/// word maps (`mu` of the coinvariant words, whose `H`-leg must be trivial)
/// and the closed formulas
///
/// ```text
/// p_x = t_{x_1} t_{S(x_2)}            p'_x = t^{-1}_{S(x_1)} t^{-1}_{x_2}
/// q_{x,y} = t_{x_1} t_{y_1} t_{S(x_2 y_2)}
/// q'_{x,y} = t^{-1}_{S(x_1 y_1)} t^{-1}_{x_2} t^{-1}_{y_2}
/// ```
///
/// and fails if any pair of routes disagrees.
pub fn pq_elements(ring: &PresentedRing, x: &Vect, y: &Vect) -> Result<PqElements, Error> {
    let h = ring.hopf();
    let pr = ring.poly_ring();

    // route 1: word maps
    let p_mu = mu(ring, &crate::freeword::build_p(h, x)).scalar_leg(ring)?;
    let p_prime_mu = mu_prime(ring, &crate::freeword::build_p_prime(h, x)).scalar_leg(ring)?;
    let q_mu = mu(ring, &crate::freeword::build_q(h, x, y)).scalar_leg(ring)?;
    let q_prime_mu =
        mu_prime(ring, &crate::freeword::build_q_prime(h, x, y)).scalar_leg(ring)?;

    // route 2: closed formulas
    let mut p = Poly::zero();
    let mut p_prime = Poly::zero();
    for (pair, c) in h.sweedler_terms(x, 2) {
        let head = pr.var(pair[0]);
        let tail = ring.t_of(h.antipode_basis(pair[1]));
        p = pr.add(&p, &pr.scale(&pr.mul(&head, &tail), &c));
        let head2 = ring.tinv_of(h.antipode_basis(pair[0]));
        let tail2 = pr.var(h.dim() + pair[1]);
        p_prime = pr.add(&p_prime, &pr.scale(&pr.mul(&head2, &tail2), &c));
    }
    let mut q = Poly::zero();
    let mut q_prime = Poly::zero();
    for (tx, cx) in h.sweedler_terms(x, 2) {
        for (ty, cy) in h.sweedler_terms(y, 2) {
            let c = &cx * &cy;
            let head = pr.mul(&pr.var(tx[0]), &pr.var(ty[0]));
            let tail = ring.t_of(&h.antipode(h.mul_basis(tx[1], ty[1])));
            q = pr.add(&q, &pr.scale(&pr.mul(&head, &tail), &c));
            let head2 = ring.tinv_of(&h.antipode(h.mul_basis(tx[0], ty[0])));
            let tail2 = pr.mul(&pr.var(h.dim() + tx[1]), &pr.var(h.dim() + ty[1]));
            q_prime = pr.add(&q_prime, &pr.scale(&pr.mul(&head2, &tail2), &c));
        }
    }
    let p = ring.nf(&p);
    let p_prime = ring.nf(&p_prime);
    let q = ring.nf(&q);
    let q_prime = ring.nf(&q_prime);

    for (name, a, b) in [
        ("p", &p, &p_mu),
        ("p'", &p_prime, &p_prime_mu),
        ("q", &q, &q_mu),
        ("q'", &q_prime, &q_prime_mu),
    ] {
        if a != b {
            return Err(Error::Mismatch(format!(
                "{name}: closed formula {} vs word map {}",
                ring.render(a),
                ring.render(b)
            )));
        }
    }
    Ok(PqElements {
        p,
        p_prime,
        q,
        q_prime,
    })
}

/// All `p`, `p'` (per basis element) and `q`, `q'` (per basis pair) values.
#[derive(Clone, Debug)]
pub struct PqTables {
    pub p: Vec<RingElement>,
    pub p_prime: Vec<RingElement>,
    pub q: Vec<Vec<RingElement>>,
    pub q_prime: Vec<Vec<RingElement>>,
}

pub fn pq_tables(ring: &PresentedRing) -> Result<PqTables, Error> {
    let n = ring.hopf().dim();
    let mut p = Vec::with_capacity(n);
    let mut p_prime = Vec::with_capacity(n);
    let mut q = vec![vec![Poly::zero(); n]; n];
    let mut q_prime = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let e = pq_elements(ring, &Vect::basis(n, i), &Vect::basis(n, j))?;
            if j == 0 {
                p.push(e.p.clone());
                p_prime.push(e.p_prime.clone());
            }
            q[i][j] = e.q;
            q_prime[i][j] = e.q_prime;
        }
    }
    Ok(PqTables {
        p,
        p_prime,
        q,
        q_prime,
    })
}

impl PqTables {
    pub fn p_at(&self, ring: &PresentedRing, v: &Vect) -> RingElement {
        let mut acc = Poly::zero();
        for (i, c) in v.support() {
            acc = ring.poly_ring().add(&acc, &ring.poly_ring().scale(&self.p[i], c));
        }
        acc
    }

    pub fn p_prime_at(&self, ring: &PresentedRing, v: &Vect) -> RingElement {
        let mut acc = Poly::zero();
        for (i, c) in v.support() {
            acc = ring
                .poly_ring()
                .add(&acc, &ring.poly_ring().scale(&self.p_prime[i], c));
        }
        acc
    }
}

/// The factorizations of the generic cocycle through the `p`/`q` elements
/// (trivial cocycle):
///
/// ```text
/// sigma(x, y) = q_{x_1, y_1} p'_{x_2 y_2}
/// sigma^{-1}(x, y) = p_{x_1 y_1} q'_{x_2, y_2}
/// ```
///
/// checked on all basis pairs by normal form.
pub fn verify_prop_nice(
    ring: &PresentedRing,
    gc: &crate::sigma::GenericCocycle,
    pq: &PqTables,
) -> Verdict {
    let h = ring.hopf();
    if !gc.is_trivial_alpha(h) {
        return Verdict::Skipped("requires the trivial cocycle".to_string());
    }
    let n = h.dim();
    let pr = ring.poly_ring();
    for i in 0..n {
        for j in 0..n {
            let mut diff = gc.sigma[i][j].terms.clone();
            let mut diff_inv = gc.sigma_inv[i][j].terms.clone();
            for (di, ci) in &h.comult_basis(i).terms {
                for (dj, cj) in &h.comult_basis(j).terms {
                    let c = -(ci * cj);
                    let tail = pq.p_prime_at(ring, h.mul_basis(di[1], dj[1]));
                    let prod = pr.mul(&pq.q[di[0]][dj[0]], &tail);
                    diff.extend(prod.terms.iter().map(|(m, k)| (m.clone(), k * &c)));
                    let head = pq.p_at(ring, h.mul_basis(di[0], dj[0]));
                    let prod2 = pr.mul(&head, &pq.q_prime[di[1]][dj[1]]);
                    diff_inv.extend(prod2.terms.iter().map(|(m, k)| (m.clone(), k * &c)));
                }
            }
            if !ring.nf(&pr.from_terms(diff)).is_zero()
                || !ring.nf(&pr.from_terms(diff_inv)).is_zero()
            {
                return Verdict::Fails {
                    location: format!("({}, {})", h.basis_name(i), h.basis_name(j)),
                    lhs: ring.render(&gc.sigma[i][j]),
                    rhs: "the q p' factorization".to_string(),
                };
            }
        }
    }
    Verdict::Holds
}

/// In the cocommutative case the ring antipode exchanges the primed and
/// unprimed elements: `S(p'_x) = p_x` and `S(q'_{x,y}) = q_{x,y}`.
pub fn antipode_pq_cocommutative(ring: &PresentedRing, pq: &PqTables) -> Verdict {
    let h = ring.hopf();
    if !h.is_cocommutative() {
        return Verdict::Skipped("the algebra is not cocommutative".to_string());
    }
    let n = h.dim();
    for i in 0..n {
        if ring.antipode(&pq.p_prime[i]) != pq.p[i] {
            return Verdict::Fails {
                location: format!("p at {}", h.basis_name(i)),
                lhs: ring.render(&ring.antipode(&pq.p_prime[i])),
                rhs: ring.render(&pq.p[i]),
            };
        }
        for j in 0..n {
            if ring.antipode(&pq.q_prime[i][j]) != pq.q[i][j] {
                return Verdict::Fails {
                    location: format!("q at ({}, {})", h.basis_name(i), h.basis_name(j)),
                    lhs: ring.render(&ring.antipode(&pq.q_prime[i][j])),
                    rhs: ring.render(&pq.q[i][j]),
                };
            }
        }
    }
    Verdict::Holds
}
