//! The presented commutative Hopf ring of a Hopf algebra `H`.
//!
//! For each basis element `x` there are two variables, `T_x` standing for the
//! symbol `t_x` and `U_x` for its convolution inverse `t^{-1}_x`. The defining
//! ideal `J` is generated, for every basis element `x`, by both contraction
//! families
//!
//! ```text
//! sum t_{x_1} t^{-1}_{x_2} - eps(x)      and      sum t^{-1}_{x_1} t_{x_2} - eps(x)
//! ```
//!
//! expanded through the comultiplication tensor (the two coincide exactly when
//! `H` is cocommutative; both are kept and duplicates dropped). Elements are
//! kept in Gröbner normal form modulo `J` under degree-reverse-lexicographic
//! order with `T_1 < ... < T_n < U_1 < ... < U_n`, so equality is coefficient
//! equality of normal forms.
//!
//! The ring carries the Hopf structure maps: the counit evaluates both
//! variable families through `eps`, the antipode swaps `T_x` with `U_x`, and
//! the coproduct lands in the doubled ring (a second primed copy of the
//! variables adjoined, with the sum ideal). All three are verified to respect
//! `J` by [`PresentedRing::verify_hopf_maps`].

use num::traits::Zero;

use crate::cache::GroebnerCache;
use crate::form::{LinearForm, Verdict};
use crate::groebner::{buchberger, interreduce, normal_form, Budget};
use crate::hopf::HopfAlgebra;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::scalar::{self, Scalar};
use crate::tensor::Vect;

/// An element of the presented ring; values returned by [`PresentedRing`]
/// methods are always in Gröbner normal form modulo the defining ideal.
pub type RingElement = Poly;

#[derive(Clone, Debug)]
pub struct PresentedRing {
    hopf: HopfAlgebra,
    ring: PolyRing,
    relations: Vec<Poly>,
    basis: Vec<Poly>,
    /// Same elements as `basis`, ordered cheapest reducer first.
    red_basis: Vec<Poly>,
}

fn reduction_order(ring: &PolyRing, basis: &[Poly]) -> Vec<Poly> {
    let mut red = basis.to_vec();
    red.sort_by(|a, b| {
        (a.terms.len(), a.degree())
            .cmp(&(b.terms.len(), b.degree()))
            .then_with(|| ring.order.cmp(&a.lead().unwrap().0, &b.lead().unwrap().0))
    });
    red
}

impl PresentedRing {
    pub fn build(h: &HopfAlgebra) -> Self {
        Self::build_inner(h, None)
    }

    pub fn build_cached(h: &HopfAlgebra, cache: &GroebnerCache) -> Self {
        Self::build_inner(h, Some(cache))
    }

    fn build_inner(h: &HopfAlgebra, cache: Option<&GroebnerCache>) -> Self {
        let n = h.dim();
        let mut vars = Vec::with_capacity(2 * n);
        for name in h.basis_names() {
            vars.push(format!("T_{name}"));
        }
        for name in h.basis_names() {
            vars.push(format!("U_{name}"));
        }
        let ring = PolyRing::new(vars, MonomialOrder::DegRevLex);

        let mut relations: Vec<Poly> = Vec::new();
        for i in 0..n {
            let mut fwd = Vec::new();
            let mut bwd = Vec::new();
            for (pair, c) in &h.comult_basis(i).terms {
                let (j, k) = (pair[0], pair[1]);
                let mut tu = Monomial::one(2 * n);
                tu.exps[j] += 1;
                tu.exps[n + k] += 1;
                fwd.push((tu, c.clone()));
                let mut ut = Monomial::one(2 * n);
                ut.exps[n + j] += 1;
                ut.exps[k] += 1;
                bwd.push((ut, c.clone()));
            }
            let eps = h.counit_row()[i].clone();
            fwd.push((Monomial::one(2 * n), -eps.clone()));
            bwd.push((Monomial::one(2 * n), -eps));
            for rel in [ring.from_terms(fwd), ring.from_terms(bwd)] {
                let rel = ring.content_normalize(&rel);
                if !rel.is_zero() && !relations.contains(&rel) {
                    relations.push(rel);
                }
            }
        }

        let basis = match cache.and_then(|c| c.lookup(&ring, &relations)) {
            Some(b) => b,
            None => {
                let b = buchberger(&ring, &relations, &Budget::default())
                    .complete()
                    .expect("unbounded Buchberger run terminates");
                if let Some(c) = cache {
                    c.store(&ring, &relations, &b);
                }
                b
            }
        };

        let red_basis = reduction_order(&ring, &basis);
        PresentedRing {
            hopf: h.clone(),
            ring,
            relations,
            basis,
            red_basis,
        }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn poly_ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn nf(&self, p: &Poly) -> RingElement {
        normal_form(&self.ring, p, &self.red_basis)
    }

    pub fn zero(&self) -> RingElement {
        Poly::zero()
    }

    pub fn one(&self) -> RingElement {
        self.ring.one()
    }

    pub fn constant(&self, c: Scalar) -> RingElement {
        self.ring.constant(c)
    }

    /// The variable `T_x` for the i-th basis element (as a normal form).
    pub fn t_var(&self, i: usize) -> RingElement {
        self.nf(&self.ring.var(i))
    }

    /// The variable `U_x` for the i-th basis element (as a normal form).
    pub fn u_var(&self, i: usize) -> RingElement {
        self.nf(&self.ring.var(self.hopf.dim() + i))
    }

    /// Linear extension `v -> sum v_i T_i`.
    pub fn t_of(&self, v: &Vect) -> RingElement {
        let mut acc = Poly::zero();
        for (i, c) in v.support() {
            acc = self.ring.add(&acc, &self.ring.scale(&self.ring.var(i), c));
        }
        self.nf(&acc)
    }

    /// Linear extension `v -> sum v_i U_i`.
    pub fn tinv_of(&self, v: &Vect) -> RingElement {
        let n = self.hopf.dim();
        let mut acc = Poly::zero();
        for (i, c) in v.support() {
            acc = self
                .ring
                .add(&acc, &self.ring.scale(&self.ring.var(n + i), c));
        }
        self.nf(&acc)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.ring.add(a, b)
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.ring.sub(a, b)
    }

    pub fn scale(&self, a: &RingElement, c: &Scalar) -> RingElement {
        self.ring.scale(a, c)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.nf(&self.ring.mul(a, b))
    }

    pub fn render(&self, a: &RingElement) -> String {
        self.ring.render(a)
    }

    pub fn parse(&self, s: &str) -> Result<RingElement, crate::error::Error> {
        Ok(self.nf(&self.ring.parse(s)?))
    }

    /// The antipode: swaps `T_x` with `U_x` (an algebra morphism because the
    /// ring is commutative).
    pub fn antipode(&self, a: &RingElement) -> RingElement {
        let n = self.hopf.dim();
        let terms = a
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                for i in 0..n {
                    exps.swap(i, n + i);
                }
                (Monomial { exps }, c.clone())
            })
            .collect();
        self.nf(&self.ring.from_terms(terms))
    }

    fn eps_point(&self) -> Vec<Scalar> {
        let eps = self.hopf.counit_row();
        eps.iter().chain(eps.iter()).cloned().collect()
    }

    /// The counit: evaluates `T_i` and `U_i` at `eps(x_i)`.
    pub fn eps(&self, a: &RingElement) -> Scalar {
        self.ring.eval(a, &self.eps_point())
    }

    /// The evaluation morphism `T_i -> lam(x_i)`, `U_i -> lam_inv(x_i)`. The
    /// caller supplies a verified convolution-inverse pair, which is exactly
    /// the condition for the map to kill the defining ideal.
    pub fn eval_lambda(
        &self,
        a: &RingElement,
        lam: &LinearForm,
        lam_inv: &LinearForm,
    ) -> Scalar {
        let point: Vec<Scalar> = lam
            .values
            .iter()
            .chain(lam_inv.values.iter())
            .cloned()
            .collect();
        self.ring.eval(a, &point)
    }

    /// The doubled ring carrying the coproduct values.
    pub fn doubled(&self) -> DoubledRing {
        let n = self.hopf.dim();
        let split = 2 * n;
        let mut vars = self.ring.vars.clone();
        for name in self.hopf.basis_names() {
            vars.push(format!("T'_{name}"));
        }
        for name in self.hopf.basis_names() {
            vars.push(format!("U'_{name}"));
        }
        let ring = PolyRing::new(vars, MonomialOrder::DegRevLex);
        // the two embedded copies of the basis have pairwise coprime leading
        // monomials, so their union is already a Groebner basis of the sum
        let mut basis: Vec<Poly> = Vec::new();
        for p in &self.basis {
            basis.push(embed(p, split, 0, 2 * split));
            basis.push(embed(p, split, split, 2 * split));
        }
        let basis = interreduce(&ring, basis);

        let mut delta_t = Vec::with_capacity(n);
        let mut delta_u = Vec::with_capacity(n);
        for i in 0..n {
            let mut t_terms = Vec::new();
            let mut u_terms = Vec::new();
            for (pair, c) in &self.hopf.comult_basis(i).terms {
                let (j, k) = (pair[0], pair[1]);
                let mut tm = Monomial::one(2 * split);
                tm.exps[j] += 1;
                tm.exps[split + k] += 1;
                t_terms.push((tm, c.clone()));
                // legs of the inverse family come reversed
                let mut um = Monomial::one(2 * split);
                um.exps[n + k] += 1;
                um.exps[split + n + j] += 1;
                u_terms.push((um, c.clone()));
            }
            delta_t.push(ring.from_terms(t_terms));
            delta_u.push(ring.from_terms(u_terms));
        }

        let red_basis = reduction_order(&ring, &basis);
        DoubledRing {
            ring,
            basis,
            red_basis,
            split,
            delta_t,
            delta_u,
        }
    }

    /// Checks that the counit kills the relations, the antipode preserves the
    /// ideal, the coproduct of every relation vanishes in the doubled ring,
    /// and that counit and antipode laws hold on all generators.
    pub fn verify_hopf_maps(&self) -> Verdict {
        let n = self.hopf.dim();
        for (k, r) in self.relations.iter().enumerate() {
            if !self.eps(r).is_zero() {
                return Verdict::Fails {
                    location: format!("eps of relation {k}"),
                    lhs: scalar::render(&self.eps(r)),
                    rhs: "0".to_string(),
                };
            }
            if !self.antipode(r).is_zero() {
                return Verdict::Fails {
                    location: format!("antipode of relation {k}"),
                    lhs: self.render(&self.antipode(r)),
                    rhs: "0".to_string(),
                };
            }
        }
        let d = self.doubled();
        for (k, r) in self.relations.iter().enumerate() {
            let img = d.coproduct(self, r);
            if !img.is_zero() {
                return Verdict::Fails {
                    location: format!("coproduct of relation {k}"),
                    lhs: d.render(&img),
                    rhs: "0".to_string(),
                };
            }
        }
        // counit and antipode laws on the generators
        for i in 0..2 * n {
            let v = self.nf(&self.ring.var(i));
            let dv = d.coproduct(self, &self.ring.var(i));
            let left = d.counit_first(self, &dv);
            let right = d.counit_second(self, &dv);
            if self.nf(&left) != v || self.nf(&right) != v {
                return Verdict::Fails {
                    location: format!("counit law at {}", self.ring.vars[i]),
                    lhs: self.render(&self.nf(&left)),
                    rhs: self.render(&v),
                };
            }
            let eps_i = self.hopf.counit_row()[i % n].clone();
            let want = self.constant(eps_i);
            let s_first = d.merge_mul(self, &d.antipode_first(&dv));
            let s_second = d.merge_mul(self, &d.antipode_second(&dv));
            if s_first != want || s_second != want {
                return Verdict::Fails {
                    location: format!("antipode law at {}", self.ring.vars[i]),
                    lhs: self.render(&s_first),
                    rhs: self.render(&want),
                };
            }
        }
        Verdict::Holds
    }
}

fn embed(p: &Poly, width: usize, offset: usize, total: usize) -> Poly {
    Poly {
        terms: p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; total];
                exps[offset..offset + width].copy_from_slice(&m.exps);
                (Monomial { exps }, c.clone())
            })
            .collect(),
    }
}

/// The presented ring tensored with itself: variables `T, U` for the first
/// leg and `T', U'` for the second, modulo both copies of the defining ideal.
#[derive(Clone, Debug)]
pub struct DoubledRing {
    ring: PolyRing,
    basis: Vec<Poly>,
    red_basis: Vec<Poly>,
    split: usize,
    delta_t: Vec<Poly>,
    delta_u: Vec<Poly>,
}

impl DoubledRing {
    pub fn poly_ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn nf(&self, p: &Poly) -> Poly {
        normal_form(&self.ring, p, &self.red_basis)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.nf(&self.ring.mul(a, b))
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.add(a, b)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.sub(a, b)
    }

    pub fn render(&self, a: &Poly) -> String {
        self.ring.render(a)
    }

    /// `a` placed in the first (unprimed) tensor leg.
    pub fn first(&self, a: &Poly) -> Poly {
        embed(a, self.split, 0, 2 * self.split)
    }

    /// `a` placed in the second (primed) tensor leg.
    pub fn second(&self, a: &Poly) -> Poly {
        embed(a, self.split, self.split, 2 * self.split)
    }

    /// `a (x) b`, normalized.
    pub fn tensor(&self, a: &Poly, b: &Poly) -> Poly {
        self.nf(&self.tensor_raw(a, b))
    }

    /// `a (x) b` without reduction; legs on disjoint variables multiply by
    /// plain monomial concatenation.
    pub fn tensor_raw(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.mul(&self.first(a), &self.second(b))
    }

    /// The coproduct of the presented ring applied to `p`.
    pub fn coproduct(&self, base: &PresentedRing, p: &Poly) -> Poly {
        self.nf(&self.coproduct_raw(base, p))
    }

    /// The coproduct without the final reduction.
    pub fn coproduct_raw(&self, base: &PresentedRing, p: &Poly) -> Poly {
        let n = base.hopf().dim();
        let mut acc: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in &p.terms {
            let mut term = self.ring.constant(c.clone());
            for i in 0..2 * n {
                let image = if i < n {
                    &self.delta_t[i]
                } else {
                    &self.delta_u[i - n]
                };
                for _ in 0..m.exps[i] {
                    term = self.ring.mul(&term, image);
                }
            }
            acc.extend(term.terms);
        }
        self.ring.from_terms(acc)
    }

    /// Applies the counit to the first leg, leaving an element of the base ring.
    pub fn counit_first(&self, base: &PresentedRing, p: &Poly) -> Poly {
        let eps = base.hopf().counit_row();
        let n = base.hopf().dim();
        let mut terms = Vec::new();
        'term: for (m, c) in &p.terms {
            let mut coeff = c.clone();
            for i in 0..self.split {
                for _ in 0..m.exps[i] {
                    coeff *= &eps[i % n];
                    if coeff.is_zero() {
                        continue 'term;
                    }
                }
            }
            let exps = m.exps[self.split..].to_vec();
            terms.push((Monomial { exps }, coeff));
        }
        base.nf(&base.poly_ring().from_terms(terms))
    }

    /// Applies the counit to the second leg.
    pub fn counit_second(&self, base: &PresentedRing, p: &Poly) -> Poly {
        let eps = base.hopf().counit_row();
        let n = base.hopf().dim();
        let mut terms = Vec::new();
        'term: for (m, c) in &p.terms {
            let mut coeff = c.clone();
            for i in self.split..2 * self.split {
                for _ in 0..m.exps[i] {
                    coeff *= &eps[(i - self.split) % n];
                    if coeff.is_zero() {
                        continue 'term;
                    }
                }
            }
            let exps = m.exps[..self.split].to_vec();
            terms.push((Monomial { exps }, coeff));
        }
        base.nf(&base.poly_ring().from_terms(terms))
    }

    /// Applies the antipode to the first leg only (swaps `T` and `U` there).
    pub fn antipode_first(&self, p: &Poly) -> Poly {
        let n = self.split / 2;
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                for i in 0..n {
                    exps.swap(i, n + i);
                }
                (Monomial { exps }, c.clone())
            })
            .collect();
        self.nf(&self.ring.from_terms(terms))
    }

    /// Applies the antipode to the second leg only.
    pub fn antipode_second(&self, p: &Poly) -> Poly {
        let n = self.split / 2;
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                for i in 0..n {
                    exps.swap(self.split + i, self.split + n + i);
                }
                (Monomial { exps }, c.clone())
            })
            .collect();
        self.nf(&self.ring.from_terms(terms))
    }

    /// The multiplication map back to the base ring: merges the primed leg
    /// onto the unprimed one and reduces.
    pub fn merge_mul(&self, base: &PresentedRing, p: &Poly) -> Poly {
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let exps = (0..self.split)
                    .map(|i| m.exps[i] + m.exps[self.split + i])
                    .collect();
                (Monomial { exps }, c.clone())
            })
            .collect();
        base.nf(&base.poly_ring().from_terms(terms))
    }
}
