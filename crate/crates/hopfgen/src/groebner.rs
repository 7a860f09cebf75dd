//! Buchberger's algorithm with the two classical pair-elimination criteria,
//! full normal forms, interreduction, and staircase dimension counting.
//!
//! Coefficients stay exact; every basis element is content-normalized (scaled
//! to coprime integer coefficients, positive leading coefficient) to control
//! growth. Normal forms reduce every term, so they are canonical for the
//! ideal and the order no matter which Gröbner basis representation is used.
//!
//! A [`Budget`] caps the number of treated S-pairs and the degree of the
//! polynomials entering the basis; exceeding it yields a truncated basis,
//! clearly flagged, which callers must treat as inconclusive rather than
//! wrong.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::time::Instant;

use num::traits::Zero;

use crate::poly::{Monomial, Poly, PolyRing};
use crate::scalar::Scalar;

/// Caps for a Buchberger run; `Default` means unbounded.
#[derive(Clone, Default)]
pub struct Budget {
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn pairs(n: usize) -> Self {
        Budget {
            max_pairs: Some(n),
            ..Budget::default()
        }
    }
}

/// Result of a Buchberger run.
pub enum GroebnerOutcome {
    Complete(Vec<Poly>),
    /// Budget ran out; the partial basis generates the ideal but normal forms
    /// against it are not canonical.
    Truncated { partial: Vec<Poly>, reason: String },
}

impl GroebnerOutcome {
    pub fn complete(self) -> Option<Vec<Poly>> {
        match self {
            GroebnerOutcome::Complete(b) => Some(b),
            GroebnerOutcome::Truncated { .. } => None,
        }
    }
}

/// Fully reduces `p` against `basis`: no term of the result is divisible by
/// any leading monomial of the basis.
pub fn normal_form(ring: &PolyRing, p: &Poly, basis: &[Poly]) -> Poly {
    // working polynomial as an ordered map keyed compatibly with the ring
    // order, so each reduction step costs |reducer| * log(terms) instead of a
    // full copy of the tail
    let mut work: std::collections::BTreeMap<Vec<u32>, (Monomial, Scalar)> = p
        .terms
        .iter()
        .map(|(m, c)| (ring.order.key(m), (m.clone(), c.clone())))
        .collect();
    let mut out: Vec<(Monomial, Scalar)> = Vec::new();
    'outer: while let Some((key, (lm, lc))) = work.pop_last() {
        for b in basis {
            let (bm, bc) = b.lead().expect("basis polynomials are nonzero");
            if bm.divides(&lm) {
                let q = lm.div(bm);
                let c = &lc / bc;
                for (m, k) in b.terms.iter().skip(1) {
                    let mm = m.mul(&q);
                    let kk = ring.order.key(&mm);
                    match work.entry(kk) {
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            e.get_mut().1 -= k * &c;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((mm, -(k * &c)));
                        }
                    }
                }
                continue 'outer;
            }
        }
        let _ = key;
        out.push((lm, lc));
    }
    // terms were emitted in decreasing order already
    Poly { terms: out }
}

fn s_poly(ring: &PolyRing, f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = fm.lcm(gm);
    let a = ring.mul_term(f, &l.div(fm), &(crate::scalar::one() / fc));
    let b = ring.mul_term(g, &l.div(gm), &(crate::scalar::one() / gc));
    ring.sub(&a, &b)
}

/// Buchberger's algorithm. Pairs are treated in increasing lcm degree; the
/// coprimality and chain criteria prune the queue.
pub fn buchberger(ring: &PolyRing, generators: &[Poly], budget: &Budget) -> GroebnerOutcome {
    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        let g = ring.content_normalize(g);
        if !g.is_zero() {
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return GroebnerOutcome::Complete(Vec::new());
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut heap: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let push_pair = |i: usize,
                         j: usize,
                         basis: &[Poly],
                         pending: &mut BTreeSet<(usize, usize)>,
                         heap: &mut BinaryHeap<Reverse<(u32, usize, usize)>>| {
        let l = basis[i].lead().unwrap().0.lcm(&basis[j].lead().unwrap().0);
        pending.insert((i, j));
        heap.push(Reverse((l.degree(), i, j)));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            push_pair(i, j, &basis, &mut pending, &mut heap);
        }
    }

    let mut treated = 0usize;
    while let Some(Reverse((_, i, j))) = heap.pop() {
        if !pending.remove(&(i, j)) {
            continue;
        }
        if let Some(max) = budget.max_pairs {
            if treated >= max {
                return GroebnerOutcome::Truncated {
                    partial: basis,
                    reason: format!("pair budget {max} exhausted"),
                };
            }
        }
        if let Some(deadline) = budget.deadline {
            if Instant::now() >= deadline {
                return GroebnerOutcome::Truncated {
                    partial: basis,
                    reason: "deadline exceeded".to_string(),
                };
            }
        }
        treated += 1;

        let lm_i = &basis[i].lead().unwrap().0;
        let lm_j = &basis[j].lead().unwrap().0;
        if lm_i.coprime(lm_j) {
            continue;
        }
        let lcm_ij = lm_i.lcm(lm_j);
        // chain criterion: some k with lt(k) | lcm(i,j) and both companion
        // pairs already treated
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().unwrap().0.divides(&lcm_ij)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_poly(ring, &basis[i], &basis[j]);
        let nf = normal_form(ring, &s, &basis);
        if nf.is_zero() {
            continue;
        }
        if let Some(max_deg) = budget.max_degree {
            if nf.degree() > max_deg {
                return GroebnerOutcome::Truncated {
                    partial: basis,
                    reason: format!("degree bound {max_deg} exceeded"),
                };
            }
        }
        let nf = ring.content_normalize(&nf);
        basis.push(nf);
        let t = basis.len() - 1;
        for k in 0..t {
            push_pair(k, t, &basis, &mut pending, &mut heap);
        }
    }

    GroebnerOutcome::Complete(interreduce(ring, basis))
}

/// Reduces each basis element against the others until stable, dropping
/// redundant ones; on a Gröbner basis this yields the reduced basis (up to
/// the integer-content scaling).
pub fn interreduce(ring: &PolyRing, mut basis: Vec<Poly>) -> Vec<Poly> {
    loop {
        // drop elements whose lead is divisible by another lead
        let mut keep: Vec<Poly> = Vec::with_capacity(basis.len());
        for (i, p) in basis.iter().enumerate() {
            let lm = &p.lead().unwrap().0;
            let redundant = basis.iter().enumerate().any(|(j, q)| {
                i != j && {
                    let qm = &q.lead().unwrap().0;
                    qm.divides(lm) && (qm != lm || j < i)
                }
            });
            if !redundant {
                keep.push(p.clone());
            }
        }
        let mut changed = false;
        let mut out: Vec<Poly> = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Poly> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let nf = normal_form(ring, &keep[i], &others);
            if nf != keep[i] {
                changed = true;
            }
            if !nf.is_zero() {
                out.push(ring.content_normalize(&nf));
            } else {
                changed = true;
            }
        }
        if !changed {
            out.sort_by(|a, b| ring.order.cmp(&b.lead().unwrap().0, &a.lead().unwrap().0));
            return out;
        }
        basis = out;
    }
}

/// Monomials outside the leading-term ideal of `basis`. Returns `None` when
/// the staircase is infinite (some variable has no pure power among the
/// leading monomials).
pub fn standard_monomials(ring: &PolyRing, basis: &[Poly]) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = basis.iter().map(|p| &p.lead().unwrap().0).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    let n = ring.nvars();
    for v in 0..n {
        let has_pure_power = leads.iter().any(|m| {
            m.exps
                .iter()
                .enumerate()
                .all(|(i, &e)| if i == v { e > 0 } else { e == 0 })
        });
        if !has_pure_power {
            return None;
        }
    }
    let reducible = |m: &Monomial| leads.iter().any(|l| l.divides(m));
    let mut seen = BTreeSet::new();
    let mut queue = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n).exps);
    let mut out = Vec::new();
    while let Some(m) = queue.pop() {
        out.push(m.clone());
        for v in 0..n {
            let next = m.mul(&Monomial::var(n, v));
            if !seen.contains(&next.exps) && !reducible(&next) {
                seen.insert(next.exps.clone());
                queue.push(next);
            }
        }
    }
    out.sort_by(|a, b| ring.order.cmp(a, b));
    Some(out)
}
