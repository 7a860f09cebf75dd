//! The check registry: stable identifiers mapping onto the library's
//! verification operations, plus the shared per-job context (algebra, forms,
//! presented ring, generic cocycle tables) built lazily and shared across
//! checks.

use std::sync::OnceLock;

use hopfgen::cache::GroebnerCache;
use hopfgen::form::{
    is_lazy, is_two_cocycle, BilinearForm, LinearForm, Verdict,
};
use hopfgen::freeword::{self, Side};
use hopfgen::galois::{ext_multiply, ExtElement};
use hopfgen::groebner::Budget;
use hopfgen::group::CayleyTable;
use hopfgen::hopf::HopfAlgebra;
use hopfgen::pq::{self, PqTables};
use hopfgen::presented::PresentedRing;
use hopfgen::scalar;
use hopfgen::sigma::{
    antipode_on_sigma, coproduct_of_sigma, generic_sigma, specialize, verify_cocycle_identity,
    GenericCocycle,
};
use hopfgen::subalgebra::{
    coideal_check, membership, quotient_by_b_plus, rewrite_to_module_form, MembershipVerdict,
    SubalgebraSpec,
};
use hopfgen::tensor::Vect;
use hopfgen::twist::{deform_hopf, twist_algebra};

use crate::report::{CheckResult, Counterexample, GroebnerStats, Status};

/// All fixed check identifiers (`membership:<expr>` is additionally accepted
/// with a dynamic suffix).
pub const CHECK_IDS: &[&str] = &[
    "validate",
    "two-cocycle",
    "lazy",
    "twist",
    "deform",
    "cocycle-identity",
    "chi0",
    "cohomologous",
    "reduction",
    "antipode-sigma",
    "coprod-sigma",
    "coideal",
    "quotient-hab",
    "rewrite-module",
    "pq-in-b",
    "coinvariance",
    "mu-convolution",
    "pq-dual-path",
    "prop-nice",
    "antipode-pq",
    "group-determinant",
    "ext-assoc",
    "ext-unit",
];

pub fn is_valid_check(id: &str) -> bool {
    CHECK_IDS.contains(&id) || id.strip_prefix("membership:").is_some_and(|e| !e.is_empty())
}

pub struct Ctx {
    pub algebra: HopfAlgebra,
    /// The form from `--cocycle`; the trivial cocycle when absent.
    pub alpha: BilinearForm,
    pub lambda: Option<LinearForm>,
    pub budget_pairs: Option<usize>,
    pub degree_bound: Option<u32>,
    pub cache: Option<GroebnerCache>,
    ring: OnceLock<PresentedRing>,
    gc_trivial: OnceLock<Result<GenericCocycle, String>>,
    gc_alpha: OnceLock<Result<GenericCocycle, String>>,
    pq: OnceLock<Result<PqTables, String>>,
}

impl Ctx {
    pub fn new(
        algebra: HopfAlgebra,
        alpha: Option<BilinearForm>,
        lambda: Option<LinearForm>,
        budget_pairs: Option<usize>,
        degree_bound: Option<u32>,
        cache: Option<GroebnerCache>,
    ) -> Self {
        let alpha = alpha.unwrap_or_else(|| BilinearForm::trivial(&algebra));
        Ctx {
            algebra,
            alpha,
            lambda,
            budget_pairs,
            degree_bound,
            cache,
            ring: OnceLock::new(),
            gc_trivial: OnceLock::new(),
            gc_alpha: OnceLock::new(),
            pq: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &PresentedRing {
        self.ring.get_or_init(|| match &self.cache {
            Some(c) => PresentedRing::build_cached(&self.algebra, c),
            None => PresentedRing::build(&self.algebra),
        })
    }

    fn gc_trivial(&self) -> Result<&GenericCocycle, String> {
        self.gc_trivial
            .get_or_init(|| {
                generic_sigma(self.ring(), &BilinearForm::trivial(&self.algebra))
                    .map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn gc_alpha(&self) -> Result<&GenericCocycle, String> {
        self.gc_alpha
            .get_or_init(|| generic_sigma(self.ring(), &self.alpha).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn pq(&self) -> Result<&PqTables, String> {
        self.pq
            .get_or_init(|| pq::pq_tables(self.ring()).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn ring_stats(&self) -> GroebnerStats {
        let basis = self.ring().groebner_basis();
        GroebnerStats {
            basis_size: basis.len(),
            max_degree: basis.iter().map(|b| b.degree()).max().unwrap_or(0),
        }
    }

    fn budget(&self) -> Budget {
        Budget {
            max_pairs: self.budget_pairs,
            max_degree: self.degree_bound,
            deadline: None,
        }
    }
}

fn fail(id: &str, detail: String) -> CheckResult {
    let mut r = CheckResult::new(id, Status::Fail);
    r.detail = Some(detail);
    r
}

fn from_verdict_with_stats(ctx: &Ctx, id: &str, v: &Verdict) -> CheckResult {
    let mut r = CheckResult::from_verdict(id, v);
    r.groebner = Some(ctx.ring_stats());
    r
}

/// Runs one check against the shared context.
pub fn run_check(ctx: &Ctx, id: &str) -> CheckResult {
    if let Some(expr) = id.strip_prefix("membership:") {
        return run_membership(ctx, id, expr);
    }
    match id {
        "validate" => {
            let report = ctx.algebra.validate();
            if report.passes() {
                let mut r = CheckResult::new(id, Status::Pass);
                r.detail = Some(format!("{} axioms", report.checks.len()));
                r
            } else {
                let first = report.failures().next().unwrap();
                let fail_info = first.failure.as_ref().unwrap();
                let mut r = CheckResult::new(id, Status::Fail);
                r.counterexample = Some(Counterexample {
                    location: fail_info.at.clone(),
                    lhs: fail_info.lhs.clone(),
                    rhs: fail_info.rhs.clone(),
                });
                r.detail = Some(format!("axiom violated: {}", first.axiom));
                r
            }
        }
        "two-cocycle" => CheckResult::from_verdict(id, &is_two_cocycle(&ctx.algebra, &ctx.alpha)),
        "lazy" => CheckResult::from_verdict(id, &is_lazy(&ctx.algebra, &ctx.alpha)),
        "twist" => {
            let t = twist_algebra(&ctx.algebra, &ctx.alpha);
            if t.associativity.holds() && t.unit_law.holds() {
                let mut r = CheckResult::new(id, Status::Pass);
                if !t.cocycle_checked {
                    r.detail = Some("form is not a verified invertible two-cocycle".to_string());
                }
                r
            } else if !t.associativity.holds() {
                CheckResult::from_verdict(id, &t.associativity)
            } else {
                CheckResult::from_verdict(id, &t.unit_law)
            }
        }
        "deform" => match deform_hopf(&ctx.algebra, &ctx.alpha) {
            Ok(_) => CheckResult::new(id, Status::Pass),
            Err(e) => fail(id, e.to_string()),
        },
        "cocycle-identity" => match ctx.gc_alpha() {
            Ok(gc) => from_verdict_with_stats(ctx, id, &verify_cocycle_identity(ctx.ring(), gc)),
            Err(e) => fail(id, e),
        },
        "chi0" => match ctx.gc_alpha() {
            Ok(gc) => {
                let eps = LinearForm::counit(&ctx.algebra);
                match specialize(ctx.ring(), gc, &eps) {
                    Ok(beta) if beta == ctx.alpha => {
                        match hopfgen::galois::specialize_extension(ctx.ring(), gc, &eps) {
                            Ok(_) => CheckResult::new(id, Status::Pass),
                            Err(e) => fail(id, e.to_string()),
                        }
                    }
                    Ok(_) => fail(id, "counit specialization differs from alpha".to_string()),
                    Err(e) => fail(id, e.to_string()),
                }
            }
            Err(e) => fail(id, e),
        },
        "cohomologous" => {
            let Some(lambda) = &ctx.lambda else {
                let mut r = CheckResult::new(id, Status::Skipped);
                r.detail = Some("requires --lambda".to_string());
                return r;
            };
            match ctx.gc_alpha() {
                Ok(gc) => match specialize(ctx.ring(), gc, lambda) {
                    // `specialize` already compares against the cohomologous
                    // transform entry-wise
                    Ok(beta) => {
                        let v = is_two_cocycle(&ctx.algebra, &beta);
                        from_verdict_with_stats(ctx, id, &v)
                    }
                    Err(e) => fail(id, e.to_string()),
                },
                Err(e) => fail(id, e),
            }
        }
        "reduction" => match hopfgen::galois::verify_reduction(ctx.ring(), &ctx.alpha) {
            Ok(v) => from_verdict_with_stats(ctx, id, &v),
            Err(e) => fail(id, e.to_string()),
        },
        "antipode-sigma" => match ctx.gc_alpha() {
            Ok(gc) => from_verdict_with_stats(ctx, id, &antipode_on_sigma(ctx.ring(), gc)),
            Err(e) => fail(id, e),
        },
        "coprod-sigma" => match ctx.gc_alpha() {
            Ok(gc) => from_verdict_with_stats(ctx, id, &coproduct_of_sigma(ctx.ring(), gc)),
            Err(e) => fail(id, e),
        },
        "coideal" => match ctx.gc_trivial() {
            Ok(gc) => {
                let spec = SubalgebraSpec::base_algebra(ctx.ring(), gc);
                from_verdict_with_stats(ctx, id, &coideal_check(ctx.ring(), gc, &spec))
            }
            Err(e) => fail(id, e),
        },
        "quotient-hab" => match ctx.gc_trivial() {
            Ok(gc) => match quotient_by_b_plus(ctx.ring(), gc) {
                Ok(report) => {
                    let mut r = if report.dimension.is_some() && report.iso_verified {
                        CheckResult::new(id, Status::Pass)
                    } else {
                        CheckResult::new(id, Status::Fail)
                    };
                    r.detail = Some(report.detail.clone());
                    r.groebner = Some(GroebnerStats {
                        basis_size: report.basis_size,
                        max_degree: 0,
                    });
                    r
                }
                Err(e) => fail(id, e.to_string()),
            },
            Err(e) => fail(id, e),
        },
        "rewrite-module" => match ctx.gc_trivial() {
            Ok(gc) => {
                let ring = ctx.ring();
                let spec = SubalgebraSpec::base_algebra(ring, gc);
                let pr = ring.poly_ring();
                let nv = pr.nvars();
                let mut count = 0usize;
                for a in 0..=nv {
                    for b in a..=nv {
                        // (nv, nv) encodes the constant monomial, (a, nv) a
                        // single variable
                        let mut e = pr.one();
                        if a < nv {
                            e = pr.mul(&e, &pr.var(a));
                        }
                        if b < nv {
                            e = pr.mul(&e, &pr.var(b));
                        }
                        match rewrite_to_module_form(ring, &spec, &e, 200_000) {
                            Ok(_) => count += 1,
                            Err(hopfgen::Error::Budget(msg)) => {
                                let mut r = CheckResult::new(id, Status::Inconclusive);
                                r.detail = Some(msg);
                                return r;
                            }
                            Err(e) => return fail(id, e.to_string()),
                        }
                    }
                }
                let mut r = CheckResult::new(id, Status::Pass);
                r.detail = Some(format!("{count} monomials of degree <= 2 rewritten"));
                r
            }
            Err(e) => fail(id, e),
        },
        "pq-in-b" => match (ctx.gc_trivial(), ctx.pq()) {
            (Ok(gc), Ok(pq)) => from_verdict_with_stats(
                ctx,
                id,
                &hopfgen::subalgebra::verify_pq_in_base(ctx.ring(), gc, pq),
            ),
            (Err(e), _) | (_, Err(e)) => fail(id, e),
        },
        "coinvariance" => {
            let h = &ctx.algebra;
            let n = h.dim();
            for i in 0..n {
                let x = Vect::basis(n, i);
                let p = freeword::build_p(h, &x);
                let pp = freeword::build_p_prime(h, &x);
                for (w, side) in [(&p, Side::Right), (&pp, Side::Left)] {
                    let v = freeword::check_coinvariance(h, w, side);
                    if !v.holds() {
                        return from_verdict_with_stats(ctx, id, &v);
                    }
                }
                for j in 0..n {
                    let y = Vect::basis(n, j);
                    let q = freeword::build_q(h, &x, &y);
                    let qp = freeword::build_q_prime(h, &x, &y);
                    for (w, side) in [(&q, Side::Right), (&qp, Side::Left)] {
                        let v = freeword::check_coinvariance(h, w, side);
                        if !v.holds() {
                            return from_verdict_with_stats(ctx, id, &v);
                        }
                    }
                }
            }
            CheckResult::new(id, Status::Pass)
        }
        "mu-convolution" => {
            from_verdict_with_stats(ctx, id, &pq::mu_convolution_check(ctx.ring()))
        }
        "pq-dual-path" => match ctx.pq() {
            Ok(_) => CheckResult::new(id, Status::Pass),
            Err(e) => fail(id, e),
        },
        "prop-nice" => match (ctx.gc_trivial(), ctx.pq()) {
            (Ok(gc), Ok(pq)) => {
                from_verdict_with_stats(ctx, id, &pq::verify_prop_nice(ctx.ring(), gc, pq))
            }
            (Err(e), _) | (_, Err(e)) => fail(id, e),
        },
        "antipode-pq" => match ctx.pq() {
            Ok(pq) => from_verdict_with_stats(
                ctx,
                id,
                &pq::antipode_pq_cocommutative(ctx.ring(), pq),
            ),
            Err(e) => fail(id, e),
        },
        "group-determinant" => run_group_determinant(ctx, id),
        "ext-assoc" => match ctx.gc_alpha() {
            Ok(gc) => {
                let ring = ctx.ring();
                let n = ctx.algebra.dim();
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let a = ExtElement::from_h(ring, &Vect::basis(n, i));
                            let b = ExtElement::from_h(ring, &Vect::basis(n, j));
                            let c = ExtElement::from_h(ring, &Vect::basis(n, k));
                            let lhs =
                                ext_multiply(ring, gc, &ext_multiply(ring, gc, &a, &b), &c);
                            let rhs =
                                ext_multiply(ring, gc, &a, &ext_multiply(ring, gc, &b, &c));
                            if lhs != rhs {
                                let mut r = CheckResult::new(id, Status::Fail);
                                r.counterexample = Some(Counterexample {
                                    location: format!(
                                        "({}, {}, {})",
                                        ctx.algebra.basis_name(i),
                                        ctx.algebra.basis_name(j),
                                        ctx.algebra.basis_name(k)
                                    ),
                                    lhs: lhs.render(ring),
                                    rhs: rhs.render(ring),
                                });
                                return r;
                            }
                        }
                    }
                }
                CheckResult::new(id, Status::Pass)
            }
            Err(e) => fail(id, e),
        },
        "ext-unit" => match ctx.gc_alpha() {
            Ok(gc) => {
                let ring = ctx.ring();
                let n = ctx.algebra.dim();
                let one = ExtElement::unit(ring, gc);
                for i in 0..n {
                    let e = ExtElement::from_h(ring, &Vect::basis(n, i));
                    if ext_multiply(ring, gc, &one, &e) != e
                        || ext_multiply(ring, gc, &e, &one) != e
                    {
                        return fail(id, format!("unit fails at {}", ctx.algebra.basis_name(i)));
                    }
                }
                CheckResult::new(id, Status::Pass)
            }
            Err(e) => fail(id, e),
        },
        other => fail(other, "unknown check identifier".to_string()),
    }
}

fn run_membership(ctx: &Ctx, id: &str, expr: &str) -> CheckResult {
    let gc = match ctx.gc_trivial() {
        Ok(gc) => gc,
        Err(e) => return fail(id, e),
    };
    let ring = ctx.ring();
    let element = match ring.parse(expr) {
        Ok(e) => e,
        Err(err) => return fail(id, format!("cannot parse `{expr}`: {err}")),
    };
    let spec = SubalgebraSpec::base_algebra(ring, gc);
    let cert = membership(ring, &spec, &element, &ctx.budget());
    let mut r = match &cert.verdict {
        MembershipVerdict::Member { witness } => {
            let mut r = CheckResult::new(id, Status::Pass);
            r.detail = Some("member".to_string());
            r.witness = Some(spec.tag_ring.render(witness));
            r
        }
        MembershipVerdict::NonMember => {
            let mut r = CheckResult::new(id, Status::Pass);
            r.detail = Some("non-member".to_string());
            r
        }
        MembershipVerdict::Inconclusive { reason } => {
            let mut r = CheckResult::new(id, Status::Inconclusive);
            r.detail = Some(reason.clone());
            r
        }
    };
    r.groebner = Some(GroebnerStats {
        basis_size: cert.basis_size,
        max_degree: cert.max_degree,
    });
    r
}

fn run_group_determinant(ctx: &Ctx, id: &str) -> CheckResult {
    let h = &ctx.algebra;
    if !h.has_grouplike_basis() {
        let mut r = CheckResult::new(id, Status::Skipped);
        r.detail = Some("the basis is not grouplike".to_string());
        return r;
    }
    let n = h.dim();
    // recover the Cayley table from the multiplication tensor
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = h.mul_basis(i, j);
            let mut support = prod.support();
            match (support.next(), support.next()) {
                (Some((k, c)), None) if *c == scalar::one() => table[i][j] = k,
                _ => {
                    let mut r = CheckResult::new(id, Status::Skipped);
                    r.detail = Some("products are not single basis elements".to_string());
                    return r;
                }
            }
        }
    }
    let cayley = CayleyTable::new(h.basis_names().to_vec(), table);
    let (ring, det) = match hopfgen::bareiss::group_determinant(&cayley) {
        Ok(x) => x,
        Err(e) => return fail(id, e.to_string()),
    };
    // compare against plain rational elimination at deterministic points
    let data = cayley.group_data().expect("verified above");
    let mut seed = 1u64;
    for _ in 0..5 {
        let point: Vec<_> = (0..n)
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                scalar::int((seed >> 33) as i64 % 19 - 9)
            })
            .collect();
        let direct = ring.eval(&det, &point);
        let matrix: Vec<Vec<_>> = (0..n)
            .map(|g| {
                (0..n)
                    .map(|hh| point[cayley.mul(g, data.inverse[hh])].clone())
                    .collect()
            })
            .collect();
        let reference = rational_determinant(matrix);
        if direct != reference {
            return fail(
                id,
                format!(
                    "specialized determinant mismatch: {} vs {}",
                    scalar::render(&direct),
                    scalar::render(&reference)
                ),
            );
        }
    }
    let mut r = CheckResult::new(id, Status::Pass);
    r.detail = Some(format!("{} monomials", det.terms.len()));
    r.witness = Some(ring.render(&det));
    r
}

fn rational_determinant(mut m: Vec<Vec<scalar::Scalar>>) -> scalar::Scalar {
    let n = m.len();
    let mut det = scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !scalar::is_zero(&m[i][k])) else {
            return scalar::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        det *= &m[k][k];
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let sub = &f * &m[k][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
    }
    det
}
