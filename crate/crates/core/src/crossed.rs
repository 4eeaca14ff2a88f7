//! Weak actions, cocycles and the crossed product `A#_σH`.
//!
//! The product on `A⊗H` is
//! `(a#h)(b#k) = Σ a[(α⁻¹(h₁)·β⁻²(b))σ(h₂₁, α⁻¹(k₁))] # α²(h₂₂)α(k₂)`
//! with unit `1#1` and automorphism `β⊗α`. It is Hom-associative and unital exactly when the
//! twisted-module condition, the cocycle condition, normalization and `σ∘(α⊗α) = β∘σ` hold;
//! [`check_conditions`] and [`crossed_associativity_oracle`] test the two sides independently.

use crate::error::{Error, Result};
use crate::homstruct::{check_hom_algebra, convolution_invert, HomAlgebra, HomCoalgebra, HomHopf};
use crate::linalg::{axpy, scale, tensor_vectors, LabeledSpace, LinMap, Scalar, Vector};
use crate::report::AxiomReport;

/// A linear map `H⊗A → A`, written `h·a`.
#[derive(Clone, Debug)]
pub struct WeakAction {
    pub h: HomHopf,
    pub a: HomAlgebra,
    pub act: LinMap,
}

impl WeakAction {
    pub fn new(h: HomHopf, a: HomAlgebra, act: LinMap) -> Result<Self> {
        if act.domain() != &h.space().tensor(a.space()) || act.codomain() != a.space() {
            return Err(Error::ShapeMismatch("action must map H⊗A → A".into()));
        }
        Ok(Self { h, a, act })
    }

    /// `h·a = ε(h)β(a)`.
    pub fn trivial(h: HomHopf, a: HomAlgebra) -> Self {
        let field = a.field();
        let na = a.dim();
        let act = LinMap::from_fn(field, h.space().tensor(a.space()), a.space().clone(), |c| {
            scale(
                h.coalgebra.counit_basis(c / na),
                &a.alpha().column(c % na),
            )
        })
        .expect("action shape");
        Self { h, a, act }
    }

    pub fn apply(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        self.act.apply_pair(h, a)
    }
}

/// A weak action together with `σ: H⊗H → A`.
#[derive(Clone, Debug)]
pub struct CrossedSystem {
    pub action: WeakAction,
    pub sigma: LinMap,
}

impl CrossedSystem {
    pub fn new(action: WeakAction, sigma: LinMap) -> Result<Self> {
        let hs = action.h.space();
        if sigma.domain() != &hs.tensor(hs) || sigma.codomain() != action.a.space() {
            return Err(Error::ShapeMismatch("cocycle must map H⊗H → A".into()));
        }
        Ok(Self { action, sigma })
    }

    /// The system with `σ = ηε`.
    pub fn with_trivial_cocycle(action: WeakAction) -> Self {
        let sigma = trivial_cocycle(&action.h, &action.a);
        Self { action, sigma }
    }

    pub fn h(&self) -> &HomHopf {
        &self.action.h
    }

    pub fn a(&self) -> &HomAlgebra {
        &self.action.a
    }

    pub fn sigma_of(&self, h: &[Scalar], k: &[Scalar]) -> Vector {
        self.sigma.apply_pair(h, k)
    }

    /// The coalgebra `H⊗H` on which `σ` is convolution-inverted.
    pub fn square_coalgebra(&self) -> HomCoalgebra {
        self.h().coalgebra.tensor(&self.h().coalgebra)
    }

    /// Convolution inverse of `σ` over `H⊗H`.
    pub fn sigma_inverse(&self) -> Result<LinMap> {
        convolution_invert(&self.sigma, &self.square_coalgebra(), self.a())
    }
}

/// `σ(h, k) = ε(h)ε(k)1_A`.
pub fn trivial_cocycle(h: &HomHopf, a: &HomAlgebra) -> LinMap {
    let nh = h.dim();
    LinMap::from_fn(a.field(), h.space().tensor(h.space()), a.space().clone(), |c| {
        let e = h.coalgebra.counit_basis(c / nh) * h.coalgebra.counit_basis(c % nh);
        scale(&e, a.unit())
    })
    .expect("cocycle shape")
}

pub fn check_weak_action(w: &WeakAction) -> AxiomReport {
    let mut report = AxiomReport::new("weak_action");
    let (h, a) = (&w.h, &w.a);
    let (hs, as_) = (h.space(), a.space());
    report.check_tuples("automorphism_compatible", &[hs, as_], as_, |t| {
        let (x, y) = (h.basis(t[0]), a.basis(t[1]));
        (
            a.alpha().apply(&w.apply(&x, &y)),
            w.apply(&h.alpha().apply(&x), &a.alpha().apply(&y)),
        )
    });
    report.check_tuples("acts_on_unit", &[hs], as_, |t| {
        let x = h.basis(t[0]);
        (w.apply(&x, a.unit()), scale(&h.eps(&x), a.unit()))
    });
    report.check_tuples("measuring", &[hs, as_, as_], as_, |t| {
        let (x, y, z) = (h.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        let lhs = w.apply(&x, &a.mul(&y, &z));
        let mut rhs = a.zero();
        for (c, i, j) in h.split_basis(t[0]) {
            axpy(
                &mut rhs,
                c,
                &a.mul(&w.apply(&h.basis(*i), &y), &w.apply(&h.basis(*j), &z)),
            );
        }
        (lhs, rhs)
    });
    report
}

/// `1·a = β(a)` and the twisted-module condition
/// `Σ(α(h₁)·(l₁·β⁻¹(a)))σ(α(h₂),α(l₂)) = Σσ(α(h₁),α(l₁))(h₂l₂·a)`.
pub fn check_twisted_module(s: &CrossedSystem) -> AxiomReport {
    let mut report = AxiomReport::new("twisted_module");
    let (h, a, w) = (s.h(), s.a(), &s.action);
    let (hs, as_) = (h.space(), a.space());
    report.check_tuples("unit_acts_as_automorphism", &[as_], as_, |t| {
        let y = a.basis(t[0]);
        (w.apply(h.unit(), &y), a.alpha().apply(&y))
    });
    report.check_tuples("twisted_module", &[hs, hs, as_], as_, |t| {
        let y = a.basis(t[2]);
        let y_inv = a.alpha_inv().apply(&y);
        let mut lhs = a.zero();
        let mut rhs = a.zero();
        for (c1, h1, h2) in h.split_basis(t[0]) {
            let (ah1, ah2) = (h.alpha().column(*h1), h.alpha().column(*h2));
            let h2v = h.basis(*h2);
            for (c2, l1, l2) in h.split_basis(t[1]) {
                let c = c1 * c2;
                let (al1, al2) = (h.alpha().column(*l1), h.alpha().column(*l2));
                let inner = w.apply(&ah1, &w.apply(&h.basis(*l1), &y_inv));
                axpy(&mut lhs, &c, &a.mul(&inner, &s.sigma_of(&ah2, &al2)));
                let act = w.apply(&h.mul(&h2v, &h.basis(*l2)), &y);
                axpy(&mut rhs, &c, &a.mul(&s.sigma_of(&ah1, &al1), &act));
            }
        }
        (lhs, rhs)
    });
    report
}

/// Normalization `σ(1,h) = σ(h,1) = ε(h)1` and the cocycle condition
/// `Σ(α(h₁)·σ(l₁,k₁))σ(α(h₂),l₂k₂) = Σσ(α(h₁),α(l₁))σ(h₂l₂,k)`.
pub fn check_cocycle_condition(s: &CrossedSystem) -> AxiomReport {
    let mut report = AxiomReport::new("cocycle");
    let (h, a, w) = (s.h(), s.a(), &s.action);
    let (hs, as_) = (h.space(), a.space());
    report.check_tuples("normalized_left", &[hs], as_, |t| {
        let x = h.basis(t[0]);
        (s.sigma_of(h.unit(), &x), scale(&h.eps(&x), a.unit()))
    });
    report.check_tuples("normalized_right", &[hs], as_, |t| {
        let x = h.basis(t[0]);
        (s.sigma_of(&x, h.unit()), scale(&h.eps(&x), a.unit()))
    });
    report.check_tuples("cocycle", &[hs, hs, hs], as_, |t| {
        let kv = h.basis(t[2]);
        let mut lhs = a.zero();
        let mut rhs = a.zero();
        for (c1, h1, h2) in h.split_basis(t[0]) {
            let (ah1, ah2) = (h.alpha().column(*h1), h.alpha().column(*h2));
            let (h1v, h2v) = (h.basis(*h1), h.basis(*h2));
            for (c2, l1, l2) in h.split_basis(t[1]) {
                let c12 = c1 * c2;
                let (l1v, l2v) = (h.basis(*l1), h.basis(*l2));
                for (c3, k1, k2) in h.split_basis(t[2]) {
                    let c = &c12 * c3;
                    let left = w.apply(&ah1, &s.sigma_of(&l1v, &h.basis(*k1)));
                    let right = s.sigma_of(&ah2, &h.mul(&l2v, &h.basis(*k2)));
                    axpy(&mut lhs, &c, &a.mul(&left, &right));
                }
                let left = s.sigma_of(&h.alpha().apply(&h1v), &h.alpha().apply(&l1v));
                let right = s.sigma_of(&h.mul(&h2v, &l2v), &kv);
                axpy(&mut rhs, &c12, &a.mul(&left, &right));
            }
        }
        (lhs, rhs)
    });
    report
}

/// `σ∘(α⊗α) = β∘σ`.
pub fn check_sigma_morphism(s: &CrossedSystem) -> AxiomReport {
    let mut report = AxiomReport::new("sigma_morphism");
    let h = s.h();
    let lhs = s.sigma.compose(&h.alpha().tensor(h.alpha())).expect("shapes");
    let rhs = s.a().alpha().compose(&s.sigma).expect("shapes");
    report.check_maps("sigma_morphism", &lhs, &rhs, &[h.space(), h.space()]);
    report
}

/// Twisted module, cocycle with normalization, and `σ∘(α⊗α) = β∘σ`.
pub fn check_conditions(s: &CrossedSystem) -> AxiomReport {
    let mut report = AxiomReport::new("crossed_conditions");
    report.absorb(check_twisted_module(s));
    report.absorb(check_cocycle_condition(s));
    report.absorb(check_sigma_morphism(s));
    report
}

/// Weak-action axioms plus [`check_conditions`].
pub fn check_crossed_system(s: &CrossedSystem) -> AxiomReport {
    let mut report = AxiomReport::new("crossed_system");
    report.absorb(check_weak_action(&s.action));
    for a in check_conditions(s).axioms {
        report.axioms.push(a);
    }
    report
}

/// Builds the product on `A⊗H` without checking any condition.
pub fn crossed_product_unchecked(s: &CrossedSystem) -> HomAlgebra {
    let (h, a, w) = (s.h(), s.a(), &s.action);
    let field = a.field();
    let space = a.space().tensor(h.space());
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let b_twisted: Vec<Vector> = (0..na).map(|j| a.alpha_pow(-2, &a.basis(j))).collect();
    let h_inv: Vec<Vector> = (0..nh).map(|i| h.alpha_pow(-1, &h.basis(i))).collect();
    let h_sq: Vec<Vector> = (0..nh).map(|i| h.alpha_pow(2, &h.basis(i))).collect();
    let h_one: Vec<Vector> = (0..nh).map(|i| h.alpha().column(i)).collect();
    let mult = LinMap::from_fn(field, space.tensor(&space), space.clone(), |c| {
        let (left, right) = (c / n, c % n);
        let (ai, hp) = (left / nh, left % nh);
        let (bj, kq) = (right / nh, right % nh);
        let mut out = vec![field.zero(); n];
        for (c1, h1, h2) in h.split_basis(hp) {
            let acted = w.apply(&h_inv[*h1], &b_twisted[bj]);
            for (c2, h21, h22) in h.split_basis(*h2) {
                for (c3, k1, k2) in h.split_basis(kq) {
                    let coef = &(c1 * c2) * c3;
                    let mid = a.mul(&acted, &s.sigma_of(&h.basis(*h21), &h_inv[*k1]));
                    let aval = a.mul(&a.basis(ai), &mid);
                    let hval = h.mul(&h_sq[*h22], &h_one[*k2]);
                    axpy(&mut out, &coef, &tensor_vectors(&aval, &hval));
                }
            }
        }
        out
    })
    .expect("product shape");
    HomAlgebra::new(
        a.alpha().tensor(h.alpha()),
        mult,
        tensor_vectors(a.unit(), h.unit()),
    )
    .expect("β⊗α is invertible")
}

/// The crossed product of a system satisfying every condition.
pub fn build_crossed_product(s: &CrossedSystem) -> Result<HomAlgebra> {
    let report = check_crossed_system(s);
    if !report.passed() {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    Ok(crossed_product_unchecked(s))
}

/// Hom-associativity and unitality of the product, checked directly on basis triples.
pub fn crossed_associativity_oracle(s: &CrossedSystem) -> AxiomReport {
    let mut report = check_hom_algebra(&crossed_product_unchecked(s));
    report.structure = "crossed_product".into();
    report
}

/// The smash product `A#H`: the crossed product with `σ = ηε`.
pub fn build_smash_product(w: &WeakAction) -> Result<HomAlgebra> {
    let s = CrossedSystem::with_trivial_cocycle(w.clone());
    let mut report = check_weak_action(w);
    report.absorb(check_twisted_module(&s));
    if !report.passed() {
        return Err(Error::NotModuleAction(Box::new(report)));
    }
    build_crossed_product(&s)
}

/// Labels `a#h` for the product space, matching the `a⊗h` tensor order.
pub fn crossed_space(a: &LabeledSpace, h: &LabeledSpace) -> LabeledSpace {
    a.tensor(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homgroup::{
        coset_cocycle, coset_weak_action, find_equivariant_section, hom_group_algebra,
        normal_quotient, HomGroup,
    };
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rational
    }

    fn group_hopf(g: &str, a: &str) -> HomHopf {
        hom_group_algebra(&HomGroup::from_names(g, a).unwrap(), q()).unwrap()
    }

    fn s3_system() -> CrossedSystem {
        let hg = HomGroup::from_names("S3", "conj:(12)").unwrap();
        let quo = normal_quotient(&hg, &hg.group().parse_subgroup("A3").unwrap()).unwrap();
        let sec = find_equivariant_section(&quo).unwrap();
        let h = hom_group_algebra(quo.quotient(), q()).unwrap();
        let a = hom_group_algebra(quo.sub(), q()).unwrap().algebra;
        let act = WeakAction::new(h, a, coset_weak_action(&sec, q()).unwrap()).unwrap();
        CrossedSystem::new(act, coset_cocycle(&sec, q()).unwrap()).unwrap()
    }

    #[test]
    fn trivial_action_on_ground_field() {
        let h = group_hopf("Z3", "id");
        let w = WeakAction::trivial(h, HomAlgebra::ground(q()));
        assert!(check_weak_action(&w).passed());
        let s = CrossedSystem::with_trivial_cocycle(w);
        assert!(check_conditions(&s).passed());
        assert!(crossed_associativity_oracle(&s).passed());
    }

    #[test]
    fn s3_coset_system_passes() {
        let s = s3_system();
        assert!(check_crossed_system(&s).passed(), "{}", check_crossed_system(&s));
        let b = build_crossed_product(&s).unwrap();
        assert_eq!(b.dim(), 6);
        assert!(check_hom_algebra(&b).passed());
    }

    #[test]
    fn patched_unit_action_fails() {
        let s = s3_system();
        let w = &s.action;
        let mut cols: Vec<Vector> = (0..w.act.domain().dim()).map(|c| w.act.column(c)).collect();
        // h = second coset, a = unit: send to twice the unit
        let na = w.a.dim();
        let unit_idx = 0;
        cols[na + unit_idx] = scale(&q().from_i64(2), &cols[na + unit_idx]);
        let act = LinMap::from_columns(q(), w.act.domain().clone(), w.act.codomain().clone(), &cols)
            .unwrap();
        let patched = WeakAction::new(w.h.clone(), w.a.clone(), act).unwrap();
        let report = check_weak_action(&patched);
        assert_eq!(report.verdict("acts_on_unit"), Some(false));
    }

    #[test]
    fn broken_normalization_reported_at_unit() {
        let s = s3_system();
        let sigma = s.sigma.scale(&q().from_i64(2));
        let broken = CrossedSystem::new(s.action.clone(), sigma).unwrap();
        let report = check_cocycle_condition(&broken);
        let ce = report.outcome("normalized_left").unwrap().counterexample.as_ref().unwrap();
        assert_eq!(ce.tuple, vec!["[e]"]);
        assert!(!crossed_associativity_oracle(&broken).passed());
    }

    #[test]
    fn sigma_morphism_trivial_when_untwisted() {
        let h = group_hopf("Z2", "id");
        let a = group_hopf("Z3", "id").algebra;
        let nh = h.dim();
        let sigma = LinMap::from_fn(q(), h.space().tensor(h.space()), a.space().clone(), |c| {
            a.basis(c % nh + c / nh)
        })
        .unwrap();
        let s = CrossedSystem::new(WeakAction::trivial(h, a), sigma).unwrap();
        assert!(check_sigma_morphism(&s).passed());
    }

    #[test]
    fn sigma_inverse_of_trivial_cocycle() {
        let s = s3_system();
        let t = CrossedSystem::with_trivial_cocycle(s.action.clone());
        assert_eq!(t.sigma_inverse().unwrap(), t.sigma);
    }

    fn d6_system() -> CrossedSystem {
        crate::corpus::extension_system("D6", "<r2,s>", "id", q()).unwrap()
    }

    #[test]
    fn permuted_sigma_breaks_morphism_condition() {
        let s = s3_system();
        // σ([(23)], [(23)]) = (123), which β does not fix
        let a = s.a().clone();
        let h = s.h().clone();
        let nh = h.dim();
        let target = a.space().index_of("(123)").unwrap();
        let sigma = LinMap::from_fn(q(), h.space().tensor(h.space()), a.space().clone(), |c| {
            if c == nh * nh - 1 {
                a.basis(target)
            } else {
                s.sigma.column(c)
            }
        })
        .unwrap();
        let broken = CrossedSystem::new(s.action.clone(), sigma).unwrap();
        assert_eq!(check_sigma_morphism(&broken).verdict("sigma_morphism"), Some(false));
        assert!(!crossed_associativity_oracle(&broken).passed());
    }

    #[test]
    fn smash_with_trivial_group_action_is_componentwise() {
        let h = group_hopf("Z3", "id");
        let a = group_hopf("Z2", "id").algebra;
        let p = build_smash_product(&WeakAction::trivial(h.clone(), a.clone())).unwrap();
        let (na, nh) = (a.dim(), h.dim());
        for x in 0..na * nh {
            for y in 0..na * nh {
                let (ax, hx, ay, hy) = (x / nh, x % nh, y / nh, y % nh);
                let want = tensor_vectors(&a.mul(&a.basis(ax), &a.basis(ay)), &h.mul(&h.basis(hx), &h.basis(hy)));
                assert_eq!(p.mul(&p.basis(x), &p.basis(y)), want);
            }
        }
    }

    #[test]
    fn smash_over_ground_field_is_the_algebra() {
        let a = group_hopf("S3", "conj:(12)").algebra;
        let p = build_smash_product(&WeakAction::trivial(HomHopf::ground(q()), a.clone())).unwrap();
        assert_eq!(p.mult().matrix(), a.mult().matrix());
        assert_eq!(p.alpha().matrix(), a.alpha().matrix());
    }

    #[test]
    fn coset_action_without_its_cocycle_is_not_a_module() {
        let s = d6_system();
        assert!(check_crossed_system(&s).passed());
        assert!(matches!(build_smash_product(&s.action), Err(Error::NotModuleAction(_))));
        let t = CrossedSystem::with_trivial_cocycle(s.action.clone());
        assert_eq!(check_twisted_module(&t).verdict("twisted_module"), Some(false));
        assert!(!crossed_associativity_oracle(&t).passed());
    }

    #[test]
    fn s3_coset_action_is_already_a_module_action() {
        // the cocycle of S3/A3 under conj:(12) is trivial, so its smash product exists
        let s = s3_system();
        assert_eq!(s.sigma, trivial_cocycle(s.h(), s.a()));
        assert!(build_smash_product(&s.action).is_ok());
    }
}
