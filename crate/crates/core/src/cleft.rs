//! Right Hom-comodule algebras, coinvariants and cleft extensions, with the passage between
//! cleft extensions and crossed products in both directions.

use crate::crossed::{
    check_crossed_system, crossed_product_unchecked, CrossedSystem, WeakAction,
};
use crate::error::{Error, Result};
use crate::homgroup::{
    coset_cocycle, coset_weak_action, hom_group_algebra, EquivariantSection, NormalQuotient,
};
use crate::homstruct::{convolution_invert, convolution_unit, convolve, HomAlgebra, HomHopf};
use crate::linalg::{
    axpy, basis_vector, format_vector, tensor_vectors, zero_vector, Field,
    LabeledSpace, LinMap, Subspace, Vector,
};
use crate::report::AxiomReport;

/// `(B, β)` with a coaction `ρ: B → B⊗H`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub b: HomAlgebra,
    pub h: HomHopf,
    pub rho: LinMap,
}

impl ComoduleAlgebra {
    pub fn new(b: HomAlgebra, h: HomHopf, rho: LinMap) -> Result<Self> {
        if rho.domain() != b.space() || rho.codomain() != &b.space().tensor(h.space()) {
            return Err(Error::ShapeMismatch("coaction must map B → B⊗H".into()));
        }
        Ok(Self { b, h, rho })
    }

    /// `H` over itself with `ρ = Δ`.
    pub fn regular(h: HomHopf) -> Self {
        let rho = h.coalgebra.comult().clone();
        Self {
            b: h.algebra.clone(),
            h,
            rho,
        }
    }

    /// `ρ(b) = β⁻¹(b)⊗1`, whose coinvariants are all of `B`.
    pub fn trivial(b: HomAlgebra, h: HomHopf) -> Self {
        let rho = LinMap::from_fn(b.field(), b.space().clone(), b.space().tensor(h.space()), |i| {
            tensor_vectors(&b.alpha_inv().column(i), h.unit())
        })
        .expect("coaction shape");
        Self { b, h, rho }
    }

    pub fn field(&self) -> Field {
        self.b.field()
    }

    /// Sweedler terms `(coefficient, b₀, b₁)` of `ρ(e_i)`.
    pub fn coact_terms(&self, i: usize) -> Vec<(crate::linalg::Scalar, usize, usize)> {
        let nh = self.h.dim();
        self.rho
            .column(i)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (c, idx / nh, idx % nh))
            .collect()
    }
}

/// The coaction `ρ(a#h) = Σ β⁻¹(a)#h₁ ⊗ α(h₂)` on `A⊗H`.
pub fn crossed_coaction(a: &HomAlgebra, h: &HomHopf) -> LinMap {
    let nh = h.dim();
    let space = a.space().tensor(h.space());
    LinMap::from_fn(a.field(), space.clone(), space.tensor(h.space()), |c| {
        let (ai, hi) = (c / nh, c % nh);
        let av = a.alpha_inv().column(ai);
        let mut out = zero_vector(a.field(), space.dim() * nh);
        for (coef, h1, h2) in h.split_basis(hi) {
            let left = tensor_vectors(&av, &h.basis(*h1));
            axpy(&mut out, coef, &tensor_vectors(&left, &h.alpha().column(*h2)));
        }
        out
    })
    .expect("coaction shape")
}

pub fn check_comodule_algebra(c: &ComoduleAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new("comodule_algebra");
    let (b, h) = (&c.b, &c.h);
    let bs = b.space();
    let bh = bs.tensor(h.space());
    let lhs = b
        .alpha_inv()
        .tensor(h.coalgebra.comult())
        .compose(&c.rho)
        .expect("shapes");
    let rhs = c
        .rho
        .tensor(h.coalgebra.auto_inv())
        .compose(&c.rho)
        .expect("shapes");
    report.check_maps("coassociative", &lhs, &rhs, &[bs]);
    report.check_tuples("counital", &[bs], bs, |t| {
        let mut out = b.zero();
        for (coef, x, y) in c.coact_terms(t[0]) {
            axpy(&mut out, &(&coef * h.coalgebra.counit_basis(y)), &b.basis(x));
        }
        (out, b.alpha_inv().column(t[0]))
    });
    let lhs = c.rho.compose(b.alpha()).expect("shapes");
    let rhs = b.alpha().tensor(h.alpha()).compose(&c.rho).expect("shapes");
    report.check_maps("automorphism_compatible", &lhs, &rhs, &[bs]);
    let square = b.tensor(&h.algebra);
    report.check_tuples("multiplicative", &[bs, bs], &bh, |t| {
        let (x, y) = (b.basis(t[0]), b.basis(t[1]));
        (
            c.rho.apply(&b.mul(&x, &y)),
            square.mul(&c.rho.apply(&x), &c.rho.apply(&y)),
        )
    });
    report.check_tuples("unital", &[], &bh, |_| {
        (c.rho.apply(b.unit()), tensor_vectors(b.unit(), h.unit()))
    });
    report
}

/// The coinvariant subalgebra `A = {b : ρ(b) = β⁻¹(b)⊗1}` with its induced structure.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub subspace: Subspace,
    pub inclusion: LinMap,
    pub algebra: HomAlgebra,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn contains(&self, b: &[crate::linalg::Scalar]) -> bool {
        self.subspace.contains(b)
    }

    /// Coordinates in `A` of an element of `B`, `None` outside `A`.
    pub fn coordinates(&self, b: &[crate::linalg::Scalar]) -> Option<Vector> {
        self.subspace.coordinates(b)
    }

    pub fn include(&self, a: &[crate::linalg::Scalar]) -> Vector {
        self.inclusion.apply(a)
    }
}

/// Kernel of `b ↦ ρ(b) − β⁻¹(b)⊗1`. Basis vectors of `A` are labeled by the pivot label of
/// their echelon row in `B`.
pub fn coinvariants(c: &ComoduleAlgebra) -> Result<Coinvariants> {
    let (b, h) = (&c.b, &c.h);
    let field = c.field();
    let trivial = ComoduleAlgebra::trivial(b.clone(), h.clone());
    let subspace = c.rho.sub(&trivial.rho)?.kernel();
    let space = LabeledSpace::new(
        subspace
            .pivots()
            .iter()
            .map(|&p| b.space().label(p).to_string()),
    )?;
    let inclusion = subspace.inclusion(&space)?;
    let coords = |v: &[crate::linalg::Scalar], what: &str| {
        subspace
            .coordinates(v)
            .ok_or_else(|| Error::CoinvariantsNotClosed(format!("{what} = {}", format_vector(b.space(), v))))
    };
    let unit = coords(b.unit(), "1")?;
    let basis = subspace.basis();
    let mut alpha_cols = Vec::new();
    for (i, v) in basis.iter().enumerate() {
        alpha_cols.push(coords(&b.alpha().apply(v), &format!("β({})", space.label(i)))?);
    }
    let alpha = LinMap::from_columns(field, space.clone(), space.clone(), &alpha_cols)?;
    let mut mult_cols = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            mult_cols.push(coords(
                &b.mul(x, y),
                &format!("{}·{}", space.label(i), space.label(j)),
            )?);
        }
    }
    let mult = LinMap::from_columns(field, space.tensor(&space), space.clone(), &mult_cols)?;
    let algebra = HomAlgebra::new(alpha, mult, unit)?;
    Ok(Coinvariants {
        subspace,
        inclusion,
        algebra,
    })
}

/// A cleft extension: a comodule algebra with a normalized, convolution-invertible
/// comodule map `γ: H → B`.
#[derive(Clone, Debug)]
pub struct CleftData {
    pub comod: ComoduleAlgebra,
    pub gamma: LinMap,
    pub gamma_inv: LinMap,
}

impl CleftData {
    /// Rejects `γ(1) ≠ 1`; computes `γ⁻¹` by convolution inversion when not given.
    pub fn new(comod: ComoduleAlgebra, gamma: LinMap, gamma_inv: Option<LinMap>) -> Result<Self> {
        let (b, h) = (&comod.b, &comod.h);
        for m in std::iter::once(&gamma).chain(gamma_inv.as_ref()) {
            if m.domain() != h.space() || m.codomain() != b.space() {
                return Err(Error::ShapeMismatch("cleft map must go H → B".into()));
            }
        }
        if &gamma.apply(h.unit()) != b.unit() {
            return Err(Error::NormalizationMissing);
        }
        let gamma_inv = match gamma_inv {
            Some(g) => g,
            None => convolution_invert(&gamma, &h.coalgebra, b)?,
        };
        Ok(Self {
            comod,
            gamma,
            gamma_inv,
        })
    }

    pub fn b(&self) -> &HomAlgebra {
        &self.comod.b
    }

    pub fn h(&self) -> &HomHopf {
        &self.comod.h
    }
}

pub fn check_cleft(cd: &CleftData) -> AxiomReport {
    let mut report = AxiomReport::new("cleft");
    let (b, h) = (cd.b(), cd.h());
    let hs = h.space();
    let lhs = cd.comod.rho.compose(&cd.gamma).expect("shapes");
    let id = LinMap::identity(h.field(), hs);
    let rhs = cd
        .gamma
        .tensor(&id)
        .compose(h.coalgebra.comult())
        .expect("shapes");
    report.check_maps("comodule_map", &lhs, &rhs, &[hs]);
    let lhs = cd.gamma.compose(h.alpha()).expect("shapes");
    let rhs = b.alpha().compose(&cd.gamma).expect("shapes");
    report.check_maps("automorphism_compatible", &lhs, &rhs, &[hs]);
    report.check_tuples("normalized", &[], b.space(), |_| {
        (cd.gamma.apply(h.unit()), b.unit().clone())
    });
    let unit = convolution_unit(&h.coalgebra, b);
    let left = convolve(&cd.gamma_inv, &cd.gamma, &h.coalgebra, b).expect("shapes");
    report.check_maps("inverse_left", &left, &unit, &[hs]);
    let right = convolve(&cd.gamma, &cd.gamma_inv, &h.coalgebra, b).expect("shapes");
    report.check_maps("inverse_right", &right, &unit, &[hs]);
    report
}

/// `Σ b₀γ⁻¹(b₁)` for every basis vector `b`, as a map `B → B`.
fn coinvariant_projection(cd: &CleftData) -> LinMap {
    let b = cd.b();
    LinMap::from_fn(b.field(), b.space().clone(), b.space().clone(), |i| {
        let mut out = b.zero();
        for (coef, x, y) in cd.comod.coact_terms(i) {
            axpy(&mut out, &coef, &b.mul(&b.basis(x), &cd.gamma_inv.column(y)));
        }
        out
    })
    .expect("projection shape")
}

/// `ρ∘γ⁻¹ = (γ⁻¹⊗S)∘τ∘Δ` and `Σ b₀γ⁻¹(b₁) ∈ A` for every basis `b`.
pub fn check_cleft_identities(cd: &CleftData, coinv: &Coinvariants) -> AxiomReport {
    let mut report = AxiomReport::new("cleft_identities");
    let (b, h) = (cd.b(), cd.h());
    let hs = h.space();
    let lhs = cd.comod.rho.compose(&cd.gamma_inv).expect("shapes");
    let rhs = cd
        .gamma_inv
        .tensor(&h.antipode)
        .compose(&LinMap::flip(h.field(), hs, hs))
        .and_then(|m| m.compose(h.coalgebra.comult()))
        .expect("shapes");
    report.check_maps("inverse_coaction", &lhs, &rhs, &[hs]);
    let proj = coinvariant_projection(cd);
    report.check_tuples("projection_coinvariant", &[b.space()], b.space(), |t| {
        let v = proj.column(t[0]);
        (coinv.subspace.reduce(&v), b.zero())
    });
    report
}

/// The crossed system recovered from a cleft extension, together with the comparison maps.
#[derive(Clone, Debug)]
pub struct CrossedFromCleft {
    pub coinvariants: Coinvariants,
    pub system: CrossedSystem,
    pub product: HomAlgebra,
    /// `Φ(a#h) = aγ(h)`.
    pub phi: LinMap,
    /// `Ψ(b) = Σ b₀₀γ⁻¹(b₀₁) # b₁`.
    pub psi: LinMap,
}

impl CrossedFromCleft {
    /// `ΦΨ = id`, `ΨΦ = id`, and that `Φ` is a Hom-algebra map, a left `A`-module map and a right
    /// `H`-comodule map.
    pub fn verify(&self, cd: &CleftData) -> AxiomReport {
        let mut report = AxiomReport::new("cleft_to_crossed");
        let (b, h) = (cd.b(), cd.h());
        let a = &self.coinvariants.algebra;
        let field = b.field();
        let (bs, ps) = (b.space(), self.product.space());
        let phipsi = self.phi.compose(&self.psi).expect("shapes");
        report.check_maps("phi_psi_identity", &phipsi, &LinMap::identity(field, bs), &[bs]);
        let psiphi = self.psi.compose(&self.phi).expect("shapes");
        report.check_maps("psi_phi_identity", &psiphi, &LinMap::identity(field, ps), &[ps]);
        report.check_tuples("phi_multiplicative", &[ps, ps], bs, |t| {
            let (x, y) = (self.product.basis(t[0]), self.product.basis(t[1]));
            (
                self.phi.apply(&self.product.mul(&x, &y)),
                b.mul(&self.phi.apply(&x), &self.phi.apply(&y)),
            )
        });
        report.check_tuples("phi_unital", &[], bs, |_| {
            (self.phi.apply(self.product.unit()), b.unit().clone())
        });
        let lhs = self.phi.compose(self.product.alpha()).expect("shapes");
        let rhs = b.alpha().compose(&self.phi).expect("shapes");
        report.check_maps("phi_automorphism", &lhs, &rhs, &[ps]);
        report.check_tuples("phi_module_map", &[a.space(), ps], bs, |t| {
            let av = a.basis(t[0]);
            let x = self.product.basis(t[1]);
            let acted = a_module_action(a, h, &av, &x);
            (
                self.phi.apply(&acted),
                b.mul(&self.coinvariants.include(&av), &self.phi.apply(&x)),
            )
        });
        let rho_ah = crossed_coaction(a, h);
        let id = LinMap::identity(field, h.space());
        let lhs = self.phi.tensor(&id).compose(&rho_ah).expect("shapes");
        let rhs = cd.comod.rho.compose(&self.phi).expect("shapes");
        report.check_maps("phi_comodule_map", &lhs, &rhs, &[ps]);
        report
    }
}

/// `a·(b#h) = β⁻¹(a)b # α(h)` on `A⊗H`.
pub fn a_module_action(a: &HomAlgebra, h: &HomHopf, av: &[crate::linalg::Scalar], x: &[crate::linalg::Scalar]) -> Vector {
    let nh = h.dim();
    let ai = a.alpha_inv().apply(av);
    let mut out = zero_vector(a.field(), a.dim() * nh);
    for (idx, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (bi, hi) = (idx / nh, idx % nh);
        let left = a.mul(&ai, &a.basis(bi));
        axpy(&mut out, c, &tensor_vectors(&left, &h.alpha().column(hi)));
    }
    out
}

/// Recovers the action `h·a = Σ(γ(h₁)β⁻¹(a))γ⁻¹(α(h₂))` and cocycle
/// `σ(h,k) = Σ(γ(h₁)γ(k₁))γ⁻¹(h₂k₂)` on the coinvariants, and builds `Φ` and `Ψ`.
pub fn cleft_to_crossed(cd: &CleftData) -> Result<CrossedFromCleft> {
    let (b, h) = (cd.b(), cd.h());
    let field = b.field();
    let coinv = coinvariants(&cd.comod)?;
    let a = coinv.algebra.clone();
    let (na, nh) = (a.dim(), h.dim());
    let into_a = |v: Vector, what: String| {
        coinv
            .coordinates(&v)
            .ok_or_else(|| Error::ValueEscapesCoinvariants(format!("{what} = {}", format_vector(b.space(), &v))))
    };
    let gam: Vec<Vector> = (0..nh).map(|i| cd.gamma.column(i)).collect();
    let act = LinMap::try_from_fn(field, h.space().tensor(a.space()), a.space().clone(), |c| {
        let (hi, ai) = (c / na, c % na);
        let av = b.alpha_inv().apply(&coinv.include(&a.basis(ai)));
        let mut out = b.zero();
        for (coef, h1, h2) in h.split_basis(hi) {
            let inv = cd.gamma_inv.apply(&h.alpha().column(*h2));
            axpy(&mut out, coef, &b.mul(&b.mul(&gam[*h1], &av), &inv));
        }
        into_a(out, format!("{}·{}", h.space().label(hi), a.space().label(ai)))
    })?;
    let sigma = LinMap::try_from_fn(field, h.space().tensor(h.space()), a.space().clone(), |c| {
        let (hi, ki) = (c / nh, c % nh);
        let mut out = b.zero();
        for (c1, h1, h2) in h.split_basis(hi) {
            for (c2, k1, k2) in h.split_basis(ki) {
                let inv = cd.gamma_inv.apply(&h.mul(&h.basis(*h2), &h.basis(*k2)));
                axpy(&mut out, &(c1 * c2), &b.mul(&b.mul(&gam[*h1], &gam[*k1]), &inv));
            }
        }
        into_a(out, format!("σ({}, {})", h.space().label(hi), h.space().label(ki)))
    })?;
    let system = CrossedSystem::new(WeakAction::new(h.clone(), a.clone(), act)?, sigma)?;
    let report = check_crossed_system(&system);
    if !report.passed() {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    let product = crossed_product_unchecked(&system);
    let phi = LinMap::from_fn(field, product.space().clone(), b.space().clone(), |c| {
        let (ai, hi) = (c / nh, c % nh);
        b.mul(&coinv.include(&a.basis(ai)), &gam[hi])
    })?;
    let proj = coinvariant_projection(cd);
    let proj_coords = (0..b.dim())
        .map(|x| into_a(proj.column(x), format!("Σ b₀γ⁻¹(b₁) at {}", b.space().label(x))))
        .collect::<Result<Vec<_>>>()?;
    let psi = LinMap::from_fn(field, b.space().clone(), product.space().clone(), |i| {
        let mut out = zero_vector(field, na * nh);
        for (coef, x, y) in cd.comod.coact_terms(i) {
            axpy(&mut out, &coef, &tensor_vectors(&proj_coords[x], &h.basis(y)));
        }
        out
    })?;
    Ok(CrossedFromCleft {
        coinvariants: coinv,
        system,
        product,
        phi,
        psi,
    })
}

/// The cleft extension carried by a crossed product.
#[derive(Clone, Debug)]
pub struct CleftFromCrossed {
    pub product: HomAlgebra,
    pub cleft: CleftData,
    /// `γ⁻¹` from the closed form `Σσ⁻¹(S(h₂₁),h₂₂)#S(h₁)`.
    pub closed_form_inverse: LinMap,
    /// `γ⁻¹` from the convolution solver.
    pub solver_inverse: LinMap,
}

/// `B = A#_σH` with `ρ(a#h) = Σβ⁻¹(a)#h₁⊗α(h₂)` and `γ(h) = 1#α⁻¹(h)`.
pub fn crossed_to_cleft(s: &CrossedSystem) -> Result<CleftFromCrossed> {
    let report = check_crossed_system(s);
    if !report.passed() {
        return Err(Error::ConditionsViolated(Box::new(report)));
    }
    let (a, h) = (s.a(), s.h());
    let field = a.field();
    let product = crossed_product_unchecked(s);
    let comod = ComoduleAlgebra::new(product.clone(), h.clone(), crossed_coaction(a, h))?;
    let gamma = LinMap::from_fn(field, h.space().clone(), product.space().clone(), |i| {
        tensor_vectors(a.unit(), &h.alpha_pow(-1, &h.basis(i)))
    })?;
    let sigma_inv = s.sigma_inverse()?;
    let closed = LinMap::from_fn(field, h.space().clone(), product.space().clone(), |i| {
        let mut out = product.zero();
        for (c1, h1, h2) in h.split_basis(i) {
            let s1 = h.antipode.column(*h1);
            for (c2, h21, h22) in h.split_basis(*h2) {
                let sv = sigma_inv.apply_pair(&h.antipode.column(*h21), &h.basis(*h22));
                axpy(&mut out, &(c1 * c2), &tensor_vectors(&sv, &s1));
            }
        }
        out
    })?;
    let solver = convolution_invert(&gamma, &h.coalgebra, &product)?;
    let cleft = CleftData::new(comod, gamma, Some(closed.clone()))?;
    Ok(CleftFromCrossed {
        product,
        cleft,
        closed_form_inverse: closed,
        solver_inverse: solver,
    })
}

/// `kG` as a right `k[G/N]`-comodule algebra via `ρ(g) = α⁻¹(g)⊗ḡ`.
pub fn group_quotient_comodule(q: &NormalQuotient, field: Field) -> Result<ComoduleAlgebra> {
    let kg = hom_group_algebra(q.parent(), field)?;
    let kq = hom_group_algebra(q.quotient(), field)?;
    let (n, nq) = (kg.dim(), kq.dim());
    let rho = LinMap::from_fn(field, kg.space().clone(), kg.space().tensor(kq.space()), |g| {
        basis_vector(field, n * nq, q.parent().alpha_inv(g) * nq + q.coset_of(g))
    })?;
    ComoduleAlgebra::new(kg.algebra, kq, rho)
}

/// The cleft map `x̄ ↦ α⁻¹(γ(x̄))` induced by an equivariant section.
pub fn section_cleft(sec: &EquivariantSection, field: Field) -> Result<CleftData> {
    let q = sec.quotient();
    let comod = group_quotient_comodule(q, field)?;
    let n = comod.b.dim();
    let gamma = LinMap::from_fn(field, comod.h.space().clone(), comod.b.space().clone(), |x| {
        basis_vector(field, n, q.parent().alpha_inv(sec.rep(x)))
    })?;
    CleftData::new(comod, gamma, None)
}

/// The crossed system `kN#_σk[G/N]` read off from the coset action and cocycle of a section.
pub fn group_crossed_system(sec: &EquivariantSection, field: Field) -> Result<CrossedSystem> {
    let q = sec.quotient();
    let a = hom_group_algebra(q.sub(), field)?.algebra;
    let h = hom_group_algebra(q.quotient(), field)?;
    let act = coset_weak_action(sec, field)?;
    let sigma = coset_cocycle(sec, field)?;
    CrossedSystem::new(WeakAction::new(h, a, act)?, sigma)
}

/// `Φ(n#x̄) = n·α⁻¹(γ(x̄))` from `product = kN#_σk[G/N]` into `kG`.
pub fn group_product_map(sec: &EquivariantSection, product: &HomAlgebra, field: Field) -> Result<LinMap> {
    let q = sec.quotient();
    let parent = q.parent();
    let n = parent.order();
    let nq = q.cosets().len();
    LinMap::from_fn(field, product.space().clone(), parent.space(), |c| {
        let (m, x) = (q.members()[c / nq], c % nq);
        basis_vector(field, n, parent.hom_mul(m, parent.alpha_inv(sec.rep(x))))
    })
}

/// Checks that `phi: src → dst` is a bijective, unital, multiplicative map intertwining the
/// twisting automorphisms.
pub fn check_algebra_isomorphism(
    structure: &str,
    phi: &LinMap,
    src: &HomAlgebra,
    dst: &HomAlgebra,
) -> AxiomReport {
    let mut report = AxiomReport::new(structure);
    let bijective = phi.domain().dim() == phi.codomain().dim() && phi.rank() == phi.domain().dim();
    if bijective {
        report.pass("bijective");
    } else {
        report.fail(
            "bijective",
            vec![],
            format!("rank {}", phi.rank()),
            format!("dim {} → {}", phi.domain().dim(), phi.codomain().dim()),
        );
    }
    let s = src.space();
    report.check_tuples("multiplicative", &[s, s], dst.space(), |t| {
        let lhs = phi.apply(&src.mul(&src.basis(t[0]), &src.basis(t[1])));
        let rhs = dst.mul(&phi.column(t[0]), &phi.column(t[1]));
        (lhs, rhs)
    });
    let unit = phi.apply(src.unit());
    if &unit == dst.unit() {
        report.pass("unital");
    } else {
        report.fail(
            "unital",
            vec![],
            format_vector(dst.space(), &unit),
            format_vector(dst.space(), dst.unit()),
        );
    }
    let lhs = phi.compose(src.alpha()).expect("shapes");
    let rhs = dst.alpha().compose(phi).expect("shapes");
    report.check_maps("automorphism_compatible", &lhs, &rhs, &[s]);
    report
}
