//! The relative tensor product `B⊗_A B`, the Galois map `φ`, the normal-basis property and the
//! passage from Galois extensions with a normal basis back to cleft extensions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cleft::{a_module_action, check_cleft, crossed_coaction, CleftData, Coinvariants, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::homstruct::{convolution_unit, convolve, map_to_vec, vec_to_map};
use crate::linalg::{
    axpy, basis_vector, format_vector, sub, tensor_vectors, zero_vector, LabeledSpace, LinMap,
    QuotientSpace, Scalar, Subspace, Vector,
};

/// `B⊗_A B = (B⊗B)/X` with `X = span{ma⊗n − β(m)⊗aβ⁻¹(n)}`, `a` running over a basis of `A`.
#[derive(Clone, Debug)]
pub struct RelTensor {
    pub relations: Subspace,
    pub quotient: QuotientSpace,
}

impl RelTensor {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.dim()
    }
}

fn relation_generators(c: &ComoduleAlgebra, coinv: &Coinvariants) -> Vec<(String, Vector)> {
    let b = &c.b;
    let bs = b.space();
    let mut out = Vec::new();
    for m in 0..b.dim() {
        let mv = b.basis(m);
        let bm = b.alpha().column(m);
        for n in 0..b.dim() {
            let nv = b.alpha_inv().column(n);
            for ai in 0..coinv.dim() {
                let a = coinv.include(&coinv.algebra.basis(ai));
                let lhs = tensor_vectors(&b.mul(&mv, &a), &b.basis(n));
                let rhs = tensor_vectors(&bm, &b.mul(&a, &nv));
                let name = format!(
                    "{}·{} ⊗ {}",
                    bs.label(m),
                    coinv.algebra.space().label(ai),
                    bs.label(n)
                );
                out.push((name, sub(&lhs, &rhs)));
            }
        }
    }
    out
}

pub fn relative_tensor(c: &ComoduleAlgebra, coinv: &Coinvariants) -> RelTensor {
    let b = &c.b;
    let ambient = b.space().tensor(b.space());
    let gens = relation_generators(c, coinv).into_iter().map(|(_, v)| v).collect();
    let relations = Subspace::spanned_by(b.field(), ambient, gens);
    let quotient = relations.quotient();
    RelTensor {
        relations,
        quotient,
    }
}

/// `φ(x⊗y) = β⁻¹(x)y₀ ⊗ α(y₁)` on `B⊗B`, before descending to the quotient.
pub fn galois_map_ambient(c: &ComoduleAlgebra) -> LinMap {
    let (b, h) = (&c.b, &c.h);
    let n = b.dim();
    let bs = b.space();
    LinMap::from_fn(b.field(), bs.tensor(bs), bs.tensor(h.space()), |idx| {
        let (x, y) = (idx / n, idx % n);
        let xv = b.alpha_inv().column(x);
        let mut out = zero_vector(b.field(), n * h.dim());
        for (coef, y0, y1) in c.coact_terms(y) {
            let left = b.mul(&xv, &b.basis(y0));
            axpy(&mut out, &coef, &tensor_vectors(&left, &h.alpha().column(y1)));
        }
        out
    })
    .expect("Galois map shape")
}

/// The Galois map on `B⊗_A B` and whether it is bijective.
#[derive(Clone, Debug)]
pub struct GaloisVerdict {
    pub phi: LinMap,
    pub rank: usize,
    pub bijective: bool,
    pub phi_inv: Option<LinMap>,
}

/// Checks that `φ` kills every relation, then descends it along the chosen quotient section.
pub fn galois_map(c: &ComoduleAlgebra, rt: &RelTensor) -> Result<GaloisVerdict> {
    let ambient = galois_map_ambient(c);
    for v in rt.relations.basis() {
        let image = ambient.apply(v);
        if image.iter().any(|x| !x.is_zero()) {
            let bs = c.b.space();
            return Err(Error::NotWellDefined(format!(
                "φ({}) = {}",
                format_vector(&bs.tensor(bs), v),
                format_vector(ambient.codomain(), &image)
            )));
        }
    }
    let phi = ambient.compose(rt.quotient.lift())?;
    let rank = phi.rank();
    let bijective = rank == phi.domain().dim() && rank == phi.codomain().dim();
    let phi_inv = if bijective { Some(phi.invert()?) } else { None };
    Ok(GaloisVerdict {
        phi,
        rank,
        bijective,
        phi_inv,
    })
}

/// `ψ(b⊗h) = Σ β⁻¹(b)γ⁻¹(h₁) ⊗ γ(α(h₂))`, verified to be a two-sided inverse of `φ`.
pub fn cleft_galois_inverse(cd: &CleftData, rt: &RelTensor) -> Result<LinMap> {
    let (b, h) = (cd.b(), cd.h());
    let nh = h.dim();
    let bs = b.space();
    let ambient = LinMap::from_fn(b.field(), bs.tensor(h.space()), bs.tensor(bs), |idx| {
        let (bi, hi) = (idx / nh, idx % nh);
        let bv = b.alpha_inv().column(bi);
        let mut out = zero_vector(b.field(), b.dim() * b.dim());
        for (coef, h1, h2) in h.split_basis(hi) {
            let left = b.mul(&bv, &cd.gamma_inv.column(*h1));
            let right = cd.gamma.apply(&h.alpha().column(*h2));
            axpy(&mut out, coef, &tensor_vectors(&left, &right));
        }
        out
    })?;
    let psi = rt.quotient.project().compose(&ambient)?;
    let phi = galois_map(&cd.comod, rt)?.phi;
    let field = b.field();
    if phi.compose(&psi)? != LinMap::identity(field, phi.codomain()) {
        return Err(Error::VerificationFailed("φ∘ψ ≠ id on B⊗H".into()));
    }
    if psi.compose(&phi)? != LinMap::identity(field, phi.domain()) {
        return Err(Error::VerificationFailed("ψ∘φ ≠ id on B⊗_A B".into()));
    }
    Ok(psi)
}

#[derive(Clone, Copy, Debug)]
pub struct NormalBasisOptions {
    pub seed: u64,
    pub trials: usize,
    /// Impose `θ∘(β⊗α) = β∘θ`.
    pub require_automorphism: bool,
}

impl Default for NormalBasisOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 64,
            require_automorphism: true,
        }
    }
}

/// Outcome of the randomized search for `θ: A⊗H → B`.
#[derive(Clone, Debug)]
pub struct NormalBasisWitness {
    pub theta: Option<LinMap>,
    /// Dimension of the space of admissible `θ`.
    pub constraint_dim: usize,
    /// Whether the search ran on the slice `θ(1⊗1) = 1`.
    pub normalized_slice: bool,
    pub trials_used: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub found: bool,
    pub constraint_dim: usize,
    pub normalized_slice: bool,
    pub trials_used: usize,
    pub seed: u64,
}

impl NormalBasisWitness {
    pub fn summary(&self) -> WitnessSummary {
        WitnessSummary {
            found: self.theta.is_some(),
            constraint_dim: self.constraint_dim,
            normalized_slice: self.normalized_slice,
            trials_used: self.trials_used,
            seed: self.seed,
        }
    }
}

/// Residual of the normal-basis constraints: left `A`-linearity for `a·(b#h) = β⁻¹(a)b#α(h)`,
/// right `H`-colinearity for `ρ(a#h) = Σβ⁻¹(a)#h₁⊗α(h₂)`, and optionally `θ∘(β⊗α) = β∘θ`.
pub fn normal_basis_residual(
    c: &ComoduleAlgebra,
    coinv: &Coinvariants,
    theta: &LinMap,
    require_automorphism: bool,
) -> Vector {
    let (b, h) = (&c.b, &c.h);
    let a = &coinv.algebra;
    let nh = h.dim();
    let mut out = Vec::new();
    for ai in 0..a.dim() {
        let av = a.basis(ai);
        let ib = coinv.include(&av);
        for x in 0..a.dim() * nh {
            let xv = basis_vector(b.field(), a.dim() * nh, x);
            let lhs = theta.apply(&a_module_action(a, h, &av, &xv));
            let rhs = b.mul(&ib, &theta.column(x));
            out.extend(sub(&lhs, &rhs));
        }
    }
    let rho_ah = crossed_coaction(a, h);
    let id = LinMap::identity(b.field(), h.space());
    let lhs = c.rho.compose(theta).expect("shapes");
    let rhs = theta.tensor(&id).compose(&rho_ah).expect("shapes");
    out.extend(map_to_vec(&lhs.sub(&rhs).expect("shapes")));
    if require_automorphism {
        let lhs = theta.compose(&a.alpha().tensor(h.alpha())).expect("shapes");
        let rhs = b.alpha().compose(theta).expect("shapes");
        out.extend(map_to_vec(&lhs.sub(&rhs).expect("shapes")));
    }
    out
}

/// Searches the admissible maps `θ` for an invertible one by random integer combinations,
/// first on the slice `θ(1⊗1) = 1`, then (if that slice is empty) on the whole space. A miss
/// is inconclusive.
pub fn normal_basis_search(
    c: &ComoduleAlgebra,
    coinv: &Coinvariants,
    opts: NormalBasisOptions,
) -> Result<NormalBasisWitness> {
    let (b, h) = (&c.b, &c.h);
    let field = b.field();
    let a = &coinv.algebra;
    let mut witness = NormalBasisWitness {
        theta: None,
        constraint_dim: 0,
        normalized_slice: false,
        trials_used: 0,
        seed: opts.seed,
    };
    if a.dim() * h.dim() != b.dim() {
        return Ok(witness);
    }
    let source = a.space().tensor(h.space());
    let hom = source.hom_space(b.space());
    let residual_len = normal_basis_residual(
        c,
        coinv,
        &LinMap::zero(field, &source, b.space()),
        opts.require_automorphism,
    )
    .len();
    let residual_space =
        LabeledSpace::new((0..residual_len).map(|i| format!("c{i}")))?;
    let constraints = LinMap::from_fn(field, hom.clone(), residual_space, |idx| {
        let unit = vec_to_map(
            field,
            &source,
            b.space(),
            &basis_vector(field, hom.dim(), idx),
        );
        normal_basis_residual(c, coinv, &unit, opts.require_automorphism)
    })?;
    let admissible = constraints.kernel();
    witness.constraint_dim = admissible.dim();
    if admissible.dim() == 0 {
        return Ok(witness);
    }
    let maps: Vec<LinMap> = admissible
        .basis()
        .iter()
        .map(|v| vec_to_map(field, &source, b.space(), v))
        .collect();
    let one = tensor_vectors(a.unit(), h.unit());
    let coords_space = LabeledSpace::new((0..maps.len()).map(|i| format!("t{i}")))?;
    let at_one = LinMap::from_fn(field, coords_space, b.space().clone(), |i| maps[i].apply(&one))?;

    let (base, directions) = match at_one.solve(b.unit()) {
        Ok(p) => {
            witness.normalized_slice = true;
            let dirs = at_one.kernel().basis().to_vec();
            (p, dirs)
        }
        Err(Error::NoSolution) => {
            let n = maps.len();
            let dirs = (0..n).map(|i| basis_vector(field, n, i)).collect();
            (zero_vector(field, n), dirs)
        }
        Err(e) => return Err(e),
    };
    let bound = b.dim() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for trial in 0..opts.trials {
        witness.trials_used = trial + 1;
        let mut coeffs = base.clone();
        for d in &directions {
            let r = field.from_i64(rng.gen_range(-bound..=bound));
            axpy(&mut coeffs, &r, d);
        }
        let mut theta = LinMap::zero(field, &source, b.space());
        for (k, m) in coeffs.iter().zip(&maps) {
            if !k.is_zero() {
                theta = theta.add(&m.scale(k))?;
            }
        }
        if theta.rank() == b.dim() {
            let res = normal_basis_residual(c, coinv, &theta, opts.require_automorphism);
            debug_assert!(res.iter().all(Scalar::is_zero));
            if res.iter().all(Scalar::is_zero) {
                witness.theta = Some(theta);
                return Ok(witness);
            }
        }
    }
    Ok(witness)
}

/// The cleft structure rebuilt from a Galois extension with a normal basis.
#[derive(Clone, Debug)]
pub struct CleftFromGalois {
    pub cleft: CleftData,
    /// `g = β∘(id⊗ε)∘θ⁻¹: B → A`.
    pub g: LinMap,
    /// `μ(h) = m(id⊗g)φ⁻¹(1⊗α⁻¹(h))`.
    pub mu: LinMap,
}

/// Builds `γ(h) = θ(1⊗α⁻¹(h))`, `g` and `μ`, and verifies `g(γ(h)) = ε(h)1`,
/// `b = Σ g(b₀)γ(b₁)`, that `γ` is a normalized comodule map and that `μ` is its two-sided
/// convolution inverse.
pub fn galois_nb_to_cleft(
    c: &ComoduleAlgebra,
    coinv: &Coinvariants,
    rt: &RelTensor,
    verdict: &GaloisVerdict,
    witness: &NormalBasisWitness,
) -> Result<CleftFromGalois> {
    let (b, h) = (&c.b, &c.h);
    let a = &coinv.algebra;
    let field = b.field();
    let phi_inv = verdict.phi_inv.as_ref().ok_or(Error::NotGalois)?;
    let theta = witness.theta.as_ref().ok_or(Error::NoWitness)?;
    let theta_inv = theta.invert()?;
    let nh = h.dim();
    let gamma = LinMap::from_fn(field, h.space().clone(), b.space().clone(), |i| {
        theta.apply(&tensor_vectors(a.unit(), &h.alpha_pow(-1, &h.basis(i))))
    })?;
    let g = LinMap::from_fn(field, b.space().clone(), a.space().clone(), |i| {
        let x = theta_inv.column(i);
        let mut out = a.zero();
        for (idx, coef) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let e = coef * h.coalgebra.counit_basis(idx % nh);
            axpy(&mut out, &e, &a.basis(idx / nh));
        }
        a.alpha().apply(&out)
    })?;
    let ig = coinv.inclusion.compose(&g)?;
    let lift = rt.quotient.lift();
    let n = b.dim();
    let mu = LinMap::from_fn(field, h.space().clone(), b.space().clone(), |i| {
        let target = tensor_vectors(b.unit(), &h.alpha_pow(-1, &h.basis(i)));
        let pre = lift.apply(&phi_inv.apply(&target));
        let mut out = b.zero();
        for (idx, coef) in pre.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let prod = b.mul(&b.basis(idx / n), &ig.column(idx % n));
            axpy(&mut out, coef, &prod);
        }
        out
    })?;

    let fail = |what: &str| Err(Error::VerificationFailed(what.to_string()));
    if &gamma.apply(h.unit()) != b.unit() {
        return fail("γ(1) = 1");
    }
    let id_h = LinMap::identity(field, h.space());
    if c.rho.compose(&gamma)? != gamma.tensor(&id_h).compose(h.coalgebra.comult())? {
        return fail("γ is a right H-comodule map");
    }
    if gamma.compose(h.alpha())? != b.alpha().compose(&gamma)? {
        return fail("γ∘α = β∘γ");
    }
    let unit = convolution_unit(&h.coalgebra, b);
    if ig.compose(&gamma)? != unit {
        return fail("g(γ(h)) = ε(h)1");
    }
    for i in 0..n {
        let mut rebuilt = b.zero();
        for (coef, x, y) in c.coact_terms(i) {
            axpy(&mut rebuilt, &coef, &b.mul(&ig.column(x), &gamma.column(y)));
        }
        if rebuilt != b.basis(i) {
            return fail(&format!("b = Σ g(b₀)γ(b₁) at {}", b.space().label(i)));
        }
    }
    if convolve(&gamma, &mu, &h.coalgebra, b)? != unit {
        return fail("γ∗μ = ηε");
    }
    if convolve(&mu, &gamma, &h.coalgebra, b)? != unit {
        return fail("μ∗γ = ηε");
    }
    let cleft = CleftData::new(c.clone(), gamma, Some(mu.clone()))?;
    if !check_cleft(&cleft).passed() {
        return fail("cleft axioms for the rebuilt γ");
    }
    Ok(CleftFromGalois { cleft, g, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleft::{coinvariants, section_cleft};
    use crate::homgroup::{find_equivariant_section, hom_group_algebra, normal_quotient, HomGroup};
    use crate::linalg::Field;

    fn kz2() -> crate::homstruct::HomHopf {
        hom_group_algebra(&HomGroup::from_names("Z2", "id").unwrap(), Field::Rational).unwrap()
    }

    #[test]
    fn regular_kz2_is_galois_with_rank_four() {
        let c = ComoduleAlgebra::regular(kz2());
        let coinv = coinvariants(&c).unwrap();
        let rt = relative_tensor(&c, &coinv);
        assert_eq!(rt.dim(), 4);
        let v = galois_map(&c, &rt).unwrap();
        assert!(v.bijective);
        assert_eq!(v.rank, 4);
    }

    #[test]
    fn trivial_coaction_is_not_galois() {
        let h = kz2();
        let c = ComoduleAlgebra::trivial(h.algebra.clone(), h);
        let coinv = coinvariants(&c).unwrap();
        let rt = relative_tensor(&c, &coinv);
        assert_eq!(rt.dim(), 2);
        assert!(!galois_map(&c, &rt).unwrap().bijective);
        let w = normal_basis_search(&c, &coinv, NormalBasisOptions::default()).unwrap();
        assert!(w.theta.is_none());
        assert_eq!(w.trials_used, 0);
    }

    #[test]
    fn s3_galois_chain() {
        let hg = HomGroup::from_names("S3", "conj:(12)").unwrap();
        let quo = normal_quotient(&hg, &hg.group().parse_subgroup("A3").unwrap()).unwrap();
        let sec = find_equivariant_section(&quo).unwrap();
        let cd = section_cleft(&sec, Field::Rational).unwrap();
        let coinv = coinvariants(&cd.comod).unwrap();
        let rt = relative_tensor(&cd.comod, &coinv);
        assert_eq!(rt.dim(), 12);
        let v = galois_map(&cd.comod, &rt).unwrap();
        assert!(v.bijective);
        let psi = cleft_galois_inverse(&cd, &rt).unwrap();
        assert_eq!(Some(psi), v.phi_inv);
        let w = normal_basis_search(&cd.comod, &coinv, NormalBasisOptions::default()).unwrap();
        assert!(w.theta.is_some());
        let back = galois_nb_to_cleft(&cd.comod, &coinv, &rt, &v, &w).unwrap();
        assert!(check_cleft(&back.cleft).passed());
    }
}
