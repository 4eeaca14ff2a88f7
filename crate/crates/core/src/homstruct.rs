//! Monoidal Hom-algebras, Hom-coalgebras and Hom-Hopf algebras given by structure constants,
//! together with their exact axiom checkers and the convolution product.
//!
//! Conventions follow the monoidal Hom-category: every structure carries an invertible
//! twisting automorphism and all structure maps commute with it. The counit law checked here is
//! `Σ c₁ε(c₂) = Σ ε(c₁)c₂ = γ⁻¹(c)` with `γ` the coalgebra's own automorphism.

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, basis_vector, support, tensor_vectors, zero_vector, Field, LabeledSpace, LinMap, Matrix,
    Scalar, Subspace, Vector,
};
use crate::report::AxiomReport;

/// A unital monoidal Hom-associative algebra `(A, α, m, 1)`.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    field: Field,
    space: LabeledSpace,
    alpha: LinMap,
    alpha_inv: LinMap,
    mult: LinMap,
    unit: Vector,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl HomAlgebra {
    /// `mult` maps `space⊗space → space`; `alpha` must be invertible.
    pub fn new(alpha: LinMap, mult: LinMap, unit: Vector) -> Result<Self> {
        let space = alpha.domain().clone();
        let field = alpha.field();
        if alpha.codomain() != &space {
            return Err(Error::ShapeMismatch("α must be an endomorphism".into()));
        }
        if mult.domain() != &space.tensor(&space) || mult.codomain() != &space {
            return Err(Error::ShapeMismatch(
                "multiplication must map A⊗A → A".into(),
            ));
        }
        if unit.len() != space.dim() {
            return Err(Error::ShapeMismatch("unit has the wrong length".into()));
        }
        let alpha_inv = alpha
            .invert()
            .map_err(|_| Error::InvalidAutomorphism("twisting map is singular".into()))?;
        let n = space.dim();
        let table = (0..n * n)
            .map(|c| {
                support(&mult.column(c))
                    .map(|(r, x)| (r, x.clone()))
                    .collect()
            })
            .collect();
        Ok(Self {
            field,
            space,
            alpha,
            alpha_inv,
            mult,
            unit,
            table,
        })
    }

    /// The ground field `k` with `α = id`.
    pub fn ground(field: Field) -> Self {
        let k = LabeledSpace::ground();
        let mult = LinMap::identity(field, &k).relabel(&k.tensor(&k), &k).unwrap();
        Self::new(LinMap::identity(field, &k), mult, vec![field.one()]).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &LabeledSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &LinMap {
        &self.alpha_inv
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        basis_vector(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = self.zero();
        for (i, xi) in support(x) {
            for (j, yj) in support(y) {
                let c = xi * yj;
                for (r, m) in &self.table[i * n + j] {
                    out[*r].add_assign_ref(&(&c * m));
                }
            }
        }
        out
    }

    /// `αᵏ(x)` for any integer `k`.
    pub fn alpha_pow(&self, k: i32, x: &[Scalar]) -> Vector {
        let map = if k >= 0 { &self.alpha } else { &self.alpha_inv };
        (0..k.unsigned_abs()).fold(x.to_vec(), |acc, _| map.apply(&acc))
    }

    /// The tensor product Hom-algebra `(A⊗B, α⊗β)` with componentwise product.
    pub fn tensor(&self, other: &HomAlgebra) -> HomAlgebra {
        let space = self.space.tensor(&other.space);
        let (na, nb) = (self.dim(), other.dim());
        let n = na * nb;
        let mult = LinMap::from_fn(self.field, space.tensor(&space), space.clone(), |c| {
            let (left, right) = (c / n, c % n);
            let (i, j) = (left / nb, left % nb);
            let (k, l) = (right / nb, right % nb);
            tensor_vectors(
                &self.mul(&self.basis(i), &self.basis(k)),
                &other.mul(&other.basis(j), &other.basis(l)),
            )
        })
        .expect("tensor product multiplication shape");
        HomAlgebra::new(
            self.alpha.tensor(&other.alpha),
            mult,
            tensor_vectors(&self.unit, &other.unit),
        )
        .expect("tensor of automorphisms is invertible")
    }
}

/// A counital monoidal Hom-coassociative coalgebra `(C, γ, Δ, ε)`.
#[derive(Clone, Debug)]
pub struct HomCoalgebra {
    field: Field,
    space: LabeledSpace,
    auto: LinMap,
    auto_inv: LinMap,
    comult: LinMap,
    counit: LinMap,
    splits: Vec<Vec<(Scalar, usize, usize)>>,
}

impl HomCoalgebra {
    pub fn new(auto: LinMap, comult: LinMap, counit: LinMap) -> Result<Self> {
        let space = auto.domain().clone();
        let field = auto.field();
        if auto.codomain() != &space {
            return Err(Error::ShapeMismatch("γ must be an endomorphism".into()));
        }
        if comult.domain() != &space || comult.codomain() != &space.tensor(&space) {
            return Err(Error::ShapeMismatch(
                "comultiplication must map C → C⊗C".into(),
            ));
        }
        if counit.domain() != &space || counit.codomain().dim() != 1 {
            return Err(Error::ShapeMismatch("counit must map C → k".into()));
        }
        let auto_inv = auto
            .invert()
            .map_err(|_| Error::InvalidAutomorphism("twisting map is singular".into()))?;
        let n = space.dim();
        let splits = (0..n)
            .map(|c| {
                support(&comult.column(c))
                    .map(|(idx, x)| (x.clone(), idx / n, idx % n))
                    .collect()
            })
            .collect();
        Ok(Self {
            field,
            space,
            auto,
            auto_inv,
            comult,
            counit,
            splits,
        })
    }

    pub fn ground(field: Field) -> Self {
        let k = LabeledSpace::ground();
        let comult = LinMap::identity(field, &k).relabel(&k, &k.tensor(&k)).unwrap();
        Self::new(
            LinMap::identity(field, &k),
            comult,
            LinMap::identity(field, &k),
        )
        .unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &LabeledSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn auto(&self) -> &LinMap {
        &self.auto
    }

    pub fn auto_inv(&self) -> &LinMap {
        &self.auto_inv
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// Sweedler terms `(coefficient, i, j)` of `Δ(e_b) = Σ coefficient · e_i⊗e_j`.
    pub fn split_basis(&self, b: usize) -> &[(Scalar, usize, usize)] {
        &self.splits[b]
    }

    pub fn counit_basis(&self, b: usize) -> &Scalar {
        self.counit.entry(0, b)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, xi) in support(x) {
            acc.add_assign_ref(&(xi * self.counit_basis(i)));
        }
        acc
    }

    pub fn basis(&self, i: usize) -> Vector {
        basis_vector(self.field, self.dim(), i)
    }

    pub fn auto_pow(&self, k: i32, x: &[Scalar]) -> Vector {
        let map = if k >= 0 { &self.auto } else { &self.auto_inv };
        (0..k.unsigned_abs()).fold(x.to_vec(), |acc, _| map.apply(&acc))
    }

    /// `(C⊗D, γ⊗δ)` with `Δ(c⊗d) = Σ (c₁⊗d₁)⊗(c₂⊗d₂)` and `ε(c⊗d) = ε(c)ε(d)`.
    pub fn tensor(&self, other: &HomCoalgebra) -> HomCoalgebra {
        let space = self.space.tensor(&other.space);
        let nb = other.dim();
        let n = self.dim() * nb;
        let comult = LinMap::from_fn(self.field, space.clone(), space.tensor(&space), |c| {
            let (i, j) = (c / nb, c % nb);
            let mut out = zero_vector(self.field, n * n);
            for (x, i1, i2) in self.split_basis(i) {
                for (y, j1, j2) in other.split_basis(j) {
                    let left = i1 * nb + j1;
                    let right = i2 * nb + j2;
                    out[left * n + right].add_assign_ref(&(x * y));
                }
            }
            out
        })
        .expect("tensor comultiplication shape");
        let counit = LinMap::from_fn(self.field, space.clone(), LabeledSpace::ground(), |c| {
            vec![self.counit_basis(c / nb) * other.counit_basis(c % nb)]
        })
        .expect("tensor counit shape");
        HomCoalgebra::new(self.auto.tensor(&other.auto), comult, counit)
            .expect("tensor of automorphisms is invertible")
    }
}

/// A monoidal Hom-Hopf algebra: algebra and coalgebra on the same space with the same
/// automorphism, plus an antipode.
#[derive(Clone, Debug)]
pub struct HomHopf {
    pub algebra: HomAlgebra,
    pub coalgebra: HomCoalgebra,
    pub antipode: LinMap,
}

impl HomHopf {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra, antipode: LinMap) -> Result<Self> {
        if algebra.space() != coalgebra.space() {
            return Err(Error::ShapeMismatch(
                "algebra and coalgebra live on different spaces".into(),
            ));
        }
        if algebra.alpha() != coalgebra.auto() {
            return Err(Error::ShapeMismatch(
                "algebra and coalgebra use different automorphisms".into(),
            ));
        }
        if antipode.domain() != algebra.space() || antipode.codomain() != algebra.space() {
            return Err(Error::ShapeMismatch(
                "antipode must be an endomorphism".into(),
            ));
        }
        Ok(Self {
            algebra,
            coalgebra,
            antipode,
        })
    }

    /// The ground field as a Hom-Hopf algebra.
    pub fn ground(field: Field) -> Self {
        let k = LabeledSpace::ground();
        Self::new(
            HomAlgebra::ground(field),
            HomCoalgebra::ground(field),
            LinMap::identity(field, &k),
        )
        .unwrap()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn space(&self) -> &LabeledSpace {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self) -> &LinMap {
        self.algebra.alpha()
    }

    pub fn alpha_pow(&self, k: i32, x: &[Scalar]) -> Vector {
        self.algebra.alpha_pow(k, x)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn split_basis(&self, b: usize) -> &[(Scalar, usize, usize)] {
        self.coalgebra.split_basis(b)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        self.coalgebra.eps(x)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x)
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        let mut nz = support(u);
        match (nz.next(), nz.next()) {
            (Some((i, c)), None) if c.is_one() => Some(i),
            _ => None,
        }
    }
}

pub fn check_hom_algebra(a: &HomAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new("hom_algebra");
    let s = a.space();
    report.check_tuples("hom_associativity", &[s, s, s], s, |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        (
            a.mul(&a.alpha().apply(&x), &a.mul(&y, &z)),
            a.mul(&a.mul(&x, &y), &a.alpha().apply(&z)),
        )
    });
    report.check_tuples("unit_right", &[s], s, |t| {
        let x = a.basis(t[0]);
        (a.mul(&x, a.unit()), a.alpha().apply(&x))
    });
    report.check_tuples("unit_left", &[s], s, |t| {
        let x = a.basis(t[0]);
        (a.mul(a.unit(), &x), a.alpha().apply(&x))
    });
    report.check_tuples("alpha_multiplicative", &[s, s], s, |t| {
        let (x, y) = (a.basis(t[0]), a.basis(t[1]));
        (
            a.alpha().apply(&a.mul(&x, &y)),
            a.mul(&a.alpha().apply(&x), &a.alpha().apply(&y)),
        )
    });
    report.check_tuples("alpha_unit", &[], s, |_| {
        (a.alpha().apply(a.unit()), a.unit().clone())
    });
    report
}

/// Checks the coalgebra axioms. The counit law is read with the coalgebra's own automorphism.
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> AxiomReport {
    let mut report = AxiomReport::new("hom_coalgebra");
    let s = c.space();
    let f = c.field();
    let lhs = c
        .auto_inv()
        .tensor(c.comult())
        .compose(c.comult())
        .expect("shapes");
    let rhs = c
        .comult()
        .tensor(c.auto_inv())
        .compose(c.comult())
        .expect("shapes");
    report.check_maps("hom_coassociativity", &lhs, &rhs, &[s]);
    report.check_tuples("counit_right", &[s], s, |t| {
        let mut out = zero_vector(f, c.dim());
        for (x, i, j) in c.split_basis(t[0]) {
            axpy(&mut out, &(x * c.counit_basis(*j)), &c.basis(*i));
        }
        (out, c.auto_inv().column(t[0]))
    });
    report.check_tuples("counit_left", &[s], s, |t| {
        let mut out = zero_vector(f, c.dim());
        for (x, i, j) in c.split_basis(t[0]) {
            axpy(&mut out, &(x * c.counit_basis(*i)), &c.basis(*j));
        }
        (out, c.auto_inv().column(t[0]))
    });
    let lhs = c.comult().compose(c.auto()).expect("shapes");
    let rhs = c.auto().tensor(c.auto()).compose(c.comult()).expect("shapes");
    report.check_maps("comult_auto", &lhs, &rhs, &[s]);
    let lhs = c.counit().compose(c.auto()).expect("shapes");
    report.check_maps("counit_auto", &lhs, c.counit(), &[s]);
    report
}

/// Compatibility of `Δ` and `ε` with the algebra structure.
pub fn check_hom_bialgebra(a: &HomAlgebra, c: &HomCoalgebra) -> Result<AxiomReport> {
    if a.space() != c.space() || a.alpha() != c.auto() {
        return Err(Error::ShapeMismatch(
            "algebra and coalgebra must share space and automorphism".into(),
        ));
    }
    let mut report = AxiomReport::new("hom_bialgebra");
    report.absorb(check_hom_algebra(a));
    report.absorb(check_hom_coalgebra(c));
    let s = a.space();
    let ss = s.tensor(s);
    let k = LabeledSpace::ground();
    let square = a.tensor(a);
    report.check_tuples("comult_multiplicative", &[s, s], &ss, |t| {
        let (x, y) = (a.basis(t[0]), a.basis(t[1]));
        (
            c.comult().apply(&a.mul(&x, &y)),
            square.mul(&c.comult().apply(&x), &c.comult().apply(&y)),
        )
    });
    report.check_tuples("comult_unit", &[], &ss, |_| {
        (
            c.comult().apply(a.unit()),
            tensor_vectors(a.unit(), a.unit()),
        )
    });
    report.check_tuples("counit_multiplicative", &[s, s], &k, |t| {
        let (x, y) = (a.basis(t[0]), a.basis(t[1]));
        (
            vec![c.eps(&a.mul(&x, &y))],
            vec![c.eps(&x) * c.eps(&y)],
        )
    });
    report.check_tuples("counit_unit", &[], &k, |_| {
        (vec![c.eps(a.unit())], vec![a.field().one()])
    });
    Ok(report)
}

pub fn check_hom_hopf(h: &HomHopf) -> AxiomReport {
    let mut report = check_hom_bialgebra(&h.algebra, &h.coalgebra).expect("validated on construction");
    report.structure = "hom_hopf".into();
    let s = h.space();
    let lhs = h.antipode.compose(h.alpha()).expect("shapes");
    let rhs = h.alpha().compose(&h.antipode).expect("shapes");
    report.check_maps("antipode_auto", &lhs, &rhs, &[s]);
    let unit_eps = convolution_unit(&h.coalgebra, &h.algebra);
    let id = LinMap::identity(h.field(), s);
    let left = convolve(&h.antipode, &id, &h.coalgebra, &h.algebra).expect("shapes");
    report.check_maps("antipode_left", &left, &unit_eps, &[s]);
    let right = convolve(&id, &h.antipode, &h.coalgebra, &h.algebra).expect("shapes");
    report.check_maps("antipode_right", &right, &unit_eps, &[s]);
    report
}

/// The antipode as a Hom-anti-algebra and Hom-anti-coalgebra morphism. Not part of
/// [`check_hom_hopf`]: it is a derived property, checked separately.
pub fn check_antipode_anti_morphism(h: &HomHopf) -> AxiomReport {
    let mut report = AxiomReport::new("antipode_anti_morphism");
    let s = h.space();
    let ss = s.tensor(s);
    let k = LabeledSpace::ground();
    let anti = |x: &[Scalar]| h.antipode_of(x);
    report.check_tuples("anti_multiplicative", &[s, s], s, |t| {
        let (x, y) = (h.basis(t[0]), h.basis(t[1]));
        (anti(&h.mul(&x, &y)), h.mul(&anti(&y), &anti(&x)))
    });
    report.check_tuples("anti_unit", &[], s, |_| (anti(h.unit()), h.unit().clone()));
    report.check_tuples("anti_comultiplicative", &[s], &ss, |t| {
        let lhs = h.coalgebra.comult().apply(&anti(&h.basis(t[0])));
        let mut rhs = zero_vector(h.field(), ss.dim());
        for (c, i, j) in h.split_basis(t[0]) {
            axpy(
                &mut rhs,
                c,
                &tensor_vectors(&anti(&h.basis(*j)), &anti(&h.basis(*i))),
            );
        }
        (lhs, rhs)
    });
    report.check_tuples("anti_counit", &[s], &k, |t| {
        let x = h.basis(t[0]);
        (vec![h.eps(&anti(&x))], vec![h.eps(&x)])
    });
    report
}

/// `(f∗g)(x) = Σ f(x₁)g(x₂)` for `f, g: C → A`.
pub fn convolve(f: &LinMap, g: &LinMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<LinMap> {
    for m in [f, g] {
        if m.domain() != c.space() || m.codomain() != a.space() {
            return Err(Error::ShapeMismatch(
                "convolution factors must map the coalgebra into the algebra".into(),
            ));
        }
    }
    let fc: Vec<Vector> = (0..c.dim()).map(|i| f.column(i)).collect();
    let gc: Vec<Vector> = (0..c.dim()).map(|i| g.column(i)).collect();
    LinMap::from_fn(a.field(), c.space().clone(), a.space().clone(), |x| {
        let mut out = a.zero();
        for (coef, i, j) in c.split_basis(x) {
            axpy(&mut out, coef, &a.mul(&fc[*i], &gc[*j]));
        }
        out
    })
}

/// `ηε: x ↦ ε(x)1_A`, the unit of convolution on automorphism-commuting maps.
pub fn convolution_unit(c: &HomCoalgebra, a: &HomAlgebra) -> LinMap {
    LinMap::from_fn(a.field(), c.space().clone(), a.space().clone(), |x| {
        crate::linalg::scale(c.counit_basis(x), a.unit())
    })
    .expect("unit map shape")
}

/// All linear maps `f: C → A` with `f∘γ = β∘f`.
#[derive(Clone, Debug)]
pub struct MorphismSpace {
    source: LabeledSpace,
    target: LabeledSpace,
    subspace: Subspace,
}

impl MorphismSpace {
    pub fn new(c: &HomCoalgebra, a: &HomAlgebra) -> Self {
        Self::between(c.space(), c.auto(), a.space(), a.alpha())
    }

    /// Maps `f: source → target` intertwining `source_auto` with `target_auto`.
    pub fn between(
        source: &LabeledSpace,
        source_auto: &LinMap,
        target: &LabeledSpace,
        target_auto: &LinMap,
    ) -> Self {
        let field = source_auto.field();
        let hom = source.hom_space(target);
        let (nc, na) = (source.dim(), target.dim());
        let residual = LinMap::from_fn(field, hom.clone(), hom.clone(), |idx| {
            let (r, col) = (idx / nc, idx % nc);
            let mut out = zero_vector(field, na * nc);
            // (E γ)[r][j] = γ[col][j]
            for j in 0..nc {
                out[r * nc + j].add_assign_ref(source_auto.entry(col, j));
            }
            // (β E)[i][col] = β[i][r]
            for i in 0..na {
                let b = target_auto.entry(i, r);
                if !b.is_zero() {
                    out[i * nc + col] = &out[i * nc + col] - b;
                }
            }
            out
        })
        .expect("residual shape");
        Self {
            source: source.clone(),
            target: target.clone(),
            subspace: residual.kernel(),
        }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn contains(&self, f: &LinMap) -> bool {
        self.subspace.contains(&map_to_vec(f))
    }

    /// Basis of the space as maps.
    pub fn basis_maps(&self) -> Vec<LinMap> {
        self.subspace
            .basis()
            .iter()
            .map(|v| vec_to_map(self.subspace.field(), &self.source, &self.target, v))
            .collect()
    }
}

/// Row-major vectorization of a map's matrix.
pub fn map_to_vec(f: &LinMap) -> Vector {
    let m = f.matrix();
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

pub fn vec_to_map(field: Field, domain: &LabeledSpace, codomain: &LabeledSpace, v: &[Scalar]) -> LinMap {
    let rows = (0..codomain.dim())
        .map(|r| v[r * domain.dim()..(r + 1) * domain.dim()].to_vec())
        .collect();
    let matrix = Matrix::from_rows(field, rows, domain.dim()).expect("vectorized shape");
    LinMap::new(field, domain.clone(), codomain.clone(), matrix).expect("vectorized shape")
}

/// Two-sided convolution inverse of `f`, searched inside the morphism space.
pub fn convolution_invert(f: &LinMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<LinMap> {
    if f.domain() != c.space() || f.codomain() != a.space() {
        return Err(Error::ShapeMismatch(
            "map must go from the coalgebra to the algebra".into(),
        ));
    }
    let field = a.field();
    let intertwines = f.compose(c.auto())? == a.alpha().compose(f)?;
    if !intertwines {
        return Err(Error::NotInMorphismSpace);
    }
    let space = MorphismSpace::new(c, a);
    let basis = space.basis_maps();
    let unit = map_to_vec(&convolution_unit(c, a));
    let hom_dim = unit.len();
    let mut columns = Vec::with_capacity(basis.len());
    for g in &basis {
        let mut col = map_to_vec(&convolve(f, g, c, a)?);
        col.extend(map_to_vec(&convolve(g, f, c, a)?));
        columns.push(col);
    }
    let unknowns = LabeledSpace::from_unique((0..basis.len()).map(|i| format!("g{i}")).collect());
    let equations =
        LabeledSpace::from_unique((0..2 * hom_dim).map(|i| format!("eq{i}")).collect());
    let system = LinMap::from_columns(field, unknowns, equations, &columns)?;
    let mut target = unit.clone();
    target.extend(unit);
    let coeffs = system.solve(&target).map_err(|e| match e {
        Error::NoSolution => Error::NotInvertible,
        other => other,
    })?;
    let mut inv = LinMap::zero(field, c.space(), a.space());
    for (coef, g) in coeffs.iter().zip(&basis) {
        if !coef.is_zero() {
            inv = inv.add(&g.scale(coef))?;
        }
    }
    Ok(inv)
}

/// The antipode of a Hom-bialgebra, i.e. the convolution inverse of the identity.
pub fn compute_antipode(a: &HomAlgebra, c: &HomCoalgebra) -> Result<LinMap> {
    if a.space() != c.space() || a.alpha() != c.auto() {
        return Err(Error::ShapeMismatch(
            "algebra and coalgebra must share space and automorphism".into(),
        ));
    }
    let id = LinMap::identity(a.field(), a.space());
    let s = convolution_invert(&id, c, a).map_err(|e| match e {
        Error::NotInvertible => Error::NoAntipode,
        other => other,
    })?;
    debug_assert_eq!(s.compose(a.alpha())?, a.alpha().compose(&s)?);
    Ok(s)
}
