use homhopf::corpus::{extension_system, hom_group_hopf, CATALOG};
use homhopf::crossed::{check_conditions, crossed_associativity_oracle, CrossedSystem};
use homhopf::homstruct::{
    check_antipode_anti_morphism, check_hom_hopf, convolution_unit, convolve, MorphismSpace,
};
use homhopf::linalg::{Field, LabeledSpace, LinMap, Matrix, Scalar};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(7).unwrap()),
    ]
}

fn space(prefix: &str, n: usize) -> LabeledSpace {
    LabeledSpace::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn map_from(field: Field, rows: usize, cols: usize, entries: &[i64]) -> LinMap {
    let rows_v = (0..rows)
        .map(|r| (0..cols).map(|c| field.from_i64(entries[r * cols + c])).collect())
        .collect();
    LinMap::new(
        field,
        space("x", cols),
        space("y", rows),
        Matrix::from_rows(field, rows_v, cols).unwrap(),
    )
    .unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (field_strategy(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| {
        (Just(f), Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity((f, r, c, e) in matrix_strategy()) {
        let m = map_from(f, r, c, &e);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), c);
        prop_assert_eq!(m.image().dim(), m.rank());
        for v in k.basis() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_recovers_image_points((f, r, c, e) in matrix_strategy(), x in prop::collection::vec(-4i64..=4, 4)) {
        let m = map_from(f, r, c, &e);
        let x: Vec<Scalar> = x[..c].iter().map(|&v| f.from_i64(v)).collect();
        let y = m.apply(&x);
        let sol = m.solve(&y).unwrap();
        prop_assert_eq!(m.apply(&sol), y);
    }

    #[test]
    fn inverse_is_two_sided((f, n, e) in (field_strategy(), 1usize..5).prop_flat_map(|(f, n)| (Just(f), Just(n), prop::collection::vec(-3i64..=3, n * n)))) {
        let m = map_from(f, n, n, &e).relabel(&space("x", n), &space("x", n)).unwrap();
        match m.invert() {
            Ok(inv) => {
                prop_assert_eq!(m.rank(), n);
                prop_assert_eq!(inv.compose(&m).unwrap(), LinMap::identity(f, m.domain()));
                prop_assert_eq!(m.compose(&inv).unwrap(), LinMap::identity(f, m.domain()));
            }
            Err(_) => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn tensor_respects_composition(
        (f, a) in (field_strategy(), prop::collection::vec(-2i64..=2, 4)),
        b in prop::collection::vec(-2i64..=2, 6),
        c in prop::collection::vec(-2i64..=2, 9),
        d in prop::collection::vec(-2i64..=2, 6),
    ) {
        let a = map_from(f, 2, 2, &a);
        let b = map_from(f, 3, 2, &b).relabel(&space("y", 2), &space("z", 3)).unwrap();
        let c = map_from(f, 3, 3, &c).relabel(&space("u", 3), &space("v", 3)).unwrap();
        let d = map_from(f, 2, 3, &d).relabel(&space("v", 3), &space("w", 2)).unwrap();
        let lhs = b.compose(&a).unwrap().tensor(&d.compose(&c).unwrap());
        let rhs = b.tensor(&d).compose(&a.tensor(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn catalog_hopf(idx: usize, field: Field) -> homhopf::homstruct::HomHopf {
    let pairs: Vec<(&str, &str)> = CATALOG
        .iter()
        .flat_map(|(g, autos)| autos.iter().map(move |a| (*g, *a)))
        .collect();
    let (g, a) = pairs[idx % pairs.len()];
    hom_group_hopf(g, a, field).unwrap()
}

fn morphism_combination(ms: &MorphismSpace, coeffs: &[i64], field: Field) -> LinMap {
    let basis = ms.basis_maps();
    let mut out = basis[0].scale(&field.zero());
    for (m, &c) in basis.iter().zip(coeffs.iter().cycle()) {
        out = out.add(&m.scale(&field.from_i64(c))).unwrap();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn catalog_algebras_are_hom_hopf(idx in 0usize..64, f in field_strategy()) {
        let h = catalog_hopf(idx, f);
        let r = check_hom_hopf(&h);
        prop_assert!(r.passed(), "{}", r);
        let anti = check_antipode_anti_morphism(&h);
        prop_assert!(anti.passed(), "{}", anti);
    }

    #[test]
    fn convolution_unit_and_associativity(
        idx in 0usize..8,
        f in prop::collection::vec(-2i64..=2, 1..8),
        g in prop::collection::vec(-2i64..=2, 1..8),
        k in prop::collection::vec(-2i64..=2, 1..8),
    ) {
        // maps H → H commuting with α, on the smaller catalog entries
        let h = catalog_hopf(idx, Field::Rational);
        let field = h.field();
        let ms = MorphismSpace::new(&h.coalgebra, &h.algebra);
        let (f, g, k) = (
            morphism_combination(&ms, &f, field),
            morphism_combination(&ms, &g, field),
            morphism_combination(&ms, &k, field),
        );
        let unit = convolution_unit(&h.coalgebra, &h.algebra);
        let conv = |x: &LinMap, y: &LinMap| convolve(x, y, &h.coalgebra, &h.algebra).unwrap();
        prop_assert_eq!(conv(&f, &unit), f.clone());
        prop_assert_eq!(conv(&unit, &f), f.clone());
        let fg = conv(&f, &g);
        prop_assert!(ms.contains(&fg));
        prop_assert_eq!(conv(&fg, &k), conv(&f, &conv(&g, &k)));
    }
}

fn perturbed(base: &CrossedSystem, col: usize, coeffs: &[i64]) -> CrossedSystem {
    let field = base.a().field();
    let n = base.sigma.domain().dim();
    let mut cols: Vec<_> = (0..n).map(|i| base.sigma.column(i)).collect();
    let col = col % n;
    for (x, &c) in cols[col].iter_mut().zip(coeffs.iter().cycle()) {
        *x = &*x + &field.from_i64(c);
    }
    let sigma = LinMap::from_columns(field, base.sigma.domain().clone(), base.sigma.codomain().clone(), &cols)
        .unwrap();
    CrossedSystem::new(base.action.clone(), sigma).unwrap()
}

const PERTURBED: &[(&str, &str, &str)] = &[
    ("S3", "A3", "conj:(12)"),
    ("D6", "<r2,s>", "id"),
    ("Z4", "{0,2}", "id"),
    ("D4", "<r>", "conj:s"),
    ("Z6", "{0,3}", "inv"),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conditions_agree_with_associativity_under_cocycle_noise(
        which in 0usize..PERTURBED.len(),
        col in 0usize..64,
        coeffs in prop::collection::vec(-1i64..=1, 1..6),
    ) {
        let (g, n, a) = PERTURBED[which];
        let base = extension_system(g, n, a, Field::Rational).unwrap();
        let s = perturbed(&base, col, &coeffs);
        let cond = check_conditions(&s).passed();
        let oracle = crossed_associativity_oracle(&s).passed();
        prop_assert_eq!(cond, oracle, "{}/{} {} column {}", g, n, a, col);
    }
}
