//! Named fixtures: Hom-group algebras, group extensions `N ⊴ G` with their crossed systems and
//! cleft data, and crossed systems with a single entry altered.

use crate::cleft::{group_crossed_system, section_cleft, CleftData};
use crate::crossed::{CrossedSystem, WeakAction};
use crate::error::{Error, Result};
use crate::homgroup::{find_equivariant_section, hom_group_algebra, normal_quotient, EquivariantSection, HomGroup};
use crate::homstruct::HomHopf;
use crate::linalg::{Field, LabeledSpace, LinMap, Vector};

/// Groups with the automorphisms used for the axiom suite.
pub const CATALOG: &[(&str, &[&str])] = &[
    ("Z2", &["id"]),
    ("Z3", &["id", "inv"]),
    ("Z4", &["id", "inv"]),
    ("Z6", &["id", "inv", "pow:5"]),
    ("S3", &["id", "conj:(12)", "conj:(123)"]),
    ("D4", &["id", "conj:s", "conj:r"]),
];

/// `(G, N, α)` triples with an equivariant section.
pub const EXTENSIONS: &[(&str, &str, &str)] = &[
    ("S3", "A3", "id"),
    ("S3", "A3", "conj:(12)"),
    ("Z4", "{0,2}", "id"),
    ("Z6", "{0,3}", "inv"),
    ("Z6", "{0,2,4}", "inv"),
    ("D4", "Z(G)", "id"),
    ("D4", "<r2,s>", "conj:r"),
    ("D4", "<r>", "conj:s"),
    ("D6", "<r2,s>", "id"),
    ("S3", "1", "id"),
    ("Z2", "1", "id"),
    ("Z3", "1", "id"),
];

pub fn hom_group_hopf(group: &str, auto: &str, field: Field) -> Result<HomHopf> {
    hom_group_algebra(&HomGroup::from_names(group, auto)?, field)
}

pub fn section(group: &str, sub: &str, auto: &str) -> Result<EquivariantSection> {
    let hg = HomGroup::from_names(group, auto)?;
    let subset = hg.group().parse_subgroup(sub)?;
    find_equivariant_section(&normal_quotient(&hg, &subset)?)
}

pub fn extension_system(group: &str, sub: &str, auto: &str, field: Field) -> Result<CrossedSystem> {
    group_crossed_system(&section(group, sub, auto)?, field)
}

pub fn extension_cleft(group: &str, sub: &str, auto: &str, field: Field) -> Result<CleftData> {
    section_cleft(&section(group, sub, auto)?, field)
}

/// One altered entry of a crossed system. Values are lists of `(coefficient, basis label)`.
#[derive(Clone, Copy, Debug)]
pub enum Mutation {
    /// Replace `σ(h, k)`.
    Sigma(&'static str, &'static str, &'static [(i64, &'static str)]),
    /// Replace `h·a`.
    Action(&'static str, &'static str, &'static [(i64, &'static str)]),
    /// Let the first basis element of `H` act as the second does.
    ActLike(&'static str, &'static str),
}

/// Which condition a mutant is aimed at, the base extension and the change.
pub const MUTANTS: &[(&str, (&str, &str, &str), Mutation)] = &[
    ("normalization", ("D6", "<r2,s>", "id"), Mutation::Sigma("[e]", "[r]", &[(2, "e")])),
    ("normalization", ("S3", "A3", "conj:(12)"), Mutation::Sigma("[(23)]", "[e]", &[(1, "(123)")])),
    ("sigma_morphism", ("S3", "A3", "conj:(12)"), Mutation::Sigma("[(23)]", "[(23)]", &[(1, "(123)")])),
    ("twisted_module", ("D6", "<r2,s>", "id"), Mutation::ActLike("[r]", "[e]")),
    ("twisted_module", ("D6", "<r2,s>", "id"), Mutation::Sigma("[r]", "[r]", &[(1, "e")])),
    ("cocycle", ("S3", "1", "id"), Mutation::Sigma("[(12)]", "[(13)]", &[(2, "e")])),
    ("cocycle", ("D6", "<r2,s>", "id"), Mutation::Sigma("[r]", "[r]", &[(1, "s")])),
    ("unit_action", ("D6", "<r2,s>", "id"), Mutation::ActLike("[e]", "[r]")),
    ("unit_action", ("S3", "A3", "conj:(12)"), Mutation::ActLike("[e]", "[(23)]")),
    ("unit_action", ("Z4", "{0,2}", "id"), Mutation::Action("[0]", "2", &[(1, "0"), (1, "2")])),
];

fn combination(field: Field, space: &LabeledSpace, value: &[(i64, &str)]) -> Result<Vector> {
    let mut v = vec![field.zero(); space.dim()];
    for (c, label) in value {
        let i = space
            .index_of(label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))?;
        v[i] = &v[i] + &field.from_i64(*c);
    }
    Ok(v)
}

fn replace_column(m: &LinMap, col: usize, v: Vector) -> Result<LinMap> {
    let mut cols: Vec<Vector> = (0..m.domain().dim()).map(|i| m.column(i)).collect();
    cols[col] = v;
    LinMap::from_columns(m.field(), m.domain().clone(), m.codomain().clone(), &cols)
}

fn index(space: &LabeledSpace, label: &str) -> Result<usize> {
    space
        .index_of(label)
        .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))
}

pub fn mutate(s: &CrossedSystem, m: Mutation) -> Result<CrossedSystem> {
    let (a, h) = (s.a(), s.h());
    let field = a.field();
    match m {
        Mutation::Sigma(x, y, value) => {
            let col = index(h.space(), x)? * h.dim() + index(h.space(), y)?;
            let sigma = replace_column(&s.sigma, col, combination(field, a.space(), value)?)?;
            CrossedSystem::new(s.action.clone(), sigma)
        }
        Mutation::Action(x, y, value) => {
            let col = index(h.space(), x)? * a.dim() + index(a.space(), y)?;
            let act = replace_column(&s.action.act, col, combination(field, a.space(), value)?)?;
            CrossedSystem::new(WeakAction::new(h.clone(), a.clone(), act)?, s.sigma.clone())
        }
        Mutation::ActLike(x, y) => {
            let (x, y) = (index(h.space(), x)?, index(h.space(), y)?);
            let mut act = s.action.act.clone();
            for i in 0..a.dim() {
                act = replace_column(&act, x * a.dim() + i, s.action.act.column(y * a.dim() + i))?;
            }
            CrossedSystem::new(WeakAction::new(h.clone(), a.clone(), act)?, s.sigma.clone())
        }
    }
}

/// Every extension system followed by every mutant, labelled.
pub fn crossed_corpus(field: Field) -> Result<Vec<(String, CrossedSystem)>> {
    let mut out = Vec::new();
    for &(g, n, auto) in EXTENSIONS {
        out.push((format!("{g}/{n} {auto}"), extension_system(g, n, auto, field)?));
    }
    for &(target, (g, n, auto), m) in MUTANTS {
        let base = extension_system(g, n, auto, field)?;
        out.push((format!("{g}/{n} {auto} broken {target}"), mutate(&base, m)?));
    }
    Ok(out)
}
