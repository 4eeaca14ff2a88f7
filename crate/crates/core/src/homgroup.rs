//! Finite groups given by tables, Hom-groups `(G, α)` with product `g·h = α(gh)`, their
//! Hom-group algebras, normal quotients, equivariant coset sections and the coset action and
//! cocycle built from a section.

use std::fmt;

use crate::error::{Error, Result};
use crate::homstruct::{HomAlgebra, HomCoalgebra, HomHopf};
use crate::linalg::{basis_vector, Field, LabeledSpace, LinMap};

/// A finite group as a multiplication table over labeled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    parity: Option<Vec<bool>>,
}

impl FiniteGroup {
    /// Validates the group axioms on `table`, where `table[i][j]` is the index of `gᵢgⱼ`.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        LabeledSpace::new(labels.iter().cloned())
            .map_err(|_| Error::InvalidGroup("duplicate element labels".into()))?;
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}×{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            labels,
            table,
            inverse,
            identity,
            parity: None,
        })
    }

    /// `Z/n` with elements `0..n-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("Z0 is not finite".into()));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::new(format!("Z{n}"), labels, table)
    }

    /// The dihedral group of order `2n`; `r^k s^j` has index `k + n·j` and label `rk s`-style
    /// (`e`, `r`, `r2`, …, `s`, `rs`, `r2s`, …).
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("D0 is not defined".into()));
        }
        let label = |k: usize, j: usize| {
            let r = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r{k}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (_, 0) => r,
                _ => format!("{r}s"),
            }
        };
        let labels = (0..2 * n).map(|i| label(i % n, i / n)).collect();
        let table = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (a, b, c, d) = (x % n, x / n, y % n, y / n);
                        let k = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                        k + n * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::new(format!("D{n}"), labels, table)
    }

    /// The symmetric group on `n ≤ 5` points, elements in lexicographic order of their one-line
    /// notation and labeled in cycle notation (`e`, `(12)`, `(123)`, …). Products compose right
    /// to left.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidGroup(format!("S{n} is outside the catalog")));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&q.iter().map(|&x| p[x]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        let mut g = Self::new(format!("S{n}"), labels, table)?;
        g.parity = Some(perms.iter().map(|p| is_even(p)).collect());
        Ok(g)
    }

    /// Catalog lookup: `1`, `Z<n>`, `D<n>`, `S<n>`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if name == "1" {
            let mut g = Self::cyclic(1)?;
            g.name = "1".into();
            return Ok(g);
        }
        let (kind, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("unknown group {name:?}")))?;
        match kind {
            "Z" => Self::cyclic(n),
            "D" => Self::dihedral(n),
            "S" => Self::symmetric(n),
            _ => Err(Error::Parse(format!("unknown group {name:?}"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Subgroup generated by `gens`, as sorted indices.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    fn is_subgroup(&self, subset: &[usize]) -> bool {
        subset.contains(&self.identity)
            && subset
                .iter()
                .all(|&a| subset.iter().all(|&b| subset.contains(&self.mul(a, self.inv(b)))))
    }

    /// Parses `1`, `{a,b,…}`, `<g,h,…>`, `Z(G)` or `A<n>` (in `S<n>`) into sorted indices.
    pub fn parse_subgroup(&self, desc: &str) -> Result<Vec<usize>> {
        let desc = desc.trim();
        let lookup = |items: &str| -> Result<Vec<usize>> {
            split_top_level(items)
                .into_iter()
                .filter(|s| !s.is_empty())
                .map(|s| {
                    self.index_of(s)
                        .ok_or_else(|| Error::Parse(format!("{s:?} is not an element of {}", self.name)))
                })
                .collect()
        };
        let mut subset = if desc == "1" {
            vec![self.identity]
        } else if desc == "Z(G)" {
            self.center()
        } else if let Some(inner) = desc.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
            self.generated(&lookup(inner)?)
        } else if let Some(inner) = desc.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            lookup(inner)?
        } else if desc.starts_with('A') && desc[1..].parse::<usize>().is_ok() {
            let parity = self
                .parity
                .as_ref()
                .filter(|_| desc[1..] == self.name[1..])
                .ok_or_else(|| Error::Parse(format!("{desc} is not defined in {}", self.name)))?;
            (0..self.order()).filter(|&g| parity[g]).collect()
        } else {
            return Err(Error::Parse(format!("cannot read subgroup {desc:?}")));
        };
        subset.sort_unstable();
        subset.dedup();
        if !self.is_subgroup(&subset) {
            return Err(Error::NotSubgroup(self.format_subset(&subset)));
        }
        Ok(subset)
    }

    pub fn format_subset(&self, subset: &[usize]) -> String {
        let items: Vec<&str> = subset.iter().map(|&g| self.label(g)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Parses `id` (or `trivial`), `inv`, `pow:<k>` or `conj:<label>` into a permutation of the
    /// element indices.
    pub fn parse_automorphism(&self, desc: &str) -> Result<Vec<usize>> {
        let desc = desc.trim();
        let n = self.order();
        let perm: Vec<usize> = if desc == "id" || desc == "trivial" {
            (0..n).collect()
        } else if desc == "inv" {
            (0..n).map(|g| self.inv(g)).collect()
        } else if let Some(k) = desc.strip_prefix("pow:") {
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {desc:?}")))?;
            (0..n).map(|g| self.pow(g, k)).collect()
        } else if let Some(x) = desc.strip_prefix("conj:") {
            let x = self
                .index_of(x)
                .ok_or_else(|| Error::Parse(format!("{x:?} is not an element of {}", self.name)))?;
            (0..n)
                .map(|g| self.mul(self.mul(x, g), self.inv(x)))
                .collect()
        } else {
            return Err(Error::Parse(format!("unknown automorphism {desc:?}")));
        };
        self.check_automorphism(&perm)?;
        Ok(perm)
    }

    pub fn check_automorphism(&self, perm: &[usize]) -> Result<()> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "permutation has length {} for a group of order {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidAutomorphism("not a bijection".into()));
            }
        }
        for g in 0..n {
            for h in 0..n {
                if perm[self.mul(g, h)] != self.mul(perm[g], perm[h]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "not multiplicative at ({}, {})",
                        self.label(g),
                        self.label(h)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    // Labels such as "(12)(34)" never contain commas, so a plain split suffices.
    s.split(',').map(str::trim).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// A Hom-group `(G, α)` with product `g·h = α(gh)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    group: FiniteGroup,
    auto: Vec<usize>,
    auto_inv: Vec<usize>,
}

impl HomGroup {
    pub fn new(group: FiniteGroup, auto: Vec<usize>) -> Result<Self> {
        group.check_automorphism(&auto)?;
        let mut auto_inv = vec![0; auto.len()];
        for (g, &a) in auto.iter().enumerate() {
            auto_inv[a] = g;
        }
        let hg = Self {
            group,
            auto,
            auto_inv,
        };
        let n = hg.order();
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let lhs = hg.hom_mul(hg.alpha(g), hg.hom_mul(h, k));
                    let rhs = hg.hom_mul(hg.hom_mul(g, h), hg.alpha(k));
                    if lhs != rhs {
                        return Err(Error::InvalidAutomorphism(format!(
                            "Hom-associativity fails at ({}, {}, {})",
                            hg.group.label(g),
                            hg.group.label(h),
                            hg.group.label(k)
                        )));
                    }
                }
            }
        }
        Ok(hg)
    }

    /// Catalog group with a named automorphism, e.g. `("S3", "conj:(12)")`.
    pub fn from_names(group: &str, auto: &str) -> Result<Self> {
        let g = FiniteGroup::from_name(group)?;
        let a = g.parse_automorphism(auto)?;
        Self::new(g, a)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn auto(&self) -> &[usize] {
        &self.auto
    }

    pub fn alpha(&self, g: usize) -> usize {
        self.auto[g]
    }

    pub fn alpha_inv(&self, g: usize) -> usize {
        self.auto_inv[g]
    }

    pub fn alpha_pow(&self, k: i32, g: usize) -> usize {
        let step = |x: usize| if k >= 0 { self.alpha(x) } else { self.alpha_inv(x) };
        (0..k.unsigned_abs()).fold(g, |x, _| step(x))
    }

    /// `g·h = α(gh)`.
    pub fn hom_mul(&self, g: usize, h: usize) -> usize {
        self.auto[self.group.mul(g, h)]
    }

    pub fn space(&self) -> LabeledSpace {
        LabeledSpace::new(self.group.labels().iter().cloned()).expect("labels are unique")
    }
}

impl fmt::Display for HomGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with α = ", self.group.name())?;
        let moved: Vec<String> = (0..self.order())
            .filter(|&g| self.alpha(g) != g)
            .map(|g| format!("{}↦{}", self.group.label(g), self.group.label(self.alpha(g))))
            .collect();
        if moved.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "[{}]", moved.join(", "))
        }
    }
}

/// The Hom-group algebra `kG`: product `g·h = α(gh)`, unit `e`, `Δ(g) = α⁻¹(g)⊗α⁻¹(g)`,
/// `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn hom_group_algebra(hg: &HomGroup, field: Field) -> Result<HomHopf> {
    let g = hg.group();
    let n = hg.order();
    let space = hg.space();
    let alpha = LinMap::permutation(field, &space, &space, hg.auto())?;
    let mult = LinMap::from_fn(field, space.tensor(&space), space.clone(), |c| {
        basis_vector(field, n, hg.hom_mul(c / n, c % n))
    })?;
    let algebra = HomAlgebra::new(alpha.clone(), mult, basis_vector(field, n, g.identity()))?;
    let comult = LinMap::from_fn(field, space.clone(), space.tensor(&space), |x| {
        let y = hg.alpha_inv(x);
        basis_vector(field, n * n, y * n + y)
    })?;
    let counit = LinMap::from_fn(field, space.clone(), LabeledSpace::ground(), |_| {
        vec![field.one()]
    })?;
    let coalgebra = HomCoalgebra::new(alpha, comult, counit)?;
    let inverses: Vec<usize> = (0..n).map(|x| g.inv(x)).collect();
    let antipode = LinMap::permutation(field, &space, &space, &inverses)?;
    HomHopf::new(algebra, coalgebra, antipode)
}

/// A normal, α-stable subgroup `N ⊴ G` with the induced Hom-groups on `N` and `G/N`.
#[derive(Clone, Debug)]
pub struct NormalQuotient {
    parent: HomGroup,
    members: Vec<usize>,
    sub: HomGroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    quotient: HomGroup,
}

impl NormalQuotient {
    pub fn parent(&self) -> &HomGroup {
        &self.parent
    }

    /// Indices in `G` of the elements of `N`; element `i` of [`NormalQuotient::sub`] is
    /// `members()[i]`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn sub(&self) -> &HomGroup {
        &self.sub
    }

    /// Cosets ordered by their smallest element; each sorted.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn quotient(&self) -> &HomGroup {
        &self.quotient
    }

    /// Index in `N` of a parent element, if it lies in `N`.
    pub fn sub_index(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn describe_coset(&self, c: usize) -> String {
        format!(
            "{}={}",
            self.quotient.group().label(c),
            self.parent.group().format_subset(&self.cosets[c])
        )
    }
}

/// Builds `N` and `G/N` as Hom-groups with the restricted and induced automorphisms.
pub fn normal_quotient(hg: &HomGroup, subset: &[usize]) -> Result<NormalQuotient> {
    let g = hg.group();
    let mut members = subset.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.iter().any(|&x| x >= g.order()) || !g.is_subgroup(&members) {
        return Err(Error::NotSubgroup(g.format_subset(&members)));
    }
    for x in 0..g.order() {
        for &m in &members {
            let c = g.mul(g.mul(x, m), g.inv(x));
            if members.binary_search(&c).is_err() {
                return Err(Error::NotNormal(format!(
                    "{}·{}·{}⁻¹ = {} is outside {}",
                    g.label(x),
                    g.label(m),
                    g.label(x),
                    g.label(c),
                    g.format_subset(&members)
                )));
            }
        }
    }
    if let Some(&m) = members
        .iter()
        .find(|&&m| members.binary_search(&hg.alpha(m)).is_err())
    {
        return Err(Error::NotAlphaStable(format!(
            "α({}) = {} is outside {}",
            g.label(m),
            g.label(hg.alpha(m)),
            g.format_subset(&members)
        )));
    }

    let sub_labels: Vec<String> = members.iter().map(|&m| g.label(m).to_string()).collect();
    let local = |x: usize| members.binary_search(&x).expect("closed");
    let sub_table = members
        .iter()
        .map(|&a| members.iter().map(|&b| local(g.mul(a, b))).collect())
        .collect();
    let sub_group = FiniteGroup::new(
        g.format_subset(&members),
        sub_labels,
        sub_table,
    )?;
    let sub_auto = members.iter().map(|&m| local(hg.alpha(m))).collect();
    let sub = HomGroup::new(sub_group, sub_auto)?;

    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = members.iter().map(|&m| g.mul(x, m)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_of[y] = cosets.len();
        }
        cosets.push(coset);
    }
    let q_labels = cosets
        .iter()
        .map(|c| format!("[{}]", g.label(c[0])))
        .collect();
    let q_table = cosets
        .iter()
        .map(|a| cosets.iter().map(|b| coset_of[g.mul(a[0], b[0])]).collect())
        .collect();
    let q_group = FiniteGroup::new(
        format!("{}/{}", g.name(), g.format_subset(&members)),
        q_labels,
        q_table,
    )?;
    let q_auto = cosets.iter().map(|c| coset_of[hg.alpha(c[0])]).collect();
    let quotient = HomGroup::new(q_group, q_auto)?;
    Ok(NormalQuotient {
        parent: hg.clone(),
        members,
        sub,
        cosets,
        coset_of,
        quotient,
    })
}

/// A coset section `γ: G/N → G` with `α∘γ = γ∘ᾱ` and `γ(1̄) = 1`.
#[derive(Clone, Debug)]
pub struct EquivariantSection {
    quotient: NormalQuotient,
    reps: Vec<usize>,
}

impl EquivariantSection {
    /// Validates explicit representatives, one per coset in coset order.
    pub fn with_representatives(quotient: NormalQuotient, reps: Vec<usize>) -> Result<Self> {
        let parent = quotient.parent();
        let g = parent.group();
        if reps.len() != quotient.cosets().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} representatives for {} cosets",
                reps.len(),
                quotient.cosets().len()
            )));
        }
        let unit_coset = quotient.coset_of(g.identity());
        if reps[unit_coset] != g.identity() {
            return Err(Error::NoSection {
                searched: vec![format!("representative of the unit coset must be {}", g.label(g.identity()))],
            });
        }
        for (c, &r) in reps.iter().enumerate() {
            if r >= g.order() || quotient.coset_of(r) != c {
                return Err(Error::NoSection {
                    searched: vec![format!("representative outside {}", quotient.describe_coset(c))],
                });
            }
            let image = quotient.quotient().alpha(c);
            if parent.alpha(r) != reps[image] {
                return Err(Error::NoSection {
                    searched: vec![format!(
                        "α({}) ≠ γ(ᾱ({}))",
                        g.label(r),
                        quotient.quotient().group().label(c)
                    )],
                });
            }
        }
        Ok(Self { quotient, reps })
    }

    pub fn quotient(&self) -> &NormalQuotient {
        &self.quotient
    }

    /// Representative of coset `c`, as a parent element index.
    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }
}

/// Searches the ᾱ-orbits of cosets in order, taking for each orbit leader the smallest element
/// `g` with `α^ℓ(g) = g` (ℓ the orbit length) and propagating `γ(ᾱⁱ(leader)) = αⁱ(g)`. This
/// yields the lexicographically first equivariant section.
pub fn find_equivariant_section(quotient: &NormalQuotient) -> Result<EquivariantSection> {
    let parent = quotient.parent();
    let qg = quotient.quotient();
    let ncos = quotient.cosets().len();
    let mut reps = vec![usize::MAX; ncos];
    let unit_coset = quotient.coset_of(parent.group().identity());
    reps[unit_coset] = parent.group().identity();
    let mut searched = Vec::new();
    for leader in 0..ncos {
        if reps[leader] != usize::MAX {
            continue;
        }
        let mut orbit = vec![leader];
        let mut c = qg.alpha(leader);
        while c != leader {
            orbit.push(c);
            c = qg.alpha(c);
        }
        let len = orbit.len() as i32;
        searched.extend(orbit.iter().map(|&c| quotient.describe_coset(c)));
        let Some(&g) = quotient.cosets()[leader]
            .iter()
            .find(|&&g| parent.alpha_pow(len, g) == g)
        else {
            return Err(Error::NoSection { searched });
        };
        for (i, &c) in orbit.iter().enumerate() {
            reps[c] = parent.alpha_pow(i as i32, g);
        }
    }
    EquivariantSection::with_representatives(quotient.clone(), reps)
}

/// `x̄ ▷ m = [γ(ᾱ⁻¹x̄)·α⁻¹(m)]·γ(x̄)⁻¹` with Hom-group products and ordinary group inverses,
/// as a map `k[G/N]⊗kN → kN`.
pub fn coset_weak_action(sec: &EquivariantSection, field: Field) -> Result<LinMap> {
    let q = sec.quotient();
    let parent = q.parent();
    let g = parent.group();
    let qh = q.quotient();
    let nspace = q.sub().space();
    let domain = qh.space().tensor(&nspace);
    let nn = q.members().len();
    LinMap::try_from_fn(field, domain, nspace, |idx| {
        let (x, mi) = (idx / nn, idx % nn);
        let m = q.members()[mi];
        let left = parent.hom_mul(sec.rep(qh.alpha_inv(x)), parent.alpha_inv(m));
        let value = parent.hom_mul(left, g.inv(sec.rep(x)));
        let local = q.sub_index(value).ok_or_else(|| {
            Error::ActionLeavesN(format!(
                "{} ▷ {} = {}",
                qh.group().label(x),
                g.label(m),
                g.label(value)
            ))
        })?;
        Ok(basis_vector(field, nn, local))
    })
}

/// `σ(x̄, ȳ) = [γ(ᾱ⁻¹x̄)·γ(ᾱ⁻¹ȳ)]·γ(ᾱ⁻¹x̄·ᾱ⁻¹ȳ)⁻¹` as a map `k[G/N]⊗k[G/N] → kN`.
pub fn coset_cocycle(sec: &EquivariantSection, field: Field) -> Result<LinMap> {
    let q = sec.quotient();
    let parent = q.parent();
    let g = parent.group();
    let qh = q.quotient();
    let qspace = qh.space();
    let nspace = q.sub().space();
    let nq = qspace.dim();
    let nn = nspace.dim();
    LinMap::try_from_fn(field, qspace.tensor(&qspace), nspace, |idx| {
        let (x, y) = (qh.alpha_inv(idx / nq), qh.alpha_inv(idx % nq));
        let left = parent.hom_mul(sec.rep(x), sec.rep(y));
        let value = parent.hom_mul(left, g.inv(sec.rep(qh.hom_mul(x, y))));
        let local = q.sub_index(value).ok_or_else(|| {
            Error::CocycleLeavesN(format!(
                "σ({}, {}) = {}",
                qh.group().label(idx / nq),
                qh.group().label(idx % nq),
                g.label(value)
            ))
        })?;
        Ok(basis_vector(field, nn, local))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homstruct::check_hom_hopf;

    #[test]
    fn catalog_orders_and_labels() {
        assert_eq!(FiniteGroup::from_name("S3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::from_name("S4").unwrap().order(), 24);
        let d4 = FiniteGroup::from_name("D4").unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.labels()[..], ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.labels()[..], ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
    }

    #[test]
    fn dihedral_relation() {
        let d = FiniteGroup::dihedral(5).unwrap();
        let (r, s) = (d.index_of("r").unwrap(), d.index_of("s").unwrap());
        // s r s⁻¹ = r⁻¹
        assert_eq!(d.mul(d.mul(s, r), d.inv(s)), d.inv(r));
    }

    #[test]
    fn inversion_rejected_on_nonabelian() {
        let s3 = FiniteGroup::from_name("S3").unwrap();
        assert!(matches!(
            s3.parse_automorphism("inv"),
            Err(Error::InvalidAutomorphism(_))
        ));
    }

    #[test]
    fn trivial_group_algebra_is_ground_field() {
        let h = hom_group_algebra(&HomGroup::from_names("1", "id").unwrap(), Field::Rational).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(check_hom_hopf(&h).passed());
    }

    #[test]
    fn s3_conj_quotient_by_a3() {
        let hg = HomGroup::from_names("S3", "conj:(12)").unwrap();
        let g = hg.group();
        let n = g.parse_subgroup("A3").unwrap();
        let q = normal_quotient(&hg, &n).unwrap();
        assert_eq!(q.sub().order(), 3);
        // α restricted to N inverts the 3-cycles.
        let c = q.sub().group().index_of("(123)").unwrap();
        assert_eq!(q.sub().alpha(c), q.sub().group().inv(c));
        assert_eq!(q.quotient().order(), 2);
        assert!((0..2).all(|x| q.quotient().alpha(x) == x));
        let sec = find_equivariant_section(&q).unwrap();
        let labels: Vec<&str> = sec.reps().iter().map(|&r| g.label(r)).collect();
        assert_eq!(labels, ["e", "(12)"]);
    }

    #[test]
    fn z4_quotient_negation() {
        let hg = HomGroup::from_names("Z4", "inv").unwrap();
        let q = normal_quotient(&hg, &hg.group().parse_subgroup("{0,2}").unwrap()).unwrap();
        assert!((0..2).all(|i| q.sub().alpha(i) == i));
        assert!((0..2).all(|x| q.quotient().alpha(x) == x));
        match find_equivariant_section(&q) {
            Err(Error::NoSection { searched }) => assert_eq!(searched, ["[1]={1,3}"]),
            other => panic!("expected NoSection, got {other:?}"),
        }
    }

    #[test]
    fn transposition_subgroup_not_normal() {
        let hg = HomGroup::from_names("S3", "id").unwrap();
        let n = hg.group().parse_subgroup("{e,(12)}").unwrap();
        assert!(matches!(normal_quotient(&hg, &n), Err(Error::NotNormal(_))));
    }

    #[test]
    fn identity_twist_takes_first_representatives() {
        let hg = HomGroup::from_names("D4", "id").unwrap();
        let q = normal_quotient(&hg, &hg.group().parse_subgroup("<r2>").unwrap()).unwrap();
        let sec = find_equivariant_section(&q).unwrap();
        let firsts: Vec<usize> = q.cosets().iter().map(|c| c[0]).collect();
        assert_eq!(sec.reps(), firsts.as_slice());
    }

    #[test]
    fn coset_formulas_on_s3() {
        let f = Field::Rational;
        let hg = HomGroup::from_names("S3", "conj:(12)").unwrap();
        let q = normal_quotient(&hg, &hg.group().parse_subgroup("A3").unwrap()).unwrap();
        let sec = find_equivariant_section(&q).unwrap();
        let act = coset_weak_action(&sec, f).unwrap();
        let sub = q.sub();
        let nn = sub.order();
        // unit coset acts as α on N
        for m in 0..nn {
            assert_eq!(act.column(m), basis_vector(f, nn, sub.alpha(m)));
        }
        let sigma = coset_cocycle(&sec, f).unwrap();
        let e = sub.group().identity();
        for c in 0..4 {
            assert_eq!(sigma.column(c), basis_vector(f, nn, e));
        }
    }
}
