//! Command implementations behind the `homhopf` binary.
//!
//! Every command produces a [`Report`]; the binary prints it and exits with [`Report::exit_code`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use homhopf::cleft::{
    check_algebra_isomorphism, check_cleft, check_comodule_algebra, cleft_to_crossed, coinvariants,
    crossed_to_cleft, group_crossed_system, group_product_map, check_cleft_identities, section_cleft,
    CleftData, ComoduleAlgebra,
};
use homhopf::crossed::{
    check_crossed_system, crossed_associativity_oracle, crossed_product_unchecked, CrossedSystem,
};
use homhopf::galois::{
    cleft_galois_inverse, galois_map, galois_nb_to_cleft, normal_basis_search, relative_tensor,
    NormalBasisOptions,
};
use homhopf::homgroup::{find_equivariant_section, hom_group_algebra, normal_quotient, HomGroup};
use homhopf::homstruct::{check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf};
use homhopf::io::{
    parent_dir, read_json, write_json, CleftFile, ComoduleFile, GroupFile, StructureFile,
    SystemFile, Structure,
};
use homhopf::linalg::{Field, LinMap};
use homhopf::report::AxiomReport;
use homhopf::{Error, Result};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "homhopf-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Clone, Debug)]
pub enum Command {
    Verify { path: PathBuf },
    Crossed { path: PathBuf, force: bool },
    Cleft { path: PathBuf },
    Galois { path: PathBuf },
    Roundtrip { path: PathBuf },
    Example { name: String, params: Vec<String> },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Crossed { .. } => "crossed",
            Command::Cleft { .. } => "cleft",
            Command::Galois { .. } => "galois",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Example { .. } => "example",
        }
    }

    fn inputs(&self) -> Vec<String> {
        match self {
            Command::Verify { path }
            | Command::Crossed { path, .. }
            | Command::Cleft { path }
            | Command::Galois { path }
            | Command::Roundtrip { path } => vec![path.display().to_string()],
            Command::Example { name, params } => {
                std::iter::once(name.clone()).chain(params.iter().cloned()).collect()
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub field: Option<Field>,
    pub seed: u64,
    pub format: Format,
    pub out: PathBuf,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            field: None,
            seed: 0,
            format: Format::Text,
            out: PathBuf::from("."),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

/// Outcome of one command. `elapsed` is left out of the machine-readable form so that reports
/// are reproducible byte for byte.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub seed: u64,
    pub checks: Vec<AxiomReport>,
    pub facts: BTreeMap<String, Value>,
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    fn new(cfg: &RunConfig) -> Self {
        Self {
            schema: SCHEMA,
            command: cfg.command.name().into(),
            inputs: cfg.command.inputs(),
            field: cfg.field.map(|f| f.to_string()),
            seed: cfg.seed,
            checks: Vec::new(),
            facts: BTreeMap::new(),
            outputs: Vec::new(),
            error: None,
            passed: false,
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, r: AxiomReport) -> bool {
        let ok = r.passed();
        self.checks.push(r);
        ok
    }

    fn fact(&mut self, key: &str, v: impl Into<Value>) {
        self.facts.insert(key.into(), v.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn failed_check(&self, structure: &str, id: &str) -> bool {
        self.checks
            .iter()
            .any(|c| c.structure == structure && c.verdict(id) == Some(false))
    }

    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "homhopf {} {}", self.command, self.inputs.join(" "));
        for c in &self.checks {
            let _ = write!(s, "{c}");
            if !s.ends_with('\n') {
                s.push('\n');
            }
        }
        for (k, v) in &self.facts {
            let _ = writeln!(s, "{k}: {v}");
        }
        for o in &self.outputs {
            let _ = writeln!(s, "wrote {o}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error [{}]: {}", e.kind, e.message);
        }
        let _ = writeln!(
            s,
            "{} in {:.3}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64()
        );
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Machine => self.machine(),
        }
    }
}

/// Runs a command. Errors end up in the report rather than being returned.
pub fn run(cfg: &RunConfig) -> Report {
    let start = Instant::now();
    let mut report = Report::new(cfg);
    let outcome = match &cfg.command {
        Command::Verify { path } => cmd_verify(cfg, path, &mut report),
        Command::Crossed { path, force } => cmd_crossed(cfg, path, *force, &mut report),
        Command::Cleft { path } => cmd_cleft(cfg, path, &mut report),
        Command::Galois { path } => cmd_galois(cfg, path, &mut report),
        Command::Roundtrip { path } => cmd_roundtrip(cfg, path, &mut report),
        Command::Example { name, params } => cmd_example(cfg, name, params, &mut report),
    };
    match outcome {
        Ok(ok) => report.passed = ok && report.checks.iter().all(AxiomReport::passed),
        Err(e) => {
            if let Error::ConditionsViolated(r) | Error::NotModuleAction(r) = &e {
                if !report.checks.iter().any(|c| c == r.as_ref()) {
                    report.checks.push((**r).clone());
                }
            }
            report.error = Some(ErrorInfo {
                kind: e.kind().into(),
                message: match &e {
                    Error::ConditionsViolated(_) => "crossed-product conditions violated".into(),
                    Error::NotModuleAction(_) => "action is not a Hom-module action".into(),
                    other => other.to_string(),
                },
            });
            report.passed = false;
        }
    }
    report.elapsed = start.elapsed();
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FileKind {
    Structure,
    Group,
    System,
    Comodule,
    Cleft,
}

fn file_kind(path: &Path) -> Result<FileKind> {
    let v: Value = read_json(path)?;
    let has = |k: &str| v.get(k).is_some();
    Ok(if has("kind") {
        FileKind::Structure
    } else if has("table") {
        FileKind::Group
    } else if has("action") {
        FileKind::System
    } else if has("gamma") {
        FileKind::Cleft
    } else if has("rho") {
        FileKind::Comodule
    } else {
        return Err(Error::Parse(format!("{}: unrecognized file layout", path.display())));
    })
}

fn located<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) if !m.starts_with(&path.display().to_string()) => {
            Error::Parse(format!("{}: {m}", path.display()))
        }
        Error::ShapeMismatch(m) => Error::ShapeMismatch(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_system(cfg: &RunConfig, path: &Path) -> Result<CrossedSystem> {
    let f: SystemFile = read_json(path)?;
    located(path, f.build(parent_dir(path), cfg.field))
}

fn load_comodule(cfg: &RunConfig, path: &Path) -> Result<ComoduleAlgebra> {
    let f: ComoduleFile = read_json(path)?;
    located(path, f.build(parent_dir(path), cfg.field))
}

fn load_cleft(cfg: &RunConfig, path: &Path) -> Result<CleftData> {
    let f: CleftFile = read_json(path)?;
    located(path, f.build(parent_dir(path), cfg.field))
}

fn write_output<T: Serialize>(cfg: &RunConfig, report: &mut Report, name: &str, value: &T) -> Result<()> {
    fs::create_dir_all(&cfg.out).map_err(|source| Error::Io {
        path: cfg.out.display().to_string(),
        source,
    })?;
    write_json(&cfg.out.join(name), value)?;
    report.outputs.push(name.to_string());
    Ok(())
}

fn cmd_verify(cfg: &RunConfig, path: &Path, report: &mut Report) -> Result<bool> {
    let kind = file_kind(path)?;
    report.fact("file_kind", format!("{kind:?}").to_lowercase());
    match kind {
        FileKind::Structure => {
            let f: StructureFile = read_json(path)?;
            let s = located(path, f.build(cfg.field))?;
            match s {
                Structure::Algebra(a) => {
                    report.fact("dim", a.dim());
                    report.check(check_hom_algebra(&a));
                }
                Structure::Coalgebra(c) => {
                    report.fact("dim", c.dim());
                    report.check(check_hom_coalgebra(&c));
                }
                Structure::Bialgebra(a, c) => {
                    report.fact("dim", a.dim());
                    report.check(check_hom_bialgebra(&a, &c)?);
                }
                Structure::Hopf(h) => {
                    report.fact("dim", h.dim());
                    report.check(check_hom_hopf(&h));
                }
            }
        }
        FileKind::Group => {
            let f: GroupFile = read_json(path)?;
            let hg = located(path, f.build())?;
            let h = hom_group_algebra(&hg, cfg.field.unwrap_or(Field::Rational))?;
            report.fact("order", hg.order());
            report.check(check_hom_hopf(&h));
        }
        FileKind::System => {
            let s = load_system(cfg, path)?;
            report.check(check_crossed_system(&s));
        }
        FileKind::Comodule => {
            let c = load_comodule(cfg, path)?;
            report.check(check_comodule_algebra(&c));
        }
        FileKind::Cleft => {
            let cd = load_cleft(cfg, path)?;
            report.check(check_comodule_algebra(&cd.comod));
            report.check(check_cleft(&cd));
        }
    }
    Ok(true)
}

fn cmd_crossed(cfg: &RunConfig, path: &Path, force: bool, report: &mut Report) -> Result<bool> {
    let s = load_system(cfg, path)?;
    let conditions = check_crossed_system(&s);
    let oracle = crossed_associativity_oracle(&s);
    let (cp, op) = (conditions.passed(), oracle.passed());
    report.fact("conditions_hold", cp);
    report.fact("product_is_hom_algebra", op);
    report.fact("verdicts_agree", cp == op);
    report.fact("dim", s.a().dim() * s.h().dim());
    report.checks.push(conditions.clone());
    report.checks.push(oracle);
    if !cp && !force {
        return Err(Error::ConditionsViolated(Box::new(conditions)));
    }
    let product = crossed_product_unchecked(&s);
    write_output(cfg, report, "product.json", &StructureFile::from_algebra(&product))?;
    Ok(cp == op)
}

fn cleft_checks(cd: &CleftData, report: &mut Report) -> Result<bool> {
    let mut ok = report.check(check_comodule_algebra(&cd.comod));
    ok &= report.check(check_cleft(cd));
    let coinv = coinvariants(&cd.comod)?;
    report.fact("coinvariants_dim", coinv.dim());
    ok &= report.check(check_cleft_identities(cd, &coinv));
    let back = cleft_to_crossed(cd)?;
    ok &= report.check(back.verify(cd));
    Ok(ok)
}

fn cmd_cleft(cfg: &RunConfig, path: &Path, report: &mut Report) -> Result<bool> {
    let cd = load_cleft(cfg, path)?;
    report.fact("dim_b", cd.b().dim());
    report.fact("dim_h", cd.h().dim());
    cleft_checks(&cd, report)
}

fn galois_checks(cfg: &RunConfig, c: &ComoduleAlgebra, cd: Option<&CleftData>, report: &mut Report) -> Result<bool> {
    let mut ok = report.check(check_comodule_algebra(c));
    let coinv = coinvariants(c)?;
    let rt = relative_tensor(c, &coinv);
    report.fact("coinvariants_dim", coinv.dim());
    report.fact("relative_tensor_dim", rt.dim());
    let verdict = galois_map(c, &rt)?;
    report.fact("galois_rank", verdict.rank);
    report.fact("galois_bijective", verdict.bijective);
    if let Some(cd) = cd {
        let psi = cleft_galois_inverse(cd, &rt)?;
        report.fact("cleft_inverse_matches", Some(&psi) == verdict.phi_inv.as_ref());
    }
    if !verdict.bijective {
        return Ok(false);
    }
    let opts = NormalBasisOptions {
        seed: cfg.seed,
        ..NormalBasisOptions::default()
    };
    let witness = normal_basis_search(c, &coinv, opts)?;
    report.fact(
        "normal_basis",
        serde_json::to_value(witness.summary()).expect("serializable"),
    );
    let rebuilt = galois_nb_to_cleft(c, &coinv, &rt, &verdict, &witness)?;
    ok &= report.check(check_cleft(&rebuilt.cleft));
    let back = cleft_to_crossed(&rebuilt.cleft)?;
    ok &= report.check(back.verify(&rebuilt.cleft));
    Ok(ok)
}

fn cmd_galois(cfg: &RunConfig, path: &Path, report: &mut Report) -> Result<bool> {
    match file_kind(path)? {
        FileKind::Cleft => {
            let cd = load_cleft(cfg, path)?;
            galois_checks(cfg, &cd.comod, Some(&cd), report)
        }
        FileKind::Comodule => {
            let c = load_comodule(cfg, path)?;
            galois_checks(cfg, &c, None, report)
        }
        k => Err(Error::Parse(format!(
            "{}: galois expects a comodule or cleft file, found {k:?}",
            path.display()
        ))),
    }
}

fn maps_agree(structure: &str, id: &str, lhs: &LinMap, rhs: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new(structure);
    r.check_maps(id, lhs, rhs, &[lhs.domain()]);
    r
}

fn cmd_roundtrip(cfg: &RunConfig, path: &Path, report: &mut Report) -> Result<bool> {
    let (system, cd) = match file_kind(path)? {
        FileKind::System => {
            let s = load_system(cfg, path)?;
            let cd = crossed_to_cleft(&s)?.cleft;
            (s, cd)
        }
        FileKind::Cleft => {
            let cd = load_cleft(cfg, path)?;
            (cleft_to_crossed(&cd)?.system, cd)
        }
        k => {
            return Err(Error::Parse(format!(
                "{}: roundtrip expects a system or cleft file, found {k:?}",
                path.display()
            )))
        }
    };
    let mut chains = BTreeMap::new();

    // crossed → cleft → crossed
    let fwd = crossed_to_cleft(&system)?;
    let mut ok = report.check(maps_agree(
        "crossed_to_cleft",
        "closed_form_inverse",
        &fwd.closed_form_inverse,
        &fwd.solver_inverse,
    ));
    ok &= report.check(check_cleft(&fwd.cleft));
    let back = cleft_to_crossed(&fwd.cleft)?;
    ok &= report.check(back.verify(&fwd.cleft));
    ok &= report.check(check_algebra_isomorphism(
        "crossed_cleft_crossed",
        &back.phi,
        &back.product,
        &fwd.product,
    ));
    chains.insert("crossed_cleft_crossed", ok);

    // cleft → crossed → cleft
    let mid = cleft_to_crossed(&cd)?;
    let mut ok = report.check(mid.verify(&cd));
    let again = crossed_to_cleft(&mid.system)?;
    let mut iso = check_algebra_isomorphism("cleft_crossed_cleft", &mid.phi, &again.product, cd.b());
    let along = mid.phi.compose(&again.cleft.gamma)?;
    iso.check_maps("gamma_transported", &along, &cd.gamma, &[cd.h().space()]);
    ok &= report.check(iso);
    chains.insert("cleft_crossed_cleft", ok);

    // galois with normal basis → cleft → crossed
    let ok = galois_checks(cfg, &cd.comod, Some(&cd), report)?;
    chains.insert("galois_cleft_crossed", ok);
    report.fact("chains", serde_json::to_value(&chains).expect("serializable"));
    Ok(chains.values().all(|&c| c))
}

fn split_example(name: &str) -> (&str, &str) {
    match name.split_once('/') {
        Some((g, n)) => (g.trim(), n.trim()),
        None => (name.trim(), "1"),
    }
}

fn cmd_example(cfg: &RunConfig, name: &str, params: &[String], report: &mut Report) -> Result<bool> {
    let field = cfg.field.unwrap_or(Field::Rational);
    let (gname, ndesc) = split_example(name);
    let auto = params.first().map(String::as_str).unwrap_or("id");
    let hg = HomGroup::from_names(gname, auto)?;
    let subset = hg.group().parse_subgroup(ndesc)?;
    let quo = normal_quotient(&hg, &subset)?;
    report.fact("group", hg.to_string());
    report.fact("normal_subgroup", hg.group().format_subset(quo.members()));
    report.fact(
        "cosets",
        (0..quo.cosets().len()).map(|c| quo.describe_coset(c)).collect::<Vec<_>>(),
    );
    let sec = find_equivariant_section(&quo)?;
    report.fact(
        "section",
        sec.reps().iter().map(|&g| hg.group().label(g).to_string()).collect::<Vec<_>>(),
    );
    let kg = hom_group_algebra(&hg, field)?;
    let kn = hom_group_algebra(quo.sub(), field)?;
    let kq = hom_group_algebra(quo.quotient(), field)?;
    let system = group_crossed_system(&sec, field)?;
    let mut ok = report.check(check_crossed_system(&system));
    let product = crossed_product_unchecked(&system);
    let phi = group_product_map(&sec, &product, field)?;
    ok &= report.check(check_algebra_isomorphism("crossed_product_to_kG", &phi, &product, &kg.algebra));
    let cd = section_cleft(&sec, field)?;
    ok &= report.check(check_cleft(&cd));

    write_output(cfg, report, "group.json", &GroupFile::from_hom_group(&hg))?;
    write_output(cfg, report, "hopf.json", &StructureFile::from_hopf(&kg))?;
    write_output(cfg, report, "sub_algebra.json", &StructureFile::from_hopf(&kn))?;
    write_output(cfg, report, "quotient_hopf.json", &StructureFile::from_hopf(&kq))?;
    write_output(
        cfg,
        report,
        "system.json",
        &SystemFile::from_system(&system, "sub_algebra.json", "quotient_hopf.json"),
    )?;
    write_output(
        cfg,
        report,
        "comodule.json",
        &ComoduleFile::from_comodule(&cd.comod, "hopf.json", "quotient_hopf.json"),
    )?;
    write_output(cfg, report, "cleft.json", &CleftFile::from_cleft(&cd, "comodule.json"))?;
    Ok(ok)
}
