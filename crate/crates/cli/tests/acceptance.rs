//! End-to-end acceptance run: one line per criterion, non-zero exit if any fails.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use homhopf::cleft::{
    check_algebra_isomorphism, check_cleft, cleft_to_crossed, coinvariants, crossed_to_cleft,
    group_product_map, check_cleft_identities, CleftData,
};
use homhopf::corpus::{
    crossed_corpus, extension_cleft, extension_system, hom_group_hopf, section, CATALOG,
    EXTENSIONS, MUTANTS,
};
use homhopf::crossed::{
    build_crossed_product, check_conditions, check_crossed_system, crossed_associativity_oracle,
};
use homhopf::galois::{
    cleft_galois_inverse, galois_map, galois_nb_to_cleft, normal_basis_search, relative_tensor,
    NormalBasisOptions,
};
use homhopf::homgroup::hom_group_algebra;
use homhopf::homstruct::{check_hom_hopf, convolution_invert};
use homhopf::linalg::Field;
use homhopf::Error;

#[path = "../../core/tests/support/cyclic.rs"]
mod cyclic;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const Q: Field = Field::Rational;

fn e(err: Error) -> String {
    err.to_string()
}

fn axiom_suite() -> Outcome {
    let mut count = 0;
    for (g, autos) in CATALOG {
        if autos.len() < 2 && *g != "Z2" {
            return Err(format!("{g}: no nontrivial automorphism in the catalog"));
        }
        for a in *autos {
            let h = hom_group_hopf(g, a, Q).map_err(e)?;
            let r = check_hom_hopf(&h);
            if !r.passed() {
                return Err(format!("{g} {a}:\n{r}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} Hom-group algebras, all axioms exact (Z2 has no nontrivial automorphism)"))
}

fn iff_agreement() -> Outcome {
    let corpus = crossed_corpus(Q).map_err(e)?;
    let mut valid = 0;
    for (name, s) in &corpus {
        let cond = check_conditions(s).passed();
        let oracle = crossed_associativity_oracle(s).passed();
        if cond != oracle {
            return Err(format!("{name}: conditions {cond}, associativity {oracle}"));
        }
        valid += usize::from(cond);
    }
    if corpus.len() < 10 {
        return Err(format!("only {} systems", corpus.len()));
    }
    Ok(format!(
        "{} systems ({valid} valid, {} mutants), 100% agreement",
        corpus.len(),
        MUTANTS.len()
    ))
}

fn group_example() -> Outcome {
    let sec = section("S3", "A3", "conj:(12)").map_err(e)?;
    let system = homhopf::cleft::group_crossed_system(&sec, Q).map_err(e)?;
    let r = check_crossed_system(&system);
    if !r.passed() {
        return Err(format!("S3/A3 system:\n{r}"));
    }
    let product = build_crossed_product(&system).map_err(e)?;
    let phi = group_product_map(&sec, &product, Q).map_err(e)?;
    let kg = hom_group_algebra(sec.quotient().parent(), Q).map_err(e)?;
    let iso = check_algebra_isomorphism("kN#kG/N → kG", &phi, &product, &kg.algebra);
    if !iso.passed() {
        return Err(iso.to_string());
    }
    match section("Z4", "{0,2}", "inv") {
        Err(Error::NoSection { searched }) => Ok(format!(
            "S3/A3 conj:(12) product ≅ kS3 via Φ; Z4/{{0,2}} inv: NoSection over {}",
            searched.join(", ")
        )),
        Ok(_) => Err("Z4/{0,2} inv unexpectedly has a section".into()),
        Err(other) => Err(format!("Z4/{{0,2}} inv: {other}")),
    }
}

fn corpus_clefts() -> Result<Vec<(String, CleftData)>, String> {
    let mut out = Vec::new();
    for &(g, n, a) in EXTENSIONS {
        out.push((format!("kG {g}/{n} {a}"), extension_cleft(g, n, a, Q).map_err(e)?));
        let s = extension_system(g, n, a, Q).map_err(e)?;
        out.push((format!("crossed {g}/{n} {a}"), crossed_to_cleft(&s).map_err(e)?.cleft));
    }
    Ok(out)
}

fn round_trips() -> Outcome {
    for &(g, n, a) in EXTENSIONS {
        let name = format!("{g}/{n} {a}");
        let s = extension_system(g, n, a, Q).map_err(e)?;
        let fwd = crossed_to_cleft(&s).map_err(e)?;
        let r = check_cleft(&fwd.cleft);
        if !r.passed() {
            return Err(format!("{name}: crossed→cleft\n{r}"));
        }
        if fwd.closed_form_inverse != fwd.solver_inverse {
            return Err(format!("{name}: closed-form γ⁻¹ differs from the solver"));
        }
    }
    let clefts = corpus_clefts()?;
    for (name, cd) in &clefts {
        let back = cleft_to_crossed(cd).map_err(e)?;
        let r = back.verify(cd);
        if !r.passed() {
            return Err(format!("{name}: cleft→crossed\n{r}"));
        }
    }
    Ok(format!(
        "{} crossed→cleft, {} cleft→crossed with ΦΨ = id and ΨΦ = id",
        EXTENSIONS.len(),
        clefts.len()
    ))
}

fn cleft_identities() -> Outcome {
    let clefts = corpus_clefts()?;
    for (name, cd) in &clefts {
        let coinv = coinvariants(&cd.comod).map_err(e)?;
        let r = check_cleft_identities(cd, &coinv);
        if !r.passed() {
            return Err(format!("{name}:\n{r}"));
        }
    }
    Ok(format!("{} cleft data", clefts.len()))
}

fn galois_chain() -> Outcome {
    let clefts = corpus_clefts()?;
    for (name, cd) in &clefts {
        let c = &cd.comod;
        let coinv = coinvariants(c).map_err(e)?;
        let rt = relative_tensor(c, &coinv);
        let v = galois_map(c, &rt).map_err(e)?;
        if !v.bijective {
            return Err(format!("{name}: Galois map has rank {} of {}", v.rank, rt.dim()));
        }
        let psi = cleft_galois_inverse(cd, &rt).map_err(|x| format!("{name}: {x}"))?;
        if v.phi_inv.as_ref() != Some(&psi) {
            return Err(format!("{name}: ψ differs from φ⁻¹"));
        }
        let w = normal_basis_search(c, &coinv, NormalBasisOptions::default()).map_err(e)?;
        if w.theta.is_none() {
            return Err(format!("{name}: no normal-basis witness"));
        }
        let rebuilt = galois_nb_to_cleft(c, &coinv, &rt, &v, &w).map_err(|x| format!("{name}: {x}"))?;
        let inv = convolution_invert(&rebuilt.cleft.gamma, &cd.h().coalgebra, cd.b()).map_err(e)?;
        if inv != rebuilt.mu {
            return Err(format!("{name}: μ ≠ γ⁻¹"));
        }
        let back = cleft_to_crossed(&rebuilt.cleft).map_err(e)?;
        let r = back.verify(&rebuilt.cleft);
        if !r.passed() {
            return Err(format!("{name}: rebuilt crossed product\n{r}"));
        }
        let iso = check_algebra_isomorphism("A#H → B", &back.phi, &back.product, cd.b());
        if !iso.passed() {
            return Err(format!("{name}:\n{iso}"));
        }
    }
    Ok(format!("{} cleft extensions: Galois, witness found, μ = γ⁻¹, A#H ≅ B", clefts.len()))
}

fn classical() -> Outcome {
    cyclic::all()?;
    Ok(format!("{} untwisted cyclic extensions match the classical formulas", cyclic::FIXTURES.len()))
}

fn cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_homhopf"))
        .args(args)
        .output()
        .map_err(|x| x.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|x| x.to_string())?;
    let d = dir.path().to_str().ok_or("non-UTF-8 temp path")?;
    let example = ["example", "S3/A3", "conj:(12)", "--format", "machine", "--out", d];
    cli(&example)?;
    let sys = Path::new(d).join("system.json");
    let cleft = Path::new(d).join("cleft.json");
    let (sys, cleft) = (sys.to_str().unwrap(), cleft.to_str().unwrap());
    let runs: [Vec<&str>; 4] = [
        example.to_vec(),
        vec!["roundtrip", sys, "--format", "machine", "--seed", "7"],
        vec!["galois", cleft, "--format", "machine", "--seed", "11"],
        vec!["example", "Z4/{0,2}", "inv", "--format", "machine", "--out", d],
    ];
    for args in &runs {
        let first = cli(args)?;
        let second = cli(args)?;
        if first != second {
            return Err(format!("{}: outputs differ", args.join(" ")));
        }
        if first.1.is_empty() {
            return Err(format!("{}: empty report", args.join(" ")));
        }
    }
    Ok(format!("{} commands, byte-identical machine reports", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("axiom suite", axiom_suite),
        ("conditions iff Hom-associative", iff_agreement),
        ("group extension example", group_example),
        ("crossed/cleft round trips", round_trips),
        ("coaction of the inverse and coinvariant projection", cleft_identities),
        ("Galois and normal basis chain", galois_chain),
        ("classical degeneration", classical),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
