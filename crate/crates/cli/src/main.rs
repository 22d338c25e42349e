//! `pairlab` — exact law checking, repair constructions, fixture search and
//! enumeration oracles for weak (co)monads, dual pairings, entwinings and
//! mixed distributive laws.  See README.md for the file format and LAWS.md
//! for the flag index.

use pairlab_cli::{report, schema};

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use pairlab::comonadics::{comodule_flags, comodule_pairing_oracle, QCounitalCoalgebra};
use pairlab::entwine::{entwined_coproduct, entwined_product};
use pairlab::fixtures;
use pairlab::mixed::MixedDistributiveLaw;
use pairlab::monadics::{module_flags, module_pairing_oracle, QUnitalAlgebra};
use pairlab::pairing::DualPairing;
use pairlab::{ExactRing, LinMap};
use report::{comonad_class_name, monad_class_name, Report};
use schema::{Instance, InstanceFile};

#[derive(Parser)]
#[command(
    name = "pairlab",
    version,
    about = "Exact checks for weak (co)monads, pairings, entwinings and mixed laws"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the law suite appropriate to an instance file.
    Check {
        path: PathBuf,
        /// Law suite: defaults to every law of the kind.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Derive a new structure from an instance and write it out.
    Construct {
        path: PathBuf,
        construction: Construction,
        /// Destination file; stdout only when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively scan a kind for instances matching a flag pattern.
    Search {
        #[arg(long)]
        kind: String,
        /// Comma-separated carrier dimensions, e.g. `2` or `2,2`.
        #[arg(long)]
        dims: String,
        #[arg(long, default_value = "Z2")]
        ring: String,
        /// Comma-separated flags, `!` negates: e.g. `regular,!compatible`.
        #[arg(long, default_value = "")]
        flags: String,
        /// Recorded in the output; scans are ordered and deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u128,
        /// Directory to write every matching instance into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed-form flags against the brute-force hom-set oracle.
    Oracle {
        path: PathBuf,
        /// Largest test-object dimension.
        #[arg(long, default_value_t = 2)]
        dims: usize,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u128,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construction {
    MuTilde,
    EtaTilde,
    MuHat,
    DeltaTilde,
    EpsTilde,
    DeltaHat,
    EntwinedProduct,
    EntwinedCoproduct,
    RelatedAdjunction,
    InducedMonad,
    InducedComonad,
}

/// Exit 1: some law or precondition fails.  Exit 2: the input is malformed.
enum Failure {
    Violation(String),
    Malformed(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Malformed(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Violation(m) | Failure::Malformed(m) => m,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Check { path, suite } => cmd_check(&path, suite.as_deref(), cli.pretty),
        Cmd::Construct { path, construction, out } => {
            cmd_construct(&path, construction, out.as_deref(), cli.pretty)
        }
        Cmd::Search { kind, dims, ring, flags, seed, cap, out } => {
            cmd_search(&kind, &dims, &ring, &flags, seed, cap, out.as_deref(), cli.pretty)
        }
        Cmd::Oracle { path, dims, cap } => cmd_oracle(&path, dims, cap, cli.pretty),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            std::process::exit(f.code());
        }
    }
}

fn load_instance(path: &Path) -> Result<(InstanceFile, Instance), Failure> {
    let file = InstanceFile::load(path).map_err(Failure::Malformed)?;
    let instance = file.build().map_err(Failure::Malformed)?;
    Ok((file, instance))
}

fn check_report(path: &str, instance: &Instance, suite: &str) -> Result<Report, Failure> {
    let bad_suite = |kind: &str| {
        Failure::Malformed(format!("unknown suite `{suite}` for kind `{kind}`"))
    };
    match instance {
        Instance::Algebra(alg) => {
            let lr = alg.law_report();
            // required flags per suite; the rest stay informational
            let required: &[&str] = match suite {
                "all" | "monad" => &["assoc", "unit-regular", "unit-symmetric", "mult-compatible"],
                "r-unital" => &["assoc", "unit-regular", "mult-compatible"],
                "q-unital" => &["assoc"],
                _ => return Err(bad_suite("algebra")),
            };
            let mut r = Report::new(path, "check", "algebra", suite);
            for (name, holds) in [
                ("assoc", lr.assoc),
                ("unit-regular", lr.unit_regular),
                ("unit-symmetric", lr.unit_symmetric),
                ("mult-compatible", lr.mult_compatible),
            ] {
                r.push(name, holds, required.contains(&name));
            }
            r.classification = Some(monad_class_name(lr.classification).into());
            Ok(r)
        }
        Instance::Coalgebra(coalg) => {
            let lr = coalg.law_report();
            let required: &[&str] = match suite {
                "all" | "comonad" => {
                    &["coassoc", "counit-regular", "counit-symmetric", "comult-compatible"]
                }
                "r-counital" => &["coassoc", "counit-regular", "comult-compatible"],
                "q-counital" => &["coassoc"],
                _ => return Err(bad_suite("coalgebra")),
            };
            let mut r = Report::new(path, "check", "coalgebra", suite);
            for (name, holds) in [
                ("coassoc", lr.coassoc),
                ("counit-regular", lr.counit_regular),
                ("counit-symmetric", lr.counit_symmetric),
                ("comult-compatible", lr.comult_compatible),
            ] {
                r.push(name, holds, required.contains(&name));
            }
            r.classification = Some(comonad_class_name(lr.classification).into());
            Ok(r)
        }
        Instance::Module(alg, k, rho) => {
            if suite != "all" && suite != "module" {
                return Err(bad_suite("module"));
            }
            let flags = module_flags(alg, *k, rho).map_err(|e| Failure::Malformed(e.to_string()))?;
            let mut r = Report::new(path, "check", "module", suite);
            r.push("action", flags.action_ok, true);
            r.push("module-compatible", flags.compatible, true);
            Ok(r)
        }
        Instance::Comodule(coalg, k, upsilon) => {
            if suite != "all" && suite != "comodule" {
                return Err(bad_suite("comodule"));
            }
            let flags = comodule_flags(coalg, *k, upsilon)
                .map_err(|e| Failure::Malformed(e.to_string()))?;
            let mut r = Report::new(path, "check", "comodule", suite);
            r.push("coaction", flags.coaction_ok, true);
            r.push("comodule-compatible", flags.compatible, true);
            Ok(r)
        }
        Instance::Pairing(p) => {
            let pr = p.report();
            let required: &[&str] = match suite {
                "all" | "pairing" => {
                    &["alpha-regular", "beta-regular", "alpha-symmetric", "beta-symmetric"]
                }
                "regular" => &["alpha-regular", "beta-regular"],
                _ => return Err(bad_suite("pairing")),
            };
            let mut r = Report::new(path, "check", "pairing", suite);
            for (name, holds) in [
                ("alpha-regular", pr.alpha_regular),
                ("beta-regular", pr.beta_regular),
                ("alpha-symmetric", pr.alpha_symmetric),
                ("beta-symmetric", pr.beta_symmetric),
            ] {
                r.push(name, holds, required.contains(&name));
            }
            Ok(r)
        }
        Instance::EntwiningModule(ent, inner) => {
            if suite != "all" && suite != "lifting" {
                return Err(bad_suite("entwining-module"));
            }
            let lr = ent.lifting_report();
            let mut r = Report::new(path, "check", "entwining-module", suite);
            r.push("lift-equ", lr.diagram_lift_equ, true);
            r.push("lift-equ-reg", lr.equation_lift_equ_reg, true);
            r.push("weak-diagrams", lr.weak_diagrams, true);
            if let Some(t_alg) = inner {
                let weak = entwined_product(ent.source_monad(), t_alg, ent.lambda())
                    .map(|ep| ep.is_weak())
                    .unwrap_or(false);
                r.push("entwined-weak", weak, false);
            }
            Ok(r)
        }
        Instance::EntwiningComodule(ent, inner) => {
            if suite != "all" && suite != "lifting" {
                return Err(bad_suite("entwining-comodule"));
            }
            let lr = ent.lifting_report();
            let mut r = Report::new(path, "check", "entwining-comodule", suite);
            r.push("lift-equ-co", lr.diagram_lift_equ_co, true);
            r.push("lift-equ-reg-co", lr.equation_lift_equ_reg_co, true);
            r.push("weak-diagrams-co", lr.weak_diagrams, true);
            if let Some(t_coalg) = inner {
                let weak = entwined_coproduct(ent.source_comonad(), t_coalg, ent.psi())
                    .map(|ec| ec.is_weak())
                    .unwrap_or(false);
                r.push("entwined-weak-co", weak, false);
            }
            Ok(r)
        }
        Instance::Mixed(mx) => {
            if suite != "all" && suite != "mixed" {
                return Err(bad_suite("mixed"));
            }
            let mr = mx.report();
            let mut r = Report::new(path, "check", "mixed", suite);
            for (name, holds) in [
                ("mon-rect", mr.mon_rect),
                ("mon-square", mr.mon_square),
                ("com-rect", mr.com_rect),
                ("com-square", mr.com_square),
                ("cond-ve", mr.cond_ve),
                ("eta-unit", mr.eta_unit),
                ("counit-2", mr.counit_2),
                ("unit-2", mr.unit_2),
            ] {
                r.push(name, holds, true);
            }
            r.derived.insert("xi".into(), matrix_value(&mr.xi));
            r.derived.insert("kappa-hat".into(), matrix_value(&mr.kappa_hat));
            r.derived.insert("tau-hat".into(), matrix_value(&mr.tau_hat));
            Ok(r)
        }
    }
}

fn matrix_value(l: &LinMap) -> serde_json::Value {
    serde_json::to_value(schema::linmap_to_matrix(l)).expect("serializable")
}

fn cmd_check(path: &Path, suite: Option<&str>, pretty: bool) -> Result<i32, Failure> {
    let (_, instance) = load_instance(path)?;
    let report = check_report(&path.display().to_string(), &instance, suite.unwrap_or("all"))?;
    report.emit(pretty);
    Ok(report.exit_code())
}

fn cmd_construct(
    path: &Path,
    construction: Construction,
    out: Option<&Path>,
    pretty: bool,
) -> Result<i32, Failure> {
    let (_, instance) = load_instance(path)?;
    let wrong_kind = |needs: &str| {
        Failure::Malformed(format!("this construction needs a `{needs}` instance"))
    };
    let refuse = |e: pairlab::Error| Failure::Violation(e.to_string());

    let output: InstanceFile = match construction {
        Construction::MuTilde | Construction::EtaTilde | Construction::MuHat => {
            let Instance::Algebra(alg) = &instance else {
                return Err(wrong_kind("algebra"));
            };
            let derived = match construction {
                Construction::MuTilde => alg.mu_tilde(),
                Construction::EtaTilde => alg.eta_tilde(),
                _ => alg.mu_hat(),
            }
            .map_err(refuse)?;
            InstanceFile::from_algebra(&derived)
        }
        Construction::DeltaTilde | Construction::EpsTilde | Construction::DeltaHat => {
            let Instance::Coalgebra(coalg) = &instance else {
                return Err(wrong_kind("coalgebra"));
            };
            let derived = match construction {
                Construction::DeltaTilde => coalg.delta_tilde(),
                Construction::EpsTilde => coalg.eps_tilde(),
                _ => coalg.delta_hat(),
            }
            .map_err(refuse)?;
            InstanceFile::from_coalgebra(&derived)
        }
        Construction::EntwinedProduct => {
            let Instance::EntwiningModule(ent, Some(t_alg)) = &instance else {
                return Err(wrong_kind("entwining-module with product_t/unit_t"));
            };
            let ep = entwined_product(ent.source_monad(), t_alg, ent.lambda()).map_err(refuse)?;
            let mut matrices = BTreeMap::new();
            matrices.insert("product".into(), schema::linmap_to_matrix(&ep.product));
            matrices.insert("unit".into(), schema::linmap_to_matrix(&ep.unit));
            InstanceFile {
                ring: schema::render_ring(ent.ring()),
                kind: "algebra".into(),
                dims: vec![ep.dim()],
                matrices,
            }
        }
        Construction::EntwinedCoproduct => {
            let Instance::EntwiningComodule(ent, Some(t_coalg)) = &instance else {
                return Err(wrong_kind("entwining-comodule with coproduct_t/counit_t"));
            };
            let ec =
                entwined_coproduct(ent.source_comonad(), t_coalg, ent.psi()).map_err(refuse)?;
            let mut matrices = BTreeMap::new();
            matrices.insert("coproduct".into(), schema::linmap_to_matrix(&ec.delta_entwined));
            matrices.insert("counit".into(), schema::linmap_to_matrix(&ec.counit));
            InstanceFile {
                ring: schema::render_ring(ent.ring()),
                kind: "coalgebra".into(),
                dims: vec![ec.dim()],
                matrices,
            }
        }
        Construction::RelatedAdjunction => {
            let Instance::Pairing(p) = &instance else {
                return Err(wrong_kind("pairing"));
            };
            InstanceFile::from_pairing(&p.related_adjunction().map_err(refuse)?)
        }
        Construction::InducedMonad => {
            let Instance::Pairing(p) = &instance else {
                return Err(wrong_kind("pairing"));
            };
            InstanceFile::from_algebra(&p.induced_monad())
        }
        Construction::InducedComonad => {
            let Instance::Pairing(p) = &instance else {
                return Err(wrong_kind("pairing"));
            };
            InstanceFile::from_coalgebra(&p.induced_comonad())
        }
    };

    if let Some(dest) = out {
        output.save(dest).map_err(Failure::Malformed)?;
        if pretty {
            println!("wrote {} instance ({:?}) to {}", output.kind, output.dims, dest.display());
        } else {
            println!(
                "{}",
                serde_json::json!({
                    "operation": "construct",
                    "instance": path.display().to_string(),
                    "kind": output.kind,
                    "dims": output.dims,
                    "out": dest.display().to_string(),
                })
            );
        }
    } else if pretty {
        println!("{}", serde_json::to_string_pretty(&output).expect("serializable"));
    } else {
        println!("{}", serde_json::to_string(&output).expect("serializable"));
    }
    Ok(0)
}

/// A parsed flag pattern: canonical flag name plus the wanted polarity.
fn parse_pattern(kind: &str, flags: &str) -> Result<Vec<(String, bool)>, Failure> {
    let canonical = |raw: &str| -> Result<Vec<&'static str>, Failure> {
        let names: &[&str] = match (kind, raw) {
            ("algebra", "assoc") => &["assoc"],
            ("algebra", "regular") | ("algebra", "unit-regular") => &["unit-regular"],
            ("algebra", "symmetric") | ("algebra", "unit-symmetric") => &["unit-symmetric"],
            ("algebra", "compatible") | ("algebra", "mult-compatible") => &["mult-compatible"],
            ("coalgebra", "coassoc") => &["coassoc"],
            ("coalgebra", "regular") | ("coalgebra", "counit-regular") => &["counit-regular"],
            ("coalgebra", "symmetric") | ("coalgebra", "counit-symmetric") => {
                &["counit-symmetric"]
            }
            ("coalgebra", "compatible") | ("coalgebra", "comult-compatible") => {
                &["comult-compatible"]
            }
            ("pairing", "regular") => &["alpha-regular", "beta-regular"],
            ("pairing", "alpha-regular") => &["alpha-regular"],
            ("pairing", "beta-regular") => &["beta-regular"],
            ("pairing", "alpha-symmetric") => &["alpha-symmetric"],
            ("pairing", "beta-symmetric") => &["beta-symmetric"],
            ("entwining-module", "lift-equ") => &["lift-equ"],
            ("entwining-module", "lift-equ-reg") => &["lift-equ-reg"],
            ("entwining-module", "weak-diagrams") => &["weak-diagrams"],
            ("entwining-module", "entwined-weak") => &["entwined-weak"],
            ("entwining-comodule", "lift-equ-co") => &["lift-equ-co"],
            ("entwining-comodule", "lift-equ-reg-co") => &["lift-equ-reg-co"],
            ("entwining-comodule", "weak-diagrams-co") => &["weak-diagrams-co"],
            ("entwining-comodule", "entwined-weak-co") => &["entwined-weak-co"],
            ("mixed", "mon-rect") => &["mon-rect"],
            ("mixed", "mon-square") => &["mon-square"],
            ("mixed", "com-rect") => &["com-rect"],
            ("mixed", "com-square") => &["com-square"],
            ("mixed", "cond-ve") => &["cond-ve"],
            ("mixed", "eta-unit") => &["eta-unit"],
            ("mixed", "counit-2") => &["counit-2"],
            ("mixed", "unit-2") => &["unit-2"],
            _ => {
                return Err(Failure::Malformed(format!(
                    "unknown flag `{raw}` for kind `{kind}`"
                )))
            }
        };
        Ok(names.to_vec())
    };
    let mut out = Vec::new();
    for part in flags.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (raw, wanted) = match part.strip_prefix('!') {
            Some(rest) => (rest, false),
            None => (part, true),
        };
        for name in canonical(raw)? {
            out.push((name.to_string(), wanted));
        }
    }
    Ok(out)
}

struct SearchSink<'a> {
    pattern: &'a [(String, bool)],
    out: Option<&'a Path>,
    kind: String,
    ring: String,
    examined: u64,
    matched: u64,
}

impl SearchSink<'_> {
    fn offer(
        &mut self,
        flags: &[(&str, bool)],
        make_file: impl FnOnce() -> InstanceFile,
    ) -> Result<(), Failure> {
        self.examined += 1;
        let matches = self.pattern.iter().all(|(name, wanted)| {
            flags.iter().any(|(n, holds)| n == name && holds == wanted)
        });
        if !matches {
            return Ok(());
        }
        self.matched += 1;
        if let Some(dir) = self.out {
            std::fs::create_dir_all(dir)
                .map_err(|e| Failure::Malformed(format!("cannot create {}: {e}", dir.display())))?;
            let name = format!("{}-{}-{:06}.json", self.kind, self.ring, self.examined - 1);
            make_file().save(&dir.join(name)).map_err(Failure::Malformed)?;
        }
        Ok(())
    }
}

fn enum_maps(from: usize, to: usize, ring: ExactRing, cap: u128) -> Result<Vec<LinMap>, Failure> {
    LinMap::enumerate_maps(from, to, ring, cap)
        .map_err(|e| Failure::Malformed(e.to_string()))
        .map(|it| it.collect())
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    kind: &str,
    dims: &str,
    ring_s: &str,
    flags: &str,
    seed: Option<u64>,
    cap: u128,
    out: Option<&Path>,
    pretty: bool,
) -> Result<i32, Failure> {
    let ring = schema::parse_ring(ring_s).map_err(Failure::Malformed)?;
    let dims: Vec<usize> = dims
        .split(',')
        .map(|d| d.trim().parse::<usize>().map_err(|_| Failure::Malformed(format!("bad dims `{d}`"))))
        .collect::<Result<_, _>>()?;
    let pattern = parse_pattern(kind, flags)?;
    let mut sink = SearchSink {
        pattern: &pattern,
        out,
        kind: kind.into(),
        ring: ring_s.to_lowercase(),
        examined: 0,
        matched: 0,
    };

    match kind {
        "algebra" => {
            let [d] = dims[..] else {
                return Err(Failure::Malformed("kind `algebra` needs dims=<d>".into()));
            };
            // the carrier of the scan is the family of q-unital algebras:
            // associativity is part of the kind, not a searchable flag
            let algebras = pairlab::monadics::enumerate_algebras(d, ring, cap)
                .map_err(|e| Failure::Malformed(e.to_string()))?;
            for alg in algebras {
                {
                    let lr = alg.law_report();
                    sink.offer(
                        &[
                            ("assoc", lr.assoc),
                            ("unit-regular", lr.unit_regular),
                            ("unit-symmetric", lr.unit_symmetric),
                            ("mult-compatible", lr.mult_compatible),
                        ],
                        || InstanceFile::from_algebra(&alg),
                    )?;
                }
            }
        }
        "coalgebra" => {
            let [d] = dims[..] else {
                return Err(Failure::Malformed("kind `coalgebra` needs dims=<d>".into()));
            };
            let coalgebras = pairlab::comonadics::enumerate_coalgebras(d, ring, cap)
                .map_err(|e| Failure::Malformed(e.to_string()))?;
            for coalg in coalgebras {
                {
                    let lr = coalg.law_report();
                    sink.offer(
                        &[
                            ("coassoc", lr.coassoc),
                            ("counit-regular", lr.counit_regular),
                            ("counit-symmetric", lr.counit_symmetric),
                            ("comult-compatible", lr.comult_compatible),
                        ],
                        || InstanceFile::from_coalgebra(&coalg),
                    )?;
                }
            }
        }
        "pairing" => {
            let [a, b] = dims[..] else {
                return Err(Failure::Malformed("kind `pairing` needs dims=<a>,<b>".into()));
            };
            for eta in enum_maps(1, b * a, ring, cap)? {
                for eps in enum_maps(a * b, 1, ring, cap)? {
                    let p = DualPairing::new(ring, a, b, eta.clone(), eps)
                        .map_err(|e| Failure::Malformed(e.to_string()))?;
                    let pr = p.report();
                    sink.offer(
                        &[
                            ("alpha-regular", pr.alpha_regular),
                            ("beta-regular", pr.beta_regular),
                            ("alpha-symmetric", pr.alpha_symmetric),
                            ("beta-symmetric", pr.beta_symmetric),
                        ],
                        || InstanceFile::from_pairing(&p),
                    )?;
                }
            }
        }
        "mixed" => {
            let (f, g) = base_weak_pair(&dims, ring)?;
            for omega in enum_maps(f.dim() * g.dim(), g.dim() * f.dim(), ring, cap)? {
                let mx = MixedDistributiveLaw::new(f.clone(), g.clone(), omega)
                    .map_err(|e| Failure::Malformed(e.to_string()))?;
                let mr = mx.report();
                sink.offer(
                    &[
                        ("mon-rect", mr.mon_rect),
                        ("mon-square", mr.mon_square),
                        ("com-rect", mr.com_rect),
                        ("com-square", mr.com_square),
                        ("cond-ve", mr.cond_ve),
                        ("eta-unit", mr.eta_unit),
                        ("counit-2", mr.counit_2),
                        ("unit-2", mr.unit_2),
                    ],
                    || InstanceFile::from_mixed(&mx),
                )?;
            }
        }
        "entwining-module" => {
            let (f, _) = base_weak_pair(&dims, ring)?;
            let t = f.dim();
            for lambda in enum_maps(f.dim() * t, t * f.dim(), ring, cap)? {
                let ent =
                    pairlab::entwine::ModuleEntwining::new(f.clone(), f.clone(), t, lambda.clone())
                        .map_err(|e| Failure::Malformed(e.to_string()))?;
                let lr = ent.lifting_report();
                let weak = entwined_product(&f, &f, &lambda)
                    .map(|ep| ep.is_weak())
                    .unwrap_or(false);
                sink.offer(
                    &[
                        ("lift-equ", lr.diagram_lift_equ),
                        ("lift-equ-reg", lr.equation_lift_equ_reg),
                        ("weak-diagrams", lr.weak_diagrams),
                        ("entwined-weak", weak),
                    ],
                    || InstanceFile::from_entwining_module(&ent, Some(&f)),
                )?;
            }
        }
        "entwining-comodule" => {
            let (_, g) = base_weak_pair(&dims, ring)?;
            let t = g.dim();
            for psi in enum_maps(t * g.dim(), g.dim() * t, ring, cap)? {
                let ent = pairlab::entwine::ComoduleEntwining::new(
                    g.clone(),
                    g.clone(),
                    t,
                    psi.clone(),
                )
                .map_err(|e| Failure::Malformed(e.to_string()))?;
                let lr = ent.lifting_report();
                let weak = entwined_coproduct(&g, &g, &psi)
                    .map(|ec| ec.is_weak())
                    .unwrap_or(false);
                sink.offer(
                    &[
                        ("lift-equ-co", lr.diagram_lift_equ_co),
                        ("lift-equ-reg-co", lr.equation_lift_equ_reg_co),
                        ("weak-diagrams-co", lr.weak_diagrams),
                        ("entwined-weak-co", weak),
                    ],
                    || InstanceFile::from_entwining_comodule(&ent, Some(&g)),
                )?;
            }
        }
        other => {
            return Err(Failure::Malformed(format!("search does not support kind `{other}`")))
        }
    }

    if pretty {
        println!(
            "search {kind} dims={dims:?} ring={ring_s} flags=`{flags}`: examined {}, matched {}",
            sink.examined, sink.matched
        );
    } else {
        println!(
            "{}",
            serde_json::json!({
                "operation": "search",
                "kind": kind,
                "dims": dims,
                "ring": ring_s,
                "flags": flags,
                "seed": seed,
                "examined": sink.examined,
                "matched": sink.matched,
            })
        );
    }
    Ok(0)
}

/// The fixed weak monad / weak comonad bases used by the entwining and mixed
/// scans; only the exhaustively scanned size (2,2) over `Z2` is wired up.
fn base_weak_pair(
    dims: &[usize],
    ring: ExactRing,
) -> Result<(QUnitalAlgebra, QCounitalCoalgebra), Failure> {
    if dims != [2, 2] || ring != ExactRing::Zn(2) {
        return Err(Failure::Malformed(
            "entwining/mixed search is wired for dims=2,2 over Z2 (the exhaustive corpus)".into(),
        ));
    }
    let f = fixtures::i2().mu_tilde().expect("repairable fixture");
    let g = fixtures::c2().delta_tilde().expect("repairable fixture");
    Ok((f, g))
}

fn cmd_oracle(path: &Path, dims: usize, cap: u128, pretty: bool) -> Result<i32, Failure> {
    let (_, instance) = load_instance(path)?;
    let fail = |e: pairlab::Error| Failure::Malformed(e.to_string());
    let (kind, oracle) = match &instance {
        Instance::Algebra(alg) => ("algebra", module_pairing_oracle(alg, dims, cap).map_err(fail)?),
        Instance::Coalgebra(coalg) => {
            ("coalgebra", comodule_pairing_oracle(coalg, dims, cap).map_err(fail)?)
        }
        Instance::Pairing(p) => ("pairing", p.homset_oracle(dims, cap).map_err(fail)?),
        _ => {
            return Err(Failure::Malformed(
                "oracle needs an algebra, coalgebra or pairing instance".into(),
            ))
        }
    };
    let mut r = Report::new(&path.display().to_string(), "oracle", kind, "oracle");
    r.push("free-compatible", oracle.free_modules_compatible, false);
    r.push("pointwise-alpha-regular", oracle.pointwise_alpha_regular, false);
    r.push("pointwise-beta-regular", oracle.pointwise_beta_regular, false);
    r.push("closed-form-regular", oracle.closed_form_regular, false);
    r.push("oracle-agrees", oracle.agrees, true);
    r.emit(pretty);
    Ok(r.exit_code())
}
