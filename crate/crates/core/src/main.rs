use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use pcgroup::analysis::{EnumeratedGroup, DEFAULT_ELEMENT_CAP};
use pcgroup::automorphism::{out_c, DEFAULT_AUT_CAP};
use pcgroup::consistency::{check_consistency, fallback_class_bound};
use pcgroup::families::{build_family, Epsilon, FamilySpec};
use pcgroup::pc::{load_presentation_file, LoadError, PcPresentation, PresentationDoc};
use pcgroup::quadform::classify_epsilons;
use pcgroup::report::{self, ReproduceOptions};

const CLAIM_FAILED: u8 = 1;
const USAGE: u8 = 2;
const IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pcgroup",
    version,
    about = "Computations with finite p-groups given by pc-presentations"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Group-order cap: automorphism search for outc, survey and reproduce,
    /// element enumeration otherwise.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation of H_n^eps.
    Family {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        eps: Epsilon,
        /// Write the presentation document to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run the weighted consistency test on a presentation document.
    CheckConsistency {
        file: PathBuf,
        /// Nilpotency class bound (default: sum of the weights).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        class: Option<u32>,
    },
    /// Order, class, lower central series, center and class count.
    Analyze { file: PathBuf },
    /// Check that x4 -> x4*z is a non-inner class-preserving automorphism of H_n^eps.
    ThetaCheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        eps: Epsilon,
    },
    /// Compute Out_c by exhaustive automorphism search.
    Outc { file: PathBuf },
    /// Partition the sixteen eps vectors under pseudo-isometry.
    Quadclass,
    /// Run outc over every presentation document in a directory.
    Survey {
        dir: PathBuf,
        #[arg(long)]
        report: PathBuf,
    },
    /// Re-check every claim about the families at desk scale.
    Reproduce {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Corrupt y1^x1 in every family presentation.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

struct Caps {
    elem: u64,
    aut: u64,
}

fn caps(cli: &Cli) -> anyhow::Result<Caps> {
    let mut elem = match std::env::var("PCGROUP_CAP") {
        Ok(v) => v
            .parse::<u64>()
            .ok()
            .filter(|&c| c > 0)
            .with_context(|| format!("PCGROUP_CAP must be a positive integer, got {v:?}"))?,
        Err(_) => DEFAULT_ELEMENT_CAP,
    };
    let mut aut = DEFAULT_AUT_CAP;
    if let Some(c) = cli.cap {
        match cli.command {
            Command::Outc { .. } | Command::Survey { .. } | Command::Reproduce { .. } => aut = c,
            _ => elem = c,
        }
    }
    Ok(Caps { elem, aut })
}

fn load(path: &Path) -> anyhow::Result<PcPresentation> {
    load_presentation_file(path).map_err(|e| {
        let context = format!("reading {}", path.display());
        match e {
            LoadError::Io(io) => anyhow::Error::new(io).context(context),
            LoadError::Presentation(p) => anyhow::Error::new(p).context(context),
        }
    })
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

fn family_spec(n: u64, eps: Epsilon) -> anyhow::Result<FamilySpec> {
    match FamilySpec::new(n as usize, eps) {
        Some(s) => Ok(s),
        None => bail!("n must be at least 1"),
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let caps = caps(cli)?;
    match &cli.command {
        Command::Family { n, eps, emit } => {
            let spec = family_spec(*n, *eps)?;
            let pres = build_family(spec);
            let doc = PresentationDoc::from_presentation(&pres).to_json();
            if let Some(path) = emit {
                std::fs::write(path, &doc)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if cli.json || emit.is_none() {
                println!("{doc}");
            } else {
                println!(
                    "H_{n}^{eps}: {} generators, order 2^{}",
                    pres.ngens(),
                    pres.ngens()
                );
                for r in pres.relation_labels() {
                    println!("  {r}");
                }
            }
            Ok(0)
        }
        Command::CheckConsistency { file, class } => {
            let pres = load(file)?;
            let c = class.unwrap_or_else(|| fallback_class_bound(&pres));
            let r = check_consistency(&pres, c)?;
            let failures: Vec<_> = r
                .failures
                .iter()
                .map(|f| {
                    (
                        f.triple.display(&pres).to_string(),
                        pres.display(&f.left).to_string(),
                        pres.display(&f.right).to_string(),
                    )
                })
                .collect();
            if cli.json {
                print_json(&json!({
                    "consistent": r.consistent,
                    "class_bound": c,
                    "triples_checked": r.triples_checked,
                    "failure_count": r.failure_count,
                    "failures": failures
                        .iter()
                        .map(|(t, l, rr)| json!({"triple": t, "left": l, "right": rr}))
                        .collect::<Vec<_>>(),
                }));
            } else {
                println!("consistent: {}", r.consistent);
                println!("class bound: {c}");
                println!("triples checked: {}", r.triples_checked);
                println!("failures: {}", r.failure_count);
                for (t, l, rr) in &failures {
                    println!("  {t}: {l} != {rr}");
                }
            }
            Ok(if r.consistent { 0 } else { CLAIM_FAILED })
        }
        Command::Analyze { file } => {
            let pres = load(file)?;
            let group = EnumeratedGroup::new(&pres, caps.elem)?;
            let s = report::summarize(&group);
            if cli.json {
                print_json(&serde_json::to_value(&s)?);
            } else {
                println!("order: {}", s.order);
                println!("class: {}", s.class);
                let series: Vec<String> = s.series_orders.iter().map(|o| o.to_string()).collect();
                println!("series orders: {}", series.join(" "));
                println!("center order: {}", s.center_order);
                println!("center: {}", s.center.join(" "));
                println!("class count: {}", s.class_count);
            }
            Ok(0)
        }
        Command::ThetaCheck { n, eps } => {
            let spec = family_spec(*n, *eps)?;
            let group = EnumeratedGroup::new(&build_family(spec), caps.elem)?;
            let t = report::theta_report(&group, spec);
            if cli.json {
                print_json(&json!({
                    "n": n,
                    "eps": eps.to_string(),
                    "theta": serde_json::to_value(&t)?,
                    "holds": t.holds(),
                }));
            } else {
                println!("H_{n}^{eps}: theta = (x4 -> x4*z)");
                println!("homomorphism: {}", t.homomorphism);
                if let Some(v) = &t.violated {
                    println!("  {v}");
                }
                println!("automorphism: {}", t.automorphism);
                match &t.inner_witness {
                    Some(g) => println!("inner: yes, conjugation by {g}"),
                    None => println!("inner: no"),
                }
                println!("class-preserving: {}", t.class_preserving);
                println!("{}", if t.holds() { "PASS" } else { "FAIL" });
            }
            Ok(if t.holds() { 0 } else { CLAIM_FAILED })
        }
        Command::Outc { file } => {
            let pres = load(file)?;
            let group = EnumeratedGroup::new(&pres, caps.elem)?;
            let o = out_c(&group, caps.aut)?;
            let reps: Vec<String> = o
                .representatives
                .iter()
                .map(|m| m.display(&group))
                .collect();
            if cli.json {
                print_json(&json!({
                    "order": o.group_order,
                    "center": o.center_order,
                    "aut": o.aut_order,
                    "aut_c": o.aut_c_order,
                    "inn": o.inn_order,
                    "out_c": o.out_c_order,
                    "representatives": reps,
                }));
            } else {
                println!("|G|: {}", o.group_order);
                println!("|Z|: {}", o.center_order);
                println!("|Aut|: {}", o.aut_order);
                println!("|Aut_c|: {}", o.aut_c_order);
                println!("|Inn|: {}", o.inn_order);
                println!("|Out_c|: {}", o.out_c_order);
                for r in &reps {
                    println!("  {r}");
                }
            }
            Ok(0)
        }
        Command::Quadclass => {
            let classes = classify_epsilons();
            if cli.json {
                let v: Vec<_> = classes
                    .iter()
                    .map(|c| {
                        json!({
                            "representative": c.representative.to_string(),
                            "members": c.members.iter().map(|(e, w)| json!({
                                "eps": e.to_string(),
                                "g": w.g.to_string(),
                                "h": w.h.to_string(),
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                print_json(&json!({ "classes": v }));
            } else {
                println!("{} classes", classes.len());
                for c in &classes {
                    println!(
                        "class of {} ({} members)",
                        c.representative,
                        c.members.len()
                    );
                    for (e, w) in &c.members {
                        println!("  {e}  g = {}  h = {}", w.g, w.h);
                    }
                }
            }
            Ok(0)
        }
        Command::Survey { dir, report: out } => {
            let rows = report::survey(dir, caps.elem, caps.aut)
                .with_context(|| format!("reading directory {}", dir.display()))?;
            let text = if cli.json {
                serde_json::to_string_pretty(&rows)? + "\n"
            } else {
                report::render_survey(&rows)
            };
            std::fs::write(out, &text).with_context(|| format!("writing {}", out.display()))?;
            print!("{text}");
            Ok(0)
        }
        Command::Reproduce {
            n_max,
            inject_fault,
        } => {
            let claims = report::reproduce(ReproduceOptions {
                n_max: *n_max as usize,
                elem_cap: caps.elem,
                aut_cap: caps.aut,
                corrupt: *inject_fault,
            });
            let ok = claims.iter().all(|c| c.passed);
            if cli.json {
                print_json(&json!({ "claims": claims, "passed": ok }));
            } else {
                for c in &claims {
                    println!("{c}");
                }
                println!(
                    "{}",
                    if ok {
                        "all claims PASS"
                    } else {
                        "some claims FAIL"
                    }
                );
            }
            Ok(if ok { 0 } else { CLAIM_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let io = e.chain().any(|c| c.is::<std::io::Error>());
            ExitCode::from(if io { IO } else { USAGE })
        }
    }
}
