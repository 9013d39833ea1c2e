//! `veracity`: check, search, render and trust analysis from the command line,
//! plus `serve` for the HTTP API.
//!
//! Exit status is 0 on success, 1 when a proof is invalid (or a trust query has
//! no answer), 2 on usage, parse or IO errors and 3 when the server cannot start.

use std::fmt::Display;
use std::io::IsTerminal;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use veracity_core::render::{kernel_from_cited_edges, render_latex_with, render_nl_with};
use veracity_core::syntax::parse_trust_relations;
use veracity_core::{
    best_trust, parse_config, parse_judgement, parse_machine, path_weight, render_machine, ActorId, CheckReport,
    ClaimStyle, Kernel, KernelError, LatexOptions, Lexicon, NlFormat, NlOptions, ProofTree, TrustRelation, Weight,
};

#[derive(Parser)]
#[command(name = "veracity", version, about = "Proof tools for a veracity logic with actors and trust")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof tree (`.vproof`) and report every violation.
    Check {
        file: PathBuf,
        /// Trust relations the proof may cite.
        #[arg(long)]
        trust: Option<PathBuf>,
        /// Print the check report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate proofs of a goal up to the configured depth.
    Search {
        #[arg(long)]
        goal: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write one file per proof (proof-001, proof-002, ...) here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        look: Look,
    },
    /// Render a proof tree as LaTeX, natural language or the machine format.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "latex")]
        format: Format,
        #[arg(long)]
        trust: Option<PathBuf>,
        #[command(flatten)]
        look: Look,
    },
    /// Best trust weight between two actors, or the weight of a given path.
    Trust {
        file: PathBuf,
        /// Which relation to use when the file declares several.
        #[arg(long)]
        relation: Option<String>,
        #[arg(long, requires = "to", conflicts_with = "path")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        /// Comma-separated actors, e.g. `k,l,m`.
        #[arg(long, value_delimiter = ',', required_unless_present = "from")]
        path: Option<Vec<String>>,
    },
    /// Serve the HTTP API, and optionally static UI assets.
    Serve {
        #[arg(long)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        #[arg(long = "static")]
        assets: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Latex,
    Nl,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Full,
    Bare,
}

#[derive(Clone, Copy, ValueEnum)]
enum NlKind {
    Latex,
    Markdown,
}

#[derive(clap::Args)]
struct Look {
    /// Scale argument of the LaTeX environment.
    #[arg(long, default_value = "0.8")]
    scale: String,
    #[arg(long, value_enum, default_value = "full")]
    style: Style,
    /// Markup for `--format nl`.
    #[arg(long = "nl", value_enum, default_value = "latex")]
    nl: NlKind,
    /// Display names for actors and claims (TOML, or JSON by extension).
    #[arg(long)]
    lexicon: Option<PathBuf>,
}

enum Failure {
    /// Already reported on stdout.
    Invalid,
    Usage(String),
    Startup(String),
}

impl Failure {
    fn usage(what: impl Display, e: impl Display) -> Self {
        Failure::Usage(format!("{what}: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file, trust, json } => check(&file, trust.as_deref(), json),
        Command::Search {
            goal,
            config,
            format,
            out,
            look,
        } => search(&goal, &config, format, out.as_deref(), &look),
        Command::Render {
            file,
            format,
            trust,
            look,
        } => render(&file, format, trust.as_deref(), &look),
        Command::Trust {
            file,
            relation,
            from,
            to,
            path,
        } => trust(&file, relation.as_deref(), from.zip(to), path),
        Command::Serve { port, host, assets } => serve(SocketAddr::new(host, port), assets),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Startup(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn color_enabled() -> bool {
    match std::env::var("VERACITY_COLOR").as_deref() {
        Ok("0") => false,
        Ok(_) => true,
        Err(_) => std::io::stdout().is_terminal(),
    }
}

fn paint(text: &str, sgr: &str) -> String {
    if color_enabled() {
        format!("\x1b[{sgr}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(path.display(), e))
}

fn load_proof(path: &Path) -> Result<ProofTree, Failure> {
    parse_machine(&read(path)?).map_err(|e| Failure::usage(path.display(), e))
}

fn load_relations(path: &Path) -> Result<Vec<TrustRelation>, Failure> {
    parse_trust_relations(&read(path)?).map_err(|e| Failure::usage(path.display(), e))
}

fn kernel_for(trust: Option<&Path>) -> Result<Kernel, Failure> {
    match trust {
        Some(p) => Ok(Kernel::with_relations(load_relations(p)?)),
        None => Ok(Kernel::new()),
    }
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, Failure> {
    let Some(path) = path else {
        return Ok(Lexicon::default());
    };
    let text = read(path)?;
    let parsed = if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str(&text).map_err(|e| e.to_string())
    } else {
        toml::from_str(&text).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| Failure::usage(path.display(), e))
}

fn report_violations(report: &CheckReport) {
    println!("{} ({} violation{})", paint("INVALID", "31"), report.violations.len(), plural(report.violations.len()));
    for v in &report.violations {
        println!("  {}: {}: {}", v.path, paint(&v.code.to_string(), "1"), v.message);
    }
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn check(file: &Path, trust: Option<&Path>, json: bool) -> Outcome {
    let tree = load_proof(file)?;
    let report = kernel_for(trust)?.check(&tree);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialise"));
    } else if report.ok {
        println!("{}", paint("OK", "32"));
    } else {
        report_violations(&report);
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Invalid)
    }
}

fn rendered(kernel: &Kernel, tree: &ProofTree, format: Format, look: &Look, lexicon: &Lexicon) -> Result<String, Failure> {
    let result = match format {
        Format::Latex => {
            let opts = LatexOptions {
                scale: look.scale.clone(),
                claim_style: match look.style {
                    Style::Full => ClaimStyle::Full,
                    Style::Bare => ClaimStyle::Bare,
                },
            };
            render_latex_with(kernel, tree, &opts)
        }
        Format::Nl => {
            let opts = NlOptions {
                lexicon: lexicon.clone(),
                format: match look.nl {
                    NlKind::Latex => NlFormat::Latex,
                    NlKind::Markdown => NlFormat::Markdown,
                },
            };
            render_nl_with(kernel, tree, &opts)
        }
        Format::Machine => {
            let report = kernel.check(tree);
            if report.ok {
                Ok(render_machine(tree))
            } else {
                Err(KernelError::InvalidTree(Box::new(report)))
            }
        }
    };
    result.map_err(|e| match e {
        KernelError::InvalidTree(report) => {
            report_violations(&report);
            Failure::Invalid
        }
        other => Failure::Usage(other.to_string()),
    })
}

fn extension(format: Format, look: &Look) -> &'static str {
    match (format, look.nl) {
        (Format::Latex, _) => "tex",
        (Format::Nl, NlKind::Latex) => "nl.tex",
        (Format::Nl, NlKind::Markdown) => "md",
        (Format::Machine, _) => "vproof",
    }
}

fn search(goal: &str, config: &Path, format: Option<Format>, out: Option<&Path>, look: &Look) -> Outcome {
    let goal = parse_judgement(goal).map_err(|e| Failure::usage("--goal", e))?;
    let cfg = parse_config(&read(config)?).map_err(|e| Failure::usage(config.display(), e))?;
    let lexicon = load_lexicon(look.lexicon.as_deref())?;
    let kernel = cfg.kernel();
    let proofs = veracity_core::search(&cfg, &goal);

    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Failure::usage(dir.display(), e))?;
        let format = format.unwrap_or(Format::Machine);
        let width = proofs.len().to_string().len().max(3);
        for (i, t) in proofs.iter().enumerate() {
            let name = dir.join(format!("proof-{:0width$}.{}", i + 1, extension(format, look)));
            let text = rendered(&kernel, t, format, look, &lexicon)?;
            std::fs::write(&name, text).map_err(|e| Failure::usage(name.display(), e))?;
        }
    } else {
        for t in &proofs {
            match format {
                Some(f) => println!("{}", rendered(&kernel, t, f, look, &lexicon)?),
                None => println!("{}", t.conclusion),
            }
        }
    }
    println!("{} proof{}", proofs.len(), plural(proofs.len()));
    Ok(())
}

fn render(file: &Path, format: Format, trust: Option<&Path>, look: &Look) -> Outcome {
    let tree = load_proof(file)?;
    let lexicon = load_lexicon(look.lexicon.as_deref())?;
    // Without a trust file the edges the tree cites are taken at face value.
    let kernel = match trust {
        Some(_) => kernel_for(trust)?,
        None => kernel_from_cited_edges(&tree),
    };
    let text = rendered(&kernel, &tree, format, look, &lexicon)?;
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
    Ok(())
}

fn weight_text(w: &Weight) -> String {
    let frac = w.to_fraction_string();
    match w.to_decimal_string() {
        Some(dec) if dec != frac => format!("{frac} ({dec})"),
        _ => frac,
    }
}

fn trust(file: &Path, relation: Option<&str>, ends: Option<(String, String)>, path: Option<Vec<String>>) -> Outcome {
    let mut rels = load_relations(file)?;
    let rel = match relation {
        Some(name) => match rels.iter().position(|r| r.name == name) {
            Some(i) => rels.swap_remove(i),
            None => return Err(Failure::usage(file.display(), format!("no relation named `{name}`"))),
        },
        None if rels.len() == 1 => rels.remove(0),
        None => {
            let names: Vec<&str> = rels.iter().map(|r| r.name.as_str()).collect();
            return Err(Failure::usage(
                file.display(),
                format!("pick a relation with --relation (declared: {})", names.join(", ")),
            ));
        }
    };
    let actor = |s: &str| ActorId::new(s.trim()).map_err(|e| Failure::usage("actor", e));

    if let Some(path) = path {
        let actors = path.iter().map(|s| actor(s)).collect::<Result<Vec<_>, _>>()?;
        return match path_weight(&rel, &actors) {
            Ok(w) => {
                println!("{}", weight_text(&w));
                Ok(())
            }
            Err(e) => {
                println!("{}: {e}", paint("no such path", "31"));
                Err(Failure::Invalid)
            }
        };
    }
    let (from, to) = ends.expect("clap requires --from/--to without --path");
    let (from, to) = (actor(&from)?, actor(&to)?);
    match best_trust(&rel, &from, &to) {
        Some((w, via)) => {
            println!("{}", weight_text(&w));
            let via: Vec<String> = via.iter().map(ToString::to_string).collect();
            println!("via {}", via.join(" -> "));
            Ok(())
        }
        None => {
            println!("{}", paint(&format!("no trust path from {from} to {to}"), "31"));
            Err(Failure::Invalid)
        }
    }
}

fn serve(addr: SocketAddr, assets: Option<PathBuf>) -> Outcome {
    if let Some(dir) = &assets {
        if !dir.is_dir() {
            return Err(Failure::usage(dir.display(), "not a directory"));
        }
    }
    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Startup(e.to_string()))?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .map_err(|e| Failure::Startup(format!("cannot listen on {addr}: {e}")))?;
        let local = listener.local_addr().map_err(|e| Failure::Startup(e.to_string()))?;
        eprintln!("listening on http://{local}");
        tokio::select! {
            r = veracity_service::serve_on(listener, assets) => r.map_err(|e| Failure::Startup(e.to_string())),
            _ = tokio::signal::ctrl_c() => Ok(()),
        }
    })
}
