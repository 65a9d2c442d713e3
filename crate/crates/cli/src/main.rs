use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use localchrom::canon::is_isomorphic;
use localchrom::colouring::{chromatic_number, k_colourable};
use localchrom::decompose::{decompose_c7bar, decompose_h2plus, verify_profile, AnchorKind};
use localchrom::families::{generate, FamilyId};
use localchrom::graph::Graph;
use localchrom::hom::{find_homomorphism, find_subgraph};
use localchrom::io::{emit_compact, emit_graph, parse_graph, parse_graph_with_weights, to_dot};
use localchrom::local::{is_edge_maximal_locally_bipartite, odd_wheel};
use localchrom::search::{enumerate_extremal_with, SearchOptions};
use localchrom::verify::{verify_paper, VerifyOptions};
use localchrom::weighting::{optimal_weighting, verify_weighting};
use localchrom::{fmt_rat, parse_rat, Rational};

#[derive(Parser)]
#[command(name = "localchrom", version, about = "Exact tools for locally bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Anchor {
    Auto,
    C7bar,
    H2plus,
}

#[derive(Subcommand)]
enum Command {
    /// List or emit the named graph families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Report local bipartiteness, twin-freeness and edge-maximality.
    Check { file: PathBuf },
    /// Find a homomorphism (or an embedding with --induced/--iso) from G to H.
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Look for an induced copy of G in H.
        #[arg(long, conflicts_with = "iso")]
        induced: bool,
        /// Look for an isomorphism.
        #[arg(long)]
        iso: bool,
    },
    /// Chromatic number with an optimal colouring.
    Chi { file: PathBuf },
    /// Decide k-colourability.
    Colour {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Optimal blow-up weighting; weights in the file are checked instead.
    Weight {
        file: PathBuf,
        /// Report whether t* exceeds this rational.
        #[arg(long, value_parser = rational)]
        beats: Option<Rational>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate twin-free edge-maximal locally bipartite graphs beating a ratio.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational)]
        beats: Rational,
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write the results here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract a homomorphism certificate around a C7BAR or H2PLUS copy.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        anchor: Anchor,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full minimum-degree pipeline and report the verdict.
    VerifyProfile {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every acceptance claim.
    VerifyPaper {
        /// Claim ids or tags to run (repeatable).
        #[arg(long)]
        only: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Per-claim limit in seconds; a claim that hits it is reported as SKIP.
        #[arg(long)]
        timeout: Option<f64>,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// List family ids with descriptions.
    List,
    /// Emit a family member, e.g. `DELTA(3)` or `wheel7`.
    Emit {
        id: String,
        #[arg(long, conflicts_with = "compact")]
        dot: bool,
        #[arg(long)]
        compact: bool,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

fn read_text(path: &PathBuf) -> Fallible<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
    }
}

fn read_graph(path: &PathBuf) -> Fallible<Graph> {
    parse_graph(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Fallible<ExitCode> {
    match cli.command {
        Command::Families { action: FamiliesAction::List } => {
            for id in FamilyId::catalogue() {
                println!("{id}\t{}", id.description());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Families { action: FamiliesAction::Emit { id, dot, compact } } => {
            let g = generate(id.parse::<FamilyId>()?)?;
            if dot {
                print!("{}", to_dot(&g, None));
            } else if compact {
                println!("{}", emit_compact(&g));
            } else {
                print!("{}", emit_graph(&g));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file } => {
            let g = read_graph(&file)?;
            let wheel = odd_wheel(&g);
            println!("locally-bipartite: {}", yes_no(wheel.is_none()));
            println!("twin-free: {}", yes_no(g.is_twin_free()));
            println!("edge-maximal: {}", yes_no(wheel.is_none() && is_edge_maximal_locally_bipartite(&g)));
            if let Some(w) = wheel {
                println!("odd-wheel: {w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { g, h, induced, iso } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let map = if iso {
                (g.n() == h.n() && g.edge_count() == h.edge_count() && is_isomorphic(&g, &h))
                    .then(|| find_subgraph(&g, &h, true))
                    .flatten()
            } else if induced {
                find_subgraph(&g, &h, true)
            } else {
                find_homomorphism(&g, &h).map(|c| c.map)
            };
            match map {
                Some(m) => {
                    println!("YES map: {}", join(&m));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NO");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Chi { file } => {
            let g = read_graph(&file)?;
            let (chi, c) = chromatic_number(&g);
            println!("chi={chi} colouring: {}", join(&c.colours));
            Ok(ExitCode::SUCCESS)
        }
        Command::Colour { file, k } => {
            let g = read_graph(&file)?;
            match k_colourable(&g, k) {
                Some(c) => {
                    println!("k={k} colouring: {}", join(&c.colours));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NOT-{k}-COLOURABLE");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Weight { file, beats, format } => {
            let (g, weights) = parse_graph_with_weights(&read_text(&file)?)?;
            if let Some(ws) = weights {
                let c = beats.ok_or("a weighted file needs --beats to check against")?;
                let ok = verify_weighting(&g, &ws, &c)?;
                println!("{}", if ok { "BEATS" } else { "DOES-NOT-BEAT" });
                return Ok(ExitCode::SUCCESS);
            }
            let w = optimal_weighting(&g)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&w)?),
                Format::Text => {
                    let ws: Vec<String> = w.weights.iter().map(fmt_rat).collect();
                    println!("t*={} omega: {}", fmt_rat(&w.optimum), ws.join(","));
                    if let Some(c) = &beats {
                        println!("{}", if w.beats(c) { "BEATS" } else { "DOES-NOT-BEAT" });
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { n, beats, resume, checkpoint, out } => {
            let opts = SearchOptions { checkpoint, resume };
            let r = enumerate_extremal_with(n, &beats, &opts)?;
            for l in &r.levels {
                let lb = l.locally_bipartite.map_or("-".to_string(), |c| c.to_string());
                eprintln!("n={} locally-bipartite={lb} found={}", l.n, l.found);
            }
            match out {
                Some(path) => fs::write(&path, r.to_lines())?,
                None => print!("{}", r.to_lines()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file, anchor, format } => {
            let g = read_graph(&file)?;
            let kind = match anchor {
                Anchor::C7bar => AnchorKind::C7Bar,
                Anchor::H2plus => AnchorKind::H2Plus,
                Anchor::Auto => {
                    let c7 = generate(FamilyId::C7Bar)?;
                    if find_subgraph(&c7, &g, false).is_some() {
                        AnchorKind::C7Bar
                    } else {
                        AnchorKind::H2Plus
                    }
                }
            };
            let cert = match kind {
                AnchorKind::C7Bar => decompose_c7bar(&g),
                AnchorKind::H2Plus => decompose_h2plus(&g),
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&cert)?),
                Format::Text => print!("{}", cert.to_text()),
            }
            eprintln!("{}", cert.summary());
            Ok(exit(cert.outcome.is_hom()))
        }
        Command::VerifyProfile { file, format } => {
            let g = read_graph(&file)?;
            let r = verify_profile(&g)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
                Format::Text => print!("{}", r.to_text()),
            }
            Ok(exit(r.ok()))
        }
        Command::VerifyPaper { only, format, timeout } => {
            let timeout = match timeout {
                Some(t) if !(t.is_finite() && t > 0.0) => {
                    return Err(format!("--timeout must be positive, got {t}").into())
                }
                t => t.map(Duration::from_secs_f64),
            };
            let r = verify_paper(&VerifyOptions { only, timeout });
            if r.results.is_empty() {
                return Err("no claim matches --only".into());
            }
            match format {
                Format::Json => println!("{}", r.to_json()),
                Format::Text => print!("{}", r.to_text()),
            }
            Ok(exit(r.ok()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("LOCALCHROM_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
                    eprintln!("warning: LOCALCHROM_THREADS ignored: {e}");
                }
            }
            _ => eprintln!("warning: LOCALCHROM_THREADS must be a positive integer, got `{v}`"),
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
