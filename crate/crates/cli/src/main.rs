//! Command-line interface: build nu/chi for one group, run the corpus
//! verification pipeline, or list the built-in corpus.
//!
//! Exit codes: 0 all pass, 1 any check failed, 2 usage or parse error,
//! 3 oversize skips present under `--strict`.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use nuchi_core::constructions::{build_chi, build_nu, realize_group, BuildOptions};
use nuchi_core::corpus::{corpus, corpus_from_file, CorpusEntry};
use nuchi_core::filter::TagFilter;
use nuchi_core::fingerprint::Fingerprint;
use nuchi_core::limits::Limits;
use nuchi_core::presentation::{parse_group, GroupInput};
use nuchi_core::subgroup::Subgroup;
use nuchi_core::verify::{run_all, Profile, RunOptions};

#[derive(Parser)]
#[command(name = "nuchi", version, about = "Exact nu(G)/chi(G) construction and verification engine for small finite p-groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Realize one group and build nu(G) or chi(G), printing orders and
    /// subgroup fingerprints.
    Build {
        /// Presentation file path, or `builtin:NAME` for a corpus entry.
        #[arg(long)]
        group: String,
        /// Which construction to build.
        #[arg(long, value_enum)]
        construction: Construction,
        /// Instantiate nu relators over generator triples only
        /// (experimental reduction).
        #[arg(long)]
        generator_triples: bool,
        /// Coset budget for enumerations.
        #[arg(long)]
        max_cosets: Option<u64>,
    },
    /// Run the verification pipeline over the corpus.
    Verify {
        /// Comma-separated theorem selection.
        #[arg(long, default_value = "A,B,C")]
        theorems: String,
        /// Tag filter expression, e.g. "p=2 and not slow".
        #[arg(long, default_value = "")]
        filter: String,
        /// quick excludes slow-tagged entries; full runs everything with
        /// raised budgets.
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Exit 3 when any check was skipped as oversize.
        #[arg(long)]
        strict: bool,
        /// Verify a user corpus file instead of the built-in corpus.
        #[arg(long)]
        corpus: Option<std::path::PathBuf>,
        /// Coset budget for enumerations.
        #[arg(long)]
        max_cosets: Option<u64>,
    },
    /// Corpus inspection.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List built-in corpus entries with their tags.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Nu,
    Chi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                nuchi_core::Error::Parse { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> nuchi_core::Result<ExitCode> {
    match cli.cmd {
        Cmd::Build {
            group,
            construction,
            generator_triples,
            max_cosets,
        } => {
            let mut limits = Limits::from_env();
            if let Some(mc) = max_cosets {
                limits.max_cosets = mc;
                // An explicit coset budget also lifts the default triple
                // guard; the user asked for a bigger build.
                limits = limits.full_profile();
                limits.max_cosets = mc;
            }
            let input = load_group(&group)?;
            build_command(&input, construction, generator_triples, limits)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            theorems,
            filter,
            profile,
            seed,
            json,
            strict,
            corpus: corpus_path,
            max_cosets,
        } => {
            let mut limits = Limits::from_env();
            if let Some(mc) = max_cosets {
                limits.max_cosets = mc;
            }
            let theorems: Vec<char> = theorems
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().chars().next().unwrap_or(' ').to_ascii_uppercase())
                .collect();
            let filter = TagFilter::parse(&filter)?;
            let entries: Vec<CorpusEntry> = match corpus_path {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        nuchi_core::Error::Parse {
                            line: 0,
                            col: 0,
                            msg: format!("cannot read {}: {e}", path.display()),
                        }
                    })?;
                    corpus_from_file(&text)?
                }
                None => corpus(),
            };
            let opts = RunOptions {
                theorems,
                filter,
                profile: match profile {
                    ProfileArg::Quick => Profile::Quick,
                    ProfileArg::Full => Profile::Full,
                },
                seed,
                limits,
            };
            let report = run_all(&entries, &opts);
            print!("{}", report.render_text());
            if let Some(path) = json {
                std::fs::write(&path, report.to_json()).map_err(|e| nuchi_core::Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            if report.any_failure() {
                Ok(ExitCode::from(1))
            } else if strict && report.any_oversize() {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Corpus { cmd: CorpusCmd::List } => {
            for e in corpus() {
                println!(
                    "{:14} order {:>4}  [{}]",
                    e.name,
                    e.expected_order,
                    e.tag_strings().join(", ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_group(spec: &str) -> nuchi_core::Result<GroupInput> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let entry = corpus()
            .into_iter()
            .find(|e| e.name == name)
            .ok_or_else(|| nuchi_core::Error::Parse {
                line: 0,
                col: 0,
                msg: format!("no builtin corpus entry named {name:?}"),
            })?;
        entry.input()
    } else {
        let text = std::fs::read_to_string(spec).map_err(|e| nuchi_core::Error::Parse {
            line: 0,
            col: 0,
            msg: format!("cannot read {spec}: {e}"),
        })?;
        parse_group(&text)
    }
}

fn subgroup_line(label: &str, sub: &Subgroup, limits: &Limits) -> String {
    match Fingerprint::of_subgroup(sub, limits) {
        Ok(fp) => format!("  {label}: {fp}"),
        Err(e) => format!("  {label}: order {} ({e})", sub.order),
    }
}

fn build_command(
    input: &GroupInput,
    construction: Construction,
    generator_triples: bool,
    limits: Limits,
) -> nuchi_core::Result<()> {
    let g: Arc<_> = realize_group(input, &limits)?;
    println!("{}: order {}", input.presentation.label, g.order());
    let opts = BuildOptions {
        generator_triples,
        limits,
    };
    match construction {
        Construction::Nu => {
            let nu = build_nu(&g, &input.presentation, &opts)?;
            println!("|nu(G)| = {}", nu.nu.order());
            println!("{}", subgroup_line("[G,G^phi]", &nu.tensor, &limits));
            println!("{}", subgroup_line("Delta(G)", &nu.delta, &limits));
            println!("{}", subgroup_line("mu(G)", &nu.mu, &limits));
            println!("  M(G) = mu/Delta: {}", nu.schur_fingerprint);
        }
        Construction::Chi => {
            let chi = build_chi(&g, &input.presentation, &opts)?;
            println!("|chi(G)| = {}", chi.chi.order());
            println!("{}", subgroup_line("L(G)", &chi.l, &limits));
            println!("{}", subgroup_line("D(G)", &chi.d, &limits));
            println!("{}", subgroup_line("W(G)", &chi.w, &limits));
            println!("{}", subgroup_line("R(G)", &chi.r, &limits));
            println!("{}", subgroup_line("chi'(G)", &chi.chi_derived, &limits));
            println!("  |T(G)| = {}", chi.t_order);
        }
    }
    Ok(())
}
