//! Command-line front end: classification checks, fillings, decompositions,
//! homology, and the named/random generators, over the JSON complex format.
//!
//! Exit codes encode three-valued verdicts for scripting: 0 = definite
//! verdict (or plain success), 2 = unknown within budget, 1 = input error.

mod cache;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use momac::collapse::{is_collapsible, verify_collapse, Collapsibility, CollapseCertificate};
use momac::complex::SimplicialComplex;
use momac::config::Budgets;
use momac::decomp::{bracket_word, decompose_w, decompose_z, full_report};
use momac::deletable::{is_deletable, is_totally_deletable, Deletability};
use momac::directed_mf::{
    derive_mf_ordering, dual_shellable_via_ordering, is_directed_mf, verify_directed_mf,
    DirectedMf, DirectedMfCertificate, ViaOrdering,
};
use momac::duality::alexander_dual;
use momac::filling::{find_filling, is_totally_fillable, FillingOutcome, TotallyFillable};
use momac::generate;
use momac::hierarchy::hierarchy_report;
use momac::homology::{
    reduced_homology, reduced_homology_of_subcomplex, zk_betti_from_subcomplexes,
};
use momac::shelling::{is_shellable, verify_shelling, Shellability, ShellingCertificate};
use momac::vertex_set::{vertex_set_from_one_based, VertexSet};

use cache::Cache;
use input::{complex_to_file, read_complex};

#[derive(Parser)]
#[command(name = "momac", version, about = "moment-angle complex combinatorics")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the data-parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cache directory (also via MOMAC_CACHE_DIR); no caching when unset.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Node budget for one collapse search.
    #[arg(long, global = true, default_value_t = Budgets::default().collapse_nodes)]
    collapse_budget: u64,
    /// Move budget for fundamental-group simplification.
    #[arg(long, global = true, default_value_t = Budgets::default().tietze_moves)]
    tietze_budget: u64,
    /// Candidate budget for one filling search.
    #[arg(long, global = true, default_value_t = Budgets::default().fill_candidates)]
    fill_budget: u64,
    /// Facet-subset budget for one deletability search.
    #[arg(long, global = true, default_value_t = Budgets::default().deletion_candidates)]
    deletion_budget: u64,
    /// Node budget for ordering searches (shellings, filtrations).
    #[arg(long, global = true, default_value_t = Budgets::default().order_nodes)]
    search_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct InputArg {
    /// Path to a JSON complex; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander dual over an explicit ground set.
    Dual {
        #[command(flatten)]
        input: InputArg,
        /// Ground set as 1-based vertices, e.g. "1,2,3,4"; defaults to the
        /// complex's own ground set.
        #[arg(long)]
        ground_set: Option<String>,
    },
    /// Decision procedures with certificates.
    Check {
        property: Property,
        #[command(flatten)]
        input: InputArg,
    },
    /// Canonical fillings of every full subcomplex.
    Fillings {
        #[command(flatten)]
        input: InputArg,
    },
    /// Wedge decomposition of the moment-angle complex.
    Decompose {
        #[command(flatten)]
        input: InputArg,
        /// Sphere dimensions n_1,...,n_m of the input spheres; all 1 gives
        /// the moment-angle case.
        #[arg(long)]
        dims: Option<String>,
        /// Emit the bracket word of every summand.
        #[arg(long)]
        brackets: bool,
        /// Cross-check the summand counts against the homology oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Exact reduced integer homology.
    Homology {
        #[command(flatten)]
        input: InputArg,
        /// Also list the homology of every full subcomplex.
        #[arg(long)]
        all_subcomplexes: bool,
    },
    /// Full end-to-end report: hierarchy, decomposition, brackets, oracle.
    Report {
        #[command(flatten)]
        input: InputArg,
    },
    /// Named families and seeded random complexes.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Collapsible,
    Shellable,
    Deletable,
    TotallyDeletable,
    DirectedMf,
    DualShellable,
    Fillable,
    TotallyFillable,
    Hierarchy,
}

#[derive(Subcommand)]
enum Family {
    /// k-skeleton of the n-simplex.
    Skeleton {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: i32,
    },
    /// Boundary of the simplex on m vertices.
    Boundary {
        #[arg(long)]
        m: u32,
    },
    /// Disjoint union of ∂Δ^S and the leftover vertices of 1..=m.
    DeltaVs {
        #[arg(long)]
        m: u32,
        /// The subset S, e.g. "1,2,3".
        #[arg(long)]
        s: String,
    },
    /// The six-vertex example: two filled triangles joined by an edge.
    Paper6,
    /// m disjoint points.
    DisjointPoints {
        #[arg(long)]
        m: u32,
    },
    /// Minimal six-vertex triangulation of the real projective plane.
    Rp2,
    /// Seed-deterministic random complex.
    Random {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command hands back to `main` for printing and exit-code mapping.
struct Outcome {
    json: serde_json::Value,
    text: String,
    unknown: bool,
}

impl Outcome {
    fn definite(json: serde_json::Value, text: String) -> Self {
        Outcome {
            json,
            text,
            unknown: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap would exit 2; that code is reserved for unknown verdicts
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        momac::par::configure_threads(jobs);
    }
    let budgets = Budgets {
        collapse_nodes: cli.collapse_budget,
        tietze_moves: cli.tietze_budget,
        fill_candidates: cli.fill_budget,
        deletion_candidates: cli.deletion_budget,
        order_nodes: cli.search_budget,
        ..Budgets::default()
    };
    let cache = Cache::from_settings(cli.cache_dir.as_deref());
    match run(&cli.command, &budgets, cache.as_ref()) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("serializable output")
                ),
                Format::Text => println!("{}", outcome.text.trim_end()),
            }
            ExitCode::from(if outcome.unknown { 2 } else { 0 })
        }
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(1)
        }
    }
}

fn run(command: &Command, budgets: &Budgets, cache: Option<&Cache>) -> anyhow::Result<Outcome> {
    match command {
        Command::Dual { input, ground_set } => {
            let k = read_complex(input.input.as_deref())?;
            let ground = match ground_set {
                None => k.ground_set(),
                Some(text) => parse_vertex_list(text)?,
            };
            let dual = alexander_dual(&k, ground)?;
            let file = complex_to_file(&dual);
            Ok(Outcome::definite(
                serde_json::to_value(&file)?,
                format!("{}", dual),
            ))
        }
        Command::Check { property, input } => {
            let k = read_complex(input.input.as_deref())?;
            check(*property, &k, budgets, cache)
        }
        Command::Fillings { input } => {
            let k = read_complex(input.input.as_deref())?;
            fillings_cmd(&k, budgets, cache)
        }
        Command::Decompose {
            input,
            dims,
            brackets,
            verify,
        } => {
            let k = read_complex(input.input.as_deref())?;
            decompose_cmd(&k, budgets, dims.as_deref(), *brackets, *verify)
        }
        Command::Homology {
            input,
            all_subcomplexes,
        } => {
            let k = read_complex(input.input.as_deref())?;
            homology_cmd(&k, *all_subcomplexes)
        }
        Command::Report { input } => {
            let k = read_complex(input.input.as_deref())?;
            let report = full_report(&k, budgets)?;
            let unknown = report.totally_fillable == "unknown";
            let mut text = String::new();
            text.push_str(&format!(
                "hierarchy: directed-mf={} dual-shellable={} dual-totally-deletable={} totally-fillable={}\n",
                report.hierarchy.directed_mf,
                report.hierarchy.dual_shellable,
                report.hierarchy.dual_totally_deletable,
                report.hierarchy.totally_fillable
            ));
            if report.summands.is_empty() {
                text.push_str("no wedge decomposition (not certified totally fillable)\n");
            } else {
                text.push_str(&format!("wedge summands ({}):\n", report.summands.len()));
                for s in &report.summands {
                    text.push_str(&format!(
                        "  S^{}  I={} σ={}  {}\n",
                        s.sphere_dim, s.subset, s.sigma, s.bracket_expanded
                    ));
                }
                text.push_str(&format!("betti: {:?}\n", report.betti));
                text.push_str(&format!("oracle verified: {}\n", report.verified));
            }
            Ok(Outcome {
                json: serde_json::to_value(&report)?,
                text,
                unknown,
            })
        }
        Command::Generate { family } => {
            let k = generate_family(family)?;
            let file = complex_to_file(&k);
            let value = serde_json::to_value(&file)?;
            Ok(Outcome::definite(value.clone(), serde_json::to_string(&value)?))
        }
    }
}

fn parse_vertex_list(text: &str) -> anyhow::Result<VertexSet> {
    let vs: Vec<u32> = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| anyhow!("bad vertex list {:?}: {}", text, e))?;
    Ok(vertex_set_from_one_based(&vs)?)
}

fn generate_family(family: &Family) -> anyhow::Result<SimplicialComplex> {
    Ok(match family {
        Family::Skeleton { n, k } => generate::skeleton_of_simplex(*n, *k)?,
        Family::Boundary { m } => generate::boundary_of_simplex(*m)?,
        Family::DeltaVs { m, s } => {
            let s = parse_vertex_list(s)?;
            SimplicialComplex::delta_vs(VertexSet::full(*m), s)?
        }
        Family::Paper6 => generate::paper6(),
        Family::DisjointPoints { m } => generate::disjoint_points(*m)?,
        Family::Rp2 => generate::real_projective_plane(),
        Family::Random { m, density, seed } => generate::random_complex(*m, *density, *seed)?,
    })
}

#[derive(Serialize, Deserialize)]
struct CachedVerdict<C> {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<C>,
}

fn verdict_outcome<C: Serialize>(
    kind: &str,
    verdict: &str,
    certificate: Option<&C>,
    detail: Option<String>,
) -> anyhow::Result<Outcome> {
    let json = json!({
        "check": kind,
        "verdict": verdict,
        "certificate": certificate.map(serde_json::to_value).transpose()?,
        "detail": detail,
    });
    let mut text = format!("{}: {}", kind, verdict);
    if let Some(d) = detail {
        text.push_str(&format!(" ({})", d));
    }
    Ok(Outcome {
        json,
        text,
        unknown: verdict == "unknown",
    })
}

fn check(
    property: Property,
    k: &SimplicialComplex,
    budgets: &Budgets,
    cache: Option<&Cache>,
) -> anyhow::Result<Outcome> {
    match property {
        Property::Collapsible => {
            let key = Cache::key(k, "collapsible", budgets.collapse_nodes);
            if let Some(c) = cache {
                if let Some(hit) = c.load::<CachedVerdict<CollapseCertificate>, _>(&key, |v| {
                    v.verdict != "yes"
                        || v.certificate
                            .as_ref()
                            .is_some_and(|cert| verify_collapse(k, cert).is_ok())
                }) {
                    eprintln!("note: cache hit for {}", key);
                    return verdict_outcome(
                        "collapsible",
                        &hit.verdict,
                        hit.certificate.as_ref(),
                        None,
                    );
                }
            }
            let out = is_collapsible(k, budgets)?;
            let (verdict, cert) = match out {
                Collapsibility::Collapsible(cert) => {
                    verify_collapse(k, &cert)?;
                    ("yes", Some(cert))
                }
                Collapsibility::NotCollapsible => ("no", None),
                Collapsibility::Unknown(_) => ("unknown", None),
            };
            if let Some(c) = cache {
                c.store(
                    &key,
                    &CachedVerdict {
                        verdict: verdict.to_string(),
                        certificate: cert.clone(),
                    },
                );
            }
            verdict_outcome("collapsible", verdict, cert.as_ref(), None)
        }
        Property::Shellable => {
            let key = Cache::key(k, "shellable", budgets.order_nodes);
            if let Some(c) = cache {
                if let Some(hit) = c.load::<CachedVerdict<ShellingCertificate>, _>(&key, |v| {
                    v.verdict != "yes"
                        || v.certificate
                            .as_ref()
                            .is_some_and(|cert| verify_shelling(k, &cert.order).is_ok())
                }) {
                    eprintln!("note: cache hit for {}", key);
                    return verdict_outcome(
                        "shellable",
                        &hit.verdict,
                        hit.certificate.as_ref(),
                        None,
                    );
                }
            }
            let out = is_shellable(k, budgets);
            let (verdict, cert) = match out {
                Shellability::Shellable(cert) => {
                    verify_shelling(k, &cert.order)?;
                    ("yes", Some(cert))
                }
                Shellability::NotShellable => ("no", None),
                Shellability::Unknown(_) => ("unknown", None),
            };
            if let Some(c) = cache {
                c.store(
                    &key,
                    &CachedVerdict {
                        verdict: verdict.to_string(),
                        certificate: cert.clone(),
                    },
                );
            }
            verdict_outcome("shellable", verdict, cert.as_ref(), None)
        }
        Property::Deletable => {
            let out = is_deletable(k, budgets);
            let (verdict, cert) = match out {
                Deletability::Deletable(cert) => {
                    momac::deletable::verify_deletability(k, &cert)?;
                    ("yes", Some(cert))
                }
                Deletability::NotDeletable => ("no", None),
                Deletability::Unknown(_) => ("unknown", None),
            };
            verdict_outcome("deletable", verdict, cert.as_ref(), None)
        }
        Property::TotallyDeletable => {
            let report = is_totally_deletable(k, budgets);
            let detail = report
                .witness
                .map(|(s, v)| format!("fails at S={}, v={}", s, v + 1));
            let verdict = report.overall.clone();
            verdict_outcome("totally-deletable", &verdict, Some(&report), detail)
        }
        Property::DirectedMf => {
            let key = Cache::key(k, "directed-mf", budgets.order_nodes);
            if let Some(c) = cache {
                if let Some(hit) = c.load::<CachedVerdict<DirectedMfCertificate>, _>(&key, |v| {
                    v.verdict != "yes"
                        || v.certificate
                            .as_ref()
                            .is_some_and(|cert| verify_directed_mf(k, cert).is_ok())
                }) {
                    eprintln!("note: cache hit for {}", key);
                    let detail = match hit.certificate.as_ref() {
                        Some(c) => {
                            let ord = derive_mf_ordering(k, c)?;
                            let words: Vec<String> =
                                ord.iter().map(|s| s.to_string()).collect();
                            Some(format!(
                                "induced dual shelling order: {}",
                                words.join(" < ")
                            ))
                        }
                        None => None,
                    };
                    return verdict_outcome(
                        "directed-mf",
                        &hit.verdict,
                        hit.certificate.as_ref(),
                        detail,
                    );
                }
            }
            let out = is_directed_mf(k, budgets);
            let (verdict, cert) = match out {
                DirectedMf::DirectedMf(cert) => {
                    verify_directed_mf(k, &cert)?;
                    ("yes", Some(cert))
                }
                DirectedMf::No => ("no", None),
                DirectedMf::Unknown(_) => ("unknown", None),
            };
            if let Some(c) = cache {
                c.store(
                    &key,
                    &CachedVerdict {
                        verdict: verdict.to_string(),
                        certificate: cert.clone(),
                    },
                );
            }
            let detail = match cert.as_ref() {
                Some(c) => {
                    // a predicate failure here would contradict the dual
                    // shellability of directed filtrations; let it surface
                    let ord = derive_mf_ordering(k, c)?;
                    let words: Vec<String> = ord.iter().map(|s| s.to_string()).collect();
                    Some(format!("induced dual shelling order: {}", words.join(" < ")))
                }
                None => None,
            };
            verdict_outcome("directed-mf", verdict, cert.as_ref(), detail)
        }
        Property::DualShellable => {
            // the ordering lemma first; fall back to a direct shelling
            // search on the Alexander dual
            match dual_shellable_via_ordering(k, budgets)? {
                ViaOrdering::Ordered { dual_order, .. } => verdict_outcome(
                    "dual-shellable",
                    "yes",
                    Some(&dual_order),
                    Some("via the minimal-non-face ordering lemma".to_string()),
                ),
                ViaOrdering::Inconclusive(why) => {
                    let dual = alexander_dual(k, k.ground_set())?;
                    let out = is_shellable(&dual, budgets);
                    let (verdict, cert) = match out {
                        Shellability::Shellable(cert) => {
                            verify_shelling(&dual, &cert.order)?;
                            ("yes", Some(cert))
                        }
                        Shellability::NotShellable => ("no", None),
                        Shellability::Unknown(_) => ("unknown", None),
                    };
                    verdict_outcome(
                        "dual-shellable",
                        verdict,
                        cert.as_ref(),
                        Some(format!("ordering lemma inconclusive: {}", why)),
                    )
                }
            }
        }
        Property::Fillable => {
            let out = find_filling(k, budgets)?;
            let (verdict, cert) = match out {
                FillingOutcome::Fillable(cert) => {
                    momac::filling::verify_filling(k, &cert)?;
                    ("yes", Some(cert))
                }
                FillingOutcome::NoFilling => ("no", None),
                FillingOutcome::Unknown(_) => ("unknown", None),
            };
            verdict_outcome("fillable", verdict, cert.as_ref(), None)
        }
        Property::TotallyFillable => {
            let out = is_totally_fillable(k, budgets)?;
            let verdict = out.verdict().to_string();
            let detail = match &out {
                TotallyFillable::No { witness } => Some(format!("unfillable at I={}", witness)),
                TotallyFillable::Unknown { witness, reason } => {
                    Some(format!("undecided at I={}: {}", witness, reason))
                }
                _ => None,
            };
            verdict_outcome("totally-fillable", &verdict, out.fillings(), detail)
        }
        Property::Hierarchy => {
            let report = hierarchy_report(k, budgets)?;
            let unknown = report.verdicts().contains(&"unknown");
            let text = format!(
                "directed-mf: {}\ndual-shellable: {}\ndual-totally-deletable: {}\ntotally-fillable: {}",
                report.directed_mf,
                report.dual_shellable,
                report.dual_totally_deletable,
                report.totally_fillable
            );
            Ok(Outcome {
                json: serde_json::to_value(&report)?,
                text,
                unknown,
            })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CachedFillings {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    fillings: Option<momac::filling::ChosenFillings>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<(VertexSet, momac::filling::FillingCertificate)>>,
}

fn fillings_cmd(
    k: &SimplicialComplex,
    budgets: &Budgets,
    cache: Option<&Cache>,
) -> anyhow::Result<Outcome> {
    let key = Cache::key(k, "fillings", budgets.fill_candidates);
    let render = |verdict: &str,
                  fillings: Option<&momac::filling::ChosenFillings>|
     -> anyhow::Result<Outcome> {
        let mut text = format!("totally-fillable: {}\n", verdict);
        if let Some(f) = fillings {
            for (subset, filling) in &f.by_subset {
                let words: Vec<String> = filling.iter().map(|s| s.to_string()).collect();
                text.push_str(&format!("  F(K_{}) = {{{}}}\n", subset, words.join(", ")));
            }
        }
        Ok(Outcome {
            json: json!({
                "verdict": verdict,
                "fillings": fillings.map(serde_json::to_value).transpose()?,
            }),
            text,
            unknown: verdict == "unknown",
        })
    };

    if let Some(c) = cache {
        if let Some(hit) = c.load::<CachedFillings, _>(&key, |v| {
            if v.verdict != "yes" {
                return true;
            }
            match (&v.fillings, &v.certificates) {
                (Some(_), Some(certs)) => certs.iter().all(|(i, cert)| {
                    let sub = if k.is_face(*i) {
                        SimplicialComplex::full_simplex(*i)
                    } else {
                        match k.full_subcomplex(*i) {
                            Ok(sub) => sub,
                            Err(_) => return false,
                        }
                    };
                    momac::filling::verify_filling(&sub, cert).is_ok()
                }),
                _ => false,
            }
        }) {
            eprintln!("note: cache hit for {}", key);
            return render(&hit.verdict, hit.fillings.as_ref());
        }
    }

    let out = is_totally_fillable(k, budgets)?;
    let verdict = out.verdict().to_string();
    let (fillings, certificates) = match out {
        TotallyFillable::TotallyFillable {
            fillings,
            certificates,
        } => (Some(fillings), Some(certificates)),
        _ => (None, None),
    };
    if let Some(c) = cache {
        c.store(
            &key,
            &CachedFillings {
                verdict: verdict.clone(),
                fillings: fillings.clone(),
                certificates,
            },
        );
    }
    render(&verdict, fillings.as_ref())
}

fn decompose_cmd(
    k: &SimplicialComplex,
    budgets: &Budgets,
    dims: Option<&str>,
    brackets: bool,
    verify: bool,
) -> anyhow::Result<Outcome> {
    let out = is_totally_fillable(k, budgets)?;
    let verdict = out.verdict().to_string();
    let Some(fillings) = out.fillings() else {
        return Ok(Outcome {
            json: json!({"verdict": verdict, "summands": []}),
            text: format!("no decomposition: totally-fillable = {}", verdict),
            unknown: verdict == "unknown",
        });
    };

    let z = decompose_z(k, fillings)?;
    let graded = match dims {
        None => None,
        Some(text) => {
            let dims: Vec<u32> = text
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| anyhow!("bad dimension list {:?}: {}", text, e))?;
            Some(decompose_w(k, fillings, &dims)?)
        }
    };

    let mut rows = Vec::new();
    let mut text = String::new();
    text.push_str(&format!("wedge summands ({}):\n", z.summands.len()));
    for s in &z.summands {
        let bracket = if brackets {
            Some(bracket_word(k, fillings, s)?)
        } else {
            None
        };
        let graded_degree = graded.as_ref().map(|g| {
            g.summands
                .iter()
                .find(|t| t.subset == s.subset && t.sigma == s.sigma)
                .map(|t| t.degree)
                .expect("graded summands cover the same pairs")
        });
        text.push_str(&format!(
            "  S^{}  I={} σ={}",
            s.sphere_dim, s.subset, s.sigma
        ));
        if let Some(d) = graded_degree {
            text.push_str(&format!("  graded degree {}", d));
        }
        if let Some(b) = &bracket {
            text.push_str(&format!("  {}", b.expanded()));
        }
        text.push('\n');
        rows.push(json!({
            "I": s.subset,
            "sigma": s.sigma,
            "dim": s.sphere_dim,
            "graded_degree": graded_degree,
            "bracket": bracket.as_ref().map(|b| json!({
                "symbolic": b.symbolic(),
                "expanded": b.expanded(),
            })),
        }));
    }
    text.push_str(&format!("betti: {:?}\n", z.betti));

    let verified = if verify {
        let ranks = momac::homology::verify_filling_ranks(k, fillings)?;
        let zk = zk_betti_from_subcomplexes(k)?;
        let ok = ranks.ok && zk == z.betti;
        text.push_str(&format!("oracle verified: {}\n", ok));
        if !ok {
            bail!(
                "oracle disagreement: ranks ok = {}, betti match = {}",
                ranks.ok,
                zk == z.betti
            );
        }
        Some(ok)
    } else {
        None
    };

    Ok(Outcome {
        json: json!({
            "verdict": "yes",
            "summands": rows,
            "betti": z.betti,
            "verified": verified,
        }),
        text,
        unknown: false,
    })
}

fn homology_cmd(k: &SimplicialComplex, all_subcomplexes: bool) -> anyhow::Result<Outcome> {
    let hom = reduced_homology(k)?;
    let mut text = String::new();
    let fmt_group = |dim: i32, rank: u64, torsion: &[u128]| -> String {
        let mut parts = Vec::new();
        if rank > 0 {
            parts.push(if rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", rank)
            });
        }
        for t in torsion {
            parts.push(format!("Z/{}", t));
        }
        format!(
            "H~_{} = {}",
            dim,
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        )
    };
    if hom.is_void {
        text.push_str("void complex: no homology\n");
    } else {
        for (idx, g) in hom.groups.iter().enumerate() {
            let dim = idx as i32 - 1;
            if g.rank > 0 || !g.torsion.is_empty() || dim >= 0 {
                text.push_str(&fmt_group(dim, g.rank, &g.torsion));
                text.push('\n');
            }
        }
    }

    let mut json_value = json!({
        "is_void": hom.is_void,
        "groups": hom.groups.iter().enumerate().map(|(idx, g)| json!({
            "dim": idx as i32 - 1,
            "rank": g.rank,
            "torsion": g.torsion,
        })).collect::<Vec<_>>(),
    });

    if all_subcomplexes {
        let mut rows = Vec::new();
        text.push_str("full subcomplexes:\n");
        let subsets: Vec<VertexSet> = k
            .ground_set()
            .subsets()
            .filter(|s| !s.is_empty())
            .collect();
        for i in subsets {
            let h = reduced_homology_of_subcomplex(k, i)?;
            let nonzero = h.nonzero();
            if !nonzero.is_empty() {
                let words: Vec<String> = nonzero
                    .iter()
                    .map(|(d, g)| fmt_group(*d, g.rank, &g.torsion))
                    .collect();
                text.push_str(&format!("  K_{}: {}\n", i, words.join(", ")));
            }
            rows.push(json!({
                "subset": i,
                "groups": nonzero.iter().map(|(d, g)| json!({
                    "dim": d, "rank": g.rank, "torsion": g.torsion,
                })).collect::<Vec<_>>(),
            }));
        }
        json_value["subcomplexes"] = serde_json::Value::Array(rows);
        let zk = zk_betti_from_subcomplexes(k)?;
        text.push_str(&format!(
            "moment-angle betti from aggregation: {:?}\n",
            zk
        ));
        json_value["zk_betti"] = serde_json::to_value(&zk)?;
    }
    Ok(Outcome::definite(json_value, text))
}
