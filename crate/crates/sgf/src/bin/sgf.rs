//! Thin command-line front end over the library pipeline.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sgf::analysis::{analyze, AnalysisDocument, AnalyzeOptions};
use sgf::config::Limits;
use sgf::en_complex::{
    build_en_complex, canonical_presentation_degrees, default_hilbert_window, verify_complex,
    verify_exactness_by_hilbert,
};
use sgf::error::Error;
use sgf::ideal::{buchberger, mu, MonomialOrder, Tiebreak};
use sgf::rfmatrix::{check_column_positivity, find_cyclic_form, rf_matrices, top_row_monomials};
use sgf::scan::{run_scan, ScanInput, CSV_HEADER, CSV_SCHEMA};
use sgf::semigroup::NumericalSemigroup;
use sgf::theorem::{build_cyclic_presentation, verify_theorem};

#[derive(Parser)]
#[command(
    name = "sgf",
    about = "Numerical semigroup invariants and determinantal presentations of their toric ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit one JSON document (or JSON lines in scan mode).
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV (scan mode only; the default there).
    #[arg(long, global = true)]
    csv: bool,
    /// Degree bound for the generator sweep.
    #[arg(long, global = true, env = "SGF_MAX_DEGREE")]
    max_degree: Option<u64>,
    /// S-pair budget for Groebner completion.
    #[arg(long, global = true, env = "SGF_PAIR_BUDGET")]
    pair_budget: Option<usize>,
    /// Skip the Eagon-Northcott certificates in analyze.
    #[arg(long, global = true, env = "SGF_NO_EN")]
    no_en: bool,
    /// Tie-breaking rule of the monomial order.
    #[arg(long, global = true, env = "SGF_SEED_ORDER", default_value = "revlex",
          value_parser = parse_tiebreak)]
    seed_order: Tiebreak,
}

fn parse_tiebreak(s: &str) -> Result<Tiebreak, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline for one semigroup.
    Analyze { generators: Vec<u64> },
    /// Gaps, Frobenius number, pseudo-Frobenius numbers, type.
    Pf { generators: Vec<u64> },
    /// Row-factorization matrices with per-matrix checks.
    Rf {
        generators: Vec<u64>,
        /// Restrict to one pseudo-Frobenius number.
        #[arg(long)]
        alpha: Option<u64>,
    },
    /// Witness decision, cyclic presentation, and consequence checks.
    Theorem { generators: Vec<u64> },
    /// Minimal generators of the toric ideal with witnesses and a
    /// reduced Groebner basis.
    Ideal { generators: Vec<u64> },
    /// Eagon-Northcott complex of the cyclic presentation with its
    /// certificates.
    En { generators: Vec<u64> },
    /// Batch classification with CSV or JSON-lines output.
    Scan {
        #[command(subcommand)]
        target: ScanTarget,
    },
}

#[derive(Subcommand)]
enum ScanTarget {
    /// Arithmetic progressions <n, n+alpha, ..., n+(n-1)alpha> over
    /// coprime pairs from the two inclusive ranges (like 3..6 or 4).
    Family { n_range: String, alpha_range: String },
    /// Every minimal system with generators at most --max-gen and
    /// embedding dimension from 3 to --max-embdim.
    All {
        #[arg(long)]
        max_gen: u64,
        #[arg(long)]
        max_embdim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn limits(common: &Common) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = env_u64("SGF_MAX_GENERATOR") {
        l.max_generator = v;
    }
    if let Some(v) = env_u64("SGF_MAX_TABLE_LEN") {
        l.max_table_len = v as usize;
    }
    if let Some(v) = env_u64("SGF_NODE_BUDGET") {
        l.node_budget = v as usize;
    }
    if let Some(v) = env_u64("SGF_MAX_RF_MATRICES") {
        l.max_rf_matrices = v as usize;
    }
    if let Some(p) = common.pair_budget {
        l.pair_budget = p;
    }
    l
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn run(cli: &Cli) -> Result<(), Error> {
    let common = &cli.common;
    let limits = limits(common);
    let options = AnalyzeOptions {
        tiebreak: common.seed_order,
        limits: limits.clone(),
        max_degree: common.max_degree,
        no_en: common.no_en,
    };
    match &cli.command {
        Command::Analyze { generators } => {
            let doc = analyze(generators, &options)?;
            if common.json {
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                print_analysis(&doc);
            }
        }
        Command::Pf { generators } => {
            let h = NumericalSemigroup::with_limits(generators, &limits)?;
            if common.json {
                let doc = serde_json::json!({
                    "minimal_generators": h.generators(),
                    "frobenius": h.frobenius(),
                    "genus": h.genus(),
                    "gaps": h.gaps(),
                    "pf": h.pseudo_frobenius(),
                    "type": h.semigroup_type(),
                    "almost_symmetric": h.is_almost_symmetric(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("minimal generators : {:?}", h.generators());
                println!("frobenius          : {}", h.frobenius());
                println!("genus              : {}", h.genus());
                println!("gaps               : {:?}", h.gaps());
                println!("PF                 : {:?}", h.pseudo_frobenius());
                println!("type               : {}", h.semigroup_type());
                println!("almost symmetric   : {}", h.is_almost_symmetric());
            }
        }
        Command::Rf { generators, alpha } => {
            let h = NumericalSemigroup::with_limits(generators, &limits)?;
            let alphas: Vec<u64> = match alpha {
                Some(a) => vec![*a],
                None => h.pseudo_frobenius().to_vec(),
            };
            let mut sections = Vec::new();
            for a in alphas {
                let matrices = rf_matrices(&h, a, &limits)?;
                let mut items = Vec::new();
                for m in &matrices {
                    let columns_positive = check_column_positivity(m, &h)?;
                    let cyclic = find_cyclic_form(m);
                    let top: Vec<String> = top_row_monomials(m, &h)
                        .iter()
                        .map(|f| f.to_string())
                        .collect();
                    items.push(serde_json::json!({
                        "entries": m.entries(),
                        "columns_positive": columns_positive,
                        "cyclic": cyclic.as_ref().map(|c| serde_json::json!({
                            "permutation": c.permutation.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                            "ells": c.ells,
                        })),
                        "top_row": top,
                    }));
                }
                sections.push(serde_json::json!({ "alpha": a, "matrices": items }));
            }
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "generators": h.generators(),
                        "rf": sections,
                    }))
                    .unwrap()
                );
            } else {
                for section in &sections {
                    let a = &section["alpha"];
                    let matrices = section["matrices"].as_array().unwrap();
                    println!("alpha = {a}: {} matrix(es)", matrices.len());
                    for (i, item) in matrices.iter().enumerate() {
                        println!("  matrix {}:", i + 1);
                        for row in item["entries"].as_array().unwrap() {
                            println!("    {row}");
                        }
                        println!("    columns positive : {}", item["columns_positive"]);
                        println!("    cyclic           : {}", item["cyclic"]);
                        println!("    top row          : {}", item["top_row"]);
                    }
                }
            }
        }
        Command::Theorem { generators } => {
            let h = NumericalSemigroup::with_limits(generators, &limits)?;
            let report = verify_theorem(&h, common.seed_order, &limits)?;
            if common.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("n                : {}", report.n);
                println!("PF               : {:?}", report.pf);
                println!("witnesses        : {:?}", report.witnesses);
                println!("determinantal    : {}", !report.witnesses.is_empty());
                println!("almost symmetric : {}", report.almost_symmetric);
                println!("mu               : {}", report.mu);
                if let Some(p) = &report.presentation {
                    println!("permutation      : {:?}", p.permutation);
                    println!("ells             : {:?}", p.ells);
                    println!("top row          : {:?}", p.top);
                    println!("bottom row       : {:?}", p.bottom);
                }
                if let Some(c) = &report.assertion_checks {
                    println!("checks           : ell_minimality={} degree_offset={} pf_multiples={} almost_symmetric={}",
                        c.ell_minimality, c.degree_offset, c.pf_multiples, c.almost_symmetric);
                }
                if let Some(eq) = report.ideal_equal {
                    println!("ideal equality   : {eq}");
                }
            }
        }
        Command::Ideal { generators } => {
            let h = NumericalSemigroup::with_limits(generators, &limits)?;
            let report = mu(&h, common.max_degree, common.seed_order, &limits)?;
            let order = MonomialOrder::new(h.generators(), common.seed_order);
            let gb = buchberger(&report.witnesses, &order, limits.pair_budget)?;
            if common.json {
                let doc = serde_json::json!({
                    "generators": h.generators(),
                    "mu": report,
                    "groebner_basis": gb.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("mu           : {}", report.total);
                println!("degree bound : {}", report.degree_bound);
                for (d, count) in &report.per_degree {
                    println!("  degree {d:>4} : {count}");
                }
                println!("witnesses:");
                for w in &report.witnesses {
                    println!("  {w}");
                }
                println!("reduced Groebner basis ({} elements):", gb.len());
                for b in &gb {
                    println!("  {b}");
                }
            }
        }
        Command::En { generators } => {
            let h = NumericalSemigroup::with_limits(generators, &limits)?;
            let report = verify_theorem(&h, common.seed_order, &limits)?;
            let Some(alpha) = report.alpha else {
                eprintln!(
                    "error: the toric ideal of {:?} is not determinantal; no cyclic presentation exists",
                    h.generators()
                );
                std::process::exit(2);
            };
            let (_, _, presentation) =
                build_cyclic_presentation(&h, alpha, common.seed_order, &limits)?;
            let complex = build_en_complex(&presentation, &h)?;
            let window = default_hilbert_window(&complex);
            let complex_ok = verify_complex(&complex);
            let hilbert_ok = verify_exactness_by_hilbert(&complex, &h, window);
            let canonical = canonical_presentation_degrees(&complex);
            if common.json {
                let doc = serde_json::json!({
                    "generators": h.generators(),
                    "alpha": alpha,
                    "ranks": complex.terms.iter().map(|t| t.rank).collect::<Vec<_>>(),
                    "twists": complex.terms.iter().map(|t| t.twists()).collect::<Vec<_>>(),
                    "complex_ok": complex_ok,
                    "hilbert_ok": hilbert_ok,
                    "hilbert_window": window,
                    "canonical_degrees": canonical,
                    "pf": h.pseudo_frobenius(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("alpha             : {alpha}");
                println!(
                    "ranks             : {:?}",
                    complex.terms.iter().map(|t| t.rank).collect::<Vec<_>>()
                );
                for (q, t) in complex.terms.iter().enumerate() {
                    println!("  C_{q} twists : {:?}", t.twists());
                }
                println!("d.d = 0           : {complex_ok}");
                println!("hilbert certified : {hilbert_ok} (window {window})");
                println!("canonical degrees : {canonical:?}");
                println!("PF                : {:?}", h.pseudo_frobenius());
            }
        }
        Command::Scan { target } => {
            let input = match target {
                ScanTarget::Family { n_range, alpha_range } => ScanInput::Family {
                    n: parse_range(n_range)?,
                    alpha: parse_range(alpha_range)?,
                },
                ScanTarget::All {
                    max_gen,
                    max_embdim,
                } => ScanInput::All {
                    max_generator: *max_gen,
                    embdim: (3, *max_embdim),
                },
            };
            let results = run_scan(&input, common.seed_order, &limits);
            if common.json {
                for (_, result) in &results {
                    match result {
                        Ok(record) => println!("{}", serde_json::to_string(record).unwrap()),
                        Err(e) => eprintln!("reject: {e}"),
                    }
                }
            } else {
                println!("#schema {CSV_SCHEMA}");
                println!("{CSV_HEADER}");
                for (gens, result) in &results {
                    match result {
                        Ok(record) => println!("{}", record.csv_line()),
                        Err(e) => eprintln!("reject: generators={gens:?} error={e}"),
                    }
                }
            }
        }
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<(u64, u64), Error> {
    let parsed = if let Some((lo, hi)) = s.split_once("..") {
        lo.parse().ok().zip(hi.parse().ok())
    } else {
        s.parse().ok().map(|v: u64| (v, v))
    };
    match parsed {
        Some(range) => Ok(range),
        None => {
            eprintln!("error: cannot parse range {s:?}; expected forms like 3..6 or 4");
            std::process::exit(2);
        }
    }
}

fn print_analysis(doc: &AnalysisDocument) {
    println!("input generators   : {:?}", doc.input_generators);
    println!(
        "minimal generators : {:?}{}",
        doc.minimal_generators,
        if doc.reduced { "  (reduced)" } else { "" }
    );
    println!("embedding dim      : {}", doc.embedding_dimension);
    println!("frobenius          : {}", doc.frobenius);
    println!("genus              : {}", doc.genus);
    println!("PF                 : {:?}", doc.pf);
    println!("type               : {}", doc.semigroup_type);
    println!("almost symmetric   : {}", doc.almost_symmetric);
    println!("determinantal      : {}", doc.determinantal);
    match &doc.theorem {
        None => println!("theorem            : skipped (needs at least 3 generators)"),
        Some(t) => {
            println!("witnesses          : {:?}", t.witnesses);
            if let Some(p) = &t.presentation {
                println!("presentation       : top    {:?}", p.top);
                println!("                     bottom {:?}", p.bottom);
                println!("ells               : {:?}", p.ells);
            }
            if let Some(c) = &t.assertion_checks {
                println!(
                    "checks             : ell_minimality={} degree_offset={} pf_multiples={} almost_symmetric={}",
                    c.ell_minimality, c.degree_offset, c.pf_multiples, c.almost_symmetric
                );
            }
            if let Some(eq) = t.ideal_equal {
                println!("ideal equality     : {eq}");
            }
        }
    }
    println!("mu                 : {}", doc.mu.total);
    for (d, count) in &doc.mu.per_degree {
        println!("  degree {d:>4}      : {count}");
    }
    if let Some(en) = &doc.en {
        println!("EN ranks           : {:?}", en.ranks);
        println!("EN complex ok      : {}", en.complex_ok);
        println!(
            "EN hilbert ok      : {} (window {})",
            en.hilbert_ok, en.hilbert_window
        );
        println!("canonical degrees  : {:?}", en.canonical_degrees);
    }
}
