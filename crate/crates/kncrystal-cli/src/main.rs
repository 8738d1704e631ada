//! Command line front end for the tableau crystal library: enumerate the
//! tableaux of a shape, draw the crystal graph, run the cyclic sieving
//! verification, or run the whole consistency suite for one shape.
//!
//! Exit codes: 0 on success (including a positive sieving verdict and a
//! check run without failures), 1 when a verdict or check fails, 2 on
//! usage errors, 3 when a resource cap stops the run.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kncrystal::crystal::{sigma, CrystalGraph};
use kncrystal::csp::{
    check_equiv_theorem, check_orbit_theorem, check_residue_lemma, hypotheses_hold, verify_csp,
    CspReport, Hypotheses,
};
use kncrystal::enumerate::{enumerate_by_crystal, enumerate_by_filter, TableauSet, DEFAULT_CAP};
use kncrystal::qpoly::{determinant_poly, f_sp, hook_content_count, pwr_tab, pwr_wt, x_poly};
use kncrystal::{Error, KNTableau, Partition};

#[derive(Parser)]
#[command(
    name = "kncrystal",
    version,
    about = "Symplectic tableau crystals: enumeration, graphs and cyclic sieving"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all tableaux of a shape with their weight multiset
    Enumerate(CommonArgs),
    /// Emit the crystal graph of a shape
    Graph(CommonArgs),
    /// Verify the cyclic sieving statement for a shape
    Csp(CommonArgs),
    /// Run every consistency check for one shape and alphabet
    Check(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Shape as comma separated parts, for example 2,1; empty for the
    /// empty shape
    #[arg(long, default_value = "")]
    shape: String,

    /// Alphabet parameter: letters are 1..m and their barred copies
    #[arg(long)]
    m: usize,

    /// Output format; dot applies to graph only
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Abort when a set would exceed this many members
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = match &cli.command {
        Command::Enumerate(a) | Command::Graph(a) | Command::Csp(a) | Command::Check(a) => a,
    };
    if args.m == 0 {
        eprintln!("error: m must be at least 1");
        return ExitCode::from(2);
    }
    if args.format == Format::Dot && !matches!(cli.command, Command::Graph(_)) {
        eprintln!("error: dot output is only available for the graph subcommand");
        return ExitCode::from(2);
    }
    let shape = match parse_shape(&args.shape) {
        Ok(shape) => shape,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::Enumerate(_) => cmd_enumerate(&shape, args),
        Command::Graph(_) => cmd_graph(&shape, args),
        Command::Csp(_) => cmd_csp(&shape, args),
        Command::Check(_) => cmd_check(&shape, args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::CapExceeded { .. } | Error::OrbitTooLong { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn parse_shape(text: &str) -> Result<Partition, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = trimmed
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<usize>, _>>()
        .map_err(|_| format!("cannot parse shape '{text}': expected comma separated parts"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_enumerate(shape: &Partition, args: &CommonArgs) -> Result<ExitCode, Error> {
    let set = enumerate_by_filter(shape, args.m, args.cap)?;
    let text = match args.format {
        Format::Json => format!("{}\n", set.to_json_string()),
        _ => render_set_table(&set),
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn render_set_table(set: &TableauSet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "shape {}  m {}  count {}",
        set.shape(),
        set.m(),
        set.len()
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "weight: count");
    for (w, c) in set.weight_multiset() {
        let _ = writeln!(out, "  {w}: {c}");
    }
    if set.len() <= 200 {
        let _ = writeln!(out);
        let _ = writeln!(out, "members:");
        for t in set.members() {
            let _ = writeln!(out, "  {t}");
        }
    }
    out
}

#[derive(Serialize)]
struct NodeJson {
    shape: Vec<usize>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct EdgeJson {
    from: usize,
    label: usize,
    to: usize,
}

#[derive(Serialize)]
struct GraphJson {
    shape: Vec<usize>,
    m: usize,
    count: usize,
    nodes: Vec<NodeJson>,
    edges: Vec<EdgeJson>,
}

fn node_json(t: &KNTableau) -> NodeJson {
    NodeJson {
        shape: t.shape().parts().to_vec(),
        rows: t
            .rows()
            .iter()
            .map(|r| r.iter().map(|l| l.to_signed(t.m()).to_string()).collect())
            .collect(),
    }
}

fn cmd_graph(shape: &Partition, args: &CommonArgs) -> Result<ExitCode, Error> {
    let set = enumerate_by_crystal(shape, args.m, args.cap)?;
    let graph = CrystalGraph::new(set.members(), args.m)?;
    let text = match args.format {
        Format::Dot => graph.to_dot(),
        Format::Json => {
            let body = GraphJson {
                shape: shape.parts().to_vec(),
                m: args.m,
                count: graph.nodes().len(),
                nodes: graph.nodes().iter().map(node_json).collect(),
                edges: graph
                    .edges()
                    .iter()
                    .map(|&(from, label, to)| EdgeJson { from, label, to })
                    .collect(),
            };
            format!(
                "{}\n",
                serde_json::to_string(&body).expect("plain data serializes")
            )
        }
        Format::Table => render_graph_table(shape, &graph),
    };
    emit(&args.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn render_graph_table(shape: &Partition, graph: &CrystalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "crystal graph: shape {}  m {}  nodes {}  edges {}",
        shape,
        graph.m(),
        graph.nodes().len(),
        graph.edges().len()
    );
    for (idx, t) in graph.nodes().iter().enumerate() {
        let _ = writeln!(out, "  t{idx}: {t}");
    }
    let _ = writeln!(out, "edges:");
    for &(from, label, to) in graph.edges() {
        let _ = writeln!(out, "  t{from} -{label}-> t{to}");
    }
    out
}

fn cmd_csp(shape: &Partition, args: &CommonArgs) -> Result<ExitCode, Error> {
    let set = enumerate_by_filter(shape, args.m, args.cap)?;
    let report = verify_csp(&set, sigma)?;
    let text = match args.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("plain data serializes")
        ),
        _ => render_csp_table(&report),
    };
    emit(&args.out, &text)?;
    Ok(if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn describe_hypotheses(h: &Hypotheses) -> String {
    if h.hold {
        format!("n {} odd; no odd prime <= n divides m", h.n)
    } else if !h.n_odd {
        format!("n {} is even", h.n)
    } else {
        format!(
            "odd prime {} divides m",
            h.offending_prime.expect("failed without an even n")
        )
    }
}

fn fmt_census(sizes: &BTreeMap<usize, usize>) -> String {
    let body = sizes
        .iter()
        .map(|(s, c)| format!("{s}: {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn render_csp_table(report: &CspReport) -> String {
    let mut out = String::new();
    let shape = Partition::new(report.shape.clone()).expect("report shapes are valid");
    let _ = writeln!(out, "sieving check: shape {}  m {}", shape, report.m);
    let _ = writeln!(
        out,
        "hypotheses: {} (hold {})",
        describe_hypotheses(&report.hypotheses),
        report.hypotheses.hold
    );
    let _ = writeln!(out, "orbit census: {}", fmt_census(&report.census));
    let _ = writeln!(out, "   d   fixed    poly       x");
    for e in &report.evaluations {
        let _ = writeln!(
            out,
            "{:>4}{:>8}{:>8}{:>8}",
            e.d,
            e.fixed,
            fmt_opt(e.poly),
            fmt_opt(e.x)
        );
    }
    for e in &report.evaluations {
        if let Some(note) = &e.note {
            let _ = writeln!(out, "note: {note}");
        }
    }
    let _ = writeln!(out, "verdict: {}", report.verdict);
    out
}

#[derive(Serialize)]
struct CheckLine {
    name: &'static str,
    status: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct CheckReport {
    shape: Vec<usize>,
    m: usize,
    count: usize,
    f_sp: Vec<(usize, String)>,
    x: Vec<(usize, String)>,
    lines: Vec<CheckLine>,
    ok: bool,
}

fn pass_or_fail(name: &'static str, good: bool, detail: String) -> CheckLine {
    CheckLine {
        name,
        status: if good { "pass" } else { "fail" },
        detail,
    }
}

fn skipped(name: &'static str, detail: String) -> CheckLine {
    CheckLine {
        name,
        status: "skipped",
        detail,
    }
}

fn cmd_check(shape: &Partition, args: &CommonArgs) -> Result<ExitCode, Error> {
    let m = args.m;
    let set = enumerate_by_filter(shape, m, args.cap)?;
    let crystal_set = enumerate_by_crystal(shape, m, args.cap)?;
    let mut lines = Vec::new();

    lines.push(pass_or_fail(
        "enumeration routes agree",
        set == crystal_set,
        format!(
            "{} members by column filtering, {} by crystal closure",
            set.len(),
            crystal_set.len()
        ),
    ));

    let expected = hook_content_count(shape, m)?;
    lines.push(pass_or_fail(
        "cardinality matches the count formula",
        expected.to_string() == set.len().to_string(),
        format!("{} members, formula gives {expected}", set.len()),
    ));

    let pwr_consistent = set
        .members()
        .iter()
        .all(|t| pwr_wt(&t.weight(), t.size()).is_ok_and(|v| v == pwr_tab(t) as i64));
    lines.push(pass_or_fail(
        "pwr agrees between entries and weight",
        pwr_consistent,
        format!("checked {} members", set.len()),
    ));

    let symmetric = set
        .weight_multiset()
        .iter()
        .all(|(w, &c)| set.count_at(&w.negate()) == c);
    lines.push(pass_or_fail(
        "weight multiset symmetric under negation",
        symmetric,
        format!("{} distinct weights", set.weight_multiset().len()),
    ));

    let fsp = f_sp(shape, m)?;
    let x = x_poly(set.members());
    let shifted = fsp.shifted(shape.kappa());
    lines.push(pass_or_fail(
        "generating polynomial equals the shifted hook content analogue",
        x == shifted,
        if x == shifted {
            format!("q^{} times the analogue", shape.kappa())
        } else {
            format!("{x} vs {shifted}")
        },
    ));

    let det = determinant_poly(shape, m)?;
    lines.push(pass_or_fail(
        "generating polynomial equals the determinant quotient",
        x == det,
        if x == det {
            format!("agree at degree {:?}", x.degree().unwrap_or(0))
        } else {
            format!("{x} vs {det}")
        },
    ));

    let hyp = hypotheses_hold(shape, m);
    lines.push(CheckLine {
        name: "arithmetic hypotheses",
        status: if hyp.hold { "pass" } else { "skipped" },
        detail: describe_hypotheses(&hyp),
    });

    let orbit = check_orbit_theorem(&set)?;
    let census_text = fmt_census(&orbit.census.sizes);
    if hyp.hold {
        lines.push(pass_or_fail(
            "rotation orbits all have size 2m",
            orbit.all_full,
            format!("census {census_text}"),
        ));
    } else {
        lines.push(skipped(
            "rotation orbits all have size 2m",
            format!("hypotheses fail; observed census {census_text}"),
        ));
    }

    let n = shape.size();
    let mut complete = 0usize;
    let total = set.weight_multiset().len();
    for w in set.weight_multiset().keys() {
        if check_residue_lemma(w, n)?.complete {
            complete += 1;
        }
    }
    let residue_detail = format!("{complete} of {total} weight blocks complete mod {}", 2 * m);
    if hyp.hold {
        lines.push(pass_or_fail(
            "pwr residues complete on every weight block",
            complete == total,
            residue_detail,
        ));
    } else {
        lines.push(skipped(
            "pwr residues complete on every weight block",
            format!("hypotheses fail; {residue_detail}"),
        ));
    }

    let flat = check_equiv_theorem(&set)?;
    if hyp.hold {
        lines.push(pass_or_fail(
            "generating polynomial flat modulo q^2m - 1",
            flat,
            format!("{} members over {} classes", set.len(), 2 * m),
        ));
    } else {
        lines.push(skipped(
            "generating polynomial flat modulo q^2m - 1",
            format!("hypotheses fail; flat {flat}"),
        ));
    }

    let report = verify_csp(&set, sigma)?;
    if hyp.hold {
        lines.push(pass_or_fail(
            "sieving verdict",
            report.verdict,
            format!("census {}", fmt_census(&report.census)),
        ));
    } else {
        lines.push(skipped(
            "sieving verdict",
            format!("hypotheses fail; observed verdict {}", report.verdict),
        ));
    }

    let ok = lines.iter().all(|l| l.status != "fail");
    let text = match args.format {
        Format::Json => {
            let body = CheckReport {
                shape: shape.parts().to_vec(),
                m,
                count: set.len(),
                f_sp: fsp.to_degree_pairs(),
                x: x.to_degree_pairs(),
                lines,
                ok,
            };
            format!(
                "{}\n",
                serde_json::to_string(&body).expect("plain data serializes")
            )
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "check: shape {shape}  m {m}  members {}", set.len());
            for l in &lines {
                let tag = match l.status {
                    "pass" => "PASS",
                    "fail" => "FAIL",
                    _ => "SKIP",
                };
                let _ = writeln!(out, "{tag} {}: {}", l.name, l.detail);
            }
            let _ = writeln!(
                out,
                "result: {}",
                if ok { "ok" } else { "failing checks present" }
            );
            out
        }
    };
    emit(&args.out, &text)?;
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
