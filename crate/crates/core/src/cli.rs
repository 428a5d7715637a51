//! Command-line front end. [`run`] does all the work and returns the output
//! instead of printing it, so the binary is a thin shell around it.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use crate::distribution::{distance_distribution, DistanceDistribution};
use crate::enumerate::{conjecture_audit, search_palindromic_parallel};
use crate::families::{
    build_family_tree, family_member, hamming_alpha, hamming_graph, parameters_from_pell,
    pell_solutions, DEFAULT_HAMMING_LIMIT, DEFAULT_TREE_VERTEX_LIMIT,
};
use crate::graph::parse_edge_list;
use crate::palindrome::palindromicity_distance;

#[derive(Debug, Parser)]
#[command(name = "hosoya", version, about = "Hosoya polynomials and H-palindromic trees")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance distribution, diameter, Wiener index and Z of an edge-list file.
    Poly {
        file: PathBuf,
        /// Also evaluate H(G, x) exactly at this rational (e.g. 1/2).
        #[arg(long, value_name = "RATIONAL")]
        eval: Option<String>,
    },
    /// Members of the palindromic diameter-six family.
    Family {
        index: Option<usize>,
        /// Write the member's tree in edge-list format to this path ("-" for stdout).
        #[arg(long, value_name = "PATH", requires = "index")]
        emit_graph: Option<String>,
        /// Print the first COUNT solutions of x^2 - 2y^2 = -94.
        #[arg(long, value_name = "COUNT")]
        pell: Option<usize>,
    },
    /// Exhaustive palindromicity search over all free trees on N vertices.
    Search {
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Coefficients and Z of the binary Hamming graph H(M, 2).
    Hamming {
        m: u32,
        /// Cross-check the closed form against BFS on the explicit graph.
        #[arg(long)]
        materialize: bool,
    },
    /// Minimum of Z - ceil(n/2) over odd-diameter trees for n = 5..=N_MAX.
    Audit {
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    /// 0 success, 1 domain error, 2 usage error.
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn domain_error(message: impl std::fmt::Display) -> Self {
        CommandOutcome {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutcome::ok(rendered)
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Poly { file, eval } => poly(&file, eval.as_deref(), json),
        Command::Family {
            index,
            emit_graph,
            pell,
        } => family(index, emit_graph.as_deref(), pell, json),
        Command::Search { n, jobs } => search_palindromic_parallel(n, jobs)
            .map(|r| render(json, r.to_json(), r.to_text()))
            .map_err(|e| e.to_string()),
        Command::Hamming { m, materialize } => hamming(m, materialize, json),
        Command::Audit { n_max, jobs } => audit(n_max, jobs, json),
    };
    match result {
        Ok(stdout) => CommandOutcome::ok(stdout),
        Err(message) => CommandOutcome::domain_error(message),
    }
}

fn render(json: bool, doc: serde_json::Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&doc).expect("json value");
        s.push('\n');
        s
    } else {
        text
    }
}

fn strings(dist: &DistanceDistribution) -> Vec<String> {
    dist.alpha().iter().map(|a| a.to_string()).collect()
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    match text.parse::<BigRational>() {
        Ok(r) => Ok(r),
        Err(_) => Err(format!("not a rational number: {text:?} (expected p or p/q)")),
    }
}

fn poly(file: &PathBuf, eval: Option<&str>, json: bool) -> Result<String, String> {
    let lambda = eval.map(parse_rational).transpose()?;
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let graph = parse_edge_list(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let dist = distance_distribution(&graph).map_err(|e| e.to_string())?;
    let report = palindromicity_distance(&dist);
    let wiener = dist.wiener_index();
    let value = lambda.as_ref().map(|l| (l, dist.hosoya_evaluate(l)));

    let mut text = String::new();
    writeln!(text, "alpha: {}", strings(&dist).join(" ")).unwrap();
    writeln!(text, "D: {}", report.diameter).unwrap();
    writeln!(text, "W: {wiener}").unwrap();
    writeln!(text, "Z: {}", report.z_value).unwrap();
    writeln!(text, "palindromic: {}", if report.is_palindromic { "yes" } else { "no" }).unwrap();
    if let Some((l, v)) = &value {
        writeln!(text, "H({l}): {v}").unwrap();
    }
    let mut doc = json!({
        "alpha": strings(&dist),
        "diameter": report.diameter,
        "wiener_index": wiener.to_string(),
        "z": report.z_value.to_string(),
        "palindromic": report.is_palindromic,
    });
    if let Some((l, v)) = value {
        doc["eval"] = json!({ "lambda": l.to_string(), "value": v.to_string() });
    }
    Ok(render(json, doc, text))
}

fn family(
    index: Option<usize>,
    emit_graph: Option<&str>,
    pell: Option<usize>,
    json: bool,
) -> Result<String, String> {
    if index.is_none() && pell.is_none() {
        return Err("give a family index, --pell COUNT, or both".into());
    }
    let mut text = String::new();
    let mut doc = json!({});

    if let Some(count) = pell {
        writeln!(text, "n\tx\ty").unwrap();
        let rows: Vec<_> = pell_solutions(count)
            .into_iter()
            .map(|s| {
                writeln!(text, "{}\t{}\t{}", s.index, s.x, s.y).unwrap();
                json!({ "n": s.index, "x": s.x.to_string(), "y": s.y.to_string() })
            })
            .collect();
        doc["pell"] = json!(rows);
    }

    if let Some(index) = index {
        let sol = pell_solutions(index + 1).pop().expect("index + 1 solutions");
        let (params, dist) = family_member(index);
        debug_assert_eq!(params, parameters_from_pell(&sol));
        let vertices = params.vertex_count();
        if pell.is_some() {
            text.push('\n');
        }
        writeln!(text, "n\tx\ty\t|V|\ta\tb\ts\tt\tcoefficients").unwrap();
        writeln!(
            text,
            "{index}\t{}\t{}\t{vertices}\t{}\t{}\t{}\t{}\t{dist}",
            sol.x, sol.y, params.a, params.b, params.s, params.t
        )
        .unwrap();
        doc["member"] = json!({
            "n": index,
            "x": sol.x.to_string(),
            "y": sol.y.to_string(),
            "vertices": vertices.to_string(),
            "a": params.a.to_string(),
            "b": params.b.to_string(),
            "s": params.s.to_string(),
            "t": params.t.to_string(),
            "alpha": strings(&dist),
        });

        if let Some(path) = emit_graph {
            let graph = build_family_tree(&params, DEFAULT_TREE_VERTEX_LIMIT).map_err(|e| e.to_string())?;
            let edges = graph.to_edge_list();
            if path == "-" {
                if json {
                    doc["edge_list"] = json!(edges);
                } else {
                    text.push_str(&edges);
                }
            } else {
                std::fs::write(path, edges).map_err(|e| format!("{path}: {e}"))?;
            }
        }
    }
    Ok(render(json, doc, text))
}

fn hamming(m: u32, materialize: bool, json: bool) -> Result<String, String> {
    if m == 0 {
        return Err("m must be at least 1".into());
    }
    let dist = hamming_alpha(m);
    let z = palindromicity_distance(&dist).z_value;
    let mut text = format!("alpha: {}\nZ: {z}\n", strings(&dist).join(" "));
    let mut doc = json!({ "m": m, "alpha": strings(&dist), "z": z.to_string() });
    if materialize {
        let graph = hamming_graph(m, DEFAULT_HAMMING_LIMIT).map_err(|e| e.to_string())?;
        let bfs = distance_distribution(&graph).map_err(|e| e.to_string())?;
        if bfs != dist {
            return Err(format!("closed form {dist} disagrees with BFS {bfs}"));
        }
        text.push_str("bfs: agrees\n");
        doc["bfs_agrees"] = json!(true);
    }
    Ok(render(json, doc, text))
}

fn audit(n_max: usize, jobs: usize, json: bool) -> Result<String, String> {
    let audit = conjecture_audit(n_max, jobs).map_err(|e| e.to_string())?;
    let mut text = String::from("n\todd-diameter trees\tmin margin\twitness\n");
    for (n, summary) in &audit {
        let margin = summary.min_margin.map_or("-".to_string(), |m| m.to_string());
        let witness = summary.witness.as_ref().map_or("-".to_string(), |w| format!("[{w}]"));
        writeln!(text, "{n}\t{}\t{margin}\t{witness}", summary.odd_diameter_trees).unwrap();
    }
    let doc = json!(audit
        .iter()
        .map(|(n, s)| (n.to_string(), json!(s)))
        .collect::<serde_json::Map<_, _>>());
    Ok(render(json, doc, text))
}
