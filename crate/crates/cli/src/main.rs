use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxcells::cells::{CellAnalysis, CellPartitions};
use coxcells::coxeter::Group;
use coxcells::harness::{
    check_kottwitz, check_left_connected, check_tilde_tau_conjecture, cuspidal_intersections, rsk_check,
};
use coxcells::induction::{run_pipeline, CellLookupIndex};
use coxcells::star::{star_class_representatives, tau_partition, TauMode};
use coxcells::Error;

#[derive(Parser)]
#[command(name = "coxcells", version, about = "Kazhdan-Lusztig cells of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left, right or two-sided cells with a-values and specials.
    Cells {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// τ-partition of W, or of a subset given as a JSON array of words.
    Tau {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "simple")]
        mode: TauMode,
        #[arg(long)]
        subset: Option<PathBuf>,
    },
    /// a-value of every two-sided cell.
    Avalues {
        #[arg(long)]
        group: String,
    },
    /// Families and special representations of the two-sided cells.
    Specials {
        #[arg(long)]
        group: String,
    },
    /// Run one of the structural checks.
    Check {
        #[arg(value_enum)]
        which: CheckArg,
        #[arg(long)]
        group: String,
    },
    /// Intersections of minimal-length class elements with two-sided cells.
    Intersections {
        #[arg(long)]
        group: String,
        #[arg(long)]
        cuspidal_only: bool,
    },
    /// Left cell of one element, found from star-orbit representatives.
    Lookup {
        #[arg(long)]
        group: String,
        /// Comma-separated generator indices.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Rebuild the left cells from a parabolic subgroup.
    Pipeline {
        #[arg(long)]
        group: String,
        /// Comma-separated generators of the parabolic subgroup.
        #[arg(long)]
        subset: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Twosided,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Kottwitz,
    LeftConnected,
    TildeTau,
    Rsk,
    CountIdentity,
}

enum Failure {
    Check(Value),
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn parse_indices(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad generator index {t:?}"))))
        .collect()
}

fn words(g: &Group, block: &[usize]) -> Vec<Vec<u8>> {
    block.iter().map(|&w| g.word(w).to_vec()).collect()
}

fn passed(report: Value, ok: bool) -> Outcome {
    if ok {
        Ok(report)
    } else {
        Err(Failure::Check(report))
    }
}

fn analysis(spec: &str) -> Result<CellAnalysis, Failure> {
    Ok(CellAnalysis::compute(Group::from_spec(spec)?)?)
}

fn cells(spec: &str, side: SideArg, out: Option<PathBuf>) -> Outcome {
    let a = analysis(spec)?;
    let p = match side {
        SideArg::Left => &a.left,
        SideArg::Right => &a.right,
        SideArg::Twosided => &a.two_sided,
    };
    let v = p.to_json(&a.group);
    match out {
        Some(path) => {
            std::fs::write(&path, serde_json::to_string_pretty(&v).expect("JSON value"))
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(json!({ "group": spec, "side": p.side.as_str(), "blocks": p.num_blocks(), "out": path }))
        }
        None => Ok(v),
    }
}

fn tau(spec: &str, mode: TauMode, subset: Option<PathBuf>) -> Outcome {
    let g = Group::from_spec(spec)?;
    let elements = match subset {
        None => (0..g.order()).collect(),
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let list: Vec<Vec<usize>> =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("subset file: {e}")))?;
            let mut ws = list.iter().map(|w| g.from_word(w)).collect::<coxcells::Result<Vec<_>>>()?;
            ws.sort_unstable();
            ws.dedup();
            ws
        }
    };
    Ok(tau_partition(&g, &elements, mode).to_json(&g))
}

fn avalues(spec: &str) -> Outcome {
    let a = analysis(spec)?;
    let cells: Vec<Value> = a
        .two_sided
        .blocks()
        .iter()
        .zip(&a.two_sided_info)
        .map(|(block, info)| json!({ "size": block.len(), "a": info.a_value, "special": info.special }))
        .collect();
    Ok(json!({ "group": spec, "two_sided_cells": cells }))
}

fn specials(spec: &str) -> Outcome {
    let a = analysis(spec)?;
    let info: Vec<Value> = a
        .two_sided_info
        .iter()
        .map(|i| {
            let d = a.table.degree(a.table.index_of(&i.special).expect("special is a table entry"));
            json!({ "special": i.special, "dimension": d, "a": i.a_value, "family": i.family })
        })
        .collect();
    Ok(json!({
        "group": spec,
        "left_cells": a.left.num_blocks(),
        "special_dimension_sum": a.special_dimension_sum(),
        "two_sided_cells": info,
    }))
}

fn check(spec: &str, which: CheckArg) -> Outcome {
    match which {
        CheckArg::Rsk => {
            let g = Group::from_spec(spec)?;
            let name = g.type_name();
            if !name.starts_with('A') || name.contains('+') {
                return Err(Failure::Usage(format!("rsk check needs a group of type A, got {name}")));
            }
            let r = rsk_check(g.rank() + 1)?;
            let ok = r.passed();
            passed(serde_json::to_value(r).expect("report"), ok)
        }
        CheckArg::LeftConnected => {
            let g = Group::from_spec(spec)?;
            let parts = CellPartitions::compute(g.clone())?;
            let r = check_left_connected(&g, &parts.left);
            let ok = r.passed();
            passed(serde_json::to_value(r).expect("report"), ok)
        }
        CheckArg::Kottwitz => {
            let a = analysis(spec)?;
            let r = check_kottwitz(&a)?;
            let ok = r.passed();
            passed(serde_json::to_value(r).expect("report"), ok)
        }
        CheckArg::TildeTau => {
            let a = analysis(spec)?;
            let all: Vec<usize> = (0..a.group.order()).collect();
            let tt = tau_partition(&a.group, &all, TauMode::Strings);
            let r = check_tilde_tau_conjecture(&a.group, &a.left, &tt.partition, &a.a_of_element);
            let ok = r.passed();
            passed(serde_json::to_value(r).expect("report"), ok)
        }
        CheckArg::CountIdentity => {
            let a = analysis(spec)?;
            let sum = a.special_dimension_sum();
            let cells = a.left.num_blocks();
            passed(
                json!({ "group": spec, "special_dimension_sum": sum, "left_cells": cells }),
                sum as usize == cells,
            )
        }
    }
}

fn intersections(spec: &str, cuspidal_only: bool) -> Outcome {
    let a = analysis(spec)?;
    let table = cuspidal_intersections(&a, cuspidal_only);
    let ok = table.rows_sum_correctly();
    passed(serde_json::to_value(table).expect("table"), ok)
}

fn lookup(spec: &str, element: &str) -> Outcome {
    let g: Arc<Group> = Group::from_spec(spec)?;
    let w = g.from_word(&parse_indices(element)?)?;
    let a = CellAnalysis::compute(g.clone())?;
    let classes = star_class_representatives(&g, &a.left)?;
    let index = CellLookupIndex::from_analysis(&a, &classes);
    let r = index.left_cell_of_element(&g, w)?;
    let ok = a.left.block_of(w).map(|c| a.left.block(c)) == Some(&r.cell[..]);
    passed(
        json!({
            "group": spec,
            "element": g.word(w),
            "representative": r.representative,
            "a": r.a,
            "special": r.special,
            "cell": words(&g, &r.cell),
        }),
        ok,
    )
}

fn pipeline(spec: &str, subset: Option<String>) -> Outcome {
    let a = analysis(spec)?;
    let subset = subset.as_deref().map(parse_indices).transpose()?;
    let (report, _) = run_pipeline(&a, subset.as_deref())?;
    let ok = report.matches_direct;
    passed(serde_json::to_value(report).expect("report"), ok)
}

fn error_json(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cells { group, side, out } => cells(&group, side, out),
        Command::Tau { group, mode, subset } => tau(&group, mode, subset),
        Command::Avalues { group } => avalues(&group),
        Command::Specials { group } => specials(&group),
        Command::Check { which, group } => check(&group, which),
        Command::Intersections { group, cuspidal_only } => intersections(&group, cuspidal_only),
        Command::Lookup { group, element } => lookup(&group, &element),
        Command::Pipeline { group, subset } => pipeline(&group, subset),
    };
    // A closed pipe on stdout is not an error worth reporting.
    let print = |v: &Value| {
        let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("JSON value"));
    };
    match outcome {
        Ok(v) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            print(&json!({ "error": msg }));
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            print(&error_json(&e));
            match e {
                Error::VerificationMismatch(_)
                | Error::SpecialNotUnique { .. }
                | Error::CellWithoutDistinguished { .. }
                | Error::CellWithMultipleDistinguished { .. }
                | Error::IncompleteClosure { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
