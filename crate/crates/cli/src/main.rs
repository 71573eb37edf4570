use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fused_mackey::algebra::{all_subgroups_corner, build_algebra};
use fused_mackey::functor::{fuse_module, fusion_presentations, is_fused, yoneda_module};
use fused_mackey::fused::fused_hom;
use fused_mackey::fused_algebra::build_fused;
use fused_mackey::group::DEFAULT_ORDER_CAP;
use fused_mackey::gset::{table_of_marks, GSet};
use fused_mackey::parse::{load_group, parse_functor_spec, parse_gset, parse_module_json, FunctorSpec};
use fused_mackey::span::hom_basis;
use fused_mackey::verify::{self, Context, DEFAULT_SEED};
use fused_mackey::{AlgebraData, Error, FiniteGroup, MackeyModule};

#[derive(Parser)]
#[command(name = "fused-mackey", version, about = "Mackey and fused Mackey algebras of finite groups")]
struct Cli {
    /// Builtin group name (Cn, Dn, Sn, An, V4, Q8) or path to group JSON.
    #[arg(long, global = true, default_value = "C1")]
    group: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,

    /// Use the fused algebra where it applies.
    #[arg(long, global = true)]
    fused: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of subgroups.
    Subgroups,
    /// Table of marks of the subgroup class representatives.
    Marks,
    /// Basis of transitive spans from X to Y.
    SpanHom { x: String, y: String },
    /// Ranks of the span hom group from X to Y before and after fusion.
    FusedHom { x: String, y: String },
    /// Rank of the Mackey algebra.
    MackeyRank {
        /// Also build the algebra over all subgroups (order at most 6) and
        /// check the class-representative corner against it.
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Rank of the fused Mackey algebra.
    FusedRank,
    /// Nonzero structure constants (i, j, k, coeff) with e_i e_j = Σ coeff e_k.
    StructureConstants,
    /// Basis of the kernel of the quotient onto the fused algebra.
    Kernel,
    /// Fuses a Mackey functor.
    FuseFunctor {
        #[arg(long)]
        functor: String,
    },
    /// Whether a Mackey functor is fused.
    IsFused {
        #[arg(long)]
        functor: String,
    },
    /// Runs named property checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random trials per seeded check.
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS)]
        trials: usize,
    },
}

struct Report {
    text: String,
    failed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, failed: false }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn require_json(cli: &Cli, what: &str) -> Result<(), Error> {
    if cli.format == Format::Csv {
        return Err(Error::Parse(format!("{what} has no CSV form")));
    }
    Ok(())
}

fn load_module(alg: &AlgebraData, group: &Arc<FiniteGroup>, spec: &str) -> Result<MackeyModule, Error> {
    Ok(match parse_functor_spec(spec)? {
        FunctorSpec::Burnside => yoneda_module(alg, &Arc::new(GSet::point(group))).module,
        FunctorSpec::Yoneda(expr) => yoneda_module(alg, &parse_gset(group, &expr)?).module,
        FunctorSpec::Json(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            parse_module_json(alg, &text)?
        }
    })
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let group = Arc::new(load_group(&cli.group, cli.max_order)?);
    let text = match &cli.command {
        Command::Subgroups => {
            require_json(cli, "subgroups")?;
            let classes: Vec<Value> = group
                .subgroup_classes()
                .iter()
                .map(|c| {
                    let rep = group.subgroup(c.rep);
                    json!({
                        "class": c.id,
                        "order": rep.order(),
                        "class_size": c.members.len(),
                        "normalizer_order": group.subgroup(group.normalizer(c.rep)).order(),
                        "elements": rep.elements,
                    })
                })
                .collect();
            json_text(&json!({ "group_order": group.order(), "classes": classes }))
        }
        Command::Marks => {
            let marks = table_of_marks(&group);
            match cli.format {
                Format::Json => json_text(&json!({ "marks": marks })),
                Format::Csv => marks
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(",") + "\n")
                    .collect(),
            }
        }
        Command::SpanHom { x, y } => {
            require_json(cli, "span-hom")?;
            let (x, y) = (parse_gset(&group, x)?, parse_gset(&group, y)?);
            json_text(&serde_json::to_value(hom_basis(&x, &y))?)
        }
        Command::FusedHom { x, y } => {
            require_json(cli, "fused-hom")?;
            let (x, y) = (parse_gset(&group, x)?, parse_gset(&group, y)?);
            let h = fused_hom(&x, &y);
            json_text(&json!({
                "unfused_rank": h.unfused_rank(),
                "fused_rank": h.fused_rank(),
                "collapsed_pairs": h.collapsed_pairs(),
            }))
        }
        Command::MackeyRank { all_subgroups } => {
            require_json(cli, "mackey-rank")?;
            let alg = build_algebra(&group);
            if !all_subgroups {
                json_text(&json!({ "rank": alg.rank() }))
            } else if group.order() > 6 {
                return Err(Error::Parse("--all-subgroups needs a group of order at most 6".into()));
            } else {
                let (corner, full) = all_subgroups_corner(&alg)?;
                json_text(&json!({ "rank": alg.rank(), "all_subgroups_rank": full, "corner_rank": corner }))
            }
        }
        Command::FusedRank => {
            require_json(cli, "fused-rank")?;
            json_text(&json!({ "rank": build_fused(&build_algebra(&group))?.rank() }))
        }
        Command::StructureConstants => {
            let alg = build_algebra(&group);
            let constants = if cli.fused {
                build_fused(&alg)?.table.structure_constants()
            } else {
                alg.table.structure_constants()
            };
            match cli.format {
                Format::Json => verify::structure_constants_json(&constants),
                Format::Csv => {
                    let mut out = String::from("i,j,k,coeff\n");
                    for (i, j, k, c) in constants {
                        out.push_str(&format!("{i},{j},{k},{c}\n"));
                    }
                    out
                }
            }
        }
        Command::Kernel => {
            require_json(cli, "kernel")?;
            let fused = build_fused(&build_algebra(&group))?;
            let basis: Vec<Vec<(usize, i64)>> = fused.kernel_basis().iter().map(|e| e.terms().collect()).collect();
            json_text(&json!({ "rank": basis.len(), "basis": basis }))
        }
        Command::FuseFunctor { functor } => {
            require_json(cli, "fuse-functor")?;
            let alg = build_algebra(&group);
            let fused = build_fused(&alg)?;
            let m = load_module(&alg, &group, functor)?;
            let presentations = fusion_presentations(&fused, &m);
            let components: Vec<Value> = presentations
                .iter()
                .enumerate()
                .map(|(c, p)| {
                    json!({
                        "class": c,
                        "rank": p.ambient_rank,
                        "fused_rank": p.free_rank,
                        "invariant_factors": p.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let torsion_free = presentations.iter().all(|p| p.torsion.is_empty());
            let fused_total = match fuse_module(&fused, &m) {
                Ok(f) => Some(f.module.total_rank),
                Err(Error::Torsion { .. }) => None,
                Err(e) => return Err(e),
            };
            json_text(&json!({
                "components": components,
                "rank": m.total_rank,
                "fused_rank": fused_total,
                "torsion_free": torsion_free,
                "collapsed": presentations.iter().any(|p| p.free_rank < p.ambient_rank),
            }))
        }
        Command::IsFused { functor } => {
            require_json(cli, "is-fused")?;
            let alg = build_algebra(&group);
            let m = load_module(&alg, &group, functor)?;
            let (fused, witnesses) = is_fused(&alg, &m);
            let witnesses: Vec<Value> =
                witnesses.iter().map(|&(c, e)| json!({ "class": c, "element": e })).collect();
            json_text(&json!({ "is_fused": fused, "witnesses": witnesses }))
        }
        Command::Verify { suite, trials } => {
            require_json(cli, "verify")?;
            let mut ctx = Context::new(group.clone(), cli.seed);
            ctx.trials = *trials;
            let reports = verify::run(&ctx, suite)?;
            let failed = reports.iter().any(|r| !r.passed);
            let text = json_text(&json!({
                "group_order": group.order(),
                "seed": cli.seed,
                "passed": !failed,
                "checks": reports,
            }));
            return Ok(Report { text, failed });
        }
    };
    Ok(Report::ok(text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = report.text;
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
