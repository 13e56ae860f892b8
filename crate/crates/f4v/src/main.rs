use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use f4core::blocks::{load_all_blocks, verify_alperin, verify_blocks, verify_sigma, EllScope};
use f4core::classtypes::ClassTypes;
use f4core::extweyl::ExtWeyl;
use f4core::lifts::Lifts;
use f4core::orders::verify_orders;
use f4core::radical3::verify_radical;
use f4core::report::Report;
use f4core::suites::{verify_chars, verify_roots, verify_weyl};
use f4core::tori::verify_tori;
use f4core::weyl::Weyl;
use f4core::Error;

#[derive(Parser)]
#[command(name = "f4v", about = "Verification harness for F4(q) computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Sample prime powers
    #[arg(long, value_delimiter = ',', default_value = "4,5,7,8,11,13", global = true)]
    q: Vec<i64>,
    /// Restrict block suites to one prime
    #[arg(long, global = true)]
    ell: Option<Ell>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads (0: one per core)
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Cmd {
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Roots,
    Weyl,
    Tori,
    Lifts,
    Ct,
    Fusion,
    Centers,
    Orders,
    Radical,
    Blocks,
    Alperin,
    Chars,
    Sigma,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ell {
    #[value(name = "3")]
    Three,
    #[value(name = "5")]
    Five,
    #[value(name = "7")]
    Seven,
    Big,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

const ALL: [Suite; 13] = [
    Suite::Roots,
    Suite::Weyl,
    Suite::Tori,
    Suite::Lifts,
    Suite::Ct,
    Suite::Fusion,
    Suite::Centers,
    Suite::Orders,
    Suite::Radical,
    Suite::Blocks,
    Suite::Alperin,
    Suite::Chars,
    Suite::Sigma,
];

fn admits(scope: EllScope, ell: Ell) -> bool {
    match (scope, ell) {
        (EllScope::AtLeast3, _) => true,
        (EllScope::Three, Ell::Three) => true,
        (EllScope::Big, Ell::Five | Ell::Seven | Ell::Big) => true,
        (EllScope::Exact(3), Ell::Three) => true,
        (EllScope::Exact(5), Ell::Five | Ell::Big) => true,
        (EllScope::Exact(7), Ell::Seven | Ell::Big) => true,
        _ => false,
    }
}

struct Ctx {
    ew: ExtWeyl,
    q: Vec<i64>,
    ell: Option<Ell>,
}

fn run_suite(ctx: &Ctx, suite: Suite) -> f4core::Result<Report> {
    let w = &ctx.ew.weyl;
    let needs_ct = !matches!(suite, Suite::Roots | Suite::Weyl | Suite::Tori | Suite::Chars | Suite::Alperin);
    let ct = if needs_ct { Some(ClassTypes::new(w)?) } else { None };
    let ct = || ct.as_ref().expect("class types");
    match suite {
        Suite::Roots => verify_roots(w),
        Suite::Weyl => verify_weyl(&ctx.ew),
        Suite::Tori => verify_tori(w, &ctx.q),
        Suite::Lifts => Lifts::new(&ctx.ew, ct())?.verify(),
        Suite::Ct => ct().verify_ct(),
        Suite::Fusion => ct().verify_fusion(),
        Suite::Centers => ct().verify_centers(&ctx.q),
        Suite::Orders => verify_orders(ct()),
        Suite::Radical => verify_radical(ct()),
        Suite::Blocks => verify_blocks(ct()),
        Suite::Alperin => {
            let mut blocks = load_all_blocks()?;
            if let Some(ell) = ctx.ell {
                blocks.retain(|b| admits(b.ell, ell));
            }
            verify_alperin(&blocks)
        }
        Suite::Chars => verify_chars(),
        Suite::Sigma => verify_sigma(ct()),
        Suite::All => unreachable!(),
    }
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    id: &'a str,
    status: &'static str,
    detail: &'a str,
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
    expected_exception: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    checks: Vec<JsonCheck<'a>>,
    summary: JsonSummary,
}

fn render(rep: &Report, format: Format) -> String {
    let s = rep.summary();
    match format {
        Format::Json => {
            let j = JsonReport {
                suite: &rep.suite,
                checks: rep
                    .checks
                    .iter()
                    .map(|c| JsonCheck { id: &c.id, status: c.status.as_str(), detail: &c.detail })
                    .collect(),
                summary: JsonSummary { pass: s.pass, fail: s.fail, expected_exception: s.expected_exception },
            };
            serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for c in &rep.checks {
                out += &format!("{:<18} {}  {}\n", c.status.as_str(), c.id, c.detail);
            }
            out += &format!(
                "{}: {} pass, {} fail, {} expected-exception\n",
                rep.suite, s.pass, s.fail, s.expected_exception
            );
            out
        }
    }
}

fn is_data_error(e: &Error) -> bool {
    matches!(e, Error::Data { .. } | Error::Parse(_) | Error::Io(_) | Error::UnknownGroup(_))
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global().ok();
    }
    let Cmd::Verify { suite } = cli.cmd;
    let start = Instant::now();
    let ew = match Weyl::build().and_then(ExtWeyl::build) {
        Ok(ew) => ew,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx { ew, q: cli.q, ell: cli.ell };
    let suites: Vec<Suite> = if suite == Suite::All { ALL.to_vec() } else { vec![suite] };
    let results: Vec<(Suite, f4core::Result<Report>)> =
        suites.par_iter().map(|&s| (s, run_suite(&ctx, s))).collect();

    let mut report = Report::new(if suite == Suite::All { "all" } else { "" });
    for (s, r) in results {
        match r {
            Ok(r) if suite == Suite::All => {
                for mut c in r.checks {
                    c.id = format!("{}/{}", r.suite, c.id);
                    report.checks.push(c);
                }
            }
            Ok(r) => report = r,
            Err(e) => {
                eprintln!("error in {:?}: {e}", s);
                return ExitCode::from(if is_data_error(&e) { 2 } else { 1 });
            }
        }
    }
    print!("{}", render(&report, cli.format));
    log::info!("elapsed {:.2?}", start.elapsed());
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
