//! Command-line front end. Every command renders into strings so the
//! whole surface can be driven in-process.
//!
//! Exit codes: 0 for a decision (YES or NO), 2 for unparsable or invalid
//! input, 1 for internal failures.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench;
use crate::centralizer::centralizer_of;
use crate::complex::{
    decide_groupoid_conjugacy, BasedWord, ConvexityCheck, CubeComplexMap, NormalizedLoop, Strategy,
    ValidationReport,
};
use crate::conjugacy::{cyclic_normal_factors, decide_conjugacy, normal_form, CyclicNormalFactors};
use crate::graph::DefiningGraph;
use crate::oracle;
use crate::word::{format_letters, format_word, parse_word, Letter, Word};

#[derive(Parser, Debug)]
#[command(
    name = "raag",
    version,
    about = "Word, conjugacy and free homotopy problems in right-angled Artin groups"
)]
pub struct Cli {
    /// Machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Leave timings out so reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Spell runs of equal letters as `name^k`.
    #[arg(long, global = true)]
    pub collapse: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a word.
    NormalForm(WordArgs),
    /// Cyclic normal factors of a word's conjugacy class.
    CyclicNormalForm(WordArgs),
    /// Does the word represent the identity?
    WordProblem(WordArgs),
    /// Are two words conjugate?
    Conjugate(PairArgs),
    /// Generators of the centralizer of a word.
    Centralizer(WordArgs),
    /// Check the local hypotheses of a complex file.
    ValidateComplex(ComplexArgs),
    /// Are two loops in a complex freely homotopic?
    GroupoidConjugate(GroupoidArgs),
    /// Time the conjugacy decision on random words of growing length.
    Bench(BenchArgs),
    #[command(hide = true)]
    OracleEqual(PairArgs),
    #[command(hide = true)]
    OracleConjugate(PairArgs),
    #[command(hide = true)]
    OracleGroupoid(OracleGroupoidArgs),
}

#[derive(Args, Debug)]
pub struct WordArgs {
    /// Presentation file.
    #[arg(short = 'g', long = "group")]
    pub group: PathBuf,
    #[arg(
        short = 'w',
        long = "word",
        required_unless_present = "words_file",
        allow_hyphen_values = true
    )]
    pub word: Option<String>,
    /// One word per line, each handled separately.
    #[arg(long, conflicts_with = "word")]
    pub words_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(short = 'g', long = "group")]
    pub group: PathBuf,
    #[arg(
        short = 'w',
        long = "word",
        requires = "other",
        allow_hyphen_values = true
    )]
    pub word: Option<String>,
    #[arg(
        short = 'v',
        long = "other",
        requires = "word",
        allow_hyphen_values = true
    )]
    pub other: Option<String>,
    /// Two lines: the first word, then the second.
    #[arg(long, conflicts_with_all = ["word", "other"], required_unless_present = "word")]
    pub words_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    #[arg(short = 'g', long = "group")]
    pub group: PathBuf,
    /// Complex file.
    #[arg(short = 'x', long = "complex")]
    pub complex: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Reachability,
    Enumeration,
}

#[derive(Args, Debug)]
pub struct GroupoidArgs {
    #[command(flatten)]
    pub files: ComplexArgs,
    /// First loop, `vertex: word`.
    #[arg(long, allow_hyphen_values = true)]
    pub loop1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub loop2: String,
    #[arg(long, value_enum, default_value = "reachability")]
    pub strategy: StrategyArg,
}

#[derive(Args, Debug)]
pub struct OracleGroupoidArgs {
    #[command(flatten)]
    pub files: ComplexArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub loop1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub loop2: String,
    #[arg(long, default_value_t = 8)]
    pub max_conj_len: usize,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Presentation file; defaults to the free group on three generators.
    #[arg(short = 'g', long = "group")]
    pub group: Option<PathBuf>,
    /// Comma-separated total lengths.
    #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_SIZES)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    /// Bad input: unreadable or unparsable file, invalid word or complex.
    Input(String),
    Internal(String),
}

type CliResult<T> = Result<T, Failure>;

fn input<E: std::fmt::Display>(origin: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{origin}: {e}"))
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: cannot read: {e}", path.display())))
}

fn load_group(path: &Path) -> CliResult<DefiningGraph> {
    DefiningGraph::parse_presentation(&read(path)?).map_err(input(&path.display().to_string()))
}

fn load_complex(g: &DefiningGraph, path: &Path) -> CliResult<CubeComplexMap> {
    CubeComplexMap::parse(g, &read(path)?).map_err(input(&path.display().to_string()))
}

fn word_arg(g: &DefiningGraph, flag: &str, text: &str) -> CliResult<Word> {
    parse_word(g, text).map_err(input(&format!("argument {flag}")))
}

/// Non-blank lines of a words file, parsed with their line numbers.
fn words_file(g: &DefiningGraph, path: &Path) -> CliResult<Vec<Word>> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let w = parse_word(g, line)
            .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e.at_line(i + 1))))?;
        out.push(w);
    }
    Ok(out)
}

fn single_words(g: &DefiningGraph, args: &WordArgs) -> CliResult<Vec<Word>> {
    match (&args.word, &args.words_file) {
        (Some(w), _) => Ok(vec![word_arg(g, "-w", w)?]),
        (None, Some(path)) => words_file(g, path),
        (None, None) => Err(Failure::Input("no word given".into())),
    }
}

fn word_pair(g: &DefiningGraph, args: &PairArgs) -> CliResult<(Word, Word)> {
    match (&args.word, &args.other, &args.words_file) {
        (Some(w), Some(v), _) => Ok((word_arg(g, "-w", w)?, word_arg(g, "-v", v)?)),
        (_, _, Some(path)) => {
            let mut words = words_file(g, path)?;
            if words.len() != 2 {
                return Err(Failure::Input(format!(
                    "{}: expected exactly two words, found {}",
                    path.display(),
                    words.len()
                )));
            }
            let v = words.pop().expect("two words");
            let w = words.pop().expect("two words");
            Ok((w, v))
        }
        _ => Err(Failure::Input("two words required".into())),
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    fn spell(&self, g: &DefiningGraph, w: &[Letter]) -> String {
        if w.is_empty() {
            "1".to_string()
        } else if self.cli.collapse {
            format_word(g, w)
        } else {
            format_letters(g, w)
        }
    }

    fn timed<T>(&self, f: impl FnOnce() -> T) -> (T, Option<f64>) {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        (out, (!self.cli.no_timings).then_some(secs))
    }

    /// JSON report, or the human rendering.
    fn emit<R: Serialize>(&self, report: &R, human: impl FnOnce(&mut String)) -> CliResult<String> {
        if self.cli.json {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| Failure::Internal(format!("serializing report: {e}")))?;
            s.push('\n');
            Ok(s)
        } else {
            let mut s = String::new();
            human(&mut s);
            Ok(s)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn timing_line(out: &mut String, seconds: Option<f64>) {
    if let Some(s) = seconds {
        let _ = writeln!(out, "  seconds: {s:.6}");
    }
}

#[derive(Serialize)]
struct NormalFormReport {
    input_length: usize,
    normal_form: String,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct FactorReport {
    component: Vec<String>,
    word: String,
}

#[derive(Serialize)]
struct CyclicNormalFormReport {
    input_length: usize,
    cyclic_normal_form: String,
    factors: Vec<FactorReport>,
    events: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct WordProblemReport {
    identity: bool,
    normal_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct ConjugacyReport {
    conjugate: bool,
    left: Vec<FactorReport>,
    right: Vec<FactorReport>,
    shifts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct RootReport {
    root: String,
    power: usize,
}

#[derive(Serialize)]
struct CentralizerReport {
    generators: Vec<String>,
    factors: Vec<FactorReport>,
    roots: Vec<RootReport>,
    link_generators: Vec<String>,
    conjugator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct LoopReport {
    base: String,
    factors: Vec<FactorReport>,
}

#[derive(Serialize)]
struct GroupoidReport {
    conjugate: bool,
    stage: crate::complex::Stage,
    strategy: &'static str,
    first: LoopReport,
    second: LoopReport,
    aligned_base: Option<String>,
    centralizer_generators: Option<Vec<String>>,
    reachable: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

#[derive(Serialize)]
struct OracleReport {
    answer: bool,
}

#[derive(Serialize)]
struct BenchReport {
    rows: Vec<bench::BenchRow>,
    ratios: Vec<f64>,
}

fn factor_reports(ctx: &Ctx, g: &DefiningGraph, f: &CyclicNormalFactors) -> Vec<FactorReport> {
    f.factors
        .iter()
        .map(|f| FactorReport {
            component: f.component.iter().map(|&i| g.name(i).to_string()).collect(),
            word: ctx.spell(g, &f.word),
        })
        .collect()
}

fn write_factors(out: &mut String, label: &str, factors: &[FactorReport]) {
    for (i, f) in factors.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {label} factor {i} {{{}}}: {}",
            f.component.join(", "),
            f.word
        );
    }
}

/// One report per word: a single object for `-w`, an array for a file.
fn per_word<R: Serialize>(
    ctx: &Ctx,
    reports: Vec<R>,
    human: impl Fn(&mut String, &R),
) -> CliResult<String> {
    if ctx.cli.json && reports.len() == 1 {
        return ctx.emit(&reports[0], |_| {});
    }
    ctx.emit(&reports, |out| {
        for r in &reports {
            human(out, r);
        }
    })
}

fn normal_form_cmd(ctx: &Ctx, args: &WordArgs) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let reports = single_words(&g, args)?
        .iter()
        .map(|w| {
            let (nf, seconds) = ctx.timed(|| normal_form(&g, w));
            NormalFormReport {
                input_length: w.len(),
                normal_form: ctx.spell(&g, &nf),
                length: nf.len(),
                seconds,
            }
        })
        .collect();
    per_word(ctx, reports, |out, r| {
        let _ = writeln!(out, "{}", r.normal_form);
        let _ = writeln!(out, "  length: {} (input {})", r.length, r.input_length);
        timing_line(out, r.seconds);
    })
}

fn cyclic_normal_form_cmd(ctx: &Ctx, args: &WordArgs) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let reports = single_words(&g, args)?
        .iter()
        .map(|w| {
            let (f, seconds) = ctx.timed(|| cyclic_normal_factors(&g, w));
            CyclicNormalFormReport {
                input_length: w.len(),
                cyclic_normal_form: ctx.spell(&g, &f.word()),
                factors: factor_reports(ctx, &g, &f),
                events: f.events.len(),
                seconds,
            }
        })
        .collect();
    per_word(ctx, reports, |out, r| {
        let _ = writeln!(out, "{}", r.cyclic_normal_form);
        write_factors(out, "", &r.factors);
        let _ = writeln!(out, "  cyclings: {}", r.events);
        timing_line(out, r.seconds);
    })
}

fn word_problem_cmd(ctx: &Ctx, args: &WordArgs) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let reports = single_words(&g, args)?
        .iter()
        .map(|w| {
            let (nf, seconds) = ctx.timed(|| normal_form(&g, w));
            WordProblemReport {
                identity: nf.is_empty(),
                normal_form: ctx.spell(&g, &nf),
                seconds,
            }
        })
        .collect();
    per_word(ctx, reports, |out, r| {
        if r.identity {
            let _ = writeln!(out, "YES (identity)");
        } else {
            let _ = writeln!(out, "NO");
            let _ = writeln!(out, "  normal form: {}", r.normal_form);
        }
        timing_line(out, r.seconds);
    })
}

fn conjugate_cmd(ctx: &Ctx, args: &PairArgs) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let (w, v) = word_pair(&g, args)?;
    let (verdict, seconds) = ctx.timed(|| decide_conjugacy(&g, &w, &v));
    let report = ConjugacyReport {
        conjugate: verdict.conjugate,
        left: factor_reports(ctx, &g, &verdict.left),
        right: factor_reports(ctx, &g, &verdict.right),
        shifts: verdict.shifts,
        seconds,
    };
    ctx.emit(&report, |out| {
        let _ = writeln!(out, "{}", yes_no(report.conjugate));
        write_factors(out, "left", &report.left);
        write_factors(out, "right", &report.right);
        if let Some(shifts) = &report.shifts {
            let _ = writeln!(out, "  shifts: {shifts:?}");
        }
        timing_line(out, report.seconds);
    })
}

fn centralizer_cmd(ctx: &Ctx, args: &WordArgs) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let reports = single_words(&g, args)?
        .iter()
        .map(|w| {
            let (c, seconds) = ctx.timed(|| centralizer_of(&g, w));
            CentralizerReport {
                generators: c.generators.iter().map(|u| ctx.spell(&g, u)).collect(),
                factors: factor_reports(ctx, &g, &c.factors),
                roots: c
                    .gens
                    .roots
                    .iter()
                    .map(|r| RootReport {
                        root: ctx.spell(&g, &r.root),
                        power: r.power,
                    })
                    .collect(),
                link_generators: c
                    .gens
                    .link_gens
                    .iter()
                    .map(|&i| g.name(i).to_string())
                    .collect(),
                conjugator: ctx.spell(&g, &c.conjugator),
                seconds,
            }
        })
        .collect();
    per_word(ctx, reports, |out, r| {
        let _ = writeln!(out, "{}", r.generators.join(", "));
        write_factors(out, "", &r.factors);
        for root in &r.roots {
            let _ = writeln!(out, "  root: {} (power {})", root.root, root.power);
        }
        let _ = writeln!(out, "  link generators: {}", r.link_generators.join(" "));
        let _ = writeln!(out, "  conjugator: {}", r.conjugator);
        timing_line(out, r.seconds);
    })
}

fn render_validation(out: &mut String, r: &ValidationReport) {
    let _ = writeln!(out, "{}", if r.is_valid() { "VALID" } else { "INVALID" });
    for d in &r.determinism {
        let _ = writeln!(
            out,
            "  nondeterministic: {} leaves {} by edges {}",
            d.letter,
            d.vertex,
            d.edges.join(", ")
        );
    }
    for l in &r.labels {
        let _ = writeln!(
            out,
            "  label out of range: edge {} has label {}",
            l.edge, l.label
        );
    }
    match &r.convexity {
        ConvexityCheck::NotChecked => {
            let _ = writeln!(out, "  convexity: not checked (no squares given)");
        }
        ConvexityCheck::Checked {
            malformed_squares,
            missing_corners,
        } => {
            for s in malformed_squares {
                let _ = writeln!(
                    out,
                    "  square {} ({}): {}",
                    s.square,
                    s.edges.join(" "),
                    s.reason
                );
            }
            for c in missing_corners {
                let _ = writeln!(
                    out,
                    "  missing square at {} between {} and {}",
                    c.vertex, c.first, c.second
                );
            }
        }
    }
    let _ = writeln!(out, "  verified: {}", r.verified.join(", "));
    let _ = writeln!(out, "  assumed: {}", r.assumed.join(", "));
}

fn validate_cmd(ctx: &Ctx, args: &ComplexArgs) -> CliResult<(String, bool)> {
    let g = load_group(&args.group)?;
    let cx = load_complex(&g, &args.complex)?;
    let report = cx.validate(&g);
    let text = ctx.emit(&report, |out| render_validation(out, &report))?;
    Ok((text, report.is_valid()))
}

fn loops(
    g: &DefiningGraph,
    args: &ComplexArgs,
    loop1: &str,
    loop2: &str,
) -> CliResult<(CubeComplexMap, BasedWord, BasedWord)> {
    let cx = load_complex(g, &args.complex)?;
    let report = cx.validate(g);
    if !report.is_locally_valid() {
        let mut msg = format!("{}: complex fails validation\n", args.complex.display());
        render_validation(&mut msg, &report);
        return Err(Failure::Input(msg.trim_end().to_string()));
    }
    let bw1 = BasedWord::parse(&cx, g, loop1).map_err(input("argument --loop1"))?;
    let bw2 = BasedWord::parse(&cx, g, loop2).map_err(input("argument --loop2"))?;
    Ok((cx, bw1, bw2))
}

fn loop_report(
    ctx: &Ctx,
    g: &DefiningGraph,
    cx: &CubeComplexMap,
    n: &NormalizedLoop,
) -> LoopReport {
    LoopReport {
        base: cx.vertex_name(n.base).to_string(),
        factors: factor_reports(ctx, g, &n.factors),
    }
}

fn groupoid_cmd(ctx: &Ctx, args: &GroupoidArgs) -> CliResult<String> {
    let g = load_group(&args.files.group)?;
    let (cx, bw1, bw2) = loops(&g, &args.files, &args.loop1, &args.loop2)?;
    let strategy = match args.strategy {
        StrategyArg::Reachability => Strategy::Reachability,
        StrategyArg::Enumeration => Strategy::BoundedEnumeration,
    };
    let (verdict, seconds) = ctx.timed(|| decide_groupoid_conjugacy(&cx, &g, &bw1, &bw2, strategy));
    let verdict = verdict.map_err(input("groupoid decision"))?;
    let report = GroupoidReport {
        conjugate: verdict.conjugate,
        stage: verdict.stage,
        strategy: match strategy {
            Strategy::Reachability => "reachability",
            Strategy::BoundedEnumeration => "enumeration",
        },
        first: loop_report(ctx, &g, &cx, &verdict.first),
        second: loop_report(ctx, &g, &cx, &verdict.second),
        aligned_base: verdict.aligned_base.map(|v| cx.vertex_name(v).to_string()),
        centralizer_generators: verdict.centralizer.as_ref().map(|c| {
            c.generator_words()
                .iter()
                .map(|z| ctx.spell(&g, z))
                .collect()
        }),
        reachable: verdict
            .reachable
            .iter()
            .map(|&v| cx.vertex_name(v).to_string())
            .collect(),
        seconds,
    };
    ctx.emit(&report, |out| {
        let _ = writeln!(out, "{}", yes_no(report.conjugate));
        let stage = serde_json::to_value(report.stage).ok();
        let stage = stage.as_ref().and_then(|s| s.as_str()).unwrap_or("?");
        let _ = writeln!(out, "  decided at: {stage}");
        for (name, l) in [("first", &report.first), ("second", &report.second)] {
            let _ = writeln!(out, "  {name} loop normalized at {}", l.base);
            write_factors(out, name, &l.factors);
        }
        if let Some(b) = &report.aligned_base {
            let _ = writeln!(out, "  aligned base: {b}");
        }
        if let Some(gens) = &report.centralizer_generators {
            let _ = writeln!(out, "  centralizer generators: {}", gens.join(", "));
        }
        if !report.reachable.is_empty() {
            let _ = writeln!(out, "  reachable: {}", report.reachable.join(" "));
        }
        timing_line(out, report.seconds);
    })
}

fn oracle_pair_cmd(ctx: &Ctx, args: &PairArgs, conjugacy: bool) -> CliResult<String> {
    let g = load_group(&args.group)?;
    let (w, v) = word_pair(&g, args)?;
    let answer = if conjugacy {
        oracle::oracle_conjugate(&g, &w, &v)
    } else {
        oracle::oracle_equal(&g, &w, &v)
    }
    .map_err(input("oracle"))?;
    let report = OracleReport { answer };
    ctx.emit(&report, |out| {
        let _ = writeln!(out, "{}", yes_no(answer));
    })
}

fn oracle_groupoid_cmd(ctx: &Ctx, args: &OracleGroupoidArgs) -> CliResult<String> {
    let g = load_group(&args.files.group)?;
    let (cx, bw1, bw2) = loops(&g, &args.files, &args.loop1, &args.loop2)?;
    let answer = oracle::oracle_groupoid_conjugate(&cx, &g, &bw1, &bw2, args.max_conj_len)
        .map_err(input("oracle"))?;
    let report = OracleReport { answer };
    ctx.emit(&report, |out| {
        let _ = writeln!(out, "{}", yes_no(answer));
    })
}

fn bench_cmd(ctx: &Ctx, args: &BenchArgs) -> CliResult<String> {
    let g = match &args.group {
        Some(path) => load_group(path)?,
        None => DefiningGraph::free("a", 3),
    };
    if args.sizes.is_empty() || args.sizes.contains(&0) {
        return Err(Failure::Input(
            "argument --sizes: sizes must be positive".into(),
        ));
    }
    let rows = bench::run(&g, &args.sizes, args.reps, args.seed);
    let report = BenchReport {
        ratios: bench::ratios(&rows),
        rows,
    };
    ctx.emit(&report, |out| {
        let _ = writeln!(out, "{:>10} {:>12} {:>12}", "n", "seconds", "seconds/n");
        for r in &report.rows {
            let _ = writeln!(
                out,
                "{:>10} {:>12.6} {:>12.3e}",
                r.n, r.seconds, r.seconds_per_letter
            );
        }
        let ratios: Vec<String> = report.ratios.iter().map(|r| format!("{r:.2}")).collect();
        let _ = writeln!(out, "doubling ratios: {}", ratios.join(" "));
    })
}

fn dispatch(cli: &Cli) -> CliResult<(String, u8)> {
    let ctx = Ctx { cli };
    let ok = |s: String| (s, 0);
    Ok(match &cli.command {
        Command::NormalForm(a) => ok(normal_form_cmd(&ctx, a)?),
        Command::CyclicNormalForm(a) => ok(cyclic_normal_form_cmd(&ctx, a)?),
        Command::WordProblem(a) => ok(word_problem_cmd(&ctx, a)?),
        Command::Conjugate(a) => ok(conjugate_cmd(&ctx, a)?),
        Command::Centralizer(a) => ok(centralizer_cmd(&ctx, a)?),
        Command::ValidateComplex(a) => {
            let (text, valid) = validate_cmd(&ctx, a)?;
            (text, if valid { 0 } else { 2 })
        }
        Command::GroupoidConjugate(a) => ok(groupoid_cmd(&ctx, a)?),
        Command::Bench(a) => ok(bench_cmd(&ctx, a)?),
        Command::OracleEqual(a) => ok(oracle_pair_cmd(&ctx, a, false)?),
        Command::OracleConjugate(a) => ok(oracle_pair_cmd(&ctx, a, true)?),
        Command::OracleGroupoid(a) => ok(oracle_groupoid_cmd(&ctx, a)?),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = std::panic::catch_unwind(|| dispatch(&cli));
    match result {
        Ok(Ok((stdout, code))) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Ok(Err(Failure::Input(msg))) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Ok(Err(Failure::Internal(msg))) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("internal error: {msg}\n"),
        },
        Err(_) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: "internal error: assertion failed\n".into(),
        },
    }
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}
