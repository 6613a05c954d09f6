mod render;

use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use superdim::cup::parse_int_set;
use superdim::schur::is_covariant_max_atypical;
use superdim::verify::{Suite, SuiteReport};
use superdim::weight::ExtProfile;
use superdim::{
    algorithm_iv, compact, covariant_sdim_oracle, expand, m_closed, m_oracle, move_sites,
    reduce_trace, sdim, to_highest_weight, BlockId, Error, Labeling, MoveExpansion, MoveSite,
    Partition, SuperWeight,
};

#[derive(Parser)]
#[command(name = "superdim", version, about = "Superdimensions of Gl(m|n) modules via cup diagrams")]
struct Cli {
    /// Output format; `ascii` and `svg` apply to `render`.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
    Svg,
}

/// A weight `"m|n: a,b ; c,d"`, or labeling positions `--vees {..} --crosses {..}`.
#[derive(Args)]
struct WeightArg {
    weight: Option<String>,
    /// Vee positions on the numberline.
    #[arg(long, conflicts_with = "weight")]
    vees: Option<String>,
    /// Cross positions; with `--vees` the group is Gl(n + #crosses | n).
    #[arg(long, requires = "vees")]
    crosses: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Labeling, block, atypicality, parity and Kostant flag.
    Info(WeightArg),
    /// Superdimension of the simple module.
    Sdim(WeightArg),
    /// Multiplicity from the closed formula, cross-checked by the relations.
    Mult(WeightArg),
    /// Basic moves at every site, or only at `--at`.
    Moves {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
    },
    /// Reduction to fully nested diagrams.
    Reduce {
        #[command(flatten)]
        weight: WeightArg,
        /// Stream every step as one JSON line.
        #[arg(long)]
        trace: bool,
    },
    /// Translation sequence of a Kostant weight.
    Kostant(WeightArg),
    /// Covariant module `{λ}` of Gl(m|n).
    Covariant {
        partition: String,
        m: usize,
        n: usize,
    },
    /// `Ext^j(L, L)` for the ground state of a block.
    Extdim {
        /// Any weight of the block.
        #[arg(long)]
        block: String,
        #[arg(long, default_value_t = 8)]
        jmax: u64,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Draw the cup diagram.
    Render(WeightArg),
}

enum Failure {
    Domain(String),
    Parse(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = run(&cli, &mut stdout);
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(out)) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(3)
        }
    }
}

impl WeightArg {
    fn resolve(&self) -> Result<SuperWeight, Failure> {
        if let Some(s) = &self.weight {
            return Ok(s.parse()?);
        }
        let Some(vees) = &self.vees else {
            return Err(Failure::Parse("expected a weight or --vees".into()));
        };
        let vees: std::collections::BTreeSet<i64> = parse_int_set(vees)?.into_iter().collect();
        let crosses: std::collections::BTreeSet<i64> = match &self.crosses {
            Some(c) => parse_int_set(c)?.into_iter().collect(),
            None => Default::default(),
        };
        let n = vees.len();
        let m = n + crosses.len();
        let lab = Labeling {
            vees,
            crosses,
            circles: Default::default(),
        };
        Ok(SuperWeight::from_labeling(m, n, &lab)?)
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("domain types serialize");
    s.push('\n');
    s
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("domain types serialize");
    s.push('\n');
    s
}

fn text_only(format: Format, cmd: &str) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::Parse(format!("--format svg only applies to render, not {cmd}")));
    }
    Ok(())
}

fn run(cli: &Cli, stdout: &mut impl Write) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Info(w) => {
            text_only(format, "info")?;
            info(&w.resolve()?, format)
        }
        Command::Sdim(w) => {
            text_only(format, "sdim")?;
            let r = sdim(&w.resolve()?);
            if format == Format::Json {
                return Ok(json(&r));
            }
            let mut s = format!("sdim: {}\n", r.sdim);
            if r.maximal_atypical {
                let _ = writeln!(s, "m: {}", r.multiplicity);
                let _ = writeln!(s, "rho: {} (det^{})", r.rho, r.det_twist);
                let _ = writeln!(s, "dim rho: {}", r.dim_rho);
                let _ = writeln!(s, "parity: {}", r.parity_shift);
            } else {
                s.push_str("not maximal atypical\n");
            }
            Ok(s)
        }
        Command::Mult(w) => {
            text_only(format, "mult")?;
            let d = compact(&w.resolve()?)?;
            let closed = m_closed(&d.build());
            let derived = m_oracle(&d)?;
            if closed != derived {
                return Err(Failure::Domain(format!(
                    "closed formula gives {closed} but the relations give {derived}"
                )));
            }
            #[derive(Serialize)]
            struct Mult {
                vees: Vec<i64>,
                m: String,
            }
            if format == Format::Json {
                return Ok(json(&Mult {
                    vees: d.vees().to_vec(),
                    m: closed.to_string(),
                }));
            }
            Ok(format!("{closed}\n"))
        }
        Command::Moves { weight, at } => {
            text_only(format, "moves")?;
            let d = compact(&weight.resolve()?)?;
            let sites: Vec<MoveSite> = match at {
                Some(i) => vec![MoveSite::at(&d, *i).ok_or_else(|| {
                    Failure::Domain(format!("position {i} is not a vee followed by an up label"))
                })?],
                None => move_sites(&d),
            };
            let expansions: Vec<MoveExpansion> = sites.iter().map(expand).collect();
            if format == Format::Json {
                return Ok(json(&expansions));
            }
            let mut s = String::new();
            for e in &expansions {
                let (a, b) = e.site.kind.bounds();
                let kind = if e.site.kind.is_encapsulated() { "encapsulated" } else { "unencapsulated" };
                let _ = writeln!(s, "site {} ({kind}, bounds {a}..{b}) on {}", e.site.i, e.site.center);
                for c in &e.middle {
                    let _ = writeln!(s, "  {:?}: {}", c.kind, c.diagram);
                }
            }
            Ok(s)
        }
        Command::Reduce { weight, trace } => {
            text_only(format, "reduce")?;
            let t = reduce_trace(&weight.resolve()?)?;
            if *trace {
                // one JSON document per line, steps first and the result last
                for step in &t.steps {
                    let _ = stdout.write_all(json_line(step).as_bytes());
                }
                #[derive(Serialize)]
                struct Done<'a> {
                    root: &'a superdim::CompactedDiagram,
                    leaves: &'a [superdim::reduction::Leaf],
                    m: String,
                }
                return Ok(json_line(&Done {
                    root: &t.root,
                    leaves: &t.leaves,
                    m: t.multiplicity.to_string(),
                }));
            }
            if format == Format::Json {
                return Ok(json(&t));
            }
            let mut s = String::new();
            for step in &t.steps {
                let rhs: Vec<String> = step.rhs.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(
                    s,
                    "{} via {:?} (depth {}) at {}: 2 m{} = {}",
                    step.target,
                    step.algorithm,
                    step.depth,
                    step.site,
                    step.lhs,
                    rhs.iter().map(|r| format!("m{r}")).collect::<Vec<_>>().join(" + ")
                );
            }
            let leaves: Vec<String> = t
                .leaves
                .iter()
                .map(|l| format!("{} m{}", l.coefficient, l.diagram))
                .collect();
            let _ = writeln!(s, "m{} = {} = {}", t.root, leaves.join(" + "), t.multiplicity);
            Ok(s)
        }
        Command::Kostant(w) => {
            text_only(format, "kostant")?;
            let w = w.resolve()?;
            if !w.is_kostant() {
                return Err(Error::NotKostant.into());
            }
            let r = algorithm_iv(&w)?;
            if format == Format::Json {
                return Ok(json(&r));
            }
            let mut s = String::new();
            for (i, d) in r.s.iter().enumerate() {
                let _ = writeln!(s, "S^{i}: {d}");
            }
            let _ = writeln!(s, "Pi: {}", r.pi);
            let n = r.steps.len();
            for (k, step) in r.steps.iter().enumerate() {
                let middle: Vec<String> = step.middle.iter().map(|d| d.to_string()).collect();
                let ok = if step.matches(k + 1 == n) { "ok" } else { "MISMATCH" };
                let _ = writeln!(
                    s,
                    "step {}: S^{} at {} -> {} [{ok}]",
                    k + 1,
                    step.center,
                    step.site.i,
                    middle.join(", ")
                );
            }
            Ok(s)
        }
        Command::Covariant { partition, m, n } => {
            text_only(format, "covariant")?;
            let p: Partition = partition.parse()?;
            let w = to_highest_weight(&p, *m, *n)?;
            let maximal = is_covariant_max_atypical(&p, *m, *n)?;
            let r = sdim(&w);
            let oracle = covariant_sdim_oracle(&p, *m, *n);
            if r.sdim != oracle {
                return Err(Failure::Domain(format!(
                    "sdim {} disagrees with the restriction oracle {oracle}",
                    r.sdim
                )));
            }
            #[derive(Serialize)]
            struct Covariant<'a> {
                partition: &'a Partition,
                highest_weight: &'a SuperWeight,
                maximal_atypical: bool,
                sdim: String,
            }
            if format == Format::Json {
                return Ok(json(&Covariant {
                    partition: &p,
                    highest_weight: &w,
                    maximal_atypical: maximal,
                    sdim: r.sdim.to_string(),
                }));
            }
            Ok(format!(
                "highest weight: {w}\nmaximal atypical: {maximal}\nsdim: {}\n",
                r.sdim
            ))
        }
        Command::Extdim { block, jmax } => {
            text_only(format, "extdim")?;
            let w: SuperWeight = block.parse()?;
            let b = w.block();
            let dims: Vec<ExtProfile> = b.ext_self_dims(*jmax)?;
            if format == Format::Json {
                return Ok(json(&dims));
            }
            let mut s = String::new();
            for e in dims {
                let _ = writeln!(s, "Ext^{}: {}", e.degree, e.dimension);
            }
            Ok(s)
        }
        Command::Verify { suite, bound } => {
            text_only(format, "verify")?;
            let suite: Suite = suite.parse().map_err(Failure::Parse)?;
            let bound = bound.unwrap_or(suite.default_bound());
            if bound == 0 || bound > suite.max_bound() {
                return Err(Failure::Domain(format!(
                    "bound for {} must lie in 1..={}",
                    suite.name(),
                    suite.max_bound()
                )));
            }
            let report = suite.run(bound);
            let out = if format == Format::Json { json(&report) } else { verify_text(&report) };
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Render(w) => {
            let w = w.resolve()?;
            match format {
                Format::Svg => Ok(render::svg(&w)?),
                Format::Json => {
                    let d = compact(&w)?;
                    Ok(json(&d.build()))
                }
                Format::Text | Format::Ascii => Ok(render::ascii(&w)?),
            }
        }
    }
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

fn verify_text(r: &SuiteReport) -> String {
    let verdict = match (r.passed(), use_color()) {
        (true, true) => "\x1b[32mPASS\x1b[0m",
        (false, true) => "\x1b[31mFAIL\x1b[0m",
        (true, false) => "PASS",
        (false, false) => "FAIL",
    };
    let mut s = format!("{verdict} {} (bound {}, {} checks)\n", r.suite.name(), r.bound, r.checked);
    if let Some(c) = &r.counterexample {
        let _ = writeln!(s, "counterexample: {c}");
    }
    s
}

fn info(w: &SuperWeight, format: Format) -> Outcome {
    let lab = w.labeling();
    let block = w.block();
    let trivial = BlockId::trivial(w.m(), w.n())? == block;
    let (p, parity) = w.parity();
    #[derive(Serialize)]
    struct Info<'a> {
        weight: &'a SuperWeight,
        labeling: &'a Labeling,
        window: (i64, i64),
        block: &'a BlockId,
        trivial_block: bool,
        atypicality: usize,
        maximal_atypical: bool,
        p: i64,
        parity: u8,
        kostant: bool,
    }
    let data = Info {
        weight: w,
        labeling: &lab,
        window: lab.window(),
        block: &block,
        trivial_block: trivial,
        atypicality: w.atypicality(),
        maximal_atypical: w.is_maximal_atypical(),
        p,
        parity,
        kostant: w.is_kostant(),
    };
    if format == Format::Json {
        return Ok(json(&data));
    }
    let set = |xs: &std::collections::BTreeSet<i64>| {
        let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        format!("[{}]", v.join(", "))
    };
    let (lo, hi) = data.window;
    let mut s = String::new();
    let _ = writeln!(s, "weight: {w}");
    let _ = writeln!(s, "labeling [{lo}..{hi}]: {}", lab.render(data.window));
    let _ = writeln!(s, "vees: {}", set(&lab.vees));
    let _ = writeln!(s, "crosses: {}", set(&lab.crosses));
    let _ = writeln!(s, "circles: {}", set(&lab.circles));
    let block_text = if trivial { "trivial".to_string() } else { "non-trivial".to_string() };
    let _ = writeln!(s, "block: {block_text}");
    let maximal = if data.maximal_atypical { " (maximal)" } else { "" };
    let _ = writeln!(s, "atypicality: {}{maximal}", data.atypicality);
    let _ = writeln!(s, "parity: p = {p}, {parity} mod 2");
    let _ = writeln!(s, "kostant: {}", data.kostant);
    Ok(s)
}
