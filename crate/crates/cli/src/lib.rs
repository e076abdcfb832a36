//! Command-line front end. `run` parses arguments, executes one subcommand
//! and returns the process exit status:
//! 0 success, 1 precondition failure or table mismatch, 2 bounds-only
//! results, 64 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use duadic::catalog::{Catalog, CatalogRecord, Query};
use duadic::code::{bch_bound, build, duadic_pair, is_dual_containing, Side};
use duadic::cyclotomic::{no_splitting_exists, Ambient, CosetSet, Shift};
use duadic::quantum::{
    bch_family, duadic_quantum, from_dual_containing, lisonek_extension, multiplier_product, product_rule,
    self_dual_from_even, Construction, QuantumParams,
};
use duadic::splitting::{canonical, extend, generate_lengths, multiplier_lengths, splittings, LengthKind, Splitting};
use duadic::tables::{reproduce_table, Status};
use duadic::weights::{default_workers, nested_search, SearchConfig, Strategy, DEFAULT_BUDGET};
use duadic::Error;
use serde_json::json;
use std::io::{BufRead, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_BOUNDS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "duadic", version, about = "Quantum stabilizer codes from duadic constacyclic codes over GF(4)")]
struct Cli {
    /// Emit one JSON object per result.
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV (tables and lists).
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Codeword visits allowed per distance search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: DUADIC_WORKERS or the core count).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    /// Code length (odd).
    #[arg(long)]
    n: u32,
    /// Shift constant: 1, omega or omega2.
    #[arg(long, default_value = "1")]
    shift: String,
    /// Comma-separated coset leaders.
    #[arg(long, value_delimiter = ',')]
    leaders: Vec<u32>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the splittings of the index set given by -2.
    Splittings {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1")]
        shift: String,
        /// Only the canonical splitting of a length 3^i * n1.
        #[arg(long)]
        canonical: bool,
        /// Print at most this many splittings.
        #[arg(long, default_value_t = 64)]
        limit: u64,
    },
    /// Build a code from the leaders of its defining set.
    Build(CodeArgs),
    /// Minimum distance, odd-like weight or weight counts.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        /// Treat the leaders as S1 and also report the odd-like weight.
        #[arg(long)]
        odd_like: bool,
        /// Count codewords of weight up to this value.
        #[arg(long)]
        census: Option<u32>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Quantum code parameters from one construction.
    Quantum {
        #[arg(value_enum)]
        construction: QuantumKind,
        #[command(flatten)]
        code: CodeArgs,
        /// Append the result to this catalog file.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Extend a splitting of n1 by one of n2.
    Extend {
        /// n:shift:leaders of S1, or n:shift:trivial.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Product rules: left x right, or a multiplier length times right.
    Product {
        /// n:shift:leaders of a duadic code.
        #[arg(long, required_unless_present = "multiplier")]
        left: Option<String>,
        /// n:shift:leaders of the right factor.
        #[arg(long)]
        right: String,
        /// Multiplier length m in place of a left factor.
        #[arg(long, conflicts_with = "left")]
        multiplier: Option<u32>,
        /// Append the result to this catalog file.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// The [[5*3^i+1, 3^i-1, >=6]] family.
    Family {
        #[arg(long)]
        i: u32,
    },
    /// Lengths with a guaranteed splitting, and multiplier lengths.
    Lengths {
        /// Largest length to list.
        #[arg(long)]
        limit: u32,
        #[arg(long, default_value = "1")]
        shift: String,
        #[arg(long)]
        multipliers: bool,
    },
    /// Reproduce a published table.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        /// Restrict to these lengths.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<u32>,
    },
    /// Append to or query a catalog file.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Read records (one JSON object per line) from stdin and append them.
    Append {
        #[arg(long)]
        file: String,
        /// Add the current time to records without one.
        #[arg(long)]
        stamp: bool,
    },
    /// Print stored records matching the filters.
    Query {
        #[arg(long)]
        file: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        construction: Option<String>,
        #[arg(long)]
        shift: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MethodArg {
    Auto,
    Exhaustive,
    InformationSet,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
#[value(rename_all = "snake_case")]
enum QuantumKind {
    Duadic,
    DualContaining,
    SelfDual,
    LisonekExtension,
}

struct Ctx<'a> {
    json: bool,
    csv: bool,
    cfg: SearchConfig,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn BufRead,
}

type CmdResult = Result<i32, Error>;

macro_rules! say {
    ($w:expr, $($t:tt)*) => {{
        let _ = writeln!($w, $($t)*);
    }};
}

/// Run with process stdin.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    run_with_input(args, &mut lock, out, err)
}

pub fn run_with_input<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let mut cfg = SearchConfig::with_budget(cli.budget);
    cfg.workers = cli.workers.unwrap_or_else(default_workers).max(1);
    let mut ctx = Ctx { json: cli.json, csv: cli.csv, cfg, out, err, stdin };
    match dispatch(cli.cmd, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            say!(ctx.err, "error: {e}");
            EXIT_PRECONDITION
        }
    }
}

fn parse_shift(s: &str) -> Result<Shift, Error> {
    s.parse()
}

/// Apply the CLI's equivalence routing: `omega2` is served by `omega`, and
/// for lengths prime to 3 the constacyclic ring by the cyclic one.
fn route(ctx: &mut Ctx, n: u32, shift: Shift, leaders: Option<&[u32]>) -> Result<(Ambient, Option<CosetSet>), Error> {
    let mut shift = shift;
    if shift == Shift::Omega2 {
        say!(ctx.err, "note: omega2-constacyclic codes are served by the equivalent omega construction");
        shift = Shift::Omega;
    }
    let amb = Ambient::new(n, shift)?;
    let set = leaders.map(|l| CosetSet::from_leaders(amb, l)).transpose()?;
    if shift == Shift::Omega && n % 3 != 0 {
        say!(ctx.err, "note: length {n} is prime to 3, routing to the equivalent cyclic construction");
        let cyc = Ambient::new(n, Shift::One)?;
        let set = match set {
            Some(s) => Some(CosetSet::new(cyc, s.iter().map(|x| x % n).collect())?),
            None => None,
        };
        return Ok((cyc, set));
    }
    Ok((amb, set))
}

fn code_set(ctx: &mut Ctx, c: &CodeArgs) -> Result<CosetSet, Error> {
    let (_, set) = route(ctx, c.n, parse_shift(&c.shift)?, Some(&c.leaders))?;
    Ok(set.unwrap())
}

/// `n:shift:leaders` or `n:shift:trivial`, no routing.
fn parse_witness(spec: &str) -> Result<Splitting, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected n:shift:leaders, got `{spec}`")));
    }
    let n: u32 = parts[0].trim().parse().map_err(|_| Error::Parse(format!("bad length `{}`", parts[0])))?;
    let shift = parse_shift(parts[1])?;
    let amb = Ambient::new(n, shift)?;
    if parts[2].trim() == "trivial" {
        return Splitting::trivial(amb);
    }
    let leaders = parts[2]
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad leader `{x}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Splitting::from_odd_set(CosetSet::from_leaders(amb, &leaders)?)
}

fn dispatch(cmd: Cmd, ctx: &mut Ctx) -> CmdResult {
    match cmd {
        Cmd::Splittings { n, shift, canonical: canon, limit } => cmd_splittings(ctx, n, &shift, canon, limit),
        Cmd::Build(c) => cmd_build(ctx, &c),
        Cmd::Distance { code, odd_like, census, method } => cmd_distance(ctx, &code, odd_like, census, method),
        Cmd::Quantum { construction, code, catalog } => {
            let set = code_set(ctx, &code)?;
            let q = match construction {
                QuantumKind::Duadic => duadic_quantum(&Splitting::from_odd_set(set)?, &ctx.cfg)?,
                QuantumKind::DualContaining => from_dual_containing(&build(set.ambient(), &set)?, &ctx.cfg)?,
                QuantumKind::SelfDual => self_dual_from_even(&duadic_pair(&Splitting::from_odd_set(set)?, Side::S1)?, &ctx.cfg)?,
                QuantumKind::LisonekExtension => lisonek_extension(&build(set.ambient(), &set)?, &ctx.cfg)?,
            };
            emit_params(ctx, &q, catalog.as_deref())
        }
        Cmd::Extend { left, right } => {
            let sp = extend(&parse_witness(&left)?, &parse_witness(&right)?)?;
            emit_splitting(ctx, None, &sp);
            Ok(EXIT_OK)
        }
        Cmd::Product { left, right, multiplier, catalog } => {
            let r = duadic_quantum(&parse_witness(&right)?, &ctx.cfg)?;
            let q = match (left, multiplier) {
                (_, Some(m)) => multiplier_product(m, &r)?,
                (Some(l), None) => product_rule(&duadic_quantum(&parse_witness(&l)?, &ctx.cfg)?, &r)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            emit_params(ctx, &q, catalog.as_deref())
        }
        Cmd::Family { i } => {
            let q = bch_family(i, &ctx.cfg)?;
            emit_params(ctx, &q, None)
        }
        Cmd::Lengths { limit, shift, multipliers } => cmd_lengths(ctx, limit, &shift, multipliers),
        Cmd::Table { id, rows } => cmd_table(ctx, id, &rows),
        Cmd::Catalog { action } => cmd_catalog(ctx, action),
    }
}

fn emit_splitting(ctx: &mut Ctx, index: Option<u128>, sp: &Splitting) {
    if ctx.json {
        let v = json!({
            "index": index.map(|i| i as u64),
            "n": sp.ambient().n(),
            "shift": sp.ambient().shift(),
            "x": sp.x.leaders(),
            "s1": sp.s1.leaders(),
            "s2": sp.s2.leaders(),
            "size_x": sp.x.len(),
            "size_s": sp.s1.len(),
        });
        say!(ctx.out, "{v}");
    } else if ctx.csv {
        let j = |v: Vec<u32>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        say!(ctx.out, "{},{},{},{}", index.map(|i| i.to_string()).unwrap_or_default(), j(sp.x.leaders()), j(sp.s1.leaders()), j(sp.s2.leaders()));
    } else {
        match index {
            Some(i) => say!(ctx.out, "{i:>4}  {sp}"),
            None => say!(ctx.out, "{sp}"),
        }
    }
}

fn cmd_splittings(ctx: &mut Ctx, n: u32, shift: &str, canon: bool, limit: u64) -> CmdResult {
    let (amb, _) = route(ctx, n, parse_shift(shift)?, None)?;
    if canon {
        let sp = canonical(amb)?;
        emit_splitting(ctx, None, &sp);
        return Ok(EXIT_OK);
    }
    if no_splitting_exists(amb) {
        say!(ctx.err, "no splitting: every coset of length {n} is fixed by -2");
        return Ok(EXIT_OK);
    }
    let all = splittings(amb);
    let total = all.total();
    if ctx.csv {
        say!(ctx.out, "index,x,s1,s2");
    }
    for (i, sp) in all.take(limit as usize).enumerate() {
        emit_splitting(ctx, Some(i as u128), &sp);
    }
    if total > limit as u128 {
        say!(ctx.err, "showing {limit} of {total} splittings");
    }
    Ok(EXIT_OK)
}

fn cmd_build(ctx: &mut Ctx, c: &CodeArgs) -> CmdResult {
    let set = code_set(ctx, c)?;
    let code = build(set.ambient(), &set)?;
    let amb = code.ambient();
    if ctx.json {
        let v = json!({
            "n": amb.n(),
            "shift": amb.shift(),
            "leaders": set.leaders(),
            "dimension": code.dimension(),
            "generator": code.generator().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "dual_containing": is_dual_containing(&set),
            "bch_bound": bch_bound(&set),
        });
        say!(ctx.out, "{v}");
    } else {
        say!(ctx.out, "[{}, {}] {}-constacyclic code", amb.n(), code.dimension(), amb.shift());
        say!(ctx.out, "defining set: {set}");
        say!(ctx.out, "generator: {}", code.generator());
        say!(ctx.out, "dual-containing: {}", is_dual_containing(&set));
        say!(ctx.out, "BCH bound: {}", bch_bound(&set));
    }
    Ok(EXIT_OK)
}

fn cmd_distance(ctx: &mut Ctx, c: &CodeArgs, odd_like: bool, census: Option<u32>, method: MethodArg) -> CmdResult {
    let set = code_set(ctx, c)?;
    ctx.cfg.strategy = match method {
        MethodArg::Auto => Strategy::Auto,
        MethodArg::Exhaustive => Strategy::Exhaustive,
        MethodArg::InformationSet => Strategy::InformationSet,
    };
    let (outer, inner) = if odd_like {
        let p = duadic_pair(&Splitting::from_odd_set(set)?, Side::S1)?;
        (p.odd, Some(p.even))
    } else {
        (build(set.ambient(), &set)?, None)
    };
    let r = nested_search(&outer, inner.as_ref(), census, &ctx.cfg)?;
    if ctx.json {
        let mut v = serde_json::to_value(&r).expect("report serialises");
        v["n"] = json!(outer.n());
        v["dimension"] = json!(outer.dimension());
        say!(ctx.out, "{v}");
    } else {
        say!(ctx.out, "code: [{}, {}]", outer.n(), outer.dimension());
        match r.d {
            Some(d) => say!(ctx.out, "d: {d}"),
            None => say!(ctx.out, "d: undefined (zero code)"),
        }
        if let Some(d) = r.d_odd {
            say!(ctx.out, "d_odd: {d}");
        }
        if let Some(w) = r.min_inner_found {
            say!(ctx.out, "lightest even-like word found: {w}");
        }
        if let Some(c) = r.counts_complete_through {
            if census.is_some() {
                say!(ctx.out, "weight counts (complete through {c}):");
                for (w, n) in &r.weight_counts {
                    say!(ctx.out, "  {w:>3} {n}");
                }
            }
        }
        say!(ctx.out, "method: {}, visited {}", r.method, r.enumerated);
    }
    Ok(if r.certified { EXIT_OK } else { EXIT_BOUNDS })
}

fn emit_params(ctx: &mut Ctx, q: &QuantumParams, catalog: Option<&str>) -> CmdResult {
    let rec = CatalogRecord::from_params(q);
    if ctx.json {
        say!(ctx.out, "{}", rec.to_line());
    } else {
        say!(ctx.out, "{q}");
        say!(ctx.out, "witness: n = {} shift = {} leaders = {:?}", q.witness_n, q.shift, q.leaders);
        for note in &q.notes {
            say!(ctx.out, "note: {note}");
        }
    }
    if let Some(path) = catalog {
        Catalog::open(path).append(&rec.stamped())?;
    }
    // Self-dual and extension constructions only ever promise a bound.
    let searched = matches!(
        q.construction,
        Construction::Duadic | Construction::DualContaining | Construction::ProductRule1 | Construction::ProductRule2
    );
    Ok(if q.is_certified() || !searched { EXIT_OK } else { EXIT_BOUNDS })
}

fn cmd_lengths(ctx: &mut Ctx, limit: u32, shift: &str, multipliers: bool) -> CmdResult {
    let shift = parse_shift(shift)?;
    if multipliers {
        let ms = multiplier_lengths(limit, shift);
        if ctx.json {
            say!(ctx.out, "{}", json!({ "multiplier_lengths": ms }));
        } else {
            say!(ctx.out, "{}", ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(if ctx.csv { "\n" } else { " " }));
        }
        return Ok(EXIT_OK);
    }
    if ctx.csv {
        say!(ctx.out, "n,kind,dimension");
    }
    for r in generate_lengths(limit, shift) {
        if ctx.json {
            say!(ctx.out, "{}", serde_json::to_string(&r).expect("record serialises"));
            continue;
        }
        let (kind, dim) = match r.kind {
            LengthKind::Duadic { dimension } => ("duadic", dimension.to_string()),
            LengthKind::Multiplier => ("multiplier", String::new()),
        };
        if ctx.csv {
            say!(ctx.out, "{},{kind},{dim}", r.n);
        } else {
            say!(ctx.out, "{:>5}  {kind:<10} {dim}", r.n);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(ctx: &mut Ctx, id: u8, rows: &[u32]) -> CmdResult {
    let only = (!rows.is_empty()).then_some(rows);
    let reports = reproduce_table(id, only, &ctx.cfg)?;
    if ctx.csv {
        say!(ctx.out, "table,expected,got,degenerate,status");
    }
    let (mut bad, mut skipped) = (false, false);
    for r in &reports {
        bad |= matches!(r.status, Status::Mismatch(_));
        skipped |= matches!(r.status, Status::Skipped(_));
        let got = r.got.as_ref().map(|q| q.bracket()).unwrap_or_else(|| "-".into());
        let deg = r.got.as_ref().map(|q| q.degenerate.to_string()).unwrap_or_else(|| "-".into());
        if ctx.json {
            let v = json!({
                "table": r.table,
                "expected": r.expected,
                "got": r.got.as_ref().map(CatalogRecord::from_params),
                "status": r.status.to_string(),
                "reason": match &r.status { Status::Mismatch(s) => Some(s.clone()), _ => None },
            });
            say!(ctx.out, "{v}");
        } else if ctx.csv {
            say!(ctx.out, "{},{},{got},{deg},{}", r.table, r.expected, r.status);
        } else {
            let why = match &r.status {
                Status::Mismatch(s) => format!("  ({s})"),
                _ => String::new(),
            };
            say!(ctx.out, "{:<16} {:<18} degenerate={:<8} {}{why}", r.expected.to_string(), got, deg, r.status);
        }
    }
    Ok(if bad {
        EXIT_PRECONDITION
    } else if skipped {
        EXIT_BOUNDS
    } else {
        EXIT_OK
    })
}

fn cmd_catalog(ctx: &mut Ctx, action: CatalogCmd) -> CmdResult {
    match action {
        CatalogCmd::Append { file, stamp } => {
            let cat = Catalog::open(&file);
            let mut n = 0;
            let mut line = String::new();
            while {
                line.clear();
                ctx.stdin.read_line(&mut line)? > 0
            } {
                if line.trim().is_empty() {
                    continue;
                }
                let mut rec = CatalogRecord::parse(line.trim_end_matches(['\n', '\r']))?;
                if stamp && rec.timestamp.is_none() {
                    rec = rec.stamped();
                }
                rec.witness()?;
                let stored = cat.append(&rec)?;
                say!(ctx.out, "{stored}");
                n += 1;
            }
            say!(ctx.err, "appended {n} record(s) to {file}");
            Ok(EXIT_OK)
        }
        CatalogCmd::Query { file, n, k, construction, shift } => {
            let q = Query {
                n,
                k,
                construction: construction.map(|c| c.parse::<Construction>()).transpose()?,
                shift: shift.map(|s| parse_shift(&s)).transpose()?,
                degenerate: None,
            };
            for (line, _) in Catalog::open(&file).query(&q)? {
                say!(ctx.out, "{line}");
            }
            Ok(EXIT_OK)
        }
    }
}
