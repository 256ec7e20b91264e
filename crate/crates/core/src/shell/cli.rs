//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::census::{self, format_census};
use super::dataset::{dataset_files, load_dataset, DatasetEntry};
use super::harness;
use super::io::{emit, load_str, read_file, Convention, LoadError};
use super::report::{overall, Check, InputDigest, Report, Status};
use crate::chains::{
    boundary, cycle_ls, medial_ls, subcomplex_generators, GeneratorKind, Strictness,
};
use crate::constructions::{self, builtin_corpus, is_kei, PolyRing};
use crate::extensions::{extend, ExtensionSpec};
use crate::homology::cocycle::{cocycle_space, CocycleTable};
use crate::homology::{ChainComplex, Complex};
use crate::identities::{enumerate_words, satisfies, Assignment, Word, WordFilter};
use crate::perm::DEFAULT_CLOSURE_CAP;
use crate::table::{Mode, QuandleTable};

#[derive(Parser, Debug)]
#[command(name = "quandle", version, about = "Exact computations with finite racks and quandles")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Orientation of matrix files.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Right)]
    convention: Convention,
    /// Seed for randomized property sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the rack (or quandle) axioms for each matrix.
    Validate {
        files: Vec<PathBuf>,
        /// Require idempotency as well.
        #[arg(long)]
        quandle: bool,
    },
    /// Invariants: type, Inn(X), connectivity, mediality, faithfulness.
    Info {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        inn_cap: usize,
    },
    /// Emit a constructed quandle as a matrix file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Test inner identities x w = x on a set of quandles.
    Scan {
        /// Words to test (repeatable).
        #[arg(long)]
        word: Vec<String>,
        /// Test every canonical word of this length instead.
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, default_value_t = 2)]
        letters: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::Nontrivial)]
        filter: FilterArg,
        #[arg(long)]
        dataset: Option<PathBuf>,
        /// Scan the built-in corpus.
        #[arg(long)]
        corpus: bool,
        files: Vec<PathBuf>,
    },
    /// The 2-chain of an identity (or a medial quadruple) and its boundary.
    Cycle {
        file: PathBuf,
        #[arg(long)]
        word: Option<String>,
        /// 1-based values `x,y1,..,ym`.
        #[arg(long, value_delimiter = ',')]
        assign: Vec<usize>,
        /// 1-based medial quadruple `x,y,u,v`.
        #[arg(long, value_delimiter = ',')]
        medial: Vec<usize>,
        /// Build the chain even if the identity fails.
        #[arg(long)]
        permissive: bool,
    },
    /// Generators of the identity subcomplex and closure under the boundary.
    Subcomplex {
        file: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        leading_slot: bool,
        /// Print every generator.
        #[arg(long)]
        list: bool,
    },
    /// Integer homology groups.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ComplexArg::Rack)]
        complex: ComplexArg,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// The 2-cocycle space over Z_d.
    Cocycles {
        file: PathBuf,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Quandle)]
        mode: ModeArg,
        /// Print every member (if there are at most 10000).
        #[arg(long)]
        list: bool,
    },
    /// Abelian extension by a cocycle.
    Extend {
        file: PathBuf,
        #[arg(long = "mod")]
        modulus: u64,
        /// Cocycle file: n rows of n residues.
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// Use generator i (0-based) of the computed cocycle space.
        #[arg(long, conflicts_with = "cocycle")]
        generator: Option<usize>,
        /// Also check x w = x on the extension against the cocycle criterion.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Re-run the published computations.
    Reproduce {
        #[arg(value_enum)]
        what: ReproduceArg,
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[arg(long, default_value_t = 4_000_000)]
        inn_cap: usize,
        /// Largest homology degree used by property checks.
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    Trivial { n: usize },
    Dihedral { n: usize },
    /// x*y = t x + (1−t) y on Z_n.
    Alexander { n: usize, t: usize },
    /// Alexander quandle on Z_p[t]/(f) with multiplier u.
    Poly {
        p: u64,
        f: String,
        #[arg(default_value = "t")]
        u: String,
    },
    /// Alexander quandle on Z_p[t]/(1 + t^m + ... + t^{m(n−1)}).
    Burnside { m: usize, n: usize, p: u64 },
    /// Conjugation quandle of S_k.
    Conjugation { k: usize },
    /// All connected quandles of order n (n ≤ 6), concatenated.
    Enumerate { n: usize },
    /// A built-in corpus member by name; without a name, list the names.
    Corpus { name: Option<String> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FilterArg {
    All,
    NoSingleLetter,
    Nontrivial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ComplexArg {
    Rack,
    Quandle,
    Degenerate,
    Identity,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Rack,
    Quandle,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum ReproduceArg {
    Types,
    Exponents,
    Words,
    Theorem,
    All,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("missing --dataset: {0} needs the catalogue directory")]
    MissingDataset(&'static str),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Lib(#[from] crate::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Load(e) if e.is_validation() => 1,
            CliError::Lib(crate::Error::Validation(_)) => 1,
            _ => 2,
        }
    }
}

fn lib<E: Into<crate::Error>>(e: E) -> CliError {
    CliError::Lib(e.into())
}

/// What a command produced.
struct Outcome {
    status: Status,
    text: String,
    result: Value,
}

impl Outcome {
    fn pass(text: String, result: Value) -> Self {
        Self {
            status: Status::Pass,
            text,
            result,
        }
    }

    fn from_checks(checks: Vec<Check>, extra: Value) -> Self {
        let text = checks.iter().map(|c| format!("{c}\n")).collect();
        Self {
            status: overall(&checks),
            text,
            result: json!({ "checks": checks, "data": extra }),
        }
    }
}

struct Ctx {
    convention: Convention,
    seed: u64,
    inputs: Vec<InputDigest>,
}

impl Ctx {
    fn load_all(&mut self, path: &Path) -> Result<Vec<QuandleTable>, CliError> {
        let text = read_file(path)?;
        self.inputs.push(InputDigest::of_bytes(path, text.as_bytes()));
        Ok(load_str(&text, self.convention, path)?)
    }

    fn load(&mut self, path: &Path) -> Result<QuandleTable, CliError> {
        let mut all = self.load_all(path)?;
        if all.len() != 1 {
            return Err(CliError::Usage(format!("{}: expected one matrix, found {}", path.display(), all.len())));
        }
        Ok(all.remove(0))
    }

    fn dataset(&mut self, dir: &Path) -> Result<Vec<DatasetEntry>, CliError> {
        for f in dataset_files(dir)? {
            let bytes = std::fs::read(&f).map_err(|source| LoadError::Io { path: f.clone(), source })?;
            self.inputs.push(InputDigest::of_bytes(&f, &bytes));
        }
        Ok(load_dataset(dir, self.convention)?)
    }
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let command: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let mut ctx = Ctx {
        convention: cli.convention,
        seed: cli.seed,
        inputs: Vec::new(),
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(out) => {
            if cli.json {
                let r = Report::new(command, ctx.inputs, out.status, out.result, start.elapsed());
                println!("{}", r.to_json());
            } else {
                print!("{}", out.text);
            }
            match out.status {
                Status::Fail => 1,
                Status::Pass | Status::Skipped => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate { files, quandle } => validate(ctx, &files, quandle),
        Command::Info { file, inn_cap } => info(ctx, &file, inn_cap),
        Command::Gen { kind, out } => gen(ctx, kind, out.as_deref()),
        Command::Scan {
            word,
            length,
            letters,
            filter,
            dataset,
            corpus,
            files,
        } => scan(ctx, &word, length, letters, filter, dataset.as_deref(), corpus, &files),
        Command::Cycle {
            file,
            word,
            assign,
            medial,
            permissive,
        } => cycle(ctx, &file, word.as_deref(), &assign, &medial, permissive),
        Command::Subcomplex {
            file,
            word,
            degree,
            leading_slot,
            list,
        } => subcomplex(ctx, &file, &word, degree, leading_slot, list),
        Command::Homology {
            file,
            complex,
            word,
            max_degree,
        } => homology(ctx, &file, complex, word.as_deref(), max_degree),
        Command::Cocycles {
            file,
            modulus,
            mode,
            list,
        } => cocycles(ctx, &file, modulus, mode, list),
        Command::Extend {
            file,
            modulus,
            cocycle,
            generator,
            word,
            out,
        } => extension(ctx, &file, modulus, cocycle.as_deref(), generator, word.as_deref(), out.as_deref()),
        Command::Reproduce {
            what,
            dataset,
            inn_cap,
            max_degree,
        } => reproduce(ctx, what, dataset.as_deref(), inn_cap, max_degree),
    }
}

fn parse_word(w: &str) -> Result<Word, CliError> {
    Word::parse(w).map_err(lib)
}

fn validate(ctx: &mut Ctx, files: &[PathBuf], quandle: bool) -> Result<Outcome, CliError> {
    if files.is_empty() {
        return Err(CliError::Usage("no input files".into()));
    }
    let mut checks = Vec::new();
    for f in files {
        let name = f.display().to_string();
        match ctx.load_all(f) {
            Ok(tables) => {
                for (i, q) in tables.iter().enumerate() {
                    let label = if tables.len() > 1 { format!("{name}#{}", i + 1) } else { name.clone() };
                    let ok = !quandle || q.is_quandle();
                    let kind = if q.is_quandle() { "quandle" } else { "rack (not idempotent)" };
                    checks.push(Check::new(label, ok, format!("order {}, {kind}", q.order())));
                }
            }
            Err(CliError::Load(e)) if e.is_validation() => checks.push(Check::new(name, false, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome::from_checks(checks, Value::Null))
}

fn info(ctx: &mut Ctx, file: &Path, cap: usize) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let r = q.invariants_with_cap(cap).map_err(lib)?;
    let orbits = q.orbits().len();
    let mut text = String::new();
    writeln!(text, "order={}", r.order).unwrap();
    writeln!(text, "quandle={}", r.is_quandle).unwrap();
    writeln!(text, "type={}", r.r#type).unwrap();
    writeln!(text, "connected={}", r.is_connected).unwrap();
    writeln!(text, "orbits={orbits}").unwrap();
    writeln!(text, "medial={}", r.is_medial).unwrap();
    writeln!(text, "faithful={}", r.is_faithful).unwrap();
    writeln!(text, "kei={}", is_kei(&q)).unwrap();
    writeln!(text, "inn_order={}", r.inn_order).unwrap();
    writeln!(text, "inn_exponent={}", r.inn_exponent).unwrap();
    let mut result = serde_json::to_value(&r).expect("serializable");
    result["orbits"] = json!(orbits);
    result["kei"] = json!(is_kei(&q));
    Ok(Outcome::pass(text, result))
}

fn gen(ctx: &mut Ctx, kind: GenKind, out: Option<&Path>) -> Result<Outcome, CliError> {
    let tables: Vec<QuandleTable> = match kind {
        GenKind::Trivial { n } => vec![constructions::trivial(n).map_err(lib)?],
        GenKind::Dihedral { n } => vec![constructions::dihedral(n).map_err(lib)?],
        GenKind::Alexander { n, t } => vec![constructions::alexander_zn(n, t).map_err(lib)?],
        GenKind::Poly { p, f, u } => {
            let ring = PolyRing::new(p, PolyRing::parse_poly(&f, p).map_err(lib)?).map_err(lib)?;
            let u = PolyRing::parse_poly(&u, p).map_err(lib)?;
            vec![constructions::alexander_poly(&ring, &u).map_err(lib)?]
        }
        GenKind::Burnside { m, n, p } => vec![constructions::burnside_family(m, n, p).map_err(lib)?],
        GenKind::Conjugation { k } => {
            let g = constructions::symmetric_group(k).map_err(lib)?;
            vec![constructions::conjugation(&g).map_err(lib)?]
        }
        GenKind::Enumerate { n } => constructions::enumerate_connected(n).map_err(lib)?,
        GenKind::Corpus { name: None } => {
            let names: Vec<String> = builtin_corpus().into_iter().map(|n| n.name).collect();
            let text = names.iter().map(|n| format!("{n}\n")).collect();
            return Ok(Outcome::pass(text, json!({ "corpus": names })));
        }
        GenKind::Corpus { name: Some(name) } => {
            let found = builtin_corpus().into_iter().find(|n| n.name == name);
            vec![found.ok_or_else(|| CliError::Usage(format!("no corpus member named {name:?}")))?.table]
        }
    };
    let text: String = tables.iter().map(|q| emit(q, ctx.convention)).collect::<Vec<_>>().join("\n");
    let result = json!({
        "count": tables.len(),
        "tables": tables.iter().map(|q| emit(q, ctx.convention)).collect::<Vec<_>>(),
    });
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })?;
            Ok(Outcome::pass(format!("wrote {} matrices to {}\n", tables.len(), path.display()), result))
        }
        None => Ok(Outcome::pass(text, result)),
    }
}

#[allow(clippy::too_many_arguments)]
fn scan(
    ctx: &mut Ctx,
    word: &[String],
    length: Option<usize>,
    letters: usize,
    filter: FilterArg,
    dataset: Option<&Path>,
    corpus: bool,
    files: &[PathBuf],
) -> Result<Outcome, CliError> {
    let words: Vec<Word> = match length {
        Some(k) => {
            if letters == 0 || letters > k {
                return Err(CliError::Usage("need 1 ≤ --letters ≤ --length".into()));
            }
            let f = match filter {
                FilterArg::All => WordFilter::All,
                FilterArg::NoSingleLetter => WordFilter::NoSingleLetter,
                FilterArg::Nontrivial => WordFilter::NontrivialCandidates,
            };
            let mut ws: Vec<Word> = word.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?;
            ws.extend(enumerate_words(k, letters, f));
            ws
        }
        None => word.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?,
    };
    if words.is_empty() {
        return Err(CliError::Usage("give --word or --length".into()));
    }
    let mut named: Vec<(String, QuandleTable)> = Vec::new();
    if let Some(dir) = dataset {
        named.extend(ctx.dataset(dir)?.into_iter().map(|e| (e.name(), e.table)));
    }
    if corpus {
        named.extend(builtin_corpus().into_iter().map(|n| (n.name, n.table)));
    }
    for f in files {
        let tables = ctx.load_all(f)?;
        let many = tables.len() > 1;
        for (i, q) in tables.into_iter().enumerate() {
            let label = if many { format!("{}#{}", f.display(), i + 1) } else { f.display().to_string() };
            named.push((label, q));
        }
    }
    if named.is_empty() {
        return Err(CliError::Usage("nothing to scan: give files, --dataset or --corpus".into()));
    }
    let tables: Vec<QuandleTable> = named.iter().map(|(_, q)| q.clone()).collect();
    let report = crate::identities::scan(&tables, &words);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (j, w) in words.iter().enumerate() {
        let hits = report.satisfying(j);
        let keis = hits.iter().filter(|&&i| is_kei(&tables[i])).count();
        let names: Vec<&str> = hits.iter().map(|&i| named[i].0.as_str()).collect();
        writeln!(text, "{w}: {} satisfy ({keis} keis): {}", hits.len(), names.join(" ")).unwrap();
        rows.push(json!({ "word": w.to_string(), "count": hits.len(), "keis": keis, "quandles": names }));
    }
    Ok(Outcome::pass(text, json!({ "scanned": named.len(), "words": rows })))
}

/// 1-based CLI values to 0-based elements.
fn elements(values: &[usize], order: usize) -> Result<Vec<usize>, CliError> {
    values
        .iter()
        .map(|&v| {
            if v == 0 || v > order {
                Err(CliError::Usage(format!("element {v} outside 1..={order}")))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn cycle(
    ctx: &mut Ctx,
    file: &Path,
    word: Option<&str>,
    assign: &[usize],
    medial: &[usize],
    permissive: bool,
) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let strictness = if permissive { Strictness::Permissive } else { Strictness::Strict };
    let chain = match (word, medial.len()) {
        (Some(w), 0) => {
            let w = parse_word(w)?;
            let vals = elements(assign, q.order())?;
            if vals.is_empty() {
                return Err(CliError::Usage("--assign x,y1,..,ym is required".into()));
            }
            let a = Assignment {
                x: vals[0],
                ys: vals[1..].to_vec(),
            };
            cycle_ls(&q, &w, &a, strictness).map_err(lib)?
        }
        (None, 4) => {
            let v = elements(medial, q.order())?;
            medial_ls(&q, [v[0], v[1], v[2], v[3]], strictness).map_err(lib)?
        }
        _ => return Err(CliError::Usage("give either --word with --assign, or --medial x,y,u,v".into())),
    };
    let d = boundary(&q, &chain);
    let check = Check::new("boundary vanishes", d.is_zero(), format!("∂ = {d}"));
    let mut out = Outcome::from_checks(vec![check], json!({ "chain": chain.to_string(), "boundary": d.to_string() }));
    out.text = format!("L = {chain}\n{}", out.text);
    Ok(out)
}

fn subcomplex(
    ctx: &mut Ctx,
    file: &Path,
    word: &str,
    degree: usize,
    leading_slot: bool,
    list: bool,
) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let w = parse_word(word)?;
    let sat = satisfies(&q, &w);
    let kind = GeneratorKind::Identity {
        word: w.clone(),
        leading_slot,
    };
    let gens = subcomplex_generators(&q, &kind, degree).map_err(lib)?;
    let min = if leading_slot { 1 } else { 2 };
    let mut lower = if degree > min {
        subcomplex_generators(&q, &kind, degree - 1).map_err(lib)?.span()
    } else {
        crate::homology::lattice::Lattice::new(q.order().pow(degree.saturating_sub(1) as u32))
    };
    let outside = gens
        .chains
        .iter()
        .find(|c| !lower.contains(&boundary(&q, c).to_sparse_row(q.order())));
    let rank = gens.span().rank();
    let mut checks = vec![Check::new(
        "identity holds",
        sat.satisfied,
        format!("x{w} = x, {} assignments checked", sat.tuples_checked),
    )];
    checks.push(Check::new(
        "boundary closure",
        outside.is_none(),
        match outside {
            None => format!("∂ of all {} generators lies in the degree-{} span", gens.len(), degree - 1),
            Some(c) => format!("∂({c}) leaves the span"),
        },
    ));
    let mut out = Outcome::from_checks(checks, json!({ "generators": gens.len(), "rank": rank, "degree": degree }));
    let mut head = format!("C^S_{degree}: {} distinct generators, rank {rank}\n", gens.len());
    if list {
        for c in &gens.chains {
            writeln!(head, "  {c}").unwrap();
        }
    }
    lower.hermite_reduce();
    out.text = head + &out.text;
    Ok(out)
}

fn homology(ctx: &mut Ctx, file: &Path, complex: ComplexArg, word: Option<&str>, max_degree: usize) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let complex = match (complex, word) {
        (ComplexArg::Rack, _) => Complex::Rack,
        (ComplexArg::Quandle, _) => Complex::Quandle,
        (ComplexArg::Degenerate, _) => Complex::Degenerate,
        (ComplexArg::Identity, Some(w)) => Complex::identity(parse_word(w)?),
        (ComplexArg::Identity, None) => return Err(CliError::Usage("--complex identity needs --word".into())),
    };
    let mut cc = ChainComplex::new(&q, complex.clone()).map_err(lib)?;
    let mut text = String::new();
    let mut groups = Vec::new();
    let mut checks = Vec::new();
    for n in 1..=max_degree {
        let h = cc.homology(n).map_err(lib)?;
        writeln!(text, "H_{n} = {h}").unwrap();
        groups.push(json!({ "degree": n, "group": h }));
        let ok = cc.boundary_squares_to_zero(n).map_err(lib)?;
        checks.push(Check::new(format!("∂_{n}∘∂_{} = 0", n + 1), ok, ""));
    }
    let mut out = Outcome::from_checks(checks, json!({ "complex": complex, "homology": groups }));
    out.text = text + &out.text;
    Ok(out)
}

fn cocycles(ctx: &mut Ctx, file: &Path, d: u64, mode: ModeArg, list: bool) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let mode = match mode {
        ModeArg::Rack => Mode::Rack,
        ModeArg::Quandle => Mode::Quandle,
    };
    let space = cocycle_space(&q, d, mode).map_err(lib)?;
    let mut text = format!(
        "cocycle space over Z_{d}: {} elements, generator orders {:?}\n",
        space.cardinality, space.orders
    );
    for (i, g) in space.generators.iter().enumerate() {
        writeln!(text, "generator {i}: {:?}", g.rows()).unwrap();
    }
    let mut result = serde_json::to_value(&space).expect("serializable");
    if list {
        match space.members(10_000) {
            Some(ms) => {
                for m in &ms {
                    writeln!(text, "{:?}", m.rows()).unwrap();
                }
                result["members"] = serde_json::to_value(&ms).expect("serializable");
            }
            None => writeln!(text, "more than 10000 members; not listed").unwrap(),
        }
    }
    Ok(Outcome::pass(text, result))
}

fn parse_cocycle(text: &str, n: usize, d: u64, mode: Mode) -> Result<CocycleTable, CliError> {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|t| t.parse::<i64>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("cocycle file: {e}")))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("cocycle file must hold {n} rows of {n} values")));
    }
    Ok(CocycleTable::from_fn(n, d, mode, |x, y| rows[x][y]))
}

fn extension(
    ctx: &mut Ctx,
    file: &Path,
    d: u64,
    cocycle: Option<&Path>,
    generator: Option<usize>,
    word: Option<&str>,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let q = ctx.load(file)?;
    let mode = if q.is_quandle() { Mode::Quandle } else { Mode::Rack };
    let phi = match (cocycle, generator) {
        (Some(path), _) => {
            let text = read_file(path)?;
            ctx.inputs.push(InputDigest::of_bytes(path, text.as_bytes()));
            parse_cocycle(&text, q.order(), d, mode)?
        }
        (None, Some(i)) => {
            let space = cocycle_space(&q, d, mode).map_err(lib)?;
            space
                .generators
                .get(i)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("the space has {} generators", space.generators.len())))?
        }
        (None, None) => CocycleTable::zero(q.order(), d, mode),
    };
    let spec = ExtensionSpec::new(q, phi).map_err(lib)?;
    let e = extend(&spec).map_err(lib)?;
    let matrix = emit(&e, ctx.convention);
    let mut checks = Vec::new();
    if let Some(w) = word {
        let r = crate::extensions::verify_theorem_ii(&spec, &parse_word(w)?).map_err(lib)?;
        checks.push(Check::new(
            format!("E satisfies x{w}=x ⟺ φ(L_S)=0"),
            r.agree,
            format!("extension satisfies: {}, cocycle vanishes: {}", r.extension_satisfies, r.cocycle_vanishes),
        ));
    }
    let mut outcome = Outcome::from_checks(checks, json!({ "order": e.order(), "matrix": matrix }));
    match out {
        Some(path) => {
            std::fs::write(path, &matrix).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })?;
            outcome.text = format!("wrote order-{} extension to {}\n{}", e.order(), path.display(), outcome.text);
        }
        None => outcome.text = matrix + &outcome.text,
    }
    Ok(outcome)
}

fn reproduce(
    ctx: &mut Ctx,
    what: ReproduceArg,
    dataset: Option<&Path>,
    inn_cap: usize,
    max_degree: usize,
) -> Result<Outcome, CliError> {
    use ReproduceArg::*;
    let needs_data = matches!(what, Types | Exponents);
    if needs_data && dataset.is_none() {
        return Err(CliError::MissingDataset(if what == Types { "the type census" } else { "the exponent census" }));
    }
    let entries = match dataset {
        Some(dir) => Some(ctx.dataset(dir)?),
        None => None,
    };
    let mut checks = Vec::new();
    let mut data = json!({});
    if let Some(es) = &entries {
        let tables: Vec<&QuandleTable> = es.iter().map(|e| &e.table).collect();
        if matches!(what, Types | All) {
            data["type_census"] = json!(format_census(&census::type_census(tables.iter().copied())));
        }
        let all = harness::census_checks(es, inn_cap);
        checks.extend(all.into_iter().filter(|c| match what {
            Types => c.name != "Inn exponent census",
            Exponents => c.name != "type census",
            _ => true,
        }));
    } else if what == All {
        checks.push(Check::skipped("type census", "no --dataset given"));
        checks.push(Check::skipped("Inn exponent census", "no --dataset given"));
    }
    if matches!(what, Words | All) {
        checks.extend(harness::corpus_word_checks());
        match &entries {
            Some(es) => checks.extend(harness::dataset_word_checks(es)),
            None => checks.push(Check::skipped("catalogue word scans", "no --dataset given")),
        }
    }
    if matches!(what, Theorem | All) {
        checks.extend(harness::theorem_checks(ctx.seed));
        let corpus = builtin_corpus();
        let mut bad = Vec::new();
        let mut computed = 0;
        for n in corpus.iter().filter(|n| n.table.order() <= 5) {
            let mut cs = vec![Complex::Rack];
            if n.table.is_quandle() {
                cs.push(Complex::Quandle);
                cs.push(Complex::Degenerate);
            }
            for c in cs {
                let mut cc = ChainComplex::new(&n.table, c.clone()).map_err(lib)?;
                for d in 1..max_degree {
                    computed += 1;
                    if !cc.boundary_squares_to_zero(d).map_err(lib)? {
                        bad.push(format!("{}:{}:{d}", n.name, c.name()));
                    }
                }
            }
        }
        checks.push(Check::new("∂∘∂ = 0 on corpus complexes", bad.is_empty(), format!("{computed} compositions; failures {bad:?}")));
    }
    Ok(Outcome::from_checks(checks, data))
}
