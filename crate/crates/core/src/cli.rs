//! Command-line front end. Every command prints one JSON document; failures
//! print `{"error": kind, "reason": message}` and exit nonzero.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::branching::{verify_lemma, LemmaId, LemmaParams, ALL_LEMMAS};
use crate::chars::{
    c2_q_char, c2_spin_char, natural_char, oscillator_chars, spin_char, truncated_sym_char, wedge_char,
    CharacterJson, FormalCharacter, HalfSpin,
};
use crate::classify::{classify, wdeg_verdict};
use crate::error::{Error, Result};
use crate::inductive::{
    bwm_check, check, enumerate_bwm, generate, realize, BwmBudget, Level, SystemDescriptor, WindowBounds,
};
use crate::oracle::{Oracle, OracleLimits};
use crate::rootsys::{Family, GroupId};
use crate::weights::{parse_coords, Weight};

pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;
pub const EXIT_OTHER: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "wdeg", version, about = "Weight multiplicities of simple modules of classical groups")]
pub struct Cli {
    /// TOML file with `[limits]` and `[window]` tables.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Group label such as A4, B3, C3, D4.
    pub group: String,
    #[arg(short, long)]
    pub p: u64,
}

impl GroupArgs {
    fn id(&self) -> Result<GroupId> {
        GroupId::parse(&self.group, self.p)
    }
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Fundamental coordinates, e.g. "[0,1,0,0]".
    #[arg(short, long)]
    pub w: String,
}

impl WeightArgs {
    fn weight(&self) -> Result<Weight> {
        Weight::parse(self.group.id()?, &self.w)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root system data.
    Rootsys {
        #[command(subcommand)]
        cmd: RootsysCmd,
    },
    /// Multiplicity-freeness and weight-degree bounds.
    Classify(WeightArgs),
    /// Weight degree: proven bounds, or the exact value with --oracle.
    Wdeg {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Characters.
    Char {
        #[command(subcommand)]
        cmd: CharCmd,
    },
    /// Composition factors of the restriction to the trailing rank-k subgroup.
    Branch {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        to: usize,
    },
    /// Check a branching rule; --list shows the identifiers.
    VerifyLemma {
        id: Option<String>,
        /// e.g. "group=A5,p=3,i=3,k=2".
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        list: bool,
    },
    /// Inductive systems.
    System {
        #[command(subcommand)]
        cmd: SystemCmd,
    },
    /// Contravariant form on divided-power words of one weight space.
    Gram {
        #[command(flatten)]
        weight: WeightArgs,
        /// Weight of the space, fundamental coordinates.
        #[arg(long)]
        mu: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum RootsysCmd {
    Info {
        #[command(flatten)]
        group: GroupArgs,
        /// Also list the positive roots.
        #[arg(long)]
        roots: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CharName {
    Natural,
    Wedge,
    TruncSym,
    Spin,
    HalfSpinPlus,
    HalfSpinMinus,
    OscillatorOdd,
    OscillatorEven,
    C2Spin,
    C2Q,
    Simple,
    Freudenthal,
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    Build {
        name: CharName,
        #[command(flatten)]
        group: GroupArgs,
        /// Index for wedge powers.
        #[arg(short, long)]
        i: Option<usize>,
        /// Degree for truncated symmetric powers.
        #[arg(short, long)]
        d: Option<u64>,
        /// Highest weight for simple and freudenthal.
        #[arg(short, long)]
        w: Option<String>,
        /// List every weight instead of dominant ones.
        #[arg(long)]
        full: bool,
    },
    /// Operate on character JSON files ("-" reads stdin).
    Op {
        #[command(subcommand)]
        op: CharOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum CharOp {
    Tensor { a: PathBuf, b: PathBuf },
    Twist {
        a: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: u32,
    },
    Dual { a: PathBuf },
    Restrict {
        a: PathBuf,
        #[arg(long)]
        to: usize,
    },
    Decompose { a: PathBuf },
}

#[derive(Args, Debug, Clone)]
pub struct WindowArgs {
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub stabilization: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum SystemCmd {
    /// Level sets of a descriptor such as "L * Fr(S)".
    Realize {
        descriptor: String,
        #[arg(long)]
        family: Family,
        #[arg(short, long)]
        p: u64,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// System generated by per-rank weights given as RANK:[...].
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(short, long)]
        p: u64,
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Bounded or unbounded weight multiplicities.
    Check {
        descriptor: String,
        #[arg(long)]
        family: Family,
        #[arg(short, long)]
        p: u64,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Bounded-multiplicity descriptors with s twisted layers.
    Enumerate {
        family: Family,
        #[arg(short, long)]
        p: u64,
        #[arg(short, long, default_value_t = 1)]
        s: usize,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_sum: Option<i64>,
    },
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(default)]
pub struct Config {
    pub limits: OracleLimits,
    pub window: WindowConfig,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default)]
pub struct WindowConfig {
    pub n_max: usize,
    pub stabilization: usize,
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig { n_max: 8, stabilization: 2 }
    }
}

impl Config {
    pub fn load(path: &std::path::Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    fn bounds(&self, family: Family, w: &WindowArgs) -> WindowBounds {
        let mut b = WindowBounds::for_family(family);
        b.n_max = w.n_max.unwrap_or(self.window.n_max);
        b.stabilization = w.stabilization.unwrap_or(self.window.stabilization);
        if let Some(m) = w.n_min {
            b.n_min = m;
        }
        b
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Refused(_) => EXIT_REFUSED,
        Error::Internal(_) | Error::NotModuleCharacter(_) => EXIT_OTHER,
        _ => EXIT_INVALID,
    }
}

fn read_char(path: &PathBuf) -> Result<FormalCharacter> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    let j: CharacterJson = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("character JSON: {e}")))?;
    FormalCharacter::from_json(&j)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output serializes")
}

fn parse_generator(family: Family, p: u64, text: &str) -> Result<(usize, Vec<i64>)> {
    let (rank, w) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("generator `{text}`: expected RANK:[...]")))?;
    let rank: usize = rank.trim().parse().map_err(|_| Error::Parse(format!("bad rank in `{text}`")))?;
    let coords = parse_coords(w)?;
    Weight::new(GroupId::new(family, rank, p)?, coords.clone())?.require_dominant()?;
    Ok((rank, coords))
}

/// Run one parsed command.
pub fn execute(cli: &Cli) -> Result<Value> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let oracle = {
        let o = Oracle::new(config.limits.clone());
        match std::env::var_os("WDEG_CACHE_DIR") {
            Some(d) => o.with_disk_cache(d),
            None => o,
        }
    };
    match &cli.command {
        Command::Rootsys { cmd: RootsysCmd::Info { group, roots } } => {
            let g = group.id()?;
            let rs = g.root_system();
            let mut v = json!({
                "group": g.label(),
                "family": g.family.to_string(),
                "rank": g.rank,
                "p": g.p,
                "cartan": rs.cartan,
                "positive_roots": rs.num_positive_roots(),
                "weyl_order": rs.weyl_order().to_string(),
                "max_root": rs.max_root().coeffs,
                "rho": rs.rho(),
            });
            if *roots {
                v["roots"] = Value::Array(
                    rs.positive_roots.iter().map(|r| json!({ "coeffs": r.coeffs, "weight": r.fw })).collect(),
                );
            }
            Ok(v)
        }
        Command::Classify(w) => Ok(to_value(&classify(&w.weight()?)?)),
        Command::Wdeg { weight, oracle: exact } => {
            let w = weight.weight()?;
            if *exact {
                Ok(json!({ "group": w.group.label(), "p": w.group.p, "weight": w.coords, "wdeg": oracle.wdeg(&w)? }))
            } else {
                Ok(to_value(&wdeg_verdict(&w)?))
            }
        }
        Command::Char { cmd: CharCmd::Build { name, group, i, d, w, full } } => {
            let g = group.id()?;
            let need_w = || -> Result<Weight> {
                Weight::parse(g, w.as_deref().ok_or_else(|| Error::Parse("missing -w".into()))?)
            };
            let chi = match name {
                CharName::Natural => natural_char(g)?,
                CharName::Wedge => wedge_char(g, i.ok_or_else(|| Error::Parse("missing -i".into()))?)?,
                CharName::TruncSym => truncated_sym_char(g, d.ok_or_else(|| Error::Parse("missing -d".into()))?)?,
                CharName::Spin => spin_char(g, None)?,
                CharName::HalfSpinPlus => spin_char(g, Some(HalfSpin::Plus))?,
                CharName::HalfSpinMinus => spin_char(g, Some(HalfSpin::Minus))?,
                CharName::OscillatorOdd => oscillator_chars(g)?.0,
                CharName::OscillatorEven => oscillator_chars(g)?.1,
                CharName::C2Spin => c2_spin_char(g)?,
                CharName::C2Q => c2_q_char(g)?,
                CharName::Simple => (*oracle.simple_char(&need_w()?)?).clone(),
                CharName::Freudenthal => oracle.freudenthal_char(&need_w()?)?,
            };
            Ok(to_value(&chi.to_json(*full)))
        }
        Command::Char { cmd: CharCmd::Op { op } } => {
            let chi = match op {
                CharOp::Tensor { a, b } => read_char(a)?.tensor(&read_char(b)?)?,
                CharOp::Twist { a, k } => read_char(a)?.twist(*k),
                CharOp::Dual { a } => read_char(a)?.dual(),
                CharOp::Restrict { a, to } => read_char(a)?.restrict(*to)?,
                CharOp::Decompose { a } => {
                    let chi = read_char(a)?;
                    let parts = oracle.decompose(&chi)?;
                    return Ok(json!({
                        "group": chi.group.label(),
                        "p": chi.group.p,
                        "factors": parts.iter().map(|(w, m)| json!({ "weight": w.coords, "mult": m })).collect::<Vec<_>>(),
                    }));
                }
            };
            Ok(to_value(&chi.to_json(false)))
        }
        Command::Branch { weight, to } => {
            let w = weight.weight()?;
            let chi = oracle.simple_char(&w)?.restrict(*to)?;
            let parts = oracle.decompose(&chi)?;
            Ok(json!({
                "group": w.group.label(),
                "p": w.group.p,
                "weight": w.coords,
                "to": chi.group.label(),
                "factors": parts.iter().map(|(w, m)| json!({ "weight": w.coords, "mult": m })).collect::<Vec<_>>(),
            }))
        }
        Command::VerifyLemma { id, params, list } => {
            if *list {
                return Ok(json!(ALL_LEMMAS.iter().map(|l| l.name()).collect::<Vec<_>>()));
            }
            let id: LemmaId = id.as_deref().ok_or_else(|| Error::Parse("missing lemma id".into()))?.parse()?;
            Ok(to_value(&verify_lemma(&oracle, id, &LemmaParams::parse(params)?)?))
        }
        Command::System { cmd } => system(&oracle, &config, cmd),
        Command::Gram { weight, mu } => {
            let w = weight.weight()?;
            let mu = Weight::new(w.group, parse_coords(mu)?)?;
            Ok(to_value(&oracle.gram_report(&w, &mu)?))
        }
    }
}

fn system(oracle: &Oracle, config: &Config, cmd: &SystemCmd) -> Result<Value> {
    match cmd {
        SystemCmd::Realize { descriptor, family, p, window } => {
            let d = SystemDescriptor::parse(descriptor, *family, *p)?;
            let w = realize(oracle, &d, config.bounds(*family, window))?;
            Ok(w.to_json(Some(&check(oracle, &w))))
        }
        SystemCmd::Generate { family, p, generators, window } => {
            let mut gens: BTreeMap<usize, Level> = BTreeMap::new();
            for text in generators {
                let (t, w) = parse_generator(*family, *p, text)?;
                gens.entry(t).or_default().insert(w);
            }
            let w = generate(oracle, *family, *p, &gens, config.bounds(*family, window))?;
            Ok(w.to_json(Some(&check(oracle, &w))))
        }
        SystemCmd::Check { descriptor, family, p, window } => {
            let d = SystemDescriptor::parse(descriptor, *family, *p)?;
            let v = bwm_check(oracle, &d, config.bounds(*family, window))?;
            let mut out = to_value(&v);
            out["descriptor"] = Value::String(d.to_string());
            Ok(out)
        }
        SystemCmd::Enumerate { family, p, s, max_len, max_sum } => {
            let mut budget = BwmBudget::default();
            if let Some(m) = max_len {
                budget.max_len = *m;
            }
            if let Some(m) = max_sum {
                budget.max_coeff_sum = *m;
            }
            Ok(to_value(&enumerate_bwm(*family, *p, *s, budget)?))
        }
    }
}

/// Parse arguments, run, and return the exit code with the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (EXIT_INVALID, json!({ "error": "usage", "reason": e.to_string().trim() }).to_string()),
            };
        }
    };
    let render = |v: &Value| {
        if cli.pretty {
            serde_json::to_string_pretty(v).expect("json")
        } else {
            v.to_string()
        }
    };
    match execute(&cli) {
        Ok(v) => (0, render(&v)),
        Err(e) => (exit_code(&e), render(&json!({ "error": e.kind(), "reason": e.to_string() }))),
    }
}
