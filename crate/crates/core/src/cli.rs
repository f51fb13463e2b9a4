//! Command-line front end.
//!
//! Boolean verbs exit 0 for true and 1 for false. Every error exits 2 with
//! a JSON diagnostic on stderr.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::algebra::{AlgebraVector, Field};
use crate::duality::{
    algebraic_closure, dual_wrt_word, is_algebraic, is_free_factor, is_primitive, q_dual,
};
use crate::error::{Error, Result};
use crate::groups::{group_algebraic_closure_over, subgroup_equal, word_is_primitive, Subgroup};
use crate::intersection::module_intersection;
use crate::module::{
    express_in_basis, module_basis, module_equal, module_membership, module_rank, Submodule,
};
use crate::parse::{
    module_width, parse_element, parse_matrix, parse_module, parse_subgroup, parse_vector,
    parse_word, vector_length,
};
use crate::wire::{
    subgroup_from_json, submodule_from_json, GroebnerJson, SubgroupJson, SubmoduleJson,
};
use crate::wordmeasure::{phi_direct, phi_exact, phi_exact_left, DEFAULT_BUDGET};

const DECIMAL_DIGITS: u32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "fga",
    version,
    about = "Exact computations in free group algebras K[F]"
)]
pub struct Cli {
    /// Coefficient field: gf:<p> or q for the rationals [default: gf:2]
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Rank of the free group F
    #[arg(long, global = true, default_value_t = 2)]
    pub rank: usize,
    /// Ambient dimension k of K[F]^k, inferred from the operands when omitted
    #[arg(long = "ambient-k", global = true)]
    pub ambient_k: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Enumeration budget for word measures
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhiMethod {
    Exact,
    Left,
    Direct,
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Submodule M: generators separated by ';', or @file.json
    #[arg(short = 'M')]
    pub m: String,
    /// Submodule N, the whole module when omitted
    #[arg(short = 'N')]
    pub n: Option<String>,
}

#[derive(Debug, Args)]
pub struct GroupPair {
    /// Subgroup H: words separated by ',' or ';', or @file.json
    #[arg(short = 'H')]
    pub h: String,
    /// Subgroup K, the whole free group when omitted
    #[arg(short = 'K')]
    pub k: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical free basis of a submodule
    Basis {
        #[arg(short = 'M')]
        m: String,
        /// Print the full basis data of the underlying ideal
        #[arg(long)]
        data: bool,
    },
    /// Coefficients of a vector in the canonical basis
    Coeffs {
        #[arg(short = 'M')]
        m: String,
        #[arg(short = 'f')]
        f: String,
    },
    /// Whether a vector lies in a submodule
    Member {
        #[arg(short = 'M')]
        m: String,
        #[arg(short = 'f')]
        f: String,
    },
    /// Whether two submodules are equal
    Equal {
        #[arg(short = 'M')]
        m: String,
        #[arg(short = 'N')]
        n: String,
    },
    /// Rank of a submodule
    Rank {
        #[arg(short = 'M')]
        m: String,
    },
    /// Dual of M with respect to a matrix Q, printed through ι
    Dual {
        /// Matrix: rows separated by ';', entries by ','
        #[arg(short = 'Q', conflicts_with = "word", required_unless_present = "word")]
        q: Option<String>,
        /// Use the 1x1 matrix (w - lambda)
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "1", requires = "word")]
        lambda: String,
        #[arg(short = 'M')]
        m: String,
    },
    /// Algebraic closure of M in N
    Closure(Pair),
    /// Whether M is a free factor of N
    IsFree(Pair),
    /// Whether N is an algebraic extension of M
    IsAlgebraic(Pair),
    /// Whether a vector is part of a basis of N
    IsPrimitive {
        #[arg(short = 'f')]
        f: String,
        #[arg(short = 'N')]
        n: Option<String>,
    },
    /// Intersection of two submodules
    Intersect {
        #[arg(short = 'M')]
        m: String,
        #[arg(short = 'N')]
        n: String,
    },
    /// Algebraic closure of H in K
    GroupClosure(GroupPair),
    /// Whether H is a free factor of K
    GroupIsFree(GroupPair),
    /// Whether K is an algebraic extension of H
    GroupIsAlgebraic(GroupPair),
    /// Whether a word is primitive in K
    WordPrimitive {
        #[arg(short = 'w')]
        w: String,
        #[arg(short = 'K')]
        k: Option<String>,
    },
    /// Word measure phi_{I,J}(N) over GF(q)
    Phi {
        #[arg(short = 'I')]
        i: String,
        #[arg(short = 'J')]
        j: Option<String>,
        /// Field order, a prime
        #[arg(long = "q")]
        q: Option<u64>,
        /// Dimension N
        #[arg(long = "N", default_value_t = 1)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = PhiMethod::Exact)]
        method: PhiMethod,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Reply {
    Bool(bool),
    Rank(usize),
    Module(Submodule),
    Coeffs(Vec<String>),
    Data(GroebnerJson),
    Group(Subgroup),
    Phi(BigRational),
}

struct Ctx {
    field: Field,
    rank: usize,
    k: Option<usize>,
    budget: u128,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: diagnostic("usage", text.trim_end()),
                }
            };
        }
    };
    let output = cli.output;
    match execute(cli) {
        Ok(reply) => {
            let code = match reply {
                Reply::Bool(false) => 1,
                _ => 0,
            };
            match render(&reply, output) {
                Ok(stdout) => Outcome {
                    code,
                    stdout,
                    stderr: String::new(),
                },
                Err(e) => failure(&e),
            }
        }
        Err(e) => failure(&e),
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: diagnostic(e.kind(), &e.to_string()),
    }
}

fn diagnostic(kind: &str, message: &str) -> String {
    format!(
        "{}\n",
        json!({ "error": { "kind": kind, "message": message } })
    )
}

fn read_file(spec: &str) -> Result<Option<String>> {
    match spec.trim().strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(Some)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}"))),
        None => Ok(None),
    }
}

fn spec_width(spec: &str) -> Result<Option<usize>> {
    if let Some(text) = read_file(spec)? {
        let j: SubmoduleJson = serde_json::from_str(&text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("invalid JSON: {e}"),
        })?;
        return Ok(Some(j.k));
    }
    Ok(module_width(spec))
}

impl Ctx {
    /// Ambient dimension: the flag, else the first operand that shows it.
    fn width(&self, modules: &[&str], vectors: &[&str]) -> Result<usize> {
        if let Some(k) = self.k {
            return Ok(k);
        }
        for m in modules {
            if let Some(k) = spec_width(m)? {
                return Ok(k);
            }
        }
        Ok(vectors.iter().find_map(|v| vector_length(v)).unwrap_or(1))
    }

    fn module(&self, spec: &str, k: usize) -> Result<Submodule> {
        let m = match read_file(spec)? {
            Some(text) => submodule_from_json(&text, self.field, self.rank)?,
            None => parse_module(spec, self.field, self.rank, k)?,
        };
        if m.ambient_k() != k {
            return Err(Error::DimensionMismatch(format!(
                "module in K[F]^{} where K[F]^{k} was expected",
                m.ambient_k()
            )));
        }
        Ok(m)
    }

    fn module_or_whole(&self, spec: Option<&str>, k: usize) -> Result<Submodule> {
        match spec {
            Some(s) => self.module(s, k),
            None => Submodule::whole(self.field, self.rank, k),
        }
    }

    fn vector(&self, spec: &str, k: usize) -> Result<AlgebraVector> {
        parse_vector(spec, self.field, self.rank, k)
    }

    fn subgroup(&self, spec: Option<&str>) -> Result<Subgroup> {
        let Some(spec) = spec else {
            return Ok(Subgroup::whole(self.rank));
        };
        let h = match read_file(spec)? {
            Some(text) => subgroup_from_json(&text)?,
            None => parse_subgroup(spec, self.rank)?,
        };
        if h.free_rank() != self.rank {
            return Err(Error::RankMismatch(h.free_rank(), self.rank));
        }
        Ok(h)
    }
}

fn execute(cli: Cli) -> Result<Reply> {
    let field = match (&cli.command, cli.q_flag()) {
        (_, Some(p)) => {
            let f = Field::prime(p)?;
            if let Some(spec) = &cli.field {
                if Field::parse(spec)? != f {
                    return Err(Error::InvalidArgument(format!(
                        "--q {p} contradicts --field {spec}"
                    )));
                }
            }
            f
        }
        _ => Field::parse(cli.field.as_deref().unwrap_or("gf:2"))?,
    };
    let ctx = Ctx {
        field,
        rank: cli.rank,
        k: cli.ambient_k,
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
    };
    match &cli.command {
        Command::Basis { m, data } => {
            let m = ctx.module(m, ctx.width(&[m], &[])?)?;
            if *data {
                Ok(Reply::Data(GroebnerJson::from_data(m.groebner()?)))
            } else {
                Ok(Reply::Module(m))
            }
        }
        Command::Coeffs { m, f } => {
            let k = ctx.width(&[m], &[f])?;
            let m = ctx.module(m, k)?;
            let c = express_in_basis(&m, &ctx.vector(f, k)?)?;
            Ok(Reply::Coeffs(c.iter().map(ToString::to_string).collect()))
        }
        Command::Member { m, f } => {
            let k = ctx.width(&[m], &[f])?;
            let m = ctx.module(m, k)?;
            Ok(Reply::Bool(module_membership(&m, &ctx.vector(f, k)?)?))
        }
        Command::Equal { m, n } => {
            let k = ctx.width(&[m, n], &[])?;
            Ok(Reply::Bool(module_equal(
                &ctx.module(m, k)?,
                &ctx.module(n, k)?,
            )?))
        }
        Command::Rank { m } => {
            let m = ctx.module(m, ctx.width(&[m], &[])?)?;
            Ok(Reply::Rank(module_rank(&m)?))
        }
        Command::Dual { q, word, lambda, m } => match (q, word) {
            (Some(q), _) => {
                let q = parse_matrix(q, ctx.field, ctx.rank)?;
                let k = match ctx.k.or(spec_width(m)?) {
                    Some(k) => k,
                    None => q.rows(),
                };
                Ok(Reply::Module(q_dual(&q, &ctx.module(m, k)?)?))
            }
            (None, Some(w)) => {
                let w = parse_word(w, ctx.rank)?;
                let lambda = parse_element(lambda, ctx.field, ctx.rank)?;
                let lambda = match lambda.as_unit() {
                    Some((c, u)) if u.is_identity() => c.clone(),
                    _ if lambda.is_zero() => ctx.field.zero(),
                    _ => return Err(Error::InvalidArgument("lambda must be a scalar".into())),
                };
                Ok(Reply::Module(dual_wrt_word(
                    &w,
                    &lambda,
                    &ctx.module(m, 1)?,
                )?))
            }
            (None, None) => Err(Error::InvalidArgument("dual needs -Q or --word".into())),
        },
        Command::Closure(p) => {
            let (m, n) = pair(&ctx, p)?;
            Ok(Reply::Module(algebraic_closure(&m, &n)?))
        }
        Command::IsFree(p) => {
            let (m, n) = pair(&ctx, p)?;
            Ok(Reply::Bool(is_free_factor(&m, &n)?))
        }
        Command::IsAlgebraic(p) => {
            let (m, n) = pair(&ctx, p)?;
            Ok(Reply::Bool(is_algebraic(&m, &n)?))
        }
        Command::IsPrimitive { f, n } => {
            let mods: Vec<&str> = n.iter().map(String::as_str).collect();
            let k = ctx.width(&mods, &[f])?;
            let n = ctx.module_or_whole(n.as_deref(), k)?;
            Ok(Reply::Bool(is_primitive(&ctx.vector(f, k)?, &n)?))
        }
        Command::Intersect { m, n } => {
            let k = ctx.width(&[m, n], &[])?;
            Ok(Reply::Module(module_intersection(
                &ctx.module(m, k)?,
                &ctx.module(n, k)?,
            )?))
        }
        Command::GroupClosure(g) => {
            let (h, k) = group_pair(&ctx, g)?;
            Ok(Reply::Group(group_algebraic_closure_over(
                &h, &k, ctx.field,
            )?))
        }
        Command::GroupIsFree(g) => {
            let (h, k) = group_pair(&ctx, g)?;
            let c = group_algebraic_closure_over(&h, &k, ctx.field)?;
            Ok(Reply::Bool(subgroup_equal(&c, &h)?))
        }
        Command::GroupIsAlgebraic(g) => {
            let (h, k) = group_pair(&ctx, g)?;
            let c = group_algebraic_closure_over(&h, &k, ctx.field)?;
            Ok(Reply::Bool(subgroup_equal(&c, &k)?))
        }
        Command::WordPrimitive { w, k } => {
            let k = ctx.subgroup(k.as_deref())?;
            Ok(Reply::Bool(word_is_primitive(
                &parse_word(w, ctx.rank)?,
                &k,
            )?))
        }
        Command::Phi {
            i, j, dim, method, ..
        } => {
            let mut mods = vec![i.as_str()];
            mods.extend(j.as_deref());
            let k = ctx.width(&mods, &[])?;
            let i = ctx.module(i, k)?;
            let j = ctx.module_or_whole(j.as_deref(), k)?;
            let value = match method {
                PhiMethod::Exact => phi_exact(&i, &j, *dim, ctx.budget)?,
                PhiMethod::Left => phi_exact_left(&i, &j, *dim, ctx.budget)?,
                PhiMethod::Direct => phi_direct(&i, &j, *dim, ctx.budget)?,
            };
            Ok(Reply::Phi(value))
        }
    }
}

impl Cli {
    fn q_flag(&self) -> Option<u64> {
        match self.command {
            Command::Phi { q, .. } => q,
            _ => None,
        }
    }
}

fn pair(ctx: &Ctx, p: &Pair) -> Result<(Submodule, Submodule)> {
    let mut mods = vec![p.m.as_str()];
    mods.extend(p.n.as_deref());
    let k = ctx.width(&mods, &[])?;
    Ok((
        ctx.module(&p.m, k)?,
        ctx.module_or_whole(p.n.as_deref(), k)?,
    ))
}

fn group_pair(ctx: &Ctx, g: &GroupPair) -> Result<(Subgroup, Subgroup)> {
    Ok((ctx.subgroup(Some(&g.h))?, ctx.subgroup(g.k.as_deref())?))
}

/// `r` rounded half away from zero to a fixed number of decimals.
pub fn decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let (q, rem) = (r.numer().abs() * &scale).div_rem(r.denom());
    let q = if rem * 2 >= *r.denom() { q + 1 } else { q };
    let (int, frac) = q.div_rem(&scale);
    let sign = if r.is_negative() && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

fn ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn render(reply: &Reply, output: OutputFormat) -> Result<String> {
    let mut s = String::new();
    match output {
        OutputFormat::Text => match reply {
            Reply::Bool(b) => writeln!(s, "{b}").unwrap(),
            Reply::Rank(r) => writeln!(s, "{r}").unwrap(),
            Reply::Module(m) => {
                let basis = module_basis(m)?;
                if basis.is_empty() {
                    s.push_str("0\n");
                }
                for v in basis {
                    writeln!(s, "{v}").unwrap();
                }
            }
            Reply::Coeffs(c) => {
                for e in c {
                    writeln!(s, "{e}").unwrap();
                }
            }
            Reply::Data(d) => {
                writeln!(s, "firsts: {}", d.firsts.join("; ")).unwrap();
                writeln!(s, "seconds: {}", d.seconds.join("; ")).unwrap();
                let rows: Vec<String> = d.c.iter().map(|r| r.join(", ")).collect();
                writeln!(s, "C: {}", rows.join("; ")).unwrap();
                writeln!(s, "lpps: {}", d.lpps.join(", ")).unwrap();
                writeln!(s, "rank: {}", d.rank).unwrap();
            }
            Reply::Group(h) => {
                let j = SubgroupJson::from_subgroup(h);
                if j.gens.is_empty() {
                    s.push_str("1\n");
                }
                for g in j.gens {
                    writeln!(s, "{g}").unwrap();
                }
            }
            Reply::Phi(r) => writeln!(s, "{} ({})", ratio(r), decimal(r, DECIMAL_DIGITS)).unwrap(),
        },
        OutputFormat::Json => {
            let v = match reply {
                Reply::Bool(b) => json!({ "result": b }).to_string(),
                Reply::Rank(r) => json!({ "rank": r }).to_string(),
                Reply::Module(m) => to_json(&SubmoduleJson::from_vectors(
                    m.ambient_k(),
                    &module_basis(m)?,
                )),
                Reply::Coeffs(c) => json!({ "coefficients": c }).to_string(),
                Reply::Data(d) => to_json(d),
                Reply::Group(h) => to_json(&SubgroupJson::from_subgroup(h)),
                Reply::Phi(r) => {
                    json!({ "value": ratio(r), "decimal": decimal(r, DECIMAL_DIGITS) }).to_string()
                }
            };
            writeln!(s, "{v}").unwrap();
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fga(args: &[&str]) -> Outcome {
        run(std::iter::once("fga").chain(args.iter().copied()))
    }

    #[test]
    fn decimals() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(decimal(&r(4, 3), 10), "1.3333333333");
        assert_eq!(decimal(&r(2, 3), 4), "0.6667");
        assert_eq!(decimal(&r(-1, 2), 0), "-1");
        assert_eq!(decimal(&r(-1, 3000), 2), "0.00");
        assert_eq!(decimal(&r(2, 1), 3), "2.000");
    }

    #[test]
    fn verbs() {
        let o = fga(&[
            "closure", "--field", "gf:2", "--rank", "2", "-M", "[x,y]-1", "-N", "1",
        ]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "1\n"));
        assert_eq!(fga(&["is-free", "-M", "x-1", "-N", "x-1; y-1"]).code, 0);
        assert_eq!(fga(&["is-free", "-M", "x-1", "-N", "1"]).code, 1);
        let o = fga(&[
            "phi", "--q", "2", "--N", "1", "-I", "[x,y]-1", "-J", "x-1; y-1",
        ]);
        assert_eq!(o.stdout, "2/1 (2.0000000000)\n");
        let o = fga(&["rank", "-M", "{x-1, 0}; {y-1, y-1}", "--output", "json"]);
        assert_eq!(o.stdout, "{\"rank\":2}\n");
    }

    #[test]
    fn errors_are_json() {
        let o = fga(&["basis", "-M", "x +"]);
        assert_eq!(o.code, 2);
        let v: serde_json::Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(v["error"]["kind"], "parse");
        let o = fga(&["nonsense"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("\"usage\""));
        assert_eq!(fga(&["--help"]).code, 0);
    }
}
