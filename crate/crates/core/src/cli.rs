//! Command-line front end.

use crate::annular::{
    irrep_count_check, level_tables, GradeTable, GradeTwoReport, LevelContext, LoopSign, PolyDisplay, TwistOrientation,
};
use crate::braid::{bracket_closure, colored_bracket, jones_polynomial, BraidWord, ColoredFramedLink};
use crate::context::{Context, Limits};
use crate::error::{Result, TljError};
use crate::json::{complex_json, link_from_json, matrix_to_json, parse_word, scalar_to_json};
use crate::jw::jones_wenzl;
use crate::manifold::{doubled_invariant, rt_invariant, SurgeryPresentation};
use crate::modular::{build_modular_data, fusion_tensor, s_matrix_rank, verlinde_dim, DExtension, RootClass};
use crate::scalars::Scalar;
use crate::tl::{gram_determinant, gram_spectrum, meander_determinant};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "tlj", version, about = "Exact Temperley-Lieb-Jones calculus and quantum invariants")]
pub struct Cli {
    /// Largest number of strands accepted by diagram enumeration.
    #[arg(long, global = true, default_value_t = 14)]
    pub max_strands: usize,
    /// Largest number of label vectors in an ω expansion.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_label_vectors: usize,
    /// Largest Gram matrix dimension.
    #[arg(long, global = true, default_value_t = 4862)]
    pub max_gram_dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ContextArgs {
    /// Level parameter; with it, `A` is a root of unity of the order given by `--class`.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value = "4r")]
    pub class: String,
    /// Embedding exponent `t` of `A = exp(2πi t/m)`.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub embed: i64,
    /// A rational loop value instead of a value of `A` (gram and jw only).
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct BraidArgs {
    #[arg(long)]
    pub strands: Option<usize>,
    /// Comma-separated letters, `-i` for the inverse generator.
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Link JSON file.
    #[arg(long)]
    pub link: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kauffman bracket of a braid closure.
    Bracket {
        #[command(flatten)]
        braid: BraidArgs,
        #[command(flatten)]
        ctx: ContextArgs,
        /// Also print the Jones polynomial.
        #[arg(long)]
        jones: bool,
        /// Use the colors and framings of the link file.
        #[arg(long)]
        colored: bool,
    },
    /// Jones polynomial of a braid closure.
    Jones {
        #[command(flatten)]
        braid: BraidArgs,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Labels, dimensions, twists, S̃, fusion and Verlinde dimensions.
    ModularData {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "4r")]
        class: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        embed: i64,
        /// Genus for a Verlinde dimension.
        #[arg(long)]
        genus: Option<usize>,
        /// Comma-separated puncture labels for the Verlinde dimension.
        #[arg(long, default_value = "")]
        labels: String,
    },
    /// Surgery invariant of the 3-manifold presented by a framed link.
    Rt {
        #[arg(long)]
        link: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        embed: i64,
        /// Also evaluate the doubled invariant.
        #[arg(long)]
        double: bool,
    },
    /// Idempotent tables of the low-level annular categories.
    Annular {
        #[arg(long)]
        level: usize,
        /// `plus` or `minus`.
        #[arg(long)]
        d: String,
    },
    /// Gram matrix of the trace pairing on TL_n.
    Gram {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ctx: ContextArgs,
        /// Eigenvalues under the complex embedding.
        #[arg(long)]
        spectrum: bool,
    },
    /// Jones-Wenzl projector coefficient table.
    Jw {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ctx: ContextArgs,
    },
}

/// Exit status and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

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
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn limits(cli: &Cli) -> Result<Limits> {
    if cli.max_strands == 0 || cli.max_label_vectors == 0 || cli.max_gram_dim == 0 {
        return Err(TljError::InvalidParameters("limits must be positive".into()));
    }
    Ok(Limits {
        max_strands: cli.max_strands,
        max_label_vectors: cli.max_label_vectors,
        max_gram_dim: cli.max_gram_dim,
    })
}

fn context(args: &ContextArgs, lim: Limits) -> Result<Context> {
    let ctx = match (&args.d, args.r) {
        (Some(_), Some(_)) => return Err(TljError::InvalidParameters("give either --d or --r, not both".into())),
        (Some(d), None) => {
            let q: BigRational = d.parse().map_err(|_| TljError::Parse(format!("bad rational {d:?}")))?;
            Context::with_loop_value(Scalar::from_rational(q))
        }
        (None, Some(r)) => {
            let class: RootClass = args.class.parse()?;
            Context::root(class.order(r), args.embed)?
        }
        (None, None) => Context::generic(),
    };
    Ok(ctx.with_limits(lim))
}

fn context_json(ctx: &Context) -> Value {
    match ctx.root_order() {
        Some((m, t)) => json!({"kind": "root", "order": m, "embed": t}),
        None if ctx.field().is_none() && ctx.a().is_ok() => json!({"kind": "generic"}),
        None => json!({"kind": "loop_value", "d": scalar_to_json(ctx.d())}),
    }
}

fn read_link(path: &PathBuf) -> Result<ColoredFramedLink> {
    let text = std::fs::read_to_string(path).map_err(|e| TljError::Parse(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| TljError::Parse(format!("{}: {e}", path.display())))?;
    link_from_json(&v)
}

fn link_of(b: &BraidArgs) -> Result<ColoredFramedLink> {
    match (&b.link, b.strands) {
        (Some(p), None) if b.word.is_none() => read_link(p),
        (None, Some(n)) => {
            let word = parse_word(b.word.as_deref().unwrap_or(""))?;
            Ok(ColoredFramedLink::uniform(BraidWord::new(n, word)?, 0, 1))
        }
        _ => Err(TljError::InvalidParameters("give --link, or --strands with --word".into())),
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let lim = limits(cli)?;
    let (value, text) = match &cli.command {
        Command::Bracket { braid, ctx, jones, colored } => {
            let ctx = context(ctx, lim)?;
            let link = link_of(braid)?;
            let b = link.braid();
            let mut m = Map::new();
            m.insert("context".into(), context_json(&ctx));
            m.insert("strands".into(), json!(b.strands()));
            m.insert("word".into(), json!(b.word()));
            m.insert("writhe".into(), json!(b.writhe()));
            m.insert("components".into(), json!(link.len()));
            m.insert("bracket".into(), scalar_to_json(&bracket_closure(&ctx, b)?));
            if *jones {
                m.insert("jones".into(), scalar_to_json(&jones_polynomial(&ctx, b)?));
            }
            if *colored {
                m.insert("colored_bracket".into(), scalar_to_json(&colored_bracket(&ctx, &link)?));
            }
            (Value::Object(m), None)
        }
        Command::Jones { braid, ctx } => {
            let ctx = context(ctx, lim)?;
            let link = link_of(braid)?;
            let b = link.braid();
            let v = json!({
                "context": context_json(&ctx),
                "strands": b.strands(),
                "word": b.word(),
                "jones": scalar_to_json(&jones_polynomial(&ctx, b)?),
            });
            (v, None)
        }
        Command::ModularData { r, class, embed, genus, labels } => {
            let class: RootClass = class.parse()?;
            let md = build_modular_data(*r, class, *embed)?;
            let (rank, modular) = s_matrix_rank(&md);
            let s_approx: Vec<Vec<Value>> = md
                .s_tilde
                .iter()
                .map(|row| row.iter().map(|x| complex_json(x.to_c64().expect("cyclotomic"))).collect())
                .collect();
            let fusion = if modular { json!(fusion_tensor(&md)?) } else { Value::Null };
            let verlinde = match genus {
                Some(g) => {
                    let ls: Vec<usize> = parse_word(labels)?
                        .into_iter()
                        .map(|x| usize::try_from(x).map_err(|_| TljError::Parse(format!("bad label {x}"))))
                        .collect::<Result<_>>()?;
                    json!({"genus": g, "labels": ls, "dim": verlinde_dim(&md, *g, &ls)?})
                }
                None => Value::Null,
            };
            let v = json!({
                "r": md.r,
                "class": md.root_class.to_string(),
                "embed": md.embed,
                "labels": md.labels,
                "dims": md.dims.iter().map(scalar_to_json).collect::<Vec<_>>(),
                "twists": md.twists.iter().map(scalar_to_json).collect::<Vec<_>>(),
                "s_tilde": {"exact": matrix_to_json(&md.s_tilde), "approx": s_approx},
                "d_squared": scalar_to_json(&md.d_squared),
                "rank": rank,
                "modular": modular,
                "fusion": fusion,
                "verlinde": verlinde,
            });
            (v, None)
        }
        Command::Rt { link, r, embed, double } => {
            let link = read_link(link)?;
            let mut md = build_modular_data(*r, RootClass::FourR, *embed)?;
            md.ctx = md.ctx.with_limits(lim);
            let ext = DExtension::new(&md)?;
            let s = SurgeryPresentation::new(link)?;
            let z = rt_invariant(&s, &md, &ext)?;
            let mut m = Map::new();
            m.insert("sigma".into(), json!(z.sigma));
            m.insert("components".into(), json!(z.components));
            m.insert("bracket_exact".into(), scalar_to_json(&z.bracket));
            m.insert("D_exponent".into(), json!(z.d_exponent));
            m.insert("Z_exact".into(), scalar_to_json(&z.z));
            m.insert("Z_approx".into(), complex_json(z.z_approx()));
            if *double {
                let dv = doubled_invariant(&s, &md, &ext)?;
                m.insert("Z_doubled_exact".into(), scalar_to_json(&dv.exact));
                m.insert("Z_doubled_approx".into(), json!(dv.approx));
            }
            (Value::Object(m), None)
        }
        Command::Annular { level, d } => {
            let sign: LoopSign = d.parse()?;
            let lc = LevelContext::new(*level, sign)?;
            let t = level_tables(&lc)?;
            let counts = irrep_count_check(*level)?
                .into_iter()
                .find(|(s, _)| *s == sign)
                .map(|(_, c)| c)
                .expect("both signs are reported");
            let grade_json = |g: &GradeTable| {
                json!({
                    "generator": g.generator.symbol(),
                    "modulus": g.modulus.iter().map(scalar_to_json).collect::<Vec<_>>(),
                    "roots": g.roots.iter().map(scalar_to_json).collect::<Vec<_>>(),
                    "idempotents": g.idempotents.iter().map(|e| e.iter().map(scalar_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "idempotent": g.checks.idempotent,
                    "orthogonal": g.checks.orthogonal,
                    "complete": g.checks.complete,
                    "matches_stated": g.matches_stated,
                    "relation_holds": g.relation_holds,
                    "nonzero": g.nonzero,
                })
            };
            let g2_json = |g: &GradeTwoReport| {
                json!({
                    "orientation": match g.orientation { TwistOrientation::Forward => "forward", TwistOrientation::Backward => "backward" },
                    "idempotent": g.idempotent,
                    "orthogonal": g.orthogonal,
                    "nonzero": g.nonzero,
                    "kills_births": g.kills_births,
                    "kills_deaths": g.kills_deaths,
                })
            };
            let v = json!({
                "level": level,
                "sign": sign.to_string(),
                "d": scalar_to_json(&lc.d),
                "ring": grade_json(&t.ring),
                "twist": grade_json(&t.twist),
                "disk_values": t.disk_values.iter().map(scalar_to_json).collect::<Vec<_>>(),
                "trivial": t.trivial,
                "grade_two": t.grade_two.iter().map(g2_json).collect::<Vec<_>>(),
                "irreps": {
                    "per_grade": counts.grades.iter().map(|g| json!({"grade": g.grade, "found": g.found, "expected": g.expected, "source": g.source})).collect::<Vec<_>>(),
                    "total": counts.total,
                    "expected_total": counts.square(),
                },
            });
            let mut s = format!("level {level}, d {sign} = {}\n", lc.d);
            for g in [&t.ring, &t.twist] {
                let var = g.generator.symbol();
                s.push_str(&format!("relation: {} = 0\n", PolyDisplay { poly: &g.modulus, var }));
                for (k, e) in g.idempotents.iter().enumerate() {
                    s.push_str(&format!("  e{} [root {}] = {}\n", k + 1, g.roots[k], PolyDisplay { poly: e, var }));
                }
                s.push_str(&format!(
                    "  idempotent {} orthogonal {} complete {} relation {} stated {}\n",
                    g.checks.idempotent,
                    g.checks.orthogonal,
                    g.checks.complete,
                    g.relation_holds,
                    g.matches_stated.map_or("n/a".to_string(), |b| b.to_string())
                ));
            }
            for (k, v) in t.disk_values.iter().enumerate() {
                s.push_str(&format!("disk: e{}(d) = {v}\n", k + 1));
            }
            for g in &t.grade_two {
                s.push_str(&format!("grade 2 ({:?} twist): holds {}\n", g.orientation, g.holds()));
            }
            for g in &counts.grades {
                s.push_str(&format!("grade {}: {} irreps ({}), expected {}\n", g.grade, g.found, g.source, g.expected));
            }
            s.push_str(&format!("total {} = {}\n", counts.total, counts.square()));
            (v, Some(s))
        }
        Command::Gram { n, ctx, spectrum } => {
            let ctx = context(ctx, lim)?;
            let det = gram_determinant(&ctx, *n)?;
            let meander = meander_determinant(ctx.d(), *n);
            let mut m = Map::new();
            m.insert("context".into(), context_json(&ctx));
            m.insert("n".into(), json!(n));
            m.insert("dim".into(), json!(crate::tl::catalan(*n) as u64));
            m.insert("determinant".into(), scalar_to_json(&det));
            m.insert("meander".into(), scalar_to_json(&meander));
            m.insert("matches".into(), json!(det == meander));
            if *spectrum {
                let ev = gram_spectrum(&ctx, *n)?;
                m.insert("min_eigenvalue".into(), json!(ev.first().copied()));
                m.insert("eigenvalues".into(), json!(ev));
            }
            (Value::Object(m), None)
        }
        Command::Jw { n, ctx } => {
            let ctx = context(ctx, lim)?;
            let p = jones_wenzl(&ctx, *n)?;
            let d = ctx.d();
            let idem = p.element.compose(&p.element, d)? == p.element;
            let trace = p.element.markov_trace(d)?;
            let terms = p.element.sorted_terms();
            let v = json!({
                "context": context_json(&ctx),
                "n": n,
                "terms": terms.iter().map(|(g, c)| json!({"diagram": g.to_string(), "coeff": scalar_to_json(c)})).collect::<Vec<_>>(),
                "idempotent": idem,
                "trace": scalar_to_json(&trace),
                "trace_is_delta": trace == ctx.delta(*n),
            });
            let text = terms.iter().map(|(g, c)| format!("{g}\t{c}\n")).collect::<String>();
            (v, Some(text))
        }
    };
    Ok(match (cli.format, text) {
        (Format::Text, Some(t)) => t,
        (Format::Text, None) => render_text(&value),
        (Format::Json, _) => format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
    })
}

/// `key: value` lines, scalars written through their exact fields.
fn render_text(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(m) = v {
        for (k, x) in m {
            s.push_str(&format!("{k}: {}\n", render_value(x)));
        }
    }
    s
}

fn render_value(v: &Value) -> String {
    let term = |t: &Value, var: &str| -> String {
        let (e, n, d) = (&t[0], &t[1], &t[2]);
        let c = if d == &json!(1) { n.to_string() } else { format!("{n}/{d}") };
        if e == &json!(0) {
            c
        } else {
            format!("{c}*{var}^{e}")
        }
    };
    let poly = |p: &Value, var: &str| -> String {
        let ts: Vec<String> = p.as_array().map(|a| a.iter().map(|t| term(t, var)).collect()).unwrap_or_default();
        if ts.is_empty() {
            "0".into()
        } else {
            ts.join(" + ")
        }
    };
    match v {
        Value::Object(m) if m.get("kind") == Some(&json!("cyclotomic")) => {
            format!("{} (zeta_{})", poly(&m["numerator"], "z"), m["order"])
        }
        Value::Object(m) if m.get("kind") == Some(&json!("rational_function")) => {
            let den = poly(&m["denominator"], "A");
            if den == "1" {
                poly(&m["numerator"], "A")
            } else {
                format!("({}) / ({den})", poly(&m["numerator"], "A"))
            }
        }
        Value::Array(a) => format!("[{}]", a.iter().map(render_value).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            format!("{{{}}}", m.iter().map(|(k, x)| format!("{k}: {}", render_value(x))).collect::<Vec<_>>().join(", "))
        }
        x => x.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let o = run(std::iter::once("tlj").chain(args.iter().copied()));
        assert_eq!(o.code, 0, "{}", o.stderr);
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn unknot_bracket_is_d() {
        let v = run_ok(&["bracket", "--strands", "1", "--word", ""]);
        let d = scalar_to_json(Context::generic().d());
        assert_eq!(v["bracket"], d);
    }

    #[test]
    fn bad_letter_exits_2() {
        let o = run(["tlj", "bracket", "--strands", "2", "--word", "9"]);
        assert_eq!(o.code, 2);
        let o = run(["tlj", "bogus"]);
        assert_eq!(o.code, 2);
    }

    #[test]
    fn chebyshev_root_exits_3() {
        let o = run(["tlj", "jw", "--n", "4", "--r", "4"]);
        assert_eq!(o.code, 3, "{}", o.stderr);
    }

    #[test]
    fn resource_limit_exits_4() {
        let o = run(["tlj", "--max-gram-dim", "10", "gram", "--n", "5", "--d", "3"]);
        assert_eq!(o.code, 4, "{}", o.stderr);
    }

    #[test]
    fn modular_data_r4() {
        let v = run_ok(&["modular-data", "--r", "4", "--class", "4r"]);
        assert_eq!(v["modular"], json!(true));
        assert_eq!(v["s_tilde"]["exact"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn output_is_stable() {
        let args = ["tlj", "modular-data", "--r", "5", "--genus", "1"];
        assert_eq!(run(args), run(args));
    }
}
