//! `fctool`: enumeration, verification suites and tower maps.
//!
//! Exit codes: 0 success, 1 failed check, 2 argument or domain error,
//! 3 enumeration budget exceeded (`FCTOOL_BUDGET`).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fctower::coxeter::{
    enumerate_ball, is_fully_commutative, Budget, CoxeterSystem, Family, GroupElement, Word,
};
use fctower::hecke::{HeckeMap, HeckeMorphism};
use fctower::normal_forms::{affine_length, enumerate_fc, parse, parse_word, NormalForm};
use fctower::tl::TLMorphism;
use fctower::towers::{map_form, GroupMap, Injection};
use fctower::verify::{run_suite, Params, Suite};
use fctower::Error;

#[derive(Parser)]
#[command(name = "fctool", version, about = "Fully commutative elements and tower maps for affine Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List group elements or fully commutative elements of bounded length.
    Enumerate(EnumerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Apply a tower map to a word.
    Map(MapArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "D")]
    D,
    #[value(name = "Btilde")]
    Btilde,
    #[value(name = "Ctilde")]
    Ctilde,
    #[value(name = "Dtilde")]
    Dtilde,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::D => Family::D,
            FamilyArg::Btilde => Family::Btilde,
            FamilyArg::Ctilde => Family::Ctilde,
            FamilyArg::Dtilde => Family::Dtilde,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Subscript of the group: D_N, B~_N, C~_N, D~_N.
    #[arg(long)]
    rank: usize,
    /// Length bound; optional for type D.
    #[arg(long)]
    max_length: Option<usize>,
    /// Affine length bound.
    #[arg(long)]
    max_affine: Option<usize>,
    /// Only fully commutative elements.
    #[arg(long)]
    fc_only: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Append the length and affine-length counting series.
    #[arg(long)]
    series: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    /// Subscript of the main family of the suite.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    max_length: Option<usize>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "Ln")]
    Ln,
    #[value(name = "Fn")]
    Fn,
    #[value(name = "Gn")]
    Gn,
    #[value(name = "beta")]
    Beta,
    #[value(name = "delta")]
    Delta,
    #[value(name = "Qn")]
    Qn,
    #[value(name = "Pn")]
    Pn,
    #[value(name = "Rn")]
    Rn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Hecke,
    Tl,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Subscript n of the source group.
    #[arg(long)]
    rank: usize,
    /// Space separated generators, e.g. "s1 s2 t"; empty for the identity.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// Source family of I and J.
    #[arg(long, value_enum, default_value = "Btilde")]
    family: FamilyArg,
    /// Algebra of Qn and Pn; Rn is Hecke only.
    #[arg(long, value_enum, default_value = "tl")]
    algebra: Algebra,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Budget { .. }) { 3 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Enumerate(a) => run_enumerate(&a).map(|s| (s, 0)),
        Cmd::Verify(a) => run_verify(&a),
        Cmd::Map(a) => run_map(&a).map(|v| (pretty(&v), 0)),
    };
    match out {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("fctool: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn show(sys: &CoxeterSystem, w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        sys.format(w)
    }
}

struct Row {
    word: Word,
    length: usize,
    affine: Option<usize>,
    fc: bool,
    form: Option<NormalForm>,
}

fn run_enumerate(a: &EnumerateArgs) -> Result<String, Failure> {
    let family: Family = a.family.into();
    let sys = CoxeterSystem::from_subscript(family, a.rank)?;
    let budget = Budget::from_env();
    let max_len = match (a.max_length, family) {
        (Some(l), _) => l,
        (None, Family::D) => a.rank * (a.rank - 1),
        (None, _) => return Err(usage("--max-length is required for affine families")),
    };
    if family == Family::Dtilde && a.max_affine.is_some() && !a.fc_only {
        return Err(usage("affine length in type D~ is defined for fully commutative elements; add --fc-only"));
    }
    let max_affine = a.max_affine.unwrap_or(max_len);
    let from_forms = if a.fc_only {
        match enumerate_fc(&sys, Some(max_len), max_affine, budget) {
            Ok(v) => Some(v),
            Err(Error::Domain(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let mut rows: Vec<Row> = match from_forms {
        Some(v) => v
            .into_iter()
            .map(|e| Row {
                length: e.length(),
                affine: Some(e.affine_length()),
                word: e.canonical,
                fc: true,
                form: Some(e.form),
            })
            .collect(),
        None => {
            let mut rows = Vec::new();
            for e in enumerate_ball(&sys, max_len, budget)? {
                let fc = is_fully_commutative(&sys, &e.element);
                if a.fc_only && !fc {
                    continue;
                }
                let affine = match family {
                    Family::D => Some(0),
                    Family::Dtilde if !fc => None,
                    _ => Some(e.word.count(sys.affine().expect("affine letter"))),
                };
                if affine.is_some_and(|l| l > max_affine) {
                    continue;
                }
                let form = if fc { parse(&sys, &e.element).ok() } else { None };
                rows.push(Row {
                    length: e.word.len(),
                    word: e.word,
                    affine,
                    fc,
                    form,
                });
            }
            rows
        }
    };
    let key = |r: &Row| sys.affine().map_or(0, |x| r.word.count(x));
    rows.sort_by(|x, y| (key(x), x.length, &x.word).cmp(&(key(y), y.length, &y.word)));
    let mut by_len = vec![0usize; max_len + 1];
    let mut by_affine = vec![0usize; rows.iter().map(key).max().map_or(1, |m| m + 1)];
    for r in &rows {
        by_len[r.length] += 1;
        by_affine[key(r)] += 1;
    }
    match a.format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut o = json!({
                        "word": sys.tokens(&r.word),
                        "length": r.length,
                        "affine_length": r.affine,
                        "fc": r.fc,
                    });
                    if let Some(f) = &r.form {
                        o["class"] = json!(f.class_name());
                        o["params"] = f.params_json();
                    }
                    o
                })
                .collect();
            let mut v = json!({
                "family": family.name(),
                "rank": a.rank,
                "system": sys.name(),
                "generators": sys.tokens(&Word((0..sys.rank() as u8).collect())),
                "max_length": max_len,
                "fc_only": a.fc_only,
                "count": rows.len(),
                "rows": items,
            });
            if a.series {
                v["series"] = json!({ "length": by_len, "affine": by_affine });
            }
            Ok(pretty(&v))
        }
        Format::Text => {
            let mut out = format!("# {}: {} elements\n", sys.name(), rows.len());
            for r in &rows {
                let affine = r.affine.map_or("-".to_string(), |l| l.to_string());
                let class = r.form.as_ref().map_or(if r.fc { "fc" } else { "" }, |f| f.class_name());
                out.push_str(&format!("{}\tl={} L={affine} {class}\n", show(&sys, &r.word), r.length).replace(" \n", "\n"));
            }
            if a.series {
                let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                out.push_str(&format!("length series: {}\n", join(&by_len)));
                out.push_str(&format!("affine series: {}\n", join(&by_affine)));
            }
            Ok(out)
        }
    }
}

fn run_verify(a: &VerifyArgs) -> Result<(String, u8), Failure> {
    let params = Params {
        rank: a.rank,
        max_length: a.max_length,
        budget: Budget::from_env(),
    };
    let report = run_suite(a.suite, params)?;
    let text = format!("{}{}\n", report.to_text(), serde_json::to_string(&report.to_json()).expect("serializable"));
    Ok((text, if report.passed() { 0 } else { 1 }))
}

fn describe(sys: &CoxeterSystem, w: &Word) -> Result<Value, Failure> {
    let x = GroupElement::from_word(sys, w)?;
    let affine = match affine_length(sys, &x) {
        Ok(l) => json!(l),
        Err(Error::NotFc) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(json!({
        "system": sys.name(),
        "word": sys.tokens(w),
        "length": x.length(sys),
        "affine_length": affine,
    }))
}

fn run_map(a: &MapArgs) -> Result<Value, Failure> {
    let family = match a.op {
        Op::I | Op::J => a.family.into(),
        Op::Ln | Op::Beta | Op::Qn => Family::Btilde,
        Op::Fn | Op::Rn => Family::Ctilde,
        Op::Gn | Op::Delta | Op::Pn => Family::Dtilde,
    };
    let src = CoxeterSystem::from_subscript(family, a.rank)?;
    let w = src.parse_word(&a.word)?;
    let op_name = Op::to_possible_value(&a.op).map(|v| v.get_name().to_string()).unwrap_or_default();
    let mut out = json!({ "op": op_name, "rank": a.rank, "source": describe(&src, &w)? });
    match a.op {
        Op::Ln | Op::Fn | Op::Gn | Op::Beta | Op::Delta => {
            let map = match a.op {
                Op::Ln => GroupMap::L,
                Op::Fn => GroupMap::F,
                Op::Gn => GroupMap::G,
                Op::Beta => GroupMap::Beta,
                _ => GroupMap::Delta,
            };
            let (tgt, img) = map.apply(&src, &w)?;
            out["image"] = describe(&tgt, &img)?;
        }
        Op::I | Op::J => {
            if !matches!(family, Family::Btilde | Family::Dtilde) {
                return Err(usage("I and J are defined on types Btilde and Dtilde"));
            }
            let which = if a.op == Op::I { Injection::I } else { Injection::J };
            let form = parse_word(&src, &w)?;
            let (tgt, img) = map_form(&src, &form, which)?;
            let img_word = img.word(&tgt)?;
            out["source"]["form"] = form.to_json(&src)?;
            out["image"] = describe(&tgt, &img_word)?;
            out["image"]["form"] = img.to_json(&tgt)?;
        }
        Op::Qn | Op::Pn | Op::Rn => {
            let map = match a.op {
                Op::Qn => HeckeMap::Q,
                Op::Pn => HeckeMap::P,
                _ => HeckeMap::R,
            };
            let x = GroupElement::from_word(&src, &w)?;
            if x.length(&src) != w.len() {
                return Err(Error::NotReduced.into());
            }
            let (algebra, tgt, terms, text) = if a.algebra == Algebra::Tl && map != HeckeMap::R {
                if !is_fully_commutative(&src, &x) {
                    return Err(Error::NotFc.into());
                }
                let m = TLMorphism::new(map, &src)?;
                let h = m.image(&w)?;
                ("temperley-lieb", m.target().clone(), h.to_json(), h.to_string())
            } else {
                let m = HeckeMorphism::new(map, &src)?;
                let h = m.image(&w)?;
                ("hecke", m.target().clone(), h.to_json(), h.to_string())
            };
            out["image"] = json!({
                "system": tgt.name(),
                "algebra": algebra,
                "terms": terms,
                "text": text,
            });
        }
    }
    Ok(out)
}
