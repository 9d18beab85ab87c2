use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value as Json};

use valx::approx_type::AtClass;
use valx::extension::{Equivalence, ExtensionValuation};
use valx::kaplansky::{check_fixed, FixedReport, PivotData};
use valx::notation::{parse_at, parse_pcs, parse_valuation};
use valx::pcs::{PcsGenerator, DEFAULT_BUDGET};
use valx::polynomial::{Poly, RatFun};
use valx::valued_field::ValuedField;
use valx::{Error, Result};

#[derive(Parser)]
#[command(name = "valx", version, about = "Extensions of valuations to K(x) via approximation types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Q@p=<p>, Fp(t)@p=<p> or Q(t)
    #[arg(long)]
    field: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Print `key: value` lines instead of JSON
    #[arg(long, conflicts_with = "json")]
    text: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Value of a polynomial or rational function
    Value {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        valuation: String,
        #[arg(long, conflicts_with = "ratfun", required_unless_present = "ratfun")]
        poly: Option<String>,
        #[arg(long)]
        ratfun: Option<String>,
        /// Degree bound for limit valuations of algebraic types
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Residue of a rational function of value 0
    Residue {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        ratfun: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Extension class and purity
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        valuation: String,
    },
    /// Approximation type of x under a valuation
    Appr {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        valuation: String,
    },
    /// Valuation realizing an approximation type
    Realize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        at: String,
    },
    PcsToAt {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pcs: String,
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    AtToPcs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        at: String,
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Whether an immediate type fixes the value of a polynomial
    CheckFixed {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        at: String,
        #[arg(long)]
        poly: String,
    },
    Equiv {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        v1: String,
        #[arg(long)]
        v2: String,
    },
    /// Canonical fragment of the realizability set and an element realizing it
    Fragment {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        at: String,
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Value { common, .. }
            | Command::Residue { common, .. }
            | Command::Classify { common, .. }
            | Command::Appr { common, .. }
            | Command::Realize { common, .. }
            | Command::PcsToAt { common, .. }
            | Command::AtToPcs { common, .. }
            | Command::CheckFixed { common, .. }
            | Command::Equiv { common, .. }
            | Command::Fragment { common, .. } => common,
        }
    }
}

fn class_tag(c: AtClass) -> &'static str {
    match c {
        AtClass::Trivial => "trivial",
        AtClass::Empty => "empty",
        AtClass::Immediate => "immediate",
        AtClass::ValueExtending => "value-extending",
        AtClass::ResidueExtending => "residue-extending",
    }
}

fn pivot_json(p: &PivotData) -> Json {
    json!({
        "betas": p.betas.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "h": p.h,
        "beta_h": p.beta_h().to_string(),
        "ost_threshold": p.ost_threshold.to_string(),
    })
}

fn valuation(field: &ValuedField, spec: &str, bound: Option<usize>) -> Result<ExtensionValuation> {
    let v = parse_valuation(spec, field)?;
    Ok(match bound {
        Some(b) => v.with_degree_bound(b),
        None => v,
    })
}

fn run(cmd: &Command) -> Result<Map<String, Json>> {
    let common = cmd.common();
    let field: ValuedField = common.field.parse()?;
    let budget = common.budget;
    let out = match cmd {
        Command::Value { valuation: spec, poly, ratfun, bound, .. } => {
            let v = valuation(&field, spec, *bound)?;
            let value = match (poly, ratfun) {
                (Some(p), _) => v.value_poly(&Poly::parse(p, &field)?, budget)?,
                (None, Some(r)) => v.value_ratfun(&RatFun::parse(r, &field)?, budget)?,
                (None, None) => return Err(Error::Parse("--poly or --ratfun is required".into())),
            };
            json!({ "value": value.render() })
        }
        Command::Residue { valuation: spec, ratfun, bound, .. } => {
            let v = valuation(&field, spec, *bound)?;
            json!({ "residue": v.residue_ratfun(&RatFun::parse(ratfun, &field)?, budget)?.to_string() })
        }
        Command::Classify { valuation: spec, .. } => {
            let v = valuation(&field, spec, None)?;
            json!({
                "class": v.classify().tag(),
                "pure": v.is_pure(),
                "almost_pure": v.is_almost_pure()?,
            })
        }
        Command::Appr { valuation: spec, .. } => {
            let at = valuation(&field, spec, None)?.approx_type_of();
            json!({ "at": at.to_string(), "class": class_tag(at.classify()), "support": at.supp_cut().to_spec() })
        }
        Command::Realize { at, .. } => {
            let at = parse_at(at, &field)?;
            json!({ "valuation": ExtensionValuation::realize(&at)?.to_string() })
        }
        Command::PcsToAt { pcs, terms, .. } => {
            let g = parse_pcs(pcs, &field)?.with_budget(budget);
            let gammas = g.gamma_prefix(*terms)?;
            let at = g.to_approx_type()?;
            json!({
                "at": at.to_string(),
                "class": class_tag(at.classify()),
                "gammas": gammas.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        }
        Command::AtToPcs { at, terms, .. } => {
            let at = parse_at(at, &field)?.with_budget(budget);
            let g = PcsGenerator::from_approx_type(&at)?;
            json!({
                "pcs": g.to_string(),
                "terms": g.prefix(*terms)?.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "gammas": g.gamma_prefix(terms.saturating_sub(1))?.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        }
        Command::CheckFixed { at, poly, .. } => {
            let at = parse_at(at, &field)?;
            let f = Poly::parse(poly, &field)?;
            let report = check_fixed(&f, &at, budget)?;
            let mut m = json!({ "verdict": report.verdict() });
            let obj = m.as_object_mut().unwrap();
            match &report {
                FixedReport::Fixed { value, threshold, pivot } => {
                    obj.insert("value".into(), json!(value.to_string()));
                    obj.insert("threshold".into(), json!(threshold));
                    if let Some(p) = pivot {
                        obj.insert("pivot".into(), pivot_json(p));
                    }
                }
                FixedReport::NotFixed { threshold, pivot, derivative_order, confirmed_through } => {
                    obj.insert("threshold".into(), json!(threshold));
                    obj.insert("pivot".into(), pivot_json(pivot));
                    obj.insert("derivative_order".into(), json!(derivative_order));
                    obj.insert("confirmed_through".into(), json!(confirmed_through));
                }
                FixedReport::Undecided { budget } => {
                    obj.insert("budget".into(), json!(budget));
                }
            }
            m
        }
        Command::Equiv { v1, v2, .. } => {
            let a = parse_valuation(v1, &field)?;
            let b = parse_valuation(v2, &field)?;
            match a.equivalent(&b, budget) {
                Equivalence::Equivalent => json!({ "equivalent": true }),
                Equivalence::NotEquivalent(w) => json!({
                    "equivalent": false,
                    "witness": w.to_string(),
                    "v1": a.value_poly(&w, budget)?.render(),
                    "v2": b.value_poly(&w, budget)?.render(),
                }),
                Equivalence::UndecidedAtBound => json!({ "equivalent": null, "undecided_at_bound": budget }),
            }
        }
        Command::Fragment { at, size, .. } => {
            let at = parse_at(at, &field)?.with_budget(budget);
            let frag = at.canonical_fragment(*size)?;
            let mut m = json!({
                "fragment": frag.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            let a = at.realize_fragment(&frag)?;
            m.as_object_mut().unwrap().insert("realization".into(), json!(a.to_string()));
            m
        }
    };
    Ok(match out {
        Json::Object(m) => m,
        _ => unreachable!(),
    })
}

fn text_of(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Array(a) => a.iter().map(text_of).collect::<Vec<_>>().join(", "),
        Json::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", text_of(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn emit(m: &Map<String, Json>, text: bool) {
    if text {
        for (k, v) in m {
            println!("{k}: {}", text_of(v));
        }
    } else {
        println!("{}", Json::Object(m.clone()));
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let text = cli.command.common().text;
    match run(&cli.command) {
        Ok(m) => {
            emit(&m, text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let mut m = Map::new();
            m.insert("error".into(), json!(e.name()));
            m.insert("message".into(), json!(e.to_string()));
            emit(&m, text);
            ExitCode::from(if e.is_parse() { 1 } else { 2 })
        }
    }
}
