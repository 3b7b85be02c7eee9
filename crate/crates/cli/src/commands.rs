use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use sgdigit::monoid::{format_generators, parse_generators};
use sgdigit::{
    digital, enumerate_by_genus, is_ld, ld, ld_closure, Base, DigitString, DigitalSemigroup, Error,
    LdClass, Submonoid,
};

use crate::args::{
    CheckArgs, ClassArg, ClassSelect, Cli, ClosureArgs, Command, DeltaArgs, Format, MonoidArgs,
    ReprArgs, ThetaArgs, TreeArgs,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: impl Into<String>) -> Self {
        Output {
            stdout: stdout.into(),
            code: EXIT_OK,
        }
    }

    fn verdict(yes: bool, stdout: impl Into<String>) -> Self {
        Output {
            stdout: stdout.into(),
            code: if yes { EXIT_OK } else { EXIT_NO },
        }
    }
}

pub struct Failure {
    pub stdout: String,
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            stdout: String::new(),
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Overflow { .. } | Error::ResourceLimit(_) | Error::CapTooSmall { .. } => {
                EXIT_OVERFLOW
            }
            Error::Parse(_) | Error::InvalidBase(_) => EXIT_USAGE,
            _ => EXIT_NO,
        };
        Failure {
            stdout: String::new(),
            message: err.to_string(),
            code,
        }
    }
}

type CmdResult = Result<Output, Failure>;

pub fn run(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Repr(args) => repr(args, format),
        Command::Delta(args) => delta(args, format),
        Command::Closure(args) => closure(args, format),
        Command::Check(args) => check(args, format),
        Command::Theta(args) => theta(args, format),
        Command::Monoid(args) => monoid(args, format),
        Command::Tree(args) => tree(args, format),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

/// Integers as JSON numbers when they fit in an i64, strings otherwise.
fn big_json(z: &BigInt) -> Value {
    match i64::try_from(z) {
        Ok(v) => json!(v),
        Err(_) => json!(z.to_string()),
    }
}

fn parse_big(s: &str) -> Result<BigInt, Failure> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Failure::usage(format!("not an integer: {s:?}")))
}

fn parse_gens(s: &str) -> Result<Submonoid, Failure> {
    let gens = parse_generators(s).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Submonoid::from_generators(gens)?)
}

fn resolve_class(sel: &ClassSelect) -> Result<LdClass, Failure> {
    match (sel.class, sel.base) {
        (Some(ClassArg::L), _) => Ok(LdClass::L),
        (Some(ClassArg::Lminus), _) => Ok(LdClass::LMinus),
        (None, Some(b)) => Ok(LdClass::for_base(Base::new(b)?)),
        (None, None) => Err(Failure::usage("one of --class or --base is required")),
    }
}

fn repr(args: &ReprArgs, format: Format) -> CmdResult {
    if let Some(text) = &args.parse {
        let ds: DigitString = text.parse()?;
        if let Some(b) = args.base {
            if b != ds.base().value() {
                return Err(Failure::usage(format!(
                    "--base {b} disagrees with the base of {text:?}"
                )));
            }
        }
        return Ok(Output::ok(match format {
            Format::Text => ds.value().to_string(),
            Format::Json => to_json(&json!({
                "base": ds.base().value(),
                "value": big_json(ds.value()),
                "digits": ds.digits().iter().rev().collect::<Vec<_>>(),
                "text": ds.to_string(),
                "length": ds.len(),
            })),
        }));
    }
    let b = args
        .base
        .ok_or_else(|| Failure::usage("--base is required"))?;
    let base = Base::new(b)?;
    let z = parse_big(args.value.as_deref().unwrap_or_default())?;
    let ds = base.to_digits(&z)?;
    Ok(Output::ok(match format {
        Format::Text => ds.to_string(),
        Format::Json => to_json(&json!({
            "base": b,
            "value": big_json(&z),
            "digits": ds.digits().iter().rev().collect::<Vec<_>>(),
            "text": ds.to_string(),
            "length": ds.len(),
        })),
    }))
}

fn delta(args: &DeltaArgs, format: Format) -> CmdResult {
    let base = Base::new(args.base)?;
    let band = base.delta_band(args.n)?;
    let count = base.delta_count(args.n)?;
    Ok(Output::ok(match (format, args.count) {
        (Format::Text, true) => count.to_string(),
        (Format::Text, false) => format!("[{}, {}]", band.lo, band.hi),
        (Format::Json, _) => to_json(&json!({
            "base": args.base,
            "n": args.n,
            "lo": big_json(&band.lo),
            "hi": big_json(&band.hi),
            "count": big_json(&count),
        })),
    }))
}

fn monoid_text(s: &Submonoid) -> Vec<String> {
    let frobenius = s
        .frobenius()
        .map_or_else(|_| "none (gcd > 1)".to_string(), |f| f.to_string());
    let gaps = s
        .gaps()
        .map_or_else(|_| "infinitely many".to_string(), |g| format_generators(&g));
    vec![
        format!("Frobenius number: {frobenius}"),
        format!("Gaps: {gaps}"),
    ]
}

fn closure(args: &ClosureArgs, format: Format) -> CmdResult {
    let cls = resolve_class(&args.class)?;
    match ld_closure(&args.values, cls, args.bound) {
        Ok((s, trace)) => Ok(Output::ok(match format {
            Format::Text => {
                let mut lines = vec![format!(
                    "Minimal system of generators: {}",
                    format_generators(s.gens())
                )];
                lines.extend(monoid_text(&s));
                lines.join("\n")
            }
            Format::Json => {
                let mut v = serde_json::to_value(s.to_json()).expect("serializes");
                v["trace"] = serde_json::to_value(&trace).expect("serializes");
                to_json(&v)
            }
        })),
        Err(Error::Overflow { bound }) => Err(Failure {
            stdout: match format {
                Format::Text => "overflow".into(),
                Format::Json => to_json(&json!({ "overflow": true, "bound": bound })),
            },
            message: String::new(),
            code: EXIT_OVERFLOW,
        }),
        Err(e) => Err(e.into()),
    }
}

fn check(args: &CheckArgs, format: Format) -> CmdResult {
    let cls = resolve_class(&args.class)?;
    let s = parse_gens(&args.gens)?;
    let violation = ld::ld_violation(&s, cls)?;
    let member = is_ld(&s, cls)?;
    let text = match (member, violation) {
        (true, _) => "yes".to_string(),
        (false, Some(v)) => format!("no ({v} not in S)"),
        (false, None) => "no (S = {0})".to_string(),
    };
    Ok(Output::verdict(
        member,
        match format {
            Format::Text => text,
            Format::Json => to_json(&json!({
                "class": cls.name(),
                "generators": s.gens(),
                "member": member,
                "violation": violation.map(|v| json!({"s": v.s, "t": v.t, "e": v.e, "value": v.value()})),
            })),
        },
    ))
}

fn theta(args: &ThetaArgs, format: Format) -> CmdResult {
    let base = Base::new(args.base)?;
    let d = match (&args.gens, &args.smallest) {
        (Some(gens), _) => DigitalSemigroup::theta(base, parse_gens(gens)?)?,
        (None, Some(values)) => {
            let values = values
                .split(',')
                .map(parse_big)
                .collect::<Result<Vec<_>, _>>()?;
            match digital::smallest_digital_containing(base, &values, args.bound) {
                Ok(d) => d,
                Err(Error::Overflow { .. }) => {
                    return Err(Failure {
                        stdout: "overflow".into(),
                        message: String::new(),
                        code: EXIT_OVERFLOW,
                    })
                }
                Err(e) => return Err(e.into()),
            }
        }
        (None, None) => return Err(Failure::usage("one of --gens or --smallest is required")),
    };

    if let Some(raw) = &args.contains {
        let z = parse_big(raw)?;
        let yes = d.contains(&z)?;
        return Ok(Output::verdict(
            yes,
            match format {
                Format::Text => if yes { "yes" } else { "no" }.to_string(),
                Format::Json => to_json(&json!({ "value": big_json(&z), "member": yes })),
            },
        ));
    }
    if args.complement {
        let complement = d.complement()?;
        return Ok(Output::ok(match format {
            Format::Text => complement
                .iter()
                .map(BigInt::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            Format::Json => {
                let mut v = serde_json::to_value(d.to_json()).expect("serializes");
                v["complement"] = complement.iter().map(big_json).collect();
                to_json(&v)
            }
        }));
    }
    Ok(Output::ok(match format {
        Format::Text => format!(
            "base={};gens={};F={};complement_size={}",
            base,
            format_generators(d.lengths().gens()),
            d.lengths().frobenius()?,
            d.complement_count()?
        ),
        Format::Json => to_json(&d.to_json()),
    }))
}

fn monoid(args: &MonoidArgs, format: Format) -> CmdResult {
    let s = parse_gens(&args.gens)?;
    if let Some(x) = args.p_of {
        let p = s.max_fact_length(x)?;
        return Ok(Output::ok(match format {
            Format::Text => p.to_string(),
            Format::Json => to_json(&json!({ "s": x, "p": p })),
        }));
    }
    if let Some(x) = args.contains {
        let yes = s.contains(x);
        return Ok(Output::verdict(
            yes,
            match format {
                Format::Text => if yes { "yes" } else { "no" }.to_string(),
                Format::Json => to_json(&json!({ "value": x, "member": yes })),
            },
        ));
    }
    Ok(Output::ok(match format {
        Format::Text => {
            let mut lines = vec![
                format!(
                    "Minimal system of generators: {}",
                    format_generators(s.gens())
                ),
                format!("gcd: {}", s.gcd()),
            ];
            lines.extend(monoid_text(&s));
            if let Ok(g) = s.genus() {
                lines.push(format!("Genus: {g}"));
            }
            lines.join("\n")
        }
        Format::Json => to_json(&s.to_json()),
    }))
}

fn tree(args: &TreeArgs, format: Format) -> CmdResult {
    let cls = resolve_class(&args.class)?;
    let all = enumerate_by_genus(cls, args.max_genus)?;
    Ok(Output::ok(match format {
        Format::Text => all
            .iter()
            .map(|s| {
                format!(
                    "gens={};F={};genus={}",
                    format_generators(s.gens()),
                    s.frobenius().expect("numerical"),
                    s.genus().expect("numerical")
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => to_json(&all.iter().map(Submonoid::to_json).collect::<Vec<_>>()),
    }))
}
