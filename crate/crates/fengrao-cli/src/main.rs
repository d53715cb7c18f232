//! `fengrao` — exact numerical-semigroup computations on the command
//! line.
//!
//! Exit codes: 0 success; 1 a `--method both` self-audit found a
//! disagreement; 2 invalid input; 3 overflow or a `--max-conductor`
//! breach.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fengrao::{
    admits_pattern, bounds_table, default_bounds_range, inductive::is_inductive, Admission,
    InductiveDescriptor, NumericalSemigroup, Pattern, TowerParams, Winner,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "fengrao",
    version,
    about = "Numerical-semigroup calculator: Apery sets, Feng-Rao distances and numbers, inductive and tower semigroups, code bounds"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse computations on semigroups with a conductor above this.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_conductor: u64,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum E2Method {
    Closed,
    Brute,
    Both,
}

/// One of `--gens`, `--small`, `--inductive a=… b=…`.
#[derive(Args)]
struct SemigroupSpec {
    /// Generators, comma-separated (e.g. 3,5).
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["small", "inductive"])]
    gens: Option<Vec<u64>>,

    /// Small elements, comma-separated, starting at 0 (e.g. 0,8,10,12).
    #[arg(long, value_delimiter = ',', conflicts_with = "inductive")]
    small: Option<Vec<u64>>,

    /// Inductive descriptor as two tokens: a=2,2,2 b=1,2,6.
    #[arg(long, num_args = 2, value_names = ["a=A1,..,AN", "b=B1,..,BN"])]
    inductive: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical form and the standard invariants of a semigroup.
    Analyze {
        #[command(flatten)]
        spec: SemigroupSpec,
    },
    /// The Apery set of a semigroup relative to x.
    Apery {
        #[command(flatten)]
        spec: SemigroupSpec,
        /// Base element (any positive integer, member or gap).
        #[arg(long)]
        x: u64,
        /// Use the closed-form recursion (inductive semigroups, x ≤ multiplicity).
        #[arg(long)]
        closed: bool,
    },
    /// The second Feng-Rao number E(Γ, 2).
    E2 {
        #[command(flatten)]
        spec: SemigroupSpec,
        #[arg(long, value_enum, default_value_t = E2Method::Brute)]
        method: E2Method,
    },
    /// Tower semigroup at level n over base q: summary, Apery
    /// cardinalities, or the d2-bound comparison table.
    Tower {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Emit the bound-comparison table.
        #[arg(long)]
        table: bool,
        /// First table row (default 2g−1).
        #[arg(long, requires = "table")]
        from: Option<u64>,
        /// Last table row (default 2c−2).
        #[arg(long, requires = "table")]
        to: Option<u64>,
        /// Emit only the closed-form E(Γₙ, 2).
        #[arg(long, conflicts_with = "table")]
        e2: bool,
        /// Emit the closed-form Apery cardinalities at the powers of q.
        #[arg(long, conflicts_with_all = ["table", "e2"])]
        apery_cards: bool,
    },
    /// Feng-Rao distance δ (r = 1) or generalized distance δʳ at m.
    Frd {
        #[command(flatten)]
        spec: SemigroupSpec,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        r: u64,
        /// Search window above m for r ≥ 2 (default 2c + r).
        #[arg(long)]
        window: Option<u64>,
    },
    /// Test whether the semigroup admits a linear pattern.
    Pattern {
        #[command(flatten)]
        spec: SemigroupSpec,
        /// Coefficients, comma-separated (e.g. 1,1,-1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
    },
}

/// A domain failure carrying its process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn limit(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn disagreement(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<fengrao::Error> for Failure {
    fn from(e: fengrao::Error) -> Self {
        match e {
            fengrao::Error::Overflow { .. } => Failure::limit(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn parse_descriptor(tokens: &[String]) -> Result<InductiveDescriptor, Failure> {
    let list = |tok: &String, prefix: &str| -> Result<Vec<u64>, Failure> {
        let rest = tok.strip_prefix(prefix).ok_or_else(|| {
            Failure::invalid(format!(
                "expected {prefix}<comma-separated list>, got {tok}"
            ))
        })?;
        rest.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure::invalid(format!("bad integer {p:?} in {tok}")))
            })
            .collect()
    };
    let a = list(&tokens[0], "a=")?;
    let b = list(&tokens[1], "b=")?;
    Ok(InductiveDescriptor::new(a, b)?)
}

/// Resolve a spec to a semigroup, a descriptor if one is known or
/// recoverable, and a provenance record for the envelope.
fn resolve(
    spec: &SemigroupSpec,
    max_conductor: u64,
) -> Result<(NumericalSemigroup, Option<InductiveDescriptor>, Value), Failure> {
    let (s, d, inputs) = if let Some(gens) = &spec.gens {
        let s = NumericalSemigroup::from_generators(gens)?;
        (s, None, json!({ "gens": gens }))
    } else if let Some(small) = &spec.small {
        let s = NumericalSemigroup::from_small_elements(small)?;
        (s, None, json!({ "small": small }))
    } else if let Some(tokens) = &spec.inductive {
        let d = parse_descriptor(tokens)?;
        if d.conductor() > max_conductor {
            return Err(Failure::limit(format!(
                "descriptor conductor {} exceeds --max-conductor {}",
                d.conductor(),
                max_conductor
            )));
        }
        let s = d.build();
        let inputs = json!({ "inductive": { "a": d.a(), "b": d.b() } });
        (s, Some(d), inputs)
    } else {
        return Err(Failure::invalid(
            "one of --gens, --small, --inductive is required",
        ));
    };
    if s.conductor() > max_conductor {
        return Err(Failure::limit(format!(
            "conductor {} exceeds --max-conductor {}",
            s.conductor(),
            max_conductor
        )));
    }
    let d = d.or_else(|| is_inductive(&s));
    Ok((s, d, inputs))
}

fn emit(cli: &Cli, command: &str, inputs: Value, result: Value, text: String, csv: String) {
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Csv => print!("{csv}"),
        Format::Json => {
            let envelope = json!({
                "tool": "fengrao",
                "version": env!("CARGO_PKG_VERSION"),
                "command": command,
                "inputs": inputs,
                "result": result,
            });
            println!("{envelope}");
        }
    }
}

fn winner_name(w: Winner) -> &'static str {
    match w {
        Winner::GoppaLike => "goppa_like",
        Winner::Gob => "gob",
        Winner::Tie => "tie",
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Cmd::Analyze { spec } => {
            let (s, d, inputs) = resolve(spec, cli.max_conductor)?;
            let arf = fengrao::is_arf(&s);
            let saturated = fengrao::is_saturated(&s);
            let descriptor = d.as_ref().map(|d| json!({ "a": d.a(), "b": d.b() }));
            let result = json!({
                "small_elements": s.small_elements(),
                "genus": s.genus(),
                "conductor": s.conductor(),
                "multiplicity": s.multiplicity(),
                "frobenius": s.frobenius(),
                "arf": arf,
                "saturated": saturated,
                "inductive": d.is_some(),
                "descriptor": descriptor,
            });
            let mut text = format!(
                "small elements: {}\ngenus: {}\nconductor: {}\nmultiplicity: {}\nfrobenius: {}\narf: {}\nsaturated: {}\ninductive: {}",
                join(s.small_elements(), " "),
                s.genus(),
                s.conductor(),
                s.multiplicity(),
                s.frobenius(),
                arf,
                saturated,
                d.is_some(),
            );
            if let Some(d) = &d {
                text.push_str(&format!(
                    "\ndescriptor: a={} b={}",
                    join(d.a(), ","),
                    join(d.b(), ",")
                ));
            }
            let csv = format!(
                "genus,conductor,multiplicity,frobenius,arf,saturated,inductive\n{},{},{},{},{},{},{}\n",
                s.genus(),
                s.conductor(),
                s.multiplicity(),
                s.frobenius(),
                arf,
                saturated,
                d.is_some(),
            );
            emit(cli, "analyze", inputs, result, text, csv);
        }

        Cmd::Apery { spec, x, closed } => {
            let (s, d, mut inputs) = resolve(spec, cli.max_conductor)?;
            inputs["x"] = json!(x);
            let ap = if *closed {
                let d =
                    d.ok_or_else(|| Failure::invalid("--closed requires an inductive semigroup"))?;
                d.apery_closed(*x)?
            } else {
                s.apery_set(*x as i64)?
            };
            let result = json!({
                "x": ap.base(),
                "elements": ap.elements(),
                "cardinality": ap.cardinality(),
            });
            let text = format!(
                "Ap(S, {}) = {{{}}} (cardinality {})",
                ap.base(),
                join(ap.elements(), ", "),
                ap.cardinality()
            );
            let csv = format!("element\n{}\n", join(ap.elements(), "\n"));
            emit(cli, "apery", inputs, result, text, csv);
        }

        Cmd::E2 { spec, method } => {
            let (s, d, inputs) = resolve(spec, cli.max_conductor)?;
            let closed = || -> Result<u64, Failure> {
                let d = d.as_ref().ok_or_else(|| {
                    Failure::invalid("--method closed requires an inductive semigroup")
                })?;
                Ok(d.e2_closed())
            };
            let (result, text) = match method {
                E2Method::Closed => {
                    let v = closed()?;
                    (json!({ "e2": v, "method": "closed" }), format!("E2 = {v}"))
                }
                E2Method::Brute => {
                    let v = s.feng_rao_number_2_bruteforce();
                    (json!({ "e2": v, "method": "brute" }), format!("E2 = {v}"))
                }
                E2Method::Both => {
                    let c = closed()?;
                    let b = s.feng_rao_number_2_bruteforce();
                    if c != b {
                        return Err(Failure::disagreement(format!(
                            "closed={c} brute={b} disagree"
                        )));
                    }
                    (
                        json!({ "e2": c, "closed": c, "brute": b, "agree": true }),
                        format!("closed={c} brute={b} agree=true"),
                    )
                }
            };
            let e2 = result["e2"].clone();
            let csv = format!("e2\n{e2}\n");
            emit(cli, "e2", inputs, result, text, csv);
        }

        Cmd::Tower {
            q,
            n,
            table,
            from,
            to,
            e2,
            apery_cards,
        } => {
            let p = TowerParams::new(*q, *n)?;
            if !p.q_is_square() {
                eprintln!(
                    "warning: q = {q} is not a perfect square; the function-field interpretation needs one, the semigroup values are exact regardless"
                );
            }
            if p.conductor() > cli.max_conductor {
                return Err(Failure::limit(format!(
                    "tower conductor {} exceeds --max-conductor {}",
                    p.conductor(),
                    cli.max_conductor
                )));
            }
            let inputs = json!({ "q": q, "n": n });
            if *table {
                let (dfrom, dto) = default_bounds_range(&p);
                let m_from = from.unwrap_or(dfrom);
                let m_to = to.unwrap_or(dto);
                if m_from > m_to {
                    return Err(Failure::invalid(format!(
                        "empty range: --from {m_from} > --to {m_to}"
                    )));
                }
                let t = bounds_table(&p, m_from, m_to)?;
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "m": r.m,
                            "d2_goppa_like": r.d2_goppa_like,
                            "gob": r.gob,
                            "winner": winner_name(r.winner),
                        })
                    })
                    .collect();
                let result = json!({ "m_from": m_from, "m_to": m_to, "rows": rows });
                let mut text = format!(
                    "{:>6} {:>14} {:>6} {:>11}",
                    "m", "d2_goppa_like", "gob", "winner"
                );
                let mut csv = String::from("m,d2_goppa_like,gob,winner\n");
                for r in &t.rows {
                    text.push_str(&format!(
                        "\n{:>6} {:>14} {:>6} {:>11}",
                        r.m,
                        r.d2_goppa_like,
                        r.gob,
                        winner_name(r.winner)
                    ));
                    csv.push_str(&format!(
                        "{},{},{},{}\n",
                        r.m,
                        r.d2_goppa_like,
                        r.gob,
                        winner_name(r.winner)
                    ));
                }
                emit(cli, "tower", inputs, result, text, csv);
            } else if *e2 {
                let v = p.e2_closed();
                emit(
                    cli,
                    "tower",
                    inputs,
                    json!({ "e2": v }),
                    format!("E2 = {v}"),
                    format!("e2\n{v}\n"),
                );
            } else if *apery_cards {
                if *n < 2 {
                    return Err(Failure::invalid("--apery-cards needs --n at least 2"));
                }
                let cards = p.apery_cardinalities();
                let rows: Vec<Value> = cards
                    .iter()
                    .map(|(x, c)| json!({ "x": x, "cardinality": c }))
                    .collect();
                let text = cards
                    .iter()
                    .map(|(x, c)| format!("#Ap(S, {x}) = {c}"))
                    .collect::<Vec<_>>()
                    .join("\n");
                let csv = std::iter::once("x,cardinality".to_string())
                    .chain(cards.iter().map(|(x, c)| format!("{x},{c}")))
                    .collect::<Vec<_>>()
                    .join("\n")
                    + "\n";
                emit(cli, "tower", inputs, json!({ "cards": rows }), text, csv);
            } else {
                let d = p.descriptor();
                let result = json!({
                    "conductor": p.conductor(),
                    "genus": d.genus_closed(),
                    "multiplicity": d.multiplicity(),
                    "e2": p.e2_closed(),
                    "descriptor": { "a": d.a(), "b": d.b() },
                });
                let text = format!(
                    "conductor: {}\ngenus: {}\nmultiplicity: {}\nE2: {}\ndescriptor: a={} b={}",
                    p.conductor(),
                    d.genus_closed(),
                    d.multiplicity(),
                    p.e2_closed(),
                    join(d.a(), ","),
                    join(d.b(), ",")
                );
                let csv = format!(
                    "conductor,genus,multiplicity,e2\n{},{},{},{}\n",
                    p.conductor(),
                    d.genus_closed(),
                    d.multiplicity(),
                    p.e2_closed()
                );
                emit(cli, "tower", inputs, result, text, csv);
            }
        }

        Cmd::Frd { spec, m, r, window } => {
            if *r < 1 {
                return Err(Failure::invalid("--r must be at least 1"));
            }
            let (s, _, mut inputs) = resolve(spec, cli.max_conductor)?;
            inputs["m"] = json!(m);
            inputs["r"] = json!(r);
            let v = if *r == 1 {
                s.feng_rao_distance(*m)?
            } else {
                s.generalized_feng_rao_distance(*r, *m, *window)?
            };
            emit(
                cli,
                "frd",
                inputs,
                json!({ "m": m, "r": r, "delta": v }),
                format!("delta^{r}({m}) = {v}"),
                format!("delta\n{v}\n"),
            );
        }

        Cmd::Pattern { spec, coeffs } => {
            if coeffs.is_empty() {
                return Err(Failure::invalid("--coeffs must be non-empty"));
            }
            if coeffs.contains(&0) {
                return Err(Failure::invalid("pattern coefficients must be non-zero"));
            }
            let (s, _, mut inputs) = resolve(spec, cli.max_conductor)?;
            inputs["coeffs"] = json!(coeffs);
            let p = Pattern::new(coeffs.clone());
            let (result, text) = match admits_pattern(&s, &p)? {
                Admission::Admits => (json!({ "admits": true }), "admits: true".to_string()),
                Admission::Fails { tuple, value } => (
                    json!({ "admits": false, "counterexample": tuple, "value": value }),
                    format!(
                        "admits: false (p({}) = {} is a gap)",
                        join(&tuple, ", "),
                        value
                    ),
                ),
            };
            let csv = format!("admits\n{}\n", result["admits"]);
            emit(cli, "pattern", inputs, result, text, csv);
        }
    }
    Ok(())
}
