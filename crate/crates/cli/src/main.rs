use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thompson_core::core2::{build_core, core_presentation, CoreGraph};
use thompson_core::jones::{commensurator_witness, factorize, Bipartition};
use thompson_core::presentation::{dihedral_alpha, relation_suite, symbolic_standard_form};
use thompson_core::t3::{search_torsion, torsion_json};
use thompson_core::{
    member_vect_bipartite, member_vect_parity, DyadicRational, Error, GroupWord, ThompsonGraph,
    TreePair,
};

/// Tree pairs, membership in Jones' subgroup of Thompson's group T, and
/// Stallings cores.
///
/// WORD arguments are words such as "x0^2 c x1^-1" or tree pairs written
/// "R ; S ; n" with trees in parenthesis form, e.g. "((()())()) ; (()(()())) ; 1".
#[derive(Parser, Debug)]
#[command(name = "thompson", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Image of a dyadic point (`3/8`, `3/2^3` or `0.011`).
    Eval { word: String, point: String },
    /// Reduced diagram of a product of words, applied left to right.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Removes every dipole from a tree pair.
    Reduce { pair: String },
    /// Order of an element, searched up to the cap.
    Order {
        word: String,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Membership in Jones' subgroup by both tests.
    Member { word: String },
    /// `p · c_2n^m · q` with `p`, `q` rotation free.
    Factor { word: String },
    /// Thompson graph of an element.
    Graph {
        word: String,
        #[arg(long)]
        dot: bool,
    },
    /// Folded core of the subgroup generated by the words.
    Core {
        #[arg(required = true)]
        generators: Vec<String>,
        #[arg(long)]
        dot: bool,
        /// Print only the semigroup presentation.
        #[arg(long, conflicts_with = "dot")]
        presentation: bool,
    },
    /// Whether the core of the given generators accepts WORD.
    Accept {
        /// A generator word; repeat the flag or separate words with commas.
        #[arg(long = "core-from", required = true, value_delimiter = ',')]
        core_from: Vec<String>,
        word: String,
    },
    /// Checks a bundled relation suite.
    Verify {
        suite: String,
        #[arg(long)]
        range: Option<u32>,
    },
    /// Rewrites a word in the g_k and c_2n as p · c_2n^m · q⁻¹.
    StandardForm { word: String },
    /// Image in the infinite dihedral group, as `(k, s)` for t ↦ (-1)^s t + k.
    Alpha { word: String },
    /// Elements of exact order K with at most L leaves.
    Torsion {
        #[arg(long, default_value_t = 2)]
        arity: u8,
        #[arg(long)]
        order: usize,
        #[arg(long = "max-leaves")]
        max_leaves: usize,
    },
    /// Least n with f⁻¹ (x0 x1)⁻ⁿ f outside Jones' subgroup.
    Witness {
        word: String,
        #[arg(long, default_value_t = 30)]
        cap: u32,
    },
}

struct Report {
    text: String,
    json: Value,
    verdict: bool,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            verdict: true,
        }
    }

    fn verdict(verdict: bool, text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            verdict,
        }
    }
}

/// A word, or a tree pair when the argument contains `;`.
fn element(arg: &str) -> Result<TreePair, Error> {
    if arg.contains(';') {
        Ok(TreePair::parse(arg)?.reduce())
    } else {
        TreePair::from_word(&arg.parse()?)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn core_of(words: &[String]) -> Result<CoreGraph, Error> {
    let gens = words
        .iter()
        .map(|w| element(w))
        .collect::<Result<Vec<_>, _>>()?;
    build_core(&gens)
}

fn core_json(core: &CoreGraph) -> Value {
    let children: Vec<Value> = (0..core.vertex_count())
        .map(|v| match core.children(v) {
            Some((l, r)) => json!([l, r]),
            None => Value::Null,
        })
        .collect();
    json!({
        "vertices": core.vertex_count(),
        "children": children,
        "presentation": core_presentation(core).to_string(),
    })
}

fn run(command: Command) -> Result<Report, Error> {
    Ok(match command {
        Command::Eval { word, point } => {
            let f = element(&word)?;
            let t: DyadicRational = point.parse()?;
            let value = f.evaluate(&t)?;
            Report::ok(
                value.to_string(),
                json!({ "point": t.to_string(), "value": value.to_string(), "binary": value.to_binary_string() }),
            )
        }
        Command::Mul { words } => {
            let mut f = TreePair::identity(2);
            for w in &words {
                f = f.multiply(&element(w)?)?;
            }
            Report::ok(f.to_string(), f.to_json())
        }
        Command::Reduce { pair } => {
            let f = TreePair::parse(&pair)?;
            let r = f.reduce();
            let mut json = r.to_json();
            json["carets_removed"] = json!(f.leaf_count() - r.leaf_count());
            Report::ok(r.to_string(), json)
        }
        Command::Order { word, cap } => {
            let f = element(&word)?;
            match f.order(cap) {
                Some(k) => Report::ok(k.to_string(), json!({ "order": k })),
                None => Report::verdict(
                    false,
                    format!("no finite order up to {cap}"),
                    json!({ "order": Value::Null, "cap": cap }),
                ),
            }
        }
        Command::Member { word } => {
            let f = element(&word)?;
            let bipartite = member_vect_bipartite(&f)?;
            let parity = member_vect_parity(&f)?;
            Report::verdict(
                bipartite && parity.is_member(),
                format!("bipartite: {}; parity: {parity}", yes_no(bipartite)),
                json!({ "bipartite": bipartite, "parity": parity.to_string() }),
            )
        }
        Command::Factor { word } => {
            let f = element(&word)?;
            match factorize(&f) {
                Ok(fz) => Report::ok(
                    format!("p = {}\nn = {}\nm = {}\nq = {}", fz.p, fz.n, fz.m, fz.q),
                    json!({ "p": fz.p.to_json(), "n": fz.n, "m": fz.m, "q": fz.q.to_json() }),
                ),
                Err(Error::NotInJonesSubgroup) => {
                    Report::verdict(false, "not in Jones' subgroup", json!({ "member": false }))
                }
                Err(e) => return Err(e),
            }
        }
        Command::Graph { word, dot } => {
            let f = element(&word)?;
            let graph = ThompsonGraph::of_pair(&f)?;
            let edges: Vec<(usize, usize)> = graph.edges().collect();
            let (colors, cycle) = match graph.bipartition() {
                Bipartition::Coloring(c) => (Some(c), None),
                Bipartition::OddCycle(c) => (None, Some(c)),
            };
            let text = if dot {
                graph.to_dot(colors.as_deref())
            } else {
                let mut out = format!("vertices: {}\nedges:", graph.vertex_count());
                for (a, b) in &edges {
                    out.push_str(&format!(" {a}-{b}"));
                }
                match (&colors, &cycle) {
                    (Some(c), _) => {
                        let c: Vec<String> = c.iter().map(u8::to_string).collect();
                        out.push_str(&format!("\nbipartite: yes\ncoloring: {}", c.join(" ")));
                    }
                    (_, Some(c)) => {
                        let c: Vec<String> = c.iter().map(usize::to_string).collect();
                        out.push_str(&format!("\nbipartite: no\nodd cycle: {}", c.join(" ")));
                    }
                    _ => unreachable!(),
                }
                out
            };
            Report::verdict(
                colors.is_some(),
                text,
                json!({
                    "vertices": graph.vertex_count(),
                    "edges": edges,
                    "coloring": colors,
                    "odd_cycle": cycle,
                }),
            )
        }
        Command::Core {
            generators,
            dot,
            presentation,
        } => {
            let core = core_of(&generators)?;
            let pres = core_presentation(&core).to_string();
            let text = if dot {
                core.to_dot()
            } else if presentation {
                pres
            } else {
                format!("vertices: {}\npresentation: {pres}", core.vertex_count())
            };
            Report::ok(text, core_json(&core))
        }
        Command::Accept { core_from, word } => {
            let core = core_of(&core_from)?;
            let accepted = core.accepts(&element(&word)?);
            Report::verdict(
                accepted,
                if accepted { "accepted" } else { "rejected" },
                json!({ "accepted": accepted }),
            )
        }
        Command::Verify { suite, range } => {
            let report = relation_suite(&suite, range)?;
            let text = report.to_text();
            Report::verdict(report.all_hold(), text.trim_end(), report.to_json())
        }
        Command::StandardForm { word } => {
            let form = symbolic_standard_form(&word.parse::<GroupWord>()?)?;
            Report::ok(
                form.to_string(),
                json!({
                    "p": form.p_word().to_string(),
                    "n": form.n,
                    "m": form.m,
                    "q": form.q_word().to_string(),
                    "word": form.to_word().to_string(),
                }),
            )
        }
        Command::Alpha { word } => {
            let a = dihedral_alpha(&word.parse::<GroupWord>()?)?;
            Report::ok(
                a.to_string(),
                json!({ "translation": a.translation, "flip": a.flip }),
            )
        }
        Command::Torsion {
            arity,
            order,
            max_leaves,
        } => {
            let hits = search_torsion(arity, order, max_leaves);
            let mut text: String = hits.iter().map(|f| format!("{f}\n")).collect();
            text.push_str(&format!(
                "{} elements of order {order} with at most {max_leaves} leaves",
                hits.len()
            ));
            Report::verdict(!hits.is_empty(), text, torsion_json(&hits))
        }
        Command::Witness { word, cap } => {
            let f = element(&word)?;
            match commensurator_witness(&f, cap) {
                Ok(n) => Report::ok(format!("n = {n}"), json!({ "n": n })),
                Err(e @ (Error::CapExhausted { .. } | Error::InJonesSubgroup)) => Report::verdict(
                    false,
                    e.to_string(),
                    json!({ "n": Value::Null, "reason": e.to_string() }),
                ),
                Err(e) => return Err(e),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                println!("{}", report.text.trim_end());
            }
            if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
