//! Relations among the named generators, checked in tree-pair semantics,
//! plus symbolic rewriting in Jones' subgroup and its dihedral quotient.
//!
//! Relation families live in `suites.txt` as templates over index
//! variables; a suite names a list of families and a default range.

mod dihedral;
mod expr;
mod standard_form;

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::treepair::{GroupWord, TreePair};

pub use dihedral::{dihedral_alpha, DihedralElement};
pub use standard_form::{symbolic_standard_form, StandardForm};

const SUITES: &str = include_str!("suites.txt");

#[derive(Clone, Debug)]
struct Family {
    name: String,
    vars: Vec<(String, Option<String>)>,
    conditions: Vec<String>,
    relations: Vec<String>,
}

#[derive(Clone, Debug)]
struct Suite {
    name: String,
    default_range: u32,
    families: Vec<String>,
}

struct Catalog {
    families: Vec<Family>,
    suites: Vec<Suite>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(SUITES).expect("bundled relation suites parse"))
}

fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut families: Vec<Family> = Vec::new();
    let mut suites = Vec::new();
    let bad = |line: &str| Error::Parse(format!("suite file line `{line}`"));
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
        let rest = rest.trim();
        match key {
            "family" => families.push(Family {
                name: rest.to_string(),
                vars: Vec::new(),
                conditions: Vec::new(),
                relations: Vec::new(),
            }),
            "suite" => {
                let (head, names) = rest.split_once(':').ok_or_else(|| bad(line))?;
                let (name, range) = head.trim().split_once(' ').ok_or_else(|| bad(line))?;
                suites.push(Suite {
                    name: name.to_string(),
                    default_range: range.trim().parse().map_err(|_| bad(line))?,
                    families: names.split_whitespace().map(String::from).collect(),
                });
            }
            _ => {
                let family = families.last_mut().ok_or_else(|| bad(line))?;
                match key {
                    "vars" => {
                        family.vars = rest
                            .split_whitespace()
                            .map(|v| match v.split_once(':') {
                                Some((name, bound)) => (name.to_string(), Some(bound.to_string())),
                                None => (v.to_string(), None),
                            })
                            .collect();
                    }
                    "where" => {
                        family.conditions = rest.split(',').map(|c| c.trim().to_string()).collect();
                    }
                    "relation" => family.relations.push(rest.to_string()),
                    _ => return Err(bad(line)),
                }
            }
        }
    }
    for suite in &suites {
        for name in &suite.families {
            if !families.iter().any(|f| &f.name == name) {
                return Err(Error::Parse(format!(
                    "suite `{}` names unknown family `{name}`",
                    suite.name
                )));
            }
        }
    }
    Ok(Catalog { families, suites })
}

/// One instantiated relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
}

impl Family {
    fn instances(&self, range: u32) -> Result<Vec<Relation>> {
        let mut env = expr::Env::new();
        env.insert("N".into(), range as i64);
        let mut out = Vec::new();
        self.expand(0, &mut env, &mut out)?;
        Ok(out)
    }

    fn expand(&self, var: usize, env: &mut expr::Env, out: &mut Vec<Relation>) -> Result<()> {
        if let Some((name, bound)) = self.vars.get(var) {
            let hi = match bound {
                Some(b) => expr::eval(b, env)?,
                None => env["N"],
            };
            for value in 0..=hi {
                env.insert(name.clone(), value);
                self.expand(var + 1, env, out)?;
            }
            env.remove(name);
            return Ok(());
        }
        for cond in &self.conditions {
            if !expr::holds(cond, env)? {
                return Ok(());
            }
        }
        for template in &self.relations {
            let text = expr::substitute(template, env)?;
            let (lhs, rhs) = text
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("relation `{text}`")))?;
            out.push(Relation {
                family: self.name.clone(),
                lhs: lhs.parse()?,
                rhs: rhs.parse()?,
            });
        }
        Ok(())
    }
}

/// Whether two words name the same element of `T`.
pub fn verify_relation(lhs: &GroupWord, rhs: &GroupWord) -> Result<bool> {
    Ok(TreePair::from_word(lhs)? == TreePair::from_word(rhs)?)
}

/// Names of the bundled suites, plus `all`.
pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = catalog().suites.iter().map(|s| s.name.as_str()).collect();
    names.push("all");
    names
}

/// Default index range of a suite.
pub fn default_range(name: &str) -> Result<u32> {
    if name == "all" {
        return Ok(catalog()
            .suites
            .iter()
            .map(|s| s.default_range)
            .max()
            .unwrap_or(1));
    }
    catalog()
        .suites
        .iter()
        .find(|s| s.name == name)
        .map(|s| s.default_range)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// All instances of a suite's families with indices up to `range`.
pub fn suite_relations(name: &str, range: u32) -> Result<Vec<Relation>> {
    let cat = catalog();
    let families: Vec<&str> = if name == "all" {
        let mut seen = Vec::new();
        for s in &cat.suites {
            for f in &s.families {
                if !seen.contains(&f.as_str()) {
                    seen.push(f.as_str());
                }
            }
        }
        seen
    } else {
        cat.suites
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownSuite(name.to_string()))?
            .families
            .iter()
            .map(String::as_str)
            .collect()
    };
    let mut out = Vec::new();
    for fname in families {
        let family = cat
            .families
            .iter()
            .find(|f| f.name == fname)
            .expect("checked at load");
        out.extend(family.instances(range)?);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: Relation,
    pub holds: bool,
    /// Reduced diagrams of both sides when the relation fails.
    pub diagrams: Option<(TreePair, TreePair)>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub range: u32,
    pub checks: Vec<RelationCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.holds).count()
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn all_hold(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} relations hold", self.passed(), self.total())
    }

    /// One line per relation, then the summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.holds { "ok  " } else { "FAIL" };
            let rhs = if c.relation.rhs.is_empty() {
                "1".to_string()
            } else {
                c.relation.rhs.to_string()
            };
            out.push_str(&format!(
                "{verdict} {:<16} {} = {rhs}\n",
                c.relation.family, c.relation.lhs
            ));
            if let Some((l, r)) = &c.diagrams {
                out.push_str(&format!("     lhs {l}\n     rhs {r}\n"));
            }
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        let relations: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "family": c.relation.family,
                    "lhs": c.relation.lhs.to_string(),
                    "rhs": c.relation.rhs.to_string(),
                    "holds": c.holds,
                });
                if let Some((l, r)) = &c.diagrams {
                    v["lhs_pair"] = l.to_json();
                    v["rhs_pair"] = r.to_json();
                }
                v
            })
            .collect();
        json!({
            "suite": self.suite,
            "range": self.range,
            "passed": self.passed(),
            "total": self.total(),
            "relations": relations,
        })
    }
}

/// Checks every relation of a suite; `range` defaults to the suite's own.
pub fn relation_suite(name: &str, range: Option<u32>) -> Result<SuiteReport> {
    let range = match range {
        Some(r) => r,
        None => default_range(name)?,
    };
    let checks = suite_relations(name, range)?
        .into_iter()
        .map(|relation| {
            let l = TreePair::from_word(&relation.lhs)?;
            let r = TreePair::from_word(&relation.rhs)?;
            let holds = l == r;
            Ok(RelationCheck {
                relation,
                holds,
                diagrams: (!holds).then_some((l, r)),
            })
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport {
        suite: name.to_string(),
        range,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn single_relations() {
        assert!(verify_relation(&word("x0^-1 x1 x0"), &word("x2")).unwrap());
        assert!(verify_relation(&word("c0 g1"), &word("c2^3")).unwrap());
        assert!(!verify_relation(&word("x0"), &word("x1")).unwrap());
    }

    #[test]
    fn catalog_loads() {
        let names = suite_names();
        assert!(names.contains(&"finite-presentation"));
        assert_eq!(suite_relations("finite-presentation", 1).unwrap().len(), 12);
        assert!(matches!(
            relation_suite("nope", None),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn instance_counts() {
        // k < n <= 3 gives six pairs.
        let t1: Vec<_> = suite_relations("t1-t5", 3)
            .unwrap()
            .into_iter()
            .filter(|r| r.family == "t1")
            .collect();
        assert_eq!(t1.len(), 6);
        assert_eq!(t1[0].lhs.to_string(), "x0^-1 x1 x0");
    }

    #[test]
    fn small_suites_hold() {
        let report = relation_suite("finite-presentation", None).unwrap();
        assert_eq!(report.summary(), "12/12 relations hold");
        assert!(relation_suite("t1-t5", Some(3)).unwrap().all_hold());
    }

    #[test]
    fn failures_carry_diagrams() {
        let cat = parse_catalog("family bad\nrelation x0 = x1\nsuite bad 1: bad\n").unwrap();
        let rel = cat.families[0].instances(1).unwrap();
        assert_eq!(rel.len(), 1);
        assert!(!verify_relation(&rel[0].lhs, &rel[0].rhs).unwrap());
        assert!(parse_catalog("suite s 1: missing\n").is_err());
    }
}
