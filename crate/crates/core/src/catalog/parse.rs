use std::collections::HashSet;

use super::{FamilyRecord, K3Status, RankClaim, Rationality, Status};
use crate::cubic::{DiagonalAutomorphism, NVARS};
use crate::{Error, Result};

#[derive(Default)]
struct Draft {
    name: String,
    line: usize,
    seen: HashSet<&'static str>,
    order: Option<u32>,
    weights: Option<[i64; NVARS]>,
    eigenvalue: Option<u32>,
    dimension: Option<u32>,
    symplectic: Option<bool>,
    divisors: Vec<u64>,
    rank_a: Option<RankClaim>,
    hodge: Option<Status>,
    twisted: Option<Status>,
    motivic: Option<Status>,
    rationality: Option<Rationality>,
    citations: Vec<String>,
    notes: Vec<String>,
}

const SINGLE_KEYS: &[&str] = &[
    "order",
    "weights",
    "eigenvalue",
    "dimension",
    "symplectic",
    "divisors",
    "rank_A",
    "hodge",
    "twisted",
    "motivic",
    "rationality",
];

fn int_list<T: std::str::FromStr>(value: &str) -> Option<Vec<T>> {
    if value.trim().is_empty() {
        return Some(Vec::new());
    }
    value.split(',').map(|s| s.trim().parse().ok()).collect()
}

impl Draft {
    fn fail<T>(&self, line: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Catalog {
            line,
            record: self.name.clone(),
            message: message.into(),
        })
    }

    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<()> {
        if let Some(&k) = SINGLE_KEYS.iter().find(|&&k| k == key) {
            if !self.seen.insert(k) {
                return self.fail(line, format!("duplicate key `{key}`"));
            }
        }
        let bad = |what: &str| format!("invalid {what} `{value}`");
        match key {
            "order" => match value.parse() {
                Ok(n) if n >= 1 => self.order = Some(n),
                _ => return self.fail(line, bad("order")),
            },
            "weights" => match int_list::<i64>(value) {
                Some(w) if w.len() == NVARS => {
                    self.weights = Some(w.try_into().expect("length checked"))
                }
                _ => return self.fail(line, bad("weights (need six residues)")),
            },
            "eigenvalue" => match value.parse() {
                Ok(k) => self.eigenvalue = Some(k),
                _ => return self.fail(line, bad("eigenvalue")),
            },
            "dimension" => match value.parse() {
                Ok(d) => self.dimension = Some(d),
                _ => return self.fail(line, bad("dimension")),
            },
            "symplectic" => match value {
                "true" => self.symplectic = Some(true),
                "false" => self.symplectic = Some(false),
                _ => return self.fail(line, bad("symplectic flag")),
            },
            "divisors" => match int_list::<u64>(value) {
                Some(d) => self.divisors = d,
                None => return self.fail(line, bad("divisor list")),
            },
            "rank_A" => {
                let claim = match value.strip_prefix(">=") {
                    Some(rest) => rest.trim().parse().ok().map(RankClaim::AtLeast),
                    None => value.parse().ok().map(RankClaim::Exact),
                };
                match claim {
                    Some(c) if (1..=23).contains(&c.effective()) => self.rank_a = Some(c),
                    _ => return self.fail(line, bad("rank_A")),
                }
            }
            "hodge" | "twisted" | "motivic" => {
                let Some(s) = Status::parse(value) else {
                    return self.fail(line, bad(key));
                };
                match key {
                    "hodge" => self.hodge = Some(s),
                    "twisted" => self.twisted = Some(s),
                    _ => self.motivic = Some(s),
                }
            }
            "rationality" => match Rationality::parse(value) {
                Some(r) => self.rationality = Some(r),
                None => return self.fail(line, bad("rationality")),
            },
            "cite" => self.citations.push(value.to_string()),
            "note" => self.notes.push(value.to_string()),
            _ => return self.fail(line, format!("unknown key `{key}`")),
        }
        Ok(())
    }

    fn finish(self) -> Result<FamilyRecord> {
        let line = self.line;
        let missing = |k: &str| self.fail::<FamilyRecord>(line, format!("missing key `{k}`"));
        let Some(symplectic) = self.symplectic else {
            return missing("symplectic");
        };
        let Some(hodge) = self.hodge else {
            return missing("hodge");
        };
        let Some(twisted) = self.twisted else {
            return missing("twisted");
        };
        let Some(motivic) = self.motivic else {
            return missing("motivic");
        };
        let Some(rationality) = self.rationality else {
            return missing("rationality");
        };

        let automorphism = match (self.weights, self.order) {
            (Some(w), Some(n)) => Some(DiagonalAutomorphism::new(n, w)?),
            (Some(_), None) => return self.fail(line, "`weights` requires `order`"),
            (None, _) => None,
        };
        if automorphism.is_some() && self.eigenvalue.is_none() {
            return missing("eigenvalue");
        }
        if automorphism.is_none() && self.eigenvalue.is_some() {
            return self.fail(line, "`eigenvalue` requires `weights`");
        }
        Ok(FamilyRecord {
            name: self.name,
            order: self.order,
            automorphism,
            eigenvalue_k: self.eigenvalue,
            claimed_dimension: self.dimension,
            symplectic,
            divisor_memberships: self.divisors,
            rank_a_claim: self.rank_a,
            k3_status: K3Status {
                hodge,
                twisted,
                motivic,
            },
            rationality,
            citations: self.citations,
            notes: self.notes,
            line,
        })
    }
}

/// Parses a catalog document.
pub fn load_catalog(source: &str) -> Result<Vec<FamilyRecord>> {
    let mut records: Vec<FamilyRecord> = Vec::new();
    let mut current: Option<Draft> = None;
    let mut names = HashSet::new();

    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if let Some(header) = text.strip_prefix('[') {
            let Some(name) = header
                .strip_suffix(']')
                .and_then(|h| h.strip_prefix("family "))
                .map(str::trim)
                .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace))
            else {
                return Err(Error::Catalog {
                    line,
                    record: String::new(),
                    message: format!("malformed header `{text}`"),
                });
            };
            if let Some(done) = current.take() {
                records.push(done.finish()?);
            }
            if !names.insert(name.to_string()) {
                return Err(Error::Catalog {
                    line,
                    record: name.to_string(),
                    message: "duplicate family name".into(),
                });
            }
            current = Some(Draft {
                name: name.to_string(),
                line,
                ..Draft::default()
            });
            continue;
        }
        let Some(draft) = current.as_mut() else {
            return Err(Error::Catalog {
                line,
                record: String::new(),
                message: "key outside of a [family ...] block".into(),
            });
        };
        let Some((key, value)) = text.split_once('=') else {
            return draft.fail(line, format!("expected `key = value`, got `{text}`"));
        };
        draft.set(line, key.trim(), value.trim())?;
    }
    if let Some(done) = current.take() {
        records.push(done.finish()?);
    }
    Ok(records)
}
