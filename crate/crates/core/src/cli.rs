//! Command-line front end.
//!
//! Every command builds one JSON envelope `{command, inputs, result, checks,
//! version}`; `--json` prints it, otherwise a plain rendering of the same
//! data is printed. Output never depends on time or locale.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalog::{self, validate_record, CheckResult, FamilyRecord, CATALOG_ENV};
use crate::cubic::{
    eigen_decomposition, family_dimension, fixed_locus_ambient, fixed_locus_on_x, is_eigenform,
    is_symplectic, ClassifiedLocus, CubicForm, DiagonalAutomorphism, FixedLocusComponent, NVARS,
};
use crate::discriminant::{self, enumerate_hodge_admissible, DiscriminantReport};
use crate::lattice::{transcendental_rank, GramMatrix};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;
pub const EXIT_VALIDATION: i32 = 4;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "cubic-k3",
    version,
    about = "K3 association criteria and diagonal automorphisms of cubic fourfolds"
)]
struct Cli {
    /// Print the structured envelope as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full arithmetic report for one discriminant.
    CheckD { d: u64 },
    /// Discriminants up to a bound satisfying the Hodge-theoretic condition.
    Admissible {
        #[arg(long = "max")]
        max: u64,
    },
    /// Invariant family of a diagonal automorphism.
    AnalyzeAuto {
        #[arg(long)]
        order: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Vec<i64>,
        #[arg(long)]
        eigenvalue: u32,
    },
    /// Fixed locus of a diagonal automorphism on a cubic fourfold.
    FixedLocus {
        /// An expression, or a path to a file containing one.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        order: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Vec<i64>,
    },
    /// Discriminant and definiteness of a Gram matrix.
    Gram {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        entries: Vec<i64>,
        #[arg(long)]
        size: usize,
    },
    /// One catalog record with fresh recomputations.
    Family {
        name: String,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Validate every record of the catalog.
    ValidateCatalog {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

struct Rendered {
    envelope: Value,
    plain: String,
    code: i32,
}

/// Runs the CLI, reading the catalog override from the environment.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with_catalog(args, std::env::var_os(CATALOG_ENV).map(PathBuf::from))
}

/// Runs the CLI with an explicit default catalog path (`None` uses the
/// shipped catalog). A `--file` argument takes precedence.
pub fn run_with_catalog<I, S>(args: I, default_catalog: Option<PathBuf>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let rendered = match dispatch(cli.command, default_catalog) {
        Ok(r) => r,
        Err(out) => return out,
    };
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&rendered.envelope).expect("serializable");
        s.push('\n');
        s
    } else {
        rendered.plain
    };
    Outcome {
        code: rendered.code,
        stdout,
        stderr: String::new(),
    }
}

fn envelope(command: &str, inputs: Value, result: Value, checks: Option<Value>) -> Value {
    let mut env = json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": VERSION,
    });
    if let Some(checks) = checks {
        env["checks"] = checks;
    }
    env
}

fn dispatch(cmd: Command, default_catalog: Option<PathBuf>) -> Result<Rendered, Outcome> {
    match cmd {
        Command::CheckD { d } => {
            if d == 0 {
                return Err(Outcome::usage("error: d must be a positive integer\n"));
            }
            Ok(check_d(d))
        }
        Command::Admissible { max } => Ok(admissible(max)),
        Command::AnalyzeAuto {
            order,
            weights,
            eigenvalue,
        } => {
            let a = automorphism(order, &weights)?;
            if eigenvalue >= order {
                return Err(Outcome::usage(format!(
                    "error: eigenvalue {eigenvalue} is not in [0, {order})\n"
                )));
            }
            Ok(analyze_auto(&a, eigenvalue))
        }
        Command::FixedLocus {
            form,
            order,
            weights,
        } => {
            let a = automorphism(order, &weights)?;
            let text = if Path::new(&form).is_file() {
                std::fs::read_to_string(&form)
                    .map_err(|e| Outcome::usage(format!("error: cannot read {form}: {e}\n")))?
            } else {
                form
            };
            let f = CubicForm::parse(text.trim())
                .map_err(|e| Outcome::usage(format!("error: {e}\n")))?;
            fixed_locus(&f, &a).map_err(|e| Outcome::usage(format!("error: {e}\n")))
        }
        Command::Gram { entries, size } => {
            let m = GramMatrix::from_row_major(entries, size)
                .map_err(|e| Outcome::usage(format!("error: {e}\n")))?;
            Ok(gram(&m))
        }
        Command::Family { name, file } => {
            let records = load(file.or(default_catalog))?;
            match FamilyRecord::find(&records, &name) {
                Some(r) => Ok(family(r)),
                None => {
                    let names: Vec<_> = records.iter().map(|r| r.name.as_str()).collect();
                    Err(Outcome {
                        code: EXIT_NOT_FOUND,
                        stdout: String::new(),
                        stderr: format!(
                            "error: unknown family `{name}`; valid names: {}\n",
                            names.join(", ")
                        ),
                    })
                }
            }
        }
        Command::ValidateCatalog { file } => {
            let records = load(file.or(default_catalog))?;
            Ok(validate_catalog(&records))
        }
    }
}

fn automorphism(order: u32, weights: &[i64]) -> Result<DiagonalAutomorphism, Outcome> {
    if order == 0 {
        return Err(Outcome::usage("error: order must be at least 1\n"));
    }
    if weights.len() != NVARS {
        return Err(Outcome::usage(format!(
            "error: expected 6 weights, got {}\n",
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|&&w| w < 0 || w >= order as i64) {
        return Err(Outcome::usage(format!(
            "error: weight {w} is not a residue in [0, {order})\n"
        )));
    }
    let w: [i64; NVARS] = weights.try_into().expect("length checked");
    DiagonalAutomorphism::new(order, w).map_err(|e| Outcome::usage(format!("error: {e}\n")))
}

fn load(path: Option<PathBuf>) -> Result<Vec<FamilyRecord>, Outcome> {
    let parsed = match path {
        None => catalog::load_catalog(catalog::SHIPPED_CATALOG),
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| {
                Outcome::usage(format!("error: cannot read catalog {}: {e}\n", p.display()))
            })?;
            catalog::load_catalog(&text)
        }
    };
    parsed.map_err(|e| Outcome::usage(format!("error: {e}\n")))
}

// ---- JSON helpers -------------------------------------------------------

fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn report_json(r: &DiscriminantReport) -> Value {
    json!({
        "d": r.d,
        "has_labelling": r.has_labelling,
        "hodge_associated": r.hodge_associated,
        "twisted_witness": r.twisted_witness.map(|w| json!({"f": w.f, "g": w.g, "n": w.n})),
        "fano_hilbert_n": r.fano_hilbert_n,
        "genus": r.genus,
    })
}

fn component_json(c: &FixedLocusComponent) -> Value {
    let mut v = json!({
        "eigen_weight": c.eigen_weight,
        "variables": c.variables,
        "ambient_dim": c.ambient_dim,
    });
    if let Some(locus) = &c.on_x {
        v["on_x"] = match locus {
            ClassifiedLocus::Hypersurface(f) => {
                json!({"kind": locus.kind(), "form": f.to_string()})
            }
            ClassifiedLocus::Points(n) => json!({"kind": locus.kind(), "count": n}),
            _ => json!({"kind": locus.kind()}),
        };
    }
    v
}

fn checks_json(checks: &[CheckResult]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "check": c.check,
                    "passed": c.passed,
                    "claimed": c.claimed,
                    "recomputed": c.recomputed,
                })
            })
            .collect(),
    )
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn component_plain(c: &FixedLocusComponent) -> String {
    let vars: Vec<_> = c.variables.iter().map(|i| format!("x{i}")).collect();
    let mut s = format!(
        "  weight {}: P^{} on {{{}}}",
        c.eigen_weight,
        c.ambient_dim,
        vars.join(",")
    );
    match &c.on_x {
        Some(ClassifiedLocus::Hypersurface(f)) => {
            let _ = write!(s, "  hypersurface {f} = 0");
        }
        Some(ClassifiedLocus::Points(n)) => {
            let _ = write!(s, "  {n} points (with multiplicity)");
        }
        Some(other) => {
            let _ = write!(s, "  {}", other.kind());
        }
        None => {}
    }
    s
}

// ---- commands -----------------------------------------------------------

fn check_d(d: u64) -> Rendered {
    let r = DiscriminantReport::new(d);
    let witness = r.twisted_witness.map_or("-".into(), |w| {
        format!("(f, g, n) = ({}, {}, {})", w.f, w.g, w.n)
    });
    let plain = format!(
        "d                 {}\nhas_labelling     {}\nhodge_associated  {}\ntwisted_witness   {}\nfano_hilbert_n    {}\ngenus             {}\n",
        r.d,
        r.has_labelling,
        r.hodge_associated,
        witness,
        opt(r.fano_hilbert_n),
        opt(r.genus),
    );
    Rendered {
        envelope: envelope("check-d", json!({"d": d}), report_json(&r), None),
        plain,
        code: EXIT_OK,
    }
}

fn admissible(max: u64) -> Rendered {
    let list = enumerate_hodge_admissible(max);
    let plain: String = list.iter().map(|d| format!("{d}\n")).collect();
    Rendered {
        envelope: envelope("admissible", json!({"max": max}), json!(list), None),
        plain,
        code: EXIT_OK,
    }
}

fn analyze_auto(a: &DiagonalAutomorphism, k: u32) -> Rendered {
    let classes: Vec<Value> = eigen_decomposition(a)
        .iter()
        .map(|(w, ms)| json!({"weight": w, "size": ms.len()}))
        .collect();
    let dim = family_dimension(a, k).expect("eigenvalue checked");
    let symp = is_symplectic(a, k);
    let comps = fixed_locus_ambient(a);
    let mut warnings = Vec::new();
    if dim.trivial_action {
        warnings.push("trivial_action");
    }
    if dim.degenerate {
        warnings.push("degenerate_dimension");
    }
    let result = json!({
        "eigen_class_sizes": classes,
        "family_dimension": dim.value,
        "raw_dimension": dim.raw,
        "symplectic": symp,
        "det_weight": a.det_weight(),
        "fixed_locus_ambient": comps.iter().map(component_json).collect::<Vec<_>>(),
        "warnings": warnings,
    });
    let mut plain = String::new();
    let _ = writeln!(plain, "order             {}", a.order());
    let _ = writeln!(plain, "weights           {:?}", a.weights());
    let _ = writeln!(plain, "eigenvalue        {k}");
    let sizes: Vec<_> = eigen_decomposition(a)
        .iter()
        .map(|(w, ms)| format!("{w}:{}", ms.len()))
        .collect();
    let _ = writeln!(plain, "eigen classes     {}", sizes.join(" "));
    let _ = writeln!(plain, "family dimension  {}", dim.value);
    let _ = writeln!(plain, "symplectic        {symp}");
    let _ = writeln!(plain, "fixed locus on P^5");
    for c in &comps {
        let _ = writeln!(plain, "{}", component_plain(c));
    }
    for w in &warnings {
        let _ = writeln!(plain, "warning: {w}");
    }
    Rendered {
        envelope: envelope(
            "analyze-auto",
            json!({"order": a.order(), "weights": a.weights(), "eigenvalue": k}),
            result,
            None,
        ),
        plain,
        code: EXIT_OK,
    }
}

fn fixed_locus(f: &CubicForm, a: &DiagonalAutomorphism) -> Result<Rendered, Error> {
    let k = is_eigenform(f, a)?.ok_or(Error::NotEigenform)?;
    let comps = fixed_locus_on_x(f, a)?;
    let symp = is_symplectic(a, k);
    let result = json!({
        "eigenvalue": k,
        "symplectic": symp,
        "components": comps.iter().map(component_json).collect::<Vec<_>>(),
    });
    let mut plain = format!("eigenvalue        {k}\nsymplectic        {symp}\nfixed locus on X\n");
    for c in &comps {
        let _ = writeln!(plain, "{}", component_plain(c));
    }
    Ok(Rendered {
        envelope: envelope(
            "fixed-locus",
            json!({"form": f.to_string(), "order": a.order(), "weights": a.weights()}),
            result,
            None,
        ),
        plain,
        code: EXIT_OK,
    })
}

fn gram(m: &GramMatrix) -> Rendered {
    let disc = m.discriminant();
    let pd = m.is_positive_definite();
    let plain = format!(
        "size              {}\ndiscriminant      {disc}\npositive_definite {pd}\n",
        m.size()
    );
    Rendered {
        envelope: envelope(
            "gram",
            json!({"size": m.size(), "entries": m.rows()}),
            json!({"discriminant": big(&disc), "positive_definite": pd}),
            None,
        ),
        plain,
        code: EXIT_OK,
    }
}

fn record_json(r: &FamilyRecord) -> Value {
    json!({
        "name": r.name,
        "order": r.order,
        "weights": r.automorphism.map(|a| a.weights()),
        "eigenvalue": r.eigenvalue_k,
        "claimed_dimension": r.claimed_dimension,
        "symplectic": r.symplectic,
        "divisors": r.divisor_memberships,
        "rank_A": r.rank_a_claim.map(|c| c.render()),
        "hodge": r.k3_status.hodge.as_str(),
        "twisted": r.k3_status.twisted.as_str(),
        "motivic": r.k3_status.motivic.as_str(),
        "rationality": r.rationality.as_str(),
        "citations": r.citations,
        "notes": r.notes,
    })
}

fn family(r: &FamilyRecord) -> Rendered {
    let checks = validate_record(r);
    let failed = checks.iter().filter(|c| !c.passed).count();

    let mut recomputed = json!({});
    if let (Some(a), Some(k)) = (r.automorphism, r.eigenvalue_k) {
        if let Ok(dim) = family_dimension(&a, k) {
            recomputed["family_dimension"] = json!(dim.value);
            recomputed["symplectic"] = json!(is_symplectic(&a, k));
            recomputed["fixed_locus_ambient"] = json!(fixed_locus_ambient(&a)
                .iter()
                .map(component_json)
                .collect::<Vec<_>>());
        }
    }
    recomputed["divisors"] = json!(r
        .divisor_memberships
        .iter()
        .map(|&d| report_json(&DiscriminantReport::new(d)))
        .collect::<Vec<_>>());
    if let Some(rank) = r.rank_a_claim.map(|c| c.effective()) {
        if let Ok(c) = discriminant::classify_by_rank(rank as i64) {
            recomputed["rank_verdict"] = json!(c.verdict.as_str());
        }
        if let Ok(t) = transcendental_rank(rank as i64) {
            recomputed["transcendental_rank"] = json!(t);
        }
    }

    let mut plain = String::new();
    let _ = writeln!(plain, "family            {}", r.name);
    if let Some(a) = r.automorphism {
        let _ = writeln!(
            plain,
            "automorphism      order {} weights {:?}",
            a.order(),
            a.weights()
        );
    } else if let Some(n) = r.order {
        let _ = writeln!(plain, "symmetry order    {n}");
    }
    let _ = writeln!(plain, "eigenvalue        {}", opt(r.eigenvalue_k));
    let _ = writeln!(
        plain,
        "dimension         claimed {} recomputed {}",
        opt(r.claimed_dimension),
        recomputed
            .get("family_dimension")
            .map_or("-".into(), |v| v.to_string())
    );
    let _ = writeln!(plain, "symplectic        {}", r.symplectic);
    let ds: Vec<_> = r.divisor_memberships.iter().map(u64::to_string).collect();
    let _ = writeln!(
        plain,
        "divisors          {}",
        if ds.is_empty() {
            "-".into()
        } else {
            ds.join(",")
        }
    );
    let _ = writeln!(
        plain,
        "rank A(X)         {}",
        opt(r.rank_a_claim.map(|c| c.render()))
    );
    let _ = writeln!(
        plain,
        "k3 association    hodge {} twisted {} motivic {}",
        r.k3_status.hodge.as_str(),
        r.k3_status.twisted.as_str(),
        r.k3_status.motivic.as_str()
    );
    let _ = writeln!(plain, "rationality       {}", r.rationality.as_str());
    for c in &r.citations {
        let _ = writeln!(plain, "cite              {c}");
    }
    for n in &r.notes {
        let _ = writeln!(plain, "note              {n}");
    }
    for c in &checks {
        let _ = writeln!(
            plain,
            "check {:<28} {}  claimed {} recomputed {}",
            c.check,
            if c.passed { "pass" } else { "FAIL" },
            c.claimed,
            c.recomputed
        );
    }
    Rendered {
        envelope: envelope(
            "family",
            json!({"name": r.name}),
            json!({"record": record_json(r), "recomputed": recomputed}),
            Some(checks_json(&checks)),
        ),
        plain,
        code: if failed == 0 {
            EXIT_OK
        } else {
            EXIT_VALIDATION
        },
    }
}

fn validate_catalog(records: &[FamilyRecord]) -> Rendered {
    let mut all = Vec::new();
    let mut plain = String::new();
    let mut failures = 0;
    for r in records {
        let checks = validate_record(r);
        let failed = checks.iter().filter(|c| !c.passed).count();
        failures += failed;
        let _ = writeln!(
            plain,
            "{:<10} {:>2} checks  {}",
            r.name,
            checks.len(),
            if failed == 0 {
                "pass".to_string()
            } else {
                format!("{failed} FAILED")
            }
        );
        for c in checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(
                plain,
                "  FAIL {}: claimed {} recomputed {}",
                c.check, c.claimed, c.recomputed
            );
        }
        all.push(json!({"name": r.name, "checks": checks_json(&checks)}));
    }
    let _ = writeln!(plain, "{} records, {failures} failed checks", records.len());
    Rendered {
        envelope: envelope(
            "validate-catalog",
            json!({}),
            json!({"records": records.len(), "failed_checks": failures}),
            Some(Value::Array(all)),
        ),
        plain,
        code: if failures == 0 {
            EXIT_OK
        } else {
            EXIT_VALIDATION
        },
    }
}
