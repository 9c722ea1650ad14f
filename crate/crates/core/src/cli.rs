//! Command-line workflows: request types, horizon limits and renderers.
//!
//! [`run`] executes a [`CommandRequest`] and returns the rendered output
//! together with a flag saying whether every internal cross-check passed.
//! Rendering is deterministic: equal requests give equal bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grothendieck::VirtualRep;
use crate::irreps::{enumerate_irreps, IrrepLabel};
use crate::oracles::{count_injections_bruteforce, group_order_report, pieri_oracle_check};
use crate::par;
use crate::partition::partitions_up_to;
use crate::qfunc::QPoly;
use crate::vi::{
    dim_polynomial_irrep, free_module_dim_symbolic, free_module_level, injection_count_formula,
    injection_count_poly, module_level, poly_to_strings, stable_counts, stable_multiplicities,
    StabilityReport, VIModuleSpec,
};

/// Environment variable overriding the input horizons, e.g. `level=8,gen=4,q=7`.
pub const HORIZON_ENV: &str = "VISTAB_HORIZON";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimpolySource {
    Generators(Vec<u32>),
    Label(IrrepLabel),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Decompose { generator: u32, level: u32 },
    Stabilize { generators: Vec<u32> },
    Dimpoly { source: DimpolySource },
    Enumerate { level: u32 },
    Verify { deep: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    pub q: u64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

/// Largest inputs accepted without complaint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Horizon {
    pub max_level: u32,
    pub max_generator: u32,
    pub max_q: u64,
}

impl Default for Horizon {
    fn default() -> Self {
        Self {
            max_level: 6,
            max_generator: 3,
            max_q: 5,
        }
    }
}

impl Horizon {
    pub fn deep() -> Self {
        let base = Self::default();
        Self {
            max_level: 2 * base.max_level,
            ..base
        }
    }

    /// Applies `key=value` overrides (`level`, `gen`, `q`) separated by commas.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("horizon override {item:?} is not key=value")))?;
            let bad = |e: std::num::ParseIntError| Error::Parse(format!("horizon {key}: {e}"));
            match key.trim() {
                "level" => self.max_level = value.trim().parse().map_err(bad)?,
                "gen" => self.max_generator = value.trim().parse().map_err(bad)?,
                "q" => self.max_q = value.trim().parse().map_err(bad)?,
                other => return Err(Error::Parse(format!("unknown horizon key {other:?}"))),
            }
        }
        Ok(self)
    }

    fn check_level(&self, n: u32) -> Result<()> {
        if n > self.max_level {
            return Err(Error::Horizon(format!(
                "level {n} exceeds {} (set {HORIZON_ENV} to override)",
                self.max_level
            )));
        }
        Ok(())
    }

    fn check_generators(&self, gens: &[u32]) -> Result<()> {
        match gens.iter().max() {
            Some(&m) if m > self.max_generator => Err(Error::Horizon(format!(
                "generator degree {m} exceeds {} (set {HORIZON_ENV} to override)",
                self.max_generator
            ))),
            _ => Ok(()),
        }
    }

    fn check_q(&self, q: u64) -> Result<()> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("q must be at least 2, got {q}")));
        }
        if q > self.max_q {
            return Err(Error::Horizon(format!(
                "q = {q} exceeds {} (set {HORIZON_ENV} to override)",
                self.max_q
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub rendered: String,
}

pub fn run(request: &CommandRequest, horizon: &Horizon) -> Result<Outcome> {
    let q = request.q;
    let format = request.format;
    match &request.command {
        Command::Decompose { generator, level } => {
            horizon.check_q(q)?;
            horizon.check_generators(&[*generator])?;
            horizon.check_level(*level)?;
            Ok(decompose(*generator, *level, q).render(format))
        }
        Command::Stabilize { generators } => {
            horizon.check_q(q)?;
            horizon.check_generators(generators)?;
            Ok(stabilize(generators, q)?.render(format))
        }
        Command::Dimpoly { source } => {
            horizon.check_q(q)?;
            match source {
                DimpolySource::Generators(gens) => horizon.check_generators(gens)?,
                DimpolySource::Label(label) => horizon.check_level(label.norm())?,
            }
            Ok(dimpoly(source, q)?.render(format))
        }
        Command::Enumerate { level } => {
            horizon.check_q(q)?;
            horizon.check_level(*level)?;
            Ok(enumerate(*level, q).render(format))
        }
        Command::Verify { deep } => Ok(verify(*deep).render(format)),
    }
}

trait Render: Serialize {
    fn passed(&self) -> bool;
    fn text(&self) -> String;

    fn render(&self, format: Format) -> Outcome {
        let rendered = match format {
            Format::Text => self.text(),
            Format::Json => to_json(self),
        };
        Outcome {
            passed: self.passed(),
            rendered,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

// Fixed-width table: first column left-aligned, the rest right-aligned.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            if i == 0 {
                let _ = write!(out, "{cell:<w$}");
            } else {
                let _ = write!(out, "{cell:>w$}");
            }
        }
        out.trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub q: u64,
    pub generator: u32,
    pub level: u32,
    pub zero_module: bool,
    pub module: VirtualRep,
    pub term_dims: Vec<String>,
    pub total_dim: String,
    pub injection_count: String,
    pub verdict: String,
}

pub fn decompose(generator: u32, level: u32, q: u64) -> DecomposeOutput {
    let module = free_module_level(generator, level, q);
    let dims: Vec<BigInt> = module.terms().keys().map(|l| l.dim_at(q)).collect();
    let total: BigInt = module
        .terms()
        .values()
        .zip(&dims)
        .map(|(m, d)| m * d)
        .sum();
    let expected = injection_count_formula(generator, level, q);
    DecomposeOutput {
        q,
        generator,
        level,
        zero_module: level < generator,
        term_dims: dims.iter().map(BigInt::to_string).collect(),
        total_dim: total.to_string(),
        injection_count: expected.to_string(),
        verdict: verdict(total == expected).into(),
        module,
    }
}

impl Render for DecomposeOutput {
    fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    fn text(&self) -> String {
        let mut out = format!(
            "M({}) at level {} over F_{}\n",
            self.generator, self.level, self.q
        );
        if self.zero_module {
            let _ = writeln!(
                out,
                "zero module: level {} is below the generator degree {}",
                self.level, self.generator
            );
        }
        let rows: Vec<Vec<String>> = self
            .module
            .terms()
            .iter()
            .zip(&self.term_dims)
            .map(|((label, mult), dim)| vec![label.to_string(), mult.to_string(), dim.clone()])
            .collect();
        out.push_str(&table(&["label", "mult", "dim"], &rows));
        let _ = writeln!(out, "total dimension: {}", self.total_dim);
        let _ = writeln!(out, "injection count: {}", self.injection_count);
        out.push_str(&self.verdict);
        out.push('\n');
        out
    }
}

/// A stability report plus the persistence check behind the exit status.
pub struct StabilizeOutput {
    pub report: StabilityReport,
    pub persistent: bool,
}

impl Serialize for StabilizeOutput {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.report.serialize(serializer)
    }
}

pub fn stabilize(generators: &[u32], q: u64) -> Result<StabilizeOutput> {
    let spec = VIModuleSpec::new(generators.to_vec());
    let report = stable_multiplicities(&spec, q)?;
    let levels: Vec<u32> = (report.onset..=report.onset + 5).collect();
    let persistent = par::all(&levels, |&n| {
        stable_counts(&module_level(&spec, n, q)) == report.stable
    });
    Ok(StabilizeOutput { report, persistent })
}

impl Render for StabilizeOutput {
    fn passed(&self) -> bool {
        self.persistent
    }

    fn text(&self) -> String {
        let r = &self.report;
        let spec = VIModuleSpec::new(r.generators.clone());
        let mut out = format!("{spec} over F_{}\n", r.q);
        let _ = writeln!(out, "onset: {}", r.onset);
        let _ = writeln!(out, "weight: {}", r.weight);
        let rows: Vec<Vec<String>> = r
            .stable
            .iter()
            .map(|(label, mult)| vec![label.to_string(), label.norm().to_string(), mult.to_string()])
            .collect();
        out.push_str(&table(&["stable label", "norm", "mult"], &rows));
        let _ = writeln!(out, "P(T) = {}", r.dim_polynomial.display_in("T"));
        let _ = writeln!(
            out,
            "multiplicities constant for n = {}..{}",
            r.onset,
            r.onset + 5
        );
        out.push_str(verdict(self.persistent));
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimpolyRow {
    pub n: u32,
    pub poly_value: String,
    pub direct_dim: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimpolyOutput {
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<IrrepLabel>,
    pub onset: u32,
    pub degree: Option<usize>,
    #[serde(rename = "dim_poly_T")]
    pub dim_poly_t: Vec<String>,
    pub table: Vec<DimpolyRow>,
    pub verdict: String,
}

pub fn dimpoly(source: &DimpolySource, q: u64) -> Result<DimpolyOutput> {
    let (poly, onset, direct): (QPoly, u32, Box<dyn Fn(u32) -> BigInt + Sync + Send>) = match source
    {
        DimpolySource::Generators(gens) => {
            let spec = VIModuleSpec::new(gens.clone());
            let (p, n) = crate::vi::dim_polynomial_module(&spec, q)?;
            (p, n, Box::new(move |level| module_level(&spec, level, q).dim_at(q)))
        }
        DimpolySource::Label(label) => {
            let (p, n) = dim_polynomial_irrep(label, q);
            let label = label.clone();
            (
                p,
                n,
                Box::new(move |level| label.pad(level).expect("level past onset").dim_at(q)),
            )
        }
    };
    let levels: Vec<u32> = (onset..=onset + 5).collect();
    let table = par::map(&levels, |&n| {
        let value = poly.eval_int(&BigInt::from(q).pow(n));
        let dim = direct(n);
        let matches = value == BigRational::from_integer(dim.clone());
        DimpolyRow {
            n,
            poly_value: if value.is_integer() {
                value.to_integer().to_string()
            } else {
                value.to_string()
            },
            direct_dim: dim.to_string(),
            matches,
        }
    });
    let passed = table.iter().all(|r| r.matches);
    let (generators, label) = match source {
        DimpolySource::Generators(g) => {
            let mut g = g.clone();
            g.sort_unstable();
            (Some(g), None)
        }
        DimpolySource::Label(l) => (None, Some(l.clone())),
    };
    Ok(DimpolyOutput {
        q,
        generators,
        label,
        onset,
        degree: poly.degree(),
        dim_poly_t: poly_to_strings(&poly),
        table,
        verdict: verdict(passed).into(),
    })
}

impl Render for DimpolyOutput {
    fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    fn text(&self) -> String {
        let subject = match (&self.generators, &self.label) {
            (Some(g), _) => VIModuleSpec::new(g.clone()).to_string(),
            (_, Some(l)) => format!("phi({l}[n])"),
            _ => String::new(),
        };
        let poly = crate::vi::poly_from_strings(&self.dim_poly_t).expect("own output");
        let mut out = format!("{subject} over F_{}\n", self.q);
        let _ = writeln!(out, "P(T) = {}", poly.display_in("T"));
        let _ = writeln!(out, "onset: {}", self.onset);
        let rows: Vec<Vec<String>> = self
            .table
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.poly_value.clone(),
                    r.direct_dim.clone(),
                    if r.matches { "ok" } else { "MISMATCH" }.to_string(),
                ]
            })
            .collect();
        out.push_str(&table(&["n", "P(q^n)", "dim", "check"], &rows));
        out.push_str(&self.verdict);
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedIrrep {
    pub label: IrrepLabel,
    pub dim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub q: u64,
    pub level: u32,
    pub count: usize,
    pub irreps: Vec<EnumeratedIrrep>,
    pub sum_of_squares: String,
    pub group_order: String,
    pub verdict: String,
}

pub fn enumerate(level: u32, q: u64) -> EnumerateOutput {
    let labels = enumerate_irreps(level, q);
    let dims = par::map(&labels, |l| l.dim_at(q));
    let sum: BigInt = dims.iter().map(|d| d * d).sum();
    let order = crate::qfunc::gl_order(level, &BigInt::from(q));
    EnumerateOutput {
        q,
        level,
        count: labels.len(),
        irreps: labels
            .into_iter()
            .zip(&dims)
            .map(|(label, dim)| EnumeratedIrrep {
                label,
                dim: dim.to_string(),
            })
            .collect(),
        sum_of_squares: sum.to_string(),
        verdict: verdict(sum == order).into(),
        group_order: order.to_string(),
    }
}

impl Render for EnumerateOutput {
    fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    fn text(&self) -> String {
        let mut out = format!(
            "irreducible representations of GL_{}(F_{}): {}\n",
            self.level, self.q, self.count
        );
        let rows: Vec<Vec<String>> = self
            .irreps
            .iter()
            .map(|i| vec![i.label.to_string(), i.dim.clone()])
            .collect();
        out.push_str(&table(&["label", "dim"], &rows));
        let _ = writeln!(out, "sum of squared dimensions: {}", self.sum_of_squares);
        let _ = writeln!(out, "group order: {}", self.group_order);
        out.push_str(&self.verdict);
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub deep: bool,
    pub checks: Vec<CheckResult>,
    pub verdict: String,
}

/// Ranges exercised by `verify`.
#[derive(Debug, Clone, Copy)]
pub struct VerifyPlan {
    pub pieri_size: u32,
    pub pieri_strip: u32,
    pub group_level: u32,
    pub group_q: u64,
    pub matrix_primes: &'static [u64],
    pub matrix_m: u32,
    pub matrix_n: u32,
    pub free_m: u32,
    pub free_n: u32,
    pub symbolic_n: u32,
    pub stability_gen: u32,
    pub stability_summands: usize,
    pub stability_q: &'static [u64],
    pub frobenius_norm: u32,
    pub frobenius_strip: u32,
}

impl VerifyPlan {
    pub fn shipped() -> Self {
        Self {
            pieri_size: 6,
            pieri_strip: 4,
            group_level: 4,
            group_q: 5,
            matrix_primes: &[2, 3],
            matrix_m: 2,
            matrix_n: 4,
            free_m: 3,
            free_n: 6,
            symbolic_n: 6,
            stability_gen: 3,
            stability_summands: 3,
            stability_q: &[2, 3],
            frobenius_norm: 3,
            frobenius_strip: 3,
        }
    }

    pub fn deep() -> Self {
        Self {
            pieri_size: 8,
            pieri_strip: 4,
            group_level: 5,
            group_q: 5,
            matrix_primes: &[2, 3, 5],
            matrix_m: 3,
            matrix_n: 5,
            free_m: 4,
            free_n: 8,
            symbolic_n: 7,
            stability_gen: 4,
            stability_summands: 3,
            stability_q: &[2, 3, 4],
            frobenius_norm: 4,
            frobenius_strip: 4,
        }
    }
}

/// Multisets of generator degrees from `0..=max_gen` with 1 to `summands` elements.
pub fn generator_family(max_gen: u32, summands: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for g in start..=max {
            cur.push(g);
            rec(g, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max_gen, summands, &mut Vec::new(), &mut out);
    out
}

fn check(name: &str, outcomes: Vec<std::result::Result<(), String>>) -> CheckResult {
    let cases = outcomes.len();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    CheckResult {
        name: name.into(),
        cases,
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{cases} cases"),
            Some(first) => format!("{} of {cases} failed; first: {first}", failures.len()),
        },
    }
}

pub fn pieri_cases(plan: &VerifyPlan) -> CheckResult {
    let cases: Vec<_> = partitions_up_to(plan.pieri_size)
        .into_iter()
        .flat_map(|l| (0..=plan.pieri_strip).map(move |r| (l.clone(), r)))
        .collect();
    check(
        "pieri rule vs tableau expansion",
        par::map(&cases, |(lambda, r)| match pieri_oracle_check(lambda, *r) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("s_{lambda} h_{r}")),
            Err(e) => Err(e.to_string()),
        }),
    )
}

pub fn group_order_cases(plan: &VerifyPlan) -> CheckResult {
    let cases: Vec<(u32, u64)> = (2..=plan.group_q)
        .flat_map(|q| (1..=plan.group_level).map(move |n| (n, q)))
        .collect();
    check(
        "sum of squared dimensions = |GL_n(F_q)|",
        cases
            .iter()
            .map(|&(n, q)| {
                let r = group_order_report(n, q);
                if r.passed() {
                    Ok(())
                } else {
                    Err(format!(
                        "n={n} q={q}: {} vs {}",
                        r.sum_of_squares, r.group_order
                    ))
                }
            })
            .collect(),
    )
}

pub fn matrix_cases(plan: &VerifyPlan) -> CheckResult {
    let mut cases: Vec<(u32, u32, u64)> = plan
        .matrix_primes
        .iter()
        .flat_map(|&p| {
            (0..=plan.matrix_m).flat_map(move |m| (0..=plan.matrix_n).map(move |n| (m, n, p)))
        })
        .collect();
    cases.extend([(3, 4, 2), (3, 3, 2)]);
    check(
        "brute-force injection counts",
        cases
            .iter()
            .filter_map(|&(m, n, p)| {
                let count = count_injections_bruteforce(m, n, p).ok()?;
                let formula = injection_count_formula(m, n, p);
                Some(if BigInt::from(count) == formula {
                    Ok(())
                } else {
                    Err(format!("m={m} n={n} p={p}: {count} vs {formula}"))
                })
            })
            .collect(),
    )
}

pub fn free_module_cases(plan: &VerifyPlan) -> CheckResult {
    let mut outcomes = Vec::new();
    for q in [2u64, 3] {
        for m in 0..=plan.free_m {
            for n in m..=plan.free_n {
                let v = free_module_level(m, n, q);
                let expected = injection_count_formula(m, n, q);
                let numeric = v.dim_at(q);
                let symbolic = v.dim_symbolic().map(|p| p.eval_int(&BigInt::from(q)));
                outcomes.push(
                    if numeric == expected
                        && symbolic == Ok(BigRational::from_integer(expected.clone()))
                    {
                        Ok(())
                    } else {
                        Err(format!("m={m} n={n} q={q}: {numeric} vs {expected}"))
                    },
                );
            }
        }
    }
    let pairs: Vec<(u32, u32)> = (0..=plan.free_m)
        .flat_map(|m| (m..=plan.symbolic_n).map(move |n| (m, n)))
        .collect();
    outcomes.extend(par::map(&pairs, |&(m, n)| {
        match free_module_dim_symbolic(m, n) {
            Ok(p) if p == injection_count_poly(m, n) => Ok(()),
            Ok(p) => Err(format!("m={m} n={n}: {p}")),
            Err(e) => Err(e.to_string()),
        }
    }));
    check("free-module dimension identity", outcomes)
}

pub fn stability_cases(plan: &VerifyPlan) -> (CheckResult, CheckResult) {
    let cases: Vec<(Vec<u32>, u64)> = plan
        .stability_q
        .iter()
        .flat_map(|&q| {
            generator_family(plan.stability_gen, plan.stability_summands)
                .into_iter()
                .map(move |g| (g, q))
        })
        .collect();
    let results = par::map(&cases, |(gens, q)| stability_case(gens, *q));
    let (stable, poly): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    (
        check("stable multiplicities persist", stable),
        check("dimension polynomial identity", poly),
    )
}

type CaseResult = std::result::Result<(), String>;

/// Stability and polynomial checks for one module.
pub fn stability_case(gens: &[u32], q: u64) -> (CaseResult, CaseResult) {
    let spec = VIModuleSpec::new(gens.to_vec());
    let report = match stable_multiplicities(&spec, q) {
        Ok(r) => r,
        Err(e) => {
            let msg = format!("{spec} q={q}: {e}");
            return (Err(msg.clone()), Err(msg));
        }
    };
    let mut stable = Ok(());
    if report.weight > spec.max_generator() {
        stable = Err(format!("{spec} q={q}: weight {} too large", report.weight));
    }
    for n in report.onset..=report.onset + 5 {
        if stable_counts(&module_level(&spec, n, q)) != report.stable {
            stable = Err(format!("{spec} q={q}: multiplicities change at n={n}"));
            break;
        }
    }
    let mut poly = Ok(());
    let degree = report.dim_polynomial.degree().unwrap_or(0) as u32;
    if !report.dim_polynomial.is_zero() && degree > report.weight {
        poly = Err(format!("{spec} q={q}: degree {degree} exceeds weight"));
    }
    let onset = report
        .stable
        .keys()
        .map(|l| l.norm() + l.iota_part().first())
        .fold(report.onset, u32::max);
    for n in onset..=onset + 5 {
        let direct = module_level(&spec, n, q).dim_at(q);
        let value = report.dim_polynomial.eval_int(&BigInt::from(q).pow(n));
        if value != BigRational::from_integer(direct) {
            poly = Err(format!("{spec} q={q}: P(q^{n}) differs from dim"));
            break;
        }
    }
    (stable, poly)
}

pub fn frobenius_cases(plan: &VerifyPlan) -> CheckResult {
    let mut outcomes = Vec::new();
    for q in [2u64, 3] {
        let by_norm: Vec<Vec<IrrepLabel>> = (0..=plan.frobenius_norm + plan.frobenius_strip)
            .map(|n| enumerate_irreps(n, q))
            .collect();
        let nus: Vec<&IrrepLabel> = by_norm[..=plan.frobenius_norm as usize]
            .iter()
            .flatten()
            .collect();
        outcomes.extend(par::map(&nus, |nu| {
            let base = nu.norm();
            for r in 0..=plan.frobenius_strip {
                let induced = VirtualRep::irreducible((*nu).clone()).times_trivial(r);
                for mu in &by_norm[(base + r) as usize] {
                    let restricted = VirtualRep::irreducible(mu.clone())
                        .h_invariants(base)
                        .map_err(|e| e.to_string())?;
                    if induced.multiplicity(mu) != restricted.multiplicity(nu) {
                        return Err(format!("nu={nu} mu={mu} q={q}"));
                    }
                }
            }
            Ok(())
        }));
    }
    check("induction/invariants reciprocity", outcomes)
}

pub fn verify(deep: bool) -> VerifyOutput {
    let plan = if deep {
        VerifyPlan::deep()
    } else {
        VerifyPlan::shipped()
    };
    let (stable, poly) = stability_cases(&plan);
    let checks = vec![
        pieri_cases(&plan),
        group_order_cases(&plan),
        matrix_cases(&plan),
        free_module_cases(&plan),
        stable,
        poly,
        frobenius_cases(&plan),
    ];
    let passed = checks.iter().all(|c| c.passed);
    VerifyOutput {
        deep,
        checks,
        verdict: verdict(passed).into(),
    }
}

impl Render for VerifyOutput {
    fn passed(&self) -> bool {
        self.verdict == "PASS"
    }

    fn text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), c.cases.to_string(), verdict(c.passed).to_string()])
            .collect();
        let mut out = table(&["check", "cases", "result"], &rows);
        for c in self.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(out, "{}: {}", c.name, c.detail);
        }
        out.push_str(&self.verdict);
        out.push('\n');
        out
    }
}
