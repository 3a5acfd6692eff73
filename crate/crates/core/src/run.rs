//! End-to-end runs: compute, verify and report, with a content-addressed
//! cache of finished reports.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::catalog::{
    catalog_entry_with, default_max_degree, expected_brackets, expected_integral_presentation_with,
    split_extension_presentation, splitting_series, CatalogEntry, F4Variant,
};
use crate::coeff::Integer;
use crate::envelop::{graded_dimensions, graded_smith_report, pbw_series, simplify_presentation, uea_presentation};
use crate::error::{Error, Result};
use crate::family::LieFamily;
use crate::gca::GradedGenerator;
use crate::lie::{brackets_from_d1, graded_lie_axioms_check};
use crate::nc::{NcPolynomial, RingPresentation};
use crate::quotient::DEFAULT_BUDGET;
use crate::series::PoincareSeries;
use crate::sullivan::{build_minimal_model, derivation_square_check, quotient_dimensions_with, QuotientRoute};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    #[default]
    Rational,
    Integer,
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" | "q" => Ok(Domain::Rational),
            "integer" | "z" => Ok(Domain::Integer),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Rational => "rational",
            Domain::Integer => "integer",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Everything that determines a run. Fields marked `skip` do not change
/// the result and stay out of the cache key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub family: LieFamily,
    pub rank: u32,
    pub coeffs: Domain,
    pub max_degree: u32,
    pub budget: usize,
    pub f4_variant: F4Variant,
    /// Also count H*(G/T;Q) for F4 and E6.
    pub full_cohomology: bool,
    /// Test hook: adjoins a central degree-2 generator t with 2t = 0 to the
    /// integral presentation.
    pub inject_torsion: bool,
    #[serde(skip)]
    pub format: OutputFormat,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(family: LieFamily, rank: u32) -> Result<Self> {
        family.validate_rank(rank)?;
        Ok(Self {
            family,
            rank,
            coeffs: Domain::Rational,
            max_degree: default_max_degree(family),
            budget: DEFAULT_BUDGET,
            f4_variant: F4Variant::default(),
            full_cohomology: false,
            inject_torsion: false,
            format: OutputFormat::default(),
            out: None,
            cache_dir: None,
            verbose: false,
        })
    }

    pub fn with_coeffs(mut self, coeffs: Domain) -> Self {
        self.coeffs = coeffs;
        self
    }

    pub fn with_max_degree(mut self, n: u32) -> Self {
        self.max_degree = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.family.validate_rank(self.rank)
    }

    /// Hex SHA-256 of the result-determining fields.
    pub fn cache_key(&self) -> String {
        let bytes = serde_json::to_vec(&(SCHEMA_VERSION, self)).expect("config serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

/// Outcome of one named check. Serialized as `true`, `false` or `"skipped"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

impl Serialize for CheckOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CheckOutcome::Pass => s.serialize_bool(true),
            CheckOutcome::Fail => s.serialize_bool(false),
            CheckOutcome::Skipped => s.serialize_str("skipped"),
        }
    }
}

impl<'de> Deserialize<'de> for CheckOutcome {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(true) => Ok(CheckOutcome::Pass),
            Raw::Bool(false) => Ok(CheckOutcome::Fail),
            Raw::Text(t) if t == "skipped" => Ok(CheckOutcome::Skipped),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("unknown check outcome `{t}`"))),
        }
    }
}

impl From<bool> for CheckOutcome {
    fn from(b: bool) -> Self {
        if b {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub generators: Vec<GeneratorRecord>,
    pub relations: Vec<String>,
}

impl<C: crate::coeff::Coefficient> From<&RingPresentation<C>> for PresentationRecord {
    fn from(p: &RingPresentation<C>) -> Self {
        Self {
            generators: p.generators().iter().map(|g| GeneratorRecord { name: g.name.clone(), degree: g.degree }).collect(),
            relations: p.relation_strings(),
        }
    }
}

/// Degreewise integral ranks of one presentation against a reference series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub name: String,
    pub ranks: Vec<u64>,
    pub reference: Vec<u64>,
    pub torsion: Vec<Vec<u64>>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub family: LieFamily,
    pub rank: u32,
    pub coeffs: Domain,
    pub max_degree: u32,
    pub generators: Vec<GeneratorRecord>,
    pub relations: Vec<String>,
    pub poincare: Vec<u64>,
    pub ranks: Vec<u64>,
    pub torsion: Vec<Vec<u64>>,
    pub checks: BTreeMap<String, CheckOutcome>,
    /// Checks whose skipping does not block a passing verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub optional_checks: Vec<String>,
    pub expected: PresentationRecord,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<RankTable>,
    pub schema_version: u32,
}

impl Report {
    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, o)| **o == CheckOutcome::Fail).map(|(n, _)| n.as_str()).collect()
    }

    pub fn skipped_mandatory(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(n, o)| **o == CheckOutcome::Skipped && !self.optional_checks.contains(n))
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// 0 all pass, 1 a check failed, 3 a mandatory check ran out of budget.
    pub fn exit_code(&self) -> i32 {
        if !self.failing_checks().is_empty() {
            1
        } else if !self.skipped_mandatory().is_empty() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("family {}  rank {}  coeffs {}  max_degree {}", self.family, self.rank, self.coeffs, self.max_degree));
        push(&mut out, format!("generators {}", render_generators(&self.generators)));
        push(&mut out, "relations".into());
        for r in &self.relations {
            push(&mut out, format!("  {r}"));
        }
        push(&mut out, format!("expected generators {}", render_generators(&self.expected.generators)));
        push(&mut out, "expected relations".into());
        for r in &self.expected.relations {
            push(&mut out, format!("  {r}"));
        }
        push(&mut out, format!("{:>6} {:>8} {:>8}  torsion", "degree", "dim", "rank"));
        for d in 0..self.poincare.len().max(self.ranks.len()) {
            let cell = |v: &[u64]| v.get(d).map(u64::to_string).unwrap_or_else(|| "-".into());
            let torsion = match self.torsion.get(d) {
                Some(t) if !t.is_empty() => t.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join(" "),
                _ => "-".into(),
            };
            push(&mut out, format!("{d:>6} {:>8} {:>8}  {torsion}", cell(&self.poincare), cell(&self.ranks)));
        }
        push(&mut out, "checks".into());
        for (name, o) in &self.checks {
            let label = match o {
                CheckOutcome::Pass => "pass",
                CheckOutcome::Fail => "FAIL",
                CheckOutcome::Skipped => "skipped",
            };
            push(&mut out, format!("  {name:<44} {label}"));
        }
        for t in &self.tables {
            push(&mut out, format!("table {} ({})", t.name, if t.matches { "match" } else { "mismatch" }));
            push(&mut out, format!("  ranks     {}", PoincareSeries::new(t.ranks.clone())));
            push(&mut out, format!("  reference {}", PoincareSeries::new(t.reference.clone())));
            let torsion: Vec<String> = t
                .torsion
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.is_empty())
                .map(|(d, f)| format!("{d}:{}", f.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join("+")))
                .collect();
            push(&mut out, format!("  torsion   {}", if torsion.is_empty() { "none".into() } else { torsion.join(" ") }));
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_text(),
        }
    }

    /// The series alone: dimensions over Q, ranks over Z.
    pub fn render_series(&self, format: OutputFormat) -> String {
        let series = match self.coeffs {
            Domain::Rational => &self.poincare,
            Domain::Integer => &self.ranks,
        };
        match format {
            OutputFormat::Json => {
                let doc = serde_json::json!({
                    "family": self.family,
                    "rank": self.rank,
                    "coeffs": self.coeffs,
                    "max_degree": self.max_degree,
                    "series": series,
                });
                format!("{}\n", serde_json::to_string(&doc).expect("series serializes"))
            }
            OutputFormat::Text => format!("{}\n", PoincareSeries::new(series.clone())),
        }
    }
}

fn render_generators(gens: &[GeneratorRecord]) -> String {
    gens.iter().map(|g| format!("{}({})", g.name, g.degree)).collect::<Vec<_>>().join(" ")
}

#[derive(Default)]
struct Checks {
    map: BTreeMap<String, CheckOutcome>,
    optional: Vec<String>,
}

impl Checks {
    /// Budget overruns become `skipped`; other errors abort the run.
    fn record(&mut self, name: &str, outcome: Result<bool>) -> Result<()> {
        let o = match outcome {
            Ok(b) => b.into(),
            Err(Error::BudgetExceeded { .. }) => CheckOutcome::Skipped,
            Err(e) => return Err(e),
        };
        self.map.insert(name.to_string(), o);
        Ok(())
    }

    fn skip_optional(&mut self, name: &str) {
        self.map.insert(name.to_string(), CheckOutcome::Skipped);
        self.optional.push(name.to_string());
    }
}

struct Timer {
    verbose: bool,
    start: Instant,
}

impl Timer {
    fn new(verbose: bool) -> Self {
        Self { verbose, start: Instant::now() }
    }

    fn lap(&mut self, what: &str) {
        if self.verbose {
            eprintln!("[{:>8.3}s] {what}", self.start.elapsed().as_secs_f64());
        }
    }
}

/// Runs the pipeline for one domain and collects the checks of that domain.
pub fn run_compute(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let entry = catalog_entry_with(cfg.family, cfg.rank, cfg.f4_variant)?;
    let report = match cfg.coeffs {
        Domain::Rational => rational_report(cfg, &entry)?,
        Domain::Integer => integral_report(cfg, &entry)?,
    };
    if let Some(dir) = &cfg.cache_dir {
        store(dir, cfg, &report)?;
    }
    Ok(report)
}

/// Runs both domains; the report carries the checks of both and the
/// presentation of `cfg.coeffs`.
pub fn run_verify(cfg: &RunConfig) -> Result<(Report, i32)> {
    cfg.validate()?;
    let entry = catalog_entry_with(cfg.family, cfg.rank, cfg.f4_variant)?;
    let rational = rational_report(cfg, &entry)?;
    let integral = integral_report(cfg, &entry)?;
    let (mut primary, other) = match cfg.coeffs {
        Domain::Rational => (rational, integral),
        Domain::Integer => (integral, rational),
    };
    primary.checks.extend(other.checks);
    primary.optional_checks.extend(other.optional_checks);
    primary.optional_checks.sort();
    primary.optional_checks.dedup();
    primary.tables.extend(other.tables);
    let code = primary.exit_code();
    Ok((primary, code))
}

/// The cached report for `cfg`, computed and stored on a miss when
/// `compute` is allowed.
pub fn run_report(cfg: &RunConfig, compute: bool) -> Result<Report> {
    cfg.validate()?;
    if let Some(dir) = &cfg.cache_dir {
        if let Some(r) = load(dir, cfg)? {
            return Ok(r);
        }
    }
    if !compute {
        return Err(Error::CacheMiss);
    }
    run_compute(cfg)
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    schema_version: u32,
    key: String,
    report: Report,
}

fn cache_path(dir: &std::path::Path, cfg: &RunConfig) -> PathBuf {
    dir.join(format!("{}.json", cfg.cache_key()))
}

fn store(dir: &std::path::Path, cfg: &RunConfig, report: &Report) -> Result<()> {
    fs::create_dir_all(dir)?;
    let record = CacheRecord { schema_version: SCHEMA_VERSION, key: cfg.cache_key(), report: report.clone() };
    fs::write(cache_path(dir, cfg), serde_json::to_string_pretty(&record)?)?;
    Ok(())
}

fn load(dir: &std::path::Path, cfg: &RunConfig) -> Result<Option<Report>> {
    let path = cache_path(dir, cfg);
    if !path.exists() {
        return Ok(None);
    }
    let record: CacheRecord = serde_json::from_str(&fs::read_to_string(path)?)?;
    if record.schema_version != SCHEMA_VERSION || record.key != cfg.cache_key() {
        return Ok(None);
    }
    Ok(Some(record.report))
}

fn rational_report(cfg: &RunConfig, entry: &CatalogEntry) -> Result<Report> {
    let n = cfg.max_degree;
    let mut timer = Timer::new(cfg.verbose);
    let mut checks = Checks::default();
    let model = build_minimal_model(&entry.cohomology)?;
    checks.record("d_squared_zero", Ok(derivation_square_check(&model)))?;
    let l = brackets_from_d1(&model)?;
    checks.record("graded_lie_axioms", Ok(graded_lie_axioms_check(&l)))?;
    checks.record("brackets_match_expected", Ok(l.bracket_table() == expected_brackets(cfg.family, cfg.rank)?))?;
    timer.lap("homotopy Lie algebra");

    let uea = uea_presentation(&l)?;
    let dims = graded_dimensions(&uea, n, cfg.budget)?;
    let pbw = pbw_series(&l, n);
    checks.record("pbw_equals_dimensions", Ok(dims == pbw))?;
    checks.record("pbw_equals_splitting_series", Ok(pbw == splitting_series(cfg.family, cfg.rank, n)?))?;
    checks.record(
        "expected_presentation_dimensions",
        graded_dimensions(&entry.expected_rational, n, cfg.budget).map(|e| e == dims),
    )?;
    timer.lap("enveloping algebra dimensions");

    let name = "cohomology_total_equals_weyl_order";
    if matches!(cfg.family, LieFamily::F4 | LieFamily::E6) && !cfg.full_cohomology {
        checks.skip_optional(name);
    } else {
        let socle = entry.cohomology.socle_degree().unwrap_or(0);
        let route = match cfg.family {
            LieFamily::F4 | LieFamily::E6 => QuotientRoute::Commutators { budget: cfg.budget },
            _ => QuotientRoute::Direct,
        };
        let total = quotient_dimensions_with(&entry.cohomology, socle + 2, route).map(|s| {
            s.get(socle + 1) == Some(0) && s.get(socle + 2) == Some(0) && s.total() == entry.weyl_order
        });
        checks.record(name, total)?;
        timer.lap("cohomology dimensions");
    }

    let simplified = simplify_presentation(&uea, 2, cfg.budget)?;
    let record = PresentationRecord::from(&simplified);
    timer.lap("simplified presentation");
    Ok(Report {
        family: cfg.family,
        rank: cfg.rank,
        coeffs: Domain::Rational,
        max_degree: n,
        generators: record.generators,
        relations: record.relations,
        poincare: dims.coefficients().to_vec(),
        ranks: dims.coefficients().to_vec(),
        torsion: vec![Vec::new(); n as usize + 1],
        checks: checks.map,
        optional_checks: checks.optional,
        expected: PresentationRecord::from(&entry.expected_rational),
        tables: Vec::new(),
        schema_version: SCHEMA_VERSION,
    })
}

/// Adjoins a central t of degree 2 with 2t = 0.
fn with_injected_torsion(p: &RingPresentation<Integer>) -> Result<RingPresentation<Integer>> {
    let mut gens: Vec<GradedGenerator> = p.generators().as_slice().to_vec();
    gens.push(GradedGenerator::new("t", 2));
    let mut b = crate::nc::PresentationBuilder::<Integer>::new(gens)?;
    let target = b.generators().clone();
    let map: Vec<usize> = (0..p.generators().len()).collect();
    for r in p.relations() {
        b.relation(r.reindex(&target, &map));
    }
    b.relation(NcPolynomial::parse(&target, "2*t")?);
    b.central(&["t".to_string()]);
    b.build()
}

fn rank_table(name: &str, p: &RingPresentation<Integer>, reference: &PoincareSeries, n: u32, budget: usize) -> Result<RankTable> {
    let smith = graded_smith_report(p, n, budget)?;
    let ranks = smith.ranks();
    Ok(RankTable {
        name: name.to_string(),
        matches: ranks == *reference,
        ranks: ranks.coefficients().to_vec(),
        reference: reference.coefficients().to_vec(),
        torsion: smith.entries.iter().map(|e| e.torsion.clone()).collect(),
    })
}

fn integral_report(cfg: &RunConfig, entry: &CatalogEntry) -> Result<Report> {
    let n = cfg.max_degree;
    let mut timer = Timer::new(cfg.verbose);
    let mut checks = Checks::default();
    let mut p = entry.expected_integral.clone();
    if cfg.inject_torsion {
        p = with_injected_torsion(&p)?;
    }
    let smith = graded_smith_report(&p, n, cfg.budget)?;
    timer.lap("integral Smith forms");
    let ranks = smith.ranks();
    let dims = graded_dimensions(&p.to_rational(), n, cfg.budget)?;
    let splitting = splitting_series(cfg.family, cfg.rank, n)?;
    checks.record("torsion_free_check", Ok(smith.torsion_free()))?;
    checks.record("integral_rank_equals_rational_dimension", Ok(ranks == dims))?;
    checks.record("integral_rank_equals_splitting_series", Ok(ranks == splitting))?;
    timer.lap("rational dimensions");

    let mut tables = Vec::new();
    if cfg.family == LieFamily::F4 {
        let mut any = false;
        for (name, variant) in [("f4-commuting", F4Variant::Commuting), ("f4-anticommuting", F4Variant::Anticommuting)] {
            let q = expected_integral_presentation_with(cfg.family, cfg.rank, variant)?;
            let t = rank_table(name, &q, &splitting, n, cfg.budget)?;
            any |= t.matches;
            tables.push(t);
        }
        checks.record("f4_variant_rank_match", Ok(any))?;
        timer.lap("F4 variants");
    }
    if matches!(cfg.family, LieFamily::G2 | LieFamily::F4 | LieFamily::E6) {
        let q = split_extension_presentation(cfg.family, cfg.rank, cfg.f4_variant)?;
        tables.push(rank_table("split-extension", &q, &splitting, n, cfg.budget)?);
        timer.lap("split-extension diagnostic");
    }

    let record = PresentationRecord::from(&p);
    Ok(Report {
        family: cfg.family,
        rank: cfg.rank,
        coeffs: Domain::Integer,
        max_degree: n,
        generators: record.generators,
        relations: record.relations,
        poincare: dims.coefficients().to_vec(),
        ranks: ranks.coefficients().to_vec(),
        torsion: smith.entries.iter().map(|e| e.torsion.clone()).collect(),
        checks: checks.map,
        optional_checks: checks.optional,
        expected: PresentationRecord::from(&entry.expected_integral),
        tables,
        schema_version: SCHEMA_VERSION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su3_rational_report() {
        let cfg = RunConfig::new(LieFamily::Su, 2).unwrap().with_max_degree(6);
        let r = run_compute(&cfg).unwrap();
        assert_eq!(r.poincare, vec![1, 2, 2, 2, 3, 4, 4]);
        assert_eq!(r.exit_code(), 0, "{:?}", r.checks);
        assert_eq!(r.generators[0], GeneratorRecord { name: "a1".into(), degree: 1 });
        assert!(r.generators.iter().all(|g| g.name != "b1"));
    }

    #[test]
    fn check_outcome_round_trip() {
        let m: BTreeMap<String, CheckOutcome> =
            [("a".to_string(), CheckOutcome::Pass), ("b".into(), CheckOutcome::Fail), ("c".into(), CheckOutcome::Skipped)].into();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"a":true,"b":false,"c":"skipped"}"#);
        assert_eq!(serde_json::from_str::<BTreeMap<String, CheckOutcome>>(&s).unwrap(), m);
    }

    #[test]
    fn injected_torsion_fails_only_torsion_check() {
        let mut cfg = RunConfig::new(LieFamily::Su, 2).unwrap().with_coeffs(Domain::Integer).with_max_degree(4);
        cfg.inject_torsion = true;
        let r = run_compute(&cfg).unwrap();
        assert_eq!(r.failing_checks(), vec!["torsion_free_check"]);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn cache_key_ignores_presentation_only_fields() {
        let a = RunConfig::new(LieFamily::G2, 2).unwrap();
        let mut b = a.clone();
        b.format = OutputFormat::Json;
        b.verbose = true;
        assert_eq!(a.cache_key(), b.cache_key());
        assert_ne!(a.cache_key(), a.clone().with_max_degree(8).cache_key());
    }

    #[test]
    fn cached_report_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = RunConfig::new(LieFamily::Sp, 2).unwrap().with_max_degree(5);
        cfg.cache_dir = Some(dir.path().to_path_buf());
        assert!(matches!(run_report(&cfg, false), Err(Error::CacheMiss)));
        let fresh = run_compute(&cfg).unwrap();
        let cached = run_report(&cfg, false).unwrap();
        assert_eq!(fresh.to_json(), cached.to_json());
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reports_are_deterministic(pick in 0usize..5, n in 1u32..=6, integer in any::<bool>()) {
            let (family, rank) = [(LieFamily::Su, 1), (LieFamily::Su, 2), (LieFamily::Sp, 2), (LieFamily::SoEven, 3), (LieFamily::G2, 2)][pick];
            let coeffs = if integer { Domain::Integer } else { Domain::Rational };
            let cfg = RunConfig::new(family, rank).unwrap().with_coeffs(coeffs).with_max_degree(n);
            let a = run_compute(&cfg).unwrap().to_json();
            let b = run_compute(&cfg).unwrap().to_json();
            prop_assert_eq!(&a, &b);
            let parsed: Report = serde_json::from_str(&a).unwrap();
            prop_assert_eq!(parsed.to_json(), a);
        }
    }
}
