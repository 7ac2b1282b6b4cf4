//! Sweeps of `(n, m, r)` instances comparing every applicable closed form
//! against values computed directly on the graph and code.
//!
//! Each instance yields one [`CheckRecord`]. Checks tied to proven results
//! report `Pass`/`Fail`; the two conjectures report `ConjecturePass`/
//! `ConjectureFail`, which never count as failures. A check whose hypotheses
//! hold but whose computation was cut short by a resource limit is `Skipped`
//! with a reason.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::{
    self, conjecture_ii, lambda_formula, predict, DualSearch, LinearCode, MinDistance,
    UnknownReason,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{edge_count_formula, Extended, GraphInvariants, UnitGraph};
use crate::ring::{is_prime, CaseTag, ParityCase, RingSpec, StructureProfile};

/// Inclusive range `A..B`; empty when `A > B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Span {
    pub start: u64,
    pub end: u64,
}

impl Span {
    pub fn new(start: u64, end: u64) -> Self {
        Self { start, end }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.end
    }

    pub fn is_empty(self) -> bool {
        self.start > self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a range A..B, got `{s}`"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid range bound `{t}` in `{s}`"))
        };
        Ok(Span::new(parse(a)?, parse(b)?))
    }
}

impl From<Span> for String {
    fn from(s: Span) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Span {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: Span,
    pub m: Span,
    pub fields: Vec<u64>,
    /// Largest `r^k` for exhaustive minimum distance.
    pub budget: u64,
    /// Largest column subset tried by the dual distance search.
    pub dual_cap: usize,
    /// Code checks are skipped when `|V|·|E|` exceeds this.
    pub max_matrix_entries: u64,
    /// Worker threads; `Some(1)` runs sequentially. Not part of the report.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub const MAX_MODULUS: u64 = 64;
    pub const MIN_BUDGET: u64 = 1 << 10;

    pub fn new(n: Span, m: Span, fields: Vec<u64>) -> Self {
        Self {
            n,
            m,
            fields,
            budget: code::DEFAULT_BUDGET,
            dual_cap: code::DEFAULT_DUAL_CAP,
            max_matrix_entries: 200_000,
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for span in [self.n, self.m] {
            for bound in [span.start, span.end] {
                if !(2..=Self::MAX_MODULUS).contains(&bound) {
                    return Err(Error::Config(format!(
                        "range {span} leaves [2, {}]",
                        Self::MAX_MODULUS
                    )));
                }
            }
        }
        if let Some(&r) = self.fields.iter().find(|&&r| !is_prime(r)) {
            return Err(Error::NotPrime(r));
        }
        if self.budget < Self::MIN_BUDGET {
            return Err(Error::Config(format!(
                "budget {} is below {}",
                self.budget,
                Self::MIN_BUDGET
            )));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }

    /// Sorted, deduplicated fields.
    fn field_list(&self) -> Vec<u64> {
        let mut f = self.fields.clone();
        f.sort_unstable();
        f.dedup();
        f
    }
}

/// A predicted or observed value in a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Value", try_from = "Value")]
pub enum Quantity {
    Int(u64),
    Bool(bool),
    Infinite,
    AtMost(u64),
    /// Not determined exactly; lies in `[lower, upper]`.
    Range(u64, u64),
    /// Code parameters `[n, k, d]`.
    Params(u64, u64, Box<Quantity>),
}

impl Quantity {
    fn params(p: &code::CodeParams) -> Self {
        Quantity::Params(p.length, p.dimension, Box::new(distance(p.min_distance)))
    }
}

fn distance(d: MinDistance) -> Quantity {
    match d {
        MinDistance::Exact(v) => Quantity::Int(v),
        MinDistance::Unknown {
            reason: UnknownReason::ZeroCode,
            ..
        } => Quantity::Infinite,
        MinDistance::Unknown { lower, upper, .. } => Quantity::Range(lower, upper),
    }
}

fn extended(x: Extended) -> Quantity {
    match x {
        Extended::Finite(v) => Quantity::Int(v),
        Extended::Infinite => Quantity::Infinite,
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Bool(b) => write!(f, "{b}"),
            Quantity::Infinite => f.write_str("Infinite"),
            Quantity::AtMost(v) => write!(f, "<={v}"),
            Quantity::Range(lo, hi) => write!(f, "Unknown({lo}..{hi})"),
            Quantity::Params(n, k, d) => write!(f, "[{n},{k},{d}]"),
        }
    }
}

impl From<Quantity> for Value {
    fn from(q: Quantity) -> Value {
        match q {
            Quantity::Int(v) => Value::from(v),
            Quantity::Bool(b) => Value::Bool(b),
            Quantity::Params(n, k, d) => Value::Array(vec![n.into(), k.into(), Value::from(*d)]),
            other => Value::String(other.to_string()),
        }
    }
}

impl TryFrom<Value> for Quantity {
    type Error = String;

    fn try_from(v: Value) -> std::result::Result<Self, Self::Error> {
        match v {
            Value::Number(n) => n
                .as_u64()
                .map(Quantity::Int)
                .ok_or_else(|| format!("expected a nonnegative integer, got {n}")),
            Value::Bool(b) => Ok(Quantity::Bool(b)),
            Value::String(s) => {
                parse_tagged(&s).ok_or_else(|| format!("unrecognized quantity `{s}`"))
            }
            Value::Array(items) => {
                let [n, k, d]: [Value; 3] = items
                    .try_into()
                    .map_err(|_| "code parameters need three entries".to_string())?;
                let int = |v: &Value| {
                    v.as_u64()
                        .ok_or_else(|| format!("expected an integer, got {v}"))
                };
                Ok(Quantity::Params(
                    int(&n)?,
                    int(&k)?,
                    Box::new(Quantity::try_from(d)?),
                ))
            }
            other => Err(format!("unexpected quantity {other}")),
        }
    }
}

fn parse_tagged(s: &str) -> Option<Quantity> {
    if s == "Infinite" {
        return Some(Quantity::Infinite);
    }
    if let Some(rest) = s.strip_prefix("<=") {
        return rest.parse().ok().map(Quantity::AtMost);
    }
    let inner = s.strip_prefix("Unknown(")?.strip_suffix(')')?;
    let (lo, hi) = inner.split_once("..")?;
    Some(Quantity::Range(lo.parse().ok()?, hi.parse().ok()?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    ConjecturePass,
    ConjectureFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::Skipped => "Skipped",
            Status::ConjecturePass => "ConjecturePass",
            Status::ConjectureFail => "ConjectureFail",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckName {
    EdgeCountFormula,
    BipartiteIffOneEven,
    DisconnectedIfBothEven,
    DiameterBound,
    LambdaFormula,
    LambdaEqualsMinDegree,
    CodeParamsVsPredicted,
    CodeDistanceEqualsLambda,
    DualDimension,
    DualDistanceVsPredicted,
    DualDistanceEqualsGirth,
    ConjectureI,
    ConjectureII,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::EdgeCountFormula => "EdgeCountFormula",
            CheckName::BipartiteIffOneEven => "BipartiteIffOneEven",
            CheckName::DisconnectedIfBothEven => "DisconnectedIfBothEven",
            CheckName::DiameterBound => "DiameterBound",
            CheckName::LambdaFormula => "LambdaFormula",
            CheckName::LambdaEqualsMinDegree => "LambdaEqualsMinDegree",
            CheckName::CodeParamsVsPredicted => "CodeParamsVsPredicted",
            CheckName::CodeDistanceEqualsLambda => "CodeDistanceEqualsLambda",
            CheckName::DualDimension => "DualDimension",
            CheckName::DualDistanceVsPredicted => "DualDistanceVsPredicted",
            CheckName::DualDistanceEqualsGirth => "DualDistanceEqualsGirth",
            CheckName::ConjectureI => "ConjectureI",
            CheckName::ConjectureII => "ConjectureII",
        }
    }

    pub fn is_conjecture(self) -> bool {
        matches!(self, CheckName::ConjectureI | CheckName::ConjectureII)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: CheckName,
    pub predicted: Option<Quantity>,
    pub observed: Option<Quantity>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Check {
    fn compare(name: CheckName, predicted: Quantity, observed: Quantity, ok: bool) -> Self {
        let status = match (name.is_conjecture(), ok) {
            (false, true) => Status::Pass,
            (false, false) => Status::Fail,
            (true, true) => Status::ConjecturePass,
            (true, false) => Status::ConjectureFail,
        };
        Self {
            name,
            predicted: Some(predicted),
            observed: Some(observed),
            status,
            reason: None,
        }
    }

    fn equal(name: CheckName, predicted: Quantity, observed: Quantity) -> Self {
        let ok = predicted == observed;
        Self::compare(name, predicted, observed, ok)
    }

    fn skipped(name: CheckName, predicted: Option<Quantity>, reason: impl Into<String>) -> Self {
        Self {
            name,
            predicted,
            observed: None,
            status: Status::Skipped,
            reason: Some(reason.into()),
        }
    }

    fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    /// A failure of a check tied to a proven result.
    pub fn is_theorem_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    pub case: CaseTag,
    pub checks: Vec<Check>,
}

impl CheckRecord {
    pub fn check(&self, name: CheckName) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub checks: usize,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
    /// Total checks per status.
    pub by_status: BTreeMap<String, usize>,
    /// Per check name, counts per status.
    pub by_check: BTreeMap<String, BTreeMap<String, usize>>,
    /// Records per case tag.
    pub by_case: BTreeMap<String, usize>,
}

impl Summary {
    fn of(records: &[CheckRecord]) -> Self {
        let mut s = Summary {
            records: records.len(),
            ..Summary::default()
        };
        for rec in records {
            *s.by_case.entry(rec.case.to_string()).or_default() += 1;
            for c in &rec.checks {
                s.checks += 1;
                match c.status {
                    Status::Fail => s.theorem_failures += 1,
                    Status::ConjectureFail => s.conjecture_failures += 1,
                    _ => {}
                }
                *s.by_status.entry(c.status.to_string()).or_default() += 1;
                *s.by_check
                    .entry(c.name.to_string())
                    .or_default()
                    .entry(c.status.to_string())
                    .or_default() += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub config: SweepConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn has_theorem_failure(&self) -> bool {
        self.summary.theorem_failures > 0
    }

    /// Every `(record, check)` pair with the given status.
    pub fn with_status(&self, status: Status) -> impl Iterator<Item = (&CheckRecord, &Check)> {
        self.records
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| (r, c)))
            .filter(move |(_, c)| c.status == status)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(format!("invalid report: {e}")))
    }

    /// One row per check: `n,m,r,case,check,predicted,observed,status,reason`.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "n",
            "m",
            "r",
            "case",
            "check",
            "predicted",
            "observed",
            "status",
            "reason",
        ])?;
        let show = |q: &Option<Quantity>| q.as_ref().map(ToString::to_string).unwrap_or_default();
        for rec in &self.records {
            for c in &rec.checks {
                w.write_record([
                    rec.n.to_string(),
                    rec.m.to_string(),
                    rec.r.to_string(),
                    rec.case.to_string(),
                    c.name.to_string(),
                    show(&c.predicted),
                    show(&c.observed),
                    c.status.to_string(),
                    c.reason.clone().unwrap_or_default(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Graph-level data shared by every field of one `(n, m)`.
pub struct Instance {
    pub profile: StructureProfile,
    pub graph: UnitGraph,
    pub invariants: GraphInvariants,
}

impl Instance {
    pub fn new(spec: RingSpec, exec: Exec) -> Self {
        let graph = UnitGraph::build(spec);
        let invariants = graph.invariants_with(exec);
        Self {
            profile: spec.classify(),
            graph,
            invariants,
        }
    }
}

const NO_THEOREM: &str = "no theorem applies";
const DISCONNECTED: &str = "disconnected; no theorem applies";

/// All checks for one instance.
pub fn check_instance(n: u64, m: u64, r: u64, config: &SweepConfig) -> Result<CheckRecord> {
    let spec = RingSpec::new(n, m)?;
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let inst = Instance::new(spec, Exec::default());
    Ok(check_with(&inst, r, config, Exec::default()))
}

/// Checks for `inst` over GF(r); `r` must be prime.
pub fn check_with(inst: &Instance, r: u64, config: &SweepConfig, exec: Exec) -> CheckRecord {
    let mut checks = graph_checks(inst);
    checks.extend(code_checks(inst, r, config, exec));
    let spec = inst.profile.spec;
    CheckRecord {
        n: spec.n(),
        m: spec.m(),
        r,
        case: inst.profile.case_tag,
        checks,
    }
}

fn graph_checks(inst: &Instance) -> Vec<Check> {
    let g = &inst.graph;
    let inv = &inst.invariants;
    let spec = inst.profile.spec;
    let tag = inst.profile.case_tag;
    let parity = spec.parity_case();
    let mut out = vec![Check::equal(
        CheckName::EdgeCountFormula,
        Quantity::Int(edge_count_formula(spec)),
        Quantity::Int(g.edge_count() as u64),
    )];

    if parity == ParityCase::BothEven {
        out.push(Check::equal(
            CheckName::DisconnectedIfBothEven,
            Quantity::Bool(true),
            Quantity::Bool(!inv.connected),
        ));
    } else {
        out.push(Check::equal(
            CheckName::BipartiteIffOneEven,
            Quantity::Bool(parity == ParityCase::ExactlyOneEven),
            Quantity::Bool(inv.bipartite),
        ));
    }

    let bound = match parity {
        ParityCase::BothOdd => Some(2),
        ParityCase::ExactlyOneEven => Some(3),
        ParityCase::BothEven => None,
    };
    let structured = matches!(
        tag,
        CaseTag::PpOddOdd | CaseTag::PpOddTwo | CaseTag::PpppOddOdd | CaseTag::PpppOneEven
    );
    if let (true, Some(b)) = (structured, bound) {
        out.push(Check::compare(
            CheckName::DiameterBound,
            Quantity::AtMost(b),
            extended(inv.diameter),
            inv.diameter.is_at_most(b),
        ));
    }
    if let Some(lambda) = lambda_formula(&inst.profile) {
        out.push(Check::equal(
            CheckName::LambdaFormula,
            Quantity::Int(lambda),
            Quantity::Int(inv.edge_connectivity),
        ));
    }
    let diameter_ok = inv.diameter.is_at_most(2) || (inv.bipartite && inv.diameter.is_at_most(3));
    if inv.connected && diameter_ok {
        out.push(Check::equal(
            CheckName::LambdaEqualsMinDegree,
            Quantity::Int(inv.min_degree as u64),
            Quantity::Int(inv.edge_connectivity),
        ));
    }
    if let Some(b) = bound {
        out.push(Check::compare(
            CheckName::ConjectureI,
            Quantity::AtMost(b),
            extended(inv.diameter),
            inv.diameter.is_at_most(b),
        ));
    }
    out
}

/// Compares code parameters whose distance may only be bounded. `Ok(None)`
/// means the distance is undetermined but consistent.
fn params_match(predicted: &code::CodeParams, observed: &code::CodeParams) -> Option<bool> {
    let d = predicted
        .min_distance
        .exact()
        .expect("predictions are exact");
    if predicted.length != observed.length || predicted.dimension != observed.dimension {
        return Some(false);
    }
    match observed.min_distance {
        MinDistance::Exact(v) => Some(v == d),
        other if other.admits(d) => None,
        _ => Some(false),
    }
}

fn params_check(
    name: CheckName,
    predicted: &code::CodeParams,
    observed: &code::CodeParams,
) -> Check {
    let p = Quantity::params(predicted);
    let o = Quantity::params(observed);
    match params_match(predicted, observed) {
        Some(ok) => Check::compare(name, p, o, ok),
        None if name.is_conjecture() => Check::compare(name, p, o, true)
            .with_reason("budget exceeded; length and dimension match, distance within bounds"),
        None => Check {
            observed: Some(o),
            ..Check::skipped(
                name,
                Some(p),
                "budget exceeded; length and dimension match, distance within bounds",
            )
        },
    }
}

fn code_checks(inst: &Instance, r: u64, config: &SweepConfig, exec: Exec) -> Vec<Check> {
    let g = &inst.graph;
    let inv = &inst.invariants;
    let predicted = predict(&inst.profile, r);
    let conjectured = conjecture_ii(inst.profile.spec, r);

    let entries = g.vertex_count() as u64 * g.edge_count() as u64;
    if entries > config.max_matrix_entries {
        let reason = format!(
            "incidence matrix exceeds {} entries",
            config.max_matrix_entries
        );
        let mut out = vec![
            Check::skipped(
                CheckName::CodeParamsVsPredicted,
                predicted.primal.as_ref().map(Quantity::params),
                &reason,
            ),
            Check::skipped(CheckName::CodeDistanceEqualsLambda, None, &reason),
            Check::skipped(CheckName::DualDimension, None, &reason),
            Check::skipped(CheckName::DualDistanceVsPredicted, None, &reason),
            Check::skipped(CheckName::DualDistanceEqualsGirth, None, &reason),
        ];
        if let Some(c) = conjectured {
            out.push(Check::skipped(
                CheckName::ConjectureII,
                Some(Quantity::params(&c)),
                &reason,
            ));
        }
        return out;
    }

    let code = LinearCode::from_incidence(g, r).expect("field order is prime");
    let source_is_theorem = predicted.source.is_theorem();
    let lambda_applies = inv.connected && (r == 2 || inv.bipartite);
    let girth_applies = inv.connected && (r == 2 || inv.girth.finite().is_some_and(|v| v % 2 == 0));
    let dual_predicted = predicted.dual.filter(|_| source_is_theorem);

    // Exhaustive distance only when some check reads it.
    let primal = OnceCell::new();
    let observed = || {
        primal.get_or_init(|| code::CodeParams {
            length: code.length(),
            dimension: code.dimension(),
            min_distance: code.min_distance_with(config.budget, exec),
        })
    };
    let dual = (girth_applies || dual_predicted.is_some()).then(|| {
        code.dual_search(DualSearch::with_cap(config.dual_cap), exec)
            .distance
    });

    let mut out = Vec::new();
    out.push(match predicted.primal.filter(|_| source_is_theorem) {
        Some(p) => params_check(CheckName::CodeParamsVsPredicted, &p, observed()),
        None if !inv.connected => {
            Check::skipped(CheckName::CodeParamsVsPredicted, None, DISCONNECTED)
        }
        None => Check::skipped(CheckName::CodeParamsVsPredicted, None, NO_THEOREM),
    });

    out.push(if lambda_applies {
        let expected = code::CodeParams::exact(
            g.edge_count() as u64,
            g.vertex_count() as u64 - 1,
            inv.edge_connectivity,
        );
        params_check(CheckName::CodeDistanceEqualsLambda, &expected, observed())
    } else if !inv.connected {
        Check::skipped(CheckName::CodeDistanceEqualsLambda, None, DISCONNECTED)
    } else {
        Check::skipped(
            CheckName::CodeDistanceEqualsLambda,
            None,
            "odd field and non-bipartite graph",
        )
    });

    let expected_dual_dim =
        dual_predicted.map_or(code.length() - code.dimension(), |d| d.dimension);
    let kernel = kernel_dimension(&code);
    out.push(match kernel {
        Some(k) => Check::equal(
            CheckName::DualDimension,
            Quantity::Int(expected_dual_dim),
            Quantity::Int(k),
        ),
        None => Check::compare(
            CheckName::DualDimension,
            Quantity::Int(expected_dual_dim),
            Quantity::Int(code.dual_basis().rows() as u64),
            false,
        )
        .with_reason("kernel vector not annihilated by the generator"),
    });

    out.push(match (dual_predicted, dual) {
        (Some(p), Some(d)) => {
            let want = p.min_distance.exact().expect("predictions are exact");
            distance_check(
                CheckName::DualDistanceVsPredicted,
                Quantity::Int(want),
                d,
                want,
            )
        }
        _ if !inv.connected => {
            Check::skipped(CheckName::DualDistanceVsPredicted, None, DISCONNECTED)
        }
        _ => Check::skipped(CheckName::DualDistanceVsPredicted, None, NO_THEOREM),
    });

    out.push(match (girth_applies, dual) {
        (true, Some(d)) => match inv.girth {
            Extended::Finite(girth) => distance_check(
                CheckName::DualDistanceEqualsGirth,
                Quantity::Int(girth),
                d,
                girth,
            ),
            Extended::Infinite => Check::equal(
                CheckName::DualDistanceEqualsGirth,
                Quantity::Infinite,
                distance(d),
            ),
        },
        _ if !inv.connected => {
            Check::skipped(CheckName::DualDistanceEqualsGirth, None, DISCONNECTED)
        }
        _ => Check::skipped(
            CheckName::DualDistanceEqualsGirth,
            None,
            "odd field and odd girth",
        ),
    });

    if let Some(c) = conjectured {
        out.push(params_check(CheckName::ConjectureII, &c, observed()));
    }
    out
}

fn distance_check(name: CheckName, predicted: Quantity, observed: MinDistance, want: u64) -> Check {
    match observed {
        MinDistance::Exact(_)
        | MinDistance::Unknown {
            reason: UnknownReason::ZeroCode,
            ..
        } => Check::equal(name, predicted, distance(observed)),
        other if other.admits(want) => Check {
            observed: Some(distance(other)),
            ..Check::skipped(
                name,
                Some(predicted),
                format!("dual search stopped: {}", reason_of(other)),
            )
        },
        other => Check::compare(name, predicted, distance(other), false),
    }
}

fn reason_of(d: MinDistance) -> String {
    match d {
        MinDistance::Unknown { reason, .. } => reason.to_string(),
        MinDistance::Exact(_) => String::new(),
    }
}

/// Number of kernel basis vectors, after checking each against the
/// generator's sparse columns; `None` if any vector fails.
fn kernel_dimension(code: &LinearCode) -> Option<u64> {
    let h = code.generator();
    let f = h.field();
    let mut col_rows: Vec<Vec<(usize, u32)>> = vec![Vec::new(); h.cols()];
    for (i, row) in h.row_iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                col_rows[j].push((i, v));
            }
        }
    }
    let basis = code.dual_basis();
    let mut acc = vec![0u32; h.rows()];
    for v in basis.row_iter() {
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        acc.iter_mut().for_each(|a| *a = 0);
        for (j, &x) in v.iter().enumerate() {
            if x != 0 {
                for &(i, hv) in &col_rows[j] {
                    acc[i] = f.add(acc[i], f.mul(hv, x));
                }
            }
        }
        if acc.iter().any(|&a| a != 0) {
            return None;
        }
    }
    Some(basis.rows() as u64)
}

/// Runs every `(n, m, r)` of `config`. Records come out ordered by
/// `(n, m, r)` whatever the parallelism.
pub fn sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let records = match config.jobs {
        Some(1) => sweep_with(config, Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(|| sweep_with(config, Exec::Parallel)),
        _ => sweep_with(config, Exec::default()),
    };
    let summary = Summary::of(&records);
    Ok(Report {
        config: config.clone(),
        records,
        summary,
    })
}

fn sweep_with(config: &SweepConfig, exec: Exec) -> Vec<CheckRecord> {
    let fields = config.field_list();
    let pairs: Vec<(u64, u64)> = config
        .n
        .iter()
        .flat_map(|n| config.m.iter().map(move |m| (n, m)))
        .collect();
    if fields.is_empty() {
        return Vec::new();
    }
    exec.map(&pairs, |&(n, m)| {
        let inst = Instance::new(RingSpec::new(n, m).expect("validated range"), exec);
        fields
            .iter()
            .map(|&r| check_with(&inst, r, config, exec))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}
