use rscount_core::charclass::{char_number, char_number_polynomial, CompleteIntersection};
use rscount_core::rsbounds::{
    calabi_yau_table, cy_hypersurface_bound_closed_form, cy_hypersurface_char_number_closed_form,
    exceeds_torus, find_degree_exceeding, parallel_spinor_table, product_bound, rs_lower_bound,
    torus_rs_dimension, BoundError, RsBoundReport,
};
use rscount_core::{BigInt, MultiPoly, Rational};
use serde::Serialize;

use crate::args::{ManifoldArgs, ProductArgs, SearchArgs, Suite, TableArgs, TableName, VerifyArgs};
use crate::output::{Report, Table};

/// Why a command produced no document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Malformed or out-of-range arguments (exit 1).
    Usage(String),
    /// Valid input the bound does not apply to (exit 2).
    Inapplicable(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Inapplicable(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Inapplicable(m) => m,
        }
    }
}

fn manifold(args: &ManifoldArgs) -> Result<CompleteIntersection, Failure> {
    CompleteIntersection::new(args.complex_dim as usize, args.degrees.clone())
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn bound_failure(e: BoundError) -> Failure {
    match e {
        BoundError::NotSpin { .. } | BoundError::Fano | BoundError::DimensionTooSmall { .. } => {
            Failure::Inapplicable(e.to_string())
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn join_degrees(ds: &[u64]) -> String {
    ds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComputeResult {
    pub m: usize,
    pub degrees: Vec<u64>,
    pub n: usize,
    pub spin: bool,
    pub curvature: String,
    pub charnum: String,
    pub a_hat_genus: String,
    pub rs_index_plus: String,
    pub deduction: String,
    pub bound_plus: String,
    pub bound_minus: String,
    pub bound_total: String,
    pub bound_kind: &'static str,
}

impl From<&RsBoundReport> for ComputeResult {
    fn from(r: &RsBoundReport) -> Self {
        ComputeResult {
            m: r.ci.complex_dim(),
            degrees: r.ci.degrees().to_vec(),
            n: r.n,
            spin: r.spin,
            curvature: r.curvature.to_string(),
            charnum: r.charnum.to_string(),
            a_hat_genus: r.a_hat_genus.to_string(),
            rs_index_plus: r.rs_index_plus.to_string(),
            deduction: r.parallel_spinor_deduction.to_string(),
            bound_plus: r.bound_plus.to_string(),
            bound_minus: r.bound_minus.to_string(),
            bound_total: r.bound_total.to_string(),
            bound_kind: "lower",
        }
    }
}

impl ComputeResult {
    fn pairs(&self) -> Vec<(&'static str, String)> {
        vec![
            ("m", self.m.to_string()),
            ("degrees", join_degrees(&self.degrees)),
            ("n", self.n.to_string()),
            ("spin", self.spin.to_string()),
            ("curvature", self.curvature.clone()),
            ("charnum", self.charnum.clone()),
            ("aHatGenus", self.a_hat_genus.clone()),
            ("rsIndexPlus", self.rs_index_plus.clone()),
            ("deduction", self.deduction.clone()),
            ("boundPlus", self.bound_plus.clone()),
            ("boundMinus", self.bound_minus.clone()),
            ("boundTotal", self.bound_total.clone()),
            ("boundKind", self.bound_kind.to_string()),
        ]
    }
}

impl Report for ComputeResult {
    fn table(&self) -> Table {
        Table::key_value(self.pairs())
    }
}

pub fn compute(args: &ManifoldArgs) -> Result<ComputeResult, Failure> {
    let ci = manifold(args)?;
    let report = rs_lower_bound(&ci).map_err(bound_failure)?;
    Ok(ComputeResult::from(&report))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParallelSpinorRow {
    pub n: u64,
    pub max_parallel_spinors: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CalabiYauRow {
    pub m: usize,
    pub rs_bound: String,
    pub torus_rs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "table", content = "rows", rename_all = "kebab-case")]
pub enum TableResult {
    ParallelSpinors(Vec<ParallelSpinorRow>),
    CalabiYau(Vec<CalabiYauRow>),
}

impl Report for TableResult {
    fn table(&self) -> Table {
        match self {
            TableResult::ParallelSpinors(rows) => {
                let mut t = Table::new(&["n", "maxParallelSpinors"]);
                for r in rows {
                    t.push(vec![r.n.to_string(), r.max_parallel_spinors.clone()]);
                }
                t
            }
            TableResult::CalabiYau(rows) => {
                let mut t = Table::new(&["m", "rsBound", "torusRs"]);
                for r in rows {
                    t.push(vec![r.m.to_string(), r.rs_bound.clone(), r.torus_rs.clone()]);
                }
                t
            }
        }
    }
}

pub fn table(args: &TableArgs) -> Result<TableResult, Failure> {
    match args.name {
        TableName::ParallelSpinors => {
            let max_n = args.max_n.unwrap_or(28);
            if max_n == 0 {
                return Err(Failure::Usage("--max-n must be at least 1".into()));
            }
            let rows = parallel_spinor_table(max_n).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(TableResult::ParallelSpinors(
                rows.into_iter()
                    .map(|r| ParallelSpinorRow {
                        n: r.n,
                        max_parallel_spinors: r.max_parallel_spinors.to_string(),
                    })
                    .collect(),
            ))
        }
        TableName::CalabiYau => {
            let max_m = args.max_m.unwrap_or(30);
            if max_m < 2 || max_m % 2 == 1 {
                return Err(Failure::Usage("--max-m must be even and at least 2".into()));
            }
            let rows = calabi_yau_table(max_m).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(TableResult::CalabiYau(
                rows.into_iter()
                    .map(|r| CalabiYauRow {
                        m: r.m,
                        rs_bound: r.rs_bound.to_string(),
                        torus_rs: r.torus_rs.to_string(),
                    })
                    .collect(),
            ))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyResult {
    pub suite: &'static str,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

impl Report for VerifyResult {
    fn table(&self) -> Table {
        let mut t = Table::new(&["check", "passed", "detail"]);
        for c in &self.checks {
            t.push(vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]);
        }
        t
    }
}

const MAX_POLY_M: usize = 16;
const MAX_POLY_R: usize = 4;
const MAX_RANGE_M: usize = 200;

/// `2^{-m} (2m + 3 - 3^{m+1}) / (m+1)!`
pub fn expected_leading_coefficient(m: usize) -> Rational {
    let fact: BigInt = (1..=(m as u64 + 1)).map(BigInt::from).product();
    let num = BigInt::from(2 * m as u64 + 3) - num_pow(3, m as u32 + 1);
    Rational::new(num, fact * num_pow(2, m as u32)).expect("nonzero denominator")
}

fn num_pow(base: u64, e: u32) -> BigInt {
    (0..e).fold(BigInt::from(1), |acc, _| acc * base)
}

fn polynomial(m: usize, r: usize) -> Result<MultiPoly, Failure> {
    char_number_polynomial(m, r).map_err(|e| Failure::Usage(e.to_string()))
}

fn verify_hypersurface_poly(m: usize) -> Result<Vec<Check>, Failure> {
    if m == 0 || m > MAX_POLY_M {
        return Err(Failure::Usage(format!("--m must lie in 1..={MAX_POLY_M}")));
    }
    let p = polynomial(m, 1)?;
    if m % 2 == 1 {
        return Ok(vec![Check::new("vanishes", p.is_zero(), "identically zero (odd m)")]);
    }
    let degree = p.total_degree();
    let lead = p.coefficient(&[m as u32 + 1]);
    let expected = expected_leading_coefficient(m);
    Ok(vec![
        Check::new("degree", degree == m as i64 + 1, format!("degree {degree}, expected {}", m + 1)),
        Check::new(
            "leading-coefficient",
            lead == expected,
            format!("leading coefficient {lead}, expected {expected}"),
        ),
        Check::new("polynomial", !p.is_zero(), p.to_string()),
    ])
}

fn verify_symmetric_poly(m: usize, r: usize) -> Result<Vec<Check>, Failure> {
    if m == 0 || m > MAX_POLY_M {
        return Err(Failure::Usage(format!("--m must lie in 1..={MAX_POLY_M}")));
    }
    if r == 0 || r > MAX_POLY_R {
        return Err(Failure::Usage(format!("--r must lie in 1..={MAX_POLY_R}")));
    }
    let p = polynomial(m, r)?;
    if m % 2 == 1 {
        return Ok(vec![Check::new("vanishes", p.is_zero(), "identically zero (odd m)")]);
    }
    let hyper = polynomial(m, 1)?;
    let specialized = p.fix_trailing(1, &Rational::one()).map_err(|e| Failure::Usage(e.to_string()))?;
    // each a_j appears to power at most m+1; the product prefactor lifts the
    // total degree to m+r
    let degree = p.max_variable_degree();
    let reached = (0..r).all(|j| p.degree_in(j) == Ok(m as i64 + 1));
    Ok(vec![
        Check::new("symmetric", p.is_symmetric(), format!("{} terms", p.len())),
        Check::new(
            "degree",
            degree == m as i64 + 1 && reached,
            format!("degree {degree} in each variable, expected {}; total degree {}", m + 1, p.total_degree()),
        ),
        Check::new(
            "specialization",
            specialized == hyper,
            format!("value on (a1, 1, ..., 1) is {specialized}"),
        ),
    ])
}

fn require_range(max_m: usize) -> Result<(), Failure> {
    if max_m < 2 || max_m % 2 == 1 || max_m > MAX_RANGE_M {
        return Err(Failure::Usage(format!("--max-m must be even and in 2..={MAX_RANGE_M}")));
    }
    Ok(())
}

fn verify_closed_form(max_m: usize) -> Result<Vec<Check>, Failure> {
    require_range(max_m)?;
    let mut checks = Vec::new();
    for m in (2..=max_m).step_by(2) {
        let ci = CompleteIntersection::hypersurface(m, m as u64 + 2).expect("valid input");
        let series = char_number(&ci).map_err(|e| Failure::Usage(e.to_string()))?;
        let closed = cy_hypersurface_char_number_closed_form(m).map_err(bound_failure)?;
        let bound = rs_lower_bound(&ci).map_err(bound_failure)?.bound_total;
        let closed_bound = cy_hypersurface_bound_closed_form(m).map_err(bound_failure)?;
        checks.push(Check::new(
            format!("m={m}"),
            series == closed && bound == closed_bound,
            format!("charnum {series} vs {closed}, bound {bound} vs {closed_bound}"),
        ));
    }
    Ok(checks)
}

fn verify_torus_inequality(max_m: usize) -> Result<Vec<Check>, Failure> {
    require_range(max_m)?;
    (2..=max_m)
        .step_by(2)
        .map(|m| {
            let bound = cy_hypersurface_bound_closed_form(m).map_err(bound_failure)?;
            let torus = torus_rs_dimension(2 * m as u64).map_err(bound_failure)?;
            let passed = exceeds_torus(m).map_err(bound_failure)?;
            Ok(Check::new(format!("m={m}"), passed, format!("{bound} > {torus}")))
        })
        .collect()
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyResult, Failure> {
    let (suite, checks) = match args.suite {
        Suite::HypersurfacePoly => ("hypersurface-poly", verify_hypersurface_poly(args.m)?),
        Suite::SymmetricPoly => ("symmetric-poly", verify_symmetric_poly(args.m, args.r)?),
        Suite::ClosedForm => ("closed-form", verify_closed_form(args.max_m)?),
        Suite::TorusInequality => ("torus-inequality", verify_torus_inequality(args.max_m)?),
    };
    let all_passed = checks.iter().all(|c| c.passed);
    Ok(VerifyResult { suite, checks, all_passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub m: usize,
    pub threshold: String,
    pub degree: u64,
    pub charnum: String,
    pub report: ComputeResult,
}

impl Report for SearchResult {
    fn table(&self) -> Table {
        let mut pairs = vec![("threshold", self.threshold.clone()), ("degree", self.degree.to_string())];
        pairs.extend(self.report.pairs());
        Table::key_value(pairs)
    }
}

pub fn search(args: &SearchArgs) -> Result<SearchResult, Failure> {
    let m = args.complex_dim;
    if m < 2 || m % 2 == 1 {
        return Err(Failure::Usage(format!("--complex-dim must be even and at least 2, got {m}")));
    }
    let threshold: BigInt = args
        .threshold
        .parse()
        .map_err(|_| Failure::Usage(format!("invalid threshold {:?}", args.threshold)))?;
    if threshold < BigInt::from(1) {
        return Err(Failure::Usage("--threshold must be at least 1".into()));
    }
    let degree = find_degree_exceeding(m, &threshold).map_err(|e| Failure::Usage(e.to_string()))?;
    let ci = CompleteIntersection::hypersurface(m, degree).expect("valid input");
    let report = rs_lower_bound(&ci).map_err(bound_failure)?;
    Ok(SearchResult {
        m,
        threshold: threshold.to_string(),
        degree,
        charnum: report.charnum.to_string(),
        report: ComputeResult::from(&report),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProductResult {
    pub base: ComputeResult,
    pub torus_dim: u64,
    pub torus_parallel_spinors: String,
    pub product_bound: String,
    pub total_real_dimension: u64,
}

impl Report for ProductResult {
    fn table(&self) -> Table {
        let mut pairs = self.base.pairs();
        pairs.extend([
            ("torusDim", self.torus_dim.to_string()),
            ("torusParallelSpinors", self.torus_parallel_spinors.clone()),
            ("productBound", self.product_bound.clone()),
            ("totalRealDimension", self.total_real_dimension.to_string()),
        ]);
        Table::key_value(pairs)
    }
}

pub fn product(args: &ProductArgs) -> Result<ProductResult, Failure> {
    let ci = manifold(&args.manifold)?;
    let report = rs_lower_bound(&ci).map_err(bound_failure)?;
    let k = args.torus_dim;
    Ok(ProductResult {
        torus_dim: k,
        torus_parallel_spinors: rscount_core::rsbounds::torus_parallel_spinors(k).to_string(),
        product_bound: product_bound(&report.bound_total, k).to_string(),
        total_real_dimension: report.n as u64 + k,
        base: ComputeResult::from(&report),
    })
}
