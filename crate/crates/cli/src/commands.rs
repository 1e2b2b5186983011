//! One handler per subcommand. Each returns the JSON payload, its tabular
//! view for the CSV/Markdown formats, and any warnings to surface in the
//! envelope.

use std::path::Path;

use detquartic::{
    acm_line_class, chi_line, classify_candidate, cohomology_line, curve_invariants, effectivity,
    full_classification, generate_table_a, intersect, is_globally_generated, is_initialized_line,
    parity_class, replay_trace, self_intersection, AcmLineClass, CandidateList, CandidateVerdict,
    Classification, CohomologyTriple, CurveInvariants, DeductionStep, DivisorClass,
    EffectivityStatus, GramLattice, HilbertFunction, Outcome, ParityReport, ReplayReport, Warning,
};
use serde::Serialize;
use serde_json::Value;

use crate::envelope::Table;
use crate::error::CliError;

pub struct Output {
    pub payload: Value,
    pub table: Table,
    pub warnings: Vec<Warning>,
}

fn output<P: Serialize>(payload: &P, table: Table, warnings: Vec<Warning>) -> Output {
    Output {
        payload: serde_json::to_value(payload).expect("payload serializes"),
        table,
        warnings,
    }
}

/// The classification subcommands are only proved on the default profile.
fn require_default(lattice: &GramLattice) -> Result<(), CliError> {
    if lattice.is_determinantal_quartic() {
        Ok(())
    } else {
        Err(CliError::Domain(detquartic::Error::UnsupportedLattice))
    }
}

#[derive(Serialize)]
struct IntersectPayload {
    left: DivisorClass,
    right: DivisorClass,
    value: i64,
}

pub fn intersect_cmd(lattice: &GramLattice, left: DivisorClass, right: DivisorClass) -> Output {
    let value = intersect(left, right, lattice);
    let payload = IntersectPayload { left, right, value };
    let mut table = Table::new(vec!["left", "right", "value"]);
    table.push_row(vec![left.to_string(), right.to_string(), value.to_string()]);
    output(&payload, table, vec![])
}

#[derive(Serialize)]
struct ChiLinePayload {
    class: DivisorClass,
    d_squared: i64,
    chi: i64,
}

pub fn chi_line_cmd(lattice: &GramLattice, class: DivisorClass) -> Output {
    let payload = ChiLinePayload {
        class,
        d_squared: self_intersection(class, lattice),
        chi: chi_line(class, lattice),
    };
    let mut table = Table::new(vec!["class", "d_squared", "chi"]);
    table.push_row(vec![
        class.to_string(),
        payload.d_squared.to_string(),
        payload.chi.to_string(),
    ]);
    output(&payload, table, vec![])
}

#[derive(Serialize)]
struct LineReportPayload {
    class: DivisorClass,
    effectivity: EffectivityStatus,
    chi: i64,
    cohomology: CohomologyTriple,
    parity: ParityReport,
    initialized: bool,
    globally_generated: bool,
    acm: AcmLineClass,
    curve: Option<CurveInvariants>,
}

pub fn line_report_cmd(lattice: &GramLattice, class: DivisorClass) -> Result<Output, CliError> {
    require_default(lattice)?;
    let status = effectivity(class, lattice)?;
    let curve = match curve_invariants(class, lattice) {
        Ok(c) => Some(c),
        Err(detquartic::Error::NotEffective(_)) | Err(detquartic::Error::ZeroClass) => None,
        Err(e) => return Err(CliError::Domain(e)),
    };
    let payload = LineReportPayload {
        class,
        effectivity: status,
        chi: chi_line(class, lattice),
        cohomology: cohomology_line(class, lattice)?,
        parity: parity_class(class, lattice)?,
        initialized: is_initialized_line(class, lattice)?,
        globally_generated: is_globally_generated(class, lattice)?,
        acm: acm_line_class(class, lattice)?,
        curve,
    };
    let mut table = Table::new(vec![
        "class",
        "effectivity",
        "d_squared",
        "dh",
        "h0",
        "h1",
        "h2",
        "chi",
        "parity",
        "initialized",
        "globally_generated",
        "acm",
        "curve_degree",
        "curve_genus",
    ]);
    table.push_row(vec![
        class.to_string(),
        format!("{}", payload.effectivity.kind),
        payload.effectivity.d_squared.to_string(),
        payload.effectivity.dh.to_string(),
        payload.cohomology.h0.to_string(),
        payload.cohomology.h1.to_string(),
        payload.cohomology.h2.to_string(),
        payload.chi.to_string(),
        json_token(&payload.parity.class),
        payload.initialized.to_string(),
        payload.globally_generated.to_string(),
        acm_label(&payload.acm),
        payload.curve.map(|c| c.degree.to_string()).unwrap_or_default(),
        payload.curve.map(|c| c.arithmetic_genus.to_string()).unwrap_or_default(),
    ]);
    Ok(output(&payload, table, vec![]))
}

/// Serde token of a unit-ish enum value, so table cells match the JSON
/// payload exactly.
fn json_token<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value).expect("token serializes") {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

fn acm_label(acm: &AcmLineClass) -> String {
    match acm {
        AcmLineClass::Matched { case } => json_token(case),
        other => json_token(&serde_json::to_value(other).unwrap()["kind"].clone()),
    }
}

fn candidate_table(list: &CandidateList) -> Table {
    let mut table = Table::new(vec!["x", "y", "label"]);
    for class in &list.classes {
        table.push_row(vec![class.x.to_string(), class.y.to_string(), class.to_string()]);
    }
    table
}

pub fn acm_lines_cmd(lattice: &GramLattice, scan_box: i64) -> Result<Output, CliError> {
    let list = detquartic::enumerate_initialized_acm_lines(scan_box, lattice)?;
    let table = candidate_table(&list);
    Ok(output(&list, table, vec![]))
}

pub fn candidates_cmd(
    lattice: &GramLattice,
    effective_branch: bool,
    scan_box: i64,
) -> Result<Output, CliError> {
    let list = if effective_branch {
        detquartic::enumerate_c1_effective(scan_box, lattice)?
    } else {
        detquartic::enumerate_c1_noneffective(scan_box, lattice)?
    };
    let table = candidate_table(&list);
    Ok(output(&list, table, vec![]))
}

pub fn table_a_cmd(lattice: &GramLattice) -> Result<Output, CliError> {
    require_default(lattice)?;
    let table_a = generate_table_a();
    let mut table = Table::new(vec!["c1", "d", "residual", "residual_effective"]);
    for row in &table_a.rows {
        table.push_row(vec![
            row.c1.to_string(),
            row.d.to_string(),
            row.residual.to_string(),
            if row.residual_effective { "y".into() } else { "n".to_string() },
        ]);
    }
    let warnings = table_a.deviations.clone();
    Ok(output(&table_a, table, warnings))
}

fn verdict_row(table: &mut Table, verdict: &CandidateVerdict) {
    match &verdict.outcome {
        Outcome::Realized(r) => {
            let c2s = r.c2_set.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";");
            let locus =
                r.zero_locus.iter().map(json_token).collect::<Vec<_>>().join(";");
            table.push_row(vec![
                verdict.c1.to_string(),
                "realized".into(),
                c2s,
                r.ulrich.to_string(),
                locus,
            ]);
        }
        Outcome::Eliminated { trace } => {
            let rule = trace.last().map(|s| s.rule.to_string()).unwrap_or_default();
            table.push_row(vec![
                verdict.c1.to_string(),
                "eliminated".into(),
                String::new(),
                String::new(),
                rule,
            ]);
        }
    }
}

fn verdict_headers() -> Table {
    Table::new(vec!["c1", "outcome", "c2_set", "ulrich", "detail"])
}

pub fn classify_cmd(lattice: &GramLattice, c1: Option<DivisorClass>) -> Result<Output, CliError> {
    require_default(lattice)?;
    match c1 {
        None => {
            let classification: Classification = full_classification();
            let mut table = verdict_headers();
            for verdict in &classification.verdicts {
                verdict_row(&mut table, verdict);
            }
            let warnings = classification.warnings.clone();
            Ok(output(&classification, table, warnings))
        }
        Some(c1) => {
            let verdict = classify_candidate(c1)?;
            let mut table = verdict_headers();
            verdict_row(&mut table, &verdict);
            let warnings = full_classification()
                .warnings
                .into_iter()
                .filter(|w| {
                    (w.code == "label-note" && c1 == DivisorClass::new(4, -1))
                        || (w.code == "sign-convention-note" && c1 == DivisorClass::new(-2, 3))
                })
                .collect();
            Ok(output(&verdict, table, warnings))
        }
    }
}

#[derive(Serialize)]
struct HilbertPayload {
    values: Vec<u64>,
    display: String,
    total_degree: u64,
    admissible: bool,
    violation: Option<detquartic::HilbertViolation>,
}

pub fn hilbert_check_cmd(values: Vec<u64>, total: Option<u64>) -> Result<Output, CliError> {
    let total_degree = total.or_else(|| values.last().copied()).unwrap_or(0);
    let hf = HilbertFunction::new(values.clone()).map_err(CliError::Domain)?;
    let report = detquartic::admissible_point_hilbert(&hf, total_degree);
    let payload = HilbertPayload {
        values,
        display: hf.to_string(),
        total_degree,
        admissible: report.admissible,
        violation: report.violation.clone(),
    };
    let mut table = Table::new(vec!["hilbert_function", "total_degree", "admissible", "violation"]);
    table.push_row(vec![
        hf.to_string(),
        total_degree.to_string(),
        report.admissible.to_string(),
        report.violation.map(|v| v.to_string()).unwrap_or_default(),
    ]);
    Ok(output(&payload, table, vec![]))
}

#[derive(Serialize)]
struct GoldenPayload {
    out_dir: String,
    files: Vec<String>,
}

pub fn golden_cmd(lattice: &GramLattice, out_dir: &Path) -> Result<Output, CliError> {
    require_default(lattice)?;
    let files = crate::golden::emit_golden_tables(out_dir).map_err(CliError::io)?;
    let payload = GoldenPayload { out_dir: out_dir.display().to_string(), files };
    let mut table = Table::new(vec!["out_dir", "file"]);
    for file in &payload.files {
        table.push_row(vec![payload.out_dir.clone(), file.clone()]);
    }
    Ok(output(&payload, table, vec![]))
}

#[derive(Serialize)]
struct RegionSvgPayload {
    path: String,
    points: usize,
    scan_box: i64,
}

pub fn region_svg_cmd(lattice: &GramLattice, out: &Path, scan_box: i64) -> Result<Output, CliError> {
    require_default(lattice)?;
    let (svg, points) = crate::svg::region_svg(scan_box);
    std::fs::write(out, svg).map_err(CliError::io)?;
    let payload = RegionSvgPayload { path: out.display().to_string(), points, scan_box };
    let mut table = Table::new(vec!["path", "points", "box"]);
    table.push_row(vec![payload.path.clone(), points.to_string(), scan_box.to_string()]);
    Ok(output(&payload, table, vec![]))
}

#[derive(Serialize)]
struct ReplayPayload {
    source: String,
    valid: bool,
    report: ReplayReport,
}

/// Accepts a serialized classification, a list of verdicts, a single
/// verdict, or a bare list of deduction steps.
fn steps_from_json(value: &Value) -> Result<Vec<DeductionStep>, CliError> {
    if let Ok(classification) = serde_json::from_value::<Classification>(value.clone()) {
        return Ok(classification.verdicts.iter().flat_map(|v| v.steps().to_vec()).collect());
    }
    if let Ok(verdicts) = serde_json::from_value::<Vec<CandidateVerdict>>(value.clone()) {
        return Ok(verdicts.iter().flat_map(|v| v.steps().to_vec()).collect());
    }
    if let Ok(verdict) = serde_json::from_value::<CandidateVerdict>(value.clone()) {
        return Ok(verdict.steps().to_vec());
    }
    if let Ok(steps) = serde_json::from_value::<Vec<DeductionStep>>(value.clone()) {
        return Ok(steps);
    }
    Err(CliError::input(
        "unrecognized-trace",
        "trace file is none of: classification, verdict list, verdict, step list",
    ))
}

pub fn replay_cmd(path: &Path) -> Result<Output, CliError> {
    let raw = std::fs::read_to_string(path).map_err(CliError::io)?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| CliError::input("invalid-json", format!("cannot parse {}: {e}", path.display())))?;
    let steps = steps_from_json(&value)?;
    let report = replay_trace(&steps);
    let payload = ReplayPayload {
        source: path.display().to_string(),
        valid: report.is_valid(),
        report: report.clone(),
    };
    let mut table = Table::new(vec!["source", "steps", "facts_checked", "failures", "valid"]);
    table.push_row(vec![
        payload.source.clone(),
        report.steps.to_string(),
        report.facts_checked.to_string(),
        report.failures.len().to_string(),
        report.is_valid().to_string(),
    ]);
    Ok(output(&payload, table, vec![]))
}
