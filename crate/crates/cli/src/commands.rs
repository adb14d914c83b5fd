use std::fmt::Write as _;
use std::path::Path;

use hyprank::catalog::{self, rank_gap_exceptions, rank_gap_rows, ReductiveDescriptor};
use hyprank::criteria::{
    check_proper_embedded, cocompact_dimension_check, necessary_conditions, EmbeddedVerdict, Subspace,
};
use hyprank::linalg;
use hyprank::obstruction::{standard_form_verdict, CandidateReport};
use hyprank::{parse_descriptor, Error, RationalVector, RootSystem};
use serde_json::{json, Value};

use crate::report::{check_line, matrix_json, vector_json, Report};

pub enum CliError {
    Lib(Error),
    File(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

pub type Outcome = Result<(Report, String), CliError>;

pub fn info(algebra: &str) -> Outcome {
    let desc = parse_descriptor(algebra)?;
    let mut text = String::new();
    let mut parts = Vec::new();
    for form in &desc.noncompact {
        let a = form.attributes();
        let _ = writeln!(text, "{form}");
        let _ = writeln!(text, "  family                  {}", form.family());
        let _ = writeln!(text, "  restricted root system  {}", a.restricted);
        let _ = writeln!(text, "  real rank               {}", a.real_rank);
        let _ = writeln!(text, "  a-hyperbolic rank       {}", a.ahyp);
        let _ = writeln!(text, "  dim g, dim k, dim p     {}, {}, {}", a.dim_g, a.dim_k, a.dim_p);
        let _ = writeln!(text, "  maximal compact rank    {}", a.rank_maxcompact);
        if form.is_complex_as_real() {
            let _ = writeln!(text, "  complex algebra viewed as real");
        }
        parts.push(json!({
            "name": form.to_string(),
            "family": form.family().to_string(),
            "restricted": a.restricted.to_string(),
            "real_rank": a.real_rank,
            "ahyp": a.ahyp,
            "dim_g": a.dim_g,
            "dim_k": a.dim_k,
            "dim_p": a.dim_p,
            "rank_maxcompact": a.rank_maxcompact,
            "complex_as_real": form.is_complex_as_real(),
        }));
    }
    for c in &desc.compact {
        let _ = writeln!(text, "{}  compact, dim {}, rank {}", c.name, c.dim, c.rank);
    }
    let totals = desc.invariants();
    if desc.as_simple().is_none() {
        let _ = writeln!(text, "{desc}");
        let _ = writeln!(text, "  real rank               {}", totals.real_rank);
        let _ = writeln!(text, "  a-hyperbolic rank       {}", totals.ahyp);
        let _ = writeln!(text, "  d = dim p               {}", totals.d);
        let _ = writeln!(text, "  maximal compact rank    {}", totals.rank_maxcompact);
    }
    let mut report = Report::new("info", "Computed").input("algebra", desc.to_string());
    report.details = json!({
        "parts": parts,
        "compact_parts": desc.compact.iter().map(|c| json!({"name": c.name, "dim": c.dim, "rank": c.rank})).collect::<Vec<_>>(),
        "split_center_dim": desc.split_center_dim,
        "compact_center_dim": desc.compact_center_dim,
        "totals": {
            "real_rank": totals.real_rank,
            "ahyp": totals.ahyp,
            "d": totals.d,
            "rank_maxcompact": totals.rank_maxcompact,
        },
    });
    Ok((report, text))
}

pub fn table1(k_max: usize) -> Outcome {
    let rows = rank_gap_rows(k_max);
    let scan_rank = rows.iter().map(|r| r.real_rank).max().unwrap_or(0);
    let exceptions = rank_gap_exceptions(scan_rank);
    let mut text = format!("{:<15} {:>2}  {:<12} {:<10} {:>4}  {:>9}\n", "family", "k", "algebra", "restricted", "ahyp", "real rank");
    let mut json_rows = Vec::new();
    for row in &rows {
        let k = row.k.map_or("-".to_string(), |k| k.to_string());
        let _ = writeln!(
            text,
            "{:<15} {:>2}  {:<12} {:<10} {:>4}  {:>9}",
            row.family.label(),
            k,
            row.form.to_string(),
            row.form.restricted().to_string(),
            row.ahyp,
            row.real_rank
        );
        json_rows.push(json!({
            "family": row.family.label(),
            "k": row.k,
            "algebra": row.form.to_string(),
            "restricted": row.form.restricted().to_string(),
            "ahyp": row.ahyp,
            "real_rank": row.real_rank,
        }));
    }
    let complete = exceptions.is_empty();
    if complete {
        let _ = writeln!(
            text,
            "completeness: no other non-complex catalog form of real rank <= {scan_rank} has ahyp != real rank"
        );
    } else {
        let names: Vec<String> = exceptions.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "completeness: FAILED, also differing: {}", names.join(", "));
    }
    let mut report = Report::new("table1", if complete { "Complete" } else { "Incomplete" })
        .input("k_max", k_max);
    report.checks.push(hyprank::criteria::Check {
        name: "unlisted_rank_gaps".to_string(),
        lhs: exceptions.len() as i64,
        rhs: 0,
        passed: complete,
    });
    report.witnesses = exceptions.iter().map(|f| Value::String(f.to_string())).collect();
    report.details = json!({ "scan_max_real_rank": scan_rank, "rows": json_rows });
    Ok((report, text))
}

pub fn check_proper_catalog(g: &str, h: &str, l: &str) -> Outcome {
    let (gd, hd, ld) = (parse_descriptor(g)?, parse_descriptor(h)?, parse_descriptor(l)?);
    let report_data = necessary_conditions(&gd, &hd, &ld);
    let dims = cocompact_dimension_check(&gd, &hd, &ld);
    let mut text = format!("L = {ld} on G/H = {gd}/{hd}\n");
    for check in &report_data.checks {
        let _ = writeln!(text, "{}", check_line(check, "<="));
    }
    let _ = writeln!(text, "verdict: {}", report_data.overall);
    let _ = writeln!(
        text,
        "d(L) + d(H) = {} + {} = {}, d(G) = {}: {}",
        dims.d_l,
        dims.d_h,
        dims.d_l + dims.d_h,
        dims.d_g,
        if dims.equal { "equal (cocompact if proper)" } else { "not equal (never cocompact)" }
    );
    let mut report = Report::new("check-proper", report_data.overall.to_string())
        .input("mode", "catalog")
        .input("g", gd.to_string())
        .input("h", hd.to_string())
        .input("l", ld.to_string());
    report.checks = report_data.checks;
    report.details = json!({
        "d_g": dims.d_g,
        "d_h": dims.d_h,
        "d_l": dims.d_l,
        "required_d_l": dims.required_d_l,
        "d_equal": dims.equal,
    });
    Ok((report, text))
}

fn read_subspace(system: &RootSystem, path: &Path) -> Result<Subspace, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::File(format!("{}: {e}", path.display())))?;
    Subspace::parse(system, &text).map_err(|e| match e {
        Error::Parse(msg) => CliError::Lib(Error::Parse(format!("{}: {msg}", path.display()))),
        other => CliError::Lib(other),
    })
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "identity".to_string()
    } else {
        word.iter().map(|j| format!("s{}", j + 1)).collect::<Vec<_>>().join(" ")
    }
}

pub fn check_proper_embedded_files(system_text: &str, ah: &Path, al: &Path, cap: u64) -> Outcome {
    let system = RootSystem::parse_designation(system_text)?;
    let a_h = read_subspace(&system, ah)?;
    let a_l = read_subspace(&system, al)?;
    let verdict = check_proper_embedded(&system, &a_h, &a_l, cap)?;
    let mut text = format!(
        "system {system}, |W| = {}, dim a_h = {}, dim a_l = {}\n",
        system.weyl_order(),
        a_h.dim(),
        a_l.dim()
    );
    let mut report = Report::new("check-proper", if verdict.is_proper() { "Proper" } else { "NotProper" })
        .input("mode", "embedded")
        .input("system", system.to_string())
        .input("ah", ah.display().to_string())
        .input("al", al.display().to_string())
        .input("cap", cap);
    let intersection_dim = match &verdict {
        EmbeddedVerdict::Proper => {
            let _ = writeln!(text, "verdict: Proper (w.a_l meets a_h only in 0 for every w in W)");
            0
        }
        EmbeddedVerdict::NotProper { w_index, element, witness } => {
            let mut columns: Vec<RationalVector> = a_h.basis().to_vec();
            columns.extend(a_l.basis().iter().map(|v| element.apply(v)));
            let dim = a_h.dim() + a_l.dim() - linalg::rank(&columns);
            let _ = writeln!(text, "verdict: NotProper");
            let _ = writeln!(text, "first offending w: index {w_index} in canonical order, word {}", word_text(element.word()));
            let _ = writeln!(text, "w as a matrix:");
            for line in element.matrix().to_string().lines() {
                let _ = writeln!(text, "  {line}");
            }
            let _ = writeln!(text, "dim(w.a_l ∩ a_h) = {dim}");
            let _ = writeln!(text, "witness X in w.a_l ∩ a_h: {witness}");
            report.witnesses.push(json!({
                "w_index": w_index,
                "word": element.word().iter().map(|j| j + 1).collect::<Vec<_>>(),
                "matrix": matrix_json(element.matrix()),
                "vector": vector_json(witness),
            }));
            dim as i64
        }
    };
    report.checks.push(hyprank::criteria::Check {
        name: "intersection_dim".to_string(),
        lhs: intersection_dim,
        rhs: 0,
        passed: intersection_dim == 0,
    });
    report.details = json!({
        "weyl_order": system.weyl_order().to_string(),
        "dim_a_h": a_h.dim(),
        "dim_a_l": a_l.dim(),
        "basis_a_h": a_h.basis().iter().map(vector_json).collect::<Vec<_>>(),
        "basis_a_l": a_l.basis().iter().map(vector_json).collect::<Vec<_>>(),
    });
    Ok((report, text))
}

fn candidate_json(c: &CandidateReport) -> Value {
    let b = |x: hyprank::obstruction::Budget| json!({ "used": x.used, "limit": x.limit });
    json!({
        "derived_parts": c.derived_parts.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "d_interval": [c.d_interval.0, c.d_interval.1],
        "budgets": {
            "ahyp": b(c.budgets.ahyp),
            "real_rank": b(c.budgets.real_rank),
            "rank_maxcompact": b(c.budgets.rank_maxcompact),
            "dim_p": b(c.budgets.dim_p),
            "dim_g": b(c.budgets.dim_g),
        },
    })
}

fn candidate_line(c: &CandidateReport) -> String {
    format!("  {:<28} [{}, {}]", c.label(), c.d_interval.0, c.d_interval.1)
}

const SHOWN_CANDIDATES: usize = 10;

pub fn standard_form(g: &str, h: &str) -> Outcome {
    let (gd, hd): (ReductiveDescriptor, ReductiveDescriptor) = (parse_descriptor(g)?, parse_descriptor(h)?);
    let v = standard_form_verdict(&gd, &hd)?;
    let d_g = catalog::derived_invariants(&gd).d;
    let d_h = catalog::derived_invariants(&hd).d;
    let mut text = format!("G/H = {gd}/{hd}\n");
    let _ = writeln!(text, "required d(L) = d(G) - d(H) = {d_g} - {d_h} = {}", v.required_d);
    let _ = writeln!(text, "largest reachable d(L) = {}", v.max_achievable);
    let _ = writeln!(text, "verdict: {}", v.verdict);
    let _ = writeln!(text, "\ncandidates for [l,l] with their d(L) ranges ({} in total, top {} shown):", v.candidates.len(), SHOWN_CANDIDATES.min(v.candidates.len()));
    for c in v.candidates.iter().take(SHOWN_CANDIDATES) {
        let _ = writeln!(text, "{}", candidate_line(c));
    }
    if !v.witnesses.is_empty() {
        let _ = writeln!(text, "\ncandidates reaching d(L) = {}:", v.required_d);
        for c in &v.witnesses {
            let _ = writeln!(text, "{}", candidate_line(c));
        }
    }
    let mut report = Report::new("standard-form", v.verdict.to_string())
        .input("g", gd.to_string())
        .input("h", hd.to_string());
    report.checks.push(hyprank::criteria::Check {
        name: "required_d_reachable".to_string(),
        lhs: v.required_d,
        rhs: v.max_achievable as i64,
        passed: !v.witnesses.is_empty(),
    });
    report.witnesses = v.witnesses.iter().map(candidate_json).collect();
    report.details = json!({
        "d_g": d_g,
        "d_h": d_h,
        "required_d": v.required_d,
        "max_achievable": v.max_achievable,
        "candidates": v.candidates.iter().map(candidate_json).collect::<Vec<_>>(),
    });
    Ok((report, text))
}
