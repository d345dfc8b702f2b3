//! Text, JSON, CSV and DOT rendering of spectra, polynomials and reports.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use seidel_spectra::closed_form::{EigenValue, FactoredCharPoly, Spectrum};
use seidel_spectra::family::{signed_edges, EdgeSign, VertexLabel};
use seidel_spectra::verify::{SweepOutcome, SweepSummary, VerificationReport};
use seidel_spectra::{FamilyParams, UniPoly};

/// Rounds to 12 significant digits and prints the shortest representation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let s = format!("{rounded}");
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn sig12_f64(x: f64) -> f64 {
    sig12(x).parse().unwrap_or(x)
}

/// JSON number for an integer, falling back to a string past `i64`.
pub fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn coeffs_json(c: &[BigInt]) -> Value {
    Value::Array(c.iter().map(bigint_json).collect())
}

fn params_json(params: &FamilyParams) -> Value {
    json!({ "h": params.h(), "p": params.p(), "k": params.k(), "n": params.n() })
}

fn eigen_json(value: &EigenValue, multiplicity: usize) -> Value {
    match value {
        EigenValue::Exact(q) if q.is_integer() => json!({
            "value": bigint_json(q.numer()),
            "multiplicity": multiplicity,
            "exact": q.to_string(),
        }),
        EigenValue::Exact(q) => json!({
            "value": sig12_f64(value.to_f64()),
            "multiplicity": multiplicity,
            "exact": q.to_string(),
        }),
        EigenValue::CubicRoot { index, .. } => json!({
            "value": sig12_f64(value.to_f64()),
            "multiplicity": multiplicity,
            "cubic_root_index": index,
        }),
    }
}

fn eigen_text(value: &EigenValue) -> String {
    match value {
        EigenValue::Exact(q) => q.to_string(),
        EigenValue::CubicRoot { index, .. } => {
            format!("{} (root {index} of s)", sig12(value.to_f64()))
        }
    }
}

pub fn spectrum_human(params: &FamilyParams, spectrum: &Spectrum, cubic: &[BigInt; 4]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Seidel spectrum for h={} p={} k={} (n={})",
        params.h(),
        params.p(),
        params.k(),
        params.n()
    );
    for e in spectrum.entries() {
        let _ = writeln!(out, "  {}  (x{})", eigen_text(&e.value), e.multiplicity);
    }
    let c: Vec<String> = cubic.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "cubic = [{}]", c.join(","));
    out
}

pub fn spectrum_json(params: &FamilyParams, spectrum: &Spectrum, cubic: &[BigInt; 4]) -> Value {
    let mut v = params_json(params);
    v["eigenvalues"] = Value::Array(
        spectrum
            .entries()
            .iter()
            .map(|e| eigen_json(&e.value, e.multiplicity))
            .collect(),
    );
    v["cubic"] = coeffs_json(cubic);
    v
}

pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let mut out = String::from("value,multiplicity,exact\n");
    for e in spectrum.entries() {
        let exact = match &e.value {
            EigenValue::Exact(q) => q.to_string(),
            EigenValue::CubicRoot { .. } => String::new(),
        };
        let _ = writeln!(
            out,
            "{},{},{}",
            sig12(e.value.to_f64()),
            e.multiplicity,
            exact
        );
    }
    out
}

/// `[5,0,-6,0,1]`, ascending degree.
pub fn coeff_list(p: &UniPoly) -> String {
    let c: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", c.join(","))
}

pub fn charpoly_json(params: &FamilyParams, f: &FactoredCharPoly, expanded: bool) -> Value {
    let mut v = params_json(params);
    v["degree"] = json!(f.degree());
    if expanded {
        v["coefficients"] = coeffs_json(f.expand().coeffs());
    } else {
        v["factored"] = json!(f.to_string());
        v["linear_factors"] = json!([
            { "root": bigint_json(&f.root1), "exponent": f.e1 },
            { "root": bigint_json(&f.root2), "exponent": f.e2 },
        ]);
        v["cubic"] = coeffs_json(&f.cubic);
    }
    v
}

pub fn charpoly_csv(f: &FactoredCharPoly) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (d, c) in f.expand().coeffs().iter().enumerate() {
        let _ = writeln!(out, "{d},{c}");
    }
    out
}

pub fn report_human(r: &VerificationReport, tol: f64) -> String {
    let mut out = String::new();
    let p = &r.params;
    let _ = writeln!(
        out,
        "verify h={} p={} k={} (n={})",
        p.h(),
        p.p(),
        p.k(),
        r.n
    );
    let _ = writeln!(out, "  closed form: {}", r.factored);
    let _ = writeln!(
        out,
        "  characteristic polynomial exact match: {}",
        r.charpoly_exact_match
    );
    if !r.coefficient_diffs.is_empty() {
        let _ = writeln!(out, "  degree | closed form | oracle");
        for d in &r.coefficient_diffs {
            let _ = writeln!(
                out,
                "  {:>6} | {:>11} | {}",
                d.degree, d.closed_form, d.oracle
            );
        }
    }
    let _ = writeln!(
        out,
        "  max spectrum deviation: {:.3e} (tol {:.1e})",
        r.spectrum_max_deviation, tol
    );
    for (name, ok) in &r.invariant_results {
        let _ = writeln!(
            out,
            "  invariant {name}: {}",
            if *ok { "ok" } else { "FAILED" }
        );
    }
    let a = &r.statement_audit;
    let _ = writeln!(
        out,
        "  eigenvalue 1-2p = {} present with multiplicity {}",
        a.factor_eigenvalue, a.factor_eigenvalue_multiplicity
    );
    for finding in a.findings() {
        let _ = writeln!(out, "  note: {finding}");
    }
    let _ = writeln!(out, "  elapsed: {:.3} ms", r.elapsed.as_secs_f64() * 1e3);
    out
}

pub fn report_json(r: &VerificationReport) -> Value {
    let mut v = serde_json::to_value(r).unwrap_or(Value::Null);
    v["findings"] = json!(r.statement_audit.findings());
    v
}

pub const SWEEP_CSV_HEADER: &str = "h,p,k,n,exact_match,max_dev,elapsed_ms";

fn csv_row(out: &mut String, r: &VerificationReport) {
    let p = &r.params;
    let _ = writeln!(
        out,
        "{},{},{},{},{},{:.3e},{:.3}",
        p.h(),
        p.p(),
        p.k(),
        r.n,
        r.charpoly_exact_match,
        r.spectrum_max_deviation,
        r.elapsed.as_secs_f64() * 1e3
    );
}

pub fn report_csv(r: &VerificationReport) -> String {
    let mut out = format!("{SWEEP_CSV_HEADER}\n");
    csv_row(&mut out, r);
    out
}

pub fn sweep_csv(summary: &SweepSummary) -> String {
    let mut out = format!("{SWEEP_CSV_HEADER}\n");
    for point in &summary.points {
        let p = &point.params;
        match &point.outcome {
            SweepOutcome::Verified(r) => csv_row(&mut out, r),
            SweepOutcome::Error { .. } => {
                let _ = writeln!(out, "{},{},{},{},false,,", p.h(), p.p(), p.k(), point.n);
            }
            SweepOutcome::Skipped => {}
        }
    }
    out
}

pub fn sweep_json(summary: &SweepSummary) -> Value {
    Value::Array(
        summary
            .points
            .iter()
            .map(|point| {
                let mut v = params_json(&point.params);
                match &point.outcome {
                    SweepOutcome::Verified(r) => {
                        v["status"] = json!("verified");
                        v["exact_match"] = json!(r.charpoly_exact_match);
                        v["max_dev"] = json!(r.spectrum_max_deviation);
                        v["elapsed_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
                        if !r.coefficient_diffs.is_empty() {
                            v["coefficient_diffs"] =
                                serde_json::to_value(&r.coefficient_diffs).unwrap_or(Value::Null);
                        }
                    }
                    SweepOutcome::Skipped => v["status"] = json!("skipped"),
                    SweepOutcome::Error { message } => {
                        v["status"] = json!("error");
                        v["message"] = json!(message);
                    }
                }
                v
            })
            .collect(),
    )
}

pub fn summary_line(summary: &SweepSummary) -> String {
    format!(
        "{} passed, {} failed, {} skipped",
        summary.passed, summary.failed, summary.skipped
    )
}

fn vertex_name(label: VertexLabel) -> String {
    match label {
        VertexLabel::Private { clique, slot } => format!("c{clique}.{slot}"),
        VertexLabel::Hub { index } => format!("hub{index}"),
    }
}

/// The signed complete graph; negative edges are the edges of `G`.
pub fn export_dot(params: &FamilyParams) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph signed_complete_h{}_p{}_k{} {{",
        params.h(),
        params.p(),
        params.k()
    );
    for v in 0..params.n() {
        let label = params.vertex(v).map(vertex_name).unwrap_or_default();
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for (i, j, sign) in signed_edges(params) {
        let attrs = match sign {
            EdgeSign::Negative => "sign=\"-\", color=red, style=dashed",
            EdgeSign::Positive => "sign=\"+\"",
        };
        let _ = writeln!(out, "  {i} -- {j} [{attrs}];");
    }
    out.push_str("}\n");
    out
}

pub fn export_json(params: &FamilyParams) -> Value {
    let negative: Vec<Value> = signed_edges(params)
        .into_iter()
        .filter(|e| e.2 == EdgeSign::Negative)
        .map(|(i, j, _)| json!([i, j]))
        .collect();
    json!({ "n": params.n(), "negative_edges": negative })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(5f64.sqrt()), "2.2360679775");
        assert_eq!(sig12(-5f64.sqrt()), "-2.2360679775");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(123456.789012345), "123456.789012");
    }
}
