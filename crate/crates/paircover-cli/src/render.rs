//! Plain-text, CSV, and JSON renderers. Every function here is a pure
//! formatter so repeated invocations are byte-identical.

use serde::Serialize;

use paircover::{compare, Assignment, BibdReport, BoundsReport, Design, FieldSpec, Result};

use crate::input::DesignFile;

/// "GF(9) p=3 m=2 modulus=x^2+1"; prime fields have no modulus part.
pub fn field_summary(field: &FieldSpec) -> String {
    let mut line = format!(
        "GF({}) p={} m={}",
        field.order(),
        field.characteristic(),
        field.degree()
    );
    if let Some(modulus) = field.modulus() {
        line.push_str(&format!(" modulus={}", polynomial(modulus)));
    }
    line
}

/// Ascending coefficient vector rendered highest power first.
fn polynomial(coeffs: &[usize]) -> String {
    let mut terms = Vec::new();
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (power, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (p, 1) => format!("x^{p}"),
            (p, c) => format!("{c}x^{p}"),
        };
        terms.push(term);
    }
    terms.join("+")
}

/// Addition and multiplication tables over element indices, as CSV blocks
/// headed by "add" and "mul".
pub fn field_tables(field: &FieldSpec) -> Result<String> {
    let elements = field.elements();
    let mut out = String::from("add\n");
    for a in &elements {
        let row: Vec<String> = elements
            .iter()
            .map(|b| field.add(a, b).map(|e| e.index().to_string()))
            .collect::<Result<_>>()?;
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out.push_str("mul\n");
    for a in &elements {
        let row: Vec<String> = elements
            .iter()
            .map(|b| field.mul(a, b).map(|e| e.index().to_string()))
            .collect::<Result<_>>()?;
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// One square as CSV rows.
pub fn square_csv(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// Blocks (or referee sets) one per line, comma-separated.
pub fn design_lines<'a, I>(blocks: I) -> String
where
    I: Iterator<Item = &'a Vec<usize>>,
{
    let mut out = String::new();
    for block in blocks {
        let line: Vec<String> = block.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn design_json(design: &Design, t: usize, lambda: usize) -> String {
    let file = DesignFile {
        v: design.v,
        t,
        lambda,
        blocks: design.blocks.iter().map(|b| b.points.clone()).collect(),
    };
    serde_json::to_string(&file).expect("design serializes")
}

/// One verdict line: "<what>: pass v=9 b=12 r=4 t=3 lambda=1" or the first
/// counterexample on failure.
pub fn report_line(what: &str, report: &BibdReport) -> String {
    if report.pass() {
        let params = report.expected.expect("passing report has parameters");
        return format!(
            "{what}: pass v={} b={} r={} t={} lambda={}",
            params.v, params.b, params.r, params.t, params.lambda
        );
    }
    match report.first_violation() {
        Some(violation) => format!(
            "{what}: fail v={} t={} lambda={} violations={} first: {violation}",
            report.v,
            report.t,
            report.lambda,
            report.violations.len()
        ),
        None => format!(
            "{what}: fail v={} t={} lambda={} no such design has integral parameters",
            report.v, report.t, report.lambda
        ),
    }
}

/// One row per referee, one column per proposal; covered cells carry the
/// proposal identifier (or its label), others stay blank.
pub fn assign_table(assignment: &Assignment, labels: Option<&[String]>) -> String {
    let n = assignment.instance.n();
    let mut out = String::new();
    for (i, referee) in assignment.referees.iter().enumerate() {
        let mut cells = vec![String::new(); n + 1];
        cells[0] = format!("r{}", i + 1);
        for &p in referee {
            cells[p] = match labels {
                Some(names) => names[p - 1].clone(),
                None => p.to_string(),
            };
        }
        while cells.len() > 1 && cells.last().is_some_and(String::is_empty) {
            cells.pop();
        }
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

pub fn assign_csv(assignment: &Assignment) -> String {
    design_lines(assignment.referees.iter())
}

#[derive(Serialize)]
struct AssignmentFile<'a> {
    n: usize,
    k: usize,
    referees: &'a [Vec<usize>],
}

pub fn assign_json(assignment: &Assignment) -> String {
    let file = AssignmentFile {
        n: assignment.instance.n(),
        k: assignment.instance.k(),
        referees: &assignment.referees,
    };
    serde_json::to_string(&file).expect("assignment serializes")
}

fn decimal(ratio: &paircover::Rational) -> f64 {
    *ratio.numer() as f64 / *ratio.denom() as f64
}

pub fn bounds_report(report: &BoundsReport) -> String {
    format!(
        "n={} k={}\nlower={}\nupper_new={}\nupper_prior={}\nratio_new={} ({:.4})\nratio_prior={} ({:.4})\nrecommended={}\n",
        report.n,
        report.k,
        report.lower,
        report.upper_new,
        report.upper_prior,
        report.ratio_new,
        decimal(&report.ratio_new),
        report.ratio_prior,
        decimal(&report.ratio_prior),
        report.recommended
    )
}

/// CSV sweep over every 2 <= k <= n <= nmax.
pub fn bounds_grid_csv(nmax: usize) -> Result<String> {
    let mut out =
        String::from("n,k,lower,upper_new,upper_prior,ratio_new,ratio_prior,recommended\n");
    for n in 2..=nmax {
        for k in 2..=n {
            let r = compare(n, k)?;
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.n,
                r.k,
                r.lower,
                r.upper_new,
                r.upper_prior,
                r.ratio_new,
                r.ratio_prior,
                r.recommended
            ));
        }
    }
    Ok(out)
}
