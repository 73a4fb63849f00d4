//! Human and machine renderings of check reports.

use std::fmt::Write as _;

use lmalg_core::{Axiom, CheckReport, Field, Violation};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lmalg-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Serialize, Deserialize)]
struct MachineReport {
    schema: String,
    entity: String,
    check: String,
    field: String,
    verdict: String,
    violations: Vec<MachineViolation>,
}

#[derive(Serialize, Deserialize)]
struct MachineViolation {
    axiom: String,
    on: String,
    clause: String,
    witness: Vec<usize>,
    residual: Vec<String>,
    count: usize,
}

pub fn emit_report(entity: &str, r: &CheckReport, format: Format) -> String {
    match format {
        Format::Machine => emit_machine(entity, r),
        Format::Human => emit_human(entity, r),
    }
}

fn verdict(r: &CheckReport) -> &'static str {
    if r.is_pass() {
        "pass"
    } else {
        "fail"
    }
}

fn emit_machine(entity: &str, r: &CheckReport) -> String {
    let m = MachineReport {
        schema: SCHEMA.to_string(),
        entity: entity.to_string(),
        check: r.check.clone(),
        field: r.field.to_string(),
        verdict: verdict(r).to_string(),
        violations: r
            .violations
            .iter()
            .map(|v| MachineViolation {
                axiom: v.axiom.id().to_string(),
                on: v.on.clone(),
                clause: v.clause.clone(),
                witness: v.witness.clone(),
                residual: v.residual.iter().map(|s| s.to_canonical()).collect(),
                count: v.count,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&m).expect("report serializes");
    s.push('\n');
    s
}

fn emit_human(entity: &str, r: &CheckReport) -> String {
    let mut s = String::new();
    if r.is_pass() {
        let _ = writeln!(s, "PASS {} {entity:?} over {}", r.check, r.field);
        return s;
    }
    let n = r.violations.len();
    let _ = writeln!(
        s,
        "FAIL {} {entity:?} over {}: {n} law{} violated",
        r.check,
        r.field,
        if n == 1 { "" } else { "s" }
    );
    for v in &r.violations {
        let witness: Vec<String> = v.witness.iter().map(usize::to_string).collect();
        let residual: Vec<String> = v.residual.iter().map(|x| x.to_canonical()).collect();
        let clause = if v.clause.is_empty() {
            String::new()
        } else {
            format!(" [{}]", v.clause)
        };
        let _ = writeln!(s, "  {}{clause} on {} at ({})", v.axiom.id(), v.on, witness.join(", "));
        let _ = writeln!(s, "    law: {}", v.axiom.description());
        let _ = writeln!(s, "    residual: [{}]", residual.join(", "));
        if v.count > 1 {
            let _ = writeln!(s, "    failing tuples: {}", v.count);
        }
    }
    s
}

/// Reads a machine report back; returns the entity name and the report.
pub fn parse_machine(text: &str) -> Result<(String, CheckReport), String> {
    let m: MachineReport = serde_json::from_str(text).map_err(|e| format!("not a machine report: {e}"))?;
    if m.schema != SCHEMA {
        return Err(format!("unsupported report schema {:?}", m.schema));
    }
    let field: Field = m.field.parse().map_err(|e: lmalg_core::Error| e.to_string())?;
    let mut violations = Vec::with_capacity(m.violations.len());
    for v in m.violations {
        let axiom = Axiom::from_id(&v.axiom).ok_or_else(|| format!("unknown axiom id {:?}", v.axiom))?;
        let residual = v
            .residual
            .iter()
            .map(|s| field.parse(s).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        violations.push(Violation {
            axiom,
            on: v.on,
            clause: v.clause,
            witness: v.witness,
            residual,
            count: v.count,
        });
    }
    let report = CheckReport {
        check: m.check,
        field,
        violations,
    };
    if verdict(&report) != m.verdict {
        return Err(format!("verdict {:?} disagrees with the violation list", m.verdict));
    }
    Ok((m.entity, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmalg_core::catalog;
    use lmalg_core::leibniz::check_lie;

    #[test]
    fn machine_round_trip() {
        let q = Field::Rationals;
        let r = check_lie(&catalog::square_line(q).to_lie_unchecked());
        assert!(!r.is_pass());
        let text = emit_report("g", &r, Format::Machine);
        let (name, back) = parse_machine(&text).unwrap();
        assert_eq!(name, "g");
        assert_eq!(back, r);
        assert_eq!(emit_report("g", &back, Format::Machine), text);
    }

    #[test]
    fn human_lines() {
        let q = Field::Rationals;
        let pass = check_lie(&catalog::sl2(q));
        assert_eq!(emit_report("L", &pass, Format::Human), "PASS lie \"L\" over Q\n");
        let fail = check_lie(&catalog::square_line(q).to_lie_unchecked());
        let text = emit_report("g", &fail, Format::Human);
        assert!(text.contains("antisym on L at (1, 1)"));
        assert!(text.contains("residual: [1/1, 0/1]"));
    }
}
