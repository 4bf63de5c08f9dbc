//! Text and JSON renderings of check results. Both are pure functions of the
//! results, so reruns on the same input are byte-identical.

use novikov_core::structures::{axiom, Presentation, Space};
use novikov_core::{AxiomReport, Bundle, Poly, QLocus, Verdict};
use serde_json::{json, Value};

use crate::format::render_sum;

/// How witness tuples and residuals are named.
#[derive(Clone, Copy)]
pub enum Naming<'a> {
    /// Basis names of this space.
    Basis(&'a Space),
    /// Raw indices, for windowed checks whose tuples mix basis and degree.
    Raw,
}

pub fn locus_text(l: &QLocus) -> String {
    l.to_string()
}

fn verdict_text(r: &AxiomReport) -> String {
    match r.verdict {
        Verdict::Holds => "holds".into(),
        Verdict::Fails => "fails".into(),
        Verdict::HoldsOnLocus => {
            format!("holds only on {}", r.locus.as_ref().map(locus_text).unwrap_or_else(|| "?".into()))
        }
    }
}

fn power_of(len: usize, n: usize) -> Option<u32> {
    (1..=4u32).find(|&k| n.pow(k) == len)
}

/// Renders a residual vector: a sum over basis tensors when the shape is
/// recognisable, components separated by `|`, otherwise a plain list.
pub fn residual_text(id: &str, residual: &[Poly], naming: Naming<'_>) -> String {
    let raw = || format!("[{}]", residual.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
    let Naming::Basis(sp) = naming else { return raw() };
    if residual.len() == 1 {
        return residual[0].to_string();
    }
    let parts = axiom(id).map(|a| a.components.len()).unwrap_or(1).max(1);
    if !residual.len().is_multiple_of(parts) {
        return raw();
    }
    let each = residual.len() / parts;
    let Some(k) = power_of(each, sp.dim()) else { return raw() };
    let n = sp.dim();
    residual
        .chunks(each)
        .map(|chunk| {
            let terms: Vec<(Vec<usize>, Poly)> = chunk
                .iter()
                .enumerate()
                .map(|(mut flat, c)| {
                    let mut ix = vec![0; k as usize];
                    for slot in ix.iter_mut().rev() {
                        *slot = flat % n;
                        flat /= n;
                    }
                    (ix, c.clone())
                })
                .collect();
            render_sum(sp, &terms)
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Names for the entries of a witness tuple.
pub fn tuple_names(id: &str, tuple: &[usize], naming: Naming<'_>) -> Vec<String> {
    let closed = axiom(id).is_ok_and(|a| a.spaces.is_empty());
    match naming {
        Naming::Basis(sp) if closed && axiom(id).is_ok_and(|a| a.components.len() > 1) => tuple
            .iter()
            .enumerate()
            .map(|(i, &t)| if i == 0 { format!("#{t}") } else { sp.name(t).to_string() })
            .collect(),
        Naming::Basis(sp) => tuple.iter().map(|&t| sp.name(t).to_string()).collect(),
        Naming::Raw => tuple.iter().map(|t| t.to_string()).collect(),
    }
}

fn witness_text(r: &AxiomReport, naming: Naming<'_>) -> Option<String> {
    let w = r.witness.as_ref()?;
    let closed = axiom(&r.axiom_id).is_ok_and(|a| a.spaces.is_empty());
    let at = if closed { "entry" } else { "at" };
    Some(format!(
        "{at} ({}): {}",
        tuple_names(&r.axiom_id, &w.tuple, naming).join(", "),
        residual_text(&r.axiom_id, &w.residual, naming)
    ))
}

/// One line per check: id, verdict and, when it does not hold, the witness.
pub fn bundle_text(b: &Bundle, naming: Naming<'_>) -> String {
    let width = b.reports.iter().map(|r| r.axiom_id.len()).max().unwrap_or(0);
    let mut out = format!("{}\n", b.title);
    for r in &b.reports {
        out.push_str(&format!("  {:width$}  {}", r.axiom_id, verdict_text(r)));
        if r.verdict != Verdict::Holds {
            if let Some(w) = witness_text(r, naming) {
                out.push_str(&format!("; first residual {w}"));
            }
        }
        if r.tuples_skipped > 0 {
            out.push_str(&format!(" ({} tuples outside the window skipped)", r.tuples_skipped));
        }
        out.push('\n');
    }
    for n in &b.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    out
}

pub fn locus_json(l: &QLocus) -> Value {
    json!({
        "text": locus_text(l),
        "all_q": l.is_all(),
        "points": l.points.iter().map(|p| Value::String(novikov_core::exactcore::poly::fmt_rational(p))).collect::<Vec<_>>(),
        "nonrational_flag": l.nonrational_flag,
    })
}

pub fn report_json(r: &AxiomReport, naming: Naming<'_>) -> Value {
    json!({
        "axiom_id": r.axiom_id,
        "verdict": r.verdict.as_str(),
        "residual_degree": r.residual_degree,
        "locus": r.locus.as_ref().map(locus_json),
        "witness": r.witness.as_ref().map(|w| json!({
            "tuple": tuple_names(&r.axiom_id, &w.tuple, naming),
            "residual": residual_text(&r.axiom_id, &w.residual, naming),
        })),
        "nonzero_tuples": r.residuals.len(),
        "tuples_checked": r.tuples_checked,
        "tuples_skipped": r.tuples_skipped,
        "note": r.note,
    })
}

pub fn bundle_json(b: &Bundle, naming: Naming<'_>) -> Value {
    json!({
        "title": b.title,
        "verdict": b.verdict().as_str(),
        "checks": b.reports.iter().map(|r| report_json(r, naming)).collect::<Vec<_>>(),
        "notes": b.notes,
    })
}

/// A short summary of a presentation: dimension, ring and component sizes.
pub fn presentation_summary(p: &Presentation) -> String {
    let mut parts = vec![format!("dim {}", p.dim()), format!("ring {}", p.ring)];
    let count = |t: &novikov_core::Tensor| match t.nonzeros().count() {
        1 => "1 entry".to_string(),
        k => format!("{k} entries"),
    };
    for (n, o) in &p.products {
        parts.push(format!("product {n}: {}", count(o.tensor())));
    }
    for (n, o) in &p.coproducts {
        parts.push(format!("coproduct {n}: {}", count(o.tensor())));
    }
    for (n, o) in &p.maps {
        parts.push(format!("map {n}: {}", count(o.tensor())));
    }
    for (n, o) in p.forms.iter().chain(&p.relements) {
        parts.push(format!("{n}: {}", count(o)));
    }
    parts.join(", ")
}
