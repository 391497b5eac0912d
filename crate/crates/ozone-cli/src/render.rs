//! Human-readable text output for the `--pretty` flag. JSON stays the
//! machine format; these renderers only exist for terminal reading.

use std::fmt::Write as _;

use ozone_core::{Agreement, RationalSeries, SingularityNote};

use crate::{CenterDocument, ReportDocument};

/// `[2, 0, 3]` as the monomial `x1^2 x3^3`; the empty word renders as `1`.
pub fn exponent_word(word: &[i64]) -> String {
    let parts: Vec<String> = word
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Coefficients in ascending degree as `1 + 2t - t^3`; zero renders as `0`.
pub fn polynomial(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let term = match (k, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "t".to_string(),
            (1, m) => format!("{m}t"),
            (_, 1) => format!("t^{k}"),
            (_, m) => format!("{m}t^{k}"),
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The product over the exponent list, grouped: `(1 - t^2)(1 - t^5)^3`.
pub fn one_minus_powers(exponents: &[i64]) -> String {
    let mut mult = std::collections::BTreeMap::new();
    for &d in exponents {
        *mult.entry(d).or_insert(0usize) += 1;
    }
    let mut out = String::new();
    for (d, m) in mult {
        if m == 1 {
            let _ = write!(out, "(1 - t^{d})");
        } else {
            let _ = write!(out, "(1 - t^{d})^{m}");
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

pub fn series(s: &RationalSeries) -> String {
    format!(
        "({}) / {}",
        polynomial(&s.numerator),
        one_minus_powers(&s.denominator_exponents)
    )
}

pub fn reduced_series(s: &RationalSeries) -> String {
    format!(
        "({}) / ({})",
        polynomial(&s.reduced.numerator),
        polynomial(&s.reduced.denominator)
    )
}

fn int_list(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", inner.join(", "))
}

fn agreement(a: Agreement) -> &'static str {
    match a {
        Agreement::Agrees => "agrees",
        Agreement::Disagrees => "DISAGREES",
        Agreement::Vacuous => "vacuous",
    }
}

pub fn report_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let p = &doc.input;
    let _ = writeln!(out, "ring: n = {}, ell = {}", p.n(), p.ell());
    for (i, row) in p.b().iter().enumerate() {
        let _ = writeln!(out, "  b row {}: {}", i + 1, int_list(row));
    }
    let inv = &doc.invariants;
    let _ = writeln!(out, "invariants:");
    let _ = writeln!(out, "  f     = {}", int_list(&inv.f));
    let _ = writeln!(out, "  oj    = {}", int_list(&inv.oj));
    let _ = writeln!(out, "  oa    = {}", int_list(&inv.oa));
    let _ = writeln!(out, "  od    = {}", int_list(&inv.od));
    let _ = writeln!(out, "  pg    = {}", int_list(&inv.pg));
    let _ = writeln!(out, "  o_phi = {}", int_list(&inv.o_phi));
    let _ = writeln!(out, "  |O|   = {}", inv.order_o);
    let _ = writeln!(out, "  |H|   = {}", inv.order_h);
    let c = &doc.classification;
    let _ = writeln!(out, "classification:");
    let _ = writeln!(out, "  auslander  = {}", c.auslander);
    let _ = writeln!(out, "  regular    = {}", c.regular);
    let _ = writeln!(out, "  gorenstein = {}", c.gorenstein);
    let _ = writeln!(out, "  calabi_yau = {}", c.calabi_yau);
    match &c.reflection_witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "  reflection witness: axis {}, lambda {}, y = {}",
                w.axis,
                w.lambda,
                int_list(&w.y)
            );
        }
        None => {
            let _ = writeln!(out, "  reflection witness: none");
        }
    }
    let geometry = match c.isolated_singularities {
        SingularityNote::RegularCenter => "center is regular (smooth)",
        SingularityNote::NeverIsolated => "singular locus is never isolated",
    };
    let _ = writeln!(out, "  geometry: {geometry}");
    if let Some(center) = &doc.center {
        let _ = writeln!(out, "center:");
        let _ = writeln!(out, "  generators ({}):", center.generators.len());
        for g in &center.generators {
            let _ = writeln!(out, "    {}  {}", exponent_word(g), int_list(g));
        }
        let _ = writeln!(out, "  series  = {}", series(&center.series));
        let _ = writeln!(out, "  reduced = {}", reduced_series(&center.series));
        let _ = writeln!(
            out,
            "  numerator is cyclotomic product: {}",
            center.numerator_is_cyclotomic
        );
    }
    if !doc.crosschecks.is_empty() {
        let _ = writeln!(out, "crosschecks:");
        for ck in &doc.crosschecks {
            let _ = writeln!(
                out,
                "  {}: value = {}, {}",
                ck.name,
                ck.value,
                agreement(ck.agreement)
            );
        }
    }
    out
}

pub fn center_text(doc: &CenterDocument) -> String {
    let mut out = String::new();
    let p = &doc.input;
    let _ = writeln!(out, "ring: n = {}, ell = {}", p.n(), p.ell());
    let _ = writeln!(out, "generators ({}):", doc.generators.len());
    for g in &doc.generators {
        let _ = writeln!(out, "  {}  {}", exponent_word(g), int_list(g));
    }
    let _ = writeln!(out, "series  = {}", series(&doc.series));
    let _ = writeln!(out, "reduced = {}", reduced_series(&doc.series));
    let _ = writeln!(
        out,
        "numerator is cyclotomic product: {}",
        doc.numerator_is_cyclotomic
    );
    if let Some(h) = &doc.expansion {
        let _ = writeln!(out, "expansion = {}", int_list(h));
    }
    out
}
