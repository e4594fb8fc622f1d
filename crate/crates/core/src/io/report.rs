use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::curve::curve_primitives;
use crate::error::{Error, Result};
use crate::hodge::HodgeTable;
use crate::infinity::{jordan_entries, primitives_at_infinity, InfinityHodge, JordanEntry};
use crate::rational::Rational;
use crate::root::RootLabel;
use crate::seifert::{equivariant_signature, seifert_decomposition};
use crate::spectra::{
    check_spp_symmetry, conjugation_symmetric, semicontinuity_report, SemicontinuityReport,
    SymmetryReport,
};
use crate::spp::SppSet;

use super::input::Spec;
use super::text_table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub alpha: Rational,
    pub mult: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub lambda: RootLabel,
    pub eigenvalue: String,
    pub size: i64,
    pub sign: i8,
    pub count: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub lambda: RootLabel,
    pub eigenvalue: String,
    pub signature: i64,
}

/// Everything computed for one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: i64,
    pub d: i64,
    pub milnor_sum: i64,
    pub rank: i64,
    pub primitive: HodgeTable,
    pub full: HodgeTable,
    pub jordan: Vec<JordanEntry>,
    pub max_jordan_block: i64,
    pub spectral_pairs: SppSet,
    pub spectrum: Vec<SpectrumEntry>,
    pub seifert: Vec<BlockEntry>,
    pub signatures: Vec<SignatureEntry>,
    pub symmetry: SymmetryReport,
    pub conjugation_symmetric: bool,
}

pub(crate) fn primitive_of(spec: &Spec) -> Result<HodgeTable> {
    match spec {
        Spec::Star(s) => primitives_at_infinity(s),
        Spec::Curve(c) => curve_primitives(c),
    }
}

pub(crate) fn milnor_sum(spec: &Spec) -> Result<i64> {
    match spec {
        Spec::Star(s) => s.milnor_sum(),
        Spec::Curve(c) => Ok(c.multiplicities().iter().map(|a| a - 1).sum()),
    }
}

pub fn analyze(spec: &Spec) -> Result<ReportDocument> {
    let n = spec.n();
    let hodge = InfinityHodge::from_primitive(primitive_of(spec)?, n);
    let spp = hodge.spectral_pairs();
    let dec = seifert_decomposition(&hodge.primitive, n);
    Ok(ReportDocument {
        n,
        d: spec.d(),
        milnor_sum: milnor_sum(spec)?,
        rank: hodge.rank,
        jordan: jordan_entries(&hodge.jordan),
        max_jordan_block: hodge.max_jordan_block().map_or(0, |(_, s)| s),
        spectrum: spp
            .spectrum()
            .into_iter()
            .map(|(alpha, mult)| SpectrumEntry { alpha, mult })
            .collect(),
        seifert: dec
            .iter()
            .map(|(b, count)| BlockEntry {
                lambda: b.lambda.clone(),
                eigenvalue: b.lambda.neg_convention(),
                size: b.size,
                sign: b.sign,
                count,
            })
            .collect(),
        signatures: equivariant_signature(&hodge.primitive, n)
            .into_iter()
            .map(|(lambda, signature)| SignatureEntry {
                eigenvalue: lambda.neg_convention(),
                lambda,
                signature,
            })
            .collect(),
        symmetry: check_spp_symmetry(&spp, n),
        conjugation_symmetric: conjugation_symmetric(&hodge.full),
        spectral_pairs: spp,
        primitive: hodge.primitive,
        full: hodge.full,
    })
}

fn hodge_rows(t: &HodgeTable) -> Vec<Vec<String>> {
    t.iter()
        .map(|(k, m)| {
            vec![
                k.lambda.label().to_string(),
                k.lambda.neg_convention(),
                k.p.to_string(),
                k.q.to_string(),
                m.to_string(),
            ]
        })
        .collect()
}

const HODGE_HEADERS: [&str; 5] = ["label", "eigenvalue", "p", "q", "mult"];

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_report(r: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, d = {}", r.n, r.d);
    let _ = writeln!(
        out,
        "rank = {}, Milnor numbers at infinity sum to {}",
        r.rank, r.milnor_sum
    );
    let _ = writeln!(out, "largest Jordan block: {}", r.max_jordan_block);

    let _ = writeln!(out, "\nprimitive numbers p^(p,q)_λ");
    out.push_str(&text_table(&HODGE_HEADERS, &hodge_rows(&r.primitive)));
    let _ = writeln!(out, "\nfull numbers h^(p,q)_λ");
    out.push_str(&text_table(&HODGE_HEADERS, &hodge_rows(&r.full)));

    let _ = writeln!(out, "\nJordan blocks");
    let rows: Vec<Vec<String>> = r
        .jordan
        .iter()
        .map(|j| {
            vec![
                j.lambda.label().to_string(),
                j.eigenvalue.clone(),
                j.size.to_string(),
                j.count.to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(
        &["label", "eigenvalue", "size", "count"],
        &rows,
    ));

    let _ = writeln!(out, "\nspectral pairs");
    let rows: Vec<Vec<String>> = r
        .spectral_pairs
        .iter()
        .map(|(p, m)| vec![p.alpha.to_string(), p.omega.to_string(), m.to_string()])
        .collect();
    out.push_str(&text_table(&["alpha", "omega", "mult"], &rows));

    let _ = writeln!(out, "\nspectrum");
    let rows: Vec<Vec<String>> = r
        .spectrum
        .iter()
        .map(|s| vec![s.alpha.to_string(), s.mult.to_string()])
        .collect();
    out.push_str(&text_table(&["alpha", "mult"], &rows));

    let _ = writeln!(out, "\nSeifert form blocks W^size_λ(sign)");
    let rows: Vec<Vec<String>> = r
        .seifert
        .iter()
        .map(|b| {
            vec![
                b.lambda.label().to_string(),
                b.eigenvalue.clone(),
                b.size.to_string(),
                format!("{:+}", b.sign),
                b.count.to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(
        &["label", "eigenvalue", "size", "sign", "count"],
        &rows,
    ));

    let _ = writeln!(out, "\nequivariant signatures");
    let rows: Vec<Vec<String>> = r
        .signatures
        .iter()
        .map(|s| {
            vec![
                s.lambda.label().to_string(),
                s.eigenvalue.clone(),
                s.signature.to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(&["label", "eigenvalue", "signature"], &rows));

    let _ = writeln!(out, "\nsymmetries");
    let rows = vec![
        vec![
            "(α, n+k) ↔ (α+k, n-k)".to_string(),
            yes_no(r.symmetry.sym1).to_string(),
        ],
        vec![
            "(α, n+k) ↔ (n-1-α, n-k)".to_string(),
            yes_no(r.symmetry.sym2).to_string(),
        ],
        vec![
            "spectrum about (n-1)/2".to_string(),
            yes_no(r.symmetry.spectrum_symmetric).to_string(),
        ],
        vec![
            "h^(a,b)_λ = h^(b,a)_conj(λ)".to_string(),
            yes_no(r.conjugation_symmetric).to_string(),
        ],
    ];
    out.push_str(&text_table(&["property", "holds"], &rows));
    out
}

/// Semicontinuity of the spectrum of `a` against `b`, viewed as a deformation of `a`.
pub fn compare(a: &Spec, b: &Spec) -> Result<SemicontinuityReport> {
    if a.d() != b.d() {
        return Err(Error::validation(
            "d",
            format!("degrees differ: {} and {}", a.d(), b.d()),
        ));
    }
    if a.n() != b.n() {
        return Err(Error::validation(
            "n",
            format!("dimensions differ: {} and {}", a.n(), b.n()),
        ));
    }
    let spp = |s: &Spec| -> Result<SppSet> {
        Ok(InfinityHodge::from_primitive(primitive_of(s)?, s.n()).spectral_pairs())
    };
    Ok(semicontinuity_report(&spp(a)?, &spp(b)?, a.d()))
}

pub fn render_comparison(r: &SemicontinuityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "spectral semicontinuity, d = {}: {}",
        r.d,
        if r.ok { "ok" } else { "violated" }
    );
    let _ = writeln!(out, "\nintervals (k/d, k/d + 1]");
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            vec![
                format!("({}, {}]", row.lower, row.lower.add_int(1)),
                row.s_f.to_string(),
                row.s_def.to_string(),
                yes_no(row.ok).to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(&["interval", "first", "second", "ok"], &rows));
    let _ = writeln!(out, "\nother unit intervals (informational)");
    let rows: Vec<Vec<String>> = r
        .informational
        .iter()
        .map(|row| {
            let interval = match row.kind {
                crate::spectra::IntervalKind::LeftOpen => {
                    format!("({}, {}]", row.lower, row.lower.add_int(1))
                }
                crate::spectra::IntervalKind::RightOpen => {
                    format!("[{}, {})", row.lower, row.lower.add_int(1))
                }
            };
            vec![
                interval,
                row.s_f.to_string(),
                row.s_def.to_string(),
                yes_no(row.ok).to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(&["interval", "first", "second", "ok"], &rows));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveSpec;

    #[test]
    fn curve_report() {
        let r = analyze(&Spec::Curve(CurveSpec::new(vec![2, 2]).unwrap())).unwrap();
        assert_eq!(r.rank, 7);
        assert_eq!(r.max_jordan_block, 2);
        assert_eq!(r.milnor_sum, 2);
        assert!(r.symmetry.all() && r.conjugation_symmetric);
        let text = render_report(&r);
        assert!(text.contains("rank = 7"));
        assert!(text.contains("e(-1/6)"));
    }

    #[test]
    fn json_round_trip() {
        let r = analyze(&Spec::Curve(CurveSpec::new(vec![3, 1, 2]).unwrap())).unwrap();
        let json = serde_json::to_string_pretty(&r).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
    }

    #[test]
    fn compare_needs_equal_degree() {
        let a = Spec::Curve(CurveSpec::new(vec![2, 2]).unwrap());
        let b = Spec::Curve(CurveSpec::new(vec![1, 1, 1]).unwrap());
        assert!(compare(&a, &b).is_err());
    }
}
