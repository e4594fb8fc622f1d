use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::infinity::InfinityHodge;
use crate::local::local_spectral_pairs;
use crate::seifert::{
    equivariant_signature, seifert_decomposition, seifert_from_mod2, signature_from_blocks,
    spp_mod2,
};
use crate::spectra::{
    aggregate_twisted_check, check_spp_symmetry, conjugation_symmetric, global_st_check,
};
use crate::spp::SppSet;

use super::input::Spec;
use super::report::{milnor_sum, primitive_of};
use super::text_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    fn push(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail: (!ok).then(detail),
        });
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: CheckStatus::NotApplicable,
            detail: Some(why.to_string()),
        });
    }
}

fn first_difference(a: &SppSet, b: &SppSet) -> String {
    match a.difference(b).iter().next() {
        Some((p, m)) => format!("multiplicity of ({}, {}) differs by {m}", p.alpha, p.omega),
        None => "sets agree".to_string(),
    }
}

/// Runs the property suite on one input. Inconsistent input is an error, a
/// failed property is report content.
pub fn selfcheck(spec: &Spec) -> Result<SelfCheckReport> {
    let n = spec.n();
    let d = spec.d();
    let hodge = InfinityHodge::from_primitive(primitive_of(spec)?, n);
    let spp = hodge.spectral_pairs();
    let mut report = SelfCheckReport { checks: Vec::new() };

    let sym = check_spp_symmetry(&spp, n);
    report.push("spectral pair involutions", sym.sym1 && sym.sym2, || {
        format!("sym1 = {}, sym2 = {}", sym.sym1, sym.sym2)
    });
    report.push(
        "spectrum symmetric about (n-1)/2",
        sym.spectrum_symmetric,
        String::new,
    );
    report.push(
        "conjugation symmetry",
        conjugation_symmetric(&hodge.full),
        || {
            let bad = hodge
                .full
                .iter()
                .find(|(k, m)| hodge.full.get(&k.lambda.conjugate(), k.q, k.p) != *m)
                .map(|(k, _)| format!("h^({},{}) at {}", k.p, k.q, k.lambda.neg_convention()));
            bad.unwrap_or_default()
        },
    );

    let expected_rank = (d - 1).pow((n + 1) as u32) - milnor_sum(spec)?;
    report.push(
        "rank = (d-1)^(n+1) - Σμ",
        hodge.rank == expected_rank,
        || format!("rank {} but expected {expected_rank}", hodge.rank),
    );

    let too_big = hodge.jordan.keys().find(|(l, size)| {
        let bound = if l.is_root_of_unity_of_order_dividing(d) {
            n + 1
        } else {
            n
        };
        !l.is_one() && *size > bound
    });
    report.push("Jordan block bounds", too_big.is_none(), || {
        let (l, size) = too_big.unwrap();
        format!("block of size {size} at {}", l.neg_convention())
    });

    match spec {
        Spec::Star(s) => {
            let st = global_st_check(s)?;
            report.push("Thom-Sebastiani at infinity", st.equal, || {
                first_difference(&st.lhs, &st.rhs)
            });
        }
        Spec::Curve(_) => report.skip("Thom-Sebastiani at infinity", "not applicable for n = 1"),
    }

    let locals = match spec {
        Spec::Star(s) => s.local_spectra()?,
        Spec::Curve(c) => c
            .local_models()
            .iter()
            .map(local_spectral_pairs)
            .collect::<Result<_>>()?,
    };
    let agg = aggregate_twisted_check(&hodge.full, &locals, d)?;
    report.push("twisted suspension aggregate", agg.equal, || {
        format!(
            "off-root part has {} units, twisted suspensions {}",
            agg.lhs.total(),
            agg.rhs.total()
        )
    });

    let dec = seifert_decomposition(&hodge.primitive, n);
    report.push(
        "Seifert block mass = rank",
        dec.mass() == hodge.rank,
        || format!("mass {} vs rank {}", dec.mass(), hodge.rank),
    );
    match seifert_from_mod2(&spp_mod2(&spp), n) {
        Ok(back) => report.push("mod-2 round trip", back == dec, || {
            "decoded decomposition differs".to_string()
        }),
        Err(e) => report.push("mod-2 round trip", false, || e.to_string()),
    }
    let direct = equivariant_signature(&hodge.primitive, n);
    let blocks = signature_from_blocks(&dec);
    report.push("signatures from blocks", direct == blocks, || {
        let bad = direct
            .iter()
            .find(|(l, s)| blocks.get(*l) != Some(*s))
            .map(|(l, s)| format!("{}: {s} vs {:?}", l.neg_convention(), blocks.get(l)));
        bad.unwrap_or_default()
    });
    Ok(report)
}

pub fn render_selfcheck(r: &SelfCheckReport) -> String {
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotApplicable => "n/a",
            };
            vec![
                c.name.clone(),
                status.to_string(),
                c.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut out = text_table(&["check", "status", "detail"], &rows);
    let _ = writeln!(
        out,
        "\n{}",
        if r.passed() {
            "all checks passed"
        } else {
            "some checks failed"
        }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveSpec;
    use crate::infinity::StarPolynomialSpec;

    #[test]
    fn curve_checks() {
        let r = selfcheck(&Spec::Curve(CurveSpec::new(vec![2, 2]).unwrap())).unwrap();
        assert!(r.passed(), "{}", render_selfcheck(&r));
        let st = r
            .checks
            .iter()
            .find(|c| c.name.starts_with("Thom"))
            .unwrap();
        assert_eq!(st.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn smooth_checks() {
        let r = selfcheck(&Spec::Star(StarPolynomialSpec::smooth(2, 4))).unwrap();
        assert!(r.passed(), "{}", render_selfcheck(&r));
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Pass));
    }
}
