//! One line per acceptance criterion. All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{fixture, star, FIXTURES};
use hodge_infinity::curve::{curve_primitives, CurveSpec};
use hodge_infinity::infinity::{infinity_hodge, InfinityHodge};
use hodge_infinity::io::{analyze, compare, Spec};
use hodge_infinity::jconst::{fermat_oracle, j_constant, JConstantKey};
use hodge_infinity::rational::q;
use hodge_infinity::seifert::{
    equivariant_signature, seifert_decomposition, seifert_from_mod2, signature_from_blocks,
    spp_mod2,
};
use hodge_infinity::spectra::{
    aggregate_twisted_check, check_spp_symmetry, conjugation_symmetric, global_st_check,
};
use hodge_infinity::{RootLabel, StarPolynomialSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hodge_of(spec: &Spec) -> InfinityHodge {
    let prim = match spec {
        Spec::Star(s) => hodge_infinity::infinity::primitives_at_infinity(s).unwrap(),
        Spec::Curve(c) => curve_primitives(c).unwrap(),
    };
    InfinityHodge::from_primitive(prim, spec.n())
}

fn curve_worked_example() -> Outcome {
    let h = hodge_of(&Spec::Curve(
        CurveSpec::new(vec![2, 2]).map_err(|e| e.to_string())?,
    ));
    let p = &h.primitive;
    let minus_one = RootLabel::frac(1, 2);
    let checks = [
        ("p^{1,1}_1", p.get(&RootLabel::one(), 1, 1), 1),
        ("p^{1,1}_{-1}", p.get(&minus_one, 1, 1), 1),
        ("h^{0,0}_{-1}", h.full.get(&minus_one, 0, 0), 1),
        (
            "p^{0,1}_{e(-1/6)}",
            p.get(&RootLabel::from_neg_exponent(&q(1, 6)), 0, 1),
            2,
        ),
        (
            "p^{1,0}_{e(-5/6)}",
            p.get(&RootLabel::from_neg_exponent(&q(5, 6)), 1, 0),
            2,
        ),
        ("rank", h.rank, 7),
    ];
    for (name, got, want) in checks {
        ensure(got == want, || format!("{name} = {got}, expected {want}"))?;
    }
    ensure(h.max_jordan_block() == Some((minus_one, 2)), || {
        format!("largest Jordan block {:?}", h.max_jordan_block())
    })?;
    Ok("(2,2): primitives 1,1,2,2; rank 7; largest Jordan block 2 at -1".into())
}

fn zariski_tables() -> Outcome {
    const COLS: [(i64, i64); 5] = [(1, 1), (2, 0), (0, 2), (1, 2), (2, 1)];
    let rows_i = [
        [4, 1, 0, 0, 5],
        [6, 3, 0, 0, 0],
        [7, 1, 1, 0, 0],
        [6, 0, 3, 0, 0],
        [4, 0, 1, 5, 0],
    ];
    let rows_ii = [
        [3, 0, 0, 0, 6],
        [6, 3, 0, 0, 0],
        [7, 1, 1, 0, 0],
        [6, 0, 3, 0, 0],
        [3, 0, 0, 6, 0],
    ];
    for (name, rows) in [("zariski_i", rows_i), ("zariski_ii", rows_ii)] {
        let p = infinity_hodge(&star(name))
            .map_err(|e| e.to_string())?
            .primitive;
        let mut expected_total = 0;
        for (a, b) in [(1, 2), (2, 1)] {
            let got = p.get(&RootLabel::one(), a, b);
            ensure(got == 4, || format!("{name}: p^{{{a},{b}}}_1 = {got}"))?;
            expected_total += 4;
        }
        for (s, row) in (1..=5).zip(rows) {
            for ((a, b), want) in COLS.iter().zip(row) {
                let got = p.get(&RootLabel::frac(s, 6), *a, *b);
                ensure(got == want, || {
                    format!("{name}: s={s} p^{{{a},{b}}} = {got}, expected {want}")
                })?;
                expected_total += want;
            }
        }
        for l in [1, 7, 11, 13, 17, 19, 23, 29] {
            let got = p.get(&RootLabel::frac(l, 30), 1, 1);
            ensure(got == 6, || {
                format!("{name}: p^{{1,1}}_{{e({l}/30)}} = {got}")
            })?;
            expected_total += 6;
        }
        ensure(p.total() == expected_total, || {
            format!(
                "{name}: {} primitive units, table accounts for {expected_total}",
                p.total()
            )
        })?;
    }
    Ok("both cases match the table entry by entry; no other primitives".into())
}

fn jconst_oracle() -> Outcome {
    let mut compared = 0;
    for n in 1..=4 {
        for d in 2..=9 {
            for k in 0..=n + 1 {
                for s in 0..d {
                    let key = JConstantKey::new(n, d, k, s);
                    let (gf, brute) = (j_constant(key), fermat_oracle(n, d, key.degree()));
                    ensure(gf == brute, || {
                        format!("j^{{{n},{d}}}_{{{k},{s}}}: {gf} vs {brute}")
                    })?;
                    compared += 1;
                }
            }
        }
    }
    let spot = (
        j_constant(JConstantKey::new(2, 6, 0, 0)),
        j_constant(JConstantKey::new(2, 6, 1, 1)),
    );
    ensure(spot == (10, 15), || format!("spot values {spot:?}"))?;
    Ok(format!(
        "{compared} keys agree; j^{{2,6}}_{{0,0}} = 10, j^{{2,6}}_{{1,1}} = 15"
    ))
}

fn smooth_rank_law() -> Outcome {
    for n in 1..=3i64 {
        for d in 2..=6i64 {
            let spec = if n == 1 {
                Spec::Curve(CurveSpec::new(vec![1; d as usize]).map_err(|e| e.to_string())?)
            } else {
                Spec::Star(StarPolynomialSpec::smooth(n, d))
            };
            let rank = hodge_of(&spec).rank;
            let want = (d - 1).pow((n + 1) as u32);
            ensure(rank == want, || {
                format!("n={n} d={d}: rank {rank}, expected {want}")
            })?;
        }
    }
    Ok("rank = (d-1)^(n+1) for n in 1..=3, d in 2..=6".into())
}

fn thom_sebastiani() -> Outcome {
    let mut sizes = Vec::new();
    for name in ["zariski_i", "zariski_ii", "smooth_n2_d3"] {
        let c = global_st_check(&star(name)).map_err(|e| e.to_string())?;
        ensure(c.equal, || {
            format!(
                "{name}: lhs {} pairs, rhs {}",
                c.lhs.cardinality(),
                c.rhs.cardinality()
            )
        })?;
        sizes.push(format!("{name} {}", c.lhs.cardinality()));
    }
    Ok(format!(
        "Spp(f + x^d) = Spp(f) * S_d ({})",
        sizes.join(", ")
    ))
}

fn symmetries() -> Outcome {
    for name in FIXTURES {
        let spec = fixture(name);
        let h = hodge_of(&spec);
        let r = check_spp_symmetry(&h.spectral_pairs(), spec.n());
        ensure(r.all(), || format!("{name}: {r:?}"))?;
        ensure(conjugation_symmetric(&h.full), || {
            format!("{name}: conjugation symmetry fails")
        })?;
    }
    Ok(format!(
        "both involutions, spectrum and conjugation symmetry on {} fixtures",
        FIXTURES.len()
    ))
}

fn seifert_consistency() -> Outcome {
    for name in FIXTURES {
        let spec = fixture(name);
        let n = spec.n();
        let h = hodge_of(&spec);
        let dec = seifert_decomposition(&h.primitive, n);
        let direct = equivariant_signature(&h.primitive, n);
        ensure(signature_from_blocks(&dec) == direct, || {
            format!("{name}: signatures differ")
        })?;
        let back = seifert_from_mod2(&spp_mod2(&h.spectral_pairs()), n)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(back == dec, || format!("{name}: mod-2 decoding differs"))?;
    }
    Ok("block signatures equal the closed formula; mod-2 round trip exact on every fixture".into())
}

fn aggregate() -> Outcome {
    let mut units = Vec::new();
    for name in ["zariski_i", "zariski_ii"] {
        let spec = star(name);
        let h = infinity_hodge(&spec).map_err(|e| e.to_string())?;
        let locals = spec.local_spectra().map_err(|e| e.to_string())?;
        let c = aggregate_twisted_check(&h.full, &locals, spec.d).map_err(|e| e.to_string())?;
        ensure(c.equal, || {
            format!("{name}: {} vs {} units", c.lhs.total(), c.rhs.total())
        })?;
        units.push(c.lhs.total().to_string());
    }
    Ok(format!(
        "λ^d ≠ 1 part equals summed twisted suspensions ({} units each)",
        units.join("/")
    ))
}

fn semicontinuity() -> Outcome {
    let r = compare(&fixture("curve_example"), &fixture("smooth_curve_d4"))
        .map_err(|e| e.to_string())?;
    ensure(r.ok, || {
        let bad: Vec<String> = r
            .rows
            .iter()
            .filter(|x| !x.ok)
            .map(|x| x.lower.to_string())
            .collect();
        format!("fails at lower ends {}", bad.join(", "))
    })?;
    let ranks = (
        analyze(&fixture("curve_example")).unwrap().rank,
        analyze(&fixture("smooth_curve_d4")).unwrap().rank,
    );
    Ok(format!(
        "ok on all {} intervals (k/4, k/4+1]; ranks {} vs {}",
        r.rows.len(),
        ranks.0,
        ranks.1
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("curve worked example", curve_worked_example),
        ("Zariski sextic tables", zariski_tables),
        ("j-constants vs Fermat count", jconst_oracle),
        ("smooth rank law", smooth_rank_law),
        ("Thom-Sebastiani at infinity", thom_sebastiani),
        ("spectral pair symmetries", symmetries),
        ("Seifert form consistency", seifert_consistency),
        ("twisted suspension aggregate", aggregate),
        ("spectral semicontinuity", semicontinuity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name} (tolerance 0, {ms} ms): {detail}",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL  {name} (tolerance 0, {ms} ms): {detail}",
                    i + 1
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
