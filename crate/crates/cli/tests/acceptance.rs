//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always show.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use novikov_cli::{execute, parse, Cli};
use novikov_core::exactcore::rat;
use novikov_core::fixtures::{exnov1, zinb_deriv, zinb_nonderiv};
use novikov_core::liewindow::{
    affine_bracket, cobracket_component, polyalg_window_check, window_lie_bialgebra_check, LaurentVector, Window,
    WindowSpec,
};
use novikov_core::pipeline::{annotated_locus, ZinbielPipeline};
use novikov_core::ybe::{canonical_r, nybe_residual};
use novikov_core::{Poly, Presentation, Rational, Tensor};
use novikov_testkit::controls::{all_ids, controls};
use novikov_testkit::suites;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn load(name: &str) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(fixture(name)).map_err(|e| e.to_string())?;
    parse(&text).map_err(|e| format!("{name}: {e}"))
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let cli = Cli::try_parse_from(std::iter::once("novikov").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    let out = execute(&cli);
    Ok((out.code, out.stdout + &out.stderr))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(s: impl std::fmt::Display) -> String {
    s.to_string()
}

fn c(n: i64, d: i64) -> Poly {
    Poly::constant(rat(n, d))
}

fn criterion1() -> Check {
    let ex = fixture("exnov1");
    let ex = ex.to_str().unwrap();
    let (code, out) = cli(&["verify", ex, "--profile", "diff-asi"])?;
    ensure(code == 0, || format!("verify exited {code}:\n{out}"))?;
    let (code, out) = cli(&["induce", ex, "--q", "-1/2"])?;
    ensure(code == 0, || format!("induce exited {code}:\n{out}"))?;

    let expected = parse(
        "space e1 e2\nproduct circ\n  e1 e1 -> -1/2*e1\n  e1 e2 -> e2\n  e2 e1 -> -1/2*e2\n\
         coproduct Delta\n  e2 -> -1/2*e2 (x) e2\n",
    )
    .map_err(e)?;
    let (circ, delta) = novikov_core::bialgebra::induce(&exnov1(), &c(-1, 2)).map_err(e)?;
    // The product table has four entries, e2∘e2 = 0 among them; compare all of them.
    let want = expected.product("circ").map_err(e)?;
    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        ensure(circ.product(i, j) == want.product(i, j), || format!("e{}∘e{} differs", i + 1, j + 1))?;
    }
    ensure(&delta == expected.coproduct("Delta").map_err(e)?, || "Δ table differs".into())?;
    ensure(out.contains("e2 -> -1/2*e2 (x) e2") && out.contains("e2 e1 -> -1/2*e2"), || {
        format!("induce output lacks the table:\n{out}")
    })
}

fn criterion2() -> Check {
    let pipe = ZinbielPipeline::new(&zinb_nonderiv()).map_err(e)?;
    let double = pipe.asi_bialgebra();
    ensure(&load("examp2-double")? == double, || "fixture differs from the constructed double".into())?;
    let report = annotated_locus(double).map_err(e)?;
    let mut pts = report.locus.points.clone();
    pts.sort();
    ensure(!report.locus.is_all() && pts == vec![rat(-1, 1), rat(-1, 2)], || format!("locus {}", report.locus))?;
    ensure(!report.locus.nonrational_flag, || "nonrational flag set".into())?;
    ensure(pipe.coincides_at(&rat(-1, 2)).map_err(e)?, || "routes differ at -1/2".into())?;
    ensure(!pipe.coincides_at(&rat(-1, 1)).map_err(e)?, || "routes agree at -1".into())?;
    let co = pipe.coincidence_locus().map_err(e)?;
    ensure(co.points == vec![rat(-1, 2)] && !co.is_all(), || format!("coincidence locus {co}"))?;
    let (code, out) = cli(&["locus", fixture("examp2-double").to_str().unwrap()])?;
    ensure(code == 0 && out.contains("locus: {-1/2, -1}\n"), || format!("locus command exited {code}:\n{out}"))
}

fn criterion3() -> Check {
    let pipe = ZinbielPipeline::new(&zinb_deriv()).map_err(e)?;
    let double = pipe.asi_bialgebra();
    ensure(&load("zinb-deriv-double")? == double, || "fixture differs from the constructed double".into())?;
    let report = annotated_locus(double).map_err(e)?;
    ensure(report.locus.is_all(), || format!("locus {}", report.locus))?;
    let q = Poly::q();
    ensure(pipe.semidirect_path(&q).map_err(e)? == pipe.double_induced_path(&q).map_err(e)?, || {
        "the two routes differ as polynomials".into()
    })?;
    let (code, out) = cli(&["locus", fixture("zinb-deriv-double").to_str().unwrap()])?;
    ensure(code == 0 && out.contains("locus: all q\n"), || format!("locus command exited {code}:\n{out}"))
}

fn criterion4() -> Check {
    for (name, z, q) in [("zinb-deriv", zinb_deriv(), Poly::q()), ("zinb-nonderiv", zinb_nonderiv(), c(-1, 2))] {
        ensure(load(name)? == z, || format!("{name} fixture differs"))?;
        let pipe = ZinbielPipeline::new(&z).map_err(e)?;
        let (circ, _) = pipe.semidirect_path(&q).map_err(e)?;
        let res = nybe_residual(&canonical_r(z.dim()), &circ).map_err(e)?;
        ensure(res.is_zero(), || format!("{name}: nonzero residual"))?;
    }
    Ok(())
}

fn criterion5() -> Check {
    let b = polyalg_window_check(8, &Poly::q()).map_err(e)?;
    ensure(b.holds(), || format!("{b:?}"))
}

fn criterion6() -> Check {
    let q = c(-1, 2);
    let spec = WindowSpec::new(-3, 3, q.clone()).map_err(e)?;
    let w = Window::new(&exnov1(), spec.clone()).map_err(e)?;
    let e1 = Tensor::basis(2, 0);
    let e2 = Tensor::basis(2, 1);
    let lv = |base: &Tensor, degree| LaurentVector { base: base.clone(), degree };
    for m in -3..=3i64 {
        for n in -3..=3i64 {
            let mn = Rational::from_integer(m.into());
            let nn = Rational::from_integer(n.into());
            let cases = [
                (&e1, &e1, e1.scale(&Poly::constant(rat(-1, 2) * (&mn - &nn)))),
                (&e1, &e2, e2.scale(&Poly::constant(&mn + nn.clone() / Rational::from_integer(2.into())))),
                (&e2, &e2, Tensor::zeros(&[2])),
            ];
            for (a, b, want) in cases {
                let got = affine_bracket(&lv(a, m), &lv(b, n), &w.circ).map_err(e)?;
                ensure(got.degree == m + n - 1 && got.base == want, || format!("bracket at m={m}, n={n}"))?;
            }
            // δ_L(e2 tᵐ) has e2 t^{-i-2} ⊗ e2 t^{m+i} with coefficient (-i-1-m/2).
            let (j, i) = (n, -n - 2);
            let k = m + i;
            let got = cobracket_component(&e2, m, j, k, &w.delta).map_err(e)?;
            let coef = Rational::from_integer((-i - 1).into()) - mn.clone() / Rational::from_integer(2.into());
            let want = Tensor::outer(&e2, &e2).scale(&Poly::constant(coef));
            ensure(got == want, || format!("cobracket of e2 t^{m} at ({j}, {k})"))?;
            let zero = cobracket_component(&e1, m, j, k, &w.delta).map_err(e)?;
            ensure(zero.is_zero(), || format!("cobracket of e1 t^{m} is nonzero"))?;
        }
    }
    let b = window_lie_bialgebra_check(&exnov1(), spec).map_err(e)?;
    ensure(b.holds(), || format!("{b:?}"))?;
    let (code, out) =
        cli(&["window", fixture("exnov1").to_str().unwrap(), "--q", "-1/2", "--min", "-3", "--max", "3"])?;
    ensure(code == 0, || format!("window command exited {code}:\n{out}"))
}

fn criterion7() -> Check {
    let cases = 200;
    let runs = [
        suites::constr2(cases),
        suites::semidirect_novikov_iff(cases),
        suites::semidirect_admdiff_iff(cases),
        suites::novikov_oop_iff(cases),
        suites::novikov_oop_fixtures(cases),
        suites::admissible_oop_iff(cases),
        suites::induced_oop(cases),
        suites::oop_ybe_square(cases),
        suites::oracle(cases),
        suites::specialization(cases),
    ];
    for o in &runs {
        println!("    {}", o.summary());
    }
    let failed: Vec<_> = runs.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
    ensure(failed.is_empty(), || format!("failed suites: {}", failed.join(", ")))
}

fn criterion8() -> Check {
    let cs = controls();
    for id in all_ids() {
        ensure(cs.iter().any(|c| c.id == id), || format!("{id} has no failing control"))?;
    }
    for ctl in &cs {
        if let Some(m) = ctl.mismatch() {
            return Err(m);
        }
        let a = ctl.report().map_err(e)?;
        let b = ctl.report().map_err(e)?;
        ensure(a.witness == b.witness, || format!("{}: witness differs between runs", ctl.id))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 worked example: verify and induce at q = -1/2", criterion1, Duration::from_millis(100)),
        ("2 double locus {-1/2, -1} and route coincidence", criterion2, Duration::from_secs(5)),
        ("3 derivation double: all q, routes agree", criterion3, Duration::from_secs(5)),
        ("4 canonical r solves NYBE", criterion4, Duration::from_secs(2)),
        ("5 polynomial algebra window N = 8", criterion5, Duration::from_secs(10)),
        ("6 completed Lie bialgebra window [-3, 3]", criterion6, Duration::from_secs(2)),
        ("7 property suites, 200 cases each", criterion7, Duration::from_secs(60)),
        ("8 negative controls", criterion8, Duration::from_secs(60)),
    ];
    let mut all_ok = true;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let verdict = match (&result, took <= budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget of {:.1}s)", budget.as_secs_f64()),
            (Err(m), _) => format!("FAIL: {m}"),
        };
        all_ok &= verdict == "PASS";
        println!("criterion {name}: {verdict} [{:.3}s]", took.as_secs_f64());
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
