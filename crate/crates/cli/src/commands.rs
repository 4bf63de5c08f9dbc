//! Command implementations. Each returns a [`Run`]: the text report, its
//! JSON form and the exit code.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use novikov_core::bialgebra::{
    check_diff_asi_bialgebra, check_manin_triple, check_novikov_bialgebra, double_construction, frobenius_check,
    quadratic_novikov_check, SplitPresentation,
};
use novikov_core::constructions::{induce_nov_coalg, induce_novikov};
use novikov_core::liewindow::{polyalg_window_check, window_lie_bialgebra_check, WindowSpec};
use novikov_core::pipeline::{annotated_locus, check_adm_diff_zinbiel, ZinbielPipeline};
use novikov_core::structures::{check_all, is_admissible_quadruple, Env, Presentation};
use novikov_core::ybe::{check_aybe, check_nybe, r_admissibility};
use novikov_core::{Bundle, Error, Poly, Rational, Ring};
use serde_json::{json, Value};

use crate::format::{emit, parse};
use crate::report::{bundle_json, bundle_text, locus_json, locus_text, presentation_summary, Naming};
use crate::scalar::{parse_q, parse_rational_arg};

#[derive(Parser, Debug)]
#[command(name = "novikov", version, about = "Exact checks and constructions for Novikov-type bialgebras")]
pub struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Novikov,
    Zinbiel,
    DiffAsi,
    NovikovBialgebra,
    Manin,
    Quadratic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum YbeCheck {
    Aybe,
    Nybe,
    Admissible,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a presentation against an axiom profile.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        profile: Profile,
        /// Specialize a `Q[q]` file at this value first.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Induce `(∘_q, Δ_q)` from a differential ASI bialgebra or an admissible quadruple.
    Induce {
        file: PathBuf,
        /// A rational, or `sym` to keep `q` symbolic.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Second parameter of `∘_{p,q}`; defaults to 1.
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Frobenius double of a differential ASI bialgebra, or the differential
    /// ASI bialgebra on `A ⊕ A*` of an admissible differential Zinbiel algebra.
    Double {
        file: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Yang-Baxter checks for a named element.
    Ybe {
        file: PathBuf,
        #[arg(long)]
        r: String,
        #[arg(long, value_enum)]
        check: YbeCheck,
    },
    /// Values of `q` where the induced pair is a Novikov bialgebra.
    Locus { file: PathBuf },
    /// Lie bialgebra identities on a degree window of `A ⊗ k[t, t⁻¹]`.
    Window {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
    },
    /// Novikov bialgebra identities of the polynomial family up to degree `N`.
    Polywindow {
        #[arg(long = "N", value_name = "N")]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

pub struct Run {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

#[derive(Debug)]
pub enum Failure {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1: a precondition check failed.
    Check(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PreconditionFailed(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

pub fn load(path: &Path) -> Res<Presentation> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_emit(path: Option<&PathBuf>, p: &Presentation) -> Res<()> {
    if let Some(path) = path {
        fs::write(path, emit(p)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn q_arg(s: &str) -> Res<Poly> {
    parse_q(s).map_err(Failure::Usage)
}

fn ring_for(p: &Presentation, q: &Poly) -> Ring {
    if p.ring == Ring::Poly || !q.is_constant() {
        Ring::Poly
    } else {
        Ring::Rational
    }
}

/// Specializes a symbolic file at a rational `q`; leaves it alone for `sym`.
fn specialize(p: Presentation, q: &Poly) -> Presentation {
    match q.as_constant() {
        Some(q0) if p.ring == Ring::Poly => p.eval_q(&q0),
        _ => p,
    }
}

/// Copy of `p` where each role names a component: the component of that
/// name, or the only one of its kind.
fn bind_roles(
    p: &Presentation,
    products: &[&str],
    coproducts: &[&str],
    maps: &[&str],
    forms: &[&str],
) -> Res<Presentation> {
    fn pick<'a, T>(kind: &str, role: &str, all: &'a std::collections::BTreeMap<String, T>) -> Res<&'a T> {
        all.get(role)
            .or_else(|| if all.len() == 1 { all.values().next() } else { None })
            .ok_or_else(|| Failure::Usage(format!("needs a {kind} named `{role}`")))
    }
    let mut out = Presentation::new(p.space.clone(), p.ring);
    for r in products {
        out = out.with_product(r, pick("product", r, &p.products)?.clone());
    }
    for r in coproducts {
        out = out.with_coproduct(r, pick("coproduct", r, &p.coproducts)?.clone());
    }
    for r in maps {
        let m = p.maps.get(*r).ok_or_else(|| Failure::Usage(format!("needs a map named `{r}`")))?;
        out = out.with_map(r, m.clone());
    }
    for r in forms {
        out = out.with_form(r, pick("form", r, &p.forms)?.clone());
    }
    Ok(out)
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn finish(command: &str, header: String, bundles: &[(&Bundle, Naming<'_>)], extra: Value, code: i32) -> Run {
    let mut text = header;
    for (b, naming) in bundles {
        text.push_str(&bundle_text(b, *naming));
    }
    let ok = code == 0;
    if let Some(body) = extra.get("text").and_then(Value::as_str) {
        text.push_str(body);
    }
    text.push_str(&format!("result: {}\n", verdict_word(ok)));
    let json = json!({
        "command": command,
        "result": verdict_word(ok),
        "exit_code": code,
        "bundles": bundles.iter().map(|(b, n)| bundle_json(b, *n)).collect::<Vec<_>>(),
        "details": extra,
    });
    Run { text, json, code }
}

fn header(file: &Path, p: &Presentation) -> String {
    format!("{}: {}\n", file.display(), presentation_summary(p))
}

pub fn run(cmd: &Command) -> Res<Run> {
    match cmd {
        Command::Verify { file, profile, q } => verify(file, *profile, q.as_deref()),
        Command::Induce { file, q, p, emit } => induce(file, q, p.as_deref(), emit.as_ref()),
        Command::Double { file, emit } => double(file, emit.as_ref()),
        Command::Ybe { file, r, check } => ybe(file, r, *check),
        Command::Locus { file } => locus(file),
        Command::Window { file, q, min, max } => window(file, q, *min, *max),
        Command::Polywindow { n, q } => polywindow(*n, q),
    }
}

fn verify(file: &Path, profile: Profile, q: Option<&str>) -> Res<Run> {
    let mut p = load(file)?;
    if let Some(q) = q {
        p = specialize(p, &q_arg(q)?);
    }
    let n = p.dim();
    let b = match profile {
        Profile::Novikov => {
            let p = bind_roles(&p, &["circ"], &[], &[], &[])?;
            let env = Env::new(n).op("circ", p.product("circ")?).ring(p.ring);
            check_all("Novikov algebra", &["NOV_LSYM", "NOV_RCOMM"], &env)?
        }
        Profile::Zinbiel => {
            if p.maps.contains_key("D") && p.maps.contains_key("Q") {
                check_adm_diff_zinbiel(&bind_roles(&p, &["diamond"], &[], &["D", "Q"], &[])?)?
            } else {
                let p = bind_roles(&p, &["diamond"], &[], &[], &[])?;
                let env = Env::new(n).op("diamond", p.product("diamond")?).ring(p.ring);
                check_all("Zinbiel algebra", &["ZINBIEL"], &env)?
            }
        }
        Profile::DiffAsi => check_diff_asi_bialgebra(&bind_roles(&p, &["dot"], &["delta"], &["D", "Q"], &[])?)?,
        Profile::NovikovBialgebra => {
            let b = bind_roles(&p, &["circ"], &["Delta"], &[], &[])?;
            check_novikov_bialgebra(b.product("circ")?, b.coproduct("Delta")?, p.ring)?
        }
        Profile::Manin => {
            if n % 2 != 0 {
                return Err(Failure::Usage(format!("a Manin triple needs an even dimension, got {n}")));
            }
            let b = bind_roles(&p, &["circ"], &[], &[], &[])?;
            let sp = SplitPresentation { total: b.clone(), dim_a: n / 2 };
            check_manin_triple(&sp, b.product("circ")?)?
        }
        Profile::Quadratic => {
            let b = bind_roles(&p, &["circ"], &[], &[], &["B"])?;
            quadratic_novikov_check(b.product("circ")?, b.form("B")?, p.ring)?
        }
    };
    let code = if b.holds() { 0 } else { 1 };
    let extra = json!({ "file": file.display().to_string(), "profile": format!("{profile:?}") });
    Ok(finish("verify", header(file, &p), &[(&b, Naming::Basis(&p.space))], extra, code))
}

fn induce(file: &Path, q: &str, p_arg: Option<&str>, out: Option<&PathBuf>) -> Res<Run> {
    let q = q_arg(q)?;
    let pv: Rational = match p_arg {
        Some(s) => parse_rational_arg(s).map_err(Failure::Usage)?,
        None => Rational::from_integer(1.into()),
    };
    let src = specialize(load(file)?, &q);
    let has_delta = src.coproducts.contains_key("delta");
    let coproducts: &[&str] = if has_delta { &["delta"] } else { &[] };
    let p = bind_roles(&src, &["dot"], coproducts, &["D", "Q"], &[])?;
    let (dot, d, qm) = (p.product("dot")?, p.map("D")?, p.map("Q")?);
    let n = p.dim();
    let mut env = Env::new(n).op("dot", dot).map("D", d).map("Q", qm).ring(p.ring);
    if let Some(delta) = p.coproducts.get("delta") {
        env = env.coop("delta", delta);
    }
    let mut pre = is_admissible_quadruple(&env)?;
    if has_delta {
        pre.extend(check_all("", &["COCOMM", "COASSOC", "CODERIV", "CO_ADMISS"], &env)?);
    }
    let head = header(file, &src);
    let naming = Naming::Basis(&p.space);
    if !pre.holds() {
        let extra = json!({ "file": file.display().to_string(), "text": "preconditions fail; nothing induced\n" });
        return Ok(finish("induce", head, &[(&pre, naming)], extra, 1));
    }
    let ring = ring_for(&p, &q);
    let circ = induce_novikov(dot, d, qm, &pv, &q)?;
    let mut induced = Presentation::new(p.space.clone(), ring).with_product("circ", circ);
    let mut ids = vec!["NOV_LSYM", "NOV_RCOMM"];
    if let Some(delta) = p.coproducts.get("delta") {
        induced = induced.with_coproduct("Delta", induce_nov_coalg(delta, qm, d, &q)?);
        ids.extend(["NOV_COALG_1", "NOV_COALG_2"]);
    }
    let post = {
        let mut env = Env::new(n).op("circ", induced.product("circ")?).ring(ring);
        if let Some(c) = induced.coproducts.get("Delta") {
            env = env.coop("Delta", c);
        }
        check_all("induced Novikov structure", &ids, &env)?
    };
    write_emit(out, &induced)?;
    let body =
        format!("induced at q = {q}, p = {}:\n{}", novikov_core::exactcore::poly::fmt_rational(&pv), emit(&induced));
    let code = if post.holds() { 0 } else { 1 };
    let extra = json!({
        "file": file.display().to_string(),
        "q": q.to_string(),
        "p": novikov_core::exactcore::poly::fmt_rational(&pv),
        "induced": emit(&induced),
        "text": body,
    });
    Ok(finish("induce", head, &[(&pre, naming), (&post, naming)], extra, code))
}

fn double(file: &Path, out: Option<&PathBuf>) -> Res<Run> {
    let p = load(file)?;
    let head = header(file, &p);
    let naming = Naming::Basis(&p.space);
    let (pre, result) = if p.products.contains_key("diamond") {
        let z = bind_roles(&p, &["diamond"], &[], &["D", "Q"], &[])?;
        let pre = check_adm_diff_zinbiel(&z)?;
        let result = if pre.holds() { Some(ZinbielPipeline::new(&z)?.asi_bialgebra().clone()) } else { None };
        (pre, result)
    } else {
        let b = bind_roles(&p, &["dot"], &["delta"], &["D", "Q"], &[])?;
        let pre = check_diff_asi_bialgebra(&b)?;
        let result = if pre.holds() { Some(double_construction(&b)?.total) } else { None };
        (pre, result)
    };
    let Some(result) = result else {
        let extra = json!({ "file": file.display().to_string(), "text": "preconditions fail; nothing built\n" });
        return Ok(finish("double", head, &[(&pre, naming)], extra, 1));
    };
    let post = if result.forms.contains_key("B") {
        let dot = result.product("dot")?;
        let mut b = frobenius_check(dot, result.form("B")?, result.ring)?;
        let env = Env::new(result.dim()).op("dot", dot).map("D", result.map("D")?).map("Q", result.map("Q")?);
        b.extend(is_admissible_quadruple(&env.ring(result.ring))?);
        b
    } else {
        check_diff_asi_bialgebra(&result)?
    };
    write_emit(out, &result)?;
    let code = if post.holds() { 0 } else { 1 };
    let extra = json!({
        "file": file.display().to_string(),
        "double": emit(&result),
        "text": format!("double: {}\n", presentation_summary(&result)),
    });
    Ok(finish("double", head, &[(&pre, naming), (&post, Naming::Basis(&result.space))], extra, code))
}

fn ybe(file: &Path, r_name: &str, check: YbeCheck) -> Res<Run> {
    let p = load(file)?;
    let r = p.relements.get(r_name).ok_or_else(|| Failure::Usage(format!("no relement named `{r_name}`")))?;
    let mut b = Bundle::new(format!("{check:?} for `{r_name}`").to_lowercase());
    match check {
        YbeCheck::Aybe => b.push(check_aybe(r, bind_roles(&p, &["dot"], &[], &[], &[])?.product("dot")?, p.ring)?),
        YbeCheck::Nybe => b.push(check_nybe(r, bind_roles(&p, &["circ"], &[], &[], &[])?.product("circ")?, p.ring)?),
        YbeCheck::Admissible => {
            let bound = bind_roles(&p, &["dot"], &[], &["D", "Q"], &[])?;
            b.push(check_aybe(r, bound.product("dot")?, p.ring)?);
            b.push(r_admissibility(r, bound.map("D")?, bound.map("Q")?)?);
        }
    }
    let code = if b.holds() { 0 } else { 1 };
    let extra = json!({ "file": file.display().to_string(), "relement": r_name });
    Ok(finish("ybe", header(file, &p), &[(&b, Naming::Basis(&p.space))], extra, code))
}

fn locus(file: &Path) -> Res<Run> {
    let p = load(file)?;
    let head = header(file, &p);
    let (asi, coincide) = if p.products.contains_key("diamond") {
        let pl = ZinbielPipeline::new(&bind_roles(&p, &["diamond"], &[], &["D", "Q"], &[])?)?;
        let c = pl.coincidence_locus()?;
        (pl.asi_bialgebra().clone(), Some(c))
    } else {
        (bind_roles(&p, &["dot"], &["delta"], &["D", "Q"], &[])?, None)
    };
    let rep = annotated_locus(&asi)?;
    let mut body = format!("locus: {}\n", locus_text(&rep.locus));
    for pt in &rep.points {
        body.push_str(&format!("  q = {}: {}\n", novikov_core::exactcore::poly::fmt_rational(&pt.q), pt.annotation()));
    }
    if let Some(c) = &coincide {
        body.push_str(&format!("routes coincide: {}\n", locus_text(c)));
    }
    let code = if rep.locus.is_empty() { 1 } else { 0 };
    let extra = json!({
        "file": file.display().to_string(),
        "locus": locus_json(&rep.locus),
        "double_induced": locus_json(&rep.induced_locus),
        "points": rep.points.iter().map(|pt| json!({
            "q": novikov_core::exactcore::poly::fmt_rational(&pt.q),
            "annotation": pt.annotation(),
        })).collect::<Vec<_>>(),
        "routes_coincide": coincide.as_ref().map(locus_json),
        "text": body,
    });
    Ok(finish("locus", head, &[(&rep.bundle, Naming::Basis(&asi.space))], extra, code))
}

fn window(file: &Path, q: &str, min: i64, max: i64) -> Res<Run> {
    let q = q_arg(q)?;
    let p = specialize(load(file)?, &q);
    let bound = bind_roles(&p, &["dot"], &["delta"], &["D", "Q"], &[])?;
    let b = window_lie_bialgebra_check(&bound, WindowSpec::new(min, max, q.clone())?)?;
    let code = if b.holds() { 0 } else { 1 };
    let extra = json!({ "file": file.display().to_string(), "q": q.to_string(), "min": min, "max": max });
    Ok(finish("window", header(file, &p), &[(&b, Naming::Raw)], extra, code))
}

fn polywindow(n: usize, q: &str) -> Res<Run> {
    let q = q_arg(q)?;
    let b = polyalg_window_check(n, &q)?;
    let code = if b.holds() { 0 } else { 1 };
    let extra = json!({ "N": n, "q": q.to_string() });
    Ok(finish("polywindow", String::new(), &[(&b, Naming::Raw)], extra, code))
}
