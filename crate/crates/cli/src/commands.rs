//! Command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use folia_core::algebra::rat::to_plain_string;
use folia_core::algebra::{LinePoint, MPoly, Mono, Rat, Ring};
use folia_core::forms::{rot, PolyForm};
use folia_core::ideal::{hilbert_data, intersect, saturation, HilbertData, Ideal, LocalMultiplicity};
use folia_core::lab::{
    self, affine_decomposition, classify_point, isolated_count, jet_classify, koszul_generators, milnor, milnor_affine,
    milnor_field, milnor_rot, nk_count, nk_divisor, singular_scheme, CurveComponent, JetVerdict, LabConfig, NKDivisor,
};
use folia_core::residue::{bb_residue, bb_sum_check, chern_radial, euler_char_rrh, transversal_model, BBResidue};

use crate::dsl::Space;
use crate::model::{ComponentSpec, Model, ModelError};
use crate::report::{polys_json, rat_json, rats_json, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("{0}")]
    Input(String),
}

impl From<lab::LabError> for CliError {
    fn from(e: lab::LabError) -> Self {
        CliError::Model(e.into())
    }
}

impl From<folia_core::ideal::IdealError> for CliError {
    fn from(e: folia_core::ideal::IdealError) -> Self {
        CliError::Model(e.into())
    }
}

impl From<folia_core::residue::ResidueError> for CliError {
    fn from(e: folia_core::residue::ResidueError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<folia_core::forms::FormError> for CliError {
    fn from(e: folia_core::forms::FormError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "folia", version, about = "Singular sets of codimension-one foliations on projective 3-space")]
pub struct Cli {
    /// Also write a structured report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads for per-component work.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document and its declared components.
    Check { file: PathBuf },
    /// Singular scheme and declared components.
    Singular { file: PathBuf },
    /// Kupka or non-Kupka, with the simple subclass.
    Classify {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Non-Kupka divisor on parametrized components.
    NkDivisor {
        file: PathBuf,
        #[arg(long)]
        component: Option<String>,
    },
    /// Degree bookkeeping for the non-Kupka divisor on a curve.
    NkCount {
        file: PathBuf,
        #[arg(long)]
        component: String,
    },
    /// Milnor number of the form and of its rotational at a point.
    Milnor {
        file: PathBuf,
        #[arg(long)]
        point: String,
        /// Degree cap for the local standard basis.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Length of the zero-dimensional part off the curve part.
    IsolatedCount {
        file: PathBuf,
        /// Curve part; defaults to the union of all components.
        #[arg(long)]
        component: Option<String>,
    },
    /// Baum-Bott residues along the declared curve components.
    Residues { file: PathBuf },
    /// Compare the residue sum with (d+2)^2.
    SumCheck { file: PathBuf },
    /// Jet-level trichotomy at the origin or at a point.
    Jet {
        file: PathBuf,
        #[arg(long)]
        point: Option<String>,
    },
    /// Truncated first integral of a nonsingular form or of a declared pullback.
    FirstIntegral {
        file: PathBuf,
        #[arg(long, default_value_t = lab::DEFAULT_FIRST_INTEGRAL_CAP)]
        cap: u32,
    },
    /// Tangent generators rot(omega) and S with i_X i_S dV = omega.
    Koszul {
        file: PathBuf,
        #[arg(long, default_value_t = lab::DEFAULT_KOSZUL_CAP)]
        cap: u32,
        #[arg(long)]
        point: Option<String>,
    },
    /// Chern data for a foliation of degree d.
    Chern {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        /// Square of (1 + (d+2)/2 h) for radial transversal type.
        #[arg(long)]
        radial: bool,
    },
    /// Euler characteristic of a rank-2 bundle on the plane by Riemann-Roch.
    Rrh {
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
}

fn load(path: &Path) -> Result<Model, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    Model::from_source(&src).map_err(|e| match e {
        ModelError::Syntax(s) => CliError::Input(format!("{}: {s}", path.display())),
        other => CliError::Model(other),
    })
}

fn point_string(p: &[Rat], sep: &str) -> String {
    format!("[{}]", p.iter().map(to_plain_string).collect::<Vec<_>>().join(sep))
}

fn hilbert_poly_string(h: &HilbertData) -> String {
    let ring = Ring::new(&["s"]);
    let terms = h.hilbert_poly.coeffs().iter().enumerate().map(|(i, c)| (Mono::from_exps(vec![i as u32]), c.clone()));
    MPoly::from_terms(&ring, terms).to_string()
}

fn hilbert_json(h: &HilbertData) -> Value {
    json!({
        "dim": h.dim_proj,
        "degree": h.degree,
        "p_a": h.p_a,
        "hilbert_polynomial": rats_json(h.hilbert_poly.coeffs()),
    })
}

fn hilbert_line(h: &HilbertData) -> String {
    let mut s = format!("dim {}, degree {}", h.dim_proj, h.degree);
    if let Some(g) = h.p_a {
        s.push_str(&format!(", p_a {g}"));
    }
    s
}

fn multiplicity_json(m: &LocalMultiplicity) -> Value {
    match m {
        LocalMultiplicity::Finite(v) => json!(v),
        other => json!(other.to_string()),
    }
}

/// Map `f` over `items` on up to `jobs` threads; output order follows input.
fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn line_point_label(p: &LinePoint) -> String {
    if p.s.is_zero() {
        "s=0".to_string()
    } else if p.t.is_zero() {
        "t=0".to_string()
    } else {
        format!("s/t={}", to_plain_string(&(&p.s / &p.t)))
    }
}

fn divisor_summary(div: &NKDivisor) -> String {
    let mut parts: Vec<String> = div.points.iter().map(|p| format!("{}:{}", line_point_label(&p.param), p.order)).collect();
    parts.extend(div.other_factors.iter().map(|(f, k)| format!("({}):{k}", f.poly())));
    format!("{}: divisor {{{}}}, total {}", div.component, parts.join(", "), div.total_degree)
}

fn divisor_json(div: &NKDivisor) -> Value {
    json!({
        "component": div.component,
        "points": div.points.iter().map(|p| json!({
            "param": [rat_json(&p.param.s), rat_json(&p.param.t)],
            "image": rats_json(&p.image),
            "order": p.order,
        })).collect::<Vec<_>>(),
        "other_factors": div.other_factors.iter().map(|(f, k)| json!({"factor": f.poly().to_string(), "order": k})).collect::<Vec<_>>(),
        "total_degree": div.total_degree,
        "pullback_degree": div.pullback_degree,
    })
}

fn curves(model: &Model, specs: &[&ComponentSpec]) -> Result<Vec<CurveComponent>, CliError> {
    specs.iter().map(|s| Ok(model.curve(s)?)).collect()
}

fn union_ideal(specs: &[&ComponentSpec]) -> Result<Ideal, CliError> {
    let mut acc: Option<Ideal> = None;
    for s in specs {
        acc = Some(match acc {
            None => s.ideal.clone(),
            Some(a) => intersect(&a, &s.ideal)?,
        });
    }
    acc.ok_or_else(|| CliError::Input("no components declared".into()))
}

fn cmd_check(model: &Model, rep: &mut Report) -> Result<(), CliError> {
    match &model.foliation {
        Some(f) => {
            rep.line(format!("valid foliation, degree {}", f.degree()));
            rep.result("degree", f.degree());
            let mut comps = Vec::new();
            for spec in &model.components {
                let c = model.curve(spec)?;
                rep.line(format!("component {}: {}", c.name, hilbert_line(&c.hilbert)));
                comps.push(json!({"name": c.name, "hilbert": hilbert_json(&c.hilbert)}));
            }
            rep.result("components", comps);
        }
        None => {
            let n = model.ring.nvars();
            let integrable = n < 3 || model.omega.wedge(&model.omega.ext_d()?)?.is_zero();
            rep.line(format!("valid affine 1-form in {n} variables, integrable: {}", if integrable { "yes" } else { "no" }));
            rep.result("variables", n);
            rep.result("integrable", integrable);
        }
    }
    rep.result("form", model.omega.to_string());
    Ok(())
}

fn cmd_singular(model: &Model, rep: &mut Report) -> Result<(), CliError> {
    if model.space == Space::Affine {
        let declared: Vec<(String, Ideal)> = model.leaves().iter().map(|c| (c.name.clone(), c.ideal.clone())).collect();
        let chk = affine_decomposition(&model.omega, &declared)?;
        rep.line(format!("singular ideal: ({})", chk.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")));
        rep.result("ideal", polys_json(chk.ideal.generators()));
        let mut comps = Vec::new();
        for (name, dim, inside) in &chk.components {
            let mut l = format!("component {name}: dim {dim}");
            if !inside.is_empty() {
                l.push_str(&format!(", embedded in {}", inside.join(", ")));
            }
            rep.line(l);
            comps.push(json!({"name": name, "dim": dim, "embedded_in": inside}));
        }
        rep.result("components", comps);
        if !declared.is_empty() {
            rep.line(format!("declared components decompose the ideal: {}", if chk.decomposes { "yes" } else { "no" }));
            rep.result("decomposes", chk.decomposes);
            if !chk.decomposes {
                rep.fail("the declared components do not intersect to the singular ideal");
            }
        }
        return Ok(());
    }
    let f = model.foliation()?;
    let comps = curves(model, &model.components.iter().collect::<Vec<_>>())?;
    let s = singular_scheme(f, comps)?;
    rep.line(format!("singular scheme: {}", hilbert_line(&s.hilbert)));
    rep.line(format!("hilbert polynomial: {}", hilbert_poly_string(&s.hilbert)));
    rep.line(format!("ideal: ({})", s.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")));
    rep.result("scheme", hilbert_json(&s.hilbert));
    rep.result("ideal", polys_json(s.ideal.generators()));
    let mut cj = Vec::new();
    for c in &s.components {
        rep.line(format!("component {}: contains the scheme, {}", c.name, hilbert_line(&c.hilbert)));
        cj.push(json!({"name": c.name, "hilbert": hilbert_json(&c.hilbert)}));
    }
    rep.result("components", cj);
    Ok(())
}

fn cmd_classify(model: &Model, point: &str, rep: &mut Report) -> Result<(), CliError> {
    let f = model.foliation()?;
    let p = model.point(point)?;
    rep.input("point", rats_json(&p));
    let c = classify_point(f, &p)?;
    let mut l = format!("point {}: {}", point_string(&p, ":"), c.kind);
    if let Some(sub) = c.simple_subclass {
        l.push_str(&format!(", simple subclass {sub}"));
    }
    rep.line(l);
    rep.result("kind", c.kind.to_string());
    rep.result("simple_subclass", c.simple_subclass.map(|s| s.to_string()));
    rep.result("jet1_nonzero", c.jet1_nonzero);
    if let Some(cp) = &c.rot_char_poly {
        rep.line(format!("rot linear part: trace {}, sigma2 {}, det {}", to_plain_string(&cp[0]), to_plain_string(&cp[1]), to_plain_string(&cp[2])));
        rep.result("rot_char_poly", rats_json(cp));
    }
    Ok(())
}

fn cmd_nk_divisor(model: &Model, name: Option<&str>, jobs: usize, rep: &mut Report) -> Result<(), CliError> {
    let f = model.foliation()?;
    let specs: Vec<&ComponentSpec> = match name {
        Some(n) => vec![model.component_spec(n)?],
        None => model.leaves().into_iter().filter(|c| c.param.is_some()).collect(),
    };
    if specs.is_empty() {
        return Err(CliError::Input("no parametrized components declared".into()));
    }
    let comps = curves(model, &specs)?;
    let divs: Vec<Result<NKDivisor, lab::LabError>> = par_map(&comps, jobs, |c| nk_divisor(f, c));
    let mut out = Vec::new();
    for d in divs {
        let d = d?;
        rep.line(divisor_summary(&d));
        for p in &d.points {
            rep.line(format!("  {} -> {} (order {})", line_point_label(&p.param), point_string(&p.image, ":"), p.order));
        }
        out.push(divisor_json(&d));
    }
    rep.result("divisors", out);
    Ok(())
}

fn cmd_nk_count(model: &Model, name: &str, rep: &mut Report) -> Result<(), CliError> {
    let f = model.foliation()?;
    let spec = model.component_spec(name)?;
    let z = CurveComponent::new(&spec.name, spec.ideal.clone(), spec.param.clone(), false)?;
    let covering: Vec<&ComponentSpec> = if spec.parts.is_empty() {
        vec![spec]
    } else {
        spec.parts.iter().map(|p| model.component_spec(p)).collect::<Result<_, _>>()?
    };
    let covering = if covering.iter().all(|c| c.param.is_some()) { curves(model, &covering)? } else { Vec::new() };
    let r = nk_count(f, &z.hilbert, &covering)?;
    rep.line(format!("curve {}: degree {}, p_a {}", spec.name, r.curve_degree, r.p_a));
    rep.line(format!("deg K_F|Z = (d-2)*deg Z = {}", r.deg_kf_restricted));
    rep.line(format!("deg K_Z = 2*p_a-2 = {}", r.deg_kz));
    rep.line(format!("deg K_F|Z - deg K_Z = {}", r.difference));
    rep.line(format!("deg K_Z - deg K_F|Z = {}", r.reversed_difference));
    match (r.observed_total, r.distinct_points) {
        (Some(t), Some(n)) => rep.line(format!("observed divisor total = {t} (per branch), distinct points = {n}")),
        _ => rep.line("observed divisor total: unavailable (components not all parametrized)"),
    }
    rep.warn("the sign convention of the degree formula is not fixed; both orientations are reported and neither is reconciled with the observed total");
    rep.result("degree_d", r.degree_d);
    rep.result("curve_degree", r.curve_degree);
    rep.result("p_a", r.p_a);
    rep.result("deg_kf_restricted", r.deg_kf_restricted);
    rep.result("deg_kz", r.deg_kz);
    rep.result("difference", r.difference);
    rep.result("reversed_difference", r.reversed_difference);
    rep.result("observed_total", r.observed_total);
    rep.result("distinct_points", r.distinct_points);
    Ok(())
}

fn cmd_milnor(model: &Model, point: &str, cfg: &LabConfig, rep: &mut Report) -> Result<(), CliError> {
    let p = model.point(point)?;
    rep.input("point", rats_json(&p));
    let (mu, mu_rot) = match &model.foliation {
        Some(f) => (milnor(f, &p, cfg)?, Some(milnor_rot(f, &p, cfg)?)),
        None => {
            let mu = milnor_affine(&model.omega, &p, cfg)?;
            let mu_rot = if model.ring.nvars() == 3 {
                let x = rot(&model.omega)?;
                if x.is_zero() { None } else { Some(milnor_field(&x, &p, cfg)?) }
            } else {
                None
            };
            (mu, mu_rot)
        }
    };
    rep.line(format!("mu(omega, p) = {mu}"));
    rep.result("mu", multiplicity_json(&mu));
    if let Some(m) = &mu_rot {
        rep.line(format!("mu(rot omega, p) = {m}"));
    }
    rep.result("mu_rot", mu_rot.as_ref().map(multiplicity_json));
    Ok(())
}

fn cmd_isolated(model: &Model, name: Option<&str>, rep: &mut Report) -> Result<(), CliError> {
    let f = model.foliation()?;
    let curve = match name {
        Some(n) => model.component_spec(n)?.ideal.clone(),
        None => union_ideal(&model.leaves())?,
    };
    let r = isolated_count(f, &curve)?;
    rep.line(format!("isolated count = {}", r.count));
    rep.line(format!("residual: ({})", r.residual.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")));
    rep.result("count", r.count);
    rep.result("residual", polys_json(r.residual.generators()));
    Ok(())
}

struct ResidueRow {
    name: String,
    degree: u64,
    point: Vec<Rat>,
    residue: BBResidue,
}

fn residues(model: &Model, jobs: usize) -> Result<Vec<ResidueRow>, CliError> {
    let f = model.foliation()?;
    let comps = curves(model, &model.leaves())?;
    if comps.is_empty() {
        return Err(CliError::Input("no components declared".into()));
    }
    let rows = par_map(&comps, jobs, |c| -> Result<ResidueRow, CliError> {
        let point = c.sample_point().ok_or_else(|| CliError::Input(format!("component {} needs a point or a parametrization", c.name)))?;
        let slice = transversal_model(f, &c.ideal, &point)?;
        let residue = bb_residue(&slice.model)?;
        Ok(ResidueRow { name: c.name.clone(), degree: c.hilbert.degree, point, residue })
    });
    rows.into_iter().collect()
}

fn residue_lines(rows: &[ResidueRow], rep: &mut Report) {
    let mut out = Vec::new();
    for r in rows {
        rep.line(format!(
            "{}: BB = {} ({}) at {}, degree {}",
            r.name,
            to_plain_string(&r.residue.value),
            r.residue.method,
            point_string(&r.point, ":"),
            r.degree
        ));
        out.push(json!({
            "component": r.name,
            "value": rat_json(&r.residue.value),
            "method": r.residue.method.to_string(),
            "point": rats_json(&r.point),
            "degree": r.degree,
        }));
    }
    rep.result("residues", out);
}

fn cmd_sum_check(model: &Model, jobs: usize, rep: &mut Report) -> Result<(), CliError> {
    let f = model.foliation()?;
    let rows = residues(model, jobs)?;
    residue_lines(&rows, rep);
    let scheme = singular_scheme(f, vec![])?;
    let union = union_ideal(&model.leaves())?;
    let rest = saturation(&scheme.ideal, &union)?;
    let rest_dim = hilbert_data(&rest, true)?.dim_proj;
    let complete = rest_dim <= 0;
    rep.line(format!(
        "other curve components: {}",
        if complete { "none (residual scheme has dimension <= 0)" } else { "present" }
    ));
    rep.result("residual_dim", rest_dim);
    let entries: Vec<(BBResidue, u64)> = rows.iter().map(|r| (r.residue.clone(), r.degree)).collect();
    let sc = bb_sum_check(f.degree(), &entries);
    let line = format!(
        "sum = {}, (d+2)^2 = ({}+2)^2 = {}: {}",
        to_plain_string(&sc.total),
        sc.degree,
        to_plain_string(&sc.expected),
        if sc.equal { "equal" } else { "different" }
    );
    rep.result("total", rat_json(&sc.total));
    rep.result("expected", rat_json(&sc.expected));
    rep.result("equal", sc.equal);
    if sc.equal && complete {
        rep.line(line);
    } else {
        rep.fail(line);
    }
    Ok(())
}

/// The form to analyse at the origin: the affine form itself, or the local
/// chart at a projective point.
fn local_form(model: &Model, point: Option<&str>) -> Result<PolyForm, CliError> {
    match (&model.foliation, point) {
        (Some(f), Some(p)) => Ok(lab::local_chart(f, &model.point(p)?).1),
        (Some(_), None) => Err(CliError::Input("a projective document needs --point".into())),
        (None, Some(p)) => Ok(model.omega.translate(&model.point(p)?)),
        (None, None) => Ok(model.omega.clone()),
    }
}

fn cmd_jet(model: &Model, point: Option<&str>, rep: &mut Report) -> Result<(), CliError> {
    let omega = local_form(model, point)?;
    let j = jet_classify(&omega)?;
    rep.line(format!("j1 = {}", j.jet1));
    rep.line(format!("rank {}, verdict: {}", j.rank, j.verdict));
    if j.verdict == JetVerdict::Case2Or3Xdx {
        rep.warn("cases 2 and 3 are not separated by jets; a truncated first integral is evidence for case 3 only");
    }
    rep.result("jet1", j.jet1.to_string());
    rep.result("rank", j.rank);
    rep.result("closed", j.closed);
    rep.result("verdict", format!("{:?}", j.verdict));
    Ok(())
}

fn cmd_first_integral(model: &Model, cap: u32, rep: &mut Report) -> Result<(), CliError> {
    rep.input("cap", cap);
    let (eta, images) = match &model.pullback {
        Some(pb) => (pb.eta.clone(), Some(pb.via.clone())),
        None => (local_form(model, None)?, None),
    };
    let fi = lab::frobenius_first_integral(&eta, cap)?;
    let h = fi.h.body();
    rep.line(format!("eta = {eta}"));
    rep.line(format!("H = {h} (through degree {cap})"));
    let res_ok = fi.residual.is_zero();
    rep.line(format!("dH ^ eta through degree {}: {}", cap - 1, if res_ok { "zero" } else { "nonzero" }));
    rep.result("eta", eta.to_string());
    rep.result("h", h.to_string());
    rep.result("residual_zero", res_ok);
    rep.result("integrable", fi.integrable);
    if !res_ok {
        rep.fail(format!("residual: {}", fi.residual));
    }
    if let Some(images) = images {
        let pulled = eta.pullback(&images)?;
        let same = pulled == model.omega;
        rep.line(format!("omega = pullback of eta: {}", if same { "yes" } else { "no" }));
        rep.result("omega_is_pullback", same);
        if !same {
            rep.fail("the declared pullback does not reproduce omega");
        }
        let c = lab::compose_first_integral(&fi, &images, &model.omega)?;
        let h1 = c.h1.body();
        let regular = c.dh1_at_origin.iter().any(|v| !v.is_zero());
        let c_ok = c.residual.is_zero();
        rep.line(format!("H1 = {h1}"));
        rep.line(format!("dH1 ^ omega through degree {}: {}", cap - 1, if c_ok { "zero" } else { "nonzero" }));
        rep.line(format!(
            "dH1(0) = {}: {}",
            point_string(&c.dh1_at_origin, ", "),
            if regular { "nonzero" } else { "zero (H1 has no linear part)" }
        ));
        rep.result("h1", h1.to_string());
        rep.result("h1_residual_zero", c_ok);
        rep.result("dh1_at_origin", rats_json(&c.dh1_at_origin));
        if !c_ok {
            rep.fail(format!("residual: {}", c.residual));
        }
    } else {
        let regular = fi.regular_at_origin();
        rep.line(format!("dH(0) nonzero: {}", if regular { "yes" } else { "no" }));
    }
    Ok(())
}

fn cmd_koszul(model: &Model, cap: u32, point: Option<&str>, cfg: &LabConfig, rep: &mut Report) -> Result<(), CliError> {
    rep.input("cap", cap);
    let omega = local_form(model, point)?;
    let cfg = LabConfig { koszul_cap: cap, ..cfg.clone() };
    let k = koszul_generators(&omega, &cfg)?;
    let rem_ok = k.remainder.truncate(cap).is_zero();
    rep.line(format!("X = rot(omega) = {}", k.x));
    rep.line(format!("S = {}", k.s));
    rep.line(format!("omega - i_X i_S dV through degree {cap}: {}", if rem_ok { "zero" } else { "nonzero" }));
    rep.line(format!("omega(X) = {}", k.omega_of_x));
    rep.line(format!("omega(S) through degree {cap}: {}", k.omega_of_s.truncate(cap)));
    rep.result("x", k.x.to_string());
    rep.result("s", k.s.to_string());
    rep.result("remainder_zero", rem_ok);
    rep.result("omega_of_x", k.omega_of_x.to_string());
    if !rem_ok {
        rep.fail("remainder has terms of degree <= cap");
    }
    Ok(())
}

fn cmd_chern(degree: i64, radial: bool, rep: &mut Report) -> Result<(), CliError> {
    rep.input("degree", degree);
    rep.input("radial", radial);
    let c1 = degree + 2;
    rep.line(format!("c1(N) = {c1}h, c1(N)^2 = {}h^2", c1 * c1));
    rep.result("c1_normal", c1);
    rep.result("c1_normal_squared", c1 * c1);
    if radial {
        let c = chern_radial(degree)?;
        rep.line(format!("c = {c} = (1 + {}h)^2", c1 / 2));
        rep.result("radial", rats_json(c.coeffs()));
    }
    Ok(())
}

fn cmd_rrh(c1: i64, c2: i64, rep: &mut Report) -> Result<(), CliError> {
    rep.input("c1", c1);
    rep.input("c2", c2);
    let chi = euler_char_rrh(c1, c2);
    rep.line(format!("chi = {}", to_plain_string(&chi)));
    rep.result("chi", rat_json(&chi));
    Ok(())
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let cfg = LabConfig::default();
    let name = match &cli.command {
        Command::Check { .. } => "check",
        Command::Singular { .. } => "singular",
        Command::Classify { .. } => "classify",
        Command::NkDivisor { .. } => "nk-divisor",
        Command::NkCount { .. } => "nk-count",
        Command::Milnor { .. } => "milnor",
        Command::IsolatedCount { .. } => "isolated-count",
        Command::Residues { .. } => "residues",
        Command::SumCheck { .. } => "sum-check",
        Command::Jet { .. } => "jet",
        Command::FirstIntegral { .. } => "first-integral",
        Command::Koszul { .. } => "koszul",
        Command::Chern { .. } => "chern",
        Command::Rrh { .. } => "rrh",
    };
    let mut rep = Report::new(name);
    let with_file = |rep: &mut Report, file: &Path| -> Result<Model, CliError> {
        rep.input("file", file.display().to_string());
        load(file)
    };
    match &cli.command {
        Command::Check { file } => cmd_check(&with_file(&mut rep, file)?, &mut rep)?,
        Command::Singular { file } => cmd_singular(&with_file(&mut rep, file)?, &mut rep)?,
        Command::Classify { file, point } => cmd_classify(&with_file(&mut rep, file)?, point, &mut rep)?,
        Command::NkDivisor { file, component } => {
            cmd_nk_divisor(&with_file(&mut rep, file)?, component.as_deref(), cli.jobs, &mut rep)?
        }
        Command::NkCount { file, component } => cmd_nk_count(&with_file(&mut rep, file)?, component, &mut rep)?,
        Command::Milnor { file, point, cap } => {
            let cfg = LabConfig { mora_cap: cap.unwrap_or(cfg.mora_cap), ..cfg.clone() };
            cmd_milnor(&with_file(&mut rep, file)?, point, &cfg, &mut rep)?
        }
        Command::IsolatedCount { file, component } => {
            cmd_isolated(&with_file(&mut rep, file)?, component.as_deref(), &mut rep)?
        }
        Command::Residues { file } => {
            let model = with_file(&mut rep, file)?;
            let rows = residues(&model, cli.jobs)?;
            residue_lines(&rows, &mut rep);
        }
        Command::SumCheck { file } => cmd_sum_check(&with_file(&mut rep, file)?, cli.jobs, &mut rep)?,
        Command::Jet { file, point } => cmd_jet(&with_file(&mut rep, file)?, point.as_deref(), &mut rep)?,
        Command::FirstIntegral { file, cap } => cmd_first_integral(&with_file(&mut rep, file)?, *cap, &mut rep)?,
        Command::Koszul { file, cap, point } => {
            cmd_koszul(&with_file(&mut rep, file)?, *cap, point.as_deref(), &cfg, &mut rep)?
        }
        Command::Chern { degree, radial } => cmd_chern(*degree, *radial, &mut rep)?,
        Command::Rrh { c1, c2 } => cmd_rrh(*c1, *c2, &mut rep)?,
    }
    Ok(rep)
}

/// Run the tool with `args` (program name first). Returns the exit code:
/// 0 on success, 1 when a verdict fails, 2 on input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let start = Instant::now();
    let mut rep = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if cli.timing {
        rep.timing_ms = Some(start.elapsed().as_millis());
    }
    if rep.write_text(out).is_err() {
        return 2;
    }
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(&rep.to_json()).expect("json values serialize");
        if let Err(e) = std::fs::write(path, text + "\n") {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 2;
        }
    }
    if rep.ok {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_core::algebra::int;

    #[test]
    fn line_point_labels() {
        assert_eq!(line_point_label(&LinePoint { s: int(0), t: int(1) }), "s=0");
        assert_eq!(line_point_label(&LinePoint { s: int(1), t: int(0) }), "t=0");
        assert_eq!(line_point_label(&LinePoint { s: int(1), t: int(2) }), "s/t=1/2");
    }

    #[test]
    fn par_map_keeps_order() {
        let items: Vec<u32> = (0..17).collect();
        assert_eq!(par_map(&items, 4, |x| x * 2), items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
