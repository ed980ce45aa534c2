use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use semiclassical::correlator::{
    correlator, correlator_function, moment_bruteforce, moment_unchecked, CorrelatorSpec, Element, MomentSpec,
};
use semiclassical::factorizations::{
    count_monotone, count_palindromic, delta_series_o, delta_series_u, enumerate_monotone, enumerate_palindromic,
};
use semiclassical::haar_mc::{mc_correlator, mc_moment, McEstimate};
use semiclassical::perm::{CycleType, GroundSet, Permutation};
use semiclassical::ribbon::{
    cancellation_partner, enumerate_diagrams_with_limit, to_dot, Partner, RibbonDiagram, Symmetry,
    DEFAULT_MATCHING_LIMIT,
};
use semiclassical::weingarten::{class_coefficient, laurent_expand, Ensemble, LaurentSeries};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{
    CorrelatorArgs, DiagramsArgs, FactorizeArgs, McArgs, MomentArgs, RenderArgs, SeriesArgs, SymmetryArg, TargetArgs,
    WeingartenArgs,
};
use crate::output::{rational, rational_function, series};

#[derive(Debug, Error)]
pub enum CliError {
    /// Arguments that parse but make no sense together; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Refused or failed computation; exit code 1.
    #[error("{0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Computation(_) => 1,
        }
    }
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

/// A command's JSON result and whether every check in it passed.
pub struct Report {
    pub value: Value,
    pub ok: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, ok: true }
    }
}

/// Size guards, all overridable with `--force`.
pub const MAX_WEINGARTEN_T: usize = 8;
pub const MAX_COUNT_T: usize = 12;
pub const MAX_COUNT_V: usize = 16;
pub const MAX_LIST_T_UNITARY: usize = 5;
pub const MAX_LIST_T_ORTHOGONAL: usize = 3;
pub const MAX_LIST_V: usize = 6;
pub const MAX_SERIES_DEPTH: i64 = 10;

pub fn guard(force: bool, ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if force || ok {
        Ok(())
    } else {
        Err(CliError::Computation(format!("{} (use --force to run anyway)", what())))
    }
}

fn parts(c: &CycleType) -> Value {
    json!(c.parts())
}

pub fn weingarten(a: &WeingartenArgs, force: bool) -> Result<Report, CliError> {
    let t = a.partition.total();
    guard(force, t <= MAX_WEINGARTEN_T, || format!("partition of {t} exceeds {MAX_WEINGARTEN_T}"))?;
    let ensemble: Ensemble = a.ensemble.into();
    let f = class_coefficient(ensemble, &a.partition);
    let mut v = json!({
        "partition": parts(&a.partition),
        "ensemble": ensemble.to_string(),
        "numerator": f.numerator().to_string(),
        "denominator": f.denominator().to_string(),
    });
    if let Some(k) = a.laurent {
        let s = laurent_expand(&f, k).map_err(failed)?;
        v["laurent"] = series(&s);
    }
    if let Some(n) = a.at {
        let q = f.evaluate(&BigRational::from_integer(n.into())).map_err(failed)?;
        v["at"] = json!(n);
        v["value"] = rational(&q);
    }
    Ok(Report::ok(v))
}

pub fn factorize(a: &FactorizeArgs, force: bool) -> Result<Report, CliError> {
    let t = a.partition.total();
    guard(force, t <= MAX_COUNT_T && a.v <= MAX_COUNT_V, || {
        format!("counts limited to t <= {MAX_COUNT_T} and v <= {MAX_COUNT_V}")
    })?;
    let symmetry: Symmetry = a.kind.into();
    let count = match symmetry {
        Symmetry::Unitary => count_monotone(&a.partition, a.v),
        Symmetry::Orthogonal => count_palindromic(&a.partition, a.v),
    };
    let mut v = json!({
        "type": kind_name(a.kind),
        "partition": parts(&a.partition),
        "v": a.v,
        "count": count.to_string(),
    });
    if a.list {
        let limit = match symmetry {
            Symmetry::Unitary => MAX_LIST_T_UNITARY,
            Symmetry::Orthogonal => MAX_LIST_T_ORTHOGONAL,
        };
        guard(force, t <= limit && a.v <= MAX_LIST_V, || {
            format!("listing limited to t <= {limit} and v <= {MAX_LIST_V}")
        })?;
        let (target, words): (Permutation, Vec<String>) = match symmetry {
            Symmetry::Unitary => {
                let tau = a.partition.canonical_plain();
                let fs = enumerate_monotone(&tau, a.v).map_err(failed)?;
                (tau, fs.iter().map(ToString::to_string).collect())
            }
            Symmetry::Orthogonal => {
                let tau = a.partition.canonical_orthogonal();
                let fs = enumerate_palindromic(&tau, a.v).map_err(failed)?;
                (tau, fs.iter().map(ToString::to_string).collect())
            }
        };
        v["target"] = json!(target.to_string());
        v["factorizations"] = json!(words);
    }
    Ok(Report::ok(v))
}

fn kind_name(k: SymmetryArg) -> &'static str {
    match k {
        SymmetryArg::U => "u",
        SymmetryArg::O => "o",
    }
}

/// Signed factorization series and Laurent expansion of the class
/// coefficient through `N^-order`.
pub fn series_pair(symmetry: Symmetry, c: &CycleType, order: i64) -> Result<(LaurentSeries, LaurentSeries), CliError> {
    let (delta, ensemble) = match symmetry {
        Symmetry::Unitary => (delta_series_u(c, order), Ensemble::Cue),
        Symmetry::Orthogonal => (delta_series_o(c, order), Ensemble::Coe),
    };
    let laurent = laurent_expand(&class_coefficient(ensemble, c), order).map_err(failed)?;
    Ok((delta, laurent))
}

pub fn series_cmd(a: &SeriesArgs, force: bool) -> Result<Report, CliError> {
    let t = a.partition.total();
    guard(force, t <= MAX_WEINGARTEN_T && a.order - t as i64 <= MAX_SERIES_DEPTH, || {
        format!("series limited to t <= {MAX_WEINGARTEN_T} and {MAX_SERIES_DEPTH} orders past the leading one")
    })?;
    let (delta, laurent) = series_pair(a.kind.into(), &a.partition, a.order)?;
    let equal = delta == laurent;
    Ok(Report {
        value: json!({
            "type": kind_name(a.kind),
            "partition": parts(&a.partition),
            "order": a.order,
            "delta": series(&delta),
            "laurent": series(&laurent),
            "equal": equal,
        }),
        ok: equal,
    })
}

fn parse_target(a: &TargetArgs) -> Result<(Permutation, Symmetry), CliError> {
    let symmetry: Symmetry = a.symmetry.into();
    let t = match a.t {
        Some(t) => t,
        None => Permutation::parse_cycles(&a.target, None).map_err(|e| CliError::Usage(e.to_string()))?.ground().t(),
    };
    if t == 0 {
        return Err(CliError::Usage("target has no labels; pass --t".into()));
    }
    let ground = match symmetry {
        Symmetry::Unitary => GroundSet::Plain(t),
        Symmetry::Orthogonal => GroundSet::Barred(t),
    };
    let tau = Permutation::parse_cycles(&a.target, Some(ground)).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((tau, symmetry))
}

fn diagrams_of(a: &TargetArgs, force: bool) -> Result<(Permutation, Symmetry, Vec<RibbonDiagram>), CliError> {
    let (tau, symmetry) = parse_target(a)?;
    let limit = if force { u128::MAX } else { DEFAULT_MATCHING_LIMIT };
    let ds = enumerate_diagrams_with_limit(&tau, a.max_order, symmetry, limit).map_err(failed)?;
    Ok((tau, symmetry, ds))
}

/// Per-order summary: count, connected count, signed sum, vertex breakdown.
pub fn per_order(ds: &[RibbonDiagram]) -> Vec<Value> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < ds.len() {
        let order = ds[i].contribution().order;
        let group: Vec<&RibbonDiagram> = ds[i..].iter().take_while(|d| d.contribution().order == order).collect();
        i += group.len();
        let signed: i64 = group.iter().map(|d| d.contribution().sign as i64).sum();
        let connected = group.iter().filter(|d| d.component_count() == 1).count();
        let mut by_vertices: Vec<Value> = Vec::new();
        let mut j = 0;
        while j < group.len() {
            let c = group[j].contribution();
            let n = group[j..].iter().take_while(|d| d.internal_vertex_count() == c.internal_vertices).count();
            by_vertices.push(json!({ "v": c.internal_vertices, "e": c.edges, "count": n }));
            j += n;
        }
        out.push(json!({
            "order": order,
            "count": group.len(),
            "connected": connected,
            "signed_sum": signed,
            "by_vertices": by_vertices,
        }));
    }
    out
}

fn write_dots(dir: &Path, ds: &[RibbonDiagram]) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|e| failed(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::with_capacity(ds.len());
    for (i, d) in ds.iter().enumerate() {
        let c = d.contribution();
        let path: PathBuf = dir.join(format!("diagram_{i:03}_order{}_v{}.dot", c.order, c.internal_vertices));
        fs::write(&path, to_dot(d)).map_err(|e| failed(format!("{}: {e}", path.display())))?;
        files.push(path.display().to_string());
    }
    Ok(files)
}

pub fn diagrams(a: &DiagramsArgs, force: bool) -> Result<Report, CliError> {
    let (tau, symmetry, ds) = diagrams_of(&a.target, force)?;
    let (mut fixed, mut paired) = (0usize, 0usize);
    for d in &ds {
        match cancellation_partner(d, symmetry).map_err(failed)? {
            Partner::FixedPoint(_) => fixed += 1,
            Partner::Partner(_) => paired += 1,
        }
    }
    let mut sum = LaurentSeries::zero(a.target.max_order);
    for d in &ds {
        let c = d.contribution();
        sum.add_term(c.order, &BigRational::from_integer(c.sign.into()));
    }
    let mut v = json!({
        "target": tau.to_string(),
        "symmetry": symmetry.to_string(),
        "max_order": a.target.max_order,
        "total": ds.len(),
        "per_order": per_order(&ds),
        "fixed_points": fixed,
        "partner_pairs": paired / 2,
        "signed_sum": series(&sum),
    });
    if a.list {
        let list: Vec<Value> = ds
            .iter()
            .map(|d| {
                let c = d.contribution();
                json!({
                    "order": c.order,
                    "v": c.internal_vertices,
                    "e": c.edges,
                    "sign": c.sign,
                    "components": d.component_count(),
                    "layout": d.to_string(),
                })
            })
            .collect();
        v["diagrams"] = json!(list);
    }
    if let Some(dir) = &a.dot {
        v["files"] = json!(write_dots(dir, &ds)?);
    }
    Ok(Report::ok(v))
}

pub fn render(a: &RenderArgs, force: bool) -> Result<Report, CliError> {
    let (tau, symmetry, ds) = diagrams_of(&a.target, force)?;
    let files = write_dots(&a.dot, &ds)?;
    Ok(Report::ok(json!({
        "target": tau.to_string(),
        "symmetry": symmetry.to_string(),
        "max_order": a.target.max_order,
        "files": files,
    })))
}

fn elements_text(es: &[Element]) -> String {
    es.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

pub fn correlator_cmd(a: &CorrelatorArgs) -> Result<Report, CliError> {
    let ensemble: Ensemble = a.ensemble.into();
    let spec = CorrelatorSpec::new(a.z.0.clone(), a.zstar.0.clone(), ensemble, a.n).map_err(failed)?;
    let value = correlator(&spec).map_err(failed)?;
    let f = correlator_function(&spec.unconjugated, &spec.conjugated, ensemble).map_err(failed)?;
    Ok(Report::ok(json!({
        "ensemble": ensemble.to_string(),
        "n": a.n,
        "z": elements_text(&spec.unconjugated),
        "zstar": elements_text(&spec.conjugated),
        "value": rational(&value),
        "function": rational_function(&f),
    })))
}

pub fn moment_cmd(a: &MomentArgs, force: bool) -> Result<Report, CliError> {
    let spec = MomentSpec::new(a.traces.clone(), a.n1, a.n2, a.block.into(), a.ensemble.into()).map_err(failed)?;
    let value = moment_unchecked(&spec, !force).map_err(failed)?;
    let mut v = json!({
        "ensemble": spec.ensemble.to_string(),
        "block": spec.block.to_string(),
        "n1": spec.n1,
        "n2": spec.n2,
        "traces": spec.traces,
        "value": rational(&value),
    });
    let mut ok = true;
    if a.oracle {
        let brute = moment_bruteforce(&spec).map_err(failed)?;
        ok = brute == value;
        v["oracle"] = rational(&brute);
        v["equal"] = json!(ok);
    }
    Ok(Report { value: v, ok })
}

pub fn estimate_json(e: &McEstimate) -> Value {
    json!({
        "mean_re": e.mean.re,
        "mean_im": e.mean.im,
        "stderr": e.stderr,
        "samples": e.samples,
        "seed": e.seed,
    })
}

pub fn mc_cmd(a: &McArgs) -> Result<Report, CliError> {
    let ensemble: Ensemble = a.ensemble.into();
    let (estimate, exact) = match (&a.z, &a.zstar, &a.traces) {
        (Some(z), Some(zstar), None) => {
            let n = a.n.ok_or_else(|| CliError::Usage("a correlator needs --n".into()))?;
            let spec = CorrelatorSpec::new(z.0.clone(), zstar.0.clone(), ensemble, n).map_err(failed)?;
            let est = mc_correlator(&spec, a.samples, a.seed).map_err(failed)?;
            let exact = if a.exact { Some(correlator(&spec).map_err(failed)?) } else { None };
            (est, exact)
        }
        (None, None, Some(traces)) => {
            let (Some(n1), Some(n2)) = (a.n1, a.n2) else {
                return Err(CliError::Usage("a moment needs --n1 and --n2".into()));
            };
            let spec = MomentSpec::new(traces.clone(), n1, n2, a.block.into(), ensemble).map_err(failed)?;
            let est = mc_moment(&spec, a.samples, a.seed).map_err(failed)?;
            let exact = if a.exact { Some(moment_unchecked(&spec, true).map_err(failed)?) } else { None };
            (est, exact)
        }
        _ => return Err(CliError::Usage("give either --z and --zstar, or --traces".into())),
    };
    let mut v = estimate_json(&estimate);
    if let Some(q) = exact {
        let x = Complex64::new(q.to_f64().unwrap_or(f64::NAN), 0.0);
        v["exact"] = rational(&q);
        v["deviation_se"] = json!(estimate.deviation(x));
    }
    Ok(Report::ok(v))
}
