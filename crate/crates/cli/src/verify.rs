//! End-to-end agreement checks through public APIs only.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use semiclassical::correlator::{correlator, CorrelatorSpec, Element};
use semiclassical::haar_mc::mc_correlator;
use semiclassical::perm::{halved_cycle_type, target_orthogonal, CycleType, GroundSet, Permutation};
use semiclassical::ribbon::{enumerate_diagrams_with_limit, Symmetry, DEFAULT_MATCHING_LIMIT};
use semiclassical::weingarten::{class_coefficient, Ensemble, LaurentSeries};
use serde_json::{json, Value};

use crate::args::VerifyArgs;
use crate::commands::{estimate_json, guard, per_order, series_pair, CliError, Report};
use crate::output::{rational, series};

pub const MAX_T_UNITARY: usize = 6;
pub const MAX_T_ORTHOGONAL: usize = 4;
pub const MAX_DEPTH: i64 = 8;
pub const MAX_DIAGRAM_T: usize = 3;
pub const MAX_DIAGRAM_DEPTH: i64 = 3;
pub const MAX_MC_T: usize = 3;
/// Standard errors allowed between an estimate and the exact value.
pub const MC_BAND: f64 = 5.0;

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

pub fn verify(a: &VerifyArgs, force: bool) -> Result<Report, CliError> {
    let symmetries = a.symmetry.symmetries();
    for &s in &symmetries {
        let limit = match s {
            Symmetry::Unitary => MAX_T_UNITARY,
            Symmetry::Orthogonal => MAX_T_ORTHOGONAL,
        };
        guard(force, a.max_t <= limit, || format!("{s} checks limited to --max-t {limit}"))?;
    }
    guard(force, (0..=MAX_DEPTH).contains(&a.max_order), || format!("--max-order must lie in 0..={MAX_DEPTH}"))?;
    if a.with_diagrams {
        guard(force, (0..=MAX_DIAGRAM_DEPTH).contains(&a.diagram_order), || {
            format!("--diagram-order must lie in 0..={MAX_DIAGRAM_DEPTH}")
        })?;
    }
    let mut cases = Vec::new();
    for &symmetry in &symmetries {
        for t in 1..=a.max_t {
            for c in CycleType::partitions_of(t) {
                cases.push(series_case(symmetry, &c, t as i64 + a.max_order)?);
                if a.with_diagrams && (t <= MAX_DIAGRAM_T || force) {
                    cases.push(diagram_case(symmetry, &c, t as i64 + a.diagram_order, force)?);
                }
                if a.with_mc && t <= MAX_MC_T {
                    cases.push(mc_case(symmetry, &c, a.samples, a.seed)?);
                }
            }
        }
    }
    let all_equal = cases.iter().all(|c| c["equal"] == json!(true));
    Ok(Report {
        value: json!({
            "max_t": a.max_t,
            "max_order": a.max_order,
            "symmetry": symmetries.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "cases": cases,
            "all_equal": all_equal,
        }),
        ok: all_equal,
    })
}

fn series_case(symmetry: Symmetry, c: &CycleType, order: i64) -> Result<Value, CliError> {
    let (delta, laurent) = series_pair(symmetry, c, order)?;
    Ok(json!({
        "check": "factorizations",
        "symmetry": symmetry.to_string(),
        "partition": c.parts(),
        "order": order,
        "lhs": series(&delta),
        "rhs": series(&laurent),
        "equal": delta == laurent,
    }))
}

fn diagram_case(symmetry: Symmetry, c: &CycleType, order: i64, force: bool) -> Result<Value, CliError> {
    let tau = match symmetry {
        Symmetry::Unitary => c.canonical_plain(),
        Symmetry::Orthogonal => c.canonical_orthogonal(),
    };
    let limit = if force { u128::MAX } else { DEFAULT_MATCHING_LIMIT };
    let ds = enumerate_diagrams_with_limit(&tau, order, symmetry, limit).map_err(failed)?;
    let mut sum = LaurentSeries::zero(order);
    for d in &ds {
        let k = d.contribution();
        sum.add_term(k.order, &BigRational::from_integer(k.sign.into()));
    }
    let (delta, laurent) = series_pair(symmetry, c, order)?;
    Ok(json!({
        "check": "diagrams",
        "symmetry": symmetry.to_string(),
        "partition": c.parts(),
        "target": tau.to_string(),
        "order": order,
        "per_order": per_order(&ds),
        "lhs": series(&sum),
        "rhs": series(&laurent),
        "equal": sum == laurent && sum == delta,
    }))
}

/// Distinct channels make exactly one matching contribute, so the
/// correlator is the class coefficient itself.
fn realizing_correlator(symmetry: Symmetry, c: &CycleType) -> (Vec<Element>, Vec<Element>, Ensemble, u32) {
    let t = c.total();
    match symmetry {
        Symmetry::Unitary => {
            let tau = c.canonical_plain();
            let positions = tau.positions();
            let z = (1..=t as u32).map(|k| Element { row: k, col: k }).collect();
            let zstar = (0..t).map(|k| Element { row: k as u32 + 1, col: positions[k] + 1 }).collect();
            (z, zstar, Ensemble::Cue, (t as u32).max(2))
        }
        Symmetry::Orthogonal => {
            let varpi = varpi_of_type(c);
            let images = varpi.positions();
            // slot z of the unconjugated product carries channel z + 1
            let mut slots = vec![0u32; 2 * t];
            for (z, &w) in images.iter().enumerate() {
                slots[w as usize] = z as u32 + 1;
            }
            let z = (0..t as u32).map(|k| Element { row: 2 * k + 1, col: 2 * k + 2 }).collect();
            let zstar = (0..t).map(|k| Element { row: slots[2 * k], col: slots[2 * k + 1] }).collect();
            (z, zstar, Ensemble::Coe, 2 * t as u32)
        }
    }
}

fn varpi_of_type(c: &CycleType) -> Permutation {
    let t = c.total() as u32;
    let ground = GroundSet::Barred(t);
    let mut images: Vec<u32> = (0..2 * t).collect();
    loop {
        let varpi = Permutation::from_positions(ground, images.clone()).expect("arrangement");
        let tau = target_orthogonal(&varpi).expect("barred ground set");
        if halved_cycle_type(&tau).expect("valid target") == *c {
            return varpi;
        }
        if !next_arrangement(&mut images) {
            unreachable!("every halved type is realized");
        }
    }
}

fn next_arrangement(p: &mut [u32]) -> bool {
    let n = p.len();
    let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn mc_case(symmetry: Symmetry, c: &CycleType, samples: u64, seed: u64) -> Result<Value, CliError> {
    let (z, zstar, ensemble, n) = realizing_correlator(symmetry, c);
    let spec = CorrelatorSpec::new(z, zstar, ensemble, n).map_err(failed)?;
    let exact = correlator(&spec).map_err(failed)?;
    let coefficient = class_coefficient(ensemble, c)
        .evaluate(&BigRational::from_integer(n.into()))
        .map_err(failed)?;
    let est = mc_correlator(&spec, samples, seed).map_err(failed)?;
    let deviation = est.deviation(Complex64::new(exact.to_f64().unwrap_or(f64::NAN), 0.0));
    let text = |es: &[Element]| es.iter().map(ToString::to_string).collect::<Vec<_>>().join(";");
    Ok(json!({
        "check": "monte-carlo",
        "symmetry": symmetry.to_string(),
        "partition": c.parts(),
        "n": n,
        "z": text(&spec.unconjugated),
        "zstar": text(&spec.conjugated),
        "lhs": estimate_json(&est),
        "rhs": rational(&exact),
        "deviation_se": deviation,
        "equal": deviation < MC_BAND && exact == coefficient,
    }))
}
