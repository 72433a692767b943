//! Subcommand implementations; each returns a `Report` whose `pass` field
//! drives the exit code (0 computed and true, 1 computed and false, 2 input
//! failure handled by the caller).

use crate::curvefile::{parse_curve_path, InputError, ParsedCurve};
use crate::report::{Report, NOTE_B_SUBSCRIPT, NOTE_DELTA_WILD, NOTE_TWELVE};
use crate::verify;
use kummerlab_core::dualgraph::{
    partial_resolution_trace, DualGraph, DynkinClass, StartConfiguration,
};
use kummerlab_core::effmodel::{effective_model_fiber, fixed_scheme_fiber, FiberType};
use kummerlab_core::kummer::{
    check_admissible, check_pair_admissible, predict_rdp, resolution_checklist,
    AdmissibilityReport, PrimeRecord,
};
use kummerlab_core::localtate::{tate_algorithm, LocalModel, TateResult};
use kummerlab_core::numring::{primes_over, primes_over_two, LocalPrime};
use kummerlab_core::weierstrass::WeierstrassModel;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Unsupported(String),
}

fn math<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Unsupported(e.to_string())
}

/// Primes the prime-wise commands iterate over: everything above two plus
/// everything above odd primes dividing the norm of the discriminant.
pub fn relevant_primes(model: &WeierstrassModel) -> Result<Vec<LocalPrime>, CmdError> {
    let ring = model.ring();
    let mut out = primes_over_two(&ring).map_err(math)?;
    let mut n = model.invariants().delta.absolute_norm().abs();
    let two = num_bigint::BigInt::from(2);
    while n.is_even() {
        n /= &two;
    }
    let mut d = 3u64;
    while num_bigint::BigInt::from(d) * num_bigint::BigInt::from(d) <= n {
        if (&n % d).is_zero() {
            out.extend(primes_over(&ring, d).map_err(math)?);
            while (&n % d).is_zero() {
                n /= num_bigint::BigInt::from(d);
            }
        }
        d += 2;
        if d > 10_000_000 {
            return Err(CmdError::Unsupported(format!(
                "discriminant norm has a factor beyond the trial-division bound: {n}"
            )));
        }
    }
    if n > num_bigint::BigInt::from(1u8) {
        let p = u64::try_from(&n)
            .map_err(|_| CmdError::Unsupported(format!("prime factor too large: {n}")))?;
        out.extend(primes_over(&ring, p).map_err(math)?);
    }
    Ok(out)
}

fn select_primes(model: &WeierstrassModel, sel: &str) -> Result<Vec<LocalPrime>, CmdError> {
    let all = relevant_primes(model)?;
    if sel == "auto" {
        return Ok(all);
    }
    let idx: usize = sel
        .parse()
        .map_err(|_| CmdError::Unsupported(format!("--prime expects auto or an index, got {sel}")))?;
    all.get(idx)
        .cloned()
        .map(|p| vec![p])
        .ok_or_else(|| CmdError::Unsupported(format!("prime index {idx} out of range")))
}

fn tate_json(prime: &LocalPrime, t: &TateResult) -> Value {
    let c = t.minimal.coeffs();
    json!({
        "prime": prime.label(),
        "residue_char": prime.residue_char(),
        "symbol": t.symbol.to_string(),
        "m": t.m,
        "val_delta": t.val_delta_min,
        "conductor": t.conductor,
        "delta_wild": t.delta_wild,
        "reduction": t.reduction.to_string(),
        "minimal_coefficients": [
            c.a1.to_string(), c.a2.to_string(), c.a3.to_string(),
            c.a4.to_string(), c.a6.to_string(),
        ],
        "rescale_power": t.change.pi_power,
    })
}

fn prime_record_json(r: &PrimeRecord) -> Value {
    json!({
        "prime": r.label,
        "residue_char": r.residue_char,
        "reduction": r.reduction.to_string(),
        "symbol": r.symbol.to_string(),
        "val_delta_min": r.val_delta_min,
        "val_key": r.val_key,
        "val_d": r.val_d,
        "fiber_type": r.fiber_type.map(|f| f.to_string()),
        "fixed_components": r.fixed_components,
        "freeness": r.flag_i.to_string(),
        "reduction_type_condition": r.flag_ii.to_string(),
        "disconnected_fixed_fiber": r.flag_iii.to_string(),
    })
}

fn admissibility_json(rep: &AdmissibilityReport) -> Value {
    json!({
        "verdict": rep.verdict,
        "key_identity": rep.key_identity.to_string(),
        "primes": rep.primes.iter().map(prime_record_json).collect::<Vec<_>>(),
        "reasons": rep.reasons,
    })
}

pub fn cmd_invariants(path: &Path) -> Result<Report, CmdError> {
    let pc = parse_curve_path(path)?;
    let inv = pc.model.invariants();
    let key = pc.model.key_identity();
    let results = json!({
        "curve": pc.name(),
        "b2": inv.b2.to_string(),
        "b4": inv.b4.to_string(),
        "b6": inv.b6.to_string(),
        "b8": inv.b8.to_string(),
        "c4": inv.c4.to_string(),
        "c6": inv.c6.to_string(),
        "delta": inv.delta.to_string(),
        "j_numerator": inv.j.0.to_string(),
        "j_denominator": inv.j.1.to_string(),
        "key_identity": key.to_string(),
    });
    Ok(Report::new("invariants", results, true, format!("invariants of {}", pc.name())))
}

pub fn cmd_tate(path: &Path, prime_sel: &str) -> Result<Report, CmdError> {
    let pc = parse_curve_path(path)?;
    let primes = select_primes(&pc.model, prime_sel)?;
    let mut out = Vec::new();
    for p in &primes {
        let t = tate_algorithm(&pc.model, p).map_err(math)?;
        out.push(tate_json(p, &t));
    }
    let results = json!({ "curve": pc.name(), "primes": out });
    Ok(Report::new("tate", results, true, format!("local types of {}", pc.name())))
}

pub fn cmd_effmodel(path: &Path, prime_sel: &str) -> Result<Report, CmdError> {
    let pc = parse_curve_path(path)?;
    let primes: Vec<LocalPrime> = if prime_sel == "auto" {
        primes_over_two(&pc.ring).map_err(math)?
    } else {
        select_primes(&pc.model, prime_sel)?
    };
    let mut out = Vec::new();
    for p in &primes {
        let t = tate_algorithm(&pc.model, p).map_err(math)?;
        let eff = effective_model_fiber(&t.minimal).map_err(math)?;
        let fix = fixed_scheme_fiber(&t.minimal).map_err(math)?;
        out.push(json!({
            "prime": p.label(),
            "d": eff.d,
            "fiber_type": eff.fiber_type.to_string(),
            "tate_oort": [eff.tate_oort.0.to_string(), eff.tate_oort.1.to_string()],
            "line": [
                fix.line[0].to_string(), fix.line[1].to_string(), fix.line[2].to_string(),
            ],
            "fixed_points": fix.points,
            "fixed_components": fix.components,
            "lengths": fix.lengths,
            "etale": fix.etale,
        }));
    }
    let results = json!({ "curve": pc.name(), "primes": out });
    Ok(Report::new("effmodel", results, true, format!("effective models of {}", pc.name())))
}

pub fn cmd_admissible(path: &Path) -> Result<Report, CmdError> {
    let pc = parse_curve_path(path)?;
    let rep = check_admissible(&pc.model).map_err(math)?;
    let pass = rep.verdict;
    let results = admissibility_json(&rep);
    Ok(Report::new(
        "admissible",
        results,
        pass,
        format!(
            "{} is {}admissible for the Kummer construction",
            pc.name(),
            if pass { "" } else { "not " }
        ),
    )
    .with_notes(vec![NOTE_B_SUBSCRIPT.to_string()]))
}

pub fn cmd_pair(path1: &Path, path2: &Path) -> Result<Report, CmdError> {
    let a = parse_curve_path(path1)?;
    let b = parse_curve_path(path2)?;
    let rep = check_pair_admissible(&a.model, &b.model).map_err(math)?;
    let pass = rep.verdict;
    let results = json!({
        "verdict": rep.verdict,
        "same_bad_primes": rep.same_bad_primes,
        "primes": rep.char_two.iter().map(|r| json!({
            "prime": r.label,
            "at_least_one_disconnected": r.iii_star,
            "isomorphic_effective_models": r.isomorphic_effective_models,
            "fiber_types": [r.fiber_types.0.to_string(), r.fiber_types.1.to_string()],
            "fixed_components": [r.fixed_components.0, r.fixed_components.1],
        })).collect::<Vec<_>>(),
        "reasons": rep.reasons,
        "left": admissibility_json(&rep.left),
        "right": admissibility_json(&rep.right),
    });
    Ok(Report::new(
        "pair",
        results,
        pass,
        format!(
            "pair ({}, {}) is {}admissible",
            a.name(),
            b.name(),
            if pass { "" } else { "not " }
        ),
    ))
}

pub fn cmd_predict(
    residue_char: u64,
    fiber: &str,
    n: Option<u32>,
    fix_components: Option<(u32, u32)>,
) -> Result<Report, CmdError> {
    let fiber = match fiber {
        "z2" | "Z2" | "constant" => FiberType::ConstantZ2,
        "mu2" | "mu_2" => FiberType::Mu2,
        "alpha2" | "alpha_2" => FiberType::Alpha2,
        other => {
            return Err(CmdError::Unsupported(format!(
                "--fiber expects z2|mu2|alpha2, got {other}"
            )))
        }
    };
    let conf = predict_rdp(residue_char, fiber, n, fix_components).map_err(math)?;
    let results = json!({
        "configuration": conf.label(),
        "rank": conf.total_rank(),
        "entries": conf.entries.iter().map(|e| json!({
            "type": e.class.to_string(),
            "count": e.count,
            "critical": e.critical,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new(
        "predict",
        results,
        true,
        format!("configuration {}", conf.label()),
    ))
}

pub fn cmd_checklist(path1: &Path, path2: Option<&Path>) -> Result<Report, CmdError> {
    let a = parse_curve_path(path1)?;
    let b = match path2 {
        Some(p) => parse_curve_path(p)?,
        None => parse_curve_path(path1)?,
    };
    let pair = check_pair_admissible(&a.model, &b.model).map_err(math)?;
    if !pair.verdict {
        let results = json!({
            "verdict": false,
            "reasons": pair.reasons,
        });
        return Ok(Report::new(
            "checklist",
            results,
            false,
            "the pair is not admissible; no checklist derived",
        ));
    }
    let cl = resolution_checklist(&a.model, &b.model, &pair).map_err(math)?;
    let results = json!({
        "verdict": true,
        "third_root_of_unity": cl.third_root_of_unity_in_field,
        "critical_residue_field_equals_base": cl.critical_residue_field_equals_base,
        "two_torsion_constant": cl.two_torsion_constant.to_string(),
        "isomorphic_after_strict_henselization": cl.isomorphic_after_sh.to_string(),
        "quadratic_good_reduction": cl.quadratic_good_reduction.to_string(),
        "recommendation": cl.recommendation.to_string(),
        "primes": cl.per_prime.iter().map(|r| json!({
            "prime": r.label,
            "reduction": r.reduction.to_string(),
            "two_torsion_constant": [r.two_torsion_constant.0, r.two_torsion_constant.1],
            "kraus_order": r.kraus_order,
            "base_changed_symbol": r.base_changed_symbol.map(|s| s.to_string()),
        })).collect::<Vec<_>>(),
        "checklist_notes": cl.notes,
    });
    let pass = cl.two_torsion_constant.ok()
        && cl.isomorphic_after_sh.ok()
        && cl.quadratic_good_reduction.ok();
    Ok(Report::new(
        "checklist",
        results,
        pass,
        format!("recommendation: {}", cl.recommendation),
    )
    .with_notes(vec![NOTE_DELTA_WILD.to_string()]))
}

pub fn cmd_lattice(
    graph: Option<&str>,
    fundamental_cycle: bool,
    trace: Option<&str>,
) -> Result<Report, CmdError> {
    if let Some(which) = trace {
        let start = match which {
            "two-d8" => StartConfiguration::TwoD8PlusD4Chain,
            "four-d4" => StartConfiguration::FourD4PlusD4,
            "resolved" => StartConfiguration::Resolved,
            other => {
                return Err(CmdError::Unsupported(format!(
                    "--trace expects two-d8|four-d4|resolved, got {other}"
                )))
            }
        };
        let tr = partial_resolution_trace(start);
        let fmt_multiset = |set: &[(DynkinClass, u32)]| -> String {
            if set.is_empty() {
                "empty".into()
            } else {
                set.iter()
                    .map(|(c, n)| format!("{n}x{c}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        };
        let results = json!({
            "start": fmt_multiset(&tr.start),
            "critical": tr.critical.map(|c| c.to_string()),
            "states": tr.states.iter().map(|s| json!({
                "fiber_components": s.fiber_components,
                "singularities": fmt_multiset(&s.singularities),
            })).collect::<Vec<_>>(),
            "resolved": tr.final_state_empty(),
        });
        let pass = tr.final_state_empty() && tr.rank_accounting_holds();
        return Ok(Report::new("lattice", results, pass, format!("trace {which}")));
    }
    let Some(name) = graph else {
        return Err(CmdError::Unsupported(
            "lattice needs --graph <ADE> or --trace <name>".into(),
        ));
    };
    let class = parse_dynkin(name)?;
    let g = DualGraph::dynkin(class).map_err(math)?;
    let neg = g.is_negative_definite();
    let mut results = json!({
        "graph": class.to_string(),
        "vertices": g.len(),
        "negative_definite": neg,
    });
    if fundamental_cycle {
        let z = g.fundamental_cycle().map_err(math)?;
        results["fundamental_cycle"] = json!(z
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>());
        results["z_squared"] = json!(z.self_intersection.to_string());
    }
    Ok(Report::new("lattice", results, true, format!("lattice data for {class}")))
}

fn parse_dynkin(name: &str) -> Result<DynkinClass, CmdError> {
    let name = name.trim();
    let (head, tail) = name.split_at(1);
    let n: u32 = tail
        .parse()
        .map_err(|_| CmdError::Unsupported(format!("bad Dynkin name {name}")))?;
    let class = match head {
        "A" | "a" => DynkinClass::A(n),
        "D" | "d" => DynkinClass::D(n),
        "E" | "e" => DynkinClass::E(n),
        _ => return Err(CmdError::Unsupported(format!("bad Dynkin name {name}"))),
    };
    class.validate().map_err(math)?;
    Ok(class)
}

pub fn cmd_verify(filter: Option<&str>) -> Result<Report, CmdError> {
    let expectations = verify::run_expectations(filter)?;
    let pass = expectations.iter().all(|e| e.pass);
    let total = expectations.len();
    let passed = expectations.iter().filter(|e| e.pass).count();
    let results = json!({
        "expectations": expectations.iter().map(|e| json!({
            "name": e.name,
            "criterion": e.criterion,
            "source": e.source,
            "pass": e.pass,
            "detail": e.detail,
        })).collect::<Vec<_>>(),
        "passed": passed,
        "total": total,
    });
    let lines: Vec<String> = expectations
        .iter()
        .map(|e| {
            format!(
                "{} [{}] {} -- {}",
                if e.pass { "pass" } else { "FAIL" },
                e.criterion,
                e.name,
                e.detail
            )
        })
        .collect();
    Ok(Report::new(
        "verify-paper",
        results,
        pass,
        format!("{passed}/{total} expectations hold"),
    )
    .with_text_lines(lines)
    .with_notes(vec![
        NOTE_B_SUBSCRIPT.to_string(),
        NOTE_DELTA_WILD.to_string(),
        NOTE_TWELVE.to_string(),
    ]))
}

/// Re-exported for tests: run a parsed curve's admissibility.
pub fn admissible_of(pc: &ParsedCurve) -> Result<AdmissibilityReport, CmdError> {
    check_admissible(&pc.model).map_err(math)
}

/// Localize a parsed curve at its first prime above two.
pub fn first_local_model(pc: &ParsedCurve) -> Result<LocalModel, CmdError> {
    let p = primes_over_two(&pc.ring).map_err(math)?.remove(0);
    LocalModel::localize(&pc.model, &p).map_err(math)
}
