//! Subcommand bodies. Each takes already-read input and returns a report;
//! `main` does the printing and exiting.

use serde_json::{json, Value};

use crate::cone::{
    build_gamma_with_budget, first_failing_generator, sample_membership, verify_gamma_scaling,
    ConeVariety, SampleReport,
};
use crate::error::{Error, Result};
use crate::groebner::{is_unit_ideal_with_budget, Ideal, DEFAULT_STEP_BUDGET};
use crate::interpolate::{
    compose_with_surjection, interpolate_map, separating_functional, PointSet, PolyMap,
    TargetAssignment,
};
use crate::lift::{
    lift_morphism_with_budget, verify_projective_equality, wps_fixture, wps_obstruction,
    ProjectiveMapRep, WpsReport,
};
use crate::poly::{MonomialOrder, Polynomial, RationalFunction, VarSet};
use crate::trinomial::{
    admits_surjection_from_affine_space, to_polynomial, SurjectionReport, TrinomialHypersurface,
};

use super::job::JobFile;
use super::parse::parse_polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const BUDGET_ENV: &str = "CONELIFT_STEP_BUDGET";

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub exit: i32,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    fn new(exit: i32, json: Value, lines: Vec<String>) -> Self {
        let mut text = lines.join("\n");
        text.push('\n');
        Outcome { exit, json, text }
    }
}

/// Report for an input or usage error. Always exits 2.
pub fn error_outcome(e: &Error) -> Outcome {
    let kind = match e {
        Error::ParseError { .. } => "parse_error",
        Error::UnknownVariable(_) => "unknown_variable",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::ArityError { .. } => "arity_error",
        _ => "invalid_input",
    };
    Outcome::new(
        EXIT_USAGE,
        json!({ "error": { "kind": kind, "message": e.to_string() } }),
        vec![format!("error: {e}")],
    )
}

/// Reads the step budget override, if any.
pub fn step_budget(env: Option<&str>) -> Result<u64> {
    match env {
        None => Ok(DEFAULT_STEP_BUDGET),
        Some(s) => s.trim().parse().map_err(|_| {
            Error::InvalidInput(format!(
                "{BUDGET_ENV} must be a nonnegative integer, got `{s}`"
            ))
        }),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn list(xs: &[String]) -> String {
    format!("({})", xs.join(", "))
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

fn require<T>(v: Option<T>, section: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("job needs a [{section}] section")))
}

fn map_section(job: &JobFile, vars: &VarSet) -> Result<Option<Vec<RationalFunction>>> {
    job.rational_functions("map", vars)
}

/// The h tuple: taken from [h] when present, otherwise lifted from [map].
/// `Ok(Err(basis))` means the map has a base point.
fn h_tuple(
    job: &JobFile,
    vars: &VarSet,
    budget: u64,
) -> Result<std::result::Result<Vec<Polynomial>, Vec<String>>> {
    if let Some(h) = job.polynomials("h", vars)? {
        return Ok(Ok(h));
    }
    let map = require(map_section(job, vars)?, "h] or [map")?;
    match lift_morphism_with_budget(&ProjectiveMapRep::new(map)?, budget) {
        Ok(r) => Ok(Ok(r.h)),
        Err(Error::BasePointDetected { basis }) => Ok(Err(strings(basis.elements()))),
        Err(e) => Err(e),
    }
}

fn cone_of(job: &JobFile, k: usize) -> Result<ConeVariety> {
    let ambient = match job.names("ambient")? {
        Some(a) => a,
        None => VarSet::indexed("z", k)?,
    };
    let gens = job.polynomials("cone", &ambient)?.unwrap_or_default();
    ConeVariety::new(ambient, gens, job.dim()?)
}

fn sample_lines(r: &SampleReport) -> Vec<String> {
    let mut out = vec![format!(
        "samples: {} (seed {}, bound {})",
        r.n_samples, r.seed, r.bound
    )];
    for g in &r.generators {
        out.push(format!(
            "  {}: {} passed, {} failed",
            g.generator, g.passed, g.failed
        ));
        for w in &g.witnesses {
            out.push(format!(
                "    sample {} at ({}) gives {}",
                w.sample,
                w.point.join(", "),
                w.value
            ));
        }
    }
    out
}

pub fn lift(job_text: &str, budget: u64) -> Result<Outcome> {
    let job = JobFile::parse(job_text)?;
    let vars = job.vars()?;
    let map = require(map_section(&job, &vars)?, "map")?;
    let rep = ProjectiveMapRep::new(map.clone())?;
    let input = strings(&map);
    match lift_morphism_with_budget(&rep, budget) {
        Ok(r) => {
            let h = strings(&r.h);
            let cert = strings(r.certificate.elements());
            let equal = verify_projective_equality(&r.h, &map)?;
            let exit = if equal { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(Outcome::new(
                exit,
                json!({
                    "command": "lift",
                    "vars": vars.names(),
                    "map": input,
                    "base_point": false,
                    "h": h,
                    "certificate": cert,
                    "base_chart": r.base_chart,
                    "projectively_equal": equal,
                }),
                vec![
                    format!("map: [{}]", input.join(" : ")),
                    format!("h = {}", list(&h)),
                    format!("certificate: {}", set(&cert)),
                    format!("chart: coordinate {}", r.base_chart + 1),
                    format!("projectively equal to input: {equal}"),
                ],
            ))
        }
        Err(Error::BasePointDetected { basis }) => {
            let basis = strings(basis.elements());
            Ok(Outcome::new(
                EXIT_NEGATIVE,
                json!({
                    "command": "lift",
                    "vars": vars.names(),
                    "map": input,
                    "base_point": true,
                    "basis": basis,
                }),
                vec![
                    format!("map: [{}]", input.join(" : ")),
                    "base point detected: the coordinates generate a proper ideal".into(),
                    format!("basis: {}", set(&basis)),
                ],
            ))
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
    pub bound: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            samples: 100,
            seed: 42,
            bound: 10,
        }
    }
}

pub fn cone(job_text: &str, sampling: Sampling, budget: u64) -> Result<Outcome> {
    let job = JobFile::parse(job_text)?;
    let vars = job.vars()?;
    let h = match h_tuple(&job, &vars, budget)? {
        Ok(h) => h,
        Err(basis) => return Ok(base_point_outcome("cone", basis)),
    };
    let cone = cone_of(&job, h.len())?;
    let cert = is_unit_ideal_with_budget(&h, budget)?;
    match build_gamma_with_budget(&h, &cone, budget) {
        Ok(surj) => {
            let report = sample_membership(
                &surj,
                &cone,
                sampling.samples,
                sampling.seed,
                sampling.bound,
            )?;
            let ok = report.all_passed();
            let h_s = strings(&surj.h);
            let gamma = strings(&surj.gamma);
            let mut lines = vec![
                format!("h = {}", list(&h_s)),
                format!("certificate: {}", set(&strings(cert.basis.elements()))),
                format!("gamma: A^{} -> Y, gamma = {}", surj.m, list(&gamma)),
                "maps into cone: true".into(),
            ];
            if let Some(e) = surj.expected_m {
                lines.push(format!("dim Y + 1 = {e}"));
            }
            lines.extend(sample_lines(&report));
            Ok(Outcome::new(
                if ok { EXIT_OK } else { EXIT_NEGATIVE },
                json!({
                    "command": "cone",
                    "vars": vars.names(),
                    "domain": surj.domain.names(),
                    "ambient": cone.ambient().names(),
                    "cone": strings(cone.generators()),
                    "h": h_s,
                    "certificate": cert.basis,
                    "gamma": gamma,
                    "m": surj.m,
                    "expected_m": surj.expected_m,
                    "maps_into_cone": true,
                    "samples": report,
                    "verified": ok,
                }),
                lines,
            ))
        }
        Err(Error::BasePointDetected { basis }) => {
            Ok(base_point_outcome("cone", strings(basis.elements())))
        }
        Err(Error::NotIntoCone { index }) => {
            let g = cone.generators()[index].to_string();
            Ok(Outcome::new(
                EXIT_NEGATIVE,
                json!({
                    "command": "cone",
                    "h": strings(&h),
                    "maps_into_cone": false,
                    "failing_generator": g,
                    "failing_index": index,
                }),
                vec![
                    format!("h = {}", list(&strings(&h))),
                    format!("h does not map into the cone: generator {g} does not vanish"),
                ],
            ))
        }
        Err(e) => Err(e),
    }
}

fn base_point_outcome(command: &str, basis: Vec<String>) -> Outcome {
    Outcome::new(
        EXIT_NEGATIVE,
        json!({ "command": command, "base_point": true, "basis": basis }),
        vec![
            "base point detected: the coordinates generate a proper ideal".into(),
            format!("basis: {}", set(&basis)),
        ],
    )
}

#[derive(Clone, Debug)]
struct Check {
    name: String,
    passed: bool,
    detail: Value,
}

fn check(name: impl Into<String>, passed: bool, detail: Value) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

/// Runs every check the job supplies material for.
pub fn verify(job_text: &str, sampling: Sampling, budget: u64) -> Result<Outcome> {
    let job = JobFile::parse(job_text)?;
    let vars = job.vars()?;
    let mut checks = Vec::new();

    let h = if job.has("h") || job.has("map") {
        match h_tuple(&job, &vars, budget)? {
            Ok(h) => Some(h),
            Err(basis) => {
                checks.push(check("unit_ideal", false, json!({ "basis": basis })));
                None
            }
        }
    } else {
        None
    };

    if let Some(h) = &h {
        let cert = is_unit_ideal_with_budget(h, budget)?;
        checks.push(check(
            "unit_ideal",
            cert.unit,
            json!({ "basis": cert.basis }),
        ));
        if job.has("h") {
            if let Some(map) = map_section(&job, &vars)? {
                let eq = verify_projective_equality(h, &map)?;
                checks.push(check(
                    "projective_equality",
                    eq,
                    json!({ "map": strings(&map) }),
                ));
            }
        }
        if job.has("cone") {
            let cone = cone_of(&job, h.len())?;
            let failing = first_failing_generator(h, &cone)?;
            checks.push(check(
                "maps_into_cone",
                failing.is_none(),
                json!({ "failing_generator": failing.map(|i| cone.generators()[i].to_string()) }),
            ));
            for f in cone.generators() {
                let ok = verify_gamma_scaling(f, h)?;
                checks.push(check(format!("scaling {f}"), ok, Value::Null));
            }
            if cert.unit && failing.is_none() {
                let surj = build_gamma_with_budget(h, &cone, budget)?;
                let report = sample_membership(
                    &surj,
                    &cone,
                    sampling.samples,
                    sampling.seed,
                    sampling.bound,
                )?;
                checks.push(check(
                    "samples",
                    report.all_passed(),
                    serde_json::to_value(&report).expect("serializable"),
                ));
            }
        }
    }

    if let Some(gens) = job.polynomials("ideal", &vars)? {
        let ideal = Ideal::new(gens, MonomialOrder::Grevlex)?.with_cached_basis();
        let basis = ideal.basis();
        checks.push(check(
            "ideal_basis",
            basis.s_pairs_reduce_to_zero() && basis.is_reduced(),
            json!({ "basis": basis }),
        ));
        for p in job.polynomials("check", &vars)?.unwrap_or_default() {
            let member = ideal.contains(&p);
            checks.push(check(
                format!("member {p}"),
                member,
                json!({ "remainder": basis.reduce(&p).to_string() }),
            ));
        }
    }

    if checks.is_empty() {
        return Err(Error::InvalidInput(
            "nothing to verify: give [h] or [map], or [ideal]".into(),
        ));
    }
    let all = checks.iter().all(|c| c.passed);
    let mut lines: Vec<String> = checks
        .iter()
        .map(|c| format!("[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name))
        .collect();
    lines.push(format!("verified: {all}"));
    let json_checks: Vec<Value> = checks
        .into_iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    Ok(Outcome::new(
        if all { EXIT_OK } else { EXIT_NEGATIVE },
        json!({ "command": "verify", "checks": json_checks, "verified": all }),
        lines,
    ))
}

pub fn interpolate(job_text: &str) -> Result<Outcome> {
    let job = JobFile::parse(job_text)?;
    let vars = job.vars()?;
    let z = PointSet::new(vars.clone(), require(job.points("points")?, "points")?)?;
    let a = TargetAssignment::new(require(job.points("preimages")?, "preimages")?)?;
    let pi_vars = match job.names("pi-vars")? {
        Some(v) => v,
        None => VarSet::indexed("a", a.arity())?,
    };
    let pi = match job.polynomials("pi", &pi_vars)? {
        Some(coords) => PolyMap::new(pi_vars, coords)?,
        None => PolyMap::identity(pi_vars),
    };
    let sep = separating_functional(&z);
    let phi_tilde = interpolate_map(&z, &a)?;
    let phi = compose_with_surjection(&pi, &phi_tilde)?;
    let cone = if job.has("cone") {
        Some(cone_of(&job, pi.coords.len())?)
    } else {
        None
    };

    let mut all = true;
    let mut rows = Vec::new();
    let mut lines = vec![
        format!("separating form: {}", sep.form),
        format!("phi~ = {}", list(&strings(&phi_tilde.coords))),
        format!("phi = {}", list(&strings(&phi.coords))),
    ];
    for (p, ai) in z.points().iter().zip(a.preimages()) {
        let got = phi.evaluate(p)?;
        let want = pi.evaluate(ai)?;
        let matches = got == want;
        let on_cone = match &cone {
            Some(c) => Some(
                c.generators()
                    .iter()
                    .map(|g| g.evaluate(&got).map(|v| v == crate::poly::rat(0)))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .all(|b| b),
            ),
            None => None,
        };
        all &= matches && on_cone.unwrap_or(true);
        let point = strings(p);
        let image = strings(&got);
        lines.push(format!(
            "phi({}) = {}: {}{}",
            point.join(", "),
            list(&image),
            if matches { "matches pi(a)" } else { "MISMATCH" },
            match on_cone {
                Some(true) => ", on cone",
                Some(false) => ", OFF CONE",
                None => "",
            }
        ));
        rows.push(json!({
            "point": point,
            "preimage": strings(ai),
            "image": image,
            "expected": strings(&want),
            "matches": matches,
            "on_cone": on_cone,
        }));
    }
    lines.push(format!("verified: {all}"));
    Ok(Outcome::new(
        if all { EXIT_OK } else { EXIT_NEGATIVE },
        json!({
            "command": "interpolate",
            "vars": vars.names(),
            "separating_functional": sep,
            "phi_tilde": phi_tilde,
            "phi": phi,
            "points": rows,
            "verified": all,
        }),
        lines,
    ))
}

/// Parses a block like `2,4` or `3`.
pub fn parse_block(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim().parse::<u64>().map_err(|_| {
                Error::InvalidInput(format!("`{}` is not a positive exponent", s.trim()))
            })
        })
        .collect()
}

fn trinomial_json(t: &TrinomialHypersurface, r: &SurjectionReport) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    let obj = v.as_object_mut().expect("struct serializes to an object");
    obj.insert("blocks".into(), json!(t.blocks()));
    obj.insert("polynomial".into(), json!(to_polynomial(t).to_string()));
    v
}

fn trinomial_lines(t: &TrinomialHypersurface, r: &SurjectionReport) -> Vec<String> {
    let l = r.classification.l_gcds;
    vec![
        format!("{} = 0", to_polynomial(t)),
        format!("block gcds: ({}, {}, {})", l[0], l[1], l[2]),
        format!(
            "witness: {}",
            serde_json::to_string(&r.classification.witness).expect("serializable")
        ),
        format!("rational: {}, cone: {}", r.rational, r.cone),
        r.explanation.clone(),
    ]
}

pub fn trinomial(l0: &str, l1: &str, l2: &str) -> Result<Outcome> {
    let t = TrinomialHypersurface::new(parse_block(l0)?, parse_block(l1)?, parse_block(l2)?)?;
    let r = admits_surjection_from_affine_space(&t);
    Ok(Outcome::new(
        if r.rational { EXIT_OK } else { EXIT_NEGATIVE },
        trinomial_json(&t, &r),
        trinomial_lines(&t, &r),
    ))
}

/// One hypersurface per line, blocks separated by `;`, e.g. `2,4 ; 3 ; 6,9`.
pub fn trinomial_batch(text: &str) -> Result<Outcome> {
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut all = true;
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let at_line = |e: Error| Error::ParseError {
            line: idx + 1,
            column: 1,
            message: e.to_string(),
        };
        let parts: Vec<&str> = body.split(';').collect();
        let [a, b, c] = parts[..] else {
            return Err(at_line(Error::InvalidInput(
                "expected three `;`-separated blocks".into(),
            )));
        };
        let t = TrinomialHypersurface::new(
            parse_block(a).map_err(at_line)?,
            parse_block(b).map_err(at_line)?,
            parse_block(c).map_err(at_line)?,
        )
        .map_err(at_line)?;
        let r = admits_surjection_from_affine_space(&t);
        all &= r.rational;
        lines.extend(trinomial_lines(&t, &r));
        lines.push(String::new());
        results.push(trinomial_json(&t, &r));
    }
    if results.is_empty() {
        return Err(Error::InvalidInput(
            "batch file has no hypersurfaces".into(),
        ));
    }
    lines.pop();
    Ok(Outcome::new(
        if all { EXIT_OK } else { EXIT_NEGATIVE },
        json!({ "command": "trinomial", "results": results }),
        lines,
    ))
}

fn wps_lines(r: &WpsReport) -> Vec<String> {
    let mut out = vec![
        format!("beta = [{}] into P(1,1,2)", strings(&r.fixture).join(" : ")),
        format!("target: {}", r.target),
    ];
    out.extend(
        r.steps
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{}. {s}", i + 1)),
    );
    out.push(format!("contradiction: {} ({})", r.contradiction, r.reason));
    out
}

/// The obstruction replay. `target` is a polynomial in x1, x2, x3.
pub fn wps_demo(target: Option<&str>) -> Result<Outcome> {
    let fixture = wps_fixture();
    let target = match target {
        Some(t) => parse_polynomial(t, fixture[0].vars())?,
        None => fixture[0].clone(),
    };
    let report = wps_obstruction(fixture, &target);
    let lines = wps_lines(&report);
    let mut json = serde_json::to_value(&report).expect("serializable");
    json.as_object_mut()
        .expect("object")
        .insert("command".into(), json!("wps-demo"));
    Ok(Outcome::new(EXIT_OK, json, lines))
}
