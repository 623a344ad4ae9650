use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use ruukin::algebra::{DumpFile, MPoly, Var};
use ruukin::kinematics::{self, FkDegeneration, KinematicModel};
use ruukin::model::{general_constraints, translational_system, Design, ModelError};
use ruukin::singularity::{
    joint_poly, output_eliminant, sample_surface, self_motion, torus_equation, Grid, JointKind,
    SingularityModel, SINGULARITY_TOL,
};
use ruukin::verify::{verify as run_verify, CURVE_TOL};
use ruukin::workspace::{
    eliminate_inputs, mode_of, transition_curve_design, transition_curve_point, Mode,
    WorkspaceSystem,
};

use crate::exit;
use crate::format::{clean, csv_row, design_json, emit, exact, header, json_text, num};
use crate::{Common, Format, GridSpec, SurfaceKind, Triple};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Design(#[from] ModelError),
    #[error("{0}")]
    Compute(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        exit::USAGE
    }
}

type CmdResult = Result<u8, CliError>;

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn load_design(common: &Common, default: Design) -> Result<Design, CliError> {
    match &common.design {
        Some(path) => Ok(Design::load(path)?),
        None => Ok(default),
    }
}

fn format_of(common: &Common, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!(
            "format {f:?} is not available here (use one of {allowed:?})"
        )))
    }
}

fn write(common: &Common, text: &str) -> Result<(), CliError> {
    emit(common.out.as_deref(), text).map_err(|source| CliError::Io {
        path: common
            .out
            .as_ref()
            .map_or("stdout".into(), |p| p.display().to_string()),
        source,
    })
}

fn nums(v: &[f64]) -> Value {
    json!(v.iter().map(|&x| clean(x)).collect::<Vec<_>>())
}

/// File-name-safe label of a design.
fn design_key(design: &Design) -> String {
    [design.a1(), design.a3(), design.r0(), design.r1()]
        .iter()
        .map(|r| exact(r).replace('/', "over").replace('-', "m"))
        .collect::<Vec<_>>()
        .join("_")
}

fn read_cache(path: &Path) -> Option<DumpFile> {
    let text = std::fs::read_to_string(path).ok()?;
    DumpFile::parse(&text).ok()
}

fn write_cache(path: &Path, file: &DumpFile) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    std::fs::write(path, file.write()).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn workspace(design: &Design, cache: Option<PathBuf>) -> Result<WorkspaceSystem, CliError> {
    let spec = design.into();
    let path = cache.map(|dir| dir.join(format!("workspace-{}.dump", design_key(design))));
    if let Some(file) = path.as_deref().and_then(read_cache) {
        if let Ok(ws) = WorkspaceSystem::from_dump(&file, &spec) {
            return Ok(ws);
        }
    }
    let ws = eliminate_inputs(&general_constraints(&spec)).map_err(compute)?;
    if let Some(path) = path {
        write_cache(&path, &ws.to_dump())?;
    }
    Ok(ws)
}

pub fn constraints(common: &Common, cache: Option<PathBuf>) -> CmdResult {
    format_of(common, Format::Dump, &[Format::Dump])?;
    let design = load_design(common, Design::pars())?;
    let spec = (&design).into();
    let mut file = DumpFile::new()
        .with_meta("tool", format!("ruukin {}", env!("CARGO_PKG_VERSION")))
        .with_meta("design", design.to_string());
    for (name, g) in general_constraints(&spec).equations() {
        file.push(name, g.clone());
    }
    for (name, g) in translational_system(&spec).equations() {
        file.push(&format!("wt.{name}"), g.clone());
    }
    for (name, g) in workspace(&design, cache)?.equations() {
        file.push(name, g.clone());
    }
    write(common, &file.write())?;
    Ok(exit::OK)
}

fn model(design: &Design) -> Result<KinematicModel, CliError> {
    KinematicModel::new(design).map_err(compute)
}

pub fn ik(common: &Common, pose: Triple) -> CmdResult {
    let format = format_of(common, Format::Json, &[Format::Json, Format::Csv])?;
    let design = load_design(common, Design::pars())?;
    let sol = ik_solve(&design, pose)?;
    let text = match format {
        Format::Csv => {
            let mut s = header(&design, &format!("ik pose={}", triple_text(&pose)));
            s.push_str("limb,root,tag\n");
            for (i, l) in sol.limbs.iter().enumerate() {
                let tag = tag_name(&l.tag);
                if l.roots.is_empty() {
                    s.push_str(&csv_row(&[(i + 1).to_string(), String::new(), tag.clone()]));
                }
                for r in &l.roots {
                    s.push_str(&csv_row(&[(i + 1).to_string(), num(*r), tag.clone()]));
                }
            }
            s
        }
        _ => {
            let limbs: Vec<Value> = sol
                .limbs
                .iter()
                .enumerate()
                .map(|(i, l)| json!({"limb": i + 1, "roots": nums(&l.roots), "tag": tag_name(&l.tag)}))
                .collect();
            json_text(&json!({
                "design": design_json(&design),
                "pose": nums(&pose),
                "limbs": limbs,
                "solutions": sol.count(),
                "combinations": sol.combinations().iter().map(|c| nums(c)).collect::<Vec<_>>(),
            }))
        }
    };
    write(common, &text)?;
    Ok(if sol.has_identity_limb() {
        exit::DEGENERATE
    } else {
        exit::OK
    })
}

fn ik_solve(design: &Design, pose: Triple) -> Result<ruukin::IkSolution64, CliError> {
    Ok(kinematics::ik(&model(design)?, pose))
}

fn tag_name<T: serde::Serialize>(tag: &T) -> String {
    match serde_json::to_value(tag) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn triple_text(t: &Triple) -> String {
    t.iter().map(|x| num(*x)).collect::<Vec<_>>().join(",")
}

fn degeneration_json(design: &Design, d: &ruukin::FkDegeneration64, inputs: Triple) -> Value {
    match d {
        FkDegeneration::None => Value::Null,
        FkDegeneration::SelfMotionCircle {
            center,
            normal,
            radius_sq,
        } => json!({
            "kind": "self-motion-circle",
            "center": nums(center),
            "normal": nums(normal),
            "radius_sq": clean(*radius_sq),
        }),
        FkDegeneration::SelfMotionSphere(sphere) => {
            // the self-motion circle of the design lies on the common sphere
            // when the inputs are its fixed values
            let circle = self_motion(design).and_then(|sm| {
                let fixed = inputs.iter().all(|t| {
                    sm.inputs
                        .values
                        .iter()
                        .any(|v| (t - v).abs() <= 1e-9 * (1.0 + v.abs()))
                });
                fixed.then(|| json!({"radius_sq": exact(&sm.radius_sq), "y3": 0}))
            });
            json!({
                "kind": "self-motion-sphere",
                "center": nums(&sphere.center),
                "radius_sq": clean(sphere.radius_sq),
                "self_motion_circle": circle,
            })
        }
        FkDegeneration::Inconsistent => json!({"kind": "inconsistent"}),
    }
}

pub fn fk(common: &Common, inputs: Triple) -> CmdResult {
    let format = format_of(common, Format::Json, &[Format::Json, Format::Csv])?;
    let design = load_design(common, Design::pars())?;
    let sol = kinematics::fk(&model(&design)?, inputs);
    let degenerate = sol.degeneration != FkDegeneration::None;
    let text = match format {
        Format::Csv => {
            let mut s = header(&design, &format!("fk inputs={}", triple_text(&inputs)));
            if degenerate {
                s.push_str(&format!(
                    "# degeneration={}\n",
                    degeneration_kind(&sol.degeneration)
                ));
            }
            s.push_str("y1,y2,y3\n");
            for p in &sol.points {
                s.push_str(&csv_row(&p.map(num)));
            }
            s
        }
        _ => {
            let complex = match (&sol.line, sol.points.is_empty()) {
                (Some(line), true) => line
                    .complex_points()
                    .iter()
                    .map(|p| p.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
                    .into(),
                _ => Value::Null,
            };
            json_text(&json!({
                "design": design_json(&design),
                "inputs": nums(&inputs),
                "points": sol.points.iter().map(|p| nums(p)).collect::<Vec<_>>(),
                "double": sol.double,
                "degeneration": degeneration_json(&design, &sol.degeneration, inputs),
                "complex_points": complex,
            }))
        }
    };
    write(common, &text)?;
    Ok(if degenerate {
        exit::DEGENERATE
    } else {
        exit::OK
    })
}

fn degeneration_kind(d: &ruukin::FkDegeneration64) -> &'static str {
    match d {
        FkDegeneration::None => "none",
        FkDegeneration::SelfMotionCircle { .. } => "self-motion-circle",
        FkDegeneration::SelfMotionSphere(_) => "self-motion-sphere",
        FkDegeneration::Inconsistent => "inconsistent",
    }
}

pub fn classify(common: &Common, pose: Triple, inputs: Triple) -> CmdResult {
    format_of(common, Format::Json, &[Format::Json])?;
    let design = load_design(common, Design::pars())?;
    let tol = common.tol.unwrap_or(SINGULARITY_TOL);
    let model = SingularityModel::new(&design).map_err(compute)?;
    let r = model.classify(pose, inputs, tol).map_err(compute)?;
    let flagged = |flags: &[bool]| -> Vec<usize> {
        flags
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect()
    };
    let output_flags = r.output_residuals.map(|x| x <= tol);
    let text = json_text(&json!({
        "design": design_json(&design),
        "pose": nums(&pose),
        "inputs": nums(&inputs),
        "tol": tol,
        "input_singular": flagged(&r.input),
        "output_singular": flagged(&output_flags),
        "self_motion": r.self_motion,
        "singular": r.any(),
        "input_residuals": nums(&r.input_residuals),
        "output_residuals": nums(&r.output_residuals),
        "variety_residuals": nums(&r.variety_residuals),
    }));
    write(common, &text)?;
    Ok(exit::OK)
}

fn eliminant(design: &Design, cache: Option<PathBuf>) -> Result<MPoly, CliError> {
    let path = cache.map(|dir| dir.join(format!("eliminant-{}.dump", design_key(design))));
    if let Some(file) = path.as_deref().and_then(read_cache) {
        if file.meta("design") == Some(design.to_string().as_str()) {
            if let Some(p) = file.get("eliminant") {
                return Ok(p.clone());
            }
        }
    }
    let rep = output_eliminant(design).map_err(compute)?;
    if let Some(path) = path {
        let mut file = DumpFile::new()
            .with_meta("tool", format!("ruukin {}", env!("CARGO_PKG_VERSION")))
            .with_meta("design", design.to_string());
        file.push("eliminant", rep.eliminant.clone());
        write_cache(&path, &file)?;
    }
    Ok(rep.eliminant)
}

const Y: [Var; 3] = [Var::Y1, Var::Y2, Var::Y3];
const T: [Var; 3] = [Var::T1, Var::T2, Var::T3];

pub fn surface(
    common: &Common,
    which: SurfaceKind,
    grid: &GridSpec,
    limb: usize,
    cache: Option<PathBuf>,
) -> CmdResult {
    let format = format_of(common, Format::Csv, &[Format::Csv, Format::Json])?;
    let design = load_design(common, Design::pars())?;
    let axes = match grid.0.as_slice() {
        [a] => [*a; 3],
        [a, b, c] => [*a, *b, *c],
        _ => return Err(CliError::Usage("--grid needs one or three axes".into())),
    };
    let (name, poly, vars) = match which {
        SurfaceKind::InputTorus => (
            format!("input-torus limb={limb}"),
            torus_equation(limb, &(&design).into()).map_err(compute)?,
            Y,
        ),
        SurfaceKind::OutputEliminant => ("output-eliminant".into(), eliminant(&design, cache)?, Y),
        SurfaceKind::JointInput => ("joint-input".into(), joint_poly(JointKind::Input), T),
        SurfaceKind::JointOutput => ("joint-output".into(), joint_poly(JointKind::Output), T),
    };
    let samples = sample_surface(&poly, &Grid { vars, axes }).map_err(compute)?;
    let names = vars.map(|v| v.name().to_string());
    let text = match format {
        Format::Json => json_text(&json!({
            "design": design_json(&design),
            "surface": name,
            "vars": names,
            "samples": samples,
        })),
        _ => {
            let mut s = header(&design, &format!("surface={name}"));
            s.push_str(&format!("{},value,residual,crossing\n", names.join(",")));
            for p in &samples {
                let mut row: Vec<String> = p.coords.iter().map(|x| num(*x)).collect();
                row.push(num(p.value));
                row.push(num(p.residual));
                row.push(u8::from(p.crossing).to_string());
                s.push_str(&csv_row(&row));
            }
            s
        }
    };
    write(common, &text)?;
    Ok(exit::OK)
}

pub fn selfmotion(common: &Common) -> CmdResult {
    format_of(common, Format::Json, &[Format::Json])?;
    let design = load_design(common, Design::pars())?;
    let sm = self_motion(&design).map(|sm| {
        json!({
            "radius_sq": exact(&sm.radius_sq),
            "radicand": exact(&sm.inputs.radicand),
            "complex_inputs": sm.inputs.is_complex(),
            "inputs": {
                "exact": sm.inputs.exact.as_ref().map(|v| v.iter().map(exact).collect::<Vec<_>>()),
                "values": nums(&sm.inputs.values),
                "complex": sm.inputs.complex.map(|c| c.map(|(re, im)| [re, im])),
            },
        })
    });
    let text = json_text(&json!({
        "design": design_json(&design),
        "self_motion": sm,
    }));
    write(common, &text)?;
    Ok(exit::OK)
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::O1 => "O1",
        Mode::O2 => "O2",
        Mode::Other => "other",
    }
}

pub fn curve(common: &Common, grid: &GridSpec, turn: usize, cache: Option<PathBuf>) -> CmdResult {
    let format = format_of(common, Format::Csv, &[Format::Csv, Format::Json])?;
    let design = load_design(common, transition_curve_design())?;
    let [axis] = grid.0.as_slice() else {
        return Err(CliError::Usage(
            "--grid takes a single axis for the curve".into(),
        ));
    };
    let tol = common.tol.unwrap_or(CURVE_TOL);
    let ws = workspace(&design, cache)?;
    let mut rows = Vec::with_capacity(axis.count);
    for i in 0..axis.count {
        let t = axis.value(i);
        let pose = transition_curve_point(t, turn).map_err(|e| CliError::Usage(e.to_string()))?;
        let m = ws.membership(&pose, tol).map_err(compute)?;
        let mode = mode_of(&pose, 1e-12).map_err(compute)?;
        rows.push((t, pose, m, mode));
    }
    let text = match format {
        Format::Json => {
            let samples: Vec<Value> = rows
                .iter()
                .map(|(t, pose, m, mode)| {
                    json!({
                        "t": t,
                        "pose": nums(&pose.coords),
                        "mode": mode_name(*mode),
                        "residuals": nums(&m.residuals),
                        "in_workspace": m.in_workspace,
                    })
                })
                .collect();
            json_text(&json!({
                "design": design_json(&design),
                "turn": turn,
                "tol": tol,
                "samples": samples,
            }))
        }
        _ => {
            let mut s = header(&design, &format!("curve turn={turn}; tol={}", num(tol)));
            s.push_str("t,x0,x1,x2,x3,y0,y1,y2,y3,mode,max_residual,in_workspace\n");
            for (t, pose, m, mode) in &rows {
                let mut row = vec![num(*t)];
                row.extend(pose.coords.iter().map(|x| num(*x)));
                row.push(mode_name(*mode).to_string());
                row.push(num(m.residuals.iter().cloned().fold(0.0, f64::max)));
                row.push(u8::from(m.in_workspace).to_string());
                s.push_str(&csv_row(&row));
            }
            s
        }
    };
    write(common, &text)?;
    Ok(exit::OK)
}

pub fn verify(common: &Common, json_flag: bool) -> CmdResult {
    let format = if json_flag {
        Format::Json
    } else {
        format_of(common, Format::Text, &[Format::Text, Format::Json])?
    };
    let design = load_design(common, Design::pars())?;
    let report = run_verify(&design);
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&report).map_err(compute)?),
        _ => {
            let mut s = format!("design {}\n", report.design);
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
            }
            s.push_str(&format!(
                "{} passed, {} failed\n",
                report.checks.len() - report.failures(),
                report.failures()
            ));
            s
        }
    };
    write(common, &text)?;
    Ok(if report.passed() {
        exit::OK
    } else {
        exit::VERIFICATION
    })
}
