//! Input elimination, workspace membership, operation modes and the
//! mode-transition curve.

use crate::algebra::{resultant, AlgebraError, DumpFile, MPoly, Var};
use crate::model::{ConstraintSystem, Design, DesignSpec, DualQuaternion, Pose};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WorkspaceError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("constraint system lacks equation {0}")]
    MissingEquation(String),
    #[error("the zero vector is not a pose")]
    ZeroPose,
    #[error("curve parameter {0} lies outside [-1, 1]")]
    OutOfRange(f64),
    #[error("negative radicand at curve parameter {0}")]
    NegativeRadicand(f64),
    #[error("workspace cache does not match: {0}")]
    CacheMismatch(String),
}

/// Workspace equations `g12, g34, g56` (free of the inputs) of one design.
#[derive(Clone, Debug, PartialEq)]
pub struct WorkspaceSystem {
    pub g12: MPoly,
    pub g34: MPoly,
    pub g56: MPoly,
    pub design: DesignSpec,
}

/// Eliminates `t_i` from each limb pair by a resultant; the results are
/// content-normalized.
pub fn eliminate_inputs(cs: &ConstraintSystem) -> Result<WorkspaceSystem, WorkspaceError> {
    let get = |name: &str| {
        cs.get(name)
            .ok_or_else(|| WorkspaceError::MissingEquation(name.to_string()))
    };
    let pairs = [
        ("g1", "g2", Var::T1),
        ("g3", "g4", Var::T2),
        ("g5", "g6", Var::T3),
    ];
    let mut out = Vec::with_capacity(3);
    for (a, b, t) in pairs {
        out.push(resultant(get(a)?, get(b)?, t)?);
    }
    let g56 = out.pop().expect("three resultants");
    let g34 = out.pop().expect("three resultants");
    let g12 = out.pop().expect("three resultants");
    Ok(WorkspaceSystem {
        g12,
        g34,
        g56,
        design: cs.design().clone(),
    })
}

/// Residuals of a membership test.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    /// Scale-normalized residuals of `g12, g34, g56`.
    pub residuals: [f64; 3],
    /// Scale-normalized Study quadric residual.
    pub study_residual: f64,
    pub in_workspace: bool,
}

/// Default relative tolerance for membership decisions.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

impl WorkspaceSystem {
    pub fn equations(&self) -> [(&'static str, &MPoly); 3] {
        [("g12", &self.g12), ("g34", &self.g34), ("g56", &self.g56)]
    }

    /// Total degree of each equation.
    pub fn degrees(&self) -> [u32; 3] {
        [&self.g12, &self.g34, &self.g56].map(MPoly::total_degree)
    }

    /// Evaluates the workspace equations at a (projectively normalized)
    /// pose. Each residual is `|g| / Σ|c·m|`, so the decision does not depend
    /// on the scaling of the eight coordinates.
    pub fn membership(&self, pose: &Pose<f64>, tol: f64) -> Result<Membership, WorkspaceError> {
        let pose = pose.normalized().ok_or(WorkspaceError::ZeroPose)?;
        let point = pose.assignment();
        let mut residuals = [0.0; 3];
        for (r, (_, g)) in residuals.iter_mut().zip(self.equations()) {
            *r = g.relative_residual(&point)?;
        }
        let study_residual = crate::model::study_quadric().relative_residual(&point)?;
        Ok(Membership {
            residuals,
            study_residual,
            in_workspace: residuals.iter().all(|r| *r <= tol),
        })
    }

    /// Serializes into the sectioned dump format, recording the design and
    /// the tool version.
    pub fn to_dump(&self) -> DumpFile {
        let mut f = DumpFile::new()
            .with_meta("tool", format!("ruukin {}", env!("CARGO_PKG_VERSION")))
            .with_meta("design", design_label(&self.design));
        for (name, p) in self.equations() {
            f.push(name, p.clone());
        }
        f
    }

    /// Reads a cache written by [`WorkspaceSystem::to_dump`], checking that
    /// it belongs to `design`.
    pub fn from_dump(file: &DumpFile, design: &DesignSpec) -> Result<Self, WorkspaceError> {
        let label = design_label(design);
        match file.meta("design") {
            Some(d) if d == label => {}
            other => {
                return Err(WorkspaceError::CacheMismatch(format!(
                    "cache is for design '{}', expected '{label}'",
                    other.unwrap_or("?")
                )))
            }
        }
        let get = |name: &str| {
            file.get(name)
                .cloned()
                .ok_or_else(|| WorkspaceError::CacheMismatch(format!("missing section {name}")))
        };
        let ws = WorkspaceSystem {
            g12: get("g12")?,
            g34: get("g34")?,
            g56: get("g56")?,
            design: design.clone(),
        };
        if ws
            .equations()
            .iter()
            .any(|(_, p)| Var::INPUTS.iter().any(|&t| p.has_var(t)))
        {
            return Err(WorkspaceError::CacheMismatch(
                "cached equations contain input variables".into(),
            ));
        }
        Ok(ws)
    }
}

fn design_label(spec: &DesignSpec) -> String {
    match spec {
        DesignSpec::Numeric(d) => d.to_string(),
        DesignSpec::Symbolic => "symbolic".to_string(),
    }
}

/// The two linear operation modes, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Mode {
    /// Translational mode `x0 = 1, x1 = x2 = x3 = y0 = 0`.
    O1,
    /// Twisted translational mode `x3 = 1, x0 = x1 = x2 = y3 = 0`.
    O2,
    Other,
}

/// Classifies a pose by the two linear three-spaces after scaling the
/// largest coordinate to 1; coordinates with magnitude `≤ tol` count as zero.
pub fn mode_of(pose: &Pose<f64>, tol: f64) -> Result<Mode, WorkspaceError> {
    let p = pose.normalized().ok_or(WorkspaceError::ZeroPose)?;
    let c = &p.coords;
    let zero = |i: usize| c[i].abs() <= tol;
    if !zero(0) && [1, 2, 3, 4].into_iter().all(zero) {
        return Ok(Mode::O1);
    }
    if !zero(3) && [0, 1, 2, 7].into_iter().all(zero) {
        return Ok(Mode::O2);
    }
    Ok(Mode::Other)
}

/// Point `[1, 0, t, 0, 0, 0, 0, h(t)/4]` of the mode-transition curve of
/// design (5, 4, 11, 7), optionally turned by `k · 120°` about the z-axis
/// (`k = 0, 1, 2`), which maps the curve onto its symmetric siblings.
pub fn transition_curve_point(t: f64, turn: usize) -> Result<Pose<f64>, WorkspaceError> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(WorkspaceError::OutOfRange(t));
    }
    let q = 25.0 * t * t + 36.0;
    let sq = q.sqrt();
    let inner =
        ((-59.0 * t.powi(4) + 212.0 * t * t + 256.0) * sq - 600.0 * t.powi(5) - 864.0 * t.powi(3))
            / (sq * (t * t + 4.0));
    if inner < 0.0 {
        return Err(WorkspaceError::NegativeRadicand(t));
    }
    let h = 18.0 * t + sq + inner.sqrt();
    let pose = Pose::new([1.0, 0.0, t, 0.0, 0.0, 0.0, 0.0, h / 4.0]);
    if turn.is_multiple_of(3) {
        return Ok(pose);
    }
    let r = DualQuaternion::<f64>::rot_z_third(turn);
    let moved = r.compose(&pose.dual_quaternion()).compose(&r.conj());
    Ok(Pose::new(moved.coords()))
}

/// Design for which [`transition_curve_point`] is valid.
pub fn transition_curve_design() -> Design {
    Design::pars2()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_start_point() {
        let p = transition_curve_point(0.0, 0).unwrap();
        assert_eq!(p.coords, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.5]);
        assert!(matches!(
            transition_curve_point(1.5, 0),
            Err(WorkspaceError::OutOfRange(_))
        ));
    }

    #[test]
    fn modes_of_sample_poses() {
        let o1 = Pose::new([1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 3.0, 4.0]);
        let o2 = Pose::new([0.0, 0.0, 0.0, 1.0, 5.0, 1.0, 2.0, 0.0]);
        assert_eq!(mode_of(&o1, 1e-12).unwrap(), Mode::O1);
        assert_eq!(mode_of(&o2, 1e-12).unwrap(), Mode::O2);
        assert_eq!(mode_of(&o1.scaled(-3.0), 1e-12).unwrap(), Mode::O1);
        let c = transition_curve_point(0.5, 0).unwrap();
        assert_eq!(mode_of(&c, 1e-12).unwrap(), Mode::Other);
        assert_eq!(
            mode_of(&Pose::new([0.0; 8]), 1e-12),
            Err(WorkspaceError::ZeroPose)
        );
    }
}
