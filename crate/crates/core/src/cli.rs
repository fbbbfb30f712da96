//! JSON documents and command implementations behind the `csbf` binary.
//!
//! Input files look like
//!
//! ```json
//! { "frame": ["x", "y", "z"], "masses": { "x": 0.2, "y": 0.1, "x,y": 0.4, "y,z": 0.3 } }
//! ```
//!
//! where each key is a comma-joined list of labels. Output documents echo
//! the (normalized) input under `"input"`, so they can be fed back to any
//! command. Every real number is rounded to 12 significant digits.

use std::path::Path;

use clap::ValueEnum;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::belief_approx::{
    focused_transform, global_l1_belief_with_tolerance, global_l2_belief_with_tolerance,
    global_linf_belief_with_tolerance, partial_linf_belief, FocusedTransform, GammaBox,
};
use crate::error::Error;
use crate::evidence::{
    belief_from_mass, contour, core_of, is_consistent, Frame, FrameSubset, MassAssignment,
    MassFunction,
};
use crate::geometry::{Norm, SpaceKind};
use crate::mass_approx::{
    global_l1_mass_with_tolerance, global_l2_mass_with_tolerance, global_linf_mass_with_tolerance,
    partial_l1_mass, partial_l2_mass, partial_linf_mass, ApproxBox, Interval, PartialApprox,
};
use crate::oracle::{global_check, OracleConfig, MAX_ORACLE_FRAME, SUPPORTED_COMBINATIONS};
use crate::selection::{GlobalResult, TIE_TOLERANCE};

/// Masses must sum to one within this before renormalization.
pub const INGEST_TOLERANCE: f64 = 1e-6;
/// Deviation from one above which masses are rescaled.
pub const RENORMALIZE_THRESHOLD: f64 = 1e-12;
/// Deviation from one above which the rescaling is reported. Smaller
/// residues are what 12-digit serialization leaves behind.
pub const WARN_THRESHOLD: f64 = crate::evidence::INPUT_TOLERANCE;
/// Environment variable overriding the comparison tolerance.
pub const TOLERANCE_ENV: &str = "CSBF_TOLERANCE";

pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const INVALID_FLAGS: i32 = 3;
    pub const UNKNOWN_FOCUS: i32 = 4;
    pub const FRAME_TOO_LARGE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Parse(String),
    #[error("invalid flags: {0}")]
    InvalidFlags(String),
    #[error("unknown focus element {0:?}")]
    UnknownFocus(String),
    #[error("verification needs a frame of at most {max} elements, input has {0}", max = MAX_ORACLE_FRAME)]
    FrameTooLarge(usize),
    #[error("cannot write output: {0}")]
    Io(String),
    #[error(transparent)]
    Library(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) | CliError::Library(_) => exit_code::PARSE,
            CliError::InvalidFlags(_) => exit_code::INVALID_FLAGS,
            CliError::UnknownFocus(_) => exit_code::UNKNOWN_FOCUS,
            CliError::FrameTooLarge(_) => exit_code::FRAME_TOO_LARGE,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L1,
    L2,
    Linf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Mass,
    Belief,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    N1,
    N2,
}

impl From<NormArg> for Norm {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::L1 => Norm::L1,
            NormArg::L2 => Norm::L2,
            NormArg::Linf => Norm::LInf,
        }
    }
}

fn norm_name(norm: Norm) -> &'static str {
    match norm {
        Norm::L1 => "l1",
        Norm::L2 => "l2",
        Norm::LInf => "linf",
    }
}

fn space_names(space: SpaceKind) -> (&'static str, Option<&'static str>) {
    match space {
        SpaceKind::MassN1 => ("mass", Some("n1")),
        SpaceKind::MassN2 => ("mass", Some("n2")),
        SpaceKind::Belief => ("belief", None),
    }
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(value: f64) -> f64 {
    if value == 0.0 || !value.is_finite() {
        return if value == 0.0 { 0.0 } else { value };
    }
    let rounded: f64 = format!("{value:.11e}").parse().unwrap_or(value);
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    pub frame: Vec<String>,
    pub masses: IndexMap<String, f64>,
}

/// A parsed and validated input file.
#[derive(Clone, Debug)]
pub struct Ingested {
    pub mass: MassFunction,
    pub warnings: Vec<String>,
}

impl Ingested {
    pub fn frame(&self) -> &Frame {
        self.mass.frame()
    }

    /// Canonical echo: keys in frame order, entries in bitmask order.
    pub fn echo(&self) -> InputDocument {
        let frame = self.frame();
        InputDocument {
            frame: frame.labels().to_vec(),
            masses: self
                .mass
                .entries()
                .iter()
                .map(|(a, v)| (frame.format_subset(*a), round12(*v)))
                .collect(),
        }
    }
}

/// Parses an input document, or the `"input"` echo of an output document.
pub fn parse_input(text: &str) -> Result<Ingested, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let value = match value.get("input") {
        Some(inner) => inner.clone(),
        None => value,
    };
    let doc: InputDocument =
        serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
    ingest(&doc)
}

pub fn read_input(path: &Path) -> Result<Ingested, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

pub fn ingest(doc: &InputDocument) -> Result<Ingested, CliError> {
    let frame =
        Frame::new(doc.frame.iter().cloned()).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut entries: Vec<(FrameSubset, f64)> = Vec::with_capacity(doc.masses.len());
    for (key, value) in &doc.masses {
        let subset = frame
            .parse_subset(key)
            .map_err(|e| CliError::Parse(format!("key {key:?}: {e}")))?;
        if entries.iter().any(|(a, _)| *a == subset) {
            return Err(CliError::Parse(
                Error::DuplicateSubset(frame.format_subset(subset)).to_string(),
            ));
        }
        entries.push((subset, *value));
    }
    let total: f64 = entries.iter().map(|(_, v)| v).sum();
    if !total.is_finite() || (total - 1.0).abs() > INGEST_TOLERANCE {
        return Err(CliError::Parse(Error::NotNormalized(total).to_string()));
    }
    let mut warnings = Vec::new();
    if (total - 1.0).abs() > RENORMALIZE_THRESHOLD {
        if (total - 1.0).abs() > WARN_THRESHOLD {
            warnings.push(format!("masses sum to {total}; renormalized to 1"));
        }
        for (_, v) in entries.iter_mut() {
            *v /= total;
        }
    }
    let mass = MassFunction::new(frame, entries).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(Ingested { mass, warnings })
}

/// Reads the tie tolerance override, falling back to the library default.
pub fn tolerance_from_env() -> Result<f64, CliError> {
    match std::env::var(TOLERANCE_ENV) {
        Err(_) => Ok(TIE_TOLERANCE),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(CliError::InvalidFlags(format!(
                "{TOLERANCE_ENV}={raw:?} is not a nonnegative number"
            ))),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassBlock {
    pub masses: IndexMap<String, f64>,
    pub admissible: bool,
}

impl MassBlock {
    /// Lists every subset of the focus ultrafilter (zeros included) plus any
    /// other nonzero entry.
    fn new<M: MassAssignment>(m: &M, focus: Option<usize>) -> Self {
        let frame = m.frame();
        let masses = frame
            .subsets()
            .skip(1)
            .filter(|a| focus.is_some_and(|x| a.contains(x)) || m.entries().contains_key(a))
            .map(|a| (frame.format_subset(a), round12(m.mass(a))))
            .collect();
        let admissible = m
            .entries()
            .values()
            .all(|v| *v >= -crate::evidence::INPUT_TOLERANCE);
        Self { masses, admissible }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalRow {
    pub subset: String,
    pub lower: f64,
    pub upper: f64,
}

fn interval_rows(frame: &Frame, intervals: &[Interval]) -> Vec<IntervalRow> {
    intervals
        .iter()
        .map(|iv| IntervalRow {
            subset: frame.format_subset(iv.subset),
            lower: round12(iv.lower),
            upper: round12(iv.upper),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Solution {
    Point {
        focus: String,
        distance: f64,
        approximation: MassBlock,
    },
    MassBox {
        focus: String,
        distance: f64,
        intervals: Vec<IntervalRow>,
        admissible_intervals: Vec<IntervalRow>,
        admissible_strict_subset: bool,
        barycenter: MassBlock,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<MassBlock>>,
    },
    GammaBox {
        focus: String,
        distance: f64,
        gamma_intervals: Vec<IntervalRow>,
        barycenter: MassBlock,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<MassBlock>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub norm: String,
    pub space: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<String>,
    /// `None` for a global approximation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optima: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion: Option<IndexMap<String, f64>>,
    pub solutions: Vec<Solution>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Inspection {
    pub focal_elements: Vec<String>,
    pub core: Vec<String>,
    pub consistent: bool,
    pub contour: IndexMap<String, f64>,
    pub belief: IndexMap<String, f64>,
    pub plausibility: IndexMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartialCheck {
    pub focus: String,
    pub oracle_distance: f64,
    pub closed_form_distance: f64,
    pub max_gap: f64,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CombinationCheck {
    pub norm: String,
    pub space: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<String>,
    pub library_optima: Vec<String>,
    pub oracle_optima: Vec<String>,
    pub optima_agree: bool,
    pub partials: Vec<PartialCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySettings {
    pub grid_step: f64,
    pub refinement_rounds: usize,
    pub restarts: usize,
    pub tolerance: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub settings: VerifySettings,
    pub checks: Vec<CombinationCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum CommandResult {
    Approximate(Approximation),
    Inspect(Inspection),
    Verify(Verification),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub input: InputDocument,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub result: CommandResult,
}

impl OutputDocument {
    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }
}

/// Which component(s) to approximate on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Focus(String),
    Global,
}

#[derive(Clone, Debug)]
pub struct ApproximateOptions {
    pub norm: NormArg,
    pub space: SpaceArg,
    pub rep: Option<RepArg>,
    pub target: Target,
    pub vertices: bool,
    pub tolerance: f64,
}

impl ApproximateOptions {
    fn resolve_space(&self) -> Result<SpaceKind, CliError> {
        match (self.norm, self.space, self.rep) {
            (NormArg::L2, SpaceArg::Mass, Some(RepArg::N1)) => Ok(SpaceKind::MassN1),
            (NormArg::L2, SpaceArg::Mass, Some(RepArg::N2)) => Ok(SpaceKind::MassN2),
            (NormArg::L2, SpaceArg::Mass, None) => Err(CliError::InvalidFlags(
                "--rep n1|n2 is required for l2 in the mass space".into(),
            )),
            (_, _, Some(_)) => Err(CliError::InvalidFlags(
                "--rep only applies to --norm l2 --space mass".into(),
            )),
            (_, SpaceArg::Mass, None) => Ok(SpaceKind::MassN2),
            (_, SpaceArg::Belief, None) => Ok(SpaceKind::Belief),
        }
    }
}

fn point_solution(frame: &Frame, p: &PartialApprox) -> Solution {
    Solution::Point {
        focus: frame.label(p.focus).to_string(),
        distance: round12(p.distance),
        approximation: MassBlock::new(&p.result, Some(p.focus)),
    }
}

fn focused_solution(frame: &Frame, ft: &FocusedTransform, norm: Norm) -> Solution {
    let distance = if norm == Norm::L1 {
        ft.distance_l1
    } else {
        ft.distance_l2
    };
    Solution::Point {
        focus: frame.label(ft.focus).to_string(),
        distance: round12(distance),
        approximation: MassBlock::new(&ft.result, Some(ft.focus)),
    }
}

fn vertex_blocks<M: MassAssignment>(
    vertices: crate::Result<Vec<M>>,
    focus: usize,
) -> Result<Vec<MassBlock>, CliError> {
    match vertices {
        Ok(v) => Ok(v.iter().map(|p| MassBlock::new(p, Some(focus))).collect()),
        Err(e @ Error::TooManyVertices(_)) => Err(CliError::InvalidFlags(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn mass_box_solution(frame: &Frame, b: &ApproxBox, vertices: bool) -> Result<Solution, CliError> {
    let admissible = b.admissible_only();
    Ok(Solution::MassBox {
        focus: frame.label(b.focus).to_string(),
        distance: round12(b.distance),
        intervals: interval_rows(frame, &b.intervals),
        admissible_intervals: interval_rows(frame, &admissible.intervals),
        admissible_strict_subset: admissible.strict_subset,
        barycenter: MassBlock::new(&b.barycenter, Some(b.focus)),
        vertices: if vertices {
            Some(vertex_blocks(b.vertices(), b.focus)?)
        } else {
            None
        },
    })
}

fn gamma_box_solution(frame: &Frame, b: &GammaBox, vertices: bool) -> Result<Solution, CliError> {
    let barycenter = crate::belief_approx::gamma_to_mass(b, &b.barycenter())?;
    Ok(Solution::GammaBox {
        focus: frame.label(b.focus).to_string(),
        distance: round12(b.distance),
        gamma_intervals: interval_rows(frame, &b.intervals),
        barycenter: MassBlock::new(&barycenter, Some(b.focus)),
        vertices: if vertices {
            Some(vertex_blocks(b.vertices(), b.focus)?)
        } else {
            None
        },
    })
}

fn global_fields<P>(frame: &Frame, g: &GlobalResult<P>) -> (Vec<String>, IndexMap<String, f64>) {
    let optima = g
        .optima
        .iter()
        .map(|x| frame.label(*x).to_string())
        .collect();
    let criterion = g
        .criterion_values
        .iter()
        .enumerate()
        .map(|(x, v)| (frame.label(x).to_string(), round12(*v)))
        .collect();
    (optima, criterion)
}

pub fn cmd_approximate(
    input: &Ingested,
    opts: &ApproximateOptions,
) -> Result<OutputDocument, CliError> {
    let space = opts.resolve_space()?;
    let norm: Norm = opts.norm.into();
    let m = &input.mass;
    let frame = m.frame();
    let focus = match &opts.target {
        Target::Focus(label) => Some(
            frame
                .index_of(label)
                .ok_or_else(|| CliError::UnknownFocus(label.clone()))?,
        ),
        Target::Global => None,
    };
    let tol = opts.tolerance;

    let (optima_and_criterion, solutions) = match (norm, space, focus) {
        (Norm::L1, SpaceKind::MassN2, Some(x)) => {
            (None, vec![point_solution(frame, &partial_l1_mass(m, x)?)])
        }
        (Norm::L1, SpaceKind::MassN2, None) => {
            let g = global_l1_mass_with_tolerance(m, tol)?;
            let sols = g
                .payloads
                .iter()
                .map(|p| point_solution(frame, p))
                .collect();
            (Some(global_fields(frame, &g)), sols)
        }
        (Norm::L2, SpaceKind::MassN1 | SpaceKind::MassN2, Some(x)) => (
            None,
            vec![point_solution(frame, &partial_l2_mass(m, x, space)?)],
        ),
        (Norm::L2, SpaceKind::MassN1 | SpaceKind::MassN2, None) => {
            let g = global_l2_mass_with_tolerance(m, space, tol)?;
            let sols = g
                .payloads
                .iter()
                .map(|p| point_solution(frame, p))
                .collect();
            (Some(global_fields(frame, &g)), sols)
        }
        (Norm::LInf, SpaceKind::MassN2, Some(x)) => (
            None,
            vec![mass_box_solution(
                frame,
                &partial_linf_mass(m, x)?,
                opts.vertices,
            )?],
        ),
        (Norm::LInf, SpaceKind::MassN2, None) => {
            let g = global_linf_mass_with_tolerance(m, tol)?;
            let sols = g
                .payloads
                .iter()
                .map(|b| mass_box_solution(frame, b, opts.vertices))
                .collect::<Result<_, _>>()?;
            (Some(global_fields(frame, &g)), sols)
        }
        (Norm::L1 | Norm::L2, SpaceKind::Belief, Some(x)) => (
            None,
            vec![focused_solution(frame, &focused_transform(m, x)?, norm)],
        ),
        (Norm::L1 | Norm::L2, SpaceKind::Belief, None) => {
            let g = if norm == Norm::L1 {
                global_l1_belief_with_tolerance(m, tol)?
            } else {
                global_l2_belief_with_tolerance(m, tol)?
            };
            let sols = g
                .payloads
                .iter()
                .map(|ft| focused_solution(frame, ft, norm))
                .collect();
            (Some(global_fields(frame, &g)), sols)
        }
        (Norm::LInf, SpaceKind::Belief, Some(x)) => (
            None,
            vec![gamma_box_solution(
                frame,
                &partial_linf_belief(m, x)?,
                opts.vertices,
            )?],
        ),
        (Norm::LInf, SpaceKind::Belief, None) => {
            let g = global_linf_belief_with_tolerance(m, tol)?;
            let sols = g
                .payloads
                .iter()
                .map(|b| gamma_box_solution(frame, b, opts.vertices))
                .collect::<Result<_, _>>()?;
            (Some(global_fields(frame, &g)), sols)
        }
        _ => unreachable!("space resolution only yields supported pairs"),
    };

    let (space_name, rep) = space_names(space);
    let (optima, criterion) = match optima_and_criterion {
        Some((o, c)) => (Some(o), Some(c)),
        None => (None, None),
    };
    Ok(OutputDocument {
        input: input.echo(),
        warnings: input.warnings.clone(),
        result: CommandResult::Approximate(Approximation {
            norm: norm_name(norm).to_string(),
            space: space_name.to_string(),
            representation: if norm == Norm::L2 {
                rep.map(String::from)
            } else {
                None
            },
            focus: focus.map(|x| frame.label(x).to_string()),
            optima,
            criterion,
            solutions,
        }),
    })
}

pub fn cmd_inspect(input: &Ingested) -> OutputDocument {
    let m = &input.mass;
    let frame = m.frame();
    let view = belief_from_mass(m);
    let table = |values: &[f64]| -> IndexMap<String, f64> {
        frame
            .subsets()
            .skip(1)
            .map(|a| (frame.format_subset(a), round12(values[a.index()])))
            .collect()
    };
    let inspection = Inspection {
        focal_elements: m
            .focal_elements()
            .into_iter()
            .map(|a| frame.format_subset(a))
            .collect(),
        core: core_of(m)
            .elements()
            .map(|i| frame.label(i).to_string())
            .collect(),
        consistent: is_consistent(m),
        contour: contour(m)
            .into_iter()
            .enumerate()
            .map(|(x, pl)| (frame.label(x).to_string(), round12(pl)))
            .collect(),
        belief: table(view.belief_table()),
        plausibility: table(view.plausibility_table()),
    };
    OutputDocument {
        input: input.echo(),
        warnings: input.warnings.clone(),
        result: CommandResult::Inspect(inspection),
    }
}

/// Runs every oracle comparison; the flag is `false` if any gap or optimum
/// set breaks the contract.
pub fn cmd_verify(
    input: &Ingested,
    cfg: &OracleConfig,
) -> Result<(OutputDocument, bool), CliError> {
    let m = &input.mass;
    let frame = m.frame();
    if frame.len() > MAX_ORACLE_FRAME {
        return Err(CliError::FrameTooLarge(frame.len()));
    }
    cfg.validate()
        .map_err(|e| CliError::InvalidFlags(e.to_string()))?;
    let labels = |xs: &[usize]| xs.iter().map(|x| frame.label(*x).to_string()).collect();
    let mut checks = Vec::new();
    let mut passed = true;
    for (norm, space) in SUPPORTED_COMBINATIONS {
        let check = global_check(m, norm, space, cfg)?;
        let partials: Vec<PartialCheck> = check
            .reports
            .iter()
            .map(|r| PartialCheck {
                focus: frame.label(r.focus).to_string(),
                oracle_distance: round12(r.oracle_distance),
                closed_form_distance: round12(r.closed_form_distance),
                max_gap: round12(r.max_gap),
                converged: r.converged,
            })
            .collect();
        passed &= check.agrees && partials.iter().all(|p| p.converged);
        let (space_name, rep) = space_names(space);
        checks.push(CombinationCheck {
            norm: norm_name(norm).to_string(),
            space: space_name.to_string(),
            representation: if norm == Norm::L2 {
                rep.map(String::from)
            } else {
                None
            },
            library_optima: labels(&check.library_optima),
            oracle_optima: labels(&check.oracle_optima),
            optima_agree: check.agrees,
            partials,
        });
    }
    let doc = OutputDocument {
        input: input.echo(),
        warnings: input.warnings.clone(),
        result: CommandResult::Verify(Verification {
            settings: VerifySettings {
                grid_step: cfg.grid_step,
                refinement_rounds: cfg.refinement_rounds,
                restarts: cfg.random_restarts,
                tolerance: cfg.tolerance,
                seed: cfg.seed,
            },
            checks,
            passed,
        }),
    };
    Ok((doc, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TERNARY: &str =
        r#"{"frame":["x","y","z"],"masses":{"x":0.2,"y":0.1,"x,y":0.4,"y,z":0.3}}"#;

    #[test]
    fn rounding() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(-1e-17), -1e-17);
    }

    #[test]
    fn ingest_rejects_bad_documents() {
        for text in [
            "not json",
            r#"{"frame":["x","x"],"masses":{"x":1}}"#,
            r#"{"frame":["x","y"],"masses":{"z":1}}"#,
            r#"{"frame":["x","y"],"masses":{"x":0.5}}"#,
            r#"{"frame":["x","y"],"masses":{"x,y":0.5,"y,x":0.5}}"#,
            r#"{"frame":["x","y"],"masses":{"x":1.5,"y":-0.5}}"#,
        ] {
            let err = parse_input(text).unwrap_err();
            assert_eq!(err.exit_code(), exit_code::PARSE, "{text}");
        }
    }

    #[test]
    fn ingest_renormalizes_with_warning() {
        let doc = parse_input(r#"{"frame":["x","y"],"masses":{"x":0.5,"x,y":0.499999}}"#).unwrap();
        assert_eq!(doc.warnings.len(), 1);
        assert!((doc.mass.total() - 1.0).abs() < 1e-12);
        let clean = parse_input(TERNARY).unwrap();
        assert!(clean.warnings.is_empty());
    }

    #[test]
    fn rep_flag_validation() {
        let input = parse_input(TERNARY).unwrap();
        let base = ApproximateOptions {
            norm: NormArg::L1,
            space: SpaceArg::Mass,
            rep: Some(RepArg::N1),
            target: Target::Global,
            vertices: false,
            tolerance: TIE_TOLERANCE,
        };
        assert_eq!(
            cmd_approximate(&input, &base).unwrap_err().exit_code(),
            exit_code::INVALID_FLAGS
        );
        let l2 = ApproximateOptions {
            norm: NormArg::L2,
            rep: None,
            ..base.clone()
        };
        assert_eq!(
            cmd_approximate(&input, &l2).unwrap_err().exit_code(),
            exit_code::INVALID_FLAGS
        );
        let unknown = ApproximateOptions {
            rep: None,
            target: Target::Focus("w".into()),
            ..base
        };
        assert_eq!(
            cmd_approximate(&input, &unknown).unwrap_err().exit_code(),
            exit_code::UNKNOWN_FOCUS
        );
    }

    #[test]
    fn output_echo_parses_back() {
        let input = parse_input(TERNARY).unwrap();
        let doc = cmd_inspect(&input);
        let again = parse_input(&doc.render()).unwrap();
        assert_eq!(again.mass, input.mass);
        let parsed: OutputDocument = serde_json::from_str(&doc.render()).unwrap();
        assert_eq!(parsed, doc);
    }
}
