//! Moving stars along straight lines in the stereographic plane.
//!
//! A spec is one leg object, a JSON array of legs, or `{"legs": [...]}`.
//! Each leg moves the stars at `move_index` (one index or a list) from their
//! current positions to `target` in `steps` equal steps; a later leg starts
//! where the previous one ended unless it gives its own `start`.

use serde::{Deserialize, Serialize};

use super::format::text;
use super::{CliError, Options, Report};
use crate::classify::classify_state;
use crate::majorana::{from_constellation, Constellation};
use crate::measure::{dent3, dent4};
use crate::sphere::Root;
use crate::Complex64;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum RootIn {
    Finite([f64; 2]),
    Named(String),
}

impl RootIn {
    fn to_root(&self) -> Result<Root, String> {
        match self {
            RootIn::Finite([re, im]) if re.is_finite() && im.is_finite() => {
                Ok(Root::finite(*re, *im))
            }
            RootIn::Finite(_) => Err("non-finite root".to_string()),
            RootIn::Named(s) if s == "inf" => Ok(Root::Infinity),
            RootIn::Named(s) => Err(format!("unknown root {s:?} (use [re, im] or \"inf\")")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum MoveIndex {
    One(usize),
    Many(Vec<usize>),
}

impl MoveIndex {
    fn indices(&self) -> Vec<usize> {
        match self {
            MoveIndex::One(i) => vec![*i],
            MoveIndex::Many(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepLeg {
    #[serde(default)]
    pub start: Option<Vec<RootIn>>,
    pub move_index: MoveIndex,
    pub target: [f64; 2],
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum SweepSpec {
    Legs { legs: Vec<SweepLeg> },
    List(Vec<SweepLeg>),
    Single(SweepLeg),
}

impl SweepSpec {
    pub fn legs(&self) -> &[SweepLeg] {
        match self {
            SweepSpec::Legs { legs } | SweepSpec::List(legs) => legs,
            SweepSpec::Single(leg) => std::slice::from_ref(leg),
        }
    }
}

pub fn parse_sweep(text: &str) -> Result<SweepSpec, CliError> {
    let spec: SweepSpec = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("sweep spec: {e}")))?;
    if spec.legs().is_empty() {
        return Err(CliError::Parse("sweep spec has no legs".to_string()));
    }
    if spec.legs()[0].start.is_none() {
        return Err(CliError::Parse("first leg needs a start constellation".to_string()));
    }
    Ok(spec)
}

#[derive(Debug, Serialize)]
struct Row {
    leg: usize,
    step: usize,
    t: String,
    root_re: String,
    root_im: String,
    class: String,
    partition: String,
    dent: String,
    transition: bool,
}

/// One row of a sweep, before formatting.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub leg: usize,
    pub step: usize,
    pub t: f64,
    pub root: Complex64,
    pub roots: Vec<Root>,
    pub outcome: Result<(String, String, f64), String>,
}

/// Class label, partition and `D_ent` of the state with these roots.
fn evaluate(roots: &[Root], tol: f64) -> Result<(String, String, f64), String> {
    let state = Constellation::from_roots(roots)
        .and_then(|c| from_constellation(&c))
        .map_err(|e| e.to_string())?;
    let report = classify_state(&state, tol).map_err(|e| e.to_string())?;
    let dent = match state.n() {
        3 => dent3(&state),
        _ => dent4(&state),
    }
    .map_err(|e| e.to_string())?;
    Ok((
        report.class.as_str().to_string(),
        report.partition.to_string(),
        dent,
    ))
}

pub fn sweep_points(spec: &SweepSpec, opts: &Options) -> Result<Vec<SweepPoint>, CliError> {
    let parse = |msg: String| CliError::Parse(msg);
    let mut current: Vec<Root> = Vec::new();
    let mut plan = Vec::new();
    for (li, leg) in spec.legs().iter().enumerate() {
        if let Some(start) = &leg.start {
            current = start
                .iter()
                .map(RootIn::to_root)
                .collect::<Result<_, _>>()
                .map_err(|e| parse(format!("leg {li}: {e}")))?;
        }
        let n = current.len();
        if n != 3 && n != 4 {
            return Err(parse(format!("leg {li}: sweeps need 3 or 4 stars, got {n}")));
        }
        let indices = leg.move_index.indices();
        if indices.is_empty() {
            return Err(parse(format!("leg {li}: empty move_index")));
        }
        let mut from = Vec::new();
        for &i in &indices {
            let root = current
                .get(i)
                .ok_or_else(|| parse(format!("leg {li}: move_index {i} out of range")))?;
            let z = root
                .as_finite()
                .ok_or_else(|| parse(format!("leg {li}: star {i} at infinity cannot move")))?;
            from.push((i, z));
        }
        let [re, im] = leg.target;
        if !(re.is_finite() && im.is_finite()) {
            return Err(parse(format!("leg {li}: non-finite target")));
        }
        let target = Complex64::new(re, im);
        for step in 0..=leg.steps {
            let t = if leg.steps == 0 {
                0.0
            } else {
                step as f64 / leg.steps as f64
            };
            let mut roots = current.clone();
            for &(i, z) in &from {
                roots[i] = Root::Finite(z * (1.0 - t) + target * t);
            }
            let root = roots[from[0].0].as_finite().unwrap_or_default();
            plan.push((li, step, t, root, roots));
        }
        if let Some((.., last)) = plan.last() {
            current = last.clone();
        }
    }

    let evaluate_one = |(leg, step, t, root, roots): (usize, usize, f64, Complex64, Vec<Root>)| {
        let outcome = evaluate(&roots, opts.tol);
        SweepPoint {
            leg,
            step,
            t,
            root,
            roots,
            outcome,
        }
    };
    Ok(if opts.parallel {
        use rayon::prelude::*;
        plan.into_par_iter().map(evaluate_one).collect()
    } else {
        plan.into_iter().map(evaluate_one).collect()
    })
}

/// CSV with header `leg,step,t,root_re,root_im,class,partition,dent,transition`.
/// A row is a transition when its class differs from the previous row's.
pub fn run_sweep(spec: &SweepSpec, opts: &Options) -> Result<Report, CliError> {
    let points = sweep_points(spec, opts)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut previous: Option<String> = None;
    let mut failures = 0;
    for p in &points {
        let (class, partition, dent) = match &p.outcome {
            Ok((c, part, d)) => (c.clone(), part.clone(), text(*d)),
            Err(e) => {
                failures += 1;
                (format!("error: {e}"), String::new(), String::new())
            }
        };
        let transition = previous.as_ref().is_some_and(|prev| *prev != class);
        previous = Some(class.clone());
        writer
            .serialize(Row {
                leg: p.leg,
                step: p.step,
                t: text(p.t),
                root_re: text(p.root.re),
                root_im: text(p.root.im),
                class,
                partition,
                dent,
                transition,
            })
            .map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(Report {
        body: String::from_utf8(bytes).expect("csv output is utf-8"),
        code: if failures > 0 { 3 } else { 0 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GHZ_START: &str = r#"[[1,0],[-0.5,0.8660254037844386],[-0.5,-0.8660254037844386]]"#;

    #[test]
    fn zero_steps_is_one_row_of_the_start_state() {
        let spec = parse_sweep(&format!(
            r#"{{"start": {GHZ_START}, "move_index": 0, "target": [0, 0], "steps": 0}}"#
        ))
        .unwrap();
        let report = run_sweep(&spec, &Options::default()).unwrap();
        let lines: Vec<&str> = report.body.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "leg,step,t,root_re,root_im,class,partition,dent,transition");
        assert!(lines[1].starts_with("0,0,0.0,1.0,0.0,GHZ,\"[1,1,1]\",1.0,false"), "{}", lines[1]);
    }

    #[test]
    fn merge_cascade_ends_separable() {
        let spec = parse_sweep(&format!(
            r#"[{{"start": {GHZ_START}, "move_index": 0, "target": [-0.5,0.8660254037844386], "steps": 4}},
                {{"move_index": [0, 1], "target": [-0.5,-0.8660254037844386], "steps": 4}}]"#
        ))
        .unwrap();
        let points = sweep_points(&spec, &Options::default()).unwrap();
        let classes: Vec<&str> = points
            .iter()
            .map(|p| p.outcome.as_ref().unwrap().0.as_str())
            .collect();
        assert_eq!(classes.first(), Some(&"GHZ"));
        assert_eq!(classes[4], "W");
        assert_eq!(classes.last(), Some(&"Separable"));
        assert!(points.last().unwrap().outcome.as_ref().unwrap().2.abs() < 1e-9);
    }

    #[test]
    fn invalid_specs() {
        assert!(parse_sweep("{}").is_err());
        assert!(parse_sweep(r#"{"move_index": 0, "target": [0,0], "steps": 1}"#).is_err());
        let spec = parse_sweep(r#"{"start": [[0,0],"inf",[1,0]], "move_index": 1, "target": [0,0], "steps": 1}"#)
            .unwrap();
        assert!(matches!(sweep_points(&spec, &Options::default()), Err(CliError::Parse(_))));
        let spec = parse_sweep(r#"{"start": [[0,0],[1,0]], "move_index": 0, "target": [0,0], "steps": 1}"#)
            .unwrap();
        assert!(sweep_points(&spec, &Options::default()).is_err());
    }
}
