//! Declarative scenario jobs: a JSON description of one operation with its
//! inputs and parameters, validated and executed into a deterministic JSON
//! report plus an optional SVG. File IO stays in the CLI; this module only
//! maps scenario values to results.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::collection::{uniform_directions, Collection};
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::sampling::rng_from_seed;
use crate::scalar::{Arithmetic, Scalar, F64_TOL};
use crate::set_difference::{cover_diff, erode_diff};
use crate::subdiff::PwlConvexFunction;
use crate::suites;
use crate::svg::{render_svg, SvgSet, SvgStyle};
use crate::vector::Vector;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub version: u32,
    pub arithmetic: Arithmetic,
    #[serde(default)]
    pub seed: u64,
    pub operation: Operation,
    #[serde(default)]
    pub inputs: Inputs,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    Hull,
    Support,
    MinkowskiSum,
    Scale,
    ContainsPoint,
    ContainsSet,
    Intersect,
    Hausdorff,
    Norm,
    CoverDiff,
    ErodeDiff,
    GmpMinimal,
    GmpNorm,
    EpsSubdiff,
    GraphConvexity,
    LipschitzProbe,
    LemmaSuite,
    MpSignReport,
    Lemma4Explore,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<PolytopeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<PolytopeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<FunctionSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<Query>,
    #[serde(default)]
    pub params: Params,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeSpec {
    pub vertices: Vec<Vec<Scalar>>,
}

impl PolytopeSpec {
    pub fn to_polytope(&self) -> Result<Polytope> {
        let pts = self
            .vertices
            .iter()
            .map(|c| Vector::new(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Polytope::hull(pts)
    }

    pub fn from_polytope(p: &Polytope) -> PolytopeSpec {
        PolytopeSpec {
            vertices: p.vertices().iter().map(|v| v.0.clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    pub pieces: Vec<PieceSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceSpec {
    pub gradient: Vec<Scalar>,
    pub offset: Scalar,
}

impl FunctionSpec {
    pub fn to_function(&self) -> Result<PwlConvexFunction> {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Ok((Vector::new(p.gradient.clone())?, p.offset.clone())))
            .collect::<Result<Vec<_>>>()?;
        PwlConvexFunction::new(pieces)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Query {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<Scalar>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selectors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_instances: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probes: Option<usize>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub scenario: Scenario,
    pub results: serde_json::Value,
    pub checks: Vec<suites::Check>,
    pub timing_ms: f64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Serialization with the timing field zeroed, for determinism checks.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.timing_ms = 0.0;
        copy.to_json()
    }
}

pub struct RunOutput {
    pub report: Report,
    pub svg: Option<String>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario> {
        serde_json::from_str(text).map_err(|e| Error::Scenario(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes") + "\n"
    }

    fn all_scalars(&self) -> Vec<&Scalar> {
        let mut out = Vec::new();
        let inputs = &self.inputs;
        for spec in [&inputs.x, &inputs.y].into_iter().flatten() {
            for v in &spec.vertices {
                out.extend(v.iter());
            }
        }
        if let Some(f) = &inputs.function {
            for p in &f.pieces {
                out.extend(p.gradient.iter());
                out.push(&p.offset);
            }
        }
        if let Some(q) = &inputs.query {
            if let Some(p) = &q.point {
                out.extend(p.iter());
            }
            if let Some(d) = &q.direction {
                out.extend(d.iter());
            }
            if let Some(e) = &q.eps {
                out.push(e);
            }
        }
        for s in [
            &inputs.params.tolerance,
            &inputs.params.alpha,
            &inputs.params.eps,
            &inputs.params.upsilon,
        ]
        .into_iter()
        .flatten()
        {
            out.push(s);
        }
        out
    }

    fn all_scalars_mut(&mut self) -> Vec<&mut Scalar> {
        let mut out: Vec<&mut Scalar> = Vec::new();
        let inputs = &mut self.inputs;
        for spec in [&mut inputs.x, &mut inputs.y].into_iter().flatten() {
            for v in &mut spec.vertices {
                out.extend(v.iter_mut());
            }
        }
        if let Some(f) = &mut inputs.function {
            for p in &mut f.pieces {
                out.extend(p.gradient.iter_mut());
                out.push(&mut p.offset);
            }
        }
        if let Some(q) = &mut inputs.query {
            if let Some(p) = &mut q.point {
                out.extend(p.iter_mut());
            }
            if let Some(d) = &mut q.direction {
                out.extend(d.iter_mut());
            }
            if let Some(e) = &mut q.eps {
                out.push(e);
            }
        }
        for s in [
            &mut inputs.params.tolerance,
            &mut inputs.params.alpha,
            &mut inputs.params.eps,
            &mut inputs.params.upsilon,
        ]
        .into_iter()
        .flatten()
        {
            out.push(s);
        }
        out
    }

    /// Convert every scalar to the requested arithmetic mode (used by the
    /// CLI `--arith` override).
    pub fn with_arithmetic(mut self, mode: Arithmetic) -> Scenario {
        self.arithmetic = mode;
        for s in self.all_scalars_mut() {
            *s = match (mode, &*s) {
                (Arithmetic::Rational, Scalar::F64(v)) => Scalar::rat_from_f64(*v),
                (Arithmetic::Double, Scalar::Rat(_)) => Scalar::F64(s.to_f64()),
                _ => s.clone(),
            };
        }
        self
    }

    /// Schema and semantic diagnostics; empty means the scenario is runnable.
    pub fn validate(&self) -> Vec<String> {
        let mut errs = Vec::new();
        if self.version != SCHEMA_VERSION {
            errs.push(format!(
                "unsupported version {} (expected {SCHEMA_VERSION})",
                self.version
            ));
        }
        for s in self.all_scalars() {
            let ok = match self.arithmetic {
                Arithmetic::Rational => matches!(s, Scalar::Rat(_)),
                Arithmetic::Double => matches!(s, Scalar::F64(_)),
            };
            if !ok {
                errs.push(format!(
                    "scalar {s:?} does not match arithmetic mode {:?}; no mixing",
                    self.arithmetic
                ));
                break;
            }
        }
        let need = |errs: &mut Vec<String>, cond: bool, what: &str| {
            if !cond {
                errs.push(format!("operation {:?} requires {what}", self.operation));
            }
        };
        let has_x = self.inputs.x.is_some();
        let has_y = self.inputs.y.is_some();
        let has_f = self.inputs.function.is_some();
        let q = self.inputs.query.clone().unwrap_or_default();
        use Operation::*;
        match self.operation {
            Hull | Norm => need(&mut errs, has_x, "inputs.x"),
            Scale => {
                need(&mut errs, has_x, "inputs.x");
                need(&mut errs, self.inputs.params.alpha.is_some(), "params.alpha");
            }
            Support => {
                need(&mut errs, has_x, "inputs.x");
                need(&mut errs, q.direction.is_some(), "query.direction");
            }
            ContainsPoint => {
                need(&mut errs, has_x, "inputs.x");
                need(&mut errs, q.point.is_some(), "query.point");
            }
            MinkowskiSum | ContainsSet | Intersect | Hausdorff | CoverDiff | ErodeDiff
            | GmpMinimal | GmpNorm => {
                need(&mut errs, has_x, "inputs.x");
                need(&mut errs, has_y, "inputs.y");
            }
            EpsSubdiff => {
                need(&mut errs, has_f, "inputs.function");
                need(&mut errs, q.point.is_some(), "query.point");
                need(&mut errs, q.eps.is_some(), "query.eps");
                if let Some(e) = &q.eps {
                    if e.sign() < 0 {
                        errs.push("query.eps must be nonnegative".into());
                    }
                }
            }
            LipschitzProbe => {
                need(&mut errs, has_f, "inputs.function");
                need(&mut errs, q.point.is_some(), "query.point");
            }
            GraphConvexity | LemmaSuite | MpSignReport | Lemma4Explore => {}
        }
        if let Some(m) = self.inputs.params.grid {
            if m < 8 {
                errs.push("params.grid must be at least 8".into());
            }
        }
        for (name, spec) in [("x", &self.inputs.x), ("y", &self.inputs.y)] {
            if let Some(spec) = spec {
                if let Err(e) = spec.to_polytope() {
                    errs.push(format!("inputs.{name}: {e}"));
                }
            }
        }
        if let (Some(a), Some(b)) = (&self.inputs.x, &self.inputs.y) {
            if let (Ok(a), Ok(b)) = (a.to_polytope(), b.to_polytope()) {
                if a.dim() != b.dim() {
                    errs.push("inputs.x and inputs.y have different dimensions".into());
                }
            }
        }
        if let Some(f) = &self.inputs.function {
            if let Err(e) = f.to_function() {
                errs.push(format!("inputs.function: {e}"));
            }
        }
        errs
    }

    fn default_tolerance(&self) -> Scalar {
        self.inputs.params.tolerance.clone().unwrap_or(match self.arithmetic {
            Arithmetic::Rational => Scalar::zero(),
            Arithmetic::Double => Scalar::F64(F64_TOL),
        })
    }

    fn x(&self) -> Result<Polytope> {
        self.inputs
            .x
            .as_ref()
            .ok_or(Error::Scenario("missing inputs.x".into()))?
            .to_polytope()
    }

    fn y(&self) -> Result<Polytope> {
        self.inputs
            .y
            .as_ref()
            .ok_or(Error::Scenario("missing inputs.y".into()))?
            .to_polytope()
    }

    fn function(&self) -> Result<PwlConvexFunction> {
        self.inputs
            .function
            .as_ref()
            .ok_or(Error::Scenario("missing inputs.function".into()))?
            .to_function()
    }

    fn query_point(&self) -> Result<Vector> {
        let q = self
            .inputs
            .query
            .as_ref()
            .ok_or(Error::Scenario("missing query.point".into()))?;
        Vector::new(
            q.point
                .clone()
                .ok_or(Error::Scenario("missing query.point".into()))?,
        )
    }
}

fn poly_json(p: &Polytope) -> serde_json::Value {
    serde_json::to_value(PolytopeSpec::from_polytope(p)).expect("polytope serializes")
}

fn maybe_poly_json(p: &Option<Polytope>) -> serde_json::Value {
    match p {
        Some(p) => json!({ "empty": false, "set": poly_json(p) }),
        None => json!({ "empty": true }),
    }
}

pub fn run_scenario(sc: &Scenario, jobs: usize) -> Result<RunOutput> {
    let diags = sc.validate();
    if !diags.is_empty() {
        return Err(Error::Scenario(diags.join("; ")));
    }
    let start = std::time::Instant::now();
    let mut checks: Vec<suites::Check> = Vec::new();
    let mut svg_sets: Vec<(Polytope, String)> = Vec::new();
    let tau = sc.default_tolerance();
    let params = &sc.inputs.params;

    use Operation::*;
    let results = match sc.operation {
        Hull => poly_json(&sc.x()?),
        Norm => {
            let x = sc.x()?;
            json!({ "norm": x.norm(), "norm_sq": x.norm_sq() })
        }
        Scale => {
            let alpha = params
                .alpha
                .clone()
                .ok_or(Error::Scenario("missing params.alpha".into()))?;
            poly_json(&sc.x()?.scale(&alpha))
        }
        Support => {
            let x = sc.x()?;
            let q = sc.inputs.query.clone().unwrap_or_default();
            let dir = Vector::new(
                q.direction
                    .ok_or(Error::Scenario("missing query.direction".into()))?,
            )?;
            let (value, face) = x.support(&dir)?;
            json!({ "value": value, "face": poly_json(&face) })
        }
        ContainsPoint => {
            let x = sc.x()?;
            json!({ "contains": x.contains_point(&sc.query_point()?)? })
        }
        ContainsSet => {
            let (x, y) = (sc.x()?, sc.y()?);
            json!({ "contains": x.contains_set(&y)? })
        }
        MinkowskiSum => {
            let z = sc.x()?.minkowski_sum(&sc.y()?)?;
            svg_sets.push((z.clone(), "X + Y".into()));
            poly_json(&z)
        }
        Intersect => maybe_poly_json(&sc.x()?.intersect(&sc.y()?)?),
        Hausdorff => {
            let (x, y) = (sc.x()?, sc.y()?);
            json!({ "hausdorff": x.hausdorff(&y)?, "hausdorff_sq": x.hausdorff_sq(&y)? })
        }
        CoverDiff => {
            let (x, y) = (sc.x()?, sc.y()?);
            let z = cover_diff(&x, &y)?;
            if let Some(z) = &z {
                checks.push(suites::Check::new(
                    "covering_property",
                    z.minkowski_sum(&y)?.contains_set(&x)?,
                ));
                svg_sets.push((z.clone(), "X ~ Y".into()));
            }
            svg_sets.push((x, "X".into()));
            svg_sets.push((y, "Y".into()));
            maybe_poly_json(&z)
        }
        ErodeDiff => {
            let (x, y) = (sc.x()?, sc.y()?);
            let z = erode_diff(&x, &y)?;
            if let Some(z) = &z {
                checks.push(suites::Check::new(
                    "erosion_property",
                    x.contains_set(&z.minkowski_sum(&y)?)?,
                ));
                svg_sets.push((z.clone(), "X - Y".into()));
            }
            svg_sets.push((x, "X".into()));
            svg_sets.push((y, "Y".into()));
            maybe_poly_json(&z)
        }
        GmpMinimal => {
            let (x, y) = (sc.x()?, sc.y()?);
            let c = Collection::make(x.clone(), y.clone())?;
            let k = params.selectors.unwrap_or(8);
            let m = params.grid.unwrap_or(32);
            let sels = uniform_directions(k, sc.arithmetic);
            let reports = suites::run_jobs(sels, jobs, |sel| {
                c.minimal_element(&sel, m, &tau)
            });
            let mut rendered = Vec::new();
            svg_sets.push((x, "X".into()));
            svg_sets.push((y, "Y".into()));
            let mut all_feasible = true;
            let mut gap_max = 0.0f64;
            for rep in reports {
                let rep = rep?;
                all_feasible &= rep.certified_feasible;
                let gap = &rep.element.support_value(&rep.selector) - &c.support(&rep.selector)?;
                gap_max = gap_max.max(gap.to_f64());
                svg_sets.push((rep.element.clone(), format!("Z[{}]", rendered.len())));
                rendered.push(serde_json::to_value(&rep).expect("report serializes"));
            }
            checks.push(suites::Check::new("all_elements_certified_feasible", all_feasible));
            checks.push(suites::Check::with_gap(
                "max_selector_support_gap",
                gap_max >= 0.0,
                gap_max,
            ));
            json!({ "minimal_elements": rendered })
        }
        GmpNorm => {
            let c = Collection::make(sc.x()?, sc.y()?)?;
            let nb = c.collection_norm(params.selectors.unwrap_or(8), params.grid.unwrap_or(32), &tau)?;
            checks.push(suites::Check::new(
                "norm_bracket_ordered",
                nb.lower_sq.cmp_val(&nb.upper_sq) != std::cmp::Ordering::Greater,
            ));
            serde_json::to_value(&nb).expect("bracket serializes")
        }
        EpsSubdiff => {
            let f = sc.function()?;
            let x = sc.query_point()?;
            let eps = sc
                .inputs
                .query
                .as_ref()
                .and_then(|q| q.eps.clone())
                .ok_or(Error::Scenario("missing query.eps".into()))?;
            let d = f.eps_subdiff(&x, &eps)?;
            let grid = f.default_grid(&x);
            let mut oracle_ok = true;
            for v in d.vertices() {
                oracle_ok &= f.eps_subdiff_oracle(&x, &eps, v, &grid)?;
            }
            checks.push(suites::Check::new("oracle_confirms_vertices", oracle_ok));
            if d.dim() == 2 {
                svg_sets.push((d.clone(), "eps-subdifferential".into()));
            }
            poly_json(&d)
        }
        GraphConvexity => {
            checks.extend(suites::graph_convexity_suite(sc.seed, params.probes.unwrap_or(500))?);
            json!({ "probes": params.probes.unwrap_or(500) })
        }
        LipschitzProbe => {
            let f = sc.function()?;
            let x = sc.query_point()?;
            let eps = params.eps.clone().unwrap_or(Scalar::from_int(1));
            let upsilon = params.upsilon.clone().unwrap_or(Scalar::ratio(1, 2));
            let pairs = params.pairs.unwrap_or(200);
            let mut rng = rng_from_seed(sc.seed);
            let rep = f.lipschitz_probe(&x, &eps, &upsilon, pairs, &mut rng)?;
            checks.push(suites::Check::new("zero_violations", rep.violations == 0));
            checks.push(suites::Check::new(
                "empirical_below_bound",
                rep.l_emp <= rep.l_bound + 1e-9,
            ));
            serde_json::to_value(&rep).expect("probe serializes")
        }
        LemmaSuite => {
            let n = params.instances.unwrap_or(100);
            let k = params.oracle_instances.unwrap_or(10);
            checks.extend(suites::lemma_suite(sc.seed, n, k)?);
            json!({ "instances": n, "oracle_instances": k })
        }
        MpSignReport => {
            let n = params.instances.unwrap_or(100);
            let (cs, witness) = suites::mp_properties(sc.seed, n)?;
            checks.extend(cs);
            json!({
                "instances": n,
                "witness": witness.map(|w| serde_json::to_value(&w).expect("witness serializes")),
            })
        }
        Lemma4Explore => {
            let n = params.instances.unwrap_or(40);
            let (cs, violations) = suites::lemma4_generalization_explore(sc.seed, n)?;
            checks.extend(cs);
            json!({ "instances": n, "monotonicity_violations": violations })
        }
    };

    let svg = if sc.output.svg.is_some() && !svg_sets.is_empty() {
        let sets: Vec<SvgSet<'_>> = svg_sets
            .iter()
            .filter(|(p, _)| p.dim() == 2)
            .map(|(p, label)| SvgSet {
                polytope: p,
                label: label.clone(),
            })
            .collect();
        if sets.is_empty() {
            None
        } else {
            Some(render_svg(&sets, &SvgStyle::default())?)
        }
    } else {
        None
    };

    let report = Report {
        schema_version: SCHEMA_VERSION,
        scenario: sc.clone(),
        results,
        checks,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(RunOutput { report, svg })
}

/// Bundled demo scenarios.
pub mod builtin {
    use super::*;

    fn rat_poly(pts: &[&[(i64, i64)]]) -> PolytopeSpec {
        PolytopeSpec {
            vertices: pts
                .iter()
                .map(|v| v.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
                .collect(),
        }
    }

    /// Triangle-minus-base instance with 8 selectors and an SVG overlay.
    pub fn fig1() -> Scenario {
        Scenario {
            version: SCHEMA_VERSION,
            arithmetic: Arithmetic::Rational,
            seed: 7,
            operation: Operation::GmpMinimal,
            inputs: Inputs {
                x: Some(rat_poly(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(1, 2), (1, 1)]])),
                y: Some(rat_poly(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)]])),
                function: None,
                query: None,
                params: Params {
                    selectors: Some(16),
                    grid: Some(32),
                    ..Params::default()
                },
            },
            output: OutputSpec {
                report: Some("fig1.report.json".into()),
                svg: Some("fig1.svg".into()),
            },
        }
    }

    /// Seeded pass/fail sweep over the collection identities.
    pub fn lemmas() -> Scenario {
        Scenario {
            version: SCHEMA_VERSION,
            arithmetic: Arithmetic::Rational,
            seed: 7,
            operation: Operation::LemmaSuite,
            inputs: Inputs {
                params: Params {
                    instances: Some(25),
                    oracle_instances: Some(5),
                    ..Params::default()
                },
                ..Inputs::default()
            },
            output: OutputSpec {
                report: Some("lemmas.report.json".into()),
                svg: None,
            },
        }
    }

    /// Continuity probe on f = |x| at x = 1.
    pub fn lipschitz() -> Scenario {
        Scenario {
            version: SCHEMA_VERSION,
            arithmetic: Arithmetic::Rational,
            seed: 7,
            operation: Operation::LipschitzProbe,
            inputs: Inputs {
                function: Some(FunctionSpec {
                    pieces: vec![
                        PieceSpec {
                            gradient: vec![Scalar::from_int(1)],
                            offset: Scalar::zero(),
                        },
                        PieceSpec {
                            gradient: vec![Scalar::from_int(-1)],
                            offset: Scalar::zero(),
                        },
                    ],
                }),
                query: Some(Query {
                    point: Some(vec![Scalar::from_int(1)]),
                    direction: None,
                    eps: None,
                }),
                params: Params {
                    eps: Some(Scalar::from_int(1)),
                    upsilon: Some(Scalar::ratio(1, 2)),
                    pairs: Some(200),
                    ..Params::default()
                },
                ..Inputs::default()
            },
            output: OutputSpec {
                report: Some("lipschitz.report.json".into()),
                svg: None,
            },
        }
    }

    pub fn all() -> Vec<(&'static str, Scenario)> {
        vec![("fig1", fig1()), ("lemmas", lemmas()), ("lipschitz", lipschitz())]
    }
}
