use std::cell::OnceCell;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::input::InputSpec;
use crate::error::{Error, Result};
use crate::graph::export::{json_int, json_ints, json_rat, json_rats};
use crate::graph::form::{canonical_cycle_adjunction, canonical_cycle_formula, form_determinant, node_multiplicities};
use crate::graph::{build_graph, graph_to_dot, graph_to_json, is_qhs_link, Cycle, PlumbingGraph};
use crate::invariants::{curve_invariants, isolated_test, pg_count, surface_delta, Delta, IsolatedReport, DEFAULT_SHELL_CAP};
use crate::lattice::vector::{DualVector, LatticeVector};
use crate::newton::{dual_fan, gorenstein_pointed_at, pointed_at, DualFan, FaceData, NewtonData, Ring};
use crate::reduction::{graph_normal_form, reduce_to_nonnegative_zk, Reduction, ReductionStep};
use crate::sequence::{diagonal_sequence, DiagonalRun};

/// Which part of the pipeline a command asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Fan,
    Graph,
    Invariants,
    Seq,
    Reduce,
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Fan => "fan",
            Command::Graph => "graph",
            Command::Invariants => "invariants",
            Command::Seq => "seq",
            Command::Reduce => "reduce",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub shell_cap: usize,
    pub root: Option<usize>,
}

impl Settings {
    pub fn from_spec(spec: &InputSpec) -> Settings {
        Settings { shell_cap: spec.options.delta_shell_cap.unwrap_or(DEFAULT_SHELL_CAP), root: spec.options.root }
    }
}

/// Pipeline stages computed on demand and cached.
pub struct Session {
    pub spec: InputSpec,
    pub settings: Settings,
    nd: Result<NewtonData>,
    fan: OnceCell<Result<DualFan>>,
    graph: OnceCell<Result<PlumbingGraph>>,
    zk: OnceCell<Result<Cycle>>,
    isolated: OnceCell<Result<IsolatedReport>>,
    delta: OnceCell<Result<Delta>>,
    qhs: OnceCell<Result<bool>>,
    gor_q: OnceCell<Result<Option<Vec<crate::lattice::linalg::Rat>>>>,
    run: OnceCell<Result<DiagonalRun>>,
    reduction: OnceCell<Result<Reduction>>,
}

/// A rendered command: the JSON document and the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub json: Value,
    /// First failure among the stages the command is about.
    pub failure: Option<Error>,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        self.failure.as_ref().map_or(0, exit_code)
    }

    /// Pretty JSON followed by a newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Process exit status for an error code.
pub fn exit_code(e: &Error) -> i32 {
    match e.code() {
        "input" => 2,
        "hypothesis" => 3,
        "enumeration_cap" => 4,
        _ => 1,
    }
}

fn cached<T: Clone>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(f).clone()
}

impl Session {
    pub fn new(spec: InputSpec, settings: Settings) -> Session {
        let nd = spec.newton_data();
        Session {
            spec,
            settings,
            nd,
            fan: OnceCell::new(),
            graph: OnceCell::new(),
            zk: OnceCell::new(),
            isolated: OnceCell::new(),
            delta: OnceCell::new(),
            qhs: OnceCell::new(),
            gor_q: OnceCell::new(),
            run: OnceCell::new(),
            reduction: OnceCell::new(),
        }
    }

    pub fn newton(&self) -> Result<NewtonData> {
        self.nd.clone()
    }

    pub fn fan(&self) -> Result<DualFan> {
        cached(&self.fan, || dual_fan(&self.newton()?))
    }

    pub fn graph(&self) -> Result<PlumbingGraph> {
        cached(&self.graph, || build_graph(&self.newton()?, &self.fan()?))
    }

    pub fn canonical_cycle(&self) -> Result<Cycle> {
        cached(&self.zk, || canonical_cycle_adjunction(&self.graph()?))
    }

    pub fn isolated(&self) -> Result<IsolatedReport> {
        cached(&self.isolated, || isolated_test(&self.newton()?, &self.fan()?))
    }

    pub fn delta(&self) -> Result<Delta> {
        cached(&self.delta, || surface_delta(&self.newton()?, &self.fan()?, self.settings.shell_cap))
    }

    pub fn qhs(&self) -> Result<bool> {
        cached(&self.qhs, || is_qhs_link(&self.graph()?, &self.newton()?, &self.fan()?))
    }

    fn gorenstein_q(&self) -> Result<Option<Vec<crate::lattice::linalg::Rat>>> {
        cached(&self.gor_q, || gorenstein_pointed_at(&self.newton()?, &self.fan()?, Ring::Rationals))
    }

    /// Geometric genus from the diagonal sequence, after its preconditions.
    pub fn sequence(&self) -> Result<DiagonalRun> {
        cached(&self.run, || {
            match self.delta()? {
                Delta::Finite(d) if d.is_zero() => {}
                d => return Err(Error::Hypothesis(format!("the surface is not normal (δ = {d})"))),
            }
            if !self.qhs()? {
                return Err(Error::Hypothesis("the link is not a rational homology sphere".into()));
            }
            if self.gorenstein_q()?.is_none() {
                return Err(Error::Hypothesis("the diagram is not Q-Gorenstein pointed".into()));
            }
            diagonal_sequence(&self.graph()?, &self.canonical_cycle()?, self.settings.root)
        })
    }

    pub fn reduction(&self) -> Result<Reduction> {
        cached(&self.reduction, || reduce_to_nonnegative_zk(&self.newton()?, self.settings.shell_cap))
    }

    pub fn dot(&self) -> Result<String> {
        Ok(graph_to_dot(&self.graph()?))
    }

    /// Runs a command and collects its sections.
    pub fn run(&self, cmd: Command) -> Output {
        let mut doc = Map::new();
        let mut errors = Map::new();
        let mut failure = None;
        doc.insert("command".into(), cmd.name().into());
        doc.insert("input".into(), input_json(&self.spec));
        let mut put = |doc: &mut Map<String, Value>, key: &str, r: Result<Value>, primary: bool| match r {
            Ok(v) => {
                doc.insert(key.into(), v);
            }
            Err(e) => {
                doc.insert(key.into(), Value::Null);
                errors.insert(key.into(), json!({ "code": e.code(), "message": e.to_string() }));
                if primary && failure.is_none() {
                    failure = Some(e);
                }
            }
        };
        if let Err(e) = &self.nd {
            put(&mut doc, "newton", Err(e.clone()), true);
        }
        let full = cmd == Command::Report;
        let rank2 = self.nd.as_ref().is_ok_and(|nd| nd.rank() == 2);
        put(&mut doc, "fan", self.fan().map(|f| fan_json(&f)), cmd == Command::Fan);
        if full || cmd == Command::Invariants {
            put(&mut doc, "pointed", Ok(self.pointed_json()), false);
        }
        if rank2 {
            if full || cmd == Command::Invariants {
                put(&mut doc, "curve", self.curve_json(), cmd == Command::Invariants);
            }
            let key = match cmd {
                Command::Graph => Some("graph"),
                Command::Seq => Some("sequence"),
                Command::Reduce => Some("reduction"),
                _ => None,
            };
            if let Some(key) = key {
                put(&mut doc, key, Err(Error::UnsupportedRank(2)), true);
            }
        } else {
            if cmd != Command::Fan {
                put(&mut doc, "graph", self.graph_json(), cmd == Command::Graph);
            }
            if full || cmd == Command::Invariants {
                put(&mut doc, "gorenstein_pointed", self.gorenstein_json(), false);
                put(&mut doc, "intersection_determinant", self.graph().map(|g| json_int(&form_determinant(&g))), false);
                put(&mut doc, "canonical_cycle", self.canonical_json(), false);
                put(&mut doc, "isolated", self.isolated().map(|r| isolated_json(&r)), false);
                let delta = self.delta();
                put(&mut doc, "normal", delta.clone().map(|d| Value::Bool(d == Delta::Finite(BigInt::zero()))), false);
                put(&mut doc, "delta", delta.map(|d| delta_json(&d)), cmd == Command::Invariants);
                put(&mut doc, "pg_count", self.fan().and_then(|f| pg_count(&f)).map(|p| json_int(&p)), cmd == Command::Invariants);
                put(&mut doc, "qhs", self.qhs().map(Value::Bool), false);
            }
            if full || cmd == Command::Seq || cmd == Command::Invariants {
                put(&mut doc, "pg_sequence", self.sequence().map(|r| json_int(&r.bound)), cmd == Command::Seq);
            }
            if full || cmd == Command::Seq {
                put(&mut doc, "sequence", self.sequence().map(|r| run_json(&r)), cmd == Command::Seq);
            }
            if full || cmd == Command::Reduce {
                put(&mut doc, "reduction", self.reduction().map(|r| reduction_json(&r)), cmd == Command::Reduce);
            }
        }
        doc.insert("errors".into(), Value::Object(errors));
        Output { json: Value::Object(doc), failure }
    }

    fn pointed_json(&self) -> Value {
        match self.newton() {
            Ok(nd) => json!({
                "integers": pointed_at(&nd, Ring::Integers).map(|p| json_rats(&p)),
                "rationals": pointed_at(&nd, Ring::Rationals).map(|p| json_rats(&p)),
            }),
            Err(_) => Value::Null,
        }
    }

    fn gorenstein_json(&self) -> Result<Value> {
        let (nd, fan) = (self.newton()?, self.fan()?);
        Ok(json!({
            "integers": gorenstein_pointed_at(&nd, &fan, Ring::Integers)?.map(|p| json_rats(&p)),
            "rationals": self.gorenstein_q()?.map(|p| json_rats(&p)),
        }))
    }

    fn graph_json(&self) -> Result<Value> {
        let g = self.graph()?;
        let mut v = graph_to_json(&g);
        v["normal_form"] = match graph_normal_form(&g) {
            Ok(nf) => {
                let mut x = graph_to_json(&nf);
                x["summary"] = graph_summary(&nf).into();
                x
            }
            Err(e) => json!({ "code": e.code(), "message": e.to_string() }),
        };
        v["relation_defects"] = json!(g.relation_defects());
        Ok(v)
    }

    fn canonical_json(&self) -> Result<Value> {
        let g = self.graph()?;
        let adj = self.canonical_cycle()?;
        let formula = canonical_cycle_formula(&g)?;
        let nodes: Vec<Value> = node_multiplicities(&g, &adj)
            .iter()
            .map(|(v, m)| json!({ "vertex": v, "m_minus_e": json_rat(m) }))
            .collect();
        Ok(json!({
            "adjunction": json_rats(&adj.0),
            "formula": json_rats(&formula.0),
            "agree": adj == formula,
            "nodes": nodes,
        }))
    }

    fn curve_json(&self) -> Result<Value> {
        let c = curve_invariants(&self.newton()?)?;
        Ok(json!({
            "branches": json_int(&c.branches),
            "smooth": c.smooth,
            "multiplicity": c.multiplicity.as_ref().map(json_int),
            "delta": c.delta.as_ref().map(json_int).unwrap_or_else(|| "not computed".into()),
        }))
    }
}

/// "n vertices" with the Euler number and genus when there is one vertex.
pub fn graph_summary(g: &PlumbingGraph) -> String {
    match g.num_core() {
        0 => "empty".into(),
        1 => format!("1 vertex, euler {}, genus {}", g.euler(0), g.vertices[0].genus),
        n => format!("{n} vertices, {} edges", g.core_edges().len()),
    }
}

fn input_json(spec: &InputSpec) -> Value {
    json!({ "rank": spec.rank, "cone": spec.cone, "support": spec.support })
}

fn lv(v: &LatticeVector) -> Value {
    json_ints(v.coords())
}

fn dv(v: &DualVector) -> Value {
    json_ints(v.coords())
}

fn face_json(f: &FaceData) -> Value {
    json!({
        "vertices": f.vertices.iter().map(dv).collect::<Vec<_>>(),
        "dim": f.dim,
        "compact": f.compact,
        "lattice_length": f.lattice_length.as_ref().map(json_int),
        "lattice_area_doubled": f.lattice_area_doubled.as_ref().map(json_int),
        "interior_points": f.interior_points.as_ref().map(json_int),
    })
}

pub fn fan_json(fan: &DualFan) -> Value {
    let rays: Vec<Value> = fan
        .rays
        .iter()
        .enumerate()
        .map(|(i, r)| {
            json!({
                "index": i,
                "ell": lv(&r.ell),
                "m": json_int(&r.m),
                "boundary": r.on_boundary,
                "class": [r.class.0, r.class.1],
                "face": face_json(&r.face),
            })
        })
        .collect();
    let two_cones: Vec<Value> = fan
        .two_cones
        .iter()
        .map(|c| json!({ "rays": [c.rays.0, c.rays.1], "compact": c.compact, "length": c.length.as_ref().map(json_int) }))
        .collect();
    json!({
        "rank": fan.rank,
        "rays": rays,
        "nodes": fan.nodes(),
        "extended_nodes": fan.extended_nodes(),
        "sigma_rays": fan.sigma_rays,
        "two_cones": two_cones,
        "vertices": fan.vertices.iter().map(dv).collect::<Vec<_>>(),
    })
}

fn isolated_json(r: &IsolatedReport) -> Value {
    let faces: Vec<Value> = r
        .faces
        .iter()
        .map(|f| {
            json!({
                "rays": [lv(&f.rays.0), lv(&f.rays.1)],
                "interior": f.interior.iter().map(lv).collect::<Vec<_>>(),
                "e": f.e.as_ref().map(json_rat),
                "pass": f.pass,
                "reason": f.reason,
            })
        })
        .collect();
    json!({ "isolated": r.isolated, "faces": faces })
}

fn delta_json(d: &Delta) -> Value {
    match d {
        Delta::Finite(x) => json_int(x),
        Delta::Infinite => "infinite".into(),
    }
}

fn run_json(r: &DiagonalRun) -> Value {
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "vertex": s.vertex,
                "d": json_rat(&s.d),
                "contribution": json_rat(&s.contribution),
                "diagonal": s.diagonal,
            })
        })
        .collect();
    json!({
        "root": r.root,
        "kbar_prime": r.kbar_prime,
        "kbar": r.kbar,
        "bound": json_int(&r.bound),
        "end": json_rats(&r.end.0),
        "steps": steps,
    })
}

fn reduction_json(r: &Reduction) -> Value {
    let steps: Vec<Value> = r
        .log
        .iter()
        .map(|s| match s {
            ReductionStep::Restricted { from, to } => json!({
                "kind": "restricted",
                "from": from.iter().map(lv).collect::<Vec<_>>(),
                "to": to.iter().map(lv).collect::<Vec<_>>(),
            }),
            ReductionStep::Removed { removal, node_multiplicity } => {
                let f = &removal.facet;
                json!({
                    "kind": "removed",
                    "normal": lv(&f.normal),
                    "m_minus_e": json_rat(node_multiplicity),
                    "p1": dv(&f.vertices[0]),
                    "p2": dv(&f.vertices[1]),
                    "p3": dv(&f.vertices[2]),
                    "witness": lv(&f.witness),
                    "witness_m": json_int(&f.witness_m),
                    "edge_ray": f.edge_ray.as_ref().map(lv),
                    "t": json_int(&removal.t),
                    "ell_plus": lv(&removal.ell_plus),
                    "m_plus": json_int(&removal.m_plus),
                    "removed_support": removal.removed_support.iter().map(dv).collect::<Vec<_>>(),
                })
            }
        })
        .collect();
    json!({
        "steps": steps,
        "cone": r.data.cone().rays().iter().map(lv).collect::<Vec<_>>(),
        "support": r.data.support().iter().map(dv).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::input::parse_input;
    use super::*;

    fn session(text: &str) -> Session {
        let spec = parse_input(text).unwrap();
        let st = Settings::from_spec(&spec);
        Session::new(spec, st)
    }

    const GOR: &str = r#"{"rank":3,"cone":[[1,0,0],[0,1,0],[1,0,1],[0,1,1]],"support":[[0,0,2],[1,0,1],[0,2,0],[1,2,-1]]}"#;

    #[test]
    fn gorenstein_remark_report() {
        let s = session(GOR);
        let out = s.run(Command::Report);
        let j = &out.json;
        assert_eq!(j["graph"]["normal_form"]["summary"], "1 vertex, euler -3, genus 0");
        assert_eq!(j["gorenstein_pointed"]["integers"], Value::Null);
        assert_eq!(j["gorenstein_pointed"]["rationals"], Value::Null);
        assert_eq!(j["pg_count"], 0);
        assert_eq!(j["delta"], 0);
        assert_eq!(j["errors"]["pg_sequence"]["code"], "hypothesis");
        assert_eq!(out.exit_code(), 0);
        assert_eq!(s.run(Command::Seq).exit_code(), 3);
    }

    #[test]
    fn brieskorn_report_is_deterministic() {
        let text = r#"{"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],"support":[[2,0,0],[0,3,0],[0,0,7]]}"#;
        let a = session(text).run(Command::Report);
        let b = session(text).run(Command::Report);
        assert_eq!(a.render(), b.render());
        assert_eq!(a.json["pg_count"], 1);
        assert_eq!(a.json["pg_sequence"], 1);
        assert_eq!(a.json["errors"], json!({}));
    }

    #[test]
    fn rank_two_and_degenerate() {
        let s = session(r#"{"rank":2,"cone":[[1,0],[0,1]],"support":[[2,0],[0,3]]}"#);
        let out = s.run(Command::Report);
        assert_eq!(out.json["curve"]["branches"], 1);
        let s = session(r#"{"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],"support":[[2,0,0],[0,2,1]]}"#);
        let out = s.run(Command::Invariants);
        assert_eq!(out.json["delta"], "infinite");
        assert_eq!(out.json["isolated"]["isolated"], false);
        let out = s.run(Command::Reduce);
        assert_eq!(out.exit_code(), 3);
    }
}
