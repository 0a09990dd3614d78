use std::path::{Path, PathBuf};

use ncomp::bset::{b_of_a, continuity_probe, sample_b_of_a_witnessed, BKind, BSample, Component};
use ncomp::hrnr::{lambda_k_hermitian, lambda_k_lisze, lambda_k_normal, Refinement, SweepConfig};
use ncomp::io::{frame_from_json, frame_to_json, input_from_json, parse_complex, parse_spectrum, InputDoc};
use ncomp::nnc::{eigenvalues_2x2, ellipse_subset_violation, sample_eigenvalue_pinned_compressions};
use ncomp::normcomp::{compression_residual, construct_rank2_witness, necessary_condition_check, WitnessRoute};
use ncomp::numkit::{compress, hermitian_eigenvalues, normal_eigenvalues, ComplexMatrix};
use ncomp::planegeom::{polygon_hausdorff, Polygon, PolygonKind};
use ncomp::{Spectrum, Tolerances, C64};
use serde_json::json;

use crate::cli::{Command, Common, Method, Refine};
use crate::config::{Emit, RunConfig};
use crate::error::{CliError, CliResult};
use crate::svg::Plot;
use crate::table::{num, point_row, write_file, Table};

const CURVE_POINTS: usize = 512;
const BSET_TOL: f64 = 1e-8;
const WITNESS_TOL: f64 = 1e-9;
const ELLIPSE_TOL: f64 = 1e-8;
const FOCUS_TOL: f64 = 1e-10;

/// What a successful run produced.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub summary: Vec<String>,
}

struct Loaded {
    matrix: ComplexMatrix,
    spectrum: Option<Spectrum>,
    description: String,
}

fn load(common: &Common) -> CliResult<Loaded> {
    match (&common.input, &common.spectrum) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --input or --spectrum, not both".into())),
        (None, None) => Err(CliError::Usage("one of --input or --spectrum is required".into())),
        (None, Some(s)) => {
            let z = parse_spectrum(s)?;
            Ok(Loaded {
                matrix: z.matrix(),
                spectrum: Some(z),
                description: format!("spectrum {s}"),
            })
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let description = format!("file {}", path.display());
            Ok(match input_from_json(&text)? {
                InputDoc::Spectrum(z) => Loaded {
                    matrix: z.matrix(),
                    spectrum: Some(z),
                    description,
                },
                InputDoc::Matrix(m) => Loaded {
                    matrix: m,
                    spectrum: None,
                    description,
                },
            })
        }
    }
}

/// The eigenvalues, in the given order for spectrum input and
/// counterclockwise about their mean for (normal) matrix input.
fn spectrum_of(loaded: &Loaded) -> CliResult<Spectrum> {
    if let Some(z) = &loaded.spectrum {
        return Ok(z.clone());
    }
    let mut z = normal_eigenvalues(&loaded.matrix)?;
    let mean = z.iter().sum::<C64>() / z.len() as f64;
    z.sort_by(|p, q| (p - mean).arg().total_cmp(&(q - mean).arg()));
    Ok(Spectrum::new(z)?)
}

fn prepare(
    common: &Common,
    command: &str,
    n_samples: Option<usize>,
    n_theta: Option<usize>,
    default_tol: f64,
) -> CliResult<(Loaded, RunConfig)> {
    let loaded = load(common)?;
    let emit = Emit::parse(&common.emit)?;
    let tol = common.tol.unwrap_or(default_tol);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    std::fs::create_dir_all(&common.out).map_err(|source| CliError::Io {
        path: common.out.clone(),
        source,
    })?;
    let cfg = RunConfig {
        command: command.into(),
        input: loaded.description.clone(),
        seed: common.seed,
        n_samples,
        n_theta,
        tol,
        tolerances: Tolerances::DEFAULT,
        out: common.out.clone(),
        emit,
    };
    Ok((loaded, cfg))
}

fn cstr(z: C64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", num(z.re), num(-z.im))
    } else {
        format!("{}+{}i", num(z.re), num(z.im))
    }
}

fn base_plot(z: &Spectrum, grid: bool) -> Plot {
    let mut plot = Plot::new();
    let v = z.values();
    if grid {
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                plot.polyline("grid", &[v[i], v[j]], "#d0d0d0", 0.6);
            }
        }
    }
    let hull = z.hull();
    if hull.kind() == PolygonKind::Region {
        plot.polygon("hull", hull.vertices(), "#808080", None);
    }
    plot.dots("eigenvalues", v, 4.0, "black");
    plot
}

fn polygon_points(p: &Polygon) -> Vec<C64> {
    p.vertices().to_vec()
}

struct Writer<'a> {
    cfg: &'a RunConfig,
    outcome: Outcome,
}

impl<'a> Writer<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        Self {
            cfg,
            outcome: Outcome::default(),
        }
    }

    fn table(&self, header: &[&str]) -> Table {
        Table::new(self.cfg.header(), header)
    }

    fn csv(&mut self, table: &Table, name: &str) -> CliResult<()> {
        if self.cfg.emit.csv {
            self.outcome.files.push(table.write(&self.cfg.out, name)?);
        }
        Ok(())
    }

    fn svg(&mut self, plot: &mut Plot, name: &str) -> CliResult<()> {
        if self.cfg.emit.svg {
            plot.legend(format!("seed {}", self.cfg.seed));
            self.outcome.files.push(plot.write(&self.cfg.out, name)?);
        }
        Ok(())
    }

    fn raw(&mut self, bytes: &[u8], name: &str) -> CliResult<()> {
        let path = self.cfg.out.join(name);
        write_file(&path, bytes)?;
        self.outcome.files.push(path);
        Ok(())
    }

    fn say(&mut self, line: impl Into<String>) {
        self.outcome.summary.push(line.into());
    }
}

pub fn run(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Lambda {
            common,
            k,
            method,
            theta_steps,
            refine,
        } => cmd_lambda(common, *k, *method, *theta_steps, *refine),
        Command::Bset { common, a, samples } => cmd_bset(common, a, *samples),
        Command::Witness { common, a, b, frame } => cmd_witness(common, a, b, frame.as_deref()),
        Command::Continuity {
            common,
            a,
            path,
            samples,
        } => cmd_continuity(common, a, path, *samples),
        Command::Ellipses { common, a, samples } => cmd_ellipses(common, a, *samples),
    }
}

fn describe_polygon(p: &Polygon) -> String {
    match p.kind() {
        PolygonKind::Empty => "empty".into(),
        PolygonKind::Point => format!("point {}", cstr(p.vertices()[0])),
        PolygonKind::Segment => format!("segment [{}, {}]", cstr(p.vertices()[0]), cstr(p.vertices()[1])),
        PolygonKind::Region => format!("polygon with {} vertices, area {}", p.vertices().len(), num(p.area())),
    }
}

pub fn cmd_lambda(common: &Common, k: usize, method: Method, theta_steps: usize, refine: Refine) -> CliResult<Outcome> {
    let (loaded, cfg) = prepare(common, "lambda", None, Some(theta_steps), Tolerances::DEFAULT.geometry)?;
    let mut out = Writer::new(&cfg);
    let m = &loaded.matrix;
    let n = m.n();
    if k == 0 || k > n {
        return Err(ncomp::Error::RankOutOfRange { k, n }.into());
    }
    let mut table = out.table(&["kind", "x", "y", "r"]);
    table.comment(format!("k: {k}"));
    table.comment(format!("method: {method:?}").to_lowercase());
    let eigen = if method == Method::Lisze {
        spectrum_of(&loaded).ok()
    } else {
        Some(spectrum_of(&loaded)?)
    };
    let mut plot = match &eigen {
        Some(z) => base_plot(z, false),
        None => Plot::new(),
    };
    if let Some(z) = &eigen {
        for &v in z.values() {
            table.push(point_row("eigenvalue", v, None));
        }
    }
    let lisze = if method != Method::Normal {
        let refinement = match refine {
            Refine::None => Refinement::None,
            Refine::Adaptive => Refinement::Adaptive,
        };
        let p = lambda_k_lisze(m, k, &SweepConfig::new(theta_steps, refinement)?)?;
        for &v in p.vertices() {
            table.push(point_row("lisze", v, None));
        }
        plot.polygon("lisze", &polygon_points(&p), "#1f5fbf", Some("#1f5fbf33"));
        out.say(format!("lisze: {}", describe_polygon(&p)));
        Some(p)
    } else {
        None
    };
    let normal = match (&eigen, method) {
        (Some(z), Method::Normal | Method::Both) => {
            let p = lambda_k_normal(z, k)?;
            for &v in p.vertices() {
                table.push(point_row("normal", v, None));
            }
            plot.polygon("normal", &polygon_points(&p), "#c03030", None);
            out.say(format!("normal: {}", describe_polygon(&p)));
            Some(p)
        }
        _ => None,
    };
    if let (Some(a), Some(b)) = (&lisze, &normal) {
        let h = polygon_hausdorff(a, b);
        table.comment(format!("hausdorff: {}", num(h.distance)));
        out.say(format!("hausdorff(lisze, normal): {:.3e}", h.distance));
    }
    if m.is_hermitian(Tolerances::DEFAULT.hermitian) {
        let a = hermitian_eigenvalues(m)?;
        match lambda_k_hermitian(&a, k)? {
            Some((lo, hi)) => {
                table.push(point_row("interval", C64::new(lo, 0.0), None));
                table.push(point_row("interval", C64::new(hi, 0.0), None));
                out.say(format!("hermitian: [{}, {}]", num(lo), num(hi)));
            }
            None => out.say("hermitian: empty"),
        }
    }
    plot.legend(format!("rank-{k} numerical range, N = {n}, method {method:?}").to_lowercase());
    plot.legend(format!("{theta_steps} theta steps, refinement {refine:?}").to_lowercase());
    out.csv(&table, "lambda.csv")?;
    out.svg(&mut plot, "lambda.svg")?;
    Ok(out.outcome)
}

fn component_rows(table: &mut Table, plot: &mut Plot, components: &[Component]) {
    for (i, comp) in components.iter().enumerate() {
        match comp {
            Component::Set(p) => {
                let tag = format!("set{i}");
                for &v in p.vertices() {
                    table.push(point_row(&tag, v, None));
                }
                match p.kind() {
                    PolygonKind::Region => plot.polygon("exact", p.vertices(), "#1f5fbf", Some("#1f5fbf22")),
                    PolygonKind::Segment => plot.polyline("exact", p.vertices(), "#1f5fbf", 2.0),
                    PolygonKind::Point => plot.dots("exact", p.vertices(), 5.0, "#1f5fbf"),
                    PolygonKind::Empty => {}
                }
            }
            Component::Curve(c) => {
                let tag = format!("curve{i}");
                let tr = c.trace(CURVE_POINTS);
                for (&r, &p) in tr.r.iter().zip(&tr.points) {
                    table.push(point_row(&tag, p, Some(r)));
                }
                plot.polyline("exact", &tr.points, "#1f5fbf", 2.0);
            }
            Component::Wedges(s) => {
                for w in s.wedges() {
                    let tag = format!("wedge{}", w.index());
                    table.push(point_row(&tag, w.apex(), None));
                    let tr = w.curve().trace(CURVE_POINTS);
                    for (&r, &p) in tr.r.iter().zip(&tr.points) {
                        table.push(point_row(&tag, p, Some(r)));
                    }
                    table.push(point_row(&tag, w.apex(), None));
                    plot.polygon("starfish", &w.boundary(CURVE_POINTS), "#1f5fbf", Some("#1f5fbf18"));
                }
            }
            Component::Cloud(_) => {}
        }
    }
}

fn join(v: impl Iterator<Item = String>) -> String {
    v.collect::<Vec<_>>().join(";")
}

fn sample_violation_row(i: usize, s: &BSample, distance: f64, reason: &str) -> Vec<String> {
    vec![
        i.to_string(),
        num(s.b.re),
        num(s.b.im),
        num(distance),
        reason.into(),
        join(s.t.iter().map(|x| num(*x))),
        join(s.w.iter().map(|w| format!("{}:{}", num(w.re), num(w.im)))),
    ]
}

pub fn cmd_bset(common: &Common, a: &str, samples: usize) -> CliResult<Outcome> {
    let (loaded, cfg) = prepare(common, "bset", Some(samples), None, BSET_TOL)?;
    let mut out = Writer::new(&cfg);
    let z = spectrum_of(&loaded)?;
    let a = parse_complex(a)?;
    let d = z.hull().distance(a);
    if d > Tolerances::DEFAULT.geometry {
        return Err(ncomp::Error::OutsideHull { distance: d }.into());
    }
    let desc = b_of_a(&z, a, samples, cfg.seed)?;
    let cloud = if z.len() >= 4 && samples > 0 {
        sample_b_of_a_witnessed(&z, a, samples, cfg.seed)?
    } else {
        Vec::new()
    };
    out.say(format!("B(a) for a = {}: {}", cstr(a), desc.kind().name()));

    let mut plot = base_plot(&z, true);
    let mut points = out.table(&["kind", "x", "y", "r"]);
    for &v in z.values() {
        points.push(point_row("eigenvalue", v, None));
    }
    points.push(point_row("a", a, None));
    out.csv(&points, "bset_points.csv")?;

    let mut exact = out.table(&["kind", "x", "y", "r"]);
    exact.comment(format!("description: {}", desc.kind().name()));
    component_rows(&mut exact, &mut plot, desc.components());
    out.csv(&exact, "bset_exact.csv")?;

    let mut cloud_table = out.table(&["kind", "x", "y", "r"]);
    for s in &cloud {
        cloud_table.push(point_row("sample", s.b, None));
    }
    out.csv(&cloud_table, "bset_samples.csv")?;
    let bs: Vec<C64> = cloud.iter().map(|s| s.b).collect();
    plot.dots("samples", &bs, 1.2, "#2a9d3a");
    plot.marker("a", a, "#d62728");
    plot.legend(format!("B(a), N = {}, a = {}, {}", z.len(), cstr(a), desc.kind().name()));
    plot.legend(format!("{} samples", cloud.len()));
    out.svg(&mut plot, "bset.svg")?;

    let check_exact = desc.kind() != BKind::Cloud;
    let mut violations = out.table(&["index", "x", "y", "distance", "reason", "t", "w"]);
    let mut worst: f64 = 0.0;
    for (i, s) in cloud.iter().enumerate() {
        if check_exact {
            let dist = desc.distance(s.b);
            worst = worst.max(dist);
            if dist > cfg.tol {
                violations.push(sample_violation_row(i, s, dist, "outside exact description"));
            }
        }
        if z.len() <= ncomp::hrnr::SUBSET_LIMIT {
            let rep = necessary_condition_check(&[a, s.b], &z)?;
            if !rep.holds {
                violations.push(sample_violation_row(i, s, rep.gap, "necessary condition"));
            }
        }
    }
    if check_exact && !cloud.is_empty() {
        out.say(format!("max sample distance to the exact set: {worst:.3e}"));
    }
    out.say(format!("{} samples, {} violations", cloud.len(), violations.len()));
    if !violations.is_empty() {
        violations.write(&cfg.out, "bset_violations.csv")?;
        return Err(CliError::Verification(format!(
            "{} samples violate the description or the necessary condition; see bset_violations.csv",
            violations.len()
        )));
    }
    Ok(out.outcome)
}

pub fn cmd_witness(common: &Common, a: &str, b: &str, frame: Option<&Path>) -> CliResult<Outcome> {
    let (loaded, cfg) = prepare(common, "witness", None, None, WITNESS_TOL)?;
    let mut out = Writer::new(&cfg);
    let (a, b) = (parse_complex(a)?, parse_complex(b)?);
    let expected = ComplexMatrix::from_diag(&[a, b]);
    if let Some(path) = frame {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let f = frame_from_json(&text)?;
        let residual = compression_residual(&loaded.matrix, &f, &expected)?;
        out.say(format!("replayed frame residual: {residual:e}"));
        if residual > cfg.tol {
            return Err(CliError::Verification(format!("residual {residual:e} exceeds {:e}", cfg.tol)));
        }
        return Ok(out.outcome);
    }
    let z = spectrum_of(&loaded)?;
    let w = construct_rank2_witness(&z, a, b)?;
    let c = compress(&z.matrix(), &w.frame)?;
    let route = match &w.route {
        WitnessRoute::Partition { blocks } => json!({"partition": blocks}),
        WitnessRoute::Wedge { wedge, r, s, swapped } => json!({"wedge": wedge, "r": r, "s": s, "swapped": swapped}),
    };
    let cj = |z: C64| json!({"re": z.re, "im": z.im});
    let report = json!({
        "a": cj(a),
        "b": cj(b),
        "route": route,
        "residual": w.residual,
        "off_diagonal": [cj(c[(0, 1)]), cj(c[(1, 0)])],
        "diagonal": [cj(c[(0, 0)]), cj(c[(1, 1)])],
        "seed": cfg.seed,
    });
    out.raw(frame_to_json(&w.frame).as_bytes(), "witness_frame.json")?;
    out.raw(
        serde_json::to_string_pretty(&report).expect("report serialises").as_bytes(),
        "witness_report.json",
    )?;
    let mut table = out.table(&["column", "index", "re", "im"]);
    table.comment(format!("a: {}", cstr(a)));
    table.comment(format!("b: {}", cstr(b)));
    table.comment(format!("residual: {:e}", w.residual));
    for (ci, col) in w.frame.columns().iter().enumerate() {
        for (j, v) in col.iter().enumerate() {
            table.push(vec![ci.to_string(), j.to_string(), num(v.re), num(v.im)]);
        }
    }
    out.csv(&table, "witness.csv")?;
    let mut plot = base_plot(&z, true);
    if let Ok(l2) = lambda_k_normal(&z, 2) {
        plot.polygon("lambda2", l2.vertices(), "#1f5fbf", Some("#1f5fbf22"));
    }
    plot.marker("a", a, "#d62728");
    plot.marker("b", b, "#2a9d3a");
    plot.legend(format!("witness for a = {}, b = {}", cstr(a), cstr(b)));
    out.svg(&mut plot, "witness.svg")?;
    out.say(format!("route: {route}"));
    out.say(format!("residual ||F*MF - diag(a, b)||_F = {:e}", w.residual));
    if w.residual > cfg.tol {
        return Err(CliError::Verification(format!(
            "residual {:e} exceeds {:e}",
            w.residual, cfg.tol
        )));
    }
    Ok(out.outcome)
}

/// Parses `geom:DX,DY:COUNT[:RATIO]` or `list:x,y;x,y;...`.
pub fn parse_path(spec: &str, a: C64) -> CliResult<Vec<C64>> {
    let bad = |why: &str| CliError::Usage(format!("malformed path spec {spec:?}: {why}"));
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad("missing ':'"))?;
    match kind {
        "geom" => {
            let parts: Vec<&str> = rest.split(':').collect();
            if !(2..=3).contains(&parts.len()) {
                return Err(bad("expected DX,DY:COUNT[:RATIO]"));
            }
            let d = parse_complex(parts[0]).map_err(|_| bad("bad direction"))?;
            let count: usize = parts[1].trim().parse().map_err(|_| bad("bad count"))?;
            let ratio: f64 = match parts.get(2) {
                Some(r) => r.trim().parse().map_err(|_| bad("bad ratio"))?,
                None => 0.5,
            };
            if count == 0 || !(ratio > 0.0 && ratio < 1.0) {
                return Err(bad("count must be positive and ratio in (0, 1)"));
            }
            Ok((0..count).map(|i| a + d * ratio.powi(i as i32)).collect())
        }
        "list" => {
            let pts = rest
                .split(';')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(parse_complex)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad("bad point"))?;
            if pts.is_empty() {
                return Err(bad("no points"));
            }
            Ok(pts)
        }
        _ => Err(bad("unknown kind")),
    }
}

pub fn cmd_continuity(common: &Common, a: &str, path: &str, samples: usize) -> CliResult<Outcome> {
    let (loaded, cfg) = prepare(common, "continuity", Some(samples), None, Tolerances::DEFAULT.grid)?;
    let mut out = Writer::new(&cfg);
    let z = spectrum_of(&loaded)?;
    let a = parse_complex(a)?;
    let seq = parse_path(path, a)?;
    let report = continuity_probe(&z, a, &seq, samples, cfg.seed)?;
    let mut table = out.table(&[
        "index",
        "a_re",
        "a_im",
        "step",
        "grid_distance",
        "forward",
        "backward",
        "full",
    ]);
    table.comment(format!("a: {}", cstr(a)));
    table.comment(format!("path: {path}"));
    table.comment(format!("grid_distance: {}", num(report.grid_distance)));
    table.comment(format!("on_grid: {}", report.on_grid));
    table.comment(format!("exact_reference: {}", report.exact_reference));
    out.say(format!(
        "a = {} ({}, grid distance {})",
        cstr(a),
        if report.on_grid { "on the grid" } else { "off the grid" },
        num(report.grid_distance)
    ));
    for r in &report.rows {
        table.push(vec![
            r.index.to_string(),
            num(r.a_n.re),
            num(r.a_n.im),
            num(r.step),
            num(r.grid_distance),
            num(r.forward),
            num(r.backward),
            num(r.full),
        ]);
        out.say(format!(
            "step {:.3e}: forward {:.4e}, backward {:.4e}, full {:.4e}",
            r.step, r.forward, r.backward, r.full
        ));
    }
    out.csv(&table, "continuity.csv")?;
    let mut plot = base_plot(&z, true);
    plot.dots("path", &seq, 2.5, "#1f5fbf");
    plot.marker("a", a, "#d62728");
    plot.legend(format!("continuity probe at a = {}, {} samples per set", cstr(a), samples));
    out.svg(&mut plot, "continuity.svg")?;
    Ok(out.outcome)
}

pub fn cmd_ellipses(common: &Common, a: &str, samples: usize) -> CliResult<Outcome> {
    let (loaded, cfg) = prepare(common, "ellipses", Some(samples), None, ELLIPSE_TOL)?;
    let mut out = Writer::new(&cfg);
    let z = spectrum_of(&loaded)?;
    let a = parse_complex(a)?;
    let draws = sample_eigenvalue_pinned_compressions(&z, a, samples, cfg.seed)?;
    let hull = z.hull();
    let mut table = out.table(&[
        "index",
        "focus1_re",
        "focus1_im",
        "focus2_re",
        "focus2_im",
        "minor_axis",
        "major_axis",
        "rotation",
        "x12_re",
        "x12_im",
    ]);
    table.comment(format!("a: {}", cstr(a)));
    let mut violations = out.table(&["index", "reason", "value"]);
    let mut plot = base_plot(&z, true);
    for (i, d) in draws.iter().enumerate() {
        let e = &d.ellipse;
        table.push(vec![
            i.to_string(),
            num(e.foci[0].re),
            num(e.foci[0].im),
            num(e.foci[1].re),
            num(e.foci[1].im),
            num(e.minor_axis),
            num(e.major_axis()),
            num(e.rotation()),
            num(d.x[(0, 1)].re),
            num(d.x[(0, 1)].im),
        ]);
        plot.ellipse("ellipses", *e, "#1f5fbf");
        let excess = e.containment_excess(&hull);
        if excess > cfg.tol {
            violations.push(vec![i.to_string(), "outside conv(z)".into(), num(excess)]);
        }
        if z.len() <= ncomp::hrnr::SUBSET_LIMIT {
            if let Some((j, gap)) = ellipse_subset_violation(e, &z, 2, cfg.tol)? {
                let idx = j.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                violations.push(vec![i.to_string(), format!("misses hull of {{{idx}}}"), num(gap)]);
            }
        }
        let focus = eigenvalues_2x2(&d.x)?
            .iter()
            .map(|f| (f - a).norm())
            .fold(f64::INFINITY, f64::min);
        if focus > FOCUS_TOL {
            violations.push(vec![i.to_string(), "a is not a focus".into(), num(focus)]);
        }
    }
    out.csv(&table, "ellipses.csv")?;
    plot.marker("a", a, "#d62728");
    plot.legend(format!("numerical ranges of {} compressions with eigenvalue {}", draws.len(), cstr(a)));
    out.svg(&mut plot, "ellipses.svg")?;
    out.say(format!("{} ellipses, {} violations", draws.len(), violations.len()));
    if !violations.is_empty() {
        violations.write(&cfg.out, "ellipses_violations.csv")?;
        return Err(CliError::Verification(format!(
            "{} ellipse checks failed; see ellipses_violations.csv",
            violations.len()
        )));
    }
    Ok(out.outcome)
}
