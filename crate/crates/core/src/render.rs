//! SVG pictures of rank-3 fans by stereographic projection from the
//! antipode of `p = (1,1,1)/sqrt(3)` onto the tangent plane at `p`.
//!
//! Only this module uses floating point.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::seed::ConeKey;

const INV_SQRT3: f64 = 0.577_350_269_189_625_8;
const P: [f64; 3] = [INV_SQRT3, INV_SQRT3, INV_SQRT3];
const B1: [f64; 3] = [
    std::f64::consts::FRAC_1_SQRT_2,
    -std::f64::consts::FRAC_1_SQRT_2,
    0.0,
];
const INV_SQRT6: f64 = 0.408_248_290_463_863;
const B2: [f64; 3] = [INV_SQRT6, INV_SQRT6, -2.0 * INV_SQRT6];

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Maximum angle in degrees between consecutive arc samples.
    pub arc_resolution: f64,
    pub width: u32,
    pub height: u32,
    pub shade_frontier: bool,
    pub label_normals: bool,
    /// Rays with `u . p <= clip_cosine` are not projected.
    pub clip_cosine: f64,
    /// Plane radius mapped to half the smaller viewport side.
    pub view_radius: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            arc_resolution: 2.0,
            width: 800,
            height: 800,
            shade_frontier: true,
            label_normals: false,
            clip_cosine: -0.95,
            view_radius: 2.5,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.arc_resolution.is_nan() || self.arc_resolution <= 0.0 {
            return Err(Error::InvalidOption(format!(
                "arc resolution must be positive, got {}",
                self.arc_resolution
            )));
        }
        if !(self.clip_cosine > -1.0 && self.clip_cosine <= 0.0) {
            return Err(Error::InvalidOption(format!(
                "clip cosine must lie in (-1, 0], got {}",
                self.clip_cosine
            )));
        }
        if self.width == 0 || self.height == 0 || self.view_radius.is_nan() || self.view_radius <= 0.0 {
            return Err(Error::InvalidOption("empty viewport".into()));
        }
        Ok(())
    }
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn unit(v: &[f64; 3]) -> [f64; 3] {
    let n = dot3(v, v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

pub fn to_f64_ray(v: &[BigInt]) -> [f64; 3] {
    let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
    [f(&v[0]), f(&v[1]), f(&v[2])]
}

fn project_unit(u: &[f64; 3], clip_cosine: f64) -> Result<(f64, f64)> {
    let c = dot3(u, &P);
    if c <= clip_cosine {
        return Err(Error::NearAntipode {
            cosine: c,
            clip: clip_cosine,
        });
    }
    let s = 2.0 / (1.0 + c);
    let q = [
        -P[0] + s * (u[0] + P[0]),
        -P[1] + s * (u[1] + P[1]),
        -P[2] + s * (u[2] + P[2]),
    ];
    Ok((dot3(&q, &B1), dot3(&q, &B2)))
}

/// Tangent-plane coordinates of a nonzero ray.
pub fn project_ray(ray: &[f64; 3], clip_cosine: f64) -> Result<(f64, f64)> {
    assert!(ray.iter().any(|&x| x != 0.0), "cannot project the zero vector");
    project_unit(&unit(ray), clip_cosine)
}

/// Samples of the great-circle arc from `a` to `b`; consecutive samples are
/// strictly closer than the resolution unless the arc is a single point.
pub fn arc_polyline(a: &[f64; 3], b: &[f64; 3], opts: &RenderOptions) -> Result<Vec<(f64, f64)>> {
    let ua = unit(a);
    let ub = unit(b);
    let cos = dot3(&ua, &ub).clamp(-1.0, 1.0);
    let theta = cos.acos();
    if ua == ub || theta == 0.0 {
        return Ok(vec![project_unit(&ua, opts.clip_cosine)?]);
    }
    let steps = (theta.to_degrees() / opts.arc_resolution).floor() as usize + 1;
    let sin = theta.sin();
    let mut out = Vec::with_capacity(steps + 1);
    for s in 0..=steps {
        let u = if s == 0 {
            ua
        } else if s == steps {
            ub
        } else {
            let t = s as f64 / steps as f64;
            let wa = ((1.0 - t) * theta).sin() / sin;
            let wb = (t * theta).sin() / sin;
            unit(&[
                wa * ua[0] + wb * ub[0],
                wa * ua[1] + wb * ub[1],
                wa * ua[2] + wb * ub[2],
            ])
        };
        out.push(project_unit(&u, opts.clip_cosine)?);
    }
    Ok(out)
}

/// Arc between two integer rays, sampled in a canonical direction so that
/// both cones sharing the edge produce the same points.
pub fn edge_polyline(a: &[BigInt], b: &[BigInt], opts: &RenderOptions) -> Result<Vec<(f64, f64)>> {
    if a <= b {
        arc_polyline(&to_f64_ray(a), &to_f64_ray(b), opts)
    } else {
        let mut pts = arc_polyline(&to_f64_ray(b), &to_f64_ray(a), opts)?;
        pts.reverse();
        Ok(pts)
    }
}

/// Circle through three plane points: centre and radius.
fn circumcircle(p: [(f64, f64); 3]) -> (f64, f64, f64) {
    let [(ax, ay), (bx, by), (cx, cy)] = p;
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    (ux, uy, ((ax - ux).powi(2) + (ay - uy).powi(2)).sqrt())
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

struct Viewport {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Viewport {
    fn new(opts: &RenderOptions) -> Self {
        let w = f64::from(opts.width);
        let h = f64::from(opts.height);
        Self {
            cx: w / 2.0,
            cy: h / 2.0,
            scale: w.min(h) / 2.0 / opts.view_radius,
        }
    }

    /// SVG y grows downward, so `e_3` (negative second coordinate) lands
    /// below the centre.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.cx + self.scale * x, self.cy - self.scale * y)
    }

    fn path(&self, pts: &[(f64, f64)], close: bool) -> String {
        let mut d = String::new();
        for (i, &p) in pts.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, num(x), num(y));
        }
        if close {
            d.push_str(" Z");
        }
        d
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rendering {
    pub svg: String,
    /// Maps element ids to cone keys and lists clipped cones.
    pub sidecar: Value,
}

fn vector_label(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// The closed outline of a cone: the three edge polylines joined at shared
/// endpoints.
fn cone_outline(rays: &[Vec<BigInt>], opts: &RenderOptions) -> Result<Vec<(f64, f64)>> {
    let mut pts = Vec::new();
    for i in 0..3 {
        let edge = edge_polyline(&rays[i], &rays[(i + 1) % 3], opts)?;
        pts.extend(edge.into_iter().skip(usize::from(i > 0)));
    }
    pts.pop();
    Ok(pts)
}

pub fn render_svg(fan: &Fan, opts: &RenderOptions) -> Result<Rendering> {
    opts.validate()?;
    if fan.source().rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: fan.source().rank(),
        });
    }
    let vp = Viewport::new(opts);
    let mut body = String::new();
    let mut ids = serde_json::Map::new();
    let mut clipped = Vec::new();

    body.push_str("<g id=\"guides\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\">\n");
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut a = [0.0; 3];
        a[j] = 1.0;
        let mut b = [0.0; 3];
        b[k] = 1.0;
        let mut c = [0.0; 3];
        c[j] = 1.0;
        c[k] = -1.0;
        let pts = [
            project_ray(&a, opts.clip_cosine)?,
            project_ray(&b, opts.clip_cosine)?,
            project_ray(&c, opts.clip_cosine)?,
        ];
        let (ux, uy, r) = circumcircle(pts);
        let (x, y) = vp.map((ux, uy));
        let _ = writeln!(
            body,
            "<circle id=\"guide-{}\" class=\"guide\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            i + 1,
            num(x),
            num(y),
            num(r * vp.scale)
        );
    }
    body.push_str("</g>\n");

    body.push_str("<g id=\"cones\" fill=\"#dce6f2\" fill-opacity=\"0.6\" stroke=\"#1f3a5f\" stroke-width=\"0.6\" stroke-linejoin=\"round\">\n");
    let mut labels = String::new();
    for (idx, (key, record)) in fan.cones().enumerate() {
        let id = format!("cone-{idx}");
        match cone_outline(&record.cone.rays, opts) {
            Ok(pts) => {
                let neg = if key.is_negative_orthant() {
                    " negative-orthant"
                } else {
                    ""
                };
                let _ = writeln!(
                    body,
                    "<path id=\"{id}\" class=\"cone{neg}\" d=\"{}\"/>",
                    vp.path(&pts, true)
                );
                ids.insert(id.clone(), json!(key.to_string()));
                if opts.label_normals {
                    write_normal_labels(&mut labels, &vp, &record.cone.rays, &record.cone.normals, opts);
                }
            }
            Err(Error::NearAntipode { .. }) => clipped.push(json!(key.to_string())),
            Err(e) => return Err(e),
        }
    }
    body.push_str("</g>\n");

    let mut frontier_ids = Vec::new();
    if opts.shade_frontier && !fan.frontier().is_empty() {
        body.push_str("<g id=\"frontier\" fill=\"none\" stroke=\"#7f7f7f\" stroke-opacity=\"0.55\" stroke-width=\"5\" stroke-linecap=\"round\">\n");
        let seen: BTreeSet<&(ConeKey, usize)> = fan.frontier().iter().collect();
        for (idx, (key, dir)) in seen.into_iter().enumerate() {
            let Some(record) = fan.get(key) else { continue };
            let rays = &record.cone.rays;
            let others: Vec<&Vec<BigInt>> = (0..3).filter(|&j| j != dir - 1).map(|j| &rays[j]).collect();
            if let Ok(pts) = edge_polyline(others[0], others[1], opts) {
                let id = format!("frontier-{idx}");
                let _ = writeln!(
                    body,
                    "<path id=\"{id}\" class=\"frontier\" d=\"{}\"/>",
                    vp.path(&pts, false)
                );
                frontier_ids.push(json!({"id": id, "key": key.to_string(), "direction": dir}));
            }
        }
        body.push_str("</g>\n");
    }

    body.push_str("<g id=\"vertices\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.2\">\n");
    for i in 0..3 {
        let mut e = [0.0; 3];
        e[i] = 1.0;
        let (x, y) = vp.map(project_ray(&e, opts.clip_cosine)?);
        let _ = writeln!(
            body,
            "<circle id=\"v{}\" class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"5\"/>",
            i + 1,
            num(x),
            num(y)
        );
        let _ = writeln!(
            body,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" fill=\"#000000\" stroke=\"none\">v{}</text>",
            num(x + 8.0),
            num(y + 4.0),
            i + 1
        );
    }
    body.push_str("</g>\n");

    if !labels.is_empty() {
        body.push_str("<g id=\"labels\" font-size=\"7\" fill=\"#5a1f1f\" text-anchor=\"middle\">\n");
        body.push_str(&labels);
        body.push_str("</g>\n");
    }

    let svg = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n{body}</svg>\n",
        w = opts.width,
        h = opts.height
    );
    let sidecar = json!({
        "cones": Value::Object(ids),
        "clipped": clipped,
        "frontier": frontier_ids,
    });
    Ok(Rendering { svg, sidecar })
}

fn write_normal_labels(
    out: &mut String,
    vp: &Viewport,
    rays: &[Vec<BigInt>],
    normals: &[Vec<BigInt>],
    opts: &RenderOptions,
) {
    // The facet opposite ray j carries the normal c_j.
    for j in 0..3 {
        let (a, b) = (&rays[(j + 1) % 3], &rays[(j + 2) % 3]);
        let Ok(pts) = edge_polyline(a, b, opts) else { continue };
        let (x, y) = vp.map(pts[pts.len() / 2]);
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\">{}</text>", num(x), num(y), vector_label(&normals[j]));
    }
}
