//! The reduction algorithm: reducing points, inherited lifts, central
//! points, the subdivision cases (I)-(IV), and the iteration driver that
//! rewrites a lifted 1-sharbly chain as a sum of Voronoi reduced sharblies.
//!
//! Every choice is routed through exact GL_2(O)-covariant data: reducing and
//! central points are selected in normal-form coordinates and pulled back,
//! and all new lift matrices are assembled from lift columns and the exact
//! pulled-back vectors, never from re-normalized representatives. This makes
//! the entire pipeline equivariant: reducing gamma.xi yields gamma times the
//! reduction of xi, term by term.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gl2of::{normal_form, ray_normalize, Mat2, RayVector, Vec2};
use crate::sharbly::{size_pair, LiftedSharbly1, LiftedTerm, SharblyChain};
use crate::voronoi::{barycenter, l_of, ConeContext};

/// Which subdivision fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    I,
    II,
    III1,
    III2,
    IV,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III1 => "III.1",
            CaseTag::III2 => "III.2",
            CaseTag::IV => "IV",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ReducerConfig {
    pub max_passes: usize,
    pub trace_enabled: bool,
}

impl Default for ReducerConfig {
    fn default() -> Self {
        ReducerConfig {
            max_passes: 64,
            trace_enabled: false,
        }
    }
}

/// One node of the reduction tree.
#[derive(Clone, Debug)]
pub struct TraceNode {
    pub coeff: i64,
    pub verts: Vec<serde_json::Value>,
    pub sizes: Vec<String>,
    pub status: String,
    pub case: Option<CaseTag>,
    pub chosen_points: Vec<serde_json::Value>,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn new(term: &LiftedTerm) -> Self {
        TraceNode {
            coeff: term.coeff,
            verts: term.tri.verts().iter().map(|v| v.vec().to_json()).collect(),
            sizes: term.tri.sizes().iter().map(|s| s.to_string()).collect(),
            status: String::new(),
            case: None,
            chosen_points: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "input": {
                "coeff": self.coeff,
                "verts": self.verts,
                "sizes": self.sizes,
            },
            "status": self.status,
            "case": self.case.map(|c| c.to_string()),
            "chosen_points": self.chosen_points,
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// The tree of reduction steps; leaves are reduced or degenerate.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub roots: Vec<TraceNode>,
}

impl ReductionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "steps": self.roots.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Reduction result: the Voronoi reduced chain, the trace, the pass count
/// and the log of fired cases in processing order.
pub struct ReductionOutcome {
    pub chain: SharblyChain,
    pub trace: ReductionTrace,
    pub passes: usize,
    pub cases: Vec<CaseTag>,
}

fn edge_reduced(ctx: &ConeContext, x: &RayVector, y: &RayVector) -> Result<bool> {
    if x == y {
        return Ok(true);
    }
    ctx.is_reduced_set(&[x.clone(), y.clone()])
}

/// The reducing point of the edge [x, y] with lift M: the vertex of the
/// minimal Voronoi cone containing the edge barycenter that minimizes the
/// sum of the two replacement edge sizes. Returned as a canonical ray.
pub fn reducing_point(
    ctx: &ConeContext,
    x: &RayVector,
    y: &RayVector,
    m: &Mat2,
) -> Result<RayVector> {
    ray_normalize(ctx.params(), &reducing_point_covariant(ctx, x, y, m)?)
}

/// The reducing point as the exact pullback gamma^{-1} u_0 of the canonical
/// choice u_0 made in normal-form coordinates. This representative (not its
/// sign-normalization) is what inherited and interior lifts must use for the
/// whole pipeline to be GL_2(O)-equivariant.
pub fn reducing_point_covariant(
    ctx: &ConeContext,
    x: &RayVector,
    y: &RayVector,
    m: &Mat2,
) -> Result<Vec2> {
    if edge_reduced(ctx, x, y)? {
        return Err(Error::NoReducingPointNeeded);
    }
    let params = ctx.params();
    let (m0, g) = normal_form(params, m)?;
    let cached = ctx.reducing_cache().lock().unwrap().get(&m0).cloned();
    let u0 = match cached {
        Some(u0) => u0,
        None => {
            let x0 = m0.col(1);
            let y0 = m0.col(2);
            if x0.is_zero() || y0.is_zero() {
                return Err(Error::InvalidLift("lift has a zero column".into()));
            }
            let x0r = ray_normalize(params, &x0)?;
            let y0r = ray_normalize(params, &y0)?;
            let p = l_of(x0r.vec()).add(&l_of(y0r.vec()));
            let cone = ctx.containing_cone(&p)?;
            let proportional = x0.proportional(&y0);
            let mut cands: Vec<&RayVector> = cone
                .generators
                .iter()
                .filter(|u| !u.vec().ray_equal(&x0) && !u.vec().ray_equal(&y0))
                .filter(|u| !proportional || u.vec().proportional(&x0))
                .collect();
            if cands.is_empty() {
                return Err(Error::NoAdmissibleVertex);
            }
            cands.sort();
            let u0 = cands
                .into_iter()
                .min_by_key(|u| (size_pair(&x0r, u) + size_pair(u, &y0r), (*u).clone()))
                .unwrap()
                .vec()
                .clone();
            ctx.reducing_cache()
                .lock()
                .unwrap()
                .insert(m0.clone(), u0.clone());
            u0
        }
    };
    let gi = g.inverse()?;
    Ok(gi.mul_vec(&u0))
}

/// The inherited lift: keep column `keep` (1 or 2) of M bit-exactly and
/// replace the other column by u.
pub fn inherited_lift(m: &Mat2, keep: usize, u: &Vec2) -> Mat2 {
    match keep {
        1 => Mat2::from_cols(&m.col(1), u),
        2 => Mat2::from_cols(u, &m.col(2)),
        _ => panic!("keep must be 1 or 2"),
    }
}

/// Inherited lift keeping whichever column spans the given ray.
fn inherit_for(m: &Mat2, keep_ray: &RayVector, u: &Vec2) -> Result<Mat2> {
    let c1 = m.col(1);
    if !c1.is_zero() && c1.ray_equal(keep_ray.vec()) {
        return Ok(inherited_lift(m, 1, u));
    }
    let c2 = m.col(2);
    if !c2.is_zero() && c2.ray_equal(keep_ray.vec()) {
        return Ok(inherited_lift(m, 2, u));
    }
    Err(Error::InvalidLift(format!(
        "no lift column spans the kept ray {:?}",
        keep_ray
    )))
}

/// Exact covariant representative of vertex i, taken from a lift column
/// (vertex i is an endpoint of the edge opposite vertex i+1).
fn colrep(tri: &LiftedSharbly1, i: usize) -> Result<Vec2> {
    let m = &tri.lifts()[(i + 1) % 3];
    let v = &tri.verts()[i];
    for c in [m.col(1), m.col(2)] {
        if !c.is_zero() && c.ray_equal(v.vec()) {
            return Ok(c);
        }
    }
    Err(Error::InvalidLift(format!(
        "no lift column spans vertex {:?}",
        v
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralMode {
    III,
    IV,
}

/// Canonical GL_2(O) frame of a lifted triangle: the gamma of the
/// lexicographically least edge normal form, ties broken by the framed
/// vertex configuration. Framing makes the central-point choice exactly
/// equivariant.
fn frame_gamma(ctx: &ConeContext, tri: &LiftedSharbly1) -> Result<Mat2> {
    let params = ctx.params();
    let mut nfs = Vec::with_capacity(3);
    for m in tri.lifts() {
        nfs.push(normal_form(params, m)?);
    }
    let min_m0 = nfs
        .iter()
        .map(|(m0, _)| m0.clone())
        .min_by(|a, b| a.lex_cmp(b))
        .unwrap();
    let mut best: Option<(Vec<RayVector>, Mat2)> = None;
    for (m0, g) in &nfs {
        if m0.lex_cmp(&min_m0) != std::cmp::Ordering::Equal {
            continue;
        }
        let mut cfg = Vec::with_capacity(3);
        for v in tri.verts() {
            cfg.push(ray_normalize(params, &g.mul_vec(v.vec()))?);
        }
        cfg.sort();
        if best.as_ref().map(|(c, _)| cfg < *c).unwrap_or(true) {
            best = Some((cfg, g.clone()));
        }
    }
    Ok(best.unwrap().1)
}

/// The central point of cases (III.2) and (IV), as the exact covariant
/// representative.
pub fn central_point_covariant(
    ctx: &ConeContext,
    tri: &LiftedSharbly1,
    mode: CentralMode,
    u1: Option<&Vec2>,
) -> Result<Vec2> {
    if mode == CentralMode::III && u1.is_none() {
        return Err(Error::NoAdmissibleVertex);
    }
    let params = ctx.params();
    let g = frame_gamma(ctx, tri)?;
    let mut framed = Vec::with_capacity(3);
    for v in tri.verts() {
        framed.push(ray_normalize(params, &g.mul_vec(v.vec()))?);
    }
    let mut b = barycenter(&framed);
    let u1f = match (mode, u1) {
        (CentralMode::III, Some(u)) => {
            let uf = ray_normalize(params, &g.mul_vec(u))?;
            b = b.add(&l_of(uf.vec()));
            Some(uf)
        }
        _ => None,
    };
    let vertex = ctx.containing_top_cone(&b)?;
    let cands: Vec<&RayVector> = vertex
        .generators()
        .iter()
        .filter(|w| !framed.contains(w))
        .collect();
    if cands.is_empty() {
        return Err(Error::NoAdmissibleVertex);
    }
    let mut best: Option<(i64, &RayVector)> = None;
    for w in cands {
        let score = match mode {
            CentralMode::III => {
                let mut others: Vec<&RayVector> = framed.iter().collect();
                if let Some(u) = &u1f {
                    others.push(u);
                }
                let mut e = 0i64;
                for a in others {
                    if edge_reduced(ctx, a, w)? {
                        e += 1;
                    }
                }
                e
            }
            CentralMode::IV => {
                let mut e = 0i64;
                for a in &framed {
                    if edge_reduced(ctx, a, w)? {
                        e += 1;
                    }
                }
                let mut p = 0i64;
                for (i, j) in [(0, 1), (1, 2), (2, 0)] {
                    let raw = [
                        framed[i].vec().clone(),
                        framed[j].vec().clone(),
                        w.vec().clone(),
                    ];
                    if crate::sharbly::is_voronoi_reduced_raw(ctx, &raw)? {
                        p += 1;
                    }
                }
                e + p
            }
        };
        let better = match &best {
            None => true,
            Some((s, bw)) => score > *s || (score == *s && w < *bw),
        };
        if better {
            best = Some((score, w));
        }
    }
    let w0 = best.unwrap().1.vec().clone();
    Ok(g.inverse()?.mul_vec(&w0))
}

/// Central point as a canonical ray.
pub fn central_point(
    ctx: &ConeContext,
    tri: &LiftedSharbly1,
    mode: CentralMode,
    u1: Option<&Vec2>,
) -> Result<RayVector> {
    ray_normalize(ctx.params(), &central_point_covariant(ctx, tri, mode, u1)?)
}

/// One subdivision step.
pub struct Subdivision {
    pub case: CaseTag,
    pub children: Vec<LiftedSharbly1>,
    pub chosen_points: Vec<Vec2>,
}

/// Subdivide a non-reduced, nondegenerate lifted 1-sharbly following the
/// case determined by its number of non-reduced edges.
pub fn subdivide(ctx: &ConeContext, tri: &LiftedSharbly1) -> Result<Subdivision> {
    let params = ctx.params();
    if tri.is_degenerate() {
        return Err(Error::NothingToSubdivide);
    }
    let mut red = [false; 3];
    #[allow(clippy::needless_range_loop)]
    for i in 0..3 {
        let (x, y) = tri.edge(i);
        red[i] = edge_reduced(ctx, x, y)?;
    }
    let nred = red.iter().filter(|r| !**r).count();
    if nred == 0 && ctx.is_reduced_set(tri.verts())? {
        return Err(Error::NothingToSubdivide);
    }
    let new_tri = |raw: [Vec2; 3], lifts: [Mat2; 3]| LiftedSharbly1::new(params, &raw, lifts);
    match nred {
        3 => {
            let mut u = Vec::with_capacity(3);
            for i in 0..3 {
                let (x, y) = tri.edge(i);
                u.push(reducing_point_covariant(ctx, x, y, &tri.lifts()[i])?);
            }
            let (u1, u2, u3) = (u[0].clone(), u[1].clone(), u[2].clone());
            let v = tri.verts();
            let m = tri.lifts();
            let il23 = Mat2::from_cols(&u2, &u3);
            let il13 = Mat2::from_cols(&u1, &u3);
            let il12 = Mat2::from_cols(&u1, &u2);
            let children = vec![
                new_tri(
                    [v[0].vec().clone(), u3.clone(), u2.clone()],
                    [
                        il23.clone(),
                        inherit_for(&m[1], &v[0], &u2)?,
                        inherit_for(&m[2], &v[0], &u3)?,
                    ],
                )?,
                new_tri(
                    [u3.clone(), v[1].vec().clone(), u1.clone()],
                    [
                        inherit_for(&m[0], &v[1], &u1)?,
                        il13.clone(),
                        inherit_for(&m[2], &v[1], &u3)?,
                    ],
                )?,
                new_tri(
                    [u2.clone(), u1.clone(), v[2].vec().clone()],
                    [
                        inherit_for(&m[0], &v[2], &u1)?,
                        inherit_for(&m[1], &v[2], &u2)?,
                        il12.clone(),
                    ],
                )?,
                new_tri([u1.clone(), u2.clone(), u3.clone()], [il23, il13, il12])?,
            ];
            Ok(Subdivision {
                case: CaseTag::I,
                children,
                chosen_points: u,
            })
        }
        2 => {
            // rotate the reduced edge into position 2 (index 1)
            let k = red.iter().position(|r| *r).unwrap();
            let t = tri.rot((k + 2) % 3);
            let v = t.verts().clone();
            let m = t.lifts().clone();
            let (x1, y1) = t.edge(0);
            let u1 = reducing_point_covariant(ctx, x1, y1, &m[0])?;
            let (x3, y3) = t.edge(2);
            let u3 = reducing_point_covariant(ctx, x3, y3, &m[2])?;
            let u1r = ray_normalize(params, &u1)?;
            let u3r = ray_normalize(params, &u3)?;
            let il_uu = Mat2::from_cols(&u1, &u3);
            let children = if size_pair(&v[0], &u1r) <= size_pair(&u3r, &v[2]) {
                let il_l = Mat2::from_cols(&colrep(&t, 0)?, &u1);
                vec![
                    new_tri(
                        [v[0].vec().clone(), u3.clone(), u1.clone()],
                        [il_uu.clone(), il_l.clone(), inherit_for(&m[2], &v[0], &u3)?],
                    )?,
                    new_tri(
                        [u3.clone(), v[1].vec().clone(), u1.clone()],
                        [
                            inherit_for(&m[0], &v[1], &u1)?,
                            il_uu,
                            inherit_for(&m[2], &v[1], &u3)?,
                        ],
                    )?,
                    new_tri(
                        [v[0].vec().clone(), u1.clone(), v[2].vec().clone()],
                        [inherit_for(&m[0], &v[2], &u1)?, m[1].clone(), il_l],
                    )?,
                ]
            } else {
                let il_l = Mat2::from_cols(&u3, &colrep(&t, 2)?);
                vec![
                    new_tri(
                        [v[0].vec().clone(), u3.clone(), v[2].vec().clone()],
                        [il_l.clone(), m[1].clone(), inherit_for(&m[2], &v[0], &u3)?],
                    )?,
                    new_tri(
                        [u3.clone(), v[1].vec().clone(), u1.clone()],
                        [
                            inherit_for(&m[0], &v[1], &u1)?,
                            il_uu.clone(),
                            inherit_for(&m[2], &v[1], &u3)?,
                        ],
                    )?,
                    new_tri(
                        [u3.clone(), u1.clone(), v[2].vec().clone()],
                        [inherit_for(&m[0], &v[2], &u1)?, il_l, il_uu],
                    )?,
                ]
            };
            Ok(Subdivision {
                case: CaseTag::II,
                children,
                chosen_points: vec![u1, u3],
            })
        }
        1 => {
            // rotate the non-reduced edge into position 1 (index 0)
            let k = red.iter().position(|r| !*r).unwrap();
            let t = tri.rot(k);
            let v = t.verts().clone();
            let m = t.lifts().clone();
            let (x1, y1) = t.edge(0);
            let u1 = reducing_point_covariant(ctx, x1, y1, &m[0])?;
            let u1r = ray_normalize(params, &u1)?;
            let cond = !edge_reduced(ctx, &v[1], &u1r)?
                || !edge_reduced(ctx, &u1r, &v[2])?
                || v[1].vec().proportional(v[0].vec());
            if cond {
                let il_l = Mat2::from_cols(&colrep(&t, 0)?, &u1);
                let children = vec![
                    new_tri(
                        [v[0].vec().clone(), v[1].vec().clone(), u1.clone()],
                        [inherit_for(&m[0], &v[1], &u1)?, il_l.clone(), m[2].clone()],
                    )?,
                    new_tri(
                        [v[0].vec().clone(), u1.clone(), v[2].vec().clone()],
                        [inherit_for(&m[0], &v[2], &u1)?, m[1].clone(), il_l],
                    )?,
                ];
                return Ok(Subdivision {
                    case: CaseTag::III1,
                    children,
                    chosen_points: vec![u1],
                });
            }
            let w = central_point_covariant(ctx, &t, CentralMode::III, Some(&u1))?;
            let il_v1w = Mat2::from_cols(&colrep(&t, 0)?, &w);
            let il_v2w = Mat2::from_cols(&colrep(&t, 1)?, &w);
            let il_v3w = Mat2::from_cols(&colrep(&t, 2)?, &w);
            let il_u1w = Mat2::from_cols(&u1, &w);
            let children = vec![
                new_tri(
                    [v[0].vec().clone(), v[1].vec().clone(), w.clone()],
                    [il_v2w.clone(), il_v1w.clone(), m[2].clone()],
                )?,
                new_tri(
                    [w.clone(), v[1].vec().clone(), u1.clone()],
                    [inherit_for(&m[0], &v[1], &u1)?, il_u1w.clone(), il_v2w],
                )?,
                new_tri(
                    [w.clone(), u1.clone(), v[2].vec().clone()],
                    [inherit_for(&m[0], &v[2], &u1)?, il_v3w.clone(), il_u1w],
                )?,
                new_tri(
                    [w.clone(), v[2].vec().clone(), v[0].vec().clone()],
                    [m[1].clone(), il_v1w, il_v3w],
                )?,
            ];
            Ok(Subdivision {
                case: CaseTag::III2,
                children,
                chosen_points: vec![u1, w],
            })
        }
        _ => {
            // all edges reduced but the triangle is not: case IV
            let w = central_point_covariant(ctx, tri, CentralMode::IV, None)?;
            let v = tri.verts();
            let m = tri.lifts();
            let il_v1w = Mat2::from_cols(&colrep(tri, 0)?, &w);
            let il_v2w = Mat2::from_cols(&colrep(tri, 1)?, &w);
            let il_v3w = Mat2::from_cols(&colrep(tri, 2)?, &w);
            let children = vec![
                new_tri(
                    [v[0].vec().clone(), v[1].vec().clone(), w.clone()],
                    [il_v2w.clone(), il_v1w.clone(), m[2].clone()],
                )?,
                new_tri(
                    [w.clone(), v[1].vec().clone(), v[2].vec().clone()],
                    [m[0].clone(), il_v3w.clone(), il_v2w],
                )?,
                new_tri(
                    [w.clone(), v[2].vec().clone(), v[0].vec().clone()],
                    [m[1].clone(), il_v1w, il_v3w],
                )?,
            ];
            Ok(Subdivision {
                case: CaseTag::IV,
                children,
                chosen_points: vec![w],
            })
        }
    }
}

/// Reduce a lifted chain to Voronoi reduced terms by repeated subdivision.
pub fn reduce_chain(
    ctx: &ConeContext,
    chain: &[LiftedTerm],
    cfg: &ReducerConfig,
) -> Result<ReductionOutcome> {
    assert!(cfg.max_passes >= 1, "max_passes must be at least 1");
    let mut out = SharblyChain::new();
    let mut cases = Vec::new();
    let mut passes = 0usize;
    // (term, trace path: indices from the root)
    let mut work: Vec<(LiftedTerm, Vec<usize>)> = Vec::new();
    let mut roots: Vec<TraceNode> = Vec::new();
    for (i, t) in chain.iter().enumerate() {
        roots.push(TraceNode::new(t));
        work.push((t.clone(), vec![i]));
    }
    #[allow(clippy::ptr_arg)]
    fn node_at<'a>(roots: &'a mut Vec<TraceNode>, path: &[usize]) -> &'a mut TraceNode {
        let mut n = &mut roots[path[0]];
        for &i in &path[1..] {
            n = &mut n.children[i];
        }
        n
    }
    loop {
        let mut active: Vec<(LiftedTerm, Vec<usize>)> = Vec::new();
        for (term, path) in work.drain(..) {
            if term.tri.is_degenerate() {
                node_at(&mut roots, &path).status = "degenerate".into();
                continue;
            }
            if ctx.is_reduced_set(term.tri.verts())? {
                node_at(&mut roots, &path).status = "reduced".into();
                if let Some((s, sign)) = term.tri.to_sharbly() {
                    out.add_canonical(s, sign * term.coeff);
                }
                continue;
            }
            active.push((term, path));
        }
        if active.is_empty() {
            break;
        }
        passes += 1;
        if passes > cfg.max_passes {
            return Err(Error::NonTermination);
        }
        for (term, path) in active {
            let sub = subdivide(ctx, &term.tri)?;
            cases.push(sub.case);
            {
                let node = node_at(&mut roots, &path);
                node.status = "split".into();
                node.case = Some(sub.case);
                node.chosen_points = sub.chosen_points.iter().map(|p| p.to_json()).collect();
            }
            for (j, child) in sub.children.into_iter().enumerate() {
                let child_term = LiftedTerm {
                    coeff: term.coeff,
                    tri: child,
                };
                node_at(&mut roots, &path)
                    .children
                    .push(TraceNode::new(&child_term));
                let mut child_path = path.clone();
                child_path.push(j);
                work.push((child_term, child_path));
            }
        }
    }
    let trace = if cfg.trace_enabled {
        ReductionTrace { roots }
    } else {
        ReductionTrace::default()
    };
    Ok(ReductionOutcome {
        chain: out,
        trace,
        passes,
        cases,
    })
}

/// Translate a lifted chain by a nonsingular matrix: vertices map to g.v,
/// lifts to g.M.
pub fn act_lifted(ctx: &ConeContext, g: &Mat2, chain: &[LiftedTerm]) -> Result<Vec<LiftedTerm>> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let params = ctx.params();
    let mut out = Vec::with_capacity(chain.len());
    for t in chain {
        let raw: [Vec2; 3] = std::array::from_fn(|i| g.mul_vec(t.tri.verts()[i].vec()));
        let lifts: [Mat2; 3] = std::array::from_fn(|i| g.mul(&t.tri.lifts()[i]));
        out.push(LiftedTerm {
            coeff: t.coeff,
            tri: LiftedSharbly1::new(params, &raw, lifts)?,
        });
    }
    Ok(out)
}

/// Translate a plain chain: v -> g.v on all spanning vectors, then
/// re-canonicalize.
pub fn act_chain(ctx: &ConeContext, g: &Mat2, chain: &SharblyChain) -> Result<SharblyChain> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let params = ctx.params();
    let mut out = SharblyChain::new();
    for (s, &c) in chain.iter() {
        let raw: Vec<Vec2> = s.verts().iter().map(|v| g.mul_vec(v.vec())).collect();
        out.add_raw(params, &raw, c)?;
    }
    Ok(out)
}

/// Total size vector statistics used by reports: the largest edge size in a
/// lifted chain.
pub fn max_edge_size(chain: &[LiftedTerm]) -> BigInt {
    let mut m = BigInt::from(0);
    for t in chain {
        for s in t.tri.sizes() {
            if s > m {
                m = s;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::FieldElem;
    use crate::sharbly::Sharbly;

    fn ctx() -> &'static ConeContext {
        ConeContext::qsqrt2()
    }

    fn fe(a: i64, b: i64) -> FieldElem {
        FieldElem::from_integers(2, a, b)
    }

    fn vec(a1: i64, b1: i64, a2: i64, b2: i64) -> Vec2 {
        Vec2::new(fe(a1, b1), fe(a2, b2))
    }

    fn t_cols() -> [Vec2; 3] {
        [vec(3, 1, 0, 1), vec(4, 4, -1, 5), vec(-4, 3, -5, -3)]
    }

    fn t_tri() -> LiftedSharbly1 {
        LiftedSharbly1::with_default_lifts(ctx().params(), &t_cols()).unwrap()
    }

    #[test]
    fn inherited_lift_examples() {
        let id = Mat2::identity(2);
        let u = vec(1, 0, 1, 0);
        let m = inherited_lift(&id, 1, &u);
        assert_eq!(m, Mat2::new(fe(1, 0), fe(1, 0), fe(0, 0), fe(1, 0)));
        let m = inherited_lift(&id, 2, &u);
        assert_eq!(m, Mat2::new(fe(1, 0), fe(0, 0), fe(1, 0), fe(1, 0)));
        // a scaled kept column is preserved bit-exactly
        let m0 = Mat2::from_cols(&Vec2::e1(2).scale(&fe(1, 1)), &Vec2::e2(2));
        let m = inherited_lift(&m0, 1, &u);
        assert_eq!(m.col(1), Vec2::e1(2).scale(&fe(1, 1)));
    }

    #[test]
    fn reducing_points_of_t() {
        // frozen from the oracle prototype; two of the three match the
        // paper's S4 columns exactly, the third is a documented tie
        let t = t_tri();
        let want = [vec(0, 0, 1, 1), vec(-1, 1, 0, 0), vec(1, 1, 0, 1)];
        for i in 0..3 {
            let (x, y) = t.edge(i);
            let u = reducing_point(ctx(), x, y, &t.lifts()[i]).unwrap();
            assert_eq!(u.vec(), &want[i], "edge {}", i + 1);
        }
    }

    #[test]
    fn reducing_point_rejects_reduced_edges() {
        let p = ctx().params();
        let x = ray_normalize(p, &Vec2::e1(2)).unwrap();
        let y = ray_normalize(p, &Vec2::e2(2)).unwrap();
        let m = Mat2::identity(2);
        assert!(matches!(
            reducing_point(ctx(), &x, &y, &m),
            Err(Error::NoReducingPointNeeded)
        ));
    }

    #[test]
    fn first_pass_of_t_is_case_i() {
        let t = t_tri();
        let sub = subdivide(ctx(), &t).unwrap();
        assert_eq!(sub.case, CaseTag::I);
        assert_eq!(sub.children.len(), 4);
        let mut triples: Vec<Vec<BigInt>> = sub
            .children
            .iter()
            .map(|c| {
                let mut s = c.sizes().to_vec();
                s.sort();
                s
            })
            .collect();
        triples.sort();
        let want: Vec<Vec<BigInt>> = [[1i64, 1, 2].as_slice(), &[1, 1, 16], &[1, 2, 7], &[2, 2, 8]]
            .iter()
            .map(|t| t.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(triples, want);
    }

    #[test]
    fn reduced_input_is_a_fixpoint() {
        let raw = [Vec2::e1(2), Vec2::e2(2), vec(1, 0, -1, 0)];
        let t = LiftedSharbly1::with_default_lifts(ctx().params(), &raw).unwrap();
        let out = reduce_chain(
            ctx(),
            &[LiftedTerm { coeff: 1, tri: t }],
            &ReducerConfig::default(),
        )
        .unwrap();
        assert_eq!(out.passes, 0);
        assert_eq!(out.chain.len(), 1);
        let (s, sign) = Sharbly::canonicalize(ctx().params(), &raw)
            .unwrap()
            .unwrap();
        assert_eq!(out.chain.coeff(&s), sign);
    }

    #[test]
    fn subdivide_rejects_finished_input() {
        let c = ctx();
        // already reduced
        let raw = [Vec2::e1(2), Vec2::e2(2), vec(1, 0, -1, 0)];
        let t = LiftedSharbly1::with_default_lifts(c.params(), &raw).unwrap();
        assert!(matches!(subdivide(c, &t), Err(Error::NothingToSubdivide)));
        // degenerate: all three vertices on the e1 line
        let raw = [Vec2::e1(2), vec(1, 1, 0, 0), vec(3, 2, 0, 0)];
        let t = LiftedSharbly1::with_default_lifts(c.params(), &raw).unwrap();
        assert!(t.is_degenerate());
        assert!(matches!(subdivide(c, &t), Err(Error::NothingToSubdivide)));
    }

    #[test]
    fn act_examples() {
        let c = ctx();
        let raw = [Vec2::e1(2), Vec2::e2(2), Vec2::e1(2).add(&Vec2::e2(2))];
        let t = LiftedSharbly1::with_default_lifts(c.params(), &raw).unwrap();
        let chain = vec![LiftedTerm { coeff: 1, tri: t }];
        let id = Mat2::identity(2);
        let same = act_lifted(c, &id, &chain).unwrap();
        assert_eq!(
            crate::sharbly::chain_to_json(2, &same),
            crate::sharbly::chain_to_json(2, &chain)
        );
        // diag(eps, 1) translates the first coordinates
        let g = Mat2::new(fe(1, 1), fe(0, 0), fe(0, 0), fe(1, 0));
        let moved = act_lifted(c, &g, &chain).unwrap();
        let vs = moved[0].tri.verts();
        assert_eq!(vs[0].vec(), &vec(1, 1, 0, 0));
        assert_eq!(vs[1].vec(), &Vec2::e2(2));
        assert_eq!(vs[2].vec(), &vec(1, 1, 1, 0));
        // singular matrices are rejected
        let sing = Mat2::new(fe(1, 0), fe(1, 0), fe(1, 0), fe(1, 0));
        assert!(act_lifted(c, &sing, &chain).is_err());
    }
}
