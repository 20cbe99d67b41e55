//! The chain level of the sharbly complex: canonical k-sharblies, integer
//! chains, the boundary map, edge sizes, Gamma-equivalence keys for
//! 0-sharblies, and lifted 1-sharblies.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::gl2of::{is_normal_form, normal_form, ray_normalize, Mat2, RayVector, Vec2};
use crate::qfield::FieldParams;
use crate::voronoi::{barycenter, ConeContext};

/// A canonical k-sharbly: vertices are canonical ray representatives in
/// ascending order; the orientation sign of the sorting permutation is
/// reported by the constructor and carried by the enclosing coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sharbly {
    verts: Vec<RayVector>,
}

impl std::fmt::Debug for Sharbly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", v)?;
        }
        write!(f, "]")
    }
}

impl PartialOrd for Sharbly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sharbly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.verts
            .len()
            .cmp(&other.verts.len())
            .then_with(|| self.verts.cmp(&other.verts))
    }
}

impl Sharbly {
    /// Canonicalize raw vertices. Returns None for sharblies that vanish in
    /// the complex: degenerate ones (all vertices on one line of F^2) and
    /// repeated-ray symbols (2-torsion under the alternating relation).
    pub fn canonicalize(params: &FieldParams, raw: &[Vec2]) -> Result<Option<(Sharbly, i64)>> {
        if raw.len() < 2 {
            return Err(Error::Parse(format!(
                "a k-sharbly has k+2 >= 2 vertices, got {}",
                raw.len()
            )));
        }
        let mut verts = Vec::with_capacity(raw.len());
        for v in raw {
            verts.push(ray_normalize(params, v)?);
        }
        if verts.len() >= 2
            && verts[1..]
                .iter()
                .all(|w| verts[0].vec().proportional(w.vec()))
        {
            return Ok(None); // degenerate
        }
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by(|&i, &j| verts[i].cmp(&verts[j]));
        let mut sign = 1i64;
        // permutation parity by counting inversions
        for i in 0..order.len() {
            for j in (i + 1)..order.len() {
                if order[i] > order[j] {
                    sign = -sign;
                }
            }
        }
        let sorted: Vec<RayVector> = order.into_iter().map(|i| verts[i].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(None); // repeated ray: x = -x in the complex
        }
        Ok(Some((Sharbly { verts: sorted }, sign)))
    }

    pub fn from_rays(verts: Vec<RayVector>) -> Option<(Sharbly, i64)> {
        let raw: Vec<Vec2> = verts.iter().map(|r| r.vec().clone()).collect();
        // canonical rays need no field params to re-normalize; sort directly
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by(|&i, &j| verts[i].cmp(&verts[j]));
        let mut sign = 1i64;
        for i in 0..order.len() {
            for j in (i + 1)..order.len() {
                if order[i] > order[j] {
                    sign = -sign;
                }
            }
        }
        if verts.len() >= 2 && raw[1..].iter().all(|w| raw[0].proportional(w)) {
            return None;
        }
        let sorted: Vec<RayVector> = order.into_iter().map(|i| verts[i].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Sharbly { verts: sorted }, sign))
    }

    pub fn verts(&self) -> &[RayVector] {
        &self.verts
    }

    pub fn k(&self) -> usize {
        self.verts.len() - 2
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.verts.iter().map(|v| v.vec().to_json()).collect())
    }
}

/// Integer-weighted formal sum of canonical sharblies. Degenerate and
/// torsion symbols are dropped at insertion; zero coefficients are removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SharblyChain {
    terms: BTreeMap<Sharbly, i64>,
}

impl SharblyChain {
    pub fn new() -> Self {
        SharblyChain::default()
    }

    pub fn add_canonical(&mut self, s: Sharbly, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(s).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add_raw(&mut self, params: &FieldParams, verts: &[Vec2], coeff: i64) -> Result<()> {
        if let Some((s, sign)) = Sharbly::canonicalize(params, verts)? {
            self.add_canonical(s, sign * coeff);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Sharbly, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &Sharbly) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    /// Total number of terms counted with multiplicity.
    pub fn weight(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }

    /// The boundary map: del [v_1, .., v_{k+2}] = sum_i (-1)^i [.., v_i^, ..].
    /// 0-sharblies map to zero (the complex stops at k = 0).
    pub fn boundary(&self, params: &FieldParams) -> Result<SharblyChain> {
        let mut out = SharblyChain::new();
        for (s, &c) in &self.terms {
            let vs = s.verts();
            if vs.len() <= 2 {
                continue;
            }
            for i in 0..vs.len() {
                let rest: Vec<Vec2> = vs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, v)| v.vec().clone())
                    .collect();
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                out.add_raw(params, &rest, sign * c)?;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, d: u32) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(s, c)| {
                serde_json::json!({
                    "coeff": c,
                    "verts": s.to_json(),
                })
            })
            .collect();
        serde_json::json!({ "field": d, "terms": terms })
    }
}

/// |Norm(det(x | y))| of the canonical spanning matrix: the size of the
/// 0-sharbly with the given spanning vectors. Zero iff degenerate.
pub fn size_pair(x: &RayVector, y: &RayVector) -> BigInt {
    let det = Mat2::from_cols(x.vec(), y.vec()).det();
    let n = det.norm_abs();
    debug_assert!(n.is_integer());
    n.to_integer()
}

/// Size of an edge (2-vertex sharbly).
pub fn size(edge: &Sharbly) -> BigInt {
    assert_eq!(edge.verts().len(), 2, "size is defined for 0-sharblies");
    size_pair(&edge.verts()[0], &edge.verts()[1])
}

/// Gamma-equivalence key of a 0-sharbly: the lex-least normal form of the
/// canonical spanning matrix over the 8 column sign/swap symmetries.
/// `sign` reports the orientation; for classes equivalent to their own
/// reversal (`self_inverse`) the chain residue is only defined modulo 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaKey {
    pub matrix: Mat2,
    pub sign: i64,
    pub self_inverse: bool,
}

impl GammaKey {
    /// Grouping key as a stable string.
    pub fn key_string(&self) -> String {
        format!("{:?}", self.matrix)
    }
}

pub fn gamma_key(params: &FieldParams, x: &Vec2, y: &Vec2) -> Result<GammaKey> {
    let xr = ray_normalize(params, x)?;
    let yr = ray_normalize(params, y)?;
    if xr == yr {
        return Err(Error::ZeroVector); // degenerate edge has no key
    }
    let (a, b, orient_in) = if xr <= yr {
        (xr, yr, 1i64)
    } else {
        (yr, xr, -1i64)
    };
    let base = Mat2::from_cols(a.vec(), b.vec());
    let d = params.d();
    let one = crate::qfield::FieldElem::one(d);
    let neg = one.neg();
    let diags = [
        (one.clone(), one.clone()),
        (one.clone(), neg.clone()),
        (neg.clone(), one.clone()),
        (neg.clone(), neg.clone()),
    ];
    let mut best: Option<Mat2> = None;
    let mut parities: Vec<i64> = Vec::new();
    for (swap, parity) in [(false, 1i64), (true, -1i64)] {
        for (u1, u2) in &diags {
            let mut m = base.clone();
            if swap {
                m = Mat2::from_cols(&base.col(2), &base.col(1));
            }
            let r = Mat2::new(
                u1.clone(),
                crate::qfield::FieldElem::zero(d),
                crate::qfield::FieldElem::zero(d),
                u2.clone(),
            );
            let m = m.mul(&r);
            let (m0, _) = normal_form(params, &m)?;
            match &best {
                None => {
                    best = Some(m0);
                    parities = vec![parity];
                }
                Some(bm) => match m0.lex_cmp(bm) {
                    Ordering::Less => {
                        best = Some(m0);
                        parities = vec![parity];
                    }
                    Ordering::Equal => parities.push(parity),
                    Ordering::Greater => {}
                },
            }
        }
    }
    let matrix = best.unwrap();
    debug_assert!(is_normal_form(params, &matrix));
    let self_inverse = parities.contains(&1) && parities.contains(&-1);
    Ok(GammaKey {
        matrix,
        sign: orient_in * parities[0],
        self_inverse,
    })
}

/// Voronoi reducedness of a sharbly; degenerate input reports true (it
/// vanishes in the complex).
pub fn is_voronoi_reduced(ctx: &ConeContext, s: &Sharbly) -> Result<bool> {
    ctx.is_reduced_set(s.verts())
}

pub fn is_voronoi_reduced_raw(ctx: &ConeContext, raw: &[Vec2]) -> Result<bool> {
    match Sharbly::canonicalize(ctx.params(), raw)? {
        None => Ok(true),
        Some((s, _)) => is_voronoi_reduced(ctx, &s),
    }
}

/// The sharbly's vertex set spans a Voronoi cone exactly (not just a subset
/// of one): the minimal cone of the barycenter has precisely these rays.
pub fn forms_voronoi_cone(ctx: &ConeContext, s: &Sharbly) -> Result<bool> {
    let cone = ctx.containing_cone(&barycenter(s.verts()))?;
    Ok(cone.generators == s.verts())
}

/// A 1-sharbly carrying a lift matrix per edge; lift i belongs to the edge
/// opposite vertex i. Vertices are stored as canonical rays in a fixed
/// cyclic order (not sorted: the order pairs vertices with lifts).
#[derive(Clone, Debug)]
pub struct LiftedSharbly1 {
    verts: [RayVector; 3],
    lifts: [Mat2; 3],
}

impl LiftedSharbly1 {
    pub fn new(params: &FieldParams, raw: &[Vec2; 3], lifts: [Mat2; 3]) -> Result<Self> {
        let verts = [
            ray_normalize(params, &raw[0])?,
            ray_normalize(params, &raw[1])?,
            ray_normalize(params, &raw[2])?,
        ];
        let t = LiftedSharbly1 { verts, lifts };
        t.validate()?;
        Ok(t)
    }

    /// Default lifts: the canonical spanning-vector matrix of each edge,
    /// columns in ray order.
    pub fn with_default_lifts(params: &FieldParams, raw: &[Vec2; 3]) -> Result<Self> {
        let verts = [
            ray_normalize(params, &raw[0])?,
            ray_normalize(params, &raw[1])?,
            ray_normalize(params, &raw[2])?,
        ];
        let lift = |a: &RayVector, b: &RayVector| {
            let (x, y) = if a <= b { (a, b) } else { (b, a) };
            Mat2::from_cols(x.vec(), y.vec())
        };
        let lifts = [
            lift(&verts[1], &verts[2]),
            lift(&verts[2], &verts[0]),
            lift(&verts[0], &verts[1]),
        ];
        Ok(LiftedSharbly1 { verts, lifts })
    }

    fn validate(&self) -> Result<()> {
        for i in 0..3 {
            let (x, y) = self.edge(i);
            let m = &self.lifts[i];
            let c1 = m.col(1);
            let c2 = m.col(2);
            if c1.is_zero() || c2.is_zero() {
                return Err(Error::InvalidLift(format!(
                    "lift {} has a zero column",
                    i + 1
                )));
            }
            let ok = (c1.ray_equal(x.vec()) && c2.ray_equal(y.vec()))
                || (c1.ray_equal(y.vec()) && c2.ray_equal(x.vec()));
            if !ok {
                return Err(Error::InvalidLift(format!(
                    "lift {} column rays do not match edge {:?}, {:?}",
                    i + 1,
                    x,
                    y
                )));
            }
        }
        Ok(())
    }

    pub fn verts(&self) -> &[RayVector; 3] {
        &self.verts
    }

    pub fn lifts(&self) -> &[Mat2; 3] {
        &self.lifts
    }

    /// Endpoints of the edge opposite vertex i (0-indexed).
    pub fn edge(&self, i: usize) -> (&RayVector, &RayVector) {
        (&self.verts[(i + 1) % 3], &self.verts[(i + 2) % 3])
    }

    /// Cyclic rotation by k: vertex 0 becomes old vertex k.
    pub fn rot(&self, k: usize) -> LiftedSharbly1 {
        let idx = |i: usize| (i + k) % 3;
        LiftedSharbly1 {
            verts: [
                self.verts[idx(0)].clone(),
                self.verts[idx(1)].clone(),
                self.verts[idx(2)].clone(),
            ],
            lifts: [
                self.lifts[idx(0)].clone(),
                self.lifts[idx(1)].clone(),
                self.lifts[idx(2)].clone(),
            ],
        }
    }

    /// All three vertices on one line of F^2.
    pub fn is_degenerate(&self) -> bool {
        self.verts[1..]
            .iter()
            .all(|w| self.verts[0].vec().proportional(w.vec()))
            || self.verts[0] == self.verts[1]
            || self.verts[1] == self.verts[2]
            || self.verts[0] == self.verts[2]
    }

    pub fn sizes(&self) -> [BigInt; 3] {
        std::array::from_fn(|i| {
            let (x, y) = self.edge(i);
            size_pair(x, y)
        })
    }

    pub fn to_sharbly(&self) -> Option<(Sharbly, i64)> {
        Sharbly::from_rays(self.verts.to_vec())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verts": self.verts.iter().map(|v| v.vec().to_json()).collect::<Vec<_>>(),
            "lifts": self.lifts.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// One chain term with lifts.
#[derive(Clone, Debug)]
pub struct LiftedTerm {
    pub coeff: i64,
    pub tri: LiftedSharbly1,
}

/// Parse the chain JSON form {"field": d, "terms": [{coeff, verts, lifts?}]}.
/// Terms without lifts get default lifts when `default_lifts` is set, and
/// are rejected otherwise.
pub fn chain_from_json(
    params: &FieldParams,
    v: &serde_json::Value,
    default_lifts: bool,
) -> Result<Vec<LiftedTerm>> {
    let d = v
        .get("field")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("chain is missing \"field\"".into()))? as u32;
    if d != params.d() {
        return Err(Error::Parse(format!(
            "chain is over d = {d}, context is d = {}",
            params.d()
        )));
    }
    let terms = v
        .get("terms")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("chain is missing \"terms\"".into()))?;
    let mut out = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let coeff = t
            .get("coeff")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Parse(format!("term {i}: missing integer coeff")))?;
        let verts_json = t
            .get("verts")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse(format!("term {i}: missing verts")))?;
        if verts_json.len() != 3 {
            return Err(Error::Parse(format!(
                "term {i}: a 1-sharbly has 3 vertices, got {}",
                verts_json.len()
            )));
        }
        let mut raw = Vec::new();
        for w in verts_json {
            raw.push(Vec2::from_json(d, w)?);
        }
        let raw: [Vec2; 3] = [raw[0].clone(), raw[1].clone(), raw[2].clone()];
        let tri = match t.get("lifts") {
            Some(ls) => {
                let arr = ls
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("term {i}: lifts must be an array")))?;
                if arr.len() != 3 {
                    return Err(Error::Parse(format!("term {i}: need 3 lifts")));
                }
                let lifts = [
                    Mat2::from_json(d, &arr[0])?,
                    Mat2::from_json(d, &arr[1])?,
                    Mat2::from_json(d, &arr[2])?,
                ];
                LiftedSharbly1::new(params, &raw, lifts)?
            }
            None if default_lifts => LiftedSharbly1::with_default_lifts(params, &raw)?,
            None => {
                return Err(Error::Parse(format!(
                    "term {i}: no lifts given (pass --default-lifts to synthesize them)"
                )))
            }
        };
        out.push(LiftedTerm { coeff, tri });
    }
    Ok(out)
}

pub fn chain_to_json(d: u32, chain: &[LiftedTerm]) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = chain
        .iter()
        .map(|t| {
            let mut obj = t.tri.to_json();
            obj.as_object_mut()
                .unwrap()
                .insert("coeff".into(), serde_json::json!(t.coeff));
            obj
        })
        .collect();
    serde_json::json!({ "field": d, "terms": terms })
}
