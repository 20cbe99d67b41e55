//! The cone geometry: points of V x V as symmetric pairs over F, the map L,
//! the trace pairing, exact minimal-vector enumeration, Voronoi cone
//! containment and minimal faces, and the shipped Q(sqrt 2) cone data.

mod enumerate;
mod facets;
mod walk;

pub use enumerate::min_vectors;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::gl2of::{ray_normalize, Mat2, RayVector, Vec2};
use crate::linalg;
use crate::qfield::{FieldElem, FieldParams, Rational};

use facets::{dot, facet_normals, Q6};
pub(crate) use walk::RyshkovVertex;

/// A point of V x V: the pair (iota_1(A), iota_2(A)) of the symmetric matrix
/// A = [[a, c], [c, b]] over F.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPair {
    a: FieldElem,
    b: FieldElem,
    c: FieldElem,
}

impl std::fmt::Debug for SymPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.c, self.c, self.b)
    }
}

impl SymPair {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem) -> Self {
        assert!(a.d() == b.d() && b.d() == c.d(), "field mismatch");
        SymPair { a, b, c }
    }

    pub fn zero(d: u32) -> Self {
        SymPair::new(FieldElem::zero(d), FieldElem::zero(d), FieldElem::zero(d))
    }

    pub fn identity(d: u32) -> Self {
        SymPair::new(FieldElem::one(d), FieldElem::one(d), FieldElem::zero(d))
    }

    pub fn d(&self) -> u32 {
        self.a.d()
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    pub fn b(&self) -> &FieldElem {
        &self.b
    }

    pub fn c(&self) -> &FieldElem {
        &self.c
    }

    pub fn add(&self, o: &SymPair) -> SymPair {
        SymPair::new(self.a.add(&o.a), self.b.add(&o.b), self.c.add(&o.c))
    }

    pub fn scale(&self, r: &Rational) -> SymPair {
        SymPair::new(self.a.scale(r), self.b.scale(r), self.c.scale(r))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn det(&self) -> FieldElem {
        self.a.mul(&self.b).sub(&self.c.mul(&self.c))
    }

    /// Positive definite in both embeddings.
    pub fn is_positive_definite(&self) -> bool {
        self.a.is_totally_positive() && self.det().is_totally_positive()
    }

    /// Positive semidefinite in both embeddings.
    pub fn is_positive_semidefinite(&self) -> bool {
        self.a.is_totally_nonnegative()
            && self.b.is_totally_nonnegative()
            && self.det().is_totally_nonnegative()
    }

    /// Membership in the lattice Lambda (all entries integral).
    pub fn in_lambda(&self) -> bool {
        self.a.is_integral() && self.b.is_integral() && self.c.is_integral()
    }

    /// The form action g . A = g A g^T, transported to pairs.
    pub fn act(&self, g: &Mat2) -> SymPair {
        let m = Mat2::new(
            self.a.clone(),
            self.c.clone(),
            self.c.clone(),
            self.b.clone(),
        );
        let r = g.mul(&m).mul(&g.transpose());
        SymPair::new(r.a.clone(), r.d.clone(), r.b.clone())
    }

    /// Rational coordinates in Q^6: (a.a, a.b, b.a, b.b, c.a, c.b).
    pub fn q6(&self) -> Q6 {
        [
            self.a.a().clone(),
            self.a.b().clone(),
            self.b.a().clone(),
            self.b.b().clone(),
            self.c.a().clone(),
            self.c.b().clone(),
        ]
    }

    pub fn from_q6(d: u32, t: &Q6) -> SymPair {
        SymPair::new(
            FieldElem::new(d, t[0].clone(), t[1].clone()),
            FieldElem::new(d, t[2].clone(), t[3].clone()),
            FieldElem::new(d, t[4].clone(), t[5].clone()),
        )
    }

    /// Scale-normalized integer coordinates: the primitive point on the ray.
    pub fn primitive_key(&self) -> [BigInt; 6] {
        let t = self.q6();
        let mut l = BigInt::one();
        for r in &t {
            l = l.lcm(r.denom());
        }
        let ints: Vec<BigInt> = t
            .iter()
            .map(|r| (r * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        std::array::from_fn(|i| &ints[i] / &g)
    }

    pub fn primitive_scaled(&self, d: u32) -> SymPair {
        let k = self.primitive_key();
        let t: Q6 = std::array::from_fn(|i| Rational::from_integer(k[i].clone()));
        SymPair::from_q6(d, &t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
        })
    }

    pub fn from_json(d: u32, v: &serde_json::Value) -> Result<SymPair> {
        let get = |k: &str| -> Result<FieldElem> {
            FieldElem::from_json(
                d,
                v.get(k)
                    .ok_or_else(|| Error::Parse(format!("point is missing field {k:?}")))?,
            )
        };
        Ok(SymPair::new(get("a")?, get("b")?, get("c")?))
    }
}

/// The map L: O^2 -> closure(C), L(v) = v * v^T through both embeddings.
pub fn l_of(v: &Vec2) -> SymPair {
    SymPair::new(v.x1.mul(&v.x1), v.x2.mul(&v.x2), v.x1.mul(&v.x2))
}

/// L applied to a nonzero vector, with the spec's error contract.
pub fn l_checked(v: &Vec2) -> Result<SymPair> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(l_of(v))
}

/// Trace pairing <phi, A> = Tr_{F/Q}(a_phi a_A + 2 c_phi c_A + b_phi b_A).
pub fn pairing(phi: &SymPair, a: &SymPair) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let s = phi
        .a
        .mul(&a.a)
        .add(&phi.b.mul(&a.b))
        .add(&phi.c.mul(&a.c).scale(&two));
    s.trace()
}

/// Trace-pairing weights in Q^6 coordinates.
pub(crate) fn weights(d: u32) -> [Rational; 6] {
    let r = |n: u32| Rational::from_integer(BigInt::from(n));
    [r(2), r(2 * d), r(2), r(2 * d), r(4), r(4 * d)]
}

/// Sum of L over canonical representatives; the barycenter point of a
/// vertex set.
pub fn barycenter(rays: &[RayVector]) -> SymPair {
    let d = rays[0].vec().d();
    let mut s = SymPair::zero(d);
    for r in rays {
        s = s.add(&l_of(r.vec()));
    }
    s
}

/// A cone of the Voronoi fan: generators, dimension, exact facet normals.
#[derive(Clone, Debug)]
pub struct VoronoiCone {
    pub generators: Vec<RayVector>,
    pub dim: usize,
    pub facet_normals: Vec<[BigInt; 6]>,
}

impl VoronoiCone {
    fn build(mut generators: Vec<RayVector>) -> VoronoiCone {
        generators.sort();
        generators.dedup();
        let pts: Vec<Q6> = generators.iter().map(|g| l_of(g.vec()).q6()).collect();
        let rows: Vec<linalg::Row> = pts.iter().map(|p| p.to_vec()).collect();
        let dim = linalg::rank(&rows);
        let facet_normals = facet_normals(&pts);
        VoronoiCone {
            generators,
            dim,
            facet_normals,
        }
    }

    pub fn has_generator(&self, r: &RayVector) -> bool {
        self.generators.binary_search(r).is_ok()
    }

    /// Exact membership: p in span(generators) and all facet values >= 0.
    pub fn contains(&self, p: &SymPair) -> bool {
        let p6 = p.q6();
        if self.facet_normals.iter().any(|n| dot(n, &p6).is_negative()) {
            return false;
        }
        let mut rows: Vec<linalg::Row> = self
            .generators
            .iter()
            .map(|g| l_of(g.vec()).q6().to_vec())
            .collect();
        let k = linalg::rank(&rows);
        rows.push(p6.to_vec());
        linalg::rank(&rows) == k
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "generators": self
                .generators
                .iter()
                .map(|g| g.vec().to_json())
                .collect::<Vec<_>>(),
        })
    }
}

/// One shipped top cone: a name and its generator list.
#[derive(Clone, Debug)]
pub struct TopCone {
    pub name: String,
    pub cone: VoronoiCone,
    /// The facet support form: the perfect pair with <dual, L(g)> = 1 on all
    /// generators; its minimal vectors are exactly the generators.
    pub dual: SymPair,
}

/// Cone data for one field, as loaded from the data file.
#[derive(Clone, Debug)]
pub struct FieldConeData {
    pub d: u32,
    pub top_cones: Vec<TopCone>,
}

type Key6 = [BigInt; 6];

#[derive(Default)]
struct Caches {
    vertices: Mutex<HashMap<Key6, Arc<RyshkovVertex>>>,
    top_of: Mutex<HashMap<Key6, Arc<RyshkovVertex>>>,
    cones: Mutex<HashMap<Key6, Arc<VoronoiCone>>>,
    reducing: Mutex<HashMap<Mat2Key, Vec2>>,
    // warm start for minimal-face walks; the extracted face is independent
    // of the arrival vertex, so this affects speed only
    hint: Mutex<Option<SymPair>>,
}

type Mat2Key = Mat2;

/// Field parameters plus the cone data and the memoization caches. All
/// cached entries behave as pure functions of their keys.
pub struct ConeContext {
    params: FieldParams,
    data: FieldConeData,
    caches: Caches,
}

static QSQRT2_JSON: &str = include_str!("../../data/qsqrt2_cones.json");
static QSQRT2: Lazy<ConeContext> = Lazy::new(|| {
    ConeContext::load(FieldParams::sqrt2(), QSQRT2_JSON).expect("shipped Q(sqrt 2) cone data")
});

impl ConeContext {
    /// The shipped Q(sqrt 2) context, loaded once.
    pub fn qsqrt2() -> &'static ConeContext {
        &QSQRT2
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn data(&self) -> &FieldConeData {
        &self.data
    }

    /// Load and validate cone data from its JSON form. Validation solves for
    /// each facet's support form and checks by exact enumeration that its
    /// minimal vectors are precisely the generator list at minimum 1.
    pub fn load(params: FieldParams, json: &str) -> Result<ConeContext> {
        let v: serde_json::Value =
            serde_json::from_str(json).map_err(|e| Error::InvalidConeData(e.to_string()))?;
        let d = v
            .get("d")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::InvalidConeData("missing field d".into()))?
            as u32;
        if d != params.d() {
            return Err(Error::InvalidConeData(format!(
                "cone data is for d = {d}, parameters are for d = {}",
                params.d()
            )));
        }
        let cones = v
            .get("top_cones")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::InvalidConeData("missing top_cones".into()))?;
        if cones.is_empty() {
            return Err(Error::InvalidConeData("no top cones".into()));
        }
        let mut top_cones = Vec::new();
        for tc in cones {
            let name = tc
                .get("name")
                .and_then(|x| x.as_str())
                .unwrap_or("unnamed")
                .to_string();
            let gens_json = tc
                .get("generators")
                .and_then(|x| x.as_array())
                .ok_or_else(|| Error::InvalidConeData(format!("cone {name}: no generators")))?;
            let mut gens = Vec::new();
            for g in gens_json {
                let vec = Vec2::from_json(d, g).map_err(|e| {
                    Error::InvalidConeData(format!("cone {name}: bad generator: {e}"))
                })?;
                gens.push(ray_normalize(&params, &vec)?);
            }
            gens.sort();
            gens.dedup();
            let cone = VoronoiCone::build(gens);
            if cone.dim != 6 {
                return Err(Error::InvalidConeData(format!(
                    "cone {name} has rank {} generators, expected 6",
                    cone.dim
                )));
            }
            let dual = support_form(&params, &cone.generators).ok_or_else(|| {
                Error::InvalidConeData(format!("cone {name}: generators lie on no hyperplane"))
            })?;
            if !dual.is_positive_definite() {
                return Err(Error::InvalidConeData(format!(
                    "cone {name}: support form is not positive definite"
                )));
            }
            let (m, s) = min_vectors(&params, &dual)?;
            if !m.is_one() || s != cone.generators {
                return Err(Error::InvalidConeData(format!(
                    "cone {name}: generators are not the minimal vectors of the support form"
                )));
            }
            top_cones.push(TopCone { name, cone, dual });
        }
        Ok(ConeContext {
            params,
            data: FieldConeData { d, top_cones },
            caches: Caches::default(),
        })
    }

    /// Ryshkov vertex (perfect pair) whose cone contains the definite point.
    pub(crate) fn vertex_for(&self, p: &SymPair) -> Result<Arc<RyshkovVertex>> {
        let key = p.primitive_key();
        if let Some(v) = self.caches.top_of.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let start = self.data.top_cones[0].dual.clone();
        let v = walk::walk(self, p, &start)?;
        self.caches.top_of.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub(crate) fn vertex_data(&self, psi: &SymPair) -> Result<Arc<RyshkovVertex>> {
        let key = psi.primitive_key();
        if let Some(v) = self.caches.vertices.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(walk::make_vertex(self, psi)?);
        self.caches.vertices.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub(crate) fn reducing_cache(&self) -> &Mutex<HashMap<Mat2, Vec2>> {
        &self.caches.reducing
    }

    /// The top cone (as a Ryshkov vertex) containing a definite point; the
    /// deterministic choice used for central points.
    pub fn containing_top_cone(&self, p: &SymPair) -> Result<Arc<RyshkovVertex>> {
        if !p.is_positive_definite() {
            return Err(Error::NotDefinite);
        }
        self.vertex_for(&p.primitive_scaled(self.data.d))
    }

    /// The minimal cone of the Voronoi fan containing a nonzero positive
    /// semidefinite rational point.
    pub fn containing_cone(&self, p: &SymPair) -> Result<Arc<VoronoiCone>> {
        if p.is_zero() || !p.is_positive_semidefinite() {
            return Err(Error::NotSemidefinite);
        }
        let d = self.data.d;
        let pk = p.primitive_scaled(d);
        let key = pk.primitive_key();
        if let Some(c) = self.caches.cones.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let hint = self.caches.hint.lock().unwrap().clone();
        let start0 = hint.unwrap_or_else(|| self.data.top_cones[0].dual.clone());
        let cone = if pk.is_positive_definite() {
            let vertex = walk::walk(self, &pk, &start0)?;
            *self.caches.hint.lock().unwrap() = Some(vertex.psi.clone());
            extract_face(&vertex, &pk).ok_or(Error::ConeLocationFailed)?
        } else {
            // boundary point: perturb toward the identity pair, stabilize,
            // then verify membership exactly
            let mut t = Rational::one();
            let mut prev: Option<Key6> = None;
            let mut start = start0;
            let mut found = None;
            for _ in 0..64 {
                let pt = pk.add(&SymPair::identity(d).scale(&t));
                debug_assert!(pt.is_positive_definite());
                let vertex = walk::walk(self, &pt.primitive_scaled(d), &start)?;
                start = vertex.psi.clone();
                let vkey = vertex.psi.primitive_key();
                if prev.as_ref() == Some(&vkey) {
                    if let Some(face) = extract_face(&vertex, &pk) {
                        found = Some(face);
                        break;
                    }
                }
                prev = Some(vkey);
                t /= Rational::from_integer(BigInt::from(2));
            }
            *self.caches.hint.lock().unwrap() = Some(start);
            found.ok_or(Error::ConeLocationFailed)?
        };
        // postcondition self-check: the point lies in the returned cone
        if !cone.contains(&pk) {
            return Err(Error::ConeLocationFailed);
        }
        let arc = Arc::new(cone);
        self.caches.cones.lock().unwrap().insert(key, arc.clone());
        Ok(arc)
    }

    /// True iff the rays are a subset of the vertex set of one Voronoi cone.
    pub fn is_reduced_set(&self, rays: &[RayVector]) -> Result<bool> {
        assert!(!rays.is_empty(), "empty vertex set");
        if rays.iter().all(|r| r == &rays[0]) {
            return Ok(true);
        }
        let cone = self.containing_cone(&barycenter(rays))?;
        Ok(rays.iter().all(|r| cone.has_generator(r)))
    }
}

/// Rational form with <phi, L(g)> = 1 for every generator, if one exists.
fn support_form(params: &FieldParams, gens: &[RayVector]) -> Option<SymPair> {
    let d = params.d();
    let w = weights(d);
    let rows: Vec<linalg::Row> = gens
        .iter()
        .map(|g| {
            let p = l_of(g.vec()).q6();
            (0..6).map(|i| &w[i] * &p[i]).collect()
        })
        .collect();
    let rhs = vec![Rational::one(); gens.len()];
    let x = linalg::solve(&rows, &rhs)?;
    let q: Q6 = std::array::from_fn(|i| x[i].clone());
    Some(SymPair::from_q6(d, &q))
}

/// Generators of the minimal face of the vertex's cone containing p, or None
/// if p is outside the cone or outside the face's span.
fn extract_face(vertex: &RyshkovVertex, p: &SymPair) -> Option<VoronoiCone> {
    let p6 = p.q6();
    let vals: Vec<Rational> = vertex.facets.iter().map(|n| dot(n, &p6)).collect();
    if vals.iter().any(|v| v.is_negative()) {
        return None;
    }
    let tight: Vec<&[BigInt; 6]> = vertex
        .facets
        .iter()
        .zip(&vals)
        .filter(|(_, v)| v.is_zero())
        .map(|(n, _)| n)
        .collect();
    let gens: Vec<RayVector> = vertex
        .gens
        .iter()
        .zip(&vertex.pts)
        .filter(|(_, pt)| tight.iter().all(|n| dot(n, pt).is_zero()))
        .map(|(g, _)| g.clone())
        .collect();
    if gens.is_empty() {
        return None;
    }
    let mut rows: Vec<linalg::Row> = gens.iter().map(|g| l_of(g.vec()).q6().to_vec()).collect();
    let k = linalg::rank(&rows);
    rows.push(p6.to_vec());
    if linalg::rank(&rows) != k {
        return None;
    }
    Some(VoronoiCone::build(gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> &'static ConeContext {
        ConeContext::qsqrt2()
    }

    fn fe(a: i64, b: i64) -> FieldElem {
        FieldElem::from_integers(2, a, b)
    }

    fn vec(a1: i64, b1: i64, a2: i64, b2: i64) -> Vec2 {
        Vec2::new(fe(a1, b1), fe(a2, b2))
    }

    fn ray(a1: i64, b1: i64, a2: i64, b2: i64) -> RayVector {
        ray_normalize(ctx().params(), &vec(a1, b1, a2, b2)).unwrap()
    }

    #[test]
    fn l_map_examples() {
        let e1 = Vec2::e1(2);
        let p = l_of(&e1);
        assert_eq!(p, SymPair::new(fe(1, 0), fe(0, 0), fe(0, 0)));
        let p = l_of(&vec(1, 0, 1, 0));
        assert_eq!(p, SymPair::new(fe(1, 0), fe(1, 0), fe(1, 0)));
        // (1 - sqrt2)^2 = 3 - 2 sqrt2
        let p = l_of(&vec(1, -1, 0, 0));
        assert_eq!(p, SymPair::new(fe(3, -2), fe(0, 0), fe(0, 0)));
        assert!(l_checked(&vec(0, 0, 0, 0)).is_err());
    }

    #[test]
    fn pairing_examples() {
        let two = Rational::from_integer(BigInt::from(2));
        let id = SymPair::identity(2);
        assert_eq!(pairing(&id, &l_of(&Vec2::e1(2))), two);
        assert_eq!(
            pairing(&l_of(&Vec2::e1(2)), &l_of(&Vec2::e2(2))),
            Rational::zero()
        );
        // <L(w), L(v)> = Tr((w . v)^2): orthogonal pair
        let p = pairing(&l_of(&vec(1, 0, 1, 0)), &l_of(&vec(1, 0, -1, 0)));
        assert_eq!(p, Rational::zero());
        // symmetry
        let x = l_of(&vec(1, 1, 0, 1));
        let y = l_of(&vec(2, 0, 1, -1));
        assert_eq!(pairing(&x, &y), pairing(&y, &x));
    }

    #[test]
    fn min_vectors_identity_pair() {
        let (m, s) = min_vectors(ctx().params(), &SymPair::identity(2)).unwrap();
        assert_eq!(m, Rational::from_integer(BigInt::from(2)));
        assert_eq!(s, vec![ray(0, 0, 1, 0), ray(1, 0, 0, 0)]);
    }

    #[test]
    fn min_vectors_rejects_indefinite() {
        let p = SymPair::new(fe(1, 0), fe(-1, 0), fe(0, 0));
        assert!(min_vectors(ctx().params(), &p).is_err());
    }

    #[test]
    fn data_valid_and_duals_certify_facets() {
        let c = ctx();
        assert_eq!(c.data().top_cones.len(), 2);
        let a0 = &c.data().top_cones[0];
        let a1 = &c.data().top_cones[1];
        assert_eq!(a0.cone.generators.len(), 6);
        assert_eq!(a1.cone.generators.len(), 12);
        assert_eq!(a0.cone.dim, 6);
        assert_eq!(a1.cone.dim, 6);
    }

    #[test]
    fn containing_cone_examples() {
        let c = ctx();
        // a vertex ray is its own minimal cone
        let cone = c.containing_cone(&l_of(&Vec2::e1(2))).unwrap();
        assert_eq!(cone.dim, 1);
        assert_eq!(cone.generators, vec![ray(1, 0, 0, 0)]);
        // L(e1) + L(e2) lies in the 2-dimensional cone {e1, e2}
        let p = l_of(&Vec2::e1(2)).add(&l_of(&Vec2::e2(2)));
        let cone = c.containing_cone(&p).unwrap();
        assert_eq!(cone.dim, 2);
        assert_eq!(cone.generators, vec![ray(0, 0, 1, 0), ray(1, 0, 0, 0)]);
        // barycenter of {e1, e2, e1 - e2}: the 3-dimensional cone itself
        let rays = [ray(1, 0, 0, 0), ray(0, 0, 1, 0), ray(1, 0, -1, 0)];
        let cone = c.containing_cone(&barycenter(&rays)).unwrap();
        assert_eq!(cone.dim, 3);
        let mut want: Vec<RayVector> = rays.to_vec();
        want.sort();
        assert_eq!(cone.generators, want);
    }

    #[test]
    fn containing_cone_rejects_bad_points() {
        let c = ctx();
        assert!(c.containing_cone(&SymPair::zero(2)).is_err());
        let indef = SymPair::new(fe(1, 0), fe(-2, 0), fe(0, 0));
        assert!(c.containing_cone(&indef).is_err());
    }

    #[test]
    fn is_reduced_set_examples() {
        let c = ctx();
        assert!(c
            .is_reduced_set(&[ray(1, 0, 0, 0), ray(0, 0, 1, 0)])
            .unwrap());
        // the A0 vertex set is reduced
        let a0 = c.data().top_cones[0].cone.generators.clone();
        assert!(c.is_reduced_set(&a0).unwrap());
        // {e1, eps*e1} spans a boundary 2-cone piece; {e1, eps^2 e1} does not
        let e1 = ray(1, 0, 0, 0);
        let eps_e1 = ray(1, 1, 0, 0);
        let eps2_e1 = ray(3, 2, 0, 0);
        assert!(c.is_reduced_set(&[e1.clone(), eps_e1.clone()]).unwrap());
        assert!(!c.is_reduced_set(&[e1, eps2_e1]).unwrap());
        assert!(c.is_reduced_set(&[eps_e1.clone(), eps_e1]).unwrap());
    }
}
