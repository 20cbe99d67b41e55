//! Vectors and 2x2 matrices over F, canonical ray representatives, and the
//! GL_2(O) normal form used to make reduction choices Gamma-equivariantly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qfield::{Embedding, FieldElem, FieldParams, Rational};

/// A column vector in F^2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x1: FieldElem,
    pub x2: FieldElem,
}

impl std::fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl Vec2 {
    pub fn new(x1: FieldElem, x2: FieldElem) -> Self {
        assert_eq!(x1.d(), x2.d(), "field mismatch");
        Vec2 { x1, x2 }
    }

    pub fn d(&self) -> u32 {
        self.x1.d()
    }

    pub fn e1(d: u32) -> Self {
        Vec2::new(FieldElem::one(d), FieldElem::zero(d))
    }

    pub fn e2(d: u32) -> Self {
        Vec2::new(FieldElem::zero(d), FieldElem::one(d))
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(self.x1.add(&o.x1), self.x2.add(&o.x2))
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(self.x1.neg(), self.x2.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> Vec2 {
        Vec2::new(self.x1.mul(c), self.x2.mul(c))
    }

    pub fn is_integral(&self) -> bool {
        self.x1.is_integral() && self.x2.is_integral()
    }

    /// x1*w2 - x2*w1; zero iff the vectors are proportional over F.
    pub fn cross(&self, o: &Vec2) -> FieldElem {
        self.x1.mul(&o.x2).sub(&self.x2.mul(&o.x1))
    }

    pub fn proportional(&self, o: &Vec2) -> bool {
        self.cross(o).is_zero()
    }

    /// Exact ray equality R(self) == R(other) for nonzero vectors: they must
    /// be proportional with a factor in Q or Q*sqrt(d).
    pub fn ray_equal(&self, o: &Vec2) -> bool {
        if self.is_zero() || o.is_zero() || !self.proportional(o) {
            return false;
        }
        let c = if !self.x1.is_zero() {
            o.x1.div(&self.x1)
        } else {
            o.x2.div(&self.x2)
        };
        match c {
            Ok(c) => c.a().is_zero() || c.b().is_zero(),
            Err(_) => false,
        }
    }

    pub fn lex_cmp(&self, o: &Vec2) -> Ordering {
        self.x1.lex_cmp(&o.x1).then_with(|| self.x2.lex_cmp(&o.x2))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(vec![self.x1.to_json(), self.x2.to_json()])
    }

    pub fn from_json(d: u32, v: &serde_json::Value) -> Result<Vec2> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("vector must be a 2-array, got {v}")))?;
        if arr.len() != 2 {
            return Err(Error::Parse("vector must have 2 entries".into()));
        }
        Ok(Vec2::new(
            FieldElem::from_json(d, &arr[0])?,
            FieldElem::from_json(d, &arr[1])?,
        ))
    }
}

/// The canonical, content-primitive, sign-fixed representative of a ray R(v).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RayVector {
    v: Vec2,
}

impl std::fmt::Debug for RayVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.v)
    }
}

impl RayVector {
    pub fn vec(&self) -> &Vec2 {
        &self.v
    }

    pub fn into_vec(self) -> Vec2 {
        self.v
    }
}

impl PartialOrd for RayVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RayVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.lex_cmp(&other.v)
    }
}

/// Normalize a nonzero vector to the canonical representative of its ray:
/// clear rational denominators, divide out the content ideal's canonical
/// generator, and fix the sign so the first nonzero coordinate is
/// iota_1-positive.
pub fn ray_normalize(params: &FieldParams, v: &Vec2) -> Result<RayVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut l = BigInt::one();
    for r in [v.x1.a(), v.x1.b(), v.x2.a(), v.x2.b()] {
        l = l.lcm(r.denom());
    }
    let scale = FieldElem::from_rational(v.d(), Rational::from_integer(l));
    let mut w = v.scale(&scale);
    // rational content first (cheap, and keeps the ideal norm small)
    let mut g = BigInt::zero();
    for r in [w.x1.a(), w.x1.b(), w.x2.a(), w.x2.b()] {
        g = g.gcd(r.numer());
    }
    if !g.is_one() {
        let inv = FieldElem::from_rational(v.d(), Rational::new(BigInt::one(), g));
        w = w.scale(&inv);
    }
    let gen = content_generator(params, &w)?;
    if !gen.is_one() {
        w = Vec2::new(w.x1.div(&gen)?, w.x2.div(&gen)?);
        debug_assert!(w.is_integral());
    }
    let lead = if !w.x1.is_zero() { &w.x1 } else { &w.x2 };
    if lead.embedding_sign(Embedding::First) < 0 {
        w = w.neg();
    }
    Ok(RayVector { v: w })
}

pub fn is_content_primitive(params: &FieldParams, v: &Vec2) -> Result<bool> {
    if !v.is_integral() {
        return Ok(false);
    }
    Ok(content_generator(params, v)?.is_one())
}

/// Canonical generator of the content ideal (x1, x2) of an integral vector.
///
/// The ideal equals the Z-module spanned by x1, w*x1, x2, w*x2 in O = Z^2;
/// its Hermite basis gives the ideal norm, and a generator (class number 1)
/// is found by searching the box |iota_i| <= sqrt(lambda * norm), where
/// lambda bounds iota_1(eps).
fn content_generator(params: &FieldParams, v: &Vec2) -> Result<FieldElem> {
    debug_assert!(v.is_integral() && !v.is_zero());
    let d = params.d();
    let coords = |x: &FieldElem| (x.a().to_integer(), x.b().to_integer());
    let (a1, b1) = coords(&v.x1);
    let (a2, b2) = coords(&v.x2);
    let db = |b: &BigInt| BigInt::from(d) * b;
    let mut rows: Vec<(BigInt, BigInt)> = vec![
        (a1.clone(), b1.clone()),
        (db(&b1), a1.clone()),
        (a2.clone(), b2.clone()),
        (db(&b2), a2.clone()),
    ];
    // Hermite reduction of the 4 rows in Z^2
    loop {
        rows.retain(|r| !r.0.is_zero() || !r.1.is_zero());
        let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].0.is_zero()).collect();
        if nz.len() <= 1 {
            break;
        }
        nz.sort_by(|&i, &j| rows[i].0.abs().cmp(&rows[j].0.abs()));
        let (pi, qi) = (nz[0], nz[1]);
        let q = &rows[qi].0 / &rows[pi].0;
        rows[qi] = (
            &rows[qi].0 - &q * &rows[pi].0,
            &rows[qi].1 - &q * &rows[pi].1,
        );
    }
    let pivot = rows
        .iter()
        .find(|r| !r.0.is_zero())
        .cloned()
        .ok_or(Error::ContentSearchFailed)?;
    let mut g2 = BigInt::zero();
    for r in &rows {
        if r.0.is_zero() {
            g2 = g2.gcd(&r.1);
        }
    }
    if g2.is_zero() {
        return Err(Error::ContentSearchFailed);
    }
    let h11 = pivot.0.abs();
    let h12 = if pivot.0.is_negative() {
        -pivot.1.clone()
    } else {
        pivot.1.clone()
    };
    let h22 = g2.abs();
    let norm = &h11 * &h22;
    if norm.is_one() {
        return Ok(FieldElem::one(d));
    }
    // lambda_up: integer upper bound on iota_1(eps)
    let eps = params.eps();
    let isqrt_d = BigInt::from(d).sqrt();
    let lam_num = eps.a().numer() + eps.b().numer() * (&isqrt_d + 1i32) + 1i32;
    let bound2 = &lam_num * &norm;
    let bs = bound2.sqrt() + 1i32;
    let bt = (&bound2 / BigInt::from(d)).sqrt() + 1i32;
    let in_lattice = |s: &BigInt, t: &BigInt| -> bool {
        let (m, r) = s.div_rem(&h11);
        if !r.is_zero() {
            return false;
        }
        let rem = t - &m * &h12;
        (&rem % &h22).is_zero()
    };
    let mut s = -bs.clone();
    while s <= bs {
        let mut t = -bt.clone();
        while t <= bt {
            if !s.is_zero() || !t.is_zero() {
                let n = (&s * &s - BigInt::from(d) * &t * &t).abs();
                if n == norm && in_lattice(&s, &t) {
                    let g = FieldElem::new(
                        d,
                        Rational::from_integer(s.clone()),
                        Rational::from_integer(t.clone()),
                    );
                    let (y, _) = params.canonical_associate(&g)?;
                    return Ok(y);
                }
            }
            t += 1;
        }
        s += 1;
    }
    Err(Error::ContentSearchFailed)
}

/// A 2x2 matrix over F, entries [[a, b], [c, d]].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl std::fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Mat2 {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        assert!(
            a.d() == b.d() && b.d() == c.d() && c.d() == d.d(),
            "field mismatch"
        );
        Mat2 { a, b, c, d }
    }

    pub fn field_d(&self) -> u32 {
        self.a.d()
    }

    pub fn identity(d: u32) -> Self {
        Mat2::new(
            FieldElem::one(d),
            FieldElem::zero(d),
            FieldElem::zero(d),
            FieldElem::one(d),
        )
    }

    pub fn swap(d: u32) -> Self {
        Mat2::new(
            FieldElem::zero(d),
            FieldElem::one(d),
            FieldElem::one(d),
            FieldElem::zero(d),
        )
    }

    pub fn from_cols(c1: &Vec2, c2: &Vec2) -> Self {
        Mat2::new(c1.x1.clone(), c2.x1.clone(), c1.x2.clone(), c2.x2.clone())
    }

    pub fn col(&self, i: usize) -> Vec2 {
        match i {
            1 => Vec2::new(self.a.clone(), self.c.clone()),
            2 => Vec2::new(self.b.clone(), self.d.clone()),
            _ => panic!("column index must be 1 or 2"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        )
    }

    pub fn mul_vec(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            self.a.mul(&v.x1).add(&self.b.mul(&v.x2)),
            self.c.mul(&v.x1).add(&self.d.mul(&v.x2)),
        )
    }

    pub fn det(&self) -> FieldElem {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let i = det.inv()?;
        Ok(Mat2::new(
            self.d.mul(&i),
            self.b.neg().mul(&i),
            self.c.neg().mul(&i),
            self.a.mul(&i),
        ))
    }

    /// Integral entries with unit determinant.
    pub fn is_gl2o(&self) -> bool {
        self.a.is_integral()
            && self.b.is_integral()
            && self.c.is_integral()
            && self.d.is_integral()
            && self.det().is_unit()
    }

    pub fn lex_cmp(&self, o: &Mat2) -> Ordering {
        self.a
            .lex_cmp(&o.a)
            .then_with(|| self.b.lex_cmp(&o.b))
            .then_with(|| self.c.lex_cmp(&o.c))
            .then_with(|| self.d.lex_cmp(&o.d))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(vec![
            serde_json::Value::Array(vec![self.a.to_json(), self.b.to_json()]),
            serde_json::Value::Array(vec![self.c.to_json(), self.d.to_json()]),
        ])
    }

    pub fn from_json(d: u32, v: &serde_json::Value) -> Result<Mat2> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("matrix must be a 2x2 array, got {v}")))?;
        if rows.len() != 2 {
            return Err(Error::Parse("matrix must have 2 rows".into()));
        }
        let row = |r: &serde_json::Value| -> Result<(FieldElem, FieldElem)> {
            let a = r
                .as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
            if a.len() != 2 {
                return Err(Error::Parse("matrix row must have 2 entries".into()));
            }
            Ok((
                FieldElem::from_json(d, &a[0])?,
                FieldElem::from_json(d, &a[1])?,
            ))
        };
        let (a, b) = row(&rows[0])?;
        let (c, dd) = row(&rows[1])?;
        Ok(Mat2::new(a, b, c, dd))
    }
}

/// Euclidean descent step: returns gamma' with gamma'*M upper-triangularizing
/// progress; loops until the pivot below the diagonal vanishes.
fn clear_lower(params: &FieldParams, m: &mut Mat2, g: &mut Mat2) -> Result<()> {
    let d = params.d();
    let swap = Mat2::swap(d);
    while !m.c.is_zero() {
        if m.a.is_zero() {
            *m = swap.mul(m);
            *g = swap.mul(g);
            continue;
        }
        let alpha = params.nearest_integer(&m.a.div(&m.c)?);
        let shear = Mat2::new(
            FieldElem::one(d),
            alpha.neg(),
            FieldElem::zero(d),
            FieldElem::one(d),
        );
        let step = swap.mul(&shear);
        *m = step.mul(m);
        *g = step.mul(g);
    }
    Ok(())
}

/// Normal form of a nonzero matrix: the unique representative M0 of the left
/// coset GL_2(O)*M that is upper triangular with diagonal entries in Omega_*
/// and the off-diagonal entry reduced into Omega_+(d); returns (M0, gamma)
/// with gamma*M = M0.
pub fn normal_form(params: &FieldParams, mat: &Mat2) -> Result<(Mat2, Mat2)> {
    if mat.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let d = params.d();
    let mut m = mat.clone();
    let mut g = Mat2::identity(d);
    if m.a.is_zero() && m.c.is_zero() {
        // first column zero: reduce the second column to (b, 0)
        let swap = Mat2::swap(d);
        while !m.d.is_zero() {
            if m.b.is_zero() {
                m = swap.mul(&m);
                g = swap.mul(&g);
                continue;
            }
            let alpha = params.nearest_integer(&m.b.div(&m.d)?);
            let shear = Mat2::new(
                FieldElem::one(d),
                alpha.neg(),
                FieldElem::zero(d),
                FieldElem::one(d),
            );
            let step = swap.mul(&shear);
            m = step.mul(&m);
            g = step.mul(&g);
        }
        let (_, u) = params.canonical_associate(&m.b)?;
        let diag = Mat2::new(u, FieldElem::zero(d), FieldElem::zero(d), FieldElem::one(d));
        m = diag.mul(&m);
        g = diag.mul(&g);
    } else {
        clear_lower(params, &mut m, &mut g)?;
        if m.d.is_zero() {
            let (_, u) = params.canonical_associate(&m.a)?;
            let diag = Mat2::new(u, FieldElem::zero(d), FieldElem::zero(d), FieldElem::one(d));
            m = diag.mul(&m);
            g = diag.mul(&g);
        } else {
            let (_, ua) = params.canonical_associate(&m.a)?;
            let (_, ud) = params.canonical_associate(&m.d)?;
            let diag = Mat2::new(ua, FieldElem::zero(d), FieldElem::zero(d), ud);
            m = diag.mul(&m);
            g = diag.mul(&g);
            let b2 = params.mod_translate(&m.b, &m.d)?;
            let beta = m.b.sub(&b2).div(&m.d)?;
            debug_assert!(beta.is_integral());
            let shear = Mat2::new(
                FieldElem::one(d),
                beta.neg(),
                FieldElem::zero(d),
                FieldElem::one(d),
            );
            m = shear.mul(&m);
            g = shear.mul(&g);
        }
    }
    debug_assert!(g.is_gl2o());
    debug_assert_eq!(g.mul(mat), m);
    debug_assert!(is_normal_form(params, &m));
    Ok((m, g))
}

/// Shape test for the three normal forms.
pub fn is_normal_form(params: &FieldParams, m: &Mat2) -> bool {
    if !m.c.is_zero() {
        return false;
    }
    if m.a.is_zero() && m.d.is_zero() {
        return !m.b.is_zero() && params.in_omega_star(&m.b);
    }
    if m.d.is_zero() {
        return params.in_omega_star(&m.a);
    }
    if m.a.is_zero() {
        return false;
    }
    params.in_omega_star(&m.a)
        && params.in_omega_star(&m.d)
        && params.in_omega_plus(&m.b, &m.d).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> FieldParams {
        FieldParams::sqrt2()
    }

    fn fe(a: i64, b: i64) -> FieldElem {
        FieldElem::from_integers(2, a, b)
    }

    fn vec(a1: i64, b1: i64, a2: i64, b2: i64) -> Vec2 {
        Vec2::new(fe(a1, b1), fe(a2, b2))
    }

    #[test]
    fn ray_normalize_examples() {
        let p = p2();
        // rational content 2
        let r = ray_normalize(&p, &vec(2, 0, 0, 0)).unwrap();
        assert_eq!(r.vec(), &Vec2::e1(2));
        // sign flip: (-1-w, -w) -> (1+w, w)
        let r = ray_normalize(&p, &vec(-1, -1, 0, -1)).unwrap();
        assert_eq!(r.vec(), &vec(1, 1, 0, 1));
        // content sqrt(2): (w, w) -> (1, 1)
        let r = ray_normalize(&p, &vec(0, 1, 0, 1)).unwrap();
        assert_eq!(r.vec(), &vec(1, 0, 1, 0));
        assert!(ray_normalize(&p, &vec(0, 0, 0, 0)).is_err());
        // idempotent, and R(-v) = R(v)
        let v = vec(3, 1, 0, 1);
        let r = ray_normalize(&p, &v).unwrap();
        assert_eq!(ray_normalize(&p, r.vec()).unwrap(), r);
        assert_eq!(ray_normalize(&p, &v.neg()).unwrap(), r);
    }

    #[test]
    fn content_units_are_dropped() {
        let p = p2();
        // (0, -2w-3): content ideal is generated by the unit eps^2
        let v = vec(0, 0, -3, -2);
        let r = ray_normalize(&p, &v).unwrap();
        assert_eq!(r.vec(), &vec(0, 0, 3, 2));
    }

    #[test]
    fn content_general_generator() {
        let p = p2();
        // (7w, 2w - 6) has content ideal of norm 14 with canonical
        // generator 4 + w; the quotient is (-1 + 2w, -2 + w)
        let v = vec(0, 7, -6, 2);
        let r = ray_normalize(&p, &v).unwrap();
        assert_eq!(r.vec(), &vec(-1, 2, -2, 1));
        let c = FieldElem::from_integers(2, 4, 1);
        assert_eq!(r.vec().scale(&c), v);
        assert!(!is_content_primitive(&p, &v).unwrap());
        assert!(is_content_primitive(&p, r.vec()).unwrap());
    }

    #[test]
    fn ray_equality() {
        let p = p2();
        let v = vec(1, 0, 1, 0);
        assert!(v.ray_equal(&v.neg()));
        assert!(v.ray_equal(&v.scale(&fe(0, 1)))); // sqrt(2) scaling keeps the ray
        assert!(!v.ray_equal(&v.scale(&fe(1, 1)))); // eps scaling does not
        let w = ray_normalize(&p, &v.scale(&fe(1, 1))).unwrap();
        assert_ne!(w.vec(), &v); // distinct canonical representatives
    }

    #[test]
    fn normal_form_examples() {
        let p = p2();
        let id = Mat2::identity(2);
        let (m0, g) = normal_form(&p, &id).unwrap();
        assert_eq!(m0, id);
        assert_eq!(g, id);

        let sw = Mat2::swap(2);
        let (m0, g) = normal_form(&p, &sw).unwrap();
        assert_eq!(m0, id);
        assert_eq!(g, sw);

        // diag(eps, 1): coset representative is the identity
        let m = Mat2::new(fe(1, 1), fe(0, 0), fe(0, 0), fe(1, 0));
        let (m0, g) = normal_form(&p, &m).unwrap();
        assert_eq!(m0, id);
        assert_eq!(g.mul(&m), m0);
        assert!(is_normal_form(&p, &m0));

        assert!(normal_form(&p, &Mat2::new(fe(0, 0), fe(0, 0), fe(0, 0), fe(0, 0))).is_err());
    }

    #[test]
    fn is_normal_form_examples() {
        let p = p2();
        assert!(is_normal_form(&p, &Mat2::identity(2)));
        assert!(!is_normal_form(
            &p,
            &Mat2::new(fe(0, 0), fe(0, 0), fe(1, 0), fe(0, 0))
        ));
        // [[1, 5], [0, 1]]: 5 is not in Omega_+(1) = [0,1)^2
        assert!(!is_normal_form(
            &p,
            &Mat2::new(fe(1, 0), fe(5, 0), fe(0, 0), fe(1, 0))
        ));
        // shape 1 and shape 2
        assert!(is_normal_form(
            &p,
            &Mat2::new(fe(0, 0), fe(1, 0), fe(0, 0), fe(0, 0))
        ));
        assert!(is_normal_form(
            &p,
            &Mat2::new(fe(1, 0), fe(7, 3), fe(0, 0), fe(0, 0))
        ));
    }

    #[test]
    fn normal_form_rank_one() {
        let p = p2();
        // rank-1 matrix with nonzero first column
        let m = Mat2::new(fe(2, 0), fe(4, 0), fe(1, 0), fe(2, 0));
        let (m0, g) = normal_form(&p, &m).unwrap();
        assert!(is_normal_form(&p, &m0));
        assert_eq!(g.mul(&m), m0);
        assert!(m0.c.is_zero() && m0.d.is_zero());
        // zero first column
        let m = Mat2::new(fe(0, 0), fe(3, 0), fe(0, 0), fe(1, 1));
        let (m0, g) = normal_form(&p, &m).unwrap();
        assert!(is_normal_form(&p, &m0));
        assert_eq!(g.mul(&m), m0);
        assert!(m0.a.is_zero() && m0.c.is_zero() && m0.d.is_zero());
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = Mat2::new(fe(1, 2), fe(-3, 0), fe(0, 0), fe(5, -1));
        let j = m.to_json();
        assert_eq!(Mat2::from_json(2, &j).unwrap(), m);
    }
}
