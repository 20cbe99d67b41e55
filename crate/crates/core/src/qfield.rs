//! Exact arithmetic in the real quadratic field F = Q(sqrt(d)) with ring of
//! integers O = Z[sqrt(d)], for squarefree d = 2, 3 (mod 4).
//!
//! Elements are stored as exact rational pairs a + b*sqrt(d). Both real
//! embeddings, the field norm, unit-orbit representatives and euclidean
//! rounding are computed with no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Which real embedding: iota_1 sends sqrt(d) to +sqrt(d), iota_2 to -sqrt(d).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    First,
    Second,
}

/// An element a + b*sqrt(d) of Q(sqrt(d)), with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    d: u32,
    a: Rational,
    b: Rational,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FieldElem {
    pub fn new(d: u32, a: Rational, b: Rational) -> Self {
        FieldElem { d, a, b }
    }

    pub fn from_integers(d: u32, a: i64, b: i64) -> Self {
        FieldElem::new(d, rat(a), rat(b))
    }

    pub fn zero(d: u32) -> Self {
        FieldElem::from_integers(d, 0, 0)
    }

    pub fn one(d: u32) -> Self {
        FieldElem::from_integers(d, 1, 0)
    }

    pub fn sqrt_d(d: u32) -> Self {
        FieldElem::from_integers(d, 0, 1)
    }

    pub fn from_rational(d: u32, a: Rational) -> Self {
        FieldElem::new(d, a, Rational::zero())
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True iff the element lies in O = Z[sqrt(d)].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &FieldElem) {
        assert_eq!(self.d, other.d, "field mismatch");
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem::new(self.d, &self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        FieldElem::new(self.d, &self.a - &o.a, &self.b - &o.b)
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem::new(self.d, -self.a.clone(), -self.b.clone())
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        self.check(o);
        let d = rat(self.d as i64);
        FieldElem::new(
            self.d,
            &self.a * &o.a + &(&self.b * &o.b) * &d,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    pub fn scale(&self, r: &Rational) -> FieldElem {
        FieldElem::new(self.d, &self.a * r, &self.b * r)
    }

    /// Galois conjugate a - b*sqrt(d).
    pub fn conj(&self) -> FieldElem {
        FieldElem::new(self.d, self.a.clone(), -self.b.clone())
    }

    /// Signed field norm a^2 - d*b^2, an exact rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &(&self.b * &self.b) * &rat(self.d as i64)
    }

    /// |Norm_{F/Q}(x)|, the absolute field norm.
    pub fn norm_abs(&self) -> Rational {
        self.norm().abs()
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(FieldElem::new(self.d, &self.a / &n, -(&self.b / &n)))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&o.inv()?))
    }

    /// Exact sign of the chosen real embedding: -1, 0 or +1.
    pub fn embedding_sign(&self, which: Embedding) -> i32 {
        let b = match which {
            Embedding::First => self.b.clone(),
            Embedding::Second => -self.b.clone(),
        };
        let a = &self.a;
        if a.is_zero() && b.is_zero() {
            return 0;
        }
        if b.is_zero() {
            return if a.is_positive() { 1 } else { -1 };
        }
        if a.is_zero() {
            return if b.is_positive() { 1 } else { -1 };
        }
        let sa = a.is_positive();
        let sb = b.is_positive();
        if sa && sb {
            return 1;
        }
        if !sa && !sb {
            return -1;
        }
        // opposite signs: compare a^2 against d*b^2
        let t = a * a - &(&b * &b) * &rat(self.d as i64);
        match t.cmp(&Rational::zero()) {
            Ordering::Greater => {
                if sa {
                    1
                } else {
                    -1
                }
            }
            Ordering::Less => {
                if sb {
                    1
                } else {
                    -1
                }
            }
            Ordering::Equal => 0, // unreachable for squarefree d and a, b != 0
        }
    }

    pub fn is_totally_positive(&self) -> bool {
        self.embedding_sign(Embedding::First) > 0 && self.embedding_sign(Embedding::Second) > 0
    }

    pub fn is_totally_nonnegative(&self) -> bool {
        self.embedding_sign(Embedding::First) >= 0 && self.embedding_sign(Embedding::Second) >= 0
    }

    /// A unit of O, i.e. an integral element of absolute norm 1.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm_abs().is_one()
    }

    /// Syntactic total order on the coordinate pair (a, b); used for tie-breaks.
    pub fn lex_cmp(&self, o: &FieldElem) -> Ordering {
        self.a.cmp(&o.a).then_with(|| self.b.cmp(&o.b))
    }

    /// iota_1(x) + |iota_2(x)| as a field element, for exact comparison.
    fn height(&self) -> FieldElem {
        if self.embedding_sign(Embedding::Second) >= 0 {
            self.add(&self.conj())
        } else {
            self.sub(&self.conj())
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(vec![
            serde_json::Value::String(fmt_rational(&self.a)),
            serde_json::Value::String(fmt_rational(&self.b)),
        ])
    }

    pub fn from_json(d: u32, v: &serde_json::Value) -> Result<FieldElem> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("field element must be a 2-array, got {v}")))?;
        if arr.len() != 2 {
            return Err(Error::Parse(format!(
                "field element must have 2 entries, got {}",
                arr.len()
            )));
        }
        let part = |x: &serde_json::Value| -> Result<Rational> {
            let s = x
                .as_str()
                .ok_or_else(|| Error::Parse(format!("rational must be a string, got {x}")))?;
            parse_rational(s)
        };
        Ok(FieldElem::new(d, part(&arr[0])?, part(&arr[1])?))
    }

    /// Parse the text form "p/q+r/s*w" (w denotes sqrt(d)); also accepts
    /// plain rationals, "r/s*w", and bare "w"/"-w".
    pub fn parse(d: u32, s: &str) -> Result<FieldElem> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        if let Some(stripped) = t.strip_suffix('w') {
            let stripped = stripped.strip_suffix('*').unwrap_or(stripped);
            // split the sqrt-coefficient off at the last top-level sign
            let bytes = stripped.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                    split = Some(i);
                    break;
                }
            }
            let (a_str, b_str) = match split {
                Some(i) => (&stripped[..i], &stripped[i..]),
                None => ("0", stripped),
            };
            let b = match b_str {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                _ => parse_rational(b_str)?,
            };
            Ok(FieldElem::new(d, parse_rational(a_str)?, b))
        } else {
            Ok(FieldElem::from_rational(d, parse_rational(&t)?))
        }
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    BigRational::from_str(s).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}*w", fmt_rational(&self.b));
        }
        if self.b.is_positive() {
            write!(f, "{}+{}*w", fmt_rational(&self.a), fmt_rational(&self.b))
        } else {
            write!(
                f,
                "{}-{}*w",
                fmt_rational(&self.a),
                fmt_rational(&self.b.abs())
            )
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$inner(self, rhs)
            }
        }
        impl std::ops::$trait for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                FieldElem::$inner(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

/// Field data: d and a fundamental unit eps of O, normalized so that
/// iota_1(eps) > 1.
#[derive(Clone, Debug)]
pub struct FieldParams {
    d: u32,
    eps: FieldElem,
    eps_inv: FieldElem,
}

impl FieldParams {
    pub fn new(d: u32, eps: FieldElem) -> Result<Self> {
        if d < 2 || !(d % 4 == 2 || d % 4 == 3) || !is_squarefree(d) {
            return Err(Error::InvalidFieldParams(format!(
                "d = {d} must be squarefree and congruent to 2 or 3 mod 4"
            )));
        }
        if eps.d() != d || !eps.is_unit() {
            return Err(Error::InvalidFieldParams("eps must be a unit of O".into()));
        }
        if eps.b().is_zero() {
            return Err(Error::InvalidFieldParams("eps must not be rational".into()));
        }
        // normalize eps so iota_1(eps) > 1
        let mut e = eps;
        if e.embedding_sign(Embedding::First) < 0 {
            e = e.neg();
        }
        // |N(e)| = 1, so iota_1 < 1 means the inverse is the expanding one
        let one = FieldElem::one(d);
        if (e.sub(&one)).embedding_sign(Embedding::First) < 0 {
            e = e.inv()?;
            if e.embedding_sign(Embedding::First) < 0 {
                e = e.neg();
            }
        }
        let mut e_inv = e.inv()?;
        if e_inv.embedding_sign(Embedding::First) < 0 {
            e_inv = e_inv.neg();
        }
        Ok(FieldParams {
            d,
            eps: e,
            eps_inv: e_inv,
        })
    }

    /// Search for a fundamental unit by minimal positive sqrt-coefficient.
    pub fn with_computed_unit(d: u32) -> Result<Self> {
        for b in 1u64..2_000_000 {
            let db2 = BigInt::from(d) * BigInt::from(b) * BigInt::from(b);
            for delta in [-1i64, 1] {
                let a2 = &db2 + BigInt::from(delta);
                if a2.is_negative() {
                    continue;
                }
                let a = a2.sqrt();
                if &a * &a == a2 {
                    let eps = FieldElem::new(
                        d,
                        Rational::from_integer(a),
                        Rational::from_integer(BigInt::from(b)),
                    );
                    return FieldParams::new(d, eps);
                }
            }
        }
        Err(Error::InvalidFieldParams(format!(
            "fundamental unit search exceeded bound for d = {d}"
        )))
    }

    pub fn sqrt2() -> Self {
        FieldParams::new(2, FieldElem::from_integers(2, 1, 1)).expect("Q(sqrt 2)")
    }

    pub fn sqrt3() -> Self {
        FieldParams::new(3, FieldElem::from_integers(3, 2, 1)).expect("Q(sqrt 3)")
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn eps(&self) -> &FieldElem {
        &self.eps
    }

    pub fn eps_inv(&self) -> &FieldElem {
        &self.eps_inv
    }

    /// Canonical representative of the unit orbit of x: the associate y = u*x
    /// with iota_1(y) > 0 minimizing iota_1(y) + |iota_2(y)|, ties resolved
    /// toward larger iota_1(y). Realizes the fundamental domain Omega_*.
    pub fn canonical_associate(&self, x: &FieldElem) -> Result<(FieldElem, FieldElem)> {
        if x.is_zero() {
            return Err(Error::ZeroAssociate);
        }
        let mut y = x.clone();
        let mut u = FieldElem::one(self.d);
        if y.embedding_sign(Embedding::First) < 0 {
            y = y.neg();
            u = u.neg();
        }
        let step = |y: &FieldElem, by: &FieldElem| -> FieldElem {
            let c = y.mul(by);
            if c.embedding_sign(Embedding::First) < 0 {
                c.neg()
            } else {
                c
            }
        };
        loop {
            let cand = step(&y, &self.eps);
            if cand
                .height()
                .sub(&y.height())
                .embedding_sign(Embedding::First)
                < 0
            {
                u = u.mul(&cand.div(&y)?);
                y = cand;
            } else {
                break;
            }
        }
        loop {
            let cand = step(&y, &self.eps_inv);
            if cand
                .height()
                .sub(&y.height())
                .embedding_sign(Embedding::First)
                < 0
            {
                u = u.mul(&cand.div(&y)?);
                y = cand;
            } else {
                break;
            }
        }
        // tie between adjacent powers: move toward larger iota_1
        for by in [&self.eps, &self.eps_inv] {
            let cand = step(&y, by);
            let diff = cand.height().sub(&y.height());
            if diff.embedding_sign(Embedding::First) == 0
                && cand.sub(&y).embedding_sign(Embedding::First) > 0
            {
                u = u.mul(&cand.div(&y)?);
                y = cand;
            }
        }
        Ok((y, u))
    }

    pub fn in_omega_star(&self, x: &FieldElem) -> bool {
        !x.is_zero()
            && self
                .canonical_associate(x)
                .map(|(y, _)| y == *x)
                .unwrap_or(false)
    }

    /// The element of O nearest to x: minimizes N(x - alpha) over the
    /// coordinate-wise floor/ceil corners, ties broken lexicographically on
    /// (a, b). For norm-euclidean d the corner minimum is already < 1; a 5x5
    /// box fallback covers fields where it is not.
    pub fn nearest_integer(&self, x: &FieldElem) -> FieldElem {
        let mut best: Option<(Rational, BigInt, BigInt)> = None;
        let consider = |p: BigInt, q: BigInt, best: &mut Option<(Rational, BigInt, BigInt)>| {
            let alpha = FieldElem::new(
                self.d,
                Rational::from_integer(p.clone()),
                Rational::from_integer(q.clone()),
            );
            let n = x.sub(&alpha).norm_abs();
            let key = (n, p, q);
            if best.as_ref().map(|b| key < *b).unwrap_or(true) {
                *best = Some(key);
            }
        };
        let fa = x.a().floor().to_integer();
        let ca = x.a().ceil().to_integer();
        let fb = x.b().floor().to_integer();
        let cb = x.b().ceil().to_integer();
        for p in [&fa, &ca] {
            for q in [&fb, &cb] {
                consider(p.clone(), q.clone(), &mut best);
            }
        }
        if best.as_ref().unwrap().0 >= Rational::one() {
            for dp in -2i64..=2 {
                for dq in -2i64..=2 {
                    consider(&fa + BigInt::from(dp), &fb + BigInt::from(dq), &mut best);
                }
            }
        }
        let (_, p, q) = best.unwrap();
        FieldElem::new(self.d, Rational::from_integer(p), Rational::from_integer(q))
    }

    /// Reduce b modulo the additive action of tO: the coordinates of b/t in
    /// the basis {1, sqrt(d)} land in [0, 1). Realizes Omega_+(t).
    pub fn mod_translate(&self, b: &FieldElem, t: &FieldElem) -> Result<FieldElem> {
        if t.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let s = b.div(t)?;
        let alpha = FieldElem::new(
            self.d,
            Rational::from_integer(s.a().floor().to_integer()),
            Rational::from_integer(s.b().floor().to_integer()),
        );
        Ok(b.sub(&t.mul(&alpha)))
    }

    pub fn in_omega_plus(&self, b: &FieldElem, t: &FieldElem) -> Result<bool> {
        Ok(self.mod_translate(b, t)? == *b)
    }
}

fn is_squarefree(d: u32) -> bool {
    let mut n = d;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}
