//! Locating points in the Voronoi fan by an exact simplex walk on the
//! Ryshkov polyhedron R = { psi : min_v <L(v), psi> >= 1 }.
//!
//! Vertices of R are the perfect pairs; the normal cone of R at a vertex psi
//! is exactly the Voronoi cone spanned by L of the minimal vectors of psi.
//! Walking from vertex to vertex across the facet violated by the target
//! point therefore terminates at the perfect pair whose cone contains it,
//! with min_vectors as the only oracle.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::enumerate::{min_vectors_raw, value_at};
use super::facets::{dot, facet_normals, N6, Q6};
use super::{l_of, weights, ConeContext, SymPair};
use crate::error::{Error, Result};
use crate::gl2of::{is_content_primitive, ray_normalize, RayVector};
use crate::qfield::Rational;

/// A vertex of the Ryshkov polyhedron: a perfect pair, its minimal vectors,
/// and the facet normals of its Voronoi cone.
pub struct RyshkovVertex {
    pub(crate) psi: SymPair,
    pub(crate) gens: Vec<RayVector>,
    pub(crate) pts: Vec<Q6>,
    pub(crate) facets: Vec<N6>,
}

impl RyshkovVertex {
    pub fn generators(&self) -> &[RayVector] {
        &self.gens
    }

    pub fn perfect_pair(&self) -> &SymPair {
        &self.psi
    }
}

pub(crate) fn make_vertex(ctx: &ConeContext, psi: &SymPair) -> Result<RyshkovVertex> {
    let params = ctx.params();
    let one = Rational::one();
    let Some((m, vecs)) = min_vectors_raw(psi, Some(&one))? else {
        return Err(Error::ConeLocationFailed); // minimum above 1: not a vertex
    };
    if m != one {
        return Err(Error::ConeLocationFailed);
    }
    let mut gens = Vec::new();
    for v in &vecs {
        if is_content_primitive(params, v)? {
            gens.push(ray_normalize(params, v)?);
        }
    }
    gens.sort();
    gens.dedup();
    let pts: Vec<Q6> = gens.iter().map(|g| l_of(g.vec()).q6()).collect();
    let facets = facet_normals(&pts);
    if facets.is_empty() {
        return Err(Error::ConeLocationFailed);
    }
    Ok(RyshkovVertex {
        psi: psi.clone(),
        gens,
        pts,
        facets,
    })
}

/// The neighboring perfect pair across one facet of the vertex's cone:
/// move along the Ryshkov edge dual to the facet until new minimal vectors
/// appear at value 1.
fn neighbor(ctx: &ConeContext, vertex: &RyshkovVertex, facet: &N6) -> Result<SymPair> {
    let d = ctx.params().d();
    let w = weights(d);
    let dir_q6: Q6 = std::array::from_fn(|i| Rational::from_integer(facet[i].clone()) / &w[i]);
    let dir = SymPair::from_q6(d, &dir_q6);
    let fset: BTreeSet<&RayVector> = vertex
        .gens
        .iter()
        .zip(&vertex.pts)
        .filter(|(_, p)| dot(facet, p).is_zero())
        .map(|(g, _)| g)
        .collect();
    let one = Rational::one();
    let mut t = Rational::one();
    let cap = Rational::from_integer(BigInt::from(2).pow(60));
    for _ in 0..256 {
        let cand = vertex.psi.add(&dir.scale(&t));
        if !cand.is_positive_definite() {
            t /= Rational::from_integer(BigInt::from(2));
            continue;
        }
        match min_vectors_raw(&cand, Some(&one))? {
            None => {
                // still strictly inside R along the edge
                t *= Rational::from_integer(BigInt::from(2));
                if t > cap {
                    return Err(Error::ConeLocationFailed);
                }
            }
            Some((m, vecs)) => {
                if m == one {
                    let mut new_vec = false;
                    for v in &vecs {
                        if is_content_primitive(ctx.params(), v)? {
                            let r = ray_normalize(ctx.params(), v)?;
                            if !fset.contains(&r) {
                                new_vec = true;
                                break;
                            }
                        }
                    }
                    if new_vec {
                        return Ok(cand);
                    }
                    t *= Rational::from_integer(BigInt::from(2));
                    if t > cap {
                        return Err(Error::ConeLocationFailed);
                    }
                } else {
                    // overshot: pull back to the first crossing among the
                    // violated vectors
                    let mut best: Option<Rational> = None;
                    for v in &vecs {
                        let slope = value_at(&dir, v);
                        if slope.is_negative() {
                            let a = value_at(&vertex.psi, v);
                            let tv = (&one - &a) / slope;
                            if tv.is_positive() && best.as_ref().map(|b| tv < *b).unwrap_or(true) {
                                best = Some(tv);
                            }
                        }
                    }
                    let Some(tv) = best else {
                        return Err(Error::ConeLocationFailed);
                    };
                    if tv >= t {
                        return Err(Error::ConeLocationFailed);
                    }
                    t = tv;
                }
            }
        }
    }
    Err(Error::ConeLocationFailed)
}

/// Walk the Ryshkov vertices from `start` to the perfect pair whose Voronoi
/// cone contains the definite point `p`. Each crossing strictly decreases
/// <p, psi>, and the sublevel set holds finitely many vertices, so the walk
/// terminates; the iteration cap is a safety net.
pub(crate) fn walk(ctx: &ConeContext, p: &SymPair, start: &SymPair) -> Result<Arc<RyshkovVertex>> {
    let p6 = p.q6();
    let mut psi = start.clone();
    for _ in 0..20_000 {
        let data = ctx.vertex_data(&psi)?;
        let violated = data
            .facets
            .iter()
            .filter(|n| dot(n, &p6).is_negative())
            .min();
        match violated {
            None => return Ok(data),
            Some(n) => {
                psi = neighbor(ctx, &data, n)?;
            }
        }
    }
    Err(Error::ConeLocationFailed)
}
