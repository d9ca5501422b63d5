//! phi-Newton polygons.
//!
//! For `f = sum_{i=0}^{n} b_i(x) phi(x)^i` the point `P_i` is
//! `(i, v_p^x(b_{n-i}))`, present only when `b_{n-i} != 0`. Starting from
//! `P_0`, each next vertex is the point of minimal slope from the current
//! one, taking the largest index on ties. The edge slopes then increase
//! strictly from left to right.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fppoly::{is_irreducible_mod_p, FpError};
use crate::schur::u;
use crate::valuation::{vp, vpx, Ratio};
use crate::zpoly::{phi_expand, IntPoly, PhiExpansion, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("b_0(x) b_n(x) != 0 violated: the constant phi-coefficient b_0 is zero")]
    ZeroConstantTerm,
    #[error("b_0(x) b_n(x) != 0 violated: the polynomial is zero")]
    ZeroPolynomial,
    #[error("phi is not irreducible modulo {0}")]
    PhiReducible(u64),
    #[error("polygon has a single point and no edges")]
    Degenerate,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub slope: Ratio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    n: usize,
    points: Vec<(usize, u64)>,
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl NewtonPolygon {
    /// Builds the polygon from phi-coefficients `terms[i] = b_i(x)`, without
    /// any condition on phi. Both `b_0` and the top term must be nonzero.
    pub fn from_terms(terms: &[IntPoly], p: u64) -> Result<NewtonPolygon, PolygonError> {
        let n = terms
            .iter()
            .rposition(|t| !t.is_zero())
            .ok_or(PolygonError::ZeroPolynomial)?;
        if terms[0].is_zero() {
            return Err(PolygonError::ZeroConstantTerm);
        }
        let points: Vec<(usize, u64)> = (0..=n)
            .filter_map(|i| {
                vpx(&terms[n - i], p)
                    .finite()
                    .map(|v| (i, v))
            })
            .collect();

        let mut vertices = vec![0];
        let mut edges = Vec::new();
        let mut cur = 0usize; // position in `points`
        while points[cur].0 < n {
            let (ci, cv) = points[cur];
            let mut best: Option<(Ratio, usize)> = None;
            for (pos, &(j, v)) in points.iter().enumerate().skip(cur + 1) {
                let s = Ratio::new(v as i128 - cv as i128, (j - ci) as i128);
                // `<=` keeps the largest index among minimal slopes
                if best.as_ref().map_or(true, |(b, _)| s <= *b) {
                    best = Some((s, pos));
                }
            }
            let (slope, pos) = best.expect("P_n is present");
            edges.push(Edge {
                from: ci,
                to: points[pos].0,
                slope,
            });
            vertices.push(points[pos].0);
            cur = pos;
        }
        Ok(NewtonPolygon {
            n,
            points,
            vertices,
            edges,
        })
    }

    /// Polygon of a phi-expansion; phi must be irreducible modulo `p`.
    pub fn from_expansion(e: &PhiExpansion, p: u64) -> Result<NewtonPolygon, PolygonError> {
        if !is_irreducible_mod_p(e.phi(), p)? {
            return Err(PolygonError::PhiReducible(p));
        }
        if e.terms().is_empty() {
            return Err(PolygonError::ZeroPolynomial);
        }
        Self::from_terms(e.terms(), p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[(usize, u64)] {
        &self.points
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn slopes(&self) -> Vec<Ratio> {
        self.edges.iter().map(|e| e.slope.clone()).collect()
    }

    pub fn rightmost_slope(&self) -> Result<Ratio, PolygonError> {
        self.edges
            .last()
            .map(|e| e.slope.clone())
            .ok_or(PolygonError::Degenerate)
    }

    /// Edges that are not horizontal.
    pub fn principal_part(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| !e.slope.is_zero())
            .cloned()
            .collect()
    }

    /// Every point lies on or above every edge's supporting line.
    pub fn is_lower_boundary(&self) -> bool {
        let vert_val = |i: usize| {
            self.points
                .iter()
                .find(|pt| pt.0 == i)
                .map(|pt| pt.1 as i128)
                .expect("vertex is a point")
        };
        self.edges.iter().all(|e| {
            let (x0, y0) = (e.from as i128, vert_val(e.from));
            let (x1, y1) = (e.to as i128, vert_val(e.to));
            self.points.iter().all(|&(x, y)| {
                // (y - y0)(x1 - x0) >= (y1 - y0)(x - x0)
                (y as i128 - y0) * (x1 - x0) >= (y1 - y0) * (x as i128 - x0)
            })
        })
    }
}

impl Serialize for NewtonPolygon {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NewtonPolygon", 3)?;
        let points: Vec<(usize, u64)> = self.points.clone();
        st.serialize_field("points", &points)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("slopes", &self.slopes())?;
        st.end()
    }
}

/// The phi-Newton polygon of `f` with respect to `p`.
pub fn build_polygon(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<NewtonPolygon, PolygonError> {
    let e = phi_expand(f, phi)?;
    NewtonPolygon::from_expansion(&e, p)
}

/// Closed form for the right-most slope of the reference polynomial
/// `sum_j u(2n+c)/u(2j+c) phi^(2j)`: the maximum over `1 <= j <= n` of
/// `v_p(u(2j+c)) / 2j`.
pub fn rightmost_slope_formula(n: u64, c: u64, p: u64) -> Ratio {
    (1..=n)
        .map(|j| {
            let v = vp(&u(2 * j + c), p).finite().expect("u is nonzero");
            Ratio::new(v, 2 * j)
        })
        .max()
        .unwrap_or_else(Ratio::zero)
}
