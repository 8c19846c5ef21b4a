//! Newton polygons: the lower convex hull of the points `(i, v(a_i))`.
//!
//! Slopes are exact rationals; every comparison is done by
//! cross-multiplication in integer arithmetic.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use crate::error::NewtonError;
use crate::valuation::{ExtendedNat, ValuationSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: u64,
    pub y: u64,
}

impl LatticePoint {
    pub fn new(x: u64, y: u64) -> Self {
        LatticePoint { x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub start: LatticePoint,
    pub end: LatticePoint,
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub slope: Rational64,
    pub width: u64,
    pub rise: i64,
    pub lattice_count: u64,
}

impl Edge {
    fn between(start: LatticePoint, end: LatticePoint) -> Edge {
        debug_assert!(start.x < end.x);
        let width = end.x - start.x;
        let rise = end.y as i64 - start.y as i64;
        Edge {
            start,
            end,
            slope: Rational64::new(rise, width as i64),
            width,
            rise,
            lattice_count: 1 + width.gcd(&rise.unsigned_abs()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<LatticePoint>,
    pub edges: Vec<Edge>,
}

impl NewtonPolygon {
    pub fn total_width(&self) -> u64 {
        self.edges.iter().map(|e| e.width).sum()
    }

    /// Edges with negative slope, i.e. the part of the polygon that carries
    /// divisibility information.
    pub fn negative_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.rise < 0)
    }
}

/// The points `(i, v(a_i))` with finite valuation.
pub fn finite_points(seq: &ValuationSequence) -> Vec<LatticePoint> {
    seq.values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| match v {
            ExtendedNat::Finite(y) => Some(LatticePoint::new(i as u64, *y)),
            ExtendedNat::Infinity => None,
        })
        .collect()
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ox, oy) = (o.x as i128, o.y as i128);
    (a.x as i128 - ox) * (b.y as i128 - oy) - (a.y as i128 - oy) * (b.x as i128 - ox)
}

/// Monotone-chain lower hull of the finite points. Collinear interior
/// points are dropped, so consecutive edges have strictly increasing slopes.
pub fn lower_hull(seq: &ValuationSequence) -> Result<NewtonPolygon, NewtonError> {
    let points = finite_points(seq);
    if points.is_empty() {
        return Err(NewtonError::AllInfinite);
    }
    Ok(hull_of_points(&points))
}

/// Lower hull of points already sorted by strictly increasing `x`.
pub fn hull_of_points(points: &[LatticePoint]) -> NewtonPolygon {
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(points.len());
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let edges = hull.windows(2).map(|w| Edge::between(w[0], w[1])).collect();
    NewtonPolygon {
        vertices: hull,
        edges,
    }
}

/// Number of integer points on the closed segment `PQ`.
pub fn lattice_point_count(p: LatticePoint, q: LatticePoint) -> Result<u64, NewtonError> {
    if p == q {
        return Err(NewtonError::DegenerateSegment);
    }
    Ok(1 + p.x.abs_diff(q.x).gcd(&p.y.abs_diff(q.y)))
}

/// `(slope, width)` of every edge, in polygon order (which is slope order).
pub fn edge_multiset(np: &NewtonPolygon) -> Vec<(Rational64, u64)> {
    np.edges.iter().map(|e| (e.slope, e.width)).collect()
}

fn widths_by_slope<'a>(
    parts: impl IntoIterator<Item = &'a NewtonPolygon>,
) -> BTreeMap<Rational64, u64> {
    let mut out = BTreeMap::new();
    for np in parts {
        for (slope, width) in edge_multiset(np) {
            *out.entry(slope).or_insert(0) += width;
        }
    }
    out
}

/// Checks that the polygon of a product is assembled from one translate of
/// every edge of the factors' polygons, sorted by slope. Edges of equal
/// slope fuse, so the comparison is of total width per slope.
pub fn verify_product_composition(
    np_f1: &NewtonPolygon,
    np_f2: &NewtonPolygon,
    np_product: &NewtonPolygon,
) -> bool {
    widths_by_slope([np_f1, np_f2]) == widths_by_slope([np_product])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::valuation::padic_sequence;
    use num_bigint::BigInt;

    fn seq(v: &[Option<u64>]) -> ValuationSequence {
        ValuationSequence::from_options(v, "test")
    }

    fn pt(x: u64, y: u64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn np_of(c: &[i64], p: i64) -> NewtonPolygon {
        lower_hull(&padic_sequence(&IntPoly::from_i64s(c), &BigInt::from(p)).unwrap()).unwrap()
    }

    #[test]
    fn hull_examples() {
        let np = lower_hull(&seq(&[Some(2), Some(2), Some(1), Some(0)])).unwrap();
        assert_eq!(np.vertices, vec![pt(0, 2), pt(3, 0)]);
        assert_eq!(np.edges.len(), 1);
        assert_eq!(np.edges[0].slope, r(-2, 3));
        assert_eq!(np.edges[0].width, 3);
        assert_eq!(np.edges[0].lattice_count, 2);

        let np = lower_hull(&seq(&[Some(1), None, None, Some(0)])).unwrap();
        assert_eq!(np.vertices, vec![pt(0, 1), pt(3, 0)]);
        assert_eq!(np.edges[0].slope, r(-1, 3));

        let np = lower_hull(&seq(&[Some(0), Some(0)])).unwrap();
        assert_eq!(np.edges.len(), 1);
        assert_eq!(np.edges[0].slope, r(0, 1));
    }

    #[test]
    fn collinear_points_are_not_vertices() {
        let np = lower_hull(&seq(&[Some(4), Some(3), Some(2), Some(1), Some(0)])).unwrap();
        assert_eq!(np.vertices, vec![pt(0, 4), pt(4, 0)]);
        assert_eq!(np.edges[0].lattice_count, 5);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(lower_hull(&seq(&[None, None, Some(0)])).unwrap().edges, vec![]);
        let all_inf = ValuationSequence {
            values: vec![ExtendedNat::Infinity],
            label: "x".into(),
        };
        assert_eq!(lower_hull(&all_inf), Err(NewtonError::AllInfinite));
    }

    #[test]
    fn lattice_count_examples() {
        assert_eq!(lattice_point_count(pt(0, 4), pt(6, 0)), Ok(3));
        assert_eq!(lattice_point_count(pt(0, 1), pt(5, 0)), Ok(2));
        assert_eq!(lattice_point_count(pt(0, 6), pt(4, 2)), Ok(5));
        assert_eq!(lattice_point_count(pt(3, 3), pt(3, 3)), Err(NewtonError::DegenerateSegment));
        assert_eq!(lattice_point_count(pt(3, 0), pt(3, 5)), Ok(6));
    }

    #[test]
    fn edge_multiset_examples() {
        let np = lower_hull(&seq(&[Some(2), Some(2), Some(1), Some(0)])).unwrap();
        assert_eq!(edge_multiset(&np), vec![(r(-2, 3), 3)]);
        // (x+2)(x^2+2) = 4 + 2x + 2x^2 + x^3 at p = 2
        let np = np_of(&[4, 2, 2, 1], 2);
        assert_eq!(edge_multiset(&np), vec![(r(-1, 1), 1), (r(-1, 2), 2)]);
        let np = lower_hull(&seq(&[Some(3)])).unwrap();
        assert!(edge_multiset(&np).is_empty());
    }

    #[test]
    fn composition_examples() {
        let f1 = np_of(&[1, 1], 2);
        let f2 = np_of(&[2, 0, 1], 2);
        let prod = np_of(&[2, 2, 1, 1], 2);
        assert_eq!(edge_multiset(&prod), vec![(r(-1, 2), 2), (r(0, 1), 1)]);
        assert!(verify_product_composition(&f1, &f2, &prod));

        let sq = np_of(&[1, 2, 1], 2);
        assert_eq!(edge_multiset(&sq), vec![(r(0, 1), 2)]);
        assert!(verify_product_composition(&f1, &f1, &sq));

        let other = np_of(&[4, 4, 2, 1], 2);
        assert!(!verify_product_composition(&f1, &f2, &other));
    }
}
