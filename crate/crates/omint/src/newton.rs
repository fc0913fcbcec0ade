//! Newton polygons of weighted points: principal parts (negative slopes),
//! lambda-components, and the integer lattice points of a segment.

use crate::rat::{Rat, Val};
use crate::{Error, Result};

/// A side of a polygon, with exact rational slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub from: (i64, Rat),
    pub to: (i64, Rat),
    pub slope: Rat,
}

/// The principal part of a lower Newton polygon: the sides of negative slope,
/// listed with strictly increasing slopes. `ord_phi` is the abscissa of the
/// left end point (the number of leading infinite ordinates).
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    pub vertices: Vec<(i64, Rat)>,
    pub sides: Vec<Side>,
    pub ord_phi: i64,
}

/// A lambda-component: the points of the polygon minimizing `y + lambda*x`.
/// Degenerates to a single vertex when `-lambda` is not a slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub lambda: Rat,
    pub from: (i64, Rat),
    pub to: (i64, Rat),
    /// Denominator of `lambda = h/e` in lowest terms.
    pub e: i64,
    /// Numerator of `lambda`.
    pub h: i64,
    /// Degree `(to.0 - from.0) / e`.
    pub degree: i64,
}

impl NewtonPolygon {
    /// Length of the principal part (right endpoint minus left endpoint).
    pub fn length(&self) -> i64 {
        match self.vertices.last() {
            Some(&(s, _)) => s - self.ord_phi,
            None => 0,
        }
    }
}

/// Lower convex hull of the finite points, restricted to its negatively
/// sloped initial part. Points with infinite ordinate are omitted from the
/// hull but the leading ones determine `ord_phi`.
pub fn principal_polygon(points: &[(i64, Val)]) -> Result<NewtonPolygon> {
    let finite: Vec<(i64, Rat)> = points
        .iter()
        .filter_map(|(s, v)| v.finite().map(|r| (*s, r)))
        .collect();
    if finite.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pts = finite;
    pts.sort_by_key(|p| p.0);
    let ord_phi = pts[0].0;

    // lower convex hull, left to right
    let mut hull: Vec<(i64, Rat)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // drop b if it is on or above the segment a--p
            let lhs = p.1.sub(&a.1).mul(&Rat::int(b.0 - a.0));
            let rhs = b.1.sub(&a.1).mul(&Rat::int(p.0 - a.0));
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        // equal abscissas cannot happen (points are indexed by s)
        hull.push(p);
    }

    // keep the maximal initial run with strictly negative slopes
    let mut vertices = vec![hull[0]];
    let mut sides = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let slope = b.1.sub(&a.1).div(&Rat::int(b.0 - a.0));
        if slope >= Rat::ZERO {
            break;
        }
        sides.push(Side { from: a, to: b, slope });
        vertices.push(b);
    }
    Ok(NewtonPolygon {
        vertices,
        sides,
        ord_phi,
    })
}

/// The lambda-component `S_lambda(N)`: the face of `N` where `y + lambda*x`
/// is minimal. For `lambda > 0`.
pub fn lambda_component(n: &NewtonPolygon, lambda: Rat) -> Segment {
    assert!(lambda > Rat::ZERO, "lambda must be positive");
    assert!(!n.vertices.is_empty());
    let neg = -lambda;
    // sides are sorted by increasing slope; find the side with this slope,
    // or the vertex between steeper and flatter sides
    for side in &n.sides {
        if side.slope == neg {
            return make_segment(lambda, side.from, side.to);
        }
    }
    // vertex case: the first vertex whose following side is flatter than -lambda
    let mut at = *n.vertices.last().unwrap();
    for (i, side) in n.sides.iter().enumerate() {
        if side.slope > neg {
            at = n.vertices[i];
            break;
        }
    }
    make_segment(lambda, at, at)
}

fn make_segment(lambda: Rat, from: (i64, Rat), to: (i64, Rat)) -> Segment {
    let e = lambda.den();
    let h = lambda.num();
    let len = to.0 - from.0;
    assert!(len % e == 0, "segment length must be a multiple of e");
    Segment {
        lambda,
        from,
        to,
        e,
        h,
        degree: len / e,
    }
}

/// Abscissas of the integer-coordinate points on the segment:
/// `s_0, s_0 + e, ..., s_1`.
pub fn segment_lattice_abscissas(seg: &Segment) -> Vec<i64> {
    (0..=seg.degree).map(|k| seg.from.0 + k * seg.e).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(i64, Val)> {
        v.iter().map(|&(s, y)| (s, Val::int(y))).collect()
    }

    #[test]
    fn two_point_polygon() {
        let n = principal_polygon(&pts(&[(0, 1), (2, 0)])).unwrap();
        assert_eq!(n.sides.len(), 1);
        assert_eq!(n.sides[0].slope, Rat::new(-1, 2));
        assert_eq!(n.length(), 2);
    }

    #[test]
    fn point_above_hull_and_flat_tail() {
        let n = principal_polygon(&pts(&[(0, 2), (1, 3), (2, 0), (3, 0)])).unwrap();
        assert_eq!(n.vertices, vec![(0, Rat::int(2)), (2, Rat::ZERO)]);
        assert_eq!(n.sides.len(), 1);
        assert_eq!(n.sides[0].slope, Rat::int(-1));
    }

    #[test]
    fn infinite_points_set_ord_phi() {
        let points = vec![
            (0, Val::Inf),
            (1, Val::int(2)),
            (3, Val::int(0)),
        ];
        let n = principal_polygon(&points).unwrap();
        assert_eq!(n.ord_phi, 1);
        assert_eq!(n.sides[0].slope, Rat::int(-1));
        assert!(principal_polygon(&[(0, Val::Inf)]).is_err());
    }

    #[test]
    fn lambda_component_cases() {
        // single side of slope -1/2
        let n = principal_polygon(&pts(&[(0, 1), (2, 0)])).unwrap();
        let s = lambda_component(&n, Rat::new(1, 2));
        assert_eq!(s.degree, 1);
        assert_eq!(s.e, 2);
        assert_eq!(segment_lattice_abscissas(&s), vec![0, 2]);
        // steeper lambda picks the left vertex
        let v = lambda_component(&n, Rat::int(1));
        assert_eq!(v.degree, 0);
        assert_eq!(v.from, (0, Rat::int(1)));
        // hull of {(0,3),(3,0)} at lambda = 1: e = 1, d = 3
        let n2 = principal_polygon(&pts(&[(0, 3), (3, 0)])).unwrap();
        let s2 = lambda_component(&n2, Rat::int(1));
        assert_eq!((s2.e, s2.degree), (1, 3));
        assert_eq!(segment_lattice_abscissas(&s2), vec![0, 1, 2, 3]);
        // flatter lambda picks the right vertex
        let v2 = lambda_component(&n2, Rat::new(1, 2));
        assert_eq!(v2.degree, 0);
        assert_eq!(v2.from, (3, Rat::ZERO));
    }

    #[test]
    fn lattice_points_with_offset() {
        let seg = Segment {
            lambda: Rat::new(1, 2),
            from: (1, Rat::int(5)),
            to: (7, Rat::int(2)),
            e: 2,
            h: 1,
            degree: 3,
        };
        assert_eq!(segment_lattice_abscissas(&seg), vec![1, 3, 5, 7]);
    }

    #[test]
    fn hull_matches_bruteforce_on_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..20usize);
            let mut points = Vec::new();
            for s in 0..n {
                if rng.gen_bool(0.2) {
                    points.push((s as i64, Val::Inf));
                } else {
                    points.push((s as i64, Val::int(rng.gen_range(0..12))));
                }
            }
            let Ok(poly) = principal_polygon(&points) else {
                continue;
            };
            // oracle: a side a--b is on the principal hull iff every point is
            // on or above the line through a and b, the slope is negative,
            // and both endpoints are points of the input
            for side in &poly.sides {
                assert!(side.slope < Rat::ZERO);
                for (s, v) in &points {
                    if let Some(y) = v.finite() {
                        // y >= line(a, b) at s
                        let line = side.from.1.add(
                            &side.slope.mul(&Rat::int(s - side.from.0)),
                        );
                        assert!(
                            y >= line || *s > side.to.0,
                            "point below hull side"
                        );
                    }
                }
            }
            // convexity of slopes
            for w in poly.sides.windows(2) {
                assert!(w[0].slope < w[1].slope);
            }
            // brute-force minimum of y + lambda*x agrees with the component
            for (lh, le) in [(1i64, 1i64), (1, 2), (2, 1), (3, 2)] {
                let lambda = Rat::new(lh, le);
                let seg = lambda_component(&poly, lambda);
                let mut best = Val::Inf;
                for (s, v) in &points {
                    if let Some(y) = v.finite() {
                        let val = Val::Fin(y.add(&lambda.mul(&Rat::int(*s))));
                        best = best.min(val);
                    }
                }
                let at_seg = seg.from.1.add(&lambda.mul(&Rat::int(seg.from.0)));
                assert_eq!(Val::Fin(at_seg), best, "component misses the minimum");
            }
        }
    }
}
