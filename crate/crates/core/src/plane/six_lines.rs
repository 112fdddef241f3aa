//! Intersection analysis of line configurations.
//!
//! All counting is projective: parallel lines meet at infinity and those
//! points carry the same weight as affine ones. The affine convention would
//! break the double-point count for configurations with parallel members.

use super::curve::PlaneCurve;
use super::line::ProjLine;
use super::point::ProjPoint;
use crate::arith::poly2::Poly2;
use crate::error::CurveError;
use std::collections::BTreeMap;

/// All pairwise intersection points of six distinct lines, with the number of
/// configuration lines through each point. Every one of the 15 line pairs is
/// accounted for by exactly one reported point.
pub fn six_lines_analysis(lines: &[ProjLine]) -> Result<Vec<(ProjPoint, u32)>, CurveError> {
    if lines.len() != 6 {
        return Err(CurveError::WrongLineCount(lines.len()));
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i] == lines[j] {
                return Err(CurveError::DuplicateLines);
            }
        }
    }
    let mut points: BTreeMap<ProjPoint, u32> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = lines[i]
                .intersect(&lines[j])
                .expect("distinct lines meet in one point");
            points.entry(p).or_insert(0);
        }
    }
    for (p, mult) in points.iter_mut() {
        *mult = lines.iter().filter(|l| l.contains(p)).count() as u32;
    }
    let pairs: u32 = points.values().map(|m| m * (m - 1) / 2).sum();
    let n = lines.len() as u32;
    debug_assert_eq!(
        pairs,
        n * (n - 1) / 2,
        "every line pair meets in exactly one point"
    );
    Ok(points.into_iter().collect())
}

/// The product sextic of six affine lines; the branch curve of the six-line
/// double cover. Lines at infinity have no affine equation and are rejected.
pub fn line_product_curve(lines: &[ProjLine]) -> Result<PlaneCurve, CurveError> {
    let mut f = Poly2::constant(crate::arith::rat::rat_int(1));
    for l in lines {
        if l.is_line_at_infinity() {
            return Err(CurveError::LineIsComponent);
        }
        let (a, b, c) = l.coefficients();
        let eq = Poly2::from_terms([(1, 0, a), (0, 1, b), (0, 0, c)]);
        f = &f * &eq;
    }
    PlaneCurve::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    fn fixture_lines() -> Vec<ProjLine> {
        // x = 0, x = 1, y = 0, y = 1, x = y, x + y = 1
        vec![
            ProjLine::from_i64(1, 0, 0).unwrap(),
            ProjLine::from_i64(1, 0, -1).unwrap(),
            ProjLine::from_i64(0, 1, 0).unwrap(),
            ProjLine::from_i64(0, 1, -1).unwrap(),
            ProjLine::from_i64(1, -1, 0).unwrap(),
            ProjLine::from_i64(1, 1, -1).unwrap(),
        ]
    }

    #[test]
    fn fixture_configuration_counts() {
        let pts = six_lines_analysis(&fixture_lines()).unwrap();
        let triples: Vec<_> = pts.iter().filter(|(_, m)| *m == 3).collect();
        let doubles: Vec<_> = pts.iter().filter(|(_, m)| *m == 2).collect();
        assert_eq!(triples.len(), 4);
        assert_eq!(doubles.len(), 3);
        // the four affine triple points
        for (x, y) in [(0, 0), (1, 1), (0, 1), (1, 0)] {
            let p = ProjPoint::from_affine(&rat_int(x), &rat_int(y));
            assert!(triples.iter().any(|(q, _)| *q == p));
        }
        // doubles: (1/2, 1/2) plus the two points at infinity
        let half = ProjPoint::from_affine(&rat(1, 2), &rat(1, 2));
        assert!(doubles.iter().any(|(q, _)| *q == half));
        assert_eq!(doubles.iter().filter(|(q, _)| !q.is_affine()).count(), 2);
    }

    #[test]
    fn concurrent_lines() {
        // six lines through the origin: one point of multiplicity 6
        let lines: Vec<ProjLine> = (1..=6)
            .map(|k| ProjLine::from_i64(k, -1, 0).unwrap())
            .collect();
        let pts = six_lines_analysis(&lines).unwrap();
        let origin = ProjPoint::from_affine(&rat_int(0), &rat_int(0));
        assert_eq!(pts, vec![(origin, 6)]);
    }

    #[test]
    fn duplicates_rejected() {
        let mut lines = fixture_lines();
        lines[5] = lines[0].clone();
        assert!(six_lines_analysis(&lines).is_err());
        assert!(six_lines_analysis(&lines[..5]).is_err());
    }

    #[test]
    fn generic_configurations_have_two_doubles() {
        // the double-point bound: any 6 distinct lines with no point of
        // multiplicity > 3 have at least two points of multiplicity exactly 2
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 200 && attempts < 2000 {
            attempts += 1;
            let mut lines = Vec::new();
            for _ in 0..6 {
                let a = (next() % 9) as i64 - 4;
                let b = (next() % 9) as i64 - 4;
                let c = (next() % 9) as i64 - 4;
                if a == 0 && b == 0 && c == 0 {
                    lines.push(ProjLine::from_i64(1, 0, 0).unwrap());
                } else {
                    lines.push(ProjLine::from_i64(a, b, c).unwrap());
                }
            }
            let Ok(pts) = six_lines_analysis(&lines) else {
                continue;
            };
            if pts.iter().any(|(_, m)| *m > 3) {
                continue;
            }
            checked += 1;
            let doubles = pts.iter().filter(|(_, m)| *m == 2).count();
            assert!(
                doubles >= 2,
                "configuration {lines:?} has {doubles} double points"
            );
        }
        assert!(checked >= 200);
    }

    #[test]
    fn generic_configuration_has_fifteen_double_points() {
        // pairwise solve + dedupe on a generic configuration: all 15
        // intersection points distinct, each on exactly two lines
        let lines = vec![
            ProjLine::from_i64(0, -3, 1).unwrap(),
            ProjLine::from_i64(5, -5, -4).unwrap(),
            ProjLine::from_i64(3, -4, 0).unwrap(),
            ProjLine::from_i64(4, -5, 3).unwrap(),
            ProjLine::from_i64(-2, -5, -4).unwrap(),
            ProjLine::from_i64(1, 1, -4).unwrap(),
        ];
        let pts = six_lines_analysis(&lines).unwrap();
        assert_eq!(pts.len(), 15);
        assert!(pts.iter().all(|(_, m)| *m == 2));
    }

    #[test]
    fn product_curve_is_a_reduced_sextic() {
        let c = line_product_curve(&fixture_lines()).unwrap();
        assert_eq!(c.degree(), 6);
        assert!(c.is_reduced());
        // product vanishes exactly on the union
        assert!(c.contains(&rat_int(0), &rat(5, 7)));
        assert!(c.contains(&rat(1, 3), &rat(2, 3)));
        assert!(!c.contains(&rat_int(2), &rat_int(3)));
    }
}
