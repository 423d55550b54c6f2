//! Planar geometry primitives shared by the scenario model, the planner and
//! the simulator: vectors, axis-aligned rectangles and simple polygons.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A 2-D point or vector, in meters. Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Serialize for Vec2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vec2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y] = <[f64; 2]>::deserialize(d)?;
        Ok(Vec2 { x, y })
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Z component of the cross product, used for orientation tests.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Unit vector in the same direction, or zero when the vector is
    /// too short to normalize.
    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        if n > 1e-12 {
            Vec2::new(self.x / n, self.y / n)
        } else {
            Vec2::ZERO
        }
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn scale(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        self.scale(k)
    }
}

impl std::ops::AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

/// Axis-aligned rectangle, used for world bounds and grid cells.
/// Serializes as `[xmin, ymin, xmax, ymax]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub min: Vec2,
    pub max: Vec2,
}

impl Serialize for Rect {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.min.x, self.min.y, self.max.x, self.max.y).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rect {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [xmin, ymin, xmax, ymax] = <[f64; 4]>::deserialize(d)?;
        if !(xmin.is_finite() && ymin.is_finite() && xmax.is_finite() && ymax.is_finite()) {
            return Err(D::Error::custom("bounds must be finite"));
        }
        Ok(Rect::new(xmin, ymin, xmax, ymax))
    }
}

impl Rect {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Self {
        Rect {
            min: Vec2::new(xmin, ymin),
            max: Vec2::new(xmax, ymax),
        }
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn contains_strict(&self, p: Vec2) -> bool {
        p.x > self.min.x && p.x < self.max.x && p.y > self.min.y && p.y < self.max.y
    }

    pub fn corners(&self) -> [Vec2; 4] {
        [
            self.min,
            Vec2::new(self.max.x, self.min.y),
            self.max,
            Vec2::new(self.min.x, self.max.y),
        ]
    }

    pub fn edges(&self) -> [(Vec2, Vec2); 4] {
        let c = self.corners();
        [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
    }

    /// Clamp a point into the rectangle shrunk by `inset` on every side.
    pub fn clamp_inset(&self, p: Vec2, inset: f64) -> Vec2 {
        Vec2::new(
            p.x.clamp(self.min.x + inset, self.max.x - inset),
            p.y.clamp(self.min.y + inset, self.max.y - inset),
        )
    }

    pub fn distance_to_point(&self, p: Vec2) -> f64 {
        let dx = (self.min.x - p.x).max(0.0).max(p.x - self.max.x);
        let dy = (self.min.y - p.y).max(0.0).max(p.y - self.max.y);
        dx.hypot(dy)
    }
}

/// A simple polygon given by its vertices in counterclockwise order.
pub type Polygon = Vec<Vec2>;

pub fn polygon_signed_area(poly: &[Vec2]) -> f64 {
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        acc += a.cross(b);
    }
    acc / 2.0
}

/// Checks that no two non-adjacent edges intersect and no edge is degenerate.
pub fn polygon_is_simple(poly: &[Vec2]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let (a1, a2) = (poly[i], poly[(i + 1) % n]);
        if a1.dist(a2) < 1e-12 {
            return false;
        }
        for j in (i + 1)..n {
            // Skip edges sharing a vertex.
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (b1, b2) = (poly[j], poly[(j + 1) % n]);
            if segments_intersect(a1, a2, b1, b2) {
                return false;
            }
        }
    }
    true
}

fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Vec2, b: Vec2, p: Vec2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Inclusive segment intersection test: touching endpoints count.
pub fn segments_intersect(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2) -> bool {
    let d1 = orient(b1, b2, a1);
    let d2 = orient(b1, b2, a2);
    let d3 = orient(a1, a2, b1);
    let d4 = orient(a1, a2, b2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(b1, b2, a1))
        || (d2 == 0.0 && on_segment(b1, b2, a2))
        || (d3 == 0.0 && on_segment(a1, a2, b1))
        || (d4 == 0.0 && on_segment(a1, a2, b2))
}

pub fn dist_point_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    p.dist(closest_point_on_segment(p, a, b))
}

pub fn closest_point_on_segment(p: Vec2, a: Vec2, b: Vec2) -> Vec2 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq < 1e-24 {
        return a;
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    a + ab * t
}

pub fn dist_segment_segment(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2) -> f64 {
    if segments_intersect(a1, a2, b1, b2) {
        return 0.0;
    }
    dist_point_segment(a1, b1, b2)
        .min(dist_point_segment(a2, b1, b2))
        .min(dist_point_segment(b1, a1, a2))
        .min(dist_point_segment(b2, a1, a2))
}

/// Even-odd point-in-polygon test; points on the boundary count as inside.
pub fn point_in_polygon(p: Vec2, poly: &[Vec2]) -> bool {
    let n = poly.len();
    for i in 0..n {
        if dist_point_segment(p, poly[i], poly[(i + 1) % n]) == 0.0 {
            return true;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x_int = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_int {
                inside = !inside;
            }
        }
    }
    inside
}

/// Distance from a point to a polygon treated as a filled region
/// (zero when the point lies inside or on the boundary).
pub fn dist_point_polygon(p: Vec2, poly: &[Vec2]) -> f64 {
    if point_in_polygon(p, poly) {
        return 0.0;
    }
    let n = poly.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        best = best.min(dist_point_segment(p, poly[i], poly[(i + 1) % n]));
    }
    best
}

/// Nearest point on the polygon boundary together with its distance.
pub fn nearest_boundary_point(p: Vec2, poly: &[Vec2]) -> (Vec2, f64) {
    let n = poly.len();
    let mut best = (poly[0], f64::INFINITY);
    for i in 0..n {
        let q = closest_point_on_segment(p, poly[i], poly[(i + 1) % n]);
        let d = p.dist(q);
        if d < best.1 {
            best = (q, d);
        }
    }
    best
}

/// True when the segment touches the filled polygon (edge crossing or an
/// endpoint inside). Tangency counts.
pub fn segment_hits_polygon(a: Vec2, b: Vec2, poly: &[Vec2]) -> bool {
    let n = poly.len();
    for i in 0..n {
        if segments_intersect(a, b, poly[i], poly[(i + 1) % n]) {
            return true;
        }
    }
    point_in_polygon(a, poly) || point_in_polygon(b, poly)
}

/// Distance between a rectangle and a filled polygon; zero when they touch
/// or overlap.
pub fn dist_rect_polygon(rect: &Rect, poly: &[Vec2]) -> f64 {
    // Overlap or containment in either direction.
    if poly.iter().any(|&v| rect.contains(v)) {
        return 0.0;
    }
    if rect.corners().iter().any(|&c| point_in_polygon(c, poly)) {
        return 0.0;
    }
    let n = poly.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (p1, p2) = (poly[i], poly[(i + 1) % n]);
        for (r1, r2) in rect.edges() {
            best = best.min(dist_segment_segment(p1, p2, r1, r2));
            if best == 0.0 {
                return 0.0;
            }
        }
    }
    best
}

/// True when the rectangle and the filled polygon overlap with positive
/// area; mere boundary contact does not count.
pub fn rect_polygon_overlap(rect: &Rect, poly: &[Vec2]) -> bool {
    if poly.iter().any(|&v| rect.contains_strict(v)) {
        return true;
    }
    let interior = |p: Vec2| point_in_polygon(p, poly) && dist_point_polygon_boundary(p, poly) > 0.0;
    if rect.corners().iter().any(|&c| interior(c)) {
        return true;
    }
    let center = Vec2::new(
        (rect.min.x + rect.max.x) / 2.0,
        (rect.min.y + rect.max.y) / 2.0,
    );
    if interior(center) {
        return true;
    }
    // An edge passing through the open rectangle.
    let n = poly.len();
    for i in 0..n {
        if let Some((t0, t1)) = clip_segment_to_rect(poly[i], poly[(i + 1) % n], rect) {
            if t1 - t0 > 1e-12 {
                let mid = poly[i] + (poly[(i + 1) % n] - poly[i]) * ((t0 + t1) / 2.0);
                if rect.contains_strict(mid) {
                    return true;
                }
            }
        }
    }
    false
}

fn dist_point_polygon_boundary(p: Vec2, poly: &[Vec2]) -> f64 {
    nearest_boundary_point(p, poly).1
}

/// Liang–Barsky clip of segment `a`→`b` to the closed rectangle; returns the
/// parameter interval of the clipped part.
fn clip_segment_to_rect(a: Vec2, b: Vec2, rect: &Rect) -> Option<(f64, f64)> {
    let d = b - a;
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    let checks = [
        (-d.x, a.x - rect.min.x),
        (d.x, rect.max.x - a.x),
        (-d.y, a.y - rect.min.y),
        (d.y, rect.max.y - a.y),
    ];
    for (p, q) in checks {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                if r > t1 {
                    return None;
                }
                t0 = t0.max(r);
            } else {
                if r < t0 {
                    return None;
                }
                t1 = t1.min(r);
            }
        }
    }
    if t0 <= t1 {
        Some((t0, t1))
    } else {
        None
    }
}

/// Smallest non-negative ray parameter hitting the segment, if any.
/// `dir` must be a unit vector so the parameter is a distance.
pub fn ray_segment(origin: Vec2, dir: Vec2, a: Vec2, b: Vec2) -> Option<f64> {
    let v = b - a;
    let denom = dir.cross(v);
    if denom.abs() < 1e-15 {
        // Parallel; check collinear overlap.
        if (a - origin).cross(dir).abs() > 1e-12 {
            return None;
        }
        let ta = (a - origin).dot(dir);
        let tb = (b - origin).dot(dir);
        let lo = ta.min(tb);
        let hi = ta.max(tb);
        if hi < 0.0 {
            return None;
        }
        return Some(lo.max(0.0));
    }
    let t = (a - origin).cross(v) / denom;
    let u = (a - origin).cross(dir) / denom;
    if t >= 0.0 && (0.0..=1.0).contains(&u) {
        Some(t)
    } else {
        None
    }
}

/// Smallest non-negative ray parameter hitting the circle boundary, if any.
pub fn ray_circle(origin: Vec2, dir: Vec2, center: Vec2, radius: f64) -> Option<f64> {
    let oc = origin - center;
    let b = oc.dot(dir);
    let c = oc.norm_sq() - radius * radius;
    let disc = b * b - c;
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let t1 = -b - sq;
    let t2 = -b + sq;
    if t1 >= 0.0 {
        Some(t1)
    } else if t2 >= 0.0 {
        Some(t2)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
        vec![
            Vec2::new(x0, y0),
            Vec2::new(x1, y0),
            Vec2::new(x1, y1),
            Vec2::new(x0, y1),
        ]
    }

    #[test]
    fn point_in_polygon_basics() {
        let sq = square(0.0, 0.0, 2.0, 2.0);
        assert!(point_in_polygon(Vec2::new(1.0, 1.0), &sq));
        assert!(point_in_polygon(Vec2::new(0.0, 1.0), &sq)); // boundary inclusive
        assert!(!point_in_polygon(Vec2::new(3.0, 1.0), &sq));
    }

    #[test]
    fn simple_polygon_detection() {
        let sq = square(0.0, 0.0, 1.0, 1.0);
        assert!(polygon_is_simple(&sq));
        let bowtie = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ];
        assert!(!polygon_is_simple(&bowtie));
    }

    #[test]
    fn segment_polygon_hit() {
        let sq = square(1.0, -1.0, 2.0, 1.0);
        assert!(segment_hits_polygon(
            Vec2::new(0.0, 0.0),
            Vec2::new(3.0, 0.0),
            &sq
        ));
        assert!(!segment_hits_polygon(
            Vec2::new(0.0, 2.0),
            Vec2::new(3.0, 2.0),
            &sq
        ));
    }

    #[test]
    fn rect_polygon_distance_and_overlap() {
        let poly = square(0.0, 0.0, 1.0, 1.0);
        let touching = Rect::new(1.0, 0.0, 1.5, 0.5);
        assert_eq!(dist_rect_polygon(&touching, &poly), 0.0);
        assert!(!rect_polygon_overlap(&touching, &poly)); // zero-area contact
        let overlapping = Rect::new(0.5, 0.5, 1.5, 1.5);
        assert!(rect_polygon_overlap(&overlapping, &poly));
        let apart = Rect::new(2.0, 0.0, 3.0, 1.0);
        let d = dist_rect_polygon(&apart, &poly);
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ray_hits() {
        let t = ray_segment(
            Vec2::ZERO,
            Vec2::new(1.0, 0.0),
            Vec2::new(2.0, -1.0),
            Vec2::new(2.0, 1.0),
        );
        assert!((t.unwrap() - 2.0).abs() < 1e-12);
        let t = ray_circle(Vec2::ZERO, Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0), 0.3);
        assert!((t.unwrap() - 0.7).abs() < 1e-12);
        assert!(ray_circle(Vec2::ZERO, Vec2::new(-1.0, 0.0), Vec2::new(1.0, 0.0), 0.3).is_none());
    }
}
