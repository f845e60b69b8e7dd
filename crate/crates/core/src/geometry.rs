//! Angle, cone-membership and bisector-projection primitives.
//!
//! Angles are measured clockwise from the positive y-axis. Around every origin
//! the plane is split into `k` cones of width `2π/k`; cone `i` (1-based) covers
//! the half-open interval `((i-1)·2π/k, i·2π/k]`, so it excludes its leading
//! ray `l_i` and includes its trailing ray `l_{i+1}` (with `l_{k+1} = l_1`).

use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in the plane with finite coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite { x, y });
        }
        Ok(Self { x, y })
    }

    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    /// Vector from `self` to `other`.
    #[inline]
    pub fn to(&self, other: &Point) -> Vector {
        Vector {
            x: other.x - self.x,
            y: other.y - self.y,
        }
    }

    #[inline]
    pub fn distance(&self, other: &Point) -> f64 {
        self.to(other).norm()
    }

    /// Bitwise coordinate equality, used for duplicate detection.
    pub(crate) fn same_bits(&self, other: &Point) -> bool {
        // -0.0 and 0.0 describe the same location
        self.x == other.x && self.y == other.y
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            x: f64,
            y: f64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Point::new(raw.x, raw.y).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Free vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector {
    pub x: f64,
    pub y: f64,
}

impl Vector {
    /// Unit vector at the given clockwise angle from north.
    pub fn from_bearing(angle: f64) -> Self {
        let (sin, cos) = angle.sin_cos();
        Vector { x: sin, y: cos }
    }

    #[inline]
    pub fn dot(&self, other: &Vector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(&self, other: &Vector) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// Euclidean distance between two points.
#[inline]
pub fn distance(a: &Point, b: &Point) -> f64 {
    a.distance(b)
}

/// A 1-based cone label together with the cone count it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeIndex {
    index: u32,
    k: u32,
}

impl ConeIndex {
    pub fn new(index: u32, k: u32) -> Result<Self> {
        check_cone_count(k)?;
        if index == 0 || index > k {
            return Err(Error::InvalidConeIndex { index, k });
        }
        Ok(Self { index, k })
    }

    #[inline]
    pub fn index(&self) -> u32 {
        self.index
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Zero-based slot, handy for per-cone arrays.
    #[inline]
    pub fn slot(&self) -> usize {
        (self.index - 1) as usize
    }

    /// Angular width of every cone for this `k`.
    #[inline]
    pub fn width(&self) -> f64 {
        cone_width(self.k)
    }
}

impl fmt::Display for ConeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({}/{})", self.index, self.k)
    }
}

pub(crate) fn check_cone_count(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidConeCount(k))
    } else {
        Ok(())
    }
}

#[inline]
pub fn cone_width(k: u32) -> f64 {
    TAU / f64::from(k)
}

/// Clockwise angle from the positive y-axis to the ray `origin → p`, in `(0, 2π]`.
///
/// Due north maps to `2π`, not `0`.
pub fn clockwise_angle_from_north(origin: &Point, p: &Point) -> Result<f64> {
    let v = origin.to(p);
    if v.x == 0.0 && v.y == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    // atan2(dx, dy) is the clockwise bearing in (-π, π]
    let angle = v.x.atan2(v.y);
    Ok(if angle <= 0.0 { angle + TAU } else { angle })
}

/// Cone of `origin` that contains `p`.
///
/// Quotients within a few ulps of an integer are snapped onto the boundary
/// ray, so points built on `l_j` by trigonometry land in cone `j-1`.
pub fn cone_of(origin: &Point, p: &Point, k: u32) -> Result<ConeIndex> {
    check_cone_count(k)?;
    let angle = clockwise_angle_from_north(origin, p)?;
    let t = angle / cone_width(k);
    let nearest = t.round();
    let t = if (t - nearest).abs() <= 8.0 * f64::EPSILON * nearest.max(1.0) {
        nearest
    } else {
        t
    };
    let index = (t.ceil() as u32).clamp(1, k);
    Ok(ConeIndex { index, k })
}

/// Unit vector along the bisector of `cone`.
pub fn bisector_direction(cone: ConeIndex) -> Vector {
    Vector::from_bearing((f64::from(cone.index) - 0.5) * cone.width())
}

/// Signed length of the projection of `p - origin` onto the bisector of `cone`.
pub fn bisector_projection(origin: &Point, p: &Point, cone: ConeIndex) -> Result<f64> {
    let v = origin.to(p);
    if v.x == 0.0 && v.y == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    Ok(v.dot(&bisector_direction(cone)))
}

/// Unsigned angle at `apex` between the rays towards `a` and `b`, in `[0, π]`.
pub fn angle_at(apex: &Point, a: &Point, b: &Point) -> f64 {
    let va = apex.to(a);
    let vb = apex.to(b);
    va.cross(&vb).abs().atan2(va.dot(&vb))
}
