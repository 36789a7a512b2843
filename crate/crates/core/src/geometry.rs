//! Polar-coordinate points and angle helpers shared by the kernel modules.

use std::f64::consts::PI;

/// A point (r, θ) in the plane with r ≥ 0 and θ normalized into [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64) -> Self {
        assert!(r >= 0.0 && r.is_finite(), "radius must be finite and >= 0");
        Self {
            r,
            theta: wrap_0_2pi(theta),
        }
    }

    pub fn from_cartesian(x: f64, y: f64) -> Self {
        let r = x.hypot(y);
        let theta = if r == 0.0 { 0.0 } else { y.atan2(x) };
        Self::new(r, theta)
    }

    /// Euclidean distance to another point.
    pub fn dist(&self, other: &PolarPoint) -> f64 {
        self.dist_sq(other).max(0.0).sqrt()
    }

    /// |x−y|² = r₁² + r₂² − 2 r₁ r₂ cos(θ₁−θ₂).
    pub fn dist_sq(&self, other: &PolarPoint) -> f64 {
        self.r * self.r + other.r * other.r
            - 2.0 * self.r * other.r * (self.theta - other.theta).cos()
    }
}

/// Wrap an angle into [0, 2π).
pub fn wrap_0_2pi(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t < 0.0 {
        t += 2.0 * PI;
    }
    t
}

/// Wrap an angle difference into (−π, π]. The boundary value π maps to +π,
/// matching the convention that |θ₁−θ₂| = π belongs to the lower indicator
/// interval of the kernel formulas.
pub fn wrap_pm_pi(phi: f64) -> f64 {
    let mut w = phi % (2.0 * PI);
    if w > PI {
        w -= 2.0 * PI;
    } else if w <= -PI {
        w += 2.0 * PI;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn wrap_conventions() {
        assert_relative_eq!(wrap_pm_pi(PI), PI);
        assert_relative_eq!(wrap_pm_pi(-PI), PI);
        assert_relative_eq!(wrap_pm_pi(3.0 * PI / 2.0), -PI / 2.0);
        assert_relative_eq!(wrap_pm_pi(-0.25), -0.25);
        assert_relative_eq!(wrap_0_2pi(-0.25), 2.0 * PI - 0.25);
    }

    #[test]
    fn polar_distance_matches_cartesian() {
        let a = PolarPoint::from_cartesian(1.0, 0.0);
        let b = PolarPoint::from_cartesian(0.0, 0.5);
        assert_relative_eq!(a.dist(&b), (1.0f64 + 0.25).sqrt(), epsilon = 1e-14);
    }
}
