//! Interior angles, stored as exact rational multiples of π when possible.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An interior angle ω ∈ (0, 2π].
///
/// Angles written as `k*pi/m` keep the reduced fraction `k/m` so that
/// quantities like `π/ω` can be reported exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
    pi_ratio: Option<(i64, i64)>,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = gcd(num, den).max(1);
    let s = if den < 0 { -1 } else { 1 };
    (s * num / g, s * den / g)
}

fn check_range(radians: f64) -> Result<()> {
    if !(radians > 0.0 && radians <= 2.0 * PI) || !radians.is_finite() {
        return Err(Error::validation(
            "omega",
            format!("{radians} is outside (0, 2pi]"),
        ));
    }
    Ok(())
}

impl Angle {
    /// `num/den · π`.
    pub fn pi_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::validation("omega", "zero denominator"));
        }
        let (num, den) = reduce(num, den);
        let radians = num as f64 * PI / den as f64;
        check_range(radians)?;
        Ok(Angle {
            radians,
            pi_ratio: Some((num, den)),
        })
    }

    pub fn from_radians(radians: f64) -> Result<Self> {
        check_range(radians)?;
        Ok(Angle {
            radians,
            pi_ratio: None,
        })
    }

    pub fn radians(&self) -> f64 {
        self.radians
    }

    /// `(p, q)` with ω = p/q · π, if the angle was given exactly.
    pub fn pi_ratio(&self) -> Option<(i64, i64)> {
        self.pi_ratio
    }

    /// ξ = π/ω, the smallest Dirichlet Laplace exponent of the corner.
    pub fn xi(&self) -> f64 {
        match self.pi_ratio {
            Some((p, q)) => q as f64 / p as f64,
            None => PI / self.radians,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_ratio {
            Some((1, 1)) => write!(f, "pi"),
            Some((p, 1)) => write!(f, "{p}pi"),
            Some((1, q)) => write!(f, "pi/{q}"),
            Some((p, q)) => write!(f, "{p}pi/{q}"),
            None => write!(f, "{:?}", self.radians),
        }
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts `3pi/2`, `3*pi/2`, `pi`, `pi/4`, `2pi`, `2*pi` or plain radians.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::validation("omega", format!("cannot parse angle `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        if let Some(pos) = lower.find("pi") {
            let head = lower[..pos].trim_end_matches('*');
            let tail = &lower[pos + 2..];
            let num: i64 = if head.is_empty() {
                1
            } else {
                head.parse().map_err(|_| bad())?
            };
            let den: i64 = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('/')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            Angle::pi_fraction(num, den)
        } else {
            Angle::from_radians(lower.parse().map_err(|_| bad())?)
        }
    }
}
