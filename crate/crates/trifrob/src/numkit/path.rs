use super::{NumError, Result};
use crate::C64;

/// Polyline through complex waypoints.
#[derive(Debug, Clone, PartialEq)]
pub struct CPath {
    waypoints: Vec<C64>,
}

impl CPath {
    pub fn new(waypoints: Vec<C64>) -> Result<Self> {
        if waypoints.len() < 2 {
            return Err(NumError::InvalidPath("a path needs at least two waypoints"));
        }
        if waypoints.windows(2).any(|w| w[0] == w[1]) {
            return Err(NumError::InvalidPath("consecutive waypoints coincide"));
        }
        if waypoints.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(NumError::InvalidPath("non-finite waypoint"));
        }
        Ok(CPath { waypoints })
    }

    pub fn segment(a: C64, b: C64) -> Result<Self> {
        Self::new(vec![a, b])
    }

    /// Straight segment on the real axis.
    pub fn real(a: f64, b: f64) -> Result<Self> {
        Self::segment(C64::new(a, 0.0), C64::new(b, 0.0))
    }

    /// Closed axis-aligned square of half-width `r` around `center`, counter-clockwise.
    pub fn square(center: C64, r: f64) -> Result<Self> {
        let c = |x: f64, y: f64| center + C64::new(x, y);
        Self::new(vec![c(r, -r), c(r, r), c(-r, r), c(-r, -r), c(r, -r)])
    }

    pub fn waypoints(&self) -> &[C64] {
        &self.waypoints
    }

    pub fn start(&self) -> C64 {
        self.waypoints[0]
    }

    pub fn end(&self) -> C64 {
        *self.waypoints.last().unwrap()
    }

    pub fn length(&self) -> f64 {
        self.waypoints.windows(2).map(|w| (w[1] - w[0]).norm()).sum()
    }

    pub fn segments(&self) -> impl Iterator<Item = (C64, C64)> + '_ {
        self.waypoints.windows(2).map(|w| (w[0], w[1]))
    }

    /// Concatenation; the end of `self` must equal the start of `other`.
    pub fn concat(&self, other: &CPath) -> Result<CPath> {
        if self.end() != other.start() {
            return Err(NumError::InvalidPath("paths do not join"));
        }
        let mut w = self.waypoints.clone();
        w.extend_from_slice(&other.waypoints[1..]);
        CPath::new(w)
    }
}
