//! Newton-region geometry of monomial ideals in two variables.
//!
//! The zeta function of `(x^{a_i} y^{b_i})` only depends on the convex hull of
//! the quadrants `(a_i, b_i) + ℝ²≥0`. Fanning the complement of that hull from
//! the origin gives finite triangles (one per hull edge) and up to two infinite
//! triangles along the axes; each contributes a simple rational function
//! weighted by its normalized volume.

use std::fmt;

use log::debug;
use num_bigint::BigInt;

use crate::error::{Result, ZetaError};
use crate::exact_poly::{IntPoly, LinearFactorProduct, RationalSeries};
use crate::zeta::SegreZeta;

/// Exponent vector of the monomial `x^x y^y`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub x: u64,
    pub y: u64,
}

impl Exponent {
    pub const fn new(x: u64, y: u64) -> Self {
        Self { x, y }
    }

    /// Total degree of the monomial.
    pub fn degree(self) -> u64 {
        self.x + self.y
    }

    /// `self ≥ other` componentwise.
    pub fn dominates(self, other: Exponent) -> bool {
        self.x >= other.x && self.y >= other.y
    }
}

impl From<(u64, u64)> for Exponent {
    fn from((x, y): (u64, u64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// `(b - o) × (c - o)`; positive for a counterclockwise turn.
fn cross(o: Exponent, b: Exponent, c: Exponent) -> i128 {
    let (ox, oy) = (o.x as i128, o.y as i128);
    (b.x as i128 - ox) * (c.y as i128 - oy) - (b.y as i128 - oy) * (c.x as i128 - ox)
}

/// A monomial ideal in `k[x, y]`, kept as its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal2D {
    generators: Vec<Exponent>,
}

impl MonomialIdeal2D {
    /// Drops duplicates and generators dominated by another one. The result is
    /// sorted by strictly decreasing `x` (hence strictly increasing `y`).
    pub fn new<I, E>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Exponent>,
    {
        let mut gens: Vec<Exponent> = generators.into_iter().map(Into::into).collect();
        if gens.is_empty() {
            return Err(ZetaError::EmptyGeneratingSet);
        }
        if gens.contains(&Exponent::new(0, 0)) {
            return Err(ZetaError::UnitIdeal);
        }
        // Ascending y, then ascending x: a generator survives iff its x is
        // strictly below every x seen so far.
        gens.sort_by_key(|e| (e.y, e.x));
        let mut minimal: Vec<Exponent> = Vec::with_capacity(gens.len());
        for g in gens {
            if minimal.last().is_none_or(|m| g.x < m.x) {
                minimal.push(g);
            }
        }
        Ok(Self {
            generators: minimal,
        })
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }
}

/// Lower-left boundary of the Newton region: hull vertices by strictly
/// decreasing `x`, with flags for the directions in which the region is
/// unbounded below the hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonBoundary2D {
    vertices: Vec<Exponent>,
    open_x: bool,
    open_y: bool,
}

/// Where a lattice point sits relative to the hull of the quadrants.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Below the hull, i.e. in the Newton region proper.
    Outside,
    OnBoundary,
    Interior,
}

impl NewtonBoundary2D {
    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    /// The region below the hull is unbounded in the `x` direction.
    pub fn open_x(&self) -> bool {
        self.open_x
    }

    /// The region below the hull is unbounded in the `y` direction.
    pub fn open_y(&self) -> bool {
        self.open_y
    }

    /// Degrees of the hull vertices, a generating set of a reduction.
    pub fn degrees(&self) -> Vec<u64> {
        self.vertices.iter().map(|v| v.degree()).collect()
    }

    /// Position of `p` relative to the convex hull of `∪ (v + ℝ²≥0)`.
    pub fn place(&self, p: Exponent) -> Placement {
        let first = self.vertices[0];
        let last = *self.vertices.last().expect("nonempty boundary");
        if p.x < last.x || (p.x >= first.x && p.y < first.y) {
            return Placement::Outside;
        }
        if p.x == last.x {
            return if p.y >= last.y {
                Placement::OnBoundary
            } else {
                Placement::Outside
            };
        }
        if p.x >= first.x {
            return if p.y == first.y {
                Placement::OnBoundary
            } else {
                Placement::Interior
            };
        }
        let edge = self
            .vertices
            .windows(2)
            .find(|w| w[1].x < p.x && p.x <= w[0].x)
            .expect("some edge spans x");
        // Edges run from larger to smaller x; the hull lies to the right.
        match cross(edge[0], edge[1], p).signum() {
            0 => Placement::OnBoundary,
            1 => Placement::Outside,
            _ => Placement::Interior,
        }
    }
}

/// Result of [`integral_closure_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReduction {
    pub boundary: NewtonBoundary2D,
    /// Minimal generators strictly inside the hull: integral over the vertices.
    pub discarded: Vec<Exponent>,
    /// Minimal generators on a hull edge between two vertices. They do not
    /// change the zeta function and are not used by the triangulation.
    pub on_edge: Vec<Exponent>,
}

/// Computes the Newton boundary of `ideal` by a monotone-chain scan with exact
/// cross products, and sorts the remaining generators into those strictly
/// inside the hull and those on an edge.
pub fn integral_closure_reduce(ideal: &MonomialIdeal2D) -> ClosureReduction {
    // Ascending x (descending y): the lower hull of this chain is the Newton boundary.
    let mut points: Vec<Exponent> = ideal.generators.clone();
    points.reverse();
    let mut hull: Vec<Exponent> = Vec::with_capacity(points.len());
    for &p in &points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.reverse();

    let first = hull[0];
    let last = *hull.last().expect("nonempty ideal");
    let boundary = NewtonBoundary2D {
        open_x: first.y > 0,
        open_y: last.x > 0,
        vertices: hull,
    };

    let mut discarded = Vec::new();
    let mut on_edge = Vec::new();
    for &g in &ideal.generators {
        if boundary.vertices.contains(&g) {
            continue;
        }
        match boundary.place(g) {
            Placement::Interior => discarded.push(g),
            Placement::OnBoundary => on_edge.push(g),
            Placement::Outside => unreachable!("generator {g} below its own hull"),
        }
    }
    ClosureReduction {
        boundary,
        discarded,
        on_edge,
    }
}

/// A cell of the fan from the origin through the hull vertices.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Triangle {
    /// Vertices `0`, `v`, `w`.
    Finite { v: Exponent, w: Exponent },
    /// Vertices `0`, `v` and the `x` direction.
    InfiniteX { v: Exponent },
    /// Vertices `0`, `v` and the `y` direction.
    InfiniteY { v: Exponent },
}

impl Triangle {
    /// `|v × w|` for finite cells; the length of the projection onto the
    /// opposite axis for infinite ones.
    pub fn normalized_volume(&self) -> u64 {
        match *self {
            Triangle::Finite { v, w } => {
                (v.x as i128 * w.y as i128 - v.y as i128 * w.x as i128).unsigned_abs() as u64
            }
            Triangle::InfiniteX { v } => v.y,
            Triangle::InfiniteY { v } => v.x,
        }
    }
}

/// One finite triangle per hull edge, plus an infinite triangle along each
/// open direction. Order: `InfiniteX`, finite cells by decreasing `x`, `InfiniteY`.
pub fn triangulate(boundary: &NewtonBoundary2D) -> Vec<Triangle> {
    let mut cells = Vec::with_capacity(boundary.vertices.len() + 1);
    if boundary.open_x {
        cells.push(Triangle::InfiniteX {
            v: boundary.vertices[0],
        });
    }
    cells.extend(
        boundary
            .vertices
            .windows(2)
            .map(|w| Triangle::Finite { v: w[0], w: w[1] }),
    );
    if boundary.open_y {
        cells.push(Triangle::InfiniteY {
            v: *boundary.vertices.last().expect("nonempty boundary"),
        });
    }
    cells
}

fn linear_factor(v: Exponent) -> LinearFactorProduct {
    LinearFactorProduct::single(v.degree()).expect("nonzero exponent")
}

/// Rational function attached to a cell:
/// `Vol t² / ((1 + |v| t)(1 + |w| t))` for finite cells and `Vol t / (1 + |v| t)`
/// for infinite ones, `|v|` being the total degree.
pub fn triangle_contribution(cell: &Triangle) -> RationalSeries {
    let vol = BigInt::from(cell.normalized_volume());
    match *cell {
        Triangle::Finite { v, w } => {
            if vol == BigInt::ZERO {
                debug!("degenerate triangle 0,{v},{w} contributes nothing");
                return RationalSeries::polynomial(IntPoly::zero());
            }
            RationalSeries::new(
                IntPoly::monomial(vol, 2),
                linear_factor(v).union(&linear_factor(w)),
            )
        }
        Triangle::InfiniteX { v } | Triangle::InfiniteY { v } => {
            RationalSeries::new(IntPoly::monomial(vol, 1), linear_factor(v))
        }
    }
}

/// Sum of the cell contributions of the Newton-region fan.
pub fn monomial2d_zeta(ideal: &MonomialIdeal2D) -> SegreZeta {
    let reduction = integral_closure_reduce(ideal);
    let sum = triangulate(&reduction.boundary)
        .iter()
        .map(triangle_contribution)
        .fold(RationalSeries::polynomial(IntPoly::zero()), |acc, c| {
            acc.add(&c)
        });
    SegreZeta::from_series(sum).expect("fan contributions have a positive trailing term")
}
