//! The coordinate plane AG(2, p) over a prime field.
//!
//! Point `(x, y)` gets id `x * p + y`. Lines are listed as `y = m x + b` for
//! slopes `m` ascending and then intercepts `b`, followed by the verticals
//! `x = c`.

use crate::error::{Error, Result};
use crate::incidence::{AffinePlane, IncidencePlane, LineId, PointId};
use crate::Bounds;

/// Arithmetic modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, self.p - 2))
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Builds AG(2, p) with the default order bound.
pub fn build_prime_plane(p: u64) -> Result<IncidencePlane> {
    build_prime_plane_bounded(p, Bounds::DEFAULT_PLANE_ORDER)
}

pub fn build_prime_plane_bounded(p: u64, max_order: usize) -> Result<IncidencePlane> {
    let field = PrimeField::new(p)?;
    if p as usize > max_order {
        return Err(Error::OrderTooLarge {
            order: p as usize,
            bound: max_order,
        });
    }
    let mut lines = Vec::with_capacity((p * p + p) as usize);
    for m in field.elements() {
        for b in field.elements() {
            lines.push(
                field
                    .elements()
                    .map(|x| point_at(p, x, field.add(field.mul(m, x), b)).0)
                    .collect(),
            );
        }
    }
    for c in field.elements() {
        lines.push(field.elements().map(|y| point_at(p, c, y).0).collect());
    }
    IncidencePlane::new((p * p) as usize, lines)
}

/// Id of the point with coordinates `(x, y)` in AG(2, p).
pub fn point_at(p: u64, x: u64, y: u64) -> PointId {
    PointId((x * p + y) as usize)
}

/// Coordinates of a point of AG(2, p).
pub fn coordinates(p: u64, point: PointId) -> (u64, u64) {
    let i = point.0 as u64;
    (i / p, i % p)
}

/// The common point of two distinct lines, or `None` when they are parallel.
pub fn intersect(plane: &AffinePlane, l: LineId, m: LineId) -> Result<Option<PointId>> {
    if l == m {
        return Err(Error::SameLine);
    }
    let (a, b) = (plane.line(l), plane.line(m));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Ok(Some(a[i])),
        }
    }
    Ok(None)
}
