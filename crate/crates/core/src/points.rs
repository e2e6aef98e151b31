//! The partially defined group law on points of the twisted SL(2), computed
//! with formal commuting coordinates.

use std::fmt;

use crate::catalog::{catalog, CatalogName, CatalogParams};
use crate::error::{Error, Result};
use crate::group::GradingGroup;
use crate::ncpoly::{GenSet, NcPoly};
use crate::presentation::{braided_tensor, twist_coproduct, AlgebraMap};

/// The three real curves making up the twisted SL(2): two circles and a
/// hyperbola, each a plane section through (±1, 0, 0, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    /// z = t = 0
    C1,
    /// y = t = 0
    C2,
    /// y = z = 0
    H,
}

impl Curve {
    pub const ALL: [Curve; 3] = [Curve::C1, Curve::C2, Curve::H];

    /// Index of the one coordinate besides x allowed to be nonzero.
    fn free_coordinate(self) -> usize {
        match self {
            Curve::C1 => 1,
            Curve::C2 => 2,
            Curve::H => 3,
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curve::C1 => "C1",
            Curve::C2 => "C2",
            Curve::H => "H",
        })
    }
}

/// A point (x, y, z, t) whose coordinates are commutative polynomials over
/// a set of formal symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(pub [NcPoly; 4]);

impl Point {
    pub fn identity(order: u32) -> Result<Point> {
        let z = NcPoly::zero(order);
        Ok(Point([NcPoly::one(order)?, z.clone(), z.clone(), z]))
    }

    pub fn on(&self, curve: Curve) -> bool {
        let free = curve.free_coordinate();
        (1..4).all(|k| k == free || self.0[k].is_zero())
    }

    pub fn render(&self, symbols: &GenSet) -> [String; 4] {
        self.0.clone().map(|c| c.render(symbols))
    }
}

/// Symbols `x y z t x' y' z' t'` for two generic points.
pub fn point_symbols(order: u32) -> Result<GenSet> {
    GenSet::ungraded(order, GradingGroup::free(0), &["x", "y", "z", "t", "x'", "y'", "z'", "t'"])
}

/// The generic point of `curve` built from the symbols of [`point_symbols`]
/// (primed symbols when `primed`).
pub fn generic_point(curve: Curve, primed: bool, order: u32) -> Result<Point> {
    let base = if primed { 4 } else { 0 };
    let mut coords: [NcPoly; 4] = std::array::from_fn(|_| NcPoly::zero(order));
    coords[0] = NcPoly::generator(order, base)?;
    let k = curve.free_coordinate();
    coords[k] = NcPoly::generator(order, base + k)?;
    Ok(Point(coords))
}

/// Composes two points of `curve` through Δ_F. Coordinates live over
/// [`point_symbols`].
pub fn group_law_points(curve: Curve, p: &Point, q: &Point, order: u32) -> Result<Point> {
    for (name, pt) in [("first", p), ("second", q)] {
        if !pt.on(curve) {
            return Err(Error::NotOnCurve(format!("{curve} ({name} point)")));
        }
    }
    compose_points(p, q, order)
}

/// Δ_F evaluated at (p, q), after checking the composability conditions:
/// the mixed relations of the braided square must vanish on commuting
/// coordinates.
pub fn compose_points(p: &Point, q: &Point, order: u32) -> Result<Point> {
    let entry = catalog(CatalogName::Sl2Coord, &CatalogParams { order: Some(order), ..Default::default() })?;
    let twisted = entry.twisted()?;
    let b = entry.twist.derived_bicharacter()?;
    let square = braided_tensor(&twisted, &twisted, &b)?;
    let delta = twist_coproduct(entry.coproduct.as_ref().expect("sl2_coord has a coproduct"), &entry.twist)?;

    let images: Vec<NcPoly> = p.0.iter().chain(q.0.iter()).cloned().collect();
    let eval = AlgebraMap::new(square.gens.clone(), point_symbols(order)?, images)?;

    let n = twisted.gens.len();
    for r in &square.relations {
        let mixed = r.terms().any(|(w, _)| w.0.iter().any(|&i| i < n) && w.0.iter().any(|&i| i >= n));
        if mixed {
            let v = eval.apply(r)?.commutative_image();
            if !v.is_zero() {
                return Err(Error::NotComposable(r.render(&square.gens)));
            }
        }
    }
    let coords = delta
        .images
        .iter()
        .map(|d| Ok(eval.apply(d)?.commutative_image()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point(coords.try_into().expect("four coordinates")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;

    fn pt(coords: [&str; 4]) -> Point {
        let s = point_symbols(4).unwrap();
        Point(coords.map(|c| parse_expression(c, &s).unwrap()))
    }

    #[test]
    fn identity_acts_trivially() {
        for c in Curve::ALL {
            let p = generic_point(c, true, 4).unwrap();
            let e = Point::identity(4).unwrap();
            let out = group_law_points(c, &e, &p, 4).unwrap();
            assert_eq!(out, p);
        }
    }

    #[test]
    fn mixed_curves_do_not_compose() {
        let a = generic_point(Curve::C1, false, 4).unwrap();
        let b = generic_point(Curve::C2, true, 4).unwrap();
        assert!(matches!(group_law_points(Curve::C1, &a, &b, 4), Err(Error::NotOnCurve(_))));
        let both = pt(["x", "y", "z", "0"]);
        let other = pt(["x'", "y'", "z'", "0"]);
        assert!(matches!(compose_points(&both, &other, 4), Err(Error::NotComposable(_))));
        let plain = pt(["x'", "y'", "0", "0"]);
        assert!(matches!(compose_points(&both, &plain, 4), Err(Error::NotComposable(_))));
    }
}
