//! Built-in presentations with their gradings, twisting cocycles and
//! coproducts.

use std::fmt;
use std::str::FromStr;

use crate::cocycle::{Bicharacter, TwoCocycle};
use crate::error::{Error, Result};
use crate::group::{GradingGroup, GroupElement};
use crate::ncpoly::{GenSet, NcPoly};
use crate::parse::parse_expression;
use crate::presentation::{twist_presentation, AlgebraMap, CoproductSpec, GradedPresentation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    PolyRing,
    Torus,
    Tetrahedron,
    Sl2Coord,
    USl2,
    USl2Xyz,
    PolyRingRootOfUnity,
}

impl CatalogName {
    pub const ALL: [CatalogName; 7] = [
        CatalogName::PolyRing,
        CatalogName::Torus,
        CatalogName::Tetrahedron,
        CatalogName::Sl2Coord,
        CatalogName::USl2,
        CatalogName::USl2Xyz,
        CatalogName::PolyRingRootOfUnity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::PolyRing => "poly_ring",
            CatalogName::Torus => "torus",
            CatalogName::Tetrahedron => "tetrahedron",
            CatalogName::Sl2Coord => "sl2_coord",
            CatalogName::USl2 => "u_sl2",
            CatalogName::USl2Xyz => "u_sl2_xyz",
            CatalogName::PolyRingRootOfUnity => "poly_ring_root_of_unity",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentifier(format!("catalog entry {s}")))
    }
}

/// Optional parameters; unset fields take per-entry defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogParams {
    /// Number of variables.
    pub n: Option<usize>,
    /// Integer exponents α_ij; only the strictly upper part is read.
    pub alpha: Option<Vec<Vec<i64>>>,
    /// Root-of-unity order for `poly_ring_root_of_unity`.
    pub r: Option<u64>,
    /// Cyclotomic order N of the scalars (default 4).
    pub order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub presentation: GradedPresentation,
    /// The cocycle the entry is meant to be twisted by.
    pub twist: TwoCocycle,
    pub coproduct: Option<CoproductSpec>,
    /// Expresses the generators in terms of those of another presentation
    /// (for `u_sl2_xyz`: X, Y, Z in terms of the twisted A, B, H).
    pub substitution: Option<AlgebraMap>,
}

impl CatalogEntry {
    pub fn twisted(&self) -> Result<GradedPresentation> {
        twist_presentation(&self.presentation, &self.twist)
    }
}

pub const DEFAULT_ORDER: u32 = 4;

fn klein(v: [i64; 2]) -> GroupElement {
    GroupElement(v.to_vec())
}

fn parse_all(texts: &[&str], gens: &GenSet) -> Result<Vec<NcPoly>> {
    texts.iter().map(|t| parse_expression(t, gens)).collect()
}

/// `g_i g_j - g_j g_i` for all i < j.
fn commutators(gens: &GenSet) -> Result<Vec<NcPoly>> {
    let order = gens.order();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (a, b) = (NcPoly::generator(order, i)?, NcPoly::generator(order, j)?);
            out.push(&(&a * &b) - &(&b * &a));
        }
    }
    Ok(out)
}

fn alpha_matrix(params: &CatalogParams, n: usize) -> Result<Vec<Vec<i64>>> {
    let alpha = params.alpha.clone().unwrap_or_else(|| {
        (0..n).map(|i| (0..n).map(|j| i64::from(j > i)).collect()).collect()
    });
    if alpha.len() != n || alpha.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameter(format!("alpha must be {n}x{n}")));
    }
    Ok((0..n).map(|i| (0..n).map(|j| if j > i { alpha[i][j] } else { 0 }).collect()).collect())
}

pub fn catalog(name: CatalogName, params: &CatalogParams) -> Result<CatalogEntry> {
    let order = params.order.unwrap_or(DEFAULT_ORDER);
    match name {
        CatalogName::PolyRing => poly_ring(order, params),
        CatalogName::Torus => torus(order, params),
        CatalogName::Tetrahedron => tetrahedron(order),
        CatalogName::Sl2Coord => sl2_coord(order),
        CatalogName::USl2 => u_sl2(order),
        CatalogName::USl2Xyz => u_sl2_xyz(order),
        CatalogName::PolyRingRootOfUnity => poly_ring_root_of_unity(order, params),
    }
}

fn poly_ring(order: u32, params: &CatalogParams) -> Result<CatalogEntry> {
    let n = params.n.unwrap_or(3);
    let group = GradingGroup::free(n);
    let gens = GenSet::new(order, group.clone(), (0..n).map(|i| (format!("x{}", i + 1), group.generator(i))).collect())?;
    let relations = commutators(&gens)?;
    let twist = TwoCocycle::bilinear_q(group, order, alpha_matrix(params, n)?)?;
    Ok(CatalogEntry {
        name: CatalogName::PolyRing,
        presentation: GradedPresentation::new(gens, relations)?,
        twist,
        coproduct: None,
        substitution: None,
    })
}

fn torus(order: u32, params: &CatalogParams) -> Result<CatalogEntry> {
    let n = params.n.unwrap_or(2);
    let group = GradingGroup::free(n);
    let mut spec: Vec<(String, GroupElement)> = (0..n).map(|i| (format!("x{}", i + 1), group.generator(i))).collect();
    spec.extend((0..n).map(|i| (format!("y{}", i + 1), group.scale_unchecked(&group.generator(i), -1))));
    let gens = GenSet::new(order, group.clone(), spec)?;
    let mut relations = commutators(&gens)?;
    for i in 0..n {
        let xy = &NcPoly::generator(order, i)? * &NcPoly::generator(order, n + i)?;
        relations.push(&xy - &NcPoly::one(order)?);
    }
    let twist = TwoCocycle::bilinear_q(group, order, alpha_matrix(params, n)?)?;
    Ok(CatalogEntry {
        name: CatalogName::Torus,
        presentation: GradedPresentation::new(gens, relations)?,
        twist,
        coproduct: None,
        substitution: None,
    })
}

/// The four planes p_1 … p_4 as commutative linear forms in x, y, z.
pub const TETRAHEDRON_PLANES: [&str; 4] = ["x + y + z - 1", "x - y - z - 1", "-x - y + z - 1", "-x + y - z - 1"];

fn tetrahedron(order: u32) -> Result<CatalogEntry> {
    let gens = GenSet::new(
        order,
        GradingGroup::klein(),
        vec![("x".into(), klein([0, 1])), ("y".into(), klein([1, 1])), ("z".into(), klein([1, 0]))],
    )?;
    let mut quartic = NcPoly::one(order)?;
    for plane in TETRAHEDRON_PLANES {
        quartic = quartic.checked_mul(&parse_expression(plane, &gens)?)?;
    }
    let mut relations = commutators(&gens)?;
    relations.push(quartic.commutative_image());
    Ok(CatalogEntry {
        name: CatalogName::Tetrahedron,
        presentation: GradedPresentation::new(gens, relations)?,
        twist: TwoCocycle::sigma_v(order)?,
        coproduct: None,
        substitution: None,
    })
}

pub fn sl2_gens(order: u32) -> Result<GenSet> {
    GenSet::new(
        order,
        GradingGroup::klein(),
        vec![
            ("x".into(), klein([0, 0])),
            ("y".into(), klein([0, 1])),
            ("z".into(), klein([1, 0])),
            ("t".into(), klein([1, 1])),
        ],
    )
}

fn sl2_coord(order: u32) -> Result<CatalogEntry> {
    let gens = sl2_gens(order)?;
    let mut relations = parse_all(&["x^2 - y^2 - z^2 + t^2 - 1"], &gens)?;
    relations.extend(commutators(&gens)?);
    let doubled = gens.doubled()?;
    let images = parse_all(
        &[
            "x*x' + y*y' + z*z' - t*t'",
            "x*y' + y*x' - z*t' + t*z'",
            "x*z' + y*t' + z*x' - t*y'",
            "x*t' + y*z' - z*y' + t*x'",
        ],
        &doubled,
    )?;
    Ok(CatalogEntry {
        name: CatalogName::Sl2Coord,
        presentation: GradedPresentation::new(gens.clone(), relations)?,
        twist: TwoCocycle::sigma_v(order)?,
        coproduct: Some(AlgebraMap::new(gens, doubled, images)?),
        substitution: None,
    })
}

pub fn u_sl2_gens(order: u32) -> Result<GenSet> {
    GenSet::new(
        order,
        GradingGroup::klein(),
        vec![("a".into(), klein([1, 0])), ("b".into(), klein([1, 1])), ("h".into(), klein([0, 1]))],
    )
}

fn u_sl2(order: u32) -> Result<CatalogEntry> {
    let gens = u_sl2_gens(order)?;
    let relations = parse_all(&["a*b - b*a + 2*h", "a*h - h*a + 2*b", "b*h - h*b + 2*a"], &gens)?;
    Ok(CatalogEntry {
        name: CatalogName::USl2,
        presentation: GradedPresentation::new(gens.clone(), relations)?,
        twist: TwoCocycle::sigma_v(order)?,
        coproduct: Some(AlgebraMap::primitive(&gens)?),
        substitution: None,
    })
}

fn u_sl2_xyz(order: u32) -> Result<CatalogEntry> {
    if !order.is_multiple_of(4) {
        return Err(Error::InvalidParameter("u_sl2_xyz needs a square root of -1 (N divisible by 4)".into()));
    }
    let group = GradingGroup::klein();
    let gens = GenSet::ungraded(order, group.clone(), &["X", "Y", "Z"])?;
    let relations = parse_all(&["X*Z + Z*X - 2*X", "Y*Z + Z*Y + 2*Y", "X^2 - Y^2 - Z"], &gens)?;
    let abh = u_sl2_gens(order)?.renamed(crate::presentation::capitalize)?;
    let root = if order == 4 { "i".to_string() } else { format!("zeta^{}", order / 4) };
    let images = parse_all(
        &[&format!("(B + {root}*A)/2"), &format!("(B - {root}*A)/2"), &format!("-{root}*H")],
        &abh,
    )?;
    Ok(CatalogEntry {
        name: CatalogName::USl2Xyz,
        presentation: GradedPresentation::new(gens.clone(), relations)?,
        twist: TwoCocycle::trivial(group, order)?,
        coproduct: Some(AlgebraMap::primitive(&gens)?),
        substitution: Some(AlgebraMap::new(gens, abh, images)?),
    })
}

fn poly_ring_root_of_unity(order: u32, params: &CatalogParams) -> Result<CatalogEntry> {
    let r = params.r.unwrap_or(4);
    let n = params.n.unwrap_or(2);
    if r < 2 || u64::from(order) % r != 0 {
        return Err(Error::ExponentMismatch { exponent: r, order });
    }
    let group = GradingGroup::new(0, vec![r; n])?;
    let gens = GenSet::new(order, group.clone(), (0..n).map(|i| (format!("x{}", i + 1), group.generator(i))).collect())?;
    let alpha = params.alpha.clone().unwrap_or_else(|| {
        (0..n).map(|i| (0..n).map(|j| i64::from(j == i + 1)).collect()).collect()
    });
    let alpha = alpha_matrix(&CatalogParams { alpha: Some(alpha), ..Default::default() }, n)?;
    let step = i64::from(order) / r as i64;
    let mut values = vec![vec![Scalar::one(order)?; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            values[i][j] = Scalar::zeta_pow(order, -step * alpha[i][j])?;
            values[j][i] = Scalar::zeta_pow(order, step * alpha[i][j])?;
        }
    }
    let b = Bicharacter::new(group, order, values)?;
    Ok(CatalogEntry {
        name: CatalogName::PolyRingRootOfUnity,
        presentation: GradedPresentation::new(gens.clone(), commutators(&gens)?)?,
        twist: TwoCocycle::from_bicharacter(&b)?,
        coproduct: None,
        substitution: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Word;

    #[test]
    fn names_round_trip() {
        for n in CatalogName::ALL {
            assert_eq!(n.as_str().parse::<CatalogName>().unwrap(), n);
            catalog(n, &CatalogParams::default()).unwrap();
        }
        assert!("nope".parse::<CatalogName>().is_err());
    }

    #[test]
    fn root_of_unity_commutation() {
        let e = catalog(CatalogName::PolyRingRootOfUnity, &CatalogParams::default()).unwrap();
        let t = e.twisted().unwrap();
        assert_eq!(t.relations.len(), 1);
        // X1 X2 - ζ X2 X1
        let rel = t.relations[0].monic().unwrap();
        let zeta = Scalar::zeta(4).unwrap();
        let expected = NcPoly::from_terms(
            4,
            [(Word(vec![1, 0]), Scalar::one(4).unwrap()), (Word(vec![0, 1]), -&zeta.unit_inverse().unwrap())],
        );
        assert_eq!(rel, expected);
        let b = e.twist.derived_bicharacter().unwrap();
        let g = e.presentation.gens.group();
        assert_eq!(b.eval(&g.generator(1), &g.generator(0)).unwrap(), zeta);
    }

    #[test]
    fn root_of_unity_requires_dividing_order() {
        let p = CatalogParams { r: Some(3), ..Default::default() };
        assert!(catalog(CatalogName::PolyRingRootOfUnity, &p).is_err());
    }
}
