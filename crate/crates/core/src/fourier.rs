//! Group algebra k[Γ] of a finite grading group, its tensor square and the
//! Drinfeld twist F = Σ σ(χ, ψ) e_χ ⊗ e_ψ attached to a cocycle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cocycle::{CoboundaryForm, TwoCocycle};
use crate::error::{Error, Result};
use crate::group::{GradingGroup, GroupElement};
use crate::scalar::Scalar;

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(e) => {
            let s = &*e + &c;
            if s.is_zero() {
                map.remove(&k);
            } else {
                *e = s;
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

fn require_finite(group: &GradingGroup) -> Result<()> {
    if group.is_finite() {
        Ok(())
    } else {
        Err(Error::NotEnumerable(group.to_string()))
    }
}

/// An element of k[Γ].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: GradingGroup,
    order: u32,
    coeffs: BTreeMap<GroupElement, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(group: GradingGroup, order: u32) -> Result<Self> {
        require_finite(&group)?;
        Scalar::one(order)?;
        Ok(GroupAlgebraElement { group, order, coeffs: BTreeMap::new() })
    }

    pub fn basis(group: GradingGroup, order: u32, g: GroupElement) -> Result<Self> {
        let mut out = Self::zero(group, order)?;
        out.add_term(g, Scalar::one(order)?)?;
        Ok(out)
    }

    pub fn one(group: GradingGroup, order: u32) -> Result<Self> {
        let id = group.identity();
        Self::basis(group, order, id)
    }

    /// e_χ = |Γ|⁻¹ Σ_g χ(g)⁻¹ g.
    pub fn idempotent(group: GradingGroup, order: u32, chi: &GroupElement) -> Result<Self> {
        let els = group.enumerate()?;
        let inv_n = BigRational::new(BigInt::from(1), BigInt::from(els.len()));
        let mut out = Self::zero(group.clone(), order)?;
        for g in els {
            let c = group.character_value(chi, &g, order)?.unit_inverse()?.scale_rational(&inv_n);
            out.add_term(g, c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, g: GroupElement, c: Scalar) -> Result<()> {
        if !self.group.contains(&g) {
            return Err(Error::GroupMismatch(format!("{g} not in {}", self.group)));
        }
        if c.order() != self.order {
            return Err(Error::OrderMismatch(c.order(), self.order));
        }
        add_into(&mut self.coeffs, g, c);
        Ok(())
    }

    pub fn coefficient(&self, g: &GroupElement) -> Option<&Scalar> {
        self.coeffs.get(g)
    }

    pub fn coeffs(&self) -> &BTreeMap<GroupElement, Scalar> {
        &self.coeffs
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = GroupAlgebraElement { group: self.group.clone(), order: self.order, coeffs: BTreeMap::new() };
        for (g, a) in &self.coeffs {
            add_into(&mut out.coeffs, g.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        let mut out = Self::zero(self.group.clone(), self.order)?;
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                add_into(&mut out.coeffs, self.group.add_unchecked(g, h), a * b);
            }
        }
        Ok(out)
    }

    /// Δ(g) = g ⊗ g extended linearly.
    pub fn coproduct(&self) -> GroupAlgebraTensor {
        let mut out = GroupAlgebraTensor { group: self.group.clone(), order: self.order, coeffs: BTreeMap::new() };
        for (g, c) in &self.coeffs {
            add_into(&mut out.coeffs, (g.clone(), g.clone()), c.clone());
        }
        out
    }

    pub fn tensor(&self, other: &Self) -> Result<GroupAlgebraTensor> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        let mut out = GroupAlgebraTensor { group: self.group.clone(), order: self.order, coeffs: BTreeMap::new() };
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                add_into(&mut out.coeffs, (g.clone(), h.clone()), a * b);
            }
        }
        Ok(out)
    }
}

/// An element of k[Γ] ⊗ k[Γ].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraTensor {
    group: GradingGroup,
    order: u32,
    coeffs: BTreeMap<(GroupElement, GroupElement), Scalar>,
}

impl GroupAlgebraTensor {
    pub fn zero(group: GradingGroup, order: u32) -> Result<Self> {
        require_finite(&group)?;
        Scalar::one(order)?;
        Ok(GroupAlgebraTensor { group, order, coeffs: BTreeMap::new() })
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, g: GroupElement, h: GroupElement, c: Scalar) -> Result<()> {
        if !self.group.contains(&g) || !self.group.contains(&h) {
            return Err(Error::GroupMismatch(format!("({g}, {h}) not in {}", self.group)));
        }
        if c.order() != self.order {
            return Err(Error::OrderMismatch(c.order(), self.order));
        }
        add_into(&mut self.coeffs, (g, h), c);
        Ok(())
    }

    /// Coefficient of g ⊗ h (zero when absent).
    pub fn coefficient(&self, g: &GroupElement, h: &GroupElement) -> Result<Scalar> {
        match self.coeffs.get(&(g.clone(), h.clone())) {
            Some(c) => Ok(c.clone()),
            None => Scalar::zero(self.order),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<(GroupElement, GroupElement), Scalar> {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        let mut out = Self::zero(self.group.clone(), self.order)?;
        for ((g1, h1), a) in &self.coeffs {
            for ((g2, h2), b) in &other.coeffs {
                let key = (self.group.add_unchecked(g1, g2), self.group.add_unchecked(h1, h2));
                add_into(&mut out.coeffs, key, a * b);
            }
        }
        Ok(out)
    }
}

/// F = Σ_{χ,ψ} σ(χ, ψ) e_χ ⊗ e_ψ.
pub fn cocycle_to_twist(sigma: &TwoCocycle) -> Result<GroupAlgebraTensor> {
    let group = sigma.group().clone();
    let order = sigma.order();
    let els = group.enumerate()?;
    let idem: Vec<GroupAlgebraElement> =
        els.iter().map(|chi| GroupAlgebraElement::idempotent(group.clone(), order, chi)).collect::<Result<_>>()?;
    let mut out = GroupAlgebraTensor::zero(group, order)?;
    for (a, chi) in els.iter().enumerate() {
        for (b, psi) in els.iter().enumerate() {
            let s = sigma.value(chi, psi)?;
            for (g, x) in idem[a].coeffs() {
                for (h, y) in idem[b].coeffs() {
                    out.add_term(g.clone(), h.clone(), &(&s * x) * y)?;
                }
            }
        }
    }
    Ok(out)
}

/// (a ⊗ a)·Δ(a⁻¹) for a = Σ λ(χ) e_χ.
pub fn trivial_twist(lambda: &CoboundaryForm, order: u32) -> Result<GroupAlgebraTensor> {
    let group = lambda.group().clone();
    let els = group.enumerate()?;
    let mut a = GroupAlgebraElement::zero(group.clone(), order)?;
    let mut a_inv = GroupAlgebraElement::zero(group.clone(), order)?;
    for (chi, l) in els.iter().zip(lambda.values()) {
        let e = GroupAlgebraElement::idempotent(group.clone(), order, chi)?;
        a = a.add(&e.scale(l))?;
        a_inv = a_inv.add(&e.scale(&l.unit_inverse()?))?;
    }
    a.tensor(&a)?.mul(&a_inv.coproduct())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[i64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let g = GradingGroup::klein();
        let els = g.enumerate().unwrap();
        let idem: Vec<_> = els.iter().map(|c| GroupAlgebraElement::idempotent(g.clone(), 4, c).unwrap()).collect();
        let mut sum = GroupAlgebraElement::zero(g.clone(), 4).unwrap();
        for (a, e) in idem.iter().enumerate() {
            sum = sum.add(e).unwrap();
            for (b, f) in idem.iter().enumerate() {
                let p = e.mul(f).unwrap();
                if a == b {
                    assert_eq!(&p, e);
                } else {
                    assert!(p.coeffs().is_empty());
                }
            }
        }
        assert_eq!(sum, GroupAlgebraElement::one(g, 4).unwrap());
    }

    #[test]
    fn trivial_cocycle_gives_unit_tensor() {
        let f = cocycle_to_twist(&TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap()).unwrap();
        assert_eq!(f.coeffs().len(), 1);
        assert!(f.coefficient(&el(&[0, 0]), &el(&[0, 0])).unwrap().is_one());
    }

    #[test]
    fn infinite_group_rejected() {
        let c = TwoCocycle::trivial(GradingGroup::free(1), 4).unwrap();
        assert!(matches!(cocycle_to_twist(&c), Err(Error::NotEnumerable(_))));
    }
}
