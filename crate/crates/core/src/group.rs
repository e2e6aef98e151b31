//! Finitely generated abelian grading groups Γ = ℤ^r × ∏ ℤ/n_i.
//!
//! Elements are plain coordinate vectors (free coordinates first, then the
//! torsion coordinates reduced into `[0, n_i)`). Group operations go through
//! the owning [`GradingGroup`], which validates membership.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|n| format!("Z/{n}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(n) = torsion.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidParameter(format!("torsion entry {n} must be at least 2")));
        }
        Ok(GradingGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        GradingGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// ℤ/2 × ℤ/2.
    pub fn klein() -> Self {
        GradingGroup { free_rank: 0, torsion: vec![2, 2] }
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Exponent of the torsion subgroup (1 for a free group).
    pub fn exponent(&self) -> u64 {
        self.torsion.iter().fold(1, |acc, n| acc.lcm(n))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// The i-th standard generator ε_i (free coordinates first).
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        GroupElement(v)
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Reduces arbitrary integer coordinates into canonical form.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::GroupMismatch(format!(
                "element {:?} has {} coordinates, group {self} needs {}",
                coords,
                coords.len(),
                self.rank()
            )));
        }
        let mut v = coords.to_vec();
        for (k, n) in self.torsion.iter().enumerate() {
            let idx = self.free_rank + k;
            v[idx] = v[idx].mod_floor(&(*n as i64));
        }
        Ok(GroupElement(v))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(k, n)| (0..*n as i64).contains(&g.0[self.free_rank + k]))
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{g} is not an element of {self}")))
        }
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, h))
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.scale_unchecked(g, -1))
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        let nh = self.neg(h)?;
        self.add(g, &nh)
    }

    pub(crate) fn add_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let mut v: Vec<i64> = g.0.iter().zip(&h.0).map(|(a, b)| a + b).collect();
        self.reduce_in_place(&mut v);
        GroupElement(v)
    }

    pub(crate) fn scale_unchecked(&self, g: &GroupElement, k: i64) -> GroupElement {
        let mut v: Vec<i64> = g.0.iter().map(|a| a * k).collect();
        self.reduce_in_place(&mut v);
        GroupElement(v)
    }

    fn reduce_in_place(&self, v: &mut [i64]) {
        for (k, n) in self.torsion.iter().enumerate() {
            let idx = self.free_rank + k;
            v[idx] = v[idx].mod_floor(&(*n as i64));
        }
    }

    /// Sum of a sequence of elements (identity for the empty sequence).
    pub fn sum<'a>(&self, it: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        it.into_iter().fold(self.identity(), |acc, g| self.add_unchecked(&acc, g))
    }

    /// All elements of a finite group, last coordinate varying fastest.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(Error::NotEnumerable(self.to_string()));
        }
        let mut out = vec![GroupElement(Vec::new())];
        for n in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..*n as i64).map(move |c| {
                        let mut v = g.0.clone();
                        v.push(c);
                        GroupElement(v)
                    })
                })
                .collect();
        }
        Ok(out)
    }

    /// Position of `g` in [`GradingGroup::enumerate`] order.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        if !self.is_finite() {
            return Err(Error::NotEnumerable(self.to_string()));
        }
        self.check(g)?;
        Ok(self
            .torsion
            .iter()
            .zip(&g.0)
            .fold(0usize, |acc, (n, c)| acc * (*n as usize) + *c as usize))
    }

    /// Evaluates the character χ at g under the fixed pairing
    /// ⟨χ, g⟩ = ∏_i ζ_N^{(N/n_i)·χ_i·g_i}.
    pub fn character_value(&self, chi: &GroupElement, g: &GroupElement, order: u32) -> Result<Scalar> {
        if !self.is_finite() {
            return Err(Error::NotEnumerable(self.to_string()));
        }
        self.check(chi)?;
        self.check(g)?;
        let exp = self.exponent();
        if u64::from(order) % exp != 0 {
            return Err(Error::ExponentMismatch { exponent: exp, order });
        }
        let n = i64::from(order);
        let k: i64 = self
            .torsion
            .iter()
            .zip(chi.0.iter().zip(&g.0))
            .map(|(ni, (c, x))| (n / *ni as i64) * c * x)
            .sum();
        Scalar::zeta_pow(order, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[i64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn klein_group_law() {
        let v = GradingGroup::klein();
        assert_eq!(v.add(&el(&[1, 0]), &el(&[1, 1])).unwrap(), el(&[0, 1]));
        let e1 = v.generator(0);
        assert_eq!(v.add(&e1, &e1).unwrap(), v.identity());
    }

    #[test]
    fn free_negation() {
        let z2 = GradingGroup::free(2);
        assert_eq!(z2.neg(&el(&[3, -2])).unwrap(), el(&[-3, 2]));
    }

    #[test]
    fn mismatched_elements_rejected() {
        let v = GradingGroup::klein();
        assert!(matches!(v.add(&el(&[1, 0, 0]), &el(&[0, 1])), Err(Error::GroupMismatch(_))));
        assert!(matches!(v.add(&el(&[2, 0]), &el(&[0, 1])), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn enumeration() {
        assert_eq!(GradingGroup::klein().enumerate().unwrap().len(), 4);
        assert_eq!(GradingGroup::new(0, vec![3]).unwrap().enumerate().unwrap().len(), 3);
        assert!(matches!(GradingGroup::free(2).enumerate(), Err(Error::NotEnumerable(_))));
        let g = GradingGroup::new(0, vec![2, 3]).unwrap();
        for (k, x) in g.enumerate().unwrap().iter().enumerate() {
            assert_eq!(g.index_of(x).unwrap(), k);
        }
    }

    #[test]
    fn torsion_entries_validated() {
        assert!(GradingGroup::new(1, vec![1]).is_err());
    }

    #[test]
    fn klein_characters() {
        // ê_1 = (0,1) kills e_1 = (1,0); ê_2 = (1,0) kills e_2 = (0,1).
        let v = GradingGroup::klein();
        let one = Scalar::one(4).unwrap();
        let minus = Scalar::from_int(4, -1).unwrap();
        let (e1, e2) = (el(&[1, 0]), el(&[0, 1]));
        let (hat1, hat2, hat3) = (el(&[0, 1]), el(&[1, 0]), el(&[1, 1]));
        assert_eq!(v.character_value(&hat1, &e1, 4).unwrap(), one);
        assert_eq!(v.character_value(&hat1, &e2, 4).unwrap(), minus);
        assert_eq!(v.character_value(&hat2, &e2, 4).unwrap(), one);
        assert_eq!(v.character_value(&hat3, &el(&[1, 1]), 4).unwrap(), one);
        for g in v.enumerate().unwrap() {
            assert_eq!(v.character_value(&v.identity(), &g, 4).unwrap(), one);
        }
    }

    #[test]
    fn character_requires_dividing_order() {
        let g = GradingGroup::new(0, vec![3]).unwrap();
        let x = g.generator(0);
        assert!(matches!(g.character_value(&x, &x, 4), Err(Error::ExponentMismatch { .. })));
    }

    #[test]
    fn pairing_is_bimultiplicative_and_perfect() {
        for (group, order) in [(GradingGroup::klein(), 4u32), (GradingGroup::new(0, vec![2, 4]).unwrap(), 8)] {
            let els = group.enumerate().unwrap();
            let cv = |a: &GroupElement, b: &GroupElement| group.character_value(a, b, order).unwrap();
            for chi in &els {
                for g in &els {
                    for h in &els {
                        let gh = group.add(g, h).unwrap();
                        assert_eq!(cv(chi, &gh), &cv(chi, g) * &cv(chi, h));
                        assert_eq!(cv(&gh, chi), &cv(g, chi) * &cv(h, chi));
                    }
                }
            }
            let n = els.len() as i64;
            for chi in &els {
                for psi in &els {
                    let mut s = Scalar::zero(order).unwrap();
                    for g in &els {
                        s = &s + &(&cv(chi, g) * &cv(psi, g).unit_inverse().unwrap());
                    }
                    let expected = if chi == psi { n } else { 0 };
                    assert_eq!(s, Scalar::from_int(order, expected).unwrap());
                }
            }
        }
    }
}
