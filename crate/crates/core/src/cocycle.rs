//! Two-cocycles Γ × Γ → units of ℚ(ζ_N)[q^±1] and their bicharacters.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GradingGroup, GroupElement};
use crate::scalar::Scalar;

/// A bimultiplicative map Γ × Γ → units, stored by its values on pairs of
/// standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: GradingGroup,
    order: u32,
    values: Vec<Vec<Scalar>>,
}

impl Bicharacter {
    /// `values[i][j] = b(ε_i, ε_j)`. Values must be units, and on a torsion
    /// coordinate of order n the values must be n-th roots of unity.
    pub fn new(group: GradingGroup, order: u32, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = group.rank();
        if values.len() != r || values.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidBicharacter(format!("expected a {r}x{r} table of generator values")));
        }
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.order() != order {
                    return Err(Error::OrderMismatch(v.order(), order));
                }
                if !v.is_unit() || v.unit_inverse().is_err() {
                    return Err(Error::InvalidBicharacter(format!("b(ε_{i}, ε_{j}) = {v} is not a unit")));
                }
                for idx in [i, j] {
                    if idx >= group.free_rank {
                        let n = group.torsion[idx - group.free_rank] as i64;
                        if !v.pow(n)?.is_one() {
                            return Err(Error::InvalidBicharacter(format!(
                                "b(ε_{i}, ε_{j}) = {v} is not compatible with the torsion order {n}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Bicharacter { group, order, values })
    }

    pub fn trivial(group: GradingGroup, order: u32) -> Result<Self> {
        let r = group.rank();
        let one = Scalar::one(order)?;
        Self::new(group, order, vec![vec![one; r]; r])
    }

    /// b(x, y) = q^{xᵀ Ω y} for an integer matrix Ω on a free group.
    pub fn q_form(group: GradingGroup, order: u32, omega: &[Vec<i64>]) -> Result<Self> {
        let values = omega
            .iter()
            .map(|row| row.iter().map(|&e| Scalar::q_pow(order, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, order, values)
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn generator_values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    pub fn eval(&self, x: &GroupElement, y: &GroupElement) -> Result<Scalar> {
        if !self.group.contains(x) || !self.group.contains(y) {
            return Err(Error::GroupMismatch(format!("({x}, {y}) not in {}", self.group)));
        }
        let mut acc = Scalar::one(self.order)?;
        for (i, xi) in x.0.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if *yj != 0 {
                    acc = &acc * &self.values[i][j].pow(xi * yj)?;
                }
            }
        }
        Ok(acc)
    }

    /// b(ε_i, ε_i) = 1 and b(ε_i, ε_j)·b(ε_j, ε_i) = 1, which together are
    /// equivalent to b(g, g) = 1 for every g.
    pub fn is_alternating(&self) -> bool {
        let r = self.group.rank();
        (0..r).all(|i| {
            self.values[i][i].is_one() && (0..r).all(|j| (&self.values[i][j] * &self.values[j][i]).is_one())
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(Scalar::is_one)
    }

    pub fn inverse(&self) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(Scalar::unit_inverse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Bicharacter { group: self.group.clone(), order: self.order, values })
    }
}

/// A unit-valued function λ on a finite Γ with λ(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryForm {
    group: GradingGroup,
    order: u32,
    /// Values in [`GradingGroup::enumerate`] order.
    values: Vec<Scalar>,
}

impl CoboundaryForm {
    pub fn new(group: GradingGroup, order: u32, values: Vec<Scalar>) -> Result<Self> {
        let n = group.enumerate()?.len();
        if values.len() != n {
            return Err(Error::InvalidParameter(format!("λ needs {n} values, got {}", values.len())));
        }
        if !values[0].is_one() {
            return Err(Error::InvalidParameter("λ(0) must be 1".into()));
        }
        for v in &values {
            if v.order() != order {
                return Err(Error::OrderMismatch(v.order(), order));
            }
            v.unit_inverse()?;
        }
        Ok(CoboundaryForm { group, order, values })
    }

    pub fn trivial(group: GradingGroup, order: u32) -> Result<Self> {
        let n = group.enumerate()?.len();
        Self::new(group, order, vec![Scalar::one(order)?; n])
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, g: &GroupElement) -> Result<Scalar> {
        Ok(self.values[self.group.index_of(g)?].clone())
    }

    pub fn mul(&self, other: &CoboundaryForm) -> Result<CoboundaryForm> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("coboundary forms on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.checked_mul(b)).collect::<Result<_>>()?;
        Ok(CoboundaryForm { group: self.group.clone(), order: self.order, values })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleKind {
    /// `values[i][j] = σ(g_i, g_j)` in enumeration order of a finite group.
    Table(Vec<Vec<Scalar>>),
    /// σ(x, y) = q^{xᵀ B y} on a free group.
    BilinearQ(Vec<Vec<i64>>),
    /// The section σ(x, y) = ∏_{i>j} b(ε_j, ε_i)^{x_i y_j} of an alternating bicharacter.
    BicharacterSplit(Bicharacter),
    /// ∂λ(g, h) = λ(g) λ(h) λ(g + h)⁻¹.
    Coboundary(CoboundaryForm),
    /// Pointwise (convolution) product.
    Product(Vec<TwoCocycle>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    group: GradingGroup,
    order: u32,
    kind: CocycleKind,
}

/// Outcome of [`TwoCocycle::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub valid: bool,
    pub triples_checked: usize,
    pub witness: Option<[GroupElement; 3]>,
}

impl fmt::Display for TwoCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            CocycleKind::Table(_) => "table",
            CocycleKind::BilinearQ(_) => "bilinear_q",
            CocycleKind::BicharacterSplit(_) => "bicharacter_split",
            CocycleKind::Coboundary(_) => "coboundary",
            CocycleKind::Product(_) => "product",
        };
        write!(f, "{kind} cocycle on {}", self.group)
    }
}

impl TwoCocycle {
    pub fn table(group: GradingGroup, order: u32, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = group.enumerate()?.len();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter(format!("cocycle table must be {n}x{n}")));
        }
        for v in values.iter().flatten() {
            if v.order() != order {
                return Err(Error::OrderMismatch(v.order(), order));
            }
            v.unit_inverse()?;
        }
        Ok(TwoCocycle { group, order, kind: CocycleKind::Table(values) })
    }

    pub fn trivial(group: GradingGroup, order: u32) -> Result<Self> {
        if group.is_finite() {
            let n = group.enumerate()?.len();
            Self::table(group, order, vec![vec![Scalar::one(order)?; n]; n])
        } else {
            let r = group.rank();
            Self::bilinear_q(group, order, vec![vec![0; r]; r])
        }
    }

    pub fn bilinear_q(group: GradingGroup, order: u32, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if !group.torsion.is_empty() {
            return Err(Error::InvalidParameter("bilinear_q cocycles need a free grading group".into()));
        }
        let r = group.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidParameter(format!("bilinear_q matrix must be {r}x{r}")));
        }
        Scalar::one(order)?;
        Ok(TwoCocycle { group, order, kind: CocycleKind::BilinearQ(matrix) })
    }

    /// A cocycle whose derived bicharacter is `b`.
    pub fn from_bicharacter(b: &Bicharacter) -> Result<Self> {
        if !b.is_alternating() {
            return Err(Error::NonAlternating(format!("bicharacter on {}", b.group())));
        }
        Ok(TwoCocycle { group: b.group().clone(), order: b.order(), kind: CocycleKind::BicharacterSplit(b.clone()) })
    }

    pub fn coboundary(lambda: &CoboundaryForm) -> Self {
        TwoCocycle { group: lambda.group.clone(), order: lambda.order, kind: CocycleKind::Coboundary(lambda.clone()) }
    }

    pub fn product(factors: Vec<TwoCocycle>) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::InvalidParameter("empty cocycle product".into()))?;
        let (group, order) = (first.group.clone(), first.order);
        for f in &factors {
            if f.group != group {
                return Err(Error::GroupMismatch(format!("{} vs {}", f.group, group)));
            }
            if f.order != order {
                return Err(Error::OrderMismatch(f.order, order));
            }
        }
        Ok(TwoCocycle { group, order, kind: CocycleKind::Product(factors) })
    }

    /// The Klein-group cocycle with σ(ê_i, ê_i) = −1, σ(ê_1, ê_2) = σ(ê_2, ê_3)
    /// = σ(ê_3, ê_1) = 1, σ(ê_2, ê_1) = σ(ê_3, ê_2) = σ(ê_1, ê_3) = −1 and
    /// normalized on the identity; ê_1 = (0,1), ê_2 = (1,0), ê_3 = (1,1).
    pub fn sigma_v(order: u32) -> Result<Self> {
        let group = GradingGroup::klein();
        let els = group.enumerate()?;
        let hat = |i: usize| -> GroupElement {
            match i {
                1 => GroupElement(vec![0, 1]),
                2 => GroupElement(vec![1, 0]),
                _ => GroupElement(vec![1, 1]),
            }
        };
        let label = |g: &GroupElement| (1..=3).find(|&i| hat(i) == *g);
        let sign = |a: usize, b: usize| -> i64 {
            if a == b || matches!((a, b), (2, 1) | (3, 2) | (1, 3)) {
                -1
            } else {
                1
            }
        };
        let values = els
            .iter()
            .map(|g| {
                els.iter()
                    .map(|h| match (label(g), label(h)) {
                        (Some(a), Some(b)) => Scalar::from_int(order, sign(a, b)),
                        _ => Scalar::one(order),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::table(group, order, values)
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn kind(&self) -> &CocycleKind {
        &self.kind
    }

    pub fn value(&self, g: &GroupElement, h: &GroupElement) -> Result<Scalar> {
        if !self.group.contains(g) || !self.group.contains(h) {
            return Err(Error::GroupMismatch(format!("({g}, {h}) not in {}", self.group)));
        }
        match &self.kind {
            CocycleKind::Table(values) => Ok(values[self.group.index_of(g)?][self.group.index_of(h)?].clone()),
            CocycleKind::BilinearQ(b) => {
                let e: i64 = g
                    .0
                    .iter()
                    .enumerate()
                    .map(|(i, x)| h.0.iter().enumerate().map(|(j, y)| x * b[i][j] * y).sum::<i64>())
                    .sum();
                Scalar::q_pow(self.order, e)
            }
            CocycleKind::BicharacterSplit(b) => {
                let mut acc = Scalar::one(self.order)?;
                for (i, xi) in g.0.iter().enumerate() {
                    for (j, yj) in h.0.iter().enumerate().take(i) {
                        if xi * yj != 0 {
                            acc = &acc * &b.values[j][i].pow(xi * yj)?;
                        }
                    }
                }
                Ok(acc)
            }
            CocycleKind::Coboundary(l) => {
                let gh = self.group.add_unchecked(g, h);
                Ok(&(&l.eval(g)? * &l.eval(h)?) * &l.eval(&gh)?.unit_inverse()?)
            }
            CocycleKind::Product(fs) => {
                let mut acc = Scalar::one(self.order)?;
                for f in fs {
                    acc = &acc * &f.value(g, h)?;
                }
                Ok(acc)
            }
        }
    }

    /// Elements on which the cocycle identity is tested: the whole group
    /// when finite, otherwise 0, ±ε_i and ε_i + ε_j.
    fn test_elements(&self) -> Result<Vec<GroupElement>> {
        if self.group.is_finite() {
            return self.group.enumerate();
        }
        let r = self.group.rank();
        let mut out = vec![self.group.identity()];
        for i in 0..r {
            let e = self.group.generator(i);
            out.push(self.group.scale_unchecked(&e, -1));
            out.push(e);
        }
        for i in 0..r {
            for j in i + 1..r {
                out.push(self.group.add_unchecked(&self.group.generator(i), &self.group.generator(j)));
            }
        }
        Ok(out)
    }

    /// σ(g,h) σ(g+h,k) = σ(h,k) σ(g,h+k): exhaustive on finite groups, on a
    /// generating neighbourhood of 0 otherwise (all built-in infinite kinds
    /// are bimultiplicative).
    pub fn check(&self) -> Result<CocycleCheck> {
        let els = self.test_elements()?;
        let mut n = 0;
        for g in &els {
            for h in &els {
                let gh = self.group.add_unchecked(g, h);
                let sgh = self.value(g, h)?;
                for k in &els {
                    n += 1;
                    let hk = self.group.add_unchecked(h, k);
                    let lhs = &sgh * &self.value(&gh, k)?;
                    let rhs = &self.value(h, k)? * &self.value(g, &hk)?;
                    if lhs != rhs {
                        return Ok(CocycleCheck {
                            valid: false,
                            triples_checked: n,
                            witness: Some([g.clone(), h.clone(), k.clone()]),
                        });
                    }
                }
            }
        }
        Ok(CocycleCheck { valid: true, triples_checked: n, witness: None })
    }

    /// b_σ(g, h) = σ(h, g) σ(g, h)⁻¹, recorded on generator pairs.
    pub fn derived_bicharacter(&self) -> Result<Bicharacter> {
        let gens = self.group.generators();
        let values = gens
            .iter()
            .map(|g| {
                gens.iter()
                    .map(|h| Ok(&self.value(h, g)? * &self.value(g, h)?.unit_inverse()?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Bicharacter::new(self.group.clone(), self.order, values)
    }

    /// Pointwise product σ·τ.
    pub fn convolve(&self, other: &TwoCocycle) -> Result<TwoCocycle> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        if self.group.is_finite() {
            let els = self.group.enumerate()?;
            let values = els
                .iter()
                .map(|g| {
                    els.iter().map(|h| Ok(&self.value(g, h)? * &other.value(g, h)?)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::table(self.group.clone(), self.order, values);
        }
        Self::product(vec![self.clone(), other.clone()])
    }

    /// Pointwise inverse σ⁻¹.
    pub fn inverse(&self) -> Result<TwoCocycle> {
        match &self.kind {
            CocycleKind::BilinearQ(b) => Self::bilinear_q(
                self.group.clone(),
                self.order,
                b.iter().map(|row| row.iter().map(|x| -x).collect()).collect(),
            ),
            CocycleKind::BicharacterSplit(b) => Self::from_bicharacter(&b.inverse()?),
            CocycleKind::Product(fs) => Self::product(fs.iter().map(Self::inverse).collect::<Result<_>>()?),
            _ => {
                let els = self.group.enumerate()?;
                let values = els
                    .iter()
                    .map(|g| els.iter().map(|h| self.value(g, h)?.unit_inverse()).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Self::table(self.group.clone(), self.order, values)
            }
        }
    }

    /// Explicit value table for finite groups.
    pub fn values_table(&self) -> Result<Vec<Vec<Scalar>>> {
        let els = self.group.enumerate()?;
        els.iter().map(|g| els.iter().map(|h| self.value(g, h)).collect()).collect()
    }

    /// Laziness for group-graded cocycles: σ(x₁,y₁) x₂y₂ = x₁y₁ σ(x₂,y₂) with
    /// Δ(g) = g ⊗ g, i.e. both sides equal σ(g,h)·(g+h). Checked on the
    /// same element set as [`TwoCocycle::check`].
    pub fn is_lazy(&self) -> Result<bool> {
        let els = self.test_elements()?;
        for g in &els {
            for h in &els {
                let gh = self.group.add_unchecked(g, h);
                let left = (self.value(g, h)?, gh.clone());
                let right = (self.value(g, h)?, gh);
                if left != right {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Searches for λ with `other = self · ∂λ`.
    ///
    /// λ is fixed by its values on the standard generators, which range over
    /// ζ^a q^m with |m| bounded by the q-degrees occurring in either cocycle;
    /// the remaining values follow from λ(g + ε) = λ(g) λ(ε) ρ(g, ε)⁻¹ with
    /// ρ = other / self, and every candidate is verified on all pairs.
    pub fn are_equivalent(&self, other: &TwoCocycle) -> Result<Option<CoboundaryForm>> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        if self.derived_bicharacter()? != other.derived_bicharacter()? {
            return Ok(None);
        }
        let els = self.group.enumerate()?;
        let n = els.len();
        let mut rho = vec![vec![Scalar::zero(self.order)?; n]; n];
        let mut qbound = 0i64;
        for (a, g) in els.iter().enumerate() {
            for (b, h) in els.iter().enumerate() {
                let s = self.value(g, h)?;
                let t = other.value(g, h)?;
                for v in [&s, &t] {
                    if let Some((lo, hi)) = v.q_degree_range() {
                        qbound = qbound.max(lo.abs()).max(hi.abs());
                    }
                }
                rho[a][b] = &t * &s.unit_inverse()?;
            }
        }
        let mut candidates = Vec::new();
        for m in -qbound..=qbound {
            for a in 0..i64::from(self.order) {
                candidates.push(&Scalar::zeta_pow(self.order, a)? * &Scalar::q_pow(self.order, m)?);
            }
        }
        let r = self.group.rank();
        // For every element: (predecessor index, generator index) with g = pred + ε_gen.
        let mut steps = vec![(0usize, 0usize); n];
        for (k, g) in els.iter().enumerate().skip(1) {
            let i = (0..r).rev().find(|&i| g.0[i] != 0).expect("nonzero element");
            let mut p = g.0.clone();
            p[i] -= 1;
            steps[k] = (self.group.index_of(&GroupElement(p))?, i);
        }
        let gen_idx: Vec<usize> =
            (0..r).map(|i| self.group.index_of(&self.group.generator(i))).collect::<Result<_>>()?;
        let mut choice = vec![0usize; r];
        loop {
            let gen_vals: Vec<&Scalar> = choice.iter().map(|&c| &candidates[c]).collect();
            let mut lambda: Vec<Scalar> = vec![Scalar::one(self.order)?; n];
            for k in 1..n {
                let (p, i) = steps[k];
                lambda[k] = &(&lambda[p] * gen_vals[i]) * &rho[p][gen_idx[i]].unit_inverse()?;
            }
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = self.group.add_unchecked(&els[a], &els[b]);
                    let c = self.group.index_of(&ab).expect("element");
                    let lhs = &lambda[a] * &lambda[b];
                    lhs == &rho[a][b] * &lambda[c]
                })
            });
            if ok {
                return Ok(Some(CoboundaryForm::new(self.group.clone(), self.order, lambda)?));
            }
            // next assignment
            let mut pos = 0;
            loop {
                if pos == r {
                    return Ok(None);
                }
                choice[pos] += 1;
                if choice[pos] < candidates.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(4, n).unwrap()
    }

    fn hat(i: usize) -> GroupElement {
        match i {
            1 => GroupElement(vec![0, 1]),
            2 => GroupElement(vec![1, 0]),
            3 => GroupElement(vec![1, 1]),
            _ => GroupElement(vec![0, 0]),
        }
    }

    fn corrupted_sigma_v() -> TwoCocycle {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let g = sv.group().clone();
        let mut t = sv.values_table().unwrap();
        t[g.index_of(&hat(1)).unwrap()][g.index_of(&hat(3)).unwrap()] = s(1);
        TwoCocycle::table(g, 4, t).unwrap()
    }

    #[test]
    fn trivial_cocycle_is_valid() {
        let c = TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap();
        assert!(c.check().unwrap().valid);
    }

    #[test]
    fn sigma_v_is_a_cocycle() {
        let c = TwoCocycle::sigma_v(4).unwrap().check().unwrap();
        assert!(c.valid);
        assert_eq!(c.triples_checked, 64);
    }

    #[test]
    fn flipped_entry_fails_with_witness() {
        let bad = corrupted_sigma_v();
        let res = bad.check().unwrap();
        assert!(!res.valid);
        let [g, h, k] = res.witness.unwrap();
        let grp = bad.group();
        let lhs = &bad.value(&g, &h).unwrap() * &bad.value(&grp.add(&g, &h).unwrap(), &k).unwrap();
        let rhs = &bad.value(&h, &k).unwrap() * &bad.value(&g, &grp.add(&h, &k).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn sigma_v_table_properties() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let v = |a, b| sv.value(&hat(a), &hat(b)).unwrap();
        for i in 1..=3 {
            assert_eq!(v(i, i), s(-1));
            assert_eq!(v(0, i), s(1));
            assert_eq!(v(i, 0), s(1));
        }
        assert_eq!(v(1, 2), s(1));
        // invariance under the cyclic relabeling ê_1 → ê_2 → ê_3 → ê_1
        let next = |i: usize| if i == 0 { 0 } else { i % 3 + 1 };
        for a in 0..=3 {
            for b in 0..=3 {
                assert_eq!(v(a, b), v(next(a), next(b)));
            }
        }
    }

    #[test]
    fn sigma_v_bicharacter_is_the_determinant_form() {
        let b = TwoCocycle::sigma_v(4).unwrap().derived_bicharacter().unwrap();
        assert_eq!(b.eval(&hat(1), &hat(2)).unwrap(), s(-1));
        assert!(b.is_alternating());
        assert!(!b.is_trivial());
    }

    #[test]
    fn bilinear_q_bicharacter_brute_force() {
        // b(e1, e2) = σ(e2, e1)/σ(e1, e2) evaluated from the definition.
        let alpha = 3;
        for (b12, expected) in [(-alpha, alpha), (alpha, -alpha)] {
            let c = TwoCocycle::bilinear_q(GradingGroup::free(2), 4, vec![vec![0, b12], vec![0, 0]]).unwrap();
            let (e1, e2) = (c.group().generator(0), c.group().generator(1));
            let direct = &c.value(&e2, &e1).unwrap() * &c.value(&e1, &e2).unwrap().unit_inverse().unwrap();
            assert_eq!(direct, Scalar::q_pow(4, expected).unwrap());
            let b = c.derived_bicharacter().unwrap();
            assert_eq!(b.eval(&e1, &e2).unwrap(), direct);
            assert!(b.eval(&e1, &e1).unwrap().is_one());
        }
    }

    #[test]
    fn section_of_bicharacters() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let b = sv.derived_bicharacter().unwrap();
        let sp = TwoCocycle::from_bicharacter(&b).unwrap();
        assert!(sp.check().unwrap().valid);
        let els = sv.group().enumerate().unwrap();
        let b2 = sp.derived_bicharacter().unwrap();
        for g in &els {
            for h in &els {
                assert_eq!(b2.eval(g, h).unwrap(), b.eval(g, h).unwrap());
            }
        }
        // trivial b gives trivial σ
        let t = TwoCocycle::from_bicharacter(&Bicharacter::trivial(GradingGroup::klein(), 4).unwrap()).unwrap();
        for g in &els {
            for h in &els {
                assert!(t.value(g, h).unwrap().is_one());
            }
        }
        // q-form on Z^3
        let omega = vec![vec![0, -1, 2], vec![1, 0, -3], vec![-2, 3, 0]];
        let bq = Bicharacter::q_form(GradingGroup::free(3), 4, &omega).unwrap();
        let c = TwoCocycle::from_bicharacter(&bq).unwrap();
        assert!(c.check().unwrap().valid);
        assert_eq!(c.derived_bicharacter().unwrap(), bq);
    }

    #[test]
    fn non_alternating_rejected() {
        let b = Bicharacter::q_form(GradingGroup::free(1), 4, &[vec![1]]).unwrap();
        assert!(matches!(TwoCocycle::from_bicharacter(&b), Err(Error::NonAlternating(_))));
    }

    #[test]
    fn bicharacter_torsion_compatibility() {
        // ζ_4 is not a square root of unity, so it cannot pair ℤ/2 generators.
        let i = Scalar::zeta(4).unwrap();
        let one = s(1);
        let bad = Bicharacter::new(GradingGroup::klein(), 4, vec![vec![one.clone(), i.clone()], vec![i, one]]);
        assert!(matches!(bad, Err(Error::InvalidBicharacter(_))));
    }

    #[test]
    fn coboundary_examples() {
        let g = GradingGroup::klein();
        let triv = TwoCocycle::coboundary(&CoboundaryForm::trivial(g.clone(), 4).unwrap());
        for x in g.enumerate().unwrap() {
            for y in g.enumerate().unwrap() {
                assert!(triv.value(&x, &y).unwrap().is_one());
            }
        }
        let mut vals = vec![s(1); 4];
        vals[g.index_of(&hat(1)).unwrap()] = Scalar::zeta(4).unwrap();
        let lam = CoboundaryForm::new(g.clone(), 4, vals).unwrap();
        let d = TwoCocycle::coboundary(&lam);
        assert_eq!(d.value(&hat(1), &hat(1)).unwrap(), s(-1));
        assert!(d.check().unwrap().valid);
        assert!(d.derived_bicharacter().unwrap().is_trivial());
    }

    #[test]
    fn convolution_examples() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let sq = sv.convolve(&sv).unwrap();
        assert_eq!(sq, TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap());
        let inv = sv.inverse().unwrap();
        assert_eq!(sv.convolve(&inv).unwrap(), TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap());
        let g = GradingGroup::klein();
        let i = Scalar::zeta(4).unwrap();
        let l1 = CoboundaryForm::new(g.clone(), 4, vec![s(1), i.clone(), s(-1), s(1)]).unwrap();
        let l2 = CoboundaryForm::new(g.clone(), 4, vec![s(1), s(-1), i.clone(), -&i]).unwrap();
        let lhs = TwoCocycle::coboundary(&l1).convolve(&TwoCocycle::coboundary(&l2)).unwrap();
        let rhs = TwoCocycle::coboundary(&l1.mul(&l2).unwrap());
        assert_eq!(lhs.values_table().unwrap(), rhs.values_table().unwrap());
    }

    #[test]
    fn group_mismatch_on_convolve() {
        let a = TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap();
        let b = TwoCocycle::trivial(GradingGroup::new(0, vec![2]).unwrap(), 4).unwrap();
        assert!(matches!(a.convolve(&b), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn equivalence_search() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let lam = sv.are_equivalent(&sv).unwrap().unwrap();
        assert!(lam.values().iter().all(Scalar::is_one));

        let g = GradingGroup::klein();
        let mut vals = vec![s(1); 4];
        vals[g.index_of(&hat(1)).unwrap()] = Scalar::zeta(4).unwrap();
        let l = CoboundaryForm::new(g.clone(), 4, vals).unwrap();
        let tau = sv.convolve(&TwoCocycle::coboundary(&l)).unwrap();
        let w = sv.are_equivalent(&tau).unwrap().expect("witness");
        let rebuilt = sv.convolve(&TwoCocycle::coboundary(&w)).unwrap();
        assert_eq!(rebuilt.values_table().unwrap(), tau.values_table().unwrap());

        let triv = TwoCocycle::trivial(g, 4).unwrap();
        assert_eq!(triv.are_equivalent(&sv).unwrap(), None);
    }

    #[test]
    fn table_cocycles_are_lazy() {
        assert!(TwoCocycle::sigma_v(4).unwrap().is_lazy().unwrap());
        assert!(corrupted_sigma_v().is_lazy().unwrap());
    }
}
