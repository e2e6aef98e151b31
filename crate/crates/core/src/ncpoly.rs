//! Noncommutative polynomials over Γ-graded generators, the κ-transform and
//! twisted products.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cocycle::TwoCocycle;
use crate::error::{Error, Result};
use crate::group::{GradingGroup, GroupElement};
use crate::scalar::Scalar;

/// Names that the expression language reserves for scalars.
pub fn is_reserved(name: &str, order: u32) -> bool {
    name == "q" || name == "zeta" || (order == 4 && name == "i")
}

/// Identifier syntax: a letter or `_`, then letters, digits or `_`, then
/// any number of primes.
pub fn is_identifier(name: &str) -> bool {
    let core = name.trim_end_matches('\'');
    let mut chars = core.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Ordered, graded generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    order: u32,
    group: GradingGroup,
    names: Vec<String>,
    degrees: Vec<GroupElement>,
    lookup: HashMap<String, usize>,
}

impl GenSet {
    pub fn new(order: u32, group: GradingGroup, gens: Vec<(String, GroupElement)>) -> Result<Self> {
        Scalar::one(order)?;
        let mut names = Vec::with_capacity(gens.len());
        let mut degrees = Vec::with_capacity(gens.len());
        let mut lookup = HashMap::new();
        for (k, (name, deg)) in gens.into_iter().enumerate() {
            if !is_identifier(&name) || is_reserved(&name, order) {
                return Err(Error::InvalidParameter(format!("invalid generator name {name:?}")));
            }
            if !group.contains(&deg) {
                return Err(Error::GroupMismatch(format!("degree {deg} of {name} is not in {group}")));
            }
            if lookup.insert(name.clone(), k).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate generator {name}")));
            }
            names.push(name);
            degrees.push(deg);
        }
        Ok(GenSet { order, group, names, degrees, lookup })
    }

    /// Generators with names `names` all placed in degree 0 of `group`.
    pub fn ungraded(order: u32, group: GradingGroup, names: &[&str]) -> Result<Self> {
        let zero = group.identity();
        Self::new(order, group, names.iter().map(|n| (n.to_string(), zero.clone())).collect())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn word_degree(&self, w: &Word) -> GroupElement {
        self.group.sum(w.0.iter().map(|&i| &self.degrees[i]))
    }

    pub fn word_degrees(&self, w: &Word) -> Vec<GroupElement> {
        w.0.iter().map(|&i| self.degrees[i].clone()).collect()
    }

    /// The same generators under new names.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let gens = self.names.iter().zip(&self.degrees).map(|(n, d)| (f(n), d.clone())).collect();
        Self::new(self.order, self.group.clone(), gens)
    }

    /// Unprimed copies followed by primed copies (`x` and `x'`), degrees repeated.
    pub fn doubled(&self) -> Result<Self> {
        self.disjoint_union(&self.renamed(|n| format!("{n}'"))?)
    }

    pub fn disjoint_union(&self, other: &GenSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let gens = self
            .names
            .iter()
            .zip(&self.degrees)
            .chain(other.names.iter().zip(&other.degrees))
            .map(|(n, d)| (n.clone(), d.clone()))
            .collect();
        Self::new(self.order, self.group.clone(), gens)
    }
}

/// A word in the generators, ordered degree-lexicographically: shorter words
/// first, equal lengths compared letter by letter in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Position of the first occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.is_empty() || pat.0.len() > self.0.len() {
            return None;
        }
        self.0.windows(pat.0.len()).position(|w| w == pat.0.as_slice())
    }

    /// Renders the word as `X^2*Y`, with runs collapsed to powers.
    pub fn render(&self, gens: &GenSet) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let g = self.0[k];
            let mut run = 1;
            while k + run < self.0.len() && self.0[k + run] == g {
                run += 1;
            }
            let name = gens.name(g);
            parts.push(if run == 1 { name.to_string() } else { format!("{name}^{run}") });
            k += run;
        }
        parts.join("*")
    }
}

/// A noncommutative polynomial: finitely many words with nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPoly {
    order: u32,
    terms: BTreeMap<Word, Scalar>,
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (&w.0, c))).finish()
    }
}

impl NcPoly {
    pub fn zero(order: u32) -> Self {
        NcPoly { order, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn one(order: u32) -> Result<Self> {
        Ok(Self::constant(Scalar::one(order)?))
    }

    pub fn generator(order: u32, i: usize) -> Result<Self> {
        Ok(Self::monomial(Word::letter(i), Scalar::one(order)?))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NcPoly::zero(c.order());
        p.add_term(w, c);
        p
    }

    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPoly::zero(order);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Largest word in the term order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Adds `c·w` in place, dropping the word if its coefficient cancels.
    ///
    /// # Panics
    /// If `c` has a different cyclotomic order.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        assert_eq!(c.order(), self.order, "cyclotomic order mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_order(&self, other: &NcPoly) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.same_order(other)?;
        let mut out = NcPoly::zero(self.order);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<NcPoly> {
        if c.order() != self.order {
            return Err(Error::OrderMismatch(c.order(), self.order));
        }
        Ok(NcPoly::from_terms(self.order, self.terms.iter().map(|(w, a)| (w.clone(), a * c))))
    }

    pub fn pow(&self, e: u32) -> Result<NcPoly> {
        let mut acc = NcPoly::one(self.order)?;
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Rewrites every coefficient.
    pub fn map_coefficients(&self, mut f: impl FnMut(&Word, &Scalar) -> Result<Scalar>) -> Result<NcPoly> {
        let mut out = NcPoly::zero(self.order);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(w, c)?);
        }
        Ok(out)
    }

    /// Rewrites every word (coefficients of colliding words are added).
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> NcPoly {
        NcPoly::from_terms(self.order, self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Image in the commutative polynomial ring, words sorted.
    pub fn commutative_image(&self) -> NcPoly {
        self.map_words(|w| {
            let mut v = w.0.clone();
            v.sort_unstable();
            Word(v)
        })
    }

    /// Divides by the leading coefficient, which must be a unit.
    pub fn monic(&self) -> Result<NcPoly> {
        match self.leading() {
            None => Ok(self.clone()),
            Some((_, c)) => self.scale(&c.unit_inverse()?),
        }
    }

    /// Largest generator index used plus one.
    pub fn generator_bound(&self) -> usize {
        self.terms.keys().flat_map(|w| w.0.iter()).map(|&i| i + 1).max().unwrap_or(0)
    }

    pub fn check_over(&self, gens: &GenSet) -> Result<()> {
        if self.order != gens.order() {
            return Err(Error::OrderMismatch(self.order, gens.order()));
        }
        if self.generator_bound() > gens.len() {
            return Err(Error::InvalidParameter(format!(
                "polynomial uses generator {} but only {} are declared",
                self.generator_bound() - 1,
                gens.len()
            )));
        }
        Ok(())
    }

    /// Degree if every word has the same degree (zero counts as homogeneous
    /// with no degree).
    pub fn homogeneous_degree(&self, gens: &GenSet) -> Option<Option<GroupElement>> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d = gens.word_degree(w);
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    pub fn is_homogeneous(&self, gens: &GenSet) -> bool {
        self.homogeneous_degree(gens).is_some()
    }

    pub fn homogeneous_components(&self, gens: &GenSet) -> BTreeMap<GroupElement, NcPoly> {
        let mut out: BTreeMap<GroupElement, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(gens.word_degree(w))
                .or_insert_with(|| NcPoly::zero(self.order))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// Replaces generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[NcPoly]) -> Result<NcPoly> {
        if self.generator_bound() > images.len() {
            return Err(Error::InvalidParameter(format!(
                "substitution provides {} images, polynomial needs {}",
                images.len(),
                self.generator_bound()
            )));
        }
        let target_order = images.first().map_or(self.order, NcPoly::order);
        if target_order != self.order {
            return Err(Error::OrderMismatch(target_order, self.order));
        }
        let mut out = NcPoly::zero(self.order);
        for (w, c) in &self.terms {
            let mut acc = NcPoly::constant(c.clone());
            for &i in &w.0 {
                acc = acc.checked_mul(&images[i])?;
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// Shifts every generator index by `offset`.
    pub fn shifted(&self, offset: usize) -> NcPoly {
        self.map_words(|w| Word(w.0.iter().map(|i| i + offset).collect()))
    }

    pub fn render(&self, gens: &GenSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = render_coefficient(c, w.is_empty());
            let word = w.render(gens);
            let piece = match (body.is_empty(), word.is_empty()) {
                (_, true) => body,
                (true, false) => word,
                (false, false) => format!("{body}*{word}"),
            };
            match (k == 0, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&piece);
        }
        out
    }
}

/// `(negative, body)`; `body` is empty for a unit coefficient in front of a
/// nonempty word.
fn render_coefficient(c: &Scalar, bare: bool) -> (bool, String) {
    match c.split_sign() {
        Some((neg, body)) if body == "1" && !bare => (neg, String::new()),
        Some((neg, body)) => (neg, body),
        None if c.terms().count() == 1 => (false, c.to_string()),
        None => (false, format!("({c})")),
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&NcPoly> for &NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: &NcPoly) -> NcPoly {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $tr<NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { order: self.order, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

fn check_cocycle_group(gens: &GenSet, sigma: &TwoCocycle) -> Result<()> {
    if gens.group() != sigma.group() {
        return Err(Error::GroupMismatch(format!("generators graded by {}, cocycle on {}", gens.group(), sigma.group())));
    }
    if gens.order() != sigma.order() {
        return Err(Error::OrderMismatch(gens.order(), sigma.order()));
    }
    Ok(())
}

/// κ for a sequence of degrees: σ(g₁,g₂)⁻¹ σ(g₁+g₂,g₃)⁻¹ ⋯, with σ(0,0) for
/// the empty sequence and 1 for a single degree.
pub fn kappa_scalar(degrees: &[GroupElement], sigma: &TwoCocycle) -> Result<Scalar> {
    let group = sigma.group();
    match degrees {
        [] => {
            let z = group.identity();
            sigma.value(&z, &z)
        }
        [first, rest @ ..] => {
            let mut acc = Scalar::one(sigma.order())?;
            let mut prefix = first.clone();
            if !group.contains(&prefix) {
                return Err(Error::GroupMismatch(format!("{prefix} not in {group}")));
            }
            for g in rest {
                acc = &acc * &sigma.value(&prefix, g)?.unit_inverse()?;
                prefix = group.add(&prefix, g)?;
            }
            Ok(acc)
        }
    }
}

pub fn kappa_word(w: &Word, gens: &GenSet, sigma: &TwoCocycle) -> Result<Scalar> {
    kappa_scalar(&gens.word_degrees(w), sigma)
}

/// The κ-transform: every word is rescaled by its κ scalar.
pub fn twist_relation(p: &NcPoly, gens: &GenSet, sigma: &TwoCocycle) -> Result<NcPoly> {
    p.check_over(gens)?;
    check_cocycle_group(gens, sigma)?;
    p.map_coefficients(|w, c| Ok(c * &kappa_word(w, gens, sigma)?))
}

/// Reads every word as an iterated twisted product, i.e. the inverse of
/// [`twist_relation`].
pub fn twisted_eval(p: &NcPoly, gens: &GenSet, sigma: &TwoCocycle) -> Result<NcPoly> {
    p.check_over(gens)?;
    check_cocycle_group(gens, sigma)?;
    p.map_coefficients(|w, c| Ok(c * &kappa_word(w, gens, sigma)?.unit_inverse()?))
}

/// The twisted product p ∗_σ r, computed component by component:
/// a ∗ b = σ(deg a, deg b)·ab on homogeneous pieces.
pub fn twisted_product(p: &NcPoly, r: &NcPoly, gens: &GenSet, sigma: &TwoCocycle) -> Result<NcPoly> {
    p.check_over(gens)?;
    r.check_over(gens)?;
    check_cocycle_group(gens, sigma)?;
    let mut out = NcPoly::zero(p.order());
    for (gp, a) in p.homogeneous_components(gens) {
        for (gr, b) in r.homogeneous_components(gens) {
            out = out.checked_add(&a.checked_mul(&b)?.scale(&sigma.value(&gp, &gr)?)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(4, n).unwrap()
    }

    fn el(v: &[i64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    /// x, y, z of degrees ê_1, ê_3, ê_2.
    fn tetra_gens() -> GenSet {
        GenSet::new(
            4,
            GradingGroup::klein(),
            vec![("x".into(), el(&[0, 1])), ("y".into(), el(&[1, 1])), ("z".into(), el(&[1, 0]))],
        )
        .unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn deglex_order() {
        assert!(w(&[2]) < w(&[0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert!(Word::empty() < w(&[0]));
    }

    #[test]
    fn kappa_examples() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        assert!(kappa_scalar(&[], &sv).unwrap().is_one());
        assert!(kappa_scalar(&[el(&[0, 1])], &sv).unwrap().is_one());
        assert_eq!(kappa_scalar(&[el(&[0, 1]), el(&[0, 1])], &sv).unwrap(), s(-1));
        // [ê_1, ê_3, ê_2]
        assert_eq!(kappa_scalar(&[el(&[0, 1]), el(&[1, 1]), el(&[1, 0])], &sv).unwrap(), s(1));
    }

    #[test]
    fn twisted_eval_of_xy() {
        let g = tetra_gens();
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let xy = NcPoly::monomial(w(&[0, 1]), s(1));
        assert_eq!(twisted_eval(&xy, &g, &sv).unwrap(), NcPoly::monomial(w(&[0, 1]), s(-1)));
    }

    #[test]
    fn twisted_unit_uses_sigma_00() {
        let g = GradingGroup::new(0, vec![2]).unwrap();
        let two = s(2);
        let tab = vec![vec![two.clone(), two.clone()], vec![two.clone(), two.clone()]];
        let sigma = TwoCocycle::table(g.clone(), 4, tab).unwrap();
        let gens = GenSet::ungraded(4, g, &[]).unwrap();
        let one = NcPoly::one(4).unwrap();
        let half = Scalar::from_rational(4, num_rational::BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(twisted_eval(&one, &gens, &sigma).unwrap(), NcPoly::constant(half));
    }

    #[test]
    fn twisted_product_componentwise() {
        let g = tetra_gens();
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let x = NcPoly::generator(4, 0).unwrap();
        let y = NcPoly::generator(4, 1).unwrap();
        let prod = twisted_product(&(&x + &y), &x, &g, &sv).unwrap();
        let expected = NcPoly::from_terms(4, [(w(&[0, 0]), s(-1)), (w(&[1, 0]), s(1))]);
        assert_eq!(prod, expected);
        let triv = TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap();
        assert_eq!(twisted_product(&(&x + &y), &x, &g, &triv).unwrap(), (&x + &y) * x.clone());
    }

    #[test]
    fn render_forms() {
        let g = GenSet::ungraded(4, GradingGroup::free(0), &["A", "B", "H"]).unwrap();
        let p = NcPoly::from_terms(4, [(w(&[0, 1]), s(-1)), (w(&[2]), s(-2))]);
        assert_eq!(p.render(&g), "-A*B - 2*H");
        let q = NcPoly::from_terms(4, [(w(&[0, 0, 1]), Scalar::zeta(4).unwrap()), (Word::empty(), s(1))]);
        assert_eq!(q.render(&g), "i*A^2*B + 1");
        let c = &s(1) + &Scalar::q_pow(4, 1).unwrap();
        assert_eq!(NcPoly::monomial(w(&[2]), c).render(&g), "(1 + q)*H");
        assert_eq!(NcPoly::zero(4).render(&g), "0");
    }

    #[test]
    fn homogeneous_split() {
        let g = tetra_gens();
        let p = NcPoly::from_terms(4, [(w(&[0]), s(1)), (w(&[0, 0]), s(1)), (Word::empty(), s(-1))]);
        assert!(!p.is_homogeneous(&g));
        let parts = p.homogeneous_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&el(&[0, 0])].len(), 2);
    }

    #[test]
    fn substitution() {
        let x = NcPoly::generator(4, 0).unwrap();
        let y = NcPoly::generator(4, 1).unwrap();
        let p = &x * &y;
        let images = vec![&x + &y, y.clone()];
        assert_eq!(p.substitute(&images).unwrap(), &(&x * &y) + &(&y * &y));
    }

    #[test]
    fn generator_names_validated() {
        let g = GradingGroup::free(0);
        assert!(GenSet::ungraded(4, g.clone(), &["i"]).is_err());
        assert!(GenSet::ungraded(8, g.clone(), &["i"]).is_ok());
        assert!(GenSet::ungraded(4, g.clone(), &["x", "x"]).is_err());
        assert!(GenSet::ungraded(4, g.clone(), &["2x"]).is_err());
        assert!(GenSet::ungraded(4, g, &["x'"]).is_ok());
    }
}
