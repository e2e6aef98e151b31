//! Rewrite systems on words, normal forms and the local confluence check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ncpoly::{GenSet, NcPoly, Word};
use crate::scalar::Scalar;

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl Rule {
    /// Every word of `rhs` must be strictly smaller than `lhs`.
    pub fn new(lhs: Word, rhs: NcPoly) -> Result<Self> {
        if lhs.is_empty() {
            return Err(Error::InvalidRule("empty left side".into()));
        }
        if let Some((w, _)) = rhs.leading() {
            if *w >= lhs {
                return Err(Error::InvalidRule(format!("right side word {:?} is not below {:?}", w.0, lhs.0)));
            }
        }
        Ok(Rule { lhs, rhs })
    }

    /// Orients `p = 0` as `LW → -(p - c·LW)/c` with LW the leading word.
    pub fn from_relation(p: &NcPoly) -> Result<Self> {
        let (lw, c) = p.leading().ok_or_else(|| Error::InvalidRule("zero relation".into()))?;
        let inv = c.unit_inverse()?;
        let lw = lw.clone();
        let mut rest = p.clone();
        rest.add_term(lw.clone(), -c);
        Rule::new(lw, (-&rest).scale(&inv)?)
    }

    pub fn as_relation(&self) -> Result<NcPoly> {
        let one = Scalar::one(self.rhs.order())?;
        NcPoly::monomial(self.lhs.clone(), one).checked_sub(&self.rhs)
    }
}

/// A critical pair whose two reductions have different normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub left: NcPoly,
    pub right: NcPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub ambiguities_checked: usize,
    pub witness: Option<Ambiguity>,
}

/// Rules under the degree-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    order: u32,
    rules: Vec<Rule>,
    budget: usize,
}

impl RewriteSystem {
    pub fn new(order: u32, rules: Vec<Rule>) -> Result<Self> {
        for (k, r) in rules.iter().enumerate() {
            if r.rhs.order() != order {
                return Err(Error::OrderMismatch(r.rhs.order(), order));
            }
            if rules[..k].iter().any(|s| s.lhs == r.lhs) {
                return Err(Error::InvalidRule(format!("duplicate left side {:?}", r.lhs.0)));
            }
        }
        Ok(RewriteSystem { order, rules, budget: DEFAULT_STEP_BUDGET })
    }

    /// Orients the relations one at a time, first reducing each by the
    /// rules already collected; relations reducing to zero are dropped.
    pub fn from_relations(order: u32, relations: &[NcPoly]) -> Result<Self> {
        let mut sys = RewriteSystem::new(order, Vec::new())?;
        for p in relations {
            let r = sys.normalize(p)?;
            if !r.is_zero() {
                sys.rules.push(Rule::from_relation(&r)?);
            }
        }
        Ok(sys)
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// First (position, rule index) at which some left side occurs.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (k, r) in self.rules.iter().enumerate() {
                let n = r.lhs.len();
                if pos + n <= w.len() && w.0[pos..pos + n] == r.lhs.0[..] {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    fn redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for (k, r) in self.rules.iter().enumerate() {
                let n = r.lhs.len();
                if pos + n <= w.len() && w.0[pos..pos + n] == r.lhs.0[..] {
                    out.push((pos, k));
                }
            }
        }
        out
    }

    fn rewrite_at(&self, w: &Word, pos: usize, k: usize, c: &Scalar, into: &mut BTreeMap<Word, Scalar>) {
        let r = &self.rules[k];
        let prefix = Word(w.0[..pos].to_vec());
        let suffix = Word(w.0[pos + r.lhs.len()..].to_vec());
        for (v, d) in r.rhs.terms() {
            let nw = prefix.concat(v).concat(&suffix);
            let nc = c * d;
            match into.get_mut(&nw) {
                Some(e) => {
                    let s = &*e + &nc;
                    if s.is_zero() {
                        into.remove(&nw);
                    } else {
                        *e = s;
                    }
                }
                None => {
                    into.insert(nw, nc);
                }
            }
        }
    }

    /// Normal form, always rewriting the largest pending word at its
    /// leftmost redex.
    pub fn normalize(&self, p: &NcPoly) -> Result<NcPoly> {
        if p.order() != self.order {
            return Err(Error::OrderMismatch(p.order(), self.order));
        }
        let mut pending: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NcPoly::zero(self.order);
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, k)) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(Error::StepBudget(self.budget));
                    }
                    self.rewrite_at(&w, pos, k, &c, &mut pending);
                }
            }
        }
        Ok(out)
    }

    /// Normal form under an arbitrary reduction strategy: `pick(n)` must
    /// return an index below `n` and chooses both the pending word and the
    /// redex inside it.
    pub fn normalize_with(&self, p: &NcPoly, pick: &mut dyn FnMut(usize) -> usize) -> Result<NcPoly> {
        if p.order() != self.order {
            return Err(Error::OrderMismatch(p.order(), self.order));
        }
        let mut pending: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NcPoly::zero(self.order);
        let mut steps = 0usize;
        while !pending.is_empty() {
            let idx = pick(pending.len()) % pending.len();
            let w = pending.keys().nth(idx).expect("index in range").clone();
            let c = pending.remove(&w).expect("present");
            let redexes = self.redexes(&w);
            if redexes.is_empty() {
                out.add_term(w, c);
                continue;
            }
            steps += 1;
            if steps > self.budget {
                return Err(Error::StepBudget(self.budget));
            }
            let (pos, k) = redexes[pick(redexes.len()) % redexes.len()];
            self.rewrite_at(&w, pos, k, &c, &mut pending);
        }
        Ok(out)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Resolves every overlap ambiguity (a suffix of one left side equal to
    /// a prefix of another) and every inclusion ambiguity.
    pub fn check_local_confluence(&self) -> Result<ConfluenceReport> {
        let mut checked = 0;
        let one = Scalar::one(self.order)?;
        let resolve = |word: Word, left: NcPoly, right: NcPoly| -> Result<Option<Ambiguity>> {
            let l = self.normalize(&left)?;
            let r = self.normalize(&right)?;
            Ok((l != r).then_some(Ambiguity { word, left: l, right: r }))
        };
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (a, b) = (&r1.lhs.0, &r2.lhs.0);
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] != b[..k] {
                        continue;
                    }
                    checked += 1;
                    let word = Word([&a[..], &b[k..]].concat());
                    let tail = NcPoly::monomial(Word(b[k..].to_vec()), one.clone());
                    let head = NcPoly::monomial(Word(a[..a.len() - k].to_vec()), one.clone());
                    let left = r1.rhs.checked_mul(&tail)?;
                    let right = head.checked_mul(&r2.rhs)?;
                    if let Some(w) = resolve(word, left, right)? {
                        return Ok(ConfluenceReport { confluent: false, ambiguities_checked: checked, witness: Some(w) });
                    }
                }
                if r1 != r2 && b.len() <= a.len() {
                    if let Some(pos) = r1.lhs.find(&r2.lhs) {
                        checked += 1;
                        let head = NcPoly::monomial(Word(a[..pos].to_vec()), one.clone());
                        let tail = NcPoly::monomial(Word(a[pos + b.len()..].to_vec()), one.clone());
                        let right = head.checked_mul(&r2.rhs)?.checked_mul(&tail)?;
                        if let Some(w) = resolve(r1.lhs.clone(), r1.rhs.clone(), right)? {
                            return Ok(ConfluenceReport {
                                confluent: false,
                                ambiguities_checked: checked,
                                witness: Some(w),
                            });
                        }
                    }
                }
            }
        }
        Ok(ConfluenceReport { confluent: true, ambiguities_checked: checked, witness: None })
    }

    /// Fails with [`Error::NonConfluent`] unless every ambiguity resolves.
    pub fn ensure_confluent(&self, gens: &GenSet) -> Result<()> {
        let rep = self.check_local_confluence()?;
        match rep.witness {
            None => Ok(()),
            Some(a) => Err(Error::NonConfluent(format!(
                "{}: {} vs {}",
                a.word.render(gens),
                a.left.render(gens),
                a.right.render(gens)
            ))),
        }
    }
}

/// `X_j X_i → b(g_i, g_j)·X_i X_j` for every j > i.
pub fn commutation_rules(gens: &GenSet, b: &crate::cocycle::Bicharacter) -> Result<RewriteSystem> {
    if gens.group() != b.group() {
        return Err(Error::GroupMismatch(format!("{} vs {}", gens.group(), b.group())));
    }
    let mut rules = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            let c = b.eval(gens.degree(i), gens.degree(j))?;
            rules.push(Rule::new(Word(vec![j, i]), NcPoly::monomial(Word(vec![i, j]), c))?);
        }
    }
    RewriteSystem::new(gens.order(), rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{Bicharacter, TwoCocycle};
    use crate::group::GradingGroup;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(4, n).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    /// A < B < H with BA → -AB - 2H, HA → -AH + 2B, HB → -BH - 2A.
    fn u_sl2_rules() -> RewriteSystem {
        let r = |lhs: &[usize], terms: &[(&[usize], i64)]| {
            Rule::new(w(lhs), NcPoly::from_terms(4, terms.iter().map(|(v, c)| (w(v), s(*c))))).unwrap()
        };
        RewriteSystem::new(
            4,
            vec![
                r(&[1, 0], &[(&[0, 1], -1), (&[2], -2)]),
                r(&[2, 0], &[(&[0, 2], -1), (&[1], 2)]),
                r(&[2, 1], &[(&[1, 2], -1), (&[0], -2)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn normalize_single_step() {
        let sys = u_sl2_rules();
        let ba = NcPoly::monomial(w(&[1, 0]), s(1));
        let nf = sys.normalize(&ba).unwrap();
        assert_eq!(nf, NcPoly::from_terms(4, [(w(&[0, 1]), s(-1)), (w(&[2]), s(-2))]));
        let ab = NcPoly::monomial(w(&[0, 1]), s(1));
        assert_eq!(sys.normalize(&ab).unwrap(), ab);
    }

    #[test]
    fn hba_overlap_resolves() {
        let sys = u_sl2_rules();
        let rep = sys.check_local_confluence().unwrap();
        assert!(rep.confluent);
        let hba = NcPoly::monomial(w(&[2, 1, 0]), s(1));
        let expected = NcPoly::from_terms(
            4,
            [(w(&[0, 1, 2]), s(-1)), (w(&[0, 0]), s(-2)), (w(&[1, 1]), s(-2)), (w(&[2, 2]), s(-2))],
        );
        assert_eq!(sys.normalize(&hba).unwrap(), expected);
    }

    #[test]
    fn inconsistent_rules_detected() {
        // BA → -AB and BB → A: the overlap BBB reduces to AB one way and
        // to -AB the other.
        let sys = RewriteSystem::new(
            4,
            vec![
                Rule::new(w(&[1, 0]), NcPoly::monomial(w(&[0, 1]), s(-1))).unwrap(),
                Rule::new(w(&[1, 1]), NcPoly::monomial(w(&[0]), s(1))).unwrap(),
            ],
        )
        .unwrap();
        let rep = sys.check_local_confluence().unwrap();
        assert!(!rep.confluent);
        let a = rep.witness.unwrap();
        assert_ne!(a.left, a.right);
    }

    #[test]
    fn rhs_must_be_smaller() {
        assert!(Rule::new(w(&[0, 1]), NcPoly::monomial(w(&[1, 0]), s(1))).is_err());
        assert!(Rule::new(w(&[0]), NcPoly::monomial(w(&[0, 0]), s(1))).is_err());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let sys = u_sl2_rules().with_budget(2);
        let p = NcPoly::monomial(w(&[2, 2, 1, 1, 0, 0]), s(1));
        assert!(matches!(sys.normalize(&p), Err(Error::StepBudget(2))));
    }

    #[test]
    fn q_commutation_rules_are_confluent() {
        let omega = vec![vec![0, 2, -1], vec![-2, 0, 3], vec![1, -3, 0]];
        let grp = GradingGroup::free(3);
        let b = Bicharacter::q_form(grp.clone(), 4, &omega).unwrap();
        let gens = GenSet::new(4, grp.clone(), (0..3).map(|i| (format!("X{i}"), grp.generator(i))).collect()).unwrap();
        let sys = commutation_rules(&gens, &b).unwrap();
        assert!(sys.check_local_confluence().unwrap().confluent);
        let x21 = NcPoly::monomial(w(&[1, 0]), s(1));
        assert_eq!(sys.normalize(&x21).unwrap(), NcPoly::monomial(w(&[0, 1]), Scalar::q_pow(4, 2).unwrap()));
    }

    #[test]
    fn sigma_v_commutation() {
        let sv = TwoCocycle::sigma_v(4).unwrap();
        let b = sv.derived_bicharacter().unwrap();
        let grp = GradingGroup::klein();
        let degs = [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        let gens = GenSet::new(
            4,
            grp,
            ["X", "Y", "Z", "T"]
                .iter()
                .zip(degs)
                .map(|(n, d)| (n.to_string(), crate::group::GroupElement(d)))
                .collect(),
        )
        .unwrap();
        let sys = commutation_rules(&gens, &b).unwrap();
        for r in sys.rules() {
            let c = r.rhs.terms().next().unwrap().1.clone();
            let expected = if r.lhs.0.contains(&0) { 1 } else { -1 };
            assert_eq!(c, s(expected));
        }
        let trivial = Bicharacter::trivial(GradingGroup::klein(), 4).unwrap();
        for r in commutation_rules(&gens, &trivial).unwrap().rules() {
            assert!(r.rhs.terms().next().unwrap().1.is_one());
        }
    }

    #[test]
    fn randomized_strategies_agree() {
        let sys = u_sl2_rules();
        let p = NcPoly::from_terms(4, [(w(&[2, 1, 0, 2]), s(3)), (w(&[1, 1, 0]), s(-1)), (w(&[2, 0, 0]), s(1))]);
        let reference = sys.normalize(&p).unwrap();
        let mut state = 12345u64;
        for _ in 0..20 {
            let mut pick = |n: usize| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) as usize) % n
            };
            assert_eq!(sys.normalize_with(&p, &mut pick).unwrap(), reference);
        }
    }

    #[test]
    fn orientation_from_relation() {
        // ab - ba + 2h = 0  orients as  ba → ab + 2h
        let p = NcPoly::from_terms(4, [(w(&[0, 1]), s(1)), (w(&[1, 0]), s(-1)), (w(&[2]), s(2))]);
        let r = Rule::from_relation(&p).unwrap();
        assert_eq!(r.lhs, w(&[1, 0]));
        assert_eq!(r.rhs, NcPoly::from_terms(4, [(w(&[0, 1]), s(1)), (w(&[2]), s(2))]));
    }
}
