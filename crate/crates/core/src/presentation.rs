//! Graded presentations and whole-presentation operations.

use crate::cocycle::{Bicharacter, TwoCocycle};
use crate::error::{Error, Result};
use crate::ncpoly::{twist_relation, GenSet, NcPoly, Word};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;

/// k⟨gens⟩ / (relations), with the cocycle already applied (if any).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    pub gens: GenSet,
    pub relations: Vec<NcPoly>,
    pub cocycle: Option<TwoCocycle>,
    /// Refuse to split inhomogeneous relations when twisting.
    pub no_split: bool,
}

impl GradedPresentation {
    pub fn new(gens: GenSet, relations: Vec<NcPoly>) -> Result<Self> {
        for r in &relations {
            r.check_over(&gens)?;
        }
        Ok(GradedPresentation { gens, relations, cocycle: None, no_split: false })
    }

    pub fn order(&self) -> u32 {
        self.gens.order()
    }

    pub fn rewrite_system(&self) -> Result<RewriteSystem> {
        RewriteSystem::from_relations(self.order(), &self.relations)
    }

    /// The oriented relations, checked for local confluence.
    pub fn confluent_system(&self) -> Result<RewriteSystem> {
        let sys = self.rewrite_system()?;
        sys.ensure_confluent(&self.gens)?;
        Ok(sys)
    }

    pub fn render_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(&self.gens)).collect()
    }

    /// Relations split into homogeneous components (zero parts dropped).
    pub fn homogeneous_relations(&self) -> Result<Vec<NcPoly>> {
        let mut out = Vec::new();
        for r in &self.relations {
            if r.is_homogeneous(&self.gens) {
                if !r.is_zero() {
                    out.push(r.clone());
                }
            } else if self.no_split {
                return Err(Error::Grading(format!("inhomogeneous relation {}", r.render(&self.gens))));
            } else {
                out.extend(r.homogeneous_components(&self.gens).into_values());
            }
        }
        Ok(out)
    }
}

/// `x` → `X`, `x'` → `X'`; other names are kept.
pub fn capitalize(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) => c.to_ascii_uppercase().to_string() + chars.as_str(),
        None => String::new(),
    }
}

/// Replaces every relation p by κ(p); generators are renamed x → X and the
/// attached cocycle becomes σ·(previous cocycle).
pub fn twist_presentation(p: &GradedPresentation, sigma: &TwoCocycle) -> Result<GradedPresentation> {
    let relations = p
        .homogeneous_relations()?
        .iter()
        .map(|r| twist_relation(r, &p.gens, sigma))
        .collect::<Result<Vec<_>>>()?;
    let cocycle = match &p.cocycle {
        Some(old) => sigma.convolve(old)?,
        None => sigma.clone(),
    };
    Ok(GradedPresentation {
        gens: p.gens.renamed(capitalize)?,
        relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
        cocycle: Some(cocycle),
        no_split: p.no_split,
    })
}

/// P ⊗^b Q: generators of P, then those of Q primed; relations of both and
/// the cross rules V'U = b(deg U, deg V')·UV'.
pub fn braided_tensor(p: &GradedPresentation, q: &GradedPresentation, b: &Bicharacter) -> Result<GradedPresentation> {
    if p.gens.group() != q.gens.group() || p.gens.group() != b.group() {
        return Err(Error::GroupMismatch(format!("{} / {} / {}", p.gens.group(), q.gens.group(), b.group())));
    }
    let primed = q.gens.renamed(|n| format!("{n}'"))?;
    let gens = p.gens.disjoint_union(&primed)?;
    let n = p.gens.len();
    let mut relations = p.relations.clone();
    relations.extend(q.relations.iter().map(|r| r.shifted(n)));
    let one = Scalar::one(gens.order())?;
    for u in 0..n {
        for v in 0..q.gens.len() {
            let c = b.eval(p.gens.degree(u), q.gens.degree(v))?;
            let mut rel = NcPoly::monomial(Word(vec![n + v, u]), one.clone());
            rel.add_term(Word(vec![u, n + v]), -&c);
            relations.push(rel);
        }
    }
    GradedPresentation::new(gens, relations)
}

/// An algebra map given on generators: `images[i]` is the image of source
/// generator i, a polynomial over `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub source: GenSet,
    pub target: GenSet,
    pub images: Vec<NcPoly>,
}

/// A coproduct: an algebra map into the doubled generator set.
pub type CoproductSpec = AlgebraMap;

impl AlgebraMap {
    pub fn new(source: GenSet, target: GenSet, images: Vec<NcPoly>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::InvalidParameter(format!(
                "{} images for {} generators",
                images.len(),
                source.len()
            )));
        }
        for im in &images {
            im.check_over(&target)?;
        }
        Ok(AlgebraMap { source, target, images })
    }

    /// gen ↦ gen + gen'.
    pub fn primitive(gens: &GenSet) -> Result<Self> {
        let target = gens.doubled()?;
        let n = gens.len();
        let images = (0..n)
            .map(|i| Ok(&NcPoly::generator(gens.order(), i)? + &NcPoly::generator(gens.order(), n + i)?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens.clone(), target, images)
    }

    pub fn identity(gens: &GenSet) -> Result<Self> {
        let images = (0..gens.len()).map(|i| NcPoly::generator(gens.order(), i)).collect::<Result<Vec<_>>>()?;
        Self::new(gens.clone(), gens.clone(), images)
    }

    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly> {
        p.check_over(&self.source)?;
        p.substitute(&self.images)
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &AlgebraMap) -> Result<AlgebraMap> {
        if self.target != then.source {
            return Err(Error::InvalidParameter("maps are not composable".into()));
        }
        let images = self.images.iter().map(|p| then.apply(p)).collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(self.source.clone(), then.target.clone(), images)
    }

    /// The same map on both tensor factors: gens ⊔ gens' → target ⊔ target'.
    pub fn doubled(&self) -> Result<AlgebraMap> {
        let shift = self.target.len();
        let mut images = self.images.clone();
        images.extend(self.images.iter().map(|p| p.shifted(shift)));
        AlgebraMap::new(self.source.doubled()?, self.target.doubled()?, images)
    }

    pub fn render(&self) -> Vec<(String, String)> {
        self.source.names().iter().cloned().zip(self.images.iter().map(|p| p.render(&self.target))).collect()
    }
}

/// Rewrites every word of every image through κ over the target grading
/// and renames generators x → X on both sides.
pub fn twist_coproduct(delta: &CoproductSpec, sigma: &TwoCocycle) -> Result<CoproductSpec> {
    let images =
        delta.images.iter().map(|p| twist_relation(p, &delta.target, sigma)).collect::<Result<Vec<_>>>()?;
    AlgebraMap::new(delta.source.renamed(capitalize)?, delta.target.renamed(capitalize)?, images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub holds: bool,
    /// (relation index, nonzero normal form of its image)
    pub failures: Vec<(usize, NcPoly)>,
}

/// Checks that every source relation maps to zero in the target, using the
/// target's (confluent) rewrite system.
pub fn verify_homomorphism(
    map: &AlgebraMap,
    source: &GradedPresentation,
    target: &GradedPresentation,
) -> Result<HomomorphismCheck> {
    if map.source.len() != source.gens.len() || map.target.len() != target.gens.len() {
        return Err(Error::InvalidParameter("map does not match the presentations".into()));
    }
    let sys = target.confluent_system()?;
    let mut failures = Vec::new();
    for (k, r) in source.relations.iter().enumerate() {
        let nf = sys.normalize(&map.apply(r)?)?;
        if !nf.is_zero() {
            failures.push((k, nf));
        }
    }
    Ok(HomomorphismCheck { holds: failures.is_empty(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GradingGroup, GroupElement};
    use crate::parse::parse_expression;

    fn klein_gens(spec: &[(&str, [i64; 2])]) -> GenSet {
        GenSet::new(
            4,
            GradingGroup::klein(),
            spec.iter().map(|(n, d)| (n.to_string(), GroupElement(d.to_vec()))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_twist_is_identity() {
        let g = klein_gens(&[("x", [0, 1]), ("y", [1, 1])]);
        let rel = parse_expression("x*y - y*x + x^2", &g).unwrap();
        let p = GradedPresentation::new(g, vec![rel.clone()]).unwrap();
        let t = twist_presentation(&p, &TwoCocycle::trivial(GradingGroup::klein(), 4).unwrap()).unwrap();
        assert_eq!(t.gens.names(), &["X".to_string(), "Y".to_string()]);
        let mut parts: Vec<_> = p.homogeneous_relations().unwrap();
        parts.sort_by_key(|r| r.leading().map(|(w, _)| w.clone()));
        let mut got = t.relations.clone();
        got.sort_by_key(|r| r.leading().map(|(w, _)| w.clone()));
        assert_eq!(got, parts);
    }

    #[test]
    fn no_split_rejects_inhomogeneous() {
        let g = klein_gens(&[("x", [0, 1])]);
        let rel = parse_expression("x - 1", &g).unwrap();
        let mut p = GradedPresentation::new(g, vec![rel]).unwrap();
        let sv = TwoCocycle::sigma_v(4).unwrap();
        assert_eq!(twist_presentation(&p, &sv).unwrap().relations.len(), 2);
        p.no_split = true;
        assert!(matches!(twist_presentation(&p, &sv), Err(Error::Grading(_))));
    }

    #[test]
    fn trivial_braiding_is_plain_tensor_product() {
        let g = klein_gens(&[("x", [0, 1]), ("y", [1, 0])]);
        let p = GradedPresentation::new(g.clone(), vec![]).unwrap();
        let b = Bicharacter::trivial(GradingGroup::klein(), 4).unwrap();
        let t = braided_tensor(&p, &p, &b).unwrap();
        assert_eq!(t.gens.names(), &["x", "y", "x'", "y'"].map(String::from));
        assert_eq!(t.relations.len(), 4);
        for r in &t.relations {
            let coeffs: Vec<_> = r.terms().map(|(_, c)| c.clone()).collect();
            assert_eq!(coeffs.len(), 2);
            assert!((&coeffs[0] + &coeffs[1]).is_zero());
        }
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let g = klein_gens(&[("a", [1, 0]), ("b", [1, 1]), ("h", [0, 1])]);
        let rels = ["a*b + b*a + 2*h", "a*h + h*a - 2*b", "b*h + h*b + 2*a"]
            .iter()
            .map(|t| parse_expression(t, &g).unwrap())
            .collect();
        let p = GradedPresentation::new(g.clone(), rels).unwrap();
        let id = AlgebraMap::identity(&g).unwrap();
        assert!(verify_homomorphism(&id, &p, &p).unwrap().holds);
    }

    #[test]
    fn non_confluent_target_is_an_error() {
        let g = klein_gens(&[("a", [0, 0]), ("b", [0, 0])]);
        let rels = ["b*a + a*b", "b*b - a"].iter().map(|t| parse_expression(t, &g).unwrap()).collect();
        let p = GradedPresentation::new(g.clone(), rels).unwrap();
        let id = AlgebraMap::identity(&g).unwrap();
        assert!(matches!(verify_homomorphism(&id, &p, &p), Err(Error::NonConfluent(_))));
    }
}
