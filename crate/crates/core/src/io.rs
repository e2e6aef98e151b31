//! JSON encodings of groups, cocycles, presentations and reports.
//!
//! Objects are emitted through `serde_json::Value`, whose maps keep keys
//! sorted, so equal inputs give byte-identical output.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::cocycle::{Bicharacter, CoboundaryForm, CocycleKind, TwoCocycle};
use crate::error::{Error, Result};
use crate::fourier::GroupAlgebraTensor;
use crate::group::{GradingGroup, GroupElement};
use crate::linalg::Matrix;
use crate::ncpoly::{GenSet, NcPoly};
use crate::parse::{parse_expression, parse_scalar};
use crate::presentation::{AlgebraMap, GradedPresentation};
use crate::rep::{check_omnibus, is_simple, ladder, verify_relations, MatrixModule};
use crate::scalar::Scalar;

fn schema(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Schema(format!("{path}: {msg}"))
}

fn field<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(path, format!("missing field `{key}`")))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| schema(path, "expected an integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn int_matrix(v: &Value, path: &str) -> Result<Vec<Vec<i64>>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            as_array(row, &p)?.iter().enumerate().map(|(j, x)| as_i64(x, &format!("{p}[{j}]"))).collect()
        })
        .collect()
}

/// A scalar given as a JSON integer or as an expression string.
pub fn scalar_from_json(v: &Value, order: u32, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| schema(path, "expected an integer or a string"))?;
            Scalar::from_int(order, i)
        }
        Value::String(s) => parse_scalar(s, order).map_err(|e| schema(path, e)),
        _ => Err(schema(path, "expected an integer or a string")),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn group_to_json(g: &GradingGroup) -> Value {
    json!({ "free_rank": g.free_rank, "torsion": g.torsion })
}

pub fn group_from_json(v: &Value, path: &str) -> Result<GradingGroup> {
    let free_rank = match v.get("free_rank") {
        Some(r) => as_u64(r, &format!("{path}.free_rank"))? as usize,
        None => 0,
    };
    let torsion = match v.get("torsion") {
        Some(t) => as_array(t, &format!("{path}.torsion"))?
            .iter()
            .enumerate()
            .map(|(i, x)| as_u64(x, &format!("{path}.torsion[{i}]")))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    GradingGroup::new(free_rank, torsion).map_err(|e| schema(path, e))
}

pub fn element_to_json(g: &GroupElement) -> Value {
    json!(g.0)
}

pub fn element_from_json(v: &Value, group: &GradingGroup, path: &str) -> Result<GroupElement> {
    let coords = as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_i64(x, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    group.element(&coords).map_err(|e| schema(path, e))
}

pub fn cocycle_to_json(c: &TwoCocycle) -> Value {
    match c.kind() {
        CocycleKind::Table(values) => json!({
            "kind": "table",
            "values": values.iter().map(|r| r.iter().map(scalar_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
        CocycleKind::BilinearQ(m) => json!({ "kind": "bilinear_q", "matrix": m }),
        CocycleKind::BicharacterSplit(b) => {
            let mut pairs = Map::new();
            let vals = b.generator_values();
            for (i, row) in vals.iter().enumerate() {
                for (j, v) in row.iter().enumerate().skip(i + 1) {
                    if !v.is_one() {
                        pairs.insert(format!("{i},{j}"), scalar_to_json(v));
                    }
                }
            }
            json!({ "kind": "bicharacter_split", "gen_pairs": pairs })
        }
        CocycleKind::Coboundary(l) => json!({
            "kind": "coboundary",
            "lambda": l.values().iter().map(scalar_to_json).collect::<Vec<_>>(),
        }),
        CocycleKind::Product(fs) => json!({
            "kind": "product",
            "factors": fs.iter().map(cocycle_to_json).collect::<Vec<_>>(),
        }),
    }
}

/// Reads a cocycle descriptor over a known group and cyclotomic order.
pub fn cocycle_from_json(v: &Value, group: &GradingGroup, order: u32, path: &str) -> Result<TwoCocycle> {
    let kind = as_str(field(v, "kind", path)?, &format!("{path}.kind"))?;
    let wrap = |e: Error| match e {
        Error::Schema(_) => e,
        other => schema(path, other),
    };
    match kind {
        "table" => {
            let p = format!("{path}.values");
            let values = as_array(field(v, "values", path)?, &p)?
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let rp = format!("{p}[{i}]");
                    as_array(row, &rp)?
                        .iter()
                        .enumerate()
                        .map(|(j, x)| scalar_from_json(x, order, &format!("{rp}[{j}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            TwoCocycle::table(group.clone(), order, values).map_err(wrap)
        }
        "bilinear_q" => {
            let m = int_matrix(field(v, "matrix", path)?, &format!("{path}.matrix"))?;
            TwoCocycle::bilinear_q(group.clone(), order, m).map_err(wrap)
        }
        "bicharacter_split" => {
            let p = format!("{path}.gen_pairs");
            let pairs = field(v, "gen_pairs", path)?.as_object().ok_or_else(|| schema(&p, "expected an object"))?;
            let r = group.rank();
            let mut values = vec![vec![Scalar::one(order)?; r]; r];
            for (key, val) in pairs {
                let kp = format!("{p}.\"{key}\"");
                let (i, j) = key
                    .split_once(',')
                    .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                    .filter(|&(i, j)| i < r && j < r && i != j)
                    .ok_or_else(|| schema(&kp, "keys must be \"i,j\" with distinct generator indices"))?;
                let s = scalar_from_json(val, order, &kp)?;
                values[j][i] = s.unit_inverse().map_err(|e| schema(&kp, e))?;
                values[i][j] = s;
            }
            let b = Bicharacter::new(group.clone(), order, values).map_err(wrap)?;
            TwoCocycle::from_bicharacter(&b).map_err(wrap)
        }
        "coboundary" => {
            let p = format!("{path}.lambda");
            let values = as_array(field(v, "lambda", path)?, &p)?
                .iter()
                .enumerate()
                .map(|(i, x)| scalar_from_json(x, order, &format!("{p}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let l = CoboundaryForm::new(group.clone(), order, values).map_err(wrap)?;
            Ok(TwoCocycle::coboundary(&l))
        }
        "product" => {
            let p = format!("{path}.factors");
            let factors = as_array(field(v, "factors", path)?, &p)?
                .iter()
                .enumerate()
                .map(|(i, f)| cocycle_from_json(f, group, order, &format!("{p}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            TwoCocycle::product(factors).map_err(wrap)
        }
        other => Err(schema(&format!("{path}.kind"), format!("unknown cocycle kind `{other}`"))),
    }
}

/// A presentation as read from or written to a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationDoc {
    pub presentation: GradedPresentation,
    pub coproduct: Option<AlgebraMap>,
}

pub fn order_from_json(doc: &Value) -> Result<u32> {
    match doc.get("scalar") {
        None => Ok(crate::catalog::DEFAULT_ORDER),
        Some(s) => {
            let n = as_u64(field(s, "cyclotomic_order", "scalar")?, "scalar.cyclotomic_order")?;
            let n = u32::try_from(n).map_err(|_| schema("scalar.cyclotomic_order", "too large"))?;
            Scalar::one(n).map_err(|e| schema("scalar.cyclotomic_order", e))?;
            Ok(n)
        }
    }
}

pub fn presentation_from_json(doc: &Value) -> Result<PresentationDoc> {
    if !doc.is_object() {
        return Err(schema("$", "expected an object"));
    }
    let order = order_from_json(doc)?;
    let group = group_from_json(field(doc, "grading", "$")?, "grading")?;
    let gens_spec = as_array(field(doc, "generators", "$")?, "generators")?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let p = format!("generators[{i}]");
            let name = as_str(field(g, "name", &p)?, &format!("{p}.name"))?.to_string();
            let degree = match g.get("degree") {
                Some(d) => element_from_json(d, &group, &format!("{p}.degree"))?,
                None => group.identity(),
            };
            Ok((name, degree))
        })
        .collect::<Result<Vec<_>>>()?;
    let gens = GenSet::new(order, group.clone(), gens_spec).map_err(|e| schema("generators", e))?;
    let relations = match doc.get("relations") {
        None => Vec::new(),
        Some(r) => as_array(r, "relations")?
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let p = format!("relations[{i}]");
                parse_expression(as_str(t, &p)?, &gens).map_err(|e| schema(&p, e))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let mut presentation = GradedPresentation::new(gens.clone(), relations)?;
    if let Some(c) = doc.get("cocycle").filter(|c| !c.is_null()) {
        presentation.cocycle = Some(cocycle_from_json(c, &group, order, "cocycle")?);
    }
    if let Some(ns) = doc.get("no_split") {
        presentation.no_split = ns.as_bool().ok_or_else(|| schema("no_split", "expected a boolean"))?;
    }
    let coproduct = match doc.get("coproduct").filter(|c| !c.is_null()) {
        None => None,
        Some(c) => {
            let obj = c.as_object().ok_or_else(|| schema("coproduct", "expected an object"))?;
            let target = gens.doubled().map_err(|e| schema("coproduct", e))?;
            let mut images = Vec::with_capacity(gens.len());
            for name in gens.names() {
                let p = format!("coproduct.{name}");
                let text = as_str(obj.get(name).ok_or_else(|| schema(&p, "missing image"))?, &p)?;
                images.push(parse_expression(text, &target).map_err(|e| schema(&p, e))?);
            }
            if let Some(extra) = obj.keys().find(|k| gens.index_of(k).is_none()) {
                return Err(schema("coproduct", format!("unknown generator `{extra}`")));
            }
            Some(AlgebraMap::new(gens.clone(), target, images)?)
        }
    };
    Ok(PresentationDoc { presentation, coproduct })
}

pub fn presentation_to_json(doc: &PresentationDoc, provenance: Option<Value>) -> Value {
    let p = &doc.presentation;
    let gens = &p.gens;
    let mut out = Map::new();
    out.insert("scalar".into(), json!({ "cyclotomic_order": p.order() }));
    out.insert("grading".into(), group_to_json(gens.group()));
    out.insert("cocycle".into(), p.cocycle.as_ref().map_or(Value::Null, cocycle_to_json));
    out.insert(
        "generators".into(),
        Value::Array(
            gens.names()
                .iter()
                .zip(gens.degrees())
                .map(|(n, d)| json!({ "name": n, "degree": element_to_json(d) }))
                .collect(),
        ),
    );
    out.insert("relations".into(), json!(p.render_relations()));
    if p.no_split {
        out.insert("no_split".into(), Value::Bool(true));
    }
    if let Some(c) = &doc.coproduct {
        let m: Map<String, Value> = c.render().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
        out.insert("coproduct".into(), Value::Object(m));
    }
    if let Some(prov) = provenance {
        out.insert("provenance".into(), prov);
    }
    Value::Object(out)
}

pub fn polynomial_to_json(p: &NcPoly, gens: &GenSet) -> Value {
    Value::String(p.render(gens))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

pub fn tensor_to_json(t: &GroupAlgebraTensor) -> Value {
    let terms: Vec<Value> = t
        .coeffs()
        .iter()
        .map(|((g, h), c)| json!({ "left": element_to_json(g), "right": element_to_json(h), "coefficient": scalar_to_json(c) }))
        .collect();
    json!({ "group": group_to_json(t.group()), "terms": terms })
}

/// The per-module report of the `modules` command.
pub fn module_report(m: &MatrixModule) -> Result<Value> {
    let label = m.label();
    let lad = ladder(m)?;
    let om = check_omnibus(m)?;
    let scalars = |v: &BTreeMap<i64, Scalar>| -> Map<String, Value> {
        v.iter().map(|(k, s)| (k.to_string(), scalar_to_json(s))).collect()
    };
    Ok(json!({
        "family": label.family.to_string(),
        "n": label.n,
        "sign": label.sign.map(|s| s.to_string()),
        "dim": m.dim(),
        "relations_ok": verify_relations(m)?,
        "simple": is_simple(m)?,
        "spectrum": m.integral_spectrum()?,
        "matrices": { "X": matrix_to_json(m.x()), "Y": matrix_to_json(m.y()), "Z": matrix_to_json(m.z()) },
        "ladder": {
            "lambda0": lad.lambda0,
            "case": lad.case.number(),
            "n_star": lad.n_star,
            "c": lad.c.iter().map(scalar_to_json).collect::<Vec<_>>(),
            "x2": scalars(&lad.x2),
            "y2": scalars(&lad.y2),
            "base_ok": lad.base_ok,
            "recurrence_ok": lad.recurrence_ok,
            "ck_ok": lad.ck_ok,
            "closed_form_ok": lad.closed_form_ok,
        },
        "omnibus": {
            "x_shifts": om.x_shifts,
            "y_shifts": om.y_shifts,
            "multiplicity_free": om.multiplicity_free,
            "top_not_killed": om.top_not_killed,
        },
    }))
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogName, CatalogParams};

    #[test]
    fn cocycle_round_trips() {
        let klein = GradingGroup::klein();
        let sv = TwoCocycle::sigma_v(4).unwrap();
        assert_eq!(cocycle_from_json(&cocycle_to_json(&sv), &klein, 4, "c").unwrap(), sv);
        let free = GradingGroup::free(2);
        let bq = TwoCocycle::bilinear_q(free.clone(), 4, vec![vec![0, 2], vec![0, 0]]).unwrap();
        assert_eq!(cocycle_from_json(&cocycle_to_json(&bq), &free, 4, "c").unwrap(), bq);
        let e = catalog(CatalogName::PolyRingRootOfUnity, &CatalogParams::default()).unwrap();
        let g = e.twist.group().clone();
        assert_eq!(cocycle_from_json(&cocycle_to_json(&e.twist), &g, 4, "c").unwrap(), e.twist);
        let prod = TwoCocycle::product(vec![sv.clone(), sv.clone()]).unwrap();
        assert_eq!(cocycle_from_json(&cocycle_to_json(&prod), &klein, 4, "c").unwrap(), prod);
    }

    #[test]
    fn bicharacter_pairs_fill_inverse() {
        let g = GradingGroup::new(0, vec![4, 4]).unwrap();
        let c = cocycle_from_json(&json!({"kind": "bicharacter_split", "gen_pairs": {"0,1": "i"}}), &g, 4, "c").unwrap();
        let b = c.derived_bicharacter().unwrap();
        assert!(b.is_alternating());
    }

    #[test]
    fn schema_errors_name_the_path() {
        let g = GradingGroup::klein();
        let err = cocycle_from_json(&json!({"kind": "table", "values": [[1, "x"]]}), &g, 4, "cocycle").unwrap_err();
        assert!(matches!(&err, Error::Schema(m) if m.starts_with("cocycle.values[0][1]")), "{err}");
        let err = presentation_from_json(&json!({"grading": {"torsion": [2]}, "generators": [{"name": "x", "degree": [0]}], "relations": ["x*"]})).unwrap_err();
        assert!(matches!(&err, Error::Schema(m) if m.starts_with("relations[0]")), "{err}");
        assert!(presentation_from_json(&json!([])).is_err());
    }

    #[test]
    fn presentation_round_trips() {
        for name in CatalogName::ALL {
            let e = catalog(name, &CatalogParams::default()).unwrap();
            let doc = PresentationDoc { presentation: e.presentation.clone(), coproduct: e.coproduct.clone() };
            let v = presentation_to_json(&doc, None);
            let back = presentation_from_json(&v).unwrap();
            assert_eq!(back, doc, "{name}");
            let t = e.twisted().unwrap();
            let tdoc = PresentationDoc { presentation: t, coproduct: None };
            assert_eq!(presentation_from_json(&presentation_to_json(&tdoc, None)).unwrap(), tdoc, "{name}");
        }
    }
}
