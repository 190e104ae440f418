//! JSON wire formats.
//!
//! Semiring specs: `{"kind":"boolean"}`, `{"kind":"truncated","q":3}`,
//! `{"kind":"natural"}`, `{"kind":"maxplus-int"}`, or
//! `{"kind":"table","carrier":[…],"add":[[…]],"mul":[[…]],"zero":…,"one":…}`
//! with row-major label matrices in declaration order.
//!
//! Vectors are arrays of carrier labels: integers for the numeric kinds
//! (`"-inf"` for the max-plus zero), strings for tables. Submodules are
//! `{"generators":[[…],…]}`. All objects serialize with sorted keys, so
//! equal values produce byte-identical documents.

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::decomposition::{ComplementClass, DecompositionReport, Witness};
use crate::error::{Error, Result};
use crate::greens::QuotientModule;
use crate::module::{Budget, Enumeration, FreeModule, Submodule, Vector};
use crate::semiring::{Elem, Semiring, Table, TropInt};

pub fn semiring_to_json(sr: &Semiring) -> Value {
    match sr {
        Semiring::Boolean => json!({"kind": "boolean"}),
        Semiring::Truncated { q } => json!({"kind": "truncated", "q": q}),
        Semiring::Natural => json!({"kind": "natural"}),
        Semiring::MaxPlusInt => json!({"kind": "maxplus-int"}),
        Semiring::Table(t) => json!({
            "kind": "table",
            "carrier": t.labels,
            "add": t.add_matrix(),
            "mul": t.mul_matrix(),
            "zero": t.zero_label(),
            "one": t.one_label(),
        }),
    }
}

pub fn semiring_from_json(v: &Value) -> Result<Semiring> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("semiring must be a JSON object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse("semiring needs a string field `kind`"))?;
    match kind {
        "boolean" => Ok(Semiring::boolean()),
        "natural" => Ok(Semiring::natural()),
        "maxplus-int" => Ok(Semiring::maxplus_int()),
        "truncated" => {
            let q = obj
                .get("q")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse("truncated semiring needs a positive integer `q`"))?;
            if q == 0 || q > u16::MAX as u64 {
                return Err(Error::parse("field `q` out of range"));
            }
            Semiring::truncated(q as u16)
        }
        "table" => {
            let strings = |key: &str| -> Result<Vec<String>> {
                obj.get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::parse(format!("table needs an array field `{key}`")))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| Error::parse(format!("field `{key}` must hold strings")))
                    })
                    .collect()
            };
            let matrix = |key: &str| -> Result<Vec<Vec<String>>> {
                obj.get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::parse(format!("table needs a matrix field `{key}`")))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| Error::parse(format!("field `{key}` must hold rows")))?
                            .iter()
                            .map(|x| {
                                x.as_str().map(str::to_string).ok_or_else(|| {
                                    Error::parse(format!("field `{key}` must hold labels"))
                                })
                            })
                            .collect()
                    })
                    .collect()
            };
            let carrier = strings("carrier")?;
            let add = matrix("add")?;
            let mul = matrix("mul")?;
            let zero = obj
                .get("zero")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::parse("table needs a string field `zero`"))?;
            let one = obj
                .get("one")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::parse("table needs a string field `one`"))?;
            let table = Table::new(carrier, &add, &mul, zero, one)?;
            Ok(Semiring::Table(table))
        }
        other => Err(Error::parse(format!("unknown semiring kind `{other}`"))),
    }
}

pub fn elem_to_json(sr: &Semiring, e: &Elem) -> Value {
    match (sr, e) {
        (Semiring::Table(t), Elem::Fin(i)) => Value::String(t.labels[*i as usize].clone()),
        (_, Elem::Fin(i)) => json!(i),
        (_, Elem::Nat(n)) => match u64::try_from(n.clone()) {
            Ok(small) => json!(small),
            Err(_) => Value::String(n.to_string()),
        },
        (_, Elem::Trop(TropInt::NegInf)) => Value::String("-inf".into()),
        (_, Elem::Trop(TropInt::Fin(v))) => json!(v),
    }
}

pub fn elem_from_json(sr: &Semiring, v: &Value) -> Result<Elem> {
    match sr {
        Semiring::Boolean | Semiring::Truncated { .. } => {
            let n = v
                .as_u64()
                .ok_or_else(|| Error::parse(format!("expected a small integer, got {v}")))?;
            let k = sr.carrier_size().expect("finite") as u64;
            if n >= k {
                return Err(Error::parse(format!(
                    "{n} is outside the carrier of {}",
                    sr.kind_name()
                )));
            }
            Ok(Elem::Fin(n as u16))
        }
        Semiring::Natural => {
            if let Some(n) = v.as_u64() {
                return Ok(Elem::nat(n));
            }
            if let Some(s) = v.as_str() {
                if let Some(n) = BigUint::parse_bytes(s.as_bytes(), 10) {
                    return Ok(Elem::Nat(n));
                }
            }
            Err(Error::parse(format!("expected a natural number, got {v}")))
        }
        Semiring::MaxPlusInt => {
            if v.as_str() == Some("-inf") {
                return Ok(Elem::Trop(TropInt::NegInf));
            }
            v.as_i64()
                .map(Elem::trop)
                .ok_or_else(|| Error::parse(format!("expected an integer or \"-inf\", got {v}")))
        }
        Semiring::Table(t) => {
            let s = v
                .as_str()
                .ok_or_else(|| Error::parse(format!("expected a carrier label, got {v}")))?;
            t.labels
                .iter()
                .position(|l| l == s)
                .map(|i| Elem::Fin(i as u16))
                .ok_or_else(|| Error::parse(format!("label `{s}` not in carrier")))
        }
    }
}

pub fn vector_to_json(sr: &Semiring, v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(|e| elem_to_json(sr, e)).collect())
}

pub fn vector_from_json(sr: &Semiring, rank: usize, v: &Value) -> Result<Vector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::parse(format!("vector must be an array, got {v}")))?;
    if arr.len() != rank {
        return Err(Error::parse(format!(
            "vector has {} entries, ambient rank is {rank}",
            arr.len()
        )));
    }
    Ok(Vector::new(
        arr.iter()
            .map(|e| elem_from_json(sr, e))
            .collect::<Result<_>>()?,
    ))
}

pub fn submodule_to_json(s: &Submodule) -> Value {
    let sr = s.semiring();
    json!({
        "generators": s
            .generators()
            .iter()
            .map(|g| vector_to_json(sr, g))
            .collect::<Vec<_>>(),
    })
}

pub fn submodule_from_json(module: &FreeModule, v: &Value, budget: &Budget) -> Result<Submodule> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("submodule must be an object"))?;
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("submodule needs an array field `generators`"))?;
    let generators: Vec<Vector> = gens
        .iter()
        .map(|g| vector_from_json(module.semiring(), module.rank(), g))
        .collect::<Result<_>>()?;
    module.span(&generators, budget)
}

fn id_json(en: &Enumeration, id: usize) -> Value {
    vector_to_json(en.semiring(), en.vector(id))
}

fn witness_to_json(en: &Enumeration, w: &Witness) -> Value {
    match w {
        Witness::NotSpanning { missing } => json!({
            "kind": "not-spanning",
            "missing": id_json(en, *missing),
        }),
        Witness::NonzeroIntersection { common } => json!({
            "kind": "nonzero-intersection",
            "common": id_json(en, *common),
        }),
        Witness::NotWeak { w, t1, t2 } => json!({
            "kind": "not-weak",
            "w": id_json(en, *w),
            "t1": id_json(en, *t1),
            "t2": id_json(en, *t2),
        }),
        Witness::NotSemidirect { w1, t1, w2, t2 } => json!({
            "kind": "not-semidirect",
            "w1": id_json(en, *w1),
            "t1": id_json(en, *t1),
            "w2": id_json(en, *w2),
            "t2": id_json(en, *t2),
        }),
        Witness::NotDirect { w, t1, t2 } => json!({
            "kind": "not-direct",
            "w": id_json(en, *w),
            "t1": id_json(en, *t1),
            "t2": id_json(en, *t2),
        }),
    }
}

pub fn complement_class_to_json(en: &Enumeration, cc: &ComplementClass) -> Value {
    json!({
        "level": cc.level.name(),
        "witness": cc.witness.as_ref().map(|w| witness_to_json(en, w)),
    })
}

pub fn decomposition_report_to_json(en: &Enumeration, r: &DecompositionReport) -> Value {
    json!({
        "parts": r
            .parts
            .iter()
            .map(|p| submodule_to_json(&en.submodule(p)))
            .collect::<Vec<_>>(),
        "kind": r.kind.name(),
        "certified": r.certified,
    })
}

pub fn quotient_to_json(en: &Enumeration, q: &QuotientModule) -> Value {
    let classes: Vec<Value> = q
        .classes
        .iter()
        .map(|class| Value::Array(class.iter().map(|&id| id_json(en, id)).collect()))
        .collect();
    let k = q.class_count();
    let mut add = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            add.push(json!([i, j, q.add[i * k + j]]));
        }
    }
    json!({
        "classes": classes,
        "add": add,
        "ub": q.ub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn semiring_specs_round_trip() {
        for sr in [
            Semiring::boolean(),
            Semiring::truncated(3).unwrap(),
            Semiring::natural(),
            Semiring::maxplus_int(),
            Semiring::zmod2(),
            Semiring::bxb(),
        ] {
            let v = semiring_to_json(&sr);
            let back = semiring_from_json(&v).unwrap();
            assert_eq!(back, sr);
            // byte-stable re-serialization
            assert_eq!(
                serde_json::to_string(&v).unwrap(),
                serde_json::to_string(&semiring_to_json(&back)).unwrap()
            );
        }
    }

    #[test]
    fn vectors_round_trip_per_kind() {
        let cases: Vec<(Semiring, Vector)> = vec![
            (
                Semiring::boolean(),
                Vector::new(vec![Elem::Fin(1), Elem::Fin(0)]),
            ),
            (
                Semiring::maxplus_int(),
                Vector::new(vec![Elem::trop(-4), Elem::Trop(TropInt::NegInf)]),
            ),
            (
                Semiring::natural(),
                Vector::new(vec![Elem::nat(0), Elem::nat(123456789)]),
            ),
            (
                Semiring::zmod2(),
                Vector::new(vec![Elem::Fin(1), Elem::Fin(1)]),
            ),
        ];
        for (sr, v) in cases {
            let j = vector_to_json(&sr, &v);
            assert_eq!(vector_from_json(&sr, 2, &j).unwrap(), v);
        }
        // the max-plus zero renders as the string "-inf"
        let j = vector_to_json(
            &Semiring::maxplus_int(),
            &Vector::new(vec![Elem::Trop(TropInt::NegInf)]),
        );
        assert_eq!(j, json!(["-inf"]));
    }

    #[test]
    fn big_naturals_survive_the_trip() {
        let sr = Semiring::natural();
        let big = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let v = Vector::new(vec![Elem::Nat(big.clone())]);
        let j = vector_to_json(&sr, &v);
        assert_eq!(j, json!(["123456789012345678901234567890"]));
        assert_eq!(vector_from_json(&sr, 1, &j).unwrap(), v);
    }

    #[test]
    fn parse_failures_name_the_problem() {
        assert!(matches!(
            semiring_from_json(&json!({"kind": "frobnicate"})),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            semiring_from_json(&json!({"kind": "truncated"})),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            elem_from_json(&Semiring::boolean(), &json!(7)),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            elem_from_json(&Semiring::bxb(), &json!("nope")),
            Err(Error::Parse(_))
        ));
        // a structurally bad table is a structural error, not a parse error
        let bad = json!({
            "kind": "table",
            "carrier": ["0", "0"],
            "add": [["0", "0"], ["0", "0"]],
            "mul": [["0", "0"], ["0", "0"]],
            "zero": "0",
            "one": "0",
        });
        assert!(matches!(semiring_from_json(&bad), Err(Error::Structural(_))));
    }

    #[test]
    fn submodules_serialize_as_generators() {
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 2);
        let budget = Budget::default();
        let s = m
            .span(
                &[Vector::new(vec![Elem::Fin(1), Elem::Fin(0)])],
                &budget,
            )
            .unwrap();
        let j = submodule_to_json(&s);
        assert_eq!(j, json!({"generators": [[1, 0]]}));
        let back = submodule_from_json(&m, &j, &budget).unwrap();
        assert!(back.equal(&s));
    }

    #[test]
    fn reports_serialize_with_stable_fields() {
        use crate::decomposition::Lattice;
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 2);
        let budget = Budget::default();
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = en
            .span_vectors(&[Vector::new(vec![Elem::Fin(1), Elem::Fin(0)])])
            .unwrap();
        let axis2 = en
            .span_vectors(&[Vector::new(vec![Elem::Fin(0), Elem::Fin(1)])])
            .unwrap();

        let class = lat.classify(&axis1, &axis2).unwrap();
        let j = complement_class_to_json(&en, &class);
        assert_eq!(j, json!({"level": "direct", "witness": null}));

        let t = en
            .span_vectors(&[
                Vector::new(vec![Elem::Fin(0), Elem::Fin(1)]),
                Vector::new(vec![Elem::Fin(1), Elem::Fin(1)]),
            ])
            .unwrap();
        let class = lat.classify(&axis1, &t).unwrap();
        let j = complement_class_to_json(&en, &class);
        assert_eq!(
            j,
            json!({
                "level": "trivial-intersection",
                "witness": {"kind": "not-weak", "w": [1, 0], "t1": [0, 1], "t2": [1, 1]},
            })
        );

        let report = lat.refine4(&axis1, &axis2, &axis1, &axis2).unwrap();
        let j = decomposition_report_to_json(&en, &report);
        assert_eq!(j["kind"], "direct");
        assert_eq!(j["certified"], true);
        assert_eq!(j["parts"].as_array().unwrap().len(), 4);

        // emitted documents re-parse into the same value, byte for byte
        let s1 = serde_json::to_string_pretty(&j).unwrap();
        let parsed: Value = serde_json::from_str(&s1).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), s1);
    }

    #[test]
    fn quotient_json_shape() {
        use crate::greens::Greens;
        let m = FreeModule::new(Arc::new(Semiring::zmod2()), 1);
        let budget = Budget::default();
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let q = Greens::full(&en).quotient().unwrap();
        let j = quotient_to_json(&en, &q);
        assert_eq!(j, json!({"classes": [[["0"], ["1"]]], "add": [[0, 0, 0]], "ub": true}));
    }
}
