//! The theorem claim registry.
//!
//! Each claim quantifies exhaustively over every corpus instance whose
//! hypotheses it satisfies, re-derives the conclusion with the naive
//! checkers, and on the smaller lattices cross-examines the main
//! implementation tuple by tuple. Hypothesis failures and quantification
//! budgets are recorded as per-instance skips, never as counterexamples.

use serde_json::{json, Value};
use std::sync::Arc;

use super::naive;
use super::{Claim, InstanceCheck, PreparedInstance, PAIR_CAP, POWERSET_CAP, TRIPLE_CAP};
use crate::decomposition::projective_decomposition;
use crate::error::Error;
use crate::greens::quotient_semiring;
use crate::module::Enumeration;

fn skip(reason: impl Into<String>) -> InstanceCheck {
    InstanceCheck::Skipped {
        reason: reason.into(),
    }
}

fn ran(configurations: u64) -> InstanceCheck {
    if configurations == 0 {
        skip("no configuration satisfies the hypotheses")
    } else {
        InstanceCheck::Ran { configurations }
    }
}

fn cex(inst: &PreparedInstance, claim: &str, detail: Value) -> InstanceCheck {
    InstanceCheck::Counterexample {
        certificate: json!({
            "claim": claim,
            "instance": inst.instance_json(),
            "detail": detail,
        }),
    }
}

macro_rules! get_subs {
    ($inst:expr, $cap:expr) => {
        match &$inst.subs {
            None => return skip("submodule lattice exceeds the enumeration budget"),
            Some(s) if s.len() > $cap => {
                return skip(format!("lattice too large for this claim ({} submodules)", s.len()))
            }
            Some(s) => s,
        }
    };
}

/// Whether the main implementation is cross-examined tuple by tuple on
/// this instance (always, on the smaller lattices).
fn cross(inst: &PreparedInstance) -> bool {
    inst.subs.as_ref().is_some_and(|s| s.len() <= TRIPLE_CAP)
}

const ID_LEM_2_3: &str = "lem-2.3-weak-cancellation";
fn lem_2_3(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let zero = en.zero_id();
    let mut configs = 0u64;
    for &(wi, ti) in inst.weak_pairs.as_ref().expect("cached with subs") {
        let (w, t) = (&subs[wi], &subs[ti]);
        for &a2 in t {
            for &w1 in w {
                for &w2 in w {
                    let a = en.add_id(a2, en.add_id(w1, w2));
                    if naive::contains(t, a) {
                        configs += 1;
                        if !(w1 == zero && w2 == zero && a == a2) {
                            return cex(
                                inst,
                                ID_LEM_2_3,
                                json!({
                                    "statement": "a = a' + (w1 + w2) with a, a' in T must force w1 = w2 = 0 and a = a'",
                                    "w": inst.ids_json(w),
                                    "t": inst.ids_json(t),
                                    "a'": inst.id_json(a2),
                                    "w1": inst.id_json(w1),
                                    "w2": inst.id_json(w2),
                                }),
                            );
                        }
                    }
                }
            }
        }
    }
    ran(configs)
}

const ID_THM_2_4: &str = "thm-2.4-descent";
fn thm_2_4(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let weak = inst.weak_pairs.as_ref().expect("cached with subs");
    let mut spanning: Vec<(usize, usize)> = Vec::new();
    for (i, y) in subs.iter().enumerate() {
        for (j, z) in subs.iter().enumerate() {
            if naive::spans(en, amb, y, z) {
                spanning.push((i, j));
            }
        }
    }
    if (weak.len() as u64) * (spanning.len() as u64) > 3_000_000 {
        return skip("too many descent configurations");
    }
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for &(wi, ti) in weak {
        let t = &subs[ti];
        for &(yi, zi) in &spanning {
            configs += 1;
            let ty = naive::inter_lists(t, &subs[yi]);
            let tz = naive::inter_lists(t, &subs[zi]);
            let recombined = naive::sum_lists(en, &ty, &tz);
            if recombined != *t {
                return cex(
                    inst,
                    ID_THM_2_4,
                    json!({
                        "statement": "a weak complement T must satisfy T = (T ∩ Y) + (T ∩ Z) whenever V = Y + Z",
                        "w": inst.ids_json(&subs[wi]),
                        "t": inst.ids_json(t),
                        "y": inst.ids_json(&subs[yi]),
                        "z": inst.ids_json(&subs[zi]),
                    }),
                );
            }
            if do_cross {
                let parts = lat.descend(
                    &lat.submodules()[wi],
                    &lat.submodules()[ti],
                    &lat.submodules()[yi],
                    &lat.submodules()[zi],
                );
                let ok = matches!(&parts, Ok((a, b))
                    if inst.id_list(a) == ty && inst.id_list(b) == tz);
                if !ok {
                    return cex(
                        inst,
                        ID_THM_2_4,
                        json!({"statement": "descend disagrees with the naive split"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_COR_2_5: &str = "cor-2.5-weak-subset";
fn cor_2_5(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let mut configs = 0u64;
    for &(wi, ti) in inst.weak_pairs.as_ref().expect("cached with subs") {
        for u in subs {
            if naive::spans(en, amb, &subs[wi], u) {
                configs += 1;
                if !naive::is_subset(&subs[ti], u) {
                    return cex(
                        inst,
                        ID_COR_2_5,
                        json!({
                            "statement": "a weak complement of W is contained in every U with W + U = V",
                            "w": inst.ids_json(&subs[wi]),
                            "t": inst.ids_json(&subs[ti]),
                            "u": inst.ids_json(u),
                        }),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_COR_2_6_WEAK: &str = "cor-2.6-weak-unique";
fn cor_2_6_weak(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let weak = inst.weak_pairs.as_ref().expect("cached with subs");
    let lzs = inst.lzs_flags.as_ref().expect("cached with subs");
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for (wi, w) in subs.iter().enumerate() {
        if !lzs[wi] {
            continue;
        }
        configs += 1;
        let mine: Vec<usize> = weak
            .iter()
            .filter(|(a, _)| *a == wi)
            .map(|(_, b)| *b)
            .collect();
        if mine.len() > 1 {
            return cex(
                inst,
                ID_COR_2_6_WEAK,
                json!({
                    "statement": "a submodule lacking zero sums has at most one weak complement",
                    "w": inst.ids_json(w),
                    "complements": mine.iter().map(|&i| inst.ids_json(&subs[i])).collect::<Vec<_>>(),
                }),
            );
        }
        if do_cross {
            let main = lat.weak_complements(&lat.submodules()[wi]);
            let main_ids: Vec<usize> = match &main {
                Ok(list) => list
                    .iter()
                    .map(|s| subs.iter().position(|x| inst.subset(x) == *s).expect("known"))
                    .collect(),
                Err(_) => {
                    return cex(
                        inst,
                        ID_COR_2_6_WEAK,
                        json!({"statement": "weak_complements errored where the oracle succeeded"}),
                    )
                }
            };
            if main_ids != mine {
                return cex(
                    inst,
                    ID_COR_2_6_WEAK,
                    json!({"statement": "weak_complements disagrees with the naive search"}),
                );
            }
        }
    }
    ran(configs)
}

const ID_COR_2_6_DIRECT: &str = "cor-2.6-direct-unique";
fn cor_2_6_direct(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for (ti, t) in subs.iter().enumerate() {
        configs += 1;
        let mine: Vec<usize> = pairs
            .iter()
            .filter(|(a, _)| *a == ti)
            .map(|(_, b)| *b)
            .collect();
        if mine.len() > 1 {
            return cex(
                inst,
                ID_COR_2_6_DIRECT,
                json!({
                    "statement": "direct complements are unique when the module lacks zero sums",
                    "t": inst.ids_json(t),
                    "complements": mine.iter().map(|&i| inst.ids_json(&subs[i])).collect::<Vec<_>>(),
                }),
            );
        }
        if do_cross {
            let main = lat.direct_complement(&lat.submodules()[ti]);
            let agree = match (&main, mine.first()) {
                (Ok(None), None) => true,
                (Ok(Some(c)), Some(&i)) => *c == inst.subset(&subs[i]),
                _ => false,
            };
            if !agree {
                return cex(
                    inst,
                    ID_COR_2_6_DIRECT,
                    json!({"statement": "direct_complement disagrees with the exhaustive search"}),
                );
            }
        }
    }
    ran(configs)
}

const ID_COR_2_7: &str = "cor-2.7-complement-antitone";
fn cor_2_7(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let complement_of = |i: usize| -> Option<usize> {
        pairs.iter().find(|(a, _)| *a == i).map(|(_, b)| *b)
    };
    let mut configs = 0u64;
    for (ti, t) in subs.iter().enumerate() {
        let Some(tc) = complement_of(ti) else { continue };
        for (yi, y) in subs.iter().enumerate() {
            let Some(yc) = complement_of(yi) else { continue };
            if naive::is_subset(t, y) {
                configs += 1;
                if !naive::is_subset(&subs[yc], &subs[tc]) {
                    return cex(
                        inst,
                        ID_COR_2_7,
                        json!({
                            "statement": "T ⊆ Y forces Y^c ⊆ T^c for direct summands",
                            "t": inst.ids_json(t),
                            "y": inst.ids_json(y),
                        }),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_THM_2_8: &str = "thm-2.8-fourfold-refinement";
fn thm_2_8(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for &(ti, wi) in pairs {
        for &(yi, zi) in pairs {
            configs += 1;
            let parts: Vec<Vec<usize>> = [(ti, yi), (ti, zi), (wi, yi), (wi, zi)]
                .iter()
                .map(|&(a, b)| naive::inter_lists(&subs[a], &subs[b]))
                .collect();
            if !naive::is_direct_family(en, amb, &parts) {
                return cex(
                    inst,
                    ID_THM_2_8,
                    json!({
                        "statement": "V = T ⊕ W = Y ⊕ Z must refine to the four pairwise intersections",
                        "t": inst.ids_json(&subs[ti]),
                        "w": inst.ids_json(&subs[wi]),
                        "y": inst.ids_json(&subs[yi]),
                        "z": inst.ids_json(&subs[zi]),
                    }),
                );
            }
            if do_cross {
                let report = lat.refine4(
                    &lat.submodules()[ti],
                    &lat.submodules()[wi],
                    &lat.submodules()[yi],
                    &lat.submodules()[zi],
                );
                let ok = matches!(&report, Ok(r)
                    if r.parts.iter().map(|p| inst.id_list(p)).collect::<Vec<_>>() == parts);
                if !ok {
                    return cex(
                        inst,
                        ID_THM_2_8,
                        json!({"statement": "refine4 disagrees with the naive refinement"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_THM_2_10: &str = "thm-2.10-sum-refinement";
fn thm_2_10(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for &(ti, wi) in pairs {
        for &(yi, zi) in pairs {
            configs += 1;
            let sum_ty = naive::sum_lists(en, &subs[ti], &subs[yi]);
            let parts: Vec<Vec<usize>> = [(ti, yi), (ti, zi), (wi, yi)]
                .iter()
                .map(|&(a, b)| naive::inter_lists(&subs[a], &subs[b]))
                .collect();
            if !naive::is_direct_family(en, &sum_ty, &parts) {
                return cex(
                    inst,
                    ID_THM_2_10,
                    json!({
                        "statement": "T + Y must equal (T∩Y) ⊕ (T∩Z) ⊕ (W∩Y)",
                        "t": inst.ids_json(&subs[ti]),
                        "w": inst.ids_json(&subs[wi]),
                        "y": inst.ids_json(&subs[yi]),
                        "z": inst.ids_json(&subs[zi]),
                    }),
                );
            }
            if do_cross {
                let report = lat.sum_decomposition(
                    &lat.submodules()[ti],
                    &lat.submodules()[wi],
                    &lat.submodules()[yi],
                    &lat.submodules()[zi],
                );
                let ok = matches!(&report, Ok(r)
                    if inst.id_list(&r.sum) == sum_ty
                        && r.parts.iter().map(|p| inst.id_list(p)).collect::<Vec<_>>() == parts);
                if !ok {
                    return cex(
                        inst,
                        ID_THM_2_10,
                        json!({"statement": "sum_decomposition disagrees with the naive refinement"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_COR_2_11: &str = "cor-2.11-complement-formulas";
fn cor_2_11(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let complement_of = |i: usize| -> Option<usize> {
        pairs.iter().find(|(a, _)| *a == i).map(|(_, b)| *b)
    };
    let mut configs = 0u64;
    for (ti, t) in subs.iter().enumerate() {
        let Some(wi) = complement_of(ti) else { continue };
        for (yi, y) in subs.iter().enumerate() {
            let Some(zi) = complement_of(yi) else { continue };
            configs += 1;
            let meet = naive::inter_lists(t, y);
            let join = naive::sum_lists(en, t, y);
            // both are direct summands, with the stated complements
            let join_c = naive::direct_complements(en, amb, subs, &join);
            let expected_join_c = naive::inter_lists(&subs[wi], &subs[zi]);
            if join_c.len() != 1 || join_c[0] != expected_join_c {
                return cex(
                    inst,
                    ID_COR_2_11,
                    json!({
                        "statement": "(T + Y)^c must equal T^c ∩ Y^c",
                        "t": inst.ids_json(t),
                        "y": inst.ids_json(y),
                    }),
                );
            }
            let meet_c = naive::direct_complements(en, amb, subs, &meet);
            let tz = naive::inter_lists(t, &subs[zi]);
            let wy = naive::inter_lists(&subs[wi], y);
            let wz = naive::inter_lists(&subs[wi], &subs[zi]);
            let expected_meet_c = naive::sum_lists(en, &naive::sum_lists(en, &tz, &wy), &wz);
            if meet_c.len() != 1 || meet_c[0] != expected_meet_c {
                return cex(
                    inst,
                    ID_COR_2_11,
                    json!({
                        "statement": "(T ∩ Y)^c must equal (T∩Y^c) ⊕ (T^c∩Y) ⊕ (T^c∩Y^c)",
                        "t": inst.ids_json(t),
                        "y": inst.ids_json(y),
                    }),
                );
            }
        }
    }
    ran(configs)
}

const ID_PROP_2_12: &str = "prop-2.12-family-refinement";
fn prop_2_12(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let summands: Vec<usize> = {
        let mut s: Vec<usize> = pairs.iter().map(|(a, _)| *a).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    if summands.len() > 20 {
        return skip("too many direct summands for family quantification");
    }
    let complement_of = |i: usize| -> usize {
        pairs.iter().find(|(a, _)| *a == i).map(|(_, b)| *b).expect("summand")
    };
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    let mut families: Vec<Vec<usize>> = vec![vec![]];
    for size in 1..=3.min(summands.len()) {
        families.extend(combinations(&summands, size));
    }
    for family in &families {
        configs += 1;
        let n = family.len();
        let mut parts: Vec<Vec<usize>> = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let mut part: Vec<usize> = amb.clone();
            for (bit, &ui) in family.iter().enumerate() {
                let side = if mask >> bit & 1 == 1 {
                    &subs[ui]
                } else {
                    &subs[complement_of(ui)]
                };
                part = naive::inter_lists(&part, side);
            }
            parts.push(part);
        }
        if !naive::is_direct_family(en, amb, &parts) {
            return cex(
                inst,
                ID_PROP_2_12,
                json!({
                    "statement": "V must decompose over all index subsets J as U_J ∩ U*_{I∖J}",
                    "family": family.iter().map(|&i| inst.ids_json(&subs[i])).collect::<Vec<_>>(),
                }),
            );
        }
        if do_cross {
            let family_sets: Vec<_> = family.iter().map(|&i| lat.submodules()[i].clone()).collect();
            let report = lat.family_refinement(&family_sets, &inst.budget);
            let ok = matches!(&report, Ok(r)
                if r.parts.iter().map(|p| inst.id_list(p)).collect::<Vec<_>>() == parts);
            if !ok {
                return cex(
                    inst,
                    ID_PROP_2_12,
                    json!({"statement": "family_refinement disagrees with the naive parts"}),
                );
            }
        }
    }
    ran(configs)
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut pos = size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + (size - pos) < items.len() {
                idx[pos] += 1;
                for later in pos + 1..size {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
        }
    }
}

fn indecomposable_summand_indices(inst: &PreparedInstance) -> Vec<usize> {
    let subs = inst.subs.as_ref().expect("caller checked");
    let en = &inst.en;
    let pairs = inst.direct_pairs.as_ref().expect("caller checked");
    let mut summands: Vec<usize> = pairs.iter().map(|(a, _)| *a).collect();
    summands.sort_unstable();
    summands.dedup();
    summands
        .into_iter()
        .filter(|&i| naive::is_indecomposable(en, subs, &subs[i]))
        .collect()
}

const ID_LEM_2_14: &str = "lem-2.14-indecomposable-pairs";
fn lem_2_14(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let indec = indecomposable_summand_indices(inst);
    let mut configs = 0u64;
    for &ti in &indec {
        for &yi in &indec {
            if ti == yi {
                continue;
            }
            configs += 1;
            let sum = naive::sum_lists(en, &subs[ti], &subs[yi]);
            if !naive::is_direct(en, &sum, &subs[ti], &subs[yi]) {
                return cex(
                    inst,
                    ID_LEM_2_14,
                    json!({
                        "statement": "distinct indecomposable summands satisfy T + Y = T ⊕ Y",
                        "t": inst.ids_json(&subs[ti]),
                        "y": inst.ids_json(&subs[yi]),
                    }),
                );
            }
        }
    }
    ran(configs)
}

const ID_PROP_2_15: &str = "prop-2.15-independence";
fn prop_2_15(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.module_lzs {
        return skip("module has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let zero = en.zero_id();
    let indec = indecomposable_summand_indices(inst);
    let mut configs = 0u64;
    for &ti in &indec {
        let others: Vec<usize> = indec.iter().copied().filter(|&i| i != ti).collect();
        if others.is_empty() {
            continue;
        }
        configs += 1;
        let mut total = vec![zero];
        for &oi in &others {
            total = naive::sum_lists(en, &total, &subs[oi]);
        }
        if naive::inter_lists(&subs[ti], &total) != vec![zero] {
            return cex(
                inst,
                ID_PROP_2_15,
                json!({
                    "statement": "an indecomposable summand meets the sum of the others only in zero",
                    "t": inst.ids_json(&subs[ti]),
                }),
            );
        }
    }
    ran(configs)
}

const ID_PROP_2_18: &str = "prop-2.18-dsoc";
fn prop_2_18(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.sr_lzs {
        return skip("semiring has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let zero = en.zero_id();
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    let indec = indecomposable_summand_indices(inst);
    let family: Vec<Vec<usize>> = indec.iter().map(|&i| subs[i].clone()).collect();
    let mut socle = vec![zero];
    for part in &family {
        socle = naive::sum_lists(en, &socle, part);
    }
    if !naive::is_direct_family(en, &socle, &family) {
        return cex(
            inst,
            ID_PROP_2_18,
            json!({"statement": "dsoc must be the direct sum of the indecomposable summands"}),
        );
    }
    let mut complement: Vec<usize> = amb.clone();
    for &i in &indec {
        let c = pairs
            .iter()
            .find(|(a, _)| *a == i)
            .map(|(_, b)| *b)
            .expect("summand has a complement");
        complement = naive::inter_lists(&complement, &subs[c]);
    }
    if !naive::is_direct(en, amb, &socle, &complement) {
        return cex(
            inst,
            ID_PROP_2_18,
            json!({"statement": "dsoc must be a direct summand with complement ∩ T_i^c"}),
        );
    }
    if cross(inst) {
        let lat = inst.lattice.as_ref().expect("subs implies lattice");
        let report = lat.dsoc();
        let ok = matches!(&report, Ok(r)
            if inst.id_list(&r.socle) == socle
                && r.complement.as_ref().map(|c| inst.id_list(c)) == Some(complement.clone()));
        if !ok {
            return cex(
                inst,
                ID_PROP_2_18,
                json!({"statement": "dsoc disagrees with the naive computation"}),
            );
        }
    }
    ran(1 + indec.len() as u64)
}

const ID_THM_2_19: &str = "thm-2.19-dsoc-outside";
fn thm_2_19(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.sr_lzs {
        return skip("semiring has zero sums");
    }
    if !inst.semiring.additively_generated_by_units() {
        return skip("semiring is not additively generated by its units");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let zero = en.zero_id();
    let indec = indecomposable_summand_indices(inst);
    let mut socle = vec![zero];
    for &i in &indec {
        socle = naive::sum_lists(en, &socle, &subs[i]);
    }
    let mut outside: Vec<usize> = inst
        .ambient_ids
        .iter()
        .copied()
        .filter(|v| !naive::contains(&socle, *v))
        .collect();
    outside.push(zero);
    outside.sort_unstable();
    outside.dedup();
    if !naive::is_submodule(en, &outside) {
        return cex(
            inst,
            ID_THM_2_19,
            json!({
                "statement": "(V ∖ dsoc(V)) ∪ {0} must be a submodule when R is additively generated by units",
                "dsoc": inst.ids_json(&socle),
            }),
        );
    }
    ran(1)
}

/// Rank-1 helpers: over `R` as a module over itself, element ids coincide
/// with carrier indexes, so the product of elements `a` and `b` is
/// `scale_id(a, b)`.
fn rank1_idempotents(en: &Enumeration) -> Vec<usize> {
    (0..en.size()).filter(|&e| en.scale_id(e, e) == e).collect()
}

fn rank1_orthogonal(en: &Enumeration, e: usize, f: usize) -> bool {
    let zero = en.zero_id();
    en.scale_id(e, f) == zero && en.scale_id(f, e) == zero
}

fn rank1_primitive(en: &Enumeration, idems: &[usize], e: usize) -> bool {
    let zero = en.zero_id();
    !idems.iter().any(|&e1| {
        e1 != zero
            && idems.iter().any(|&e2| {
                e2 != zero && rank1_orthogonal(en, e1, e2) && en.add_id(e1, e2) == e
            })
    })
}

fn rank1_orbit(en: &Enumeration, e: usize) -> Vec<usize> {
    let mut orbit: Vec<usize> = (0..en.carrier_size()).map(|r| en.scale_id(r, e)).collect();
    orbit.sort_unstable();
    orbit.dedup();
    orbit
}

const ID_THM_3_2: &str = "thm-3.2-projective-form";
fn thm_3_2(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.sr_lzs {
        return skip("semiring has zero sums");
    }
    if inst.rank != 1 {
        return skip("the projective-form check runs on R as a module over itself");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let idems = rank1_idempotents(en);
    let primitives: Vec<usize> = idems
        .iter()
        .copied()
        .filter(|&e| e != en.zero_id() && rank1_primitive(en, &idems, e))
        .collect();
    let indec = indecomposable_summand_indices(inst);
    let mut configs = 0u64;
    for &pi in &indec {
        configs += 1;
        let found = primitives.iter().any(|&e| rank1_orbit(en, e) == subs[pi]);
        if !found {
            return cex(
                inst,
                ID_THM_3_2,
                json!({
                    "statement": "every indecomposable summand of R is Re for a primitive idempotent e",
                    "p": inst.ids_json(&subs[pi]),
                }),
            );
        }
    }
    // dual path: the main report exhibits the same summand set
    if cross(inst) {
        let report = projective_decomposition(&inst.semiring, 1, &inst.budget);
        let ok = matches!(&report, Ok(r) if r.rank1_summands.len() == indec.len());
        if !ok {
            return cex(
                inst,
                ID_THM_3_2,
                json!({"statement": "projective_decomposition disagrees on the summand count"}),
            );
        }
    }
    ran(configs)
}

const ID_THM_3_3: &str = "thm-3.3-partition-of-one";
fn thm_3_3(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.sr_lzs {
        return skip("semiring has zero sums");
    }
    if inst.rank != 1 {
        return skip("the partition theorem runs on R as a module over itself");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let zero = en.zero_id();

    let indec = indecomposable_summand_indices(inst);
    let family: Vec<Vec<usize>> = indec.iter().map(|&i| subs[i].clone()).collect();
    let mut socle = vec![zero];
    for p in &family {
        socle = naive::sum_lists(en, &socle, p);
    }
    let dsoc_whole = socle == *amb;
    let decomposes = naive::is_direct_family(en, amb, &family);

    let idems = rank1_idempotents(en);
    let primitives: Vec<usize> = idems
        .iter()
        .copied()
        .filter(|&e| e != zero && rank1_primitive(en, &idems, e))
        .collect();
    let one = (0..en.size())
        .find(|&e| {
            (0..en.size()).all(|x| en.scale_id(e, x) == x && en.scale_id(x, e) == x)
        })
        .expect("one exists");
    if primitives.len() > 20 {
        return skip("too many primitive idempotents for the subset search");
    }
    let mut partition_exists = false;
    'mask: for mask in 1u32..(1u32 << primitives.len()) {
        let chosen: Vec<usize> = (0..primitives.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| primitives[i])
            .collect();
        for (i, &a) in chosen.iter().enumerate() {
            for &b in chosen.iter().skip(i + 1) {
                if !rank1_orthogonal(en, a, b) {
                    continue 'mask;
                }
            }
        }
        let mut sum = zero;
        for &e in &chosen {
            sum = en.add_id(sum, e);
        }
        if sum == one {
            partition_exists = true;
            break;
        }
    }

    if dsoc_whole != partition_exists || dsoc_whole != decomposes {
        return cex(
            inst,
            ID_THM_3_3,
            json!({
                "statement": "dsoc(R) = R, the partition of one, and finite decomposability must agree",
                "dsoc_is_whole": dsoc_whole,
                "partition_exists": partition_exists,
                "decomposes": decomposes,
            }),
        );
    }
    // dual path against the semiring-level search and the main report
    let main_partition = inst.semiring.partition_of_one();
    let ok = matches!(&main_partition, Ok(p) if p.is_some() == partition_exists);
    if !ok {
        return cex(
            inst,
            ID_THM_3_3,
            json!({"statement": "partition_of_one disagrees with the naive subset search"}),
        );
    }
    ran(3)
}

const ID_COR_3_4: &str = "cor-3.4-multiset-unique";
fn cor_3_4(inst: &PreparedInstance) -> InstanceCheck {
    if !inst.sr_lzs {
        return skip("semiring has zero sums");
    }
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let indec = indecomposable_summand_indices(inst);
    if indec.len() > 14 {
        return skip("too many indecomposable summands for the decomposition search");
    }
    // rank-1 summand classes with their scalar-action fingerprints
    let en1 = match Enumeration::new(Arc::clone(&inst.semiring), 1, &inst.budget) {
        Ok(e) => Arc::new(e),
        Err(_) => return skip("rank-1 enumeration unavailable"),
    };
    let amb1: Vec<usize> = (0..en1.size()).collect();
    let subs1 = naive::all_submodules(&en1, &amb1);
    let idems1 = rank1_idempotents(&en1);
    let primitives1: Vec<usize> = idems1
        .iter()
        .copied()
        .filter(|&e| e != en1.zero_id() && rank1_primitive(&en1, &idems1, e))
        .collect();
    let indec1: Vec<Vec<usize>> = subs1
        .iter()
        .filter(|t| {
            t.len() > 1
                && naive::is_direct_summand(&en1, &amb1, &subs1, t)
                && naive::is_indecomposable(&en1, &subs1, t)
        })
        .cloned()
        .collect();
    let class_idems: Vec<usize> = indec1
        .iter()
        .map(|p| {
            primitives1
                .iter()
                .copied()
                .find(|&e| rank1_orbit(&en1, e) == *p)
                .expect("summand is an idempotent orbit")
        })
        .collect();
    let k = en1.carrier_size();
    let kernel_of = |scale: &dyn Fn(usize) -> usize| -> Vec<bool> {
        let mut rel = vec![false; k * k];
        for r1 in 0..k {
            for r2 in 0..k {
                rel[r1 * k + r2] = scale(r1) == scale(r2);
            }
        }
        rel
    };
    let fingerprints: Vec<Vec<bool>> = class_idems
        .iter()
        .map(|&e| kernel_of(&|r| en1.scale_id(r, e)))
        .collect();

    // match each summand of this instance to one class by a cyclic
    // generator with the same scalar kernel
    let mut class_of: Vec<usize> = Vec::with_capacity(indec.len());
    for &pi in &indec {
        let p = &subs[pi];
        let mut matched = None;
        'classes: for (ci, fp) in fingerprints.iter().enumerate() {
            for &v in p {
                let mut orbit: Vec<usize> =
                    (0..k).map(|r| en.scale_id(r, v)).collect();
                orbit.sort_unstable();
                orbit.dedup();
                if orbit != *p {
                    continue;
                }
                let kv = kernel_of(&|r| en.scale_id(r, v));
                if kv == *fp {
                    matched = Some(ci);
                    break 'classes;
                }
            }
        }
        let Some(ci) = matched else {
            return cex(
                inst,
                ID_COR_3_4,
                json!({
                    "statement": "every indecomposable summand of R^n is a copy of some Re",
                    "p": inst.ids_json(&subs[pi]),
                }),
            );
        };
        class_of.push(ci);
    }

    // exhaustive decomposition search: all subfamilies that decompose the
    // module directly must induce the same class multiset
    let total = amb.len();
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    let m = indec.len();
    let mut configs = 0u64;
    for mask in 1u32..(1u32 << m) {
        let mut product: u128 = 1;
        for i in 0..m {
            if mask >> i & 1 == 1 {
                product *= subs[indec[i]].len() as u128;
            }
        }
        if product != total as u128 {
            continue;
        }
        let family: Vec<Vec<usize>> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| subs[indec[i]].clone())
            .collect();
        if naive::is_direct_family(en, amb, &family) {
            configs += 1;
            let mut counts = vec![0usize; indec1.len()];
            for i in (0..m).filter(|i| mask >> i & 1 == 1) {
                counts[class_of[i]] += 1;
            }
            multisets.push(counts);
        }
    }
    if multisets.is_empty() {
        return cex(
            inst,
            ID_COR_3_4,
            json!({"statement": "the module admits no decomposition into indecomposables"}),
        );
    }
    if !multisets.windows(2).all(|w| w[0] == w[1]) {
        return cex(
            inst,
            ID_COR_3_4,
            json!({"statement": "different decompositions induce different multisets"}),
        );
    }
    if cross(inst) {
        let report = projective_decomposition(&inst.semiring, inst.rank, &inst.budget);
        if let Ok(r) = &report {
            if let Some(fr) = r.free_modules.iter().find(|f| f.rank == inst.rank) {
                let mut main = fr.multiplicities.clone();
                main.sort_unstable();
                let mut mine = multisets[0].clone();
                mine.sort_unstable();
                if main != mine {
                    return cex(
                        inst,
                        ID_COR_3_4,
                        json!({"statement": "projective_decomposition reports a different multiset"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_PROP_4_1: &str = "prop-4.1-weak-forces-lzs";
fn prop_4_1(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let mut configs = 0u64;
    for &(wi, ti) in inst.weak_pairs.as_ref().expect("cached with subs") {
        let t = &subs[ti];
        // extra hypothesis: V ∖ T is closed under addition
        let outside: Vec<usize> = amb.iter().copied().filter(|v| !naive::contains(t, *v)).collect();
        let closed = outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !naive::contains(t, en.add_id(a, b))));
        if !closed {
            continue;
        }
        configs += 1;
        if !naive::lacks_zero_sums(en, &subs[wi]) {
            return cex(
                inst,
                ID_PROP_4_1,
                json!({
                    "statement": "W lacks zero sums when its weak complement has an additively closed outside",
                    "w": inst.ids_json(&subs[wi]),
                    "t": inst.ids_json(t),
                }),
            );
        }
    }
    ran(configs)
}

const ID_LEM_4_2: &str = "lem-4.2-sa-criteria";
fn lem_4_2(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let mut targets: Vec<Vec<usize>> = Vec::new();
    if n <= POWERSET_CAP {
        for mask in 0u32..(1u32 << n) {
            targets.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    } else {
        match &inst.subs {
            Some(s) if s.len() <= PAIR_CAP => targets = s.clone(),
            _ => return skip("no quantifiable subset family within budget"),
        }
    }
    let lat = inst.lattice.as_ref();
    let mut configs = 0u64;
    for s in &targets {
        configs += 1;
        let binary = naive::is_sa(en, amb, s);
        // (ii) the complement is an additive ideal
        let ideal = amb
            .iter()
            .filter(|a| !naive::contains(s, **a))
            .all(|&a| amb.iter().all(|&v| !naive::contains(s, en.add_id(a, v))));
        // (iii) the m-ary criterion for m ≤ 3; sums of up to two terms are
        // the binary case, so only the ternary scan remains
        let ternary = binary
            && amb.iter().all(|&x| {
                amb.iter().all(|&y| {
                    let xy = en.add_id(x, y);
                    amb.iter().all(|&z| {
                        !naive::contains(s, en.add_id(xy, z))
                            || (naive::contains(s, x)
                                && naive::contains(s, y)
                                && naive::contains(s, z))
                    })
                })
            });
        if binary != ideal || binary != ternary {
            return cex(
                inst,
                ID_LEM_4_2,
                json!({
                    "statement": "the three summand-absorbing criteria must agree",
                    "s": inst.ids_json(s),
                    "binary": binary,
                    "ideal": ideal,
                    "ternary": ternary,
                }),
            );
        }
        // dual path on small ambients (the main checker self-tests too)
        if n <= 12 {
            if let Some(lat) = lat {
                if lat.is_sa(&inst.subset(s)) != binary {
                    return cex(
                        inst,
                        ID_LEM_4_2,
                        json!({"statement": "is_sa disagrees with the naive criterion"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_LEM_4_3: &str = "lem-4.3-sa-preimage";
fn lem_4_3(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, TRIPLE_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let sa = inst.sa_flags.as_ref().expect("cached with subs");
    let sa_subs: Vec<usize> = (0..subs.len()).filter(|&i| sa[i]).collect();
    let mut configs = 0u64;
    for w in subs {
        for t in subs {
            let Some(p) = naive::projection_map(en, amb, w, t) else {
                continue;
            };
            for &si in &sa_subs {
                configs += 1;
                let preimage: Vec<usize> = amb
                    .iter()
                    .copied()
                    .filter(|&v| naive::contains(&subs[si], p[v]))
                    .collect();
                if !naive::is_submodule(en, &preimage) || !naive::is_sa(en, amb, &preimage) {
                    return cex(
                        inst,
                        ID_LEM_4_3,
                        json!({
                            "statement": "the preimage of an SA submodule under a projection is SA",
                            "w": inst.ids_json(w),
                            "t": inst.ids_json(t),
                            "s": inst.ids_json(&subs[si]),
                        }),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_REM_4_4: &str = "rem-4.4-sa-closure";
fn rem_4_4(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let sa = inst.sa_flags.as_ref().expect("cached with subs");
    let sa_subs: Vec<usize> = (0..subs.len()).filter(|&i| sa[i]).collect();
    let mut configs = 0u64;
    for &i in &sa_subs {
        for &j in &sa_subs {
            configs += 1;
            let inter = naive::inter_lists(&subs[i], &subs[j]);
            if !naive::is_sa(en, amb, &inter) {
                return cex(
                    inst,
                    ID_REM_4_4,
                    json!({
                        "statement": "intersections of SA submodules are SA",
                        "a": inst.ids_json(&subs[i]),
                        "b": inst.ids_json(&subs[j]),
                    }),
                );
            }
            // chains: when one member contains the other, their union is
            // the larger and must be SA
            if naive::is_subset(&subs[i], &subs[j]) {
                let union: Vec<usize> = {
                    let mut u = subs[i].clone();
                    u.extend_from_slice(&subs[j]);
                    u.sort_unstable();
                    u.dedup();
                    u
                };
                if !naive::is_sa(en, amb, &union) {
                    return cex(
                        inst,
                        ID_REM_4_4,
                        json!({
                            "statement": "unions of chains of SA submodules are SA",
                            "a": inst.ids_json(&subs[i]),
                            "b": inst.ids_json(&subs[j]),
                        }),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_THM_4_6: &str = "thm-4.6-sa-unique-complement";
fn thm_4_6(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let zero = en.zero_id();
    let sa = inst.sa_flags.as_ref().expect("cached with subs");
    let weak = inst.weak_pairs.as_ref().expect("cached with subs");
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for (wi, w) in subs.iter().enumerate() {
        for (ti, t) in subs.iter().enumerate() {
            if !sa[ti]
                || !naive::spans(en, amb, w, t)
                || naive::inter_lists(w, t) != vec![zero]
            {
                continue;
            }
            configs += 1;
            let weak_of_w: Vec<usize> = weak
                .iter()
                .filter(|(a, _)| *a == wi)
                .map(|(_, b)| *b)
                .collect();
            if weak_of_w != vec![ti] {
                return cex(
                    inst,
                    ID_THM_4_6,
                    json!({
                        "statement": "an SA complement is the unique weak complement",
                        "w": inst.ids_json(w),
                        "t": inst.ids_json(t),
                    }),
                );
            }
            // part two: any second SA complement candidate contains T
            for (ui, u) in subs.iter().enumerate() {
                if !sa[ui] || !naive::spans(en, amb, w, u) {
                    continue;
                }
                configs += 1;
                let wu = naive::inter_lists(w, u);
                let inner_weak: Vec<&Vec<usize>> = subs
                    .iter()
                    .filter(|s| naive::is_subset(s, u))
                    .filter(|s| naive::is_weak(en, u, &wu, s))
                    .collect();
                if !naive::is_subset(t, u) || inner_weak != vec![t] {
                    return cex(
                        inst,
                        ID_THM_4_6,
                        json!({
                            "statement": "T must sit inside every SA complement U and be the unique weak complement of W ∩ U in U",
                            "w": inst.ids_json(w),
                            "t": inst.ids_json(t),
                            "u": inst.ids_json(u),
                        }),
                    );
                }
                if do_cross {
                    let report = lat.sa_complement_theorem(
                        &lat.submodules()[wi],
                        &lat.submodules()[ti],
                        Some(&lat.submodules()[ui]),
                    );
                    if !matches!(&report, Ok(r) if r.certified) {
                        return cex(
                            inst,
                            ID_THM_4_6,
                            json!({"statement": "sa_complement_theorem failed to certify"}),
                        );
                    }
                }
            }
        }
    }
    ran(configs)
}

const ID_PROP_4_8: &str = "prop-4.8-semidirect-transitivity";
fn prop_4_8(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, TRIPLE_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for (wi, w) in subs.iter().enumerate() {
        for (si, s) in subs.iter().enumerate() {
            let u = naive::sum_lists(en, w, s);
            if !naive::is_semidirect(en, &u, w, s) {
                continue;
            }
            for (ti, t) in subs.iter().enumerate() {
                if !naive::is_semidirect(en, amb, &u, t) {
                    continue;
                }
                configs += 1;
                let st = naive::sum_lists(en, s, t);
                let wt = naive::sum_lists(en, w, t);
                let ok = naive::is_semidirect(en, &st, s, t)
                    && naive::is_semidirect(en, &wt, w, t)
                    && naive::is_semidirect(en, amb, w, &st);
                if !ok {
                    return cex(
                        inst,
                        ID_PROP_4_8,
                        json!({
                            "statement": "semidirect complements compose: S+T, W+T and W ⋉ (S ⋉ T) are semidirect",
                            "w": inst.ids_json(w),
                            "s": inst.ids_json(s),
                            "t": inst.ids_json(t),
                        }),
                    );
                }
                if do_cross {
                    let report = lat.transitivity_nested(
                        &lat.submodules()[wi],
                        &lat.submodules()[si],
                        &lat.submodules()[ti],
                    );
                    if !matches!(&report, Ok(r) if r.certified) {
                        return cex(
                            inst,
                            ID_PROP_4_8,
                            json!({"statement": "transitivity_nested failed to certify"}),
                        );
                    }
                }
            }
        }
    }
    ran(configs)
}

const ID_PROP_4_9: &str = "prop-4.9-mixed-transitivity";
fn prop_4_9(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, TRIPLE_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let do_cross = cross(inst);
    let lat = inst.lattice.as_ref().expect("subs implies lattice");
    let mut configs = 0u64;
    for (wi, w) in subs.iter().enumerate() {
        for (si, s) in subs.iter().enumerate() {
            let u = naive::sum_lists(en, w, s);
            if !naive::is_weak(en, &u, w, s) {
                continue;
            }
            for (ti, t) in subs.iter().enumerate() {
                if !naive::is_semidirect(en, amb, &u, t) {
                    continue;
                }
                configs += 1;
                let st = naive::sum_lists(en, s, t);
                if !naive::is_weak(en, amb, w, &st) {
                    return cex(
                        inst,
                        ID_PROP_4_9,
                        json!({
                            "statement": "S + T is a weak complement of W when S is weak in W+S and T semidirect in V",
                            "w": inst.ids_json(w),
                            "s": inst.ids_json(s),
                            "t": inst.ids_json(t),
                        }),
                    );
                }
                if do_cross {
                    let report = lat.transitivity_mixed(
                        &lat.submodules()[wi],
                        &lat.submodules()[si],
                        &lat.submodules()[ti],
                    );
                    if !matches!(&report, Ok(r) if r.certified) {
                        return cex(
                            inst,
                            ID_PROP_4_9,
                            json!({"statement": "transitivity_mixed failed to certify"}),
                        );
                    }
                }
            }
        }
    }
    ran(configs)
}

const ID_PROP_4_10: &str = "prop-4.10-subset-transitivity";
fn prop_4_10(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, TRIPLE_CAP);
    let en = &inst.en;
    let sa = inst.sa_flags.as_ref().expect("cached with subs");
    let lzs = inst.lzs_flags.as_ref().expect("cached with subs");
    let mut configs = 0u64;
    for (wi, w) in subs.iter().enumerate() {
        if !lzs[wi] {
            continue;
        }
        for (ti, t) in subs.iter().enumerate() {
            if !sa[ti] {
                continue;
            }
            let wt = naive::sum_lists(en, w, t);
            let wt_meet = naive::inter_lists(w, t);
            for u in subs {
                let wu = naive::sum_lists(en, w, u);
                let wu_meet = naive::inter_lists(w, u);
                if !naive::is_subset(&wt, &wu) || !naive::is_subset(&wt_meet, &wu_meet) {
                    continue;
                }
                configs += 1;
                if !naive::is_subset(t, u) {
                    return cex(
                        inst,
                        ID_PROP_4_10,
                        json!({
                            "statement": "W+T ⊆ W+U and W∩T ⊆ W∩U force T ⊆ U for SA T and W lacking zero sums",
                            "w": inst.ids_json(w),
                            "t": inst.ids_json(t),
                            "u": inst.ids_json(u),
                        }),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_LEM_5_2: &str = "lem-5.2-quotient-ub";
fn lem_5_2(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let le = naive::preceq_matrix(en, amb);
    let classes = naive::classes(n, amb, &le);
    let class_of = |x: usize| naive::class_index(&classes, x);
    // the congruence property
    for class in &classes {
        for &x in class {
            for &y in class {
                for &a in amb {
                    if class_of(en.add_id(x, a)) != class_of(en.add_id(y, a)) {
                        return cex(
                            inst,
                            ID_LEM_5_2,
                            json!({"statement": "Green's equivalence must be an additive congruence"}),
                        );
                    }
                }
            }
        }
    }
    // the quotient is upper bound
    let k = classes.len();
    let qadd = |i: usize, j: usize| class_of(en.add_id(classes[i][0], classes[j][0]));
    for x in 0..k {
        for y in 0..k {
            let xy = qadd(x, y);
            if xy == x {
                continue;
            }
            for z in 0..k {
                if qadd(xy, z) == x {
                    return cex(
                        inst,
                        ID_LEM_5_2,
                        json!({"statement": "the quotient by Green's congruence must be upper bound"}),
                    );
                }
            }
        }
    }
    // ub iff discrete, and ub implies lacking zero sums
    let ub = naive::is_ub(en, amb);
    if ub != classes.iter().all(|c| c.len() == 1) {
        return cex(
            inst,
            ID_LEM_5_2,
            json!({"statement": "V is ub exactly when all classes are singletons"}),
        );
    }
    if ub && !naive::lacks_zero_sums(en, amb) {
        return cex(
            inst,
            ID_LEM_5_2,
            json!({"statement": "upper bound implies lacking zero sums"}),
        );
    }
    // dual path: the main quotient agrees on the partition
    match inst.greens.quotient() {
        Ok(q) => {
            if q.classes != classes || q.ambient_is_ub != ub || !q.ub {
                return cex(
                    inst,
                    ID_LEM_5_2,
                    json!({"statement": "the main quotient disagrees with the naive partition"}),
                );
            }
        }
        Err(_) => {
            return cex(
                inst,
                ID_LEM_5_2,
                json!({"statement": "quotient construction failed"}),
            )
        }
    }
    ran((n as u64).pow(3).max(1))
}

const ID_LEM_5_4: &str = "lem-5.4-convex-hull";
fn lem_5_4(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let le = naive::preceq_matrix(en, amb);
    let classes = naive::classes(n, amb, &le);
    let mut configs = 0u64;
    for &s in amb {
        configs += 1;
        let hull = naive::convex_closure_of_point(n, amb, &le, s);
        let class = classes[naive::class_index(&classes, s)].clone();
        if hull != class {
            return cex(
                inst,
                ID_LEM_5_4,
                json!({
                    "statement": "the convex hull of a point is its equivalence class",
                    "point": inst.id_json(s),
                    "hull": inst.ids_json(&hull),
                    "class": inst.ids_json(&class),
                }),
            );
        }
        // dual path
        match inst.greens.convex_hull_of_point(s) {
            Ok(main) if inst.id_list(&main) == hull => {}
            _ => {
                return cex(
                    inst,
                    ID_LEM_5_4,
                    json!({"statement": "convex_hull_of_point disagrees with the naive fixpoint"}),
                )
            }
        }
    }
    ran(configs)
}

/// Subset families for the convexity claims: the full power set on tiny
/// ambients, submodules otherwise.
fn convexity_targets(inst: &PreparedInstance) -> Option<Vec<Vec<usize>>> {
    let n = inst.en.size();
    if n <= POWERSET_CAP {
        let mut targets = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            targets.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
        Some(targets)
    } else {
        inst.subs
            .as_ref()
            .filter(|s| s.len() <= PAIR_CAP)
            .cloned()
    }
}

const ID_PROP_5_5: &str = "prop-5.5-convex-quotient";
fn prop_5_5(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let Some(targets) = convexity_targets(inst) else {
        return skip("no quantifiable subset family within budget");
    };
    let le = naive::preceq_matrix(en, amb);
    let classes = naive::classes(n, amb, &le);
    let k = classes.len();
    let mut configs = 0u64;
    for s in &targets {
        configs += 1;
        let convex = naive::is_convex(n, amb, &le, s);
        let union_of_classes = s
            .iter()
            .all(|&x| classes[naive::class_index(&classes, x)].iter().all(|y| naive::contains(s, *y)));
        let image: Vec<usize> = {
            let mut out: Vec<usize> = s.iter().map(|&x| naive::class_index(&classes, x)).collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        // convexity of the image in the quotient order
        let image_convex = (0..k).all(|c| {
            naive::contains(&image, c)
                || !(image.iter().any(|&c1| le[classes[c1][0] * n + classes[c][0]])
                    && image.iter().any(|&c2| le[classes[c][0] * n + classes[c2][0]]))
        });
        if convex != (image_convex && union_of_classes) {
            return cex(
                inst,
                ID_PROP_5_5,
                json!({
                    "statement": "S is convex iff its image is convex and S is a union of classes",
                    "s": inst.ids_json(s),
                    "convex": convex,
                    "image_convex": image_convex,
                    "union_of_classes": union_of_classes,
                }),
            );
        }
    }
    ran(configs)
}

const ID_LEM_5_6: &str = "lem-5.6-convex-sa";
fn lem_5_6(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let zero = en.zero_id();
    let Some(targets) = convexity_targets(inst) else {
        return skip("no quantifiable subset family within budget");
    };
    let le = naive::preceq_matrix(en, amb);
    let mut configs = 0u64;
    for s in &targets {
        if !naive::contains(s, zero) {
            continue;
        }
        configs += 1;
        let convex = naive::is_convex(n, amb, &le, s);
        let sa = naive::is_sa(en, amb, s);
        if convex != sa {
            return cex(
                inst,
                ID_LEM_5_6,
                json!({
                    "statement": "a subset containing zero is convex iff it is summand absorbing",
                    "s": inst.ids_json(s),
                    "convex": convex,
                    "sa": sa,
                }),
            );
        }
        // dual path on small ambients
        if n <= 12 {
            if let Some(lat) = inst.lattice.as_ref() {
                let sub = inst.subset(s);
                if lat.is_sa(&sub) != sa || inst.greens.is_convex(&sub) != convex {
                    return cex(
                        inst,
                        ID_LEM_5_6,
                        json!({"statement": "main convexity/SA verdicts disagree with the naive ones"}),
                    );
                }
            }
        }
    }
    ran(configs)
}

const ID_PROP_5_7: &str = "prop-5.7-sa-quotient";
fn prop_5_7(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, PAIR_CAP);
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let le = naive::preceq_matrix(en, amb);
    let classes = naive::classes(n, amb, &le);
    let k = classes.len();
    let qadd = |i: usize, j: usize| {
        naive::class_index(&classes, en.add_id(classes[i][0], classes[j][0]))
    };
    let mut configs = 0u64;
    for s in subs {
        configs += 1;
        let sa = naive::is_sa(en, amb, s);
        let union_of_classes = s
            .iter()
            .all(|&x| classes[naive::class_index(&classes, x)].iter().all(|y| naive::contains(s, *y)));
        let image: Vec<usize> = {
            let mut out: Vec<usize> = s.iter().map(|&x| naive::class_index(&classes, x)).collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let mut image_sa = true;
        'outer: for c1 in 0..k {
            for c2 in 0..k {
                if naive::contains(&image, qadd(c1, c2))
                    && !(naive::contains(&image, c1) && naive::contains(&image, c2))
                {
                    image_sa = false;
                    break 'outer;
                }
            }
        }
        if sa != (union_of_classes && image_sa) {
            return cex(
                inst,
                ID_PROP_5_7,
                json!({
                    "statement": "a submodule is SA iff it is a union of classes with SA image",
                    "s": inst.ids_json(s),
                    "sa": sa,
                    "union_of_classes": union_of_classes,
                    "image_sa": image_sa,
                }),
            );
        }
    }
    ran(configs)
}

const ID_REM_5_8: &str = "rem-5.8-quotient-structure";
fn rem_5_8(inst: &PreparedInstance) -> InstanceCheck {
    let en = &inst.en;
    let amb = &inst.ambient_ids;
    let n = en.size();
    let le = naive::preceq_matrix(en, amb);
    let classes = naive::classes(n, amb, &le);
    let class_of = |x: usize| naive::class_index(&classes, x);
    let mut configs = 0u64;

    // (ii) scalar compatibility: x ≡ y forces a·x ≡ a·y
    for class in &classes {
        for &x in class {
            for &y in class {
                for r in 0..en.carrier_size() {
                    configs += 1;
                    if class_of(en.scale_id(r, x)) != class_of(en.scale_id(r, y)) {
                        return cex(
                            inst,
                            ID_REM_5_8,
                            json!({
                                "statement": "Green's congruence must respect the scalar action",
                                "x": inst.id_json(x),
                                "y": inst.id_json(y),
                            }),
                        );
                    }
                }
            }
        }
    }

    // (i) on R itself the congruence respects multiplication and the
    // quotient is an upper-bound semiring
    if inst.rank == 1 {
        for class in &classes {
            for &x in class {
                for &y in class {
                    for &z in amb {
                        configs += 1;
                        if class_of(en.scale_id(z, x)) != class_of(en.scale_id(z, y))
                            || class_of(en.scale_id(x, z)) != class_of(en.scale_id(y, z))
                        {
                            return cex(
                                inst,
                                ID_REM_5_8,
                                json!({"statement": "Green's congruence must respect multiplication on R"}),
                            );
                        }
                    }
                }
            }
        }
        match quotient_semiring(&inst.semiring, &inst.budget) {
            Ok(q) => {
                if !q.verify_axioms().is_valid() {
                    return cex(
                        inst,
                        ID_REM_5_8,
                        json!({"statement": "the quotient semiring fails the axioms"}),
                    );
                }
                let q_arc = Arc::new(q);
                let qen = match Enumeration::new(Arc::clone(&q_arc), 1, &inst.budget) {
                    Ok(e) => e,
                    Err(_) => {
                        return cex(
                            inst,
                            ID_REM_5_8,
                            json!({"statement": "the quotient semiring cannot be enumerated"}),
                        )
                    }
                };
                let q_amb: Vec<usize> = (0..qen.size()).collect();
                if !naive::is_ub(&qen, &q_amb) {
                    return cex(
                        inst,
                        ID_REM_5_8,
                        json!({"statement": "the quotient semiring must be upper bound"}),
                    );
                }
            }
            Err(Error::BudgetExceeded { .. }) => {}
            Err(_) => {
                return cex(
                    inst,
                    ID_REM_5_8,
                    json!({"statement": "quotient semiring construction failed"}),
                )
            }
        }
    }

    // (iii) decompositions descend to the quotient
    if let (Some(subs), Some(pairs)) = (&inst.subs, &inst.direct_pairs) {
        if subs.len() <= PAIR_CAP {
            let k = classes.len();
            let qadd = |i: usize, j: usize| class_of(en.add_id(classes[i][0], classes[j][0]));
            for &(w1, w2) in pairs {
                configs += 1;
                let image = |s: &[usize]| -> Vec<usize> {
                    let mut out: Vec<usize> = s.iter().map(|&x| class_of(x)).collect();
                    out.sort_unstable();
                    out.dedup();
                    out
                };
                let i1 = image(&subs[w1]);
                let i2 = image(&subs[w2]);
                let mut reps: Vec<Option<(usize, usize)>> = vec![None; k];
                let mut unique = true;
                for &a in &i1 {
                    for &b in &i2 {
                        let c = qadd(a, b);
                        match reps[c] {
                            None => reps[c] = Some((a, b)),
                            Some(prev) => {
                                if prev != (a, b) {
                                    unique = false;
                                }
                            }
                        }
                    }
                }
                if !unique || reps.iter().any(|r| r.is_none()) {
                    return cex(
                        inst,
                        ID_REM_5_8,
                        json!({
                            "statement": "a direct decomposition must descend to the quotient",
                            "w1": inst.ids_json(&subs[w1]),
                            "w2": inst.ids_json(&subs[w2]),
                        }),
                    );
                }
                if cross(inst) {
                    let report = inst.greens.quotient_decomposition(
                        &inst.subset(&subs[w1]),
                        &inst.subset(&subs[w2]),
                    );
                    if !matches!(&report, Ok(r) if r.certified) {
                        return cex(
                            inst,
                            ID_REM_5_8,
                            json!({"statement": "quotient_decomposition failed to certify"}),
                        );
                    }
                }
            }
        }
    }
    ran(configs)
}

const ID_SELF_TEST: &str = "self-test-negated-direct";
/// Deliberately falsified claim, hidden from default runs: asserts no
/// submodule pair decomposes the module directly. The first direct pair is
/// its counterexample, which exercises certificate generation end to end.
fn self_test(inst: &PreparedInstance) -> InstanceCheck {
    let subs = get_subs!(inst, PAIR_CAP);
    let pairs = inst.direct_pairs.as_ref().expect("cached with subs");
    match pairs.first() {
        Some(&(ti, wi)) => cex(
            inst,
            ID_SELF_TEST,
            json!({
                "statement": "deliberately negated: claims no direct decomposition exists",
                "t": inst.ids_json(&subs[ti]),
                "w": inst.ids_json(&subs[wi]),
            }),
        ),
        None => skip("no direct pair in this instance"),
    }
}

/// The registry, in presentation order. Results are re-sorted by id.
pub fn claim_registry() -> Vec<Claim> {
    vec![
        Claim { id: ID_LEM_2_3, title: "weak-complement cancellation", hidden: false, check: lem_2_3 },
        Claim { id: ID_THM_2_4, title: "decompositions descend to weak complements", hidden: false, check: thm_2_4 },
        Claim { id: ID_COR_2_5, title: "weak complements sit inside every complement", hidden: false, check: cor_2_5 },
        Claim { id: ID_COR_2_6_WEAK, title: "at most one weak complement", hidden: false, check: cor_2_6_weak },
        Claim { id: ID_COR_2_6_DIRECT, title: "direct complements are unique", hidden: false, check: cor_2_6_direct },
        Claim { id: ID_COR_2_7, title: "complementation is inclusion-reversing", hidden: false, check: cor_2_7 },
        Claim { id: ID_THM_2_8, title: "fourfold refinement of two decompositions", hidden: false, check: thm_2_8 },
        Claim { id: ID_THM_2_10, title: "three-part refinement of T + Y", hidden: false, check: thm_2_10 },
        Claim { id: ID_COR_2_11, title: "complement formulas for meets and joins", hidden: false, check: cor_2_11 },
        Claim { id: ID_PROP_2_12, title: "refinement over a family of summands", hidden: false, check: prop_2_12 },
        Claim { id: ID_LEM_2_14, title: "distinct indecomposable summands sum directly", hidden: false, check: lem_2_14 },
        Claim { id: ID_PROP_2_15, title: "independence of indecomposable summands", hidden: false, check: prop_2_15 },
        Claim { id: ID_PROP_2_18, title: "the decomposition socle and its complement", hidden: false, check: prop_2_18 },
        Claim { id: ID_THM_2_19, title: "outside of the socle is a submodule", hidden: false, check: thm_2_19 },
        Claim { id: ID_THM_3_2, title: "indecomposable projectives are idempotent orbits", hidden: false, check: thm_3_2 },
        Claim { id: ID_THM_3_3, title: "partition-of-one equivalences", hidden: false, check: thm_3_3 },
        Claim { id: ID_COR_3_4, title: "decomposition multisets are unique", hidden: false, check: cor_3_4 },
        Claim { id: ID_PROP_4_1, title: "weak complement with closed outside forces lzs", hidden: false, check: prop_4_1 },
        Claim { id: ID_LEM_4_2, title: "summand-absorbing criteria agree", hidden: false, check: lem_4_2 },
        Claim { id: ID_LEM_4_3, title: "projection preimages of SA submodules", hidden: false, check: lem_4_3 },
        Claim { id: ID_REM_4_4, title: "SA closure under intersections and chains", hidden: false, check: rem_4_4 },
        Claim { id: ID_THM_4_6, title: "SA complements are unique weak complements", hidden: false, check: thm_4_6 },
        Claim { id: ID_PROP_4_8, title: "semidirect transitivity", hidden: false, check: prop_4_8 },
        Claim { id: ID_PROP_4_9, title: "mixed weak/semidirect transitivity", hidden: false, check: prop_4_9 },
        Claim { id: ID_PROP_4_10, title: "subset transitivity under SA", hidden: false, check: prop_4_10 },
        Claim { id: ID_LEM_5_2, title: "the quotient is upper bound", hidden: false, check: lem_5_2 },
        Claim { id: ID_LEM_5_4, title: "convex hulls are equivalence classes", hidden: false, check: lem_5_4 },
        Claim { id: ID_PROP_5_5, title: "convexity descends to the quotient", hidden: false, check: prop_5_5 },
        Claim { id: ID_LEM_5_6, title: "convex with zero equals summand absorbing", hidden: false, check: lem_5_6 },
        Claim { id: ID_PROP_5_7, title: "SA descends to the quotient", hidden: false, check: prop_5_7 },
        Claim { id: ID_REM_5_8, title: "quotient semiring and module structure", hidden: false, check: rem_5_8 },
        Claim { id: ID_SELF_TEST, title: "harness self-test (deliberately false)", hidden: true, check: self_test },
    ]
}
