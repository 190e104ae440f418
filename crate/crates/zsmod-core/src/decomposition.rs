//! The complement hierarchy and decomposition theory for modules lacking
//! zero sums.
//!
//! For submodules `W`, `T` of `V` with `W + T = V` there is a strict
//! hierarchy of complement notions, each implying the next:
//!
//! 1. *direct*: every `v` has a unique expression `w + t`;
//! 2. *semidirect*: distinct `W`-parts give disjoint translates, equivalently
//!    the projection `p(w+t) = w` is well defined;
//! 3. *weak*: `(w + T) ∩ T = ∅` for every nonzero `w`;
//! 4. *trivial intersection*: `W ∩ T = {0}`.
//!
//! Over a ring all four agree; here the reverse implications may fail, and
//! the census in [`crate::oracle`] exhibits the gaps. Every theorem
//! operation in this module verifies its own preconditions and re-verifies
//! its conclusions by recomputation: the point of the artifact is
//! certification, not trust.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{Budget, Enumeration, Submodule, Subset, Vector};
use crate::semiring::{Elem, Semiring};

/// The exact level a pair `(W, T)` attains, highest last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    /// `W + T != V` or `W ∩ T != {0}`.
    None,
    TrivialIntersection,
    Weak,
    Semidirect,
    Direct,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::None => "none",
            Level::TrivialIntersection => "trivial-intersection",
            Level::Weak => "weak",
            Level::Semidirect => "semidirect",
            Level::Direct => "direct",
        }
    }
}

/// The first (in canonical element order) tuple breaking the next level
/// above the attained one. Fields are element ids of the ambient
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `W + T` misses this element of `V`.
    NotSpanning { missing: usize },
    /// A nonzero element of `W ∩ T`.
    NonzeroIntersection { common: usize },
    /// `w + t1 = t2` with `w != 0`.
    NotWeak { w: usize, t1: usize, t2: usize },
    /// `w1 + t1 = w2 + t2` with `w1 != w2`.
    NotSemidirect { w1: usize, t1: usize, w2: usize, t2: usize },
    /// `w + t1 = w + t2` with `t1 != t2`.
    NotDirect { w: usize, t1: usize, t2: usize },
}

/// Classification result: the highest level that holds, plus the witness
/// breaking the next one (absent only for `Direct`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementClass {
    pub level: Level,
    pub witness: Option<Witness>,
}

/// A decomposition into parts, re-verified exhaustively. Zero parts are
/// retained so part counts match the refinement formulas exactly;
/// [`DecompositionReport::nonzero_parts`] is the pruned view.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub parts: Vec<Subset>,
    pub kind: Level,
    pub certified: bool,
}

impl DecompositionReport {
    pub fn nonzero_parts(&self) -> Vec<&Subset> {
        self.parts.iter().filter(|p| p.count() > 1).collect()
    }
}

/// The three-part refinement of `T + Y` plus the verified complement
/// formulas.
#[derive(Debug, Clone)]
pub struct SumDecompositionReport {
    pub sum: Subset,
    pub parts: [Subset; 3],
    /// `(T + Y)^c`, verified equal to `T^c ∩ Y^c`.
    pub sum_complement: Subset,
    /// `(T ∩ Y)^c`, verified equal to `(T ∩ Z) ⊕ (W ∩ Y) ⊕ (W ∩ Z)`.
    pub meet_complement: Subset,
    pub certified: bool,
}

/// The decomposition socle: the (direct) sum of all indecomposable direct
/// summands, with its direct complement.
#[derive(Debug, Clone)]
pub struct DsocReport {
    pub socle: Subset,
    pub complement: Option<Subset>,
    pub summands: Vec<Subset>,
    /// Whether the semiring is additively generated by its units, in which
    /// case the submodule property of `(V \ dsoc) ∪ {0}` was also verified.
    pub units_property_checked: bool,
}

/// An `R`-linear projection `p(w + t) = w` with image `W` and kernel `T`,
/// materialized as a map table on the ambient and verified to be linear
/// and idempotent.
#[derive(Debug, Clone)]
pub struct Projection {
    map: Vec<usize>,
    pub image: Subset,
    pub kernel: Subset,
}

impl Projection {
    pub fn apply(&self, id: usize) -> usize {
        let out = self.map[id];
        debug_assert_ne!(out, usize::MAX, "element outside the projection domain");
        out
    }
}

/// A certification report: named checks, all of which passed (a failed
/// check is an internal-invariant error, never a quiet `false`).
#[derive(Debug, Clone)]
pub struct CertReport {
    pub checks: Vec<(String, bool)>,
    pub certified: bool,
}

impl CertReport {
    pub(crate) fn new() -> CertReport {
        CertReport {
            checks: Vec::new(),
            certified: true,
        }
    }

    pub(crate) fn record(&mut self, name: &str, ok: bool) -> Result<()> {
        self.checks.push((name.to_string(), ok));
        if ok {
            Ok(())
        } else {
            self.certified = false;
            Err(Error::Invariant(format!(
                "certification check failed: {name}"
            )))
        }
    }
}

/// An indecomposable direct summand `Re` of the rank-1 module `R`, with
/// its generating primitive idempotent.
#[derive(Debug, Clone)]
pub struct ReSummand {
    pub module: Submodule,
    pub idempotent: Elem,
    pub primitive: bool,
}

/// Decomposition shape of one free module `R^n`.
#[derive(Debug, Clone)]
pub struct FreeRankReport {
    pub rank: usize,
    /// Multiplicity of each rank-1 summand class, aligned with
    /// [`ProjectiveReport::rank1_summands`].
    pub multiplicities: Vec<usize>,
    /// The multiset is the same across every full decomposition found by
    /// the exhaustive search.
    pub unique: bool,
}

/// The projective-decomposition certificate for a finite semiring.
#[derive(Debug, Clone)]
pub struct ProjectiveReport {
    pub dsoc_is_whole: bool,
    pub partition: Option<Vec<Elem>>,
    pub decomposes_into_indecomposables: bool,
    pub rank1_summands: Vec<ReSummand>,
    pub free_modules: Vec<FreeRankReport>,
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(msg.to_string()))
    }
}

fn check_submodule(en: &Enumeration, ambient: &Subset, s: &Subset, name: &str) -> Result<()> {
    require(
        s.is_subset_of(ambient),
        &format!("{name} is not contained in the ambient module"),
    )?;
    require(
        en.is_submodule(s),
        &format!("{name} is not a submodule (not closed, or missing zero)"),
    )
}

/// Classify the pair `(W, T)` inside `ambient`, returning the highest level
/// of the hierarchy that holds together with the first counterexample in
/// canonical order to the next level.
pub fn classify_in(
    en: &Enumeration,
    ambient: &Subset,
    w: &Subset,
    t: &Subset,
) -> Result<ComplementClass> {
    check_submodule(en, ambient, w, "W")?;
    check_submodule(en, ambient, t, "T")?;
    let zero = en.zero_id();

    let span = en.sum_sets(w, t);
    if span != *ambient {
        let missing = ambient.minus(&span).first().expect("span is smaller");
        return Ok(ComplementClass {
            level: Level::None,
            witness: Some(Witness::NotSpanning { missing }),
        });
    }
    let inter = w.intersection(t);
    if let Some(common) = inter.iter().find(|&i| i != zero) {
        return Ok(ComplementClass {
            level: Level::None,
            witness: Some(Witness::NonzeroIntersection { common }),
        });
    }

    // weak: w + t1 = t2 forces w = 0
    let t_ids: Vec<usize> = t.iter().collect();
    for wi in w.iter().filter(|&wi| wi != zero) {
        for &t1 in &t_ids {
            let t2 = en.add_id(wi, t1);
            if t.contains(t2) {
                return Ok(ComplementClass {
                    level: Level::TrivialIntersection,
                    witness: Some(Witness::NotWeak { w: wi, t1, t2 }),
                });
            }
        }
    }

    // one representation scan decides both remaining levels
    let mut rep: Vec<Option<(usize, usize)>> = vec![None; en.size()];
    let mut not_semidirect: Option<Witness> = None;
    let mut not_direct: Option<Witness> = None;
    for wi in w.iter() {
        for &t1 in &t_ids {
            let v = en.add_id(wi, t1);
            match rep[v] {
                None => rep[v] = Some((wi, t1)),
                Some((pw, pt)) => {
                    if pw != wi && not_semidirect.is_none() {
                        not_semidirect = Some(Witness::NotSemidirect {
                            w1: pw,
                            t1: pt,
                            w2: wi,
                            t2: t1,
                        });
                    }
                    if pw == wi && pt != t1 && not_direct.is_none() {
                        not_direct = Some(Witness::NotDirect {
                            w: wi,
                            t1: pt,
                            t2: t1,
                        });
                    }
                }
            }
        }
    }
    Ok(match (not_semidirect, not_direct) {
        (Some(w), _) => ComplementClass {
            level: Level::Weak,
            witness: Some(w),
        },
        (None, Some(w)) => ComplementClass {
            level: Level::Semidirect,
            witness: Some(w),
        },
        (None, None) => ComplementClass {
            level: Level::Direct,
            witness: None,
        },
    })
}

/// Build the projection `p(w + t) = w`. Requires at least a semidirect
/// pair, otherwise the map is ill-defined.
pub fn projection_in(
    en: &Enumeration,
    ambient: &Subset,
    w: &Subset,
    t: &Subset,
) -> Result<Projection> {
    let class = classify_in(en, ambient, w, t)?;
    require(
        class.level >= Level::Semidirect,
        &format!(
            "projection requires a semidirect pair, classification is `{}`",
            class.level.name()
        ),
    )?;
    let mut map = vec![usize::MAX; en.size()];
    for wi in w.iter() {
        for ti in t.iter() {
            let v = en.add_id(wi, ti);
            debug_assert!(map[v] == usize::MAX || map[v] == wi);
            map[v] = wi;
        }
    }
    let p = Projection {
        map,
        image: w.clone(),
        kernel: t.clone(),
    };
    // exhaustive self-verification: idempotence, image, kernel, linearity
    let zero = en.zero_id();
    let members: Vec<usize> = ambient.iter().collect();
    for &v in &members {
        let pv = p.apply(v);
        if p.apply(pv) != pv || !w.contains(pv) {
            return Err(Error::Invariant(
                "projection is not idempotent onto W".into(),
            ));
        }
        if (pv == zero) != t.contains(v) {
            return Err(Error::Invariant("projection kernel differs from T".into()));
        }
        for r in 0..en.carrier_size() {
            if p.apply(en.scale_id(r, v)) != en.scale_id(r, pv) {
                return Err(Error::Invariant("projection is not scalar-linear".into()));
            }
        }
        for &u in &members {
            if p.apply(en.add_id(v, u)) != en.add_id(pv, p.apply(u)) {
                return Err(Error::Invariant("projection is not additive".into()));
            }
        }
    }
    Ok(p)
}

/// Summand absorbing: `x + y ∈ W` forces `x, y ∈ W`, for any subset `W` of
/// the ambient. The equivalent criteria (the set-theoretic complement is
/// an additive ideal; the `m`-ary sum version for `m ≤ 3`) are evaluated
/// too and must agree, as a built-in self-test.
pub fn is_sa_in(en: &Enumeration, ambient: &Subset, w: &Subset) -> bool {
    let members: Vec<usize> = ambient.iter().collect();
    let mut binary = true;
    'outer: for &x in &members {
        for &y in &members {
            if w.contains(en.add_id(x, y)) && !(w.contains(x) && w.contains(y)) {
                binary = false;
                break 'outer;
            }
        }
    }
    // (ii) the set-theoretic complement is an additive ideal
    let mut ideal = true;
    'outer2: for &a in &members {
        if w.contains(a) {
            continue;
        }
        for &v in &members {
            if w.contains(en.add_id(a, v)) {
                ideal = false;
                break 'outer2;
            }
        }
    }
    // (iii) ternary sums, the m ≤ 3 instance of the m-ary criterion
    let mut ternary = binary;
    if binary {
        'outer3: for &x in &members {
            for &y in &members {
                let xy = en.add_id(x, y);
                for &z in &members {
                    if w.contains(en.add_id(xy, z))
                        && !(w.contains(x) && w.contains(y) && w.contains(z))
                    {
                        ternary = false;
                        break 'outer3;
                    }
                }
            }
        }
    }
    assert_eq!(binary, ideal, "SA criteria (i) and (ii) disagree");
    assert_eq!(binary, ternary, "SA criteria (i) and (iii) disagree");
    binary
}

/// Directness of a pair inside an arbitrary ambient submodule: the sum map
/// `A × B → target` is surjective, and bijectivity is then exactly
/// `|A| * |B| = |target|`.
pub fn is_direct_pair_in(en: &Enumeration, target: &Subset, a: &Subset, b: &Subset) -> bool {
    a.count() * b.count() == target.count() && en.sum_sets(a, b) == *target
}

/// Directness of a finite family: sizes multiply to the target size and the
/// iterated sum is the target.
pub fn is_direct_family_in(en: &Enumeration, target: &Subset, parts: &[Subset]) -> bool {
    let mut product: u128 = 1;
    for p in parts {
        product = product.saturating_mul(p.count() as u128);
        if product > target.count() as u128 {
            return false;
        }
    }
    if product != target.count() as u128 {
        return false;
    }
    let mut acc = en.zero_set();
    for p in parts {
        acc = en.sum_sets(&acc, p);
    }
    acc == *target
}

/// One ambient module together with its complete submodule lattice and the
/// decomposition operations.
pub struct Lattice {
    en: Arc<Enumeration>,
    ambient: Subset,
    subs: Vec<Subset>,
    ambient_lacks_zero_sums: bool,
}

impl Lattice {
    /// The lattice of the full module `R^n`.
    pub fn full(en: &Arc<Enumeration>, budget: &Budget) -> Result<Lattice> {
        Lattice::new(en, en.full_set(), budget)
    }

    pub fn new(en: &Arc<Enumeration>, ambient: Subset, budget: &Budget) -> Result<Lattice> {
        require(en.is_submodule(&ambient), "ambient is not a submodule")?;
        let subs = en.all_submodules_within(&ambient, budget)?;
        let ambient_lacks_zero_sums = en.lacks_zero_sums_in(&ambient);
        Ok(Lattice {
            en: Arc::clone(en),
            ambient,
            subs,
            ambient_lacks_zero_sums,
        })
    }

    /// Restrict to a submodule as the new ambient, reusing the computed
    /// lattice.
    pub fn sub_lattice(&self, t: &Subset) -> Lattice {
        let subs: Vec<Subset> = self
            .subs
            .iter()
            .filter(|s| s.is_subset_of(t))
            .cloned()
            .collect();
        Lattice {
            en: Arc::clone(&self.en),
            ambient: t.clone(),
            subs,
            ambient_lacks_zero_sums: self.ambient_lacks_zero_sums
                || self.en.lacks_zero_sums_in(t),
        }
    }

    pub fn enumeration(&self) -> &Enumeration {
        &self.en
    }

    pub fn ambient(&self) -> &Subset {
        &self.ambient
    }

    pub fn submodules(&self) -> &[Subset] {
        &self.subs
    }

    pub fn ambient_lacks_zero_sums(&self) -> bool {
        self.ambient_lacks_zero_sums
    }

    pub fn zero_sub(&self) -> Subset {
        self.en.zero_set()
    }

    pub fn classify(&self, w: &Subset, t: &Subset) -> Result<ComplementClass> {
        classify_in(&self.en, &self.ambient, w, t)
    }

    pub fn projection(&self, w: &Subset, t: &Subset) -> Result<Projection> {
        projection_in(&self.en, &self.ambient, w, t)
    }

    pub fn is_direct_pair(&self, a: &Subset, b: &Subset) -> bool {
        is_direct_pair_in(&self.en, &self.ambient, a, b)
    }

    /// The unique `W` with `V = T ⊕ W`, if `T` is a direct summand. Under
    /// lacking zero sums a second candidate is an internal-invariant
    /// failure; with zero sums present, multiple candidates are reported as
    /// a multiplicity error naming them all.
    pub fn direct_complement(&self, t: &Subset) -> Result<Option<Subset>> {
        check_submodule(&self.en, &self.ambient, t, "T")?;
        let mut candidates: Vec<Subset> = self
            .subs
            .iter()
            .filter(|c| self.is_direct_pair(t, c))
            .cloned()
            .collect();
        if candidates.len() > 1 {
            if self.ambient_lacks_zero_sums {
                return Err(Error::Invariant(format!(
                    "{} direct complements found although the ambient lacks zero sums",
                    candidates.len()
                )));
            }
            return Err(Error::MultipleComplements {
                candidates: candidates.iter().map(|c| self.en.submodule(c)).collect(),
            });
        }
        Ok(candidates.pop())
    }

    /// All weak complements of `W`. When `W` lacks zero sums the list has
    /// length at most one; more is an internal-invariant failure.
    pub fn weak_complements(&self, w: &Subset) -> Result<Vec<Subset>> {
        check_submodule(&self.en, &self.ambient, w, "W")?;
        let found: Vec<Subset> = self
            .subs
            .iter()
            .filter(|t| {
                self.classify(w, t)
                    .map(|c| c.level >= Level::Weak)
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        if found.len() > 1 && self.en.lacks_zero_sums_in(w) {
            return Err(Error::Invariant(format!(
                "{} weak complements found although W lacks zero sums",
                found.len()
            )));
        }
        Ok(found)
    }

    /// Descent: a weak complement `T` of `W` splits along any decomposition
    /// `V = Y + Z` as `T = (T ∩ Y) + (T ∩ Z)`.
    pub fn descend(
        &self,
        w: &Subset,
        t: &Subset,
        y: &Subset,
        z: &Subset,
    ) -> Result<(Subset, Subset)> {
        require(
            self.ambient_lacks_zero_sums,
            "descent requires the ambient module to lack zero sums",
        )?;
        let class = self.classify(w, t)?;
        require(
            class.level >= Level::Weak,
            "T must be a weak complement of W",
        )?;
        check_submodule(&self.en, &self.ambient, y, "Y")?;
        check_submodule(&self.en, &self.ambient, z, "Z")?;
        require(
            self.en.sum_sets(y, z) == self.ambient,
            "Y + Z must equal the ambient module",
        )?;
        let ty = t.intersection(y);
        let tz = t.intersection(z);
        if self.en.sum_sets(&ty, &tz) != *t {
            return Err(Error::Invariant(
                "descent failed: (T ∩ Y) + (T ∩ Z) differs from T".into(),
            ));
        }
        Ok((ty, tz))
    }

    fn require_direct_decomposition(&self, a: &Subset, b: &Subset, name: &str) -> Result<()> {
        check_submodule(&self.en, &self.ambient, a, name)?;
        check_submodule(&self.en, &self.ambient, b, name)?;
        require(
            self.is_direct_pair(a, b),
            &format!("{name} is not a direct decomposition of the ambient"),
        )
    }

    /// Fourfold refinement: `V = T ⊕ W = Y ⊕ Z` refines to
    /// `(T∩Y) ⊕ (T∩Z) ⊕ (W∩Y) ⊕ (W∩Z)`. Zero parts are retained.
    pub fn refine4(
        &self,
        t: &Subset,
        w: &Subset,
        y: &Subset,
        z: &Subset,
    ) -> Result<DecompositionReport> {
        require(
            self.ambient_lacks_zero_sums,
            "refinement requires the ambient module to lack zero sums",
        )?;
        self.require_direct_decomposition(t, w, "T ⊕ W")?;
        self.require_direct_decomposition(y, z, "Y ⊕ Z")?;
        let parts = vec![
            t.intersection(y),
            t.intersection(z),
            w.intersection(y),
            w.intersection(z),
        ];
        if !is_direct_family_in(&self.en, &self.ambient, &parts) {
            return Err(Error::Invariant(
                "fourfold refinement is not a direct decomposition".into(),
            ));
        }
        Ok(DecompositionReport {
            parts,
            kind: Level::Direct,
            certified: true,
        })
    }

    /// `T + Y = (T∩Y) ⊕ (T∩Z) ⊕ (W∩Y)`, with the complement formulas
    /// `(T+Y)^c = T^c ∩ Y^c` and
    /// `(T∩Y)^c = (T∩Z) ⊕ (W∩Y) ⊕ (W∩Z)` re-verified.
    pub fn sum_decomposition(
        &self,
        t: &Subset,
        w: &Subset,
        y: &Subset,
        z: &Subset,
    ) -> Result<SumDecompositionReport> {
        require(
            self.ambient_lacks_zero_sums,
            "refinement requires the ambient module to lack zero sums",
        )?;
        self.require_direct_decomposition(t, w, "T ⊕ W")?;
        self.require_direct_decomposition(y, z, "Y ⊕ Z")?;
        let sum = self.en.sum_sets(t, y);
        let parts = [t.intersection(y), t.intersection(z), w.intersection(y)];
        if !is_direct_family_in(&self.en, &sum, &parts) {
            return Err(Error::Invariant(
                "three-part sum decomposition failed verification".into(),
            ));
        }
        let wz = w.intersection(z);
        let sum_complement = self
            .direct_complement(&sum)?
            .ok_or_else(|| Error::Invariant("T + Y has no direct complement".into()))?;
        if sum_complement != wz {
            return Err(Error::Invariant("(T + Y)^c differs from T^c ∩ Y^c".into()));
        }
        let meet = t.intersection(y);
        let meet_complement = self
            .direct_complement(&meet)?
            .ok_or_else(|| Error::Invariant("T ∩ Y has no direct complement".into()))?;
        let expected = self
            .en
            .sum_sets(&self.en.sum_sets(&parts[1], &parts[2]), &wz);
        if meet_complement != expected {
            return Err(Error::Invariant(
                "(T ∩ Y)^c differs from (T∩Z) ⊕ (W∩Y) ⊕ (W∩Z)".into(),
            ));
        }
        if !is_direct_family_in(
            &self.en,
            &meet_complement,
            &[parts[1].clone(), parts[2].clone(), wz],
        ) {
            return Err(Error::Invariant(
                "(T ∩ Y)^c does not decompose as claimed".into(),
            ));
        }
        Ok(SumDecompositionReport {
            sum,
            parts,
            sum_complement,
            meet_complement,
            certified: true,
        })
    }

    /// Refinement over a finite family of direct summands: the parts
    /// `U_J ∩ U*_{I∖J}` over every index subset `J`, in ascending bitmask
    /// order (bit `i` set means `U_i ∈ J`).
    pub fn family_refinement(
        &self,
        family: &[Subset],
        budget: &Budget,
    ) -> Result<DecompositionReport> {
        require(
            self.ambient_lacks_zero_sums,
            "refinement requires the ambient module to lack zero sums",
        )?;
        if family.len() > budget.max_family {
            return Err(Error::BudgetExceeded {
                count: family.len(),
                cap: budget.max_family,
            });
        }
        let mut complements = Vec::with_capacity(family.len());
        for (i, u) in family.iter().enumerate() {
            let c = self.direct_complement(u)?.ok_or_else(|| {
                Error::precondition(format!("family member {i} is not a direct summand"))
            })?;
            complements.push(c);
        }
        let n = family.len();
        let mut parts = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let mut part = self.ambient.clone();
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    part = part.intersection(&family[i]);
                } else {
                    part = part.intersection(&complements[i]);
                }
            }
            parts.push(part);
        }
        if !is_direct_family_in(&self.en, &self.ambient, &parts) {
            return Err(Error::Invariant(
                "family refinement is not a direct decomposition".into(),
            ));
        }
        Ok(DecompositionReport {
            parts,
            kind: Level::Direct,
            certified: true,
        })
    }

    /// No decomposition into two nonzero submodules exists. The zero module
    /// is neither decomposable nor indecomposable; asking is an error.
    pub fn is_indecomposable(&self) -> Result<bool> {
        require(
            self.ambient.count() > 1,
            "indecomposability is only defined for nonzero modules",
        )?;
        Ok(self.direct_pair_of(&self.ambient).is_none())
    }

    /// First nontrivial direct decomposition of `target` (a submodule),
    /// searching candidate pairs in canonical order.
    fn direct_pair_of(&self, target: &Subset) -> Option<(Subset, Subset)> {
        let size = target.count();
        let candidates: Vec<&Subset> = self
            .subs
            .iter()
            .filter(|s| s.count() > 1 && s.count() < size && s.is_subset_of(target))
            .collect();
        for a in &candidates {
            for b in &candidates {
                if a.count() * b.count() == size && is_direct_pair_in(&self.en, target, a, b) {
                    return Some(((*a).clone(), (*b).clone()));
                }
            }
        }
        None
    }

    /// Is the submodule a direct summand of the ambient?
    pub fn is_direct_summand(&self, t: &Subset) -> bool {
        let total = self.ambient.count();
        self.subs.iter().any(|c| {
            t.count() * c.count() == total && is_direct_pair_in(&self.en, &self.ambient, t, c)
        })
    }

    /// All direct summands of the ambient that are indecomposable as
    /// modules in their own right.
    pub fn indecomposable_summands(&self) -> Vec<Subset> {
        self.subs
            .iter()
            .filter(|t| t.count() > 1)
            .filter(|t| self.is_direct_summand(t))
            .filter(|t| self.direct_pair_of(t).is_none())
            .cloned()
            .collect()
    }

    /// The decomposition socle: the sum of all indecomposable direct
    /// summands, verified to be their direct sum and a direct summand of
    /// the ambient with complement the intersection of the individual
    /// complements.
    pub fn dsoc(&self) -> Result<DsocReport> {
        require(
            self.en.semiring().lacks_zero_sums(),
            "dsoc requires a semiring lacking zero sums",
        )?;
        let summands = self.indecomposable_summands();
        let mut socle = self.zero_sub();
        for t in &summands {
            socle = self.en.sum_sets(&socle, t);
        }
        if !is_direct_family_in(&self.en, &socle, &summands) {
            return Err(Error::Invariant(
                "the indecomposable summands do not sum directly".into(),
            ));
        }
        let mut complement = self.ambient.clone();
        for t in &summands {
            let c = self
                .direct_complement(t)?
                .ok_or_else(|| Error::Invariant("summand lost its complement".into()))?;
            complement = complement.intersection(&c);
        }
        if !self.is_direct_pair(&socle, &complement) {
            return Err(Error::Invariant(
                "dsoc complement formula ∩ T_i^c failed verification".into(),
            ));
        }
        // when R is additively generated by units, the set-theoretic
        // complement of the socle (plus zero) is itself a submodule
        let units_property_checked = self.en.semiring().additively_generated_by_units();
        if units_property_checked {
            let mut outside = self.ambient.minus(&socle);
            outside.insert(self.en.zero_id());
            if !self.en.is_submodule(&outside) {
                return Err(Error::Invariant(
                    "(V \\ dsoc) ∪ {0} is not a submodule despite unit generation".into(),
                ));
            }
        }
        Ok(DsocReport {
            socle,
            complement: Some(complement),
            summands,
            units_property_checked,
        })
    }

    /// Summand absorbing: see [`is_sa_in`].
    pub fn is_sa(&self, w: &Subset) -> bool {
        is_sa_in(&self.en, &self.ambient, w)
    }

    /// For `V = W + T` with `T` summand absorbing and `W ∩ T = {0}`:
    /// certifies that `T` is the *unique* weak complement of `W`, that `W`
    /// lacks zero sums, and, when a second SA complement candidate `U` is
    /// supplied, that `T ⊆ U` with `T` the unique weak complement of
    /// `W ∩ U` inside `U`.
    pub fn sa_complement_theorem(
        &self,
        w: &Subset,
        t: &Subset,
        u: Option<&Subset>,
    ) -> Result<CertReport> {
        check_submodule(&self.en, &self.ambient, w, "W")?;
        check_submodule(&self.en, &self.ambient, t, "T")?;
        require(
            self.en.sum_sets(w, t) == self.ambient,
            "W + T must equal the ambient module",
        )?;
        require(self.is_sa(t), "T must be summand absorbing")?;
        require(
            w.intersection(t) == self.zero_sub(),
            "W ∩ T must be the zero submodule",
        )?;

        let mut report = CertReport::new();
        let class = self.classify(w, t)?;
        report.record("T is a weak complement of W", class.level >= Level::Weak)?;
        let weak = self.weak_complements(w)?;
        report.record(
            "T is the unique weak complement of W",
            weak.len() == 1 && weak[0] == *t,
        )?;
        report.record("W lacks zero sums", self.en.lacks_zero_sums_in(w))?;
        if let Some(u) = u {
            check_submodule(&self.en, &self.ambient, u, "U")?;
            require(
                self.en.sum_sets(w, u) == self.ambient,
                "W + U must equal the ambient module",
            )?;
            require(self.is_sa(u), "U must be summand absorbing")?;
            report.record("T ⊆ U", t.is_subset_of(u))?;
            let inner = self.sub_lattice(u);
            let wu = w.intersection(u);
            let inner_weak = inner.weak_complements(&wu)?;
            report.record(
                "T is the unique weak complement of W ∩ U in U",
                inner_weak.len() == 1 && inner_weak[0] == *t,
            )?;
        }
        Ok(report)
    }

    /// Semidirect transitivity: from `U = W ⋉ S` and `V = U ⋉ T` certify
    /// `S + T = S ⋉ T`, `W + T = W ⋉ T`, and the nested identities
    /// `V = W ⋉ (S ⋉ T) = (W ⋉ S) ⋉ T`, via the composed projection.
    pub fn transitivity_nested(&self, w: &Subset, s: &Subset, t: &Subset) -> Result<CertReport> {
        let u = self.en.sum_sets(w, s);
        let inner_class = classify_in(&self.en, &u, w, s)?;
        require(
            inner_class.level >= Level::Semidirect,
            "S must be a semidirect complement of W in W + S",
        )?;
        let outer_class = self.classify(&u, t)?;
        require(
            outer_class.level >= Level::Semidirect,
            "T must be a semidirect complement of W + S in V",
        )?;

        let mut report = CertReport::new();
        let st = self.en.sum_sets(s, t);
        let wt = self.en.sum_sets(w, t);
        report.record(
            "S + T = S semidirect T",
            classify_in(&self.en, &st, s, t)?.level >= Level::Semidirect,
        )?;
        report.record(
            "W + T = W semidirect T",
            classify_in(&self.en, &wt, w, t)?.level >= Level::Semidirect,
        )?;
        report.record(
            "V = W semidirect (S + T)",
            classify_in(&self.en, &self.ambient, w, &st)?.level >= Level::Semidirect,
        )?;
        report.record(
            "V = (W + S) semidirect T",
            self.classify(&u, t)?.level >= Level::Semidirect,
        )?;

        // the composed projection q ∘ p is a projection onto W with kernel
        // S + T, and p restricts to S + T → S and W + T → W
        let p = projection_in(&self.en, &self.ambient, &u, t)?;
        let q = projection_in(&self.en, &u, w, s)?;
        let zero = self.en.zero_id();
        let kernel_ok = self
            .ambient
            .iter()
            .all(|v| (q.apply(p.apply(v)) == zero) == st.contains(v));
        let restrict_st = st.iter().all(|v| s.contains(p.apply(v)));
        let restrict_wt = wt.iter().all(|v| w.contains(p.apply(v)));
        report.record("kernel of the composed projection is S + T", kernel_ok)?;
        report.record("p restricts to S + T onto S", restrict_st)?;
        report.record("p restricts to W + T onto W", restrict_wt)?;
        Ok(report)
    }

    /// Mixed transitivity: `S` a weak complement of `W` in `U = W + S` and
    /// `T` a semidirect complement of `U` in `V` give `S + T` a weak
    /// complement of `W` in `V`.
    pub fn transitivity_mixed(&self, w: &Subset, s: &Subset, t: &Subset) -> Result<CertReport> {
        let u = self.en.sum_sets(w, s);
        require(
            classify_in(&self.en, &u, w, s)?.level >= Level::Weak,
            "S must be a weak complement of W in W + S",
        )?;
        require(
            self.classify(&u, t)?.level >= Level::Semidirect,
            "T must be a semidirect complement of W + S in V",
        )?;
        let mut report = CertReport::new();
        let st = self.en.sum_sets(s, t);
        report.record(
            "S + T is a weak complement of W in V",
            self.classify(w, &st)?.level >= Level::Weak,
        )?;
        Ok(report)
    }

    /// Subset transitivity: `W + T ⊆ W + U`, `W ∩ T ⊆ W ∩ U`, `W` lacking
    /// zero sums, and `T` summand absorbing force `T ⊆ U`.
    pub fn transitivity_subset(&self, w: &Subset, t: &Subset, u: &Subset) -> Result<CertReport> {
        check_submodule(&self.en, &self.ambient, w, "W")?;
        check_submodule(&self.en, &self.ambient, t, "T")?;
        check_submodule(&self.en, &self.ambient, u, "U")?;
        require(self.en.lacks_zero_sums_in(w), "W must lack zero sums")?;
        require(self.is_sa(t), "T must be summand absorbing")?;
        require(
            self.en.sum_sets(w, t).is_subset_of(&self.en.sum_sets(w, u)),
            "W + T must be contained in W + U",
        )?;
        require(
            w.intersection(t).is_subset_of(&w.intersection(u)),
            "W ∩ T must be contained in W ∩ U",
        )?;
        let mut report = CertReport::new();
        report.record("T ⊆ U", t.is_subset_of(u))?;
        Ok(report)
    }
}

/// Projective decomposition of a finite semiring lacking zero sums: the
/// equivalent characterizations of `dsoc(R) = R`, the rank-1 summands `Re`
/// with their primitive idempotents, and for `R^n` up to `max_rank` the
/// uniqueness of the decomposition multiset.
pub fn projective_decomposition(
    semiring: &Arc<Semiring>,
    max_rank: usize,
    budget: &Budget,
) -> Result<ProjectiveReport> {
    require(
        semiring.is_finite(),
        "projective decomposition requires a finite carrier",
    )?;
    require(
        semiring.lacks_zero_sums(),
        "projective decomposition requires a semiring lacking zero sums",
    )?;
    let en1 = Arc::new(Enumeration::new(Arc::clone(semiring), 1, budget)?);
    let lat1 = Lattice::full(&en1, budget)?;
    let dsoc = lat1.dsoc()?;
    let dsoc_is_whole = dsoc.socle == *lat1.ambient();

    let partition = semiring
        .partition_of_one()?
        .map(|idems| idems.into_iter().map(|i| i.value).collect::<Vec<Elem>>());

    let summands = dsoc.summands.clone();
    let decomposes = is_direct_family_in(&en1, lat1.ambient(), &summands);

    // the three verdicts of the partition theorem must agree
    if dsoc_is_whole != partition.is_some() || dsoc_is_whole != decomposes {
        return Err(Error::Invariant(format!(
            "partition-of-one equivalence failed: dsoc {} / partition {} / finite sum {}",
            dsoc_is_whole,
            partition.is_some(),
            decomposes
        )));
    }

    // every indecomposable summand P of R is Re for e = p(1) primitive
    let one_id = en1
        .id_of(&Vector::new(vec![semiring.one()]))
        .expect("one is in the carrier");
    let mut rank1_summands = Vec::new();
    for p_sub in &summands {
        let complement = lat1
            .direct_complement(p_sub)?
            .ok_or_else(|| Error::Invariant("summand lost its complement".into()))?;
        let proj = lat1.projection(p_sub, &complement)?;
        let e_id = proj.apply(one_id);
        let e = en1.vector(e_id).entries()[0].clone();
        if semiring.mul(&e, &e) != e {
            return Err(Error::Invariant("p(1) is not idempotent".into()));
        }
        let primitive = semiring.is_primitive(&e)?;
        if !primitive {
            return Err(Error::Invariant(
                "the idempotent of an indecomposable summand must be primitive".into(),
            ));
        }
        // Re as a subset must be exactly P
        let mut orbit = Subset::empty(en1.size());
        for r in 0..en1.carrier_size() {
            orbit.insert(en1.scale_id(r, e_id));
        }
        if orbit != *p_sub {
            return Err(Error::Invariant("Re differs from the summand P".into()));
        }
        rank1_summands.push(ReSummand {
            module: en1.submodule(p_sub),
            idempotent: e,
            primitive,
        });
    }

    // scalar-action fingerprints of each Re, for isomorphism matching
    let e_ids: Vec<usize> = rank1_summands
        .iter()
        .map(|re| {
            en1.id_of(&Vector::new(vec![re.idempotent.clone()]))
                .expect("idempotent is in the carrier")
        })
        .collect();
    let k = en1.carrier_size();
    let fingerprint1: Vec<Vec<usize>> = e_ids
        .iter()
        .map(|&e| (0..k).map(|r| en1.scale_id(r, e)).collect())
        .collect();

    let mut free_modules = Vec::new();
    for rank in 1..=max_rank {
        let en = match Enumeration::new(Arc::clone(semiring), rank, budget) {
            Ok(en) => Arc::new(en),
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        let lat = match Lattice::full(&en, budget) {
            Ok(l) => l,
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        };
        let summands_n = lat.indecomposable_summands();
        // match each summand to one Re class: a cyclic generator v with the
        // same scalar-action kernel as e realizes the isomorphism re -> rv
        let mut class_of = Vec::with_capacity(summands_n.len());
        for p in &summands_n {
            let mut matched = None;
            'classes: for (i, fp) in fingerprint1.iter().enumerate() {
                for v in p.iter() {
                    let mut orbit = Subset::empty(en.size());
                    for r in 0..k {
                        orbit.insert(en.scale_id(r, v));
                    }
                    if orbit != *p {
                        continue;
                    }
                    let same_kernel = (0..k).all(|r1| {
                        (r1..k).all(|r2| {
                            (fp[r1] == fp[r2]) == (en.scale_id(r1, v) == en.scale_id(r2, v))
                        })
                    });
                    if same_kernel {
                        matched = Some(i);
                        break 'classes;
                    }
                }
            }
            let i = matched.ok_or_else(|| {
                Error::Invariant(format!(
                    "an indecomposable summand of the rank-{rank} module matches no Re class"
                ))
            })?;
            class_of.push(i);
        }
        // exhaustive decomposition search: every subfamily whose direct sum
        // is the whole module must induce the same multiset
        let mut multisets: Vec<Vec<usize>> = Vec::new();
        let m = summands_n.len();
        if m > 16 {
            return Err(Error::BudgetExceeded { count: m, cap: 16 });
        }
        for mask in 1u32..(1u32 << m) {
            let family: Vec<Subset> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| summands_n[i].clone())
                .collect();
            if is_direct_family_in(&en, lat.ambient(), &family) {
                let mut counts = vec![0usize; rank1_summands.len()];
                for i in (0..m).filter(|i| mask >> i & 1 == 1) {
                    counts[class_of[i]] += 1;
                }
                multisets.push(counts);
            }
        }
        if multisets.is_empty() {
            return Err(Error::Invariant(format!(
                "the rank-{rank} module admits no decomposition into indecomposable summands"
            )));
        }
        let unique = multisets.windows(2).all(|w| w[0] == w[1]);
        if !unique {
            return Err(Error::Invariant(format!(
                "the rank-{rank} module has decompositions with different multisets"
            )));
        }
        free_modules.push(FreeRankReport {
            rank,
            multiplicities: multisets.pop().expect("nonempty"),
            unique,
        });
    }

    Ok(ProjectiveReport {
        dsoc_is_whole,
        partition,
        decomposes_into_indecomposables: decomposes,
        rank1_summands,
        free_modules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FreeModule;
    use crate::semiring::Semiring;

    fn boolean_plane() -> (Arc<Enumeration>, Budget) {
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 2);
        let budget = Budget::default();
        (Arc::new(m.enumeration(&budget).unwrap()), budget)
    }

    fn ids(en: &Enumeration, coords: &[&[u16]]) -> Subset {
        let mut s = Subset::empty(en.size());
        for c in coords {
            let v = Vector::new(c.iter().map(|&b| Elem::Fin(b)).collect());
            s.insert(en.id_of(&v).unwrap());
        }
        s
    }

    #[test]
    fn axes_are_a_direct_pair() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let class = lat.classify(&axis1, &axis2).unwrap();
        assert_eq!(class.level, Level::Direct);
        assert!(class.witness.is_none());
    }

    #[test]
    fn the_trivial_intersection_but_not_weak_witness() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let t = ids(&en, &[&[0, 0], &[0, 1], &[1, 1]]);
        let class = lat.classify(&axis1, &t).unwrap();
        assert_eq!(class.level, Level::TrivialIntersection);
        // (1,0) + (0,1) = (1,1) lands inside T
        let w10 = en.id_of(&Vector::new(vec![Elem::Fin(1), Elem::Fin(0)])).unwrap();
        let t01 = en.id_of(&Vector::new(vec![Elem::Fin(0), Elem::Fin(1)])).unwrap();
        let t11 = en.id_of(&Vector::new(vec![Elem::Fin(1), Elem::Fin(1)])).unwrap();
        assert_eq!(
            class.witness,
            Some(Witness::NotWeak { w: w10, t1: t01, t2: t11 })
        );
    }

    #[test]
    fn missing_span_classifies_as_none() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let zero = ids(&en, &[&[0, 0]]);
        let class = lat.classify(&axis1, &zero).unwrap();
        assert_eq!(class.level, Level::None);
        assert!(matches!(class.witness, Some(Witness::NotSpanning { .. })));
    }

    #[test]
    fn unique_direct_complement_in_the_plane() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        assert_eq!(lat.direct_complement(&axis1).unwrap(), Some(axis2));

        let zero = ids(&en, &[&[0, 0]]);
        assert_eq!(
            lat.direct_complement(&zero).unwrap(),
            Some(en.full_set())
        );

        // the diagonal is not a direct summand
        let diag = ids(&en, &[&[0, 0], &[1, 1]]);
        assert_eq!(lat.direct_complement(&diag).unwrap(), None);
    }

    #[test]
    fn multiplicity_error_over_a_ring() {
        // over Z/2Z the diagonal of the plane has two direct complements
        let m = FreeModule::new(Arc::new(Semiring::zmod2()), 2);
        let budget = Budget::default();
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        let diag = ids(&en, &[&[0, 0], &[1, 1]]);
        match lat.direct_complement(&diag) {
            Err(Error::MultipleComplements { candidates }) => {
                assert_eq!(candidates.len(), 2);
            }
            other => panic!("expected multiplicity error, got {other:?}"),
        }
    }

    #[test]
    fn weak_complement_lists() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        assert_eq!(lat.weak_complements(&axis1).unwrap(), vec![axis2]);
        assert_eq!(
            lat.weak_complements(&en.full_set()).unwrap(),
            vec![en.zero_set()]
        );

        // Z/2Z as a module over itself: the hypothesis fails but the
        // search is well-defined and finds only the zero submodule
        let m = FreeModule::new(Arc::new(Semiring::zmod2()), 1);
        let en2 = Arc::new(m.enumeration(&budget).unwrap());
        let lat2 = Lattice::full(&en2, &budget).unwrap();
        assert_eq!(
            lat2.weak_complements(&en2.full_set()).unwrap(),
            vec![en2.zero_set()]
        );
    }

    #[test]
    fn descent_splits_a_weak_complement() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let diag = ids(&en, &[&[0, 0], &[1, 1]]);
        let full = en.full_set();
        let zero = en.zero_set();

        let (ty, tz) = lat.descend(&axis1, &axis2, &diag, &full).unwrap();
        assert_eq!(ty, zero);
        assert_eq!(tz, axis2);

        // Y + Z = V is a hard precondition: the diagonal plus one axis
        // misses (1,0)
        assert!(matches!(
            lat.descend(&axis1, &axis2, &diag, &axis2),
            Err(Error::Precondition(_))
        ));

        let (ty, tz) = lat.descend(&axis1, &axis2, &full, &zero).unwrap();
        assert_eq!(ty, axis2);
        assert_eq!(tz, zero);

        let (ty, tz) = lat.descend(&axis1, &axis2, &full, &full).unwrap();
        assert_eq!(ty, axis2);
        assert_eq!(tz, axis2);
    }

    #[test]
    fn fourfold_refinement_of_identical_decompositions() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let zero = en.zero_set();
        let report = lat.refine4(&axis1, &axis2, &axis1, &axis2).unwrap();
        assert_eq!(report.parts, vec![axis1, zero.clone(), zero, axis2]);
        assert!(report.certified);
        assert_eq!(report.nonzero_parts().len(), 2);
    }

    #[test]
    fn fourfold_refinement_in_three_dimensions() {
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 3);
        let budget = Budget::default();
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        let e = |i: usize| {
            let mut c = [0u16; 3];
            c[i] = 1;
            c
        };
        let span = |gens: &[[u16; 3]]| {
            en.span_vectors(
                &gens
                    .iter()
                    .map(|c| Vector::new(c.iter().map(|&b| Elem::Fin(b)).collect()))
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        };
        let t = span(&[e(0)]);
        let w = span(&[e(1), e(2)]);
        let y = span(&[e(0), e(1)]);
        let z = span(&[e(2)]);
        let report = lat.refine4(&t, &w, &y, &z).unwrap();
        assert_eq!(
            report.parts,
            vec![span(&[e(0)]), en.zero_set(), span(&[e(1)]), span(&[e(2)])]
        );

        let sum = lat.sum_decomposition(&t, &w, &y, &z).unwrap();
        assert_eq!(sum.sum, span(&[e(0), e(1)]));
        assert_eq!(
            sum.parts,
            [span(&[e(0)]), en.zero_set(), span(&[e(1)])]
        );
        assert_eq!(sum.sum_complement, span(&[e(2)]));
    }

    #[test]
    fn sum_decomposition_degenerate_cases() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let zero = en.zero_set();
        let full = en.full_set();

        // T = Y: the sum is T itself with trivial side parts
        let r = lat.sum_decomposition(&axis1, &axis2, &axis1, &axis2).unwrap();
        assert_eq!(r.sum, axis1);
        assert_eq!(r.parts, [axis1.clone(), zero.clone(), zero.clone()]);

        // T = V, W = 0
        let r = lat.sum_decomposition(&full, &zero, &axis1, &axis2).unwrap();
        assert_eq!(r.sum, full);
        assert_eq!(r.parts, [axis1.clone(), axis2.clone(), zero.clone()]);
    }

    #[test]
    fn family_refinement_cases() {
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 3);
        let budget = Budget::default();
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        let span = |gens: &[[u16; 3]]| {
            en.span_vectors(
                &gens
                    .iter()
                    .map(|c| Vector::new(c.iter().map(|&b| Elem::Fin(b)).collect()))
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        };

        // empty family: the single part is V itself
        let report = lat.family_refinement(&[], &budget).unwrap();
        assert_eq!(report.parts, vec![en.full_set()]);

        // two overlapping planes split the cube into the three axes and a
        // zero part, indexed by J ⊆ {1, 2}
        let u1 = span(&[[1, 0, 0], [0, 1, 0]]);
        let u2 = span(&[[0, 1, 0], [0, 0, 1]]);
        let report = lat.family_refinement(&[u1, u2], &budget).unwrap();
        assert_eq!(
            report.parts,
            vec![
                en.zero_set(),          // J = {}:    U1^c ∩ U2^c
                span(&[[1, 0, 0]]),     // J = {1}:   U1 ∩ U2^c
                span(&[[0, 0, 1]]),     // J = {2}:   U2 ∩ U1^c
                span(&[[0, 1, 0]]),     // J = {1,2}: U1 ∩ U2
            ]
        );

        // a single-member family reduces to one decomposition
        let m2 = FreeModule::new(Arc::new(Semiring::boolean()), 2);
        let en2 = Arc::new(m2.enumeration(&budget).unwrap());
        let lat2 = Lattice::full(&en2, &budget).unwrap();
        let axis1 = ids(&en2, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en2, &[&[0, 0], &[0, 1]]);
        let report = lat2
            .family_refinement(std::slice::from_ref(&axis1), &budget)
            .unwrap();
        assert_eq!(report.parts, vec![axis2, axis1]);
    }

    #[test]
    fn indecomposability_judgments() {
        let budget = Budget::default();

        let m1 = FreeModule::new(Arc::new(Semiring::boolean()), 1);
        let en1 = Arc::new(m1.enumeration(&budget).unwrap());
        assert!(Lattice::full(&en1, &budget).unwrap().is_indecomposable().unwrap());

        let (en2, _) = boolean_plane();
        let lat2 = Lattice::full(&en2, &budget).unwrap();
        assert!(!lat2.is_indecomposable().unwrap());
        let summands = lat2.indecomposable_summands();
        let axis1 = ids(&en2, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en2, &[&[0, 0], &[0, 1]]);
        assert_eq!(summands, vec![axis2, axis1]);

        let mt = FreeModule::new(Arc::new(Semiring::truncated(2).unwrap()), 1);
        let ent = Arc::new(mt.enumeration(&budget).unwrap());
        assert!(Lattice::full(&ent, &budget).unwrap().is_indecomposable().unwrap());

        // the zero module is out of scope for indecomposability
        let zero_lat = lat2.sub_lattice(&en2.zero_set());
        assert!(matches!(
            zero_lat.is_indecomposable(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dsoc_of_small_modules() {
        let budget = Budget::default();
        let (en, _) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let report = lat.dsoc().unwrap();
        assert_eq!(report.socle, en.full_set());
        assert_eq!(report.complement, Some(en.zero_set()));
        assert_eq!(report.summands.len(), 2);
        assert!(report.units_property_checked);

        // the diagonal, as an ambient in its own right, is indecomposable
        let diag = ids(&en, &[&[0, 0], &[1, 1]]);
        let dlat = lat.sub_lattice(&diag);
        let dreport = dlat.dsoc().unwrap();
        assert_eq!(dreport.socle, diag);

        let mt = FreeModule::new(Arc::new(Semiring::truncated(2).unwrap()), 1);
        let ent = Arc::new(mt.enumeration(&budget).unwrap());
        let latt = Lattice::full(&ent, &budget).unwrap();
        let treport = latt.dsoc().unwrap();
        assert_eq!(treport.socle, ent.full_set());
        assert_eq!(treport.complement, Some(ent.zero_set()));
    }

    #[test]
    fn dsoc_requires_lacking_zero_sums() {
        let budget = Budget::default();
        let m = FreeModule::new(Arc::new(Semiring::zmod2()), 1);
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        assert!(matches!(lat.dsoc(), Err(Error::Precondition(_))));
    }

    #[test]
    fn summand_absorbing_judgments() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        // {0} is SA whenever the ambient lacks zero sums
        assert!(lat.is_sa(&en.zero_set()));
        assert!(lat.is_sa(&en.full_set()));
        // pinned by the exhaustive check over all 4x4 sums: no sum of two
        // vectors lands on the first axis unless both lie on it already
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        assert!(lat.is_sa(&axis1));
        // the diagonal absorbs (1,0) + (0,1) = (1,1) without containing
        // the summands
        let diag = ids(&en, &[&[0, 0], &[1, 1]]);
        assert!(!lat.is_sa(&diag));
    }

    #[test]
    fn sa_complement_certificates() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let report = lat.sa_complement_theorem(&axis1, &axis2, None).unwrap();
        assert!(report.certified);

        // degenerate: W = 0, T = V, and the second-part check with U = V
        let report = lat
            .sa_complement_theorem(&en.zero_set(), &en.full_set(), Some(&en.full_set()))
            .unwrap();
        assert!(report.certified);

        let report = lat
            .sa_complement_theorem(&axis1, &axis2, Some(&en.full_set()))
            .unwrap();
        assert!(report.certified);
    }

    #[test]
    fn projections_are_verified_maps() {
        let (en, budget) = boolean_plane();
        let lat = Lattice::full(&en, &budget).unwrap();
        let axis1 = ids(&en, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en, &[&[0, 0], &[0, 1]]);
        let p = lat.projection(&axis1, &axis2).unwrap();
        let v11 = en.id_of(&Vector::new(vec![Elem::Fin(1), Elem::Fin(1)])).unwrap();
        let v10 = en.id_of(&Vector::new(vec![Elem::Fin(1), Elem::Fin(0)])).unwrap();
        assert_eq!(p.apply(v11), v10);
        for v in en.full_set().iter() {
            assert_eq!(p.apply(p.apply(v)), p.apply(v));
            assert_eq!(p.apply(v) == en.zero_id(), axis2.contains(v));
        }

        // a merely trivial-intersection pair has no projection
        let t = ids(&en, &[&[0, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            lat.projection(&axis1, &t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn transitivity_certificates() {
        let budget = Budget::default();
        let m = FreeModule::new(Arc::new(Semiring::boolean()), 3);
        let en = Arc::new(m.enumeration(&budget).unwrap());
        let lat = Lattice::full(&en, &budget).unwrap();
        let span1 = |c: [u16; 3]| {
            en.span_vectors(&[Vector::new(c.iter().map(|&b| Elem::Fin(b)).collect())])
                .unwrap()
        };
        let w = span1([1, 0, 0]);
        let s = span1([0, 1, 0]);
        let t = span1([0, 0, 1]);
        assert!(lat.transitivity_nested(&w, &s, &t).unwrap().certified);
        assert!(lat.transitivity_mixed(&w, &s, &t).unwrap().certified);
        assert!(lat.transitivity_subset(&w, &t, &t).unwrap().certified);

        // degenerate T = {0} in the plane
        let (en2, _) = boolean_plane();
        let lat2 = Lattice::full(&en2, &budget).unwrap();
        let axis1 = ids(&en2, &[&[0, 0], &[1, 0]]);
        let axis2 = ids(&en2, &[&[0, 0], &[0, 1]]);
        assert!(lat2
            .transitivity_nested(&axis1, &axis2, &en2.zero_set())
            .unwrap()
            .certified);
    }

    #[test]
    fn projective_reports() {
        let budget = Budget::default();

        let b = Arc::new(Semiring::boolean());
        let report = projective_decomposition(&b, 2, &budget).unwrap();
        assert!(report.dsoc_is_whole);
        assert_eq!(report.partition, Some(vec![Elem::Fin(1)]));
        assert_eq!(report.rank1_summands.len(), 1);
        assert_eq!(report.rank1_summands[0].idempotent, Elem::Fin(1));
        assert_eq!(report.free_modules[1].multiplicities, vec![2]);

        let bxb = Arc::new(Semiring::bxb());
        let report = projective_decomposition(&bxb, 2, &budget).unwrap();
        assert_eq!(report.rank1_summands.len(), 2);
        let labels: Vec<String> = report
            .partition
            .as_ref()
            .unwrap()
            .iter()
            .map(|e| bxb.label(e))
            .collect();
        assert_eq!(labels, vec!["01", "10"]);
        // R = R(1,0) ⊕ R(0,1): each coordinate contributes one of each class
        assert_eq!(report.free_modules[0].multiplicities, vec![1, 1]);
        assert_eq!(report.free_modules[1].multiplicities, vec![2, 2]);

        let t2 = Arc::new(Semiring::truncated(2).unwrap());
        let report = projective_decomposition(&t2, 1, &budget).unwrap();
        assert!(report.dsoc_is_whole);
        assert_eq!(report.partition, Some(vec![Elem::Fin(1)]));
        assert_eq!(report.rank1_summands.len(), 1);

        // zero sums are rejected up front
        let z2 = Arc::new(Semiring::zmod2());
        assert!(matches!(
            projective_decomposition(&z2, 1, &budget),
            Err(Error::Precondition(_))
        ));
    }
}
