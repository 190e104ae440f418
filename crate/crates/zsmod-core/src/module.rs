//! Free modules `R^n`, vectors, and finitely generated submodules.
//!
//! Submodules are stored as a generator list plus, whenever the carrier is
//! finite (or the span is provably finite), the canonical enumerated element
//! set, sorted entry-wise. Set-level identity of the enumerated form is what
//! makes the uniqueness theorems in [`crate::decomposition`] testable as
//! plain set equality.
//!
//! For exhaustive work over finite carriers the [`Enumeration`] engine
//! indexes all `|R|^n` vectors and precomputes addition and scalar-action
//! tables; submodules become [`Subset`] bitsets and closure is a cheap
//! worklist fixpoint.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::semiring::{Elem, Semiring, TropInt};

/// Explicit caps for exhaustive computations. Exceeding a cap is an error,
/// never a silent truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of ambient elements an enumeration may hold.
    pub max_elements: usize,
    /// Maximum number of distinct submodules a lattice enumeration may
    /// produce.
    pub max_submodules: usize,
    /// Maximum family size for the refinement over all index subsets.
    pub max_family: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_elements: 4096,
            max_submodules: 50_000,
            max_family: 4,
        }
    }
}

/// An element of `R^n`: a fixed-length list of semiring elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    entries: Vec<Elem>,
}

impl Vector {
    pub fn new(entries: Vec<Elem>) -> Vector {
        Vector { entries }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The free module `R^n` for a fixed semiring and rank. All operations are
/// pure; the module is just a context object.
#[derive(Debug, Clone)]
pub struct FreeModule {
    semiring: Arc<Semiring>,
    rank: usize,
}

/// A finitely generated submodule of some `R^n`.
#[derive(Debug, Clone)]
pub struct Submodule {
    semiring: Arc<Semiring>,
    rank: usize,
    generators: Vec<Vector>,
    elements: Option<Vec<Vector>>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}
impl Eq for Submodule {}

impl Submodule {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// The canonical sorted element set, when the span is enumerable.
    pub fn elements(&self) -> Option<&[Vector]> {
        self.elements.as_deref()
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    /// Exact membership. Enumerated submodules use a sorted lookup; over the
    /// max-plus integers membership is decided by residuation (the principal
    /// solution of `A (x) x <= v`), and over the naturals by a bounded
    /// coefficient search, exact because addition in `N0^n` is
    /// coordinate-wise monotone.
    pub fn contains(&self, v: &Vector) -> bool {
        if v.len() != self.rank {
            return false;
        }
        if let Some(elems) = &self.elements {
            return elems.binary_search(v).is_ok();
        }
        match &*self.semiring {
            Semiring::MaxPlusInt => self.contains_maxplus(v),
            Semiring::Natural => self.contains_natural(v),
            _ => unreachable!("finite carriers are always enumerated"),
        }
    }

    /// Submodule equality: canonical element sets when enumerated, mutual
    /// generator containment otherwise.
    pub fn equal(&self, other: &Submodule) -> bool {
        if self.rank != other.rank || self.semiring != other.semiring {
            return false;
        }
        match (&self.elements, &other.elements) {
            (Some(a), Some(b)) => a == b,
            _ => {
                self.generators.iter().all(|g| other.contains(g))
                    && other.generators.iter().all(|g| self.contains(g))
            }
        }
    }

    fn contains_maxplus(&self, v: &Vector) -> bool {
        let trop = |e: &Elem| match e {
            Elem::Trop(t) => *t,
            other => panic!("non-tropical entry {other:?}"),
        };
        // principal solution: x_j = min over finite rows of v_i - g_j[i]
        let mut coeffs = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut best: Option<TropInt> = None;
            for (gi, vi) in g.entries().iter().zip(v.entries()) {
                if let TropInt::Fin(a) = trop(gi) {
                    let bound = match trop(vi) {
                        TropInt::NegInf => TropInt::NegInf,
                        TropInt::Fin(b) => {
                            TropInt::Fin(b.checked_sub(a).expect("residuation overflow"))
                        }
                    };
                    best = Some(match best {
                        None => bound,
                        Some(cur) => std::cmp::min(cur, bound),
                    });
                }
            }
            // a generator with no finite entry is the zero vector and
            // contributes nothing
            coeffs.push(best.unwrap_or(TropInt::NegInf));
        }
        let sr = &*self.semiring;
        let mut acc = Vector::new(vec![sr.zero(); self.rank]);
        for (x, g) in coeffs.iter().zip(&self.generators) {
            let scaled: Vec<Elem> = g
                .entries()
                .iter()
                .map(|e| sr.mul(&Elem::Trop(*x), e))
                .collect();
            acc = Vector::new(
                acc.entries()
                    .iter()
                    .zip(&scaled)
                    .map(|(a, b)| sr.add(a, b))
                    .collect(),
            );
        }
        acc == *v
    }

    fn contains_natural(&self, v: &Vector) -> bool {
        let nat = |e: &Elem| match e {
            Elem::Nat(n) => n.clone(),
            other => panic!("non-natural entry {other:?}"),
        };
        let zero = BigUint::default();
        let gens: Vec<Vec<BigUint>> = self
            .generators
            .iter()
            .map(|g| g.entries().iter().map(nat).collect::<Vec<_>>())
            .filter(|g| g.iter().any(|x| *x != zero))
            .collect();
        let target: Vec<BigUint> = v.entries().iter().map(nat).collect();

        fn search(gens: &[Vec<BigUint>], j: usize, rem: &[BigUint]) -> bool {
            let zero = BigUint::default();
            if j == gens.len() {
                return rem.iter().all(|x| *x == zero);
            }
            let g = &gens[j];
            // coefficient bound over strictly positive coordinates only
            let mut bound: Option<BigUint> = None;
            for (gi, ri) in g.iter().zip(rem) {
                if *gi != zero {
                    let q = ri / gi;
                    bound = Some(match bound {
                        None => q,
                        Some(cur) => cur.min(q),
                    });
                }
            }
            let bound = bound.expect("zero generators were filtered out");
            let mut rem_c: Vec<BigUint> = rem.to_vec();
            let mut c = BigUint::default();
            loop {
                if search(gens, j + 1, &rem_c) {
                    return true;
                }
                if c == bound {
                    return false;
                }
                c += 1u8;
                for (r, gi) in rem_c.iter_mut().zip(g) {
                    *r -= gi;
                }
            }
        }
        search(&gens, 0, &target)
    }
}

impl FreeModule {
    pub fn new(semiring: Arc<Semiring>, rank: usize) -> FreeModule {
        FreeModule { semiring, rank }
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::new(vec![self.semiring.zero(); self.rank])
    }

    /// The standard basis vector with `1` in position `i`.
    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut entries = vec![self.semiring.zero(); self.rank];
        entries[i] = self.semiring.one();
        Vector::new(entries)
    }

    pub fn vector_add(&self, a: &Vector, b: &Vector) -> Vector {
        Vector::new(
            a.entries()
                .iter()
                .zip(b.entries())
                .map(|(x, y)| self.semiring.add(x, y))
                .collect(),
        )
    }

    pub fn vector_scale(&self, r: &Elem, v: &Vector) -> Vector {
        Vector::new(
            v.entries()
                .iter()
                .map(|x| self.semiring.mul(r, x))
                .collect(),
        )
    }

    pub fn is_zero_vector(&self, v: &Vector) -> bool {
        *v == self.zero_vector()
    }

    fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::precondition(format!(
                "vector length {} does not match ambient rank {}",
                v.len(),
                self.rank
            )));
        }
        for e in v.entries() {
            let ok = match (&*self.semiring, e) {
                (Semiring::Natural, Elem::Nat(_)) => true,
                (Semiring::MaxPlusInt, Elem::Trop(_)) => true,
                (sr, Elem::Fin(i)) => {
                    sr.carrier_size().is_some_and(|k| (*i as usize) < k)
                }
                _ => false,
            };
            if !ok {
                return Err(Error::precondition(format!(
                    "entry {e:?} is not an element of the {} carrier",
                    self.semiring.kind_name()
                )));
            }
        }
        Ok(())
    }

    /// The smallest submodule containing the generators. For finite carriers
    /// the element set is the least fixpoint of closure under pairwise
    /// addition and scalar multiplication, computed to exhaustion. Over the
    /// naturals and the max-plus integers any nonzero generator already has
    /// infinitely many scalar multiples, so the span stays generator-backed
    /// (only the zero span is enumerated).
    pub fn span(&self, generators: &[Vector], budget: &Budget) -> Result<Submodule> {
        for g in generators {
            self.check_vector(g)?;
        }
        let elements = if self.semiring.is_finite() {
            Some(self.close_finite(generators, budget.max_elements)?)
        } else if generators.iter().all(|g| self.is_zero_vector(g)) {
            Some(vec![self.zero_vector()])
        } else {
            None
        };
        Ok(Submodule {
            semiring: Arc::clone(&self.semiring),
            rank: self.rank,
            generators: generators.to_vec(),
            elements,
        })
    }

    fn close_finite(&self, generators: &[Vector], cap: usize) -> Result<Vec<Vector>> {
        let carrier = self.semiring.elements().expect("finite carrier");
        let mut set: BTreeSet<Vector> = BTreeSet::new();
        set.insert(self.zero_vector());
        let mut queue: VecDeque<Vector> = VecDeque::new();
        for g in generators {
            if set.insert(g.clone()) {
                queue.push_back(g.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            let mut pending: Vec<Vector> = carrier
                .iter()
                .map(|r| self.vector_scale(r, &v))
                .collect();
            pending.extend(set.iter().map(|u| self.vector_add(u, &v)));
            for w in pending {
                if !set.contains(&w) {
                    if set.len() >= cap {
                        return Err(Error::BudgetExceeded {
                            count: set.len(),
                            cap,
                        });
                    }
                    set.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Sum of submodules: the span of the concatenated generators.
    pub fn sum(&self, a: &Submodule, b: &Submodule, budget: &Budget) -> Result<Submodule> {
        let mut gens = a.generators.clone();
        gens.extend(b.generators.iter().cloned());
        self.span(&gens, budget)
    }

    /// Intersection of enumerated submodules. The element-set intersection
    /// of two submodules is always a submodule.
    pub fn intersect(&self, a: &Submodule, b: &Submodule, budget: &Budget) -> Result<Submodule> {
        let (ea, eb) = match (&a.elements, &b.elements) {
            (Some(ea), Some(eb)) => (ea, eb),
            _ => {
                return Err(Error::Unsupported {
                    op: "intersect",
                    kind: self.semiring.kind_name(),
                })
            }
        };
        let sb: BTreeSet<&Vector> = eb.iter().collect();
        let elements: Vec<Vector> = ea.iter().filter(|v| sb.contains(v)).cloned().collect();
        self.submodule_from_elements(elements, budget)
    }

    /// Wrap an already-closed element set as a submodule with canonical
    /// (greedily reduced) generators.
    fn submodule_from_elements(&self, elements: Vec<Vector>, budget: &Budget) -> Result<Submodule> {
        let mut generators: Vec<Vector> = Vec::new();
        let mut span_so_far = self.span(&[], budget)?;
        for v in &elements {
            if !span_so_far.contains(v) {
                generators.push(v.clone());
                span_so_far = self.span(&generators, budget)?;
            }
        }
        Ok(Submodule {
            semiring: Arc::clone(&self.semiring),
            rank: self.rank,
            generators,
            elements: Some(elements),
        })
    }

    /// The complete submodule lattice of `R^n`, canonical and
    /// deterministically sorted. Finite carriers only, subject to budget.
    pub fn all_submodules(&self, budget: &Budget) -> Result<Vec<Submodule>> {
        let en = self.enumeration(budget)?;
        let subs = en.all_submodules_within(&en.full_set(), budget)?;
        Ok(subs.iter().map(|s| en.submodule(s)).collect())
    }

    /// Build the exhaustive element/operation tables for `R^n`.
    pub fn enumeration(&self, budget: &Budget) -> Result<Enumeration> {
        Enumeration::new(Arc::clone(&self.semiring), self.rank, budget)
    }
}

/// A set of element ids inside one [`Enumeration`], stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    blocks: Vec<u64>,
    len: usize,
}

impl Subset {
    pub fn empty(len: usize) -> Subset {
        Subset {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn universe(len: usize) -> Subset {
        let mut s = Subset::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn singleton(len: usize, i: usize) -> Subset {
        let mut s = Subset::empty(len);
        s.insert(i);
        s
    }

    /// Insert, returning true when the id was new.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let (b, m) = (i / 64, 1u64 << (i % 64));
        let fresh = self.blocks[b] & m == 0;
        self.blocks[b] |= m;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut out = self.clone();
        for (a, b) in out.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut out = self.clone();
        for (a, b) in out.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
        out
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &Subset) -> Subset {
        let mut out = self.clone();
        for (a, b) in out.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| *b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on the ascending id sequence.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

/// Exhaustive tables for a finite `R^n`: every vector is assigned an id in
/// canonical (entry-wise lexicographic) order, with precomputed addition and
/// scalar-action tables. Ids are dense, so submodules become bitsets.
#[derive(Debug)]
pub struct Enumeration {
    semiring: Arc<Semiring>,
    rank: usize,
    carrier_size: usize,
    size: usize,
    elems: Vec<Vector>,
    add: Vec<u16>,
    scale: Vec<u16>,
    zero_id: u16,
}

impl Enumeration {
    pub fn new(semiring: Arc<Semiring>, rank: usize, budget: &Budget) -> Result<Enumeration> {
        let k = semiring.carrier_size().ok_or_else(|| Error::Unsupported {
            op: "enumerate",
            kind: semiring.kind_name(),
        })?;
        let size = k.checked_pow(rank as u32).ok_or(Error::BudgetExceeded {
            count: usize::MAX,
            cap: budget.max_elements,
        })?;
        let cap = budget.max_elements.min(u16::MAX as usize);
        if size > cap {
            return Err(Error::BudgetExceeded { count: size, cap });
        }
        let carrier = semiring.elements().expect("finite carrier");

        // all vectors in mixed-radix order = entry-wise lexicographic order
        let mut elems = Vec::with_capacity(size);
        let mut digits = vec![0usize; rank];
        loop {
            elems.push(Vector::new(
                digits.iter().map(|&d| carrier[d].clone()).collect(),
            ));
            let mut pos = rank;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < k {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
        debug_assert_eq!(elems.len(), size);

        // scalar-level tables, then vector tables digit by digit
        let mut sc_add = vec![0u16; k * k];
        let mut sc_mul = vec![0u16; k * k];
        let idx_of = |e: &Elem| match e {
            Elem::Fin(i) => *i as usize,
            other => panic!("non-finite element {other:?}"),
        };
        for a in 0..k {
            for b in 0..k {
                sc_add[a * k + b] = idx_of(&semiring.add(&carrier[a], &carrier[b])) as u16;
                sc_mul[a * k + b] = idx_of(&semiring.mul(&carrier[a], &carrier[b])) as u16;
            }
        }
        let digits_of = |mut id: usize| -> Vec<usize> {
            let mut d = vec![0usize; rank];
            for pos in (0..rank).rev() {
                d[pos] = id % k;
                id /= k;
            }
            d
        };
        let id_of_digits = |d: &[usize]| -> usize { d.iter().fold(0, |acc, &x| acc * k + x) };

        let mut add = vec![0u16; size * size];
        for a in 0..size {
            let da = digits_of(a);
            for b in 0..size {
                let db = digits_of(b);
                let ds: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| sc_add[x * k + y] as usize)
                    .collect();
                add[a * size + b] = id_of_digits(&ds) as u16;
            }
        }
        let mut scale = vec![0u16; k * size];
        for r in 0..k {
            for a in 0..size {
                let da = digits_of(a);
                let ds: Vec<usize> = da.iter().map(|&x| sc_mul[r * k + x] as usize).collect();
                scale[r * size + a] = id_of_digits(&ds) as u16;
            }
        }
        let zero_digit = idx_of(&semiring.zero());
        let zero_id = id_of_digits(&vec![zero_digit; rank]) as u16;

        Ok(Enumeration {
            semiring,
            rank,
            carrier_size: k,
            size,
            elems,
            add,
            scale,
            zero_id,
        })
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero_id(&self) -> usize {
        self.zero_id as usize
    }

    pub fn add_id(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    /// Scalar action by the carrier element with index `r`.
    pub fn scale_id(&self, r: usize, a: usize) -> usize {
        self.scale[r * self.size + a] as usize
    }

    pub fn vector(&self, id: usize) -> &Vector {
        &self.elems[id]
    }

    pub fn id_of(&self, v: &Vector) -> Option<usize> {
        if v.len() != self.rank {
            return None;
        }
        let mut id = 0usize;
        for e in v.entries() {
            match e {
                Elem::Fin(i) if (*i as usize) < self.carrier_size => {
                    id = id * self.carrier_size + *i as usize;
                }
                _ => return None,
            }
        }
        Some(id)
    }

    pub fn full_set(&self) -> Subset {
        Subset::universe(self.size)
    }

    pub fn zero_set(&self) -> Subset {
        Subset::singleton(self.size, self.zero_id as usize)
    }

    /// Display label of an element: bare for rank 1, tuple otherwise.
    pub fn label(&self, id: usize) -> String {
        let v = &self.elems[id];
        let parts: Vec<String> = v
            .entries()
            .iter()
            .map(|e| self.semiring.label(e))
            .collect();
        if self.rank == 1 {
            parts.into_iter().next().unwrap_or_default()
        } else {
            format!("({})", parts.join(","))
        }
    }

    /// Closure of `base ∪ {extra}` under addition and scalar action,
    /// assuming `base` is already closed.
    pub fn close_with(&self, base: &Subset, extra: usize) -> Subset {
        let mut s = base.clone();
        if !s.insert(extra) {
            return s;
        }
        let mut members: Vec<usize> = base.iter().collect();
        members.push(extra);
        let mut work = vec![extra];
        while let Some(x) = work.pop() {
            for r in 0..self.carrier_size {
                let y = self.scale_id(r, x);
                if s.insert(y) {
                    members.push(y);
                    work.push(y);
                }
            }
            let mut idx = 0;
            while idx < members.len() {
                let y = self.add_id(members[idx], x);
                idx += 1;
                if s.insert(y) {
                    members.push(y);
                    work.push(y);
                }
            }
        }
        s
    }

    /// Span of a list of element ids.
    pub fn close(&self, ids: &[usize]) -> Subset {
        let mut s = self.zero_set();
        for &id in ids {
            s = self.close_with(&s, id);
        }
        s
    }

    pub fn span_vectors(&self, gens: &[Vector]) -> Result<Subset> {
        let ids = gens
            .iter()
            .map(|g| {
                self.id_of(g).ok_or_else(|| {
                    Error::precondition(format!("generator {g:?} not in this ambient"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.close(&ids))
    }

    pub fn is_submodule(&self, s: &Subset) -> bool {
        if !s.contains(self.zero_id as usize) {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        for &a in &members {
            for r in 0..self.carrier_size {
                if !s.contains(self.scale_id(r, a)) {
                    return false;
                }
            }
            for &b in &members {
                if !s.contains(self.add_id(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Elementwise sums `{a + b}`. For submodule operands this *is* the
    /// module sum: the pairwise sums of two submodules are already closed.
    pub fn sum_sets(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        let bs: Vec<usize> = b.iter().collect();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.add_id(x, y));
            }
        }
        out
    }

    /// Every submodule contained in `ambient` (which must itself be a
    /// submodule), canonical and sorted. Breadth-first search over
    /// single-generator extensions reaches every submodule.
    pub fn all_submodules_within(&self, ambient: &Subset, budget: &Budget) -> Result<Vec<Subset>> {
        debug_assert!(self.is_submodule(ambient));
        let zero_sub = self.zero_set();
        let mut seen: HashSet<Subset> = HashSet::new();
        let mut queue: VecDeque<Subset> = VecDeque::new();
        seen.insert(zero_sub.clone());
        queue.push_back(zero_sub);
        let candidates: Vec<usize> = ambient.iter().collect();
        while let Some(s) = queue.pop_front() {
            for &v in &candidates {
                if s.contains(v) {
                    continue;
                }
                let t = self.close_with(&s, v);
                if !seen.contains(&t) {
                    if seen.len() >= budget.max_submodules {
                        return Err(Error::BudgetExceeded {
                            count: seen.len(),
                            cap: budget.max_submodules,
                        });
                    }
                    seen.insert(t.clone());
                    queue.push_back(t);
                }
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Greedy canonical generating set: scan elements in canonical order,
    /// keeping those not already spanned.
    pub fn canonical_generator_ids(&self, s: &Subset) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.zero_set();
        for id in s.iter() {
            if !span.contains(id) {
                gens.push(id);
                span = self.close_with(&span, id);
            }
        }
        gens
    }

    /// Convert an in-engine submodule to the public form.
    pub fn submodule(&self, s: &Subset) -> Submodule {
        let elements: Vec<Vector> = s.iter().map(|id| self.elems[id].clone()).collect();
        let generators: Vec<Vector> = self
            .canonical_generator_ids(s)
            .into_iter()
            .map(|id| self.elems[id].clone())
            .collect();
        Submodule {
            semiring: Arc::clone(&self.semiring),
            rank: self.rank,
            generators,
            elements: Some(elements),
        }
    }

    /// Ids of an enumerated submodule's elements.
    pub fn subset_of(&self, s: &Submodule) -> Result<Subset> {
        let elems = s.elements().ok_or_else(|| Error::Unsupported {
            op: "subset_of",
            kind: self.semiring.kind_name(),
        })?;
        let mut out = Subset::empty(self.size);
        for v in elems {
            let id = self
                .id_of(v)
                .ok_or_else(|| Error::precondition(format!("element {v:?} not in ambient")))?;
            out.insert(id);
        }
        Ok(out)
    }

    /// Module-level lacking-zero-sums: `a + b = 0` forces `a = b = 0`
    /// within the subset.
    pub fn lacks_zero_sums_in(&self, s: &Subset) -> bool {
        let zero = self.zero_id as usize;
        let members: Vec<usize> = s.iter().collect();
        for &a in &members {
            for &b in &members {
                if self.add_id(a, b) == zero && (a != zero || b != zero) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::Semiring;

    fn boolean_module(rank: usize) -> FreeModule {
        FreeModule::new(Arc::new(Semiring::boolean()), rank)
    }

    fn bvec(bits: &[u16]) -> Vector {
        Vector::new(bits.iter().map(|&b| Elem::Fin(b)).collect())
    }

    #[test]
    fn span_of_single_boolean_generator() {
        let m = boolean_module(2);
        let s = m.span(&[bvec(&[1, 0])], &Budget::default()).unwrap();
        assert_eq!(s.elements().unwrap(), &[bvec(&[0, 0]), bvec(&[1, 0])]);
    }

    #[test]
    fn span_of_both_axes_is_everything() {
        let m = boolean_module(2);
        let s = m
            .span(&[bvec(&[1, 0]), bvec(&[0, 1])], &Budget::default())
            .unwrap();
        assert_eq!(s.elements().unwrap().len(), 4);
    }

    #[test]
    fn truncated_span_climbs_to_the_cap() {
        let m = FreeModule::new(Arc::new(Semiring::truncated(2).unwrap()), 1);
        let s = m
            .span(&[Vector::new(vec![Elem::Fin(1)])], &Budget::default())
            .unwrap();
        // 1+1 = 2 and 2+1 = 2 under truncation
        let got: Vec<u16> = s
            .elements()
            .unwrap()
            .iter()
            .map(|v| match v.entries()[0] {
                Elem::Fin(i) => i,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(got, vec![0, 1, 2]);
    }

    #[test]
    fn membership_in_boolean_plane() {
        let m = boolean_module(2);
        let s = m
            .span(&[bvec(&[1, 0]), bvec(&[0, 1])], &Budget::default())
            .unwrap();
        assert!(s.contains(&bvec(&[1, 1])));
    }

    #[test]
    fn maxplus_membership_by_residuation() {
        let m = FreeModule::new(Arc::new(Semiring::maxplus_int()), 2);
        let s = m
            .span(
                &[Vector::new(vec![Elem::trop(0), Elem::trop(0)])],
                &Budget::default(),
            )
            .unwrap();
        assert!(!s.is_enumerated());
        // principal solution is 1; (0,0) (x) 1 = (1,1) != (1,2)
        assert!(!s.contains(&Vector::new(vec![Elem::trop(1), Elem::trop(2)])));
        assert!(s.contains(&Vector::new(vec![Elem::trop(5), Elem::trop(5)])));
        assert!(s.contains(&m.zero_vector()));
    }

    #[test]
    fn natural_membership_by_bounded_search() {
        let m = FreeModule::new(Arc::new(Semiring::natural()), 2);
        let s = m
            .span(
                &[Vector::new(vec![Elem::nat(1), Elem::nat(2)])],
                &Budget::default(),
            )
            .unwrap();
        assert!(s.contains(&Vector::new(vec![Elem::nat(2), Elem::nat(4)])));
        assert!(!s.contains(&Vector::new(vec![Elem::nat(2), Elem::nat(3)])));
    }

    #[test]
    fn natural_membership_ignores_zero_generators() {
        let m = FreeModule::new(Arc::new(Semiring::natural()), 2);
        let s = m
            .span(
                &[
                    Vector::new(vec![Elem::nat(0), Elem::nat(0)]),
                    Vector::new(vec![Elem::nat(0), Elem::nat(3)]),
                ],
                &Budget::default(),
            )
            .unwrap();
        assert!(s.contains(&Vector::new(vec![Elem::nat(0), Elem::nat(9)])));
        assert!(!s.contains(&Vector::new(vec![Elem::nat(1), Elem::nat(3)])));
    }

    #[test]
    fn sum_and_intersection_in_boolean_plane() {
        let m = boolean_module(2);
        let budget = Budget::default();
        let axis1 = m.span(&[bvec(&[1, 0])], &budget).unwrap();
        let axis2 = m.span(&[bvec(&[0, 1])], &budget).unwrap();
        let diag = m.span(&[bvec(&[1, 1])], &budget).unwrap();

        let total = m.sum(&axis1, &axis2, &budget).unwrap();
        assert_eq!(total.elements().unwrap().len(), 4);

        let meet = m.intersect(&axis1, &diag, &budget).unwrap();
        assert_eq!(meet.elements().unwrap(), &[bvec(&[0, 0])]);
    }

    #[test]
    fn span_equality_is_set_equality() {
        let m = boolean_module(2);
        let budget = Budget::default();
        let left = m.span(&[bvec(&[1, 0]), bvec(&[1, 1])], &budget).unwrap();
        let right = m.span(&[bvec(&[1, 0]), bvec(&[0, 1])], &budget).unwrap();
        // the left span lacks (0,1)
        assert!(!left.equal(&right));
        assert_eq!(left.elements().unwrap().len(), 3);

        let same = m.span(&[bvec(&[0, 1]), bvec(&[1, 0])], &budget).unwrap();
        assert!(right.equal(&same));
    }

    /// Independent oracle: enumerate every subset of the ambient and keep
    /// the ones closed under addition and scalar action.
    fn submodules_by_subset_enumeration(en: &Enumeration) -> Vec<Subset> {
        let n = en.size();
        assert!(n <= 20, "oracle only for tiny ambients");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut s = Subset::empty(n);
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    s.insert(i);
                }
            }
            if en.is_submodule(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn boolean_line_has_two_submodules() {
        let m = boolean_module(1);
        assert_eq!(m.all_submodules(&Budget::default()).unwrap().len(), 2);
    }

    #[test]
    fn boolean_plane_has_seven_submodules() {
        let m = boolean_module(2);
        let budget = Budget::default();
        let subs = m.all_submodules(&budget).unwrap();
        // cross-checked against the 2^4 subset enumeration below
        assert_eq!(subs.len(), 7);

        let en = m.enumeration(&budget).unwrap();
        let oracle = submodules_by_subset_enumeration(&en);
        let fast = en.all_submodules_within(&en.full_set(), &budget).unwrap();
        assert_eq!(fast, oracle);
    }

    #[test]
    fn lattice_enumeration_matches_subset_oracle_elsewhere() {
        let budget = Budget::default();
        for (sr, rank) in [
            (Semiring::truncated(2).unwrap(), 1),
            (Semiring::truncated(3).unwrap(), 1),
            (Semiring::zmod2(), 2),
            (Semiring::bxb(), 1),
            (Semiring::truncated(2).unwrap(), 2),
        ] {
            let m = FreeModule::new(Arc::new(sr), rank);
            let en = m.enumeration(&budget).unwrap();
            if en.size() <= 16 {
                let oracle = submodules_by_subset_enumeration(&en);
                let fast = en.all_submodules_within(&en.full_set(), &budget).unwrap();
                assert_eq!(fast, oracle, "lattice mismatch for {:?}", en.semiring());
            }
        }
    }

    #[test]
    fn truncated_one_is_the_boolean_lattice() {
        let m = FreeModule::new(Arc::new(Semiring::truncated(1).unwrap()), 1);
        assert_eq!(m.all_submodules(&Budget::default()).unwrap().len(), 2);
    }

    #[test]
    fn span_is_idempotent_on_enumerated_submodules() {
        let budget = Budget::default();
        for (sr, rank) in [
            (Semiring::boolean(), 2),
            (Semiring::truncated(2).unwrap(), 1),
            (Semiring::bxb(), 1),
        ] {
            let m = FreeModule::new(Arc::new(sr), rank);
            for s in m.all_submodules(&budget).unwrap() {
                let re = m.span(s.elements().unwrap(), &budget).unwrap();
                assert!(re.equal(&s));
            }
        }
    }

    #[test]
    fn submodules_inherit_lacking_zero_sums() {
        let budget = Budget::default();
        for (sr, rank) in [
            (Semiring::boolean(), 2),
            (Semiring::truncated(2).unwrap(), 2),
            (Semiring::bxb(), 1),
        ] {
            let m = FreeModule::new(Arc::new(sr), rank);
            let en = m.enumeration(&budget).unwrap();
            assert!(en.semiring().lacks_zero_sums());
            for s in en.all_submodules_within(&en.full_set(), &budget).unwrap() {
                assert!(en.lacks_zero_sums_in(&s));
            }
        }
    }

    #[test]
    fn budget_violations_are_errors() {
        let m = boolean_module(2);
        let tight = Budget {
            max_elements: 3,
            ..Budget::default()
        };
        assert!(matches!(
            m.enumeration(&tight),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            m.span(&[bvec(&[1, 0]), bvec(&[0, 1])], &tight),
            Err(Error::BudgetExceeded { .. })
        ));

        let starved = Budget {
            max_submodules: 2,
            ..Budget::default()
        };
        assert!(matches!(
            m.all_submodules(&starved),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn intersect_refuses_non_enumerable_operands() {
        let m = FreeModule::new(Arc::new(Semiring::maxplus_int()), 1);
        let budget = Budget::default();
        let s = m
            .span(&[Vector::new(vec![Elem::trop(0)])], &budget)
            .unwrap();
        assert!(matches!(
            m.intersect(&s, &s, &budget),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn sum_and_intersect_outputs_are_closed() {
        let budget = Budget::default();
        for (sr, rank) in [
            (Semiring::boolean(), 2),
            (Semiring::truncated(2).unwrap(), 2),
            (Semiring::zmod2(), 2),
        ] {
            let m = FreeModule::new(Arc::new(sr), rank);
            let en = m.enumeration(&budget).unwrap();
            let subs = m.all_submodules(&budget).unwrap();
            for a in &subs {
                for b in &subs {
                    let total = m.sum(a, b, &budget).unwrap();
                    let meet = m.intersect(a, b, &budget).unwrap();
                    for s in [&total, &meet] {
                        let ids = en.subset_of(s).unwrap();
                        assert!(en.is_submodule(&ids));
                    }
                }
            }
        }
    }

    #[test]
    fn maxplus_equality_by_mutual_containment() {
        let m = FreeModule::new(Arc::new(Semiring::maxplus_int()), 2);
        let budget = Budget::default();
        let line = m
            .span(&[Vector::new(vec![Elem::trop(0), Elem::trop(0)])], &budget)
            .unwrap();
        // (5,5) is the scalar multiple 5 (x) (0,0), so the spans coincide
        let same = m
            .span(
                &[
                    Vector::new(vec![Elem::trop(0), Elem::trop(0)]),
                    Vector::new(vec![Elem::trop(5), Elem::trop(5)]),
                ],
                &budget,
            )
            .unwrap();
        assert!(line.equal(&same));

        let other = m
            .span(&[Vector::new(vec![Elem::trop(0), Elem::trop(1)])], &budget)
            .unwrap();
        assert!(!line.equal(&other));

        let joined = m.sum(&line, &other, &budget).unwrap();
        assert!(!joined.is_enumerated());
        assert!(joined.contains(&Vector::new(vec![Elem::trop(3), Elem::trop(4)])));
    }

    #[test]
    fn zero_span_is_enumerated_even_over_infinite_carriers() {
        let m = FreeModule::new(Arc::new(Semiring::natural()), 2);
        let s = m.span(&[m.zero_vector()], &Budget::default()).unwrap();
        assert_eq!(s.elements().unwrap(), &[m.zero_vector()]);
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn nat_vec(rank: usize, max: u64) -> impl Strategy<Value = Vector> {
            proptest::collection::vec(0..=max, rank)
                .prop_map(|v| Vector::new(v.into_iter().map(Elem::nat).collect()))
        }

        proptest! {
            #[test]
            fn natural_contains_matches_grid_search(
                g1 in nat_vec(2, 4),
                g2 in nat_vec(2, 4),
                target in nat_vec(2, 12),
            ) {
                let m = FreeModule::new(Arc::new(Semiring::natural()), 2);
                let s = m.span(&[g1.clone(), g2.clone()], &Budget::default()).unwrap();
                // independent oracle: brute-force coefficient grid
                let mut found = false;
                'outer: for c1 in 0u64..=12 {
                    for c2 in 0u64..=12 {
                        let lhs = m.vector_add(
                            &m.vector_scale(&Elem::nat(c1), &g1),
                            &m.vector_scale(&Elem::nat(c2), &g2),
                        );
                        if lhs == target {
                            found = true;
                            break 'outer;
                        }
                    }
                }
                prop_assert_eq!(s.contains(&target), found);
            }

            #[test]
            fn maxplus_contains_matches_grid_search(
                e1 in -3i64..=3, e2 in -3i64..=3,
                f1 in -3i64..=3, f2 in -3i64..=3,
                t1 in -6i64..=6, t2 in -6i64..=6,
            ) {
                let m = FreeModule::new(Arc::new(Semiring::maxplus_int()), 2);
                let g1 = Vector::new(vec![Elem::trop(e1), Elem::trop(e2)]);
                let g2 = Vector::new(vec![Elem::trop(f1), Elem::trop(f2)]);
                let target = Vector::new(vec![Elem::trop(t1), Elem::trop(t2)]);
                let s = m.span(&[g1.clone(), g2.clone()], &Budget::default()).unwrap();
                // any witness coefficient is clipped by the principal
                // solution, which lies within +-12 here, so the finite grid
                // plus the -inf coefficient is a complete oracle
                let mut coeffs: Vec<Elem> = vec![Elem::Trop(TropInt::NegInf)];
                coeffs.extend((-12i64..=12).map(Elem::trop));
                let mut found = false;
                'outer: for c1 in &coeffs {
                    for c2 in &coeffs {
                        let lhs = m.vector_add(
                            &m.vector_scale(c1, &g1),
                            &m.vector_scale(c2, &g2),
                        );
                        if lhs == target {
                            found = true;
                            break 'outer;
                        }
                    }
                }
                prop_assert_eq!(s.contains(&target), found);
            }
        }
    }
}
