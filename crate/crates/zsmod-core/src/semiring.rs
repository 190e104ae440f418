//! Semiring families and their element calculus.
//!
//! A semiring is a set with two operations: `(R, +, 0)` a commutative monoid,
//! `(R, ·, 1)` a monoid, multiplication distributing over addition on both
//! sides, and `0` annihilating. We care about semirings *lacking zero sums*:
//! `a + b = 0` forces `a = b = 0`. This never happens in a nontrivial ring but
//! is ubiquitous in tropical arithmetic.
//!
//! Five families are supported: the boolean semifield `{0,1}` with `1+1 = 1`,
//! the truncated semirings `{0,…,q}` with sums and products capped at `q`,
//! the naturals with exact unbounded arithmetic, the max-plus integers
//! `Z ∪ {-inf}`, and arbitrary finite tables. Only finite tables are
//! exhaustively verified against the axioms; the closed-form families are
//! correct by construction.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A max-plus integer: either the additive identity `-inf` or a finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropInt {
    /// The sentinel `-inf`, absorbing for the tropical product and neutral
    /// for tropical addition (max).
    NegInf,
    Fin(i64),
}

impl TropInt {
    fn join(self, other: TropInt) -> TropInt {
        std::cmp::max(self, other)
    }

    fn plus(self, other: TropInt) -> TropInt {
        match (self, other) {
            (TropInt::NegInf, _) | (_, TropInt::NegInf) => TropInt::NegInf,
            (TropInt::Fin(a), TropInt::Fin(b)) => {
                TropInt::Fin(a.checked_add(b).expect("max-plus product overflow"))
            }
        }
    }
}

/// An element of some semiring. The variant must match the semiring kind:
/// `Fin` indexes a finite carrier (boolean, truncated, table), `Nat` is an
/// exact natural number, `Trop` a max-plus integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Fin(u16),
    Nat(BigUint),
    Trop(TropInt),
}

impl Elem {
    pub fn nat(n: u64) -> Elem {
        Elem::Nat(BigUint::from(n))
    }

    pub fn trop(v: i64) -> Elem {
        Elem::Trop(TropInt::Fin(v))
    }

    fn fin(&self) -> u16 {
        match self {
            Elem::Fin(i) => *i,
            other => panic!("expected finite-carrier element, got {other:?}"),
        }
    }
}

/// The eight semiring axioms checked on finite tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddCommutativity,
    AddAssociativity,
    AddIdentity,
    MulAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
    ZeroAnnihilation,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::AddCommutativity => "add-commutativity",
            Axiom::AddAssociativity => "add-associativity",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociativity => "mul-associativity",
            Axiom::MulIdentity => "mul-identity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::ZeroAnnihilation => "zero-annihilation",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One axiom violation together with the witnessing elements (as labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

/// Result of exhaustive axiom verification. Empty iff the table is a
/// semiring. Every violation carries the first witness in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An idempotent element (`e·e = e`) with its primitivity verdict. An
/// idempotent is primitive when it is not the sum of two nonzero orthogonal
/// idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    pub value: Elem,
    pub primitive: bool,
}

/// A finite semiring given by explicit operation tables over labelled
/// elements. Canonical element order is the declaration order of `labels`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub labels: Vec<String>,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: u16,
    one: u16,
}

impl Table {
    /// Build a table semiring from label matrices, validating shape only.
    /// Axiom violations are not errors here; they are reported by
    /// [`Semiring::verify_axioms`].
    pub fn new(
        labels: Vec<String>,
        add_rows: &[Vec<String>],
        mul_rows: &[Vec<String>],
        zero_label: &str,
        one_label: &str,
    ) -> Result<Table> {
        let k = labels.len();
        if k == 0 {
            return Err(Error::structural("empty carrier"));
        }
        if k > u16::MAX as usize {
            return Err(Error::structural("carrier too large"));
        }
        for (i, a) in labels.iter().enumerate() {
            for b in labels.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::structural(format!("duplicate carrier label `{a}`")));
                }
            }
        }
        let resolve = |l: &str| -> Result<u16> {
            labels
                .iter()
                .position(|x| x == l)
                .map(|i| i as u16)
                .ok_or_else(|| Error::structural(format!("label `{l}` not in carrier")))
        };
        let read_matrix = |rows: &[Vec<String>], name: &str| -> Result<Vec<u16>> {
            if rows.len() != k {
                return Err(Error::structural(format!(
                    "{name} table has {} rows, carrier has {k} elements",
                    rows.len()
                )));
            }
            let mut out = Vec::with_capacity(k * k);
            for row in rows {
                if row.len() != k {
                    return Err(Error::structural(format!(
                        "{name} table row has {} entries, expected {k}",
                        row.len()
                    )));
                }
                for cell in row {
                    out.push(resolve(cell)?);
                }
            }
            Ok(out)
        };
        let add = read_matrix(add_rows, "add")?;
        let mul = read_matrix(mul_rows, "mul")?;
        let zero = resolve(zero_label)?;
        let one = resolve(one_label)?;
        Ok(Table {
            labels,
            add,
            mul,
            zero,
            one,
        })
    }

    fn size(&self) -> usize {
        self.labels.len()
    }

    fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.size() + b as usize]
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size() + b as usize]
    }

    pub(crate) fn add_matrix(&self) -> Vec<Vec<String>> {
        self.matrix(&self.add)
    }

    pub(crate) fn mul_matrix(&self) -> Vec<Vec<String>> {
        self.matrix(&self.mul)
    }

    pub(crate) fn zero_label(&self) -> &str {
        &self.labels[self.zero as usize]
    }

    pub(crate) fn one_label(&self) -> &str {
        &self.labels[self.one as usize]
    }

    fn matrix(&self, table: &[u16]) -> Vec<Vec<String>> {
        let k = self.size();
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.labels[table[i * k + j] as usize].clone())
                    .collect()
            })
            .collect()
    }
}

/// A semiring: one of the four closed-form families or an explicit finite
/// table. All operations are pure; values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Semiring {
    /// `{0, 1}` with `1 + 1 = 1`.
    Boolean,
    /// `{0, 1, …, q}` with sums and products capped at `q`.
    Truncated { q: u16 },
    /// `N0` with exact unbounded arithmetic.
    Natural,
    /// `Z ∪ {-inf}` with `max` as addition and integer sum as product.
    MaxPlusInt,
    Table(Table),
}

impl Semiring {
    pub fn boolean() -> Semiring {
        Semiring::Boolean
    }

    pub fn truncated(q: u16) -> Result<Semiring> {
        if q == 0 {
            return Err(Error::structural("truncated semiring requires q >= 1"));
        }
        Ok(Semiring::Truncated { q })
    }

    pub fn natural() -> Semiring {
        Semiring::Natural
    }

    pub fn maxplus_int() -> Semiring {
        Semiring::MaxPlusInt
    }

    /// The additive and multiplicative table of `Z/2Z`, the canonical ring
    /// (hence zero-sum-bearing) test instance.
    pub fn zmod2() -> Semiring {
        let l = |s: &str| s.to_string();
        let table = Table::new(
            vec![l("0"), l("1")],
            &[vec![l("0"), l("1")], vec![l("1"), l("0")]],
            &[vec![l("0"), l("0")], vec![l("0"), l("1")]],
            "0",
            "1",
        )
        .expect("static table");
        Semiring::Table(table)
    }

    /// The product semiring `B x B` with componentwise operations, carrier
    /// labels `00`, `01`, `10`, `11`.
    pub fn bxb() -> Semiring {
        let labels: Vec<String> = ["00", "01", "10", "11"].iter().map(|s| s.to_string()).collect();
        let comp = |a: usize, b: usize, f: fn(u8, u8) -> u8| -> String {
            let (a1, a0) = ((a >> 1) as u8, (a & 1) as u8);
            let (b1, b0) = ((b >> 1) as u8, (b & 1) as u8);
            format!("{}{}", f(a1, b1), f(a0, b0))
        };
        let or = |x: u8, y: u8| x | y;
        let and = |x: u8, y: u8| x & y;
        let add: Vec<Vec<String>> = (0..4)
            .map(|a| (0..4).map(|b| comp(a, b, or)).collect())
            .collect();
        let mul: Vec<Vec<String>> = (0..4)
            .map(|a| (0..4).map(|b| comp(a, b, and)).collect())
            .collect();
        let table = Table::new(labels, &add, &mul, "00", "11").expect("static table");
        Semiring::Table(table)
    }

    pub fn kind_name(&self) -> String {
        match self {
            Semiring::Boolean => "boolean".into(),
            Semiring::Truncated { q } => format!("truncated({q})"),
            Semiring::Natural => "natural".into(),
            Semiring::MaxPlusInt => "maxplus-int".into(),
            Semiring::Table(_) => "table".into(),
        }
    }

    /// Carrier size for finite kinds, `None` for natural and max-plus.
    pub fn carrier_size(&self) -> Option<usize> {
        match self {
            Semiring::Boolean => Some(2),
            Semiring::Truncated { q } => Some(*q as usize + 1),
            Semiring::Natural | Semiring::MaxPlusInt => None,
            Semiring::Table(t) => Some(t.size()),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.carrier_size().is_some()
    }

    /// All carrier elements in canonical (declaration) order. Finite kinds
    /// only.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let n = self.carrier_size().ok_or_else(|| Error::Unsupported {
            op: "elements",
            kind: self.kind_name(),
        })?;
        Ok((0..n as u16).map(Elem::Fin).collect())
    }

    pub fn zero(&self) -> Elem {
        match self {
            Semiring::Boolean | Semiring::Truncated { .. } => Elem::Fin(0),
            Semiring::Natural => Elem::Nat(BigUint::default()),
            Semiring::MaxPlusInt => Elem::Trop(TropInt::NegInf),
            Semiring::Table(t) => Elem::Fin(t.zero),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Semiring::Boolean | Semiring::Truncated { .. } => Elem::Fin(1),
            Semiring::Natural => Elem::Nat(BigUint::from(1u8)),
            Semiring::MaxPlusInt => Elem::Trop(TropInt::Fin(0)),
            Semiring::Table(t) => Elem::Fin(t.one),
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        *e == self.zero()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Semiring::Boolean => Elem::Fin(a.fin() | b.fin()),
            Semiring::Truncated { q } => Elem::Fin((a.fin() + b.fin()).min(*q)),
            Semiring::Natural => match (a, b) {
                (Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(x + y),
                _ => panic!("natural add on non-natural elements"),
            },
            Semiring::MaxPlusInt => match (a, b) {
                (Elem::Trop(x), Elem::Trop(y)) => Elem::Trop(x.join(*y)),
                _ => panic!("max-plus add on non-tropical elements"),
            },
            Semiring::Table(t) => Elem::Fin(t.add(a.fin(), b.fin())),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Semiring::Boolean => Elem::Fin(a.fin() & b.fin()),
            Semiring::Truncated { q } => {
                Elem::Fin((a.fin() as u32 * b.fin() as u32).min(*q as u32) as u16)
            }
            Semiring::Natural => match (a, b) {
                (Elem::Nat(x), Elem::Nat(y)) => Elem::Nat(x * y),
                _ => panic!("natural mul on non-natural elements"),
            },
            Semiring::MaxPlusInt => match (a, b) {
                (Elem::Trop(x), Elem::Trop(y)) => Elem::Trop(x.plus(*y)),
                _ => panic!("max-plus mul on non-tropical elements"),
            },
            Semiring::Table(t) => Elem::Fin(t.mul(a.fin(), b.fin())),
        }
    }

    /// Human-readable label of an element under this semiring.
    pub fn label(&self, e: &Elem) -> String {
        match (self, e) {
            (Semiring::Table(t), Elem::Fin(i)) => t.labels[*i as usize].clone(),
            (_, Elem::Fin(i)) => i.to_string(),
            (_, Elem::Nat(n)) => n.to_string(),
            (_, Elem::Trop(TropInt::NegInf)) => "-inf".into(),
            (_, Elem::Trop(TropInt::Fin(v))) => v.to_string(),
        }
    }

    /// Exhaustively verify the semiring axioms. Closed-form kinds return an
    /// empty report unconditionally: they are trusted by construction, which
    /// is the documented trust boundary of the library.
    pub fn verify_axioms(&self) -> AxiomReport {
        let t = match self {
            Semiring::Table(t) => t,
            _ => return AxiomReport::default(),
        };
        let k = t.size() as u16;
        let lab = |i: u16| t.labels[i as usize].clone();
        let mut violations = Vec::new();
        let mut record = |axiom: Axiom, witness: Vec<u16>| {
            if !violations.iter().any(|v: &AxiomViolation| v.axiom == axiom) {
                violations.push(AxiomViolation {
                    axiom,
                    witness: witness.into_iter().map(lab).collect(),
                });
            }
        };
        for a in 0..k {
            if t.add(t.zero, a) != a || t.add(a, t.zero) != a {
                record(Axiom::AddIdentity, vec![a]);
            }
            if t.mul(t.one, a) != a || t.mul(a, t.one) != a {
                record(Axiom::MulIdentity, vec![a]);
            }
            if t.mul(t.zero, a) != t.zero || t.mul(a, t.zero) != t.zero {
                record(Axiom::ZeroAnnihilation, vec![a]);
            }
            for b in 0..k {
                if t.add(a, b) != t.add(b, a) {
                    record(Axiom::AddCommutativity, vec![a, b]);
                }
                for c in 0..k {
                    if t.add(t.add(a, b), c) != t.add(a, t.add(b, c)) {
                        record(Axiom::AddAssociativity, vec![a, b, c]);
                    }
                    if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                        record(Axiom::MulAssociativity, vec![a, b, c]);
                    }
                    if t.mul(a, t.add(b, c)) != t.add(t.mul(a, b), t.mul(a, c)) {
                        record(Axiom::LeftDistributivity, vec![a, b, c]);
                    }
                    if t.mul(t.add(a, b), c) != t.add(t.mul(a, c), t.mul(b, c)) {
                        record(Axiom::RightDistributivity, vec![a, b, c]);
                    }
                }
            }
        }
        violations.sort_by_key(|v| v.axiom);
        AxiomReport { violations }
    }

    /// Does `a + b = 0` force `a = b = 0`? Closed-form kinds answer by rule
    /// (all four lack zero sums); tables are checked exhaustively.
    pub fn lacks_zero_sums(&self) -> bool {
        let t = match self {
            Semiring::Table(t) => t,
            // In each closed-form family the nonzero elements are closed
            // under addition, so no two of them can sum to zero.
            _ => return true,
        };
        let k = t.size() as u16;
        for a in 0..k {
            for b in 0..k {
                if t.add(a, b) == t.zero && (a != t.zero || b != t.zero) {
                    return false;
                }
            }
        }
        true
    }

    /// The group of multiplicative units, enumerated exhaustively. Finite
    /// kinds only.
    pub fn units(&self) -> Result<Vec<Elem>> {
        let elems = self.elements()?;
        let one = self.one();
        Ok(elems
            .iter()
            .filter(|a| {
                elems
                    .iter()
                    .any(|b| self.mul(a, b) == one && self.mul(b, a) == one)
            })
            .cloned()
            .collect())
    }

    /// True iff every element is a finite sum of units (zero counting as the
    /// empty sum). Finite kinds compute the additive closure of the unit
    /// set; natural and max-plus are true by rule (`1` generates `N0`, and
    /// every max-plus integer is itself a unit).
    pub fn additively_generated_by_units(&self) -> bool {
        if !self.is_finite() {
            return true;
        }
        let elems = self.elements().expect("finite carrier");
        let units = self.units().expect("finite carrier");
        let mut reach: Vec<Elem> = vec![self.zero()];
        for u in &units {
            if !reach.contains(u) {
                reach.push(u.clone());
            }
        }
        loop {
            let mut grew = false;
            let snapshot = reach.clone();
            for a in &snapshot {
                for u in &units {
                    let s = self.add(a, u);
                    if !reach.contains(&s) {
                        reach.push(s);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        reach.len() == elems.len()
    }

    /// All idempotents (`e·e = e`), each with its primitivity verdict, in
    /// canonical carrier order. Refuses infinite carriers.
    pub fn idempotents(&self) -> Result<Vec<Idempotent>> {
        let elems = self.elements().map_err(|_| Error::Unsupported {
            op: "idempotents",
            kind: self.kind_name(),
        })?;
        let idems: Vec<Elem> = elems
            .into_iter()
            .filter(|e| self.mul(e, e) == *e)
            .collect();
        Ok(idems
            .iter()
            .map(|e| Idempotent {
                value: e.clone(),
                primitive: self.primitive_among(e, &idems),
            })
            .collect())
    }

    /// `e·f = f·e = 0`.
    pub fn are_orthogonal(&self, e: &Elem, f: &Elem) -> bool {
        let zero = self.zero();
        self.mul(e, f) == zero && self.mul(f, e) == zero
    }

    /// Primitivity of an idempotent: no pair of nonzero orthogonal
    /// idempotents sums to it. Exhaustive over the finite carrier.
    pub fn is_primitive(&self, e: &Elem) -> Result<bool> {
        let idems: Vec<Elem> = self
            .idempotents()?
            .into_iter()
            .map(|i| i.value)
            .collect();
        Ok(self.primitive_among(e, &idems))
    }

    fn primitive_among(&self, e: &Elem, idems: &[Elem]) -> bool {
        let zero = self.zero();
        !idems.iter().any(|e1| {
            *e1 != zero
                && idems.iter().any(|e2| {
                    *e2 != zero && self.are_orthogonal(e1, e2) && self.add(e1, e2) == *e
                })
        })
    }

    /// A finite set of pairwise orthogonal primitive idempotents summing to
    /// one, if any exists. The search is over subsets of the nonzero
    /// idempotents in canonical order, so the result is deterministic.
    pub fn partition_of_one(&self) -> Result<Option<Vec<Idempotent>>> {
        let idems = self.idempotents()?;
        let zero = self.zero();
        let one = self.one();
        let candidates: Vec<&Idempotent> = idems
            .iter()
            .filter(|i| i.value != zero && i.primitive)
            .collect();
        let n = candidates.len();
        if n > 20 {
            return Err(Error::BudgetExceeded {
                count: n,
                cap: 20,
            });
        }
        for mask in 1u32..(1 << n) {
            let chosen: Vec<&Idempotent> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let orthogonal = chosen.iter().enumerate().all(|(i, a)| {
                chosen
                    .iter()
                    .skip(i + 1)
                    .all(|b| self.are_orthogonal(&a.value, &b.value))
            });
            if !orthogonal {
                continue;
            }
            let mut sum = zero.clone();
            for c in &chosen {
                sum = self.add(&sum, &c.value);
            }
            if sum == one {
                return Ok(Some(chosen.into_iter().cloned().collect()));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn broken_add_table() -> Semiring {
        // add is non-commutative at (a, b): a+b = a but b+a = b
        let l = |s: &str| s.to_string();
        let table = Table::new(
            vec![l("0"), l("a"), l("b")],
            &[
                vec![l("0"), l("a"), l("b")],
                vec![l("a"), l("a"), l("a")],
                vec![l("b"), l("b"), l("b")],
            ],
            &[
                vec![l("0"), l("0"), l("0")],
                vec![l("0"), l("a"), l("b")],
                vec![l("0"), l("a"), l("b")],
            ],
            "0",
            "a",
        )
        .unwrap();
        Semiring::Table(table)
    }

    #[test]
    fn boolean_axioms_hold() {
        assert!(Semiring::boolean().verify_axioms().is_valid());
    }

    #[test]
    fn zmod2_axioms_hold_exhaustively() {
        // a ring is in particular a semiring; all 2^3 triples pass
        assert!(Semiring::zmod2().verify_axioms().is_valid());
    }

    #[test]
    fn injected_defect_is_reported_with_witness() {
        let report = broken_add_table().verify_axioms();
        let v = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::AddCommutativity)
            .expect("commutativity violation reported");
        assert_eq!(v.witness, vec!["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn structural_errors_are_not_axiom_violations() {
        let l = |s: &str| s.to_string();
        let err = Table::new(
            vec![l("0"), l("1")],
            &[vec![l("0"), l("1")]],
            &[vec![l("0"), l("0")], vec![l("0"), l("1")]],
            "0",
            "1",
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));

        let err = Table::new(
            vec![l("0"), l("1")],
            &[vec![l("0"), l("1")], vec![l("1"), l("x")]],
            &[vec![l("0"), l("0")], vec![l("0"), l("1")]],
            "0",
            "1",
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn lacking_zero_sums_by_kind() {
        assert!(Semiring::boolean().lacks_zero_sums());
        assert!(Semiring::truncated(3).unwrap().lacks_zero_sums());
        assert!(Semiring::natural().lacks_zero_sums());
        assert!(Semiring::maxplus_int().lacks_zero_sums());
        // 1 + 1 = 0 in Z/2Z
        assert!(!Semiring::zmod2().lacks_zero_sums());
        assert!(Semiring::bxb().lacks_zero_sums());
    }

    #[test]
    fn units_and_additive_generation() {
        let b = Semiring::boolean();
        assert_eq!(b.units().unwrap(), vec![Elem::Fin(1)]);
        assert!(b.additively_generated_by_units());

        // closure of {1} under truncated addition reaches 2 = 1+1
        let t2 = Semiring::truncated(2).unwrap();
        assert_eq!(t2.units().unwrap(), vec![Elem::Fin(1)]);
        assert!(t2.additively_generated_by_units());

        let z2 = Semiring::zmod2();
        assert_eq!(z2.units().unwrap(), vec![Elem::Fin(1)]);
        assert!(z2.additively_generated_by_units());

        // the only unit of B x B is (1,1); its additive closure misses (1,0)
        assert!(!Semiring::bxb().additively_generated_by_units());

        assert!(Semiring::natural().additively_generated_by_units());
        assert!(Semiring::maxplus_int().additively_generated_by_units());
    }

    #[test]
    fn idempotents_of_small_semirings() {
        let b = Semiring::boolean();
        let idems = b.idempotents().unwrap();
        assert_eq!(
            idems.iter().map(|i| i.value.clone()).collect::<Vec<_>>(),
            vec![Elem::Fin(0), Elem::Fin(1)]
        );
        assert!(idems[1].primitive);

        // 2·2 = min(4,3) = 3, so 2 is not idempotent in truncated(3)
        let t3 = Semiring::truncated(3).unwrap();
        let values: Vec<Elem> = t3
            .idempotents()
            .unwrap()
            .into_iter()
            .map(|i| i.value)
            .collect();
        assert_eq!(values, vec![Elem::Fin(0), Elem::Fin(1), Elem::Fin(3)]);
        assert!(t3.is_primitive(&Elem::Fin(1)).unwrap());

        let z2 = Semiring::zmod2();
        let values: Vec<Elem> = z2
            .idempotents()
            .unwrap()
            .into_iter()
            .map(|i| i.value)
            .collect();
        assert_eq!(values, vec![Elem::Fin(0), Elem::Fin(1)]);
    }

    #[test]
    fn idempotent_list_is_exactly_the_squaring_fixed_points() {
        for sr in [
            Semiring::boolean(),
            Semiring::truncated(3).unwrap(),
            Semiring::zmod2(),
            Semiring::bxb(),
        ] {
            let listed: Vec<Elem> = sr
                .idempotents()
                .unwrap()
                .into_iter()
                .map(|i| i.value)
                .collect();
            let fixed: Vec<Elem> = sr
                .elements()
                .unwrap()
                .into_iter()
                .filter(|e| sr.mul(e, e) == *e)
                .collect();
            assert_eq!(listed, fixed);
        }
    }

    #[test]
    fn infinite_carriers_are_refused() {
        for sr in [Semiring::natural(), Semiring::maxplus_int()] {
            assert!(matches!(
                sr.idempotents(),
                Err(Error::Unsupported { op: "idempotents", .. })
            ));
            assert!(sr.units().is_err());
        }
    }

    #[test]
    fn partition_of_one_examples() {
        let b = Semiring::boolean();
        let p = b.partition_of_one().unwrap().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].value, b.one());

        let t2 = Semiring::truncated(2).unwrap();
        let p = t2.partition_of_one().unwrap().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].value, t2.one());

        // the two primitive idempotents (1,0) and (0,1) of B x B sum to one
        let bxb = Semiring::bxb();
        let p = bxb.partition_of_one().unwrap().unwrap();
        let labels: Vec<String> = p.iter().map(|i| bxb.label(&i.value)).collect();
        assert_eq!(labels, vec!["01".to_string(), "10".to_string()]);
        // re-verify orthogonality and the sum directly
        let mut sum = bxb.zero();
        for i in &p {
            sum = bxb.add(&sum, &i.value);
        }
        assert_eq!(sum, bxb.one());
        assert!(bxb.are_orthogonal(&p[0].value, &p[1].value));
        // (1,1) is not primitive: it splits as (1,0) + (0,1)
        let idems = bxb.idempotents().unwrap();
        let top = idems.iter().find(|i| i.value == bxb.one()).unwrap();
        assert!(!top.primitive);
    }

    #[test]
    fn closed_form_arithmetic() {
        let t2 = Semiring::truncated(2).unwrap();
        assert_eq!(t2.add(&Elem::Fin(1), &Elem::Fin(2)), Elem::Fin(2));
        assert_eq!(t2.mul(&Elem::Fin(2), &Elem::Fin(2)), Elem::Fin(2));

        let n = Semiring::natural();
        assert_eq!(n.add(&Elem::nat(2), &Elem::nat(3)), Elem::nat(5));
        assert_eq!(n.mul(&Elem::nat(2), &Elem::nat(3)), Elem::nat(6));

        let m = Semiring::maxplus_int();
        assert_eq!(m.add(&Elem::trop(2), &Elem::trop(-1)), Elem::trop(2));
        assert_eq!(m.mul(&Elem::trop(2), &Elem::trop(-1)), Elem::trop(1));
        assert_eq!(m.add(&m.zero(), &Elem::trop(-7)), Elem::trop(-7));
        assert_eq!(m.mul(&m.zero(), &Elem::trop(-7)), m.zero());
        assert_eq!(m.label(&m.zero()), "-inf");
    }
}
