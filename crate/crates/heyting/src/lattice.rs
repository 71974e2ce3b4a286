//! Finite bounded lattices given by tables, and the implicative structure on
//! top of them: relative pseudocomplements, dual implications, intervals,
//! order duals, irreducibility, and quotients by filters.

use crate::bits::Relation;
use crate::error::{Error, Result};
use crate::filters::Filter;

/// A finite bounded lattice over element indices `0..size`.
///
/// `le`, `meet` and `join` are kept mutually consistent by construction:
/// `meet(a,b)` is the greatest lower bound and `join(a,b)` the least upper
/// bound under `le`. Values are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    le: Relation,
    meet: Vec<u32>,
    join: Vec<u32>,
    bot: usize,
    top: usize,
}

/// Validates that `le` is reflexive, antisymmetric and transitive.
pub fn validate_order(le: &Relation) -> Result<()> {
    let n = le.size();
    for a in 0..n {
        if !le.get(a, a) {
            return Err(Error::Structure(format!("order not reflexive at {a}")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && le.get(a, b) && le.get(b, a) {
                return Err(Error::Structure(format!(
                    "order not antisymmetric at ({a},{b})"
                )));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if le.get(a, b) {
                // row(b) must be contained in row(a)
                if !le.row(b).is_subset(&le.row(a)) {
                    let c = le.row(b).iter().find(|&c| !le.get(a, c)).unwrap();
                    return Err(Error::Structure(format!(
                        "order not transitive: {a}<={b}<={c} but not {a}<={c}"
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn relation_from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Relation> {
    if size == 0 {
        return Err(Error::Argument("order must have at least one element".into()));
    }
    let mut le = Relation::new(size);
    for &(i, j) in pairs {
        if i >= size || j >= size {
            return Err(Error::Format(format!(
                "le pair ({i},{j}) out of range for size {size}"
            )));
        }
        le.set(i, j);
    }
    Ok(le)
}

impl FiniteLattice {
    /// Builds a lattice from an order relation, deriving meet and join
    /// tables. Fails if some pair lacks a greatest lower or least upper
    /// bound, or if the relation is not a partial order.
    pub fn from_le(le: Relation) -> Result<Self> {
        validate_order(&le)?;
        let n = le.size();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = Self::glb(&le, a, b)? as u32;
                join[a * n + b] = Self::lub(&le, a, b)? as u32;
            }
        }
        let mut bot = 0usize;
        let mut top = 0usize;
        for x in 1..n {
            bot = meet[bot * n + x] as usize;
            top = join[top * n + x] as usize;
        }
        Ok(FiniteLattice {
            size: n,
            le,
            meet,
            join,
            bot,
            top,
        })
    }

    pub fn from_le_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_le(relation_from_pairs(size, pairs)?)
    }

    /// Crate-internal constructor for tables already known to be consistent
    /// (the open-algebra fast path). Consistency is still spot-checked.
    pub(crate) fn from_tables(
        le: Relation,
        meet: Vec<u32>,
        join: Vec<u32>,
        bot: usize,
        top: usize,
    ) -> Self {
        FiniteLattice {
            size: le.size(),
            le,
            meet,
            join,
            bot,
            top,
        }
    }

    fn glb(le: &Relation, a: usize, b: usize) -> Result<usize> {
        let n = le.size();
        let mut best: Option<usize> = None;
        for c in 0..n {
            if le.get(c, a) && le.get(c, b) {
                best = Some(match best {
                    None => c,
                    Some(m) if le.get(m, c) => c,
                    Some(m) => m,
                });
            }
        }
        let m = best
            .ok_or_else(|| Error::Structure(format!("no lower bound for ({a},{b})")))?;
        for c in 0..n {
            if le.get(c, a) && le.get(c, b) && !le.get(c, m) {
                return Err(Error::Structure(format!(
                    "no greatest lower bound for ({a},{b}): {c} and {m} incomparable"
                )));
            }
        }
        Ok(m)
    }

    fn lub(le: &Relation, a: usize, b: usize) -> Result<usize> {
        let n = le.size();
        let mut best: Option<usize> = None;
        for c in 0..n {
            if le.get(a, c) && le.get(b, c) {
                best = Some(match best {
                    None => c,
                    Some(m) if le.get(c, m) => c,
                    Some(m) => m,
                });
            }
        }
        let m = best
            .ok_or_else(|| Error::Structure(format!("no upper bound for ({a},{b})")))?;
        for c in 0..n {
            if le.get(a, c) && le.get(b, c) && !le.get(m, c) {
                return Err(Error::Structure(format!(
                    "no least upper bound for ({a},{b}): {c} and {m} incomparable"
                )));
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le.get(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn le_relation(&self) -> &Relation {
        &self.le
    }

    /// Meet-distributivity over join, checked on all triples.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.size {
            for b in 0..self.size {
                for c in 0..self.size {
                    if self.meet(a, self.join(b, c))
                        != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `e` is join-irreducible when it is not bottom and not the join of two
    /// strictly smaller elements.
    pub fn is_join_irreducible(&self, e: usize) -> bool {
        if e == self.bot {
            return false;
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if a != e && b != e && self.join(a, b) == e {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_meet_irreducible(&self, e: usize) -> bool {
        if e == self.top {
            return false;
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if a != e && b != e && self.meet(a, b) == e {
                    return false;
                }
            }
        }
        true
    }

    /// Irreducibility of the bounds themselves. The one-element lattice
    /// counts as neither (its unit filter is improper, so nothing useful
    /// follows from the flags there).
    pub fn irreducibility_flags(&self) -> IrreducibilityFlags {
        if self.size == 1 {
            return IrreducibilityFlags {
                zero_irreducible: false,
                one_irreducible: false,
            };
        }
        let mut one = true;
        let mut zero = true;
        'outer1: for a in 0..self.size {
            for b in 0..self.size {
                if a != self.top && b != self.top && self.join(a, b) == self.top {
                    one = false;
                    break 'outer1;
                }
            }
        }
        'outer0: for a in 0..self.size {
            for b in 0..self.size {
                if a != self.bot && b != self.bot && self.meet(a, b) == self.bot {
                    zero = false;
                    break 'outer0;
                }
            }
        }
        IrreducibilityFlags {
            zero_irreducible: zero,
            one_irreducible: one,
        }
    }

    /// Hasse diagram in DOT syntax, deterministic node order, edges drawn
    /// from lower to upper covers.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        hasse_dot(self.size, |a, b| self.le(a, b), labels)
    }
}

pub(crate) fn hasse_dot(
    n: usize,
    le: impl Fn(usize, usize) -> bool,
    labels: Option<&[String]>,
) -> String {
    let lt = |a: usize, b: usize| a != b && le(a, b);
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for i in 0..n {
        let label = labels
            .map(|ls| ls[i].clone())
            .unwrap_or_else(|| i.to_string());
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push_str(&format!("  n{a} -> n{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IrreducibilityFlags {
    pub zero_irreducible: bool,
    pub one_irreducible: bool,
}

/// A finite Heyting algebra: a bounded lattice together with the table of
/// relative pseudocomplements, and the dual table when every pair admits one.
///
/// Residuation — `c <= imp(a,b)` iff `meet(a,c) <= b` — holds for every
/// constructed table; construction fails on lattices where some pair has no
/// greatest such element.
#[derive(Clone)]
pub struct HeytingAlgebra {
    lat: FiniteLattice,
    imp: Vec<u32>,
    dual_imp: Option<Vec<u32>>,
    fingerprint: u64,
}

impl HeytingAlgebra {
    /// Computes the implication table: `imp(a,b)` is the greatest `c` with
    /// `meet(a,c) <= b`. Fails with a structure error naming the offending
    /// pair when no greatest element exists, or when the lattice is not
    /// distributive. The dual table is filled in when every pair admits a
    /// least `c` with `b <= join(a,c)`.
    pub fn from_lattice(lat: FiniteLattice) -> Result<Self> {
        let n = lat.size();
        let mut imp = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut best: Option<usize> = None;
                for c in 0..n {
                    if lat.le(lat.meet(a, c), b) {
                        best = Some(match best {
                            None => c,
                            Some(m) if lat.le(m, c) => c,
                            Some(m) => m,
                        });
                    }
                }
                let m = best.expect("meet(a,bot) <= b always holds");
                // greatest, not merely maximal
                for c in 0..n {
                    if lat.le(lat.meet(a, c), b) && !lat.le(c, m) {
                        return Err(Error::Structure(format!(
                            "not implicative: no greatest c with {a} meet c <= {b}"
                        )));
                    }
                }
                imp[a * n + b] = m as u32;
            }
        }
        if let Some((a, b, c)) = lat.distributivity_witness() {
            return Err(Error::Structure(format!(
                "not distributive at triple ({a},{b},{c})"
            )));
        }
        let dual_imp = Self::dual_table(&lat);
        let fingerprint = fingerprint(&lat, &imp);
        Ok(HeytingAlgebra {
            lat,
            imp,
            dual_imp,
            fingerprint,
        })
    }

    fn dual_table(lat: &FiniteLattice) -> Option<Vec<u32>> {
        let n = lat.size();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let mut best: Option<usize> = None;
                for c in 0..n {
                    if lat.le(b, lat.join(a, c)) {
                        best = Some(match best {
                            None => c,
                            Some(m) if lat.le(c, m) => c,
                            Some(m) => m,
                        });
                    }
                }
                let m = best.expect("b <= join(a,top) always holds");
                for c in 0..n {
                    if lat.le(b, lat.join(a, c)) && !lat.le(m, c) {
                        return None;
                    }
                }
                table[a * n + b] = m as u32;
            }
        }
        Some(table)
    }

    /// Constructor for tables computed elsewhere (the open-algebra path).
    /// Residuation is re-verified for algebras up to 400 elements.
    pub(crate) fn from_parts(
        lat: FiniteLattice,
        imp: Vec<u32>,
        dual_imp: Option<Vec<u32>>,
    ) -> Result<Self> {
        let fingerprint = fingerprint(&lat, &imp);
        let h = HeytingAlgebra {
            lat,
            imp,
            dual_imp,
            fingerprint,
        };
        if h.lat.size() <= 400 {
            h.check_residuation()?;
        }
        Ok(h)
    }

    pub fn check_residuation(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                let i = self.imp(a, b);
                for c in 0..n {
                    if self.lat.le(c, i) != self.lat.le(self.lat.meet(a, c), b) {
                        return Err(Error::Verification(format!(
                            "residuation fails at ({a},{b},{c})"
                        )));
                    }
                }
                if let Some(d) = self.dual_imp(a, b) {
                    for c in 0..n {
                        if self.lat.le(d, c) != self.lat.le(b, self.lat.join(a, c)) {
                            return Err(Error::Verification(format!(
                                "dual residuation fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lat
    }

    pub fn size(&self) -> usize {
        self.lat.size()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.lat.le(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lat.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lat.join(a, b)
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.lat.size() + b] as usize
    }

    pub fn dual_imp(&self, a: usize, b: usize) -> Option<usize> {
        self.dual_imp
            .as_ref()
            .map(|t| t[a * self.lat.size() + b] as usize)
    }

    pub fn has_dual_imp(&self) -> bool {
        self.dual_imp.is_some()
    }

    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.bot())
    }

    pub fn bot(&self) -> usize {
        self.lat.bot()
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }

    /// Identity of the algebra instance, used to detect cross-algebra use of
    /// filters and valuations.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn irreducibility_flags(&self) -> IrreducibilityFlags {
        self.lat.irreducibility_flags()
    }

    /// The interval `[c, d]` as an algebra of its own: bottom `c`, top `d`,
    /// inherited meet and join, and implication `(a => b) meet d`. The
    /// returned residuation is re-verified; a failure would mean the relative
    /// implication form is wrong and surfaces as a verification error.
    pub fn interval(&self, c: usize, d: usize) -> Result<IntervalAlgebra> {
        let n = self.size();
        if c >= n || d >= n {
            return Err(Error::Argument(format!(
                "interval endpoints ({c},{d}) out of range"
            )));
        }
        if !self.le(c, d) {
            return Err(Error::Argument(format!("interval requires {c} <= {d}")));
        }
        let members: Vec<usize> = (0..n).filter(|&x| self.le(c, x) && self.le(x, d)).collect();
        let index_of: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (i, &m) in members.iter().enumerate() {
                v[m] = Some(i);
            }
            v
        };
        let k = members.len();
        let mut le = Relation::new(k);
        for i in 0..k {
            for j in 0..k {
                if self.le(members[i], members[j]) {
                    le.set(i, j);
                }
            }
        }
        let mut meet = vec![0u32; k * k];
        let mut join = vec![0u32; k * k];
        let mut imp = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                meet[i * k + j] = index_of[self.meet(members[i], members[j])]
                    .expect("interval closed under meet") as u32;
                join[i * k + j] = index_of[self.join(members[i], members[j])]
                    .expect("interval closed under join") as u32;
                let rel = self.meet(self.imp(members[i], members[j]), d);
                imp[i * k + j] = index_of[rel].expect("relative implication stays in interval") as u32;
            }
        }
        let dual_imp = self.dual_imp.as_ref().map(|_| {
            let mut t = vec![0u32; k * k];
            for i in 0..k {
                for j in 0..k {
                    let rel = self.join(self.dual_imp(members[i], members[j]).unwrap(), c);
                    t[i * k + j] =
                        index_of[rel].expect("relative dual implication stays in interval") as u32;
                }
            }
            t
        });
        let bot = index_of[c].unwrap();
        let top = index_of[d].unwrap();
        let lat = FiniteLattice::from_tables(le, meet, join, bot, top);
        let algebra = HeytingAlgebra::from_parts(lat, imp, dual_imp)?;
        Ok(IntervalAlgebra { algebra, members })
    }

    /// The order dual: meet and join swapped, bounds swapped, implication of
    /// the result is the dual implication of the input. Fails when the dual
    /// implication table is missing.
    pub fn dual(&self) -> Result<HeytingAlgebra> {
        let dual_imp = self
            .dual_imp
            .clone()
            .ok_or_else(|| Error::Structure("dual requires a dual implication table".into()))?;
        let n = self.size();
        let mut le = Relation::new(n);
        for a in 0..n {
            for b in 0..n {
                if self.le(b, a) {
                    le.set(a, b);
                }
            }
        }
        let lat = FiniteLattice::from_tables(
            le,
            self.lat.join.clone(),
            self.lat.meet.clone(),
            self.lat.top,
            self.lat.bot,
        );
        HeytingAlgebra::from_parts(lat, dual_imp, Some(self.imp.clone()))
    }

    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        self.lat.to_dot(labels)
    }
}

fn fingerprint(lat: &FiniteLattice, imp: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(0x100000001b3);
    };
    eat(lat.size() as u64);
    for a in 0..lat.size() {
        for b in 0..lat.size() {
            eat((lat.le(a, b) as u64) | (lat.meet(a, b) as u64) << 1 | (lat.join(a, b) as u64) << 32);
        }
    }
    for &v in imp {
        eat(v as u64);
    }
    h
}

/// An interval `[c, d]` repackaged as a standalone algebra. `members[i]` is
/// the parent element realizing interval element `i`.
pub struct IntervalAlgebra {
    pub algebra: HeytingAlgebra,
    pub members: Vec<usize>,
}

/// The quotient of an algebra by a filter: classes of the congruence
/// `a ~ b` iff `a <= b` and `b <= a` modulo the filter, where `a <=_F b`
/// iff `meet(a, e) <= b` for some filter element `e`.
pub struct Quotient {
    pub lattice: FiniteLattice,
    /// element -> class index
    pub class_of: Vec<usize>,
    /// the generator of the (always principal, in a finite lattice) filter
    pub generator: usize,
    /// class index -> element index of `interval(H, bot, generator)`, a
    /// verified lattice isomorphism onto that interval
    pub interval_iso: Vec<usize>,
}

pub fn quotient_by_filter(h: &HeytingAlgebra, f: &Filter) -> Result<Quotient> {
    f.check_carrier(h)?;
    let n = h.size();
    let members = f.members();
    let le_f = |a: usize, b: usize| members.iter().any(|&e| h.le(h.meet(a, e), b));
    // congruence classes, numbered by least member
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        class_of[a] = id;
        for b in a + 1..n {
            if class_of[b] == usize::MAX && le_f(a, b) && le_f(b, a) {
                class_of[b] = id;
            }
        }
    }
    let k = reps.len();
    let mut le = Relation::new(k);
    for i in 0..k {
        for j in 0..k {
            if le_f(reps[i], reps[j]) {
                le.set(i, j);
            }
        }
    }
    let lattice = FiniteLattice::from_le(le)?;
    for i in 0..k {
        for j in 0..k {
            if lattice.meet(i, j) != class_of[h.meet(reps[i], reps[j])]
                || lattice.join(i, j) != class_of[h.join(reps[i], reps[j])]
            {
                return Err(Error::Verification(
                    "quotient operations do not project meet/join".into(),
                ));
            }
        }
    }
    // every filter on a finite lattice is principal: generated by its meet
    let generator = members
        .iter()
        .copied()
        .reduce(|a, b| h.meet(a, b))
        .expect("filters are nonempty");
    let interval = h.interval(h.bot(), generator)?;
    let mut interval_index = vec![usize::MAX; n];
    for (i, &m) in interval.members.iter().enumerate() {
        interval_index[m] = i;
    }
    let mut interval_iso = vec![usize::MAX; k];
    for a in 0..n {
        let img = interval_index[h.meet(a, generator)];
        let cls = class_of[a];
        if interval_iso[cls] == usize::MAX {
            interval_iso[cls] = img;
        } else if interval_iso[cls] != img {
            return Err(Error::Verification(
                "quotient classes do not collapse onto the interval".into(),
            ));
        }
    }
    // verify the iso: bijective and an order isomorphism
    let mut seen = vec![false; interval.members.len()];
    for &img in &interval_iso {
        if img == usize::MAX || seen[img] {
            return Err(Error::Verification(
                "quotient-to-interval map is not a bijection".into(),
            ));
        }
        seen[img] = true;
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::Verification(
            "quotient-to-interval map is not onto".into(),
        ));
    }
    for i in 0..k {
        for j in 0..k {
            if lattice.le(i, j)
                != interval
                    .algebra
                    .le(interval_iso[i], interval_iso[j])
            {
                return Err(Error::Verification(
                    "quotient-to-interval map does not preserve order".into(),
                ));
            }
        }
    }
    Ok(Quotient {
        lattice,
        class_of,
        generator,
        interval_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::Filter;

    pub(crate) fn chain(k: usize) -> HeytingAlgebra {
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                pairs.push((i, j));
            }
        }
        HeytingAlgebra::from_lattice(FiniteLattice::from_le_pairs(k, &pairs).unwrap()).unwrap()
    }

    fn boolean2() -> HeytingAlgebra {
        chain(2)
    }

    /// 0 below three incomparable atoms below 1.
    fn m3() -> FiniteLattice {
        let mut pairs = vec![(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)];
        for a in [1, 2, 3] {
            pairs.push((0, a));
            pairs.push((a, 4));
        }
        pairs.push((0, 4));
        FiniteLattice::from_le_pairs(5, &pairs).unwrap()
    }

    #[test]
    fn boolean_implication() {
        let h = boolean2();
        assert_eq!(h.imp(1, 0), 0);
        assert_eq!(h.imp(0, 0), 1);
        assert_eq!(h.imp(0, 1), 1);
    }

    #[test]
    fn three_chain_implication() {
        // derived by enumerating candidates c with meet(a,c) <= b
        let h = chain(3);
        assert_eq!(h.imp(2, 1), 1);
        assert_eq!(h.imp(1, 0), 0);
        assert_eq!(h.imp(0, 2), 2);
        assert_eq!(h.neg(1), 0);
    }

    #[test]
    fn m3_is_not_implicative() {
        let err = HeytingAlgebra::from_lattice(m3()).unwrap_err();
        assert!(matches!(err, Error::Structure(_)), "{err}");
    }

    #[test]
    fn residuation_brute_force_oracle() {
        for h in [chain(2), chain(3), chain(5)] {
            let n = h.size();
            for a in 0..n {
                for b in 0..n {
                    // oracle: scan for the greatest c with meet(a,c) <= b
                    let best = (0..n)
                        .filter(|&c| h.le(h.meet(a, c), b))
                        .reduce(|x, y| if h.le(x, y) { y } else { x })
                        .unwrap();
                    assert_eq!(h.imp(a, b), best);
                }
            }
            h.check_residuation().unwrap();
        }
    }

    #[test]
    fn interval_identity_and_edge_cases() {
        let h = chain(3);
        let whole = h.interval(h.bot(), h.top()).unwrap();
        assert_eq!(whole.algebra.size(), 3);
        assert_eq!(whole.members, vec![0, 1, 2]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(whole.algebra.imp(a, b), h.imp(a, b));
            }
        }
        let upper = h.interval(1, 2).unwrap();
        assert_eq!(upper.algebra.size(), 2);
        assert!(matches!(h.interval(2, 1), Err(Error::Argument(_))));
    }

    #[test]
    fn dual_involution_and_three_chain() {
        let h = chain(3);
        let d = h.dual().unwrap();
        assert_eq!(d.bot(), 2);
        assert_eq!(d.top(), 0);
        assert!(d.le(2, 1) && d.le(1, 0));
        let dd = d.dual().unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(dd.le(a, b), h.le(a, b));
                assert_eq!(dd.imp(a, b), h.imp(a, b));
                assert_eq!(dd.meet(a, b), h.meet(a, b));
            }
        }
        let b = boolean2();
        let bd = b.dual().unwrap();
        // the two-element algebra is self-dual up to the 0/1 swap
        assert_eq!(bd.size(), 2);
        assert_eq!(bd.bot(), 1);
    }

    #[test]
    fn irreducibility_of_small_algebras() {
        let b = boolean2();
        let f = b.irreducibility_flags();
        assert!(f.zero_irreducible && f.one_irreducible);
        let t = chain(1);
        let f = t.irreducibility_flags();
        assert!(!f.zero_irreducible && !f.one_irreducible);
    }

    #[test]
    fn quotient_by_unit_filter_is_identity() {
        let h = chain(3);
        let f = Filter::new(&h, [h.top()]).unwrap();
        let q = quotient_by_filter(&h, &f).unwrap();
        assert_eq!(q.lattice.size(), 3);
        assert_eq!(q.generator, h.top());
    }

    #[test]
    fn quotient_three_chain_by_principal_middle() {
        // classes of {m,1} collapse m and 1; quotient is the two-chain [0,m]
        let h = chain(3);
        let f = Filter::new(&h, [1, 2]).unwrap();
        let q = quotient_by_filter(&h, &f).unwrap();
        assert_eq!(q.lattice.size(), 2);
        assert_eq!(q.generator, 1);
        assert_eq!(q.class_of[1], q.class_of[2]);
        assert_ne!(q.class_of[0], q.class_of[1]);
    }

    #[test]
    fn improper_filter_is_rejected() {
        let h = chain(3);
        assert!(Filter::new(&h, [0, 1, 2]).is_err());
    }
}
