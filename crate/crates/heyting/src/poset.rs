//! Finite partial orders, their upward-closed sets, and the open-set algebra
//! construction, including the reverse-inclusion power-set families.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{blocks_for, ElemSet, Relation};
use crate::error::{Error, Result};
use crate::lattice::{hasse_dot, validate_order, FiniteLattice, HeytingAlgebra};

const MAX_POWER_EXPONENT: u64 = 20;
/// Upset enumeration aborts past this many upsets, and also when the raw
/// bitset storage would pass the same number of 64-bit words.
const MAX_UPSETS: u64 = 1 << 24;
/// Table-backed algebras are quadratic in the element count; larger open
/// algebras fail fast instead of allocating gigabytes.
const MAX_ALGEBRA: u64 = 2048;

/// A finite partial order over indices `0..size`.
///
/// Power-set orders are kept symbolic (the relation is computed from subset
/// masks) so that large exponents stay constructible; explicit orders store
/// the full relation and are validated on construction. Posets are immutable
/// once built.
#[derive(Clone)]
pub struct Poset {
    size: usize,
    kind: Kind,
}

#[derive(Clone)]
enum Kind {
    Explicit {
        /// up.get(i, j) holds iff i <= j
        up: Relation,
        labels: Option<Vec<String>>,
    },
    /// Subsets of `{0..n-1}` ordered by reverse inclusion; element index i
    /// denotes the subset with bit pattern i (shifted by one when the empty
    /// set is punctured out).
    Power { n: u32, punctured: bool },
}

/// Serialized form: the full reflexive order as index pairs.
#[derive(Serialize, Deserialize)]
pub struct PosetFile {
    pub size: usize,
    pub le: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

impl Poset {
    pub fn from_relation(up: Relation, labels: Option<Vec<String>>) -> Result<Self> {
        validate_order(&up)?;
        if let Some(ls) = &labels {
            if ls.len() != up.size() {
                return Err(Error::Format("label count differs from size".into()));
            }
        }
        Ok(Poset {
            size: up.size(),
            kind: Kind::Explicit { up, labels },
        })
    }

    pub fn from_le_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_relation(crate::lattice::relation_from_pairs(size, pairs)?, None)
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        let mut p = Self::from_le_pairs(file.size, &file.le)?;
        if let Some(labels) = &file.labels {
            if labels.len() != file.size {
                return Err(Error::Format("label count differs from size".into()));
            }
            if let Kind::Explicit { labels: l, .. } = &mut p.kind {
                *l = Some(labels.clone());
            }
        }
        Ok(p)
    }

    pub fn to_file(&self) -> PosetFile {
        let mut le = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if self.le(i, j) {
                    le.push((i, j));
                }
            }
        }
        PosetFile {
            size: self.size,
            le,
            labels: match &self.kind {
                Kind::Explicit { labels, .. } => labels.clone(),
                Kind::Power { .. } => Some((0..self.size).map(|i| self.label(i)).collect()),
            },
        }
    }

    pub fn point() -> Self {
        Self::from_le_pairs(1, &[(0, 0)]).unwrap()
    }

    /// Total order 0 < 1 < .. < k-1.
    pub fn chain(k: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                pairs.push((i, j));
            }
        }
        Self::from_le_pairs(k, &pairs)
    }

    pub fn antichain(k: usize) -> Result<Self> {
        Self::from_le_pairs(k, &(0..k).map(|i| (i, i)).collect::<Vec<_>>())
    }

    /// Element 0 below two incomparable tops 1 and 2.
    pub fn fork() -> Self {
        Self::from_le_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)]).unwrap()
    }

    /// 0 < 1,2 < 3 with 1 and 2 incomparable.
    pub fn diamond() -> Self {
        Self::from_le_pairs(
            4,
            &[
                (0, 0),
                (1, 1),
                (2, 2),
                (3, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 3),
                (2, 3),
            ],
        )
        .unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        match &self.kind {
            Kind::Explicit { up, .. } => up.get(a, b),
            Kind::Power { .. } => {
                let (ma, mb) = (self.power_mask(a), self.power_mask(b));
                ma & mb == mb // a <= b iff a contains b
            }
        }
    }

    fn power_mask(&self, i: usize) -> u64 {
        match self.kind {
            Kind::Power { punctured, .. } => {
                if punctured {
                    i as u64 + 1
                } else {
                    i as u64
                }
            }
            _ => unreachable!(),
        }
    }

    fn power_index(&self, mask: u64) -> usize {
        match self.kind {
            Kind::Power { punctured, .. } => {
                if punctured {
                    mask as usize - 1
                } else {
                    mask as usize
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.kind {
            Kind::Explicit { labels, .. } => labels
                .as_ref()
                .map(|l| l[i].clone())
                .unwrap_or_else(|| i.to_string()),
            Kind::Power { n, .. } => {
                let mask = self.power_mask(i);
                (0..*n)
                    .map(|b| if mask >> b & 1 == 1 { '1' } else { '0' })
                    .collect()
            }
        }
    }

    /// The up-cone `{b : a <= b}`.
    pub fn cone(&self, a: usize) -> ElemSet {
        match &self.kind {
            Kind::Explicit { up, .. } => up.row(a),
            Kind::Power { .. } => {
                let mut s = ElemSet::empty(self.size);
                let m = self.power_mask(a);
                // submasks of m, including m itself
                let mut sub = m;
                loop {
                    if sub != 0 || !self.is_punctured() {
                        s.insert(self.power_index(sub));
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & m;
                }
                s
            }
        }
    }

    fn is_punctured(&self) -> bool {
        matches!(self.kind, Kind::Power { punctured: true, .. })
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == a || !self.le(b, a)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| (0..self.size).all(|b| b == a || !self.le(a, b)))
            .collect()
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.size).find(|&a| (0..self.size).all(|b| self.le(a, b)))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.size).find(|&a| (0..self.size).all(|b| self.le(b, a)))
    }

    pub fn is_bounded(&self) -> bool {
        self.least().is_some() && self.greatest().is_some()
    }

    /// Immediate successors of `a`: minimal elements strictly above it.
    pub fn covers_of(&self, a: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&b| {
                b != a
                    && self.le(a, b)
                    && !(0..self.size).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b))
            })
            .collect()
    }

    pub fn is_upset(&self, set: &ElemSet) -> bool {
        match &self.kind {
            Kind::Explicit { up, .. } => set.iter().all(|a| up.row_is_subset(a, set)),
            Kind::Power { .. } => {
                // going up removes one bit at a time
                set.iter().all(|a| {
                    let m = self.power_mask(a);
                    (0..64).filter(|&b| m >> b & 1 == 1).all(|b| {
                        let sub = m & !(1 << b);
                        if sub == 0 && self.is_punctured() {
                            true
                        } else {
                            set.contains(self.power_index(sub))
                        }
                    })
                })
            }
        }
    }

    pub fn upset(&self, members: impl IntoIterator<Item = usize>) -> Result<Upset> {
        let set = ElemSet::from_iter(self.size, members);
        if !self.is_upset(&set) {
            return Err(Error::Argument("set is not upward closed".into()));
        }
        Ok(Upset { members: set })
    }

    pub fn upward_closure(&self, seed: impl IntoIterator<Item = usize>) -> Upset {
        let mut set = ElemSet::empty(self.size);
        for a in seed {
            set.union_in_place(&self.cone(a));
        }
        Upset { members: set }
    }

    pub fn full_upset(&self) -> Upset {
        Upset {
            members: ElemSet::full(self.size),
        }
    }

    pub fn empty_upset(&self) -> Upset {
        Upset {
            members: ElemSet::empty(self.size),
        }
    }

    /// Hasse diagram in DOT syntax with deterministic node order.
    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = (0..self.size).map(|i| self.label(i)).collect();
        hasse_dot(self.size, |a, b| self.le(a, b), Some(&labels))
    }
}

/// An upward-closed subset of a poset. Constructed through [`Poset`] methods,
/// which enforce closure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Upset {
    members: ElemSet,
}

impl Upset {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub(crate) fn from_set_unchecked(members: ElemSet) -> Self {
        Upset { members }
    }
}

/// The poset of subsets of `{0..n-1}` under reverse inclusion (`a <= b` iff
/// `a` contains `b`); the punctured variant omits the empty set. Element
/// labels are the subset bit patterns.
pub fn power_poset(n: u32, punctured: bool) -> Result<Poset> {
    if n == 0 || n as u64 > MAX_POWER_EXPONENT {
        return Err(Error::SizeLimit {
            what: "power-set order exponent",
            limit: MAX_POWER_EXPONENT,
            actual: n as u64,
        });
    }
    let size = (1usize << n) - usize::from(punctured);
    Ok(Poset {
        size,
        kind: Kind::Power { n, punctured },
    })
}

/// All upward-closed subsets, ordered canonically (ascending as integers over
/// element indices). Contains the empty set and the full carrier. Aborts with
/// a size-limit error if the count or the storage would blow up.
pub fn enumerate_upsets(poset: &Poset) -> Result<Vec<Upset>> {
    let n = poset.size();
    let blocks = blocks_for(n) as u64;
    // process elements with all their successors already placed
    let mut order: Vec<usize> = (0..n).collect();
    let cone_sizes: Vec<usize> = (0..n).map(|a| poset.cone(a).len()).collect();
    order.sort_by_key(|&a| cone_sizes[a]);
    let mut upsets: Vec<ElemSet> = vec![ElemSet::empty(n)];
    for &e in &order {
        let mut strict = poset.cone(e);
        strict.remove(e);
        let extra: Vec<ElemSet> = upsets
            .iter()
            .filter(|u| strict.is_subset(u))
            .map(|u| {
                let mut v = u.clone();
                v.insert(e);
                v
            })
            .collect();
        upsets.extend(extra);
        let count = upsets.len() as u64;
        if count > MAX_UPSETS || count * blocks > MAX_UPSETS {
            return Err(Error::SizeLimit {
                what: "upset enumeration",
                limit: MAX_UPSETS,
                actual: count * blocks,
            });
        }
    }
    upsets.sort();
    Ok(upsets.into_iter().map(Upset::from_set_unchecked).collect())
}

/// Pointwise Heyting operations on upsets, independent of any enumerated
/// algebra. The implication is the union of all opens whose intersection
/// with `a` lands in `b`, computed pointwise: `x` belongs iff the whole
/// up-cone of `x` maps `a` into `b`.
pub fn up_meet(a: &Upset, b: &Upset) -> Upset {
    Upset {
        members: a.members.intersect(&b.members),
    }
}

pub fn up_join(a: &Upset, b: &Upset) -> Upset {
    Upset {
        members: a.members.union(&b.members),
    }
}

pub fn up_imp(poset: &Poset, a: &Upset, b: &Upset) -> Upset {
    let mut out = ElemSet::empty(poset.size());
    for x in 0..poset.size() {
        let cone = poset.cone(x);
        if cone.intersect(&a.members).is_subset(&b.members) {
            out.insert(x);
        }
    }
    Upset { members: out }
}

/// Least open containing `b` minus `a`: the dual implication in the open-set
/// algebra.
pub fn up_dual_imp(poset: &Poset, a: &Upset, b: &Upset) -> Upset {
    poset.upward_closure(b.members.difference(&a.members).iter())
}

/// The open-set algebra of a poset together with the upset realizing each
/// element. Element order is the canonical integer order, so the bottom is
/// element 0 and the top is the last element.
pub struct OpenAlgebra {
    pub algebra: HeytingAlgebra,
    pub upsets: Vec<Upset>,
    index: HashMap<ElemSet, usize>,
}

impl OpenAlgebra {
    pub fn index_of(&self, u: &Upset) -> Option<usize> {
        self.index.get(&u.members).copied()
    }

    pub fn size(&self) -> usize {
        self.upsets.len()
    }
}

/// Builds the lattice of all upsets under inclusion, with intersection and
/// union as meet and join and the pointwise implication. The result is
/// one-irreducible when the poset is bounded below and zero-irreducible when
/// bounded above.
pub fn open_algebra(poset: &Poset) -> Result<OpenAlgebra> {
    let upsets = enumerate_upsets(poset)?;
    let k = upsets.len();
    if k as u64 > MAX_ALGEBRA {
        return Err(Error::SizeLimit {
            what: "open algebra table size",
            limit: MAX_ALGEBRA,
            actual: k as u64,
        });
    }
    let index: HashMap<ElemSet, usize> = upsets
        .iter()
        .enumerate()
        .map(|(i, u)| (u.members.clone(), i))
        .collect();
    let mut le = Relation::new(k);
    for i in 0..k {
        for j in 0..k {
            if upsets[i].members.is_subset(&upsets[j].members) {
                le.set(i, j);
            }
        }
    }
    let lookup = |s: &ElemSet| -> u32 { index[s] as u32 };
    let mut meet = vec![0u32; k * k];
    let mut join = vec![0u32; k * k];
    let mut imp = vec![0u32; k * k];
    let mut dual = vec![0u32; k * k];
    let cones: Vec<ElemSet> = (0..poset.size()).map(|x| poset.cone(x)).collect();
    for i in 0..k {
        for j in 0..k {
            meet[i * k + j] = lookup(&upsets[i].members.intersect(&upsets[j].members));
            join[i * k + j] = lookup(&upsets[i].members.union(&upsets[j].members));
            let mut impl_set = ElemSet::empty(poset.size());
            for (x, cone) in cones.iter().enumerate() {
                if cone.intersect(&upsets[i].members).is_subset(&upsets[j].members) {
                    impl_set.insert(x);
                }
            }
            imp[i * k + j] = lookup(&impl_set);
            dual[i * k + j] = lookup(
                &up_dual_imp(poset, &upsets[i], &upsets[j]).members,
            );
        }
    }
    let bot = 0;
    let top = k - 1;
    debug_assert!(upsets[bot].members.is_empty());
    debug_assert_eq!(upsets[top].members.len(), poset.size());
    let lat = FiniteLattice::from_tables(le, meet, join, bot, top);
    let algebra = HeytingAlgebra::from_parts(lat, imp, Some(dual))?;
    Ok(OpenAlgebra {
        algebra,
        upsets,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: scan all subsets for upward closure.
    fn upsets_by_scan(p: &Poset) -> Vec<ElemSet> {
        assert!(p.size() <= 16);
        let n = p.size();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            let set = ElemSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            if p.is_upset(&set) {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    /// Antichains biject with upsets (an upset is recovered from its minimal
    /// elements), giving an independent count.
    fn antichain_count(p: &Poset) -> usize {
        assert!(p.size() <= 16);
        let n = p.size();
        (0u32..1 << n)
            .filter(|mask| {
                let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                elems
                    .iter()
                    .all(|&a| elems.iter().all(|&b| a == b || !p.le(a, b)))
            })
            .count()
    }

    #[test]
    fn power_poset_small_shapes() {
        let p1 = power_poset(1, false).unwrap();
        assert_eq!(p1.size(), 2);
        // {0} (bit pattern 1) is below the empty set (pattern 0)
        assert!(p1.le(1, 0));
        assert!(!p1.le(0, 1));
        assert_eq!(p1.least(), Some(1));
        assert_eq!(p1.greatest(), Some(0));

        let p2 = power_poset(2, false).unwrap();
        assert_eq!(p2.size(), 4);
        assert_eq!(p2.least(), Some(3)); // {0,1}
        assert_eq!(p2.greatest(), Some(0)); // empty set
        assert_eq!(p2.label(3), "11");

        // punctured: {0,1} below {0} and {1}, which are incomparable
        let p2m = power_poset(2, true).unwrap();
        assert_eq!(p2m.size(), 3);
        let full = p2m.power_index(3);
        let s0 = p2m.power_index(1);
        let s1 = p2m.power_index(2);
        assert!(p2m.le(full, s0) && p2m.le(full, s1));
        assert!(!p2m.le(s0, s1) && !p2m.le(s1, s0));
        assert_eq!(p2m.least(), Some(full));
        assert_eq!(p2m.greatest(), None);
    }

    #[test]
    fn power_poset_range_guard() {
        assert!(matches!(
            power_poset(0, false),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            power_poset(21, false),
            Err(Error::SizeLimit { .. })
        ));
        assert!(power_poset(20, false).is_ok());
    }

    #[test]
    fn upset_counts_match_scan_oracle() {
        for (p, expect) in [
            (power_poset(1, false).unwrap(), 3),
            (power_poset(2, false).unwrap(), 6),
            (power_poset(3, false).unwrap(), 20),
            (power_poset(2, true).unwrap(), 5),
            (power_poset(3, true).unwrap(), 19),
            (Poset::fork(), 5),
            (Poset::chain(4).unwrap(), 5),
        ] {
            let ups = enumerate_upsets(&p).unwrap();
            assert_eq!(ups.len(), expect, "count for {}-poset", p.size());
            let oracle = upsets_by_scan(&p);
            assert_eq!(
                ups.iter().map(|u| u.members.clone()).collect::<Vec<_>>(),
                oracle
            );
            assert_eq!(antichain_count(&p), expect);
            // closed under union and intersection
            for a in &ups {
                for b in &ups {
                    assert!(p.is_upset(&a.members.union(&b.members)));
                    assert!(p.is_upset(&a.members.intersect(&b.members)));
                }
            }
        }
    }

    #[test]
    fn dedekind_four() {
        let ups = enumerate_upsets(&power_poset(4, false).unwrap()).unwrap();
        assert_eq!(ups.len(), 168);
        assert_eq!(
            enumerate_upsets(&power_poset(4, true).unwrap()).unwrap().len(),
            167
        );
    }

    #[test]
    fn enumeration_guard_trips_early_on_huge_posets() {
        // 2^20-element order: the words guard must refuse long before
        // materializing millions of wide bitsets
        let p = power_poset(20, false).unwrap();
        assert!(matches!(enumerate_upsets(&p), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn open_algebra_point_is_boolean() {
        let alg = open_algebra(&Poset::point()).unwrap();
        assert_eq!(alg.algebra.size(), 2);
        assert_eq!(alg.algebra.imp(1, 0), 0);
    }

    #[test]
    fn open_algebra_of_fork_negations() {
        // elements of O(fork): {}, {1}, {2}, {1,2}, {0,1,2}
        let p = Poset::fork();
        let alg = open_algebra(&p).unwrap();
        assert_eq!(alg.algebra.size(), 5);
        let x = alg.index_of(&p.upset([1]).unwrap()).unwrap();
        let y = alg.index_of(&p.upset([2]).unwrap()).unwrap();
        assert_eq!(alg.algebra.neg(x), y, "complement of one top is the other");
        assert_eq!(alg.algebra.neg(alg.algebra.neg(x)), x);
        let flags = alg.algebra.irreducibility_flags();
        assert!(flags.one_irreducible, "fork is bounded below");
        assert!(!flags.zero_irreducible, "bottom is {{1}} meet {{2}}");
    }

    #[test]
    fn open_algebra_of_two_chain_is_three_chain() {
        // applying the implication operator by hand: middle => bottom = bottom
        let alg = open_algebra(&power_poset(1, false).unwrap()).unwrap();
        assert_eq!(alg.algebra.size(), 3);
        assert_eq!(alg.algebra.imp(1, 0), 0);
        assert_eq!(alg.algebra.imp(2, 1), 1);
        let flags = alg.algebra.irreducibility_flags();
        assert!(flags.one_irreducible && flags.zero_irreducible);
    }

    #[test]
    fn open_algebra_matches_generic_implication_tables() {
        for p in [
            Poset::fork(),
            Poset::diamond(),
            power_poset(2, false).unwrap(),
            power_poset(2, true).unwrap(),
        ] {
            let fast = open_algebra(&p).unwrap();
            let k = fast.algebra.size();
            let mut pairs = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    if fast.algebra.le(i, j) {
                        pairs.push((i, j));
                    }
                }
            }
            let generic = HeytingAlgebra::from_lattice(
                FiniteLattice::from_le_pairs(k, &pairs).unwrap(),
            )
            .unwrap();
            for a in 0..k {
                for b in 0..k {
                    assert_eq!(fast.algebra.imp(a, b), generic.imp(a, b));
                    assert_eq!(fast.algebra.dual_imp(a, b), generic.dual_imp(a, b));
                }
            }
        }
    }

    #[test]
    fn pointwise_imp_agrees_with_union_formula() {
        // oracle: the union of all opens C with A meet C inside B
        for p in [Poset::fork(), power_poset(2, false).unwrap(), Poset::diamond()] {
            let ups = enumerate_upsets(&p).unwrap();
            for a in &ups {
                for b in &ups {
                    let mut acc = ElemSet::empty(p.size());
                    for c in &ups {
                        if c.members.intersect(&a.members).is_subset(&b.members) {
                            acc.union_in_place(&c.members);
                        }
                    }
                    assert_eq!(up_imp(&p, a, b).members, acc);
                }
            }
        }
    }

    #[test]
    fn poset_json_round_trip_and_validation() {
        let p = Poset::fork();
        let file = p.to_file();
        let q = Poset::from_file(&file).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.le(0, 1) && q.le(0, 2) && !q.le(1, 2));

        let bad = PosetFile {
            size: 2,
            le: vec![(0, 0), (1, 1), (0, 1), (1, 0)],
            labels: None,
        };
        assert!(Poset::from_file(&bad).is_err());
    }

    #[test]
    fn dot_output_is_covers_only() {
        let dot = Poset::chain(3).unwrap().to_dot();
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("n1 -> n2"));
        assert!(!dot.contains("n0 -> n2"));
    }
}
