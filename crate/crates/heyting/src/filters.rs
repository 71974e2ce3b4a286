//! Filters and prime filters on finite Heyting algebras, generated filters
//! with the finite intersection property, prime separation, and the
//! prime-filter representation into an open-set algebra.

use serde::Serialize;

use crate::bits::Relation;
use crate::error::{Error, Result};
use crate::lattice::HeytingAlgebra;
use crate::morphism::{verify_hom, HomKind, HomReport};
use crate::poset::{open_algebra, OpenAlgebra, Poset};

/// A filter on a specific algebra instance: nonempty, proper, upward closed
/// and closed under meet. The carrier is remembered by fingerprint so that
/// cross-algebra use is a typed error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    carrier: u64,
    members: Vec<usize>,
}

/// Outcome of checking the filter axioms on an arbitrary element set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FilterAxiom {
    Ok,
    Empty,
    Improper,
    NotUpwardClosed { witness: usize, above: usize },
    NotMeetClosed { a: usize, b: usize },
    /// Only reported by the prime check: a join lands in the set but
    /// neither joinand does.
    NotPrime { a: usize, b: usize },
}

pub fn filter_axiom_report(h: &HeytingAlgebra, set: &[usize]) -> FilterAxiom {
    if set.is_empty() {
        return FilterAxiom::Empty;
    }
    let mut mask = vec![false; h.size()];
    for &a in set {
        mask[a] = true;
    }
    if mask.iter().all(|&m| m) {
        return FilterAxiom::Improper;
    }
    for &a in set {
        for b in 0..h.size() {
            if h.le(a, b) && !mask[b] {
                return FilterAxiom::NotUpwardClosed { witness: a, above: b };
            }
        }
    }
    for &a in set {
        for &b in set {
            if !mask[h.meet(a, b)] {
                return FilterAxiom::NotMeetClosed { a, b };
            }
        }
    }
    FilterAxiom::Ok
}

/// True iff the set is a filter that additionally splits joins:
/// `join(a,b)` in the set forces `a` or `b` in.
pub fn is_prime_filter(h: &HeytingAlgebra, set: &[usize]) -> bool {
    prime_filter_report(h, set) == FilterAxiom::Ok
}

pub fn prime_filter_report(h: &HeytingAlgebra, set: &[usize]) -> FilterAxiom {
    let base = filter_axiom_report(h, set);
    if base != FilterAxiom::Ok {
        return base;
    }
    let mut mask = vec![false; h.size()];
    for &a in set {
        mask[a] = true;
    }
    for a in 0..h.size() {
        for b in 0..h.size() {
            if mask[h.join(a, b)] && !mask[a] && !mask[b] {
                return FilterAxiom::NotPrime { a, b };
            }
        }
    }
    FilterAxiom::Ok
}

impl Filter {
    pub fn new(h: &HeytingAlgebra, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if let Some(&bad) = m.iter().find(|&&a| a >= h.size()) {
            return Err(Error::Argument(format!("element {bad} out of range")));
        }
        match filter_axiom_report(h, &m) {
            FilterAxiom::Ok => Ok(Filter {
                carrier: h.fingerprint(),
                members: m,
            }),
            bad => Err(Error::Argument(format!("not a filter: {bad:?}"))),
        }
    }

    /// The principal filter of a nonzero element.
    pub fn principal(h: &HeytingAlgebra, e: usize) -> Result<Self> {
        generated_filter(h, &[e])
    }

    pub fn check_carrier(&self, h: &HeytingAlgebra) -> Result<()> {
        if self.carrier != h.fingerprint() {
            return Err(Error::CrossAlgebra);
        }
        Ok(())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_prime(&self, h: &HeytingAlgebra) -> bool {
        is_prime_filter(h, &self.members)
    }

    /// The meet of all members; in a finite lattice every filter is the
    /// up-cone of this element.
    pub fn generator(&self, h: &HeytingAlgebra) -> usize {
        self.members
            .iter()
            .copied()
            .reduce(|a, b| h.meet(a, b))
            .expect("filters are nonempty")
    }
}

/// The filter generated by a nonempty set: everything above some finite meet
/// of the generators. Fails with a witness when the generators lack the
/// finite intersection property (some subset meets to bottom, which in a
/// finite lattice happens exactly when the whole meet is bottom).
pub fn generated_filter(h: &HeytingAlgebra, gens: &[usize]) -> Result<Filter> {
    if gens.is_empty() {
        return Err(Error::Argument("generating set must be nonempty".into()));
    }
    if let Some(&bad) = gens.iter().find(|&&a| a >= h.size()) {
        return Err(Error::Argument(format!("element {bad} out of range")));
    }
    let total = gens.iter().copied().reduce(|a, b| h.meet(a, b)).unwrap();
    if total == h.bot() {
        return Err(Error::Fip {
            witness: fip_witness(h, gens),
        });
    }
    let members: Vec<usize> = (0..h.size()).filter(|&a| h.le(total, a)).collect();
    Filter::new(h, members)
}

/// A minimal (under greedy removal) subset of the generators meeting to
/// bottom.
fn fip_witness(h: &HeytingAlgebra, gens: &[usize]) -> Vec<usize> {
    let meet_of = |set: &[usize]| {
        set.iter()
            .copied()
            .reduce(|a, b| h.meet(a, b))
            .unwrap_or(h.top())
    };
    let mut witness: Vec<usize> = gens.to_vec();
    let mut i = 0;
    while i < witness.len() {
        let mut reduced = witness.clone();
        reduced.remove(i);
        if !reduced.is_empty() && meet_of(&reduced) == h.bot() {
            witness = reduced;
        } else {
            i += 1;
        }
    }
    witness
}

/// Extends `f` to a prime filter containing `a` and avoiding `b`, by greedy
/// maximal extension in canonical element order. Precondition: no filter
/// element `e` has `meet(e, a) <= b`; in a finite lattice this reduces to
/// the generator of `f`.
pub fn separating_prime(
    h: &HeytingAlgebra,
    f: &Filter,
    a: usize,
    b: usize,
) -> Result<Filter> {
    f.check_carrier(h)?;
    if a >= h.size() || b >= h.size() {
        return Err(Error::Argument("element out of range".into()));
    }
    let base = f.generator(h);
    if h.le(h.meet(base, a), b) {
        return Err(Error::Argument(format!(
            "separation precondition fails: an element of the filter meets {a} below {b}"
        )));
    }
    let mut g = h.meet(base, a);
    for c in 0..h.size() {
        if !h.le(g, c) {
            let candidate = h.meet(g, c);
            if !h.le(candidate, b) {
                g = candidate;
            }
        }
    }
    let result = generated_filter(h, &[g])?;
    if !result.is_prime(h) || !result.contains(a) || result.contains(b) {
        return Err(Error::Verification(
            "greedy maximal extension did not reach a separating prime".into(),
        ));
    }
    Ok(result)
}

/// Every filter on the algebra; brute subset scan, guarded.
pub fn enumerate_filters(h: &HeytingAlgebra) -> Result<Vec<Filter>> {
    let n = h.size();
    if n > 20 {
        return Err(Error::SizeLimit {
            what: "filter enumeration",
            limit: 20,
            actual: n as u64,
        });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if filter_axiom_report(h, &set) == FilterAxiom::Ok {
            out.push(Filter {
                carrier: h.fingerprint(),
                members: set,
            });
        }
    }
    Ok(out)
}

pub fn enumerate_prime_filters(h: &HeytingAlgebra) -> Result<Vec<Filter>> {
    Ok(enumerate_filters(h)?
        .into_iter()
        .filter(|f| f.is_prime(h))
        .collect())
}

/// The prime-filter representation: primes ordered by inclusion form a
/// poset, and `eta(a) = {F prime : a in F}` embeds the algebra into the
/// open-set algebra of that poset, preserving bounds, meet, join and
/// implication. The embedding is verified before returning.
pub struct Representation {
    pub primes: Vec<Filter>,
    pub prime_poset: Poset,
    pub target: OpenAlgebra,
    pub eta: Vec<usize>,
    pub report: HomReport,
}

#[derive(Serialize)]
pub struct RepresentationDoc {
    pub primes: Vec<Vec<usize>>,
    pub order: Vec<(usize, usize)>,
    pub eta: Vec<usize>,
    pub embedding_verified: bool,
}

pub fn prime_representation(h: &HeytingAlgebra) -> Result<Representation> {
    if h.size() < 2 {
        return Err(Error::Argument(
            "the trivial algebra has no prime filters to represent with".into(),
        ));
    }
    // in a finite distributive lattice the primes are exactly the principal
    // filters of join-irreducible elements; enumeration tests cross-check
    // this against the exhaustive scan
    let mut primes: Vec<Filter> = Vec::new();
    for e in 0..h.size() {
        if h.lattice().is_join_irreducible(e) {
            primes.push(Filter::principal(h, e)?);
        }
    }
    let k = primes.len();
    let mut rel = Relation::new(k);
    for i in 0..k {
        for j in 0..k {
            let sub = primes[i]
                .members()
                .iter()
                .all(|&a| primes[j].contains(a));
            if sub {
                rel.set(i, j);
            }
        }
    }
    let prime_poset = Poset::from_relation(rel, None)?;
    let target = open_algebra(&prime_poset)?;
    let mut eta = Vec::with_capacity(h.size());
    for a in 0..h.size() {
        let image = prime_poset.upset((0..k).filter(|&i| primes[i].contains(a)))?;
        let idx = target.index_of(&image).ok_or_else(|| {
            Error::Verification("eta image is not an open of the prime spectrum".into())
        })?;
        eta.push(idx);
    }
    let report = verify_hom(h, &target.algebra, &eta, HomKind::Embedding);
    if !report.passed() {
        return Err(Error::Verification(format!(
            "prime-filter representation failed verification: {:?}",
            report.violations
        )));
    }
    Ok(Representation {
        primes,
        prime_poset,
        target,
        eta,
        report,
    })
}

impl Representation {
    pub fn doc(&self) -> RepresentationDoc {
        let k = self.primes.len();
        let mut order = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if self.prime_poset.le(i, j) {
                    order.push((i, j));
                }
            }
        }
        RepresentationDoc {
            primes: self.primes.iter().map(|f| f.members().to_vec()).collect(),
            order,
            eta: self.eta.clone(),
            embedding_verified: self.report.passed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;
    use crate::poset::{open_algebra, power_poset};

    fn chain(k: usize) -> HeytingAlgebra {
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                pairs.push((i, j));
            }
        }
        HeytingAlgebra::from_lattice(FiniteLattice::from_le_pairs(k, &pairs).unwrap()).unwrap()
    }

    fn fork_algebra() -> (Poset, OpenAlgebra) {
        let p = Poset::fork();
        let alg = open_algebra(&p).unwrap();
        (p, alg)
    }

    #[test]
    fn unit_filter_of_three_chain_is_prime() {
        let h = chain(3);
        assert!(is_prime_filter(&h, &[2]));
        assert!(is_prime_filter(&h, &[1, 2]));
        assert!(!is_prime_filter(&h, &[0, 1, 2]), "improper");
        assert_eq!(
            prime_filter_report(&h, &[0, 1, 2]),
            FilterAxiom::Improper
        );
    }

    #[test]
    fn join_of_tops_is_not_prime_in_fork_algebra() {
        let (p, alg) = fork_algebra();
        let h = &alg.algebra;
        let xy = alg.index_of(&p.upset([1, 2]).unwrap()).unwrap();
        let full = h.top();
        let report = prime_filter_report(h, &[xy, full]);
        assert!(matches!(report, FilterAxiom::NotPrime { .. }), "{report:?}");
    }

    #[test]
    fn generated_filter_cases() {
        let h = chain(3);
        let unit = generated_filter(&h, &[h.top()]).unwrap();
        assert_eq!(unit.members(), &[2]);

        let (p, alg) = fork_algebra();
        let h = &alg.algebra;
        let x = alg.index_of(&p.upset([1]).unwrap()).unwrap();
        let y = alg.index_of(&p.upset([2]).unwrap()).unwrap();
        let principal = generated_filter(h, &[x]).unwrap();
        let xy = alg.index_of(&p.upset([1, 2]).unwrap()).unwrap();
        assert_eq!(principal.members(), &[x, xy, h.top()]);

        let err = generated_filter(h, &[x, y]).unwrap_err();
        match err {
            Error::Fip { witness } => assert_eq!(witness, vec![x, y]),
            other => panic!("expected fip error, got {other}"),
        }
    }

    #[test]
    fn separating_prime_examples() {
        // three-chain: only candidate above the unit filter is {m, 1}
        let h = chain(3);
        let f = Filter::new(&h, [2]).unwrap();
        let g = separating_prime(&h, &f, 1, 0).unwrap();
        assert_eq!(g.members(), &[1, 2]);

        let h2 = chain(2);
        let f2 = Filter::new(&h2, [1]).unwrap();
        let g2 = separating_prime(&h2, &f2, 1, 0).unwrap();
        assert_eq!(g2.members(), &[1]);

        let (p, alg) = fork_algebra();
        let h = &alg.algebra;
        let x = alg.index_of(&p.upset([1]).unwrap()).unwrap();
        let f = Filter::new(h, [h.top()]).unwrap();
        let g = separating_prime(h, &f, x, h.bot()).unwrap();
        assert!(g.contains(x) && !g.contains(h.bot()) && g.is_prime(h));

        // precondition violation
        assert!(matches!(
            separating_prime(&h2, &f2, 0, 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn primes_are_principal_filters_of_join_irreducibles() {
        // exhaustive scan vs the production path, on a handful of algebras
        for h in [
            chain(2),
            chain(3),
            chain(4),
            fork_algebra().1.algebra,
            open_algebra(&power_poset(2, false).unwrap()).unwrap().algebra,
        ] {
            let scan = enumerate_prime_filters(&h).unwrap();
            let rep = prime_representation(&h).unwrap();
            let mut a: Vec<&[usize]> = scan.iter().map(|f| f.members()).collect();
            let mut b: Vec<&[usize]> = rep.primes.iter().map(|f| f.members()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn representation_of_three_chain_is_iso_onto_two_chain_opens() {
        let h = chain(3);
        let rep = prime_representation(&h).unwrap();
        assert_eq!(rep.primes.len(), 2);
        assert_eq!(rep.target.algebra.size(), 3);
        assert!(rep.report.passed());
        // injective and order-reflecting onto a three-chain: an isomorphism
        let mut images = rep.eta.clone();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), 3);
    }

    #[test]
    fn representation_of_fork_algebra_recovers_fork() {
        let (_, alg) = fork_algebra();
        let rep = prime_representation(&alg.algebra).unwrap();
        assert_eq!(rep.primes.len(), 3);
        // the prime spectrum is a fork again: one least prime, two maximal
        assert_eq!(rep.prime_poset.minimal_elements().len(), 1);
        assert_eq!(rep.prime_poset.maximal_elements().len(), 2);
        assert!(rep.report.passed());
    }

    #[test]
    fn representation_of_two_element_algebra() {
        let h = chain(2);
        let rep = prime_representation(&h).unwrap();
        assert_eq!(rep.primes.len(), 1);
        assert_eq!(rep.target.algebra.size(), 2);
        assert!(rep.report.passed());
        assert!(prime_representation(&chain(1)).is_err());
    }

    #[test]
    fn cross_algebra_use_is_a_typed_error() {
        let h2 = chain(2);
        let h3 = chain(3);
        let f = Filter::new(&h2, [1]).unwrap();
        assert!(matches!(
            f.check_carrier(&h3),
            Err(Error::CrossAlgebra)
        ));
    }
}
