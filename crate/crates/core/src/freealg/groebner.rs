use super::overlap::{overlaps, SElement};
use super::poly::FreePoly;
use super::relations::RelationSet;
use crate::error::{Error, Result};

/// A composition whose normal form does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerWitness {
    /// Positions of the two relations in the (sorted) relation set.
    pub left: usize,
    pub right: usize,
    pub s_element: SElement,
    pub remainder: FreePoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerCertificate {
    pub holds: bool,
    pub pairs_checked: usize,
    pub compositions_checked: usize,
    pub witness: Option<GroebnerWitness>,
}

/// Checks every composition of every ordered pair of relations (self-pairs
/// included) for reduction to zero. Stops at the first failure.
pub fn is_groebner(rels: &RelationSet) -> Result<GroebnerCertificate> {
    let order = rels.order();
    let polys = rels.polys();
    let mut compositions_checked = 0;
    let mut pairs_checked = 0;
    for (i, g) in polys.iter().enumerate() {
        for (j, h) in polys.iter().enumerate() {
            pairs_checked += 1;
            for s in overlaps(g, h, order)? {
                compositions_checked += 1;
                let remainder = rels.normal_form(&s.poly)?;
                if !remainder.is_zero() {
                    return Ok(GroebnerCertificate {
                        holds: false,
                        pairs_checked,
                        compositions_checked,
                        witness: Some(GroebnerWitness { left: i, right: j, s_element: s, remainder }),
                    });
                }
            }
        }
    }
    Ok(GroebnerCertificate { holds: true, pairs_checked, compositions_checked, witness: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    /// The result is a Gröbner basis.
    Complete,
    /// Every composition of degree at most the bound reduces to zero, but
    /// `unresolved` compositions of higher degree still do not.
    UpToBound { unresolved: usize },
}

#[derive(Debug, Clone)]
pub struct Completion {
    pub relations: RelationSet,
    pub status: CompletionStatus,
    /// Number of relations added during completion.
    pub added: usize,
}

/// Bounded completion: adds nonzero normal forms of compositions whose
/// weighted degree is at most `degree_bound` until none are left. A complete
/// result is inter-reduced.
pub fn complete(rels: &RelationSet, degree_bound: u64) -> Result<Completion> {
    let order = rels.order().clone();
    if degree_bound < rels.max_degree() {
        return Err(Error::input(format!(
            "degree bound {degree_bound} is below the maximal relation degree {}",
            rels.max_degree()
        )));
    }
    let mut basis = rels.polys();
    let mut current = rels.clone();
    let mut pending: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (0..basis.len()).map(move |j| (i, j))).collect();
    let mut added = 0;
    while let Some((i, j)) = pending.pop() {
        for s in overlaps(&basis[i], &basis[j], &order)? {
            let r = current.normal_form(&s.poly)?;
            if r.is_zero() || r.degree(&order).unwrap_or(0) > degree_bound {
                continue;
            }
            let k = basis.len();
            basis.push(r.monic(&order)?);
            current = RelationSet::new(&basis, &order)?;
            added += 1;
            for m in 0..=k {
                pending.push((k, m));
                if m != k {
                    pending.push((m, k));
                }
            }
        }
    }

    let cert = is_groebner(&current)?;
    if !cert.holds {
        let mut unresolved = 0;
        for g in &basis {
            for h in &basis {
                for s in overlaps(g, h, &order)? {
                    if !current.normal_form(&s.poly)?.is_zero() {
                        unresolved += 1;
                    }
                }
            }
        }
        return Ok(Completion { relations: current, status: CompletionStatus::UpToBound { unresolved }, added });
    }
    Ok(Completion { relations: inter_reduce(&current)?, status: CompletionStatus::Complete, added })
}

/// Drops relations whose leading word contains another leading word and
/// reduces the tails. Only meaningful for a Gröbner basis.
pub fn inter_reduce(rels: &RelationSet) -> Result<RelationSet> {
    let order = rels.order();
    let all = rels.relations();
    let mut kept: Vec<FreePoly> = Vec::new();
    for (i, r) in all.iter().enumerate() {
        let redundant = all.iter().enumerate().any(|(j, other)| {
            j != i
                && r.leading_word().contains(other.leading_word())
                && (other.leading_word() != r.leading_word() || j < i)
        });
        if !redundant {
            kept.push(r.poly().clone());
        }
    }
    let mut reduced = Vec::with_capacity(kept.len());
    for (i, p) in kept.iter().enumerate() {
        let others: Vec<FreePoly> = kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
        let lm = p.leading_word(order).cloned().expect("nonzero");
        let tail = p - &FreePoly::word(lm.clone());
        let tail_nf = if others.is_empty() { tail } else { RelationSet::new(&others, order)?.normal_form(&tail)? };
        reduced.push(&FreePoly::word(lm) + &tail_nf);
    }
    RelationSet::new(&reduced, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word::{WeightedOrder, Word};
    use crate::scalar::Scalar;

    fn w(l: &[usize]) -> Word {
        Word::from_letters(l)
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn ord3() -> WeightedOrder {
        WeightedOrder::new(&["X1", "X2", "X3"], &[1, 1, 1], &[1, 0, 2]).unwrap()
    }

    fn sl2_polys(gamma31: i64) -> Vec<FreePoly> {
        vec![
            FreePoly::from_terms([(w(&[2, 0]), s(1)), (w(&[0, 2]), s(-1)), (w(&[2]), s(gamma31))]),
            FreePoly::from_terms([(w(&[0, 1]), s(1)), (w(&[1, 0]), s(-1)), (w(&[1]), s(2))]),
            FreePoly::from_terms([(w(&[2, 1]), s(1)), (w(&[1, 2]), s(-1)), (w(&[0]), s(-1))]),
        ]
    }

    #[test]
    fn sl2_is_groebner() {
        let rels = RelationSet::new(&sl2_polys(2), &ord3()).unwrap();
        let cert = is_groebner(&rels).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.compositions_checked, 1);
    }

    #[test]
    fn commutator_alone_is_groebner() {
        let c = FreePoly::from_terms([(w(&[0, 1]), s(1)), (w(&[1, 0]), s(-1))]);
        let cert = is_groebner(&RelationSet::new(&[c], &ord3()).unwrap()).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.compositions_checked, 0);
    }

    #[test]
    fn perturbed_gamma_fails_with_witness() {
        let rels = RelationSet::new(&sl2_polys(3), &ord3()).unwrap();
        let cert = is_groebner(&rels).unwrap();
        assert!(!cert.holds);
        let wit = cert.witness.unwrap();
        assert_eq!(wit.s_element.ambiguity, w(&[2, 0, 1]));
        assert!(!wit.remainder.is_zero());
    }

    #[test]
    fn completion_leaves_basis_unchanged() {
        let rels = RelationSet::new(&sl2_polys(2), &ord3()).unwrap();
        let done = complete(&rels, 4).unwrap();
        assert_eq!(done.status, CompletionStatus::Complete);
        assert_eq!(done.relations, rels);
        assert_eq!(done.added, 0);
    }

    #[test]
    fn completion_bound_below_degree_rejected() {
        let rels = RelationSet::new(&sl2_polys(2), &ord3()).unwrap();
        assert!(complete(&rels, 1).is_err());
    }

    #[test]
    fn incomplete_pair_grows() {
        let ord = WeightedOrder::new(&["X1", "X2"], &[1, 1], &[0, 1]).unwrap();
        let p = vec![
            FreePoly::from_terms([(w(&[1, 0, 0]), s(1)), (w(&[0]), s(-1))]),
            FreePoly::from_terms([(w(&[0, 0, 1]), s(1)), (w(&[1]), s(-1))]),
        ];
        let rels = RelationSet::new(&p, &ord).unwrap();
        assert!(!is_groebner(&rels).unwrap().holds);
        let done = complete(&rels, 6).unwrap();
        assert!(done.added > 0);
        if done.status == CompletionStatus::Complete {
            assert!(is_groebner(&done.relations).unwrap().holds);
        }
    }
}
