use crate::error::{Error, Result};
use crate::freealg::{is_groebner, normal_word_counts, FreePoly, GroebnerCertificate, RelationSet};
use crate::gdu::{pbw_count_up_to, GduAlgebra};

/// Presentation `K<X>/(LH(g) : g ∈ 𝒢)` of the associated graded algebra.
#[derive(Debug, Clone)]
pub struct AssocGraded {
    named: Vec<(&'static str, FreePoly)>,
    relations: RelationSet,
    certificate: GroebnerCertificate,
    x2_weight: u64,
}

/// One row of the comparison `dim G(A)_q = dim F_q A − dim F_{q−1} A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderRow {
    pub degree: u64,
    pub graded_dim: u64,
    pub filtered_diff: u64,
}

/// Leading homogeneous components of a relation set, under its own order.
pub fn leading_homogeneous_set(rels: &RelationSet) -> Result<RelationSet> {
    let order = rels.order();
    let lh: Vec<FreePoly> = rels.polys().iter().map(|p| p.leading_homogeneous(order)).collect::<Result<_>>()?;
    RelationSet::new(&lh, order)
}

pub(crate) fn require_nonconstant_f(alg: &GduAlgebra) -> Result<()> {
    if alg.degree_f() == 0 {
        return Err(Error::precondition("graded constructions need deg f ≥ 1"));
    }
    Ok(())
}

pub fn assoc_graded(alg: &GduAlgebra) -> Result<AssocGraded> {
    require_nonconstant_f(alg)?;
    let order = alg.order();
    let named = alg
        .named_relations()
        .iter()
        .map(|(name, p)| Ok((*name, p.leading_homogeneous(order)?)))
        .collect::<Result<Vec<_>>>()?;
    let polys: Vec<FreePoly> = named.iter().map(|(_, p)| p.clone()).collect();
    let relations = RelationSet::new(&polys, order)?;
    let certificate = is_groebner(&relations)?;
    if let Some(w) = &certificate.witness {
        return Err(Error::Internal(format!(
            "LH(𝒢) is not a Gröbner basis: composition at {} leaves {}",
            order.format_word(&w.s_element.ambiguity),
            w.remainder.display(order)
        )));
    }
    Ok(AssocGraded { named, relations, certificate, x2_weight: alg.x2_weight() })
}

impl AssocGraded {
    /// `[("g31", LH(g31)), ("g12", …), ("g32", …)]`.
    pub fn named(&self) -> &[(&'static str, FreePoly)] {
        &self.named
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn certificate(&self) -> &GroebnerCertificate {
        &self.certificate
    }

    pub fn is_homogeneous(&self) -> bool {
        self.named.iter().all(|(_, p)| p.is_homogeneous(self.relations.order()))
    }

    /// Normal-word counts of `G(A)` against differences of PBW filtration
    /// dimensions, for degrees `0..=max_degree`.
    pub fn dimension_ladder(&self, max_degree: u64) -> Vec<LadderRow> {
        let counts = normal_word_counts(&self.relations, max_degree);
        counts
            .iter()
            .enumerate()
            .map(|(q, &graded_dim)| {
                let q = q as u64;
                let below = if q == 0 { 0 } else { pbw_count_up_to(self.x2_weight, q - 1) };
                LadderRow { degree: q, graded_dim, filtered_diff: pbw_count_up_to(self.x2_weight, q) - below }
            })
            .collect()
    }
}
