//! Graded ring presentations and their F-faces.
//!
//! A presentation records the degree matrix `Q : Z^r -> Z^k` of the
//! generators together with the homogeneous relations. The F-faces of the
//! positive orthant are decided by the term-count test for hypersurface
//! rings; presentations with several relations must supply an explicit
//! F-face table computed externally.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::cone::{face_order, Cone, FaceIndexSet};
use crate::matrix::Matrix;
use crate::{Error, Result, Scalar};

/// Default bound on the number of generators for the `2^r` face scans.
pub const DEFAULT_FACE_SCAN_BOUND: usize = 24;

/// One homogeneous relation, as a list of terms with nonzero rational
/// coefficients and distinct exponent vectors of length `r`.
#[derive(Clone, Debug)]
pub struct Relation<T: Scalar> {
    terms: Vec<(Ratio<T>, Vec<u64>)>,
}

impl<T: Scalar> Relation<T> {
    pub fn new(terms: Vec<(Ratio<T>, Vec<u64>)>) -> Self {
        Relation { terms }
    }

    pub fn terms(&self) -> &[(Ratio<T>, Vec<u64>)] {
        &self.terms
    }

    /// Indices of the generators appearing in a term.
    pub fn term_support(exponents: &[u64]) -> FaceIndexSet {
        FaceIndexSet::new(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// Number of terms whose support lies inside the given face.
    pub fn term_count_inside(&self, face: &FaceIndexSet) -> usize {
        self.terms
            .iter()
            .filter(|(_, e)| Relation::<T>::term_support(e).is_subset_of(face))
            .count()
    }
}

/// A validated bunched-ring presentation: degrees, relations and flags.
#[derive(Clone, Debug)]
pub struct Presentation<T: Scalar> {
    degrees: Matrix<T>,
    relations: Vec<Relation<T>>,
    xhat_smooth: Option<bool>,
    fface_table: Option<BTreeSet<FaceIndexSet>>,
    warnings: Vec<String>,
}

impl<T: Scalar> Presentation<T> {
    /// Validate raw data: the degrees must generate the grading lattice and
    /// every relation must be homogeneous with at least two distinct terms.
    pub fn validate(
        degrees: Matrix<T>,
        relations: Vec<Relation<T>>,
        xhat_smooth: Option<bool>,
        fface_table: Option<Vec<FaceIndexSet>>,
    ) -> Result<Self> {
        let k = degrees.rows();
        let r = degrees.cols();
        if r < k {
            return Err(Error::TooFewGenerators { need: k, got: r });
        }
        if !degrees.is_surjective() {
            return Err(Error::DegreesDontGenerate);
        }
        let mut warnings = Vec::new();
        for (ri, rel) in relations.iter().enumerate() {
            if rel.terms.len() < 2 {
                return Err(Error::InvalidRelation {
                    relation: ri + 1,
                    reason: "a relation needs at least two terms".into(),
                });
            }
            let mut seen = BTreeSet::new();
            for (coeff, exps) in &rel.terms {
                if exps.len() != r {
                    return Err(Error::InvalidRelation {
                        relation: ri + 1,
                        reason: format!("exponent vector of length {} instead of {r}", exps.len()),
                    });
                }
                if coeff.numer().is_zero() {
                    return Err(Error::InvalidRelation {
                        relation: ri + 1,
                        reason: "zero coefficient".into(),
                    });
                }
                if !seen.insert(exps.clone()) {
                    return Err(Error::InvalidRelation {
                        relation: ri + 1,
                        reason: "duplicate exponent vector".into(),
                    });
                }
            }
            let deg0 = term_degree(&degrees, &rel.terms[0].1);
            for (ti, (_, exps)) in rel.terms.iter().enumerate().skip(1) {
                if term_degree(&degrees, exps) != deg0 {
                    return Err(Error::RelationNotHomogeneous {
                        relation: ri + 1,
                        term_a: 1,
                        term_b: ti + 1,
                    });
                }
            }
            // all terms sharing a variable means the relation is divisible
            // by a generator, contradicting primality of the generators
            let common = (0..r).find(|&i| rel.terms.iter().all(|(_, e)| e[i] > 0));
            if let Some(i) = common {
                warnings.push(format!(
                    "relation {} is divisible by generator {}; the presentation is degenerate",
                    ri + 1,
                    i + 1
                ));
            }
        }
        if relations.len() > r {
            return Err(Error::NegativeDimension);
        }
        Ok(Presentation {
            degrees,
            relations,
            xhat_smooth,
            fface_table: fface_table.map(|t| t.into_iter().collect()),
            warnings,
        })
    }

    pub fn degrees(&self) -> &Matrix<T> {
        &self.degrees
    }

    pub fn relations(&self) -> &[Relation<T>] {
        &self.relations
    }

    /// Number of generators `r`.
    pub fn num_generators(&self) -> usize {
        self.degrees.cols()
    }

    /// Rank `k` of the grading lattice.
    pub fn class_rank(&self) -> usize {
        self.degrees.rows()
    }

    pub fn num_relations(&self) -> usize {
        self.relations.len()
    }

    /// Krull dimension of the ring under the complete intersection
    /// convention: `r - d`.
    pub fn ring_dimension(&self) -> usize {
        self.num_generators() - self.num_relations()
    }

    pub fn degree_of(&self, generator: usize) -> Vec<T> {
        self.degrees.column(generator)
    }

    pub fn relation_degree(&self, relation: usize) -> Vec<T> {
        term_degree(&self.degrees, &self.relations[relation].terms[0].1)
    }

    pub fn xhat_smooth(&self) -> Option<bool> {
        self.xhat_smooth
    }

    pub fn set_xhat_smooth(&mut self, value: Option<bool>) {
        self.xhat_smooth = value;
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The projected cone `Q(γ₀)` of a face of the positive orthant.
    pub fn projected_cone(&self, face: &FaceIndexSet) -> Cone<T> {
        let cols: Vec<Vec<T>> = face
            .indices()
            .iter()
            .map(|&i| self.degrees.column(i))
            .collect();
        Cone::from_rays(self.class_rank(), &cols).expect("projected cone of integral degrees")
    }

    /// Image lattice `Q(lin(γ₀) ∩ E)` of a face.
    pub fn face_lattice(&self, face: &FaceIndexSet) -> crate::matrix::Sublattice<T> {
        crate::matrix::Sublattice::from_generators(&self.degrees.select_columns(face.indices()))
    }

    /// F-face test. Polynomial rings have only F-faces; for one relation the
    /// test counts the terms supported inside the face; several relations
    /// require the explicit table.
    pub fn is_fface(&self, face: &FaceIndexSet) -> Result<bool> {
        match self.relations.len() {
            0 => Ok(true),
            1 => Ok(self.relations[0].term_count_inside(face) != 1),
            n => match &self.fface_table {
                Some(table) => Ok(table.contains(face)),
                None => Err(Error::OracleRequired { relations: n }),
            },
        }
    }

    /// All F-faces among the `2^r` faces of the orthant, ordered by size
    /// then lexicographically.
    pub fn enumerate_ffaces(&self, bound: usize) -> Result<Vec<FaceIndexSet>> {
        let r = self.num_generators();
        if r > bound || r >= u64::BITS as usize {
            return Err(Error::TooManyGenerators { got: r, bound });
        }
        let mut out = Vec::new();
        for mask in 0u64..1 << r {
            let face = FaceIndexSet::from_mask(mask, r);
            if self.is_fface(&face)? {
                out.push(face);
            }
        }
        out.sort_by(face_order);
        Ok(out)
    }
}

pub(crate) fn term_degree<T: Scalar>(degrees: &Matrix<T>, exponents: &[u64]) -> Vec<T> {
    let v: Vec<T> = exponents
        .iter()
        .map(|e| T::from_u64(*e).expect("exponent fits the scalar"))
        .collect();
    degrees.mul_vec(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    type P = Presentation<Int>;
    type R = Relation<Int>;

    fn rat(x: i64) -> Ratio<Int> {
        Ratio::from_integer(Int::from(x))
    }

    /// Plucker-style quadric in six variables, all degrees one.
    fn plain_g24() -> P {
        let degrees = Matrix::from_i64(1, 6, &[1, 1, 1, 1, 1, 1]);
        let rel = R::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        P::validate(degrees, vec![rel], None, None).unwrap()
    }

    #[test]
    fn plain_g24_validates() {
        let p = plain_g24();
        assert_eq!(p.num_generators(), 6);
        assert_eq!(p.class_rank(), 1);
        assert_eq!(p.ring_dimension(), 5);
        assert_eq!(p.relation_degree(0), vec![Int::from(2)]);
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let degrees = Matrix::from_i64(1, 6, &[1, 1, 1, 1, 1, 2]);
        let rel = R::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        assert!(matches!(
            P::validate(degrees, vec![rel], None, None),
            Err(Error::RelationNotHomogeneous { .. })
        ));
    }

    #[test]
    fn polynomial_ring_validates() {
        let degrees = Matrix::from_i64(2, 4, &[1, 0, 1, 2, 0, 1, 1, 1]);
        let p = P::validate(degrees, vec![], None, None).unwrap();
        assert_eq!(p.ring_dimension(), 4);
    }

    #[test]
    fn degrees_must_generate() {
        let degrees = Matrix::from_i64(1, 3, &[2, 4, 6]);
        assert!(matches!(
            P::validate(degrees, vec![], None, None),
            Err(Error::DegreesDontGenerate)
        ));
    }

    #[test]
    fn fface_term_counts() {
        let p = plain_g24();
        // only the first term survives on {1,6}: not an F-face
        assert!(!p.is_fface(&FaceIndexSet::new(vec![0, 5])).unwrap());
        // no term inside {1,2}
        assert!(p.is_fface(&FaceIndexSet::new(vec![0, 1])).unwrap());
        // all three terms inside the full face
        assert!(p.is_fface(&FaceIndexSet::full(6)).unwrap());
    }

    #[test]
    fn fface_enumeration_counts() {
        let degrees = Matrix::from_i64(1, 3, &[1, 1, 1]);
        let p = P::validate(degrees, vec![], None, None).unwrap();
        assert_eq!(p.enumerate_ffaces(24).unwrap().len(), 8);

        let p = plain_g24();
        let faces = p.enumerate_ffaces(24).unwrap();
        assert_eq!(faces.len(), 37);
        assert!(!faces.contains(&FaceIndexSet::new(vec![0, 5])));
        assert!(!faces.contains(&FaceIndexSet::new(vec![0, 1, 5])));
        assert!(faces.contains(&FaceIndexSet::empty()));

        // T1^2 + T2^2: only the empty face and the full face survive
        let degrees = Matrix::from_i64(1, 2, &[1, 1]);
        let rel = R::new(vec![(rat(1), vec![2, 0]), (rat(1), vec![0, 2])]);
        let p = P::validate(degrees, vec![rel], None, None).unwrap();
        let faces = p.enumerate_ffaces(24).unwrap();
        assert_eq!(faces, vec![FaceIndexSet::empty(), FaceIndexSet::full(2)]);
    }

    #[test]
    fn multi_relation_requires_table() {
        let degrees = Matrix::from_i64(1, 4, &[1, 1, 1, 1]);
        let rel1 = R::new(vec![(rat(1), vec![2, 0, 0, 0]), (rat(1), vec![0, 2, 0, 0])]);
        let rel2 = R::new(vec![(rat(1), vec![0, 0, 2, 0]), (rat(1), vec![0, 0, 0, 2])]);
        let p = P::validate(
            degrees.clone(),
            vec![rel1.clone(), rel2.clone()],
            None,
            None,
        )
        .unwrap();
        assert!(matches!(
            p.is_fface(&FaceIndexSet::empty()),
            Err(Error::OracleRequired { .. })
        ));
        let table = vec![FaceIndexSet::empty(), FaceIndexSet::full(4)];
        let p = P::validate(degrees, vec![rel1, rel2], None, Some(table)).unwrap();
        assert!(p.is_fface(&FaceIndexSet::empty()).unwrap());
        assert!(!p.is_fface(&FaceIndexSet::new(vec![0])).unwrap());
    }
}
