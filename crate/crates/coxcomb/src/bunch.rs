//! F-bunches, relevant faces, Gale duality and ambient fans.
//!
//! An F-bunch is a collection of projected F-faces subject to three axioms:
//! pairwise overlapping interiors without containment, maximality among
//! projected F-faces, and the facet condition (every facet image generates
//! the grading lattice and envelops a member). Validated bunches drive all
//! downstream invariants.

use std::collections::BTreeMap;

use crate::cone::{face_order, Cone, FaceIndexSet};
use crate::fan::Fan;
use crate::matrix::Matrix;
use crate::ring::{Presentation, DEFAULT_FACE_SCAN_BOUND};
use crate::{Error, Result, Scalar};

/// A bunch cone as supplied by the user: an explicit generator list in the
/// grading lattice, or a witness face of the orthant.
#[derive(Clone, Debug)]
pub enum BunchConeInput<T> {
    Generators(Vec<Vec<T>>),
    Face(FaceIndexSet),
}

/// Options controlling the exponential face scans.
#[derive(Clone, Copy, Debug)]
pub struct BunchOptions {
    pub max_generators: usize,
    pub skip_maximality_check: bool,
}

impl Default for BunchOptions {
    fn default() -> Self {
        BunchOptions {
            max_generators: DEFAULT_FACE_SCAN_BOUND,
            skip_maximality_check: false,
        }
    }
}

/// A validated F-bunch: cones in the grading lattice, each with a witness
/// F-face projecting onto it.
#[derive(Clone, Debug)]
pub struct Bunch<T: Scalar> {
    cones: Vec<Cone<T>>,
    witnesses: Vec<FaceIndexSet>,
    warnings: Vec<String>,
}

impl<T: Scalar> Bunch<T> {
    pub fn cones(&self) -> &[Cone<T>] {
        &self.cones
    }

    pub fn witnesses(&self) -> &[FaceIndexSet] {
        &self.witnesses
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

/// All F-faces of the presentation together with their projected cones,
/// computed once and shared by the validation passes.
pub struct FaceScan<T: Scalar> {
    pub faces: Vec<FaceIndexSet>,
    pub cones: BTreeMap<FaceIndexSet, Cone<T>>,
}

pub fn scan_ffaces<T: Scalar>(
    presentation: &Presentation<T>,
    options: &BunchOptions,
) -> Result<FaceScan<T>> {
    let faces = presentation.enumerate_ffaces(options.max_generators)?;
    let mut cones = BTreeMap::new();
    for f in &faces {
        cones.insert(f.clone(), presentation.projected_cone(f));
    }
    Ok(FaceScan { faces, cones })
}

/// Validate a raw cone list as an F-bunch.
pub fn validate_bunch<T: Scalar>(
    presentation: &Presentation<T>,
    input: &[BunchConeInput<T>],
    options: &BunchOptions,
) -> Result<Bunch<T>> {
    let k = presentation.class_rank();
    let r = presentation.num_generators();
    if input.is_empty() {
        return Err(Error::PreconditionFailed("a bunch must be nonempty".into()));
    }
    let scan = scan_ffaces(presentation, options)?;

    // (a) every member is a projected F-face, witnessed by some F-face
    let mut cones = Vec::new();
    let mut witnesses = Vec::new();
    for (ci, raw) in input.iter().enumerate() {
        let (cone, witness) = match raw {
            BunchConeInput::Face(face) => {
                if face.indices().iter().any(|&i| i >= r) {
                    return Err(Error::Parse(format!(
                        "bunch cone {} references a generator index beyond {r}",
                        ci + 1
                    )));
                }
                if !presentation.is_fface(face)? {
                    return Err(Error::NotProjectedFFace(ci + 1));
                }
                (presentation.projected_cone(face), face.clone())
            }
            BunchConeInput::Generators(gens) => {
                let cone = Cone::from_rays(k, gens)?;
                let witness = scan
                    .faces
                    .iter()
                    .find(|f| scan.cones[f].eq_cone(&cone))
                    .cloned()
                    .ok_or(Error::NotProjectedFFace(ci + 1))?;
                (cone, witness)
            }
        };
        cones.push(cone);
        witnesses.push(witness);
    }

    // (b) pairwise: interiors meet, neither interior contains the other
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let meet = cones[i].interiors_meet(&cones[j])?;
            if !meet
                || cones[i].interior_contained_in(&cones[j])
                || cones[j].interior_contained_in(&cones[i])
            {
                return Err(Error::OverlapViolation(i + 1, j + 1));
            }
        }
    }

    // (d) facet condition: every facet image generates K and envelops a member
    for i in 0..r {
        let facet = FaceIndexSet::new((0..r).filter(|&j| j != i).collect());
        if !presentation
            .degrees()
            .select_columns(facet.indices())
            .is_surjective()
        {
            return Err(Error::FacetConditionFails(i + 1));
        }
        let image = presentation.projected_cone(&facet);
        if !cones.iter().any(|t| t.interior_contained_in(&image)) {
            return Err(Error::FacetConditionFails(i + 1));
        }
    }

    // (c) maximality: no further projected F-face satisfies the membership
    // criterion against every present member
    let mut warnings = Vec::new();
    if options.skip_maximality_check {
        warnings.push("maximality of the bunch was not checked".into());
    } else {
        let mut checked: Vec<&Cone<T>> = Vec::new();
        'candidates: for face in &scan.faces {
            let candidate = &scan.cones[face];
            if cones.iter().any(|c| c.eq_cone(candidate)) {
                continue;
            }
            if checked.iter().any(|c| c.eq_cone(candidate)) {
                continue;
            }
            checked.push(candidate);
            for member in &cones {
                let meet = candidate.interiors_meet(member)?;
                if !meet || candidate.interior_contained_in(member)
                    || member.interior_contained_in(candidate)
                {
                    continue 'candidates;
                }
            }
            return Err(Error::MaximalityViolation(face.clone()));
        }
    }

    Ok(Bunch {
        cones,
        witnesses,
        warnings,
    })
}

/// Relevant faces: F-faces whose projected cone's interior envelops the
/// interior of some bunch member.
pub fn relevant_faces<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
    options: &BunchOptions,
) -> Result<Vec<FaceIndexSet>> {
    let scan = scan_ffaces(presentation, options)?;
    let mut out = Vec::new();
    for face in &scan.faces {
        let image = &scan.cones[face];
        if bunch.cones.iter().any(|t| t.interior_contained_in(image)) {
            out.push(face.clone());
        }
    }
    out.sort_by(face_order);
    Ok(out)
}

/// Inclusion-minimal members of the relevant faces.
pub fn covering_collection(relevant: &[FaceIndexSet]) -> Vec<FaceIndexSet> {
    let mut out: Vec<FaceIndexSet> = relevant
        .iter()
        .filter(|f| {
            !relevant
                .iter()
                .any(|g| g != *f && g.is_subset_of(f))
        })
        .cloned()
        .collect();
    out.sort_by(face_order);
    out
}

/// Gale data: the map `P : F -> N` of the dual projected cone, stored as an
/// `n x r` matrix whose columns are the images of the dual basis vectors.
#[derive(Clone, Debug)]
pub struct GaleData<T: Scalar> {
    p: Matrix<T>,
}

impl<T: Scalar> GaleData<T> {
    pub fn p(&self) -> &Matrix<T> {
        &self.p
    }

    pub fn quotient_rank(&self) -> usize {
        self.p.rows()
    }

    /// Image `P(γ₀*)` of the costar of a face, as a cone in `N`.
    pub fn costar_image(&self, face: &FaceIndexSet, r: usize) -> Result<Cone<T>> {
        let costar = face.complement(r);
        let cols: Vec<Vec<T>> = costar.indices().iter().map(|&j| self.p.column(j)).collect();
        Cone::from_rays(self.quotient_rank(), &cols)
    }
}

/// Transpose of the saturated kernel basis of the degree matrix; the rows
/// span the relations among the degrees, making `0 -> K* -> E* -> N -> 0`
/// exact over the integers.
pub fn gale_setup<T: Scalar>(presentation: &Presentation<T>) -> GaleData<T> {
    let kernel = presentation.degrees().kernel_basis();
    let p = kernel.transpose();
    debug_assert!(presentation.degrees().mul(&kernel).is_zero());
    debug_assert!(p.is_surjective() || p.rows() == 0);
    GaleData { p }
}

/// The minimal ambient fan: inclusion-maximal images `P(γ₀*)` over the
/// covering collection, validated as a fan.
pub fn minimal_ambient_fan<T: Scalar>(
    presentation: &Presentation<T>,
    gale: &GaleData<T>,
    covering: &[FaceIndexSet],
) -> Result<Fan<T>> {
    let r = presentation.num_generators();
    let mut images: Vec<Cone<T>> = Vec::new();
    for face in covering {
        images.push(gale.costar_image(face, r)?);
    }
    let mut keep: Vec<Cone<T>> = Vec::new();
    for (i, c) in images.iter().enumerate() {
        let maximal = !images.iter().enumerate().any(|(j, d)| {
            j != i && d.contains_cone(c) && !(c.contains_cone(d) && j > i)
        });
        if maximal {
            keep.push(c.clone());
        }
    }
    Fan::verify(gale.quotient_rank(), keep)
}

/// Extend the bunch to a bunch over all projected faces, by the greedy
/// enlargement over faces in lexicographic witness order, finishing with the
/// minimal cones.
pub fn extend_to_bunch<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
    options: &BunchOptions,
) -> Result<Vec<Cone<T>>> {
    let r = presentation.num_generators();
    if r > options.max_generators || r >= u64::BITS as usize {
        return Err(Error::TooManyGenerators {
            got: r,
            bound: options.max_generators,
        });
    }
    let mut faces: Vec<FaceIndexSet> = (0u64..1 << r).map(|m| FaceIndexSet::from_mask(m, r)).collect();
    faces.sort();
    let mut theta: Vec<Cone<T>> = bunch.cones.to_vec();
    for face in &faces {
        let candidate = presentation.projected_cone(face);
        if theta.iter().any(|c| c.eq_cone(&candidate)) {
            continue;
        }
        let mut overlaps_all = true;
        for member in &theta {
            if !candidate.interiors_meet(member)? {
                overlaps_all = false;
                break;
            }
        }
        if overlaps_all {
            theta.push(candidate);
        }
    }
    // keep the minimal cones
    let mut minimal: Vec<Cone<T>> = Vec::new();
    for (i, c) in theta.iter().enumerate() {
        let is_minimal = !theta.iter().enumerate().any(|(j, d)| {
            j != i && c.contains_cone(d) && !(d.contains_cone(c) && j > i)
        });
        if is_minimal && !minimal.iter().any(|m| m.eq_cone(c)) {
            minimal.push(c.clone());
        }
    }
    minimal.sort_by_key(|c| c.sort_key());
    Ok(minimal)
}

/// Recover the bunch corresponding to a maximal projectable fan: lift each
/// maximal cone to a face of the dual orthant, project the complementary
/// face, and keep the inclusion-minimal images.
pub fn bunch_from_fan<T: Scalar>(
    presentation: &Presentation<T>,
    gale: &GaleData<T>,
    fan: &Fan<T>,
) -> Result<Vec<Cone<T>>> {
    let r = presentation.num_generators();
    let n = gale.quotient_rank();
    if fan.ambient_rank() != n {
        return Err(Error::RaysIncompatible);
    }
    let columns: Vec<Vec<T>> = (0..r).map(|j| gale.p().column(j)).collect();
    for ray in fan.rays() {
        if !columns.iter().any(|c| crate::matrix::primitive(c).ok().as_deref() == Some(&ray[..])) {
            return Err(Error::RaysIncompatible);
        }
    }
    let mut images: Vec<Cone<T>> = Vec::new();
    for sigma in fan.maximal_cones() {
        let lift = FaceIndexSet::new(
            (0..r)
                .filter(|&j| sigma.contains(&columns[j]))
                .collect(),
        );
        let lifted = gale.costar_image(&lift.complement(r), r)?;
        if !lifted.eq_cone(sigma) {
            return Err(Error::RaysIncompatible);
        }
        images.push(presentation.projected_cone(&lift.complement(r)));
    }
    let mut minimal: Vec<Cone<T>> = Vec::new();
    for (i, c) in images.iter().enumerate() {
        let is_minimal = !images.iter().enumerate().any(|(j, d)| {
            j != i && c.contains_cone(d) && !(d.contains_cone(c) && j > i)
        });
        if is_minimal && !minimal.iter().any(|m| m.eq_cone(c)) {
            minimal.push(c.clone());
        }
    }
    minimal.sort_by_key(|c| c.sort_key());
    Ok(minimal)
}

/// Replace the bunch by one whose associated variety is projective: build a
/// complete polytopal fan on the Gale images, lift its maximal cones, pick
/// out the F-faces among the corresponding orthant faces, and return the
/// minimal projected images.
pub fn projectivize<T: Scalar>(
    presentation: &Presentation<T>,
    options: &BunchOptions,
) -> Result<Bunch<T>> {
    let r = presentation.num_generators();
    let k = presentation.class_rank();
    let effective = presentation.projected_cone(&FaceIndexSet::full(r));
    if !effective.is_strictly_convex() {
        return Err(Error::PreconditionFailed(
            "the effective cone is not strictly convex".into(),
        ));
    }
    for i in 0..r {
        if presentation.degree_of(i).iter().all(|x| x.is_zero()) {
            return Err(Error::PreconditionFailed(format!(
                "generator {} has degree zero",
                i + 1
            )));
        }
    }
    let gale = gale_setup(presentation);
    let n = gale.quotient_rank();
    if n == 0 {
        // the trivial quotient: the zero cone is the whole bunch
        let bunch = Bunch {
            cones: vec![Cone::zero(k)],
            witnesses: vec![FaceIndexSet::empty()],
            warnings: Vec::new(),
        };
        return Ok(bunch);
    }
    let columns: Vec<Vec<T>> = (0..r).map(|j| gale.p().column(j)).collect();
    let fan = Fan::polytopal_with_rays(n, &columns).map_err(|e| match e {
        Error::DoNotSpanCone | Error::DoNotGenerateLattice => Error::PreconditionFailed(
            "the Gale images do not positively generate the quotient lattice".into(),
        ),
        other => other,
    })?;
    // the bunch of the polytopal fan, over all faces
    let theta = bunch_from_fan(presentation, &gale, &fan)?;
    // relevant F-faces of that bunch, then the minimal images
    let scan = scan_ffaces(presentation, options)?;
    let mut candidates: Vec<(FaceIndexSet, Cone<T>)> = Vec::new();
    for face in &scan.faces {
        let image = &scan.cones[face];
        if theta.iter().any(|t| t.interior_contained_in(image)) {
            candidates.push((face.clone(), image.clone()));
        }
    }
    let mut cones: Vec<Cone<T>> = Vec::new();
    let mut witnesses: Vec<FaceIndexSet> = Vec::new();
    for (i, (face, c)) in candidates.iter().enumerate() {
        let is_minimal = !candidates.iter().enumerate().any(|(j, (_, d))| {
            j != i && c.contains_cone(d) && !(d.contains_cone(c) && j > i)
        });
        if is_minimal && !cones.iter().any(|m| m.eq_cone(c)) {
            cones.push(c.clone());
            witnesses.push(face.clone());
        }
    }
    if cones.is_empty() {
        return Err(Error::PreconditionFailed(
            "no projected F-face survives the polytopal refinement".into(),
        ));
    }
    Ok(Bunch {
        cones,
        witnesses,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_rational::Ratio;

    fn rat(x: i64) -> Ratio<Int> {
        Ratio::from_integer(Int::from(x))
    }

    fn vi(data: &[i64]) -> Vec<Int> {
        data.iter().map(|&x| Int::from(x)).collect()
    }

    fn face(idx: &[usize]) -> FaceIndexSet {
        // 1-based for readability in tests
        FaceIndexSet::new(idx.iter().map(|i| i - 1).collect())
    }

    /// Torus quotient of the Plucker quadric: Z^3-graded six-generator ring.
    fn g24_quotient() -> Presentation<Int> {
        let degrees = Matrix::from_i64(
            3,
            6,
            &[
                1, 1, 0, 0, -1, -1, //
                0, 1, 1, -1, -1, 0, //
                1, 1, 1, 1, 1, 1,
            ],
        );
        let rel = crate::ring::Relation::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        Presentation::validate(degrees, vec![rel], None, None).unwrap()
    }

    fn g24_quotient_bunch_input() -> Vec<BunchConeInput<Int>> {
        [
            vec![1, 3, 5],
            vec![2, 4, 6],
            vec![1, 6, 2, 5],
            vec![1, 6, 3, 4],
            vec![2, 5, 3, 4],
        ]
        .iter()
        .map(|idx| BunchConeInput::Face(face(idx)))
        .collect()
    }

    #[test]
    fn g24_quotient_bunch_validates() {
        let p = g24_quotient();
        let bunch = validate_bunch(&p, &g24_quotient_bunch_input(), &BunchOptions::default());
        let bunch = bunch.unwrap();
        assert_eq!(bunch.len(), 5);
    }

    #[test]
    fn nested_bunch_cones_rejected() {
        // two cones with nested interiors violate the pairwise condition
        let degrees = Matrix::from_i64(2, 4, &[1, 0, 1, 2, 0, 1, 1, 1]);
        let p = Presentation::validate(degrees, vec![], None, None).unwrap();
        let input = vec![
            BunchConeInput::Generators(vec![vi(&[1, 0]), vi(&[0, 1])]),
            BunchConeInput::Generators(vec![vi(&[1, 0]), vi(&[1, 1])]),
        ];
        let err = validate_bunch(&p, &input, &BunchOptions::default());
        assert!(matches!(err, Err(Error::OverlapViolation(_, _))));
    }

    #[test]
    fn g24_quotient_relevant_and_covering() {
        let p = g24_quotient();
        let opts = BunchOptions::default();
        let bunch = validate_bunch(&p, &g24_quotient_bunch_input(), &opts).unwrap();
        let rlv = relevant_faces(&p, &bunch, &opts).unwrap();
        let mut expected: Vec<FaceIndexSet> = vec![
            face(&[1, 3, 5]),
            face(&[2, 4, 6]),
            face(&[1, 6, 2, 5]),
            face(&[1, 6, 3, 4]),
            face(&[2, 5, 3, 4]),
            FaceIndexSet::full(6),
        ];
        for i in 0..6usize {
            expected.push(FaceIndexSet::new((0..6).filter(|&j| j != i).collect()));
        }
        expected.sort_by(face_order);
        assert_eq!(rlv, expected);

        let cov = covering_collection(&rlv);
        let mut expected_cov = vec![
            face(&[1, 3, 5]),
            face(&[2, 4, 6]),
            face(&[1, 6, 2, 5]),
            face(&[1, 6, 3, 4]),
            face(&[2, 5, 3, 4]),
        ];
        expected_cov.sort_by(face_order);
        assert_eq!(cov, expected_cov);
    }

    #[test]
    fn rank1_bunch_and_relevant_faces() {
        // plain Plucker quadric, all degrees one, bunch = {Q>=0}
        let degrees = Matrix::from_i64(1, 6, &[1, 1, 1, 1, 1, 1]);
        let rel = crate::ring::Relation::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        let p = Presentation::validate(degrees, vec![rel], None, None).unwrap();
        let opts = BunchOptions::default();
        let input = vec![BunchConeInput::Generators(vec![vi(&[1])])];
        let bunch = validate_bunch(&p, &input, &opts).unwrap();
        let rlv = relevant_faces(&p, &bunch, &opts).unwrap();
        // all F-faces except the empty one
        assert_eq!(rlv.len(), 36);
        assert!(!rlv.contains(&FaceIndexSet::empty()));
        // covering collection: the six rays
        let cov = covering_collection(&rlv);
        assert_eq!(
            cov,
            (0..6).map(|i| FaceIndexSet::new(vec![i])).collect::<Vec<_>>()
        );
    }

    #[test]
    fn gale_setup_examples() {
        // Q = [1 1 1]: kernel rank 2, P annihilated by Q
        let degrees: Matrix<Int> = Matrix::from_i64(1, 3, &[1, 1, 1]);
        let p = Presentation::validate(degrees.clone(), vec![], None, None).unwrap();
        let gale = gale_setup(&p);
        assert_eq!(gale.quotient_rank(), 2);
        assert!(degrees.mul(&gale.p().transpose()).is_zero());

        // Q = identity: trivial quotient
        let degrees: Matrix<Int> = Matrix::from_i64(2, 2, &[1, 0, 0, 1]);
        let p = Presentation::validate(degrees, vec![], None, None).unwrap();
        assert_eq!(gale_setup(&p).quotient_rank(), 0);
    }

    #[test]
    fn costar_is_complement() {
        let f = face(&[1, 3]);
        assert_eq!(f.complement(4), face(&[2, 4]));
        assert_eq!(FaceIndexSet::empty().complement(3), FaceIndexSet::full(3));
        assert_eq!(FaceIndexSet::full(3).complement(3), FaceIndexSet::empty());
    }

    #[test]
    fn plain_g24_ambient_fan_is_p5() {
        let degrees = Matrix::from_i64(1, 6, &[1, 1, 1, 1, 1, 1]);
        let rel = crate::ring::Relation::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        let p = Presentation::validate(degrees, vec![rel], None, None).unwrap();
        let opts = BunchOptions::default();
        let input = vec![BunchConeInput::Generators(vec![vi(&[1])])];
        let bunch = validate_bunch(&p, &input, &opts).unwrap();
        let rlv = relevant_faces(&p, &bunch, &opts).unwrap();
        let cov = covering_collection(&rlv);
        let gale = gale_setup(&p);
        let fan = minimal_ambient_fan(&p, &gale, &cov).unwrap();
        // the fan of a five-dimensional projective space: six maximal cones
        assert_eq!(fan.ambient_rank(), 5);
        assert_eq!(fan.maximal_cones().len(), 6);
        assert!(fan.is_complete());
        assert_eq!(fan.rays().len(), 6);
    }

    #[test]
    fn extend_to_bunch_fixed_point() {
        // polynomial ring, rank 1: {Q>=0} is already a bunch over all faces
        let degrees: Matrix<Int> = Matrix::from_i64(1, 3, &[1, 1, 1]);
        let p = Presentation::validate(degrees, vec![], None, None).unwrap();
        let opts = BunchOptions::default();
        let input = vec![BunchConeInput::Generators(vec![vi(&[1])])];
        let bunch = validate_bunch(&p, &input, &opts).unwrap();
        let theta = extend_to_bunch(&p, &bunch, &opts).unwrap();
        assert_eq!(theta.len(), 1);
        assert!(theta[0].eq_cone(&bunch.cones()[0]));
    }

    #[test]
    fn bunch_fan_roundtrip_p2() {
        let degrees = Matrix::from_i64(1, 3, &[1, 1, 1]);
        let p = Presentation::validate(degrees, vec![], None, None).unwrap();
        let opts = BunchOptions::default();
        let input = vec![BunchConeInput::Generators(vec![vi(&[1])])];
        let bunch = validate_bunch(&p, &input, &opts).unwrap();
        let gale = gale_setup(&p);
        let rlv = relevant_faces(&p, &bunch, &opts).unwrap();
        let cov = covering_collection(&rlv);
        let fan = minimal_ambient_fan(&p, &gale, &cov).unwrap();
        let theta = bunch_from_fan(&p, &gale, &fan).unwrap();
        assert_eq!(theta.len(), 1);
        assert!(theta[0].eq_cone(&bunch.cones()[0]));
    }

    #[test]
    fn projectivize_plain_g24_is_identity() {
        let degrees = Matrix::from_i64(1, 6, &[1, 1, 1, 1, 1, 1]);
        let rel = crate::ring::Relation::new(vec![
            (rat(1), vec![1, 0, 0, 0, 0, 1]),
            (rat(-1), vec![0, 1, 0, 0, 1, 0]),
            (rat(1), vec![0, 0, 1, 1, 0, 0]),
        ]);
        let p = Presentation::validate(degrees, vec![rel], None, None).unwrap();
        let bunch = projectivize(&p, &BunchOptions::default()).unwrap();
        assert_eq!(bunch.len(), 1);
        assert!(bunch.cones()[0].eq_cone(&Cone::from_rays(1, &[vi(&[1])]).unwrap()));
    }

    #[test]
    fn projectivize_rejects_zero_degree() {
        let degrees: Matrix<Int> = Matrix::from_i64(1, 3, &[1, 1, 0]);
        let p = Presentation::validate(degrees, vec![], None, None).unwrap();
        assert!(matches!(
            projectivize(&p, &BunchOptions::default()),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
