//! Divisor-theoretic invariants of the variety attached to a bunched ring:
//! dimension, Picard group, divisor cones, stratum singularity types,
//! canonical class, Gorenstein/Fano status, and the intrinsic quadric
//! constructions.

use num_rational::Ratio;

use crate::bunch::{
    covering_collection, gale_setup, minimal_ambient_fan, relevant_faces, validate_bunch, Bunch,
    BunchConeInput, BunchOptions, GaleData,
};
use crate::cone::{Cone, FaceIndexSet};
use crate::fan::Fan;
use crate::matrix::{dot, LatticeIndex, Matrix, Sublattice};
use crate::ring::{Presentation, Relation};
use crate::{Error, Result, Scalar};

/// Dimension of the associated variety: `dim(R) - rank(K) = r - d - k`.
pub fn dimension<T: Scalar>(presentation: &Presentation<T>) -> Result<usize> {
    let rd = presentation.ring_dimension();
    let k = presentation.class_rank();
    if rd < k {
        return Err(Error::NegativeDimension);
    }
    Ok(rd - k)
}

/// `O(X) = K` test: the effective cone is strictly convex and no generator
/// has degree zero.
pub fn has_only_constants<T: Scalar>(presentation: &Presentation<T>) -> bool {
    let r = presentation.num_generators();
    let effective = presentation.projected_cone(&FaceIndexSet::full(r));
    effective.is_strictly_convex()
        && (0..r).all(|i| presentation.degree_of(i).iter().any(|x| !x.is_zero()))
}

/// Picard group: the intersection of the face image lattices over the
/// covering collection, with its index in the divisor class lattice.
pub fn picard_group<T: Scalar>(
    presentation: &Presentation<T>,
    covering: &[FaceIndexSet],
) -> Result<(Sublattice<T>, LatticeIndex<T>)> {
    let k = presentation.class_rank();
    let mut pic = Sublattice::full(k);
    for face in covering {
        pic = pic.intersect(&presentation.face_lattice(face))?;
    }
    let index = pic.index_in(&Sublattice::full(k))?;
    Ok((pic, index))
}

/// The cones of divisor classes.
#[derive(Clone, Debug)]
pub struct ConeProfile<T: Scalar> {
    pub effective: Cone<T>,
    pub moving: Cone<T>,
    pub semiample: Cone<T>,
    /// Whether the ample cone (the intersection of the member interiors) is
    /// nonempty; when it is, it equals the relative interior of `semiample`.
    pub ample_nonempty: bool,
    /// Mori cone, in coordinates dual to the columns of `picard_span_basis`.
    pub mori: Cone<T>,
    /// Basis of the saturation of the Picard sublattice; the Mori cone lives
    /// in the dual of the rational span of the Picard group.
    pub picard_span_basis: Matrix<T>,
}

/// Effective, moving, semiample and Mori cones.
pub fn divisor_cones<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
    picard: &Sublattice<T>,
) -> Result<ConeProfile<T>> {
    let r = presentation.num_generators();
    let k = presentation.class_rank();
    let effective = presentation.projected_cone(&FaceIndexSet::full(r));
    let mut moving: Option<Cone<T>> = None;
    for i in 0..r {
        let facet = FaceIndexSet::new((0..r).filter(|&j| j != i).collect());
        let image = presentation.projected_cone(&facet);
        moving = Some(match moving {
            None => image,
            Some(acc) => acc.intersect(&image)?,
        });
    }
    let moving = moving.unwrap_or_else(|| Cone::zero(k));
    let mut semiample: Option<Cone<T>> = None;
    for tau in bunch.cones() {
        semiample = Some(match semiample {
            None => tau.clone(),
            Some(acc) => acc.intersect(tau)?,
        });
    }
    let semiample = semiample.unwrap_or_else(|| Cone::zero(k));
    let witness = semiample.relative_interior_point();
    let ample_nonempty = bunch
        .cones()
        .iter()
        .all(|tau| tau.in_relative_interior(&witness));

    // Mori cone: restrict each member to the rational span of the Picard
    // group, dualize there, and take the Minkowski sum.
    let span = picard.saturation();
    let basis = span.basis().clone();
    let p = basis.cols();
    let mut gens: Vec<Vec<T>> = Vec::new();
    for tau in bunch.cones() {
        let eqs: Vec<Vec<T>> = tau
            .equations()
            .iter()
            .map(|e| restrict_row(e, &basis))
            .collect();
        let ineqs: Vec<Vec<T>> = tau
            .facets()
            .iter()
            .map(|h| restrict_row(h, &basis))
            .collect();
        let restricted = Cone::from_constraints(p, &eqs, &ineqs)?;
        gens.extend(restricted.dual().generators());
    }
    let mori = Cone::from_rays(p, &gens)?;
    Ok(ConeProfile {
        effective,
        moving,
        semiample,
        ample_nonempty,
        mori,
        picard_span_basis: basis,
    })
}

fn restrict_row<T: Scalar>(row: &[T], basis: &Matrix<T>) -> Vec<T> {
    (0..basis.cols())
        .map(|j| dot(row, &basis.column(j)))
        .collect()
}

/// Express the semiample cone in the Picard span coordinates used by the
/// Mori cone; `dual(mori)` must reproduce it exactly.
pub fn semiample_in_picard_span<T: Scalar>(
    profile: &ConeProfile<T>,
) -> Result<Cone<T>> {
    let basis = &profile.picard_span_basis;
    let p = basis.cols();
    let eqs: Vec<Vec<T>> = profile
        .semiample
        .equations()
        .iter()
        .map(|e| restrict_row(e, basis))
        .collect();
    let ineqs: Vec<Vec<T>> = profile
        .semiample
        .facets()
        .iter()
        .map(|h| restrict_row(h, basis))
        .collect();
    Cone::from_constraints(p, &eqs, &ineqs)
}

/// Projectivity verdict; the ample criterion only applies when `O(X) = K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projectivity {
    Projective,
    NotProjective,
    Undetermined,
}

pub fn is_projective<T: Scalar>(
    presentation: &Presentation<T>,
    profile: &ConeProfile<T>,
) -> Projectivity {
    if !has_only_constants(presentation) {
        return Projectivity::Undetermined;
    }
    if profile.ample_nonempty {
        Projectivity::Projective
    } else {
        Projectivity::NotProjective
    }
}

/// Per-stratum singularity report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub face: FaceIndexSet,
    pub q_factorial: bool,
    pub factorial: bool,
    /// Present only when the characteristic space was asserted smooth; then
    /// smoothness coincides with factoriality.
    pub smooth: Option<bool>,
}

pub fn stratum_reports<T: Scalar>(
    presentation: &Presentation<T>,
    relevant: &[FaceIndexSet],
) -> Vec<StratumReport> {
    let k = presentation.class_rank();
    let smooth_known = presentation.xhat_smooth() == Some(true);
    relevant
        .iter()
        .map(|face| {
            let q_factorial = presentation.projected_cone(face).dim() == k;
            let factorial = presentation
                .degrees()
                .select_columns(face.indices())
                .is_surjective();
            StratumReport {
                face: face.clone(),
                q_factorial,
                factorial,
                smooth: smooth_known.then_some(factorial),
            }
        })
        .collect()
}

/// Global Q-factoriality, equivalently the quotient being geometric: every
/// bunch cone is full-dimensional.
pub fn is_q_factorial<T: Scalar>(presentation: &Presentation<T>, bunch: &Bunch<T>) -> bool {
    let k = presentation.class_rank();
    bunch.cones().iter().all(|c| c.dim() == k)
}

pub fn is_geometric_quotient<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
) -> bool {
    is_q_factorial(presentation, bunch)
}

/// Cartier test of a class at a relevant face: membership in the face image
/// lattice.
pub fn is_cartier<T: Scalar>(
    presentation: &Presentation<T>,
    relevant: &[FaceIndexSet],
    class: &[T],
    face: &FaceIndexSet,
) -> Result<bool> {
    if !relevant.contains(face) {
        return Err(Error::NotRelevant(face.clone()));
    }
    Ok(presentation.face_lattice(face).contains(class))
}

/// Q-Cartier test: membership in the linear span of the face image.
pub fn is_q_cartier<T: Scalar>(
    presentation: &Presentation<T>,
    relevant: &[FaceIndexSet],
    class: &[T],
    face: &FaceIndexSet,
) -> Result<bool> {
    if !relevant.contains(face) {
        return Err(Error::NotRelevant(face.clone()));
    }
    let cone = presentation.projected_cone(face);
    Ok(cone.equations().iter().all(|e| dot(e, class).is_zero()))
}

/// Canonical class: the relation degrees minus the generator degrees.
pub fn canonical_class<T: Scalar>(presentation: &Presentation<T>) -> Vec<T> {
    let k = presentation.class_rank();
    let mut c = vec![T::zero(); k];
    for j in 0..presentation.num_relations() {
        for (acc, x) in c.iter_mut().zip(presentation.relation_degree(j)) {
            *acc = acc.clone() + x;
        }
    }
    for i in 0..presentation.num_generators() {
        for (acc, x) in c.iter_mut().zip(presentation.degree_of(i)) {
            *acc = acc.clone() - x;
        }
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorensteinStatus {
    Gorenstein,
    QGorenstein,
    Neither,
}

pub fn gorenstein_status<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
    picard: &Sublattice<T>,
) -> GorensteinStatus {
    let anticanonical: Vec<T> = canonical_class(presentation)
        .into_iter()
        .map(|x| -x)
        .collect();
    if picard.contains(&anticanonical) {
        return GorensteinStatus::Gorenstein;
    }
    let q_gorenstein = bunch.cones().iter().all(|tau| {
        tau.equations()
            .iter()
            .all(|e| dot(e, &anticanonical).is_zero())
    });
    if q_gorenstein {
        GorensteinStatus::QGorenstein
    } else {
        GorensteinStatus::Neither
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanoStatus {
    Fano,
    QFano,
    NotFano,
}

pub fn fano_status<T: Scalar>(
    presentation: &Presentation<T>,
    bunch: &Bunch<T>,
    picard: &Sublattice<T>,
) -> FanoStatus {
    let anticanonical: Vec<T> = canonical_class(presentation)
        .into_iter()
        .map(|x| -x)
        .collect();
    let q_fano = bunch
        .cones()
        .iter()
        .all(|tau| tau.in_relative_interior(&anticanonical));
    if !q_fano {
        return FanoStatus::NotFano;
    }
    if picard.contains(&anticanonical) {
        FanoStatus::Fano
    } else {
        FanoStatus::QFano
    }
}

/// Findings of the intrinsic-quadric checks.
#[derive(Clone, Debug)]
pub struct QuadricReport<T: Scalar> {
    pub degree: Vec<T>,
    pub rank: usize,
    pub full_rank: bool,
    /// Full rank together with `O(X) = K` excludes the origin from the
    /// characteristic space, so smoothness of the latter holds automatically.
    pub auto_smooth: bool,
    /// `rank(Cl) <= dim + 3`
    pub class_rank_bound_holds: bool,
    /// `dim(R) <= 2 dim + 3`
    pub ring_dim_bound_holds: bool,
}

/// Non-failing quadric inspection: `None` if the presentation is not a
/// single purely quadratic relation.
pub fn quadric_profile<T: Scalar>(presentation: &Presentation<T>) -> Option<QuadricReport<T>> {
    if presentation.num_relations() != 1 {
        return None;
    }
    let relation = &presentation.relations()[0];
    if relation
        .terms()
        .iter()
        .any(|(_, e)| e.iter().sum::<u64>() != 2)
    {
        return None;
    }
    let r = presentation.num_generators();
    // symmetric coefficient matrix, doubled to stay integral
    let two = T::from_u64(2).unwrap();
    let mut scale = T::one();
    for (c, _) in relation.terms() {
        scale = scale.lcm(c.denom());
    }
    scale = scale * two.clone();
    let mut sym = Matrix::zero(r, r);
    for (c, exps) in relation.terms() {
        let support: Vec<usize> = (0..r).filter(|&i| exps[i] > 0).collect();
        let scaled = c.numer().clone() * scale.clone() / c.denom().clone();
        match support.len() {
            1 => {
                let i = support[0];
                *sym.at_mut(i, i) = scaled;
            }
            2 => {
                let (i, j) = (support[0], support[1]);
                let half = scaled / two.clone();
                *sym.at_mut(i, j) = half.clone();
                *sym.at_mut(j, i) = half;
            }
            _ => unreachable!("quadratic term has at most two support indices"),
        }
    }
    let rank = sym.rank();
    let full_rank = rank == r;
    let auto_smooth = full_rank && has_only_constants(presentation);
    let (class_ok, ring_ok) = match dimension(presentation) {
        Ok(dim) => (
            presentation.class_rank() <= dim + 3,
            presentation.ring_dimension() <= 2 * dim + 3,
        ),
        Err(_) => (false, false),
    };
    Some(QuadricReport {
        degree: presentation.relation_degree(0),
        rank,
        full_rank,
        auto_smooth,
        class_rank_bound_holds: class_ok,
        ring_dim_bound_holds: ring_ok,
    })
}

/// Strict quadric verification: degree symmetry, full rank, and the rank
/// bounds, with diagnostic errors.
pub fn quadric_checks<T: Scalar>(presentation: &Presentation<T>) -> Result<QuadricReport<T>> {
    if presentation.num_relations() != 1 {
        return Err(Error::NotAQuadric(format!(
            "expected exactly one relation, found {}",
            presentation.num_relations()
        )));
    }
    let relation = &presentation.relations()[0];
    for (_, exps) in relation.terms() {
        if exps.iter().sum::<u64>() != 2 {
            return Err(Error::NotAQuadric(
                "a term has total degree different from two".into(),
            ));
        }
    }
    let degree = presentation.relation_degree(0);
    let r = presentation.num_generators();
    for (_, exps) in relation.terms() {
        let support: Vec<usize> = (0..r).filter(|&i| exps[i] > 0).collect();
        let (i, j) = match support.len() {
            1 => (support[0], support[0]),
            _ => (support[0], support[1]),
        };
        let mut sum = presentation.degree_of(i);
        for (acc, x) in sum.iter_mut().zip(presentation.degree_of(j)) {
            *acc = acc.clone() + x;
        }
        if sum != degree {
            return Err(Error::DegreeAsymmetry(i + 1, j + 1));
        }
    }
    let report = quadric_profile(presentation).expect("shape already verified");
    if !report.full_rank {
        return Err(Error::RankDeficient {
            rank: report.rank,
            size: r,
        });
    }
    Ok(report)
}

/// Apply the automatic smoothness assertion of full quadrics when the user
/// left the flag open.
pub fn apply_quadric_smoothness<T: Scalar>(presentation: &mut Presentation<T>) {
    if presentation.xhat_smooth().is_none() {
        if let Some(report) = quadric_profile(presentation) {
            if report.auto_smooth {
                presentation.set_xhat_smooth(Some(true));
            }
        }
    }
}

fn alternating_sign<T: Scalar>(index: usize) -> Ratio<T> {
    if index % 2 == 0 {
        Ratio::from_integer(T::one())
    } else {
        Ratio::from_integer(-T::one())
    }
}

/// Pair the variables of a self-paired degree class hyperbolically:
/// `(0, m-1), (1, m-2), ...`, with a squared middle variable when `m` is
/// odd.
fn within_class_terms<T: Scalar>(
    base: usize,
    multiplicity: usize,
    r: usize,
    pair_counter: &mut usize,
    terms: &mut Vec<(Ratio<T>, Vec<u64>)>,
) {
    for t in 0..multiplicity / 2 {
        let mut exps = vec![0u64; r];
        exps[base + t] = 1;
        exps[base + multiplicity - 1 - t] = 1;
        terms.push((alternating_sign(*pair_counter), exps));
        *pair_counter += 1;
    }
    if multiplicity % 2 == 1 {
        let mut exps = vec![0u64; r];
        exps[base + multiplicity / 2] = 2;
        terms.push((alternating_sign(*pair_counter), exps));
        *pair_counter += 1;
    }
}

/// Rank-one full intrinsic quadrics: strictly increasing positive weights
/// with complementary pairing `w_i + w_{n+1-i} = w` and mirrored
/// multiplicities, bunch `{Q>=0}`.
pub fn build_rank1_quadric<T: Scalar>(
    weights: &[T],
    multiplicities: &[usize],
    options: &BunchOptions,
) -> Result<(Presentation<T>, Bunch<T>)> {
    let n = weights.len();
    if n == 0 || n != multiplicities.len() {
        return Err(Error::SymmetryViolation(
            "weights and multiplicities must be nonempty lists of equal length".into(),
        ));
    }
    for i in 0..n {
        if !weights[i].is_positive() {
            return Err(Error::SymmetryViolation(format!(
                "weight {} is not positive",
                i + 1
            )));
        }
        if i + 1 < n && weights[i + 1] <= weights[i] {
            return Err(Error::SymmetryViolation(
                "weights must be strictly increasing".into(),
            ));
        }
        if multiplicities[i] == 0 {
            return Err(Error::MultiplicityOutOfRange(format!(
                "multiplicity {} is zero",
                i + 1
            )));
        }
    }
    let total = weights[0].clone() + weights[n - 1].clone();
    for i in 0..n {
        if weights[i].clone() + weights[n - 1 - i].clone() != total {
            return Err(Error::SymmetryViolation(format!(
                "weights {} and {} do not sum to the common degree",
                i + 1,
                n - i
            )));
        }
        if multiplicities[i] != multiplicities[n - 1 - i] {
            return Err(Error::SymmetryViolation(format!(
                "multiplicities {} and {} differ",
                i + 1,
                n - i
            )));
        }
    }
    let r: usize = multiplicities.iter().sum();
    if r < 5 {
        return Err(Error::TooFewVariables(r));
    }
    let mut bases = Vec::with_capacity(n);
    let mut acc = 0usize;
    for &m in multiplicities {
        bases.push(acc);
        acc += m;
    }
    let mut columns: Vec<Vec<T>> = Vec::with_capacity(r);
    for (i, &m) in multiplicities.iter().enumerate() {
        for _ in 0..m {
            columns.push(vec![weights[i].clone()]);
        }
    }
    let degrees = Matrix::from_columns(1, &columns);
    let mut terms: Vec<(Ratio<T>, Vec<u64>)> = Vec::new();
    let mut pair_counter = 0usize;
    for i in 0..n {
        let partner = n - 1 - i;
        if i < partner {
            for t in 0..multiplicities[i] {
                let mut exps = vec![0u64; r];
                exps[bases[i] + t] = 1;
                exps[bases[partner] + t] = 1;
                terms.push((alternating_sign(pair_counter), exps));
                pair_counter += 1;
            }
        } else if i == partner {
            within_class_terms(bases[i], multiplicities[i], r, &mut pair_counter, &mut terms);
        }
    }
    let presentation = Presentation::validate(degrees, vec![Relation::new(terms)], None, None)?;
    let input = vec![BunchConeInput::Generators(vec![vec![T::one()]])];
    let bunch = validate_bunch(&presentation, &input, options)?;
    Ok((presentation, bunch))
}

/// Which side of the rank-two classification to construct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank2Side {
    Left,
    Right,
}

/// Rank-two smooth intrinsic quadric data. The left side pairs two degree
/// classes `x = (1,0)` and `y = (0,1)` of equal multiplicity; the right side
/// pairs `x = (1,0)` with `x' = (-1,2)` and squares the class `y = (0,1)`.
/// Both carry the bunch `{cone(x, y)}`.
pub fn build_rank2_quadric<T: Scalar>(
    side: Rank2Side,
    mu1: usize,
    mu2: usize,
    options: &BunchOptions,
) -> Result<(Presentation<T>, Bunch<T>)> {
    let f = |a: i64, b: i64| vec![T::from_i64(a).unwrap(), T::from_i64(b).unwrap()];
    let (columns, r) = match side {
        Rank2Side::Left => {
            let mu = mu1;
            if mu < 3 {
                return Err(Error::MultiplicityOutOfRange(format!(
                    "left side needs multiplicity at least 3, got {mu}"
                )));
            }
            let mut cols = Vec::new();
            for _ in 0..mu {
                cols.push(f(1, 0));
            }
            for _ in 0..mu {
                cols.push(f(0, 1));
            }
            (cols, 2 * mu)
        }
        Rank2Side::Right => {
            if mu1 == 0 || mu2 == 0 {
                return Err(Error::MultiplicityOutOfRange(
                    "right side multiplicities must be positive".into(),
                ));
            }
            let r = 2 * mu1 + mu2;
            if r < 5 {
                return Err(Error::TooFewVariables(r));
            }
            let mut cols = Vec::new();
            for _ in 0..mu1 {
                cols.push(f(1, 0));
            }
            for _ in 0..mu2 {
                cols.push(f(0, 1));
            }
            for _ in 0..mu1 {
                cols.push(f(-1, 2));
            }
            (cols, r)
        }
    };
    let degrees = Matrix::from_columns(2, &columns);
    let mut terms: Vec<(Ratio<T>, Vec<u64>)> = Vec::new();
    let mut pair_counter = 0usize;
    match side {
        Rank2Side::Left => {
            let mu = mu1;
            for t in 0..mu {
                let mut exps = vec![0u64; r];
                exps[t] = 1;
                exps[mu + t] = 1;
                terms.push((alternating_sign(pair_counter), exps));
                pair_counter += 1;
            }
        }
        Rank2Side::Right => {
            for t in 0..mu1 {
                let mut exps = vec![0u64; r];
                exps[t] = 1;
                exps[mu1 + mu2 + t] = 1;
                terms.push((alternating_sign(pair_counter), exps));
                pair_counter += 1;
            }
            within_class_terms(mu1, mu2, r, &mut pair_counter, &mut terms);
        }
    }
    let presentation = Presentation::validate(degrees, vec![Relation::new(terms)], None, None)?;
    let input = vec![BunchConeInput::Generators(vec![f(1, 0), f(0, 1)])];
    let bunch = validate_bunch(&presentation, &input, options)?;
    Ok((presentation, bunch))
}

/// The full analysis of a presentation with a bunch: every invariant the
/// library computes, in one deterministic pass.
pub struct Analysis<T: Scalar> {
    pub presentation: Presentation<T>,
    pub bunch: Bunch<T>,
    pub dimension: usize,
    pub only_constants: bool,
    pub relevant: Vec<FaceIndexSet>,
    pub covering: Vec<FaceIndexSet>,
    pub picard: Sublattice<T>,
    pub picard_index: LatticeIndex<T>,
    pub profile: ConeProfile<T>,
    pub strata: Vec<StratumReport>,
    pub canonical: Vec<T>,
    pub gorenstein: GorensteinStatus,
    pub fano: FanoStatus,
    pub projectivity: Projectivity,
    pub q_factorial: bool,
    pub gale: GaleData<T>,
    pub ambient_fan: Fan<T>,
    pub quadric: Option<QuadricReport<T>>,
}

/// Run the whole pipeline on an unvalidated bunch input.
pub fn analyze<T: Scalar>(
    presentation: Presentation<T>,
    bunch_input: &[BunchConeInput<T>],
    options: &BunchOptions,
) -> Result<Analysis<T>> {
    let mut presentation = presentation;
    apply_quadric_smoothness(&mut presentation);
    let bunch = validate_bunch(&presentation, bunch_input, options)?;
    analyze_validated(presentation, bunch, options)
}

/// Run the pipeline on an already validated bunch.
pub fn analyze_validated<T: Scalar>(
    mut presentation: Presentation<T>,
    bunch: Bunch<T>,
    options: &BunchOptions,
) -> Result<Analysis<T>> {
    apply_quadric_smoothness(&mut presentation);
    let quadric = quadric_profile(&presentation);
    let dimension = dimension(&presentation)?;
    let only_constants = has_only_constants(&presentation);
    let relevant = relevant_faces(&presentation, &bunch, options)?;
    let covering = covering_collection(&relevant);
    let (picard, picard_index) = picard_group(&presentation, &covering)?;
    let profile = divisor_cones(&presentation, &bunch, &picard)?;
    let strata = stratum_reports(&presentation, &relevant);
    let canonical = canonical_class(&presentation);
    let gorenstein = gorenstein_status(&presentation, &bunch, &picard);
    let fano = fano_status(&presentation, &bunch, &picard);
    let projectivity = is_projective(&presentation, &profile);
    let q_factorial = is_q_factorial(&presentation, &bunch);
    let gale = gale_setup(&presentation);
    let ambient_fan = minimal_ambient_fan(&presentation, &gale, &covering)?;
    Ok(Analysis {
        presentation,
        bunch,
        dimension,
        only_constants,
        relevant,
        covering,
        picard,
        picard_index,
        profile,
        strata,
        canonical,
        gorenstein,
        fano,
        projectivity,
        q_factorial,
        gale,
        ambient_fan,
        quadric,
    })
}
