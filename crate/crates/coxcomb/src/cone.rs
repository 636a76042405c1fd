//! Exact rational polyhedral cones.
//!
//! A cone is stored with both descriptions at once: extreme rays plus a
//! lineality basis (V-side), and irredundant facet normals plus span
//! equations (H-side). The conversion in both directions is the double
//! description method over exact integers; every downstream test
//! (membership, relative interiority, strict convexity) then reduces to sign
//! conditions.

use std::fmt;

use crate::matrix::{dot, primitive, Matrix};
use crate::{Error, Result, Scalar};

/// Face of the positive orthant `γ ⊆ Q^r`, encoded by the generator indices
/// it contains. Indices are 0-based internally and 1-based in displays.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceIndexSet {
    indices: Vec<usize>,
}

impl FaceIndexSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        FaceIndexSet { indices }
    }

    pub fn empty() -> Self {
        FaceIndexSet { indices: Vec::new() }
    }

    pub fn full(r: usize) -> Self {
        FaceIndexSet {
            indices: (0..r).collect(),
        }
    }

    pub fn from_mask(mask: u64, r: usize) -> Self {
        FaceIndexSet {
            indices: (0..r).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &FaceIndexSet) -> bool {
        self.indices.iter().all(|i| other.contains(*i))
    }

    /// The complement index set `{0..r} \ self`, i.e. the costar face of the
    /// dual cone under the face correspondence.
    pub fn complement(&self, r: usize) -> FaceIndexSet {
        FaceIndexSet {
            indices: (0..r).filter(|i| !self.contains(*i)).collect(),
        }
    }

    /// 1-based indices for the user surface.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for FaceIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.one_based()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Order faces by cardinality first, then lexicographically.
pub fn face_order(a: &FaceIndexSet, b: &FaceIndexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.indices.cmp(&b.indices))
}

#[derive(Clone)]
pub struct Cone<T> {
    ambient: usize,
    rays: Vec<Vec<T>>,
    lineality: Vec<Vec<T>>,
    facets: Vec<Vec<T>>,
    equations: Vec<Vec<T>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaceRelation {
    Face,
    NotFace,
}

impl<T: Scalar> Cone<T> {
    /// The cone `{0}`.
    pub fn zero(ambient: usize) -> Self {
        let equations = (0..ambient)
            .map(|i| {
                let mut e = vec![T::zero(); ambient];
                e[i] = T::one();
                e
            })
            .collect();
        Cone {
            ambient,
            rays: Vec::new(),
            lineality: Vec::new(),
            facets: Vec::new(),
            equations,
        }
    }

    /// Cone generated by the given vectors; generators are normalized to
    /// primitive integer vectors, redundancy is removed, and the irredundant
    /// facet description is computed eagerly.
    pub fn from_rays(ambient: usize, generators: &[Vec<T>]) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: g.len(),
                });
            }
            if g.iter().any(|x| !x.is_zero()) {
                gens.push(primitive(g)?);
            }
        }
        if gens.is_empty() {
            return Ok(Cone::zero(ambient));
        }
        // facets = extreme rays of the dual, span equations = its lineality
        let (equations, facets) = double_description(ambient, &[], &gens);
        // canonical generators from the facet description
        let (lineality, rays) = double_description(ambient, &equations, &facets);
        let cone = Cone {
            ambient,
            rays,
            lineality,
            facets,
            equations,
        };
        debug_assert!(gens.iter().all(|g| cone.contains(g)), "generator escaped its cone");
        Ok(cone)
    }

    /// Cone `{x : equations·x = 0, inequalities·x >= 0}`.
    pub fn from_constraints(
        ambient: usize,
        equations: &[Vec<T>],
        inequalities: &[Vec<T>],
    ) -> Result<Self> {
        let (lin, rays) = double_description(ambient, equations, inequalities);
        let mut gens = rays;
        for l in lin {
            gens.push(l.iter().map(|x| -x.clone()).collect());
            gens.push(l);
        }
        Cone::from_rays(ambient, &gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vec<T>] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[Vec<T>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Vec<T>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<T>] {
        &self.equations
    }

    /// Generating set: extreme rays plus `±` the lineality basis.
    pub fn generators(&self) -> Vec<Vec<T>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x.clone()).collect());
        }
        g.sort();
        g
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn spans_fulldim(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "point dimension mismatch");
        self.equations.iter().all(|e| dot(e, v).is_zero())
            && self.facets.iter().all(|h| !dot(h, v).is_negative())
    }

    /// Relative interior membership: span equations hold and every facet
    /// inequality is strictly positive. The relative interior of `{0}` is
    /// `{0}` itself.
    pub fn in_relative_interior(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "point dimension mismatch");
        self.equations.iter().all(|e| dot(e, v).is_zero())
            && self.facets.iter().all(|h| dot(h, v).is_positive())
    }

    /// A lattice point in the relative interior: the sum of the extreme
    /// rays, or the origin for linear subspace cones.
    pub fn relative_interior_point(&self) -> Vec<T> {
        let mut p = vec![T::zero(); self.ambient];
        for r in &self.rays {
            for (acc, x) in p.iter_mut().zip(r) {
                *acc = acc.clone() + x.clone();
            }
        }
        p
    }

    /// Whether `other ⊆ self`.
    pub fn contains_cone(&self, other: &Cone<T>) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.iter().all(|l| {
                self.equations.iter().all(|e| dot(e, l).is_zero())
                    && self.facets.iter().all(|h| dot(h, l).is_zero())
            })
    }

    /// Set equality via mutual containment.
    pub fn eq_cone(&self, other: &Cone<T>) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    /// Set intersection.
    pub fn intersect(&self, other: &Cone<T>) -> Result<Cone<T>> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        Cone::from_constraints(self.ambient, &eqs, &ineqs)
    }

    /// The dual cone `{u : <u,v> >= 0 for all v in self}`.
    pub fn dual(&self) -> Cone<T> {
        let mut gens = self.facets.clone();
        for e in &self.equations {
            gens.push(e.clone());
            gens.push(e.iter().map(|x| -x.clone()).collect());
        }
        Cone::from_rays(self.ambient, &gens).expect("dual construction cannot fail")
    }

    /// Nonempty intersection of relative interiors, decided through the
    /// interior point of the set intersection.
    pub fn interiors_meet(&self, other: &Cone<T>) -> Result<bool> {
        let meet = self.intersect(other)?;
        let p = meet.relative_interior_point();
        Ok(self.in_relative_interior(&p) && other.in_relative_interior(&p))
    }

    /// Whether `self° ⊆ other°`. By the interior-witness lemma this holds
    /// iff `self ⊆ other` and one relative interior point of `self` lies in
    /// `other°`.
    pub fn interior_contained_in(&self, other: &Cone<T>) -> bool {
        other.contains_cone(self) && other.in_relative_interior(&self.relative_interior_point())
    }

    pub fn is_simplicial(&self) -> bool {
        self.lineality.is_empty()
            && Matrix::from_columns(self.ambient, &self.rays).rank() == self.rays.len()
    }

    /// Regular: generated by part of a lattice basis.
    pub fn is_regular(&self) -> bool {
        if !self.is_simplicial() {
            return false;
        }
        Matrix::from_columns(self.ambient, &self.rays)
            .snf_diagonal()
            .iter()
            .all(|d| d.is_one())
    }

    /// Decide whether `sub` is a face of `sup`; `sub ⊆ sup` is required.
    pub fn face_relation(sub: &Cone<T>, sup: &Cone<T>) -> Result<FaceRelation> {
        if !sup.contains_cone(sub) {
            return Err(Error::NotContained);
        }
        let mut f = sup.clone();
        loop {
            let tight: Vec<Vec<T>> = f
                .facets
                .iter()
                .filter(|h| sub.rays.iter().all(|r| dot(h, r).is_zero()))
                .cloned()
                .collect();
            if tight.is_empty() {
                return Ok(if sub.eq_cone(&f) {
                    FaceRelation::Face
                } else {
                    FaceRelation::NotFace
                });
            }
            let mut eqs = f.equations.clone();
            eqs.extend(tight);
            f = Cone::from_constraints(f.ambient, &eqs, &f.facets)?;
        }
    }

    /// Deterministic sort key: sorted extreme rays, then lineality basis.
    pub fn sort_key(&self) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
        let mut r = self.rays.clone();
        r.sort();
        (r, self.lineality.clone())
    }
}

impl<T: Scalar> fmt::Debug for Cone<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmtv = |vs: &[Vec<T>]| {
            vs.iter()
                .map(|v| {
                    format!(
                        "({})",
                        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "Cone(dim {} rays [{}] lin [{}] facets [{}])",
            self.dim(),
            fmtv(&self.rays),
            fmtv(&self.lineality),
            fmtv(&self.facets)
        )
    }
}

struct RayRec<T> {
    v: Vec<T>,
    /// indices into `processed` of the tight inequalities, exact
    zeros: Vec<u32>,
}

/// Double description: compute extreme rays and lineality of
/// `{x : equations·x = 0, inequalities·x >= 0}`.
///
/// Returns `(lineality basis, extreme rays)`; the lineality basis is the
/// canonical Hermite basis of the lineality lattice, rays are primitive and
/// sorted. Adjacency of rays is decided by the exact rank test, and a final
/// extremality filter re-derives tight sets from scratch, so redundant
/// intermediate rays can never corrupt the result.
fn double_description<T: Scalar>(
    ambient: usize,
    equations: &[Vec<T>],
    inequalities: &[Vec<T>],
) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let eq_rows = Matrix::from_rows(ambient, equations);
    let mut lin: Vec<Vec<T>> = eq_rows.kernel_basis().columns();
    let mut rays: Vec<RayRec<T>> = Vec::new();
    let mut processed: Vec<Vec<T>> = Vec::new();

    for h in inequalities {
        debug_assert_eq!(h.len(), ambient);
        if h.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Some(pos) = lin.iter().position(|l| !dot(h, l).is_zero()) {
            // the new halfspace cuts the lineality space
            let mut l0 = lin.remove(pos);
            let mut v0 = dot(h, &l0);
            if v0.is_negative() {
                l0 = l0.iter().map(|x| -x.clone()).collect();
                v0 = -v0;
            }
            for l in lin.iter_mut() {
                let c = dot(h, l);
                if !c.is_zero() {
                    let combo: Vec<T> = l
                        .iter()
                        .zip(&l0)
                        .map(|(a, b)| v0.clone() * a.clone() - c.clone() * b.clone())
                        .collect();
                    *l = primitive(&combo).expect("lineality combination is nonzero");
                }
            }
            for r in rays.iter_mut() {
                let c = dot(h, &r.v);
                if !c.is_zero() {
                    let combo: Vec<T> = r
                        .v
                        .iter()
                        .zip(&l0)
                        .map(|(a, b)| v0.clone() * a.clone() - c.clone() * b.clone())
                        .collect();
                    r.v = primitive(&combo).expect("projected ray is nonzero");
                }
                r.zeros.push(processed.len() as u32);
            }
            let zeros = (0..processed.len() as u32).collect();
            rays.push(RayRec { v: l0, zeros });
            processed.push(h.clone());
            continue;
        }
        let vals: Vec<T> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let hidx = processed.len() as u32;
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.push(hidx);
                }
            }
            processed.push(h.clone());
            continue;
        }
        let lin_dim = lin.len();
        let mut next: Vec<RayRec<T>> = Vec::new();
        let mut seen: std::collections::BTreeSet<Vec<T>> = std::collections::BTreeSet::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                let mut zeros = r.zeros.clone();
                if v.is_zero() {
                    zeros.push(hidx);
                }
                seen.insert(r.v.clone());
                next.push(RayRec {
                    v: r.v.clone(),
                    zeros,
                });
            }
        }
        for (i, vi) in vals.iter().enumerate() {
            if !vi.is_positive() {
                continue;
            }
            for (j, vj) in vals.iter().enumerate() {
                if !vj.is_negative() {
                    continue;
                }
                if !adjacent(ambient, equations, &processed, &rays[i], &rays[j], lin_dim) {
                    continue;
                }
                let a = vi.clone();
                let b = -vj.clone();
                let combo: Vec<T> = rays[j]
                    .v
                    .iter()
                    .zip(&rays[i].v)
                    .map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone())
                    .collect();
                if combo.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let w = primitive(&combo).expect("nonzero combination");
                if !seen.insert(w.clone()) {
                    continue;
                }
                let mut zeros: Vec<u32> = (0..processed.len() as u32)
                    .filter(|&t| dot(&processed[t as usize], &w).is_zero())
                    .collect();
                zeros.push(hidx);
                next.push(RayRec { v: w, zeros });
            }
        }
        rays = next;
        processed.push(h.clone());
    }

    // canonical lineality from the full constraint system
    let mut all_rows: Vec<Vec<T>> = equations.to_vec();
    all_rows.extend(processed.iter().cloned());
    let lin_lattice = Matrix::from_rows(ambient, &all_rows).kernel_basis();
    let lin_dim = lin_lattice.cols();
    debug_assert_eq!(lin_dim, lin.len(), "lineality bookkeeping mismatch");

    // final extremality filter with tight sets recomputed from scratch
    let mut out: Vec<Vec<T>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for r in &rays {
        if !seen.insert(r.v.clone()) {
            continue;
        }
        let mut rows: Vec<Vec<T>> = equations.to_vec();
        for h in &processed {
            if dot(h, &r.v).is_zero() {
                rows.push(h.clone());
            }
        }
        let face_dim = Matrix::from_rows(ambient, &rows).kernel_basis().cols();
        if face_dim == lin_dim + 1 {
            out.push(r.v.clone());
        }
    }
    out.sort();
    (lin_lattice.columns(), out)
}

/// Exact adjacency: the minimal face containing both rays has dimension
/// `lineality + 2`.
fn adjacent<T: Scalar>(
    ambient: usize,
    equations: &[Vec<T>],
    processed: &[Vec<T>],
    a: &RayRec<T>,
    b: &RayRec<T>,
    lin_dim: usize,
) -> bool {
    let mut rows: Vec<Vec<T>> = equations.to_vec();
    let mut ia = 0usize;
    let mut ib = 0usize;
    while ia < a.zeros.len() && ib < b.zeros.len() {
        match a.zeros[ia].cmp(&b.zeros[ib]) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                rows.push(processed[a.zeros[ia] as usize].clone());
                ia += 1;
                ib += 1;
            }
        }
    }
    Matrix::from_rows(ambient, &rows).kernel_basis().cols() == lin_dim + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    type C = Cone<Int>;

    fn v(data: &[i64]) -> Vec<Int> {
        data.iter().map(|&x| Int::from(x)).collect()
    }

    fn cone(gens: &[&[i64]]) -> C {
        let d = gens.first().map_or(0, |g| g.len());
        C::from_rays(d, &gens.iter().map(|g| v(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn quadrant_from_generators() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 0])]);
        let mut facets = c.facets().to_vec();
        facets.sort();
        assert_eq!(facets, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn redundant_generator_dropped() {
        let c = cone(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(c.rays().len(), 2);
        assert!(c.eq_cone(&cone(&[&[1, 0], &[0, 1]])));
    }

    #[test]
    fn empty_generators_give_zero_cone() {
        let c = C::from_rays(2, &[]).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.dim(), 0);
        assert!(c.is_strictly_convex());
        assert!(c.in_relative_interior(&v(&[0, 0])));
    }

    #[test]
    fn dual_orthant_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert!(c.dual().eq_cone(&c));
    }

    #[test]
    fn dual_halfplane_is_ray() {
        let c = cone(&[&[1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(c.lineality_dim(), 1);
        let d = c.dual();
        assert_eq!(d.rays(), &[v(&[1, 0])]);
        assert_eq!(d.dim(), 1);
    }

    #[test]
    fn dual_of_skew_cone() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        let d = c.dual();
        assert!(d.eq_cone(&cone(&[&[0, 1], &[2, -1]])));
        assert_eq!(d.dim(), 2);
        assert!(d.dual().eq_cone(&c));
    }

    #[test]
    fn intersection_examples() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert!(q.intersect(&q).unwrap().eq_cone(&q));
        let below_diag = cone(&[&[1, 0], &[1, 1]]);
        let i = q.intersect(&below_diag).unwrap();
        assert!(i.eq_cone(&cone(&[&[1, 0], &[1, 1]])));
    }

    #[test]
    fn membership_and_interior() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert!(q.in_relative_interior(&v(&[1, 1])));
        assert!(!q.in_relative_interior(&v(&[1, 0])));
        assert!(q.contains(&v(&[1, 0])));
        let z = C::zero(2);
        assert!(z.in_relative_interior(&v(&[0, 0])));
    }

    #[test]
    fn relative_interior_point_examples() {
        assert_eq!(cone(&[&[1, 0], &[0, 1]]).relative_interior_point(), v(&[1, 1]));
        assert_eq!(cone(&[&[2, 4]]).relative_interior_point(), v(&[1, 2]));
        assert_eq!(cone(&[&[1, 0], &[1, 2]]).relative_interior_point(), v(&[2, 2]));
    }

    #[test]
    fn dims_and_convexity() {
        let orthant = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(orthant.dim(), 3);
        assert!(orthant.is_strictly_convex());
        assert!(orthant.spans_fulldim());
        let line = cone(&[&[1, -1], &[-1, 1]]);
        assert_eq!(line.dim(), 1);
        assert!(!line.is_strictly_convex());
    }

    #[test]
    fn regular_and_simplicial() {
        assert!(cone(&[&[1, 0], &[0, 1]]).is_regular());
        let c = cone(&[&[1, 0], &[1, 2]]);
        assert!(c.is_simplicial());
        assert!(!c.is_regular());
    }

    #[test]
    fn face_relation_examples() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        let edge = cone(&[&[1, 0]]);
        assert_eq!(C::face_relation(&edge, &q).unwrap(), FaceRelation::Face);
        let diag = cone(&[&[1, 1]]);
        assert_eq!(C::face_relation(&diag, &q).unwrap(), FaceRelation::NotFace);
        let z = C::zero(2);
        assert_eq!(C::face_relation(&z, &q).unwrap(), FaceRelation::Face);
        let outside = cone(&[&[-1, 0]]);
        assert!(C::face_relation(&outside, &q).is_err());
    }

    #[test]
    fn interior_overlap_helpers() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        let upper = cone(&[&[1, 1], &[0, 1]]);
        assert!(q.interiors_meet(&upper).unwrap());
        let left = cone(&[&[0, 1], &[-1, 0]]);
        assert!(!q.interiors_meet(&left).unwrap());
        assert!(upper.interior_contained_in(&q));
        assert!(!q.interior_contained_in(&upper));
        // zero cones: {0}° = {0}
        let z = C::zero(2);
        assert!(z.interiors_meet(&z).unwrap());
        assert!(!z.interiors_meet(&q).unwrap());
    }

    #[test]
    fn orthant_face_interior_matches_coordinate_test() {
        // v in cone(e_i : i in S)° iff v_i > 0 exactly for i in S
        let dim = 3;
        for mask in 0u64..1 << dim {
            let s = FaceIndexSet::from_mask(mask, dim);
            let gens: Vec<Vec<Int>> = s
                .indices()
                .iter()
                .map(|&i| {
                    let mut e = v(&[0, 0, 0]);
                    e[i] = Int::from(1);
                    e
                })
                .collect();
            let c = C::from_rays(dim, &gens).unwrap();
            for probe_mask in 0u64..1 << dim {
                let probe: Vec<Int> = (0..dim)
                    .map(|i| Int::from((probe_mask >> i & 1) as i64 * 2))
                    .collect();
                let expect = probe_mask == mask;
                assert_eq!(c.in_relative_interior(&probe), expect);
            }
        }
    }

    #[test]
    fn full_space_cone() {
        let c = cone(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.lineality_dim(), 2);
        assert!(c.facets().is_empty());
        assert!(c.dual().is_zero());
    }

    #[test]
    fn face_index_set_basics() {
        let s = FaceIndexSet::new(vec![2, 0]);
        assert_eq!(s.indices(), &[0, 2]);
        assert_eq!(s.complement(4).indices(), &[1, 3]);
        assert_eq!(FaceIndexSet::empty().complement(3), FaceIndexSet::full(3));
        assert_eq!(s.to_string(), "{1,3}");
    }
}
