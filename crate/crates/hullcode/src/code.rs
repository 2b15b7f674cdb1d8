//! Linear codes fixed by a canonical (RREF) generator matrix, and the
//! single-code analyses: duals, hulls, minimum distance, weight distribution,
//! classification flags, and the Griesmer bound.

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldError, FieldRef};
use crate::matrix::{Matrix, MatrixError};

/// Which inner product a dual/hull/classification refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Euclidean,
    Hermitian,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Euclidean => "euclidean",
            Flavor::Hermitian => "hermitian",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("codes belong to different fields")]
    FieldMismatch,
    #[error("codes have different lengths")]
    LengthMismatch,
    #[error("enumeration budget exceeded: q^k = {words} codewords, cap {cap}")]
    BudgetExceeded { words: u128, cap: u64 },
    #[error("operation needs a code of nonzero dimension")]
    ZeroDimensional,
    #[error("operation is defined for binary codes only")]
    NotBinary,
    #[error("exact minimum distance is not available")]
    DistanceUnknown,
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheck(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Default enumeration budget: 2^26 codeword evaluations.
pub const DEFAULT_CAP: u64 = 1 << 26;

/// An [n, k] linear code over a shared field. Two codes are equal iff their
/// canonical generators are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldRef,
    n: usize,
    k: usize,
    gen: Matrix,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]_{} code", self.n, self.k, self.field.order())
    }
}

impl LinearCode {
    /// Canonicalize an arbitrary generator via RREF; k is the rank of G.
    pub fn from_generator(gen: &Matrix) -> LinearCode {
        let red = gen.rref();
        let k = red.rank;
        let rows: Vec<Vec<u16>> = (0..k).map(|i| red.matrix.row(i).to_vec()).collect();
        let canonical = if k == 0 {
            Matrix::zeros(gen.field(), 0, gen.cols())
        } else {
            Matrix::from_rows(gen.field(), &rows)
        };
        LinearCode {
            field: gen.field().clone(),
            n: gen.cols(),
            k,
            gen: canonical,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
    pub fn dim(&self) -> usize {
        self.k
    }
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    fn require_same_field(&self, other: &LinearCode) -> Result<(), CodeError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(CodeError::FieldMismatch)
        }
    }

    fn require_same_space(&self, other: &LinearCode) -> Result<(), CodeError> {
        self.require_same_field(other)?;
        if self.n == other.n {
            Ok(())
        } else {
            Err(CodeError::LengthMismatch)
        }
    }

    pub fn dual(&self, flavor: Flavor) -> Result<LinearCode, CodeError> {
        let gen = match flavor {
            Flavor::Euclidean => self.gen.clone(),
            // C^perp_H = (C^sqrt(q))^perp_E
            Flavor::Hermitian => self.gen.conjugate_entries()?,
        };
        Ok(LinearCode::from_generator(&gen.kernel()))
    }

    pub fn dual_euclidean(&self) -> LinearCode {
        self.dual(Flavor::Euclidean).expect("euclidean dual")
    }

    pub fn dual_hermitian(&self) -> Result<LinearCode, CodeError> {
        self.dual(Flavor::Hermitian)
    }

    /// G1 * G2^T (Euclidean) or G1 * G2^dagger (Hermitian).
    pub fn gram_with(&self, other: &LinearCode, flavor: Flavor) -> Result<Matrix, CodeError> {
        self.require_same_space(other)?;
        let rhs = match flavor {
            Flavor::Euclidean => other.gen.transpose(),
            Flavor::Hermitian => other.gen.conj_transpose()?,
        };
        Ok(self.gen.mul(&rhs)?)
    }

    pub fn gram(&self, flavor: Flavor) -> Result<Matrix, CodeError> {
        self.gram_with(self, flavor)
    }

    /// dim of the intersection: k_C + k_D - rank(G_C stacked on G_D).
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize, CodeError> {
        self.require_same_space(other)?;
        if self.k == 0 || other.k == 0 {
            return Ok(0);
        }
        let stacked = self.gen.vstack(&other.gen)?;
        Ok(self.k + other.k - stacked.rank())
    }

    /// The intersection code, computed as the dual of the sum of the duals;
    /// its dimension is cross-checked against [`Self::intersection_dim`].
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode, CodeError> {
        self.require_same_space(other)?;
        let h1 = self.dual_euclidean();
        let h2 = other.dual_euclidean();
        let stacked = h1.gen.vstack(&h2.gen)?;
        let inter = LinearCode::from_generator(&stacked.kernel());
        let expected = self.intersection_dim(other)?;
        if inter.dim() != expected {
            return Err(CodeError::InternalCrossCheck(format!(
                "intersection dim {} != rank-formula dim {}",
                inter.dim(),
                expected
            )));
        }
        Ok(inter)
    }

    /// Hull dimension via rank(G G^T) = k - dim(Hull); cross-checked against
    /// the direct intersection with the dual.
    pub fn hull_dim(&self, flavor: Flavor) -> Result<usize, CodeError> {
        let by_rank = self.k - self.gram(flavor)?.rank();
        let by_intersection = self.intersection_dim(&self.dual(flavor)?)?;
        if by_rank != by_intersection {
            return Err(CodeError::InternalCrossCheck(format!(
                "hull via rank {} != hull via intersection {}",
                by_rank, by_intersection
            )));
        }
        Ok(by_rank)
    }

    /// rank(G1 G2^T) (or dagger), with the identity
    /// rank = k1 - dim(C1 meet C2^perp) asserted.
    pub fn cross_rank(&self, other: &LinearCode, flavor: Flavor) -> Result<usize, CodeError> {
        let r = self.gram_with(other, flavor)?.rank();
        let expected = self.k - self.intersection_dim(&other.dual(flavor)?)?;
        if r != expected {
            return Err(CodeError::InternalCrossCheck(format!(
                "cross rank {} != k1 - intersection {}",
                r, expected
            )));
        }
        Ok(r)
    }

    pub fn contains(&self, other: &LinearCode) -> Result<bool, CodeError> {
        self.require_same_space(other)?;
        Ok(other.gen.row_space_contained_in(&self.gen)?)
    }

    /// Number of codewords q^k, or None when it exceeds the cap.
    pub fn codeword_count_capped(&self, cap: u64) -> Option<u64> {
        let q = self.field.order() as u128;
        let mut total: u128 = 1;
        for _ in 0..self.k {
            total *= q;
            if total > cap as u128 {
                return None;
            }
        }
        Some(total as u64)
    }

    fn budget_error(&self, cap: u64) -> CodeError {
        let q = self.field.order() as u128;
        let words = (0..self.k).try_fold(1u128, |acc, _| acc.checked_mul(q));
        CodeError::BudgetExceeded {
            words: words.unwrap_or(u128::MAX),
            cap,
        }
    }

    /// Weight distribution A_0..A_n by exhaustive message enumeration.
    /// Binary codes run word-packed Gray iteration; other fields use a
    /// mixed-radix odometer with incremental row updates.
    pub fn weight_distribution(&self, cap: u64) -> Result<Vec<u64>, CodeError> {
        let Some(total) = self.codeword_count_capped(cap) else {
            return Err(self.budget_error(cap));
        };
        let mut hist = vec![0u64; self.n + 1];
        hist[0] = 1;
        if self.k == 0 {
            return Ok(hist);
        }
        if self.field.order() == 2 {
            self.enumerate_binary(&mut hist);
        } else {
            self.enumerate_general(total, &mut hist);
        }
        debug_assert_eq!(hist.iter().sum::<u64>(), total);
        Ok(hist)
    }

    fn enumerate_binary(&self, hist: &mut [u64]) {
        let words = self.n.div_ceil(64);
        let packed: Vec<Vec<u64>> = (0..self.k)
            .map(|i| {
                let mut w = vec![0u64; words];
                for (j, &c) in self.gen.row(i).iter().enumerate() {
                    if c != 0 {
                        w[j / 64] |= 1u64 << (j % 64);
                    }
                }
                w
            })
            .collect();
        let mut acc = vec![0u64; words];
        for m in 1u64..(1u64 << self.k) {
            let j = m.trailing_zeros() as usize;
            for (a, b) in acc.iter_mut().zip(packed[j].iter()) {
                *a ^= b;
            }
            let w: u32 = acc.iter().map(|x| x.count_ones()).sum();
            hist[w as usize] += 1;
        }
    }

    fn enumerate_general(&self, total: u64, hist: &mut [u64]) {
        let f = &self.field;
        let q = f.order();
        let char2 = f.characteristic() == 2;
        // scaled[i][d] = d * row_i, so an odometer step is one row add
        let scaled: Vec<Vec<Vec<u16>>> = (0..self.k)
            .map(|i| {
                (0..q)
                    .map(|d| {
                        self.gen
                            .row(i)
                            .iter()
                            .map(|&c| f.mul(d as u16, c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut digits = vec![0u16; self.k];
        let mut acc = vec![0u16; self.n];
        for _ in 1..total {
            let mut i = 0usize;
            loop {
                let old = digits[i];
                let new = if old as u32 + 1 == q { 0 } else { old + 1 };
                digits[i] = new;
                let delta = f.sub(new, old);
                let srow = &scaled[i][delta as usize];
                if char2 {
                    for (a, b) in acc.iter_mut().zip(srow.iter()) {
                        *a ^= b;
                    }
                } else {
                    for (a, &b) in acc.iter_mut().zip(srow.iter()) {
                        *a = f.add(*a, b);
                    }
                }
                if new != 0 {
                    break;
                }
                i += 1;
            }
            let w = acc.iter().filter(|&&c| c != 0).count();
            hist[w] += 1;
        }
    }

    /// Exact minimum nonzero weight by exhaustive enumeration.
    pub fn min_distance(&self, cap: u64) -> Result<usize, CodeError> {
        if self.k == 0 {
            return Err(CodeError::ZeroDimensional);
        }
        let hist = self.weight_distribution(cap)?;
        Ok(hist
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
            .expect("nonzero code has a nonzero word"))
    }

    /// Formally self-dual: identical weight distribution as the flavor dual.
    /// n = 2k is a cheap necessary condition checked first.
    pub fn is_fsd(&self, flavor: Flavor, cap: u64) -> Result<bool, CodeError> {
        if self.n != 2 * self.k {
            return Ok(false);
        }
        let dual = self.dual(flavor)?;
        Ok(self.weight_distribution(cap)? == dual.weight_distribution(cap)?)
    }

    /// Binary even-like test: every generator row has even weight, which
    /// suffices by linearity over GF(2).
    pub fn is_even_like(&self) -> Result<bool, CodeError> {
        if self.field.order() != 2 {
            return Err(CodeError::NotBinary);
        }
        Ok((0..self.k).all(|i| self.gen.row(i).iter().filter(|&&c| c != 0).count() % 2 == 0))
    }

    /// The code generated by G * P for a column permutation P. Hull dimensions
    /// are invariant under permutation equivalence and asserted to match.
    pub fn apply_permutation(&self, perm: &[usize]) -> Result<LinearCode, CodeError> {
        let permuted = LinearCode::from_generator(&self.gen.permute_cols(perm)?);
        if permuted.hull_dim(Flavor::Euclidean)? != self.hull_dim(Flavor::Euclidean)? {
            return Err(CodeError::InternalCrossCheck(
                "euclidean hull changed under permutation".into(),
            ));
        }
        if self.field.has_hermitian()
            && permuted.hull_dim(Flavor::Hermitian)? != self.hull_dim(Flavor::Hermitian)?
        {
            return Err(CodeError::InternalCrossCheck(
                "hermitian hull changed under permutation".into(),
            ));
        }
        Ok(permuted)
    }
}

/// Griesmer length bound: sum_{i<k} ceil(d / q^i).
pub fn griesmer_bound(q: u32, k: usize, d: usize) -> u64 {
    assert!(k >= 1 && d >= 1);
    let mut bound = 0u64;
    let mut power: u128 = 1;
    for _ in 0..k {
        bound += ((d as u128).div_ceil(power)) as u64;
        power = power.saturating_mul(q as u128);
    }
    bound
}

/// How the reported minimum distance was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", content = "value", rename_all = "kebab-case")]
pub enum DistanceInfo {
    /// Enumerated over every nonzero codeword.
    ExactEnumerated(usize),
    /// Carried by the construction; not confirmed by enumeration.
    DesignValue(usize),
    /// Not computable within the budget.
    Unknown(String),
}

impl DistanceInfo {
    pub fn known(&self) -> Option<usize> {
        match self {
            DistanceInfo::ExactEnumerated(d) | DistanceInfo::DesignValue(d) => Some(*d),
            DistanceInfo::Unknown(_) => None,
        }
    }
    pub fn exact(&self) -> Option<usize> {
        match self {
            DistanceInfo::ExactEnumerated(d) => Some(*d),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportFlags {
    pub lcd_e: bool,
    pub so_e: bool,
    pub sd_e: bool,
    pub almost_so_e: bool,
    pub almost_sd_e: bool,
    pub lcd_h: Option<bool>,
    pub so_h: Option<bool>,
    pub sd_h: Option<bool>,
    pub fsd_e: Option<bool>,
    pub fsd_h: Option<bool>,
    pub even_like: Option<bool>,
    pub odd_like: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GriesmerReport {
    pub bound: u64,
    /// Only asserted when the distance is exact.
    pub meets: Option<bool>,
}

/// Classification certificate for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub distance: DistanceInfo,
    pub hull_e: usize,
    pub hull_h: Option<usize>,
    pub flags: ReportFlags,
    pub griesmer: Option<GriesmerReport>,
}

impl CodeReport {
    pub fn params(&self) -> (u32, usize, usize, Option<usize>) {
        (self.q, self.n, self.k, self.distance.known())
    }
}

/// Classify a code within the enumeration budget. LCD/SO come from the
/// nonsingular/zero Gram matrix criteria and are cross-checked against the
/// hull dimensions; budget overruns degrade to unknown fields, never errors.
pub fn classify(code: &LinearCode, cap: u64) -> Result<CodeReport, CodeError> {
    classify_with_design(code, cap, None)
}

/// Like [`classify`], with a design distance carried by a construction.
/// When enumeration is affordable the two must agree; beyond the budget the
/// design value is reported as such.
pub fn classify_with_design(
    code: &LinearCode,
    cap: u64,
    design: Option<usize>,
) -> Result<CodeReport, CodeError> {
    let field = code.field();
    let distance = if code.dim() == 0 {
        DistanceInfo::Unknown("zero-dimensional code".into())
    } else {
        match code.min_distance(cap) {
            Ok(d) => {
                if let Some(dv) = design {
                    if dv != d {
                        return Err(CodeError::InternalCrossCheck(format!(
                            "design distance {} disagrees with enumerated {}",
                            dv, d
                        )));
                    }
                }
                DistanceInfo::ExactEnumerated(d)
            }
            Err(CodeError::BudgetExceeded { words, cap }) => match design {
                Some(dv) => DistanceInfo::DesignValue(dv),
                None => DistanceInfo::Unknown(format!(
                    "enumeration needs {} codewords, cap {}",
                    words, cap
                )),
            },
            Err(e) => return Err(e),
        }
    };

    let k = code.dim();
    let hull_e = code.hull_dim(Flavor::Euclidean)?;
    let gram_e = code.gram(Flavor::Euclidean)?;
    let so_e = gram_e.is_zero();
    let lcd_e = gram_e.rank() == k;
    if so_e != (hull_e == k) || lcd_e != (hull_e == 0) {
        return Err(CodeError::InternalCrossCheck(
            "gram criteria disagree with euclidean hull".into(),
        ));
    }

    let (hull_h, so_h, lcd_h) = if field.has_hermitian() {
        let hull = code.hull_dim(Flavor::Hermitian)?;
        let gram = code.gram(Flavor::Hermitian)?;
        let so = gram.is_zero();
        let lcd = gram.rank() == k;
        if so != (hull == k) || lcd != (hull == 0) {
            return Err(CodeError::InternalCrossCheck(
                "gram criteria disagree with hermitian hull".into(),
            ));
        }
        (Some(hull), Some(so), Some(lcd))
    } else {
        (None, None, None)
    };

    let affordable_fsd = code.codeword_count_capped(cap).is_some()
        && LinearCode::from_generator(&code.generator().kernel())
            .codeword_count_capped(cap)
            .is_some();
    let fsd_e = if affordable_fsd {
        Some(code.is_fsd(Flavor::Euclidean, cap)?)
    } else {
        None
    };
    let fsd_h = if affordable_fsd && field.has_hermitian() {
        Some(code.is_fsd(Flavor::Hermitian, cap)?)
    } else {
        None
    };

    let (even_like, odd_like) = if field.order() == 2 {
        let e = code.is_even_like()?;
        (Some(e), Some(!e))
    } else {
        (None, None)
    };

    let griesmer = match (distance.known(), k) {
        (Some(d), k) if k >= 1 && d >= 1 => {
            let bound = griesmer_bound(field.order(), k, d);
            let meets = distance.exact().map(|_| bound == code.len() as u64);
            Some(GriesmerReport { bound, meets })
        }
        _ => None,
    };

    Ok(CodeReport {
        q: field.order(),
        n: code.len(),
        k,
        distance,
        hull_e,
        hull_h,
        flags: ReportFlags {
            lcd_e,
            so_e,
            sd_e: so_e && code.len() == 2 * k,
            almost_so_e: k >= 1 && hull_e == k - 1,
            almost_sd_e: k >= 1 && hull_e == k - 1 && code.len() == 2 * k,
            lcd_h,
            so_h,
            sd_h: so_h.map(|so| so && code.len() == 2 * k),
            fsd_e,
            fsd_h,
            even_like,
            odd_like,
        },
        griesmer,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::field::Field;
    use crate::rng::SplitMix64;

    fn gf(q: u32) -> FieldRef {
        Field::of_order(q, None).unwrap()
    }

    /// The two quaternary generators used across the crate's reproduction
    /// suite: C = [6,2,3]_4 Hermitian LCD, D = [6,2,4]_4 Hermitian SO.
    pub(crate) fn quaternary_pair() -> (LinearCode, LinearCode) {
        let f = gf(4);
        let g1 = Matrix::from_rows(&f, &[vec![1, 0, 2, 0, 1, 2], vec![0, 1, 0, 3, 0, 2]]);
        let g2 = Matrix::from_rows(&f, &[vec![1, 0, 1, 0, 2, 2], vec![0, 1, 0, 1, 2, 2]]);
        (
            LinearCode::from_generator(&g1),
            LinearCode::from_generator(&g2),
        )
    }

    #[test]
    fn canonical_generators_identify_codes() {
        let f = gf(4);
        let g = Matrix::from_rows(&f, &[vec![1, 0, 2, 0, 1, 2], vec![0, 1, 0, 3, 0, 2]]);
        let c1 = LinearCode::from_generator(&g);
        // row-equivalent generator: swap rows, scale one by w, add the other
        let r0: Vec<u16> = g.row(1).to_vec();
        let r1: Vec<u16> = g
            .row(0)
            .iter()
            .zip(g.row(1))
            .map(|(&a, &b)| f.add(f.mul(2, a), b))
            .collect();
        let c2 = LinearCode::from_generator(&Matrix::from_rows(&f, &[r0, r1]));
        assert_eq!(c1, c2);
        assert_eq!(c1.dim(), 2);
        assert_eq!(c1.len(), 6);
    }

    #[test]
    fn quaternary_pair_analysis() {
        let (c, d) = quaternary_pair();
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 3);
        assert_eq!(d.min_distance(DEFAULT_CAP).unwrap(), 4);

        let cd = c.dual_hermitian().unwrap();
        let dd = d.dual_hermitian().unwrap();
        assert_eq!((cd.len(), cd.dim()), (6, 4));
        assert_eq!(cd.min_distance(DEFAULT_CAP).unwrap(), 2);
        assert_eq!(dd.min_distance(DEFAULT_CAP).unwrap(), 2);

        assert_eq!(c.hull_dim(Flavor::Hermitian).unwrap(), 0);
        assert_eq!(cd.hull_dim(Flavor::Hermitian).unwrap(), 0);
        assert_eq!(d.hull_dim(Flavor::Hermitian).unwrap(), 2);
        assert_eq!(dd.hull_dim(Flavor::Hermitian).unwrap(), 2);

        assert_eq!(c.intersection_dim(&dd).unwrap(), 0);
        assert_eq!(cd.intersection_dim(&dd).unwrap(), 2);
        let inter = cd.intersect(&dd).unwrap();
        assert_eq!(inter.dim(), 2);
        assert_eq!(inter.min_distance(DEFAULT_CAP).unwrap(), 3);

        // D is Hermitian self-orthogonal: G2 G2^dagger = 0
        assert!(d.gram(Flavor::Hermitian).unwrap().is_zero());

        let rc = classify(&c, DEFAULT_CAP).unwrap();
        assert_eq!(rc.flags.lcd_h, Some(true));
        let rd = classify(&d, DEFAULT_CAP).unwrap();
        assert_eq!(rd.flags.so_h, Some(true));
        assert_eq!(rd.hull_h, Some(2));
    }

    #[test]
    fn dual_involution_and_zero_cases() {
        let (c, _) = quaternary_pair();
        assert_eq!(c.dual_hermitian().unwrap().dual_hermitian().unwrap(), c);
        let f = gf(2);
        let full = LinearCode::from_generator(&Matrix::identity(&f, 4));
        let zero = full.dual_euclidean();
        assert_eq!(zero.dim(), 0);
        assert_eq!(zero.dual_euclidean(), full);
    }

    #[test]
    fn cross_rank_identities() {
        let (c, d) = quaternary_pair();
        assert_eq!(c.cross_rank(&d, Flavor::Hermitian).unwrap(), 2);
        assert_eq!(
            c.cross_rank(&c, Flavor::Hermitian).unwrap(),
            c.dim() - c.hull_dim(Flavor::Hermitian).unwrap()
        );
        let cd = c.dual_hermitian().unwrap();
        assert_eq!(c.cross_rank(&cd, Flavor::Hermitian).unwrap(), 0);
    }

    #[test]
    fn repetition_distance_and_weights() {
        for n in 1..=6usize {
            let f = gf(3);
            let g = Matrix::from_rows(&f, &[vec![1u16; n]]);
            let code = LinearCode::from_generator(&g);
            assert_eq!(code.min_distance(DEFAULT_CAP).unwrap(), n);
        }
        let f = gf(2);
        let rep2 = LinearCode::from_generator(&Matrix::from_rows(&f, &[vec![1, 1]]));
        let wd = rep2.weight_distribution(DEFAULT_CAP).unwrap();
        assert_eq!(wd, vec![1, 0, 1]);
        let report = classify(&rep2, DEFAULT_CAP).unwrap();
        assert!(report.flags.sd_e);
        assert_eq!(report.flags.even_like, Some(true));
    }

    #[test]
    fn weight_distribution_counts_all_words() {
        let mut rng = SplitMix64::new(5);
        for q in [2u32, 3, 4, 8] {
            let f = gf(q);
            let g = Matrix::from_fn(&f, 3, 7, |_, _| rng.elt(q));
            let code = LinearCode::from_generator(&g);
            let wd = code.weight_distribution(DEFAULT_CAP).unwrap();
            assert_eq!(
                wd.iter().sum::<u64>(),
                (q as u64).pow(code.dim() as u32)
            );
        }
    }

    #[test]
    fn min_distance_matches_pairwise_oracle() {
        // brute-force oracle: minimum over all pairwise differences of a
        // direct codeword listing, independent of the enumeration path
        fn oracle(code: &LinearCode) -> usize {
            let f = code.field();
            let q = f.order() as u64;
            let k = code.dim();
            let mut words: Vec<Vec<u16>> = Vec::new();
            for m in 0..q.pow(k as u32) {
                let mut digits = m;
                let mut word = vec![0u16; code.len()];
                for i in 0..k {
                    let d = (digits % q) as u16;
                    digits /= q;
                    for (w, &g) in word.iter_mut().zip(code.generator().row(i)) {
                        *w = f.add(*w, f.mul(d, g));
                    }
                }
                words.push(word);
            }
            let mut best = usize::MAX;
            for i in 0..words.len() {
                for j in 0..i {
                    let dist = words[i]
                        .iter()
                        .zip(&words[j])
                        .filter(|(a, b)| a != b)
                        .count();
                    best = best.min(dist);
                }
            }
            best
        }
        let mut rng = SplitMix64::new(99);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for _ in 0..8 {
                let g = Matrix::from_fn(&f, 3, 8, |_, _| rng.elt(q));
                let code = LinearCode::from_generator(&g);
                if code.dim() == 0 {
                    continue;
                }
                assert_eq!(code.min_distance(DEFAULT_CAP).unwrap(), oracle(&code));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = gf(2);
        let g = Matrix::identity(&f, 30);
        let code = LinearCode::from_generator(&g);
        assert!(matches!(
            code.min_distance(1 << 10),
            Err(CodeError::BudgetExceeded { .. })
        ));
        let r = classify(&code, 1 << 10).unwrap();
        assert!(matches!(r.distance, DistanceInfo::Unknown(_)));
    }

    #[test]
    fn fsd_checks() {
        let f = gf(2);
        // self-dual implies FSD
        let sd = LinearCode::from_generator(&Matrix::from_rows(&f, &[vec![1, 1]]));
        assert!(sd.is_fsd(Flavor::Euclidean, DEFAULT_CAP).unwrap());
        // span{1010, 0110} has weights {0,2,2,2}; its dual {(a,a,a,b)} has
        // weights {0,3,1,4} pattern - distributions differ
        let not_fsd = LinearCode::from_generator(&Matrix::from_rows(
            &f,
            &[vec![1, 0, 1, 0], vec![0, 1, 1, 0]],
        ));
        assert!(!not_fsd.is_fsd(Flavor::Euclidean, DEFAULT_CAP).unwrap());
        // wrong rate is rejected without enumeration
        let rect = LinearCode::from_generator(&Matrix::from_rows(&f, &[vec![1, 0, 0]]));
        assert!(!rect.is_fsd(Flavor::Euclidean, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn even_like_rules() {
        let f = gf(2);
        let rep3 = LinearCode::from_generator(&Matrix::from_rows(&f, &[vec![1, 1, 1]]));
        assert!(!rep3.is_even_like().unwrap());
        let even4 = LinearCode::from_generator(&Matrix::from_rows(
            &f,
            &[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]],
        ));
        assert!(even4.is_even_like().unwrap());
        let f3 = gf(3);
        let c3 = LinearCode::from_generator(&Matrix::identity(&f3, 2));
        assert_eq!(c3.is_even_like().unwrap_err(), CodeError::NotBinary);
    }

    #[test]
    fn griesmer_values() {
        assert_eq!(griesmer_bound(2, 3, 3), 6);
        for (q, d) in [(2u32, 5usize), (3, 4), (4, 9)] {
            assert_eq!(griesmer_bound(q, 1, d), d as u64);
        }
        for t in 1..=10u32 {
            assert_eq!(
                griesmer_bound(2, t as usize + 1, (1 << t) - 1),
                (1u64 << (t + 1)) - 2
            );
        }
    }

    #[test]
    fn permutation_preserves_hull_and_distance() {
        let (_, d) = quaternary_pair();
        let mut rng = SplitMix64::new(17);
        let base_dist = d.min_distance(DEFAULT_CAP).unwrap();
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..d.len()).collect();
            rng.shuffle(&mut perm);
            let pd = d.apply_permutation(&perm).unwrap();
            assert_eq!(pd.hull_dim(Flavor::Hermitian).unwrap(), 2);
            assert_eq!(pd.min_distance(DEFAULT_CAP).unwrap(), base_dist);
        }
    }

    #[test]
    fn hull_equals_dual_hull() {
        let mut rng = SplitMix64::new(41);
        for q in [2u32, 3, 4] {
            let f = gf(q);
            for _ in 0..30 {
                let g = Matrix::from_fn(&f, 3, 6, |_, _| rng.elt(q));
                let c = LinearCode::from_generator(&g);
                let dual = c.dual_euclidean();
                assert_eq!(
                    c.hull_dim(Flavor::Euclidean).unwrap(),
                    dual.hull_dim(Flavor::Euclidean).unwrap()
                );
                if f.has_hermitian() {
                    let dh = c.dual_hermitian().unwrap();
                    assert_eq!(
                        c.hull_dim(Flavor::Hermitian).unwrap(),
                        dh.hull_dim(Flavor::Hermitian).unwrap()
                    );
                }
            }
        }
    }
}
