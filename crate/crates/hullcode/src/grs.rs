//! Generalized Reed-Solomon codes: Vandermonde-with-multipliers generators,
//! explicit Euclidean/Hermitian dual multipliers, degree nesting, and the
//! deterministic self-orthogonal GRS constructions used by the bundled
//! reproduction tables.
//!
//! Every self-orthogonality claim is re-verified on the constructed matrices
//! (the Gram matrix must vanish exactly); the closed-form scalars are never
//! trusted blindly.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::code::{CodeError, Flavor, LinearCode};
use crate::field::{Field, FieldError, FieldRef};
use crate::matrix::{Matrix, MatrixError};
use crate::rng::SplitMix64;

#[derive(Debug, Error)]
pub enum GrsError {
    #[error("evaluation points must be distinct")]
    DuplicatePoints,
    #[error("column scalars must be nonzero")]
    ZeroScalar,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("closed-form duals are not defined for extended specs")]
    ExtendedNotSupported,
    #[error("self-check failed: {0}")]
    SelfCheckFailed(String),
    #[error("subcode search exhausted: {0}")]
    SearchExhausted(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// One evaluation point: a field element, or the point at infinity whose
/// column carries the top polynomial coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrsPoint {
    Finite(u16),
    Infinity,
}

impl Serialize for GrsPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GrsPoint::Finite(c) => s.serialize_u16(*c),
            GrsPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for GrsPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = GrsPoint;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "an element code or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<GrsPoint, E> {
                u16::try_from(v)
                    .map(GrsPoint::Finite)
                    .map_err(|_| E::custom("point code out of range"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<GrsPoint, E> {
                if v == "inf" {
                    Ok(GrsPoint::Infinity)
                } else {
                    Err(E::custom("expected \"inf\""))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// GRS_k(a, v): evaluations of polynomials of degree < k at the points `a`,
/// scaled columnwise by `v`. Fields are reconstructed from `q` with the
/// pinned default modulus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrsSpec {
    pub q: u32,
    pub points: Vec<GrsPoint>,
    pub scalars: Vec<u16>,
    pub k: usize,
}

impl GrsSpec {
    pub fn new(
        q: u32,
        points: Vec<GrsPoint>,
        scalars: Vec<u16>,
        k: usize,
    ) -> Result<GrsSpec, GrsError> {
        let spec = GrsSpec {
            q,
            points,
            scalars,
            k,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn extended(&self) -> bool {
        self.points.iter().any(|p| matches!(p, GrsPoint::Infinity))
    }

    /// MDS design distance n - k + 1.
    pub fn design_distance(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn field(&self) -> Result<FieldRef, GrsError> {
        Ok(Field::of_order(self.q, None)?)
    }

    fn validate(&self) -> Result<(), GrsError> {
        let n = self.n();
        let mut finite: Vec<u16> = Vec::new();
        let mut inf_count = 0usize;
        for (i, p) in self.points.iter().enumerate() {
            match p {
                GrsPoint::Finite(c) => finite.push(*c),
                GrsPoint::Infinity => {
                    inf_count += 1;
                    if i != n - 1 {
                        return Err(GrsError::ParameterOutOfRange(
                            "the infinity point must be last".into(),
                        ));
                    }
                }
            }
        }
        let mut sorted = finite.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != finite.len() || inf_count > 1 {
            return Err(GrsError::DuplicatePoints);
        }
        if self.scalars.len() != n || self.scalars.iter().any(|&v| v == 0) {
            return Err(GrsError::ZeroScalar);
        }
        if self.k < 1 || self.k > n {
            return Err(GrsError::ParameterOutOfRange(format!(
                "k = {} outside 1..={}",
                self.k, n
            )));
        }
        let max_n = self.q as usize + usize::from(inf_count > 0);
        if n < 2 || n > max_n {
            return Err(GrsError::ParameterOutOfRange(format!(
                "n = {} outside 2..={}",
                n, max_n
            )));
        }
        Ok(())
    }

    /// The Vandermonde-with-multipliers generator matrix; the infinity column
    /// is (0, ..., 0, v_inf)^T, carrying the coefficient of x^(k-1).
    pub fn generator(&self) -> Result<Matrix, GrsError> {
        let f = self.field()?;
        let gen = Matrix::from_fn(&f, self.k, self.n(), |i, j| match self.points[j] {
            GrsPoint::Finite(a) => f.mul(self.scalars[j], f.pow(a, i as u64)),
            GrsPoint::Infinity => {
                if i == self.k - 1 {
                    self.scalars[j]
                } else {
                    0
                }
            }
        });
        Ok(gen)
    }

    pub fn code(&self) -> Result<LinearCode, GrsError> {
        self.validate()?;
        let code = LinearCode::from_generator(&self.generator()?);
        if code.dim() != self.k {
            return Err(GrsError::SelfCheckFailed(format!(
                "generator rank {} != k = {}",
                code.dim(),
                self.k
            )));
        }
        Ok(code)
    }

    /// Same points and scalars, different dimension.
    pub fn with_k(&self, k: usize) -> Result<GrsSpec, GrsError> {
        GrsSpec::new(self.q, self.points.clone(), self.scalars.clone(), k)
    }

    fn finite_points(&self) -> Vec<u16> {
        self.points
            .iter()
            .filter_map(|p| match p {
                GrsPoint::Finite(c) => Some(*c),
                GrsPoint::Infinity => None,
            })
            .collect()
    }
}

fn finite_spec(q: u32, points: &[u16], scalars: Vec<u16>, k: usize) -> Result<GrsSpec, GrsError> {
    GrsSpec::new(
        q,
        points.iter().map(|&c| GrsPoint::Finite(c)).collect(),
        scalars,
        k,
    )
}

/// u_i = (prod_{j != i} (a_i - a_j))^{-1}: the column multipliers of the dual
/// of the [n, n-1] code with unit scalars.
fn dual_multipliers(f: &FieldRef, points: &[u16]) -> Result<Vec<u16>, GrsError> {
    let mut out = Vec::with_capacity(points.len());
    for (i, &ai) in points.iter().enumerate() {
        let mut prod = 1u16;
        for (j, &aj) in points.iter().enumerate() {
            if i != j {
                prod = f.mul(prod, f.sub(ai, aj));
            }
        }
        out.push(f.inv(prod)?);
    }
    Ok(out)
}

/// Euclidean dual of a non-extended spec: GRS_{n-k}(a, v') with
/// v'_i = (v_i * prod_{j != i} (a_i - a_j))^{-1}. The orthogonality
/// G (G')^T = 0 is asserted on the materialized matrices.
pub fn grs_dual_euclidean(spec: &GrsSpec) -> Result<GrsSpec, GrsError> {
    if spec.extended() {
        return Err(GrsError::ExtendedNotSupported);
    }
    if spec.k >= spec.n() {
        return Err(GrsError::ParameterOutOfRange(
            "dual spec needs k < n".into(),
        ));
    }
    let f = spec.field()?;
    let points = spec.finite_points();
    let u = dual_multipliers(&f, &points)?;
    let scalars: Vec<u16> = spec
        .scalars
        .iter()
        .zip(u.iter())
        .map(|(&v, &ui)| f.div(ui, v))
        .collect::<Result<_, _>>()?;
    let dual = finite_spec(spec.q, &points, scalars, spec.n() - spec.k)?;
    let gram = spec.code()?.gram_with(&dual.code()?, Flavor::Euclidean)?;
    if !gram.is_zero() {
        return Err(GrsError::SelfCheckFailed("euclidean dual gram".into()));
    }
    Ok(dual)
}

/// Hermitian dual of a non-extended spec: the Euclidean dual of
/// GRS_k(a^q0, v^q0), where q0 is the base subfield order. Asserts
/// G (G')^dagger = 0.
pub fn grs_dual_hermitian(spec: &GrsSpec) -> Result<GrsSpec, GrsError> {
    if spec.extended() {
        return Err(GrsError::ExtendedNotSupported);
    }
    let f = spec.field()?;
    if !f.has_hermitian() {
        return Err(FieldError::NoHermitianStructure.into());
    }
    let e = f.degree() / 2;
    let points: Vec<u16> = spec
        .finite_points()
        .iter()
        .map(|&a| f.frobenius(a, e))
        .collect();
    let scalars: Vec<u16> = spec.scalars.iter().map(|&v| f.frobenius(v, e)).collect();
    let conj = finite_spec(spec.q, &points, scalars, spec.k)?;
    let dual = grs_dual_euclidean(&conj)?;
    let gram = spec.code()?.gram_with(&dual.code()?, Flavor::Hermitian)?;
    if !gram.is_zero() {
        return Err(GrsError::SelfCheckFailed("hermitian dual gram".into()));
    }
    Ok(dual)
}

/// GRS_{k1} is contained in GRS_{k2} over shared (a, v) iff k1 <= k2;
/// computed by row-reduction membership and asserted against the degree rule.
pub fn grs_nested(spec: &GrsSpec, k1: usize, k2: usize) -> Result<bool, GrsError> {
    let c1 = spec.with_k(k1)?.code()?;
    let c2 = spec.with_k(k2)?.code()?;
    let contained = c1
        .generator()
        .row_space_contained_in(c2.generator())?;
    if contained != (k1 <= k2) {
        return Err(GrsError::SelfCheckFailed("nesting vs degree rule".into()));
    }
    Ok(contained)
}

/// Euclidean self-orthogonal [n, k, n-k+1] GRS code over GF(2^m), m >= 2,
/// for 3 < n <= q and k <= floor(n/2): points are the first n field elements,
/// v_i = sqrt(u_i). G G^T = 0 is asserted.
pub fn grs_so_euclidean(field: &FieldRef, n: usize, k: usize) -> Result<GrsSpec, GrsError> {
    if field.characteristic() != 2 || field.order() < 4 {
        return Err(GrsError::ParameterOutOfRange(
            "needs a binary extension field of order >= 4".into(),
        ));
    }
    if n <= 3 || n > field.order() as usize {
        return Err(GrsError::ParameterOutOfRange(format!(
            "n = {} outside 4..={}",
            n,
            field.order()
        )));
    }
    if k < 1 || k > n / 2 {
        return Err(GrsError::ParameterOutOfRange(format!(
            "k = {} outside 1..={}",
            k,
            n / 2
        )));
    }
    let points: Vec<u16> = (0..n as u16).collect();
    let u = dual_multipliers(field, &points)?;
    let scalars: Vec<u16> = u
        .iter()
        .map(|&ui| field.sqrt_char2(ui))
        .collect::<Result<_, _>>()?;
    let spec = finite_spec(field.order(), &points, scalars, k)?;
    if !spec.code()?.gram(Flavor::Euclidean)?.is_zero() {
        return Err(GrsError::SelfCheckFailed("euclidean SO gram".into()));
    }
    Ok(spec)
}

/// Hermitian self-orthogonal [n, k, n-k+1] GRS code over GF(q0^2) with
/// q0 = 2^m >= 4, for n <= q0 and k <= floor(n/2): points are the first n
/// subfield elements, v_i solves the norm equation v^(q0+1) = u_i.
/// G G^dagger = 0 is asserted.
pub fn grs_so_hermitian(field: &FieldRef, n: usize, k: usize) -> Result<GrsSpec, GrsError> {
    let sub_q = field
        .sub_order()
        .ok_or(FieldError::NoHermitianStructure)? as usize;
    if field.characteristic() != 2 || sub_q < 4 {
        return Err(GrsError::ParameterOutOfRange(
            "needs characteristic 2 with base subfield of order >= 4".into(),
        ));
    }
    if n < 2 || n > sub_q {
        return Err(GrsError::ParameterOutOfRange(format!(
            "n = {} outside 2..={}",
            n, sub_q
        )));
    }
    if k < 1 || k > n / 2 {
        return Err(GrsError::ParameterOutOfRange(format!(
            "k = {} outside 1..={}",
            k,
            n / 2
        )));
    }
    let subfield = field.subfield_elements()?;
    let points: Vec<u16> = subfield[..n].to_vec();
    let u = dual_multipliers(field, &points)?;
    let scalars: Vec<u16> = u
        .iter()
        .map(|&ui| field.norm_solve(ui))
        .collect::<Result<_, _>>()?;
    let spec = finite_spec(field.order(), &points, scalars, k)?;
    if !spec.code()?.gram(Flavor::Hermitian)?.is_zero() {
        return Err(GrsError::SelfCheckFailed("hermitian SO gram".into()));
    }
    Ok(spec)
}

fn extended_all_points_spec(field: &FieldRef, k: usize) -> Result<GrsSpec, GrsError> {
    let q2 = field.order() as usize;
    let mut points: Vec<GrsPoint> = (0..q2 as u16).map(GrsPoint::Finite).collect();
    points.push(GrsPoint::Infinity);
    GrsSpec::new(field.order(), points, vec![1u16; q2 + 1], k)
}

/// Hermitian self-orthogonal [q0^2+1, q0, q0^2-q0+2] extended GRS code:
/// all field elements plus infinity, unit scalars, dimension q0.
/// G G^dagger = 0 is asserted.
pub fn grs_so_hermitian_extended(field: &FieldRef) -> Result<GrsSpec, GrsError> {
    let sub_q = field
        .sub_order()
        .ok_or(FieldError::NoHermitianStructure)? as usize;
    if field.characteristic() != 2 || sub_q < 4 {
        return Err(GrsError::ParameterOutOfRange(
            "needs characteristic 2 with base subfield of order >= 4".into(),
        ));
    }
    let spec = extended_all_points_spec(field, sub_q)?;
    if !spec.code()?.gram(Flavor::Hermitian)?.is_zero() {
        return Err(GrsError::SelfCheckFailed("extended hermitian SO gram".into()));
    }
    Ok(spec)
}

/// The Hermitian dual of the extended all-points code, expressed as an
/// extended GRS spec again: evaluation points get the subfield Frobenius
/// applied and the dimension flips to q0^2+1-q0. The spec is cross-checked
/// against the kernel-computed dual.
pub fn extended_hermitian_dual_spec(field: &FieldRef) -> Result<GrsSpec, GrsError> {
    let sub_q = field
        .sub_order()
        .ok_or(FieldError::NoHermitianStructure)? as usize;
    let q2 = field.order() as usize;
    let m = q2 + 1 - sub_q;
    let e = field.degree() / 2;
    let mut points: Vec<GrsPoint> = (0..q2 as u16)
        .map(|x| GrsPoint::Finite(field.frobenius(x, e)))
        .collect();
    points.push(GrsPoint::Infinity);
    let dual_spec = GrsSpec::new(field.order(), points, vec![1u16; q2 + 1], m)?;
    let primal = extended_all_points_spec(field, sub_q)?.code()?;
    if dual_spec.code()? != primal.dual_hermitian()? {
        return Err(GrsError::SelfCheckFailed(
            "extended dual spec disagrees with kernel dual".into(),
        ));
    }
    Ok(dual_spec)
}

fn eval_poly(f: &FieldRef, coeffs: &[u16], x: u16) -> u16 {
    let mut acc = 0u16;
    for &c in coeffs.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// First monic polynomial of the given degree with no roots in the field,
/// scanning lower-coefficient codes in increasing order. Such polynomials
/// exist for every degree except 1.
fn first_root_free_monic(f: &FieldRef, degree: usize) -> Result<Vec<u16>, GrsError> {
    if degree == 0 {
        return Ok(vec![1]);
    }
    if degree == 1 {
        return Err(GrsError::ParameterOutOfRange(
            "every monic linear polynomial has a root".into(),
        ));
    }
    let q = f.order() as u64;
    // root-free monics have density about (1-1/q)^q, so a bounded prefix of
    // the code-order scan always finds one long before this limit
    let total = q
        .checked_pow(degree as u32)
        .unwrap_or(u64::MAX)
        .min(1 << 20);
    for counter in 0..total {
        let mut coeffs = vec![0u16; degree + 1];
        let mut rest = counter;
        for c in coeffs.iter_mut().take(degree) {
            *c = (rest % q) as u16;
            rest /= q;
        }
        coeffs[degree] = 1;
        if f.elements().all(|x| eval_poly(f, &coeffs, x) != 0) {
            return Ok(coeffs);
        }
    }
    unreachable!("root-free polynomials of degree >= 2 always exist")
}

/// MDS subcodes of the dual D of the extended all-points Hermitian SO code.
///
/// D consists of the words (g(b_x), g_{m-1}) for deg g <= m-1 over the
/// Frobenius-permuted points b. Three regimes produce a k1-dimensional
/// subcode with design distance q0^2+2-k1:
///
/// * k1 = m: D itself (dual of an MDS code is MDS).
/// * k1 <= m-2: rows W(b) * b^i with W a root-free monic polynomial of
///   degree m-k1, plus the top-coefficient infinity column. W*f stays in D
///   and the nonvanishing multiplier yields the MDS weight bound.
/// * k1 = m-1: a seeded hyperplane search over subspaces of D that avoids
///   every low-weight word; no closed form is known for this slot.
///
/// Returns the subcode and its certified design distance.
pub fn extended_nested_subcode(
    field: &FieldRef,
    k1: usize,
    seed: u64,
    budget: u64,
) -> Result<(LinearCode, usize), GrsError> {
    let sub_q = field
        .sub_order()
        .ok_or(FieldError::NoHermitianStructure)? as usize;
    let q2 = field.order() as usize;
    let m = q2 + 1 - sub_q;
    if k1 < 1 || k1 > m {
        return Err(GrsError::ParameterOutOfRange(format!(
            "k1 = {} outside 1..={}",
            k1, m
        )));
    }
    let design = q2 + 2 - k1;
    let dual_spec = extended_hermitian_dual_spec(field)?;
    let dual_code = dual_spec.code()?;
    if k1 == m {
        return Ok((dual_code, design));
    }

    let bpoints: Vec<u16> = dual_spec.finite_points();
    let gen = if m - k1 >= 2 {
        let w = first_root_free_monic(field, m - k1)?;
        Matrix::from_fn(field, k1, q2 + 1, |i, j| {
            if j < q2 {
                let b = bpoints[j];
                field.mul(eval_poly(field, &w, b), field.pow(b, i as u64))
            } else {
                u16::from(i == k1 - 1)
            }
        })
    } else {
        // k1 = m-1
        let coeff_basis = hyperplane_search(field, m, seed, budget).ok_or_else(|| {
            GrsError::SearchExhausted(format!(
                "no [{}, {}, {}] subcode of the extended dual found within {} search steps",
                q2 + 1,
                k1,
                design,
                budget
            ))
        })?;
        Matrix::from_fn(field, k1, q2 + 1, |i, j| {
            let g = &coeff_basis[i];
            if j < q2 {
                eval_poly(field, g, bpoints[j])
            } else {
                g[m - 1]
            }
        })
    };

    let c1 = LinearCode::from_generator(&gen);
    if c1.dim() != k1 {
        return Err(GrsError::SelfCheckFailed("subcode rank".into()));
    }
    if !gen.row_space_contained_in(dual_code.generator())? {
        return Err(GrsError::SelfCheckFailed(
            "subcode escapes the extended dual".into(),
        ));
    }
    Ok((c1, design))
}

/// Search for a hyperplane (in the coefficient space of polynomials of
/// degree <= m-1) that avoids every polynomial with m-2 or m-1 distinct
/// roots; the kernel yields an (m-1)-dimensional MDS subcode of the extended
/// dual. Seeded hill climb with random restarts; returns kernel basis
/// coefficient vectors on success.
fn hyperplane_search(
    field: &FieldRef,
    m: usize,
    seed: u64,
    budget: u64,
) -> Option<Vec<Vec<u16>>> {
    let bad = bad_coefficient_vectors(field, m);
    let q = field.order();
    let mut rng = SplitMix64::new(seed);

    let full_dots = |lam: &[u16], dots: &mut Vec<u16>| {
        dots.clear();
        for g in &bad {
            let mut acc = 0u16;
            for (&a, &b) in lam.iter().zip(g.iter()) {
                acc = field.add(acc, field.mul(a, b));
            }
            dots.push(acc);
        }
    };

    let mut lambda: Vec<u16> = (0..m).map(|_| rng.elt(q)).collect();
    if lambda.iter().all(|&c| c == 0) {
        lambda[0] = 1;
    }
    let mut dots: Vec<u16> = Vec::with_capacity(bad.len());
    full_dots(&lambda, &mut dots);
    let mut current = dots.iter().filter(|&&d| d == 0).count();
    let mut scratch: Vec<u16> = vec![0; bad.len()];

    let mut steps = 0u64;
    while steps < budget {
        if current == 0 {
            // final re-verification from scratch before trusting the climb
            full_dots(&lambda, &mut dots);
            if dots.iter().all(|&d| d != 0) {
                return Some(kernel_basis(field, &lambda));
            }
            unreachable!("incremental dots diverged from full recomputation");
        }
        steps += 1;
        let i = rng.below(m as u64) as usize;
        let old = lambda[i];
        let mut new = rng.elt(q);
        if new == old {
            new = field.add(new, 1);
        }
        let delta = field.sub(new, old);
        let mut cand = 0usize;
        for (t, g) in bad.iter().enumerate() {
            let nd = field.add(dots[t], field.mul(delta, g[i]));
            scratch[t] = nd;
            cand += usize::from(nd == 0);
        }
        // accept improvements, and sideways/worse moves occasionally
        let all_zero = lambda
            .iter()
            .enumerate()
            .all(|(j, &c)| if j == i { new == 0 } else { c == 0 });
        if !all_zero && (cand <= current || rng.below(16) == 0) {
            lambda[i] = new;
            std::mem::swap(&mut dots, &mut scratch);
            current = cand;
        }
        if steps % 8192 == 0 {
            // restart from a fresh random functional
            for c in lambda.iter_mut() {
                *c = rng.elt(q);
            }
            if lambda.iter().all(|&c| c == 0) {
                lambda[0] = 1;
            }
            full_dots(&lambda, &mut dots);
            current = dots.iter().filter(|&&d| d == 0).count();
        }
    }
    None
}

/// Monic products of m-2 and m-1 distinct linear factors, as coefficient
/// vectors of length m. These are exactly the projective representatives of
/// the low-weight words of the extended dual.
fn bad_coefficient_vectors(field: &FieldRef, m: usize) -> Vec<Vec<u16>> {
    let elements: Vec<u16> = field.elements().collect();
    let mut out = Vec::new();
    for size in [m - 2, m - 1] {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let mut poly = vec![0u16; m];
            poly[0] = 1;
            let mut deg = 0usize;
            for &idx in &subset {
                let r = elements[idx];
                // multiply by (x - r) = (x + r) in characteristic 2;
                // use the general form to stay field-agnostic
                let neg_r = field.neg(r);
                for d in (0..=deg).rev() {
                    let shifted = poly[d];
                    poly[d + 1] = field.add(poly[d + 1], shifted);
                    poly[d] = field.mul(poly[d], neg_r);
                }
                deg += 1;
            }
            out.push(poly);
            // next combination
            let n = elements.len();
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if subset[i] != i + n - size {
                    subset[i] += 1;
                    for j in i + 1..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    subset.clear();
                    break;
                }
            }
            if subset.is_empty() {
                break;
            }
        }
    }
    out
}

fn kernel_basis(field: &FieldRef, lambda: &[u16]) -> Vec<Vec<u16>> {
    let m = lambda.len();
    let pivot = (0..m)
        .rev()
        .find(|&i| lambda[i] != 0)
        .expect("lambda is nonzero");
    let inv = field.inv(lambda[pivot]).expect("pivot nonzero");
    let mut basis = Vec::with_capacity(m - 1);
    for j in 0..m {
        if j == pivot {
            continue;
        }
        let mut g = vec![0u16; m];
        g[j] = 1;
        g[pivot] = field.neg(field.mul(lambda[j], inv));
        basis.push(g);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_CAP;
    use crate::rng::SplitMix64;

    fn gf(q: u32) -> FieldRef {
        Field::of_order(q, None).unwrap()
    }

    fn random_spec(f: &FieldRef, n: usize, k: usize, rng: &mut SplitMix64) -> GrsSpec {
        let mut pool: Vec<u16> = f.elements().collect();
        rng.shuffle(&mut pool);
        let points: Vec<u16> = pool[..n].to_vec();
        let scalars: Vec<u16> = (0..n).map(|_| 1 + rng.elt(f.order() - 1)).collect();
        finite_spec(f.order(), &points, scalars, k).unwrap()
    }

    #[test]
    fn grs_basic_shapes() {
        let spec = finite_spec(4, &[0, 1, 2, 3], vec![1; 4], 1).unwrap();
        let c = spec.code().unwrap();
        assert_eq!((c.len(), c.dim()), (4, 1));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 4);

        let full = finite_spec(4, &[0, 1, 2, 3], vec![1; 4], 4).unwrap();
        let c = full.code().unwrap();
        assert_eq!((c.len(), c.dim()), (4, 4));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 1);

        let f8 = gf(8);
        let mut rng = SplitMix64::new(1);
        let spec = random_spec(&f8, 5, 2, &mut rng);
        let c = spec.code().unwrap();
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 4); // MDS: 5-2+1
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            finite_spec(4, &[0, 0, 1], vec![1; 3], 1),
            Err(GrsError::DuplicatePoints)
        ));
        assert!(matches!(
            finite_spec(4, &[0, 1, 2], vec![1, 0, 1], 1),
            Err(GrsError::ZeroScalar)
        ));
        assert!(matches!(
            finite_spec(4, &[0, 1, 2], vec![1; 3], 4),
            Err(GrsError::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn euclid_dual_matches_kernel_oracle() {
        let mut rng = SplitMix64::new(5);
        for q in [4u32, 8, 9] {
            let f = gf(q);
            for _ in 0..25 {
                let n = 3 + (rng.below((q as u64).min(7) - 2) as usize);
                let k = 1 + (rng.below(n as u64 - 1) as usize);
                let spec = random_spec(&f, n, k, &mut rng);
                let dual = grs_dual_euclidean(&spec).unwrap();
                assert_eq!(dual.k, n - k);
                // kernel-basis oracle: the dual code computed directly
                let direct = spec.code().unwrap().dual_euclidean();
                assert_eq!(dual.code().unwrap(), direct);
            }
        }
    }

    #[test]
    fn dual_of_dual_is_original() {
        let mut rng = SplitMix64::new(6);
        let f = gf(8);
        let spec = random_spec(&f, 6, 2, &mut rng);
        let dd = grs_dual_euclidean(&grs_dual_euclidean(&spec).unwrap()).unwrap();
        assert_eq!(dd.code().unwrap(), spec.code().unwrap());
    }

    #[test]
    fn explicit_quaternary_dual_example() {
        let spec = finite_spec(4, &[0, 1, 2, 3], vec![1; 4], 1).unwrap();
        let dual = grs_dual_euclidean(&spec).unwrap();
        let kernel_code = spec.code().unwrap().dual_euclidean();
        assert_eq!(dual.code().unwrap(), kernel_code);
    }

    #[test]
    fn hermitian_dual_properties() {
        let mut rng = SplitMix64::new(9);
        let f16 = gf(16);
        for _ in 0..20 {
            let n = 4 + (rng.below(8) as usize);
            let k = 1 + (rng.below(n as u64 - 1) as usize);
            let spec = random_spec(&f16, n, k, &mut rng);
            let dual = grs_dual_hermitian(&spec).unwrap();
            assert_eq!(dual.k, n - k);
            assert_eq!(dual.code().unwrap(), spec.code().unwrap().dual_hermitian().unwrap());
        }
        // subfield points are fixed by the Frobenius twist
        let f = gf(16);
        let sub: Vec<u16> = f.subfield_elements().unwrap();
        let spec = finite_spec(16, &sub, vec![1; sub.len()], 1).unwrap();
        let dual = grs_dual_hermitian(&spec).unwrap();
        assert_eq!(dual.finite_points(), sub);
    }

    #[test]
    fn nesting_follows_degrees() {
        let mut rng = SplitMix64::new(12);
        let f = gf(8);
        let spec = random_spec(&f, 6, 3, &mut rng);
        assert!(grs_nested(&spec, 1, 3).unwrap());
        assert!(grs_nested(&spec, 2, 2).unwrap());
        assert!(!grs_nested(&spec, 3, 2).unwrap());
    }

    #[test]
    fn euclidean_so_families() {
        let f4 = gf(4);
        let spec = grs_so_euclidean(&f4, 4, 1).unwrap();
        let c = spec.code().unwrap();
        assert_eq!((c.len(), c.dim()), (4, 1));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 4);

        let f8 = gf(8);
        for (n, k, d) in [(5usize, 2usize, 4usize), (8, 2, 7), (6, 3, 4)] {
            let spec = grs_so_euclidean(&f8, n, k).unwrap();
            let c = spec.code().unwrap();
            assert_eq!((c.len(), c.dim()), (n, k));
            assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), d);
            assert!(c.gram(Flavor::Euclidean).unwrap().is_zero());
        }
        assert!(grs_so_euclidean(&f8, 3, 1).is_err()); // n must exceed 3
        assert!(grs_so_euclidean(&f8, 6, 4).is_err()); // k above n/2
    }

    #[test]
    fn hermitian_so_families() {
        let f16 = gf(16);
        let spec = grs_so_hermitian(&f16, 2, 1).unwrap();
        let c = spec.code().unwrap();
        assert_eq!((c.len(), c.dim()), (2, 1));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 2);
        assert!(c.gram(Flavor::Hermitian).unwrap().is_zero());

        let f64 = gf(64);
        for (n, k, d) in [(8usize, 2usize, 7usize), (5, 2, 4)] {
            let spec = grs_so_hermitian(&f64, n, k).unwrap();
            let c = spec.code().unwrap();
            assert_eq!((c.len(), c.dim()), (n, k));
            assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), d);
            assert!(c.gram(Flavor::Hermitian).unwrap().is_zero());
        }
    }

    #[test]
    fn extended_so_code_gf16() {
        let f16 = gf(16);
        let spec = grs_so_hermitian_extended(&f16).unwrap();
        let c = spec.code().unwrap();
        assert_eq!((c.len(), c.dim()), (17, 4));
        assert!(c.gram(Flavor::Hermitian).unwrap().is_zero());
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 14);
        assert_eq!(c.hull_dim(Flavor::Hermitian).unwrap(), 4);
    }

    #[test]
    fn extended_dual_spec_is_kernel_dual() {
        let f16 = gf(16);
        let dual = extended_hermitian_dual_spec(&f16).unwrap();
        assert_eq!(dual.k, 13);
        assert_eq!(dual.n(), 17);
        let c = dual.code().unwrap();
        assert_eq!(c.dim(), 13);
    }

    #[test]
    fn puncturing_extended_column_recovers_all_points_code() {
        let f16 = gf(16);
        let spec = grs_so_hermitian_extended(&f16).unwrap();
        let gen = spec.generator().unwrap();
        let punctured = Matrix::from_fn(&f16, gen.rows(), gen.cols() - 1, |i, j| gen.get(i, j));
        let all_points = finite_spec(16, &(0..16u16).collect::<Vec<_>>(), vec![1; 16], 4)
            .unwrap()
            .generator()
            .unwrap();
        assert_eq!(punctured, all_points);
    }

    #[test]
    fn extended_subcode_regimes() {
        let f16 = gf(16);
        // k1 = m: the dual itself
        let (c, d) = extended_nested_subcode(&f16, 13, 1, 0).unwrap();
        assert_eq!((c.len(), c.dim(), d), (17, 13, 5));
        // k1 = m-2: root-free multiplier route
        let (c, d) = extended_nested_subcode(&f16, 11, 1, 0).unwrap();
        assert_eq!((c.len(), c.dim(), d), (17, 11, 7));
        let c2 = grs_so_hermitian_extended(&f16).unwrap().code().unwrap();
        assert!(c.gram_with(&c2, Flavor::Hermitian).unwrap().is_zero());
    }

    #[test]
    fn naive_degree_truncation_of_extended_dual_is_not_mds() {
        // Words (g(b), g_{m-1}) of the extended dual with deg g <= k1-1 < m-1
        // have zero infinity coordinate, and a monic product of k1-1 distinct
        // linear factors then yields weight q^2 - (k1-1) = n - k1, one short
        // of MDS. Exhibit that witness for k1 = 12 over GF(16): plain degree
        // nesting does not produce the [17,12,6] subcode.
        let f16 = gf(16);
        let dual = extended_hermitian_dual_spec(&f16).unwrap();
        let bpoints: Vec<u16> = dual.finite_points();
        // g = product of the 11 elements {0..10} as roots
        let mut g = vec![0u16; 13];
        g[0] = 1;
        let mut deg = 0;
        for r in 0..11u16 {
            for d in (0..=deg).rev() {
                let shifted = g[d];
                g[d + 1] = f16.add(g[d + 1], shifted);
                g[d] = f16.mul(g[d], f16.neg(r));
            }
            deg += 1;
        }
        let word: Vec<u16> = bpoints
            .iter()
            .map(|&b| eval_poly(&f16, &g, b))
            .chain(std::iter::once(g[12]))
            .collect();
        assert_eq!(g[12], 0);
        let weight = word.iter().filter(|&&c| c != 0).count();
        assert_eq!(weight, 5); // below the MDS bound 6 for a [17,12] code
        // and the word really lies in the dual
        let as_matrix = Matrix::from_rows(&f16, &[word]);
        assert!(as_matrix
            .row_space_contained_in(dual.code().unwrap().generator())
            .unwrap());
    }

    #[test]
    fn tiny_hyperplane_search_finds_known_subcode() {
        // Over GF(4) with base subfield GF(2): the extended dual is a
        // [5, 3, 3] code which does contain a [5, 2, 4] MDS subcode
        // (polynomial span {1, x^2}), so the search must succeed.
        let f4 = gf(4);
        let (c, d) = extended_nested_subcode(&f4, 2, 42, 200_000).unwrap();
        assert_eq!((c.len(), c.dim(), d), (5, 2, 4));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 4);
    }

    #[test]
    fn spec_serialization_roundtrip() {
        let f16 = gf(16);
        let spec = grs_so_hermitian_extended(&f16).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"inf\""));
        let parsed: GrsSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, spec);
    }
}
