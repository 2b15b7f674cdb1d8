//! Propagation rules on pairs of codes: the direct sum and the (u, u+v)
//! construction, their hull-dimension predictions and SO/LCD/SD criteria,
//! matrix-product codes, stock ingredient codes, and the derived binary
//! (almost) self-orthogonal / self-dual families.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, Flavor, LinearCode, DEFAULT_CAP};
use crate::field::{Field, FieldError, FieldRef};
use crate::grs::{GrsError, GrsSpec};
use crate::matrix::{Matrix, MatrixError, ToeplitzSpec};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("codes belong to different fields")]
    FieldMismatch,
    #[error("codes have different lengths")]
    LengthMismatch,
    #[error("construction is defined for binary codes only")]
    NotBinary,
    #[error("input code must be even-like")]
    NotEvenLike,
    #[error("criteria not applicable: {0}")]
    NotApplicable(String),
    #[error("input code is not LCD under the requested inner product")]
    NotLcd,
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("recipe error: {0}")]
    Recipe(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Grs(#[from] GrsError),
    #[error(transparent)]
    Toeplitz(#[from] crate::toeplitz::ToeplitzError),
}

/// Predicted hull dimension of a constructed code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullPrediction {
    pub applicable: bool,
    /// Why the prediction is unavailable, when `applicable` is false.
    pub reason: Option<String>,
    pub lower: usize,
    pub upper: usize,
    /// Present iff lower == upper.
    pub exact: Option<usize>,
}

impl HullPrediction {
    fn exact(v: usize) -> Self {
        HullPrediction {
            applicable: true,
            reason: None,
            lower: v,
            upper: v,
            exact: Some(v),
        }
    }
    fn range(lower: usize, upper: usize) -> Self {
        HullPrediction {
            applicable: true,
            reason: None,
            lower,
            upper,
            exact: if lower == upper { Some(lower) } else { None },
        }
    }
    fn not_applicable(reason: &str) -> Self {
        HullPrediction {
            applicable: false,
            reason: Some(reason.to_string()),
            lower: 0,
            upper: 0,
            exact: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuleVerdicts {
    pub so: bool,
    pub lcd: bool,
    pub sd: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    EvenLike,
    OddLike,
}

fn require_same_field(c1: &LinearCode, c2: &LinearCode) -> Result<(), ConstructionError> {
    if c1.field() == c2.field() {
        Ok(())
    } else {
        Err(ConstructionError::FieldMismatch)
    }
}

/// Direct sum {(c1, c2)}: an [n1+n2, k1+k2, min{d1, d2}] code with a
/// block-diagonal generator. Lengths may differ.
pub fn direct_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, ConstructionError> {
    require_same_field(c1, c2)?;
    let gen = Matrix::block_diag(&[c1.generator(), c2.generator()])?;
    Ok(LinearCode::from_generator(&gen))
}

/// Hull of a direct sum is always the sum of the hulls.
pub fn predict_direct_sum_hull(
    c1: &LinearCode,
    c2: &LinearCode,
    flavor: Flavor,
) -> Result<HullPrediction, ConstructionError> {
    require_same_field(c1, c2)?;
    let l1 = c1.hull_dim(flavor)?;
    let l2 = c2.hull_dim(flavor)?;
    Ok(HullPrediction::exact(l1 + l2))
}

/// The direct sum is SO / LCD / SD exactly when both inputs are. The verdicts
/// are cross-checked against the constructed code's hull.
pub fn direct_sum_criteria(
    c1: &LinearCode,
    c2: &LinearCode,
    flavor: Flavor,
) -> Result<RuleVerdicts, ConstructionError> {
    require_same_field(c1, c2)?;
    let (l1, l2) = (c1.hull_dim(flavor)?, c2.hull_dim(flavor)?);
    let verdicts = RuleVerdicts {
        so: l1 == c1.dim() && l2 == c2.dim(),
        lcd: l1 == 0 && l2 == 0,
        sd: l1 == c1.dim()
            && l2 == c2.dim()
            && c1.len() == 2 * c1.dim()
            && c2.len() == 2 * c2.dim(),
    };
    let sum = direct_sum(c1, c2)?;
    let hull = sum.hull_dim(flavor)?;
    let ok = verdicts.so == (hull == sum.dim())
        && verdicts.lcd == (hull == 0)
        && verdicts.sd == (hull == sum.dim() && sum.len() == 2 * sum.dim());
    if !ok {
        return Err(CodeError::InternalCrossCheck("direct sum criteria".into()).into());
    }
    Ok(verdicts)
}

/// (u, u+v) construction: a [2n, k1+k2, min{2 d1, d2}] code with generator
/// rows (G1 | G1) and (0 | G2). Inputs must share field and length.
pub fn u_uv(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode, ConstructionError> {
    require_same_field(c1, c2)?;
    if c1.len() != c2.len() {
        return Err(ConstructionError::LengthMismatch);
    }
    let top = c1.generator().hstack(c1.generator())?;
    let zero = Matrix::zeros(c2.field(), c2.dim(), c1.len());
    let bottom = zero.hstack(c2.generator())?;
    Ok(LinearCode::from_generator(&top.vstack(&bottom)?))
}

/// Hull bracket for the (u, u+v) code. Only claimed in characteristic 2 or
/// when C1 is self-orthogonal; exact when C2 is self-orthogonal.
pub fn predict_uuv_hull(
    c1: &LinearCode,
    c2: &LinearCode,
    flavor: Flavor,
) -> Result<HullPrediction, ConstructionError> {
    require_same_field(c1, c2)?;
    if c1.len() != c2.len() {
        return Err(ConstructionError::LengthMismatch);
    }
    let c1_so = c1.hull_dim(flavor)? == c1.dim();
    if c1.field().characteristic() != 2 && !c1_so {
        return Ok(HullPrediction::not_applicable(
            "needs characteristic 2 or a self-orthogonal first input",
        ));
    }
    let (k1, k2) = (c1.dim() as isize, c2.dim() as isize);
    let l2 = c2.hull_dim(flavor)? as isize;
    let cross = c1.intersection_dim(&c2.dual(flavor)?)? as isize;
    let lower = (2 * cross + l2 - k1).max(0) as usize;
    let upper = (2 * cross + k2 - k1).max(0) as usize;
    if l2 == k2 {
        // C2 self-orthogonal: the bracket collapses
        Ok(HullPrediction::exact(upper))
    } else {
        Ok(HullPrediction::range(lower, upper))
    }
}

/// SO/LCD/SD criteria for the (u, u+v) code. Applicable when q = 2^m and C2
/// is SO, or when both inputs are SO; the verdicts are cross-checked against
/// the constructed code.
pub fn uuv_criteria(
    c1: &LinearCode,
    c2: &LinearCode,
    flavor: Flavor,
) -> Result<RuleVerdicts, ConstructionError> {
    require_same_field(c1, c2)?;
    if c1.len() != c2.len() {
        return Err(ConstructionError::LengthMismatch);
    }
    let c1_so = c1.hull_dim(flavor)? == c1.dim();
    let c2_so = c2.hull_dim(flavor)? == c2.dim();
    let char2 = c1.field().characteristic() == 2;
    if !((char2 && c2_so) || (c1_so && c2_so)) {
        return Err(ConstructionError::NotApplicable(
            "needs (characteristic 2 and C2 self-orthogonal) or both inputs self-orthogonal"
                .into(),
        ));
    }
    let dual2 = c2.dual(flavor)?;
    let cross = c1.intersection_dim(&dual2)? as isize;
    let verdicts = RuleVerdicts {
        so: c1.gram_with(c2, flavor)?.is_zero(),
        lcd: 2 * cross == c1.dim() as isize - c2.dim() as isize,
        sd: *c1 == dual2,
    };
    let built = u_uv(c1, c2)?;
    let hull = built.hull_dim(flavor)?;
    let ok = verdicts.so == (hull == built.dim())
        && verdicts.lcd == (hull == 0)
        && verdicts.sd == (hull == built.dim() && built.len() == 2 * built.dim());
    if !ok {
        return Err(CodeError::InternalCrossCheck("uuv criteria".into()).into());
    }
    Ok(verdicts)
}

/// (u, u+v) against the length-n binary repetition code, for an even-like C1:
/// a [2n, k1+1, min{2 d1, n}] code whose Euclidean hull is k1 for odd n and
/// k1+1 for even n. The hull value is asserted.
pub fn uuv_repetition_binary(
    c1: &LinearCode,
) -> Result<(LinearCode, usize), ConstructionError> {
    if c1.field().order() != 2 {
        return Err(ConstructionError::NotBinary);
    }
    if !c1.is_even_like()? {
        return Err(ConstructionError::NotEvenLike);
    }
    let rep = repetition(c1.field(), c1.len())?;
    let code = u_uv(c1, &rep)?;
    let expected = if c1.len() % 2 == 1 {
        c1.dim()
    } else {
        c1.dim() + 1
    };
    let hull = code.hull_dim(Flavor::Euclidean)?;
    if hull != expected {
        return Err(CodeError::InternalCrossCheck(format!(
            "repetition uuv hull {} != predicted {}",
            hull, expected
        ))
        .into());
    }
    Ok((code, hull))
}

/// Parity of the (u, u+v) code built against the repetition code: odd-like
/// iff n is odd, regardless of C1. Cross-checked on the constructed code.
pub fn uuv_parity(c1: &LinearCode) -> Result<Parity, ConstructionError> {
    if c1.field().order() != 2 {
        return Err(ConstructionError::NotBinary);
    }
    let rep = repetition(c1.field(), c1.len())?;
    let code = u_uv(c1, &rep)?;
    let predicted = if c1.len() % 2 == 1 {
        Parity::OddLike
    } else {
        Parity::EvenLike
    };
    let actual = if code.is_even_like()? {
        Parity::EvenLike
    } else {
        Parity::OddLike
    };
    if predicted != actual {
        return Err(CodeError::InternalCrossCheck("uuv parity".into()).into());
    }
    Ok(actual)
}

/// Parity of a binary direct sum. Even+even is even-like, one odd input makes
/// it odd-like; the odd+odd case is settled by a direct test on the sum.
pub fn direct_sum_parity(
    c1: &LinearCode,
    c2: &LinearCode,
) -> Result<Parity, ConstructionError> {
    if c1.field().order() != 2 || c2.field().order() != 2 {
        return Err(ConstructionError::NotBinary);
    }
    let sum = direct_sum(c1, c2)?;
    let actual = if sum.is_even_like()? {
        Parity::EvenLike
    } else {
        Parity::OddLike
    };
    let (e1, e2) = (c1.is_even_like()?, c2.is_even_like()?);
    let forced = match (e1, e2) {
        (true, true) => Some(Parity::EvenLike),
        (true, false) | (false, true) => Some(Parity::OddLike),
        (false, false) => None, // either; resolved by the test above
    };
    if let Some(f) = forced {
        if f != actual {
            return Err(CodeError::InternalCrossCheck("direct sum parity".into()).into());
        }
    }
    Ok(actual)
}

/// Matrix-product code [C_1, ..., C_m] . A for codes of common length n and
/// an m x s mixing matrix: length n*s, spanned by the blocks G_i * a_ij.
/// When A is right non-singular the dimension sum is asserted.
pub fn matrix_product(
    codes: &[&LinearCode],
    a: &Matrix,
) -> Result<LinearCode, ConstructionError> {
    if codes.is_empty() || a.rows() != codes.len() {
        return Err(ConstructionError::Unsupported(
            "mixing matrix rows must match the number of codes".into(),
        ));
    }
    let n = codes[0].len();
    for c in codes {
        require_same_field(codes[0], c)?;
        if c.len() != n {
            return Err(ConstructionError::LengthMismatch);
        }
        if c.field() != a.field() {
            return Err(ConstructionError::FieldMismatch);
        }
    }
    let mut stacked: Option<Matrix> = None;
    for (i, code) in codes.iter().enumerate() {
        if code.dim() == 0 {
            continue;
        }
        let mut block: Option<Matrix> = None;
        for j in 0..a.cols() {
            let scaled = code.generator().scale(a.get(i, j));
            block = Some(match block {
                Some(b) => b.hstack(&scaled)?,
                None => scaled,
            });
        }
        let block = block.expect("mixing matrix has at least one column");
        stacked = Some(match stacked {
            Some(s) => s.vstack(&block)?,
            None => block,
        });
    }
    let gen = match stacked {
        Some(g) => g,
        None => Matrix::zeros(codes[0].field(), 0, n * a.cols()),
    };
    let code = LinearCode::from_generator(&gen);
    if a.rank() == a.rows() {
        let expected: usize = codes.iter().map(|c| c.dim()).sum();
        if code.dim() != expected {
            return Err(CodeError::InternalCrossCheck(format!(
                "matrix-product dimension {} != sum of inputs {}",
                code.dim(),
                expected
            ))
            .into());
        }
    }
    Ok(code)
}

/// [n, 1, n] repetition code over any field.
pub fn repetition(field: &FieldRef, n: usize) -> Result<LinearCode, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::Unsupported("repetition needs n >= 1".into()));
    }
    Ok(LinearCode::from_generator(&Matrix::from_rows(
        field,
        &[vec![1u16; n]],
    )))
}

/// Binary [n, n-1, 2] even-weight code with generator rows e_i + e_n.
pub fn even_weight(n: usize) -> Result<LinearCode, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::Unsupported("even-weight needs n >= 2".into()));
    }
    let f = Field::new(2, 1, None)?;
    let gen = Matrix::from_fn(&f, n - 1, n, |i, j| u16::from(j == i || j == n - 1));
    Ok(LinearCode::from_generator(&gen))
}

/// Binary simplex [2^t - 1, t, 2^(t-1)] code; columns are all nonzero t-bit
/// vectors in increasing integer order.
pub fn simplex(t: u32) -> Result<LinearCode, ConstructionError> {
    if t < 2 {
        return Err(ConstructionError::Unsupported("simplex needs t >= 2".into()));
    }
    let f = Field::new(2, 1, None)?;
    let n = (1usize << t) - 1;
    let gen = Matrix::from_fn(&f, t as usize, n, |i, j| (((j + 1) >> i) & 1) as u16);
    Ok(LinearCode::from_generator(&gen))
}

fn assert_params(
    code: &LinearCode,
    n: usize,
    k: usize,
    d: usize,
    cap: u64,
) -> Result<(), ConstructionError> {
    if code.len() != n || code.dim() != k {
        return Err(CodeError::InternalCrossCheck(format!(
            "expected [{},{}], built [{},{}]",
            n,
            k,
            code.len(),
            code.dim()
        ))
        .into());
    }
    if code.codeword_count_capped(cap).is_some() {
        let actual = code.min_distance(cap)?;
        if actual != d {
            return Err(CodeError::InternalCrossCheck(format!(
                "expected distance {}, enumerated {}",
                d, actual
            ))
            .into());
        }
    }
    Ok(())
}

/// Binary [2n, n, min{4, n}] family: self-dual for even n, almost self-dual
/// for odd n. Built as the repetition-(u,u+v) of the even-weight code.
pub fn family_binary_sd(n: usize, cap: u64) -> Result<LinearCode, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::Unsupported("family needs n >= 2".into()));
    }
    let (code, hull) = uuv_repetition_binary(&even_weight(n)?)?;
    assert_params(&code, 2 * n, n, 4.min(n), cap)?;
    let expected_hull = if n % 2 == 0 { n } else { n - 1 };
    if hull != expected_hull {
        return Err(CodeError::InternalCrossCheck("sd family hull".into()).into());
    }
    Ok(code)
}

/// Binary even-like SO [2^(t+1) n, n+t, 2^(t+2)] tower built by iterating the
/// repetition-(u,u+v) rule from the [2n, n, 4] self-dual code; every level is
/// re-verified even-like before the next step.
pub fn family_binary_so_tower(
    n: usize,
    t: u32,
    cap: u64,
) -> Result<LinearCode, ConstructionError> {
    if n < 4 || n % 2 != 0 {
        return Err(ConstructionError::Unsupported("tower needs even n >= 4".into()));
    }
    let mut code = family_binary_sd(n, cap)?;
    for _ in 0..t {
        if !code.is_even_like()? {
            return Err(CodeError::InternalCrossCheck("tower level not even-like".into()).into());
        }
        code = uuv_repetition_binary(&code)?.0;
    }
    let len = (1usize << (t + 1)) * n;
    assert_params(&code, len, n + t as usize, 1 << (t + 2), cap)?;
    if !code.is_even_like()? || code.hull_dim(Flavor::Euclidean)? != code.dim() {
        return Err(CodeError::InternalCrossCheck("tower output not even-like SO".into()).into());
    }
    Ok(code)
}

/// Binary even-like SO [2^(t+1), t+1, 2^t] family grown from the [4, 2, 2]
/// self-dual code.
pub fn family_binary_so_rm(t: u32, cap: u64) -> Result<LinearCode, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::Unsupported("family needs t >= 1".into()));
    }
    let mut code = family_binary_sd(2, cap)?;
    for _ in 1..t {
        if !code.is_even_like()? {
            return Err(CodeError::InternalCrossCheck("level not even-like".into()).into());
        }
        code = uuv_repetition_binary(&code)?.0;
    }
    assert_params(&code, 1 << (t + 1), t as usize + 1, 1 << t, cap)?;
    if !code.is_even_like()? || code.hull_dim(Flavor::Euclidean)? != code.dim() {
        return Err(CodeError::InternalCrossCheck("output not even-like SO".into()).into());
    }
    Ok(code)
}

/// Binary odd-like [2^(t+1)-2, t+1, 2^t-1] family from the simplex code and
/// the repetition rule; meets the Griesmer bound for every t. For t >= 2 the
/// code is almost self-orthogonal (hull t = k-1); the degenerate t = 1 seed
/// [1,1,1] is odd-like, so the hull formula does not apply there.
pub fn family_binary_almost_so_simplex(
    t: u32,
    cap: u64,
) -> Result<LinearCode, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::Unsupported("family needs t >= 1".into()));
    }
    let f = Field::new(2, 1, None)?;
    let code = if t == 1 {
        let c1 = repetition(&f, 1)?;
        u_uv(&c1, &repetition(&f, 1)?)?
    } else {
        let c1 = simplex(t)?;
        let (code, hull) = uuv_repetition_binary(&c1)?;
        if hull != t as usize {
            return Err(CodeError::InternalCrossCheck("simplex family hull".into()).into());
        }
        code
    };
    let n = (1usize << (t + 1)) - 2;
    let d = (1usize << t) - 1;
    assert_params(&code, n, t as usize + 1, d, cap)?;
    if code.is_even_like()? {
        return Err(CodeError::InternalCrossCheck("family must be odd-like".into()).into());
    }
    if crate::code::griesmer_bound(2, t as usize + 1, d) != n as u64 {
        return Err(CodeError::InternalCrossCheck("family must meet Griesmer".into()).into());
    }
    Ok(code)
}

/// Parameter-level direct sum combination for LCD codes.
pub fn lcd_bound_combine_params(
    p1: (usize, usize, usize),
    p2: (usize, usize, usize),
) -> (usize, usize, usize) {
    (p1.0 + p2.0, p1.1 + p2.1, p1.2.min(p2.2))
}

/// Construction-mode combination: both inputs are verified LCD, the direct
/// sum is built, and the output's LCD certificate is re-checked.
pub fn lcd_bound_combine(
    c1: &LinearCode,
    c2: &LinearCode,
    flavor: Flavor,
) -> Result<LinearCode, ConstructionError> {
    for c in [c1, c2] {
        if c.gram(flavor)?.rank() != c.dim() {
            return Err(ConstructionError::NotLcd);
        }
    }
    let sum = direct_sum(c1, c2)?;
    if sum.hull_dim(flavor)? != 0 {
        return Err(CodeError::InternalCrossCheck("combined code not LCD".into()).into());
    }
    Ok(sum)
}

/// Provenance tree for a constructed code; serializes as nested JSON and can
/// be rebuilt bottom-up.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    File {
        path: String,
    },
    DirectSum {
        children: Vec<Recipe>,
    },
    UUv {
        children: Vec<Recipe>,
    },
    MatrixProduct {
        children: Vec<Recipe>,
        a: Vec<Vec<u16>>,
    },
    Grs {
        spec: GrsSpec,
    },
    ToeplitzFsd {
        q: u32,
        n: usize,
        f: Vec<u16>,
        t: u16,
        a: Vec<u16>,
        b: Vec<u16>,
    },
    Repetition {
        q: u32,
        n: usize,
    },
    Simplex {
        t: u32,
    },
    EvenWeight {
        n: usize,
    },
}

impl Recipe {
    /// Materialize the tree bottom-up. `load_file` resolves `file` leaves so
    /// the caller controls filesystem access.
    pub fn build(
        &self,
        load_file: &dyn Fn(&str) -> Result<LinearCode, ConstructionError>,
    ) -> Result<LinearCode, ConstructionError> {
        match self {
            Recipe::File { path } => load_file(path),
            Recipe::DirectSum { children } => {
                let built = Self::build_children(children, load_file, 2, "direct_sum")?;
                direct_sum(&built[0], &built[1])
            }
            Recipe::UUv { children } => {
                let built = Self::build_children(children, load_file, 2, "u_uv")?;
                u_uv(&built[0], &built[1])
            }
            Recipe::MatrixProduct { children, a } => {
                let built = Self::build_children(children, load_file, children.len(), "matrix_product")?;
                if built.is_empty() {
                    return Err(ConstructionError::Recipe("matrix_product needs children".into()));
                }
                let field = built[0].field().clone();
                let mixing = Matrix::from_rows(&field, a);
                let refs: Vec<&LinearCode> = built.iter().collect();
                matrix_product(&refs, &mixing)
            }
            Recipe::Grs { spec } => Ok(spec.code()?),
            Recipe::ToeplitzFsd { q, n, f, t, a, b } => {
                let field = Field::of_order(*q, None)?;
                let spec = ToeplitzSpec {
                    t: *t,
                    a: a.clone(),
                    b: b.clone(),
                };
                let seed = crate::toeplitz::fsd_from_toeplitz(&field, f, &spec, *n, DEFAULT_CAP)?;
                Ok(seed.code)
            }
            Recipe::Repetition { q, n } => {
                let field = Field::of_order(*q, None)?;
                repetition(&field, *n)
            }
            Recipe::Simplex { t } => simplex(*t),
            Recipe::EvenWeight { n } => even_weight(*n),
        }
    }

    fn build_children(
        children: &[Recipe],
        load_file: &dyn Fn(&str) -> Result<LinearCode, ConstructionError>,
        expected: usize,
        what: &str,
    ) -> Result<Vec<LinearCode>, ConstructionError> {
        if children.len() != expected {
            return Err(ConstructionError::Recipe(format!(
                "{} needs {} children, got {}",
                what,
                expected,
                children.len()
            )));
        }
        children.iter().map(|c| c.build(load_file)).collect()
    }
}

/// Shared classifier wrapper for constructed codes carrying a design distance.
pub fn classify_constructed(
    code: &LinearCode,
    design: Option<usize>,
    cap: u64,
) -> Result<crate::code::CodeReport, ConstructionError> {
    Ok(crate::code::classify_with_design(code, cap, design)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::tests::quaternary_pair;
    use crate::code::classify;
    use crate::rng::SplitMix64;

    fn random_code(f: &FieldRef, k: usize, n: usize, rng: &mut SplitMix64) -> LinearCode {
        LinearCode::from_generator(&Matrix::from_fn(f, k, n, |_, _| rng.elt(f.order())))
    }

    #[test]
    fn direct_sum_parameters_and_hulls() {
        let (c, d) = quaternary_pair();
        let dd = d.dual_hermitian().unwrap();
        let s = direct_sum(&c, &dd).unwrap();
        assert_eq!((s.len(), s.dim()), (12, 6));
        assert_eq!(s.min_distance(DEFAULT_CAP).unwrap(), 2);
        assert_eq!(s.hull_dim(Flavor::Hermitian).unwrap(), 2);

        let s2 = direct_sum(&dd, &dd).unwrap();
        assert_eq!((s2.len(), s2.dim()), (12, 8));
        assert_eq!(s2.hull_dim(Flavor::Hermitian).unwrap(), 4);
    }

    #[test]
    fn direct_sum_distance_is_min_of_inputs() {
        let mut rng = SplitMix64::new(21);
        for q in [2u32, 4] {
            let f = Field::of_order(q, None).unwrap();
            for _ in 0..10 {
                let a = random_code(&f, 2, 5, &mut rng);
                let b = random_code(&f, 3, 6, &mut rng);
                if a.dim() == 0 || b.dim() == 0 {
                    continue;
                }
                let s = direct_sum(&a, &b).unwrap();
                assert_eq!(
                    s.min_distance(DEFAULT_CAP).unwrap(),
                    a.min_distance(DEFAULT_CAP)
                        .unwrap()
                        .min(b.min_distance(DEFAULT_CAP).unwrap())
                );
            }
        }
    }

    #[test]
    fn direct_sum_predictions_on_quaternary_pair() {
        let (c, d) = quaternary_pair();
        let p = predict_direct_sum_hull(&c, &c, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(0));
        let dd = d.dual_hermitian().unwrap();
        let p = predict_direct_sum_hull(&d, &dd, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(4));
        let cd = c.dual_hermitian().unwrap();
        let p = predict_direct_sum_hull(&c, &cd, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(0));
    }

    #[test]
    fn direct_sum_criteria_match_corollary() {
        let (c, d) = quaternary_pair();
        let v = direct_sum_criteria(&c, &c, Flavor::Hermitian).unwrap();
        assert!(v.lcd && !v.so && !v.sd);
        let v = direct_sum_criteria(&d, &d, Flavor::Hermitian).unwrap();
        assert!(v.so && !v.lcd);
        let v = direct_sum_criteria(&c, &d, Flavor::Hermitian).unwrap();
        assert!(!v.so && !v.lcd);
    }

    #[test]
    fn uuv_parameters_and_hulls() {
        let (c, d) = quaternary_pair();
        let s = u_uv(&c, &d).unwrap();
        assert_eq!((s.len(), s.dim()), (12, 4));
        assert_eq!(s.min_distance(DEFAULT_CAP).unwrap(), 4);
        assert_eq!(s.hull_dim(Flavor::Hermitian).unwrap(), 0);

        let dd = d.dual_hermitian().unwrap();
        let s = u_uv(&dd, &d).unwrap();
        assert_eq!((s.len(), s.dim()), (12, 6));
        assert_eq!(s.min_distance(DEFAULT_CAP).unwrap(), 4);
        assert_eq!(s.hull_dim(Flavor::Hermitian).unwrap(), 6);

        let s = u_uv(&d, &d).unwrap();
        assert_eq!(s.hull_dim(Flavor::Hermitian).unwrap(), 4);
    }

    #[test]
    fn uuv_predictions_on_quaternary_pair() {
        let (c, d) = quaternary_pair();
        // C2 = D is SO, so the prediction is exact
        let p = predict_uuv_hull(&c, &d, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(0));
        let p = predict_uuv_hull(&d, &d, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(4));
        let dd = d.dual_hermitian().unwrap();
        let p = predict_uuv_hull(&dd, &d, Flavor::Hermitian).unwrap();
        assert_eq!(p.exact, Some(6));
        assert_eq!(
            u_uv(&dd, &d).unwrap().hull_dim(Flavor::Hermitian).unwrap(),
            6
        );
    }

    #[test]
    fn uuv_criteria_on_quaternary_pair() {
        let (c, d) = quaternary_pair();
        let dd = d.dual_hermitian().unwrap();
        let v = uuv_criteria(&dd, &d, Flavor::Hermitian).unwrap();
        assert!(v.sd && v.so);
        let v = uuv_criteria(&c, &d, Flavor::Hermitian).unwrap();
        assert!(v.lcd && !v.so);
        let v = uuv_criteria(&d, &d, Flavor::Hermitian).unwrap();
        assert!(v.so && !v.lcd && !v.sd);
        // odd characteristic without SO inputs is rejected
        let f3 = Field::of_order(3, None).unwrap();
        let mut rng = SplitMix64::new(8);
        let a = random_code(&f3, 2, 4, &mut rng);
        let b = random_code(&f3, 2, 4, &mut rng);
        assert!(matches!(
            uuv_criteria(&a, &b, Flavor::Euclidean),
            Err(ConstructionError::NotApplicable(_))
        ));
    }

    #[test]
    fn uuv_prediction_not_applicable_outside_hypothesis() {
        let f3 = Field::of_order(3, None).unwrap();
        let mut rng = SplitMix64::new(9);
        loop {
            let a = random_code(&f3, 2, 4, &mut rng);
            let b = random_code(&f3, 2, 4, &mut rng);
            if a.hull_dim(Flavor::Euclidean).unwrap() < a.dim() {
                let p = predict_uuv_hull(&a, &b, Flavor::Euclidean).unwrap();
                assert!(!p.applicable);
                assert!(p.reason.is_some());
                break;
            }
        }
    }

    #[test]
    fn matrix_product_specializations() {
        let (c, d) = quaternary_pair();
        let f = c.field().clone();
        let i2 = Matrix::identity(&f, 2);
        assert_eq!(matrix_product(&[&c, &d], &i2).unwrap(), direct_sum(&c, &d).unwrap());
        let uuv_mix = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]);
        assert_eq!(matrix_product(&[&c, &d], &uuv_mix).unwrap(), u_uv(&c, &d).unwrap());
    }

    #[test]
    fn matrix_product_hull_bounds() {
        // diagonal A A^T with nonzero entries: hulls add;
        // triangular A A^T: bracketed by 0 and the sum
        let mut rng = SplitMix64::new(33);
        for q in [2u32, 3] {
            let f = Field::of_order(q, None).unwrap();
            for _ in 0..20 {
                let a = random_code(&f, 2, 5, &mut rng);
                let b = random_code(&f, 2, 5, &mut rng);
                let i2 = Matrix::identity(&f, 2);
                let sum_hulls = a.hull_dim(Flavor::Euclidean).unwrap()
                    + b.hull_dim(Flavor::Euclidean).unwrap();
                let mp = matrix_product(&[&a, &b], &i2).unwrap();
                assert_eq!(mp.hull_dim(Flavor::Euclidean).unwrap(), sum_hulls);

                let tri = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]);
                let aat = tri.mul(&tri.transpose()).unwrap();
                // applies when A A^T is triangular; true over GF(2) where 2=0
                let is_tri = (0..aat.rows())
                    .all(|i| (0..i).all(|j| aat.get(i, j) == 0))
                    || (0..aat.rows()).all(|i| (i + 1..aat.cols()).all(|j| aat.get(i, j) == 0));
                if is_tri {
                    let mp = matrix_product(&[&a, &b], &tri).unwrap();
                    assert!(mp.hull_dim(Flavor::Euclidean).unwrap() <= sum_hulls);
                }
            }
        }
    }

    #[test]
    fn stock_codes() {
        let f2 = Field::new(2, 1, None).unwrap();
        let rep = repetition(&f2, 5).unwrap();
        assert_eq!((rep.len(), rep.dim()), (5, 1));
        assert_eq!(rep.min_distance(DEFAULT_CAP).unwrap(), 5);

        let ew = even_weight(4).unwrap();
        assert_eq!((ew.len(), ew.dim()), (4, 3));
        assert_eq!(ew.min_distance(DEFAULT_CAP).unwrap(), 2);
        assert!(ew.is_even_like().unwrap());

        let sx = simplex(3).unwrap();
        assert_eq!((sx.len(), sx.dim()), (7, 3));
        let wd = sx.weight_distribution(DEFAULT_CAP).unwrap();
        assert_eq!(wd[4], 7); // every nonzero simplex word has weight 2^(t-1)
        assert_eq!(wd.iter().sum::<u64>(), 8);
        assert!(sx.is_even_like().unwrap());
        assert!(simplex(1).is_err());
    }

    #[test]
    fn uuv_repetition_accepts_only_even_like_binary() {
        let (c, _) = quaternary_pair();
        assert!(matches!(
            uuv_repetition_binary(&c),
            Err(ConstructionError::NotBinary)
        ));
        let f2 = Field::new(2, 1, None).unwrap();
        let rep3 = repetition(&f2, 3).unwrap();
        assert!(matches!(
            uuv_repetition_binary(&rep3),
            Err(ConstructionError::NotEvenLike)
        ));
    }

    #[test]
    fn sd_family_small_cases() {
        let c = family_binary_sd(4, DEFAULT_CAP).unwrap();
        assert_eq!((c.len(), c.dim()), (8, 4));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 4);
        let r = classify(&c, DEFAULT_CAP).unwrap();
        assert!(r.flags.sd_e);

        let c = family_binary_sd(3, DEFAULT_CAP).unwrap();
        assert_eq!((c.len(), c.dim()), (6, 3));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 3);
        let r = classify(&c, DEFAULT_CAP).unwrap();
        assert!(r.flags.almost_sd_e && !r.flags.sd_e);
    }

    #[test]
    fn tower_and_rm_families() {
        let c = family_binary_so_tower(4, 1, DEFAULT_CAP).unwrap();
        assert_eq!((c.len(), c.dim()), (16, 5));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 8);

        let c = family_binary_so_rm(3, DEFAULT_CAP).unwrap();
        assert_eq!((c.len(), c.dim()), (16, 4));
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 8);
    }

    #[test]
    fn simplex_family_meets_griesmer() {
        for t in [1u32, 2, 3] {
            let c = family_binary_almost_so_simplex(t, DEFAULT_CAP).unwrap();
            assert_eq!(c.len(), (1 << (t + 1)) - 2);
            assert_eq!(c.dim(), t as usize + 1);
        }
        let c = family_binary_almost_so_simplex(3, DEFAULT_CAP).unwrap();
        let r = classify(&c, DEFAULT_CAP).unwrap();
        assert!(r.flags.almost_so_e);
        assert_eq!(r.flags.odd_like, Some(true));
        assert_eq!(r.griesmer.unwrap().meets, Some(true));
    }

    #[test]
    fn parity_rules() {
        let f2 = Field::new(2, 1, None).unwrap();
        let ew4 = even_weight(4).unwrap();
        let ew3 = even_weight(3).unwrap();
        assert_eq!(uuv_parity(&ew4).unwrap(), Parity::EvenLike);
        assert_eq!(uuv_parity(&ew3).unwrap(), Parity::OddLike);
        assert_eq!(direct_sum_parity(&ew4, &ew4).unwrap(), Parity::EvenLike);
        let rep3 = repetition(&f2, 3).unwrap();
        assert_eq!(direct_sum_parity(&ew4, &rep3).unwrap(), Parity::OddLike);
        // both odd-like: resolved by direct test
        assert_eq!(direct_sum_parity(&rep3, &rep3).unwrap(), Parity::OddLike);
    }

    #[test]
    fn lcd_combine_modes() {
        assert_eq!(
            lcd_bound_combine_params((16, 8, 5), (22, 13, 5)),
            (38, 21, 5)
        );
        assert_eq!(
            lcd_bound_combine_params((10, 5, 3), (10, 5, 3)),
            (20, 10, 3)
        );
        let (c, d) = quaternary_pair();
        let sum = lcd_bound_combine(&c, &c, Flavor::Hermitian).unwrap();
        assert_eq!(sum.hull_dim(Flavor::Hermitian).unwrap(), 0);
        assert!(matches!(
            lcd_bound_combine(&c, &d, Flavor::Hermitian),
            Err(ConstructionError::NotLcd)
        ));
    }

    #[test]
    fn recipe_roundtrip() {
        let recipe = Recipe::UUv {
            children: vec![
                Recipe::EvenWeight { n: 4 },
                Recipe::Repetition { q: 2, n: 4 },
            ],
        };
        let json = serde_json::to_string(&recipe).unwrap();
        let parsed: Recipe = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, recipe);
        let no_files = |p: &str| -> Result<LinearCode, ConstructionError> {
            Err(ConstructionError::Recipe(format!("no file loader for {}", p)))
        };
        let code = parsed.build(&no_files).unwrap();
        assert_eq!((code.len(), code.dim()), (8, 4));
        assert_eq!(code.min_distance(DEFAULT_CAP).unwrap(), 4);
    }
}
