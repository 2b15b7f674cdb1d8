//! Exact arithmetic in GF(p^h) for p^h <= 2^16.
//!
//! Elements are stored as integer codes in `[0, q)`: the base-p digits of a
//! code, little-endian, are the coefficients of the element in the polynomial
//! basis of GF(p)[x] modulo the field's irreducible modulus. With the default
//! modulus x^2+x+1 this maps GF(4) = {0, 1, w, w^2} to the codes {0, 1, 2, 3}.
//!
//! Fields with at most 256 elements multiply through log/antilog tables keyed
//! to the smallest primitive element; larger fields fall back to polynomial
//! arithmetic. Fields are immutable after construction and shared behind an
//! [`FieldRef`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Shared handle to a field; all carriers (matrices, codes) hold one of these.
pub type FieldRef = Arc<Field>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u16 },
    #[error("modulus must be monic of degree {h} with coefficients below {p}")]
    MalformedModulus { p: u16, h: u32 },
    #[error("unsupported field order: p={p}, h={h} (no pinned default modulus, or p^h > 2^16)")]
    UnsupportedOrder { p: u32, h: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("field has no Hermitian structure (extension degree is odd)")]
    NoHermitianStructure,
    #[error("square roots via x^(q/2) need characteristic 2")]
    OddCharacteristic,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("{0} is not an element of the Hermitian base subfield")]
    NotInSubfield(u16),
}

/// A concrete finite field GF(p^h), p^h <= 2^16.
pub struct Field {
    p: u16,
    h: u32,
    q: u32,
    /// Monic irreducible modulus over GF(p), little-endian, length h+1.
    modulus: Vec<u16>,
    /// Order of the Hermitian base subfield (p^{h/2}), present iff h is even.
    sub_q: Option<u32>,
    /// log/antilog tables for q <= 256; exp has length 2(q-1) so products
    /// of two logs index it without a modulo.
    log: Vec<u16>,
    exp: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}
impl Eq for Field {}

const TABLE_LIMIT: u32 = 256;

/// Default moduli pinned so that every reproduction is bit-identical across
/// machines. GF(4) uses x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1, GF(16) x^4+x+1,
/// GF(64) x^6+x+1.
fn default_modulus(p: u16, h: u32) -> Option<Vec<u16>> {
    if h == 1 {
        return Some(vec![0, 1]); // GF(p)[x]/(x)
    }
    match (p, h) {
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        (2, 4) => Some(vec![1, 1, 0, 0, 1]),
        (2, 6) => Some(vec![1, 1, 0, 0, 0, 0, 1]),
        _ => None,
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Build GF(p^h). When `modulus` is omitted the pinned default for (p, h)
    /// is used; there is no default for extension fields other than the ones
    /// listed in [`default_modulus`].
    pub fn new(p: u16, h: u32, modulus: Option<&[u16]>) -> Result<FieldRef, FieldError> {
        if !is_prime(p as u32) {
            return Err(FieldError::NonPrimeCharacteristic(p as u32));
        }
        if h < 1 {
            return Err(FieldError::UnsupportedOrder { p: p as u32, h });
        }
        let mut q: u64 = 1;
        for _ in 0..h {
            q *= p as u64;
            if q > 1 << 16 {
                return Err(FieldError::UnsupportedOrder { p: p as u32, h });
            }
        }
        let q = q as u32;
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => default_modulus(p, h).ok_or(FieldError::UnsupportedOrder { p: p as u32, h })?,
        };
        if modulus.len() != h as usize + 1
            || modulus[h as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::MalformedModulus { p, h });
        }
        if h > 1 && !poly_is_irreducible(&modulus, p) {
            return Err(FieldError::ReducibleModulus { p });
        }
        let sub_q = if h % 2 == 0 {
            Some((p as u32).pow(h / 2))
        } else {
            None
        };
        let mut field = Field {
            p,
            h,
            q,
            modulus,
            sub_q,
            log: Vec::new(),
            exp: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            field.build_tables();
        }
        Ok(Arc::new(field))
    }

    /// Convenience constructor from the order q = p^h (q must be a prime power).
    pub fn of_order(q: u32, modulus: Option<&[u16]>) -> Result<FieldRef, FieldError> {
        let (p, h) = factor_prime_power(q).ok_or(FieldError::UnsupportedOrder { p: q, h: 0 })?;
        Field::new(p, h, modulus)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        // smallest primitive element by code
        let mut gen = 0u16;
        'cand: for g in 2..self.q {
            let mut x = 1u16;
            for i in 1..self.q {
                x = self.mul_poly(x, g as u16);
                if x == 1 {
                    if i == self.q - 1 {
                        gen = g as u16;
                        break 'cand;
                    }
                    continue 'cand;
                }
            }
        }
        assert!(gen != 0 || self.q == 2, "no primitive element found");
        if self.q == 2 {
            gen = 1;
        }
        let mut exp = vec![0u16; 2 * (q - 1)];
        let mut log = vec![0u16; q];
        let mut x = 1u16;
        for (i, e) in exp.iter_mut().enumerate().take(q - 1) {
            *e = x;
            log[x as usize] = i as u16;
            x = self.mul_poly(x, gen);
        }
        for i in 0..(q - 1) {
            exp[q - 1 + i] = exp[i];
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u16 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.h
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }
    /// Order of the Hermitian base subfield, if h is even.
    pub fn sub_order(&self) -> Option<u32> {
        self.sub_q
    }
    pub fn has_hermitian(&self) -> bool {
        self.sub_q.is_some()
    }

    /// All element codes in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.q).map(|c| c as u16)
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.sub(0, a)
    }

    #[inline]
    fn digitwise(&self, a: u16, b: u16, f: impl Fn(u16, u16) -> u16) -> u16 {
        let (mut a, mut b) = (a as u32, b as u32);
        let p = self.p as u32;
        let mut out = 0u32;
        let mut scale = 1u32;
        while a != 0 || b != 0 {
            out += f((a % p) as u16, (b % p) as u16) as u32 * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out as u16
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            return self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize];
        }
        self.mul_poly(a, b)
    }

    pub fn inv(&self, a: u16) -> Result<u16, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if !self.exp.is_empty() {
            let l = self.log[a as usize] as usize;
            return Ok(self.exp[(self.q as usize - 1 - l) % (self.q as usize - 1)]);
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    pub fn div(&self, a: u16, b: u16) -> Result<u16, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// a^(p^e). Exponents reduce mod h since x^(p^h) = x.
    pub fn frobenius(&self, a: u16, e: u32) -> u16 {
        let e = e % self.h;
        let mut x = a;
        for _ in 0..e {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Conjugation a^sqrt(q) for the Hermitian inner product; h must be even.
    pub fn conjugate(&self, a: u16) -> Result<u16, FieldError> {
        if self.sub_q.is_none() {
            return Err(FieldError::NoHermitianStructure);
        }
        Ok(self.frobenius(a, self.h / 2))
    }

    /// Unique square root in characteristic 2: a^(q/2).
    pub fn sqrt_char2(&self, a: u16) -> Result<u16, FieldError> {
        if self.p != 2 {
            return Err(FieldError::OddCharacteristic);
        }
        Ok(self.pow(a, (self.q / 2) as u64))
    }

    /// True iff the element lies in the Hermitian base subfield.
    pub fn in_subfield(&self, a: u16) -> bool {
        match self.sub_q {
            Some(s) => self.pow(a, s as u64) == a,
            None => false,
        }
    }

    /// Element codes of the Hermitian base subfield, in increasing code order.
    pub fn subfield_elements(&self) -> Result<Vec<u16>, FieldError> {
        if self.sub_q.is_none() {
            return Err(FieldError::NoHermitianStructure);
        }
        Ok(self.elements().filter(|&a| self.in_subfield(a)).collect())
    }

    /// Solve v^(sub_q+1) = u for nonzero subfield u, scanning element codes in
    /// increasing order. The norm map onto the subfield is surjective, so the
    /// scan always terminates.
    pub fn norm_solve(&self, u: u16) -> Result<u16, FieldError> {
        let s = self.sub_q.ok_or(FieldError::NoHermitianStructure)?;
        if u == 0 {
            return Err(FieldError::ZeroInput);
        }
        if !self.in_subfield(u) {
            return Err(FieldError::NotInSubfield(u));
        }
        for v in 1..self.q {
            if self.pow(v as u16, (s + 1) as u64) == u {
                return Ok(v as u16);
            }
        }
        unreachable!("norm map is surjective onto the subfield");
    }

    /// Norm onto the base subfield: a^(sub_q+1).
    pub fn norm(&self, a: u16) -> Result<u16, FieldError> {
        let s = self.sub_q.ok_or(FieldError::NoHermitianStructure)?;
        Ok(self.pow(a, (s + 1) as u64))
    }

    // Polynomial-basis multiply, used to bootstrap tables and for q > 256.
    fn mul_poly(&self, a: u16, b: u16) -> u16 {
        let p = self.p as u32;
        let h = self.h as usize;
        let mut da = code_digits(a, self.p, h);
        let db = code_digits(b, self.p, h);
        let mut prod = vec![0u32; 2 * h];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u32 * y as u32) % p;
            }
        }
        // reduce modulo the monic modulus
        for i in (h..2 * h).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(h) {
                let idx = i - h + j;
                prod[idx] = (prod[idx] + c * (p - m as u32)) % p;
            }
        }
        for (d, src) in da.iter_mut().zip(prod.iter()) {
            *d = *src as u16;
        }
        digits_code(&da, self.p)
    }

    /// Wrap a code as an element of this shared field.
    pub fn elt(self: &FieldRef, code: u16) -> FieldElement {
        assert!((code as u32) < self.q, "code {} out of range for {:?}", code, self);
        FieldElement {
            field: Arc::clone(self),
            code,
        }
    }
}

fn code_digits(c: u16, p: u16, len: usize) -> Vec<u16> {
    let mut c = c as u32;
    let p = p as u32;
    let mut out = vec![0u16; len];
    for d in out.iter_mut() {
        *d = (c % p) as u16;
        c /= p;
    }
    out
}

fn digits_code(digits: &[u16], p: u16) -> u16 {
    let mut out = 0u32;
    for &d in digits.iter().rev() {
        out = out * p as u32 + d as u32;
    }
    out as u16
}

fn factor_prime_power(q: u32) -> Option<(u16, u32)> {
    for p in 2..=q {
        if q % p == 0 {
            if !is_prime(p) {
                return None;
            }
            let mut h = 0;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                h += 1;
            }
            return if rest == 1 { Some((p as u16, h)) } else { None };
        }
    }
    None
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn poly_is_irreducible(modulus: &[u16], p: u16) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        // iterate monic polynomials of degree d: low coefficients as base-p counter
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = vec![0u16; d + 1];
            let mut rest = low;
            for c in divisor.iter_mut().take(d) {
                *c = (rest % p as u64) as u16;
                rest /= p as u64;
            }
            divisor[d] = 1;
            if poly_divides(&divisor, modulus, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(divisor: &[u16], dividend: &[u16], p: u16) -> bool {
    let p = p as u32;
    let mut rem: Vec<u32> = dividend.iter().map(|&c| c as u32).collect();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let top = rem.len() - 1;
        if lead != 0 {
            // divisor is monic
            for (j, &c) in divisor.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = (rem[idx] + lead * (p - c as u32)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// An element bound to its field, for scalar-level work. Bulk carriers
/// (matrices, codes) use raw codes with a shared [`FieldRef`] instead.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    code: u16,
}

impl FieldElement {
    pub fn code(&self) -> u16 {
        self.code
    }
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.field.elt(self.field.add(self.code, rhs.code)))
    }
    pub fn try_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.field.elt(self.field.sub(self.code, rhs.code)))
    }
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.field.elt(self.field.mul(self.code, rhs.code)))
    }
    pub fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.field.elt(self.field.div(self.code, rhs.code)?))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{:?}", self.code, self.field)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.code == other.code
    }
}
impl Eq for FieldElement {}

macro_rules! elt_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field arithmetic")
            }
        }
        impl std::ops::$tr for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field arithmetic")
            }
        }
    };
}
elt_binop!(Add, add, try_add);
elt_binop!(Sub, sub, try_sub);
elt_binop!(Mul, mul, try_mul);
