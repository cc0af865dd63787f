//! Exact scalars in the supported involutive fields: Q, F_p, Q(z_d), and
//! Q(t_1..t_l), each with its canonical involution (identity on Q and F_p,
//! z -> z^{-1} on cyclotomics, t_i -> t_i^{-1} on rational functions).

pub mod cyclotomic;
pub mod factor;
pub mod laurent;
pub mod parse;
pub mod quotient;

use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use cyclotomic::Cyclotomic;
pub use laurent::{Laurent, RatFun};
pub use quotient::{CanonicalPayload, QuotientDescriptor, SubgroupSpec, TorsionClass, UnitSet};

/// Which field a scalar lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField(u64),
    Cyclotomic(u32),
    RationalFunctions(u8),
}

/// The involution carried by each supported field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Involution {
    Identity,
    ComplexConjugation,
    VariableInversion,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rationals,
        }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::validation(format!("{p} is not prime")));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::PrimeField(p),
        })
    }

    pub fn cyclotomic(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::validation("cyclotomic order must be >= 1"));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::Cyclotomic(d),
        })
    }

    pub fn rational_functions(vars: u8) -> Result<Self> {
        if vars == 0 {
            return Err(Error::validation("need at least one variable"));
        }
        Ok(FieldDescriptor {
            kind: FieldKind::RationalFunctions(vars),
        })
    }

    pub fn involution(&self) -> Involution {
        match self.kind {
            FieldKind::Rationals | FieldKind::PrimeField(_) => Involution::Identity,
            FieldKind::Cyclotomic(d) if d <= 2 => Involution::Identity,
            FieldKind::Cyclotomic(_) => Involution::ComplexConjugation,
            FieldKind::RationalFunctions(_) => Involution::VariableInversion,
        }
    }

    /// Whether the field has characteristic zero.
    pub fn char_zero(&self) -> bool {
        !matches!(self.kind, FieldKind::PrimeField(_))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// An exact element of one of the supported fields, in normal form.
#[derive(Clone, PartialEq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    PrimeField { p: u64, value: u64 },
    Cyclotomic(Cyclotomic),
    RationalFunction(RatFun),
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::rationals(),
            Scalar::PrimeField { p, .. } => FieldDescriptor {
                kind: FieldKind::PrimeField(*p),
            },
            Scalar::Cyclotomic(c) => FieldDescriptor {
                kind: FieldKind::Cyclotomic(c.order),
            },
            Scalar::RationalFunction(f) => FieldDescriptor {
                kind: FieldKind::RationalFunctions(f.vars),
            },
        }
    }

    pub fn zero(fd: FieldDescriptor) -> Scalar {
        match fd.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::zero()),
            FieldKind::PrimeField(p) => Scalar::PrimeField { p, value: 0 },
            FieldKind::Cyclotomic(d) => Scalar::Cyclotomic(Cyclotomic::zero(d)),
            FieldKind::RationalFunctions(v) => Scalar::RationalFunction(RatFun::zero(v)),
        }
    }

    pub fn one(fd: FieldDescriptor) -> Scalar {
        match fd.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::one()),
            FieldKind::PrimeField(p) => Scalar::PrimeField { p, value: 1 % p },
            FieldKind::Cyclotomic(d) => Scalar::Cyclotomic(Cyclotomic::one(d)),
            FieldKind::RationalFunctions(v) => Scalar::RationalFunction(RatFun::one(v)),
        }
    }

    pub fn from_integer(fd: FieldDescriptor, n: i64) -> Scalar {
        match fd.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldKind::PrimeField(p) => Scalar::PrimeField {
                p,
                value: n.rem_euclid(p as i64) as u64,
            },
            FieldKind::Cyclotomic(d) => Scalar::Cyclotomic(Cyclotomic::from_rational(
                d,
                BigRational::from(BigInt::from(n)),
            )),
            FieldKind::RationalFunctions(v) => Scalar::RationalFunction(RatFun::from_laurent(
                Laurent::constant(v, BigRational::from(BigInt::from(n))),
            )),
        }
    }

    pub fn from_rational(fd: FieldDescriptor, r: BigRational) -> Result<Scalar> {
        Ok(match fd.kind {
            FieldKind::Rationals => Scalar::Rational(r),
            FieldKind::PrimeField(p) => {
                let num = r.numer().mod_floor_u64(p);
                let den = r.denom().mod_floor_u64(p);
                if den == 0 {
                    return Err(Error::validation("denominator divisible by p"));
                }
                Scalar::PrimeField {
                    p,
                    value: mul_mod(num, pow_mod(den, p - 2, p), p),
                }
            }
            FieldKind::Cyclotomic(d) => Scalar::Cyclotomic(Cyclotomic::from_rational(d, r)),
            FieldKind::RationalFunctions(v) => {
                Scalar::RationalFunction(RatFun::from_laurent(Laurent::constant(v, r)))
            }
        })
    }

    /// The primitive root of unity z_d (cyclotomic fields only).
    pub fn root_of_unity(d: u32, power: i64) -> Scalar {
        Scalar::Cyclotomic(Cyclotomic::root_power(d, power))
    }

    /// The variable t_i of a rational-function field.
    pub fn variable(vars: u8, i: usize, power: i32) -> Scalar {
        Scalar::RationalFunction(RatFun::from_laurent(Laurent::monomial(vars, i, power)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::PrimeField { value, .. } => *value == 0,
            Scalar::Cyclotomic(c) => c.is_zero(),
            Scalar::RationalFunction(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    fn check_same(&self, o: &Scalar) {
        assert_eq!(
            self.field(),
            o.field(),
            "scalar arithmetic across different fields"
        );
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        self.check_same(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::PrimeField { p, value: a }, Scalar::PrimeField { value: b, .. }) => {
                Scalar::PrimeField {
                    p: *p,
                    value: (a + b) % p,
                }
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(b)),
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Scalar::RationalFunction(a.add(b))
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::PrimeField { p, value } => Scalar::PrimeField {
                p: *p,
                value: (p - value % p) % p,
            },
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.neg()),
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.neg()),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        self.check_same(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::PrimeField { p, value: a }, Scalar::PrimeField { value: b, .. }) => {
                Scalar::PrimeField {
                    p: *p,
                    value: mul_mod(*a, *b, *p),
                }
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            (Scalar::RationalFunction(a), Scalar::RationalFunction(b)) => {
                Scalar::RationalFunction(a.mul(b))
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::PrimeField { p, value } => Scalar::PrimeField {
                p: *p,
                value: pow_mod(*value, p - 2, *p),
            },
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.inv()?),
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.inv()?),
        })
    }

    pub fn div(&self, o: &Scalar) -> Option<Scalar> {
        Some(self.mul(&o.inv()?))
    }

    /// The field involution.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rational(_) | Scalar::PrimeField { .. } => self.clone(),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.conj()),
            Scalar::RationalFunction(a) => Scalar::RationalFunction(a.conj()),
        }
    }

    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Some(acc)
    }

    /// Numeric value under the designated embedding (rationals into R,
    /// z_d -> exp(2*pi*i/d)). Prime fields and rational functions have none.
    pub fn embed(&self) -> Result<Complex64> {
        match self {
            Scalar::Rational(r) => Ok(Complex64::new(cyclotomic::rat_to_f64(r), 0.0)),
            Scalar::Cyclotomic(c) => Ok(c.embed()),
            _ => Err(Error::validation(
                "no designated complex embedding for this field",
            )),
        }
    }

    /// Rational value if the element lies in the prime subfield Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(c) => c.as_rational(),
            Scalar::RationalFunction(f) => {
                let n = f.num.terms.iter().collect::<Vec<_>>();
                let d = f.den.terms.iter().collect::<Vec<_>>();
                if n.is_empty() {
                    return Some(BigRational::zero());
                }
                if n.len() == 1
                    && d.len() == 1
                    && n[0].0.iter().all(|&e| e == 0)
                    && d[0].0.iter().all(|&e| e == 0)
                {
                    Some(n[0].1 / d[0].1)
                } else {
                    None
                }
            }
            Scalar::PrimeField { .. } => None,
        }
    }

    /// Sign of a rational scalar (torsions of rational complexes).
    pub fn rational_sign(&self) -> Result<i32> {
        match self {
            Scalar::Rational(r) => Ok(if r.is_negative() {
                -1
            } else if r.is_zero() {
                0
            } else {
                1
            }),
            _ => Err(Error::validation("sign only defined over Q")),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(p)).to_u64().unwrap()
    }
}



#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        // rational 3/2 fixed by the identity involution
        let r = Scalar::Rational(BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(r.conjugate(), r);
        // z_5 -> z_5^4
        let z = Scalar::root_of_unity(5, 1);
        assert_eq!(z.conjugate(), Scalar::root_of_unity(5, 4));
        // 1 - t -> 1 - t^{-1}
        let fd = FieldDescriptor::rational_functions(1).unwrap();
        let one = Scalar::one(fd);
        let f = one.sub(&Scalar::variable(1, 0, 1));
        let g = one.sub(&Scalar::variable(1, 0, -1));
        assert_eq!(f.conjugate(), g);
    }

    #[test]
    fn involution_field_automorphism() {
        let z = Scalar::root_of_unity(12, 5);
        let w = Scalar::root_of_unity(12, 7).add(&Scalar::from_integer(
            FieldDescriptor::cyclotomic(12).unwrap(),
            3,
        ));
        assert_eq!(z.conjugate().conjugate(), z);
        assert_eq!(z.mul(&w).conjugate(), z.conjugate().mul(&w.conjugate()));
        assert_eq!(z.add(&w).conjugate(), z.conjugate().add(&w.conjugate()));
    }

    #[test]
    fn prime_field_inverse() {
        let fd = FieldDescriptor::prime_field(7).unwrap();
        let a = Scalar::from_integer(fd, 3);
        assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one(fd));
        assert!(FieldDescriptor::prime_field(6).is_err());
    }
}
