//! Canonical forms in the quotient groups F^x / <N(F), units> where torsion
//! classes live. N(F) = { x * conj(x) } is the norm subgroup.
//!
//! Supported reductions:
//!   * Q modulo squares: signed squarefree integer.
//!   * F_p modulo squares: quadratic-residue bit by Euler's criterion.
//!   * cyclotomic fields modulo <N, units>: unit-modulus numeric payload via
//!     the embedding z_d -> exp(2*pi*i/d), normalized modulo declared
//!     root-of-unity units.
//!   * Q(t) modulo <N, units>: exact factor bookkeeping. The computation
//!     rests on the exact identities (1+t)^2 = t * (1+t)(1+1/t) and
//!     (t-1) = g * t * (1+t)^{-1} with g = (t-1)(1+t^{-1}) of order four,
//!     g^2 = -1 modulo N; a symmetric irreducible q of degree d satisfies
//!     q^2 = t^d modulo N, and an asymmetric pair {q, q*} satisfies
//!     q * q* = (sign) * t^d modulo N.
//!   * Q(t_1..t_l), l >= 2: partial reduction (monomials and rational
//!     squares only).

use super::factor::{factor_rational_poly, primitive_part, ZPoly};
use super::{FieldDescriptor, FieldKind, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Units adjoined to the norm subgroup in the quotient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitSet {
    /// monomials t_1^{k_1} ... t_l^{k_l}
    pub monomials: bool,
    /// all of Q^x
    pub rationals: bool,
    /// -1
    pub sign: bool,
    /// the group of d-th roots of unity (cyclotomic base fields)
    pub root_of_unity: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgroupSpec {
    /// (F^x)^2, the identity-involution case of N(F)
    Squares,
    /// <N(F), units>
    Norms(UnitSet),
    /// a plain unit subgroup without norms, e.g. +-det rho(pi_1)
    Units(UnitSet),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientDescriptor {
    pub base: FieldDescriptor,
    pub subgroup: SubgroupSpec,
}

impl QuotientDescriptor {
    pub fn squares(base: FieldDescriptor) -> Self {
        QuotientDescriptor {
            base,
            subgroup: SubgroupSpec::Squares,
        }
    }

    pub fn norms(base: FieldDescriptor, units: UnitSet) -> Self {
        QuotientDescriptor {
            base,
            subgroup: SubgroupSpec::Norms(units),
        }
    }

    pub fn units(base: FieldDescriptor, units: UnitSet) -> Self {
        QuotientDescriptor {
            base,
            subgroup: SubgroupSpec::Units(units),
        }
    }
}

/// Canonical payload of a class; two classes in the same quotient are equal
/// as group elements iff their payloads are equal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum CanonicalPayload {
    /// Q mod squares: signed squarefree integer.
    SquarefreeInt(String),
    /// F_p mod squares: true iff a quadratic residue.
    ResidueBit(bool),
    /// Unit-circle representative under the fixed embedding.
    UnitCircle { re: f64, im: f64, precision: f64 },
    /// Q(t) factor bookkeeping.
    Laurent(LaurentClass),
    /// Exact representative normalized modulo a plain unit subgroup.
    Exact(String),
    /// Numeric representative normalized modulo a plain unit subgroup.
    NumericExact { re: f64, im: f64, precision: f64 },
    /// Multivariable case: raw value with monomial/rational-square reduction only.
    Partial {
        squarefree: Option<String>,
        raw: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct LaurentClass {
    /// coordinate on g = (t-1)(1+t^-1); g has order 4, g^2 = -1
    pub z4: u8,
    /// exponent of (1+t); in Z, or in Z/2 when monomials are units
    pub one_plus_t: i64,
    pub one_plus_t_mod2: bool,
    /// positive squarefree integer carrying the prime parities of Q^x/(Q^x)^2
    pub squarefree: Option<String>,
    /// parities over symmetric irreducibles (keys are coefficient strings)
    pub symmetric: BTreeMap<String, bool>,
    /// signed exponents over canonical representatives of asymmetric pairs
    pub asymmetric: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorsionClass {
    pub raw: String,
    pub quotient: QuotientDescriptor,
    pub canonical: CanonicalPayload,
}

impl TorsionClass {
    /// Group-element equality: same quotient and equal payloads (numeric
    /// payloads compared within their precision).
    pub fn same_class(&self, other: &TorsionClass) -> bool {
        if self.quotient != other.quotient {
            return false;
        }
        payload_eq(&self.canonical, &other.canonical)
    }
}

pub fn payload_eq(a: &CanonicalPayload, b: &CanonicalPayload) -> bool {
    match (a, b) {
        (
            CanonicalPayload::NumericExact {
                re, im, precision, ..
            },
            CanonicalPayload::NumericExact {
                re: r2,
                im: i2,
                precision: p2,
            },
        ) => {
            let tol = precision.max(*p2).max(1e-15) * 10.0;
            (re - r2).abs() <= tol && (im - i2).abs() <= tol
        }
        (
            CanonicalPayload::UnitCircle {
                re, im, precision, ..
            },
            CanonicalPayload::UnitCircle {
                re: r2,
                im: i2,
                precision: p2,
            },
        ) => {
            let tol = precision.max(*p2).max(1e-15) * 10.0;
            (re - r2).abs() <= tol && (im - i2).abs() <= tol
        }
        _ => a == b,
    }
}

/// Product of two payloads in the coded group (used by the homomorphism
/// property tests).
pub fn payload_mul(a: &CanonicalPayload, b: &CanonicalPayload) -> Result<CanonicalPayload> {
    match (a, b) {
        (CanonicalPayload::SquarefreeInt(x), CanonicalPayload::SquarefreeInt(y)) => {
            let x: BigInt = x.parse().unwrap();
            let y: BigInt = y.parse().unwrap();
            Ok(CanonicalPayload::SquarefreeInt(
                squarefree_part(&(x * y))?.to_string(),
            ))
        }
        (CanonicalPayload::ResidueBit(x), CanonicalPayload::ResidueBit(y)) => {
            Ok(CanonicalPayload::ResidueBit(x == y))
        }
        (
            CanonicalPayload::UnitCircle { re, im, precision },
            CanonicalPayload::UnitCircle {
                re: r2,
                im: i2,
                precision: p2,
            },
        ) => Ok(CanonicalPayload::UnitCircle {
            re: re * r2 - im * i2,
            im: re * i2 + im * r2,
            precision: precision.max(*p2),
        }),
        (CanonicalPayload::Laurent(x), CanonicalPayload::Laurent(y)) => {
            let mut out = x.clone();
            out.z4 = (out.z4 + y.z4) % 4;
            out.one_plus_t += y.one_plus_t;
            if out.one_plus_t_mod2 {
                out.one_plus_t = out.one_plus_t.rem_euclid(2);
            }
            out.squarefree = match (&x.squarefree, &y.squarefree) {
                (Some(s1), Some(s2)) => {
                    let p: BigInt = s1.parse::<BigInt>().unwrap() * s2.parse::<BigInt>().unwrap();
                    Some(squarefree_part(&p)?.to_string())
                }
                _ => None,
            };
            for (k, v) in &y.symmetric {
                let e = out.symmetric.entry(k.clone()).or_insert(false);
                *e ^= *v;
            }
            out.symmetric.retain(|_, v| *v);
            for (k, v) in &y.asymmetric {
                let e = out.asymmetric.entry(k.clone()).or_insert(0);
                *e += *v;
            }
            out.asymmetric.retain(|_, v| *v != 0);
            Ok(CanonicalPayload::Laurent(out))
        }
        _ => Err(Error::validation("payloads from different quotients")),
    }
}

/// Identity payload of a quotient.
pub fn payload_identity(q: &QuotientDescriptor) -> CanonicalPayload {
    match (&q.base.kind, &q.subgroup) {
        (FieldKind::Rationals, _) => CanonicalPayload::SquarefreeInt("1".into()),
        (FieldKind::PrimeField(_), _) => CanonicalPayload::ResidueBit(true),
        (FieldKind::Cyclotomic(_), _) => CanonicalPayload::UnitCircle {
            re: 1.0,
            im: 0.0,
            precision: crate::DEFAULT_PRECISION,
        },
        (FieldKind::RationalFunctions(1), SubgroupSpec::Norms(units)) => {
            CanonicalPayload::Laurent(LaurentClass {
                one_plus_t_mod2: units.monomials,
                squarefree: if units.rationals {
                    None
                } else {
                    Some("1".into())
                },
                ..Default::default()
            })
        }
        _ => CanonicalPayload::Partial {
            squarefree: Some("1".into()),
            raw: "1".into(),
        },
    }
}

fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::validation("squarefree part of zero"));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut n = n.abs();
    let mut out = BigInt::from(sign);
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= n && p <= limit {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    if n > BigInt::one() {
        // leftover is prime (trial division exhausted) or a prime square
        let r = n.sqrt();
        if &r * &r == n {
            // even exponent, drop
        } else {
            out *= &n;
        }
    }
    Ok(out)
}

/// True iff conj(f) = r * t^n * f for a rational r and monomial t^n.
pub fn is_reciprocal(f: &Scalar) -> Result<bool> {
    let rf = match f {
        Scalar::RationalFunction(rf) => rf,
        _ => return Err(Error::validation("is_reciprocal needs a rational function")),
    };
    if rf.is_zero() {
        return Err(Error::validation("is_reciprocal of zero"));
    }
    // conj(f)/f = (conj(num) * den) / (num * conj(den)); reciprocal iff this
    // is a rational times a monomial, iff the two products agree after
    // monomial shift and content normalization.
    let p = rf.num.conj().mul(&rf.den);
    let q = rf.num.mul(&rf.den.conj());
    Ok(normalize_monomial_content(&p) == normalize_monomial_content(&q))
}

fn normalize_monomial_content(p: &super::Laurent) -> super::Laurent {
    if p.is_zero() {
        return p.clone();
    }
    let m = p.min_exponents();
    let shifted = p.shift(&m.iter().map(|x| -x).collect::<Vec<_>>());
    let c = shifted.content();
    shifted.scale(&c.recip())
}

/// Canonical form of s in F^x / subgroup. See the module docs for the coded
/// groups per field.
pub fn canonical_class(s: &Scalar, q: &QuotientDescriptor) -> Result<TorsionClass> {
    if s.is_zero() {
        return Err(Error::precondition("canonical class of zero"));
    }
    if s.field() != q.base {
        return Err(Error::validation("scalar not in the quotient's base field"));
    }
    let canonical = match (&q.base.kind, &q.subgroup) {
        (FieldKind::Rationals, _) => {
            // with identity involution N(Q) = squares
            let r = s.as_rational().unwrap();
            CanonicalPayload::SquarefreeInt(squarefree_part(&(r.numer() * r.denom()))?.to_string())
        }
        (FieldKind::PrimeField(p), _) => {
            let v = match s {
                Scalar::PrimeField { value, .. } => *value,
                _ => unreachable!(),
            };
            CanonicalPayload::ResidueBit(euler_residue(v, *p))
        }
        (FieldKind::Cyclotomic(_), SubgroupSpec::Norms(units)) => {
            let z = s.embed()?;
            let n = z.norm();
            if n < 1e-300 {
                return Err(Error::precondition("embedded value numerically zero"));
            }
            let mut w = z / n;
            // fold declared root-of-unity units into a principal angle
            let mut ord = units.root_of_unity.unwrap_or(1).max(1);
            if units.sign {
                ord = num_integer::lcm(ord, 2);
            }
            if ord > 1 {
                let sector = 2.0 * std::f64::consts::PI / ord as f64;
                let mut theta = w.im.atan2(w.re);
                theta -= (theta / sector).round() * sector;
                w = num_complex::Complex64::from_polar(1.0, theta);
            }
            CanonicalPayload::UnitCircle {
                re: w.re,
                im: w.im,
                precision: crate::DEFAULT_PRECISION,
            }
        }
        (_, SubgroupSpec::Units(units)) => {
            CanonicalPayload::Exact(units_normalize(s, units)?.to_string())
        }
        (FieldKind::Cyclotomic(_), SubgroupSpec::Squares) => {
            return Err(Error::validation(
                "unsupported quotient: cyclotomic modulo squares",
            ))
        }
        (FieldKind::RationalFunctions(1), SubgroupSpec::Norms(units)) => {
            CanonicalPayload::Laurent(laurent_class(s, units)?)
        }
        (FieldKind::RationalFunctions(_), SubgroupSpec::Norms(units)) => {
            // l >= 2: monomial and rational-square reduction only
            let rf = match s {
                Scalar::RationalFunction(rf) => rf,
                _ => unreachable!(),
            };
            let cn = rf.num.content();
            let cd = rf.den.content();
            let c = cn / cd;
            let sf = if units.rationals {
                None
            } else {
                Some(squarefree_part(&(c.numer() * c.denom()))?.to_string())
            };
            CanonicalPayload::Partial {
                squarefree: sf,
                raw: s.to_string(),
            }
        }
        (FieldKind::RationalFunctions(_), SubgroupSpec::Squares) => {
            return Err(Error::validation(
                "unsupported quotient: rational functions modulo squares",
            ))
        }
    };
    Ok(TorsionClass {
        raw: s.to_string(),
        quotient: q.clone(),
        canonical,
    })
}

/// Deterministic representative of s modulo the declared unit subgroup:
/// the orbit element with the smallest display string.
pub fn units_normalize(s: &Scalar, units: &UnitSet) -> Result<Scalar> {
    let mut orbit = vec![s.clone()];
    if let Some(m) = units.root_of_unity {
        if m > 1 {
            let d = match s.field().kind {
                FieldKind::Cyclotomic(d) => d,
                _ => {
                    return Err(Error::validation(
                        "root-of-unity units need a cyclotomic base field",
                    ))
                }
            };
            if d % m != 0 {
                return Err(Error::validation("unit order does not divide the field order"));
            }
            let zeta = Scalar::root_of_unity(d, (d / m) as i64);
            let mut acc = s.clone();
            for _ in 1..m {
                acc = acc.mul(&zeta);
                orbit.push(acc.clone());
            }
        }
    }
    if units.sign {
        let more: Vec<Scalar> = orbit.iter().map(|x| x.neg()).collect();
        orbit.extend(more);
    }
    let mut best: Option<(String, Scalar)> = None;
    for x in orbit {
        let key = x.to_string();
        if best.as_ref().map(|(k, _)| key < *k).unwrap_or(true) {
            best = Some((key, x));
        }
    }
    Ok(best.unwrap().1)
}

fn euler_residue(v: u64, p: u64) -> bool {
    // v^{(p-1)/2} mod p
    let mut r = 1u64;
    let mut b = v % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r == 1
}

/// Exact reduction in Q(t)^x / <N, units>.
fn laurent_class(s: &Scalar, units: &UnitSet) -> Result<LaurentClass> {
    let rf = match s {
        Scalar::RationalFunction(rf) => rf,
        _ => unreachable!(),
    };
    let mut acc = Accum::default();
    accumulate(&rf.num, 1, &mut acc)?;
    accumulate(&rf.den, -1, &mut acc)?;
    acc.fold(units)
}

#[derive(Default)]
struct Accum {
    z4: i64,
    texp: i64,
    onept: i64,
    rational: BigRational,
    symmetric: BTreeMap<String, i64>,
    asymmetric: BTreeMap<String, i64>,
}

fn poly_key(p: &ZPoly) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

fn reverse_poly(p: &ZPoly) -> ZPoly {
    let mut r: ZPoly = p.iter().rev().cloned().collect();
    while r.last().map(|c| c.is_zero()).unwrap_or(false) {
        r.pop();
    }
    r
}

/// Compare coefficient sequences: by degree, then lexicographically on the
/// ascending coefficients. Fixes the representative of an asymmetric pair.
fn poly_lex_smaller(a: &ZPoly, b: &ZPoly) -> bool {
    if a.len() != b.len() {
        return a.len() < b.len();
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x < y;
        }
    }
    false
}

fn accumulate(p: &super::Laurent, direction: i64, acc: &mut Accum) -> Result<()> {
    assert_eq!(p.vars, 1);
    if p.is_zero() {
        return Err(Error::precondition("zero numerator or denominator"));
    }
    let mexp = p.min_exponents()[0] as i64;
    acc.texp += direction * mexp;
    let shifted = p.shift(&[-(mexp as i32)]);
    let dense = shifted.to_dense();
    let (unit, factors) = factor_rational_poly(&dense);
    if acc.rational.is_zero() {
        acc.rational = BigRational::one();
    }
    if direction == 1 {
        acc.rational *= &unit;
    } else {
        acc.rational /= &unit;
    }
    for (q, e) in factors {
        let e = e as i64 * direction;
        let d = (q.len() - 1) as i64;
        let one_plus: ZPoly = vec![BigInt::one(), BigInt::one()];
        let t_minus: ZPoly = vec![BigInt::from(-1), BigInt::one()];
        if q == one_plus {
            acc.onept += e;
            continue;
        }
        if q == t_minus {
            // (t - 1) = g * t * (1+t)^{-1} exactly
            acc.z4 += e;
            acc.texp += e;
            acc.onept -= e;
            continue;
        }
        let rev = reverse_poly(&q);
        let (rsign, rprim) = {
            let (u, prim) = primitive_part(
                &rev.iter()
                    .map(|c| BigRational::from(c.clone()))
                    .collect::<Vec<_>>(),
            );
            (u, prim)
        };
        if rprim == q {
            // symmetric: q^2 = (sign) t^d mod N, with sign = +1 for
            // irreducibles other than t - 1
            debug_assert!(rsign.is_one(), "anti-symmetric irreducible beyond t-1");
            let parity = e.rem_euclid(2);
            let halves = (e - parity) / 2;
            acc.texp += d * halves;
            *acc.symmetric.entry(poly_key(&q)).or_insert(0) += parity;
            continue;
        }
        // asymmetric pair {q, rprim}
        if poly_lex_smaller(&q, &rprim) {
            *acc.asymmetric.entry(poly_key(&q)).or_insert(0) += e;
        } else {
            // q = conj(rep)^sign-normalized: q = rsign' * t^{-d} *... use
            // rep * conj(rep) in N: class(q) = class(rep)^{-1} * t^d * sgn
            *acc.asymmetric.entry(poly_key(&rprim)).or_insert(0) -= e;
            acc.texp += d * e;
            if rsign.is_negative() {
                acc.z4 += 2 * e;
            }
        }
    }
    Ok(())
}

impl Accum {
    fn fold(mut self, units: &UnitSet) -> Result<LaurentClass> {
        // rational content: sign into the order-4 coordinate, magnitude into
        // prime parities
        if self.rational.is_zero() {
            self.rational = BigRational::one();
        }
        if self.rational.is_negative() {
            self.z4 += 2;
        }
        let sf = squarefree_part(&(self.rational.numer() * self.rational.denom()))?.abs();
        let squarefree = if units.rationals {
            None
        } else {
            Some(sf.to_string())
        };
        let mut onept = self.onept;
        if units.monomials {
            // t is a unit and (1+t)^2 = t mod N
            onept = onept.rem_euclid(2);
        } else {
            // t = (1+t)^2 mod N exactly
            onept += 2 * self.texp;
        }
        let mut z4 = self.z4.rem_euclid(4) as u8;
        if units.sign {
            z4 %= 2;
        }
        let symmetric: BTreeMap<String, bool> = self
            .symmetric
            .into_iter()
            .filter(|(_, v)| v.rem_euclid(2) == 1)
            .map(|(k, _)| (k, true))
            .collect();
        let asymmetric: BTreeMap<String, i64> = self
            .asymmetric
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .collect();
        Ok(LaurentClass {
            z4,
            one_plus_t: onept,
            one_plus_t_mod2: units.monomials,
            squarefree,
            symmetric,
            asymmetric,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse::parse_scalar;

    fn qt() -> FieldDescriptor {
        FieldDescriptor::rational_functions(1).unwrap()
    }

    fn monomial_units() -> QuotientDescriptor {
        QuotientDescriptor::norms(
            qt(),
            UnitSet {
                monomials: true,
                ..Default::default()
            },
        )
    }

    #[test]
    fn squarefree_examples() {
        // 18 = 2 * 3^2 in Q mod squares
        let s = parse_scalar("18", None).unwrap();
        let c = canonical_class(&s, &QuotientDescriptor::squares(FieldDescriptor::rationals()))
            .unwrap();
        assert_eq!(c.canonical, CanonicalPayload::SquarefreeInt("2".into()));
    }

    #[test]
    fn residue_examples() {
        // squares mod 7 are {1, 2, 4}; 3 is a non-residue
        let fd = FieldDescriptor::prime_field(7).unwrap();
        let c = canonical_class(
            &Scalar::from_integer(fd, 3),
            &QuotientDescriptor::squares(fd),
        )
        .unwrap();
        assert_eq!(c.canonical, CanonicalPayload::ResidueBit(false));
        let c2 = canonical_class(
            &Scalar::from_integer(fd, 2),
            &QuotientDescriptor::squares(fd),
        )
        .unwrap();
        assert_eq!(c2.canonical, CanonicalPayload::ResidueBit(true));
    }

    #[test]
    fn one_minus_t_squared_has_order_two() {
        let s = parse_scalar("(1 - t)^2", None).unwrap();
        let c = canonical_class(&s, &monomial_units()).unwrap();
        match &c.canonical {
            CanonicalPayload::Laurent(l) => {
                assert_eq!(l.z4, 2);
                assert_eq!(l.one_plus_t.rem_euclid(2), 0);
                assert!(l.symmetric.is_empty() && l.asymmetric.is_empty());
                assert_eq!(l.squarefree.as_deref(), Some("1"));
            }
            other => panic!("unexpected payload {other:?}"),
        }
    }

    #[test]
    fn order_four_generator() {
        let s = parse_scalar("(t - 1)(1 + t^-1)", None).unwrap();
        let c = canonical_class(&s, &monomial_units()).unwrap();
        match &c.canonical {
            CanonicalPayload::Laurent(l) => {
                assert_eq!(l.z4, 1);
            }
            other => panic!("unexpected payload {other:?}"),
        }
        // its square is the class of -1 (order 2), its fourth power trivial
        let s2 = s.mul(&s);
        let c2 = canonical_class(&s2, &monomial_units()).unwrap();
        match &c2.canonical {
            CanonicalPayload::Laurent(l) => assert_eq!(l.z4, 2),
            _ => unreachable!(),
        }
        let s4 = s2.mul(&s2);
        let c4 = canonical_class(&s4, &monomial_units()).unwrap();
        assert_eq!(c4.canonical, payload_identity(&monomial_units()));
    }

    #[test]
    fn norm_classes_are_trivial() {
        for text in ["1 - t", "t^2 + 3 t - 5", "(2 t - 1)/(t + 4)"] {
            let s = parse_scalar(text, None).unwrap();
            let n = s.mul(&s.conjugate());
            let c = canonical_class(&n, &monomial_units()).unwrap();
            assert_eq!(
                c.canonical,
                payload_identity(&monomial_units()),
                "norm of {text} not trivial: {:?}",
                c.canonical
            );
        }
    }

    #[test]
    fn reciprocal_detection() {
        let t_plus_1 = parse_scalar("t + 1", None).unwrap();
        assert!(is_reciprocal(&t_plus_1).unwrap());
        let cyc = parse_scalar("t^2 + t + 1", None).unwrap();
        assert!(is_reciprocal(&cyc).unwrap());
        let shifted = parse_scalar("t - 2", None).unwrap();
        assert!(!is_reciprocal(&shifted).unwrap());
    }
}
