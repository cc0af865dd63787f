//! Exact arithmetic in cyclotomic fields Q(z_d), z_d = exp(2*pi*i/d).
//!
//! Elements are coordinate vectors in Q[x]/(Phi_d(x)) where Phi_d is the
//! d-th cyclotomic polynomial; the involution is z -> z^{-1} (complex
//! conjugation under the fixed embedding z_d -> exp(2*pi*i/d)).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn phi_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (ascending) of the d-th cyclotomic polynomial, monic over Z.
/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let poly = if d == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = BigInt::from(-1);
        num[d as usize] = BigInt::one();
        for e in 1..d {
            if d % e == 0 {
                num = int_poly_div_exact(&num, &cyclotomic_polynomial(e));
            }
        }
        num
    };
    phi_cache().lock().unwrap().insert(d, poly.clone());
    poly
}

/// Exact division of integer polynomials (ascending coefficients), divisor monic
/// or with leading coefficient dividing everything it meets.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dn)];
    while rem.len() > dn && rem.iter().any(|c| !c.is_zero()) {
        while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.len() <= dn {
            break;
        }
        let k = rem.len() - 1 - dn;
        let c = &rem[rem.len() - 1] / &lead;
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            let idx = k + i;
            let sub = dc * &c;
            rem[idx] -= sub;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Euler's totient, the degree of Phi_d.
pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of Q(z_d) as a reduced coordinate vector modulo Phi_d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclotomic {
    pub order: u32,
    /// Length euler_phi(order); coords[k] is the coefficient of z^k.
    pub coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic {
            order,
            coords: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        let mut z = Cyclotomic::zero(order);
        if !z.coords.is_empty() {
            z.coords[0] = r;
        } else {
            // order 1 or 2 still has phi = 1, so this branch is unreachable
            z.coords.push(r);
        }
        z
    }

    pub fn one(order: u32) -> Self {
        Cyclotomic::from_rational(order, BigRational::one())
    }

    /// z_d^k for any integer k.
    pub fn root_power(order: u32, k: i64) -> Self {
        let d = order as i64;
        let k = k.rem_euclid(d) as usize;
        let mut dense = vec![BigRational::zero(); k + 1];
        dense[k] = BigRational::one();
        Cyclotomic::reduce(order, dense)
    }

    /// Reduce an arbitrary-degree polynomial in z to coordinates mod Phi_d.
    fn reduce(order: u32, mut dense: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        // divide by monic Phi_d, keep remainder
        while dense.len() > deg {
            while dense.last().map(|c| c.is_zero()).unwrap_or(false) && dense.len() > deg {
                dense.pop();
            }
            if dense.len() <= deg {
                break;
            }
            let k = dense.len() - 1 - deg;
            let c = dense[dense.len() - 1].clone();
            for (i, pc) in phi.iter().enumerate() {
                let sub = BigRational::from(pc.clone()) * &c;
                dense[k + i] -= sub;
            }
        }
        dense.resize(deg, BigRational::zero());
        Cyclotomic {
            order,
            coords: dense,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        Cyclotomic {
            order: self.order,
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        let n = self.coords.len();
        if n == 0 {
            return self.clone();
        }
        let mut dense = vec![BigRational::zero(); 2 * n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                dense[i + j] += a * b;
            }
        }
        Cyclotomic::reduce(self.order, dense)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(BigRational::from)
            .collect();
        // gcd(self, phi) = 1 since Phi_d is irreducible; find s with s*self = 1 mod phi
        let (_, s) = ext_gcd_poly(&trim(self.coords.clone()), &phi)?;
        Some(Cyclotomic::reduce(self.order, s))
    }

    /// The involution z -> z^{-1} (complex conjugation under the embedding).
    pub fn conj(&self) -> Self {
        let d = self.order as usize;
        let mut dense = vec![BigRational::zero(); (d - 1) * (self.coords.len().max(1)) + 1];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (d - k) % d; // z^k -> z^{d-k}
            dense[e] += c;
        }
        Cyclotomic::reduce(self.order, dense)
    }

    /// Numeric value under z_d -> exp(2*pi*i/d).
    pub fn embed(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.order as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coords.iter().rev() {
            acc = acc * z + Complex64::new(rat_to_f64(c), 0.0);
        }
        acc
    }

    /// Rational part if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Re-express in Q(z_m) for an order m that is a multiple of the current one.
    pub fn promote(&self, m: u32) -> Self {
        assert!(m % self.order == 0);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as i64;
        let mut acc = Cyclotomic::zero(m);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = Cyclotomic::root_power(m, step * k as i64);
            for x in t.coords.iter_mut() {
                *x *= c;
            }
            acc = acc.add(&t);
        }
        acc
    }
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or_else(|| {
        // fall back for very large entries
        let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n
    }) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Extended gcd in Q[x]: returns (g, s) with s*a = g mod b and g constant 1
/// when gcd(a, b) is a unit. Coefficients ascending.
fn ext_gcd_poly(
    a: &[BigRational],
    b: &[BigRational],
) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = vec![];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = trim(r);
        s0 = s1;
        s1 = trim(s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let s: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    Some((vec![BigRational::one()], s))
}

pub(crate) fn poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = trim(den.to_vec());
    assert!(!den.is_empty());
    let mut rem = trim(num.to_vec());
    let dn = den.len() - 1;
    let lead = den[dn].clone();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dn)];
    while rem.len() > dn {
        let k = rem.len() - 1 - dn;
        let c = &rem[rem.len() - 1] / &lead;
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            let sub = dc * &c;
            rem[k + i] -= sub;
        }
        rem = trim(rem);
    }
    (quot, rem)
}

pub(crate) fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// Exact square root of a positive rational inside Q(z_d), built from Gauss
/// sums: sqrt(2) = z_8 + z_8^{-1}; for an odd prime p the quadratic Gauss sum
/// g_p = sum_k (k|p) z_p^k equals sqrt(p) for p = 1 mod 4 and i*sqrt(p) for
/// p = 3 mod 4. Returns None when the required roots of unity are missing.
pub fn sqrt_rational(c: &BigRational, order: u32) -> Option<Cyclotomic> {
    if c.is_negative() {
        return None;
    }
    if c.is_zero() {
        return Some(Cyclotomic::zero(order));
    }
    // sqrt(u/v) = sqrt(u*v)/v
    let uv = c.numer() * c.denom();
    let mut s = uv.clone();
    let mut square_part = BigInt::one();
    let mut squarefree: Vec<u64> = vec![];
    let mut p = BigInt::from(2);
    while &p * &p <= s {
        let mut e = 0u32;
        while (&s % &p).is_zero() {
            s /= &p;
            e += 1;
        }
        if e > 0 {
            square_part *= p.pow(e / 2);
            if e % 2 == 1 {
                squarefree.push(p.to_u64()?);
            }
        }
        p += 1;
    }
    if s > BigInt::one() {
        squarefree.push(s.to_u64()?);
    }
    let mut acc = Cyclotomic::from_rational(
        order,
        BigRational::new(square_part, c.denom().clone()),
    );
    for q in squarefree {
        let root = sqrt_prime(q, order)?;
        acc = acc.mul(&root);
    }
    Some(acc)
}

fn sqrt_prime(p: u64, order: u32) -> Option<Cyclotomic> {
    if p == 2 {
        if order % 8 != 0 {
            return None;
        }
        let k = (order / 8) as i64;
        return Some(Cyclotomic::root_power(order, k).add(&Cyclotomic::root_power(order, -k)));
    }
    if order as u64 % p != 0 {
        return None;
    }
    let step = (order as u64 / p) as i64;
    let mut g = Cyclotomic::zero(order);
    for k in 1..p {
        let sym = legendre(k, p);
        let t = Cyclotomic::root_power(order, step * k as i64);
        g = if sym == 1 { g.add(&t) } else { g.add(&t.neg()) };
    }
    if p % 4 == 1 {
        Some(g)
    } else {
        // g = i*sqrt(p); divide by i = z_4
        if order % 4 != 0 {
            return None;
        }
        let i_inv = Cyclotomic::root_power(order, -((order / 4) as i64));
        Some(g.mul(&i_inv))
    }
}

fn legendre(mut a: u64, p: u64) -> i32 {
    a %= p;
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_polynomials() {
        let p12 = cyclotomic_polynomial(12); // x^4 - x^2 + 1
        let want: Vec<BigInt> = [1, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(p12, want);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(24), 8);
    }

    #[test]
    fn conj_is_involution() {
        let z = Cyclotomic::root_power(5, 1);
        assert_eq!(z.conj(), Cyclotomic::root_power(5, 4));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn inverse_and_embed() {
        let z = Cyclotomic::root_power(12, 7);
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), Cyclotomic::one(12));
        let e = z.embed() * inv.embed();
        assert!((e - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn gauss_sum_sqrts() {
        for (c, d) in [(2u64, 8u32), (3, 12), (5, 5), (6, 24), (7, 28)] {
            let r = sqrt_rational(&BigRational::from(BigInt::from(c)), d).unwrap();
            let val = r.embed();
            assert!(
                (val.re - (c as f64).sqrt()).abs() < 1e-9 && val.im.abs() < 1e-9,
                "sqrt({c}) in Q(z_{d}) gave {val}"
            );
            assert_eq!(r.mul(&r).as_rational().unwrap(), BigRational::from(BigInt::from(c)));
        }
        assert!(sqrt_rational(&BigRational::from(BigInt::from(2)), 5).is_none());
    }

    #[test]
    fn promote_keeps_value() {
        let z6 = Cyclotomic::root_power(6, 1);
        let z24 = z6.promote(24);
        assert_eq!(z24, Cyclotomic::root_power(24, 4));
    }
}
