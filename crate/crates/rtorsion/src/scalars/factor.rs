//! Irreducible factorization of univariate polynomials over Q.
//!
//! Pipeline: primitive part -> squarefree decomposition -> monic-ize via
//! y = lc*x -> factor mod a good small prime (distinct-degree plus
//! Cantor-Zassenhaus) -> Hensel lift past the Mignotte bound -> subset
//! recombination over Z. Degrees in this crate stay small, so the simple
//! quadratic-time variants are fine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::poly_gcd;

pub type ZPoly = Vec<BigInt>; // ascending coefficients

fn trim(v: &mut ZPoly) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn deg(v: &ZPoly) -> usize {
    v.len().saturating_sub(1)
}

fn content(v: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

/// Primitive part with positive leading coefficient; poly = unit * primitive.
pub fn primitive_part(v: &[BigRational]) -> (BigRational, ZPoly) {
    let mut den = BigInt::one();
    for c in v {
        den = den.lcm(c.denom());
    }
    let mut z: ZPoly = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    trim(&mut z);
    if z.is_empty() {
        return (BigRational::zero(), vec![]);
    }
    let mut cont = content(&z);
    if z.last().unwrap().is_negative() {
        cont = -cont;
    }
    for c in z.iter_mut() {
        *c = &*c / &cont;
    }
    (BigRational::new(cont, den), z)
}

pub fn zpoly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division in Z[x] when exact; None otherwise.
pub fn zpoly_div_exact(num: &ZPoly, den: &ZPoly) -> Option<ZPoly> {
    let mut rem = num.clone();
    trim(&mut rem);
    let mut d = den.clone();
    trim(&mut d);
    if d.is_empty() {
        return None;
    }
    if rem.is_empty() {
        return Some(vec![]);
    }
    if rem.len() < d.len() {
        return None;
    }
    let dn = deg(&d);
    let lead = d[dn].clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    loop {
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
        if rem.len() < d.len() {
            return None;
        }
        let k = rem.len() - 1 - dn;
        let (q, r) = rem[rem.len() - 1].div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        quot[k] = q.clone();
        for (i, dc) in d.iter().enumerate() {
            let s = dc * &q;
            rem[k + i] -= s;
        }
    }
    Some(quot)
}

fn to_rational(v: &ZPoly) -> Vec<BigRational> {
    v.iter().map(|c| BigRational::from(c.clone())).collect()
}

fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let g = poly_gcd(&to_rational(a), &to_rational(b));
    if g.is_empty() {
        return vec![];
    }
    primitive_part(&g).1
}

/// Squarefree decomposition of a primitive polynomial: (factor, multiplicity)
/// with factor primitive squarefree, multiplicities exact.
fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    let deriv: ZPoly = {
        let mut d: ZPoly = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        trim(&mut d);
        d
    };
    let mut g = primitive_gcd(f, &deriv);
    let mut w = zpoly_div_exact(f, &g).expect("gcd divides");
    let mut out = vec![];
    let mut i = 1u32;
    while deg(&w) > 0 {
        let y = primitive_gcd(&w, &g);
        let fac = zpoly_div_exact(&w, &y).expect("gcd divides");
        if deg(&fac) > 0 {
            out.push((primitive_part(&to_rational(&fac)).1, i));
        }
        g = zpoly_div_exact(&g, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    out
}

// ---- arithmetic mod small primes ----

type PPoly = Vec<u64>;

fn p_trim(v: &mut PPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn p_mul(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    p_trim(&mut out);
    out
}

fn p_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    result
}

fn p_divmod(num: &PPoly, den: &PPoly, p: u64) -> (PPoly, PPoly) {
    let mut rem = num.clone();
    p_trim(&mut rem);
    let mut d = den.clone();
    p_trim(&mut d);
    assert!(!d.is_empty());
    let dn = d.len() - 1;
    let linv = p_inv(d[dn], p);
    let mut quot = vec![0u64; rem.len().saturating_sub(dn)];
    while rem.len() > dn {
        let k = rem.len() - 1 - dn;
        let c = (rem[rem.len() - 1] as u128 * linv as u128 % p as u128) as u64;
        quot[k] = c;
        for (i, &dc) in d.iter().enumerate() {
            let s = (dc as u128 * c as u128 % p as u128) as u64;
            rem[k + i] = (rem[k + i] + p - s) % p;
        }
        p_trim(&mut rem);
    }
    (quot, rem)
}

fn p_gcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    p_trim(&mut r0);
    p_trim(&mut r1);
    while !r1.is_empty() {
        let (_, r) = p_divmod(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    if let Some(&l) = r0.last() {
        let li = p_inv(l, p);
        for c in r0.iter_mut() {
            *c = (*c as u128 * li as u128 % p as u128) as u64;
        }
    }
    r0
}

fn p_powmod(base: &PPoly, mut e: BigInt, f: &PPoly, p: u64) -> PPoly {
    let mut result = vec![1u64];
    let mut b = p_divmod(base, f, p).1;
    while e.is_positive() {
        if (&e % 2u32).is_one() {
            result = p_divmod(&p_mul(&result, &b, p), f, p).1;
        }
        b = p_divmod(&p_mul(&b, &b, p), f, p).1;
        e /= 2u32;
    }
    result
}

fn p_derivative(a: &PPoly, p: u64) -> PPoly {
    let mut out: PPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (c as u128 * (i as u64 % p) as u128 % p as u128) as u64)
        .collect();
    p_trim(&mut out);
    out
}

fn p_sub(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c % p;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c % p) % p;
    }
    p_trim(&mut out);
    out
}

/// Factor a squarefree monic polynomial mod p into monic irreducibles.
fn factor_mod_p(f: &PPoly, p: u64, seed: &mut u64) -> Vec<PPoly> {
    let mut out: Vec<PPoly> = vec![];
    let mut rest = f.clone();
    let mut d = 0usize;
    let mut xq: PPoly = vec![0, 1];
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push(rest.clone());
            break;
        }
        xq = p_powmod(&xq, BigInt::from(p), &rest, p);
        let mut diff = xq.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        p_trim(&mut diff);
        let g = p_gcd(&diff, &rest, p);
        if g.len() > 1 {
            out.extend(equal_degree_split(&g, d, p, seed));
            let (q, _) = p_divmod(&rest, &g, p);
            rest = q;
            if rest.len() > 1 {
                xq = p_divmod(&xq, &rest, p).1;
            }
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting, p odd.
fn equal_degree_split(f: &PPoly, d: usize, p: u64, seed: &mut u64) -> Vec<PPoly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let mut r: PPoly = (0..n)
            .map(|_| {
                *seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (*seed >> 33) % p
            })
            .collect();
        p_trim(&mut r);
        if r.len() <= 1 {
            continue;
        }
        let e = (BigInt::from(p).pow(d as u32) - 1) / 2;
        let mut h = p_powmod(&r, e, f, p);
        if h.is_empty() {
            h = vec![0];
        }
        h[0] = (h[0] + p - 1) % p;
        p_trim(&mut h);
        if h.is_empty() {
            continue;
        }
        let g = p_gcd(&h, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let (q, _) = p_divmod(f, &g, p);
            let mut out = equal_degree_split(&g, d, p, seed);
            out.extend(equal_degree_split(&q, d, p, seed));
            return out;
        }
    }
}

// ---- Hensel lifting ----

fn mod_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}

fn zpoly_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| mod_sym(c, m)).collect();
    trim(&mut v);
    v
}

fn zpoly_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn zpoly_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Division with remainder mod m by a monic divisor.
fn zpoly_divmod_monic(num: &ZPoly, den: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let mut rem = zpoly_mod(num, m);
    let d = den.clone();
    debug_assert!(d.last().map(|c| c.is_one()).unwrap_or(false));
    let dn = d.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dn)];
    while rem.len() > dn {
        let k = rem.len() - 1 - dn;
        let c = rem[rem.len() - 1].clone();
        quot[k] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            let s = dc * &c;
            rem[k + i] -= s;
        }
        rem = zpoly_mod(&rem, m);
    }
    (zpoly_mod(&quot, m), rem)
}

/// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic;
/// returns the lifts mod m^2.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zpoly_mod(&zpoly_sub(f, &zpoly_mul(g, h)), &m2);
    let (q, r) = zpoly_divmod_monic(&zpoly_mul(s, &e), h, &m2);
    let g1 = zpoly_mod(
        &zpoly_add(g, &zpoly_add(&zpoly_mul(t, &e), &zpoly_mul(&q, g))),
        &m2,
    );
    let h1 = zpoly_mod(&zpoly_add(h, &r), &m2);
    let one: ZPoly = vec![BigInt::one()];
    let b = zpoly_mod(
        &zpoly_sub(
            &zpoly_add(&zpoly_mul(s, &g1), &zpoly_mul(t, &h1)),
            &one,
        ),
        &m2,
    );
    let (c, d) = zpoly_divmod_monic(&zpoly_mul(s, &b), &h1, &m2);
    let s1 = zpoly_mod(&zpoly_sub(s, &d), &m2);
    let t1 = zpoly_mod(
        &zpoly_sub(&zpoly_sub(t, &zpoly_mul(t, &b)), &zpoly_mul(&c, &g1)),
        &m2,
    );
    (g1, h1, s1, t1)
}

fn p_bezout(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (PPoly, PPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (PPoly, PPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = p_divmod(&r0, &r1, p);
        let snew = p_sub(&s0, &p_mul(&q, &s1, p), p);
        let tnew = p_sub(&t0, &p_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = snew;
        t0 = t1;
        t1 = tnew;
    }
    assert_eq!(r0.len(), 1, "factors must be coprime mod p");
    let inv = p_inv(r0[0], p);
    let scale = |v: &PPoly| -> PPoly {
        v.iter()
            .map(|&c| (c as u128 * inv as u128 % p as u128) as u64)
            .collect()
    };
    (scale(&s0), scale(&t0))
}

/// Lift f = prod(factors) mod p to the exact modulus `target` (a power of p
/// reached by repeated squaring from p); f and the factors are monic.
fn hensel_lift_tree(f: &ZPoly, factors: &[PPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![zpoly_mod(f, target)];
    }
    let mid = factors.len() / 2;
    let gp = factors[..mid]
        .iter()
        .fold(vec![1u64], |acc, x| p_mul(&acc, x, p));
    let hp = factors[mid..]
        .iter()
        .fold(vec![1u64], |acc, x| p_mul(&acc, x, p));
    let (s0, t0) = p_bezout(&gp, &hp, p);
    let to_z = |v: &PPoly| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let (mut g, mut h, mut s, mut t) = (to_z(&gp), to_z(&hp), to_z(&s0), to_z(&t0));
    let mut m = BigInt::from(p);
    while &m < target {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&zpoly_mod(&g, target), &factors[..mid], p, target);
    out.extend(hensel_lift_tree(&zpoly_mod(&h, target), &factors[mid..], p, target));
    out
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, size: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == size {
            out.push(pick.clone());
            return;
        }
        for i in start..n {
            pick.push(i);
            rec(n, size, i + 1, pick, out);
            pick.pop();
        }
    }
    let mut out = vec![];
    rec(n, size, 0, &mut vec![], &mut out);
    out
}

/// Factor a squarefree primitive polynomial over Z into primitive irreducibles.
fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    // monic model: big_f(y) = lc^{n-1} f(y/lc), coefficients f_i lc^{n-1-i}
    let mut big_f: ZPoly = f
        .iter()
        .enumerate()
        .map(|(i, c)| c * lc.pow((n - 1).saturating_sub(i) as u32))
        .collect();
    big_f[n] = BigInt::one();
    // pick a prime keeping big_f squarefree
    let primes: [u64; 20] = [
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
    ];
    let mut chosen = 0u64;
    let mut fp: PPoly = vec![];
    for &p in &primes {
        let cand: PPoly = big_f
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
            .collect();
        let d = p_derivative(&cand, p);
        if d.is_empty() {
            continue;
        }
        if p_gcd(&cand, &d, p).len() == 1 {
            chosen = p;
            fp = cand;
            break;
        }
    }
    assert!(chosen != 0, "no usable prime for factorization");
    let p = chosen;
    let mut seed = 0x9e3779b97f4a7c15u64;
    let mut modular = factor_mod_p(&fp, p, &mut seed);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    modular.sort();
    // coefficient bound for monic factors of big_f, doubled for symmetric range
    let norm: BigInt = big_f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound: BigInt = (BigInt::one() << (n + 2)) * &norm;
    let mut target = BigInt::from(p);
    while target < bound {
        target = &target * &target;
    }
    let lifted = hensel_lift_tree(&big_f, &modular, p, &target);

    // subset recombination inside the monic model
    let mut remaining = lifted;
    let mut rest = big_f;
    let mut out: Vec<ZPoly> = vec![];
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let mut found = false;
        'subsets: for subset in subsets(remaining.len(), size) {
            let mut cand: ZPoly = vec![BigInt::one()];
            for &i in &subset {
                cand = zpoly_mod(&zpoly_mul(&cand, &remaining[i]), &target);
            }
            if let Some(q) = zpoly_div_exact(&rest, &cand) {
                out.push(cand);
                rest = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                found = true;
                break 'subsets;
            }
        }
        if !found {
            size += 1;
        }
    }
    if deg(&rest) >= 1 {
        out.push(rest);
    }
    // map back x = y/lc and take primitive parts
    out.into_iter()
        .map(|g| {
            let gx: Vec<BigRational> = g
                .iter()
                .enumerate()
                .map(|(i, c)| BigRational::from(c * lc.pow(i as u32)))
                .collect();
            primitive_part(&gx).1
        })
        .collect()
}

/// Factor an arbitrary univariate polynomial over Q.
/// Returns (unit in Q^x, [(primitive irreducible over Z, multiplicity)])
/// with poly = unit * prod factor^mult.
pub fn factor_rational_poly(coeffs: &[BigRational]) -> (BigRational, Vec<(ZPoly, u32)>) {
    let (unit, prim) = primitive_part(coeffs);
    if prim.is_empty() {
        return (BigRational::zero(), vec![]);
    }
    if deg(&prim) == 0 {
        return (unit, vec![]);
    }
    let mut out: Vec<(ZPoly, u32)> = vec![];
    for (sf, mult) in squarefree_decomposition(&prim) {
        if deg(&sf) == 0 {
            continue;
        }
        for irr in factor_squarefree(&sf) {
            out.push((irr, mult));
        }
    }
    out.sort();
    (unit, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect()
    }

    fn zp(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn factors_products() {
        // 3/2 (t^2 + t + 1)(t - 2)^2
        let a = poly(&[1, 1, 1]);
        let b = poly(&[-2, 1]);
        let f: Vec<BigRational> = {
            let ab = super::super::cyclotomic::poly_mul(&a, &b);
            let abb = super::super::cyclotomic::poly_mul(&ab, &b);
            abb.iter()
                .map(|c| c * BigRational::new(BigInt::from(3), BigInt::from(2)))
                .collect()
        };
        let (unit, factors) = factor_rational_poly(&f);
        assert_eq!(unit, BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&(zp(&[-2, 1]), 2)));
        assert!(factors.contains(&(zp(&[1, 1, 1]), 1)));
    }

    #[test]
    fn factors_cyclotomic_product() {
        // t^4 - 1 = (t-1)(t+1)(t^2+1)
        let f = poly(&[-1, 0, 0, 0, 1]);
        let (unit, factors) = factor_rational_poly(&f);
        assert!(unit.is_one());
        assert_eq!(factors.len(), 3);
        assert!(factors.contains(&(zp(&[-1, 1]), 1)));
        assert!(factors.contains(&(zp(&[1, 1]), 1)));
        assert!(factors.contains(&(zp(&[1, 0, 1]), 1)));
    }

    #[test]
    fn irreducible_stays_whole() {
        let f = poly(&[1, -1, 1]); // t^2 - t + 1
        let (_, factors) = factor_rational_poly(&f);
        assert_eq!(factors, vec![(zp(&[1, -1, 1]), 1)]);
    }

    #[test]
    fn non_monic_factor_split() {
        // (2t + 1)(3t - 5)
        let f = poly(&[-5, -7, 6]);
        let (unit, factors) = factor_rational_poly(&f);
        assert!(unit.is_one());
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&(zp(&[1, 2]), 1)));
        assert!(factors.contains(&(zp(&[-5, 3]), 1)));
    }
}
