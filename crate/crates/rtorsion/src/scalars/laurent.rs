//! Sparse Laurent polynomials in t_1..t_l over Q and their fraction field,
//! with the involution t_i -> t_i^{-1}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A Laurent polynomial: finitely many terms exponent-vector -> coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    pub vars: u8,
    pub terms: BTreeMap<Vec<i32>, BigRational>,
}

impl Laurent {
    pub fn zero(vars: u8) -> Self {
        Laurent {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: u8, c: BigRational) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(vec![0; vars as usize], c);
        }
        Laurent { vars, terms: t }
    }

    pub fn one(vars: u8) -> Self {
        Laurent::constant(vars, BigRational::one())
    }

    /// The monomial t_i^k.
    pub fn monomial(vars: u8, i: usize, k: i32) -> Self {
        assert!(i < vars as usize);
        let mut e = vec![0; vars as usize];
        e[i] = k;
        let mut t = BTreeMap::new();
        t.insert(e, BigRational::one());
        Laurent { vars, terms: t }
    }

    pub fn insert_term(&mut self, exp: Vec<i32>, c: BigRational) {
        assert_eq!(exp.len(), self.vars as usize);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            // re-lookup key to remove; cheap for our sizes
            let dead: Vec<Vec<i32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Laurent {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.vars, o.vars);
        let mut out = Laurent::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Laurent::zero(self.vars);
        }
        Laurent {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// The involution t_i -> t_i^{-1}.
    pub fn conj(&self) -> Self {
        Laurent {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Per-variable minimum exponents (empty polynomial gives zeros).
    pub fn min_exponents(&self) -> Vec<i32> {
        let n = self.vars as usize;
        let mut m = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                m[i] = m[i].min(e[i]);
            }
        }
        for x in m.iter_mut() {
            if *x == i32::MAX {
                *x = 0;
            }
        }
        m
    }

    /// Multiply by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        Laurent {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, s)| a + s).collect(), c.clone()))
                .collect(),
        }
    }

    /// For univariate polynomials with all exponents >= 0: dense ascending coefficients.
    pub fn to_dense(&self) -> Vec<BigRational> {
        assert_eq!(self.vars, 1);
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0);
        assert!(self.terms.keys().all(|e| e[0] >= 0));
        let mut out = vec![BigRational::zero(); deg as usize + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        out
    }

    pub fn from_dense(coeffs: &[BigRational]) -> Self {
        let mut p = Laurent::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.insert_term(vec![k as i32], c.clone());
        }
        p
    }

    /// Content: gcd of coefficients with the sign of the lexicographically
    /// largest term, so that self = content * primitive.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        let lead = self.terms.iter().next_back().unwrap().1;
        if lead.is_negative() {
            content = -content;
        }
        content
    }
}

/// A rational function num/den, den != 0. Univariate fractions are kept
/// gcd-reduced with a primitive integer denominator of positive leading
/// coefficient; multivariate fractions are normalized by monomial shifts and
/// content only (equality still compares exactly by cross-multiplication).
#[derive(Clone, Debug)]
pub struct RatFun {
    pub vars: u8,
    pub num: Laurent,
    pub den: Laurent,
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl RatFun {
    pub fn new(num: Laurent, den: Laurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let vars = num.vars;
        assert_eq!(vars, den.vars);
        let mut f = RatFun { vars, num, den };
        f.normalize();
        Some(f)
    }

    pub fn zero(vars: u8) -> Self {
        RatFun {
            vars,
            num: Laurent::zero(vars),
            den: Laurent::one(vars),
        }
    }

    pub fn one(vars: u8) -> Self {
        RatFun {
            vars,
            num: Laurent::one(vars),
            den: Laurent::one(vars),
        }
    }

    pub fn from_laurent(p: Laurent) -> Self {
        let vars = p.vars;
        RatFun {
            vars,
            num: p,
            den: Laurent::one(vars),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one(self.vars);
            return;
        }
        // clear monomial parts: make min exponent 0 in num and den
        let mn = self.num.min_exponents();
        let md = self.den.min_exponents();
        let shift_n: Vec<i32> = mn.iter().map(|x| -x).collect();
        let shift_d: Vec<i32> = md.iter().map(|x| -x).collect();
        self.num = self.num.shift(&shift_n);
        self.den = self.den.shift(&shift_d);
        // carry the residual monomial into the numerator
        let residue: Vec<i32> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
        self.num = self.num.shift(&residue.iter().map(|x| x.max(&0).to_owned()).collect::<Vec<_>>());
        self.den = self
            .den
            .shift(&residue.iter().map(|x| (-x).max(0)).collect::<Vec<_>>());
        if self.vars == 1 {
            let g = poly_gcd(&self.num.to_dense(), &self.den.to_dense());
            if g.len() > 1 {
                let (qn, rn) = super::cyclotomic::poly_divmod(&self.num.to_dense(), &g);
                let (qd, rd) = super::cyclotomic::poly_divmod(&self.den.to_dense(), &g);
                debug_assert!(rn.iter().all(|c| c.is_zero()));
                debug_assert!(rd.iter().all(|c| c.is_zero()));
                self.num = Laurent::from_dense(&qn);
                self.den = Laurent::from_dense(&qd);
            }
        }
        // scale so den is primitive with positive lex-leading coefficient
        let c = self.den.content();
        if !c.is_zero() && !c.is_one() {
            let inv = c.recip();
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFun::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }

    pub fn neg(&self) -> Self {
        RatFun {
            vars: self.vars,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn conj(&self) -> Self {
        RatFun::new(self.num.conj(), self.den.conj()).unwrap()
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

/// Monic gcd in Q[x] (dense ascending coefficients).
pub fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r0: Vec<BigRational> = a.to_vec();
    let mut r1: Vec<BigRational> = b.to_vec();
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (_, mut r) = super::cyclotomic::poly_divmod(&r0, &r1);
        trim(&mut r);
        r0 = r1;
        r1 = r;
    }
    if r0.is_empty() {
        return r0;
    }
    let lead = r0.last().unwrap().clone();
    r0.iter().map(|c| c / &lead).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn t() -> Laurent {
        Laurent::monomial(1, 0, 1)
    }

    fn int(k: i64) -> BigRational {
        BigRational::from(BigInt::from(k))
    }

    #[test]
    fn fraction_reduction() {
        // (t^2 - 1)/(t - 1) = t + 1
        let num = t().mul(&t()).add(&Laurent::constant(1, int(-1)));
        let den = t().add(&Laurent::constant(1, int(-1)));
        let f = RatFun::new(num, den).unwrap();
        let want = RatFun::from_laurent(t().add(&Laurent::one(1)));
        assert!(f.equals(&want));
        assert_eq!(f.num, want.num);
        assert_eq!(f.den, want.den);
    }

    #[test]
    fn conj_inverts_variables() {
        // conj(1 - t) = 1 - t^{-1}, normalized to (t - 1)/t... as a fraction times -1
        let f = RatFun::from_laurent(Laurent::one(1).add(&t().neg()));
        let g = f.conj();
        // 1 - 1/t = (t-1)/t; check by cross multiplication against (t-1)/t
        let want = RatFun::new(
            t().add(&Laurent::constant(1, int(-1))),
            t(),
        )
        .unwrap();
        assert!(g.equals(&want));
        assert!(g.conj().equals(&f));
    }
}
