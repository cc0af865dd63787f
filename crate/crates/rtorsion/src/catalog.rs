//! Built-in manifold families: lens spaces, the 3-torus, the Seifert family
//! M(0; (1,0); (l,-1), (m,-1), (n,1)), and torus bundles over the circle,
//! each with presentations, identities, representations and the auxiliary
//! duality data needed by the torsion pipeline.

use crate::cellular::{IntegralComplex, Representation};
use crate::chainkit::BasedComplex;
use crate::duality::{BilinearFormSpec, TwoChain};
use crate::foxcalc::{IdentityWord, Presentation, Word};
use crate::matrix::SMat;
use crate::refined::{ComplexBundle, PairingSource};
use crate::scalars::cyclotomic::sqrt_rational;
use crate::scalars::{Cyclotomic, FieldDescriptor, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;


fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

// ---- lens spaces ----

/// L(p, q) data: the genus-one model has a single cell in each degree, zero
/// differentials over F_p, the duality pairing fixed by the cup product
/// (the dual of the degree-1 generator is q times the degree-2 cell), and
/// the integral model with delta^1 = (p).
pub struct LensSpace {
    pub p: u64,
    pub q: u64,
    pub fp_bundle: ComplexBundle,
    pub rational_bundle: ComplexBundle,
    pub integral: IntegralComplex,
}

pub fn lens_space(p: u64, q: u64) -> Result<LensSpace> {
    if gcd_u64(p, q % p) != 1 && !(p == 1) {
        return Err(Error::validation("p and q must be coprime"));
    }
    let fp = FieldDescriptor::prime_field(p)?;
    let qq = FieldDescriptor::rationals();
    // the real complex of the single-cell structure: 0 -> Q -> Q -(p)-> Q -> Q -> 0
    let real = {
        let z = Scalar::zero(qq);
        let d0 = SMat::zeros(1, 1, z.clone());
        let mut d1 = SMat::zeros(1, 1, z.clone());
        d1[(0, 0)] = Scalar::from_integer(qq, p as i64);
        let d2 = SMat::zeros(1, 1, z.clone());
        BasedComplex::new(qq, vec![d0, d1, d2])?
    };
    // F_p coefficients: every differential vanishes
    let fp_complex = BasedComplex::zero_differentials(fp, &[1, 1, 1, 1]);
    // pairing fixed so that the dual of c_1 is q * c_2
    let qinv = Scalar::from_integer(fp, q as i64)
        .inv()
        .ok_or_else(|| Error::validation("q invertible mod p required"))?;
    let p12 = SMat::from_rows(vec![vec![qinv]], Scalar::zero(fp));
    let p03 = SMat::identity(1, Scalar::zero(fp));
    let fp_bundle = ComplexBundle {
        complex: fp_complex,
        real: real.clone(),
        n: 1,
        dets: vec![Scalar::one(fp)],
        pairing: PairingSource::Explicit { p12, p03 },
        provenance: "catalog lens space (cup-product data)".into(),
    };
    // rational coefficients on the same structure
    let rational_complex = real.clone();
    let p12q = SMat::zeros(0, 0, Scalar::zero(qq));
    let p03q = SMat::identity(1, Scalar::zero(qq));
    let rational_bundle = ComplexBundle {
        complex: rational_complex,
        real: real.clone(),
        n: 1,
        dets: vec![Scalar::one(qq)],
        pairing: PairingSource::Explicit {
            p12: p12q,
            p03: p03q,
        },
        provenance: "catalog lens space (rational)".into(),
    };
    let integral = IntegralComplex::from_matrices(vec![
        vec![vec![BigInt::from(0)]],
        vec![vec![BigInt::from(p)]],
        vec![vec![BigInt::from(0)]],
    ]);
    Ok(LensSpace {
        p,
        q,
        fp_bundle,
        rational_bundle,
        integral,
    })
}

// ---- the 3-torus ----

/// T^3 with the product CW structure of three circles: all differentials
/// vanish and the cross product makes the dual of each degree-j cell the
/// complementary cell, so both duality pairings are identity matrices.
pub fn t3(field: FieldDescriptor) -> Result<ComplexBundle> {
    let complex = BasedComplex::zero_differentials(field, &[1, 3, 3, 1]);
    let real = BasedComplex::zero_differentials(FieldDescriptor::rationals(), &[1, 3, 3, 1]);
    let p12 = SMat::identity(3, Scalar::zero(field));
    let p03 = SMat::identity(1, Scalar::zero(field));
    Ok(ComplexBundle {
        complex,
        real,
        n: 1,
        dets: vec![Scalar::one(field)],
        pairing: PairingSource::Explicit { p12, p03 },
        provenance: "catalog T^3 (product structure)".into(),
    })
}

// ---- Seifert manifolds M(0; (1,0); (l,-1), (m,-1), (n,1)) ----

#[derive(Clone, Copy, Debug)]
pub struct SeifertSpec {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    /// (a, b, k) with l = b(a+b)k, m = a(a+b)k, n = abk; present iff b_1 = 1.
    pub b1: Option<(u32, u32, u32)>,
}

impl SeifertSpec {
    pub fn new(l: u32, m: u32, n: u32) -> Result<Self> {
        if !(l >= m && m >= n && n >= 2) {
            return Err(Error::validation("need l >= m >= n >= 2"));
        }
        Ok(SeifertSpec { l, m, n, b1: None })
    }

    /// Construct from the first-Betti-number parameters of the family.
    pub fn from_b1(a: u32, b: u32, k: u32) -> Result<Self> {
        if gcd_u64(a as u64, b as u64) != 1 {
            return Err(Error::validation("a and b must be coprime"));
        }
        let (l, m, n) = (b * (a + b) * k, a * (a + b) * k, a * b * k);
        let mut s = SeifertSpec::new(l.max(m), l.min(m), n)?;
        // keep the declared order l >= m; swap corresponds to swapping a, b
        let (a, b) = if l >= m { (a, b) } else { (b, a) };
        s.b1 = Some((a, b, k));
        Ok(s)
    }

    pub fn presentation(&self) -> Presentation {
        let g = Word::generator(0);
        let h = Word::generator(1);
        let gh = g.mul(&h);
        let hg = h.mul(&g);
        let r = gh
            .pow(self.n as i32)
            .mul(&Word::generator_power(1, -(self.m as i32)));
        let s = hg
            .pow(self.n as i32)
            .mul(&Word::generator_power(0, -(self.l as i32)));
        Presentation::new(vec!["g".into(), "h".into()], vec![r, s]).unwrap()
    }

    /// W = r_1 h r_1^{-1} h^{-1} r_2 g r_2^{-1} g^{-1}.
    pub fn identity(&self) -> IdentityWord {
        IdentityWord::new(vec![
            (Word::one(), 0, 1),
            (Word::generator(1), 0, -1),
            (Word::one(), 1, 1),
            (Word::generator(0), 1, -1),
        ])
    }

    /// The 2-cycle dual to the generator alpha_{a,b} of H^1: b * (r-cell)
    /// + a * (s-cell).
    pub fn sigma(&self) -> Result<TwoChain> {
        let (a, b, _) = self
            .b1
            .ok_or_else(|| Error::precondition("b_1 = 0: no Sigma chain"))?;
        Ok(TwoChain::integral(&[b as i64, a as i64]))
    }

    /// Orientation of the fundamental class used by the duality pairings.
    pub fn orientation(&self) -> i32 {
        1
    }
}

/// Eigenvalue data for an SL_2 representation of the Seifert family:
/// alpha, beta, gamma are the eigenvalues of rho(g), rho(h), rho(gh) inside
/// the cyclotomic field Q(z_d).
#[derive(Clone, Debug)]
pub struct SL2SpectraSpec {
    pub field_order: u32,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl SL2SpectraSpec {
    pub fn roots(field_order: u32, alpha_pow: i64, beta_pow: i64, gamma_pow: i64) -> Self {
        SL2SpectraSpec {
            field_order,
            alpha: Scalar::root_of_unity(field_order, alpha_pow),
            beta: Scalar::root_of_unity(field_order, beta_pow),
            gamma: Scalar::root_of_unity(field_order, gamma_pow),
        }
    }
}

/// The SU(2) representation from eigenvalue data: A = diag(alpha, 1/alpha),
/// B = [[x, y], [-y, conj(x)]] with x from the trace conditions and
/// y = sqrt(1 - x conj(x)) >= 0 in the real subfield.
pub fn seifert_representation(
    spec: &SeifertSpec,
    sl2: &SL2SpectraSpec,
) -> Result<(Representation, BilinearFormSpec)> {
    let fd = FieldDescriptor::cyclotomic(sl2.field_order)?;
    let one = Scalar::one(fd);
    let a = &sl2.alpha;
    let b = &sl2.beta;
    let c = &sl2.gamma;
    for (name, v) in [("alpha", a), ("beta", b), ("gamma", c)] {
        if v.field() != fd {
            return Err(Error::validation(format!("{name} not in Q(z_{})", sl2.field_order)));
        }
        if v.is_zero() {
            return Err(Error::validation(format!("{name} must be nonzero")));
        }
    }
    // condition (I): alpha^l = beta^m = gamma^n in {1, -1}
    let al = a.pow(spec.l as i64).unwrap();
    let bm = b.pow(spec.m as i64).unwrap();
    let cn = c.pow(spec.n as i64).unwrap();
    let minus_one = one.neg();
    if !(al == bm && bm == cn && (al == one || al == minus_one)) {
        return Err(Error::precondition(
            "spectra violate alpha^l = beta^m = gamma^n in {1, -1}",
        ));
    }
    // condition (II)
    let ainv = a.inv().unwrap();
    let denom = ainv.sub(a);
    if denom.is_zero() {
        return Err(Error::precondition("alpha must differ from +-1"));
    }
    let tr_b = b.add(&b.inv().unwrap());
    let tr_c = c.add(&c.inv().unwrap());
    let x = ainv
        .mul(&tr_b)
        .sub(&tr_c)
        .div(&denom)
        .unwrap();
    let w = tr_c.sub(&a.mul(&tr_b)).div(&denom).unwrap();
    if w != x.conjugate() {
        return Err(Error::precondition(
            "trace data is not unitary-compatible (w != conj(x))",
        ));
    }
    let norm_x = x.mul(&x.conjugate());
    let y2 = one.sub(&norm_x);
    let y2_rat = y2.as_rational().ok_or_else(|| {
        Error::precondition("1 - x conj(x) is not rational; SU(2) completion unsupported here")
    })?;
    if y2_rat < BigRational::from(BigInt::from(0)) {
        return Err(Error::precondition("|x| > 1: no SU(2) completion"));
    }
    let y = sqrt_rational(&y2_rat, sl2.field_order).ok_or_else(|| {
        Error::precondition(format!(
            "sqrt of {y2_rat} is not constructible in Q(z_{}); enlarge the field order",
            sl2.field_order
        ))
    })?;
    let y = Scalar::Cyclotomic(y);
    let zero = Scalar::zero(fd);
    let amat = SMat::from_rows(
        vec![
            vec![a.clone(), zero.clone()],
            vec![zero.clone(), ainv.clone()],
        ],
        zero.clone(),
    );
    let bmat = SMat::from_rows(
        vec![
            vec![x.clone(), y.clone()],
            vec![y.neg(), x.conjugate()],
        ],
        zero.clone(),
    );
    // relations (AB)^n = B^m and (BA)^n = A^l hold exactly by construction;
    // Representation::new checks them through the relators.
    let rep = Representation::new(
        &spec.presentation(),
        fd,
        vec![amat, bmat],
        true,
    )?;
    let psi = BilinearFormSpec::standard(&rep);
    Ok((rep, psi))
}

// ---- torus bundles over S^1 ----

#[derive(Clone, Debug)]
pub struct TorusBundleSpec {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
    /// q_f with f_*([a,b]) = q_f [a,b] q_f^{-1} in the free group on a, b.
    pub qf: Word,
}

impl TorusBundleSpec {
    pub fn new(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        let qf = match (alpha, gamma, delta) {
            (-1, 0, -1) => Word::generator_power(0, -1).mul(&Word::generator_power(1, -1)),
            (1, 0, 1) => Word::one(),
            _ => {
                return Err(Error::validation(
                    "no built-in conjugator q_f for this monodromy; supply one",
                ))
            }
        };
        Self::with_qf(alpha, beta, gamma, delta, qf)
    }

    pub fn with_qf(alpha: i64, beta: i64, gamma: i64, delta: i64, qf: Word) -> Result<Self> {
        let det = alpha * delta - beta * gamma;
        if det != 1 && det != -1 {
            return Err(Error::validation("monodromy must have determinant +-1"));
        }
        let spec = TorusBundleSpec {
            alpha,
            beta,
            gamma,
            delta,
            qf,
        };
        if !spec.qf_valid() {
            return Err(Error::validation(
                "q_f does not conjugate f_*([a,b]) to [a,b]",
            ));
        }
        Ok(spec)
    }

    /// Free-group verification of f_*([a,b]) = q_f [a,b] q_f^{-1}.
    fn qf_valid(&self) -> bool {
        let a = Word::generator(0);
        let b = Word::generator(1);
        let fa = Word::generator_power(0, self.alpha as i32)
            .mul(&Word::generator_power(1, self.beta as i32));
        let fb = Word::generator_power(0, self.gamma as i32)
            .mul(&Word::generator_power(1, self.delta as i32));
        let comm = a.mul(&b).mul(&a.inv()).mul(&b.inv());
        let image = comm.substitute(&[fa, fb]);
        let conj = self.qf.mul(&comm).mul(&self.qf.inv());
        image == conj
    }

    /// <a, b, t | t a^alpha b^beta t^-1 a^-1, t a^gamma b^delta t^-1 b^-1, [a,b]>.
    pub fn presentation(&self) -> Presentation {
        let a = Word::generator(0);
        let b = Word::generator(1);
        let t = Word::generator(2);
        let r1 = t
            .mul(&Word::generator_power(0, self.alpha as i32))
            .mul(&Word::generator_power(1, self.beta as i32))
            .mul(&t.inv())
            .mul(&a.inv());
        let r2 = t
            .mul(&Word::generator_power(0, self.gamma as i32))
            .mul(&Word::generator_power(1, self.delta as i32))
            .mul(&t.inv())
            .mul(&b.inv());
        let r3 = a.mul(&b).mul(&a.inv()).mul(&b.inv());
        Presentation::new(vec!["a".into(), "b".into(), "t".into()], vec![r1, r2, r3]).unwrap()
    }

    /// W = r_1 (a r_2 a^-1) ((aba^-1) r_1^-1 (aba^-1)^-1)
    ///       (([a,b]) r_2^-1 ([a,b])^-1) r_3 ((t q_f) r_3^-1 (t q_f)^-1).
    pub fn identity(&self) -> IdentityWord {
        let a = Word::generator(0);
        let b = Word::generator(1);
        let t = Word::generator(2);
        let aba = a.mul(&b).mul(&a.inv());
        let comm = a.mul(&b).mul(&a.inv()).mul(&b.inv());
        IdentityWord::new(vec![
            (Word::one(), 0, 1),
            (a.clone(), 1, 1),
            (aba, 0, -1),
            (comm, 1, -1),
            (Word::one(), 2, 1),
            (t.mul(&self.qf), 2, -1),
        ])
    }

    /// Orientation of the fundamental class used by the duality pairings.
    pub fn orientation(&self) -> i32 {
        1
    }

    /// Character-variety points of the supported family alpha = delta = -1,
    /// gamma = 0: one circle component per beta-th root of unity v, with a
    /// representative u of the given order on each circle.
    pub fn variety_points(&self, u_order: u32) -> Result<Vec<VarietyPoint>> {
        if !(self.alpha == -1 && self.delta == -1 && self.gamma == 0 && self.beta != 0) {
            return Err(Error::validation(
                "character variety solver supports alpha = delta = -1, gamma = 0, beta != 0",
            ));
        }
        if u_order < 3 {
            return Err(Error::validation("u order must give u^2 != 1"));
        }
        let beta = self.beta.unsigned_abs() as u32;
        let d = num_integer::lcm(u_order, beta);
        let mut out = vec![];
        for k in 0..beta {
            let v = Scalar::Cyclotomic(Cyclotomic::root_power(d, (d / beta * k) as i64));
            let u = Scalar::Cyclotomic(Cyclotomic::root_power(d, (d / u_order) as i64));
            out.push(VarietyPoint {
                field_order: d,
                u,
                v,
            });
        }
        Ok(out)
    }

    /// The defining SU(2) representation at a variety point.
    pub fn representation(&self, pt: &VarietyPoint) -> Result<Representation> {
        let fd = FieldDescriptor::cyclotomic(pt.field_order)?;
        let zero = Scalar::zero(fd);
        let one = Scalar::one(fd);
        let diag = |s: &Scalar| {
            SMat::from_rows(
                vec![
                    vec![s.clone(), zero.clone()],
                    vec![zero.clone(), s.inv().unwrap()],
                ],
                zero.clone(),
            )
        };
        let tmat = SMat::from_rows(
            vec![
                vec![zero.clone(), one.clone()],
                vec![one.neg(), zero.clone()],
            ],
            zero.clone(),
        );
        Representation::new(
            &self.presentation(),
            fd,
            vec![diag(&pt.u), diag(&pt.v), tmat],
            true,
        )
    }

    /// The adjoint representation at a variety point: a and b act by
    /// diag(u^2, 1, u^-2) and diag(v^2, 1, v^-2), t by the printed
    /// anti-diagonal involution.
    pub fn adjoint_representation(&self, pt: &VarietyPoint) -> Result<Representation> {
        let fd = FieldDescriptor::cyclotomic(pt.field_order)?;
        let zero = Scalar::zero(fd);
        let one = Scalar::one(fd);
        let diag3 = |s: &Scalar| {
            let s2 = s.mul(s);
            SMat::from_rows(
                vec![
                    vec![s2.clone(), zero.clone(), zero.clone()],
                    vec![zero.clone(), one.clone(), zero.clone()],
                    vec![zero.clone(), zero.clone(), s2.inv().unwrap()],
                ],
                zero.clone(),
            )
        };
        let tmat = SMat::from_rows(
            vec![
                vec![zero.clone(), zero.clone(), one.neg()],
                vec![zero.clone(), one.neg(), zero.clone()],
                vec![one.neg(), zero.clone(), zero.clone()],
            ],
            zero.clone(),
        );
        Representation::new(
            &self.presentation(),
            fd,
            vec![diag3(&pt.u), diag3(&pt.v), tmat],
            true,
        )
    }

    /// The fiber 2-chain: the commutator relator cell with unit coefficient.
    pub fn fiber_chain(&self) -> TwoChain {
        TwoChain::integral(&[0, 0, 1])
    }

    /// The generator of H^2 representing the fiber class: the deterministic
    /// basis vector normalized to primitive integral coordinates.
    pub fn sigma_h2_class(&self, rep: &Representation) -> Result<SMat> {
        let complex = crate::cellular::twisted_cochain_complex(
            &self.presentation(),
            &self.identity(),
            rep,
        )?;
        let coh = crate::chainkit::cohomology_bases(&complex);
        if coh.h_dims[2] != 1 {
            return Err(Error::precondition(format!(
                "H^2 must be one-dimensional, found dim {}",
                coh.h_dims[2]
            )));
        }
        Ok(integral_normalize_column(&coh.h_reps[2]))
    }

    /// The chains dual to the two epimorphisms onto Z: plus/minus the fiber.
    pub fn sigma_alpha(&self, positive: bool) -> TwoChain {
        TwoChain::integral(&[0, 0, if positive { 1 } else { -1 }])
    }
}

/// A point (u, v) of the character variety inside Q(z_d).
#[derive(Clone, Debug)]
pub struct VarietyPoint {
    pub field_order: u32,
    pub u: Scalar,
    pub v: Scalar,
}

/// Scale a one-column matrix so its rational coordinate content is 1 and the
/// first nonzero coordinate entry is positive.
fn integral_normalize_column(col: &SMat) -> SMat {
    use num_integer::Integer;
    use num_traits::Zero;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::from(1);
    let mut rationals: Vec<BigRational> = vec![];
    for i in 0..col.rows {
        match &col[(i, 0)] {
            Scalar::Rational(r) => rationals.push(r.clone()),
            Scalar::Cyclotomic(c) => rationals.extend(c.coords.iter().cloned()),
            _ => return col.clone(),
        }
    }
    let mut first_sign = 0;
    for r in &rationals {
        if r.is_zero() {
            continue;
        }
        if first_sign == 0 {
            first_sign = if r < &BigRational::zero() { -1 } else { 1 };
        }
        num_gcd = num_gcd.gcd(r.numer());
        den_lcm = den_lcm.lcm(r.denom());
    }
    if num_gcd.is_zero() {
        return col.clone();
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    if first_sign < 0 {
        content = -content;
    }
    let fd = col.proto().field();
    let scale = Scalar::from_rational(fd, content.recip()).expect("char-0 field");
    col.scale(&scale)
}
