//! Top-level torsion invariants: the duality-refined torsion with its
//! canonical class, trivial-coefficient specializations, the admissible and
//! surface-generator refinements, unit-circle characters, volumes of
//! character-variety families, and the Alexander polynomial pathway.

use crate::cellular::{twisted_cochain_complex, Representation};
use crate::chainkit::{
    cohomology_bases, pr_product, real_sign, refined_sign_torsion, torsion_numeric,
    BasedComplex, PrMode,
};
use crate::duality::{
    d_sharp_pairing, dual_basis, is_admissible, orthonormal_basis, pairing_03,
    surface_pairing_matrix, BilinearFormSpec, TwoChain,
};
use crate::foxcalc::{IdentityWord, Presentation};
use crate::matrix::{CMat, SMat};
use crate::scalars::quotient::{canonical_class, QuotientDescriptor, SubgroupSpec, TorsionClass, UnitSet};
use crate::scalars::{CanonicalPayload, FieldDescriptor, FieldKind, Scalar};
use crate::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;

/// Where the duality pairings of a complex come from: the identity word of a
/// presentation, or explicit matrices on the deterministic cohomology bases
/// (catalog entries whose cup products are known in closed form).
#[derive(Clone, Debug)]
pub enum PairingSource {
    Identity {
        pres: Presentation,
        ident: IdentityWord,
        rep: Representation,
        psi: BilinearFormSpec,
        orientation: i32,
    },
    Explicit {
        p12: SMat,
        p03: SMat,
    },
}

/// Everything the refined-torsion pipeline needs about one manifold with
/// one representation.
#[derive(Clone, Debug)]
pub struct ComplexBundle {
    pub complex: BasedComplex,
    /// trivial-coefficient complex over Q of the same CW structure
    pub real: BasedComplex,
    pub n: usize,
    /// determinants of the generator images (generate det rho(pi_1))
    pub dets: Vec<Scalar>,
    pub pairing: PairingSource,
    pub provenance: String,
}

/// Build the bundle of a presentation + identity + representation.
pub fn bundle_from_identity(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: BilinearFormSpec,
    orientation: i32,
) -> Result<ComplexBundle> {
    if psi.matrix.rows != rho.dim {
        return Err(Error::validation("form dimension does not match the representation"));
    }
    if !psi.is_invariant(rho) {
        return Err(Error::validation("form is not rho-invariant"));
    }
    if psi.matrix.det().is_zero() {
        return Err(Error::precondition("degenerate bilinear form"));
    }
    let complex = twisted_cochain_complex(p, w, rho)?;
    let real = twisted_cochain_complex(
        p,
        w,
        &Representation::trivial(p, FieldDescriptor::rationals()),
    )?;
    Ok(ComplexBundle {
        complex,
        real,
        n: rho.dim,
        dets: rho.determinants(),
        pairing: PairingSource::Identity {
            pres: p.clone(),
            ident: w.clone(),
            rep: rho.clone(),
            psi,
            orientation,
        },
        provenance: "presentation with identity".into(),
    })
}

/// The torsion report: dimensions, the raw scalar, and the canonical class.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    pub h_dims: Vec<usize>,
    pub raw: String,
    pub class: TorsionClass,
    /// how the cohomology bases were chosen
    pub provenance: String,
    /// numeric payload with precision when the computation was numeric
    pub numeric: Option<NumericValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericValue {
    pub re: f64,
    pub im: f64,
    pub precision: f64,
}

/// The quotient group F^x / <N(F), det rho(pi_1)> for the bundle's field.
pub fn norm_quotient(field: FieldDescriptor, dets: &[Scalar], sign_unit: bool) -> Result<QuotientDescriptor> {
    let mut units = UnitSet {
        sign: sign_unit,
        ..Default::default()
    };
    for d in dets {
        if d.is_one() {
            continue;
        }
        match field.kind {
            FieldKind::Cyclotomic(order) => {
                // determinant subgroup of roots of unity
                let mut k = 1u32;
                let mut pw = d.clone();
                let one = Scalar::one(field);
                while k <= 2 * order && pw != one {
                    pw = pw.mul(d);
                    k += 1;
                }
                if pw != one {
                    return Err(Error::validation(
                        "unsupported determinant subgroup (not a root of unity)",
                    ));
                }
                let cur = units.root_of_unity.unwrap_or(1);
                units.root_of_unity = Some(num_integer::lcm(cur, k));
            }
            FieldKind::Rationals | FieldKind::PrimeField(_) => {
                if *d == Scalar::one(field).neg() {
                    units.sign = true;
                } else {
                    return Err(Error::validation("unsupported rational determinant subgroup"));
                }
            }
            FieldKind::RationalFunctions(_) => {
                // abelian representations have monomial determinants
                units.monomials = true;
            }
        }
    }
    Ok(match field.kind {
        FieldKind::Rationals | FieldKind::PrimeField(_) if !units.sign => {
            QuotientDescriptor::squares(field)
        }
        _ => QuotientDescriptor::norms(field, units),
    })
}

/// The quotient F^x / +-det rho(pi_1) of the further refinements.
pub fn pm_det_quotient(field: FieldDescriptor, dets: &[Scalar]) -> Result<QuotientDescriptor> {
    // reuse the determinant-order bookkeeping from the norm quotient
    let base = norm_quotient(field, dets, true)?;
    let units = match base.subgroup {
        SubgroupSpec::Norms(u) => u,
        SubgroupSpec::Squares => UnitSet {
            sign: true,
            ..Default::default()
        },
        SubgroupSpec::Units(u) => u,
    };
    Ok(QuotientDescriptor::units(field, units))
}

/// The kk54-style refined torsion of a bundle: deterministic bases below the
/// middle degree, duality-dual bases above, sign refinement through the real
/// complex. Returns (cohomology dims, bases used, raw torsion).
pub fn kk54_torsion(bundle: &ComplexBundle) -> Result<(Vec<usize>, Vec<SMat>, Scalar)> {
    let c = &bundle.complex;
    if c.top_degree() != 3 {
        return Err(Error::validation("expected a 3-manifold complex (degrees 0..3)"));
    }
    let coh = cohomology_bases(c);
    let (p12, p03) = bundle_pairings(bundle, &coh.h_reps)?;
    if p12.rows != p12.cols || p03.rows != p03.cols {
        return Err(Error::precondition(
            "duality pairing is not square: complex violates duality dimensions",
        ));
    }
    let h2 = if p12.rows > 0 {
        dual_basis(&p12, &coh.h_reps[2])?
    } else {
        coh.h_reps[2].clone()
    };
    let h3 = if p03.rows > 0 {
        dual_basis(&p03, &coh.h_reps[3])?
    } else {
        coh.h_reps[3].clone()
    };
    let h = vec![coh.h_reps[0].clone(), coh.h_reps[1].clone(), h2, h3];
    let tau = refined_sign_torsion(c, &h, &bundle.real, bundle.n)?;
    Ok((coh.h_dims, h, tau))
}

pub(crate) fn bundle_pairings(bundle: &ComplexBundle, h_reps: &[SMat]) -> Result<(SMat, SMat)> {
    match &bundle.pairing {
        PairingSource::Identity {
            pres,
            ident,
            rep,
            psi,
            orientation,
        } => {
            let p12 = d_sharp_pairing(pres, ident, rep, psi, &h_reps[1], &h_reps[2], *orientation)?;
            let p03 = pairing_03(psi, &h_reps[0], &h_reps[3], *orientation);
            Ok((p12, p03))
        }
        PairingSource::Explicit { p12, p03 } => Ok((p12.clone(), p03.clone())),
    }
}

fn make_report(
    bundle: &ComplexBundle,
    h_dims: Vec<usize>,
    tau: Scalar,
    quotient: QuotientDescriptor,
    provenance: &str,
) -> Result<TorsionReport> {
    let class = canonical_class(&tau, &quotient)?;
    let numeric = tau.embed().ok().map(|z| NumericValue {
        re: z.re,
        im: z.im,
        precision: crate::DEFAULT_PRECISION,
    });
    Ok(TorsionReport {
        h_dims,
        raw: tau.to_string(),
        class,
        provenance: format!("{} / {}", bundle.provenance, provenance),
        numeric,
    })
}

/// The refined torsion with duality-dual bases, reduced into
/// F^x / <N(F), det rho(pi_1)>.
pub fn dual_refined_torsion(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: BilinearFormSpec,
    orientation: i32,
) -> Result<TorsionReport> {
    let bundle = bundle_from_identity(p, w, rho, psi, orientation)?;
    dual_refined_torsion_of(&bundle)
}

pub fn dual_refined_torsion_of(bundle: &ComplexBundle) -> Result<TorsionReport> {
    let (h_dims, _, tau) = kk54_torsion(bundle)?;
    let quotient = norm_quotient(bundle.complex.field, &bundle.dets, false)?;
    make_report(bundle, h_dims, tau, quotient, "deterministic bases with duality duals")
}

/// The trivial-coefficient specialization in F^x/(F^x)^2.
pub fn trivial_coefficient_torsion(bundle: &ComplexBundle) -> Result<TorsionReport> {
    if bundle.n != 1 {
        return Err(Error::validation("trivial-coefficient torsion needs a rank-1 bundle"));
    }
    let (h_dims, _, tau) = kk54_torsion(bundle)?;
    let quotient = match bundle.complex.field.kind {
        FieldKind::Rationals | FieldKind::PrimeField(_) => {
            QuotientDescriptor::squares(bundle.complex.field)
        }
        _ => norm_quotient(bundle.complex.field, &bundle.dets, false)?,
    };
    make_report(bundle, h_dims, tau, quotient, "trivial coefficients")
}

/// Same, built from a presentation.
pub fn trivial_coefficient_torsion_of(
    p: &Presentation,
    w: &IdentityWord,
    field: FieldDescriptor,
    orientation: i32,
) -> Result<TorsionReport> {
    let rho = Representation::trivial(p, field);
    let psi = BilinearFormSpec::standard(&rho);
    let bundle = bundle_from_identity(p, w, &rho, psi, orientation)?;
    trivial_coefficient_torsion(&bundle)
}

/// The admissible refinement: orthonormalize H^1 under the surface pairing,
/// take duality duals, and evaluate the torsion numerically through the
/// embedding. The class lives in F^x / +-det rho(pi_1).
pub fn admissible_torsion(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: &BilinearFormSpec,
    sigma: &TwoChain,
    orientation: i32,
    precision: f64,
) -> Result<TorsionReport> {
    if !is_admissible(p, w, rho, psi, sigma)? {
        return Err(Error::precondition("triple (rho, psi, Sigma) is not admissible"));
    }
    let bundle = bundle_from_identity(p, w, rho, psi.clone(), orientation)?;
    let coh = cohomology_bases(&bundle.complex);
    if coh.h_dims[0] != 0 {
        return Err(Error::precondition("H^0 must vanish for the admissible refinement"));
    }
    if coh.h_dims[3] != 0 {
        return Err(Error::precondition("H^3 must vanish for the admissible refinement"));
    }
    // orthonormalize H^1 under the surface pairing
    let m = surface_pairing_matrix(p, rho, psi, &coh.h_reps[1], sigma)?;
    let m_embedded = m.embed()?;
    let anti = {
        let d = m_embedded.add(&m_embedded.conj_transpose());
        let mut worst = 0.0f64;
        for i in 0..d.rows {
            for j in 0..d.cols {
                worst = worst.max(d[(i, j)].norm());
            }
        }
        worst < 1e-8
    };
    let ob = orthonormal_basis(&m, anti, precision)?;
    // numeric normalized basis h1' = h1 * (u R)
    let h1_num = coh.h_reps[1].embed()?;
    let ur = ob.r.map(|z| z * ob.u);
    let h1p = h1_num.mul(&ur);
    // duality duals of h1' : pairing(h1'_a, h2_b) = conj(uR)^T P12
    let (p12, _) = bundle_pairings(&bundle, &coh.h_reps)?;
    let p12_num = p12.embed()?;
    let pairing_p = ur.conj_transpose().mul(&p12_num);
    let h2_num = coh.h_reps[2].embed()?;
    let h2p = h2_num.mul(&pairing_p.inverse().map_err(|_| {
        Error::precondition("degenerate duality pairing on the normalized basis")
    })?);
    // numeric torsion with the sign factor from the exact real complex
    let (dims, deltas) = bundle.complex.embed()?;
    let proto = Complex64::new(0.0, 0.0);
    let h0 = CMat::zeros(bundle.complex.dims[0], 0, proto);
    let h3 = CMat::zeros(bundle.complex.dims[3], 0, proto);
    let mut tau = torsion_numeric(&dims, &deltas, &[h0, h1p, h2p, h3])?;
    if real_sign(&bundle.real, bundle.n)? < 0 {
        tau = -tau;
    }
    let quotient = pm_det_quotient(bundle.complex.field, &bundle.dets)?;
    let payload = numeric_exact_payload(tau, &quotient, precision);
    Ok(TorsionReport {
        h_dims: coh.h_dims.clone(),
        raw: format!("{} + {}i (numeric)", tau.re, tau.im),
        class: TorsionClass {
            raw: format!("{} + {}i", tau.re, tau.im),
            quotient,
            canonical: payload,
        },
        provenance: format!("{} / orthonormal basis under the surface pairing", bundle.provenance),
        numeric: Some(NumericValue {
            re: tau.re,
            im: tau.im,
            precision,
        }),
    })
}

/// Numeric representative modulo a plain unit subgroup: fold sign and
/// declared roots of unity into the principal angular sector.
fn numeric_exact_payload(z: Complex64, q: &QuotientDescriptor, precision: f64) -> CanonicalPayload {
    let mut w = z;
    if let SubgroupSpec::Units(units) = &q.subgroup {
        let mut ord = units.root_of_unity.unwrap_or(1).max(1);
        if units.sign {
            ord = num_integer::lcm(ord, 2);
        }
        if ord > 1 && w.norm() > 0.0 {
            let sector = 2.0 * std::f64::consts::PI / ord as f64;
            let theta = w.im.atan2(w.re);
            let folded = theta - (theta / sector).round() * sector;
            w = Complex64::from_polar(w.norm(), folded);
        }
    }
    CanonicalPayload::NumericExact {
        re: w.re,
        im: w.im,
        precision,
    }
}


/// The surface-generator refinement: H^2 must be one-dimensional and
/// generated by the supplied class of the surface; its duality dual spans
/// H^1. The class lives in F^x / +-det rho(pi_1).
pub fn sigma_torsion(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: BilinearFormSpec,
    sigma_class: &SMat,
    orientation: i32,
) -> Result<TorsionReport> {
    let bundle = bundle_from_identity(p, w, rho, psi, orientation)?;
    let coh = cohomology_bases(&bundle.complex);
    if coh.h_dims != vec![0, 1, 1, 0] {
        return Err(Error::precondition(format!(
            "surface refinement needs cohomology dims (0,1,1,0), found {:?}",
            coh.h_dims
        )));
    }
    if sigma_class.rows != bundle.complex.dims[2] || sigma_class.cols != 1 {
        return Err(Error::validation("surface class must be a single 2-cochain"));
    }
    // must be a cocycle and a generator of H^2
    if !bundle.complex.deltas[2].mul(sigma_class).is_zero_matrix() {
        return Err(Error::precondition("surface class is not a cocycle"));
    }
    // pairing of the deterministic H^1 generator against the surface class:
    // solve for the dual basis h1 with pairing(h1, sigma) = 1
    let psi_src = match &bundle.pairing {
        PairingSource::Identity {
            pres,
            ident,
            rep,
            psi,
            orientation,
        } => d_sharp_pairing(pres, ident, rep, psi, &coh.h_reps[1], sigma_class, *orientation)?,
        PairingSource::Explicit { .. } => {
            return Err(Error::validation("surface refinement needs an identity-based bundle"))
        }
    };
    let c = psi_src[(0, 0)].clone();
    if c.is_zero() {
        return Err(Error::precondition(
            "surface class pairs to zero: not a generator of H^2",
        ));
    }
    let lambda = c.conjugate().inv().unwrap();
    let h1 = coh.h_reps[1].scale(&lambda);
    let h = vec![
        coh.h_reps[0].clone(),
        h1,
        sigma_class.clone(),
        coh.h_reps[3].clone(),
    ];
    let tau = refined_sign_torsion(&bundle.complex, &h, &bundle.real, bundle.n)?;
    let quotient = pm_det_quotient(bundle.complex.field, &bundle.dets)?;
    make_report(
        &bundle,
        coh.h_dims.clone(),
        tau,
        quotient,
        "surface-generator basis",
    )
}

/// The unit-circle character tau0/|tau0| of a unitary representation.
pub fn unit_circle_character(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    orientation: i32,
) -> Result<(TorsionReport, Complex64)> {
    if !rho.is_unitary() {
        return Err(Error::validation("representation is not unitary"));
    }
    let psi = BilinearFormSpec::standard(rho);
    let report = dual_refined_torsion(p, w, rho, psi, orientation)?;
    let z = match &report.class.canonical {
        CanonicalPayload::UnitCircle { re, im, .. } => Complex64::new(*re, *im),
        _ => {
            return Err(Error::validation(
                "unit-circle character needs a complex-embedded field",
            ))
        }
    };
    Ok((report, z))
}

/// Volume of a family of circle components: each contributes 2*pi times its
/// constant volume-form coefficient. An empty family has volume zero.
pub fn volume_from_coefficients(coeffs: &[f64]) -> f64 {
    coeffs.iter().map(|c| 2.0 * std::f64::consts::PI * c).sum()
}

/// The volume-form coefficient |tau|^{1/2} at one variety point, with the
/// square-root branch of positive real part (ties toward positive imaginary).
pub fn volume_form_coefficient(tau: &Scalar) -> Result<f64> {
    let z = tau.embed()?;
    let r = z.norm().sqrt();
    Ok(r)
}

/// Poincare-Reidemeister products. `half` divides by the refined torsion of
/// the bundle itself; `full` builds the (rho + conj rho)-bundle and divides
/// by its torsion. Arguments are wedge coefficients relative to the kk54
/// bases of the bundle.
pub fn pr_half(bundle: &ComplexBundle, alpha: &Scalar, beta: &Scalar) -> Result<Scalar> {
    let (_, h, _) = kk54_torsion(bundle)?;
    pr_product(
        PrMode::Half,
        &bundle.complex,
        &h,
        &bundle.real,
        bundle.n,
        alpha,
        beta,
    )
}

pub fn pr_full(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: &BilinearFormSpec,
    orientation: i32,
    alpha: &Scalar,
    beta: &Scalar,
) -> Result<Scalar> {
    let bundle = bundle_from_identity(p, w, rho, psi.clone(), orientation)?;
    let (_, h, _) = kk54_torsion(&bundle)?;
    // the direct-sum representation rho + conj(rho)
    let n = rho.dim;
    let zero = Scalar::zero(rho.field);
    let sum_images: Vec<SMat> = rho
        .images
        .iter()
        .map(|g| {
            let mut m = SMat::zeros(2 * n, 2 * n, zero.clone());
            m.set_block(0, 0, g);
            m.set_block(n, n, &g.map(|x| x.conjugate()));
            m
        })
        .collect();
    let sum_rep = Representation::new(p, rho.field, sum_images, false)?;
    let sum_complex = twisted_cochain_complex(p, w, &sum_rep)?;
    // degree-i basis: [embedded h_i | embedded conj(h_i)]
    let g = p.generators;
    let embed = |v: &SMat, side: usize| -> SMat {
        // cells in degree: dims over n
        let cells = v.rows / n;
        let mut out = SMat::zeros(cells * 2 * n, v.cols, zero.clone());
        for c in 0..v.cols {
            for cell in 0..cells {
                for r in 0..n {
                    let x = if side == 0 {
                        v[(cell * n + r, c)].clone()
                    } else {
                        v[(cell * n + r, c)].conjugate()
                    };
                    out[(cell * 2 * n + side * n + r, c)] = x;
                }
            }
        }
        out
    };
    let _ = g;
    let mut h_sum = vec![];
    for hi in &h {
        let left = embed(hi, 0);
        let right = embed(hi, 1);
        h_sum.push(SMat::hstack(
            &[&left, &right],
            left.rows,
            zero.clone(),
        ));
    }
    pr_product(
        PrMode::Full,
        &sum_complex,
        &h_sum,
        &bundle.real,
        2 * n,
        alpha,
        beta,
    )
}

/// The Alexander polynomial of a link-group presentation via the Fox matrix:
/// the gcd of the (g-1)-minors of the Alexander matrix under the declared
/// abelianization, up to units +- t^k.
pub fn alexander_polynomial(p: &Presentation, meridians: &[Vec<i64>]) -> Result<Scalar> {
    if meridians.len() != p.generators {
        return Err(Error::validation("one abelianization vector per generator"));
    }
    let l = meridians
        .first()
        .map(|v| v.len())
        .unwrap_or(1)
        .max(1);
    if meridians.iter().any(|v| v.len() != l) {
        return Err(Error::validation("abelianization vectors of unequal length"));
    }
    let fd = FieldDescriptor::rational_functions(l as u8)?;
    let zero = Scalar::zero(fd);
    let images: Vec<SMat> = meridians
        .iter()
        .map(|exps| {
            let mut m = Scalar::one(fd);
            for (i, &e) in exps.iter().enumerate() {
                m = m.mul(&Scalar::variable(l as u8, i, e as i32));
            }
            SMat::from_rows(vec![vec![m]], zero.clone())
        })
        .collect();
    let rho = Representation::new(p, fd, images, false)?;
    let g = p.generators;
    let r = p.relators.len();
    if g == 0 {
        return Err(Error::validation("empty presentation"));
    }
    if g == 1 && r == 0 {
        // unknot-style free group: trivial polynomial
        return Ok(Scalar::one(fd));
    }
    if r + 1 < g {
        return Err(Error::precondition(
            "not enough relators for (g-1)-minors",
        ));
    }
    // Alexander matrix: rows generators, columns relators
    let mut amat = SMat::zeros(g, r, zero.clone());
    for (j, rel) in p.relators.iter().enumerate() {
        for i in 0..g {
            let d = crate::foxcalc::fox_derivative(rel, i as u32);
            amat[(i, j)] = rho.evaluate(&d)[(0, 0)].clone();
        }
    }
    // all (g-1) x (g-1) minors
    let mut minors: Vec<Scalar> = vec![];
    let row_sets = subsets_of(g, g - 1);
    let col_sets = subsets_of(r, g - 1);
    for rs in &row_sets {
        for cs in &col_sets {
            let sub = SMat::from_fn(g - 1, g - 1, zero.clone(), |i, j| {
                amat[(rs[i], cs[j])].clone()
            });
            let d = sub.det();
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    if minors.is_empty() {
        return Ok(Scalar::zero(fd));
    }
    let gcd = minor_gcd(&minors, l as u8)?;
    Ok(gcd)
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in start..n {
            pick.push(i);
            rec(n, k, i + 1, pick, out);
            pick.pop();
        }
    }
    let mut out = vec![];
    rec(n, k, 0, &mut vec![], &mut out);
    out
}

/// gcd of rational-function minors up to units; exact for one variable,
/// divisibility-based for several.
fn minor_gcd(minors: &[Scalar], vars: u8) -> Result<Scalar> {
    use crate::scalars::laurent::{poly_gcd, Laurent};
    use crate::scalars::RatFun;
    let _fd = FieldDescriptor::rational_functions(vars)?;
    // clear to Laurent polynomials
    let polys: Vec<Laurent> = minors
        .iter()
        .map(|s| match s {
            Scalar::RationalFunction(rf) => Ok(rf.num.clone()),
            _ => Err(Error::validation("expected rational functions")),
        })
        .collect::<Result<_>>()?;
    if vars == 1 {
        let mut acc: Vec<num_rational::BigRational> = vec![];
        for p in &polys {
            let shifted = p.shift(&[-p.min_exponents()[0]]);
            let dense = shifted.to_dense();
            acc = if acc.is_empty() {
                dense
            } else {
                poly_gcd(&acc, &dense)
            };
        }
        // normalize to a primitive integer polynomial with positive lead
        let (_, prim) = crate::scalars::factor::primitive_part(&acc);
        let lau = Laurent::from_dense(
            &prim
                .iter()
                .map(|c| num_rational::BigRational::from(c.clone()))
                .collect::<Vec<_>>(),
        );
        Ok(Scalar::RationalFunction(RatFun::from_laurent(lau)))
    } else {
        // try each minor as a candidate divisor of all others
        'cand: for c in &polys {
            let cand = Scalar::RationalFunction(RatFun::from_laurent(c.clone()));
            for p in &polys {
                let q = Scalar::RationalFunction(RatFun::from_laurent(p.clone()))
                    .div(&cand)
                    .ok_or_else(|| Error::validation("zero minor"))?;
                // integral quotient <=> denominator trivial after reduction
                if let Scalar::RationalFunction(rf) = &q {
                    let den_monomial = rf.den.terms.len() == 1;
                    if !den_monomial {
                        continue 'cand;
                    }
                }
            }
            return Ok(cand);
        }
        Err(Error::precondition(
            "multivariable minor gcd beyond divisibility is not supported",
        ))
    }
}
