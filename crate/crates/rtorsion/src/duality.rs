//! Poincare duality machinery on presentation complexes: the cup-product
//! pairing of 1- and 2-cocycles through the identity word, the
//! surface-restricted pairing of two 1-cocycles through the Upsilon/kappa
//! calculus, dual bases, admissibility, and numeric orthonormalization.
//!
//! For the 3-cell attached along W = prod_k w_k r_{j_k}^{e_k} w_k^{-1}, the
//! (1,2)-part of the diagonal is
//!     Dsharp(c3) = sum_k e_k ( sum_i [dw_k/dx_i] a_i (x) w_k b_{j_k} ),
//! and pairing 1-cocycles against 2-cocycles through psi realizes the
//! duality pairing in degrees (1, 2). Degree (0, 3) pairs values directly.
//! The degree (1,1)-against-a-2-cycle pairing uses kappa(u, v) =
//! alpha(u) (x) u alpha(v) and the unique Upsilon with
//! Upsilon(uv) = Upsilon(u) + u Upsilon(v) + kappa(u, v), Upsilon(x_i) = 0.

use crate::chainkit::cohomology_bases;
use crate::foxcalc::{fox_derivative, GroupRingElement, IdentityWord, Presentation, Word};
use crate::matrix::{hermitian_eigen, CMat, SMat};
use crate::cellular::{twisted_cochain_complex, Representation};
use crate::scalars::Scalar;
use crate::{Error, Result};
use num_complex::Complex64;

/// A rho-invariant hermitian or anti-hermitian form psi(v, w) = conj(v)^T M w,
/// conjugate-linear in the first argument.
#[derive(Clone, Debug)]
pub struct BilinearFormSpec {
    pub matrix: SMat,
    pub anti: bool,
}

impl BilinearFormSpec {
    pub fn new(matrix: SMat, anti: bool) -> Result<Self> {
        let ct = matrix.conj_transpose();
        let want = if anti { ct.neg() } else { ct };
        if !matrix.eq(&want) {
            return Err(Error::validation(
                "form matrix is not (anti-)hermitian for the declared symmetry",
            ));
        }
        Ok(BilinearFormSpec { matrix, anti })
    }

    /// The standard hermitian form conj(v)^T w.
    pub fn standard(rep: &Representation) -> Self {
        BilinearFormSpec {
            matrix: SMat::identity(rep.dim, Scalar::zero(rep.field)),
            anti: false,
        }
    }

    /// psi(rho(g) v, rho(g) w) = psi(v, w) on all generators.
    pub fn is_invariant(&self, rep: &Representation) -> bool {
        rep.images.iter().all(|g| {
            g.conj_transpose().mul(&self.matrix).mul(g).eq(&self.matrix)
        })
    }

    pub fn apply(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        let n = self.matrix.rows;
        assert!(v.len() == n && w.len() == n);
        let mut acc = Scalar::zero(
            self.matrix.proto().field(),
        );
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            let vi = v[i].conjugate();
            for j in 0..n {
                if self.matrix[(i, j)].is_zero() || w[j].is_zero() {
                    continue;
                }
                acc = acc.add(&vi.mul(&self.matrix[(i, j)]).mul(&w[j]));
            }
        }
        acc
    }
}

fn block(v: &SMat, col: usize, blk: usize, n: usize) -> Vec<Scalar> {
    (0..n).map(|r| v[(blk * n + r, col)].clone()).collect()
}

fn mat_apply(m: &SMat, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows)
        .map(|i| {
            let mut acc = Scalar::zero(m.proto().field());
            for j in 0..m.cols {
                if m[(i, j)].is_zero() || v[j].is_zero() {
                    continue;
                }
                acc = acc.add(&m[(i, j)].mul(&v[j]));
            }
            acc
        })
        .collect()
}

/// The duality pairing of 1-cocycles h1 against 2-cocycles h2 on the 3-cell,
/// realized through the identity word. `orientation` is the sign of the
/// fundamental class carried by the manifold data. Entry (a, b) pairs
/// column a of h1 with column b of h2.
pub fn d_sharp_pairing(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: &BilinearFormSpec,
    h1: &SMat,
    h2: &SMat,
    orientation: i32,
) -> Result<SMat> {
    let n = rho.dim;
    let g = p.generators;
    if h1.rows != g * n || h2.rows != g * n {
        return Err(Error::validation("cocycle coordinates have the wrong size"));
    }
    let zero = Scalar::zero(rho.field);
    let mut out = SMat::zeros(h1.cols, h2.cols, zero.clone());
    for (conj, j, eps) in &w.factors {
        let translate = rho.word_image(conj);
        let derivs: Vec<SMat> = (0..g)
            .map(|i| rho.evaluate(&fox_derivative(conj, i as u32)))
            .collect();
        for a in 0..h1.cols {
            for b in 0..h2.cols {
                let target = mat_apply(&translate, &block(h2, b, *j, n));
                let mut acc = zero.clone();
                for i in 0..g {
                    let left = mat_apply(&derivs[i], &block(h1, a, i, n));
                    acc = acc.add(&psi.apply(&left, &target));
                }
                let signed = if *eps >= 0 { acc } else { acc.neg() };
                out[(a, b)] = out[(a, b)].add(&signed);
            }
        }
    }
    if orientation < 0 {
        out = out.neg();
    }
    Ok(out)
}

/// The duality pairing in degrees (0, 3): psi of the 0-cochain value against
/// the 3-cochain value.
pub fn pairing_03(
    psi: &BilinearFormSpec,
    h0: &SMat,
    h3: &SMat,
    orientation: i32,
) -> SMat {
    let _n = psi.matrix.rows;
    let zero = Scalar::zero(psi.matrix.proto().field());
    let mut out = SMat::zeros(h0.cols, h3.cols, zero);
    for a in 0..h0.cols {
        for b in 0..h3.cols {
            let v = h0.col(a);
            let w = h3.col(b);
            out[(a, b)] = psi.apply(&v, &w);
        }
    }
    if orientation < 0 {
        out = out.neg();
    }
    out
}

/// A 2-chain sum c_i * (relator cell i) with group-ring coefficients.
#[derive(Clone, Debug)]
pub struct TwoChain {
    pub coeffs: Vec<GroupRingElement>,
}

impl TwoChain {
    pub fn integral(coeffs: &[i64]) -> Self {
        TwoChain {
            coeffs: coeffs
                .iter()
                .map(|&c| GroupRingElement::one().scale(c))
                .collect(),
        }
    }

    /// Cycle condition in Z (x) C_1: the augmented boundary vanishes.
    pub fn is_cycle(&self, p: &Presentation) -> bool {
        if self.coeffs.len() != p.relators.len() {
            return false;
        }
        for jgen in 0..p.generators {
            let mut total = 0i64;
            for (i, r) in p.relators.iter().enumerate() {
                let d = fox_derivative(r, jgen as u32);
                total += self.coeffs[i].augmentation() * d.augmentation();
            }
            if total != 0 {
                return false;
            }
        }
        true
    }
}

/// One term left (x) right of a 1-chain tensor square, with word translates.
#[derive(Clone, Debug)]
struct UpsTerm {
    coeff: i64,
    left: Word,
    gen_left: usize,
    right: Word,
    gen_right: usize,
}

/// Upsilon of a word, as an explicit element of C_1 (x) C_1.
fn upsilon(w: &Word) -> Vec<UpsTerm> {
    let mut terms: Vec<UpsTerm> = vec![];
    let mut mu = Word::one(); // image of the processed prefix
    let mut alpha: Vec<GroupRingElement> = vec![]; // Fox chain of the prefix, per generator
    let grow = |alpha: &mut Vec<GroupRingElement>, idx: usize| {
        while alpha.len() <= idx {
            alpha.push(GroupRingElement::zero());
        }
    };
    for &(g, e) in w.letters() {
        let reps = e.unsigned_abs();
        for _ in 0..reps {
            let sign = if e > 0 { 1 } else { -1 };
            // single letter y = x_g^{sign}
            let (alpha_y, ups_y): (GroupRingElement, Vec<UpsTerm>) = if sign > 0 {
                (GroupRingElement::one(), vec![])
            } else {
                let xinv = Word::generator_power(g, -1);
                (
                    GroupRingElement::from_word(xinv.clone()).neg(),
                    // Upsilon(x^{-1}) = x^{-1} a (x) x^{-1} a
                    vec![UpsTerm {
                        coeff: 1,
                        left: xinv.clone(),
                        gen_left: g as usize,
                        right: xinv,
                        gen_right: g as usize,
                    }],
                )
            };
            // kappa(prefix, y) = alpha(prefix) (x) mu(prefix) alpha(y)
            for (i, ai) in alpha.iter().enumerate() {
                for (wl, cl) in ai.terms() {
                    for (wr, cr) in alpha_y.terms() {
                        terms.push(UpsTerm {
                            coeff: cl * cr,
                            left: wl.clone(),
                            gen_left: i,
                            right: mu.mul(wr),
                            gen_right: g as usize,
                        });
                    }
                }
            }
            // mu(prefix) * Upsilon(y)
            for t in &ups_y {
                terms.push(UpsTerm {
                    coeff: t.coeff,
                    left: mu.mul(&t.left),
                    gen_left: t.gen_left,
                    right: mu.mul(&t.right),
                    gen_right: t.gen_right,
                });
            }
            // alpha(prefix * y) = alpha(prefix) + mu(prefix) alpha(y)
            grow(&mut alpha, g as usize);
            for (wr, cr) in alpha_y.terms() {
                let shifted = mu.mul(wr);
                alpha[g as usize].insert(shifted, cr);
            }
            mu = mu.mul(&Word::generator_power(g, sign));
        }
    }
    terms
}

/// A normalized element of C_1 (x) C_1 over the group ring: coefficients on
/// (left translate, left cell, right translate, right cell).
pub type TensorSquare = std::collections::BTreeMap<(Word, usize, Word, usize), i64>;

fn normalize_terms(terms: &[UpsTerm]) -> TensorSquare {
    let mut out = TensorSquare::new();
    for t in terms {
        let key = (t.left.clone(), t.gen_left, t.right.clone(), t.gen_right);
        let e = out.entry(key).or_insert(0);
        *e += t.coeff;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Upsilon of a word as a normalized tensor (test surface for the cocycle
/// and well-definedness properties).
pub fn upsilon_tensor(w: &Word) -> TensorSquare {
    normalize_terms(&upsilon(w))
}

/// kappa(u, v) = alpha(u) (x) u alpha(v) as a normalized tensor.
pub fn kappa_tensor(u: &Word, v: &Word, generators: usize) -> TensorSquare {
    let mut terms = vec![];
    for i in 0..generators {
        let au = fox_derivative(u, i as u32);
        for j in 0..generators {
            let av = fox_derivative(v, j as u32);
            for (wl, cl) in au.terms() {
                for (wr, cr) in av.terms() {
                    terms.push(UpsTerm {
                        coeff: cl * cr,
                        left: wl.clone(),
                        gen_left: i,
                        right: u.mul(wr),
                        gen_right: j,
                    });
                }
            }
        }
    }
    normalize_terms(&terms)
}

/// Diagonal group action and module operations on normalized tensors.
pub fn tensor_translate(t: &TensorSquare, g: &Word) -> TensorSquare {
    t.iter()
        .map(|((lw, li, rw, ri), &c)| ((g.mul(lw), *li, g.mul(rw), *ri), c))
        .collect()
}

pub fn tensor_add(a: &TensorSquare, b: &TensorSquare) -> TensorSquare {
    let mut out = a.clone();
    for (k, v) in b {
        let e = out.entry(k.clone()).or_insert(0);
        *e += v;
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn tensor_neg(a: &TensorSquare) -> TensorSquare {
    a.iter().map(|(k, v)| (k.clone(), -v)).collect()
}

/// Evaluate (f (x) f') on Upsilon(w) through rho and couple with psi.
fn upsilon_pairing_value(
    w: &Word,
    rho: &Representation,
    psi: &BilinearFormSpec,
    f: &[Scalar],
    f2: &[Scalar],
    translate: &Word,
    coeff: i64,
) -> Scalar {
    let n = rho.dim;
    let mut acc = Scalar::zero(rho.field);
    for t in upsilon(w) {
        let lw = translate.mul(&t.left);
        let rw = translate.mul(&t.right);
        let lv = mat_apply(
            &rho.word_image(&lw),
            &f[t.gen_left * n..(t.gen_left + 1) * n].to_vec(),
        );
        let rv = mat_apply(
            &rho.word_image(&rw),
            &f2[t.gen_right * n..(t.gen_right + 1) * n].to_vec(),
        );
        let v = psi.apply(&lv, &rv);
        let c = Scalar::from_integer(rho.field, t.coeff * coeff);
        acc = acc.add(&v.mul(&c));
    }
    acc
}

/// The pairing psi((f u f') cap c) of two 1-cocycles against a 2-cycle:
/// sum_i psi o (f (x) f')(c_i Upsilon(r_i)).
pub fn surface_pairing(
    p: &Presentation,
    rho: &Representation,
    psi: &BilinearFormSpec,
    f: &[Scalar],
    f2: &[Scalar],
    c: &TwoChain,
) -> Result<Scalar> {
    if c.coeffs.len() != p.relators.len() {
        return Err(Error::validation("one chain coefficient per relator required"));
    }
    if !c.is_cycle(p) {
        return Err(Error::precondition("the 2-chain is not a cycle"));
    }
    let mut acc = Scalar::zero(rho.field);
    for (i, r) in p.relators.iter().enumerate() {
        for (w, coeff) in c.coeffs[i].terms() {
            acc = acc.add(&upsilon_pairing_value(r, rho, psi, f, f2, w, coeff));
        }
    }
    Ok(acc)
}

/// Pairing matrix of the surface pairing on a basis of 1-cocycles.
pub fn surface_pairing_matrix(
    p: &Presentation,
    rho: &Representation,
    psi: &BilinearFormSpec,
    h1: &SMat,
    c: &TwoChain,
) -> Result<SMat> {
    let zero = Scalar::zero(rho.field);
    let mut out = SMat::zeros(h1.cols, h1.cols, zero);
    for a in 0..h1.cols {
        for b in 0..h1.cols {
            out[(a, b)] = surface_pairing(p, rho, psi, &h1.col(a), &h1.col(b), c)?;
        }
    }
    Ok(out)
}

/// Dual basis h^dual with pairing(h_j, h^dual_k) = delta_jk, solving in the
/// conjugate-linear-first convention: the pairing is linear in its second
/// argument, so the dual transition matrix is P^{-1}.
pub fn dual_basis(pairing: &SMat, h_other: &SMat) -> Result<SMat> {
    if pairing.rows != pairing.cols {
        return Err(Error::validation("pairing matrix must be square"));
    }
    let inv = pairing
        .inverse()
        .map_err(|_| Error::precondition("degenerate duality pairing"))?;
    Ok(h_other.mul(&inv))
}

/// Admissibility of (rho, psi, Sigma): both the surface pairing on H^1 and
/// the duality pairings are non-degenerate.
pub fn is_admissible(
    p: &Presentation,
    w: &IdentityWord,
    rho: &Representation,
    psi: &BilinearFormSpec,
    sigma: &TwoChain,
) -> Result<bool> {
    let complex = twisted_cochain_complex(p, w, rho)?;
    let coh = cohomology_bases(&complex);
    let h1 = &coh.h_reps[1];
    if h1.cols > 0 {
        let m = surface_pairing_matrix(p, rho, psi, h1, sigma)?;
        if m.det().is_zero() {
            return Ok(false);
        }
    }
    let m12 = d_sharp_pairing(p, w, rho, psi, h1, &coh.h_reps[2], 1)?;
    if m12.rows != m12.cols {
        return Ok(false);
    }
    if m12.rows > 0 && m12.det().is_zero() {
        return Ok(false);
    }
    let m03 = pairing_03(psi, &coh.h_reps[0], &coh.h_reps[3], 1);
    if m03.rows != m03.cols {
        return Ok(false);
    }
    if m03.rows > 0 && m03.det().is_zero() {
        return Ok(false);
    }
    Ok(true)
}

/// Result of the numeric orthonormalization of a pairing matrix.
#[derive(Clone, Debug)]
pub struct OrthonormalBasis {
    /// overall scaling u (the normalized basis is h * (u R))
    pub u: f64,
    /// unitary R for the anti-hermitian normal form; for hermitian input the
    /// scaling is folded per-column and R is only orthogonal up to scale
    pub r: CMat,
    /// the achieved normal form diagonal (entries of D with
    /// conj(uR)^T P (uR) = sqrt(-1) D anti-hermitian / D hermitian)
    pub normal_form: Vec<f64>,
    pub precision: f64,
}

/// Orthonormalize a non-degenerate (anti-)hermitian pairing matrix via the
/// designated complex embedding. Anti-hermitian P with eigenvalues of equal
/// modulus yields conj(uR)^T P (uR) = sqrt(-1) diag(-1,..,1) with R unitary;
/// hermitian P yields the signature normal form diag(-1,..,1).
pub fn orthonormal_basis(p: &SMat, anti: bool, precision: f64) -> Result<OrthonormalBasis> {
    let n = p.rows;
    if n == 0 || p.rows != p.cols {
        return Err(Error::validation("pairing matrix must be square and nonempty"));
    }
    let pc = p.embed()?;
    // hermitian part to diagonalize
    let h = if anti {
        // -i P is hermitian when P is anti-hermitian
        pc.map(|z| Complex64::new(0.0, -1.0) * z)
    } else {
        pc.clone()
    };
    let herm_defect: f64 = {
        let d = h.sub(&h.conj_transpose());
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                m = m.max(d[(i, j)].norm());
            }
        }
        m
    };
    if herm_defect > 1e-8 {
        return Err(Error::validation(
            "matrix is not (anti-)hermitian under the embedding",
        ));
    }
    let (eigs, vecs) = hermitian_eigen(&h);
    if eigs.iter().any(|l| l.abs() < precision.max(1e-300)) {
        return Err(Error::precondition("degenerate pairing matrix"));
    }
    if anti {
        let mag = eigs[0].abs();
        if eigs.iter().any(|l| (l.abs() - mag).abs() > 1e-6 * mag.max(1.0)) {
            return Err(Error::precondition(
                "anti-hermitian normal form needs eigenvalues of equal modulus",
            ));
        }
        let u = 1.0 / mag.sqrt();
        let normal_form: Vec<f64> = eigs.iter().map(|l| l.signum()).collect();
        // verify conj(uR)^T P (uR) = i diag(sign)
        let ur = vecs.map(|z| z * u);
        let check = ur.conj_transpose().mul(&pc).mul(&ur);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j {
                    Complex64::new(0.0, normal_form[i])
                } else {
                    Complex64::new(0.0, 0.0)
                };
                if (check[(i, j)] - want).norm() > 1e-6 {
                    return Err(Error::precondition("orthonormalization precision failure"));
                }
            }
        }
        Ok(OrthonormalBasis {
            u,
            r: vecs,
            normal_form,
            precision,
        })
    } else {
        // per-column scaling 1/sqrt|lambda|
        let mut r = vecs.clone();
        for j in 0..n {
            let s = 1.0 / eigs[j].abs().sqrt();
            for i in 0..n {
                r[(i, j)] *= s;
            }
        }
        let normal_form: Vec<f64> = eigs.iter().map(|l| l.signum()).collect();
        Ok(OrthonormalBasis {
            u: 1.0,
            r,
            normal_form,
            precision,
        })
    }
}
