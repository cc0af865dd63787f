//! Torsion of a based cochain complex: deterministic cohomology bases,
//! the alternating-determinant torsion, its sign refinement through the
//! real (rational) trivial-coefficient complex, and the determinant-line
//! products built from it.
//!
//! For a complex 0 -> C^0 -> ... -> C^k -> 0 with distinguished bases c_i
//! and cohomology bases h_i, the torsion is
//!     tau = prod_i [ (b_i u lift(h_i) u lift(b_{i+1})) / c_i ]^{(-1)^{i+1}},
//! where b_i spans Im(delta^{i-1}) and lift(b_{i+1}) are preimages under
//! delta^i. The value does not depend on the b_i or the lifts; all pivoting
//! is leftmost-column lowest-row, so every basis choice is reproducible.

use crate::matrix::{CMat, Coeff, Mat, SMat};
use crate::scalars::{FieldDescriptor, Scalar};
use crate::{Error, Result};
use num_complex::Complex64;

/// A bounded cochain complex with its standard bases.
#[derive(Clone, Debug)]
pub struct BasedComplex {
    pub field: FieldDescriptor,
    pub dims: Vec<usize>,
    /// deltas[i]: C^i -> C^{i+1} as a dims[i+1] x dims[i] matrix.
    pub deltas: Vec<SMat>,
}

impl BasedComplex {
    pub fn new(field: FieldDescriptor, deltas: Vec<SMat>) -> Result<Self> {
        if deltas.is_empty() {
            return Err(Error::validation("complex needs at least one map"));
        }
        let mut dims = vec![deltas[0].cols];
        for d in &deltas {
            if d.cols != *dims.last().unwrap() {
                return Err(Error::validation("inconsistent complex dimensions"));
            }
            dims.push(d.rows);
        }
        for w in deltas.windows(2) {
            if !w[1].mul(&w[0]).is_zero_matrix() {
                return Err(Error::validation("delta o delta != 0"));
            }
        }
        Ok(BasedComplex { field, dims, deltas })
    }

    /// A complex with prescribed dimensions and all differentials zero.
    pub fn zero_differentials(field: FieldDescriptor, dims: &[usize]) -> Self {
        let proto = Scalar::zero(field);
        let deltas = dims
            .windows(2)
            .map(|w| SMat::zeros(w[1], w[0], proto.clone()))
            .collect();
        BasedComplex {
            field,
            dims: dims.to_vec(),
            deltas,
        }
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Numeric image of the complex under the designated embedding.
    pub fn embed(&self) -> Result<(Vec<usize>, Vec<CMat>)> {
        let deltas: Result<Vec<CMat>> = self.deltas.iter().map(|d| d.embed()).collect();
        Ok((self.dims.clone(), deltas?))
    }

    /// Permute the standard basis within each degree (cell reordering).
    pub fn permute_cells(&self, perms: &[Vec<usize>]) -> Self {
        assert_eq!(perms.len(), self.dims.len());
        let proto = Scalar::zero(self.field);
        let mut deltas = vec![];
        for (i, d) in self.deltas.iter().enumerate() {
            let pin = &perms[i];
            let pout = &perms[i + 1];
            let nd = Mat::from_fn(d.rows, d.cols, proto.clone(), |r, c| {
                d[(pout[r], pin[c])].clone()
            });
            deltas.push(nd);
        }
        BasedComplex {
            field: self.field,
            dims: self.dims.clone(),
            deltas,
        }
    }
}

fn delta_at<T: Coeff>(dims: &[usize], deltas: &[Mat<T>], proto: &T, i: usize) -> Mat<T> {
    if i < deltas.len() {
        deltas[i].clone()
    } else {
        Mat::zeros(0, dims[i], proto.clone())
    }
}

/// Deterministic cohomology data: image pivots and cocycle representatives.
#[derive(Clone, Debug)]
pub struct CohomologyOf<T: Coeff> {
    pub h_dims: Vec<usize>,
    /// Columns are cocycle representatives of a basis of H^i.
    pub h_reps: Vec<Mat<T>>,
    /// Pivot columns of delta^i (sources of the chosen image basis of B^{i+1}).
    pub image_pivots: Vec<Vec<usize>>,
}

pub type CohomologyData = CohomologyOf<Scalar>;

/// Deterministic bases via leftmost-pivot row reduction: the image basis of
/// B^{i+1} is delta^i applied to the pivot columns; H^i representatives are
/// kernel-basis columns extending the image basis of B^i.
pub fn cohomology_of<T: Coeff>(dims: &[usize], deltas: &[Mat<T>], proto: &T) -> CohomologyOf<T> {
    let k = dims.len() - 1;
    let mut h_dims = vec![];
    let mut h_reps = vec![];
    let mut image_pivots = vec![];
    for i in 0..=k {
        let (_, pivots) = delta_at(dims, deltas, proto, i).rref();
        image_pivots.push(pivots);
    }
    for i in 0..=k {
        let z = delta_at(dims, deltas, proto, i).kernel_basis();
        let b = if i == 0 {
            Mat::zeros(dims[0], 0, proto.clone())
        } else {
            deltas[i - 1].select_cols(&image_pivots[i - 1])
        };
        let mut chosen: Vec<usize> = vec![];
        let mut work = b.clone();
        let mut rank = work.rank();
        for j in 0..z.cols {
            let cand = Mat::hstack(&[&work, &z.select_cols(&[j])], dims[i], proto.clone());
            let r = cand.rank();
            if r > rank {
                rank = r;
                work = cand;
                chosen.push(j);
            }
        }
        h_dims.push(chosen.len());
        h_reps.push(z.select_cols(&chosen));
    }
    CohomologyOf {
        h_dims,
        h_reps,
        image_pivots,
    }
}

pub fn cohomology_bases(c: &BasedComplex) -> CohomologyData {
    cohomology_of(&c.dims, &c.deltas, &Scalar::zero(c.field))
}

/// Core torsion computation over any coefficient type; `noise` perturbs the
/// internal choices (image bases, lifts, representative shifts) without
/// changing the result, which the property suite exploits.
pub fn torsion_of<T: Coeff>(
    dims: &[usize],
    deltas: &[Mat<T>],
    proto: &T,
    h: &[Mat<T>],
    noise: &mut dyn FnMut() -> i64,
) -> Result<T> {
    let k = dims.len() - 1;
    if h.len() != k + 1 {
        return Err(Error::validation("one cohomology basis per degree required"));
    }
    let coh = cohomology_of(dims, deltas, proto);
    let one = proto.one();
    let mut tau = one.clone();
    let mut lifts: Vec<Mat<T>> = vec![];
    let mut images: Vec<Mat<T>> = vec![];
    for i in 0..=k {
        let pivots = &coh.image_pivots[i];
        let d = delta_at(dims, deltas, proto, i);
        let r = pivots.len();
        // invertible mixing matrix: unit diagonal entries, noisy upper part
        let mut mix = Mat::identity(r, proto.clone());
        for a in 0..r {
            for b in (a + 1)..r {
                mix[(a, b)] = proto.from_int(noise());
            }
        }
        let src = {
            let mut m = Mat::zeros(dims[i], r, proto.clone());
            for (col, &p) in pivots.iter().enumerate() {
                m[(p, col)] = one.clone();
            }
            m.mul(&mix)
        };
        let ker = d.kernel_basis();
        let mut lift = src.clone();
        if ker.cols > 0 && r > 0 {
            let mut t = Mat::zeros(ker.cols, r, proto.clone());
            for a in 0..ker.cols {
                for b in 0..r {
                    t[(a, b)] = proto.from_int(noise());
                }
            }
            lift = lift.add(&ker.mul(&t));
        }
        images.push(d.mul(&lift));
        lifts.push(lift);
    }
    for i in 0..=k {
        let b_i = if i == 0 {
            Mat::zeros(dims[0], 0, proto.clone())
        } else {
            images[i - 1].clone()
        };
        let mut hrep = h[i].clone();
        if b_i.cols > 0 && hrep.cols > 0 {
            let mut t = Mat::zeros(b_i.cols, hrep.cols, proto.clone());
            for a in 0..b_i.cols {
                for bcol in 0..hrep.cols {
                    t[(a, bcol)] = proto.from_int(noise());
                }
            }
            hrep = hrep.add(&b_i.mul(&t));
        }
        let assembled = Mat::hstack(&[&b_i, &hrep, &lifts[i]], dims[i], proto.clone());
        if assembled.cols != dims[i] {
            return Err(Error::precondition(format!(
                "degree {i}: basis count {} does not match dim {}",
                assembled.cols, dims[i]
            )));
        }
        let det = assembled.det();
        if det.is_zero() {
            return Err(Error::precondition(format!(
                "degree {i}: cohomology representatives do not form a basis"
            )));
        }
        if i % 2 == 1 {
            tau = tau.mul(&det);
        } else {
            tau = tau.mul(&det.inv().expect("nonzero det"));
        }
    }
    Ok(tau)
}

/// The torsion tau(C*, c, h) for cocycle-representative bases h.
pub fn torsion(c: &BasedComplex, h: &[SMat]) -> Result<Scalar> {
    torsion_of(&c.dims, &c.deltas, &Scalar::zero(c.field), h, &mut || 0)
}

/// Torsion with externally randomized internal choices.
pub fn torsion_with_choices(
    c: &BasedComplex,
    h: &[SMat],
    noise: &mut dyn FnMut() -> i64,
) -> Result<Scalar> {
    torsion_of(&c.dims, &c.deltas, &Scalar::zero(c.field), h, noise)
}

/// Numeric torsion of an embedded complex with numeric cohomology bases.
pub fn torsion_numeric(dims: &[usize], deltas: &[CMat], h: &[CMat]) -> Result<Complex64> {
    torsion_of(dims, deltas, &Complex64::new(0.0, 0.0), h, &mut || 0)
}

/// Parity of N(Y) from the dimension data of the real complex: the double
/// partial-sum expression, consumed only mod 2.
pub fn n_y_parity(dims_c: &[usize], dims_h: &[usize]) -> bool {
    let top = dims_c.len() - 1;
    let mut total = 0usize;
    let mut hsum = 0usize;
    let mut csum = 0usize;
    for i in 0..=top {
        hsum += dims_h[top - i];
        csum += dims_c[top - i];
        total += hsum * csum;
    }
    total % 2 == 1
}

/// The sign factor sign(tilde-tau(C*(Y; R), c, h))^n of the refined torsion,
/// computed from the rational trivial-coefficient complex with the homology
/// orientation induced by its deterministic basis.
pub fn real_sign(real: &BasedComplex, n: usize) -> Result<i32> {
    if n % 2 == 0 {
        return Ok(1);
    }
    let rcoh = cohomology_bases(real);
    let tau_r = torsion(real, &rcoh.h_reps)?;
    let mut sign = tau_r.rational_sign()?;
    if n_y_parity(&real.dims, &rcoh.h_dims) {
        sign = -sign;
    }
    if sign == 0 {
        return Err(Error::precondition("real torsion vanished"));
    }
    Ok(sign)
}

/// The sign-refined torsion sign(tilde-tau(C*(Y; R)))^n * tau(C*_rho, c, h);
/// for even n the real pathway is skipped.
pub fn refined_sign_torsion(
    c: &BasedComplex,
    h: &[SMat],
    real: &BasedComplex,
    n: usize,
) -> Result<Scalar> {
    let tau = torsion(c, h)?;
    if real_sign(real, n)? < 0 {
        Ok(tau.neg())
    } else {
        Ok(tau)
    }
}

/// Poincare-Reidemeister scalar products on determinant lines. Both modes
/// divide a wedge coefficient by a torsion: the half product by the refined
/// torsion of the rho-complex, the full product by the torsion of the
/// (rho + conjugate-rho)-complex. Arguments are coefficients relative to the
/// graded basis whose degree-i part is denominator_h[i], so that
/// mu(alpha (x) D(beta)) has coefficient alpha * conj(beta) in that basis.
pub enum PrMode {
    Full,
    Half,
}

pub fn pr_product(
    mode: PrMode,
    denominator_complex: &BasedComplex,
    denominator_h: &[SMat],
    real: &BasedComplex,
    n: usize,
    alpha: &Scalar,
    beta: &Scalar,
) -> Result<Scalar> {
    let tau = match mode {
        PrMode::Half => refined_sign_torsion(denominator_complex, denominator_h, real, n)?,
        PrMode::Full => torsion(denominator_complex, denominator_h)?,
    };
    alpha
        .mul(&beta.conjugate())
        .div(&tau)
        .ok_or_else(|| Error::precondition("vanishing torsion in PR product"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(FieldDescriptor::rationals(), n)
    }

    #[test]
    fn invertible_map_torsion() {
        // 0 -> F --(3)--> F -> 0, no cohomology: tau = 3
        let d = SMat::from_rows(vec![vec![q(3)]], q(0));
        let c = BasedComplex::new(FieldDescriptor::rationals(), vec![d]).unwrap();
        let coh = cohomology_bases(&c);
        assert_eq!(coh.h_dims, vec![0, 0]);
        let empty = vec![SMat::zeros(1, 0, q(0)), SMat::zeros(1, 0, q(0))];
        assert_eq!(torsion(&c, &empty).unwrap(), q(3));
    }

    #[test]
    fn zero_differentials_torsion_is_one() {
        let c = BasedComplex::zero_differentials(FieldDescriptor::rationals(), &[2, 3, 2]);
        let coh = cohomology_bases(&c);
        assert_eq!(coh.h_dims, vec![2, 3, 2]);
        assert_eq!(torsion(&c, &coh.h_reps).unwrap(), q(1));
    }

    #[test]
    fn torsion_independent_of_choices() {
        // 0 -> Q^2 -> Q^3 -> Q -> 0
        let d0 = SMat::from_rows(
            vec![vec![q(1), q(2)], vec![q(0), q(1)], vec![q(1), q(0)]],
            q(0),
        );
        let d1 = SMat::from_rows(vec![vec![q(1), q(-2), q(-1)]], q(0));
        assert!(d1.mul(&d0).is_zero_matrix());
        let c = BasedComplex::new(FieldDescriptor::rationals(), vec![d0, d1]).unwrap();
        let coh = cohomology_bases(&c);
        let t0 = torsion(&c, &coh.h_reps).unwrap();
        let mut state = 7u64;
        let mut noise = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..5 {
            let t = torsion_with_choices(&c, &coh.h_reps, &mut noise).unwrap();
            assert_eq!(t, t0);
        }
    }

    #[test]
    fn n_parity_example() {
        // dims C = (1,2,2,1), dims H = (1,1,1,1):
        // 1*1 + 2*3 + 3*5 + 4*6 = 46, even
        assert!(!n_y_parity(&[1, 2, 2, 1], &[1, 1, 1, 1]));
    }
}
