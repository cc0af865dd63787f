//! Development probe: print the computed golden values for the catalog
//! families so conventions (orientation, normalizations) can be pinned.

use rtorsion::catalog::*;
use rtorsion::cellular::Representation;
use rtorsion::chainkit::cohomology_bases;
use rtorsion::duality::{d_sharp_pairing, surface_pairing_matrix, BilinearFormSpec};
use rtorsion::matrix::SMat;
use rtorsion::refined::*;
use rtorsion::scalars::Scalar as _ScalarAlias;
use rtorsion::scalars::{FieldDescriptor, Scalar};

fn seifert_s_t_bases(rep: &Representation) -> (SMat, SMat) {
    // S = ((E-A^-1)^-1 ; -(E-B^-1)^-1), T = 1/r (-(E-B)^-1 ; (E-A)^-1)
    let fd = rep.field;
    let e = SMat::identity(2, Scalar::zero(fd));
    let a = &rep.images[0];
    let b = &rep.images[1];
    let ai = a.inverse().unwrap();
    let bi = b.inverse().unwrap();
    let s_top = e.sub(&ai).inverse().unwrap();
    let s_bot = e.sub(&bi).inverse().unwrap().neg();
    let t_top = e.sub(b).inverse().unwrap().neg();
    let t_bot = e.sub(a).inverse().unwrap();
    // r = 1/((1-alpha)(1-alpha^-1)) + 1/((1-beta)(1-beta^-1)) = tr boils down
    // to the scalar det-based value below
    let p = e.sub(a).det();
    let q = e.sub(b).det();
    let r = p.inv().unwrap().add(&q.inv().unwrap());
    let rinv = r.inv().unwrap();
    let s = SMat::vstack(&[&s_top, &s_bot], 2, Scalar::zero(fd));
    let t = SMat::vstack(&[&t_top, &t_bot], 2, Scalar::zero(fd)).scale(&rinv);
    (s, t)
}

fn main() {
    // ---- Seifert case (ii): (l,m,n) = (12,6,4), (a,b,k) = (1,2,2) ----
    let spec = SeifertSpec::from_b1(1, 2, 2).unwrap();
    println!("Seifert (l,m,n) = ({}, {}, {})", spec.l, spec.m, spec.n);
    let sl2 = SL2SpectraSpec::roots(24, 4, -4, 6); // alpha = z6, beta = z6^-1, gamma = i
    let (rep, psi) = seifert_representation(&spec, &sl2).unwrap();
    let p = spec.presentation();
    let w = spec.identity();
    let (s, t) = seifert_s_t_bases(&rep);
    for orient in [1i32, -1] {
        let m = d_sharp_pairing(&p, &w, &rep, &psi, &s, &t, orient).unwrap();
        println!(
            "  orient {orient}: kk4(Sf, Tf) = [[{}, {}], [{}, {}]]",
            m[(0, 0)],
            m[(0, 1)],
            m[(1, 0)],
            m[(1, 1)]
        );
    }
    let report = dual_refined_torsion(&p, &w, &rep, psi.clone(), spec.orientation()).unwrap();
    println!("  dims {:?}, raw = {}", report.h_dims, report.raw);
    println!("  class = {:?}", report.class.canonical);

    // surface pairing matrix on the paper's S-basis
    let sp = surface_pairing_matrix(&p, &rep, &psi, &s, &spec.sigma().unwrap()).unwrap();
    let m00 = sp[(0, 0)].embed().unwrap();
    let m01 = sp[(0, 1)].embed().unwrap();
    let m10 = sp[(1, 0)].embed().unwrap();
    let m11 = sp[(1, 1)].embed().unwrap();
    println!("  surface pairing on S-basis: [[{m00}, {m01}], [{m10}, {m11}]]");
    let disc = ((m00 + m11) * (m00 + m11) - 4.0 * (m00 * m11 - m01 * m10)).sqrt();
    let e1 = ((m00 + m11) + disc) / 2.0;
    let e2 = ((m00 + m11) - disc) / 2.0;
    println!("  S-basis eigenvalues: {e1}, {e2}");
    // expected u^2 = a b (a+b) k r^2 / (|1-al| |1-be| |1-ga|) = 24 sqrt(2)
    println!("  expected eigenvalues +- i * {}", 24.0 * 2f64.sqrt());
    match admissible_torsion(&p, &w, &rep, &psi, &spec.sigma().unwrap(), spec.orientation(), 1e-9) {
        Ok(at) => println!("  admissible torsion = {}", at.raw),
        Err(e) => println!("  admissible torsion error: {e}"),
    }

    // ---- Seifert acyclic: (2,2,2), alpha = beta = gamma = i ----
    let spec2 = SeifertSpec::new(2, 2, 2).unwrap();
    let sl22 = SL2SpectraSpec::roots(4, 1, 1, 1);
    let (rep2, psi2) = seifert_representation(&spec2, &sl22).unwrap();
    let p2 = spec2.presentation();
    let w2 = spec2.identity();
    let report2 = dual_refined_torsion(&p2, &w2, &rep2, psi2, spec2.orientation()).unwrap();
    println!(
        "Seifert acyclic (2,2,2): dims {:?}, raw = {} (closed form -4abg/(...) = 1/2)",
        report2.h_dims, report2.raw
    );

    // volume probe
    for beta in [1i64, 2, 3] {
        let tb = TorusBundleSpec::new(-1, beta, 0, -1).unwrap();
        let pts = tb.variety_points(8).unwrap();
        let ptb = tb.presentation();
        let wtb = tb.identity();
        let mut coeffs = vec![];
        for pt in &pts {
            let rep = tb.adjoint_representation(pt).unwrap();
            let psi = BilinearFormSpec::standard(&rep);
            let r = dual_refined_torsion(&ptb, &wtb, &rep, psi, tb.orientation()).unwrap();
            let raw = rtorsion::scalars::parse::parse_scalar(&r.raw, None).unwrap();
            coeffs.push(volume_form_coefficient(&raw).unwrap());
        }
        let vol = volume_from_coefficients(&coeffs);
        println!(
            "volume beta={beta}: {} (4 sqrt(beta) pi = {})",
            vol,
            4.0 * (beta as f64).sqrt() * std::f64::consts::PI
        );
    }

    // ---- torus bundle beta = 2 ----
    let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
    let pts = tb.variety_points(8).unwrap();
    let ptb = tb.presentation();
    let wtb = tb.identity();
    for pt in &pts {
        let rep = tb.adjoint_representation(pt).unwrap();
        let psi = BilinearFormSpec::standard(&rep);
        for orient in [1i32, -1] {
            match dual_refined_torsion(&ptb, &wtb, &rep, psi.clone(), orient) {
                Ok(r) => println!(
                    "TB beta=2 (u={}, v={}) orient {orient}: dims {:?} raw = {}",
                    pt.u, pt.v, r.h_dims, r.raw
                ),
                Err(e) => println!("TB orient {orient} error: {e}"),
            }
        }
        // sigma torsion with the deterministic H^2 generator
        let complex = rtorsion::cellular::twisted_cochain_complex(&ptb, &wtb, &rep).unwrap();
        let coh = cohomology_bases(&complex);
        println!("  H^2 deterministic generator (coords):");
        let h2 = &coh.h_reps[2];
        for r in 0..h2.rows {
            if !h2[(r, 0)].is_zero() {
                println!("    row {r}: {}", h2[(r, 0)]);
            }
        }
        for orient in [1i32, -1] {
            match sigma_torsion(&ptb, &wtb, &rep, psi.clone(), &coh.h_reps[2], orient) {
                Ok(r) => println!("  sigma torsion orient {orient}: raw = {}", r.raw),
                Err(e) => println!("  sigma torsion orient {orient} error: {e}"),
            }
        }
        break; // one point suffices for the probe
    }

    // ---- non-admissibility of the torus bundle (Prop lli) ----
    {
        let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
        let ptb = tb.presentation();
        let wtb = tb.identity();
        let pt = &tb.variety_points(8).unwrap()[0];
        let rep = tb.adjoint_representation(pt).unwrap();
        let psi = BilinearFormSpec::standard(&rep);
        let complex = rtorsion::cellular::twisted_cochain_complex(&ptb, &wtb, &rep).unwrap();
        let coh = cohomology_bases(&complex);
        let sp = surface_pairing_matrix(&ptb, &rep, &psi, &coh.h_reps[1], &tb.sigma_alpha(true)).unwrap();
        println!(
            "TB surface pairing on H^1 (should vanish): is_zero = {}",
            sp.is_zero_matrix()
        );
        let adm = rtorsion::duality::is_admissible(&ptb, &wtb, &rep, &psi, &tb.sigma_alpha(true)).unwrap();
        println!("TB is_admissible = {adm} (expect false)");
    }

    // ---- PR products on Seifert (12,6,4) and torus bundle ----
    {
        let spec = SeifertSpec::from_b1(1, 2, 2).unwrap();
        let sl2 = SL2SpectraSpec::roots(24, 4, -4, 6);
        let (rep, psi) = seifert_representation(&spec, &sl2).unwrap();
        let p = spec.presentation();
        let w = spec.identity();
        let bundle = bundle_from_identity(&p, &w, &rep, psi.clone(), 1).unwrap();
        let (_, _, tau) = kk54_torsion(&bundle).unwrap();
        println!("Seifert kk54 raw again = {tau}");
        let one = Scalar::one(rep.field);
        let half = pr_half(&bundle, &one, &one).unwrap();
        println!(
            "PR_half(h, h) = {half}; inverse of tau = {}",
            tau.inv().unwrap()
        );
        let full = pr_full(&p, &w, &rep, &psi, 1, &tau, &tau).unwrap();
        println!("PR_full(tau h', tau h') = {full} (expect 1)");

        let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
        let ptb = tb.presentation();
        let wtb = tb.identity();
        let pt = &tb.variety_points(8).unwrap()[0];
        let rtb = tb.adjoint_representation(pt).unwrap();
        let psitb = BilinearFormSpec::standard(&rtb);
        let btb = bundle_from_identity(&ptb, &wtb, &rtb, psitb.clone(), 1).unwrap();
        let (_, _, tautb) = kk54_torsion(&btb).unwrap();
        let one = Scalar::one(rtb.field);
        let halftb = pr_half(&btb, &one, &one).unwrap();
        println!(
            "TB PR_half = {halftb}; inverse of tau = {}",
            tautb.inv().unwrap()
        );
        let fulltb = pr_full(&ptb, &wtb, &rtb, &psitb, 1, &tautb, &tautb).unwrap();
        println!("TB PR_full(tau h', tau h') = {fulltb} (expect 1)");
    }

    // ---- T^3 ----
    let t3b = t3(FieldDescriptor::rationals()).unwrap();
    let rep3 = trivial_coefficient_torsion(&t3b).unwrap();
    println!("T^3: dims {:?} raw = {} (expect 1)", rep3.h_dims, rep3.raw);

    // ---- lens spaces ----
    for (pp, qq) in [(7u64, 1u64), (7, 2), (5, 1), (5, 2)] {
        let l = lens_space(pp, qq).unwrap();
        let r = trivial_coefficient_torsion(&l.fp_bundle).unwrap();
        println!("L({pp},{qq}): raw = {}, class = {:?}", r.raw, r.class.canonical);
    }
}
