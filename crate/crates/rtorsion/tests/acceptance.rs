//! Acceptance suite: one test per acceptance criterion, each printing a
//! PASS/FAIL line. Tolerances are pinned here, in code.
//!
//! Criteria 2 and 4 assert closed forms that the source text carries in its
//! opposite determinant-exponent convention (the same inversion the torsion
//! family of criterion 1 exhibits: -4/beta versus -beta/4). The computed
//! values are exactly the reciprocals of those closed forms; the two tests
//! assert the stated values and are expected to stay red, with the computed
//! reciprocal pinned in `convention_notes` below and in the companion
//! regression tests.

use num_complex::Complex64;
use rtorsion::catalog::*;
use rtorsion::cellular::{smith_and_integral_torsion, twisted_cochain_complex, Representation};
use rtorsion::chainkit::cohomology_bases;
use rtorsion::duality::{
    d_sharp_pairing, is_admissible, surface_pairing_matrix, BilinearFormSpec,
};
use rtorsion::matrix::SMat;
use rtorsion::refined::*;
use rtorsion::scalars::parse::parse_scalar;
use rtorsion::scalars::quotient::{canonical_class, units_normalize, CanonicalPayload, UnitSet};
use rtorsion::scalars::{FieldDescriptor, Scalar};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "[{}] criterion {criterion}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn q(n: i64) -> Scalar {
    Scalar::from_integer(FieldDescriptor::rationals(), n)
}

/// The (l, m, n) = (12, 6, 4) Seifert manifold with b_1 = 1 and the
/// case-(ii) eigenvalues alpha = z_6, beta = z_6^{-1}, gamma = i in Q(z_24).
fn seifert_case_ii() -> (SeifertSpec, Representation, BilinearFormSpec) {
    let spec = SeifertSpec::from_b1(1, 2, 2).unwrap();
    let sl2 = SL2SpectraSpec::roots(24, 4, -4, 6);
    let (rep, psi) = seifert_representation(&spec, &sl2).unwrap();
    (spec, rep, psi)
}

/// The paper's cocycle bases S and T for the Seifert case (ii).
fn seifert_s_t(rep: &Representation) -> (SMat, SMat) {
    let fd = rep.field;
    let e = SMat::identity(2, Scalar::zero(fd));
    let a = &rep.images[0];
    let b = &rep.images[1];
    let s_top = e.sub(&a.inverse().unwrap()).inverse().unwrap();
    let s_bot = e.sub(&b.inverse().unwrap()).inverse().unwrap().neg();
    let t_top = e.sub(b).inverse().unwrap().neg();
    let t_bot = e.sub(a).inverse().unwrap();
    let p = e.sub(a).det();
    let qd = e.sub(b).det();
    let r = p.inv().unwrap().add(&qd.inv().unwrap());
    let rinv = r.inv().unwrap();
    let s = SMat::vstack(&[&s_top, &s_bot], 2, Scalar::zero(fd));
    let t = SMat::vstack(&[&t_top, &t_bot], 2, Scalar::zero(fd)).scale(&rinv);
    (s, t)
}

#[test]
fn criterion_01_torus_bundle_torsion() {
    let beta = 2i64;
    let tb = TorusBundleSpec::new(-1, beta, 0, -1).unwrap();
    let p = tb.presentation();
    let w = tb.identity();
    let pt = &tb.variety_points(8).unwrap()[0];
    let rep = tb.adjoint_representation(pt).unwrap();
    let psi = BilinearFormSpec::standard(&rep);
    let r = dual_refined_torsion(&p, &w, &rep, psi, tb.orientation()).unwrap();
    let dims_ok = r.h_dims == vec![0, 1, 1, 0];
    let raw = parse_scalar(&r.raw, None).unwrap();
    let fd = rep.field;
    let minus_4_over_beta = Scalar::from_integer(fd, -4)
        .div(&Scalar::from_integer(fd, beta))
        .unwrap();
    let minus_beta_over_4 = Scalar::from_integer(fd, -beta)
        .div(&Scalar::from_integer(fd, 4))
        .unwrap();
    let member = if raw == minus_4_over_beta {
        Some("-4/beta")
    } else if raw == minus_beta_over_4 {
        Some("-beta/4")
    } else {
        None
    };
    report(
        "1",
        dims_ok && member.is_some(),
        &format!(
            "adjoint dims {:?}, raw = {} matches family member {:?}",
            r.h_dims, r.raw, member
        ),
    );
}

#[test]
fn criterion_02_sigma_torsion() {
    // |beta|/4 = 1/2 in C^x/{+-1}, exact, per the stated closed form.
    let beta = 2i64;
    let tb = TorusBundleSpec::new(-1, beta, 0, -1).unwrap();
    let p = tb.presentation();
    let w = tb.identity();
    let pt = &tb.variety_points(8).unwrap()[0];
    let rep = tb.adjoint_representation(pt).unwrap();
    let psi = BilinearFormSpec::standard(&rep);
    let sigma = tb.sigma_h2_class(&rep).unwrap();
    let r = sigma_torsion(&p, &w, &rep, psi, &sigma, tb.orientation()).unwrap();
    let raw = parse_scalar(&r.raw, None).unwrap();
    let fd = rep.field;
    let want = Scalar::from_integer(fd, beta.abs())
        .div(&Scalar::from_integer(fd, 4))
        .unwrap();
    let sign_units = UnitSet {
        sign: true,
        ..Default::default()
    };
    let same_class = units_normalize(&raw, &sign_units).unwrap()
        == units_normalize(&want, &sign_units).unwrap();
    report(
        "2",
        same_class,
        &format!(
            "sigma torsion raw = {} versus |beta|/4 = 1/2 in C^x/{{+-1}}",
            r.raw
        ),
    );
}

#[test]
fn criterion_03_non_admissibility() {
    let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
    let p = tb.presentation();
    let w = tb.identity();
    let pt = &tb.variety_points(8).unwrap()[0];
    let rep = tb.adjoint_representation(pt).unwrap();
    let psi = BilinearFormSpec::standard(&rep);
    let complex = twisted_cochain_complex(&p, &w, &rep).unwrap();
    let coh = cohomology_bases(&complex);
    let mut all_zero = true;
    for positive in [true, false] {
        let sp =
            surface_pairing_matrix(&p, &rep, &psi, &coh.h_reps[1], &tb.sigma_alpha(positive))
                .unwrap();
        all_zero &= sp.is_zero_matrix();
    }
    let adm = is_admissible(&p, &w, &rep, &psi, &tb.sigma_alpha(true)).unwrap();
    report(
        "3",
        all_zero && !adm,
        &format!("surface pairing vanishes identically = {all_zero}, is_admissible = {adm}"),
    );
}

#[test]
fn criterion_04_seifert_acyclic() {
    // (l, m, n) = (2, 2, 2) with alpha = beta = gamma = i: the closed form
    // -4 a b g / ((a-1)(b-1)(g-1))^2 equals 1/2 exactly.
    let spec = SeifertSpec::new(2, 2, 2).unwrap();
    let sl2 = SL2SpectraSpec::roots(4, 1, 1, 1);
    let (rep, psi) = seifert_representation(&spec, &sl2).unwrap();
    let p = spec.presentation();
    let w = spec.identity();
    let r = dual_refined_torsion(&p, &w, &rep, psi, spec.orientation()).unwrap();
    let acyclic = r.h_dims == vec![0, 0, 0, 0];
    let raw = parse_scalar(&r.raw, None).unwrap();
    let fd = rep.field;
    let i = Scalar::root_of_unity(4, 1);
    let one = Scalar::one(fd);
    let closed_form = {
        let num = Scalar::from_integer(fd, -4).mul(&i).mul(&i).mul(&i);
        let d = i.sub(&one);
        let den = d.mul(&d).pow(3).unwrap();
        num.div(&den).unwrap()
    };
    report(
        "4",
        acyclic && raw == closed_form,
        &format!(
            "acyclic = {acyclic}, raw = {} versus closed form {}",
            r.raw, closed_form
        ),
    );
}

#[test]
fn criterion_05_seifert_non_acyclic() {
    let (spec, rep, psi) = seifert_case_ii();
    let p = spec.presentation();
    let w = spec.identity();
    let (s, t) = seifert_s_t(&rep);
    // the duality pairing on the paper's S- and T-bases is exactly diag(1,1)
    let m = d_sharp_pairing(&p, &w, &rep, &psi, &s, &t, spec.orientation()).unwrap();
    let pairing_ok = m.eq(&SMat::identity(2, Scalar::zero(rep.field)));
    let r = dual_refined_torsion(&p, &w, &rep, psi, spec.orientation()).unwrap();
    let dims_ok = r.h_dims == vec![0, 2, 2, 0];
    let payload_ok = match r.class.canonical {
        CanonicalPayload::UnitCircle { re, im, .. } => {
            (re - 1.0).abs() < 1e-9 && im.abs() < 1e-9
        }
        _ => false,
    };
    report(
        "5",
        pairing_ok && dims_ok && payload_ok,
        &format!(
            "dims {:?}, S/T pairing identity = {pairing_ok}, unit-circle payload = 1 within 1e-9: {payload_ok}",
            r.h_dims
        ),
    );
}

#[test]
fn criterion_06_seifert_admissible_refinement() {
    let (spec, rep, psi) = seifert_case_ii();
    let p = spec.presentation();
    let w = spec.identity();
    let sigma = spec.sigma().unwrap();
    let (s, _) = seifert_s_t(&rep);
    // part 1: the surface pairing on the paper's basis has eigenvalues
    // +- i u^2 with u^2 = a b (a+b) k r^2 / (|1-al| |1-be| |1-ga|)
    let m = surface_pairing_matrix(&p, &rep, &psi, &s, &sigma).unwrap();
    let m00 = m[(0, 0)].embed().unwrap();
    let m01 = m[(0, 1)].embed().unwrap();
    let m10 = m[(1, 0)].embed().unwrap();
    let m11 = m[(1, 1)].embed().unwrap();
    let disc = ((m00 + m11) * (m00 + m11) - 4.0 * (m00 * m11 - m01 * m10)).sqrt();
    let e1 = ((m00 + m11) + disc) / 2.0;
    let e2 = ((m00 + m11) - disc) / 2.0;
    let u2 = 24.0 * 2f64.sqrt(); // a b (a+b) k r^2 / (1 * 1 * sqrt 2) = 48/sqrt(2)
    let eig_ok = ((e1 - Complex64::new(0.0, u2)).norm() < 1e-9
        && (e2 - Complex64::new(0.0, -u2)).norm() < 1e-9)
        || ((e2 - Complex64::new(0.0, u2)).norm() < 1e-9
            && (e1 - Complex64::new(0.0, -u2)).norm() < 1e-9);
    // part 2: the displayed closed form of the admissible torsion,
    // a^2 b^2 (a+b)^2 k^2 (|1-al|^2 + |1-be|^2)^4 /
    // (|1-al|^6 |1-be|^6 |1-ga|^2) * det R with det R = 1: here 1152.
    let at = admissible_torsion(&p, &w, &rep, &psi, &sigma, spec.orientation(), 1e-9).unwrap();
    let v = at.numeric.clone().unwrap();
    let displayed = 1152.0;
    let value_ok = (v.re - displayed).abs() < 1e-9 && v.im.abs() < 1e-9;
    report(
        "6",
        eig_ok && value_ok,
        &format!(
            "pairing eigenvalues ({e1}, {e2}) versus +-i*{u2}: {eig_ok}; admissible torsion = {} + {}i versus displayed 1152: {value_ok}",
            v.re, v.im
        ),
    );
}

#[test]
fn criterion_07_lens_spaces() {
    // class-of-q rule
    let mut ok = true;
    let mut detail = String::new();
    for (p, qq, residue) in [(7u64, 2u64, true), (5, 1, true), (5, 2, false)] {
        let l = lens_space(p, qq).unwrap();
        let r = trivial_coefficient_torsion(&l.fp_bundle).unwrap();
        let fd = FieldDescriptor::prime_field(p).unwrap();
        let want = canonical_class(
            &Scalar::from_integer(fd, qq as i64),
            &rtorsion::scalars::QuotientDescriptor::squares(fd),
        )
        .unwrap();
        let got_residue = matches!(r.class.canonical, CanonicalPayload::ResidueBit(true));
        ok &= r.class.same_class(&want) && got_residue == residue;
        detail.push_str(&format!("L({p},{qq}) class residue={got_residue}; "));
    }
    // L(5,1) and L(5,2) classes differ
    let l51 = trivial_coefficient_torsion(&lens_space(5, 1).unwrap().fp_bundle).unwrap();
    let l52 = trivial_coefficient_torsion(&lens_space(5, 2).unwrap().fp_bundle).unwrap();
    let differ = !l51.class.same_class(&l52.class);
    ok &= differ;
    // rational/integral pathway magnitude 1/p
    let l = lens_space(5, 2).unwrap();
    let smith = smith_and_integral_torsion(&l.integral);
    ok &= smith.magnitude == "1/5" && smith.sign == "+-";
    let rq = trivial_coefficient_torsion(&l.rational_bundle).unwrap();
    let raw = parse_scalar(&rq.raw, None).unwrap();
    let mag_ok = raw == q(1).div(&q(5)).unwrap() || raw == q(-1).div(&q(5)).unwrap();
    ok &= mag_ok;
    report(
        "7",
        ok,
        &format!("{detail}L(5,1)/L(5,2) differ = {differ}, integral magnitude = {}", smith.magnitude),
    );
}

#[test]
fn criterion_08_three_torus() {
    let mut ok = true;
    for fd in [
        FieldDescriptor::rationals(),
        FieldDescriptor::prime_field(5).unwrap(),
    ] {
        let b = t3(fd).unwrap();
        let r = trivial_coefficient_torsion(&b).unwrap();
        let raw = parse_scalar(&r.raw, Some(fd)).unwrap();
        ok &= raw.is_one();
    }
    report("8", ok, "trivial torsion of T^3 equals 1 exactly over Q and F_5");
}

#[test]
fn criterion_10_pr_products() {
    // half PR inverse of the refined torsion; full PR identically 1 --
    // on both the Seifert case (ii) and the torus bundle.
    let mut ok = true;
    let mut detail = String::new();
    {
        let (spec, rep, psi) = seifert_case_ii();
        let p = spec.presentation();
        let w = spec.identity();
        let bundle = bundle_from_identity(&p, &w, &rep, psi.clone(), spec.orientation()).unwrap();
        let (_, _, tau) = kk54_torsion(&bundle).unwrap();
        let one = Scalar::one(rep.field);
        let half = pr_half(&bundle, &one, &one).unwrap();
        let half_ok = half == tau.inv().unwrap();
        let full = pr_full(&p, &w, &rep, &psi, spec.orientation(), &tau, &tau).unwrap();
        let full_ok = full.is_one();
        ok &= half_ok && full_ok;
        detail.push_str(&format!("seifert half={half_ok} full={full_ok}; "));
    }
    {
        let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
        let p = tb.presentation();
        let w = tb.identity();
        let pt = &tb.variety_points(8).unwrap()[0];
        let rep = tb.adjoint_representation(pt).unwrap();
        let psi = BilinearFormSpec::standard(&rep);
        let bundle = bundle_from_identity(&p, &w, &rep, psi.clone(), tb.orientation()).unwrap();
        let (_, _, tau) = kk54_torsion(&bundle).unwrap();
        let one = Scalar::one(rep.field);
        let half = pr_half(&bundle, &one, &one).unwrap();
        let half_ok = half == tau.inv().unwrap();
        let full = pr_full(&p, &w, &rep, &psi, tb.orientation(), &tau, &tau).unwrap();
        let full_ok = full.is_one();
        ok &= half_ok && full_ok;
        detail.push_str(&format!("torus bundle half={half_ok} full={full_ok}"));
    }
    report("10", ok, &detail);
}

#[test]
fn criterion_11_quotient_canonical_forms() {
    use rtorsion::scalars::quotient::{payload_identity, QuotientDescriptor};
    let fd = FieldDescriptor::rational_functions(1).unwrap();
    let qd = QuotientDescriptor::norms(
        fd,
        UnitSet {
            monomials: true,
            ..Default::default()
        },
    );
    let mut ok = true;
    // (1-t)^2 has order 2
    let s = parse_scalar("(1 - t)^2", None).unwrap();
    let c = canonical_class(&s, &qd).unwrap();
    let order2 = match &c.canonical {
        CanonicalPayload::Laurent(l) => {
            l.z4 == 2 && l.symmetric.is_empty() && l.asymmetric.is_empty()
        }
        _ => false,
    };
    ok &= order2;
    // (t-1)(1+t^-1) has order 4
    let g = parse_scalar("(t - 1)(1 + t^-1)", None).unwrap();
    let cg = canonical_class(&g, &qd).unwrap();
    let order4 = match &cg.canonical {
        CanonicalPayload::Laurent(l) => l.z4 == 1 || l.z4 == 3,
        _ => false,
    };
    let g2 = canonical_class(&g.mul(&g), &qd).unwrap();
    let sq_is_minus_one = match &g2.canonical {
        CanonicalPayload::Laurent(l) => l.z4 == 2,
        _ => false,
    };
    ok &= order4 && sq_is_minus_one;
    // norms are trivial
    let f = parse_scalar("(3 t^2 - 5 t + 2)/(t + 7)", None).unwrap();
    let n = f.mul(&f.conjugate());
    let cn = canonical_class(&n, &qd).unwrap();
    ok &= cn.canonical == payload_identity(&qd);
    // monomial invariance
    let t5 = parse_scalar("t^5", None).unwrap();
    let cf = canonical_class(&f, &qd).unwrap();
    let cft = canonical_class(&f.mul(&t5), &qd).unwrap();
    ok &= cf.canonical == cft.canonical;
    report(
        "11",
        ok,
        "(1-t)^2 order 2, (t-1)(1+t^-1) order 4, norm classes trivial, t^k-invariance",
    );
}

#[test]
fn criterion_12_torus_bundle_volume() {
    let mut ok = true;
    let mut detail = String::new();
    for beta in [1i64, 2, 3] {
        let tb = TorusBundleSpec::new(-1, beta, 0, -1).unwrap();
        let p = tb.presentation();
        let w = tb.identity();
        let mut coeffs = vec![];
        for pt in &tb.variety_points(8).unwrap() {
            let rep = tb.adjoint_representation(pt).unwrap();
            let psi = BilinearFormSpec::standard(&rep);
            let r = dual_refined_torsion(&p, &w, &rep, psi, tb.orientation()).unwrap();
            let raw = parse_scalar(&r.raw, None).unwrap();
            coeffs.push(volume_form_coefficient(&raw).unwrap());
        }
        let vol = volume_from_coefficients(&coeffs);
        let want = 4.0 * (beta as f64).sqrt() * std::f64::consts::PI;
        ok &= (vol - want).abs() < 1e-6;
        detail.push_str(&format!("beta={beta}: {vol:.6} vs {want:.6}; "));
    }
    report("12", ok, &detail);
}

#[test]
fn criterion_13_trefoil_alexander() {
    let names: Vec<String> = vec!["x".into(), "y".into()];
    let r = rtorsion::foxcalc::parse_word("x y x y^-1 x^-1 y^-1", &names).unwrap();
    let p = rtorsion::foxcalc::Presentation::new(names, vec![r]).unwrap();
    let delta = alexander_polynomial(&p, &[vec![1], vec![1]]).unwrap();
    let want = parse_scalar("t^2 - t + 1", None).unwrap();
    report(
        "13",
        delta == want,
        &format!("trefoil Alexander polynomial = {delta} (up to units)"),
    );
}

/// The computed values behind the red criteria 2 and 4, pinned exactly:
/// the pipeline's determinant-exponent convention (fixed by the worked
/// 0 -> F -(3)-> F -> 0 example having torsion 3) produces the reciprocals
/// of the closed forms those two criteria quote.
#[test]
fn convention_notes_for_criteria_2_and_4() {
    // criterion 4 counterpart: computed acyclic torsion = 2 = (1/2)^{-1}
    let spec = SeifertSpec::new(2, 2, 2).unwrap();
    let sl2 = SL2SpectraSpec::roots(4, 1, 1, 1);
    let (rep, psi) = seifert_representation(&spec, &sl2).unwrap();
    let p = spec.presentation();
    let w = spec.identity();
    let r = dual_refined_torsion(&p, &w, &rep, psi, 1).unwrap();
    let raw = parse_scalar(&r.raw, None).unwrap();
    assert_eq!(raw, Scalar::from_integer(rep.field, 2));
    // criterion 2 counterpart: computed sigma torsion = -2 = -(|beta|/4)^{-1}
    let tb = TorusBundleSpec::new(-1, 2, 0, -1).unwrap();
    let ptb = tb.presentation();
    let wtb = tb.identity();
    let pt = &tb.variety_points(8).unwrap()[0];
    let rtb = tb.adjoint_representation(pt).unwrap();
    let psitb = BilinearFormSpec::standard(&rtb);
    let sigma = tb.sigma_h2_class(&rtb).unwrap();
    let sr = sigma_torsion(&ptb, &wtb, &rtb, psitb, &sigma, tb.orientation()).unwrap();
    let sraw = parse_scalar(&sr.raw, None).unwrap();
    assert_eq!(sraw, Scalar::from_integer(rtb.field, -2));
    println!("convention notes: acyclic = 2, sigma = -2 (reciprocal convention of the source)");
}
