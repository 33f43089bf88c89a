use num_traits::{One, Zero};

use super::grid::GridSpec;
use super::model::{SpectralModel, Standard};
use super::record::{CheckRecord, CheckReport, Tally};
use crate::arithmetic::{int, half, sign_power, ExtendedScalar, Radical, RadicalValue, Rational};
use crate::blocks::{block_sign, lemma_constants, t2_from_t1, LaplacianEigen, CasimirShift};
use crate::exec::Execution;
use crate::spectra::{
    ktype_exists, spectral_point, BundleParams, Direction, KTypeFamily, KTypeLabel, SpectralPoint,
};

fn finite(v: &crate::Result<ExtendedScalar>) -> Option<&Rational> {
    v.as_ref().ok().and_then(|x| x.exact())
}

/// Run `point` over every admitted label of `families`, job per bundle.
fn sweep<F>(
    suite: &'static str,
    grid: &GridSpec,
    exec: Execution,
    families: &[KTypeFamily],
    point: F,
) -> CheckReport
where
    F: Fn(&BundleParams, &KTypeLabel, &SpectralPoint, i64) -> Tally + Sync + Send,
{
    let records = exec.flat_map(grid.params(), |params| {
        let mut out = Vec::new();
        for &family in families {
            for jp in grid.jp.clone() {
                for j in grid.j.clone() {
                    let label = KTypeLabel::new(family, jp, j);
                    if !grid.admits(&params, &label) {
                        continue;
                    }
                    let pt = spectral_point(&params, jp, j).expect("nonnegative labels");
                    for r in grid.r.clone() {
                        let tally = point(&params, &label, &pt, r);
                        out.push(tally.finish(suite, &params, Some(family), Some((jp, j)), r));
                    }
                }
            }
        }
        out
    });
    CheckReport { suite, records }
}

/// Path independence around the diamonds and agreement of the gamma
/// formulas with the transition quantities, for all three families.
pub fn run_diamond_checks(grid: &GridSpec) -> CheckReport {
    run_diamond_checks_with(&Standard, grid, Execution::default())
}

pub fn run_diamond_checks_with(
    model: &dyn SpectralModel,
    grid: &GridSpec,
    exec: Execution,
) -> CheckReport {
    sweep("diamond", grid, exec, &KTypeFamily::ALL, |params, label, pt, r| {
        diamond_point(model, grid, params, label, pt, r)
    })
}

fn diamond_point(
    model: &dyn SpectralModel,
    grid: &GridSpec,
    params: &BundleParams,
    label: &KTypeLabel,
    pt: &SpectralPoint,
    r: i64,
) -> Tally {
    let m2 = label.family == KTypeFamily::M2;
    let transition = |pt: &SpectralPoint, r: i64, dir: Direction| {
        if m2 {
            model.m2_transition(pt, r, dir)
        } else {
            model.m1_transition(pt, r, dir)
        }
    };
    let value = |pt: &SpectralPoint, r: i64| {
        if m2 {
            model.m2_det(pt, r)
        } else {
            model.m1_eigenvalue(pt, r)
        }
    };
    let admitted = |l: &KTypeLabel| grid.admits(params, l);
    let mut t = Tally::default();

    let source = value(pt, r);
    let steps = Direction::ALL.map(|dir| transition(pt, r, dir));
    for (d, dir) in Direction::ALL.into_iter().enumerate() {
        if !admitted(&label.shifted(dir)) {
            continue;
        }
        let step = &steps[d];
        // gamma formula against the transition quantity
        match (finite(&source), step, value(&pt.shifted(dir), r)) {
            (Some(s), Ok(q), Ok(target)) if !s.is_zero() => {
                match ExtendedScalar::Finite(s.clone()).mul(q) {
                    Ok(expected) => t.check(&format!("value({}) = value * transition", dir.name()), &target, &expected),
                    Err(_) => t.skip(),
                }
            }
            _ => t.skip(),
        }
        // Bochner shift reproduces the multiplicity-1 transitions
        if !m2 {
            let nc = CasimirShift::m1_step(params, label, dir).expect("multiplicity-1 label");
            let half_nc = nc * half();
            match (ExtendedScalar::quotient(&half_nc + int(r), &half_nc - int(r)), step) {
                (Ok(lhs), Ok(rhs)) => t.check(&format!("(Nc/2+r)/(Nc/2-r) {}", dir.name()), &lhs, rhs),
                _ => t.skip(),
            }
        }
    }

    // path independence for every pair of arrows
    for (i, &d1) in Direction::ALL.iter().enumerate() {
        for (i2, &d2) in Direction::ALL.iter().enumerate().skip(i + 1) {
            let (l1, l2) = (label.shifted(d1), label.shifted(d2));
            if !(admitted(&l1) && admitted(&l2) && admitted(&l1.shifted(d2))) {
                continue;
            }
            let (there, back) = (transition(&pt.shifted(d1), r, d2), transition(&pt.shifted(d2), r, d1));
            let factors = [&steps[i], &there, &steps[i2], &back];
            match factors.into_iter().map(finite).collect::<Option<Vec<_>>>() {
                Some(f) => t.check(
                    &format!("path {} then {} = {} then {}", d1.name(), d2.name(), d2.name(), d1.name()),
                    &(f[0] * f[1]),
                    &(f[2] * f[3]),
                ),
                None => t.skip(),
            }
        }
    }

    // intertwinor and inverse intertwinor
    match (finite(&source), finite(&value(pt, -r))) {
        (Some(a), Some(b)) if !a.is_zero() && !b.is_zero() => {
            t.check("value(r) * value(-r) = 1", &(a * b), &Rational::one())
        }
        _ => t.skip(),
    }

    // normalized eigenvalues of the two multiplicity-1 families
    let other = KTypeLabel::new(KTypeFamily::M1D, label.jp, label.j);
    if label.family == KTypeFamily::M1Delta && admitted(&other) {
        let delta = model.theorem1_eigenvalue(KTypeFamily::M1Delta, params, pt, r);
        let d = model.theorem1_eigenvalue(KTypeFamily::M1D, params, pt, r);
        match (delta, d, finite(&model.cross_type_quotient(params, r))) {
            (Ok(RadicalValue::Finite(delta)), Ok(RadicalValue::Finite(d)), Some(q)) if !delta.is_zero() => {
                let ratio = d.div(&delta).expect("nonzero divisor");
                t.check("normalized m1-d / m1-delta = (s-r)/(s+r)", &ratio, &Radical::rational(q.clone()));
            }
            _ => t.skip(),
        }
    }
    t
}

/// The four projections of the intertwining relation between the
/// multiplicity-2 type V(j', j) and its multiplicity-1 neighbours.
pub fn run_interface_checks(grid: &GridSpec) -> CheckReport {
    run_interface_checks_with(&Standard, grid, Execution::default())
}

pub fn run_interface_checks_with(
    model: &dyn SpectralModel,
    grid: &GridSpec,
    exec: Execution,
) -> CheckReport {
    sweep("interface", grid, exec, &[KTypeFamily::M2], |params, label, pt, r| {
        interface_point(model, params, label, pt, r)
    })
}

/// 1 - c for the lemma ratio c = 1/(projection factor).
fn one_minus_inverse(factor: Option<Rational>) -> Option<Rational> {
    factor.filter(|f| !f.is_zero()).map(|f| Rational::one() - f.recip())
}

fn interface_point(
    model: &dyn SpectralModel,
    params: &BundleParams,
    label: &KTypeLabel,
    pt: &SpectralPoint,
    r: i64,
) -> Tally {
    let mut t = Tally::default();
    let (Ok(RadicalValue::Finite(t1)), n) = (model.t1_value(params, pt, r), 4) else {
        (0..4).for_each(|_| t.skip());
        return t;
    };
    let (Ok(block), Ok(t2)) = (model.interface_entries(params, pt, r, &t1), t2_from_t1(params, r, &t1)) else {
        (0..n).for_each(|_| t.skip());
        return t;
    };
    let e = &block.per_t1;
    let lap = LaplacianEigen::new(params, pt);
    let shifts = model.casimir_interface(params, label.jp, label.j);
    let (sigma, sigma2) = (block_sign(params), -block_sign(params));
    let rr = int(r);
    let (h1, h2) = (&shifts.n1 * half(), &shifts.n2 * half());
    let n1m = &h1 - &rr;
    let n1p = &h1 + &rr;
    let n2m = &h2 - &rr;
    let n2p = &h2 + &rr;

    // c1: w d δτ = c1 d w δτ for δτ ∈ E_{a-1,δ,j+1}; c2: w δ dζ = c2 δ w dζ for dζ ∈ E_{a,d,j+1}
    let u1 = one_minus_inverse(lemma_constants(params.q - 1, params.a - 1, label.j + 1).d_lower());
    let u2 = one_minus_inverse(lemma_constants(params.q - 1, params.a, label.j + 1).delta_lower());

    let times_t1 = |c: Rational| t1.scale(&c);
    match &u1 {
        Some(u1) => {
            let su = &sigma * u1;
            t.check(
                "(-1)^(k-a+1)(1-c1)A11 + (N1/2-r)A12 = (-1)^(k-a+1)(1-c1)t1",
                &times_t1(&su * &e.e11 + &n1m * &e.e12),
                &times_t1(su.clone()),
            );
            t.check(
                "(-1)^(k-a+1)(1-c1)A21 + (N1/2-r)A22 = (N1/2+r)t1",
                &times_t1(&su * &e.e21 + &n1m * &e.e22),
                &times_t1(n1p.clone()),
            );
        }
        None => {
            t.skip();
            t.skip();
        }
    }
    match &u2 {
        Some(u2) => {
            let su = &sigma2 * u2;
            let m1m2 = &lap.m1 * &lap.m2;
            if m1m2.is_zero() {
                t.skip();
            } else {
                t.check(
                    "(N2/2-r)A21/(m1 m2) + (-1)^(k-a)(1-c2)A22 = (-1)^(k-a)(1-c2)t2",
                    &times_t1(&n2m * &e.e21 / &m1m2 + &su * &e.e22),
                    &t2.scale(&su),
                );
            }
            t.check(
                "(N2/2-r)A11 + (-1)^(k-a)(1-c2)m1 m2 A12 = (N2/2+r)t2",
                &times_t1(&n2m * &e.e11 + &su * &m1m2 * &e.e12),
                &t2.scale(&n2p),
            );
        }
        None => {
            t.skip();
            t.skip();
        }
    }
    t
}

/// Determinant of the multiplicity-2 block: the displayed product with t1²,
/// the gamma formula, t1² itself, and constancy of det(D_{2r,k})/det A over
/// (j', j) for each bundle and r.
pub fn run_det_checks(grid: &GridSpec) -> CheckReport {
    run_det_checks_with(&Standard, grid, Execution::default())
}

pub fn run_det_checks_with(model: &dyn SpectralModel, grid: &GridSpec, exec: Execution) -> CheckReport {
    let suite = "det";
    let records = exec.flat_map(grid.params(), |params| {
        // (label, r, tally, det(D_{2r,k}) / det A or None)
        let mut rows: Vec<(KTypeLabel, i64, Tally, Option<Rational>)> = Vec::new();
        for jp in grid.jp.clone() {
            for j in grid.j.clone() {
                let label = KTypeLabel::new(KTypeFamily::M2, jp, j);
                if !grid.admits(&params, &label) {
                    continue;
                }
                let pt = spectral_point(&params, jp, j).expect("nonnegative labels");
                for r in grid.r.clone() {
                    let (tally, ratio) = det_point(model, &params, &pt, r);
                    rows.push((label, r, tally, ratio));
                }
            }
        }
        // reference ratio per r: first nondegenerate point in grid order
        let mut reference: Vec<(i64, Rational)> = Vec::new();
        for (_, r, _, ratio) in &rows {
            if let Some(x) = ratio {
                if !x.is_zero() && !reference.iter().any(|(rr, _)| rr == r) {
                    reference.push((*r, x.clone()));
                }
            }
        }
        rows.into_iter()
            .map(|(label, r, mut tally, ratio)| {
                let reference = reference.iter().find(|(rr, _)| *rr == r).map(|(_, x)| x);
                match (ratio, reference) {
                    (Some(x), Some(c)) => {
                        tally.check("det(D_2r,k)/det A = constant", &x, c);
                        tally.note(format!("constant={c}"));
                    }
                    _ => tally.skip(),
                }
                tally.finish(suite, &params, Some(KTypeFamily::M2), Some((label.jp, label.j)), r)
            })
            .collect::<Vec<CheckRecord>>()
    });
    CheckReport { suite, records }
}

fn det_point(
    model: &dyn SpectralModel,
    params: &BundleParams,
    pt: &SpectralPoint,
    r: i64,
) -> (Tally, Option<Rational>) {
    let mut t = Tally::default();
    let det_a = model.m2_det(pt, r);
    let t1 = model.t1_value(params, pt, r);
    match &t1 {
        Ok(RadicalValue::Finite(t1)) => match model.interface_entries(params, pt, r, t1) {
            Ok(block) => {
                let det = block.det();
                let rr = int(r);
                let (x, y, s) = (pt.sum(), pt.diff(), params.s());
                let displayed = (&x - &rr) / (&x + &rr) * (&y + &rr) / (&y - &rr) * (&s - &rr) / (&s + &rr)
                    * t1.square();
                t.check("det A = (X-r)/(X+r) (Y+r)/(Y-r) (s-r)/(s+r) t1^2", &det, &displayed);
                match finite(&det_a) {
                    Some(g) => t.check("det A = gamma formula", &det, g),
                    None => t.skip(),
                }
            }
            Err(_) => {
                t.skip();
                t.skip();
            }
        },
        _ => {
            t.skip();
            t.skip();
        }
    }
    match (finite(&model.t1_squared(params, pt, r)), &t1) {
        (Some(sq), Ok(RadicalValue::Finite(t1))) => t.check("t1_squared = t1^2", sq, &t1.square()),
        _ => t.skip(),
    }
    let ratio = if r >= 1 {
        match (finite(&det_a), model.d2rk_block(params, pt, r as u32)) {
            (Some(g), Ok(b)) if !g.is_zero() => Some(b.det() / g),
            (Some(_), Ok(b)) => {
                t.check("det(D_2r,k) vanishes with det A", &b.det(), &Rational::zero());
                None
            }
            _ => None,
        }
    } else {
        None
    };
    (t, ratio)
}

/// D_{2r,k}: reduction to D_{2,k} at r = 1, family ratio, proportionality
/// to the intertwinor, and the leading symbol for r ≤ 4.
pub fn run_d2rk_checks(grid: &GridSpec) -> CheckReport {
    run_d2rk_checks_with(&Standard, grid, Execution::default())
}

pub fn run_d2rk_checks_with(model: &dyn SpectralModel, grid: &GridSpec, exec: Execution) -> CheckReport {
    let positive = GridSpec { r: (*grid.r.start()).max(1)..=*grid.r.end(), ..grid.clone() };
    let mut report = sweep("d2rk", &positive, exec, &KTypeFamily::ALL, |params, label, pt, r| {
        d2rk_point(model, &positive, params, label, pt, r)
    });
    report.records.extend(leading_symbol_records(model, &positive, exec));
    report
}

fn pow4(r: u32) -> Rational {
    num_traits::pow(int(4), r as usize)
}

fn d2rk_point(
    model: &dyn SpectralModel,
    grid: &GridSpec,
    params: &BundleParams,
    label: &KTypeLabel,
    pt: &SpectralPoint,
    r: i64,
) -> Tally {
    let mut t = Tally::default();
    let ru = r as u32;
    let (s, rr) = (params.s(), int(r));
    if label.family == KTypeFamily::M2 {
        let Ok(block) = model.d2rk_block(params, pt, ru) else {
            t.skip();
            return t;
        };
        if r == 1 {
            t.check("D_2r,k(r=1) = -D_2,k", &block, &model.d2k_block(params, pt).neg());
        }
        match finite(&model.m2_det(pt, r)) {
            Some(g) => t.check(
                "det D_2r,k = 16^r (s^2-r^2) det A",
                &block.det(),
                &(pow4(2 * ru) * (&s * &s - &rr * &rr) * g),
            ),
            None => t.skip(),
        }
        return t;
    }
    let Ok(value) = model.d2rk_eigenvalue(label.family, params, pt, ru) else {
        t.skip();
        return t;
    };
    if r == 1 {
        match model.d2k_m1(label.family, params, pt) {
            Ok(d2k) => t.check("D_2r,k(r=1) = -D_2,k", &value, &-d2k),
            Err(_) => t.skip(),
        }
    }
    let prefactor = if label.family == KTypeFamily::M1Delta { &s + &rr } else { &s - &rr };
    match finite(&model.m1_eigenvalue(pt, r)) {
        Some(m1) => t.check("D_2r,k = (s+-r) 4^r m1_eigenvalue", &value, &(prefactor * pow4(ru) * m1)),
        None => t.skip(),
    }
    let other = KTypeLabel::new(KTypeFamily::M1D, label.jp, label.j);
    if label.family == KTypeFamily::M1Delta && grid.admits(params, &other) {
        match model.d2rk_eigenvalue(KTypeFamily::M1D, params, pt, ru) {
            Ok(d) if !d.is_zero() && !(&s - &rr).is_zero() => {
                t.check("D_2r,k delta / d = (s+r)/(s-r)", &(&value / &d), &((&s + &rr) / (&s - &rr)))
            }
            _ => t.skip(),
        }
    }
    t
}

fn leading_symbol_records(model: &dyn SpectralModel, grid: &GridSpec, exec: Execution) -> Vec<CheckRecord> {
    let rs: Vec<i64> = grid.r.clone().filter(|r| (1..=4).contains(r)).collect();
    exec.flat_map(grid.params(), |params| {
        rs.iter()
            .map(|&r| {
                let mut t = Tally::default();
                let sign = sign_power(r);
                let mut constants: Vec<Rational> = Vec::new();
                for family in KTypeFamily::M1 {
                    let Ok((op, sym)) = model.leading_symbol_polynomials(family, &params, r as u32) else {
                        t.skip();
                        continue;
                    };
                    if op.is_zero() && sym.is_zero() {
                        t.skip();
                        continue;
                    }
                    let top_sym = sym.leading_part().scale(&sign);
                    let top_op = op.leading_part();
                    t.check_that(
                        &format!("deg P_op = 2r ({family})"),
                        op.total_degree() == Some(2 * r as u32),
                        format!("{:?}", op.total_degree()),
                        2 * r,
                    );
                    match top_op.ratio_to(&top_sym) {
                        Some(c) => constants.push(c),
                        None => t.check_that(
                            &format!("top(P_op) proportional to (-1)^r top(P_sym) ({family})"),
                            false,
                            &top_op,
                            &top_sym,
                        ),
                    }
                }
                if let Some(c0) = constants.first() {
                    for c in &constants {
                        t.check("one global constant per (params, r)", c, c0);
                    }
                    t.note(format!("constant={c0}"));
                }
                t.finish("d2rk", &params, None, None, r)
            })
            .collect()
    })
}

/// Functions (k = 0): only the δ-family survives, D_{2,0} matches the
/// curvature formula, and D_{2r,0} is a multiple of the intertwinor.
pub fn run_scalar_reduction(grid: &GridSpec) -> CheckReport {
    run_scalar_reduction_with(&Standard, grid, Execution::default())
}

pub fn run_scalar_reduction_with(
    model: &dyn SpectralModel,
    grid: &GridSpec,
    exec: Execution,
) -> CheckReport {
    let suite = "scalar-reduction";
    let params: Vec<BundleParams> = grid.params().into_iter().filter(|b| b.k == 0).collect();
    let records = exec.flat_map(params, |params| {
        let mut out = Vec::new();
        for jp in grid.jp.clone() {
            for j in grid.j.clone() {
                let label = KTypeLabel::new(KTypeFamily::M1Delta, jp, j);
                let exists = ktype_exists(&params, &label);
                if grid.skip_nonexistent && !exists {
                    continue;
                }
                let pt = spectral_point(&params, jp, j).expect("nonnegative labels");
                for r in grid.r.clone() {
                    let t = scalar_point(model, &params, jp, j, &pt, r, exists);
                    out.push(t.finish(suite, &params, Some(KTypeFamily::M1Delta), Some((jp, j)), r));
                }
            }
        }
        out
    });
    CheckReport { suite, records }
}

fn scalar_point(
    model: &dyn SpectralModel,
    params: &BundleParams,
    jp: i64,
    j: i64,
    pt: &SpectralPoint,
    r: i64,
    exists: bool,
) -> Tally {
    let mut t = Tally::default();
    for family in [KTypeFamily::M1D, KTypeFamily::M2] {
        let there = ktype_exists(params, &KTypeLabel::new(family, jp, j));
        t.check_that(&format!("{family} empty on functions"), !there, there, false);
    }
    if !exists {
        return t;
    }
    // Laplacian eigenvalues j'(j'+p-2), j(j+q-2) of the factor spheres
    let lap0 = int(jp * (jp + params.p - 2));
    let lap1 = int(j * (j + params.q - 2));
    let hp = int(params.p - 2) * half();
    let hq = int(params.q - 2) * half();
    t.check("J'^2 - ((p-2)/2)^2 = j'(j'+p-2)", &(&pt.jp * &pt.jp - &hp * &hp), &lap0);
    t.check("J^2 - ((q-2)/2)^2 = j(j+q-2)", &(&pt.j * &pt.j - &hq * &hq), &lap1);
    // D_{2,0} = (s+1)(δd + (s-1)R~), R~ = (q-p)/2, δd = Δ_q - Δ_p
    let s = params.s();
    let curvature = (&s + int(1)) * (&lap1 - &lap0 + (&s - int(1)) * int(params.q - params.p) * half());
    match model.d2k_m1(KTypeFamily::M1Delta, params, pt) {
        Ok(v) => t.check("D_2,0 = (s+1)(delta d + (s-1) R~)", &v, &curvature),
        Err(_) => t.skip(),
    }
    let m1 = model.m1_eigenvalue(pt, r);
    if r >= 1 {
        match (model.d2rk_eigenvalue(KTypeFamily::M1Delta, params, pt, r as u32), finite(&m1)) {
            (Ok(v), Some(m)) => t.check("D_2r,0 = (s+r) 4^r m1_eigenvalue", &v, &((&s + int(r)) * pow4(r as u32) * m)),
            _ => t.skip(),
        }
    }
    match (model.theorem1_eigenvalue(KTypeFamily::M1Delta, params, pt, r), finite(&m1)) {
        (Ok(RadicalValue::Finite(v)), Some(m)) => t.check(
            "normalized eigenvalue^2 = (s+r)/(s-r) m1_eigenvalue^2",
            &v.square(),
            &((&s + int(r)) / (&s - int(r)) * m * m),
        ),
        _ => t.skip(),
    }
    t
}
