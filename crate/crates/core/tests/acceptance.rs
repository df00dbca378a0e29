//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use charclass::chow::{
    chern_dual, chern_tangent, class_dual, class_tensor, exceptional_tangent_correction, inv_unit, pullback,
    pushforward, Ambient, ChowClass, LineBundleClass,
};
use charclass::classes::{
    chern_cotangent, chi_complement, csm_hypersurface, csm_smooth_ci, euler, log_chern_dual,
    milnor_correction_isolated, multilog_chern_dual, nc_log_chern_dual, HypersurfaceSpec,
};
use charclass::milnor::{milnor_at, parse_points, total_milnor_affine, SingularityData, DEFAULT_MAX_CUTOFF};
use charclass::poly::{parse_poly, Poly, Rational};
use charclass::verify::{verify_cor13, verify_multilog, verify_thm12_identity_map, verify_thm12_point_blowup};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const SEED: u64 = 0x5eed_c1a5;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn p(n: usize) -> Ambient {
    Ambient::projective(n).unwrap()
}

/// Singularity data computed from `f`, with the per-chart completeness check:
/// every chart's total Milnor number must equal the listed points' sum.
fn fixture(text: &str, vars: &[&str], sing: &str) -> Result<(Poly, SingularityData), String> {
    let f = parse_poly(text, vars).map_err(|e| e.to_string())?;
    let points = parse_points(sing).map_err(|e| e.to_string())?;
    let data = SingularityData::compute(&f, &points, None, DEFAULT_MAX_CUTOFF).map_err(|e| e.to_string())?;
    for chart in 0..vars.len() {
        let local = f.dehomogenize(chart).map_err(|e| e.to_string())?;
        let total = total_milnor_affine(&local, DEFAULT_MAX_CUTOFF).map_err(|e| e.to_string())?;
        let listed: u64 =
            data.points().iter().filter(|p| !p.point[chart].is_zero()).map(|p| p.milnor.mu).sum();
        ensure(total == listed, || format!("{text}: chart {chart} has total {total}, listed {listed}"))?;
    }
    Ok((f, data))
}

fn spec_of(f: &Poly, data: SingularityData) -> Result<HypersurfaceSpec, String> {
    let n = f.nvars() - 1;
    let d = f.total_degree().unwrap() as i64;
    HypersurfaceSpec::of_degree(n, d, data).map_err(|e| e.to_string())
}

const NODAL_QUARTIC: &str = "w^2*(x^2 + y^2 + z^2) + x^4 + y^4 + z^4";
const NODAL_CUBIC: &str = "y^2*z - x^3 - x^2*z";
const CUSPIDAL_CUBIC: &str = "x^2*z - y^3";

fn blowup_identity() -> Check {
    for n in 2..=5 {
        let r = verify_thm12_point_blowup(n).map_err(|e| e.to_string())?;
        let pt = ChowClass::h_pow(p(n), n);
        ensure(r.equal && r.lhs == pt && r.rhs == pt, || format!("n={n}: {} vs {}", r.lhs, r.rhs))?;
    }
    Ok(())
}

fn nodal_quartic_identity_map() -> Check {
    let (f, data) = fixture(NODAL_QUARTIC, &["x", "y", "z", "w"], "0:0:0:1")?;
    ensure(data.total_milnor() == 1, || format!("mu = {}", data.total_milnor()))?;
    let spec = spec_of(&f, data.clone())?;
    let expected = ChowClass::from_h_coeffs(p(3), &[0, 4, 0, 23]);

    // Milnor-class form and logarithmic form, computed separately
    let general = csm_hypersurface(&spec).map_err(|e| e.to_string())?;
    let log_route = &(&chern_tangent(p(3)) - &log_chern_dual(&spec).map_err(|e| e.to_string())?)
        + &milnor_correction_isolated(&spec).map_err(|e| e.to_string())?;
    ensure(general == expected, || format!("CSM {general}"))?;
    ensure(log_route == expected, || format!("log route {log_route}"))?;
    let r = verify_thm12_identity_map(3, 4, data).map_err(|e| e.to_string())?;
    ensure(r.equal, || format!("{} vs {}", r.lhs, r.rhs))?;

    // 24 for the smooth quartic, minus one node
    let smooth = csm_smooth_ci(p(3), &[4]).map_err(|e| e.to_string())?;
    let chi = euler(&general).map_err(|e| e.to_string())?;
    ensure(euler(&smooth).unwrap() == 24 && chi == 23, || format!("chi {chi}"))
}

fn plane_cubics() -> Check {
    for (text, chi_expected, mu_expected) in [(NODAL_CUBIC, 1, 1), (CUSPIDAL_CUBIC, 2, 2)] {
        let (f, data) = fixture(text, &["x", "y", "z"], "0:0:1")?;
        ensure(data.total_milnor() == mu_expected, || format!("{text}: mu {}", data.total_milnor()))?;
        let csm = csm_hypersurface(&spec_of(&f, data)?).map_err(|e| e.to_string())?;
        let chi = euler(&csm).map_err(|e| e.to_string())?;
        // smooth cubic has chi 0; in P^2 each point adds (-1)^2 mu
        ensure(chi == chi_expected && chi == mu_expected as i64, || format!("{text}: chi {chi}"))?;
    }
    Ok(())
}

fn complement_two_routes() -> Check {
    for (text, vars, sing, expected) in [
        (NODAL_QUARTIC, &["x", "y", "z", "w"][..], "0:0:0:1", -19),
        (NODAL_CUBIC, &["x", "y", "z"][..], "0:0:1", 2),
    ] {
        let (f, data) = fixture(text, vars, sing)?;
        let n = vars.len() - 1;
        let mu = data.total_milnor() as i64;
        let spec = spec_of(&f, data.clone())?;
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let via_log = euler(&log_chern_dual(&spec).map_err(|e| e.to_string())?).unwrap() + sign * mu;
        let via_csm = (n as i64 + 1) - euler(&csm_hypersurface(&spec).map_err(|e| e.to_string())?).unwrap();
        let lib = chi_complement(&spec).map_err(|e| e.to_string())?;
        ensure(via_log == expected && via_csm == expected && lib == expected, || {
            format!("{text}: log {via_log}, additivity {via_csm}, library {lib}")
        })?;
        let r = verify_cor13(n, f.total_degree().unwrap() as i64, data).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("{text}: {} vs {}", r.lhs, r.rhs))?;
    }
    Ok(())
}

fn multilog_grid() -> Check {
    for n in 2..=4 {
        for d1 in 1..=3 {
            for d2 in 1..=3 {
                let r = verify_multilog(n, d1, d2).map_err(|e| e.to_string())?;
                ensure(r.equal, || format!("({n},{d1},{d2}): {} vs {}", r.lhs, r.rhs))?;
            }
        }
    }
    let r = verify_multilog(2, 1, 1).map_err(|e| e.to_string())?;
    let pt = ChowClass::h_pow(p(2), 2);
    ensure(r.lhs == pt && r.rhs == pt, || format!("(2,1,1): {} vs {}", r.lhs, r.rhs))
}

fn multilog_vs_residue() -> Check {
    for n in 2..=4 {
        let amb = p(n);
        let one = ChowClass::one(amb);
        for d1 in 1..=3 {
            for d2 in 1..=3 {
                let multilog = multilog_chern_dual(amb, d1, d2).map_err(|e| e.to_string())?;
                let residue = nc_log_chern_dual(amb, &[d1, d2]).map_err(|e| e.to_string())?;
                // residue sequence by hand: c(Ω¹) / ((1 - D1)(1 - D2)), dualized
                let denom = &(&one - &ChowClass::hyperplane_multiple(amb, d1))
                    * &(&one - &ChowClass::hyperplane_multiple(amb, d2));
                let by_hand = chern_dual(&(&chern_cotangent(amb) * &inv_unit(&denom).unwrap())).unwrap();
                ensure(multilog == residue && residue == by_hand, || {
                    format!("({n},{d1},{d2}): {multilog} / {residue} / {by_hand}")
                })?;
            }
        }
    }
    Ok(())
}

/// Random integer matrix of determinant +-1, as a product of elementary
/// operations and swaps.
fn unimodular(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..8 {
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        if i == j {
            m.swap(i, (i + 1) % k);
            continue;
        }
        let c = rng.gen_range(-2..=2);
        for col in 0..k {
            m[i][col] += c * m[j][col];
        }
    }
    m.into_iter().map(|row| row.into_iter().map(q).collect()).collect()
}

fn milnor_table() -> Check {
    let mut cases: Vec<(String, Vec<&str>, u64)> = vec![
        ("x^2 + y^2".into(), vec!["x", "y"], 1),
        ("x^2 - y^3".into(), vec!["x", "y"], 2),
        ("x^2 + y^5".into(), vec!["x", "y"], 4),
        ("x^3 + y^3".into(), vec!["x", "y"], 4),
        ("x^2 + y^2 + z^2".into(), vec!["x", "y", "z"], 1),
    ];
    for k in 1..=6 {
        cases.push((format!("x^2 + y^{}", k + 1), vec!["x", "y"], k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (text, vars, mu) in cases {
        let f = parse_poly(&text, &vars).map_err(|e| e.to_string())?;
        let r = milnor_at(&f, DEFAULT_MAX_CUTOFF).map_err(|e| e.to_string())?;
        ensure(r.certified && r.mu == mu, || format!("{text}: {r:?}"))?;
        let g = f.linear_substitute(&unimodular(&mut rng, vars.len())).map_err(|e| e.to_string())?;
        let rg = milnor_at(&g, DEFAULT_MAX_CUTOFF).map_err(|e| format!("{g}: {e}"))?;
        ensure(rg.certified && rg.mu == mu, || format!("{g}: {rg:?}"))?;
    }
    Ok(())
}

/// `deg(c(TP^n) * d h / (1 + d h))` as plain integer series.
fn smooth_euler_by_series(n: usize, d: i64) -> i64 {
    let binom = |a: usize, b: usize| -> i64 { (0..b).fold(1i64, |acc, i| acc * (a - i) as i64 / (i as i64 + 1)) };
    // coefficient of h^n: sum_{k} C(n+1, k) * d * (-d)^(n-1-k)
    (0..n).map(|k| binom(n + 1, k) * d * (-d).pow((n - 1 - k) as u32)).sum()
}

fn smooth_euler_grid() -> Check {
    for n in 2..=4 {
        for d in 1..=5 {
            let chi = euler(&csm_smooth_ci(p(n), &[d]).map_err(|e| e.to_string())?).unwrap();
            let series = smooth_euler_by_series(n, d);
            ensure(chi == series, || format!("(n,d)=({n},{d}): {chi} vs {series}"))?;
        }
    }
    for (n, degrees, chi) in [(2, vec![3], 0), (3, vec![2], 4), (3, vec![4], 24), (3, vec![2, 3], -6)] {
        let got = euler(&csm_smooth_ci(p(n), &degrees).map_err(|e| e.to_string())?).unwrap();
        ensure(got == chi, || format!("P{n} {degrees:?}: {got}, expected {chi}"))?;
    }
    Ok(())
}

fn random_class(rng: &mut ChaCha8Rng, amb: Ambient) -> ChowClass {
    let mut c = ChowClass::zero(amb);
    for k in 0..=amb.dim() {
        c = &c + &ChowClass::h_pow(amb, k).scale(&q(rng.gen_range(-5..=5)));
        for i in 0..amb.points() {
            if k > 0 {
                c = &c + &ChowClass::e_pow(amb, i, k).unwrap().scale(&q(rng.gen_range(-5..=5)));
            }
        }
    }
    c
}

fn random_divisor(rng: &mut ChaCha8Rng, amb: Ambient) -> ChowClass {
    let mut c = ChowClass::h_pow(amb, 1).scale(&q(rng.gen_range(-4..=4)));
    for i in 0..amb.points() {
        c = &c + &ChowClass::e_pow(amb, i, 1).unwrap().scale(&q(rng.gen_range(-3..=3)));
    }
    c
}

fn structural_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for n in 2..=5 {
        for m in 1..=3 {
            let bl = Ambient::blowup(n, m).unwrap();
            let base = p(n);
            for _ in 0..8 {
                let (a, b, c) = (random_class(&mut rng, bl), random_class(&mut rng, bl), random_class(&mut rng, bl));
                ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity on {bl}"))?;
                ensure(&a * &b == &b * &a, || format!("commutativity on {bl}"))?;
                ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity on {bl}"))?;
                ensure(&a * &ChowClass::one(bl) == a, || format!("unit on {bl}"))?;

                let x = random_class(&mut rng, base);
                let lhs = pushforward(&(&a * &pullback(&x, bl).unwrap())).unwrap();
                let rhs = &pushforward(&a).unwrap() * &x;
                ensure(lhs == rhs, || format!("projection formula on {bl}: {lhs} vs {rhs}"))?;
                ensure(pushforward(&a).unwrap().degree() == a.degree(), || format!("pushforward degree on {bl}"))?;

                ensure(class_dual(&class_dual(&a)) == a, || format!("dual involution on {bl}"))?;

                let (l, mm) = (random_divisor(&mut rng, bl), random_divisor(&mut rng, bl));
                let lb = LineBundleClass::new(l.clone()).unwrap();
                let mb = LineBundleClass::new(mm.clone()).unwrap();
                let lm = LineBundleClass::new(&l + &mm).unwrap();
                let twice = class_tensor(&class_tensor(&a, &lb).unwrap(), &mb).unwrap();
                ensure(twice == class_tensor(&a, &lm).unwrap(), || format!("tensor composition on {bl}"))?;
                let ldual = LineBundleClass::new(-&l).unwrap();
                ensure(class_tensor(&class_tensor(&a, &lb).unwrap(), &ldual).unwrap() == a, || {
                    format!("tensor inverse on {bl}")
                })?;
                ensure(
                    class_dual(&class_tensor(&a, &lb).unwrap()) == class_tensor(&class_dual(&a), &ldual).unwrap(),
                    || format!("dual of tensor on {bl}"),
                )?;
            }
            let top = chern_tangent(bl).degree();
            let chi = (n + 1 + m * (n - 1)) as i64;
            ensure(top == q(chi), || format!("deg c_n(T {bl}) = {top}, expected {chi}"))?;
        }
        let delta = exceptional_tangent_correction(n);
        ensure(delta.h_coeffs().iter().all(Zero::is_zero), || format!("correction for n={n} has h terms: {delta}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("blowup identity, n = 2..5", blowup_identity),
        ("nodal quartic identity map, CSM 4h + 23h^3", nodal_quartic_identity_map),
        ("plane cubics: nodal chi 1, cuspidal chi 2", plane_cubics),
        ("complement chi by two routes: -19 and 2", complement_two_routes),
        ("multi-logarithmic identity grid", multilog_grid),
        ("multilog route equals residue route", multilog_vs_residue),
        ("Milnor oracle table with coordinate changes", milnor_table),
        ("smooth hypersurface chi grid", smooth_euler_grid),
        ("structural property suites", structural_suites),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({} ms)", i + 1, t.elapsed().as_millis()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {} ms", criteria.len() - failed, criteria.len(), start.elapsed().as_millis());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
