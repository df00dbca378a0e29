//! End-to-end checks against classical values.

use charclass::chow::{eval_chow_expr, Ambient, ChowClass};
use charclass::classes::{chi_complement, csm_hypersurface, csm_nc_union, csm_smooth_ci, euler, HypersurfaceSpec};
use charclass::milnor::{local_equation, parse_points, total_milnor_affine, SingularityData};
use charclass::poly::parse_poly;

fn p(n: usize) -> Ambient {
    Ambient::projective(n).unwrap()
}

fn hypersurface(text: &str, vars: &[&str], sing: &str) -> HypersurfaceSpec {
    let f = parse_poly(text, vars).unwrap();
    let points = parse_points(sing).unwrap();
    let data = SingularityData::compute(&f, &points, None, 32).unwrap();
    for chart in 0..vars.len() {
        let total = total_milnor_affine(&f.dehomogenize(chart).unwrap(), 32).unwrap();
        let listed: u64 = data
            .points()
            .iter()
            .filter(|pt| !num_traits::Zero::is_zero(&pt.point[chart]))
            .map(|pt| pt.milnor.mu)
            .sum();
        assert_eq!(total, listed, "{text}: chart {chart}");
    }
    HypersurfaceSpec::of_degree(vars.len() - 1, f.total_degree().unwrap() as i64, data).unwrap()
}

#[test]
fn cayley_cubic_surface() {
    // four A1 points; contracting four (-2)-curves of a smooth cubic (chi 9)
    // removes 4 * (2 - 1)
    let spec = hypersurface(
        "x*y*z + x*y*w + x*z*w + y*z*w",
        &["x", "y", "z", "w"],
        "1:0:0:0;0:1:0:0;0:0:1:0;0:0:0:1",
    );
    assert_eq!(spec.singularities().total_milnor(), 4);
    let csm = csm_hypersurface(&spec).unwrap();
    assert_eq!(euler(&csm).unwrap(), 5);
    assert_eq!(chi_complement(&spec).unwrap(), 4 - 5);
}

#[test]
fn plane_quartic_with_tacnode() {
    // y^2 = x^4 locally, an A3 point of delta 2: the normalization is an
    // elliptic curve (chi 0) with two points over the tacnode, so chi = -1
    let spec = hypersurface("y^2*z^2 - x^4 - y^4", &["x", "y", "z"], "0:0:1");
    assert_eq!(spec.singularities().total_milnor(), 3);
    assert_eq!(euler(&csm_hypersurface(&spec).unwrap()).unwrap(), -4 + 3);
}

#[test]
fn three_concurrent_lines() {
    // x*y*(x-y) has a D4 point at 0:0:1; three lines through a point have
    // chi 3*2 - 2 = 4
    let spec = hypersurface("x*y*(x - y)", &["x", "y", "z"], "0:0:1");
    assert_eq!(spec.singularities().total_milnor(), 4);
    assert_eq!(euler(&csm_hypersurface(&spec).unwrap()).unwrap(), 4);
}

#[test]
fn local_equation_in_chosen_chart() {
    let f = parse_poly("x^2*z - y^3", &["x", "y", "z"]).unwrap();
    let pt = parse_points("0:0:5").unwrap();
    let g = local_equation(&f, &pt[0], 2).unwrap();
    assert_eq!(g, parse_poly("x^2 - y^3", g.vars()).unwrap());
}

#[test]
fn normal_crossing_unions() {
    // two lines in P^2: a wedge of two spheres, chi 3
    let two_lines = csm_nc_union(p(2), &[1, 1]).unwrap();
    assert_eq!(two_lines, eval_chow_expr("2*h + 3*h^2", p(2)).unwrap());
    // two planes in P^3 meeting in a line: 3 + 3 - 2
    let two_planes = csm_nc_union(p(3), &[1, 1]).unwrap();
    assert_eq!(two_planes, eval_chow_expr("2*h + 5*h^2 + 4*h^3", p(3)).unwrap());
    // conic plus a transversal line: 2 + 2 - 2
    assert_eq!(euler(&csm_nc_union(p(2), &[2, 1]).unwrap()).unwrap(), 2);
}

#[test]
fn smooth_complete_intersections() {
    // genus 4 canonical curve
    assert_eq!(euler(&csm_smooth_ci(p(3), &[2, 3]).unwrap()).unwrap(), -6);
    // elliptic quartic curve
    assert_eq!(euler(&csm_smooth_ci(p(3), &[2, 2]).unwrap()).unwrap(), 0);
    // K3 and the quintic threefold
    assert_eq!(euler(&csm_smooth_ci(p(3), &[4]).unwrap()).unwrap(), 24);
    assert_eq!(euler(&csm_smooth_ci(p(4), &[5]).unwrap()).unwrap(), -200);
}

#[test]
fn exceptional_divisor_is_projective_space() {
    for n in 2..=5 {
        let bl = Ambient::blowup(n, 1).unwrap();
        let e = ChowClass::e_pow(bl, 0, 1).unwrap();
        let spec = HypersurfaceSpec::new(e, SingularityData::empty()).unwrap();
        assert_eq!(euler(&csm_hypersurface(&spec).unwrap()).unwrap(), n as i64);
        // complement of E is P^n minus a point
        assert_eq!(chi_complement(&spec).unwrap(), n as i64);
    }
}
