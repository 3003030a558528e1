//! Acceptance run over the shared corpus. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use latpoly_core::formulas::{constant_term_todd, laurent_vertex_sums, vertex_laurent};
use latpoly_core::oracle::shoelace_area;
use latpoly_core::{
    char_series, choose_generic_zeta, count_lattice_points, decompose_chi, ehrhart,
    enumerate_points, evaluate_brion, evaluate_nu_cyclotomic, generic_directions,
    orientation_from_functional, pick_check, volume, EhrhartMode, Error, Rat, RatVector, Window,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corpus, Sample};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn(&[Sample]) -> Outcome);

fn random_point(rng: &mut ChaCha8Rng, dim: usize) -> RatVector {
    RatVector(
        (0..dim)
            .map(|_| {
                let mut num = 0i64;
                while num == 0 {
                    num = rng.gen_range(-9..=9);
                }
                Rat::new(num.into(), rng.gen_range(1..=7i64).into())
            })
            .collect(),
    )
}

fn brion(samples: &[Sample]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let start = Instant::now();
    for s in samples {
        let mut checked = 0;
        while checked < 5 {
            let t = random_point(&mut rng, s.polytope.dim());
            match evaluate_brion(&s.polytope, &t) {
                Ok(e) if e.holds() => checked += 1,
                Ok(e) => return Err(format!("{}: {} != {} at {:?}", s.name, e.lhs, e.rhs, t)),
                Err(Error::VanishingDenominator { .. }) => continue,
                Err(e) => return Err(format!("{}: {e}", s.name)),
            }
        }
    }
    within(start, Duration::from_secs(10))
}

fn counts(samples: &[Sample]) -> Outcome {
    let start = Instant::now();
    for s in samples {
        let truth = enumerate_points(&s.polytope)
            .map_err(|e| e.to_string())?
            .count;
        let dirs = generic_directions(&s.polytope, 3);
        if dirs.len() != 3 {
            return Err(format!("{}: fewer than three generic directions", s.name));
        }
        for z in &dirs {
            let c = count_lattice_points(&s.polytope, z).map_err(|e| e.to_string())?;
            if c != truth {
                return Err(format!("{}: count {c} != {truth} at {:?}", s.name, z.zeta));
            }
        }
    }
    within(start, Duration::from_secs(30))
}

fn volumes(samples: &[Sample]) -> Outcome {
    for s in samples {
        let p = &s.polytope;
        let v = volume(p, &choose_generic_zeta(p)).map_err(|e| e.to_string())?;
        if p.dim() == 2 {
            let area = shoelace_area(p).map_err(|e| e.to_string())?;
            if v != area {
                return Err(format!("{}: volume {v} != shoelace {area}", s.name));
            }
        }
        let e = ehrhart(p, p.dim() + 2, EhrhartMode::Oracle).map_err(|e| e.to_string())?;
        if *e.leading_coefficient() != v {
            return Err(format!(
                "{}: volume {v} != leading coefficient {}",
                s.name,
                e.leading_coefficient()
            ));
        }
    }
    Ok(())
}

fn ehrhart_counts(samples: &[Sample]) -> Outcome {
    for s in samples {
        let kmax = s.polytope.dim() + 2;
        let f = ehrhart(&s.polytope, kmax, EhrhartMode::Formula).map_err(|e| e.to_string())?;
        let o = ehrhart(&s.polytope, kmax, EhrhartMode::Oracle).map_err(|e| e.to_string())?;
        if f.counts != o.counts {
            return Err(format!("{}: {:?} != {:?}", s.name, f.counts, o.counts));
        }
        if f.polynomial != o.polynomial {
            return Err(format!("{}: polynomials differ", s.name));
        }
    }
    Ok(())
}

fn decompositions(samples: &[Sample]) -> Outcome {
    for s in samples.iter().filter(|s| s.polytope.dim() == 2) {
        let p = &s.polytope;
        let zeta = choose_generic_zeta(p);
        let o = orientation_from_functional(p, &zeta.zeta).map_err(|e| e.to_string())?;
        let window = Window::around(p, 3);
        let got = decompose_chi(p, &o, &window).map_err(|e| e.to_string())?;
        let points = enumerate_points(p).map_err(|e| e.to_string())?.points;
        if got != char_series(&points, &window) {
            return Err(format!(
                "{}: decomposition differs from the point set",
                s.name
            ));
        }
    }
    Ok(())
}

fn cyclotomic(samples: &[Sample]) -> Outcome {
    let mut cones = 0;
    for s in samples {
        let zeta = choose_generic_zeta(&s.polytope);
        let z: Vec<f64> = zeta.zeta.0.iter().map(to_f64).collect();
        for cone in s.polytope.vertex_cones().map_err(|e| e.to_string())? {
            if cone.is_basic() {
                continue;
            }
            cones += 1;
            let exact = latpoly_core::nu_of_cone(&cone);
            for s_val in [-1.0, -0.5, 0.5, 1.0] {
                let direct = exact.evaluate_along(&z, s_val);
                let c = evaluate_nu_cyclotomic(&cone, &zeta, s_val).map_err(|e| e.to_string())?;
                let rel = ((c.re - direct).powi(2) + c.im.powi(2)).sqrt() / direct.abs();
                if rel.is_nan() || rel > 1e-9 {
                    return Err(format!(
                        "{} vertex {}: s = {s_val}, {c} vs {direct} (rel {rel:e})",
                        s.name, cone.vertex
                    ));
                }
            }
        }
    }
    if cones < 3 {
        return Err(format!("only {cones} non-basic cones in the corpus"));
    }
    Ok(())
}

fn laurent(samples: &[Sample]) -> Outcome {
    for s in samples {
        let p = &s.polytope;
        let zeta = choose_generic_zeta(p);
        let sums = laurent_vertex_sums(p, &zeta).map_err(|e| e.to_string())?;
        let n = p.dim();
        // sums[0..n] are the coefficients of s^-n .. s^-1
        if let Some(i) = sums[..n].iter().position(|c| !c.is_zero()) {
            return Err(format!(
                "{}: s^{} sum is {}",
                s.name,
                i as isize - n as isize,
                sums[i]
            ));
        }
        let points = enumerate_points(p).map_err(|e| e.to_string())?.points;
        let count = Rat::from_integer(points.len().into());
        if sums[n] != count {
            return Err(format!("{}: s^0 sum {} != count {count}", s.name, sums[n]));
        }
        let first_moment = points
            .iter()
            .fold(Rat::zero(), |acc, m| acc + m.pair(&zeta.zeta));
        if sums[n + 1] != first_moment {
            return Err(format!(
                "{}: s^1 sum {} != {first_moment}",
                s.name,
                sums[n + 1]
            ));
        }
    }
    Ok(())
}

fn pick(samples: &[Sample]) -> Outcome {
    for s in samples.iter().filter(|s| s.polytope.dim() == 2) {
        let c = pick_check(&s.polytope).map_err(|e| e.to_string())?;
        if !c.holds {
            return Err(format!("{}: Pick fails", s.name));
        }
    }
    Ok(())
}

fn todd_routes(samples: &[Sample]) -> Outcome {
    for s in samples {
        let zeta = choose_generic_zeta(&s.polytope);
        for cone in s.polytope.vertex_cones().map_err(|e| e.to_string())? {
            let a = constant_term_todd(&cone, &zeta).map_err(|e| e.to_string())?;
            let b = vertex_laurent(&cone, &zeta, 1)
                .map_err(|e| e.to_string())?
                .coeff(0);
            if a != b {
                return Err(format!("{} vertex {}: {a} != {b}", s.name, cone.vertex));
            }
        }
    }
    Ok(())
}

fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    if took <= budget {
        Ok(())
    } else {
        Err(format!("took {took:?}, budget {budget:?}"))
    }
}

fn main() -> std::process::ExitCode {
    let samples = corpus();
    let criteria: [Criterion; 9] = [
        ("1 Brion identity at 5 random rational points", brion),
        ("2 lattice-point count under 3 generic directions", counts),
        (
            "3 volume vs shoelace and Ehrhart leading coefficient",
            volumes,
        ),
        ("4 Ehrhart counts, formula vs enumeration", ehrhart_counts),
        ("5 planar signed decomposition on bbox +- 3", decompositions),
        (
            "6 cyclotomic average vs direct evaluation (rel 1e-9)",
            cyclotomic,
        ),
        (
            "7 Laurent vertex sums: poles cancel, s^0 and s^1 match",
            laurent,
        ),
        ("8 Pick's formula", pick),
        ("9 Todd constant term vs series division", todd_routes),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run(&samples) {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: {} of {} criteria failed", failed.len(), criteria.len());
        std::process::ExitCode::FAILURE
    }
}
