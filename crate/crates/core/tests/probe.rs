// Development scratch probe; not part of the suite.
use wenolab::recon::{Family, ReconScheme};
use wenolab::spectral::{signature, signature_with_length, UpwindFv};

#[test]
#[ignore]
fn probe_delta_curves() {
    let scheme = |f, o| ReconScheme::with_defaults(f, o).unwrap();
    let a = signature(&UpwindFv::new(scheme(Family::CwenoZ, 5)), 32);
    let b = signature(&UpwindFv::new(scheme(Family::CwenoZ, 5)), 64);
    let c = signature(&UpwindFv::new(scheme(Family::CwenoZ, 5)), 128);
    println!("k/N32  delta(N=32)   delta(N=64)   delta(N=128)  rel32-64  rel64-128");
    for k in 1..=32usize {
        let da = a.delta[k - 1];
        let db = b.delta[2 * k - 1];
        let dc = c.delta[4 * k - 1];
        let r1 = (da - db).abs() / da.max(db);
        let r2 = (db - dc).abs() / db.max(dc);
        println!("{:5.3}  {:.6e}  {:.6e}  {:.6e}  {:.3}  {:.3}", k as f64 / 32.0, da, db, dc, r1, r2);
    }
    println!("T(32) = {:.6e}, T(64) = {:.6e}, T(128) = {:.6e}", a.temperature, b.temperature, c.temperature);
}

#[test]
#[ignore]
fn probe_temperature_table() {
    for length in [1.0, std::f64::consts::TAU] {
        println!("--- domain length {length}");
        println!("family  order  T(N=128)");
        for family in [Family::Weno, Family::Cweno, Family::CwenoZ] {
            for order in [3usize, 5, 7, 9] {
                let s = ReconScheme::with_defaults(family, order).unwrap();
                let sig = signature_with_length(&UpwindFv::new(s), 128, length);
                println!("{:?}  {}  {:.3e}", family, order, sig.temperature);
            }
        }
    }
}


#[test]
#[ignore]
fn probe_tk_curves() {
    let n = 128usize;
    let mk = |f, o| signature(&UpwindFv::new(ReconScheme::with_defaults(f, o).unwrap()), n);
    let z5 = mk(Family::CwenoZ, 5);
    let z7 = mk(Family::CwenoZ, 7);
    let z9 = mk(Family::CwenoZ, 9);
    let w9 = mk(Family::Weno, 9);
    println!("k  T_k(z5)      T_k(z7)      T_k(z9)      T_k(w9)     delta(z9)");
    for k in (4..=n).step_by(4) {
        println!(
            "{:3}  {:.3e}  {:.3e}  {:.3e}  {:.3e}  {:.3e}",
            k, z5.t_k[k - 1], z7.t_k[k - 1], z9.t_k[k - 1], w9.t_k[k - 1], z9.delta[k - 1]
        );
    }
}


#[test]
#[ignore]
fn probe_temperature_cutoffs() {
    let paper: [[f64; 4]; 3] = [
        [4.60e-5, 1.14e-6, 9.31e-8, 7.17e-9],
        [5.06e-5, 7.56e-7, 3.52e-8, 5.61e-9],
        [5.37e-5, 7.30e-8, 4.13e-9, 4.11e-10],
    ];
    let n = 128usize;
    for length in [1.0, std::f64::consts::TAU] {
        for cut_den in [2usize, 3, 4, 5, 6] {
            let j = n / cut_den;
            let mut worst: f64 = 0.0;
            let mut report = String::new();
            for (fi, family) in [Family::Weno, Family::Cweno, Family::CwenoZ].iter().enumerate() {
                for (oi, order) in [3usize, 5, 7, 9].iter().enumerate() {
                    let s = ReconScheme::with_defaults(*family, *order).unwrap();
                    let sig = signature_with_length(&UpwindFv::new(s), n, length);
                    let t = sig.t_j[j - 1];
                    let ratio = t / paper[fi][oi];
                    worst = worst.max(ratio.max(1.0 / ratio));
                    report.push_str(&format!("{:.2e}({:.1}) ", t, ratio));
                }
                report.push('\n');
            }
            println!("L={length:.3} cut=N/{cut_den} worst-ratio={worst:.1}\n{report}");
        }
    }
}


#[test]
#[ignore]
fn probe_cut_scan() {
    let paper: [[f64; 4]; 3] = [
        [4.60e-5, 1.14e-6, 9.31e-8, 7.17e-9],
        [5.06e-5, 7.56e-7, 3.52e-8, 5.61e-9],
        [5.37e-5, 7.30e-8, 4.13e-9, 4.11e-10],
    ];
    let n = 128usize;
    let mut sigs = Vec::new();
    for family in [Family::Weno, Family::Cweno, Family::CwenoZ] {
        for order in [3usize, 5, 7, 9] {
            let s = ReconScheme::with_defaults(family, order).unwrap();
            sigs.push(signature_with_length(&UpwindFv::new(s), n, std::f64::consts::TAU));
        }
    }
    for j in [12usize, 14, 16, 18, 20, 22, 24, 26] {
        let mut worst: f64 = 0.0;
        let mut vals = String::new();
        for (i, sig) in sigs.iter().enumerate() {
            let t = sig.t_j[j - 1];
            let r = t / paper[i / 4][i % 4];
            worst = worst.max(r.max(1.0 / r));
            vals.push_str(&format!("{:.1} ", r));
        }
        println!("j={j}: worst={worst:.1}  ratios: {vals}");
    }
}


fn sine_window(x0: f64, h: f64, r: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    (-(r as i64 - 1)..=(r as i64 - 1))
        .map(|j| {
            let lo = x0 + (j as f64 - 0.5) * h;
            ((PI * lo).cos() - (PI * (lo + h)).cos()) / (PI * h)
        })
        .collect()
}

#[test]
#[ignore]
fn probe_boundary_convergence() {
    use std::f64::consts::PI;
    for family in [Family::Weno, Family::Cweno, Family::CwenoZ] {
        for order in [3usize, 5, 7, 9] {
            let scheme = ReconScheme::with_defaults(family, order).unwrap();
            let r = scheme.r();
            print!("{:?} {}:", family, order);
            for m in [40usize, 80, 160, 320] {
                let h = 2.0 / m as f64;
                let mut worst = 0.0f64;
                for j in 0..m {
                    let x0 = -1.0 + (j as f64 + 0.5) * h;
                    let window = sine_window(x0, h, r);
                    let rec = scheme.reconstruct(&window, h);
                    let exact = (PI * (x0 + 0.5 * h)).sin();
                    worst = worst.max((rec.right - exact).abs());
                }
                print!("  {:.3e}", worst);
            }
            println!();
        }
    }
}

#[test]
#[ignore]
fn probe_critical_point() {
    use std::f64::consts::PI;
    // CWENOZ at the Prop-2 boundary eps rule, extremum of cos(pi x) at x=0
    for order in [3usize, 5] {
        let r = (order + 1) / 2;
        let theta = wenolab::recon::tau_truncation_order(r, wenolab::recon::TauVariant::Optimal).unwrap() as f64;
        let p = theta - (r as f64 - 1.0) / 2.0;
        let params = wenolab::recon::ReconParams {
            eps: wenolab::recon::EpsRule::new(1.0, p),
            ..Default::default()
        };
        let scheme = ReconScheme::new(Family::CwenoZ, order, params).unwrap();
        print!("cwenoz{} eps=h^{}:", order, p);
        for m in [41usize, 81, 161, 321, 641] {
            let h = 2.0 / m as f64;
            let mut worst = 0.0f64;
            // only cells near the extremum at x = 0 (center cell of odd grid)
            let jc = (m - 1) / 2;
            for j in jc.saturating_sub(2)..=(jc + 2).min(m - 1) {
                let x0 = -1.0 + (j as f64 + 0.5) * h;
                let window: Vec<f64> = (-(r as i64 - 1)..=(r as i64 - 1))
                    .map(|i| {
                        let lo = x0 + (i as f64 - 0.5) * h;
                        ((PI * (lo + h)).sin() - (PI * lo).sin()) / (PI * h)
                    })
                    .collect();
                let rec = scheme.reconstruct(&window, h);
                let exact = (PI * (x0 + 0.5 * h)).cos();
                worst = worst.max((rec.right - exact).abs());
            }
            print!("  {:.3e}", worst);
        }
        println!();
    }
}


#[test]
#[ignore]
fn probe_tau_decay() {
    use std::f64::consts::PI;
    use wenolab::recon::{jiang_shu_indicator, substencil_poly, IndicatorPath, TauVariant};
    // smooth non-symmetric data, max tau over a band of cells
    let u_avg = |lo: f64, h: f64| {
        // average of sin(pi x + 0.4) over [lo, lo+h]
        ((PI * lo + 0.4).cos() - (PI * (lo + h) + 0.4).cos()) / (PI * h)
    };
    for (r, variant) in [
        (2usize, TauVariant::Optimal),
        (3, TauVariant::Standard),
        (3, TauVariant::Optimal),
        (4, TauVariant::Standard),
        (4, TauVariant::Optimal),
        (5, TauVariant::Standard),
        (5, TauVariant::Optimal),
    ] {
        let theta = wenolab::recon::tau_truncation_order(r, variant).unwrap();
        print!("r={r} {:?} theta={theta}:", variant);
        let mut errs = Vec::new();
        for m in [10usize, 20, 40, 80] {
            let h = 2.0 / m as f64;
            let mut worst = 0.0f64;
            for j in 0..m {
                let x0 = -1.0 + (j as f64 + 0.5) * h;
                if !(0.05..0.45).contains(&x0) {
                    continue;
                }
                let mut indicators = Vec::new();
                for k in 1..=r {
                    let cells: Vec<f64> = (0..r)
                        .map(|i| {
                            let cell = (k as i64 - r as i64) + i as i64;
                            u_avg(x0 + (cell as f64 - 0.5) * h, h)
                        })
                        .collect();
                    let p = substencil_poly(&cells, k, r);
                    indicators.push(jiang_shu_indicator(&p, IndicatorPath::Bilinear));
                }
                worst = worst.max(wenolab::recon::tau::tau(&indicators, variant).unwrap());
            }
            errs.push(worst);
            print!("  {:.3e}", worst);
        }
        let slope = (errs[0] / errs[3]).log2() / 3.0;
        println!("  slope {:.2}", slope);
    }
}

#[test]
#[ignore]
fn probe_advection_convergence() {
    use wenolab::bench::{convergence, problem, SchemeConfig};
    let p = problem("advection-smooth17").unwrap();
    let dir = std::env::temp_dir();
    for (family, order, ms) in [
        (Family::Cweno, 3usize, vec![160usize, 320, 640, 1280]),
        (Family::CwenoZ, 3, vec![160, 320, 640, 1280]),
        (Family::Cweno, 5, vec![80, 160, 320, 640]),
        (Family::CwenoZ, 5, vec![80, 160, 320, 640]),
        (Family::Weno, 5, vec![80, 160, 320, 640]),
    ] {
        let cfg = SchemeConfig::new(family, order);
        let rows = convergence(p, &cfg, &ms, 0.45, &dir, false).unwrap();
        print!("{} :", cfg.label());
        for row in rows {
            print!("  M={} e={:.3e} rate={:?}", row.m, row.error, row.rate.map(|r| (r * 100.0).round() / 100.0));
        }
        println!();
    }
}

#[test]
#[ignore]
fn probe_weight_medians() {
    use wenolab::bench::{problem, weight_trace, SchemeConfig};
    let p = problem("advection-smooth17").unwrap();
    for family in [Family::Cweno, Family::CwenoZ] {
        let cfg = SchemeConfig::new(family, 5);
        let rows = weight_trace(p, &cfg, 400).unwrap();
        let mut smooth: Vec<f64> = rows
            .iter()
            .filter(|(x, _)| x.abs() > 0.5)
            .map(|(_, e)| e.abs())
            .collect();
        smooth.sort_by(|a, b| a.total_cmp(b));
        println!("{}: median |relerr| over |x|>0.5 = {:.3e}", cfg.label(), smooth[smooth.len() / 2]);
    }
}

#[test]
#[ignore]
fn probe_shock_runs() {
    use wenolab::bench::{problem, solve_problem, SchemeConfig};
    for (name, m) in [("euler-lax", 200usize), ("euler-shuosher", 400)] {
        let p = problem(name).unwrap();
        for order in [3usize, 5] {
            for family in [Family::Cweno, Family::CwenoZ] {
                let cfg = SchemeConfig::new(family, order);
                match solve_problem(p, &cfg, m, 0.45, None) {
                    Ok((field, log)) => {
                        let rho = field.interior(0);
                        let tv: f64 = rho.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
                        let min = rho.iter().fold(f64::INFINITY, |a, v| a.min(*v));
                        let max = rho.iter().fold(0.0f64, |a, v| a.max(*v));
                        println!(
                            "{name} {}{}: steps={} TV={:.4} rho in [{:.4}, {:.4}]",
                            cfg.label(), "", log.len(), tv, min, max
                        );
                    }
                    Err(e) => println!("{name} {} order {order}: BLEW UP: {e}", family.name()),
                }
            }
        }
    }
}


#[test]
#[ignore]
fn probe_advection_eps_h() {
    use wenolab::bench::{convergence, problem, SchemeConfig};
    use wenolab::recon::{EpsRule, ReconParams};
    let p = problem("advection-smooth17").unwrap();
    let dir = std::env::temp_dir();
    for eps_p in [1.0f64, 1.5] {
        println!("--- eps = h^{eps_p}");
        for (family, order, ms) in [
            (Family::Cweno, 3usize, vec![160usize, 320, 640, 1280]),
            (Family::CwenoZ, 3, vec![160, 320, 640, 1280]),
            (Family::Weno, 3, vec![160, 320, 640, 1280]),
            (Family::Cweno, 5, vec![80, 160, 320, 640]),
            (Family::CwenoZ, 5, vec![80, 160, 320, 640]),
            (Family::Weno, 5, vec![80, 160, 320, 640]),
        ] {
            let mut cfg = SchemeConfig::new(family, order);
            cfg.params = ReconParams {
                eps: EpsRule::new(1.0, eps_p),
                ..ReconParams::default()
            };
            let rows = convergence(p, &cfg, &ms, 0.45, &dir, false).unwrap();
            print!("{} :", cfg.label());
            for row in rows {
                print!("  M={} e={:.2e} r={}", row.m, row.error,
                       row.rate.map(|r| format!("{:.2}", r)).unwrap_or_default());
            }
            println!();
        }
    }
}


#[test]
#[ignore]
fn probe_advection_eps_h_fine() {
    use wenolab::bench::{convergence, problem, SchemeConfig};
    use wenolab::recon::{EpsRule, ReconParams};
    let p = problem("advection-smooth17").unwrap();
    let dir = std::env::temp_dir();
    for (family, order, ms) in [
        (Family::Weno, 3usize, vec![640usize, 1280, 2560]),
        (Family::Cweno, 3, vec![640, 1280, 2560]),
        (Family::Cweno, 5, vec![320, 640, 1280]),
        (Family::Weno, 5, vec![320, 640, 1280]),
        (Family::CwenoZ, 5, vec![320, 640, 1280]),
    ] {
        let mut cfg = SchemeConfig::new(family, order);
        cfg.params = ReconParams {
            eps: EpsRule::new(1.0, 1.0),
            ..ReconParams::default()
        };
        let rows = convergence(p, &cfg, &ms, 0.45, &dir, false).unwrap();
        print!("{} :", cfg.label());
        for row in rows {
            print!("  M={} e={:.2e} r={}", row.m, row.error,
                   row.rate.map(|r| format!("{:.2}", r)).unwrap_or_default());
        }
        println!();
    }
}


#[test]
#[ignore]
fn probe_advection_settle() {
    use wenolab::bench::{convergence, problem, SchemeConfig};
    use wenolab::recon::{EpsRule, ReconParams};
    let p = problem("advection-smooth17").unwrap();
    let dir = std::env::temp_dir();
    for (family, order, ms) in [
        (Family::Weno, 3usize, vec![1280usize, 2560, 5120]),
        (Family::Cweno, 3, vec![1280, 2560, 5120]),
        (Family::CwenoZ, 3, vec![1280, 2560, 5120]),
        (Family::Cweno, 5, vec![640, 1280, 2560]),
        (Family::Weno, 5, vec![640, 1280, 2560]),
        (Family::CwenoZ, 5, vec![640, 1280, 2560]),
    ] {
        let mut cfg = SchemeConfig::new(family, order);
        cfg.params = ReconParams {
            eps: EpsRule::new(1.0, 1.0),
            ..ReconParams::default()
        };
        let rows = convergence(p, &cfg, &ms, 0.45, &dir, false).unwrap();
        print!("{} :", cfg.label());
        for row in rows {
            print!("  M={} e={:.2e} r={}", row.m, row.error,
                   row.rate.map(|r| format!("{:.2}", r)).unwrap_or_default());
        }
        println!();
    }
}
