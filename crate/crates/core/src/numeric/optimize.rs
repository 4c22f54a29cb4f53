use crate::error::{Error, Result};
use crate::numeric::{OptimResult, Tolerance};

const GOLDEN: f64 = 0.381_966_011_250_105_1;

/// Maximizes `f` over `[lo, hi]` with Brent's safeguarded golden-section /
/// parabolic search.
///
/// Every probed value must be finite. The returned argmax is never worse than
/// either bracket end.
pub fn maximize_scalar<F>(mut f: F, lo: f64, hi: f64, tol: &Tolerance) -> Result<OptimResult>
where
    F: FnMut(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::Domain {
            what: "maximize_scalar needs a nondegenerate finite bracket",
            value: hi - lo,
        });
    }
    let mut eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(-v)
        } else {
            Err(Error::Evaluation { at: vec![x] })
        }
    };

    let (mut a, mut b) = (lo, hi);
    let mut x = a + GOLDEN * (b - a);
    let (mut w, mut v) = (x, x);
    let mut fx = eval(x)?;
    let (mut fw, mut fv) = (fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < tol.max_iter {
        iterations += 1;
        let xm = 0.5 * (a + b);
        let tol1 = f64::EPSILON.sqrt() * x.abs() + tol.abs_x / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            converged = true;
            break;
        }
        let mut golden = true;
        if e.abs() > tol1 {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let etemp = e;
            e = d;
            if p.abs() < (0.5 * q * etemp).abs() && p > q * (a - x) && p < q * (b - x) {
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 {
            x + d
        } else {
            x + tol1.copysign(d)
        };
        let fu = eval(u)?;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }

    let mut best = (x, -fx);
    for end in [lo, hi] {
        let fe = -eval(end)?;
        if fe > best.1 {
            best = (end, fe);
        }
    }
    Ok(OptimResult {
        argmax: vec![best.0],
        value: best.1,
        converged,
        iterations,
        gradient_norm: 0.0,
    })
}

/// Local maximization started at an interior point.
///
/// Walks uphill from `x0` in steps that grow geometrically (on the log scale
/// when `log_scale` is set, so the walk stays positive) until the objective
/// drops, then refines the three-point bracket with [`maximize_scalar`].
/// A value of `-inf` marks an inadmissible point; running into one before the
/// objective turns down means there is no interior maximum on that side.
pub fn maximize_local<F>(
    mut f: F,
    x0: f64,
    initial_step: f64,
    log_scale: bool,
    tol: &Tolerance,
) -> Result<OptimResult>
where
    F: FnMut(f64) -> f64,
{
    let to_x = |u: f64| if log_scale { u.exp() } else { u };
    let mut g = |u: f64| f(to_x(u));
    let u0 = if log_scale { x0.ln() } else { x0 };
    let g0 = g(u0);
    if !g0.is_finite() {
        return Err(Error::Evaluation { at: vec![x0] });
    }
    let mut h = initial_step;
    let mut gp = g(u0 + h);
    let mut gm = g(u0 - h);
    // keep the first probes inside the admissible region
    for _ in 0..40 {
        if gp != f64::NEG_INFINITY && gm != f64::NEG_INFINITY {
            break;
        }
        h *= 0.25;
        gp = g(u0 + h);
        gm = g(u0 - h);
    }
    if gp == f64::NEG_INFINITY || gm == f64::NEG_INFINITY {
        return Err(Error::Evaluation { at: vec![x0] });
    }
    if gp.is_nan() || gm.is_nan() || gp == f64::INFINITY || gm == f64::INFINITY {
        return Err(Error::Evaluation { at: vec![x0] });
    }
    let (lo, hi) = if gp <= g0 && gm <= g0 {
        (u0 - h, u0 + h)
    } else {
        let dir = if gp > gm { 1.0 } else { -1.0 };
        let mut prev = u0;
        let mut cur = u0 + dir * h;
        let mut g_cur = gp.max(gm);
        let mut step = h;
        let mut found = None;
        for _ in 0..tol.max_iter {
            step *= 1.618_033_988_749_895;
            let next = cur + dir * step;
            let g_next = g(next);
            if g_next.is_nan() || g_next == f64::INFINITY {
                return Err(Error::Evaluation { at: vec![to_x(next)] });
            }
            if g_next == f64::NEG_INFINITY {
                // ran into the inadmissible region while still climbing
                return Err(Error::Convergence {
                    iterations: 0,
                    best: vec![to_x(cur)],
                });
            }
            if g_next < g_cur {
                found = Some(if dir > 0.0 { (prev, next) } else { (next, prev) });
                break;
            }
            prev = cur;
            cur = next;
            g_cur = g_next;
        }
        found.ok_or(Error::Convergence {
            iterations: tol.max_iter,
            best: vec![to_x(cur)],
        })?
    };
    let inner_tol = Tolerance {
        abs_x: if log_scale {
            tol.abs_x / x0.abs().max(1e-300)
        } else {
            tol.abs_x
        },
        ..*tol
    };
    let mut res = maximize_scalar(&mut g, lo, hi, &inner_tol)?;
    res.argmax[0] = to_x(res.argmax[0]);
    Ok(res)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// BFGS maximization with an analytic gradient.
///
/// Steps use a strong-Wolfe line search followed by one secant step on the
/// directional derivative, so the objective never decreases between accepted
/// iterates and quadratics are solved in at most dim + 1 iterations.
/// Convergence means the gradient norm fell below
/// [`Tolerance::gradient_threshold`].
pub fn maximize_quasi_newton<F, G>(
    mut f: F,
    mut grad: G,
    x0: &[f64],
    tol: &Tolerance,
) -> Result<OptimResult>
where
    F: FnMut(&[f64]) -> f64,
    G: FnMut(&[f64]) -> Vec<f64>,
{
    let dim = x0.len();
    let threshold = tol.gradient_threshold();
    // minimize phi = -f
    let mut x = x0.to_vec();
    let mut phi = -f(&x);
    let mut g: Vec<f64> = grad(&x).into_iter().map(|v| -v).collect();
    if !phi.is_finite() || g.iter().any(|v| !v.is_finite()) {
        return Err(Error::Evaluation { at: x });
    }
    let mut h = identity(dim);
    let mut iterations = 0;

    loop {
        let gnorm = norm(&g);
        if gnorm <= threshold {
            return Ok(OptimResult {
                argmax: x,
                value: -phi,
                converged: true,
                iterations,
                gradient_norm: gnorm,
            });
        }
        if iterations >= tol.max_iter {
            return Err(Error::Convergence {
                iterations,
                best: x,
            });
        }
        iterations += 1;

        let mut p: Vec<f64> = h.iter().map(|row| -dot(row, &g)).collect();
        let mut slope = dot(&p, &g);
        if slope >= 0.0 {
            h = identity(dim);
            p = g.iter().map(|v| -v).collect();
            slope = -gnorm * gnorm;
        }

        let Some((t, phi_new, g_new)) = line_search(&mut f, &mut grad, &x, phi, &p, slope)
            .map(|acc| secant_refine(&mut f, &mut grad, &x, &p, slope, acc))
        else {
            return Ok(OptimResult {
                argmax: x,
                value: -phi,
                converged: gnorm <= threshold,
                iterations,
                gradient_norm: gnorm,
            });
        };
        let s: Vec<f64> = p.iter().map(|v| t * v).collect();
        let x_new: Vec<f64> = x.iter().zip(&s).map(|(a, b)| a + b).collect();
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * norm(&s) * norm(&y) {
            if iterations == 1 {
                let scale = sy / dot(&y, &y);
                h = identity(dim)
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v * scale).collect())
                    .collect();
            }
            bfgs_update(&mut h, &s, &y, sy);
        }

        let small_step = norm(&s) <= tol.abs_x;
        let small_change = (phi - phi_new).abs() <= tol.rel_f * phi_new.abs().max(1.0);
        x = x_new;
        phi = phi_new;
        g = g_new;
        if small_step && small_change {
            let gnorm = norm(&g);
            return Ok(OptimResult {
                argmax: x,
                value: -phi,
                converged: gnorm <= threshold,
                iterations,
                gradient_norm: gnorm,
            });
        }
    }
}

fn identity(dim: usize) -> Vec<Vec<f64>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

// H <- (I - ρ s yᵀ) H (I - ρ y sᵀ) + ρ s sᵀ
fn bfgs_update(h: &mut [Vec<f64>], s: &[f64], y: &[f64], sy: f64) {
    let rho = 1.0 / sy;
    let dim = s.len();
    let hy: Vec<f64> = h.iter().map(|row| dot(row, y)).collect();
    let yhy = dot(y, &hy);
    for i in 0..dim {
        for j in 0..dim {
            h[i][j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
        }
    }
}

/// One secant step on the directional derivative between 0 and the accepted
/// step; exact for quadratics. Kept only when it lowers phi and still meets
/// the curvature condition.
fn secant_refine<F, G>(
    f: &mut F,
    grad: &mut G,
    x: &[f64],
    p: &[f64],
    slope0: f64,
    accepted: (f64, f64, Vec<f64>),
) -> (f64, f64, Vec<f64>)
where
    F: FnMut(&[f64]) -> f64,
    G: FnMut(&[f64]) -> Vec<f64>,
{
    let (t, phi_t, ref g_t) = accepted;
    let slope_t = dot(g_t, p);
    let denom = slope0 - slope_t;
    // the curvature condition gives slope_t > slope0, so denom < 0
    if !(denom < 0.0) {
        return accepted;
    }
    let t_s = t * slope0 / denom;
    if !(t_s.is_finite() && t_s > 0.0) || (t_s - t).abs() <= 1e-12 * t {
        return accepted;
    }
    let trial: Vec<f64> = x.iter().zip(p).map(|(a, b)| a + t_s * b).collect();
    let phi_s = -f(&trial);
    if !(phi_s.is_finite() && phi_s < phi_t) {
        return accepted;
    }
    let g_s: Vec<f64> = grad(&trial).into_iter().map(|v| -v).collect();
    if g_s.iter().any(|v| !v.is_finite()) || dot(&g_s, p).abs() > 0.9 * slope0.abs() {
        return accepted;
    }
    (t_s, phi_s, g_s)
}

/// Strong-Wolfe line search on phi = -f along `p` (bracketing then zoom).
/// Returns the step, phi and the phi-gradient at the accepted point.
fn line_search<F, G>(
    f: &mut F,
    grad: &mut G,
    x: &[f64],
    phi0: f64,
    p: &[f64],
    slope0: f64,
) -> Option<(f64, f64, Vec<f64>)>
where
    F: FnMut(&[f64]) -> f64,
    G: FnMut(&[f64]) -> Vec<f64>,
{
    const C1: f64 = 1e-4;
    const C2: f64 = 0.9;
    const MAX_EVALS: usize = 60;
    let mut eval = |t: f64| -> (f64, Vec<f64>, f64) {
        let trial: Vec<f64> = x.iter().zip(p).map(|(a, b)| a + t * b).collect();
        let phi = -f(&trial);
        if !phi.is_finite() {
            return (f64::INFINITY, Vec::new(), f64::NAN);
        }
        let g: Vec<f64> = grad(&trial).into_iter().map(|v| -v).collect();
        let slope = dot(&g, p);
        (phi, g, slope)
    };

    let (mut t_prev, mut phi_prev, mut slope_prev) = (0.0, phi0, slope0);
    let mut t = 1.0;
    let mut evals = 0;
    // bracket
    let (mut lo, mut hi) = loop {
        if evals >= MAX_EVALS {
            return None;
        }
        evals += 1;
        let (phi_t, g_t, slope_t) = eval(t);
        if !phi_t.is_finite() || !slope_t.is_finite() {
            // step left the domain: shrink towards the last good point
            t = t_prev + 0.5 * (t - t_prev);
            continue;
        }
        if phi_t > phi0 + C1 * t * slope0 || (evals > 1 && phi_t >= phi_prev) {
            break ((t_prev, phi_prev, slope_prev), (t, phi_t, slope_t));
        }
        if slope_t.abs() <= -C2 * slope0 {
            return Some((t, phi_t, g_t));
        }
        if slope_t >= 0.0 {
            break ((t, phi_t, slope_t), (t_prev, phi_prev, slope_prev));
        }
        t_prev = t;
        phi_prev = phi_t;
        slope_prev = slope_t;
        t *= 2.0;
    };
    // zoom: lo always satisfies sufficient decrease and has the lowest phi
    while evals < MAX_EVALS {
        evals += 1;
        let (a, b) = (lo.0, hi.0);
        // minimizer of the quadratic through phi(a), phi'(a), phi(b)
        let denom = 2.0 * (hi.1 - lo.1 - lo.2 * (b - a));
        let mut t = if denom > 0.0 { a - lo.2 * (b - a) * (b - a) / denom } else { f64::NAN };
        let (left, right) = (a.min(b), a.max(b));
        let margin = 0.1 * (right - left);
        if !t.is_finite() || t < left + margin || t > right - margin {
            t = 0.5 * (a + b);
        }
        if (right - left) <= 1e-16 * right.abs().max(1.0) {
            break;
        }
        let (phi_t, g_t, slope_t) = eval(t);
        if !phi_t.is_finite() || phi_t > phi0 + C1 * t * slope0 || phi_t >= lo.1 {
            hi = (t, phi_t, slope_t);
            if !phi_t.is_finite() {
                hi.1 = f64::INFINITY;
            }
            continue;
        }
        if slope_t.abs() <= -C2 * slope0 {
            return Some((t, phi_t, g_t));
        }
        if slope_t * (hi.0 - lo.0) >= 0.0 {
            hi = lo;
        }
        lo = (t, phi_t, slope_t);
    }
    // accept the best sufficient-decrease point found, if any
    if lo.0 > 0.0 {
        let (phi_t, g_t, _) = eval(lo.0);
        return Some((lo.0, phi_t, g_t));
    }
    None
}

/// Central second difference (f(x+h) − 2f(x) + f(x−h)) / h².
pub fn finite_diff_second<F>(mut f: F, x: f64, h: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Central first difference (f(x+h) − f(x−h)) / 2h.
pub fn finite_diff_first<F>(mut f: F, x: f64, h: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    (f(x + h) - f(x - h)) / (2.0 * h)
}
