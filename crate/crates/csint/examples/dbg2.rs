use num_complex::Complex64;
fn main() {
    let mu = 0.0f64;
    let x = 15.0f64;
    const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;
    let mut f = Complex64::new(FPMIN, 0.0);
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    let mu2 = mu * mu;
    for k in 1..40 {
        let a = (k as f64 - 0.5).powi(2) - mu2;
        let b = Complex64::new(2.0 * x, 2.0 * k as f64);
        d = b + a * d;
        if d.norm() < FPMIN { d = Complex64::new(FPMIN, 0.0); }
        c = b + a / c;
        if c.norm() < FPMIN { c = Complex64::new(FPMIN, 0.0); }
        d = d.inv();
        let del = c * d;
        f *= del;
        if k > 1 && k < 12 || (del - 1.0).norm() < 3.0 * f64::EPSILON {
            println!("k={k} del-1={:e} f={f}", (del - 1.0).norm());
        }
        if (del - 1.0).norm() < 3.0 * f64::EPSILON {
            let cf = Complex64::new(-0.5 / x, 1.0) + Complex64::new(0.0, 1.0 / x) * f;
            println!("converged k={k}: p={} q={}", cf.re, cf.im);
            break;
        }
    }
}
