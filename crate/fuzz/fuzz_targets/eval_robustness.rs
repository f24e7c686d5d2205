#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

use csint::hypergeom::ParameterSet;
use csint::value::EvalOptions;

#[derive(Arbitrary, Debug)]
struct Input {
    a: Vec<f64>,
    b: Vec<f64>,
    z_re: f64,
    z_im: f64,
    n: u8,
}

// Series evaluation, classification and moments must fail through Result,
// never through a panic, whatever the parameters.
fuzz_target!(|input: Input| {
    if input.a.len() > 4 || input.b.len() > 4 {
        return;
    }
    let clamp = |v: &f64| v.is_finite() && v.abs() < 1e3;
    if !input.a.iter().all(clamp) || !input.b.iter().all(clamp) {
        return;
    }
    let params = ParameterSet::new(input.a, input.b);
    let opts = EvalOptions {
        tol: 1e-10,
        max_terms: 200,
    };
    let z = num_complex::Complex64::new(
        if input.z_re.is_finite() { input.z_re.clamp(-4.0, 4.0) } else { 0.0 },
        if input.z_im.is_finite() { input.z_im.clamp(-4.0, 4.0) } else { 0.0 },
    );
    let _ = csint::hypergeom::pfq(&params, z, opts);
    let _ = csint::hypergeom::structural_constant(&params, input.n as u32 % 40);
    let _ = csint::weight::mellin_moment(&params, input.n as u32 % 40);
    if let Ok(form) = csint::weight::classify_weight(&params) {
        let _ = csint::weight::weight_eval(&form, z.re.abs().max(1e-3));
    }
});
