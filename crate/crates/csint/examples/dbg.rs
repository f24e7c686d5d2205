use csint::engine::{builtin_suite, verify, VerifyOptions};
fn main() {
    let opts = VerifyOptions::default();
    for inst in builtin_suite("representations").unwrap() {
        if inst.label.contains("laguerre/n2") || inst.label.contains("legendre-half") {
            let r = verify(&inst, &opts);
            println!("{}: pass={} methods={:?}\n  diag={:?}\n  rhs={:.12e} m={:?}", r.instance.label, r.pass, r.methods_run, r.diagnostics, r.rhs_closed_form, r.lhs_moment);
        }
    }
    for inst in builtin_suite("gxf").unwrap() {
        if inst.label.starts_with("binomial") {
            let r = verify(&inst, &opts);
            println!("{}: pass={} matched={:?} rhs={:.8e} alts={:?} dual={:?}", r.instance.label, r.pass, r.matched_form, r.rhs_closed_form,
                r.rhs_alternates.iter().map(|(n,v)| format!("{n}={v:.8e}")).collect::<Vec<_>>(), r.rel_diff.get("moment_vs_quadrature"));
        }
    }
}
