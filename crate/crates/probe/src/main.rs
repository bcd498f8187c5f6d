use faer::Mat;

fn main() {
    let a = Mat::<f64>::from_fn(3, 3, |i, j| ((i * 3 + j) as f64) * 0.1 + if i == j { 0.4 } else { 0.0 });
    let evd = a.eigen().unwrap();
    let s = evd.S();
    let u = evd.U();
    let n = 3usize;
    for k in 0..n {
        let lam = s[k];
        println!("lambda[{k}] = {} + {}i", lam.re, lam.im);
        for i in 0..n {
            let v = u[(i, k)];
            let _ = v.re + v.im;
        }
    }
    // check residual A u_k = lam_k u_k
    for k in 0..n {
        let lam = s[k];
        let mut resid = 0.0f64;
        for i in 0..n {
            let mut acc_re = 0.0;
            let mut acc_im = 0.0;
            for j in 0..n {
                acc_re += a[(i, j)] * u[(j, k)].re;
                acc_im += a[(i, j)] * u[(j, k)].im;
            }
            let want_re = lam.re * u[(i, k)].re - lam.im * u[(i, k)].im;
            let want_im = lam.re * u[(i, k)].im + lam.im * u[(i, k)].re;
            resid += (acc_re - want_re).abs() + (acc_im - want_im).abs();
        }
        println!("resid[{k}] = {resid:.3e}");
    }
    println!("type of s entry: {}", std::any::type_name_of_val(&s[0]));
}
