use rand::Rng;
use rand_distr::Exp1;

/// Euclidean projection onto the probability simplex by sorting.
pub fn simplex_projection(y: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; y.len()];
    simplex_projection_into(y, &mut out);
    out
}

pub fn simplex_projection_into(y: &[f64], out: &mut [f64]) {
    assert_eq!(y.len(), out.len());
    if y.is_empty() {
        return;
    }
    let mut u = y.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut mu = u[0] - 1.0;
    for (j, &uj) in u.iter().enumerate() {
        cum += uj;
        let cand = (cum - 1.0) / (j + 1) as f64;
        if uj - cand > 0.0 {
            mu = cand;
        }
    }
    for (o, &v) in out.iter_mut().zip(y) {
        *o = (v - mu).max(0.0);
    }
}

/// Uniform sample from the probability simplex via normalized exponential
/// spacings.
pub fn sample_simplex_uniform<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    if d == 1 {
        return vec![1.0];
    }
    let mut v: Vec<f64> = (0..d)
        .map(|_| loop {
            let e: f64 = rng.sample(Exp1);
            if e > 0.0 {
                break e;
            }
        })
        .collect();
    let s: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= s);
    v
}
