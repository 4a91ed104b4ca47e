/// Rademacher function `s_m(x) = sign sin(2^{m+1}πx)`, with 0 at the
/// lattice zeros `x ∈ 2^{−m−1}ℤ`.
///
/// Computed from the binary expansion of `x` rather than `sin`, so the sign
/// is exact for every finite input.
pub fn rademacher_eval(m: u32, x: f64) -> i8 {
    let u = (x * 2f64.powi(m as i32 + 1)).rem_euclid(2.0);
    if u == 0.0 || u == 1.0 {
        0
    } else if u < 1.0 {
        1
    } else {
        -1
    }
}
