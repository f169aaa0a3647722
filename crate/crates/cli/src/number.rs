//! Output number formatting shared by every writer.

/// Nine significant digits; fixed notation for `1e-3 <= |x| < 1e6`, lowercase
/// scientific otherwise. Non-finite values print as `inf`, `-inf`, `nan`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.8e}");
    // the exponent is read after rounding so 999999.9999 stays scientific
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if x != 0.0 && (-3..6).contains(&exp) {
        format!("{:.*}", (8 - exp) as usize, x)
    } else {
        sci
    }
}
