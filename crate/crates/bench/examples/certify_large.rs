//! Brute-force sawtooth evaluation of one Dedekind sum with a large modulus.
//!
//! Used once to certify the value the acceptance suite checks `dedekind_fast`
//! against. Takes tens of minutes per 10^12 terms on one core.
//!
//! ```text
//! cargo run --release -p seifert-cs-bench --example certify_large -- 1000000000039 123456789
//! ```

use std::time::Instant;

use num_bigint::BigInt;
use seifert_cs::dedekind::{dedekind_fast, sawtooth_denominator, sawtooth_numerator, DedekindArgs};
use seifert_cs::Rational;

fn main() {
    let mut argv = std::env::args().skip(1);
    let alpha: i64 = argv.next().and_then(|s| s.parse().ok()).expect("usage: certify_large ALPHA BETA");
    let beta: i64 = argv.next().and_then(|s| s.parse().ok()).expect("usage: certify_large ALPHA BETA");
    let args = DedekindArgs::new(alpha, beta).expect("alpha >= 1 and coprime");

    // k and α−k contribute equal products, so sum k < α/2 and double
    let half = (alpha as u64).div_ceil(2);
    let chunks = 64u64;
    let width = half.div_ceil(chunks);
    let start = Instant::now();
    let mut numerator = BigInt::from(0);
    for c in 0..chunks {
        let lo = 1 + c * width;
        let hi = (lo + width).min(half);
        numerator += sawtooth_numerator(args, lo..hi);
        eprintln!("chunk {}/{} done after {:?}", c + 1, chunks, start.elapsed());
    }
    let brute = Rational::new(2 * numerator, sawtooth_denominator(args));
    let fast = dedekind_fast(args);
    println!("alpha = {alpha}");
    println!("beta = {beta}");
    println!("sawtooth = {brute}");
    println!("fast = {fast}");
    println!("agree = {}", brute == fast);
}
