//! Exact test of sin u sin v sin w = sin x sin y sin z for a few tuples.
//!
//! cargo run --example verify_tuple -- 30,10,40,70,10,20

use cevian::cyclotomic::{
    ceva_exponent_sum, ceva_float_difference, ceva_holds_exact, DEFAULT_LEVEL_CAP,
};
use cevian::io::parse_tuple;

fn main() -> cevian::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "30,10,40,70,10,20".to_string(),
            "45,45,45,15,15,15".to_string(),
            "30,1/2,59,121/2,1/2,59/2".to_string(),
        ]
    } else {
        args
    };
    for s in inputs {
        let t = parse_tuple(&s)?;
        let level = ceva_exponent_sum(&t, DEFAULT_LEVEL_CAP)?.level();
        println!(
            "{s:<28} exact={:<5} level={level:<5} float diff={:.3e}",
            ceva_holds_exact(&t)?,
            ceva_float_difference(&t)
        );
    }
    Ok(())
}
