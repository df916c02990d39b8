//! Classify subdivisions as trivial, family or sporadic.

use cevian::catalog::classify;
use cevian::io::parse_tuple;

fn main() -> cevian::Result<()> {
    let inputs = [
        "30,30,30,30,30,30",
        "30,10,40,70,10,20",
        "2,34,94,10,16,24",
        "30,10,50,10,50,30",
        "45,45,45,15,15,15",
    ];
    for s in inputs {
        let t = parse_tuple(s)?;
        match classify(&t) {
            Ok(c) => println!("{s:<22} {}", c.label()),
            Err(e) => println!("{s:<22} {e}"),
        }
    }
    Ok(())
}
