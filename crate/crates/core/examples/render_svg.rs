//! Draw a subdivision with its exact angles.
//!
//! cargo run --example render_svg -- 30,10,40,70,10,20 out.svg

use cevian::embed::embed;
use cevian::io::parse_tuple;
use cevian::svg::render_svg;

fn main() -> cevian::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = parse_tuple(&args.next().unwrap_or_else(|| "30,10,40,70,10,20".into()))?;
    let out = args.next().unwrap_or_else(|| "subdivision.svg".into());
    let e = embed(&t)?;
    println!(
        "P = ({:.6}, {:.6}), angle residual {:.1e}",
        e.p.x,
        e.p.y,
        e.residual(&t)
    );
    std::fs::write(&out, render_svg(&t)?)?;
    println!("wrote {out}");
    Ok(())
}
