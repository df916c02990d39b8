//! Recursive subdivision tree avoiding the bisectors, as JSON.
//!
//! cargo run --example explore_tree -- 20,60,100 3

use cevian::io::parse_triangle;
use cevian::recursion::{explore, ExploreBudget, NodeStatus, Strategy};

fn main() -> cevian::Result<()> {
    let mut args = std::env::args().skip(1);
    let tri = parse_triangle(&args.next().unwrap_or_else(|| "20,60,100".into()))?;
    let depth = args.next().and_then(|d| d.parse().ok()).unwrap_or(3);
    let budget = ExploreBudget {
        max_depth: depth,
        ..Default::default()
    };
    let tree = explore(&tri, Strategy::AvoidBisector, budget)?;
    let leaves = tree.leaves();
    let done = leaves
        .iter()
        .filter(|l| l.1 == NodeStatus::BisectorOnly)
        .count();
    println!(
        "{} nodes, {} leaves, {done} bisector-only",
        tree.node_count(),
        leaves.len()
    );
    if tree.node_count() <= 40 {
        println!(
            "{}",
            serde_json::to_string_pretty(&tree).expect("tree serializes")
        );
    }
    Ok(())
}
