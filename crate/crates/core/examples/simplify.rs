//! Certifying that a diagram is trivial with Reidemeister moves.

use regsel::diagram::PdCode;
use regsel::fixtures;
use regsel::unlink::{replay, simplify};

fn main() -> regsel::Result<()> {
    let curl = PdCode::parse("X[1,1,2,2]")?;
    println!("curl: {:?}", simplify(&curl).moves);

    let trefoil = fixtures::link("knot_3_1");
    println!("trefoil: {:?}", simplify(trefoil.pd()).verdict);

    let changed = fixtures::link("link_4_2_1").pd().with_changes(&[0, 1]);
    let cert = simplify(&changed);
    println!("4_2_1 with two crossings changed: {:?} in {} moves", cert.verdict, cert.moves.len());
    for m in &cert.moves {
        println!("  {}", serde_json::to_string(m).unwrap());
    }
    let end = replay(&changed, &cert.moves)?;
    println!("replayed: {} crossings, {} loops", end.crossings.len(), end.loops);
    Ok(())
}
