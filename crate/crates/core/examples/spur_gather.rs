//! Dragging the unlinking crossings of a diagram into one region, drawing a
//! circle around them, and undoing the link with a single region move.

use regsel::fixtures;
use regsel::unlink::{classical_unlink_number, gather, simplify, ChangeTable};

fn main() -> regsel::Result<()> {
    let d = fixtures::link("link_borromean");
    let table = ChangeTable::build(d.pd())?;
    let u = classical_unlink_number(&table, 4);
    println!("Borromean rings: change crossings {:?}", u.crossings);

    let g = gather(&d, &u.crossings, 0)?;
    for (c, path) in &g.moves {
        println!("  crossing {c} leaves corner {} over edges {:?}", path.corner, path.edges);
    }
    println!("spurred diagram: {} crossings", g.diagram.crossing_count());
    println!("region {} of the circled diagram toggles {:?}", g.region, g.circled.incidence_matrix().column(g.region).ones().collect::<Vec<_>>());

    let cert = simplify(&g.diagram.pd().with_changes(&u.crossings));
    println!("after one region move: {:?}, {} components", cert.verdict, cert.components);
    Ok(())
}
