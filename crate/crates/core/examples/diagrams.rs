//! Parsing a PD code and a FOLD crease pattern into planar maps and listing
//! their regions.

use regsel::diagram::{CreasePattern, LinkDiagram};

fn main() -> regsel::Result<()> {
    let hopf = LinkDiagram::parse("X[1,3,2,4] X[3,1,4,2]")?;
    let map = hopf.map();
    println!("Hopf link: {} crossings, {} components, {} regions", hopf.crossing_count(), hopf.num_components(), map.num_regions());
    for (f, face) in map.faces().iter().enumerate() {
        println!("  region {:?}: darts {face:?}", map.region_of_face(f));
    }
    println!("linking matrix {:?}", hopf.pd().linking_matrix());

    let fold = r#"{
        "vertices_coords": [[0,0],[1,0],[1,1],[0,1],[0.5,0.5]],
        "edges_vertices": [[0,1],[1,2],[2,3],[3,0],[0,4],[4,2],[1,4],[4,3]],
        "edges_assignment": ["B","B","B","B","M","M","V","V"]
    }"#;
    let pattern = CreasePattern::parse_fold(fold)?;
    println!("diagonals: {} regions", pattern.map().num_regions());
    for r in 0..pattern.map().num_regions() {
        println!("  region {r}: {:?}", pattern.region_polygon(r));
    }
    Ok(())
}
