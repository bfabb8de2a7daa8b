//! Necessary local conditions for flat foldability at each interior vertex.

use regsel::diagram::CreasePattern;
use regsel::foldability::check_flat_foldable_necessary;
use regsel::fixtures;

fn main() -> regsel::Result<()> {
    for name in ["preliminary_base", "kite_vertex", "degree_three"] {
        let report = check_flat_foldable_necessary(&fixtures::pattern(name));
        println!("{name}: {}", if report.pass { "pass" } else { "fail" });
        for v in &report.vertices {
            println!("  vertex {} degree {} angles {:?} sums {:?}", v.vertex, v.degree, v.sector_angles, v.alternating_sums);
        }
    }

    let text = r#"{
        "vertices_coords": [[0.5,0.5],[0,0],[1,0],[1,1],[0,1],[0.5,0],[0.5,1]],
        "edges_vertices": [[0,1],[0,2],[0,3],[0,4],[0,5],[0,6]]
    }"#;
    let p = CreasePattern::parse_fold(text)?;
    println!("six creases at the centre: {}", check_flat_foldable_necessary(&p).pass);
    Ok(())
}
