//! Parse a slice word and print its combinatorics: segments, regions,
//! components, the Wirtinger presentation and the linking matrix.
//!
//!     cargo run -p qinv --example diagram -- "id cupr ; xp id< ; xp id< ; id capr"

use qinv::diagram::{Combinatorics, TangleDiagram};

fn main() -> qinv::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "id cupr ; xp id< ; xp id< ; id capr".into());
    let d = TangleDiagram::parse(&word)?;
    let comb = Combinatorics::new(&d, d.inputs == d.outputs && d.inputs.len() == 1)?;
    println!("word       {d}");
    println!("crossings  {}", comb.crossings.len());
    println!("segments   {}", comb.segment_count());
    println!("regions    {}", comb.region_count);
    println!("arcs       {}", comb.arc_count);
    println!("components {}", comb.component_count);
    for (k, x) in comb.crossings.iter().enumerate() {
        println!(
            "crossing {k}: sign {:+}, segments (1,2,1′,2′) = ({},{},{},{}), regions (N,W,S,E) = ({},{},{},{})",
            x.sign, x.s1, x.s2, x.s1p, x.s2p, x.n, x.w, x.s, x.e
        );
    }
    println!("Wirtinger: {:?}", comb.wirtinger());
    println!("linking matrix: {:?}", comb.linking_matrix());
    Ok(())
}
