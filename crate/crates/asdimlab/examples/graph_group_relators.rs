//! Relator words on graph-group edges: reduction, the forbidden shapes,
//! and the bound for a relator-labeled tree.
//!
//! ```bash
//! cargo run --example graph_group_relators
//! ```

use asdimlab::{
    compute_bound, cyclic_reduce, free_reduce, is_forbidden_form, parse_input, validate_edge_word,
    Mode, VertexId, Word,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = ["a.b.b^-1.a", "a.b.a^-1", "b.b.a.b", "a.b.a.b^-1.a^-1.b^-1"];
    for text in samples {
        let w = Word::parse(text)?;
        println!("word {text}");
        println!("  freely reduced:     {}", free_reduce(&w));
        let c = cyclic_reduce(&w);
        println!("  cyclically reduced: {c}");
        println!("  forbidden shape:    {}", is_forbidden_form(&c));
    }

    let a = VertexId::new("a")?;
    let b = VertexId::new("b")?;
    for text in ["b.b.a.b", "a.b.a.b^-1.a^-1.b^-1"] {
        let verdict = match validate_edge_word(Word::parse(text)?, &a, &b) {
            Ok(_) => "accepted".to_owned(),
            Err(e) => format!("rejected ({e})"),
        };
        println!("edge label {text}: {verdict}");
    }

    // A relator-labeled path: every braid relator is a valid edge word,
    // and a relator tree keeps the dimension at most 2.
    let g = parse_input(
        "kind graphgroup\nvertex a\nvertex b\nvertex c\n\
         edge a b a.b.a.b^-1.a^-1.b^-1\n\
         edge b c b.c.b.c.b^-1.c^-1.b^-1.c^-1\n",
    )?;
    let result = compute_bound(&g, Mode::Unconditional)?;
    println!(
        "relator-labeled path: asdim in [{}, {}]",
        result.bound.lower, result.bound.upper
    );

    // With a cycle the tree argument no longer applies and the engine
    // reports the honest answer.
    let g = parse_input(
        "kind graphgroup\nvertex a\nvertex b\nvertex c\n\
         edge a b a.b.a.b^-1.a^-1.b^-1\n\
         edge b c b.c.b.c.b^-1.c^-1.b^-1.c^-1\n\
         edge a c a.c.a.c^-1.a^-1.c^-1\n",
    )?;
    let result = compute_bound(&g, Mode::Unconditional)?;
    println!(
        "relator-labeled triangle: asdim in [{}, {}]",
        result.bound.lower, result.bound.upper
    );
    Ok(())
}
