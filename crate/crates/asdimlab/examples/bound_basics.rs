//! Compute certified bounds for a few defining graphs and print the
//! results together with the rules that produced them.
//!
//! ```bash
//! cargo run --example bound_basics
//! ```

use asdimlab::{compute_bound, parse_input, rules_applied, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        (
            "single braid edge (m = 3)",
            "kind artin\nvertex a\nvertex b\nedge a b 3\n",
        ),
        (
            "five-cycle, all labels 3",
            "kind artin\nvertex a\nvertex b\nvertex c\nvertex d\nvertex e\n\
             edge a b 3\nedge b c 3\nedge c d 3\nedge d e 3\nedge a e 3\n",
        ),
        (
            "right-angled square of cliques (K4, all labels 2)",
            "kind artin\nvertex a\nvertex b\nvertex c\nvertex d\n\
             edge a b 2\nedge a c 2\nedge a d 2\nedge b c 2\nedge b d 2\nedge c d 2\n",
        ),
        (
            "Coxeter tree",
            "kind coxeter\nvertex a\nvertex b\nvertex c\nvertex d\n\
             edge a b 5\nedge b c 3\nedge b d 7\n",
        ),
    ];

    for (title, text) in inputs {
        let g = parse_input(text)?;
        let result = compute_bound(&g, Mode::Unconditional)?;
        let b = &result.bound;
        println!("{title}");
        println!(
            "  kind {}  vertices {}  edges {}  Sim {}",
            g.kind(),
            g.vertex_count(),
            g.edge_count(),
            result.stats.sim
        );
        println!(
            "  asdim in [{}, {}]{}",
            b.lower,
            b.upper,
            if b.exact { "  (exact)" } else { "" }
        );
        let rules: Vec<&str> = rules_applied(&result.certificate)
            .iter()
            .map(|r| r.name())
            .collect();
        println!("  rules: {}\n", rules.join(", "));
    }
    Ok(())
}
