//! Compare unconditional and conjecture-assisted bounds on graphs the
//! proven rules do not close.
//!
//! ```bash
//! cargo run --example conditional_mode
//! ```

use asdimlab::{compute_bound, parse_input, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        (
            "mixed-label triangle {2,3,5}",
            "kind artin\nvertex a\nvertex b\nvertex c\n\
             edge a b 2\nedge a c 3\nedge b c 5\n",
        ),
        (
            "large-type triangle {3,4,5} (already proven exactly)",
            "kind artin\nvertex a\nvertex b\nvertex c\n\
             edge a b 3\nedge a c 4\nedge b c 5\n",
        ),
        (
            "complete K4, labels 3 (conjecture only)",
            "kind artin\nvertex a\nvertex b\nvertex c\nvertex d\n\
             edge a b 3\nedge a c 3\nedge a d 3\nedge b c 3\nedge b d 3\nedge c d 3\n",
        ),
    ];

    for (title, text) in inputs {
        let g = parse_input(text)?;
        let unconditional = compute_bound(&g, Mode::Unconditional)?.bound;
        let conditional = compute_bound(&g, Mode::Conditional)?.bound;
        println!("{title}");
        println!("  unconditional: {unconditional}");
        println!("  conditional:   {conditional}\n");
    }
    println!("conditional results carry the `conditional` flag so that no");
    println!("conjecture-dependent number is ever mistaken for a theorem.");
    Ok(())
}
