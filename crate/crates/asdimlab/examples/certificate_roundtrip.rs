//! Emit a proof certificate, verify it independently, then tamper with it
//! and watch the checker locate the damage.
//!
//! ```bash
//! cargo run --example certificate_roundtrip
//! ```

use asdimlab::{check, compute_bound, parse_input, Certificate, ExtBound, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_input(
        "kind artin\nvertex a\nvertex b\nvertex c\nvertex d\n\
         edge a b 4\nedge b c 6\nedge c d 2\nedge a d 3\n",
    )?;
    let result = compute_bound(&g, Mode::Unconditional)?;
    println!("bound: {}", result.bound);

    let json = result.certificate.to_json();
    println!("certificate is {} bytes of JSON", json.len());

    let reloaded = Certificate::from_json(&json)?;
    check(&reloaded, &g)?;
    println!("checker verdict on the genuine certificate: accepted");

    // claim a sharper bound than the decomposition proves
    let mut forged = reloaded.clone();
    forged.root.upper = ExtBound::Finite(1);
    forged.root.lower = 1;
    match check(&forged, &g) {
        Ok(()) => println!("checker verdict on the forged certificate: accepted (!)"),
        Err(rejection) => {
            println!("checker verdict on the forged certificate: rejected");
            println!("  {rejection}");
        }
    }

    // move a vertex out of an amalgam separator
    let mut forged = reloaded;
    forged.root.children[2].vertices.pop();
    match check(&forged, &g) {
        Ok(()) => println!("checker verdict on the damaged separator: accepted (!)"),
        Err(rejection) => {
            println!("checker verdict on the damaged separator: rejected");
            println!("  {rejection}");
        }
    }
    Ok(())
}
