//! Parse expressions, print truth tables and check equivalence.
//!
//! Run with `cargo run --example truth_tables`.

use asymlogic::{equivalent, parse, truth_table, Verdict};

fn main() {
    for text in ["A @ B", "A -> B", "A @ B @ C", "A -> B -> C", "(A @ B) @ C", "A @ (B @ C)"] {
        let e = parse(text).unwrap();
        let t = truth_table(&e, None).unwrap();
        println!("{text:<14} rows {}", t.bit_string());
    }

    // Chains are not associative, but their operands after the first commute.
    for (l, r) in [("A @ B @ C", "A @ C @ B"), ("(A @ B) @ C", "A @ (B @ C)"), ("A @ B", "!B @ !A")] {
        match equivalent(&parse(l).unwrap(), &parse(r).unwrap()).unwrap() {
            Verdict::Equal => println!("{l} == {r}"),
            Verdict::Counterexample(a) => println!("{l} != {r} at {a}"),
        }
    }

    match parse("A @ B -> C") {
        Ok(e) => println!("parsed {e}"),
        Err(err) => println!("rejected: {err}"),
    }
}
