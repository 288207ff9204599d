//! Greedy, cost-guided rewriting with the law catalog.

use asymlogic::laws::{cost, simplify};
use asymlogic::parse;

fn main() {
    for text in ["!(X -> Y)", "(X @ X) | Y", "1 @ (X -> 0)", "!(X @ Y) & (Z @ 0)", "(X | Y) @ Z"] {
        let e = parse(text).unwrap();
        let s = simplify(&e, 20);
        println!("{e}  {:?} -> {}  {:?}", cost(&e), s.expr, cost(&s.expr));
        for step in &s.trace {
            println!("    {:<28} at {:?}: {}", step.rule, step.path, step.result);
        }
    }
}
