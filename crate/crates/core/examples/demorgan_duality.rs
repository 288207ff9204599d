//! Classical duality and the IAND/IMPLY De Morgan duality.

use asymlogic::laws::{demorgan_dual_expr, dual};
use asymlogic::semantics::demorgan_dual_tt;
use asymlogic::{parse, truth_table};

fn main() {
    for text in ["A @ B @ C", "A -> B -> C", "(A | B) @ !C"] {
        let e = parse(text).unwrap();
        println!("dual of {e}: {}", dual(&e));
    }

    for text in ["A @ B", "A @ B @ C", "A -> B -> C"] {
        let e = parse(text).unwrap();
        let d = demorgan_dual_expr(&e).unwrap();
        let vars = e.vars();
        let by_table = demorgan_dual_tt(&truth_table(&e, Some(&vars)).unwrap());
        let agrees = truth_table(&d, Some(&vars)).unwrap() == by_table;
        println!("De Morgan dual of {e}: {d}  (table {}, agrees {agrees})", by_table.bit_string());
    }
}
