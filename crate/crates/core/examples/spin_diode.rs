//! OR/IAND gate netlists from sum-of-IAND expressions.

use asymlogic::spindiode::{compile_soi, netlist_stats, simulate_netlist};
use asymlogic::{parse, Assignment};

fn main() {
    for text in ["A @ B", "A @ B @ C | A @ !B @ !C", "A @ !B | A @ !C | B @ !C"] {
        let net = compile_soi(&parse(text).unwrap()).unwrap();
        println!("{text}\n{}{:?}", net.to_text(), netlist_stats(&net));
        let outputs: String = (0..1usize << net.inputs.len())
            .map(|row| {
                let a = Assignment::from_row(&net.inputs, row);
                if simulate_netlist(&net, &a).unwrap() {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        println!("outputs by row: {outputs}\n");
    }
}
