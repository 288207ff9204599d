//! Stateful IMPLY programs: the three-step NAND and a compiled carry.

use asymlogic::canon::noi_from_tt;
use asymlogic::memristor::{compile_nand, compile_noi, simulate, step_count};
use asymlogic::minimize::minimized_noi;
use asymlogic::{Assignment, TruthTable, VarId};

fn main() {
    let p = VarId::new("p").unwrap();
    let q = VarId::new("q").unwrap();
    let nand = compile_nand(&p, &q);
    print!("{}", nand.to_text());
    for bits in ["00", "01", "10", "11"] {
        let run = simulate(&nand, &Assignment::from_bits(&[p.clone(), q.clone()], bits).unwrap()).unwrap();
        let s: Vec<String> = run.trace.iter().map(|st| u8::from(st.get(2)).to_string()).collect();
        println!("p q = {bits}: s after each step {}", s.join(" "));
    }

    let abc: Vec<VarId> = ["A", "B", "C"].iter().map(|v| VarId::new(*v).unwrap()).collect();
    let carry = TruthTable::from_onset(abc, &[3, 5, 6, 7]).unwrap();
    let reduced = compile_noi(&minimized_noi(&carry).unwrap()).unwrap();
    let canonical = compile_noi(&noi_from_tt(&carry)).unwrap();
    println!("\nminimized carry: {:?}", step_count(&reduced));
    println!("canonical carry: {:?}", step_count(&canonical));
    print!("{}", reduced.to_text());
}
