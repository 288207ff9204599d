//! Full adder: minimized carry and sum in both two-level forms.

use asymlogic::canon::noi_from_tt;
use asymlogic::minimize::{minimized_noi, minimized_soi};
use asymlogic::semantics::equivalent_over;
use asymlogic::{parse, TruthTable, VarId};

fn main() {
    let abc: Vec<VarId> = ["A", "B", "C"].iter().map(|v| VarId::new(*v).unwrap()).collect();
    let carry = TruthTable::from_onset(abc.clone(), &[3, 5, 6, 7]).unwrap();
    let sum = TruthTable::from_onset(abc.clone(), &[1, 2, 4, 7]).unwrap();

    let canonical = noi_from_tt(&carry);
    let reduced = minimized_noi(&carry).unwrap();
    println!("carry canonical NOI  {canonical}  ({} literals)", canonical.literal_count());
    println!("carry minimized NOI  {reduced}  ({} literals)", reduced.literal_count());
    println!("carry minimized SOI  {}", minimized_soi(&carry).unwrap());
    println!("equal: {}", equivalent_over(&canonical, &reduced, &abc).unwrap().is_equal());

    // Parity has no adjacent ON rows, so nothing merges.
    println!("sum minimized NOI    {}", minimized_noi(&sum).unwrap());

    // The four-term carry as commonly printed, read with right-to-left chains.
    let printed = parse("!((!A -> B -> C) & (A -> !B -> C) & (A -> B -> !C) & (A -> B -> C))").unwrap();
    println!(
        "printed four-term carry equals majority: {}",
        equivalent_over(&printed, &reduced, &abc).unwrap().is_equal()
    );
}
