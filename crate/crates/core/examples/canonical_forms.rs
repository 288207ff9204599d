//! Sum-of-IAND, NAND-of-IMPLY and the two restricted conjunctive forms.

use asymlogic::canon::{ion_from_tt, ios_from_tt, noi_from_tt, noi_to_soi, soi_from_tt, soi_to_noi, Restricted};
use asymlogic::{parse, truth_table, TruthTable, VarId};

fn show(label: &str, r: Restricted) {
    match r {
        Restricted::Supported(e) => println!("{label} {e}"),
        Restricted::Unsupported(why) => println!("{label} unsupported: {why}"),
    }
}

fn main() {
    let abc: Vec<VarId> = ["A", "B", "C"].iter().map(|v| VarId::new(*v).unwrap()).collect();

    let f = truth_table(&parse("A & B & C | A & !B & !C").unwrap(), Some(&abc)).unwrap();
    let soi = soi_from_tt(&f);
    let noi = noi_from_tt(&f);
    println!("SOI {soi}");
    println!("NOI {noi}");
    println!("SOI -> NOI {}", soi_to_noi(&soi).unwrap());
    println!("NOI -> SOI {}", noi_to_soi(&noi).unwrap());

    // One ON row: an IAND of two sums.
    show("IOS", ios_from_tt(&TruthTable::from_onset(abc.clone(), &[4]).unwrap()));
    // One OFF row: an IMPLY of two NANDs.
    let all_but_3: Vec<usize> = (0..8).filter(|&r| r != 3).collect();
    show("ION", ion_from_tt(&TruthTable::from_onset(abc.clone(), &all_but_3).unwrap()));
    show("IOS", ios_from_tt(&f));
}
