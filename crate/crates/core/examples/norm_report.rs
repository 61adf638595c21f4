// Autocorrelations, L4 norm and merit factor of a few named sequences.

use littlewood::norms::{autocorrelation, l4_report, SequenceRecord};
use littlewood::BinarySequence;

const SEQUENCES: [(&str, &str); 4] = [
    ("barker 7", "+++--+-"),
    ("barker 11", "+++---+--+-"),
    ("barker 13", "+++++--++-+-+"),
    ("all ones", "++++++++++"),
];

pub fn run_example() -> littlewood::Result<()> {
    for (name, text) in SEQUENCES {
        let seq: BinarySequence = text.parse()?;
        let profile = autocorrelation(&seq);
        let report = l4_report(&seq);
        let merit = report
            .merit_factor
            .map_or_else(|| "inf".to_string(), |f| format!("{f} ~ {:.4}", f.to_f64()));
        println!("{name:>10}  {seq}");
        println!("{:>10}  C = {:?}", "", profile.c);
        println!("{:>10}  ||f||_4^4 = {}  F = {merit}", "", report.norm4_fourth);
    }
    let record = SequenceRecord::new(&"+++-".parse()?);
    println!("{}", serde_json::to_string(&record)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> littlewood::Result<()> {
    run_example()
}
