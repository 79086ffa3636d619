//! Serialize catalog entries as JSON Lines and CSV, the record layout
//! the command-line tool streams.
//!
//! Run with: cargo run --example streaming_records

use weiergap::enumerate::tree_walk;
use weiergap::record::SequenceRecord;

fn main() {
    let genus = 3;

    println!("JSON Lines:");
    for seq in tree_walk(genus) {
        println!("{}", SequenceRecord::from_sequence(&seq).json_line());
    }

    println!();
    println!("CSV:");
    println!("{}", SequenceRecord::csv_header());
    for seq in tree_walk(genus) {
        println!("{}", SequenceRecord::from_sequence(&seq).csv_row());
    }

    // records parse back losslessly, so downstream tools can round trip
    let record = SequenceRecord::from_sequence(&tree_walk(genus).next().unwrap());
    let line = record.json_line();
    let back: SequenceRecord = serde_json::from_str(&line).expect("well-formed line");
    assert_eq!(back, record);
    println!();
    println!("round-tripped: {line}");
}
