//! Single-qubit sanity check: the XY4 sequence kills all three
//! single-qubit Pauli errors to first order.

use ddgate::pauli::{Letter, PauliString};
use ddgate::sequence::xy4_preset;

fn main() {
    let seq = xy4_preset();
    let frames: Vec<String> = seq.toggling_frames().iter().map(|f| f.to_string()).collect();
    println!("XY4 frames: [{}]", frames.join(", "));
    for axis in [Letter::X, Letter::Y, Letter::Z] {
        let error = PauliString::single(1, 0, axis);
        let sum = seq.first_order_sum(&error).unwrap();
        println!("  {error}: signed count {sum:+}");
        assert_eq!(sum, 0);
    }
    println!("3/3 single-qubit errors cancelled");
}
