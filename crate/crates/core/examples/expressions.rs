//! Parsing and evaluating expressions. Multiplication order is kept.

use quatforms::expr::{self, parse_str, tokenize};
use quatforms::Quaternion;

fn main() {
    for text in ["1+2i-3j+4k", "(1+i)*(1+j)", "(1+j)*(1+i)", "i/j", "inv(j)*i", "conj(2+3k)^2", "2i^2", "-i^2"] {
        match expr::eval_str(text) {
            Ok(q) => println!("{text:<14} = {q}"),
            Err(e) => println!("{text:<14} : {e}"),
        }
    }

    let tree = parse_str("-z^2*conj(z)/(3-k)").expect("valid");
    println!("\nparsed: {tree}");
    println!("at z = 1+i: {}", tree.eval(Some(Quaternion::new(1.0, 1.0, 0.0, 0.0))).unwrap());

    println!("\ntokens of \"conj(z)^2\":");
    for t in tokenize("conj(z)^2").unwrap() {
        println!("  {:>2} {:?}", t.position, t.kind);
    }
    for bad in ["1 $ 2", "z^1.5", "(1+i"] {
        println!("{bad:<8} -> {}", expr::parse_str(bad).unwrap_err());
    }
}
