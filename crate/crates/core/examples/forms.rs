//! Every representation of one quaternion.

use quatforms::forms::{convert, FormKind};
use quatforms::Quaternion;

fn main() {
    let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
    for kind in FormKind::ALL {
        match convert(q, kind) {
            Ok(text) => println!("{:<10} {}", kind.name(), text.replace('\n', "\n           ")),
            Err(e) => println!("{:<10} error: {}", kind.name(), e.name()),
        }
    }

    // The logarithmic form only exists for strictly positive components.
    let r = Quaternion::new(1.0, -2.0, 3.0, 4.0);
    println!("log of {r}: {:?}", convert(r, FormKind::Log).map_err(|e| e.name()));
}
