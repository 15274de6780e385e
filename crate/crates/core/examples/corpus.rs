// The bundled example knots, evaluated against their recorded expectations.

use braid3::corpus::CORPUS;

fn main() {
    for entry in CORPUS {
        let r = entry.evaluate().unwrap();
        println!(
            "{:<14} genus={} labels={:<28} relation={:<6} rep={}",
            entry.name, r.record.genus, r.record.labels, r.record.relation, r.record.canonical_rep
        );
        assert!(r.matches, "{}", entry.name);
    }
}
