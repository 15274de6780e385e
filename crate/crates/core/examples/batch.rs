// JSONL batch processing, as done by `braid3 batch --jsonl FILE`.

use braid3::cli::process_batch;

fn main() {
    let input = [
        r#"{"id": "a", "word": "s1^-1 s2 s1^-1 s2", "command": "classify"}"#,
        r#"{"id": "b", "word": "a1^3 a2", "command": "genus"}"#,
        r#"{"id": "c", "word": "a1^2", "command": "genus"}"#,
        r#"{"id": "d", "word": "a1 a2^", "command": "normalize"}"#,
        r#"{"id": "e", "word": "a1", "other": "a3", "command": "conjugate"}"#,
    ]
    .map(String::from);
    for record in process_batch(&input) {
        println!("{}", serde_json::to_string(&record).unwrap());
    }
}
