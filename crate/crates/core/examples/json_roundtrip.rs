//! The JSON input format: export a catalog entry, read it back and load a
//! hand-written document with an action block.

use solvform::catalog;
use solvform::io::{InputDocument, Model};

fn main() -> solvform::Result<()> {
    let doc = InputDocument::from_entry(&catalog::get("example_5_6")?);
    let text = doc.to_json();
    println!("{text}");
    let back = InputDocument::from_json(&text)?;
    println!("round trip identical: {}", back == doc);

    let text = r#"{
        "name": "heisenberg_sign",
        "dim": 3,
        "brackets": [{"i": 0, "j": 1, "k": 2, "c": "1"}],
        "action": {"generators": [[["-1","0","0"],["0","-1","0"],["0","0","1"]]]}
    }"#;
    let loaded = InputDocument::from_json(text)?.load()?;
    if let Model::Algebra {
        lie,
        action: Some(a),
        ..
    } = &loaded.model
    {
        println!(
            "{}: betti {:?}, group order {}",
            loaded.name,
            lie.betti_numbers(),
            a.order()
        );
    }

    let bad = r#"{"name": "x", "dim": 1, "brackets": [], "colour": "red"}"#;
    println!("{}", InputDocument::from_json(bad).unwrap_err());
    Ok(())
}
