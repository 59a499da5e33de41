//! Table export in the three formats the `qbe table` command writes.
//!
//! ```text
//! cargo run --example export
//! ```

use qbernoulli::cli::{build_table_payload, table_csv, table_latex, OutputDocument, TableFamily};
use qbernoulli::rational::rat;
use qbernoulli::QParam;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = QParam::new(rat(1, 2))?;
    let payload = build_table_payload(TableFamily::Qeuler, Some(1), 3, Some(&q))
        .map_err(|e| format!("{e:?}"))?;

    let doc = OutputDocument {
        meta: None,
        payload,
    };
    let json = serde_json::to_string_pretty(&doc)?;
    println!("{json}\n");
    print!("{}", table_csv(&doc.payload));
    println!();
    print!("{}", table_latex(&doc.payload));

    // JSON reads back to the same exact values
    let back: OutputDocument<qbernoulli::cli::TablePayload> = serde_json::from_str(&json)?;
    assert_eq!(back, doc);
    Ok(())
}
