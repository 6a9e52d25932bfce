//! The overview of classifications, as Markdown and JSON.

fn main() {
    print!("{}", thicket::classifier::overview_markdown());
    println!();
    println!("{}", serde_json::to_string_pretty(&thicket::classifier::overview_table()[6]).unwrap());
}
