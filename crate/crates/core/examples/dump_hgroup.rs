//! Prints the builtin order-21 group table in the JSON file schema.

use delcat_core::chartheory::{hgroup_table, GroupTableFile};

fn main() {
    let file = GroupTableFile::from_table(&hgroup_table());
    println!("{}", serde_json::to_string_pretty(&file).unwrap());
}
