//! Output records: every command emits one JSON document of the shape
//! `{command, inputs, result, provenance}`. Provenance is `formula`
//! unless an oracle ran; `both` asserts the two values were compared
//! equal (a mismatch aborts the command). Counts render as decimal
//! strings so arbitrary-precision values survive JSON round trips.

use bgposet::{AbcForm, Count, LengthVector};
use serde::Serialize;

pub const FORMULA: &str = "formula";
pub const ORACLE: &str = "oracle";
pub const BOTH: &str = "both";

#[derive(Serialize)]
pub struct Record<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub inputs: I,
    pub result: R,
    pub provenance: &'static str,
}

impl<I: Serialize, R: Serialize> Record<I, R> {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

pub fn count_str(c: &Count) -> String {
    c.to_string()
}

/// One enumerated element, as emitted by `enumerate` and `vector`.
#[derive(Serialize)]
pub struct ElementRecord {
    pub word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digit_word: Option<String>,
    pub length_vector: String,
    pub abc: AbcTriple,
    pub rank: usize,
    pub beta: String,
    pub alpha: String,
}

#[derive(Serialize)]
pub struct AbcTriple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl ElementRecord {
    pub fn of(v: &LengthVector) -> Self {
        let p = v.permutation();
        let abc: AbcForm = v.abc();
        ElementRecord {
            word: p.to_string(),
            digit_word: p.digit_word(),
            length_vector: v.to_string(),
            abc: AbcTriple {
                a: abc.a(),
                b: abc.b(),
                c: abc.c(),
            },
            rank: v.level(),
            beta: count_str(&v.beta()),
            alpha: count_str(&v.alpha()),
        }
    }

    pub fn csv_header() -> &'static str {
        "word,length_vector,a,b,c,rank,beta,alpha"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",\"{}\",{},{},{},{},{},{}",
            self.word,
            self.length_vector,
            self.abc.a,
            self.abc.b,
            self.abc.c,
            self.rank,
            self.beta,
            self.alpha
        )
    }
}
