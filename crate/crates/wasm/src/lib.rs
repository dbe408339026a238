//! Browser bindings for the neighborhood demo page in `www/`.

use wasm_bindgen::prelude::*;

use nbhood_core::neighborhood::enumerate_kind;
use nbhood_core::{bound_report, leftmost_optimal_alignment, levenshtein, Alphabet, NeighborhoodKind};

/// Words shown before the list is truncated.
const SHOW_LIMIT: usize = 2000;

fn js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Neighborhood {
    count: String,
    words: Vec<String>,
}

#[wasm_bindgen]
impl Neighborhood {
    /// Exact size as a decimal string.
    #[wasm_bindgen(getter)]
    pub fn count(&self) -> String {
        self.count.clone()
    }

    /// The first members in canonical order, ε as "".
    #[wasm_bindgen(getter)]
    pub fn words(&self) -> Vec<String> {
        self.words.clone()
    }
}

/// Members of the `kind` ("full", "condensed", "super-condensed")
/// neighborhood of `word` over `alphabet`.
#[wasm_bindgen]
pub fn neighborhood(word: &str, d: usize, alphabet: &str, kind: &str) -> Result<Neighborhood, JsError> {
    let alphabet = Alphabet::new(alphabet).map_err(js)?;
    let kind: NeighborhoodKind = kind.parse().map_err(js)?;
    let query = alphabet.word(word).map_err(js)?;
    let result = enumerate_kind(&query, d, &alphabet, kind).map_err(js)?;
    Ok(Neighborhood {
        count: result.count.to_string(),
        words: result.words().iter().take(SHOW_LIMIT).map(|w| w.to_string()).collect(),
    })
}

/// Distance on the first line, then the two rows of the leftmost optimal
/// alignment. The alphabet is the set of characters used.
#[wasm_bindgen]
pub fn leftmost_alignment(u: &str, v: &str) -> Result<String, JsError> {
    let mut chars: Vec<char> = u.chars().chain(v.chars()).collect();
    chars.sort_unstable();
    chars.dedup();
    if chars.is_empty() {
        chars.push('a');
    }
    let alphabet = Alphabet::new(&chars.into_iter().collect::<String>()).map_err(js)?;
    let (u, v) = (alphabet.word(u).map_err(js)?, alphabet.word(v).map_err(js)?);
    let dist = levenshtein(&u, &v).map_err(js)?;
    let alignment = leftmost_optimal_alignment(&u, &v).map_err(js)?;
    Ok(format!("{dist}\n{}", alignment.render()))
}

/// `[F or "", floor of the closed form, exact closed form]`.
#[wasm_bindgen]
pub fn bounds(w: u32, d: u32, s: u32) -> Result<Vec<String>, JsError> {
    let r = bound_report(w.into(), d.into(), s.into()).map_err(js)?;
    Ok(vec![
        r.value_f.map(|f| f.to_string()).unwrap_or_default(),
        r.conjecture_floor.to_string(),
        r.conjecture_exact.to_string(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_row() {
        assert_eq!(bounds(8, 5, 2).unwrap()[1..], ["66355", "331776/5"]);
        assert_eq!(bounds(4, 4, 2).unwrap()[0], "");
    }

    #[test]
    fn alignment_text() {
        assert_eq!(leftmost_alignment("align", "assign").unwrap(), "2\na l - i g n\na s s i g n");
    }

    #[test]
    fn neighborhood_members() {
        let n = neighborhood("aaaa", 1, "ab", "super-condensed").unwrap();
        assert_eq!(n.count(), "3");
        assert_eq!(n.words(), ["aaa", "aaba", "abaa"]);
    }
}
