use std::fmt::Write;

use serde::Serialize;

use super::{FinitePoset, Grading};

#[derive(Serialize)]
struct JsonPoset<'a> {
    elements: &'a [String],
    covers: Vec<(usize, usize)>,
    rank: Option<Vec<usize>>,
}

impl FinitePoset {
    fn ranks_if_graded(&self) -> Option<Vec<usize>> {
        match self.grade() {
            Ok(Grading::Graded { rank }) => Some(rank),
            _ => None,
        }
    }

    /// Graphviz source with one edge per cover, drawn bottom to top. Graded
    /// posets get one `rank=same` group per level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        if let Some(rank) = self.ranks_if_graded() {
            let top = rank.iter().copied().max().unwrap_or(0);
            for r in 0..=top {
                let level: Vec<String> = (0..self.len())
                    .filter(|&i| rank[i] == r)
                    .map(|i| format!("{:?}", self.key(i)))
                    .collect();
                let _ = writeln!(out, "  {{rank=same; {};}}", level.join("; "));
            }
        } else {
            for k in self.keys() {
                let _ = writeln!(out, "  {k:?};");
            }
        }
        for (i, j) in self.cover_edges() {
            let _ = writeln!(out, "  {:?} -> {:?};", self.key(i), self.key(j));
        }
        out.push_str("}\n");
        out
    }

    /// `{"elements": [...], "covers": [[i, j], ...], "rank": [...] | null}`.
    pub fn to_json(&self) -> String {
        let doc = JsonPoset { elements: self.keys(), covers: self.cover_edges(), rank: self.ranks_if_graded() };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{antichain, boolean_algebra};

    #[test]
    fn dot_groups_levels() {
        let dot = boolean_algebra(2).to_dot();
        assert!(dot.starts_with("digraph {\n  rankdir=BT;"));
        assert!(dot.contains("{rank=same; \"{1}\"; \"{2}\";}"));
        assert!(dot.contains("\"{}\" -> \"{1}\";"));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(!antichain(2).to_dot().contains("rank=same"));
    }

    #[test]
    fn json_shape() {
        let v: serde_json::Value = serde_json::from_str(&boolean_algebra(1).to_json()).unwrap();
        assert_eq!(v["elements"], serde_json::json!(["{}", "{1}"]));
        assert_eq!(v["covers"], serde_json::json!([[0, 1]]));
        assert_eq!(v["rank"], serde_json::json!([0, 1]));
    }
}
