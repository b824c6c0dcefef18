use std::fmt::Write as _;

use super::matrix::VarietyReport;

impl VarietyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Components as nodes, one edge per line; a line meeting one component
    /// twice is a self-loop.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"X({},{})\" {{", self.m, self.n);
        for c in &self.components {
            let _ = writeln!(s, "  c{} [label=\"{}\"];", c.index, c.label(self.d));
        }
        for (line, (a, b)) in self.lines.iter().zip(&self.incidence) {
            let _ = writeln!(
                s,
                "  c{} -- c{} [label=\"{}, {}\"];",
                a.index,
                b.index,
                line.lambda(),
                line.mu()
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "m = {}, n = {}, d = {}, m' = {}, n' = {}", self.m, self.n, self.d, self.mp, self.np);
        let _ = writeln!(
            s,
            "components: {} lines + {} abelian = {}",
            self.counts.lines, self.counts.abelian, self.counts.total
        );
        let labels: Vec<String> = self.components.iter().map(|c| c.label(self.d)).collect();
        let _ = writeln!(s, "matrix rows: {}", labels.join(", "));
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "  [{}]", cells.join(", "));
        }
        s
    }
}
