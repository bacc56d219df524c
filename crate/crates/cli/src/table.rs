//! Minimal table emitter. Cells never need quoting: every value is a number,
//! a fixed vocabulary word, or a space-separated list of numbers.

pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    /// Left-aligned columns separated by two spaces.
    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| {
            let s: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            s.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&mut self.header.iter().copied());
        for r in &self.rows {
            out.push_str(&line(&mut r.iter().map(String::as_str)));
        }
        out
    }
}

pub fn seq_cell(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_text() {
        let mut t = Table::new(&["n", "a"]);
        t.row(vec!["2".into(), seq_cell(&[0, 1, 1])]);
        t.row(vec!["10".into(), seq_cell(&[0])]);
        assert_eq!(t.to_csv(), "n,a\n2,0 1 1\n10,0\n");
        assert_eq!(t.to_text(), "n   a\n2   0 1 1\n10  0\n");
    }
}
