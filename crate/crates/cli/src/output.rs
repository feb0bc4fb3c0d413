use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

impl Format {
    /// Significant digits for real numbers.
    pub fn digits(self) -> usize {
        match self {
            Format::Table => 6,
            Format::Csv => 15,
        }
    }
}

/// Formats `x` in plain decimal notation with `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit (9.99.. -> 10.0..).
    let digits_now = s.chars().filter(char::is_ascii_digit).collect::<String>();
    let significant = digits_now.trim_start_matches('0').len();
    if decimals > 0 && significant > digits {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

/// A rectangular result with optional trailing notes.
#[derive(Debug, Default)]
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    notes: Vec<String>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            ..Table::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// CSV for data mode (notes become `#` comment lines), aligned columns
    /// otherwise.
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                w.write_record(&self.headers).expect("write to memory");
                for row in &self.rows {
                    w.write_record(row).expect("write to memory");
                }
                let bytes = w.into_inner().expect("flush to memory");
                out.push_str(std::str::from_utf8(&bytes).expect("cells are UTF-8"));
                for note in &self.notes {
                    writeln!(out, "# {note}").unwrap();
                }
            }
            Format::Table => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(self.headers.clone())).unwrap();
                for row in &self.rows {
                    writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
                }
                for note in &self.notes {
                    writeln!(out, "{note}").unwrap();
                }
            }
        }
        out
    }
}
