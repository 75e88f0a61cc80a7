use clap::ValueEnum;
use serde_json::Value;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command's result, held in all three output shapes.
#[derive(Debug, Default)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Header first.
    pub csv: Vec<Vec<String>>,
    /// Set when a checked invariant failed; the report is still printed.
    pub falsified: Option<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

/// Builds a CSV row from anything displayable.
#[macro_export]
macro_rules! row {
    ($($x:expr),* $(,)?) => {
        vec![$($x.to_string()),*]
    };
}
