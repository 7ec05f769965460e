use std::fmt::Write as _;

use coxpoly::report::IdentityReport;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

/// One verification outcome, as emitted in the JSON report stream.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub suite: String,
    pub case: String,
    pub holds: bool,
    pub residual_terms: usize,
    pub elapsed_ms: Option<u64>,
}

/// A computed quantity: JSON fields plus its text and LaTeX renderings.
#[derive(Debug, Clone)]
pub struct Computed {
    pub kind: &'static str,
    pub fields: Vec<(&'static str, Value)>,
    pub text: String,
    pub latex: Option<String>,
}

impl Computed {
    pub fn new(kind: &'static str, text: impl Into<String>) -> Self {
        Computed {
            kind,
            fields: Vec::new(),
            text: text.into(),
            latex: None,
        }
    }

    pub fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn latex(mut self, latex: impl Into<String>) -> Self {
        self.latex = Some(latex.into());
        self
    }

    /// Polynomial value: text is the canonical form, LaTeX derived from it.
    pub fn poly(kind: &'static str, label: Option<String>, poly: String) -> Self {
        let text = match &label {
            Some(l) => format!("{l}: {poly}"),
            None => poly.clone(),
        };
        let tex = to_latex(&poly);
        let tex = match &label {
            Some(l) => format!("\\text{{{l}}}: {tex}"),
            None => tex,
        };
        Computed::new(kind, text).latex(format!("\\[ {tex} \\]")).field("poly", poly)
    }
}

#[derive(Debug, Clone)]
pub enum Item {
    Record(Record),
    Computed(Computed),
}

#[derive(Debug, Default)]
pub struct Output {
    pub items: Vec<Item>,
}

impl Output {
    pub fn push(&mut self, c: Computed) {
        self.items.push(Item::Computed(c));
    }

    pub fn record(&mut self, r: Record) {
        self.items.push(Item::Record(r));
    }

    pub fn records(&self) -> impl Iterator<Item = &Record> {
        self.items.iter().filter_map(|i| match i {
            Item::Record(r) => Some(r),
            Item::Computed(_) => None,
        })
    }

    pub fn all_hold(&self) -> bool {
        self.records().all(|r| r.holds)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Latex => self.latex(),
            Format::Text | Format::Eval => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            match item {
                Item::Computed(c) => writeln!(out, "{}", c.text).unwrap(),
                Item::Record(r) => {
                    let status = if r.holds { "PASS" } else { "FAIL" };
                    write!(out, "{status}  {}  {}", r.suite, r.case).unwrap();
                    if !r.holds {
                        write!(out, "  (residual {} terms)", r.residual_terms).unwrap();
                    }
                    if let Some(ms) = r.elapsed_ms {
                        write!(out, "  [{ms} ms]").unwrap();
                    }
                    out.push('\n');
                }
            }
        }
        let total = self.records().count();
        if total > 0 {
            let failed = self.records().filter(|r| !r.holds).count();
            writeln!(out, "{total} checks, {failed} failed").unwrap();
        }
        out
    }

    fn json(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let v = match item {
                Item::Record(r) => serde_json::to_string(r).unwrap(),
                Item::Computed(c) => {
                    let mut m = Map::new();
                    m.insert("kind".into(), Value::from(c.kind));
                    for (k, v) in &c.fields {
                        m.insert((*k).into(), v.clone());
                    }
                    Value::Object(m).to_string()
                }
            };
            writeln!(out, "{v}").unwrap();
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = String::new();
        let mut in_table = false;
        for item in &self.items {
            match item {
                Item::Computed(c) => {
                    if in_table {
                        out.push_str("\\end{tabular}\n");
                        in_table = false;
                    }
                    let tex = c.latex.clone().unwrap_or_else(|| format!("\\begin{{verbatim}}\n{}\n\\end{{verbatim}}", c.text));
                    writeln!(out, "{tex}").unwrap();
                }
                Item::Record(r) => {
                    if !in_table {
                        out.push_str("\\begin{tabular}{llcr}\n");
                        in_table = true;
                    }
                    let mark = if r.holds { "\\checkmark" } else { "$\\times$" };
                    writeln!(
                        out,
                        "{} & {} & {mark} & {} \\\\",
                        escape(&r.suite),
                        escape(&r.case),
                        r.residual_terms
                    )
                    .unwrap();
                }
            }
        }
        if in_table {
            out.push_str("\\end{tabular}\n");
        }
        out
    }
}

pub fn record(suite: &str, target: &str, r: &IdentityReport, elapsed_ms: Option<u64>) -> Record {
    Record {
        suite: suite.into(),
        case: format!("{target}: {}", r.name),
        holds: r.holds,
        residual_terms: r.residual_terms(),
        elapsed_ms,
    }
}

fn escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            _ => out.push(ch),
        }
    }
    out
}

/// Canonical polynomial text (`3*q^-2 - x*y^2`, `(a) / (b)`) to LaTeX.
pub fn to_latex(text: &str) -> String {
    if let Some((num, den)) = text.split_once(") / (") {
        let num = num.trim_start_matches('(');
        let den = den.trim_end_matches(')');
        return format!("\\frac{{{}}}{{{}}}", to_latex(num), to_latex(den));
    }
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '*' => {}
            '^' => {
                out.push_str("^{");
                if chars.peek() == Some(&'-') {
                    out.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    out.push(*d);
                    chars.next();
                }
                out.push('}');
            }
            _ => out.push(ch),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_of_canonical_text() {
        assert_eq!(to_latex("q^-2 - 1 + 3*q^12"), "q^{-2} - 1 + 3q^{12}");
        assert_eq!(to_latex("x^-1*y + 2"), "x^{-1}y + 2");
        assert_eq!(to_latex("(z) / (2)"), "\\frac{z}{2}");
    }

    #[test]
    fn json_lines_are_one_object_each() {
        let mut o = Output::default();
        o.push(Computed::poly("coxeter", None, "1 + q".into()).field("diagram", "A1"));
        o.record(Record {
            suite: "s".into(),
            case: "c".into(),
            holds: false,
            residual_terms: 2,
            elapsed_ms: None,
        });
        let text = o.render(Format::Json);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], r#"{"suite":"s","case":"c","holds":false,"residual_terms":2,"elapsed_ms":null}"#);
        assert!(!o.all_hold());
    }
}
