//! APX and TGF framework formats, and extension output in ICCMA and JSON
//! styles.

use std::fmt;
use std::hash::Hasher;

use fnv::FnvHasher;
use serde::Serialize;

use crate::af::{ArgumentationFramework, ExtensionSet, MAX_ARGUMENTS};
use crate::error::{Error, Result};

/// Separator line between frameworks in a multi-framework APX file.
pub const CORPUS_SEPARATOR: &str = "%---";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// A located parser message. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub severity: Severity,
}

impl Diagnostic {
    fn error(line: usize, column: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            line,
            column,
            message: message.into(),
            severity: Severity::Error,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {level}: {}", self.line, self.column, self.message)
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Accumulates arguments and attacks during parsing.
struct Builder {
    names: Vec<String>,
    attacks: Vec<(usize, usize)>,
    diagnostics: Vec<Diagnostic>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            attacks: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    fn fail(&mut self, line: usize, column: usize, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::error(line, column, message));
    }

    fn declare(&mut self, name: &str, line: usize, column: usize) {
        if !is_name(name) {
            self.fail(line, column, format!("invalid argument name `{name}`"));
        } else if self.names.iter().any(|n| n == name) {
            self.fail(line, column, format!("duplicate argument `{name}`"));
        } else if self.names.len() == MAX_ARGUMENTS {
            self.fail(line, column, format!("more than {MAX_ARGUMENTS} arguments"));
        } else {
            self.names.push(name.to_string());
        }
    }

    fn attack(&mut self, from: &str, to: &str, line: usize, column: usize) {
        let lookup = |name: &str, this: &mut Self| match this.names.iter().position(|n| n == name) {
            Some(i) => Some(i),
            None => {
                this.fail(line, column, format!("undeclared argument `{name}`"));
                None
            }
        };
        let from = lookup(from, self);
        let to = lookup(to, self);
        if let (Some(i), Some(j)) = (from, to) {
            self.attacks.push((i, j));
        }
    }

    fn finish(self) -> Result<ArgumentationFramework> {
        if !self.diagnostics.is_empty() {
            return Err(Error::Parse(self.diagnostics));
        }
        let mut af = ArgumentationFramework::from_attacks(self.names.len(), self.attacks)?;
        af.set_labels(self.names)?;
        Ok(af)
    }
}

/// Parses ASPARTIX `arg(x).` / `att(x,y).` statements. Statements may share
/// a line; `%` starts a comment. Declaration order fixes argument indices.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut builder = Builder::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let code = raw.split('%').next().unwrap_or("");
        let mut offset = 0;
        let mut rest = code;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let column = offset + 1;
            let Some(end) = trimmed.find('.') else {
                builder.fail(line_no, column, "statement is missing its terminating `.`");
                break;
            };
            parse_apx_statement(&mut builder, trimmed[..end].trim_end(), line_no, column);
            offset += end + 1;
            rest = &trimmed[end + 1..];
        }
    }
    builder.finish()
}

fn parse_apx_statement(builder: &mut Builder, stmt: &str, line: usize, column: usize) {
    let parsed = stmt
        .split_once('(')
        .and_then(|(head, tail)| tail.strip_suffix(')').map(|body| (head.trim(), body)));
    let Some((head, body)) = parsed else {
        builder.fail(line, column, format!("expected `arg(..)` or `att(..)`, found `{stmt}`"));
        return;
    };
    match head {
        "arg" => builder.declare(body.trim(), line, column),
        "att" => match body.split_once(',') {
            Some((from, to)) if is_name(from.trim()) && is_name(to.trim()) => {
                builder.attack(from.trim(), to.trim(), line, column)
            }
            _ => builder.fail(line, column, format!("malformed attack `{stmt}`")),
        },
        other => builder.fail(line, column, format!("unknown predicate `{other}`")),
    }
}

/// Parses raw bytes, reporting invalid UTF-8 as a diagnostic.
pub fn parse_apx_bytes(bytes: &[u8]) -> Result<ArgumentationFramework> {
    parse_apx(utf8(bytes)?)
}

pub fn parse_tgf_bytes(bytes: &[u8]) -> Result<ArgumentationFramework> {
    parse_tgf(utf8(bytes)?)
}

fn utf8(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Parse(vec![Diagnostic::error(line, column, "input is not valid UTF-8")])
    })
}

/// Parses trivial graph format: one node id per line, a `#` line, then one
/// `src dst` edge per line.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut builder = Builder::new();
    let mut in_edges = false;
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        let column = raw.len() - raw.trim_start().len() + 1;
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                builder.fail(line_no, column, "second `#` separator");
            }
            in_edges = true;
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (in_edges, fields.as_slice()) {
            (false, [name]) => builder.declare(name, line_no, column),
            (true, [from, to]) => builder.attack(from, to, line_no, column),
            (false, _) => builder.fail(line_no, column, format!("expected a single node id, found `{line}`")),
            (true, _) => builder.fail(line_no, column, format!("expected `src dst`, found `{line}`")),
        }
    }
    if !in_edges {
        builder.fail(text.lines().count().max(1), 1, "missing `#` separator");
    }
    builder.finish()
}

pub fn write_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in af.names() {
        out.push_str(&format!("arg({name}).\n"));
    }
    for (i, j) in af.attack_pairs() {
        out.push_str(&format!("att({},{}).\n", af.name(i), af.name(j)));
    }
    out
}

pub fn write_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for name in af.names() {
        out.push_str(&name);
        out.push('\n');
    }
    out.push_str("#\n");
    for (i, j) in af.attack_pairs() {
        out.push_str(&format!("{} {}\n", af.name(i), af.name(j)));
    }
    out
}

/// Splits an APX corpus on `%---` lines and parses each block.
pub fn parse_apx_corpus(text: &str) -> Result<Vec<ArgumentationFramework>> {
    let mut blocks = vec![String::new()];
    let mut starts = vec![0usize];
    for (line_no, line) in text.lines().enumerate() {
        if line.trim() == CORPUS_SEPARATOR {
            blocks.push(String::new());
            starts.push(line_no + 1);
        } else {
            let block = blocks.last_mut().expect("nonempty");
            block.push_str(line);
            block.push('\n');
        }
    }
    if text.lines().next().map(str::trim) == Some(CORPUS_SEPARATOR) {
        blocks.remove(0);
        starts.remove(0);
    }
    if blocks.len() > 1 && blocks.last().is_some_and(|b| b.trim().is_empty()) {
        blocks.pop();
    }
    blocks
        .iter()
        .zip(starts)
        .map(|(block, start)| {
            parse_apx(block).map_err(|e| match e {
                Error::Parse(diags) => Error::Parse(
                    diags
                        .into_iter()
                        .map(|d| Diagnostic { line: d.line + start, ..d })
                        .collect(),
                ),
                other => other,
            })
        })
        .collect()
}

pub fn write_apx_corpus<'a>(afs: impl IntoIterator<Item = &'a ArgumentationFramework>) -> String {
    afs.into_iter()
        .map(write_apx)
        .collect::<Vec<_>>()
        .join(&format!("{CORPUS_SEPARATOR}\n"))
}

/// FNV-1a hash of the framework's APX text, as 16 hex digits.
pub fn af_hash(af: &ArgumentationFramework) -> String {
    let mut hasher = FnvHasher::default();
    hasher.write(write_apx(af).as_bytes());
    format!("{:016x}", hasher.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputStyle {
    Iccma,
    Json,
}

#[derive(Serialize)]
struct JsonExtensions<'a> {
    semantics: &'a str,
    af_hash: String,
    extensions: Vec<Vec<String>>,
}

/// Renders extensions with argument names. The ICCMA style prints `NO` for
/// an empty collection, which is distinct from `[[]]`.
pub fn write_extensions(
    af: &ArgumentationFramework,
    extensions: &ExtensionSet,
    semantics: &str,
    style: OutputStyle,
) -> String {
    match style {
        OutputStyle::Iccma => {
            if extensions.is_empty() {
                return "NO".to_string();
            }
            let inner: Vec<String> = extensions
                .iter()
                .map(|e| format!("[{}]", af.set_names(e).join(",")))
                .collect();
            format!("[{}]", inner.join(","))
        }
        OutputStyle::Json => serde_json::to_string(&JsonExtensions {
            semantics,
            af_hash: af_hash(af),
            extensions: extensions.iter().map(|e| af.set_names(e)).collect(),
        })
        .expect("plain data serialises"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::fixtures::*;
    use crate::vacuous::vac_extensions;
    use proptest::prelude::*;

    fn diagnostics(err: Error) -> Vec<Diagnostic> {
        match err {
            Error::Parse(d) => d,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn apx_single_line() {
        let af = parse_apx("arg(a). arg(b). att(a,b). att(a,a).").unwrap();
        assert_eq!(af, f5());
    }

    #[test]
    fn apx_comments_and_blank_lines() {
        let af = parse_apx("% header\n\narg(a).\narg(b). % trailing\natt( a , b ).\n").unwrap();
        assert_eq!(af, ArgumentationFramework::from_names(&["a", "b"], &[("a", "b")]).unwrap());
    }

    #[test]
    fn apx_errors() {
        let d = diagnostics(parse_apx("att(a,b).").unwrap_err());
        assert_eq!(d.len(), 2);
        assert!(d[0].message.contains("undeclared"));
        assert_eq!((d[0].line, d[0].column), (1, 1));

        let d = diagnostics(parse_apx("arg(a).\n  arg(a).").unwrap_err());
        assert!(d[0].message.contains("duplicate"));
        assert_eq!((d[0].line, d[0].column), (2, 3));

        for bad in ["arg(a)", "arg(a b).", "foo(a).", "att(a).", "arg(a-b).", "arg(é)."] {
            assert!(parse_apx(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn tgf_examples() {
        assert_eq!(parse_tgf("a\nb\n#\na b\nb a\n").unwrap(), f6());
        let single = parse_tgf("a\n#\n").unwrap();
        assert_eq!((single.len(), single.attack_count()), (1, 0));
        assert!(parse_tgf("a\na b\n#\n").is_err());
        assert!(parse_tgf("a\nb\n").is_err());
        assert!(parse_tgf("a\n#\na c\n").is_err());
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, af) in all() {
            assert_eq!(parse_apx(&write_apx(&af)).unwrap(), af, "{name}");
            assert_eq!(parse_tgf(&write_tgf(&af)).unwrap(), af, "{name}");
        }
        let text = write_apx(&f1());
        let tokens = |s: &str| s.split_whitespace().collect::<String>();
        assert_eq!(tokens(&write_apx(&parse_apx(&text).unwrap())), tokens(&text));
    }

    #[test]
    fn corpus_blocks() {
        let afs: Vec<_> = all().into_iter().map(|(_, af)| af).collect();
        let text = write_apx_corpus(&afs);
        assert_eq!(parse_apx_corpus(&text).unwrap(), afs);
        let err = diagnostics(parse_apx_corpus("arg(a).\n%---\narg(b).\natt(b,c).\n").unwrap_err());
        assert_eq!(err[0].line, 4);
    }

    #[test]
    fn iccma_output() {
        let f1 = f1();
        let ud = vac_extensions(&f1, &"ud".parse().unwrap()).unwrap();
        assert_eq!(write_extensions(&f1, &ud, "ud", OutputStyle::Iccma), "[[],[d]]");
        let f3 = f3();
        let stb = vac_extensions(&f3, &"stb".parse().unwrap()).unwrap();
        assert_eq!(write_extensions(&f3, &stb, "stb", OutputStyle::Iccma), "NO");
        let empty = ArgumentationFramework::empty();
        let only = ExtensionSet::only_empty();
        assert_eq!(write_extensions(&empty, &only, "pr", OutputStyle::Iccma), "[[]]");
    }

    #[test]
    fn json_output() {
        let f1 = f1();
        let ud = vac_extensions(&f1, &"ud".parse().unwrap()).unwrap();
        let json: serde_json::Value =
            serde_json::from_str(&write_extensions(&f1, &ud, "ud", OutputStyle::Json)).unwrap();
        assert_eq!(json["semantics"], "ud");
        assert_eq!(json["extensions"], serde_json::json!([[], ["d"]]));
        assert_eq!(json["af_hash"].as_str().unwrap().len(), 16);
    }

    proptest! {
        #[test]
        fn parsers_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..200)) {
            let _ = parse_apx_bytes(&bytes);
            let _ = parse_tgf_bytes(&bytes);
            let _ = parse_apx_corpus(&String::from_utf8_lossy(&bytes));
        }
    }
}
