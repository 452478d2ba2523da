//! Sequence sets: loading from line-oriented and FASTA files, prefix
//! selection, and a deterministic synthetic message generator.
//!
//! Every sequence is an arbitrary non-empty byte string. Its position in the
//! corpus doubles as its colour in the suffix tree.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-empty byte string with its index in the owning corpus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    id: usize,
    bytes: Vec<u8>,
}

impl Sequence {
    pub fn new(id: usize, bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptySequence(id));
        }
        Ok(Sequence { id, bytes })
    }

    /// Index in the corpus; also the sequence's colour.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.bytes)
    }
}

impl AsRef<[u8]> for Sequence {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

/// How each line of a message file is turned into bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineMode {
    /// The line's bytes verbatim, terminator stripped.
    Raw,
    /// Pairs of hex digits, for binary traces.
    Hex,
}

/// An ordered set of sequences with colours `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    sequences: Vec<Sequence>,
    source: String,
    /// 1-based line where each sequence starts; empty for in-memory corpora.
    lines: Vec<usize>,
}

impl Corpus {
    /// Builds a corpus from raw byte strings, assigning ids in order.
    pub fn from_bytes<I, B>(items: I, source: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: Into<Vec<u8>>,
    {
        let sequences = items
            .into_iter()
            .enumerate()
            .map(|(id, b)| Sequence::new(id, b.into()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus {
            sequences,
            source: source.into(),
            lines: Vec::new(),
        })
    }

    pub fn from_strs(items: &[&str]) -> Result<Self> {
        Self::from_bytes(items.iter().map(|s| s.as_bytes().to_vec()), "inline")
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.sequences
    }

    pub fn get(&self, id: usize) -> Option<&Sequence> {
        self.sequences.get(id)
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn total_len(&self) -> usize {
        self.sequences.iter().map(Sequence::len).sum()
    }

    /// Where the corpus came from (file path or generator parameters).
    pub fn source(&self) -> &str {
        &self.source
    }

    /// Line of the source file where sequence `id` starts, if file backed.
    pub fn line_of(&self, id: usize) -> Option<usize> {
        self.lines.get(id).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sequence> {
        self.sequences.iter()
    }

    /// Fails unless the corpus holds at least `required` sequences.
    pub fn require(&self, required: usize) -> Result<()> {
        if self.len() < required {
            return Err(Error::TooFewSequences {
                required,
                actual: self.len(),
            });
        }
        Ok(())
    }

    /// The first `n` sequences.
    pub fn take_prefix(&self, n: usize) -> Result<Corpus> {
        if n == 0 || n > self.len() {
            return Err(Error::PrefixOutOfRange {
                requested: n,
                available: self.len(),
            });
        }
        let sequences = self.sequences[..n].to_vec();
        debug_assert!(sequences.iter().enumerate().all(|(i, s)| s.id == i));
        Ok(Corpus {
            sequences,
            source: format!("{} (first {n})", self.source),
            lines: self.lines.iter().take(n).copied().collect(),
        })
    }

    /// One line per sequence, hex encoded. Reloads with [`LineMode::Hex`].
    pub fn to_hex_lines(&self) -> String {
        let mut out = String::with_capacity(self.total_len() * 2 + self.len());
        for s in &self.sequences {
            out.push_str(&s.to_hex());
            out.push('\n');
        }
        out
    }
}

impl<'a> IntoIterator for &'a Corpus {
    type Item = &'a Sequence;
    type IntoIter = std::slice::Iter<'a, Sequence>;

    fn into_iter(self) -> Self::IntoIter {
        self.sequences.iter()
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads one sequence per non-empty line.
pub fn load_lines(path: impl AsRef<Path>, mode: LineMode) -> Result<Corpus> {
    let path = path.as_ref();
    let data = read(path)?;
    parse_lines(&data, mode, path)
}

/// Parses the contents of a line file; `path` is only used in messages.
pub fn parse_lines(data: &[u8], mode: LineMode, path: &Path) -> Result<Corpus> {
    let mut sequences = Vec::new();
    let mut lines = Vec::new();
    for (idx, line) in data.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let bytes = match mode {
            LineMode::Raw => line.to_vec(),
            LineMode::Hex => hex::decode(line).map_err(|e| Error::Malformed {
                path: path.to_path_buf(),
                line: idx + 1,
                reason: format!("bad hex line: {e}"),
            })?,
        };
        let id = sequences.len();
        sequences.push(Sequence { id, bytes });
        lines.push(idx + 1);
    }
    if sequences.is_empty() {
        return Err(Error::EmptyInput {
            path: path.to_path_buf(),
        });
    }
    Ok(Corpus {
        sequences,
        source: path.display().to_string(),
        lines,
    })
}

/// Loads a FASTA file, one sequence per record. With `truncate = Some(k)`
/// each record keeps only its first `k` symbols.
pub fn load_fasta(path: impl AsRef<Path>, truncate: Option<usize>) -> Result<Corpus> {
    let path = path.as_ref();
    let data = read(path)?;
    parse_fasta(&data, truncate, path)
}

pub fn parse_fasta(data: &[u8], truncate: Option<usize>, path: &Path) -> Result<Corpus> {
    let malformed = |line: usize, reason: &str| Error::Malformed {
        path: path.to_path_buf(),
        line,
        reason: reason.to_string(),
    };

    let mut records: Vec<(usize, Vec<u8>)> = Vec::new();
    for (idx, line) in data.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() || line.starts_with(b";") {
            continue;
        }
        if line.starts_with(b">") {
            if let Some((header_line, body)) = records.last() {
                if body.is_empty() {
                    return Err(malformed(*header_line, "record has no sequence data"));
                }
            }
            records.push((idx + 1, Vec::new()));
        } else {
            let Some((_, body)) = records.last_mut() else {
                return Err(malformed(idx + 1, "sequence data before first '>' header"));
            };
            body.extend(line.iter().filter(|b| !b.is_ascii_whitespace()));
        }
    }
    match records.last() {
        None => {
            return Err(Error::EmptyInput {
                path: path.to_path_buf(),
            })
        }
        Some((line, body)) if body.is_empty() => {
            return Err(malformed(*line, "record has no sequence data"))
        }
        _ => {}
    }

    let lines = records.iter().map(|&(line, _)| line).collect();
    let sequences = records
        .into_iter()
        .enumerate()
        .map(|(id, (_, mut bytes))| {
            if let Some(k) = truncate {
                bytes.truncate(k.max(1));
            }
            Sequence { id, bytes }
        })
        .collect();
    Ok(Corpus {
        sequences,
        source: path.display().to_string(),
        lines,
    })
}

/// Loads a corpus and optionally keeps only its first `n` sequences.
pub fn load(path: &Path, format: InputFormat, n: Option<usize>) -> Result<Corpus> {
    let corpus = match format {
        InputFormat::Raw => load_lines(path, LineMode::Raw)?,
        InputFormat::Hex => load_lines(path, LineMode::Hex)?,
        InputFormat::Fasta => load_fasta(path, None)?,
    };
    match n {
        Some(n) => corpus.take_prefix(n),
        None => Ok(corpus),
    }
}

/// Input file formats understood by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Raw,
    Hex,
    Fasta,
}

/// Shapes of synthetic message corpora.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Template {
    /// Comma separated `key:value` records in braces, LDAP-modify flavoured.
    LdapLike,
    /// Space padded fixed-length records (surname, given name, area code, phone).
    FixedWidth,
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Template::LdapLike => "ldap_like",
            Template::FixedWidth => "fixed_width",
        })
    }
}

impl FromStr for Template {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ldap_like" | "ldap-like" => Ok(Template::LdapLike),
            "fixed_width" | "fixed-width" => Ok(Template::FixedWidth),
            other => Err(format!("unknown template '{other}'")),
        }
    }
}

const SURNAMES: &[&str] = &[
    "Smith",
    "Miller",
    "Wilson",
    "Mandile",
    "Schneider",
    "Garufi",
    "Hoogland",
    "Lindall",
    "Fern",
    "Turner",
    "William",
    "Nguyen",
    "Okafor",
    "Petrov",
    "Haddad",
    "Kowalski",
    "Tanaka",
    "Moreau",
    "Rossi",
    "Jensen",
    "Silva",
    "Brennan",
    "Abbott",
    "Quinlan",
];

const GIVEN_NAMES: &[&str] = &[
    "Meaghan", "Tamar", "Fabian", "Natalie", "Samuel", "Oliver", "Priya", "Ming", "Lucas", "Amara",
    "Jonas", "Elena", "Tariq", "Chloe", "Rafael", "Ingrid", "Kofi", "Yuki", "Noor", "Declan",
];

const UNITS: &[&str] = &[
    "People",
    "Engineering",
    "Sales",
    "Research",
    "Support",
    "Finance",
];

const WORDS: &[&str] = &[
    "account",
    "updated",
    "via",
    "portal",
    "request",
    "manager",
    "approved",
    "temporary",
    "access",
    "for",
    "project",
    "review",
    "quarterly",
    "audit",
    "contact",
    "moved",
    "to",
    "building",
    "level",
    "desk",
];

/// Field width of every padded column in `fixed_width` records.
pub const FIXED_WIDTH_PAD: usize = 10;

/// Deterministic synthetic corpus; a pure function of its arguments.
pub fn generate_synthetic(template: Template, n: usize, seed: u64) -> Result<Corpus> {
    if n < 2 {
        return Err(Error::TooFewSequences {
            required: 2,
            actual: n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let messages = (0..n).map(|_| match template {
        Template::LdapLike => ldap_like_message(&mut rng),
        Template::FixedWidth => fixed_width_message(&mut rng),
    });
    Corpus::from_bytes(
        messages.collect::<Vec<_>>(),
        format!("synthetic {template} n={n} seed={seed}"),
    )
}

fn pick<'a, R: Rng>(rng: &mut R, items: &[&'a str]) -> &'a str {
    items.choose(rng).copied().unwrap_or_default()
}

fn ldap_like_message<R: Rng>(rng: &mut R) -> Vec<u8> {
    let id: u32 = rng.random_range(1..100_000);
    let sur = pick(rng, SURNAMES);
    let given = pick(rng, GIVEN_NAMES);
    let unit = pick(rng, UNITS);
    let phone: u32 = rng.random_range(0..10_000_000);
    let token: u64 = rng.random();
    let word_count = rng.random_range(5..16);
    let desc = (0..word_count)
        .map(|_| pick(rng, WORDS))
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "{{id:{id},op:M,dn:cn={given} {sur},ou={unit},dc=example,dc=com,\
         objectClass:inetOrgPerson,sn:{sur},gn:{given},\
         mail:{gl}.{sl}@example.com,tel:+61 3 9{phone:07},\
         desc:{desc},ctl:{token:016x}}}",
        gl = given.to_lowercase(),
        sl = sur.to_lowercase(),
    )
    .into_bytes()
}

fn fixed_width_message<R: Rng>(rng: &mut R) -> Vec<u8> {
    let sur = pick(rng, SURNAMES);
    let given = pick(rng, GIVEN_NAMES);
    let area: u32 = rng.random_range(100..1000);
    let phone: u32 = rng.random_range(10_000..100_000);
    let w = FIXED_WIDTH_PAD;
    format!("{sur:<w$}{given:<w$}{area:<w$}{phone}").into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_tmp(content: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content).unwrap();
        f
    }

    const SEARCH: &str = "{id:1,op:S,sn:Smith}\n{id:275,op:S,sn:Miller}\n\
        {id:13,op:S,sn:Wilson}\n{id:2273,op:S,sn:Mandile}\n{id:490,op:S,sn:Schneider}\n";

    #[test]
    fn raw_line_is_identity() {
        let f = write_tmp(b"abc\n");
        let c = load_lines(f.path(), LineMode::Raw).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.sequences()[0].bytes(), b"abc");
    }

    #[test]
    fn hex_line_decodes() {
        let f = write_tmp(b"414243\r\n");
        let c = load_lines(f.path(), LineMode::Hex).unwrap();
        assert_eq!(c.sequences()[0].bytes(), b"ABC");
    }

    #[test]
    fn search_messages_load_in_order() {
        let f = write_tmp(SEARCH.as_bytes());
        let c = load_lines(f.path(), LineMode::Raw).unwrap();
        assert_eq!(c.len(), 5);
        for (i, s) in c.iter().enumerate() {
            assert_eq!(s.id(), i);
        }
        assert_eq!(c.sequences()[3].bytes(), b"{id:2273,op:S,sn:Mandile}");
    }

    #[test]
    fn bad_hex_reports_line() {
        let f = write_tmp(b"4142\n414\n");
        match load_lines(f.path(), LineMode::Hex) {
            Err(Error::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let f = write_tmp(b"zz\n");
        assert!(matches!(
            load_lines(f.path(), LineMode::Hex),
            Err(Error::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn empty_and_missing_files_fail() {
        let f = write_tmp(b"\n\n");
        assert!(matches!(
            load_lines(f.path(), LineMode::Raw),
            Err(Error::EmptyInput { .. })
        ));
        assert!(matches!(
            load_lines("/nonexistent/definitely/not/here", LineMode::Raw),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn prefix_selection() {
        let c = Corpus::from_strs(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(c.take_prefix(5).unwrap().sequences(), c.sequences());
        let two = c.take_prefix(2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two.sequences()[1].bytes(), b"b");
        assert!(matches!(
            c.take_prefix(0),
            Err(Error::PrefixOutOfRange { .. })
        ));
        assert!(c.take_prefix(6).is_err());
    }

    #[test]
    fn source_lines_skip_blanks() {
        let c = parse_lines(b"a\n\nb\r\n\n\nc", LineMode::Raw, Path::new("x")).unwrap();
        let lines: Vec<_> = (0..4).map(|i| c.line_of(i)).collect();
        assert_eq!(lines, [Some(1), Some(3), Some(6), None]);
        assert_eq!(c.take_prefix(2).unwrap().line_of(2), None);
        let f = parse_fasta(b";c\n>a\nAC\n\n>b\nG\n", None, Path::new("x")).unwrap();
        assert_eq!((f.line_of(0), f.line_of(1)), (Some(2), Some(5)));
        assert_eq!(Corpus::from_strs(&["a"]).unwrap().line_of(0), None);
    }

    #[test]
    fn fasta_records() {
        let f = write_tmp(b">r1\nABC\n>r2\nDEF\n");
        let c = load_fasta(f.path(), None).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.sequences()[1].bytes(), b"DEF");

        let f = write_tmp(b">only\nAC\nGT\nTT\n");
        let c = load_fasta(f.path(), None).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.sequences()[0].bytes(), b"ACGTTT");
    }

    #[test]
    fn fasta_truncation() {
        let body: String = "ACDEFGHIKLMNPQRSTVWY".repeat(600);
        let f = write_tmp(format!(">human\n{body}\n").as_bytes());
        let c = load_fasta(f.path(), Some(10_000)).unwrap();
        assert_eq!(c.sequences()[0].len(), 10_000);
    }

    #[test]
    fn fasta_errors() {
        let f = write_tmp(b"ACGT\n>late\nAC\n");
        assert!(matches!(
            load_fasta(f.path(), None),
            Err(Error::Malformed { line: 1, .. })
        ));
        let f = write_tmp(b">a\n>b\nAC\n");
        assert!(matches!(
            load_fasta(f.path(), None),
            Err(Error::Malformed { line: 1, .. })
        ));
        let f = write_tmp(b"\n");
        assert!(matches!(
            load_fasta(f.path(), None),
            Err(Error::EmptyInput { .. })
        ));
    }

    #[test]
    fn synthetic_is_deterministic() {
        let a = generate_synthetic(Template::LdapLike, 2, 7).unwrap();
        let b = generate_synthetic(Template::LdapLike, 2, 7).unwrap();
        assert_eq!(a, b);
        let c = generate_synthetic(Template::LdapLike, 2, 8).unwrap();
        assert_ne!(a.sequences(), c.sequences());
    }

    #[test]
    fn ldap_like_shares_structure() {
        let c = generate_synthetic(Template::LdapLike, 5, 1).unwrap();
        for s in &c {
            let text = std::str::from_utf8(s.bytes()).unwrap();
            assert!(text.contains(",op:"), "{text}");
            assert!(text.starts_with("{id:") && text.ends_with('}'));
        }
    }

    #[test]
    fn fixed_width_records_have_equal_length() {
        let c = generate_synthetic(Template::FixedWidth, 4, 1).unwrap();
        let len = c.sequences()[0].len();
        assert!(c.iter().all(|s| s.len() == len));
        assert_eq!(len, 3 * FIXED_WIDTH_PAD + 5);
    }

    #[test]
    fn synthetic_needs_two() {
        assert!(generate_synthetic(Template::FixedWidth, 1, 0).is_err());
    }

    proptest::proptest! {
        #[test]
        fn hex_round_trip(seqs in proptest::collection::vec(
            proptest::collection::vec(proptest::num::u8::ANY, 1..40), 1..6)) {
            let c = Corpus::from_bytes(seqs.clone(), "prop").unwrap();
            let reloaded = parse_lines(c.to_hex_lines().as_bytes(), LineMode::Hex, Path::new("mem")).unwrap();
            proptest::prop_assert_eq!(reloaded.sequences(), c.sequences());
        }

        #[test]
        fn prefix_equals_loading_prefix(lines in proptest::collection::vec("[a-z{}:,]{1,12}", 1..8), k in 1usize..8) {
            let k = k.min(lines.len());
            let all = parse_lines(lines.join("\n").as_bytes(), LineMode::Raw, Path::new("mem")).unwrap();
            let first = parse_lines(lines[..k].join("\n").as_bytes(), LineMode::Raw, Path::new("mem")).unwrap();
            let prefix = all.take_prefix(k).unwrap();
            proptest::prop_assert_eq!(prefix.sequences(), first.sequences());
        }
    }
}
