use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownGenerator,
    MalformedExponent,
    ZeroExponent,
    UnknownVertex,
    UnknownEdge,
    DuplicateName,
    SelfPair,
    UnexpectedDirective,
    MissingHeader,
    MissingArgument,
    MalformedBasedWord,
}

impl ParseErrorKind {
    fn describe(self) -> &'static str {
        match self {
            ParseErrorKind::UnknownGenerator => "unknown generator",
            ParseErrorKind::MalformedExponent => "malformed exponent",
            ParseErrorKind::ZeroExponent => "zero exponent",
            ParseErrorKind::UnknownVertex => "unknown vertex",
            ParseErrorKind::UnknownEdge => "unknown edge",
            ParseErrorKind::DuplicateName => "duplicate name",
            ParseErrorKind::SelfPair => "generator paired with itself",
            ParseErrorKind::UnexpectedDirective => "unexpected directive",
            ParseErrorKind::MissingHeader => "missing header line",
            ParseErrorKind::MissingArgument => "missing argument",
            ParseErrorKind::MalformedBasedWord => "malformed based word",
        }
    }
}

/// A parse failure, located by (1-based) line when it comes from a file.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub token: String,
    pub line: Option<usize>,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, token: impl Into<String>) -> Self {
        ParseError {
            kind,
            token: token.into(),
            line: None,
        }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        write!(f, "{} `{}`", self.kind.describe(), self.token)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator name `{0}`")]
    UnknownName(String),
    #[error("generator `{0}` paired with itself")]
    SelfPair(String),
    #[error("generator index {index} out of range (N = {n})")]
    IndexOutOfRange { index: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PilingError {
    #[error("extraction stuck: no stack starts with a signed bead")]
    ExtractionStuck,
    #[error("bottom tile of stack {0} is blocked by a signed bead on a neighbouring stack")]
    Unrealizable(usize),
    #[error("operation requires a non-empty piling")]
    EmptyPiling,
    #[error("stack {0} does not start with a signed bead")]
    NoBottomTile(usize),
    #[error("piling is split: its support graph has {0} components")]
    SplitInput(usize),
    #[error("piling is not cyclically reduced (stack {0})")]
    NotCyclicallyReduced(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("duplicate {what} `{name}`")]
    Duplicate { what: &'static str, name: String },
    #[error("based word is not a loop: starts at {base}, ends at {end}")]
    NotALoop { base: String, end: String },
    #[error("letter {position} of the word cannot be traced from vertex {vertex}")]
    UntraceableLetter { vertex: String, position: usize },
    #[error("based cycling needs a non-empty loop")]
    EmptyLoop,
    #[error("replaying cycling events failed at event {index} from vertex {vertex}")]
    ReplayFailure { vertex: String, index: usize },
    #[error("complex fails local validation: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("input size {size} exceeds the oracle bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}
