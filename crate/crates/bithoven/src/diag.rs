//! The diagnostic model: every pass reports failures through [`Diagnostic`]
//! values, never by panicking. The kind set is closed.

use std::fmt;

use crate::ast::Location;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagnosticKind {
    InvalidOperation,
    TypeMismatch,
    IntegerOverflow,
    UndefinedVariable,
    VariableConsumed,
    UselessSig,
    NoSigRequired,
    NoReturn,
    UnreachableCode,
    ParseError,
    UnmatchedStackPath,
    PragmaError,
}

impl DiagnosticKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagnosticKind::InvalidOperation => "InvalidOperation",
            DiagnosticKind::TypeMismatch => "TypeMismatch",
            DiagnosticKind::IntegerOverflow => "IntegerOverflow",
            DiagnosticKind::UndefinedVariable => "UndefinedVariable",
            DiagnosticKind::VariableConsumed => "VariableConsumed",
            DiagnosticKind::UselessSig => "UselessSig",
            DiagnosticKind::NoSigRequired => "NoSigRequired",
            DiagnosticKind::NoReturn => "NoReturn",
            DiagnosticKind::UnreachableCode => "UnreachableCode",
            DiagnosticKind::ParseError => "ParseError",
            DiagnosticKind::UnmatchedStackPath => "UnmatchedStackPath",
            DiagnosticKind::PragmaError => "PragmaError",
        }
    }
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub location: Location,
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, location: Location, message: impl Into<String>) -> Self {
        Diagnostic { kind, location, message: message.into() }
    }
}

/// Renders a diagnostic in the compiler's one-line report format:
/// `Error at line L:C: Kind("message")`.
pub fn format_diagnostic(d: &Diagnostic) -> String {
    format!(
        "Error at line {}:{}: {}(\"{}\")",
        d.location.line, d.location.column, d.kind, d.message
    )
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_diagnostic(self))
    }
}

/// Sorts diagnostics into source order and drops repeats of the same kind at
/// the same location (independent passes may flag the same defect).
pub fn sort_and_dedup(mut diags: Vec<Diagnostic>) -> Vec<Diagnostic> {
    diags.sort_by_key(|d| (d.location.start, d.location.end, d.kind));
    diags.dedup_by(|a, b| a.kind == b.kind && a.location == b.location);
    diags
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loc(line: u32, column: u32) -> Location {
        Location::new(0, 1, line, column)
    }

    #[test]
    fn report_format_matches_compiler_output() {
        let d = Diagnostic::new(
            DiagnosticKind::VariableConsumed,
            loc(9, 21),
            "Consumed variable: sig_alice.",
        );
        assert_eq!(
            format_diagnostic(&d),
            "Error at line 9:21: VariableConsumed(\"Consumed variable: sig_alice.\")"
        );
    }

    #[test]
    fn report_format_trivial_template() {
        let d = Diagnostic::new(DiagnosticKind::ParseError, Location::new(0, 1, 1, 1), "x");
        assert_eq!(format_diagnostic(&d), "Error at line 1:1: ParseError(\"x\")");
    }

    #[test]
    fn undefined_variable_matches_reference_output() {
        let d = Diagnostic::new(
            DiagnosticKind::UndefinedVariable,
            loc(6, 22),
            "Undefined variable: \"sig_bob\".",
        );
        assert_eq!(
            format_diagnostic(&d),
            "Error at line 6:22: UndefinedVariable(\"Undefined variable: \"sig_bob\".\")"
        );
    }

    #[test]
    fn dedup_drops_identical_kind_and_location() {
        let a = Diagnostic::new(DiagnosticKind::IntegerOverflow, loc(6, 12), "first");
        let b = Diagnostic::new(DiagnosticKind::IntegerOverflow, loc(6, 12), "second");
        let c = Diagnostic::new(DiagnosticKind::TypeMismatch, loc(6, 12), "kept");
        let out = sort_and_dedup(vec![a.clone(), c.clone(), b]);
        assert_eq!(out.len(), 2);
        assert_eq!(out[0], a);
        assert_eq!(out[1], c);
    }
}
