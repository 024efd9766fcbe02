//! Tokenizer for Bithoven source text.
//!
//! Whitespace and `// …` line comments are trivia. String literals are
//! double-quoted, single-line, with `\"`, `\\`, `\n`, `\t`, `\r` and `\0`
//! escapes. Integer literals are bare decimal digit runs; a leading `-` is
//! resolved at parse level.

use crate::ast::Location;
use crate::diag::{Diagnostic, DiagnosticKind};

/// Words with fixed meaning that can never be used as variable names.
/// Pragma vocabulary (`bithoven`, `version`, `target`, target and type
/// names) stays contextual.
const RESERVED: &[&str] = &[
    "pragma", "if", "else", "verify", "older", "after", "return", "checksig", "true", "false",
    "max", "min", "negate", "abs", "sha256", "ripemd160", "len",
];

pub fn is_reserved(word: &str) -> bool {
    RESERVED.contains(&word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Keyword,
    Identifier,
    Integer,
    /// Decoded string contents live in [`Token::text`]; the lexeme keeps the
    /// quotes.
    Str,
    Operator,
    Punctuation,
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// Exact source slice of the token.
    pub lexeme: String,
    /// Token payload: unescaped contents for strings, the lexeme otherwise.
    pub text: String,
    pub loc: Location,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    column: u32,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src: src.as_bytes(), pos: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.column = 1;
        } else if b & 0xc0 != 0x80 {
            // count characters, not UTF-8 continuation bytes
            self.column += 1;
        }
        Some(b)
    }

    fn here(&self) -> (usize, u32, u32) {
        (self.pos, self.line, self.column)
    }
}

pub fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut cur = Cursor::new(source);
    let mut tokens = Vec::new();

    loop {
        // skip trivia
        loop {
            match cur.peek() {
                Some(b) if (b as char).is_ascii_whitespace() => {
                    cur.bump();
                }
                Some(b'/') if cur.peek_at(1) == Some(b'/') => {
                    while let Some(b) = cur.peek() {
                        if b == b'\n' {
                            break;
                        }
                        cur.bump();
                    }
                }
                _ => break,
            }
        }

        let (start, line, column) = cur.here();
        let Some(b) = cur.peek() else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                lexeme: String::new(),
                text: String::new(),
                loc: Location::new(start, start, line, column),
            });
            return Ok(tokens);
        };

        let token = match b {
            b'0'..=b'9' => {
                while matches!(cur.peek(), Some(b'0'..=b'9')) {
                    cur.bump();
                }
                let lexeme = &source[start..cur.pos];
                Token {
                    kind: TokenKind::Integer,
                    lexeme: lexeme.to_string(),
                    text: lexeme.to_string(),
                    loc: Location::new(start, cur.pos, line, column),
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while matches!(cur.peek(), Some(b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'_')) {
                    cur.bump();
                }
                let lexeme = &source[start..cur.pos];
                let kind = if is_reserved(lexeme) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
                Token {
                    kind,
                    lexeme: lexeme.to_string(),
                    text: lexeme.to_string(),
                    loc: Location::new(start, cur.pos, line, column),
                }
            }
            b'"' => {
                cur.bump();
                let mut text = String::new();
                loop {
                    match cur.peek() {
                        None | Some(b'\n') => {
                            return Err(Diagnostic::new(
                                DiagnosticKind::ParseError,
                                Location::new(start, cur.pos, line, column),
                                "Unterminated string literal.",
                            ));
                        }
                        Some(b'"') => {
                            cur.bump();
                            break;
                        }
                        Some(b'\\') => {
                            cur.bump();
                            let esc = cur.bump();
                            match esc {
                                Some(b'"') => text.push('"'),
                                Some(b'\\') => text.push('\\'),
                                Some(b'n') => text.push('\n'),
                                Some(b't') => text.push('\t'),
                                Some(b'r') => text.push('\r'),
                                Some(b'0') => text.push('\0'),
                                _ => {
                                    return Err(Diagnostic::new(
                                        DiagnosticKind::ParseError,
                                        Location::new(start, cur.pos, line, column),
                                        "Unknown escape sequence in string literal.",
                                    ));
                                }
                            }
                        }
                        Some(_) => {
                            let b0 = cur.bump().unwrap();
                            // reassemble multi-byte characters verbatim
                            let mut buf = vec![b0];
                            while matches!(cur.peek(), Some(c) if c & 0xc0 == 0x80) {
                                buf.push(cur.bump().unwrap());
                            }
                            text.push_str(std::str::from_utf8(&buf).unwrap_or("\u{fffd}"));
                        }
                    }
                }
                Token {
                    kind: TokenKind::Str,
                    lexeme: source[start..cur.pos].to_string(),
                    text,
                    loc: Location::new(start, cur.pos, line, column),
                }
            }
            b'+' | b'-' | b'=' | b'!' | b'<' | b'>' | b'&' | b'|' => {
                cur.bump();
                let two = cur.peek().map(|next| {
                    matches!(
                        (b, next),
                        (b'+', b'+')
                            | (b'-', b'-')
                            | (b'=', b'=')
                            | (b'!', b'=')
                            | (b'<', b'=')
                            | (b'>', b'=')
                            | (b'&', b'&')
                            | (b'|', b'|')
                    )
                });
                if two == Some(true) {
                    cur.bump();
                }
                let lexeme = &source[start..cur.pos];
                // `=`, `&`, `|` only exist doubled
                if matches!(lexeme, "=" | "&" | "|") {
                    return Err(Diagnostic::new(
                        DiagnosticKind::ParseError,
                        Location::new(start, cur.pos, line, column),
                        format!("Illegal character: \"{}\".", lexeme),
                    ));
                }
                Token {
                    kind: TokenKind::Operator,
                    lexeme: lexeme.to_string(),
                    text: lexeme.to_string(),
                    loc: Location::new(start, cur.pos, line, column),
                }
            }
            b'(' | b')' | b'{' | b'}' | b'[' | b']' | b',' | b';' | b':' | b'.' => {
                cur.bump();
                let lexeme = &source[start..cur.pos];
                Token {
                    kind: TokenKind::Punctuation,
                    lexeme: lexeme.to_string(),
                    text: lexeme.to_string(),
                    loc: Location::new(start, cur.pos, line, column),
                }
            }
            other => {
                return Err(Diagnostic::new(
                    DiagnosticKind::ParseError,
                    Location::new(start, start + 1, line, column),
                    format!("Illegal character: \"{}\".", other as char),
                ));
            }
        };
        tokens.push(token);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_locktime_statement() {
        let tokens = tokenize("older 1000;").unwrap();
        assert_eq!(tokens.len(), 4); // older, 1000, ;, eof
        assert_eq!(tokens[0].kind, TokenKind::Keyword);
        assert_eq!(tokens[0].lexeme, "older");
        assert_eq!(tokens[1].kind, TokenKind::Integer);
        assert_eq!(tokens[1].lexeme, "1000");
        assert_eq!(tokens[2].kind, TokenKind::Punctuation);
        assert_eq!(tokens[2].lexeme, ";");
    }

    #[test]
    fn comments_are_trivia() {
        let tokens = tokenize("// comment\nreturn true;").unwrap();
        let kinds: Vec<_> = tokens.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![TokenKind::Keyword, TokenKind::Keyword, TokenKind::Punctuation, TokenKind::Eof]
        );
        assert_eq!(tokens[0].loc.line, 2);
        assert_eq!(tokens[0].loc.column, 1);
    }

    #[test]
    fn unterminated_string_is_a_parse_error() {
        let err = tokenize("\"0245").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::ParseError);
    }

    #[test]
    fn tracks_lines_and_columns() {
        let tokens = tokenize("a\n  bb\n   c").unwrap();
        assert_eq!((tokens[0].loc.line, tokens[0].loc.column), (1, 1));
        assert_eq!((tokens[1].loc.line, tokens[1].loc.column), (2, 3));
        assert_eq!((tokens[2].loc.line, tokens[2].loc.column), (3, 4));
    }

    #[test]
    fn byte_offsets_index_the_source() {
        let src = "verify (x);";
        let tokens = tokenize(src).unwrap();
        for t in &tokens {
            if t.kind != TokenKind::Eof {
                assert_eq!(&src[t.loc.start..t.loc.end], t.lexeme);
            }
        }
    }

    #[test]
    fn double_operators_use_maximal_munch() {
        let tokens = tokenize("-- - ++ + <= < >= > == != && || !").unwrap();
        let lexemes: Vec<_> =
            tokens.iter().filter(|t| t.kind != TokenKind::Eof).map(|t| t.lexeme.as_str()).collect();
        assert_eq!(
            lexemes,
            vec!["--", "-", "++", "+", "<=", "<", ">=", ">", "==", "!=", "&&", "||", "!"]
        );
    }

    #[test]
    fn lone_ampersand_is_illegal() {
        assert!(tokenize("a & b").is_err());
    }

    #[test]
    fn string_escapes() {
        let tokens = tokenize(r#""a\"b\\c""#).unwrap();
        assert_eq!(tokens[0].text, "a\"b\\c");
    }
}
