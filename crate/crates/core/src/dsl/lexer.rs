use super::{ParseError, ParseErrorKind, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Bar,
    Equals,
    Slash,
    Arrow,
    Not,
    And,
    Or,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Not => "`¬`".into(),
            Tok::And => "`∧`".into(),
            Tok::Or => "`∨`".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Tokenizes `text`, which starts at `column` (1-based, in chars) of `line`.
pub(crate) fn tokenize(text: &str, line: usize, column: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '|' => Some(Tok::Bar),
            '=' => Some(Tok::Equals),
            '/' => Some(Tok::Slash),
            '¬' => Some(Tok::Not),
            '∧' => Some(Tok::And),
            '∨' => Some(Tok::Or),
            '→' => Some(Tok::Arrow),
            _ => None,
        };
        let tok = if let Some(tok) = single {
            i += 1;
            tok
        } else if c.is_whitespace() {
            i += 1;
            continue;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            i += 2;
            Tok::Arrow
        } else if c.is_ascii_digit() || c == '.' {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            Tok::Number(chars[start..i].iter().collect())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                SourceSpan::new(line, column + start, 1),
                format!("unexpected character `{c}`"),
            ));
        };
        tokens.push(Token { tok, span: SourceSpan::new(line, column + start, i - start) });
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_carry_columns() {
        let toks = tokenize("P(H | T) = 0.9", 3, 10).unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("P".into()),
                Tok::LParen,
                Tok::Ident("H".into()),
                Tok::Bar,
                Tok::Ident("T".into()),
                Tok::RParen,
                Tok::Equals,
                Tok::Number("0.9".into()),
            ]
        );
        assert_eq!(toks[7].span, SourceSpan::new(3, 21, 3));
    }

    #[test]
    fn arrow_and_unicode_connectives() {
        let toks = tokenize("A -> ¬B ∨ C", 1, 1).unwrap();
        assert_eq!(toks[1].tok, Tok::Arrow);
        assert_eq!(toks[2].tok, Tok::Not);
        assert_eq!(toks[4].tok, Tok::Or);
    }

    #[test]
    fn stray_character_is_reported() {
        let err = tokenize("A $ B", 2, 5).unwrap_err();
        assert_eq!(err.span, SourceSpan::new(2, 7, 1));
    }
}
