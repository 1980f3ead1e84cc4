use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    Not,
    And,
    Or,
    Tri,
    NonTri,
    Nec,
    Poss,
    Turnstile,
    LParen,
    RParen,
}

impl TokenKind {
    pub(crate) fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("variable `{name}`"),
            TokenKind::Not => "`~`".into(),
            TokenKind::And => "`&`".into(),
            TokenKind::Or => "`|`".into(),
            TokenKind::Tri => "`#`".into(),
            TokenKind::NonTri => "`@`".into(),
            TokenKind::Nec => "`[]`".into(),
            TokenKind::Poss => "`<>`".into(),
            TokenKind::Turnstile => "`|-`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character.
    pub offset: usize,
}

/// Maximal-munch tokenizer. ASCII operators and their Unicode glyphs are
/// interchangeable.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, c)) = chars.next() {
        let kind = match c {
            c if c.is_whitespace() => continue,
            '~' | '¬' => TokenKind::Not,
            '&' | '∧' => TokenKind::And,
            '|' => {
                if matches!(chars.peek(), Some((_, '-'))) {
                    chars.next();
                    TokenKind::Turnstile
                } else {
                    TokenKind::Or
                }
            }
            '∨' => TokenKind::Or,
            '⊢' => TokenKind::Turnstile,
            '#' | '▲' => TokenKind::Tri,
            '@' | '▽' => TokenKind::NonTri,
            '□' => TokenKind::Nec,
            '◇' => TokenKind::Poss,
            '[' => {
                expect_char(&mut chars, ']', offset, "`[]`")?;
                TokenKind::Nec
            }
            '<' => {
                expect_char(&mut chars, '>', offset, "`<>`")?;
                TokenKind::Poss
            }
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            'a'..='z' => {
                let mut name = String::from(c);
                while let Some(&(_, next)) = chars.peek() {
                    if matches!(next, 'a'..='z' | '0'..='9' | '_') {
                        name.push(next);
                        chars.next();
                    } else {
                        break;
                    }
                }
                TokenKind::Ident(name)
            }
            other => return Err(SyntaxError::InvalidCharacter { offset, found: other }),
        };
        tokens.push(Token { kind, offset });
    }
    Ok(tokens)
}

fn expect_char(
    chars: &mut std::iter::Peekable<std::str::CharIndices<'_>>,
    expected: char,
    offset: usize,
    operator: &'static str,
) -> Result<(), SyntaxError> {
    match chars.next() {
        Some((_, c)) if c == expected => Ok(()),
        _ => Err(SyntaxError::IncompleteOperator { offset, operator }),
    }
}
