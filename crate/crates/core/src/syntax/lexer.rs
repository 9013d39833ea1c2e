use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Number(String),
    Str(String),
    Bottom,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Backslash,
    Dot,
    Caret,
    At,
    Question,
    Equals,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Str(_) => "string literal".into(),
            Tok::Bottom => "`_|_`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Caret => "`^`".into(),
            Tok::At => "`@`".into(),
            Tok::Question => "`?`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Tokenises `src`; `line` and `column` offsets let callers report positions inside larger files.
pub(crate) fn tokenize(src: &str, line: usize, column: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, line, column);
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let peek = |k: usize| chars.get(i + k).copied();
        let single = |tok: Tok| Some((tok, 1usize));
        let simple = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            '[' => single(Tok::LBracket),
            ']' => single(Tok::RBracket),
            '{' => single(Tok::LBrace),
            '}' => single(Tok::RBrace),
            ',' => single(Tok::Comma),
            '.' => single(Tok::Dot),
            '^' => single(Tok::Caret),
            '@' => single(Tok::At),
            '?' => single(Tok::Question),
            '=' => single(Tok::Equals),
            '\\' if peek(1) == Some('/') => Some((Tok::Or, 2)),
            '\\' => single(Tok::Backslash),
            '/' if peek(1) == Some('\\') => Some((Tok::And, 2)),
            '-' if peek(1) == Some('>') => Some((Tok::Arrow, 2)),
            '_' if peek(1) == Some('|') && peek(2) == Some('_') => Some((Tok::Bottom, 3)),
            _ => None,
        };
        if let Some((tok, len)) = simple {
            out.push(Token {
                tok,
                line: start.0,
                column: start.1,
            });
            i += len;
            col += len;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[i..j].iter().collect()),
                line: start.0,
                column: start.1,
            });
            col += j - i;
            i = j;
        } else if c.is_ascii_digit() {
            let digits = |mut j: usize| {
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                j
            };
            let mut j = digits(i);
            if j + 1 < chars.len() && (chars[j] == '.' || chars[j] == '/') && chars[j + 1].is_ascii_digit() {
                j = digits(j + 1);
            }
            out.push(Token {
                tok: Tok::Number(chars[i..j].iter().collect()),
                line: start.0,
                column: start.1,
            });
            col += j - i;
            i = j;
        } else if c == '"' {
            let mut s = String::new();
            let mut j = i + 1;
            loop {
                match chars.get(j) {
                    None | Some('\n') => {
                        return Err(ParseError::new(start.0, start.1, "unterminated string literal"))
                    }
                    Some('"') => break,
                    Some('\\') => {
                        match chars.get(j + 1) {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some('n') => s.push('\n'),
                            _ => {
                                return Err(ParseError::new(line, col + (j - i), "invalid escape in string literal"))
                            }
                        }
                        j += 2;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        j += 1;
                    }
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                line: start.0,
                column: start.1,
            });
            col += j + 1 - i;
            i = j + 1;
        } else {
            return Err(ParseError::new(start.0, start.1, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}
