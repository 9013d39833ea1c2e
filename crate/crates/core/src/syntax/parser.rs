use crate::claim::Claim;
use crate::error::{ErrorCode, ParseError, WeightError};
use crate::evidence::{Evidence, EvidenceVar, Payload};
use crate::judgement::{ActorId, Judgement};
use crate::weight::Weight;

use super::lexer::{tokenize, Tok, Token};

const KEYWORD_FORMS: [&str; 5] = ["i", "j", "app", "cases", "split"];

pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    scope: Vec<EvidenceVar>,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self, ParseError> {
        Self::at(src, 1, 1)
    }

    /// A parser whose positions are offset, for text embedded in a larger file.
    pub(crate) fn at(src: &str, line: usize, column: usize) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(src, line, column)?,
            pos: 0,
            scope: Vec::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError::new(t.line, t.column, message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        self.error_here(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn var(&mut self) -> Result<EvidenceVar, ParseError> {
        let name = self.ident()?;
        Ok(EvidenceVar::new(name).expect("lexer only produces identifiers"))
    }

    pub(crate) fn actor(&mut self) -> Result<ActorId, ParseError> {
        let name = self.ident()?;
        Ok(ActorId::new(name).expect("lexer only produces identifiers"))
    }

    pub(crate) fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub(crate) fn finish(&self) -> Result<(), ParseError> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_bracket_weight(&mut self) -> Result<Option<Weight>, ParseError> {
        if self.eat(&Tok::LBracket) {
            let w = self.weight()?;
            self.expect(Tok::RBracket)?;
            Ok(Some(w))
        } else {
            Ok(None)
        }
    }

    pub(crate) fn weight(&mut self) -> Result<Weight, ParseError> {
        let t = &self.tokens[self.pos];
        let (line, column) = (t.line, t.column);
        match t.tok.clone() {
            Tok::Number(s) => {
                self.bump();
                s.parse::<Weight>().map_err(|e| {
                    let err = ParseError::new(line, column, e.to_string());
                    match e {
                        WeightError::OutOfRange(_) => err.with_code(ErrorCode::WeightOutOfRange),
                        WeightError::Malformed(_) => err,
                    }
                })
            }
            _ => Err(self.unexpected("a weight")),
        }
    }

    pub(crate) fn ident_token(&mut self) -> Result<String, ParseError> {
        self.ident()
    }

    // claim := or ('->' claim)?
    pub(crate) fn claim(&mut self) -> Result<Claim, ParseError> {
        let lhs = self.claim_or()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.claim()?;
            Ok(Claim::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn claim_or(&mut self) -> Result<Claim, ParseError> {
        let mut lhs = self.claim_and()?;
        while self.eat(&Tok::Or) {
            lhs = Claim::or(lhs, self.claim_and()?);
        }
        Ok(lhs)
    }

    fn claim_and(&mut self) -> Result<Claim, ParseError> {
        let mut lhs = self.claim_atom()?;
        while self.eat(&Tok::And) {
            lhs = Claim::and(lhs, self.claim_atom()?);
        }
        Ok(lhs)
    }

    fn claim_atom(&mut self) -> Result<Claim, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Claim::Atomic(name))
            }
            Tok::Bottom => {
                self.bump();
                Ok(Claim::Bottom)
            }
            Tok::LParen => {
                self.bump();
                let c = self.claim()?;
                self.expect(Tok::RParen)?;
                Ok(c)
            }
            _ => Err(self.unexpected("a claim")),
        }
    }

    pub(crate) fn evidence(&mut self) -> Result<Evidence, ParseError> {
        match self.peek().clone() {
            Tok::Backslash => {
                self.bump();
                let x = self.var()?;
                self.expect(Tok::Dot)?;
                let body = self.scoped(std::slice::from_ref(&x), |p| p.evidence())?;
                Ok(Evidence::lambda(x, body))
            }
            Tok::LParen => {
                self.bump();
                let first = self.evidence()?;
                if self.eat(&Tok::Comma) {
                    let second = self.evidence()?;
                    self.expect(Tok::RParen)?;
                    Ok(Evidence::pair(first, second))
                } else {
                    self.expect(Tok::RParen)?;
                    Ok(first)
                }
            }
            Tok::Question => {
                self.bump();
                Ok(Evidence::Var(self.var()?))
            }
            Tok::Ident(name) if KEYWORD_FORMS.contains(&name.as_str()) && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let e = match name.as_str() {
                    "i" => Evidence::tag_left(self.evidence()?),
                    "j" => Evidence::tag_right(self.evidence()?),
                    "app" => {
                        let f = self.evidence()?;
                        self.expect(Tok::Comma)?;
                        Evidence::app(f, self.evidence()?)
                    }
                    "cases" => {
                        let c = self.evidence()?;
                        self.expect(Tok::Comma)?;
                        let left = self.branch()?;
                        self.expect(Tok::Comma)?;
                        let right = self.branch()?;
                        Evidence::cases(c, left, right)
                    }
                    _ => {
                        let c = self.evidence()?;
                        self.expect(Tok::Comma)?;
                        self.expect(Tok::LParen)?;
                        let x = self.var()?;
                        self.expect(Tok::Comma)?;
                        let y = self.var()?;
                        self.expect(Tok::RParen)?;
                        let body = self.scoped(&[x.clone(), y.clone()], |p| p.evidence())?;
                        Evidence::split(c, x, y, body)
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() == Tok::LBrace {
                    return Ok(Evidence::Atom {
                        name,
                        payload: self.payload()?,
                    });
                }
                match self.scope.iter().rev().find(|v| v.as_str() == name) {
                    Some(v) => Ok(Evidence::Var(v.clone())),
                    None => Ok(Evidence::atom(name)),
                }
            }
            _ => Err(self.unexpected("evidence")),
        }
    }

    fn branch(&mut self) -> Result<(EvidenceVar, Evidence), ParseError> {
        self.expect(Tok::LParen)?;
        let x = self.var()?;
        self.expect(Tok::RParen)?;
        let body = self.scoped(std::slice::from_ref(&x), |p| p.evidence())?;
        Ok((x, body))
    }

    fn scoped<T>(
        &mut self,
        vars: &[EvidenceVar],
        f: impl FnOnce(&mut Self) -> Result<T, ParseError>,
    ) -> Result<T, ParseError> {
        let depth = self.scope.len();
        self.scope.extend_from_slice(vars);
        let out = f(self);
        self.scope.truncate(depth);
        out
    }

    fn payload(&mut self) -> Result<Payload, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut payload = Payload::new();
        if self.eat(&Tok::RBrace) {
            return Ok(payload);
        }
        loop {
            let key = self.ident()?;
            self.expect(Tok::Equals)?;
            let value = match self.peek().clone() {
                Tok::Str(s) => {
                    self.bump();
                    s
                }
                _ => return Err(self.unexpected("a string literal")),
            };
            if payload.insert(key.clone(), value).is_some() {
                return Err(self.error_here(format!("duplicate payload key `{key}`")));
            }
            if self.eat(&Tok::RBrace) {
                return Ok(payload);
            }
            self.expect(Tok::Comma)?;
        }
    }

    // judgement := evidence '^' actor ('@' weight)? 'in' claim
    pub(crate) fn judgement(&mut self) -> Result<Judgement, ParseError> {
        let evidence = self.evidence()?;
        self.expect(Tok::Caret)?;
        let actor = self.actor()?;
        let weight = if self.eat(&Tok::At) { self.weight()? } else { Weight::one() };
        match self.peek() {
            Tok::Ident(kw) if kw == "in" => {
                self.bump();
            }
            _ => return Err(self.unexpected("`in`")),
        }
        let claim = self.claim()?;
        Ok(Judgement {
            evidence,
            actor,
            weight,
            claim,
        })
    }
}
