use super::lexer::{tokenize, Token, TokenKind};
use super::{Formula, Sequent, SyntaxError};

/// Parses a single formula.
///
/// Precedence, tightest first: unary operators (`~ # @ [] <>`), `&`, `|`.
/// Binary operators associate to the left.
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(SyntaxError::Empty { offset: 0 });
    }
    if let Some(t) = tokens.iter().find(|t| t.kind == TokenKind::Turnstile) {
        return Err(SyntaxError::UnexpectedToken {
            offset: t.offset,
            found: t.kind.describe(),
            expected: "a formula (use parse_sequent for `|-`)",
        });
    }
    Parser::new(&tokens, text.len()).parse_all()
}

/// Parses `premise |- conclusion`.
pub fn parse_sequent(text: &str) -> Result<Sequent, SyntaxError> {
    let tokens = tokenize(text)?;
    let turnstiles: Vec<&Token> = tokens.iter().filter(|t| t.kind == TokenKind::Turnstile).collect();
    let split = match turnstiles.as_slice() {
        [] => return Err(SyntaxError::MissingTurnstile),
        [one] => one.offset,
        [_, second, ..] => return Err(SyntaxError::DuplicateTurnstile { offset: second.offset }),
    };
    let at = tokens.iter().position(|t| t.offset == split).expect("turnstile token present");
    let (left, right) = (&tokens[..at], &tokens[at + 1..]);
    if left.is_empty() {
        return Err(SyntaxError::Empty { offset: split });
    }
    if right.is_empty() {
        return Err(SyntaxError::Empty { offset: text.len() });
    }
    let premise = Parser::new(left, split).parse_all()?;
    let conclusion = Parser::new(right, text.len()).parse_all()?;
    Ok(Sequent::new(premise, conclusion))
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    /// Offset reported for "unexpected end of input".
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token], end: usize) -> Self {
        Parser { tokens, pos: 0, end }
    }

    fn parse_all(mut self) -> Result<Formula, SyntaxError> {
        let f = self.disjunction()?;
        match self.peek() {
            None => Ok(f),
            Some(t) if t.kind == TokenKind::RParen => {
                Err(SyntaxError::UnbalancedParen { offset: t.offset })
            }
            Some(t) => Err(SyntaxError::UnexpectedToken {
                offset: t.offset,
                found: t.kind.describe(),
                expected: "an operator or end of input",
            }),
        }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn disjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.conjunction()?;
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::Or) {
            self.bump();
            let right = self.conjunction()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.unary()?;
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::And) {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let Some(token) = self.bump() else {
            return Err(SyntaxError::UnexpectedEnd { offset: self.end });
        };
        match &token.kind {
            TokenKind::Not => Ok(Formula::not(self.unary()?)),
            TokenKind::Tri => Ok(Formula::tri(self.unary()?)),
            TokenKind::NonTri => Ok(Formula::nontri(self.unary()?)),
            TokenKind::Nec => Ok(Formula::nec(self.unary()?)),
            TokenKind::Poss => Ok(Formula::poss(self.unary()?)),
            TokenKind::Ident(name) => Ok(Formula::Atom(name.clone())),
            TokenKind::LParen => {
                let inner = self.disjunction()?;
                match self.bump() {
                    Some(t) if t.kind == TokenKind::RParen => Ok(inner),
                    Some(t) => Err(SyntaxError::UnexpectedToken {
                        offset: t.offset,
                        found: t.kind.describe(),
                        expected: "`)`",
                    }),
                    None => Err(SyntaxError::UnbalancedParen { offset: token.offset }),
                }
            }
            TokenKind::RParen => Err(SyntaxError::UnbalancedParen { offset: token.offset }),
            other => Err(SyntaxError::UnexpectedToken {
                offset: token.offset,
                found: other.describe(),
                expected: "a formula",
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }
    fn q() -> Formula {
        Formula::atom("q")
    }
    fn r() -> Formula {
        Formula::atom("r")
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_formula("~(p & q)").unwrap(), Formula::not(Formula::and(p(), q())));
        assert_eq!(parse_formula("#p").unwrap(), Formula::tri(p()));
        assert_eq!(
            parse_formula("#(q | ~q)").unwrap(),
            Formula::tri(Formula::or(q(), Formula::not(q())))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_formula("p | q & r").unwrap(),
            Formula::or(p(), Formula::and(q(), r()))
        );
        assert_eq!(
            parse_formula("p & q & r").unwrap(),
            Formula::and(Formula::and(p(), q()), r())
        );
        assert_eq!(
            parse_formula("~p & #q").unwrap(),
            Formula::and(Formula::not(p()), Formula::tri(q()))
        );
    }

    #[test]
    fn derived_operators_are_desugared() {
        assert_eq!(parse_formula("@p").unwrap(), Formula::not(Formula::tri(p())));
        assert_eq!(
            parse_formula("<>p").unwrap(),
            Formula::not(Formula::nec(Formula::not(p())))
        );
        assert_eq!(parse_formula("[]p").unwrap(), Formula::nec(p()));
    }

    #[test]
    fn sequents() {
        assert_eq!(
            parse_sequent("#p |- #~p").unwrap(),
            Sequent::new(Formula::tri(p()), Formula::tri(Formula::not(p())))
        );
        assert_eq!(
            parse_sequent("p & q |- p").unwrap(),
            Sequent::new(Formula::and(p(), q()), p())
        );
        assert_eq!(
            parse_sequent("p|q|-r").unwrap(),
            Sequent::new(Formula::or(p(), q()), r())
        );
    }

    #[test]
    fn sequent_errors() {
        assert_eq!(
            parse_sequent("p |- q |- r"),
            Err(SyntaxError::DuplicateTurnstile { offset: 7 })
        );
        assert_eq!(parse_sequent("p & q"), Err(SyntaxError::MissingTurnstile));
        assert_eq!(parse_sequent("|- q"), Err(SyntaxError::Empty { offset: 0 }));
        assert_eq!(parse_sequent("p |-"), Err(SyntaxError::Empty { offset: 4 }));
        assert!(matches!(parse_sequent("p & |- q"), Err(SyntaxError::UnexpectedEnd { offset: 4 })));
    }

    #[test]
    fn formula_errors() {
        assert_eq!(parse_formula(""), Err(SyntaxError::Empty { offset: 0 }));
        assert_eq!(parse_formula("   "), Err(SyntaxError::Empty { offset: 0 }));
        assert_eq!(parse_formula("(p & q"), Err(SyntaxError::UnbalancedParen { offset: 0 }));
        assert_eq!(parse_formula("p & q)"), Err(SyntaxError::UnbalancedParen { offset: 5 }));
        assert!(matches!(parse_formula("p q"), Err(SyntaxError::UnexpectedToken { offset: 2, .. })));
        assert!(matches!(parse_formula("p &"), Err(SyntaxError::UnexpectedEnd { offset: 3 })));
        assert!(matches!(parse_formula("& p"), Err(SyntaxError::UnexpectedToken { offset: 0, .. })));
        assert!(matches!(parse_formula("p |- q"), Err(SyntaxError::UnexpectedToken { offset: 2, .. })));
    }
}
