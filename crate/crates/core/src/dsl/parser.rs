use std::collections::HashSet;

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind, SourceSpan};
use crate::model::{
    is_valid_atom_name, validate_with_budget, Argument, Assessment, ConditionalEvent, Formula, Location,
    DEFAULT_MAX_ATOMS,
};
use crate::numeric::{is_probability, parse_rational, Rational};

/// Parses a `.arg` document with the default atom budget.
pub fn parse_argument(text: &str) -> Result<Argument, ParseError> {
    parse_argument_with_budget(text, DEFAULT_MAX_ATOMS)
}

/// Parses and structurally validates a `.arg` document.
pub fn parse_argument_with_budget(text: &str, max_atoms: usize) -> Result<Argument, ParseError> {
    let mut doc = Document::default();
    let mut last_line = 1;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        doc.line(raw, line)?;
    }
    doc.finish(max_atoms, last_line)
}

/// Parses a standalone formula. Atoms are not checked against any vocabulary.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let tokens = tokenize(text, 1, 1)?;
    let mut cursor = Cursor::new(&tokens, SourceSpan::new(1, 1, text.chars().count()));
    let formula = cursor.formula()?;
    cursor.expect_end()?;
    Ok(formula)
}

#[derive(Default)]
struct Document {
    label: Option<(String, SourceSpan)>,
    atoms: Option<(Vec<String>, SourceSpan)>,
    constraints: Vec<(Formula, SourceSpan)>,
    premises: Vec<(Assessment, SourceSpan)>,
    conclusion: Option<(ConditionalEvent, SourceSpan)>,
    atom_uses: Vec<(String, SourceSpan)>,
}

impl Document {
    fn line(&mut self, raw: &str, line: usize) -> Result<(), ParseError> {
        let chars: Vec<char> = raw.chars().collect();
        let line_span = SourceSpan::new(line, 1, chars.len());
        let Some(colon) = chars.iter().position(|&c| c == ':') else {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                line_span,
                "expected `directive: ...`",
            ));
        };
        let lead = chars.iter().take_while(|c| c.is_whitespace()).count();
        let name: String = chars[lead..colon].iter().collect::<String>().trim_end().to_string();
        let name_span = SourceSpan::new(line, lead + 1, name.chars().count().max(1));
        let rest: String = chars[colon + 1..].iter().collect();
        let rest_column = colon + 2;

        match name.as_str() {
            "label" => {
                if self.label.is_some() {
                    return Err(duplicate(name_span, "label"));
                }
                let label = rest.trim();
                if label.is_empty() {
                    return Err(ParseError::new(ParseErrorKind::Syntax, line_span, "empty label"));
                }
                self.label = Some((label.to_string(), line_span));
            }
            "atoms" => {
                if self.atoms.is_some() {
                    return Err(duplicate(name_span, "atoms"));
                }
                let tokens = tokenize(&rest, line, rest_column)?;
                let atoms = self.atom_list(&tokens, line_span)?;
                self.atoms = Some((atoms, line_span));
            }
            "constraint" => {
                let tokens = tokenize(&rest, line, rest_column)?;
                let mut cursor = Cursor::new(&tokens, line_span);
                let formula = cursor.formula()?;
                cursor.expect_end()?;
                self.atom_uses.append(&mut cursor.atom_uses);
                self.constraints.push((formula, line_span));
            }
            "premise" => {
                let tokens = tokenize(&rest, line, rest_column)?;
                let mut cursor = Cursor::new(&tokens, line_span);
                let assessment = cursor.premise(self.premises.len())?;
                cursor.expect_end()?;
                self.atom_uses.append(&mut cursor.atom_uses);
                self.premises.push((assessment, line_span));
            }
            "conclusion" => {
                if self.conclusion.is_some() {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateConclusion,
                        name_span,
                        "duplicate conclusion; a document holds exactly one",
                    ));
                }
                let tokens = tokenize(&rest, line, rest_column)?;
                let mut cursor = Cursor::new(&tokens, line_span);
                let event = cursor.event()?;
                cursor.expect_end()?;
                self.atom_uses.append(&mut cursor.atom_uses);
                self.conclusion = Some((event, line_span));
            }
            _ => {
                return Err(ParseError::new(
                    ParseErrorKind::UnknownDirective,
                    name_span,
                    format!("unknown directive `{name}`"),
                ))
            }
        }
        Ok(())
    }

    fn atom_list(&self, tokens: &[Token], line_span: SourceSpan) -> Result<Vec<String>, ParseError> {
        let mut atoms = Vec::new();
        let mut seen = HashSet::new();
        let mut cursor = Cursor::new(tokens, line_span);
        loop {
            let token = cursor.next("atom name")?;
            match &token.tok {
                Tok::Ident(name) if is_valid_atom_name(name) => {
                    if !seen.insert(name.clone()) {
                        return Err(ParseError::new(
                            ParseErrorKind::Invalid(crate::model::Violation::DuplicateAtom(name.clone())),
                            token.span,
                            format!("duplicate atom `{name}`"),
                        ));
                    }
                    atoms.push(name.clone());
                }
                other => {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        token.span,
                        format!("expected atom name, found {}", other.describe()),
                    ))
                }
            }
            if cursor.at_end() {
                return Ok(atoms);
            }
            cursor.expect(Tok::Comma)?;
        }
    }

    fn finish(self, max_atoms: usize, last_line: usize) -> Result<Argument, ParseError> {
        let end = SourceSpan::new(last_line, 1, 0);
        let Some((atoms, atoms_span)) = self.atoms else {
            return Err(ParseError::new(ParseErrorKind::MissingDirective, end, "missing `atoms:` directive"));
        };
        let Some((conclusion, conclusion_span)) = self.conclusion else {
            return Err(ParseError::new(
                ParseErrorKind::MissingDirective,
                end,
                "missing `conclusion:` directive",
            ));
        };
        if let Some((name, span)) = self.atom_uses.iter().find(|(name, _)| !atoms.contains(name)) {
            return Err(ParseError::new(
                ParseErrorKind::UnknownAtom,
                *span,
                format!("unknown atom `{name}`; declare it in `atoms:`"),
            ));
        }
        let constraint_spans: Vec<_> = self.constraints.iter().map(|(_, s)| *s).collect();
        let premise_spans: Vec<_> = self.premises.iter().map(|(_, s)| *s).collect();
        let argument = Argument {
            label: self.label.map(|(l, _)| l),
            atoms,
            constraints: self.constraints.into_iter().map(|(f, _)| f).collect(),
            premises: self.premises.into_iter().map(|(p, _)| p).collect(),
            conclusion,
        };
        if let Some(violation) = validate_with_budget(&argument, max_atoms).into_iter().next() {
            let span = match violation.location() {
                Location::Atoms => atoms_span,
                Location::Constraint(i) => constraint_spans.get(i).copied().unwrap_or(atoms_span),
                Location::Premise(i) => premise_spans[i],
                Location::Conclusion => conclusion_span,
            };
            return Err(ParseError::new(ParseErrorKind::Invalid(violation.clone()), span, violation.to_string()));
        }
        Ok(argument)
    }
}

fn duplicate(span: SourceSpan, name: &str) -> ParseError {
    ParseError::new(ParseErrorKind::DuplicateDirective, span, format!("duplicate `{name}:` directive"))
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    /// Span reported when input ends unexpectedly.
    context: SourceSpan,
    atom_uses: Vec<(String, SourceSpan)>,
}

impl<'a> Cursor<'a> {
    fn new(tokens: &'a [Token], context: SourceSpan) -> Self {
        Self { tokens, pos: 0, context, atom_uses: Vec::new() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(w)) if w == word)
    }

    fn end_span(&self) -> SourceSpan {
        match self.tokens.last() {
            Some(t) => SourceSpan::new(t.span.line, t.span.column + t.span.length, 0),
            None => SourceSpan::new(self.context.line, self.context.column + self.context.length, 0),
        }
    }

    fn next(&mut self, expected: &str) -> Result<&'a Token, ParseError> {
        let token = self.tokens.get(self.pos).ok_or_else(|| {
            ParseError::new(ParseErrorKind::Syntax, self.end_span(), format!("expected {expected}, found end of line"))
        })?;
        self.pos += 1;
        Ok(token)
    }

    fn expect(&mut self, tok: Tok) -> Result<&'a Token, ParseError> {
        let expected = tok.describe();
        let token = self.next(&expected)?;
        if token.tok != tok {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                token.span,
                format!("expected {expected}, found {}", token.tok.describe()),
            ));
        }
        Ok(token)
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(ParseError::new(
                ParseErrorKind::Syntax,
                t.span,
                format!("unexpected {} after end of expression", t.tok.describe()),
            )),
        }
    }

    /// `P(E)` or `P(E | H)`.
    fn event(&mut self) -> Result<ConditionalEvent, ParseError> {
        let p = self.next("`P(`")?;
        if p.tok != Tok::Ident("P".into()) {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                p.span,
                format!("expected `P(`, found {}", p.tok.describe()),
            ));
        }
        self.expect(Tok::LParen)?;
        let consequent = self.formula()?;
        let antecedent = if self.peek() == Some(&Tok::Bar) {
            self.pos += 1;
            self.formula()?
        } else {
            Formula::True
        };
        self.expect(Tok::RParen)?;
        Ok(ConditionalEvent::new(consequent, antecedent))
    }

    /// `P(..) = v` or `P(..) in [a, b]`.
    fn premise(&mut self, index: usize) -> Result<Assessment, ParseError> {
        let target = self.event()?;
        if self.peek_ident("in") {
            self.pos += 1;
            let open = self.expect(Tok::LBracket)?.span;
            let (lower, _) = self.probability()?;
            self.expect(Tok::Comma)?;
            let (upper, _) = self.probability()?;
            let close = self.expect(Tok::RBracket)?.span;
            if lower > upper {
                let violation = crate::model::Violation::InvertedBounds { at: Location::Premise(index) };
                return Err(ParseError::new(
                    ParseErrorKind::Invalid(violation),
                    open.to(close),
                    "inverted bounds: lower exceeds upper",
                ));
            }
            Ok(Assessment::interval(target, lower, upper))
        } else {
            self.expect(Tok::Equals)?;
            let (value, _) = self.probability()?;
            Ok(Assessment::point(target, value))
        }
    }

    fn probability(&mut self) -> Result<(Rational, SourceSpan), ParseError> {
        let (value, span) = self.number()?;
        if !is_probability(&value) {
            return Err(ParseError::new(ParseErrorKind::BoundOutOfRange, span, "bound out of [0,1]"));
        }
        Ok((value, span))
    }

    fn number(&mut self) -> Result<(Rational, SourceSpan), ParseError> {
        let token = self.next("number")?;
        let Tok::Number(text) = &token.tok else {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                token.span,
                format!("expected number, found {}", token.tok.describe()),
            ));
        };
        let mut span = token.span;
        let mut literal = text.clone();
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let den = self.next("denominator")?;
            let Tok::Number(den_text) = &den.tok else {
                return Err(ParseError::new(ParseErrorKind::Syntax, den.span, "expected denominator"));
            };
            literal = format!("{literal}/{den_text}");
            span = span.to(den.span);
        }
        let value = parse_rational(&literal)
            .map_err(|e| ParseError::new(ParseErrorKind::Syntax, span, e.to_string()))?;
        Ok((value, span))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let right = self.formula()?;
            return Ok(left.implies(right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while self.peek() == Some(&Tok::Or) || self.peek_ident("or") {
            self.pos += 1;
            left = left.or(self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Tok::And) || self.peek_ident("and") {
            self.pos += 1;
            left = left.and(self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.peek() == Some(&Tok::Not) || self.peek_ident("not") {
            self.pos += 1;
            return Ok(self.unary()?.not());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let token = self.next("formula")?;
        match &token.tok {
            Tok::LParen => {
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(word) => match word.as_str() {
                "true" => Ok(Formula::True),
                "false" => Ok(Formula::False),
                "exactly_one" => Ok(Formula::exactly_one(&self.arguments()?)),
                "at_most_one" => Ok(Formula::at_most_one(&self.arguments()?)),
                name if is_valid_atom_name(name) => {
                    self.atom_uses.push((name.to_string(), token.span));
                    Ok(Formula::atom(name))
                }
                _ => Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    token.span,
                    format!("expected formula, found keyword `{word}`"),
                )),
            },
            other => Err(ParseError::new(
                ParseErrorKind::Syntax,
                token.span,
                format!("expected formula, found {}", other.describe()),
            )),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Formula>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut items = vec![self.formula()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            items.push(self.formula()?);
        }
        self.expect(Tok::RParen)?;
        Ok(items)
    }
}
