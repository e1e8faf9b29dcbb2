//! Textual framework format.
//!
//! ```text
//! # comment
//! assumption alpha, beta .
//! contrary alpha : c_alpha .
//! contrary beta : c_beta .
//! rule c_alpha <- beta .
//! prefer beta < alpha .
//! ```
//!
//! Statements are keyword-led and dot-terminated. A rule with nothing
//! between `<-` and `.` declares a fact. `prefer a < b` stores the edge
//! `a <= b` and rejects the input if the closed preorder also yields
//! `b <= a`; `prefer a <= b` never fails. Duplicate declarations collapse
//! with a warning; contrary redeclarations with a different value are
//! errors.

use std::fmt;

use crate::framework::{BuildError, Framework, FrameworkBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    ConflictingContrary {
        assumption: String,
        old: String,
        new: String,
    },
    Build(BuildError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: Span,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{}: syntax error: {msg}", self.span),
            ParseErrorKind::ConflictingContrary {
                assumption,
                old,
                new,
            } => write!(
                f,
                "{}: contrary of `{assumption}` redeclared from `{old}` to `{new}`",
                self.span
            ),
            ParseErrorKind::Build(err) => write!(f, "{}: {err}", self.span),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub span: Span,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: warning: {}", self.span, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Comma,
    Dot,
    Colon,
    Arrow,
    Less,
    LessEq,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::Comma => "`,`".into(),
            Token::Dot => "`.`".into(),
            Token::Colon => "`:`".into(),
            Token::Arrow => "`<-`".into(),
            Token::Less => "`<`".into(),
            Token::LessEq => "`<=`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, Span)>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            ',' => {
                chars.next();
                col += 1;
                tokens.push((Token::Comma, span));
            }
            '.' => {
                chars.next();
                col += 1;
                tokens.push((Token::Dot, span));
            }
            ':' => {
                chars.next();
                col += 1;
                tokens.push((Token::Colon, span));
            }
            '<' => {
                chars.next();
                col += 1;
                match chars.peek() {
                    Some('-') => {
                        chars.next();
                        col += 1;
                        tokens.push((Token::Arrow, span));
                    }
                    Some('=') => {
                        chars.next();
                        col += 1;
                        tokens.push((Token::LessEq, span));
                    }
                    _ => tokens.push((Token::Less, span)),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push((Token::Ident(ident), span));
            }
            other => {
                return Err(ParseError {
                    span,
                    kind: ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, Span)>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn peek(&self) -> Option<&(Token, Span)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(Token, Span)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn syntax_error(&self, span: Span, message: impl Into<String>) -> ParseError {
        ParseError {
            span,
            kind: ParseErrorKind::Syntax(message.into()),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Span), ParseError> {
        match self.next() {
            Some((Token::Ident(name), span)) => Ok((name, span)),
            Some((tok, span)) => {
                Err(self.syntax_error(span, format!("expected {what}, found {}", tok.describe())))
            }
            None => Err(self.syntax_error(self.end, format!("expected {what}, found end of input"))),
        }
    }

    fn expect(&mut self, token: Token) -> Result<Span, ParseError> {
        match self.next() {
            Some((tok, span)) if tok == token => Ok(span),
            Some((tok, span)) => Err(self.syntax_error(
                span,
                format!("expected {}, found {}", token.describe(), tok.describe()),
            )),
            None => Err(self.syntax_error(
                self.end,
                format!("expected {}, found end of input", token.describe()),
            )),
        }
    }

    fn ident_list(&mut self) -> Result<Vec<(String, Span)>, ParseError> {
        let mut items = vec![self.expect_ident("an identifier")?];
        while matches!(self.peek(), Some((Token::Comma, _))) {
            self.next();
            items.push(self.expect_ident("an identifier")?);
        }
        Ok(items)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Stmt {
    Assumptions(Vec<(String, Span)>),
    Contrary {
        assumption: (String, Span),
        contrary: String,
    },
    Rule {
        head: (String, Span),
        body: Vec<String>,
    },
    Prefer {
        a: (String, Span),
        b: String,
        strict: bool,
    },
}

/// The parsed statement list, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslDocument {
    statements: Vec<(Stmt, Span)>,
    end: Span,
}

/// Parses the statement list without building a framework.
pub fn parse_document(text: &str) -> Result<DslDocument, ParseError> {
    let tokens = tokenize(text)?;
    let end = Span {
        line: text.lines().count().max(1),
        col: 1,
    };
    let mut parser = Parser { tokens, pos: 0, end };
    let mut statements = Vec::new();
    while let Some((token, span)) = parser.peek().cloned() {
        let keyword = match token {
            Token::Ident(word) => word,
            other => {
                return Err(parser.syntax_error(
                    span,
                    format!("expected a statement keyword, found {}", other.describe()),
                ))
            }
        };
        parser.next();
        let stmt = match keyword.as_str() {
            "assumption" => {
                let idents = parser.ident_list()?;
                parser.expect(Token::Dot)?;
                Stmt::Assumptions(idents)
            }
            "contrary" => {
                let assumption = parser.expect_ident("an assumption name")?;
                parser.expect(Token::Colon)?;
                let (contrary, _) = parser.expect_ident("a contrary name")?;
                parser.expect(Token::Dot)?;
                Stmt::Contrary {
                    assumption,
                    contrary,
                }
            }
            "rule" => {
                let head = parser.expect_ident("a rule head")?;
                parser.expect(Token::Arrow)?;
                let mut body = Vec::new();
                if !matches!(parser.peek(), Some((Token::Dot, _))) {
                    body = parser
                        .ident_list()?
                        .into_iter()
                        .map(|(name, _)| name)
                        .collect();
                }
                parser.expect(Token::Dot)?;
                Stmt::Rule { head, body }
            }
            "prefer" => {
                let a = parser.expect_ident("an assumption name")?;
                let strict = match parser.next() {
                    Some((Token::Less, _)) => true,
                    Some((Token::LessEq, _)) => false,
                    Some((tok, span)) => {
                        return Err(parser.syntax_error(
                            span,
                            format!("expected `<` or `<=`, found {}", tok.describe()),
                        ))
                    }
                    None => {
                        return Err(parser
                            .syntax_error(parser.end, "expected `<` or `<=`, found end of input"))
                    }
                };
                let (b, _) = parser.expect_ident("an assumption name")?;
                parser.expect(Token::Dot)?;
                Stmt::Prefer { a, b, strict }
            }
            other => {
                return Err(parser.syntax_error(
                    span,
                    format!(
                        "expected `assumption`, `contrary`, `rule` or `prefer`, found `{other}`"
                    ),
                ))
            }
        };
        statements.push((stmt, span));
    }
    Ok(DslDocument {
        statements,
        end: parser.end,
    })
}

/// Parses and validates a framework, collecting duplicate-declaration
/// warnings.
pub fn parse_with_warnings(text: &str) -> Result<(Framework, Vec<Warning>), ParseError> {
    let doc = parse_document(text)?;
    let mut warnings = Vec::new();
    let mut builder = FrameworkBuilder::new();

    let mut seen_assumptions: Vec<(String, Span)> = Vec::new();
    let mut seen_contraries: Vec<(String, String, Span)> = Vec::new();
    let mut seen_rules: Vec<(String, Vec<String>)> = Vec::new();
    let mut seen_prefers: Vec<(String, String, bool)> = Vec::new();

    for (stmt, span) in &doc.statements {
        match stmt {
            Stmt::Assumptions(idents) => {
                for (name, ident_span) in idents {
                    if seen_assumptions.iter().any(|(n, _)| n == name) {
                        warnings.push(Warning {
                            span: *ident_span,
                            message: format!("assumption `{name}` declared again"),
                        });
                    } else {
                        seen_assumptions.push((name.clone(), *ident_span));
                    }
                    builder.assumption(name);
                }
            }
            Stmt::Contrary {
                assumption: (assumption, _),
                contrary,
            } => {
                if let Some((_, old, _)) = seen_contraries.iter().find(|(a, _, _)| a == assumption)
                {
                    if old == contrary {
                        warnings.push(Warning {
                            span: *span,
                            message: format!("contrary of `{assumption}` declared again"),
                        });
                    } else {
                        return Err(ParseError {
                            span: *span,
                            kind: ParseErrorKind::ConflictingContrary {
                                assumption: assumption.clone(),
                                old: old.clone(),
                                new: contrary.clone(),
                            },
                        });
                    }
                } else {
                    seen_contraries.push((assumption.clone(), contrary.clone(), *span));
                }
                builder.contrary(assumption, contrary);
            }
            Stmt::Rule {
                head: (head, _),
                body,
            } => {
                let mut sorted = body.clone();
                sorted.sort();
                sorted.dedup();
                if seen_rules.contains(&(head.clone(), sorted.clone())) {
                    warnings.push(Warning {
                        span: *span,
                        message: format!("rule for `{head}` declared again"),
                    });
                } else {
                    seen_rules.push((head.clone(), sorted));
                }
                builder.rule(head, body.iter().map(String::as_str));
            }
            Stmt::Prefer {
                a: (a, _),
                b,
                strict,
            } => {
                if seen_prefers.contains(&(a.clone(), b.clone(), *strict)) {
                    warnings.push(Warning {
                        span: *span,
                        message: format!("preference between `{a}` and `{b}` declared again"),
                    });
                } else {
                    seen_prefers.push((a.clone(), b.clone(), *strict));
                }
                if *strict {
                    builder.prefer_less(a, b);
                } else {
                    builder.prefer_leq(a, b);
                }
            }
        }
    }

    match builder.build() {
        Ok(fw) => Ok((fw, warnings)),
        Err(err) => Err(ParseError {
            span: build_error_span(&doc, &err),
            kind: ParseErrorKind::Build(err.clone()),
        }),
    }
}

/// Parses and validates a framework, discarding warnings.
pub fn parse(text: &str) -> Result<Framework, ParseError> {
    parse_with_warnings(text).map(|(fw, _)| fw)
}

/// Best source position for a validation failure.
fn build_error_span(doc: &DslDocument, err: &BuildError) -> Span {
    let statements = &doc.statements;
    let fallback = Span { line: 1, col: 1 };
    match err {
        BuildError::EmptyAssumptionSet => fallback,
        BuildError::TooManyAssumptions { .. } => fallback,
        BuildError::NotFlat { assumption } => statements
            .iter()
            .find_map(|(stmt, span)| match stmt {
                Stmt::Rule { head: (h, _), .. } if h == assumption => Some(*span),
                _ => None,
            })
            .unwrap_or(fallback),
        BuildError::MissingContrary { assumption } => statements
            .iter()
            .find_map(|(stmt, _)| match stmt {
                Stmt::Assumptions(idents) => idents
                    .iter()
                    .find(|(n, _)| n == assumption)
                    .map(|(_, s)| *s),
                _ => None,
            })
            .unwrap_or(fallback),
        BuildError::UnknownAssumptionInPreference { name } => statements
            .iter()
            .find_map(|(stmt, span)| match stmt {
                Stmt::Prefer { a: (a, _), b, .. } if a == name || b == name => Some(*span),
                _ => None,
            })
            .unwrap_or(fallback),
        BuildError::InconsistentStrictPreference { a, b } => statements
            .iter()
            .find_map(|(stmt, span)| match stmt {
                Stmt::Prefer {
                    a: (sa, _),
                    b: sb,
                    strict: true,
                } if sa == a && sb == b => Some(*span),
                _ => None,
            })
            .unwrap_or(fallback),
    }
}

/// Canonical pretty-printer; `parse(render(fw))` reconstructs `fw`.
pub fn render(fw: &Framework) -> String {
    let mut out = String::new();
    let assumptions: Vec<&str> = fw.assumptions().iter().map(|&a| fw.name(a)).collect();
    out.push_str(&format!("assumption {} .\n", assumptions.join(", ")));
    for (i, name) in assumptions.iter().enumerate() {
        out.push_str(&format!(
            "contrary {name} : {} .\n",
            fw.name(fw.contrary_at(i))
        ));
    }
    let mut rules: Vec<String> = fw
        .rules()
        .iter()
        .map(|rule| {
            let mut body: Vec<&str> = rule.body.iter().map(|&s| fw.name(s)).collect();
            body.sort();
            if body.is_empty() {
                format!("rule {} <- .\n", fw.name(rule.head))
            } else {
                format!("rule {} <- {} .\n", fw.name(rule.head), body.join(", "))
            }
        })
        .collect();
    rules.sort();
    for rule in rules {
        out.push_str(&rule);
    }
    for (ia, ib) in fw.preorder().edges() {
        out.push_str(&format!(
            "prefer {} <= {} .\n",
            fw.name(fw.assumption_at(ia)),
            fw.name(fw.assumption_at(ib))
        ));
    }
    out
}
