//! Quaternion expressions in one free variable `z`.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" integer ] ;
//! primary = number | number unit | unit | "z"
//!         | func "(" expr ")" | "(" expr ")" ;
//! unit    = "i" | "j" | "k" ;
//! func    = "conj" | "norm" | "mod" | "inv" ;
//! ```
//!
//! A number written directly against a unit (`2i`, `3.5k`) is one token and
//! means `number * unit`; an exponent on it applies to the unit only, so
//! `2i^2 = 2 * (i^2) = -2`. Products keep their written order and `/` is
//! right division, `x / y = x * inv(y)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    I,
    J,
    K,
}

impl Unit {
    pub fn value(self) -> Quaternion {
        match self {
            Unit::I => Quaternion::I,
            Unit::J => Quaternion::J,
            Unit::K => Quaternion::K,
        }
    }

    fn symbol(self) -> char {
        match self {
            Unit::I => 'i',
            Unit::J => 'j',
            Unit::K => 'k',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Conj,
    /// Squared norm `a^2 + b^2 + c^2 + d^2`.
    Norm,
    /// Modulus, the square root of the norm.
    Mod,
    Inv,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Conj => "conj",
            Func::Norm => "norm",
            Func::Mod => "mod",
            Func::Inv => "inv",
        }
    }

    pub fn apply(self, q: Quaternion) -> Result<Quaternion> {
        match self {
            Func::Conj => Ok(q.conj()),
            Func::Norm => Ok(Quaternion::real(q.norm_sq())),
            Func::Mod => Ok(Quaternion::real(q.modulus())),
            Func::Inv => q.inverse(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    /// Numeric literal, kept as written.
    Number(String),
    /// A unit, optionally with a numeric coefficient written against it.
    Unit { coeff: Option<String>, unit: Unit },
    Var,
    Op(BinOp),
    Caret,
    LParen,
    RParen,
    Func(Func),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// 1-based character position of the first character.
    pub position: usize,
}

fn scan_number(chars: &[char], mut i: usize) -> usize {
    let digits = |chars: &[char], mut i: usize| {
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(chars, i);
    if i < chars.len() && chars[i] == '.' {
        i = digits(chars, i + 1);
    }
    // Exponent only if at least one digit follows.
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        let end = digits(chars, j);
        if end > j {
            i = end;
        }
    }
    i
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let position = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(TokenKind::Op(BinOp::Add)),
            '-' => Some(TokenKind::Op(BinOp::Sub)),
            '*' => Some(TokenKind::Op(BinOp::Mul)),
            '/' => Some(TokenKind::Op(BinOp::Div)),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = simple {
            tokens.push(Token { kind, position });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let end = scan_number(&chars, i);
            let raw: String = chars[i..end].iter().collect();
            let unit = match chars.get(end) {
                Some('i') => Some(Unit::I),
                Some('j') => Some(Unit::J),
                Some('k') => Some(Unit::K),
                _ => None,
            };
            // "2in" is not "2i" followed by "n".
            let unit = unit.filter(|_| !chars.get(end + 1).is_some_and(|c| c.is_ascii_alphanumeric()));
            match unit {
                Some(unit) => {
                    tokens.push(Token { kind: TokenKind::Unit { coeff: Some(raw), unit }, position });
                    i = end + 1;
                }
                None => {
                    tokens.push(Token { kind: TokenKind::Number(raw), position });
                    i = end;
                }
            }
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = i;
            while end < chars.len() && chars[end].is_ascii_alphabetic() {
                end += 1;
            }
            let word: String = chars[i..end].iter().collect();
            let kind = match word.as_str() {
                "i" => TokenKind::Unit { coeff: None, unit: Unit::I },
                "j" => TokenKind::Unit { coeff: None, unit: Unit::J },
                "k" => TokenKind::Unit { coeff: None, unit: Unit::K },
                "z" => TokenKind::Var,
                "conj" => TokenKind::Func(Func::Conj),
                "norm" => TokenKind::Func(Func::Norm),
                "mod" => TokenKind::Func(Func::Mod),
                "inv" => TokenKind::Func(Func::Inv),
                _ => return Err(Error::Lex { position, found: c }),
            };
            tokens.push(Token { kind, position });
            i = end;
            continue;
        }
        return Err(Error::Lex { position, found: c });
    }
    Ok(tokens)
}

/// Parsed expression. Operands of every binary node keep their written
/// order.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Unit(Unit),
    Var,
    Neg(Box<Expr>),
    Func(Func, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self, z: Option<Quaternion>) -> Result<Quaternion> {
        eval_tree(self, z)
    }

    pub fn uses_var(&self) -> bool {
        match self {
            Expr::Var => true,
            Expr::Num(_) | Expr::Unit(_) => false,
            Expr::Neg(e) | Expr::Func(_, e) | Expr::Pow(e, _) => e.uses_var(),
            Expr::Binary(_, l, r) => l.uses_var() || r.uses_var(),
        }
    }
}

/// Fully parenthesized; parsing the output gives back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Unit(u) => write!(f, "{}", u.symbol()),
            Expr::Var => f.write_str("z"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Func(func, e) => write!(f, "{}({e})", func.name()),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Pow(b, n) => write!(f, "({b} ^ {n})"),
        }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end_position: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_position, |t| t.position)
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { position: self.position(), expected: expected.to_string() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(TokenKind::Op(op @ (BinOp::Add | BinOp::Sub))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(TokenKind::Op(op @ (BinOp::Mul | BinOp::Div))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(TokenKind::Op(BinOp::Sub)) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.peek() != Some(&TokenKind::Caret) {
            return Ok(None);
        }
        self.pos += 1;
        match self.peek() {
            Some(TokenKind::Number(raw)) => match raw.parse::<u32>() {
                Ok(n) => {
                    self.pos += 1;
                    Ok(Some(n))
                }
                Err(_) => self.fail("a nonnegative integer exponent"),
            },
            _ => self.fail("a nonnegative integer exponent"),
        }
    }

    fn number(&self, raw: &str) -> Result<f64> {
        match raw.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => self.fail("a finite number"),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        // A coefficient written against a unit stays outside the power.
        if let Some(TokenKind::Unit { coeff: Some(raw), unit }) = self.peek() {
            let (raw, unit) = (raw.clone(), *unit);
            let coeff = self.number(&raw)?;
            self.pos += 1;
            let base = Expr::Unit(unit);
            let base = match self.exponent()? {
                Some(n) => Expr::Pow(Box::new(base), n),
                None => base,
            };
            return Ok(Expr::Binary(BinOp::Mul, Box::new(Expr::Num(coeff)), Box::new(base)));
        }
        let base = self.primary()?;
        Ok(match self.exponent()? {
            Some(n) => Expr::Pow(Box::new(base), n),
            None => base,
        })
    }

    fn closing(&mut self) -> Result<()> {
        if self.peek() == Some(&TokenKind::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail("')'")
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let Some(kind) = self.peek().cloned() else {
            return self.fail("an operand");
        };
        match kind {
            TokenKind::Number(raw) => {
                let x = self.number(&raw)?;
                self.pos += 1;
                Ok(Expr::Num(x))
            }
            TokenKind::Unit { unit, .. } => {
                self.pos += 1;
                Ok(Expr::Unit(unit))
            }
            TokenKind::Var => {
                self.pos += 1;
                Ok(Expr::Var)
            }
            TokenKind::Func(func) => {
                self.pos += 1;
                if self.peek() != Some(&TokenKind::LParen) {
                    return self.fail("'(' after function name");
                }
                self.pos += 1;
                let arg = self.expr()?;
                self.closing()?;
                Ok(Expr::Func(func, Box::new(arg)))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.closing()?;
                Ok(inner)
            }
            _ => self.fail("an operand"),
        }
    }
}

/// Parses a token stream. `end_position` is reported when input runs out
/// early; [`parse_str`] passes one past the last character.
pub fn parse(tokens: &[Token], end_position: usize) -> Result<Expr> {
    let mut p = Parser { tokens, pos: 0, end_position };
    let tree = p.expr()?;
    if p.pos < tokens.len() {
        return p.fail("an operator or end of input");
    }
    Ok(tree)
}

pub fn parse_str(text: &str) -> Result<Expr> {
    parse(&tokenize(text)?, text.chars().count() + 1)
}

pub fn eval_tree(t: &Expr, z: Option<Quaternion>) -> Result<Quaternion> {
    Ok(match t {
        Expr::Num(x) => Quaternion::real(*x),
        Expr::Unit(u) => u.value(),
        Expr::Var => z.ok_or(Error::UnboundVariable)?,
        Expr::Neg(e) => -eval_tree(e, z)?,
        Expr::Func(func, e) => func.apply(eval_tree(e, z)?)?,
        Expr::Binary(op, l, r) => {
            let (l, r) = (eval_tree(l, z)?, eval_tree(r, z)?);
            match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div => l.div_right(r)?,
            }
        }
        Expr::Pow(b, n) => crate::powers::pow_sequential(eval_tree(b, z)?, *n),
    })
}

/// Parses and evaluates a constant expression.
pub fn eval_str(text: &str) -> Result<Quaternion> {
    parse_str(text)?.eval(None)
}
