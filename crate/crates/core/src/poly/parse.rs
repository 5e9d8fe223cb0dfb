use super::{QPoly, VariableContext};
use crate::arith::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::lexer::{describe, Cursor, Tok};

/// Parses a polynomial expression over Q, e.g. `(x - y)^2 + 3/2*x*y`.
///
/// Grammar: `expr := ['-'] term (('+'|'-') term)*`,
/// `term := power (('*'|'/') power)*` with constant divisors only,
/// `power := atom ['^' int]`, `atom := int | ident | '(' expr ')'`.
pub fn parse_polynomial(ctx: &VariableContext, text: &str) -> Result<QPoly> {
    let mut cur = Cursor::new(text)?;
    let p = expr(ctx, &mut cur)?;
    if cur.peek().tok != Tok::Eof {
        return Err(cur.error_here(format!("unexpected {}", describe(&cur.peek().tok))));
    }
    Ok(p)
}

fn expr(ctx: &VariableContext, cur: &mut Cursor) -> Result<QPoly> {
    let negate = cur.eat(&Tok::Minus);
    let mut acc = term(ctx, cur)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        if cur.eat(&Tok::Plus) {
            acc = acc.add(&term(ctx, cur)?)?;
        } else if cur.eat(&Tok::Minus) {
            acc = acc.sub(&term(ctx, cur)?)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(ctx: &VariableContext, cur: &mut Cursor) -> Result<QPoly> {
    let mut acc = power(ctx, cur)?;
    loop {
        if cur.eat(&Tok::Star) {
            acc = acc.mul(&power(ctx, cur)?)?;
        } else if matches!(cur.peek().tok, Tok::Slash) {
            let at = cur.next();
            let divisor = power(ctx, cur)?;
            let c = constant_value(&divisor).ok_or_else(|| Error::Parse {
                line: at.line,
                column: at.column,
                message: "division by a non-constant".into(),
            })?;
            let inv = c.inv_checked().ok_or(Error::Parse {
                line: at.line,
                column: at.column,
                message: "division by zero".into(),
            })?;
            acc = acc.scale(&inv);
        } else {
            return Ok(acc);
        }
    }
}

fn constant_value(p: &QPoly) -> Option<Rational> {
    if p.is_zero() {
        return Some(Rational::from_integer(0.into()));
    }
    if !p.is_constant() {
        return None;
    }
    p.terms().next().map(|(_, c)| c.clone())
}

fn power(ctx: &VariableContext, cur: &mut Cursor) -> Result<QPoly> {
    let base = atom(ctx, cur)?;
    if cur.eat(&Tok::Caret) {
        let e = match cur.peek().tok.clone() {
            Tok::Int(n) => {
                cur.next();
                u32::try_from(n).map_err(|_| cur.error_here("exponent too large"))?
            }
            other => return Err(cur.error_here(format!("expected exponent, found {}", describe(&other)))),
        };
        return base.pow(e);
    }
    Ok(base)
}

fn atom(ctx: &VariableContext, cur: &mut Cursor) -> Result<QPoly> {
    let t = cur.peek().clone();
    match t.tok {
        Tok::Int(n) => {
            cur.next();
            Ok(QPoly::constant(ctx, Rational::from_integer(n)))
        }
        Tok::Ident(name) => {
            let i = ctx.index_of(&name).ok_or_else(|| Error::Parse {
                line: t.line,
                column: t.column,
                message: format!("undeclared variable '{name}'"),
            })?;
            cur.next();
            Ok(QPoly::var(ctx, i))
        }
        Tok::LParen => {
            cur.next();
            let inner = expr(ctx, cur)?;
            cur.expect(&Tok::RParen, "')'")?;
            Ok(inner)
        }
        Tok::Minus => {
            cur.next();
            Ok(power(ctx, cur)?.neg())
        }
        other => Err(cur.error_here(format!("expected a term, found {}", describe(&other)))),
    }
}
