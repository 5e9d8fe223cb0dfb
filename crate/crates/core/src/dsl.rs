//! Text format for monomial derivations.
//!
//! ```text
//! vars x, y, z, w;
//! d(x) = w^2;
//! d(y) = z*w;
//! d(z) = y^2;
//! d(w) = x*y;
//! ```
//!
//! An image is an optional signed rational coefficient followed by a
//! product of powers (`^1` may be omitted; `1` is the empty monomial).
//! `#` starts a comment. Every declared variable needs exactly one image.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::deriv::{Image, MonomialDerivation};
use crate::error::{Error, Result};
use crate::lexer::{describe, Cursor, Tok};
use crate::poly::{Monomial, VariableContext};

pub fn parse_spec(text: &str) -> Result<MonomialDerivation> {
    let mut cur = Cursor::new(text)?;
    match &cur.peek().tok {
        Tok::Ident(w) if w == "vars" => {
            cur.next();
        }
        other => return Err(cur.error_here(format!("expected 'vars', found {}", describe(other)))),
    }
    let mut names: Vec<String> = Vec::new();
    loop {
        let (name, tok) = cur.expect_ident()?;
        if names.contains(&name) {
            return Err(Error::Parse {
                line: tok.line,
                column: tok.column,
                message: format!("duplicate variable '{name}'"),
            });
        }
        names.push(name);
        if !cur.eat(&Tok::Comma) {
            break;
        }
    }
    cur.expect(&Tok::Semi, "';' after variable list")?;
    let ctx = VariableContext::new(names)?;

    let mut images: Vec<Option<Image>> = vec![None; ctx.len()];
    while cur.peek().tok != Tok::Eof {
        match &cur.peek().tok {
            Tok::Ident(w) if w == "d" => {
                cur.next();
            }
            other => return Err(cur.error_here(format!("expected 'd(<var>) = ...', found {}", describe(other)))),
        }
        cur.expect(&Tok::LParen, "'('")?;
        let (name, tok) = cur.expect_ident()?;
        let var = ctx.index_of(&name).ok_or_else(|| Error::Parse {
            line: tok.line,
            column: tok.column,
            message: format!("undeclared variable '{name}'"),
        })?;
        if images[var].is_some() {
            return Err(Error::Parse {
                line: tok.line,
                column: tok.column,
                message: format!("second image given for '{name}'"),
            });
        }
        cur.expect(&Tok::RParen, "')'")?;
        cur.expect(&Tok::Eq, "'='")?;
        images[var] = Some(parse_image(&mut cur, &ctx)?);
        match &cur.peek().tok {
            Tok::Semi => {
                cur.next();
            }
            Tok::Plus | Tok::Minus => {
                return Err(cur.error_here("non-monomial right-hand side: images must be a single term"))
            }
            other => return Err(cur.error_here(format!("expected ';', found {}", describe(other)))),
        }
    }
    let mut out = Vec::with_capacity(ctx.len());
    for (i, img) in images.into_iter().enumerate() {
        match img {
            Some(img) => out.push(img),
            None => {
                let t = cur.peek();
                return Err(Error::Parse {
                    line: t.line,
                    column: t.column,
                    message: format!("no image given for '{}'", ctx.name(i)),
                });
            }
        }
    }
    MonomialDerivation::new(&ctx, out)
}

/// [-] [coeff *] factor (* factor)*, where a factor is var[^int] or an
/// integer; a trailing `/ int` divides the coefficient.
fn parse_image(cur: &mut Cursor, ctx: &VariableContext) -> Result<Image> {
    let mut coeff = Rational::one();
    if cur.eat(&Tok::Minus) {
        coeff = -coeff;
    }
    let mut exps = vec![0u32; ctx.len()];
    loop {
        match cur.peek().tok.clone() {
            Tok::Int(n) => {
                cur.next();
                coeff *= Rational::from_integer(n);
            }
            Tok::Ident(name) => {
                let tok = cur.next();
                let var = ctx.index_of(&name).ok_or_else(|| Error::Parse {
                    line: tok.line,
                    column: tok.column,
                    message: format!("undeclared variable '{name}'"),
                })?;
                let mut e = 1u32;
                if cur.eat(&Tok::Caret) {
                    e = parse_exponent(cur)?;
                }
                exps[var] = exps[var]
                    .checked_add(e)
                    .ok_or(Error::Overflow("exponent"))?;
            }
            Tok::LParen => {
                return Err(cur.error_here("non-monomial right-hand side: parentheses are not allowed"))
            }
            other => return Err(cur.error_here(format!("expected a coefficient or variable, found {}", describe(&other)))),
        }
        if cur.eat(&Tok::Star) {
            continue;
        }
        if cur.peek().tok == Tok::Slash {
            cur.next();
            let t = cur.peek().clone();
            match t.tok {
                Tok::Int(n) if !n.is_zero() => {
                    cur.next();
                    coeff /= Rational::from_integer(n);
                }
                Tok::Int(_) => return Err(cur.error_here("division by zero")),
                other => return Err(cur.error_here(format!("expected an integer divisor, found {}", describe(&other)))),
            }
            if cur.eat(&Tok::Star) {
                continue;
            }
        }
        break;
    }
    if coeff.is_zero() {
        return Err(cur.error_here("image coefficient is zero"));
    }
    Ok(Image {
        coeff,
        exponents: Monomial::new(exps),
    })
}

fn parse_exponent(cur: &mut Cursor) -> Result<u32> {
    match cur.peek().tok.clone() {
        Tok::Int(n) => {
            if n.is_negative() || n > BigInt::from(u32::MAX) {
                return Err(cur.error_here("exponent out of range"));
            }
            cur.next();
            Ok(u32::try_from(&n).expect("range checked"))
        }
        other => Err(cur.error_here(format!("expected an exponent, found {}", describe(&other)))),
    }
}

/// Canonical text: one declaration line, then one image per line in
/// declaration order.
pub fn print_spec(d: &MonomialDerivation) -> String {
    let ctx = d.context();
    let mut out = format!("vars {};\n", ctx.names().join(", "));
    for (i, img) in d.images().iter().enumerate() {
        out.push_str(&format!("d({}) = {};\n", ctx.name(i), render_image(img, ctx)));
    }
    out
}

fn render_image(img: &Image, ctx: &VariableContext) -> String {
    let mono = img.exponents.render(ctx);
    if img.exponents.is_one() {
        return img.coeff.to_string();
    }
    if img.coeff.is_one() {
        mono
    } else if img.coeff == -Rational::one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", img.coeff)
    }
}

/// Exponent tables for `gen_generalized_cyclotomic`: one group per block,
/// groups separated by blank lines, one row of whitespace-separated
/// non-negative integers per variable. `#` starts a comment.
pub fn parse_tables(text: &str) -> Result<Vec<Vec<Vec<u32>>>> {
    let mut tables: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if !current.is_empty() {
                tables.push(std::mem::take(&mut current));
            }
            continue;
        }
        let mut row = Vec::new();
        for (col, word) in tokens_with_columns(raw.split('#').next().unwrap_or("")) {
            let v: u32 = word.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                column: col,
                message: format!("expected a non-negative integer, found '{word}'"),
            })?;
            row.push(v);
        }
        current.push(row);
    }
    if !current.is_empty() {
        tables.push(current);
    }
    Ok(tables)
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::four_variable_example;

    #[test]
    fn four_variable_example_parses() {
        let d = parse_spec("vars x,y,z,w; d(x)=w^2; d(y)=z*w; d(z)=y^2; d(w)=x*y;").unwrap();
        assert_eq!(d, four_variable_example());
    }

    #[test]
    fn toy_and_coefficients() {
        let d = parse_spec("vars x,y; d(x)=y; d(y)=x;").unwrap();
        assert_eq!(d.image_degree(), Some(1));
        let d = parse_spec("vars x,y; d(x) = -3/2*y^2; d(y) = 2;").unwrap();
        assert_eq!(d.images()[0].coeff, crate::arith::rat_frac(-3, 2));
        assert!(d.images()[1].exponents.is_one());
        assert_eq!(print_spec(&d), "vars x, y;\nd(x) = -3/2*y^2;\nd(y) = 2;\n");
    }

    fn err(text: &str) -> (usize, usize, String) {
        match parse_spec(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let (l, c, m) = err("vars x,y; d(x)=x+y; d(y)=x;");
        assert_eq!((l, c), (1, 17));
        assert!(m.contains("non-monomial"), "{m}");
        let (_, _, m) = err("vars x,x; d(x)=x;");
        assert!(m.contains("duplicate"));
        let (l, c, m) = err("vars x;\nd(x)=q;");
        assert_eq!((l, c), (2, 6));
        assert!(m.contains("undeclared"));
        let (_, _, m) = err("vars x,y; d(x)=y;");
        assert!(m.contains("no image"));
        let (_, _, m) = err("vars x; d(x)=x; d(x)=x;");
        assert!(m.contains("second image"));
        let (_, _, m) = err("vars x; d(x)=(x);");
        assert!(m.contains("non-monomial"));
    }

    #[test]
    fn round_trip() {
        let text = "# comment\nvars a , b;\n d(b)=a*a*b^0; d(a) = 1/3 * b;";
        let d = parse_spec(text).unwrap();
        let printed = print_spec(&d);
        assert_eq!(printed, "vars a, b;\nd(a) = 1/3*b;\nd(b) = a^2;\n");
        assert_eq!(parse_spec(&printed).unwrap(), d);
        assert_eq!(print_spec(&parse_spec(&printed).unwrap()), printed);
    }

    #[test]
    fn tables() {
        let t = parse_tables("# S1 -> S2\n0 2\n1 1\n\n2 0\n1 1 # S2 -> S1\n").unwrap();
        assert_eq!(t, vec![vec![vec![0, 2], vec![1, 1]], vec![vec![2, 0], vec![1, 1]]]);
        assert!(matches!(parse_tables("0 x"), Err(Error::Parse { line: 1, column: 3, .. })));
    }
}
