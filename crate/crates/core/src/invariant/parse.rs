use super::dga::{Form, FormalDGA};
use crate::error::{Error, Result};
use crate::rational::{parse_q, CQ};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '/') {
                i += 1;
            }
            out.push((st, Tok::Num(cs[st..i].iter().collect())));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push((st, Tok::Ident(cs[st..i].iter().collect())));
        } else if "+-*^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { line: 1, column: i + 1, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

/// Terms are products of rational numbers, `i`, `t^k` and generator names joined by `^`, `*` or spaces.
pub(crate) fn parse_form(a: &FormalDGA, s: &str) -> Result<Form> {
    let toks = tokenize(s)?;
    let err = |pos: usize, msg: &str| Error::Parse { line: 1, column: pos + 1, msg: msg.to_string() };
    let mut total = Form::zero();
    let mut k = 0;
    let mut sign = 1i64;
    let mut cur: Option<Form> = None;
    let mut dangling = false;
    while k < toks.len() {
        let (pos, tok) = &toks[k];
        match tok {
            Tok::Op('+') | Tok::Op('-') => {
                if dangling || (cur.is_none() && k > 0) {
                    return Err(err(*pos, "expected a factor"));
                }
                dangling = true;
                if let Some(f) = cur.take() {
                    total = total.add(&f.scale(&CQ::from_int(sign, 0)));
                }
                sign = if *tok == Tok::Op('-') { -1 } else { 1 };
                k += 1;
                continue;
            }
            Tok::Op('*') | Tok::Op('^') => {
                if cur.is_none() || dangling {
                    return Err(err(*pos, "operator without a left operand"));
                }
                dangling = true;
                k += 1;
                continue;
            }
            _ => {}
        }
        let factor = match tok {
            Tok::Num(n) => a.constant(CQ::real(parse_q(n).map_err(|_| err(*pos, "bad number"))?)),
            Tok::Op('(') => {
                let (p2, inner) = toks.get(k + 1).ok_or_else(|| err(*pos, "unclosed parenthesis"))?;
                let Tok::Num(n) = inner else { return Err(err(*p2, "expected a number")) };
                if toks.get(k + 2).map(|t| &t.1) != Some(&Tok::Op(')')) {
                    return Err(err(*p2, "expected `)`"));
                }
                k += 2;
                a.constant(CQ::real(parse_q(n).map_err(|_| err(*p2, "bad number"))?))
            }
            Tok::Ident(id) if id == "i" => a.constant(CQ::i()),
            Tok::Ident(id) if id == "t" => {
                let mut e = 1i32;
                if toks.get(k + 1).map(|t| &t.1) == Some(&Tok::Op('^')) {
                    let mut j = k + 2;
                    let mut s = 1;
                    if toks.get(j).map(|t| &t.1) == Some(&Tok::Op('-')) {
                        s = -1;
                        j += 1;
                    }
                    if let Some((_, Tok::Num(n))) = toks.get(j) {
                        e = s * n.parse::<i32>().map_err(|_| err(*pos, "bad exponent"))?;
                        k = j;
                    }
                }
                a.t_power(e)?
            }
            Tok::Ident(id) => a.gen(id)?,
            Tok::Op(c) => return Err(err(*pos, &format!("unexpected `{c}`"))),
        };
        dangling = false;
        cur = Some(match cur {
            Some(f) => a.mul(&f, &factor),
            None => factor,
        });
        k += 1;
    }
    if dangling {
        return Err(err(s.len(), "expression ends with an operator"));
    }
    if let Some(f) = cur {
        total = total.add(&f.scale(&CQ::from_int(sign, 0)));
    }
    Ok(a.reduce(&total))
}
