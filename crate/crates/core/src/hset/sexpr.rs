//! `(atom "a")` and `(set e1 e2 …)`.

use super::{GameError, HSet};

/// Canonical form: children in canonical order, single spaces.
pub fn to_sexpr<T: std::fmt::Display + Ord>(x: &HSet<T>) -> String {
    match x {
        HSet::Atom(t) => {
            let escaped = t.to_string().replace('\\', "\\\\").replace('"', "\\\"");
            format!("(atom \"{escaped}\")")
        }
        HSet::Node(c) => {
            let parts: Vec<String> = c.iter().map(to_sexpr).collect();
            format!("(set {})", parts.join(" "))
        }
    }
}

pub fn parse_sexpr(text: &str) -> Result<HSet<String>, GameError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let x = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(x)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, what: &str) -> GameError {
        GameError::Sexpr(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), GameError> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric())
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn string(&mut self) -> Result<String, GameError> {
        self.eat('"')?;
        let mut out = String::new();
        loop {
            match self.chars.get(self.pos).copied() {
                None => return Err(self.error("unterminated string")),
                Some('"') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some('\\') => {
                    let c = self.chars.get(self.pos + 1).copied();
                    out.push(c.ok_or_else(|| self.error("dangling escape"))?);
                    self.pos += 2;
                }
                Some(c) => {
                    out.push(c);
                    self.pos += 1;
                }
            }
        }
    }

    fn expr(&mut self) -> Result<HSet<String>, GameError> {
        self.eat('(')?;
        let x = match self.word().as_str() {
            "atom" => HSet::Atom(self.string()?),
            "set" => {
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    if self.chars.get(self.pos) == Some(&')') {
                        break;
                    }
                    children.push(self.expr()?);
                }
                HSet::node(children)?
            }
            other => return Err(self.error(&format!("unknown head {other:?}"))),
        };
        self.eat(')')?;
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let x = parse_sexpr(r#"(set (atom "b") (set (atom "a"))  (atom "a") (atom "b"))"#).unwrap();
        assert_eq!(
            to_sexpr(&x),
            r#"(set (atom "a") (atom "b") (set (atom "a")))"#
        );
        assert_eq!(parse_sexpr(&to_sexpr(&x)).unwrap(), x);
        let q = parse_sexpr(r#"(atom "say \"hi\"")"#).unwrap();
        assert_eq!(parse_sexpr(&to_sexpr(&q)).unwrap(), q);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_sexpr("(set)"), Err(GameError::EmptyNode));
        assert!(parse_sexpr("(atom a)").is_err());
        assert!(parse_sexpr("(bag (atom \"a\"))").is_err());
        assert!(parse_sexpr("(atom \"a\") x").is_err());
    }
}
