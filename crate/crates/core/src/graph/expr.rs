//! Small textual language for building graphs.
//!
//! ```text
//! expr   := join ('|' join)*            disjoint union
//! join   := unary ('+' unary)*          join
//! unary  := '~' unary | atom            complement
//! atom   := '(' expr ')'
//!         | ('K' | 'I') '[' expr ']' '(' int (',' int)* ')'   expansion
//!         | name                        C5, P4, K3, W5, Kite, Petersen, ...
//! ```

use super::{expand, make_named, ExpansionSpec, Graph, GraphError};

/// Parses and builds a graph expression such as `K1+C5` or `K[C5](2,1,1,1,1)`.
pub fn parse_expr(text: &str) -> Result<Graph, GraphError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let g = p.union()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> GraphError {
        GraphError::BadExpression { offset: self.pos, reason: reason.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), GraphError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn union(&mut self) -> Result<Graph, GraphError> {
        let mut g = self.join()?;
        while self.eat(b'|') {
            g = g.union(&self.join()?)?;
        }
        Ok(g)
    }

    fn join(&mut self) -> Result<Graph, GraphError> {
        let mut g = self.unary()?;
        while self.eat(b'+') {
            g = g.join(&self.unary()?)?;
        }
        Ok(g)
    }

    fn unary(&mut self) -> Result<Graph, GraphError> {
        if self.eat(b'~') {
            return Ok(self.unary()?.complement());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Graph, GraphError> {
        if self.eat(b'(') {
            let g = self.union()?;
            self.expect(b')')?;
            return Ok(g);
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a graph name"));
        }
        let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII");
        let upper = ident.to_ascii_uppercase();
        if (upper == "K" || upper == "I") && self.eat(b'[') {
            let base = self.union()?;
            self.expect(b']')?;
            self.expect(b'(')?;
            let mut sizes = vec![self.int()?];
            while self.eat(b',') {
                sizes.push(self.int()?);
            }
            self.expect(b')')?;
            let spec = if upper == "K" {
                ExpansionSpec::complete(base, &sizes)?
            } else {
                ExpansionSpec::independent(base, &sizes)?
            };
            return Ok(expand(&spec)?.graph);
        }
        named(ident).map_err(|e| match e {
            GraphError::UnknownName(_) => {
                GraphError::BadExpression { offset: start, reason: format!("unknown graph `{ident}`") }
            }
            other => other,
        })
    }

    fn int(&mut self) -> Result<usize, GraphError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ASCII")
            .parse()
            .map_err(|_| GraphError::BadExpression { offset: start, reason: "expected an integer".into() })
    }
}

// `C5` -> family C with size 5; `Kite` -> fixed graph.
fn named(ident: &str) -> Result<Graph, GraphError> {
    match make_named(ident, &[]) {
        Err(GraphError::UnknownName(_)) => {}
        other => return other,
    }
    let split = ident.find(|c: char| c.is_ascii_digit()).unwrap_or(ident.len());
    let (family, digits) = ident.split_at(split);
    if family.len() == 1 && !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
        let n = digits.parse().map_err(|_| GraphError::BadParam(format!("bad size in `{ident}`")))?;
        return make_named(family, &[n]);
    }
    Err(GraphError::UnknownName(ident.to_string()))
}
